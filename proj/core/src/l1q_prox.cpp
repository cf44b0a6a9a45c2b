#include <groupprox/l1q_prox.hpp>

#include <algorithm>
#include <cmath>
#include <numeric>

namespace groupprox {

SignedPermutation::SignedPermutation(std::vector<Index> order,
                                     std::vector<double> signs)
    : order_(std::move(order)), signs_(std::move(signs)) {
  if (order_.size() != signs_.size())
    throw DimensionMismatch("signed permutation: order and signs differ in size");
  std::vector<bool> seen(order_.size(), false);
  for (Index i : order_) {
    if (i < 0 || i >= size() || seen[static_cast<std::size_t>(i)])
      throw InvalidArgument("signed permutation: order is not a permutation");
    seen[static_cast<std::size_t>(i)] = true;
  }
  for (double s : signs_)
    if (s != 1.0 && s != -1.0)
      throw InvalidArgument("signed permutation: signs must be +1 or -1");
}

SignedPermutation SignedPermutation::identity(Index n) {
  std::vector<Index> order(static_cast<std::size_t>(n));
  std::iota(order.begin(), order.end(), Index{0});
  return {std::move(order), std::vector<double>(static_cast<std::size_t>(n), 1.0)};
}

Vector SignedPermutation::apply(const Vector& y) const {
  if (y.size() != size()) throw DimensionMismatch("signed permutation: size mismatch");
  Vector out(size());
  for (Index k = 0; k < size(); ++k)
    out[k] = signs_[static_cast<std::size_t>(k)] * y[order_[static_cast<std::size_t>(k)]];
  return out;
}

Vector SignedPermutation::apply_inverse(const Vector& z) const {
  if (z.size() != size()) throw DimensionMismatch("signed permutation: size mismatch");
  Vector out(size());
  for (Index k = 0; k < size(); ++k)
    out[order_[static_cast<std::size_t>(k)]] = signs_[static_cast<std::size_t>(k)] * z[k] + 0.0;
  return out;
}

SortedAbsView sort_signed(const Vector& y) {
  const auto n = static_cast<std::size_t>(y.size());
  std::vector<Index> order(n);
  std::iota(order.begin(), order.end(), Index{0});
  std::stable_sort(order.begin(), order.end(), [&](Index a, Index b) {
    return std::abs(y[a]) > std::abs(y[b]);
  });
  std::vector<double> signs(n);
  Vector z(y.size());
  for (std::size_t k = 0; k < n; ++k) {
    const double v = y[order[k]];
    signs[k] = v < 0.0 ? -1.0 : 1.0;
    z[static_cast<Index>(k)] = std::abs(v);
  }
  return {std::move(z), SignedPermutation(std::move(order), std::move(signs))};
}

double l1q_objective(const Vector& y, const Vector& u, const ScalarPenalty& pen) {
  if (y.size() != u.size()) throw DimensionMismatch("l1q_objective: size mismatch");
  return pen.value(u.lpNorm<1>()) + 0.5 * (u - y).squaredNorm();
}

namespace {

struct RootedSupport {
  double kyfan;
  double floor;
  std::optional<double> a;
  std::optional<double> c;
  bool feasible = false;
};

RootedSupport solve_support(const Vector& z, int s, const ScalarPenalty& pen) {
  const Index n = z.size();
  RootedSupport out{z.head(s).sum(), t_tilde(pen, s), std::nullopt, std::nullopt};
  if (out.kyfan < out.floor * (1.0 - kThresholdRelTol)) return out;
  const double a = largest_stationary_root(pen, s, out.kyfan);
  const double c = pen.nu() * pen.q() * std::pow(a, pen.q() - 1.0);
  out.a = a;
  out.c = c;
  // z_{n+1} := 0 keeps the trailing test uniform at s = n.
  const double next = s < n ? z[s] : 0.0;
  const double slack = kThresholdRelTol * (1.0 + c);
  out.feasible = z[s - 1] > c + slack && next <= c + slack;
  return out;
}

}  // namespace

std::optional<SupportCandidate> candidate_for_support(const SortedAbsView& view,
                                                      int s,
                                                      const ScalarPenalty& pen) {
  const Index n = view.z.size();
  if (s < 1 || s > n) throw InvalidArgument("support size out of range");
  if (!pen.fractional())
    throw InvalidArgument("candidate_for_support requires 0 < q < 1");
  const RootedSupport r = solve_support(view.z, s, pen);
  if (!r.feasible) return std::nullopt;

  SupportCandidate cand;
  cand.s = s;
  cand.kyfan = r.kyfan;
  cand.a = *r.a;
  cand.c = *r.c;
  cand.u = Vector::Zero(n);
  cand.u.head(s) = view.z.head(s).array() - cand.c;
  cand.objective = l1q_objective(view.z, cand.u, pen);
  return cand;
}

std::vector<SupportDiagnostic> support_diagnostics(const SortedAbsView& view,
                                                   const ScalarPenalty& pen) {
  std::vector<SupportDiagnostic> rows;
  if (!pen.fractional()) return rows;
  const Index n = view.z.size();
  for (int s = 1; s <= n; ++s) {
    const RootedSupport r = solve_support(view.z, s, pen);
    SupportDiagnostic row{s, r.kyfan, r.floor, r.a, r.c, r.feasible, std::nullopt};
    if (r.feasible) row.objective = candidate_for_support(view, s, pen)->objective;
    rows.push_back(row);
  }
  return rows;
}

bool ProxSet::contains_zero() const {
  return std::any_of(minimizers.begin(), minimizers.end(),
                     [](const Vector& m) { return m.isZero(0.0); });
}

bool ProxSet::is_zero() const {
  return minimizers.size() == 1 && minimizers.front().isZero(0.0);
}

const Vector& ProxSet::select_for_solver() const {
  if (minimizers.empty()) throw InvalidArgument("empty prox set");
  auto nnz = [](const Vector& v) { return (v.array() != 0.0).count(); };
  const Vector* best = &minimizers.front();
  for (const Vector& m : minimizers)
    if (nnz(m) > nnz(*best)) best = &m;
  return *best;
}

namespace {

ProxSet hard_threshold_block(const Vector& y, const ScalarPenalty& pen) {
  const double zero_obj = 0.5 * y.squaredNorm();
  const double keep_obj = pen.nu();
  const Vector zero = Vector::Zero(y.size());
  if (objectives_tie(zero_obj, keep_obj, zero_obj))
    return {{zero, y}, std::min(zero_obj, keep_obj)};
  if (keep_obj < zero_obj) return {{y}, keep_obj};
  return {{zero}, zero_obj};
}

}  // namespace

ProxSet prox_l1q(const Vector& y, const ScalarPenalty& pen) {
  const Index n = y.size();
  const Vector zero = Vector::Zero(n);
  if (y.isZero(0.0)) return {{zero}, 0.0};

  if (pen.q() == 1.0) {
    Vector u = y.array().sign() * (y.array().abs() - pen.nu()).max(0.0);
    return {{u}, l1q_objective(y, u, pen)};
  }
  if (pen.q() == 0.0) return hard_threshold_block(y, pen);

  const double zero_obj = 0.5 * y.squaredNorm();
  // Below this l1 mass no support size admits a stationary point.
  if (y.lpNorm<1>() <= t_tilde(pen, 1)) return {{zero}, zero_obj};

  const SortedAbsView view = sort_signed(y);
  struct Entry {
    Vector u;
    double objective;
  };
  std::vector<Entry> entries;
  // Zero is only a competitor while every |y_i| stays within c_{nu,q}.
  if (view.z[0] <= threshold_c(pen) * (1.0 + kThresholdRelTol))
    entries.push_back({zero, zero_obj});
  for (int s = static_cast<int>(n); s >= 1; --s)
    if (auto cand = candidate_for_support(view, s, pen))
      entries.push_back({std::move(cand->u), cand->objective});
  if (entries.empty()) entries.push_back({zero, zero_obj});

  double best = entries.front().objective;
  for (const Entry& e : entries) best = std::min(best, e.objective);

  ProxSet out;
  out.objective = best;
  for (Entry& e : entries)
    if (objectives_tie(e.objective, best, best))
      out.minimizers.push_back(view.perm.apply_inverse(e.u));
  return out;
}

}  // namespace groupprox
