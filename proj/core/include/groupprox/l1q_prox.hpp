#pragma once

#include <groupprox/common.hpp>
#include <groupprox/scalar_prox.hpp>

#include <optional>
#include <vector>

namespace groupprox {

/// Signed permutation P with (P y)_k = signs[k] * y[order[k]].
class SignedPermutation {
 public:
  SignedPermutation() = default;
  SignedPermutation(std::vector<Index> order, std::vector<double> signs);

  static SignedPermutation identity(Index n);

  Index size() const { return static_cast<Index>(order_.size()); }
  const std::vector<Index>& order() const { return order_; }
  const std::vector<double>& signs() const { return signs_; }

  Vector apply(const Vector& y) const;
  Vector apply_inverse(const Vector& z) const;

 private:
  std::vector<Index> order_;
  std::vector<double> signs_;
};

/// A vector reduced to nonincreasing absolute values, z = P y.
struct SortedAbsView {
  Vector z;
  SignedPermutation perm;
};

/// Stable descending sort of |y_i|; zero entries get sign +1.
SortedAbsView sort_signed(const Vector& y);

/// The unique stationary point of support size s, in the sorted frame.
struct SupportCandidate {
  int s = 0;
  double kyfan = 0.0;  ///< sum of the s largest |y_i|
  double a = 0.0;      ///< l1 norm of u, largest stationary root
  double c = 0.0;      ///< shrinkage applied to the leading s entries
  Vector u;
  double objective = 0.0;
};

/// Returns the support-s stationary point when it exists, i.e. when
/// kyfan >= t_tilde(s), z_s > c_s and z_{s+1} <= c_s (z_{n+1} := 0).
std::optional<SupportCandidate> candidate_for_support(const SortedAbsView& view,
                                                      int s,
                                                      const ScalarPenalty& pen);

/// One row of the support enumeration, including rejected sizes.
struct SupportDiagnostic {
  int s = 0;
  double kyfan = 0.0;
  double t_tilde = 0.0;
  std::optional<double> a;
  std::optional<double> c;
  bool feasible = false;
  std::optional<double> objective;
};

std::vector<SupportDiagnostic> support_diagnostics(const SortedAbsView& view,
                                                   const ScalarPenalty& pen);

/// J_y(u) = nu ||u||_1^q + ||u - y||^2 / 2.
double l1q_objective(const Vector& y, const Vector& u, const ScalarPenalty& pen);

/// Set of global minimizers. Ordering: the zero vector first when present,
/// then nonzero minimizers by descending support size.
struct ProxSet {
  std::vector<Vector> minimizers;
  double objective = 0.0;

  std::size_t size() const { return minimizers.size(); }
  bool contains_zero() const;
  /// True iff the set is exactly {0}.
  bool is_zero() const;
  /// Single minimizer for iterative solvers: largest support wins, so a
  /// 0-versus-nonzero tie resolves to the nonzero point.
  const Vector& select_for_solver() const;
};

/// Proximal set of nu ||.||_1^q for q in [0, 1].
ProxSet prox_l1q(const Vector& y, const ScalarPenalty& pen);

}  // namespace groupprox
