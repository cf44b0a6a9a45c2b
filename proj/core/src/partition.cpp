#include <groupprox/partition.hpp>

#include <string>

namespace groupprox {

GroupPartition::GroupPartition(std::vector<std::vector<Index>> groups)
    : groups_(std::move(groups)) {
  for (const auto& g : groups_) dimension_ += static_cast<Index>(g.size());
}

GroupPartition GroupPartition::equal(Index l, Index r) {
  if (l < 1 || r < 1 || l % r != 0)
    throw InvalidArgument("equal partition needs r dividing l (l=" + std::to_string(l) +
                          ", r=" + std::to_string(r) + ")");
  const Index size = l / r;
  std::vector<std::vector<Index>> groups(static_cast<std::size_t>(r));
  for (Index g = 0; g < r; ++g)
    for (Index k = 0; k < size; ++k)
      groups[static_cast<std::size_t>(g)].push_back(g * size + k);
  return GroupPartition(std::move(groups));
}

GroupPartition GroupPartition::single(Index l) { return equal(l, 1); }

void GroupPartition::validate(Index l) const {
  std::vector<bool> seen(static_cast<std::size_t>(l), false);
  Index covered = 0;
  for (std::size_t g = 0; g < groups_.size(); ++g) {
    if (groups_[g].empty())
      throw InvalidArgument("partition: group " + std::to_string(g) + " is empty");
    for (Index i : groups_[g]) {
      if (i < 0 || i >= l)
        throw InvalidArgument("partition: index " + std::to_string(i) +
                              " outside [0, " + std::to_string(l) + ")");
      if (seen[static_cast<std::size_t>(i)])
        throw InvalidArgument("partition: index " + std::to_string(i) +
                              " appears in more than one group");
      seen[static_cast<std::size_t>(i)] = true;
      ++covered;
    }
  }
  if (covered != l)
    throw InvalidArgument("partition covers " + std::to_string(covered) + " of " +
                          std::to_string(l) + " indices");
}

Vector GroupPartition::gather(const Vector& x, Index group) const {
  const auto& idx = groups_[static_cast<std::size_t>(group)];
  Vector out(static_cast<Index>(idx.size()));
  for (std::size_t k = 0; k < idx.size(); ++k) out[static_cast<Index>(k)] = x[idx[k]];
  return out;
}

void GroupPartition::scatter(const Vector& block, Index group, Vector& x) const {
  const auto& idx = groups_[static_cast<std::size_t>(group)];
  for (std::size_t k = 0; k < idx.size(); ++k) x[idx[k]] = block[static_cast<Index>(k)];
}

}  // namespace groupprox
