#pragma once

#include <groupprox/common.hpp>

#include <vector>

namespace groupprox {

/// Non-overlapping partition of {0, ..., l-1} into groups.
class GroupPartition {
 public:
  GroupPartition() = default;
  explicit GroupPartition(std::vector<std::vector<Index>> groups);

  /// r contiguous groups of size l / r; r must divide l.
  static GroupPartition equal(Index l, Index r);
  static GroupPartition single(Index l);

  const std::vector<std::vector<Index>>& groups() const { return groups_; }
  Index group_count() const { return static_cast<Index>(groups_.size()); }
  /// Total number of indices covered.
  Index dimension() const { return dimension_; }

  /// Throws InvalidArgument unless the groups are pairwise disjoint, nonempty
  /// and cover exactly {0, ..., l-1}.
  void validate(Index l) const;

  Vector gather(const Vector& x, Index group) const;
  void scatter(const Vector& block, Index group, Vector& x) const;

 private:
  std::vector<std::vector<Index>> groups_;
  Index dimension_ = 0;
};

}  // namespace groupprox
