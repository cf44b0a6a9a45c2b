#include <groupprox/block_prox.hpp>

namespace groupprox {

ProxSet prox_block(const Vector& y, const ScalarPenalty& pen, BlockNorm p) {
  return p == BlockNorm::l1 ? prox_l1q(y, pen) : prox_l2q(y, pen);
}

double block_objective(const Vector& y, const Vector& u, const ScalarPenalty& pen,
                       BlockNorm p) {
  return p == BlockNorm::l1 ? l1q_objective(y, u, pen) : l2q_objective(y, u, pen);
}

double block_norm(const Vector& v, BlockNorm p) {
  return p == BlockNorm::l1 ? v.lpNorm<1>() : v.norm();
}

BlockNorm block_norm_from_int(int p) {
  if (p == 1) return BlockNorm::l1;
  if (p == 2) return BlockNorm::l2;
  throw InvalidArgument("p must be 1 or 2");
}

}  // namespace groupprox
