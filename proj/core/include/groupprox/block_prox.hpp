#pragma once

#include <groupprox/l1q_prox.hpp>
#include <groupprox/l2q_prox.hpp>

namespace groupprox {

/// Dispatches to prox_l1q or prox_l2q.
ProxSet prox_block(const Vector& y, const ScalarPenalty& pen, BlockNorm p);

double block_objective(const Vector& y, const Vector& u, const ScalarPenalty& pen,
                       BlockNorm p);

/// ||v||_p for p in {1, 2}.
double block_norm(const Vector& v, BlockNorm p);

BlockNorm block_norm_from_int(int p);

}  // namespace groupprox
