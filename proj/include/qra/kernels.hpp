#pragma once

#include "qra/multivector.hpp"

namespace ga {

// Product kernels behind geometric_product / outer_product. Both produce
// bit-identical coefficients: every output blade accumulates its
// contributions in ascending order of the left operand's blade mask, so the
// parallel kernel is deterministic regardless of thread count.
//
// `outer` selects the outer product (blade pairs with intersecting masks
// contribute nothing) instead of the geometric product.

// Reference implementation: iterates the sparse term lists directly.
Multivector product_serial(const Multivector& x, const Multivector& y, bool outer);

// Dense kernel: scatters both operands into 2^N arrays and computes each
// output coefficient independently, OpenMP-parallel over output blades.
// Requires dimension <= kDenseKernelMaxDim.
Multivector product_dense_parallel(const Multivector& x, const Multivector& y, bool outer);

inline constexpr int kDenseKernelMaxDim = 16;

// Picks the dense parallel kernel when the pair count is large enough that
// the 4^N dense sweep beats the sparse loop; serial otherwise.
Multivector product_auto(const Multivector& x, const Multivector& y, bool outer);

}  // namespace ga
