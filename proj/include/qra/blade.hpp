#pragma once

#include <cstdint>
#include <string>

#include "qra/algebra.hpp"

namespace ga {

// A basis blade is an N-bit set: bit i set <=> generator i+1 present.
// The empty mask is the scalar blade.
using BladeMask = std::uint32_t;

inline int grade(BladeMask m) { return __builtin_popcount(m); }

// Sign (+1/-1) from the transpositions needed to interleave the word of `a`
// with the word of `b` into ascending generator order. Metric not applied.
int reorder_sign(BladeMask a, BladeMask b);

struct BladeProduct {
  BladeMask mask;
  double sign;  // +1 or -1, includes squares of annihilated generators
};

// Geometric product of two basis blades: XOR of masks, reordering sign times
// the squares of the repeated (annihilated) generators.
BladeProduct blade_product(BladeMask a, BladeMask b, const Algebra& alg);

// Grade-major, lexicographic-minor rank of a blade among all 2^N blades.
// Scalar -> 0, then the N grade-1 blades in generator order, and so on.
std::uint64_t canonical_index(BladeMask m, int dimension);

// Inverse of canonical_index.
BladeMask blade_from_index(std::uint64_t index, int dimension);

// Display form: scalar -> "1.0", grade 1 -> the generator name, grade 2 ->
// "a ^ b", higher grades right-nested: "a ^ (b ^ c)".
std::string format_blade(BladeMask m, const Algebra& alg);

}  // namespace ga
