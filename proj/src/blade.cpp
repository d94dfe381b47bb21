#include "qra/blade.hpp"

#include <stdexcept>

namespace ga {
namespace {

// C(n,k) table sized for kMaxDimension; values fit in uint64 comfortably.
struct BinomialTable {
  std::uint64_t c[Algebra::kMaxDimension + 1][Algebra::kMaxDimension + 1] = {};
  constexpr BinomialTable() {
    for (int n = 0; n <= Algebra::kMaxDimension; ++n) {
      c[n][0] = 1;
      for (int k = 1; k <= n; ++k) {
        c[n][k] = c[n - 1][k - 1] + (k <= n - 1 ? c[n - 1][k] : 0);
      }
    }
  }
};

constexpr BinomialTable kBinomial{};

std::uint64_t choose(int n, int k) {
  if (k < 0 || k > n) return 0;
  return kBinomial.c[n][k];
}

}  // namespace

int reorder_sign(BladeMask a, BladeMask b) {
  // Counts pairs (j in a, i in b) with j > i: each is one transposition when
  // the concatenated word a++b is bubble-sorted into ascending order.
  int swaps = 0;
  a >>= 1;
  while (a != 0) {
    swaps += __builtin_popcount(a & b);
    a >>= 1;
  }
  return (swaps & 1) ? -1 : 1;
}

BladeProduct blade_product(BladeMask a, BladeMask b, const Algebra& alg) {
  double sign = reorder_sign(a, b);
  BladeMask common = a & b;
  while (common != 0) {
    int i = __builtin_ctz(common);
    sign *= alg.square(i);
    common &= common - 1;
  }
  return {a ^ b, sign};
}

std::uint64_t canonical_index(BladeMask m, int dimension) {
  const int k = grade(m);
  std::uint64_t index = 0;
  for (int g = 0; g < k; ++g) index += choose(dimension, g);
  // Lexicographic rank of the sorted generator tuple among all k-subsets.
  int prev = 0;  // last placed generator, 1-based
  int remaining = k;
  BladeMask rest = m;
  while (rest != 0) {
    const int gen = __builtin_ctz(rest) + 1;
    for (int cand = prev + 1; cand < gen; ++cand) {
      index += choose(dimension - cand, remaining - 1);
    }
    prev = gen;
    --remaining;
    rest &= rest - 1;
  }
  return index;
}

BladeMask blade_from_index(std::uint64_t index, int dimension) {
  int k = 0;
  while (k <= dimension && index >= choose(dimension, k)) {
    index -= choose(dimension, k);
    ++k;
  }
  if (k > dimension) {
    throw std::invalid_argument("blade index out of range for dimension");
  }
  BladeMask m = 0;
  int prev = 0;
  for (int slot = 0; slot < k; ++slot) {
    int gen = prev + 1;
    while (true) {
      const std::uint64_t below = choose(dimension - gen, k - slot - 1);
      if (index < below) break;
      index -= below;
      ++gen;
    }
    m |= BladeMask{1} << (gen - 1);
    prev = gen;
  }
  return m;
}

std::string format_blade(BladeMask m, const Algebra& alg) {
  if (m == 0) return "1.0";
  std::string out;
  int open = 0;
  int left = grade(m);
  BladeMask rest = m;
  while (rest != 0) {
    const int i = __builtin_ctz(rest);
    rest &= rest - 1;
    --left;
    out += alg.name(i);
    if (left > 0) {
      out += " ^ ";
      if (left > 1) {  // grade-2 tail stays bare, deeper tails get parens
        out += '(';
        ++open;
      }
    }
  }
  out.append(static_cast<std::size_t>(open), ')');
  return out;
}

}  // namespace ga
