#include <doctest.h>

#include <set>

#include "oracle_helpers.hpp"
#include "qra/blade.hpp"
#include "qra/format.hpp"

using namespace ga;
using testing_oracles::word_product;

namespace {

// The 6-generator register algebra e1..e4, er1, er2 used by the published
// coordinate tables.
AlgebraPtr register6() {
  return make_algebra({1, 1, 1, 1, 1, 1}, {"e1", "e2", "e3", "e4", "er1", "er2"});
}

BladeMask mask_of(std::initializer_list<int> generators) {
  BladeMask m = 0;
  for (int g : generators) m |= BladeMask{1} << (g - 1);
  return m;
}

}  // namespace

TEST_CASE("blade product agrees with the word-rewriting oracle") {
  for (const AlgebraPtr& alg :
       {testing_oracles::euclidean_algebra(6), testing_oracles::mixed_algebra(6),
        make_algebra({1, -1}, {"e1", "e2"})}) {
    const BladeMask count = static_cast<BladeMask>(alg->blade_count());
    for (BladeMask a = 0; a < count; ++a) {
      for (BladeMask b = 0; b < count; ++b) {
        const auto expected = word_product(a, b, *alg);
        const auto got = blade_product(a, b, *alg);
        CAPTURE(a);
        CAPTURE(b);
        CHECK(got.mask == expected.mask);
        CHECK(got.sign == expected.sign);
      }
    }
  }
}

TEST_CASE("canonical index reproduces the published coordinates") {
  const AlgebraPtr alg = register6();
  const int dim = alg->dimension();

  CHECK(canonical_index(0, dim) == 0);
  CHECK(canonical_index(mask_of({1}), dim) == 1);
  CHECK(canonical_index(mask_of({2}), dim) == 2);
  CHECK(canonical_index(mask_of({1, 2}), dim) == 7);
  CHECK(canonical_index(mask_of({3, 4}), dim) == 16);
  CHECK(canonical_index(mask_of({1, 3, 4}), dim) == 26);
  CHECK(canonical_index(mask_of({2, 3, 4}), dim) == 32);
  CHECK(canonical_index(mask_of({3, 5, 6}), dim) == 40);
  CHECK(canonical_index(mask_of({4, 5, 6}), dim) == 41);
  CHECK(canonical_index(mask_of({1, 2, 3, 4}), dim) == 42);
  CHECK(canonical_index(mask_of({1, 3, 5, 6}), dim) == 50);
  CHECK(canonical_index(mask_of({1, 4, 5, 6}), dim) == 51);
  CHECK(canonical_index(mask_of({2, 3, 5, 6}), dim) == 54);
  CHECK(canonical_index(mask_of({2, 4, 5, 6}), dim) == 55);
  CHECK(canonical_index(mask_of({1, 2, 3, 5, 6}), dim) == 59);
  CHECK(canonical_index(mask_of({1, 2, 4, 5, 6}), dim) == 60);
}

TEST_CASE("canonical index is a bijection onto 0..2^N-1") {
  for (int dim = 1; dim <= 8; ++dim) {
    std::set<std::uint64_t> seen;
    const auto count = std::uint64_t{1} << dim;
    for (BladeMask m = 0; m < count; ++m) {
      const std::uint64_t idx = canonical_index(m, dim);
      CHECK(idx < count);
      CHECK(seen.insert(idx).second);
      CHECK(blade_from_index(idx, dim) == m);
    }
  }
}

TEST_CASE("grade-major ordering: lower grades come first") {
  const int dim = 6;
  for (BladeMask a = 0; a < 64; ++a) {
    for (BladeMask b = 0; b < 64; ++b) {
      if (grade(a) < grade(b)) {
        CHECK(canonical_index(a, dim) < canonical_index(b, dim));
      }
    }
  }
}

TEST_CASE("blade formatting matches the output comment syntax") {
  const AlgebraPtr alg = register6();
  CHECK(format_blade(0, *alg) == "1.0");
  CHECK(format_blade(mask_of({2}), *alg) == "e2");
  CHECK(format_blade(mask_of({1, 2}), *alg) == "e1 ^ e2");
  CHECK(format_blade(mask_of({1, 3, 4}), *alg) == "e1 ^ (e3 ^ e4)");
  CHECK(format_blade(mask_of({4, 5, 6}), *alg) == "e4 ^ (er1 ^ er2)");
  CHECK(format_blade(mask_of({1, 2, 3, 4}), *alg) == "e1 ^ (e2 ^ (e3 ^ e4))");
  CHECK(format_blade(mask_of({1, 2, 3, 5, 6}), *alg) ==
        "e1 ^ (e2 ^ (e3 ^ (er1 ^ er2)))");
}

TEST_CASE("value formatting keeps one fractional digit") {
  CHECK(format_value(0.25) == "0.25");
  CHECK(format_value(-0.25) == "-0.25");
  CHECK(format_value(0.5) == "0.5");
  CHECK(format_value(0.75) == "0.75");
  CHECK(format_value(1.0) == "1.0");
  CHECK(format_value(-1.0) == "-1.0");
  CHECK(format_value(2.0) == "2.0");
  CHECK(format_value(0.0) == "0.0");
}
