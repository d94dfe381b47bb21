#include "qra/kernels.hpp"

#include <stdexcept>
#include <unordered_map>

namespace ga {
namespace {

// Below this dimension a dense scratch accumulator is cheap; above it the
// serial kernel falls back to hashed accumulation.
constexpr int kScratchMaxDim = 20;

Multivector collect_dense(const AlgebraPtr& alg, const std::vector<double>& acc) {
  std::vector<Multivector::Term> out;
  for (std::size_t m = 0; m < acc.size(); ++m) {
    if (acc[m] != 0.0) out.push_back({static_cast<BladeMask>(m), acc[m]});
  }
  return Multivector::from_terms(alg, std::move(out));
}

}  // namespace

Multivector product_serial(const Multivector& x, const Multivector& y, bool outer) {
  const AlgebraPtr& alg = x.algebra();
  const int dim = alg->dimension();

  if (dim <= kScratchMaxDim) {
    std::vector<double> acc(alg->blade_count(), 0.0);
    for (const auto& tx : x.terms()) {
      for (const auto& ty : y.terms()) {
        if (outer && (tx.mask & ty.mask) != 0) continue;
        const BladeProduct p = blade_product(tx.mask, ty.mask, *alg);
        acc[p.mask] += p.sign * tx.coeff * ty.coeff;
      }
    }
    return collect_dense(alg, acc);
  }

  std::unordered_map<BladeMask, double> acc;
  for (const auto& tx : x.terms()) {
    for (const auto& ty : y.terms()) {
      if (outer && (tx.mask & ty.mask) != 0) continue;
      const BladeProduct p = blade_product(tx.mask, ty.mask, *alg);
      acc[p.mask] += p.sign * tx.coeff * ty.coeff;
    }
  }
  std::vector<Multivector::Term> out;
  out.reserve(acc.size());
  for (const auto& [mask, coeff] : acc) {
    if (coeff != 0.0) out.push_back({mask, coeff});
  }
  return Multivector::from_terms(alg, std::move(out));
}

Multivector product_dense_parallel(const Multivector& x, const Multivector& y, bool outer) {
  const AlgebraPtr& alg = x.algebra();
  const int dim = alg->dimension();
  if (dim > kDenseKernelMaxDim) {
    throw std::invalid_argument("dense product kernel limited to dimension 16");
  }
  const std::size_t size = alg->blade_count();

  std::vector<double> xd(size, 0.0), yd(size, 0.0);
  for (const auto& t : x.terms()) xd[t.mask] = t.coeff;
  for (const auto& t : y.terms()) yd[t.mask] = t.coeff;

  std::vector<double> acc(size, 0.0);
  const auto n = static_cast<std::int64_t>(size);
#pragma omp parallel for schedule(static)
  for (std::int64_t c = 0; c < n; ++c) {
    const auto cm = static_cast<BladeMask>(c);
    double sum = 0.0;
    for (std::size_t a = 0; a < size; ++a) {
      const auto am = static_cast<BladeMask>(a);
      const BladeMask bm = am ^ cm;
      if (outer && (am & bm) != 0) continue;
      const double xa = xd[am];
      if (xa == 0.0) continue;
      const double yb = yd[bm];
      if (yb == 0.0) continue;
      const BladeProduct p = blade_product(am, bm, *alg);
      sum += p.sign * xa * yb;
    }
    acc[static_cast<std::size_t>(c)] = sum;
  }
  return collect_dense(alg, acc);
}

Multivector product_auto(const Multivector& x, const Multivector& y, bool outer) {
  const int dim = x.algebra()->dimension();
  const std::uint64_t pairs =
      static_cast<std::uint64_t>(x.term_count()) * y.term_count();
  if (dim <= kDenseKernelMaxDim && dim >= 9 &&
      pairs >= (std::uint64_t{1} << (2 * dim)) / 8) {
    return product_dense_parallel(x, y, outer);
  }
  return product_serial(x, y, outer);
}

}  // namespace ga
