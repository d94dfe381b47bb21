#include "qra/multivector.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "qra/kernels.hpp"

namespace ga {
namespace {

void require_same_algebra(const Multivector& x, const Multivector& y) {
  if (!same_algebra(x.algebra(), y.algebra())) {
    throw std::invalid_argument("operands belong to different algebras");
  }
}

}  // namespace

Multivector Multivector::zero(AlgebraPtr alg) { return {std::move(alg), {}}; }

Multivector Multivector::scalar(AlgebraPtr alg, double value) {
  return basis_blade(std::move(alg), 0, value);
}

Multivector Multivector::basis_blade(AlgebraPtr alg, BladeMask mask, double coeff) {
  if (mask >= (BladeMask{1} << alg->dimension())) {
    throw std::invalid_argument("blade mask out of range for algebra");
  }
  if (coeff == 0.0) return zero(std::move(alg));
  return {std::move(alg), {{mask, coeff}}};
}

Multivector Multivector::generator(AlgebraPtr alg, int index) {
  if (index < 1 || index > alg->dimension()) {
    throw std::invalid_argument("generator index out of range");
  }
  return basis_blade(std::move(alg), BladeMask{1} << (index - 1));
}

Multivector Multivector::from_terms(AlgebraPtr alg, std::vector<Term> terms) {
  const BladeMask limit = BladeMask{1} << alg->dimension();
  for (const Term& t : terms) {
    if (t.mask >= limit) {
      throw std::invalid_argument("blade mask out of range for algebra");
    }
  }
  std::stable_sort(terms.begin(), terms.end(),
                   [](const Term& a, const Term& b) { return a.mask < b.mask; });
  std::vector<Term> merged;
  merged.reserve(terms.size());
  for (const Term& t : terms) {
    if (!merged.empty() && merged.back().mask == t.mask) {
      merged.back().coeff += t.coeff;
    } else {
      merged.push_back(t);
    }
  }
  std::erase_if(merged, [](const Term& t) { return t.coeff == 0.0; });
  return {std::move(alg), std::move(merged)};
}

double Multivector::coefficient(BladeMask mask) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), mask,
                             [](const Term& t, BladeMask m) { return t.mask < m; });
  if (it != terms_.end() && it->mask == mask) return it->coeff;
  return 0.0;
}

Multivector geometric_product(const Multivector& x, const Multivector& y) {
  require_same_algebra(x, y);
  return product_auto(x, y, /*outer=*/false);
}

Multivector outer_product(const Multivector& x, const Multivector& y) {
  require_same_algebra(x, y);
  return product_auto(x, y, /*outer=*/true);
}

Multivector linear_combine(double cx, const Multivector& x, double cy,
                           const Multivector& y) {
  require_same_algebra(x, y);
  std::vector<Multivector::Term> out;
  out.reserve(x.term_count() + y.term_count());
  auto xs = x.terms();
  auto ys = y.terms();
  std::size_t i = 0, j = 0;
  while (i < xs.size() || j < ys.size()) {
    if (j == ys.size() || (i < xs.size() && xs[i].mask < ys[j].mask)) {
      out.push_back({xs[i].mask, cx * xs[i].coeff});
      ++i;
    } else if (i == xs.size() || ys[j].mask < xs[i].mask) {
      out.push_back({ys[j].mask, cy * ys[j].coeff});
      ++j;
    } else {
      out.push_back({xs[i].mask, cx * xs[i].coeff + cy * ys[j].coeff});
      ++i;
      ++j;
    }
  }
  std::erase_if(out, [](const Multivector::Term& t) { return t.coeff == 0.0; });
  return Multivector::from_terms(x.algebra(), std::move(out));
}

Multivector grade_projection(const Multivector& x, int k) {
  if (k < 0 || k > x.algebra()->dimension()) {
    throw std::invalid_argument("grade out of range");
  }
  std::vector<Multivector::Term> out;
  for (const auto& t : x.terms()) {
    if (grade(t.mask) == k) out.push_back(t);
  }
  return Multivector::from_terms(x.algebra(), std::move(out));
}

double scalar_part(const Multivector& x) { return x.coefficient(0); }

bool approx_equal(const Multivector& x, const Multivector& y, double tol) {
  require_same_algebra(x, y);
  if (tol < 0.0) {
    throw std::invalid_argument("tolerance must be non-negative");
  }
  auto xs = x.terms();
  auto ys = y.terms();
  std::size_t i = 0, j = 0;
  while (i < xs.size() || j < ys.size()) {
    double diff;
    if (j == ys.size() || (i < xs.size() && xs[i].mask < ys[j].mask)) {
      diff = xs[i++].coeff;
    } else if (i == xs.size() || ys[j].mask < xs[i].mask) {
      diff = ys[j++].coeff;
    } else {
      diff = xs[i++].coeff - ys[j++].coeff;
    }
    if (std::abs(diff) > tol) return false;
  }
  return true;
}

Multivector prune(const Multivector& x, double tol) {
  if (tol < 0.0) {
    throw std::invalid_argument("tolerance must be non-negative");
  }
  if (tol == 0.0) return x;
  std::vector<Multivector::Term> out;
  for (const auto& t : x.terms()) {
    if (std::abs(t.coeff) > tol) out.push_back(t);
  }
  return Multivector::from_terms(x.algebra(), std::move(out));
}

}  // namespace ga
