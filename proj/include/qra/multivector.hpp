#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "qra/algebra.hpp"
#include "qra/blade.hpp"

namespace ga {

// Sparse real linear combination of basis blades. Immutable after
// construction; every operation returns a fresh value. Terms are kept sorted
// by blade mask and never hold an exactly-zero coefficient.
class Multivector {
 public:
  struct Term {
    BladeMask mask;
    double coeff;
    bool operator==(const Term&) const = default;
  };

  static Multivector zero(AlgebraPtr alg);
  static Multivector scalar(AlgebraPtr alg, double value);
  static Multivector basis_blade(AlgebraPtr alg, BladeMask mask, double coeff = 1.0);
  // 1-based generator index, matching the e1..eN naming.
  static Multivector generator(AlgebraPtr alg, int index);
  // Terms may be unsorted and contain duplicates or zeros; normalized here.
  static Multivector from_terms(AlgebraPtr alg, std::vector<Term> terms);

  const AlgebraPtr& algebra() const { return algebra_; }
  std::span<const Term> terms() const { return terms_; }
  std::size_t term_count() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }

  double coefficient(BladeMask mask) const;

  bool operator==(const Multivector& other) const {
    return same_algebra(algebra_, other.algebra_) && terms_ == other.terms_;
  }

 private:
  Multivector(AlgebraPtr alg, std::vector<Term> sorted_terms)
      : algebra_(std::move(alg)), terms_(std::move(sorted_terms)) {}

  AlgebraPtr algebra_;
  std::vector<Term> terms_;

  friend Multivector product_serial(const Multivector&, const Multivector&, bool);
  friend Multivector product_dense_parallel(const Multivector&, const Multivector&, bool);
};

Multivector geometric_product(const Multivector& x, const Multivector& y);
Multivector outer_product(const Multivector& x, const Multivector& y);
Multivector linear_combine(double cx, const Multivector& x, double cy, const Multivector& y);
Multivector grade_projection(const Multivector& x, int k);
double scalar_part(const Multivector& x);
bool approx_equal(const Multivector& x, const Multivector& y, double tol);
// Drops every coefficient with |c| <= tol; tol = 0 is a no-op on valid values.
Multivector prune(const Multivector& x, double tol);

inline Multivector operator*(const Multivector& x, const Multivector& y) {
  return geometric_product(x, y);
}
inline Multivector operator^(const Multivector& x, const Multivector& y) {
  return outer_product(x, y);
}
inline Multivector operator+(const Multivector& x, const Multivector& y) {
  return linear_combine(1.0, x, 1.0, y);
}
inline Multivector operator-(const Multivector& x, const Multivector& y) {
  return linear_combine(1.0, x, -1.0, y);
}
inline Multivector operator*(double c, const Multivector& x) {
  return linear_combine(c, x, 0.0, Multivector::zero(x.algebra()));
}
inline Multivector operator-(const Multivector& x) { return -1.0 * x; }

}  // namespace ga
