#pragma once

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

// Conventional complex-matrix state-vector simulator. Kept independent of
// the geometric-algebra code so the two paths can cross-check each other.
namespace matsim {

using Complex = std::complex<double>;

class ComplexMatrix {
 public:
  ComplexMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), entries_(rows * cols) {}

  static ComplexMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Complex& at(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
  const Complex& at(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }

 private:
  std::size_t rows_, cols_;
  std::vector<Complex> entries_;  // row-major
};

using StateVector = std::vector<Complex>;

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix mat_mul(const ComplexMatrix& a, const ComplexMatrix& b);
StateVector mat_apply(const ComplexMatrix& m, const StateVector& v);

enum class GateName { kNot, kSwap, kHadamard, kCnot };

// Full 2^n x 2^n matrix with the gate placed on the given qubits.
// Qubits are 1-based; qubit 1 is the most significant bit of the basis
// index. kNot and kHadamard take one target, kCnot takes (control, target),
// kSwap takes two distinct targets.
ComplexMatrix gate_matrix(GateName name, int qubits, std::span<const int> targets);

}  // namespace matsim
