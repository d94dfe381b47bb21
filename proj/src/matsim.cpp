#include "qra/matsim.hpp"

#include <stdexcept>

namespace matsim {
namespace {

constexpr double kInvSqrt2 = 0.70710678118654752440;

ComplexMatrix single_qubit(GateName name) {
  ComplexMatrix m(2, 2);
  switch (name) {
    case GateName::kNot:
      m.at(0, 1) = 1.0;
      m.at(1, 0) = 1.0;
      break;
    case GateName::kHadamard:
      m.at(0, 0) = kInvSqrt2;
      m.at(0, 1) = kInvSqrt2;
      m.at(1, 0) = kInvSqrt2;
      m.at(1, 1) = -kInvSqrt2;
      break;
    default:
      throw std::invalid_argument("not a single-qubit gate");
  }
  return m;
}

// Projector |b><b| on one qubit.
ComplexMatrix qubit_projector(int b) {
  ComplexMatrix m(2, 2);
  m.at(static_cast<std::size_t>(b), static_cast<std::size_t>(b)) = 1.0;
  return m;
}

// Kron chain over all qubit slots: `factors[q]` either a 2x2 matrix or
// nullptr for identity.
ComplexMatrix kron_chain(int qubits, const std::vector<const ComplexMatrix*>& factors) {
  ComplexMatrix out = ComplexMatrix::identity(1);
  const ComplexMatrix id2 = ComplexMatrix::identity(2);
  for (int q = 0; q < qubits; ++q) {
    out = kron(out, factors[static_cast<std::size_t>(q)] ? *factors[static_cast<std::size_t>(q)] : id2);
  }
  return out;
}

void check_target(int qubits, int target) {
  if (target < 1 || target > qubits) {
    throw std::invalid_argument("target qubit out of range");
  }
}

ComplexMatrix placed_single(GateName name, int qubits, int target) {
  check_target(qubits, target);
  const ComplexMatrix u = single_qubit(name);
  std::vector<const ComplexMatrix*> factors(static_cast<std::size_t>(qubits), nullptr);
  factors[static_cast<std::size_t>(target - 1)] = &u;
  return kron_chain(qubits, factors);
}

ComplexMatrix add(const ComplexMatrix& a, const ComplexMatrix& b) {
  ComplexMatrix out(a.rows(), a.cols());
  for (std::size_t r = 0; r < a.rows(); ++r) {
    for (std::size_t c = 0; c < a.cols(); ++c) {
      out.at(r, c) = a.at(r, c) + b.at(r, c);
    }
  }
  return out;
}

// CNOT as |0><0|_c (x) I + |1><1|_c (x) X_t, realized as two kron chains.
ComplexMatrix cnot(int qubits, int control, int target) {
  check_target(qubits, control);
  check_target(qubits, target);
  if (control == target) {
    throw std::invalid_argument("control and target must differ");
  }
  const ComplexMatrix p0 = qubit_projector(0);
  const ComplexMatrix p1 = qubit_projector(1);
  const ComplexMatrix x = single_qubit(GateName::kNot);

  std::vector<const ComplexMatrix*> keep(static_cast<std::size_t>(qubits), nullptr);
  keep[static_cast<std::size_t>(control - 1)] = &p0;
  std::vector<const ComplexMatrix*> flip(static_cast<std::size_t>(qubits), nullptr);
  flip[static_cast<std::size_t>(control - 1)] = &p1;
  flip[static_cast<std::size_t>(target - 1)] = &x;
  return add(kron_chain(qubits, keep), kron_chain(qubits, flip));
}

}  // namespace

ComplexMatrix ComplexMatrix::identity(std::size_t n) {
  ComplexMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1.0;
  return m;
}

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
  ComplexMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t ar = 0; ar < a.rows(); ++ar) {
    for (std::size_t ac = 0; ac < a.cols(); ++ac) {
      const Complex f = a.at(ar, ac);
      if (f == 0.0) continue;
      for (std::size_t br = 0; br < b.rows(); ++br) {
        for (std::size_t bc = 0; bc < b.cols(); ++bc) {
          out.at(ar * b.rows() + br, ac * b.cols() + bc) = f * b.at(br, bc);
        }
      }
    }
  }
  return out;
}

ComplexMatrix mat_mul(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.cols() != b.rows()) {
    throw std::invalid_argument("matrix dimensions do not match");
  }
  ComplexMatrix out(a.rows(), b.cols());
  for (std::size_t r = 0; r < a.rows(); ++r) {
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const Complex f = a.at(r, k);
      if (f == 0.0) continue;
      for (std::size_t c = 0; c < b.cols(); ++c) {
        out.at(r, c) += f * b.at(k, c);
      }
    }
  }
  return out;
}

StateVector mat_apply(const ComplexMatrix& m, const StateVector& v) {
  if (m.cols() != v.size() || m.rows() != m.cols()) {
    throw std::invalid_argument("matrix/state dimensions do not match");
  }
  StateVector out(m.rows());
  for (std::size_t r = 0; r < m.rows(); ++r) {
    Complex sum = 0.0;
    for (std::size_t c = 0; c < m.cols(); ++c) {
      sum += m.at(r, c) * v[c];
    }
    out[r] = sum;
  }
  return out;
}

ComplexMatrix gate_matrix(GateName name, int qubits, std::span<const int> targets) {
  if (qubits < 1) {
    throw std::invalid_argument("qubit count must be positive");
  }
  switch (name) {
    case GateName::kNot:
    case GateName::kHadamard:
      if (targets.size() != 1) {
        throw std::invalid_argument("gate takes exactly one target");
      }
      return placed_single(name, qubits, targets[0]);
    case GateName::kCnot:
      if (targets.size() != 2) {
        throw std::invalid_argument("CNOT takes (control, target)");
      }
      return cnot(qubits, targets[0], targets[1]);
    case GateName::kSwap: {
      if (targets.size() != 2) {
        throw std::invalid_argument("SWAP takes two targets");
      }
      // SWAP(a,b) = CNOT(a,b) CNOT(b,a) CNOT(a,b)
      const ComplexMatrix ab = cnot(qubits, targets[0], targets[1]);
      const ComplexMatrix ba = cnot(qubits, targets[1], targets[0]);
      return mat_mul(ab, mat_mul(ba, ab));
    }
  }
  throw std::invalid_argument("unknown gate");
}

}  // namespace matsim
