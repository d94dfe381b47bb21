#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "qra/matsim.hpp"
#include "qra/multivector.hpp"

namespace qra {

// Amplitude a + b*iota, carried as its coefficient pair.
struct ComplexAmp {
  double re = 0.0;
  double im = 0.0;
  bool operator==(const ComplexAmp&) const = default;
};

// Generator names for an n-qubit register: e1..e2n plus er1, er2.
std::vector<std::string> generator_names(int qubits);

inline constexpr int kMaxQubits = 8;

// An n-qubit register algebra: 2n+2 generators, all squaring to +1. Caches
// iota = er1*er2, the Witt vectors f_i = (e_i + iota*e_{i+n})/2 and their
// daggers, the ground projector I = f1 f1d ... fn fnd, and the basis kets
// and bras built from them. Immutable and shareable.
class Context {
 public:
  explicit Context(int qubits);

  int qubits() const { return qubits_; }
  std::size_t state_size() const { return std::size_t{1} << qubits_; }
  const ga::AlgebraPtr& algebra() const { return algebra_; }

  const ga::Multivector& iota() const { return iota_; }
  // 1-based Witt index.
  const ga::Multivector& f(int i) const;
  const ga::Multivector& f_dag(int i) const;
  const ga::Multivector& ground() const { return ground_; }

  // Basis state for a bit pattern a1..an (qubit 1 first, most significant).
  const ga::Multivector& ket(const std::vector<int>& bits) const;
  const ga::Multivector& bra(const std::vector<int>& bits) const;
  // Same, addressed by the basis index sum(a_k 2^(n-k)).
  const ga::Multivector& ket(std::size_t index) const;
  const ga::Multivector& bra(std::size_t index) const;

  // |i><j| as a geometric product of the cached ket and bra.
  ga::Multivector dyad(std::size_t i, std::size_t j) const;

  std::vector<int> bits_of(std::size_t index) const;
  std::size_t index_of(const std::vector<int>& bits) const;

  bool operator==(const Context& other) const { return qubits_ == other.qubits_; }

 private:
  int qubits_;
  ga::AlgebraPtr algebra_;
  ga::Multivector iota_;
  std::vector<ga::Multivector> f_;
  std::vector<ga::Multivector> f_dag_;
  ga::Multivector ground_;
  std::vector<ga::Multivector> kets_;
  std::vector<ga::Multivector> bras_;
};

// 2^n complex amplitudes, index i = a1 2^(n-1) + ... + an 2^0.
struct RegisterState {
  const Context* context;
  std::vector<ComplexAmp> amplitudes;
};

RegisterState make_state(const Context& ctx, std::vector<ComplexAmp> amplitudes);

// Operator stored as a multivector; application is the geometric product.
struct Gate {
  const Context* context;
  ga::Multivector mv;
};

// Sum over basis indices of (re_k + im_k iota) * ket(k).
ga::Multivector state_to_multivector(const RegisterState& s);

// Projection of mv onto the ket span: per index k, with c = bra(k)*mv,
// re_k = 2^n scalar(c) and im_k = -2^n scalar(c*iota).
std::vector<ComplexAmp> amplitudes_from_state(const Context& ctx, const ga::Multivector& mv);

// Sum of matrix entries times dyads; m is 2^n x 2^n.
Gate gate_from_matrix(const Context& ctx, const matsim::ComplexMatrix& m);

// Closed-form Witt expression f1 f1d f2 f2d + f1d f2 - f1 f2d + f1d f1 f2d f2;
// two-qubit registers only.
Gate swap_gate(const Context& ctx);

// Flips the given qubit (1-based); built from the Kronecker-extended NOT
// matrix through gate_from_matrix.
Gate not_gate(const Context& ctx, int qubit);

RegisterState apply(const Gate& g, const RegisterState& s);

}  // namespace qra
