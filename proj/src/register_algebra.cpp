#include "qra/register_algebra.hpp"

#include <stdexcept>

namespace qra {

using ga::Multivector;

std::vector<std::string> generator_names(int qubits) {
  std::vector<std::string> names;
  names.reserve(static_cast<std::size_t>(2 * qubits + 2));
  for (int i = 1; i <= 2 * qubits; ++i) names.push_back("e" + std::to_string(i));
  names.emplace_back("er1");
  names.emplace_back("er2");
  return names;
}

Context::Context(int qubits)
    : qubits_(qubits),
      algebra_(nullptr),
      iota_(Multivector::zero(nullptr)),
      ground_(Multivector::zero(nullptr)) {
  if (qubits < 1 || qubits > kMaxQubits) {
    throw std::invalid_argument("qubit count must be in 1.." +
                                std::to_string(kMaxQubits));
  }
  const int dim = 2 * qubits + 2;
  algebra_ = ga::make_algebra(std::vector<int>(static_cast<std::size_t>(dim), 1),
                              generator_names(qubits));

  const Multivector r1 = Multivector::generator(algebra_, dim - 1);
  const Multivector r2 = Multivector::generator(algebra_, dim);
  iota_ = r1 * r2;

  f_.reserve(static_cast<std::size_t>(qubits));
  f_dag_.reserve(static_cast<std::size_t>(qubits));
  for (int i = 1; i <= qubits; ++i) {
    const Multivector ei = Multivector::generator(algebra_, i);
    const Multivector ein = Multivector::generator(algebra_, i + qubits);
    f_.push_back(0.5 * (ei + iota_ * ein));
    f_dag_.push_back(0.5 * (ei - iota_ * ein));
  }

  ground_ = Multivector::scalar(algebra_, 1.0);
  for (int i = 1; i <= qubits; ++i) {
    ground_ = ground_ * f(i) * f_dag(i);
  }

  kets_.reserve(state_size());
  bras_.reserve(state_size());
  for (std::size_t k = 0; k < state_size(); ++k) {
    const std::vector<int> bits = bits_of(k);
    Multivector ket = Multivector::scalar(algebra_, 1.0);
    for (int i = 1; i <= qubits; ++i) {
      if (bits[static_cast<std::size_t>(i - 1)]) ket = ket * f_dag(i);
    }
    kets_.push_back(ket * ground_);
    Multivector bra = ground_;
    for (int i = qubits; i >= 1; --i) {
      if (bits[static_cast<std::size_t>(i - 1)]) bra = bra * f(i);
    }
    bras_.push_back(bra);
  }
}

const Multivector& Context::f(int i) const {
  if (i < 1 || i > qubits_) throw std::invalid_argument("Witt index out of range");
  return f_[static_cast<std::size_t>(i - 1)];
}

const Multivector& Context::f_dag(int i) const {
  if (i < 1 || i > qubits_) throw std::invalid_argument("Witt index out of range");
  return f_dag_[static_cast<std::size_t>(i - 1)];
}

std::vector<int> Context::bits_of(std::size_t index) const {
  if (index >= state_size()) throw std::invalid_argument("basis index out of range");
  std::vector<int> bits(static_cast<std::size_t>(qubits_));
  for (int i = 0; i < qubits_; ++i) {
    bits[static_cast<std::size_t>(i)] =
        static_cast<int>((index >> (qubits_ - 1 - i)) & 1u);
  }
  return bits;
}

std::size_t Context::index_of(const std::vector<int>& bits) const {
  if (bits.size() != static_cast<std::size_t>(qubits_)) {
    throw std::invalid_argument("bit pattern length must equal qubit count");
  }
  std::size_t index = 0;
  for (int b : bits) {
    if (b != 0 && b != 1) throw std::invalid_argument("bits must be 0 or 1");
    index = (index << 1) | static_cast<std::size_t>(b);
  }
  return index;
}

const Multivector& Context::ket(const std::vector<int>& bits) const {
  return kets_[index_of(bits)];
}

const Multivector& Context::bra(const std::vector<int>& bits) const {
  return bras_[index_of(bits)];
}

const Multivector& Context::ket(std::size_t index) const {
  if (index >= state_size()) throw std::invalid_argument("basis index out of range");
  return kets_[index];
}

const Multivector& Context::bra(std::size_t index) const {
  if (index >= state_size()) throw std::invalid_argument("basis index out of range");
  return bras_[index];
}

Multivector Context::dyad(std::size_t i, std::size_t j) const {
  return ket(i) * bra(j);
}

RegisterState make_state(const Context& ctx, std::vector<ComplexAmp> amplitudes) {
  if (amplitudes.size() != ctx.state_size()) {
    throw std::invalid_argument("state needs exactly 2^n amplitudes");
  }
  return {&ctx, std::move(amplitudes)};
}

ga::Multivector state_to_multivector(const RegisterState& s) {
  const Context& ctx = *s.context;
  Multivector out = Multivector::zero(ctx.algebra());
  for (std::size_t k = 0; k < s.amplitudes.size(); ++k) {
    const ComplexAmp& a = s.amplitudes[k];
    if (a.re != 0.0) out = out + a.re * ctx.ket(k);
    if (a.im != 0.0) out = out + a.im * (ctx.iota() * ctx.ket(k));
  }
  return out;
}

std::vector<ComplexAmp> amplitudes_from_state(const Context& ctx,
                                              const ga::Multivector& mv) {
  if (!ga::same_algebra(ctx.algebra(), mv.algebra())) {
    throw std::invalid_argument("multivector belongs to a different context");
  }
  const double scale = static_cast<double>(ctx.state_size());
  std::vector<ComplexAmp> amps(ctx.state_size());
  for (std::size_t k = 0; k < ctx.state_size(); ++k) {
    const Multivector c = ctx.bra(k) * mv;
    amps[k].re = scale * ga::scalar_part(c);
    amps[k].im = -scale * ga::scalar_part(c * ctx.iota());
  }
  return amps;
}

Gate gate_from_matrix(const Context& ctx, const matsim::ComplexMatrix& m) {
  if (m.rows() != ctx.state_size() || m.cols() != ctx.state_size()) {
    throw std::invalid_argument("matrix must be 2^n x 2^n");
  }
  Multivector mv = Multivector::zero(ctx.algebra());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) {
      const matsim::Complex a = m.at(i, j);
      if (a == 0.0) continue;
      const Multivector d = ctx.dyad(i, j);
      if (a.real() != 0.0) mv = mv + a.real() * d;
      if (a.imag() != 0.0) mv = mv + a.imag() * (ctx.iota() * d);
    }
  }
  return {&ctx, mv};
}

Gate swap_gate(const Context& ctx) {
  if (ctx.qubits() != 2) {
    throw std::invalid_argument("closed-form SWAP is two-qubit only");
  }
  const Multivector& f1 = ctx.f(1);
  const Multivector& f2 = ctx.f(2);
  const Multivector& f1d = ctx.f_dag(1);
  const Multivector& f2d = ctx.f_dag(2);
  const Multivector mv =
      f1 * f1d * f2 * f2d + f1d * f2 - f1 * f2d + f1d * f1 * f2d * f2;
  return {&ctx, mv};
}

Gate not_gate(const Context& ctx, int qubit) {
  if (qubit < 1 || qubit > ctx.qubits()) {
    throw std::invalid_argument("qubit out of range");
  }
  const int targets[] = {qubit};
  return gate_from_matrix(
      ctx, matsim::gate_matrix(matsim::GateName::kNot, ctx.qubits(), targets));
}

RegisterState apply(const Gate& g, const RegisterState& s) {
  if (!(g.context && s.context && *g.context == *s.context)) {
    throw std::invalid_argument("gate and state contexts differ");
  }
  const Multivector out = g.mv * state_to_multivector(s);
  return {s.context, amplitudes_from_state(*s.context, out)};
}

}  // namespace qra
