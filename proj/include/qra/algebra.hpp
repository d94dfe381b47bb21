#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

namespace ga {

// Generator signature and naming of a geometric algebra G(p,q).
// Generators are numbered 1..N externally and 0..N-1 internally; each
// squares to +1 or -1. Basis blades are N-bit masks over the generators.
class Algebra {
 public:
  Algebra(std::vector<int> squares, std::vector<std::string> names);

  int dimension() const { return static_cast<int>(squares_.size()); }
  std::size_t blade_count() const { return std::size_t{1} << dimension(); }

  // 0-based generator index.
  int square(int i) const { return squares_[static_cast<std::size_t>(i)]; }
  const std::string& name(int i) const { return names_[static_cast<std::size_t>(i)]; }
  const std::vector<int>& squares() const { return squares_; }
  const std::vector<std::string>& names() const { return names_; }

  bool operator==(const Algebra& other) const {
    return squares_ == other.squares_ && names_ == other.names_;
  }
  bool operator!=(const Algebra& other) const { return !(*this == other); }

  // Largest supported dimension; blade masks are 32-bit and canonical
  // indices must fit in uint64.
  static constexpr int kMaxDimension = 28;

 private:
  std::vector<int> squares_;
  std::vector<std::string> names_;
};

using AlgebraPtr = std::shared_ptr<const Algebra>;

AlgebraPtr make_algebra(std::vector<int> squares, std::vector<std::string> names);

// True when both refer to the same algebra (pointer or structural equality).
bool same_algebra(const AlgebraPtr& a, const AlgebraPtr& b);

}  // namespace ga
