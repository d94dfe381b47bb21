#include "qra/algebra.hpp"

#include <stdexcept>
#include <unordered_set>

namespace ga {

Algebra::Algebra(std::vector<int> squares, std::vector<std::string> names)
    : squares_(std::move(squares)), names_(std::move(names)) {
  if (squares_.empty()) {
    throw std::invalid_argument("algebra needs at least one generator");
  }
  if (squares_.size() != names_.size()) {
    throw std::invalid_argument("squares and names must have equal length");
  }
  if (squares_.size() > static_cast<std::size_t>(kMaxDimension)) {
    throw std::invalid_argument("algebra dimension exceeds supported maximum (" +
                                std::to_string(kMaxDimension) + ")");
  }
  for (int s : squares_) {
    if (s != 1 && s != -1) {
      throw std::invalid_argument("generator square must be +1 or -1");
    }
  }
  std::unordered_set<std::string> seen;
  for (const std::string& n : names_) {
    if (n.empty()) {
      throw std::invalid_argument("generator name must be non-empty");
    }
    if (!seen.insert(n).second) {
      throw std::invalid_argument("duplicate generator name: " + n);
    }
  }
}

AlgebraPtr make_algebra(std::vector<int> squares, std::vector<std::string> names) {
  return std::make_shared<const Algebra>(std::move(squares), std::move(names));
}

bool same_algebra(const AlgebraPtr& a, const AlgebraPtr& b) {
  if (a == b) return true;
  if (!a || !b) return false;
  return *a == *b;
}

}  // namespace ga
