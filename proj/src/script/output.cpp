#include "qra/script/output.hpp"

#include <algorithm>

#include <json.hpp>

#include "qra/format.hpp"

namespace gascript {
namespace {

struct Coord {
  std::uint64_t index;
  double value;
  std::string blade;
};

std::vector<Coord> coordinates(const ga::Multivector& mv, const ga::Algebra& alg,
                               double prune_tol) {
  const ga::Multivector pruned = ga::prune(mv, prune_tol);
  std::vector<Coord> coords;
  coords.reserve(pruned.term_count());
  for (const auto& term : pruned.terms()) {
    coords.push_back({ga::canonical_index(term.mask, alg.dimension()), term.coeff,
                      ga::format_blade(term.mask, alg)});
  }
  std::sort(coords.begin(), coords.end(),
            [](const Coord& a, const Coord& b) { return a.index < b.index; });
  return coords;
}

}  // namespace

std::string format_outputs(const Evaluation& ev, double prune_tol) {
  std::string out;
  for (const auto& [name, mv] : ev.outputs) {
    for (const Coord& c : coordinates(mv, *ev.algebra, prune_tol)) {
      out += name;
      out += '[';
      out += std::to_string(c.index);
      out += "] = ";
      out += ga::format_value(c.value);
      out += "; // ";
      out += c.blade;
      out += '\n';
    }
  }
  return out;
}

std::string format_outputs_json(const Evaluation& ev, double prune_tol) {
  nlohmann::json result = nlohmann::json::array();
  for (const auto& [name, mv] : ev.outputs) {
    nlohmann::json coords = nlohmann::json::array();
    for (const Coord& c : coordinates(mv, *ev.algebra, prune_tol)) {
      coords.push_back({{"index", c.index}, {"value", c.value}, {"blade", c.blade}});
    }
    result.push_back({{"name", name}, {"coords", std::move(coords)}});
  }
  return result.dump(2) + "\n";
}

}  // namespace gascript
