#pragma once

#include <string>

#include "qra/script/evaluator.hpp"

namespace gascript {

// One line per nonzero coordinate in ascending canonical index:
//   "<name>[<index>] = <value>; // <blade>"
// Coefficients with |c| <= prune_tol are dropped first.
std::string format_outputs(const Evaluation& ev, double prune_tol = 0.0);

// Same triples as an array of {"name", "coords": [{"index","value","blade"}]}.
std::string format_outputs_json(const Evaluation& ev, double prune_tol = 0.0);

}  // namespace gascript
