#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "qra/multivector.hpp"
#include "qra/script/ast.hpp"
#include "qra/script/definition.hpp"

namespace gascript {

struct Evaluation {
  ga::AlgebraPtr algebra;
  std::map<std::string, ga::Multivector> environment;
  // '?' statements, in statement order.
  std::vector<std::pair<std::string, ga::Multivector>> outputs;
};

// Runs the statements in order over the definition's algebra. Generator
// names are predefined as grade-1 multivectors and cannot be reassigned;
// '*' is the geometric product and '^' the outer product.
Evaluation evaluate(const Script& script, const AlgebraDefinition& def);

}  // namespace gascript
