#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "qra/algebra.hpp"

namespace gascript {

// Algebra definition file: five lines, where line 1 lists the used basis
// starting with the scalar "1", line 3 repeats it as the standard basis,
// line 4 assigns each generator square (+1/-1), and lines 2 and 5 stay
// blank (basis transformations are not supported).
struct AlgebraDefinition {
  std::vector<std::string> basis_names;  // generators, scalar excluded
  std::vector<int> squares;              // parallel to basis_names

  ga::AlgebraPtr make_algebra() const;
};

AlgebraDefinition parse_definition(std::string_view text);

}  // namespace gascript
