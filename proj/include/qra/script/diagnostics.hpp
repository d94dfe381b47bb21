#pragma once

#include <stdexcept>
#include <string>

namespace gascript {

// 1-based line/column within the source text.
struct SourcePos {
  int line = 1;
  int col = 1;
};

class ScriptError : public std::runtime_error {
 public:
  ScriptError(SourcePos pos, const std::string& message)
      : std::runtime_error(std::to_string(pos.line) + ":" + std::to_string(pos.col) +
                           ": " + message),
        pos_(pos) {}

  SourcePos pos() const { return pos_; }

 private:
  SourcePos pos_;
};

}  // namespace gascript
