#include "qra/script/definition.hpp"

#include <algorithm>
#include <stdexcept>

#include "qra/script/diagnostics.hpp"

namespace gascript {
namespace {

std::string trim(std::string_view s) {
  const auto not_space = [](char c) { return c != ' ' && c != '\t' && c != '\r'; };
  const auto begin = std::find_if(s.begin(), s.end(), not_space);
  const auto end = std::find_if(s.rbegin(), s.rend(), not_space).base();
  return begin < end ? std::string(begin, end) : std::string();
}

std::vector<std::string> split_lines(std::string_view text) {
  std::vector<std::string> lines;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t nl = text.find('\n', start);
    if (nl == std::string_view::npos) {
      lines.emplace_back(text.substr(start));
      break;
    }
    lines.emplace_back(text.substr(start, nl - start));
    start = nl + 1;
  }
  return lines;
}

std::vector<std::string> split_csv(const std::string& line) {
  std::vector<std::string> fields;
  std::size_t start = 0;
  while (start <= line.size()) {
    std::size_t comma = line.find(',', start);
    if (comma == std::string::npos) {
      fields.push_back(trim(std::string_view(line).substr(start)));
      break;
    }
    fields.push_back(trim(std::string_view(line).substr(start, comma - start)));
    start = comma + 1;
  }
  return fields;
}

ScriptError definition_error(int line, const std::string& message) {
  return ScriptError({line, 1}, message);
}

}  // namespace

ga::AlgebraPtr AlgebraDefinition::make_algebra() const {
  return ga::make_algebra(squares, basis_names);
}

AlgebraDefinition parse_definition(std::string_view text) {
  std::vector<std::string> lines = split_lines(text);
  if (lines.size() < 4) {
    throw definition_error(static_cast<int>(lines.size()),
                           "definition needs at least 4 lines");
  }
  for (std::size_t extra = 5; extra < lines.size(); ++extra) {
    if (!trim(lines[extra]).empty()) {
      throw definition_error(static_cast<int>(extra + 1),
                             "unexpected content after line 5");
    }
  }
  if (!trim(lines[1]).empty()) {
    throw definition_error(2, "line 2 must be blank (basis transformations not supported)");
  }
  if (lines.size() >= 5 && !trim(lines[4]).empty()) {
    throw definition_error(5, "line 5 must be blank (basis transformations not supported)");
  }

  const std::vector<std::string> used = split_csv(lines[0]);
  if (used.empty() || used.front() != "1") {
    throw definition_error(1, "used basis must start with the scalar \"1\"");
  }
  const std::vector<std::string> standard = split_csv(lines[2]);
  if (standard != used) {
    throw definition_error(3, "standard basis differs from used basis "
                              "(basis transformations not supported)");
  }

  AlgebraDefinition def;
  def.basis_names.assign(used.begin() + 1, used.end());
  if (def.basis_names.empty()) {
    throw definition_error(1, "definition lists no generators");
  }
  def.squares.assign(def.basis_names.size(), 0);  // 0 = unassigned

  for (const std::string& entry : split_csv(lines[3])) {
    if (entry.empty()) continue;  // tolerate a trailing comma
    const std::size_t eq = entry.find('=');
    if (eq == std::string::npos) {
      throw definition_error(4, "malformed square entry: " + entry);
    }
    const std::string name = trim(std::string_view(entry).substr(0, eq));
    const std::string value = trim(std::string_view(entry).substr(eq + 1));
    const auto it = std::find(def.basis_names.begin(), def.basis_names.end(), name);
    if (it == def.basis_names.end()) {
      throw definition_error(4, "unknown generator in squares: " + name);
    }
    const std::size_t index = static_cast<std::size_t>(it - def.basis_names.begin());
    if (def.squares[index] != 0) {
      throw definition_error(4, "duplicate square entry for " + name);
    }
    if (value == "1" || value == "+1") {
      def.squares[index] = 1;
    } else if (value == "-1") {
      def.squares[index] = -1;
    } else {
      throw definition_error(4, "square of " + name + " must be 1 or -1, got: " + value);
    }
  }
  for (std::size_t i = 0; i < def.squares.size(); ++i) {
    if (def.squares[i] == 0) {
      throw definition_error(4, "no square given for " + def.basis_names[i]);
    }
  }
  return def;
}

}  // namespace gascript
