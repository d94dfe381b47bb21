#pragma once

#include <iosfwd>
#include <optional>
#include <string>

#include "qra/script/definition.hpp"

namespace qra::cli {

enum class OutputFormat { kGaalop, kJson };

struct RunConfig {
  std::string script_path;
  std::optional<std::string> definition_path;  // exactly one of these
  std::optional<int> qubits;                   // two must be set
  OutputFormat format = OutputFormat::kGaalop;
  double prune_tol = 0.0;
};

// Synthesized n-qubit register definition: e1..e2n, er1, er2, all +1.
gascript::AlgebraDefinition register_definition(int qubits);

// Parses the definition (or synthesizes it from the qubit count), evaluates
// the script, and writes the formatted outputs to `out`. Diagnostics go to
// `err`; returns a process exit status.
int run(const RunConfig& cfg, std::ostream& out, std::ostream& err);

// Checks the register-algebra identities (iota, projector, Witt relations,
// basis orthonormality) for every qubit count up to max_qubits, printing one
// line per identity. Returns 0 iff all hold.
int selftest(int max_qubits, std::ostream& out);

}  // namespace qra::cli
