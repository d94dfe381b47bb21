#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "qra/register_algebra.hpp"
#include "qra/runner.hpp"

int main(int argc, char** argv) {
  CLI::App app{"Quantum Register Algebra script engine"};
  app.require_subcommand(1);

  qra::cli::RunConfig cfg;
  std::string def_path;
  int qubits = 0;
  std::string format = "gaalop";

  CLI::App* run = app.add_subcommand("run", "evaluate a script and print its outputs");
  run->add_option("script", cfg.script_path, "script file")->required();
  auto* def_opt = run->add_option("--def", def_path, "algebra definition file");
  auto* qubit_opt =
      run->add_option("--qubits", qubits, "synthesize an n-qubit register algebra")
          ->check(CLI::Range(1, qra::kMaxQubits));
  def_opt->excludes(qubit_opt);
  run->add_option("--format", format, "output format")
      ->check(CLI::IsMember({"gaalop", "json"}));
  run->add_option("--tol", cfg.prune_tol, "drop coordinates with |value| <= tol")
      ->check(CLI::NonNegativeNumber);

  int max_qubits = 3;
  CLI::App* selftest =
      app.add_subcommand("selftest", "verify the register-algebra identities");
  selftest->add_option("--max-qubits", max_qubits, "largest register to check")
      ->check(CLI::Range(1, qra::kMaxQubits));

  CLI11_PARSE(app, argc, argv);

  if (run->parsed()) {
    if (def_opt->count() > 0) cfg.definition_path = def_path;
    if (qubit_opt->count() > 0) cfg.qubits = qubits;
    cfg.format = format == "json" ? qra::cli::OutputFormat::kJson
                                  : qra::cli::OutputFormat::kGaalop;
    return qra::cli::run(cfg, std::cout, std::cerr);
  }
  return qra::cli::selftest(max_qubits, std::cout);
}
