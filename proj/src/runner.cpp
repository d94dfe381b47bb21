#include "qra/runner.hpp"

#include <fstream>
#include <ostream>
#include <sstream>

#include "qra/register_algebra.hpp"
#include "qra/script/evaluator.hpp"
#include "qra/script/output.hpp"
#include "qra/script/parser.hpp"

namespace qra::cli {
namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw std::runtime_error("cannot open file: " + path);
  }
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

class SelftestReport {
 public:
  explicit SelftestReport(std::ostream& out) : out_(out) {}

  void check(int qubits, const std::string& label, bool ok) {
    out_ << "n=" << qubits << ": " << label << ": " << (ok ? "pass" : "FAIL") << "\n";
    all_ok_ = all_ok_ && ok;
  }

  bool all_ok() const { return all_ok_; }

 private:
  std::ostream& out_;
  bool all_ok_ = true;
};

void run_identity_checks(const Context& ctx, SelftestReport& report) {
  using ga::Multivector;
  const int n = ctx.qubits();
  const auto& alg = ctx.algebra();
  const Multivector one = Multivector::scalar(alg, 1.0);
  const Multivector zero = Multivector::zero(alg);
  const Multivector& iota = ctx.iota();
  const Multivector& id = ctx.ground();

  report.check(n, "iota^2 = -1", iota * iota == -one);

  // iota is central in the register subalgebra: blades whose er1/er2 part is
  // empty or the whole pair. Blades holding exactly one of er1, er2
  // anticommute with iota and lie outside the register algebra.
  const ga::BladeMask er_pair = ga::BladeMask{3} << (2 * n);
  bool central = true;
  for (ga::BladeMask m = 0; m < alg->blade_count(); ++m) {
    const ga::BladeMask er_part = m & er_pair;
    if (er_part != 0 && er_part != er_pair) continue;
    const Multivector blade = Multivector::basis_blade(alg, m);
    central = central && (iota * blade == blade * iota);
  }
  report.check(n, "iota commutes with every register-subalgebra blade", central);

  report.check(n, "I^2 = I", id * id == id);
  for (int i = 1; i <= n; ++i) {
    const std::string fi = "f_" + std::to_string(i);
    report.check(n, fi + " I = 0", ctx.f(i) * id == zero);
    report.check(n, fi + " " + fi + "d I = I", ctx.f(i) * ctx.f_dag(i) * id == id);
    report.check(n, fi + "^2 = 0", ctx.f(i) * ctx.f(i) == zero);
    report.check(n, fi + "d^2 = 0", ctx.f_dag(i) * ctx.f_dag(i) == zero);
    report.check(n, fi + " " + fi + "d " + fi + " = " + fi,
                 ctx.f(i) * ctx.f_dag(i) * ctx.f(i) == ctx.f(i));
    report.check(n, fi + "d " + fi + " " + fi + "d = " + fi + "d",
                 ctx.f_dag(i) * ctx.f(i) * ctx.f_dag(i) == ctx.f_dag(i));
  }

  bool anticommute = true;
  for (int i = 1; i <= n; ++i) {
    for (int j = 1; j <= n; ++j) {
      if (i == j) continue;
      anticommute = anticommute && (ctx.f(i) * ctx.f(j) == -(ctx.f(j) * ctx.f(i)));
      anticommute =
          anticommute && (ctx.f_dag(i) * ctx.f_dag(j) == -(ctx.f_dag(j) * ctx.f_dag(i)));
    }
  }
  report.check(n, "f_i f_j = -f_j f_i and f_id f_jd = -f_jd f_id (i != j)", anticommute);

  bool orthonormal = true;
  for (std::size_t b = 0; b < ctx.state_size(); ++b) {
    for (std::size_t k = 0; k < ctx.state_size(); ++k) {
      const Multivector product = ctx.bra(b) * ctx.ket(k);
      orthonormal = orthonormal && (product == (b == k ? id : zero));
    }
  }
  report.check(n, "bra(b) ket(k) = delta_bk I", orthonormal);
}

}  // namespace

gascript::AlgebraDefinition register_definition(int qubits) {
  if (qubits < 1 || qubits > kMaxQubits) {
    throw std::invalid_argument("qubit count must be in 1.." + std::to_string(kMaxQubits));
  }
  gascript::AlgebraDefinition def;
  def.basis_names = generator_names(qubits);
  def.squares.assign(def.basis_names.size(), 1);
  return def;
}

int run(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  if (cfg.definition_path.has_value() == cfg.qubits.has_value()) {
    err << "error: exactly one of a definition file or a qubit count is required\n";
    return 2;
  }

  std::string source;
  try {
    source = read_file(cfg.script_path);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }

  gascript::AlgebraDefinition def;
  try {
    if (cfg.qubits) {
      def = register_definition(*cfg.qubits);
    } else {
      const std::string text = read_file(*cfg.definition_path);
      def = gascript::parse_definition(text);
    }
  } catch (const gascript::ScriptError& e) {
    err << *cfg.definition_path << ":" << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }

  try {
    const gascript::Script script = gascript::parse_script(source);
    const gascript::Evaluation ev = gascript::evaluate(script, def);
    out << (cfg.format == OutputFormat::kJson
                ? gascript::format_outputs_json(ev, cfg.prune_tol)
                : gascript::format_outputs(ev, cfg.prune_tol));
  } catch (const gascript::ScriptError& e) {
    err << cfg.script_path << ":" << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}

int selftest(int max_qubits, std::ostream& out) {
  if (max_qubits < 1 || max_qubits > kMaxQubits) {
    out << "error: max qubits must be in 1.." << kMaxQubits << "\n";
    return 2;
  }
  SelftestReport report(out);
  for (int n = 1; n <= max_qubits; ++n) {
    run_identity_checks(Context(n), report);
  }
  out << (report.all_ok() ? "selftest: all identities hold\n"
                          : "selftest: FAILURES detected\n");
  return report.all_ok() ? 0 : 1;
}

}  // namespace qra::cli
