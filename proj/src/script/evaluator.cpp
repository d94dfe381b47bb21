#include "qra/script/evaluator.hpp"

#include <set>

namespace gascript {
namespace {

class Evaluator {
 public:
  explicit Evaluator(const AlgebraDefinition& def) {
    result_.algebra = def.make_algebra();
    for (std::size_t i = 0; i < def.basis_names.size(); ++i) {
      result_.environment.emplace(
          def.basis_names[i],
          ga::Multivector::generator(result_.algebra, static_cast<int>(i) + 1));
      generators_.insert(def.basis_names[i]);
    }
  }

  Evaluation run(const Script& script) {
    for (const Statement& st : script.statements) {
      if (generators_.count(st.target) != 0) {
        throw ScriptError(st.pos, "cannot redefine generator " + st.target);
      }
      ga::Multivector value = eval(*st.value);
      result_.environment.insert_or_assign(st.target, value);
      if (st.output) {
        result_.outputs.emplace_back(st.target, std::move(value));
      }
    }
    return std::move(result_);
  }

 private:
  ga::Multivector eval(const Expr& e) {
    switch (e.kind) {
      case Expr::Kind::kNumber:
        return ga::Multivector::scalar(result_.algebra, e.number);
      case Expr::Kind::kIdentifier: {
        const auto it = result_.environment.find(e.name);
        if (it == result_.environment.end()) {
          throw ScriptError(e.pos, "unbound identifier " + e.name);
        }
        return it->second;
      }
      case Expr::Kind::kNegate:
        return -eval(*e.lhs);
      case Expr::Kind::kBinary: {
        const ga::Multivector lhs = eval(*e.lhs);
        const ga::Multivector rhs = eval(*e.rhs);
        switch (e.op) {
          case '+': return lhs + rhs;
          case '-': return lhs - rhs;
          case '*': return lhs * rhs;
          case '^': return lhs ^ rhs;
        }
        break;
      }
    }
    throw ScriptError(e.pos, "malformed expression node");
  }

  Evaluation result_;
  std::set<std::string> generators_;
};

}  // namespace

Evaluation evaluate(const Script& script, const AlgebraDefinition& def) {
  return Evaluator(def).run(script);
}

}  // namespace gascript
