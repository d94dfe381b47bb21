#include <doctest.h>

#include <functional>
#include <random>

#include "golden_data.hpp"
#include "oracle_helpers.hpp"
#include "qra/script/evaluator.hpp"
#include "qra/script/output.hpp"
#include "qra/script/parser.hpp"

#include <json.hpp>

using namespace gascript;

namespace {

AlgebraDefinition g11_definition() {
  AlgebraDefinition def;
  def.basis_names = {"e1", "e2"};
  def.squares = {1, -1};
  return def;
}

Evaluation run_source(const std::string& source, const AlgebraDefinition& def) {
  return evaluate(parse_script(source), def);
}

}  // namespace

TEST_CASE("tokenizer basics") {
  const auto tokens = tokenize("?psi = ket00 + 2*ket01; // trailing comment");
  REQUIRE(tokens.size() == 10);  // includes end marker
  CHECK(tokens[0].kind == TokenKind::kQuestion);
  CHECK(tokens[1].kind == TokenKind::kIdentifier);
  CHECK(tokens[1].text == "psi");
  CHECK(tokens[4].kind == TokenKind::kPlus);
  CHECK(tokens[5].kind == TokenKind::kNumber);
  CHECK(tokens[8].kind == TokenKind::kSemicolon);
  CHECK(tokens[9].kind == TokenKind::kEnd);

  // positions are 1-based line:col
  const auto two_lines = tokenize("a = 1;\n b = 2;");
  CHECK(two_lines[0].pos.line == 1);
  CHECK(two_lines[0].pos.col == 1);
  CHECK(two_lines[4].text == "b");
  CHECK(two_lines[4].pos.line == 2);
  CHECK(two_lines[4].pos.col == 2);
}

TEST_CASE("tokenizer rejects bad input with a position") {
  CHECK_THROWS_WITH_AS(tokenize("a = $;"), "1:5: unexpected character '$'", ScriptError);
  CHECK_THROWS_WITH_AS(tokenize("a = 1.;"), "1:5: malformed number: digit expected after '.'",
                       ScriptError);
}

TEST_CASE("parser shapes") {
  const Script one = parse_script("i = er1*er2;");
  REQUIRE(one.statements.size() == 1);
  CHECK_FALSE(one.statements[0].output);
  CHECK(one.statements[0].target == "i");
  CHECK(one.statements[0].value->kind == Expr::Kind::kBinary);
  CHECK(one.statements[0].value->op == '*');

  const Script sum = parse_script("?psi = ket00 + 2*ket01 + 3*ket10 + 4*ket11;");
  REQUIRE(sum.statements.size() == 1);
  CHECK(sum.statements[0].output);
  const Expr& root = *sum.statements[0].value;
  CHECK(root.op == '+');              // left-assoc: ((a + b) + c) + d
  CHECK(root.rhs->op == '*');
  CHECK(root.rhs->lhs->number == 4.0);
}

TEST_CASE("parser reports syntax errors with positions") {
  CHECK_THROWS_WITH_AS(parse_script("x = ;"),
                       "1:5: expected an expression, found ';'", ScriptError);
  CHECK_THROWS_WITH_AS(parse_script("x = 1"),
                       "1:6: expected ';', found end of input", ScriptError);
  CHECK_THROWS_WITH_AS(parse_script("x = (1;"),
                       "1:7: expected ')', found ';'", ScriptError);
  CHECK_THROWS_WITH_AS(parse_script("= 1;"),
                       "1:1: expected identifier, found '='", ScriptError);
  CHECK_THROWS_AS(parse_script("x 1;"), ScriptError);
}

TEST_CASE("definition parsing accepts the register files") {
  const AlgebraDefinition one = parse_definition(golden::kOneQubitDefinition);
  CHECK(one.basis_names == std::vector<std::string>{"e1", "e2", "er1", "er2"});
  CHECK(one.squares == std::vector<int>{1, 1, 1, 1});

  const AlgebraDefinition two = parse_definition(golden::kTwoQubitDefinition);
  CHECK(two.basis_names ==
        std::vector<std::string>{"e1", "e2", "e3", "e4", "er1", "er2"});
  CHECK(two.squares == std::vector<int>(6, 1));

  const AlgebraDefinition mixed =
      parse_definition("1,e1,e2\n\n1,e1,e2\ne1=1,e2=-1\n\n");
  CHECK(mixed.squares == std::vector<int>{1, -1});
}

TEST_CASE("definition parsing rejects malformed files") {
  // line 1 and line 3 must agree
  CHECK_THROWS_WITH_AS(parse_definition("1,e1,e2\n\n1,e1\ne1=1,e2=1\n\n"),
                       "3:1: standard basis differs from used basis "
                       "(basis transformations not supported)",
                       ScriptError);
  // malformed square entry
  CHECK_THROWS_AS(parse_definition("1,e1\n\n1,e1\ne1:1\n\n"), ScriptError);
  CHECK_THROWS_AS(parse_definition("1,e1\n\n1,e1\ne1=2\n\n"), ScriptError);
  // unknown name in line 4
  CHECK_THROWS_AS(parse_definition("1,e1\n\n1,e1\ne1=1,e9=1\n\n"), ScriptError);
  // missing square
  CHECK_THROWS_AS(parse_definition("1,e1,e2\n\n1,e1,e2\ne1=1\n\n"), ScriptError);
  // duplicate square
  CHECK_THROWS_AS(parse_definition("1,e1\n\n1,e1\ne1=1,e1=1\n\n"), ScriptError);
  // non-blank transformation lines
  CHECK_THROWS_AS(parse_definition("1,e1\nT\n1,e1\ne1=1\n\n"), ScriptError);
  CHECK_THROWS_AS(parse_definition("1,e1\n\n1,e1\ne1=1\nT\n"), ScriptError);
  // too short / missing scalar
  CHECK_THROWS_AS(parse_definition("1,e1\n\n1,e1\n"), ScriptError);
  CHECK_THROWS_AS(parse_definition("e1\n\ne1\ne1=1\n\n"), ScriptError);
}

TEST_CASE("evaluation basics") {
  const AlgebraDefinition def = g11_definition();

  const Evaluation squares = run_source("?x = e1*e1; ?y = e2*e2;", def);
  REQUIRE(squares.outputs.size() == 2);
  CHECK(squares.outputs[0].second == ga::Multivector::scalar(squares.algebra, 1.0));
  CHECK(squares.outputs[1].second == ga::Multivector::scalar(squares.algebra, -1.0));

  // rebinding a non-generator is allowed; outputs keep the value at print time
  const Evaluation rebind = run_source("a = e1; ?b = a; a = e2; ?c = a;", def);
  CHECK(rebind.outputs[0].second == ga::Multivector::generator(rebind.algebra, 1));
  CHECK(rebind.outputs[1].second == ga::Multivector::generator(rebind.algebra, 2));

  // '^' is the outer product
  const Evaluation outer = run_source("?x = e1^e2; ?y = e1^e1;", def);
  CHECK(outer.outputs[0].second ==
        ga::Multivector::basis_blade(outer.algebra, 0b11));
  CHECK(outer.outputs[1].second.is_zero());

  // unary minus binds tighter than '*'
  const Evaluation neg = run_source("?x = -2*e1;", def);
  CHECK(neg.outputs[0].second == -2.0 * ga::Multivector::generator(neg.algebra, 1));
}

TEST_CASE("evaluation errors") {
  const AlgebraDefinition def = g11_definition();
  CHECK_THROWS_WITH_AS(run_source("x = nope;", def), "1:5: unbound identifier nope",
                       ScriptError);
  CHECK_THROWS_WITH_AS(run_source("e1 = 2;", def), "1:1: cannot redefine generator e1",
                       ScriptError);
}

TEST_CASE("worked G(1,1) examples through the interpreter") {
  const AlgebraDefinition def = g11_definition();
  const Evaluation ev = run_source(
      "?word = e2*e1*e2*e1*e1*e2*e2;"
      "?product = (e1 + 2*e1*e2) * (1 + e1 - 3*e2);",
      def);
  const auto& alg = ev.algebra;
  CHECK(ev.outputs[0].second == -ga::Multivector::generator(alg, 1));
  CHECK(ev.outputs[1].second ==
        ga::Multivector::from_terms(alg, {{0b00, 1.0}, {0b01, 7.0}, {0b10, -2.0}, {0b11, -1.0}}));
}

TEST_CASE("golden: two-qubit ket coordinates") {
  const AlgebraDefinition def = parse_definition(golden::kTwoQubitDefinition);
  const Evaluation ev = run_source(golden::kTwoQubitKetsScript, def);
  CHECK(format_outputs(ev) == golden::kTwoQubitKetsExpected);
}

TEST_CASE("golden: SWAP demonstration") {
  const AlgebraDefinition def = parse_definition(golden::kTwoQubitDefinition);
  const std::string source =
      std::string(golden::kTwoQubitKetsScript) + golden::kSwapScriptTail;
  const Evaluation ev = run_source(source, def);
  CHECK(format_outputs(ev) ==
        std::string(golden::kTwoQubitKetsExpected) + golden::kSwapExpectedTail);
}

TEST_CASE("evaluation is independent of whitespace and comments") {
  const AlgebraDefinition def = parse_definition(golden::kTwoQubitDefinition);
  const std::string original(golden::kTwoQubitKetsScript);

  std::string mangled;
  for (char c : original) {
    mangled += c;
    if (c == ';') mangled += "   // noise\n\t";
    if (c == '=') mangled += "  ";
  }
  CHECK(format_outputs(run_source(mangled, def)) ==
        format_outputs(run_source(original, def)));
}

TEST_CASE("evaluation and formatting are deterministic") {
  const AlgebraDefinition def = parse_definition(golden::kTwoQubitDefinition);
  const std::string source =
      std::string(golden::kTwoQubitKetsScript) + golden::kSwapScriptTail;
  const std::string a = format_outputs(run_source(source, def));
  const std::string b = format_outputs(run_source(source, def));
  CHECK(a == b);
}

TEST_CASE("random expression trees evaluate like direct products") {
  // Generates a random expression, renders it to source, runs it through the
  // interpreter, and checks the result against direct evaluation with the
  // library operations.
  const AlgebraDefinition def = g11_definition();
  const ga::AlgebraPtr alg = def.make_algebra();
  std::mt19937 rng(80808);
  std::uniform_int_distribution<int> pick_kind(0, 9);
  std::uniform_int_distribution<int> pick_leaf(0, 2);
  std::uniform_int_distribution<int> pick_num(0, 8);

  struct Node {
    std::string source;
    ga::Multivector value;
  };

  auto leaf = [&]() -> Node {
    switch (pick_leaf(rng)) {
      case 0: return {"e1", ga::Multivector::generator(alg, 1)};
      case 1: return {"e2", ga::Multivector::generator(alg, 2)};
      default: {
        const int n = pick_num(rng);
        return {std::to_string(n), ga::Multivector::scalar(alg, n)};
      }
    }
  };

  std::function<Node(int)> gen = [&](int depth) -> Node {
    if (depth == 0) return leaf();
    switch (pick_kind(rng)) {
      case 0: case 1: case 2: {
        const Node a = gen(depth - 1), b = gen(depth - 1);
        return {"(" + a.source + "+" + b.source + ")", a.value + b.value};
      }
      case 3: case 4: {
        const Node a = gen(depth - 1), b = gen(depth - 1);
        return {"(" + a.source + "-" + b.source + ")", a.value - b.value};
      }
      case 5: case 6: case 7: {
        const Node a = gen(depth - 1), b = gen(depth - 1);
        return {"(" + a.source + "*" + b.source + ")", a.value * b.value};
      }
      case 8: {
        const Node a = gen(depth - 1), b = gen(depth - 1);
        return {"(" + a.source + "^" + b.source + ")", a.value ^ b.value};
      }
      default: {
        const Node a = gen(depth - 1);
        return {"-" + a.source, -a.value};
      }
    }
  };

  for (int round = 0; round < 100; ++round) {
    const Node node = gen(4);
    const Evaluation ev = run_source("?out = " + node.source + ";", def);
    REQUIRE(ev.outputs.size() == 1);
    CHECK(ev.outputs[0].second == node.value);
  }
}

TEST_CASE("output formatting details") {
  const AlgebraDefinition def = parse_definition(golden::kTwoQubitDefinition);

  // zero multivector emits no lines
  const Evaluation zero = run_source("?z = e1 - e1;", def);
  CHECK(format_outputs(zero).empty());

  // prune threshold drops small coordinates
  const Evaluation tiny = run_source("?t = e1 + 0.0000001*e2;", def);
  CHECK(format_outputs(tiny, 1e-6) == "t[1] = 1.0; // e1\n");

  // repeated output names appear once per statement
  const Evaluation twice = run_source("?a = e1; ?a = e2;", def);
  CHECK(format_outputs(twice) == "a[1] = 1.0; // e1\na[2] = 1.0; // e2\n");
}

TEST_CASE("json output carries the same triples") {
  const AlgebraDefinition def = parse_definition(golden::kTwoQubitDefinition);
  const Evaluation ev = run_source(golden::kTwoQubitKetsScript, def);

  const nlohmann::json parsed = nlohmann::json::parse(format_outputs_json(ev));
  REQUIRE(parsed.is_array());
  REQUIRE(parsed.size() == 4);
  CHECK(parsed[0]["name"] == "ket00");
  CHECK(parsed[0]["coords"].size() == 4);
  CHECK(parsed[0]["coords"][0]["index"] == 0);
  CHECK(parsed[0]["coords"][0]["value"] == 0.25);
  CHECK(parsed[0]["coords"][0]["blade"] == "1.0");

  // same (index, value, blade) triples as the text format, name by name
  std::size_t entry = 0;
  for (const auto& [name, mv] : ev.outputs) {
    const auto& block = parsed[entry++];
    CHECK(block["name"] == name);
    std::size_t c = 0;
    for (const auto& term : mv.terms()) {
      (void)term;
      ++c;
    }
    CHECK(block["coords"].size() == c);
  }
}
