// buchi-cli: command-line front end over the C API.
//
// Exit codes: 0 success (decide: TRUE), 1 negative verdict (decide: FALSE,
// cm-check/cm-witness: a check failed), 2 error.

#include <CLI11.hpp>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <memory>
#include <sstream>
#include <string>

#include "buchi/buchi.h"

namespace {

using json = nlohmann::ordered_json;

struct Options {
  unsigned base = 2;
  std::uint64_t state_cap = 0;
  std::uint64_t rank_cap = 6;
  std::size_t limit = 10;
  std::string bound = "16";
  bool json = false;
  std::uint64_t seed = 7;
  std::string out, dot, domain;
  bool mutated = false;
};

struct Failure {
  int code;
  std::string message;
};

void check(buchi_status s) {
  if (s == BUCHI_OK) return;
  throw Failure{2, buchi_last_error()};
}

struct FormulaDeleter {
  void operator()(buchi_formula* f) const { buchi_formula_free(f); }
};
struct DfaDeleter {
  void operator()(buchi_dfa* d) const { buchi_dfa_free(d); }
};
struct StringDeleter {
  void operator()(char* s) const { buchi_string_free(s); }
};
using FormulaHandle = std::unique_ptr<buchi_formula, FormulaDeleter>;
using DfaHandle = std::unique_ptr<buchi_dfa, DfaDeleter>;
using OwnedString = std::unique_ptr<char, StringDeleter>;

// "@path" reads the formula from a file.
std::string formula_text(const std::string& arg) {
  if (arg.empty() || arg[0] != '@') return arg;
  std::ifstream in(arg.substr(1));
  if (!in) throw Failure{2, "cannot read " + arg.substr(1)};
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

FormulaHandle parse(const std::string& arg) {
  buchi_formula* f = nullptr;
  check(buchi_formula_parse(formula_text(arg).c_str(), &f));
  return FormulaHandle(f);
}

buchi_config config(const Options& o) {
  buchi_config cfg;
  buchi_config_init(&cfg);
  cfg.base = o.base;
  if (o.state_cap) cfg.state_cap = o.state_cap;
  return cfg;
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out || !(out << text)) throw Failure{2, "cannot write " + path};
}

int cmd_decide(const std::string& text, const Options& o) {
  auto f = parse(text);
  auto cfg = config(o);
  int verdict = 0;
  check(buchi_decide(f.get(), &cfg, &verdict));
  if (o.json) std::cout << json{{"verdict", verdict != 0}}.dump() << "\n";
  else std::cout << (verdict ? "TRUE" : "FALSE") << "\n";
  return verdict ? 0 : 1;
}

int cmd_compile(const std::string& text, const Options& o) {
  auto f = parse(text);
  auto cfg = config(o);
  buchi_dfa* raw = nullptr;
  check(buchi_compile(f.get(), &cfg, &raw));
  DfaHandle d(raw);
  char* s = nullptr;
  check(buchi_dfa_to_json(d.get(), &s));
  OwnedString body(s);
  if (o.out.empty()) std::cout << body.get() << "\n";
  else write_file(o.out, std::string(body.get()) + "\n");
  if (!o.dot.empty()) {
    check(buchi_dfa_to_dot(d.get(), &s));
    OwnedString dot(s);
    write_file(o.dot, dot.get());
  }
  if (!o.out.empty()) std::cerr << buchi_dfa_state_count(d.get()) << " states\n";
  return 0;
}

int cmd_solve(const std::string& text, const Options& o) {
  auto f = parse(text);
  auto cfg = config(o);
  char* s = nullptr;
  check(buchi_solve(f.get(), &cfg, o.limit, &s));
  OwnedString body(s);
  if (o.json) {
    std::cout << body.get() << "\n";
    return 0;
  }
  auto j = json::parse(body.get());
  const auto& vars = j["vars"];
  for (const auto& row : j["solutions"]) {
    std::string line;
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (i) line += " ";
      line += vars.size() == 1 ? row[i].get<std::string>() : vars[i].get<std::string>() + "=" + row[i].get<std::string>();
    }
    std::cout << line << "\n";
  }
  return 0;
}

int cmd_count(const std::string& text, const Options& o) {
  auto f = parse(text);
  auto cfg = config(o);
  char* s = nullptr;
  check(buchi_count(f.get(), &cfg, o.bound.c_str(), &s));
  OwnedString n(s);
  if (o.json) std::cout << json{{"bound", o.bound}, {"count", n.get()}}.dump() << "\n";
  else std::cout << n.get() << "\n";
  return 0;
}

int cmd_rank(const std::string& text, const Options& o) {
  auto relation = parse(text);
  FormulaHandle domain;
  if (!o.domain.empty()) domain = parse(o.domain);
  auto cfg = config(o);
  char* s = nullptr;
  check(buchi_rank(relation.get(), domain.get(), &cfg, o.rank_cap, &s));
  OwnedString body(s);
  if (o.json) {
    std::cout << body.get() << "\n";
    return 0;
  }
  auto j = json::parse(body.get());
  std::string outcome = j["outcome"];
  if (outcome == "FiniteRank") std::cout << "FiniteRank(" << j["value"].get<std::uint64_t>() << ")\n";
  else if (outcome == "CapExceeded") std::cout << "CapExceeded(" << j["cap"].get<std::uint64_t>() << ")\n";
  else std::cout << outcome << "\n";
  for (const auto& step : j["steps"])
    std::cout << "  step " << step["alpha"].get<std::uint64_t>() << ": equivalence "
              << step["equivalenceStates"].get<std::uint64_t>() << " states, representatives "
              << step["representativeStates"].get<std::uint64_t>() << " states, quotient "
              << (step["quotientFinite"].get<bool>() ? "finite" : "infinite") << "\n";
  return 0;
}

int cmd_order_gen(unsigned k, const Options& o) {
  buchi_formula* raw = nullptr;
  check(buchi_order_formula(k, &raw));
  FormulaHandle f(raw);
  char* s = nullptr;
  check(buchi_formula_render(f.get(), &s));
  OwnedString text(s);
  if (o.json) std::cout << json{{"k", k}, {"formula", text.get()}}.dump() << "\n";
  else std::cout << text.get() << "\n";
  return 0;
}

int cmd_cm_check(std::uint64_t samples, const Options& o) {
  int ok = 0;
  char* js = nullptr;
  char* table = nullptr;
  check(buchi_cm_check(samples, o.seed, o.mutated ? 1 : 0, &ok, &js, &table));
  OwnedString j(js), t(table);
  std::cout << (o.json ? j.get() : t.get());
  if (o.json) std::cout << "\n";
  return ok ? 0 : 1;
}

int cmd_cm_witness(const std::string& p, const Options& o) {
  int ok = 0;
  char* s = nullptr;
  check(buchi_cm_witness(p.c_str(), &ok, &s));
  OwnedString body(s);
  if (o.json) {
    std::cout << body.get() << "\n";
    return ok ? 0 : 1;
  }
  auto j = json::parse(body.get());
  std::cout << "x = " << j["x"].get<std::string>() << "\n" << "y = " << j["y"].get<std::string>() << "\n";
  for (const auto& [fact, holds] : j["checks"].items())
    std::cout << "  " << fact << ": " << (holds.get<bool>() ? "holds" : "FAILS") << "\n";
  std::cout << (ok ? "all checks pass" : "some checks fail") << "\n";
  return ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Decision procedure and experiments for arithmetic with V_n"};
  app.require_subcommand(1);
  Options o;

  auto common = [&](CLI::App* sub) {
    sub->add_option("--base", o.base, "Digit base (>= 2)");
    sub->add_option("--state-cap", o.state_cap, "Abort when an automaton exceeds this many states");
    sub->add_flag("--json", o.json, "Machine-readable output");
  };

  std::string formula, p;
  unsigned k = 0;
  std::uint64_t samples = 0;

  auto* decide = app.add_subcommand("decide", "Decide a sentence");
  decide->add_option("sentence", formula, "Sentence, or @file")->required();
  common(decide);

  auto* compile = app.add_subcommand("compile", "Compile a formula to an automaton");
  compile->add_option("formula", formula, "Formula, or @file")->required();
  compile->add_option("--out", o.out, "Write JSON here instead of stdout");
  compile->add_option("--dot", o.dot, "Also write Graphviz DOT here");
  common(compile);

  auto* solve = app.add_subcommand("solve", "List solutions in canonical order");
  solve->add_option("formula", formula, "Formula, or @file")->required();
  solve->add_option("--limit", o.limit, "Maximum number of solutions");
  common(solve);

  auto* count = app.add_subcommand("count", "Count solutions with all coordinates below a bound");
  count->add_option("formula", formula, "Formula, or @file")->required();
  count->add_option("--bound", o.bound, "Exclusive bound on every coordinate");
  common(count);

  auto* rank = app.add_subcommand("rank", "Condensation rank of a definable order");
  rank->add_option("relation", formula, "Relation in a, b meaning a <= b, or @file")->required();
  rank->add_option("--domain", o.domain, "Domain formula in one variable, or @file");
  rank->add_option("--rank-cap", o.rank_cap, "Give up after this many condensation steps");
  common(rank);

  auto* order_gen = app.add_subcommand("order-gen", "Print the k-th lexicographic valuation order");
  order_gen->add_option("k", k, "Order index (>= 1)")->required();
  order_gen->add_flag("--json", o.json, "Machine-readable output");

  auto* cm_check = app.add_subcommand("cm-check", "Sample-check axioms 1-14 in the countermodel");
  cm_check->add_option("samples", samples, "Samples per axiom")->required();
  cm_check->add_option("--seed", o.seed, "Sampler seed");
  cm_check->add_flag("--json", o.json, "Machine-readable output");
  cm_check->add_flag("--mutated-v2", o.mutated, "Use the broken V_2 (odd elements map to 2)");

  auto* cm_witness = app.add_subcommand("cm-witness", "Refute the separating sentence at (p,0), (3p/2,0)");
  cm_witness->add_option("p", p, "Positive rational a/b")->required();
  cm_witness->add_flag("--json", o.json, "Machine-readable output");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (*decide) return cmd_decide(formula, o);
    if (*compile) return cmd_compile(formula, o);
    if (*solve) return cmd_solve(formula, o);
    if (*count) return cmd_count(formula, o);
    if (*rank) return cmd_rank(formula, o);
    if (*order_gen) return cmd_order_gen(k, o);
    if (*cm_check) return cmd_cm_check(samples, o);
    if (*cm_witness) return cmd_cm_witness(p, o);
  } catch (const Failure& f) {
    std::cerr << "error: " << f.message << "\n";
    return f.code;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
