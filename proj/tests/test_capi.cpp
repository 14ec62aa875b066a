// Exercises the shared library through its C header only.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <json.hpp>
#include <string>

#include "buchi/buchi.h"

namespace {

struct Str {
  char* p = nullptr;
  ~Str() { buchi_string_free(p); }
  std::string get() const { return p ? p : ""; }
};

buchi_formula* parse(const char* text) {
  buchi_formula* f = nullptr;
  REQUIRE(buchi_formula_parse(text, &f) == BUCHI_OK);
  return f;
}

}  // namespace

TEST_CASE("parse, render, free variables") {
  buchi_formula* f = parse("E y. x + y = z");
  Str r, fv;
  CHECK(buchi_formula_render(f, &r.p) == BUCHI_OK);
  CHECK(r.get() == "E y. x + y = z");
  CHECK(buchi_formula_free_vars(f, &fv.p) == BUCHI_OK);
  CHECK(fv.get() == "[\"x\",\"z\"]");
  buchi_formula* n = nullptr;
  CHECK(buchi_formula_normalize(f, &n) == BUCHI_OK);
  buchi_formula_free(n);
  buchi_formula_free(f);

  buchi_formula* bad = nullptr;
  CHECK(buchi_formula_parse("x == y", &bad) == BUCHI_ERR_PARSE);
  CHECK(bad == nullptr);
  CHECK(buchi_last_error_position() == 3);
  CHECK(std::string(buchi_last_error()).size() > 0);
  CHECK(buchi_formula_parse(nullptr, &bad) == BUCHI_ERR_INVALID_ARGUMENT);
  CHECK(std::string(buchi_version()) == "0.1.0");
}

TEST_CASE("compile and query automata") {
  buchi_config cfg;
  buchi_config_init(&cfg);
  CHECK(cfg.base == 2);
  buchi_formula* f = parse("V(x) = y");
  buchi_dfa* d = nullptr;
  REQUIRE(buchi_compile(f, &cfg, &d) == BUCHI_OK);
  CHECK(buchi_dfa_state_count(d) == 3);
  const char* yes[] = {"12", "4"};
  const char* no[] = {"12", "2"};
  int out = -1;
  CHECK(buchi_dfa_accepts(d, yes, 2, &out) == BUCHI_OK);
  CHECK(out == 1);
  CHECK(buchi_dfa_accepts(d, no, 2, &out) == BUCHI_OK);
  CHECK(out == 0);
  CHECK(buchi_dfa_accepts(d, yes, 1, &out) == BUCHI_ERR_INVALID_ARGUMENT);
  const char* junk[] = {"12", "four"};
  CHECK(buchi_dfa_accepts(d, junk, 2, &out) == BUCHI_ERR_INVALID_ARGUMENT);

  Str js, dot;
  REQUIRE(buchi_dfa_to_json(d, &js.p) == BUCHI_OK);
  REQUIRE(buchi_dfa_to_dot(d, &dot.p) == BUCHI_OK);
  buchi_dfa* back = nullptr;
  REQUIRE(buchi_dfa_from_json(js.p, &back) == BUCHI_OK);
  CHECK(buchi_dfa_equivalent(d, back, &out) == BUCHI_OK);
  CHECK(out == 1);
  buchi_dfa* none = nullptr;
  CHECK(buchi_dfa_from_json("{}", &none) == BUCHI_ERR_INVALID_ARGUMENT);

  buchi_dfa_free(back);
  buchi_dfa_free(d);
  buchi_formula_free(f);

  cfg.base = 1;
  buchi_formula* g = parse("x = x");
  CHECK(buchi_compile(g, &cfg, &d) == BUCHI_ERR_INVALID_ARGUMENT);
  buchi_config_init(&cfg);
  cfg.state_cap = 1;
  buchi_formula* h = parse("x % 7 = 3");
  CHECK(buchi_compile(h, &cfg, &d) == BUCHI_ERR_CAPACITY);
  buchi_formula_free(g);
  buchi_formula_free(h);
}

TEST_CASE("decide, solve, count") {
  buchi_config cfg;
  buchi_config_init(&cfg);
  int v = -1;
  buchi_formula* s = parse("A x. (V(x) = x -> A y. ((x < y & y < x + x) -> V(y) < y))");
  CHECK(buchi_decide(s, &cfg, &v) == BUCHI_OK);
  CHECK(v == 1);
  buchi_formula* open = parse("x = x");
  CHECK(buchi_decide(open, &cfg, &v) == BUCHI_ERR_NOT_SENTENCE);

  buchi_formula* f = parse("V(x)=x & 4 < x");
  Str sol;
  REQUIRE(buchi_solve(f, &cfg, 2, &sol.p) == BUCHI_OK);
  auto j = nlohmann::json::parse(sol.get());
  CHECK(j["vars"] == nlohmann::json::array({"x"}));
  CHECK(j["solutions"] == nlohmann::json::array({nlohmann::json::array({"8"}), nlohmann::json::array({"16"})}));

  buchi_formula* m = parse("x % 3 = 1");
  Str n;
  REQUIRE(buchi_count(m, &cfg, "10", &n.p) == BUCHI_OK);
  CHECK(n.get() == "3");
  Str bad;
  CHECK(buchi_count(m, &cfg, "ten", &bad.p) == BUCHI_ERR_INVALID_ARGUMENT);

  for (auto* p : {s, open, f, m}) buchi_formula_free(p);
}

TEST_CASE("orders") {
  buchi_config cfg;
  buchi_config_init(&cfg);
  buchi_formula* o2 = nullptr;
  REQUIRE(buchi_order_formula(2, &o2) == BUCHI_OK);
  Str r;
  REQUIRE(buchi_rank(o2, nullptr, &cfg, 6, &r.p) == BUCHI_OK);
  auto j = nlohmann::json::parse(r.get());
  CHECK(j["outcome"] == "FiniteRank");
  CHECK(j["value"] == 2);
  CHECK(j["steps"].size() == 3);
  CHECK(buchi_order_formula(0, &o2) == BUCHI_ERR_INVALID_ARGUMENT);

  buchi_formula* eq = parse("a = b");
  Str r2;
  CHECK(buchi_rank(eq, nullptr, &cfg, 6, &r2.p) == BUCHI_ERR_NOT_LINEAR_ORDER);
  CHECK(std::string(buchi_last_error()).find("totality") != std::string::npos);
  int ok = -1;
  Str props;
  CHECK(buchi_check_linear_order(eq, nullptr, &cfg, &ok, &props.p) == BUCHI_OK);
  CHECK(ok == 0);
  CHECK(nlohmann::json::parse(props.get())["totality"]["holds"] == false);

  int less = -1;
  CHECK(buchi_compare_direct(2, "101", "2", 2, &less) == BUCHI_OK);
  CHECK(less == 1);
  CHECK(buchi_compare_direct(2, "4", "6", 2, &less) == BUCHI_OK);
  CHECK(less == 0);
  buchi_formula_free(o2);
  buchi_formula_free(eq);
}

TEST_CASE("countermodel") {
  int ok = -1;
  Str js, table;
  REQUIRE(buchi_cm_check(500, 7, 0, &ok, &js.p, &table.p) == BUCHI_OK);
  CHECK(ok == 1);
  Str js2, table2;
  REQUIRE(buchi_cm_check(500, 7, 1, &ok, &js2.p, &table2.p) == BUCHI_OK);
  CHECK(ok == 0);
  CHECK(nlohmann::json::parse(js2.get())["axioms"]["13"]["failures"].get<int>() > 0);

  Str w;
  REQUIRE(buchi_cm_witness("1", &ok, &w.p) == BUCHI_OK);
  CHECK(ok == 1);
  auto j = nlohmann::json::parse(w.get());
  CHECK(j["x"] == "(1,0)");
  CHECK(j["y"] == "(3/2,0)");
  Str w2;
  CHECK(buchi_cm_witness("0", &ok, &w2.p) == BUCHI_ERR_INVALID_ARGUMENT);
  CHECK(buchi_cm_witness("x", &ok, &w2.p) == BUCHI_ERR_INVALID_ARGUMENT);
}
