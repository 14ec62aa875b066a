#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "buchi/oracle.hpp"
#include "support.hpp"

using namespace buchi;
using namespace buchi::syntax;
using oracle::Assignment;

namespace {

Natural term_value(const char* atom_text, const Assignment& a, unsigned base) {
  // Evaluates the left side of "t = 0".
  auto f = parse(atom_text);
  return oracle::eval_term(*std::get<Comparison>(f->node).lhs, a, base);
}

}  // namespace

TEST_CASE("term evaluation") {
  CHECK(term_value("V(12) = 0", {}, 2) == 4);
  CHECK(term_value("V(0) = 0", {}, 2) == 0);
  CHECK(term_value("V(5) = 0", {}, 2) == 1);
  CHECK(term_value("V(18) = 0", {}, 3) == 9);
  CHECK(term_value("3*x + V(y) = 0", {{"x", 4}, {"y", 40}}, 2) == 20);
  CHECK_THROWS_AS(term_value("x + 1 = 0", {}, 2), std::out_of_range);
  // Values beyond 64 bits.
  Natural big = Natural(1) << 100;
  CHECK(term_value("V(x + x) = 0", {{"x", big * 3}}, 2) == (Natural(1) << 101));
}

TEST_CASE("bounded evaluation") {
  CHECK(oracle::eval_bounded(*parse("x + y = z"), {{"x", 1}, {"y", 2}, {"z", 3}}, 1, 2));
  CHECK(oracle::eval_bounded(*parse("E y. x + y = 5"), {{"x", 2}}, 16, 2));
  CHECK_FALSE(oracle::eval_bounded(*parse("E y. x + y = 5"), {{"x", 6}}, 16, 2));
  CHECK(oracle::eval_bounded(*parse("A x. (V(x) = x -> A y. ((x < y & y < x + x) -> V(y) < y))"), {}, 1 << 10, 2));
  CHECK(oracle::eval_bounded(*parse("x % 3 = 2"), {{"x", 11}}, 1, 2));
  CHECK_THROWS_AS(oracle::eval_bounded(*parse("EINF y. x < y"), {{"x", 1}}, 4, 2), std::invalid_argument);
  // The pinned-existential shortcut gives the same bounded answer as a scan.
  CHECK_FALSE(oracle::eval_bounded(*parse("E y. x + 3 = y"), {{"x", 14}}, 16, 2));
  CHECK(oracle::eval_bounded(*parse("E y. x + 3 = y"), {{"x", 12}}, 16, 2));
}

TEST_CASE("brute-force solutions") {
  using S = std::set<std::vector<Natural>>;
  CHECK(oracle::brute_solutions(parse("x+x=y"), 6, 2) == S{{0, 0}, {1, 2}, {2, 4}});
  CHECK(oracle::brute_solutions(parse("V(x)=x"), 9, 2) == S{{0}, {1}, {2}, {4}, {8}});
  CHECK(oracle::brute_solutions(parse("x < x"), 32, 2).empty());
}

TEST_CASE("property: V(x) divides x with an indivisible quotient") {
  for (unsigned base : {2u, 3u, 10u})
    for (unsigned x = 1; x < (1u << 16); ++x) {
      Natural v = oracle::eval_term(*v_of(var("x")), {{"x", x}}, base);
      if (x % v != 0 || (x / v) % base == 0) FAIL("V fails at " << x << " base " << base);
    }
}

TEST_CASE("property: solutions grow with the bound") {
  // Only for existential formulas: a universal can turn false as its range grows.
  testgen::Gen g(31);
  for (int i = 0; i < 40; ++i) {
    auto f = exists(g.variable(), g.quantifier_free(2));
    auto fv = free_vars(f);
    if (fv.size() > 2) continue;
    auto small = oracle::brute_solutions(f, 8, 2);
    auto large = oracle::brute_solutions(f, 16, 2);
    for (const auto& t : small) CHECK_MESSAGE(large.count(t), render(f));
  }
}
