#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "buchi/oracle.hpp"
#include "buchi/syntax.hpp"
#include "support.hpp"

using namespace buchi;
using namespace buchi::syntax;

namespace {

const char* kSeparating = "A x. (V(x) = x -> A y. ((x < y & y < x + x) -> V(y) < y))";

}  // namespace

TEST_CASE("parse simple atoms") {
  auto f = parse("x = x");
  const auto* c = std::get_if<Comparison>(&f->node);
  REQUIRE(c);
  CHECK(c->op == CompareOp::Eq);
  CHECK(render(f) == "x = x");
  CHECK(render(parse("V(0) = 0")) == "V(0) = 0");
}

TEST_CASE("parse quantifiers") {
  auto f = parse("E y. x + y = 5");
  const auto* q = std::get_if<Quantified>(&f->node);
  REQUIRE(q);
  CHECK(q->quantifier == Quantifier::Exists);
  CHECK(q->var == "y");
  CHECK(free_vars(f) == std::vector<std::string>{"x"});

  auto s = parse(kSeparating);
  CHECK(free_vars(s).empty());
  CHECK(has_quantifier(*s));
  CHECK(free_vars(parse("E y. x + y = z")) == std::vector<std::string>{"x", "z"});
}

TEST_CASE("precedence and associativity") {
  // & binds tighter than |, which binds tighter than ->, then <->.
  CHECK(alpha_equivalent(parse("x = 1 | x = 2 & x = 3"), parse("x = 1 | (x = 2 & x = 3)")));
  CHECK(alpha_equivalent(parse("x = 1 -> x = 2 -> x = 3"), parse("x = 1 -> (x = 2 -> x = 3)")));
  CHECK(alpha_equivalent(parse("x = 1 <-> x = 2 | x = 3"), parse("x = 1 <-> (x = 2 | x = 3)")));
  CHECK(alpha_equivalent(parse("!x = 1 & x = 2"), parse("(!x = 1) & x = 2")));
  // A quantifier body extends as far right as possible.
  CHECK(alpha_equivalent(parse("E y. y = x & y = 2"), parse("E y. (y = x & y = 2)")));
  CHECK(alpha_equivalent(parse("2*x + 1 = y"), parse("x + x + 1 = y")) == false);
}

TEST_CASE("parenthesized terms") {
  CHECK(alpha_equivalent(parse("(x + y) + z = w"), parse("x + y + z = w")));
  CHECK(alpha_equivalent(parse("((x)) < 2*(y)"), parse("x < 2*y")));
  CHECK(alpha_equivalent(parse("((x = y))"), parse("x = y")));
  CHECK(alpha_equivalent(parse("(x) % 3 = 1"), parse("x % 3 = 1")));
  auto f = parse("2*(x + 1) = y");
  oracle::Assignment as{{"x", 4}, {"y", 10}};
  CHECK(oracle::eval_bounded(*f, as, 1, 2));
}

TEST_CASE("parse errors carry positions") {
  auto expect_error = [](const char* text, std::size_t pos) {
    try {
      parse(text);
      FAIL("expected a parse error for " << text);
    } catch (const ParseError& e) {
      CHECK(e.position() == pos);
    }
  };
  expect_error("x = ", 4);
  expect_error("x == y", 3);
  expect_error("_t1 = x", 0);
  expect_error("x # y", 2);
  CHECK_THROWS_AS(parse("x % 1 = 0"), ParseError);
  CHECK_THROWS_AS(parse("x % 3 = 3"), ParseError);
  expect_error("(x = y", 6);
  expect_error("(x + y = ", 9);
  CHECK_THROWS_AS(parse("E . x = x"), ParseError);
}

TEST_CASE("render round-trips the separating sentence") {
  auto s = parse(kSeparating);
  CHECK(alpha_equivalent(parse(render(s)), s));
}

TEST_CASE("alpha equivalence and renaming") {
  CHECK(alpha_equivalent(parse("E y. x < y"), parse("E z. x < z")));
  CHECK_FALSE(alpha_equivalent(parse("E y. x < y"), parse("E x. x < x")));
  // Renaming x to y must not be captured by the binder of y.
  auto r = rename_free(parse("E y. x < y"), {{"x", "y"}});
  CHECK(free_vars(r) == std::vector<std::string>{"y"});
  CHECK(alpha_equivalent(r, parse("E z. y < z")));
  // Simultaneous swap.
  CHECK(alpha_equivalent(rename_free(parse("a < b"), {{"a", "b"}, {"b", "a"}}), parse("b < a")));
}

TEST_CASE("normalize examples") {
  auto n = normalize(parse("V(x) = x"));
  const auto* a = std::get_if<CoreAtom>(&n->node);
  REQUIRE(a);
  CHECK(a->kind == AtomKind::VEq);
  CHECK(a->args == std::vector<std::string>{"x", "x"});

  auto sum5 = normalize(parse("x + y = 5"));
  CHECK(is_core(*sum5));
  CHECK(free_vars(sum5) == std::vector<std::string>{"x", "y"});
  const auto* q = std::get_if<Quantified>(&sum5->node);
  REQUIRE(q);
  CHECK(q->quantifier == Quantifier::Exists);

  auto triple = normalize(parse("3 * x = y"));
  std::string text = render(triple);
  CHECK(text.find("x + x = _t") != std::string::npos);
  CHECK((text.find("x + _t0 = y") != std::string::npos || text.find("_t0 + x = y") != std::string::npos));
  for (unsigned x = 0; x < 100; ++x)
    for (unsigned y = 0; y < 100; ++y) {
      oracle::Assignment as{{"x", x}, {"y", y}};
      CHECK_MESSAGE(oracle::eval_bounded(*triple, as, 400, 2) == (3 * x == y), x << "," << y);
    }
}

TEST_CASE("normalize keeps comparisons with constants") {
  for (const char* text : {"x < 5", "5 <= x", "x != 3", "x >= y + 2", "V(x + 1) > 2", "x % 4 = 3", "2 * V(x) = 0"}) {
    auto f = parse(text);
    auto n = normalize(f);
    CHECK(is_core(*n));
    auto nv = free_vars(n), fv = free_vars(f);
    CHECK(std::set<std::string>(nv.begin(), nv.end()) == std::set<std::string>(fv.begin(), fv.end()));
    for (unsigned x = 0; x < 64; ++x)
      for (unsigned y = 0; y < 8; ++y) {
        oracle::Assignment as{{"x", x}, {"y", y}};
        CHECK_MESSAGE(oracle::eval_bounded(*n, as, 1024, 2) == oracle::eval_bounded(*f, as, 1024, 2),
                      text << " at " << x << "," << y);
      }
  }
}

TEST_CASE("property: parse of render is alpha-equivalent") {
  testgen::Gen g(11);
  for (int i = 0; i < 500; ++i) {
    auto f = g.with_quantifiers(4);
    auto back = parse(render(f));
    CHECK_MESSAGE(alpha_equivalent(back, f), render(f));
  }
}

TEST_CASE("property: normalize preserves truth and yields core atoms") {
  testgen::Gen g(12);
  const Natural bound = 1 << 12;
  for (int i = 0; i < 200; ++i) {
    auto f = g.quantifier_free(3);
    auto n = normalize(f);
    REQUIRE(is_core(*n));
    auto fv = free_vars(f);
    // Same variables; flipped comparisons may change first-use order.
    auto nv = free_vars(n);
    CHECK(std::set<std::string>(nv.begin(), nv.end()) == std::set<std::string>(fv.begin(), fv.end()));
    for (int j = 0; j < 10; ++j) {
      oracle::Assignment as;
      for (const auto& v : fv) as[v] = g.below(1 << 12);
      // Fresh witnesses are functions of the inputs and may exceed the
      // input range, so give the normalized side a larger bound.
      CHECK_MESSAGE(oracle::eval_bounded(*n, as, Natural(1) << 40, 2) == oracle::eval_bounded(*f, as, bound, 2),
                    render(f));
    }
  }
}
