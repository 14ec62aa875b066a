#include "buchi/orders.hpp"

#include <stdexcept>

namespace buchi::orders {

using automata::Dfa;
using compiler::CompileConfig;
using compiler::PredicateEnv;
using namespace syntax;

OrderSpec make_order_spec(FormulaPtr relation, FormulaPtr domain) {
  auto fv = free_vars(*relation);
  if (fv.size() != 2) throw std::invalid_argument("an order relation needs exactly two free variables");
  OrderSpec spec;
  spec.relation = std::move(relation);
  spec.domain = domain ? std::move(domain) : compare(CompareOp::Eq, var("x"), var("x"));
  if (free_vars(*spec.domain).size() != 1) throw std::invalid_argument("a domain needs exactly one free variable");
  bool named = (fv[0] == "a" && fv[1] == "b") || (fv[0] == "b" && fv[1] == "a");
  spec.lhs = named ? "a" : fv[0];
  spec.rhs = named ? "b" : fv[1];
  return spec;
}

FormulaPtr order_formula(unsigned k) {
  if (k == 0) throw std::invalid_argument("order index must be at least 1");
  if (k == 1) return compare(CompareOp::Le, var("a"), var("b"));

  // u_1 = x, u_{i+1} + V(u_i) = u_i.
  auto chain = [](const std::string& x, unsigned i) { return i == 1 ? x : x + std::to_string(i); };
  std::vector<FormulaPtr> defs;
  for (unsigned i = 1; i + 1 < k; ++i)
    for (const char* x : {"a", "b"})
      defs.push_back(compare(CompareOp::Eq, sum(var(chain(x, i + 1)), v_of(var(chain(x, i)))), var(chain(x, i))));

  std::vector<FormulaPtr> disjuncts;
  for (unsigned i = 1; i <= k; ++i) {
    std::vector<FormulaPtr> parts;
    for (unsigned j = 1; j < i; ++j)
      parts.push_back(compare(CompareOp::Eq, v_of(var(chain("a", j))), v_of(var(chain("b", j)))));
    if (i < k) parts.push_back(compare(CompareOp::Lt, v_of(var(chain("a", i))), v_of(var(chain("b", i)))));
    else parts.push_back(compare(CompareOp::Le, var("a"), var("b")));
    disjuncts.push_back(conj_all(parts));
  }
  FormulaPtr body = disj_all(disjuncts);
  if (defs.empty()) return body;
  defs.push_back(body);
  body = conj_all(defs);
  for (unsigned i = k - 1; i >= 2; --i) body = exists(chain("a", i), exists(chain("b", i), body));
  return body;
}

bool compare_direct(unsigned k, const Natural& x, const Natural& y, unsigned base) {
  if (k == 0) throw std::invalid_argument("order index must be at least 1");
  auto key = [&](Natural u) {
    std::vector<Natural> out;
    for (unsigned i = 1; i < k; ++i) {
      Natural kappa = largest_power_dividing(u, base);  // 0 once u reaches 0
      out.push_back(kappa);
      u -= kappa;
    }
    return out;
  };
  auto kx = key(x), ky = key(y);
  for (std::size_t i = 0; i < kx.size(); ++i)
    if (kx[i] != ky[i]) return kx[i] < ky[i];
  return x <= y;
}

namespace {

FormulaPtr rel(const OrderSpec& s, const std::string& u, const std::string& v) {
  return rename_free(s.relation, {{s.lhs, u}, {s.rhs, v}});
}

FormulaPtr dom(const OrderSpec& s, const std::string& u) {
  return rename_free(s.domain, {{free_vars(*s.domain).front(), u}});
}

FormulaPtr eq(const std::string& u, const std::string& v) { return compare(CompareOp::Eq, var(u), var(v)); }

FormulaPtr atom(AtomKind kind, std::vector<std::string> args) { return core(CoreAtom{kind, std::move(args), 0, 0}); }

FormulaPtr pred(const std::string& name, std::vector<std::string> args) { return predicate(name, std::move(args)); }

// Relation and domain automata shared by the condensation steps, with
// tracks renamed to (a, b) and (x).
struct OrderAutomata {
  PredicateEnv env;

  OrderAutomata(const OrderSpec& spec, const CompileConfig& cfg) {
    // Predicates bind arguments by track position, so fix the track order.
    env["Le"] = automata::align_tracks(compiler::compile(rel(spec, "a", "b"), cfg), {"a", "b"});
    env["D"] = compiler::compile(dom(spec, "x"), cfg);
    // Strictly between a and c and b, in either direction, within the domain.
    auto strict = [](const std::string& u, const std::string& v) {
      return conj(pred("Le", {u, v}), negate(atom(AtomKind::Eq, {u, v})));
    };
    auto between = conj(pred("D", {"c"}), disj(conj(strict("a", "c"), strict("c", "b")),
                                                conj(strict("b", "c"), strict("c", "a"))));
    env["B"] = automata::align_tracks(compiler::compile(between, cfg, env), {"a", "b", "c"});
  }
};

Dfa step_with(const OrderAutomata& oa, const Dfa& equivalence, const CompileConfig& cfg) {
  PredicateEnv env = oa.env;
  env["E"] = automata::align_tracks(equivalence, {"a", "b"});
  // c counts a class of E inside the interval iff no smaller member of its
  // class lies in the interval.
  auto representative = conj(pred("B", {"a", "b", "c"}),
                             negate(exists("d", conj_all({pred("B", {"a", "b", "d"}), pred("E", {"c", "d"}),
                                                          atom(AtomKind::Lt, {"d", "c"})}))));
  auto f = conj_all({pred("D", {"a"}), pred("D", {"b"}), negate(exists_inf("c", representative))});
  return compiler::compile(f, cfg, env);
}

Dfa representatives_with(const OrderAutomata& oa, const Dfa& equivalence, const CompileConfig& cfg) {
  PredicateEnv env = oa.env;
  env["E"] = automata::align_tracks(equivalence, {"a", "b"});
  auto f = conj(pred("D", {"c"}),
                negate(exists("d", conj_all({pred("D", {"d"}), pred("E", {"c", "d"}), atom(AtomKind::Lt, {"d", "c"})}))));
  return compiler::compile(f, cfg, env);
}

void require_equivalence_tracks(const Dfa& e) {
  if (e.arity() != 2 || e.track_index("a") < 0 || e.track_index("b") < 0)
    throw std::invalid_argument("equivalence automaton must have tracks (a, b)");
}

}  // namespace

std::vector<OrderProperty> linear_order_properties(const OrderSpec& spec, const CompileConfig& cfg) {
  std::vector<OrderProperty> out;
  out.push_back({"reflexivity", forall("a", implies(dom(spec, "a"), rel(spec, "a", "a")))});
  out.push_back({"antisymmetry",
                 forall("a", forall("b", implies(conj_all({dom(spec, "a"), dom(spec, "b"), rel(spec, "a", "b"),
                                                           rel(spec, "b", "a")}),
                                                 eq("a", "b"))))});
  out.push_back(
      {"transitivity",
       forall("a", forall("b", forall("c", implies(conj_all({dom(spec, "a"), dom(spec, "b"), dom(spec, "c"),
                                                             rel(spec, "a", "b"), rel(spec, "b", "c")}),
                                                   rel(spec, "a", "c")))))});
  out.push_back({"totality", forall("a", forall("b", implies(conj(dom(spec, "a"), dom(spec, "b")),
                                                             disj(rel(spec, "a", "b"), rel(spec, "b", "a")))))});
  for (auto& p : out) p.holds = compiler::decide(p.sentence, cfg);
  return out;
}

bool check_linear_order(const OrderSpec& spec, const CompileConfig& cfg) {
  for (const auto& p : linear_order_properties(spec, cfg))
    if (!p.holds) return false;
  return true;
}

Dfa equality_on_domain(const OrderSpec& spec, const CompileConfig& cfg) {
  return compiler::compile(conj(dom(spec, "a"), eq("a", "b")), cfg);
}

Dfa condensation_step(const Dfa& equivalence, const OrderSpec& spec, const CompileConfig& cfg) {
  require_equivalence_tracks(equivalence);
  return step_with(OrderAutomata(spec, cfg), equivalence, cfg);
}

Dfa class_representatives(const Dfa& equivalence, const OrderSpec& spec, const CompileConfig& cfg) {
  require_equivalence_tracks(equivalence);
  return representatives_with(OrderAutomata(spec, cfg), equivalence, cfg);
}

RankResult rank(const OrderSpec& spec, std::uint64_t cap, const CompileConfig& cfg) {
  for (const auto& p : linear_order_properties(spec, cfg))
    if (!p.holds) throw NotALinearOrder(p.name, render(p.sentence));

  OrderAutomata oa(spec, cfg);
  RankResult result{RankResult::Outcome::CapExceeded, 0, cap, {}};
  Dfa e = equality_on_domain(spec, cfg);
  for (std::uint64_t alpha = 0;; ++alpha) {
    if (alpha > 0) {
      Dfa next = step_with(oa, e, cfg);
      bool fixpoint = automata::equivalent(next, e, cfg.state_cap);
      e = std::move(next);
      if (fixpoint) {
        // Same relation as the previous stage, whose quotient was infinite.
        result.steps.push_back({alpha, e.state_count(), result.steps.back().representative_states, false});
        result.outcome = RankResult::Outcome::InfiniteByFixpoint;
        return result;
      }
    }
    Dfa reps = representatives_with(oa, e, cfg);
    bool finite = automata::is_finite(reps);
    result.steps.push_back({alpha, e.state_count(), reps.state_count(), finite});
    if (finite) {
      result.outcome = RankResult::Outcome::FiniteRank;
      result.value = alpha;
      return result;
    }
    if (alpha >= cap) return result;
  }
}

std::string to_string(RankResult::Outcome o) {
  switch (o) {
    case RankResult::Outcome::FiniteRank: return "FiniteRank";
    case RankResult::Outcome::CapExceeded: return "CapExceeded";
    case RankResult::Outcome::InfiniteByFixpoint: return "InfiniteByFixpoint";
  }
  return "?";
}

}  // namespace buchi::orders
