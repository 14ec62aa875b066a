#pragma once

// Definable linear orders on the naturals: the lexicographic valuation
// orders, a direct numeric comparator for them, and condensation rank of an
// arbitrary definable order computed with automata.

#include <cstdint>
#include <string>
#include <vector>

#include "buchi/automata.hpp"
#include "buchi/compiler.hpp"
#include "buchi/syntax.hpp"

namespace buchi::orders {

/// A definable order: `relation` holds of (lhs, rhs) iff lhs <= rhs, over the
/// naturals satisfying `domain` (one free variable).
struct OrderSpec {
  syntax::FormulaPtr relation;
  syntax::FormulaPtr domain;
  std::string lhs = "a";
  std::string rhs = "b";
};

/// Builds a spec from a relation with exactly two free variables. If those
/// are `a` and `b` they take those roles; otherwise the first free variable
/// is the left side. A null domain means all naturals.
OrderSpec make_order_spec(syntax::FormulaPtr relation, syntax::FormulaPtr domain = nullptr);

/// The k-th order: compares (V(u_1), ..., V(u_{k-1}), x) lexicographically,
/// where u_1 = x and u_{i+1} = u_i - V(u_i). Free variables a, b.
syntax::FormulaPtr order_formula(unsigned k);

/// Evaluates order_formula(k) on (x, y) numerically.
bool compare_direct(unsigned k, const Natural& x, const Natural& y, unsigned base);

struct OrderProperty {
  std::string name;  // reflexivity, antisymmetry, transitivity, totality
  syntax::FormulaPtr sentence;
  bool holds = false;
};

/// Decides the four linear-order axioms for the relation on its domain.
std::vector<OrderProperty> linear_order_properties(const OrderSpec& spec, const compiler::CompileConfig& cfg);
bool check_linear_order(const OrderSpec& spec, const compiler::CompileConfig& cfg);

/// Thrown by rank() when the relation is not a linear order.
class NotALinearOrder : public std::invalid_argument {
public:
  NotALinearOrder(const std::string& property, const std::string& sentence)
      : std::invalid_argument("not a linear order: " + property + " fails (" + sentence + ")"),
        property_(property) {}
  const std::string& property() const noexcept { return property_; }

private:
  std::string property_;
};

/// Equality restricted to the domain, over tracks (a, b).
automata::Dfa equality_on_domain(const OrderSpec& spec, const compiler::CompileConfig& cfg);

/// Given the automaton over (a, b) of one condensation equivalence, the
/// automaton of the next: a and b are related iff finitely many classes of
/// `equivalence` meet the open interval between them.
automata::Dfa condensation_step(const automata::Dfa& equivalence, const OrderSpec& spec,
                                const compiler::CompileConfig& cfg);

/// Domain elements that are numerically least in their class, over track (c).
automata::Dfa class_representatives(const automata::Dfa& equivalence, const OrderSpec& spec,
                                    const compiler::CompileConfig& cfg);

struct RankStep {
  std::uint64_t alpha;
  std::size_t equivalence_states;
  std::size_t representative_states;
  bool quotient_finite;
};

struct RankResult {
  enum class Outcome { FiniteRank, CapExceeded, InfiniteByFixpoint };
  Outcome outcome;
  std::uint64_t value = 0;  // rank when FiniteRank
  std::uint64_t cap = 0;
  std::vector<RankStep> steps;
};

constexpr std::uint64_t kDefaultRankCap = 6;

/// Condensation rank, iterating finitely many steps. Throws NotALinearOrder
/// when the axioms fail and CapacityExceeded when the state cap is hit.
RankResult rank(const OrderSpec& spec, std::uint64_t cap, const compiler::CompileConfig& cfg);

std::string to_string(RankResult::Outcome o);

}  // namespace buchi::orders
