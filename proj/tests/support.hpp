#pragma once

// Random formula and tuple generators shared by the test binaries.

#include <random>
#include <string>
#include <vector>

#include "buchi/automata.hpp"
#include "buchi/syntax.hpp"

namespace testgen {

using namespace buchi;
using namespace buchi::syntax;

inline const std::vector<std::string> kVars = {"x", "y", "z"};

struct Gen {
  std::mt19937_64 rng;
  explicit Gen(std::uint64_t seed) : rng(seed) {}

  std::uint64_t below(std::uint64_t n) { return std::uniform_int_distribution<std::uint64_t>(0, n - 1)(rng); }
  bool chance(int percent) { return static_cast<int>(below(100)) < percent; }

  std::string variable() { return kVars[below(kVars.size())]; }

  TermPtr term(int depth) {
    if (depth <= 0 || chance(40)) return chance(75) ? var(variable()) : constant(below(64));
    switch (below(3)) {
      case 0: {
        // Likewise sums nest to the left, as the parser builds them.
        TermPtr rhs = term(depth - 1);
        while (std::holds_alternative<Sum>(rhs->node)) rhs = std::get<Sum>(rhs->node).rhs;
        return sum(term(depth - 1), rhs);
      }
      case 1: {
        // Scaled sums print distributed, so keep operands atomic here to
        // make render/parse round trips syntactic.
        TermPtr operand = chance(50) ? var(variable()) : v_of(term(depth - 1));
        return scale(1 + below(5), operand);
      }
      default: return v_of(term(depth - 1));
    }
  }

  FormulaPtr atom(int depth) {
    if (chance(15)) {
      std::uint64_t m = 2 + below(6);
      return congruence(term(depth), m, below(m));
    }
    static const CompareOp ops[] = {CompareOp::Eq, CompareOp::Ne, CompareOp::Lt,
                                    CompareOp::Le, CompareOp::Gt, CompareOp::Ge};
    return compare(ops[below(6)], term(depth), term(depth));
  }

  /// Quantifier-free, at most three free variables, constants below 64.
  FormulaPtr quantifier_free(int depth) {
    if (depth <= 0 || chance(30)) return atom(2);
    switch (below(5)) {
      case 0: return negate(quantifier_free(depth - 1));
      case 1: return conj(quantifier_free(depth - 1), quantifier_free(depth - 1));
      case 2: return disj(quantifier_free(depth - 1), quantifier_free(depth - 1));
      case 3: return implies(quantifier_free(depth - 1), quantifier_free(depth - 1));
      default: return iff(quantifier_free(depth - 1), quantifier_free(depth - 1));
    }
  }

  /// Like quantifier_free but with occasional quantifiers over x, y, z, w.
  FormulaPtr with_quantifiers(int depth) {
    if (depth <= 0 || chance(25)) return atom(1);
    switch (below(6)) {
      case 0: return negate(with_quantifiers(depth - 1));
      case 1: return conj(with_quantifiers(depth - 1), with_quantifiers(depth - 1));
      case 2: return disj(with_quantifiers(depth - 1), with_quantifiers(depth - 1));
      case 3: return implies(with_quantifiers(depth - 1), with_quantifiers(depth - 1));
      case 4: return exists(chance(50) ? "w" : variable(), with_quantifiers(depth - 1));
      default: return forall(chance(50) ? "w" : variable(), with_quantifiers(depth - 1));
    }
  }

  std::vector<Natural> tuple(std::size_t arity, std::uint64_t bound) {
    std::vector<Natural> out;
    for (std::size_t i = 0; i < arity; ++i) out.push_back(below(bound));
    return out;
  }
};

}  // namespace testgen
