#pragma once

// Translation of formulas into automata over base-n digit tuples, and the
// decision procedure for sentences built on it.

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "buchi/automata.hpp"
#include "buchi/syntax.hpp"

namespace buchi::compiler {

struct CompileConfig {
  unsigned base = 2;
  std::uint64_t state_cap = automata::kDefaultStateCap;
  bool minimize_each_step = true;
};

/// Named relations available to Predicate atoms. Each automaton's tracks are
/// the relation's positional arguments.
using PredicateEnv = std::map<std::string, automata::Dfa>;

/// Thrown by decide() on formulas with free variables.
class NotASentence : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

/// Automaton for one normalized atom, minimized, with tracks named after the
/// atom's (distinct) arguments.
automata::Dfa atom_automaton(const syntax::CoreAtom& atom, const CompileConfig& cfg);

/// Automaton whose tracks are free_vars(f), in that order.
automata::Dfa compile(const syntax::FormulaPtr& f, const CompileConfig& cfg, const PredicateEnv& env = {});

/// Truth of a sentence in the standard model.
bool decide(const syntax::FormulaPtr& sentence, const CompileConfig& cfg, const PredicateEnv& env = {});

/// First `limit` satisfying tuples (order of automata::enumerate).
std::vector<automata::Tuple> witness(const syntax::FormulaPtr& f, const CompileConfig& cfg, std::size_t limit);

/// Number of satisfying tuples with every coordinate below `bound`.
Natural count_below(const syntax::FormulaPtr& f, const CompileConfig& cfg, const Natural& bound);

void validate(const CompileConfig& cfg);

}  // namespace buchi::compiler
