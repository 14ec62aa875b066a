#pragma once

// Brute-force semantics over the naturals. Independent of the automata code;
// used as the test oracle for the compiler and for the order comparators.

#include <map>
#include <set>
#include <string>
#include <vector>

#include "buchi/natural.hpp"
#include "buchi/syntax.hpp"

namespace buchi::oracle {

using Assignment = std::map<std::string, Natural>;

/// Throws std::out_of_range on an unassigned variable.
Natural eval_term(const syntax::Term& t, const Assignment& a, unsigned base);

/// Truth with every quantifier ranging over [0, bound). Exact on
/// quantifier-free formulas. An existential whose variable is pinned by a
/// functional conjunct (x + y = v, V(x) = v, v = c, v = x) evaluates that
/// value directly instead of scanning, which is the same bounded semantics.
/// Throws std::invalid_argument on the infinity quantifier or predicates.
bool eval_bounded(const syntax::Formula& f, const Assignment& a, const Natural& bound, unsigned base);

/// All tuples of free_vars(f) with coordinates below `bound` that satisfy f.
std::set<std::vector<Natural>> brute_solutions(const syntax::FormulaPtr& f, const Natural& bound, unsigned base);

}  // namespace buchi::oracle
