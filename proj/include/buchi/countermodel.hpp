#pragma once

// Nonstandard model of Presburger arithmetic plus the inductive axioms for
// V_2: pairs (p, q) with p a nonnegative rational and q an integer (q >= 0
// when p = 0), added componentwise and ordered lexicographically.

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "buchi/natural.hpp"
#include "buchi/syntax.hpp"

namespace buchi::countermodel {

using Rational = boost::multiprecision::cpp_rational;
using Integer = boost::multiprecision::cpp_int;

struct CmElement {
  Rational p;
  Integer q;

  /// Throws std::invalid_argument if p < 0, or p = 0 and q < 0.
  CmElement(Rational p_ = 0, Integer q_ = 0);
  static bool valid(const Rational& p, const Integer& q) { return p > 0 || (p == 0 && q >= 0); }

  bool standard() const { return p == 0; }
  bool operator==(const CmElement&) const = default;
};

std::string to_string(const CmElement& x);

/// Which V_2 to use. OddReturnsTwo sends odd nonstandard elements to (0,2)
/// instead of (0,1); it exists so tests can watch the checker fail.
enum class V2Variant { Faithful, OddReturnsTwo };

CmElement cm_add(const CmElement& x, const CmElement& y);
bool cm_leq(const CmElement& x, const CmElement& y);
bool cm_lt(const CmElement& x, const CmElement& y);
CmElement cm_v2(const CmElement& x, V2Variant variant = V2Variant::Faithful);

/// n*x for a standard n.
CmElement cm_scale(const Integer& n, const CmElement& x);

/// The u with x = n*u + y, when it is a valid element.
std::optional<CmElement> cm_divide_difference(const CmElement& x, const CmElement& y, unsigned n);

/// x = n*u + y or y = n*u + x for some element u.
bool cm_congruent(const CmElement& x, const CmElement& y, unsigned n);

using CmAssignment = std::map<std::string, CmElement>;

/// Constants c denote (0, c). Throws std::out_of_range on an unassigned variable.
CmElement cm_eval_term(const syntax::Term& t, const CmAssignment& a, V2Variant variant = V2Variant::Faithful);

/// Quantifier-free formulas only; throws std::invalid_argument on quantifiers
/// and predicates.
bool cm_eval_qf(const syntax::Formula& f, const CmAssignment& a, V2Variant variant = V2Variant::Faithful);

struct AxiomResult {
  int id;
  std::string statement;
  std::uint64_t samples = 0;
  std::uint64_t failures = 0;
  std::optional<std::string> first_counterexample;
};

struct AxiomReport {
  std::uint64_t sample_count = 0;
  std::uint64_t seed = 0;
  std::vector<AxiomResult> axioms;  // ids 1..14 in order

  bool all_passed() const;
  std::string to_table() const;
  std::string to_json() const;
};

/// Samples an element; the mix hits all four V_2 cases about equally often.
CmElement sample_element(std::mt19937_64& rng);

/// Checks axioms 1..14 on `samples` sampled instances each. Existential
/// parts are discharged with explicit witnesses.
AxiomReport check_axioms(std::uint64_t samples, std::uint64_t seed, V2Variant variant = V2Variant::Faithful);

struct SeparatingWitness {
  CmElement x, y;
  bool x_is_own_valuation = false;  // V(x) = x
  bool x_below_y = false;           // x < y
  bool y_below_double = false;      // y < x + x
  bool y_is_own_valuation = false;  // V(y) = y
  bool checks_passed() const {
    return x_is_own_valuation && x_below_y && y_below_double && y_is_own_valuation;
  }
};

/// x = (p, 0), y = (3p/2, 0). Throws std::invalid_argument unless p > 0.
SeparatingWitness separating_counterexample(const Rational& p);

/// The sentence that holds in the naturals and fails here.
syntax::FormulaPtr separating_sentence();

/// Parses "a/b" or "a" with a, b decimal naturals, b > 0.
Rational parse_rational(const std::string& text);

}  // namespace buchi::countermodel
