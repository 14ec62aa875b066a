#pragma once

// Abstract syntax of first-order formulas over (=, +, <, congruences, V_n),
// the concrete text grammar, and flattening into the atomic core that the
// automaton compiler consumes.

#include <cstddef>
#include <cstdint>
#include <map>
#include <memory>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "buchi/natural.hpp"

namespace buchi::syntax {

struct Term;
using TermPtr = std::shared_ptr<const Term>;

struct Variable {
  std::string name;
};
struct Constant {
  Natural value;
};
struct Sum {
  TermPtr lhs, rhs;
};
/// coefficient * operand, coefficient >= 1.
struct Scale {
  Natural coefficient;
  TermPtr operand;
};
/// V_n(operand); the base n is supplied at evaluation/compilation time.
struct VApp {
  TermPtr operand;
};

struct Term {
  std::variant<Variable, Constant, Sum, Scale, VApp> node;
};

TermPtr var(std::string name);
TermPtr constant(Natural value);
TermPtr sum(TermPtr lhs, TermPtr rhs);
TermPtr scale(Natural coefficient, TermPtr operand);
TermPtr v_of(TermPtr operand);

enum class CompareOp { Eq, Ne, Lt, Le, Gt, Ge };

/// Normalized atoms. Every argument is a variable name.
enum class AtomKind {
  Eq,       // x = y
  EqConst,  // x = c
  Add,      // x + y = z
  Lt,       // x < y
  Mod,      // x = c (mod m), 0 <= c < m, m >= 2
  VEq,      // V_n(x) = y
};

struct CoreAtom {
  AtomKind kind;
  std::vector<std::string> args;
  Natural constant = 0;          // EqConst value, Mod residue
  std::uint64_t modulus = 0;     // Mod only
};

struct Formula;
using FormulaPtr = std::shared_ptr<const Formula>;

struct Comparison {
  CompareOp op;
  TermPtr lhs, rhs;
};
/// term % modulus = residue
struct Congruence {
  TermPtr term;
  std::uint64_t modulus;
  std::uint64_t residue;
};
/// Reference to a relation supplied as an automaton at compile time. Only
/// produced programmatically (the orders module); never by the parser.
struct Predicate {
  std::string name;
  std::vector<std::string> args;
};
struct Negation {
  FormulaPtr operand;
};
enum class Connective { And, Or, Implies, Iff };
struct Binary {
  Connective op;
  FormulaPtr lhs, rhs;
};
enum class Quantifier { Exists, Forall, ExistsInf };
struct Quantified {
  Quantifier quantifier;
  std::string var;
  FormulaPtr body;
};

struct Formula {
  std::variant<Comparison, Congruence, CoreAtom, Predicate, Negation, Binary, Quantified> node;
};

FormulaPtr compare(CompareOp op, TermPtr lhs, TermPtr rhs);
FormulaPtr congruence(TermPtr term, std::uint64_t modulus, std::uint64_t residue);
FormulaPtr core(CoreAtom atom);
FormulaPtr predicate(std::string name, std::vector<std::string> args);
FormulaPtr negate(FormulaPtr f);
FormulaPtr binary(Connective op, FormulaPtr lhs, FormulaPtr rhs);
FormulaPtr conj(FormulaPtr lhs, FormulaPtr rhs);
FormulaPtr disj(FormulaPtr lhs, FormulaPtr rhs);
FormulaPtr implies(FormulaPtr lhs, FormulaPtr rhs);
FormulaPtr iff(FormulaPtr lhs, FormulaPtr rhs);
FormulaPtr exists(std::string var, FormulaPtr body);
FormulaPtr forall(std::string var, FormulaPtr body);
FormulaPtr exists_inf(std::string var, FormulaPtr body);

/// Left-nested conjunction/disjunction of `parts`, which must be non-empty.
FormulaPtr conj_all(const std::vector<FormulaPtr>& parts);
FormulaPtr disj_all(const std::vector<FormulaPtr>& parts);

class ParseError : public std::runtime_error {
public:
  ParseError(std::size_t position, const std::string& message);
  std::size_t position() const noexcept { return position_; }

private:
  std::size_t position_;
};

/// Parses the concrete grammar:
///   formula := ("E"|"A"|"EINF") ident "." formula | formula BINOP formula
///            | "!" formula | "(" formula ")" | atom
///   atom    := term REL term | term "%" nat "=" nat
///   term    := ident | nat | term "+" term | nat "*" term | "V(" term ")"
/// Binary operators by increasing precedence: <->, ->, |, &.
FormulaPtr parse(std::string_view text);
TermPtr parse_term(std::string_view text);

std::string render(const Formula& f);
std::string render(const FormulaPtr& f);
std::string render_term(const Term& t);

/// Free variables in order of first occurrence (left to right).
std::vector<std::string> free_vars(const Formula& f);
std::vector<std::string> free_vars(const FormulaPtr& f);

bool has_quantifier(const Formula& f);

/// Structural equality up to renaming of bound variables.
bool alpha_equivalent(const FormulaPtr& a, const FormulaPtr& b);

/// Capture-avoiding renaming of free variables (bound variables that would
/// capture a substituted name are renamed).
FormulaPtr rename_free(const FormulaPtr& f, const std::map<std::string, std::string>& renaming);

/// True when every atom is a CoreAtom or Predicate.
bool is_core(const Formula& f);

/// Rewrites every atom into the CoreAtom vocabulary. Compound terms become
/// fresh existentially quantified variables named "_t<k>"; scalar multiples
/// expand by binary doubling; bound variables are renamed apart.
FormulaPtr normalize(const FormulaPtr& f);

}  // namespace buchi::syntax
