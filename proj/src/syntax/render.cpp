#include <sstream>

#include "buchi/syntax.hpp"
#include "syntax/visit.hpp"

namespace buchi::syntax {

namespace {

// Precedence levels; higher binds tighter.
constexpr int kIff = 1;
constexpr int kImplies = 2;
constexpr int kOr = 3;
constexpr int kAnd = 4;
constexpr int kUnary = 5;

void term_to(std::ostream& os, const Term& t, bool in_scale) {
  std::visit(overloaded{
                 [&](const Variable& v) { os << v.name; },
                 [&](const Constant& c) { os << c.value; },
                 [&](const Sum& s) {
                   if (in_scale) throw std::invalid_argument("scaled sum has no textual form");
                   term_to(os, *s.lhs, false);
                   os << " + ";
                   term_to(os, *s.rhs, false);
                 },
                 [&](const Scale& s) {
                   // The grammar has no term parentheses: k * (a + b) prints distributed.
                   Natural product = s.coefficient;
                   const Term* core = s.operand.get();
                   while (const auto* nested = std::get_if<Scale>(&core->node)) {
                     product *= nested->coefficient;
                     core = nested->operand.get();
                   }
                   if (const auto* inner = std::get_if<Sum>(&core->node)) {
                     term_to(os, *scale(product, inner->lhs), false);
                     os << " + ";
                     term_to(os, *scale(product, inner->rhs), false);
                     return;
                   }
                   os << s.coefficient << " * ";
                   term_to(os, *s.operand, true);
                 },
                 [&](const VApp& v) {
                   os << "V(";
                   term_to(os, *v.operand, false);
                   os << ")";
                 },
             },
             t.node);
}

const char* op_text(CompareOp op) {
  switch (op) {
    case CompareOp::Eq: return " = ";
    case CompareOp::Ne: return " != ";
    case CompareOp::Lt: return " < ";
    case CompareOp::Le: return " <= ";
    case CompareOp::Gt: return " > ";
    case CompareOp::Ge: return " >= ";
  }
  return " ? ";
}

void core_to(std::ostream& os, const CoreAtom& a) {
  const auto& x = a.args;
  switch (a.kind) {
    case AtomKind::Eq: os << x[0] << " = " << x[1]; break;
    case AtomKind::EqConst: os << x[0] << " = " << a.constant; break;
    case AtomKind::Add: os << x[0] << " + " << x[1] << " = " << x[2]; break;
    case AtomKind::Lt: os << x[0] << " < " << x[1]; break;
    case AtomKind::Mod: os << x[0] << " % " << a.modulus << " = " << a.constant; break;
    case AtomKind::VEq: os << "V(" << x[0] << ") = " << x[1]; break;
  }
}

int precedence(const Connective c) {
  switch (c) {
    case Connective::Iff: return kIff;
    case Connective::Implies: return kImplies;
    case Connective::Or: return kOr;
    case Connective::And: return kAnd;
  }
  return kIff;
}

const char* connective_text(Connective c) {
  switch (c) {
    case Connective::Iff: return " <-> ";
    case Connective::Implies: return " -> ";
    case Connective::Or: return " | ";
    case Connective::And: return " & ";
  }
  return " ? ";
}

// `tail` is true when nothing follows this subformula before the end of the
// enclosing parenthesis; a quantifier body extends as far right as possible,
// so a quantifier that is not in tail position needs parentheses.
void formula_to(std::ostream& os, const Formula& f, int min_prec, bool tail) {
  std::visit(overloaded{
                 [&](const Comparison& c) {
                   term_to(os, *c.lhs, false);
                   os << op_text(c.op);
                   term_to(os, *c.rhs, false);
                 },
                 [&](const Congruence& c) {
                   term_to(os, *c.term, false);
                   os << " % " << c.modulus << " = " << c.residue;
                 },
                 [&](const CoreAtom& a) { core_to(os, a); },
                 [&](const Predicate& p) {
                   os << p.name << "(";
                   for (std::size_t i = 0; i < p.args.size(); ++i) os << (i ? ", " : "") << p.args[i];
                   os << ")";
                 },
                 [&](const Negation& n) {
                   os << "!";
                   formula_to(os, *n.operand, kUnary, tail);
                 },
                 [&](const Binary& b) {
                   int p = precedence(b.op);
                   bool paren = p < min_prec;
                   bool inner_tail = paren ? true : tail;
                   if (paren) os << "(";
                   bool right_assoc = b.op == Connective::Implies || b.op == Connective::Iff;
                   formula_to(os, *b.lhs, right_assoc ? p + 1 : p, false);
                   os << connective_text(b.op);
                   formula_to(os, *b.rhs, right_assoc ? p : p + 1, inner_tail);
                   if (paren) os << ")";
                 },
                 [&](const Quantified& q) {
                   if (!tail) os << "(";
                   switch (q.quantifier) {
                     case Quantifier::Exists: os << "E "; break;
                     case Quantifier::Forall: os << "A "; break;
                     case Quantifier::ExistsInf: os << "EINF "; break;
                   }
                   os << q.var << ". ";
                   bool wrap_body = std::holds_alternative<Binary>(q.body->node);
                   if (wrap_body) os << "(";
                   formula_to(os, *q.body, kIff, true);
                   if (wrap_body) os << ")";
                   if (!tail) os << ")";
                 },
             },
             f.node);
}

}  // namespace

std::string render_term(const Term& t) {
  std::ostringstream os;
  term_to(os, t, false);
  return os.str();
}

std::string render(const Formula& f) {
  std::ostringstream os;
  formula_to(os, f, kIff, true);
  return os.str();
}

std::string render(const FormulaPtr& f) { return render(*f); }

}  // namespace buchi::syntax
