#include "buchi/oracle.hpp"

#include <optional>
#include <stdexcept>

#include "syntax/visit.hpp"

namespace buchi::oracle {

using namespace syntax;

namespace {

// V_n by stripping trailing base-n zero digits; deliberately not shared with
// the library helpers so the oracle stays independent.
Natural v_of_value(const Natural& x, unsigned base) {
  if (x == 0) return 0;
  Natural p = 1;
  Natural rest = x;
  while (rest % base == 0) {
    rest /= base;
    p *= base;
  }
  return p;
}

const Natural& lookup(const Assignment& a, const std::string& name) {
  auto it = a.find(name);
  if (it == a.end()) throw std::out_of_range("unassigned variable '" + name + "'");
  return it->second;
}

bool eval_core(const CoreAtom& c, const Assignment& a, unsigned base) {
  auto arg = [&](std::size_t i) -> const Natural& { return lookup(a, c.args[i]); };
  switch (c.kind) {
    case AtomKind::Eq: return arg(0) == arg(1);
    case AtomKind::EqConst: return arg(0) == c.constant;
    case AtomKind::Add: return arg(0) + arg(1) == arg(2);
    case AtomKind::Lt: return arg(0) < arg(1);
    case AtomKind::Mod: return arg(0) % c.modulus == c.constant;
    case AtomKind::VEq: return v_of_value(arg(0), base) == arg(1);
  }
  return false;
}

enum class Pinned { None, Value, Impossible };

struct Pin {
  Pinned kind = Pinned::None;
  Natural value;
};

// Looks through nested existentials and conjunctions of `f` for an atom that
// fixes `v` as a function of assigned variables.
Pin find_pin(const Formula& f, const std::string& v, const Assignment& a, unsigned base) {
  auto known = [&](const std::string& n) { return n != v && a.count(n) != 0; };
  return std::visit(
      overloaded{
          [&](const CoreAtom& c) -> Pin {
            const auto& x = c.args;
            switch (c.kind) {
              case AtomKind::EqConst:
                if (x[0] == v) return {Pinned::Value, c.constant};
                break;
              case AtomKind::Eq:
                if (x[0] == v && known(x[1])) return {Pinned::Value, a.at(x[1])};
                if (x[1] == v && known(x[0])) return {Pinned::Value, a.at(x[0])};
                break;
              case AtomKind::Add:
                if (x[2] == v && known(x[0]) && known(x[1])) return {Pinned::Value, a.at(x[0]) + a.at(x[1])};
                if (x[0] == v && x[1] != v && known(x[1]) && known(x[2])) {
                  if (a.at(x[2]) < a.at(x[1])) return {Pinned::Impossible, 0};
                  return {Pinned::Value, a.at(x[2]) - a.at(x[1])};
                }
                if (x[1] == v && x[0] != v && known(x[0]) && known(x[2])) {
                  if (a.at(x[2]) < a.at(x[0])) return {Pinned::Impossible, 0};
                  return {Pinned::Value, a.at(x[2]) - a.at(x[0])};
                }
                break;
              case AtomKind::VEq:
                if (x[1] == v && known(x[0])) return {Pinned::Value, v_of_value(a.at(x[0]), base)};
                break;
              default:
                break;
            }
            return {};
          },
          [&](const Binary& b) -> Pin {
            if (b.op != Connective::And) return {};
            Pin p = find_pin(*b.lhs, v, a, base);
            if (p.kind != Pinned::None) return p;
            return find_pin(*b.rhs, v, a, base);
          },
          [&](const Quantified& q) -> Pin {
            if (q.quantifier != Quantifier::Exists || q.var == v) return {};
            Assignment hidden = a;
            hidden.erase(q.var);  // inner binder shadows any outer value
            return find_pin(*q.body, v, hidden, base);
          },
          [](const auto&) -> Pin { return {}; },
      },
      f.node);
}

}  // namespace

Natural eval_term(const Term& t, const Assignment& a, unsigned base) {
  return std::visit(overloaded{
                        [&](const Variable& v) { return lookup(a, v.name); },
                        [&](const Constant& c) { return c.value; },
                        [&](const Sum& s) { return eval_term(*s.lhs, a, base) + eval_term(*s.rhs, a, base); },
                        [&](const Scale& s) { return s.coefficient * eval_term(*s.operand, a, base); },
                        [&](const VApp& v) { return v_of_value(eval_term(*v.operand, a, base), base); },
                    },
                    t.node);
}

bool eval_bounded(const Formula& f, const Assignment& a, const Natural& bound, unsigned base) {
  return std::visit(
      overloaded{
          [&](const Comparison& c) {
            Natural l = eval_term(*c.lhs, a, base);
            Natural r = eval_term(*c.rhs, a, base);
            switch (c.op) {
              case CompareOp::Eq: return l == r;
              case CompareOp::Ne: return l != r;
              case CompareOp::Lt: return l < r;
              case CompareOp::Le: return l <= r;
              case CompareOp::Gt: return l > r;
              case CompareOp::Ge: return l >= r;
            }
            return false;
          },
          [&](const Congruence& c) { return eval_term(*c.term, a, base) % c.modulus == c.residue; },
          [&](const CoreAtom& c) { return eval_core(c, a, base); },
          [&](const Predicate& p) -> bool {
            throw std::invalid_argument("oracle cannot evaluate predicate '" + p.name + "'");
          },
          [&](const Negation& n) { return !eval_bounded(*n.operand, a, bound, base); },
          [&](const Binary& b) {
            bool l = eval_bounded(*b.lhs, a, bound, base);
            switch (b.op) {
              case Connective::And: return l && eval_bounded(*b.rhs, a, bound, base);
              case Connective::Or: return l || eval_bounded(*b.rhs, a, bound, base);
              case Connective::Implies: return !l || eval_bounded(*b.rhs, a, bound, base);
              case Connective::Iff: return l == eval_bounded(*b.rhs, a, bound, base);
            }
            return false;
          },
          [&](const Quantified& q) {
            if (q.quantifier == Quantifier::ExistsInf)
              throw std::invalid_argument("oracle cannot evaluate the infinity quantifier");
            Assignment inner = a;
            if (q.quantifier == Quantifier::Exists) {
              Pin pin = find_pin(*q.body, q.var, a, base);
              if (pin.kind == Pinned::Impossible) return false;
              if (pin.kind == Pinned::Value) {
                if (pin.value >= bound) return false;
                inner[q.var] = pin.value;
                return eval_bounded(*q.body, inner, bound, base);
              }
            }
            bool want = q.quantifier == Quantifier::Exists;
            for (Natural v = 0; v < bound; ++v) {
              inner[q.var] = v;
              if (eval_bounded(*q.body, inner, bound, base) == want) return want;
            }
            return !want;
          },
      },
      f.node);
}

std::set<std::vector<Natural>> brute_solutions(const FormulaPtr& f, const Natural& bound, unsigned base) {
  auto fv = free_vars(*f);
  std::set<std::vector<Natural>> out;
  std::vector<Natural> tuple(fv.size(), 0);
  Assignment a;
  for (;;) {
    for (std::size_t i = 0; i < fv.size(); ++i) a[fv[i]] = tuple[i];
    if (eval_bounded(*f, a, bound, base)) out.insert(tuple);
    std::size_t i = 0;
    while (i < tuple.size()) {
      if (++tuple[i] < bound) break;
      tuple[i] = 0;
      ++i;
    }
    if (i == tuple.size()) break;
  }
  return out;
}

}  // namespace buchi::oracle
