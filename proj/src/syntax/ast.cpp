#include <functional>
#include <set>
#include <unordered_map>

#include "buchi/syntax.hpp"
#include "syntax/visit.hpp"

namespace buchi::syntax {

TermPtr var(std::string name) { return std::make_shared<Term>(Term{Variable{std::move(name)}}); }
TermPtr constant(Natural value) { return std::make_shared<Term>(Term{Constant{std::move(value)}}); }
TermPtr sum(TermPtr lhs, TermPtr rhs) {
  return std::make_shared<Term>(Term{Sum{std::move(lhs), std::move(rhs)}});
}
TermPtr scale(Natural coefficient, TermPtr operand) {
  if (coefficient < 1) throw std::invalid_argument("scale coefficient must be >= 1");
  return std::make_shared<Term>(Term{Scale{std::move(coefficient), std::move(operand)}});
}
TermPtr v_of(TermPtr operand) { return std::make_shared<Term>(Term{VApp{std::move(operand)}}); }

FormulaPtr compare(CompareOp op, TermPtr lhs, TermPtr rhs) {
  return std::make_shared<Formula>(Formula{Comparison{op, std::move(lhs), std::move(rhs)}});
}
FormulaPtr congruence(TermPtr term, std::uint64_t modulus, std::uint64_t residue) {
  if (modulus < 2) throw std::invalid_argument("modulus must be >= 2");
  if (residue >= modulus) throw std::invalid_argument("residue must be below the modulus");
  return std::make_shared<Formula>(Formula{Congruence{std::move(term), modulus, residue}});
}
FormulaPtr core(CoreAtom atom) { return std::make_shared<Formula>(Formula{std::move(atom)}); }
FormulaPtr predicate(std::string name, std::vector<std::string> args) {
  return std::make_shared<Formula>(Formula{Predicate{std::move(name), std::move(args)}});
}
FormulaPtr negate(FormulaPtr f) { return std::make_shared<Formula>(Formula{Negation{std::move(f)}}); }
FormulaPtr binary(Connective op, FormulaPtr lhs, FormulaPtr rhs) {
  return std::make_shared<Formula>(Formula{Binary{op, std::move(lhs), std::move(rhs)}});
}
FormulaPtr conj(FormulaPtr lhs, FormulaPtr rhs) { return binary(Connective::And, std::move(lhs), std::move(rhs)); }
FormulaPtr disj(FormulaPtr lhs, FormulaPtr rhs) { return binary(Connective::Or, std::move(lhs), std::move(rhs)); }
FormulaPtr implies(FormulaPtr lhs, FormulaPtr rhs) {
  return binary(Connective::Implies, std::move(lhs), std::move(rhs));
}
FormulaPtr iff(FormulaPtr lhs, FormulaPtr rhs) { return binary(Connective::Iff, std::move(lhs), std::move(rhs)); }
FormulaPtr exists(std::string v, FormulaPtr body) {
  return std::make_shared<Formula>(Formula{Quantified{Quantifier::Exists, std::move(v), std::move(body)}});
}
FormulaPtr forall(std::string v, FormulaPtr body) {
  return std::make_shared<Formula>(Formula{Quantified{Quantifier::Forall, std::move(v), std::move(body)}});
}
FormulaPtr exists_inf(std::string v, FormulaPtr body) {
  return std::make_shared<Formula>(Formula{Quantified{Quantifier::ExistsInf, std::move(v), std::move(body)}});
}

FormulaPtr conj_all(const std::vector<FormulaPtr>& parts) {
  if (parts.empty()) throw std::invalid_argument("empty conjunction");
  FormulaPtr out = parts.front();
  for (std::size_t i = 1; i < parts.size(); ++i) out = conj(out, parts[i]);
  return out;
}

FormulaPtr disj_all(const std::vector<FormulaPtr>& parts) {
  if (parts.empty()) throw std::invalid_argument("empty disjunction");
  FormulaPtr out = parts.front();
  for (std::size_t i = 1; i < parts.size(); ++i) out = disj(out, parts[i]);
  return out;
}

namespace {

void term_vars(const Term& t, std::vector<std::string>& out) {
  std::visit(overloaded{
                 [&](const Variable& v) { out.push_back(v.name); },
                 [](const Constant&) {},
                 [&](const Sum& s) {
                   term_vars(*s.lhs, out);
                   term_vars(*s.rhs, out);
                 },
                 [&](const Scale& s) { term_vars(*s.operand, out); },
                 [&](const VApp& v) { term_vars(*v.operand, out); },
             },
             t.node);
}

void collect_free(const Formula& f, std::vector<std::string>& bound, std::vector<std::string>& out,
                  std::set<std::string>& seen) {
  auto note = [&](const std::string& name) {
    for (const auto& b : bound)
      if (b == name) return;
    if (seen.insert(name).second) out.push_back(name);
  };
  std::visit(overloaded{
                 [&](const Comparison& c) {
                   std::vector<std::string> names;
                   term_vars(*c.lhs, names);
                   term_vars(*c.rhs, names);
                   for (const auto& n : names) note(n);
                 },
                 [&](const Congruence& c) {
                   std::vector<std::string> names;
                   term_vars(*c.term, names);
                   for (const auto& n : names) note(n);
                 },
                 [&](const CoreAtom& a) {
                   for (const auto& n : a.args) note(n);
                 },
                 [&](const Predicate& p) {
                   for (const auto& n : p.args) note(n);
                 },
                 [&](const Negation& n) { collect_free(*n.operand, bound, out, seen); },
                 [&](const Binary& b) {
                   collect_free(*b.lhs, bound, out, seen);
                   collect_free(*b.rhs, bound, out, seen);
                 },
                 [&](const Quantified& q) {
                   bound.push_back(q.var);
                   collect_free(*q.body, bound, out, seen);
                   bound.pop_back();
                 },
             },
             f.node);
}

}  // namespace

std::vector<std::string> free_vars(const Formula& f) {
  std::vector<std::string> bound, out;
  std::set<std::string> seen;
  collect_free(f, bound, out, seen);
  return out;
}

std::vector<std::string> free_vars(const FormulaPtr& f) { return free_vars(*f); }

bool has_quantifier(const Formula& f) {
  return std::visit(overloaded{
                        [](const Negation& n) { return has_quantifier(*n.operand); },
                        [](const Binary& b) { return has_quantifier(*b.lhs) || has_quantifier(*b.rhs); },
                        [](const Quantified&) { return true; },
                        [](const auto&) { return false; },
                    },
                    f.node);
}

bool is_core(const Formula& f) {
  return std::visit(overloaded{
                        [](const Comparison&) { return false; },
                        [](const Congruence&) { return false; },
                        [](const CoreAtom&) { return true; },
                        [](const Predicate&) { return true; },
                        [](const Negation& n) { return is_core(*n.operand); },
                        [](const Binary& b) { return is_core(*b.lhs) && is_core(*b.rhs); },
                        [](const Quantified& q) { return is_core(*q.body); },
                    },
                    f.node);
}

namespace {

// Bound variables map to their binder depth; free ones compare by name.
using Scope = std::vector<std::pair<std::string, std::string>>;

std::string resolve(const Scope& scope, const std::string& name, bool left) {
  for (auto it = scope.rbegin(); it != scope.rend(); ++it) {
    if ((left ? it->first : it->second) == name)
      return "#" + std::to_string(std::distance(it, scope.rend()));
  }
  return name;
}

bool terms_equal(const Term& a, const Term& b, const Scope& scope) {
  if (a.node.index() != b.node.index()) return false;
  return std::visit(overloaded{
                        [&](const Variable& va) {
                          return resolve(scope, va.name, true) ==
                                 resolve(scope, std::get<Variable>(b.node).name, false);
                        },
                        [&](const Constant& ca) { return ca.value == std::get<Constant>(b.node).value; },
                        [&](const Sum& sa) {
                          const auto& sb = std::get<Sum>(b.node);
                          return terms_equal(*sa.lhs, *sb.lhs, scope) && terms_equal(*sa.rhs, *sb.rhs, scope);
                        },
                        [&](const Scale& sa) {
                          const auto& sb = std::get<Scale>(b.node);
                          return sa.coefficient == sb.coefficient && terms_equal(*sa.operand, *sb.operand, scope);
                        },
                        [&](const VApp& va) { return terms_equal(*va.operand, *std::get<VApp>(b.node).operand, scope); },
                    },
                    a.node);
}

bool names_equal(const std::vector<std::string>& a, const std::vector<std::string>& b, const Scope& scope) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (resolve(scope, a[i], true) != resolve(scope, b[i], false)) return false;
  return true;
}

bool formulas_equal(const Formula& a, const Formula& b, Scope& scope) {
  if (a.node.index() != b.node.index()) return false;
  return std::visit(
      overloaded{
          [&](const Comparison& ca) {
            const auto& cb = std::get<Comparison>(b.node);
            return ca.op == cb.op && terms_equal(*ca.lhs, *cb.lhs, scope) && terms_equal(*ca.rhs, *cb.rhs, scope);
          },
          [&](const Congruence& ca) {
            const auto& cb = std::get<Congruence>(b.node);
            return ca.modulus == cb.modulus && ca.residue == cb.residue && terms_equal(*ca.term, *cb.term, scope);
          },
          [&](const CoreAtom& ca) {
            const auto& cb = std::get<CoreAtom>(b.node);
            return ca.kind == cb.kind && ca.constant == cb.constant && ca.modulus == cb.modulus &&
                   names_equal(ca.args, cb.args, scope);
          },
          [&](const Predicate& pa) {
            const auto& pb = std::get<Predicate>(b.node);
            return pa.name == pb.name && names_equal(pa.args, pb.args, scope);
          },
          [&](const Negation& na) { return formulas_equal(*na.operand, *std::get<Negation>(b.node).operand, scope); },
          [&](const Binary& ba) {
            const auto& bb = std::get<Binary>(b.node);
            return ba.op == bb.op && formulas_equal(*ba.lhs, *bb.lhs, scope) && formulas_equal(*ba.rhs, *bb.rhs, scope);
          },
          [&](const Quantified& qa) {
            const auto& qb = std::get<Quantified>(b.node);
            if (qa.quantifier != qb.quantifier) return false;
            scope.emplace_back(qa.var, qb.var);
            bool same = formulas_equal(*qa.body, *qb.body, scope);
            scope.pop_back();
            return same;
          },
      },
      a.node);
}

}  // namespace

bool alpha_equivalent(const FormulaPtr& a, const FormulaPtr& b) {
  Scope scope;
  return formulas_equal(*a, *b, scope);
}

namespace {

TermPtr rename_term(const TermPtr& t, const std::map<std::string, std::string>& m) {
  return std::visit(overloaded{
                        [&](const Variable& v) -> TermPtr {
                          auto it = m.find(v.name);
                          return it == m.end() ? t : var(it->second);
                        },
                        [&](const Constant&) { return t; },
                        [&](const Sum& s) { return sum(rename_term(s.lhs, m), rename_term(s.rhs, m)); },
                        [&](const Scale& s) { return scale(s.coefficient, rename_term(s.operand, m)); },
                        [&](const VApp& v) { return v_of(rename_term(v.operand, m)); },
                    },
                    t->node);
}

std::vector<std::string> rename_names(const std::vector<std::string>& names,
                                      const std::map<std::string, std::string>& m) {
  std::vector<std::string> out;
  for (const auto& n : names) {
    auto it = m.find(n);
    out.push_back(it == m.end() ? n : it->second);
  }
  return out;
}

struct Renamer {
  std::set<std::string> avoid;
  std::size_t counter = 0;

  std::string fresh(const std::string& base) {
    for (;;) {
      std::string candidate = base + "_" + std::to_string(++counter);
      if (!avoid.count(candidate)) {
        avoid.insert(candidate);
        return candidate;
      }
    }
  }

  FormulaPtr go(const FormulaPtr& f, const std::map<std::string, std::string>& m) {
    return std::visit(
        overloaded{
            [&](const Comparison& c) { return compare(c.op, rename_term(c.lhs, m), rename_term(c.rhs, m)); },
            [&](const Congruence& c) { return congruence(rename_term(c.term, m), c.modulus, c.residue); },
            [&](const CoreAtom& a) {
              CoreAtom out = a;
              out.args = rename_names(a.args, m);
              return core(std::move(out));
            },
            [&](const Predicate& p) { return predicate(p.name, rename_names(p.args, m)); },
            [&](const Negation& n) { return negate(go(n.operand, m)); },
            [&](const Binary& b) { return binary(b.op, go(b.lhs, m), go(b.rhs, m)); },
            [&](const Quantified& q) -> FormulaPtr {
              auto inner = m;
              inner.erase(q.var);
              std::string bound = q.var;
              bool captures = false;
              for (const auto& [from, to] : inner)
                if (to == q.var) captures = true;
              if (captures) {
                bound = fresh(q.var);
                inner[q.var] = bound;
              }
              return std::make_shared<Formula>(Formula{Quantified{q.quantifier, bound, go(q.body, inner)}});
            },
        },
        f->node);
  }
};

void all_names(const Formula& f, std::set<std::string>& out) {
  for (const auto& v : free_vars(f)) out.insert(v);
  std::visit(overloaded{
                 [&](const Negation& n) { all_names(*n.operand, out); },
                 [&](const Binary& b) {
                   all_names(*b.lhs, out);
                   all_names(*b.rhs, out);
                 },
                 [&](const Quantified& q) {
                   out.insert(q.var);
                   all_names(*q.body, out);
                 },
                 [](const auto&) {},
             },
             f.node);
}

}  // namespace

FormulaPtr rename_free(const FormulaPtr& f, const std::map<std::string, std::string>& renaming) {
  Renamer r;
  all_names(*f, r.avoid);
  for (const auto& [from, to] : renaming) r.avoid.insert(to);
  return r.go(f, renaming);
}

}  // namespace buchi::syntax
