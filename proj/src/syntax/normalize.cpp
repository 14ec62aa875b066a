#include <set>

#include "buchi/syntax.hpp"
#include "syntax/visit.hpp"

namespace buchi::syntax {

namespace {

CoreAtom make_atom(AtomKind kind, std::vector<std::string> args, Natural constant = 0, std::uint64_t modulus = 0) {
  return CoreAtom{kind, std::move(args), std::move(constant), modulus};
}

// Index of the argument an atom defines functionally (its "output"), or -1.
int output_slot(const CoreAtom& a) {
  switch (a.kind) {
    case AtomKind::EqConst: return 0;
    case AtomKind::Add: return 2;
    case AtomKind::VEq: return 1;
    default: return -1;
  }
}

class Normalizer {
public:
  FormulaPtr run(const FormulaPtr& f) {
    for (const auto& v : free_vars(*f)) used_.insert(v);
    std::map<std::string, std::string> scope;
    return go(f, scope);
  }

private:
  std::string fresh() {
    for (;;) {
      std::string name = "_t" + std::to_string(counter_++);
      if (used_.insert(name).second) return name;
    }
  }

  static std::string lookup(const std::map<std::string, std::string>& scope, const std::string& n) {
    auto it = scope.find(n);
    return it == scope.end() ? n : it->second;
  }

  // Per-atom flattening state.
  struct Flat {
    std::vector<CoreAtom> defs;
    std::vector<std::string> fresh;
  };

  std::string flatten(const Term& t, const std::map<std::string, std::string>& scope, Flat& out) {
    return std::visit(
        overloaded{
            [&](const Variable& v) { return lookup(scope, v.name); },
            [&](const Constant& c) {
              auto r = new_var(out);
              out.defs.push_back(make_atom(AtomKind::EqConst, {r}, c.value));
              return r;
            },
            [&](const Sum& s) {
              auto l = flatten(*s.lhs, scope, out);
              auto r = flatten(*s.rhs, scope, out);
              auto z = new_var(out);
              out.defs.push_back(make_atom(AtomKind::Add, {l, r, z}));
              return z;
            },
            [&](const Scale& s) {
              // Binary doubling: power holds operand * 2^i, summands collect set bits.
              std::string power = flatten(*s.operand, scope, out);
              Natural k = s.coefficient;
              std::vector<std::string> summands;
              while (k > 0) {
                if ((k & 1) != 0) summands.push_back(power);
                k >>= 1;
                if (k > 0) {
                  auto doubled = new_var(out);
                  out.defs.push_back(make_atom(AtomKind::Add, {power, power, doubled}));
                  power = doubled;
                }
              }
              std::string acc = summands.front();
              for (std::size_t i = 1; i < summands.size(); ++i) {
                auto z = new_var(out);
                out.defs.push_back(make_atom(AtomKind::Add, {acc, summands[i], z}));
                acc = z;
              }
              return acc;
            },
            [&](const VApp& v) {
              auto x = flatten(*v.operand, scope, out);
              auto y = new_var(out);
              out.defs.push_back(make_atom(AtomKind::VEq, {x, y}));
              return y;
            },
        },
        t.node);
  }

  std::string new_var(Flat& out) {
    auto n = fresh();
    out.fresh.push_back(n);
    return n;
  }

  // Flattens `t` so that its value lands in variable `target` when possible.
  void flatten_into(const Term& t, const std::string& target, const std::map<std::string, std::string>& scope,
                    Flat& out, std::vector<CoreAtom>& atoms) {
    auto r = flatten(t, scope, out);
    if (r == target) return;
    if (!out.defs.empty() && !out.fresh.empty() && out.fresh.back() == r) {
      auto& last = out.defs.back();
      int slot = output_slot(last);
      if (slot >= 0 && last.args[slot] == r) {
        last.args[slot] = target;
        out.fresh.pop_back();
        return;
      }
    }
    atoms.push_back(make_atom(AtomKind::Eq, {r, target}));
  }

  FormulaPtr wrap(Flat& flat, std::vector<CoreAtom> atoms, bool negated) {
    std::vector<FormulaPtr> parts;
    for (auto& d : flat.defs) parts.push_back(core(std::move(d)));
    FormulaPtr atom;
    if (atoms.empty()) {
      // The definitions alone carry the atom (e.g. "x + y = z" became Add(x, y, z)).
      atom = parts.back();
      parts.pop_back();
    } else {
      std::vector<FormulaPtr> as;
      for (auto& a : atoms) as.push_back(core(std::move(a)));
      atom = conj_all(as);
    }
    if (negated) atom = negate(atom);
    parts.push_back(atom);
    FormulaPtr body = conj_all(parts);
    for (auto it = flat.fresh.rbegin(); it != flat.fresh.rend(); ++it) body = exists(*it, body);
    return body;
  }

  FormulaPtr comparison(const Comparison& c, const std::map<std::string, std::string>& scope) {
    Flat flat;
    std::vector<CoreAtom> atoms;
    bool negated = false;
    const Term* lhs = c.lhs.get();
    const Term* rhs = c.rhs.get();
    auto is_var = [](const Term* t) { return std::holds_alternative<Variable>(t->node); };
    auto as_const = [](const Term* t) { return std::get_if<Constant>(&t->node); };

    switch (c.op) {
      case CompareOp::Ne:
        negated = true;
        [[fallthrough]];
      case CompareOp::Eq: {
        if (is_var(rhs) && !is_var(lhs) && !as_const(lhs)) std::swap(lhs, rhs);
        if (is_var(lhs) && !is_var(rhs) && !as_const(rhs)) {
          flatten_into(*rhs, lookup(scope, std::get<Variable>(lhs->node).name), scope, flat, atoms);
          if (flat.defs.empty() && atoms.empty())
            atoms.push_back(make_atom(AtomKind::Eq, {lookup(scope, std::get<Variable>(lhs->node).name),
                                                     lookup(scope, std::get<Variable>(lhs->node).name)}));
          break;
        }
        if (as_const(lhs) && !as_const(rhs)) std::swap(lhs, rhs);
        auto l = flatten(*lhs, scope, flat);
        if (const auto* k = as_const(rhs)) {
          atoms.push_back(make_atom(AtomKind::EqConst, {l}, k->value));
        } else {
          auto r = flatten(*rhs, scope, flat);
          atoms.push_back(make_atom(AtomKind::Eq, {l, r}));
        }
        break;
      }
      case CompareOp::Lt:
      case CompareOp::Ge: {
        auto l = flatten(*lhs, scope, flat);
        auto r = flatten(*rhs, scope, flat);
        atoms.push_back(make_atom(AtomKind::Lt, {l, r}));
        negated = c.op == CompareOp::Ge;
        break;
      }
      case CompareOp::Gt:
      case CompareOp::Le: {
        auto l = flatten(*lhs, scope, flat);
        auto r = flatten(*rhs, scope, flat);
        atoms.push_back(make_atom(AtomKind::Lt, {r, l}));
        negated = c.op == CompareOp::Le;
        break;
      }
    }
    return wrap(flat, std::move(atoms), negated);
  }

  FormulaPtr go(const FormulaPtr& f, std::map<std::string, std::string>& scope) {
    return std::visit(
        overloaded{
            [&](const Comparison& c) { return comparison(c, scope); },
            [&](const Congruence& c) {
              Flat flat;
              auto x = flatten(*c.term, scope, flat);
              return wrap(flat, {make_atom(AtomKind::Mod, {x}, c.residue, c.modulus)}, false);
            },
            [&](const CoreAtom& a) {
              CoreAtom out = a;
              for (auto& n : out.args) n = lookup(scope, n);
              return core(std::move(out));
            },
            [&](const Predicate& p) {
              std::vector<std::string> args;
              for (const auto& n : p.args) args.push_back(lookup(scope, n));
              return predicate(p.name, std::move(args));
            },
            [&](const Negation& n) { return negate(go(n.operand, scope)); },
            [&](const Binary& b) {
              auto l = go(b.lhs, scope);
              auto r = go(b.rhs, scope);
              return binary(b.op, l, r);
            },
            [&](const Quantified& q) -> FormulaPtr {
              std::string name = used_.insert(q.var).second ? q.var : fresh();
              auto saved = scope.find(q.var) == scope.end() ? std::optional<std::string>{}
                                                             : std::optional<std::string>{scope[q.var]};
              scope[q.var] = name;
              auto body = go(q.body, scope);
              if (saved) scope[q.var] = *saved;
              else scope.erase(q.var);
              return std::make_shared<Formula>(Formula{Quantified{q.quantifier, name, body}});
            },
        },
        f->node);
  }

  std::set<std::string> used_;
  std::size_t counter_ = 0;
};

}  // namespace

FormulaPtr normalize(const FormulaPtr& f) { return Normalizer{}.run(f); }

}  // namespace buchi::syntax
