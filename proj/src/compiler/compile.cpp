#include <stdexcept>

#include "buchi/compiler.hpp"
#include "syntax/visit.hpp"

namespace buchi::compiler {

using automata::BoolOp;
using automata::Dfa;
using namespace syntax;

namespace {

class Compiler {
public:
  Compiler(const CompileConfig& cfg, const PredicateEnv& env) : cfg_(cfg), env_(env) {}

  Dfa run(const Formula& f) {
    return std::visit(
        overloaded{
            [&](const CoreAtom& a) { return atom_automaton(a, cfg_); },
            [&](const Predicate& p) {
              auto it = env_.find(p.name);
              if (it == env_.end()) throw std::invalid_argument("unknown predicate '" + p.name + "'");
              if (it->second.arity() != p.args.size())
                throw std::invalid_argument("predicate '" + p.name + "' applied to wrong number of arguments");
              if (it->second.base() != cfg_.base)
                throw std::invalid_argument("predicate '" + p.name + "' was built for another base");
              return step(automata::rename_tracks(it->second, p.args));
            },
            [&](const Comparison&) -> Dfa { throw std::logic_error("compile expects a normalized formula"); },
            [&](const Congruence&) -> Dfa { throw std::logic_error("compile expects a normalized formula"); },
            [&](const Negation& n) { return step(automata::complement(run(*n.operand))); },
            [&](const Binary& b) {
              auto lhs = run(*b.lhs);
              auto rhs = run(*b.rhs);
              BoolOp op = BoolOp::And;
              switch (b.op) {
                case Connective::And: op = BoolOp::And; break;
                case Connective::Or: op = BoolOp::Or; break;
                case Connective::Implies: op = BoolOp::Implies; break;
                case Connective::Iff: op = BoolOp::Iff; break;
              }
              return step(automata::boolean_combine(lhs, rhs, op, cfg_.state_cap));
            },
            [&](const Quantified& q) {
              auto body = run(*q.body);
              // A vacuous quantifier over a nonempty domain is the identity;
              // for the infinity quantifier, infinitely many values qualify.
              if (body.track_index(q.var) < 0) return body;
              switch (q.quantifier) {
                case Quantifier::Exists: return step(automata::project(body, q.var, cfg_.state_cap));
                case Quantifier::ExistsInf: return step(automata::exists_inf(body, q.var, cfg_.state_cap));
                case Quantifier::Forall: {
                  auto negated = step(automata::complement(body));
                  auto witness = step(automata::project(negated, q.var, cfg_.state_cap));
                  return step(automata::complement(witness));
                }
              }
              throw std::logic_error("unknown quantifier");
            },
        },
        f.node);
  }

private:
  Dfa step(Dfa d) const { return cfg_.minimize_each_step ? automata::minimize(d) : d; }

  const CompileConfig& cfg_;
  const PredicateEnv& env_;
};

}  // namespace

automata::Dfa compile(const FormulaPtr& f, const CompileConfig& cfg, const PredicateEnv& env) {
  validate(cfg);
  FormulaPtr core = is_core(*f) ? f : normalize(f);
  Dfa d = Compiler(cfg, env).run(*core);
  return automata::align_tracks(d, free_vars(*f));
}

bool decide(const FormulaPtr& sentence, const CompileConfig& cfg, const PredicateEnv& env) {
  auto fv = free_vars(*sentence);
  if (!fv.empty()) throw NotASentence("formula has free variable '" + fv.front() + "'");
  Dfa d = compile(sentence, cfg, env);
  // Zero-arity automata are read through one dummy track "_d = _d".
  Dfa dummy = automata::boolean_combine(d, automata::universal(cfg.base, {"_d"}), BoolOp::And, cfg.state_cap);
  return !automata::is_empty(dummy);
}

std::vector<automata::Tuple> witness(const FormulaPtr& f, const CompileConfig& cfg, std::size_t limit) {
  if (free_vars(*f).empty()) throw std::invalid_argument("witness needs at least one free variable");
  return automata::enumerate(compile(f, cfg), limit);
}

Natural count_below(const FormulaPtr& f, const CompileConfig& cfg, const Natural& bound) {
  auto fv = free_vars(*f);
  if (fv.empty()) throw std::invalid_argument("count needs at least one free variable");
  Dfa d = compile(f, cfg);
  for (const auto& v : fv) {
    auto range = compile(compare(CompareOp::Lt, var(v), constant(bound)), cfg);
    d = automata::minimize(automata::boolean_combine(d, range, BoolOp::And, cfg.state_cap));
  }
  return automata::count(automata::align_tracks(d, fv));
}

}  // namespace buchi::compiler
