#include "buchi/countermodel.hpp"

#include <json.hpp>
#include <sstream>
#include <stdexcept>

#include "syntax/visit.hpp"

namespace buchi::countermodel {

using namespace syntax;

CmElement::CmElement(Rational p_, Integer q_) : p(std::move(p_)), q(std::move(q_)) {
  if (!valid(p, q)) throw std::invalid_argument("not an element: " + p.str() + ", " + q.str());
}

std::string to_string(const CmElement& x) { return "(" + x.p.str() + "," + x.q.str() + ")"; }

CmElement cm_add(const CmElement& x, const CmElement& y) { return CmElement(x.p + y.p, x.q + y.q); }

bool cm_leq(const CmElement& x, const CmElement& y) { return x.p < y.p || (x.p == y.p && x.q <= y.q); }

bool cm_lt(const CmElement& x, const CmElement& y) { return cm_leq(x, y) && !(x == y); }

namespace {

Integer two_part(Integer q) {
  if (q < 0) q = -q;
  Integer p = 1;
  while (q % 2 == 0) {
    q /= 2;
    p *= 2;
  }
  return p;
}

}  // namespace

CmElement cm_v2(const CmElement& x, V2Variant variant) {
  if (x.standard()) return x.q == 0 ? CmElement() : CmElement(0, two_part(x.q));
  if (x.q == 0) return x;
  if (x.q % 2 != 0) return CmElement(0, variant == V2Variant::OddReturnsTwo ? 2 : 1);
  return CmElement(0, two_part(x.q));
}

CmElement cm_scale(const Integer& n, const CmElement& x) {
  if (n < 0) throw std::invalid_argument("negative scale");
  return CmElement(Rational(n) * x.p, n * x.q);
}

std::optional<CmElement> cm_divide_difference(const CmElement& x, const CmElement& y, unsigned n) {
  if (n == 0) throw std::invalid_argument("division by zero");
  Integer dq = x.q - y.q;
  if (dq % n != 0) return std::nullopt;
  Rational up = (x.p - y.p) / n;
  Integer uq = dq / n;
  if (!CmElement::valid(up, uq)) return std::nullopt;
  return CmElement(up, uq);
}

bool cm_congruent(const CmElement& x, const CmElement& y, unsigned n) {
  return cm_divide_difference(x, y, n).has_value() || cm_divide_difference(y, x, n).has_value();
}

CmElement cm_eval_term(const Term& t, const CmAssignment& a, V2Variant variant) {
  return std::visit(overloaded{
                        [&](const Variable& v) -> CmElement {
                          auto it = a.find(v.name);
                          if (it == a.end()) throw std::out_of_range("unassigned variable '" + v.name + "'");
                          return it->second;
                        },
                        [&](const Constant& c) { return CmElement(0, Integer(c.value)); },
                        [&](const Sum& s) {
                          return cm_add(cm_eval_term(*s.lhs, a, variant), cm_eval_term(*s.rhs, a, variant));
                        },
                        [&](const Scale& s) {
                          return cm_scale(Integer(s.coefficient), cm_eval_term(*s.operand, a, variant));
                        },
                        [&](const VApp& v) { return cm_v2(cm_eval_term(*v.operand, a, variant), variant); },
                    },
                    t.node);
}

bool cm_eval_qf(const Formula& f, const CmAssignment& a, V2Variant variant) {
  auto get = [&](const std::string& n) -> const CmElement& {
    auto it = a.find(n);
    if (it == a.end()) throw std::out_of_range("unassigned variable '" + n + "'");
    return it->second;
  };
  return std::visit(
      overloaded{
          [&](const Comparison& c) {
            auto l = cm_eval_term(*c.lhs, a, variant);
            auto r = cm_eval_term(*c.rhs, a, variant);
            switch (c.op) {
              case CompareOp::Eq: return l == r;
              case CompareOp::Ne: return !(l == r);
              case CompareOp::Lt: return cm_lt(l, r);
              case CompareOp::Le: return cm_leq(l, r);
              case CompareOp::Gt: return cm_lt(r, l);
              case CompareOp::Ge: return cm_leq(r, l);
            }
            return false;
          },
          [&](const Congruence& c) {
            return cm_congruent(cm_eval_term(*c.term, a, variant), CmElement(0, Integer(c.residue)),
                                static_cast<unsigned>(c.modulus));
          },
          [&](const CoreAtom& c) {
            const auto& x = c.args;
            switch (c.kind) {
              case AtomKind::Eq: return get(x[0]) == get(x[1]);
              case AtomKind::EqConst: return get(x[0]) == CmElement(0, Integer(c.constant));
              case AtomKind::Add: return cm_add(get(x[0]), get(x[1])) == get(x[2]);
              case AtomKind::Lt: return cm_lt(get(x[0]), get(x[1]));
              case AtomKind::Mod:
                return cm_congruent(get(x[0]), CmElement(0, Integer(c.constant)), static_cast<unsigned>(c.modulus));
              case AtomKind::VEq: return cm_v2(get(x[0]), variant) == get(x[1]);
            }
            return false;
          },
          [&](const Predicate& p) -> bool { throw std::invalid_argument("no predicate '" + p.name + "' here"); },
          [&](const Negation& n) { return !cm_eval_qf(*n.operand, a, variant); },
          [&](const Binary& b) {
            bool l = cm_eval_qf(*b.lhs, a, variant);
            switch (b.op) {
              case Connective::And: return l && cm_eval_qf(*b.rhs, a, variant);
              case Connective::Or: return l || cm_eval_qf(*b.rhs, a, variant);
              case Connective::Implies: return !l || cm_eval_qf(*b.rhs, a, variant);
              case Connective::Iff: return l == cm_eval_qf(*b.rhs, a, variant);
            }
            return false;
          },
          [&](const Quantified&) -> bool { throw std::invalid_argument("quantified formula"); },
      },
      f.node);
}

CmElement sample_element(std::mt19937_64& rng) {
  auto uniform = [&](std::int64_t lo, std::int64_t hi) {
    return std::uniform_int_distribution<std::int64_t>(lo, hi)(rng);
  };
  auto positive_p = [&]() -> Rational {
    if (uniform(0, 1) == 0) return Rational(Integer(uniform(1, 1024)), Integer(1) << static_cast<unsigned>(uniform(0, 6)));
    return Rational(Integer(uniform(1, 64)), Integer(uniform(1, 12)));
  };
  switch (uniform(0, 3)) {
    case 0: return CmElement(0, uniform(0, 1024));
    case 1: return CmElement(positive_p(), 0);
    default: return CmElement(positive_p(), uniform(-1024, 1024));
  }
}

namespace {

const CmElement kZero;
const CmElement kOne(0, 1);

CmElement minus(const CmElement& x, const CmElement& y) { return CmElement(x.p - y.p, x.q - y.q); }

struct Instance {
  bool ok;
  std::string detail;
};

class Checker {
public:
  Checker(std::mt19937_64& rng, V2Variant variant) : rng_(rng), variant_(variant) {}

  CmElement draw() { return sample_element(rng_); }

  // An element equal to x half the time, so that equalities in antecedents
  // are not vacuous.
  CmElement draw_near(const CmElement& x) { return coin() ? x : draw(); }

  bool coin() { return std::uniform_int_distribution<int>(0, 1)(rng_) == 1; }

  unsigned modulus() {
    static const unsigned kModuli[] = {2, 3, 5, 7};
    return kModuli[std::uniform_int_distribution<int>(0, 3)(rng_)];
  }

  CmElement v(const CmElement& x) const { return cm_v2(x, variant_); }

  Instance run(int id) {
    switch (id) {
      case 1: {
        // x = 0 <-> A y. x + y = y; a nonzero x is refuted by y = 0.
        CmElement x = coin() ? kZero : draw(), y = draw();
        bool all = x == kZero ? cm_add(x, y) == y : cm_add(x, kZero) == kZero;
        return {(x == kZero) == all, "x=" + to_string(x) + " y=" + to_string(y)};
      }
      case 2: {
        // x < y <-> E z. x + z = y & z != 0; the only candidate is z = y - x.
        CmElement x = draw(), y = draw_near(x);
        if (coin()) std::swap(x, y);
        bool exists = CmElement::valid(y.p - x.p, y.q - x.q) && minus(y, x) != kZero &&
                      cm_add(x, minus(y, x)) == y;
        return {cm_lt(x, y) == exists, "x=" + to_string(x) + " y=" + to_string(y)};
      }
      case 3: {
        // x = 1 <-> 0 < x & !E z. (0 < z & z < x). For x > 0 other than 1
        // the witness is z = 1; for x = 1 a sampled z must not lie between.
        CmElement x = coin() ? kOne : draw(), z = draw();
        bool rhs;
        if (!cm_lt(kZero, x)) rhs = false;
        else if (x == kOne) rhs = !(cm_lt(kZero, z) && cm_lt(z, x));
        else rhs = !cm_lt(kOne, x);
        return {(x == kOne) == rhs, "x=" + to_string(x) + " z=" + to_string(z)};
      }
      case 4: {
        // x =_n y <-> E u. (x = n u + y | y = n u + x), u found by division.
        unsigned n = modulus();
        CmElement x = draw(), y = draw_near(x);
        if (coin()) y = cm_add(cm_scale(n, draw()), x);
        std::optional<CmElement> u = cm_divide_difference(x, y, n);
        bool exists = u && cm_add(cm_scale(n, *u), y) == x;
        if (!exists) {
          u = cm_divide_difference(y, x, n);
          exists = u && cm_add(cm_scale(n, *u), x) == y;
        }
        return {cm_congruent(x, y, n) == exists,
                "n=" + std::to_string(n) + " x=" + to_string(x) + " y=" + to_string(y)};
      }
      case 5: {
        CmElement x = draw();
        return {!(cm_add(x, kOne) == kZero), "x=" + to_string(x)};
      }
      case 6: {
        CmElement x = draw(), y = draw_near(x), z = draw();
        return {!(cm_add(x, z) == cm_add(y, z)) || x == y,
                "x=" + to_string(x) + " y=" + to_string(y) + " z=" + to_string(z)};
      }
      case 7: {
        CmElement x = draw(), y = draw(), z = draw();
        return {cm_add(cm_add(x, y), z) == cm_add(x, cm_add(y, z)),
                "x=" + to_string(x) + " y=" + to_string(y) + " z=" + to_string(z)};
      }
      case 8: {
        // x = 0 | E y. x = y + 1, with y = x - 1.
        CmElement x = draw();
        bool ok = x == kZero ||
                  (CmElement::valid(x.p, x.q - 1) && cm_add(CmElement(x.p, x.q - 1), kOne) == x);
        return {ok, "x=" + to_string(x)};
      }
      case 9: {
        CmElement x = draw(), y = draw();
        return {cm_add(x, y) == cm_add(y, x), "x=" + to_string(x) + " y=" + to_string(y)};
      }
      case 10: {
        CmElement x = draw(), y = draw_near(x);
        return {cm_lt(x, y) || x == y || cm_lt(y, x), "x=" + to_string(x) + " y=" + to_string(y)};
      }
      case 11: {
        // Some residue r < n with x =_n r; the quotient is (p/n, (q-r)/n).
        unsigned n = modulus();
        CmElement x = draw();
        Integer r = x.q % n;
        if (r < 0) r += n;
        CmElement rbar(0, r);
        std::optional<CmElement> u = cm_divide_difference(x, rbar, n);
        bool ok = u && cm_add(cm_scale(n, *u), rbar) == x && cm_congruent(x, rbar, n);
        return {ok, "n=" + std::to_string(n) + " x=" + to_string(x)};
      }
      case 12: {
        CmElement x = coin() ? kZero : draw();
        return {(v(x) == kZero) == (x == kZero), "x=" + to_string(x) + " V(x)=" + to_string(v(x))};
      }
      case 13:
      case 14: {
        // x = t + t has the single candidate t = x/2, so x is even exactly
        // when q is.
        CmElement x = draw();
        bool even = x.q % 2 == 0;
        std::string d = "x=" + to_string(x) + " V(x)=" + to_string(v(x));
        if (id == 13) return {even || v(x) == kOne, d};
        if (!even) return {true, d};
        CmElement t(x.p / 2, x.q / 2);
        return {cm_add(t, t) == x && v(x) == cm_add(v(t), v(t)), d + " t=" + to_string(t) + " V(t)=" + to_string(v(t))};
      }
    }
    throw std::logic_error("unknown axiom");
  }

private:
  std::mt19937_64& rng_;
  V2Variant variant_;
};

const char* const kStatements[] = {
    "x = 0 <-> A y. x + y = y",
    "x < y <-> E z. (x + z = y & z != 0)",
    "x = 1 <-> 0 < x & !E z. (0 < z & z < x)",
    "x =_n y <-> E u. (x = n*u + y | y = n*u + x)",
    "!(x + 1 = 0)",
    "x + z = y + z -> x = y",
    "(x + y) + z = x + (y + z)",
    "x = 0 | E y. x = y + 1",
    "x + y = y + x",
    "x < y | x = y | y < x",
    "x =_n 0 | x =_n 1 | ... | x =_n n-1",
    "V(x) = 0 <-> x = 0",
    "!E t. t + t = x -> V(x) = 1",
    "E t. t + t = x -> V(x) = V(t) + V(t)",
};

}  // namespace

AxiomReport check_axioms(std::uint64_t samples, std::uint64_t seed, V2Variant variant) {
  if (samples == 0) throw std::invalid_argument("sample count must be at least 1");
  std::mt19937_64 rng(seed);
  Checker checker(rng, variant);
  AxiomReport report;
  report.sample_count = samples;
  report.seed = seed;
  for (int id = 1; id <= 14; ++id) report.axioms.push_back({id, kStatements[id - 1], 0, 0, std::nullopt});
  for (std::uint64_t i = 0; i < samples; ++i) {
    for (auto& ax : report.axioms) {
      Instance inst = checker.run(ax.id);
      ++ax.samples;
      if (!inst.ok) {
        ++ax.failures;
        if (!ax.first_counterexample) ax.first_counterexample = inst.detail;
      }
    }
  }
  return report;
}

bool AxiomReport::all_passed() const {
  for (const auto& a : axioms)
    if (a.failures != 0) return false;
  return true;
}

std::string AxiomReport::to_table() const {
  std::ostringstream out;
  out << "axiom  samples  failures  statement\n";
  for (const auto& a : axioms) {
    out.width(5);
    out << a.id << "  ";
    out.width(7);
    out << a.samples << "  ";
    out.width(8);
    out << a.failures << "  " << a.statement << "\n";
    if (a.first_counterexample) out << "       counterexample: " << *a.first_counterexample << "\n";
  }
  out << (all_passed() ? "all axioms hold on " : "some axioms fail on ") << sample_count << " samples (seed "
      << seed << ")\n";
  return out.str();
}

std::string AxiomReport::to_json() const {
  nlohmann::ordered_json j;
  j["samples"] = sample_count;
  j["seed"] = seed;
  j["allPassed"] = all_passed();
  nlohmann::ordered_json axs = nlohmann::ordered_json::object();
  for (const auto& a : axioms) {
    nlohmann::ordered_json e;
    e["statement"] = a.statement;
    e["samples"] = a.samples;
    e["failures"] = a.failures;
    e["firstCounterexample"] = a.first_counterexample ? nlohmann::ordered_json(*a.first_counterexample) : nullptr;
    axs[std::to_string(a.id)] = e;
  }
  j["axioms"] = axs;
  return j.dump();
}

SeparatingWitness separating_counterexample(const Rational& p) {
  if (p <= 0) throw std::invalid_argument("p must be positive");
  SeparatingWitness w{CmElement(p, 0), CmElement(p * 3 / 2, 0)};
  w.x_is_own_valuation = cm_v2(w.x) == w.x;
  w.x_below_y = cm_lt(w.x, w.y);
  w.y_below_double = cm_lt(w.y, cm_add(w.x, w.x));
  w.y_is_own_valuation = cm_v2(w.y) == w.y;
  return w;
}

FormulaPtr separating_sentence() {
  return parse("A x. (V(x) = x -> A y. (x < y & y < x + x -> V(y) < y))");
}

Rational parse_rational(const std::string& text) {
  auto slash = text.find('/');
  try {
    Natural num = parse_natural(text.substr(0, slash));
    Natural den = slash == std::string::npos ? Natural(1) : parse_natural(text.substr(slash + 1));
    if (den == 0) throw std::invalid_argument("zero denominator");
    return Rational(Integer(num), Integer(den));
  } catch (const std::invalid_argument&) {
    throw std::invalid_argument("malformed rational '" + text + "'");
  }
}

}  // namespace buchi::countermodel
