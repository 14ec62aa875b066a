#include "buchi/buchi.h"

#include <cstdlib>
#include <cstring>
#include <json.hpp>
#include <new>
#include <string>

#include "buchi/automata.hpp"
#include "buchi/compiler.hpp"
#include "buchi/countermodel.hpp"
#include "buchi/orders.hpp"
#include "buchi/syntax.hpp"

struct buchi_formula {
  buchi::syntax::FormulaPtr f;
};

struct buchi_dfa {
  buchi::automata::Dfa d;
};

namespace {

using json = nlohmann::ordered_json;

thread_local std::string g_error;
thread_local long g_error_position = -1;

buchi_status fail(buchi_status s, const std::string& msg, long position = -1) {
  g_error = msg;
  g_error_position = position;
  return s;
}

char* dup(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

// Runs body, translating exceptions into status codes.
template <class F>
buchi_status guarded(F&& body) {
  g_error.clear();
  g_error_position = -1;
  try {
    body();
    return BUCHI_OK;
  } catch (const buchi::syntax::ParseError& e) {
    return fail(BUCHI_ERR_PARSE, e.what(), static_cast<long>(e.position()));
  } catch (const buchi::CapacityExceeded& e) {
    return fail(BUCHI_ERR_CAPACITY, e.what());
  } catch (const buchi::compiler::NotASentence& e) {
    return fail(BUCHI_ERR_NOT_SENTENCE, e.what());
  } catch (const buchi::orders::NotALinearOrder& e) {
    return fail(BUCHI_ERR_NOT_LINEAR_ORDER, e.what());
  } catch (const nlohmann::json::exception& e) {
    return fail(BUCHI_ERR_INVALID_ARGUMENT, e.what());
  } catch (const std::invalid_argument& e) {
    return fail(BUCHI_ERR_INVALID_ARGUMENT, e.what());
  } catch (const std::domain_error& e) {
    return fail(BUCHI_ERR_INVALID_ARGUMENT, e.what());
  } catch (const std::out_of_range& e) {
    return fail(BUCHI_ERR_INVALID_ARGUMENT, e.what());
  } catch (const std::bad_alloc&) {
    return fail(BUCHI_ERR_CAPACITY, "out of memory");
  } catch (const std::exception& e) {
    return fail(BUCHI_ERR_INTERNAL, e.what());
  } catch (...) {
    return fail(BUCHI_ERR_INTERNAL, "unknown error");
  }
}

void require(const void* p, const char* what) {
  if (!p) throw std::invalid_argument(std::string(what) + " is null");
}

buchi::compiler::CompileConfig config_of(const buchi_config* cfg) {
  buchi::compiler::CompileConfig out;
  if (cfg) {
    out.base = cfg->base;
    out.state_cap = cfg->state_cap;
    out.minimize_each_step = cfg->minimize_each_step != 0;
  }
  buchi::compiler::validate(out);
  return out;
}

json tuple_json(const buchi::automata::Tuple& t) {
  json row = json::array();
  for (const auto& v : t) row.push_back(buchi::to_string(v));
  return row;
}

buchi::orders::OrderSpec spec_of(const buchi_formula* relation, const buchi_formula* domain) {
  require(relation, "relation");
  return buchi::orders::make_order_spec(relation->f, domain ? domain->f : nullptr);
}

}  // namespace

extern "C" {

void buchi_config_init(buchi_config* cfg) {
  if (!cfg) return;
  buchi::compiler::CompileConfig d;
  cfg->base = d.base;
  cfg->state_cap = d.state_cap;
  cfg->minimize_each_step = d.minimize_each_step ? 1 : 0;
}

const char* buchi_version(void) { return "0.1.0"; }

const char* buchi_last_error(void) { return g_error.c_str(); }

long buchi_last_error_position(void) { return g_error_position; }

void buchi_string_free(char* s) { std::free(s); }

buchi_status buchi_formula_parse(const char* text, buchi_formula** out) {
  return guarded([&] {
    require(text, "text");
    require(out, "out");
    *out = new buchi_formula{buchi::syntax::parse(text)};
  });
}

void buchi_formula_free(buchi_formula* f) { delete f; }

buchi_status buchi_formula_render(const buchi_formula* f, char** out) {
  return guarded([&] {
    require(f, "formula");
    require(out, "out");
    *out = dup(buchi::syntax::render(f->f));
  });
}

buchi_status buchi_formula_free_vars(const buchi_formula* f, char** out_json) {
  return guarded([&] {
    require(f, "formula");
    require(out_json, "out");
    *out_json = dup(json(buchi::syntax::free_vars(*f->f)).dump());
  });
}

buchi_status buchi_formula_normalize(const buchi_formula* f, buchi_formula** out) {
  return guarded([&] {
    require(f, "formula");
    require(out, "out");
    *out = new buchi_formula{buchi::syntax::normalize(f->f)};
  });
}

buchi_status buchi_order_formula(unsigned k, buchi_formula** out) {
  return guarded([&] {
    require(out, "out");
    *out = new buchi_formula{buchi::orders::order_formula(k)};
  });
}

buchi_status buchi_compile(const buchi_formula* f, const buchi_config* cfg, buchi_dfa** out) {
  return guarded([&] {
    require(f, "formula");
    require(out, "out");
    *out = new buchi_dfa{buchi::compiler::compile(f->f, config_of(cfg))};
  });
}

void buchi_dfa_free(buchi_dfa* d) { delete d; }

size_t buchi_dfa_state_count(const buchi_dfa* d) { return d ? d->d.state_count() : 0; }

buchi_status buchi_dfa_to_json(const buchi_dfa* d, char** out) {
  return guarded([&] {
    require(d, "dfa");
    require(out, "out");
    *out = dup(buchi::automata::to_json(d->d));
  });
}

buchi_status buchi_dfa_to_dot(const buchi_dfa* d, char** out) {
  return guarded([&] {
    require(d, "dfa");
    require(out, "out");
    *out = dup(buchi::automata::to_dot(d->d));
  });
}

buchi_status buchi_dfa_from_json(const char* text, buchi_dfa** out) {
  return guarded([&] {
    require(text, "json");
    require(out, "out");
    *out = new buchi_dfa{buchi::automata::from_json(text)};
  });
}

buchi_status buchi_dfa_accepts(const buchi_dfa* d, const char* const* values, size_t count, int* out) {
  return guarded([&] {
    require(d, "dfa");
    require(out, "out");
    if (count != d->d.arity()) throw std::invalid_argument("expected one value per track");
    if (count) require(values, "values");
    std::vector<buchi::Natural> tuple;
    for (size_t i = 0; i < count; ++i) {
      require(values[i], "value");
      tuple.push_back(buchi::parse_natural(values[i]));
    }
    *out = d->d.accepts(tuple) ? 1 : 0;
  });
}

buchi_status buchi_dfa_equivalent(const buchi_dfa* a, const buchi_dfa* b, int* out) {
  return guarded([&] {
    require(a, "dfa");
    require(b, "dfa");
    require(out, "out");
    *out = buchi::automata::equivalent(a->d, b->d) ? 1 : 0;
  });
}

buchi_status buchi_decide(const buchi_formula* sentence, const buchi_config* cfg, int* out) {
  return guarded([&] {
    require(sentence, "formula");
    require(out, "out");
    *out = buchi::compiler::decide(sentence->f, config_of(cfg)) ? 1 : 0;
  });
}

buchi_status buchi_solve(const buchi_formula* f, const buchi_config* cfg, size_t limit, char** out_json) {
  return guarded([&] {
    require(f, "formula");
    require(out_json, "out");
    auto sols = buchi::compiler::witness(f->f, config_of(cfg), limit);
    json j;
    j["vars"] = buchi::syntax::free_vars(*f->f);
    j["solutions"] = json::array();
    for (const auto& t : sols) j["solutions"].push_back(tuple_json(t));
    *out_json = dup(j.dump());
  });
}

buchi_status buchi_count(const buchi_formula* f, const buchi_config* cfg, const char* bound, char** out) {
  return guarded([&] {
    require(f, "formula");
    require(bound, "bound");
    require(out, "out");
    *out = dup(buchi::to_string(buchi::compiler::count_below(f->f, config_of(cfg), buchi::parse_natural(bound))));
  });
}

buchi_status buchi_rank(const buchi_formula* relation, const buchi_formula* domain, const buchi_config* cfg,
                        uint64_t rank_cap, char** out_json) {
  return guarded([&] {
    require(out_json, "out");
    if (rank_cap < 1) throw std::invalid_argument("rank cap must be at least 1");
    auto r = buchi::orders::rank(spec_of(relation, domain), rank_cap, config_of(cfg));
    json j;
    j["outcome"] = buchi::orders::to_string(r.outcome);
    if (r.outcome == buchi::orders::RankResult::Outcome::FiniteRank) j["value"] = r.value;
    j["cap"] = r.cap;
    j["steps"] = json::array();
    for (const auto& s : r.steps)
      j["steps"].push_back({{"alpha", s.alpha},
                            {"equivalenceStates", s.equivalence_states},
                            {"representativeStates", s.representative_states},
                            {"quotientFinite", s.quotient_finite}});
    *out_json = dup(j.dump());
  });
}

buchi_status buchi_check_linear_order(const buchi_formula* relation, const buchi_formula* domain,
                                      const buchi_config* cfg, int* out, char** out_json) {
  return guarded([&] {
    require(out, "out");
    auto props = buchi::orders::linear_order_properties(spec_of(relation, domain), config_of(cfg));
    bool all = true;
    json j = json::object();
    for (const auto& p : props) {
      all = all && p.holds;
      j[p.name] = {{"holds", p.holds}, {"sentence", buchi::syntax::render(p.sentence)}};
    }
    *out = all ? 1 : 0;
    if (out_json) *out_json = dup(j.dump());
  });
}

buchi_status buchi_compare_direct(unsigned k, const char* x, const char* y, unsigned base, int* out) {
  return guarded([&] {
    require(x, "x");
    require(y, "y");
    require(out, "out");
    if (base < 2) throw std::invalid_argument("base must be at least 2");
    *out = buchi::orders::compare_direct(k, buchi::parse_natural(x), buchi::parse_natural(y), base) ? 1 : 0;
  });
}

buchi_status buchi_cm_check(uint64_t samples, uint64_t seed, int mutated, int* all_passed, char** out_json,
                            char** out_table) {
  using namespace buchi::countermodel;
  return guarded([&] {
    auto report = check_axioms(samples, seed, mutated ? V2Variant::OddReturnsTwo : V2Variant::Faithful);
    if (all_passed) *all_passed = report.all_passed() ? 1 : 0;
    if (out_json) *out_json = dup(report.to_json());
    if (out_table) *out_table = dup(report.to_table());
  });
}

buchi_status buchi_cm_witness(const char* p, int* checks_passed, char** out_json) {
  using namespace buchi::countermodel;
  return guarded([&] {
    require(p, "p");
    auto w = separating_counterexample(parse_rational(p));
    if (checks_passed) *checks_passed = w.checks_passed() ? 1 : 0;
    if (out_json) {
      json j;
      j["x"] = to_string(w.x);
      j["y"] = to_string(w.y);
      j["checks"] = {{"V(x) = x", w.x_is_own_valuation},
                     {"x < y", w.x_below_y},
                     {"y < x + x", w.y_below_double},
                     {"V(y) = y", w.y_is_own_valuation}};
      j["checksPassed"] = w.checks_passed();
      *out_json = dup(j.dump());
    }
  });
}

}  // extern "C"
