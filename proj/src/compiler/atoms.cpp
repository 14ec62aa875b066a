#include <map>
#include <stdexcept>

#include "buchi/compiler.hpp"

namespace buchi::compiler {

using automata::Dfa;
using automata::Letter;
using automata::State;
using syntax::AtomKind;

namespace {

std::size_t arity_of(AtomKind k) {
  switch (k) {
    case AtomKind::Eq: return 2;
    case AtomKind::EqConst: return 1;
    case AtomKind::Add: return 3;
    case AtomKind::Lt: return 2;
    case AtomKind::Mod: return 1;
    case AtomKind::VEq: return 2;
  }
  return 0;
}

std::vector<std::string> placeholders(std::size_t n) {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < n; ++i) out.push_back("#" + std::to_string(i));
  return out;
}

Dfa eq_automaton(unsigned b) {
  Dfa d(b, placeholders(2), 2);  // 0 = equal so far, 1 = sink
  d.set_accepting(0, true);
  for (Letter l = 0; l < d.alphabet_size(); ++l) {
    auto s = d.symbol(l);
    d.set_next(0, l, s[0] == s[1] ? 0 : 1);
    d.set_next(1, l, 1);
  }
  return d;
}

Dfa eq_const_automaton(unsigned b, const Natural& c) {
  auto digits = digits_lsd(c, b);
  const auto len = static_cast<State>(digits.size());
  Dfa d(b, placeholders(1), len + 2);  // position 0..len, then sink
  const State sink = len + 1;
  d.set_accepting(len, true);
  for (State i = 0; i <= sink; ++i)
    for (Letter l = 0; l < d.alphabet_size(); ++l) {
      State to = sink;
      if (i < len && l == digits[i]) to = i + 1;
      if (i == len && l == 0) to = len;
      d.set_next(i, l, to);
    }
  return d;
}

Dfa add_automaton(unsigned b) {
  Dfa d(b, placeholders(3), 3);  // carry 0, carry 1, sink
  d.set_accepting(0, true);
  for (State carry = 0; carry < 2; ++carry)
    for (Letter l = 0; l < d.alphabet_size(); ++l) {
      auto s = d.symbol(l);
      unsigned total = s[0] + s[1] + carry;
      d.set_next(carry, l, total % b == s[2] ? total / b : 2);
    }
  for (Letter l = 0; l < d.alphabet_size(); ++l) d.set_next(2, l, 2);
  return d;
}

Dfa lt_automaton(unsigned b) {
  // The most significant differing digit decides; reading LSD-first that is
  // the last difference seen.
  Dfa d(b, placeholders(2), 3);  // 0 = equal, 1 = less, 2 = greater
  d.set_accepting(1, true);
  for (State s = 0; s < 3; ++s)
    for (Letter l = 0; l < d.alphabet_size(); ++l) {
      auto sym = d.symbol(l);
      d.set_next(s, l, sym[0] < sym[1] ? 1 : sym[0] > sym[1] ? 2 : s);
    }
  return d;
}

Dfa mod_automaton(unsigned b, std::uint64_t m, std::uint64_t c, std::uint64_t cap) {
  if (m < 2 || c >= m) throw std::invalid_argument("congruence needs modulus >= 2 and residue below it");
  // State: (value read so far mod m, b^k mod m).
  Dfa d(b, placeholders(1), 0);
  std::map<std::pair<std::uint64_t, std::uint64_t>, State> ids;
  std::vector<std::pair<std::uint64_t, std::uint64_t>> states;
  auto intern = [&](std::uint64_t r, std::uint64_t p) {
    auto [it, inserted] = ids.try_emplace({r, p}, static_cast<State>(states.size()));
    if (inserted) {
      states.emplace_back(r, p);
      if (states.size() > cap) throw CapacityExceeded(cap, "congruence automaton exceeds state cap");
      State s = d.add_state();
      d.set_accepting(s, r == c);
    }
    return it->second;
  };
  d.set_initial(intern(0, 1 % m));
  for (std::size_t i = 0; i < states.size(); ++i) {
    auto [r, p] = states[i];
    for (Letter l = 0; l < b; ++l) {
      State to = intern((r + (l % m) * p) % m, (p * b) % m);
      d.set_next(static_cast<State>(i), l, to);
    }
  }
  return d;
}

Dfa veq_automaton(unsigned b) {
  // 0: both all-zero so far (V(0) = 0 accepted); 1: lowest nonzero digit of
  // x seen together with y's single 1 digit, y must stay zero; 2: sink.
  Dfa d(b, placeholders(2), 3);
  d.set_accepting(0, true);
  d.set_accepting(1, true);
  for (Letter l = 0; l < d.alphabet_size(); ++l) {
    auto s = d.symbol(l);
    State from_zero = 2;
    if (s[0] == 0 && s[1] == 0) from_zero = 0;
    else if (s[0] != 0 && s[1] == 1) from_zero = 1;
    d.set_next(0, l, from_zero);
    d.set_next(1, l, s[1] == 0 ? 1 : 2);
    d.set_next(2, l, 2);
  }
  return d;
}

}  // namespace

automata::Dfa atom_automaton(const syntax::CoreAtom& atom, const CompileConfig& cfg) {
  validate(cfg);
  if (atom.args.size() != arity_of(atom.kind)) throw std::invalid_argument("atom has wrong number of arguments");
  const unsigned b = cfg.base;
  Dfa raw;
  switch (atom.kind) {
    case AtomKind::Eq: raw = eq_automaton(b); break;
    case AtomKind::EqConst: raw = eq_const_automaton(b, atom.constant); break;
    case AtomKind::Add: raw = add_automaton(b); break;
    case AtomKind::Lt: raw = lt_automaton(b); break;
    case AtomKind::Mod:
      raw = mod_automaton(b, atom.modulus, static_cast<std::uint64_t>(atom.constant), cfg.state_cap);
      break;
    case AtomKind::VEq: raw = veq_automaton(b); break;
  }
  if (raw.state_count() > cfg.state_cap) throw CapacityExceeded(cfg.state_cap, "atom automaton exceeds state cap");
  return automata::minimize(automata::rename_tracks(raw, atom.args));
}

void validate(const CompileConfig& cfg) {
  if (cfg.base < 2) throw std::invalid_argument("base must be at least 2");
  if (cfg.state_cap < 1) throw std::invalid_argument("state cap must be at least 1");
}

}  // namespace buchi::compiler
