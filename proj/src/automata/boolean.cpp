#include <stdexcept>
#include <unordered_map>

#include "automata/internal.hpp"
#include "buchi/automata.hpp"

namespace buchi::automata {

namespace {

bool apply(BoolOp op, bool x, bool y) {
  switch (op) {
    case BoolOp::And: return x && y;
    case BoolOp::Or: return x || y;
    case BoolOp::Implies: return !x || y;
    case BoolOp::Iff: return x == y;
    case BoolOp::Xor: return x != y;
  }
  return false;
}

std::vector<std::size_t> positions_in(const std::vector<std::string>& sub, const std::vector<std::string>& all) {
  std::vector<std::size_t> out;
  for (const auto& t : sub)
    for (std::size_t i = 0; i < all.size(); ++i)
      if (all[i] == t) out.push_back(i);
  return out;
}

}  // namespace

Dfa boolean_combine(const Dfa& a, const Dfa& b, BoolOp op, std::uint64_t state_cap) {
  if (a.base() != b.base()) throw std::invalid_argument("cannot combine automata over different bases");
  auto tracks = unify_tracks(a.tracks(), b.tracks());
  Dfa out(a.base(), tracks, 0);
  auto la = detail::letter_projection(a.base(), tracks.size(), positions_in(a.tracks(), tracks));
  auto lb = detail::letter_projection(a.base(), tracks.size(), positions_in(b.tracks(), tracks));

  std::unordered_map<std::uint64_t, State> ids;
  std::vector<std::pair<State, State>> pairs;
  auto intern = [&](State x, State y) {
    std::uint64_t key = (std::uint64_t(x) << 32) | y;
    auto [it, inserted] = ids.try_emplace(key, static_cast<State>(pairs.size()));
    if (inserted) {
      pairs.emplace_back(x, y);
      detail::check_cap(pairs.size(), state_cap, "product");
      State s = out.add_state();
      out.set_accepting(s, apply(op, a.accepting(x), b.accepting(y)));
    }
    return it->second;
  };
  out.set_initial(intern(a.initial(), b.initial()));
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    auto [x, y] = pairs[i];
    for (Letter l = 0; l < out.alphabet_size(); ++l) {
      State t = intern(a.next(x, la[l]), b.next(y, lb[l]));
      out.set_next(static_cast<State>(i), l, t);
    }
  }
  return out;
}

Dfa saturate_padding(const Dfa& a) {
  // Reverse the functional zero-successor graph and flood from accepting states.
  const std::size_t n = a.state_count();
  std::vector<std::vector<State>> preds(n);
  for (State s = 0; s < n; ++s) preds[a.next(s, 0)].push_back(s);
  std::vector<State> stack;
  std::vector<std::uint8_t> good(n, 0);
  for (State s = 0; s < n; ++s)
    if (a.accepting(s)) {
      good[s] = 1;
      stack.push_back(s);
    }
  while (!stack.empty()) {
    State s = stack.back();
    stack.pop_back();
    for (State p : preds[s])
      if (!good[p]) {
        good[p] = 1;
        stack.push_back(p);
      }
  }
  Dfa out = a;
  for (State s = 0; s < n; ++s) out.set_accepting(s, good[s] != 0);
  return out;
}

Dfa complement(const Dfa& a) {
  // Flipping acceptance alone is only sound on padding-closed input, so
  // closure is re-established on the original before flipping.
  Dfa out = saturate_padding(a);
  for (State s = 0; s < out.state_count(); ++s) out.set_accepting(s, !out.accepting(s));
  return out;
}

}  // namespace buchi::automata
