#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "automata/cycles.hpp"
#include "buchi/automata.hpp"

namespace buchi::automata {

namespace {

std::vector<detail::CountedLetter> all_letters(const Dfa& a) {
  std::vector<detail::CountedLetter> out;
  for (Letter l = 0; l < a.alphabet_size(); ++l) out.push_back({l, l != 0});
  return out;
}

// Letters sorted as digit tuples in track order (track 0 most significant).
std::vector<Letter> lex_letters(const Dfa& a) {
  std::vector<Letter> order(a.alphabet_size());
  std::iota(order.begin(), order.end(), Letter{0});
  std::vector<Letter> key(a.alphabet_size());
  for (Letter l = 0; l < a.alphabet_size(); ++l) {
    auto sym = a.symbol(l);
    Letter k = 0;
    for (unsigned d : sym) k = k * a.base() + d;
    key[l] = k;
  }
  std::sort(order.begin(), order.end(), [&](Letter x, Letter y) { return key[x] < key[y]; });
  return order;
}

}  // namespace

bool is_empty(const Dfa& a) {
  std::vector<std::uint8_t> seen(a.state_count(), 0);
  std::vector<State> stack{a.initial()};
  seen[a.initial()] = 1;
  while (!stack.empty()) {
    State s = stack.back();
    stack.pop_back();
    if (a.accepting(s)) return false;
    for (Letter l = 0; l < a.alphabet_size(); ++l) {
      State t = a.next(s, l);
      if (!seen[t]) {
        seen[t] = 1;
        stack.push_back(t);
      }
    }
  }
  return true;
}

bool is_finite(const Dfa& a) { return !detail::infinitely_many_from(a, all_letters(a))[a.initial()]; }

bool equivalent(const Dfa& a, const Dfa& b, std::uint64_t state_cap) {
  return is_empty(boolean_combine(a, b, BoolOp::Xor, state_cap));
}

std::vector<Tuple> enumerate(const Dfa& a, std::size_t limit) {
  std::vector<Tuple> out;
  if (limit == 0) return out;
  if (a.accepting(a.initial())) {
    out.push_back(Tuple(a.arity(), 0));
    if (out.size() >= limit) return out;
  }
  const bool infinite = !is_finite(a);
  const std::size_t n = a.state_count();
  const std::size_t max_len = 3 * n;
  const auto letters = lex_letters(a);

  // feasible[r][q]: some canonical suffix of exactly r >= 1 symbols leads from q to acceptance.
  std::vector<std::vector<std::uint8_t>> feasible(1);
  auto extend = [&] {
    std::size_t r = feasible.size();
    std::vector<std::uint8_t> row(n, 0);
    for (State q = 0; q < n; ++q)
      for (Letter l = 0; l < a.alphabet_size() && !row[q]; ++l) {
        State t = a.next(q, l);
        row[q] = r == 1 ? (l != 0 && a.accepting(t)) : feasible[r - 1][t];
      }
    feasible.push_back(std::move(row));
  };

  Word word;
  struct Frame {
    State state;
    std::size_t next_letter;
  };
  for (std::size_t len = 1; out.size() < limit; ++len) {
    if (!infinite && len > max_len) break;
    while (feasible.size() <= len) extend();
    if (!feasible[len][a.initial()]) continue;
    std::vector<Frame> stack{{a.initial(), 0}};
    word.clear();
    while (!stack.empty() && out.size() < limit) {
      auto& top = stack.back();
      std::size_t remaining = len - (stack.size() - 1);
      if (top.next_letter == letters.size()) {
        stack.pop_back();
        if (!word.empty()) word.pop_back();
        continue;
      }
      Letter l = letters[top.next_letter++];
      State t = a.next(top.state, l);
      if (remaining == 1) {
        if (l != 0 && a.accepting(t)) {
          word.push_back(a.symbol(l));
          out.push_back(decode(word, a.base(), a.arity()));
          word.pop_back();
        }
      } else if (feasible[remaining - 1][t]) {
        word.push_back(a.symbol(l));
        stack.push_back({t, 0});
      }
    }
  }
  return out;
}

Natural count(const Dfa& a) {
  if (!is_finite(a)) throw std::domain_error("automaton accepts infinitely many tuples");
  const std::size_t n = a.state_count();
  Natural total = a.accepting(a.initial()) ? 1 : 0;
  std::vector<Natural> cnt(n, 0), prev;
  for (State q = 0; q < n; ++q)
    for (Letter l = 1; l < a.alphabet_size(); ++l)
      if (a.accepting(a.next(q, l))) cnt[q] += 1;
  for (std::size_t len = 1; len <= 3 * n; ++len) {
    total += cnt[a.initial()];
    prev.swap(cnt);
    cnt.assign(n, 0);
    for (State q = 0; q < n; ++q)
      for (Letter l = 0; l < a.alphabet_size(); ++l) cnt[q] += prev[a.next(q, l)];
  }
  return total;
}

}  // namespace buchi::automata
