#include <algorithm>
#include <deque>

#include "buchi/automata.hpp"

namespace buchi::automata {

namespace {

// Breadth-first renumbering from the initial state, visiting letters in
// increasing order. `cls` maps states of `a` to class ids; the result has one
// state per reachable class.
Dfa renumber(const Dfa& a, const std::vector<State>& cls, std::size_t classes) {
  constexpr State kUnset = ~State{0};
  std::vector<State> order(classes, kUnset);
  std::vector<State> repr(classes, kUnset);
  for (State s = 0; s < a.state_count(); ++s)
    if (repr[cls[s]] == kUnset) repr[cls[s]] = s;

  std::vector<State> queue{cls[a.initial()]};
  order[cls[a.initial()]] = 0;
  for (std::size_t i = 0; i < queue.size(); ++i) {
    State s = repr[queue[i]];
    for (Letter l = 0; l < a.alphabet_size(); ++l) {
      State c = cls[a.next(s, l)];
      if (order[c] == kUnset) {
        order[c] = static_cast<State>(queue.size());
        queue.push_back(c);
      }
    }
  }
  Dfa out(a.base(), a.tracks(), queue.size());
  for (std::size_t i = 0; i < queue.size(); ++i) {
    State s = repr[queue[i]];
    out.set_accepting(static_cast<State>(i), a.accepting(s));
    for (Letter l = 0; l < a.alphabet_size(); ++l) out.set_next(static_cast<State>(i), l, order[cls[a.next(s, l)]]);
  }
  out.set_initial(0);
  return out;
}

}  // namespace

Dfa trim(const Dfa& a) {
  std::vector<State> cls(a.state_count());
  for (State s = 0; s < a.state_count(); ++s) cls[s] = s;
  return renumber(a, cls, a.state_count());
}

Dfa minimize(const Dfa& input) {
  const Dfa a = trim(input);
  const std::size_t n = a.state_count();
  const std::size_t k = a.alphabet_size();

  // Inverse transitions in CSR form: for letter l and target t, the sources
  // are inv[start[l*n+t] .. start[l*n+t+1]).
  std::vector<std::uint32_t> start(k * n + 1, 0);
  for (State s = 0; s < n; ++s)
    for (Letter l = 0; l < k; ++l) ++start[l * n + a.next(s, l) + 1];
  for (std::size_t i = 1; i < start.size(); ++i) start[i] += start[i - 1];
  std::vector<State> inv(n * k);
  {
    std::vector<std::uint32_t> fill(start.begin(), start.end() - 1);
    for (State s = 0; s < n; ++s)
      for (Letter l = 0; l < k; ++l) inv[fill[l * n + a.next(s, l)]++] = s;
  }

  // Partition refinement over a permutation of the states; block b owns
  // elems[first[b] .. last[b]), of which the first marked[b] are marked.
  std::vector<State> elems(n), loc(n), block(n);
  std::vector<std::uint32_t> first, last, marked;
  {
    std::size_t pos = 0;
    for (int acc = 1; acc >= 0; --acc) {
      std::size_t begin = pos;
      for (State s = 0; s < n; ++s)
        if (a.accepting(s) == (acc == 1)) {
          elems[pos] = s;
          loc[s] = static_cast<State>(pos);
          ++pos;
        }
      if (pos > begin) {
        for (std::size_t i = begin; i < pos; ++i) block[elems[i]] = static_cast<State>(first.size());
        first.push_back(static_cast<std::uint32_t>(begin));
        last.push_back(static_cast<std::uint32_t>(pos));
        marked.push_back(0);
      }
    }
  }

  std::vector<std::uint8_t> pending;  // (block, letter) in worklist
  std::deque<std::pair<State, Letter>> work;
  auto grow_pending = [&] { pending.resize(first.size() * k, 0); };
  grow_pending();
  if (first.size() == 2) {
    State smaller = (last[0] - first[0] <= last[1] - first[1]) ? 0 : 1;
    for (Letter l = 0; l < k; ++l) {
      work.emplace_back(smaller, l);
      pending[smaller * k + l] = 1;
    }
  }

  std::vector<State> sources;
  std::vector<State> touched;
  while (!work.empty()) {
    auto [splitter, l] = work.front();
    work.pop_front();
    pending[splitter * k + l] = 0;

    sources.clear();
    for (std::uint32_t i = first[splitter]; i < last[splitter]; ++i) {
      State t = elems[i];
      for (std::uint32_t j = start[l * n + t]; j < start[l * n + t + 1]; ++j) sources.push_back(inv[j]);
    }
    touched.clear();
    for (State s : sources) {
      State b = block[s];
      std::uint32_t boundary = first[b] + marked[b];
      if (loc[s] < boundary) continue;  // already marked
      if (marked[b] == 0) touched.push_back(b);
      State other = elems[boundary];
      std::swap(elems[loc[s]], elems[boundary]);
      loc[other] = loc[s];
      loc[s] = boundary;
      ++marked[b];
    }
    for (State b : touched) {
      std::uint32_t m = marked[b];
      marked[b] = 0;
      if (m == last[b] - first[b]) continue;
      // Marked prefix becomes a new block.
      auto nb = static_cast<State>(first.size());
      first.push_back(first[b]);
      last.push_back(first[b] + m);
      marked.push_back(0);
      first[b] += m;
      for (std::uint32_t i = first[nb]; i < last[nb]; ++i) block[elems[i]] = nb;
      grow_pending();
      std::uint32_t size_old = last[b] - first[b];
      for (Letter c = 0; c < k; ++c) {
        State target = (pending[b * k + c] || m <= size_old) ? nb : b;
        if (!pending[target * k + c]) {
          pending[target * k + c] = 1;
          work.emplace_back(target, c);
        }
      }
    }
  }
  return renumber(a, block, first.size());
}

bool is_padding_closed(const Dfa& a) {
  Dfa t = trim(a);
  for (State s = 0; s < t.state_count(); ++s)
    if (t.accepting(s) != t.accepting(t.next(s, 0))) return false;
  return true;
}

}  // namespace buchi::automata
