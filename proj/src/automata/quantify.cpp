#include <algorithm>
#include <functional>
#include <stdexcept>
#include <unordered_map>

#include "automata/cycles.hpp"
#include "automata/internal.hpp"
#include "buchi/automata.hpp"

namespace buchi::automata {

namespace detail {

std::vector<std::uint32_t> scc_ids(const std::vector<std::vector<std::uint32_t>>& graph) {
  // Iterative Tarjan.
  const std::uint32_t n = static_cast<std::uint32_t>(graph.size());
  constexpr std::uint32_t kUnset = ~std::uint32_t{0};
  std::vector<std::uint32_t> index(n, kUnset), low(n, 0), comp(n, kUnset);
  std::vector<std::uint8_t> on_stack(n, 0);
  std::vector<std::uint32_t> stack;
  std::vector<std::pair<std::uint32_t, std::size_t>> call;
  std::uint32_t counter = 0, comps = 0;
  for (std::uint32_t root = 0; root < n; ++root) {
    if (index[root] != kUnset) continue;
    call.emplace_back(root, 0);
    index[root] = low[root] = counter++;
    stack.push_back(root);
    on_stack[root] = 1;
    while (!call.empty()) {
      auto& [v, edge] = call.back();
      if (edge < graph[v].size()) {
        std::uint32_t w = graph[v][edge++];
        if (index[w] == kUnset) {
          index[w] = low[w] = counter++;
          stack.push_back(w);
          on_stack[w] = 1;
          call.emplace_back(w, 0);
        } else if (on_stack[w]) {
          low[v] = std::min(low[v], index[w]);
        }
        continue;
      }
      if (low[v] == index[v]) {
        for (;;) {
          std::uint32_t w = stack.back();
          stack.pop_back();
          on_stack[w] = 0;
          comp[w] = comps;
          if (w == v) break;
        }
        ++comps;
      }
      std::uint32_t finished = v;
      call.pop_back();
      if (!call.empty()) low[call.back().first] = std::min(low[call.back().first], low[finished]);
    }
  }
  return comp;
}

std::vector<bool> infinitely_many_from(const Dfa& a, const std::vector<CountedLetter>& letters) {
  // Node 3q+p: state q, phase p (0 = last letter padding, 1 = last letter
  // nonzero, 2 = nothing read yet).
  const std::size_t n = a.state_count();
  std::vector<std::vector<std::uint32_t>> graph(3 * n), reverse(3 * n);
  for (State q = 0; q < n; ++q)
    for (std::uint32_t p = 0; p < 3; ++p)
      for (const auto& cl : letters) {
        std::uint32_t to = 3 * a.next(q, cl.letter) + (cl.nonzero ? 1 : 0);
        graph[3 * q + p].push_back(to);
        reverse[to].push_back(3 * q + p);
      }

  std::vector<std::uint8_t> coreach(3 * n, 0);
  std::vector<std::uint32_t> stack;
  for (State q = 0; q < n; ++q)
    if (a.accepting(q))
      for (std::uint32_t p : {1u, 2u}) {
        coreach[3 * q + p] = 1;
        stack.push_back(3 * q + p);
      }
  while (!stack.empty()) {
    auto v = stack.back();
    stack.pop_back();
    for (auto u : reverse[v])
      if (!coreach[u]) {
        coreach[u] = 1;
        stack.push_back(u);
      }
  }

  auto comp = scc_ids(graph);
  std::vector<std::uint32_t> comp_size(3 * n, 0);
  for (auto c : comp) ++comp_size[c];
  std::vector<std::uint8_t> good(3 * n, 0);
  for (std::uint32_t v = 0; v < 3 * n; ++v) {
    if (!coreach[v]) continue;
    bool cyclic = comp_size[comp[v]] > 1 ||
                  std::find(graph[v].begin(), graph[v].end(), v) != graph[v].end();
    if (cyclic) good[v] = 1;
  }
  // Nodes that can reach a good node.
  std::vector<std::uint8_t> reach_good = good;
  for (std::uint32_t v = 0; v < 3 * n; ++v)
    if (good[v]) stack.push_back(v);
  while (!stack.empty()) {
    auto v = stack.back();
    stack.pop_back();
    for (auto u : reverse[v])
      if (!reach_good[u]) {
        reach_good[u] = 1;
        stack.push_back(u);
      }
  }
  std::vector<bool> out(n);
  for (State q = 0; q < n; ++q) out[q] = reach_good[3 * q + 2] != 0;
  return out;
}

}  // namespace detail

namespace {

struct VecHash {
  std::size_t operator()(const std::vector<State>& v) const noexcept {
    std::size_t h = v.size();
    for (State s : v) h ^= s + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    return h;
  }
};

// Subset construction for the automaton with track `j` erased: the digit on
// that track is guessed nondeterministically.
Dfa erase_track(const Dfa& a, std::size_t j, const std::function<bool(const std::vector<State>&)>& accept,
                std::uint64_t state_cap) {
  std::vector<std::string> tracks = a.tracks();
  tracks.erase(tracks.begin() + static_cast<std::ptrdiff_t>(j));
  Dfa out(a.base(), tracks, 0);
  const unsigned b = a.base();

  // lift[r * b + d]: letter of `a` for remaining-track letter r and digit d on track j.
  Letter weight_j = 1;
  for (std::size_t i = 0; i < j; ++i) weight_j *= b;
  std::vector<Letter> lift(out.alphabet_size() * b);
  {
    std::vector<std::size_t> into_a;  // remaining track i -> position in a
    for (std::size_t i = 0; i < a.arity(); ++i)
      if (i != j) into_a.push_back(i);
    for (Letter r = 0; r < out.alphabet_size(); ++r) {
      Letter base_letter = 0;
      Letter rest = r;
      for (std::size_t i = 0; i < into_a.size(); ++i) {
        Letter w = 1;
        for (std::size_t p = 0; p < into_a[i]; ++p) w *= b;
        base_letter += (rest % b) * w;
        rest /= b;
      }
      for (unsigned d = 0; d < b; ++d) lift[r * b + d] = base_letter + d * weight_j;
    }
  }

  std::unordered_map<std::vector<State>, State, VecHash> ids;
  std::vector<std::vector<State>> subsets;
  auto intern = [&](std::vector<State>&& set) {
    auto it = ids.find(set);
    if (it != ids.end()) return it->second;
    detail::check_cap(subsets.size() + 1, state_cap, "subset construction");
    State s = out.add_state();
    out.set_accepting(s, accept(set));
    ids.emplace(set, s);
    subsets.push_back(std::move(set));
    return s;
  };
  out.set_initial(intern({a.initial()}));

  std::vector<std::uint32_t> stamp(a.state_count(), 0);
  std::uint32_t epoch = 0;
  std::vector<State> succ;
  for (std::size_t i = 0; i < subsets.size(); ++i) {
    for (Letter r = 0; r < out.alphabet_size(); ++r) {
      ++epoch;
      succ.clear();
      for (State s : subsets[i])
        for (unsigned d = 0; d < b; ++d) {
          State t = a.next(s, lift[r * b + d]);
          if (stamp[t] != epoch) {
            stamp[t] = epoch;
            succ.push_back(t);
          }
        }
      std::sort(succ.begin(), succ.end());
      State target = intern(std::vector<State>(succ));
      out.set_next(static_cast<State>(i), r, target);
    }
  }
  return out;
}

std::size_t require_track(const Dfa& a, const std::string& track) {
  int j = a.track_index(track);
  if (j < 0) throw std::invalid_argument("unknown track '" + track + "'");
  return static_cast<std::size_t>(j);
}

}  // namespace

Dfa project(const Dfa& a, const std::string& track, std::uint64_t state_cap) {
  std::size_t j = require_track(a, track);
  auto d = erase_track(
      a, j,
      [&](const std::vector<State>& set) {
        return std::any_of(set.begin(), set.end(), [&](State s) { return a.accepting(s); });
      },
      state_cap);
  // A witness may be longer than the remaining tracks' encoding.
  return saturate_padding(d);
}

Dfa exists_inf(const Dfa& a, const std::string& track, std::uint64_t state_cap) {
  std::size_t j = require_track(a, track);
  Letter weight_j = 1;
  for (std::size_t i = 0; i < j; ++i) weight_j *= a.base();
  std::vector<detail::CountedLetter> letters;
  for (unsigned d = 0; d < a.base(); ++d) letters.push_back({d * weight_j, d != 0});
  auto infinite = detail::infinitely_many_from(a, letters);
  auto d = erase_track(
      a, j,
      [&](const std::vector<State>& set) {
        return std::any_of(set.begin(), set.end(), [&](State s) { return infinite[s]; });
      },
      state_cap);
  return saturate_padding(d);
}

}  // namespace buchi::automata
