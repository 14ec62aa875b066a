#pragma once

// Deterministic automata over tuples of base-n digits, read least
// significant digit first. Every Dfa is kept padding-closed: a word is
// accepted iff the same word followed by the all-zero symbol is accepted,
// so acceptance of a tuple does not depend on how far it is zero-padded.

#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "buchi/natural.hpp"

namespace buchi::automata {

using State = std::uint32_t;
using Letter = std::uint32_t;

/// One synchronous symbol: a digit per track.
using Symbol = std::vector<unsigned>;
using Word = std::vector<Symbol>;
using Tuple = std::vector<Natural>;

/// Association of free variables to track indices.
using TrackMap = std::map<std::string, std::size_t>;

constexpr std::uint64_t kDefaultStateCap = 2'000'000;

/// Letters are numbered so that the digit of track i has weight base^i.
/// The all-zero symbol is letter 0.
class Dfa {
public:
  Dfa() = default;
  /// `states` states, all transitions to state 0, nothing accepting.
  Dfa(unsigned base, std::vector<std::string> tracks, std::size_t states);

  unsigned base() const { return base_; }
  const std::vector<std::string>& tracks() const { return tracks_; }
  std::size_t arity() const { return tracks_.size(); }
  std::size_t state_count() const { return accepting_.size(); }
  std::size_t alphabet_size() const { return alphabet_; }
  TrackMap track_map() const;
  /// Index of `track`, or -1.
  int track_index(const std::string& track) const;

  State initial() const { return initial_; }
  void set_initial(State s) { initial_ = s; }
  bool accepting(State s) const { return accepting_[s] != 0; }
  void set_accepting(State s, bool on) { accepting_[s] = on ? 1 : 0; }
  State next(State s, Letter l) const { return delta_[std::size_t(s) * alphabet_ + l]; }
  void set_next(State s, Letter l, State t) { delta_[std::size_t(s) * alphabet_ + l] = t; }
  /// Appends a fresh state (all transitions to itself, rejecting) and returns it.
  State add_state();

  Letter letter(std::span<const unsigned> digits) const;
  Symbol symbol(Letter l) const;

  bool accepts_word(const Word& w) const;
  bool accepts(std::span<const Natural> values) const;

  bool operator==(const Dfa&) const = default;

private:
  unsigned base_ = 2;
  std::vector<std::string> tracks_;
  std::size_t alphabet_ = 1;
  State initial_ = 0;
  std::vector<std::uint8_t> accepting_;
  std::vector<State> delta_;
};

/// LSD-first canonical encoding: no trailing all-zero symbol, and the
/// all-zero tuple is the empty word.
Word encode(std::span<const Natural> values, unsigned base);
/// Decodes a word of `arity`-wide symbols; trailing padding is ignored.
/// Throws std::invalid_argument on digits >= base or ragged symbols.
Tuple decode(const Word& word, unsigned base, std::size_t arity);

/// Automaton accepting every tuple over `tracks`.
Dfa universal(unsigned base, std::vector<std::string> tracks);
/// Automaton accepting nothing over `tracks`.
Dfa empty_language(unsigned base, std::vector<std::string> tracks);

/// Union of the two track lists: first-use order of `a`, then new names of `b`.
std::vector<std::string> unify_tracks(const std::vector<std::string>& a, const std::vector<std::string>& b);

/// Reinterprets `a` over `tracks`, a superset of a.tracks() in any order;
/// added tracks are ignored (cylindrification).
Dfa align_tracks(const Dfa& a, const std::vector<std::string>& tracks);

/// Renames track i to names[i]. Repeated names identify the tracks, so the
/// result only accepts tuples where those tracks carry the same value.
Dfa rename_tracks(const Dfa& a, const std::vector<std::string>& names);

enum class BoolOp { And, Or, Implies, Iff, Xor };

/// Product construction over the unified tracks. Throws std::invalid_argument
/// on base mismatch and CapacityExceeded past `state_cap` states.
Dfa boolean_combine(const Dfa& a, const Dfa& b, BoolOp op, std::uint64_t state_cap = kDefaultStateCap);

/// Re-marks a state accepting iff an accepting state is reachable from it
/// by all-zero symbols. The identity on padding-closed automata.
Dfa saturate_padding(const Dfa& a);

/// Accepts exactly the tuples `a` rejects.
Dfa complement(const Dfa& a);

/// Existential projection of `track`: accepts v iff (v, w) is accepted for
/// some natural w. Throws std::invalid_argument on an unknown track.
Dfa project(const Dfa& a, const std::string& track, std::uint64_t state_cap = kDefaultStateCap);

/// Accepts v iff (v, w) is accepted for infinitely many naturals w.
Dfa exists_inf(const Dfa& a, const std::string& track, std::uint64_t state_cap = kDefaultStateCap);

/// Minimal complete automaton for the same language, with states numbered
/// breadth-first from the initial state (letters in increasing order), so
/// equal languages over equal tracks give identical automata.
Dfa minimize(const Dfa& a);

/// Drops states unreachable from the initial state.
Dfa trim(const Dfa& a);

bool is_empty(const Dfa& a);
/// True iff finitely many tuples are accepted.
bool is_finite(const Dfa& a);
/// Language equality after track unification.
bool equivalent(const Dfa& a, const Dfa& b, std::uint64_t state_cap = kDefaultStateCap);
/// Checks the padding-closure representation invariant on reachable states.
bool is_padding_closed(const Dfa& a);

/// First `limit` accepted tuples ordered by canonical word length, ties
/// broken lexicographically on the word (symbols compared as digit tuples
/// in track order, earliest position first).
std::vector<Tuple> enumerate(const Dfa& a, std::size_t limit);

/// Number of accepted tuples. Throws std::domain_error when infinite.
Natural count(const Dfa& a);

/// JSON export: {base, tracks, stateCount, initial, accepting,
/// transitions: [[from, [d1..dm], to], ...]} ordered by source state, then
/// digit tuple.
std::string to_json(const Dfa& a);
/// Inverse of to_json; validates totality, ranges, and padding closure.
Dfa from_json(const std::string& text);
std::string to_dot(const Dfa& a);

}  // namespace buchi::automata
