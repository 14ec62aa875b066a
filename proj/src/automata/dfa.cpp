#include <algorithm>
#include <stdexcept>

#include "automata/internal.hpp"
#include "buchi/automata.hpp"

namespace buchi::automata {

namespace {

constexpr std::size_t kMaxAlphabet = std::size_t{1} << 22;

std::size_t alphabet_for(unsigned base, std::size_t arity) {
  if (base < 2) throw std::invalid_argument("base must be at least 2");
  std::size_t size = 1;
  for (std::size_t i = 0; i < arity; ++i) {
    size *= base;
    if (size > kMaxAlphabet)
      throw CapacityExceeded(kMaxAlphabet, "alphabet of " + std::to_string(arity) + " tracks is too large");
  }
  return size;
}

}  // namespace

Dfa::Dfa(unsigned base, std::vector<std::string> tracks, std::size_t states)
    : base_(base), tracks_(std::move(tracks)), alphabet_(alphabet_for(base, tracks_.size())) {
  for (std::size_t i = 0; i < tracks_.size(); ++i)
    for (std::size_t j = i + 1; j < tracks_.size(); ++j)
      if (tracks_[i] == tracks_[j]) throw std::invalid_argument("duplicate track name '" + tracks_[i] + "'");
  accepting_.assign(states, 0);
  delta_.assign(states * alphabet_, 0);
}

TrackMap Dfa::track_map() const {
  TrackMap m;
  for (std::size_t i = 0; i < tracks_.size(); ++i) m[tracks_[i]] = i;
  return m;
}

int Dfa::track_index(const std::string& track) const {
  for (std::size_t i = 0; i < tracks_.size(); ++i)
    if (tracks_[i] == track) return static_cast<int>(i);
  return -1;
}

State Dfa::add_state() {
  auto s = static_cast<State>(accepting_.size());
  accepting_.push_back(0);
  delta_.resize(delta_.size() + alphabet_, s);
  return s;
}

Letter Dfa::letter(std::span<const unsigned> digits) const {
  if (digits.size() != tracks_.size()) throw std::invalid_argument("symbol width does not match arity");
  Letter l = 0;
  Letter weight = 1;
  for (unsigned d : digits) {
    if (d >= base_) throw std::invalid_argument("digit out of range for base");
    l += d * weight;
    weight *= base_;
  }
  return l;
}

Symbol Dfa::symbol(Letter l) const {
  Symbol s(tracks_.size());
  for (auto& d : s) {
    d = l % base_;
    l /= base_;
  }
  return s;
}

bool Dfa::accepts_word(const Word& w) const {
  State s = initial_;
  for (const auto& sym : w) s = next(s, letter(sym));
  return accepting(s);
}

bool Dfa::accepts(std::span<const Natural> values) const {
  if (values.size() != tracks_.size()) throw std::invalid_argument("tuple width does not match arity");
  return accepts_word(encode(values, base_));
}

Word encode(std::span<const Natural> values, unsigned base) {
  std::vector<std::vector<unsigned>> per;
  std::size_t len = 0;
  for (const auto& v : values) {
    per.push_back(digits_lsd(v, base));
    len = std::max(len, per.back().size());
  }
  Word w(len, Symbol(values.size(), 0));
  for (std::size_t i = 0; i < per.size(); ++i)
    for (std::size_t k = 0; k < per[i].size(); ++k) w[k][i] = per[i][k];
  return w;
}

Tuple decode(const Word& word, unsigned base, std::size_t arity) {
  if (base < 2) throw std::invalid_argument("base must be at least 2");
  Tuple out(arity, 0);
  for (auto k = word.size(); k-- > 0;) {
    if (word[k].size() != arity) throw std::invalid_argument("symbol width does not match arity");
    for (std::size_t i = 0; i < arity; ++i) {
      if (word[k][i] >= base) throw std::invalid_argument("digit out of range for base");
      out[i] = out[i] * base + word[k][i];
    }
  }
  return out;
}

Dfa universal(unsigned base, std::vector<std::string> tracks) {
  Dfa d(base, std::move(tracks), 1);
  d.set_accepting(0, true);
  return d;
}

Dfa empty_language(unsigned base, std::vector<std::string> tracks) { return Dfa(base, std::move(tracks), 1); }

std::vector<std::string> unify_tracks(const std::vector<std::string>& a, const std::vector<std::string>& b) {
  std::vector<std::string> out = a;
  for (const auto& t : b)
    if (std::find(out.begin(), out.end(), t) == out.end()) out.push_back(t);
  return out;
}

namespace detail {

std::vector<Letter> letter_projection(unsigned base, std::size_t new_arity, const std::vector<std::size_t>& positions) {
  std::size_t size = 1;
  for (std::size_t i = 0; i < new_arity; ++i) size *= base;
  std::vector<Letter> pow(new_arity + 1, 1);
  for (std::size_t i = 1; i <= new_arity; ++i) pow[i] = pow[i - 1] * base;
  std::vector<Letter> out(size);
  for (Letter l = 0; l < size; ++l) {
    Letter old = 0;
    Letter weight = 1;
    for (std::size_t pos : positions) {
      old += ((l / pow[pos]) % base) * weight;
      weight *= base;
    }
    out[l] = old;
  }
  return out;
}

Dfa remap(const Dfa& a, std::vector<std::string> tracks, const std::vector<std::size_t>& positions) {
  Dfa out(a.base(), std::move(tracks), a.state_count());
  auto proj = letter_projection(a.base(), out.arity(), positions);
  for (State s = 0; s < a.state_count(); ++s) {
    out.set_accepting(s, a.accepting(s));
    for (Letter l = 0; l < out.alphabet_size(); ++l) out.set_next(s, l, a.next(s, proj[l]));
  }
  out.set_initial(a.initial());
  return out;
}

}  // namespace detail

Dfa align_tracks(const Dfa& a, const std::vector<std::string>& tracks) {
  std::vector<std::size_t> positions;
  for (const auto& t : a.tracks()) {
    auto it = std::find(tracks.begin(), tracks.end(), t);
    if (it == tracks.end()) throw std::invalid_argument("track '" + t + "' missing from target track list");
    positions.push_back(static_cast<std::size_t>(it - tracks.begin()));
  }
  if (tracks == a.tracks()) return a;
  return detail::remap(a, tracks, positions);
}

Dfa rename_tracks(const Dfa& a, const std::vector<std::string>& names) {
  if (names.size() != a.arity()) throw std::invalid_argument("rename needs one name per track");
  std::vector<std::string> tracks;
  std::vector<std::size_t> positions;
  for (const auto& n : names) {
    auto it = std::find(tracks.begin(), tracks.end(), n);
    if (it == tracks.end()) {
      positions.push_back(tracks.size());
      tracks.push_back(n);
    } else {
      positions.push_back(static_cast<std::size_t>(it - tracks.begin()));
    }
  }
  return detail::remap(a, std::move(tracks), positions);
}

}  // namespace buchi::automata
