#pragma once

#include <string>
#include <vector>

#include "buchi/automata.hpp"

namespace buchi::automata::detail {

/// For each letter over `new_arity` tracks, the letter over the tracks listed
/// in `positions` (old track i reads new track positions[i]).
std::vector<Letter> letter_projection(unsigned base, std::size_t new_arity, const std::vector<std::size_t>& positions);

Dfa remap(const Dfa& a, std::vector<std::string> tracks, const std::vector<std::size_t>& positions);

inline void check_cap(std::size_t states, std::uint64_t cap, const char* where) {
  if (states > cap)
    throw CapacityExceeded(cap, std::string(where) + ": state cap of " + std::to_string(cap) + " exceeded");
}

}  // namespace buchi::automata::detail
