#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace buchi {

/// Arbitrary-precision natural number. Negative values never appear in the
/// standard model; signed storage keeps subtraction in tests convenient.
using Natural = boost::multiprecision::cpp_int;

/// Thrown when an automaton construction would exceed the configured state cap.
class CapacityExceeded : public std::runtime_error {
public:
  CapacityExceeded(std::uint64_t cap, const std::string& what)
      : std::runtime_error(what), cap_(cap) {}
  std::uint64_t cap() const noexcept { return cap_; }

private:
  std::uint64_t cap_;
};

/// Base-`base` digits of `value`, least significant first. Zero has no digits.
std::vector<unsigned> digits_lsd(const Natural& value, unsigned base);

/// Inverse of digits_lsd; trailing zero digits are ignored.
Natural from_digits_lsd(const std::vector<unsigned>& digits, unsigned base);

/// Exponent of the largest power of `base` dividing `value` (0 for value 0).
std::uint64_t valuation(const Natural& value, unsigned base);

/// V_base(value): the largest power of `base` dividing `value`, with V(0) = 0.
Natural largest_power_dividing(const Natural& value, unsigned base);

/// Parses a decimal natural; throws std::invalid_argument on malformed input.
Natural parse_natural(std::string_view text);

std::string to_string(const Natural& value);

}  // namespace buchi
