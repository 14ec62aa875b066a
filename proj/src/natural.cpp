#include "buchi/natural.hpp"

#include <cctype>

namespace buchi {

std::vector<unsigned> digits_lsd(const Natural& value, unsigned base) {
  if (base < 2) throw std::invalid_argument("base must be at least 2");
  if (value < 0) throw std::invalid_argument("negative value has no digit expansion");
  std::vector<unsigned> out;
  Natural rest = value;
  while (rest != 0) {
    out.push_back(static_cast<unsigned>(rest % base));
    rest /= base;
  }
  return out;
}

Natural from_digits_lsd(const std::vector<unsigned>& digits, unsigned base) {
  Natural value = 0;
  for (auto it = digits.rbegin(); it != digits.rend(); ++it) {
    if (*it >= base) throw std::invalid_argument("digit out of range for base");
    value = value * base + *it;
  }
  return value;
}

std::uint64_t valuation(const Natural& value, unsigned base) {
  if (value == 0) return 0;
  std::uint64_t k = 0;
  Natural rest = value;
  while (rest % base == 0) {
    rest /= base;
    ++k;
  }
  return k;
}

Natural largest_power_dividing(const Natural& value, unsigned base) {
  if (value == 0) return 0;
  Natural power = 1;
  Natural rest = value;
  while (rest % base == 0) {
    rest /= base;
    power *= base;
  }
  return power;
}

Natural parse_natural(std::string_view text) {
  if (text.empty()) throw std::invalid_argument("empty number");
  Natural value = 0;
  for (char ch : text) {
    if (!std::isdigit(static_cast<unsigned char>(ch)))
      throw std::invalid_argument("malformed natural number '" + std::string(text) + "'");
    value = value * 10 + (ch - '0');
  }
  return value;
}

std::string to_string(const Natural& value) { return value.str(); }

}  // namespace buchi
