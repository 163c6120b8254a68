#include "hlindex/rational.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

namespace hl {
namespace {

bool is_integer_text(std::string_view s) {
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
  return !s.empty() && std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isdigit(c); });
}

Integer integer_of(std::string_view s) {
  if (!s.empty() && s.front() == '+') s.remove_prefix(1);
  return Integer(std::string(s), 10);
}

}  // namespace

Rational parse_rational(std::string_view text) {
  const std::string error = "malformed rational \"" + std::string(text) + "\"";
  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    auto num = text.substr(0, slash);
    auto den = text.substr(slash + 1);
    if (!is_integer_text(num) || !is_integer_text(den)) throw std::invalid_argument(error);
    Integer d = integer_of(den);
    if (d == 0) throw std::invalid_argument("zero denominator in \"" + std::string(text) + "\"");
    Rational r(integer_of(num), d);
    r.canonicalize();
    return r;
  }
  if (auto dot = text.find('.'); dot != std::string_view::npos) {
    auto whole = text.substr(0, dot);
    auto frac = text.substr(dot + 1);
    bool negative = !whole.empty() && whole.front() == '-';
    std::string digits(whole);
    if (digits.empty() || digits == "-" || digits == "+") digits += "0";
    if (!is_integer_text(digits) || (!frac.empty() && !is_integer_text(frac)) ||
        (!frac.empty() && (frac.front() == '-' || frac.front() == '+'))) {
      throw std::invalid_argument(error);
    }
    Integer scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, frac.size());
    Integer magnitude = abs(integer_of(digits)) * scale + (frac.empty() ? Integer(0) : integer_of(frac));
    Rational r(negative ? Integer(-magnitude) : magnitude, scale);
    r.canonicalize();
    return r;
  }
  if (!is_integer_text(text)) throw std::invalid_argument(error);
  return Rational(integer_of(text));
}

std::string to_string(const Rational& r) { return r.get_str(); }

}  // namespace hl
