#include "problogic/rational.hpp"

#include <cctype>
#include <sstream>
#include <stdexcept>

namespace problogic {

namespace {

bool all_digits(const std::string& s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

[[noreturn]] void bad(const std::string& text) {
  throw std::invalid_argument("malformed rational literal '" + text + "'");
}

}  // namespace

Rational parse_rational(const std::string& text) {
  std::string s = text;
  // trim surrounding whitespace
  const auto first = s.find_first_not_of(" \t");
  const auto last = s.find_last_not_of(" \t");
  if (first == std::string::npos) bad(text);
  s = s.substr(first, last - first + 1);

  bool negative = false;
  if (s[0] == '+' || s[0] == '-') {
    negative = s[0] == '-';
    s = s.substr(1);
  }
  if (s.empty()) bad(text);

  Rational value;
  if (auto slash = s.find('/'); slash != std::string::npos) {
    const std::string num = s.substr(0, slash);
    const std::string den = s.substr(slash + 1);
    if (!all_digits(num) || !all_digits(den)) bad(text);
    BigInt d(den);
    if (d == 0) throw std::invalid_argument("zero denominator in '" + text + "'");
    value = Rational(BigInt(num), d);
  } else if (auto dot = s.find('.'); dot != std::string::npos) {
    const std::string whole = s.substr(0, dot);
    const std::string frac = s.substr(dot + 1);
    if (!all_digits(frac) || (!whole.empty() && !all_digits(whole))) bad(text);
    if (whole.empty() && frac.empty()) bad(text);
    BigInt scale = 1;
    for (std::size_t i = 0; i < frac.size(); ++i) scale *= 10;
    BigInt numer = whole.empty() ? BigInt(0) : BigInt(whole);
    numer *= scale;
    if (!frac.empty()) numer += BigInt(frac);
    value = Rational(numer, scale);
  } else {
    if (!all_digits(s)) bad(text);
    value = Rational(BigInt(s));
  }
  return negative ? Rational(-value) : value;
}

std::string rational_to_string(const Rational& r) {
  std::ostringstream out;
  out << r;
  return out.str();
}

std::string rational_to_decimal(const Rational& r, int digits) {
  // Fixed-point rendering of the truncated expansion.
  const bool neg = r < 0;
  Rational a = neg ? Rational(-r) : r;
  BigInt whole = numerator(a) / denominator(a);
  Rational rem = a - Rational(whole);
  std::ostringstream out;
  if (neg) out << '-';
  out << whole;
  if (digits > 0 && rem != 0) {
    out << '.';
    for (int i = 0; i < digits && rem != 0; ++i) {
      rem *= 10;
      BigInt d = numerator(rem) / denominator(rem);
      out << d;
      rem -= Rational(d);
    }
  }
  return out.str();
}

}  // namespace problogic
