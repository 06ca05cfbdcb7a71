#include "listcrit/rational.hpp"

#include <cctype>
#include <sstream>

namespace listcrit {

std::string to_fraction_string(const Rational& x) {
  BigInt num = numerator(x);
  BigInt den = denominator(x);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

std::optional<Rational> parse_rational(const std::string& text) {
  auto is_int = [](const std::string& s) {
    if (s.empty()) return false;
    size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i)
      if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    return true;
  };
  auto slash = text.find('/');
  try {
    if (slash == std::string::npos) {
      if (!is_int(text)) return std::nullopt;
      return Rational(BigInt(text));
    }
    std::string a = text.substr(0, slash), b = text.substr(slash + 1);
    if (!is_int(a) || !is_int(b)) return std::nullopt;
    BigInt den(b);
    if (den == 0) return std::nullopt;
    return Rational(BigInt(a)) / Rational(den);
  } catch (...) {
    return std::nullopt;
  }
}

BigInt truncated_scaled(const Rational& x, int digits) {
  BigInt scale = 1;
  for (int i = 0; i < digits; ++i) scale *= 10;
  BigInt num = numerator(x) * scale;
  BigInt den = denominator(x);
  return num / den;  // cpp_int division truncates toward zero
}

std::string to_decimal_truncated(const Rational& x, int digits) {
  bool neg = x < 0;
  BigInt scaled = truncated_scaled(neg ? Rational(-x) : x, digits);
  BigInt scale = 1;
  for (int i = 0; i < digits; ++i) scale *= 10;
  BigInt whole = scaled / scale;
  BigInt frac = scaled % scale;
  std::string fs = frac.str();
  while (static_cast<int>(fs.size()) < digits) fs.insert(fs.begin(), '0');
  std::ostringstream os;
  if (neg && (whole != 0 || frac != 0)) os << '-';
  os << whole.str();
  if (digits > 0) os << '.' << fs;
  return os.str();
}

double to_double(const Rational& x) { return x.convert_to<double>(); }

}  // namespace listcrit
