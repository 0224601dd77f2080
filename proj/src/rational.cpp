#include "gfp/rational.hpp"

#include <cctype>
#include <cmath>
#include <cstdint>

namespace gfp {

namespace {

using Int = boost::multiprecision::cpp_int;

bool parse_integer(const std::string& s, Int& out) {
  if (s.empty()) return false;
  std::size_t i = 0;
  bool neg = false;
  if (s[i] == '+' || s[i] == '-') {
    neg = (s[i] == '-');
    ++i;
  }
  if (i == s.size()) return false;
  Int v = 0;
  for (; i < s.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    v = v * 10 + (s[i] - '0');
  }
  out = neg ? -v : v;
  return true;
}

// Decimal literal with optional exponent: sign? digits ('.' digits?)? (e sign? digits)?
bool parse_decimal(const std::string& s, Rational& out) {
  std::size_t i = 0;
  bool neg = false;
  if (i < s.size() && (s[i] == '+' || s[i] == '-')) {
    neg = (s[i] == '-');
    ++i;
  }
  Int mant = 0;
  long frac_digits = 0;
  bool any = false;
  for (; i < s.size() && std::isdigit(static_cast<unsigned char>(s[i])); ++i) {
    mant = mant * 10 + (s[i] - '0');
    any = true;
  }
  if (i < s.size() && s[i] == '.') {
    ++i;
    for (; i < s.size() && std::isdigit(static_cast<unsigned char>(s[i])); ++i) {
      mant = mant * 10 + (s[i] - '0');
      ++frac_digits;
      any = true;
    }
  }
  if (!any) return false;
  long exp10 = 0;
  if (i < s.size() && (s[i] == 'e' || s[i] == 'E')) {
    ++i;
    bool eneg = false;
    if (i < s.size() && (s[i] == '+' || s[i] == '-')) {
      eneg = (s[i] == '-');
      ++i;
    }
    if (i == s.size()) return false;
    long e = 0;
    for (; i < s.size(); ++i) {
      if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
      e = e * 10 + (s[i] - '0');
      if (e > 100000) return false;
    }
    exp10 = eneg ? -e : e;
  }
  if (i != s.size()) return false;
  long net = exp10 - frac_digits;
  Rational q(mant, 1);
  Int pow10 = 1;
  for (long j = 0; j < std::labs(net); ++j) pow10 *= 10;
  if (net >= 0)
    q *= Rational(pow10, 1);
  else
    q /= Rational(pow10, 1);
  if (neg) q = -q;
  out = q;
  return true;
}

std::string strip(const std::string& s) {
  std::size_t a = 0, b = s.size();
  while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
  while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
  std::string r = s.substr(a, b - a);
  // Normalise the unicode minus sign occasionally found in parameter tables.
  const std::string uminus = "\xE2\x88\x92";
  if (r.rfind(uminus, 0) == 0) r = "-" + r.substr(uminus.size());
  return r;
}

}  // namespace

std::optional<Rational> parse_rational(const std::string& text) {
  std::string s = strip(text);
  if (s.empty()) return std::nullopt;
  auto slash = s.find('/');
  if (slash != std::string::npos) {
    Int num, den;
    if (!parse_integer(strip(s.substr(0, slash)), num)) return std::nullopt;
    if (!parse_integer(strip(s.substr(slash + 1)), den)) return std::nullopt;
    if (den == 0) return std::nullopt;
    return Rational(num, den);
  }
  Int whole;
  if (parse_integer(s, whole)) return Rational(whole, 1);
  Rational q;
  if (parse_decimal(s, q)) return q;
  return std::nullopt;
}

std::string rational_to_string(const Rational& q) {
  const Int num = boost::multiprecision::numerator(q);
  const Int den = boost::multiprecision::denominator(q);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

Rational rational_from_double(double x) {
  if (!std::isfinite(x)) return Rational(0);
  if (x == 0.0) return Rational(0);
  int exp = 0;
  double m = std::frexp(x, &exp);  // x = m * 2^exp, |m| in [0.5, 1)
  // 53 doublings make the mantissa integral.
  Int mant = static_cast<std::int64_t>(std::ldexp(m, 53));
  exp -= 53;
  Rational q(mant, 1);
  Int pow2 = Int(1) << std::abs(exp);
  if (exp >= 0)
    q *= Rational(pow2, 1);
  else
    q /= Rational(pow2, 1);
  return q;
}

}  // namespace gfp
