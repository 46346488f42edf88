#include "contractlab/rational.hpp"

#include <cstdio>

namespace contractlab {

Rational make_rational(const BigInt& p, const BigInt& q) {
  if (q == 0) throw ParameterError("rational with zero denominator");
  if (q < 0) return Rational(-p, -q);
  return Rational(p, q);
}

Rational make_rational(long long p, long long q) {
  return make_rational(BigInt(p), BigInt(q));
}

Rational parse_rational(std::string_view text) {
  if (text.empty()) throw ParseError("empty rational literal");
  const auto slash = text.find('/');
  const auto parse_int = [](std::string_view s) -> BigInt {
    if (s.empty()) throw ParseError("empty integer in rational literal");
    std::size_t i = 0;
    if (s[0] == '-' || s[0] == '+') i = 1;
    if (i == s.size()) throw ParseError("sign without digits in rational literal");
    for (std::size_t j = i; j < s.size(); ++j) {
      if (s[j] < '0' || s[j] > '9')
        throw ParseError("invalid character in rational literal: '" + std::string(s) + "'");
    }
    return BigInt(std::string(s));
  };
  if (slash == std::string_view::npos) {
    return Rational(parse_int(text));
  }
  const BigInt p = parse_int(text.substr(0, slash));
  const BigInt q = parse_int(text.substr(slash + 1));
  if (q == 0) throw ParseError("rational literal with zero denominator: '" + std::string(text) + "'");
  return make_rational(p, q);
}

std::string rational_to_string(const Rational& r) {
  if (den(r) == 1) return num(r).str();
  return num(r).str() + "/" + den(r).str();
}

double to_double(const Rational& r) { return r.convert_to<double>(); }

BigInt lcm(const BigInt& a, const BigInt& b) {
  return a / boost::multiprecision::gcd(a, b) * b;
}

}  // namespace contractlab
