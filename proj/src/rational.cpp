#include "hfplumb/rational.hpp"

#include "hfplumb/errors.hpp"

#include <cctype>

namespace hfplumb {

std::string to_string(const Rational& r) {
  return r.str();
}

Rational parse_rational(std::string_view text) {
  size_t b = 0, e = text.size();
  while (b < e && std::isspace(static_cast<unsigned char>(text[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(text[e - 1]))) --e;
  std::string s(text.substr(b, e - b));
  if (s.empty()) throw InputError("empty rational");
  auto parse_int = [](const std::string& t) -> BigInt {
    if (t.empty()) throw InputError("empty integer in rational");
    size_t i = (t[0] == '+' || t[0] == '-') ? 1 : 0;
    if (i == t.size()) throw InputError("bad integer '" + t + "'");
    for (; i < t.size(); ++i)
      if (!std::isdigit(static_cast<unsigned char>(t[i])))
        throw InputError("bad integer '" + t + "'");
    return BigInt(t);
  };
  auto slash = s.find('/');
  if (slash == std::string::npos) return Rational(parse_int(s));
  BigInt num = parse_int(s.substr(0, slash));
  BigInt den = parse_int(s.substr(slash + 1));
  if (den == 0) throw InputError("zero denominator in '" + s + "'");
  return Rational(num, den);
}

bool is_integer(const Rational& r) {
  return denominator(r) == 1;
}

bool even_difference(const Rational& r, const Rational& s) {
  Rational d = r - s;
  return denominator(d) == 1 && numerator(d) % 2 == 0;
}

long long to_long(const BigInt& v) {
  return v.convert_to<long long>();
}

}  // namespace hfplumb
