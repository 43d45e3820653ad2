#include <mink/rational.hpp>

#include <sstream>
#include <stdexcept>

namespace mink {

BigRational rational_from_string(const std::string& s) {
  if (s.empty()) throw std::invalid_argument("rational_from_string: empty string");
  auto parse_int = [](const std::string& t) -> BigInt {
    if (t.empty()) throw std::invalid_argument("rational_from_string: empty integer part");
    size_t i = (t[0] == '-' || t[0] == '+') ? 1 : 0;
    if (i == t.size()) throw std::invalid_argument("rational_from_string: bare sign");
    for (; i < t.size(); ++i)
      if (t[i] < '0' || t[i] > '9')
        throw std::invalid_argument("rational_from_string: bad character in '" + t + "'");
    return BigInt(t);
  };
  auto slash = s.find('/');
  if (slash == std::string::npos) return BigRational(parse_int(s));
  BigInt num = parse_int(s.substr(0, slash));
  BigInt den = parse_int(s.substr(slash + 1));
  if (den == 0) throw std::invalid_argument("rational_from_string: zero denominator");
  return BigRational(num, den);  // cpp_rational canonicalizes (sign + lowest terms)
}

std::string rational_to_string(const BigRational& r) {
  std::ostringstream out;
  out << numerator(r);
  if (denominator(r) != 1) out << '/' << denominator(r);
  return out.str();
}

BigInt rational_floor(const BigRational& r) {
  BigInt q = numerator(r) / denominator(r);  // truncates toward zero
  if (numerator(r) < 0 && q * denominator(r) != numerator(r)) --q;
  return q;
}

LatticePoint add(const LatticePoint& a, const LatticePoint& b) {
  LatticePoint out(a.size());
  for (size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
  return out;
}

LatticePoint sub(const LatticePoint& a, const LatticePoint& b) {
  LatticePoint out(a.size());
  for (size_t i = 0; i < a.size(); ++i) out[i] = a[i] - b[i];
  return out;
}

LatticePoint scale(const LatticePoint& a, const BigInt& n) {
  LatticePoint out(a.size());
  for (size_t i = 0; i < a.size(); ++i) out[i] = a[i] * n;
  return out;
}

bool is_zero(const LatticePoint& a) {
  for (const auto& x : a)
    if (x != 0) return false;
  return true;
}

bool lex_less(const LatticePoint& a, const LatticePoint& b) {
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i] < b[i]) return true;
    if (a[i] > b[i]) return false;
  }
  return false;
}

std::string point_to_string(const LatticePoint& a) {
  std::ostringstream out;
  out << '(';
  for (size_t i = 0; i < a.size(); ++i) {
    if (i) out << ", ";
    out << a[i];
  }
  out << ')';
  return out.str();
}

}  // namespace mink
