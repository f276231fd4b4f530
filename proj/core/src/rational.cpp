#include "lbiso/rational.hpp"

#include <cctype>
#include <cstdio>
#include <ostream>

namespace lbiso {

Rational::Rational(long n, long d) {
  if (d == 0) throw Error("Rational: zero denominator");
  v_ = mpq_class(n, d);
  v_.canonicalize();
}

Rational::Rational(const mpq_class& q) : v_(q) {
  if (v_.get_den() == 0) throw Error("Rational: zero denominator");
  v_.canonicalize();
}

Rational::Rational(const mpz_class& n, const mpz_class& d) {
  if (d == 0) throw Error("Rational: zero denominator");
  v_ = mpq_class(n) / mpq_class(d);
}

Rational Rational::parse(std::string_view text) {
  // Accepted grammar: [-+]?digits ( "/" [-+]?digits )?, no whitespace.
  auto bad = [&] { return Error("Rational: cannot parse '" + std::string(text) + "'"); };
  if (text.empty()) throw bad();
  std::size_t slash = text.find('/');
  auto check_int = [&](std::string_view part) {
    if (part.empty()) throw bad();
    std::size_t i = (part[0] == '-' || part[0] == '+') ? 1 : 0;
    if (i == part.size()) throw bad();
    for (; i < part.size(); ++i)
      if (!std::isdigit(static_cast<unsigned char>(part[i]))) throw bad();
  };
  if (slash == std::string_view::npos) {
    check_int(text);
    return Rational(mpq_class(std::string(text)));
  }
  std::string_view num = text.substr(0, slash);
  std::string_view den = text.substr(slash + 1);
  check_int(num);
  check_int(den);
  mpz_class n{std::string(num)};
  mpz_class d{std::string(den)};
  return Rational(n, d);
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw Error("Rational: division by zero");
  v_ /= o.v_;
  return *this;
}

Rational Rational::operator-() const {
  Rational r;
  r.v_ = -v_;
  return r;
}

Rational Rational::inverse() const {
  if (is_zero()) throw Error("Rational: inverse of zero");
  Rational r;
  r.v_ = 1 / v_;
  return r;
}

Rational Rational::pow(int e) const {
  if (e == 0) return Rational(1);
  if (e < 0) return inverse().pow(-e);
  Rational base = *this, acc(1);
  int n = e;
  while (n > 0) {
    if (n & 1) acc *= base;
    base *= base;
    n >>= 1;
  }
  return acc;
}

std::string Rational::to_string() const {
  return v_.get_str();
}

std::string Rational::to_decimal() const {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", to_double());
  return buf;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) {
  return os << r.to_string();
}

}  // namespace lbiso
