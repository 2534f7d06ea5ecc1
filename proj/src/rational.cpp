#include "hjrelax/rational.hpp"

#include <cctype>
#include <cmath>
#include <ostream>

namespace hjrelax {

namespace {

bool all_digits(const std::string& s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

}  // namespace

Rational Rational::parse(const std::string& text) {
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
  if (s.empty()) throw ParseError("empty rational literal");

  auto slash = s.find('/');
  if (slash != std::string::npos) {
    std::string num = s.substr(0, slash), den = s.substr(slash + 1);
    if (num.empty() || den.empty()) throw ParseError("malformed rational '" + text + "'");
    try {
      mpq_class q(mpz_class(num), mpz_class(den));
      if (q.get_den() == 0) throw ParseError("zero denominator in '" + text + "'");
      q.canonicalize();
      return Rational(q);
    } catch (const std::invalid_argument&) {
      throw ParseError("malformed rational '" + text + "'");
    }
  }

  // Sign, integer part, optional fraction, optional exponent.
  bool neg = false;
  std::size_t i = 0;
  if (i < s.size() && (s[i] == '+' || s[i] == '-')) neg = (s[i++] == '-');
  std::string int_part, frac_part, exp_part;
  while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) int_part.push_back(s[i++]);
  if (i < s.size() && s[i] == '.') {
    ++i;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) frac_part.push_back(s[i++]);
  }
  long exp10 = 0;
  if (i < s.size() && (s[i] == 'e' || s[i] == 'E')) {
    ++i;
    bool eneg = false;
    if (i < s.size() && (s[i] == '+' || s[i] == '-')) eneg = (s[i++] == '-');
    std::string digits;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) digits.push_back(s[i++]);
    if (!all_digits(digits)) throw ParseError("malformed exponent in '" + text + "'");
    exp10 = std::stol(digits);
    if (eneg) exp10 = -exp10;
  }
  if (i != s.size() || (int_part.empty() && frac_part.empty()))
    throw ParseError("malformed rational '" + text + "'");

  mpz_class mantissa(int_part.empty() ? std::string("0") : int_part);
  for (char c : frac_part) {
    mantissa *= 10;
    mantissa += (c - '0');
  }
  long shift = exp10 - static_cast<long>(frac_part.size());
  mpz_class num = mantissa, den = 1;
  if (shift > 0) {
    mpz_class p;
    mpz_ui_pow_ui(p.get_mpz_t(), 10, static_cast<unsigned long>(shift));
    num *= p;
  } else if (shift < 0) {
    mpz_ui_pow_ui(den.get_mpz_t(), 10, static_cast<unsigned long>(-shift));
  }
  if (neg) num = -num;
  mpq_class q(num, den);
  q.canonicalize();
  return Rational(q);
}

Rational Rational::from_double(double x) {
  if (!std::isfinite(x)) throw InvalidInputs("cannot convert non-finite double to rational");
  mpq_class q(x);
  q.canonicalize();
  return Rational(q);
}

std::string Rational::str() const {
  return v_.get_str();
}

std::ostream& operator<<(std::ostream& os, const Rational& r) {
  return os << r.v_.get_str();
}

std::string ExtendedRational::str() const {
  if (is_neg_inf()) return "-inf";
  if (is_pos_inf()) return "+inf";
  return v_.str();
}

std::ostream& operator<<(std::ostream& os, const ExtendedRational& r) {
  return os << r.str();
}

}  // namespace hjrelax
