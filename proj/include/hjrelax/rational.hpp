#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>

#include "hjrelax/errors.hpp"

namespace hjrelax {

/// Exact rational scalar. Thin wrapper over GMP's mpq_class that keeps the
/// value canonical (reduced, positive denominator) after every operation.
class Rational {
 public:
  Rational() : v_(0) {}
  Rational(long n) : v_(static_cast<long>(n)) {}  // NOLINT(google-explicit-constructor)
  Rational(long n, long d) : v_(n, d) {
    if (d == 0) throw InvalidInputs("rational with zero denominator");
    v_.canonicalize();
  }
  explicit Rational(const mpq_class& q) : v_(q) { v_.canonicalize(); }

  /// Accepts "n", "n/d", decimal literals ("-2.375") and scientific
  /// notation ("25e-3"); conversion is exact.
  static Rational parse(const std::string& text);

  /// Exact value of an IEEE double (every finite double is rational).
  static Rational from_double(double x);

  const mpq_class& raw() const { return v_; }
  mpz_class numerator() const { return v_.get_num(); }
  mpz_class denominator() const { return v_.get_den(); }

  double to_double() const { return v_.get_d(); }
  std::string str() const;

  int sign() const { return sgn(v_); }
  Rational abs() const { return Rational(::abs(v_)); }

  friend Rational operator+(const Rational& a, const Rational& b) { return Rational(mpq_class(a.v_ + b.v_)); }
  friend Rational operator-(const Rational& a, const Rational& b) { return Rational(mpq_class(a.v_ - b.v_)); }
  friend Rational operator*(const Rational& a, const Rational& b) { return Rational(mpq_class(a.v_ * b.v_)); }
  friend Rational operator/(const Rational& a, const Rational& b) {
    if (b.sign() == 0) throw InvalidInputs("rational division by zero");
    return Rational(mpq_class(a.v_ / b.v_));
  }
  Rational operator-() const { return Rational(mpq_class(-v_)); }

  Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
  Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
  Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }

  friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
  friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
  friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }
  friend bool operator<=(const Rational& a, const Rational& b) { return a.v_ <= b.v_; }
  friend bool operator>(const Rational& a, const Rational& b) { return a.v_ > b.v_; }
  friend bool operator>=(const Rational& a, const Rational& b) { return a.v_ >= b.v_; }

  friend std::ostream& operator<<(std::ostream& os, const Rational& r);

 private:
  mpq_class v_;
};

inline Rational min(const Rational& a, const Rational& b) { return a <= b ? a : b; }
inline Rational max(const Rational& a, const Rational& b) { return a >= b ? a : b; }

/// A rational extended with -inf / +inf. Total order; arithmetic is limited
/// to negation (everything else on infinities is ambiguous and not needed).
class ExtendedRational {
 public:
  enum class Kind { NegInf, Finite, PosInf };

  ExtendedRational() : kind_(Kind::Finite), v_() {}
  ExtendedRational(Rational v) : kind_(Kind::Finite), v_(std::move(v)) {}  // NOLINT
  ExtendedRational(long v) : kind_(Kind::Finite), v_(v) {}                 // NOLINT

  static ExtendedRational neg_inf() { return ExtendedRational(Kind::NegInf); }
  static ExtendedRational pos_inf() { return ExtendedRational(Kind::PosInf); }

  bool is_finite() const { return kind_ == Kind::Finite; }
  bool is_neg_inf() const { return kind_ == Kind::NegInf; }
  bool is_pos_inf() const { return kind_ == Kind::PosInf; }

  const Rational& finite() const {
    if (!is_finite()) throw InvalidInputs("expected a finite extended rational");
    return v_;
  }

  ExtendedRational operator-() const {
    if (is_neg_inf()) return pos_inf();
    if (is_pos_inf()) return neg_inf();
    return ExtendedRational(-v_);
  }

  friend bool operator==(const ExtendedRational& a, const ExtendedRational& b) {
    if (a.kind_ != b.kind_) return false;
    return a.kind_ != Kind::Finite || a.v_ == b.v_;
  }
  friend bool operator!=(const ExtendedRational& a, const ExtendedRational& b) { return !(a == b); }
  friend bool operator<(const ExtendedRational& a, const ExtendedRational& b) {
    if (a.kind_ != b.kind_) return static_cast<int>(a.kind_) < static_cast<int>(b.kind_);
    return a.kind_ == Kind::Finite && a.v_ < b.v_;
  }
  friend bool operator<=(const ExtendedRational& a, const ExtendedRational& b) { return a < b || a == b; }
  friend bool operator>(const ExtendedRational& a, const ExtendedRational& b) { return b < a; }
  friend bool operator>=(const ExtendedRational& a, const ExtendedRational& b) { return b <= a; }

  std::string str() const;
  friend std::ostream& operator<<(std::ostream& os, const ExtendedRational& r);

 private:
  explicit ExtendedRational(Kind k) : kind_(k), v_() {}

  Kind kind_;
  Rational v_;
};

}  // namespace hjrelax
