#pragma once

#include <mpfr.h>

#include <gmpxx.h>

#include <string>
#include <utility>

namespace zetaseq::hp {

using Bits = mpfr_prec_t;

/// MPFR value with its own precision. Binary operations round to nearest at
/// the larger of the two operand precisions.
class Real {
 public:
  explicit Real(Bits prec = 128);
  Real(long v, Bits prec);
  Real(int v, Bits prec) : Real(static_cast<long>(v), prec) {}
  Real(double v, Bits prec);
  Real(const mpq_class& q, Bits prec, mpfr_rnd_t rnd = MPFR_RNDN);
  Real(const mpz_class& z, Bits prec, mpfr_rnd_t rnd = MPFR_RNDN);
  static Real parse(const std::string& decimal, Bits prec);

  Real(const Real& o);
  Real(Real&& o) noexcept;
  Real& operator=(const Real& o);
  Real& operator=(Real&& o) noexcept;
  ~Real();

  Bits prec() const { return mpfr_get_prec(v_); }
  /// Same value rounded to another precision.
  Real with_prec(Bits prec) const;

  mpfr_ptr get() { return v_; }
  mpfr_srcptr get() const { return v_; }

  double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }
  /// Scientific notation with enough digits to round-trip the precision.
  std::string to_string() const;
  std::string to_string(int digits) const;

  bool is_zero() const { return mpfr_zero_p(v_) != 0; }
  bool is_finite() const { return mpfr_number_p(v_) != 0; }
  int sign() const { return mpfr_sgn(v_); }
  /// Base-2 exponent e with 0.5 <= |x|/2^e < 1; very negative for zero.
  long exponent() const;

  Real& operator+=(const Real& o);
  Real& operator-=(const Real& o);
  Real& operator*=(const Real& o);
  Real& operator/=(const Real& o);
  Real& operator*=(long k);
  Real& operator/=(long k);

  friend Real operator+(Real a, const Real& b) { return a += b; }
  friend Real operator-(Real a, const Real& b) { return a -= b; }
  friend Real operator*(Real a, const Real& b) { return a *= b; }
  friend Real operator/(Real a, const Real& b) { return a /= b; }
  friend Real operator*(Real a, long k) { return a *= k; }
  friend Real operator/(Real a, long k) { return a /= k; }
  friend Real operator-(Real a);

  friend bool operator<(const Real& a, const Real& b) { return mpfr_less_p(a.v_, b.v_) != 0; }
  friend bool operator>(const Real& a, const Real& b) { return mpfr_greater_p(a.v_, b.v_) != 0; }
  friend bool operator<=(const Real& a, const Real& b) { return mpfr_lessequal_p(a.v_, b.v_) != 0; }
  friend bool operator>=(const Real& a, const Real& b) { return mpfr_greaterequal_p(a.v_, b.v_) != 0; }
  friend bool operator==(const Real& a, const Real& b) { return mpfr_equal_p(a.v_, b.v_) != 0; }

 private:
  mpfr_t v_;
};

Real abs(const Real& x);
Real sqrt(const Real& x);
Real exp(const Real& x);
Real expm1(const Real& x);
Real log(const Real& x);
Real sin(const Real& x);
Real cos(const Real& x);
Real sinh(const Real& x);
Real cosh(const Real& x);
Real atan2(const Real& y, const Real& x);
Real pow(const Real& x, const Real& y);
Real hypot(const Real& x, const Real& y);
Real max(const Real& a, const Real& b);
Real pi(Bits prec);
/// 2^e at the given precision.
Real exp2i(long e, Bits prec);

/// exp(q) rounded in the given direction (MPFR_RNDD / MPFR_RNDU), with the
/// rational argument itself rounded in the same direction first.
Real exp_directed(const mpq_class& q, Bits prec, mpfr_rnd_t rnd);

/// Complex number with Real parts at a common precision.
class Complex {
 public:
  explicit Complex(Bits prec = 128) : re_(prec), im_(prec) {}
  Complex(Real re, Real im) : re_(std::move(re)), im_(std::move(im)) {}
  Complex(double re, double im, Bits prec) : re_(re, prec), im_(im, prec) {}
  explicit Complex(const Real& re) : re_(re), im_(0L, re.prec()) {}

  const Real& re() const { return re_; }
  const Real& im() const { return im_; }
  Real& re() { return re_; }
  Real& im() { return im_; }
  Bits prec() const { return re_.prec(); }
  Complex with_prec(Bits prec) const { return {re_.with_prec(prec), im_.with_prec(prec)}; }

  Complex& operator+=(const Complex& o);
  Complex& operator-=(const Complex& o);
  Complex& operator*=(const Complex& o);
  Complex& operator/=(const Complex& o);
  Complex& operator*=(const Real& k);
  Complex& operator/=(const Real& k);
  Complex& operator*=(long k);
  Complex& operator/=(long k);

  friend Complex operator+(Complex a, const Complex& b) { return a += b; }
  friend Complex operator-(Complex a, const Complex& b) { return a -= b; }
  friend Complex operator*(Complex a, const Complex& b) { return a *= b; }
  friend Complex operator/(Complex a, const Complex& b) { return a /= b; }
  friend Complex operator*(Complex a, const Real& k) { return a *= k; }
  friend Complex operator/(Complex a, const Real& k) { return a /= k; }
  friend Complex operator*(Complex a, long k) { return a *= k; }
  friend Complex operator/(Complex a, long k) { return a /= k; }
  friend Complex operator-(Complex a) { return {-a.re_, -a.im_}; }

  bool is_zero() const { return re_.is_zero() && im_.is_zero(); }

 private:
  Real re_;
  Real im_;
};

using HPComplex = Complex;

Real abs(const Complex& z);
Real norm(const Complex& z);  // |z|^2
Real arg(const Complex& z);
Complex conj(const Complex& z);
Complex exp(const Complex& z);
Complex log(const Complex& z);  // principal branch
Complex sqrt(const Complex& z);
Complex sin(const Complex& z);
Complex cos(const Complex& z);
/// base^z for real base > 0 via the real logarithm of base.
Complex pow(const Real& base, const Complex& z);
/// z^w on the principal branch.
Complex pow(const Complex& z, const Complex& w);

}  // namespace zetaseq::hp
