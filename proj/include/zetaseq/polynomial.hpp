#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace zetaseq {

using BigInt = mpz_class;
using ExactRational = mpq_class;

/// Dense univariate polynomial, coefficients in ascending degree.
///
/// Canonical form has no trailing zero coefficients, so the zero polynomial
/// is the empty coefficient array and degree() returns -1 for it. Two
/// polynomials compare equal exactly when their coefficient arrays match.
template <typename T>
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<T> coefficients) : c_(std::move(coefficients)) { trim(); }

  static Polynomial constant(const T& v) { return Polynomial(std::vector<T>{v}); }

  static Polynomial monomial(const T& v, std::size_t degree) {
    std::vector<T> c(degree + 1, T(0));
    c[degree] = v;
    return Polynomial(std::move(c));
  }

  // c0 + c1*s
  static Polynomial linear(const T& c0, const T& c1) { return Polynomial(std::vector<T>{c0, c1}); }

  bool is_zero() const { return c_.empty(); }
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  const std::vector<T>& coeffs() const { return c_; }
  std::size_t size() const { return c_.size(); }

  T coeff(std::size_t i) const { return i < c_.size() ? c_[i] : T(0); }
  const T& leading() const { return c_.back(); }

  template <typename U>
  U eval(const U& x) const {
    U acc(0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
      acc *= x;
      acc += U(*it);
    }
    return acc;
  }

  Polynomial derivative() const {
    if (c_.size() <= 1) return {};
    std::vector<T> d(c_.size() - 1);
    for (std::size_t i = 1; i < c_.size(); ++i) d[i - 1] = c_[i] * static_cast<long>(i);
    return Polynomial(std::move(d));
  }

  // p(factor * s)
  Polynomial scale_argument(const T& factor) const {
    std::vector<T> d(c_.size());
    T pw(1);
    for (std::size_t i = 0; i < c_.size(); ++i) {
      d[i] = c_[i] * pw;
      pw *= factor;
    }
    return Polynomial(std::move(d));
  }

  Polynomial& operator+=(const Polynomial& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), T(0));
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    trim();
    return *this;
  }

  Polynomial& operator-=(const Polynomial& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), T(0));
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
    trim();
    return *this;
  }

  Polynomial& operator*=(const T& k) {
    if (k == 0) {
      c_.clear();
      return *this;
    }
    for (auto& v : c_) v *= k;
    return *this;
  }

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(Polynomial a, const T& k) { return a *= k; }
  friend Polynomial operator*(const T& k, Polynomial a) { return a *= k; }
  friend Polynomial operator-(Polynomial a) {
    for (auto& v : a.c_) v = -v;
    return a;
  }

  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<T> r(a.c_.size() + b.c_.size() - 1, T(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
      if (a.c_[i] == 0) continue;
      for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
    }
    return Polynomial(std::move(r));
  }
  Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }

  friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.c_ == b.c_; }
  friend bool operator!=(const Polynomial& a, const Polynomial& b) { return !(a == b); }

  std::string to_string(const char* var = "s") const {
    if (c_.empty()) return "0";
    std::string out;
    for (std::size_t i = c_.size(); i-- > 0;) {
      if (c_[i] == 0) continue;
      std::string v = c_[i].get_str();
      bool neg = v[0] == '-';
      if (neg) v.erase(0, 1);
      if (!out.empty()) out += neg ? " - " : " + ";
      else if (neg) out += "-";
      bool unit = (v == "1");
      if (i == 0 || !unit) out += (i > 0 && v.find('/') != std::string::npos) ? "(" + v + ")" : v;
      if (i > 0) {
        if (!unit) out += "*";
        out += var;
        if (i > 1) out += "^" + std::to_string(i);
      }
    }
    return out;
  }

 private:
  void trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
  }

  std::vector<T> c_;
};

using IntPolynomial = Polynomial<BigInt>;
using RatPolynomial = Polynomial<ExactRational>;

/// Quotient and remainder over the rationals.
std::pair<RatPolynomial, RatPolynomial> divmod(const RatPolynomial& a, const RatPolynomial& b);

/// a / b over the rationals; throws std::domain_error if b does not divide a.
RatPolynomial exact_div(const RatPolynomial& a, const RatPolynomial& b);

/// a / b over the integers; throws std::domain_error unless the quotient is
/// an integer polynomial with zero remainder.
IntPolynomial exact_div(const IntPolynomial& a, const IntPolynomial& b);

/// gcd of all coefficients (non-negative); 0 for the zero polynomial.
BigInt content(const IntPolynomial& p);

/// p / content(p) with positive leading coefficient.
IntPolynomial primitive_part(const IntPolynomial& p);

/// Pseudo-remainder prem(a, b) = lc(b)^(deg a - deg b + 1) * a mod b.
IntPolynomial pseudo_remainder(const IntPolynomial& a, const IntPolynomial& b);

/// Polynomial gcd over Z by the subresultant remainder sequence. The result
/// is primitive up to the integer gcd of the two contents and has positive
/// leading coefficient.
IntPolynomial gcd(const IntPolynomial& a, const IntPolynomial& b);

/// Clears denominators: returns (k, q) with q = k*p integral and k > 0
/// the lcm of the coefficient denominators.
std::pair<BigInt, IntPolynomial> clear_denominators(const RatPolynomial& p);

RatPolynomial to_rational(const IntPolynomial& p);

/// Newton interpolation through (xs[i], ys[i]); xs must be distinct.
RatPolynomial interpolate(const std::vector<ExactRational>& xs, const std::vector<ExactRational>& ys);

}  // namespace zetaseq
