#pragma once

#include <string>
#include <utility>
#include <vector>

#include "zetaseq/polynomial.hpp"

namespace zetaseq {

/// Reduced quotient of integer polynomials in s.
///
/// Canonical form: numerator and denominator coprime over Q, the integer
/// content of both taken together is 1, and the denominator has a positive
/// leading coefficient. The zero function is 0/1. Equality of canonical
/// values is coefficient-wise equality.
class RationalFunction {
 public:
  RationalFunction();  // zero
  RationalFunction(IntPolynomial numerator, IntPolynomial denominator);
  RationalFunction(const RatPolynomial& numerator, const RatPolynomial& denominator);

  static RationalFunction constant(const ExactRational& v);
  static RationalFunction polynomial(const RatPolynomial& p);

  /// sum_i residues[i] / (s - poles[i]); poles must be distinct.
  static RationalFunction from_partial_fractions(const std::vector<ExactRational>& residues,
                                                 const std::vector<ExactRational>& poles);

  const IntPolynomial& numerator() const { return num_; }
  const IntPolynomial& denominator() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }

  /// Exact value at s; throws PoleError naming the pole if den(s) = 0.
  ExactRational eval(const ExactRational& s) const;

  /// True when s is a root of the canonical denominator.
  bool has_pole_at(const ExactRational& s) const;

  /// Residue at a simple pole; throws DomainError if s0 is not a simple pole.
  ExactRational residue_at(const ExactRational& s0) const;

  /// lim_{s -> inf} s * f(s); throws DomainError if the limit is infinite.
  ExactRational limit_s_times_at_infinity() const;

  RationalFunction& operator+=(const RationalFunction& o);
  RationalFunction& operator-=(const RationalFunction& o);
  RationalFunction& operator*=(const RationalFunction& o);
  RationalFunction& operator/=(const RationalFunction& o);

  friend RationalFunction operator+(RationalFunction a, const RationalFunction& b) { return a += b; }
  friend RationalFunction operator-(RationalFunction a, const RationalFunction& b) { return a -= b; }
  friend RationalFunction operator*(RationalFunction a, const RationalFunction& b) { return a *= b; }
  friend RationalFunction operator/(RationalFunction a, const RationalFunction& b) { return a /= b; }

  friend bool operator==(const RationalFunction& a, const RationalFunction& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend bool operator!=(const RationalFunction& a, const RationalFunction& b) { return !(a == b); }

  std::string to_string() const;

 private:
  void canonicalize();

  IntPolynomial num_;
  IntPolynomial den_;
};

}  // namespace zetaseq
