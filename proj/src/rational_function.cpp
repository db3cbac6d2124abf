#include "zetaseq/rational_function.hpp"

#include <stdexcept>

#include "zetaseq/errors.hpp"

namespace zetaseq {

RationalFunction::RationalFunction() : num_(), den_(IntPolynomial::constant(1)) {}

RationalFunction::RationalFunction(IntPolynomial numerator, IntPolynomial denominator)
    : num_(std::move(numerator)), den_(std::move(denominator)) {
  if (den_.is_zero()) throw std::domain_error("rational function with zero denominator");
  canonicalize();
}

RationalFunction::RationalFunction(const RatPolynomial& numerator, const RatPolynomial& denominator) {
  if (denominator.is_zero()) throw std::domain_error("rational function with zero denominator");
  auto [kn, n] = clear_denominators(numerator);
  auto [kd, d] = clear_denominators(denominator);
  // n/kn over d/kd  ==  (n*kd) / (d*kn)
  num_ = n * kd;
  den_ = d * kn;
  canonicalize();
}

RationalFunction RationalFunction::constant(const ExactRational& v) {
  return RationalFunction(IntPolynomial::constant(v.get_num()), IntPolynomial::constant(v.get_den()));
}

RationalFunction RationalFunction::polynomial(const RatPolynomial& p) {
  return RationalFunction(p, RatPolynomial::constant(1));
}

RationalFunction RationalFunction::from_partial_fractions(const std::vector<ExactRational>& residues,
                                                          const std::vector<ExactRational>& poles) {
  if (residues.size() != poles.size()) throw std::invalid_argument("partial fractions: size mismatch");
  const std::size_t n = poles.size();
  // prefix/suffix products give prod_{i != j} (s - pole_i) in O(n^2) coefficient work
  std::vector<RatPolynomial> prefix(n + 1), suffix(n + 1);
  prefix[0] = RatPolynomial::constant(1);
  for (std::size_t i = 0; i < n; ++i)
    prefix[i + 1] = prefix[i] * RatPolynomial::linear(-poles[i], ExactRational(1));
  suffix[n] = RatPolynomial::constant(1);
  for (std::size_t i = n; i-- > 0;)
    suffix[i] = suffix[i + 1] * RatPolynomial::linear(-poles[i], ExactRational(1));
  RatPolynomial num;
  for (std::size_t j = 0; j < n; ++j) {
    if (residues[j] == 0) continue;
    num += (prefix[j] * suffix[j + 1]) * residues[j];
  }
  return RationalFunction(num, prefix[n]);
}

void RationalFunction::canonicalize() {
  if (num_.is_zero()) {
    den_ = IntPolynomial::constant(1);
    return;
  }
  if (den_.degree() > 0 && num_.degree() > 0) {
    IntPolynomial g = primitive_part(gcd(num_, den_));
    if (g.degree() > 0) {
      num_ = exact_div(num_, g);
      den_ = exact_div(den_, g);
    }
  }
  BigInt c = content(num_);
  BigInt cd = content(den_);
  mpz_gcd(c.get_mpz_t(), c.get_mpz_t(), cd.get_mpz_t());
  if (den_.leading() < 0) c = -c;
  if (c != 1) {
    std::vector<BigInt> n = num_.coeffs(), d = den_.coeffs();
    for (auto& v : n) mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), c.get_mpz_t());
    for (auto& v : d) mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), c.get_mpz_t());
    num_ = IntPolynomial(std::move(n));
    den_ = IntPolynomial(std::move(d));
  }
}

bool RationalFunction::has_pole_at(const ExactRational& s) const { return den_.eval(s) == 0; }

ExactRational RationalFunction::eval(const ExactRational& s) const {
  ExactRational d = den_.eval(s);
  if (d == 0) throw PoleError("evaluation at pole s = " + s.get_str());
  return num_.eval(s) / d;
}

ExactRational RationalFunction::residue_at(const ExactRational& s0) const {
  if (den_.eval(s0) != 0) throw DomainError("s = " + s0.get_str() + " is not a pole");
  ExactRational dd = den_.derivative().eval(s0);
  if (dd == 0) throw DomainError("s = " + s0.get_str() + " is a pole of order > 1");
  return num_.eval(s0) / dd;
}

ExactRational RationalFunction::limit_s_times_at_infinity() const {
  if (num_.is_zero() || num_.degree() + 1 < den_.degree()) return ExactRational(0);
  if (num_.degree() + 1 > den_.degree()) throw DomainError("s*f(s) is unbounded at infinity");
  ExactRational r(num_.leading(), den_.leading());
  r.canonicalize();
  return r;
}

RationalFunction& RationalFunction::operator+=(const RationalFunction& o) {
  if (den_ == o.den_) {
    num_ += o.num_;
  } else {
    num_ = num_ * o.den_ + o.num_ * den_;
    den_ = den_ * o.den_;
  }
  canonicalize();
  return *this;
}

RationalFunction& RationalFunction::operator-=(const RationalFunction& o) {
  if (den_ == o.den_) {
    num_ -= o.num_;
  } else {
    num_ = num_ * o.den_ - o.num_ * den_;
    den_ = den_ * o.den_;
  }
  canonicalize();
  return *this;
}

RationalFunction& RationalFunction::operator*=(const RationalFunction& o) {
  num_ = num_ * o.num_;
  den_ = den_ * o.den_;
  canonicalize();
  return *this;
}

RationalFunction& RationalFunction::operator/=(const RationalFunction& o) {
  if (o.is_zero()) throw std::domain_error("division by the zero rational function");
  IntPolynomial n = num_ * o.den_;
  den_ = den_ * o.num_;
  num_ = std::move(n);
  canonicalize();
  return *this;
}

std::string RationalFunction::to_string() const {
  return "(" + num_.to_string() + ") / (" + den_.to_string() + ")";
}

}  // namespace zetaseq
