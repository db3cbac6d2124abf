#include "zetaseq/hp.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace zetaseq::hp {

namespace {

void widen(mpfr_ptr a, Bits p) {
  if (mpfr_get_prec(a) < p) mpfr_prec_round(a, p, MPFR_RNDN);
}

}  // namespace

Real::Real(Bits prec) {
  mpfr_init2(v_, prec);
  mpfr_set_zero(v_, 1);
}

Real::Real(long v, Bits prec) {
  mpfr_init2(v_, prec);
  mpfr_set_si(v_, v, MPFR_RNDN);
}

Real::Real(double v, Bits prec) {
  mpfr_init2(v_, prec);
  mpfr_set_d(v_, v, MPFR_RNDN);
}

Real::Real(const mpq_class& q, Bits prec, mpfr_rnd_t rnd) {
  mpfr_init2(v_, prec);
  mpfr_set_q(v_, q.get_mpq_t(), rnd);
}

Real::Real(const mpz_class& z, Bits prec, mpfr_rnd_t rnd) {
  mpfr_init2(v_, prec);
  mpfr_set_z(v_, z.get_mpz_t(), rnd);
}

Real Real::parse(const std::string& decimal, Bits prec) {
  Real r(prec);
  if (mpfr_set_str(r.v_, decimal.c_str(), 10, MPFR_RNDN) != 0)
    throw std::invalid_argument("not a decimal number: " + decimal);
  return r;
}

Real::Real(const Real& o) {
  mpfr_init2(v_, o.prec());
  mpfr_set(v_, o.v_, MPFR_RNDN);
}

Real::Real(Real&& o) noexcept {
  mpfr_init2(v_, MPFR_PREC_MIN);
  mpfr_swap(v_, o.v_);
}

Real& Real::operator=(const Real& o) {
  if (this != &o) {
    mpfr_set_prec(v_, o.prec());
    mpfr_set(v_, o.v_, MPFR_RNDN);
  }
  return *this;
}

Real& Real::operator=(Real&& o) noexcept {
  mpfr_swap(v_, o.v_);
  return *this;
}

Real::~Real() { mpfr_clear(v_); }

Real Real::with_prec(Bits prec) const {
  Real r(prec);
  mpfr_set(r.v_, v_, MPFR_RNDN);
  return r;
}

std::string Real::to_string() const {
  const int digits = static_cast<int>(std::ceil(static_cast<double>(prec()) * 0.30102999566398120)) + 1;
  return to_string(digits);
}

std::string Real::to_string(int digits) const {
  if (mpfr_zero_p(v_)) return "0";
  char* buf = nullptr;
  mpfr_asprintf(&buf, "%.*Re", std::max(digits - 1, 0), v_);
  std::string s(buf);
  mpfr_free_str(buf);
  return s;
}

long Real::exponent() const {
  if (mpfr_zero_p(v_)) return -(1L << 40);
  return mpfr_get_exp(v_);
}

Real& Real::operator+=(const Real& o) {
  widen(v_, o.prec());
  mpfr_add(v_, v_, o.v_, MPFR_RNDN);
  return *this;
}

Real& Real::operator-=(const Real& o) {
  widen(v_, o.prec());
  mpfr_sub(v_, v_, o.v_, MPFR_RNDN);
  return *this;
}

Real& Real::operator*=(const Real& o) {
  widen(v_, o.prec());
  mpfr_mul(v_, v_, o.v_, MPFR_RNDN);
  return *this;
}

Real& Real::operator/=(const Real& o) {
  widen(v_, o.prec());
  mpfr_div(v_, v_, o.v_, MPFR_RNDN);
  return *this;
}

Real& Real::operator*=(long k) {
  mpfr_mul_si(v_, v_, k, MPFR_RNDN);
  return *this;
}

Real& Real::operator/=(long k) {
  mpfr_div_si(v_, v_, k, MPFR_RNDN);
  return *this;
}

Real operator-(Real a) {
  mpfr_neg(a.v_, a.v_, MPFR_RNDN);
  return a;
}

#define ZETASEQ_UNARY(name, fn)            \
  Real name(const Real& x) {               \
    Real r(x.prec());                      \
    fn(r.get(), x.get(), MPFR_RNDN);       \
    return r;                              \
  }

ZETASEQ_UNARY(abs, mpfr_abs)
ZETASEQ_UNARY(sqrt, mpfr_sqrt)
ZETASEQ_UNARY(exp, mpfr_exp)
ZETASEQ_UNARY(expm1, mpfr_expm1)
ZETASEQ_UNARY(log, mpfr_log)
ZETASEQ_UNARY(sin, mpfr_sin)
ZETASEQ_UNARY(cos, mpfr_cos)
ZETASEQ_UNARY(sinh, mpfr_sinh)
ZETASEQ_UNARY(cosh, mpfr_cosh)

#undef ZETASEQ_UNARY

Real atan2(const Real& y, const Real& x) {
  Real r(std::max(x.prec(), y.prec()));
  mpfr_atan2(r.get(), y.get(), x.get(), MPFR_RNDN);
  return r;
}

Real pow(const Real& x, const Real& y) {
  Real r(std::max(x.prec(), y.prec()));
  mpfr_pow(r.get(), x.get(), y.get(), MPFR_RNDN);
  return r;
}

Real hypot(const Real& x, const Real& y) {
  Real r(std::max(x.prec(), y.prec()));
  mpfr_hypot(r.get(), x.get(), y.get(), MPFR_RNDN);
  return r;
}

Real max(const Real& a, const Real& b) { return a < b ? b : a; }

Real pi(Bits prec) {
  Real r(prec);
  mpfr_const_pi(r.get(), MPFR_RNDN);
  return r;
}

Real exp2i(long e, Bits prec) {
  Real r(prec);
  mpfr_set_ui_2exp(r.get(), 1, e, MPFR_RNDN);
  return r;
}

Real exp_directed(const mpq_class& q, Bits prec, mpfr_rnd_t rnd) {
  Real arg(prec);
  mpfr_set_q(arg.get(), q.get_mpq_t(), rnd);
  Real r(prec);
  mpfr_exp(r.get(), arg.get(), rnd);
  return r;
}

// ---- Complex ----

Complex& Complex::operator+=(const Complex& o) {
  re_ += o.re_;
  im_ += o.im_;
  return *this;
}

Complex& Complex::operator-=(const Complex& o) {
  re_ -= o.re_;
  im_ -= o.im_;
  return *this;
}

Complex& Complex::operator*=(const Complex& o) {
  Real r = re_ * o.re_ - im_ * o.im_;
  Real i = re_ * o.im_ + im_ * o.re_;
  re_ = std::move(r);
  im_ = std::move(i);
  return *this;
}

Complex& Complex::operator/=(const Complex& o) {
  // Smith's algorithm
  if (abs(o.re_) >= abs(o.im_)) {
    Real t = o.im_ / o.re_;
    Real d = o.re_ + o.im_ * t;
    Real r = (re_ + im_ * t) / d;
    Real i = (im_ - re_ * t) / d;
    re_ = std::move(r);
    im_ = std::move(i);
  } else {
    Real t = o.re_ / o.im_;
    Real d = o.re_ * t + o.im_;
    Real r = (re_ * t + im_) / d;
    Real i = (im_ * t - re_) / d;
    re_ = std::move(r);
    im_ = std::move(i);
  }
  return *this;
}

Complex& Complex::operator*=(const Real& k) {
  re_ *= k;
  im_ *= k;
  return *this;
}

Complex& Complex::operator/=(const Real& k) {
  re_ /= k;
  im_ /= k;
  return *this;
}

Complex& Complex::operator*=(long k) {
  re_ *= k;
  im_ *= k;
  return *this;
}

Complex& Complex::operator/=(long k) {
  re_ /= k;
  im_ /= k;
  return *this;
}

Real abs(const Complex& z) { return hypot(z.re(), z.im()); }
Real norm(const Complex& z) { return z.re() * z.re() + z.im() * z.im(); }
Real arg(const Complex& z) { return atan2(z.im(), z.re()); }
Complex conj(const Complex& z) { return {z.re(), -z.im()}; }

Complex exp(const Complex& z) {
  Real m = exp(z.re());
  return {m * cos(z.im()), m * sin(z.im())};
}

Complex log(const Complex& z) { return {log(abs(z)), arg(z)}; }

Complex sqrt(const Complex& z) {
  if (z.is_zero()) return z;
  Real r = abs(z);
  Real a = sqrt((r + abs(z.re())) / 2L);
  if (z.re().sign() >= 0) return {a, z.im() / (a * 2L)};
  Real b = z.im().sign() >= 0 ? a : -a;
  return {abs(z.im()) / (a * 2L), b};
}

Complex sin(const Complex& z) { return {sin(z.re()) * cosh(z.im()), cos(z.re()) * sinh(z.im())}; }

Complex cos(const Complex& z) { return {cos(z.re()) * cosh(z.im()), -(sin(z.re()) * sinh(z.im()))}; }

Complex pow(const Real& base, const Complex& z) {
  if (base.sign() <= 0) throw std::domain_error("pow: base must be positive");
  return exp(z * log(base));
}

Complex pow(const Complex& z, const Complex& w) { return exp(w * log(z)); }

}  // namespace zetaseq::hp
