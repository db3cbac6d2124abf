#include "zetaseq/analytic_eval.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <stdexcept>
#include <string>

#include "zetaseq/divided_differences.hpp"
#include "zetaseq/errors.hpp"
#include "zetaseq/exact_core.hpp"
#include "zetaseq/parallel.hpp"

namespace zetaseq {

using hp::Complex;
using hp::Real;

namespace {

constexpr int kCrossCheckLimit = 256;

Complex cplx(long re, hp::Bits p) { return Complex(Real(re, p)); }

bool is_exactly(const Complex& s, long v) { return s.im().is_zero() && s.re() == Real(v, s.prec()); }

std::string describe(const Complex& s) { return s.re().to_string(20) + (s.im().is_zero() ? "" : " + " + s.im().to_string(20) + "i"); }

// Coefficients of the partial fractions of F_m (kind 0) or G_m (kind 1).
const std::vector<ExactRational>& fraction_coeffs(int m, int kind) {
  static std::mutex mu;
  static std::map<std::pair<int, int>, std::vector<ExactRational>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto key = std::make_pair(m, kind);
  auto it = cache.find(key);
  if (it != cache.end()) return it->second;
  auto a = stirling_coeffs(m);
  if (kind == 0) {
    auto B = bernoulli_table(m);
    for (std::size_t j = 0; j < a.size(); ++j) a[j] *= B[j];
  } else {
    for (std::size_t j = 1; j < a.size(); j += 2) a[j] = -a[j];
  }
  return cache.emplace(key, std::move(a)).first->second;
}

void guard_poles(int m, const Complex& s, long P) {
  // nearest candidate pole 1 - j, 0 <= j <= m
  double re = std::round(s.re().to_double());
  long k = static_cast<long>(re);
  if (k > 1) k = 1;
  if (k < 1 - m) k = 1 - m;
  Real dist = abs(s - cplx(k, s.prec()));
  if (dist < hp::exp2i(-P / 4, s.prec()))
    throw PoleError("evaluation at or near pole s = " + std::to_string(k) + " (s = " + describe(s) + ")");
}

// Forward recurrence for F (with_source) or G (without).
Complex recurrence_value(int m, const Complex& s, hp::Bits W, bool with_source) {
  std::vector<Complex> vals;
  vals.reserve(m + 1);
  const Complex one = cplx(1, W);
  const Complex sw = s.with_prec(W);
  vals.push_back(one / (sw - one));
  for (int k = 1; k <= m; ++k) {
    Complex acc(W);
    for (int j = 1; j <= k; ++j) acc += vals[k - j] / (static_cast<long>(j) * (j + 1));
    acc *= static_cast<long>(k + 1);
    if (with_source) acc += Complex(Real(1L, W) / static_cast<long>(k + 1));
    vals.push_back(acc / (sw + cplx(k - 1, W)));
  }
  return vals.back();
}

Complex partial_fraction_value(int m, int kind, const Complex& s, long P) {
  const auto& c = fraction_coeffs(m, kind);
  long bits = 0;
  for (const auto& v : c) {
    if (v == 0) continue;
    long e = static_cast<long>(mpz_sizeinbase(v.get_num_mpz_t(), 2)) -
             static_cast<long>(mpz_sizeinbase(v.get_den_mpz_t(), 2)) + 1;
    bits = std::max(bits, e);
  }
  const hp::Bits E = P + bits + 64;
  const Complex sw = s.with_prec(E);
  Complex acc(E);
  for (std::size_t j = 0; j < c.size(); ++j) {
    if (c[j] == 0) continue;
    acc += Complex(Real(c[j], E)) / (sw + cplx(static_cast<long>(j) - 1, E));
  }
  return acc;
}

Complex checked_value(int m, int kind, const Complex& s, long P) {
  if (m < 0) throw std::invalid_argument("m must be non-negative");
  if (P < 2) throw std::invalid_argument("precision too small");
  guard_poles(m, s, P);
  const hp::Bits W = P + 32;
  Complex rec = recurrence_value(m, s, W, kind == 0);
  if (m <= kCrossCheckLimit) {
    Complex pf = partial_fraction_value(m, kind, s, P).with_prec(W);
    Real diff = abs(rec - pf);
    Real tol = abs(pf) * hp::exp2i(-P / 2, W) + hp::exp2i(-P, W);
    if (diff > tol)
      throw CrossCheckError(std::string(kind == 0 ? "F" : "G") + "_" + std::to_string(m) + "(" + describe(s) +
                            "): recurrence and partial fractions differ by " + diff.to_string(6));
  }
  return rec.with_prec(P);
}

// ---- zeta ----

Complex borwein_zeta(const Complex& s, long P) {
  const double t = std::fabs(s.im().to_double());
  const hp::Bits probe = 64;
  Complex one_minus = cplx(1, probe) - hp::pow(Real(2L, probe), cplx(1, probe) - s.with_prec(probe));
  const double denom = hp::abs(one_minus).to_double();
  if (!(denom > std::ldexp(1.0, static_cast<int>(-P / 4))))
    throw PrecisionError("1 - 2^(1-s) vanishes to working precision at s = " + describe(s));
  const double ln_err = (P - 8) * std::log(2.0) + std::log(3.0 * (1 + 2 * t)) + M_PI * t / 2 - std::log(denom);
  const long n = static_cast<long>(std::ceil(ln_err / std::log(3 + std::sqrt(8.0)))) + 10;
  const hp::Bits W = P + 32 + static_cast<long>(std::ceil(M_PI * t / (2 * std::log(2.0)))) +
                     static_cast<long>(std::ceil(std::log2(static_cast<double>(n)))) +
                     static_cast<long>(std::ceil(-std::log2(denom)));

  // d_k = n sum_{i<=k} (n+i-1)! 4^i / ((n-i)! (2i)!), exact integers
  std::vector<BigInt> d(n + 1);
  ExactRational term(1);  // n * (n+i-1)! 4^i / ((n-i)! (2i)!) at i = 0
  ExactRational sum(0);
  for (long i = 0; i <= n; ++i) {
    if (i > 0) {
      term *= ExactRational(4 * (n + i - 1) * (n - i + 1));
      term /= ExactRational(2 * i * (2 * i - 1));
    }
    sum += term;
    if (sum.get_den() != 1) throw std::logic_error("Borwein coefficient is not an integer");
    d[i] = sum.get_num();
  }

  const Complex sw = s.with_prec(W);
  Complex acc(W);
  for (long k = 0; k < n; ++k) {
    Real w(BigInt(d[k] - d[n]), W);
    Complex pw = hp::pow(Real(k + 1, W), -sw);
    if (k % 2) acc -= pw * w;
    else acc += pw * w;
  }
  Complex factor = (cplx(1, W) - hp::pow(Real(2L, W), cplx(1, W) - sw)) * Real(d[n], W);
  return -(acc / factor);
}

// ---- gamma ----

// Gamma(z + 1) for Re z > 0.
Complex spouge_gamma1(const Complex& z, long P) {
  const long a = static_cast<long>(std::ceil((P + 8) * std::log(2.0) / std::log(2 * M_PI))) + 1;
  const hp::Bits W = 2 * P + 32;
  const Complex zw = z.with_prec(W);
  Real sum = sqrt(hp::pi(W) * 2L);
  Complex series(sum);
  Real fact(1L, W);  // (k-1)!
  for (long k = 1; k < a; ++k) {
    if (k > 1) fact *= (k - 1);
    Real ak(a - k, W);
    Real ck = hp::pow(ak, Real(k, W) - Real(0.5, W)) * hp::exp(ak) / fact;
    if (k % 2 == 0) ck = -ck;
    series += Complex(ck) / (zw + cplx(k, W));
  }
  Complex za = zw + cplx(a, W);
  Complex lead = hp::exp((zw + Complex(Real(0.5, W))) * hp::log(za) - za);
  return (lead * series).with_prec(P + 16);
}

}  // namespace

HPComplex reference_zeta(const HPComplex& s, long precision_bits) {
  if (is_exactly(s, 1)) throw PoleError("zeta has a pole at s = 1");
  if (s.re().sign() <= 0) throw DomainError("reference zeta requires Re s > 0, got s = " + describe(s));
  return borwein_zeta(s, precision_bits).with_prec(precision_bits);
}

HPComplex reference_gamma(const HPComplex& s, long precision_bits) {
  const long P = precision_bits;
  if (s.im().is_zero() && s.re().sign() <= 0 && mpfr_integer_p(s.re().get()))
    throw PoleError("Gamma has a pole at s = " + s.re().to_string(12));
  const hp::Bits W = P + 16;
  const Complex sw = s.with_prec(W);
  if (sw.re() >= Real(0.5, W)) return (spouge_gamma1(sw, P) / sw).with_prec(P);
  // reflection: Gamma(s) = pi / (sin(pi s) Gamma(1 - s))
  Complex one_minus = cplx(1, W) - sw;
  Complex g = spouge_gamma1(one_minus, P) / one_minus;
  Complex sine = hp::sin(sw * hp::pi(W));
  return (Complex(hp::pi(W)) / (sine * g)).with_prec(P);
}

HPComplex scaled_reference(const HPComplex& s, long precision_bits) {
  if (is_exactly(s, 1)) return cplx(1, precision_bits);
  const hp::Bits W = precision_bits + 16;
  Complex sw = s.with_prec(W);
  Complex v = (sw - cplx(1, W)) * reference_gamma(sw, W) * reference_zeta(sw, W);
  return v.with_prec(precision_bits);
}

HPComplex eval_F_hp(int m, const HPComplex& s, long precision_bits) { return checked_value(m, 0, s, precision_bits); }

HPComplex eval_G_hp(int m, const HPComplex& s, long precision_bits) { return checked_value(m, 1, s, precision_bits); }

HPComplex eval_ratio_hp(int m, const HPComplex& s, long precision_bits) {
  const long W = precision_bits + 16;
  Complex F = eval_F_hp(m, s, W);
  Complex G = eval_G_hp(m, s, W);
  Complex sw = s.with_prec(W);
  return (F / ((sw - cplx(1, W)) * G)).with_prec(precision_bits);
}

HPComplex eval_F_partial_fractions(int m, const HPComplex& s, long precision_bits) {
  if (m < 0) throw std::invalid_argument("m must be non-negative");
  guard_poles(m, s, precision_bits);
  return partial_fraction_value(m, 0, s, precision_bits).with_prec(precision_bits);
}

HPComplex scaled_F(int m, const HPComplex& s, long precision_bits) {
  if (m < 1) throw DomainError("scaled_F requires m >= 1 (h_0 = 0)");
  if (is_exactly(s, 1)) return cplx(1, precision_bits);
  const long W = precision_bits + 16;
  Complex sw = s.with_prec(W);
  Complex sm1 = sw - cplx(1, W);
  Real logh = hp::log(Real(harmonic(m), W));
  Complex power = hp::exp(sm1 * logh);
  return (power * sm1 * eval_F_hp(m, s, W)).with_prec(precision_bits);
}

namespace {

long row_precision(int m, long P) { return m > 128 ? std::max(P, 192L) : P; }

template <class Approx, class Reference>
std::vector<ConvergenceRow> table(const std::vector<HPComplex>& s_list, const std::vector<int>& m_list, long P,
                                  Approx approx, Reference reference) {
  long top = P;
  for (int m : m_list) top = std::max(top, row_precision(m, P));
  auto refs = parallel_map<Complex>(s_list.size(), [&](std::size_t i) { return reference(s_list[i], top + 16); });
  const std::size_t nm = m_list.size();
  return parallel_map<ConvergenceRow>(s_list.size() * nm, [&](std::size_t idx) {
    const std::size_t si = idx / nm;
    const int m = m_list[idx % nm];
    const long rp = row_precision(m, P);
    ConvergenceRow row;
    row.m = m;
    row.s = s_list[si].with_prec(rp);
    row.approx = approx(m, row.s, rp);
    row.reference = refs[si].with_prec(rp);
    row.abs_error = abs(row.approx - row.reference);
    return row;
  });
}

}  // namespace

std::vector<ConvergenceRow> convergence_table(const std::vector<HPComplex>& s_list, const std::vector<int>& m_list,
                                              long precision_bits) {
  return table(s_list, m_list, precision_bits, eval_ratio_hp, reference_zeta);
}

std::vector<ConvergenceRow> scaled_convergence_table(const std::vector<HPComplex>& s_list,
                                                     const std::vector<int>& m_list, long precision_bits) {
  return table(s_list, m_list, precision_bits, scaled_F, scaled_reference);
}

KernelGapReport kernel_gap(int m, int grid_points, long precision_bits) {
  if (m < 1) throw std::invalid_argument("kernel_gap requires m >= 1");
  if (grid_points < 1) throw std::invalid_argument("kernel_gap requires at least one grid interval");
  const hp::Bits P = precision_bits;
  const ExactRational h = harmonic(m);
  const RatPolynomial f = kernel_f_polynomial(m);
  KernelGapReport rep;
  rep.m = m;
  rep.grid_points = grid_points;
  rep.sup = Real(0L, P);
  rep.argmax = Real(0L, P);
  for (int i = 0; i <= grid_points; ++i) {
    ExactRational y(i, grid_points);
    y.canonicalize();
    Real fy(f.eval(y), P);
    Real x(ExactRational(h * y), P);
    Real kernel = x.is_zero() ? Real(1L, P) : x / hp::expm1(x);
    Real gap = abs(fy - kernel);
    if (gap > rep.sup) {
      rep.sup = gap;
      rep.argmax = x;
    }
  }
  rep.scale = Real(ExactRational(h / m), P);
  rep.ratio = rep.sup / rep.scale;
  return rep;
}

}  // namespace zetaseq
