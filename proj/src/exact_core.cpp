#include "zetaseq/exact_core.hpp"

#include <mutex>
#include <stdexcept>

#include "zetaseq/errors.hpp"

namespace zetaseq {

namespace {

BigInt binomial(unsigned long n, unsigned long k) {
  BigInt r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

BigInt ipow(const BigInt& b, unsigned long e) {
  BigInt r;
  mpz_pow_ui(r.get_mpz_t(), b.get_mpz_t(), e);
  return r;
}

void require_nonnegative(int v, const char* what) {
  if (v < 0) throw std::invalid_argument(std::string(what) + " must be non-negative");
}

// sum_j c_j / (s + j - 1) over terms with c_j != 0
RationalFunction shifted_partial_fractions(const std::vector<ExactRational>& c) {
  std::vector<ExactRational> res, poles;
  for (std::size_t j = 0; j < c.size(); ++j) {
    if (c[j] == 0) continue;
    res.push_back(c[j]);
    poles.emplace_back(1 - static_cast<long>(j));
  }
  return RationalFunction::from_partial_fractions(res, poles);
}

}  // namespace

std::vector<ExactRational> stirling_coeffs(int m) {
  require_nonnegative(m, "m");
  // coefficients of p_m in t, then flip signs
  std::vector<ExactRational> c{ExactRational(1)};
  for (int i = 1; i <= m; ++i) {
    std::vector<ExactRational> next(c.size() + 1, ExactRational(0));
    ExactRational inv(1, i);
    for (std::size_t j = 0; j < c.size(); ++j) {
      next[j] += c[j];
      next[j + 1] -= c[j] * inv;
    }
    c = std::move(next);
  }
  for (std::size_t j = 1; j < c.size(); j += 2) c[j] = -c[j];
  return c;
}

RatPolynomial p_polynomial(int m) {
  auto a = stirling_coeffs(m);
  for (std::size_t j = 1; j < a.size(); j += 2) a[j] = -a[j];
  return RatPolynomial(std::move(a));
}

ExactRational harmonic(int m) {
  require_nonnegative(m, "m");
  ExactRational h(0);
  for (int j = 1; j <= m; ++j) h += ExactRational(1, j);
  return h;
}

ExactRational bernoulli_kronecker(int j) {
  require_nonnegative(j, "j");
  ExactRational total(0);
  for (int k = 0; k <= j; ++k) {
    BigInt inner = 0;
    for (int r = 0; r <= k; ++r) {
      BigInt term = binomial(k, r) * ipow(BigInt(r + 1), j);
      if (r % 2) inner -= term;
      else inner += term;
    }
    ExactRational term(inner, BigInt(k + 1));
    term.canonicalize();
    total += term;
  }
  return (j % 2) ? ExactRational(-total) : total;
}

std::vector<ExactRational> bernoulli_table(int n) {
  require_nonnegative(n, "n");
  static std::mutex mu;
  static std::vector<ExactRational> cache{ExactRational(1)};
  std::lock_guard<std::mutex> lock(mu);
  while (static_cast<int>(cache.size()) <= n) {
    const int k = static_cast<int>(cache.size());
    // sum_{i<k} C(k+1, i) B_i + (k+1) B_k = 0
    ExactRational acc(0);
    for (int i = 0; i < k; ++i) {
      if (cache[i] == 0) continue;
      acc += ExactRational(binomial(k + 1, i)) * cache[i];
    }
    acc /= -(k + 1);
    cache.push_back(acc);
  }
  return {cache.begin(), cache.begin() + n + 1};
}

ExactRational bernoulli_recurrence(int j) { return bernoulli_table(j)[j]; }

RationalFunction build_F_from(std::span<const ExactRational> a) {
  const int m = static_cast<int>(a.size()) - 1;
  auto B = bernoulli_table(m < 0 ? 0 : m);
  std::vector<ExactRational> c(a.size());
  for (std::size_t j = 0; j < a.size(); ++j) c[j] = a[j] * B[j];
  return shifted_partial_fractions(c);
}

RationalFunction build_F(int m) {
  auto a = stirling_coeffs(m);
  return build_F_from(a);
}

RationalFunction build_G_from(std::span<const ExactRational> a) {
  std::vector<ExactRational> c(a.begin(), a.end());
  for (std::size_t j = 1; j < c.size(); j += 2) c[j] = -c[j];
  return shifted_partial_fractions(c);
}

RationalFunction build_G(int m) {
  auto a = stirling_coeffs(m);
  return build_G_from(a);
}

ApproximantRecord build_record_from(int m, std::span<const ExactRational> a) {
  ApproximantRecord rec;
  rec.m = m;
  rec.F = build_F_from(a);
  rec.G = build_G_from(a);
  RationalFunction s_minus_one(IntPolynomial::linear(BigInt(-1), BigInt(1)), IntPolynomial::constant(1));
  rec.ratio = rec.F / (s_minus_one * rec.G);
  rec.h_m = harmonic(m);
  return rec;
}

ApproximantRecord build_ratio(int m) {
  auto a = stirling_coeffs(m);
  return build_record_from(m, a);
}

ExactRational zeta_at_nonpositive_int(int n) {
  require_nonnegative(n, "n");
  // (-1)^n matters only at n = 0, where B_1 = -1/2
  ExactRational v = bernoulli_recurrence(n + 1) / (n + 1);
  return n % 2 ? ExactRational(-v) : v;
}

std::optional<int> interpolation_failure(const ApproximantRecord& rec) {
  for (int r = 1; r <= rec.m; ++r) {
    ExactRational s(1 - r);
    if (rec.ratio.has_pole_at(s)) return r;
    if (rec.ratio.eval(s) != zeta_at_nonpositive_int(r - 1)) return r;
  }
  return std::nullopt;
}

bool verify_interpolation(int m) {
  if (m < 1) throw std::invalid_argument("verify_interpolation requires m >= 1");
  auto rec = build_ratio(m);
  for (int r = 1; r <= m; ++r) {
    // a pole here means the cancellation in the ratio failed; let PoleError surface
    if (rec.ratio.eval(ExactRational(1 - r)) != zeta_at_nonpositive_int(r - 1)) return false;
  }
  return true;
}

ExactRational residue_at_one(const RationalFunction& f) { return f.residue_at(ExactRational(1)); }

RatPolynomial pole_product(int m) {
  RatPolynomial p = RatPolynomial::constant(1);
  for (int j = 0; j <= m; ++j) p = p * RatPolynomial::linear(ExactRational(j - 1), ExactRational(1));
  return p;
}

namespace {

// Numerator N with sum_{j=1}^m lower[m-j] * (m+1)/(j(j+1)) = N / D, D = pole_product(m-1).
RatPolynomial weighted_history_numerator(std::span<const RationalFunction> lower, int m,
                                         const RatPolynomial& D) {
  RatPolynomial acc;
  for (int j = 1; j <= m; ++j) {
    const RationalFunction& f = lower[m - j];
    RatPolynomial cofactor = exact_div(D, to_rational(f.denominator()));
    ExactRational w(m + 1, static_cast<long>(j) * (j + 1));
    w.canonicalize();
    acc += (to_rational(f.numerator()) * cofactor) * w;
  }
  return acc;
}

}  // namespace

RationalFunction recurrence_F_next(std::span<const RationalFunction> lower, int m) {
  require_nonnegative(m, "m");
  if (static_cast<int>(lower.size()) < m) throw std::invalid_argument("recurrence_F_next: missing lower terms");
  RatPolynomial D = m == 0 ? RatPolynomial::constant(1) : pole_product(m - 1);
  ExactRational lead(1, m + 1);
  RatPolynomial num = D * lead + weighted_history_numerator(lower, m, D);
  RatPolynomial den = D * RatPolynomial::linear(ExactRational(m - 1), ExactRational(1));
  return RationalFunction(num, den);
}

bool verify_recurrence_G(std::span<const RationalFunction> G, int m) {
  if (m < 1) throw std::invalid_argument("verify_recurrence_G requires m >= 1");
  if (static_cast<int>(G.size()) <= m) throw std::invalid_argument("verify_recurrence_G: need G_0..G_m");
  RatPolynomial D = pole_product(m - 1);
  RationalFunction rhs(weighted_history_numerator(G, m, D), D);
  RationalFunction lhs = G[m] * RationalFunction::polynomial(RatPolynomial::linear(ExactRational(m - 1), ExactRational(1)));
  return lhs == rhs;
}

bool verify_recurrence_G(int m) {
  std::vector<RationalFunction> G;
  for (int k = 0; k <= m; ++k) G.push_back(build_G(k));
  return verify_recurrence_G(G, m);
}

ExactRational limit_sF_at_infinity(int m) { return build_F(m).limit_s_times_at_infinity(); }

ExactRational euler_gamma_approx(int m) {
  if (m < 1) throw std::invalid_argument("euler_gamma_approx requires m >= 1");
  auto a = stirling_coeffs(m);
  auto B = bernoulli_table(m);
  ExactRational v(0);
  for (int j = 1; j <= m; ++j) {
    v += a[j] * B[j] / j;
    if (j % 2) v += a[j] / j;
    else v -= a[j] / j;
  }
  return v;
}

RatPolynomial full_numerator_F(int m) { return full_numerator(build_F(m), m); }

RatPolynomial full_numerator(const RationalFunction& F, int m) {
  RatPolynomial cofactor = exact_div(pole_product(m), to_rational(F.denominator()));
  return to_rational(F.numerator()) * cofactor;
}

}  // namespace zetaseq
