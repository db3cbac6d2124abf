#include "zetaseq/divided_differences.hpp"

#include <algorithm>
#include <stdexcept>

#include "zetaseq/exact_core.hpp"
#include "zetaseq/parallel.hpp"

namespace zetaseq {

namespace {

BigInt binomial(unsigned long n, unsigned long k) {
  BigInt r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

ExactRational canon(long n, long d) {
  ExactRational r(n, d);
  r.canonicalize();
  return r;
}

// Alternating binomial sum over values[0..k].
ExactRational alternating_sum(int k, const std::vector<ExactRational>& values) {
  ExactRational acc(0);
  for (int r = 0; r <= k; ++r) {
    ExactRational t = ExactRational(binomial(k, r)) * values[r];
    if (r % 2) acc -= t;
    else acc += t;
  }
  return acc;
}

RatPolynomial monic(const RatPolynomial& p) {
  if (p.is_zero()) return p;
  ExactRational inv = 1 / p.leading();
  return p * inv;
}

RatPolynomial gcd_q(RatPolynomial a, RatPolynomial b) {
  while (!b.is_zero()) {
    RatPolynomial r = divmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return monic(a);
}

int sign_of(const ExactRational& v) { return sgn(v); }

// Sign variations of the Sturm chain at x.
int variations(const std::vector<RatPolynomial>& chain, const ExactRational& x) {
  int count = 0, last = 0;
  for (const auto& p : chain) {
    int s = sign_of(p.eval(x));
    if (s == 0) continue;
    if (last != 0 && s != last) ++count;
    last = s;
  }
  return count;
}

}  // namespace

ExactRational eval_p(int m, const ExactRational& x) {
  if (m < 0) throw std::invalid_argument("eval_p: m must be non-negative");
  ExactRational v(1);
  for (int i = 1; i <= m; ++i) {
    v *= 1 - x / i;
    if (v == 0) break;
  }
  return v;
}

std::vector<ExactRational> delta_row(int m, const ExactRational& x) {
  std::vector<ExactRational> pv(m + 1);
  for (int r = 0; r <= m; ++r) pv[r] = eval_p(m, ExactRational((r + 1) * x));
  std::vector<ExactRational> row(m + 1);
  for (int k = 0; k <= m; ++k) row[k] = alternating_sum(k, pv);
  return row;
}

ExactRational delta(int m, int k, const ExactRational& x) {
  if (k < 0 || k > m) return ExactRational(0);
  std::vector<ExactRational> pv(k + 1);
  for (int r = 0; r <= k; ++r) pv[r] = eval_p(m, ExactRational((r + 1) * x));
  return alternating_sum(k, pv);
}

RatPolynomial delta_polynomial(int m, int k) {
  if (k < 0 || k > m) return {};
  RatPolynomial p = p_polynomial(m);
  std::vector<ExactRational> c(p.size());
  for (std::size_t j = 0; j < p.size(); ++j) {
    BigInt moment = 0;
    for (int r = 0; r <= k; ++r) {
      BigInt pw;
      mpz_ui_pow_ui(pw.get_mpz_t(), static_cast<unsigned long>(r + 1), j);
      BigInt t = binomial(k, r) * pw;
      if (r % 2) moment -= t;
      else moment += t;
    }
    c[j] = p.coeffs()[j] * ExactRational(moment);
  }
  return RatPolynomial(std::move(c));
}

ExactRational eval_P(int m, const ExactRational& v, const ExactRational& x) {
  ExactRational r(1);
  for (int i = 1; i <= m; ++i) r *= v + i - x;
  return r;
}

ExactRational delta_tilde(int m, int k, const ExactRational& v, const ExactRational& x) {
  if (k < 0 || k > m) return ExactRational(0);
  std::vector<ExactRational> pv(k + 1);
  for (int r = 0; r <= k; ++r) pv[r] = eval_P(m, v, ExactRational((r + 1) * x));
  return alternating_sum(k, pv);
}

bool verify_tilde_recurrence(int m, int k, const ExactRational& v, const ExactRational& x) {
  if (m < 1) throw std::invalid_argument("verify_tilde_recurrence requires m >= 1");
  ExactRational lhs = delta_tilde(m, k, v, x);
  ExactRational rhs = (v + 1 - x) * delta_tilde(m - 1, k, v + 1, x) +
                      k * x * delta_tilde(m - 1, k - 1, v + 1 - x, x);
  return lhs == rhs;
}

bool verify_partition_of_unity(int m) {
  RatPolynomial sum;
  for (int k = 0; k <= m; ++k) sum += delta_polynomial(m, k);
  return sum == RatPolynomial::constant(ExactRational(1));
}

bool verify_falling_sum(int m, int j) {
  if (m < 0 || j < 0) throw std::invalid_argument("verify_falling_sum: negative argument");
  RatPolynomial lhs;
  for (int k = 0; k <= m; ++k) {
    BigInt rising = 1;
    for (int i = 1; i <= j; ++i) rising *= k + i;
    lhs += delta_polynomial(m, k) * ExactRational(rising);
  }
  BigInt jf;
  mpz_fac_ui(jf.get_mpz_t(), static_cast<unsigned long>(j));
  RatPolynomial rhs = p_polynomial(m).scale_argument(ExactRational(-j)) * ExactRational(jf);
  return lhs == rhs;
}

ExactRational kernel_f_tilde(int m, int p, const ExactRational& x) {
  if (m < 0 || p < 0) throw std::invalid_argument("kernel_f_tilde: negative argument");
  auto row = delta_row(m, x);
  ExactRational acc(0);
  for (int k = 0; k <= m; ++k) acc += row[k] / (k + 1 + p);
  return acc;
}

ExactRational kernel_f(int m, const ExactRational& x) { return kernel_f_tilde(m, 0, x); }

RatPolynomial kernel_f_polynomial(int m) {
  auto a = stirling_coeffs(m);
  auto B = bernoulli_table(m);
  std::vector<ExactRational> c(a.size());
  for (std::size_t j = 0; j < a.size(); ++j) c[j] = a[j] * B[j];
  return RatPolynomial(std::move(c));
}

bool verify_pest_recurrence(int m, int p, const ExactRational& x) {
  if (m < 1 || p < 0) throw std::invalid_argument("verify_pest_recurrence requires m >= 1, p >= 0");
  ExactRational prev = kernel_f_tilde(m - 1, p, x);
  ExactRational prev1 = kernel_f_tilde(m - 1, p + 1, x);
  ExactRational rhs = prev + (p * x / m) * prev - ((p + 1) * x / m) * prev1;
  return kernel_f_tilde(m, p, x) == rhs;
}

bool verify_domination(int m, const ExactRational& x) {
  if (m < 1) throw std::invalid_argument("verify_domination requires m >= 1");
  return kernel_f(m, x) <= kernel_f(m - 1, x) * (1 - x / (2 * m));
}

std::string to_string(CellFlag f) {
  switch (f) {
    case CellFlag::ok: return "ok";
    case CellFlag::negative: return "negative";
    case CellFlag::inconclusive: return "inconclusive";
    case CellFlag::fail: return "fail";
  }
  return "?";
}

std::vector<ExactRational> unit_grid(int D) {
  if (D <= 0) throw std::invalid_argument("grid denominator must be positive");
  std::vector<ExactRational> g;
  for (int i = 0; i <= D; ++i) g.push_back(canon(i, D));
  return g;
}

PositivityReport positivity_scan(int m, int D, const PositivityOptions& opts) {
  if (m < 0) throw std::invalid_argument("positivity_scan: m must be non-negative");
  PositivityReport rep;
  rep.m = m;
  rep.grid_denominator = D;
  bool have_min = false;
  const auto grid = unit_grid(D);
  const auto rows = parallel_map<std::vector<ExactRational>>(grid.size(), [&](std::size_t i) { return delta_row(m, grid[i]); });
  // scan x-major; the minimum is the first smallest cell in this order
  for (std::size_t i = 0; i < grid.size(); ++i) {
    for (int k = 0; k <= m; ++k) {
      DeltaCell cell{m, k, grid[i], ExactRational(0), rows[i][k], CellFlag::ok};
      ++rep.cells_checked;
      if (cell.value < 0) {
        cell.flag = CellFlag::negative;
        rep.violations.push_back(cell);
      }
      if (!have_min || cell.value < rep.minimum.value) {
        rep.minimum = cell;
        have_min = true;
      }
      if (opts.keep_cells) rep.cells.push_back(cell);
    }
  }
  std::stable_sort(rep.violations.begin(), rep.violations.end(),
                   [](const DeltaCell& a, const DeltaCell& b) { return a.k < b.k; });
  if (opts.scan_tilde) {
    const int vd = opts.v_denominator;
    for (int k = 0; k <= m; ++k)
      for (int iv = 0; iv <= 2 * vd; ++iv)
        for (const auto& x : grid) {
          ExactRational v = canon(iv, vd);
          ExactRational val = delta_tilde(m, k, v, x);
          ++rep.tilde_cells_checked;
          if (val < 0) rep.tilde_violations.push_back({m, k, x, v, val, CellFlag::negative});
        }
  }
  return rep;
}

int count_roots_open(const RatPolynomial& p0, const ExactRational& a, const ExactRational& b) {
  if (p0.is_zero()) throw std::invalid_argument("count_roots_open: zero polynomial");
  RatPolynomial p = p0;
  for (const auto& e : {a, b}) {
    RatPolynomial lin = RatPolynomial::linear(-e, ExactRational(1));
    while (p.degree() > 0 && p.eval(e) == 0) p = exact_div(p, lin);
  }
  if (p.degree() <= 0) return 0;
  std::vector<RatPolynomial> chain{p, p.derivative()};
  while (true) {
    RatPolynomial r = divmod(chain[chain.size() - 2], chain.back()).second;
    if (r.is_zero()) break;
    chain.push_back(-r);
  }
  return variations(chain, a) - variations(chain, b);
}

std::vector<RatPolynomial> squarefree_factors(const RatPolynomial& f) {
  std::vector<RatPolynomial> out;
  if (f.degree() <= 0) return out;
  RatPolynomial fp = f.derivative();
  RatPolynomial a0 = gcd_q(f, fp);
  RatPolynomial b = exact_div(f, a0);
  RatPolynomial c = exact_div(fp, a0);
  RatPolynomial d = c - b.derivative();
  while (b.degree() > 0) {
    RatPolynomial ai = gcd_q(b, d);
    out.push_back(ai);
    b = exact_div(b, ai);
    c = exact_div(d, ai);
    d = c - b.derivative();
  }
  return out;
}

SturmCertificate sturm_certify_delta(int m, int k) {
  SturmCertificate cert;
  cert.m = m;
  cert.k = k;
  RatPolynomial P = delta_polynomial(m, k);
  cert.degree = P.degree();
  if (P.is_zero()) return cert;
  auto factors = squarefree_factors(P);
  RatPolynomial odd = RatPolynomial::constant(ExactRational(1));
  RatPolynomial all = RatPolynomial::constant(ExactRational(1));
  for (std::size_t i = 0; i < factors.size(); ++i) {
    all = all * factors[i];
    if (i % 2 == 0) odd = odd * factors[i];  // multiplicity i+1 is odd
  }
  const ExactRational zero(0), one(1);
  cert.sign_changes = odd.degree() > 0 ? count_roots_open(odd, zero, one) : 0;
  cert.distinct_roots = all.degree() > 0 ? count_roots_open(all, zero, one) : 0;
  for (int den = 2; den < 64 && cert.interior_sign == 0; ++den)
    for (int num = 1; num < den && cert.interior_sign == 0; ++num)
      cert.interior_sign = sign_of(P.eval(canon(num, den)));
  return cert;
}

// ---- envelope ----

std::string to_string(BoundKind k) {
  switch (k) {
    case BoundKind::f_envelope: return "f_envelope";
    case BoundKind::delta_growth: return "delta_growth";
    case BoundKind::tail_growth: return "tail_growth";
  }
  return "?";
}

bool EnvelopeReport::passed() const {
  for (const auto& c : checks)
    if (c.flag != CellFlag::ok) return false;
  return true;
}

bool EnvelopeReport::inconclusive() const {
  for (const auto& c : checks)
    if (c.flag == CellFlag::inconclusive) return true;
  return false;
}

namespace {

// Classifies lhs <= [lo, hi] and fills the rounded-down margin.
void settle(BoundCheck& c, long prec) {
  hp::Real lhs_up(c.lhs, prec, MPFR_RNDU);
  hp::Real lhs_dn(c.lhs, prec, MPFR_RNDD);
  c.margin = hp::Real(prec);
  mpfr_sub(c.margin.get(), c.rhs_lo.get(), lhs_up.get(), MPFR_RNDD);
  if (lhs_up <= c.rhs_lo) c.flag = CellFlag::ok;
  else if (lhs_dn > c.rhs_hi) c.flag = CellFlag::fail;
  else c.flag = CellFlag::inconclusive;
}

}  // namespace

EnvelopeReport envelope_check(int m, const std::vector<ExactRational>& x_grid, long precision_bits) {
  if (m < 0) throw std::invalid_argument("envelope_check: m must be non-negative");
  EnvelopeReport rep;
  rep.m = m;
  rep.precision_bits = precision_bits;
  const long prec = precision_bits;
  const ExactRational h = harmonic(m);
  for (const auto& x : x_grid) {
    if (x < 0 || x > 1) throw std::invalid_argument("envelope_check: grid point outside [0,1]");
    auto row = delta_row(m, x);
    ExactRational f(0);
    for (int k = 0; k <= m; ++k) f += row[k] / (k + 1);

    {
      BoundCheck c;
      c.kind = BoundKind::f_envelope;
      c.m = m;
      c.x = x;
      c.lhs = f;
      ExactRational e = -h * x / 2;
      c.rhs_lo = hp::exp_directed(e, prec, MPFR_RNDD);
      c.rhs_hi = hp::exp_directed(e, prec, MPFR_RNDU);
      settle(c, prec);
      rep.checks.push_back(std::move(c));
    }

    ExactRational hx = h * x;
    hp::Real grow_lo = hp::exp_directed(hx, prec, MPFR_RNDD);
    hp::Real grow_hi = hp::exp_directed(hx, prec, MPFR_RNDU);
    for (int k = 0; k <= m; ++k) {
      BoundCheck c;
      c.kind = BoundKind::delta_growth;
      c.m = m;
      c.k = k;
      c.x = x;
      c.lhs = row[k];
      c.rhs_lo = hp::Real(prec);
      c.rhs_hi = hp::Real(prec);
      mpfr_div_si(c.rhs_lo.get(), grow_lo.get(), k + 1, MPFR_RNDD);
      mpfr_div_si(c.rhs_hi.get(), grow_hi.get(), k + 1, MPFR_RNDU);
      settle(c, prec);
      rep.checks.push_back(std::move(c));
    }

    if (m >= 1) {
      BoundCheck c;
      c.kind = BoundKind::tail_growth;
      c.m = m;
      c.x = x;
      c.lhs = f - eval_p(m, x);
      c.rhs_lo = hp::Real(prec);
      c.rhs_hi = hp::Real(prec);
      mpfr_sub_ui(c.rhs_lo.get(), grow_lo.get(), 1, MPFR_RNDD);
      mpfr_sub_ui(c.rhs_hi.get(), grow_hi.get(), 1, MPFR_RNDU);
      settle(c, prec);
      rep.checks.push_back(std::move(c));
    }
  }
  return rep;
}

}  // namespace zetaseq
