#include "zetaseq/zero_atlas.hpp"

#include <algorithm>
#include <stdexcept>

#include "zetaseq/errors.hpp"
#include "zetaseq/exact_core.hpp"
#include "zetaseq/parallel.hpp"
#include "zetaseq/spectral_forms.hpp"

namespace zetaseq {

using hp::Complex;
using hp::Real;

namespace {

struct Eval {
  Complex p;
  Complex dp;
};

Eval horner(const std::vector<Real>& c, const Complex& x) {
  const hp::Bits W = x.prec();
  Complex p(W), dp(W);
  for (std::size_t i = c.size(); i-- > 0;) {
    dp = dp * x + p;
    p = p * x + Complex(c[i]);
  }
  return {p, dp};
}

Real residual_of(const std::vector<Real>& c, const Real& norm1, const Complex& x) {
  const hp::Bits W = x.prec();
  Real ax = hp::max(abs(x), Real(1L, W));
  Real denom = norm1;
  for (std::size_t i = 1; i < c.size(); ++i) denom *= ax;
  return abs(horner(c, x).p) / denom;
}

}  // namespace

Real backward_residual(const IntPolynomial& p, const HPComplex& x, long precision_bits) {
  const hp::Bits W = precision_bits + 32;
  std::vector<Real> c;
  Real n1(0L, W);
  for (const auto& a : p.coeffs()) {
    c.emplace_back(a, W);
    n1 += abs(c.back());
  }
  return residual_of(c, n1, x.with_prec(W)).with_prec(precision_bits);
}

RootSolve solve_roots(const IntPolynomial& p, long precision_bits, int max_iterations) {
  if (p.is_zero()) throw std::invalid_argument("solve_roots: zero polynomial");
  const int n = p.degree();
  const long P = precision_bits;
  const hp::Bits W = P + 32;
  RootSolve out;
  if (n == 0) {
    out.converged = true;
    return out;
  }
  std::vector<Real> c;
  Real n1(0L, W);
  for (const auto& a : p.coeffs()) {
    c.emplace_back(a, W);
    n1 += abs(c.back());
  }
  Real radius(1L, W);
  {
    Real mx(0L, W);
    for (int k = 0; k < n; ++k) mx = hp::max(mx, abs(c[k] / c[n]));
    radius += mx;
  }
  std::vector<Complex> z;
  const Real two_pi = hp::pi(W) * 2L;
  for (int k = 0; k < n; ++k) {
    Real theta = two_pi * static_cast<long>(k) / static_cast<long>(n) + Real(0.4, W);
    z.emplace_back(radius * hp::cos(theta), radius * hp::sin(theta));
  }
  const Real target = hp::exp2i(-(P - 24) - 16, W);
  const Real step_floor = hp::exp2i(-(static_cast<long>(W) - 4), W);
  auto all_small = [&] {
    for (const auto& x : z)
      if (!(residual_of(c, n1, x) < target)) return false;
    return true;
  };
  int it = 0;
  while (it < max_iterations && !all_small()) {
    ++it;
    Real biggest(0L, W);
    for (int i = 0; i < n; ++i) {
      Eval e = horner(c, z[i]);
      if (e.p.is_zero()) continue;
      if (e.dp.is_zero()) e.dp = Complex(hp::exp2i(-static_cast<long>(W) / 2, W));
      Complex ratio = e.p / e.dp;
      Complex sum(W);
      for (int j = 0; j < n; ++j)
        if (j != i) sum += Complex(Real(1L, W)) / (z[i] - z[j]);
      Complex w = ratio / (Complex(Real(1L, W)) - ratio * sum);
      z[i] -= w;
      biggest = hp::max(biggest, abs(w) / hp::max(abs(z[i]), Real(1L, W)));
    }
    if (biggest < step_floor) break;
  }
  out.iterations = it;
  // Newton polishing, kept only where it helps
  for (auto& x : z)
    for (int k = 0; k < 2; ++k) {
      Eval e = horner(c, x);
      if (e.p.is_zero() || e.dp.is_zero()) break;
      Complex cand = x - e.p / e.dp;
      if (residual_of(c, n1, cand) < residual_of(c, n1, x)) x = cand;
      else break;
    }
  const Real accept = hp::exp2i(-(P - 24), W);
  out.converged = true;
  for (const auto& x : z) {
    Complex r = x.with_prec(P);
    Real res = residual_of(c, n1, r.with_prec(W));
    if (!(res < accept)) out.converged = false;
    out.roots.push_back(std::move(r));
    out.residuals.push_back(res.with_prec(P));
  }
  return out;
}

std::vector<HPComplex> find_roots(const IntPolynomial& p, long precision_bits) {
  RootSolve r = solve_roots(p, precision_bits);
  if (!r.converged) {
    Real worst(0L, precision_bits);
    for (const auto& x : r.residuals) worst = hp::max(worst, x);
    throw ConvergenceError("root finder hit its iteration cap (" + std::to_string(r.iterations) +
                           "); worst residual " + worst.to_string(6));
  }
  return r.roots;
}

std::string to_string(ZeroKind k) { return k == ZeroKind::trivial ? "trivial" : "nontrivial"; }

ZeroAtlas classify_zeros(int m, long precision_bits) {
  if (m < 1) throw std::invalid_argument("classify_zeros requires m >= 1");
  const long P = precision_bits;
  ZeroAtlas atlas;
  atlas.m = m;
  atlas.precision_bits = P;
  IntPolynomial N = primitive_part(clear_denominators(full_numerator_F(m)).second);
  for (int r = 1; r <= m; ++r) {
    IntPolynomial f = IntPolynomial::linear(BigInt(2 * r), BigInt(1));
    if (divmod(to_rational(N), to_rational(f)).second.is_zero()) {
      N = exact_div(N, f);
      atlas.trivial_r.push_back(r);
    }
  }
  atlas.residue_free = true;
  for (int r = 1; r <= m; ++r)
    if (divmod(to_rational(N), to_rational(IntPolynomial::linear(BigInt(2 * r), BigInt(1)))).second.is_zero())
      atlas.residue_free = false;
  atlas.reduced = N;
  atlas.squarefree = N.degree() <= 0 || gcd(N, N.derivative()).degree() == 0;

  const Real one(1L, P);
  for (int r : atlas.trivial_r) {
    ZeroRecord z;
    z.m = m;
    z.kind = ZeroKind::trivial;
    z.s = Complex(Real(static_cast<long>(-2 * r), P));
    z.z = s_to_z(z.s);
    z.modulus_z = abs(z.z);
    z.residual = Real(0L, P);
    atlas.zeros.push_back(std::move(z));
  }
  RootSolve rs = solve_roots(N, P);
  if (!rs.converged) throw ConvergenceError("zeros of the m = " + std::to_string(m) + " numerator did not converge");
  std::vector<ZeroRecord> nontrivial;
  for (std::size_t i = 0; i < rs.roots.size(); ++i) {
    ZeroRecord z;
    z.m = m;
    z.kind = ZeroKind::nontrivial;
    z.s = rs.roots[i];
    z.z = s_to_z(z.s);
    z.modulus_z = abs(z.z);
    z.residual = rs.residuals[i];
    nontrivial.push_back(std::move(z));
  }
  std::sort(nontrivial.begin(), nontrivial.end(), [](const ZeroRecord& a, const ZeroRecord& b) {
    if (!(a.s.re() == b.s.re())) return a.s.re() < b.s.re();
    return a.s.im() < b.s.im();
  });
  for (auto& z : nontrivial) atlas.zeros.push_back(std::move(z));
  return atlas;
}

MaxRealPart max_real_part(int m, long precision_bits) {
  const long P = precision_bits;
  ZeroAtlas atlas = classify_zeros(m, P);
  const hp::Bits W = P + 32;
  std::vector<Real> c;
  for (const auto& a : atlas.reduced.coeffs()) c.emplace_back(a, W);
  const long deg = atlas.reduced.degree();
  bool any = false;
  MaxRealPart out{Real(P), Real(0L, P)};
  for (const auto& z : atlas.zeros) {
    if (z.kind != ZeroKind::nontrivial) continue;
    if (!any || z.s.re() > out.value) out.value = z.s.re();
    any = true;
    Eval e = horner(c, z.s.with_prec(W));
    Real bound = e.dp.is_zero() ? Real(1L, P) : (abs(e.p / e.dp) * deg).with_prec(P);
    out.error_bound = hp::max(out.error_bound, bound);
  }
  if (!any) throw DomainError("no nontrivial zeros for m = " + std::to_string(m));
  return out;
}

std::vector<LeakageRow> leakage_series(const std::vector<int>& m_list, long precision_bits) {
  for (std::size_t i = 1; i < m_list.size(); ++i)
    if (m_list[i] <= m_list[i - 1]) throw std::invalid_argument("leakage_series: m list must be ascending");
  return parallel_map<LeakageRow>(m_list.size(), [&](std::size_t i) {
    const int m = m_list[i];
    LeakageRow row;
    row.m = m;
    ZeroAtlas atlas = classify_zeros(m, precision_bits);
    row.max_re = Real(precision_bits);
    mpfr_set_inf(row.max_re.get(), -1);
    for (const auto& z : atlas.zeros)
      if (z.kind == ZeroKind::nontrivial && z.s.re() > row.max_re) row.max_re = z.s.re();
    SpectrumReport spec = spectral_radius_ILU(m, precision_bits);
    row.spectral_radius = spec.spectral_radius;
    row.epsilon_m = spec.epsilon_m;
    return row;
  });
}

SpectralConsistency compare_with_spectrum(int m, long precision_bits) {
  const long P = precision_bits;
  SpectralConsistency out;
  out.m = m;
  out.tolerance = hp::exp2i(-P / 4, P);
  out.max_distance = Real(0L, P);
  std::vector<Complex> expected{Complex(Real(1L, P))};
  if (m >= 1)
    for (const auto& z : classify_zeros(m, P).zeros) expected.push_back(z.z);
  SpectrumReport spec = spectral_radius_ILU(m, P);
  std::vector<Complex> eig;
  for (const auto& e : spec.eigenvalues) eig.push_back(e.value);
  if (eig.size() != expected.size()) {
    mpfr_set_inf(out.max_distance.get(), 1);
    return out;
  }
  std::vector<bool> used(eig.size(), false);
  for (const auto& x : expected) {
    int best = -1;
    Real bd(P);
    for (std::size_t j = 0; j < eig.size(); ++j) {
      if (used[j]) continue;
      Real d = abs(eig[j] - x);
      if (best < 0 || d < bd) {
        best = static_cast<int>(j);
        bd = d;
      }
    }
    used[best] = true;
    out.max_distance = hp::max(out.max_distance, bd);
  }
  return out;
}

}  // namespace zetaseq
