#include "zetaseq/spectral_forms.hpp"

#include <random>
#include <stdexcept>

#include "zetaseq/eigen.hpp"
#include "zetaseq/errors.hpp"
#include "zetaseq/exact_core.hpp"

namespace zetaseq {

namespace {

ExactRational frac(long n, long d) {
  ExactRational r(n, d);
  r.canonicalize();
  return r;
}

void require_shape(const RationalMatrix& a, const RationalMatrix& b, const char* op) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw std::invalid_argument(std::string("matrix shape mismatch in ") + op);
}

void require_square(const RationalMatrix& a, const char* op) {
  if (a.rows() != a.cols()) throw std::invalid_argument(std::string(op) + ": matrix is not square");
}

BigInt factorial(int n) {
  BigInt r;
  mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
  return r;
}

}  // namespace

RationalMatrix::RationalMatrix(int rows, int cols)
    : rows_(rows), cols_(cols), e_(static_cast<std::size_t>(rows) * cols, ExactRational(0)) {
  if (rows < 0 || cols < 0) throw std::invalid_argument("negative matrix dimension");
}

RationalMatrix RationalMatrix::identity(int n) {
  RationalMatrix I(n, n);
  for (int i = 0; i < n; ++i) I(i, i) = 1;
  return I;
}

RationalMatrix RationalMatrix::transpose() const {
  RationalMatrix t(cols_, rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

std::vector<ExactRational> RationalMatrix::apply(const std::vector<ExactRational>& v) const {
  if (static_cast<int>(v.size()) != cols_) throw std::invalid_argument("apply: vector length mismatch");
  std::vector<ExactRational> out(rows_, ExactRational(0));
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j)
      if ((*this)(i, j) != 0) out[i] += (*this)(i, j) * v[j];
  return out;
}

RationalMatrix operator+(const RationalMatrix& a, const RationalMatrix& b) {
  require_shape(a, b, "+");
  RationalMatrix r = a;
  for (std::size_t i = 0; i < r.e_.size(); ++i) r.e_[i] += b.e_[i];
  return r;
}

RationalMatrix operator-(const RationalMatrix& a, const RationalMatrix& b) {
  require_shape(a, b, "-");
  RationalMatrix r = a;
  for (std::size_t i = 0; i < r.e_.size(); ++i) r.e_[i] -= b.e_[i];
  return r;
}

RationalMatrix operator*(const RationalMatrix& a, const RationalMatrix& b) {
  if (a.cols_ != b.rows_) throw std::invalid_argument("matrix shape mismatch in *");
  RationalMatrix r(a.rows_, b.cols_);
  for (int i = 0; i < a.rows_; ++i)
    for (int k = 0; k < a.cols_; ++k) {
      const ExactRational& aik = a(i, k);
      if (aik == 0) continue;
      for (int j = 0; j < b.cols_; ++j) r(i, j) += aik * b(k, j);
    }
  return r;
}

RationalMatrix operator*(const ExactRational& k, const RationalMatrix& a) {
  RationalMatrix r = a;
  for (auto& e : r.e_) e *= k;
  return r;
}

// ---- builders ----

RationalMatrix build_L(int m) {
  if (m < 0) throw std::invalid_argument("build_L requires m >= 0");
  RationalMatrix L(m + 1, m + 1);
  for (int i = 0; i <= m; ++i)
    for (int j = 0; j <= i; ++j) L(i, j) = frac(1, i - j + 1);
  return L;
}

RationalMatrix build_U(int m) {
  if (m < 0) throw std::invalid_argument("build_U requires m >= 0");
  RationalMatrix U(m + 1, m + 1);
  for (int j = 1; j <= m; ++j)
    for (int i = 0; i < j; ++i) U(i, j) = frac(1, j);
  return U;
}

RationalMatrix build_T(int m) {
  if (m < 1) throw std::invalid_argument("build_T requires m >= 1");
  RationalMatrix T(m, m);
  for (int i = 1; i <= m; ++i) {
    T(i - 1, i - 1) = i;
    for (int j = 1; j < i; ++j) T(i - 1, j - 1) = frac(-j, static_cast<long>(i - j) * (i - j + 1));
  }
  return T;
}

RationalMatrix build_R(int m) {
  if (m < 1) throw std::invalid_argument("build_R requires m >= 1");
  RationalMatrix R(m, m);
  for (int i = 1; i <= m; ++i)
    for (int j = 1; j <= m; ++j)
      R(i - 1, j - 1) = frac(static_cast<long>(m + 1) * j, static_cast<long>(i) * (i + 1) * (m - j + 1));
  return R;
}

RationalMatrix build_H(int m) {
  if (m < 1) throw std::invalid_argument("build_H requires m >= 1");
  RationalMatrix H(m, m);
  for (int i = 1; i <= m; ++i) H(i - 1, i - 1) = frac(1, i);
  return H;
}

// ---- exact linear algebra ----

int rank(const RationalMatrix& A0) {
  RationalMatrix A = A0;
  int r = 0;
  for (int c = 0; c < A.cols() && r < A.rows(); ++c) {
    int piv = -1;
    for (int i = r; i < A.rows(); ++i)
      if (A(i, c) != 0) {
        piv = i;
        break;
      }
    if (piv < 0) continue;
    for (int j = 0; j < A.cols(); ++j) std::swap(A(r, j), A(piv, j));
    for (int i = r + 1; i < A.rows(); ++i) {
      if (A(i, c) == 0) continue;
      ExactRational f = A(i, c) / A(r, c);
      for (int j = c; j < A.cols(); ++j) A(i, j) -= f * A(r, j);
    }
    ++r;
  }
  return r;
}

int rank_of_R(int m) { return rank(build_R(m)); }

ExactRational determinant(const RationalMatrix& A0) {
  require_square(A0, "determinant");
  RationalMatrix A = A0;
  const int n = A.rows();
  ExactRational det(1);
  for (int k = 0; k < n; ++k) {
    int piv = -1;
    for (int i = k; i < n; ++i)
      if (A(i, k) != 0) {
        piv = i;
        break;
      }
    if (piv < 0) return ExactRational(0);
    if (piv != k) {
      for (int j = 0; j < n; ++j) std::swap(A(k, j), A(piv, j));
      det = -det;
    }
    det *= A(k, k);
    for (int i = k + 1; i < n; ++i) {
      if (A(i, k) == 0) continue;
      ExactRational f = A(i, k) / A(k, k);
      for (int j = k + 1; j < n; ++j) A(i, j) -= f * A(k, j);
    }
  }
  return det;
}

RatPolynomial det_pencil(const RationalMatrix& A, const RationalMatrix& B) {
  require_shape(A, B, "det_pencil");
  require_square(A, "det_pencil");
  const int n = A.rows();
  if (n == 0) return RatPolynomial::constant(ExactRational(1));
  std::vector<RatPolynomial> M(static_cast<std::size_t>(n) * n);
  auto at = [&](int i, int j) -> RatPolynomial& { return M[static_cast<std::size_t>(i) * n + j]; };
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) at(i, j) = RatPolynomial::linear(A(i, j), B(i, j));
  RatPolynomial prev = RatPolynomial::constant(ExactRational(1));
  bool negate = false;
  for (int k = 0; k + 1 < n; ++k) {
    if (at(k, k).is_zero()) {
      int piv = -1;
      for (int i = k + 1; i < n; ++i)
        if (!at(i, k).is_zero()) {
          piv = i;
          break;
        }
      if (piv < 0) return {};
      for (int j = 0; j < n; ++j) std::swap(at(k, j), at(piv, j));
      negate = !negate;
    }
    for (int i = k + 1; i < n; ++i)
      for (int j = k + 1; j < n; ++j) at(i, j) = exact_div(at(k, k) * at(i, j) - at(i, k) * at(k, j), prev);
    prev = at(k, k);
  }
  RatPolynomial det = at(n - 1, n - 1);
  return negate ? -det : det;
}

namespace {

RationalMatrix lu_base(int m) { return build_L(m) + build_U(m); }

RationalMatrix lu_slope(int m) { return ExactRational(-1) * build_U(m); }

RationalMatrix tr_base(int m) { return build_T(m) + build_R(m) - RationalMatrix::identity(m); }

}  // namespace

RatPolynomial det_LU_form(int m) {
  if (m < 0) throw std::invalid_argument("det_LU_form requires m >= 0");
  return det_pencil(lu_base(m), lu_slope(m)) * ExactRational(factorial(m));
}

RatPolynomial det_TR_form(int m) {
  if (m < 0) throw std::invalid_argument("det_TR_form requires m >= 0");
  if (m == 0) return RatPolynomial::constant(ExactRational(1));
  return det_pencil(tr_base(m), RationalMatrix::identity(m)) * frac(1, m + 1);
}

DeterminantCheck verify_determinant_forms(int m, int symbolic_limit) {
  if (m < 0) throw std::invalid_argument("verify_determinant_forms requires m >= 0");
  return verify_determinant_forms_against(m, full_numerator_F(m), symbolic_limit);
}

DeterminantCheck verify_determinant_forms_against(int m, const RatPolynomial& N, int symbolic_limit) {
  if (m < 0) throw std::invalid_argument("verify_determinant_forms requires m >= 0");
  DeterminantCheck c;
  c.m = m;
  if (m <= symbolic_limit) {
    c.symbolic = true;
    c.lu_matches = det_LU_form(m) == N;
    c.tr_matches = det_TR_form(m) == N;
    return c;
  }
  c.points = 2 * m + 3;
  const RationalMatrix A = lu_base(m), B = lu_slope(m);
  const RationalMatrix C = tr_base(m), I = RationalMatrix::identity(m);
  const ExactRational mf(factorial(m));
  const ExactRational inv(frac(1, m + 1));
  std::vector<ExactRational> xs, lu, tr;
  for (int i = 0; i < c.points; ++i) {
    ExactRational s = frac(2 * i - c.points, 2);
    xs.push_back(s);
    lu.push_back(mf * determinant(A + s * B));
    tr.push_back(inv * determinant(C + s * I));
  }
  // interpolants of degree <= 2m+2 through more points than either side's degree
  c.lu_matches = interpolate(xs, lu) == N;
  c.tr_matches = interpolate(xs, tr) == N;
  return c;
}

TrivialZeroReport verify_trivial_zero_factors(int m) {
  if (m < 0) throw std::invalid_argument("verify_trivial_zero_factors requires m >= 0");
  return trivial_zero_factors_of(m, full_numerator_F(m));
}

TrivialZeroReport trivial_zero_factors_of(int m, const RatPolynomial& N) {
  if (m < 0) throw std::invalid_argument("trivial_zero_factors_of requires m >= 0");
  TrivialZeroReport rep;
  rep.m = m;
  for (int r = 1; r <= m; ++r) {
    if (2 * r + 1 <= m) rep.expected.push_back(r);
    RatPolynomial factor = RatPolynomial::linear(ExactRational(2 * r), ExactRational(1));
    if (divmod(N, factor).second.is_zero()) rep.found.push_back(r);
  }
  return rep;
}

bool operator_action_checks(int m, std::uint64_t seed, int trials) {
  if (m < 1) throw std::invalid_argument("operator_action_checks requires m >= 1");
  const RationalMatrix L = build_L(m), U = build_U(m);
  std::vector<ExactRational> series(m + 1);
  for (int i = 0; i <= m; ++i) series[i] = frac(1, i + 1);
  const RatPolynomial S(series);
  std::mt19937_64 rng(seed);
  for (int t = 0; t < trials; ++t) {
    std::vector<ExactRational> a(m + 1);
    for (auto& c : a) c = static_cast<long>(rng() % 19) - 9;
    auto La = L.apply(a);
    RatPolynomial prod = S * RatPolynomial(a);
    for (int i = 0; i <= m; ++i)
      if (La[i] != prod.coeff(i)) return false;
  }
  for (int k = 0; k <= m; ++k) {
    std::vector<ExactRational> e(m + 1, ExactRational(0));
    e[k] = 1;
    auto Ue = U.apply(e);
    for (int i = 0; i <= m; ++i) {
      ExactRational want = (k >= 1 && i < k) ? frac(1, k) : ExactRational(0);
      if (Ue[i] != want) return false;
    }
  }
  return true;
}

RationalMatrix h_form(int m) {
  const RationalMatrix T = build_T(m), H = build_H(m);
  return T * H + H * T.transpose() - H;
}

std::vector<ExactRational> leading_minors(const RationalMatrix& A) {
  require_square(A, "leading_minors");
  const int n = A.rows();
  // integer Bareiss on a positively scaled copy; pivot k is the k-th minor
  BigInt scale = 1;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) mpz_lcm(scale.get_mpz_t(), scale.get_mpz_t(), A(i, j).get_den_mpz_t());
  std::vector<BigInt> M(static_cast<std::size_t>(n) * n);
  auto at = [&](int i, int j) -> BigInt& { return M[static_cast<std::size_t>(i) * n + j]; };
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      ExactRational v = A(i, j) * ExactRational(scale);
      at(i, j) = v.get_num();
    }
  std::vector<ExactRational> minors;
  BigInt prev = 1;
  BigInt scale_pow = 1;
  for (int k = 0; k < n; ++k) {
    scale_pow *= scale;
    minors.push_back(ExactRational(at(k, k)) / ExactRational(scale_pow));
    if (at(k, k) == 0) {
      // elimination cannot continue without pivoting; later minors unknown
      break;
    }
    for (int i = k + 1; i < n; ++i)
      for (int j = k + 1; j < n; ++j) {
        BigInt t = at(k, k) * at(i, j) - at(i, k) * at(k, j);
        mpz_divexact(at(i, j).get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
      }
    prev = at(k, k);
  }
  for (auto& q : minors) q.canonicalize();
  return minors;
}

namespace {

HFormReport h_form_pattern(int m, const RationalMatrix& A) {
  HFormReport rep;
  rep.m = m;
  rep.off_diagonal_nonpositive = true;
  rep.row_sums_positive = true;
  for (int i = 0; i < m; ++i) {
    ExactRational sum(0);
    for (int j = 0; j < m; ++j) {
      sum += A(i, j);
      if (i != j && A(i, j) > 0) rep.off_diagonal_nonpositive = false;
    }
    // telescoping: the row sum is exactly 1/(m - i) for 0-indexed row i
    if (sum <= 0 || sum != frac(1, m - i)) rep.row_sums_positive = false;
  }
  return rep;
}

}  // namespace

HFormReport check_h_form(int m) {
  const RationalMatrix A = h_form(m);
  HFormReport rep = h_form_pattern(m, A);
  auto minors = leading_minors(A);
  rep.leading_minors_positive = static_cast<int>(minors.size()) == m;
  for (const auto& d : minors)
    if (d <= 0) rep.leading_minors_positive = false;
  return rep;
}

bool verify_h_form_positive_definite(int m) { return check_h_form(m).passed(); }

std::vector<HFormReport> check_h_forms_up_to(int m_max) {
  std::vector<HFormReport> out;
  if (m_max < 1) return out;
  const RationalMatrix big = h_form(m_max);
  const auto minors = leading_minors(big);
  for (int m = 1; m <= m_max; ++m) {
    const RationalMatrix A = h_form(m);
    bool nested = true;
    for (int i = 0; i < m && nested; ++i)
      for (int j = 0; j < m; ++j)
        if (A(i, j) != big(i, j)) {
          nested = false;
          break;
        }
    HFormReport rep = h_form_pattern(m, A);
    rep.leading_minors_positive = nested && static_cast<int>(minors.size()) >= m;
    for (int k = 0; k < m && rep.leading_minors_positive; ++k)
      if (minors[k] <= 0) rep.leading_minors_positive = false;
    out.push_back(rep);
  }
  return out;
}

// ---- Möbius map ----

hp::Complex s_to_z(const hp::Complex& s) {
  hp::Complex d = s - hp::Complex(hp::Real(1L, s.prec()));
  if (d.is_zero()) throw PoleError("Möbius map has a pole at s = 1");
  return s / d;
}

hp::Complex z_to_s(const hp::Complex& z) {
  hp::Complex d = z - hp::Complex(hp::Real(1L, z.prec()));
  if (d.is_zero()) throw PoleError("inverse Möbius map has a pole at z = 1");
  return z / d;
}

// ---- spectra ----

RationalMatrix build_ILU(int m) {
  const RationalMatrix L = build_L(m), U = build_U(m);
  const int n = m + 1;
  // L has unit diagonal: forward substitution column by column
  RationalMatrix X(n, n);
  for (int c = 0; c < n; ++c)
    for (int i = 0; i < n; ++i) {
      ExactRational acc = U(i, c);
      for (int k = 0; k < i; ++k)
        if (L(i, k) != 0 && X(k, c) != 0) acc -= L(i, k) * X(k, c);
      X(i, c) = acc;
    }
  return RationalMatrix::identity(n) + X;
}

bool SpectrumReport::certified() const {
  const hp::Real bound = hp::exp2i(-precision_bits / 2, precision_bits);
  for (const auto& e : eigenvalues)
    if (!(e.residual < bound)) return false;
  return true;
}

SpectrumReport spectral_radius_ILU(int m, long precision_bits) {
  if (m < 0) throw std::invalid_argument("spectral_radius_ILU requires m >= 0");
  const hp::Bits P = precision_bits;
  const RationalMatrix M = build_ILU(m);
  ComplexMatrix A(m + 1, P);
  for (int i = 0; i <= m; ++i)
    for (int j = 0; j <= m; ++j) A(i, j) = hp::Complex(hp::Real(M(i, j), P));
  auto pairs = eigen_solve(A);
  SpectrumReport rep;
  rep.m = m;
  rep.precision_bits = precision_bits;
  rep.spectral_radius = hp::Real(0L, P);
  for (auto& p : pairs) {
    rep.spectral_radius = hp::max(rep.spectral_radius, abs(p.value));
    rep.eigenvalues.push_back({std::move(p.value), std::move(p.residual)});
  }
  rep.epsilon_m = hp::max(rep.spectral_radius - hp::Real(1L, P), hp::Real(0L, P));
  return rep;
}

}  // namespace zetaseq
