#pragma once

#include <cstdint>
#include <vector>

#include "zetaseq/hp.hpp"
#include "zetaseq/polynomial.hpp"

namespace zetaseq {

/// Dense matrix of exact rationals, row-major.
class RationalMatrix {
 public:
  RationalMatrix(int rows, int cols);
  static RationalMatrix identity(int n);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  ExactRational& operator()(int i, int j) { return e_[static_cast<std::size_t>(i) * cols_ + j]; }
  const ExactRational& operator()(int i, int j) const { return e_[static_cast<std::size_t>(i) * cols_ + j]; }

  RationalMatrix transpose() const;
  std::vector<ExactRational> apply(const std::vector<ExactRational>& v) const;

  friend RationalMatrix operator+(const RationalMatrix& a, const RationalMatrix& b);
  friend RationalMatrix operator-(const RationalMatrix& a, const RationalMatrix& b);
  friend RationalMatrix operator*(const RationalMatrix& a, const RationalMatrix& b);
  friend RationalMatrix operator*(const ExactRational& k, const RationalMatrix& a);
  friend bool operator==(const RationalMatrix& a, const RationalMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.e_ == b.e_;
  }

 private:
  int rows_;
  int cols_;
  std::vector<ExactRational> e_;
};

/// (m+1)x(m+1) lower Toeplitz, entry 1/(i-j+1) for i >= j (0-indexed).
RationalMatrix build_L(int m);
/// (m+1)x(m+1), entry 1/j strictly above the diagonal in column j (0-indexed).
RationalMatrix build_U(int m);
/// m x m lower triangular, diagonal j, entry -j/((i-j)(i-j+1)) below (1-indexed).
RationalMatrix build_T(int m);
/// m x m rank-one matrix (m+1) j / (i (i+1) (m-j+1)) (1-indexed).
RationalMatrix build_R(int m);
/// diag(1, 1/2, ..., 1/m).
RationalMatrix build_H(int m);

/// Exact rank over Q.
int rank(const RationalMatrix& A);
int rank_of_R(int m);

/// Exact determinant by Gaussian elimination.
ExactRational determinant(const RationalMatrix& A);

/// det(A + s B) as a polynomial in s, by fraction-free elimination over Q[s].
RatPolynomial det_pencil(const RationalMatrix& A, const RationalMatrix& B);

/// m! det(L_m + (1 - s) U_m).
RatPolynomial det_LU_form(int m);

/// det(T_m + R_m + (s - 1) I_m) / (m + 1); the constant 1 for m = 0.
RatPolynomial det_TR_form(int m);

struct DeterminantCheck {
  int m = 0;
  bool symbolic = false;    // full polynomial elimination, else point evaluation
  int points = 0;           // evaluation points used when not symbolic
  bool lu_matches = false;  // m! det(L + (1-s)U) equals the full numerator of F_m
  bool tr_matches = false;  // det(T + R + (s-1)I)/(m+1) equals it too
  bool passed() const { return lu_matches && tr_matches; }
};

/// Compares both determinant forms against the full numerator of F_m:
/// symbolically when m <= symbolic_limit, otherwise by exact evaluation at
/// 2m+3 points followed by interpolation.
DeterminantCheck verify_determinant_forms(int m, int symbolic_limit = 12);

/// Same comparison against a caller-supplied degree-m target polynomial.
DeterminantCheck verify_determinant_forms_against(int m, const RatPolynomial& target, int symbolic_limit = 12);

struct TrivialZeroReport {
  int m = 0;
  std::vector<int> expected;  // r with 2r+1 <= m
  std::vector<int> found;     // r with (s + 2r) dividing the full numerator, 1 <= r <= m
  bool passed() const { return expected == found; }
};

TrivialZeroReport verify_trivial_zero_factors(int m);
/// Same report for a caller-supplied numerator.
TrivialZeroReport trivial_zero_factors_of(int m, const RatPolynomial& N);

/// L_m acts as truncated multiplication by sum_{i<=m} x^i/(i+1); U_m sends
/// x^k to (1 + ... + x^{k-1})/k and constants to 0. Random integer
/// polynomials are drawn from the seed.
bool operator_action_checks(int m, std::uint64_t seed = 0, int trials = 5);

/// T_m H + H T_m^T - H.
RationalMatrix h_form(int m);

struct HFormReport {
  int m = 0;
  bool off_diagonal_nonpositive = false;
  bool row_sums_positive = false;
  bool leading_minors_positive = false;
  bool passed() const { return off_diagonal_nonpositive && row_sums_positive && leading_minors_positive; }
};

HFormReport check_h_form(int m);
bool verify_h_form_positive_definite(int m);

/// Reports for m = 1..m_max from a single elimination: h_form(m) is the
/// leading m x m block of h_form(m_max), which is checked entry by entry.
std::vector<HFormReport> check_h_forms_up_to(int m_max);

/// Leading principal minors of a symmetric rational matrix, exact.
std::vector<ExactRational> leading_minors(const RationalMatrix& A);

/// z = s/(s-1); throws PoleError at s = 1.
hp::Complex s_to_z(const hp::Complex& s);
/// s = z/(z-1); throws PoleError at z = 1.
hp::Complex z_to_s(const hp::Complex& z);

/// I + L_m^{-1} U_m, exact.
RationalMatrix build_ILU(int m);

struct SpectrumEntry {
  hp::Complex value;
  hp::Real residual;
};

struct SpectrumReport {
  int m = 0;
  long precision_bits = 0;
  std::vector<SpectrumEntry> eigenvalues;  // decreasing modulus
  hp::Real spectral_radius;
  hp::Real epsilon_m;  // max(0, rho - 1)
  /// Every residual below 2^{-precision_bits/2}.
  bool certified() const;
};

SpectrumReport spectral_radius_ILU(int m, long precision_bits = 128);

}  // namespace zetaseq
