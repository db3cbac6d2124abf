#pragma once

#include <string>
#include <vector>

#include "zetaseq/hp.hpp"
#include "zetaseq/polynomial.hpp"

namespace zetaseq {

/// p_m(x) = (1 - x)(1 - x/2)...(1 - x/m).
ExactRational eval_p(int m, const ExactRational& x);

/// Delta_{m,k}(x) = sum_{r=0}^k C(k,r) (-1)^r p_m((r+1) x); zero for k < 0 or k > m.
ExactRational delta(int m, int k, const ExactRational& x);

/// Delta_{m,0..m}(x) sharing the p_m evaluations.
std::vector<ExactRational> delta_row(int m, const ExactRational& x);

/// Delta_{m,k} as a polynomial in x.
RatPolynomial delta_polynomial(int m, int k);

/// P_m(v, x) = (v + 1 - x)(v + 2 - x)...(v + m - x).
ExactRational eval_P(int m, const ExactRational& v, const ExactRational& x);

/// sum_{r=0}^k C(k,r) (-1)^r P_m(v, (r+1) x).
ExactRational delta_tilde(int m, int k, const ExactRational& v, const ExactRational& x);

/// Delta~_{m,k}(v,x) == (v+1-x) Delta~_{m-1,k}(v+1,x) + k x Delta~_{m-1,k-1}(v+1-x,x).
bool verify_tilde_recurrence(int m, int k, const ExactRational& v, const ExactRational& x);

/// sum_k Delta_{m,k} == 1 as polynomials.
bool verify_partition_of_unity(int m);

/// sum_k (k+1)...(k+j) Delta_{m,k}(x) == j! p_m(-j x) as polynomials.
bool verify_falling_sum(int m, int j);

/// f_m(x) = sum_k Delta_{m,k}(x) / (k+1).
ExactRational kernel_f(int m, const ExactRational& x);

/// f~_m(p, x) = sum_k Delta_{m,k}(x) / (k+1+p).
ExactRational kernel_f_tilde(int m, int p, const ExactRational& x);

/// f_m as a polynomial: sum_j a_{m,j} B_j x^j. Equal to the Delta sum by the
/// extended Kronecker identity; much cheaper to evaluate for large m.
RatPolynomial kernel_f_polynomial(int m);

/// f~_m(p,x) == f~_{m-1}(p,x) + (p x/m) f~_{m-1}(p,x) - ((p+1) x/m) f~_{m-1}(p+1,x).
bool verify_pest_recurrence(int m, int p, const ExactRational& x);

/// f_m(x) <= f_{m-1}(x) (1 - x/(2m)), exactly.
bool verify_domination(int m, const ExactRational& x);

// ---- positivity ----

enum class CellFlag { ok, negative, inconclusive, fail };

std::string to_string(CellFlag f);

/// One evaluated grid cell; v is meaningful only for Delta~ scans.
struct DeltaCell {
  int m = 0;
  int k = 0;
  ExactRational x;
  ExactRational v;
  ExactRational value;
  CellFlag flag = CellFlag::ok;
};

struct PositivityReport {
  int m = 0;
  int grid_denominator = 0;
  long cells_checked = 0;
  std::vector<DeltaCell> violations;  // negative values, ordered by (k, x)
  DeltaCell minimum;                  // first smallest value, scanning x then k
  std::vector<DeltaCell> cells;       // every cell in scan order, when requested
  long tilde_cells_checked = 0;
  std::vector<DeltaCell> tilde_violations;

  bool passed() const { return violations.empty() && tilde_violations.empty(); }
};

struct PositivityOptions {
  bool keep_cells = false;
  /// Also scan Delta~_{m,k}(v, x) for v = i/v_denominator in [0, 2].
  bool scan_tilde = false;
  int v_denominator = 4;
};

/// Exact scan of Delta_{m,k}(i/D) for 0 <= i <= D, 0 <= k <= m.
PositivityReport positivity_scan(int m, int grid_denominator, const PositivityOptions& opts = {});

/// Sturm-sequence certificate that Delta_{m,k} does not change sign on (0, 1).
struct SturmCertificate {
  int m = 0;
  int k = 0;
  int degree = 0;
  /// Distinct roots in (0,1) of odd multiplicity, i.e. sign changes.
  int sign_changes = 0;
  /// Distinct roots in (0,1) of any multiplicity.
  int distinct_roots = 0;
  /// Sign at x = 1/2 (or at a root-free point when 1/2 is a root).
  int interior_sign = 0;

  bool certified_nonnegative() const { return sign_changes == 0 && interior_sign >= 0; }
};

SturmCertificate sturm_certify_delta(int m, int k);

/// Number of distinct real roots of p in the open interval (a, b); p nonzero.
int count_roots_open(const RatPolynomial& p, const ExactRational& a, const ExactRational& b);

/// Square-free factorisation (Yun): p = c * prod_i f_i^i, returns f_1, f_2, ...
std::vector<RatPolynomial> squarefree_factors(const RatPolynomial& p);

// ---- envelope bounds ----

enum class BoundKind { f_envelope, delta_growth, tail_growth };

std::string to_string(BoundKind k);

/// lhs <= rhs with rhs transcendental; [rhs_lo, rhs_hi] encloses it.
struct BoundCheck {
  BoundKind kind = BoundKind::f_envelope;
  int m = 0;
  int k = -1;
  ExactRational x;  // point in [0,1] where f_m or Delta is evaluated
  ExactRational lhs;
  hp::Real rhs_lo;
  hp::Real rhs_hi;
  hp::Real margin;  // rhs_lo - lhs, rounded down
  CellFlag flag = CellFlag::ok;
};

struct EnvelopeReport {
  int m = 0;
  long precision_bits = 0;
  std::vector<BoundCheck> checks;
  bool passed() const;
  bool inconclusive() const;
};

/// Checks on each grid point x in [0,1]:
///   f_m(x) <= exp(-h_m x / 2),
///   Delta_{m,k}(x) <= exp(h_m x) / (k+1) for every k,
///   f_m(x) - p_m(x) <= exp(h_m x) - 1 (m >= 1).
/// The right sides are enclosed with directed rounding; a cell passes only
/// if the exact left side is below the rounded-down enclosure.
EnvelopeReport envelope_check(int m, const std::vector<ExactRational>& x_grid, long precision_bits = 128);

/// i/D for i = 0..D.
std::vector<ExactRational> unit_grid(int D);

}  // namespace zetaseq
