#pragma once

#include <string>
#include <vector>

#include "zetaseq/hp.hpp"
#include "zetaseq/polynomial.hpp"

namespace zetaseq {

using hp::HPComplex;

struct RootSolve {
  std::vector<HPComplex> roots;
  std::vector<hp::Real> residuals;  // backward error per root
  int iterations = 0;
  bool converged = false;
};

/// Simultaneous (Aberth-Ehrlich) iteration from a circle of radius
/// 1 + max |a_k / a_n|, then Newton polishing. Converged means every
/// backward residual is below 2^{-(precision_bits-24)}. Never throws on
/// non-convergence; see find_roots.
RootSolve solve_roots(const IntPolynomial& p, long precision_bits, int max_iterations = 500);

/// All complex roots with multiplicity; ConvergenceError if the iteration
/// cap is hit (the message carries the worst residual).
std::vector<HPComplex> find_roots(const IntPolynomial& p, long precision_bits);

/// |p(x)| / (||p||_1 max(1, |x|)^deg).
hp::Real backward_residual(const IntPolynomial& p, const HPComplex& x, long precision_bits);

enum class ZeroKind { trivial, nontrivial };
std::string to_string(ZeroKind k);

struct ZeroRecord {
  int m = 0;
  HPComplex s;
  HPComplex z;  // s / (s - 1)
  hp::Real modulus_z;
  ZeroKind kind = ZeroKind::nontrivial;
  hp::Real residual;  // zero for trivial zeros, which are exact
};

struct ZeroAtlas {
  int m = 0;
  long precision_bits = 0;
  std::vector<int> trivial_r;  // r with (s + 2r) removed
  IntPolynomial reduced;       // primitive numerator after trivial factors are removed
  bool squarefree = false;     // gcd(reduced, reduced') is constant
  bool residue_free = false;   // no (s + 2r) divides reduced
  std::vector<ZeroRecord> zeros;  // trivial by r, then nontrivial by (Re s, Im s)
};

/// Zeros of the degree-m full numerator of F_m; trivial factors are found by
/// exact division, the rest numerically.
ZeroAtlas classify_zeros(int m, long precision_bits = 128);

struct MaxRealPart {
  hp::Real value;
  /// max over nontrivial roots of deg * |p(x)/p'(x)|, a first-order bound
  /// on the distance to the true root.
  hp::Real error_bound;
};

/// Largest Re s over nontrivial zeros; DomainError if there are none.
MaxRealPart max_real_part(int m, long precision_bits = 128);

struct LeakageRow {
  int m = 0;
  hp::Real max_re;  // over nontrivial zeros; -inf when there are none
  hp::Real spectral_radius;
  hp::Real epsilon_m;
};

std::vector<LeakageRow> leakage_series(const std::vector<int>& m_list, long precision_bits = 128);

struct SpectralConsistency {
  int m = 0;
  hp::Real max_distance;  // largest distance in the matching
  hp::Real tolerance;
  bool matched() const { return max_distance <= tolerance; }
};

/// Matches {1} together with the Möbius images of all zeros against the
/// eigenvalues of I + L^{-1} U, greedily by distance. Tolerance 2^{-P/4}.
SpectralConsistency compare_with_spectrum(int m, long precision_bits = 128);

}  // namespace zetaseq
