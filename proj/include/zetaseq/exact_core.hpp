#pragma once

#include <optional>
#include <span>
#include <vector>

#include "zetaseq/polynomial.hpp"
#include "zetaseq/rational_function.hpp"

namespace zetaseq {

/// Coefficients a_{m,0..m} of p_m(t) = prod_{i=1}^m (1 - t/i) = sum (-1)^j a_{m,j} t^j.
/// All entries are positive and a_{m,0} = 1.
std::vector<ExactRational> stirling_coeffs(int m);

/// p_m as a polynomial in t.
RatPolynomial p_polynomial(int m);

/// h_m = 1 + 1/2 + ... + 1/m, h_0 = 0.
ExactRational harmonic(int m);

/// B_j from the alternating double sum
/// B_j = (-1)^j sum_{k<=j} 1/(k+1) sum_{r<=k} C(k,r) (-1)^r (r+1)^j.
ExactRational bernoulli_kronecker(int j);

/// B_j from sum_{k=0}^{n} C(n+1,k) B_k = 0, B_0 = 1 (so B_1 = -1/2).
ExactRational bernoulli_recurrence(int j);

/// B_0..B_n, memoized, recurrence route.
std::vector<ExactRational> bernoulli_table(int n);

/// F_m(s) = sum_j a_{m,j} B_j / (s + j - 1).
RationalFunction build_F(int m);
RationalFunction build_F_from(std::span<const ExactRational> a);

/// G_m(s) = sum_j (-1)^j a_{m,j} / (s + j - 1).
RationalFunction build_G(int m);
RationalFunction build_G_from(std::span<const ExactRational> a);

struct ApproximantRecord {
  int m = 0;
  RationalFunction F;
  RationalFunction G;
  RationalFunction ratio;  // F / ((s - 1) G)
  ExactRational h_m;
};

ApproximantRecord build_ratio(int m);

/// Record built from caller-supplied coefficients in place of a_{m,.}.
ApproximantRecord build_record_from(int m, std::span<const ExactRational> a);

inline ExactRational eval_rational(const RationalFunction& f, const ExactRational& s) { return f.eval(s); }

/// zeta(-n) = (-1)^n B_{n+1} / (n + 1).
ExactRational zeta_at_nonpositive_int(int n);

/// Smallest r in 1..m with ratio(1 - r) != zeta(1 - r), if any.
std::optional<int> interpolation_failure(const ApproximantRecord& rec);

bool verify_interpolation(int m);

/// Residue at s = 1; throws DomainError unless s = 1 is a simple pole.
ExactRational residue_at_one(const RationalFunction& f);

/// F_m from (s + m - 1) F_m = 1/(m+1) + (m+1) sum_{j=1}^m F_{m-j} / (j(j+1)).
/// lower holds F_0..F_{m-1}; m = 0 gives 1/(s - 1).
RationalFunction recurrence_F_next(std::span<const RationalFunction> lower, int m);

/// (s + m - 1) G_m == (m+1) sum_{j=1}^m G_{m-j} / (j(j+1)), given G_0..G_m.
bool verify_recurrence_G(std::span<const RationalFunction> G, int m);
bool verify_recurrence_G(int m);

/// lim_{s -> inf} s F_m(s).
ExactRational limit_sF_at_infinity(int m);

/// Constant term of the Laurent expansion of the m-th ratio at s = 1.
ExactRational euler_gamma_approx(int m);

/// prod_{j=0}^m (s + j - 1), the full pole product of F_m.
RatPolynomial pole_product(int m);

/// F_m(s) * prod_{j=0}^m (s + j - 1): the numerator of F_m over its
/// uncancelled denominator. Degree m; carries the trivial-zero factors.
RatPolynomial full_numerator_F(int m);

/// F * prod_{j=0}^m (s + j - 1) for any F whose poles lie in {1, 0, ..., 1-m}.
RatPolynomial full_numerator(const RationalFunction& F, int m);

}  // namespace zetaseq
