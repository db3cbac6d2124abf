#pragma once

#include <vector>

#include "zetaseq/hp.hpp"

namespace zetaseq {

using hp::HPComplex;

/// zeta(s) for Re s > 0 from the accelerated alternating series, absolute
/// error below 2^{-(precision_bits-8)}. PoleError at s = 1, DomainError for
/// Re s <= 0, PrecisionError when 1 - 2^{1-s} is within 2^{-precision_bits/4}
/// of zero.
HPComplex reference_zeta(const HPComplex& s, long precision_bits);

/// Gamma(s) by Spouge's formula, reflected for Re s < 1/2. PoleError at
/// non-positive integers.
HPComplex reference_gamma(const HPComplex& s, long precision_bits);

/// (s - 1) Gamma(s) zeta(s); exactly 1 at s = 1.
HPComplex scaled_reference(const HPComplex& s, long precision_bits);

/// F_m(s) by the forward recurrence. For m <= 256 the value is compared with
/// the partial-fraction sum evaluated at raised precision and CrossCheckError
/// is thrown if they differ by more than 2^{-precision_bits/2} relatively.
/// PoleError within 2^{-precision_bits/4} of {1, 0, ..., 1-m}.
HPComplex eval_F_hp(int m, const HPComplex& s, long precision_bits);
HPComplex eval_G_hp(int m, const HPComplex& s, long precision_bits);
/// F_m / ((s - 1) G_m).
HPComplex eval_ratio_hp(int m, const HPComplex& s, long precision_bits);

/// sum_j a_{m,j} B_j / (s + j - 1) with the exact coefficients rounded at
/// the given precision. Independent of the recurrence.
HPComplex eval_F_partial_fractions(int m, const HPComplex& s, long precision_bits);

/// h_m^{s-1} (s - 1) F_m(s); exactly 1 at s = 1.
HPComplex scaled_F(int m, const HPComplex& s, long precision_bits);

struct ConvergenceRow {
  int m = 0;
  HPComplex s;
  HPComplex approx;
  HPComplex reference;
  hp::Real abs_error;
};

/// Rows of ratio_m(s) against zeta(s), ordered by s then m. Entries with
/// m > 128 are computed at no fewer than 192 bits.
std::vector<ConvergenceRow> convergence_table(const std::vector<HPComplex>& s_list, const std::vector<int>& m_list,
                                              long precision_bits);

/// Same layout for scaled_F(m, s) against (s - 1) Gamma(s) zeta(s).
std::vector<ConvergenceRow> scaled_convergence_table(const std::vector<HPComplex>& s_list,
                                                     const std::vector<int>& m_list, long precision_bits);

struct KernelGapReport {
  int m = 0;
  int grid_points = 0;
  hp::Real sup;     // max |f_m(x/h_m) - x/(e^x - 1)| over the grid
  hp::Real argmax;  // x in [0, h_m] where it is attained (first such point)
  hp::Real scale;   // h_m / m
  hp::Real ratio;   // sup / scale
};

/// Grid x = h_m i / grid_points, i = 0..grid_points; f_m evaluated exactly.
KernelGapReport kernel_gap(int m, int grid_points, long precision_bits);

}  // namespace zetaseq
