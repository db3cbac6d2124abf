#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "zetaseq/analytic_eval.hpp"
#include "zetaseq/divided_differences.hpp"
#include "zetaseq/exact_core.hpp"
#include "zetaseq/spectral_forms.hpp"
#include "zetaseq/zero_atlas.hpp"

namespace zetaseq {

using Json = nlohmann::ordered_json;

/// Integers and floats are written as decimal strings; polynomial
/// coefficients ascend by degree.
std::string decimal(const BigInt& z);
std::string decimal(const hp::Real& x);
Json coefficients_json(const IntPolynomial& p);
Json rational_json(const ExactRational& q);

/// Quotes a CSV field when it contains a comma, quote or newline.
std::string csv_field(const std::string& s);
std::string csv_row(const std::vector<std::string>& fields);

Json approximant_json(const ApproximantRecord& r);
/// Long form: m, field, degree, value; h_m is a single row with degree 0.
std::string approximants_csv(const std::vector<ApproximantRecord>& rs);

Json positivity_json(const PositivityReport& r);
/// Columns m, k, x_num, x_den, value_num, value_den, flag. Rows are every
/// kept cell, or the violations when cells were not kept.
std::string positivity_csv(const std::vector<PositivityReport>& rs);

Json spectrum_json(const SpectrumReport& r);
/// Columns m, precision_bits, index, re, im, residual, spectral_radius, epsilon_m.
std::string spectra_csv(const std::vector<SpectrumReport>& rs);

Json zero_atlas_json(const ZeroAtlas& a);
/// Columns m, kind, s_re, s_im, z_re, z_im, z_abs, residual.
std::string zero_atlas_csv(const std::vector<ZeroAtlas>& as);

Json convergence_json(const std::vector<ConvergenceRow>& rows);
/// Columns m, s_re, s_im, approx_re, approx_im, ref_re, ref_im, abs_error.
std::string convergence_csv(const std::vector<ConvergenceRow>& rows);

Json kernel_gap_json(const std::vector<KernelGapReport>& rows);
/// Columns m, grid_points, sup, argmax, scale, ratio.
std::string kernel_gap_csv(const std::vector<KernelGapReport>& rows);

}  // namespace zetaseq
