#include "zetaseq/serialize.hpp"

namespace zetaseq {

std::string decimal(const BigInt& z) { return z.get_str(10); }

std::string decimal(const hp::Real& x) { return x.to_string(); }

Json coefficients_json(const IntPolynomial& p) {
  Json a = Json::array();
  for (const auto& c : p.coeffs()) a.push_back(decimal(c));
  return a;
}

Json rational_json(const ExactRational& q) {
  return Json{{"num", decimal(q.get_num())}, {"den", decimal(q.get_den())}};
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::string csv_row(const std::vector<std::string>& fields) {
  std::string out;
  for (std::size_t i = 0; i < fields.size(); ++i) {
    if (i) out += ',';
    out += csv_field(fields[i]);
  }
  return out + "\n";
}

Json approximant_json(const ApproximantRecord& r) {
  return Json{{"m", r.m},
              {"F_num", coefficients_json(r.F.numerator())},
              {"F_den", coefficients_json(r.F.denominator())},
              {"G_num", coefficients_json(r.G.numerator())},
              {"G_den", coefficients_json(r.G.denominator())},
              {"ratio_num", coefficients_json(r.ratio.numerator())},
              {"ratio_den", coefficients_json(r.ratio.denominator())},
              {"h_m", rational_json(r.h_m)}};
}

std::string approximants_csv(const std::vector<ApproximantRecord>& rs) {
  std::string out = csv_row({"m", "field", "degree", "value"});
  for (const auto& r : rs) {
    const std::string m = std::to_string(r.m);
    auto poly = [&](const char* name, const IntPolynomial& p) {
      for (std::size_t i = 0; i < p.coeffs().size(); ++i)
        out += csv_row({m, name, std::to_string(i), decimal(p.coeffs()[i])});
    };
    poly("F_num", r.F.numerator());
    poly("F_den", r.F.denominator());
    poly("G_num", r.G.numerator());
    poly("G_den", r.G.denominator());
    poly("ratio_num", r.ratio.numerator());
    poly("ratio_den", r.ratio.denominator());
    out += csv_row({m, "h_m", "0", r.h_m.get_str(10)});
  }
  return out;
}

namespace {

Json cell_json(const DeltaCell& c) {
  return Json{{"m", c.m},
              {"k", c.k},
              {"x_num", decimal(c.x.get_num())},
              {"x_den", decimal(c.x.get_den())},
              {"value_num", decimal(c.value.get_num())},
              {"value_den", decimal(c.value.get_den())},
              {"flag", to_string(c.flag)}};
}

std::vector<std::string> cell_fields(const DeltaCell& c) {
  return {std::to_string(c.m),         std::to_string(c.k),         decimal(c.x.get_num()), decimal(c.x.get_den()),
          decimal(c.value.get_num()), decimal(c.value.get_den()), to_string(c.flag)};
}

Json complex_json(const HPComplex& z) { return Json{{"re", decimal(z.re())}, {"im", decimal(z.im())}}; }

}  // namespace

Json positivity_json(const PositivityReport& r) {
  Json v = Json::array();
  for (const auto& c : r.violations) v.push_back(cell_json(c));
  Json j{{"m", r.m},
         {"grid_denominator", r.grid_denominator},
         {"cells_checked", r.cells_checked},
         {"passed", r.passed()},
         {"minimum", cell_json(r.minimum)},
         {"violations", v}};
  if (!r.cells.empty()) {
    Json cells = Json::array();
    for (const auto& c : r.cells) cells.push_back(cell_json(c));
    j["cells"] = cells;
  }
  return j;
}

std::string positivity_csv(const std::vector<PositivityReport>& rs) {
  std::string out = csv_row({"m", "k", "x_num", "x_den", "value_num", "value_den", "flag"});
  for (const auto& r : rs)
    for (const auto& c : r.cells.empty() ? r.violations : r.cells) out += csv_row(cell_fields(c));
  return out;
}

Json spectrum_json(const SpectrumReport& r) {
  Json ev = Json::array();
  for (const auto& e : r.eigenvalues)
    ev.push_back(Json{{"re", decimal(e.value.re())}, {"im", decimal(e.value.im())}, {"residual", decimal(e.residual)}});
  return Json{{"m", r.m},
              {"precision_bits", r.precision_bits},
              {"eigenvalues", ev},
              {"spectral_radius", decimal(r.spectral_radius)},
              {"epsilon_m", decimal(r.epsilon_m)}};
}

std::string spectra_csv(const std::vector<SpectrumReport>& rs) {
  std::string out = csv_row({"m", "precision_bits", "index", "re", "im", "residual", "spectral_radius", "epsilon_m"});
  for (const auto& r : rs)
    for (std::size_t i = 0; i < r.eigenvalues.size(); ++i) {
      const auto& e = r.eigenvalues[i];
      out += csv_row({std::to_string(r.m), std::to_string(r.precision_bits), std::to_string(i), decimal(e.value.re()),
                      decimal(e.value.im()), decimal(e.residual), decimal(r.spectral_radius), decimal(r.epsilon_m)});
    }
  return out;
}

Json zero_atlas_json(const ZeroAtlas& a) {
  Json zs = Json::array();
  for (const auto& z : a.zeros)
    zs.push_back(Json{{"kind", to_string(z.kind)},
                      {"s", complex_json(z.s)},
                      {"z", complex_json(z.z)},
                      {"z_abs", decimal(z.modulus_z)},
                      {"residual", decimal(z.residual)}});
  return Json{{"m", a.m},
              {"precision_bits", a.precision_bits},
              {"trivial_r", a.trivial_r},
              {"reduced", coefficients_json(a.reduced)},
              {"squarefree", a.squarefree},
              {"residue_free", a.residue_free},
              {"zeros", zs}};
}

std::string zero_atlas_csv(const std::vector<ZeroAtlas>& as) {
  std::string out = csv_row({"m", "kind", "s_re", "s_im", "z_re", "z_im", "z_abs", "residual"});
  for (const auto& a : as)
    for (const auto& z : a.zeros)
      out += csv_row({std::to_string(z.m), to_string(z.kind), decimal(z.s.re()), decimal(z.s.im()), decimal(z.z.re()),
                      decimal(z.z.im()), decimal(z.modulus_z), decimal(z.residual)});
  return out;
}

Json convergence_json(const std::vector<ConvergenceRow>& rows) {
  Json out = Json::array();
  for (const auto& r : rows)
    out.push_back(Json{{"m", r.m},
                       {"s", complex_json(r.s)},
                       {"approx", complex_json(r.approx)},
                       {"reference", complex_json(r.reference)},
                       {"abs_error", decimal(r.abs_error)}});
  return out;
}

std::string convergence_csv(const std::vector<ConvergenceRow>& rows) {
  std::string out = csv_row({"m", "s_re", "s_im", "approx_re", "approx_im", "ref_re", "ref_im", "abs_error"});
  for (const auto& r : rows)
    out += csv_row({std::to_string(r.m), decimal(r.s.re()), decimal(r.s.im()), decimal(r.approx.re()),
                    decimal(r.approx.im()), decimal(r.reference.re()), decimal(r.reference.im()),
                    decimal(r.abs_error)});
  return out;
}

Json kernel_gap_json(const std::vector<KernelGapReport>& rows) {
  Json out = Json::array();
  for (const auto& r : rows)
    out.push_back(Json{{"m", r.m},
                       {"grid_points", r.grid_points},
                       {"sup", decimal(r.sup)},
                       {"argmax", decimal(r.argmax)},
                       {"scale", decimal(r.scale)},
                       {"ratio", decimal(r.ratio)}});
  return out;
}

std::string kernel_gap_csv(const std::vector<KernelGapReport>& rows) {
  std::string out = csv_row({"m", "grid_points", "sup", "argmax", "scale", "ratio"});
  for (const auto& r : rows)
    out += csv_row({std::to_string(r.m), std::to_string(r.grid_points), decimal(r.sup), decimal(r.argmax),
                    decimal(r.scale), decimal(r.ratio)});
  return out;
}

}  // namespace zetaseq
