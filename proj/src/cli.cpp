#include "zetaseq/cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <ostream>
#include <regex>
#include <stdexcept>

#include "zetaseq/analytic_eval.hpp"
#include "zetaseq/errors.hpp"
#include "zetaseq/exact_core.hpp"
#include "zetaseq/serialize.hpp"
#include "zetaseq/spectral_forms.hpp"
#include "zetaseq/zero_atlas.hpp"

namespace zetaseq {

std::string to_string(Command c) {
  switch (c) {
    case Command::approximants: return "approximants";
    case Command::verify: return "verify";
    case Command::convergence: return "convergence";
    case Command::spectra: return "spectra";
    case Command::zeros: return "zeros";
    case Command::kernel: return "kernel";
    case Command::gamma: return "gamma";
  }
  return "unknown";
}

namespace {

ExactRational parse_real_part(const std::string& text) {
  static const std::regex ratio(R"(([+-]?\d+)/(\d+))");
  static const std::regex dec(R"(([+-]?)(\d*)(?:\.(\d*))?(?:[eE]([+-]?\d+))?)");
  std::smatch mt;
  if (std::regex_match(text, mt, ratio)) {
    BigInt num(mt[1].str().front() == '+' ? mt[1].str().substr(1) : mt[1].str()), den(mt[2].str());
    if (den == 0) throw std::invalid_argument("zero denominator in " + text);
    ExactRational q(num, den);
    q.canonicalize();
    return q;
  }
  if (std::regex_match(text, mt, dec) && (mt[2].length() > 0 || mt[3].length() > 0)) {
    const std::string digits = mt[2].str() + mt[3].str();
    long exponent = mt[4].matched ? std::stol(mt[4].str()) : 0;
    exponent -= static_cast<long>(mt[3].length());
    if (exponent > 100000 || exponent < -100000) throw std::invalid_argument("exponent out of range in " + text);
    ExactRational q{BigInt(digits)};
    BigInt scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(exponent < 0 ? -exponent : exponent));
    if (exponent < 0) q /= scale;
    else q *= scale;
    q.canonicalize();
    return mt[1].str() == "-" ? ExactRational(-q) : q;
  }
  throw std::invalid_argument("not a number: '" + text + "'");
}

bool needs_positive_m(Command c) { return c == Command::zeros || c == Command::kernel || c == Command::gamma; }

void write_text(const std::string& text, const std::string& path) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw std::invalid_argument("cannot open output file " + path);
  f << text;
  if (!f) throw std::invalid_argument("cannot write output file " + path);
}

hp::Complex to_complex(const ExactPoint& p, long bits) {
  return hp::Complex(hp::Real(p.re, bits), hp::Real(p.im, bits));
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

Json header(const RunConfig& c) {
  return Json{{"command", to_string(c.command)}, {"precision_bits", c.precision_bits}};
}

RunResult emit_verify(const RunConfig& c) {
  VerifySettings s;
  s.m_list = c.m_list;
  s.grid_denominator = c.grid_denominator;
  s.seed = c.seed;
  s.corruption = c.corruption;
  VerifyReport rep = run_verify_suite(s);
  RunResult out;
  out.exit_code = rep.passed() ? 0 : 1;
  if (c.format == Format::csv) {
    out.output = csv_row({"check", "m", "status", "witness"});
    for (const auto& r : rep.results)
      out.output += csv_row({r.check, std::to_string(r.m), r.passed ? "pass" : "fail", r.witness});
    return out;
  }
  Json checks = Json::array();
  for (const auto& r : rep.results)
    checks.push_back(Json{{"check", r.check}, {"m", r.m}, {"status", r.passed ? "pass" : "fail"}, {"witness", r.witness}});
  Json j{{"command", "verify"},
         {"seed", std::to_string(c.seed)},
         {"grid_denominator", c.grid_denominator},
         {"passed", rep.passed()},
         {"failures", rep.failures()},
         {"checks", checks}};
  if (c.corruption) j["corruption"] = Json{{"m", c.corruption->m}, {"j", c.corruption->j}};
  out.output = dump(j);
  return out;
}

std::string emit_gamma(const RunConfig& c) {
  const long P = c.precision_bits;
  hp::Real euler(P + 32);
  mpfr_const_euler(euler.get(), MPFR_RNDN);
  std::vector<std::vector<std::string>> rows;
  for (int m : c.m_list) {
    ExactRational g = euler_gamma_approx(m);
    hp::Real v(g, P + 32);
    rows.push_back({std::to_string(m), decimal(g.get_num()), decimal(g.get_den()), decimal(v.with_prec(P)),
                    decimal(abs(v - euler).with_prec(P))});
  }
  const std::vector<std::string> cols{"m", "num", "den", "value", "abs_error"};
  if (c.format == Format::csv) {
    std::string out = csv_row(cols);
    for (const auto& r : rows) out += csv_row(r);
    return out;
  }
  Json arr = Json::array();
  for (const auto& r : rows)
    arr.push_back(Json{{"m", std::stoi(r[0])}, {"num", r[1]}, {"den", r[2]}, {"value", r[3]}, {"abs_error", r[4]}});
  Json j = header(c);
  j["euler_constant"] = arr;
  return dump(j);
}

std::string emit(const RunConfig& c) {
  const long P = c.precision_bits;
  const bool csv = c.format == Format::csv;
  switch (c.command) {
    case Command::approximants: {
      std::vector<ApproximantRecord> rs;
      for (int m : c.m_list) rs.push_back(build_ratio(m));
      if (csv) return approximants_csv(rs);
      Json arr = Json::array();
      for (const auto& r : rs) arr.push_back(approximant_json(r));
      return dump(Json{{"command", "approximants"}, {"records", arr}});
    }
    case Command::convergence: {
      std::vector<HPComplex> s;
      for (const auto& p : c.s_list) s.push_back(to_complex(p, std::max(P, 192L) + 64));
      auto rows = c.scaled ? scaled_convergence_table(s, c.m_list, P) : convergence_table(s, c.m_list, P);
      if (csv) return convergence_csv(rows);
      Json j = header(c);
      j["scaled"] = c.scaled;
      j["rows"] = convergence_json(rows);
      return dump(j);
    }
    case Command::spectra: {
      std::vector<SpectrumReport> rs;
      for (int m : c.m_list) rs.push_back(spectral_radius_ILU(m, P));
      if (csv) return spectra_csv(rs);
      Json arr = Json::array();
      for (const auto& r : rs) arr.push_back(spectrum_json(r));
      Json j = header(c);
      j["spectra"] = arr;
      return dump(j);
    }
    case Command::zeros: {
      std::vector<ZeroAtlas> as;
      for (int m : c.m_list) as.push_back(classify_zeros(m, P));
      if (csv) return zero_atlas_csv(as);
      Json arr = Json::array();
      for (const auto& a : as) arr.push_back(zero_atlas_json(a));
      Json j = header(c);
      j["atlases"] = arr;
      return dump(j);
    }
    case Command::kernel: {
      std::vector<KernelGapReport> rs;
      for (int m : c.m_list) rs.push_back(kernel_gap(m, c.grid_denominator, P));
      if (csv) return kernel_gap_csv(rs);
      Json j = header(c);
      j["rows"] = kernel_gap_json(rs);
      return dump(j);
    }
    case Command::gamma: return emit_gamma(c);
    case Command::verify: break;
  }
  throw std::logic_error("unhandled command");
}

void validate(const RunConfig& c) {
  if (c.precision_bits < 64) throw std::invalid_argument("--prec-bits must be at least 64");
  if (c.grid_denominator < 1) throw std::invalid_argument("--grid-den must be positive");
  if (c.m_list.empty()) throw std::invalid_argument("one of --m, --m-list, --m-max is required");
  for (std::size_t i = 0; i < c.m_list.size(); ++i) {
    if (c.m_list[i] < 0) throw std::invalid_argument("m must be nonnegative");
    if (i && c.m_list[i] <= c.m_list[i - 1]) throw std::invalid_argument("m values must be strictly ascending");
  }
  if (needs_positive_m(c.command) && c.m_list.front() < 1)
    throw std::invalid_argument(to_string(c.command) + " requires m >= 1");
  if (c.command == Command::convergence && c.s_list.empty())
    throw std::invalid_argument("convergence requires at least one --s");
  if (c.corruption && c.command != Command::verify) throw std::invalid_argument("--corrupt applies to verify only");
}

}  // namespace

ExactPoint parse_point(const std::string& text) {
  const auto comma = text.find(',');
  if (comma == std::string::npos) return {parse_real_part(text), ExactRational(0)};
  return {parse_real_part(text.substr(0, comma)), parse_real_part(text.substr(comma + 1))};
}

std::vector<int> parse_int_list(const std::string& text) {
  static const std::regex item(R"(\s*(\d{1,9})\s*)");
  std::vector<int> out;
  std::size_t start = 0;
  while (true) {
    const auto comma = text.find(',', start);
    const std::string part = text.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
    std::smatch mt;
    if (!std::regex_match(part, mt, item)) throw std::invalid_argument("not a nonnegative integer: '" + part + "'");
    out.push_back(std::stoi(mt[1].str()));
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return out;
}

RunResult run(const RunConfig& config) {
  RunResult out;
  try {
    validate(config);
    if (config.command == Command::verify) out = emit_verify(config);
    else out.output = emit(config);
  } catch (const PoleError& e) {
    return {2, {}, e.what()};
  } catch (const DomainError& e) {
    return {2, {}, e.what()};
  } catch (const PrecisionError& e) {
    return {2, {}, e.what()};
  } catch (const std::invalid_argument& e) {
    return {2, {}, e.what()};
  } catch (const Error& e) {
    return {1, {}, e.what()};
  }
  return out;
}

int cli_main(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact and high-precision checks for rational approximants of the zeta function", "zeta_seq"};
  app.require_subcommand(1);

  std::optional<int> m, m_max;
  std::string m_list, corrupt, format = "json";
  std::vector<std::string> s_values;
  RunConfig cfg;

  const std::vector<std::pair<Command, std::string>> commands{
      {Command::approximants, "Emit F_m, G_m and the ratio as exact records"},
      {Command::verify, "Run the exact identity suites"},
      {Command::convergence, "Tabulate ratio_m(s) against zeta(s)"},
      {Command::spectra, "Eigenvalues and spectral radius of I + L^{-1} U"},
      {Command::zeros, "Zeros of the F_m numerators and their Moebius images"},
      {Command::kernel, "Sup gap between f_m and x/(e^x - 1)"},
      {Command::gamma, "Rational approximants to Euler's constant"}};
  std::vector<CLI::App*> subs;
  for (const auto& [cmd, help] : commands) {
    CLI::App* sub = app.add_subcommand(to_string(cmd), help);
    auto* o_m = sub->add_option("--m", m, "Single m");
    auto* o_list = sub->add_option("--m-list", m_list, "Comma-separated ascending m values");
    auto* o_max = sub->add_option("--m-max", m_max, "All m up to this value");
    o_m->excludes(o_list)->excludes(o_max);
    o_list->excludes(o_max);
    sub->add_option("--s", s_values, "Evaluation point re[,im]; repeatable")->allow_extra_args(false);
    sub->add_option("--prec-bits", cfg.precision_bits, "Working precision in bits")->capture_default_str();
    sub->add_option("--grid-den", cfg.grid_denominator, "Grid denominator or grid size")->capture_default_str();
    sub->add_option("--seed", cfg.seed, "Seed for randomized checks")->capture_default_str();
    sub->add_option("--format", format, "Output format")->check(CLI::IsMember({"json", "csv"}))->capture_default_str();
    sub->add_option("--out", cfg.output_path, "Output file; standard output when absent");
    if (cmd == Command::verify) sub->add_option("--corrupt", corrupt, "Add 1 to a_{m,j} before checking: m,j");
    if (cmd == Command::convergence) sub->add_flag("--scaled", cfg.scaled, "Compare the Gamma-scaled forms");
    subs.push_back(sub);
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  try {
    for (std::size_t i = 0; i < subs.size(); ++i)
      if (subs[i]->parsed()) cfg.command = commands[i].first;
    cfg.format = format == "csv" ? Format::csv : Format::json;
    const int lowest = needs_positive_m(cfg.command) ? 1 : 0;
    if (m) cfg.m_list = {*m};
    if (!m_list.empty()) cfg.m_list = parse_int_list(m_list);
    if (m_max) {
      if (*m_max < lowest) throw std::invalid_argument("--m-max below the smallest allowed m");
      for (int k = lowest; k <= *m_max; ++k) cfg.m_list.push_back(k);
    }
    for (const auto& s : s_values) cfg.s_list.push_back(parse_point(s));
    if (!corrupt.empty()) {
      std::vector<int> mj = parse_int_list(corrupt);
      if (mj.size() != 2) throw std::invalid_argument("--corrupt expects m,j");
      cfg.corruption = Corruption{mj[0], mj[1]};
    }
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }

  RunResult r = run(cfg);
  if (r.exit_code == 2 || (r.exit_code == 1 && r.output.empty())) {
    err << "error: " << r.error << "\n";
    return r.exit_code;
  }
  if (cfg.output_path.empty()) {
    out << r.output;
  } else {
    try {
      write_text(r.output, cfg.output_path);
    } catch (const std::invalid_argument& e) {
      err << "error: " << e.what() << "\n";
      return 2;
    }
  }
  return r.exit_code;
}

}  // namespace zetaseq
