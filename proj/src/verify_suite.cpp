#include "zetaseq/verify_suite.hpp"

#include <algorithm>
#include <functional>
#include <random>
#include <stdexcept>

#include "zetaseq/divided_differences.hpp"
#include "zetaseq/exact_core.hpp"
#include "zetaseq/parallel.hpp"
#include "zetaseq/spectral_forms.hpp"

namespace zetaseq {

int VerifyReport::failures() const {
  return static_cast<int>(std::count_if(results.begin(), results.end(), [](const CheckResult& r) { return !r.passed; }));
}

namespace {

constexpr int falling_sum_orders = 5;
constexpr int pest_orders = 5;
constexpr int random_points = 3;

std::string show(const ExactRational& q) { return q.get_str(10); }

std::string join(const std::vector<int>& v) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? " " : "") + std::to_string(v[i]);
  return out.empty() ? "none" : out;
}

/// One generator per (check, m) so results do not depend on scheduling.
std::mt19937_64 generator(std::uint64_t seed, int m, std::uint32_t tag) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(m), tag};
  return std::mt19937_64(seq);
}

ExactRational random_rational(std::mt19937_64& rng, int max_ratio) {
  const long den = 1 + static_cast<long>(rng() % 12);
  const long num = static_cast<long>(rng() % static_cast<std::uint64_t>(max_ratio * den + 1));
  ExactRational q(num, den);
  q.canonicalize();
  return q;
}

/// Smallest integer s >= 2 where two distinct rational functions differ.
std::string first_difference(const RationalFunction& a, const RationalFunction& b, int m) {
  for (int s = 2; s <= 2 * m + 8; ++s) {
    ExactRational q(s);
    if (a.eval(q) != b.eval(q)) return "differs at s=" + std::to_string(s);
  }
  return "differs as rational functions";
}

struct Task {
  std::string check;
  int m;
  std::function<std::string()> run;  // witness, empty on pass
};

}  // namespace

VerifyReport run_verify_suite(const VerifySettings& cfg) {
  for (std::size_t i = 0; i < cfg.m_list.size(); ++i) {
    if (cfg.m_list[i] < 0) throw std::invalid_argument("verify: m must be nonnegative");
    if (i && cfg.m_list[i] <= cfg.m_list[i - 1]) throw std::invalid_argument("verify: m list must be ascending");
  }
  if (cfg.grid_denominator < 1) throw std::invalid_argument("verify: grid denominator must be positive");
  VerifyReport report;
  if (cfg.m_list.empty()) return report;
  const int m_top = cfg.m_list.back();
  if (cfg.corruption) {
    const Corruption& c = *cfg.corruption;
    if (c.m < 0 || c.m > m_top || c.j < 0 || c.j > c.m)
      throw std::invalid_argument("verify: corruption index outside 0 <= j <= m <= max m");
  }

  std::vector<ApproximantRecord> records(m_top + 1);
  parallel_map<int>(records.size(), [&](std::size_t i) {
    const int m = static_cast<int>(i);
    std::vector<ExactRational> a = stirling_coeffs(m);
    if (cfg.corruption && cfg.corruption->m == m) a[cfg.corruption->j] += 1;
    records[i] = build_record_from(m, a);
    return 0;
  });
  std::vector<RationalFunction> F, G;
  for (const auto& r : records) {
    F.push_back(r.F);
    G.push_back(r.G);
  }

  std::vector<HFormReport> h_forms;
  if (m_top >= 1) h_forms = check_h_forms_up_to(m_top);

  std::vector<Task> tasks;
  for (int m : cfg.m_list) {
    const ApproximantRecord& rec = records[m];
    tasks.push_back({"bernoulli_dual", m, [m] {
                       ExactRational k = bernoulli_kronecker(m), r = bernoulli_recurrence(m);
                       return k == r ? std::string() : "j=" + std::to_string(m) + " double sum " + show(k) + " recurrence " + show(r);
                     }});
    tasks.push_back({"determinant_forms", m, [m, &rec] {
                       DeterminantCheck d = verify_determinant_forms_against(m, full_numerator(rec.F, m));
                       if (d.passed()) return std::string();
                       std::string w = !d.lu_matches && !d.tr_matches ? "forms LU and TR" : !d.lu_matches ? "form LU" : "form TR";
                       return w + " differ from the numerator of F";
                     }});
    tasks.push_back({"falling_sums", m, [m] {
                       for (int j = 0; j <= falling_sum_orders; ++j)
                         if (!verify_falling_sum(m, j)) return "j=" + std::to_string(j);
                       return std::string();
                     }});
    tasks.push_back({"interpolation", m, [&rec] {
                       auto r = interpolation_failure(rec);
                       return r ? "r=" + std::to_string(*r) : std::string();
                     }});
    tasks.push_back({"kernel_at_one", m, [m] {
                       ExactRational v = kernel_f(m, ExactRational(1));
                       return v == ExactRational(1, m + 1) ? std::string() : "f(1)=" + show(v);
                     }});
    tasks.push_back({"limit_at_infinity", m, [m, &rec] {
                       ExactRational v = rec.F.limit_s_times_at_infinity();
                       return v == ExactRational(1, m + 1) ? std::string() : "limit=" + show(v);
                     }});
    tasks.push_back({"partition_of_unity", m, [m] {
                       return verify_partition_of_unity(m) ? std::string() : "sum of Delta is not 1";
                     }});
    tasks.push_back({"positivity", m, [m, &cfg] {
                       PositivityReport p = positivity_scan(m, cfg.grid_denominator);
                       if (p.passed()) return std::string();
                       const DeltaCell& c = p.violations.front();
                       return "k=" + std::to_string(c.k) + " x=" + show(c.x) + " value=" + show(c.value);
                     }});
    tasks.push_back({"recurrence_F", m, [m, &F] {
                       RationalFunction next = recurrence_F_next(std::span(F).first(m), m);
                       return next == F[m] ? std::string() : first_difference(next, F[m], m);
                     }});
    tasks.push_back({"residues", m, [&rec] {
                       ExactRational f = residue_at_one(rec.F), g = residue_at_one(rec.G);
                       if (f == 1 && g == 1) return std::string();
                       return "F residue " + show(f) + " G residue " + show(g);
                     }});
    tasks.push_back({"trivial_zeros", m, [m, &rec] {
                       TrivialZeroReport t = trivial_zero_factors_of(m, full_numerator(rec.F, m));
                       return t.passed() ? std::string() : "expected r=" + join(t.expected) + " found r=" + join(t.found);
                     }});
    if (m < 1) continue;
    tasks.push_back({"h_form", m, [m, &h_forms] {
                       const HFormReport& h = h_forms[m - 1];
                       if (h.passed()) return std::string();
                       if (!h.off_diagonal_nonpositive) return std::string("positive off-diagonal entry");
                       if (!h.row_sums_positive) return std::string("nonpositive row sum");
                       return std::string("nonpositive leading minor");
                     }});
    tasks.push_back({"operator_actions", m, [m, &cfg] {
                       return operator_action_checks(m, cfg.seed) ? std::string() : "seed=" + std::to_string(cfg.seed);
                     }});
    tasks.push_back({"pest_recurrence", m, [m, &cfg] {
                       auto rng = generator(cfg.seed, m, 1);
                       for (int t = 0; t < random_points; ++t) {
                         ExactRational x = random_rational(rng, 2);
                         for (int p = 0; p <= pest_orders; ++p)
                           if (!verify_pest_recurrence(m, p, x)) return "p=" + std::to_string(p) + " x=" + show(x);
                       }
                       return std::string();
                     }});
    tasks.push_back({"recurrence_G", m, [m, &G] {
                       return verify_recurrence_G(std::span(G).first(m + 1), m) ? std::string() : "identity fails";
                     }});
    tasks.push_back({"tilde_recurrence", m, [m, &cfg] {
                       auto rng = generator(cfg.seed, m, 2);
                       BigInt fact;
                       mpz_fac_ui(fact.get_mpz_t(), static_cast<unsigned long>(m));
                       for (int t = 0; t < random_points; ++t) {
                         ExactRational v = random_rational(rng, 2), x = random_rational(rng, 1);
                         for (int k = 0; k <= m; ++k) {
                           if (!verify_tilde_recurrence(m, k, v, x))
                             return "k=" + std::to_string(k) + " v=" + show(v) + " x=" + show(x);
                           if (delta_tilde(m, k, ExactRational(0), x) != ExactRational(fact) * delta(m, k, x))
                             return "k=" + std::to_string(k) + " v=0 x=" + show(x);
                         }
                       }
                       return std::string();
                     }});
  }

  report.results = parallel_map<CheckResult>(tasks.size(), [&](std::size_t i) {
    CheckResult r{tasks[i].check, tasks[i].m, false, {}};
    try {
      r.witness = tasks[i].run();
      r.passed = r.witness.empty();
    } catch (const std::exception& e) {
      r.witness = std::string("error: ") + e.what();
    }
    return r;
  });
  std::stable_sort(report.results.begin(), report.results.end(), [](const CheckResult& a, const CheckResult& b) {
    return a.check != b.check ? a.check < b.check : a.m < b.m;
  });
  return report;
}

}  // namespace zetaseq
