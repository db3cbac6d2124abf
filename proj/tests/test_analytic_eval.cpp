#include <random>

#include "doctest.h"
#include "zetaseq/analytic_eval.hpp"
#include "zetaseq/errors.hpp"

using namespace zetaseq;
using hp::Real;

namespace {

constexpr long P = 128;

HPComplex c(double re, double im = 0.0, long prec = P) { return HPComplex(re, im, prec); }

Real err(const HPComplex& a, const HPComplex& b) { return hp::abs(a - b); }

Real bits(long e, long prec = P) { return hp::exp2i(-e, prec); }

Real mpfr_real(int (*fn)(mpfr_ptr, mpfr_srcptr, mpfr_rnd_t), double x, long prec) {
  Real r(prec), a(x, prec);
  fn(r.get(), a.get(), MPFR_RNDN);
  return r;
}

}  // namespace

TEST_CASE("reference zeta") {
  Real pi = hp::pi(P);
  Real pi2 = pi * pi;
  CHECK(err(reference_zeta(c(2), P), HPComplex(pi2 / 6L)) < bits(P - 16));
  CHECK(err(reference_zeta(c(4), P), HPComplex(pi2 * pi2 / 90L)) < bits(P - 16));
  CHECK(err(reference_zeta(c(6), P), HPComplex(pi2 * pi2 * pi2 / 945L)) < bits(P - 16));
  // MPFR's real zeta as an independent oracle
  for (double x : {0.1, 0.5, 0.75, 1.5, 3.0, 10.0})
    CHECK(err(reference_zeta(c(x), P), HPComplex(mpfr_real(mpfr_zeta, x, P))) < bits(P - 16));
  CHECK(reference_zeta(c(0.5), P).re().to_string(20) == "-1.4603545088095868129e+00");
  // same value at two precisions
  CHECK(err(reference_zeta(c(0.5, 14.0), 256).with_prec(P), reference_zeta(c(0.5, 14.0), P)) < bits(P - 16));
  // first nontrivial zero
  CHECK(hp::abs(reference_zeta(HPComplex(Real(0.5, P), Real::parse("14.134725141734693790457251983562", P)), P)) <
        bits(90));
  CHECK_THROWS_AS(reference_zeta(c(1), P), PoleError);
  CHECK_THROWS_AS(reference_zeta(c(-1), P), DomainError);
  CHECK_THROWS_AS(reference_zeta(c(0), P), DomainError);
}

TEST_CASE("reference gamma") {
  CHECK(err(reference_gamma(c(1), P), c(1)) < bits(P - 8));
  CHECK(err(reference_gamma(c(5), P), c(24)) < bits(P - 8));
  CHECK(err(reference_gamma(c(0.5), P), HPComplex(hp::sqrt(hp::pi(P)))) < bits(P - 8));
  CHECK(err(reference_gamma(c(-0.5), P), HPComplex(hp::sqrt(hp::pi(P)) * -2L)) < bits(P - 8));
  for (double x : {0.01, 0.3, 2.7, 17.25, -3.5})
    CHECK(err(reference_gamma(c(x), P), HPComplex(mpfr_real(mpfr_gamma, x, P))) <
          bits(P - 16) * hp::max(Real(1L, P), hp::abs(mpfr_real(mpfr_gamma, x, P))));
  std::mt19937_64 rng(0);
  std::uniform_real_distribution<double> re(-4.0, 6.0), im(-10.0, 10.0);
  for (int i = 0; i < 50; ++i) {
    HPComplex s = c(re(rng), im(rng));
    HPComplex lhs = reference_gamma(s + c(1), P);
    HPComplex rhs = s * reference_gamma(s, P);
    CHECK(hp::abs(lhs - rhs) <= bits(P - 16) * hp::abs(lhs));
  }
  CHECK_THROWS_AS(reference_gamma(c(0), P), PoleError);
  CHECK_THROWS_AS(reference_gamma(c(-3), P), PoleError);
}

TEST_CASE("F, G and ratio at sample points") {
  // F_3(2) = 43/72, F_1(3) = 1/3, F_0(2) = 1
  CHECK(err(eval_F_hp(3, c(2), P), HPComplex(Real(43L, P) / 72L)) < bits(P - 4));
  CHECK(err(eval_F_hp(1, c(3), P), HPComplex(Real(1L, P) / 3L)) < bits(P - 4));
  CHECK(err(eval_F_hp(0, c(2), P), c(1)) < bits(P - 4));
  CHECK(err(eval_ratio_hp(3, c(2), P), HPComplex(Real(43L, P) / 27L)) < bits(P - 8));
  CHECK(err(eval_ratio_hp(4, c(2), P), HPComplex(Real(6047L, P) / 3765L)) < bits(P - 8));
  CHECK_THROWS_AS(eval_F_hp(3, c(-1), P), PoleError);
  CHECK_THROWS_AS(eval_F_hp(3, c(-1.0 + 1e-20), P), PoleError);
  CHECK_THROWS_AS(eval_F_hp(3, c(1), P), PoleError);
  CHECK_NOTHROW(eval_F_hp(3, c(-5), P));
}

TEST_CASE("recurrence and partial fractions agree") {
  std::mt19937_64 rng(0);
  std::uniform_real_distribution<double> re(0.1, 5.0), im(-20.0, 20.0);
  for (int m : {1, 7, 40, 128, 256})
    for (int i = 0; i < 10; ++i) {
      HPComplex s = c(re(rng), im(rng));
      HPComplex a = eval_F_hp(m, s, P);  // cross-checked internally
      HPComplex b = eval_F_partial_fractions(m, s, P);
      CHECK(hp::abs(a - b) <= bits(P / 2) * hp::abs(b));
    }
}

TEST_CASE("scaled values") {
  CHECK(scaled_F(5, c(1), P).re() == Real(1L, P));
  CHECK(scaled_reference(c(1), P).re() == Real(1L, P));
  // (s-1) Gamma(s) zeta(s) at s = 1/2
  HPComplex t = scaled_reference(c(0.5), P);
  CHECK(t.re().to_string(15) == "1.29420548641339e+00");
  CHECK_THROWS_AS(scaled_F(0, c(2), P), DomainError);
}

TEST_CASE("convergence anchors and monotonicity") {
  auto rows = convergence_table({c(2)}, {3, 4}, P);
  REQUIRE(rows.size() == 2);
  CHECK(std::fabs(rows[0].abs_error.to_double() - 0.0523) <= 0.0005);
  CHECK(std::fabs(rows[1].abs_error.to_double() - 0.0388) <= 0.0005);
  auto t = convergence_table({c(2), c(3)}, {8, 16, 32, 64}, P);
  REQUIRE(t.size() == 8);
  for (std::size_t i = 1; i < 4; ++i) {
    CHECK(t[i].abs_error < t[i - 1].abs_error);
    CHECK(t[4 + i].abs_error < t[4 + i - 1].abs_error);
  }
  auto sc = scaled_convergence_table({c(0.5)}, {8, 16, 32}, P);
  CHECK(sc[1].abs_error < sc[0].abs_error);
  CHECK(sc[2].abs_error < sc[1].abs_error);
  CHECK(std::fabs(sc[0].abs_error.to_double() - 0.0395) < 0.001);
}

TEST_CASE("kernel gap") {
  auto k1 = kernel_gap(1, 1, P);
  CHECK(k1.grid_points == 1);
  auto k16 = kernel_gap(16, 200, P);
  CHECK(std::fabs(k16.ratio.to_double() - 0.2851) < 0.001);
  auto k64 = kernel_gap(64, 200, P);
  CHECK(k64.sup < k16.sup);
  CHECK(std::fabs(k64.ratio.to_double() - 0.4003) < 0.001);
}
