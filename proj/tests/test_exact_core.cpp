#include <vector>

#include "doctest.h"
#include "zetaseq/errors.hpp"
#include "zetaseq/exact_core.hpp"

using namespace zetaseq;

namespace {

IntPolynomial ip(std::vector<long> c) {
  std::vector<BigInt> v(c.begin(), c.end());
  return IntPolynomial(std::move(v));
}

ExactRational q(long n, long d = 1) {
  ExactRational r(n, d);
  r.canonicalize();
  return r;
}

// (s - 1)
const IntPolynomial kSm1 = ip({-1, 1});

}  // namespace

TEST_CASE("stirling coefficients") {
  CHECK(stirling_coeffs(0) == std::vector<ExactRational>{q(1)});
  CHECK(stirling_coeffs(1) == std::vector<ExactRational>{q(1), q(1)});
  CHECK(stirling_coeffs(3) == std::vector<ExactRational>{q(1), q(11, 6), q(1), q(1, 6)});
  for (int m = 0; m <= 30; ++m) {
    auto a = stirling_coeffs(m);
    ExactRational sum(0);
    for (const auto& v : a) {
      CHECK(v > 0);
      sum += v;
    }
    CHECK(a[0] == 1);
    CHECK(sum == m + 1);  // p_m(-1)
    CHECK(p_polynomial(m).eval(ExactRational(-1)) == m + 1);
  }
}

TEST_CASE("harmonic numbers") {
  CHECK(harmonic(0) == 0);
  CHECK(harmonic(3) == q(11, 6));
  CHECK(harmonic(4) == q(25, 12));
}

TEST_CASE("bernoulli numbers by both routes") {
  CHECK(bernoulli_kronecker(0) == 1);
  CHECK(bernoulli_kronecker(2) == q(1, 6));
  CHECK(bernoulli_kronecker(3) == 0);
  CHECK(bernoulli_recurrence(0) == 1);
  CHECK(bernoulli_recurrence(1) == q(-1, 2));
  CHECK(bernoulli_recurrence(4) == q(-1, 30));
  CHECK(bernoulli_recurrence(12) == q(-691, 2730));
  for (int j = 0; j <= 40; ++j) CHECK(bernoulli_kronecker(j) == bernoulli_recurrence(j));
}

TEST_CASE("F and G closed forms") {
  CHECK(build_F(0) == RationalFunction(ip({1}), kSm1));
  CHECK(build_G(0) == RationalFunction(ip({1}), kSm1));
  // (s+1)/(2s(s-1))
  CHECK(build_F(1) == RationalFunction(ip({1, 1}), ip({0, -2, 2})));
  // 1/(s(s-1))
  CHECK(build_G(1) == RationalFunction(ip({1}), ip({0, -1, 1})));
  // (3s^2+10s+11) / (12 (s-1) s (s+1))
  CHECK(build_F(3) == RationalFunction(ip({11, 10, 3}), ip({12}) * ip({-1, 1}) * ip({0, 1}) * ip({1, 1})));
  // (s^2+6s+11) / (3 (s-1) s (s+1) (s+2))
  CHECK(build_G(3) ==
        RationalFunction(ip({11, 6, 1}), ip({3}) * ip({-1, 1}) * ip({0, 1}) * ip({1, 1}) * ip({2, 1})));
}

TEST_CASE("golden ratios for m = 0..4") {
  std::vector<RationalFunction> expected{
      RationalFunction(ip({1}), kSm1),
      RationalFunction(ip({1, 1}), ip({2}) * kSm1),
      RationalFunction(ip({9, 11, 4}), ip({6}) * ip({3, 1}) * kSm1),
      RationalFunction(ip({2, 1}) * ip({11, 10, 3}), ip({4}) * ip({11, 6, 1}) * kSm1),
      RationalFunction(ip({2, 1}) * ip({1125, 1193, 490, 72}), ip({30}) * ip({150, 106, 29, 3}) * kSm1),
  };
  for (int m = 0; m <= 4; ++m) {
    CAPTURE(m);
    CHECK(build_ratio(m).ratio == expected[m]);
  }
  // canonical numerator of the m = 3 ratio, expanded
  CHECK(build_ratio(3).ratio.numerator() == ip({22, 31, 16, 3}));
}

TEST_CASE("exact evaluation") {
  CHECK(eval_rational(build_ratio(1).ratio, q(0)) == q(-1, 2));
  CHECK(eval_rational(build_ratio(3).ratio, q(-1)) == q(-1, 12));
  CHECK(eval_rational(build_ratio(3).ratio, q(2)) == q(43, 27));
  CHECK(eval_rational(build_ratio(4).ratio, q(2)) == q(24188, 15060));
  CHECK_THROWS_AS(eval_rational(build_F(3), q(0)), PoleError);
  try {
    eval_rational(build_F(3), q(-1));
    FAIL("expected a pole");
  } catch (const PoleError& e) {
    CHECK(std::string(e.what()).find("-1") != std::string::npos);
  }
}

TEST_CASE("zeta at non-positive integers") {
  CHECK(zeta_at_nonpositive_int(0) == q(-1, 2));
  CHECK(zeta_at_nonpositive_int(1) == q(-1, 12));
  CHECK(zeta_at_nonpositive_int(2) == 0);
  CHECK(zeta_at_nonpositive_int(3) == q(1, 120));
}

TEST_CASE("interpolation") {
  CHECK(verify_interpolation(1));
  CHECK(verify_interpolation(3));
  CHECK(verify_interpolation(10));
  CHECK_THROWS(verify_interpolation(0));
}

TEST_CASE("corrupted coefficients") {
  auto a = stirling_coeffs(5);
  a[2] += 1;
  auto rec = build_record_from(5, a);
  // the residues of F and G at 1 - r share the factor a_{m,r}, so
  // interpolation survives any change of the coefficients...
  CHECK_FALSE(interpolation_failure(rec).has_value());
  // ...while the recurrence does not
  std::vector<RationalFunction> F;
  for (int k = 0; k < 5; ++k) F.push_back(build_F(k));
  CHECK(recurrence_F_next(F, 5) != rec.F);
  CHECK(recurrence_F_next(F, 5) == build_F(5));
  a[0] += 1;
  CHECK(residue_at_one(build_F_from(a)) != 1);
}

TEST_CASE("residues at s = 1") {
  CHECK(residue_at_one(build_F(0)) == 1);
  CHECK(residue_at_one(build_F(5)) == 1);
  CHECK(residue_at_one(build_G(7)) == 1);
  for (int m = 0; m <= 20; ++m) {
    CHECK(residue_at_one(build_F(m)) == 1);
    CHECK(residue_at_one(build_G(m)) == 1);
  }
  // not a simple pole
  CHECK_THROWS_AS(residue_at_one(RationalFunction(ip({1}), kSm1 * kSm1)), DomainError);
  CHECK_THROWS_AS(residue_at_one(RationalFunction(ip({1}), ip({0, 1}))), DomainError);
}

TEST_CASE("F recurrence reproduces the partial-fraction definition") {
  std::vector<RationalFunction> F;
  CHECK(recurrence_F_next(F, 0) == RationalFunction(ip({1}), kSm1));
  for (int m = 0; m <= 20; ++m) {
    RationalFunction next = recurrence_F_next(F, m);
    CAPTURE(m);
    CHECK(next == build_F(m));
    F.push_back(next);
  }
  CHECK(F[1] == RationalFunction(ip({1, 1}), ip({0, -2, 2})));
}

TEST_CASE("G recurrence") {
  CHECK(verify_recurrence_G(1));
  CHECK(verify_recurrence_G(5));
  CHECK(verify_recurrence_G(12));
  // corrupted G_m fails
  std::vector<RationalFunction> G;
  for (int k = 0; k <= 4; ++k) G.push_back(build_G(k));
  G[4] = G[4] + RationalFunction::constant(q(1, 1000));
  CHECK_FALSE(verify_recurrence_G(G, 4));
}

TEST_CASE("poles skip the vanishing Bernoulli numbers") {
  for (int m = 0; m <= 20; ++m) {
    const auto F = build_F(m);
    CHECK(F.has_pole_at(q(1)));
    if (m >= 1) CHECK(F.has_pole_at(q(0)));
    for (int j = 2; j <= m; ++j) CHECK(F.has_pole_at(q(1 - j)) == (j % 2 == 0));
    CHECK(F.denominator().degree() - F.numerator().degree() == 1);
  }
}

TEST_CASE("limit of s F_m(s)") {
  CHECK(limit_sF_at_infinity(0) == 1);
  CHECK(limit_sF_at_infinity(3) == q(1, 4));
  CHECK(limit_sF_at_infinity(7) == q(1, 8));
}

TEST_CASE("Euler constant approximants") {
  CHECK(euler_gamma_approx(1) == q(1, 2));
  CHECK(euler_gamma_approx(2) == q(13, 24));
  CHECK(euler_gamma_approx(3) == q(5, 9));
  CHECK(euler_gamma_approx(5) == q(8149, 14400));
  // independent route: (ratio - 1/(s-1)) has a removable singularity at 1
  for (int m = 1; m <= 8; ++m) {
    RationalFunction reg = build_ratio(m).ratio - RationalFunction(ip({1}), kSm1);
    CHECK(reg.eval(q(1)) == euler_gamma_approx(m));
  }
  ExactRational prev = euler_gamma_approx(1);
  for (int m = 2; m <= 30; ++m) {
    ExactRational cur = euler_gamma_approx(m);
    CHECK(cur > prev);
    CHECK(cur < q(5773, 10000));
    prev = cur;
  }
}

TEST_CASE("full numerator carries the trivial zeros") {
  // (s + 2)(3s^2 + 10s + 11) / 12
  RatPolynomial expected = to_rational(ip({2, 1}) * ip({11, 10, 3})) * q(1, 12);
  CHECK(full_numerator_F(3) == expected);
  CHECK(full_numerator_F(1) == to_rational(ip({1, 1})) * q(1, 2));
}
