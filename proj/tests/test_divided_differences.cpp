#include "doctest.h"
#include "zetaseq/divided_differences.hpp"
#include "zetaseq/exact_core.hpp"

using namespace zetaseq;

namespace {

ExactRational q(long n, long d = 1) {
  ExactRational r(n, d);
  r.canonicalize();
  return r;
}

}  // namespace

TEST_CASE("small values") {
  CHECK(eval_p(3, q(1)) == 0);
  CHECK(eval_p(2, q(-1)) == 3);
  CHECK(eval_p(0, q(5, 3)) == 1);
  CHECK(delta(1, 0, q(1, 2)) == q(1, 2));
  CHECK(delta(5, 7, q(1, 3)) == 0);
  CHECK(delta_tilde(0, 0, q(7, 3), q(2, 9)) == 1);
  CHECK(verify_tilde_recurrence(1, 0, q(0), q(1, 2)));
  CHECK(verify_tilde_recurrence(4, 2, q(1, 3), q(2, 3)));
  CHECK(verify_tilde_recurrence(3, 3, q(0), q(1)));
  CHECK(verify_pest_recurrence(1, 0, q(1, 2)));
  CHECK(verify_pest_recurrence(6, 3, q(1, 7)));
  CHECK(verify_pest_recurrence(3, 0, q(1)));
  CHECK(kernel_f(6, q(1)) == q(1, 7));
  CHECK(delta(1, 1, q(2, 7)) == q(2, 7));
  CHECK(delta(1, 0, q(1, 3)) == q(2, 3));
  CHECK(delta(3, 4, q(1, 2)) == 0);
  CHECK(kernel_f(1, q(1, 2)) == q(3, 4));
  CHECK(kernel_f(0, q(1, 2)) == 1);
  CHECK(kernel_f_tilde(2, 1, q(0)) == q(1, 2));
  CHECK(delta_tilde(2, 0, q(0), q(1, 2)) == q(3, 4));
  CHECK(eval_p(3, q(3)) == 0);
}

TEST_CASE("delta polynomials agree with pointwise values") {
  for (int m = 0; m <= 8; ++m)
    for (int k = 0; k <= m; ++k)
      for (int i = 0; i <= 6; ++i) CHECK(delta_polynomial(m, k).eval(q(i, 6)) == delta(m, k, q(i, 6)));
  auto row = delta_row(6, q(2, 5));
  for (int k = 0; k <= 6; ++k) CHECK(row[k] == delta(6, k, q(2, 5)));
}

TEST_CASE("partition of unity and falling sums") {
  for (int m = 0; m <= 15; ++m) {
    CHECK(verify_partition_of_unity(m));
    for (int j = 0; j <= 4; ++j) CHECK(verify_falling_sum(m, j));
  }
}

TEST_CASE("shifted recurrence") {
  for (int m = 1; m <= 7; ++m)
    for (int k = 0; k <= m; ++k)
      for (auto v : {q(0), q(1, 2), q(3, 2)})
        for (auto x : {q(0), q(1, 3), q(1)}) CHECK(verify_tilde_recurrence(m, k, v, x));
  // at v = 0 the shifted difference is m! times the plain one
  CHECK(delta_tilde(5, 2, q(0), q(2, 9)) == 120 * delta(5, 2, q(2, 9)));
}

TEST_CASE("kernel polynomial form matches the difference sum") {
  for (int m = 0; m <= 12; ++m) {
    auto poly = kernel_f_polynomial(m);
    for (int i = 0; i <= 5; ++i) CHECK(poly.eval(q(i, 5)) == kernel_f(m, q(i, 5)));
  }
}

TEST_CASE("kernel recurrence and domination") {
  for (int m = 1; m <= 10; ++m) {
    for (int p = 0; p <= 3; ++p) CHECK(verify_pest_recurrence(m, p, q(3, 7)));
    for (int i = 0; i <= 8; ++i) CHECK(verify_domination(m, q(i, 8)));
  }
}

TEST_CASE("positivity scan") {
  auto one = positivity_scan(1, 4);
  CHECK(one.minimum.value == 0);
  CHECK(one.minimum.k == 1);
  CHECK(one.minimum.x == 0);
  CHECK(positivity_scan(10, 100).passed());
  auto zero = positivity_scan(0, 7, {true});
  for (const auto& c : zero.cells) CHECK(c.value == 1);
  for (int m : {0, 1, 5, 12}) {
    auto rep = positivity_scan(m, 40);
    CHECK(rep.passed());
    CHECK(rep.cells_checked == 41L * (m + 1));
    CHECK(rep.minimum.value >= 0);
  }
  PositivityOptions opts;
  opts.scan_tilde = true;
  opts.keep_cells = true;
  auto rep = positivity_scan(4, 8, opts);
  CHECK(rep.passed());
  CHECK(rep.tilde_cells_checked == 5L * 9 * 9);
  CHECK(rep.cells.size() == 45);
}

TEST_CASE("square-free factors and root counting") {
  // (x - 1/2)^2 (x - 1/3)
  RatPolynomial a = RatPolynomial::linear(q(-1, 2), q(1));
  RatPolynomial b = RatPolynomial::linear(q(-1, 3), q(1));
  RatPolynomial p = a * a * b;
  auto f = squarefree_factors(p);
  REQUIRE(f.size() == 2);
  CHECK(f[0] == b);
  CHECK(f[1] == a);
  CHECK(count_roots_open(p, q(0), q(1)) == 2);
  CHECK(count_roots_open(p, q(0), q(2, 5)) == 1);
  CHECK(count_roots_open(p, q(1, 3), q(1, 2)) == 0);
}

TEST_CASE("sturm certificates") {
  for (int m = 0; m <= 10; ++m)
    for (int k = 0; k <= m; ++k) {
      auto c = sturm_certify_delta(m, k);
      CAPTURE(m);
      CAPTURE(k);
      CHECK(c.certified_nonnegative());
      CHECK(c.interior_sign == 1);
    }
  // 1 - 2x changes sign on (0, 1)
  CHECK(count_roots_open(RatPolynomial::linear(q(1), q(-2)), q(0), q(1)) == 1);
}

TEST_CASE("envelope bounds") {
  auto r = envelope_check(1, {q(1)});
  CHECK(r.passed());
  auto z = envelope_check(0, {q(0)});
  CHECK(z.passed());
  for (const auto& c : z.checks) CHECK(c.margin.is_zero());
  for (int m : {2, 7, 20}) {
    auto rep = envelope_check(m, unit_grid(20));
    CHECK(rep.passed());
    CHECK_FALSE(rep.inconclusive());
  }
}
