#include "doctest.h"
#include "zetaseq/hp.hpp"

using namespace zetaseq;
using hp::Real;

TEST_CASE("real arithmetic and precision") {
  Real a(1L, 128), b(3L, 128);
  Real third = a / b;
  CHECK(third.prec() == 128);
  CHECK(abs(third * 3L - Real(1L, 128)) < hp::exp2i(-126, 128));
  Real lo(64L, 64);
  CHECK((lo + third).prec() == 128);
  CHECK(Real::parse("0.25", 80) == Real(0.25, 80));
  CHECK_THROWS(Real::parse("abc", 64));
  CHECK(Real(0L, 64).to_string() == "0");
  CHECK(Real(1.5, 64).to_string(3) == "1.50e+00");
}

TEST_CASE("directed exponential brackets the value") {
  mpq_class q(1, 3);
  Real lo = hp::exp_directed(q, 100, MPFR_RNDD);
  Real hi = hp::exp_directed(q, 100, MPFR_RNDU);
  CHECK(lo < hi);
  Real mid = hp::exp(Real(q, 300));
  CHECK(lo <= mid);
  CHECK(mid <= hi);
  CHECK(hp::exp_directed(mpq_class(0), 64, MPFR_RNDD) == Real(1L, 64));
}

TEST_CASE("complex operations") {
  const hp::Bits P = 128;
  hp::Complex i(Real(0L, P), Real(1L, P));
  hp::Complex m1 = i * i;
  CHECK(m1.re() == Real(-1L, P));
  CHECK(m1.im().is_zero());
  hp::Complex z(3.0, 4.0, P);
  CHECK(hp::abs(z) == Real(5L, P));
  hp::Complex w = z / z;
  CHECK(abs(w.re() - Real(1L, P)) < hp::exp2i(-120, P));
  hp::Complex r = hp::sqrt(hp::Complex(-4.0, 0.0, P));
  CHECK(abs(r.im() - Real(2L, P)) < hp::exp2i(-120, P));
  // e^{i pi} = -1
  hp::Complex e = hp::exp(hp::Complex(Real(0L, P), hp::pi(P)));
  CHECK(abs(e.re() + Real(1L, P)) < hp::exp2i(-120, P));
  // 2^{1+i} = 2 e^{i ln 2}
  hp::Complex p = hp::pow(Real(2L, P), hp::Complex(1.0, 1.0, P));
  CHECK(abs(p.re() - hp::cos(hp::log(Real(2L, P))) * 2L) < hp::exp2i(-120, P));
}
