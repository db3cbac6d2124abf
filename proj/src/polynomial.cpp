#include "zetaseq/polynomial.hpp"

#include <algorithm>
#include <stdexcept>

namespace zetaseq {

std::pair<RatPolynomial, RatPolynomial> divmod(const RatPolynomial& a, const RatPolynomial& b) {
  if (b.is_zero()) throw std::domain_error("polynomial division by zero");
  if (a.degree() < b.degree()) return {RatPolynomial{}, a};
  std::vector<ExactRational> rem = a.coeffs();
  std::vector<ExactRational> quo(a.degree() - b.degree() + 1);
  const auto& bc = b.coeffs();
  const int db = b.degree();
  for (int i = a.degree() - db; i >= 0; --i) {
    ExactRational q = rem[i + db] / bc[db];
    quo[i] = q;
    if (q == 0) continue;
    for (int j = 0; j <= db; ++j) rem[i + j] -= q * bc[j];
  }
  rem.resize(db);
  return {RatPolynomial(std::move(quo)), RatPolynomial(std::move(rem))};
}

RatPolynomial exact_div(const RatPolynomial& a, const RatPolynomial& b) {
  auto [q, r] = divmod(a, b);
  if (!r.is_zero()) throw std::domain_error("inexact polynomial division");
  return q;
}

IntPolynomial exact_div(const IntPolynomial& a, const IntPolynomial& b) {
  if (b.is_zero()) throw std::domain_error("polynomial division by zero");
  if (a.is_zero()) return {};
  if (a.degree() < b.degree()) throw std::domain_error("inexact polynomial division");
  std::vector<BigInt> rem = a.coeffs();
  std::vector<BigInt> quo(a.degree() - b.degree() + 1);
  const auto& bc = b.coeffs();
  const int db = b.degree();
  for (int i = a.degree() - db; i >= 0; --i) {
    if (rem[i + db] == 0) continue;
    if (!mpz_divisible_p(rem[i + db].get_mpz_t(), bc[db].get_mpz_t()))
      throw std::domain_error("inexact polynomial division");
    BigInt q;
    mpz_divexact(q.get_mpz_t(), rem[i + db].get_mpz_t(), bc[db].get_mpz_t());
    quo[i] = q;
    for (int j = 0; j <= db; ++j) rem[i + j] -= q * bc[j];
  }
  for (int j = 0; j < db; ++j)
    if (rem[j] != 0) throw std::domain_error("inexact polynomial division");
  return IntPolynomial(std::move(quo));
}

BigInt content(const IntPolynomial& p) {
  BigInt g = 0;
  for (const auto& c : p.coeffs()) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

IntPolynomial primitive_part(const IntPolynomial& p) {
  if (p.is_zero()) return {};
  BigInt g = content(p);
  if (p.leading() < 0) g = -g;
  std::vector<BigInt> c = p.coeffs();
  for (auto& v : c) mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), g.get_mpz_t());
  return IntPolynomial(std::move(c));
}

IntPolynomial pseudo_remainder(const IntPolynomial& a, const IntPolynomial& b) {
  if (b.is_zero()) throw std::domain_error("pseudo-division by zero");
  if (a.degree() < b.degree()) return a;
  std::vector<BigInt> r = a.coeffs();
  const auto& bc = b.coeffs();
  const int db = b.degree();
  const BigInt& lb = bc[db];
  int e = a.degree() - db + 1;
  for (int top = a.degree(); top >= db; --top) {
    BigInt lr = r[top];
    // r <- lb*r - lr*x^(top-db)*b
    for (int i = 0; i <= top; ++i) r[i] *= lb;
    if (lr != 0) {
      for (int j = 0; j <= db; ++j) r[top - db + j] -= lr * bc[j];
    }
    --e;
  }
  r.resize(db);
  IntPolynomial out(std::move(r));
  if (e > 0) {
    BigInt f;
    mpz_pow_ui(f.get_mpz_t(), lb.get_mpz_t(), static_cast<unsigned long>(e));
    out *= f;
  }
  return out;
}

IntPolynomial gcd(const IntPolynomial& a0, const IntPolynomial& b0) {
  if (a0.is_zero()) return primitive_part(b0) * content(b0);
  if (b0.is_zero()) return primitive_part(a0) * content(a0);
  IntPolynomial a = a0, b = b0;
  if (a.degree() < b.degree()) std::swap(a, b);
  BigInt ca = content(a), cb = content(b), d;
  mpz_gcd(d.get_mpz_t(), ca.get_mpz_t(), cb.get_mpz_t());
  a = primitive_part(a);
  b = primitive_part(b);
  BigInt g = 1, h = 1;
  while (true) {
    const int delta = a.degree() - b.degree();
    IntPolynomial r = pseudo_remainder(a, b);
    if (r.is_zero()) break;
    if (r.degree() == 0) {
      b = IntPolynomial::constant(1);
      break;
    }
    a = b;
    BigInt hd;
    mpz_pow_ui(hd.get_mpz_t(), h.get_mpz_t(), static_cast<unsigned long>(delta));
    BigInt div = g * hd;
    std::vector<BigInt> rc = r.coeffs();
    for (auto& v : rc) mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), div.get_mpz_t());
    b = IntPolynomial(std::move(rc));
    g = a.leading();
    // h <- g^delta / h^(delta-1)
    BigInt gd;
    mpz_pow_ui(gd.get_mpz_t(), g.get_mpz_t(), static_cast<unsigned long>(delta));
    if (delta == 0) {
      // h unchanged: h^1 * g^0
    } else {
      BigInt hd1;
      mpz_pow_ui(hd1.get_mpz_t(), h.get_mpz_t(), static_cast<unsigned long>(delta - 1));
      mpz_divexact(h.get_mpz_t(), gd.get_mpz_t(), hd1.get_mpz_t());
    }
  }
  return primitive_part(b) * d;
}

std::pair<BigInt, IntPolynomial> clear_denominators(const RatPolynomial& p) {
  BigInt l = 1;
  for (const auto& c : p.coeffs()) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den_mpz_t());
  std::vector<BigInt> out(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) {
    const auto& c = p.coeffs()[i];
    BigInt t;
    mpz_divexact(t.get_mpz_t(), l.get_mpz_t(), c.get_den_mpz_t());
    out[i] = t * c.get_num();
  }
  return {l, IntPolynomial(std::move(out))};
}

RatPolynomial to_rational(const IntPolynomial& p) {
  std::vector<ExactRational> c(p.coeffs().begin(), p.coeffs().end());
  return RatPolynomial(std::move(c));
}

RatPolynomial interpolate(const std::vector<ExactRational>& xs, const std::vector<ExactRational>& ys) {
  if (xs.size() != ys.size()) throw std::invalid_argument("interpolate: size mismatch");
  const std::size_t n = xs.size();
  std::vector<ExactRational> dd = ys;
  for (std::size_t k = 1; k < n; ++k) {
    for (std::size_t i = n - 1; i >= k; --i) {
      ExactRational den = xs[i] - xs[i - k];
      if (den == 0) throw std::invalid_argument("interpolate: repeated node");
      dd[i] = (dd[i] - dd[i - 1]) / den;
    }
  }
  // Horner on the Newton form
  RatPolynomial p;
  for (std::size_t k = n; k-- > 0;) {
    p = p * RatPolynomial::linear(-xs[k], ExactRational(1)) + RatPolynomial::constant(dd[k]);
  }
  return p;
}

}  // namespace zetaseq
