#include "zetaseq/eigen.hpp"

#include <algorithm>
#include <string>

#include "zetaseq/errors.hpp"

namespace zetaseq {

using hp::Complex;
using hp::Real;

ComplexMatrix::ComplexMatrix(int n, hp::Bits prec)
    : n_(n), prec_(prec), a_(static_cast<std::size_t>(n) * n, Complex(prec)) {}

namespace {

// |re| + |im|, cheap magnitude for pivoting and balancing.
Real mag1(const Complex& z) { return abs(z.re()) + abs(z.im()); }

Complex cscale(const Complex& z, const Real& r) { return z * r; }

ComplexMatrix with_prec(const ComplexMatrix& A, hp::Bits prec) {
  ComplexMatrix B(A.size(), prec);
  for (int i = 0; i < A.size(); ++i)
    for (int j = 0; j < A.size(); ++j) B(i, j) = A(i, j).with_prec(prec);
  return B;
}

// Parlett-Reinsch balancing with powers of two.
void balance(ComplexMatrix& A) {
  const int n = A.size();
  bool done = false;
  while (!done) {
    done = true;
    for (int i = 0; i < n; ++i) {
      Real c(0L, A.prec()), r(0L, A.prec());
      for (int j = 0; j < n; ++j) {
        if (j == i) continue;
        c += mag1(A(j, i));
        r += mag1(A(i, j));
      }
      if (c.is_zero() || r.is_zero()) continue;
      const Real s = c + r;
      long e = 0;
      while (c < r / 2L) {
        c *= 4L;
        ++e;
      }
      while (c > r * 2L) {
        c /= 4L;
        --e;
      }
      if (e == 0) continue;
      Real f = hp::exp2i(e, A.prec());
      if ((c + r) / f * 100L < s * 95L) {
        done = false;
        Real fi = hp::exp2i(-e, A.prec());
        for (int j = 0; j < n; ++j) A(i, j) = cscale(A(i, j), fi);
        for (int j = 0; j < n; ++j) A(j, i) = cscale(A(j, i), f);
      }
    }
  }
}

void to_hessenberg(ComplexMatrix& H) {
  const int n = H.size();
  const hp::Bits P = H.prec();
  for (int k = 0; k + 2 < n; ++k) {
    Real tail(0L, P);
    for (int i = k + 2; i < n; ++i) tail += norm(H(i, k));
    if (tail.is_zero()) continue;
    Real xnorm = sqrt(tail + norm(H(k + 1, k)));
    const Complex& x0 = H(k + 1, k);
    Complex phase = x0.is_zero() ? Complex(Real(1L, P), Real(0L, P)) : x0 / abs(x0);
    std::vector<Complex> v(n - k - 1, Complex(P));
    v[0] = x0 + phase * xnorm;
    for (int i = k + 2; i < n; ++i) v[i - k - 1] = H(i, k);
    Real vv(0L, P);
    for (const auto& z : v) vv += norm(z);
    // H <- (I - 2 v v^* / v^*v) H
    for (int j = 0; j < n; ++j) {
      Complex dot(P);
      for (int i = k + 1; i < n; ++i) dot += conj(v[i - k - 1]) * H(i, j);
      dot = dot * 2L / vv;
      for (int i = k + 1; i < n; ++i) H(i, j) -= v[i - k - 1] * dot;
    }
    // H <- H (I - 2 v v^* / v^*v)
    for (int i = 0; i < n; ++i) {
      Complex dot(P);
      for (int j = k + 1; j < n; ++j) dot += H(i, j) * v[j - k - 1];
      dot = dot * 2L / vv;
      for (int j = k + 1; j < n; ++j) H(i, j) -= dot * conj(v[j - k - 1]);
    }
    for (int i = k + 2; i < n; ++i) H(i, k) = Complex(P);
  }
}

struct Rotation {
  Real c;
  Complex s;
};

// G = [[c, s], [-conj(s), c]] with G (a, b)^T = (r, 0).
Rotation givens(const Complex& a, const Complex& b) {
  const hp::Bits P = a.prec();
  if (b.is_zero()) return {Real(1L, P), Complex(P)};
  if (a.is_zero()) return {Real(0L, P), Complex(Real(1L, P), Real(0L, P))};
  Real aa = abs(a);
  Real r = sqrt(norm(a) + norm(b));
  return {aa / r, (a / aa) * conj(b) / r};
}

Complex wilkinson_shift(const ComplexMatrix& H, int hi) {
  const Complex& a = H(hi - 1, hi - 1);
  const Complex& b = H(hi - 1, hi);
  const Complex& c = H(hi, hi - 1);
  const Complex& d = H(hi, hi);
  Complex half = (a - d) / 2L;
  Complex disc = hp::sqrt(half * half + b * c);
  Complex mid = (a + d) / 2L;
  Complex l1 = mid + disc, l2 = mid - disc;
  return norm(l1 - d) <= norm(l2 - d) ? l1 : l2;
}

std::vector<Complex> hessenberg_eigenvalues(ComplexMatrix H) {
  const int n = H.size();
  const hp::Bits P = H.prec();
  const Real eps = hp::exp2i(-static_cast<long>(P) + 4, P);
  std::vector<Complex> eig(n, Complex(P));
  int hi = n - 1;
  int iter = 0;
  while (hi >= 0) {
    int l = hi;
    while (l > 0) {
      Real scale = mag1(H(l - 1, l - 1)) + mag1(H(l, l));
      if (scale.is_zero()) scale = Real(1L, P);
      if (mag1(H(l, l - 1)) <= eps * scale) {
        H(l, l - 1) = Complex(P);
        break;
      }
      --l;
    }
    if (l == hi) {
      eig[hi] = H(hi, hi);
      --hi;
      iter = 0;
      continue;
    }
    if (++iter > 200) throw ConvergenceError("QR iteration did not converge at index " + std::to_string(hi));
    Complex mu = (iter % 11 == 0) ? H(hi, hi) + Complex(mag1(H(hi, hi - 1))) : wilkinson_shift(H, hi);
    for (int k = l; k <= hi; ++k) H(k, k) -= mu;
    std::vector<Rotation> rot;
    for (int k = l; k < hi; ++k) {
      Rotation g = givens(H(k, k), H(k + 1, k));
      for (int j = k; j <= hi; ++j) {
        Complex x = H(k, j), y = H(k + 1, j);
        H(k, j) = x * g.c + g.s * y;
        H(k + 1, j) = y * g.c - conj(g.s) * x;
      }
      rot.push_back(std::move(g));
    }
    for (int k = l; k < hi; ++k) {
      const Rotation& g = rot[k - l];
      const int top = std::min(k + 2, hi);
      for (int i = l; i <= top; ++i) {
        Complex x = H(i, k), y = H(i, k + 1);
        H(i, k) = x * g.c + y * conj(g.s);
        H(i, k + 1) = y * g.c - x * g.s;
      }
    }
    for (int k = l; k <= hi; ++k) H(k, k) += mu;
  }
  return eig;
}

// Solves (A - lambda I) x = b by LU with partial pivoting; tiny pivots are
// nudged so that inverse iteration can proceed at an exact eigenvalue.
std::vector<Complex> shifted_solve(const ComplexMatrix& A, const Complex& lambda, std::vector<Complex> b) {
  const int n = A.size();
  const hp::Bits P = A.prec();
  ComplexMatrix M = A;
  Real anorm(0L, P);
  for (int i = 0; i < n; ++i) {
    M(i, i) -= lambda;
    for (int j = 0; j < n; ++j) anorm = hp::max(anorm, mag1(A(i, j)));
  }
  if (anorm.is_zero()) anorm = Real(1L, P);
  const Real tiny = anorm * hp::exp2i(-static_cast<long>(P), P);
  for (int k = 0; k < n; ++k) {
    int piv = k;
    for (int i = k + 1; i < n; ++i)
      if (mag1(M(i, k)) > mag1(M(piv, k))) piv = i;
    if (piv != k) {
      for (int j = 0; j < n; ++j) std::swap(M(k, j), M(piv, j));
      std::swap(b[k], b[piv]);
    }
    if (mag1(M(k, k)) < tiny) M(k, k) = Complex(tiny);
    for (int i = k + 1; i < n; ++i) {
      Complex f = M(i, k) / M(k, k);
      if (f.is_zero()) continue;
      for (int j = k; j < n; ++j) M(i, j) -= f * M(k, j);
      b[i] -= f * b[k];
    }
  }
  for (int i = n - 1; i >= 0; --i) {
    Complex acc = b[i];
    for (int j = i + 1; j < n; ++j) acc -= M(i, j) * b[j];
    b[i] = acc / M(i, i);
  }
  return b;
}

Real vec_norm(const std::vector<Complex>& v) {
  Real s(0L, v.empty() ? 64 : v[0].prec());
  for (const auto& z : v) s += norm(z);
  return sqrt(s);
}

void normalize(std::vector<Complex>& v) {
  Real nv = vec_norm(v);
  for (auto& z : v) z /= nv;
}

}  // namespace

Real eigen_residual(const ComplexMatrix& A, const Complex& lambda, const std::vector<Complex>& v) {
  const int n = A.size();
  const hp::Bits P = A.prec();
  std::vector<Complex> r(n, Complex(P));
  for (int i = 0; i < n; ++i) {
    Complex acc = -(lambda * v[i]);
    for (int j = 0; j < n; ++j) acc += A(i, j) * v[j];
    r[i] = acc;
  }
  return vec_norm(r) / vec_norm(v);
}

std::vector<EigenPair> eigen_solve(const ComplexMatrix& A) {
  const int n = A.size();
  const hp::Bits P = A.prec();
  const hp::Bits W = P + 64;
  if (n == 0) return {};
  ComplexMatrix Aw = with_prec(A, W);
  ComplexMatrix H = Aw;
  balance(H);
  to_hessenberg(H);
  std::vector<Complex> values = hessenberg_eigenvalues(H);

  std::vector<EigenPair> out;
  for (auto& lambda : values) {
    std::vector<Complex> v(n, Complex(W));
    for (int i = 0; i < n; ++i) v[i] = Complex(Real(1L, W) + Real(static_cast<long>(i), W) / (3L * n + 7), Real(0L, W));
    for (int it = 0; it < 3; ++it) {
      v = shifted_solve(Aw, lambda, v);
      normalize(v);
    }
    Real res = eigen_residual(Aw, lambda, v);
    for (int it = 0; it < 2; ++it) {
      Complex num(W);
      for (int i = 0; i < n; ++i) {
        Complex av(W);
        for (int j = 0; j < n; ++j) av += Aw(i, j) * v[j];
        num += conj(v[i]) * av;
      }
      Complex cand = num;  // v has unit norm
      Real cres = eigen_residual(Aw, cand, v);
      if (!(cres < res)) break;
      lambda = cand;
      res = cres;
      v = shifted_solve(Aw, lambda, v);
      normalize(v);
    }
    EigenPair p{lambda.with_prec(P), {}, Real(P)};
    p.vector.reserve(n);
    for (auto& z : v) p.vector.push_back(z.with_prec(P));
    p.residual = eigen_residual(Aw, p.value.with_prec(W), v).with_prec(P);
    out.push_back(std::move(p));
  }
  std::sort(out.begin(), out.end(), [](const EigenPair& a, const EigenPair& b) {
    Real ma = abs(a.value), mb = abs(b.value);
    if (!(ma == mb)) return ma > mb;
    if (!(a.value.re() == b.value.re())) return a.value.re() < b.value.re();
    return a.value.im() < b.value.im();
  });
  return out;
}

}  // namespace zetaseq
