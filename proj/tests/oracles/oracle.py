#!/usr/bin/env python3
"""Independent reference values for the test suites.

Uses only fractions (exact) and mpmath (numeric); shares no code with the
C++ library. Run once; the printed numbers are frozen into the tests.
"""
from fractions import Fraction as Q
from math import comb
import mpmath as mp
import sympy as sp

s = sp.symbols("s")


def a_coeffs(m):
    # expand prod (1 - t/i)
    c = [Q(1)]
    for i in range(1, m + 1):
        nc = [Q(0)] * (len(c) + 1)
        for j, v in enumerate(c):
            nc[j] += v
            nc[j + 1] -= v / i
        c = nc
    return [(-1) ** j * v for j, v in enumerate(c)]


def bern(n):
    B = [Q(1)]
    for k in range(1, n + 1):
        B.append(-sum(comb(k + 1, i) * B[i] for i in range(k)) / (k + 1))
    return B


def F(m):
    a, B = a_coeffs(m), bern(m)
    return sp.together(sum(sp.Rational(a[j] * B[j]) / (s + j - 1) for j in range(m + 1)))


def G(m):
    a = a_coeffs(m)
    return sp.together(sum(sp.Rational((-1) ** j * a[j]) / (s + j - 1) for j in range(m + 1)))


def ratio(m):
    return sp.factor(sp.cancel(F(m) / ((s - 1) * G(m))))


def full_num(m):
    d = 1
    for j in range(m + 1):
        d *= s + j - 1
    return sp.Poly(sp.cancel(F(m) * d), s)


print("== golden ratios")
for m in range(5):
    print(m, ratio(m))
print("ratio_3(2) =", ratio(3).subs(s, 2), " ratio_4(2) =", ratio(4).subs(s, 2))
print("F_3 =", sp.factor(F(3)), "  G_3 =", sp.factor(G(3)))

print("== euler gamma approximants")
for m in (1, 2, 3, 5, 10):
    r = ratio(m)
    e = sp.limit(r - 1 / (s - 1), s, 1)
    print(m, e, sp.N(e, 20))

print("== full numerators (F_m * prod(s+j-1))")
for m in (1, 2, 3, 5):
    print(m, full_num(m).as_expr(), "  factored:", sp.factor(full_num(m).as_expr()))

mp.mp.prec = 256
print("== zeros / spectra")
for m in range(1, 13):
    P = full_num(m)
    cs = [mp.mpf(sp.Rational(c).p) / sp.Rational(c).q for c in P.all_coeffs()]
    roots = mp.polyroots(cs, maxsteps=500, extraprec=600)
    # strip trivial zeros -2r by exact division
    expr = P.as_expr()
    trivial = []
    r = 1
    while True:
        q, rem = sp.div(sp.Poly(expr, s), sp.Poly(s + 2 * r, s))
        if rem.is_zero and 2 * r <= m + 1:
            trivial.append(-2 * r)
            expr = q.as_expr()
            r += 1
        else:
            break
    nt = sp.Poly(expr, s)
    ntc = [mp.mpf(sp.Rational(c).p) / sp.Rational(c).q for c in nt.all_coeffs()]
    ntr = mp.polyroots(ntc, maxsteps=500, extraprec=600) if nt.degree() > 0 else []
    maxre = max((mp.re(x) for x in ntr), default=None)
    # matrix I + L^-1 U
    n = m + 1
    L = mp.matrix(n, n)
    U = mp.matrix(n, n)
    for i in range(n):
        for j in range(n):
            if i >= j:
                L[i, j] = mp.mpf(1) / (i - j + 1)
            if j > i:
                U[i, j] = mp.mpf(1) / j
    M = mp.eye(n) + mp.inverse(L) * U
    ev = mp.eig(M, left=False, right=False)
    rho = max(abs(x) for x in ev)
    maxz = max(abs(x / (x - 1)) for x in roots)
    print(m, "trivial", trivial, "maxRe", mp.nstr(maxre, 25) if maxre is not None else None,
          "rho", mp.nstr(rho, 25), "max|z(roots)|", mp.nstr(maxz, 25))

mp.mp.prec = 192
print("== convergence")


def eval_FG(m, sv):
    Fv = [1 / (sv - 1)]
    Gv = [1 / (sv - 1)]
    for k in range(1, m + 1):
        acc = mp.mpf(1) / (k + 1)
        accg = mp.mpf(0)
        for j in range(1, k + 1):
            acc += (k + 1) * Fv[k - j] / (j * (j + 1))
            accg += (k + 1) * Gv[k - j] / (j * (j + 1))
        Fv.append(acc / (sv + k - 1))
        Gv.append(accg / (sv + k - 1))
    return Fv[m], Gv[m]


def hm(m):
    return sum(mp.mpf(1) / j for j in range(1, m + 1))


for sv in (mp.mpf(2), mp.mpf(3), mp.mpf(0.5)):
    z = mp.zeta(sv)
    for m in (3, 4, 8, 16, 32, 64, 128, 256):
        Fm, Gm = eval_FG(m, sv)
        r = Fm / ((sv - 1) * Gm)
        sc = mp.power(hm(m), sv - 1) * (sv - 1) * Fm
        tgt = (sv - 1) * mp.gamma(sv) * z
        print(mp.nstr(sv, 3), m, "ratio_err", mp.nstr(abs(r - z), 12), "scaled_err", mp.nstr(abs(sc - tgt), 12))
print("zeta(1/2) =", mp.nstr(mp.zeta(0.5), 30))
print("target s=1/2:", mp.nstr(-0.5 * mp.gamma(0.5) * mp.zeta(0.5), 20))

print("== kernel gap")


def f_poly(m):
    a, B = a_coeffs(m), bern(m)
    return [a[j] * B[j] for j in range(m + 1)]


def f_direct(m, x):
    # sum_k Delta_{m,k}(x)/(k+1) from the definition
    def p(t):
        v = Q(1)
        for i in range(1, m + 1):
            v *= 1 - t / i
        return v
    pv = [p((r + 1) * x) for r in range(m + 1)]
    tot = Q(0)
    for k in range(m + 1):
        d = sum(comb(k, r) * (-1) ** r * pv[r] for r in range(k + 1))
        tot += d / (k + 1)
    return tot


for m in (1, 2, 5, 9):
    for x in (Q(1, 3), Q(7, 10)):
        c = f_poly(m)
        assert f_direct(m, x) == sum(cj * x ** j for j, cj in enumerate(c))
print("f_m polynomial form agrees with direct sum for small m")

for m, N in ((16, 200), (64, 200), (256, 200)):
    c = f_poly(m)
    h = sum(Q(1, j) for j in range(1, m + 1))
    best, arg = mp.mpf(0), 0
    for i in range(N + 1):
        y = Q(i, N)
        fv = sum(cj * y ** j for j, cj in enumerate(c))
        x = mp.mpf(h.numerator) / h.denominator * i / N
        k = mp.mpf(1) if i == 0 else x / mp.expm1(x)
        g = abs(mp.mpf(fv.numerator) / fv.denominator - k)
        if g > best:
            best, arg = g, i
    hmf = mp.mpf(h.numerator) / h.denominator
    print("m", m, "sup", mp.nstr(best, 15), "at i", arg, "ratio", mp.nstr(best / (hmf / m), 15))
