#!/usr/bin/env python3
"""High-precision (mpmath, 40 digits) evaluation of the closed forms.

Values printed here are frozen into the C++ unit and acceptance tests. The
script is independent of the C++ implementation and is only needed when a
reference value has to be regenerated.
"""
from mpmath import mp, mpf, pi, asin, atan, sqrt, tan, quad, findroot, nstr

mp.dps = 40


def f(r):
    return r * (2 * r - 1) ** 2 / 2


def ext_iso(d, r):
    return d / 2 - (d * sqrt(r * r - d * d) + (asin(d / r) - atan(2 * d)) * r * r)


def theta_iso(d, r):
    return asin(d / r) - atan(2 * d)


def theta_max(a, r):
    return asin(a / r) - atan(a / (sqrt(r * r - a * a) + 1))


def oa_beta(theta, a):
    cot = 1 / tan(theta)
    oa = sqrt(((2 * a * cot + 1) - sqrt(1 - 4 * a * a + 4 * a * cot)) / 2)
    return oa, asin(a / oa)


def ob(d, r):
    return sqrt(4 * d * d + 1) / (1 - 2 * sqrt(r * r - d * d))


def delta1(r, a):
    return a * (1 - sqrt(4 * r * r + 4 * a * a * r * r - a * a)) / (2 * (a * a + 1))


def c(r, a):
    return a / (2 * asin(a / r))


def derived(a, r0, lam, literal=False):
    rl = lam * a + (1 - lam) * r0 if literal else lam * r0 + (1 - lam) * a
    d = delta1(rl, a)
    return rl, d, ob(d, rl)


def branches(r, rl):
    return [(1 + 2 * r) / (1 - 2 * r), (1 + 2 * rl) / (1 - 2 * rl), pi / (pi / 2 - atan(2 * r))]


def g(r, rl):
    return max(branches(r, rl))


def kinks(rl, lo, hi):
    gm = (1 + 2 * rl) / (1 - 2 * rl)
    third = lambda r: pi / (pi / 2 - atan(2 * r))
    first = lambda r: (1 + 2 * r) / (1 - 2 * r)
    k = []
    k1 = findroot(lambda r: third(r) - gm, (lo, hi), solver="bisect") if (third(lo) - gm) * (third(hi) - gm) < 0 else None
    k2 = findroot(lambda r: third(r) - first(r), (lo, hi), solver="bisect") if (third(lo) - first(lo)) * (third(hi) - first(hi)) < 0 else None
    return k1, k2


def integral(a, r0, rl):
    pts = [a] + sorted(x for x in kinks(rl, a, r0) + (rl,) if x is not None and a < x < r0) + [r0]
    return quad(lambda r: r / g(r, rl), pts)


def bounds(a, r0, p, lam, literal=False):
    rl, d, r1 = derived(a, r0, lam, literal)
    I = integral(a, r0, rl)
    ci = p / 3 * (1 - f(r0) / (2 * r0 ** 2)) * I + f(r0) / 4
    cii = (1 - p) / 4 * c(r1 - 1, a)
    K0, K1, K2 = f(r0) / 4, (1 - f(r0) / (2 * r0 ** 2)) * I / 3, c(r1 - 1, a) / 4
    pb = (K2 - K0) / (K1 + K2)
    return dict(r_lambda=rl, delta1=d, r1=r1, integral=I, case_i=ci, case_ii=cii,
                balanced_p=pb, balanced=pb * K1 + K0)


def show(name, v):
    print(f"{name:40s} {nstr(v, 20)}")


a = pi / 49
show("ext_iso(0.01,0.25)", ext_iso(mpf("0.01"), mpf("0.25")))
show("ext_iso(0.05,0.25)", ext_iso(mpf("0.05"), mpf("0.25")))
show("h(0.01,0.25)", ext_iso(mpf("0.01"), mpf("0.25")) / asin(mpf("0.01") / mpf("0.25")))
show("theta_iso(0.05,0.25)", theta_iso(mpf("0.05"), mpf("0.25")))
show("theta_max(pi/49,0.25)", theta_max(a, mpf("0.25")))
d0, r = mpf("0.05"), mpf("0.25")
show("jgamma ratio(0.05,0.25)", (2 * asin(d0 / r) - theta_iso(d0, r)) / theta_iso(d0, r))
oa, b1 = oa_beta(mpf("0.1"), a)
show("oa(0.1,pi/49)", oa)
show("beta1(0.1,pi/49)", b1)
B = bounds(a, mpf("0.25"), mpf("0.9"), mpf("0.9"))
for k, v in B.items():
    show("theorem." + k, v)
show("theorem.half_a", a / (2 * pi))
show("c(r1-1,a)", c(B["r1"] - 1, a))
show("outcir(pi, r1-1, a)/pi", c(B["r1"] - 1, a) / 4)
rl = B["r_lambda"]
show("g(0.2)", g(mpf("0.2"), rl))
show("g(0.25)", g(mpf("0.25"), rl))
k1, k2 = kinks(rl, a, mpf("0.25"))
show("kink third=mid", k1)
show("kink third=first", k2)
show("cross_section(0.9,0.2)", mpf("0.9") * pi / 3 * mpf("0.2") / g(mpf("0.2"), rl))
L = bounds(a, mpf("0.25"), mpf("0.9"), mpf("0.9"), literal=True)
for k, v in L.items():
    show("literal." + k, v)
S = bounds(mpf("0.06473"), mpf("0.22785"), mpf("0.88794"), mpf("0.90696"))
for k, v in S.items():
    show("sec41." + k, v)
show("sec41.half_a", mpf("0.06473") / (2 * pi))
show("cunningham 1/108", mpf(1) / 108)
show("upper (5-2sqrt2)/24", (5 - 2 * sqrt(2)) / 24)
show("ob(0,0.25)", ob(mpf(0), mpf("0.25")))
