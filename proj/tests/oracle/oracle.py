# Reference values frozen into the unit tests. Run: python3 oracle.py
import mpmath as mp
from scipy import integrate
import numpy as np

mp.mp.dps = 40
jb = lambda x: mp.sqrt(1 + x * x)


def q(s, x, e):
    p = (x + e) / jb(x + e)
    if s == "++":
        return x * jb(e) / 2 + p / 4 * jb(x) * jb(e) + p / 4 * x * e
    if s == "+-":
        return -x * jb(e) / 2 + jb(x) * e / 2 - p / 2 * jb(x) * jb(e) + p / 2 * x * e
    return -x * jb(e) / 2 + p / 4 * jb(x) * jb(e) + p / 4 * x * e


def den(s, x, e):
    i1, i2 = {"++": (1, 1), "+-": (1, -1), "--": (-1, -1)}[s]
    return jb(x + e) - i1 * jb(x) - i2 * jb(e)


def bq(s, x, e):  # b / i
    return q(s, x, e) / den(s, x, e)


def c(t, x, e, s):
    if t == "++-":
        return (bq("++", e, x - e) * q("+-", e - s, s) + bq("++", x - e, e) * q("+-", e - s, s)
                + bq("+-", x - s, s) * q("++", x - e, e - s) + bq("+-", x - e, e) * q("+-", -s, s - e)
                + bq("--", x - s, s) * q("--", e - x, s - e) + bq("--", s, x - s) * q("--", e - x, s - e))
    if t == "+--":
        return (bq("++", e, x - e) * q("--", e - s, s) + bq("++", x - e, e) * q("--", e - s, s)
                + bq("+-", x - s, s) * q("+-", x - e, e - s) + bq("+-", x - e, e) * q("++", s - e, -s)
                + bq("--", x - s, s) * q("+-", s - e, e - x) + bq("--", s, x - s) * q("+-", s - e, e - x))
    if t == "+++":
        return (bq("++", e, x - e) * q("++", e - s, s) + bq("++", x - e, e) * q("++", e - s, s)
                + bq("+-", x - e, e) * q("--", s - e, -s))
    return (bq("+-", x - s, s) * q("--", x - e, e - s) + bq("--", x - s, s) * q("++", e - x, s - e)
            + bq("--", s, x - s) * q("++", e - x, s - e))


def c_star_closed(x):
    a, b = jb(x), jb(2 * x)
    return x * x * (2 * a - (2 * a + b) * (a * b + x * x + a * a) ** 2 / (6 * a * b)
                    + (a * b - a * a - x * x) ** 2 / (2 * (2 * a + b) * a * b))


def psi(t, x, e, s):
    i1, i2, i3 = [1 if ch == "+" else -1 for ch in t]
    return jb(x) - i1 * jb(x - e) - i2 * jb(e - s) - i3 * jb(s)


for s in ("++", "+-", "--"):
    for (x, e) in ((0.7, -1.3), (2.5, 0.4)):
        print(f"q{s}({x},{e}) = {mp.nstr(q(s, mp.mpf(x), mp.mpf(e)), 17)}  bq = {mp.nstr(bq(s, mp.mpf(x), mp.mpf(e)), 17)}")
for t in ("++-", "+--", "+++", "---"):
    print(f"c{t}(0.6,0.3,-0.8) = {mp.nstr(c(t, mp.mpf('0.6'), mp.mpf('0.3'), mp.mpf('-0.8')), 17)}"
          f"  psi = {mp.nstr(psi(t, mp.mpf('0.6'), mp.mpf('0.3'), mp.mpf('-0.8')), 17)}")
for x in ("0.5", "2"):
    x = mp.mpf(x)
    print(f"c_star({x}) closed = {mp.nstr(c_star_closed(x), 17)}  direct = {mp.nstr(c('++-', x, 0, -x), 17)}")

# free Klein-Gordon flow of f = exp(-x^2/4) at x = 0: (1/2pi) int 2 sqrt(pi) e^{-xi^2} e^{i t <xi>} dxi
for t in (0, 5, 20):
    v = mp.quad(lambda k: 2 * mp.sqrt(mp.pi) * mp.exp(-k * k) * mp.expj(t * jb(k)), [-mp.inf, 0, mp.inf]) / (2 * mp.pi)
    print(f"kg(t={t}) at x=0 = {mp.nstr(v.real, 17)} {mp.nstr(v.imag, 17)}")


# oscillatory integral with the quintic bump
def bump(r):
    r = abs(r)
    if r <= 1.25:
        return 1.0
    if r >= 1.6:
        return 0.0
    u = (1.6 - r) / 0.35
    return u ** 3 * (10 - 15 * u + 6 * u * u)


def quad_B4(lam, mu):
    pts = [1.25 * mu]
    inner = lambda x: 2 * integrate.quad(lambda y: bump(y / mu) * np.cos(lam * x * y), 0, 1.6 * mu,
                                         points=pts, limit=2000, epsabs=1e-16, epsrel=1e-14)[0]
    return 2 * integrate.quad(lambda x: bump(x / mu) * inner(x), 0, 1.6 * mu, points=pts, limit=2000,
                              epsabs=1e-16, epsrel=1e-14)[0]


for lam in (20.0, 40.0):
    I = quad_B4(lam, 2.0)
    print(f"B4 lambda={lam} mu=2: I = {I!r} err = {abs(I - 2 * np.pi / lam)!r}")
