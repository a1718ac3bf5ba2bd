"""High-precision reference values used to freeze expected numbers in the C++ tests.

Independent of the C++ implementation: mpmath quadrature / root finding only.
"""
from mpmath import mp, mpf, pi, sqrt, exp, cos, quad, besselj, polyroots, findroot, inf

mp.dps = 40

pf = [20812, 756, 1107, -216]
pfh = [20812, 5940, -2781, 216]
pg_fact = None  # (13-u)(1075+220u+69u^2)
pg = [13 * 1075, 13 * 220 - 1075, 13 * 69 - 220, -69]
pgh = [401 * 49, 69 * 49 - 401 * 14, 401 - 69 * 14, 69]


def ev(c, u):
    return sum(mpf(ci) * u**i for i, ci in enumerate(c))


def radial(c, r):
    return ev(c, 2 * pi * r * r) * exp(-pi * r * r)


def hankel2d(c, t):
    # 2-D Fourier transform of a radial function: 2*pi * int f(r) J0(2 pi r t) r dr
    return 2 * pi * quad(lambda r: radial(c, r) * besselj(0, 2 * pi * r * t) * r, [0, 2, 4, 8])


print("pg", pg, "pgh", pgh)
for t in [mpf(0), mpf("0.3"), mpf("0.7"), mpf(1), mpf("1.5")]:
    print("fhat check t=", t, hankel2d(pf, t), radial(pfh, t))
    print("ghat check t=", t, hankel2d(pg, t), radial(pgh, t))

rstar = (mpf(4) / 3) ** mpf("0.25")
print("(4/3)^(1/4)", rstar)
print("u* = 2pi sqrt(4/3)", 2 * pi * sqrt(mpf(4) / 3))
print("f(r*)", radial(pf, rstar), "-3f(r*)", -3 * radial(pf, rstar))
print("g(r*)", radial(pg, rstar))
print("quotient", (ev(pgh, 0) - ev(pg, 0)) / radial(pg, rstar))
print("f(1.2)", radial(pf, mpf("1.2")))
print("root of p_f", [r for r in polyroots(pf[::-1] and list(reversed(pf)), maxsteps=200, extraprec=200)])
print("2pi 1.084^2", 2 * pi * mpf("1.084") ** 2, "p_f there", ev(pf, 2 * pi * mpf("1.084") ** 2))
print("lp bound pi*0.542^2", pi * mpf("0.542") ** 2)
print("hex density pi/sqrt12", pi / sqrt(12))
print("perturbed (1/10,0,0) density", pi / 4 * 2 / sqrt(mpf("3.2")))
print("atmost6 lhs", (2 * mpf("1.114") ** 2 - sqrt(mpf(4) / 3)) / (2 * sqrt(mpf(4) / 3)))
print("atmost6 lhs with 1.3", (2 * mpf("1.3") ** 2 - sqrt(mpf(4) / 3)) / (2 * sqrt(mpf(4) / 3)))
print("cos(2pi 0.152)", cos(2 * pi * mpf("0.152")))
print("1.467^2 cos(2pi .152)", mpf("1.467") ** 2 * cos(2 * pi * mpf("0.152")))
print("3^(1/4)*1.114", mpf(3) ** mpf("0.25") * mpf("1.114"), "1.114^2 sqrt3", mpf("1.114") ** 2 * sqrt(3))
# decreasing windows: max of p'(u)-p(u)/2
def dprof(c, u):
    d = sum(i * mpf(ci) * u ** (i - 1) for i, ci in enumerate(c) if i > 0)
    return d - ev(c, u) / 2
import mpmath
uf = 2 * pi * mpf("1.084") ** 2
print("f decreasing max of derivative profile on [0,uf]", max(dprof(pf, uf * k / 400) for k in range(401)))
ug0, ug1 = 2 * pi * sqrt(mpf(4) / 3), 2 * pi * mpf("1.114") ** 2
print("g decreasing max on window", max(dprof(pg, ug0 + (ug1 - ug0) * k / 400) for k in range(401)))
# length gap margin
u0, u1 = 2 * pi * mpf("1.114") ** 2, 2 * pi * mpf("1.62") ** 2
mx = max(ev(pf, u0 + (u1 - u0) * k / 4000) * exp(-(u0 + (u1 - u0) * k / 4000) / 2) for k in range(4001))
print("length gap: max f on window", mx, "vs", -3 * radial(pf, rstar))


def lattice_sum(c, gram, R2, span=30):
    (a, b), (_, d) = gram
    s = mpf(0)
    for i in range(-span, span + 1):
        for j in range(-span, span + 1):
            n = a * i * i + 2 * b * i * j + d * j * j
            if n <= R2:
                s += ev(c, 2 * pi * n) * exp(-pi * n)
    return s


hexg = ((mpf(2), mpf(1)), (mpf(1), mpf(2)))
hexd = ((mpf(2) / 3, mpf(-1) / 3), (mpf(-1) / 3, mpf(2) / 3))
for R in (5, 6):
    lhs = lattice_sum(pf, hexg, R * R)
    rhs = lattice_sum(pfh, hexd, R * R)
    print("hex poisson R=", R, "lhs", lhs, "rhs/covol", rhs / sqrt(3))
z2 = ((mpf(1), mpf(0)), (mpf(0), mpf(1)))
print("Z2 gaussian R=4 truncated theta", lattice_sum([1], z2, 16))
