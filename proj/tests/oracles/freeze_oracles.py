#!/usr/bin/env python3
"""Prints the reference values frozen into the unit tests.

Everything is computed at 40 digits with mpmath, from definitions that do
not share code with the library: theta and eta directly as sums/products,
sigma through theta1 and the lemniscatic periods, integrals by mpmath.quad.
"""
from mpmath import mp, mpc, mpf, sqrt, exp, pi, gamma, beta, quad, hyp2f1, ellipk, jtheta, inf, nsum

mp.dps = 40
I = mpc(0, 1)


def theta2(tau):
    return exp(I * pi * tau / 4) * nsum(lambda k: exp(I * pi * tau * (k * k + k)), [-inf, inf])


def theta3(tau):
    return nsum(lambda k: exp(I * pi * tau * k * k), [-inf, inf])


def theta4(tau):
    return nsum(lambda k: (-1) ** int(k) * exp(I * pi * tau * k * k), [-inf, inf])


def eta(tau):
    q = exp(2 * I * pi * tau)
    p = mpf(1)
    for k in range(1, 400):
        p *= 1 - q ** k
    return exp(I * pi * tau / 12) * p


def show(name, v):
    v = mpc(v)
    print(f"{name:40s} {mp.nstr(v.real, 17)} {mp.nstr(v.imag, 17)}")


show("theta2(i)", theta2(I))
show("theta3(i)", theta3(I))
show("theta4(i)", theta4(I))
show("eta(i)", eta(I))
show("eta(2i)", eta(2 * I))
show("Gamma(1/4)/(2 pi^(3/4))", gamma(mpf(1) / 4) / (2 * pi ** (mpf(3) / 4)))
show("chi(1+0.8i)", (theta2(1 + 0.8 * I) / theta3(1 + 0.8 * I)) ** 2)
show("z(i/3)", 9 * (eta(3 * I) / eta(I / 3)) ** 3 + 1)
show("z(1/2+i)", 9 * (eta(9 * (0.5 + I)) / eta(0.5 + I)) ** 3 + 1)
show("theta2/theta3(1.5i)", theta2(1.5 * I) / theta3(1.5 * I))
show("2F1(1/2,1/4;5/4|1/4)", hyp2f1(0.5, 0.25, 1.25, 0.25))
show("2F1(1/2,1/6;7/6|1/8)", hyp2f1(0.5, mpf(1) / 6, mpf(7) / 6, mpf(1) / 8))
show("2F1(0.3+0.2i,1.1;2.5|-1.7)", hyp2f1(0.3 + 0.2 * I, 1.1, 2.5, -1.7))
kk = (sqrt(3) - 1) / (2 * sqrt(2))
show("K((sqrt3-1)/(2 sqrt2))", ellipk(kk ** 2))
show("K(0.3)", ellipk(mpf(0.3) ** 2))
show("F(0.5+0.2i; 0.4)", quad(lambda t: 1 / sqrt((1 - t * t) * (1 - 0.16 * t * t)), [0, 0.5 + 0.2 * I]))
show("Gamma(5/4)Gamma(1/2)/Gamma(3/4)", gamma(mpf(5) / 4) * gamma(0.5) / gamma(mpf(3) / 4))
show("Gamma(0.3+0.7i)", gamma(0.3 + 0.7 * I))
show("B(1/6,1/3)", beta(mpf(1) / 6, mpf(1) / 3))

# Lemniscatic lattice: omega = Gamma(1/4)^2 / (4 sqrt(2 pi)), tau = i,
# eta1 = pi / (4 omega) from Legendre's relation.
w1 = gamma(mpf(1) / 4) ** 2 / (4 * sqrt(2 * pi))
q = exp(-pi)
eta1 = pi / (4 * w1)


def sigma_lemn(u):
    v = pi * u / (2 * w1)
    return 2 * w1 / pi * exp(eta1 * u * u / (2 * w1)) * jtheta(1, v, q) / jtheta(1, 0, q, 1)


def zeta_lemn(u):
    return mp.diff(lambda t: mp.log(sigma_lemn(t)), u)


show("omega(4,0)", w1)
show("sigma(0.7+0.3i;4,0)", sigma_lemn(0.7 + 0.3 * I))
show("zeta(0.7+0.3i;4,0)", zeta_lemn(0.7 + 0.3 * I))
show("wp(0.7+0.3i;4,0)", -mp.diff(zeta_lemn, 0.7 + 0.3 * I))

# II(3) on (4, 0): -sqrt z + int_inf^z (z/w + z^(-1/2)/2) dz, w = -2 z^(3/2) sqrt(1 - 1/z^2)
f2 = lambda z: z / (-2 * z ** 1.5 * sqrt(1 - 1 / z ** 2)) + 0.5 / sqrt(z)
show("II(3;4,0)", -sqrt(3) - quad(f2, [3, inf]))
u3 = 1 / sqrt(3) * hyp2f1(0.5, 0.25, 1.25, mpf(1) / 9)
show("wp_inverse_lemniscatic(3)", u3)
show("III(3, alpha=0.5; 4,0)", mp.log(sigma_lemn(u3 - 0.5) / sigma_lemn(u3)) + zeta_lemn(0.5) * u3)
