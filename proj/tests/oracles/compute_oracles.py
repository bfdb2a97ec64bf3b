"""Extended-precision oracle values frozen into the C++ test suites.

Every value here is computed independently of the C++ implementation:
direct high-precision arithmetic, symbolic differentiation, or mpmath
quadrature of the squared gradient. Re-run with `python3 compute_oracles.py`.
"""
import mpmath as mp

mp.mp.dps = 40


def psi(Ra, R, eps, Pi, r):
    L = mp.log(R / Ra)
    return eps / 4 * (R**2 - r**2 + (R**2 - Ra**2) * mp.log(r / R) / L) + Pi * mp.log(r / Ra) / L


def dpsi(Ra, R, eps, Pi, r):
    return mp.diff(lambda t: psi(Ra, R, eps, Pi, t), r)


def energy_quad(Ra, R, eps, Pi, hbar=1, m=1):
    integrand = lambda r: dpsi(Ra, R, eps, Pi, r) ** 2 * r
    return mp.pi * hbar**2 / m * mp.quad(integrand, [Ra, R])


def printed(Ra, R, eps, Pi, hbar=1, m=1):
    L = mp.log(R / Ra)
    return mp.pi * hbar**2 / m * (
        eps * ((R**3 - Ra**3) / 12 + eps * (R**2 - Ra**2) / L * (mp.mpf(1) / 16 - (R - Ra) / 4))
        + Pi / L * (Pi + eps * (R - Ra) * ((R - Ra) / 2 - 1)))


e = mp.e
print("coupling a=5.3e-9 hbar=1.0546e-34 m=1.443e-25:",
      mp.nstr(4 * mp.pi * mp.mpf("5.3e-9") * mp.mpf("1.0546e-34")**2 / mp.mpf("1.443e-25"), 20))
print("trap_length hbar=1 m=2 w=3:", mp.nstr(mp.sqrt(mp.mpf(1) / 12), 20))
print("psi(Ra=1,R=e,eps=4,Pi=0,r=2):", mp.nstr(psi(1, e, 4, 0, 2), 20))
print("dpsi(Ra=1,R=e,eps=4,Pi=0,r=2):", mp.nstr(dpsi(1, e, 4, 0, 2), 20))
print("quad(Ra=1,R=e,eps=0,Pi=1):", mp.nstr(energy_quad(1, e, 0, 1), 20))
print("quad(Ra=1,R=2,eps=0.01,Pi=0.01):", mp.nstr(energy_quad(1, 2, mp.mpf("0.01"), mp.mpf("0.01")), 20))
print("quad(Ra=1,R=e,eps=4,Pi=0):", mp.nstr(energy_quad(1, e, 4, 0), 20))
print("quad(Ra=1,R=2,eps=1,Pi=0):", mp.nstr(energy_quad(1, 2, 1, 0), 20))
print("printed(Ra=1,R=2,eps=1,Pi=0):", mp.nstr(printed(1, 2, 1, 0), 20))
print("printed(Ra=1,R=2,eps=0.01,Pi=0.01):", mp.nstr(printed(1, 2, mp.mpf("0.01"), mp.mpf("0.01")), 20))

# Thomas-Fermi: integrate n(x) = (mu - x^2/2)/g over its support for mu = 0.5*150^(2/3).
mu = mp.mpf(150) ** (mp.mpf(2) / 3) / 2
xtf = mp.sqrt(2 * mu)
print("mu_TF(g=1,N=100,w=1):", mp.nstr(mu, 20), " profile integral:",
      mp.nstr(mp.quad(lambda x: mu - x**2 / 2, [-xtf, xtf]), 20))

# Hand assembly at N=5 on [1,2], eps=1, Pi=0: h = 0.25, interior r = 1.25, 1.5, 1.75.
h = mp.mpf(1) / 4
for r in (mp.mpf("1.25"), mp.mpf("1.5"), mp.mpf("1.75")):
    print("N=5 row r=%s: sub=%s diag=%s super=%s" % (
        r, mp.nstr(1 / h**2 - 1 / (2 * h * r), 20), mp.nstr(-2 / h**2, 20),
        mp.nstr(1 / h**2 + 1 / (2 * h * r), 20)))
