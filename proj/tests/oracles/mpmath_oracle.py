"""Independent high-precision reference values for the unit tests.

Run with `python3 mpmath_oracle.py`. The numbers printed here are the ones frozen in
tests/test_spectrum.cpp and tests/test_orthopoly.cpp. Nothing in this script shares code
with the C++ library: weights come from the Gamma-function formulas, the continuous mass
from mpmath.quad, and polynomial values from an forward recursion at 40 digits.
"""

import mpmath as mp

mp.mp.dps = 40


def depth(V0, alpha):
    return mp.sqrt(2 * mp.mpf(V0)) / alpha - mp.mpf(1) / 2


def discrete(a, b, c):
    """Mass-point weights of the continuous dual Hahn measure for a < 0."""
    out = []
    pre = mp.gamma(b - a) * mp.gamma(c - a) / (mp.gamma(-2 * a) * mp.gamma(b + c))
    m = 0
    while a + m < 0:
        term = (mp.rf(2 * a, m) * mp.rf(a + 1, m) * mp.rf(a + b, m) * mp.rf(a + c, m) * (-1) ** m
                / (mp.rf(a, m) * mp.rf(a - b + 1, m) * mp.rf(a - c + 1, m) * mp.factorial(m)))
        out.append(pre * term)
        m += 1
    return out


def continuous_mass(a, b, c):
    def w(lam):
        num = mp.gamma(a + 1j * lam) * mp.gamma(b + 1j * lam) * mp.gamma(c + 1j * lam) * mp.rgamma(2j * lam)
        return abs(num) ** 2 / (2 * mp.pi)

    norm = mp.rgamma(a + b) * mp.rgamma(a + c) * mp.rgamma(b + c)
    if norm == 0:
        return mp.mpf(0)
    return mp.quad(w, [0, 1, 4, 16, mp.inf]) * norm


def report(V0, alpha, gamma):
    D = depth(V0, alpha)
    b = mp.mpf(gamma) + mp.mpf(1) / 2
    print(f"V0={V0} alpha={alpha} gamma={gamma} D={mp.nstr(D, 17)}")
    for label, a in (("original", -D), ("partner", 1 - D)):
        w = discrete(a, b, b)
        cont = continuous_mass(a, b, b)
        print(f"  {label}: weights {[mp.nstr(x, 17) for x in w]}")
        print(f"  {label}: continuous mass {mp.nstr(cont, 17)}, total {mp.nstr(sum(w) + cont, 25)}")


def recursion_40_digits(D, gamma, E, n_max):
    """P_n(E) for alpha = 1 by the forward recursion at 40 significant digits."""
    D = mp.mpf(D)
    g = mp.mpf(gamma)
    s = g + mp.mpf(1) / 2 - D
    a = lambda n: ((n + s) ** 2 + n * (n + 2 * g)) / 2
    bb = lambda n: -mp.sqrt((n + 1) * (n + 2 * g + 1)) * (n + s) / 2
    P = [mp.mpf(1), (E - a(0)) / bb(0)]
    for n in range(1, n_max):
        P.append(((E - a(n)) * P[n] - bb(n - 1) * P[n - 1]) / bb(n))
    return P


if __name__ == "__main__":
    report(2, 1, 0.25)
    report(12.5, 2, -0.25)
    report(8, 1, 0)
    P = recursion_40_digits(1.5, 0.25, mp.mpf(30), 25)
    print("D=1.5 gamma=0.25 E=30: P_25 =", mp.nstr(P[25], 20), " P_12 =", mp.nstr(P[12], 20))
