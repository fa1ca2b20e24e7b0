"""Prints high-precision reference values frozen into tests/test_mlcore.cpp.

Series route: sum z^n / Gamma(alpha n + beta) at a working precision that
covers the largest term. Closed forms used where available:
E_{1/2}(z) = exp(z^2) erfc(-z), E_2(-z^2) = cos z, E_1(z) = exp z.
"""
import mpmath as mp


def series(a, b, z):
    a, b, z = mp.mpf(a), mp.mpf(b), mp.mpf(z)
    # log10 of the largest term, estimated on a coarse scan
    peak = 0.0
    n = 0
    with mp.workdps(30):
        while True:
            lt = n * mp.log10(abs(z)) - mp.log10(abs(mp.gamma(a * n + b))) if z != 0 else 0
            peak = max(peak, float(lt))
            if n > 10 and float(lt) < peak - 60 and float(lt) < -40:
                break
            n += 1
    with mp.workdps(int(peak) + 40):
        s = mp.mpf(0)
        for k in range(n + 1):
            s += z ** k * mp.rgamma(a * k + b)
        return +s


def spectral(a, x):
    """E_a(-x), 0 < a < 1, x > 0, from the Laplace-transform spectral density."""
    a, x = mp.mpf(a), mp.mpf(x)
    s = x ** (1 / a)
    c = mp.cos(a * mp.pi)
    f = lambda u: mp.exp(-(u ** (1 / a)) * s) / (u * u + 2 * u * c + 1)
    cut = (mp.mpf(200) / s) ** a
    pts = sorted({mp.mpf(0), min(cut, abs(c)), cut, mp.inf})
    return mp.sin(a * mp.pi) / (a * mp.pi) * mp.quad(f, pts, maxdegree=10)


def deriv(a, b, z):
    """sum_{n>=1} n z^(n-1) / Gamma(a n + b) at 80 digits (only used for moderate |z|)."""
    with mp.workdps(80):
        a, b, z = mp.mpf(a), mp.mpf(b), mp.mpf(z)
        s = mp.mpf(0)
        for n in range(1, 3000):
            s += n * z ** (n - 1) * mp.rgamma(a * n + b)
        return +s


if __name__ == "__main__":
    mp.mp.dps = 30
    for x in [0.05, 0.5, 1.5, 2.5, 10, 30.5, 100, 170.5, -0.5, -2.5]:
        print("gamma", x, mp.nstr(mp.gamma(x), 20))
    pts = [(0.5, 1, 1), (0.5, 1, -1), (0.5, 1, -10), (0.5, 1, -30), (0.3, 1, -5), (0.3, 1, -3),
           (0.7, 1, -20), (0.9, 1, -40), (0.1, 1, 1), (0.1, 1, -0.5), (0.8, 1, 5), (0.6, 1, 20),
           (0.5, 0.5, -2), (0.8, 1.8, -3), (0.4, 1.4, -12), (0.5, 2, 3), (1.5, 1, -2), (0.25, 1, -3)]
    for a, b, z in pts:
        print("ml", a, b, z, mp.nstr(series(a, b, z), 20))
    for a, x in [(0.3, 8), (0.3, 20), (0.1, 5), (0.8, 200)]:
        print("ml_spectral", a, 1, -x, mp.nstr(spectral(a, x), 20))
    for z in [-100, -1e4]:
        print("ml_erfc", 0.5, 1, z, mp.nstr(mp.exp(mp.mpf(z) ** 2) * mp.erfc(-mp.mpf(z)), 20))
    for a, b, z in [(0.5, 1, -2), (0.8, 1, 1.5), (0.3, 1, -4), (0.6, 1.3, -2)]:
        print("deriv", a, b, z, mp.nstr(deriv(a, b, z), 20))
