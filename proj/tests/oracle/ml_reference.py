"""High-precision Mittag-Leffler reference values (mpmath).

Used offline to freeze expected values into the C++ tests. Two independent
routes: the power series summed at high working precision, and, where the
series is impractical, the spectral (Laplace-transform) representation
  E_a(-x) = sin(a pi)/(a pi) * int_0^inf exp(-u^(1/a) x^(1/a)) / (u^2 + 2u cos(a pi) + 1) du
which is valid for beta = 1, 0 < a < 1, x > 0.
"""
import math
import sys

import mpmath as mp


def series(a, b, z, max_terms=200000):
    a, b, z = mp.mpf(a), mp.mpf(b), mp.mpf(z)
    if z == 0:
        return mp.rgamma(b)
    # size the working precision from the largest term
    lz = math.log(abs(float(z)))
    peak = max(n * lz - float(mp.loggamma(a * n + b)) for n in range(0, 4000, 7))
    if peak > 3000:
        return None
    with mp.workdps(40 + int(max(peak, 0) / 2.3)):
        s = mp.mpf(0)
        small = 0
        for n in range(max_terms):
            t = z**n * mp.rgamma(a * n + b)
            s += t
            if abs(t) < mp.mpf(10) ** -45 * abs(s):
                small += 1
                if small > 3:
                    return +s
            else:
                small = 0
    return None


def spectral(a, x):
    a, x = mp.mpf(a), mp.mpf(x)
    s = x ** (1 / a)
    c = mp.cos(a * mp.pi)
    f = lambda u: mp.exp(-(u ** (1 / a)) * s) / (u * u + 2 * u * c + 1)
    cut = (mp.mpf(200) / s) ** a
    pts = [0, min(cut, abs(c)), cut, mp.inf] if c < 0 else [0, cut, mp.inf]
    pts = sorted(set(pts))
    return mp.sin(a * mp.pi) / (a * mp.pi) * mp.quad(f, pts, maxdegree=10)


def reference(a, b, z):
    v = series(a, b, z)
    if v is None and b == 1 and z < 0 and a < 1:
        v = spectral(a, -z)
    return v


if __name__ == "__main__":
    mp.mp.dps = 40
    for line in sys.stdin:
        parts = line.split()
        if len(parts) < 4 or parts[3] == "ERR":
            continue
        a, b, z = float(parts[0]), float(parts[1]), float(parts[2])
        got = float(parts[3])
        ref = reference(a, b, z)
        if ref is None:
            print(a, b, z, "noref", got)
            continue
        ref = float(ref)
        rel = abs(got - ref) / abs(ref) if ref != 0 and math.isfinite(ref) else abs(got - ref)
        print(a, b, z, "%.3e" % rel, parts[4] if len(parts) > 4 else "")
