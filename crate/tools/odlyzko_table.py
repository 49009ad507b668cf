#!/usr/bin/env python3
"""Generate the bundled unconditional root-discriminant lower-bound table.

Uses the Poitou form of the Weil explicit formula with test function
F(x) = g(x) / cosh(x/2), where g = h * h~ is the autocorrelation of a
nonnegative even h supported on [-b/2, b/2]:

    h(y) = cos(pi y / b) * (1 + sum_k a_k cos(2 k pi y / b))^2

Then g >= 0, g^ >= 0, g(0) = 1 after normalisation, which is exactly what the
unconditional argument needs. For a field of degree n every prime-ideal and
zero term is nonnegative, and the real-place term is nonnegative too, so

    log rd >= gamma + log(8 pi) - J(F) - (4/n) int_0^inf g

holds for every signature. Parameters (b, a_1..a_3) are optimised per degree;
the reported bound is evaluated at two resolutions, the smaller value is
taken and it is rounded down to four decimals.

Usage: odlyzko_table.py [OUT]
"""
import sys

import numpy as np
from scipy import integrate, optimize, signal

EULER = 0.5772156649015329
K_TERMS = 3


def _const():
    head = integrate.quad(lambda x: (np.cosh(x / 2) - 1) / np.sinh(x) if x > 0 else 0.0, 0, 200, limit=200)[0]
    return EULER + np.log(8 * np.pi) - head


CP = _const()


def bound(n, params, samples=3001):
    b = params[0]
    if b <= 0.5:
        return 0.0
    y = np.linspace(-b / 2, b / 2, samples)
    dy = y[1] - y[0]
    poly = 1 + sum(a * np.cos(2 * (k + 1) * np.pi * y / b) for k, a in enumerate(params[1:]))
    h = np.cos(np.pi * y / b) * poly * poly
    g = signal.fftconvolve(h, h[::-1])[samples - 1:] * dy
    g = g / g[0]
    x = np.arange(samples) * dy
    w = np.zeros(samples)
    w[1:] = (1 - g[1:]) / np.sinh(x[1:])
    tail = integrate.quad(lambda t: 1 / np.sinh(t), x[-1], 400)[0]
    return float(np.exp(CP - integrate.simpson(w, x=x) - tail - (4 / n) * integrate.simpson(g, x=x)))


def degrees():
    return list(range(2, 501)) + list(range(510, 1001, 10))


def main():
    out = sys.argv[1] if len(sys.argv) > 1 else "crates/semistab/data/odlyzko.txt"
    rows = []
    x0 = np.array([2 * np.log(2) + 4] + [0.0] * K_TERMS)
    for n in degrees():
        res = optimize.minimize(lambda p: -bound(n, p), x0, method="Nelder-Mead",
                                options={"maxiter": 4000, "xatol": 1e-6, "fatol": 1e-11})
        x0 = res.x
        v = min(bound(n, res.x, 3001), bound(n, res.x, 12001))
        v = np.floor(v * 1e4) / 1e4
        # a fixed g gives a bound increasing in n, so the previous row stays valid
        if rows and v < rows[-1][1]:
            v = rows[-1][1]
        rows.append((n, v))
        print(n, f"{v:.4f}", np.round(res.x, 4), file=sys.stderr, flush=True)
    with open(out, "w") as f:
        f.write("# Unconditional lower bounds b(n) for the root discriminant of a degree-n number field.\n")
        f.write("# Valid for every signature (totally complex column, which is the weakest).\n")
        f.write("# Computed by tools/odlyzko_table.py: Poitou explicit formula, F = g sech(x/2),\n")
        f.write("# g the autocorrelation of a nonnegative cosine-polynomial bump, parameters optimised per degree.\n")
        f.write("# Values rounded down to 4 decimals. Rows with gaps are sound: a field of degree n\n")
        f.write("# has rd >= b(m) for every listed m <= n.\n")
        f.write("# degree bound\n")
        for n, v in rows:
            f.write(f"{n} {v:.4f}\n")


if __name__ == "__main__":
    main()
