"""Reference polynomials transcribed row by row.

Each function returns the coefficient list (index = power) of one printed
row, in the variable the row is written in: ``rho^2`` for the cylindrical
radial factors, ``r^2`` for the oscillator spherical radial factors,
``2r`` for the hydrogen radial factors and ``cos(theta)`` for the polar
factors.
"""

import math

MU_GRID = (0.3, 0.5, 1.0, math.pi / 2.7, 4.0)


def cylindrical_radial(n, mu):
    b1, b2, b3 = mu + 1, (mu + 1) * (mu + 2), (mu + 1) * (mu + 2) * (mu + 3)
    return {
        0: [1.0],
        1: [1.0, -1 / b1],
        2: [1.0, -2 / b1, 1 / b2],
        3: [1.0, -3 / b1, 3 / b2, -1 / b3],
    }[n]


def hermite(n):
    return {
        0: [1.0],
        1: [0.0, 2.0],
        2: [-2.0, 0.0, 4.0],
        3: [0.0, -12.0, 0.0, 8.0],
        4: [12.0, 0.0, -48.0, 0.0, 16.0],
        5: [0.0, 120.0, 0.0, -160.0, 0.0, 32.0],
        6: [-120.0, 0.0, 720.0, 0.0, -480.0, 0.0, 64.0],
    }[n]


def spherical_radial(n, lam):
    a, b, c = lam + 1.5, lam + 2.5, lam + 3.5
    return {
        0: [1.0],
        1: [1.0, -1 / a],
        2: [1.0, -2 / a, 1 / (a * b)],
        3: [1.0, -3 / a, 3 / (a * b), -1 / (a * b * c)],
    }[n]


def polar(n, mu):
    m = mu
    d2 = 2 * (m + 1)
    d4 = 4 * (m + 1) * (m + 2)
    d6 = 8 * (m + 1) * (m + 2) * (m + 3)
    return {
        0: [1.0],
        1: [0.0, 1.0],
        2: [-1 / d2, 0.0, (2 * m + 3) / d2],
        3: [0.0, -3 / d2, 0.0, (2 * m + 5) / d2],
        4: [3 / d4, 0.0, -6 * (2 * m + 5) / d4, 0.0, (2 * m + 5) * (2 * m + 7) / d4],
        5: [0.0, 15 / d4, 0.0, -10 * (2 * m + 7) / d4, 0.0, (2 * m + 7) * (2 * m + 9) / d4],
        # the z^2 coefficient is read as 45(2mu+7)
        6: [-15 / d6, 0.0, 45 * (2 * m + 7) / d6, 0.0, -15 * (2 * m + 7) * (2 * m + 9) / d6, 0.0,
            (2 * m + 7) * (2 * m + 9) * (2 * m + 11) / d6],
    }[n]


def hydrogen_radial(n, lam):
    """Row ``n`` in powers of ``2r``."""
    a, b, c = 2 * lam + 2, 2 * lam + 3, 2 * lam + 4
    return {
        0: [1.0],
        1: [1.0, -1 / a],
        2: [1.0, -2 / a, 1 / (a * b)],
        3: [1.0, -3 / a, 3 / (a * b), -1 / (a * b * c)],
    }[n]


LAST_ROW = {"cylindrical_radial": 3, "hermite": 6, "spherical_radial": 3, "polar": 6, "hydrogen_radial": 3}


def coeff_error(p, ref):
    """Largest coefficient difference relative to the largest reference coefficient."""
    got = list(p.coeffs) + [0.0] * max(0, len(ref) - len(p.coeffs))
    want = list(ref) + [0.0] * max(0, len(got) - len(ref))
    scale = max(abs(c) for c in want)
    return max(abs(g - w) for g, w in zip(got, want)) / scale
