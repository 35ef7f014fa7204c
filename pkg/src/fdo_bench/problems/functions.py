"""Unshifted analytic test functions.

All functions take a 1-D array and return a float. Shifting, bounds and
registration are handled in :mod:`fdo_bench.problems.registry`.
"""

import numpy as np

#: Location of the per-coordinate minimum of ``-z * sin(sqrt(|z|))``.
SCHWEFEL_ARGMIN = 420.9687462275036
#: ``SCHWEFEL_ARGMIN * sin(sqrt(SCHWEFEL_ARGMIN))``.
SCHWEFEL_DEPTH = 418.98288727243369


def sphere(x):
    return float(np.dot(x, x))


def schwefel_2_22(x):
    a = np.abs(x)
    return float(np.sum(a) + np.prod(a))


def schwefel_1_2(x):
    c = np.cumsum(x)
    return float(np.dot(c, c))


def schwefel_2_21(x):
    return float(np.max(np.abs(x)))


def rosenbrock(x):
    return float(np.sum(100.0 * (x[1:] - x[:-1] ** 2) ** 2 + (x[:-1] - 1.0) ** 2))


def step(x):
    s = np.floor(x + 0.5)
    return float(np.dot(s, s))


def quartic(x):
    i = np.arange(1, x.size + 1)
    return float(np.sum(i * x**4))


def schwefel(x):
    return float(np.sum(-x * np.sin(np.sqrt(np.abs(x)))))


def rastrigin(x):
    return float(np.sum(x**2 - 10.0 * np.cos(2 * np.pi * x) + 10.0))


def ackley(x):
    n = x.size
    a = -20.0 * np.exp(-0.2 * np.sqrt(np.dot(x, x) / n))
    b = -np.exp(np.sum(np.cos(2 * np.pi * x)) / n)
    return float(a + b + 20.0 + np.e)


def griewank(x):
    i = np.arange(1, x.size + 1)
    return float(np.dot(x, x) / 4000.0 - np.prod(np.cos(x / np.sqrt(i))) + 1.0)


def penalty_u(x, a, k, m):
    """Boundary penalty ``u(x, a, k, m)`` summed over coordinates."""
    return float(
        np.sum(np.where(x > a, k * (x - a) ** m, 0.0) + np.where(x < -a, k * (-x - a) ** m, 0.0))
    )


def penalized_1(x):
    n = x.size
    y = 1.0 + (x + 1.0) / 4.0
    core = (
        10.0 * np.sin(np.pi * y[0]) ** 2
        + np.sum((y[:-1] - 1.0) ** 2 * (1.0 + 10.0 * np.sin(np.pi * y[1:]) ** 2))
        + (y[-1] - 1.0) ** 2
    )
    return float(np.pi / n * core + penalty_u(x, 10, 100, 4))


def penalized_2(x):
    core = (
        np.sin(3 * np.pi * x[0]) ** 2
        + np.sum((x[:-1] - 1.0) ** 2 * (1.0 + np.sin(3 * np.pi * x[1:]) ** 2))
        + (x[-1] - 1.0) ** 2 * (1.0 + np.sin(2 * np.pi * x[-1]) ** 2)
    )
    return float(0.1 * core + penalty_u(x, 5, 100, 4))


_WEIERSTRASS_K = np.arange(21)


def weierstrass(x, a=0.5, b=3.0):
    ak = a**_WEIERSTRASS_K
    bk = b**_WEIERSTRASS_K
    terms = ak * np.cos(2 * np.pi * bk * (np.asarray(x)[:, None] + 0.5))
    offset = x.size * np.sum(ak * np.cos(np.pi * bk))
    return float(np.sum(terms) - offset)


def modified_schwefel(x):
    """Schwefel variant with the optimum moved to the origin and an edge penalty."""
    z = np.asarray(x) + SCHWEFEL_ARGMIN
    az = np.abs(z)
    inside = z * np.sin(np.sqrt(az))
    m_hi = 500.0 - np.fmod(az, 500.0)
    hi = m_hi * np.sin(np.sqrt(np.abs(m_hi))) - (z - 500.0) ** 2 / (10000.0 * z.size)
    m_lo = np.fmod(az, 500.0) - 500.0
    lo = m_lo * np.sin(np.sqrt(np.abs(m_lo))) - (z + 500.0) ** 2 / (10000.0 * z.size)
    g = np.where(z > 500.0, hi, np.where(z < -500.0, lo, inside))
    return float(SCHWEFEL_DEPTH * z.size - np.sum(g))


def _schaffer_f6(x, y):
    s = x * x + y * y
    return 0.5 + (np.sin(np.sqrt(s)) ** 2 - 0.5) / (1.0 + 0.001 * s) ** 2


def expanded_schaffer_f6(x):
    return float(np.sum(_schaffer_f6(x, np.roll(x, -1))))


def happy_cat(x, alpha=0.125):
    n = x.size
    s = np.dot(x, x)
    return float(abs(s - n) ** (2 * alpha) + (0.5 * s + np.sum(x)) / n + 0.5)
