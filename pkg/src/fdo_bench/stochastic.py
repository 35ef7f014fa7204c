"""Seeded random streams and the Levy-flight direction draw."""

import math

import numpy as np

#: Stability exponent of the Mantegna step generator.
LEVY_BETA = 1.5
#: Divisor applied to a raw Levy step before clipping into [-1, 1]. At 1 about a
#: third of draws saturate at +/-1, so the random walk can cancel a coordinate exactly.
LEVY_SCALE = 1.0


def mantegna_sigma(beta=LEVY_BETA):
    """Standard deviation of the numerator normal in Mantegna's algorithm."""
    num = math.gamma(1 + beta) * math.sin(math.pi * beta / 2)
    den = math.gamma((1 + beta) / 2) * beta * 2 ** ((beta - 1) / 2)
    return (num / den) ** (1 / beta)


class RngHandle:
    """Random stream owned by a single replication.

    Wraps a PCG64 ``numpy.random.Generator`` so that every stochastic choice
    of a run (initialisation, direction draws, objective noise, PSO
    coefficients) comes out of one seeded sequence.

    Parameters
    ----------
    seed : int
        Non-negative integer below 2**64.
    beta, scale : float, optional
        Levy stability exponent and the squashing divisor used by
        :meth:`levy_r`.
    """

    def __init__(self, seed, beta=LEVY_BETA, scale=LEVY_SCALE):
        seed = int(seed)
        if not 0 <= seed < 2**64:
            raise ValueError("seed must be an unsigned 64-bit integer, got %d" % seed)
        if not 0 < beta <= 2:
            raise ValueError("beta must lie in (0, 2], got %r" % beta)
        if scale <= 0:
            raise ValueError("scale must be positive, got %r" % scale)
        self.seed = seed
        self.beta = float(beta)
        self.scale = float(scale)
        self._sigma_u = mantegna_sigma(self.beta)
        self.generator = np.random.Generator(np.random.PCG64(seed))

    def __repr__(self):
        return "RngHandle(seed=%d)" % self.seed

    def uniform(self, lo, hi, size=None):
        """Uniform draw on ``[lo, hi)``; ``lo == hi`` returns ``lo``."""
        lo_a = np.asarray(lo, dtype=float)
        hi_a = np.asarray(hi, dtype=float)
        if np.any(lo_a > hi_a):
            raise ValueError("lower bound exceeds upper bound")
        out = self.generator.uniform(lo_a, hi_a, size=size)
        # numpy may round lo + (hi - lo) * u up to hi
        out = np.where(out >= hi_a, np.nextafter(hi_a, lo_a), out)
        out = np.where(lo_a == hi_a, lo_a, out)
        if out.ndim == 0:
            return float(out)
        return out

    def random(self, size=None):
        """Plain uniform draw on [0, 1)."""
        return self.generator.random(size)

    def normal(self, loc=0.0, scale=1.0, size=None):
        return self.generator.normal(loc, scale, size)

    def levy_step(self, size=None):
        """Raw Mantegna step ``u / |v|**(1/beta)`` (unbounded, heavy tailed)."""
        shape = (2,) if size is None else (2,) + tuple(np.atleast_1d(size))
        u, v = self.generator.standard_normal(shape)
        step = self._sigma_u * u / np.abs(v) ** (1.0 / self.beta)
        return float(step) if size is None else step

    def levy_r(self, size=None):
        """Levy direction number squashed into ``[-1, 1]``.

        The raw step is divided by ``scale`` and clipped, so the clipped mass
        at the ends keeps the heavy-tail character of the walk.
        """
        r = np.clip(self.levy_step(size) / self.scale, -1.0, 1.0)
        if np.ndim(r) == 0:
            return float(r)
        return r


def levy_r(rng, size=None):
    return rng.levy_r(size)


def uniform(rng, lo, hi, size=None):
    return rng.uniform(lo, hi, size)
