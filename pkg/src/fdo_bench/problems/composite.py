"""Gaussian-weighted composition of ten basic functions (TF14 to TF19)."""

from dataclasses import dataclass

import numpy as np

from . import functions as F

#: Seed offset for drawing the component optima; composite k uses BASE + k.
OPTIMA_SEED_BASE = 20050
#: Height every normalised component takes at the probe point.
COMPONENT_HEIGHT = 2000.0
#: Per-coordinate magnitude of the normalisation probe point.
PROBE_MAGNITUDE = 5.0
BOX = (-5.0, 5.0)


@dataclass
class CompositeSpec:
    functions: tuple
    sigma: np.ndarray
    lam: np.ndarray
    optima: np.ndarray
    bias: np.ndarray
    fmax: np.ndarray

    def __post_init__(self):
        if len(self.functions) != 10:
            raise ValueError("a composite has exactly 10 components")
        for arr in (self.sigma, self.lam, self.bias, self.fmax):
            if len(arr) != 10:
                raise ValueError("component parameter vectors must have length 10")

    @property
    def dimension(self):
        return self.optima.shape[1]

    def weights(self, x):
        """Normalised component weights at ``x`` (sum to one)."""
        x = np.asarray(x, dtype=float)
        d2 = np.sum((x - self.optima) ** 2, axis=1)
        logw = -d2 / (2.0 * self.dimension * self.sigma**2)
        top = int(np.argmax(logw))
        # scaled by exp(-max log weight); normalisation cancels the factor
        w = np.exp(logw - logw[top])
        damp = 1.0 - np.exp(10.0 * logw[top])
        w = w * damp
        w[top] = 1.0
        return w / np.sum(w)

    def components(self, x):
        x = np.asarray(x, dtype=float)
        z = (x - self.optima) / self.lam[:, None]
        raw = np.array([f(zi) for f, zi in zip(self.functions, z)])
        return COMPONENT_HEIGHT * raw / self.fmax + self.bias

    def __call__(self, x):
        return float(np.dot(self.weights(x), self.components(x)))


def make_composite(functions, sigma, lam, dimension=10, seed=OPTIMA_SEED_BASE, bias=None):
    sigma = np.asarray(sigma, dtype=float)
    lam = np.asarray(lam, dtype=float)
    rng = np.random.Generator(np.random.PCG64(seed))
    optima = rng.uniform(BOX[0], BOX[1], size=(10, dimension))
    bias = np.zeros(10) if bias is None else np.asarray(bias, dtype=float)
    probe = np.full(dimension, PROBE_MAGNITUDE)
    fmax = np.array([abs(f(probe / l)) for f, l in zip(functions, lam)])
    return CompositeSpec(tuple(functions), sigma, lam, optima, bias, fmax)


_S, _G, _A, _R, _W = F.sphere, F.griewank, F.ackley, F.rastrigin, F.weierstrass
_MIX45 = (_R, _R, _W, _W, _G, _G, _A, _A, _S, _S)

#: (component functions, sigma, lambda) per composite, as tabulated.
COMPOSITE_TABLE = {
    "tf14": ((_S,) * 10, [1.0] * 10, [5 / 100] * 10),
    "tf15": ((_G,) * 10, [1.0] * 10, [5 / 100] * 10),
    "tf16": ((_G,) * 10, [1.0] * 10, [1.0] * 10),
    "tf17": (
        (_A, _A, _R, _R, _W, _W, _G, _G, _S, _S),
        [1.0] * 10,
        [5 / 32, 5 / 32, 1, 1, 5 / 0.5, 5 / 0.5, 5 / 100, 5 / 100, 5 / 100, 5 / 100],
    ),
    "tf18": (
        _MIX45,
        [1.0] * 10,
        [1 / 5, 1 / 5, 5 / 0.5, 5 / 0.5, 5 / 100, 5 / 100, 5 / 32, 5 / 32, 5 / 100, 5 / 100],
    ),
    "tf19": (
        _MIX45,
        [0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8, 0.9, 1.0],
        [
            0.1 * 1 / 5,
            0.2 * 1 / 5,
            0.3 * 5 / 0.5,
            0.4 * 5 / 0.5,
            0.5 * 5 / 100,
            0.6 * 5 / 100,
            0.7 * 5 / 32,
            0.8 * 5 / 32,
            0.9 * 5 / 100,
            1 * 5 / 100,
        ],
    ),
}


def build(name, dimension=10):
    functions, sigma, lam = COMPOSITE_TABLE[name]
    seed = OPTIMA_SEED_BASE + int(name[2:])
    return make_composite(functions, sigma, lam, dimension=dimension, seed=seed)
