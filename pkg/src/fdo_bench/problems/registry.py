"""Name-addressable registry of every benchmark objective."""

from functools import partial

import numpy as np

from . import composite
from . import functions as F
from .base import Problem


class UnknownProblemError(KeyError):
    pass


def _noisy_quartic(z, rng):
    noise = rng.random() if rng is not None else 0.0
    return F.quartic(z) + noise


# name: (function, default dim, (lo, hi), shift per coordinate, unshifted argmin coordinate, f_min)
# argmin None: the tabulated shift puts the optimum outside the box.
_CLASSICAL = {
    "tf1": (F.sphere, 10, (-100, 100), -30, 0.0, 0.0),
    "tf2": (F.schwefel_2_22, 10, (-10, 10), -3, 0.0, 0.0),
    "tf3": (F.schwefel_1_2, 10, (-100, 100), -30, 0.0, 0.0),
    "tf4": (F.schwefel_2_21, 10, (-100, 100), -30, 0.0, 0.0),
    "tf5": (F.rosenbrock, 10, (-30, 30), -15, 1.0, 0.0),
    "tf6": (F.step, 10, (-100, 100), -750, None, 0.0),
    "tf7": (_noisy_quartic, 10, (-1.28, 1.28), -0.25, 0.0, 0.0),
    "tf8": (F.schwefel, 10, (-500, 500), -300, F.SCHWEFEL_ARGMIN, -F.SCHWEFEL_DEPTH),
    "tf9": (F.rastrigin, 10, (-5.12, 5.12), -2, 0.0, 0.0),
    "tf10": (F.ackley, 10, (-32, 32), 0, 0.0, 0.0),
    "tf11": (F.griewank, 10, (-600, 600), -400, 0.0, 0.0),
    "tf12": (F.penalized_1, 10, (-50, 50), -30, -1.0, 0.0),
    "tf13": (F.penalized_2, 10, (-50, 50), -100, None, 0.0),
}

_DESCRIPTIONS = {
    "tf1": "sphere",
    "tf2": "Schwefel 2.22",
    "tf3": "Schwefel 1.2",
    "tf4": "Schwefel 2.21",
    "tf5": "Rosenbrock",
    "tf6": "step",
    "tf7": "noisy quartic",
    "tf8": "Schwefel",
    "tf9": "Rastrigin",
    "tf10": "Ackley",
    "tf11": "Griewank",
    "tf12": "penalized 1",
    "tf13": "penalized 2",
    "tf14": "composite of spheres",
    "tf15": "composite of Griewanks (lambda 5/100)",
    "tf16": "composite of Griewanks (lambda 1)",
    "tf17": "composite of Ackley/Rastrigin/Weierstrass/Griewank/sphere",
    "tf18": "composite of Rastrigin/Weierstrass/Griewank/Ackley/sphere",
    "tf19": "composite as tf18 with graded sigma",
    "cec04": "Rastrigin + 1",
    "cec05": "Griewank + 1",
    "cec06": "Weierstrass + 1",
    "cec07": "modified Schwefel + 1",
    "cec08": "expanded Schaffer F6 + 1",
    "cec09": "Happy Cat + 1",
    "cec10": "Ackley + 1",
    "antenna": "aperiodic antenna array peak sidelobe level (dB)",
    "fm": "FM sound wave parameter matching",
}

_CEC = {
    "cec04": (F.rastrigin, 0.0),
    "cec05": (F.griewank, 0.0),
    "cec06": (F.weierstrass, 0.0),
    "cec07": (F.modified_schwefel, 0.0),
    "cec08": (F.expanded_schaffer_f6, 0.0),
    "cec09": (F.happy_cat, -1.0),
    "cec10": (F.ackley, 0.0),
}


def _plus_one(func, z):
    return func(z) + 1.0


def _classical(name, dimension):
    func, default_dim, (lo, hi), shift, argmin, fmin = _CLASSICAL[name]
    n = default_dim if dimension is None else dimension
    shift_v = np.full(n, float(shift))
    optimum = known = None
    if argmin is not None:
        optimum = shift_v + argmin
        known = fmin * n if name == "tf8" else fmin
    return Problem(
        name=name,
        lower=np.full(n, float(lo)),
        upper=np.full(n, float(hi)),
        func=func,
        shift=shift_v,
        known_optimum=known,
        optimum=optimum,
        noisy=name == "tf7",
        description=_DESCRIPTIONS[name],
    )


def _composite(name, dimension):
    n = 10 if dimension is None else dimension
    spec = composite.build(name, n)
    lo, hi = composite.BOX
    return Problem(
        name=name,
        lower=np.full(n, lo),
        upper=np.full(n, hi),
        func=spec,
        known_optimum=0.0,
        optimum=spec.optima[0].copy(),
        description=_DESCRIPTIONS[name],
        meta={"composite": spec},
    )


def _cec(name, dimension):
    func, argmin = _CEC[name]
    n = 10 if dimension is None else dimension
    return Problem(
        name=name,
        lower=np.full(n, -100.0),
        upper=np.full(n, 100.0),
        func=partial(_plus_one, func),
        known_optimum=1.0,
        optimum=np.full(n, argmin),
        description=_DESCRIPTIONS[name],
    )


def problem_names():
    return (
        list(_CLASSICAL)
        + list(composite.COMPOSITE_TABLE)
        + list(_CEC)
        + ["antenna", "fm"]
    )


def get_problem(name, dimension=None, fm_nested=False):
    """Build a registered problem by name (case-insensitive).

    ``dimension`` defaults to the tabulated value; the antenna (4) and FM
    (6) problems reject any other dimension.
    """
    key = str(name).lower()
    if dimension is not None:
        dimension = int(dimension)
        if dimension < 1:
            raise ValueError("dimension must be positive")
    if key in _CLASSICAL:
        if dimension is not None and dimension < 2 and key in ("tf5", "tf12", "tf13"):
            raise ValueError("%s needs at least 2 dimensions" % key)
        return _classical(key, dimension)
    if key in composite.COMPOSITE_TABLE:
        return _composite(key, dimension)
    if key in _CEC:
        return _cec(key, dimension)
    if key in ("antenna", "fm"):
        from .. import apps

        prob = apps.antenna_problem() if key == "antenna" else apps.fm_problem(nested=fm_nested)
        if dimension is not None and dimension != prob.dimension:
            raise ValueError("%s has fixed dimension %d" % (key, prob.dimension))
        return prob
    raise UnknownProblemError("unknown problem %r" % name)
