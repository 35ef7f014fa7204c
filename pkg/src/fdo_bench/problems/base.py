from dataclasses import dataclass, field
from enum import Enum
from typing import Callable, Optional

import numpy as np


class Direction(str, Enum):
    MINIMIZE = "minimize"
    MAXIMIZE = "maximize"

    def better(self, a, b):
        """True if fitness ``a`` is strictly better than ``b``."""
        if self is Direction.MINIMIZE:
            return a < b
        return a > b

    def best_index(self, values):
        values = np.asarray(values)
        return int(np.argmin(values) if self is Direction.MINIMIZE else np.argmax(values))


class EvaluationError(RuntimeError):
    """Raised when an objective returns a non-finite value or fails."""


@dataclass
class Problem:
    """Box-bounded objective.

    The evaluator receives ``z = x - shift`` (and the run's rng when
    ``noisy``). ``optimum`` is the point in ``x`` coordinates at which
    ``known_optimum`` is attained; both are ``None`` when the optimum is not
    inside the box or not known.
    """

    name: str
    lower: np.ndarray
    upper: np.ndarray
    func: Callable
    shift: Optional[np.ndarray] = None
    direction: Direction = Direction.MINIMIZE
    known_optimum: Optional[float] = None
    optimum: Optional[np.ndarray] = None
    noisy: bool = False
    description: str = ""
    meta: dict = field(default_factory=dict)

    def __post_init__(self):
        self.lower = np.asarray(self.lower, dtype=float).ravel()
        self.upper = np.asarray(self.upper, dtype=float).ravel()
        if self.lower.shape != self.upper.shape or self.lower.size == 0:
            raise ValueError("lower and upper must be non-empty and of equal length")
        if not (np.all(np.isfinite(self.lower)) and np.all(np.isfinite(self.upper))):
            raise ValueError("bounds must be finite")
        if np.any(self.lower >= self.upper):
            raise ValueError("every lower bound must be below its upper bound")
        if self.shift is None:
            self.shift = np.zeros_like(self.lower)
        self.shift = np.broadcast_to(np.asarray(self.shift, dtype=float), self.lower.shape).copy()
        self.direction = Direction(self.direction)
        if self.optimum is not None:
            self.optimum = np.asarray(self.optimum, dtype=float)
            if self.optimum.shape != self.lower.shape:
                raise ValueError("optimum has wrong dimension")
            if not self.contains(self.optimum):
                raise ValueError("optimum of %s lies outside the box" % self.name)

    @property
    def dimension(self):
        return self.lower.size

    def contains(self, x, atol=1e-12):
        x = np.asarray(x, dtype=float)
        return bool(np.all(x >= self.lower - atol) and np.all(x <= self.upper + atol))

    def clip(self, x):
        return np.clip(x, self.lower, self.upper)

    def evaluate(self, x, rng=None):
        x = np.asarray(x, dtype=float)
        if x.shape != self.lower.shape:
            raise ValueError(
                "%s expects a vector of dimension %d, got shape %s"
                % (self.name, self.dimension, x.shape)
            )
        if not self.contains(x, atol=1e-9):
            raise ValueError("point outside the bounds of %s" % self.name)
        return self.evaluate_unchecked(x, rng)

    def evaluate_unchecked(self, x, rng=None):
        """Evaluate an in-bounds vector without shape or bounds checks."""
        z = x - self.shift
        try:
            value = float(self.func(z, rng) if self.noisy else self.func(z))
        except (ArithmeticError, FloatingPointError) as exc:
            raise EvaluationError("evaluation of %s failed: %s" % (self.name, exc)) from exc
        if np.isnan(value):
            raise EvaluationError("%s returned NaN" % self.name)
        return value

    __call__ = evaluate
