"""Global-best particle swarm optimisation used as the live competitor."""

from dataclasses import dataclass

import numpy as np

from .core import _Recorder
from .stochastic import RngHandle


@dataclass
class PsoParams:
    population_size: int = 30
    max_iterations: int = 500
    w_start: float = 0.9
    w_end: float = 0.4
    c1: float = 2.0
    c2: float = 2.0
    velocity_clamp: float = 0.1
    record_positions: bool = False

    def __post_init__(self):
        if self.c1 <= 0 or self.c2 <= 0:
            raise ValueError("c1 and c2 must be positive")
        if not 0 <= self.w_end <= self.w_start:
            raise ValueError("inertia schedule needs 0 <= w_end <= w_start")
        if int(self.population_size) < 1 or int(self.max_iterations) < 1:
            raise ValueError("population_size and max_iterations must be >= 1")
        if self.velocity_clamp <= 0:
            raise ValueError("velocity_clamp must be positive")
        self.population_size = int(self.population_size)
        self.max_iterations = int(self.max_iterations)

    def inertia(self, t):
        """Linearly decreasing inertia for iteration ``t`` (0-based)."""
        if self.max_iterations == 1:
            return self.w_start
        frac = t / (self.max_iterations - 1)
        return self.w_start - (self.w_start - self.w_end) * frac


def pso_run(problem, params, seed):
    """Minimise (or maximise) ``problem`` with gbest PSO.

    Returns ``(best_position, best_fitness, record)`` with the same record
    layout as :func:`fdo_bench.core.run`.
    """
    rng = seed if isinstance(seed, RngHandle) else RngHandle(seed)
    direction = problem.direction
    n, dim = params.population_size, problem.dimension
    lo, hi = problem.lower, problem.upper
    vmax = params.velocity_clamp * (hi - lo)

    x = rng.uniform(lo, hi, size=(n, dim))
    v = np.zeros((n, dim))
    fit = np.array([problem.evaluate(xi, rng) for xi in x])
    pbest, pfit = x.copy(), fit.copy()
    g = direction.best_index(pfit)
    gbest, gfit = pbest[g].copy(), float(pfit[g])
    init_best, init_avg = gfit, float(np.mean(fit))

    rec = _Recorder(params.max_iterations, params.record_positions)
    for t in range(params.max_iterations):
        w = params.inertia(t)
        r1 = rng.random((n, dim))
        r2 = rng.random((n, dim))
        v = w * v + params.c1 * r1 * (pbest - x) + params.c2 * r2 * (gbest - x)
        v = np.clip(v, -vmax, vmax)
        x = np.clip(x + v, lo, hi)
        fit = np.array([problem.evaluate_unchecked(xi, rng) for xi in x])
        improved = np.array([direction.better(a, b) for a, b in zip(fit, pfit)])
        pbest[improved] = x[improved]
        pfit[improved] = fit[improved]
        g = direction.best_index(pfit)
        if direction.better(pfit[g], gfit):
            gbest, gfit = pbest[g].copy(), float(pfit[g])
        rec.push(gfit, fit, float(x[0, 0]), n, x.copy() if params.record_positions else None)
    return gbest.copy(), gfit, rec.finish(init_best, init_avg)
