"""Real-world objectives: aperiodic antenna array and FM sound matching."""

from dataclasses import dataclass
from functools import partial

import numpy as np

from .problems.base import Problem

OUTER_ELEMENT = 2.25
MIN_POSITION = 0.125
MIN_GAP = 0.25
GRID_POINTS = 4001
INFEASIBILITY_PENALTY = 100.0
MAIN_LOBE_DB = 20.0 * np.log10(5.0)

FM_THETA = 2.0 * np.pi / 100.0
FM_TARGET = (1.0, 5.0, 1.5, 4.8, 2.0, 4.9)
FM_BOUNDS = (-6.4, 6.35)
_FM_T = np.arange(101, dtype=float)


@dataclass
class AntennaLayout:
    """Four free element positions (in wavelengths) on one side of the array."""

    positions: np.ndarray
    steering: float = np.pi / 2

    def __post_init__(self):
        self.positions = np.asarray(self.positions, dtype=float).ravel()
        if self.positions.size != 4:
            raise ValueError("an antenna layout has 4 free elements")


def _as_layout(layout, steering=np.pi / 2):
    if isinstance(layout, AntennaLayout):
        return layout
    return AntennaLayout(layout, steering)


def array_factor_u(positions, du):
    """Array factor as a function of ``du = cos(theta) - cos(theta_s)``."""
    du = np.asarray(du, dtype=float)
    pos = np.append(np.asarray(positions, dtype=float), OUTER_ELEMENT)
    return np.sum(np.cos(2 * np.pi * np.multiply.outer(du, pos)), axis=-1)


def array_factor(layout, theta):
    layout = _as_layout(layout)
    du = np.cos(theta) - np.cos(layout.steering)
    af = array_factor_u(layout.positions, du)
    return float(af) if np.ndim(af) == 0 else af


def constraint_violations(positions):
    """Number of violated feasibility clauses for a layout.

    Clauses: each position strictly inside ``(0, 2.25)``; the smallest
    position above 0.125; every pairwise gap, including to the fixed outer
    element, above 0.25.
    """
    x = np.asarray(positions, dtype=float)
    count = int(np.sum((x <= 0.0) | (x >= OUTER_ELEMENT)))
    count += int(np.min(x) <= MIN_POSITION)
    pos = np.append(x, OUTER_ELEMENT)
    i, j = np.triu_indices(pos.size, k=1)
    count += int(np.sum(np.abs(pos[i] - pos[j]) <= MIN_GAP))
    return count


def is_feasible(positions):
    return constraint_violations(positions) == 0


def sidelobe_region(magnitude, centre):
    """Boolean mask of grid points beyond the first null on each side."""
    mask = np.zeros(magnitude.size, dtype=bool)
    k = centre
    while k + 1 < magnitude.size and magnitude[k + 1] <= magnitude[k]:
        k += 1
    if k + 1 < magnitude.size:
        mask[k:] = True
    k = centre
    while k - 1 >= 0 and magnitude[k - 1] <= magnitude[k]:
        k -= 1
    if k > 0:
        mask[: k + 1] = True
    return mask


def peak_sidelobe_level(layout, grid_points=GRID_POINTS):
    """Peak sidelobe level in dB, main lobe excluded, no penalty."""
    layout = _as_layout(layout)
    u = np.linspace(-1.0, 1.0, grid_points)
    us = np.cos(layout.steering)
    mag = np.abs(array_factor_u(layout.positions, u - us))
    centre = int(np.argmin(np.abs(u - us)))
    mask = sidelobe_region(mag, centre)
    if not mask.any():
        return float(20.0 * np.log10(max(mag[centre], 1e-300)))
    return float(20.0 * np.log10(max(np.max(mag[mask]), 1e-300)))


def antenna_fitness(layout, grid_points=GRID_POINTS):
    layout = _as_layout(layout)
    sll = peak_sidelobe_level(layout, grid_points)
    return sll + INFEASIBILITY_PENALTY * constraint_violations(layout.positions)


def antenna_problem():
    return Problem(
        name="antenna",
        lower=np.zeros(4),
        upper=np.full(4, OUTER_ELEMENT),
        func=antenna_fitness,
        description="aperiodic antenna array peak sidelobe level (dB)",
    )


@dataclass
class FmParams:
    a1: float
    w1: float
    a2: float
    w2: float
    a3: float
    w3: float

    def as_array(self):
        return np.array([self.a1, self.w1, self.a2, self.w2, self.a3, self.w3])


def fm_wave(params, nested=False, t=_FM_T):
    if isinstance(params, FmParams):
        params = params.as_array()
    a1, w1, a2, w2, a3, w3 = np.asarray(params, dtype=float)
    ph = t * FM_THETA
    if nested:
        return a1 * np.sin(w1 * ph + a2 * np.sin(w2 * ph + a3 * np.sin(w3 * ph)))
    return a1 * np.sin(w1 * ph) + a2 * np.sin(w2 * ph) + a3 * np.sin(w3 * ph)


_TARGET_WAVE = {False: fm_wave(FM_TARGET), True: fm_wave(FM_TARGET, nested=True)}


def fm_fitness(params, nested=False):
    """Sum of squared residuals against the target wave over t = 0..100."""
    r = fm_wave(params, nested) - _TARGET_WAVE[bool(nested)]
    return float(np.dot(r, r))


def fm_problem(nested=False):
    lo, hi = FM_BOUNDS
    return Problem(
        name="fm",
        lower=np.full(6, lo),
        upper=np.full(6, hi),
        func=partial(fm_fitness, nested=bool(nested)),
        known_optimum=0.0,
        optimum=np.array(FM_TARGET),
        description="FM sound wave parameter matching" + (" (nested)" if nested else ""),
        meta={"nested": bool(nested)},
    )
