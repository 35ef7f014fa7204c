"""Fitness Dependent Optimizer."""

from dataclasses import dataclass, field
from typing import List, Optional

import numpy as np

from .problems.base import Direction
from .stochastic import RngHandle


@dataclass
class FdoParams:
    wf: int = 0
    population_size: int = 30
    max_iterations: int = 500
    direction: Optional[Direction] = None
    record_positions: bool = False

    def __post_init__(self):
        if self.wf not in (0, 1):
            raise ValueError("wf must be 0 or 1, got %r" % (self.wf,))
        if int(self.population_size) < 1:
            raise ValueError("population_size must be >= 1")
        if int(self.max_iterations) < 1:
            raise ValueError("max_iterations must be >= 1")
        self.population_size = int(self.population_size)
        self.max_iterations = int(self.max_iterations)
        if self.direction is not None:
            self.direction = Direction(self.direction)


@dataclass
class Agent:
    position: np.ndarray
    fitness: float
    last_pace: Optional[np.ndarray] = None

    def copy(self):
        pace = None if self.last_pace is None else self.last_pace.copy()
        return Agent(self.position.copy(), self.fitness, pace)


@dataclass
class SwarmState:
    agents: List[Agent]
    best_position: np.ndarray
    best_fitness: float
    iteration: int = 0
    evaluations: int = 0


@dataclass
class RunRecord:
    """Per-iteration series of one replication.

    ``positions`` has shape ``(iterations, agents, dimension)`` when
    recorded, else ``None``.
    """

    best_fitness: np.ndarray
    avg_fitness: np.ndarray
    trajectory: np.ndarray
    evaluations: np.ndarray
    positions: Optional[np.ndarray] = None
    initial_best: float = np.nan
    initial_avg: float = np.nan

    def __len__(self):
        return len(self.best_fitness)

    def __eq__(self, other):
        if not isinstance(other, RunRecord):
            return NotImplemented
        same = all(
            np.array_equal(getattr(self, k), getattr(other, k), equal_nan=True)
            for k in ("best_fitness", "avg_fitness", "trajectory", "evaluations")
        )
        if (self.positions is None) != (other.positions is None):
            return False
        if self.positions is not None:
            same = same and np.array_equal(self.positions, other.positions)
        return same


@dataclass
class _Recorder:
    iterations: int
    record_positions: bool
    best: list = field(default_factory=list)
    avg: list = field(default_factory=list)
    traj: list = field(default_factory=list)
    evals: list = field(default_factory=list)
    pos: list = field(default_factory=list)

    def push(self, best, fitnesses, first_coord, evals, positions=None):
        self.best.append(best)
        self.avg.append(float(np.mean(fitnesses)))
        self.traj.append(first_coord)
        self.evals.append(evals)
        if self.record_positions:
            self.pos.append(np.array(positions, dtype=float))

    def finish(self, initial_best, initial_avg):
        return RunRecord(
            best_fitness=np.array(self.best, dtype=float),
            avg_fitness=np.array(self.avg, dtype=float),
            trajectory=np.array(self.traj, dtype=float),
            evaluations=np.array(self.evals, dtype=int),
            positions=np.stack(self.pos) if self.record_positions else None,
            initial_best=initial_best,
            initial_avg=initial_avg,
        )


def fitness_weight(best_fitness, current_fitness, wf, direction=Direction.MINIMIZE):
    """Fitness ratio weight minus the weight factor.

    Returns 0 when the ratio would divide by zero.
    """
    if Direction(direction) is Direction.MINIMIZE:
        num, den = best_fitness, current_fitness
    else:
        num, den = current_fitness, best_fitness
    if den == 0:
        return 0.0
    return abs(num / den) - wf


def compute_pace(position, best_position, fw, r):
    """Pace for given direction numbers ``r`` (one per dimension).

    For ``0 < fw < 1`` the pace is ``(x - x*) * fw`` with its sign flipped
    where ``r < 0``. Any other weight gives the random walk ``x * r``.
    """
    x = np.asarray(position, dtype=float)
    xb = np.asarray(best_position, dtype=float)
    if x.shape != xb.shape:
        raise ValueError("position and best position differ in dimension")
    if 0.0 < fw < 1.0:
        return np.where(np.asarray(r) < 0.0, -fw, fw) * (x - xb)
    return x * r


def pace(agent, best_position, fw, rng):
    x = np.asarray(agent.position)
    if x.shape != np.shape(best_position):
        raise ValueError("position and best position differ in dimension")
    return compute_pace(x, best_position, fw, rng.levy_r(x.shape))


def _direction(params, problem):
    return params.direction if params.direction is not None else problem.direction


def _try_move(agent, step, problem, rng):
    cand = np.minimum(np.maximum(agent.position + step, problem.lower), problem.upper)
    return cand, cand - agent.position, problem.evaluate_unchecked(cand, rng)


def step_agent(agent, state, params, problem, rng):
    """Advance one agent; update ``state`` global best and evaluation count.

    Returns the (possibly new) agent. The input agent is not mutated.
    """
    direction = _direction(params, problem)
    fw = fitness_weight(state.best_fitness, agent.fitness, params.wf, direction)
    step = pace(agent, state.best_position, fw, rng)
    cand, actual, f = _try_move(agent, step, problem, rng)
    state.evaluations += 1
    if direction.better(f, agent.fitness):
        new = Agent(cand, f, actual)
    elif agent.last_pace is not None:
        cand, actual, f = _try_move(agent, agent.last_pace, problem, rng)
        state.evaluations += 1
        new = Agent(cand, f, actual) if direction.better(f, agent.fitness) else agent
    else:
        new = agent
    if direction.better(new.fitness, state.best_fitness):
        state.best_fitness = new.fitness
        state.best_position = new.position.copy()
    return new


def initialize(problem, params, rng):
    n = params.population_size
    agents = []
    for _ in range(n):
        x = rng.uniform(problem.lower, problem.upper)
        agents.append(Agent(np.asarray(x, dtype=float), problem.evaluate(x, rng)))
    direction = _direction(params, problem)
    k = direction.best_index([a.fitness for a in agents])
    return SwarmState(agents, agents[k].position.copy(), agents[k].fitness, 0, n)


def iterate(state, params, problem, rng):
    for i, agent in enumerate(state.agents):
        state.agents[i] = step_agent(agent, state, params, problem, rng)
    state.iteration += 1
    return state


def run(problem, params, seed):
    """Optimise ``problem`` with FDO.

    Returns ``(best_position, best_fitness, record)``.
    """
    rng = seed if isinstance(seed, RngHandle) else RngHandle(seed)
    state = initialize(problem, params, rng)
    fits = [a.fitness for a in state.agents]
    init_best, init_avg = state.best_fitness, float(np.mean(fits))
    rec = _Recorder(params.max_iterations, params.record_positions)
    for _ in range(params.max_iterations):
        before = state.evaluations
        iterate(state, params, problem, rng)
        rec.push(
            state.best_fitness,
            [a.fitness for a in state.agents],
            float(state.agents[0].position[0]),
            state.evaluations - before,
            [a.position for a in state.agents] if params.record_positions else None,
        )
    return state.best_position.copy(), state.best_fitness, rec.finish(init_best, init_avg)
