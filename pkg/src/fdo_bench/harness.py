"""Replicated experiments, comparisons and CSV output."""

import csv
import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field, replace
from typing import List, Optional

import numpy as np

from .baseline import PsoParams, pso_run
from .core import FdoParams, RunRecord, run
from .problems import UnknownProblemError, get_problem
from .stats import SampleSummary, WilcoxonResult, summarize, wilcoxon_rank_sum

ALGORITHMS = ("fdo", "pso")
RECORD_LEVELS = ("summary", "series", "positions")
THREADS_ENV = "FDO_BENCH_THREADS"

SERIES_HEADER = ["run", "iteration", "best_fitness", "avg_fitness", "trajectory"]
POSITIONS_HEADER = ["run", "iteration", "agent", "x0", "x1"]
SUMMARY_HEADER = ["problem", "algorithm", "runs", "mean", "std"]
COMPARE_HEADER = ["problem", "algo_a", "algo_b", "mean_a", "std_a", "mean_b", "std_b", "p_value"]


class ConfigError(ValueError):
    pass


@dataclass
class ExperimentConfig:
    problem: str
    algorithm: str = "fdo"
    dimension: Optional[int] = None
    population: int = 30
    iterations: int = 500
    runs: int = 30
    wf: int = 0
    seed: int = 0
    record_level: str = "series"
    fm_nested: bool = False

    def validate(self):
        if self.algorithm not in ALGORITHMS:
            raise ConfigError("unknown algorithm %r (choose from %s)" % (self.algorithm, ", ".join(ALGORITHMS)))
        if self.record_level not in RECORD_LEVELS:
            raise ConfigError("unknown record level %r" % self.record_level)
        if self.runs < 1:
            raise ConfigError("runs must be >= 1")
        if self.population < 1 or self.iterations < 1:
            raise ConfigError("population and iterations must be >= 1")
        if self.wf not in (0, 1):
            raise ConfigError("wf must be 0 or 1")
        if self.seed < 0:
            raise ConfigError("seed must be non-negative")
        problem = self.build_problem()
        if self.record_level == "positions" and problem.dimension != 2:
            raise ConfigError("record level 'positions' needs a 2-dimensional problem")
        return problem

    def build_problem(self):
        try:
            return get_problem(self.problem, self.dimension, fm_nested=self.fm_nested)
        except UnknownProblemError as exc:
            raise ConfigError(exc.args[0]) from exc
        except ValueError as exc:
            raise ConfigError(str(exc)) from exc


@dataclass
class ExperimentResult:
    config: ExperimentConfig
    finals: np.ndarray
    best_positions: np.ndarray
    summary: SampleSummary
    records: List[RunRecord] = field(default_factory=list)


@dataclass
class ComparisonRow:
    problem: str
    algo_a: str
    algo_b: str
    summary_a: SampleSummary
    summary_b: SampleSummary
    test: WilcoxonResult

    @property
    def p_value(self):
        return self.test.p_value


def _replicate(config, index):
    problem = config.build_problem()
    positions = config.record_level == "positions"
    seed = config.seed + index
    if config.algorithm == "fdo":
        params = FdoParams(
            wf=config.wf,
            population_size=config.population,
            max_iterations=config.iterations,
            record_positions=positions,
        )
        return run(problem, params, seed)
    params = PsoParams(
        population_size=config.population,
        max_iterations=config.iterations,
        record_positions=positions,
    )
    return pso_run(problem, params, seed)


def _workers():
    raw = os.environ.get(THREADS_ENV, "1")
    try:
        return max(1, int(raw))
    except ValueError:
        raise ConfigError("%s must be an integer, got %r" % (THREADS_ENV, raw)) from None


def run_experiment(config):
    """Run ``config.runs`` replications with seeds ``seed, seed + 1, ...``."""
    config.validate()
    workers = min(_workers(), config.runs)
    indices = range(config.runs)
    if workers > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            outcomes = list(pool.map(_replicate, [config] * config.runs, indices))
    else:
        outcomes = [_replicate(config, k) for k in indices]
    finals = np.array([o[1] for o in outcomes], dtype=float)
    positions = np.array([o[0] for o in outcomes], dtype=float)
    records = [o[2] for o in outcomes] if config.record_level != "summary" else []
    return ExperimentResult(config, finals, positions, summarize(finals), records)


def compare(config_a, config_b):
    pa, pb = config_a.build_problem(), config_b.build_problem()
    if pa.name != pb.name or pa.dimension != pb.dimension:
        raise ConfigError("compared experiments must share the problem and dimension")
    ra = run_experiment(replace(config_a, record_level="summary"))
    rb = run_experiment(replace(config_b, record_level="summary"))
    return ComparisonRow(
        pa.name,
        config_a.algorithm,
        config_b.algorithm,
        ra.summary,
        rb.summary,
        wilcoxon_rank_sum(ra.finals, rb.finals),
    )


def fmt(x):
    return format(float(x), ".17g")


def _write(path, header, rows):
    with open(path, "w", newline="") as fh:
        w = csv.writer(fh, lineterminator="\n")
        w.writerow(header)
        w.writerows(rows)


def write_series(path, records):
    rows = []
    for k, rec in enumerate(records):
        for t in range(len(rec)):
            rows.append(
                [k, t + 1, fmt(rec.best_fitness[t]), fmt(rec.avg_fitness[t]), fmt(rec.trajectory[t])]
            )
    _write(path, SERIES_HEADER, rows)


def write_positions(path, records):
    rows = []
    for k, rec in enumerate(records):
        if rec.positions is None:
            raise ConfigError("records were produced without positions")
        for t, frame in enumerate(rec.positions):
            for a, pos in enumerate(frame):
                rows.append([k, t + 1, a, fmt(pos[0]), fmt(pos[1])])
    _write(path, POSITIONS_HEADER, rows)


def write_summary(path, results):
    rows = [
        [r.config.build_problem().name, r.config.algorithm, r.summary.n, fmt(r.summary.mean), fmt(r.summary.std)]
        for r in results
    ]
    _write(path, SUMMARY_HEADER, rows)


def write_compare(path, comparisons):
    rows = [
        [
            c.problem,
            c.algo_a,
            c.algo_b,
            fmt(c.summary_a.mean),
            fmt(c.summary_a.std),
            fmt(c.summary_b.mean),
            fmt(c.summary_b.std),
            fmt(c.p_value),
        ]
        for c in comparisons
    ]
    _write(path, COMPARE_HEADER, rows)


def read_csv(path):
    with open(path, newline="") as fh:
        return list(csv.DictReader(fh))
