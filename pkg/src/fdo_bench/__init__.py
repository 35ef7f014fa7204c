"""Fitness Dependent Optimizer, a PSO baseline and a benchmark harness."""

from .baseline import PsoParams, pso_run
from .core import Agent, FdoParams, RunRecord, SwarmState, fitness_weight, pace, run, step_agent
from .problems import Direction, Problem, get_problem, problem_names
from .stats import summarize, wilcoxon_rank_sum
from .stochastic import RngHandle

__version__ = "0.1.0"

__all__ = [
    "Agent",
    "Direction",
    "FdoParams",
    "Problem",
    "PsoParams",
    "RngHandle",
    "RunRecord",
    "SwarmState",
    "fitness_weight",
    "get_problem",
    "pace",
    "problem_names",
    "pso_run",
    "run",
    "step_agent",
    "summarize",
    "wilcoxon_rank_sum",
]
