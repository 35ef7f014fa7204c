from .base import Direction, EvaluationError, Problem
from .composite import CompositeSpec, make_composite
from .registry import UnknownProblemError, get_problem, problem_names

__all__ = [
    "CompositeSpec",
    "Direction",
    "EvaluationError",
    "Problem",
    "UnknownProblemError",
    "get_problem",
    "make_composite",
    "problem_names",
]
