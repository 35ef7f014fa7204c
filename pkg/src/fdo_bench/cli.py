"""Command-line driver: ``fdo-bench {run,compare,list,metrics}``."""

import argparse
import os
import sys
from dataclasses import replace

from . import harness
from .harness import ConfigError, ExperimentConfig
from .problems import get_problem, problem_names

DEFAULTS = {
    "algo": "fdo",
    "dims": None,
    "agents": 30,
    "iters": 500,
    "runs": 30,
    "wf": 0,
    "seed": 0,
    "record": "series",
    "out": ".",
    "fm_nested": 0,
    "a": "fdo",
    "b": "pso",
}
METRICS_DEFAULTS = {"agents": 10, "iters": 150, "runs": 1, "dims": 2, "record": "positions"}
METRICS_PROBLEMS = ("tf1", "tf10", "tf14")
CONFIG_KEYS = set(DEFAULTS) | {"problem"}


class _Parser(argparse.ArgumentParser):
    def __init__(self, *args, **kwargs):
        kwargs.setdefault("allow_abbrev", False)
        super().__init__(*args, **kwargs)

    def error(self, message):
        raise ConfigError(message)


def _common(p, with_algo=True):
    p.add_argument("--problem")
    if with_algo:
        p.add_argument("--algo", choices=["fdo", "pso"])
    p.add_argument("--dims", type=int)
    p.add_argument("--agents", type=int)
    p.add_argument("--iters", type=int)
    p.add_argument("--runs", type=int)
    p.add_argument("--wf", type=int, choices=[0, 1])
    p.add_argument("--seed", type=int)
    p.add_argument("--record", choices=["summary", "series", "positions"])
    p.add_argument("--out", metavar="DIR")
    p.add_argument("--fm-nested", dest="fm_nested", type=int, choices=[0, 1])
    p.add_argument("--config", metavar="FILE", help="key=value defaults; flags override")


def build_parser():
    parser = _Parser(prog="fdo-bench", description="Fitness Dependent Optimizer benchmark harness")
    sub = parser.add_subparsers(dest="command", parser_class=_Parser)
    sub.required = True
    _common(sub.add_parser("run", help="run one experiment, write series/summary CSVs"))
    cmp_ = sub.add_parser("compare", help="run two algorithms, write compare.csv")
    _common(cmp_, with_algo=False)
    cmp_.add_argument("--a", choices=["fdo", "pso"])
    cmp_.add_argument("--b", choices=["fdo", "pso"])
    sub.add_parser("list", help="print the problem registry")
    _common(sub.add_parser("metrics", help="2-D search-history protocol"))
    return parser


def read_config_file(path):
    """Parse ``key=value`` lines; ``#`` starts a comment."""
    values = {}
    with open(path) as fh:
        for lineno, line in enumerate(fh, 1):
            line = line.split("#", 1)[0].strip()
            if not line:
                continue
            if "=" not in line:
                raise ConfigError("%s:%d: expected key=value" % (path, lineno))
            key, value = (s.strip() for s in line.split("=", 1))
            key = key.replace("-", "_")
            if key not in CONFIG_KEYS:
                raise ConfigError("%s:%d: unknown key %r" % (path, lineno, key))
            values[key] = value
    return values


_INT_KEYS = {"dims", "agents", "iters", "runs", "wf", "seed", "fm_nested"}


def _resolve(args, base):
    opts = dict(base)
    if getattr(args, "config", None):
        for key, value in read_config_file(args.config).items():
            try:
                opts[key] = int(value) if key in _INT_KEYS else value
            except ValueError:
                raise ConfigError("config key %s needs an integer, got %r" % (key, value)) from None
    for key in CONFIG_KEYS:
        value = getattr(args, key, None)
        if value is not None:
            opts[key] = value
    return opts


def _config(opts, algorithm=None):
    if not opts.get("problem"):
        raise ConfigError("--problem is required")
    return ExperimentConfig(
        problem=opts["problem"],
        algorithm=algorithm or opts["algo"],
        dimension=opts["dims"],
        population=opts["agents"],
        iterations=opts["iters"],
        runs=opts["runs"],
        wf=opts["wf"],
        seed=opts["seed"],
        record_level=opts["record"],
        fm_nested=bool(opts["fm_nested"]),
    )


def _emit(result, out):
    os.makedirs(out, exist_ok=True)
    harness.write_summary(os.path.join(out, "summary.csv"), [result])
    if result.config.record_level in ("series", "positions"):
        harness.write_series(os.path.join(out, "series.csv"), result.records)
    if result.config.record_level == "positions":
        harness.write_positions(os.path.join(out, "positions.csv"), result.records)


def cmd_run(args):
    opts = _resolve(args, DEFAULTS)
    result = harness.run_experiment(_config(opts))
    _emit(result, opts["out"])
    s = result.summary
    print("%s %s runs=%d mean=%.6g std=%.6g" % (result.config.problem, result.config.algorithm, s.n, s.mean, s.std))


def cmd_compare(args):
    opts = _resolve(args, DEFAULTS)
    base = replace(_config(opts), record_level="summary")
    row = harness.compare(replace(base, algorithm=opts["a"]), replace(base, algorithm=opts["b"]))
    os.makedirs(opts["out"], exist_ok=True)
    harness.write_compare(os.path.join(opts["out"], "compare.csv"), [row])
    print(
        "%s %s=%.6g %s=%.6g p=%.6g"
        % (row.problem, row.algo_a, row.summary_a.mean, row.algo_b, row.summary_b.mean, row.p_value)
    )


def cmd_list(args):
    print("%-8s %4s %-22s %-14s %s" % ("name", "dim", "bounds", "f_min", "description"))
    for name in problem_names():
        p = get_problem(name)
        lo, hi = p.lower, p.upper
        bounds = "[%g, %g]" % (lo[0], hi[0]) if (lo == lo[0]).all() and (hi == hi[0]).all() else "mixed"
        fmin = "-" if p.known_optimum is None else "%.10g" % p.known_optimum
        print("%-8s %4d %-22s %-14s %s" % (name, p.dimension, bounds, fmin, p.description))


def cmd_metrics(args):
    opts = _resolve(args, dict(DEFAULTS, **METRICS_DEFAULTS))
    names = [opts["problem"]] if opts.get("problem") else list(METRICS_PROBLEMS)
    for name in names:
        result = harness.run_experiment(_config(dict(opts, problem=name)))
        _emit(result, os.path.join(opts["out"], name))
        print("%s best=%.6g" % (name, result.summary.mean))


COMMANDS = {"run": cmd_run, "compare": cmd_compare, "list": cmd_list, "metrics": cmd_metrics}


def main(argv=None):
    try:
        args = build_parser().parse_args(argv)
        COMMANDS[args.command](args)
    except ConfigError as exc:
        print("fdo-bench: error: %s" % exc, file=sys.stderr)
        return 1
    except OSError as exc:
        print("fdo-bench: I/O error: %s" % exc, file=sys.stderr)
        return 2
    return 0


if __name__ == "__main__":
    sys.exit(main())
