"""Python interface to the polclust core.

Configs are plain dicts with the same keys as the JSON config file.
"""

import json

import _polclust as _core
from _polclust import (
    CURVE_CSV_HEADER,
    ConvergenceError,
    PipelineError,
    SuiteBudgetError,
    cluster_budget,
    emit_ledger,
    idf,
    minmax_normalize,
    principal_components,
    restoration_auc,
    sbfl_score,
    spearman,
    tf,
    vectorize_suite,
)

__all__ = [
    "CURVE_CSV_HEADER",
    "ConvergenceError",
    "PipelineError",
    "Session",
    "SuiteBudgetError",
    "cluster_budget",
    "default_config",
    "emit_ledger",
    "idf",
    "ledger",
    "minmax_normalize",
    "normalize_config",
    "principal_components",
    "restoration_auc",
    "run_pipeline",
    "sbfl_score",
    "spearman",
    "tf",
    "vectorize_suite",
]


def default_config(env="chain", **overrides):
    """Config for a built-in environment with library defaults."""
    config = {"env": json.loads(_core.default_env_spec(env))}
    config.update(overrides)
    return normalize_config(config)


def normalize_config(config):
    """Validates a config dict and returns it with every default filled in."""
    return json.loads(_core.normalize_config(json.dumps(config)))


def run_pipeline(config, out_dir=None):
    """Runs every stage.

    Returns a dict with "report" (as written to report.json), "matrices"
    (numpy arrays keyed "-", "+", "+-"; rows follow "vocabulary"), and
    "curves" (method plus point tuples in curve CSV column order). Writes all
    artifacts when out_dir is given.
    """
    result = _core.run_pipeline(json.dumps(config), "" if out_dir is None else str(out_dir))
    result["report"] = json.loads(result["report"])
    return result


def ledger():
    """Hyperparameter table as a list of dicts."""
    return json.loads(_core.ledger_json())


class Session(_core.Session):
    """Environment and policy built from a config, for direct experiments."""

    def __init__(self, config):
        super().__init__(json.dumps(config))
