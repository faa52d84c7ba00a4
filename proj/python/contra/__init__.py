"""Python front end for the contra library.

Objects are passed as the same JSON-shaped dicts the command line tool reads.
"""

import json

from ._core import DEFAULT_SEED, character, coalgebra_dim, f_multiplicity
from ._core import run_job as _run_job

__all__ = ["run", "character", "coalgebra_dim", "f_multiplicity", "DEFAULT_SEED"]


def run(command, inputs=None, *, field=None, seed=DEFAULT_SEED, samples=8, p=2, lam=0, mmax=3):
    """Run one job; returns (exit_code, report) with the report as a dict.

    Exit codes: 0 all checks pass, 1 a check failed, 2 bad input.
    """
    code, report = _run_job(command, json.dumps(inputs or {}), field, seed, samples, p, lam, mmax)
    return code, json.loads(report)
