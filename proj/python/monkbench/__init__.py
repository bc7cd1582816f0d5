"""Seeded verification of presented Boolean algebras, amalgams and interval algebras."""

import json

from . import _core
from ._core import MonkbenchError, ParseError, case_seed, suite_names

__all__ = ["MonkbenchError", "ParseError", "amalgam_run", "case_seed", "cli", "pi_density",
           "pichi_order", "run_suite", "suite_names"]


def run_suite(suite, seed=0, count=0, bounds="", threads=1):
    """Run a suite and return its report as a dict."""
    return json.loads(_core.run_suite(suite, seed, count, bounds, threads))


def pi_density(presentation):
    """pi of BA[w, F] for a presentation dict {"w": [...], "F": [[...], ...]}."""
    return _core.pi_density(json.dumps(presentation))


def amalgam_run(instance):
    """Certificate dict of the m-fold amalgam of an instance dict."""
    return json.loads(_core.amalgam_run(json.dumps(instance)))


def pichi_order(order):
    """Symbolic pi-character of "fin:n", "Q" or "lexQ:<cardinal>"."""
    return _core.pichi_order(order)


def cli(*args):
    """Run the command line in-process: (exit code, stdout, stderr)."""
    return _core.cli([str(a) for a in args])
