"""Exact spectral monomorphy checks for tournaments."""

import json as _json

from ._tmono import (
    ParseError,
    PreconditionError,
    TmonoError,
    Tournament,
    UnsupportedError,
    char_poly,
    circulant,
    classify_n2,
    classify_skew,
    counterexample7,
    is_skew_conference,
    paley,
    reversed_transitive,
    spectral_monomorphy,
    switch,
    transitive,
    triple,
    verify_suites,
)
from . import _tmono


def structure_report(t):
    return _json.loads(_tmono.structure_report(t))


def run_verify(suite, n=None, trials=100, seed=1):
    return _json.loads(_tmono.run_verify(suite, n, trials, seed))


def run_census(n, k, question, skew=False, jobs=1, samples=None, seed=0):
    """Census report as a dict; identical for any ``jobs``."""
    return _json.loads(_tmono.run_census(n, k, question, skew, jobs, samples, seed))


__all__ = [
    "ParseError",
    "PreconditionError",
    "TmonoError",
    "Tournament",
    "UnsupportedError",
    "char_poly",
    "circulant",
    "classify_n2",
    "classify_skew",
    "counterexample7",
    "is_skew_conference",
    "paley",
    "reversed_transitive",
    "run_census",
    "run_verify",
    "spectral_monomorphy",
    "structure_report",
    "switch",
    "transitive",
    "triple",
    "verify_suites",
]
