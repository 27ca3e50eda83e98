"""Typicality reasoning in SROEL(⊓,×) with rational, T-minimal and ABox-minimal entailment."""

import json

from . import _typik
from ._typik import (
    BudgetExceeded,
    InvalidPdlp,
    NoModel,
    NoTCompleteModel,
    ParseError,
    TypikError,
    bundled_fixture,
    bundled_fixture_names,
)

__all__ = [
    "BudgetExceeded",
    "InvalidPdlp",
    "NoModel",
    "NoTCompleteModel",
    "ParseError",
    "Reasoner",
    "TypikError",
    "bench",
    "bundled_fixture",
    "bundled_fixture_names",
    "check",
    "emit_asp",
    "models",
    "normalize",
    "pdlp_check",
]

MODES = ("rational", "tmin", "tmin-abox")


class Reasoner:
    """Caches satisfiability and fronts across queries on one knowledge base."""

    def __init__(self, kb, budget=None):
        self._impl = _typik.Reasoner(kb, budget)

    def entails(self, query, mode="tmin"):
        return json.loads(self._impl.entails(query, mode))

    def fronts(self):
        return json.loads(self._impl.fronts())

    def normalized(self):
        return self._impl.normalized()


def check(kb, query, mode="tmin", budget=None):
    """Verdict for one query as a dict with answer, witnesses and statistics."""
    return Reasoner(kb, budget).entails(query, mode)


def normalize(kb):
    return _typik.normalize(kb)


def emit_asp(kb, mode="tmin", query=None):
    return _typik.emit_asp(kb, mode, query)


def models(kb, limit=3):
    return json.loads(_typik.models(kb, limit))


def pdlp_check(program, budget=None):
    return json.loads(_typik.pdlp_check(program, budget))


def bench(kb, multipliers=(1, 2, 4, 6, 8), budget=60.0):
    return json.loads(_typik.bench(kb, list(multipliers), budget))
