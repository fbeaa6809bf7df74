"""Defining equations of multi-Rees algebras over Z and Z/NZ.

Problems and ideals use the same JSON shapes as the command-line tool and may be
passed as dicts or as JSON text.
"""

import json

from . import _mrees
from ._mrees import BudgetExceeded

__all__ = ["BudgetExceeded", "compute", "groebner", "member", "divide", "is_nonzerodivisor"]


def _text(data):
    return data if isinstance(data, str) else json.dumps(data)


def compute(problem, h_mode="generalized", budget=1_000_000, intermediates=False):
    """Return the result dict: basis, certified, kernel_ok, pivots, h_set, multiplier, components."""
    return json.loads(_mrees.compute(_text(problem), h_mode, budget, intermediates))


def groebner(ideal, eliminate=(), budget=1_000_000):
    return json.loads(_mrees.groebner(_text(ideal), list(eliminate), budget))


def member(f, ideal):
    return _mrees.member(f, _text(ideal))


def divide(f, F, vars, modulus=0, regime="ppq"):
    """Pseudo-division under the T-only order; returns {"a", "g", "s"}."""
    return json.loads(_mrees.divide(f, list(F), list(vars), str(modulus), regime))


def is_nonzerodivisor(f, vars, modulus):
    """Return (flag, witness); witness annihilates f when flag is False."""
    return _mrees.is_nonzerodivisor(f, list(vars), str(modulus))
