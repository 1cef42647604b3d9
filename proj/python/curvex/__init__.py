"""Exact curve-exclusion checks for the 95 Fano 3-fold hypersurface families."""

import os
from fractions import Fraction

from . import _curvex
from ._curvex import CurvexError, FamilyDb, InputError, derive_lists, full_report_json

__all__ = [
    "CurvexError",
    "FamilyDb",
    "InputError",
    "data_dir",
    "derive_lists",
    "different_total",
    "full_report_json",
    "load_families",
    "surface_exclusion_value",
    "test_class_value",
]


def _pair(q):
    q = Fraction(q)
    return (q.numerator, q.denominator)


def data_dir():
    env = os.environ.get("AUDIT_DATA_DIR")
    if env:
        return env
    return os.path.join(os.path.dirname(__file__), "data")


def load_families(path=None):
    return FamilyDb.load(path or os.path.join(data_dir(), "families.tsv"))


def test_class_value(b, a_cube, deg, p_a=0):
    return Fraction(*_curvex.test_class_value(b, _pair(a_cube), _pair(deg), p_a))


def different_total(indices):
    return Fraction(*_curvex.different_total(list(indices)))


def surface_exclusion_value(m, a_cube, deg, c2t):
    return Fraction(*_curvex.surface_exclusion_value(m, _pair(a_cube), _pair(deg), _pair(c2t)))
