"""Exact verification of U_hbar(sl_n), the Yangian evaluation map and the isomorphism phi."""

import json
from fractions import Fraction

from ._qgiso import UsageError, g_plus as _g_plus, phi_matrix as _phi_matrix, principal_minor
from ._qgiso import roots as _roots, run_suite_json

__all__ = ["UsageError", "run_suite", "roots", "phi_matrix", "g_plus", "principal_minor"]


def run_suite(suite, n=3, depth=0, hbar_order=0, rep="defining", seed=1, f_denominator="shifted"):
    """Run a suite and return the parsed json report (depth/hbar_order 0 keep the defaults)."""
    return json.loads(run_suite_json(suite, n, depth, hbar_order, rep, seed, f_denominator))


def roots(n, rep="defining"):
    """Per eigenvector, per level k = 1..n: the rationals r with a^(k)_i = hbar r."""
    return [[[Fraction(x) for x in level] for level in vec] for vec in _roots(n, rep)]


def phi_matrix(n, rep, order, which, k):
    """hbar coefficients of phi(E_k) or phi(F_k) in the eigenbasis, indexed [power][row][col]."""
    return [[[Fraction(x) for x in row] for row in mat] for mat in _phi_matrix(n, rep, order, which, k)]


def g_plus(order):
    return [Fraction(x) for x in _g_plus(order)]
