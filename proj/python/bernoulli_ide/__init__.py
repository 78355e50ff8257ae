"""Spectral solver for linear Volterra integro-differential equations on [0, 1]."""

from fractions import Fraction

from ._core import (
    MAX_DEGREE,
    BideError,
    Expr,
    ParseError,
    ProblemError,
    SingularMatrixError,
    builtin_examples,
    convolution_matrix,
    eval_basis,
    gauss_legendre,
    orthonormal_basis,
    project,
    solve,
    sweep,
    theta,
)
from ._core import bernoulli_numbers as _bernoulli_numbers


def bernoulli_numbers(n):
    """B_0..B_n as exact fractions."""
    return [Fraction(b) for b in _bernoulli_numbers(n)]


__all__ = [
    "MAX_DEGREE",
    "BideError",
    "Expr",
    "ParseError",
    "ProblemError",
    "SingularMatrixError",
    "bernoulli_numbers",
    "builtin_examples",
    "convolution_matrix",
    "eval_basis",
    "gauss_legendre",
    "orthonormal_basis",
    "project",
    "solve",
    "sweep",
    "theta",
]
