"""Fourier uniqueness-pair toolkit (bindings to the C++ core)."""

import json as _json

from . import _huplab
from ._huplab import (
    SCHEMA,
    ConfigError,
    DomainError,
    Error,
    InvalidArgument,
    NumericError,
    ParseError,
    bessel_j,
    bessel_zero,
    circle_coeff,
    classify,
    eval_expr,
    homog_sym,
    pair_names,
    rho,
    solve_delta,
    solve_e,
    solve_tau,
    triangle_ft,
    vandermonde3_det,
)

__all__ = [
    "SCHEMA",
    "ConfigError",
    "DomainError",
    "Error",
    "InvalidArgument",
    "NumericError",
    "ParseError",
    "annihilate",
    "bessel_j",
    "bessel_zero",
    "circle_coeff",
    "classify",
    "eval_expr",
    "ft",
    "homog_sym",
    "orders_nonzero",
    "pair_names",
    "rho",
    "solve_delta",
    "solve_e",
    "solve_tau",
    "triangle_ft",
    "vandermonde3_det",
    "verdict",
]


def ft(config):
    """Rows (xi, eta, value, err) for a run config given as a dict or JSON text."""
    if not isinstance(config, str):
        config = _json.dumps(config)
    return _huplab.ft(config)


def annihilate(name, **params):
    """Build and verify an annihilating measure; returns the certificate and report."""
    return _json.loads(_huplab.annihilate(name, **params))


def verdict(pair, **params):
    return _json.loads(_huplab.verdict(pair, **params))


def orders_nonzero(x, family="integers", dimension=3):
    return _json.loads(_huplab.orders_nonzero(x, family, dimension))
