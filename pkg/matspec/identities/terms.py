"""
Small evaluation helpers shared by the catalog modules.
"""

import logging
from types import SimpleNamespace
import numpy as np
from matspec.errors import Nonconvergence
from matspec.matrix.core import norm
from matspec.special.hyper import HyperParams, HyperFunction
from matspec.series.builders import hyper_series
from matspec.identities.samplers import ParamDraw

logger = logging.getLogger(__name__)

inv = np.linalg.inv


def hyp_fn(num, den, ctx, dim=None):
    """ Cached callable z -> pFq(num; den; z) """
    return HyperFunction(HyperParams(tuple(num), tuple(den), dim), ctx.ctrl)


def hyp(num, den, z, ctx, dim=None):
    return hyp_fn(num, den, ctx, dim)(z)


def hyp_series(num, den, ctx, scale=1.0, offset=None, dim=None):
    return hyper_series(HyperParams(tuple(num), tuple(den), dim), ctx.truncation_k, scale=scale, offset=offset)


def converged_sum(term_fn, max_terms=400, rtol=1e-16, window=3):
    """
    Sum term_fn(0), term_fn(1), ... until 'window' consecutive terms are below
    rtol times the running total.
    """
    total, small_run = None, 0
    for k in range(max_terms):
        term = term_fn(k)
        total = term if total is None else total + term
        small_run = small_run + 1 if norm(term) <= rtol * max(norm(total), 1e-300) else 0
        if small_run >= window:
            return total
    raise Nonconvergence(f"Outer sum did not settle within {max_terms} terms")


def abc(rng, dim, radius=2.0, **extra):
    """ Commuting A, B, C with spectra in the default window and a complex point z """
    draw = ParamDraw(rng, dim)
    params = SimpleNamespace(A=draw.draw()[0], B=draw.draw()[0], C=draw.draw()[0],
                             z=draw.point(radius), I=np.eye(dim, dtype=complex), dim=dim)
    for key, value in extra.items():
        setattr(params, key, value(draw, params) if callable(value) else value)
    return params
