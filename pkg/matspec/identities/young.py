"""
Catalog of identities for Young's matrix functions Y_A: the two forms of
the definition, the expansions in Bessel matrix functions (and back) and
the third order differential equations.
"""

import logging
import numpy as np
from matspec.special.young import (young_Y, young_expansion, young_ode_residual,
                                   reduced_operator, young_W_series, young_W_params)
from matspec.series.operators import Operator, annihilation_residual
from matspec.identities.registry import IdentityEntry
from matspec.identities.terms import abc, hyp_series

logger = logging.getLogger(__name__)

D, Z = Operator.derivative, Operator.z

EXPANSION_TERMS = 20


def _sampler(rng, dim):
    return abc(rng, dim, x=lambda draw, p: draw.uniform(0.2, 1.0))


def _expansion_error(variant, printed):
    def lhs(p, ctx):
        return young_expansion(variant, p.A, p.x, k_max=EXPANSION_TERMS, printed=printed, ctrl=ctx.ctrl).error
    return lhs


def _ode(form):
    def lhs(p, ctx):
        return young_ode_residual(p.A, k_order=ctx.truncation_k, form=form)
    return lhs


def _reduced(p, ctx):
    return annihilation_residual(reduced_operator(p.A), young_W_series(p.A, ctx.truncation_k))


def _hypergeometric(p, ctx):
    A, I = p.A, p.I
    op = Z(2) * D(3) + 0.5 * (2 * A + 5 * I) * (Z(1) * D(2)) + (0.25 * (A + I) @ (A + 2 * I) - Z(1)) * D(1) - 1.0
    params = young_W_params(A)
    return annihilation_residual(op, hyp_series(params.numerators, params.denominators, ctx))


def _expansion_entry(variant, paper_eq, corrected_form=None):
    if corrected_form is None:
        return IdentityEntry(id=f"young.expansion.{variant}", paper_eq=paper_eq,
                             lhs=_expansion_error(variant, printed=False), rhs=None,
                             mode="expansion", sampler=_sampler)
    return IdentityEntry(id=f"young.expansion.{variant}", paper_eq=paper_eq,
                         lhs=_expansion_error(variant, printed=True), rhs=None,
                         corrected_lhs=_expansion_error(variant, printed=False),
                         corrected_form=corrected_form, status="suspected-typo",
                         mode="expansion", sampler=_sampler)


def _catalog():
    return [
        IdentityEntry(
            id="young.definition",
            paper_eq="Y_A(x) = x^A sum_k (-1)^k Gamma^-1(A+(2k+1)I) x^2k "
                     "= x^A Gamma^-1(A+I) 1F2(I;(A+I)/2,(A+2I)/2;-x^2/4)",
            lhs=lambda p, ctx: young_Y(p.A, p.x, ctx.ctrl, form="gamma-sum"),
            rhs=lambda p, ctx: young_Y(p.A, p.x, ctx.ctrl, form="hypergeometric"),
            mode="pointwise",
            sampler=lambda rng, dim: abc(rng, dim, x=lambda draw, p: draw.uniform(0.2, 3.0))),
        IdentityEntry(
            id="young.closed-form",
            paper_eq="Y_0(x) = cos x, Y_1(x) = sin x",
            lhs=lambda p, ctx: [young_Y(np.zeros((1, 1)), p.x, ctx.ctrl), young_Y(np.ones((1, 1)), p.x, ctx.ctrl)],
            rhs=lambda p, ctx: [np.full((1, 1), np.cos(p.x)), np.full((1, 1), np.sin(p.x))],
            mode="pointwise",
            scalar_only=True,
            sampler=lambda rng, dim: abc(rng, dim, x=lambda draw, p: draw.uniform(0.2, 3.0))),
        _expansion_entry(
            "bessel-even",
            "Y_A(x) = sum_k ((A-I)/2)_k / k! [(A+I)_2k]^-1 Gamma^-1(A+I) Gamma(A/2+(k+1)I) "
            "(2x)^((A+2kI)/2) x^2k J_{(A+2kI)/2}(x)",
            corrected_form="Y_A(x) = sum_k ((A-I)/2)_k / k! [(A+I)_2k]^-1 Gamma^-1(A+I) Gamma(A/2+(k+1)I) "
                           "(2x)^((A+2kI)/2) J_{(A+2kI)/2}(x)"),
        _expansion_entry(
            "bessel-odd",
            "Y_A(x) = 1/2 sum_k (A/2)_k / k! [(A+I)_2k]^-1 (2x)^((A+(2k+1)I)/2) Gamma^-1(A+I) "
            "Gamma((A+(2k+1)I)/2) J_{(A+(2k-1)I)/2}(x)"),
        _expansion_entry(
            "young-to-bessel-even",
            "J_{A/2}(x) = sum_k (-1)^k / k! (2x)^(-A/2) ((A-I)/2)_k [(A+I)_2k]^-1 Gamma^-1((A+2I)/2) "
            "Gamma(A+(2k+1)I) Y_{A+2kI}(x)"),
        _expansion_entry(
            "young-to-bessel-odd",
            "J_{(A-I)/2}(x) = 2 sum_k (-1)^k / k! (A/2)_k (2x)^(-A/2) [(A+I)_2k]^-1 Gamma^-1((A+I)/2) "
            "Gamma(A+(2k+1)I) Y_{A+2kI}(x)",
            corrected_form="J_{(A-I)/2}(x) = 2 sum_k (-1)^k / k! (A/2)_k (2x)^(-(A+I)/2) [(A+I)_2k]^-1 "
                           "Gamma^-1((A+I)/2) Gamma(A+(2k+1)I) Y_{A+2kI}(x)"),
        IdentityEntry(
            id="young.ode.prose",
            paper_eq="x Y''' + (2I-A) Y'' + x Y' + (2I-A) Y = 0",
            lhs=_ode("prose"),
            rhs=None,
            mode="formal",
            sampler=_sampler),
        IdentityEntry(
            id="young.ode.scaled",
            paper_eq="x^3 Y''' + (2I-A) x^2 Y'' + x^3 Y' + (2I-A) x^2 Y = 0",
            lhs=_ode("scaled"),
            rhs=None,
            mode="formal",
            sampler=_sampler),
        IdentityEntry(
            id="young.ode.reduced",
            paper_eq="x^2 W''' + 2(A+I) x W'' + (x^2 I + A(A+I)) W' + 2x W = 0, W = Gamma(A+I) x^-A Y_A",
            lhs=_reduced,
            rhs=None,
            mode="formal",
            sampler=_sampler),
        IdentityEntry(
            id="young.ode.hypergeometric",
            paper_eq="z^2 F''' + (2A+5I)/2 z F'' + ((A+I)(A+2I)/4 - zI) F' - F = 0, "
                     "F = 1F2(I;(A+I)/2,(A+2I)/2;z)",
            lhs=_hypergeometric,
            rhs=None,
            mode="formal",
            sampler=_sampler),
    ]


def young_catalog():
    """ Identity entries for Y_A and the Bessel expansions """
    return _catalog()
