"""
Catalog of integral transform and fractional calculus identities for 1F2:
beta and Laplace transforms, the Erdelyi-Kober pair, Riemann-Liouville
integrals, Weyl and Riemann-Liouville derivatives, and the monomial rules
the closed forms are built from.

Convergent integrals are checked by quadrature; the Weyl-type operators on
[x, inf) diverge on growing integrands and are checked termwise.
"""

import logging
import numpy as np
from scipy import special
from matspec.matrix.core import principal_power
from matspec.special.gamma_beta import matrix_gamma, matrix_beta
from matspec.series.formal import MatrixPowerSeries
from matspec.transforms.integrals import (beta_transform, laplace_transform, erdelyi_kober_left,
                                          erdelyi_kober_right, rl_integral, rl_integral_left,
                                          rl_integral_right)
from matspec.transforms.fractional import fractional_derivative_formal
from matspec.identities.registry import IdentityEntry
from matspec.identities.terms import hyp, hyp_fn, hyp_series, abc

logger = logging.getLogger(__name__)

# Monomial degrees checked for every rule
MONOMIAL_DEGREES = range(7)


def _stable(draw, p):
    return draw.draw()[0]


def _real(low, high):
    return lambda draw, p: draw.uniform(low, high)


def _F(p, ctx):
    return hyp_fn((p.A,), (p.B, p.C), ctx)


def _F_series(p, ctx):
    return hyp_series((p.A,), (p.B, p.C), ctx)


def _fractional_sampler(rng, dim):
    return abc(rng, dim, alpha=_real(0.2, 0.8), eta=_real(1.15, 1.85), x=_real(0.3, 2.0),
               b=_real(-1.0, 0.0), c=lambda draw, p: p.x + draw.uniform(0.5, 1.5))


# Beta and Laplace transforms

def _beta_lhs(p, ctx):
    f = _F(p, ctx)
    return beta_transform(lambda t: f(p.z * t), p.P, p.Q, n=ctx.quad_n)


def _beta_rhs(p, ctx):
    return matrix_beta(p.P, p.Q) @ hyp((p.A, p.P), (p.B, p.C, p.P + p.Q), p.z, ctx)


def _laplace_lhs(p, ctx):
    f = _F(p, ctx)
    return laplace_transform(lambda t: f(p.z * t), p.s, exponent=p.P - p.I, tol=1e-12)


def _laplace_rhs(p, ctx):
    return matrix_gamma(p.P) @ principal_power(p.s, -p.P) @ hyp((p.A, p.P), (p.B, p.C), p.z / p.s, ctx)


def _laplace_sampler(rng, dim):
    return abc(rng, dim, P=_stable,
               s=lambda draw, p: complex(draw.uniform(1.0, 2.0), draw.uniform(-1.0, 1.0)))


# Erdelyi-Kober pair

def _gamma_ratio(a, b):
    return special.gamma(a) * special.rgamma(b)


def _ek_closed(shift):
    """ Gamma(eta+s)/Gamma(alpha+eta+s) 2F3(A,(eta+s)I;B,C,(alpha+eta+s)I;x) """
    def rhs(p, ctx):
        eta = p.eta + shift
        return _gamma_ratio(eta, p.alpha + eta) * hyp((p.A, eta * p.I), (p.B, p.C, (p.alpha + eta) * p.I), p.x, ctx)
    return rhs


def _ek_left_lhs(p, ctx):
    return erdelyi_kober_left(_F(p, ctx), p.alpha, p.eta, p.x, n=ctx.quad_n)


def _ek_right_lhs(p, ctx):
    return fractional_derivative_formal(_F_series(p, ctx), p.alpha, "erdelyi-kober-right", eta=p.eta)


def _ek_right_series(printed):
    def rhs(p, ctx):
        I = p.I
        if printed:
            num, den = p.eta * I, (p.alpha + p.eta) * I
        else:
            num, den = (1 - p.alpha - p.eta) * I, (1 - p.eta) * I
        front = _gamma_ratio(p.eta, p.alpha + p.eta)
        return hyp_series((p.A, num), (p.B, p.C, den), ctx).lmul(front)
    return rhs


# Riemann-Liouville integrals

def _rl_closed(order, span, p, ctx):
    """ span^order / Gamma(order+1) 2F3(A,I;B,C,(order+1)I;span) """
    front = span ** order * special.rgamma(order + 1)
    return front * hyp((p.A, p.I), (p.B, p.C, (order + 1) * p.I), span, ctx)


def _rl_lhs(p, ctx):
    return rl_integral(_F(p, ctx), p.alpha, p.x, n=ctx.quad_n)


def _rl_left_lhs(p, ctx):
    f = _F(p, ctx)
    return rl_integral_left(lambda t: f(t - p.b), p.alpha, p.b, p.x, n=ctx.quad_n)


def _rl_right_lhs(reflected):
    def lhs(p, ctx):
        f = _F(p, ctx)
        g = (lambda t: f(p.c - t)) if reflected else f
        return rl_integral_right(g, p.alpha, p.x, p.c, n=ctx.quad_n)
    return lhs


# Termwise Weyl and Riemann-Liouville derivatives

def _formal(variant):
    def lhs(p, ctx):
        return fractional_derivative_formal(_F_series(p, ctx), p.alpha, variant)
    return lhs


def _derivative_rhs(phase=False):
    """ x^(-alpha)/Gamma(1-alpha) 2F3(A,I;B,C,(1-alpha)I;x), optionally times exp(i pi alpha) """
    def rhs(p, ctx):
        front = special.rgamma(1 - p.alpha) * (np.exp(1j * np.pi * p.alpha) if phase else 1.0)
        return hyp_series((p.A, p.I), (p.B, p.C, (1 - p.alpha) * p.I), ctx,
                          offset=-p.alpha * p.I).lmul(front)
    return rhs


def _weyl_integral_rhs(p, ctx):
    return hyp_series((p.A,), (p.B, p.C, p.alpha * p.I), ctx, offset=p.alpha * p.I)


# Monomial rules, scalar

def _one(value):
    return np.full((1, 1), value, dtype=complex)


def _monomial(center=0.0, sign=1.0):
    """ t -> (sign (t - center))^k as 1x1 matrices, one callable per degree """
    return [lambda t, k=k: _one((sign * (t - center)) ** k) for k in MONOMIAL_DEGREES]


def _monomials_lhs(apply):
    def lhs(p, ctx):
        return [apply(p, ctx, k, f) for k, f in zip(MONOMIAL_DEGREES, _monomial())]
    return lhs


def _monomials_rhs(closed):
    def rhs(p, ctx):
        return [_one(closed(p, k)) for k in MONOMIAL_DEGREES]
    return rhs


def _ek_left_monomial(p, ctx, k, f):
    return erdelyi_kober_left(f, p.alpha, p.eta, p.x, n=ctx.quad_n)


def _ek_right_monomial(p, ctx, k, f):
    return erdelyi_kober_right(f, p.alpha, p.eta, p.x, growth_order=k, n=ctx.quad_n)


def _rl_left_monomials(order):
    def lhs(p, ctx):
        return [rl_integral_left(f, order(p), p.b, p.x, n=ctx.quad_n) for f in _monomial(center=p.b)]
    return lhs


def _rl_right_monomials(order):
    def lhs(p, ctx):
        return [rl_integral_right(f, order(p), p.x, p.c, n=ctx.quad_n) for f in _monomial(center=p.c, sign=-1.0)]
    return lhs


def _power_rule(order, span):
    """ Gamma(k+1)/Gamma(k+1+order) span^(k+order) """
    return lambda p, k: _gamma_ratio(k + 1, k + 1 + order(p)) * span(p) ** (k + order(p))


def _termwise_monomials(variant):
    """ Coefficient of w^k after applying the rule to the monomial w^k """
    def lhs(p, ctx):
        return [fractional_derivative_formal(MatrixPowerSeries.monomial(1, k, k + 1), p.alpha, variant).coefficient(k)
                for k in MONOMIAL_DEGREES]
    return lhs


def _monomial_sampler(rng, dim, eta=(0.5, 2.0)):
    return abc(rng, dim, alpha=_real(0.2, 0.8), eta=_real(*eta), x=_real(0.3, 2.0), mu=_real(-1.5, -0.2),
               b=_real(-1.0, 0.0), c=lambda draw, p: p.x + draw.uniform(0.5, 1.5))


def _alpha(p):
    return p.alpha


def _complement(p):
    return 1 - p.alpha


def _x_minus_b(p):
    return p.x - p.b


def _c_minus_x(p):
    return p.c - p.x


def _catalog():
    return [
        IdentityEntry(
            id="transform.beta",
            paper_eq="B{1F2(A;B,C;zt) : P, Q} = B(P,Q) 2F3(A,P;B,C,P+Q;z)",
            lhs=_beta_lhs,
            rhs=_beta_rhs,
            mode="quadrature",
            sampler=lambda rng, dim: abc(rng, dim, P=_stable, Q=_stable)),
        IdentityEntry(
            id="transform.laplace",
            paper_eq="L{t^(P-I) 1F2(A;B,C;zt)}(s) = Gamma(P) s^(-P) 2F2(A,P;B,C;z/s)",
            lhs=_laplace_lhs,
            rhs=_laplace_rhs,
            mode="laplace",
            sampler=_laplace_sampler),
        IdentityEntry(
            id="transform.erdelyi-kober.left",
            paper_eq="E^{alpha,eta}_{0,x} F = Gamma(eta)/Gamma(alpha+eta) 2F3(A,eta I;B,C,(alpha+eta)I;x)",
            lhs=_ek_left_lhs,
            rhs=_ek_closed(0),
            corrected_rhs=_ek_closed(1),
            corrected_form="Gamma(eta+1)/Gamma(alpha+eta+1) 2F3(A,(eta+1)I;B,C,(alpha+eta+1)I;x)",
            status="suspected-typo",
            mode="quadrature",
            sampler=_fractional_sampler),
        IdentityEntry(
            id="transform.erdelyi-kober.right",
            paper_eq="K^{-alpha,eta}_{x,inf} F = Gamma(eta)/Gamma(alpha+eta) 2F3(A,eta I;B,C,(alpha+eta)I;x)",
            lhs=_ek_right_lhs,
            rhs=_ek_right_series(printed=True),
            corrected_rhs=_ek_right_series(printed=False),
            corrected_form="Gamma(eta)/Gamma(alpha+eta) 2F3(A,(1-alpha-eta)I;B,C,(1-eta)I;x)",
            status="suspected-typo",
            mode="formal",
            sampler=_fractional_sampler),
        IdentityEntry(
            id="transform.riemann-liouville",
            paper_eq="I^mu_{0+} F (x) = x^mu/Gamma(mu+1) 2F3(A,I;B,C,(mu+1)I;x)",
            lhs=_rl_lhs,
            rhs=lambda p, ctx: _rl_closed(p.alpha, p.x, p, ctx),
            mode="quadrature",
            sampler=_fractional_sampler),
        IdentityEntry(
            id="transform.riemann-liouville.left",
            paper_eq="I^alpha_{b+} F(t-b) (x) = (x-b)^alpha/Gamma(alpha+1) 2F3(A,I;B,C,(alpha+1)I;x-b)",
            lhs=_rl_left_lhs,
            rhs=lambda p, ctx: _rl_closed(p.alpha, p.x - p.b, p, ctx),
            mode="quadrature",
            sampler=_fractional_sampler),
        IdentityEntry(
            id="transform.riemann-liouville.right",
            paper_eq="I^alpha_{a-} F(t) (x) = (a-x)^alpha/Gamma(alpha+1) 2F3(A,I;B,C,(alpha+1)I;a-x)",
            lhs=_rl_right_lhs(reflected=False),
            rhs=lambda p, ctx: _rl_closed(p.alpha, p.c - p.x, p, ctx),
            corrected_lhs=_rl_right_lhs(reflected=True),
            corrected_form="I^alpha_{a-} F(a-t) (x) = (a-x)^alpha/Gamma(alpha+1) 2F3(A,I;B,C,(alpha+1)I;a-x)",
            status="suspected-typo",
            mode="quadrature",
            sampler=_fractional_sampler),
        IdentityEntry(
            id="transform.weyl-integral",
            paper_eq="W^{-alpha} F (x) = x^alpha 1F3(A;B,C,alpha I;x) (termwise)",
            lhs=_formal("weyl-integral"),
            rhs=_weyl_integral_rhs,
            mode="formal",
            sampler=_fractional_sampler),
        IdentityEntry(
            id="transform.derivative.left",
            paper_eq="D^alpha_{0+} F (x) = x^(-alpha)/Gamma(1-alpha) 2F3(A,I;B,C,(1-alpha)I;x) (termwise)",
            lhs=_formal("rl-left"),
            rhs=_derivative_rhs(),
            mode="formal",
            sampler=_fractional_sampler),
        IdentityEntry(
            id="transform.derivative.right",
            paper_eq="D^alpha_{-} F (x) = x^(-alpha)/Gamma(1-alpha) 2F3(A,I;B,C,(1-alpha)I;x) (termwise)",
            lhs=_formal("rl-right"),
            rhs=_derivative_rhs(),
            mode="formal",
            sampler=_fractional_sampler),
        IdentityEntry(
            id="transform.derivative.weyl",
            paper_eq="W^alpha F (x) = (-1)^alpha x^(-alpha)/Gamma(1-alpha) 2F3(A,I;B,C,(1-alpha)I;x) (termwise)",
            lhs=_formal("weyl"),
            rhs=_derivative_rhs(phase=True),
            mode="formal",
            sampler=_fractional_sampler),
        IdentityEntry(
            id="transform.derivative.classical",
            paper_eq="d^alpha/dx^alpha F (x) = x^(-alpha)/Gamma(1-alpha) 2F3(A,I;B,C,(1-alpha)I;x) (termwise)",
            lhs=_formal("classical"),
            rhs=_derivative_rhs(),
            mode="formal",
            sampler=_fractional_sampler),
        IdentityEntry(
            id="transform.monomial.erdelyi-kober-left",
            paper_eq="E^{alpha,eta}_{0,x} t^k = Gamma(eta+k)/Gamma(alpha+eta+k) x^k",
            lhs=_monomials_lhs(_ek_left_monomial),
            rhs=_monomials_rhs(lambda p, k: _gamma_ratio(p.eta + k, p.alpha + p.eta + k) * p.x ** k),
            corrected_rhs=_monomials_rhs(lambda p, k: _gamma_ratio(p.eta + k + 1, p.alpha + p.eta + k + 1) * p.x ** k),
            corrected_form="E^{alpha,eta}_{0,x} t^k = Gamma(eta+k+1)/Gamma(alpha+eta+k+1) x^k",
            status="suspected-typo",
            mode="quadrature",
            scalar_only=True,
            sampler=_monomial_sampler),
        IdentityEntry(
            id="transform.monomial.erdelyi-kober-right",
            paper_eq="K^{-alpha,eta}_{x,inf} t^k = Gamma(eta+k)/Gamma(alpha+eta+k) x^k",
            lhs=_monomials_lhs(_ek_right_monomial),
            rhs=_monomials_rhs(lambda p, k: _gamma_ratio(p.eta + k, p.alpha + p.eta + k) * p.x ** k),
            corrected_rhs=_monomials_rhs(lambda p, k: _gamma_ratio(p.eta - k, p.alpha + p.eta - k) * p.x ** k),
            corrected_form="K^{-alpha,eta}_{x,inf} t^k = Gamma(eta-k)/Gamma(alpha+eta-k) x^k for k < eta",
            status="suspected-typo",
            mode="quadrature",
            scalar_only=True,
            sampler=lambda rng, dim: _monomial_sampler(rng, dim, eta=(6.2, 6.8))),
        IdentityEntry(
            id="transform.monomial.rl-integral",
            paper_eq="I^mu_{0+} t^k = Gamma(k+1)/Gamma(mu+k+1) x^(mu+k)",
            lhs=lambda p, ctx: [rl_integral(f, p.alpha, p.x, n=ctx.quad_n) for f in _monomial()],
            rhs=_monomials_rhs(_power_rule(_alpha, lambda p: p.x)),
            mode="quadrature",
            scalar_only=True,
            sampler=_monomial_sampler),
        IdentityEntry(
            id="transform.monomial.rl-left",
            paper_eq="I^alpha_{b+} (t-b)^k = Gamma(k+1)/Gamma(alpha+k+1) (x-b)^(alpha+k)",
            lhs=_rl_left_monomials(_alpha),
            rhs=_monomials_rhs(_power_rule(_alpha, _x_minus_b)),
            mode="quadrature",
            scalar_only=True,
            sampler=_monomial_sampler),
        IdentityEntry(
            id="transform.monomial.rl-right",
            paper_eq="I^alpha_{c-} (c-t)^k = Gamma(k+1)/Gamma(alpha+k+1) (c-x)^(alpha+k)",
            lhs=_rl_right_monomials(_alpha),
            rhs=_monomials_rhs(_power_rule(_alpha, _c_minus_x)),
            mode="quadrature",
            scalar_only=True,
            sampler=_monomial_sampler),
        IdentityEntry(
            id="transform.monomial.derivative-left",
            paper_eq="D^alpha_{b+} (t-b)^k = d/dx I^(1-alpha)_{b+} (t-b)^k, "
                     "I^(1-alpha)_{b+} (t-b)^k = Gamma(k+1)/Gamma(k+2-alpha) (x-b)^(k+1-alpha)",
            lhs=_rl_left_monomials(_complement),
            rhs=_monomials_rhs(_power_rule(_complement, _x_minus_b)),
            mode="quadrature",
            scalar_only=True,
            sampler=_monomial_sampler),
        IdentityEntry(
            id="transform.monomial.derivative-right",
            paper_eq="D^alpha_{c-} (c-t)^k = (-1) d/dx I^(1-alpha)_{c-} (c-t)^k, "
                     "I^(1-alpha)_{c-} (c-t)^k = Gamma(k+1)/Gamma(k+2-alpha) (c-x)^(k+1-alpha)",
            lhs=_rl_right_monomials(_complement),
            rhs=_monomials_rhs(_power_rule(_complement, _c_minus_x)),
            mode="quadrature",
            scalar_only=True,
            sampler=_monomial_sampler),
        IdentityEntry(
            id="transform.monomial.classical",
            paper_eq="d^mu/dx^mu x^k = Gamma(k+1)/Gamma(k+1-mu) x^(k-mu), mu < 0",
            lhs=lambda p, ctx: [rl_integral(f, -p.mu, p.x, n=ctx.quad_n) for f in _monomial()],
            rhs=_monomials_rhs(_power_rule(lambda p: -p.mu, lambda p: p.x)),
            mode="quadrature",
            scalar_only=True,
            sampler=_monomial_sampler),
        IdentityEntry(
            id="transform.monomial.weyl-integral",
            paper_eq="W^{-alpha} t^k = x^(alpha+k)/(alpha)_k (termwise)",
            lhs=_termwise_monomials("weyl-integral"),
            rhs=_monomials_rhs(lambda p, k: _gamma_ratio(p.alpha, p.alpha + k)),
            mode="formal",
            scalar_only=True,
            sampler=_monomial_sampler),
        IdentityEntry(
            id="transform.monomial.weyl",
            paper_eq="W^alpha t^k = (-1)^alpha Gamma(k+1)/Gamma(k+1-alpha) x^(k-alpha) (termwise)",
            lhs=_termwise_monomials("weyl"),
            rhs=_monomials_rhs(lambda p, k: np.exp(1j * np.pi * p.alpha) * special.poch(k + 1 - p.alpha, p.alpha)),
            mode="formal",
            scalar_only=True,
            sampler=_monomial_sampler),
    ]


def transform_catalog():
    """ Identity entries for the integral transforms and fractional operators """
    return _catalog()
