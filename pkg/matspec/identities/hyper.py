"""
Catalog of 1F2 identities: integral representations, convolution integrals,
expansions in 0F1, summation formulas, contiguous relations and the
differential equations with their Frobenius solutions.

F denotes 1F2(A;B,C;.) throughout.
"""

import logging
from math import factorial
import numpy as np
from matspec.matrix.core import matrix_power
from matspec.special.gamma_beta import matrix_gamma, reciprocal_gamma, matrix_beta, pochhammer_term
from matspec.series.formal import MatrixPowerSeries
from matspec.series.operators import Operator, theta_shifted, annihilation_residual
from matspec.transforms.quadrature import integrate_matrix_weight
from matspec.transforms.integrals import laplace_transform
from matspec.identities.registry import IdentityEntry
from matspec.identities.samplers import frobenius_spectra, ParamDraw
from matspec.identities.terms import hyp, hyp_fn, hyp_series, converged_sum, abc, inv

logger = logging.getLogger(__name__)

THETA, D, Z = Operator.theta(), Operator.derivative, Operator.z


def _shifted(low=0.4, high=1.3, of="A"):
    """ Sampler field: getattr(params, of) + d I with d drawn in (low, high) """
    def draw_field(draw, p):
        return getattr(p, of) + draw.uniform(low, high) * p.I
    return draw_field


def _stable(draw, p):
    return draw.draw()[0]


def _real(low, high):
    return lambda draw, p: draw.uniform(low, high)


# Integral representations

def _euler_integral(other, p, ctx, denominator):
    """ Gamma(D) Gamma^-1(A) Gamma^-1(D-A) int t^(A-I) (1-t)^(D-A-I) 0F1(-;other;zt) dt """
    inner = hyp_fn((), (other,), ctx)
    integral = integrate_matrix_weight(lambda t: inner(p.z * t), p.A - p.I, denominator - p.A - p.I,
                                       n=ctx.quad_n).value
    return matrix_gamma(denominator) @ reciprocal_gamma(p.A) @ reciprocal_gamma(denominator - p.A) @ integral


def _beta_weighted_lhs(p, ctx, right_exp):
    f = hyp_fn((p.A,), (p.B, p.C), ctx)
    return integrate_matrix_weight(lambda t: f(p.z * t), p.A1 - p.I, right_exp, n=ctx.quad_n).value


def _beta_weighted_shifted_lhs(p, ctx):
    return _beta_weighted_lhs(p, ctx, p.B1 - p.A1 - p.I)


def _beta_weighted_shifted_rhs(p, ctx):
    front = matrix_gamma(p.A1) @ matrix_gamma(p.B1 - p.A1) @ reciprocal_gamma(p.B1)
    return front @ hyp((p.A, p.A1), (p.B, p.B1, p.C), p.z, ctx)


def _beta_weighted_unshifted_lhs(p, ctx):
    return _beta_weighted_lhs(p, ctx, p.B1 - p.I)


def _beta_weighted_unshifted_rhs(third):
    def rhs(p, ctx):
        return matrix_beta(p.A1, p.B1) @ hyp((p.A, p.A1), (p.B, third(p), p.C), p.z, ctx)
    return rhs


def _convolution_lhs(p, ctx, arg):
    """ int_lo^hi (hi-s)^(P-I) (s-lo)^(Q-I) F(arg(s)) ds over (lo, hi) = (p.lo, p.hi) """
    f = hyp_fn((p.A,), (p.B, p.C), ctx)
    return integrate_matrix_weight(lambda s: f(arg(s)), p.Q - p.I, p.P - p.I,
                                   interval=(p.lo, p.hi), n=ctx.quad_n).value


def _convolution_rhs(p, ctx, num, den, arg):
    span = p.hi - p.lo
    return matrix_beta(p.P, p.Q) @ matrix_power(span, p.P + p.Q - p.I) @ hyp((p.A, num), den, arg, ctx)


def _laplace_quadratic_lhs(p, ctx):
    f = hyp_fn((p.A,), (p.B, p.C), ctx)
    return laplace_transform(lambda t: f(p.lam ** 2 * t * t), p.s, exponent=2 * p.A1 - p.I,
                             growth=2 * abs(p.lam), tol=1e-12)


def _laplace_quadratic_rhs(num):
    def rhs(p, ctx):
        front = matrix_gamma(2 * p.A1) @ matrix_power(p.s, -2 * p.A1)
        return front @ hyp((p.A, *num(p)), (p.B, p.C), 4 * p.lam ** 2 / p.s ** 2, ctx)
    return rhs


def _laplace_sampler(rng, dim):
    return abc(rng, dim, A1=lambda draw, p: draw.draw(0.3, 1.8)[0], s=_real(1.5, 3.0),
               lam=lambda draw, p: p.s * draw.uniform(0.05, 0.38))


def _interval_sampler(rng, dim, lo=None):
    def hi(draw, p):
        return p.lo + draw.uniform(0.5, 1.5)
    return abc(rng, dim, P=_stable, Q=_stable, lo=_real(-0.5, 0.5) if lo is None else lo, hi=hi)


# Expansions in 0F1 and back

def _expansion(p, ctx, diff, sign, inner):
    """ sum_k sign^k (diff)_k / k! [(B)_k]^-1 [(C)_k]^-1 z^k inner(k) as a formal series """
    K = ctx.truncation_k
    total = None
    for k in range(K + 1):
        coef = sign ** k * pochhammer_term(diff, k) @ inv(pochhammer_term(p.B, k)) \
            @ inv(pochhammer_term(p.C, k)) / factorial(k)
        term = inner(k).truncate(K - k + 1).shift(k).lmul(coef)
        total = term if total is None else total + term
    return total


def _series_F(p, ctx, A=None, B=None, C=None):
    return hyp_series((p.A if A is None else A,), (p.B if B is None else B, p.C if C is None else C), ctx)


# Summation formulas

def _numerator_shift_lhs(p, ctx):
    return converged_sum(lambda k: pochhammer_term(p.A, k) / factorial(k) * p.t ** k
                         @ hyp((p.A + k * p.I,), (p.B, p.C), p.z, ctx))


def _numerator_shift_rhs(p, ctx):
    return matrix_power(1 - p.t, -p.A) @ hyp((p.A,), (p.B, p.C), p.z / (1 - p.t), ctx)


def _taylor_shift_lhs(p, ctx):
    def term(k):
        coef = pochhammer_term(p.A, k) @ inv(pochhammer_term(p.B, k)) @ inv(pochhammer_term(p.C, k))
        return coef / factorial(k) * p.t ** k @ hyp((p.A + k * p.I,), (p.B + k * p.I, p.C + k * p.I), p.z, ctx)
    return converged_sum(term)


def _mixed_lhs(p, ctx):
    def term(k):
        coef = pochhammer_term(p.E, k) @ inv(pochhammer_term(p.B, k)) @ inv(pochhammer_term(p.C, k))
        return coef / factorial(k) * p.z ** k @ hyp((p.A,), (p.B + k * p.I, p.C + k * p.I), p.z, ctx)
    return converged_sum(term)


def _mixed_rhs(with_factor):
    def rhs(p, ctx):
        value = hyp((p.A + p.E,), (p.B, p.C), p.z, ctx)
        return matrix_power(1 - p.t, -p.A) @ value if with_factor else value
    return rhs


# Differential equations

def _theta_operator(p):
    return THETA * (THETA + (p.B - p.I)) * (THETA + (p.C - p.I)) - Z(1) * (THETA + p.A)


def _third_derivative_operator(p):
    return Z(2) * D(3) + (p.B + p.C + p.I) * (Z(1) * D(2)) + (p.B @ p.C - Z(1)) * D(1) - p.A


def _frobenius_operator(p, alpha, printed):
    """ Operator annihilating Psi when z^alpha Psi solves the theta equation """
    A, B, C, I = p.A, p.B, p.C, p.I
    if printed:
        second = 3 * alpha - B - C + I
        last = alpha + A - Z(-1) * (alpha @ (alpha - I - B) @ (alpha - I + C))
    else:
        second = 3 * alpha + B + C + I
        last = alpha + A - Z(-1) * (alpha @ (alpha + B - I) @ (alpha + C - I))
    first = 3 * alpha @ (alpha - I) + 2 * alpha @ (B + C + I) + B @ C
    return Z(2) * D(3) + second * (Z(1) * D(2)) + (first - Z(1)) * D(1) - last


def _frobenius_solutions(p, ctx, y2_denominator):
    """ (alpha, Psi) for the exponents 0, I-B and I-C """
    A, B, C, I = p.A, p.B, p.C, p.I
    return [(0 * I, _series_F(p, ctx)),
            (I - B, hyp_series((I - B + A,), (2 * I - B, y2_denominator), ctx)),
            (I - C, hyp_series((I - C + A,), (I + B - C, 2 * I - C), ctx))]


def _frobenius_residual(printed):
    def lhs(p, ctx):
        return max(annihilation_residual(_frobenius_operator(p, alpha, printed), psi).residual
                   for alpha, psi in _frobenius_solutions(p, ctx, p.I + p.C - p.B))
    return lhs


def _frobenius_y(index, y2_denominator=None):
    """ Residual of the theta equation on z^alpha Psi for one Frobenius exponent """
    def lhs(p, ctx):
        den = p.I + p.C - p.B if y2_denominator is None else y2_denominator(p)
        alpha, psi = _frobenius_solutions(p, ctx, den)[index]
        solution = MatrixPowerSeries(psi.coeffs, start=psi.start, offset=alpha)
        return annihilation_residual(_theta_operator(p), solution)
    return lhs


def _frobenius_sampler(rng, dim):
    draw = ParamDraw(rng, dim)
    b, c = frobenius_spectra(draw)
    p = abc(rng, dim)
    p.A, p.B, p.C = draw.draw()[0], draw.matrix(b), draw.matrix(c)
    return p


def _contiguous(p, ctx, which):
    A, B, C, I = p.A, p.B, p.C, p.I
    if which == "a":
        return _series_F(p, ctx, A=A + I).lmul(A)
    if which == "b":
        return _series_F(p, ctx, B=B - I).lmul(B - I)
    return _series_F(p, ctx, C=C - I).lmul(C - I)


def _catalog():
    return [
        IdentityEntry(
            id="hyper.euler-integral.b",
            paper_eq="1F2(A;B,C;z) = Gamma(B) Gamma^-1(A) Gamma^-1(B-A) int_0^1 t^(A-I) (1-t)^(B-A-I) "
                     "0F1(-;C;zt) dt",
            lhs=lambda p, ctx: hyp((p.A,), (p.B, p.C), p.z, ctx),
            rhs=lambda p, ctx: _euler_integral(p.C, p, ctx, p.B),
            mode="quadrature",
            sampler=lambda rng, dim: abc(rng, dim, B=_shifted())),
        IdentityEntry(
            id="hyper.euler-integral.c",
            paper_eq="1F2(A;B,C;z) = Gamma(C) Gamma^-1(A) Gamma^-1(C-A) int_0^1 t^(A-I) (1-t)^(C-A-I) "
                     "0F1(-;B;zt) dt",
            lhs=lambda p, ctx: hyp((p.A,), (p.B, p.C), p.z, ctx),
            rhs=lambda p, ctx: _euler_integral(p.B, p, ctx, p.C),
            mode="quadrature",
            sampler=lambda rng, dim: abc(rng, dim, C=_shifted())),
        IdentityEntry(
            id="hyper.beta-weighted.shifted",
            paper_eq="int_0^1 t^(A1-I) (1-t)^(B1-A1-I) F(zt) dt = Gamma(A1) Gamma(B1-A1) Gamma^-1(B1) "
                     "2F3(A,A1;B,B1,C;z)",
            lhs=_beta_weighted_shifted_lhs,
            rhs=_beta_weighted_shifted_rhs,
            mode="quadrature",
            sampler=lambda rng, dim: abc(rng, dim, A1=_stable, B1=_shifted(of="A1"))),
        IdentityEntry(
            id="hyper.beta-weighted.unshifted",
            paper_eq="int_0^1 t^(A1-I) (1-t)^(B1-I) F(zt) dt = Gamma(A1) Gamma(B1) Gamma^-1(A1+B1) "
                     "2F3(A,A1;B,B+B1,C;z)",
            lhs=_beta_weighted_unshifted_lhs,
            rhs=_beta_weighted_unshifted_rhs(lambda p: p.B + p.B1),
            corrected_rhs=_beta_weighted_unshifted_rhs(lambda p: p.A1 + p.B1),
            corrected_form="... 2F3(A,A1;B,A1+B1,C;z)",
            status="suspected-typo",
            mode="quadrature",
            sampler=lambda rng, dim: abc(rng, dim, A1=_stable, B1=_stable)),
        IdentityEntry(
            id="hyper.convolution.shifted-base",
            paper_eq="int_t^x (x-s)^(P-I) (s-t)^(Q-I) F(z(s-t)) ds = B(P,Q) (x-t)^(P+Q-I) "
                     "2F3(A,P;B,B+Q,C;z(x-t))",
            lhs=lambda p, ctx: _convolution_lhs(p, ctx, lambda s: p.z * (s - p.lo)),
            rhs=lambda p, ctx: _convolution_rhs(p, ctx, p.P, (p.B, p.B + p.Q, p.C), p.z * (p.hi - p.lo)),
            corrected_rhs=lambda p, ctx: _convolution_rhs(p, ctx, p.Q, (p.B, p.C, p.P + p.Q),
                                                          p.z * (p.hi - p.lo)),
            corrected_form="B(P,Q) (x-t)^(P+Q-I) 2F3(A,Q;B,C,P+Q;z(x-t))",
            status="suspected-typo",
            mode="quadrature",
            sampler=_interval_sampler),
        IdentityEntry(
            id="hyper.convolution.interval",
            paper_eq="int_x^y (y-t)^(P-I) (t-x)^(Q-I) F(t-x) dt = B(P,Q) (y-x)^(P+Q-I) 2F3(A,Q;P+Q,B,C;y-x)",
            lhs=lambda p, ctx: _convolution_lhs(p, ctx, lambda s: s - p.lo),
            rhs=lambda p, ctx: _convolution_rhs(p, ctx, p.Q, (p.P + p.Q, p.B, p.C), p.hi - p.lo),
            mode="quadrature",
            sampler=_interval_sampler),
        IdentityEntry(
            id="hyper.convolution.interval-scaled",
            paper_eq="int_x^y (y-t)^(P-I) (t-x)^(Q-I) F(z(t-x)) dt = B(P,Q) (y-x)^(P+Q-I) "
                     "2F3(A,Q;P+Q,B,C;z(y-x))",
            lhs=lambda p, ctx: _convolution_lhs(p, ctx, lambda s: p.z * (s - p.lo)),
            rhs=lambda p, ctx: _convolution_rhs(p, ctx, p.Q, (p.P + p.Q, p.B, p.C), p.z * (p.hi - p.lo)),
            mode="quadrature",
            sampler=_interval_sampler),
        IdentityEntry(
            id="hyper.convolution.interval-reflected",
            paper_eq="int_x^y (y-t)^(P-I) (t-x)^(Q-I) F(x-t) dt = B(P,Q) (y-x)^(P+Q-I) 2F3(A,Q;P+Q,B,C;x-y)",
            lhs=lambda p, ctx: _convolution_lhs(p, ctx, lambda s: p.lo - s),
            rhs=lambda p, ctx: _convolution_rhs(p, ctx, p.Q, (p.P + p.Q, p.B, p.C), p.lo - p.hi),
            mode="quadrature",
            sampler=_interval_sampler),
        IdentityEntry(
            id="hyper.convolution.power-weight",
            paper_eq="int_0^x t^(P-I) (x-t)^(Q-I) F(t) dt = x^(P+Q-I) B(P,Q) 2F3(A,P;B,C,P+Q;x)",
            lhs=lambda p, ctx: _convolution_lhs(_swap_pq(p), ctx, lambda s: s),
            rhs=lambda p, ctx: _convolution_rhs(p, ctx, p.P, (p.B, p.C, p.P + p.Q), p.hi),
            mode="quadrature",
            sampler=lambda rng, dim: _interval_sampler(rng, dim, lo=0.0)),
        IdentityEntry(
            id="hyper.convolution.origin",
            paper_eq="int_0^x s^(B1-I) (x-s)^(A1-I) F(z(x-s)) ds = Gamma(A1) Gamma(B1) Gamma^-1(A1+B1) "
                     "(x-t)^(A1+B1-I) 2F3(A,A1;B,B+B1,C;zx)",
            lhs=_origin_lhs,
            rhs=_origin_rhs(lambda p: p.B + p.B1),
            corrected_rhs=_origin_rhs(lambda p: p.A1 + p.B1),
            corrected_form="B(A1,B1) x^(A1+B1-I) 2F3(A,A1;B,C,A1+B1;zx)",
            status="suspected-typo",
            mode="quadrature",
            sampler=lambda rng, dim: abc(rng, dim, A1=_stable, B1=_stable, x=_real(0.5, 1.5))),
        IdentityEntry(
            id="hyper.laplace-quadratic",
            paper_eq="int_0^inf exp(-pt) t^(2A1-I) F(lambda^2 t^2) dt = Gamma(2A1) p^(-2A1) "
                     "3F2(A,A1/2,(A1+I)/2;B,C;4 lambda^2/p^2)",
            lhs=_laplace_quadratic_lhs,
            rhs=_laplace_quadratic_rhs(lambda p: (0.5 * p.A1, 0.5 * (p.A1 + p.I))),
            corrected_rhs=_laplace_quadratic_rhs(lambda p: (p.A1, p.A1 + 0.5 * p.I)),
            corrected_form="Gamma(2A1) p^(-2A1) 3F2(A,A1,A1+I/2;B,C;4 lambda^2/p^2)",
            status="suspected-typo",
            mode="laplace",
            sampler=_laplace_sampler),
        IdentityEntry(
            id="hyper.expansion.bessel-c",
            paper_eq="F(z) = sum_k (-1)^k (B-A)_k / k! [(B)_k]^-1 [(C)_k]^-1 z^k 0F1(-;C+kI;z)",
            lhs=lambda p, ctx: _series_F(p, ctx),
            rhs=lambda p, ctx: _expansion(p, ctx, p.B - p.A, -1,
                                          lambda k: hyp_series((), (p.C + k * p.I,), ctx)),
            mode="formal",
            sampler=lambda rng, dim: abc(rng, dim, B=_shifted())),
        IdentityEntry(
            id="hyper.expansion.bessel-b",
            paper_eq="F(z) = sum_k (-1)^k (C-A)_k / k! [(B)_k]^-1 [(C)_k]^-1 z^k 0F1(-;B+kI;z)",
            lhs=lambda p, ctx: _series_F(p, ctx),
            rhs=lambda p, ctx: _expansion(p, ctx, p.C - p.A, -1,
                                          lambda k: hyp_series((), (p.B + k * p.I,), ctx)),
            mode="formal",
            sampler=lambda rng, dim: abc(rng, dim, C=_shifted())),
        IdentityEntry(
            id="hyper.expansion.inverse-c",
            paper_eq="0F1(-;C;z) = sum_k (B-A)_k / k! [(B)_k]^-1 [(C)_k]^-1 z^k 1F2(A;B+kI,C+kI;z)",
            lhs=lambda p, ctx: hyp_series((), (p.C,), ctx),
            rhs=lambda p, ctx: _expansion(p, ctx, p.B - p.A, 1,
                                          lambda k: _series_F(p, ctx, B=p.B + k * p.I, C=p.C + k * p.I)),
            mode="formal",
            sampler=lambda rng, dim: abc(rng, dim, B=_shifted())),
        IdentityEntry(
            id="hyper.expansion.inverse-b",
            paper_eq="0F1(-;B;z) = sum_k (C-A)_k / k! [(B)_k]^-1 [(C)_k]^-1 z^k 1F2(A;B+kI,C+kI;z)",
            lhs=lambda p, ctx: hyp_series((), (p.B,), ctx),
            rhs=lambda p, ctx: _expansion(p, ctx, p.C - p.A, 1,
                                          lambda k: _series_F(p, ctx, B=p.B + k * p.I, C=p.C + k * p.I)),
            mode="formal",
            sampler=lambda rng, dim: abc(rng, dim, C=_shifted())),
        IdentityEntry(
            id="hyper.sum.numerator-shift",
            paper_eq="sum_k (A)_k / k! 1F2(A+kI;B,C;z) t^k = (1-t)^(-A) 1F2(A;B,C;z/(1-t))",
            lhs=_numerator_shift_lhs,
            rhs=_numerator_shift_rhs,
            mode="pointwise",
            sampler=lambda rng, dim: abc(rng, dim, radius=1.0, t=_real(-0.4, 0.4))),
        IdentityEntry(
            id="hyper.sum.taylor-shift",
            paper_eq="sum_k (A)_k [(B)_k]^-1 [(C)_k]^-1 / k! 1F2(A+kI;B+kI,C+kI;z) t^k = 1F2(A;B,C;z+t)",
            lhs=_taylor_shift_lhs,
            rhs=lambda p, ctx: hyp((p.A,), (p.B, p.C), p.z + p.t, ctx),
            mode="pointwise",
            sampler=lambda rng, dim: abc(rng, dim, t=lambda draw, p: draw.point(1.0))),
        IdentityEntry(
            id="hyper.sum.mixed",
            paper_eq="sum_k (E)_k [(B)_k]^-1 [(C)_k]^-1 / k! 1F2(A;B+kI,C+kI;z) z^k = (1-t)^(-A) 1F2(A+E;B,C;z)",
            lhs=_mixed_lhs,
            rhs=_mixed_rhs(True),
            corrected_rhs=_mixed_rhs(False),
            corrected_form="sum_k ... z^k = 1F2(A+E;B,C;z)",
            status="suspected-typo",
            mode="pointwise",
            sampler=lambda rng, dim: abc(rng, dim, E=_stable, t=_real(-0.5, 0.5))),
        IdentityEntry(
            id="hyper.contiguous.theta-a",
            paper_eq="(theta I + A) F = A 1F2(A+I;B,C;z)",
            lhs=lambda p, ctx: theta_shifted(p.A)(_series_F(p, ctx)),
            rhs=lambda p, ctx: _contiguous(p, ctx, "a"),
            mode="formal",
            sampler=abc),
        IdentityEntry(
            id="hyper.contiguous.theta-b",
            paper_eq="(theta I + B - I) F = (B-I) 1F2(A;B-I,C;z)",
            lhs=lambda p, ctx: theta_shifted(p.B - p.I)(_series_F(p, ctx)),
            rhs=lambda p, ctx: _contiguous(p, ctx, "b"),
            mode="formal",
            sampler=abc),
        IdentityEntry(
            id="hyper.contiguous.theta-c",
            paper_eq="(theta I + C - I) F = (C-I) 1F2(A;B,C-I;z)",
            lhs=lambda p, ctx: theta_shifted(p.C - p.I)(_series_F(p, ctx)),
            rhs=lambda p, ctx: _contiguous(p, ctx, "c"),
            mode="formal",
            sampler=abc),
        IdentityEntry(
            id="hyper.contiguous.difference-ab",
            paper_eq="(A-B+I) F = A 1F2(A+I;B,C;z) - (B-I) 1F2(A;B-I,C;z)",
            lhs=lambda p, ctx: _series_F(p, ctx).lmul(p.A - p.B + p.I),
            rhs=lambda p, ctx: _contiguous(p, ctx, "a") - _contiguous(p, ctx, "b"),
            mode="formal",
            sampler=abc),
        IdentityEntry(
            id="hyper.contiguous.difference-ac",
            paper_eq="(A-C+I) F = A 1F2(A+I;B,C;z) - (C-I) 1F2(A;B,C-I;z)",
            lhs=lambda p, ctx: _series_F(p, ctx).lmul(p.A - p.C + p.I),
            rhs=lambda p, ctx: _contiguous(p, ctx, "a") - _contiguous(p, ctx, "c"),
            mode="formal",
            sampler=abc),
        IdentityEntry(
            id="hyper.contiguous.difference-bc",
            paper_eq="(B-C) F = (B-I) 1F2(A;B-I,C;z) - (C-I) 1F2(A;B,C-I;z)",
            lhs=lambda p, ctx: _series_F(p, ctx).lmul(p.B - p.C),
            rhs=lambda p, ctx: _contiguous(p, ctx, "b") - _contiguous(p, ctx, "c"),
            mode="formal",
            sampler=abc),
        IdentityEntry(
            id="hyper.ode.theta",
            paper_eq="[theta (theta I + B - I)(theta I + C - I) - z (theta I + A)] F = 0",
            lhs=lambda p, ctx: annihilation_residual(_theta_operator(p), _series_F(p, ctx)),
            rhs=None,
            mode="formal",
            sampler=abc),
        IdentityEntry(
            id="hyper.ode.theta-over-z",
            paper_eq="(theta I + B)(theta I + C)(theta I + I)(F/z) - (theta I + A) F = 0",
            lhs=lambda p, ctx: ((THETA + p.B) * (THETA + p.C) * (THETA + 1.0))(_series_F(p, ctx).shift(-1)),
            rhs=lambda p, ctx: theta_shifted(p.A)(_series_F(p, ctx)),
            mode="formal",
            sampler=abc),
        IdentityEntry(
            id="hyper.ode.third-derivative",
            paper_eq="z^2 F''' + (B+C+I) z F'' + (BC - zI) F' - A F = 0",
            lhs=lambda p, ctx: annihilation_residual(_third_derivative_operator(p), _series_F(p, ctx)),
            rhs=None,
            mode="formal",
            sampler=abc),
        IdentityEntry(
            id="hyper.ode.frobenius-operator",
            paper_eq="z^2 Psi''' + (3 alpha I - B - C + I) z Psi'' + [3 alpha (alpha-1) I + 2 alpha (B+C+I) "
                     "+ (BC - zI)] Psi' - [alpha I + A - (alpha/z)((alpha-1)I - B)((alpha-1)I + C)] Psi = 0",
            lhs=_frobenius_residual(printed=True),
            rhs=None,
            corrected_lhs=_frobenius_residual(printed=False),
            corrected_form="z^2 Psi''' + (3 alpha + B + C + I) z Psi'' + [3 alpha (alpha-1) + 2 alpha (B+C+I) "
                           "+ BC - z] Psi' - [alpha + A - (1/z) alpha (alpha+B-I)(alpha+C-I)] Psi = 0",
            status="suspected-typo",
            mode="formal",
            sampler=_frobenius_sampler),
        IdentityEntry(
            id="hyper.frobenius.y1",
            paper_eq="Y1 = 1F2(A;B,C;z) solves the theta equation",
            lhs=_frobenius_y(0),
            rhs=None,
            mode="formal",
            sampler=_frobenius_sampler),
        IdentityEntry(
            id="hyper.frobenius.y2",
            paper_eq="Y2 = z^(I-B) 1F2(I-B+A;2I-B,I-C+B;z) solves the theta equation",
            lhs=_frobenius_y(1, lambda p: p.I - p.C + p.B),
            rhs=None,
            corrected_lhs=_frobenius_y(1),
            corrected_form="Y2 = z^(I-B) 1F2(I-B+A;2I-B,I+C-B;z)",
            status="suspected-typo",
            mode="formal",
            sampler=_frobenius_sampler),
        IdentityEntry(
            id="hyper.frobenius.y3",
            paper_eq="Y3 = z^(I-C) 1F2(I-C+A;I+B-C,2I-C;z) solves the theta equation",
            lhs=_frobenius_y(2),
            rhs=None,
            mode="formal",
            sampler=_frobenius_sampler),
    ]


def _swap_pq(p):
    """ t^(P-I) (x-t)^(Q-I) is the convolution weight with the roles of P and Q exchanged """
    swapped = type(p)(**vars(p))
    swapped.P, swapped.Q = p.Q, p.P
    return swapped


def _origin_lhs(p, ctx):
    f = hyp_fn((p.A,), (p.B, p.C), ctx)
    return integrate_matrix_weight(lambda s: f(p.z * (p.x - s)), p.B1 - p.I, p.A1 - p.I,
                                   interval=(0.0, p.x), n=ctx.quad_n).value


def _origin_rhs(third):
    def rhs(p, ctx):
        return matrix_beta(p.A1, p.B1) @ matrix_power(p.x, p.A1 + p.B1 - p.I) \
            @ hyp((p.A, p.A1), (p.B, third(p), p.C), p.z * p.x, ctx)
    return rhs


def hyper_catalog():
    """ Identity entries for 1F2 and its relatives """
    return _catalog()
