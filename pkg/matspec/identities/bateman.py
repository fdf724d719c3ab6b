"""
Catalog of identities for the Bateman matrix polynomials B_n^{A,B} and the
companion polynomials J_n^{A,B}: initial conditions, generating functions,
recurrences, multiplication and inversion formulas and the differential
equations.
"""

import logging
from math import comb, factorial
import numpy as np
from matspec.matrix.core import principal_power, norm
from matspec.special.gamma_beta import matrix_gamma, reciprocal_gamma, pochhammer_term
from matspec.special.bateman import (BatemanParams, bateman_B, bateman_series, bateman_J,
                                     hyper_bessel_J, laguerre_L)
from matspec.series.operators import Operator, annihilation_residual, rising
from matspec.series.extraction import bivariate_coefficient
from matspec.identities.registry import IdentityEntry, relative_sum
from matspec.identities.terms import hyp, hyp_series, abc, inv

logger = logging.getLogger(__name__)

THETA, D, Z = Operator.theta(), Operator.derivative, Operator.z

DEGREES = range(1, 7)
FOUR_TERM_DEGREES = range(3, 13)
J_FOUR_TERM_DEGREES = range(3, 9)
GENERATING_ORDER = 10


def _P(p, da=0, db=0):
    return BatemanParams(p.A, p.B).shifted(da, db)


def _stable(draw, p):
    return draw.draw()[0]


def _real(low, high):
    return lambda draw, p: draw.uniform(low, high)


def _sampler(rng, dim):
    return abc(rng, dim, E=_stable, w=lambda draw, p: draw.point(1.0), x=_real(0.3, 1.5))


def _series(n, p, da=0, db=0):
    """ B_n^{A+da I, B+db I} as an exact series with room for three derivatives """
    return bateman_series(n, _P(p, da, db), stop=n + 4)


def _values(fn, degrees=DEGREES):
    return lambda p, ctx: [fn(n, p) for n in degrees]


# Initial conditions

def _b1(p, ctx):
    return p.I - inv(p.A + p.I) @ inv(p.B + p.I) * p.z


def _b2(p, ctx):
    A, B, I, z = p.A, p.B, p.I, p.z
    return inv(A + I) @ inv(A + 2 * I) @ inv(B + I) @ inv(B + 2 * I) * z ** 2 \
        - 2 * inv(A + I) @ inv(B + I) * z + I


# Generating functions

def _extract(gen):
    def lhs(p, ctx):
        return bivariate_coefficient(lambda z, t: gen(p, ctx, z, t), p.z, GENERATING_ORDER)
    return lhs


def _exponential_gen(p, ctx, z, t):
    return np.exp(t) * hyp((), (p.A + p.I, p.B + p.I), -z * t, ctx)


def _pochhammer_gen(p, ctx, z, t):
    return principal_power(1 - t, -p.E) @ hyp((p.E,), (p.A + p.I, p.B + p.I), -z * t / (1 - t), ctx)


def _hyper_bessel_gen(normalized):
    def gen(p, ctx, z, t):
        value = hyper_bessel_J(p.A, p.B, 3 * (z * t) ** (1 / 3), ctx.ctrl)
        if normalized:
            value = matrix_gamma(p.A + p.I) @ matrix_gamma(p.B + p.I) \
                @ principal_power(z * t, -(p.A + p.B) / 3) @ value
        return np.exp(t) * value
    return gen


def _generated(weight):
    def rhs(p, ctx):
        return [weight(n, p) @ bateman_B(n, _P(p), p.z) for n in range(GENERATING_ORDER + 1)]
    return rhs


# Recurrences

def _derivative_lhs(p, ctx):
    return [_series(n, p).derivative() for n in DEGREES]


def _derivative_rhs(printed):
    def rhs(p, ctx):
        front = inv(p.A + p.I) @ inv(p.B + p.I)
        shift = 2 if printed else 1
        return [_series(n - 1, p, shift, shift).lmul((n if printed else -n) * front) for n in DEGREES]
    return rhs


def _shifted_product_lhs(n, p):
    return p.z * bateman_B(n, _P(p, 1, 1), p.z)


def _shifted_product_printed(n, p):
    A, B, I = p.A, p.B, p.I
    return bateman_B(n + 1, _P(p), p.z) + (A + (n + 1) * I) @ (B + (n + 1) * I) @ bateman_B(n, _P(p), p.z)


def _shifted_product_corrected(n, p):
    return (p.A + p.I) @ (p.B + p.I) @ (bateman_B(n, _P(p), p.z) - bateman_B(n + 1, _P(p), p.z))


def _contiguous_printed(which):
    """ B_{n+1} = B_{n+1}^{shifted} + (n+1)(other + (n+1)I) B_n^{shifted} """
    def rhs(n, p):
        da, db = (1, 0) if which == "a" else (0, 1)
        other = p.B if which == "a" else p.A
        return bateman_B(n + 1, _P(p, da, db), p.z) \
            + (n + 1) * (other + (n + 1) * p.I) @ bateman_B(n, _P(p, da, db), p.z)
    return rhs


def _contiguous_lhs(which, printed):
    def lhs(n, p):
        value = bateman_B(n + 1, _P(p), p.z)
        if printed:
            return value
        return ((p.A if which == "a" else p.B) + p.I) @ value
    return lhs


def _contiguous_corrected(which):
    """ (M+I) B_{n+1} = (M+(n+2)I) B_{n+1}^{M+I} - (n+1) B_n^{M+I} for M = A or B """
    def rhs(n, p):
        da, db = (1, 0) if which == "a" else (0, 1)
        m = p.A if which == "a" else p.B
        return (m + (n + 2) * p.I) @ bateman_B(n + 1, _P(p, da, db), p.z) \
            - (n + 1) * bateman_B(n, _P(p, da, db), p.z)
    return rhs


def _contiguous_z_rhs(n, p):
    A, B, I = p.A, p.B, p.I
    front = -(n + 1) * p.z * inv(A + I) @ inv(A + 2 * I) @ inv(B + I)
    return front @ bateman_B(n, _P(p, 2, 1), p.z)


def _four_term_residual(p, ctx):
    A, B, I, z = p.A, p.B, p.I, p.z
    worst = 0.0
    for n in FOUR_TERM_DEGREES:
        s = (3 * n * n - 3 * n + 1) * I + (2 * n - 1) * (A + B) + A @ B
        Bn = [bateman_B(n - j, _P(p), z) for j in range(4)]
        worst = max(worst, relative_sum([
            (A + n * I) @ (B + n * I) @ Bn[0],
            -(s - z * I) @ Bn[1],
            (n - 1) * (A + B + (3 * n - 3) * I) @ Bn[2],
            -(n - 1) * (n - 2) * Bn[3]]))
    return worst


# Multiplication and inversion

def _binomial_rhs(n, p):
    return sum(comb(n, k) * p.w ** k * (1 - p.w) ** (n - k) * bateman_B(k, _P(p), p.z) for k in range(n + 1))


def _laguerre_rhs(printed):
    def rhs(n, p):
        A, B, w = p.A, p.B, p.w
        total = np.zeros_like(p.I)
        for k in range(n + 1):
            den = inv(pochhammer_term(B + p.I, n if printed else k))
            total = total + w ** k * den @ laguerre_L(n - k, A + k * p.I, w) @ laguerre_L(k, B, p.z)
        return factorial(n) * inv(pochhammer_term(A + p.I, n)) @ total
    return rhs


INVERSION_DEGREES = range(9)


def _inversion_residual(p, ctx):
    """
    Coefficient of z^j in sum_k C(n,k) (-1)^k B_k^{A,B}(z) - [(A+I)_n]^-1 [(B+I)_n]^-1 z^n,
    relative to its largest term. The alternating sum cancels to zero for j < n.
    """
    worst = 0.0
    for n in INVERSION_DEGREES:
        polys = [bateman_series(k, _P(p), stop=n + 1) for k in range(n + 1)]
        for j in range(n + 1):
            terms = [comb(n, k) * (-1) ** k * polys[k].coefficient(j) for k in range(j, n + 1)]
            if j == n:
                terms.append(-inv(pochhammer_term(p.A + p.I, n)) @ inv(pochhammer_term(p.B + p.I, n)))
            worst = max(worst, relative_sum(terms))
    return worst


# Differential equations

def _theta_ode(n, p):
    return Z(1) * (THETA - n) - THETA * (THETA + p.A) * (THETA + p.B)


def _third_derivative_ode(n, p):
    A, B, I = p.A, p.B, p.I
    return Z(2) * D(3) + (A + B + 3 * I) * (Z(1) * D(2)) + ((A + I) @ (B + I) - Z(1)) * D(1) + n


def _worst_annihilation(operator):
    def lhs(p, ctx):
        return max(annihilation_residual(operator(n, p), _series(n, p)).residual for n in DEGREES)
    return lhs


def _third_derivative_printed(p, ctx):
    """ The printed form read literally: the middle terms multiply as series """
    A, B, I = p.A, p.B, p.I
    worst = 0.0
    for n in DEGREES:
        y = _series(n, p)
        parts = [(Z(2) * D(3))(y),
                 ((A + B + 3 * I) * (Z(1) * D(2)))(y) * (((A + I) @ (B + I) - Z(1)) * D(1))(y),
                 y.lmul(n)]
        worst = max(worst, _series_sum_residual(parts))
    return worst


def _series_sum_residual(parts):
    total = parts[0]
    for part in parts[1:]:
        total = total + part
    scale = max(max(norm(c) for c in part.coeffs) for part in parts)
    worst = max(norm(c) for c in total.coeffs)
    return worst / scale if scale > 0 else worst


def _shifted_theta_ode(sign):
    def operator(n, p):
        A, B, I = p.A, p.B, p.I
        s = (3 * n * n - 3 * n + 1) * I + (2 * n - 1) * (A + B) + A @ B
        phi = THETA - n
        return n * (A + n * I) @ (B + n * I) + sign * ((s - Z(1)) * phi) \
            + (A + B + (3 * n - 3) * I) * rising(phi, 2) + rising(phi, 3)
    return operator


def _ladder_lhs(p, ctx):
    n = DEGREES[-1]
    return [_series(n - k, p).truncate(n + 1).lmul(1 / factorial(n - k)) for k in range(n + 1)]


def _ladder_rhs(p, ctx):
    n = DEGREES[-1]
    top = _series(n, p).truncate(n + 1).lmul(1 / factorial(n))
    return [rising(THETA - n, k)(top).lmul((-1) ** k) for k in range(n + 1)]


def _theta_powers_lhs(p, ctx):
    f = hyp_series((p.A,), (p.B, p.C), ctx)
    return [(THETA ** k)(f) for n in DEGREES for k in (1, 2, 3)]


def _theta_powers_rhs(p, ctx):
    f = hyp_series((p.A,), (p.B, p.C), ctx)
    out = []
    for n in DEGREES:
        phi = THETA - n
        out.append((rising(phi, 1) + n)(f))
        out.append((rising(phi, 2) + (2 * n - 1) * rising(phi, 1) + n * n)(f))
        out.append((rising(phi, 3) + 3 * (n - 1) * rising(phi, 2) + (3 * n * n - 3 * n + 1) * rising(phi, 1)
                    + n ** 3)(f))
    return out


# J polynomials

def _J(n, p, da=0.0, db=0.0, x=None):
    """ J_n^{A + da I, B + db I}(x) """
    return bateman_J(n, BatemanParams(p.A + da * p.I, p.B + db * p.I), p.x if x is None else x)


def _j_relation_lhs(n, p):
    return bateman_J(n, BatemanParams(p.A, p.B - 0.5 * p.A), np.sqrt(complex(p.z)))


def _j_relation_rhs(n, p):
    A, B, I = p.A, p.B, p.I
    front = matrix_gamma(B + (n + 1) * I) / factorial(n) @ reciprocal_gamma(A + I) @ reciprocal_gamma(B + I)
    return front @ principal_power(p.z, 0.5 * A) @ bateman_B(n, _P(p), p.z)


def _j_recurrence_a_lhs(n, p):
    return p.A @ bateman_J(n, BatemanParams(p.A, p.B - 0.5 * p.I), p.x)


def _j_recurrence_a_rhs(n, p):
    return p.x * _J(n, p, da=-1.0) + p.x * _J(n - 1, p, da=1.0)


def _j_mixed_lhs(n, p):
    return (p.A + n * p.I) @ _J(n, p)


def _j_mixed_rhs(n, p):
    return (n * p.I + p.B + 0.5 * p.A) @ _J(n - 1, p) + p.x * _J(n, p, da=-1.0, db=0.5)


def _j_four_term(printed, middle_sign=-1.0):
    def lhs(p, ctx):
        A, B, I, x = p.A, p.B, p.I, p.x
        beta = B + 0.5 * A
        worst = 0.0
        for n in J_FOUR_TERM_DEGREES:
            s = (3 * n * n - 3 * n + 1) * I + (2 * n - 1) * (A + beta) + A @ beta
            J = [_J(n - j, p) for j in range(4)]
            if printed:
                first = n * (B + n * I) @ J[0]
                middle = middle_sign * (beta + (n - 1) * I) @ (B + 1.5 * A + (3 * n - 3) * I) @ J[2]
            else:
                first = n * (A + n * I) @ J[0]
                middle = -(A + beta + (3 * n - 3) * I) @ (beta + (n - 1) * I) @ J[2]
            worst = max(worst, relative_sum([
                first, -(s - x * x * I) @ J[1], -middle,
                -(beta + (n - 1) * I) @ (beta + (n - 2) * I) @ J[3]]))
        return worst
    return lhs


def _catalog():
    return [
        IdentityEntry(
            id="bateman.initial.b0",
            paper_eq="B_0^{A,B}(z) = I",
            lhs=lambda p, ctx: bateman_B(0, _P(p), p.z),
            rhs=lambda p, ctx: p.I,
            mode="pointwise",
            sampler=_sampler),
        IdentityEntry(
            id="bateman.initial.b1",
            paper_eq="B_1^{A,B}(z) = -(A+I)^-1 (B+I)^-1 z + I",
            lhs=lambda p, ctx: bateman_B(1, _P(p), p.z),
            rhs=_b1,
            mode="pointwise",
            sampler=_sampler),
        IdentityEntry(
            id="bateman.initial.b2",
            paper_eq="B_2^{A,B}(z) = (A+I)^-1 (A+2I)^-1 (B+I)^-1 (B+2I)^-1 z^2 - 2 (A+I)^-1 (B+I)^-1 z + I",
            lhs=lambda p, ctx: bateman_B(2, _P(p), p.z),
            rhs=_b2,
            mode="pointwise",
            sampler=_sampler),
        IdentityEntry(
            id="bateman.generating.exponential",
            paper_eq="sum_n t^n / n! B_n^{A,B}(z) = e^t 0F2(-;A+I,B+I;-zt)",
            lhs=_extract(_exponential_gen),
            rhs=_generated(lambda n, p: p.I / factorial(n)),
            mode="extraction",
            sampler=_sampler),
        IdentityEntry(
            id="bateman.generating.pochhammer",
            paper_eq="sum_n t^n / n! (C)_n B_n^{A,B}(z) = (1-t)^(-C) 1F2(C;A+I,B+I;-zt/(1-t))",
            lhs=_extract(_pochhammer_gen),
            rhs=_generated(lambda n, p: pochhammer_term(p.E, n) / factorial(n)),
            mode="extraction",
            sampler=_sampler),
        IdentityEntry(
            id="bateman.generating.hyper-bessel",
            paper_eq="sum_n t^n B_n^{A,B}(z) = e^t J_{A,B}(3 (zt)^(1/3))",
            lhs=_extract(_hyper_bessel_gen(normalized=False)),
            rhs=_generated(lambda n, p: p.I),
            corrected_lhs=_extract(_hyper_bessel_gen(normalized=True)),
            corrected_rhs=_generated(lambda n, p: p.I / factorial(n)),
            corrected_form="sum_n t^n / n! B_n^{A,B}(z) = e^t Gamma(A+I) Gamma(B+I) (zt)^(-(A+B)/3) "
                           "J_{A,B}(3 (zt)^(1/3))",
            status="suspected-typo",
            mode="extraction",
            sampler=_sampler),
        IdentityEntry(
            id="bateman.recurrence.derivative",
            paper_eq="d/dz B_n^{A,B}(z) = n (A+I)^-1 (B+I)^-1 B_{n-1}^{A+2I,B+2I}(z)",
            lhs=_derivative_lhs,
            rhs=_derivative_rhs(printed=True),
            corrected_rhs=_derivative_rhs(printed=False),
            corrected_form="d/dz B_n^{A,B}(z) = -n (A+I)^-1 (B+I)^-1 B_{n-1}^{A+I,B+I}(z)",
            status="suspected-typo",
            mode="formal",
            sampler=_sampler),
        IdentityEntry(
            id="bateman.recurrence.euler",
            paper_eq="z d/dz B_n^{A,B}(z) = n B_n^{A,B}(z) - n B_{n-1}^{A,B}(z)",
            lhs=lambda p, ctx: [_series(n, p).theta() for n in DEGREES],
            rhs=lambda p, ctx: [(_series(n, p) - _series(n - 1, p)).lmul(n) for n in DEGREES],
            mode="formal",
            sampler=_sampler),
        IdentityEntry(
            id="bateman.recurrence.shifted-product",
            paper_eq="z B_n^{A+I,B+I}(z) = B_{n+1}^{A,B}(z) + (A+(n+1)I)(B+(n+1)I) B_n^{A,B}(z)",
            lhs=_values(_shifted_product_lhs),
            rhs=_values(_shifted_product_printed),
            corrected_rhs=_values(_shifted_product_corrected),
            corrected_form="z B_n^{A+I,B+I}(z) = (A+I)(B+I) [B_n^{A,B}(z) - B_{n+1}^{A,B}(z)]",
            status="suspected-typo",
            mode="pointwise",
            sampler=_sampler),
        IdentityEntry(
            id="bateman.recurrence.contiguous-a",
            paper_eq="B_{n+1}^{A,B}(z) = B_{n+1}^{A+I,B}(z) + (n+1)(B+(n+1)I) B_n^{A+I,B}(z)",
            lhs=_values(_contiguous_lhs("a", printed=True)),
            rhs=_values(_contiguous_printed("a")),
            corrected_lhs=_values(_contiguous_lhs("a", printed=False)),
            corrected_rhs=_values(_contiguous_corrected("a")),
            corrected_form="(A+I) B_{n+1}^{A,B}(z) = (A+(n+2)I) B_{n+1}^{A+I,B}(z) - (n+1) B_n^{A+I,B}(z)",
            status="suspected-typo",
            mode="pointwise",
            sampler=_sampler),
        IdentityEntry(
            id="bateman.recurrence.contiguous-b",
            paper_eq="B_{n+1}^{A,B}(z) = B_{n+1}^{A,B+I}(z) + (n+1)(A+(n+1)I) B_n^{A,B+I}(z)",
            lhs=_values(_contiguous_lhs("b", printed=True)),
            rhs=_values(_contiguous_printed("b")),
            corrected_lhs=_values(_contiguous_lhs("b", printed=False)),
            corrected_rhs=_values(_contiguous_corrected("b")),
            corrected_form="(B+I) B_{n+1}^{A,B}(z) = (B+(n+2)I) B_{n+1}^{A,B+I}(z) - (n+1) B_n^{A,B+I}(z)",
            status="suspected-typo",
            mode="pointwise",
            sampler=_sampler),
        IdentityEntry(
            id="bateman.recurrence.contiguous-z",
            paper_eq="B_{n+1}^{A,B}(z) - B_{n+1}^{A+I,B}(z) = -(n+1) z (A+I)^-1 (A+2I)^-1 (B+I)^-1 "
                     "B_n^{A+2I,B+I}(z)",
            lhs=_values(lambda n, p: bateman_B(n + 1, _P(p), p.z) - bateman_B(n + 1, _P(p, 1, 0), p.z)),
            rhs=_values(_contiguous_z_rhs),
            mode="pointwise",
            sampler=_sampler),
        IdentityEntry(
            id="bateman.recurrence.four-term",
            paper_eq="(A+nI)(B+nI) B_n = (3n^2 I + (2A+2B-3I)n + (A-I)(B-I) - zI) B_{n-1} "
                     "- (n-1)(A+B+(3n-3)I) B_{n-2} + (n-1)(n-2) B_{n-3}",
            lhs=_four_term_residual,
            rhs=None,
            mode="pointwise",
            sampler=_sampler),
        IdentityEntry(
            id="bateman.multiplication.binomial",
            paper_eq="B_n^{A,B}(zw) = sum_k C(n,k) w^k (1-w)^(n-k) B_k^{A,B}(z)",
            lhs=_values(lambda n, p: bateman_B(n, _P(p), p.z * p.w)),
            rhs=_values(_binomial_rhs),
            mode="pointwise",
            sampler=_sampler),
        IdentityEntry(
            id="bateman.multiplication.laguerre",
            paper_eq="B_n^{A,B}(zw) = n! [(A+I)_n]^-1 sum_k [(B+I)_n]^-1 w^k L_{n-k}^{A+kI}(w) L_k^B(z)",
            lhs=_values(lambda n, p: bateman_B(n, _P(p), p.z * p.w)),
            rhs=_values(_laguerre_rhs(printed=True)),
            corrected_rhs=_values(_laguerre_rhs(printed=False)),
            corrected_form="B_n^{A,B}(zw) = n! [(A+I)_n]^-1 sum_k [(B+I)_k]^-1 w^k L_{n-k}^{A+kI}(w) L_k^B(z)",
            status="suspected-typo",
            mode="pointwise",
            sampler=_sampler),
        IdentityEntry(
            id="bateman.inversion",
            paper_eq="z^n I = (A+I)_n (B+I)_n sum_k C(n,k) (-1)^k B_k^{A,B}(z)",
            lhs=_inversion_residual,
            rhs=None,
            mode="formal",
            sampler=_sampler),
        IdentityEntry(
            id="bateman.ode.theta",
            paper_eq="[z (theta - n) I - theta (theta I + A)(theta I + B)] B_n^{A,B}(z) = 0",
            lhs=_worst_annihilation(_theta_ode),
            rhs=None,
            mode="formal",
            sampler=_sampler),
        IdentityEntry(
            id="bateman.ode.third-derivative",
            paper_eq="z^2 B''' + (A+B+3I) z B'' [(A+I)(B+I) - zI] B' + n B = 0",
            lhs=_third_derivative_printed,
            rhs=None,
            corrected_lhs=_worst_annihilation(_third_derivative_ode),
            corrected_form="z^2 B''' + (A+B+3I) z B'' + [(A+I)(B+I) - zI] B' + n B = 0",
            status="suspected-typo",
            mode="formal",
            sampler=_sampler),
        IdentityEntry(
            id="bateman.ode.shifted-theta",
            paper_eq="[n (A+nI)(B+nI) - (S - zI)(theta - n) + (A+B+(3n-3)I)(theta - n)_2 + (theta - n)_3] B_n = 0, "
                     "S = (3n^2-3n+1)I + (2n-1)(A+B) + AB",
            lhs=_worst_annihilation(_shifted_theta_ode(-1.0)),
            rhs=None,
            corrected_lhs=_worst_annihilation(_shifted_theta_ode(1.0)),
            corrected_form="[n (A+nI)(B+nI) + (S - zI)(theta - n) + (A+B+(3n-3)I)(theta - n)_2 "
                           "+ (theta - n)_3] B_n = 0",
            status="suspected-typo",
            mode="formal",
            sampler=_sampler),
        IdentityEntry(
            id="bateman.ode.theta-ladder",
            paper_eq="B_{n-k}^{A,B}(z) / (n-k)! = (-1)^k (theta - n)_k B_n^{A,B}(z) / n!",
            lhs=_ladder_lhs,
            rhs=_ladder_rhs,
            mode="formal",
            sampler=_sampler),
        IdentityEntry(
            id="bateman.ode.theta-expansion",
            paper_eq="theta = (theta-n)_1 + n, theta^2 = (theta-n)_2 + (2n-1)(theta-n)_1 + n^2, "
                     "theta^3 = (theta-n)_3 + 3(n-1)(theta-n)_2 + (3n^2-3n+1)(theta-n)_1 + n^3",
            lhs=_theta_powers_lhs,
            rhs=_theta_powers_rhs,
            mode="formal",
            sampler=_sampler),
        IdentityEntry(
            id="bateman.j.relation",
            paper_eq="J_n^{A,B-A/2}(sqrt z) = Gamma(B+(n+1)I) / n! Gamma^-1(A+I) Gamma^-1(B+I) z^(A/2) B_n^{A,B}(z)",
            lhs=_values(_j_relation_lhs, degrees=range(7)),
            rhs=_values(_j_relation_rhs, degrees=range(7)),
            mode="pointwise",
            sampler=_sampler),
        IdentityEntry(
            id="bateman.j.recurrence-b",
            paper_eq="J_n^{A,B}(x) = J_{n-1}^{A,B}(x) + J_n^{A,B-I}(x)",
            lhs=_values(lambda n, p: _J(n, p)),
            rhs=_values(lambda n, p: _J(n - 1, p) + _J(n, p, db=-1.0)),
            mode="pointwise",
            sampler=lambda rng, dim: abc(rng, dim, B=lambda draw, p: draw.draw(1.3, 2.5)[0], x=_real(0.3, 1.5))),
        IdentityEntry(
            id="bateman.j.recurrence-a",
            paper_eq="A J_n^{A,B-I/2}(x) = x J_n^{A-I,B}(x) + x J_{n-1}^{A+I,B}(x)",
            lhs=_values(_j_recurrence_a_lhs),
            rhs=_values(_j_recurrence_a_rhs),
            mode="pointwise",
            sampler=_sampler),
        IdentityEntry(
            id="bateman.j.recurrence-mixed",
            paper_eq="(A+nI) J_n^{A,B}(x) = (nI + B + A/2) J_{n-1}^{A,B}(x) + x J_n^{A-I,B+I/2}(x)",
            lhs=_values(_j_mixed_lhs),
            rhs=_values(_j_mixed_rhs),
            mode="pointwise",
            sampler=_sampler),
        IdentityEntry(
            id="bateman.j.four-term",
            paper_eq="n(B+nI) J_n = [(B+nI+A/2)(A+nI) + (n-1)(B+3A/2+(2n-1)I) - x^2 I] J_{n-1} "
                     "(B+A/2+(n-1)I)(B+3A/2+(3n-3)I) J_{n-2} + (B+A/2+(n-1)I)(B+A/2+(n-2)I) J_{n-3}",
            lhs=_j_four_term(printed=True, middle_sign=-1.0),
            rhs=None,
            printed_variants=((_j_four_term(printed=True, middle_sign=1.0), None),),
            corrected_lhs=_j_four_term(printed=False),
            corrected_form="n(A+nI) J_n = (S - x^2 I) J_{n-1} - (A+beta+(3n-3)I)(beta+(n-1)I) J_{n-2} "
                           "+ (beta+(n-1)I)(beta+(n-2)I) J_{n-3}, beta = B + A/2, "
                           "S = (3n^2-3n+1)I + (2n-1)(A+beta) + A beta",
            status="suspected-typo",
            mode="pointwise",
            sampler=_sampler),
    ]


def bateman_catalog():
    """ Identity entries for B_n^{A,B} and J_n^{A,B} """
    return _catalog()
