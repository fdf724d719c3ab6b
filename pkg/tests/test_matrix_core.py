import numpy as np
import pytest
from hypothesis import given
from hypothesis.strategies import floats, integers
from numpy.testing import assert_allclose
from scipy import linalg
from matspec.errors import BranchCut, DomainError, IllConditionedEigenbasis, ParseError
from matspec.matrix.core import (SquareMatrix, as_matrix, from_json, to_json, matrix_power, principal_power,
                                 matrix_function, joint_eigenbasis, commutes, check_invertible, spectrum,
                                 is_positive_stable)
from matspec.matrix.family import commuting_family


@pytest.mark.parametrize("obj expected".split(), (
    ([[2, 0]], [[2]]),
    ({"dim": 1, "entries": [[1.5, -0.5]]}, [[1.5 - 0.5j]]),
    ([[1, 2], [3, 4]], [[1, 2], [3, 4]]),
    (3.0, [[3.0]]),
))
def test_from_json_accepted_forms(obj, expected):
    assert_allclose(from_json(obj), np.array(expected, dtype=complex))


@pytest.mark.parametrize("obj", ({"dim": 2, "entries": [[1, 0]]}, {"entries": []}, "text"))
def test_from_json_rejects(obj):
    with pytest.raises(ParseError):
        from_json(obj)


def test_to_json_encoding():
    m = np.array([[1, 2j], [0, -1]])
    assert to_json(m) == {"dim": 2, "entries": [[1.0, 0.0], [0.0, 2.0], [0.0, 0.0], [-1.0, 0.0]]}
    assert_allclose(from_json(to_json(m)), m)


def test_square_matrix_tolerance_equality():
    m = SquareMatrix([[1, 0], [0, 2]])
    assert m == np.diag([1, 2 + 1e-12])
    assert m != np.diag([1, 2 + 1e-6])
    assert not m.allclose(np.eye(3))
    with pytest.raises(DomainError):
        SquareMatrix(np.ones((2, 3)))


def test_matrix_power_diagonal():
    assert_allclose(matrix_power(2.0, np.diag([1.0, 2.0])), np.diag([2.0, 4.0]), atol=1e-13)
    with pytest.raises(DomainError):
        matrix_power(-1.0, np.eye(2))


def test_principal_power():
    assert_allclose(principal_power(1j, 0.5 * np.eye(2)), np.exp(1j * np.pi / 4) * np.eye(2), atol=1e-14)
    with pytest.raises(BranchCut):
        principal_power(-2.0, np.eye(1))
    with pytest.raises(BranchCut):
        principal_power(0.0, np.eye(1))


def test_matrix_function_matches_expm(family):
    a = family.members[0]
    assert_allclose(matrix_function(a, np.exp), linalg.expm(a), rtol=1e-10, atol=1e-12)


def test_matrix_function_rejects_jordan_block():
    with pytest.raises(IllConditionedEigenbasis):
        matrix_function([[1.0, 1.0], [0.0, 1.0]], np.exp)


def test_check_invertible():
    check_invertible(np.eye(2))
    with pytest.raises(DomainError):
        check_invertible(np.diag([1.0, 0.0]))


def test_commuting_family_members_commute(rng, dim):
    fam = commuting_family(rng, dim, count=4)
    assert fam.max_commutator_norm() < 1e-10
    assert all(spectrum(m).min_re > 0 for m in fam.members)
    extra = fam.member(np.arange(1, dim + 1))
    assert all(commutes(extra, m, rtol=1e-9) for m in fam.members)
    assert_allclose(np.sort(np.linalg.eigvals(extra).real), np.arange(1, dim + 1), atol=1e-9)


def test_commuting_family_polynomial(rng):
    fam = commuting_family(rng, 3, count=1)
    mu = [0.5, 1.0, 2.0]
    p = fam.polynomial(mu)
    poly_value = sum(c * np.linalg.matrix_power(fam.basis, k) for k, c in enumerate(p[::-1]))
    assert_allclose(poly_value, fam.member(mu), atol=1e-9)


def test_joint_eigenbasis_recovers_spectra(rng):
    fam = commuting_family(rng, 3, count=2)
    mu = np.array([0.4, 1.1, 2.3])
    v, v_inv, (w0, w1) = joint_eigenbasis([fam.member(mu), fam.members[0]])
    assert_allclose(np.sort(w0.real), mu, atol=1e-9)
    assert_allclose(v @ np.diag(w1) @ v_inv, fam.members[0], atol=1e-9)


@given(floats(min_value=0.1, max_value=5.0), floats(min_value=-2.0, max_value=2.0))
def test_scalar_reduction_of_matrix_power(t, a):
    assert_allclose(matrix_power(t, a)[0, 0], t ** a, rtol=1e-12)


@given(integers(min_value=1, max_value=4), integers(min_value=0, max_value=2 ** 16))
def test_exponent_addition(dim, seed):
    fam = commuting_family(seed, dim, count=2)
    a, b = fam.members
    assert_allclose(matrix_power(1.7, a) @ matrix_power(1.7, b), matrix_power(1.7, a + b),
                    rtol=1e-9, atol=1e-12)


def test_as_matrix_promotes_scalars():
    assert_allclose(as_matrix(2.0, dim=3), 2 * np.eye(3))
    with pytest.raises(DomainError):
        as_matrix(np.eye(2), dim=3)


def test_spectrum_readout(rng):
    s = spectrum(np.diag([2.0, -1 + 3j]))
    assert s.max_re == 2.0 and s.min_re == -1.0
    m = rng.normal(size=(4, 4))
    assert_allclose(np.sum(spectrum(m).eigenvalues), np.trace(m), rtol=1e-10, atol=1e-10)
    with pytest.raises(DomainError):
        spectrum(np.array([[np.nan]]))


@pytest.mark.parametrize("diag expected".split(), (
    ([1.0, 1.0], True),
    ([-0.1, 5.0], False),
    ([0.5 + 7j, 0.5 - 7j], True),
))
def test_is_positive_stable(diag, expected):
    assert is_positive_stable(np.diag(diag)) is expected
