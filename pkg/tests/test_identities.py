import numpy as np
import pytest
from types import SimpleNamespace
from matspec.errors import ConfigurationError, DomainError, GenerationFailure
from matspec.identities import (IdentityEntry, IdentityCheckReport, EvalContext, TOLERANCE_CLASSES,
                                full_catalog, hyper_catalog, transform_catalog, bateman_catalog, young_catalog,
                                run_identity, run_catalog, select_entries, check_unique_ids)
from matspec.identities.registry import relative_difference, relative_sum
from matspec.identities.samplers import ParamDraw, sample_rng
from matspec.series.formal import MatrixPowerSeries

TOLERANCES = {name: 1e-8 for name in TOLERANCE_CLASSES}

REQUIRED_1F2_ENTRIES = (
    "hyper.euler-integral.b", "hyper.euler-integral.c",
    "hyper.beta-weighted.shifted", "hyper.beta-weighted.unshifted",
    "hyper.convolution.shifted-base", "hyper.convolution.interval", "hyper.convolution.interval-reflected",
    "hyper.laplace-quadratic", "hyper.convolution.origin", "hyper.convolution.power-weight",
    "hyper.expansion.bessel-c", "hyper.expansion.bessel-b", "hyper.expansion.inverse-c",
    "hyper.expansion.inverse-b",
    "hyper.sum.numerator-shift", "hyper.sum.taylor-shift", "hyper.sum.mixed",
    "transform.beta", "transform.laplace", "transform.erdelyi-kober.left", "transform.erdelyi-kober.right",
    "transform.riemann-liouville", "transform.riemann-liouville.left", "transform.riemann-liouville.right",
    "transform.weyl-integral",
    "transform.derivative.left", "transform.derivative.right", "transform.derivative.weyl",
    "transform.derivative.classical",
)
# Monomial rules whose defining integral converges are checked by quadrature, the Weyl ones termwise
QUADRATURE_MONOMIAL_RULES = (
    "transform.monomial.erdelyi-kober-left", "transform.monomial.rl-integral", "transform.monomial.rl-left",
    "transform.monomial.rl-right", "transform.monomial.derivative-left", "transform.monomial.derivative-right",
    "transform.monomial.classical",
)
FORMAL_MONOMIAL_RULES = ("transform.monomial.weyl-integral", "transform.monomial.weyl")


def matrix_sampler(rng, dim):
    matrix, _ = ParamDraw(rng, dim).draw()
    return SimpleNamespace(A=matrix)


def make_entry(id_="test.entry", lhs=None, rhs=None, **kwargs):
    return IdentityEntry(id=id_, paper_eq="A = A",
                         lhs=lhs or (lambda p, ctx: p.A),
                         rhs=rhs if rhs is not None else (lambda p, ctx: p.A.copy()),
                         mode=kwargs.pop("mode", "pointwise"), sampler=kwargs.pop("sampler", matrix_sampler),
                         **kwargs)


def test_identical_sides_pass():
    report = run_identity(make_entry(), seeds=[0, 1], dims=[1, 2], tolerances=TOLERANCES)
    assert report.status == "PASS"
    assert report.residual == 0.0
    assert report.samples == 4
    assert report.corrected_form is None


def test_broken_entry_fails():
    entry = make_entry(rhs=lambda p, ctx: 2 * p.A)
    report = run_identity(entry, seeds=[0], dims=[2], tolerances=TOLERANCES)
    assert report.status == "FAIL"
    assert report.residual == pytest.approx(0.5)


def test_suspected_typo_is_corrected():
    entry = make_entry(rhs=lambda p, ctx: 2 * p.A, status="suspected-typo",
                       corrected_rhs=lambda p, ctx: p.A, corrected_form="rhs is A")
    report = run_identity(entry, seeds=[0, 1], dims=[1, 2, 3], tolerances=TOLERANCES)
    assert report.status == "CORRECTED"
    assert report.corrected_form == "rhs is A"
    assert report.residual == 0.0


def test_suspected_typo_that_holds_as_printed_passes():
    entry = make_entry(status="suspected-typo", corrected_rhs=lambda p, ctx: 2 * p.A, corrected_form="2A")
    assert run_identity(entry, seeds=[0], dims=[1], tolerances=TOLERANCES).status == "PASS"


def test_printed_variants_take_best_reading():
    entry = make_entry(rhs=lambda p, ctx: -p.A, printed_variants=((lambda p, ctx: p.A, lambda p, ctx: p.A),))
    assert run_identity(entry, seeds=[0], dims=[2], tolerances=TOLERANCES).status == "PASS"


def test_evaluation_errors_become_failures():
    def broken(p, ctx):
        raise DomainError("outside the domain")
    report = run_identity(make_entry(lhs=broken), seeds=[0], dims=[1], tolerances=TOLERANCES)
    assert report.status == "FAIL"
    assert report.residual is None


def test_arithmetic_errors_become_failures():
    def overflowing(p, ctx):
        return p.A * complex(1e3) ** 500
    report = run_identity(make_entry(lhs=overflowing), seeds=[0], dims=[1, 2], tolerances=TOLERANCES)
    assert report.status == "FAIL"
    assert report.residual is None


def test_sampling_failure_is_reported():
    def failing(rng, dim):
        raise GenerationFailure("no admissible spectrum")
    report = run_identity(make_entry(sampler=failing), seeds=[0], dims=[1], tolerances=TOLERANCES)
    assert report.status == "FAIL"
    assert report.samples == 0


def test_suspected_typo_needs_corrected_form():
    with pytest.raises(ConfigurationError):
        make_entry(status="suspected-typo", corrected_rhs=lambda p, ctx: p.A)
    with pytest.raises(ConfigurationError):
        make_entry(mode="unknown")


def test_scalar_only_and_max_dim():
    assert make_entry(scalar_only=True).dims([1, 2, 3]) == [1]
    assert make_entry(max_dim=2).dims([1, 2, 3]) == [1, 2]


def test_residual_from_lhs_only():
    entry = IdentityEntry(id="test.residual", paper_eq="r = 0", lhs=lambda p, ctx: 1e-12, rhs=None,
                          mode="formal", sampler=matrix_sampler)
    report = run_identity(entry, seeds=[0], dims=[1], tolerances={**TOLERANCES, "formal": 1e-10})
    assert report.status == "PASS" and report.tolerance == 1e-10


def test_relative_difference_forms():
    a = np.eye(2)
    assert relative_difference(a, 1.5 * a) == pytest.approx(1 / 3)
    s = MatrixPowerSeries([1.0, 2.0])
    assert relative_difference(s, s) == 0.0
    assert relative_difference([a, 2 * a], [a, 2 * a]) == 0.0
    assert relative_sum([a, -a]) == 0.0


def test_sample_rng_is_order_independent():
    x = sample_rng(3, 2, "hyper.ode.theta").uniform(size=4)
    sample_rng(4, 2, "hyper.ode.theta").uniform(size=4)
    np.testing.assert_array_equal(x, sample_rng(3, 2, "hyper.ode.theta").uniform(size=4))
    assert not np.allclose(x, sample_rng(3, 2, "hyper.ode.theta-over-z").uniform(size=4))


def test_run_catalog_is_sorted_and_deterministic():
    entries = [make_entry("b.second"), make_entry("a.first", rhs=lambda p, ctx: 3 * p.A), make_entry("c.third")]
    serial = run_catalog(entries, seeds=[0, 1], dims=[1, 2], tolerances=TOLERANCES, num_workers=1)
    threaded = run_catalog(entries, seeds=[0, 1], dims=[1, 2], tolerances=TOLERANCES, num_workers=4)
    assert [r.id for r in serial] == ["a.first", "b.second", "c.third"]
    assert [r.to_json() for r in serial] == [r.to_json() for r in threaded]


def test_report_json():
    report = IdentityCheckReport("x", "eq", 1e-12, 1e-10, "CORRECTED", "fixed form", 3)
    assert IdentityCheckReport.from_json(report.to_json()) == report
    assert report.to_json()["correctedForm"] == "fixed form"


def test_select_entries_glob():
    entries = [make_entry("bateman.b"), make_entry("bateman.a"), make_entry("young.a")]
    assert [e.id for e in select_entries(entries, "bateman.*")] == ["bateman.a", "bateman.b"]
    assert select_entries(entries, "nothing*") == []


def test_duplicate_ids_rejected():
    with pytest.raises(ConfigurationError):
        check_unique_ids([make_entry("x"), make_entry("x")])


def test_catalog_census():
    catalog = full_catalog()
    ids = [e.id for e in catalog]
    assert ids == sorted(ids)
    assert len(set(ids)) == len(ids)
    assert len(hyper_catalog()) + len(transform_catalog()) >= 26
    assert len(bateman_catalog()) + len(young_catalog()) >= 15
    assert len(catalog) == len(hyper_catalog()) + len(transform_catalog()) \
        + len(bateman_catalog()) + len(young_catalog())


def test_catalog_entries_are_well_formed():
    for entry in full_catalog():
        assert entry.mode in TOLERANCE_CLASSES
        assert entry.paper_eq
        if entry.status == "suspected-typo":
            assert entry.corrected_form


def test_required_1f2_identities_are_catalogued():
    modes = {e.id: e.mode for e in full_catalog()}
    missing = [id_ for id_ in REQUIRED_1F2_ENTRIES if id_ not in modes]
    assert not missing
    assert len(set(REQUIRED_1F2_ENTRIES)) >= 26


def test_monomial_rules_have_their_verification_mode():
    modes = {e.id: e.mode for e in full_catalog()}
    assert {modes.get(id_) for id_ in QUADRATURE_MONOMIAL_RULES} == {"quadrature"}
    assert {modes.get(id_) for id_ in FORMAL_MONOMIAL_RULES} == {"formal"}


@pytest.mark.parametrize("entry_id", ("transform.beta", "transform.erdelyi-kober.left",
                                      "transform.riemann-liouville", "transform.riemann-liouville.left",
                                      "transform.riemann-liouville.right", "hyper.euler-integral.b",
                                      "hyper.euler-integral.c", "hyper.convolution.origin",
                                      "hyper.laplace-quadratic", "bateman.inversion"))
def test_entries_hold_at_default_truncation(entry_id):
    entries = select_entries(full_catalog(), entry_id)
    assert len(entries) == 1
    report = run_identity(entries[0], seeds=[0], dims=[1, 2], ctx=EvalContext(),
                          tolerances={"quadrature": 1e-8, "formal": 1e-10, "laplace": 1e-6,
                                      "expansion": 1e-6, "pointwise": 1e-9, "extraction": 1e-8})
    assert report.status in ("PASS", "CORRECTED"), (report.residual, report.tolerance)


@pytest.mark.parametrize("pattern", (("young.closed-form", "transform.monomial.erdelyi-kober-left",
                                     "hyper.contiguous.theta-a", "bateman.initial.*")))
def test_selected_entries_hold(pattern):
    reports = run_catalog(select_entries(full_catalog(), pattern), seeds=[0], dims=[1, 2],
                          tolerances={"quadrature": 1e-8, "formal": 1e-10, "laplace": 1e-6,
                                      "expansion": 1e-6, "pointwise": 1e-9, "extraction": 1e-8},
                          ctx=EvalContext(truncation_k=30))
    assert reports
    assert all(r.status in ("PASS", "CORRECTED") for r in reports)


@pytest.mark.slow
def test_full_catalog_has_no_failures():
    reports = run_catalog(full_catalog(), seeds=[0, 1], dims=[1, 2, 3],
                          tolerances={"quadrature": 1e-8, "formal": 1e-10, "laplace": 1e-6,
                                      "expansion": 1e-6, "pointwise": 1e-9, "extraction": 1e-8},
                          num_workers=4)
    failed = [(r.id, r.residual) for r in reports if r.status == "FAIL"]
    assert not failed
    suspected = {e.id for e in full_catalog() if e.status == "suspected-typo"}
    assert all(r.status in ("PASS", "CORRECTED") for r in reports if r.id in suspected)
