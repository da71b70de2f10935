"""Identity suites: spot instances, failure paths, and the sweep runner."""

import json
import random
from fractions import Fraction
from math import factorial

import pytest

from weylops import (
    CPoly,
    I,
    MINUS_I,
    RatPoly,
    anticommutator,
    b_sum,
    combinatorial_sums,
    commutator,
    extract_convolution_coefficients,
    hadamard_conjugate,
    hamiltonian,
    kappa,
    monomial,
    p_op,
    q_op,
    random_poly_pair,
    reports_to_json,
    run_suite,
    scalar,
    sequence_tables,
    standard_conjugation_fixtures,
    trinomial_sum,
    verify_bender,
    verify_binomial,
    verify_exp_series,
    verify_figueira,
    verify_function_identities,
    verify_mccoy,
    verify_pain,
    verify_reciprocal,
    verify_superoperators,
)
from weylops.report import run_check


def test_bender_instances():
    for n in (0, 1, 5, 9):
        report = verify_bender(n)
        assert report.ok, report.witness
        assert report.suite == "bender" and report.params == {"n": n}


def test_superoperators():
    assert verify_superoperators(8).ok


def test_difference_superoperator_sign():
    # (A - B)^3 q collapses to (-2)^3 H^3 q; the +2^3 variant is wrong
    q, h = q_op(), hamiltonian()
    d = q
    for _ in range(3):
        d = commutator(d, h) - anticommutator(d, h)
    assert d == scalar(Fraction(-8)) * h**3 * q
    assert d != scalar(Fraction(8)) * h**3 * q


def test_combinatorial_sums():
    assert b_sum(3, 0) == 2**5 == b_sum(3, 6)
    assert all(b_sum(3, s) == 0 for s in range(1, 6))
    assert trinomial_sum(2, 1, 1) == 24
    for args in [(1, 0, 0, 0), (4, 3, 2, 2), (5, 10, 5, 5), (8, 8, 0, 8)]:
        report = combinatorial_sums(*args)
        assert report.ok, report.witness


def test_combinatorial_sums_rejects_degenerate_order():
    report = combinatorial_sums(0, 0, 0, 0)
    assert report.status == "error"
    assert "n >= 1" in report.witness


def test_pain_and_reciprocal_instances():
    assert verify_pain(0, 0).ok  # empty sum against a zero commutator
    assert verify_pain(7, 4).ok
    assert verify_reciprocal(0, 0).ok
    assert verify_reciprocal(6, 9).ok
    assert verify_exp_series(5, 5).ok
    assert verify_exp_series(0, 3).ok


def test_exp_series_suite_name():
    assert verify_exp_series(2, 2).suite == "exp-series"


def test_mccoy_and_functions_on_fixed_pairs():
    pairs = [
        (RatPoly.of(1), RatPoly.x()),
        (RatPoly.x(), RatPoly.x()),
        (RatPoly({3: 2, 1: -1}), RatPoly({4: 1, 0: 5})),
        (RatPoly(), RatPoly.x()),  # zero polynomial degenerates gracefully
    ]
    for f, g in pairs:
        assert verify_mccoy(f, g).ok
        assert verify_function_identities(f, g).ok


def test_mccoy_and_functions_on_seeded_pairs():
    rng = random.Random(7)
    for _ in range(6):
        f, g = random_poly_pair(rng)
        assert verify_mccoy(f, g).ok
        assert verify_function_identities(f, g).ok


def test_tag_rides_into_params():
    report = verify_mccoy(RatPoly.x(), RatPoly.x(), tag={"case": 3, "seed": 0})
    assert report.params["case"] == 3 and report.params["seed"] == 0


def test_binomial_instances():
    assert verify_binomial(0, 0, 0).ok
    assert verify_binomial(5, 4, 3).ok
    assert verify_binomial(12, 12, 12).ok
    assert verify_binomial(7, 9, 2, euler_version=False).ok


def test_figueira_fixture_values():
    # h0 = p^2, x = q: the correction term is -i c p and the closure is p^2 - c^2/4
    h0, x = p_op(2), q_op()
    tower = [h0]
    while tower[-1]:
        tower.append(commutator(x, tower[-1]))
    h1 = scalar(I) * sum(
        (scalar(kappa(n) / factorial(n)) * tower[n] for n in range(1, len(tower) - 1)),
        scalar(0),
    )
    assert h1 == monomial(0, 1, CPoly.c_power(1, MINUS_I))
    closure = hadamard_conjugate(x, h0 + scalar(I) * h1, t=Fraction(1, 2))
    assert closure == p_op(2) - scalar(CPoly.c_power(2, Fraction(1, 4)))


def test_figueira_quadratic_fixture():
    # h0 = (p^2+q^2)/2, x = q: correction -i c p / 2, closure h0 - c^2/8
    h0, x = hamiltonian(), q_op()
    tower = [h0, commutator(x, h0), commutator(x, commutator(x, h0))]
    h1 = scalar(I) * scalar(kappa(1)) * tower[1]
    assert h1 == monomial(0, 1, CPoly.c_power(1, MINUS_I / 2))
    closure = hadamard_conjugate(x, h0 + scalar(I) * h1, t=Fraction(1, 2))
    assert closure == h0 - scalar(CPoly.c_power(2, Fraction(1, 8)))


def test_figueira_suite_and_fixtures():
    fixtures = standard_conjugation_fixtures()
    assert len(fixtures) == 4
    for h0, x in fixtures:
        report = verify_figueira(h0, x)
        assert report.ok, report.witness


def test_sequence_tables():
    report = sequence_tables(16)
    assert report.ok, report.witness
    assert report.params["kappa"][9] == Fraction(31, 2)
    assert report.params["lambda"][6] == -61
    assert report.params["lambda"][16] == 19391512145


def test_convolution_coefficient_extraction():
    vs = extract_convolution_coefficients(12)
    assert vs[0] == 1
    assert vs[1:] == [kappa(k) for k in range(1, 13)]


def test_run_suite_counts_and_ordering():
    reports = run_suite("bender", max_n=6)
    assert len(reports) == 7
    assert [r.params["n"] for r in reports] == list(range(7))
    assert all(r.ok for r in reports)

    assert len(run_suite("pain", max_n=0, max_m=0)) == 1
    assert run_suite("pain", max_n=0, max_m=0)[0].ok

    assert len(run_suite("figueira")) == 4
    assert len(run_suite("sequences", max_n=8)) == 1
    assert len(run_suite("hermite", max_n=2)) == 12


def test_run_suite_all_with_tight_bounds():
    reports = run_suite("all", max_n=2, max_m=2, max_l=2, cases=2)
    assert len(reports) == 83
    assert all(r.ok for r in reports), [r.render() for r in reports if not r.ok]
    suites = {r.suite for r in reports}
    assert {
        "bender",
        "superoperators",
        "combinatorics",
        "pain",
        "reciprocal",
        "exp-series",
        "mccoy",
        "functions",
        "binomial",
        "figueira",
        "sequences",
        "hermite",
    } <= suites


def test_run_suite_rejects_unknown_names():
    with pytest.raises(ValueError):
        run_suite("nope")


def test_random_sweeps_are_reproducible():
    a = run_suite("mccoy", max_n=1, max_m=1, cases=3, seed=5)
    b = run_suite("mccoy", max_n=1, max_m=1, cases=3, seed=5)
    assert [r.params for r in a] == [r.params for r in b]


def test_failing_check_is_reported_not_raised(monkeypatch):
    import weylops.suites as suites_mod

    monkeypatch.setattr(suites_mod, "euler_zero", lambda k: Fraction(1, 7))
    report = verify_pain(2, 2)
    assert report.status == "fail"
    assert "lhs - rhs" in report.witness


def test_error_check_is_reported_not_raised():
    report = run_check("demo", {"x": 1}, lambda: 1 // 0)
    assert report.status == "error"
    assert report.witness.startswith("ZeroDivisionError")


def test_reports_serialize_deterministically():
    def strip(blob: str):
        records = json.loads(blob)
        for r in records:
            r["elapsed_ms"] = None
        return records

    a = reports_to_json(run_suite("figueira"))
    b = reports_to_json(run_suite("figueira"))
    assert strip(a) == strip(b)
    assert strip(a)[0]["status"] == "pass"
