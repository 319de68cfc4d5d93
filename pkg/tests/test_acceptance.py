"""Acceptance gate: one test (one pass/fail line under pytest -v) per
top-level criterion.  Each criterion is checked against the shared law-suite
run plus direct CLI invocations; a criterion's line fails if any of its
constituent laws failed.
"""

import pytest

from optikit.cli import main
from optikit.laws import bundle_corpus


def _require(law_results, *keys):
    failed = [
        f"{s}/{l}: {law_results[(s, l)].detail}"
        for s, l in keys
        if not law_results[(s, l)].ok
    ]
    assert not failed, "; ".join(failed)


def _suite(law_results, name):
    return [key for key in law_results if key[0] == name]


def test_acceptance_coyoneda_suite(law_results):
    _require(
        law_results,
        ("coend", "coyoneda-bijections"),
        ("coend", "coyoneda-pair-count"),
        ("coend", "cowedge-condition"),
        ("coend", "zigzag-oracle"),
    )
    assert "46 pairs" in law_results[("coend", "coyoneda-pair-count")].detail


def test_acceptance_kan_composition_suite(law_results):
    _require(law_results, ("kan", "composition-chains"))
    assert "12 functor chains" in law_results[("kan", "composition-chains")].detail


def test_acceptance_pi_composition_suite(law_results):
    _require(law_results, *_suite(law_results, "pi"))


def test_acceptance_profunctor_suite(law_results):
    _require(law_results, *_suite(law_results, "prof"))
    assert "= 8" in law_results[("prof", "action-matrix-cardinality")].detail
    assert "[2, 4]" in law_results[("prof", "matrix-composition")].detail


def test_acceptance_simple_optics_suite(law_results):
    _require(law_results, *_suite(law_results, "optic-exact"))
    _require(law_results, *_suite(law_results, "optic-normalform"))


def test_acceptance_polynomial_suite(law_results):
    _require(law_results, *_suite(law_results, "poly"))
    detail = law_results[("poly", "formula-vs-oracle")].detail
    assert "|Nat(y^2,y)| = 2" in detail
    assert "|Nat(y,y^2)| = 1" in detail
    assert "16 corpus pairs agree" in detail


def test_acceptance_compound_suite(law_results):
    _require(law_results, *_suite(law_results, "compound"))


def test_acceptance_cli_exit_codes_and_stability(capsys):
    assert main(["laws", "--all"]) == 0
    first = capsys.readouterr().out
    assert main(["laws", "--all"]) == 0
    second = capsys.readouterr().out
    assert first == second

    fixtures = bundle_corpus() / "fixtures"
    assert main(["laws", "--all", "--corpus", str(fixtures)]) == 1
    out = capsys.readouterr().out
    assert "FAIL" in out and "(x, x, x)" in out

    assert main(["check", str(fixtures / "bad_syntax.json")]) == 2
    capsys.readouterr()
