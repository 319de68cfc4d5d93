import json

import pytest

from optikit.cli import main
from optikit.laws import bundle_corpus


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_check_valid_category(capsys):
    path = bundle_corpus() / "cat_walking_arrow.json"
    code, out, _ = run(capsys, "check", str(path))
    assert code == 0
    assert "check: PASS" in out


def test_check_planted_violation_exits_1(capsys):
    path = bundle_corpus() / "fixtures" / "cat_bad_assoc.json"
    code, out, _ = run(capsys, "check", str(path))
    assert code == 1
    assert "(x, x, x)" in out


def test_malformed_json_exits_2(capsys):
    path = bundle_corpus() / "fixtures" / "bad_syntax.json"
    code, _, err = run(capsys, "check", str(path))
    assert code == 2
    assert "line" in err


def test_unknown_field_exits_2(capsys):
    path = bundle_corpus() / "fixtures" / "cat_unknown_field.json"
    code, _, err = run(capsys, "check", str(path))
    assert code == 2
    assert "extra" in err


def test_missing_file_exits_2(capsys):
    code, _, err = run(capsys, "check", "no_such_file.json")
    assert code == 2


def test_kan_with_composition_check(capsys):
    c = bundle_corpus()
    code, out, _ = run(
        capsys,
        "kan",
        str(c / "cop_f1.json"),
        str(c / "fun_inc.json"),
        "--check-composition",
        str(c / "fun_collapse.json"),
    )
    assert code == 0
    assert "kan/composition: PASS" in out


def test_prof_compose_matrix(capsys):
    c = bundle_corpus()
    code, out, _ = run(capsys, "prof", "compose", str(c / "prof_p.json"), str(c / "prof_q.json"))
    assert code == 0
    assert "(n1, k2): 4 elements" in out


def test_poly_nats_and_oracle_agree(capsys):
    c = bundle_corpus()
    code, out, _ = run(capsys, "poly", "nats", str(c / "poly_y2.json"), str(c / "poly_y.json"))
    assert code == 0 and "2 natural transformations" in out
    code, out, _ = run(capsys, "poly", "oracle", str(c / "poly_y2.json"), str(c / "poly_y.json"))
    assert code == 0 and "2 natural transformations" in out


def test_optic_normalize_is_idempotent_on_normal_tables(capsys):
    c = bundle_corpus()
    code, out, _ = run(capsys, "optic", "normalize", str(c / "lens_proj.json"))
    assert code == 0
    assert out == (c / "lens_proj.json").read_text()


def test_laws_all_passes_and_is_byte_stable(capsys):
    code1, out1, _ = run(capsys, "laws", "--all")
    code2, out2, _ = run(capsys, "laws", "--all")
    assert code1 == 0 and code2 == 0
    assert out1 == out2
    assert out1.strip().endswith("result: PASS")
    for line in out1.strip().splitlines()[:-1]:
        suite_law, rest = line.split(": ", 1)
        assert "/" in suite_law
        assert rest.startswith("PASS (") or rest.startswith("FAIL (")


def test_laws_fixture_corpus_fails_with_counterexample(capsys):
    fixtures = bundle_corpus() / "fixtures"
    code, out, _ = run(capsys, "laws", "--all", "--corpus", str(fixtures))
    assert code == 1
    assert "fincat/category-axioms: FAIL" in out
    assert "(x, x, x)" in out


def test_laws_single_suite_json(capsys):
    code, out, _ = run(capsys, "laws", "--suite", "fincat", "--json")
    assert code == 0
    doc = json.loads(out)
    assert doc["ok"] is True
    assert doc["suites"][0]["suite"] == "fincat"


def test_corpus_round_trips_and_coverage(capsys):
    code, out, _ = run(capsys, "corpus")
    assert code == 0
    assert "coverage:" in out
    for suite in ("fincat", "coend", "kan", "pi", "prof",
                  "optic-exact", "optic-normalform", "poly", "compound"):
        assert f"  {suite}: " in out
