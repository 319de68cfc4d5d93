import json

import pytest

from optikit import io as oio
from optikit.io import FormatError
from optikit.laws import bundle_corpus


LOADERS = {
    "cat": (oio.category_from_json, oio.category_to_json),
    "fun": (oio.functor_from_json, oio.functor_to_json),
    "cop": (oio.copresheaf_from_json, oio.copresheaf_to_json),
    "prof": (oio.profunctor_from_json, oio.profunctor_to_json),
    "poly": (oio.poly_from_json, oio.poly_to_json),
    "lens": (oio.lens_from_json, oio.lens_to_json),
    "prism": (oio.prism_from_json, oio.prism_to_json),
}


def test_every_corpus_file_round_trips_bytes():
    root = bundle_corpus()
    files = sorted(root.glob("*.json"))
    assert len(files) >= 25
    for path in files:
        load, dump = LOADERS[path.stem.split("_", 1)[0]]
        value = load(oio.load_json(path), path.stem)
        assert oio.dump_json(dump(value)) == path.read_text(), path.name


def test_unknown_fields_rejected():
    doc = oio.load_json(bundle_corpus() / "cat_walking_arrow.json")
    doc["surprise"] = 1
    with pytest.raises(FormatError) as exc:
        oio.category_from_json(doc)
    assert "surprise" in str(exc.value)


def test_missing_field_rejected_with_path():
    doc = oio.load_json(bundle_corpus() / "cat_walking_arrow.json")
    del doc["identities"]
    with pytest.raises(FormatError) as exc:
        oio.category_from_json(doc)
    assert "$" in str(exc.value)


def test_bad_atom_rejected():
    doc = oio.load_json(bundle_corpus() / "cat_walking_arrow.json")
    doc["objects"][0] = "o(0"
    with pytest.raises(FormatError):
        oio.category_from_json(doc)


def test_malformed_json_reports_position():
    bad = bundle_corpus() / "fixtures" / "bad_syntax.json"
    with pytest.raises(json.JSONDecodeError):
        oio.load_json(bad)


def test_planted_associativity_fixture_loads_but_fails_validation():
    from optikit.fincat import validate_category

    doc = oio.load_json(bundle_corpus() / "fixtures" / "cat_bad_assoc.json")
    c = oio.category_from_json(doc, "cat_bad_assoc")
    rep = validate_category(c)
    assert not rep.ok
    assert any("(x, x, x)" in v for v in rep.violations)


def test_polylens_and_ommatidium_round_trip():
    from optikit.poly import (
        enumerate_polylenses,
        polylens_eq,
        polylens_to_ommatidium,
        ommatidium_eq,
        poly_y,
    )

    l = enumerate_polylenses(poly_y("y", 2), poly_y("y", 1))[0]
    l2 = oio.polylens_from_json(oio.polylens_to_json(l))
    assert polylens_eq(l, l2)
    o = polylens_to_ommatidium(l)
    o2 = oio.ommatidium_from_json(oio.ommatidium_to_json(o))
    assert ommatidium_eq(o, o2)


def test_bifunctor_round_trip():
    from optikit.coend import build_bifunctor, coend
    from optikit.fincat import FinSet, walking_arrow

    wa = walking_arrow()
    d = build_bifunctor(
        "homwa",
        wa,
        lambda neg, pos: FinSet(f"({neg},{pos})", tuple(wa.hom(neg, pos))),
        lambda f, pos, h: wa.comp(h, f),
        lambda neg, f, h: wa.comp(f, h),
    )
    d2 = oio.bifunctor_from_json(oio.bifunctor_to_json(d))
    assert coend(d).partition() == coend(d2).partition()


def test_dump_json_is_deterministic():
    doc = oio.load_json(bundle_corpus() / "prof_p.json")
    assert oio.dump_json(doc) == oio.dump_json(json.loads(json.dumps(doc)))
