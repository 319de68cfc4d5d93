import pytest

from optikit.fincat import (
    FinCatError,
    FinCategory,
    FinFunctor,
    all_functions,
    check_atom,
    compose_functors,
    constant_copresheaf,
    decode_pair,
    discrete_category,
    encode_pair,
    enumerate_nats,
    finset,
    identity_functor,
    opposite,
    product_category,
    validate_category,
    validate_copresheaf,
    validate_functor,
    walking_arrow,
    walking_iso,
    yoneda,
)


def test_atoms_reject_structural_characters():
    for bad in ["a(b", "a)b", "a,b", "x@y", "p|q", ""]:
        with pytest.raises(FinCatError):
            check_atom(bad)
    assert check_atom("id_o0") == "id_o0"
    # function-table encodings are themselves atoms
    assert check_atom("{d0>d1;d1>d0}") == "{d0>d1;d1>d0}"


def test_pair_encoding_round_trips_nested():
    for a, b in [("x", "y"), ("(u,v)", "w"), ("p", "(q,(r,s))"), ("{a>b}", "c")]:
        assert decode_pair(encode_pair(a, b)) == (a, b)


def test_standard_categories_validate():
    wa = walking_arrow()
    iso = walking_iso()
    d3 = discrete_category("d3", ["a", "b", "c"])
    for c in (wa, iso, d3):
        assert validate_category(c).ok
    assert wa.comp("u", "id_o0") == "u"
    assert wa.comp("id_o1", "u") == "u"
    assert iso.comp("v", "u") == "id_o0"


def test_validation_catches_broken_associativity():
    c = FinCategory(
        "bad",
        ("o",),
        {"id_o": ("o", "o"), "x": ("o", "o"), "y": ("o", "o")},
        {"o": "id_o"},
        {
            ("id_o", "id_o"): "id_o",
            ("id_o", "x"): "x",
            ("x", "id_o"): "x",
            ("id_o", "y"): "y",
            ("y", "id_o"): "y",
            ("x", "x"): "y",
            ("x", "y"): "id_o",
            ("y", "x"): "x",
            ("y", "y"): "y",
        },
    )
    rep = validate_category(c)
    assert not rep.ok
    assert any("associativity" in v for v in rep.violations)


def test_opposite_swaps_endpoints():
    wa = walking_arrow()
    op = opposite(wa)
    assert validate_category(op).ok
    assert op.src("u") == "o1" and op.tgt("u") == "o0"
    assert op.comp("id_o0", "u") == wa.comp("u", "id_o0")


def test_product_category_hom_sizes():
    wa = walking_arrow()
    iso = walking_iso()
    prod = product_category(wa, iso)
    assert validate_category(prod).ok
    a = encode_pair("o0", "o0")
    b = encode_pair("o1", "o1")
    assert len(prod.hom(a, b)) == len(wa.hom("o0", "o1")) * len(iso.hom("o0", "o1"))


def test_functor_validation_rejects_nonfunctorial_map():
    wa = walking_arrow()
    iso = walking_iso()
    bad = FinFunctor(
        "bad",
        wa,
        iso,
        {"o0": "o0", "o1": "o1"},
        {"id_o0": "id_o0", "id_o1": "id_o1", "u": "id_o0"},
    )
    assert not validate_functor(bad).ok


def test_compose_functors_identity():
    wa = walking_arrow()
    ident = identity_functor(wa)
    comp = compose_functors(ident, ident)
    assert comp.ob("o0") == "o0" and comp.mor("u") == "u"
    with pytest.raises(FinCatError):
        compose_functors(identity_functor(discrete_category("d1", ["p"])), ident)


def test_yoneda_lemma_count():
    wa = walking_arrow()
    g = constant_copresheaf(wa, finset("s", ["x", "y", "z"]))
    assert validate_copresheaf(g).ok
    for a in wa.objects:
        assert len(enumerate_nats(yoneda(wa, a), g)) == len(g.at(a))


def test_all_functions_count():
    a = finset("a", ["1", "2"])
    b = finset("b", ["p", "q", "r"])
    assert len(all_functions(a, b)) == 9
    assert len(all_functions(finset("e", []), b)) == 1
    assert len(all_functions(a, finset("e", []))) == 0
