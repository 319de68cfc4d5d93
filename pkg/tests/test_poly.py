import pytest

from optikit.fincat import FinCatError, finset
from optikit.poly import (
    ProfNat,
    compose_polylens,
    compound_compose,
    compound_to_polylens,
    coend_witness_check,
    enumerate_polylenses,
    eval_poly,
    eval_poly_mor,
    identity_compound,
    identity_polylens,
    nat_oracle,
    ommatidium_eq,
    ommatidium_to_compound,
    ommatidium_to_polylens,
    poly,
    poly_y,
    polylens_eq,
    polylens_to_nat,
    polylens_to_ommatidium,
    same_poly,
    transport_pair,
)


def _y(power):
    return poly_y("y", power)


def test_eval_counts():
    y3 = finset("y", ["0", "1", "2"])
    assert len(eval_poly(_y(2), y3)) == 9
    assert len(eval_poly(_y(1), y3)) == 3
    two = poly(
        "c2",
        ["i0", "i1"],
        {"i0": ["p0"], "i1": ["p0"]},
        {"i0": [], "i1": []},
    )
    assert len(eval_poly(two, finset("y", []))) == 2  # constants survive Y = 0


def test_eval_mor_functorial():
    p = _y(2)
    y2 = finset("y", ["0", "1"])
    y3 = finset("z", ["a", "b", "c"])
    f = {"0": "a", "1": "c"}
    g = {"a": "b", "b": "b", "c": "a"}
    gf = {k: g[v] for k, v in f.items()}
    pf = eval_poly_mor(p, f, y2, y3)
    pg = eval_poly_mor(p, g, y3, y3)
    assert eval_poly_mor(p, gf, y2, y3) == {k: pg[v] for k, v in pf.items()}


def test_nat_counts_formula_and_oracle():
    assert len(enumerate_polylenses(_y(2), _y(1))) == 2
    assert len(enumerate_polylenses(_y(1), _y(2))) == 1
    assert nat_oracle(_y(2), _y(1), 3)[0] == 2
    assert nat_oracle(_y(1), _y(2), 2)[0] == 1


def test_oracle_rejects_unsound_bound():
    with pytest.raises(FinCatError):
        nat_oracle(_y(2), _y(1), 2)


def test_polylens_induces_natural_transformation():
    for l in enumerate_polylenses(_y(2), _y(2)):
        for n in range(4):
            y = finset("y", [str(i) for i in range(n)])
            alpha = polylens_to_nat(l, y)
            assert sorted(alpha) == sorted(eval_poly(_y(2), y).elements)


def test_compose_polylens_identity_and_types():
    p, q = _y(2), _y(1)
    for l in enumerate_polylenses(p, q):
        assert polylens_eq(compose_polylens(identity_polylens(p), l), l)
        assert polylens_eq(compose_polylens(l, identity_polylens(q)), l)
    with pytest.raises(FinCatError):
        compose_polylens(identity_polylens(p), identity_polylens(q))


def test_ommatidium_round_trip():
    for l in enumerate_polylenses(_y(2), _y(1)):
        assert polylens_eq(ommatidium_to_polylens(polylens_to_ommatidium(l)), l)


def test_transport_pair_coend_equality():
    l = enumerate_polylenses(_y(2), _y(1))[0]
    o = polylens_to_ommatidium(l)
    small = {key: finset("c1", ["c0"]) for key in o.residual}
    for key in o.residual:
        for target_elem in o.residual[key].elements:
            h = {k2: {"c0": target_elem} for k2 in o.residual}
            forward = {
                i: {x: (j, a, "c0") for x, (j, a, g) in o.forward[i].items()}
                for i in l.source.index
            }
            o_small, o_big = transport_pair(
                l.source, l.target, small, o.residual, h, forward, o.backward
            )
            assert ommatidium_eq(o_small, o_big)


def test_compound_matches_polylens_composition():
    lenses_f = enumerate_polylenses(_y(2), _y(1))
    lenses_s = enumerate_polylenses(_y(1), _y(2))
    for lf in lenses_f:
        for ls in lenses_s:
            of = ommatidium_to_compound(polylens_to_ommatidium(lf))
            os = ommatidium_to_compound(polylens_to_ommatidium(ls))
            got = compound_to_polylens(compound_compose(os, of))
            assert polylens_eq(got, compose_polylens(lf, ls))


def test_compound_witness_accepts_and_rejects():
    lenses = enumerate_polylenses(_y(2), _y(1))
    o1 = ommatidium_to_compound(polylens_to_ommatidium(lenses[0]))
    o2 = ommatidium_to_compound(polylens_to_ommatidium(lenses[1]))
    ident = ProfNat(
        o1.p, o1.p, {key: {x: x for x in o1.p.fiber[key]} for key in o1.p.fiber}
    )
    assert coend_witness_check(o1, o1, ident)
    cross = ProfNat(
        o1.p, o2.p, {key: {x: x for x in o1.p.fiber[key]} for key in o1.p.fiber}
    )
    assert not coend_witness_check(o1, o2, cross)


def test_compound_nondiscrete_normal_form_refused(corpus):
    f1 = corpus.copresheaf("cop_f1")
    o = identity_compound(f1, f1)
    with pytest.raises(FinCatError):
        compound_to_polylens(o)


def test_same_poly_ignores_names():
    assert same_poly(_y(2), poly_y("other", 2))
    assert not same_poly(_y(2), _y(1))
