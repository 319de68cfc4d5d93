import pytest

from optikit.fincat import FinCatError, finset, walking_arrow
from optikit.optics import (
    ConcreteLens,
    ConcretePrism,
    ExistentialOptic,
    compose_optics,
    compose_set_optics,
    enumerate_lenses,
    identity_optic,
    identity_set_optic,
    lens_abstract,
    lens_concretize,
    optic_coend,
    optic_eq_exact,
    prism_abstract,
    prism_concretize,
    self_action,
    set_optic_eq,
    sum_set,
    tag_left,
    tag_right,
    trivial_action,
    trivial_monoidal,
    untag,
    validate_action,
    validate_monoidal,
    walking_iso_monoidal,
    z2_discrete_monoidal,
)


def _iso_actions():
    m = walking_iso_monoidal()
    return self_action(m), self_action(m)


def test_monoidal_instances_validate():
    for m in (trivial_monoidal(), z2_discrete_monoidal(), walking_iso_monoidal()):
        assert validate_monoidal(m).ok
    act1, act2 = _iso_actions()
    assert validate_action(act1).ok
    assert validate_action(trivial_action(trivial_monoidal(), walking_arrow())).ok


def test_exact_sliding_identifies_optics():
    """Transporting the residual along u gives a coend-equal optic."""
    act1, act2 = _iso_actions()
    c = act1.on
    # residual o0 with identity forward/backward, versus residual o1 reached
    # by sliding along u: o0 -> o1
    o1 = ExistentialOptic(
        act1, act2, "o0", c.identity["o0"], c.identity["o0"], "o0", "o0", "o0", "o0"
    )
    fwd = c.hom("o0", act1.ob("o1", "o0"))[0]
    bwd = c.hom(act2.ob("o1", "o0"), "o0")[0]
    o2 = ExistentialOptic(act1, act2, "o1", fwd, bwd, "o0", "o0", "o0", "o0")
    assert optic_eq_exact(o1, o2)


def test_exact_identity_is_unit():
    act1, act2 = _iso_actions()
    c = act1.on
    o = ExistentialOptic(
        act1, act2, "o0", c.hom("o1", "o0")[0], c.hom("o0", "o1")[0],
        "o0", "o0", "o1", "o1",
    )
    left = compose_optics(identity_optic(act1, act2, "o0", "o0"), o)
    right = compose_optics(o, identity_optic(act1, act2, "o1", "o1"))
    assert optic_eq_exact(left, o)
    assert optic_eq_exact(right, o)


def test_exact_trivial_monoidal_no_identifications():
    act = trivial_action(trivial_monoidal(), walking_arrow())
    q = optic_coend(act, act, "o0", "o0", "o0", "o1")
    wa = act.on
    assert len(q.carrier) == len(wa.hom("o0", "o0")) * len(wa.hom("o0", "o1"))
    assert all(len(m) == 1 for m in q.classes.values())


def test_optic_endpoint_validation():
    act1, act2 = _iso_actions()
    c = act1.on
    with pytest.raises(FinCatError):
        ExistentialOptic(
            act1, act2, "o0", c.identity["o0"], c.identity["o0"],
            "o0", "o0", "o1", "o0",
        )


def test_lens_round_trip_small():
    s = finset("s", ["s0", "s1", "s2"])
    a = finset("a", ["a0", "a1"])
    for l in enumerate_lenses(s, s, a, a):
        l2 = lens_concretize(lens_abstract(l))
        assert l2.get == l.get and l2.put == l.put


def test_prism_round_trip_and_tags():
    t = finset("t", ["t0", "t1"])
    a = finset("a", ["a0"])
    s = finset("s", ["s0", "s1"])
    match = {"s0": tag_right("a0"), "s1": tag_left("t1")}
    build = {"a0": "t0"}
    p = ConcretePrism(s, t, a, a, match, build)
    p2 = prism_concretize(prism_abstract(p))
    assert p2.match == p.match and p2.build == p.build
    assert untag(tag_left("x")) == ("L|", "x")
    assert untag(tag_right("y")) == ("R|", "y")
    assert len(sum_set(t, a)) == 3


def test_lens_composition_matches_textbook():
    s = finset("s", ["s0", "s1", "s2", "s3"])
    a = finset("a", ["a0", "a1"])
    outer = ConcreteLens(
        s, s, a, a,
        {"s0": "a0", "s1": "a0", "s2": "a1", "s3": "a1"},
        {(x, y): f"s{(i + j) % 4}" for i, x in enumerate(s) for j, y in enumerate(a)},
    )
    b = finset("b", ["b0"])
    inner = ConcreteLens(a, a, b, b, {"a0": "b0", "a1": "b0"}, {(x, "b0"): "a1" for x in a})
    got = lens_concretize(compose_set_optics(lens_abstract(inner), lens_abstract(outer)))
    for x in s:
        assert got.get[x] == inner.get[outer.get[x]]
        assert got.put[(x, "b0")] == outer.put[(x, inner.put[(outer.get[x], "b0")])]


def test_set_optic_units_and_mixing():
    s = finset("s", ["s0", "s1"])
    l = ConcreteLens(s, s, s, s, {x: x for x in s}, {(x, y): y for x in s for y in s})
    o = lens_abstract(l)
    assert set_optic_eq(compose_set_optics(identity_set_optic("lens", s, s), o), o)
    assert set_optic_eq(compose_set_optics(o, identity_set_optic("lens", s, s)), o)
    p = prism_abstract(
        ConcretePrism(s, s, s, s, {x: tag_right(x) for x in s}, {y: y for y in s})
    )
    with pytest.raises(FinCatError):
        compose_set_optics(o, p)


def test_set_optic_eq_distinguishes_tables():
    s = finset("s", ["s0", "s1"])
    lenses = enumerate_lenses(s, s, s, s)
    assert not set_optic_eq(lens_abstract(lenses[0]), lens_abstract(lenses[1]))
