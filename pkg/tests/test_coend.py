import pytest

from optikit.coend import (
    IsoWitness,
    UnionFind,
    WitnessError,
    build_bifunctor,
    build_bifunctor2,
    coend,
    coyoneda_check,
    fubini_check,
    iso_from_forward,
    map_on_classes,
    validate_bifunctor,
    zigzag_closure,
)
from optikit.fincat import (
    FinSet,
    constant_copresheaf,
    decode_pair,
    discrete_category,
    encode_pair,
    finset,
    walking_arrow,
    walking_iso,
    yoneda,
)


def test_union_find_classes():
    uf = UnionFind(["a", "b", "c", "d"])
    uf.union("a", "b")
    uf.union("c", "d")
    uf.union("b", "c")
    assert len(uf.classes()) == 1
    uf2 = UnionFind(["a", "b"])
    assert len(uf2.classes()) == 2


def _hom_bifunctor(c):
    return build_bifunctor(
        f"hom[{c.name}]",
        c,
        lambda neg, pos: FinSet(f"({neg},{pos})", tuple(c.hom(neg, pos))),
        lambda f, pos, h: c.comp(h, f),
        lambda neg, f, h: c.comp(f, h),
    )


def test_coend_of_hom_walking_arrow_and_iso():
    # walking arrow: hom(o1, o0) is empty, so no zig-zag edge exists and the
    # two identity classes stay apart
    wa = walking_arrow()
    d = _hom_bifunctor(wa)
    assert validate_bifunctor(d).ok
    q = coend(d)
    assert len(q.carrier) == 2
    assert q.partition() == zigzag_closure(d)
    # walking iso: v in hom(o1, o0) glues id_o0 to id_o1
    iso = walking_iso()
    q2 = coend(_hom_bifunctor(iso))
    assert len(q2.carrier) == 1


def test_coend_discrete_is_disjoint_union():
    d3 = discrete_category("d3", ["a", "b", "c"])
    d = _hom_bifunctor(d3)
    q = coend(d)
    assert len(q.carrier) == 3
    assert all(len(m) == 1 for m in q.classes.values())


def test_rep_of_respects_zigzag():
    wa = walking_arrow()
    f = constant_copresheaf(wa, finset("s", ["x"]))

    def lact(g, pos, px):
        h, x = decode_pair(px)
        return encode_pair(wa.comp(h, g), x)

    d = build_bifunctor(
        "t",
        wa,
        lambda neg, pos: FinSet(
            f"({neg},{pos})",
            tuple(encode_pair(h, x) for h in wa.hom(neg, "o1") for x in f.at(pos)),
        ),
        lact,
        lambda neg, g, px: px,
    )
    q = coend(d)
    for m in wa.mor_ids():
        s, t = wa.src(m), wa.tgt(m)
        for x in d.at(t, s):
            assert q.rep_of(s, d.lact(m, s, x)) == q.rep_of(t, d.ract(t, m, x))


def test_coyoneda_on_yoneda_presheaves():
    for c in (walking_arrow(), walking_iso()):
        for a in c.objects:
            for b in c.objects:
                w = coyoneda_check(yoneda(c, b), a)
                w.iso.verify()
                assert len(w.quotient.carrier) == len(c.hom(b, a))


def test_iso_witness_rejects_non_bijection():
    a = finset("a", ["1", "2"])
    b = finset("b", ["p", "q"])
    with pytest.raises(WitnessError):
        iso_from_forward(a, b, {"1": "p", "2": "p"})
    w = IsoWitness(a, b, {"1": "p", "2": "q"}, {"p": "1", "q": "2"})
    w.verify()
    with pytest.raises(WitnessError):
        IsoWitness(a, b, {"1": "p", "2": "q"}, {"p": "2", "q": "1"}).verify()


def test_map_on_classes_rejects_ill_defined():
    iso = walking_iso()
    d = _hom_bifunctor(iso)
    q = coend(d)  # one class containing both identities
    with pytest.raises(WitnessError):
        map_on_classes(q, lambda obj, elem: obj)  # depends on the representative


def test_fubini_on_product_of_homs():
    wa = walking_arrow()
    iso = walking_iso()

    def fiber(cm, cp, dm, dp):
        return FinSet(
            "x",
            tuple(
                encode_pair(h, k) for h in wa.hom(cm, cp) for k in iso.hom(dm, dp)
            ),
        )

    def c_lact(f, cp, dm, dp, hk):
        h, k = decode_pair(hk)
        return encode_pair(wa.comp(h, f), k)

    def c_ract(cm, f, dm, dp, hk):
        h, k = decode_pair(hk)
        return encode_pair(wa.comp(f, h), k)

    def d_lact(cm, cp, f, dp, hk):
        h, k = decode_pair(hk)
        return encode_pair(h, iso.comp(k, f))

    def d_ract(cm, cp, dm, f, hk):
        h, k = decode_pair(hk)
        return encode_pair(h, iso.comp(f, k))

    d2 = build_bifunctor2("hh", wa, iso, fiber, c_lact, c_ract, d_lact, d_ract)
    w = fubini_check(d2)
    w.cd_to_prod.verify()
    w.dc_to_prod.verify()
    # the double coend factors: 2 classes over the walking arrow, 1 over the iso
    assert len(w.prod.carrier) == 2
