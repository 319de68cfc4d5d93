import pytest

from optikit.coend import WitnessError
from optikit.fincat import FinSet, decode_pair, encode_pair, walking_arrow
from optikit.prof import (
    ProfNat,
    action_composition_check,
    build_profunctor,
    hom_profunctor,
    is_prof_natural,
    prof_action,
    prof_assoc_check,
    prof_compose,
    unit_check,
    validate_profunctor,
)


def test_corpus_profunctors_validate(corpus):
    for stem in corpus.stems("prof"):
        assert validate_profunctor(corpus.profunctor(stem)).ok


def test_hom_profunctor_fibers_are_hom_sets():
    wa = walking_arrow()
    h = hom_profunctor(wa)
    assert validate_profunctor(h).ok
    for n in wa.objects:
        for k in wa.objects:
            assert set(h.at(n, k).elements) == set(wa.hom(n, k))


def test_matrix_composition_cardinalities(corpus):
    p = corpus.profunctor("prof_p")
    q = corpus.profunctor("prof_q")
    pq = prof_compose(p, q)
    assert [len(pq.at("n1", k)) for k in q.target.objects] == [2, 4]
    assert [len(pq.at("n2", k)) for k in q.target.objects] == [3, 6]


def test_action_cardinality_example(corpus):
    p = corpus.profunctor("prof_pact")
    a = corpus.copresheaf("cop_an")
    pa = prof_action(p, a)
    assert len(pa.at("k1")) == 8


def test_unit_laws_with_witnesses(corpus):
    p = corpus.profunctor("prof_homwa")
    w = unit_check(p)
    for iso in list(w.left_components.values()) + list(w.right_components.values()):
        iso.verify()
    a = corpus.copresheaf("cop_f1")
    w2 = unit_check(hom_profunctor(a.base), a)
    assert w2.left is not None
    for k in a.base.objects:
        assert w2.action_components[k].target.elements == a.at(k).elements


def test_associativity_via_fubini(corpus):
    p = corpus.profunctor("prof_p")
    q = corpus.profunctor("prof_q")
    r = corpus.profunctor("prof_r")
    witnesses = prof_assoc_check(p, q, r)
    for w in witnesses.values():
        w.verify()


def test_action_of_composite_is_composite_of_actions(corpus):
    p = corpus.profunctor("prof_p")
    q = corpus.profunctor("prof_q")
    a = corpus.copresheaf("cop_an")
    action_composition_check(p, q, a).verify()


def test_prof_nat_naturality_detection():
    wa = walking_arrow()
    p = build_profunctor(
        "tagged",
        wa,
        wa,
        lambda n, k: FinSet(
            f"({n},{k})",
            tuple(encode_pair(h, tag) for h in wa.hom(n, "o1") for tag in ("a", "b")),
        ),
        lambda f, k, x: encode_pair(wa.comp(decode_pair(x)[0], f), decode_pair(x)[1]),
        lambda n, g, x: x,
    )
    assert validate_profunctor(p).ok
    ident = ProfNat(
        p, p, {(n, k): {x: x for x in p.at(n, k)} for n in wa.objects for k in wa.objects}
    )
    assert is_prof_natural(ident)
    # swap the tags only at n = o1: breaks naturality against lact(u)
    swap = {"a": "b", "b": "a"}
    broken = {
        (n, k): {
            x: (
                encode_pair(decode_pair(x)[0], swap[decode_pair(x)[1]])
                if n == "o1"
                else x
            )
            for x in p.at(n, k)
        }
        for n in wa.objects
        for k in wa.objects
    }
    assert not is_prof_natural(ProfNat(p, p, broken))


def test_compose_provenance_is_attached(corpus):
    p = corpus.profunctor("prof_p")
    q = corpus.profunctor("prof_q")
    pq = prof_compose(p, q)
    assert pq.provenance is not None
    for (n, k), prov in pq.provenance.items():
        assert len(prov.carrier) == len(pq.at(n, k))
