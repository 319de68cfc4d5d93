import pytest

from optikit.coend import WitnessError
from optikit.fincat import (
    FinCatError,
    decode_pair,
    identity_functor,
    walking_arrow,
    yoneda,
)
from optikit.kan import (
    kan_composition_check,
    left_kan,
    pi,
    pi_compose,
    pi_element,
    pi_identity_element,
    pi_profunctor,
)


def test_left_kan_along_identity_evaluates_back(corpus):
    f = corpus.copresheaf("cop_f4")
    lan = left_kan(f, identity_functor(f.base))
    for b in f.base.objects:
        assert len(lan.copresheaf.at(b)) == len(f.at(b))
        for rep in lan.copresheaf.at(b):
            values = {
                f.act(*decode_pair(elem))
                for _, elem in lan.provenance[b].members(rep)
            }
            assert len(values) == 1


def test_left_kan_source_mismatch_raises(corpus):
    f = corpus.copresheaf("cop_f1")  # over the walking arrow
    p = corpus.functor("fun_collapse")  # source is the walking iso
    with pytest.raises(FinCatError):
        left_kan(f, p)


def test_left_kan_discrete_source_counts(corpus):
    f = corpus.copresheaf("cop_k1")
    p = corpus.functor("fun_pt0")
    lan = left_kan(f, p)
    wa = p.target
    for b in wa.objects:
        assert len(lan.copresheaf.at(b)) == len(wa.hom("o0", b)) * len(f.at("p0"))


def test_kan_composition_chain(corpus):
    f = corpus.copresheaf("cop_f1")
    p = corpus.functor("fun_step")
    q = corpus.functor("fun_shift")
    witness = kan_composition_check(f, p, q)
    witness.verify()


def test_pi_fibers_are_lan_of_yoneda(corpus):
    p = corpus.functor("fun_inc")
    for c in p.source.objects:
        lan = left_kan(yoneda(p.source, c), p)
        for d in p.target.objects:
            assert pi(p, c, d).elements == lan.copresheaf.at(d).elements


def test_pi_identity_functor_is_hom():
    wa = walking_arrow()
    pp = pi_profunctor(identity_functor(wa))
    for c in wa.objects:
        for d in wa.objects:
            assert len(pp.at(c, d)) == len(wa.hom(c, d))


def test_pi_compose_unit(corpus):
    p = corpus.functor("fun_inc")
    pp = pi_profunctor(p)
    pid = pi_profunctor(identity_functor(p.source))
    for c in p.source.objects:
        for d in p.target.objects:
            for atom in pp.at(c, d):
                c1, pair = pp.provenance[(c, d)].members(atom)[0]
                h, g = decode_pair(pair)
                x = pi_element(pp, c, d, c1, h, g)
                e = pi_identity_element(pid, c)
                assert pi_compose(pid, pp, e, x).atom == x.atom


def test_pi_compose_rejects_mismatched_endpoints(corpus):
    p = corpus.functor("fun_inc")
    pp = pi_profunctor(p)
    pid = pi_profunctor(identity_functor(p.source))
    e0 = pi_identity_element(pid, "o0")
    e1 = pi_identity_element(pid, "o1")
    with pytest.raises(FinCatError):
        pi_compose(pid, pid, e0, e1)


def test_pi_action_well_defined(corpus):
    p = corpus.functor("fun_inc")
    pp = pi_profunctor(p)
    wa, iso = p.source, p.target
    for f in wa.mor_ids():
        for d in iso.objects:
            for elem in pp.at(wa.tgt(f), d):
                assert pp.lact(f, d, elem) in pp.at(wa.src(f), d)
    for e in iso.mor_ids():
        for c in wa.objects:
            for elem in pp.at(c, iso.src(e)):
                assert pp.ract(c, e, elem) in pp.at(c, iso.tgt(e))
