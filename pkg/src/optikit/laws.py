"""Law suites over the bundled corpus, with deterministic line reports.

Each law is a function of (corpus, max_card) returning (ok, detail).  Suites
run in registry order and laws in declaration order, so the text report is
byte-identical across runs for fixed inputs and flags.
"""

from __future__ import annotations

import itertools
import time
from dataclasses import dataclass, field
from pathlib import Path

from . import io as oio
from .coend import (
    WitnessError,
    build_bifunctor,
    build_bifunctor2,
    coend,
    coyoneda_check,
    fubini_check,
    iso_from_forward,
    map_on_classes,
    zigzag_closure,
)
from .fincat import (
    CoPresheaf,
    FinCatError,
    FinCategory,
    FinFunctor,
    FinSet,
    decode_pair,
    all_functions,
    discrete_category,
    encode_pair,
    enumerate_nats,
    finset,
    identity_functor,
    opposite,
    product_category,
    product_set,
    same_category,
    validate_category,
    validate_copresheaf,
    validate_functor,
    yoneda,
)
from .kan import (
    kan_composition_check,
    left_kan,
    pi,
    pi_compose,
    pi_element,
    pi_identity_element,
    pi_profunctor,
)
from .optics import (
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
    optic_bifunctor,
    optic_class,
    prism_abstract,
    prism_concretize,
    self_action,
    set_optic_eq,
    tag_left,
    tag_right,
    trivial_action,
    trivial_monoidal,
    validate_action,
    validate_monoidal,
    walking_iso_monoidal,
    z2_discrete_monoidal,
)
from .poly import (
    compose_polylens,
    compound_compose,
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
    compound_to_polylens,
    polylens_eq,
    polylens_to_nat,
    polylens_to_ommatidium,
    transport_pair,
)
from .prof import (
    ProfNat,
    action_composition_check,
    action_provenance,
    hom_profunctor,
    is_prof_natural,
    prof_action,
    prof_assoc_check,
    prof_compose,
    profnat_on_action,
    unit_check,
    validate_profunctor,
)


def bundle_corpus() -> Path:
    """The directory of worked instances shipped with the package."""
    return Path(__file__).parent / "corpus"


class Corpus:
    """Typed access to a corpus directory; values cached per stem."""

    def __init__(self, root: Path | None = None):
        self.root = Path(root) if root is not None else bundle_corpus()
        self._cache: dict[str, object] = {}

    def stems(self, prefix: str) -> list[str]:
        return sorted(p.stem for p in self.root.glob(f"{prefix}_*.json"))

    def has(self, stem: str) -> bool:
        return (self.root / f"{stem}.json").exists()

    def _load(self, stem: str, loader):
        if stem not in self._cache:
            doc = oio.load_json(self.root / f"{stem}.json")
            self._cache[stem] = loader(doc, stem)
        return self._cache[stem]

    def category(self, stem: str) -> FinCategory:
        return self._load(stem, oio.category_from_json)

    def functor(self, stem: str) -> FinFunctor:
        return self._load(stem, oio.functor_from_json)

    def copresheaf(self, stem: str) -> CoPresheaf:
        return self._load(stem, oio.copresheaf_from_json)

    def profunctor(self, stem: str):
        return self._load(stem, oio.profunctor_from_json)

    def poly(self, stem: str):
        return self._load(stem, oio.poly_from_json)

    def lens(self, stem: str) -> ConcreteLens:
        return self._load(stem, oio.lens_from_json)

    def prism(self, stem: str) -> ConcretePrism:
        return self._load(stem, oio.prism_from_json)

    def categories(self) -> list[FinCategory]:
        return [self.category(s) for s in self.stems("cat")]

    def copresheaves(self) -> list[CoPresheaf]:
        return [self.copresheaf(s) for s in self.stems("cop")]


@dataclass
class LawResult:
    suite: str
    law: str
    ok: bool
    detail: str

    def line(self) -> str:
        status = "PASS" if self.ok else "FAIL"
        return f"{self.suite}/{self.law}: {status} ({self.detail})"


@dataclass
class LawSuiteReport:
    name: str
    description: str
    results: list[LawResult] = field(default_factory=list)
    wall_time: float = 0.0  # not printed: reports must be byte-stable

    @property
    def ok(self) -> bool:
        return all(r.ok for r in self.results)


# ---------------------------------------------------------------------------
# Shared helpers
# ---------------------------------------------------------------------------


def _coyoneda_bifunctor(f: CoPresheaf, a: str):
    """The co-Yoneda integrand (c-, c+) -> hom(c-, a) x f(c+)."""
    c = f.base

    def fiber(neg, pos):
        return FinSet(
            f"({neg},{pos})",
            tuple(encode_pair(h, x) for h in c.hom(neg, a) for x in f.at(pos)),
        )

    def lact(g, pos, px):
        h, x = decode_pair(px)
        return encode_pair(c.comp(h, g), x)

    def ract(neg, g, px):
        h, x = decode_pair(px)
        return encode_pair(h, f.act(g, x))

    return build_bifunctor(f"cy[{f.name},{a}]", c, fiber, lact, ract)


def _corpus_pairs(corpus: Corpus):
    """All (co-presheaf, object) pairs: corpus files plus Yoneda presheaves."""
    pairs = []
    for f in corpus.copresheaves():
        for a in f.base.objects:
            pairs.append((f, a))
    for c in corpus.categories():
        for b in c.objects:
            for a in c.objects:
                pairs.append((yoneda(c, b), a))
    return pairs


def _kan_chains(corpus: Corpus):
    """(co-presheaf, p, q) chains; identity functors are built on the fly."""
    chains = []

    def cop(stem):
        return corpus.copresheaf(stem)

    def fun(stem):
        return corpus.functor(stem)

    wa = corpus.category("cat_walking_arrow")
    iso = corpus.category("cat_walking_iso")
    d3 = corpus.category("cat_discrete3")
    chains.append((cop("cop_f1"), identity_functor(wa), identity_functor(wa)))
    chains.append((cop("cop_f1"), fun("fun_inc"), identity_functor(iso)))
    chains.append((cop("cop_f1"), fun("fun_inc"), fun("fun_collapse")))
    chains.append((cop("cop_f1"), fun("fun_step"), fun("fun_shift")))
    chains.append((cop("cop_f2"), fun("fun_step"), fun("fun_shift")))
    chains.append((cop("cop_f3"), fun("fun_inc"), fun("fun_collapse")))
    chains.append((cop("cop_f4"), fun("fun_step"), fun("fun_shift")))
    chains.append((cop("cop_k1"), fun("fun_pt0"), fun("fun_inc")))
    chains.append((cop("cop_k1"), fun("fun_pt0"), fun("fun_step")))
    chains.append((cop("cop_j1"), fun("fun_shift"), fun("fun_inc")))
    chains.append((cop("cop_g1"), fun("fun_collapse"), fun("fun_collapse")))
    chains.append((cop("cop_h1"), identity_functor(d3), identity_functor(d3)))
    return chains


def _sample_lens(s: FinSet, t: FinSet, a: FinSet, b: FinSet) -> ConcreteLens:
    """A deterministic total (get, put) table for any sizes."""
    get = {x: a.elements[i % len(a)] for i, x in enumerate(s)}
    put = {
        (x, y): t.elements[(i + j) % len(t)]
        for i, x in enumerate(s)
        for j, y in enumerate(b)
    }
    return ConcreteLens(s, t, a, b, get, put)


def _sized(label: str, n: int) -> FinSet:
    return FinSet(label, tuple(f"{label}{i}" for i in range(n)))


# ---------------------------------------------------------------------------
# fincat suite
# ---------------------------------------------------------------------------


def law_category_axioms(corpus, max_card):
    n = 0
    for stem in corpus.stems("cat"):
        rep = validate_category(corpus.category(stem))
        if not rep.ok:
            return False, f"{stem}: {rep.violations[0]}"
        n += 1
    return True, f"{n} categories valid"


def law_functor_axioms(corpus, max_card):
    n = 0
    for stem in corpus.stems("fun"):
        rep = validate_functor(corpus.functor(stem))
        if not rep.ok:
            return False, f"{stem}: {rep.violations[0]}"
        n += 1
    return True, f"{n} functors valid"


def law_copresheaf_axioms(corpus, max_card):
    n = 0
    for stem in corpus.stems("cop"):
        rep = validate_copresheaf(corpus.copresheaf(stem))
        if not rep.ok:
            return False, f"{stem}: {rep.violations[0]}"
        n += 1
    return True, f"{n} co-presheaves valid"


def law_opposite_involution(corpus, max_card):
    for c in corpus.categories():
        if not same_category(opposite(opposite(c)), c):
            return False, f"op(op({c.name})) != {c.name}"
    return True, f"{len(corpus.categories())} categories"


def law_product_op_commute(corpus, max_card):
    cats = corpus.categories()
    n = 0
    for c in cats:
        for d in cats:
            if len(c.objects) * len(d.objects) > 6:
                continue
            lhs = opposite(product_category(c, d))
            rhs = product_category(opposite(c), opposite(d))
            if not same_category(lhs, rhs):
                return False, f"(c x d)^op != c^op x d^op for ({c.name}, {d.name})"
            n += 1
    return True, f"{n} category pairs"


def law_op_product_hom_count(corpus, max_card):
    c = corpus.category("cat_walking_arrow")
    d = corpus.category("cat_walking_iso")
    prod = product_category(opposite(c), d)
    n = 0
    for a in c.objects:
        for b in d.objects:
            for a2 in c.objects:
                for b2 in d.objects:
                    got = len(prod.hom(encode_pair(a, b), encode_pair(a2, b2)))
                    want = len(c.hom(a2, a)) * len(d.hom(b, b2))
                    if got != want:
                        return False, f"hom count {got} != {want} at (({a},{b}),({a2},{b2}))"
                    n += 1
    return True, f"{n} hom-sets"


def law_yoneda_count(corpus, max_card):
    n = 0
    for g in corpus.copresheaves():
        for a in g.base.objects:
            count = len(enumerate_nats(yoneda(g.base, a), g))
            if count != len(g.at(a)):
                return False, f"|Nat(Y[{a}], {g.name})| = {count} != {len(g.at(a))}"
            n += 1
    return True, f"{n} (object, co-presheaf) pairs"


# ---------------------------------------------------------------------------
# coend suite
# ---------------------------------------------------------------------------


def law_cowedge(corpus, max_card):
    n = 0
    for f, a in _corpus_pairs(corpus):
        d = _coyoneda_bifunctor(f, a)
        q = coend(d)
        for m in d.base.mor_ids():
            s, t = d.base.src(m), d.base.tgt(m)
            for x in d.at(t, s):
                if q.rep_of(s, d.lact(m, s, x)) != q.rep_of(t, d.ract(t, m, x)):
                    return False, f"cowedge broken at {m} in cy[{f.name},{a}]"
                n += 1
    return True, f"{n} zig-zag edges"


def law_zigzag_oracle(corpus, max_card):
    n = 0
    for f, a in _corpus_pairs(corpus):
        d = _coyoneda_bifunctor(f, a)
        if coend(d).partition() != zigzag_closure(d):
            return False, f"partition mismatch for cy[{f.name},{a}]"
        n += 1
    return True, f"{n} bifunctors match the closure oracle"


def law_coend_idempotent(corpus, max_card):
    n = 0
    one = discrete_category("pt", ["o"])
    for f, a in _corpus_pairs(corpus):
        q = coend(_coyoneda_bifunctor(f, a))
        d = build_bifunctor(
            "requotient", one, lambda neg, pos: q.carrier,
            lambda m, pos, x: x, lambda neg, m, x: x,
        )
        q2 = coend(d)
        if len(q2.carrier) != len(q.carrier) or any(
            len(m) != 1 for m in q2.classes.values()
        ):
            return False, f"requotient of cy[{f.name},{a}] not discrete"
        n += 1
    return True, f"{n} carriers stable"


def law_products_preserve_coends(corpus, max_card):
    s = _sized("sc", 2)
    n = 0
    for f, a in _corpus_pairs(corpus):
        d = _coyoneda_bifunctor(f, a)
        ds = build_bifunctor(
            f"S x {d.name}", d.base,
            lambda neg, pos: product_set(s, d.at(neg, pos)),
            lambda m, pos, sx: _on_snd_pair(d.lmap[(m, pos)], sx),
            lambda neg, m, sx: _on_snd_pair(d.rmap[(neg, m)], sx),
        )
        q, qs = coend(d), coend(ds)
        forward = map_on_classes(
            qs, lambda obj, sx: encode_pair(decode_pair(sx)[0], q.rep_of(obj, decode_pair(sx)[1]))
        )
        iso_from_forward(qs.carrier, product_set(s, q.carrier), forward)
        n += 1
    return True, f"{n} explicit bijections S x coend(d) = coend(S x d)"


def _on_snd_pair(table, sx):
    u, x = decode_pair(sx)
    return encode_pair(u, table[x])


def law_coyoneda_bijections(corpus, max_card):
    n = 0
    for f, a in _corpus_pairs(corpus):
        w = coyoneda_check(f, a)
        w.iso.verify()
        n += 1
    return True, f"{n} (co-presheaf, object) pairs verified"


def law_coyoneda_pair_count(corpus, max_card):
    n = len(_corpus_pairs(corpus))
    return n >= 20, f"{n} pairs (requires >= 20)"


def law_fubini_three_way(corpus, max_card):
    wa = corpus.category("cat_walking_arrow")
    f1 = corpus.copresheaf("cop_f1")
    g1 = corpus.copresheaf("cop_f4")

    def fiber(cm, cp, dm, dp):
        return FinSet(
            "x", tuple(encode_pair(x, y) for x in f1.at(cp) for y in g1.at(dp))
        )

    def c_ract(cm, m, dm, dp, xy):
        x, y = decode_pair(xy)
        return encode_pair(f1.act(m, x), y)

    def d_ract(cm, cp, dm, m, xy):
        x, y = decode_pair(xy)
        return encode_pair(x, g1.act(m, y))

    d2 = build_bifunctor2(
        "fub", wa, wa, fiber,
        lambda m, cp, dm, dp, e: e, c_ract,
        lambda cm, cp, m, dp, e: e, d_ract,
    )
    w = fubini_check(d2)
    w.cd_to_prod.verify()
    w.dc_to_prod.verify()
    return True, f"carriers of size {len(w.prod.carrier)} in three-way bijection"


# ---------------------------------------------------------------------------
# kan suite
# ---------------------------------------------------------------------------


def law_kan_composition(corpus, max_card):
    chains = _kan_chains(corpus)
    for f, p, q in chains:
        kan_composition_check(f, p, q).verify()
    if len(chains) < 10:
        return False, f"only {len(chains)} chains (requires >= 10)"
    return True, f"{len(chains)} functor chains verified"


def law_lan_identity(corpus, max_card):
    n = 0
    for f in corpus.copresheaves():
        lan = left_kan(f, identity_functor(f.base))
        for b in f.base.objects:

            def ev(c_obj, elem):
                h, x = decode_pair(elem)
                return f.act(h, x)

            forward = map_on_classes(lan.provenance[b], ev)
            iso_from_forward(lan.copresheaf.at(b), f.at(b), forward)
            n += 1
    return True, f"{n} objects: Lan_id F = F by evaluation"


def law_lan_discrete(corpus, max_card):
    f = corpus.copresheaf("cop_k1")
    p = corpus.functor("fun_pt0")
    lan = left_kan(f, p)
    for b in p.target.objects:
        want = len(p.target.hom(p.ob("p0"), b)) * len(f.at("p0"))
        got = len(lan.copresheaf.at(b))
        if got != want:
            return False, f"|Lan F({b})| = {got} != {want}"
    return True, "singleton-source Lan is hom x fiber at every object"


def law_lan_yoneda_is_pi(corpus, max_card):
    p = corpus.functor("fun_inc")
    pp = pi_profunctor(p)
    n = 0
    for c in p.source.objects:
        lan = left_kan(yoneda(p.source, c), p)
        for d in p.target.objects:
            if lan.copresheaf.at(d).elements != pi(p, c, d).elements:
                return False, f"Lan Y[{c}]({d}) != pi({c},{d})"
            n += 1
    return True, f"{n} fibers agree"


def law_pi_zigzag(corpus, max_card):
    p = corpus.functor("fun_step")
    n = 0
    for c in p.source.objects:
        for d in p.target.objects:
            cat_d = p.target

            def fiber(neg, pos, d=d):
                return FinSet(
                    "x",
                    tuple(
                        encode_pair(h, g)
                        for h in cat_d.hom(p.ob(neg), d)
                        for g in p.source.hom(c, pos)
                    ),
                )

            def lact(m, pos, hg, d=d):
                h, g = decode_pair(hg)
                return encode_pair(cat_d.comp(h, p.mor(m)), g)

            def ract(neg, m, hg):
                h, g = decode_pair(hg)
                return encode_pair(h, p.source.comp(m, g))

            dd = build_bifunctor("pi-check", p.source, fiber, lact, ract)
            if len(zigzag_closure(dd)) != len(pi(p, c, d)):
                return False, f"pi({c},{d}) class count disagrees with oracle"
            n += 1
    return True, f"{n} fibers match the closure oracle"


# ---------------------------------------------------------------------------
# pi suite
# ---------------------------------------------------------------------------


def _pi_setup(corpus):
    p = corpus.functor("fun_inc")
    q = corpus.functor("fun_collapse")
    return p, q, pi_profunctor(p), pi_profunctor(q)


def law_pi_representative_independence(corpus, max_card):
    p, q, pp, pq = _pi_setup(corpus)
    n = 0
    for c in p.source.objects:
        for d in p.target.objects:
            for x_atom in pp.at(c, d):
                for e in q.target.objects:
                    for y_atom in pq.at(d, e):
                        x = pi_element(pp, c, d, *_first_member(pp, c, d, x_atom))
                        y = pi_element(pq, d, e, *_first_member(pq, d, e, y_atom))
                        pi_compose(pp, pq, x, y)  # exhausts all representatives
                        n += 1
    return True, f"{n} compositions independent of representatives"


def _first_member(pp, c, d, atom):
    c1, pair = pp.provenance[(c, d)].members(atom)[0]
    h, g = decode_pair(pair)
    return c1, h, g


def law_pi_unit(corpus, max_card):
    p, q, pp, pq = _pi_setup(corpus)
    ident = identity_functor(p.source)
    pid = pi_profunctor(ident)
    n = 0
    for c in p.source.objects:
        for d in p.target.objects:
            for atom in pp.at(c, d):
                x = pi_element(pp, c, d, *_first_member(pp, c, d, atom))
                e = pi_identity_element(pid, c)
                left = pi_compose(pid, pp, e, x)
                if left.atom != x.atom:
                    return False, f"left unit failed on {atom} at ({c},{d})"
                pid_t = pi_profunctor(identity_functor(p.target))
                e2 = pi_identity_element(pid_t, d)
                right = pi_compose(pp, pid_t, x, e2)
                if right.atom != x.atom:
                    return False, f"right unit failed on {atom} at ({c},{d})"
                n += 1
    return True, f"{n} elements, both units"


def law_pi_associativity(corpus, max_card):
    p, q, pp, pq = _pi_setup(corpus)
    r = identity_functor(q.target)
    pr = pi_profunctor(r)
    n = 0
    for c in p.source.objects:
        for d in p.target.objects:
            for e in q.target.objects:
                for x_atom in pp.at(c, d):
                    for y_atom in pq.at(d, e):
                        for z_atom in pr.at(e, e):
                            x = pi_element(pp, c, d, *_first_member(pp, c, d, x_atom))
                            y = pi_element(pq, d, e, *_first_member(pq, d, e, y_atom))
                            z = pi_element(pr, e, e, *_first_member(pr, e, e, z_atom))
                            lhs = pi_compose(
                                pi_profunctor(_compose_fun(q, p)), pr,
                                pi_compose(pp, pq, x, y), z,
                            )
                            rhs = pi_compose(
                                pp, pi_profunctor(_compose_fun(r, q)), x,
                                pi_compose(pq, pr, y, z),
                            )
                            if lhs.atom != rhs.atom:
                                return False, f"associativity failed at ({c},{d},{e})"
                            n += 1
    return True, f"{n} triples associate"


def _compose_fun(q, p):
    from .fincat import compose_functors

    return compose_functors(q, p)


# ---------------------------------------------------------------------------
# prof suite
# ---------------------------------------------------------------------------


def law_prof_axioms(corpus, max_card):
    n = 0
    for stem in corpus.stems("prof"):
        rep = validate_profunctor(corpus.profunctor(stem))
        if not rep.ok:
            return False, f"{stem}: {rep.violations[0]}"
        n += 1
    return True, f"{n} profunctors valid"


def law_prof_matrix_compose(corpus, max_card):
    p = corpus.profunctor("prof_p")
    q = corpus.profunctor("prof_q")
    pq = prof_compose(p, q)
    for n_obj in p.source.objects:
        for k_obj in q.target.objects:
            want = sum(
                len(p.at(n_obj, m)) * len(q.at(m, k_obj)) for m in p.target.objects
            )
            if len(pq.at(n_obj, k_obj)) != want:
                return False, f"|p<>q({n_obj},{k_obj})| != {want}"
    row = [len(pq.at("n1", k)) for k in q.target.objects]
    return row == [2, 4], f"matrix product row at n1 = {row}"


def law_prof_action_matrix(corpus, max_card):
    p = corpus.profunctor("prof_pact")
    a = corpus.copresheaf("cop_an")
    pa = prof_action(p, a)
    got = len(pa.at("k1"))
    return got == 8, f"|(p.a)(k1)| = {got} (want 1*2 + 2*3 = 8)"


def law_prof_units(corpus, max_card):
    n = 0
    for stem in corpus.stems("prof"):
        p = corpus.profunctor(stem)
        unit_check(p)
        n += 1
    a = corpus.copresheaf("cop_f1")
    w = unit_check(hom_profunctor(a.base), a)
    assert w.left is not None
    return True, f"{n} profunctors: hom<>p = p = p<>hom; hom.a = a verified"


def law_prof_assoc(corpus, max_card):
    p = corpus.profunctor("prof_p")
    q = corpus.profunctor("prof_q")
    r = corpus.profunctor("prof_r")
    w1 = prof_assoc_check(p, q, r)
    h = corpus.profunctor("prof_homwa")
    w2 = prof_assoc_check(h, h, h)
    for w in (*w1.values(), *w2.values()):
        w.verify()
    return True, f"{len(w1) + len(w2)} fibers witnessed via Fubini"


def law_prof_action_composition(corpus, max_card):
    p = corpus.profunctor("prof_p")
    q = corpus.profunctor("prof_q")
    a = corpus.copresheaf("cop_an")
    action_composition_check(p, q, a).verify()
    h = corpus.profunctor("prof_homwa")
    f1 = corpus.copresheaf("cop_f1")
    action_composition_check(h, h, f1).verify()
    return True, "(p<>q).a = q.(p.a) on discrete and walking-arrow corpora"


def law_prof_two_cells(corpus, max_card):
    from .fincat import is_natural

    p = corpus.profunctor("prof_homwa")
    wa = p.source
    # the 2-cell induced by pre/post-composition with u: o0 -> o1
    components = {
        (n, k): {x: x for x in p.at(n, k)} for n in wa.objects for k in wa.objects
    }
    h = ProfNat(p, p, components)
    if not is_prof_natural(h):
        return False, "identity 2-cell not natural"
    f1 = corpus.copresheaf("cop_f1")
    _, _, induced = profnat_on_action(h, f1)
    if not is_natural(induced):
        return False, "induced map on actions not natural"
    return True, "2-cells induce natural maps on action co-presheaves"


def law_prof_discrete_collapse(corpus, max_card):
    p = corpus.profunctor("prof_p")
    q = corpus.profunctor("prof_q")
    pq = prof_compose(p, q)
    assert pq.provenance is not None
    for key, prov in pq.provenance.items():
        if any(len(m) != 1 for m in prov.classes.values()):
            return False, f"nontrivial class over discrete base at {key}"
    return True, "discrete coends are plain coproducts (all classes singleton)"


# ---------------------------------------------------------------------------
# simple optics, EXACT regime
# ---------------------------------------------------------------------------


def _exact_instances(corpus):
    triv = trivial_monoidal()
    wa = corpus.category("cat_walking_arrow")
    return [
        ("trivial-on-wa", trivial_action(triv, wa), trivial_action(triv, wa)),
        ("z2-self", self_action(z2_discrete_monoidal()), self_action(z2_discrete_monoidal())),
        ("iso-self", self_action(walking_iso_monoidal()), self_action(walking_iso_monoidal())),
    ]


def law_exact_instances_valid(corpus, max_card):
    for name, act1, act2 in _exact_instances(corpus):
        for act in (act1, act2):
            rep = validate_monoidal(act.acting)
            if not rep.ok:
                return False, f"{name}: {rep.violations[0]}"
            rep = validate_action(act)
            if not rep.ok:
                return False, f"{name}: {rep.violations[0]}"
    return True, "3 monoidal instances and their actions valid"


def law_exact_trivial_residual(corpus, max_card):
    _, act1, act2 = _exact_instances(corpus)[0]
    c = act1.on
    n = 0
    for s in c.objects:
        for t in c.objects:
            for a in c.objects:
                for b in c.objects:
                    from .optics import optic_coend

                    q = optic_coend(act1, act2, a, b, s, t)
                    want = len(c.hom(s, a)) * len(c.hom(b, t))
                    if len(q.carrier) != want:
                        return False, f"carrier at ({a},{b},{s},{t}) is not C(s,a) x D(b,t)"
                    n += 1
    return True, f"{n} endpoint choices: carrier = C(s,a) x D(b,t)"


def law_exact_discrete_residual(corpus, max_card):
    from .optics import optic_coend

    _, act1, act2 = _exact_instances(corpus)[1]
    n = 0
    for a in ("e", "g"):
        for s in ("e", "g"):
            d = optic_bifunctor(act1, act2, a, a, s, s)
            q = optic_coend(act1, act2, a, a, s, s)
            want = sum(len(d.at(m, m)) for m in act1.acting.underlying.objects)
            if len(q.carrier) != want or any(len(m) != 1 for m in q.classes.values()):
                return False, f"zig-zags appeared over a discrete acting category at ({a},{s})"
            n += 1
    return True, f"{n} endpoint choices: disjoint union, no identifications"


def law_exact_zigzag_oracle(corpus, max_card):
    from .optics import optic_coend

    _, act1, act2 = _exact_instances(corpus)[2]
    n = 0
    for s in ("o0", "o1"):
        for t in ("o0", "o1"):
            d = optic_bifunctor(act1, act2, "o0", "o0", s, t)
            if optic_coend(act1, act2, "o0", "o0", s, t).partition() != zigzag_closure(d):
                return False, f"optic classes disagree with the closure oracle at ({s},{t})"
            n += 1
    return True, f"{n} optic coends match the closure oracle"


def _all_exact_optics(act1, act2, a, b, s, t):
    c, d = act1.on, act2.on
    out = []
    for m in act1.acting.underlying.objects:
        for f in c.hom(s, act1.ob(m, a)):
            for g in d.hom(act2.ob(m, b), t):
                out.append(ExistentialOptic(act1, act2, m, f, g, a, b, s, t))
    return out


def law_exact_unit(corpus, max_card):
    from .optics import optic_coend

    _, act1, act2 = _exact_instances(corpus)[2]
    n = 0
    for o in _all_exact_optics(act1, act2, "o0", "o0", "o1", "o1"):
        q = optic_coend(act1, act2, "o0", "o0", "o1", "o1")
        left = compose_optics(identity_optic(act1, act2, "o0", "o0"), o)
        right = compose_optics(o, identity_optic(act1, act2, "o1", "o1"))
        if optic_class(q, left) != optic_class(q, o):
            return False, "left unit law failed"
        if optic_class(q, right) != optic_class(q, o):
            return False, "right unit law failed"
        n += 1
    return True, f"{n} optics: identity optic is a two-sided unit"


def law_exact_associativity(corpus, max_card):
    from .optics import optic_coend

    _, act1, act2 = _exact_instances(corpus)[2]
    o1s = _all_exact_optics(act1, act2, "o0", "o0", "o1", "o1")
    o2s = _all_exact_optics(act1, act2, "o1", "o1", "o0", "o0")
    o3s = _all_exact_optics(act1, act2, "o0", "o0", "o0", "o0")
    q = optic_coend(act1, act2, "o0", "o0", "o0", "o0")
    n = 0
    for o1 in o1s[:2]:
        for o2 in o2s[:2]:
            for o3 in o3s[:2]:
                lhs = compose_optics(compose_optics(o1, o2), o3)
                rhs = compose_optics(o1, compose_optics(o2, o3))
                if optic_class(q, lhs) != optic_class(q, rhs):
                    return False, "associativity failed"
                n += 1
    return True, f"{n} triples associate up to coend class"


def law_exact_representative_soundness(corpus, max_card):
    from .optics import optic_coend

    _, act1, act2 = _exact_instances(corpus)[2]
    q_mid = optic_coend(act1, act2, "o0", "o0", "o1", "o1")
    pool = _all_exact_optics(act1, act2, "o0", "o0", "o1", "o1")
    by_class: dict[str, list] = {}
    for o in pool:
        by_class.setdefault(optic_class(q_mid, o), []).append(o)
    outer = _all_exact_optics(act1, act2, "o1", "o1", "o0", "o0")[0]
    q_out = optic_coend(act1, act2, "o0", "o0", "o0", "o0")
    n = 0
    for reps in by_class.values():
        classes = {optic_class(q_out, compose_optics(o, outer)) for o in reps}
        if len(classes) != 1:
            return False, "composition depends on the representative"
        n += len(reps)
    return True, f"{n} representatives: composition is class-level"


# ---------------------------------------------------------------------------
# simple optics, NORMALFORM regime
# ---------------------------------------------------------------------------


def law_lens_round_trip(corpus, max_card):
    cases = 0
    bound = min(max_card, 4)
    for ns in range(1, bound + 1):
        for na in range(1, bound + 1):
            for nb in range(1, bound + 1):
                for nt in range(1, bound + 1):
                    s, t = _sized("s", ns), _sized("t", nt)
                    a, b = _sized("a", na), _sized("b", nb)
                    count = (na ** ns) * (nt ** (ns * nb))
                    lenses = (
                        enumerate_lenses(s, t, a, b)
                        if count <= 512
                        else [_sample_lens(s, t, a, b)]
                    )
                    for l in lenses:
                        l2 = lens_concretize(lens_abstract(l))
                        if l2.get != l.get or l2.put != l.put:
                            return False, f"round trip failed at sizes ({ns},{na},{nb},{nt})"
                        cases += 1
    return True, f"{cases} lens tables round-trip"


def _enumerate_prisms(s, t, a, b):
    from .optics import sum_set

    ta = sum_set(t, a)
    matches = all_functions(s, ta)
    builds = all_functions(b, t)
    return [ConcretePrism(s, t, a, b, m, bl) for m in matches for bl in builds]


def law_prism_round_trip(corpus, max_card):
    cases = 0
    bound = min(max_card, 4)
    for ns in range(1, bound + 1):
        for na in range(1, bound + 1):
            for nb in range(1, bound + 1):
                for nt in range(1, bound + 1):
                    s, t = _sized("s", ns), _sized("t", nt)
                    a, b = _sized("a", na), _sized("b", nb)
                    count = ((nt + na) ** ns) * (nt ** nb)
                    if count <= 512:
                        prisms = _enumerate_prisms(s, t, a, b)
                    else:
                        match = {
                            x: (tag_right(a.elements[i % na]) if i % 2 else tag_left(t.elements[i % nt]))
                            for i, x in enumerate(s)
                        }
                        build = {y: t.elements[j % nt] for j, y in enumerate(b)}
                        prisms = [ConcretePrism(s, t, a, b, match, build)]
                    for p in prisms:
                        p2 = prism_concretize(prism_abstract(p))
                        if p2.match != p.match or p2.build != p.build:
                            return False, f"round trip failed at sizes ({ns},{na},{nb},{nt})"
                        cases += 1
    return True, f"{cases} prism tables round-trip"


def law_lens_textbook_composition(corpus, max_card):
    l1 = corpus.lens("lens_proj")
    inner = ConcreteLens(
        l1.a, l1.b, _sized("p", 1), _sized("q", 1),
        {x: "p0" for x in l1.a},
        {(x, "q0"): l1.b.elements[i % len(l1.b)] for i, x in enumerate(l1.a)},
    )
    composite = lens_concretize(
        compose_set_optics(lens_abstract(inner), lens_abstract(l1))
    )
    for x in l1.s:
        if composite.get[x] != inner.get[l1.get[x]]:
            return False, f"get2(get1({x})) mismatch"
        for y in inner.b:
            want = l1.put[(x, inner.put[(l1.get[x], y)])]
            if composite.put[(x, y)] != want:
                return False, f"nested put mismatch at ({x},{y})"
    return True, "existential composition equals textbook get/put composition"


def law_prism_build_match(corpus, max_card):
    p = corpus.prism("prism_split")
    for y in p.b:
        built = p.build[y]
        if built in p.match and p.match[built] != tag_right(y):
            return False, f"match(build({y})) does not re-extract {y}"
    return True, "build followed by match re-extracts the focus"


def law_normalform_unit(corpus, max_card):
    l = corpus.lens("lens_proj")
    o = lens_abstract(l)
    ida = identity_set_optic("lens", l.a, l.b)
    ids = identity_set_optic("lens", l.s, l.t)
    if not set_optic_eq(compose_set_optics(ida, o), o):
        return False, "lens left unit failed"
    if not set_optic_eq(compose_set_optics(o, ids), o):
        return False, "lens right unit failed"
    p = corpus.prism("prism_split")
    op = prism_abstract(p)
    idap = identity_set_optic("prism", p.a, p.b)
    idsp = identity_set_optic("prism", p.s, p.t)
    if not set_optic_eq(compose_set_optics(idap, op), op):
        return False, "prism left unit failed"
    if not set_optic_eq(compose_set_optics(op, idsp), op):
        return False, "prism right unit failed"
    return True, "identity optics are two-sided units in both normal forms"


def law_normalform_associativity(corpus, max_card):
    s2, s3 = _sized("x", 2), _sized("y", 3)
    l1 = _sample_lens(s2, s2, s2, s2)
    l2 = _sample_lens(s3, s3, s2, s2)
    l3 = _sample_lens(s3, s3, s3, s3)
    o1, o2, o3 = lens_abstract(l1), lens_abstract(l2), lens_abstract(l3)
    lhs = compose_set_optics(compose_set_optics(o1, o2), o3)
    rhs = compose_set_optics(o1, compose_set_optics(o2, o3))
    if not set_optic_eq(lhs, rhs):
        return False, "lens associativity failed"
    p1 = _enumerate_prisms(s2, s2, s2, s2)[7]
    p2 = _enumerate_prisms(s3, s3, s2, s2)[11]
    p3 = _enumerate_prisms(s3, s3, s3, s3)[13]
    q1, q2, q3 = prism_abstract(p1), prism_abstract(p2), prism_abstract(p3)
    lhs = compose_set_optics(compose_set_optics(q1, q2), q3)
    rhs = compose_set_optics(q1, compose_set_optics(q2, q3))
    if not set_optic_eq(lhs, rhs):
        return False, "prism associativity failed"
    return True, "lens and prism triples associate after normalization"


def law_lens_class_bijection(corpus, max_card):
    s = t = _sized("s", 2)
    a = b = _sized("a", 2)
    lenses = enumerate_lenses(s, t, a, b)
    seen = set()
    for l in lenses:
        c = lens_concretize(lens_abstract(l))
        seen.add((tuple(sorted(c.get.items())), tuple(sorted(c.put.items()))))
    if len(seen) != len(lenses):
        return False, f"{len(lenses)} tables collapsed to {len(seen)} classes"
    # a second representative with residual s x 1 concretizes identically
    l = lenses[5]
    o = lens_abstract(l)
    unit = "u0"
    big = type(o)(
        "lens", o.s, o.t, o.a, o.b,
        FinSet("sx1", tuple(encode_pair(x, unit) for x in o.s)),
        {x: encode_pair(encode_pair(x, unit), l.get[x]) for x in o.s},
        {
            encode_pair(encode_pair(x, unit), y): l.put[(x, y)]
            for x in o.s
            for y in o.b
        },
    )
    if not set_optic_eq(o, big):
        return False, "residual-padded representative has a different normal form"
    return True, f"{len(lenses)} lens classes = tables at size 2; padding invariant"


def law_optic_corpus_round_trip(corpus, max_card):
    l = corpus.lens("lens_proj")
    if oio.lens_from_json(oio.lens_to_json(l)).get != l.get:
        return False, "lens file round trip failed"
    p = corpus.prism("prism_split")
    if oio.prism_from_json(oio.prism_to_json(p)).match != p.match:
        return False, "prism file round trip failed"
    return True, "lens and prism files round-trip through serialize then parse"


# ---------------------------------------------------------------------------
# poly suite
# ---------------------------------------------------------------------------


def law_poly_eval_counts(corpus, max_card):
    y2 = corpus.poly("poly_y2")
    y2y = corpus.poly("poly_y2y")
    c3 = len(eval_poly(y2, _sized("y", 3)))
    c6 = len(eval_poly(y2y, _sized("y", 2)))
    if c3 != 9:
        return False, f"|y^2(3)| = {c3} != 9"
    if c6 != 6:
        return False, f"|(y^2+y)(2)| = {c6} != 6"
    return True, "|y^2(3)| = 9 and |(y^2+y)(2)| = 6"


def law_poly_eval_functorial(corpus, max_card):
    polys = [corpus.poly(s) for s in corpus.stems("poly")]
    sets = [_sized("y", n) for n in range(4)]
    n = 0
    for p in polys:
        for y1 in sets:
            for y2 in sets:
                for y3 in sets:
                    for f in all_functions(y1, y2):
                        for g in all_functions(y2, y3):
                            gf = {k: g[v] for k, v in f.items()}
                            lhs = eval_poly_mor(p, gf, y1, y3)
                            pf = eval_poly_mor(p, f, y1, y2)
                            pg = eval_poly_mor(p, g, y2, y3)
                            if lhs != {k: pg[v] for k, v in pf.items()}:
                                return False, f"eval_poly_mor not functorial for {p.name}"
                            n += 1
    return True, f"{n} composable pairs preserved"


def _poly_pairs(corpus):
    stems = corpus.stems("poly")
    return [(s1, s2) for s1 in stems for s2 in stems]


def law_poly_formula_vs_oracle(corpus, max_card):
    details = []
    compared = 0
    for s1, s2 in _poly_pairs(corpus):
        p, q = corpus.poly(s1), corpus.poly(s2)
        max_dir = max((len(p.directions[n]) for n in p.index), default=0)
        formula = len(enumerate_polylenses(p, q))
        count, _ = nat_oracle(p, q, max_dir + 1)
        if formula != count:
            return False, f"{s1} -> {s2}: formula {formula} != oracle {count}"
        compared += 1
        if (s1, s2) == ("poly_y2", "poly_y"):
            details.append(f"|Nat(y^2,y)| = {formula}")
        if (s1, s2) == ("poly_y", "poly_y2"):
            details.append(f"|Nat(y,y^2)| = {formula}")
    ok = "|Nat(y^2,y)| = 2" in details and "|Nat(y,y^2)| = 1" in details
    return ok, "; ".join(details) + f"; {compared} corpus pairs agree"


def law_poly_nat_naturality(corpus, max_card):
    n = 0
    for s1, s2 in _poly_pairs(corpus):
        p, q = corpus.poly(s1), corpus.poly(s2)
        for l in enumerate_polylenses(p, q):
            for m1 in range(4):
                for m2 in range(4):
                    y1, y2 = _sized("y", m1), _sized("y", m2)
                    for f in all_functions(y1, y2):
                        alpha1 = polylens_to_nat(l, y1)
                        alpha2 = polylens_to_nat(l, y2)
                        pf = eval_poly_mor(p, f, y1, y2)
                        qf = eval_poly_mor(q, f, y1, y2)
                        if any(alpha2[pf[e]] != qf[alpha1[e]] for e in alpha1):
                            return False, f"naturality failed for a lens {s1} -> {s2}"
                        n += 1
    return True, f"{n} naturality squares commute"


def law_poly_nat_injective(corpus, max_card):
    y2 = corpus.poly("poly_y2")
    y1 = corpus.poly("poly_y")
    for p, q in ((y2, y1), (y1, y2), (y2, y2)):
        lenses = enumerate_polylenses(p, q)
        max_dir = max(len(p.directions[n]) for n in p.index)
        y = _sized("y", max_dir + 1)
        tables = {tuple(sorted(polylens_to_nat(l, y).items())) for l in lenses}
        if len(tables) != len(lenses):
            return False, f"polylens_to_nat not injective for {p.name} -> {q.name}"
    return True, "induced transformations distinct at the determining set size"


def law_poly_round_trip(corpus, max_card):
    n = 0
    for s1, s2 in _poly_pairs(corpus):
        p, q = corpus.poly(s1), corpus.poly(s2)
        for l in enumerate_polylenses(p, q):
            if not polylens_eq(ommatidium_to_polylens(polylens_to_ommatidium(l)), l):
                return False, f"round trip failed for a lens {s1} -> {s2}"
            n += 1
    return True, f"{n} polylenses round-trip through ommatidia"


def law_poly_transport_invariance(corpus, max_card):
    n = 0
    for s1, s2 in (("poly_y2", "poly_y"), ("poly_y", "poly_y2")):
        p, q = corpus.poly(s1), corpus.poly(s2)
        for l in enumerate_polylenses(p, q):
            o = polylens_to_ommatidium(l)
            small = {key: finset("c1", ["c0"]) for key in o.residual}
            choices = [
                dict(zip(o.residual, combo))
                for combo in itertools.product(
                    *[o.residual[key].elements for key in o.residual]
                )
            ]
            for choice in choices:
                h = {key: {"c0": choice[key]} for key in o.residual}
                forward = {
                    i: {x: (j, a, "c0") for x, (j, a, g) in o.forward[i].items()}
                    for i in p.index
                }
                o_small, o_big = transport_pair(
                    p, q, small, o.residual, h, forward, o.backward
                )
                if not ommatidium_eq(o_small, o_big):
                    return False, f"transport changed the normal form ({s1} -> {s2})"
                n += 1
    return True, f"{n} residual transports leave the normal form fixed"


def law_poly_compose_pointwise(corpus, max_card):
    y2 = corpus.poly("poly_y2")
    y1 = corpus.poly("poly_y")
    n = 0
    for l1 in enumerate_polylenses(y2, y1):
        for l2 in enumerate_polylenses(y1, y2):
            comp = compose_polylens(l1, l2)
            for m in range(4):
                y = _sized("y", m)
                a1 = polylens_to_nat(l1, y)
                a2 = polylens_to_nat(l2, y)
                if polylens_to_nat(comp, y) != {k: a2[v] for k, v in a1.items()}:
                    return False, "composite table disagrees with pointwise composition"
                n += 1
    return True, f"{n} pointwise comparisons at sizes <= 3"


def law_poly_compose_unit_assoc(corpus, max_card):
    y2 = corpus.poly("poly_y2")
    y1 = corpus.poly("poly_y")
    for l in enumerate_polylenses(y2, y1):
        if not polylens_eq(compose_polylens(identity_polylens(y2), l), l):
            return False, "left identity failed"
        if not polylens_eq(compose_polylens(l, identity_polylens(y1)), l):
            return False, "right identity failed"
    n = 0
    for l1 in enumerate_polylenses(y2, y1):
        for l2 in enumerate_polylenses(y1, y2):
            for l3 in enumerate_polylenses(y2, y1):
                lhs = compose_polylens(compose_polylens(l1, l2), l3)
                rhs = compose_polylens(l1, compose_polylens(l2, l3))
                if not polylens_eq(lhs, rhs):
                    return False, "associativity failed"
                n += 1
    return True, f"identities and {n} associativity triples"


def law_poly_oracle_bound(corpus, max_card):
    y2 = corpus.poly("poly_y2")
    try:
        nat_oracle(y2, y2, 1)
    except FinCatError:
        return True, "oracle refuses a bound below max direction size + 1"
    return False, "oracle accepted an unsound bound"


# ---------------------------------------------------------------------------
# compound suite
# ---------------------------------------------------------------------------


def law_compound_discrete_agreement(corpus, max_card):
    y2 = corpus.poly("poly_y2")
    y1 = corpus.poly("poly_y")
    n = 0
    for lf in enumerate_polylenses(y2, y1):
        for ls in enumerate_polylenses(y1, y2):
            o_f = ommatidium_to_compound(polylens_to_ommatidium(lf))
            o_s = ommatidium_to_compound(polylens_to_ommatidium(ls))
            got = compound_to_polylens(compound_compose(o_s, o_f))
            if not polylens_eq(got, compose_polylens(lf, ls)):
                return False, "compound composite disagrees with compose_polylens"
            n += 1
    return True, f"{n} composites agree with compose_polylens after normalization"


def law_compound_identity_unit(corpus, max_card):
    y2 = corpus.poly("poly_y2")
    y1 = corpus.poly("poly_y")
    n = 0
    for l in enumerate_polylenses(y2, y1):
        o = ommatidium_to_compound(polylens_to_ommatidium(l))
        id_src = identity_compound(o.s, o.t)
        id_tgt = identity_compound(o.a, o.b)
        left = compound_to_polylens(compound_compose(o, id_src))
        right = compound_to_polylens(compound_compose(id_tgt, o))
        want = compound_to_polylens(o)
        if not polylens_eq(left, want) or not polylens_eq(right, want):
            return False, "identity compound optic is not a unit"
        n += 1
    return True, f"{n} optics: identity compound optic is a two-sided unit"


def law_compound_witness_check(corpus, max_card):
    y2 = corpus.poly("poly_y2")
    y1 = corpus.poly("poly_y")
    lenses = enumerate_polylenses(y2, y1)
    accepted = rejected = 0
    for l in lenses:
        o = ommatidium_to_compound(polylens_to_ommatidium(l))
        ident = ProfNat(
            o.p, o.p,
            {key: {x: x for x in o.p.fiber[key]} for key in o.p.fiber},
        )
        if not coend_witness_check(o, o, ident):
            return False, "identity witness rejected"
        accepted += 1
    o1 = ommatidium_to_compound(polylens_to_ommatidium(lenses[0]))
    o2 = ommatidium_to_compound(polylens_to_ommatidium(lenses[1]))
    ident = ProfNat(
        o1.p, o2.p, {key: {x: x for x in o1.p.fiber[key]} for key in o1.p.fiber}
    )
    if coend_witness_check(o1, o2, ident):
        return False, "witness relating distinct optics accepted"
    rejected += 1
    # a genuine non-identity transport step
    omm = polylens_to_ommatidium(lenses[0])
    small = {key: finset("c1", ["c0"]) for key in omm.residual}
    target_elem = {key: omm.residual[key].elements[0] for key in omm.residual}
    h_tab = {key: {"c0": target_elem[key]} for key in omm.residual}
    fwd = {
        i: {x: (j, a, "c0") for x, (j, a, g) in omm.forward[i].items()}
        for i in y2.index
    }
    o_small, o_big = transport_pair(y2, y1, small, omm.residual, h_tab, fwd, omm.backward)
    c_small = ommatidium_to_compound(o_small)
    c_big = ommatidium_to_compound(o_big)
    h_nat = ProfNat(
        c_small.p, c_big.p,
        {(j, i): dict(h_tab[(j, i)]) for (j, i) in omm.residual},
    )
    if not coend_witness_check(c_small, c_big, h_nat):
        return False, "valid transport witness rejected"
    accepted += 1
    bad = ProfNat(
        c_small.p, c_big.p,
        {
            (j, i): {"c0": omm.residual[(j, i)].elements[-1]}
            for (j, i) in omm.residual
        },
    )
    if (bad.components != h_nat.components) and coend_witness_check(c_small, c_big, bad):
        return False, "invalid transport witness accepted"
    rejected += 1
    return True, f"{accepted} valid witnesses accepted, {rejected} invalid rejected"


def law_compound_nondiscrete(corpus, max_card):
    f1 = corpus.copresheaf("cop_f1")
    o = identity_compound(f1, f1)
    oo = compound_compose(o, o)
    norm_src = compound_to_polylens  # not applicable: base is not discrete
    try:
        norm_src(oo)
    except FinCatError:
        pass
    else:
        return False, "normal form accepted a non-discrete base"
    from .fincat import is_natural

    if not (is_natural(oo.forward) and is_natural(oo.backward)):
        return False, "composite components not natural"
    return True, "walking-arrow compound composite is natural; equality left undecided"


# ---------------------------------------------------------------------------
# registry and runner
# ---------------------------------------------------------------------------

SUITES: list[tuple[str, str, list[tuple[str, object]]]] = [
    ("fincat", "category, functor, and co-presheaf axioms on the corpus", [
        ("category-axioms", law_category_axioms),
        ("functor-axioms", law_functor_axioms),
        ("copresheaf-axioms", law_copresheaf_axioms),
        ("opposite-involution", law_opposite_involution),
        ("product-op-commute", law_product_op_commute),
        ("op-product-hom-count", law_op_product_hom_count),
        ("yoneda-count", law_yoneda_count),
    ]),
    ("coend", "quotient construction, co-Yoneda, and Fubini", [
        ("cowedge-condition", law_cowedge),
        ("zigzag-oracle", law_zigzag_oracle),
        ("idempotence", law_coend_idempotent),
        ("products-preserve-coends", law_products_preserve_coends),
        ("coyoneda-bijections", law_coyoneda_bijections),
        ("coyoneda-pair-count", law_coyoneda_pair_count),
        ("fubini-three-way", law_fubini_three_way),
    ]),
    ("kan", "pointwise left Kan extensions", [
        ("composition-chains", law_kan_composition),
        ("lan-identity", law_lan_identity),
        ("lan-discrete", law_lan_discrete),
        ("lan-yoneda-is-pi", law_lan_yoneda_is_pi),
        ("pi-zigzag-oracle", law_pi_zigzag),
    ]),
    ("pi", "collage profunctor composition", [
        ("representative-independence", law_pi_representative_independence),
        ("unit", law_pi_unit),
        ("associativity", law_pi_associativity),
    ]),
    ("prof", "profunctor composition, unit, and actions", [
        ("profunctor-axioms", law_prof_axioms),
        ("matrix-composition", law_prof_matrix_compose),
        ("action-matrix-cardinality", law_prof_action_matrix),
        ("unit-laws", law_prof_units),
        ("associativity-fubini", law_prof_assoc),
        ("action-composition", law_prof_action_composition),
        ("two-cell-functoriality", law_prof_two_cells),
        ("discrete-collapse", law_prof_discrete_collapse),
    ]),
    ("optic-exact", "simple optics over finite monoidal actions", [
        ("instances-valid", law_exact_instances_valid),
        ("trivial-residual", law_exact_trivial_residual),
        ("discrete-residual", law_exact_discrete_residual),
        ("zigzag-oracle", law_exact_zigzag_oracle),
        ("unit", law_exact_unit),
        ("associativity", law_exact_associativity),
        ("representative-soundness", law_exact_representative_soundness),
    ]),
    ("optic-normalform", "lenses and prisms over bounded finite sets", [
        ("lens-round-trip", law_lens_round_trip),
        ("prism-round-trip", law_prism_round_trip),
        ("lens-textbook-composition", law_lens_textbook_composition),
        ("prism-build-match", law_prism_build_match),
        ("unit", law_normalform_unit),
        ("associativity", law_normalform_associativity),
        ("lens-class-bijection", law_lens_class_bijection),
        ("corpus-round-trip", law_optic_corpus_round_trip),
    ]),
    ("poly", "polynomial functors, polylenses, ommatidia", [
        ("eval-counts", law_poly_eval_counts),
        ("eval-functorial", law_poly_eval_functorial),
        ("formula-vs-oracle", law_poly_formula_vs_oracle),
        ("nat-naturality", law_poly_nat_naturality),
        ("nat-injective", law_poly_nat_injective),
        ("ommatidium-round-trip", law_poly_round_trip),
        ("transport-invariance", law_poly_transport_invariance),
        ("compose-pointwise", law_poly_compose_pointwise),
        ("compose-unit-assoc", law_poly_compose_unit_assoc),
        ("oracle-bound", law_poly_oracle_bound),
    ]),
    ("compound", "compound optics over profunctor residuals", [
        ("discrete-agreement", law_compound_discrete_agreement),
        ("identity-unit", law_compound_identity_unit),
        ("witness-check", law_compound_witness_check),
        ("nondiscrete-composition", law_compound_nondiscrete),
    ]),
]


def suite_names() -> list[str]:
    return [name for name, _, _ in SUITES]


def run_suites(
    corpus: Corpus, max_card: int = 4, only: list[str] | None = None
) -> list[LawSuiteReport]:
    reports = []
    for name, description, laws in SUITES:
        if only is not None and name not in only:
            continue
        report = LawSuiteReport(name, description)
        start = time.monotonic()
        for law_name, fn in laws:
            try:
                ok, detail = fn(corpus, max_card)
            except Exception as e:  # a raised law is a failed law
                ok, detail = False, f"{type(e).__name__}: {e}"
            report.results.append(LawResult(name, law_name, ok, detail))
        report.wall_time = time.monotonic() - start
        reports.append(report)
    return reports


def coverage_map() -> list[tuple[str, list[str]]]:
    """Which corpus file prefixes each suite consumes."""
    return [
        ("fincat", ["cat", "fun", "cop"]),
        ("coend", ["cat", "cop"]),
        ("kan", ["cat", "fun", "cop"]),
        ("pi", ["fun"]),
        ("prof", ["prof", "cop"]),
        ("optic-exact", ["cat"]),
        ("optic-normalform", ["lens", "prism"]),
        ("poly", ["poly"]),
        ("compound", ["poly", "cop"]),
    ]
