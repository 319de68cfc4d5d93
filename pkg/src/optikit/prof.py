"""Profunctors between finite categories: composition, the hom-functor unit,
and the matrix-style action on co-presheaves.

A profunctor n ⇸ k is a functor N^op x K -> Set given by a fiber table with
a contravariant action in the first slot and a covariant one in the second.
Composition and actions are coends computed through the coend module, with
provenance kept so every isomorphism witness is constructive.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable

from .coend import (
    IsoWitness,
    QuotientSet,
    WitnessError,
    build_bifunctor,
    coend,
    iso_from_forward,
    map_on_classes,
)
from .fincat import (
    CoPresheaf,
    FinCatError,
    FinCategory,
    FinSet,
    ValidationReport,
    decode_pair,
    encode_pair,
    same_category,
)
from .kan import NatIso


@dataclass
class FinProfunctor:
    """A finite profunctor source ⇸ target with explicit action tables.

    ``lmap[(f, k)]`` maps fiber(tgt f, k) -> fiber(src f, k) for f in the
    source category; ``rmap[(n, g)]`` maps fiber(n, src g) -> fiber(n, tgt g)
    for g in the target category.
    """

    name: str
    source: FinCategory
    target: FinCategory
    fiber: dict[tuple[str, str], FinSet]
    lmap: dict[tuple[str, str], dict[str, str]]
    rmap: dict[tuple[str, str], dict[str, str]]
    provenance: dict[tuple[str, str], QuotientSet] | None = field(default=None, repr=False)

    def at(self, n: str, k: str) -> FinSet:
        return self.fiber[(n, k)]

    def lact(self, f: str, k: str, x: str) -> str:
        return self.lmap[(f, k)][x]

    def ract(self, n: str, g: str, x: str) -> str:
        return self.rmap[(n, g)][x]


def build_profunctor(
    name: str,
    source: FinCategory,
    target: FinCategory,
    fiber_fn: Callable[[str, str], FinSet],
    lact: Callable[[str, str, str], str],
    ract: Callable[[str, str, str], str],
) -> FinProfunctor:
    fiber = {(n, k): fiber_fn(n, k) for n in source.objects for k in target.objects}
    lmap = {
        (f, k): {x: lact(f, k, x) for x in fiber[(source.tgt(f), k)]}
        for f in source.mor_ids()
        for k in target.objects
    }
    rmap = {
        (n, g): {x: ract(n, g, x) for x in fiber[(n, target.src(g))]}
        for g in target.mor_ids()
        for n in source.objects
    }
    return FinProfunctor(name, source, target, fiber, lmap, rmap)


def validate_profunctor(p: FinProfunctor) -> ValidationReport:
    rep = ValidationReport()
    src, tgt = p.source, p.target
    for n in src.objects:
        for k in tgt.objects:
            if any(p.lact(src.identity[n], k, x) != x for x in p.at(n, k)):
                rep.add(f"left action of id_{n} at {k} not identity")
            if any(p.ract(n, tgt.identity[k], x) != x for x in p.at(n, k)):
                rep.add(f"right action of id_{k} at {n} not identity")
    for g, f in src.composable_pairs():
        gf = src.comp(g, f)
        for k in tgt.objects:
            for x in p.at(src.tgt(g), k):
                if p.lact(gf, k, x) != p.lact(f, k, p.lact(g, k, x)):
                    rep.add(f"left action not functorial on ({g}, {f}) at {k}")
                    break
    for g, f in tgt.composable_pairs():
        gf = tgt.comp(g, f)
        for n in src.objects:
            for x in p.at(n, tgt.src(f)):
                if p.ract(n, gf, x) != p.ract(n, g, p.ract(n, f, x)):
                    rep.add(f"right action not functorial on ({g}, {f}) at {n}")
                    break
    for f in src.mor_ids():
        for g in tgt.mor_ids():
            for x in p.at(src.tgt(f), tgt.src(g)):
                a = p.ract(src.src(f), g, p.lact(f, tgt.src(g), x))
                b = p.lact(f, tgt.tgt(g), p.ract(src.tgt(f), g, x))
                if a != b:
                    rep.add(f"actions do not commute on ({f}, {g})")
                    break
    return rep


def hom_profunctor(c: FinCategory) -> FinProfunctor:
    """The hom-functor of c as a profunctor c ⇸ c: the unit of composition."""
    return build_profunctor(
        f"hom({c.name})",
        c,
        c,
        lambda n, k: FinSet(f"{c.name}({n},{k})", c.hom(n, k)),
        lambda f, k, h: c.comp(h, f),
        lambda n, g, h: c.comp(g, h),
    )


def prof_compose(p: FinProfunctor, q: FinProfunctor) -> FinProfunctor:
    """p ⋄ q: fiber(n, k) = coend over m of p(n, m) x q(m, k), with provenance."""
    if not same_category(p.target, q.source):
        raise FinCatError(f"profunctors not composable: {p.name} then {q.name}")
    mid = p.target
    provenance: dict[tuple[str, str], QuotientSet] = {}
    for n in p.source.objects:
        for k in q.target.objects:
            d = build_bifunctor(
                f"{p.name}*{q.name}[{n},{k}]",
                mid,
                lambda neg, pos, n=n, k=k: FinSet(
                    f"({neg},{pos})",
                    tuple(
                        encode_pair(x, y) for x in p.at(n, pos) for y in q.at(neg, k)
                    ),
                ),
                lambda f, pos, xy, n=n, k=k: _on_snd(q.lmap[(f, k)], xy),
                lambda neg, f, xy, n=n: _on_fst(p.rmap[(n, f)], xy),
            )
            provenance[(n, k)] = coend(d)

    def fiber_fn(n, k):
        return provenance[(n, k)].carrier

    def lact(f, k, rep):
        n = p.source.src(f)
        q_from = provenance[(p.source.tgt(f), k)]
        images = {
            provenance[(n, k)].rep_of(m, _on_fst(p.lmap[(f, m)], xy))
            for m, xy in q_from.members(rep)
        }
        if len(images) != 1:
            raise WitnessError("composite left action not well-defined")
        return images.pop()

    def ract(n, g, rep):
        k = q.target.src(g)
        q_from = provenance[(n, k)]
        to = provenance[(n, q.target.tgt(g))]
        images = {to.rep_of(m, _on_snd(q.rmap[(m, g)], xy)) for m, xy in q_from.members(rep)}
        if len(images) != 1:
            raise WitnessError("composite right action not well-defined")
        return images.pop()

    out = build_profunctor(
        f"({p.name}<>{q.name})", p.source, q.target, fiber_fn, lact, ract
    )
    out.provenance = provenance
    return out


def _on_fst(table: dict[str, str], xy: str) -> str:
    x, y = decode_pair(xy)
    return encode_pair(table[x], y)


def _on_snd(table: dict[str, str], xy: str) -> str:
    x, y = decode_pair(xy)
    return encode_pair(x, table[y])


def prof_action(p: FinProfunctor, a: CoPresheaf) -> CoPresheaf:
    """Act on a co-presheaf: (p • a)(k) = coend over n of a(n) x p(n, k)."""
    if not same_category(a.base, p.source):
        raise FinCatError("co-presheaf base does not match profunctor source")
    src, tgt = p.source, p.target
    provenance: dict[str, QuotientSet] = {}
    for k in tgt.objects:
        d = build_bifunctor(
            f"{p.name}.{a.name}[{k}]",
            src,
            lambda neg, pos, k=k: FinSet(
                f"({neg},{pos})",
                tuple(encode_pair(v, x) for v in a.at(pos) for x in p.at(neg, k)),
            ),
            lambda f, pos, vx, k=k: _on_snd(p.lmap[(f, k)], vx),
            lambda neg, f, vx: _on_fst(a.action[f], vx),
        )
        provenance[k] = coend(d)

    action = {}
    for g in tgt.mor_ids():
        k = tgt.src(g)

        def push(n, vx, g=g):
            return provenance[tgt.tgt(g)].rep_of(n, _on_snd(p.rmap[(n, g)], vx))

        action[g] = map_on_classes(provenance[k], push)

    out = CoPresheaf(
        f"({p.name}.{a.name})",
        tgt,
        {k: provenance[k].carrier for k in tgt.objects},
        action,
    )
    out.provenance = provenance  # type: ignore[attr-defined]
    return out


def action_provenance(c: CoPresheaf) -> dict[str, QuotientSet]:
    prov = getattr(c, "provenance", None)
    if prov is None:
        raise FinCatError(f"co-presheaf {c.name} carries no action provenance")
    return prov


def action_composition_check(
    p: FinProfunctor, q: FinProfunctor, a: CoPresheaf
) -> NatIso:
    """Natural isomorphism (p ⋄ q) • a ≅ q • (p • a), with explicit witnesses."""
    pq = prof_compose(p, q)
    lhs = prof_action(pq, a)
    pa = prof_action(p, a)
    rhs = prof_action(q, pa)

    lhs_prov = action_provenance(lhs)
    pa_prov = action_provenance(pa)
    rhs_prov = action_provenance(rhs)
    assert pq.provenance is not None

    components = {}
    for l in q.target.objects:

        def flatten(k_obj, elem, l=l):
            # elem = (w, y) with w a class of (v in a(n), x in p(n, k_obj))
            w, y = decode_pair(elem)
            images = set()
            for n_obj, vx in pa_prov[k_obj].members(w):
                v, x = decode_pair(vx)
                comp = pq.provenance[(n_obj, l)].rep_of(k_obj, encode_pair(x, y))
                images.add(lhs_prov[l].rep_of(n_obj, encode_pair(v, comp)))
            if len(images) != 1:
                raise WitnessError("action composition map not well-defined")
            return images.pop()

        forward = map_on_classes(rhs_prov[l], flatten)
        components[l] = iso_from_forward(rhs.at(l), lhs.at(l), forward)

    witness = NatIso(rhs, lhs, components)
    witness.verify()
    return witness


def prof_assoc_check(
    p: FinProfunctor, q: FinProfunctor, r: FinProfunctor
) -> dict[tuple[str, str], IsoWitness]:
    """Associativity of ⋄ with explicit witnesses, routed through Fubini.

    For each (n, l), both nested composites and both iterated coends of the
    four-variable integrand p(n, m) x q(m, k) x r(k, l) are computed
    independently; all four must induce the same partition of the triples
    (m, k, element), and the returned witness maps (p⋄q)⋄r to p⋄(q⋄r).
    """
    from .coend import build_bifunctor2, fubini_check

    pq_r = prof_compose(prof_compose(p, q), r)
    p_qr = prof_compose(p, prof_compose(q, r))
    pq = prof_compose(p, q)
    qr = prof_compose(q, r)
    mid_m, mid_k = p.target, q.target

    witnesses = {}
    for n in p.source.objects:
        for l in r.target.objects:

            def fiber_fn(mm, mp, km, kp, n=n, l=l):
                return FinSet(
                    "x",
                    tuple(
                        encode_pair(x, encode_pair(y, z))
                        for x in p.at(n, mp)
                        for y in q.at(mm, kp)
                        for z in r.at(km, l)
                    ),
                )

            def unpack(e):
                x, yz = decode_pair(e)
                y, z = decode_pair(yz)
                return x, y, z

            def pack(x, y, z):
                return encode_pair(x, encode_pair(y, z))

            def c_lact(f, cp, dm, dp, e, l=l):
                x, y, z = unpack(e)
                return pack(x, q.lmap[(f, dp)][y], z)

            def c_ract(cm, f, dm, dp, e, n=n):
                x, y, z = unpack(e)
                return pack(p.rmap[(n, f)][x], y, z)

            def d_lact(cm, cp, f, dp, e, l=l):
                x, y, z = unpack(e)
                return pack(x, y, r.lmap[(f, l)][z])

            def d_ract(cm, cp, dm, f, e, n=n):
                x, y, z = unpack(e)
                return pack(x, q.rmap[(cm, f)][y], z)

            d2 = build_bifunctor2(
                f"assoc[{n},{l}]", mid_m, mid_k, fiber_fn,
                c_lact, c_ract, d_lact, d_ract,
            )
            fw = fubini_check(d2)
            prod_partition = {
                frozenset(
                    (*decode_pair(pair_obj), x) for pair_obj, x in members
                ): rep
                for rep, members in fw.prod.classes.items()
            }

            # partitions of the two nested composites, via provenance
            assert pq_r.provenance is not None and pq.provenance is not None
            assert p_qr.provenance is not None and qr.provenance is not None

            def left_triples(rep):
                tris = set()
                for k_obj, wz in pq_r.provenance[(n, l)].members(rep):
                    w, z = decode_pair(wz)
                    for m_obj, xy in pq.provenance[(n, k_obj)].members(w):
                        x, y = decode_pair(xy)
                        tris.add((m_obj, k_obj, pack(x, y, z)))
                return frozenset(tris)

            def right_triples(rep):
                tris = set()
                for m_obj, xw in p_qr.provenance[(n, l)].members(rep):
                    x, w = decode_pair(xw)
                    for k_obj, yz in qr.provenance[(m_obj, l)].members(w):
                        y, z = decode_pair(yz)
                        tris.add((m_obj, k_obj, pack(x, y, z)))
                return frozenset(tris)

            right_by_part = {right_triples(rep): rep for rep in p_qr.at(n, l)}
            forward = {}
            for rep in pq_r.at(n, l):
                tris = left_triples(rep)
                if tris not in prod_partition or tris not in right_by_part:
                    raise WitnessError(
                        f"associativity partitions disagree at ({n}, {l})"
                    )
                forward[rep] = right_by_part[tris]
            for tris in right_by_part:
                if tris not in prod_partition:
                    raise WitnessError(
                        f"associativity partitions disagree at ({n}, {l})"
                    )
            witnesses[(n, l)] = iso_from_forward(
                pq_r.at(n, l), p_qr.at(n, l), forward
            )
    return witnesses


@dataclass
class UnitWitness:
    """Co-Yoneda witnesses for the hom-functor being the unit of ⋄ and •."""

    left: NatIso | None  # hom ⋄ p ≅ p, packaged per target object
    left_components: dict[tuple[str, str], IsoWitness]
    right_components: dict[tuple[str, str], IsoWitness]
    action_components: dict[str, IsoWitness] | None  # (hom • a) ≅ a


def unit_check(p: FinProfunctor, a: CoPresheaf | None = None) -> UnitWitness:
    """Witness hom ⋄ p ≅ p ≅ p ⋄ hom (and hom • a ≅ a when a is given)."""
    hom_s = hom_profunctor(p.source)
    hom_t = hom_profunctor(p.target)

    left = prof_compose(hom_s, p)
    assert left.provenance is not None
    left_components = {}
    for n in p.source.objects:
        for k in p.target.objects:

            def ev(m, hx, n=n, k=k):
                h, x = decode_pair(hx)  # h: n -> m, x in p(m, k)
                return p.lact(h, k, x)

            fwd = map_on_classes(left.provenance[(n, k)], ev)
            left_components[(n, k)] = iso_from_forward(left.at(n, k), p.at(n, k), fwd)

    right = prof_compose(p, hom_t)
    assert right.provenance is not None
    right_components = {}
    for n in p.source.objects:
        for k in p.target.objects:

            def ev(m, xh, n=n, k=k):
                x, h = decode_pair(xh)  # x in p(n, m), h: m -> k
                return p.ract(n, h, x)

            fwd = map_on_classes(right.provenance[(n, k)], ev)
            right_components[(n, k)] = iso_from_forward(right.at(n, k), p.at(n, k), fwd)

    action_components = None
    left_nat = None
    if a is not None:
        ha = prof_action(hom_profunctor(a.base), a)
        prov = action_provenance(ha)
        action_components = {}
        for k in a.base.objects:

            def ev(n, vh, k=k):
                v, h = decode_pair(vh)  # v in a(n), h: n -> k
                return a.act(h, v)

            fwd = map_on_classes(prov[k], ev)
            action_components[k] = iso_from_forward(ha.at(k), a.at(k), fwd)
        left_nat = NatIso(ha, a, action_components)
        left_nat.verify()

    for w in left_components.values():
        w.verify()
    for w in right_components.values():
        w.verify()
    return UnitWitness(left_nat, left_components, right_components, action_components)


def action_on_copresheaf_nat(p: FinProfunctor, alpha) -> tuple[CoPresheaf, CoPresheaf, "object"]:
    """Apply the action functor of p to a map of co-presheaves alpha: a => a2.

    Returns (p • a, p • a2, induced NatTransformation); the induced map is
    checked well-defined on coend classes.
    """
    from .fincat import NatTransformation

    pa = prof_action(p, alpha.source)
    pa2 = prof_action(p, alpha.target)
    pa_prov = action_provenance(pa)
    pa2_prov = action_provenance(pa2)
    components = {}
    for k in p.target.objects:

        def push(n, vx, k=k):
            v, x = decode_pair(vx)
            return pa2_prov[k].rep_of(n, encode_pair(alpha.components[n][v], x))

        components[k] = map_on_classes(pa_prov[k], push)
    return pa, pa2, NatTransformation(pa, pa2, components)


@dataclass
class ProfNat:
    """A 2-cell of Prof: a natural family of maps between profunctor fibers."""

    source: FinProfunctor
    target: FinProfunctor
    components: dict[tuple[str, str], dict[str, str]]

    def at(self, n: str, k: str) -> dict[str, str]:
        return self.components[(n, k)]


def is_prof_natural(h: ProfNat) -> bool:
    p, r = h.source, h.target
    for f in p.source.mor_ids():
        s, t = p.source.src(f), p.source.tgt(f)
        for k in p.target.objects:
            for x in p.at(t, k):
                if h.at(s, k)[p.lact(f, k, x)] != r.lact(f, k, h.at(t, k)[x]):
                    return False
    for g in p.target.mor_ids():
        s, t = p.target.src(g), p.target.tgt(g)
        for n in p.source.objects:
            for x in p.at(n, s):
                if h.at(n, t)[p.ract(n, g, x)] != r.ract(n, g, h.at(n, s)[x]):
                    return False
    return True


def profnat_on_action(h: ProfNat, a: CoPresheaf):
    """The induced map (p • a) => (p' • a) on action co-presheaves.

    Returns (p_action, p'_action, components); components are verified
    well-defined on classes.
    """
    from .fincat import NatTransformation

    pa = prof_action(h.source, a)
    ra = prof_action(h.target, a)
    pa_prov = action_provenance(pa)
    ra_prov = action_provenance(ra)
    components = {}
    for k in h.source.target.objects:

        def push(n, vx, k=k):
            v, x = decode_pair(vx)
            return ra_prov[k].rep_of(n, encode_pair(v, h.at(n, k)[x]))

        components[k] = map_on_classes(pa_prov[k], push)
    return pa, ra, NatTransformation(pa, ra, components)
