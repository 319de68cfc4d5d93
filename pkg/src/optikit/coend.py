"""Coends of finite Set-valued bifunctors as explicit quotient sets.

The coend of d over its base is the disjoint union of the diagonal fibers
d(c, c) modulo the zig-zag relation generated, for every f: c -> c' and
x in d(c', c), by  left(f)(x) ~ right(f)(x).  The quotient is built with a
union-find; an independent transitive-closure oracle is provided alongside.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable

from .fincat import (
    CoPresheaf,
    FinCatError,
    FinCategory,
    FinSet,
    ValidationReport,
    encode_pair,
    decode_pair,
    product_category,
)


class UnionFind:
    """Disjoint sets over hashable keys, with path compression."""

    def __init__(self, items):
        self.parent = {x: x for x in items}

    def find(self, x):
        root = x
        while self.parent[root] != root:
            root = self.parent[root]
        while self.parent[x] != root:
            self.parent[x], x = root, self.parent[x]
        return root

    def union(self, x, y):
        rx, ry = self.find(x), self.find(y)
        if rx != ry:
            self.parent[ry] = rx

    def classes(self) -> list[tuple]:
        by_root: dict = {}
        for x in self.parent:
            by_root.setdefault(self.find(x), []).append(x)
        return [tuple(sorted(v)) for v in by_root.values()]


@dataclass
class FinBifunctor:
    """A functor base^op x base -> Set given by fiber and action tables.

    ``lmap[(f, pos)]`` is the contravariant action of f: c -> c', a function
    fiber(c', pos) -> fiber(c, pos); ``rmap[(neg, f)]`` is the covariant one,
    fiber(neg, c) -> fiber(neg, c').
    """

    name: str
    base: FinCategory
    fiber: dict[tuple[str, str], FinSet]
    lmap: dict[tuple[str, str], dict[str, str]]
    rmap: dict[tuple[str, str], dict[str, str]]

    def at(self, neg: str, pos: str) -> FinSet:
        return self.fiber[(neg, pos)]

    def lact(self, f: str, pos: str, x: str) -> str:
        return self.lmap[(f, pos)][x]

    def ract(self, neg: str, f: str, x: str) -> str:
        return self.rmap[(neg, f)][x]


def build_bifunctor(
    name: str,
    base: FinCategory,
    fiber_fn: Callable[[str, str], FinSet],
    lact: Callable[[str, str, str], str],
    ract: Callable[[str, str, str], str],
) -> FinBifunctor:
    """Materialize a bifunctor from callables into explicit tables."""
    fiber = {(n, p): fiber_fn(n, p) for n in base.objects for p in base.objects}
    lmap = {
        (f, pos): {x: lact(f, pos, x) for x in fiber[(base.tgt(f), pos)]}
        for f in base.mor_ids()
        for pos in base.objects
    }
    rmap = {
        (neg, f): {x: ract(neg, f, x) for x in fiber[(neg, base.src(f))]}
        for f in base.mor_ids()
        for neg in base.objects
    }
    return FinBifunctor(name, base, fiber, lmap, rmap)


def validate_bifunctor(d: FinBifunctor) -> ValidationReport:
    rep = ValidationReport()
    c = d.base
    for o in c.objects:
        i = c.identity[o]
        for pos in c.objects:
            if any(d.lact(i, pos, x) != x for x in d.at(o, pos)):
                rep.add(f"left action of id_{o} at pos {pos} not identity")
        for neg in c.objects:
            if any(d.ract(neg, i, x) != x for x in d.at(neg, o)):
                rep.add(f"right action of id_{o} at neg {neg} not identity")
    for g, f in c.composable_pairs():
        gf = c.comp(g, f)
        for pos in c.objects:
            for x in d.at(c.tgt(g), pos):
                if d.lact(gf, pos, x) != d.lact(f, pos, d.lact(g, pos, x)):
                    rep.add(f"left action not functorial on ({g}, {f}) at pos {pos}")
                    break
        for neg in c.objects:
            for x in d.at(neg, c.src(f)):
                if d.ract(neg, gf, x) != d.ract(neg, g, d.ract(neg, f, x)):
                    rep.add(f"right action not functorial on ({g}, {f}) at neg {neg}")
                    break
    for f in c.mor_ids():
        for g in c.mor_ids():
            # left along f in the neg slot, right along g in the pos slot
            for x in d.at(c.tgt(f), c.src(g)):
                a = d.ract(c.src(f), g, d.lact(f, c.src(g), x))
                b = d.lact(f, c.tgt(g), d.ract(c.tgt(f), g, x))
                if a != b:
                    rep.add(f"actions do not commute on ({f}, {g})")
                    break
    return rep


def diag_atom(obj: str, elem: str) -> str:
    return f"{obj}@{elem}"


def split_diag_atom(atom: str) -> tuple[str, str]:
    obj, _, elem = atom.partition("@")
    return obj, elem


@dataclass
class QuotientSet:
    """A coend carrier: canonical representatives plus the full partition."""

    carrier: FinSet
    classes: dict[str, tuple[tuple[str, str], ...]]  # rep atom -> members (obj, elem)
    inject: dict[str, dict[str, str]]  # object -> element -> rep atom

    def rep_of(self, obj: str, elem: str) -> str:
        return self.inject[obj][elem]

    def members(self, rep: str) -> tuple[tuple[str, str], ...]:
        return self.classes[rep]

    def partition(self) -> set[frozenset[tuple[str, str]]]:
        return {frozenset(m) for m in self.classes.values()}


def coend(d: FinBifunctor) -> QuotientSet:
    """Quotient the diagonal fibers by the zig-zag relation, via union-find."""
    items = [(o, x) for o in d.base.objects for x in d.at(o, o)]
    uf = UnionFind(items)
    for f in d.base.mor_ids():
        s, t = d.base.src(f), d.base.tgt(f)
        for x in d.at(t, s):
            uf.union((s, d.lact(f, s, x)), (t, d.ract(t, f, x)))
    classes = {}
    inject: dict[str, dict[str, str]] = {o: {} for o in d.base.objects}
    for cls in uf.classes():
        rep = diag_atom(*min(cls))
        classes[rep] = cls
        for obj, elem in cls:
            inject[obj][elem] = rep
    carrier = FinSet(f"coend({d.name})", tuple(classes))
    return QuotientSet(carrier, classes, inject)


def zigzag_closure(d: FinBifunctor) -> set[frozenset[tuple[str, str]]]:
    """Independent oracle: connected components of the explicit zig-zag graph."""
    adj: dict[tuple[str, str], set[tuple[str, str]]] = {
        (o, x): set() for o in d.base.objects for x in d.at(o, o)
    }
    for f in d.base.mor_ids():
        s, t = d.base.src(f), d.base.tgt(f)
        for x in d.at(t, s):
            a, b = (s, d.lact(f, s, x)), (t, d.ract(t, f, x))
            adj[a].add(b)
            adj[b].add(a)
    seen: set[tuple[str, str]] = set()
    parts = set()
    for start in adj:
        if start in seen:
            continue
        comp, frontier = {start}, [start]
        while frontier:
            cur = frontier.pop()
            for nxt in adj[cur]:
                if nxt not in comp:
                    comp.add(nxt)
                    frontier.append(nxt)
        seen |= comp
        parts.add(frozenset(comp))
    return parts


class WitnessError(Exception):
    """An isomorphism witness failed verification: signals a kernel bug."""


@dataclass
class IsoWitness:
    """An explicit bijection given by both function tables."""

    source: FinSet
    target: FinSet
    forward: dict[str, str]
    backward: dict[str, str]

    def verify(self):
        if sorted(self.forward) != list(self.source.elements):
            raise WitnessError(f"forward domain mismatch for {self.source.label}")
        if sorted(self.backward) != list(self.target.elements):
            raise WitnessError(f"backward domain mismatch for {self.target.label}")
        for x, y in self.forward.items():
            if y not in self.target or self.backward[y] != x:
                raise WitnessError(f"backward(forward({x})) != {x}")
        for y, x in self.backward.items():
            if x not in self.source or self.forward[x] != y:
                raise WitnessError(f"forward(backward({y})) != {y}")


def iso_from_forward(source: FinSet, target: FinSet, forward: dict[str, str]) -> IsoWitness:
    """Invert a map after checking it is a bijection."""
    if len(set(forward.values())) != len(forward) or len(forward) != len(target):
        raise WitnessError(
            f"map {source.label} -> {target.label} is not a bijection"
        )
    w = IsoWitness(source, target, dict(forward), {y: x for x, y in forward.items()})
    w.verify()
    return w


def map_on_classes(q: QuotientSet, fn: Callable[[str, str], str]) -> dict[str, str]:
    """Apply fn to every class member; raise unless constant per class."""
    out = {}
    for rep, members in q.classes.items():
        values = {fn(obj, elem) for obj, elem in members}
        if len(values) != 1:
            raise WitnessError(f"map not well-defined on class {rep}: {sorted(values)}")
        out[rep] = values.pop()
    return out


@dataclass
class CoYonedaWitness:
    quotient: QuotientSet
    iso: IsoWitness  # carrier <-> f(a)


def coyoneda_check(f: CoPresheaf, a: str) -> CoYonedaWitness:
    """Verify carrier of the co-Yoneda coend is f(a), by explicit evaluation.

    The integrand at (c-, c+) is base(c-, a) x f(c+): contravariant by
    pre-composition, covariant through f.
    """
    c = f.base
    if a not in c.objects:
        raise FinCatError(f"unknown object {a!r}")
    d = build_bifunctor(
        f"coyoneda[{f.name},{a}]",
        c,
        lambda neg, pos: FinSet(
            f"({neg},{pos})",
            tuple(encode_pair(h, x) for h in c.hom(neg, a) for x in f.at(pos)),
        ),
        lambda g, pos, px: _precomp_pair(c, g, px),
        lambda neg, g, px: _act_pair(f, g, px),
    )
    q = coend(d)

    def evaluate(obj: str, elem: str) -> str:
        h, x = decode_pair(elem)
        return f.act(h, x)

    forward = map_on_classes(q, evaluate)
    return CoYonedaWitness(q, iso_from_forward(q.carrier, f.at(a), forward))


def _precomp_pair(c: FinCategory, g: str, px: str) -> str:
    h, x = decode_pair(px)
    return encode_pair(c.comp(h, g), x)


def _act_pair(f: CoPresheaf, g: str, px: str) -> str:
    h, x = decode_pair(px)
    return encode_pair(h, f.act(g, x))


@dataclass
class FinBifunctor2:
    """A Set-valued functor of four variables (c-, c+, d-, d+), two bases.

    Action tables: ``c_lmap[(f, cp, dm, dp)]`` acts contravariantly in the
    first slot, and so on; all four actions commute pairwise.
    """

    name: str
    base_c: FinCategory
    base_d: FinCategory
    fiber: dict[tuple[str, str, str, str], FinSet]
    c_lmap: dict[tuple, dict[str, str]]
    c_rmap: dict[tuple, dict[str, str]]
    d_lmap: dict[tuple, dict[str, str]]
    d_rmap: dict[tuple, dict[str, str]]

    def at(self, cm, cp, dm, dp) -> FinSet:
        return self.fiber[(cm, cp, dm, dp)]


def build_bifunctor2(
    name: str,
    base_c: FinCategory,
    base_d: FinCategory,
    fiber_fn: Callable[[str, str, str, str], FinSet],
    c_lact: Callable[[str, str, str, str, str], str],
    c_ract: Callable[[str, str, str, str, str], str],
    d_lact: Callable[[str, str, str, str, str], str],
    d_ract: Callable[[str, str, str, str, str], str],
) -> FinBifunctor2:
    cs, ds = base_c.objects, base_d.objects
    fiber = {
        (cm, cp, dm, dp): fiber_fn(cm, cp, dm, dp)
        for cm in cs for cp in cs for dm in ds for dp in ds
    }
    c_lmap = {
        (f, cp, dm, dp): {
            x: c_lact(f, cp, dm, dp, x) for x in fiber[(base_c.tgt(f), cp, dm, dp)]
        }
        for f in base_c.mor_ids() for cp in cs for dm in ds for dp in ds
    }
    c_rmap = {
        (cm, f, dm, dp): {
            x: c_ract(cm, f, dm, dp, x) for x in fiber[(cm, base_c.src(f), dm, dp)]
        }
        for f in base_c.mor_ids() for cm in cs for dm in ds for dp in ds
    }
    d_lmap = {
        (cm, cp, f, dp): {
            x: d_lact(cm, cp, f, dp, x) for x in fiber[(cm, cp, base_d.tgt(f), dp)]
        }
        for f in base_d.mor_ids() for cm in cs for cp in cs for dp in ds
    }
    d_rmap = {
        (cm, cp, dm, f): {
            x: d_ract(cm, cp, dm, f, x) for x in fiber[(cm, cp, dm, base_d.src(f))]
        }
        for f in base_d.mor_ids() for cm in cs for cp in cs for dm in ds
    }
    return FinBifunctor2(name, base_c, base_d, fiber, c_lmap, c_rmap, d_lmap, d_rmap)


def product_bifunctor(d2: FinBifunctor2) -> FinBifunctor:
    """Reindex a four-variable functor as a bifunctor over the product category."""
    prod = product_category(d2.base_c, d2.base_d)

    def fiber_fn(neg, pos):
        cm, dm = decode_pair(neg)
        cp, dp = decode_pair(pos)
        return d2.fiber[(cm, cp, dm, dp)]

    def lact(fg, pos, x):
        f, g = decode_pair(fg)
        cp, dp = decode_pair(pos)
        cs, ct = d2.base_c.src(f), d2.base_c.tgt(f)
        x = d2.d_lmap[(ct, cp, g, dp)][x]
        return d2.c_lmap[(f, cp, d2.base_d.src(g), dp)][x]

    def ract(neg, fg, x):
        f, g = decode_pair(fg)
        cm, dm = decode_pair(neg)
        x = d2.d_rmap[(cm, d2.base_c.src(f), dm, g)][x]
        return d2.c_rmap[(cm, f, dm, d2.base_d.tgt(g))][x]

    return build_bifunctor(f"prod({d2.name})", prod, fiber_fn, lact, ract)


def _iterated_coend(d2: FinBifunctor2, inner: str):
    """Compute the iterated coend, inner base first ('c' or 'd').

    Returns (outer QuotientSet, partition dict rep -> frozenset of
    (c_obj, d_obj, elem) triples).
    """
    if inner == "d":
        inner_base, outer_base = d2.base_d, d2.base_c

        def inner_fiber(om, op, im, ip):
            return d2.fiber[(om, op, im, ip)]

        inner_lmap = lambda om, op, f, ip: d2.d_lmap[(om, op, f, ip)]
        inner_rmap = lambda om, op, im, f: d2.d_rmap[(om, op, im, f)]
        outer_lmap = lambda f, op, io, x: d2.c_lmap[(f, op, io, io)][x]
        outer_rmap = lambda om, f, io, x: d2.c_rmap[(om, f, io, io)][x]
        triple = lambda o_obj, i_obj, x: (o_obj, i_obj, x)
    elif inner == "c":
        inner_base, outer_base = d2.base_c, d2.base_d

        def inner_fiber(om, op, im, ip):
            return d2.fiber[(im, ip, om, op)]

        inner_lmap = lambda om, op, f, ip: d2.c_lmap[(f, ip, om, op)]
        inner_rmap = lambda om, op, im, f: d2.c_rmap[(im, f, om, op)]
        outer_lmap = lambda f, op, io, x: d2.d_lmap[(io, io, f, op)][x]
        outer_rmap = lambda om, f, io, x: d2.d_rmap[(io, io, om, f)][x]
        triple = lambda o_obj, i_obj, x: (i_obj, o_obj, x)
    else:
        raise ValueError(inner)

    inner_qs: dict[tuple[str, str], QuotientSet] = {}
    for om in outer_base.objects:
        for op in outer_base.objects:
            bi = FinBifunctor(
                f"{d2.name}[{om},{op}]",
                inner_base,
                {
                    (im, ip): inner_fiber(om, op, im, ip)
                    for im in inner_base.objects
                    for ip in inner_base.objects
                },
                {
                    (f, ip): inner_lmap(om, op, f, ip)
                    for f in inner_base.mor_ids()
                    for ip in inner_base.objects
                },
                {
                    (im, f): inner_rmap(om, op, im, f)
                    for f in inner_base.mor_ids()
                    for im in inner_base.objects
                },
            )
            inner_qs[(om, op)] = coend(bi)

    def outer_fiber(om, op):
        return inner_qs[(om, op)].carrier

    def outer_lact(f, op, rep):
        src = outer_base.src(f)
        q_from = inner_qs[(outer_base.tgt(f), op)]
        q_to = inner_qs[(src, op)]
        images = {
            q_to.rep_of(io, outer_lmap(f, op, io, x)) for io, x in q_from.members(rep)
        }
        if len(images) != 1:
            raise WitnessError(f"outer left action not well-defined at {rep}")
        return images.pop()

    def outer_ract(om, f, rep):
        q_from = inner_qs[(om, outer_base.src(f))]
        q_to = inner_qs[(om, outer_base.tgt(f))]
        images = {
            q_to.rep_of(io, outer_rmap(om, f, io, x)) for io, x in q_from.members(rep)
        }
        if len(images) != 1:
            raise WitnessError(f"outer right action not well-defined at {rep}")
        return images.pop()

    outer = build_bifunctor(
        f"outer({d2.name},{inner})", outer_base, outer_fiber, outer_lact, outer_ract
    )
    q = coend(outer)
    partition = {}
    for rep, members in q.classes.items():
        tris = set()
        for o_obj, inner_rep in members:
            for i_obj, x in inner_qs[(o_obj, o_obj)].members(inner_rep):
                tris.add(triple(o_obj, i_obj, x))
        partition[rep] = frozenset(tris)
    return q, partition


@dataclass
class FubiniWitness:
    cd: QuotientSet  # inner coend over d, then over c
    dc: QuotientSet  # inner coend over c, then over d
    prod: QuotientSet  # single coend over the product category
    cd_to_prod: IsoWitness
    dc_to_prod: IsoWitness


def fubini_check(d2: FinBifunctor2) -> FubiniWitness:
    """Match both iterated coends against the coend over the product category."""
    q_cd, part_cd = _iterated_coend(d2, inner="d")
    q_dc, part_dc = _iterated_coend(d2, inner="c")
    q_prod = coend(product_bifunctor(d2))

    part_prod = {}
    for rep, members in q_prod.classes.items():
        tris = set()
        for pair_obj, x in members:
            c_obj, d_obj = decode_pair(pair_obj)
            tris.add((c_obj, d_obj, x))
        part_prod[rep] = frozenset(tris)

    prod_by_part = {v: k for k, v in part_prod.items()}
    if len(prod_by_part) != len(part_prod):
        raise WitnessError("product coend classes are not distinct")

    def match(part: dict[str, frozenset]) -> dict[str, str]:
        fwd = {}
        for rep, tris in part.items():
            if tris not in prod_by_part:
                raise WitnessError(f"iterated class {rep} has no match in product coend")
            fwd[rep] = prod_by_part[tris]
        return fwd

    w_cd = iso_from_forward(q_cd.carrier, q_prod.carrier, match(part_cd))
    w_dc = iso_from_forward(q_dc.carrier, q_prod.carrier, match(part_dc))
    return FubiniWitness(q_cd, q_dc, q_prod, w_cd, w_dc)
