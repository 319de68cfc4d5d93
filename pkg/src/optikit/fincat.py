"""Explicit finite categories, functors, co-presheaves and natural transformations.

Everything is given by finite tables: a category is a composition table, a
co-presheaf is a fiber table plus an action table.  All enumeration is done
in canonical (sorted) order so results are deterministic and golden-testable.
"""

from __future__ import annotations

import itertools
import re
from dataclasses import dataclass, field

# Characters reserved for the internal pair / tagged-sum encodings.
_ATOM_RE = re.compile(r"^[^(),@|]+$")


class FinCatError(Exception):
    """Raised on malformed categorical data (unknown ids, base mismatches)."""


def check_atom(a: str) -> str:
    if not isinstance(a, str) or not _ATOM_RE.match(a):
        raise FinCatError(f"invalid atom {a!r}: atoms are nonempty strings without '(),@|'")
    return a


def encode_pair(a: str, b: str) -> str:
    return f"({a},{b})"


def decode_pair(s: str) -> tuple[str, str]:
    """Split a pair atom at its top-level comma (pairs nest)."""
    if not (s.startswith("(") and s.endswith(")")):
        raise FinCatError(f"not a pair atom: {s!r}")
    depth = 0
    for i, ch in enumerate(s[1:-1], start=1):
        if ch in "({":
            depth += 1
        elif ch in ")}":
            depth -= 1
        elif ch == "," and depth == 0:
            return s[1:i], s[i + 1 : -1]
    raise FinCatError(f"not a pair atom: {s!r}")


@dataclass(frozen=True)
class FinSet:
    """A finite set of atoms with a label; elements are kept sorted."""

    label: str
    elements: tuple[str, ...]

    def __post_init__(self):
        elems = tuple(sorted(self.elements))
        if len(set(elems)) != len(elems):
            raise FinCatError(f"duplicate elements in FinSet {self.label!r}")
        object.__setattr__(self, "elements", elems)

    def __len__(self) -> int:
        return len(self.elements)

    def __contains__(self, x: str) -> bool:
        return x in self.elements

    def __iter__(self):
        return iter(self.elements)


def finset(label: str, elements) -> FinSet:
    return FinSet(label, tuple(elements))


def product_set(a: FinSet, b: FinSet, label: str | None = None) -> FinSet:
    label = label or f"{a.label}*{b.label}"
    return FinSet(label, tuple(encode_pair(x, y) for x in a for y in b))


@dataclass
class ValidationReport:
    violations: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.violations

    def add(self, msg: str):
        self.violations.append(msg)


@dataclass
class FinCategory:
    """A finite category: objects, morphisms with endpoints, composition table.

    ``compose[(g, f)] = g∘f`` and is defined exactly when tgt(f) == src(g).
    """

    name: str
    objects: tuple[str, ...]
    morphisms: dict[str, tuple[str, str]]  # id -> (src, tgt)
    identity: dict[str, str]  # object -> morphism id
    compose: dict[tuple[str, str], str]  # (g, f) -> g∘f

    def __post_init__(self):
        self.objects = tuple(sorted(self.objects))

    def src(self, f: str) -> str:
        return self.morphisms[f][0]

    def tgt(self, f: str) -> str:
        return self.morphisms[f][1]

    def id_of(self, obj: str) -> str:
        if obj not in self.identity:
            raise FinCatError(f"unknown object {obj!r} in category {self.name!r}")
        return self.identity[obj]

    def comp(self, g: str, f: str) -> str:
        """g∘f, requiring tgt(f) == src(g)."""
        if self.tgt(f) != self.src(g):
            raise FinCatError(f"morphisms not composable: {g!r} after {f!r}")
        if g == self.identity.get(self.src(g)):
            return f
        if f == self.identity.get(self.src(f)):
            return g
        return self.compose[(g, f)]

    def hom(self, a: str, b: str) -> tuple[str, ...]:
        return tuple(sorted(m for m, (s, t) in self.morphisms.items() if s == a and t == b))

    def mor_ids(self) -> tuple[str, ...]:
        return tuple(sorted(self.morphisms))

    def composable_pairs(self):
        for g in self.mor_ids():
            for f in self.mor_ids():
                if self.tgt(f) == self.src(g):
                    yield g, f


def same_category(c: FinCategory, d: FinCategory) -> bool:
    """Structural equality, ignoring names."""
    return (
        c.objects == d.objects
        and c.morphisms == d.morphisms
        and c.identity == d.identity
        and c.compose == d.compose
    )


def validate_category(c: FinCategory) -> ValidationReport:
    """Check all category axioms exhaustively; violations are data, not errors."""
    rep = ValidationReport()
    for m, (s, t) in sorted(c.morphisms.items()):
        if s not in c.objects:
            rep.add(f"morphism {m}: unknown src {s}")
        if t not in c.objects:
            rep.add(f"morphism {m}: unknown tgt {t}")
    for o in c.objects:
        i = c.identity.get(o)
        if i is None:
            rep.add(f"object {o}: no identity")
            continue
        if i not in c.morphisms:
            rep.add(f"object {o}: identity {i} not a morphism")
        elif c.morphisms[i] != (o, o):
            rep.add(f"object {o}: identity {i} is not an endomorphism of {o}")
    for g, f in c.composable_pairs():
        gf = c.compose.get((g, f))
        ident_g = g == c.identity.get(c.src(g))
        ident_f = f == c.identity.get(c.src(f))
        if gf is None:
            if not (ident_g or ident_f):
                rep.add(f"compose table missing entry ({g}, {f})")
            continue
        if gf not in c.morphisms:
            rep.add(f"compose ({g}, {f}) = {gf} is not a morphism")
            continue
        if c.morphisms[gf] != (c.src(f), c.tgt(g)):
            rep.add(f"compose ({g}, {f}) = {gf} has wrong endpoints")
    # identity laws
    for f in c.mor_ids():
        s, t = c.morphisms[f]
        if s in c.identity and c.comp(f, c.identity[s]) != f:
            rep.add(f"identity law failed: {f}∘id_{s} != {f}")
        if t in c.identity and c.comp(c.identity[t], f) != f:
            rep.add(f"identity law failed: id_{t}∘{f} != {f}")
    # associativity
    for h in c.mor_ids():
        for g in c.mor_ids():
            if c.tgt(g) != c.src(h):
                continue
            for f in c.mor_ids():
                if c.tgt(f) != c.src(g):
                    continue
                try:
                    lhs = c.comp(h, c.comp(g, f))
                    rhs = c.comp(c.comp(h, g), f)
                except (KeyError, FinCatError):
                    continue  # missing entries already reported
                if lhs != rhs:
                    rep.add(f"associativity failed on triple ({h}, {g}, {f}): {lhs} != {rhs}")
    return rep


def opposite(c: FinCategory) -> FinCategory:
    """Reverse all morphisms; compose arguments flip."""
    return FinCategory(
        name=f"{c.name}^op" if not c.name.endswith("^op") else c.name[:-3],
        objects=c.objects,
        morphisms={m: (t, s) for m, (s, t) in c.morphisms.items()},
        identity=dict(c.identity),
        compose={(f, g): gf for (g, f), gf in c.compose.items()},
    )


def product_category(c: FinCategory, d: FinCategory) -> FinCategory:
    objects = tuple(encode_pair(a, b) for a in c.objects for b in d.objects)
    morphisms = {
        encode_pair(f, g): (encode_pair(c.src(f), d.src(g)), encode_pair(c.tgt(f), d.tgt(g)))
        for f in c.mor_ids()
        for g in d.mor_ids()
    }
    identity = {
        encode_pair(a, b): encode_pair(c.identity[a], d.identity[b])
        for a in c.objects
        for b in d.objects
    }
    compose = {}
    for f1, f2 in itertools.product(c.mor_ids(), repeat=2):
        if c.tgt(f2) != c.src(f1):
            continue
        for g1, g2 in itertools.product(d.mor_ids(), repeat=2):
            if d.tgt(g2) != d.src(g1):
                continue
            compose[(encode_pair(f1, g1), encode_pair(f2, g2))] = encode_pair(
                c.comp(f1, f2), d.comp(g1, g2)
            )
    return FinCategory(f"{c.name}x{d.name}", objects, morphisms, identity, compose)


def discrete_category(name: str, objects) -> FinCategory:
    objects = tuple(sorted(objects))
    return FinCategory(
        name=name,
        objects=objects,
        morphisms={f"id_{o}": (o, o) for o in objects},
        identity={o: f"id_{o}" for o in objects},
        compose={(f"id_{o}", f"id_{o}"): f"id_{o}" for o in objects},
    )


def walking_arrow(name: str = "2") -> FinCategory:
    """The category with two objects and one non-identity arrow u: o0 -> o1."""
    return FinCategory(
        name=name,
        objects=("o0", "o1"),
        morphisms={"id_o0": ("o0", "o0"), "id_o1": ("o1", "o1"), "u": ("o0", "o1")},
        identity={"o0": "id_o0", "o1": "id_o1"},
        compose={
            ("id_o0", "id_o0"): "id_o0",
            ("id_o1", "id_o1"): "id_o1",
            ("u", "id_o0"): "u",
            ("id_o1", "u"): "u",
        },
    )


def walking_iso(name: str = "iso") -> FinCategory:
    """Two objects, mutually inverse arrows u: o0 -> o1 and v: o1 -> o0."""
    return FinCategory(
        name=name,
        objects=("o0", "o1"),
        morphisms={
            "id_o0": ("o0", "o0"),
            "id_o1": ("o1", "o1"),
            "u": ("o0", "o1"),
            "v": ("o1", "o0"),
        },
        identity={"o0": "id_o0", "o1": "id_o1"},
        compose={
            ("id_o0", "id_o0"): "id_o0",
            ("id_o1", "id_o1"): "id_o1",
            ("u", "id_o0"): "u",
            ("id_o1", "u"): "u",
            ("v", "id_o1"): "v",
            ("id_o0", "v"): "v",
            ("v", "u"): "id_o0",
            ("u", "v"): "id_o1",
        },
    )


@dataclass
class FinFunctor:
    name: str
    source: FinCategory
    target: FinCategory
    obj_map: dict[str, str]
    mor_map: dict[str, str]

    def ob(self, o: str) -> str:
        return self.obj_map[o]

    def mor(self, f: str) -> str:
        return self.mor_map[f]


def validate_functor(p: FinFunctor) -> ValidationReport:
    rep = ValidationReport()
    for o in p.source.objects:
        if p.obj_map.get(o) not in p.target.objects:
            rep.add(f"object {o}: no valid image")
    for f in p.source.mor_ids():
        pf = p.mor_map.get(f)
        if pf not in p.target.morphisms:
            rep.add(f"morphism {f}: no valid image")
            continue
        if p.target.morphisms[pf] != (p.obj_map[p.source.src(f)], p.obj_map[p.source.tgt(f)]):
            rep.add(f"morphism {f}: image endpoints wrong")
    for o in p.source.objects:
        if p.mor_map.get(p.source.identity[o]) != p.target.identity.get(p.obj_map.get(o)):
            rep.add(f"identity of {o} not preserved")
    for g, f in p.source.composable_pairs():
        pg, pf = p.mor_map.get(g), p.mor_map.get(f)
        if pg not in p.target.morphisms or pf not in p.target.morphisms:
            continue  # already reported above
        if p.target.tgt(pf) != p.target.src(pg):
            continue  # endpoint violation already reported above
        if p.mor_map.get(p.source.comp(g, f)) != p.target.comp(pg, pf):
            rep.add(f"composition not preserved on ({g}, {f})")
    return rep


def identity_functor(c: FinCategory) -> FinFunctor:
    return FinFunctor(
        f"Id_{c.name}", c, c, {o: o for o in c.objects}, {m: m for m in c.mor_ids()}
    )


def compose_functors(q: FinFunctor, p: FinFunctor) -> FinFunctor:
    """Q∘P (apply p first)."""
    if p.target is not q.source and not same_category(p.target, q.source):
        raise FinCatError(f"functors not composable: {q.name} after {p.name}")
    return FinFunctor(
        f"{q.name}.{p.name}",
        p.source,
        q.target,
        {o: q.obj_map[p.obj_map[o]] for o in p.source.objects},
        {m: q.mor_map[p.mor_map[m]] for m in p.source.mor_ids()},
    )


@dataclass
class CoPresheaf:
    """A functor base -> Set given by fiber and action tables."""

    name: str
    base: FinCategory
    fiber: dict[str, FinSet]
    action: dict[str, dict[str, str]]  # morphism id -> (element -> element)

    def at(self, obj: str) -> FinSet:
        return self.fiber[obj]

    def act(self, f: str, x: str) -> str:
        return self.action[f][x]


def validate_copresheaf(p: CoPresheaf) -> ValidationReport:
    rep = ValidationReport()
    c = p.base
    for o in c.objects:
        if o not in p.fiber:
            rep.add(f"object {o}: missing fiber")
    for f in c.mor_ids():
        table = p.action.get(f)
        if table is None:
            rep.add(f"morphism {f}: missing action")
            continue
        dom, cod = p.fiber[c.src(f)], p.fiber[c.tgt(f)]
        if sorted(table) != list(dom.elements):
            rep.add(f"morphism {f}: action domain mismatch")
            continue
        if any(v not in cod for v in table.values()):
            rep.add(f"morphism {f}: action lands outside fiber")
    for o in c.objects:
        i = c.identity[o]
        if p.action.get(i) != {x: x for x in p.fiber[o]}:
            rep.add(f"action of id_{o} is not the identity")
    for g, f in c.composable_pairs():
        gf = c.comp(g, f)
        for x in p.fiber[c.src(f)]:
            if p.act(gf, x) != p.act(g, p.act(f, x)):
                rep.add(f"functoriality failed: ({g}∘{f})({x})")
    return rep


def constant_copresheaf(c: FinCategory, s: FinSet, name: str | None = None) -> CoPresheaf:
    return CoPresheaf(
        name or f"const_{s.label}",
        c,
        {o: s for o in c.objects},
        {m: {x: x for x in s} for m in c.mor_ids()},
    )


def yoneda(c: FinCategory, a: str) -> CoPresheaf:
    """The co-presheaf c(a, -); action is post-composition."""
    if a not in c.objects:
        raise FinCatError(f"unknown object {a!r} in category {c.name!r}")
    fiber = {o: FinSet(f"{c.name}({a},{o})", c.hom(a, o)) for o in c.objects}
    action = {
        f: {g: c.comp(f, g) for g in fiber[c.src(f)]} for f in c.mor_ids()
    }
    return CoPresheaf(f"Y[{a}]", c, fiber, action)


@dataclass
class NatTransformation:
    source: CoPresheaf
    target: CoPresheaf
    components: dict[str, dict[str, str]]  # object -> (element -> element)

    def at(self, obj: str) -> dict[str, str]:
        return self.components[obj]


def is_natural(n: NatTransformation) -> bool:
    f, g = n.source, n.target
    c = f.base
    for m in c.mor_ids():
        s, t = c.src(m), c.tgt(m)
        for x in f.fiber[s]:
            if n.components[t][f.act(m, x)] != g.act(m, n.components[s][x]):
                return False
    return True


def all_functions(a: FinSet, b: FinSet) -> list[dict[str, str]]:
    """Every function a -> b as a table, in canonical order."""
    if len(a) == 0:
        return [{}]
    return [
        dict(zip(a.elements, values))
        for values in itertools.product(b.elements, repeat=len(a))
    ]


def enumerate_nats(f: CoPresheaf, g: CoPresheaf) -> list[NatTransformation]:
    """All natural transformations f => g, by pruned exhaustive search."""
    if f.base is not g.base and not same_category(f.base, g.base):
        raise FinCatError("co-presheaves live over different bases")
    c = f.base
    objs = list(c.objects)
    partials: list[dict[str, dict[str, str]]] = [{}]
    for o in objs:
        assigned = set(objs[: objs.index(o) + 1])
        nxt = []
        for part in partials:
            for comp in all_functions(f.fiber[o], g.fiber[o]):
                cand = {**part, o: comp}
                ok = True
                for m in c.mor_ids():
                    s, t = c.src(m), c.tgt(m)
                    if s not in cand or t not in cand or not (s in assigned and t in assigned):
                        continue
                    if any(
                        cand[t][f.act(m, x)] != g.act(m, cand[s][x]) for x in f.fiber[s]
                    ):
                        ok = False
                        break
                if ok:
                    nxt.append(cand)
        partials = nxt
    return [NatTransformation(f, g, comps) for comps in partials]
