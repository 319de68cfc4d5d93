"""Simple mixed optics from monoidal actions, in two equality regimes.

EXACT: the acting monoidal category is an explicit finite category, so the
optic coend is computed outright and equality is class equality.

NORMALFORM: the product / coproduct actions on bounded finite sets, where
the indexing category is infinite; equality is decided by concretizing to
get/put (lens) or match/build (prism) tables.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .coend import QuotientSet, build_bifunctor, coend
from .fincat import (
    FinCatError,
    FinCategory,
    FinSet,
    ValidationReport,
    decode_pair,
    encode_pair,
    finset,
    walking_iso,
)


@dataclass
class FinMonoidalCategory:
    """A finite monoidal category with explicitly recorded coherence cells.

    Unitors and associators are stored even for strict instances (as
    identities) so one code path covers weak monoidal categories.
    """

    underlying: FinCategory
    tensor_obj: dict[tuple[str, str], str]
    tensor_mor: dict[tuple[str, str], str]
    unit: str
    left_unitor: dict[str, str]  # m: I⊗m -> m
    right_unitor: dict[str, str]  # m: m⊗I -> m
    associator: dict[tuple[str, str, str], str]  # (m⊗n)⊗p -> m⊗(n⊗p)

    def tob(self, m: str, n: str) -> str:
        return self.tensor_obj[(m, n)]

    def tmor(self, f: str, g: str) -> str:
        return self.tensor_mor[(f, g)]


def inverse_mor(c: FinCategory, f: str) -> str:
    """The two-sided inverse of f, which must exist."""
    s, t = c.src(f), c.tgt(f)
    for g in c.hom(t, s):
        if c.comp(g, f) == c.identity[s] and c.comp(f, g) == c.identity[t]:
            return g
    raise FinCatError(f"morphism {f} is not invertible")


def validate_monoidal(m: FinMonoidalCategory) -> ValidationReport:
    rep = ValidationReport()
    c = m.underlying
    for a in c.objects:
        for b in c.objects:
            if m.tensor_obj.get((a, b)) not in c.objects:
                rep.add(f"tensor_obj missing/invalid at ({a}, {b})")
    for f in c.mor_ids():
        for g in c.mor_ids():
            fg = m.tensor_mor.get((f, g))
            if fg is None or fg not in c.morphisms:
                rep.add(f"tensor_mor missing at ({f}, {g})")
                continue
            want = (m.tob(c.src(f), c.src(g)), m.tob(c.tgt(f), c.tgt(g)))
            if c.morphisms[fg] != want:
                rep.add(f"tensor_mor endpoints wrong at ({f}, {g})")
    for a in c.objects:
        for b in c.objects:
            if m.tmor(c.identity[a], c.identity[b]) != c.identity[m.tob(a, b)]:
                rep.add(f"tensor not unital on identities at ({a}, {b})")
    for f2, f1 in c.composable_pairs():
        for g2, g1 in c.composable_pairs():
            lhs = m.tmor(c.comp(f2, f1), c.comp(g2, g1))
            rhs = c.comp(m.tmor(f2, g2), m.tmor(f1, g1))
            if lhs != rhs:
                rep.add(f"tensor interchange failed at (({f2},{f1}), ({g2},{g1}))")
    for a in c.objects:
        for iso, (src, tgt) in (
            (m.left_unitor.get(a), (m.tob(m.unit, a), a)),
            (m.right_unitor.get(a), (m.tob(a, m.unit), a)),
        ):
            if iso is None or c.morphisms.get(iso) != (src, tgt):
                rep.add(f"unitor wrong at {a}")
                continue
            try:
                inverse_mor(c, iso)
            except FinCatError:
                rep.add(f"unitor not invertible at {a}")
    for a in c.objects:
        for b in c.objects:
            for d in c.objects:
                al = m.associator.get((a, b, d))
                want = (m.tob(m.tob(a, b), d), m.tob(a, m.tob(b, d)))
                if al is None or c.morphisms.get(al) != want:
                    rep.add(f"associator wrong at ({a}, {b}, {d})")
                    continue
                try:
                    inverse_mor(c, al)
                except FinCatError:
                    rep.add(f"associator not invertible at ({a}, {b}, {d})")
    return rep


def strict_monoidal(
    underlying: FinCategory,
    tensor_obj: dict[tuple[str, str], str],
    tensor_mor: dict[tuple[str, str], str],
    unit: str,
) -> FinMonoidalCategory:
    """A strict instance: coherence cells are identities."""
    c = underlying
    return FinMonoidalCategory(
        underlying=c,
        tensor_obj=tensor_obj,
        tensor_mor=tensor_mor,
        unit=unit,
        left_unitor={a: c.identity[a] for a in c.objects},
        right_unitor={a: c.identity[a] for a in c.objects},
        associator={
            (a, b, d): c.identity[tensor_obj[(tensor_obj[(a, b)], d)]]
            for a in c.objects
            for b in c.objects
            for d in c.objects
        },
    )


def trivial_monoidal() -> FinMonoidalCategory:
    c = FinCategory("1", ("I",), {"id_I": ("I", "I")}, {"I": "id_I"}, {("id_I", "id_I"): "id_I"})
    return strict_monoidal(c, {("I", "I"): "I"}, {("id_I", "id_I"): "id_I"}, "I")


def z2_discrete_monoidal() -> FinMonoidalCategory:
    """Two objects with only identities; tensor is the group Z/2."""
    from .fincat import discrete_category

    c = discrete_category("z2", ["e", "g"])
    mul = {("e", "e"): "e", ("e", "g"): "g", ("g", "e"): "g", ("g", "g"): "e"}
    return strict_monoidal(
        c, mul, {(f"id_{a}", f"id_{b}"): f"id_{mul[(a,b)]}" for a in "eg" for b in "eg"}, "e"
    )


def walking_iso_monoidal() -> FinMonoidalCategory:
    """The walking isomorphism, made strict monoidal via xor on objects.

    The category is indiscrete, so the tensor of morphisms is the unique
    morphism between the tensored endpoints.
    """
    c = walking_iso("isoM")
    flip = {"o0": "o1", "o1": "o0"}
    tob = {
        (a, b): (b if a == "o0" else flip[b]) for a in c.objects for b in c.objects
    }
    tmor = {}
    for f in c.mor_ids():
        for g in c.mor_ids():
            s = tob[(c.src(f), c.src(g))]
            t = tob[(c.tgt(f), c.tgt(g))]
            tmor[(f, g)] = c.hom(s, t)[0]
    return strict_monoidal(c, tob, tmor, "o0")


@dataclass
class MonoidalAction:
    """An action of a finite monoidal category on a finite category.

    ``mult[(m, n, c)]`` is the coherence iso (m⊗n)•c -> m•(n•c), and
    ``unit_iso[c]`` is I•c -> c; both are identities for strict actions.
    """

    name: str
    acting: FinMonoidalCategory
    on: FinCategory
    app: dict[tuple[str, str], str]
    app_mor: dict[tuple[str, str], str]
    mult: dict[tuple[str, str, str], str]
    unit_iso: dict[str, str]

    def ob(self, m: str, c: str) -> str:
        return self.app[(m, c)]

    def mor(self, mu: str, f: str) -> str:
        return self.app_mor[(mu, f)]


def validate_action(act: MonoidalAction) -> ValidationReport:
    rep = ValidationReport()
    mcat = act.acting.underlying
    c = act.on
    for m in mcat.objects:
        for o in c.objects:
            if act.app.get((m, o)) not in c.objects:
                rep.add(f"app missing at ({m}, {o})")
    for mu in mcat.mor_ids():
        for f in c.mor_ids():
            mf = act.app_mor.get((mu, f))
            want = (act.ob(mcat.src(mu), c.src(f)), act.ob(mcat.tgt(mu), c.tgt(f)))
            if mf is None or c.morphisms.get(mf) != want:
                rep.add(f"app_mor wrong at ({mu}, {f})")
    for m in mcat.objects:
        for o in c.objects:
            if act.mor(mcat.identity[m], c.identity[o]) != c.identity[act.ob(m, o)]:
                rep.add(f"action not unital on identities at ({m}, {o})")
    for mu2, mu1 in mcat.composable_pairs():
        for f2, f1 in c.composable_pairs():
            lhs = act.mor(mcat.comp(mu2, mu1), c.comp(f2, f1))
            rhs = c.comp(act.mor(mu2, f2), act.mor(mu1, f1))
            if lhs != rhs:
                rep.add(f"action interchange failed at ({mu2}∘{mu1}, {f2}∘{f1})")
    for m in mcat.objects:
        for n in mcat.objects:
            for o in c.objects:
                iso = act.mult.get((m, n, o))
                want = (act.ob(act.acting.tob(m, n), o), act.ob(m, act.ob(n, o)))
                if iso is None or c.morphisms.get(iso) != want:
                    rep.add(f"mult iso wrong at ({m}, {n}, {o})")
                    continue
                try:
                    inverse_mor(c, iso)
                except FinCatError:
                    rep.add(f"mult iso not invertible at ({m}, {n}, {o})")
                # naturality in the acted-on object
                for f in c.mor_ids():
                    if c.src(f) != o:
                        continue
                    idm, idn = mcat.identity[m], mcat.identity[n]
                    lhs = c.comp(
                        act.mor(idm, act.mor(idn, f)), iso
                    )
                    rhs = c.comp(act.mult[(m, n, c.tgt(f))], act.mor(act.acting.tmor(idm, idn), f))
                    if lhs != rhs:
                        rep.add(f"mult iso not natural at ({m}, {n}, {f})")
    for o in c.objects:
        iso = act.unit_iso.get(o)
        if iso is None or c.morphisms.get(iso) != (act.ob(act.acting.unit, o), o):
            rep.add(f"unit iso wrong at {o}")
            continue
        try:
            inverse_mor(c, iso)
        except FinCatError:
            rep.add(f"unit iso not invertible at {o}")
    return rep


def self_action(m: FinMonoidalCategory) -> MonoidalAction:
    """A monoidal category acting on its own underlying category by tensor."""
    c = m.underlying
    return MonoidalAction(
        name=f"self[{c.name}]",
        acting=m,
        on=c,
        app=dict(m.tensor_obj),
        app_mor=dict(m.tensor_mor),
        mult={(x, y, o): m.associator[(x, y, o)] for x in c.objects for y in c.objects for o in c.objects},
        unit_iso={o: m.left_unitor[o] for o in c.objects},
    )


def trivial_action(m: FinMonoidalCategory, on: FinCategory) -> MonoidalAction:
    """The one-object monoidal category acting trivially."""
    if m.underlying.objects != (m.unit,):
        raise FinCatError("trivial_action needs a one-object monoidal category")
    ident = m.underlying.identity[m.unit]
    return MonoidalAction(
        name=f"triv[{on.name}]",
        acting=m,
        on=on,
        app={(m.unit, o): o for o in on.objects},
        app_mor={(ident, f): f for f in on.mor_ids()},
        mult={(m.unit, m.unit, o): on.identity[o] for o in on.objects},
        unit_iso={o: on.identity[o] for o in on.objects},
    )


@dataclass
class ExistentialOptic:
    """An EXACT-regime optic: residual object with forward/backward morphisms.

    Equality is coend-class equality, decided through optic_coend.
    """

    act1: MonoidalAction
    act2: MonoidalAction
    m: str
    forward: str  # in act1.on: s -> m•a
    backward: str  # in act2.on: m•b -> t
    a: str
    b: str
    s: str
    t: str

    def __post_init__(self):
        c, d = self.act1.on, self.act2.on
        if c.morphisms[self.forward] != (self.s, self.act1.ob(self.m, self.a)):
            raise FinCatError("forward morphism endpoints inconsistent")
        if d.morphisms[self.backward] != (self.act2.ob(self.m, self.b), self.t):
            raise FinCatError("backward morphism endpoints inconsistent")


def optic_bifunctor(
    act1: MonoidalAction, act2: MonoidalAction, a: str, b: str, s: str, t: str
):
    """The integrand of the optic coend, exposed for oracle comparison."""
    if act1.acting is not act2.acting and act1.acting.underlying.name != act2.acting.underlying.name:
        raise FinCatError("the two actions must share the acting monoidal category")
    mcat = act1.acting.underlying
    c, d = act1.on, act2.on

    def fiber(neg, pos):
        return FinSet(
            f"({neg},{pos})",
            tuple(
                encode_pair(f, g)
                for f in c.hom(s, act1.ob(pos, a))
                for g in d.hom(act2.ob(neg, b), t)
            ),
        )

    def lact(mu, pos, fg):
        f, g = decode_pair(fg)
        return encode_pair(f, d.comp(g, act2.mor(mu, d.identity[b])))

    def ract(neg, mu, fg):
        f, g = decode_pair(fg)
        return encode_pair(c.comp(act1.mor(mu, c.identity[a]), f), g)

    return build_bifunctor(f"optic[{a},{b},{s},{t}]", mcat, fiber, lact, ract)


def optic_coend(
    act1: MonoidalAction, act2: MonoidalAction, a: str, b: str, s: str, t: str
) -> QuotientSet:
    """The coend over the acting category of C(s, m•a) x D(m•b, t)."""
    return coend(optic_bifunctor(act1, act2, a, b, s, t))


def optic_class(q: QuotientSet, o: ExistentialOptic) -> str:
    return q.rep_of(o.m, encode_pair(o.forward, o.backward))


def optic_eq_exact(o1: ExistentialOptic, o2: ExistentialOptic) -> bool:
    """Coend-class equality of two EXACT-regime optics with shared endpoints."""
    if (o1.a, o1.b, o1.s, o1.t) != (o2.a, o2.b, o2.s, o2.t):
        raise FinCatError("optics do not share endpoints")
    q = optic_coend(o1.act1, o1.act2, o1.a, o1.b, o1.s, o1.t)
    return optic_class(q, o1) == optic_class(q, o2)


def identity_optic(act1: MonoidalAction, act2: MonoidalAction, a: str, b: str) -> ExistentialOptic:
    """Residual I; forward and backward are unitor components."""
    return ExistentialOptic(
        act1,
        act2,
        act1.acting.unit,
        inverse_mor(act1.on, act1.unit_iso[a]),
        act2.unit_iso[b],
        a,
        b,
        a,
        b,
    )


def compose_optics(o1: ExistentialOptic, o2: ExistentialOptic) -> ExistentialOptic:
    """Compose ⟨a,b⟩→⟨s,t⟩ with ⟨s,t⟩→⟨s',t'⟩; residual is the tensor n⊗m."""
    if (o1.s, o1.t) != (o2.a, o2.b):
        raise FinCatError("middle endpoints do not match")
    act1, act2 = o1.act1, o1.act2
    mcat = act1.acting
    c, d = act1.on, act2.on
    n, m = o2.m, o1.m
    r = mcat.tob(n, m)
    forward = c.comp(
        inverse_mor(c, act1.mult[(n, m, o1.a)]),
        c.comp(act1.mor(mcat.underlying.identity[n], o1.forward), o2.forward),
    )
    backward = d.comp(
        o2.backward,
        d.comp(act2.mor(mcat.underlying.identity[n], o1.backward), act2.mult[(n, m, o1.b)]),
    )
    return ExistentialOptic(act1, act2, r, forward, backward, o1.a, o1.b, o2.s, o2.t)


# ---------------------------------------------------------------------------
# NORMALFORM regime: lenses and prisms over bounded finite sets.
# ---------------------------------------------------------------------------

LEFT = "L|"
RIGHT = "R|"


def tag_left(x: str) -> str:
    return LEFT + x


def tag_right(x: str) -> str:
    return RIGHT + x


def untag(x: str) -> tuple[str, str]:
    return x[:2], x[2:]


def sum_set(a: FinSet, b: FinSet, label: str | None = None) -> FinSet:
    label = label or f"{a.label}+{b.label}"
    return FinSet(label, tuple(tag_left(x) for x in a) + tuple(tag_right(x) for x in b))


@dataclass
class ConcreteLens:
    """A lens in normal form: total get/put tables."""

    s: FinSet
    t: FinSet
    a: FinSet
    b: FinSet
    get: dict[str, str]
    put: dict[tuple[str, str], str]


@dataclass
class ConcretePrism:
    """A prism in normal form: match lands in t + a (tagged), build in t."""

    s: FinSet
    t: FinSet
    a: FinSet
    b: FinSet
    match: dict[str, str]
    build: dict[str, str]


@dataclass
class SetOptic:
    """A NORMALFORM-regime existential optic over finite sets.

    For kind 'lens' the residual acts by product: forward lands in pairs
    (residual, a) and backward consumes pairs (residual, b).  For kind
    'prism' the action is by coproduct: forward lands in residual + a
    (tagged atoms) and backward consumes residual + b.
    """

    kind: str
    s: FinSet
    t: FinSet
    a: FinSet
    b: FinSet
    residual: FinSet
    forward: dict[str, str]
    backward: dict[str, str]


def lens_abstract(l: ConcreteLens) -> SetOptic:
    """Existential form with residual s: forward is the graph of get."""
    return SetOptic(
        "lens",
        l.s,
        l.t,
        l.a,
        l.b,
        l.s,
        {x: encode_pair(x, l.get[x]) for x in l.s},
        {encode_pair(x, y): l.put[(x, y)] for x in l.s for y in l.b},
    )


def lens_concretize(o: SetOptic) -> ConcreteLens:
    if o.kind != "lens":
        raise FinCatError("not a product-action optic")
    get = {}
    put = {}
    for x in o.s:
        m, a = decode_pair(o.forward[x])
        get[x] = a
        for y in o.b:
            put[(x, y)] = o.backward[encode_pair(m, y)]
    return ConcreteLens(o.s, o.t, o.a, o.b, get, put)


def prism_abstract(p: ConcretePrism) -> SetOptic:
    """Existential form with residual t: forward is match, backward [id, build]."""
    backward = {tag_left(x): x for x in p.t}
    backward.update({tag_right(y): p.build[y] for y in p.b})
    return SetOptic("prism", p.s, p.t, p.a, p.b, p.t, dict(p.match), backward)


def prism_concretize(o: SetOptic) -> ConcretePrism:
    if o.kind != "prism":
        raise FinCatError("not a coproduct-action optic")
    match = {}
    for x in o.s:
        tag, v = untag(o.forward[x])
        if tag == LEFT:
            match[x] = tag_left(o.backward[tag_left(v)])
        else:
            match[x] = tag_right(v)
    build = {y: o.backward[tag_right(y)] for y in o.b}
    return ConcretePrism(o.s, o.t, o.a, o.b, match, build)


def identity_set_optic(kind: str, a: FinSet, b: FinSet) -> SetOptic:
    if kind == "lens":
        unit = finset("1", ["u0"])
        return SetOptic(
            "lens",
            a,
            b,
            a,
            b,
            unit,
            {x: encode_pair("u0", x) for x in a},
            {encode_pair("u0", y): y for y in b},
        )
    if kind == "prism":
        empty = finset("0", [])
        return SetOptic(
            "prism", a, b, a, b, empty,
            {x: tag_right(x) for x in a},
            {tag_right(y): y for y in b},
        )
    raise FinCatError(f"unknown optic kind {kind!r}")


def compose_set_optics(o1: SetOptic, o2: SetOptic) -> SetOptic:
    """Compose ⟨a,b⟩→⟨s,t⟩ with ⟨s,t⟩→⟨s',t'⟩ existentially."""
    if o1.kind != o2.kind:
        raise FinCatError("cannot mix lens and prism composition")
    if (o1.s.elements, o1.t.elements) != (o2.a.elements, o2.b.elements):
        raise FinCatError("middle endpoints do not match")
    if o1.kind == "lens":
        residual = FinSet(
            f"{o2.residual.label}*{o1.residual.label}",
            tuple(encode_pair(n, m) for n in o2.residual for m in o1.residual),
        )
        forward = {}
        for x in o2.s:
            n, u = decode_pair(o2.forward[x])
            m, v = decode_pair(o1.forward[u])
            forward[x] = encode_pair(encode_pair(n, m), v)
        backward = {}
        for n in o2.residual:
            for m in o1.residual:
                for y in o1.b:
                    backward[encode_pair(encode_pair(n, m), y)] = o2.backward[
                        encode_pair(n, o1.backward[encode_pair(m, y)])
                    ]
        return SetOptic("lens", o2.s, o2.t, o1.a, o1.b, residual, forward, backward)

    residual = sum_set(o2.residual, o1.residual)
    forward = {}
    for x in o2.s:
        tag, v = untag(o2.forward[x])
        if tag == LEFT:
            forward[x] = tag_left(tag_left(v))
        else:
            tag1, w = untag(o1.forward[v])
            if tag1 == LEFT:
                forward[x] = tag_left(tag_right(w))
            else:
                forward[x] = tag_right(w)
    backward = {}
    for n in o2.residual:
        backward[tag_left(tag_left(n))] = o2.backward[tag_left(n)]
    for m in o1.residual:
        backward[tag_left(tag_right(m))] = o2.backward[
            tag_right(o1.backward[tag_left(m)])
        ]
    for y in o1.b:
        backward[tag_right(y)] = o2.backward[tag_right(o1.backward[tag_right(y)])]
    return SetOptic("prism", o2.s, o2.t, o1.a, o1.b, residual, forward, backward)


def set_optic_eq(o1: SetOptic, o2: SetOptic) -> bool:
    """NORMALFORM equality: identical concretized tables."""
    if o1.kind != o2.kind:
        return False
    if o1.kind == "lens":
        l1, l2 = lens_concretize(o1), lens_concretize(o2)
        return l1.get == l2.get and l1.put == l2.put
    p1, p2 = prism_concretize(o1), prism_concretize(o2)
    return p1.match == p2.match and p1.build == p2.build


def enumerate_lenses(s: FinSet, t: FinSet, a: FinSet, b: FinSet) -> list[ConcreteLens]:
    """All total (get, put) tables, in canonical order."""
    gets = [
        dict(zip(s.elements, vs)) for vs in itertools.product(a.elements, repeat=len(s))
    ]
    keys = [(x, y) for x in s for y in b]
    puts = [
        dict(zip(keys, vs)) for vs in itertools.product(t.elements, repeat=len(keys))
    ]
    return [ConcreteLens(s, t, a, b, g, p) for g in gets for p in puts]
