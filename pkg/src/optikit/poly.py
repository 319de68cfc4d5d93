"""Polynomial functors over finite index data, their lenses and ommatidia,
and compound optics over profunctor residuals.

A polynomial is a coproduct of representables: for each index i there is a
set of positions and a set of directions.  Maps between polynomials are
stored as explicit PolyLens tables; the coend (existential) forms are the
Ommatidium (doubly indexed residual family) and, over general finite
categories, the CompoundOptic with a profunctor residual.  Equality of
ommatidia and of discrete compound optics is by definition equality of
polylens normal forms; for non-discrete residual categories only witness
checking is provided.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .fincat import (
    CoPresheaf,
    FinCatError,
    FinCategory,
    FinSet,
    NatTransformation,
    all_functions,
    decode_pair,
    discrete_category,
    encode_pair,
    finset,
)
from .prof import (
    FinProfunctor,
    ProfNat,
    action_on_copresheaf_nat,
    action_provenance,
    action_composition_check,
    build_profunctor,
    hom_profunctor,
    is_prof_natural,
    prof_action,
    prof_compose,
    profnat_on_action,
    unit_check,
)


def same_copresheaf(a: CoPresheaf, b: CoPresheaf) -> bool:
    """Structural equality: same base shape, fibers and actions."""
    from .fincat import same_category

    return (
        same_category(a.base, b.base)
        and {o: a.at(o).elements for o in a.base.objects}
        == {o: b.at(o).elements for o in b.base.objects}
        and a.action == b.action
    )


def same_poly(p: PolyFunctor, q: PolyFunctor) -> bool:
    """Structural equality of polynomial data, ignoring names."""
    return (
        p.index.elements == q.index.elements
        and all(p.positions[n].elements == q.positions[n].elements for n in p.index)
        and all(p.directions[n].elements == q.directions[n].elements for n in p.index)
    )


def encode_fun(table: dict[str, str]) -> str:
    return "{" + ";".join(f"{k}>{v}" for k, v in sorted(table.items())) + "}"


def decode_fun(atom: str) -> dict[str, str]:
    if not (atom.startswith("{") and atom.endswith("}")):
        raise FinCatError(f"not a function atom: {atom!r}")
    body = atom[1:-1]
    if not body:
        return {}
    out = {}
    for entry in body.split(";"):
        k, _, v = entry.partition(">")
        out[k] = v
    return out


def fun_space(a: FinSet, b: FinSet, label: str | None = None) -> FinSet:
    """Set(a, b) as a finite set of encoded function tables."""
    label = label or f"[{a.label}->{b.label}]"
    return FinSet(label, tuple(encode_fun(t) for t in all_functions(a, b)))


@dataclass
class PolyFunctor:
    """P(y) = sum over the index of  positions x Set(directions, y)."""

    name: str
    index: FinSet
    positions: dict[str, FinSet]
    directions: dict[str, FinSet]

    def __post_init__(self):
        for n in self.index:
            if n not in self.positions or n not in self.directions:
                raise FinCatError(f"polynomial {self.name}: index {n} lacks data")


def poly(name: str, index, positions, directions) -> PolyFunctor:
    idx = finset(f"{name}.idx", index)
    return PolyFunctor(
        name,
        idx,
        {n: finset(f"{name}.s[{n}]", positions[n]) for n in idx},
        {n: finset(f"{name}.t[{n}]", directions[n]) for n in idx},
    )


def poly_y(name: str = "y", power: int = 1) -> PolyFunctor:
    """The representable y^power: one index, one position, `power` directions."""
    return poly(name, ["i0"], {"i0": ["p0"]}, {"i0": [f"d{j}" for j in range(power)]})


def eval_atom(n: str, x: str, dmap: dict[str, str]) -> str:
    return encode_pair(n, encode_pair(x, encode_fun(dmap)))


def split_eval_atom(atom: str) -> tuple[str, str, dict[str, str]]:
    n, rest = decode_pair(atom)
    x, fun = decode_pair(rest)
    return n, x, decode_fun(fun)


def eval_poly(p: PolyFunctor, y: FinSet) -> FinSet:
    """Elements are triples (index, position, direction map into y)."""
    atoms = []
    for n in p.index:
        for x in p.positions[n]:
            for d in all_functions(p.directions[n], y):
                atoms.append(eval_atom(n, x, d))
    return FinSet(f"{p.name}({y.label})", tuple(atoms))


def eval_poly_mor(p: PolyFunctor, f: dict[str, str], y: FinSet, y2: FinSet) -> dict[str, str]:
    """P(f): post-compose every direction map with f: y -> y2."""
    out = {}
    for atom in eval_poly(p, y):
        n, x, d = split_eval_atom(atom)
        out[atom] = eval_atom(n, x, {k: f[v] for k, v in d.items()})
    return out


@dataclass
class PolyLens:
    """The concrete normal form of a map of polynomials.

    For each source index i and position x, a choice of target index j,
    target position, and a direction map from the target's directions at j
    back to the source's directions at i.
    """

    source: PolyFunctor
    target: PolyFunctor
    table: dict[str, dict[str, tuple[str, str, dict[str, str]]]]

    def entry(self, i: str, x: str) -> tuple[str, str, dict[str, str]]:
        return self.table[i][x]

    def key(self) -> tuple:
        """A canonical hashable form, used for equality and deduplication."""
        return tuple(
            (i, x, j, a, encode_fun(d))
            for i in self.source.index
            for x in self.source.positions[i]
            for j, a, d in [self.table[i][x]]
        )


def polylens_eq(l1: PolyLens, l2: PolyLens) -> bool:
    return l1.key() == l2.key()


def enumerate_polylenses(p: PolyFunctor, q: PolyFunctor) -> list[PolyLens]:
    """All lens tables from the product-of-coproducts formula, canonical order."""
    per_position: dict[tuple[str, str], list[tuple[str, str, dict[str, str]]]] = {}
    for i in p.index:
        for x in p.positions[i]:
            opts = []
            for j in q.index:
                for a in q.positions[j]:
                    for d in all_functions(q.directions[j], p.directions[i]):
                        opts.append((j, a, d))
            per_position[(i, x)] = opts
    keys = list(per_position)
    lenses = []
    for combo in itertools.product(*(per_position[k] for k in keys)):
        table: dict[str, dict[str, tuple]] = {i: {} for i in p.index}
        for (i, x), choice in zip(keys, combo):
            table[i][x] = choice
        lenses.append(PolyLens(p, q, table))
    return lenses


def identity_polylens(p: PolyFunctor) -> PolyLens:
    return PolyLens(
        p,
        p,
        {
            i: {x: (i, x, {d: d for d in p.directions[i]}) for x in p.positions[i]}
            for i in p.index
        },
    )


def polylens_to_nat(l: PolyLens, y: FinSet) -> dict[str, str]:
    """The component P(y) -> Q(y) of the induced natural transformation."""
    out = {}
    for atom in eval_poly(l.source, y):
        i, x, d = split_eval_atom(atom)
        j, a, delta = l.entry(i, x)
        out[atom] = eval_atom(j, a, {beta: d[delta[beta]] for beta in delta})
    return out


def compose_polylens(l1: PolyLens, l2: PolyLens) -> PolyLens:
    """Composite lens table; agrees with composing induced transformations."""
    if not same_poly(l1.target, l2.source):
        raise FinCatError("middle polynomial does not match")
    table: dict[str, dict[str, tuple]] = {}
    for i in l1.source.index:
        table[i] = {}
        for x in l1.source.positions[i]:
            j, a, delta = l1.entry(i, x)
            j2, a2, delta2 = l2.entry(j, a)
            table[i][x] = (j2, a2, {beta: delta[delta2[beta]] for beta in delta2})
    return PolyLens(l1.source, l2.target, table)


def canonical_sets(y_max: int) -> list[FinSet]:
    return [FinSet(f"Y{m}", tuple(str(i) for i in range(m))) for m in range(y_max + 1)]


def nat_oracle(p: PolyFunctor, q: PolyFunctor, y_max: int):
    """Brute-force enumeration of natural transformations P => Q.

    Enumerates all component families on the full subcategory of finite sets
    of size <= y_max and filters by naturality against every function.
    Components are determined by their values at sets no larger than the
    largest direction set of p, so the bound must exceed that size.
    """
    max_dir = max((len(p.directions[n]) for n in p.index), default=0)
    if y_max < max_dir + 1:
        raise FinCatError(
            f"oracle bound {y_max} too small: need at least {max_dir + 1}"
        )
    sets = canonical_sets(y_max)
    evals_p = [eval_poly(p, y) for y in sets]
    evals_q = [eval_poly(q, y) for y in sets]

    # candidates per object: backtracking over component tables, pruning any
    # partial assignment that already violates naturality at an endofunction
    candidates: list[list[dict[str, str]]] = []
    for m, y in enumerate(sets):
        endos = all_functions(y, y)
        pf_tabs = [eval_poly_mor(p, f, y, y) for f in endos]
        qf_tabs = [eval_poly_mor(q, f, y, y) for f in endos]
        elems = list(evals_p[m])
        preimages: list[dict[str, list[str]]] = []
        for pf in pf_tabs:
            inv: dict[str, list[str]] = {}
            for e, img in pf.items():
                inv.setdefault(img, []).append(e)
            preimages.append(inv)
        kept: list[dict[str, str]] = []
        alpha: dict[str, str] = {}

        def consistent(e: str) -> bool:
            v = alpha[e]
            for k in range(len(endos)):
                img = pf_tabs[k][e]
                if img in alpha and alpha[img] != qf_tabs[k][v]:
                    return False
                for e2 in preimages[k].get(e, ()):
                    if e2 in alpha and v != qf_tabs[k][alpha[e2]]:
                        return False
            return True

        def dfs(i: int):
            if i == len(elems):
                kept.append(dict(alpha))
                return
            e = elems[i]
            for v in evals_q[m]:
                alpha[e] = v
                if consistent(e):
                    dfs(i + 1)
                del alpha[e]

        if len(evals_q[m]) == 0 and len(elems) > 0:
            kept = []
        else:
            dfs(0)
        candidates.append(kept)

    # combine across objects, filtering by cross-functions both ways
    families: list[list[dict[str, str]]] = [[]]
    for m in range(len(sets)):
        nxt = []
        for fam in families:
            for alpha in candidates[m]:
                ok = True
                for m2 in range(m):
                    for f in all_functions(sets[m2], sets[m]):
                        pf = eval_poly_mor(p, f, sets[m2], sets[m])
                        qf = eval_poly_mor(q, f, sets[m2], sets[m])
                        if any(alpha[pf[e]] != qf[fam[m2][e]] for e in evals_p[m2]):
                            ok = False
                            break
                    if not ok:
                        break
                    for f in all_functions(sets[m], sets[m2]):
                        pf = eval_poly_mor(p, f, sets[m], sets[m2])
                        qf = eval_poly_mor(q, f, sets[m], sets[m2])
                        if any(fam[m2][pf[e]] != qf[alpha[e]] for e in evals_p[m]):
                            ok = False
                            break
                    if not ok:
                        break
                if ok:
                    nxt.append(fam + [alpha])
        families = nxt
    return len(families), families


@dataclass
class Ommatidium:
    """The existential form of a polynomial optic.

    The residual family is indexed by (target index j, source index i);
    forward picks, per source position, a target index, position and
    residual element; backward consumes a target direction with a residual
    element.  Equality is by polylens normal form.
    """

    source: PolyFunctor
    target: PolyFunctor
    residual: dict[tuple[str, str], FinSet]  # (j, i) -> c_{j,i}
    forward: dict[str, dict[str, tuple[str, str, str]]]  # i -> x -> (j, a, c-elem)
    backward: dict[str, dict[tuple[str, str, str], str]]  # i -> (j, beta, c-elem) -> t_i


def ommatidium_to_polylens(o: Ommatidium) -> PolyLens:
    """The coend-class normal form."""
    table: dict[str, dict[str, tuple]] = {}
    for i in o.source.index:
        table[i] = {}
        for x in o.source.positions[i]:
            j, a, gamma = o.forward[i][x]
            delta = {
                beta: o.backward[i][(j, beta, gamma)] for beta in o.target.directions[j]
            }
            table[i][x] = (j, a, delta)
    return PolyLens(o.source, o.target, table)


def polylens_to_ommatidium(l: PolyLens) -> Ommatidium:
    """The canonical ommatidium: residual c_{j,i} = Set(b_j, t_i)."""
    p, q = l.source, l.target
    residual = {
        (j, i): fun_space(q.directions[j], p.directions[i]) for j in q.index for i in p.index
    }
    forward: dict[str, dict[str, tuple[str, str, str]]] = {}
    backward: dict[str, dict[tuple[str, str, str], str]] = {}
    for i in p.index:
        forward[i] = {}
        for x in p.positions[i]:
            j, a, delta = l.entry(i, x)
            forward[i][x] = (j, a, encode_fun(delta))
        backward[i] = {}
        for j in q.index:
            for gamma in residual[(j, i)]:
                table = decode_fun(gamma)
                for beta in q.directions[j]:
                    backward[i][(j, beta, gamma)] = table[beta]
    return Ommatidium(p, q, residual, forward, backward)


def ommatidium_eq(o1: Ommatidium, o2: Ommatidium) -> bool:
    return polylens_eq(ommatidium_to_polylens(o1), ommatidium_to_polylens(o2))


def transport_pair(
    source: PolyFunctor,
    target: PolyFunctor,
    residual_from: dict[tuple[str, str], FinSet],
    residual_to: dict[tuple[str, str], FinSet],
    h: dict[tuple[str, str], dict[str, str]],
    forward: dict[str, dict[str, tuple[str, str, str]]],
    backward_to: dict[str, dict[tuple[str, str, str], str]],
) -> tuple[Ommatidium, Ommatidium]:
    """One zig-zag step: forward into the small residual, backward on the big one.

    Given h: residual_from -> residual_to, a forward landing in residual_from
    and a backward defined on residual_to, the two ommatidia obtained by
    pulling backward along h versus pushing forward along h are coend-equal.
    """
    backward_from = {
        i: {
            (j, beta, gamma): backward_to[i][(j, beta, h[(j, i)][gamma])]
            for j in target.index
            for gamma in residual_from[(j, i)]
            for beta in target.directions[j]
        }
        for i in source.index
    }
    o_small = Ommatidium(source, target, residual_from, forward, backward_from)
    forward_pushed = {
        i: {
            x: (j, a, h[(j, i)][gamma])
            for x, (j, a, gamma) in forward[i].items()
        }
        for i in source.index
    }
    o_big = Ommatidium(source, target, residual_to, forward_pushed, backward_to)
    return o_small, o_big


# ---------------------------------------------------------------------------
# Compound optics: profunctor residuals over arbitrary finite categories.
# ---------------------------------------------------------------------------


@dataclass
class CompoundOptic:
    """An optic whose residual is a profunctor acting on co-presheaves.

    forward: s => (p • a) and backward: (p • b) => t, both natural; the
    action co-presheaves carry coend provenance from prof_action.
    """

    p: FinProfunctor
    a: CoPresheaf
    b: CoPresheaf
    s: CoPresheaf
    t: CoPresheaf
    pa: CoPresheaf
    pb: CoPresheaf
    forward: NatTransformation  # s => pa
    backward: NatTransformation  # pb => t


def compound_optic(
    p: FinProfunctor,
    a: CoPresheaf,
    b: CoPresheaf,
    s: CoPresheaf,
    t: CoPresheaf,
    forward_components: dict[str, dict[str, str]],
    backward_components: dict[str, dict[str, str]],
) -> CompoundOptic:
    from .fincat import is_natural

    pa = prof_action(p, a)
    pb = prof_action(p, b)
    fwd = NatTransformation(s, pa, forward_components)
    bwd = NatTransformation(pb, t, backward_components)
    if not is_natural(fwd):
        raise FinCatError("forward part is not natural")
    if not is_natural(bwd):
        raise FinCatError("backward part is not natural")
    return CompoundOptic(p, a, b, s, t, pa, pb, fwd, bwd)


def identity_compound(a: CoPresheaf, b: CoPresheaf) -> CompoundOptic:
    """Residual hom; components are the co-Yoneda witnesses."""
    hom = hom_profunctor(a.base)
    uw = unit_check(hom, a)
    uw_b = unit_check(hom, b)
    assert uw.action_components is not None and uw_b.action_components is not None
    forward = {k: dict(uw.action_components[k].backward) for k in a.base.objects}
    backward = {k: dict(uw_b.action_components[k].forward) for k in b.base.objects}
    return compound_optic(hom, a, b, a, b, forward, backward)


def compound_compose(o1: CompoundOptic, o2: CompoundOptic) -> CompoundOptic:
    """Residual is the composite profunctor; coherence via the action witnesses."""
    if not same_copresheaf(o2.a, o1.s) or not same_copresheaf(o2.b, o1.t):
        raise FinCatError("middle co-presheaves do not match")
    p, q = o1.p, o2.p
    r = prof_compose(p, q)
    w_a = action_composition_check(p, q, o1.a)  # q•(p•a) -> (p⋄q)•a
    w_b = action_composition_check(p, q, o1.b)

    _, _, q_fwd1 = action_on_copresheaf_nat(q, o1.forward)  # q•s => q•(p•a)
    _, _, q_bwd1 = action_on_copresheaf_nat(q, o1.backward)  # q•(p•b) => q•t

    forward = {}
    backward = {}
    for l in q.target.objects:
        forward[l] = {
            v: w_a.components[l].forward[q_fwd1.components[l][o2.forward.components[l][v]]]
            for v in o2.s.at(l)
        }
        backward[l] = {
            u: o2.backward.components[l][q_bwd1.components[l][w_b.components[l].backward[u]]]
            for u in w_b.target.at(l)
        }
    return compound_optic(r, o1.a, o1.b, o2.s, o2.t, forward, backward)


def coend_witness_check(o1: CompoundOptic, o2: CompoundOptic, h: ProfNat) -> bool:
    """Check one zig-zag step: transporting o1 along h gives o2 exactly.

    This verifies witnesses; it does not decide compound-optic equality.
    """
    if (o1.a.name, o1.b.name, o1.s.name, o1.t.name) != (
        o2.a.name,
        o2.b.name,
        o2.s.name,
        o2.t.name,
    ):
        raise FinCatError("compound optics do not share endpoints")
    if not is_prof_natural(h):
        return False
    _, _, h_a = profnat_on_action(h, o1.a)  # p•a => p'•a
    _, _, h_b = profnat_on_action(h, o1.b)
    for k in o1.s.base.objects:
        pushed = {
            v: h_a.components[k][o1.forward.components[k][v]] for v in o1.s.at(k)
        }
        if pushed != o2.forward.components[k]:
            return False
        pulled = {
            u: o2.backward.components[k][h_b.components[k][u]] for u in h_b.source.at(k)
        }
        if pulled != o1.backward.components[k]:
            return False
    return True


# ---------------------------------------------------------------------------
# Discrete correspondence: polylenses as compound optics over discrete bases.
# ---------------------------------------------------------------------------


def discrete_copresheaf(cat: FinCategory, fibers: dict[str, FinSet], name: str) -> CoPresheaf:
    return CoPresheaf(
        name,
        cat,
        dict(fibers),
        {cat.identity[o]: {x: x for x in fibers[o]} for o in cat.objects},
    )


def polylens_categories(p: PolyFunctor, q: PolyFunctor):
    """Discrete base categories and co-presheaves for the compound reading."""
    n_cat = discrete_category(f"N[{p.name}]", p.index.elements)
    k_cat = discrete_category(f"K[{q.name}]", q.index.elements)
    s = discrete_copresheaf(n_cat, {i: p.positions[i] for i in p.index}, f"s[{p.name}]")
    t = discrete_copresheaf(n_cat, {i: p.directions[i] for i in p.index}, f"t[{p.name}]")
    a = discrete_copresheaf(k_cat, {j: q.positions[j] for j in q.index}, f"a[{q.name}]")
    b = discrete_copresheaf(k_cat, {j: q.directions[j] for j in q.index}, f"b[{q.name}]")
    return n_cat, k_cat, s, t, a, b


def ommatidium_to_compound(o: Ommatidium) -> CompoundOptic:
    """Read an ommatidium as a compound optic over discrete bases."""
    n_cat, k_cat, s, t, a, b = polylens_categories(o.source, o.target)
    prof = build_profunctor(
        f"c[{o.source.name},{o.target.name}]",
        k_cat,
        n_cat,
        lambda j, i: o.residual[(j, i)],
        lambda f, i, x: x,
        lambda j, g, x: x,
    )
    pa = prof_action(prof, a)
    pb = prof_action(prof, b)
    pa_prov = action_provenance(pa)
    pb_prov = action_provenance(pb)
    forward = {
        i: {
            x: pa_prov[i].rep_of(j, encode_pair(av, gamma))
            for x, (j, av, gamma) in o.forward[i].items()
        }
        for i in o.source.index
    }
    backward = {}
    for i in o.source.index:
        backward[i] = {}
        for rep, members in pb_prov[i].classes.items():
            (j, bx) = members[0]  # discrete base: classes are singletons
            beta, gamma = decode_pair(bx)
            backward[i][rep] = o.backward[i][(j, beta, gamma)]
    return compound_optic(prof, a, b, s, t, forward, backward)


def compound_to_polylens(o: CompoundOptic) -> PolyLens:
    """Normal form of a compound optic over discrete bases."""
    n_cat, k_cat = o.s.base, o.a.base
    if set(n_cat.mor_ids()) != set(n_cat.identity.values()) or set(
        k_cat.mor_ids()
    ) != set(k_cat.identity.values()):
        raise FinCatError("normal form requires discrete base categories")
    p_poly = PolyFunctor(
        "src",
        finset("src.idx", n_cat.objects),
        {i: o.s.at(i) for i in n_cat.objects},
        {i: o.t.at(i) for i in n_cat.objects},
    )
    q_poly = PolyFunctor(
        "tgt",
        finset("tgt.idx", k_cat.objects),
        {j: o.a.at(j) for j in k_cat.objects},
        {j: o.b.at(j) for j in k_cat.objects},
    )
    pa_prov = action_provenance(o.pa)
    pb_prov = action_provenance(o.pb)
    table: dict[str, dict[str, tuple]] = {}
    for i in n_cat.objects:
        table[i] = {}
        for x in o.s.at(i):
            rep = o.forward.components[i][x]
            ((j, av_gamma),) = pa_prov[i].members(rep)
            av, gamma = decode_pair(av_gamma)
            delta = {
                beta: o.backward.components[i][
                    pb_prov[i].rep_of(j, encode_pair(beta, gamma))
                ]
                for beta in o.b.at(j)
            }
            table[i][x] = (j, av, delta)
    return PolyLens(p_poly, q_poly, table)
