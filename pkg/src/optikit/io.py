"""JSON serialization for the kernel's table-based values.

Every format is an explicit table; loaders reject unknown fields and report
the offending location as a path into the document, so the CLI can
distinguish malformed input (exit 2) from failed laws (exit 1).
"""

from __future__ import annotations

import json
from pathlib import Path

from .fincat import (
    CoPresheaf,
    FinCatError,
    FinCategory,
    FinFunctor,
    FinSet,
    check_atom,
    finset,
)
from .optics import ConcreteLens, ConcretePrism, tag_left, tag_right
from .poly import Ommatidium, PolyFunctor, PolyLens, poly
from .prof import FinProfunctor


class FormatError(Exception):
    """Malformed input data; carries a path into the offending document."""

    def __init__(self, msg: str, at: str = "$"):
        super().__init__(f"{at}: {msg}")
        self.at = at


def _expect_keys(obj, required, at, optional=()):
    if not isinstance(obj, dict):
        raise FormatError(f"expected an object, got {type(obj).__name__}", at)
    unknown = sorted(set(obj) - set(required) - set(optional))
    if unknown:
        raise FormatError(f"unknown fields {unknown}", at)
    missing = sorted(set(required) - set(obj))
    if missing:
        raise FormatError(f"missing fields {missing}", at)


def _atom(x, at) -> str:
    if not isinstance(x, str):
        raise FormatError(f"expected a string atom, got {type(x).__name__}", at)
    try:
        return check_atom(x)
    except FinCatError as e:
        raise FormatError(str(e), at) from None


def _atom_list(xs, at) -> list[str]:
    if not isinstance(xs, list):
        raise FormatError(f"expected a list, got {type(xs).__name__}", at)
    return [_atom(x, f"{at}[{i}]") for i, x in enumerate(xs)]


def _str_table(obj, at) -> dict[str, str]:
    if not isinstance(obj, dict):
        raise FormatError(f"expected an object, got {type(obj).__name__}", at)
    out = {}
    for k, v in obj.items():
        if not isinstance(v, str):
            raise FormatError(f"expected a string value", f"{at}.{k}")
        out[k] = v
    return out


def load_json(path: str | Path):
    """Parse a JSON file; JSONDecodeError propagates with position info."""
    return json.loads(Path(path).read_text())


# ---------------------------------------------------------------------------
# Categories
# ---------------------------------------------------------------------------


def category_from_json(doc, name: str = "cat", at: str = "$") -> FinCategory:
    _expect_keys(doc, ("objects", "morphisms", "identities", "compose"), at)
    objects = _atom_list(doc["objects"], f"{at}.objects")
    morphisms = {}
    if not isinstance(doc["morphisms"], list):
        raise FormatError("expected a list", f"{at}.morphisms")
    for i, m in enumerate(doc["morphisms"]):
        here = f"{at}.morphisms[{i}]"
        _expect_keys(m, ("id", "src", "tgt"), here)
        mid = _atom(m["id"], f"{here}.id")
        if mid in morphisms:
            raise FormatError(f"duplicate morphism id {mid!r}", here)
        morphisms[mid] = (_atom(m["src"], f"{here}.src"), _atom(m["tgt"], f"{here}.tgt"))
    identity = _str_table(doc["identities"], f"{at}.identities")
    if not isinstance(doc["compose"], list):
        raise FormatError("expected a list", f"{at}.compose")
    compose = {}
    for i, entry in enumerate(doc["compose"]):
        here = f"{at}.compose[{i}]"
        if not (isinstance(entry, list) and len(entry) == 3):
            raise FormatError("expected a [g, f, gf] triple", here)
        g, f, gf = (_atom(x, f"{here}[{j}]") for j, x in enumerate(entry))
        compose[(g, f)] = gf
    return FinCategory(name, tuple(objects), morphisms, identity, compose)


def category_to_json(c: FinCategory) -> dict:
    return {
        "objects": list(c.objects),
        "morphisms": [
            {"id": m, "src": s, "tgt": t} for m, (s, t) in sorted(c.morphisms.items())
        ],
        "identities": {o: c.identity[o] for o in c.objects},
        "compose": [[g, f, gf] for (g, f), gf in sorted(c.compose.items())],
    }


# ---------------------------------------------------------------------------
# Functors and co-presheaves
# ---------------------------------------------------------------------------


def functor_from_json(doc, name: str = "functor", at: str = "$") -> FinFunctor:
    _expect_keys(doc, ("source", "target", "objects", "morphisms"), at)
    source = category_from_json(doc["source"], f"{name}.src", f"{at}.source")
    target = category_from_json(doc["target"], f"{name}.tgt", f"{at}.target")
    obj_map = _str_table(doc["objects"], f"{at}.objects")
    mor_map = _str_table(doc["morphisms"], f"{at}.morphisms")
    return FinFunctor(name, source, target, obj_map, mor_map)


def functor_to_json(p: FinFunctor) -> dict:
    return {
        "source": category_to_json(p.source),
        "target": category_to_json(p.target),
        "objects": dict(sorted(p.obj_map.items())),
        "morphisms": dict(sorted(p.mor_map.items())),
    }


def copresheaf_from_json(doc, name: str = "copresheaf", at: str = "$") -> CoPresheaf:
    _expect_keys(doc, ("base", "fibers", "actions"), at)
    base = category_from_json(doc["base"], f"{name}.base", f"{at}.base")
    if not isinstance(doc["fibers"], dict):
        raise FormatError("expected an object", f"{at}.fibers")
    fiber = {
        o: finset(f"{name}({o})", _atom_list(xs, f"{at}.fibers.{o}"))
        for o, xs in doc["fibers"].items()
    }
    if not isinstance(doc["actions"], dict):
        raise FormatError("expected an object", f"{at}.actions")
    action = {m: _str_table(t, f"{at}.actions.{m}") for m, t in doc["actions"].items()}
    return CoPresheaf(name, base, fiber, action)


def copresheaf_to_json(f: CoPresheaf) -> dict:
    return {
        "base": category_to_json(f.base),
        "fibers": {o: list(f.at(o).elements) for o in f.base.objects},
        "actions": {m: dict(sorted(f.action[m].items())) for m in f.base.mor_ids()},
    }


# ---------------------------------------------------------------------------
# Profunctors and bifunctors
# ---------------------------------------------------------------------------


def profunctor_from_json(doc, name: str = "prof", at: str = "$") -> FinProfunctor:
    _expect_keys(doc, ("source", "target", "fibers", "left", "right"), at)
    source = category_from_json(doc["source"], f"{name}.src", f"{at}.source")
    target = category_from_json(doc["target"], f"{name}.tgt", f"{at}.target")
    fiber = {}
    for n, row in _nested(doc["fibers"], f"{at}.fibers").items():
        for k, xs in row.items():
            fiber[(n, k)] = finset(
                f"{name}({n},{k})", _atom_list(xs, f"{at}.fibers.{n}.{k}")
            )
    lmap = {}
    for f, row in _nested(doc["left"], f"{at}.left").items():
        for k, t in row.items():
            lmap[(f, k)] = _str_table(t, f"{at}.left.{f}.{k}")
    rmap = {}
    for n, row in _nested(doc["right"], f"{at}.right").items():
        for g, t in row.items():
            rmap[(n, g)] = _str_table(t, f"{at}.right.{n}.{g}")
    return FinProfunctor(name, source, target, fiber, lmap, rmap)


def profunctor_to_json(p: FinProfunctor) -> dict:
    return {
        "source": category_to_json(p.source),
        "target": category_to_json(p.target),
        "fibers": {
            n: {k: list(p.at(n, k).elements) for k in p.target.objects}
            for n in p.source.objects
        },
        "left": {
            f: {k: dict(sorted(p.lmap[(f, k)].items())) for k in p.target.objects}
            for f in p.source.mor_ids()
        },
        "right": {
            n: {g: dict(sorted(p.rmap[(n, g)].items())) for g in p.target.mor_ids()}
            for n in p.source.objects
        },
    }


def _nested(obj, at) -> dict:
    if not isinstance(obj, dict):
        raise FormatError("expected an object", at)
    for k, v in obj.items():
        if not isinstance(v, dict):
            raise FormatError("expected an object", f"{at}.{k}")
    return obj


def bifunctor_from_json(doc, name: str = "bifunctor", at: str = "$"):
    """A Set-valued bifunctor over one base, for the `coend` subcommand."""
    from .coend import FinBifunctor

    _expect_keys(doc, ("base", "fibers", "left", "right"), at)
    base = category_from_json(doc["base"], f"{name}.base", f"{at}.base")
    fiber = {}
    for neg, row in _nested(doc["fibers"], f"{at}.fibers").items():
        for pos, xs in row.items():
            fiber[(neg, pos)] = finset(
                f"{name}({neg},{pos})", _atom_list(xs, f"{at}.fibers.{neg}.{pos}")
            )
    lmap = {}
    for f, row in _nested(doc["left"], f"{at}.left").items():
        for pos, t in row.items():
            lmap[(f, pos)] = _str_table(t, f"{at}.left.{f}.{pos}")
    rmap = {}
    for neg, row in _nested(doc["right"], f"{at}.right").items():
        for f, t in row.items():
            rmap[(neg, f)] = _str_table(t, f"{at}.right.{neg}.{f}")
    return FinBifunctor(name, base, fiber, lmap, rmap)


def bifunctor_to_json(d) -> dict:
    base = d.base
    return {
        "base": category_to_json(base),
        "fibers": {
            neg: {pos: list(d.at(neg, pos).elements) for pos in base.objects}
            for neg in base.objects
        },
        "left": {
            f: {pos: dict(sorted(d.lmap[(f, pos)].items())) for pos in base.objects}
            for f in base.mor_ids()
        },
        "right": {
            neg: {f: dict(sorted(d.rmap[(neg, f)].items())) for f in base.mor_ids()}
            for neg in base.objects
        },
    }


# ---------------------------------------------------------------------------
# Polynomials, polylenses, ommatidia
# ---------------------------------------------------------------------------


def poly_from_json(doc, name: str = "poly", at: str = "$") -> PolyFunctor:
    _expect_keys(doc, ("index", "positions", "directions"), at)
    index = _atom_list(doc["index"], f"{at}.index")
    for key in ("positions", "directions"):
        if not isinstance(doc[key], dict):
            raise FormatError("expected an object", f"{at}.{key}")
    positions = {
        n: _atom_list(xs, f"{at}.positions.{n}") for n, xs in doc["positions"].items()
    }
    directions = {
        n: _atom_list(xs, f"{at}.directions.{n}") for n, xs in doc["directions"].items()
    }
    try:
        return poly(name, index, positions, directions)
    except FinCatError as e:
        raise FormatError(str(e), at) from None


def poly_to_json(p: PolyFunctor) -> dict:
    return {
        "index": list(p.index.elements),
        "positions": {n: list(p.positions[n].elements) for n in p.index},
        "directions": {n: list(p.directions[n].elements) for n in p.index},
    }


def _lens_entry_from_json(doc, at) -> tuple[str, str, dict[str, str]]:
    _expect_keys(doc, ("index", "position", "directions"), at)
    return (
        _atom(doc["index"], f"{at}.index"),
        _atom(doc["position"], f"{at}.position"),
        _str_table(doc["directions"], f"{at}.directions"),
    )


def polylens_from_json(doc, name: str = "polylens", at: str = "$") -> PolyLens:
    _expect_keys(doc, ("source", "target", "table"), at)
    source = poly_from_json(doc["source"], f"{name}.src", f"{at}.source")
    target = poly_from_json(doc["target"], f"{name}.tgt", f"{at}.target")
    table: dict[str, dict[str, tuple]] = {}
    for i, row in _nested(doc["table"], f"{at}.table").items():
        table[i] = {
            x: _lens_entry_from_json(entry, f"{at}.table.{i}.{x}")
            for x, entry in row.items()
        }
    return PolyLens(source, target, table)


def polylens_to_json(l: PolyLens) -> dict:
    return {
        "source": poly_to_json(l.source),
        "target": poly_to_json(l.target),
        "table": {
            i: {
                x: {"index": j, "position": a, "directions": dict(sorted(d.items()))}
                for x, (j, a, d) in sorted(l.table[i].items())
            }
            for i in l.source.index
        },
    }


def ommatidium_from_json(doc, name: str = "ommatidium", at: str = "$") -> Ommatidium:
    _expect_keys(doc, ("source", "target", "residual", "forward", "backward"), at)
    source = poly_from_json(doc["source"], f"{name}.src", f"{at}.source")
    target = poly_from_json(doc["target"], f"{name}.tgt", f"{at}.target")
    residual = {}
    for j, row in _nested(doc["residual"], f"{at}.residual").items():
        for i, xs in row.items():
            residual[(j, i)] = finset(
                f"c[{j},{i}]", _atom_list(xs, f"{at}.residual.{j}.{i}")
            )
    forward: dict[str, dict[str, tuple[str, str, str]]] = {}
    for i, row in _nested(doc["forward"], f"{at}.forward").items():
        forward[i] = {}
        for x, entry in row.items():
            here = f"{at}.forward.{i}.{x}"
            _expect_keys(entry, ("index", "position", "residual"), here)
            forward[i][x] = (
                _atom(entry["index"], f"{here}.index"),
                _atom(entry["position"], f"{here}.position"),
                entry["residual"],
            )
    backward: dict[str, dict[tuple[str, str, str], str]] = {}
    for i, row in _nested(doc["backward"], f"{at}.backward").items():
        backward[i] = {}
        for j, per_dir in row.items():
            for beta, per_res in _nested(
                per_dir, f"{at}.backward.{i}.{j}"
            ).items():
                for gamma, t in per_res.items():
                    backward[i][(j, beta, gamma)] = t
    return Ommatidium(source, target, residual, forward, backward)


def ommatidium_to_json(o: Ommatidium) -> dict:
    backward: dict[str, dict] = {}
    for i, table in o.backward.items():
        backward[i] = {}
        for (j, beta, gamma), t in sorted(table.items()):
            backward[i].setdefault(j, {}).setdefault(beta, {})[gamma] = t
    return {
        "source": poly_to_json(o.source),
        "target": poly_to_json(o.target),
        "residual": {
            j: {i: list(o.residual[(j, i)].elements) for i in o.source.index}
            for j in o.target.index
        },
        "forward": {
            i: {
                x: {"index": j, "position": a, "residual": c}
                for x, (j, a, c) in sorted(o.forward[i].items())
            }
            for i in o.source.index
        },
        "backward": backward,
    }


# ---------------------------------------------------------------------------
# Lens and prism tables
# ---------------------------------------------------------------------------


def optic_kind(doc, at: str = "$") -> str:
    if not isinstance(doc, dict) or "kind" not in doc:
        raise FormatError("expected an object with a 'kind' field", at)
    kind = doc["kind"]
    if kind not in ("lens", "prism"):
        raise FormatError(f"unknown optic kind {kind!r}", f"{at}.kind")
    return kind


def _endpoint_sets(doc, name, at) -> tuple[FinSet, FinSet, FinSet, FinSet]:
    return tuple(
        finset(f"{name}.{key}", _atom_list(doc[key], f"{at}.{key}"))
        for key in ("s", "t", "a", "b")
    )


def lens_from_json(doc, name: str = "lens", at: str = "$") -> ConcreteLens:
    _expect_keys(doc, ("kind", "s", "t", "a", "b", "get", "put"), at)
    if doc["kind"] != "lens":
        raise FormatError("expected kind 'lens'", f"{at}.kind")
    s, t, a, b = _endpoint_sets(doc, name, at)
    get = _str_table(doc["get"], f"{at}.get")
    put = {}
    for x, row in _nested(doc["put"], f"{at}.put").items():
        for y, v in _str_table(row, f"{at}.put.{x}").items():
            put[(x, y)] = v
    return ConcreteLens(s, t, a, b, get, put)


def lens_to_json(l: ConcreteLens) -> dict:
    put: dict[str, dict[str, str]] = {}
    for (x, y), v in sorted(l.put.items()):
        put.setdefault(x, {})[y] = v
    return {
        "kind": "lens",
        "s": list(l.s.elements),
        "t": list(l.t.elements),
        "a": list(l.a.elements),
        "b": list(l.b.elements),
        "get": dict(sorted(l.get.items())),
        "put": put,
    }


def prism_from_json(doc, name: str = "prism", at: str = "$") -> ConcretePrism:
    _expect_keys(doc, ("kind", "s", "t", "a", "b", "match", "build"), at)
    if doc["kind"] != "prism":
        raise FormatError("expected kind 'prism'", f"{at}.kind")
    s, t, a, b = _endpoint_sets(doc, name, at)
    match = {}
    for x, entry in _nested(doc["match"], f"{at}.match").items():
        here = f"{at}.match.{x}"
        _expect_keys(entry, ("tag", "value"), here)
        value = _atom(entry["value"], f"{here}.value")
        if entry["tag"] == "L":
            match[x] = tag_left(value)
        elif entry["tag"] == "R":
            match[x] = tag_right(value)
        else:
            raise FormatError(f"tag must be 'L' or 'R', got {entry['tag']!r}", here)
    build = _str_table(doc["build"], f"{at}.build")
    return ConcretePrism(s, t, a, b, match, build)


def prism_to_json(p: ConcretePrism) -> dict:
    from .optics import untag, LEFT

    match = {}
    for x, tagged in sorted(p.match.items()):
        tag, v = untag(tagged)
        match[x] = {"tag": "L" if tag == LEFT else "R", "value": v}
    return {
        "kind": "prism",
        "s": list(p.s.elements),
        "t": list(p.t.elements),
        "a": list(p.a.elements),
        "b": list(p.b.elements),
        "match": match,
        "build": dict(sorted(p.build.items())),
    }


def dump_json(doc) -> str:
    return json.dumps(doc, indent=2, sort_keys=True) + "\n"
