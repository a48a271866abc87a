"""JSON file formats for lattices, permutation vectors and set systems.

Lattice::

    {"size": 5, "covers": [[0, 1], ...], "chains": [[0, 2, 3, 4], ...], "labels": [[0, 0], ...]}

``chains`` and ``labels`` are optional; ids are 0-based. Permutation vector::

    {"n": 3, "k": 3, "perms": [[2, 1, 3], [3, 2, 1]]}

Set system (``kind`` optional, one of ``antimatroid`` / ``convexgeom``)::

    {"ground": ["a", "b"], "family": [[], ["a"], ["a", "b"]], "kind": "antimatroid"}

Everything written is canonically sorted so equal objects serialize
byte-identically.
"""

from __future__ import annotations

import json
import sys
from pathlib import Path
from typing import Any, Sequence

from .coordinates import ChainedLattice, PermVector
from .lattice import FiniteLattice
from .perm import Permutation
from .setsystems import Antimatroid, ConvexGeometry, SetSystem


class ParseError(ValueError):
    """The input is not valid JSON or does not have the expected shape.

    Well-shaped input that breaks a mathematical invariant (a cyclic cover
    relation, a non-permutation) raises the library's own ValueError instead.
    """


def _is_int(x) -> bool:
    return isinstance(x, int) and not isinstance(x, bool)


def _int_rows(data: Any, key: str, width: int | None = None) -> list[list[int]]:
    rows = data.get(key)
    if not isinstance(rows, list) or not all(
        isinstance(r, list) and all(_is_int(x) for x in r) for r in rows
    ):
        raise ParseError(f"{key!r} must be a list of integer lists")
    if width is not None and any(len(r) != width for r in rows):
        raise ParseError(f"every entry of {key!r} must have length {width}")
    return rows


def read_json(path: str | Path) -> Any:
    try:
        if str(path) == "-":
            return json.load(sys.stdin)
        with open(path, encoding="utf-8") as fh:
            return json.load(fh)
    except (OSError, json.JSONDecodeError) as exc:
        raise ParseError(f"cannot read {path}: {exc}") from exc


def dumps(obj: Any) -> str:
    return json.dumps(obj, sort_keys=True) + "\n"


def _jsonable_label(label):
    if isinstance(label, tuple):
        return list(label)
    if isinstance(label, frozenset):
        return sorted(label, key=repr)
    return label


def _label_from_json(label):
    if isinstance(label, list):
        return tuple(label)
    return label


def lattice_to_json(lat: FiniteLattice, chains: Sequence[Sequence[int]] | None = None) -> dict:
    out: dict[str, Any] = {"size": lat.size, "covers": [list(p) for p in sorted(lat.covers)]}
    if chains is not None:
        out["chains"] = [list(c) for c in chains]
    if lat.labels is not None:
        out["labels"] = [_jsonable_label(l) for l in lat.labels]
    return out


def chained_to_json(cl: ChainedLattice) -> dict:
    return lattice_to_json(cl.lattice, cl.chains)


def lattice_from_json(data: Any) -> tuple[FiniteLattice, list[tuple[int, ...]] | None]:
    """Parse a lattice document; returns the lattice and its chains (or None)."""
    if not isinstance(data, dict) or not _is_int(data.get("size")):
        raise ParseError("a lattice document needs an integer 'size'")
    covers = [tuple(p) for p in _int_rows(data, "covers", 2)]
    chains = None
    if "chains" in data:
        chains = [tuple(c) for c in _int_rows(data, "chains")]
    labels = data.get("labels")
    if labels is not None:
        if not isinstance(labels, list) or len(labels) != data["size"]:
            raise ParseError("'labels' must be a list with one entry per element")
        labels = [_label_from_json(l) for l in labels]
    return FiniteLattice(data["size"], covers, labels), chains


def perm_vector_to_json(v: PermVector) -> dict:
    return {"n": v.n, "k": v.k, "perms": v.to_lists()}


def perm_vector_from_json(data: Any) -> PermVector:
    if not isinstance(data, dict):
        raise ParseError("a permutation vector document must be an object")
    rows = _int_rows(data, "perms")
    for key in ("n", "k"):
        if key in data and not _is_int(data[key]):
            raise ParseError(f"{key!r} must be an integer")
    v = PermVector(tuple(Permutation(p) for p in rows))
    if "n" in data and data["n"] != v.n:
        raise ValueError(f"declared n={data['n']} but the permutations have degree {v.n}")
    if "k" in data and data["k"] != v.k:
        raise ValueError(f"declared k={data['k']} but {len(rows)} permutations give k={v.k}")
    return v


def set_system_to_json(s: SetSystem) -> dict:
    out: dict[str, Any] = {
        "ground": sorted(map(str, s.ground)),
        "family": sorted(sorted(map(str, m)) for m in s.family),
    }
    if isinstance(s, Antimatroid):
        out["kind"] = "antimatroid"
    elif isinstance(s, ConvexGeometry):
        out["kind"] = "convexgeom"
    return out


def set_system_from_json(data: Any) -> SetSystem:
    """Parse a set system; validated as the declared ``kind`` when one is given."""
    if not isinstance(data, dict):
        raise ParseError("a set system document must be an object")
    ground, family = data.get("ground"), data.get("family")
    if not isinstance(ground, list) or not isinstance(family, list):
        raise ParseError("'ground' and 'family' must be lists")
    if not all(isinstance(m, list) for m in family):
        raise ParseError("every member of 'family' must be a list")
    base = SetSystem.of(map(str, ground), ([str(p) for p in m] for m in family))
    kind = data.get("kind")
    if kind == "antimatroid":
        return Antimatroid(base.ground, base.family)
    if kind == "convexgeom":
        return ConvexGeometry(base.ground, base.family)
    if kind is not None:
        raise ParseError(f"unknown set system kind {kind!r}")
    return base


def document_kind(data: Any) -> str:
    """``perms``, ``lattice`` or ``setsystem``, from the keys present."""
    if isinstance(data, dict):
        if "perms" in data:
            return "perms"
        if "size" in data and "covers" in data:
            return "lattice"
        if "ground" in data and "family" in data:
            return "setsystem"
    raise ParseError("cannot tell what kind of document this is")
