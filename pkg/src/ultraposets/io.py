"""JSON file formats for posets, lattices, homomorphisms, ultrafilters and ultraposets.

Poset: ``{"n": 3, "leq": [[0, 1], [1, 2]]}``, where ``leq`` is any generating
relation.  Hom: ``{"dom": ..., "cod": ..., "values": [...]}`` with ``dom`` and
``cod`` given inline or as paths relative to the hom file.  Ultrafilter:
``{"m": 3, "sets": [[0], [0, 1], ...]}`` or ``{"m": 3, "principal": 0}``.
Ultraposet: ``{"construction": ..., "data": ...}`` as produced by
:meth:`Ultraposet.describe`.
"""

from __future__ import annotations

import json
from pathlib import Path
from typing import Any

from .beta import Ultrafilter, principal
from .errors import FormatError
from .order import DistLattice, LatticeHom, Poset, mask_of, validate_dist_lattice, validate_poset
from .structures import (
    CanonicalUltraposet,
    CoproductUltraposet,
    DiscreteUltraposet,
    ModSpectrum,
    PresheafUltraposet,
    ProductUltraposet,
    Ultraposet,
)


def read_json(path: str | Path) -> Any:
    try:
        with open(path, encoding="utf-8") as fh:
            return json.load(fh)
    except json.JSONDecodeError as e:
        raise FormatError(f"{path}: invalid JSON ({e.msg} at line {e.lineno})") from None


def _int(value, what: str) -> int:
    if isinstance(value, bool) or not isinstance(value, int):
        raise FormatError(f"{what} must be an integer, got {value!r}")
    return value


def poset_from_json(data: Any) -> Poset:
    """Parse a poset object.  Schema problems raise :class:`FormatError`;
    order problems (a cycle) raise the validator's own error."""
    if not isinstance(data, dict) or "n" not in data:
        raise FormatError('poset must be an object with "n" and "leq"')
    n = _int(data["n"], "n")
    if n < 0:
        raise FormatError("n must be non-negative")
    pairs = data.get("leq", [])
    if not isinstance(pairs, list) or any(not isinstance(p, list) or len(p) != 2 for p in pairs):
        raise FormatError('"leq" must be a list of [i, j] pairs')
    pairs = [(_int(a, "leq entry"), _int(b, "leq entry")) for a, b in pairs]
    if any(not (0 <= a < n and 0 <= b < n) for a, b in pairs):
        raise FormatError(f"leq pair out of range for n={n}")
    return validate_poset(n, pairs)


def poset_to_json(P: Poset) -> dict:
    return {"n": P.n, "leq": [list(c) for c in P.covers()]}


def load_poset(path: str | Path) -> Poset:
    return poset_from_json(read_json(path))


def load_lattice(path: str | Path) -> DistLattice:
    return validate_dist_lattice(load_poset(path))


def _lattice_ref(ref: Any, base: Path) -> DistLattice:
    if isinstance(ref, str):
        return load_lattice(base / ref)
    return validate_dist_lattice(poset_from_json(ref))


def hom_from_json(data: Any, base: str | Path = ".") -> LatticeHom:
    if not isinstance(data, dict) or not {"dom", "cod", "values"} <= data.keys():
        raise FormatError('hom must be an object with "dom", "cod" and "values"')
    base = Path(base)
    D, C = _lattice_ref(data["dom"], base), _lattice_ref(data["cod"], base)
    values = [_int(v, "value") for v in data["values"]]
    if any(not 0 <= v < C.n for v in values):
        raise FormatError("hom value outside the codomain")
    return LatticeHom(D, C, tuple(values))


def load_hom(path: str | Path) -> LatticeHom:
    path = Path(path)
    return hom_from_json(read_json(path), path.parent)


def hom_to_json(h: LatticeHom) -> dict:
    return {"dom": poset_to_json(h.dom.poset), "cod": poset_to_json(h.cod.poset), "values": list(h.values)}


def ultrafilter_from_json(data: Any) -> Ultrafilter:
    if not isinstance(data, dict) or "m" not in data:
        raise FormatError('ultrafilter must be an object with "m"')
    m = _int(data["m"], "m")
    if "principal" in data:
        return principal(_int(data["principal"], "principal"), m)
    if "sets" in data:
        fam = []
        for A in data["sets"]:
            if not isinstance(A, list) or any(not 0 <= _int(s, "point") < m for s in A):
                raise FormatError("each set must be a list of points below m")
            fam.append(mask_of(A))
        return Ultrafilter(m, fam)
    raise FormatError('ultrafilter needs "principal" or "sets"')


def ultrafilter_to_json(u: Ultrafilter, full: bool = False) -> dict:
    if not full:
        return u.to_dict()
    return {"m": u.m, "sets": [[s for s in range(u.m) if A >> s & 1] for A in u.sets()]}


def ultraposet_from_json(data: Any) -> Ultraposet:
    if not isinstance(data, dict) or "construction" not in data:
        raise FormatError('ultraposet must be an object with "construction"')
    try:
        return _build_ultraposet(data["construction"], data.get("data", {}))
    except (KeyError, TypeError, AttributeError) as e:
        raise FormatError(f"malformed {data['construction']!r} data: {e!r}") from None


def _build_ultraposet(kind: Any, body: Any) -> Ultraposet:
    if kind == "discrete":
        return DiscreteUltraposet(_int(body.get("n"), "n"))
    if kind == "canonical":
        return CanonicalUltraposet(poset_from_json(body))
    if kind == "mod":
        return ModSpectrum(validate_dist_lattice(poset_from_json(body)))
    if kind == "presheaf":
        return PresheafUltraposet(poset_from_json(body["base"]), ultraposet_from_json(body["target"]))
    if kind == "product":
        return ProductUltraposet([ultraposet_from_json(f) for f in body.get("factors", [])])
    if kind == "coproduct":
        return CoproductUltraposet(ultraposet_from_json(body["left"]), ultraposet_from_json(body["right"]))
    raise FormatError(f"unknown construction {kind!r}")


def load_ultraposet(path: str | Path) -> Ultraposet:
    return ultraposet_from_json(read_json(path))


def dumps(obj: Any) -> str:
    """Stable JSON text: sorted keys, two-space indent."""
    return json.dumps(obj, indent=2, sort_keys=True)
