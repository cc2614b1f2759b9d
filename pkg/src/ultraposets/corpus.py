"""Generated test corpora: small posets up to isomorphism and the structures built on them."""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .order import DistLattice, Poset, bits, diamond, downset_lattice, downsets, pentagon
from .structures import (
    CanonicalUltraposet,
    CoproductUltraposet,
    DiscreteUltraposet,
    ModSpectrum,
    PresheafUltraposet,
    ProductUltraposet,
    Ultraposet,
    canonical_two,
    initial,
    terminal,
)

#: default bound on poset size for generated corpora
DEFAULT_MAX_SIZE = 5


def _canonical_key(leq: np.ndarray) -> bytes:
    n = len(leq)
    if n == 0:
        return b""
    return min(leq[np.ix_(p, p)].tobytes() for p in map(list, itertools.permutations(range(n))))


@lru_cache(maxsize=None)
def posets_up_to_iso(max_size: int = DEFAULT_MAX_SIZE) -> tuple[Poset, ...]:
    """One naturally labelled representative of each poset with at most ``max_size`` elements.

    Size ``n + 1`` posets come from size ``n`` ones by adding a new maximal
    element above a downset; duplicates are removed by a canonical form
    (the least relation matrix over all relabellings).  Sorted by size, then
    canonical form.
    """
    layers = [[Poset(np.zeros((0, 0), dtype=bool))]]
    for n in range(max_size):
        seen = {}
        for P in layers[-1]:
            for D in downsets(P):
                leq = np.zeros((n + 1, n + 1), dtype=bool)
                leq[:n, :n] = P.leq
                leq[n, n] = True
                for q in bits(D):
                    leq[q, n] = True
                key = _canonical_key(leq)
                if key not in seen:
                    seen[key] = Poset(leq, check=False)
        layers.append([seen[k] for k in sorted(seen)])
    return tuple(P for layer in layers for P in layer)


@lru_cache(maxsize=None)
def lattice_corpus(max_size: int = DEFAULT_MAX_SIZE) -> tuple[DistLattice, ...]:
    """Downset lattices of every poset up to ``max_size``.

    Every finite distributive lattice is one of these, and non-isomorphic
    posets give non-isomorphic lattices, so the list has no duplicates.
    """
    return tuple(downset_lattice(P) for P in posets_up_to_iso(max_size))


@dataclass(frozen=True)
class CorpusItem:
    name: str
    ultraposet: Ultraposet


def ultraposet_corpus(max_size: int = DEFAULT_MAX_SIZE) -> list[CorpusItem]:
    """Every construction over the corpus, in a fixed order.

    Canonical structures run on every corpus lattice and on the two
    smallest non-distributive lattices, spectra on every corpus lattice,
    presheaves ``[Q, 2]`` on every corpus poset and discrete sets up to
    ``max_size``.  Products and coproducts of small items, the empty
    ultraposet and the point complete the list.
    """
    posets = posets_up_to_iso(max_size)
    lattices = lattice_corpus(max_size)
    items = [CorpusItem("terminal", terminal()), CorpusItem("initial", initial())]
    items += [CorpusItem(f"discrete[{n}]", DiscreteUltraposet(n)) for n in range(1, max_size + 1)]
    items += [CorpusItem(f"canonical[L{i}]", CanonicalUltraposet(L)) for i, L in enumerate(lattices)]
    items += [CorpusItem("canonical[M3]", CanonicalUltraposet(diamond())), CorpusItem("canonical[N5]", CanonicalUltraposet(pentagon()))]
    items += [CorpusItem(f"mod[L{i}]", ModSpectrum(L)) for i, L in enumerate(lattices)]
    items += [CorpusItem(f"presheaf[P{i},2]", PresheafUltraposet(P, canonical_two())) for i, P in enumerate(posets)]
    small = [it for it in items if 1 <= it.ultraposet.n <= 3 and it.name.startswith(("discrete", "canonical[L", "mod"))]
    small = small[:6]
    for a, b in itertools.combinations_with_replacement(range(len(small)), 2):
        A, B = small[a], small[b]
        items.append(CorpusItem(f"product[{A.name},{B.name}]", ProductUltraposet([A.ultraposet, B.ultraposet])))
        items.append(CorpusItem(f"coproduct[{A.name},{B.name}]", CoproductUltraposet(A.ultraposet, B.ultraposet)))
    return items
