"""Ultraposets: finite posets with an ultraproduct pairing.

Each construction subclasses :class:`Ultraposet` and implements
``_pair(f, mu)``, the point ``⟨f, μ⟩`` for a family ``f : S -> carrier``
(a tuple of carrier indices) and an ultrafilter ``μ`` on ``S``.  The pairing
against a family ``T -> βS`` is taken pointwise, see :func:`pairing`.
"""

from __future__ import annotations

import itertools
from functools import cached_property
from typing import Iterable, Sequence

import numpy as np

from .beta import UltraFamily, Ultrafilter, restrict
from .errors import LosFailure, ShapeError, TheoremViolation
from .order import (
    bitvec,
    mask_from,
    DistLattice,
    Poset,
    antichain,
    bits,
    lattice_tables,
    mask_of,
    monotone_maps,
    pointwise_order,
    prime_ideals,
    two,
)


class Ultraposet:
    """Base class.  Results of ``pair`` are memoised; instances are immutable."""

    construction = "abstract"

    def __init__(self, carrier: Poset):
        self.carrier = carrier
        self._memo: dict = {}
        self._tables: dict = {}

    @property
    def n(self) -> int:
        return self.carrier.n

    def __len__(self):
        return self.carrier.n

    def __repr__(self):
        return f"{type(self).__name__}(n={self.n})"

    def pair(self, f: Sequence[int], mu: Ultrafilter) -> int:
        f = tuple(f)
        if len(f) != mu.m:
            raise ShapeError(f"family has {len(f)} entries, ultrafilter is on {mu.m} points")
        key = (f, mu)
        try:
            return self._memo[key]
        except KeyError:
            pass
        if any(not 0 <= x < self.n for x in f):
            raise ShapeError("family leaves the carrier")
        out = self._pair(f, mu)
        self._memo[key] = out
        return out

    def _pair(self, f: tuple[int, ...], mu: Ultrafilter) -> int:
        raise NotImplementedError

    def ultrapower(self, p: int, mu: Ultrafilter) -> int:
        """``p^μ``: the pairing of the constant family at ``p``."""
        return self.pair((p,) * mu.m, mu)

    def describe(self) -> dict:
        """Construction data, as used by the JSON file format."""
        return {"construction": self.construction}


def pairing(U: Ultraposet, f: Sequence[int], mu: UltraFamily) -> tuple[int, ...]:
    """``⟨f, μ⟩ : T -> U``, pointwise in the second argument."""
    return tuple(U.pair(f, m) for m in mu)


class DiscreteUltraposet(Ultraposet):
    """A finite set with the discrete order; ``⟨f, μ⟩`` is the limit of ``f`` along ``μ``."""

    construction = "discrete"

    def __init__(self, n: int):
        super().__init__(antichain(n))

    def _pair(self, f, mu):
        for x in sorted(set(f)):
            if mask_of(s for s, v in enumerate(f) if v == x) in mu:
                return x
        raise TheoremViolation("no fibre of the family lies in the ultrafilter", witness=(f, mu))

    def describe(self):
        return {"construction": self.construction, "data": {"n": self.n}}


class CanonicalUltraposet(Ultraposet):
    """A finite lattice with ``⟨f, μ⟩ = ⋁_{A∈μ} ⋀_{s∈A} f(s)``.

    Accepts any finite lattice (every finite lattice is complete); distributivity
    is not needed.
    """

    construction = "canonical"

    def __init__(self, lattice: Poset | DistLattice):
        poset = lattice.poset if isinstance(lattice, DistLattice) else lattice
        super().__init__(poset)
        self.meet, self.join, self.bot, self.top = lattice_tables(poset)

    def _join_of_meets(self, f, family):
        acc = self.bot
        for A in family:
            m = self.top
            for s in bits(A):
                m = self.meet[m][f[s]]
            acc = self.join[acc][m]
        return acc

    def _pair(self, f, mu):
        return self._join_of_meets(f, mu.family)

    def pair_filter(self, f: Sequence[int], family: Iterable[int]) -> int:
        """Diagnostic: the same join-of-meets formula for an arbitrary family of subsets.

        Used with proper filters that are not ultra to show what breaks.
        """
        return self._join_of_meets(tuple(f), sorted(set(family)))

    def describe(self):
        return {"construction": self.construction, "data": _poset_data(self.carrier)}


class PresheafUltraposet(Ultraposet):
    """``[Q, P]``: monotone maps ``Q -> P`` ordered pointwise, paired pointwise in ``P``."""

    construction = "presheaf"

    def __init__(self, base: Poset, target: Ultraposet):
        maps = monotone_maps(base, target.carrier)
        super().__init__(pointwise_order(maps, target.carrier))
        self.base = base
        self.target = target
        self.index = {m.values: k for k, m in enumerate(maps)}

    def _pair(self, f, mu):
        rows = [self.carrier.labels[x] for x in f]
        vals = tuple(self.target.pair(tuple(r[q] for r in rows), mu) for q in range(self.base.n))
        try:
            return self.index[vals]
        except KeyError:
            raise TheoremViolation("pointwise ultraproduct is not monotone", witness=vals) from None

    def describe(self):
        return {
            "construction": self.construction,
            "data": {"base": _poset_data(self.base), "target": self.target.describe()},
        }


class ModSpectrum(Ultraposet):
    """``Mod(D)``: prime ideals of ``D`` ordered by reverse inclusion.

    Carrier element ``k`` is ``primes[k]`` (bit-set order).  The pairing is
    inherited from ``[D, 2]``: ``p ∈ ⟨f, μ⟩`` iff ``{s : p ∈ f(s)} ∈ μ``.
    """

    construction = "mod"

    def __init__(self, lattice: DistLattice):
        self.lattice = lattice
        self.primes = prime_ideals(lattice)
        masks = [x.mask for x in self.primes]
        # leq[i, j] iff primes[i] ⊇ primes[j]
        leq = np.array([[b & ~a == 0 for b in masks] for a in masks], dtype=bool).reshape(len(masks), len(masks))
        super().__init__(Poset(leq, self.primes, check=False))
        self.index = {m: k for k, m in enumerate(masks)}

    @cached_property
    def _membership(self) -> np.ndarray:
        # row x: which lattice elements lie in primes[x]
        return np.array([bitvec(x.mask, self.lattice.n) for x in self.primes], dtype=bool).reshape(self.n, self.lattice.n)

    def _pair(self, f, mu):
        # for each p the index set {s : p ∈ f(s)}, as a bit-set, then its membership in μ
        rows = self._membership[list(f)].astype(np.int64)
        codes = (rows << np.arange(len(f), dtype=np.int64)[:, None]).sum(axis=0)
        large = np.array([A in mu for A in range(1 << mu.m)], dtype=bool)
        out = mask_from(large[codes])
        try:
            return self.index[out]
        except KeyError:
            raise LosFailure("ultraproduct of models is not a model", witness=out) from None

    def B(self, p: int) -> int:
        """``B_p``: models (as carrier bit-set) whose prime ideal contains ``p``."""
        return mask_of(k for k, x in enumerate(self.primes) if p in x)

    def O(self, p: int) -> int:  # noqa: E743
        return self.carrier.full & ~self.B(p)

    def describe(self):
        return {"construction": self.construction, "data": _poset_data(self.lattice.poset)}


class ProductUltraposet(Ultraposet):
    """Finite product with componentwise order and pairing; no factors gives the point."""

    construction = "product"

    def __init__(self, factors: Sequence[Ultraposet]):
        self.factors = tuple(factors)
        tuples = list(itertools.product(*(range(U.n) for U in self.factors)))
        k = len(tuples)
        leq = np.ones((k, k), dtype=bool)
        arr = np.array(tuples, dtype=np.int64).reshape(k, len(self.factors))
        for c, U in enumerate(self.factors):
            leq &= U.carrier.leq[arr[:, c][:, None], arr[:, c][None, :]]
        super().__init__(Poset(leq, tuples, check=False))
        self.index = {t: i for i, t in enumerate(tuples)}

    def _pair(self, f, mu):
        rows = [self.carrier.labels[x] for x in f]
        return self.index[tuple(U.pair(tuple(r[c] for r in rows), mu) for c, U in enumerate(self.factors))]

    def projection(self, c: int) -> tuple[int, ...]:
        return tuple(t[c] for t in self.carrier.labels)

    def describe(self):
        return {"construction": self.construction, "data": {"factors": [U.describe() for U in self.factors]}}


class CoproductUltraposet(Ultraposet):
    """Disjoint union; ``⟨f, μ⟩`` is computed in whichever summand carries a ``μ``-large fibre."""

    construction = "coproduct"

    def __init__(self, left: Ultraposet, right: Ultraposet):
        self.left, self.right = left, right
        a, b = left.n, right.n
        leq = np.zeros((a + b, a + b), dtype=bool)
        leq[:a, :a] = left.carrier.leq
        leq[a:, a:] = right.carrier.leq
        labels = [(0, i) for i in range(a)] + [(1, j) for j in range(b)]
        super().__init__(Poset(leq, labels, check=False))

    def _pair(self, f, mu):
        a = self.left.n
        W = mask_of(s for s, x in enumerate(f) if x < a)
        if W in mu:
            return self.left.pair(tuple(f[s] for s in bits(W)), restrict(mu, W))
        comp = ((1 << mu.m) - 1) & ~W
        return a + self.right.pair(tuple(f[s] - a for s in bits(comp)), restrict(mu, comp))

    def injection(self, side: int) -> tuple[int, ...]:
        if side == 0:
            return tuple(range(self.left.n))
        return tuple(self.left.n + j for j in range(self.right.n))

    def describe(self):
        return {
            "construction": self.construction,
            "data": {"left": self.left.describe(), "right": self.right.describe()},
        }


def canonical_two() -> CanonicalUltraposet:
    """The ultraposet ``2 = {0 < 1}``; ``⟨f, μ⟩ = i`` iff ``f^{-1}(i) ∈ μ``."""
    return CanonicalUltraposet(two())


def terminal() -> ProductUltraposet:
    return ProductUltraposet(())


def initial() -> DiscreteUltraposet:
    return DiscreteUltraposet(0)


def _poset_data(P: Poset) -> dict:
    return {"n": P.n, "leq": [list(c) for c in P.covers()]}
