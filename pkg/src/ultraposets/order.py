"""Finite posets, monotone maps and finite distributive lattices.

Elements of a poset are the integers ``0..n-1``.  Subsets of a carrier are
plain Python ints used as bit-sets (bit ``i`` set iff element ``i`` is in the
subset), and every enumeration returns subsets sorted by that integer value.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Iterator, Sequence

import numpy as np

from .errors import (
    BudgetExceeded,
    CycleError,
    NotALattice,
    NotDisjoint,
    NotDistributive,
    NotMonotone,
    OrderError,
    TheoremViolation,
)

#: cap on search nodes visited when enumerating monotone maps or lattice homs
DEFAULT_MAP_BUDGET = 10**7


def bits(mask: int) -> Iterator[int]:
    """Indices of the set bits of ``mask``, ascending."""
    i = 0
    while mask:
        if mask & 1:
            yield i
        mask >>= 1
        i += 1


def mask_of(indices: Iterable[int]) -> int:
    m = 0
    for i in indices:
        m |= 1 << int(i)
    return m


def bitvec(mask: int, n: int) -> np.ndarray:
    """Boolean vector of the first ``n`` bits of ``mask``."""
    raw = np.frombuffer(mask.to_bytes((n + 7) // 8 or 1, "little"), dtype=np.uint8)
    return np.unpackbits(raw, bitorder="little")[:n].astype(bool)


def mask_from(vec: np.ndarray) -> int:
    """Inverse of :func:`bitvec`."""
    return int.from_bytes(np.packbits(np.asarray(vec, dtype=bool), bitorder="little").tobytes(), "little")


def popcount(mask: int) -> int:
    return bin(mask).count("1")


class Poset:
    """An immutable finite partial order.

    ``leq`` is a read-only ``n x n`` boolean array with ``leq[i, j]`` true iff
    ``i <= j``.  ``labels`` optionally names the elements (prime ideals,
    tuples of coordinates, closed pairs, ...); they play no role in the order.
    """

    def __init__(self, leq, labels: Sequence | None = None, *, check: bool = True):
        leq = np.array(leq, dtype=bool)
        if leq.ndim != 2 or leq.shape[0] != leq.shape[1]:
            raise ValueError(f"leq must be square, got shape {leq.shape}")
        n = leq.shape[0]
        if check and n:
            if not leq.diagonal().all():
                raise ValueError("leq is not reflexive")
            both = leq & leq.T & ~np.eye(n, dtype=bool)
            if both.any():
                i, j = (int(v) for v in np.argwhere(both)[0])
                raise CycleError(f"{i} <= {j} <= {i} with {i} != {j}", witness=(i, j))
            m = leq.astype(np.int64)
            if ((m @ m > 0) & ~leq).any():
                raise ValueError("leq is not transitive")
        if labels is not None and len(labels) != n:
            raise ValueError("one label per element required")
        leq.setflags(write=False)
        self.leq = leq
        self.n = n
        self.labels = tuple(labels) if labels is not None else None

    def __len__(self):
        return self.n

    def __eq__(self, other):
        return isinstance(other, Poset) and self.n == other.n and bool(np.array_equal(self.leq, other.leq))

    def __hash__(self):
        return hash((self.n, self.leq.tobytes()))

    def __repr__(self):
        return f"Poset(n={self.n}, covers={self.covers()})"

    def le(self, p: int, q: int) -> bool:
        return bool(self.leq[p, q])

    @cached_property
    def full(self) -> int:
        return (1 << self.n) - 1

    @cached_property
    def down(self) -> tuple[int, ...]:
        """``down[p]`` is the bit-set of ``{q : q <= p}``."""
        return tuple(mask_from(col) for col in self.leq.T)

    @cached_property
    def up(self) -> tuple[int, ...]:
        return tuple(mask_from(row) for row in self.leq)

    @cached_property
    def linear_extension(self) -> tuple[int, ...]:
        # p < q implies |down p| < |down q|, so this sort is a linear extension
        return tuple(sorted(range(self.n), key=lambda p: (popcount(self.down[p]), p)))

    @cached_property
    def cover_matrix(self) -> np.ndarray:
        lt = self.leq & ~np.eye(self.n, dtype=bool)
        li = lt.astype(np.int64)
        return lt & ~(li @ li > 0)

    @cached_property
    def upper_covers(self) -> tuple[tuple[int, ...], ...]:
        return tuple(tuple(int(q) for q in np.flatnonzero(row)) for row in self.cover_matrix)

    @cached_property
    def lower_covers(self) -> tuple[tuple[int, ...], ...]:
        return tuple(tuple(int(q) for q in np.flatnonzero(col)) for col in self.cover_matrix.T)

    def covers(self) -> tuple[tuple[int, int], ...]:
        """Hasse diagram edges ``(p, q)`` with ``q`` covering ``p``."""
        return self._covers

    @cached_property
    def _covers(self):
        return tuple((int(p), int(q)) for p, q in np.argwhere(self.cover_matrix))

    def is_downset(self, mask: int) -> bool:
        return all(self.down[p] & ~mask == 0 for p in bits(mask))

    def is_upset(self, mask: int) -> bool:
        return all(self.up[p] & ~mask == 0 for p in bits(mask))

    def down_closure(self, mask: int) -> int:
        out = 0
        for p in bits(mask):
            out |= self.down[p]
        return out

    def up_closure(self, mask: int) -> int:
        out = 0
        for p in bits(mask):
            out |= self.up[p]
        return out

    @property
    def is_antichain(self) -> bool:
        return not (self.leq & ~np.eye(self.n, dtype=bool)).any()

    def dual(self) -> Poset:
        return Poset(self.leq.T, self.labels, check=False)

    def subposet(self, mask: int) -> Poset:
        idx = list(bits(mask))
        labels = [self.labels[i] for i in idx] if self.labels is not None else None
        return Poset(self.leq[np.ix_(idx, idx)], labels, check=False)


def validate_poset(n: int, pairs: Iterable[Sequence[int]], labels: Sequence | None = None) -> Poset:
    """Poset on ``0..n-1`` generated by ``pairs`` under reflexive-transitive closure.

    Covers are enough: the relation is closed rather than rejected when it is
    not transitive.

    Raises
    ------
    IndexError
        If a pair mentions an element outside ``0..n-1``.
    CycleError
        If the closure identifies two distinct elements.
    """
    if n < 0:
        raise ValueError("n must be non-negative")
    rel = np.eye(n, dtype=bool)
    for pair in pairs:
        i, j = (int(v) for v in pair)
        if not (0 <= i < n and 0 <= j < n):
            raise IndexError(f"pair ({i}, {j}) out of range for n={n}")
        rel[i, j] = True
    for k in range(n):
        rel |= np.outer(rel[:, k], rel[k, :])
    return Poset(rel, labels)


@dataclass(frozen=True)
class MonotoneMap:
    dom: Poset = field(repr=False)
    cod: Poset = field(repr=False)
    values: tuple[int, ...]

    def __post_init__(self):
        values = tuple(int(v) for v in self.values)
        object.__setattr__(self, "values", values)
        if len(values) != self.dom.n:
            raise ValueError(f"expected {self.dom.n} values, got {len(values)}")
        if any(not 0 <= v < self.cod.n for v in values):
            raise IndexError("value outside codomain")
        for p, q in self.dom.covers():
            if not self.cod.le(values[p], values[q]):
                raise NotMonotone(f"{p} <= {q} but image {values[p]} not <= {values[q]}", witness=(p, q))

    def __call__(self, p: int) -> int:
        return self.values[p]

    def compose(self, inner: MonotoneMap) -> MonotoneMap:
        """``self ∘ inner``."""
        return MonotoneMap(inner.dom, self.cod, tuple(self.values[v] for v in inner.values))

    def preimage(self, mask: int) -> int:
        return mask_of(p for p, v in enumerate(self.values) if mask >> v & 1)

    @property
    def is_bijective(self) -> bool:
        return self.dom.n == self.cod.n and len(set(self.values)) == self.dom.n

    @property
    def is_isomorphism(self) -> bool:
        """Bijective and order-reflecting."""
        if not self.is_bijective:
            return False
        v = np.array(self.values, dtype=np.int64)
        return bool(np.array_equal(self.dom.leq, self.cod.leq[np.ix_(v, v)]))


def identity_map(poset: Poset) -> MonotoneMap:
    return MonotoneMap(poset, poset, tuple(range(poset.n)))


def monotone_maps(dom: Poset, cod: Poset, budget: int = DEFAULT_MAP_BUDGET) -> list[MonotoneMap]:
    """All monotone maps ``dom -> cod``, sorted by their value tuples.

    Backtracks along a linear extension of ``dom`` so only monotone partial
    assignments are ever extended.  ``budget`` bounds the search nodes.
    """
    order = dom.linear_extension
    lower = [tuple(q for q in bits(dom.down[p]) if q != p) for p in range(dom.n)]
    vals = [0] * dom.n
    found = []
    nodes = 0

    def extend(k):
        nonlocal nodes
        if k == dom.n:
            found.append(tuple(vals))
            return
        p = order[k]
        allowed = cod.full
        for q in lower[p]:
            allowed &= cod.up[vals[q]]
        for v in bits(allowed):
            nodes += 1
            if nodes > budget:
                raise BudgetExceeded(f"monotone map search exceeded {budget} nodes")
            vals[p] = v
            extend(k + 1)

    extend(0)
    found.sort()
    return [MonotoneMap(dom, cod, v) for v in found]


def pointwise_order(maps: Sequence[MonotoneMap], cod: Poset) -> Poset:
    """The pointwise order on a list of maps into ``cod``."""
    if not maps:
        return Poset(np.zeros((0, 0), dtype=bool), [], check=False)
    v = np.array([m.values for m in maps], dtype=np.int64)
    # leq[a, b] = all_p cod.leq[v[a, p], v[b, p]]
    rel = cod.leq[v[:, None, :], v[None, :, :]].all(axis=2)
    return Poset(rel, [m.values for m in maps], check=False)


def downsets(poset: Poset) -> list[int]:
    """All downward closed subsets as bit-sets, ascending."""
    order = poset.linear_extension
    strict_down = [poset.down[p] & ~(1 << p) for p in range(poset.n)]
    out = []

    def extend(k, acc):
        if k == poset.n:
            out.append(acc)
            return
        p = order[k]
        extend(k + 1, acc)
        if strict_down[p] & ~acc == 0:
            extend(k + 1, acc | 1 << p)

    extend(0, 0)
    out.sort()
    return out


def upsets(poset: Poset) -> list[int]:
    return sorted(poset.full & ~d for d in downsets(poset))


def lattice_tables(poset: Poset):
    """Meet and join tables of a finite lattice, plus its bottom and top.

    Raises :class:`NotALattice` with the offending pair as witness.
    """
    n = poset.n
    if n == 0:
        raise NotALattice("the empty poset has no top or bottom")
    by_down = {d: p for p, d in enumerate(poset.down)}
    by_up = {u: p for p, u in enumerate(poset.up)}
    meet = [[0] * n for _ in range(n)]
    join = [[0] * n for _ in range(n)]
    for p in range(n):
        for q in range(p, n):
            g = by_down.get(poset.down[p] & poset.down[q])
            if g is None:
                raise NotALattice(f"{p} and {q} have no meet", witness=(p, q))
            j = by_up.get(poset.up[p] & poset.up[q])
            if j is None:
                raise NotALattice(f"{p} and {q} have no join", witness=(p, q))
            meet[p][q] = meet[q][p] = g
            join[p][q] = join[q][p] = j
    bot = by_up.get(poset.full)
    top = by_down.get(poset.full)
    if bot is None or top is None:
        raise NotALattice("missing bottom or top")
    return tuple(map(tuple, meet)), tuple(map(tuple, join)), bot, top


class DistLattice:
    """A finite (hence complete) bounded distributive lattice.

    Build one with :func:`validate_dist_lattice`; the constructor trusts its
    arguments.
    """

    def __init__(self, poset: Poset, meet, join, bot: int, top: int):
        self.poset = poset
        self.meet = meet
        self.join = join
        self.bot = bot
        self.top = top

    @property
    def n(self) -> int:
        return self.poset.n

    def __len__(self):
        return self.poset.n

    @property
    def labels(self):
        return self.poset.labels

    def le(self, p: int, q: int) -> bool:
        return self.poset.le(p, q)

    def __repr__(self):
        return f"DistLattice(n={self.n}, bot={self.bot}, top={self.top})"

    def meet_all(self, elems: Iterable[int]) -> int:
        acc = self.top
        for p in elems:
            acc = self.meet[acc][p]
        return acc

    def join_all(self, elems: Iterable[int]) -> int:
        acc = self.bot
        for p in elems:
            acc = self.join[acc][p]
        return acc

    def complement(self, p: int) -> int | None:
        for q in range(self.n):
            if self.meet[p][q] == self.bot and self.join[p][q] == self.top:
                return q
        return None

    @property
    def is_boolean(self) -> bool:
        return all(self.complement(p) is not None for p in range(self.n))

    @cached_property
    def meet_array(self) -> np.ndarray:
        return np.asarray(self.meet).reshape(self.n, self.n)

    @cached_property
    def join_array(self) -> np.ndarray:
        return np.asarray(self.join).reshape(self.n, self.n)

    @cached_property
    def join_irreducibles(self) -> tuple[int, ...]:
        return tuple(p for p in range(self.n) if len(self.poset.lower_covers[p]) == 1)

    @cached_property
    def meet_irreducibles(self) -> tuple[int, ...]:
        return tuple(p for p in range(self.n) if len(self.poset.upper_covers[p]) == 1)


def validate_dist_lattice(poset: Poset) -> DistLattice:
    """Compute meet/join tables by exhaustive glb/lub search and check distributivity.

    Raises :class:`NotALattice` or :class:`NotDistributive` (witness ``(p, q, r)``
    with ``p ∧ (q ∨ r) != (p ∧ q) ∨ (p ∧ r)``).
    """
    meet, join, bot, top = lattice_tables(poset)
    m = np.array(meet, dtype=np.int64)
    j = np.array(join, dtype=np.int64)
    # one p at a time keeps memory quadratic
    for p in range(poset.n):
        lhs = m[p][j]
        rhs = j[m[p][:, None], m[p][None, :]]
        bad = np.argwhere(lhs != rhs)
        if len(bad):
            q, r = (int(v) for v in bad[0])
            raise NotDistributive(f"{p} ∧ ({q} ∨ {r}) differs from ({p} ∧ {q}) ∨ ({p} ∧ {r})", witness=(p, q, r))
    return DistLattice(poset, meet, join, bot, top)


#: row block used when filling set-lattice tables
_SET_LATTICE_CHUNK = 256


def set_lattice(masks: Sequence[int], labels: Sequence | None = None, *, reverse: bool = False) -> DistLattice:
    """The lattice formed by a family of sets closed under ``∪`` and ``∩``.

    Elements are ordered by inclusion (``reverse``: by reverse inclusion), so
    meet and join are intersection and union (swapped when reversed).  Union
    and intersection distribute over each other, so only closure of the family
    is checked; this scales to thousands of elements where the cubic check in
    :func:`validate_dist_lattice` does not.  Sets are bit-sets on at most 62
    points.
    """
    arr = np.array([int(m) for m in masks], dtype=np.int64)
    n = len(arr)
    if n == 0:
        raise NotALattice("the empty family has no top or bottom")
    if int(arr.max()).bit_length() > 62 or arr.min() < 0:
        raise ValueError("set_lattice supports bit-sets on at most 62 points")
    order = np.argsort(arr, kind="stable")
    ranked = arr[order]
    if (np.diff(ranked) == 0).any():
        raise ValueError("repeated set in family")
    dtype = np.int16 if n < 2**15 else np.int32
    cup = np.empty((n, n), dtype=dtype)
    cap = np.empty((n, n), dtype=dtype)
    incl = np.empty((n, n), dtype=bool)
    for lo in range(0, n, _SET_LATTICE_CHUNK):
        rows = arr[lo : lo + _SET_LATTICE_CHUNK, None]
        for vals, table, what in ((rows | arr[None, :], cup, "union"), (rows & arr[None, :], cap, "intersection")):
            pos = np.minimum(np.searchsorted(ranked, vals), n - 1)
            missing = ranked[pos] != vals
            if missing.any():
                i, j = (int(v) for v in np.argwhere(missing)[0])
                raise NotALattice(f"family not closed under {what}", witness=(lo + i, j))
            table[lo : lo + len(rows)] = order[pos]
        incl[lo : lo + len(rows)] = (rows & ~arr[None, :]) == 0
    leq, meet, join = (incl.T, cup, cap) if reverse else (incl, cap, cup)
    poset = Poset(leq, labels, check=False)
    bot = int(np.flatnonzero(poset.leq.all(axis=1))[0])
    top = int(np.flatnonzero(poset.leq.all(axis=0))[0])
    return DistLattice(poset, meet, join, bot, top)


# ---------------------------------------------------------------------------
# Standard posets and lattices


def chain_poset(n: int) -> Poset:
    return validate_poset(n, [(i, i + 1) for i in range(n - 1)])


def antichain(n: int) -> Poset:
    return validate_poset(n, [])


def chain(n: int) -> DistLattice:
    """The ``n``-element chain ``0 < 1 < ... < n-1``."""
    return validate_dist_lattice(chain_poset(n))


def two() -> DistLattice:
    return chain(2)


def boolean(k: int) -> DistLattice:
    """The powerset of a ``k``-set; element ``i`` is the subset with bit-set ``i``."""
    size = 1 << k
    idx = np.arange(size)
    leq = (idx[:, None] & ~idx[None, :]) == 0
    return validate_dist_lattice(Poset(leq, list(range(size)), check=False))


def diamond() -> Poset:
    """M3: bottom 0, atoms 1, 2, 3, top 4.  A lattice, not distributive."""
    return validate_poset(5, [(0, 1), (0, 2), (0, 3), (1, 4), (2, 4), (3, 4)])


def pentagon() -> Poset:
    """N5: 0 < 1 < 2 < 4 and 0 < 3 < 4."""
    return validate_poset(5, [(0, 1), (1, 2), (2, 4), (0, 3), (3, 4)])


def product_poset(a: Poset, b: Poset) -> Poset:
    """Componentwise order on ``a x b``; element ``i * b.n + j`` is ``(i, j)``."""
    leq = np.kron(a.leq.astype(np.int64), b.leq.astype(np.int64)).astype(bool)
    labels = [(i, j) for i in range(a.n) for j in range(b.n)]
    return Poset(leq, labels, check=False)


def downset_lattice(poset: Poset) -> DistLattice:
    """Downsets of ``poset`` ordered by inclusion, labelled by their bit-sets."""
    ds = downsets(poset)
    leq = np.array([[a & ~b == 0 for b in ds] for a in ds], dtype=bool)
    return validate_dist_lattice(Poset(leq, ds, check=False))


def iso_between(a: Poset, b: Poset) -> tuple[int, ...] | None:
    """An order isomorphism ``a -> b`` as a value tuple, or ``None``."""
    if a.n != b.n:
        return None
    sig_a = [(popcount(a.down[p]), popcount(a.up[p])) for p in range(a.n)]
    sig_b = [(popcount(b.down[p]), popcount(b.up[p])) for p in range(b.n)]
    if sorted(sig_a) != sorted(sig_b):
        return None
    vals = [-1] * a.n
    used = [False] * b.n

    def extend(p):
        if p == a.n:
            return True
        for q in range(b.n):
            if used[q] or sig_b[q] != sig_a[p]:
                continue
            if all(a.leq[p, r] == b.leq[q, vals[r]] and a.leq[r, p] == b.leq[vals[r], q] for r in range(p)):
                vals[p], used[q] = q, True
                if extend(p + 1):
                    return True
                used[q] = False
        return False

    return tuple(vals) if extend(0) else None


# ---------------------------------------------------------------------------
# Ideals, filters, prime ideals


def _closure_failure(table: np.ndarray, mask: int, n: int):
    """First pair of members of ``mask`` whose ``table`` value leaves it, or ``None``."""
    inside = bitvec(mask, n)
    el = np.flatnonzero(inside)
    out = ~inside[table[np.ix_(el, el)]]
    if not out.any():
        return None
    i, j = np.argwhere(out)[0]
    return int(el[i]), int(el[j])


@dataclass(frozen=True)
class Ideal:
    """A nonempty, downward closed, join-closed subset of a lattice."""

    lattice: DistLattice = field(compare=False, repr=False)
    mask: int

    def __post_init__(self):
        D, m = self.lattice, self.mask
        if m == 0:
            raise ValueError("ideals are nonempty")
        if not D.poset.is_downset(m):
            raise ValueError(f"{m:#b} is not downward closed")
        bad = _closure_failure(D.join_array, m, D.n)
        if bad is not None:
            raise ValueError(f"{m:#b} not closed under {bad[0]} ∨ {bad[1]}")

    def __contains__(self, p: int) -> bool:
        return bool(self.mask >> p & 1)

    @property
    def elements(self) -> tuple[int, ...]:
        return tuple(bits(self.mask))

    @property
    def proper(self) -> bool:
        return self.lattice.top not in self

    def __le__(self, other: Ideal) -> bool:
        return self.mask & ~other.mask == 0


@dataclass(frozen=True)
class Filter:
    """A nonempty, upward closed, meet-closed subset of a lattice."""

    lattice: DistLattice = field(compare=False, repr=False)
    mask: int

    def __post_init__(self):
        D, m = self.lattice, self.mask
        if m == 0:
            raise ValueError("filters are nonempty")
        if not D.poset.is_upset(m):
            raise ValueError(f"{m:#b} is not upward closed")
        bad = _closure_failure(D.meet_array, m, D.n)
        if bad is not None:
            raise ValueError(f"{m:#b} not closed under {bad[0]} ∧ {bad[1]}")

    def __contains__(self, p: int) -> bool:
        return bool(self.mask >> p & 1)

    @property
    def elements(self) -> tuple[int, ...]:
        return tuple(bits(self.mask))


def _is_prime_mask(D: DistLattice, mask: int) -> bool:
    """Proper, and ``p ∧ q`` in the set forces ``p`` or ``q`` in it."""
    outside = ~bitvec(mask, D.n)
    if not outside.any():
        return False
    # the complement of a downset is an upset, and a ∧ b only grows with a and b,
    # so meets of its minimal elements decide whether it is meet-closed
    below = np.count_nonzero(D.poset.leq[outside], axis=0)
    mins = np.flatnonzero(outside & (below == 1))
    return bool(outside[D.meet_array[np.ix_(mins, mins)]].all())


@dataclass(frozen=True)
class PrimeIdeal(Ideal):
    def __post_init__(self):
        super().__post_init__()
        if not _is_prime_mask(self.lattice, self.mask):
            raise ValueError(f"{self.mask:#b} is not a prime ideal")

    @classmethod
    def _trusted(cls, D: DistLattice, mask: int) -> PrimeIdeal:
        x = object.__new__(cls)
        object.__setattr__(x, "lattice", D)
        object.__setattr__(x, "mask", mask)
        return x


def principal_ideal(D: DistLattice, p: int) -> Ideal:
    return Ideal(D, D.poset.down[p])


def principal_filter(D: DistLattice, p: int) -> Filter:
    return Filter(D, D.poset.up[p])


# A nonempty join-closed subset of a finite lattice contains the join of all its
# elements, so every ideal (resp. filter) is principal; ↓p and ↑p enumerate them.


def ideals(D: DistLattice) -> list[Ideal]:
    return sorted((principal_ideal(D, p) for p in range(D.n)), key=lambda i: i.mask)


def filters(D: DistLattice) -> list[Filter]:
    return sorted((principal_filter(D, p) for p in range(D.n)), key=lambda f: f.mask)


def prime_ideals(D: DistLattice) -> list[PrimeIdeal]:
    """Prime ideals in bit-set order.

    Candidates are the principal ideals ``↓p`` with ``p`` below the top.  If
    the elements strictly above ``p`` have no least member, two of its upper
    covers meet in ``p`` while neither lies in ``↓p``, so ``↓p`` is skipped
    before the full primality test.
    """
    leq = D.poset.leq
    up_count = leq.sum(axis=1)
    out = []
    for p in range(D.n):
        above = leq[p].copy()
        above[p] = False
        if not above.any():
            continue
        if not (up_count[above] == above.sum()).any():
            continue
        # ↓p is always an ideal, so only primality needs testing
        mask = D.poset.down[p]
        if _is_prime_mask(D, mask):
            out.append(PrimeIdeal._trusted(D, mask))
    out.sort(key=lambda x: x.mask)
    return out


def ideal_lattice(D: DistLattice) -> DistLattice:
    """``idl(D)``: the ideals of ``D`` under inclusion, labelled by :class:`Ideal`."""
    ids = ideals(D)
    leq = [[I.mask & ~J.mask == 0 for J in ids] for I in ids]
    return validate_dist_lattice(Poset(leq, ids, check=False))


# ---------------------------------------------------------------------------
# Lattice homomorphisms


@dataclass(frozen=True)
class LatticeHom:
    """A map between distributive lattices preserving ∧, ∨, 0 and 1."""

    dom: DistLattice = field(repr=False, compare=False)
    cod: DistLattice = field(repr=False, compare=False)
    values: tuple[int, ...]

    def __post_init__(self):
        v = tuple(int(x) for x in self.values)
        object.__setattr__(self, "values", v)
        D, C = self.dom, self.cod
        if len(v) != D.n:
            raise ValueError(f"expected {D.n} values, got {len(v)}")
        if v[D.bot] != C.bot or v[D.top] != C.top:
            raise ValueError("bounds not preserved")
        for p in range(D.n):
            for q in range(p + 1, D.n):
                if v[D.meet[p][q]] != C.meet[v[p]][v[q]] or v[D.join[p][q]] != C.join[v[p]][v[q]]:
                    raise ValueError(f"lattice operations not preserved at ({p}, {q})")

    def __call__(self, p: int) -> int:
        return self.values[p]

    def as_map(self) -> MonotoneMap:
        return MonotoneMap(self.dom.poset, self.cod.poset, self.values)

    def preimage(self, mask: int) -> int:
        return mask_of(p for p, v in enumerate(self.values) if mask >> v & 1)


def lattice_homs(D: DistLattice, C: DistLattice, budget: int = DEFAULT_MAP_BUDGET) -> list[LatticeHom]:
    """Every bounded lattice homomorphism ``D -> C``, sorted by value tuple.

    The search assigns values along a linear extension of ``D`` and prunes by
    monotonicity, bounds, binary meets (checked as soon as the larger argument
    is placed) and binary joins (checked when the join itself is placed).
    ``budget`` caps the number of search nodes.
    """
    order = D.poset.linear_extension
    lower = [tuple(q for q in bits(D.poset.down[p]) if q != p) for p in range(D.n)]
    joins_at = [[] for _ in range(D.n)]
    for a in range(D.n):
        for b in range(a + 1, D.n):
            j = D.join[a][b]
            if j != a and j != b:
                joins_at[j].append((a, b))
    vals = [0] * D.n
    found = []
    nodes = 0

    def extend(k):
        nonlocal nodes
        if k == D.n:
            found.append(tuple(vals))
            return
        p = order[k]
        allowed = C.poset.full
        for q in lower[p]:
            allowed &= C.poset.up[vals[q]]
        if p == D.bot:
            allowed &= 1 << C.bot
        if p == D.top:
            allowed &= 1 << C.top
        for v in bits(allowed):
            nodes += 1
            if nodes > budget:
                raise BudgetExceeded(f"lattice hom search exceeded {budget} nodes")
            ok = True
            for k2 in range(k):
                x = order[k2]
                m = D.meet[x][p]
                vm = v if m == p else vals[m]
                if C.meet[vals[x]][v] != vm:
                    ok = False
                    break
            if ok:
                for a, b in joins_at[p]:
                    if C.join[vals[a]][vals[b]] != v:
                        ok = False
                        break
            if ok:
                vals[p] = v
                extend(k + 1)

    extend(0)
    found.sort()
    return [LatticeHom(D, C, v) for v in found]


# ---------------------------------------------------------------------------
# Separation lemmas


def max_ideal_disjoint(I: Ideal, F: Filter) -> PrimeIdeal:
    """A maximal ideal containing ``I`` and disjoint from ``F``.

    Several maximal ideals may qualify; the first in bit-set order is returned.
    The result is prime, and that is checked.
    """
    D = I.lattice
    if I.mask & F.mask:
        raise NotDisjoint("ideal and filter intersect", witness=next(bits(I.mask & F.mask)))
    cands = [J for J in ideals(D) if I.mask & ~J.mask == 0 and not J.mask & F.mask]
    maximal = [J for J in cands if not any(J.mask != K.mask and J.mask & ~K.mask == 0 for K in cands)]
    best = maximal[0]
    if not _is_prime_mask(D, best.mask):
        raise TheoremViolation("maximal ideal disjoint from a filter is not prime", witness=best.mask)
    return PrimeIdeal(D, best.mask)


def prime_separation(D: DistLattice, p: int, q: int) -> PrimeIdeal:
    """First prime ideal (bit-set order) containing ``q`` but not ``p``; needs ``p ≰ q``."""
    if D.le(p, q):
        raise OrderError(f"{p} <= {q}, nothing to separate", witness=(p, q))
    for x in prime_ideals(D):
        if q in x and p not in x:
            return x
    raise TheoremViolation(f"no prime ideal separates {p} from {q}", witness=(p, q))


def ideal_is_meet_of_primes(D: DistLattice, I: Ideal) -> tuple[bool, list[PrimeIdeal]]:
    """Whether ``I`` is the intersection of the primes above it, and those primes.

    The empty intersection is the whole lattice, which covers the improper ideal.
    """
    above = [x for x in prime_ideals(D) if I.mask & ~x.mask == 0]
    inter = D.poset.full
    for x in above:
        inter &= x.mask
    return inter == I.mask, above


def model_prime_correspondence(D: DistLattice) -> list[tuple[LatticeHom, PrimeIdeal]]:
    """Pair each model ``x: D -> 2`` with the prime ideal ``x^{-1}(0)``.

    Both sides are enumerated independently; a failure to biject raises
    :class:`TheoremViolation`.
    """
    models = lattice_homs(D, two())
    primes = {x.mask: x for x in prime_ideals(D)}
    table = []
    for x in models:
        zero = mask_of(p for p, v in enumerate(x.values) if v == 0)
        if zero not in primes:
            raise TheoremViolation("kernel of a model is not a prime ideal", witness=x.values)
        table.append((x, primes[zero]))
    if len({pr.mask for _, pr in table}) != len(table) or len(table) != len(primes):
        raise TheoremViolation("models and prime ideals do not biject", witness=(len(models), len(primes)))
    table.sort(key=lambda row: row[1].mask)
    return table

