"""The ultrafilter monad on finite sets.

An ultrafilter on ``S = {0..m-1}`` is stored as its full family of member
subsets (bit-sets), so the membership formulas below run exactly as written.
Every ultrafilter on a finite set is principal; the constructor finds that
point and keeps it as ``witness``.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Sequence, Union

from .errors import BudgetExceeded, ShapeError, TheoremViolation
from .order import bits, mask_of
from .report import Check

#: largest carrier on which :func:`enumerate_ultrafilters` runs its brute force
ENUMERATION_CAP = 4


def is_ultrafilter(family: Iterable[int], m: int) -> Check:
    """Check the four ultrafilter axioms on a family of subsets of ``{0..m-1}``.

    On failure the witness is ``(axiom, data)`` for the first violation, with
    axioms tried in the order: contains S, upward closed, closed under
    intersection, dichotomy.
    """
    fam = frozenset(family)
    full = (1 << m) - 1
    stray = [A for A in fam if A & ~full or A < 0]
    if stray:
        return Check(False, ("not a subset", min(stray)))
    if full not in fam:
        return Check(False, ("contains S", full))
    members = sorted(fam)
    for A in members:
        for B in range(full + 1):
            if A & ~B == 0 and B not in fam:
                return Check(False, ("upward closed", (A, B)))
    for i, A in enumerate(members):
        for B in members[i:]:
            if A & B not in fam:
                return Check(False, ("intersection", (A, B)))
    for A in range(full + 1):
        if (A in fam) == ((full & ~A) in fam):
            return Check(False, ("dichotomy", A))
    return Check(True)


class Ultrafilter:
    """An ultrafilter on a finite set ``{0..m-1}``."""

    __slots__ = ("m", "family", "witness")

    def __init__(self, m: int, family: Iterable[int], witness: int | None = None):
        fam = frozenset(family)
        check = is_ultrafilter(fam, m)
        if not check:
            raise ValueError(f"not an ultrafilter on {m} points: {check.witness}")
        core = (1 << m) - 1
        for A in fam:
            core &= A
        pts = list(bits(core))
        if len(pts) != 1:
            raise TheoremViolation("ultrafilter on a finite set is not principal", witness=sorted(fam))
        if witness is not None and witness != pts[0]:
            raise ValueError(f"family is principal at {pts[0]}, not {witness}")
        self.m = m
        self.family = fam
        self.witness = pts[0]

    @classmethod
    def _trusted(cls, m: int, family: frozenset, witness: int) -> Ultrafilter:
        uf = object.__new__(cls)
        uf.m, uf.family, uf.witness = m, family, witness
        return uf

    def __contains__(self, A: int) -> bool:
        return A in self.family

    def __eq__(self, other):
        return isinstance(other, Ultrafilter) and self.m == other.m and self.family == other.family

    def __hash__(self):
        return hash((self.m, self.witness))

    def __repr__(self):
        return f"δ_{self.witness}/{self.m}"

    def sets(self) -> list[int]:
        return sorted(self.family)

    def to_dict(self) -> dict:
        return {"m": self.m, "principal": self.witness}


@lru_cache(maxsize=None)
def principal(s: int, m: int) -> Ultrafilter:
    """``δ_s = {A ⊆ S : s ∈ A}``."""
    if not 0 <= s < m:
        raise IndexError(f"point {s} outside a {m}-element set")
    fam = frozenset(A for A in range(1 << m) if A >> s & 1)
    return Ultrafilter._trusted(m, fam, s)


@lru_cache(maxsize=None)
def beta(m: int) -> tuple[Ultrafilter, ...]:
    """``βS`` for ``|S| = m``, materialised as ``(δ_0, ..., δ_{m-1})``."""
    return tuple(principal(s, m) for s in range(m))


def enumerate_ultrafilters(m: int, cap: int = ENUMERATION_CAP) -> list[Ultrafilter]:
    """All ultrafilters on ``m`` points, found by brute force.

    An ultrafilter picks one set from every complementary pair ``{A, S∖A}``;
    all ``2^(2^(m-1))`` such choices are tried.  The result is checked to be
    exactly the principal ultrafilters.
    """
    if m > cap:
        raise BudgetExceeded(f"brute-force ultrafilter enumeration capped at m={cap}")
    if m == 0:
        return []
    full = (1 << m) - 1
    pairs = [(A, full & ~A) for A in range(1 << m) if A < full & ~A]
    found = []
    for choice in itertools.product((0, 1), repeat=len(pairs)):
        fam = [pair[c] for pair, c in zip(pairs, choice)]
        if is_ultrafilter(fam, m):
            found.append(Ultrafilter(m, fam))
    found.sort(key=lambda u: u.witness)
    if found != list(beta(m)):
        raise TheoremViolation("non-principal ultrafilter on a finite set", witness=found)
    return found


@dataclass(frozen=True)
class UltraFamily:
    """A map ``T -> βS``: one ultrafilter on ``S`` per index ``t``."""

    carrier_size: int
    members: tuple[Ultrafilter, ...]

    def __post_init__(self):
        object.__setattr__(self, "members", tuple(self.members))
        for u in self.members:
            if u.m != self.carrier_size:
                raise ShapeError(f"member {u!r} is not on {self.carrier_size} points")

    @classmethod
    def of(cls, members: Sequence[Ultrafilter], carrier_size: int | None = None) -> UltraFamily:
        if carrier_size is None:
            if not members:
                raise ShapeError("carrier size of an empty family must be given")
            carrier_size = members[0].m
        return cls(carrier_size, tuple(members))

    @property
    def index_size(self) -> int:
        return len(self.members)

    def __len__(self):
        return len(self.members)

    def __getitem__(self, t: int) -> Ultrafilter:
        return self.members[t]

    def __iter__(self):
        return iter(self.members)


def delta_family(m: int) -> UltraFamily:
    """The unit ``δ : S -> βS``."""
    return UltraFamily(m, beta(m))


def preimage(i: Sequence[int], V: int) -> int:
    return mask_of(s for s, t in enumerate(i) if V >> t & 1)


def pushforward(i: Sequence[int], mu: Ultrafilter, n: int) -> Ultrafilter:
    """``i_*μ = {V ⊆ T : i^{-1}(V) ∈ μ}`` for ``i : S -> T`` with ``|T| = n``."""
    if len(i) != mu.m:
        raise ShapeError(f"map has {len(i)} entries, ultrafilter is on {mu.m} points")
    if any(not 0 <= t < n for t in i):
        raise ShapeError("map leaves its codomain")
    return Ultrafilter(n, (V for V in range(1 << n) if preimage(i, V) in mu))


def kleisli_pair(mu: UltraFamily, nu: Union[Ultrafilter, UltraFamily]):
    """``⟨μ, ν⟩``: ``A ∈ ⟨μ,ν⟩`` iff ``{t : A ∈ μ_t} ∈ ν``.

    ``mu`` is a family ``T -> βS``.  With ``nu`` an ultrafilter on ``T`` the
    result is an ultrafilter on ``S``; with ``nu`` a family ``R -> βT`` it is
    the family ``r -> ⟨μ, ν_r⟩``.
    """
    if isinstance(nu, UltraFamily):
        return UltraFamily(mu.carrier_size, tuple(kleisli_pair(mu, v) for v in nu))
    if nu.m != mu.index_size:
        raise ShapeError(f"ν is on {nu.m} points but μ has {mu.index_size} indices")
    m = mu.carrier_size
    fam = []
    for A in range(1 << m):
        idx = mask_of(t for t, u in enumerate(mu.members) if A in u)
        if idx in nu:
            fam.append(A)
    return Ultrafilter(m, fam)


def gamma(theta: Ultrafilter, m: int) -> Ultrafilter:
    """Monad multiplication: ``γ(θ) = {A : {μ ∈ βS : A ∈ μ} ∈ θ}``.

    ``theta`` lives on the materialised ``βS = beta(m)``.
    """
    bs = beta(m)
    if theta.m != len(bs):
        raise ShapeError(f"θ must live on the {len(bs)} points of βS")
    fam = []
    for A in range(1 << m):
        idx = mask_of(k for k, u in enumerate(bs) if A in u)
        if idx in theta:
            fam.append(A)
    return Ultrafilter(m, fam)


def restrict(mu: Ultrafilter, W: int) -> Ultrafilter:
    """The ultrafilter ``ν`` on ``W`` (re-indexed ascending) with ``i_*ν = μ``.

    Needs ``W ∈ μ``; ``i`` is the inclusion of ``W`` into ``S``.
    """
    if W not in mu:
        raise ValueError("restriction needs W ∈ μ")
    pts = list(bits(W))
    k = len(pts)

    def squash(A):
        return mask_of(j for j, s in enumerate(pts) if A >> s & 1)

    return Ultrafilter(k, {squash(A & W) for A in mu.family})


def has_fip(sets: Sequence[int], m: int) -> bool:
    """Finite intersection property (for a finite family: the whole family meets)."""
    core = (1 << m) - 1
    for A in sets:
        core &= A
    return core != 0


def extend_fip(sets: Sequence[int], m: int) -> Ultrafilter:
    """An ultrafilter containing every set of a family with the finite intersection property.

    Greedy maximal extension: walk all subsets in bit-set order and keep each
    one that leaves the generated filter proper.
    """
    if not has_fip(sets, m):
        raise ValueError("family lacks the finite intersection property")
    core = (1 << m) - 1
    for A in sets:
        core &= A
    for A in range(1 << m):
        if core & A:
            core &= A
    fam = [B for B in range(1 << m) if core & ~B == 0]
    uf = Ultrafilter(m, fam)
    if any(A not in uf for A in sets):
        raise TheoremViolation("extension lost a generator", witness=list(sets))
    return uf
