"""Closed subsets of ultraposets, complemented closed pairs, and the patch topology.

``K`` is closed when ``f^{-1}(K) ∈ μ`` forces ``⟨f, μ⟩ ∈ K``.  The probes are
the tabulated pairings of :func:`~ultraposets.axioms.pair_table`; each probe
``(f, δ_s)`` turns into the implication ``f(s) ∈ K ⇒ ⟨f, δ_s⟩ ∈ K``, and a
subset is closed iff it respects every implication.

Finite probes are exact.  By locality along ``{s} ↪ S`` the pairing
``⟨f, δ_s⟩`` equals the ultrapower of ``f(s)`` on a one-point set, and
:func:`~ultraposets.axioms.check_axioms` asserts that such ultrapowers are
trivial.  So already ``max_s = 1`` sees every constraint an infinite index
set could impose.
"""

from __future__ import annotations

from dataclasses import dataclass

from .axioms import _families, pair_table
from .errors import BudgetExceeded, TheoremViolation
from .order import DistLattice, bits, downsets, mask_of, popcount, upsets
from .structures import ModSpectrum, Ultraposet

#: largest carrier for which :func:`closed_sets` walks the full powerset
POWERSET_CAP = 20


def _implications(U: Ultraposet, max_s: int) -> tuple[tuple[int, int], ...]:
    key = ("implications", max_s)
    if key in U._memo:
        return U._memo[key]
    pairs = set()
    for k in range(1, max_s + 1):
        fams = _families(U.n, k)
        if not len(fams):
            continue
        tk = pair_table(U, k)
        for s in range(k):
            pairs.update(zip(fams[:, s].tolist(), tk[s].tolist()))
    out = tuple(sorted((a, b) for a, b in pairs if a != b))
    U._memo[key] = out
    return out


def is_closed(U: Ultraposet, K: int, max_s: int = 2) -> bool:
    return all(not (K >> a & 1) or K >> b & 1 for a, b in _implications(U, max_s))


def closed_sets(U: Ultraposet, max_s: int = 2, cap: int = POWERSET_CAP) -> list[int]:
    """``Cl(U)`` as bit-sets in ascending order."""
    if U.n > cap:
        raise BudgetExceeded(f"powerset of {U.n} points exceeds cap {cap}")
    return [K for K in range(1 << U.n) if is_closed(U, K, max_s)]


def clc(U: Ultraposet, max_s: int = 2) -> list[int]:
    """Closed downsets."""
    return [K for K in downsets(U.carrier) if is_closed(U, K, max_s)]


def cld(U: Ultraposet, max_s: int = 2) -> list[int]:
    """Closed upsets."""
    return [K for K in upsets(U.carrier) if is_closed(U, K, max_s)]


@dataclass(frozen=True)
class ClosedPair:
    """A closed downset with its complement, which is a closed upset.

    Ordered by reverse inclusion of the downset.
    """

    down: int
    up: int

    def __le__(self, other: ClosedPair) -> bool:
        return other.down & ~self.down == 0

    def to_dict(self) -> dict:
        return {"down": list(bits(self.down)), "up": list(bits(self.up))}


def clcd(U: Ultraposet, max_s: int = 2) -> list[ClosedPair]:
    """Complemented pairs ``(K, K̄)`` with ``K ∈ clc`` and ``K̄ ∈ cld``.

    Listed from the largest downset to the smallest (ties by bit-set).
    """
    full = U.carrier.full
    up_closed = set(cld(U, max_s))
    pairs = [ClosedPair(K, full & ~K) for K in clc(U, max_s) if full & ~K in up_closed]
    pairs.sort(key=lambda x: (-popcount(x.down), x.down))
    return pairs


def patch_closures(U: Ultraposet, max_s: int = 2) -> list[int]:
    """Closure of each point in the patch topology.

    The subbasic closed sets are ``K`` and ``K̄`` for ``(K, K̄) ∈ clcd(U)``.  On
    a finite set the closure of ``y`` is the intersection of the subbasic sets
    holding ``y``, and a set is closed iff it contains the closure of each of
    its points.
    """
    full = U.carrier.full
    sub = [x for p in clcd(U, max_s) for x in (p.down, p.up)]
    out = []
    for y in range(U.n):
        c = full
        for S in sub:
            if S >> y & 1:
                c &= S
        out.append(c)
    return out


def patch_topology(U: Ultraposet, max_s: int = 2, cap: int = POWERSET_CAP) -> list[int]:
    """Closed sets of the patch topology, in ascending bit-set order."""
    if U.n > cap:
        raise BudgetExceeded(f"powerset of {U.n} points exceeds cap {cap}")
    cl = patch_closures(U, max_s)
    return [K for K in range(1 << U.n) if all(cl[y] & ~K == 0 for y in bits(K))]


@dataclass
class PrimitivePairs:
    """``(C_p, D_p)`` in ``[D, 2]`` and ``(B_p, O_p)`` in ``Mod(D)`` for every ``p ∈ D``.

    ``[D, 2]`` is read as the downsets of ``D`` (preimages of 0), listed in
    ``points``; ``C[p]`` and ``Dp[p]`` are bit-sets over that list, ``B[p]``
    and ``O[p]`` over ``spectrum`` carrier indices.
    """

    lattice: DistLattice
    points: list[int]
    spectrum: ModSpectrum
    C: list[int]
    Dp: list[int]
    B: list[int]
    O: list[int]  # noqa: E741


def primitive_pairs(D: DistLattice, spectrum: ModSpectrum | None = None) -> PrimitivePairs:
    """Compute the primitive subsets and check how they interact with ``∧`` and ``∨``."""
    M = spectrum if spectrum is not None else ModSpectrum(D)
    zero_sets = downsets(D.poset)
    full = (1 << len(zero_sets)) - 1
    C = [mask_of(k for k, z in enumerate(zero_sets) if z >> p & 1) for p in range(D.n)]
    Dp = [full & ~c for c in C]
    # Mod(D) sits inside [D, 2]: prime ideal x is the zero set of a map
    where = {z: k for k, z in enumerate(zero_sets)}
    embed = [where[x.mask] for x in M.primes]
    B = [mask_of(j for j, k in enumerate(embed) if c >> k & 1) for c in C]
    O = [M.carrier.full & ~b for b in B]  # noqa: E741
    for p in range(D.n):
        if B[p] != M.B(p):
            raise TheoremViolation("B_p disagrees with the prime table", witness=p)
        for q in range(D.n):
            j, m = D.join[p][q], D.meet[p][q]
            checks = (
                B[j] == B[p] & B[q],
                B[m] == B[p] | B[q],
                O[j] == O[p] | O[q],
                O[m] == O[p] & O[q],
            )
            if not all(checks):
                raise TheoremViolation("primitive subsets do not turn joins into intersections", witness=(p, q))
    return PrimitivePairs(D, zero_sets, M, C, Dp, B, O)

