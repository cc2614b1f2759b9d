"""Brute-force reference implementations used as test oracles.

Nothing here imports the package: every routine enumerates raw subsets or raw
functions and checks definitions directly, so agreement with the library is
a genuine second route to each value.
"""

from __future__ import annotations

import itertools


def subsets(n):
    return range(1 << n)


def members(mask):
    i = 0
    while mask:
        if mask & 1:
            yield i
        mask >>= 1
        i += 1


def is_down(leq, K):
    n = len(leq)
    return all(not (K >> j & 1) or K >> i & 1 for i in range(n) for j in range(n) if leq[i][j])


def brute_downsets(leq):
    return [K for K in subsets(len(leq)) if is_down(leq, K)]


def brute_upsets(leq):
    n = len(leq)
    return [K for K in subsets(n) if all(not (K >> i & 1) or K >> j & 1 for i in range(n) for j in range(n) if leq[i][j])]


def brute_meet(leq, a, b):
    n = len(leq)
    lower = [c for c in range(n) if leq[c][a] and leq[c][b]]
    best = [c for c in lower if all(leq[d][c] for d in lower)]
    return best[0] if best else None


def brute_join(leq, a, b):
    n = len(leq)
    upper = [c for c in range(n) if leq[a][c] and leq[b][c]]
    best = [c for c in upper if all(leq[c][d] for d in upper)]
    return best[0] if best else None


def brute_ideals(leq):
    """Nonempty downsets closed under binary joins."""
    out = []
    for K in subsets(len(leq)):
        el = list(members(K))
        if el and is_down(leq, K) and all(K >> brute_join(leq, a, b) & 1 for a in el for b in el):
            out.append(K)
    return out


def brute_primes(leq):
    """Proper ideals ``I`` with ``a ∧ b ∈ I ⇒ a ∈ I or b ∈ I``."""
    n = len(leq)
    full = (1 << n) - 1
    out = []
    for I in brute_ideals(leq):
        if I == full:
            continue
        if all(not (I >> brute_meet(leq, a, b) & 1) or I >> a & 1 or I >> b & 1 for a in range(n) for b in range(n)):
            out.append(I)
    return out


def brute_monotone(leq_a, leq_b):
    na, nb = len(leq_a), len(leq_b)
    return [
        f
        for f in itertools.product(range(nb), repeat=na)
        if all(not leq_a[i][j] or leq_b[f[i]][f[j]] for i in range(na) for j in range(na))
    ]


def brute_lattice_homs(leq_a, leq_b):
    """All maps preserving binary meets, joins, bottom and top."""
    na, nb = len(leq_a), len(leq_b)
    bot_a = next(x for x in range(na) if all(leq_a[x][y] for y in range(na)))
    top_a = next(x for x in range(na) if all(leq_a[y][x] for y in range(na)))
    bot_b = next(x for x in range(nb) if all(leq_b[x][y] for y in range(nb)))
    top_b = next(x for x in range(nb) if all(leq_b[y][x] for y in range(nb)))
    out = []
    for f in itertools.product(range(nb), repeat=na):
        if f[bot_a] != bot_b or f[top_a] != top_b:
            continue
        if all(
            f[brute_meet(leq_a, x, y)] == brute_meet(leq_b, f[x], f[y])
            and f[brute_join(leq_a, x, y)] == brute_join(leq_b, f[x], f[y])
            for x in range(na)
            for y in range(na)
        ):
            out.append(f)
    return out


def brute_ultrafilters(m):
    """Every family of subsets of ``{0..m-1}`` satisfying the ultrafilter axioms."""
    full = (1 << m) - 1
    out = []
    for fam_mask in range(1 << (1 << m)):
        fam = {A for A in subsets(m) if fam_mask >> A & 1}
        if full not in fam:
            continue
        if any(B not in fam for A in fam for B in subsets(m) if A & ~B == 0):
            continue
        if any(A & B not in fam for A in fam for B in fam):
            continue
        if any((A in fam) == ((full & ~A) in fam) for A in subsets(m)):
            continue
        out.append(frozenset(fam))
    return out


def chain_leq(n):
    return [[i <= j for j in range(n)] for i in range(n)]


def powerset_leq(k):
    n = 1 << k
    return [[a & ~b == 0 for b in range(n)] for a in range(n)]


def labelled_poset_count(n):
    """Number of partial orders on ``{0..n-1}``: each pair is unrelated or ordered one way."""
    pairs = list(itertools.combinations(range(n), 2))
    count = 0
    for states in itertools.product((0, 1, 2), repeat=len(pairs)):
        lt = [[False] * n for _ in range(n)]
        for (i, j), s in zip(pairs, states):
            if s == 1:
                lt[i][j] = True
            elif s == 2:
                lt[j][i] = True
        if all(not (lt[i][j] and lt[j][k]) or lt[i][k] for i in range(n) for j in range(n) for k in range(n)):
            count += 1
    return count


def automorphisms(leq):
    n = len(leq)
    return sum(
        1 for p in itertools.permutations(range(n)) if all(leq[i][j] == leq[p[i]][p[j]] for i in range(n) for j in range(n))
    )
