import math

import pytest

from oracles import automorphisms, labelled_poset_count
from ultraposets.corpus import lattice_corpus, posets_up_to_iso, ultraposet_corpus
from ultraposets.order import iso_between


def by_size(max_size):
    counts = [0] * (max_size + 1)
    for P in posets_up_to_iso(max_size):
        counts[P.n] += 1
    return counts


def test_counts_up_to_five():
    assert by_size(5) == [1, 1, 2, 5, 16, 63]


@pytest.mark.parametrize("n", range(0, 5))
def test_orbit_sum_matches_labelled_count(n):
    # each unlabelled poset accounts for n!/|Aut| labelled ones
    reps = [P for P in posets_up_to_iso(n) if P.n == n]
    total = sum(math.factorial(n) // automorphisms(P.leq.tolist()) for P in reps)
    assert total == labelled_poset_count(n)


def test_representatives_pairwise_non_isomorphic():
    reps = [P for P in posets_up_to_iso(4) if P.n == 4]
    for i, a in enumerate(reps):
        for b in reps[i + 1 :]:
            assert iso_between(a, b) is None


def test_lattice_corpus_sizes():
    L = lattice_corpus(5)
    assert len(L) == 88
    assert max(D.n for D in L) == 32


def test_ultraposet_corpus_is_deterministic():
    a = [it.name for it in ultraposet_corpus(3)]
    b = [it.name for it in ultraposet_corpus(3)]
    assert a == b and len(set(a)) == len(a)
    assert a[:2] == ["terminal", "initial"]
