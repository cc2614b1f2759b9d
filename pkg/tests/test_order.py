import itertools

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from oracles import (
    brute_downsets,
    brute_ideals,
    brute_join,
    brute_lattice_homs,
    brute_meet,
    brute_monotone,
    brute_primes,
    brute_upsets,
    chain_leq,
)
from strategies import posets
from ultraposets.errors import BudgetExceeded, CycleError, NotALattice, NotDisjoint, NotDistributive, NotMonotone, OrderError
from ultraposets.order import (
    Filter,
    Ideal,
    LatticeHom,
    MonotoneMap,
    Poset,
    antichain,
    boolean,
    chain,
    chain_poset,
    diamond,
    downset_lattice,
    downsets,
    filters,
    ideal_is_meet_of_primes,
    ideal_lattice,
    ideals,
    iso_between,
    lattice_homs,
    max_ideal_disjoint,
    model_prime_correspondence,
    monotone_maps,
    pentagon,
    prime_ideals,
    prime_separation,
    principal_filter,
    principal_ideal,
    product_poset,
    set_lattice,
    two,
    upsets,
    validate_dist_lattice,
    validate_poset,
)


def as_lists(P):
    return P.leq.tolist()


# validate_poset


def test_two_chain_from_generator():
    P = validate_poset(2, [(0, 1)])
    assert P.le(0, 1) and not P.le(1, 0)


def test_singleton_and_empty():
    assert validate_poset(1, []).n == 1
    assert validate_poset(0, []).n == 0


def test_cycle_rejected():
    with pytest.raises(CycleError):
        validate_poset(2, [(0, 1), (1, 0)])


def test_long_cycle_rejected_after_closure():
    with pytest.raises(CycleError):
        validate_poset(3, [(0, 1), (1, 2), (2, 0)])


def test_out_of_range_pair():
    with pytest.raises(IndexError):
        validate_poset(2, [(0, 2)])


def test_covers_closed_transitively():
    P = validate_poset(3, [(0, 1), (1, 2)])
    assert P.le(0, 2)
    assert P.covers() == ((0, 1), (1, 2))


def test_poset_rejects_nontransitive_matrix():
    leq = np.eye(3, dtype=bool)
    leq[0, 1] = leq[1, 2] = True
    with pytest.raises(ValueError):
        Poset(leq)


@given(posets())
def test_closure_is_partial_order(P):
    L = as_lists(P)
    n = P.n
    assert all(L[i][i] for i in range(n))
    assert all(not (L[i][j] and L[j][i]) or i == j for i in range(n) for j in range(n))
    assert all(not (L[i][j] and L[j][k]) or L[i][k] for i in range(n) for j in range(n) for k in range(n))


@given(posets())
def test_covers_regenerate_order(P):
    assert validate_poset(P.n, P.covers()) == P


# downsets


def test_downsets_of_small_chains():
    assert downsets(chain_poset(2)) == [0b00, 0b01, 0b11]
    assert len(downsets(chain_poset(3))) == len(brute_downsets(chain_leq(3))) == 4
    assert len(downsets(antichain(2))) == 4


@pytest.mark.parametrize("n", range(0, 7))
def test_downset_counts_of_chains_and_antichains(n):
    assert len(downsets(chain_poset(n))) == n + 1
    assert len(downsets(antichain(n))) == 2**n


@given(posets())
def test_downsets_match_brute_force(P):
    assert downsets(P) == brute_downsets(as_lists(P))
    assert sorted(upsets(P)) == brute_upsets(as_lists(P))


# lattices


def test_chain_is_lattice_with_min_max():
    D = chain(3)
    for a, b in itertools.product(range(3), repeat=2):
        assert D.meet[a][b] == min(a, b) and D.join[a][b] == max(a, b)


def test_diamond_not_distributive():
    M3 = diamond()
    L = as_lists(M3)
    # brute-force first failing triple in lexicographic order
    bad = next(
        (p, q, r)
        for p, q, r in itertools.product(range(5), repeat=3)
        if brute_meet(L, p, brute_join(L, q, r)) != brute_join(L, brute_meet(L, p, q), brute_meet(L, p, r))
    )
    with pytest.raises(NotDistributive) as info:
        validate_dist_lattice(M3)
    assert info.value.witness == bad


def test_pentagon_not_distributive():
    with pytest.raises(NotDistributive):
        validate_dist_lattice(pentagon())


def test_antichain_not_lattice():
    with pytest.raises(NotALattice):
        validate_dist_lattice(antichain(2))


def test_square_is_boolean():
    sq = validate_dist_lattice(product_poset(chain_poset(2), chain_poset(2)))
    assert sq.is_boolean
    assert iso_between(sq.poset, boolean(2).poset) is not None


@given(posets(4))
def test_downset_lattice_tables_match_brute_force(P):
    D = downset_lattice(P)
    L = as_lists(D.poset)
    for a, b in itertools.product(range(D.n), repeat=2):
        assert D.meet[a][b] == brute_meet(L, a, b)
        assert D.join[a][b] == brute_join(L, a, b)
    assert all(D.le(D.bot, p) and D.le(p, D.top) for p in range(D.n))


def test_boolean_complements():
    B = boolean(3)
    assert all(B.complement(p) == 7 - p for p in range(8))
    assert not chain(3).is_boolean


# ideals, filters, primes


def test_primes_of_three_chain():
    assert [x.mask for x in prime_ideals(chain(3))] == [0b001, 0b011]


def test_primes_of_boolean_square():
    ps = prime_ideals(boolean(2))
    assert len(ps) == 2
    a, b = ps
    assert not a <= b and not b <= a


def test_primes_of_two():
    assert [x.mask for x in prime_ideals(two())] == [0b01]


@given(posets(4))
def test_ideals_and_primes_match_brute_force(P):
    D = downset_lattice(P)
    L = as_lists(D.poset)
    assert [I.mask for I in ideals(D)] == brute_ideals(L)
    assert [x.mask for x in prime_ideals(D)] == brute_primes(L)


def test_filters_are_principal_upsets():
    D = chain(3)
    assert [F.mask for F in filters(D)] == [0b100, 0b110, 0b111]


def test_ideal_validation():
    D = chain(3)
    with pytest.raises(ValueError):
        Ideal(D, 0)
    with pytest.raises(ValueError):
        Ideal(D, 0b010)
    with pytest.raises(ValueError):
        Filter(D, 0b010)
    with pytest.raises(ValueError):
        Ideal(boolean(2), 0b0111)  # {0, 1, 2} misses 1 ∨ 2


# homs


def test_homs_two_to_two_is_identity():
    assert [h.values for h in lattice_homs(two(), two())] == [(0, 1)]


def test_homs_three_chain_to_two():
    assert [h.values for h in lattice_homs(chain(3), two())] == [(0, 0, 1), (0, 1, 1)]


def test_homs_two_to_three_chain():
    assert [h.values for h in lattice_homs(two(), chain(3))] == [(0, 2)]


@settings(max_examples=40, deadline=None)
@given(posets(3), posets(3))
def test_lattice_homs_match_brute_force(P, Q):
    D, C = downset_lattice(P), downset_lattice(Q)
    got = [h.values for h in lattice_homs(D, C)]
    assert got == brute_lattice_homs(as_lists(D.poset), as_lists(C.poset))


def test_hom_budget():
    with pytest.raises(BudgetExceeded):
        lattice_homs(boolean(3), boolean(3), budget=5)


def test_lattice_hom_validation():
    with pytest.raises(ValueError):
        LatticeHom(chain(3), two(), (0, 1, 0))


# monotone maps


def test_monotone_map_rejects_order_reversal():
    with pytest.raises(NotMonotone):
        MonotoneMap(chain_poset(2), chain_poset(2), (1, 0))


@given(posets(3), posets(3))
def test_monotone_maps_match_brute_force(P, Q):
    got = [m.values for m in monotone_maps(P, Q)]
    assert got == brute_monotone(as_lists(P), as_lists(Q))


def test_monotone_budget():
    with pytest.raises(BudgetExceeded):
        monotone_maps(antichain(6), antichain(6), budget=100)


# separation lemmas


def test_max_ideal_disjoint_examples():
    D = chain(3)
    x = max_ideal_disjoint(principal_ideal(D, 0), principal_filter(D, 2))
    assert x.mask == 0b011
    assert max_ideal_disjoint(principal_ideal(two(), 0), principal_filter(two(), 1)).mask == 0b01
    with pytest.raises(NotDisjoint):
        max_ideal_disjoint(principal_ideal(D, 1), principal_filter(D, 1))


def test_prime_separation_examples():
    assert prime_separation(chain(3), 1, 0).mask == 0b001
    B = boolean(2)
    x = prime_separation(B, 1, 2)
    assert 2 in x and 1 not in x
    assert prime_separation(two(), 1, 0).mask == 0b01
    with pytest.raises(OrderError):
        prime_separation(chain(3), 0, 1)


def test_ideal_meet_of_primes_examples():
    ok, above = ideal_is_meet_of_primes(chain(3), principal_ideal(chain(3), 0))
    assert ok and [x.mask for x in above] == [0b001, 0b011]
    B = boolean(2)
    ok, above = ideal_is_meet_of_primes(B, principal_ideal(B, 0))
    assert ok and len(above) == 2
    # the improper ideal is the empty intersection
    ok, above = ideal_is_meet_of_primes(B, principal_ideal(B, 3))
    assert ok and above == []


@given(posets(4))
def test_every_ideal_is_meet_of_primes(P):
    D = downset_lattice(P)
    for I in ideals(D):
        assert ideal_is_meet_of_primes(D, I)[0]
    for p, q in itertools.product(range(D.n), repeat=2):
        if not D.le(p, q):
            x = prime_separation(D, p, q)
            assert q in x and p not in x


@pytest.mark.parametrize("D, n", [(chain(3), 2), (two(), 1), (boolean(2), 2)])
def test_model_prime_correspondence(D, n):
    table = model_prime_correspondence(D)
    assert len(table) == n
    for hom, prime in table:
        assert {p for p, v in enumerate(hom.values) if v == 0} == set(prime.elements)


def test_ideal_lattice_of_chain():
    IL = ideal_lattice(chain(3))
    assert iso_between(IL.poset, chain_poset(3)) is not None


# set lattices


@given(posets(4), st.booleans())
def test_set_lattice_agrees_with_generic_tables(P, reverse):
    family = downsets(P)
    L = set_lattice(family, reverse=reverse)
    leq = [[(b & ~a == 0) if reverse else (a & ~b == 0) for b in family] for a in family]
    G = validate_dist_lattice(Poset(leq, check=False))
    assert np.array_equal(L.poset.leq, G.poset.leq)
    assert np.array_equal(L.meet_array, np.array(G.meet)) and np.array_equal(L.join_array, np.array(G.join))
    assert (L.bot, L.top) == (G.bot, G.top)
    assert [x.mask for x in prime_ideals(L)] == [x.mask for x in prime_ideals(G)]


def test_set_lattice_rejects_unclosed_family():
    with pytest.raises(NotALattice):
        set_lattice([0b00, 0b01, 0b10])
    with pytest.raises(ValueError):
        set_lattice([0b01, 0b01])
