import pytest
from hypothesis import given

from oracles import brute_downsets, brute_upsets
from strategies import posets
from ultraposets.errors import BudgetExceeded
from ultraposets.order import boolean, chain, downset_lattice
from ultraposets.structures import CanonicalUltraposet, DiscreteUltraposet, ModSpectrum, PresheafUltraposet, canonical_two, terminal
from ultraposets.topology import (
    ClosedPair,
    clc,
    clcd,
    cld,
    closed_sets,
    is_closed,
    patch_closures,
    patch_topology,
    primitive_pairs,
)


def test_closed_sets_are_powerset():
    for U in (CanonicalUltraposet(chain(3)), DiscreteUltraposet(3), ModSpectrum(boolean(2))):
        assert closed_sets(U) == list(range(1 << U.n))


def test_closed_sets_cap():
    with pytest.raises(BudgetExceeded):
        closed_sets(DiscreteUltraposet(4), cap=3)


def test_spectrum_of_three_chain():
    M = ModSpectrum(chain(3))
    assert clc(M) == [0b00, 0b10, 0b11]
    pairs = clcd(M)
    assert [p.down for p in pairs] == [0b11, 0b10, 0b00]
    assert pairs[1].to_dict() == {"down": [1], "up": [0]}
    assert patch_topology(M) == [0, 1, 2, 3]


def test_patch_topology_of_point():
    assert patch_topology(terminal()) == [0, 1]


def test_closed_pair_order_is_reverse_inclusion():
    big, small = ClosedPair(0b11, 0), ClosedPair(0b01, 0b10)
    assert big <= small and not small <= big


@given(posets(4))
def test_closed_down_and_up_sets_match_brute_force(P):
    U = ModSpectrum(downset_lattice(P))
    leq = U.carrier.leq.tolist()
    assert clc(U) == brute_downsets(leq)
    assert sorted(cld(U)) == brute_upsets(leq)
    assert all(is_closed(U, K) for K in range(1 << U.n))
    # every point closure in the patch topology is the point itself
    assert patch_closures(U) == [1 << y for y in range(U.n)]


@given(posets(4))
def test_clc_closed_under_union_and_intersection(P):
    U = CanonicalUltraposet(downset_lattice(P))
    ks = set(clc(U))
    assert all(a | b in ks and a & b in ks for a in ks for b in ks)
    for p in range(U.n):
        assert U.carrier.down[p] in ks
        assert U.carrier.up[p] in set(cld(U))


def test_primitive_pairs_of_three_chain():
    pp = primitive_pairs(chain(3))
    assert pp.B == [0b11, 0b10, 0b00]
    assert pp.O == [0b00, 0b01, 0b11]
    assert pp.points == [0b000, 0b001, 0b011, 0b111]


def test_primitive_pairs_of_square():
    pp = primitive_pairs(boolean(2))
    assert pp.B[3] == 0 and pp.B[0] == 0b11
    assert pp.B[1] | pp.B[2] == 0b11 and pp.B[1] & pp.B[2] == 0


@given(posets(4))
def test_primitive_pairs_are_complementary(P):
    D = downset_lattice(P)
    pp = primitive_pairs(D)
    full_points = (1 << len(pp.points)) - 1
    for p in range(D.n):
        assert pp.C[p] | pp.Dp[p] == full_points and pp.C[p] & pp.Dp[p] == 0
        assert pp.B[p] & pp.O[p] == 0


def test_presheaf_closed_sets():
    U = PresheafUltraposet(chain(2).poset, canonical_two())
    assert clc(U) == [0b000, 0b001, 0b011, 0b111]
