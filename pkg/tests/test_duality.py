import pytest
from hypothesis import given, settings

from oracles import brute_downsets, brute_primes
from strategies import posets
from ultraposets.axioms import hom_poset
from ultraposets.duality import (
    counit,
    duality_on_homs,
    eta,
    frame_hom_bijection,
    galois,
    galois_inv,
    is_zero_dimensional,
    los_hom_check,
    mod_on_hom,
    mod_spectrum,
    omega,
    omega_u,
    omega_u_map,
    priestley_check,
    pt_bijection,
    pt_on_frame_hom,
    reconstruct_idl,
    stone_check,
    strict_assoc_check,
    triangle_identities,
    verify_iso,
)
from ultraposets.errors import IsoFailure
from ultraposets.order import (
    LatticeHom,
    MonotoneMap,
    boolean,
    chain,
    downset_lattice,
    ideal_lattice,
    iso_between,
    lattice_homs,
    principal_ideal,
    two,
)
from ultraposets.structures import CanonicalUltraposet, DiscreteUltraposet, ModSpectrum, canonical_two, terminal


def test_spectrum_of_three_chain():
    res = mod_spectrum(chain(3))
    d = res.to_dict()
    assert d["primes"] == [[0], [0, 1]]
    assert d["covers"] == [[1, 0]]
    assert res.probes > 0


def test_spectrum_of_square_is_antichain():
    res = mod_spectrum(boolean(2))
    assert res.spectrum.carrier.is_antichain and res.spectrum.n == 2


def test_spectrum_of_one_element_lattice_is_empty():
    assert mod_spectrum(chain(1)).spectrum.n == 0


@given(posets(4))
def test_spectrum_recovers_the_poset(P):
    # primes of a downset lattice are the sets missing one point; reverse inclusion flips the order
    D = downset_lattice(P)
    M = mod_spectrum(D).spectrum
    assert [x.mask for x in M.primes] == brute_primes(D.poset.leq.tolist())
    assert iso_between(M.carrier, P.dual()) is not None


def test_los_two_points():
    rep = los_hom_check(2)
    assert rep.ok and rep.ultrafilters == 2
    assert rep.non_ultra == [(0b11, {"law": "join", "x": [1, 0], "y": [0, 1], "pair_of_join": 1})]


@pytest.mark.parametrize("m", [1, 2, 3])
def test_los_counts(m):
    rep = los_hom_check(m)
    assert rep.ok
    # proper filters on m points are principal on a nonempty set; the non-ultra ones have at least two points
    assert len(rep.non_ultra) == 2**m - 1 - m


def test_mod_on_hom_examples():
    up = LatticeHom(two(), chain(3), (0, 2))
    assert mod_on_hom(up).values == (0, 0)
    # a ↦ 1 pulls the prime {0} of 2 back to {0}; a ↦ 0 pulls it back to {0, a}
    assert mod_on_hom(LatticeHom(chain(3), two(), (0, 1, 1))).values == (0,)
    assert mod_on_hom(LatticeHom(chain(3), two(), (0, 0, 1))).values == (1,)


def test_omega_u_examples():
    assert omega_u(DiscreteUltraposet(2)).lattice.n == 4
    assert omega_u(terminal()).lattice.n == 2
    assert omega_u(DiscreteUltraposet(2)).lattice.is_boolean


def test_omega_of_spectrum_is_reverse_inclusion():
    Om = omega(ModSpectrum(chain(3)))
    assert list(Om.labels) == [0b00, 0b10, 0b11]
    assert Om.top == 0 and Om.bot == 2


def test_omega_u_map_of_identity():
    U = CanonicalUltraposet(chain(3))
    OU = omega_u(U)
    h = omega_u_map(MonotoneMap(U.carrier, U.carrier, (0, 1, 2)), OU, OU)
    assert h.values == tuple(range(OU.lattice.n))


def test_galois_examples():
    D = chain(3)
    M = ModSpectrum(D)
    assert galois(principal_ideal(D, 0), M) == 0b11
    assert galois(principal_ideal(D, 1), M) == 0b10
    assert galois(principal_ideal(D, 2), M) == 0
    assert galois_inv(0, M).mask == D.poset.full
    assert galois_inv(0b11, M).mask == 0b001


@given(posets(4))
def test_reconstruction_and_counit(P):
    D = downset_lattice(P)
    M = ModSpectrum(D)
    w = reconstruct_idl(D, M)
    assert w.dom_size == w.cod_size == D.n
    c = counit(D, M)
    assert c.witness.bijection == c.hom.values
    # every downset of Mod D is closed, so the counit target has |O(Mod D)| = |D| elements
    assert len(brute_downsets(M.carrier.leq.tolist())) == c.omega.lattice.n == D.n


def test_counit_of_three_chain():
    c = counit(chain(3))
    assert [c.omega.pairs[c.hom(p)].down for p in range(3)] == [0b11, 0b10, 0b00]


def test_verify_iso_rejects_non_bijection():
    with pytest.raises(IsoFailure):
        verify_iso("x", "covariant", chain(3), chain(3), (0, 0, 2))


def test_eta_on_discrete():
    e = eta(DiscreteUltraposet(2))
    assert e.iso and e.ultrafunctor and e.zero_dimensional


def test_zero_dimensional_witness():
    z = is_zero_dimensional(CanonicalUltraposet(chain(2)))
    assert z and z.witness == [[1, 0, [0]]]


def test_strict_assoc_and_priestley():
    U = ModSpectrum(boolean(2))
    assert strict_assoc_check(U)
    assert priestley_check(U)


@pytest.mark.parametrize("D, expect", [(two(), (True, True)), (boolean(3), (True, True)), (chain(3), (False, False))])
def test_stone_check(D, expect):
    assert stone_check(D) == expect


@pytest.mark.parametrize("D", [chain(3), boolean(2), two()])
def test_points_are_primes(D):
    check = pt_bijection(D)
    assert check and sorted(check.witness) == list(range(len(ModSpectrum(D).primes)))


def test_pt_on_identity_frame_hom():
    D = chain(3)
    M = ModSpectrum(D)
    IL = ideal_lattice(D)
    g = LatticeHom(IL, IL, tuple(range(IL.n)))
    assert pt_on_frame_hom(g, M, M).values == tuple(range(M.n))


def test_triangle_identities():
    assert triangle_identities(U=CanonicalUltraposet(chain(3)), D=boolean(2))


@settings(max_examples=10)
@given(posets(3), posets(3))
def test_homs_correspond_to_ultrafunctors(P, Q):
    C, D = downset_lattice(P), downset_lattice(Q)
    check = duality_on_homs(C, D, ModSpectrum(C), ModSpectrum(D))
    assert check and check.witness["count"] == len(lattice_homs(C, D))


@pytest.mark.parametrize("U", [DiscreteUltraposet(2), ModSpectrum(chain(3)), canonical_two()])
def test_left_maps_against_frame_homs(U):
    D = chain(3)
    check = frame_hom_bijection(U, D)
    assert check
    assert check.witness["count"] == len(hom_poset("left", U, ModSpectrum(D)))
