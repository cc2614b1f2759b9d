import itertools

import pytest
from hypothesis import given, strategies as st

from oracles import brute_ultrafilters
from ultraposets.beta import (
    UltraFamily,
    Ultrafilter,
    beta,
    delta_family,
    enumerate_ultrafilters,
    extend_fip,
    gamma,
    has_fip,
    is_ultrafilter,
    kleisli_pair,
    principal,
    pushforward,
    restrict,
)
from ultraposets.errors import BudgetExceeded, ShapeError


def family_of(m, draw_points):
    return UltraFamily(m, tuple(principal(s, m) for s in draw_points))


@st.composite
def families(draw, m=None, k=None):
    m = draw(st.integers(1, 4)) if m is None else m
    k = draw(st.integers(1, 4)) if k is None else k
    return family_of(m, [draw(st.integers(0, m - 1)) for _ in range(k)])


def test_principal_examples():
    assert principal(0, 1).sets() == [1]
    assert principal(0, 2).sets() == [0b01, 0b11]
    assert principal(1, 2).sets() == [0b10, 0b11]
    with pytest.raises(IndexError):
        principal(1, 1)


def test_is_ultrafilter_examples():
    assert is_ultrafilter({0b01, 0b11}, 2)
    bad = is_ultrafilter({0b11}, 2)
    assert not bad and bad.witness[0] == "dichotomy"
    assert not is_ultrafilter({0b01, 0b10, 0b11}, 2)
    assert not is_ultrafilter(set(), 0)


@pytest.mark.parametrize("m", range(0, 4))
def test_enumeration_matches_brute_force(m):
    got = [u.family for u in enumerate_ultrafilters(m)]
    assert sorted(got, key=sorted) == sorted(brute_ultrafilters(m), key=sorted)
    assert len(got) == m


def test_enumeration_four_points_is_principal():
    assert enumerate_ultrafilters(4) == list(beta(4))


def test_enumeration_cap():
    with pytest.raises(BudgetExceeded):
        enumerate_ultrafilters(5)


def test_constructor_rejects_non_ultrafilter():
    with pytest.raises(ValueError):
        Ultrafilter(2, {0b11})
    with pytest.raises(ValueError):
        Ultrafilter(2, {0b01, 0b11}, witness=1)


def test_pushforward_examples():
    assert pushforward((1, 1), principal(0, 2), 2) == principal(1, 2)
    assert pushforward((0,), principal(0, 1), 3) == principal(0, 3)
    with pytest.raises(ShapeError):
        pushforward((0, 1), principal(0, 1), 2)


def test_kleisli_examples():
    mu = family_of(2, (1, 0))
    assert kleisli_pair(mu, principal(0, 2)) == principal(1, 2)
    assert kleisli_pair(delta_family(3), principal(2, 3)) == principal(2, 3)
    with pytest.raises(ShapeError):
        kleisli_pair(mu, principal(0, 3))


@given(families(), st.data())
def test_kleisli_agrees_with_point_formula(mu, data):
    s = data.draw(st.integers(0, len(mu) - 1))
    assert kleisli_pair(mu, principal(s, len(mu))) == principal(mu[s].witness, mu.carrier_size)


@given(families(), st.data())
def test_kleisli_unit_laws(mu, data):
    nu = principal(data.draw(st.integers(0, len(mu) - 1)), len(mu))
    assert kleisli_pair(delta_family(len(mu)), nu) == nu
    assert kleisli_pair(mu, delta_family(len(mu))) == mu


@given(st.data())
def test_kleisli_associativity(data):
    s, t, w = (data.draw(st.integers(1, 3)) for _ in range(3))
    mu = data.draw(families(s, t))
    nu = data.draw(families(t, w))
    th = principal(data.draw(st.integers(0, w - 1)), w)
    assert kleisli_pair(mu, kleisli_pair(nu, th)) == kleisli_pair(kleisli_pair(mu, nu), th)


@pytest.mark.parametrize("m, n", [(1, 1), (2, 3), (3, 2)])
def test_pushforward_is_kleisli_with_deltas(m, n):
    for i in itertools.product(range(n), repeat=m):
        for s in range(m):
            mu = principal(s, m)
            assert pushforward(i, mu, n) == kleisli_pair(family_of(n, i), mu)


@pytest.mark.parametrize("m", [1, 2, 3])
def test_gamma_flattens(m):
    for k in range(m):
        assert gamma(principal(k, m), m) == beta(m)[k]
    with pytest.raises(ShapeError):
        gamma(principal(0, m + 1), m)


def test_restrict_roundtrip():
    mu = principal(2, 4)
    W = 0b1100
    nu = restrict(mu, W)
    assert nu == principal(0, 2)
    assert pushforward((2, 3), nu, 4) == mu
    with pytest.raises(ValueError):
        restrict(mu, 0b0011)


def test_fip_examples():
    assert extend_fip([0b011, 0b110], 3) == principal(1, 3)
    assert not has_fip([0b01, 0b10], 2)
    with pytest.raises(ValueError):
        extend_fip([0b01, 0b10], 2)


@given(st.integers(1, 4).flatmap(lambda m: st.tuples(st.just(m), st.lists(st.integers(1, (1 << m) - 1), max_size=4))))
def test_fip_extension_contains_generators(case):
    m, sets = case
    if has_fip(sets, m):
        u = extend_fip(sets, m)
        assert all(A in u for A in sets)
