import itertools

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from toricnash.exactla import det, generates_full_lattice, vsum
from toricnash.logjac import (
    DimensionHypothesisError,
    compare_characteristics,
    gamma_p,
    nonzero_minors,
)
from toricnash.semigroup import AffineSemigroup

M22_GAMMA = ((-1, 2, 2), (0, 1, 2), (0, 2, 1), (1, 1, 1))


@pytest.mark.parametrize("p, expected", [(0, {(2,), (3,)}), (2, {(3,)}), (3, {(2,)}),
                                         (5, {(2,), (3,)}), (7, {(2,), (3,)})])
def test_cusp_exponents(cusp, p, expected):
    assert set(gamma_p(cusp, p).exponents) == expected


def test_M22_exponents(m2):
    for p in (0, 2, 3, 5):
        g = gamma_p(m2(2, 2), p)
        assert g.exponents == M22_GAMMA
        assert g.subset_count == 4


def test_rejects_bad_input(cusp):
    with pytest.raises(DimensionHypothesisError):
        gamma_p(AffineSemigroup(1, ((2,), (4,))), 0)
    with pytest.raises(ValueError):
        gamma_p(cusp, 4)


def test_compare_characteristics(cusp, m2):
    cmp = compare_characteristics(m2(2, 3), [2, 3, 5, 7])
    assert cmp.characteristic_free
    cmp = compare_characteristics(cusp, [2, 3])
    assert not cmp.characteristic_free
    assert cmp.by_prime[2].exponents == ((3,),)
    std = AffineSemigroup(3, ((1, 0, 0), (0, 1, 0), (0, 0, 1)))
    cmp = compare_characteristics(std, [2, 3, 5])
    assert cmp.characteristic_free and cmp.gamma0.exponents == ((1, 1, 1),)


def plain_gamma(gens, d, p):
    """Reference without pruning: every d-subset, determinant, reduction mod p."""
    out = set()
    for sub in itertools.combinations(gens, d):
        D = det(list(sub))
        if (D % p if p else D) != 0:
            out.add(vsum(sub, d))
    return out


semigroups = st.integers(1, 3).flatmap(
    lambda d: st.tuples(st.just(d), st.lists(st.tuples(*[st.integers(-3, 3)] * d),
                                             min_size=1, max_size=7)))


@settings(max_examples=200, deadline=None)
@given(semigroups)
def test_pruned_enumeration_matches_plain_and_invariants(data):
    d, gens = data
    S = AffineSemigroup(d, gens)
    if not S.generators or not generates_full_lattice(S.generators, d):
        return
    g0 = gamma_p(S, 0)
    assert set(g0.exponents) == plain_gamma(S.generators, d, 0)
    assert g0.exponents
    minors = nonzero_minors(S.generators, d)
    unimodular = all(abs(mn.det) == 1 for mn in minors)
    for p in (2, 3, 5, 7):
        gp = gamma_p(S, p)
        assert set(gp.exponents) == plain_gamma(S.generators, d, p)
        assert set(gp.exponents) <= set(g0.exponents)
        assert gp.exponents, "nonempty under Z A = Z^d"
        if unimodular:
            assert gp.exponents == g0.exponents


def test_exponents_are_sums_of_d_independent_generators(m2):
    S = m2(3, 3)
    g = gamma_p(S, 3)
    for mn in g.minors:
        assert len(set(mn.indices)) == 5 and mn.det % 3 != 0
        assert mn.exponent == vsum([S.generators[i] for i in mn.indices], 5)
    assert {mn.exponent for mn in g.minors} == set(g.exponents)
