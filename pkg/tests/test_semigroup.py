import itertools
import random
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from toricnash.detvar import detvar_generators
from toricnash.exactla import ShapeError, det, dot, generates_full_lattice
from toricnash.semigroup import (
    AffineSemigroup,
    NoPositiveGrading,
    bounded_saturation_check,
    default_degree_bound,
    member,
    minimal_generators,
    positive_functional,
)


def test_generators_are_cleaned():
    S = AffineSemigroup(2, ((1, 0), (0, 0), (1, 0), (0, 1)))
    assert S.generators == ((1, 0), (0, 1))
    with pytest.raises(ShapeError):
        AffineSemigroup(2, ((1, 0, 0),))


def test_positive_functional_examples(cusp, m2):
    assert positive_functional(cusp)[0] > 0
    S = m2(2, 2)
    w = positive_functional(S)
    assert all(dot(w, g) > 0 for g in S.generators)
    assert all(isinstance(x, Fraction) for x in w)
    with pytest.raises(NoPositiveGrading):
        positive_functional(AffineSemigroup(1, ((1,), (-1,))))


def test_member_examples(cusp, m2):
    assert member((5,), cusp) == [1, 1]
    assert member((1,), cusp) is None
    assert member((0,), cusp) == [0, 0]
    assert member((-4,), cusp) is None
    S = m2(2, 2)
    w = member((1, 1, 1), S)
    assert w is not None
    assert tuple(sum(c * g[k] for c, g in zip(w, S.generators)) for k in range(3)) == (1, 1, 1)
    assert (1, 1, 1) in S
    assert (-1, 0, 0) not in S


def brute_force_elements(S, bound):
    """All N-combinations of generators with degree <= bound."""
    degs = [S.degree(g) for g in S.generators]
    ranges = [range(bound // dg + 1) for dg in degs]
    out = set()
    for c in itertools.product(*ranges):
        if sum(ci * dg for ci, dg in zip(c, degs)) <= bound:
            out.add(tuple(sum(ci * g[k] for ci, g in zip(c, S.generators)) for k in range(S.dim)))
    return out


def random_sharp_semigroup(rng, max_d=3, max_gens=5):
    while True:
        d = rng.randint(1, max_d)
        gens = [tuple(rng.randint(-2, 3) for _ in range(d)) for _ in range(rng.randint(1, max_gens))]
        S = AffineSemigroup(d, gens)
        if not S.generators:
            continue
        try:
            S.grading
        except NoPositiveGrading:
            continue
        return S


def test_member_matches_brute_force():
    rng = random.Random(12345)
    instances = 0
    while instances < 1000:
        S = random_sharp_semigroup(rng)
        top = max(S.degree(g) for g in S.generators)
        bound = min(2 * top, 12)
        elements = brute_force_elements(S, bound)
        candidates = set(elements)
        for g in S.generators:
            for h in S.generators:
                candidates.add(tuple(a - b for a, b in zip(g, h)))
        candidates.add(tuple(rng.randint(-3, 3) for _ in range(S.dim)))
        for v in candidates:
            if S.degree(v) > bound:
                continue
            wit = member(v, S)
            assert (wit is not None) == (v in elements), (S.generators, v)
            if wit is not None:
                assert all(c >= 0 for c in wit)
                assert tuple(sum(c * g[k] for c, g in zip(wit, S.generators))
                             for k in range(S.dim)) == v
        instances += 1


def test_minimal_generators_examples(cusp, m2):
    assert minimal_generators(AffineSemigroup(1, ((1,), (2,), (5,)))) == [(1,)]
    assert minimal_generators(cusp) == [(2,), (3,)]
    A = m2(2, 3)
    assert minimal_generators(A) == list(A.generators)
    assert len(minimal_generators(A)) == 6


def test_minimal_generators_drops_sums():
    S = AffineSemigroup(2, ((1, 0), (0, 1), (1, 1), (2, 1), (1, 2)))
    assert minimal_generators(S) == [(1, 0), (0, 1)]


sharp_lists = st.integers(1, 3).flatmap(
    lambda d: st.tuples(st.just(d), st.lists(st.tuples(*[st.integers(-1, 3)] * d),
                                             min_size=1, max_size=6)))


@settings(max_examples=120, deadline=None)
@given(sharp_lists, st.randoms(use_true_random=False))
def test_minimal_generators_permutation_invariant_and_regenerating(data, rnd):
    d, gens = data
    S = AffineSemigroup(d, gens)
    try:
        H = minimal_generators(S)
    except NoPositiveGrading:
        return
    shuffled = list(S.generators)
    rnd.shuffle(shuffled)
    assert set(minimal_generators(AffineSemigroup(d, shuffled))) == set(H)
    SH = AffineSemigroup(d, H)
    assert all(member(g, SH) is not None for g in S.generators)
    if len(H) == d and generates_full_lattice(H, d):
        assert abs(det(H)) == 1


def test_saturation_examples(cusp, m2):
    rep = bounded_saturation_check(cusp, 10)
    assert rep.violations == [(1,)]
    assert rep.points_checked == 11
    rep = bounded_saturation_check(m2(2, 2), 6)
    assert rep.violations == [] and rep.points_checked > 10
    rep = bounded_saturation_check(AffineSemigroup(2, ((1, 0), (0, 1))), 5)
    assert rep.consistent


def test_saturation_detects_non_normal_2d():
    # Cone is the first quadrant but (1,0) and (0,1) are missing from the semigroup.
    S = AffineSemigroup(2, ((2, 0), (0, 2), (1, 1), (3, 0), (0, 3)))
    viol = bounded_saturation_check(S, 4).violations
    assert (1, 0) in viol and (0, 1) in viol


def test_default_degree_bound(m2):
    S = m2(2, 3)
    assert default_degree_bound(S) == 3 * max(S.degree(g) for g in S.generators)
    assert bounded_saturation_check(S).consistent
