import itertools
import random
from fractions import Fraction

import pytest
from hypothesis import assume, given, settings
from hypothesis import strategies as st

from toricnash.detvar import detvar_generators
from toricnash.exactla import ShapeError, dot, nullspace, primitive, rank_of_vectors
from toricnash.polyhedral import (
    DegenerateInputError,
    RationalCone,
    cones_equal,
    conic_hull_member,
    conic_hull_witness,
    dual_cone,
    is_strongly_convex,
    newton_vertices,
    orthant,
    separating_functional,
)


def brute_force_dual_rays(rays, d):
    """Extreme rays of {w : <w,r> >= 0} by enumerating (d-1)-subsets of tight rows.

    Valid for full-dimensional pointed cones, where the dual is pointed too.
    """
    found = set()
    for subset in itertools.combinations(rays, d - 1):
        if rank_of_vectors(list(subset)) < d - 1:
            continue
        (w,) = nullspace(list(subset), d)
        for cand in (w, tuple(-x for x in w)):
            if all(dot(cand, r) >= 0 for r in rays):
                found.add(primitive(cand))
    return found


def test_dual_of_orthant_is_orthant():
    for d in (1, 2, 4):
        assert set(dual_cone(orthant(d)).rays) == set(orthant(d).rays)


def test_dual_of_M22_cone():
    A = detvar_generators(2, 2).generators
    expected = {(0, 1, 0), (0, 0, 1), (1, 1, 0), (1, 0, 1)}
    assert set(dual_cone(RationalCone(3, A)).rays) == expected
    assert brute_force_dual_rays(A, 3) == expected


def test_dual_of_half_line():
    assert dual_cone(RationalCone(1, ((2,),))).rays == ((1,),)


def test_dual_of_lower_dimensional_cone_has_lineality():
    C = RationalCone(3, ((1, 0, 0),))
    D = dual_cone(C)
    assert not is_strongly_convex(D)
    assert cones_equal(dual_cone(D), C)


def pointed_full_cones(max_d=3):
    return st.integers(2, max_d).flatmap(
        lambda d: st.tuples(st.just(d), st.lists(st.tuples(*[st.integers(-2, 3)] * d),
                                                 min_size=d, max_size=7)))


@settings(max_examples=150, deadline=None)
@given(pointed_full_cones(4))
def test_dual_matches_brute_force(data):
    d, rays = data
    rays = [r for r in rays if any(r)]
    assume(len(rays) >= d and rank_of_vectors(rays) == d)
    C = RationalCone(d, rays)
    assume(is_strongly_convex(C))
    assert set(dual_cone(C).rays) == brute_force_dual_rays(list(C.rays), d)


@settings(max_examples=150, deadline=None)
@given(st.integers(1, 3).flatmap(
    lambda d: st.tuples(st.just(d), st.lists(st.tuples(*[st.integers(-2, 2)] * d),
                                             min_size=0, max_size=6))))
def test_duality_involution(data):
    d, rays = data
    C = RationalCone(d, rays)
    assert cones_equal(dual_cone(dual_cone(C)), C)


def test_every_ray_satisfies_every_facet():
    C = RationalCone(5, detvar_generators(3, 3).generators)
    assert all(dot(w, r) >= 0 for w in C.facets for r in C.rays)
    # full-dimensional: each facet is tight on a rank d-1 set of rays
    for w in C.facets:
        tight = [r for r in C.rays if dot(w, r) == 0]
        assert rank_of_vectors(tight) == 4


def test_strong_convexity():
    assert is_strongly_convex(orthant(3))
    for m, n in [(2, 2), (2, 3), (3, 3), (2, 4)]:
        assert is_strongly_convex(RationalCone(m + n - 1, detvar_generators(m, n).generators))
    assert not is_strongly_convex(RationalCone(1, ((1,), (-1,))))
    assert not is_strongly_convex(RationalCone(2, ((1, 0), (-1, 0))))
    assert not is_strongly_convex(RationalCone(2, ((1, 0), (-1, 1), (0, -1))))


def test_conic_hull_member_examples():
    p1, r1 = (1, 2), (0, 1)
    assert conic_hull_member(p1, [p1])
    assert conic_hull_member((1, 3), [p1], [r1])
    assert not conic_hull_member((0, 0), [(1, 0)], [(0, 1)])
    with pytest.raises(ShapeError):
        conic_hull_member((0, 0), [(1, 0, 0)])
    with pytest.raises(DegenerateInputError):
        conic_hull_member((0, 0), [])


def test_conic_hull_witness_is_exact():
    lam, mu = conic_hull_witness((Fraction(1), Fraction(5, 2)), [(0, 0), (2, 1)], [(0, 1)])
    assert sum(lam) == 1 and all(x >= 0 for x in lam + mu)
    assert lam[0] * 0 + lam[1] * 2 == 1
    assert lam[1] * 1 + mu[0] == Fraction(5, 2)


def test_newton_vertices_dimension_one():
    half_line = RationalCone(1, ((1,),))
    assert newton_vertices([(2,), (3,)], half_line) == [(2,)]
    assert newton_vertices([(3,)], half_line) == [(3,)]
    with pytest.raises(DegenerateInputError):
        newton_vertices([], half_line)


def test_newton_vertices_M22():
    A = detvar_generators(2, 2).generators
    pts = [(1, 1, 1), (0, 2, 1), (0, 1, 2), (-1, 2, 2)]
    verts = newton_vertices(pts, RationalCone(3, A))
    assert verts and set(verts) <= set(pts)
    assert verts == sorted(verts)


def check_vertex_certificates(points, rays, vertices):
    """Independent exact certificates for every point's classification."""
    for m in points:
        others = [q for q in points if q != m]
        if m in vertices:
            if not others:
                continue
            w = separating_functional(m, others, rays)
            assert w is not None, m
            assert all(dot(w, r) >= 0 for r in rays)
            assert all(dot(w, m) < dot(w, q) for q in others)
        else:
            lam, mu = conic_hull_witness(m, others, rays)
            assert sum(lam) == 1 and min(lam + mu, default=0) >= 0
            combo = [sum(l * q[k] for l, q in zip(lam, others)) + sum(u * r[k] for u, r in zip(mu, rays))
                     for k in range(len(m))]
            assert tuple(combo) == m


def test_vertex_certificates_random():
    rng = random.Random(99)
    done = 0
    while done < 120:
        d = rng.randint(1, 3)
        rays = [tuple(rng.randint(-1, 2) for _ in range(d)) for _ in range(rng.randint(1, 3))]
        rec = RationalCone(d, rays)
        if not is_strongly_convex(rec):
            continue
        pts = sorted({tuple(rng.randint(-2, 2) for _ in range(d)) for _ in range(rng.randint(1, 6))})
        verts = newton_vertices(pts, rec)
        assert verts
        check_vertex_certificates(pts, rec.rays, verts)
        done += 1


def test_vertex_certificates_M22():
    A = detvar_generators(2, 2).generators
    pts = [(1, 1, 1), (0, 2, 1), (0, 1, 2), (-1, 2, 2)]
    check_vertex_certificates(pts, list(A), newton_vertices(pts, RationalCone(3, A)))


def test_separating_functional_fails_for_interior_point():
    assert separating_functional((1,), [(0,), (2,)], []) is None
