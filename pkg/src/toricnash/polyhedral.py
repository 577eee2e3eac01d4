"""Rational polyhedral cones and Newton polyhedra, all in exact arithmetic."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from typing import Iterable, Sequence

from . import lp
from .exactla import (
    IndependenceTracker,
    LatticeVector,
    ShapeError,
    dot,
    nullspace,
    primitive,
    rank_of_vectors,
    solve,
    sub,
    vec,
)


class DegenerateInputError(ValueError):
    pass


@dataclass(frozen=True)
class RationalCone:
    """The cone generated by ``rays`` in Q^dim.

    Facet inequalities are computed on demand as the generators of the dual
    cone; a dual generator list may contain opposite pairs when the cone is
    not full-dimensional.
    """

    dim: int
    rays: tuple[LatticeVector, ...] = ()

    def __post_init__(self):
        if self.dim < 1:
            raise ShapeError("cone dimension must be >= 1")
        rays = []
        for r in self.rays:
            r = primitive(vec(r))
            if len(r) != self.dim:
                raise ShapeError(f"ray {r} does not live in dimension {self.dim}")
            if any(r) and r not in rays:
                rays.append(r)
        object.__setattr__(self, "rays", tuple(rays))

    @cached_property
    def facets(self) -> tuple[LatticeVector, ...]:
        """Inequalities <w, x> >= 0 cutting out the cone (generators of the dual)."""
        return _dual_generators(self.rays, self.dim)

    def contains(self, x: Sequence[int]) -> bool:
        return all(dot(w, x) >= 0 for w in self.facets)

    def __contains__(self, x) -> bool:
        return self.contains(x)


def orthant(d: int) -> RationalCone:
    return RationalCone(d, tuple(tuple(1 if k == i else 0 for k in range(d)) for i in range(d)))


def _dual_generators(rays: Sequence[LatticeVector], d: int) -> tuple[LatticeVector, ...]:
    """Irredundant generators of {w : <w, r> >= 0 for all r in rays}.

    The dual splits as (lineality space) + (pointed part inside the row space
    of ``rays``).  The pointed part is found by the double description method
    in coordinates of a basis of the row space.
    """
    lineality = nullspace(rays, d) if rays else [
        tuple(1 if k == i else 0 for k in range(d)) for i in range(d)]
    lin_gens = []
    for v in lineality:
        lin_gens += [v, tuple(-x for x in v)]
    if not rays:
        return tuple(sorted(lin_gens))

    basis = _independent_subset(rays)
    r = len(basis)
    # Constraint matrix in row-space coordinates: y -> <ray, sum y_k basis_k>.
    G = [tuple(dot(ray, b) for b in basis) for ray in rays]
    pointed = _double_description(G, r)
    out = []
    for y in pointed:
        w = primitive([sum(y[k] * basis[k][i] for k in range(r)) for i in range(d)])
        out.append(w)
    return tuple(sorted(set(out))) + tuple(sorted(lin_gens))


def _independent_subset(vectors: Sequence[LatticeVector]) -> list[LatticeVector]:
    tracker = IndependenceTracker(len(vectors[0]))
    return [v for v in vectors if tracker.push(v)]


def _double_description(G: Sequence[LatticeVector], r: int) -> list[LatticeVector]:
    """Extreme rays of the pointed cone {y in Q^r : G y >= 0}, rank(G) = r."""
    order = list(range(len(G)))
    tracker = IndependenceTracker(r)
    start_idx = [i for i in order if len(tracker) < r and tracker.push(G[i])]
    # {y : G_S y >= 0} is generated by the columns of G_S^{-1}.
    GS = [G[i] for i in start_idx]
    columns_of_GS = [tuple(GS[i][k] for i in range(r)) for k in range(r)]
    rays = []
    for j in range(r):
        target = tuple(1 if k == j else 0 for k in range(r))
        # Solve G_S y = e_j, i.e. sum_k y_k * (column k of G_S) = e_j.
        y = solve(columns_of_GS, target)
        rays.append(primitive(y))
    processed = list(start_idx)
    for i in order:
        if i in start_idx:
            continue
        g = G[i]
        vals = [dot(g, y) for y in rays]
        pos = [k for k, v in enumerate(vals) if v > 0]
        neg = [k for k, v in enumerate(vals) if v < 0]
        zero = [k for k, v in enumerate(vals) if v == 0]
        new = [rays[k] for k in pos + zero]
        if neg:
            tight = [frozenset(j for j in processed if dot(G[j], y) == 0) for y in rays]
            for a in pos:
                for b in neg:
                    common = tight[a] & tight[b]
                    if len(common) < r - 2:
                        continue
                    if rank_of_vectors([G[j] for j in common]) != r - 2:
                        continue
                    # Combinatorial adjacency: no third ray is tight on all of common.
                    if any(c != a and c != b and common <= tight[c] for c in range(len(rays))):
                        continue
                    y = tuple(vals[a] * yb - vals[b] * ya for ya, yb in zip(rays[a], rays[b]))
                    new.append(primitive(y))
        processed.append(i)
        rays = list(dict.fromkeys(new))
    return rays


def dual_cone(C: RationalCone) -> RationalCone:
    """The dual cone {w : <w, r> >= 0 for every ray r of C}."""
    return RationalCone(C.dim, C.facets)


def conic_hull_member(x: Sequence[int], points: Sequence[Sequence[int]],
                      rays: Sequence[Sequence[int]] = ()) -> bool:
    """Is x in Conv(points) + Cone(rays)?  Decided by exact LP."""
    return conic_hull_witness(x, points, rays) is not None


def conic_hull_witness(x: Sequence[int], points: Sequence[Sequence[int]],
                       rays: Sequence[Sequence[int]] = ()):
    """Return (lambda, mu) with x = sum lambda_i p_i + sum mu_j r_j, or None."""
    d = len(x)
    if not points:
        raise DegenerateInputError("conic hull membership needs at least one point")
    if any(len(p) != d for p in points) or any(len(r) != d for r in rays):
        raise ShapeError("dimension mismatch in conic hull membership")
    cols = list(points) + list(rays)
    A = [[c[k] for c in cols] for k in range(d)]
    A.append([1] * len(points) + [0] * len(rays))
    b = list(x) + [1]
    z = lp.feasible_point(A, b)
    if z is None:
        return None
    return z[:len(points)], z[len(points):]


def contains_ray(C: RationalCone, x: Sequence[int]) -> bool:
    """Membership x in C via LP over the generators (independent of facets)."""
    if not C.rays:
        return not any(x)
    return conic_hull_member(x, [tuple([0] * C.dim)], C.rays)


def is_strongly_convex(C: RationalCone) -> bool:
    """True iff C contains no line.

    C contains a line iff 0 is a convex combination of its (nonzero) rays.
    """
    if not C.rays:
        return True
    return not conic_hull_member(tuple([0] * C.dim), C.rays, ())


def cones_equal(C: RationalCone, D: RationalCone) -> bool:
    """Set equality by mutual containment of generators."""
    return C.dim == D.dim and all(contains_ray(D, r) for r in C.rays) and \
        all(contains_ray(C, r) for r in D.rays)


def separating_functional(m: Sequence[int], others: Sequence[Sequence[int]],
                          rays: Sequence[Sequence[int]]) -> list[Fraction] | None:
    """A w with <w,r> >= 0 on rays and <w,m> < <w,m'> for every other point.

    Solves: maximise t subject to <w, m' - m> >= t, <w, r> >= 0, t <= 1.
    """
    d = len(m)
    A_ub, b_ub = [], []
    for q in others:
        diff = sub(q, m)
        A_ub.append([-x for x in diff] + [1])
        b_ub.append(0)
    for r in rays:
        A_ub.append([-x for x in r] + [0])
        b_ub.append(0)
    A_ub.append([0] * d + [1])
    b_ub.append(1)
    res = lp.maximize([0] * d + [1], A_ub, b_ub, free=[True] * (d + 1))
    if res.status != lp.OPTIMAL or res.value <= 0:
        return None
    return res.x[:d]


@dataclass
class NewtonPolyhedron:
    """Conv(points) + recession cone, with its vertex set."""

    points: tuple[LatticeVector, ...]
    recession: RationalCone
    vertices: tuple[LatticeVector, ...] = field(init=False)

    def __post_init__(self):
        self.points = tuple(sorted(set(vec(p) for p in self.points)))
        self.vertices = tuple(newton_vertices(self.points, self.recession))


def newton_vertices(points: Iterable[Sequence[int]], recession: RationalCone) -> list[LatticeVector]:
    """Vertices of Conv(points) + recession, sorted lexicographically.

    A point is a vertex iff it is not in the polyhedron spanned by the other
    points and the recession cone; the recession cone must be pointed.
    """
    pts = sorted(set(vec(p) for p in points))
    if not pts:
        raise DegenerateInputError("Newton polyhedron of an empty point set")
    if any(len(p) != recession.dim for p in pts):
        raise ShapeError("points and recession cone differ in dimension")
    if len(pts) == 1:
        return pts
    facets = recession.facets
    out = []
    for m in pts:
        others = [q for q in pts if q != m]
        # m in q + recession for a single q already rules m out.
        if any(all(dot(f, sub(m, q)) >= 0 for f in facets) for q in others):
            continue
        if not conic_hull_member(m, others, recession.rays):
            out.append(m)
    return out
