"""Affine semigroups: grading, membership, minimal generators, saturation."""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from typing import Sequence

from . import lp
from .exactla import LatticeVector, ShapeError, dot, vec
from .polyhedral import RationalCone, is_strongly_convex


class NoPositiveGrading(ValueError):
    """The generators do not span a strongly convex cone."""

    def __init__(self, msg: str = "no positive grading: cone is not strongly convex"):
        super().__init__(msg)


@dataclass(frozen=True)
class AffineSemigroup:
    """Semigroup of Z^dim generated by a finite list of vectors.

    Zero and repeated generators are dropped; the remaining order is kept.
    """

    dim: int
    generators: tuple[LatticeVector, ...]
    label: str | None = field(default=None, compare=False)

    def __post_init__(self):
        if self.dim < 1:
            raise ShapeError("semigroup dimension must be >= 1")
        gens: list[LatticeVector] = []
        for g in self.generators:
            g = vec(g)
            if len(g) != self.dim:
                raise ShapeError(f"generator {g} is not in Z^{self.dim}")
            if any(g) and g not in gens:
                gens.append(g)
        object.__setattr__(self, "generators", tuple(gens))

    @cached_property
    def cone(self) -> RationalCone:
        return RationalCone(self.dim, self.generators)

    @cached_property
    def grading(self) -> tuple[int, ...]:
        """Integral positive functional (see :func:`positive_functional`)."""
        w = positive_functional(self)
        den = math.lcm(*(x.denominator for x in w))
        return tuple(int(x * den) for x in w)

    def degree(self, v: Sequence[int]) -> int:
        return dot(self.grading, v)

    def __contains__(self, v) -> bool:
        return member(v, self) is not None

    def __len__(self) -> int:
        return len(self.generators)


def positive_functional(S: AffineSemigroup) -> tuple[Fraction, ...]:
    """A rational w with <w, g> > 0 for every generator g.

    Taken as the sum of the dual cone generators, which is interior to the
    dual cone when the cone of S is strongly convex.
    """
    if not S.generators:
        return tuple(Fraction(1) for _ in range(S.dim))
    if not is_strongly_convex(S.cone):
        raise NoPositiveGrading()
    w = [Fraction(0)] * S.dim
    for f in S.cone.facets:
        for k, x in enumerate(f):
            w[k] += x
    if any(dot(w, g) <= 0 for g in S.generators):
        # Cannot happen for a pointed cone; guard against silent misuse.
        raise NoPositiveGrading("dual cone sum is not positive on the generators")
    return tuple(w)


def _search(v: LatticeVector, gens: Sequence[LatticeVector], degs: Sequence[int],
            facets: Sequence[LatticeVector], grading: Sequence[int]) -> list[int] | None:
    """Coefficients c >= 0 with sum c_i gens[i] = v, or None.

    Depth-first search on v - g, memoised on the remainder.  Every step
    strictly lowers the degree and keeps the remainder inside the cone, so
    the search space is finite and the answer is exact.
    """
    order = sorted(range(len(gens)), key=lambda i: (-degs[i], gens[i]))
    zero = tuple(0 for _ in v)
    choice: dict[LatticeVector, int | None] = {zero: -1}

    def reach(u: LatticeVector) -> bool:
        if u in choice:
            return choice[u] is not None
        du = dot(grading, u)
        choice[u] = None
        if du <= 0:
            return False
        for i in order:
            if degs[i] > du:
                continue
            rest = tuple(a - b for a, b in zip(u, gens[i]))
            if any(dot(f, rest) < 0 for f in facets):
                continue
            if reach(rest):
                choice[u] = i
                return True
        return False

    v = tuple(v)
    if any(dot(f, v) < 0 for f in facets) or not reach(v):
        return None
    coeffs = [0] * len(gens)
    u = v
    while u != zero:
        i = choice[u]
        coeffs[i] += 1
        u = tuple(a - b for a, b in zip(u, gens[i]))
    return coeffs


def member(v: Sequence[int], S: AffineSemigroup) -> list[int] | None:
    """Witness coefficients (one per generator) if v is in S, else None."""
    v = vec(v)
    if len(v) != S.dim:
        raise ShapeError("vector and semigroup differ in dimension")
    if not any(v):
        return [0] * len(S.generators)
    if not S.generators or S.degree(v) < 0:
        return None
    degs = [S.degree(g) for g in S.generators]
    return _search(v, S.generators, degs, S.cone.facets, S.grading)


def is_member(v: Sequence[int], S: AffineSemigroup) -> bool:
    return member(v, S) is not None


def minimal_generators(S: AffineSemigroup) -> list[LatticeVector]:
    """The irreducible generators of S, in the order they appear in S.

    Each generator is tested against all the others at once, so the result
    does not depend on generator order.
    """
    gens = S.generators
    if not gens:
        return []
    degs = [S.degree(g) for g in gens]
    facets = S.cone.facets
    out = []
    for i, g in enumerate(gens):
        rest = [h for j, h in enumerate(gens) if j != i]
        rest_degs = [degs[j] for j in range(len(gens)) if j != i]
        if _search(g, rest, rest_degs, facets, S.grading) is None:
            out.append(g)
    return out


def _coordinate_bounds(S: AffineSemigroup, bound: Fraction) -> list[tuple[int, int]]:
    """Integer box containing {x in cone(S) : <w, x> <= bound}."""
    gens = S.generators
    w = S.grading
    degs = [dot(w, g) for g in gens]
    box = []
    for k in range(S.dim):
        lim = []
        for sgn in (1, -1):
            res = lp.maximize([sgn * g[k] for g in gens], [degs], [bound])
            lim.append(res.value)
        box.append((math.ceil(-lim[1]), math.floor(lim[0])))
    return box


@dataclass
class SaturationReport:
    degree_bound: Fraction
    grading: tuple[int, ...]
    points_checked: int
    violations: list[LatticeVector]

    @property
    def consistent(self) -> bool:
        return not self.violations


def default_degree_bound(S: AffineSemigroup) -> Fraction:
    return Fraction(3 * max(S.degree(g) for g in S.generators))


def bounded_saturation_check(S: AffineSemigroup, degree_bound=None) -> SaturationReport:
    """Lattice points of the cone up to a degree that are not in S.

    The degree is measured by ``S.grading``.  An empty violation list is
    evidence of saturation up to the bound, not a proof.
    """
    bound = default_degree_bound(S) if degree_bound is None else Fraction(degree_bound)
    if bound <= 0:
        raise ValueError("degree bound must be positive")
    box = _coordinate_bounds(S, bound)
    facets = S.cone.facets
    checked = 0
    violations = []
    for x in itertools.product(*(range(lo, hi + 1) for lo, hi in box)):
        if S.degree(x) > bound or any(dot(f, x) < 0 for f in facets):
            continue
        checked += 1
        if member(x, S) is None:
            violations.append(tuple(x))
    return SaturationReport(bound, S.grading, checked, sorted(violations))
