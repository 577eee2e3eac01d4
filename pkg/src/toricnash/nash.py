"""Affine charts of the Nash blowup of an affine toric variety.

The blowup is computed as the blowup of the logarithmic Jacobian ideal
(mod p), one chart per vertex of its Newton polyhedron.  A chart of a
d-dimensional toric variety is smooth exactly when its semigroup is
generated by d elements.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .exactla import LatticeVector, det, generates_full_lattice, sub
from .logjac import LogJacobianSet, NonzeroMinor, check_characteristic, gamma_p
from .polyhedral import newton_vertices
from .semigroup import AffineSemigroup, minimal_generators, positive_functional

SMOOTH = "smooth"
FIXED_POINT = "fixed_point"
UNDECIDED = "undecided"
EXPANDED = "expanded"


class HypothesisError(ValueError):
    """An input fails a precondition of the chart construction."""


@dataclass
class NashChart:
    vertex: LatticeVector
    chart_generators: tuple[LatticeVector, ...]
    minimal_generators: tuple[LatticeVector, ...]
    smooth: bool
    isomorphic_to_source: bool
    unimodular_det: int | None = None

    @property
    def semigroup(self) -> AffineSemigroup:
        return AffineSemigroup(len(self.vertex), self.minimal_generators)


@dataclass
class NashReport:
    source: AffineSemigroup
    characteristic: int
    gamma: LogJacobianSet
    newton_vertices: list[LatticeVector]
    charts: list[NashChart]
    source_minimal_generators: tuple[LatticeVector, ...] = ()
    char_free: bool | None = None

    @property
    def global_smooth(self) -> bool:
        return all(c.smooth for c in self.charts)


def chart_generators(S: AffineSemigroup, exponents, vertex) -> tuple[LatticeVector, ...]:
    """Generators of S followed by the sorted nonzero differences m - vertex."""
    diffs = sorted({sub(m, vertex) for m in exponents} - {tuple([0] * S.dim)})
    out = list(S.generators)
    out += [v for v in diffs if v not in out]
    return tuple(out)


def _check_hypotheses(S: AffineSemigroup) -> None:
    if not generates_full_lattice(S.generators, S.dim):
        raise HypothesisError(f"dimension hypothesis violated: generators do not span Z^{S.dim}")
    try:
        positive_functional(S)
    except ValueError as exc:
        raise HypothesisError(f"strong convexity hypothesis violated: {exc}") from exc


def nash_charts(S: AffineSemigroup, p: int = 0, minors: list[NonzeroMinor] | None = None) -> NashReport:
    """Charts of the Nash blowup of X_S in characteristic p."""
    check_characteristic(p)
    _check_hypotheses(S)
    gamma = gamma_p(S, p, minors)
    vertices = newton_vertices(gamma.exponents, S.cone)
    source_h = tuple(minimal_generators(S))
    d = S.dim
    charts = []
    for m0 in vertices:
        gens = chart_generators(S, gamma.exponents, m0)
        h = tuple(minimal_generators(AffineSemigroup(d, gens)))
        smooth = len(h) == d
        charts.append(NashChart(
            vertex=m0,
            chart_generators=gens,
            minimal_generators=h,
            smooth=smooth,
            isomorphic_to_source=set(h) == set(source_h),
            unimodular_det=det(h) if smooth else None,
        ))
    return NashReport(S, p, gamma, vertices, charts, source_h)


@dataclass
class ChartOutcome:
    chart: NashChart
    status: str
    subtree: NashNode | None = None


@dataclass
class NashNode:
    """One Nash blowup step; singular charts carry the next step as subtree."""

    report: NashReport
    depth: int
    outcomes: list[ChartOutcome] = field(default_factory=list)

    def leaves(self):
        for o in self.outcomes:
            if o.subtree is None:
                yield self.depth, o
            else:
                yield from o.subtree.leaves()

    @property
    def resolved(self) -> bool:
        return all(o.status == SMOOTH for _, o in self.leaves())


def nash_iterate(S: AffineSemigroup, p: int = 0, max_depth: int = 1) -> NashNode:
    """Blow up repeatedly until every chart is smooth, a fixed point or out of depth.

    A chart whose minimal generators equal those of the variety it came from
    is a fixed point and is not expanded again.
    """
    if max_depth < 1:
        raise ValueError("max_depth must be a positive integer")
    return _iterate(S, p, 1, max_depth)


def _iterate(S: AffineSemigroup, p: int, depth: int, max_depth: int) -> NashNode:
    node = NashNode(nash_charts(S, p), depth)
    for chart in node.report.charts:
        if chart.smooth:
            node.outcomes.append(ChartOutcome(chart, SMOOTH))
        elif chart.isomorphic_to_source:
            node.outcomes.append(ChartOutcome(chart, FIXED_POINT))
        elif depth >= max_depth:
            node.outcomes.append(ChartOutcome(chart, UNDECIDED))
        else:
            sub_node = _iterate(chart.semigroup, p, depth + 1, max_depth)
            node.outcomes.append(ChartOutcome(chart, EXPANDED, sub_node))
    return node
