"""2-generic determinantal varieties M^2_{m,n} as toric varieties.

The torus-invariant description uses d = m + n - 1 and the generators

    gamma_{i1} = e_i             (1 <= i <= m)
    gamma_{1j} = e_{m+j-1}       (2 <= j <= n)
    gamma_{ij} = -e_1 + e_i + e_{m+j-1}   (i, j >= 2)

laid out as the columns e_1 ... e_d followed by the blocks B_{m+1}, ...,
B_{m+n-1}, where B_{m+j} = {-e_1 + e_i + e_{m+j} : 2 <= i <= m}.
"""

from __future__ import annotations

import itertools
from collections import Counter
from dataclasses import dataclass, field

from .exactla import LatticeMatrix, LatticeVector, add, det
from .polyhedral import RationalCone, dual_cone
from .semigroup import AffineSemigroup


@dataclass(frozen=True)
class DetVarSpec:
    m: int
    n: int
    generators: tuple[LatticeVector, ...]
    index_map: dict[tuple[int, int], int] = field(compare=False)

    @property
    def dim(self) -> int:
        return self.m + self.n - 1

    @property
    def matrix(self) -> LatticeMatrix:
        return LatticeMatrix(self.generators)

    def gamma(self, i: int, j: int) -> LatticeVector:
        """Generator attached to the matrix entry x_{ij} (1-based)."""
        return self.generators[self.index_map[i, j]]

    def semigroup(self) -> AffineSemigroup:
        return AffineSemigroup(self.dim, self.generators, label=f"M2_{self.m},{self.n}")


def detvar_generators(m: int, n: int) -> DetVarSpec:
    if m < 2 or n < 2:
        raise ValueError(f"M^2_(m,n) needs m, n >= 2, got ({m}, {n})")
    d = m + n - 1

    def e(i: int) -> list[int]:
        v = [0] * d
        v[i - 1] = 1
        return v

    gens: list[LatticeVector] = [tuple(e(i)) for i in range(1, d + 1)]
    index_map = {(i, 1): i - 1 for i in range(1, m + 1)}
    index_map.update({(1, j): m + j - 2 for j in range(2, n + 1)})
    for j in range(2, n + 1):
        for i in range(2, m + 1):
            v = e(i)
            v[0] -= 1
            v[m + j - 2] += 1
            index_map[i, j] = len(gens)
            gens.append(tuple(v))
    return DetVarSpec(m, n, tuple(gens), index_map)


@dataclass
class MinorScan:
    subsets: int
    values: Counter
    violations: list[tuple[tuple[int, ...], int]]

    @property
    def unimodular(self) -> bool:
        return not self.violations


def scan_minors(spec: DetVarSpec) -> MinorScan:
    """Every maximal minor of L_{m,n}, by exhaustive enumeration."""
    values: Counter = Counter()
    violations = []
    count = 0
    for idx in itertools.combinations(range(len(spec.generators)), spec.dim):
        x = det([spec.generators[i] for i in idx])
        values[x] += 1
        count += 1
        if x not in (-1, 0, 1):
            violations.append((idx, x))
    return MinorScan(count, values, violations)


@dataclass
class RelationReport:
    verified: int
    expected: int
    failures: list[tuple[int, int, int, int]]

    @property
    def ok(self) -> bool:
        return not self.failures and self.verified == self.expected


def verify_minor_relations(spec: DetVarSpec) -> RelationReport:
    """Check gamma_ij + gamma_lk == gamma_ik + gamma_lj for every 2x2 minor.

    Each quadruple (i, j, l, k) with i < l, j < k stands for the binomial
    x_ij x_lk - x_ik x_lj.
    """
    m, n = spec.m, spec.n
    verified = 0
    failures = []
    for i, l in itertools.combinations(range(1, m + 1), 2):
        for j, k in itertools.combinations(range(1, n + 1), 2):
            g = spec.gamma
            if add(g(i, j), g(l, k)) == add(g(i, k), g(l, j)):
                verified += 1
            else:
                failures.append((i, j, l, k))
    expected = (m * (m - 1) // 2) * (n * (n - 1) // 2)
    return RelationReport(verified, expected, failures)


def conjectured_dual_rays(m: int, n: int) -> list[LatticeVector]:
    """e_2..e_d, e_1+...+e_m and e_1+e_{m+1}+...+e_d."""
    d = m + n - 1
    rays = [tuple(1 if k == i else 0 for k in range(d)) for i in range(1, d)]
    rays.append(tuple(1 if k < m else 0 for k in range(d)))
    rays.append(tuple(1 if k == 0 or k >= m else 0 for k in range(d)))
    return rays


@dataclass
class DualConeVerdict:
    m: int
    n: int
    computed: list[LatticeVector]
    conjectured: list[LatticeVector]

    @property
    def match(self) -> bool:
        return sorted(self.computed) == sorted(self.conjectured)


def dual_cone_conjecture_check(spec: DetVarSpec) -> DualConeVerdict:
    """Compare the computed dual of cone(A) with the conjectured ray list.

    Rays are primitive, so comparing sorted lists compares up to scaling.
    """
    dual = dual_cone(RationalCone(spec.dim, spec.generators))
    return DualConeVerdict(spec.m, spec.n, sorted(dual.rays), sorted(conjectured_dual_rays(spec.m, spec.n)))
