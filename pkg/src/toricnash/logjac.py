"""Exponent sets of logarithmic Jacobian ideals, in any characteristic."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Sequence

from .exactla import IndependenceTracker, LatticeVector, det, generates_full_lattice, vsum
from .semigroup import AffineSemigroup


class DimensionHypothesisError(ValueError):
    def __init__(self, d: int):
        super().__init__(f"dimension hypothesis violated: generators do not span Z^{d}")


def is_prime(p: int) -> bool:
    if p < 2:
        return False
    k = 2
    while k * k <= p:
        if p % k == 0:
            return False
        k += 1
    return True


def check_characteristic(p: int) -> int:
    if p != 0 and not is_prime(p):
        raise ValueError(f"characteristic must be 0 or a prime, got {p}")
    return p


@dataclass(frozen=True)
class NonzeroMinor:
    indices: tuple[int, ...]
    det: int
    exponent: LatticeVector


def nonzero_minors(generators: Sequence[LatticeVector], d: int) -> list[NonzeroMinor]:
    """All d-subsets of generators with nonzero determinant, lexicographically.

    Subsets are grown index by index and a branch is cut as soon as the
    chosen columns become linearly dependent.
    """
    n = len(generators)
    out: list[NonzeroMinor] = []
    tracker = IndependenceTracker(d)
    chosen: list[int] = []

    def grow(start: int) -> None:
        if len(chosen) == d:
            cols = [generators[i] for i in chosen]
            out.append(NonzeroMinor(tuple(chosen), det(cols), vsum(cols, d)))
            return
        for i in range(start, n - (d - len(chosen)) + 1):
            if tracker.push(generators[i]):
                chosen.append(i)
                grow(i + 1)
                chosen.pop()
                tracker.pop()

    grow(0)
    return out


@dataclass
class LogJacobianSet:
    characteristic: int
    exponents: tuple[LatticeVector, ...]
    subset_count: int
    minors: list[NonzeroMinor] = field(default_factory=list, repr=False, compare=False)

    def __len__(self) -> int:
        return len(self.exponents)


def _select(minors: Iterable[NonzeroMinor], p: int) -> tuple[list[NonzeroMinor], tuple[LatticeVector, ...]]:
    kept = [mn for mn in minors if (mn.det % p != 0 if p else mn.det != 0)]
    return kept, tuple(sorted({mn.exponent for mn in kept}))


def _require_full_lattice(S: AffineSemigroup) -> None:
    if not generates_full_lattice(S.generators, S.dim):
        raise DimensionHypothesisError(S.dim)


def gamma_p(S: AffineSemigroup, p: int = 0, minors: list[NonzeroMinor] | None = None) -> LogJacobianSet:
    """Sums of d generators whose determinant is nonzero mod p (p = 0: nonzero)."""
    check_characteristic(p)
    if minors is None:
        _require_full_lattice(S)
        minors = nonzero_minors(S.generators, S.dim)
    kept, exps = _select(minors, p)
    return LogJacobianSet(p, exps, len(kept), kept)


@dataclass
class CharacteristicComparison:
    gamma0: LogJacobianSet
    by_prime: dict[int, LogJacobianSet]
    equal: dict[int, bool]

    @property
    def characteristic_free(self) -> bool:
        return all(self.equal.values())


def compare_characteristics(S: AffineSemigroup, primes: Iterable[int]) -> CharacteristicComparison:
    """Compare the characteristic-p exponent sets with the characteristic-0 one."""
    _require_full_lattice(S)
    minors = nonzero_minors(S.generators, S.dim)
    g0 = gamma_p(S, 0, minors)
    by_prime = {}
    equal = {}
    for p in primes:
        gp = gamma_p(S, p, minors)
        by_prime[p] = gp
        equal[p] = gp.exponents == g0.exponents
    return CharacteristicComparison(g0, by_prime, equal)
