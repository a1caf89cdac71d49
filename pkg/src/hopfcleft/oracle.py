"""Brute-force enumeration oracles over small prime fields.

These independently validate the closed-form constructions: cocycles are
found by sweeping every scalar assignment and filtering with the full
verifier, and convolution inverses are found by exhaustive two-sided search.
Enumeration order is lexicographic over the unknown assignments, so results
are deterministic.
"""

from __future__ import annotations

from dataclasses import dataclass

from .braided import Measuring
from .cocycle import Cocycle, check_cocycle
from .errors import NotInvertible, SearchSpaceTooLarge
from .fields import FieldSpec
from .hopf import AlgebraData, CoalgebraData, convolution, convolution_unit
from .linalg import LinearMap, compose, tensor_map, tensor_space

DEFAULT_BOUND = 1_000_000


@dataclass(frozen=True)
class SearchSpace:
    """A finite family of scalar maps: unknowns indexed by (row, col) slots."""

    unknowns: tuple[tuple[int, int], ...]
    field: FieldSpec
    bound: int = DEFAULT_BOUND

    def __post_init__(self):
        if self.field.kind != "prime":
            raise SearchSpaceTooLarge("exhaustive search requires a prime field")
        if self.count() > self.bound:
            raise SearchSpaceTooLarge(
                f"{self.field.p}^{len(self.unknowns)} candidates exceed the bound {self.bound}")

    def count(self) -> int:
        return self.field.p ** len(self.unknowns)

    def assignments(self):
        """All value tuples in lexicographic order."""
        p = self.field.p
        n = len(self.unknowns)
        current = [0] * n
        while True:
            yield tuple(current)
            i = n - 1
            while i >= 0 and current[i] == p - 1:
                current[i] = 0
                i -= 1
            if i < 0:
                return
            current[i] += 1


def _candidate_maps(source, target, space: SearchSpace):
    field = space.field
    for values in space.assignments():
        entries = {}
        for slot, v in zip(space.unknowns, values):
            if v:
                entries[slot] = field.scalar(v)
        yield LinearMap(source, target, entries)


def enumerate_cocycles(
    m: Measuring,
    bound: int = DEFAULT_BOUND,
    support: list[tuple[str, str]] | None = None,
) -> list[Cocycle]:
    """Every map H (x) H -> A passing the full cocycle check, in deterministic
    order. ``support`` optionally restricts the unknowns to the named
    (target label, source label) slots; a restricted sweep only claims
    completeness on that support."""
    source = tensor_space(m.hopf.space, m.hopf.space)
    target = m.space
    if support is None:
        slots = [(i, j) for i in range(target.dim) for j in range(source.dim)]
    else:
        slots = [(target.index(r), source.index(c)) for r, c in support]
    space = SearchSpace(tuple(slots), target.field, bound)
    found = []
    left_unit, right_unit, want = _unitality_filter(m)
    for sigma in _candidate_maps(source, target, space):
        # every cocycle is unital on both slots; filter before verifying
        if compose(sigma, left_unit) != want or compose(sigma, right_unit) != want:
            continue
        cocycle, _ = check_cocycle(m, sigma)
        if cocycle is not None:
            found.append(cocycle)
    return found


def _unitality_filter(m: Measuring):
    id_h = LinearMap.identity(m.hopf.space)
    left = tensor_map(m.hopf.unit, id_h)
    right = tensor_map(id_h, m.hopf.unit)
    want = compose(m.algebra.unit, m.hopf.counit)
    return left, right, want


def oracle_convolution_inverse(
    f: LinearMap, c: CoalgebraData, a: AlgebraData, bound: int = DEFAULT_BOUND
) -> LinearMap:
    """Exhaustive search for the two-sided convolution inverse; raises
    NotInvertible after a full sweep without a witness."""
    slots = tuple((i, j) for i in range(a.space.dim) for j in range(c.space.dim))
    space = SearchSpace(slots, a.space.field, bound)
    unit = convolution_unit(c, a)
    for g in _candidate_maps(c.space, a.space, space):
        if convolution(f, g, c, a) == unit and convolution(g, f, c, a) == unit:
            return g
    raise NotInvertible("exhausted all candidates without finding an inverse")


def enumerate_zprime(b, bound: int = DEFAULT_BOUND) -> list:
    """Complete list of restricted scalar cocycles on a bosonization, found by
    sweeping the values on R x R pairs (which determine the whole map by the
    restriction formula) and filtering with the full verifier. Returns
    ScalarCocycleH objects in deterministic order."""
    from .lifting import check_zprime
    from .linalg import compose, tensor_maps, unit_space

    g = b.source
    rs = g.space
    field = rs.field
    source = tensor_space(rs, rs)
    slots = tuple((0, j) for j in range(source.dim))
    space = SearchSpace(slots, field, bound)
    target = unit_space(field)
    spread = tensor_maps(
        LinearMap.identity(rs), g.hopf.yd.module.action, b.ambient.counit)
    id_r = LinearMap.identity(rs)
    left = tensor_map(g.hopf.unit, id_r)
    right = tensor_map(id_r, g.hopf.unit)
    want = g.hopf.counit
    found = []
    for pi_map in _candidate_maps(source, target, space):
        # unitality of the restriction is necessary; filter before extending
        if compose(pi_map, left) != want or compose(pi_map, right) != want:
            continue
        result = check_zprime(b, compose(pi_map, spread))
        if result.in_zprime:
            found.append(result)
    return found
