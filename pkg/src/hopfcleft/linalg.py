"""Based vector spaces and sparse exact linear maps.

Tensor products are flattened (strict monoidal): a tensor space remembers its
atomic factors and the basis is ordered lexicographically, leftmost factor
most significant. Linear maps are stored sparsely as {(row, col): Scalar}.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import FieldMismatch, NoSolution, ShapeMismatch
from .fields import FieldSpec, Scalar

TENSOR_SEP = "."


@dataclass(frozen=True)
class BasedSpace:
    name: str
    labels: tuple[str, ...]
    field: FieldSpec
    factors: tuple["BasedSpace", ...] = ()

    def __post_init__(self):
        if len(set(self.labels)) != len(self.labels):
            raise ValueError(f"duplicate basis labels in {self.name}")

    @property
    def dim(self) -> int:
        return len(self.labels)

    def index(self, label: str) -> int:
        return self.labels.index(label)

    def same_basis(self, other: "BasedSpace") -> bool:
        """Structural compatibility: same field and basis labels."""
        return self.field == other.field and self.labels == other.labels

    def atomic_factors(self) -> tuple["BasedSpace", ...]:
        return self.factors if self.factors else (self,)

    def __str__(self) -> str:
        return f"{self.name}[{self.dim}]"


def based_space(name: str, labels, field: FieldSpec) -> BasedSpace:
    return BasedSpace(name, tuple(labels), field)


def unit_space(field: FieldSpec) -> BasedSpace:
    """The monoidal unit: the 1-dimensional space with basis label "1"."""
    return BasedSpace("1", ("1",), field)


def tensor_space(*spaces: BasedSpace) -> BasedSpace:
    if not spaces:
        raise ValueError("tensor of no factors")
    if len(spaces) == 1:
        return spaces[0]
    field = spaces[0].field
    for s in spaces:
        if s.field != field:
            raise FieldMismatch("tensor factors over different fields")
    # the monoidal unit is strict: unit factors disappear from the product
    factors = [
        f for s in spaces for f in s.atomic_factors() if f.labels != ("1",)
    ]
    if not factors:
        return unit_space(field)
    if len(factors) == 1:
        return factors[0]
    labels = [""]
    for s in factors:
        labels = [a + TENSOR_SEP + b if a else b for a in labels for b in s.labels]
    name = "(" + "*".join(s.name for s in factors) + ")"
    return BasedSpace(name, tuple(labels), field, tuple(factors))


class LinearMap:
    """A based linear map, stored as a sparse (row, col) -> Scalar dict."""

    __slots__ = ("source", "target", "entries")

    def __init__(self, source: BasedSpace, target: BasedSpace, entries=None):
        self.source = source
        self.target = target
        ents = {}
        if entries:
            for (i, j), v in entries.items():
                if not (0 <= i < target.dim and 0 <= j < source.dim):
                    raise ShapeMismatch(f"entry ({i},{j}) out of range")
                if v.field != source.field:
                    raise FieldMismatch("entry field differs from space field")
                if not v.is_zero():
                    ents[(i, j)] = v
        self.entries = ents

    @staticmethod
    def from_labels(source: BasedSpace, target: BasedSpace, triples) -> "LinearMap":
        """Build from (row_label, col_label, Scalar) triples, summing duplicates."""
        entries = {}
        for row, col, v in triples:
            key = (target.index(row), source.index(col))
            entries[key] = entries.get(key, source.field.zero()) + v
        return LinearMap(source, target, entries)

    @staticmethod
    def identity(space: BasedSpace) -> "LinearMap":
        one = space.field.one()
        return LinearMap(space, space, {(i, i): one for i in range(space.dim)})

    @staticmethod
    def zero(source: BasedSpace, target: BasedSpace) -> "LinearMap":
        return LinearMap(source, target, {})

    def __getitem__(self, key) -> Scalar:
        return self.entries.get(key, self.source.field.zero())

    def column(self, j: int) -> dict:
        return {i: v for (i, jj), v in self.entries.items() if jj == j}

    def is_zero(self) -> bool:
        return not self.entries

    def __eq__(self, other) -> bool:
        if not isinstance(other, LinearMap):
            return NotImplemented
        return (
            self.source.same_basis(other.source)
            and self.target.same_basis(other.target)
            and self.entries == other.entries
        )

    def __hash__(self):
        return hash((self.source.labels, self.target.labels, frozenset(self.entries.items())))

    def __add__(self, other: "LinearMap") -> "LinearMap":
        self._check_parallel(other)
        entries = dict(self.entries)
        zero = self.source.field.zero()
        for k, v in other.entries.items():
            entries[k] = entries.get(k, zero) + v
        return LinearMap(self.source, self.target, entries)

    def __neg__(self) -> "LinearMap":
        return LinearMap(self.source, self.target, {k: -v for k, v in self.entries.items()})

    def __sub__(self, other: "LinearMap") -> "LinearMap":
        return self + (-other)

    def scale(self, c: Scalar) -> "LinearMap":
        return LinearMap(self.source, self.target, {k: c * v for k, v in self.entries.items()})

    def _check_parallel(self, other: "LinearMap"):
        if not (self.source.same_basis(other.source) and self.target.same_basis(other.target)):
            raise ShapeMismatch("maps are not parallel")

    def to_rows(self) -> list[list[Scalar]]:
        zero = self.source.field.zero()
        rows = [[zero] * self.source.dim for _ in range(self.target.dim)]
        for (i, j), v in self.entries.items():
            rows[i][j] = v
        return rows

    def __str__(self) -> str:
        parts = [
            f"{self.target.labels[i]} <- {self.source.labels[j]}: {v}"
            for (i, j), v in sorted(self.entries.items())
        ]
        return f"LinearMap({self.source} -> {self.target}; " + "; ".join(parts) + ")"


def compose(f: LinearMap, g: LinearMap) -> LinearMap:
    """Matrix product f.g (apply g first)."""
    if not f.source.same_basis(g.target):
        raise ShapeMismatch(f"cannot compose {f.source} after {g.target}")
    # group f's entries by column for sparse accumulation
    by_col: dict[int, list] = {}
    for (i, k), v in f.entries.items():
        by_col.setdefault(k, []).append((i, v))
    entries: dict = {}
    zero = g.source.field.zero()
    for (k, j), gv in g.entries.items():
        for i, fv in by_col.get(k, ()):
            key = (i, j)
            acc = entries.get(key)
            entries[key] = fv * gv if acc is None else acc + fv * gv
    return LinearMap(g.source, f.target, entries)


def compose_all(*maps: LinearMap) -> LinearMap:
    result = maps[0]
    for m in maps[1:]:
        result = compose(result, m)
    return result


def tensor_map(f: LinearMap, g: LinearMap) -> LinearMap:
    """Kronecker product consistent with the lexicographic tensor basis."""
    if f.source.field != g.source.field:
        raise FieldMismatch("tensor of maps over different fields")
    source = tensor_space(f.source, g.source)
    target = tensor_space(f.target, g.target)
    gs, gt = g.source.dim, g.target.dim
    entries = {}
    for (i1, j1), v1 in f.entries.items():
        for (i2, j2), v2 in g.entries.items():
            entries[(i1 * gt + i2, j1 * gs + j2)] = v1 * v2
    return LinearMap(source, target, entries)


def tensor_maps(*maps: LinearMap) -> LinearMap:
    result = maps[0]
    for m in maps[1:]:
        result = tensor_map(result, m)
    return result


def permutation_map(factors, perm) -> LinearMap:
    """Reorder tensor factors: output factor i is input factor perm[i]."""
    factors = list(factors)
    dims = [s.dim for s in factors]
    source = tensor_space(*factors)
    target = tensor_space(*[factors[p] for p in perm])
    one = source.field.one()
    entries = {}
    for flat in range(source.dim):
        idx = []
        rest = flat
        for d in reversed(dims):
            idx.append(rest % d)
            rest //= d
        idx.reverse()
        out = 0
        for p in perm:
            out = out * dims[p] + idx[p]
        entries[(out, flat)] = one
    return LinearMap(source, target, entries)


def flip_map(x: BasedSpace, y: BasedSpace) -> LinearMap:
    """The symmetric vector-space flip x (tensor) y -> y (tensor) x."""
    one = x.field.one()
    entries = {}
    for i in range(x.dim):
        for j in range(y.dim):
            entries[(j * x.dim + i, i * y.dim + j)] = one
    return LinearMap(tensor_space(x, y), tensor_space(y, x), entries)


def _rref(rows: list[list[Scalar]]) -> tuple[list[list[Scalar]], list[int]]:
    """In-place reduced row echelon form; returns (rows, pivot column list)."""
    if not rows:
        return rows, []
    ncols = len(rows[0])
    pivots = []
    r = 0
    for c in range(ncols):
        pivot = next((i for i in range(r, len(rows)) if not rows[i][c].is_zero()), None)
        if pivot is None:
            continue
        rows[r], rows[pivot] = rows[pivot], rows[r]
        inv = rows[r][c].inverse()
        rows[r] = [v * inv for v in rows[r]]
        for i in range(len(rows)):
            if i != r and not rows[i][c].is_zero():
                factor = rows[i][c]
                rows[i] = [a - factor * b for a, b in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
        if r == len(rows):
            break
    return rows, pivots


def kernel_basis(f: LinearMap) -> list[list[Scalar]]:
    """Reduced-echelon kernel basis (as coordinate vectors in f.source)."""
    field = f.source.field
    zero, one = field.zero(), field.one()
    rows, pivots = _rref(f.to_rows())
    free = [c for c in range(f.source.dim) if c not in pivots]
    basis = []
    for c in free:
        vec = [zero] * f.source.dim
        vec[c] = one
        for r, pc in enumerate(pivots):
            vec[pc] = -rows[r][c]
        basis.append(vec)
    return basis


def equalizer(f: LinearMap, g: LinearMap) -> tuple[BasedSpace, LinearMap]:
    """Equalizer of parallel maps: (E, inclusion) with E = ker(f - g)."""
    f._check_parallel(g)
    basis = kernel_basis(f - g)
    labels = tuple(f"e{k}" for k in range(len(basis)))
    space = BasedSpace(f"eq({f.source.name})", labels, f.source.field)
    entries = {}
    for k, vec in enumerate(basis):
        for i, v in enumerate(vec):
            if not v.is_zero():
                entries[(i, k)] = v
    return space, LinearMap(space, f.source, entries)


def solve_linear(a: LinearMap, b: LinearMap) -> LinearMap:
    """Exact solution x of a.x = b, or NoSolution.

    When the system is underdetermined, free coordinates are set to zero,
    which makes the result deterministic.
    """
    if not a.target.same_basis(b.target):
        raise ShapeMismatch("solve: targets differ")
    field = a.source.field
    zero = field.zero()
    nb = b.source.dim
    rows = [arow + brow for arow, brow in zip(a.to_rows(), b.to_rows())]
    rows, pivots = _rref(rows)
    na = a.source.dim
    for r, c in enumerate(pivots):
        if c >= na:
            raise NoSolution("inconsistent linear system")
    entries = {}
    for r, c in enumerate(pivots):
        for j in range(nb):
            v = rows[r][na + j]
            if not v.is_zero():
                entries[(c, j)] = v
    return LinearMap(b.source, a.source, entries)


def invert(f: LinearMap) -> LinearMap:
    """Two-sided matrix inverse of a square map, or NoSolution."""
    if f.source.dim != f.target.dim:
        raise ShapeMismatch("only square maps can be inverted")
    g = solve_linear(f, LinearMap.identity(f.target))
    g = LinearMap(f.target, f.source, g.entries)
    if compose(g, f) != LinearMap.identity(f.source):
        raise NoSolution("map is singular")
    return g


def nullity(f: LinearMap) -> int:
    _, pivots = _rref(f.to_rows())
    return f.source.dim - len(pivots)


def factor_through_injection(iota: LinearMap, g: LinearMap) -> LinearMap:
    """The unique h with iota.h = g, for injective iota; NoSolution if g misses the image."""
    return solve_linear(iota, g)
