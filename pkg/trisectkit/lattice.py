"""Exact integer linear algebra: matrices, Smith normal form, sublattices and quotients."""

from dataclasses import dataclass, field
from typing import NamedTuple, Sequence

from sympy import Matrix, ZZ
from sympy.polys.matrices import DomainMatrix
from sympy.polys.matrices.normalforms import hermite_normal_form, smith_normal_decomp

from .errors import SurfaceMismatchError
from .surface import H1Class, SurfaceModel, check_on_surface, is_isotropic


OP_SUM = "sum"
OP_INTERSECT = "intersect"
OP_QUOTIENT_TORSION = "quotient_torsion"
LATTICE_OPS = (OP_SUM, OP_INTERSECT, OP_QUOTIENT_TORSION)


@dataclass(frozen=True)
class IntegerMatrix:
    rows: int
    cols: int
    entries: tuple[tuple[int, ...], ...]

    def __post_init__(self) -> None:
        entries = tuple(tuple(int(x) for x in row) for row in self.entries)
        if len(entries) != self.rows or any(len(row) != self.cols for row in entries):
            raise ValueError(f"entry count does not match shape {self.rows}x{self.cols}")
        object.__setattr__(self, "entries", entries)

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[int]], cols: int | None = None) -> "IntegerMatrix":
        rows = [list(r) for r in rows]
        if cols is None:
            if not rows:
                raise ValueError("column count is required for a matrix without rows")
            cols = len(rows[0])
        return cls(len(rows), cols, tuple(tuple(r) for r in rows))

    @classmethod
    def identity(cls, n: int) -> "IntegerMatrix":
        return cls(n, n, tuple(tuple(int(i == j) for j in range(n)) for i in range(n)))

    @classmethod
    def zeros(cls, rows: int, cols: int) -> "IntegerMatrix":
        return cls(rows, cols, tuple((0,) * cols for _ in range(rows)))

    def to_lists(self) -> list[list[int]]:
        return [list(row) for row in self.entries]

    def to_domain(self) -> DomainMatrix:
        return _to_domain(self.entries, (self.rows, self.cols))

    def transpose(self) -> "IntegerMatrix":
        columns = tuple(tuple(self.entries[i][j] for i in range(self.rows)) for j in range(self.cols))
        return IntegerMatrix(self.cols, self.rows, columns)

    def __matmul__(self, other: "IntegerMatrix") -> "IntegerMatrix":
        if self.cols != other.rows:
            raise ValueError(f"cannot multiply {self.rows}x{self.cols} by {other.rows}x{other.cols}")
        out = [
            [sum(self.entries[i][t] * other.entries[t][j] for t in range(self.cols)) for j in range(other.cols)]
            for i in range(self.rows)
        ]
        return IntegerMatrix(self.rows, other.cols, tuple(tuple(r) for r in out))

    def __getitem__(self, index: tuple[int, int]) -> int:
        i, j = index
        return self.entries[i][j]

    def is_square(self) -> bool:
        return self.rows == self.cols

    def is_symmetric(self) -> bool:
        return self.is_square() and all(
            self.entries[i][j] == self.entries[j][i] for i in range(self.rows) for j in range(i)
        )

    def diagonal(self) -> list[int]:
        return [self.entries[i][i] for i in range(min(self.rows, self.cols))]

    def determinant(self) -> int:
        if not self.is_square():
            raise ValueError("determinant of a non-square matrix")
        if self.rows == 0:
            return 1
        return int(self.to_domain().det())

    def is_unimodular(self) -> bool:
        return self.is_square() and abs(self.determinant()) == 1

    def inverse(self) -> "IntegerMatrix":
        if not self.is_unimodular():
            raise ValueError("only unimodular integer matrices have integer inverses")
        if self.rows == 0:
            return self
        inv = Matrix(self.to_lists()).inv()
        return IntegerMatrix.from_rows([[int(inv[i, j]) for j in range(self.cols)] for i in range(self.rows)], self.cols)


class SmithForm(NamedTuple):
    left: IntegerMatrix
    diagonal: IntegerMatrix
    right: IntegerMatrix

    @property
    def divisors(self) -> list[int]:
        return [d for d in self.diagonal.diagonal() if d != 0]

    @property
    def rank(self) -> int:
        return len(self.divisors)


def _to_domain(rows: Sequence[Sequence[int]], shape: tuple[int, int]) -> DomainMatrix:
    return DomainMatrix([[ZZ(x) for x in row] for row in rows], shape, ZZ)


def _from_domain(dm: DomainMatrix) -> IntegerMatrix:
    rows, cols = dm.shape
    return IntegerMatrix(rows, cols, tuple(tuple(int(x) for x in row) for row in dm.to_Matrix().tolist()))


def smith_normal_form(matrix: IntegerMatrix) -> SmithForm:
    """Return (U, D, V) with U @ M @ V == D, U and V unimodular.

    D is diagonal with non-negative entries d1 | d2 | ... followed by zeros.
    """
    m, n = matrix.rows, matrix.cols
    if not any(any(row) for row in matrix.entries):
        return SmithForm(IntegerMatrix.identity(m), matrix, IntegerMatrix.identity(n))
    _, s, t = smith_normal_decomp(matrix.to_domain())
    u, v = _from_domain(s), _from_domain(t)
    d = u @ matrix @ v
    # unit signs stay on the diagonal; move them into U
    u_rows = u.to_lists()
    for i in range(min(m, n)):
        if d[i, i] < 0:
            u_rows[i] = [-x for x in u_rows[i]]
    u = IntegerMatrix.from_rows(u_rows, m)
    return SmithForm(u, u @ matrix @ v, v)


def elementary_divisors(rows: Sequence[Sequence[int]], cols: int) -> list[int]:
    if not rows:
        return []
    return smith_normal_form(IntegerMatrix.from_rows(rows, cols)).divisors


def hermite_rows(rows: Sequence[Sequence[int]], cols: int) -> list[tuple[int, ...]]:
    """Row-style Hermite normal form: a canonical basis of the lattice spanned by ``rows``.

    Each basis row starts with a positive pivot, pivots move right row by row, and the entries
    above a pivot are reduced modulo it.
    """
    work = [tuple(r) for r in rows if any(r)]
    if not work:
        return []
    # sympy puts pivots at the bottom of generator columns; reversing coordinates and order maps
    # that form onto leading pivots
    columns = [[row[j] for row in work] for j in reversed(range(cols))]
    basis = _from_domain(hermite_normal_form(_to_domain(columns, (cols, len(work))))).transpose()
    return [tuple(reversed(r)) for r in reversed(basis.entries)]


def integer_rank(rows: Sequence[Sequence[int]], cols: int) -> int:
    return len(hermite_rows(rows, cols))


def left_kernel(rows: Sequence[Sequence[int]], cols: int) -> list[tuple[int, ...]]:
    """Basis of {x in Z^m : x @ M == 0} for the m x cols matrix M given by ``rows``."""
    m = len(rows)
    if m == 0:
        return []
    snf = smith_normal_form(IntegerMatrix.from_rows(rows, cols))
    r = snf.rank
    return hermite_rows(snf.left.entries[r:], m)


def solve_integer(rows: Sequence[Sequence[int]], cols: int, target: Sequence[int], alternatives: int = 1) -> list[list[int]]:
    """Integer coefficient vectors c with c @ M == target.

    Returns up to ``alternatives`` distinct solutions (more than one only when the rows are
    dependent), or an empty list if target is not in the row lattice.
    """
    m = len(rows)
    if m == 0:
        return [[]] if not any(target) else []
    snf = smith_normal_form(IntegerMatrix.from_rows(rows, cols))
    u, d, v = snf
    r = snf.rank
    tv = [sum(target[k] * v.entries[k][j] for k in range(cols)) for j in range(cols)]
    if any(tv[j] for j in range(r, cols)):
        return []
    z = []
    for i in range(r):
        q, rem = divmod(tv[i], d.entries[i][i])
        if rem:
            return []
        z.append(q)
    base = z + [0] * (m - r)
    candidates = [base]
    for free in range(r, m):
        if len(candidates) >= alternatives:
            break
        shifted = list(base)
        shifted[free] = 1
        candidates.append(shifted)
    return [
        [sum(zi * u.entries[i][j] for i, zi in enumerate(z_vec)) for j in range(m)]
        for z_vec in candidates[:alternatives]
    ]


@dataclass(frozen=True)
class AbelianGroup:
    free_rank: int
    torsion: tuple[int, ...] = field(default_factory=tuple)

    @property
    def free_part(self) -> "AbelianGroup":
        return AbelianGroup(self.free_rank)

    def is_trivial(self) -> bool:
        return self.free_rank == 0 and not self.torsion

    def to_dict(self) -> dict:
        return {"free_rank": self.free_rank, "torsion": list(self.torsion)}

    def __str__(self) -> str:
        parts: list[str] = []
        if self.free_rank == 1:
            parts.append("Z")
        elif self.free_rank > 1:
            parts.append(f"Z^{self.free_rank}")
        parts.extend(f"Z/{t}" for t in self.torsion)
        return " + ".join(parts) if parts else "0"


@dataclass(frozen=True)
class LagrangianSubgroup:
    surface: SurfaceModel
    basis: tuple[H1Class, ...]
    rank: int
    elementary_divisors: tuple[int, ...]
    isotropic: bool
    summand: bool

    def rows(self) -> list[tuple[int, ...]]:
        return [x.coords for x in self.basis]

    def contains(self, x: H1Class) -> bool:
        return bool(solve_integer(self.rows(), self.surface.dimension, x.coords)) if self.rank else x.is_zero()


def lagrangian_span(classes: Sequence[H1Class], surface: SurfaceModel) -> LagrangianSubgroup:
    check_on_surface(classes, surface)
    dim = surface.dimension
    basis = [H1Class(r) for r in hermite_rows([x.coords for x in classes], dim)]
    divisors = tuple(elementary_divisors([x.coords for x in basis], dim))
    return LagrangianSubgroup(
        surface=surface,
        basis=tuple(basis),
        rank=len(basis),
        elementary_divisors=divisors,
        isotropic=is_isotropic(basis, surface),
        summand=all(x == 1 for x in divisors),
    )


def _check_same_surface(a: LagrangianSubgroup, b: LagrangianSubgroup) -> None:
    if a.surface != b.surface:
        raise SurfaceMismatchError(f"surface mismatch: {a.surface} vs {b.surface}")


def lattice_sum(a: LagrangianSubgroup, b: LagrangianSubgroup) -> LagrangianSubgroup:
    _check_same_surface(a, b)
    return lagrangian_span(list(a.basis) + list(b.basis), a.surface)


def lattice_intersection(a: LagrangianSubgroup, b: LagrangianSubgroup) -> LagrangianSubgroup:
    _check_same_surface(a, b)
    dim = a.surface.dimension
    if a.rank == 0 or b.rank == 0:
        return lagrangian_span([], a.surface)
    stacked = a.rows() + [tuple(-x for x in row) for row in b.rows()]
    common = []
    for k in left_kernel(stacked, dim):
        coeffs = k[: a.rank]
        common.append(H1Class(tuple(sum(c * row[j] for c, row in zip(coeffs, a.rows())) for j in range(dim))))
    return lagrangian_span(common, a.surface)


def quotient_group(sub: LagrangianSubgroup) -> AbelianGroup:
    """Isomorphism type of Z^dim / sub."""
    dim = sub.surface.dimension
    torsion = tuple(d for d in sub.elementary_divisors if d > 1)
    return AbelianGroup(dim - sub.rank, torsion)


def lattice_ops(a: LagrangianSubgroup, b: LagrangianSubgroup, op: str) -> LagrangianSubgroup | AbelianGroup:
    if op == OP_SUM:
        return lattice_sum(a, b)
    if op == OP_INTERSECT:
        return lattice_intersection(a, b)
    if op == OP_QUOTIENT_TORSION:
        return quotient_group(lattice_sum(a, b))
    raise ValueError(f"unknown lattice operation {op!r}; expected one of {', '.join(LATTICE_OPS)}")
