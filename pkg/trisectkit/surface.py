"""Compact oriented surfaces and their first homology in a fixed basis.

Coordinates on Sigma_{g,b} are ordered (a1, b1, ..., ag, bg, d1, ..., d_{b-1}). The handle
classes satisfy omega(ai, bi) = +1; the boundary-parallel classes dj pair to zero with
everything. Only b - 1 boundary classes are carried since the sum of all boundary loops is
null-homologous.
"""

import logging
import re
from dataclasses import dataclass
from typing import Iterable, Sequence

from sympy import igcd

from .errors import AlreadyClosedError, SurfaceMismatchError

LOGGER = logging.getLogger(__name__)

_TERM_RE = re.compile(r"([+-]?)\s*(\d*)\s*\*?\s*([abd])(\d+)")


@dataclass(frozen=True)
class SurfaceModel:
    genus: int
    boundary: int = 0

    def __post_init__(self) -> None:
        for name in ("genus", "boundary"):
            value = getattr(self, name)
            if isinstance(value, bool) or not isinstance(value, int) or value < 0:
                raise ValueError(f"surface {name} must be a non-negative integer, got {value!r}")

    @property
    def dimension(self) -> int:
        return 2 * self.genus + max(self.boundary - 1, 0)

    @property
    def boundary_dimension(self) -> int:
        return max(self.boundary - 1, 0)

    @property
    def is_closed(self) -> bool:
        return self.boundary == 0

    def zero(self) -> "H1Class":
        return H1Class((0,) * self.dimension)

    def a(self, i: int) -> "H1Class":
        return self._unit(2 * self._handle(i))

    def b(self, i: int) -> "H1Class":
        return self._unit(2 * self._handle(i) + 1)

    def d(self, j: int) -> "H1Class":
        if not 1 <= j <= self.boundary_dimension:
            raise IndexError(f"boundary class d{j} does not exist on {self}")
        return self._unit(2 * self.genus + j - 1)

    def basis_labels(self) -> list[str]:
        labels: list[str] = []
        for i in range(1, self.genus + 1):
            labels.extend([f"a{i}", f"b{i}"])
        labels.extend(f"d{j}" for j in range(1, self.boundary_dimension + 1))
        return labels

    def _handle(self, i: int) -> int:
        if not 1 <= i <= self.genus:
            raise IndexError(f"handle {i} does not exist on {self}")
        return i - 1

    def _unit(self, index: int) -> "H1Class":
        coords = [0] * self.dimension
        coords[index] = 1
        return H1Class(tuple(coords))

    def __str__(self) -> str:
        return f"Sigma_{{{self.genus},{self.boundary}}}"


@dataclass(frozen=True)
class H1Class:
    coords: tuple[int, ...]

    def __post_init__(self) -> None:
        coords = tuple(self.coords)
        for c in coords:
            if isinstance(c, bool) or not isinstance(c, int):
                raise TypeError(f"homology coordinates must be integers, got {c!r}")
        object.__setattr__(self, "coords", coords)

    def __len__(self) -> int:
        return len(self.coords)

    def __iter__(self):
        return iter(self.coords)

    def __getitem__(self, index):
        return self.coords[index]

    def __add__(self, other: "H1Class") -> "H1Class":
        _same_length(self, other)
        return H1Class(tuple(x + y for x, y in zip(self.coords, other.coords)))

    def __sub__(self, other: "H1Class") -> "H1Class":
        _same_length(self, other)
        return H1Class(tuple(x - y for x, y in zip(self.coords, other.coords)))

    def __neg__(self) -> "H1Class":
        return H1Class(tuple(-x for x in self.coords))

    def __mul__(self, n: int) -> "H1Class":
        return H1Class(tuple(n * x for x in self.coords))

    __rmul__ = __mul__

    @property
    def content(self) -> int:
        g = 0
        for c in self.coords:
            g = igcd(g, c)
        return int(g)

    def is_zero(self) -> bool:
        return not any(self.coords)

    def is_primitive(self) -> bool:
        return self.content == 1

    def lies_on(self, surface: SurfaceModel) -> bool:
        return len(self.coords) == surface.dimension


def _same_length(x: H1Class, y: H1Class) -> None:
    if len(x) != len(y):
        raise SurfaceMismatchError("incompatible surface")


def check_on_surface(classes: Iterable[H1Class], surface: SurfaceModel) -> None:
    for x in classes:
        if not x.lies_on(surface):
            raise SurfaceMismatchError(
                f"incompatible surface: class of length {len(x)} on {surface} (dimension {surface.dimension})"
            )


def symplectic_pairing(x: H1Class, y: H1Class, surface: SurfaceModel) -> int:
    check_on_surface((x, y), surface)
    total = 0
    for i in range(surface.genus):
        total += x[2 * i] * y[2 * i + 1] - x[2 * i + 1] * y[2 * i]
    return total


def pairing_matrix(left: Sequence[H1Class], right: Sequence[H1Class], surface: SurfaceModel) -> list[list[int]]:
    return [[symplectic_pairing(x, y, surface) for y in right] for x in left]


def symplectic_form(surface: SurfaceModel) -> list[list[int]]:
    n = surface.dimension
    form = [[0] * n for _ in range(n)]
    for i in range(surface.genus):
        form[2 * i][2 * i + 1] = 1
        form[2 * i + 1][2 * i] = -1
    return form


def is_isotropic(classes: Sequence[H1Class], surface: SurfaceModel) -> bool:
    return all(
        symplectic_pairing(classes[i], classes[j], surface) == 0
        for i in range(len(classes))
        for j in range(i + 1, len(classes))
    )


def cap_classes(surface: SurfaceModel, classes: Sequence[H1Class]) -> tuple[SurfaceModel, list[H1Class]]:
    if surface.is_closed:
        raise AlreadyClosedError(f"already closed: {surface} has no boundary to cap")
    check_on_surface(classes, surface)
    capped = SurfaceModel(surface.genus, 0)
    handle_dim = 2 * surface.genus
    LOGGER.debug("capping %d boundary circles of %s", surface.boundary, surface)
    return capped, [H1Class(x.coords[:handle_dim]) for x in classes]


def parse_class(expr: str, surface: SurfaceModel) -> H1Class:
    text = (expr or "").strip()
    if not text:
        raise ValueError("empty class expression")
    if re.fullmatch(r"[+-]?0", text):
        return surface.zero()
    coords = [0] * surface.dimension
    pos = 0
    compact = re.sub(r"\s+", "", text)
    while pos < len(compact):
        m = _TERM_RE.match(compact, pos)
        if not m or m.end() == pos:
            raise ValueError(f"cannot parse class expression {expr!r} at position {pos}")
        if pos > 0 and not m.group(1):
            raise ValueError(f"missing sign between terms in {expr!r}")
        sign = -1 if m.group(1) == "-" else 1
        coeff = int(m.group(2)) if m.group(2) else 1
        kind, index = m.group(3), int(m.group(4))
        unit = {"a": surface.a, "b": surface.b, "d": surface.d}[kind](index)
        coords = [c + sign * coeff * u for c, u in zip(coords, unit.coords)]
        pos = m.end()
    return H1Class(tuple(coords))


def format_class(x: H1Class, surface: SurfaceModel) -> str:
    check_on_surface((x,), surface)
    terms: list[str] = []
    for label, c in zip(surface.basis_labels(), x.coords):
        if c == 0:
            continue
        magnitude = "" if abs(c) == 1 else str(abs(c))
        sign = "-" if c < 0 else ("+" if terms else "")
        terms.append(f"{sign}{magnitude}{label}")
    return "".join(terms) if terms else "0"
