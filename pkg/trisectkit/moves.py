import logging
from dataclasses import dataclass
from typing import Iterable, Sequence, TypeVar, Union

from .diagram import (
    FAMILIES,
    ClosedTrisectionDiagram,
    RelativeTrisectionDiagram,
    TrisectionDiagram,
    validate_closed,
    validate_relative,
)
from .errors import AlreadyClosedError, CapOffError, DiagramInvalidError, MoveError
from .lattice import IntegerMatrix
from .surface import H1Class, SurfaceModel, cap_classes, check_on_surface, is_isotropic, symplectic_form, symplectic_pairing

LOGGER = logging.getLogger(__name__)

D = TypeVar("D", bound=TrisectionDiagram)


@dataclass(frozen=True)
class Handleslide:
    family: str
    curve: int
    over: int
    sign: int = 1

    def inverse(self) -> "Handleslide":
        return Handleslide(self.family, self.curve, self.over, -self.sign)


@dataclass(frozen=True)
class Transvection:
    twist: H1Class
    power: int = 1

    def inverse(self) -> "Transvection":
        return Transvection(self.twist, -self.power)


Move = Union[Handleslide, Transvection]


@dataclass(frozen=True)
class SymplecticMap:
    surface: SurfaceModel
    matrix: IntegerMatrix

    def apply(self, x: H1Class) -> H1Class:
        check_on_surface((x,), self.surface)
        n = self.surface.dimension
        return H1Class(tuple(sum(self.matrix[i, j] * x[j] for j in range(n)) for i in range(n)))

    def is_symplectic(self) -> bool:
        form = IntegerMatrix.from_rows(symplectic_form(self.surface), self.surface.dimension)
        return self.matrix.transpose() @ form @ self.matrix == form


def handleslide(diagram: D, family: str, i: int, j: int, sign: int = 1) -> D:
    """Replace curve ``i`` of ``family`` by curve i + sign * curve j.

    Works on any diagram, valid or not; only the edited family is re-checked for isotropy. The
    span of every family is unchanged, so a homologically valid diagram stays valid with the
    same validation report.
    """
    if family not in FAMILIES:
        raise MoveError(f"unknown family {family!r}; expected one of {', '.join(FAMILIES)}")
    if sign not in (1, -1):
        raise MoveError(f"slide sign must be +1 or -1, got {sign}")
    if i == j:
        raise MoveError("cannot slide a curve over itself")
    curves = list(diagram.family(family))
    for index in (i, j):
        if not 0 <= index < len(curves):
            raise MoveError(f"curve index {index} out of range for {family} ({len(curves)} curves)")
    curves[i] = curves[i] + sign * curves[j]
    if not is_isotropic(curves, diagram.surface):
        raise MoveError(f"slide left {family} not homologically disjoint")
    return diagram.with_family(family, curves)


def transvection_map(surface: SurfaceModel, c: H1Class, n: int = 1) -> SymplecticMap:
    check_on_surface((c,), surface)
    dim = surface.dimension
    columns = []
    for e in range(dim):
        unit = H1Class(tuple(int(t == e) for t in range(dim)))
        columns.append(_transvect(unit, c, n, surface).coords)
    rows = [[columns[j][i] for j in range(dim)] for i in range(dim)]
    return SymplecticMap(surface, IntegerMatrix.from_rows(rows, dim))


def _transvect(x: H1Class, c: H1Class, n: int, surface: SurfaceModel) -> H1Class:
    return x + (n * symplectic_pairing(x, c, surface)) * c


def transvection(diagram: D, c: H1Class, n: int = 1) -> D:
    check_on_surface((c,), diagram.surface)
    if not c.is_primitive():
        raise MoveError(f"twisting class must be primitive, content is {c.content}")
    s = diagram.surface
    updated = {name: tuple(_transvect(x, c, n, s) for x in diagram.family(name)) for name in FAMILIES}
    return type(diagram)(s, **updated)


def apply_move(diagram: D, move: Move) -> D:
    if isinstance(move, Handleslide):
        return handleslide(diagram, move.family, move.curve, move.over, move.sign)
    if isinstance(move, Transvection):
        return transvection(diagram, move.twist, move.power)
    raise MoveError(f"unknown move {move!r}")


def apply_moves(diagram: D, moves: Iterable[Move]) -> D:
    for move in moves:
        diagram = apply_move(diagram, move)
    return diagram


def inverse_moves(moves: Sequence[Move]) -> list[Move]:
    return [m.inverse() for m in reversed(moves)]


def cap_off(diagram: RelativeTrisectionDiagram) -> ClosedTrisectionDiagram:
    if diagram.surface.is_closed:
        raise AlreadyClosedError(f"already closed: {diagram.surface} has no boundary to cap")
    if diagram.p != 0:
        raise CapOffError(f"cap-off requires p = 0, diagram has p = {diagram.p}")
    report = validate_relative(diagram)
    if not report.ok:
        raise DiagramInvalidError("cannot cap off a diagram that is not homologically valid", report)
    g, k, _, b = report.inferred_type

    s = diagram.surface
    closed_families = {}
    capped_surface = None
    for name in FAMILIES:
        capped_surface, classes = cap_classes(s, diagram.family(name))
        closed_families[name] = classes
    capped = ClosedTrisectionDiagram(capped_surface, **closed_families)

    closed_report = validate_closed(capped)
    if not closed_report.ok:
        raise DiagramInvalidError("capped diagram is not homologically valid", closed_report)
    if closed_report.inferred_type != (g, k - b + 1):
        raise DiagramInvalidError(
            f"capped diagram has type {closed_report.type_label()}, expected ({g},{k - b + 1})", closed_report
        )
    LOGGER.debug("capped %s diagram to type %s", report.type_label(), closed_report.type_label())
    return capped


def puncture(diagram: ClosedTrisectionDiagram) -> RelativeTrisectionDiagram:
    """Remove one disk from the central surface: the (g,k;0,1) diagram of X minus a 4-ball."""
    s = SurfaceModel(diagram.surface.genus, 1)
    return RelativeTrisectionDiagram(s, **diagram.families())
