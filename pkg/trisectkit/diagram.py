"""Trisection diagrams at the level of first homology.

Validation checks necessary homological conditions only: a passing report means the diagram is
homologically valid, never that it is a genuine trisection diagram.
"""

import logging
from dataclasses import dataclass, field, replace
from typing import Sequence

from .errors import NonstandardPairError, SurfaceMismatchError
from .lattice import IntegerMatrix, integer_rank, lagrangian_span, smith_normal_form
from .params import check_admissible, check_closed_admissible, is_admissible
from .surface import H1Class, SurfaceModel, cap_classes, check_on_surface, is_isotropic, pairing_matrix

LOGGER = logging.getLogger(__name__)

FAMILIES = ("alpha", "beta", "gamma")
PAIRS = (("alpha", "beta"), ("beta", "gamma"), ("gamma", "alpha"))

FAIL_CARDINALITY = "family cardinalities differ"
FAIL_TOO_MANY = "more curves than the genus"
FAIL_CLOSED_COUNT = "closed diagram needs g curves per family"
FAIL_SURFACE = "incompatible surface"
FAIL_PRIMITIVE = "class not primitive"
FAIL_DISJOINT = "family not homologically disjoint"
FAIL_REL_BOUNDARY = "family not independent rel boundary"
FAIL_PAIR = "nonstandard pair (homological)"
FAIL_INCONSISTENT = "inconsistent pair types"
FAIL_TYPE = "type constraint violated"


@dataclass(frozen=True)
class TrisectionDiagram:
    surface: SurfaceModel
    alpha: tuple[H1Class, ...]
    beta: tuple[H1Class, ...]
    gamma: tuple[H1Class, ...]

    def __post_init__(self) -> None:
        for name in FAMILIES:
            object.__setattr__(self, name, tuple(getattr(self, name)))

    def family(self, name: str) -> tuple[H1Class, ...]:
        if name not in FAMILIES:
            raise ValueError(f"unknown family {name!r}; expected one of {', '.join(FAMILIES)}")
        return getattr(self, name)

    def families(self) -> dict[str, tuple[H1Class, ...]]:
        return {name: getattr(self, name) for name in FAMILIES}

    def with_family(self, name: str, classes: Sequence[H1Class]):
        self.family(name)
        return replace(self, **{name: tuple(classes)})

    @property
    def curve_count(self) -> int:
        return len(self.alpha)


@dataclass(frozen=True)
class RelativeTrisectionDiagram(TrisectionDiagram):
    def __post_init__(self) -> None:
        super().__post_init__()
        if self.surface.boundary < 1:
            raise ValueError("a relative trisection diagram needs a surface with boundary")

    @property
    def p(self) -> int:
        return self.surface.genus - self.curve_count


@dataclass(frozen=True)
class ClosedTrisectionDiagram(TrisectionDiagram):
    def __post_init__(self) -> None:
        super().__post_init__()
        if self.surface.boundary != 0:
            raise ValueError("a closed trisection diagram needs a closed surface")


@dataclass(frozen=True)
class ValidationReport:
    inferred_type: tuple[int, ...] | None
    pair_types: dict[str, int | None] = field(default_factory=dict)
    failures: tuple[str, ...] = ()
    relative: bool = True

    @property
    def ok(self) -> bool:
        return not self.failures

    def type_label(self) -> str:
        if self.inferred_type is None:
            return "unknown"
        if self.relative:
            g, k, p, b = self.inferred_type
            return f"({g},{k};{p},{b})"
        g, k = self.inferred_type
        return f"({g},{k})"

    def to_dict(self) -> dict:
        return {
            "ok": self.ok,
            "status": "homologically valid" if self.ok else "not homologically valid",
            "inferred_type": list(self.inferred_type) if self.inferred_type else None,
            "pair_types": dict(self.pair_types),
            "failures": list(self.failures),
        }


def pair_label(first: str, second: str) -> str:
    return f"{first}/{second}"


def pair_type(delta: Sequence[H1Class], epsilon: Sequence[H1Class], surface: SurfaceModel) -> int:
    if len(delta) != len(epsilon):
        raise ValueError(f"pair families have different lengths ({len(delta)} and {len(epsilon)})")
    check_on_surface(list(delta) + list(epsilon), surface)
    n = len(delta)
    if n == 0:
        return 0
    snf = smith_normal_form(IntegerMatrix.from_rows(pairing_matrix(delta, epsilon, surface), n))
    if any(d != 1 for d in snf.divisors):
        raise NonstandardPairError(f"{FAIL_PAIR}: pairing divisors {snf.divisors}")
    a = snf.rank
    span_rank = integer_rank([x.coords for x in list(delta) + list(epsilon)], surface.dimension)
    if span_rank != n + a:
        raise NonstandardPairError(f"{FAIL_PAIR}: combined span has rank {span_rank}, expected {n + a}")
    return a


def _validate(diagram: TrisectionDiagram, relative: bool) -> ValidationReport:
    s = diagram.surface
    g, b = s.genus, s.boundary
    failures: list[str] = []
    counts = {name: len(diagram.family(name)) for name in FAMILIES}

    if len(set(counts.values())) != 1:
        failures.append(f"{FAIL_CARDINALITY}: " + ", ".join(f"{k}={v}" for k, v in counts.items()))
        return ValidationReport(None, {}, tuple(failures), relative)
    n = counts["alpha"]
    if n > g:
        failures.append(f"{FAIL_TOO_MANY}: {n} curves on genus {g}")
        return ValidationReport(None, {}, tuple(failures), relative)
    if not relative and n != g:
        failures.append(f"{FAIL_CLOSED_COUNT}: found {n}, genus {g}")
        return ValidationReport(None, {}, tuple(failures), relative)

    try:
        for name in FAMILIES:
            check_on_surface(diagram.family(name), s)
    except SurfaceMismatchError as exc:
        failures.append(f"{FAIL_SURFACE}: {exc}")
        return ValidationReport(None, {}, tuple(failures), relative)

    for name in FAMILIES:
        for i, x in enumerate(diagram.family(name)):
            if not (x.is_zero() or x.is_primitive()):
                failures.append(f"{FAIL_PRIMITIVE}: {name} curve {i + 1} has content {x.content}")
    for name in FAMILIES:
        if not is_isotropic(diagram.family(name), s):
            failures.append(f"{FAIL_DISJOINT}: {name}")
    if relative:
        # handle parts must span a rank-n summand, or capping collapses the family
        for name in FAMILIES:
            capped_surface, handle_parts = cap_classes(s, diagram.family(name))
            span = lagrangian_span(handle_parts, capped_surface)
            if span.rank != n or not span.summand:
                failures.append(f"{FAIL_REL_BOUNDARY}: {name}")

    pair_types: dict[str, int | None] = {}
    for first, second in PAIRS:
        label = pair_label(first, second)
        try:
            pair_types[label] = pair_type(diagram.family(first), diagram.family(second), s)
        except NonstandardPairError as exc:
            pair_types[label] = None
            failures.append(f"{FAIL_PAIR}: {label} ({exc})")

    values = [v for v in pair_types.values() if v is not None]
    if len(values) == len(PAIRS) and len(set(values)) != 1:
        failures.append(f"{FAIL_INCONSISTENT}: " + ", ".join(f"{k}={v}" for k, v in pair_types.items()))
    if len(values) != len(PAIRS) or len(set(values)) != 1:
        LOGGER.debug("validation of %s stopped before type inference: %s", s, failures)
        return ValidationReport(None, pair_types, tuple(failures), relative)

    a = values[0]
    p = g - n
    if relative:
        k = g + p + b - 1 - a
        if not (is_admissible(g, k, p, b) and 0 <= a <= g - p):
            failures.append(f"{FAIL_TYPE}: (g,k;p,b)=({g},{k};{p},{b}), A={a}")
        inferred: tuple[int, ...] = (g, k, p, b)
    else:
        k = g - a
        if not 0 <= k <= g:
            failures.append(f"{FAIL_TYPE}: (g,k)=({g},{k})")
        inferred = (g, k)
    LOGGER.debug("validated diagram on %s: type %s, failures %s", s, inferred, failures)
    return ValidationReport(inferred, pair_types, tuple(failures), relative)


def validate_relative(diagram: RelativeTrisectionDiagram) -> ValidationReport:
    return _validate(diagram, relative=True)


def validate_closed(diagram: ClosedTrisectionDiagram) -> ValidationReport:
    return _validate(diagram, relative=False)


def validate(diagram: TrisectionDiagram) -> ValidationReport:
    if isinstance(diagram, RelativeTrisectionDiagram):
        return validate_relative(diagram)
    return validate_closed(diagram)


def _standard_families(s: SurfaceModel, offset: int, n: int, a: int) -> dict[str, list[H1Class]]:
    # dual handles carry a complex projective plane pattern, the rest are parallel
    alpha, beta, gamma = [], [], []
    for i in range(1, n + 1):
        h = offset + i
        alpha.append(s.a(h))
        if i <= a:
            beta.append(s.b(h))
            gamma.append(s.a(h) + s.b(h))
        else:
            beta.append(s.a(h))
            gamma.append(s.a(h))
    return {"alpha": alpha, "beta": beta, "gamma": gamma}


def standard_relative_diagram(g: int, k: int, p: int, b: int) -> RelativeTrisectionDiagram:
    check_admissible(g, k, p, b)
    s = SurfaceModel(g, b)
    a = g + p + b - 1 - k
    return RelativeTrisectionDiagram(s, **_standard_families(s, p, g - p, a))


def standard_closed_diagram(g: int, k: int) -> ClosedTrisectionDiagram:
    check_closed_admissible(g, k)
    s = SurfaceModel(g, 0)
    return ClosedTrisectionDiagram(s, **_standard_families(s, 0, g, g - k))
