import logging
from dataclasses import dataclass, field
from typing import Iterable

from .config import GENUS_SCAN_CAP
from .errors import TypeConstraintError

LOGGER = logging.getLogger(__name__)

BOUNDARY_S3 = "s3"
BOUNDARY_S2XS1 = "s2xs1"
BOUNDARY_LENS = "lens"
BOUNDARY_OTHER = "other"
BOUNDARY_OPTIONS = [BOUNDARY_S3, BOUNDARY_S2XS1, BOUNDARY_LENS, BOUNDARY_OTHER]

PAGE_DISK = "disk"
PAGE_ANNULUS = "annulus"
PAGE_OTHER = "other"

CONSTRAINT_ALLOWED = "allowed"
CONSTRAINT_FORBIDDEN = "forbidden"
CONSTRAINT_UNCONSTRAINED = "unconstrained"

# page (p, b) -> boundaries that admit an open book with that page
PAGE_RULES: dict[tuple[int, int], tuple[str, frozenset[str]]] = {
    (0, 1): (PAGE_DISK, frozenset({BOUNDARY_S3})),
    (0, 2): (PAGE_ANNULUS, frozenset({BOUNDARY_S3, BOUNDARY_S2XS1, BOUNDARY_LENS})),
}


def is_admissible(g: int, k: int, p: int, b: int) -> bool:
    if min(g, k, p) < 0 or b < 1:
        return False
    return 2 * p + b - 1 <= k <= g + p + b - 1


def check_admissible(g: int, k: int, p: int, b: int) -> None:
    if not is_admissible(g, k, p, b):
        raise TypeConstraintError(
            f"type constraint violated: (g,k;p,b)=({g},{k};{p},{b}) needs g,k,p>=0, b>=1 and 2p+b-1 <= k <= g+p+b-1"
        )


def check_closed_admissible(g: int, k: int) -> None:
    if g < 0 or not 0 <= k <= g:
        raise TypeConstraintError(f"type constraint violated: (g,k)=({g},{k}) needs 0 <= k <= g")


@dataclass(frozen=True)
class OpenBookPage:
    p: int
    b: int

    def __post_init__(self) -> None:
        if self.b < 1 or self.p < 0:
            raise ValueError(f"page Sigma_{{{self.p},{self.b}}} needs p >= 0 and b >= 1")

    @property
    def kind(self) -> str:
        rule = PAGE_RULES.get((self.p, self.b))
        return rule[0] if rule else PAGE_OTHER


@dataclass(frozen=True, order=True)
class RelativeTrisectionType:
    g: int
    k: int
    p: int
    b: int

    def __post_init__(self) -> None:
        check_admissible(self.g, self.k, self.p, self.b)

    @property
    def A(self) -> int:
        return self.g + self.p + self.b - 1 - self.k

    @property
    def chi(self) -> int:
        return self.g - 3 * self.k + 3 * self.p + 2 * self.b - 1

    @property
    def page(self) -> OpenBookPage:
        return OpenBookPage(self.p, self.b)

    def as_tuple(self) -> tuple[int, int, int, int]:
        return (self.g, self.k, self.p, self.b)

    def to_dict(self) -> dict:
        return {"g": self.g, "k": self.k, "p": self.p, "b": self.b, "A": self.A, "chi": self.chi}

    def __str__(self) -> str:
        return f"({self.g},{self.k};{self.p},{self.b})"


@dataclass(frozen=True)
class FilteredType:
    type: RelativeTrisectionType
    constraint: str

    @property
    def unconstrained(self) -> bool:
        return self.constraint == CONSTRAINT_UNCONSTRAINED


@dataclass(frozen=True)
class GenusBound:
    chi: int
    boundary: str
    genus: int | None
    evidence: tuple[FilteredType, ...] = field(default_factory=tuple)
    scan_cap: int = GENUS_SCAN_CAP

    @property
    def found(self) -> bool:
        return self.genus is not None

    def describe(self) -> str:
        if self.genus is None:
            return f"no bound found <= {self.scan_cap}"
        return f"minimal genus {self.genus}"


def _types_of_genus(chi: int, g: int) -> list[RelativeTrisectionType]:
    out: list[RelativeTrisectionType] = []
    for p in range(g + 1):
        for a in range(g - p + 1):
            b = 2 - chi + 3 * a - 2 * g
            k = g + p + b - 1 - a
            if is_admissible(g, k, p, b):
                out.append(RelativeTrisectionType(g, k, p, b))
    return out


def enumerate_types(chi: int, g_max: int) -> list[RelativeTrisectionType]:
    types: list[RelativeTrisectionType] = []
    for g in range(max(g_max, -1) + 1):
        types.extend(_types_of_genus(chi, g))
    return sorted(types, key=lambda t: t.as_tuple())


def page_constraint(page: OpenBookPage, boundary: str) -> str:
    if boundary not in BOUNDARY_OPTIONS:
        raise ValueError(f"unknown boundary {boundary!r}; expected one of {', '.join(BOUNDARY_OPTIONS)}")
    rule = PAGE_RULES.get((page.p, page.b))
    if rule is None:
        return CONSTRAINT_UNCONSTRAINED
    return CONSTRAINT_ALLOWED if boundary in rule[1] else CONSTRAINT_FORBIDDEN


def openbook_boundary_filter(types: Iterable[RelativeTrisectionType], boundary: str) -> list[FilteredType]:
    kept: list[FilteredType] = []
    for t in types:
        constraint = page_constraint(t.page, boundary)
        if constraint == CONSTRAINT_FORBIDDEN:
            LOGGER.debug("dropping %s: %s page cannot bound %s", t, t.page.kind, boundary)
            continue
        kept.append(FilteredType(t, constraint))
    return kept


def minimal_genus_bound(chi: int, boundary: str, scan_cap: int = GENUS_SCAN_CAP) -> GenusBound:
    for g in range(scan_cap + 1):
        survivors = openbook_boundary_filter(_types_of_genus(chi, g), boundary)
        if survivors:
            return GenusBound(chi, boundary, g, tuple(survivors), scan_cap)
    return GenusBound(chi, boundary, None, (), scan_cap)
