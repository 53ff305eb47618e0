"""Invariants of the closed 4-manifold described by a closed trisection diagram.

With L_alpha, L_beta, L_gamma the spans of the three curve families in H1 of the central
surface:

    H1 = H1(surface) / (L_alpha + L_beta + L_gamma)
    H2 free part = N / Dn,  N = L_alpha & (L_beta + L_gamma),
                            Dn = (L_alpha & L_beta) + (L_alpha & L_gamma)

and for x, y in N with y = y_beta + y_gamma the intersection form is
Q(x, y) = SIGN * omega(x, y_beta).
"""

import logging
from dataclasses import dataclass, field

from sympy import Rational

from .diagram import (
    FAMILIES,
    ClosedTrisectionDiagram,
    RelativeTrisectionDiagram,
    validate_closed,
    validate_relative,
)
from .errors import DiagramInvalidError, InvariantError
from .lattice import (
    AbelianGroup,
    IntegerMatrix,
    LagrangianSubgroup,
    lagrangian_span,
    lattice_intersection,
    lattice_sum,
    quotient_group,
    smith_normal_form,
    solve_integer,
)
from .moves import cap_off
from .params import check_admissible, check_closed_admissible
from .surface import H1Class, symplectic_pairing

LOGGER = logging.getLogger(__name__)

# fixed so that the model diagram (a1, b1, a1+b1) has Q = [+1]
SIGN = -1

OUTCOME_DISTINGUISHED = "distinguished"
OUTCOME_INCONCLUSIVE = "inconclusive"

PARITY_EVEN = "even"
PARITY_ODD = "odd"


def euler_characteristic_relative(g: int, k: int, p: int, b: int) -> int:
    check_admissible(g, k, p, b)
    return g - 3 * k + 3 * p + 2 * b - 1


def euler_characteristic_closed(g: int, k: int) -> int:
    check_closed_admissible(g, k)
    return 2 + g - 3 * k


@dataclass(frozen=True)
class HomologyProfile:
    h0: AbelianGroup
    h1: AbelianGroup
    h2: AbelianGroup
    h3: AbelianGroup
    h4: AbelianGroup
    reduced_confidence: bool = False

    def groups(self) -> list[AbelianGroup]:
        return [self.h0, self.h1, self.h2, self.h3, self.h4]

    @property
    def euler_characteristic(self) -> int:
        return sum((-1) ** i * h.free_rank for i, h in enumerate(self.groups()))

    def to_dict(self) -> dict:
        out = {f"h{i}": h.to_dict() for i, h in enumerate(self.groups())}
        out["reduced_confidence"] = self.reduced_confidence
        return out


@dataclass(frozen=True)
class IntersectionForm:
    matrix: IntegerMatrix
    rank: int
    signature: int
    parity: str
    determinant: int

    @property
    def is_unimodular(self) -> bool:
        return abs(self.determinant) == 1

    def to_dict(self) -> dict:
        return {
            "matrix": self.matrix.to_lists(),
            "rank": self.rank,
            "signature": self.signature,
            "parity": self.parity,
            "determinant": self.determinant,
        }


@dataclass(frozen=True)
class InvariantReport:
    closed_type: tuple[int, int]
    homology: HomologyProfile
    form: IntersectionForm
    euler_characteristic: int

    def to_dict(self) -> dict:
        return {
            "closed_type": list(self.closed_type),
            "homology": self.homology.to_dict(),
            "intersection_form": self.form.to_dict(),
            "euler_characteristic": self.euler_characteristic,
        }


@dataclass(frozen=True)
class Witness:
    invariant: str
    first: str
    second: str

    def __str__(self) -> str:
        return f"{self.invariant}: {self.first} vs {self.second}"


@dataclass(frozen=True)
class DistinguishVerdict:
    outcome: str
    witness: Witness | None
    reports: tuple[InvariantReport | None, InvariantReport | None] = field(default=(None, None))

    @property
    def distinguished(self) -> bool:
        return self.outcome == OUTCOME_DISTINGUISHED

    def to_dict(self) -> dict:
        return {
            "outcome": self.outcome,
            "witness": str(self.witness) if self.witness else None,
            "reports": [r.to_dict() if r else None for r in self.reports],
        }


def _require_valid(diagram: ClosedTrisectionDiagram) -> tuple[int, int]:
    report = validate_closed(diagram)
    if not report.ok:
        raise DiagramInvalidError("invariants need a homologically valid closed diagram", report)
    return report.inferred_type


def _lagrangians(diagram: ClosedTrisectionDiagram) -> dict[str, LagrangianSubgroup]:
    return {name: lagrangian_span(diagram.family(name), diagram.surface) for name in FAMILIES}


def _h2_presentation(lags: dict[str, LagrangianSubgroup]) -> tuple[list[H1Class], tuple[int, ...]]:
    """Classes in N projecting to a basis of the free part of N / Dn, plus the torsion of N / Dn."""
    la, lb, lg = lags["alpha"], lags["beta"], lags["gamma"]
    n_lat = lattice_intersection(la, lattice_sum(lb, lg))
    d_lat = lattice_sum(lattice_intersection(la, lb), lattice_intersection(la, lg))
    if n_lat.rank == 0:
        return [], ()
    dim = la.surface.dimension
    n_rows = n_lat.rows()
    if d_lat.rank == 0:
        return list(n_lat.basis), ()

    coefficients = []
    for x in d_lat.basis:
        solutions = solve_integer(n_rows, dim, x.coords)
        if not solutions:
            raise InvariantError("degenerate subgroup is not contained in N")
        coefficients.append(solutions[0])
    snf = smith_normal_form(IntegerMatrix.from_rows(coefficients, n_lat.rank))
    v_inv = snf.right.inverse()
    w = v_inv @ IntegerMatrix.from_rows(n_rows, dim)
    r = snf.rank
    torsion = tuple(d for d in snf.divisors if d > 1)
    return [H1Class(row) for row in w.entries[r:]], torsion


def homology(diagram: ClosedTrisectionDiagram) -> HomologyProfile:
    g, k = _require_valid(diagram)
    lags = _lagrangians(diagram)
    total = lattice_sum(lattice_sum(lags["alpha"], lags["beta"]), lags["gamma"])
    h1 = quotient_group(total)
    h2_free, _ = _h2_presentation(lags)
    # H2 torsion is read off H1 by duality
    h2 = AbelianGroup(len(h2_free), h1.torsion)
    profile = HomologyProfile(
        h0=AbelianGroup(1),
        h1=h1,
        h2=h2,
        h3=h1.free_part,
        h4=AbelianGroup(1),
        reduced_confidence=bool(h1.torsion),
    )
    if profile.reduced_confidence:
        LOGGER.warning("H1 has torsion %s; H2 torsion inferred by duality", h1.torsion)
    expected = euler_characteristic_closed(g, k)
    if profile.euler_characteristic != expected:
        raise InvariantError(
            f"Euler characteristic mismatch: homology gives {profile.euler_characteristic}, type ({g},{k}) gives {expected}"
        )
    return profile


def _pairing_matrix(
    basis: list[H1Class],
    lags: dict[str, LagrangianSubgroup],
    choice: int,
) -> list[list[int]] | None:
    lb, lg = lags["beta"], lags["gamma"]
    s = lb.surface
    generators = lb.rows() + lg.rows()
    beta_parts = []
    for y in basis:
        solutions = solve_integer(generators, s.dimension, y.coords, alternatives=2)
        if not solutions:
            raise InvariantError("H2 class does not decompose over L_beta + L_gamma")
        if choice >= len(solutions):
            return None
        coeffs = solutions[choice][: lb.rank]
        beta_parts.append(
            H1Class(tuple(sum(c * row[j] for c, row in zip(coeffs, lb.rows())) for j in range(s.dimension)))
        )
    return [[SIGN * symplectic_pairing(x, yb, s) for yb in beta_parts] for x in basis]


def _signature(matrix: list[list[int]]) -> int:
    """Signature by congruence diagonalization over the rationals."""
    n = len(matrix)
    m = [[Rational(x) for x in row] for row in matrix]
    positive = negative = 0
    for i in range(n):
        if m[i][i] == 0:
            swap = next((j for j in range(i + 1, n) if m[j][j] != 0), None)
            if swap is not None:
                m[i], m[swap] = m[swap], m[i]
                for row in m:
                    row[i], row[swap] = row[swap], row[i]
            else:
                partner = next((j for j in range(i + 1, n) if m[i][j] != 0), None)
                if partner is None:
                    continue
                # replace e_i by e_i + e_partner; the new diagonal entry is 2 m[i][partner]
                m[i] = [x + y for x, y in zip(m[i], m[partner])]
                for row in m:
                    row[i] += row[partner]
        pivot = m[i][i]
        for j in range(i + 1, n):
            factor = m[j][i] / pivot
            if factor == 0:
                continue
            m[j] = [x - factor * y for x, y in zip(m[j], m[i])]
            for row in m:
                row[j] -= factor * row[i]
        if pivot > 0:
            positive += 1
        else:
            negative += 1
    return positive - negative


def _parity(matrix: list[list[int]]) -> str:
    n = len(matrix)
    diagonal_even = all(matrix[i][i] % 2 == 0 for i in range(n))
    sums_even = all(
        (matrix[i][i] + 2 * matrix[i][j] + matrix[j][j]) % 2 == 0 for i in range(n) for j in range(i + 1, n)
    )
    return PARITY_EVEN if diagonal_even and sums_even else PARITY_ODD


def form_from_matrix(matrix: list[list[int]]) -> IntersectionForm:
    n = len(matrix)
    q = IntegerMatrix.from_rows(matrix, n) if n else IntegerMatrix.zeros(0, 0)
    if not q.is_symmetric():
        raise InvariantError("pairing ill-defined on this input: form is not symmetric")
    return IntersectionForm(
        matrix=q,
        rank=n,
        signature=_signature(matrix),
        parity=_parity(matrix),
        determinant=q.determinant(),
    )


def intersection_form(diagram: ClosedTrisectionDiagram) -> IntersectionForm:
    _require_valid(diagram)
    lags = _lagrangians(diagram)
    basis, _ = _h2_presentation(lags)
    first = _pairing_matrix(basis, lags, 0)
    second = _pairing_matrix(basis, lags, 1)
    if second is not None and second != first:
        raise InvariantError("pairing ill-defined on this input: decompositions disagree")
    LOGGER.debug("intersection form on %d classes: %s", len(basis), first)
    return form_from_matrix(first)


def invariant_report(diagram: ClosedTrisectionDiagram) -> InvariantReport:
    g, k = _require_valid(diagram)
    return InvariantReport(
        closed_type=(g, k),
        homology=homology(diagram),
        form=intersection_form(diagram),
        euler_characteristic=euler_characteristic_closed(g, k),
    )


def _comparisons(first: InvariantReport, second: InvariantReport) -> list[tuple[str, str, str]]:
    return [
        ("closed type", str(first.closed_type), str(second.closed_type)),
        ("H1", str(first.homology.h1), str(second.homology.h1)),
        ("H2", str(first.homology.h2), str(second.homology.h2)),
        ("H3", str(first.homology.h3), str(second.homology.h3)),
        ("intersection form rank", str(first.form.rank), str(second.form.rank)),
        ("intersection form signature", str(first.form.signature), str(second.form.signature)),
        ("intersection form parity", first.form.parity, second.form.parity),
    ]


def distinguish_closed(first: ClosedTrisectionDiagram, second: ClosedTrisectionDiagram) -> DistinguishVerdict:
    reports = (invariant_report(first), invariant_report(second))
    for name, left, right in _comparisons(*reports):
        if left != right:
            return DistinguishVerdict(OUTCOME_DISTINGUISHED, Witness(name, left, right), reports)
    return DistinguishVerdict(OUTCOME_INCONCLUSIVE, None, reports)


def distinguish(first: RelativeTrisectionDiagram, second: RelativeTrisectionDiagram) -> DistinguishVerdict:
    """Compare two relative diagrams through their capped closed diagrams.

    Differing invariants prove the relative diagrams inequivalent; agreeing invariants prove
    nothing, so the outcome is then "inconclusive", never "equivalent".
    """
    left, right = validate_relative(first), validate_relative(second)
    for report in (left, right):
        if not report.ok:
            raise DiagramInvalidError("distinguish needs homologically valid diagrams", report)
    if left.inferred_type != right.inferred_type:
        return DistinguishVerdict(
            OUTCOME_DISTINGUISHED, Witness("relative type", left.type_label(), right.type_label())
        )
    return distinguish_closed(cap_off(first), cap_off(second))
