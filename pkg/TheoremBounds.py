"""Sharp bounds on H_f over chemical (n,m)-graphs, and the closed forms they take for the named index families.

Eliminating n1 and n4 writes H_f as linear_part(n, m) + xi1*n2 + xi2*n3. The counts satisfy n2 + 2*n3 = 2m - n (mod 3),
so the residue (2m-n) mod 3 fixes the best possible (n2, n3): (0,0), (1,0) or (0,1). When f falls into CaseI every other
choice makes Gamma_f smaller, giving an upper bound; CaseII gives a lower bound symmetrically.
The TI/coindex bound is the same bound multiplied by n-1."""

import math
from dataclasses import dataclass, replace
from enum import Enum, unique
from fractions import Fraction

from ChemGraph import DegreeVector
from DegreeFunctions import (
    DEFAULT_TOLERANCE,
    DegreeFunction,
    Family,
    UnaddressedRangeError,
    Verdict,
    classify,
    printed_range_check,
    xi_pair_exact,
)
from TopologicalIndices import check_context, linear_part

MIN_ORDER = 5
FBAR_MIN_ORDER = 11

_ORDER_ERROR = "The bound needs a chemical graph with n >= %d, got n=%d."
_EDGE_RANGE_ERROR = "No connected chemical graph has n=%d and m=%d (m must lie in %d..%d)."
_INAPPLICABLE_ERROR = "f=%s is classified %s (xi1=%.17g, xi2=%.17g); the bound needs CaseI or CaseII."
_FBAR_ORDER_ERROR = "The forgotten coindex closed form needs n >= %d, got n=%d."
_NO_CLOSED_FORM_ERROR = "No closed form for family %s."


class InfeasibleParametersError(ValueError):
    """(n, m) admits no connected chemical graph."""


class TheoremNotApplicableError(ValueError):
    """The hypotheses of the bound do not hold (n too small, or f is Boundary/Neither)."""


@unique
class Direction(Enum):
    UPPER_BOUND = "UpperBound"
    LOWER_BOUND = "LowerBound"


@dataclass(frozen=True)
class DegreeSetCondition:
    """Equality holds exactly for the graphs with these n2 and n3 (n1, n4 then follow from n and m)."""

    n2: int
    n3: int

    @classmethod
    def for_residue(cls, residue_value: int) -> "DegreeSetCondition":
        return cls(*((0, 0), (1, 0), (0, 1))[residue_value])

    def matches(self, counts: DegreeVector) -> bool:
        return counts.n2 == self.n2 and counts.n3 == self.n3

    @property
    def description(self) -> str:
        if self.n2 == 1:
            return "{1,2,4} with exactly one degree-2 vertex"
        if self.n3 == 1:
            return "{1,3,4} with exactly one degree-3 vertex"
        return "{1,4}"

    def __str__(self):
        return self.description


@dataclass(frozen=True)
class BoundReport:
    n: int
    m: int
    residue: int
    base: float
    correction: float
    total: float
    direction: Direction
    equality_degree_set: DegreeSetCondition
    exact_total: Fraction | None = None
    theorem: int = 1

    def to_dict(self):
        return {
            "n": self.n,
            "m": self.m,
            "residue": self.residue,
            "base": self.base,
            "correction": self.correction,
            "total": self.total,
            "direction": self.direction,
            "equality_degree_set": self.equality_degree_set.description,
        }

    def respects(self, value: float, exact: Fraction | None = None, tolerance: float = DEFAULT_TOLERANCE) -> bool:
        """Whether an index value lies on the allowed side of the bound."""
        if exact is not None and self.exact_total is not None:
            return exact <= self.exact_total if self.direction == Direction.UPPER_BOUND else exact >= self.exact_total
        slack = tolerance * max(1.0, abs(self.total))
        if self.direction == Direction.UPPER_BOUND:
            return value <= self.total + slack
        return value >= self.total - slack

    def attained_by(self, value: float, exact: Fraction | None = None, tolerance: float = DEFAULT_TOLERANCE) -> bool:
        if exact is not None and self.exact_total is not None:
            return exact == self.exact_total
        return math.isclose(value, self.total, rel_tol=tolerance, abs_tol=tolerance)


def residue(n: int, m: int) -> int:
    return (2 * m - n) % 3


def feasible_m_range(n: int) -> range:
    """Edge counts for which a connected chemical graph of order n exists."""
    return range(n - 1, min(2 * n, n * (n - 1) // 2) + 1)


def check_feasible(n: int, m: int):
    edges = feasible_m_range(n)
    if n < 1 or m not in edges:
        raise InfeasibleParametersError(_EDGE_RANGE_ERROR % (n, m, edges.start, max(edges.stop - 1, edges.start)))


def theorem1_bound(n: int, m: int, f: DegreeFunction, tolerance: float = DEFAULT_TOLERANCE) -> BoundReport:
    """
    The sharp bound on H_f(G) over chemical (n,m)-graphs G.

    :raises TheoremNotApplicableError: n < 5, or f is not strictly CaseI/CaseII.
    :raises InfeasibleParametersError: m outside feasible_m_range(n).
    :raises ContextMismatchError: f is bound to another graph order.
    """
    if n < MIN_ORDER:
        raise TheoremNotApplicableError(_ORDER_ERROR % (MIN_ORDER, n))
    check_feasible(n, m)
    check_context(f, n)
    classification = classify(f, tolerance)
    if classification.verdict == Verdict.CASE_I:
        direction = Direction.UPPER_BOUND
    elif classification.verdict == Verdict.CASE_II:
        direction = Direction.LOWER_BOUND
    else:
        raise TheoremNotApplicableError(
            _INAPPLICABLE_ERROR % (f.describe(), classification.verdict.value, classification.xi1, classification.xi2)
        )
    r = residue(n, m)
    base = linear_part(n, m, f)
    xi_exact = xi_pair_exact(f)
    if base.exact is not None and xi_exact is not None:
        correction_exact = (Fraction(0), xi_exact[0], xi_exact[1])[r]
        exact_total = base.exact + correction_exact
        base_value, correction, total = base.value, float(correction_exact), float(exact_total)
    else:
        exact_total = None
        correction = (0.0, classification.xi1, classification.xi2)[r]
        base_value = base.value
        total = base_value + correction
    return BoundReport(
        n=n,
        m=m,
        residue=r,
        base=base_value,
        correction=correction,
        total=total,
        direction=direction,
        equality_degree_set=DegreeSetCondition.for_residue(r),
        exact_total=exact_total,
    )


def theorem3_bound(n: int, m: int, f: DegreeFunction, tolerance: float = DEFAULT_TOLERANCE) -> BoundReport:
    """The bound on TI(G) + TIbar(G), i.e. (n-1) times the H_f bound."""
    report = theorem1_bound(n, m, f, tolerance)
    return replace(
        report,
        base=(n - 1) * report.base,
        correction=(n - 1) * report.correction,
        total=(n - 1) * report.total,
        exact_total=None if report.exact_total is None else (n - 1) * report.exact_total,
        theorem=3,
    )


def corollary_closed_form(family: Family, parameter: float, n: int, m: int) -> float:
    """
    The printed closed-form bound for a named family, evaluated with the branch of the residue (2m-n) mod 3.
    Multiplicative Zagreb families are returned as the natural logarithm of the bound.
    For FORGOTTEN_COINDEX the parameter is ignored, the order is n.

    :raises UnaddressedRangeError: the parameter lies outside every range the closed forms were stated for.
    """
    if family == Family.FORGOTTEN_COINDEX:
        if n < FBAR_MIN_ORDER:
            raise UnaddressedRangeError(_FBAR_ORDER_ERROR % (FBAR_MIN_ORDER, n))
    else:
        printed_range_check(family, parameter)
    if n < MIN_ORDER:
        raise TheoremNotApplicableError(_ORDER_ERROR % (MIN_ORDER, n))
    check_feasible(n, m)
    r = residue(n, m)
    p = parameter
    ln2, ln3 = math.log(2), math.log(3)
    if family == Family.POWER:
        base = (4 - 4**p) / 3 * n + 2 * (4**p - 1) / 3 * m
        correction = (0.0, -(2**p - 2) * (2**p - 1) / 3, (3 ** (p + 1) - 2 ** (2 * p + 1) - 1) / 3)[r]
        return base + correction
    elif family == Family.SUM_EXDEG:
        base = 4 * p * (1 - p**3) * n / 3 + 2 * p * (4 * p**3 - 1) * m / 3
        correction = (0.0, -2 * p * (p - 1) * (2 * p**2 + 2 * p - 1) / 3, -p * (p - 1) * (8 * p**2 - p - 1) / 3)[r]
        return base + correction
    elif family == Family.SUM_LODEG:
        ln4a = math.log(4) ** p
        base = 8 * ln4a / 3 * m - 4 * ln4a / 3 * n
        correction = (0.0, 2 * (3 * ln2**p - 2 * ln4a) / 3, (9 * ln3**p - 8 * ln4a) / 3)[r]
        return base + correction
    elif family == Family.LN_MULT_ZAGREB1:
        if r == 1:
            return p * ln2 * (4 * m - 2 * n + 1) / 3
        if r == 2:
            return 2 * p * (2 * m - n - 2) / 3 * ln2 + p * ln3
        return 2 * p * (2 * m - n) / 3 * ln2
    elif family == Family.LN_MULT_ZAGREB2:
        if r == 1:
            return 2 * p * (8 * m - 4 * n - 1) / 3 * ln2
        if r == 2:
            return 8 * p * (2 * m - n - 2) / 3 * ln2 + 3 * p * ln3
        return 8 * p * (2 * m - n) / 3 * ln2
    elif family == Family.FORGOTTEN_COINDEX:
        if r == 0:
            return float(2 * (m * (5 * n - 26) - 2 * n * (n - 6)))
        return float(2 * (m * (5 * n - 26) - n * (2 * n - 11) + (8 if r == 1 else 9)))
    raise UnaddressedRangeError(_NO_CLOSED_FORM_ERROR % family.value)
