"""Real functions f on the degree set {1,2,3,4} of chemical graphs.

Only f(1)..f(4) matter for a chemical graph, so every function is "four numbers"; the named families exist so that
their parameters can be checked against the ranges for which the bounds were derived.
Everything is computed in 64-bit floats; integer-valued families additionally have an exact rational path
(see exact_values()) so that strict inequalities are never decided by rounding noise."""

import math
from dataclasses import dataclass
from enum import Enum, unique
from fractions import Fraction

import numpy as np

DEFAULT_TOLERANCE = 1e-9
"""Inequalities closer to equality than this are reported as Boundary, never as CaseI/CaseII."""

SLI_THRESHOLD = (math.log(3) - math.log(4)) / (math.log(math.log(2)) - math.log(math.log(3)))
"""Above this parameter (about 0.6246) x*ln(x)**a satisfies the CaseI chain."""

DEGREES = (1, 2, 3, 4)
_EXACT_EXPONENT_LIMIT = 64


@unique
class Family(Enum):  # values are the tags of the "family:params" mini-grammar
    POWER = "power"  # x**alpha, general zeroth-order Randic index
    SUM_EXDEG = "sei"  # x*a**x, variable sum exdeg index
    SUM_LODEG = "sli"  # x*ln(x)**a, variable sum lodeg index
    LN_MULT_ZAGREB1 = "lnpi1"  # a*ln(x), logarithm of the general multiplicative first Zagreb index
    LN_MULT_ZAGREB2 = "lnpi2"  # a*x*ln(x), logarithm of the general multiplicative second Zagreb index
    FORGOTTEN_COINDEX = "fbar"  # (n-1-x)*x**2, forgotten topological coindex (Lanzhou index)
    ZEROTH_ORDER_COINDEX = "coindex"  # (n-1-x)*x**(alpha-1), general zeroth-order Randic coindex
    CUSTOM_TABLE = "table"  # f(1), f(2), f(3), f(4) given explicitly


@unique
class Verdict(Enum):
    CASE_I = "CaseI"  # both xi negative, 2*xi2 < xi1 < xi2/2: upper bound
    CASE_II = "CaseII"  # both xi positive, xi2/2 < xi1 < 2*xi2: lower bound
    BOUNDARY = "Boundary"  # one of the chains holds, but only up to the tolerance
    NEITHER = "Neither"


_PARAMETER_COUNT = {
    Family.POWER: 1,
    Family.SUM_EXDEG: 1,
    Family.SUM_LODEG: 1,
    Family.LN_MULT_ZAGREB1: 1,
    Family.LN_MULT_ZAGREB2: 1,
    Family.FORGOTTEN_COINDEX: 0,
    Family.ZEROTH_ORDER_COINDEX: 1,
    Family.CUSTOM_TABLE: 4,
}
_ORDER_DEPENDENT = (Family.FORGOTTEN_COINDEX, Family.ZEROTH_ORDER_COINDEX)

# Messages:
_PARAMETER_COUNT_ERROR = "Family '{}' takes {} parameter(s), got {}."
_NOT_FINITE_ERROR = "Parameters must be finite real numbers, got {}."
_SEI_BASE_ERROR = "Variable sum exdeg index needs a > 0 and a != 1, got a={}."
_SLI_EXPONENT_ERROR = "Variable sum lodeg index needs a > 0, got a={}."
_CONTEXT_ORDER_ERROR = "Graph order n must be an integer >= 2, got {}."
_UNEXPECTED_CONTEXT_ERROR = "Family '{}' does not depend on the graph order."
_MISSING_CONTEXT_ERROR = "Family '{}' depends on the graph order n, but none was given."
_DEGREE_RANGE_ERROR = "f is only defined on degrees 1..4, got x={}."
_UNADDRESSED_RANGE_ERROR = "unaddressed: the corollaries make no claim for {} with parameter {}"
_SPEC_SYNTAX_ERROR = "Malformed function spec '{}': expected 'family:param[,param...]' with family one of {}."
_SPEC_NUMBER_ERROR = "Malformed function spec '{}': '{}' is not a number."
_CHAIN_ERROR = "xi1={}, xi2={} satisfy neither chain strictly (verdict {})."
_TOLERANCE_ERROR = "tolerance must be positive, got {}."
_OVERFLOW_ERROR = "{} overflows the float range at x={}."


class FunctionSpecError(ValueError):
    """Malformed textual function spec or invalid family parameters."""


class MissingContextError(ValueError):
    """An order-dependent function was evaluated without a graph order."""


class UnaddressedRangeError(ValueError):
    """The corollaries say nothing about this (family, parameter) pair."""


@dataclass(frozen=True)
class DegreeFunction:
    """A family tag plus its real parameters, and the graph order for the two coindex families.

    An order-dependent function may be created without context_n ("unbound"); bind() fixes the order.
    Evaluating an unbound one raises MissingContextError.
    """

    family: Family
    params: tuple[float, ...] = ()
    context_n: int | None = None

    def __post_init__(self):
        params = tuple(float(p) for p in self.params)
        object.__setattr__(self, "params", params)
        expected = _PARAMETER_COUNT[self.family]
        if len(params) != expected:
            raise FunctionSpecError(_PARAMETER_COUNT_ERROR.format(self.family.value, expected, len(params)))
        if not all(math.isfinite(p) for p in params):
            raise FunctionSpecError(_NOT_FINITE_ERROR.format(params))
        if self.family == Family.SUM_EXDEG and not (params[0] > 0 and params[0] != 1):
            raise FunctionSpecError(_SEI_BASE_ERROR.format(params[0]))
        if self.family == Family.SUM_LODEG and not params[0] > 0:
            raise FunctionSpecError(_SLI_EXPONENT_ERROR.format(params[0]))
        if self.context_n is not None:
            if self.family not in _ORDER_DEPENDENT:
                raise FunctionSpecError(_UNEXPECTED_CONTEXT_ERROR.format(self.family.value))
            if isinstance(self.context_n, bool) or int(self.context_n) != self.context_n or self.context_n < 2:
                raise FunctionSpecError(_CONTEXT_ORDER_ERROR.format(self.context_n))
            object.__setattr__(self, "context_n", int(self.context_n))

    @classmethod
    def power(cls, alpha):
        return cls(Family.POWER, (alpha,))

    @classmethod
    def sum_exdeg(cls, a):
        return cls(Family.SUM_EXDEG, (a,))

    @classmethod
    def sum_lodeg(cls, a):
        return cls(Family.SUM_LODEG, (a,))

    @classmethod
    def ln_mult_zagreb1(cls, a):
        return cls(Family.LN_MULT_ZAGREB1, (a,))

    @classmethod
    def ln_mult_zagreb2(cls, a):
        return cls(Family.LN_MULT_ZAGREB2, (a,))

    @classmethod
    def forgotten_coindex(cls, n=None):
        return cls(Family.FORGOTTEN_COINDEX, (), n)

    @classmethod
    def zeroth_order_coindex(cls, alpha, n=None):
        return cls(Family.ZEROTH_ORDER_COINDEX, (alpha,), n)

    @classmethod
    def table(cls, f1, f2, f3, f4):
        return cls(Family.CUSTOM_TABLE, (f1, f2, f3, f4))

    @classmethod
    def from_family(cls, family: Family, parameter=None, n=None):
        """
        One-parameter constructor used by parameter sweeps. For FORGOTTEN_COINDEX the parameter is ignored
        and n is the order; for ZEROTH_ORDER_COINDEX the parameter is alpha.
        """
        if family == Family.FORGOTTEN_COINDEX:
            return cls(family, (), n)
        if family == Family.ZEROTH_ORDER_COINDEX:
            return cls(family, (parameter,), n)
        if family == Family.CUSTOM_TABLE:
            raise FunctionSpecError(_PARAMETER_COUNT_ERROR.format(family.value, 4, 1))
        return cls(family, (parameter,))

    @property
    def order_dependent(self) -> bool:
        return self.family in _ORDER_DEPENDENT

    def bind(self, n: int) -> "DegreeFunction":
        """The same function with the graph order fixed (a no-op for order-independent families)."""
        if not self.order_dependent:
            return self
        return DegreeFunction(self.family, self.params, n)

    def __call__(self, x: int) -> float:
        return evaluate(self, x)

    def values(self) -> np.ndarray:
        """f(1), f(2), f(3), f(4)."""
        return np.array([evaluate(self, x) for x in DEGREES], dtype=np.float64)

    def scaled(self, c: float) -> "DegreeFunction":
        """c*f as a CustomTable."""
        return DegreeFunction.table(*(c * v for v in self.values()))

    def describe(self) -> str:
        """The "family:params" text that parse_function_spec() turns back into this function."""
        args = [_format_number(p) for p in self.params]
        if self.context_n is not None:
            args.append(str(self.context_n))
        return self.family.value + (":" + ",".join(args) if args else "")

    def __str__(self):
        return self.describe()


@dataclass(frozen=True)
class CaseClassification:
    xi1: float
    xi2: float
    verdict: Verdict

    def to_dict(self):
        return {"xi1": self.xi1, "xi2": self.xi2, "verdict": self.verdict}


def evaluate(f: DegreeFunction, x: int) -> float:
    """
    :param x: a degree in 1..4.
    :return: the family formula at x; CustomTable returns the stored entry.
    :raises FunctionSpecError: if the formula leaves the float range for these parameters.
    """
    if isinstance(x, bool) or x not in DEGREES:
        raise ValueError(_DEGREE_RANGE_ERROR.format(x))
    x = int(x)
    if f.order_dependent and f.context_n is None:
        raise MissingContextError(_MISSING_CONTEXT_ERROR.format(f.family.value))
    try:
        value = _formula(f, x)
    except OverflowError:
        value = math.inf
    if not math.isfinite(value):
        raise FunctionSpecError(_OVERFLOW_ERROR.format(f.describe(), x))
    return value


def _formula(f: DegreeFunction, x: int) -> float:
    p = f.params
    if f.family == Family.POWER:
        return float(x) ** p[0]
    elif f.family == Family.SUM_EXDEG:
        return x * p[0] ** x
    elif f.family == Family.SUM_LODEG:
        return x * math.log(x) ** p[0]  # 0.0**a == 0.0 for a > 0
    elif f.family == Family.LN_MULT_ZAGREB1:
        return p[0] * math.log(x)
    elif f.family == Family.LN_MULT_ZAGREB2:
        return p[0] * x * math.log(x)
    elif f.family == Family.FORGOTTEN_COINDEX:
        return float((f.context_n - 1 - x) * x * x)
    elif f.family == Family.ZEROTH_ORDER_COINDEX:
        return (f.context_n - 1 - x) * float(x) ** (p[0] - 1)
    elif f.family == Family.CUSTOM_TABLE:
        return p[x - 1]
    raise ValueError("Don't know how to evaluate family %s" % f.family)


def exact_values(f: DegreeFunction):
    """
    Rational f(1)..f(4) for the families where they are rational: integer exponents, integer exdeg bases,
    integer-valued tables and both coindices with integer exponent.
    :return: a tuple of four Fractions, or None if no exact path exists.
    """
    if f.order_dependent and f.context_n is None:
        raise MissingContextError(_MISSING_CONTEXT_ERROR.format(f.family.value))
    p = f.params
    if f.family == Family.POWER and _small_integer(p[0]):
        return tuple(Fraction(x) ** int(p[0]) for x in DEGREES)
    if f.family == Family.SUM_EXDEG and _small_integer(p[0]):
        return tuple(x * Fraction(int(p[0])) ** x for x in DEGREES)
    if f.family == Family.FORGOTTEN_COINDEX:
        return tuple(Fraction((f.context_n - 1 - x) * x * x) for x in DEGREES)
    if f.family == Family.ZEROTH_ORDER_COINDEX and _small_integer(p[0]):
        return tuple((f.context_n - 1 - x) * Fraction(x) ** (int(p[0]) - 1) for x in DEGREES)
    if f.family == Family.CUSTOM_TABLE and all(v.is_integer() for v in p):
        return tuple(Fraction(int(v)) for v in p)
    return None


def xi_pair(f: DegreeFunction) -> tuple[float, float]:
    """The coefficients of n2 and n3 once n1 and n4 are eliminated from H_f."""
    exact = xi_pair_exact(f)
    if exact is not None:
        return float(exact[0]), float(exact[1])
    f1, f2, f3, f4 = f.values()
    return float((3 * f2 - 2 * f1 - f4) / 3), float((3 * f3 - f1 - 2 * f4) / 3)


def xi_pair_exact(f: DegreeFunction):
    values = exact_values(f)
    if values is None:
        return None
    f1, f2, f3, f4 = values
    return f2 - Fraction(2, 3) * f1 - Fraction(1, 3) * f4, f3 - Fraction(1, 3) * f1 - Fraction(2, 3) * f4


def classify(f: DegreeFunction, tolerance: float = DEFAULT_TOLERANCE) -> CaseClassification:
    exact = xi_pair_exact(f)
    if exact is not None:
        verdict = _verdict(exact[0], exact[1], tolerance)
        return CaseClassification(float(exact[0]), float(exact[1]), verdict)
    xi1, xi2 = xi_pair(f)
    return classify_xi(xi1, xi2, tolerance)


def classify_xi(xi1, xi2, tolerance: float = DEFAULT_TOLERANCE) -> CaseClassification:
    return CaseClassification(float(xi1), float(xi2), _verdict(xi1, xi2, tolerance))


def _verdict(xi1, xi2, tolerance):
    if not tolerance > 0:
        raise ValueError(_TOLERANCE_ERROR.format(tolerance))
    # every margin must be negative for its inequality to hold
    case_i = (xi1, xi2, 2 * xi2 - xi1, xi1 - xi2 / 2)
    case_ii = (-xi1, -xi2, xi2 / 2 - xi1, xi1 - 2 * xi2)
    if all(margin < -tolerance for margin in case_i):
        return Verdict.CASE_I
    if all(margin < -tolerance for margin in case_ii):
        return Verdict.CASE_II
    for margins in (case_i, case_ii):
        if all(margin <= tolerance for margin in margins):
            return Verdict.BOUNDARY
    return Verdict.NEITHER


def require_case(classification: CaseClassification):
    """Raises ValueError unless the classification is CaseI or CaseII."""
    if classification.verdict not in (Verdict.CASE_I, Verdict.CASE_II):
        raise ValueError(_CHAIN_ERROR.format(classification.xi1, classification.xi2, classification.verdict.value))
    return classification.verdict


def printed_range_check(family: Family, parameter: float) -> Verdict:
    """
    The case the corollaries assert for a parameter range they explicitly address. Meant as a test oracle for classify().
    For FORGOTTEN_COINDEX the parameter is the graph order n.
    :raises UnaddressedRangeError: for parameters outside every printed range (e.g. exdeg base in [1/3, 1/2]).
    """
    p = parameter
    verdict = None
    if family == Family.POWER:
        if p > 1 or p < 0:
            verdict = Verdict.CASE_I
        elif 0 < p < 1:
            verdict = Verdict.CASE_II
    elif family == Family.SUM_EXDEG:
        if p > 1 or 0 < p < 1 / 3:
            verdict = Verdict.CASE_I
        elif 1 / 2 < p < 1:
            verdict = Verdict.CASE_II
    elif family == Family.SUM_LODEG:
        if p > SLI_THRESHOLD:
            verdict = Verdict.CASE_I
    elif family == Family.LN_MULT_ZAGREB1:
        if p < 0:
            verdict = Verdict.CASE_I
        elif p > 0:
            verdict = Verdict.CASE_II
    elif family == Family.LN_MULT_ZAGREB2:
        if p > 0:
            verdict = Verdict.CASE_I
        elif p < 0:
            verdict = Verdict.CASE_II
    elif family == Family.FORGOTTEN_COINDEX:
        if p >= 11 and float(p).is_integer():
            verdict = Verdict.CASE_I
    if verdict is None:
        raise UnaddressedRangeError(_UNADDRESSED_RANGE_ERROR.format(family.value, p))
    return verdict


def parse_function_spec(text: str) -> DegreeFunction:
    """
    Parses the CLI mini-grammar: "power:2", "sei:2.0", "sli:1.0", "lnpi1:-1", "lnpi2:0.5", "fbar:11",
    "coindex:3,11" (alpha, n) and "table:f1,f2,f3,f4".
    """
    tags = ", ".join(f.value for f in Family)
    tag, sep, args = text.strip().partition(":")
    try:
        family = Family(tag.strip().lower())
    except ValueError:
        raise FunctionSpecError(_SPEC_SYNTAX_ERROR.format(text, tags)) from None
    if sep == "" or args.strip() == "":
        raise FunctionSpecError(_SPEC_SYNTAX_ERROR.format(text, tags))
    numbers = []
    for field in args.split(","):
        try:
            numbers.append(float(field))
        except ValueError:
            raise FunctionSpecError(_SPEC_NUMBER_ERROR.format(text, field.strip())) from None
    if family == Family.FORGOTTEN_COINDEX:
        if len(numbers) != 1:
            raise FunctionSpecError(_PARAMETER_COUNT_ERROR.format(family.value, "1 (the order n)", len(numbers)))
        return DegreeFunction(family, (), _order(numbers[0]))
    if family == Family.ZEROTH_ORDER_COINDEX:
        if len(numbers) != 2:
            raise FunctionSpecError(_PARAMETER_COUNT_ERROR.format(family.value, "2 (alpha, n)", len(numbers)))
        return DegreeFunction(family, (numbers[0],), _order(numbers[1]))
    return DegreeFunction(family, tuple(numbers))


def _order(value):
    if not value.is_integer():
        raise FunctionSpecError(_CONTEXT_ORDER_ERROR.format(value))
    return int(value)


def _small_integer(value):
    return float(value).is_integer() and abs(value) <= _EXACT_EXPONENT_LIMIT


def _format_number(value):
    return str(int(value)) if value.is_integer() else repr(value)
