"""Vertex-degree-function indices of a concrete chemical graph: H_f, its residual term Gamma_f, and the TI/coindex pair.

Each result is an IndexValue: a float, plus the exact rational value when f has one (see DegreeFunctions.exact_values)."""

import warnings
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from ChemGraph import ChemGraph, DegreeVector, degree_vector
from DegreeFunctions import DegreeFunction, exact_values, xi_pair, xi_pair_exact

_CONTEXT_MISMATCH_ERROR = "Function %s is bound to n=%d, but the graph has n=%d."
_H_F_ORDER_ERROR = "H_f needs at least two vertices, since f is undefined at degree 0; got n=%d."
_TI_ORDER_ERROR = "The coindex needs at least two vertices, got n=%d."
_ZAGREB_KIND_ERROR = "Multiplicative Zagreb index kind must be 1 or 2, got %r."
_ZAGREB_OVERFLOW_WARNING = "Multiplicative Zagreb index overflows a float (log value %g); returning inf."


class ContextMismatchError(ValueError):
    """An order-dependent function was applied to a graph of another order."""


@dataclass(frozen=True)
class IndexValue:
    value: float
    exact: Fraction | None = None

    @classmethod
    def from_exact(cls, exact: Fraction) -> "IndexValue":
        return cls(float(exact), exact)


def check_context(f: DegreeFunction, n: int):
    if f.context_n is not None and f.context_n != n:
        raise ContextMismatchError(_CONTEXT_MISMATCH_ERROR % (f.describe(), f.context_n, n))


def h_f(G: ChemGraph, f: DegreeFunction) -> IndexValue:
    """Sum of f(d_v) over all vertices, summed vertex by vertex."""
    check_context(f, G.n)
    if G.n < 2:
        raise ValueError(_H_F_ORDER_ERROR % G.n)
    exact = exact_values(f)
    if exact is not None:
        return IndexValue.from_exact(sum((exact[d - 1] for d in G.degrees), Fraction(0)))
    return IndexValue(float(np.array([f(d) for d in G.degrees], dtype=np.float64).sum()))


def h_f_from_counts(counts: DegreeVector, f: DegreeFunction) -> IndexValue:
    """n1*f(1) + n2*f(2) + n3*f(3) + n4*f(4)."""
    exact = exact_values(f)
    if exact is not None:
        return IndexValue.from_exact(sum((c * v for c, v in zip(counts.counts(), exact)), Fraction(0)))
    return IndexValue(float(counts.as_array() @ f.values()))


def linear_part(n: int, m: int, f: DegreeFunction) -> IndexValue:
    """The part of H_f left after eliminating n1 and n4: (4f(1)-f(4))n/3 + 2(f(4)-f(1))m/3."""
    check_context(f, n)
    exact = exact_values(f)
    if exact is not None:
        f1, f4 = exact[0], exact[3]
        return IndexValue.from_exact((4 * f1 - f4) * n / 3 + 2 * (f4 - f1) * m / 3)
    f1, f4 = f(1), f(4)
    return IndexValue(((4 * f1 - f4) * n + 2 * (f4 - f1) * m) / 3)


def gamma_f(G: ChemGraph, f: DegreeFunction) -> IndexValue:
    """xi1*n2 + xi2*n3, so that h_f = linear_part + gamma_f."""
    check_context(f, G.n)
    counts = degree_vector(G)
    exact = xi_pair_exact(f)
    if exact is not None:
        return IndexValue.from_exact(exact[0] * counts.n2 + exact[1] * counts.n3)
    xi1, xi2 = xi_pair(f)
    return IndexValue(xi1 * counts.n2 + xi2 * counts.n3)


def ti_pair(G: ChemGraph, f: DegreeFunction) -> tuple[IndexValue, IndexValue]:
    """
    :return: (TI, TIbar) with TI = sum of d_u*f(d_u) and TIbar = sum of (n-1-d_u)*f(d_u); together they give (n-1)*H_f.
    """
    if G.n < 2:
        raise ValueError(_TI_ORDER_ERROR % G.n)
    check_context(f, G.n)
    degrees = G.degrees
    exact = exact_values(f)
    if exact is not None:
        ti = sum((d * exact[d - 1] for d in degrees), Fraction(0))
        tibar = sum(((G.n - 1 - d) * exact[d - 1] for d in degrees), Fraction(0))
        return IndexValue.from_exact(ti), IndexValue.from_exact(tibar)
    d = np.asarray(degrees, dtype=np.float64)
    values = np.array([f(x) for x in degrees], dtype=np.float64)
    return IndexValue(float((d * values).sum())), IndexValue(float(((G.n - 1 - d) * values).sum()))


def multiplicative_zagreb(G: ChemGraph, a: float, kind: int = 1) -> float:
    """
    The general multiplicative Zagreb index: product of d_v**a (kind 1) or of d_v**(a*d_v) (kind 2).
    Computed as exp of the matching log-space H_f.
    """
    if kind == 1:
        f = DegreeFunction.ln_mult_zagreb1(a)
    elif kind == 2:
        f = DegreeFunction.ln_mult_zagreb2(a)
    else:
        raise ValueError(_ZAGREB_KIND_ERROR % (kind,))
    log_value = h_f(G, f).value
    with np.errstate(over="ignore"):
        value = float(np.exp(log_value))
    if np.isinf(value):
        warnings.warn(_ZAGREB_OVERFLOW_WARNING % log_value)
    return value
