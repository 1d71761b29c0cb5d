"""Exhaustive verification of the H_f bounds on small chemical graphs.

ChemGraphEnumerator lists connected chemical (n,m)-graphs, one per isomorphism class. Trees of order n grow from trees of
order n-1 by attaching a leaf; (n,m+1)-graphs grow from (n,m)-graphs by adding an edge. Every connected chemical graph
is reached this way (remove a leaf or a non-bridge edge to go back), and canonical certificates remove duplicates.
Children are generated only for one pair (or vertex) per orbit of the parent's automorphisms."""

import math
import os
import sys
import warnings
from collections.abc import Iterable, Iterator
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction

import numpy as np
import pandas as pd

from ChemGraph import (
    MAX_DEGREE,
    ChemGraph,
    automorphisms,
    bitmasks_from_certificate,
    canonical_code,
    canonical_labeling,
    degree_vector,
    orbit_representatives,
)
from DegreeFunctions import (
    DEFAULT_TOLERANCE,
    DegreeFunction,
    Family,
    Verdict,
    classify,
    classify_xi,
    require_case,
    xi_pair,
)
from graphfiles.reader import parse_graph6, read_cache
from graphfiles.writer import to_graph6, write_cache
from TheoremBounds import (
    MIN_ORDER,
    Direction,
    TheoremNotApplicableError,
    check_feasible,
    feasible_m_range,
    residue,
    theorem1_bound,
    theorem3_bound,
)
from TopologicalIndices import gamma_f, h_f, h_f_from_counts, linear_part, ti_pair

LEMMA1_MAX_TOTAL = 100
"""Largest n2 + n3 checked by verify_lemma1() by default."""

SWEEP_COLUMNS = ["family", "parameter", "n", "m", "residue", "verdict", "bound", "extremal", "attained", "violations", "error"]
SWEEP_MAX_ENUMERATION_N = 8
"""Sweep rows with larger n report the bound only."""

_LIMIT_ERROR = "Enumeration is supported for 1 <= n <= %d, got n=%d."
_LEMMA1_TOTAL_ERROR = "max_total must be at least 2, got %d."
_M_RULE_ERROR = "Unknown m rule '%s': expected 'all', 'tree', 'max' or 'offset:K'."
_N_RANGE_ERROR = "Malformed n range '%s': expected 'N' or 'A..B'."
_CACHE_MISMATCH_WARNING = "Enumeration cache for n={} m={} holds invalid or non-canonical codes; regenerating."


class EnumerationLimitError(ValueError):
    """The requested order is beyond what exhaustive enumeration supports."""


class ChemGraphEnumerator:
    MAX_N: int = 10
    """Largest order accepted by graphs()/codes()."""
    PRINT_PROGRESS: bool = False
    """Report each finished (n,m) level on stderr."""

    def __init__(self, workers: int = 1, cache_dir: str | None = None):
        """
        :param workers: worker processes used to grow a level; 1 grows in-process. The output never depends on it.
        :param cache_dir: directory with one file of sorted canonical codes per (n,m). Optional, results are the same.
        """
        self.workers = max(1, int(workers))
        self.cache_dir = cache_dir
        self._levels: dict[tuple[int, int], list[int]] = {}  # (n,m) -> sorted canonical certificates

    def codes(self, n: int, m: int) -> list[bytes]:
        """Canonical graph6 codes of all connected chemical (n,m)-graphs, sorted bytewise."""
        self._check_limits(n, m)
        return sorted(to_graph6(ChemGraph.from_bitmasks(bitmasks_from_certificate(n, c))) for c in self._level(n, m))

    def graphs(self, n: int, m: int) -> Iterator[ChemGraph]:
        """One canonically labelled representative per isomorphism class, in the order of codes()."""
        for code in self.codes(n, m):
            yield parse_graph6(code.decode("ascii"))

    def count(self, n: int, m: int) -> int:
        self._check_limits(n, m)
        return len(self._level(n, m))

    def _check_limits(self, n, m):
        if not 1 <= n <= self.MAX_N:
            raise EnumerationLimitError(_LIMIT_ERROR % (self.MAX_N, n))
        check_feasible(n, m)

    def _level(self, n, m):
        key = (n, m)
        if key in self._levels:
            return self._levels[key]
        certificates = self._load(n, m)
        if certificates is None:
            if n == 1:
                certificates = [0]
            elif m == n - 1:
                certificates = self._grow(n - 1, self._level(n - 1, n - 2), _attach_leaf)
            else:
                certificates = self._grow(n, self._level(n, m - 1), _add_edge)
            if self.cache_dir is not None:
                write_cache(self.cache_dir, n, m, (_code(n, c) for c in certificates))
        if self.PRINT_PROGRESS:
            print("[INFO] n=%d m=%d: %d isomorphism classes" % (n, m, len(certificates)), file=sys.stderr)
        self._levels[key] = certificates
        return certificates

    def _grow(self, parent_n, parents, step):
        if self.workers == 1 or len(parents) < 2 * self.workers:
            children = step(parent_n, parents)
        else:
            chunks = [parents[i :: self.workers] for i in range(self.workers)]
            children = set()
            with ProcessPoolExecutor(max_workers=self.workers) as executor:
                for part in executor.map(step, [parent_n] * len(chunks), chunks):
                    children |= part
        return sorted(children)

    def _load(self, n, m):
        if self.cache_dir is None:
            return None
        codes = read_cache(self.cache_dir, n, m)
        if codes is None:
            return None
        certificates = []
        for code in codes:
            try:
                G = parse_graph6(code.decode("ascii"))
            except ValueError:
                G = None
            if G is None or G.n != n or G.m != m or canonical_code(G) != code:
                warnings.warn(_CACHE_MISMATCH_WARNING.format(n, m))
                return None
            certificates.append(canonical_labeling(G.bitmasks)[0])
        return sorted(certificates)


def _attach_leaf(parent_n, parents) -> set[int]:
    children = set()
    for cert in parents:
        masks = bitmasks_from_certificate(parent_n, cert)
        candidates = [v for v in range(parent_n) if masks[v].bit_count() < MAX_DEGREE]
        for v in orbit_representatives(candidates, automorphisms(masks), lambda gamma, x: gamma[x]):
            child = list(masks) + [1 << v]
            child[v] |= 1 << parent_n
            children.add(canonical_labeling(child)[0])
    return children


def _add_edge(n, parents) -> set[int]:
    children = set()
    for cert in parents:
        masks = bitmasks_from_certificate(n, cert)
        open_vertices = [v for v in range(n) if masks[v].bit_count() < MAX_DEGREE]
        candidates = [(u, v) for i, u in enumerate(open_vertices) for v in open_vertices[i + 1 :] if not (masks[u] >> v) & 1]
        if not candidates:
            continue
        for u, v in orbit_representatives(candidates, automorphisms(masks), _act_on_pair):
            child = list(masks)
            child[u] |= 1 << v
            child[v] |= 1 << u
            children.add(canonical_labeling(child)[0])
    return children


def _act_on_pair(gamma, pair):
    a, b = gamma[pair[0]], gamma[pair[1]]
    return (a, b) if a < b else (b, a)


def _code(n, certificate):
    return to_graph6(ChemGraph.from_bitmasks(bitmasks_from_certificate(n, certificate)))


_shared_enumerator = ChemGraphEnumerator()


def enumerate_connected_chemical(n: int, m: int, enumerator: ChemGraphEnumerator | None = None) -> Iterator[ChemGraph]:
    """Connected chemical (n,m)-graphs up to isomorphism, sorted by canonical code."""
    return (enumerator or _shared_enumerator).graphs(n, m)


@dataclass
class VerificationReport:
    n: int
    m: int
    f: str
    graph_count: int
    extremal_value: float
    bound_total: float
    direction: Direction
    attained: bool
    attaining_degree_sets: list[str] = field(default_factory=list)
    attaining_codes: list[bytes] = field(default_factory=list)
    violations: list[str] = field(default_factory=list)
    identity_violations: list[str] = field(default_factory=list)
    theorem: int = 1

    def to_dict(self):
        return {
            "n": self.n,
            "m": self.m,
            "f": self.f,
            "theorem": self.theorem,
            "graph_count": self.graph_count,
            "extremal_value": self.extremal_value,
            "bound_total": self.bound_total,
            "direction": self.direction,
            "attained": self.attained,
            "attaining_degree_sets": self.attaining_degree_sets,
            "attaining_codes": self.attaining_codes,
            "violations": self.violations,
            "identity_violations": self.identity_violations,
        }


def verify_bound(
    n: int,
    m: int,
    f: DegreeFunction,
    tolerance: float = DEFAULT_TOLERANCE,
    theorem3: bool = False,
    enumerator: ChemGraphEnumerator | None = None,
    identities: bool = False,
) -> VerificationReport:
    """
    Compares the bound with H_f (or TI + TIbar when theorem3 is set) of every connected chemical (n,m)-graph.

    A violation is a graph on the wrong side of the bound, or a graph attaining it with degree counts other than
    the equality condition allows. Exact rational comparisons are used whenever f has exact values.
    :param identities: also run check_identities() on each graph and report its findings separately.
    """
    bound = theorem3_bound(n, m, f, tolerance) if theorem3 else theorem1_bound(n, m, f, tolerance)
    upper = bound.direction == Direction.UPPER_BOUND
    extremal = None
    violations, identity_violations = [], []
    attaining_sets, attaining_codes = set(), []
    count = 0
    for G in enumerate_connected_chemical(n, m, enumerator):
        count += 1
        if theorem3:
            ti, tibar = ti_pair(G, f)
            value = ti.value + tibar.value
            exact = None if ti.exact is None else ti.exact + tibar.exact
        else:
            index = h_f(G, f)
            value, exact = index.value, index.exact
        key = exact if exact is not None and bound.exact_total is not None else value
        if extremal is None or (key > extremal if upper else key < extremal):
            extremal = key
        code = to_graph6(G)
        if not bound.respects(value, exact, tolerance):
            violations.append("%s: value %.17g beyond bound %.17g" % (code.decode("ascii"), value, bound.total))
        if bound.attained_by(value, exact, tolerance):
            counts = degree_vector(G)
            attaining_sets.add(_format_degree_set(counts.degree_set()))
            attaining_codes.append(code)
            if not bound.equality_degree_set.matches(counts):
                violations.append("%s: attains the bound with degree counts %s" % (code.decode("ascii"), counts))
        if identities:
            identity_violations.extend("%s: %s" % (code.decode("ascii"), v) for v in check_identities(G, f, tolerance))
    extremal_value = float(extremal) if extremal is not None else math.nan
    extremal_exact = extremal if isinstance(extremal, Fraction) else None
    attained = extremal is not None and bound.attained_by(extremal_value, extremal_exact, tolerance)
    return VerificationReport(
        n=n,
        m=m,
        f=f.describe(),
        graph_count=count,
        extremal_value=extremal_value,
        bound_total=bound.total,
        direction=bound.direction,
        attained=attained,
        attaining_degree_sets=sorted(attaining_sets),
        attaining_codes=sorted(attaining_codes),
        violations=violations,
        identity_violations=identity_violations,
        theorem=bound.theorem,
    )


def check_identities(G: ChemGraph, f: DegreeFunction, tolerance: float = DEFAULT_TOLERANCE) -> list[str]:
    """
    Checks the identities every chemical graph satisfies: the counting equations, the mod-3 congruence,
    H_f = linear part + Gamma_f, TI + TIbar = (n-1)H_f, both summation orders of H_f, and (for CaseI/CaseII f
    with n2 + n3 >= 2) that Gamma_f is beyond both xi.
    :return: descriptions of the identities that failed; empty when all hold.
    """
    failures = []
    counts = degree_vector(G)
    if not counts.satisfies(G.n, G.m):
        failures.append("degree counts %s do not add up to n=%d, 2m=%d" % (counts, G.n, 2 * G.m))
    if not counts.congruence_holds(G.n, G.m):
        failures.append("n2 + 2*n3 = %d is not 2m-n mod 3" % (counts.n2 + 2 * counts.n3))
    h = h_f(G, f)
    if not _same(h, h_f_from_counts(counts, f), tolerance):
        failures.append("vertex sum %.17g differs from count sum" % h.value)
    base, gamma = linear_part(G.n, G.m, f), gamma_f(G, f)
    decomposed = base.exact + gamma.exact if base.exact is not None and gamma.exact is not None else None
    if not _same_values(h.value, h.exact, base.value + gamma.value, decomposed, tolerance):
        failures.append("H_f %.17g != linear part + Gamma_f %.17g" % (h.value, base.value + gamma.value))
    ti, tibar = ti_pair(G, f)
    scaled = None if h.exact is None else (G.n - 1) * h.exact
    total = None if ti.exact is None else ti.exact + tibar.exact
    if not _same_values(ti.value + tibar.value, total, (G.n - 1) * h.value, scaled, tolerance):
        failures.append("TI + TIbar %.17g != (n-1)H_f %.17g" % (ti.value + tibar.value, (G.n - 1) * h.value))
    verdict = classify(f, tolerance).verdict
    if counts.n2 + counts.n3 >= 2 and verdict in (Verdict.CASE_I, Verdict.CASE_II):
        xi1, xi2 = xi_pair(f)
        if verdict == Verdict.CASE_I and not gamma.value < min(xi1, xi2):
            failures.append("Gamma_f %.17g is not below min(xi1, xi2)" % gamma.value)
        if verdict == Verdict.CASE_II and not gamma.value > max(xi1, xi2):
            failures.append("Gamma_f %.17g is not above max(xi1, xi2)" % gamma.value)
    return failures


def _same(a, b, tolerance):
    return _same_values(a.value, a.exact, b.value, b.exact, tolerance)


def _same_values(a, a_exact, b, b_exact, tolerance):
    if a_exact is not None and b_exact is not None:
        return a_exact == b_exact
    return math.isclose(a, b, rel_tol=tolerance, abs_tol=tolerance)


def verify_lemma1(xi1: float, xi2: float, max_total: int = LEMMA1_MAX_TOTAL, tolerance: float = DEFAULT_TOLERANCE) -> bool:
    """
    Checks that xi1*n2 + xi2*n3 lies strictly beyond both xi for every n2, n3 >= 0 with 2 <= n2 + n3 <= max_total:
    below min(xi1, xi2) in CaseI, above max(xi1, xi2) in CaseII.
    :raises TheoremNotApplicableError: (xi1, xi2) satisfies neither chain.
    """
    if max_total < 2:
        raise ValueError(_LEMMA1_TOTAL_ERROR % max_total)
    try:
        verdict = require_case(classify_xi(xi1, xi2, tolerance))
    except ValueError as e:
        raise TheoremNotApplicableError(str(e)) from None
    n2, n3 = np.meshgrid(np.arange(max_total + 1), np.arange(max_total + 1), indexing="ij")
    inside = (n2 + n3 >= 2) & (n2 + n3 <= max_total)
    gamma = (xi1 * n2 + xi2 * n3)[inside]
    if verdict == Verdict.CASE_I:
        return bool(np.all(gamma < min(xi1, xi2)))
    return bool(np.all(gamma > max(xi1, xi2)))


def parse_n_range(text: str) -> range:
    """'7' or '5..9' (inclusive)."""
    first, sep, last = text.strip().partition("..")
    try:
        return range(int(first), int(last if sep else first) + 1)
    except ValueError:
        raise ValueError(_N_RANGE_ERROR % text) from None


def m_values(n: int, m_rule: str) -> list[int]:
    """
    Edge counts selected by a sweep rule: 'all' (the feasible range), 'tree' (n-1), 'max' (largest feasible m)
    or 'offset:K' (n-1+K, even when infeasible, so that the row reports it).
    """
    feasible = feasible_m_range(n)
    if m_rule == "all":
        return list(feasible)
    if m_rule == "tree":
        return [n - 1]
    if m_rule == "max":
        return [feasible[-1]] if len(feasible) else [n - 1]
    if m_rule.startswith("offset:"):
        try:
            return [n - 1 + int(m_rule[len("offset:") :])]
        except ValueError:
            pass
    raise ValueError(_M_RULE_ERROR % m_rule)


def sweep(
    family: Family,
    parameters: Iterable[float],
    n_range: Iterable[int],
    m_rule: str = "all",
    enumerator: ChemGraphEnumerator | None = None,
    tolerance: float = DEFAULT_TOLERANCE,
    max_enumeration_n: int = SWEEP_MAX_ENUMERATION_N,
) -> pd.DataFrame:
    """
    One row per (parameter, n, m) with columns SWEEP_COLUMNS, in that nested order.
    Order-dependent families are bound to each row's n. Errors are recorded in the row's 'error' column.
    """
    rows = []
    for parameter in parameters:
        for n in n_range:
            for m in m_values(n, m_rule):
                rows.append(_sweep_row(family, parameter, n, m, enumerator, tolerance, max_enumeration_n))
    return pd.DataFrame(rows, columns=SWEEP_COLUMNS)


def _sweep_row(family, parameter, n, m, enumerator, tolerance, max_enumeration_n):
    row = dict.fromkeys(SWEEP_COLUMNS)
    row.update(family=family.value, parameter=parameter, n=n, m=m, residue=residue(n, m), error="")
    try:
        f = DegreeFunction.from_family(family, parameter, n)
        row["verdict"] = classify(f, tolerance).verdict.value
        if n < MIN_ORDER or row["verdict"] in (Verdict.CASE_I.value, Verdict.CASE_II.value):
            row["bound"] = theorem1_bound(n, m, f, tolerance).total
        else:
            return row  # no bound for Boundary/Neither
        if n <= min(max_enumeration_n, ChemGraphEnumerator.MAX_N):
            report = verify_bound(n, m, f, tolerance, enumerator=enumerator)
            row.update(extremal=report.extremal_value, attained=report.attained, violations=len(report.violations))
    except ValueError as e:
        row["error"] = str(e)
    return row


def _format_degree_set(degrees) -> str:
    return "{" + ",".join(str(d) for d in sorted(degrees)) + "}"


def ensure_cache_dir(path: str) -> str:
    """Creates the cache directory if needed; rejects paths that exist but are not directories."""
    if os.path.exists(path) and not os.path.isdir(path):
        raise NotADirectoryError(path)
    os.makedirs(path, exist_ok=True)
    return path
