"""Graphs attaining the H_f bound: solve for the extremal degree counts and realize them by a connected chemical graph."""

from dataclasses import dataclass
from enum import Enum, unique

import networkx as nx

from ChemGraph import ChemGraph, DegreeVector, degree_vector
from graphfiles.writer import to_edge_list, to_graph6
from TheoremBounds import MIN_ORDER, DegreeSetCondition, TheoremNotApplicableError, residue

_ORDER_ERROR = "Extremal configurations are defined for n >= %d, got n=%d."
_REPAIR_FAILED_ERROR = "Connectivity repair failed for degree counts %s."


@unique
class InfeasibilityReason(Enum):
    NEGATIVE_COUNT = "negative count"
    ERDOS_GALLAI = "Erdos-Gallai violation"
    CONNECTIVITY_DEFICIT = "connectivity deficit (m < n-1)"
    DEGREE_CAP = "degree cap (m > 2n)"


@dataclass(frozen=True)
class ExtremalSolution:
    n: int
    m: int
    counts: DegreeVector | None
    feasible: bool
    witness: ChemGraph | None = None
    reason: InfeasibilityReason | None = None

    def to_dict(self):
        return {
            "n": self.n,
            "m": self.m,
            "counts": None if self.counts is None else list(self.counts.counts()),
            "feasible": self.feasible,
            "reason": self.reason,
            "graph6": None if self.witness is None else to_graph6(self.witness),
            "edges": None if self.witness is None else [list(e) for e in self.witness.edges],
        }


def solve_counts(n: int, m: int) -> DegreeVector | None:
    """
    Solves n1+n2+n3+n4 = n and n1+2n2+3n3+4n4 = 2m for n1, n4 with (n2, n3) fixed by the residue of (n, m).
    :return: the counts, or None if n1 or n4 would be negative.
    """
    condition = DegreeSetCondition.for_residue(residue(n, m))
    n2, n3 = condition.n2, condition.n3
    numerator = 2 * m - n - n2 - 2 * n3
    assert numerator % 3 == 0, "residue choice must make n4 integral"
    n4 = numerator // 3
    n1 = n - n2 - n3 - n4
    if n1 < 0 or n4 < 0:
        return None
    return DegreeVector(n1, n2, n3, n4)


def degree_sequence(counts: DegreeVector) -> list[int]:
    """Non-increasing degree sequence."""
    return [4] * counts.n4 + [3] * counts.n3 + [2] * counts.n2 + [1] * counts.n1


def realizable_connected(counts: DegreeVector) -> bool:
    """Whether some connected simple graph has exactly these degree counts."""
    sequence = degree_sequence(counts)
    if not sequence:
        return False
    return nx.is_graphical(sequence, method="eg") and counts.degree_sum // 2 >= len(sequence) - 1


def construct_extremal(n: int, m: int) -> ExtremalSolution:
    """
    A connected chemical (n,m)-graph with the extremal degree counts, or the reason none exists.
    Deterministic: Havel-Hakimi with ties broken by the lowest label, then 2-edge swaps joining components.
    """
    if n < MIN_ORDER:
        raise TheoremNotApplicableError(_ORDER_ERROR % (MIN_ORDER, n))
    if m > 2 * n:
        return ExtremalSolution(n, m, None, False, reason=InfeasibilityReason.DEGREE_CAP)
    if m < n - 1:
        return ExtremalSolution(n, m, solve_counts(n, m), False, reason=InfeasibilityReason.CONNECTIVITY_DEFICIT)
    counts = solve_counts(n, m)
    if counts is None:
        return ExtremalSolution(n, m, None, False, reason=InfeasibilityReason.NEGATIVE_COUNT)
    if not realizable_connected(counts):
        return ExtremalSolution(n, m, counts, False, reason=InfeasibilityReason.ERDOS_GALLAI)
    edges = _havel_hakimi(degree_sequence(counts))
    assert edges is not None, "graphical sequence must be realizable"
    witness = ChemGraph(n, tuple(_connect(n, edges)))
    assert degree_vector(witness) == counts
    return ExtremalSolution(n, m, counts, True, witness)


def witness_edge_list(solution: ExtremalSolution) -> str:
    return "" if solution.witness is None else to_edge_list(solution.witness)


def _havel_hakimi(degrees):
    residual = list(degrees)
    vertices = range(len(residual))
    edges = []
    while True:
        order = sorted(vertices, key=lambda v: (-residual[v], v))
        v = order[0]
        d = residual[v]
        if d == 0:
            return edges
        targets = order[1 : d + 1]
        if len(targets) < d or residual[targets[-1]] == 0:
            return None
        residual[v] = 0
        for w in targets:
            residual[w] -= 1
            edges.append((min(v, w), max(v, w)))


def _connect(n, edges):
    """Degree-preserving swaps until the graph is connected: a non-bridge edge (u,v) of a component that has a cycle
    and an edge (x,y) of another component become (u,x) and (v,y)."""
    g = nx.Graph()
    g.add_nodes_from(range(n))
    g.add_edges_from(edges)
    while True:
        components = sorted((sorted(c) for c in nx.connected_components(g)), key=lambda c: c[0])
        if len(components) == 1:
            return sorted(tuple(sorted(e)) for e in g.edges)
        bridges = {tuple(sorted(e)) for e in nx.bridges(g)}
        source = next((c for c in components if g.subgraph(c).number_of_edges() >= len(c)), None)
        if source is None:
            raise RuntimeError(_REPAIR_FAILED_ERROR % (sorted(d for _, d in g.degree),))
        members = set(source)
        u, v = min(e for e in (tuple(sorted(e)) for e in g.edges(source)) if e not in bridges)
        other = next(c for c in components if c[0] not in members)
        x, y = min(tuple(sorted(e)) for e in g.edges(other))
        g.remove_edges_from([(u, v), (x, y)])
        g.add_edges_from([(u, x), (v, y)])
