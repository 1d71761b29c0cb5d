"""Chemical graphs: connected simple undirected graphs with maximum degree at most four.

ChemGraph values are immutable once constructed, so they can be shared freely between worker processes and threads.
Vertices are labelled 0..n-1. Parsing from text lives in the "graphfiles" package; this module holds the value types,
the degree counts (n1, n2, n3, n4) and the canonical code used to tell isomorphism classes apart."""

from dataclasses import dataclass
from functools import cached_property

import networkx as nx
import numpy as np

from graphfiles.writer import to_graph6

MAX_DEGREE = 4
CANONICAL_MAX_N = 16
"""Largest order for which canonical codes are computed. Enough for exhaustive enumeration, which stops far earlier."""

type CanonicalCode = bytes
"""graph6 record of the canonically relabelled graph. Two ChemGraphs have equal codes iff they are isomorphic."""

_VERTEX_COUNT_ERROR = "A chemical graph needs at least one vertex, got n=%d."
_LABEL_RANGE_ERROR = "Edge (%d, %d) uses a vertex label outside 0..%d."
_SELF_LOOP_ERROR = "Self-loop at vertex %d."
_DUPLICATE_EDGE_ERROR = "Duplicate edge (%d, %d)."
_DEGREE_ERROR = "Vertex %d has degree %d, which exceeds %d."
_DISCONNECTED_ERROR = "Graph is disconnected (%d components)."
_NEGATIVE_COUNT_ERROR = "Degree counts must be non-negative integers, got %s."
_CANONICAL_LIMIT_ERROR = "Canonical codes are supported up to n=%d, got n=%d."


class GraphValidationError(ValueError):
    """The vertex/edge data does not describe a connected simple graph with maximum degree <= 4."""


@dataclass(frozen=True)
class DegreeVector:
    """Numbers of vertices of degree 1, 2, 3 and 4."""

    n1: int
    n2: int
    n3: int
    n4: int

    def __post_init__(self):
        counts = self.counts()
        if any(not isinstance(c, (int, np.integer)) or c < 0 for c in counts):
            raise ValueError(_NEGATIVE_COUNT_ERROR % (counts,))

    def counts(self) -> tuple[int, int, int, int]:
        return (self.n1, self.n2, self.n3, self.n4)

    def as_array(self) -> np.ndarray:
        return np.array(self.counts(), dtype=np.int64)

    @property
    def total(self) -> int:
        return self.n1 + self.n2 + self.n3 + self.n4

    @property
    def degree_sum(self) -> int:
        return self.n1 + 2 * self.n2 + 3 * self.n3 + 4 * self.n4

    def satisfies(self, n: int, m: int) -> bool:
        """Both linear constraints: the counts add up to n and the degrees add up to 2m."""
        return self.total == n and self.degree_sum == 2 * m

    def congruence_holds(self, n: int, m: int) -> bool:
        """n2 + 2*n3 == 2m - n (mod 3)."""
        return (self.n2 + 2 * self.n3 - (2 * m - n)) % 3 == 0

    def degree_set(self) -> frozenset[int]:
        return frozenset(d for d, c in zip(range(1, 5), self.counts()) if c > 0)

    def __str__(self):
        return "(%d,%d,%d,%d)" % self.counts()


@dataclass(frozen=True)
class ChemGraph:
    """A connected simple graph with maximum degree at most 4.

    The constructor validates everything; there is no way to obtain an invalid instance.
    `edges` is normalized to a sorted tuple of (u, v) pairs with u < v, so two ChemGraphs compare equal
    exactly when they have the same labelled adjacency relation (use canonical_code() for isomorphism).

    The single-vertex graph K1 is accepted: it is connected, has no edges and its only vertex has degree 0,
    hence its DegreeVector is all zeros.
    """

    n: int
    edges: tuple[tuple[int, int], ...]

    def __post_init__(self):
        if not isinstance(self.n, (int, np.integer)) or self.n < 1:
            raise GraphValidationError(_VERTEX_COUNT_ERROR % self.n)
        seen = set()
        degree = [0] * self.n
        for u, v in self.edges:
            if not (0 <= u < self.n and 0 <= v < self.n):
                raise GraphValidationError(_LABEL_RANGE_ERROR % (u, v, self.n - 1))
            if u == v:
                raise GraphValidationError(_SELF_LOOP_ERROR % u)
            key = (min(u, v), max(u, v))
            if key in seen:
                raise GraphValidationError(_DUPLICATE_EDGE_ERROR % key)
            seen.add(key)
            degree[u] += 1
            degree[v] += 1
        for v, d in enumerate(degree):
            if d > MAX_DEGREE:
                raise GraphValidationError(_DEGREE_ERROR % (v, d, MAX_DEGREE))
        object.__setattr__(self, "n", int(self.n))
        object.__setattr__(self, "edges", tuple(sorted((int(u), int(v)) for u, v in seen)))
        components = nx.number_connected_components(self.to_networkx())
        if components != 1:
            raise GraphValidationError(_DISCONNECTED_ERROR % components)

    @classmethod
    def from_edges(cls, n: int, edges) -> "ChemGraph":
        return cls(n, tuple(tuple(e) for e in edges))

    @classmethod
    def from_networkx(cls, g: nx.Graph) -> "ChemGraph":
        """Nodes are relabelled 0..n-1 in their sorted order."""
        index = {node: i for i, node in enumerate(sorted(g.nodes))}
        return cls(g.number_of_nodes(), tuple((index[u], index[v]) for u, v in g.edges))

    @classmethod
    def from_bitmasks(cls, bitmasks) -> "ChemGraph":
        return cls(len(bitmasks), edges_from_bitmasks(bitmasks))

    @property
    def m(self) -> int:
        return len(self.edges)

    @cached_property
    def degrees(self) -> tuple[int, ...]:
        degree = [0] * self.n
        for u, v in self.edges:
            degree[u] += 1
            degree[v] += 1
        return tuple(degree)

    @cached_property
    def adjacency(self) -> tuple[frozenset[int], ...]:
        neighbours = [set() for _ in range(self.n)]
        for u, v in self.edges:
            neighbours[u].add(v)
            neighbours[v].add(u)
        return tuple(frozenset(s) for s in neighbours)

    @cached_property
    def bitmasks(self) -> tuple[int, ...]:
        """adjacency as integers: bit v of bitmasks[u] is set iff u~v"""
        masks = [0] * self.n
        for u, v in self.edges:
            masks[u] |= 1 << v
            masks[v] |= 1 << u
        return tuple(masks)

    def to_networkx(self) -> nx.Graph:
        g = nx.Graph()
        g.add_nodes_from(range(self.n))
        g.add_edges_from(self.edges)
        return g

    def relabeled(self, labeling) -> "ChemGraph":
        """
        :param labeling: labeling[i] is the old vertex that becomes vertex i.
        """
        position = [0] * self.n
        for new, old in enumerate(labeling):
            position[old] = new
        return ChemGraph(self.n, tuple((position[u], position[v]) for u, v in self.edges))

    def __str__(self):
        return "ChemGraph(n=%d, m=%d, degrees=%s)" % (self.n, self.m, list(self.degrees))


def degree_vector(G: ChemGraph) -> DegreeVector:
    counts = np.bincount(np.asarray(G.degrees, dtype=np.int64), minlength=MAX_DEGREE + 1)
    return DegreeVector(*(int(c) for c in counts[1 : MAX_DEGREE + 1]))


def edges_from_bitmasks(bitmasks) -> tuple[tuple[int, int], ...]:
    return tuple((u, v) for u, mask in enumerate(bitmasks) for v in range(u + 1, len(bitmasks)) if (mask >> v) & 1)


def canonical_code(G: ChemGraph) -> CanonicalCode:
    return to_graph6(canonical_form(G))


def canonical_form(G: ChemGraph) -> ChemGraph:
    """The representative of G's isomorphism class: G relabelled by its canonical labeling."""
    if G.n > CANONICAL_MAX_N:
        raise GraphValidationError(_CANONICAL_LIMIT_ERROR % (CANONICAL_MAX_N, G.n))
    _, labeling = canonical_labeling(G.bitmasks)
    return G.relabeled(labeling)


def canonical_labeling(bitmasks) -> tuple[int, list[int]]:
    """
    Degree refinement plus individualisation, keeping the lexicographically largest adjacency certificate.
    Subtrees are skipped when an automorphism found so far (fixing the individualised prefix) maps them onto
    an explored sibling.

    :param bitmasks: adjacency bitmasks of a simple graph.
    :return: (certificate, labeling); the certificate is the upper-triangle bit string in graph6 order read as an integer.
    """
    search = _CanonicalSearch(tuple(bitmasks))
    search.run()
    return search.best_certificate, search.best_labeling


def automorphisms(bitmasks) -> list[list[int]]:
    """Automorphisms met during the canonical search (gamma[v] is the image of v). The identity is not included."""
    search = _CanonicalSearch(tuple(bitmasks))
    search.run()
    return search.automorphisms


def orbit_representatives(items, generators, act) -> list:
    """
    One item per orbit of `items` under the group generated by `generators`, the smallest of each orbit, in sorted order.
    :param act: act(gamma, item) is the image of item; it must map `items` onto itself.
    """
    items = sorted(items)
    parent = {item: item for item in items}

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for gamma in generators:
        for item in items:
            a, b = find(item), find(act(gamma, item))
            if a != b:
                parent[max(a, b)] = min(a, b)
    return [item for item in items if find(item) == item]


def bitmasks_from_certificate(n: int, certificate: int) -> tuple[int, ...]:
    """Inverse of the certificate: the adjacency bitmasks of the canonically labelled graph."""
    masks = [0] * n
    position = n * (n - 1) // 2
    for j in range(1, n):
        for i in range(j):
            position -= 1
            if (certificate >> position) & 1:
                masks[i] |= 1 << j
                masks[j] |= 1 << i
    return tuple(masks)


def _certificate(bitmasks, labeling) -> int:
    cert = 0
    for j in range(1, len(labeling)):
        row = bitmasks[labeling[j]]
        for i in range(j):
            cert = (cert << 1) | ((row >> labeling[i]) & 1)
    return cert


def _refine(bitmasks, cells):
    """Equitable refinement; new cells are ordered by neighbour count so the result is isomorphism-invariant."""
    cells = [list(cell) for cell in cells]
    splitter = 0
    while splitter < len(cells):
        mask = 0
        for v in cells[splitter]:
            mask |= 1 << v
        refined = []
        split = False
        for cell in cells:
            if len(cell) == 1:
                refined.append(cell)
                continue
            groups = {}
            for v in cell:
                groups.setdefault((bitmasks[v] & mask).bit_count(), []).append(v)
            if len(groups) == 1:
                refined.append(cell)
            else:
                refined.extend(groups[k] for k in sorted(groups))
                split = True
        cells = refined
        splitter = 0 if split else splitter + 1
    return cells


class _CanonicalSearch:
    def __init__(self, bitmasks):
        self.bitmasks = bitmasks
        self.n = len(bitmasks)
        self.best_certificate = -1
        self.best_labeling = None
        self.automorphisms = []

    def run(self):
        self._search([list(range(self.n))], ())

    def _search(self, cells, prefix):
        cells = _refine(self.bitmasks, cells)
        target = next((i for i, cell in enumerate(cells) if len(cell) > 1), None)
        if target is None:
            self._leaf([cell[0] for cell in cells])
            return
        explored = []
        for v in cells[target]:
            if explored and self._same_orbit(v, explored, prefix):
                continue
            explored.append(v)
            rest = [w for w in cells[target] if w != v]
            self._search(cells[:target] + [[v], rest] + cells[target + 1 :], prefix + (v,))

    def _leaf(self, labeling):
        cert = _certificate(self.bitmasks, labeling)
        if cert > self.best_certificate:
            self.best_certificate = cert
            self.best_labeling = labeling
        elif cert == self.best_certificate:
            # both labelings give the same graph, so best[i] -> labeling[i] is an automorphism
            gamma = [0] * self.n
            for a, b in zip(self.best_labeling, labeling):
                gamma[a] = b
            self.automorphisms.append(gamma)

    def _same_orbit(self, v, explored, prefix):
        parent = list(range(self.n))

        def find(x):
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        for gamma in self.automorphisms:
            if all(gamma[p] == p for p in prefix):
                for a in range(self.n):
                    ra, rb = find(a), find(gamma[a])
                    if ra != rb:
                        parent[ra] = rb
        root = find(v)
        return any(find(u) == root for u in explored)
