import networkx as nx


def to_graph6(graph) -> bytes:
    """
    Encodes a graph as a short-form graph6 record (no header, no newline).
    :param graph: anything with `n` and `edges` attributes, vertices labelled 0..n-1.
    :return: The graph6 bytes; column-major upper triangle, 63-offset printable bytes.
    """
    return nx.to_graph6_bytes(_as_networkx(graph), nodes=range(graph.n), header=False).rstrip(b"\n")


def to_edge_list(graph) -> str:
    """Returns "u v" lines (0-based labels, u < v, sorted) ending with a newline."""
    return "".join("%d %d\n" % (u, v) for u, v in sorted(graph.edges))


def _as_networkx(graph):
    g = nx.Graph()
    g.add_nodes_from(range(graph.n))
    g.add_edges_from(graph.edges)
    return g
