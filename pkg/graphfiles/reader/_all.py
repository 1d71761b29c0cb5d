import os.path
import warnings

import networkx as nx

from ChemGraph import ChemGraph, GraphValidationError
from graphfiles._context import CACHE, EDGE_LIST, GRAPH6, _cache_filename, _cache_header, _get_format_from_filename, _guess_format
from graphfiles.writer import to_graph6

_GRAPH6_HEADER = ">>graph6<<"
_GRAPH6_MAX_N = 62

# Messages:
_EMPTY_RECORD_ERROR = "Empty graph6 record."
_LONG_FORM_ERROR = "Only short-form graph6 (n <= %d) is supported." % _GRAPH6_MAX_N
_MALFORMED_GRAPH6_ERROR = "Malformed graph6 record '{}': {}"
_PADDING_ERROR = "Malformed graph6 record '{}': non-zero padding bits."
_EDGE_LINE_ERROR = "Line {}: expected two non-negative integer labels 'u v', got: '{}'"
_NO_EDGES_ERROR = "Edge list contains no edges."
_STALE_CACHE_WARNING = "Ignoring enumeration cache file '{}': {}."


class GraphFormatError(ValueError):
    """Text that is not a well-formed graph6 record or edge list."""


def parse_graph6(text):
    """
    Parses one short-form graph6 record (an optional '>>graph6<<' header and surrounding whitespace are allowed).
    :return: A validated ChemGraph.
    :raises GraphFormatError: for a malformed header, length or padding.
    :raises GraphValidationError: if the graph is disconnected or has a vertex of degree > 4.
    """
    record = text.strip()
    if record.startswith(_GRAPH6_HEADER):
        record = record[len(_GRAPH6_HEADER) :].strip()
    if record == "":
        raise GraphFormatError(_EMPTY_RECORD_ERROR)
    if record[0] == "~":
        raise GraphFormatError(_LONG_FORM_ERROR)
    try:
        data = record.encode("ascii")
        g = nx.from_graph6_bytes(data)
    except (nx.NetworkXError, ValueError) as e:  # UnicodeEncodeError is a ValueError too
        raise GraphFormatError(_MALFORMED_GRAPH6_ERROR.format(record, e)) from e
    G = ChemGraph.from_networkx(g)  # n < 1 or invalid structure raises GraphValidationError
    if to_graph6(G) != data:
        raise GraphFormatError(_PADDING_ERROR.format(record))
    return G


def parse_edge_list(text):
    """
    Parses "u v" lines with 0-based labels. Blank lines and '#' comments are ignored.
    The order is one more than the largest label, so an unused label shows up as a disconnected vertex.
    """
    edges = []
    for line_num, line in enumerate(text.splitlines(), start=1):
        line = line.split("#", 1)[0].strip()
        if line == "":
            continue
        fields = line.split()
        if len(fields) != 2 or not all(f.isascii() and f.isdigit() for f in fields):
            raise GraphFormatError(_EDGE_LINE_ERROR.format(line_num, line))
        edges.append((int(fields[0]), int(fields[1])))
    if not edges:
        raise GraphFormatError(_NO_EDGES_ERROR)
    n = 1 + max(max(u, v) for u, v in edges)
    return ChemGraph.from_edges(n, edges)


def loads(input_string, fmt=None):
    """
    Parses a string holding graphs in one of the supported formats.
    :param fmt: GRAPH6 (one record per non-empty line), EDGE_LIST (a single graph) or CACHE. Guessed from the content if None.
    :return: A list of ChemGraphs.
    """
    assert isinstance(input_string, str)
    if fmt is None:
        fmt = _guess_format(input_string)
    if fmt == EDGE_LIST:
        return [parse_edge_list(input_string)]
    lines = [line.strip() for line in input_string.splitlines()]
    if fmt == CACHE:
        lines = lines[1:]
    return [parse_graph6(line) for line in lines if line != "" and not line.startswith("#")]


def load(filename, fmt=None):
    """
    Parses the file with a given filename to a list of ChemGraphs.
    If fmt is None it is inferred from the file's extension (.g6, .txt, .edges, ...), then from the content.
    """
    if fmt is None:
        fmt = _get_format_from_filename(filename)
    with open(filename, encoding="ascii") as file:
        s = file.read()
    return loads(s, fmt)


def read_cache(directory, n, m):
    """
    :return: The sorted canonical graph6 codes stored for (n,m), or None when there is no usable cache file.
    """
    filename = os.path.join(directory, _cache_filename(n, m))
    if not os.path.isfile(filename):
        return None
    try:
        with open(filename, encoding="ascii") as file:
            lines = file.read().splitlines()
    except (OSError, UnicodeDecodeError) as e:
        warnings.warn(_STALE_CACHE_WARNING.format(filename, e))
        return None
    if not lines or lines[0] != _cache_header(n, m):
        warnings.warn(_STALE_CACHE_WARNING.format(filename, "unexpected header"))
        return None
    codes = [line.encode("ascii") for line in lines[1:] if line != ""]
    if codes != sorted(set(codes)):
        warnings.warn(_STALE_CACHE_WARNING.format(filename, "codes not sorted or not unique"))
        return None
    return codes


__all__ = ["GraphFormatError", "GraphValidationError", "load", "loads", "parse_edge_list", "parse_graph6", "read_cache"]
