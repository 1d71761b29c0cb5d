from graphfiles._context import CACHE, EDGE_LIST, GRAPH6

from ._all import GraphFormatError, load, loads, parse_edge_list, parse_graph6, read_cache

__all__ = ["CACHE", "EDGE_LIST", "GRAPH6", "GraphFormatError", "load", "loads", "parse_edge_list", "parse_graph6", "read_cache"]
