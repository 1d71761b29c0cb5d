from ._graphs import to_edge_list, to_graph6
from ._loader import write_cache
from ._serializer import to_json

__all__ = ["to_edge_list", "to_graph6", "to_json", "write_cache"]
