import os.path
import warnings

GRAPH6 = "graph6"
EDGE_LIST = "edge list"
CACHE = "cache"

_FORMAT_BY_EXTENSION = {
    "g6": GRAPH6,
    "graph6": GRAPH6,
    "txt": EDGE_LIST,
    "edges": EDGE_LIST,
    "el": EDGE_LIST,
    "cache": CACHE,
}
_formats = set(_FORMAT_BY_EXTENSION.values())

_CACHE_HEADER = "vdfi-cache v1 n={} m={}"
_CACHE_FILENAME = "vdfi-n{}-m{}.g6"

_NO_FILE_EXTENSION_WARNING = "No file extension found in '{}'. Guessing the format from its content."
_UNSUPPORTED_EXTENSION_WARNING = "Unsupported file extension: '{}'. Guessing the format from its content."


def _get_format_from_filename(filename):
    _, extension = os.path.splitext(filename)
    if extension == "":
        warnings.warn(_NO_FILE_EXTENSION_WARNING.format(filename))
        return None
    fmt = _FORMAT_BY_EXTENSION.get(extension[1:].lower())
    if fmt is None:
        warnings.warn(_UNSUPPORTED_EXTENSION_WARNING.format(extension))
    return fmt


def _guess_format(text):
    # an edge list always has a space between labels, graph6 records never do
    for line in text.splitlines():
        line = line.strip()
        if line == "" or line.startswith("#"):
            continue
        if line.startswith(_CACHE_HEADER.split(" n=")[0]):
            return CACHE
        return EDGE_LIST if len(line.split()) > 1 else GRAPH6
    return EDGE_LIST


def _cache_header(n, m):
    return _CACHE_HEADER.format(n, m)


def _cache_filename(n, m):
    return _CACHE_FILENAME.format(n, m)
