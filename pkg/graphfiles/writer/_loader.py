import os
import warnings

from graphfiles._context import _cache_filename, _cache_header

_CACHE_NOT_WRITABLE_WARNING = "Could not write enumeration cache file '{}' ({}). Continuing without it."


def write_cache(directory, n, m, codes):
    """
    Stores sorted canonical graph6 codes of one (n,m) enumeration level.
    :param directory: Cache directory, created if missing.
    :param codes: Iterable of graph6 bytes; they are sorted bytewise before writing.
    :return: The path written, or None if the cache could not be written (a warning is issued).
    """
    filename = os.path.join(directory, _cache_filename(n, m))
    lines = [_cache_header(n, m)] + [code.decode("ascii") for code in sorted(codes)]
    tmp_filename = filename + ".tmp%d" % os.getpid()
    try:
        os.makedirs(directory, exist_ok=True)
        with open(tmp_filename, "w", encoding="ascii", newline="\n") as outfile:
            outfile.write("\n".join(lines))
            outfile.write("\n")
        os.replace(tmp_filename, filename)  # concurrent writers produce identical content, last one wins
    except OSError as e:
        warnings.warn(_CACHE_NOT_WRITABLE_WARNING.format(filename, e))
        return None
    return filename
