import json
import math
from enum import Enum
from fractions import Fraction

import numpy as np

_FLOAT_FORMAT = "%.17g"
_FIELD_STRING = "{}: {}"
_LIST_STRING = "[{}]"
_OBJECT_STRING = "{{{}}}"
_SEPARATOR = ", "

_UNSERIALIZABLE_ERROR = "Cannot serialize value of type {}."


def to_json(target):
    """
    Serializes reports (dicts, lists, numbers, strings) to a single JSON line.
    Floats are written with 17 significant digits so they survive a round-trip; integral floats print as integers.
    :param target: A dictionary, list or scalar. Enum members are written as their values.
    :return: JSON text without a trailing newline.
    """
    return _serialize(target)


def _serialize(target):
    if isinstance(target, dict):
        return _serialize_object(target)
    if isinstance(target, (list, tuple)):
        return _serialize_list(target)
    if isinstance(target, Enum):
        return _serialize(target.value)
    if isinstance(target, str):
        return _serialize_string(target)
    if isinstance(target, bytes):
        return _serialize_string(target.decode("ascii"))
    if target is None:
        return "null"
    if isinstance(target, (bool, np.bool_)):
        return "true" if target else "false"
    if isinstance(target, (int, np.integer)):
        return str(int(target))
    if isinstance(target, (float, Fraction, np.floating)):
        return _serialize_float(float(target))
    raise ValueError(_UNSERIALIZABLE_ERROR.format(type(target)))


def _serialize_float(value):
    if not math.isfinite(value):
        return "null"
    if value == 0:
        return "0"  # no "-0"
    return _FLOAT_FORMAT % value


def _serialize_list(target):
    serialized = [_serialize(el) for el in target]
    return _LIST_STRING.format(_SEPARATOR.join(serialized))


def _serialize_object(target):
    serialized = [_FIELD_STRING.format(_serialize_string(str(k)), _serialize(v)) for k, v in target.items()]
    return _OBJECT_STRING.format(_SEPARATOR.join(serialized))


def _serialize_string(target):
    return json.dumps(target)
