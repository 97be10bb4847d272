"""Equality semantics, configurable per interpreter.

Four modes decide how proxies compare:

* opaque: a proxy is a distinct object; == and === use reference
  identity on objects, so a proxy never equals its target.
* transparent: == and === resolve every proxy (revoked ones excepted)
  to the innermost non-proxy before comparing, unconditionally.
* operators: == and === resolve like transparent mode, and the extra
  operators :==: and :===: compare without resolving, so programs that
  need reference identity can still ask for it.
* trap: each proxy votes via its isTransparent trap; == and === follow
  a proxy only while it answers true, stopping at the first opaque or
  revoked link.

The opaque operators :==: and :===: are available in every mode and
always compare raw references. Proxy.isEqual and Proxy.isIdentical
always resolve fully, regardless of mode.

Primitive comparisons are unaffected by the mode. === on primitives is
same-type value equality (NaN is unequal to itself, 0 equals -0); ==
additionally coerces: null equals undefined, booleans compare as 0/1,
and a number meets a string by converting the string to a number.
Objects never coerce: an object compared to a primitive with == is
simply unequal.
"""

import math
import re
from enum import Enum

from .objects import NULL, UNDEFINED, ObjectRef
from .proxies import ProxyObject, get_equality_object


class EqualityMode(Enum):
    OPAQUE = "opaque"
    TRANSPARENT = "transparent"
    OPERATORS = "operators"
    TRAP = "trap"


def raw_identical(a, b) -> bool:
    """Reference identity on objects, same-type value equality otherwise."""
    if isinstance(a, ObjectRef) or isinstance(b, ObjectRef):
        return isinstance(a, ObjectRef) and isinstance(b, ObjectRef) \
            and a.index == b.index
    if isinstance(a, bool) or isinstance(b, bool):
        return a is b
    if isinstance(a, float) and isinstance(b, float):
        return a == b  # NaN != NaN, 0.0 == -0.0
    if isinstance(a, str) and isinstance(b, str):
        return a == b
    return a is b  # NULL and UNDEFINED are singletons


def resolve_for_mode(interp, value, mode: EqualityMode):
    """The object (or primitive) an equality operand stands for."""
    if not isinstance(value, ObjectRef):
        return value
    if mode is EqualityMode.OPAQUE:
        return value
    if mode is EqualityMode.TRAP:
        return get_equality_object(interp, value)
    # transparent and operators modes resolve unconditionally, pausing
    # only at revoked proxies
    current = value
    while True:
        obj = interp.heap.deref(current)
        if not isinstance(obj, ProxyObject) or obj.revoked:
            return current
        current = obj.target


def strict_equals(interp, a, b, mode=None) -> bool:
    mode = interp.mode if mode is None else mode
    return raw_identical(resolve_for_mode(interp, a, mode),
                         resolve_for_mode(interp, b, mode))


def loose_equals(interp, a, b, mode=None) -> bool:
    mode = interp.mode if mode is None else mode
    a = resolve_for_mode(interp, a, mode)
    b = resolve_for_mode(interp, b, mode)
    if isinstance(a, ObjectRef) or isinstance(b, ObjectRef):
        return isinstance(a, ObjectRef) and isinstance(b, ObjectRef) \
            and a.index == b.index
    return primitive_loose_equals(a, b)


def opaque_strict_equals(interp, a, b) -> bool:
    """The :===: operator: never resolves."""
    return strict_equals(interp, a, b, EqualityMode.OPAQUE)


def opaque_loose_equals(interp, a, b) -> bool:
    """The :==: operator: never resolves, still coerces primitives."""
    return loose_equals(interp, a, b, EqualityMode.OPAQUE)


def builtin_is_identical(interp, a, b) -> bool:
    """Proxy.isIdentical: === through every proxy, in any mode."""
    return strict_equals(interp, a, b, EqualityMode.TRANSPARENT)


def builtin_is_equal(interp, a, b) -> bool:
    """Proxy.isEqual: == through every proxy, in any mode."""
    return loose_equals(interp, a, b, EqualityMode.TRANSPARENT)


# --- primitive coercion ---

def primitive_loose_equals(a, b) -> bool:
    if isinstance(a, bool):
        return primitive_loose_equals(1.0 if a else 0.0, b)
    if isinstance(b, bool):
        return primitive_loose_equals(a, 1.0 if b else 0.0)
    if type(a) is type(b):
        return raw_identical(a, b)
    if (a is NULL and b is UNDEFINED) or (a is UNDEFINED and b is NULL):
        return True
    if isinstance(a, float) and isinstance(b, str):
        return a == string_to_number(b)
    if isinstance(a, str) and isinstance(b, float):
        return string_to_number(a) == b
    return False


_WS = " \t\n\r\v\f ﻿"
_DECIMAL = re.compile(r"[+-]?(\d+\.?\d*|\.\d+)([eE][+-]?\d+)?")
_HEX = re.compile(r"0[xX][0-9a-fA-F]+")
_INFINITY = re.compile(r"[+-]?Infinity")


def string_to_number(text: str) -> float:
    """Numeric value of a string: '' is 0, garbage is NaN."""
    body = text.strip(_WS)
    if body == "":
        return 0.0
    if _HEX.fullmatch(body):
        return float(int(body, 16))
    if _INFINITY.fullmatch(body):
        return -math.inf if body.startswith("-") else math.inf
    if _DECIMAL.fullmatch(body):
        return float(body)
    return math.nan
