"""Value domain and the ordinary-object heap.

Values are floats (all numbers), bools, strings, the null and undefined
singletons, and references into an append-only heap. Property tables are
string keyed and insertion ordered. Numbers used as property keys are
converted to their printed decimal form, so obj[0] and obj["0"] address
the same slot; every other non-string key is a type error.
"""

import math
from dataclasses import dataclass
from typing import Callable, Iterable, Optional, Union

from .errors import LangTypeError


class Null:
    __slots__ = ()

    def __repr__(self):
        return "null"


class Undefined:
    __slots__ = ()

    def __repr__(self):
        return "undefined"


NULL = Null()
UNDEFINED = Undefined()


@dataclass(frozen=True)
class ObjectRef:
    index: int


Value = Union[float, bool, str, Null, Undefined, ObjectRef]


@dataclass
class FunctionRecord:
    """A function defined in the language: parameters, body, closure."""
    params: list
    body: object  # Block
    env: object   # Environment
    name: Optional[str] = None


@dataclass
class NativeFunction:
    """A function implemented in Python: fn(interp, this_value, args)."""
    name: str
    fn: Callable


class HeapObject:
    """Internal operation surface shared by ordinary objects and proxies."""

    def get(self, interp, self_ref, key, receiver):
        raise NotImplementedError

    def set(self, interp, self_ref, key, value, receiver):
        raise NotImplementedError

    def has(self, interp, self_ref, key):
        raise NotImplementedError

    def delete(self, interp, self_ref, key):
        raise NotImplementedError

    def own_keys(self, interp, self_ref):
        raise NotImplementedError

    def call(self, interp, self_ref, this_value, args):
        raise NotImplementedError

    def is_callable_obj(self, heap) -> bool:
        raise NotImplementedError


class OrdinaryObject(HeapObject):
    __slots__ = ("properties", "function")

    def __init__(self, properties=None, function=None):
        self.properties: dict = dict(properties or {})
        self.function = function  # FunctionRecord | NativeFunction | None

    def get(self, interp, self_ref, key, receiver):
        return self.properties.get(key, UNDEFINED)

    def set(self, interp, self_ref, key, value, receiver):
        self.properties[key] = value

    def has(self, interp, self_ref, key):
        return key in self.properties

    def delete(self, interp, self_ref, key):
        if key in self.properties:
            del self.properties[key]
            return True
        return False

    def own_keys(self, interp, self_ref):
        return list(self.properties)

    def call(self, interp, self_ref, this_value, args):
        if self.function is None:
            raise LangTypeError("object is not callable")
        return interp.invoke(self.function, this_value, args)

    def is_callable_obj(self, heap) -> bool:
        return self.function is not None


class Heap:
    """Append-only object store; a reference is a stable slot index."""

    def __init__(self):
        self._slots: list = []

    def alloc(self, obj: HeapObject) -> ObjectRef:
        self._slots.append(obj)
        return ObjectRef(len(self._slots) - 1)

    def alloc_object(self, props: Iterable = ()) -> ObjectRef:
        return self.alloc(OrdinaryObject(dict(props)))

    def deref(self, ref: ObjectRef) -> HeapObject:
        return self._slots[ref.index]

    def __len__(self):
        return len(self._slots)


# --- internal operations, dispatched on the object's class ---

def internal_get(interp, ref: ObjectRef, key: str, receiver) -> Value:
    return interp.heap.deref(ref).get(interp, ref, key, receiver)


def internal_set(interp, ref: ObjectRef, key: str, value, receiver) -> None:
    interp.heap.deref(ref).set(interp, ref, key, value, receiver)


def internal_has(interp, ref: ObjectRef, key: str) -> bool:
    return interp.heap.deref(ref).has(interp, ref, key)


def internal_delete(interp, ref: ObjectRef, key: str) -> bool:
    return interp.heap.deref(ref).delete(interp, ref, key)


def internal_own_keys(interp, ref: ObjectRef) -> list:
    return interp.heap.deref(ref).own_keys(interp, ref)


def internal_call(interp, ref: ObjectRef, this_value, args) -> Value:
    return interp.heap.deref(ref).call(interp, ref, this_value, args)


# --- value helpers ---

def kind_of(value) -> str:
    if isinstance(value, bool):
        return "boolean"
    if isinstance(value, float):
        return "number"
    if isinstance(value, str):
        return "string"
    if value is NULL:
        return "null"
    if value is UNDEFINED:
        return "undefined"
    if isinstance(value, ObjectRef):
        return "object"
    raise TypeError(f"not a language value: {value!r}")


def truthy(value) -> bool:
    if isinstance(value, bool):
        return value
    if isinstance(value, float):
        return value == value and value != 0.0
    if isinstance(value, str):
        return value != ""
    if value is NULL or value is UNDEFINED:
        return False
    return True


def format_number(value: float) -> str:
    if value != value:
        return "NaN"
    if value == math.inf:
        return "Infinity"
    if value == -math.inf:
        return "-Infinity"
    if value == int(value) and abs(value) < 1e21:
        return str(int(value))
    return repr(value)


def render_value(value) -> str:
    """Printed form: numbers in decimal, objects as an opaque tag."""
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, float):
        return format_number(value)
    if isinstance(value, str):
        return value
    if value is NULL:
        return "null"
    if value is UNDEFINED:
        return "undefined"
    if isinstance(value, ObjectRef):
        return "[object]"
    raise TypeError(f"not a language value: {value!r}")


def to_property_key(value) -> str:
    if isinstance(value, str):
        return value
    if isinstance(value, float):
        return format_number(value)
    raise LangTypeError(
        f"property keys must be strings or numbers, not {kind_of(value)}")


def is_callable(heap: Heap, value) -> bool:
    return isinstance(value, ObjectRef) \
        and heap.deref(value).is_callable_obj(heap)
