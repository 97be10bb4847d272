import itertools

import pytest
from hypothesis import given
from hypothesis import strategies as st

from proxylang.errors import LangTypeError
from proxylang.interpreter import Interpreter
from proxylang.objects import (NULL, UNDEFINED, ObjectRef, format_number,
                               internal_delete, internal_get, internal_has,
                               internal_own_keys, internal_set, kind_of,
                               render_value, to_property_key, truthy)


@pytest.fixture
def interp():
    return Interpreter()


def test_get_after_set(interp):
    ref = interp.heap.alloc_object()
    internal_set(interp, ref, "a", 1.0, ref)
    assert internal_get(interp, ref, "a", ref) == 1.0
    internal_set(interp, ref, "a", "two", ref)
    assert internal_get(interp, ref, "a", ref) == "two"
    assert internal_get(interp, ref, "missing", ref) is UNDEFINED


def test_own_keys_matches_has(interp):
    ref = interp.heap.alloc_object([("x", 1.0), ("y", 2.0)])
    internal_set(interp, ref, "z", 3.0, ref)
    keys = internal_own_keys(interp, ref)
    assert keys == ["x", "y", "z"]  # insertion order
    for key in keys:
        assert internal_has(interp, ref, key)
    assert not internal_has(interp, ref, "w")


def test_delete_all_subsets_against_dict_model(interp):
    # brute force: every subset of three keys deleted in every order
    keys = ("a", "b", "c")
    for subset in itertools.chain.from_iterable(
            itertools.permutations(keys, n) for n in range(4)):
        ref = interp.heap.alloc_object([(k, 1.0) for k in keys])
        model = {k: 1.0 for k in keys}
        for key in subset:
            expected = key in model
            model.pop(key, None)
            assert internal_delete(interp, ref, key) is expected
        assert internal_own_keys(interp, ref) == list(model)
        # deleting again reports absence
        for key in subset:
            assert internal_delete(interp, ref, key) is False


def test_allocations_are_distinct(interp):
    refs = [interp.heap.alloc_object() for _ in range(1000)]
    assert len({r.index for r in refs}) == 1000
    # writes through one reference never show through another
    internal_set(interp, refs[0], "k", 1.0, refs[0])
    assert internal_get(interp, refs[1], "k", refs[1]) is UNDEFINED


def test_reinsertion_moves_key_to_end(interp):
    ref = interp.heap.alloc_object([("a", 1.0), ("b", 2.0)])
    internal_delete(interp, ref, "a")
    internal_set(interp, ref, "a", 3.0, ref)
    assert internal_own_keys(interp, ref) == ["b", "a"]


def test_property_keys():
    assert to_property_key("s") == "s"
    assert to_property_key(0.0) == "0"
    assert to_property_key(1.5) == "1.5"
    assert to_property_key(-0.0) == "0"
    for bad in (True, NULL, UNDEFINED, ObjectRef(0)):
        with pytest.raises(LangTypeError):
            to_property_key(bad)


def test_number_and_string_keys_alias(interp):
    ref = interp.heap.alloc_object()
    internal_set(interp, ref, to_property_key(0.0), "zero", ref)
    assert internal_get(interp, ref, "0", ref) == "zero"


@pytest.mark.parametrize("value,text", [
    (0.0, "0"),
    (-0.0, "0"),
    (3.0, "3"),
    (-3.0, "-3"),
    (3.5, "3.5"),
    (float("nan"), "NaN"),
    (float("inf"), "Infinity"),
    (float("-inf"), "-Infinity"),
    (1e21, "1e+21"),
    (123456789.0, "123456789"),
])
def test_format_number(value, text):
    assert format_number(value) == text


def test_render_value(interp):
    assert render_value(True) == "true"
    assert render_value(False) == "false"
    assert render_value(NULL) == "null"
    assert render_value(UNDEFINED) == "undefined"
    assert render_value("s") == "s"
    assert render_value(interp.heap.alloc_object()) == "[object]"


def test_truthiness():
    for falsy in (False, 0.0, -0.0, float("nan"), "", NULL, UNDEFINED):
        assert not truthy(falsy)
    for true in (True, 1.0, -1.0, "x", "0", ObjectRef(0)):
        assert truthy(true)


def test_kind_of():
    assert kind_of(1.0) == "number"
    assert kind_of(True) == "boolean"
    assert kind_of("") == "string"
    assert kind_of(NULL) == "null"
    assert kind_of(UNDEFINED) == "undefined"
    assert kind_of(ObjectRef(3)) == "object"


@given(st.floats(allow_nan=False, allow_infinity=False))
def test_format_number_roundtrips(value):
    text = format_number(value)
    assert float(text) == value or (value == int(value)
                                    and float(text) == value)
