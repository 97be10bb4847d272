import itertools
import math

import pytest
from hypothesis import given
from hypothesis import strategies as st

from proxylang.equality import (EqualityMode, builtin_is_equal,
                                builtin_is_identical, loose_equals,
                                opaque_loose_equals, opaque_strict_equals,
                                primitive_loose_equals, raw_identical,
                                resolve_for_mode, strict_equals,
                                string_to_number)
from proxylang.interpreter import Interpreter
from proxylang.objects import NULL, UNDEFINED, ObjectRef
from proxylang.proxies import proxy_create, revoke

MODES = list(EqualityMode)


def interp_for(mode):
    return Interpreter(mode=mode)


def chain(interp, flags):
    """target plus one proxy per flag; True/False via trap, None bare."""
    nodes = [interp.heap.alloc_object()]
    for flag in flags:
        props = {}
        if flag is not None:
            props["isTransparent"] = interp.alloc_native(
                "isTransparent", lambda itp, this, args, f=flag: f)
        nodes.append(proxy_create(interp, nodes[-1],
                                  interp.heap.alloc_object(props)))
    return nodes


# --- raw identity ---

def test_raw_identical_objects_by_reference():
    assert raw_identical(ObjectRef(3), ObjectRef(3))
    assert not raw_identical(ObjectRef(3), ObjectRef(4))
    assert not raw_identical(ObjectRef(3), 3.0)


def test_raw_identical_primitives():
    assert raw_identical(1.0, 1.0)
    assert not raw_identical(float("nan"), float("nan"))
    assert raw_identical(0.0, -0.0)
    assert raw_identical("a", "a")
    assert raw_identical(True, True)
    assert not raw_identical(True, 1.0)
    assert not raw_identical(False, 0.0)
    assert raw_identical(NULL, NULL)
    assert raw_identical(UNDEFINED, UNDEFINED)
    assert not raw_identical(NULL, UNDEFINED)
    assert not raw_identical("1", 1.0)


# --- mode-by-mode proxy resolution ---

def test_opaque_mode_never_resolves():
    interp = interp_for(EqualityMode.OPAQUE)
    nodes = chain(interp, [True])
    assert not strict_equals(interp, nodes[1], nodes[0])
    assert not loose_equals(interp, nodes[1], nodes[0])
    assert strict_equals(interp, nodes[1], nodes[1])


def test_transparent_mode_always_resolves():
    interp = interp_for(EqualityMode.TRANSPARENT)
    # even a False trap answer cannot keep the proxy distinct
    nodes = chain(interp, [False, None, True])
    for a, b in itertools.combinations(nodes, 2):
        assert strict_equals(interp, a, b)
        assert loose_equals(interp, a, b)


def test_operators_mode_matches_transparent_for_plain_ops():
    interp = interp_for(EqualityMode.OPERATORS)
    nodes = chain(interp, [None, None])
    assert strict_equals(interp, nodes[2], nodes[0])
    assert not opaque_strict_equals(interp, nodes[2], nodes[0])
    assert opaque_strict_equals(interp, nodes[2], nodes[2])
    assert not opaque_loose_equals(interp, nodes[2], nodes[0])
    assert opaque_loose_equals(interp, nodes[0], nodes[0])


def test_trap_mode_respects_votes():
    interp = interp_for(EqualityMode.TRAP)
    nodes = chain(interp, [True, False, True])
    # nodes[3] resolves through 3 (True) to 2; 2 votes False, stays
    assert strict_equals(interp, nodes[3], nodes[2])
    assert not strict_equals(interp, nodes[3], nodes[1])
    assert not strict_equals(interp, nodes[3], nodes[0])
    assert strict_equals(interp, nodes[1], nodes[0])


def test_opaque_operators_available_in_every_mode():
    for mode in MODES:
        interp = interp_for(mode)
        nodes = chain(interp, [True])
        assert not opaque_strict_equals(interp, nodes[1], nodes[0])
        assert not opaque_loose_equals(interp, nodes[1], nodes[0])
        assert opaque_strict_equals(interp, nodes[1], nodes[1])


def test_builtins_resolve_fully_in_every_mode():
    for mode in MODES:
        interp = interp_for(mode)
        nodes = chain(interp, [False, None])
        assert builtin_is_identical(interp, nodes[2], nodes[0])
        assert builtin_is_equal(interp, nodes[2], nodes[0])


def test_revoked_proxy_is_an_equality_endpoint():
    for mode in MODES:
        interp = interp_for(mode)
        nodes = chain(interp, [True, True])
        revoke(interp, nodes[1])
        # comparisons never raise on revoked proxies
        assert strict_equals(interp, nodes[1], nodes[1])
        assert not strict_equals(interp, nodes[1], nodes[0])
        if mode is EqualityMode.OPAQUE:
            assert not strict_equals(interp, nodes[2], nodes[1])
        else:
            assert strict_equals(interp, nodes[2], nodes[1])
        assert not builtin_is_identical(interp, nodes[1], nodes[0])


def test_resolution_is_idempotent():
    for mode in MODES:
        interp = interp_for(mode)
        for flags in itertools.product([True, False, None], repeat=3):
            nodes = chain(interp, list(flags))
            for node in nodes:
                once = resolve_for_mode(interp, node, mode)
                assert resolve_for_mode(interp, once, mode) == once


def test_ref_never_equals_primitive():
    for mode in MODES:
        interp = interp_for(mode)
        nodes = chain(interp, [True])
        for prim in (0.0, 1.0, "", "x", True, False, NULL, UNDEFINED):
            assert not strict_equals(interp, nodes[1], prim)
            assert not loose_equals(interp, nodes[1], prim)
            assert not loose_equals(interp, prim, nodes[0])


# --- primitive coercion table behaviors ---

@pytest.mark.parametrize("a,b,expected", [
    (NULL, UNDEFINED, True),
    (UNDEFINED, NULL, True),
    (NULL, 0.0, False),
    (UNDEFINED, 0.0, False),
    (True, 1.0, True),
    (False, 0.0, True),
    (True, "1", True),
    (False, "", True),
    (False, "0", True),
    (1.0, "1", True),
    (0.0, "", True),
    (0.0, "  ", True),
    (16.0, "0x10", True),
    (1.0, "1.0", True),
    (float("nan"), float("nan"), False),
    (float("nan"), "NaN", False),
    (math.inf, "Infinity", True),
    (-math.inf, "-Infinity", True),
    (1.0, "abc", False),
    ("1", "1.0", False),
    ("", "0", False),
])
def test_primitive_loose_pairs(a, b, expected):
    assert primitive_loose_equals(a, b) is expected
    assert primitive_loose_equals(b, a) is expected


@pytest.mark.parametrize("text,expected", [
    ("", 0.0), ("  ", 0.0), ("42", 42.0), (" 42 ", 42.0), ("-3.5", -3.5),
    ("+7", 7.0), (".5", 0.5), ("5.", 5.0), ("1e3", 1000.0), ("1E-2", 0.01),
    ("0x10", 16.0), ("0XAb", 171.0), ("Infinity", math.inf),
    ("-Infinity", -math.inf), ("+Infinity", math.inf),
])
def test_string_to_number(text, expected):
    assert string_to_number(text) == expected


@pytest.mark.parametrize("text", [
    "abc", "1 2", "1.2.3", "0x", "-0x10", "infinity", "NaN", "1px", "--5",
])
def test_string_to_number_garbage_is_nan(text):
    assert math.isnan(string_to_number(text))


# --- property-style checks ---

prims = st.one_of(
    st.floats(allow_nan=False),
    st.text(max_size=6),
    st.booleans(),
    st.just(NULL),
    st.just(UNDEFINED))


@given(prims, prims)
def test_loose_symmetric(a, b):
    assert primitive_loose_equals(a, b) == primitive_loose_equals(b, a)


@given(prims)
def test_loose_reflexive_without_nan(a):
    assert primitive_loose_equals(a, a)


@given(st.text(max_size=10))
def test_string_to_number_total(text):
    result = string_to_number(text)
    assert isinstance(result, float)


def test_strict_implies_loose_on_primitives():
    sample = [0.0, 1.0, 2.0, float("nan"), "", "0", "1", "abc",
              True, False, NULL, UNDEFINED]
    for a, b in itertools.product(sample, repeat=2):
        if raw_identical(a, b):
            assert primitive_loose_equals(a, b)
