import pytest
from hypothesis import given
from hypothesis import strategies as st

from proxylang.errors import LexError
from proxylang.lexer import decode_string_lexeme, tokenize


def lexemes(source):
    return [t.lexeme for t in tokenize(source)]


def kinds(source):
    return [t.kind for t in tokenize(source)]


def test_proxy_construction_line():
    tokens = tokenize("var p = new Proxy (target, handler);")
    assert [t.lexeme for t in tokens] == [
        "var", "p", "=", "new", "Proxy", "(", "target", ",", "handler",
        ")", ";"]
    assert [t.kind for t in tokens] == [
        "keyword", "identifier", "punctuator", "keyword", "identifier",
        "punctuator", "identifier", "punctuator", "identifier",
        "punctuator", "punctuator"]


# Maximal munch around the colon operators: every split of the longer
# operator must not win over the operator itself.
@pytest.mark.parametrize("source,expected", [
    ("a :===: b", ["a", ":===:", "b"]),
    ("a :==: b", ["a", ":==:", "b"]),
    ("a === b", ["a", "===", "b"]),
    ("a == b", ["a", "==", "b"]),
    ("a !== b", ["a", "!==", "b"]),
    ("a != b", ["a", "!=", "b"]),
    ("a:===:b", ["a", ":===:", "b"]),
    ("a:==:b", ["a", ":==:", "b"]),
    ("x===y", ["x", "===", "y"]),
    ("x==y", ["x", "==", "y"]),
    ("a ? b : c", ["a", "?", "b", ":", "c"]),
])
def test_operator_munch(source, expected):
    assert lexemes(source) == expected


def test_colon_operators_do_not_leak_colons():
    # ':===:' is one token, not ':' '===' ':'
    tokens = tokenize("p:===:q")
    assert len(tokens) == 3
    assert tokens[1].lexeme == ":===:"
    assert tokens[1].kind == "punctuator"


def test_positions():
    tokens = tokenize('var x = 1;\n  x = "two";')
    positions = [(t.lexeme, t.line, t.column) for t in tokens]
    assert positions == [
        ("var", 1, 1), ("x", 1, 5), ("=", 1, 7), ("1", 1, 9), (";", 1, 10),
        ("x", 2, 3), ("=", 2, 5), ('"two"', 2, 7), (";", 2, 12)]


def test_comments_skipped():
    assert lexemes("a // rest ignored\nb") == ["a", "b"]
    assert lexemes("a /* one\ntwo */ b") == ["a", "b"]
    assert lexemes("/* x */") == []
    tokens = tokenize("/* a\nb */ c")
    assert tokens[0].line == 2 and tokens[0].column == 6


def test_numbers():
    assert lexemes("0 42 3.25 10.0") == ["0", "42", "3.25", "10.0"]
    assert kinds("0 42 3.25 10.0") == ["number"] * 4
    # a trailing dot is member access, not part of the number
    assert lexemes("1.foo") == ["1", ".", "foo"]
    assert lexemes("1.5.foo") == ["1.5", ".", "foo"]


def test_strings_and_escapes():
    assert decode_string_lexeme('"a\\nb"') == "a\nb"
    assert decode_string_lexeme("'it\\'s'") == "it's"
    assert decode_string_lexeme('"tab\\there"') == "tab\there"
    assert decode_string_lexeme('"q\\"q"') == 'q"q'
    assert decode_string_lexeme('"back\\\\slash"') == "back\\slash"
    tokens = tokenize("'single' \"double\"")
    assert [t.kind for t in tokens] == ["string", "string"]


def test_keywords_vs_identifiers():
    assert kinds("var varx if iffy") == [
        "keyword", "identifier", "keyword", "identifier"]
    assert kinds("undefined undefinedx $ _a") == [
        "keyword", "identifier", "identifier", "identifier"]


@pytest.mark.parametrize("source", [
    '"open', "'open", '"line\nbreak"', '"bad \\q escape"', "/* never closed",
    "@", "#", "a & b", "a | b",
])
def test_lex_errors(source):
    with pytest.raises(LexError) as exc:
        tokenize(source)
    assert exc.value.line >= 1
    assert exc.value.column >= 1


def test_error_positions_exact():
    with pytest.raises(LexError) as exc:
        tokenize("ok;\n  @")
    assert (exc.value.line, exc.value.column) == (2, 3)


@given(st.text(max_size=200))
def test_fuzz_never_crashes(source):
    # any input either tokenizes or raises a positioned LexError
    try:
        tokens = tokenize(source)
    except LexError as err:
        assert err.line >= 1 and err.column >= 1
    else:
        for tok in tokens:
            assert tok.lexeme
            assert tok.kind in ("identifier", "keyword", "number",
                                "string", "punctuator")


@given(st.lists(st.sampled_from(
    ["a", "b", "==", "===", ":==:", ":===:", "!=", "!==", "1", "2.5",
     "(", ")", ";"]), max_size=12))
def test_fuzz_spaced_tokens_roundtrip(parts):
    # tokens separated by spaces lex back to exactly those lexemes
    source = " ".join(parts)
    assert lexemes(source) == parts
