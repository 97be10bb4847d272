"""A small dynamic object language with proxies whose equality
behavior is configurable per interpreter."""

from .errors import (ContractViolation, LangReferenceError, LangTypeError,
                     LexError, ParseError, PlxError, PlxRuntimeError,
                     RevokedProxyError, StackOverflow)
from .equality import (EqualityMode, builtin_is_equal, builtin_is_identical,
                       loose_equals, opaque_loose_equals,
                       opaque_strict_equals, raw_identical, resolve_for_mode,
                       strict_equals)
from .interpreter import (Environment, ExecutionResult, Interpreter,
                          evaluate_program, run_source)
from .lexer import Token, tokenize
from .nodes import Program, pretty_print
from .objects import (NULL, UNDEFINED, Heap, ObjectRef, internal_call,
                      internal_delete, internal_get, internal_has,
                      internal_own_keys, internal_set, render_value)
from .parser import parse, parse_expression, parse_source
from .prelude import default_prelude_source
from .proxies import (ProxyObject, get_equality_object, is_transparent,
                      proxy_create, revoke, with_transparency)

__all__ = [
    "ContractViolation", "LangReferenceError", "LangTypeError", "LexError",
    "ParseError", "PlxError", "PlxRuntimeError", "RevokedProxyError",
    "StackOverflow",
    "EqualityMode", "builtin_is_equal", "builtin_is_identical",
    "loose_equals", "opaque_loose_equals", "opaque_strict_equals",
    "raw_identical", "resolve_for_mode", "strict_equals",
    "Environment", "ExecutionResult", "Interpreter", "evaluate_program",
    "run_source",
    "Token", "tokenize",
    "Program", "pretty_print",
    "NULL", "UNDEFINED", "Heap", "ObjectRef", "internal_call",
    "internal_delete", "internal_get", "internal_has", "internal_own_keys",
    "internal_set", "render_value",
    "parse", "parse_expression", "parse_source",
    "default_prelude_source",
    "ProxyObject", "get_equality_object", "is_transparent", "proxy_create",
    "revoke", "with_transparency",
]

__version__ = "0.1.0"
