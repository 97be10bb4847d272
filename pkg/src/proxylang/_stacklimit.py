"""Process limits for deeply recursive interpretation on CPython.

The evaluator is a plain recursive tree walker, so an interpreted call
stack of 1024 frames costs on the order of ten thousand Python frames.
CPython 3.10 consumes C stack per Python frame, which means the default
8 MB thread stack segfaults long before sys.setrecursionlimit matters.
Raising RLIMIT_STACK on the main thread fixes that on Linux; where the
raise is refused we keep the recursion limit low enough to stay safe.
"""

import sys

try:
    import resource
except ImportError:  # non-POSIX platform
    resource = None

_DEEP_LIMIT = 200_000
_SAFE_LIMIT = 20_000
_BIG_ENOUGH = 64 * 1024 * 1024


def _raise_stack_rlimit() -> bool:
    """Try to lift the soft stack limit; report whether the stack is large."""
    if resource is None:
        return False
    try:
        soft, hard = resource.getrlimit(resource.RLIMIT_STACK)
        if soft != hard:
            resource.setrlimit(resource.RLIMIT_STACK, (hard, hard))
            soft = hard
        if soft == resource.RLIM_INFINITY or soft >= _BIG_ENOUGH:
            return True
    except (ValueError, OSError):
        pass
    return False


def ensure_deep_stack() -> None:
    """Make deep recursion survivable. Idempotent and best effort."""
    target = _DEEP_LIMIT if _raise_stack_rlimit() else _SAFE_LIMIT
    if sys.getrecursionlimit() < target:
        sys.setrecursionlimit(target)
