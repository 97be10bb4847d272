"""Identity-keyed maps whose keys respect the active equality mode.

A WeakMap stores entries under the key's equality object, resolved
fresh at every operation. In trap mode a transparent proxy and its
target therefore address the same entry, while in opaque mode they are
distinct keys. Only objects are valid keys. Entries are held strongly;
the name follows the host-language convention for identity-keyed maps,
not a collection contract.
"""

from .errors import LangTypeError
from .objects import UNDEFINED, ObjectRef, OrdinaryObject, kind_of
from .equality import resolve_for_mode


class IdentityMap:
    __slots__ = ("entries",)

    def __init__(self):
        self.entries: dict = {}  # resolved heap index -> value


def _resolve_key(interp, key) -> int:
    if not isinstance(key, ObjectRef):
        raise LangTypeError(f"WeakMap keys must be objects, "
                            f"not {kind_of(key)}")
    resolved = resolve_for_mode(interp, key, interp.mode)
    return resolved.index


def idmap_set(interp, imap: IdentityMap, key, value) -> None:
    imap.entries[_resolve_key(interp, key)] = value


def idmap_get(interp, imap: IdentityMap, key):
    return imap.entries.get(_resolve_key(interp, key), UNDEFINED)


def idmap_has(interp, imap: IdentityMap, key) -> bool:
    return _resolve_key(interp, key) in imap.entries


def idmap_delete(interp, imap: IdentityMap, key) -> bool:
    return imap.entries.pop(_resolve_key(interp, key), _MISSING) \
        is not _MISSING


_MISSING = object()


def create_weakmap(interp) -> ObjectRef:
    """Allocate a map object with set/get/has/delete methods."""
    from .objects import NativeFunction

    imap = IdentityMap()
    ref = interp.heap.alloc(OrdinaryObject())
    obj = interp.heap.deref(ref)

    def arg(args, i):
        return args[i] if i < len(args) else UNDEFINED

    def wm_set(itp, this, args):
        idmap_set(itp, imap, arg(args, 0), arg(args, 1))
        return ref

    def wm_get(itp, this, args):
        return idmap_get(itp, imap, arg(args, 0))

    def wm_has(itp, this, args):
        return idmap_has(itp, imap, arg(args, 0))

    def wm_delete(itp, this, args):
        return idmap_delete(itp, imap, arg(args, 0))

    for name, fn in (("set", wm_set), ("get", wm_get),
                     ("has", wm_has), ("delete", wm_delete)):
        obj.properties[name] = interp.heap.alloc(
            OrdinaryObject(function=NativeFunction(name, fn)))
    return ref
