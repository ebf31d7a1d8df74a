"""Binomial-shaped binary trees.

A tree of shape (n, k) holds one payload for each k-element sublist of an
n-element source, so a valid tree has exactly C(n, k) payloads.  The shape
rules force the constructor skeleton:

    k = 0          TipZ(p)        the single empty sublist
    k = n, k >= 1  TipS(p)        the single full sublist
    0 < k < n      Bin(t, u)      t valid at (n-1, k), u valid at (n-1, k-1)

Nothing validates at k > n.  Trees are immutable and compare structurally.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Generic, TypeVar, Union

P = TypeVar("P")
Q = TypeVar("Q")
R = TypeVar("R")


class ShapeMismatch(ValueError):
    """Zipped trees do not share a constructor skeleton."""


class NotATip(ValueError):
    """A tip was required but a branch node was found."""


class ParseError(ValueError):
    """Malformed tree text.  `position` is a 0-based offset into the input."""

    def __init__(self, message: str, position: int):
        super().__init__(f"{message} at position {position}")
        self.position = position


class _Unit:
    """Placeholder payload for blank tables; the codec spells it '*'."""

    __slots__ = ()

    def __repr__(self) -> str:
        return "unit"

    def __eq__(self, other: object) -> bool:
        return isinstance(other, _Unit)

    def __hash__(self) -> int:
        return hash(_Unit)


UNIT = _Unit()


@dataclass(frozen=True, slots=True)
class TipZ(Generic[P]):
    """Tip of a (n, 0) tree: payload for the empty sublist."""

    payload: P


@dataclass(frozen=True, slots=True)
class TipS(Generic[P]):
    """Tip of a (n, n) tree with n >= 1: payload for the full sublist."""

    payload: P


@dataclass(frozen=True, slots=True)
class Bin(Generic[P]):
    """Branch of a (n, k) tree with 0 < k < n."""

    left: "Tree[P]"
    right: "Tree[P]"


Tree = Union[TipZ[P], TipS[P], Bin[P]]

_NODE_TYPES = (TipZ, TipS, Bin)


def is_tree(x: object) -> bool:
    return isinstance(x, _NODE_TYPES)


def validate_shape(t: Tree[P], n: int, k: int) -> bool:
    """Total check that t is well-formed for shape (n, k)."""
    if k < 0 or n < 0 or k > n:
        return False
    if k == 0:
        return isinstance(t, TipZ)
    if k == n:
        return isinstance(t, TipS)
    return (
        isinstance(t, Bin)
        and validate_shape(t.left, n - 1, k)
        and validate_shape(t.right, n - 1, k - 1)
    )


def size(t: Tree[P]) -> int:
    """Number of payloads; C(n, k) for a tree valid at (n, k)."""
    if isinstance(t, Bin):
        return size(t.left) + size(t.right)
    return 1


def map_tree(f: Callable[[P], Q], t: Tree[P]) -> Tree[Q]:
    """Apply f to every payload, preserving the skeleton."""
    if isinstance(t, Bin):
        return Bin(map_tree(f, t.left), map_tree(f, t.right))
    if isinstance(t, TipZ):
        return TipZ(f(t.payload))
    return TipS(f(t.payload))


def zip_with(f: Callable[[P, Q], R], t: Tree[P], u: Tree[Q]) -> Tree[R]:
    """Combine two trees with identical skeletons payload by payload."""
    if isinstance(t, Bin) and isinstance(u, Bin):
        return Bin(zip_with(f, t.left, u.left), zip_with(f, t.right, u.right))
    if isinstance(t, TipZ) and isinstance(u, TipZ):
        return TipZ(f(t.payload, u.payload))
    if isinstance(t, TipS) and isinstance(u, TipS):
        return TipS(f(t.payload, u.payload))
    raise ShapeMismatch(f"cannot zip {type(t).__name__} with {type(u).__name__}")


def un_tip(t: Tree[P]) -> P:
    """Payload of a tip; the inverse of TipZ/TipS construction."""
    if isinstance(t, Bin):
        raise NotATip("branch node has no single payload")
    return t.payload


def flatten(t: Tree[P]) -> tuple[P, ...]:
    """All payloads in left-to-right order."""
    acc: list[P] = []
    _flatten_into(t, acc)
    return tuple(acc)


def _flatten_into(t: Tree[P], acc: list[P]) -> None:
    if isinstance(t, Bin):
        _flatten_into(t.left, acc)
        _flatten_into(t.right, acc)
    else:
        acc.append(t.payload)


# --- text codec ------------------------------------------------------------
#
# tree    ::= 'Z(' payload ')' | 'S(' payload ')' | 'B(' tree ',' tree ')'
# payload ::= '*' | '-'? digit+ | '"' chars '"' | '[' [payload (',' payload)*] ']'
#           | tree
#
# No whitespace is emitted and none is accepted.  Inside strings only '"'
# and '\' are escaped, with a backslash.  Sequence payloads decode to
# tuples; '[]' is the empty sequence.


def encode(t: Tree[P], encode_payload: Callable[[P], str] | None = None) -> str:
    """Render t in the single-line text form.

    The default payload encoding covers unit, int, str, tuple and nested
    trees.  Pass encode_payload to take over payload rendering; its output
    must conform to the payload grammar.
    """
    parts: list[str] = []
    _encode_tree(t, parts, encode_payload)
    return "".join(parts)


def _encode_tree(
    t: Tree[P], parts: list[str], ep: Callable[[P], str] | None
) -> None:
    if isinstance(t, Bin):
        parts.append("B(")
        _encode_tree(t.left, parts, ep)
        parts.append(",")
        _encode_tree(t.right, parts, ep)
        parts.append(")")
        return
    parts.append("Z(" if isinstance(t, TipZ) else "S(")
    if ep is None:
        _encode_payload(t.payload, parts)
    else:
        parts.append(ep(t.payload))
    parts.append(")")


def _encode_payload(p: object, parts: list[str]) -> None:
    if isinstance(p, _Unit):
        parts.append("*")
    elif isinstance(p, bool):
        raise TypeError("bool payloads have no default encoding")
    elif isinstance(p, int):
        parts.append(str(p))
    elif isinstance(p, str):
        parts.append('"' + p.replace("\\", "\\\\").replace('"', '\\"') + '"')
    elif isinstance(p, tuple):
        parts.append("[")
        for i, item in enumerate(p):
            if i:
                parts.append(",")
            _encode_payload(item, parts)
        parts.append("]")
    elif is_tree(p):
        _encode_tree(p, parts, None)
    else:
        raise TypeError(
            f"no default encoding for payload of type {type(p).__name__}; "
            "pass encode_payload"
        )


def decode(
    text: str, decode_payload: Callable[[object], object] | None = None
) -> Tree:
    """Parse the text form back into a tree.

    decode_payload, if given, post-processes every decoded payload value.
    Raises ParseError with the offending offset on malformed input,
    including trailing characters.
    """
    t, pos = _parse_tree(text, 0, decode_payload)
    if pos != len(text):
        raise ParseError("trailing input", pos)
    return t


def _parse_tree(
    s: str, i: int, dp: Callable[[object], object] | None
) -> tuple[Tree, int]:
    if i >= len(s):
        raise ParseError("expected a tree", i)
    c = s[i]
    if c in "ZS":
        i = _expect(s, i + 1, "(")
        payload, i = _parse_payload(s, i, dp)
        i = _expect(s, i, ")")
        return (TipZ(payload) if c == "Z" else TipS(payload)), i
    if c == "B":
        i = _expect(s, i + 1, "(")
        left, i = _parse_tree(s, i, dp)
        i = _expect(s, i, ",")
        right, i = _parse_tree(s, i, dp)
        i = _expect(s, i, ")")
        return Bin(left, right), i
    raise ParseError("expected 'Z', 'S' or 'B'", i)


def _parse_payload(
    s: str, i: int, dp: Callable[[object], object] | None
) -> tuple[object, int]:
    if i >= len(s):
        raise ParseError("expected a payload", i)
    c = s[i]
    value: object
    if c == "*":
        value, i = UNIT, i + 1
    elif c == "-" or c.isdigit():
        value, i = _parse_int(s, i)
    elif c == '"':
        value, i = _parse_string(s, i)
    elif c == "[":
        value, i = _parse_sequence(s, i, dp)
    elif c in "ZSB":
        value, i = _parse_tree(s, i, dp)
        return value, i  # nested trees already ran dp on their payloads
    else:
        raise ParseError("expected a payload", i)
    if dp is not None:
        value = dp(value)
    return value, i


def _parse_int(s: str, i: int) -> tuple[int, int]:
    start = i
    if s[i] == "-":
        i += 1
    digits = i
    while i < len(s) and s[i].isdigit():
        i += 1
    if i == digits:
        raise ParseError("expected a digit", i)
    return int(s[start:i]), i


def _parse_string(s: str, i: int) -> tuple[str, int]:
    chars: list[str] = []
    i += 1  # past opening quote
    while i < len(s):
        c = s[i]
        if c == '"':
            return "".join(chars), i + 1
        if c == "\\":
            if i + 1 >= len(s) or s[i + 1] not in '"\\':
                raise ParseError("bad escape", i)
            chars.append(s[i + 1])
            i += 2
        else:
            chars.append(c)
            i += 1
    raise ParseError("unterminated string", i)


def _parse_sequence(
    s: str, i: int, dp: Callable[[object], object] | None
) -> tuple[tuple, int]:
    i += 1  # past '['
    if i < len(s) and s[i] == "]":
        return (), i + 1
    items = []
    while True:
        item, i = _parse_payload(s, i, dp)
        items.append(item)
        if i < len(s) and s[i] == ",":
            i += 1
            continue
        i = _expect(s, i, "]")
        return tuple(items), i


def _expect(s: str, i: int, ch: str) -> int:
    if i >= len(s) or s[i] != ch:
        raise ParseError(f"expected {ch!r}", i)
    return i + 1


# --- ascii rendering --------------------------------------------------------


def render_ascii(
    t: Tree[P], render_payload: Callable[[P], str] | None = None
) -> str:
    """Indented multi-line picture of a tree.

    A branch prints '. ' followed by its left subtree, with the right
    subtree below it, both indented two columns.  Tips print just their
    payload, which is assumed to render on one line.  Strings render bare;
    other payloads fall back to the codec form.
    """
    rp = render_payload if render_payload is not None else _render_payload
    return "\n".join(_ascii_lines(t, rp))


def _render_payload(p: object) -> str:
    if isinstance(p, str):
        return p
    parts: list[str] = []
    _encode_payload(p, parts)
    return "".join(parts)


def _ascii_lines(t: Tree[P], rp: Callable[[P], str]) -> list[str]:
    if not isinstance(t, Bin):
        return [rp(t.payload)]
    first, *rest = _ascii_lines(t.left, rp)
    out = [". " + first]
    out.extend("  " + line for line in rest)
    out.extend("  " + line for line in _ascii_lines(t.right, rp))
    return out
