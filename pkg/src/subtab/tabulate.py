"""Tables over the sublist lattice and the level-raising transform.

Level k of the lattice over an n-element source is the family of its
k-element sublists, tabulated in a binomial-shaped tree.  `choose` builds
the table, `blank` its payload-free skeleton, and `retabulate` raises a
level-k table to level k+1 by grouping, for each (k+1)-sublist, the
entries at all of its immediate sublists.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Generic, Sequence, TypeVar

from .bintree import (
    Bin,
    TipS,
    TipZ,
    Tree,
    UNIT,
    flatten,
    map_tree,
    validate_shape,
    zip_with,
)

E = TypeVar("E")
P = TypeVar("P")

Seq = Sequence


class InvalidLevel(ValueError):
    """Level index outside 0 <= k <= n (strictly below n where required)."""


class ShapeError(ValueError):
    """Input tree does not validate at the stated shape."""


class EmptyInput(ValueError):
    """An operation that consumes one element got an empty sequence."""


@dataclass(frozen=True)
class Shape:
    """Shape index (n, k) of a table; valid when 0 <= k <= n."""

    n: int
    k: int

    def is_valid(self) -> bool:
        return 0 <= self.k <= self.n

    def entries(self) -> int:
        return math.comb(self.n, self.k)


def choose(k: int, xs: Seq[E]) -> Tree[Seq[E]]:
    """Table of all k-element sublists of xs, keyed by position.

    The left subtree collects sublists omitting the head of xs, the right
    subtree those containing it.  Sublists keep the sequence type of xs
    (str in, str out; tuple in, tuple out).
    """
    n = len(xs)
    if k < 0 or k > n:
        raise InvalidLevel(f"cannot pick {k} of {n} elements")
    return _choose(k, xs)


def _choose(k: int, xs: Seq[E]) -> Tree[Seq[E]]:
    if k == 0:
        return TipZ(xs[:0])
    if k == len(xs):
        return TipS(xs)
    head, rest = xs[:1], xs[1:]
    return Bin(_choose(k, rest), map_tree(lambda ys: head + ys, _choose(k - 1, rest)))


def immediate_sublists(xs: Seq[E]) -> tuple[Seq[E], ...]:
    """The sublists of xs with exactly one element removed, in table order."""
    if len(xs) == 0:
        raise EmptyInput("the empty sequence has no immediate sublists")
    return flatten(choose(len(xs) - 1, xs))


def blank(n: int, k: int) -> Tree[object]:
    """The unique unit-payload tree of shape (n, k)."""
    if k < 0 or n < 0 or k > n:
        raise InvalidLevel(f"no shape ({n}, {k})")
    return _blank(n, k)


def _blank(n: int, k: int) -> Tree[object]:
    if k == 0:
        return TipZ(UNIT)
    if k == n:
        return TipS(UNIT)
    return Bin(_blank(n - 1, k), _blank(n - 1, k - 1))


def cons_table(y: P, t: Tree[P]) -> Tree[P]:
    """Extend a (k+1, k) table t with the full-sublist entry y.

    Result is the (k+2, k+1) table whose full tip is y and whose remaining
    entries are those of t.
    """
    return Bin(TipS(y), t)


def retabulate(n: int, k: int, t: Tree[P], *, check: bool = True) -> Tree[Tree[P]]:
    """Raise a level-k table to level k+1.

    The result is valid at (n, k+1); each payload is itself a (k+1, k)
    table grouping the entries of t at all immediate sublists of one
    (k+1)-sublist, ordered with the sublist omitting the newest element
    first.  Requires 0 <= k < n.  With check=True (the default) t is
    validated once up front; recursive calls skip the re-check.
    """
    if not 0 <= k < n:
        raise InvalidLevel(f"cannot raise level {k} within {n} elements")
    if check and not validate_shape(t, n, k):
        raise ShapeError(f"tree does not validate at ({n}, {k})")
    return _retabulate(n, k, t)


def _retabulate(n: int, k: int, t: Tree[P]) -> Tree[Tree[P]]:
    if isinstance(t, TipZ):
        if n == 1:
            return TipS(TipZ(t.payload))
        return Bin(_retabulate(n - 1, 0, t), TipZ(TipZ(t.payload)))
    if not isinstance(t, Bin):
        raise ShapeError("full-sublist tip has no level above it within its source")
    left, right = t.left, t.right
    if isinstance(left, TipS):
        return TipS(cons_table(left.payload, right))
    if isinstance(right, TipZ):
        return Bin(
            _retabulate(n - 1, k, left),
            map_tree(lambda w: cons_table(w, right), left),
        )
    return Bin(
        _retabulate(n - 1, k, left),
        zip_with(cons_table, left, _retabulate(n - 1, k - 1, right)),
    )


def cd_classic(t: Tree[P]) -> Tree[tuple[P, ...]]:
    """Flat variant of level raising: payloads are tuples, not tables.

    Matches map_tree(flatten, retabulate(n, k, t)) on any t valid at some
    (n, k) with 1 <= k < n.  Kept for cross-checking; retabulate is the
    primary form.
    """
    match t:
        case Bin(TipZ(y) | TipS(y), TipZ(z) | TipS(z)):
            return TipS((y, z))
        case Bin(TipZ(y) | TipS(y), u):
            rest = cd_classic(u)
            if isinstance(rest, Bin):
                raise ShapeError("right subtree did not reduce to a tip")
            return TipS((y,) + rest.payload)
        case Bin(left, TipZ(z) | TipS(z)):
            return Bin(cd_classic(left), map_tree(lambda w: (w, z), left))
        case Bin(left, right):
            return Bin(
                cd_classic(left),
                zip_with(lambda w, ws: (w,) + ws, left, cd_classic(right)),
            )
        case _:
            raise ShapeError("a bare tip has no level above it")


def check_spec_equation(k: int, xs: Seq[E]) -> bool:
    """Does level raising agree with retabulating the keys themselves?

    Checks, for the given source xs, that raising the level-k table of
    sublists yields exactly the table that maps each (k+1)-sublist ys to
    the table (resp. tuple) of its own immediate sublists.  The tuple-form
    comparison via cd_classic applies only for k >= 1.
    """
    n = len(xs)
    if not 0 <= k < n:
        raise InvalidLevel(f"need 0 <= k < {n}, got {k}")
    table = choose(k, xs)
    keys = choose(k + 1, xs)
    nested_ok = retabulate(n, k, table) == map_tree(lambda ys: choose(k, ys), keys)
    if k == 0:
        return nested_ok
    flat_ok = cd_classic(table) == map_tree(
        lambda ys: flatten(choose(k, ys)), keys
    )
    return nested_ok and flat_ok


def check_rotation(n: int, k: int) -> bool:
    """Does raising the blank (n, k) table give blank (k+1, k) payloads
    arranged in the blank (n, k+1) skeleton?"""
    if not 0 <= k < n:
        raise InvalidLevel(f"need 0 <= k < {n}, got {k}")
    expected = map_tree(lambda _: blank(k + 1, k), blank(n, k + 1))
    return retabulate(n, k, blank(n, k)) == expected


@dataclass(frozen=True)
class KeyedTable(Generic[E]):
    """A level-k table paired with its shape, entries being the sublists."""

    shape: Shape
    tree: Tree[Seq[E]]

    @classmethod
    def from_source(cls, k: int, xs: Seq[E]) -> "KeyedTable[E]":
        """Tabulate the k-sublists of xs and verify the result."""
        tree = choose(k, xs)
        shape = Shape(len(xs), k)
        if not validate_shape(tree, shape.n, shape.k):
            raise ShapeError(f"table does not validate at ({shape.n}, {shape.k})")
        entries = flatten(tree)
        wanted = {tuple(ys) for ys in _subsets(k, xs)}
        if len(entries) != shape.entries() or {tuple(e) for e in entries} != wanted:
            raise ShapeError("table entries do not enumerate the k-sublists")
        return cls(shape, tree)

    def entries(self) -> tuple[Seq[E], ...]:
        return flatten(self.tree)


def _subsets(k: int, xs: Seq[E]) -> list[tuple[E, ...]]:
    # independent of choose: position bitmasks
    n = len(xs)
    out = []
    for mask in range(1 << n):
        if mask.bit_count() == k:
            out.append(tuple(xs[i] for i in range(n) if mask >> i & 1))
    return out
