"""Ready-made solvers, each with an independent oracle and input generator."""
from __future__ import annotations

import itertools
import struct
from dataclasses import dataclass
from hashlib import blake2b
from random import Random
from string import ascii_lowercase
from typing import Any, Callable, Sequence

from .bintree import Tree, flatten
from .induction import Overflow, Solver, td

Seq = Sequence


class SizeLimit(ValueError):
    """Input is larger than the operation's documented bound."""


@dataclass(frozen=True)
class Problem:
    """A solver bundled with what is needed to test and benchmark it.

    oracle computes the expected solution by an independent route and is
    trusted up to oracle_max_n elements; generator(size, seed) produces a
    deterministic pseudo-random input of the given size.
    """

    name: str
    domain: str
    solver: Solver
    oracle: Callable[[Seq], Any]
    generator: Callable[[int, int], tuple]
    oracle_max_n: int


def mix64(data: bytes) -> int:
    """64-bit digest of a byte string."""
    return int.from_bytes(blake2b(data, digest_size=8).digest(), "little")


def _int_inputs(bound: int) -> Callable[[int, int], tuple]:
    def gen(size: int, seed: int) -> tuple:
        rng = Random(seed)
        return tuple(rng.randrange(bound) for _ in range(size))

    return gen


def _letter_inputs(size: int, seed: int) -> tuple:
    rng = Random(seed)
    return tuple(rng.choice(ascii_lowercase) for _ in range(size))


DIGEST_SEED = 0x9E3779B97F4A7C15  # answer for the empty sequence


def _digest_g(ys: Seq, children: Tree[int]) -> int:
    """Mix the sequence with its children's digests, order-sensitively."""
    kids = flatten(children)
    data = repr(tuple(ys)).encode() + struct.pack(f"<{len(kids)}Q", *kids)
    return mix64(data)


def digest_problem() -> Problem:
    """Order-sensitive structural digest.

    The solution encodes the whole recursion tree, so the two drivers
    agree only if they feed g the same children tables in the same order.
    The oracle is the top-down driver itself: the property of interest is
    cross-driver agreement, not an external value.
    """
    solver = Solver(e=lambda: DIGEST_SEED, g=_digest_g)
    return Problem(
        name="digest",
        domain="arbitrary tokens with a stable repr",
        solver=solver,
        oracle=lambda xs: td(solver, xs),
        generator=_int_inputs(256),
        oracle_max_n=8,
    )


def subtree_count(m: int) -> int:
    """Closed form for the subtree-count solver: s(m) = 1 + m*s(m-1), s(0) = 1."""
    if m < 0:
        raise ValueError("m must be nonnegative")
    if m > 20:
        raise Overflow("count is astronomically large for m > 20")
    total = 1
    for j in range(1, m + 1):
        total = 1 + j * total
    return total


def _subtree_count_g(ys: Seq, children: Tree[int]) -> int:
    if len(ys) > 20:
        raise Overflow("subtree count overflows its guard for more than 20 elements")
    return 1 + sum(flatten(children))


def subtree_count_problem() -> Problem:
    """Count the nodes of the full recursion tree; depends only on length."""
    return Problem(
        name="subtree-count",
        domain="arbitrary tokens, at most 20 of them",
        solver=Solver(e=lambda: 1, g=_subtree_count_g),
        oracle=lambda xs: subtree_count(len(xs)),
        generator=_letter_inputs,
        oracle_max_n=20,
    )


_STEPS: dict[str, Callable[[Seq], Any]] = {"sum": sum, "max": max}


def min_removal_problem(cost: str) -> Problem:
    """Cheapest order to delete elements one at a time.

    Deleting from the current sequence ys costs cost(ys), charged before
    the element is removed; the empty sequence costs nothing.  cost is
    'sum' or 'max' over the current elements.
    """
    step = _step_fn(cost)

    def g(ys: Seq, children: Tree) -> Any:
        return step(ys) + min(flatten(children))

    return Problem(
        name=f"min-removal-{cost}",
        domain="numbers",
        solver=Solver(e=lambda: 0, g=g),
        oracle=lambda xs: brute_force_removal_oracle(cost, xs),
        generator=_int_inputs(50),
        oracle_max_n=8,
    )


def brute_force_removal_oracle(cost: str, xs: Seq) -> Any:
    """Exhaustive minimum over all len(xs)! removal orders.

    Deliberately ignorant of the lattice structure; usable up to 8
    elements, beyond which it raises SizeLimit.
    """
    step = _step_fn(cost)
    n = len(xs)
    if n > 8:
        raise SizeLimit(f"brute force is limited to 8 elements, got {n}")
    if n == 0:
        return 0
    best = None
    for order in itertools.permutations(range(n)):
        removed = [False] * n
        total = 0
        for i in order:
            total += step([x for j, x in enumerate(xs) if not removed[j]])
            removed[i] = True
        if best is None or total < best:
            best = total
    return best


def _step_fn(cost: str) -> Callable[[Seq], Any]:
    try:
        return _STEPS[cost]
    except KeyError:
        raise ValueError(f"unknown cost kind {cost!r}; expected 'sum' or 'max'") from None


PROBLEMS: dict[str, Callable[[], Problem]] = {
    "digest": digest_problem,
    "subtree-count": subtree_count_problem,
    "min-removal-sum": lambda: min_removal_problem("sum"),
    "min-removal-max": lambda: min_removal_problem("max"),
}


def get_problem(name: str) -> Problem:
    try:
        return PROBLEMS[name]()
    except KeyError:
        raise ValueError(f"unknown problem {name!r}") from None
