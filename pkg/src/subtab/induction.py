"""Two interchangeable drivers for induction over immediate sublists.

A problem is posed as a Solver: `e` answers the empty sequence, `g`
combines a sequence ys with the table of answers for its immediate
sublists.  `td` recurses straight down, recomputing shared sublists;
`bu` sweeps the lattice level by level so every sublist is answered
exactly once.  Both produce identical results for any solver.
"""
from __future__ import annotations

import threading
import time
from collections import Counter
from dataclasses import dataclass, field
from typing import Callable, Generic, Sequence, TypeVar

from .bintree import Bin, TipZ, Tree, is_tree, map_tree, un_tip, zip_with
from .tabulate import choose, retabulate

E = TypeVar("E")
S = TypeVar("S")


class Overflow(OverflowError):
    """A closed-form count was requested beyond its guard bound."""


@dataclass(frozen=True)
class Solver(Generic[E, S]):
    """What a problem must supply to be driven over the sublist lattice.

    e      () -> S, the answer for the empty sequence.
    g      (ys, children) -> S, where children is the table of answers
           for the immediate sublists of ys, positionally aligned with
           choose(len(ys) - 1, ys).
    """

    e: Callable[[], S]
    g: Callable[[Sequence[E], Tree[S]], S]


def solver_from_singleton_base(
    f: Callable[[E], S], g: Callable[[Sequence[E], Tree[S]], S]
) -> Solver[E, S]:
    """Adapt a problem whose base case is singletons, not the empty sequence.

    The adapted g answers singletons with f directly, so the placeholder
    stored for the empty sublist is never observed.  Empty input remains
    undefined for such problems.
    """

    def g_adapted(ys: Sequence[E], children: Tree[S]) -> S:
        if len(ys) == 1:
            return f(ys[0])
        return g(ys, children)

    return Solver(e=lambda: None, g=g_adapted)  # type: ignore[arg-type]


def td(
    solver: Solver[E, S],
    xs: Sequence[E],
    _observe: Callable[[Tree], None] | None = None,
) -> S:
    """Top-down: recurse into every immediate sublist independently.

    Shared sublists are recomputed each time they are reached, so the
    call count grows superexponentially; see td_call_count.
    """
    if len(xs) == 0:
        return solver.e()
    children = map_tree(lambda ys: td(solver, ys, _observe), choose(len(xs) - 1, xs))
    if _observe is not None:
        _observe(children)
    return solver.g(xs, children)


def bu(
    solver: Solver[E, S],
    xs: Sequence[E],
    _observe: Callable[[Tree], None] | None = None,
) -> S:
    """Bottom-up: sweep the sublist lattice one level at a time.

    Level k holds the answers for all k-sublists.  Raising level k with
    retabulate regroups those answers under each (k+1)-sublist, which is
    exactly the children table g expects, so each level is one zip.  Each
    sublist is answered once, and only two layers of tables are ever live.
    """
    n = len(xs)
    level: Tree = TipZ(solver.e())
    if _observe is not None:
        _observe(level)
    for k in range(n):
        nested = retabulate(n, k, level)
        if _observe is not None:
            _observe(nested)
        level = zip_with(solver.g, choose(k + 1, xs), nested)
        if _observe is not None:
            _observe(level)
    return un_tip(level)


_DRIVERS = {"td": td, "bu": bu}


@dataclass
class CallStats:
    """Counters collected by run_instrumented.

    peak_nesting is the deepest table-of-tables layering seen in any
    intermediate table; g_key_counts maps each sequence passed to g to
    its number of invocations.
    """

    g_calls: int = 0
    e_calls: int = 0
    peak_nesting: int = 0
    wall_ns: int = 0
    g_key_counts: Counter = field(default_factory=Counter)


def nesting_depth(t: Tree) -> int:
    """1 for a flat table, 2 for a table of tables, and so on.

    Payloads that are themselves trees count as nested tables, so solvers
    whose solution type is a tree inflate the metric.
    """
    if not is_tree(t):
        raise TypeError("not a tree")
    return _nesting_depth(t)


def _nesting_depth(t: Tree) -> int:
    if isinstance(t, Bin):
        return max(_nesting_depth(t.left), _nesting_depth(t.right))
    p = t.payload
    return 1 + (_nesting_depth(p) if is_tree(p) else 0)


def run_instrumented(
    alg: str, solver: Solver[E, S], xs: Sequence[E]
) -> tuple[S, CallStats]:
    """Run td or bu with counting wrappers around the solver callbacks.

    The result is identical to the uninstrumented run.  Counter updates
    take a lock, so a solver that fans g calls out to threads still
    counts correctly.
    """
    try:
        driver = _DRIVERS[alg]
    except KeyError:
        raise ValueError(f"unknown algorithm {alg!r}; expected 'td' or 'bu'") from None

    stats = CallStats()
    lock = threading.Lock()

    def counted_e() -> S:
        with lock:
            stats.e_calls += 1
        return solver.e()

    def counted_g(ys: Sequence[E], children: Tree[S]) -> S:
        with lock:
            stats.g_calls += 1
            stats.g_key_counts[ys] += 1
        return solver.g(ys, children)

    def observe(t: Tree) -> None:
        d = _nesting_depth(t)
        with lock:
            if d > stats.peak_nesting:
                stats.peak_nesting = d

    wrapped = Solver(e=counted_e, g=counted_g)
    start = time.perf_counter_ns()
    result = driver(wrapped, xs, _observe=observe)
    stats.wall_ns = time.perf_counter_ns() - start
    return result, stats


def td_call_count(n: int) -> int:
    """g calls a top-down run on n elements makes: T(n) = 1 + n*T(n-1), T(0) = 0."""
    _guard(n, 20)
    total = 0
    for m in range(1, n + 1):
        total = 1 + m * total
    return total


def bu_call_count(n: int) -> int:
    """g calls a bottom-up run on n elements makes: one per nonempty sublist."""
    _guard(n, 62)
    return (1 << n) - 1


def _guard(n: int, bound: int) -> None:
    if n < 0:
        raise ValueError("n must be nonnegative")
    if n > bound:
        raise Overflow(f"count is astronomically large for n > {bound}")
