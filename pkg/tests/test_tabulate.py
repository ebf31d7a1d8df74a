"""Sublist tables, level raising and the laws tying them together."""
from __future__ import annotations

from collections import Counter
from math import comb

import pytest
from hypothesis import given

from conftest import bitmask_sublists, shaped_trees
from subtab import (
    Bin,
    EmptyInput,
    InvalidLevel,
    KeyedTable,
    Shape,
    ShapeError,
    TipS,
    TipZ,
    UNIT,
    blank,
    cd_classic,
    check_rotation,
    check_spec_equation,
    choose,
    cons_table,
    flatten,
    immediate_sublists,
    map_tree,
    retabulate,
    size,
    validate_shape,
)

# hand-expanded from the shape rules, payload by payload
CHOOSE_1_ABC = Bin(Bin(TipS("c"), TipZ("b")), TipZ("a"))
CHOOSE_2_ABC = Bin(TipS("bc"), Bin(TipS("ac"), TipZ("ab")))
CHOOSE_2_ABCD = Bin(
    Bin(TipS("cd"), Bin(TipS("bd"), TipZ("bc"))),
    Bin(Bin(TipS("ad"), TipZ("ac")), TipZ("ab")),
)


def test_choose_frozen_examples():
    assert choose(0, "ab") == TipZ("")
    assert choose(1, "abc") == CHOOSE_1_ABC
    assert choose(2, "abc") == CHOOSE_2_ABC
    assert choose(2, "abcd") == CHOOSE_2_ABCD
    assert choose(3, "abc") == TipS("abc")


def test_choose_keeps_the_sequence_type():
    assert flatten(choose(2, (1, 2, 3))) == ((2, 3), (1, 3), (1, 2))
    assert flatten(choose(1, "ab")) == ("b", "a")


def test_choose_orders_head_omitting_sublists_first():
    assert flatten(choose(2, "abcd")) == ("cd", "bd", "bc", "ad", "ac", "ab")
    assert flatten(choose(1, "abc")) == ("c", "b", "a")


def test_choose_is_complete_against_bitmask_enumeration():
    sources = ["abcdefgh"[:n] for n in range(9)] + ["aab", "aaaa"]
    for xs in sources:
        for k in range(len(xs) + 1):
            t = choose(k, xs)
            assert validate_shape(t, len(xs), k)
            assert size(t) == comb(len(xs), k)
            got = Counter(tuple(ys) for ys in flatten(t))
            assert got == Counter(bitmask_sublists(k, xs))


def test_choose_rejects_impossible_levels():
    with pytest.raises(InvalidLevel):
        choose(3, "ab")
    with pytest.raises(InvalidLevel):
        choose(-1, "ab")


def test_immediate_sublists():
    assert immediate_sublists("abc") == ("bc", "ac", "ab")
    assert immediate_sublists("ab") == ("b", "a")
    assert immediate_sublists("a") == ("",)
    assert immediate_sublists((1, 2)) == ((2,), (1,))
    with pytest.raises(EmptyInput):
        immediate_sublists("")


def test_blank_shapes_and_sizes():
    assert blank(0, 0) == TipZ(UNIT)
    assert blank(1, 1) == TipS(UNIT)
    assert blank(2, 1) == Bin(TipS(UNIT), TipZ(UNIT))
    for n in range(13):
        for k in range(n + 1):
            t = blank(n, k)
            assert validate_shape(t, n, k)
            assert size(t) == comb(n, k)
    with pytest.raises(InvalidLevel):
        blank(2, 3)
    with pytest.raises(InvalidLevel):
        blank(-1, 0)


def test_cons_table_grows_the_shape_by_one():
    t = choose(1, "ab")  # valid at (2, 1)
    grown = cons_table("ab", t)
    assert grown == Bin(TipS("ab"), t)
    assert validate_shape(grown, 3, 2)


RETAB_3_1_ABC = Bin(
    TipS(Bin(TipS("c"), TipZ("b"))),
    Bin(TipS(Bin(TipS("c"), TipZ("a"))), TipZ(Bin(TipS("b"), TipZ("a")))),
)


def test_retabulate_frozen_example():
    assert retabulate(3, 1, CHOOSE_1_ABC) == RETAB_3_1_ABC


def test_retabulate_empty_sublist_cases():
    assert retabulate(1, 0, TipZ("x")) == TipS(TipZ("x"))
    assert retabulate(2, 0, TipZ("x")) == Bin(TipS(TipZ("x")), TipZ(TipZ("x")))
    assert retabulate(3, 0, TipZ("x")) == Bin(
        Bin(TipS(TipZ("x")), TipZ(TipZ("x"))), TipZ(TipZ("x"))
    )


def test_retabulate_matches_retabulating_the_keys():
    # raising the level-k table of sublists must give, under each
    # (k+1)-sublist, the table of that sublist's own immediate sublists
    for xs in ["abcdefg"[:n] for n in range(1, 8)]:
        n = len(xs)
        for k in range(n):
            got = retabulate(n, k, choose(k, xs))
            want = map_tree(lambda ys: choose(k, ys), choose(k + 1, xs))
            assert got == want


def test_retabulate_output_shape_and_payload_shapes():
    for n in range(1, 8):
        for k in range(n):
            out = retabulate(n, k, blank(n, k))
            assert validate_shape(out, n, k + 1)
            for inner in flatten(out):
                assert validate_shape(inner, k + 1, k)


def test_retabulate_rejects_bad_levels_and_shapes():
    with pytest.raises(InvalidLevel):
        retabulate(3, 3, blank(3, 3))
    with pytest.raises(InvalidLevel):
        retabulate(3, -1, blank(3, 0))
    with pytest.raises(ShapeError):
        retabulate(3, 1, TipZ("x"))
    with pytest.raises(ShapeError):
        retabulate(4, 2, blank(4, 1))


def test_retabulate_check_flag_skips_validation():
    t = blank(4, 2)
    assert retabulate(4, 2, t, check=False) == retabulate(4, 2, t)


@given(shaped_trees(max_n=7))
def test_retabulate_naturality(case):
    n, k, t = case
    if k == n:
        return

    def f(v: int) -> int:
        return 5 * v - 2

    assert retabulate(n, k, map_tree(f, t)) == map_tree(
        lambda inner: map_tree(f, inner), retabulate(n, k, t)
    )


CD_1_ABC = Bin(TipS(("c", "b")), Bin(TipS(("c", "a")), TipZ(("b", "a"))))


def test_cd_classic_frozen_example():
    assert cd_classic(CHOOSE_1_ABC) == CD_1_ABC


def test_cd_classic_matches_flattened_retabulate():
    for xs in ["abcdefg"[:n] for n in range(2, 8)]:
        n = len(xs)
        for k in range(1, n):
            t = choose(k, xs)
            assert cd_classic(t) == map_tree(flatten, retabulate(n, k, t))


def test_cd_classic_rejects_bare_tips():
    with pytest.raises(ShapeError):
        cd_classic(TipZ("x"))
    with pytest.raises(ShapeError):
        cd_classic(TipS("x"))


def test_level_raising_equation_sweep():
    for n in range(1, 8):
        for k in range(n):
            assert check_spec_equation(k, "abcdefg"[:n])
    with pytest.raises(InvalidLevel):
        check_spec_equation(3, "abc")
    with pytest.raises(InvalidLevel):
        check_spec_equation(-1, "abc")


def test_level_raising_equation_holds_with_duplicates():
    assert check_spec_equation(1, "aba")
    assert check_spec_equation(2, (7, 7, 7, 7))


def test_rotation_sweep():
    for n in range(1, 9):
        for k in range(n):
            assert check_rotation(n, k)
    with pytest.raises(InvalidLevel):
        check_rotation(3, 3)


def test_shape_helpers():
    assert Shape(4, 2).is_valid() and Shape(4, 2).entries() == 6
    assert not Shape(2, 3).is_valid()
    assert Shape(0, 0).entries() == 1


def test_keyed_table_from_source():
    table = KeyedTable.from_source(2, "abcd")
    assert table.shape == Shape(4, 2)
    assert table.tree == CHOOSE_2_ABCD
    assert table.entries() == ("cd", "bd", "bc", "ad", "ac", "ab")
