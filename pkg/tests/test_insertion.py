from itertools import permutations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from oracles import brute_contains_pattern
from schroeder.errors import LimitError
from schroeder.insertion import (
    avoids,
    classify_shape,
    contains_pattern,
    count_standard_young,
    enumerate_av,
    has_hook_decomposition,
    is_k_rooted_shuffle,
    is_shuffle,
    is_standard_young,
    parse_permutation,
    pattern_of,
    rs_insert,
    sch_insert,
    sch_shape,
    single_column_predicate,
    single_row_predicate,
)
from schroeder.tableaux import is_standard


def test_parse_permutation():
    assert parse_permutation("465193287") == (4, 6, 5, 1, 9, 3, 2, 8, 7)
    assert parse_permutation("10,2,1,3,4,5,6,7,8,9") == (10, 2, 1, 3, 4, 5, 6, 7, 8, 9)
    with pytest.raises(ValueError):
        parse_permutation("122")


def test_worked_example():
    p_tab, q_tab = sch_insert(parse_permutation("465193287"))
    assert p_tab.rows == ((1, 2, 7, 8), (3, 4, 9), (5, 6))
    assert q_tab.rows == ((1, 2, 5, 8), (3, 4, 9), (6, 7))
    assert p_tab.shape == q_tab.shape == (4, 3, 2)


def test_small_insertions():
    p_tab, q_tab = sch_insert((1,))
    assert p_tab.rows == ((1,),) and q_tab.rows == ((1,),)
    p_tab, q_tab = sch_insert((2, 1))
    assert p_tab.rows == ((1, 2),) and q_tab.rows == ((1, 2),)


def test_rs_examples():
    p_rows, q_rows = rs_insert((1,))
    assert p_rows == ((1,),) and q_rows == ((1,),)
    p_rows, q_rows = rs_insert((2, 3, 1))
    assert p_rows == ((1, 3), (2,))
    assert q_rows == ((1, 2), (3,))


def test_rs_outputs_standard_young():
    for n in range(1, 7):
        for perm in permutations(range(1, n + 1)):
            p_rows, q_rows = rs_insert(perm)
            assert is_standard_young(p_rows) and is_standard_young(q_rows)
    assert is_standard_young(((1, 3), (2, 4)))
    assert not is_standard_young(((1, 4), (2, 3)))
    assert not is_standard_young(((2, 1),))
    assert not is_standard_young(((1,), (2, 3)))


def test_rs_identity_small():
    from schroeder.partitions import partitions_of

    for n in range(1, 8):
        counts = {}
        for perm in permutations(range(1, n + 1)):
            p_rows, q_rows = rs_insert(perm)
            shape = tuple(len(r) for r in p_rows)
            assert shape == tuple(len(r) for r in q_rows)
            counts[shape] = counts.get(shape, 0) + 1
        total = 0
        for shape in partitions_of(n):
            f = count_standard_young(shape)
            assert counts.get(shape, 0) == f * f
            total += f * f
        fact = 1
        for i in range(2, n + 1):
            fact *= i
        assert total == fact


def test_rs_injective_small():
    for n in range(1, 8):
        seen = set()
        for perm in permutations(range(1, n + 1)):
            seen.add(rs_insert(perm))
        fact = 1
        for i in range(2, n + 1):
            fact *= i
        assert len(seen) == fact


def test_insertion_outputs_standard_small():
    for n in range(1, 7):
        for perm in permutations(range(1, n + 1)):
            p_tab, q_tab = sch_insert(perm)
            assert p_tab.shape == q_tab.shape
            assert is_standard(p_tab) and is_standard(q_tab)


def test_contains_pattern_examples():
    assert contains_pattern((4, 6, 5, 1, 9, 3, 2, 8, 7), (1, 2, 3))
    assert not contains_pattern((2, 1), (1, 2, 3))
    assert not contains_pattern((3, 2, 1), (1, 2, 3))
    assert avoids((3, 2, 1), (1, 2, 3), (2, 1, 3))


@settings(max_examples=150)
@given(st.permutations(list(range(1, 8))), st.permutations(list(range(1, 4))))
def test_contains_pattern_matches_bruteforce(t, s):
    assert contains_pattern(tuple(t), tuple(s)) == brute_contains_pattern(t, s)


def test_enumerate_av():
    assert enumerate_av(1, [(1, 2, 3), (2, 1, 3)]) == 1
    assert enumerate_av(4, [(1, 2, 3), (2, 1, 3)]) == 8
    assert enumerate_av(5, [(1, 2, 3), (2, 1, 3)]) == 16
    with pytest.raises(LimitError):
        enumerate_av(10, [(1, 2, 3)])


def test_single_row_and_column_sets_small():
    for n in range(1, 8):
        rows = cols = 0
        for perm in permutations(range(1, n + 1)):
            shape = sch_shape(perm)
            ins_row = len(shape) == 1
            ins_col = shape[0] <= 2
            assert ins_row == single_row_predicate(perm), perm
            assert ins_col == single_column_predicate(perm), perm
            rows += ins_row
            cols += ins_col
        assert rows == 2 ** (n // 2)
        assert cols == 2 ** (n - 1)


def test_classify_examples():
    assert classify_shape((2, 1, 4, 3)) == "single_row"
    assert classify_shape((3, 2, 1)) == "single_column"
    assert classify_shape((1, 2)) == "single_row"
    assert classify_shape((2, 3, 1)) == "single_column"
    assert classify_shape((1, 3, 2, 4)) == "hook"
    assert classify_shape((1, 4, 3, 2, 5, 7, 6)) == "other"


def test_shuffle_examples():
    assert is_shuffle((4, 7, 9, 2, 1, 8, 5, 3, 6), (2, 5, 1, 4, 3), (4, 1, 3, 2))
    assert is_shuffle((1, 2), (1, 2), ())
    assert not is_shuffle((1, 2, 3), (2, 1), (1,))
    with pytest.raises(ValueError):
        is_shuffle((1, 2, 3), (1, 2), (2, 1, 3))


def test_rooted_shuffle_examples():
    assert is_k_rooted_shuffle(
        (3, 7, 5, 6, 1, 8, 2, 4), (2, 5, 3, 4, 6, 1), (2, 5, 4, 1, 3), 3
    )
    assert is_k_rooted_shuffle((1, 2), (1, 2), (1, 2), 2)
    with pytest.raises(ValueError):
        is_k_rooted_shuffle((1, 2), (1, 2), (2, 1), 2)  # prefixes not isomorphic
    with pytest.raises(ValueError):
        is_k_rooted_shuffle((1, 2), (1, 2), (1, 2), 3)


def test_pattern_of():
    assert pattern_of((4, 9, 2, 8, 6)) == (2, 5, 1, 4, 3)
    assert pattern_of(()) == ()


def test_hook_decomposition_small():
    # exact at n <= 3; from n = 4 on, hook-shaped permutations without a
    # decomposition exist, so only the decomposition-implies-hook direction holds
    for n in range(1, 4):
        for perm in permutations(range(1, n + 1)):
            shape = sch_shape(perm)
            shape_hook = all(x <= 2 for x in shape[1:]) and sum(shape) >= 2
            assert has_hook_decomposition(perm) == shape_hook
    assert sch_shape((1, 4, 2, 3)) == (3, 1)
    assert not has_hook_decomposition((1, 4, 2, 3))
    # the decomposition always implies a hook shape
    for n in range(2, 7):
        for perm in permutations(range(1, n + 1)):
            if has_hook_decomposition(perm):
                shape = sch_shape(perm)
                assert all(x <= 2 for x in shape[1:]), perm
