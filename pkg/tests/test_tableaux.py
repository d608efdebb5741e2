from math import factorial

import pytest
from hypothesis import given, strategies as st

from fusionq.tableaux import (
    Partition, StandardTableau, adjacent_swap, contents, entry_groups, hook_tableau,
    num_standard_tableaux, parse_partition, partition_analyze, partitions,
    standard_tableaux,
)


def test_partition_validation():
    with pytest.raises(ValueError):
        Partition([1, 2])
    with pytest.raises(ValueError):
        Partition([0])
    with pytest.raises(ValueError):
        parse_partition("0")
    with pytest.raises(ValueError):
        parse_partition("a,b")
    assert parse_partition("3,3,2") == (3, 3, 2)


def test_partition_counts():
    assert [len(partitions(n)) for n in range(1, 9)] == [1, 2, 3, 5, 7, 11, 15, 22]
    assert partitions(3) == [(3,), (2, 1), (1, 1, 1)]


def test_analyze_examples():
    d = partition_analyze((3, 3, 2))
    assert (d.durfee, d.alpha, d.beta, d.hooks) == (2, (2, 1), (3, 2), (5, 3))
    d = partition_analyze((1,))
    assert (d.durfee, d.alpha, d.beta, d.hooks) == (1, (0,), (1,), (1,))
    d = partition_analyze((2, 1))
    assert (d.durfee, d.alpha, d.beta, d.hooks) == (1, (1,), (2,), (3,))


@pytest.mark.parametrize("n", range(1, 8))
def test_hook_lengths_sum_to_n(n):
    for p in partitions(n):
        assert sum(partition_analyze(p).hooks) == n


def test_hook_tableau_examples():
    assert hook_tableau((3, 3, 2)).to_lists() == [[1, 4, 5], [2, 6, 8], [3, 7]]
    assert hook_tableau((1, 1, 1)).to_lists() == [[1], [2], [3]]
    assert hook_tableau((3,)).to_lists() == [[1, 2, 3]]


@pytest.mark.parametrize("n", range(1, 8))
def test_hook_tableau_is_standard(n):
    for p in partitions(n):
        T = hook_tableau(p)
        assert StandardTableau.from_rows(T.to_lists()) == T
        assert T.shape == p


def test_contents_examples():
    assert contents(hook_tableau((3, 3, 2))) == (0, -1, -2, 1, 2, 0, -1, 1)
    assert contents(hook_tableau((3,))) == (0, 1, 2)
    assert contents(hook_tableau((1, 1))) == (0, -1)


def test_entry_groups_examples():
    T = hook_tableau((3, 3, 2))
    assert entry_groups(T, "hook") == (0, 0, 0, 0, 0, 1, 1, 1)
    for T in standard_tableaux((4,)):
        assert set(entry_groups(T, "row")) == {0}
    for T in standard_tableaux((1, 1, 1)):
        assert set(entry_groups(T, "column")) == {0}
    with pytest.raises(ValueError):
        entry_groups(T, "diagonal")


@pytest.mark.parametrize("n", range(1, 7))
def test_contents_distinct_within_each_group(n):
    for p in partitions(n):
        for T in standard_tableaux(p):
            c = contents(T)
            for mode in ("hook", "row", "column"):
                g = entry_groups(T, mode)
                for grp in set(g):
                    vals = [c[a] for a in range(n) if g[a] == grp]
                    assert len(vals) == len(set(vals))


def test_group_indices_follow_minimal_entries():
    for p in partitions(6):
        for T in standard_tableaux(p):
            for mode in ("hook", "row", "column"):
                g = entry_groups(T, mode)
                firsts = [g.index(k) for k in range(max(g) + 1)]
                assert firsts == sorted(firsts)


def test_standard_tableaux_examples():
    assert len(standard_tableaux((2, 1))) == 2
    assert len(standard_tableaux((5,))) == 1
    assert len(standard_tableaux((3, 3, 2))) == 42 == num_standard_tableaux((3, 3, 2))


@pytest.mark.parametrize("n", range(1, 7))
def test_enumeration_matches_hook_length_formula(n):
    total = 0
    for p in partitions(n):
        tabs = standard_tableaux(p)
        assert len(tabs) == num_standard_tableaux(p)
        assert len(set(tabs)) == len(tabs)
        assert [t.reading_word() for t in tabs] == sorted(t.reading_word() for t in tabs)
        total += len(tabs) ** 2
    assert total == factorial(n)


def test_adjacent_swap_examples():
    T = hook_tableau((2, 1))
    assert adjacent_swap(T, 2).to_lists() == [[1, 2], [3]]
    with pytest.raises(ValueError):
        adjacent_swap(hook_tableau((3,)), 1)
    a, b = standard_tableaux((2, 2))
    assert adjacent_swap(a, 2) == b


@pytest.mark.parametrize("n", range(1, 7))
def test_swap_graph_is_connected(n):
    for p in partitions(n):
        tabs = standard_tableaux(p)
        seen = {hook_tableau(p)}
        frontier = list(seen)
        while frontier:
            T = frontier.pop()
            for k in range(1, n):
                try:
                    U = adjacent_swap(T, k)
                except ValueError:
                    continue
                if U not in seen:
                    seen.add(U)
                    frontier.append(U)
        assert seen == set(tabs)


def test_invalid_tableaux():
    with pytest.raises(ValueError):
        StandardTableau.from_rows([[2, 1]])
    with pytest.raises(ValueError):
        StandardTableau.from_rows([[1, 3], [2, 2]])
    with pytest.raises(ValueError):
        StandardTableau.from_rows([[1, 2], [3], [4, 5]])


@given(st.lists(st.integers(1, 5), min_size=1, max_size=4))
def test_conjugate_is_an_involution(parts):
    p = Partition(sorted(parts, reverse=True))
    assert p.conjugate().conjugate() == p
    assert p.conjugate().n == p.n
