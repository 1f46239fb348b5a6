import itertools

import pytest

from binops import (
    brute_force_inverse,
    criterion_census,
    enumerate_all_ops,
    enumerate_invertible,
    h2_order,
    is_invertible,
)
from binops.errors import OrderGuardExceeded


@pytest.mark.parametrize("n, count", [(1, 1), (2, 16), (3, 19683)])
def test_all_ops_count(n, count):
    assert sum(1 for _ in enumerate_all_ops(n)) == count


def test_all_ops_lexicographic_and_unique():
    keys = [f.key() for f in enumerate_all_ops(3)]
    assert keys == sorted(keys)
    assert len(set(keys)) == len(keys)


def test_all_ops_guard():
    with pytest.raises(OrderGuardExceeded):
        next(enumerate_all_ops(4))


@pytest.mark.parametrize("n", [1, 2, 3])
def test_invertible_count(n):
    assert sum(1 for _ in enumerate_invertible(n)) == h2_order(n)


def test_invertible_order_and_content():
    tables = list(enumerate_invertible(3))
    keys = [f.key() for f in tables]
    assert keys == sorted(keys)
    assert all(is_invertible(f) for f in tables)
    assert set(tables) == {f for f in enumerate_all_ops(3) if is_invertible(f)}


def test_invertible_limit():
    assert len(list(enumerate_invertible(5, limit=10))) == 10
    first = next(enumerate_invertible(6, limit=1))
    assert first.to_lists() == [list(range(6))] * 6
    with pytest.raises(OrderGuardExceeded):
        next(enumerate_invertible(5))


def test_criterion_equivalence_n2():
    ops = list(enumerate_all_ops(2))
    by_criterion = {f for f in ops if is_invertible(f)}
    by_search = {f for f in ops if brute_force_inverse(f, restricted=False) is not None}
    assert by_criterion == by_search == set(enumerate_invertible(2))


@pytest.mark.parametrize(
    "n, exhaustive, expected",
    [
        (1, True, (1, 1, 1, 1)),
        (2, True, (16, 4, 4, 4)),
        (3, False, (19683, 216, None, 216)),
    ],
)
def test_census(n, exhaustive, expected):
    c = criterion_census(n, exhaustive)
    assert (c.total_ops, c.row_permutation_ops, c.two_sided_invertible_ops, c.formula_value) == expected
    assert c.consistent


def test_census_guards():
    with pytest.raises(OrderGuardExceeded):
        criterion_census(3, exhaustive_inverse=True)
    with pytest.raises(OrderGuardExceeded):
        criterion_census(4)


def test_streams_are_lazy():
    head = list(itertools.islice(enumerate_invertible(4), 3))
    assert [f.entries[-1] for f in head] == [(0, 1, 2, 3), (0, 1, 3, 2), (0, 2, 1, 3)]
