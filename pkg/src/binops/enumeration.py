"""Exhaustive streams of binary operations and the invertibility census."""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterator

from .core import BinaryOpTable, PointSet, brute_force_inverse, is_invertible
from .errors import OrderGuardExceeded
from .groups import h2_order

ALL_OPS_MAX_N = 3
INVERTIBLE_UNBOUNDED_MAX_N = 4
EXHAUSTIVE_INVERSE_MAX_N = 2


def enumerate_all_ops(n: int) -> Iterator[BinaryOpTable]:
    """All ``n**(n*n)`` tables in lexicographic order of their bytes."""
    if n < 1:
        raise ValueError("n must be positive")
    if n > ALL_OPS_MAX_N:
        raise OrderGuardExceeded(f"enumerating all operations needs n <= {ALL_OPS_MAX_N}, got {n}")
    pts = PointSet.of_size(n)
    rows = list(itertools.product(range(n), repeat=n))
    for entries in itertools.product(rows, repeat=n):
        yield BinaryOpTable._trusted(pts, entries)


def enumerate_invertible(n: int, limit: int | None = None) -> Iterator[BinaryOpTable]:
    """Tables whose rows are all permutations, lexicographic over ``S_n^n``.

    Without a ``limit`` this yields ``(n!)**n`` tables, so it is refused
    above n = 4.
    """
    if n < 1:
        raise ValueError("n must be positive")
    if limit is None and n > INVERTIBLE_UNBOUNDED_MAX_N:
        raise OrderGuardExceeded(
            f"unbounded invertible enumeration needs n <= {INVERTIBLE_UNBOUNDED_MAX_N}; pass a limit"
        )
    pts = PointSet.of_size(n)
    perms = itertools.permutations(range(n))
    stream = itertools.product(list(perms), repeat=n)
    if limit is not None:
        stream = itertools.islice(stream, limit)
    for entries in stream:
        yield BinaryOpTable._trusted(pts, entries)


@dataclass(frozen=True)
class CensusResult:
    n: int
    total_ops: int
    row_permutation_ops: int
    two_sided_invertible_ops: int | None
    formula_value: int

    @property
    def consistent(self) -> bool:
        ok = self.row_permutation_ops == self.formula_value
        if self.two_sided_invertible_ops is not None:
            ok = ok and self.two_sided_invertible_ops == self.row_permutation_ops
        return ok


def criterion_census(n: int, exhaustive_inverse: bool = False) -> CensusResult:
    """Count all tables, row-permutation tables and (optionally) tables with a
    two-sided inverse found by exhaustive search."""
    if n > ALL_OPS_MAX_N:
        raise OrderGuardExceeded(f"census needs n <= {ALL_OPS_MAX_N}, got {n}")
    if exhaustive_inverse and n > EXHAUSTIVE_INVERSE_MAX_N:
        raise OrderGuardExceeded(f"exhaustive inverse search needs n <= {EXHAUSTIVE_INVERSE_MAX_N}, got {n}")
    total = rowperm = 0
    two_sided = 0 if exhaustive_inverse else None
    for f in enumerate_all_ops(n):
        total += 1
        if is_invertible(f):
            rowperm += 1
        if exhaustive_inverse and brute_force_inverse(f, restricted=False) is not None:
            two_sided += 1
    return CensusResult(n, total, rowperm, two_sided, h2_order(n))
