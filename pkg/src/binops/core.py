"""Finite binary operations and their slice-wise algebra.

A binary operation on an ``n``-point set is stored as an ``n x n`` table with
``entries[t][x] = f(t, x)``.  The first index is the parameter of the slice
``f_t = f(t, .)``, so a table is exactly the family of its rows.  Composition
is slice-wise with a shared parameter::

    (f o g)(t, x) = f(t, g(t, x))

and the identity is ``e(t, x) = x``.  A table is invertible under this
composition exactly when each row is a permutation.

All algebra runs on integer indices; labels only matter for I/O.
"""

from __future__ import annotations

import functools
import itertools
import operator
from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import (
    IndexOutOfRange,
    NotInvertible,
    OutOfRangeEntry,
    PointSetMismatch,
    SearchSpaceTooLarge,
    ShapeMismatch,
    DuplicateLabel,
)

Row = tuple[int, ...]
Entries = tuple[Row, ...]


@dataclass(frozen=True)
class PointSet:
    size: int
    labels: tuple[str, ...]

    def __post_init__(self):
        if self.size < 1:
            raise ShapeMismatch(f"point set must be non-empty, got size {self.size}")
        if len(self.labels) != self.size:
            raise ShapeMismatch(f"{len(self.labels)} labels for {self.size} points")
        seen = set()
        for label in self.labels:
            if label in seen:
                raise DuplicateLabel(f"duplicate label {label!r}")
            seen.add(label)

    @classmethod
    def of_size(cls, n: int) -> PointSet:
        return _default_points(n)

    @classmethod
    def from_labels(cls, labels: Iterable[str]) -> PointSet:
        labels = tuple(labels)
        return cls(len(labels), labels)

    def __len__(self):
        return self.size


@functools.lru_cache(maxsize=64)
def _default_points(n: int) -> PointSet:
    return PointSet(n, tuple(str(i) for i in range(n)))


def _as_points(points: PointSet | int) -> PointSet:
    return points if isinstance(points, PointSet) else PointSet.of_size(points)


@dataclass(frozen=True)
class EndoMap:
    """A self-map of ``{0..n-1}``, not necessarily bijective."""

    images: tuple[int, ...]

    def __post_init__(self):
        n = len(self.images)
        for x in self.images:
            if not 0 <= x < n:
                raise OutOfRangeEntry(f"image {x} outside [0, {n})")

    @property
    def n(self) -> int:
        return len(self.images)

    def __call__(self, x: int) -> int:
        return self.images[x]

    def compose(self, other: EndoMap) -> EndoMap:
        """``self o other``; ``other`` is applied first."""
        if other.n != self.n:
            raise ShapeMismatch(f"cannot compose maps of sizes {self.n} and {other.n}")
        return EndoMap(tuple(self.images[y] for y in other.images))

    def is_bijective(self) -> bool:
        return len(set(self.images)) == self.n

    def to_permutation(self) -> Permutation:
        if not self.is_bijective():
            raise NotInvertible(f"map {list(self.images)} is not a bijection")
        return Permutation(self.images)


@dataclass(frozen=True)
class Permutation:
    images: tuple[int, ...]

    def __post_init__(self):
        if sorted(self.images) != list(range(len(self.images))):
            raise NotInvertible(f"{list(self.images)} is not a permutation")

    @classmethod
    def identity(cls, n: int) -> Permutation:
        return cls(tuple(range(n)))

    @property
    def n(self) -> int:
        return len(self.images)

    def __call__(self, x: int) -> int:
        return self.images[x]

    def compose(self, other: Permutation) -> Permutation:
        """``(self o other)(x) = self(other(x))``."""
        if other.n != self.n:
            raise ShapeMismatch(f"cannot compose permutations of sizes {self.n} and {other.n}")
        return Permutation(tuple(self.images[y] for y in other.images))

    def inverse(self) -> Permutation:
        inv = [0] * self.n
        for x, y in enumerate(self.images):
            inv[y] = x
        return Permutation(tuple(inv))

    def order(self) -> int:
        k, p = 1, self
        ident = Permutation.identity(self.n)
        while p != ident:
            p = p.compose(self)
            k += 1
        return k


def all_permutations(n: int) -> list[Permutation]:
    """All permutations of ``{0..n-1}`` in lexicographic image order."""
    return [Permutation(p) for p in itertools.permutations(range(n))]


@dataclass(frozen=True)
class BinaryOpTable:
    points: PointSet
    entries: Entries

    def __post_init__(self):
        n = self.points.size
        if len(self.entries) != n or any(len(row) != n for row in self.entries):
            raise ShapeMismatch(f"table is not {n}x{n}")
        for t, row in enumerate(self.entries):
            for x, v in enumerate(row):
                if not (isinstance(v, int) and 0 <= v < n):
                    raise OutOfRangeEntry(f"entry f({t},{x}) = {v!r} outside [0, {n})")

    @classmethod
    def _trusted(cls, points: PointSet, entries: Entries) -> BinaryOpTable:
        # skips validation; callers guarantee the invariants
        obj = object.__new__(cls)
        object.__setattr__(obj, "points", points)
        object.__setattr__(obj, "entries", entries)
        return obj

    @property
    def n(self) -> int:
        return self.points.size

    def __call__(self, t: int, x: int) -> int:
        return self.entries[t][x]

    def key(self) -> bytes:
        """Canonical sort key: the row-major table bytes."""
        return bytes(v for row in self.entries for v in row)

    def __lt__(self, other: BinaryOpTable) -> bool:
        return (self.n, self.entries) < (other.n, other.entries)

    def to_lists(self) -> list[list[int]]:
        return [list(row) for row in self.entries]


def make_binop(points: PointSet | int, entries: Sequence[Sequence[int]]) -> BinaryOpTable:
    """Validated constructor; ``points`` may be a bare size."""
    pts = _as_points(points)
    try:
        rows = tuple(tuple(operator.index(v) for v in row) for row in entries)
    except TypeError:
        raise ShapeMismatch("entries must be a sequence of rows") from None
    return BinaryOpTable(pts, rows)


def identity_op(points: PointSet | int) -> BinaryOpTable:
    pts = _as_points(points)
    row = tuple(range(pts.size))
    return BinaryOpTable._trusted(pts, (row,) * pts.size)


def _check_same_points(f: BinaryOpTable, g: BinaryOpTable):
    if f.points != g.points:
        raise PointSetMismatch(f"point sets differ: {f.points.labels} vs {g.points.labels}")


def compose(f: BinaryOpTable, g: BinaryOpTable) -> BinaryOpTable:
    """``(f o g)(t, x) = f(t, g(t, x))``."""
    _check_same_points(f, g)
    entries = tuple(
        tuple(frow[y] for y in grow) for frow, grow in zip(f.entries, g.entries)
    )
    return BinaryOpTable._trusted(f.points, entries)


def slice_at(f: BinaryOpTable, t: int) -> EndoMap:
    """The unary map ``x -> f(t, x)``."""
    if not 0 <= t < f.n:
        raise IndexOutOfRange(f"slice parameter {t} outside [0, {f.n})")
    return EndoMap(f.entries[t])


def slices(f: BinaryOpTable) -> list[EndoMap]:
    return [EndoMap(row) for row in f.entries]


def from_slices(maps: Sequence[EndoMap | Permutation], points: PointSet | None = None) -> BinaryOpTable:
    n = len(maps)
    if n == 0:
        raise ShapeMismatch("need at least one slice")
    if any(m.n != n for m in maps):
        raise ShapeMismatch(f"every slice must have size {n}")
    pts = points if points is not None else PointSet.of_size(n)
    if pts.size != n:
        raise ShapeMismatch(f"{n} slices for a {pts.size}-point set")
    return BinaryOpTable._trusted(pts, tuple(m.images for m in maps))


def is_invertible(f: BinaryOpTable) -> bool:
    n = f.n
    return all(len(set(row)) == n for row in f.entries)


def non_bijective_slice(f: BinaryOpTable) -> int | None:
    """First parameter ``t`` whose slice is not a bijection, if any."""
    n = f.n
    for t, row in enumerate(f.entries):
        if len(set(row)) != n:
            return t
    return None


def invert(f: BinaryOpTable) -> BinaryOpTable:
    """Slice-wise inverse ``f^-1(t, .) = (f_t)^-1``."""
    n = f.n
    rows = []
    for t, row in enumerate(f.entries):
        inv = [-1] * n
        for x, y in enumerate(row):
            inv[y] = x
        if -1 in inv:
            raise NotInvertible(f"slice at {f.points.labels[t]!r} is not a bijection")
        rows.append(tuple(inv))
    return BinaryOpTable._trusted(f.points, tuple(rows))


def embed_unary(p: Permutation, points: PointSet | None = None) -> BinaryOpTable:
    """The operation ``(t, x) -> p(x)`` that ignores its parameter."""
    pts = points if points is not None else PointSet.of_size(p.n)
    if pts.size != p.n:
        raise ShapeMismatch(f"permutation of size {p.n} on a {pts.size}-point set")
    return BinaryOpTable._trusted(pts, (p.images,) * p.n)


FULL_SEARCH_MAX_N = 2
ROW_PERMUTATION_SEARCH_MAX_N = 3


def brute_force_inverse(f: BinaryOpTable, restricted: bool | None = None) -> BinaryOpTable | None:
    """Search for a two-sided inverse by trying candidates.

    With ``restricted=False`` every one of the ``n**(n*n)`` tables is tried
    (``n <= 2``); with ``restricted=True`` only tables whose rows are
    permutations (``n <= 3``).  The default picks the full search when it is
    allowed.  Returns the first candidate ``g`` in lexicographic order with
    ``f o g = g o f = e``, or ``None``.
    """
    n = f.n
    if restricted is None:
        restricted = n > FULL_SEARCH_MAX_N
    if not restricted and n > FULL_SEARCH_MAX_N:
        raise SearchSpaceTooLarge(f"full inverse search needs n <= {FULL_SEARCH_MAX_N}, got {n}")
    if restricted and n > ROW_PERMUTATION_SEARCH_MAX_N:
        raise SearchSpaceTooLarge(
            f"row-permutation inverse search needs n <= {ROW_PERMUTATION_SEARCH_MAX_N}, got {n}"
        )

    e = identity_op(f.points)
    if restricted:
        rows = list(itertools.permutations(range(n)))
        candidates = itertools.product(rows, repeat=n)
    else:
        cells = itertools.product(range(n), repeat=n * n)
        candidates = (tuple(tuple(c[i * n:(i + 1) * n]) for i in range(n)) for c in cells)
    for entries in candidates:
        g = BinaryOpTable._trusted(f.points, tuple(entries))
        if compose(f, g) == e and compose(g, f) == e:
            return g
    return None
