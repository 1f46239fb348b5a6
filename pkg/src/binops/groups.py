"""Finite groups as validated multiplication tables.

Also holds the function-family group (maps ``X -> S_n`` under pointwise
composition), the bijection ``p`` between it and the invertible binary
operations, subgroup closure, isomorphism search and small-group naming.
"""

from __future__ import annotations

import itertools
import math
from collections import Counter, deque
from dataclasses import dataclass, field
from typing import Any, Callable, Hashable, Iterable, Sequence

import numpy as np

from . import guards
from .core import (
    BinaryOpTable,
    Permutation,
    PointSet,
    all_permutations,
    compose,
    identity_op,
    invert,
    is_invertible,
    non_bijective_slice,
)
from .errors import (
    ClosureGuardExceeded,
    MissingInverse,
    NoIdentity,
    NotAssociative,
    NotInvertible,
    NotLatinSquare,
    OrderGuardExceeded,
    OutOfRangeEntry,
    PointSetMismatch,
    ShapeMismatch,
    DuplicateLabel,
)


@dataclass(frozen=True)
class FiniteGroup:
    """A group on ``{0..m-1}`` given by ``table[i][j] = i*j``.

    ``elements`` optionally carries the concrete objects the indices stand
    for (permutations, function families, binary operations); it takes no
    part in equality.
    """

    labels: tuple[str, ...]
    table: tuple[tuple[int, ...], ...]
    identity: int
    inverses: tuple[int, ...]
    elements: tuple[Any, ...] | None = field(default=None, compare=False, repr=False)

    @property
    def order(self) -> int:
        return len(self.labels)

    def mul(self, a: int, b: int) -> int:
        return self.table[a][b]

    def is_abelian(self) -> bool:
        m = self.order
        return all(self.table[i][j] == self.table[j][i] for i in range(m) for j in range(i + 1, m))

    def element_order(self, a: int) -> int:
        k, x = 1, a
        while x != self.identity:
            x = self.table[x][a]
            k += 1
        return k

    def element_orders(self) -> list[int]:
        return [self.element_order(a) for a in range(self.order)]

    def order_profile(self) -> tuple[tuple[int, int], ...]:
        """Element-order multiset as sorted ``(order, count)`` pairs."""
        return tuple(sorted(Counter(self.element_orders()).items()))

    def index(self, label: str) -> int:
        return self.labels.index(label)


def _first_associativity_failure(arr: np.ndarray) -> tuple[int, int, int] | None:
    # (i*j)*k vs i*(j*k), one i-slab at a time to bound memory
    right_all = arr[:, arr]  # right_all[i, j, k] = i*(j*k)
    for i in range(arr.shape[0]):
        left = arr[arr[i]]  # left[j, k] = (i*j)*k
        bad = np.argwhere(left != right_all[i])
        if bad.size:
            j, k = bad[0]
            return i, int(j), int(k)
    return None


def validate_group(
    labels: Sequence[str],
    table: Sequence[Sequence[int]],
    elements: Sequence[Any] | None = None,
) -> FiniteGroup:
    """Check the group axioms and return the group.

    Checks run in the order: shape, Latin square, associativity, identity,
    inverses.  An associative Latin square is already a group, so the last two
    cannot fail once the others pass; they remain as explicit checks.
    """
    labels = tuple(labels)
    m = len(labels)
    if m == 0:
        raise ShapeMismatch("a group needs at least one element")
    if len(set(labels)) != m:
        raise DuplicateLabel("duplicate element label")
    rows = tuple(tuple(int(v) for v in row) for row in table)
    if len(rows) != m or any(len(r) != m for r in rows):
        raise ShapeMismatch(f"table is not {m}x{m}")
    for i, row in enumerate(rows):
        for j, v in enumerate(row):
            if not 0 <= v < m:
                raise OutOfRangeEntry(f"entry {labels[i]}*{labels[j]} = {v} outside [0, {m})")

    full = set(range(m))
    for i, row in enumerate(rows):
        if set(row) != full:
            raise NotLatinSquare(f"row {labels[i]!r} repeats a value", (i,))
    for j in range(m):
        if {rows[i][j] for i in range(m)} != full:
            raise NotLatinSquare(f"column {labels[j]!r} repeats a value", (j,))

    witness = _first_associativity_failure(np.array(rows, dtype=np.int32))
    if witness is not None:
        i, j, k = witness
        raise NotAssociative(
            f"({labels[i]}*{labels[j]})*{labels[k]} != {labels[i]}*({labels[j]}*{labels[k]})",
            witness,
        )

    identity = next(
        (e for e in range(m) if all(rows[e][j] == j == rows[j][e] for j in range(m))), None
    )
    if identity is None:
        raise NoIdentity("no two-sided identity", ())

    inverses = []
    for i in range(m):
        inv = next((j for j in range(m) if rows[i][j] == identity == rows[j][i]), None)
        if inv is None:
            raise MissingInverse(f"{labels[i]!r} has no two-sided inverse", (i,))
        inverses.append(inv)

    return FiniteGroup(labels, rows, identity, tuple(inverses), None if elements is None else tuple(elements))


def group_from_elements(
    elements: Sequence[Hashable],
    mul: Callable[[Any, Any], Hashable],
    labels: Sequence[str] | None = None,
) -> FiniteGroup:
    """Build the multiplication table of ``elements`` under ``mul``."""
    elements = list(elements)
    index = {x: i for i, x in enumerate(elements)}
    if len(index) != len(elements):
        raise ValueError("elements must be distinct")
    try:
        table = [[index[mul(a, b)] for b in elements] for a in elements]
    except KeyError:
        raise ValueError("elements are not closed under the product") from None
    if labels is None:
        labels = [str(i) for i in range(len(elements))]
    return validate_group(labels, table, elements)


def relabel(G: FiniteGroup, perm: Sequence[int]) -> FiniteGroup:
    """The same group with old element ``i`` renamed to index ``perm[i]``."""
    m = G.order
    inv = [0] * m
    for i, p in enumerate(perm):
        inv[p] = i
    labels = [G.labels[inv[a]] for a in range(m)]
    table = [[perm[G.table[inv[a]][inv[b]]] for b in range(m)] for a in range(m)]
    elements = None if G.elements is None else [G.elements[inv[a]] for a in range(m)]
    return validate_group(labels, table, elements)


def permutation_label(p: Permutation) -> str:
    sep = "" if p.n <= 10 else ","
    return sep.join(str(x) for x in p.images)


def symmetric_group(n: int) -> FiniteGroup:
    """``S_n`` with elements in lexicographic image order; index 0 is the identity."""
    if n < 1:
        raise ValueError("n must be positive")
    order_max = guards.limit(guards.SYMMETRIC_ORDER_MAX)
    if math.factorial(n) > order_max:
        raise OrderGuardExceeded(f"|S_{n}| = {math.factorial(n)} exceeds guard {order_max}")
    perms = all_permutations(n)
    return group_from_elements(perms, Permutation.compose, [permutation_label(p) for p in perms])


@dataclass(frozen=True)
class FunctionFamily:
    """A map ``t -> members[t]`` from the points into ``S_n``."""

    members: tuple[Permutation, ...]

    def __post_init__(self):
        n = len(self.members)
        if n == 0 or any(p.n != n for p in self.members):
            raise ShapeMismatch(f"a family on {n} points needs {n} permutations of size {n}")

    @property
    def n(self) -> int:
        return len(self.members)

    def __call__(self, t: int) -> Permutation:
        return self.members[t]

    def multiply(self, other: FunctionFamily) -> FunctionFamily:
        """Pointwise product: ``(f g)(t) = f(t) o g(t)``."""
        if other.n != self.n:
            raise ShapeMismatch("families on different point sets")
        return FunctionFamily(tuple(p.compose(q) for p, q in zip(self.members, other.members)))

    def inverse(self) -> FunctionFamily:
        return FunctionFamily(tuple(p.inverse() for p in self.members))

    def label(self) -> str:
        return ".".join(permutation_label(p) for p in self.members)


def function_families(n: int) -> list[FunctionFamily]:
    """All ``(n!)**n`` families, lexicographic over ``S_n x ... x S_n``."""
    perms = all_permutations(n)
    return [FunctionFamily(ms) for ms in itertools.product(perms, repeat=n)]


def function_family_group(n: int) -> FiniteGroup:
    if n < 1:
        raise ValueError("n must be positive")
    order_max = guards.limit(guards.FUNCTION_FAMILY_ORDER_MAX)
    if h2_order(n) > order_max:
        raise OrderGuardExceeded(f"(n!)^n = {h2_order(n)} exceeds guard {order_max}")
    fams = function_families(n)
    return group_from_elements(fams, FunctionFamily.multiply, [f.label() for f in fams])


def iso_p(fam: FunctionFamily, points: PointSet | None = None) -> BinaryOpTable:
    """``p(f)(t, x) = f(t)(x)``."""
    pts = points if points is not None else PointSet.of_size(fam.n)
    if pts.size != fam.n:
        raise ShapeMismatch(f"family on {fam.n} points, point set of size {pts.size}")
    return BinaryOpTable._trusted(pts, tuple(p.images for p in fam.members))


def iso_p_inv(f: BinaryOpTable) -> FunctionFamily:
    """``p^-1(f)(t) = f(t, .)``; only defined on invertible tables."""
    t = non_bijective_slice(f)
    if t is not None:
        raise NotInvertible(f"slice at {f.points.labels[t]!r} is not a bijection")
    return FunctionFamily(tuple(Permutation(row) for row in f.entries))


def h2_order(n: int) -> int:
    """Number of invertible binary operations on ``n`` points: ``(n!)**n``."""
    if n < 1:
        raise ValueError("n must be positive")
    return math.factorial(n) ** n


def closure(generators: Iterable[BinaryOpTable], points: PointSet | None = None) -> list[BinaryOpTable]:
    """Subgroup of invertible operations generated by ``generators``.

    Returned sorted by table bytes.  ``points`` is needed only when
    ``generators`` is empty.
    """
    gens = list(dict.fromkeys(generators))
    if not gens and points is None:
        raise ValueError("closure of no generators needs a point set")
    pts = gens[0].points if gens else points
    for g in gens:
        if g.points != pts:
            raise PointSetMismatch("generators live on different point sets")
        if not is_invertible(g):
            raise NotInvertible(f"generator {g.to_lists()} is not invertible")
    size_max = guards.limit(guards.CLOSURE_MAX)

    # finite monoid: closure under products already contains inverses,
    # but adding them to the generators shortens the search
    step = list(dict.fromkeys(gens + [invert(g) for g in gens]))
    e = identity_op(pts)
    seen = {e}
    queue = deque([e])
    while queue:
        a = queue.popleft()
        for s in step:
            b = compose(a, s)
            if b not in seen:
                seen.add(b)
                if len(seen) > size_max:
                    raise ClosureGuardExceeded(f"closure exceeds guard {size_max}")
                queue.append(b)
    return sorted(seen)


def group_of_ops(ops: Sequence[BinaryOpTable]) -> FiniteGroup:
    """Multiplication table of a set of operations closed under composition."""
    ops = sorted(set(ops))
    labels = [f"f{i}" for i in range(len(ops))]
    return group_from_elements(ops, compose, labels)


def _generated(G: FiniteGroup, gens: Sequence[int]) -> set[int]:
    seen = {G.identity}
    frontier = [G.identity]
    while frontier:
        nxt = []
        for a in frontier:
            for s in gens:
                b = G.table[a][s]
                if b not in seen:
                    seen.add(b)
                    nxt.append(b)
        frontier = nxt
    return seen


def _extend(G: FiniteGroup, H: FiniteGroup, gens: Sequence[int], imgs: Sequence[int]) -> dict[int, int] | None:
    """Extend ``gens[i] -> imgs[i]`` to a homomorphism on the generated subgroup.

    Returns ``None`` when the extension is ill-defined or not injective.
    """
    phi = {G.identity: H.identity}
    used = {H.identity}
    queue = deque([G.identity])
    while queue:
        a = queue.popleft()
        for s, t in zip(gens, imgs):
            b = G.table[a][s]
            v = H.table[phi[a]][t]
            if b in phi:
                if phi[b] != v:
                    return None
            else:
                if v in used:
                    return None
                phi[b] = v
                used.add(v)
                queue.append(b)
    return phi


def are_isomorphic(G: FiniteGroup, H: FiniteGroup) -> dict[int, int] | None:
    """Find an isomorphism ``G -> H`` as an index mapping, or ``None``.

    Generators of ``G`` are picked greedily, preferring elements whose order
    is rare in ``H``; images are then searched by backtracking, restricted to
    elements of matching order and pruned by extending each partial
    assignment to the subgroup it generates.
    """
    order_max = guards.limit(guards.ISOMORPHISM_ORDER_MAX)
    if max(G.order, H.order) > order_max:
        raise OrderGuardExceeded(f"isomorphism search limited to order {order_max}")
    if G.order != H.order:
        return None
    if G.table == H.table:
        return {a: a for a in range(G.order)}
    g_orders = G.element_orders()
    h_orders = H.element_orders()
    if Counter(g_orders) != Counter(h_orders) or G.is_abelian() != H.is_abelian():
        return None

    by_order: dict[int, list[int]] = {}
    for b, k in enumerate(h_orders):
        by_order.setdefault(k, []).append(b)

    gens: list[int] = []
    span = {G.identity}
    while len(span) < G.order:
        a = min(
            (a for a in range(G.order) if a not in span),
            key=lambda a: (len(by_order[g_orders[a]]), -g_orders[a], a),
        )
        gens.append(a)
        span = _generated(G, gens)

    def search(k: int, imgs: list[int]) -> dict[int, int] | None:
        if k == len(gens):
            phi = _extend(G, H, gens, imgs)
            return phi if phi is not None and len(phi) == G.order else None
        for b in by_order[g_orders[gens[k]]]:
            if b in imgs:
                continue
            if _extend(G, H, gens[: k + 1], imgs + [b]) is None:
                continue
            found = search(k + 1, imgs + [b])
            if found is not None:
                return found
        return None

    return search(0, [])


def invariant_summary(G: FiniteGroup) -> str:
    kind = "abelian" if G.is_abelian() else "non-abelian"
    orders = ", ".join(f"{k}: {c}" for k, c in G.order_profile())
    return f"order {G.order}, {kind}, element orders {{{orders}}}"


IDENTIFY_MAX_ORDER = 12


def identify_group(G: FiniteGroup) -> str:
    """Name ``G`` from the catalog of all groups of order at most 12.

    Larger groups get an invariant summary instead of a name.
    """
    from .catalog import small_groups

    if G.order > IDENTIFY_MAX_ORDER:
        return invariant_summary(G)
    profile = G.order_profile()
    abelian = G.is_abelian()
    for name, H in small_groups().items():
        if H.order != G.order or H.is_abelian() != abelian or H.order_profile() != profile:
            continue
        if are_isomorphic(G, H) is not None:
            return name
    return invariant_summary(G)
