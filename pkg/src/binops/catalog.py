"""Constructors for small named groups and the order <= 12 catalog."""

from __future__ import annotations

import functools
import itertools

from .core import Permutation, all_permutations
from .groups import FiniteGroup, group_from_elements, permutation_label, validate_group


def cyclic_group(m: int) -> FiniteGroup:
    return validate_group(
        [str(i) for i in range(m)],
        [[(i + j) % m for j in range(m)] for i in range(m)],
    )


def direct_product(G: FiniteGroup, H: FiniteGroup) -> FiniteGroup:
    pairs = list(itertools.product(range(G.order), range(H.order)))
    return group_from_elements(
        pairs,
        lambda a, b: (G.table[a[0]][b[0]], H.table[a[1]][b[1]]),
        [f"{G.labels[a]},{H.labels[b]}" for a, b in pairs],
    )


def klein_group() -> FiniteGroup:
    """``Z2 x Z2`` labelled ``e a b c``."""
    return validate_group(
        ["e", "a", "b", "c"],
        [[0, 1, 2, 3], [1, 0, 3, 2], [2, 3, 0, 1], [3, 2, 1, 0]],
    )


def dihedral_group(k: int) -> FiniteGroup:
    """Symmetries of a regular ``k``-gon, order ``2k``; ``r^a s^b`` is ``(a, b)``."""
    elems = [(a, b) for b in range(2) for a in range(k)]

    def mul(x, y):
        a, b = x
        c, d = y
        return ((a + (c if b == 0 else -c)) % k, (b + d) % 2)

    labels = [("r" if b == 0 else "s") + str(a) for a, b in elems]
    return group_from_elements(elems, mul, labels)


def dicyclic_group(k: int) -> FiniteGroup:
    """Order ``4k``: ``<a, x | a^2k = 1, x^2 = a^k, x a x^-1 = a^-1>``."""
    m = 2 * k
    elems = [(a, j) for j in range(2) for a in range(m)]

    def mul(x, y):
        a, j = x
        b, i = y
        if j == 0:
            return ((a + b) % m, i)
        # x a^b = a^-b x
        c = (a - b) % m
        if i == 0:
            return (c, 1)
        return ((c + k) % m, 0)

    labels = [("a" if j == 0 else "x") + str(a) for a, j in elems]
    return group_from_elements(elems, mul, labels)


def quaternion_group() -> FiniteGroup:
    return dicyclic_group(2)


def _parity(p: Permutation) -> int:
    seen, parity = set(), 0
    for start in range(p.n):
        if start in seen:
            continue
        x, length = start, 0
        while x not in seen:
            seen.add(x)
            x = p(x)
            length += 1
        parity ^= (length - 1) & 1
    return parity


def alternating_group(n: int) -> FiniteGroup:
    perms = [p for p in all_permutations(n) if _parity(p) == 0]
    return group_from_elements(perms, Permutation.compose, [permutation_label(p) for p in perms])


@functools.lru_cache(maxsize=None)
def small_groups() -> dict[str, FiniteGroup]:
    """Every group of order 1..12 up to isomorphism, keyed by name."""
    C = cyclic_group
    groups = {"trivial": C(1)}
    for m in range(2, 13):
        groups[f"C{m}"] = C(m)
    groups["V4"] = klein_group()
    groups["S3"] = dihedral_group(3)
    groups["D4"] = dihedral_group(4)
    groups["Q8"] = quaternion_group()
    groups["C2xC4"] = direct_product(C(2), C(4))
    groups["C2xC2xC2"] = direct_product(klein_group(), C(2))
    groups["C3xC3"] = direct_product(C(3), C(3))
    groups["D5"] = dihedral_group(5)
    groups["A4"] = alternating_group(4)
    groups["D6"] = dihedral_group(6)
    groups["Dic3"] = dicyclic_group(3)
    groups["C2xC6"] = direct_product(C(2), C(6))
    return groups
