"""Distributivity of binary operations and the binary Cayley representation.

Two equivalent forms of the distributive law are implemented separately so
they can be checked against each other:

* the pointwise law ``g(h(x, x'), h(x, x'')) = h(x, g(x', x''))``, i.e. every
  slice ``h(x, .)`` is an endomorphism of ``g``;
* the slice relation ``g_t o h_t' = h_{g_t(t')} o g_t``, i.e. every slice
  ``g_t`` is an automorphism of ``h``.

Note the roles: the pointwise law for ``(g, h)`` is the slice relation for
``(h, g)``.  Over a subgroup, where both orders of every pair are checked,
the two conditions coincide.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from . import guards
from .core import BinaryOpTable, PointSet, compose, identity_op, invert, is_invertible
from .errors import NotInvertible, OrderGuardExceeded, PointSetMismatch
from .groups import FiniteGroup, are_isomorphic, closure, group_of_ops, identify_group


@dataclass(frozen=True)
class TripleWitness:
    """A triple ``(x, x', x'')`` where the pointwise law fails."""

    x: int
    x1: int
    x2: int
    lhs: int
    rhs: int


@dataclass(frozen=True)
class SliceWitness:
    """Parameters ``(t, t')`` where ``g_t o h_t' != h_{g_t(t')} o g_t``."""

    t: int
    t1: int
    lhs: tuple[int, ...]
    rhs: tuple[int, ...]


def _same_points(g: BinaryOpTable, h: BinaryOpTable):
    if g.points != h.points:
        raise PointSetMismatch("operations live on different point sets")


def distributivity_witness(g: BinaryOpTable, h: BinaryOpTable) -> TripleWitness | None:
    """First triple, in lexicographic order, violating the pointwise law."""
    _same_points(g, h)
    G, H = g.entries, h.entries
    n = g.n
    for x in range(n):
        hx = H[x]
        for x1 in range(n):
            grow = G[hx[x1]]
            g1 = G[x1]
            for x2 in range(n):
                lhs = grow[hx[x2]]
                rhs = hx[g1[x2]]
                if lhs != rhs:
                    return TripleWitness(x, x1, x2, lhs, rhs)
    return None


def is_distributive_pair(g: BinaryOpTable, h: BinaryOpTable) -> bool:
    """``g(h(x, x'), h(x, x'')) == h(x, g(x', x''))`` for all triples."""
    return distributivity_witness(g, h) is None


def slice_relation_witness(g: BinaryOpTable, h: BinaryOpTable) -> SliceWitness | None:
    _same_points(g, h)
    for f in (g, h):
        if not is_invertible(f):
            raise NotInvertible(f"{f.to_lists()} is not invertible")
    G, H = g.entries, h.entries
    n = g.n
    for t in range(n):
        gt = G[t]
        for t1 in range(n):
            lhs = tuple(gt[y] for y in H[t1])
            hk = H[gt[t1]]
            rhs = tuple(hk[y] for y in gt)
            if lhs != rhs:
                return SliceWitness(t, t1, lhs, rhs)
    return None


def slice_relation_holds(g: BinaryOpTable, h: BinaryOpTable) -> bool:
    """``g_t o h_t' == h_{g_t(t')} o g_t`` for all ``t, t'``.

    Both operations must be invertible.
    """
    return slice_relation_witness(g, h) is None


@dataclass(frozen=True)
class SubgroupWitness:
    reason: str
    pair: tuple[BinaryOpTable, ...]
    triple: TripleWitness | None = None


def is_distributive_subgroup(elements: Sequence[BinaryOpTable]) -> tuple[bool, SubgroupWitness | None]:
    """Check that ``elements`` is a subgroup whose ordered pairs all distribute.

    Returns ``(True, None)`` or ``(False, witness)`` where the witness is the
    first failure in canonical (table byte) order.
    """
    elems = sorted(set(elements))
    if not elems:
        return False, SubgroupWitness("empty set", ())
    pts = elems[0].points
    for f in elems:
        if f.points != pts:
            raise PointSetMismatch("operations live on different point sets")
        if not is_invertible(f):
            raise NotInvertible(f"{f.to_lists()} is not invertible")

    members = set(elems)
    if identity_op(pts) not in members:
        return False, SubgroupWitness("identity missing", ())
    for f in elems:
        if invert(f) not in members:
            return False, SubgroupWitness("inverse missing", (f,))
    for f in elems:
        for g in elems:
            if compose(f, g) not in members:
                return False, SubgroupWitness("not closed under composition", (f, g))
    for g in elems:
        for h in elems:
            w = distributivity_witness(g, h)
            if w is not None:
                return False, SubgroupWitness("not distributive", (g, h), w)
    return True, None


def binary_representation(G: FiniteGroup) -> list[tuple[int, BinaryOpTable]]:
    """``i_g(h1, h2) = h1 g h1^-1 h2`` for every ``g`` in ``G``.

    Each table lives on the group's own element set.
    """
    T = G.table
    pts = PointSet.from_labels(G.labels)
    m = G.order
    out = []
    for g in range(m):
        rows = []
        for h1 in range(m):
            c = T[T[h1][g]][G.inverses[h1]]
            rows.append(tuple(T[c][h2] for h2 in range(m)))
        out.append((g, BinaryOpTable._trusted(pts, tuple(rows))))
    return out


@dataclass(frozen=True)
class RepresentationReport:
    group_name: str
    injective: bool
    homomorphism: bool
    image_is_subgroup: bool
    image_distributive: bool
    image_order: int
    isomorphic_to_source: bool

    @property
    def ok(self) -> bool:
        return (
            self.injective
            and self.homomorphism
            and self.image_is_subgroup
            and self.image_distributive
            and self.isomorphic_to_source
        )


def verify_representation(G: FiniteGroup, name: str | None = None) -> RepresentationReport:
    order_max = guards.limit(guards.REPRESENTATION_ORDER_MAX)
    if G.order > order_max:
        raise OrderGuardExceeded(f"representation check limited to order {order_max}")
    rep = dict(binary_representation(G))
    image = list(rep.values())
    m = G.order

    injective = len(set(image)) == m
    homomorphism = all(
        compose(rep[g], rep[k]) == rep[G.table[g][k]] for g in range(m) for k in range(m)
    )
    generated = closure(image)
    image_is_subgroup = set(generated) == set(image)
    distributive, _ = is_distributive_subgroup(image)
    isomorphic = False
    if image_is_subgroup and len(generated) == m:
        isomorphic = are_isomorphic(group_of_ops(image), G) is not None
    return RepresentationReport(
        group_name=name if name is not None else identify_group(G),
        injective=injective,
        homomorphism=homomorphism,
        image_is_subgroup=image_is_subgroup,
        image_distributive=distributive,
        image_order=len(set(image)),
        isomorphic_to_source=isomorphic,
    )
