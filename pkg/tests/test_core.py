import itertools

import pytest
from hypothesis import given, strategies as st

from binops import (
    EndoMap,
    Permutation,
    PointSet,
    all_permutations,
    brute_force_inverse,
    compose,
    embed_unary,
    enumerate_all_ops,
    enumerate_invertible,
    from_slices,
    identity_op,
    invert,
    is_invertible,
    make_binop,
    slice_at,
    slices,
)
from binops.errors import (
    DuplicateLabel,
    IndexOutOfRange,
    NotInvertible,
    OutOfRangeEntry,
    PointSetMismatch,
    SearchSpaceTooLarge,
    ShapeMismatch,
)

from oracles import as_func, compose_dict, has_two_sided_inverse, to_rows

SWAP = EndoMap((1, 0))
ID2 = EndoMap((0, 1))


def tables(n):
    row = st.lists(st.integers(0, n - 1), min_size=n, max_size=n)
    return st.lists(row, min_size=n, max_size=n).map(lambda rows: make_binop(n, rows))


def invertible_tables(n):
    row = st.permutations(list(range(n)))
    return st.lists(row, min_size=n, max_size=n).map(lambda rows: make_binop(n, rows))


class TestConstruction:
    def test_phi1_from_labels(self, ab, phi1):
        f = make_binop(ab, [[1, 0], [1, 0]])
        assert f.entries == phi1.entries
        assert f.points.labels == ("a", "b")

    def test_out_of_range(self, ab):
        with pytest.raises(OutOfRangeEntry):
            make_binop(ab, [[0, 1], [0, 2]])

    def test_identity_on_three(self):
        f = make_binop(PointSet.from_labels("abc"), [[0, 1, 2]] * 3)
        assert f == identity_op(PointSet.from_labels("abc"))

    @pytest.mark.parametrize("rows", [[[0, 1]], [[0, 1], [0]], [[0, 1, 0], [0, 1, 0]]])
    def test_shape_mismatch(self, rows):
        with pytest.raises(ShapeMismatch):
            make_binop(2, rows)

    def test_point_set_rejects_duplicates(self):
        with pytest.raises(DuplicateLabel):
            PointSet.from_labels(["a", "a"])

    def test_equality_needs_same_points(self, ab):
        assert make_binop(ab, [[0, 1], [0, 1]]) != identity_op(2)


@pytest.mark.parametrize(
    "n, expected",
    [(1, [[0]]), (2, [[0, 1], [0, 1]]), (3, [[0, 1, 2], [0, 1, 2], [0, 1, 2]])],
)
def test_identity_op(n, expected):
    assert identity_op(n).to_lists() == expected


class TestCompose:
    def test_phi1_phi2(self, phi1, phi2):
        # frozen from the dict oracle
        expected = to_rows(compose_dict(as_func([[1, 0], [1, 0]]), as_func([[0, 1], [1, 0]]), 2), 2)
        assert expected == [[1, 0], [0, 1]]
        assert compose(phi1, phi2).to_lists() == [[1, 0], [0, 1]]

    def test_phi1_squared_is_identity(self, phi1):
        assert compose(phi1, phi1) == identity_op(2)

    def test_left_identity_all_n2(self):
        e = identity_op(2)
        for f in enumerate_all_ops(2):
            assert compose(e, f) == f

    def test_matches_oracle_n3_sample(self):
        ops = list(enumerate_all_ops(3))[::97]
        for f, g in itertools.product(ops[:40], ops[-40:]):
            expected = to_rows(compose_dict(as_func(f.to_lists()), as_func(g.to_lists()), 3), 3)
            assert compose(f, g).to_lists() == expected

    def test_point_set_mismatch(self, ab, phi1):
        with pytest.raises(PointSetMismatch):
            compose(phi1, identity_op(ab))

    @given(tables(3), tables(3), tables(3))
    def test_associative(self, f, g, h):
        assert compose(compose(f, g), h) == compose(f, compose(g, h))

    @given(tables(4))
    def test_identity_laws(self, f):
        e = identity_op(4)
        assert compose(e, f) == f == compose(f, e)


class TestSlices:
    def test_slices_of_phi2(self, phi2):
        assert slice_at(phi2, 0).images == (0, 1)
        assert slice_at(phi2, 1).images == (1, 0)

    def test_identity_slices(self):
        e = identity_op(3)
        for t in range(3):
            assert slice_at(e, t).images == (0, 1, 2)

    def test_slice_out_of_range(self, phi2):
        with pytest.raises(IndexOutOfRange):
            slice_at(phi2, 2)

    def test_from_slices(self, phi1, phi2):
        assert from_slices([SWAP, SWAP]) == phi1
        assert from_slices([ID2, SWAP]) == phi2
        assert from_slices([EndoMap((0, 1, 2))] * 3) == identity_op(3)

    def test_from_slices_shape(self):
        with pytest.raises(ShapeMismatch):
            from_slices([SWAP, SWAP, SWAP])

    def test_round_trip_exhaustive_n2(self):
        for f in enumerate_all_ops(2):
            assert from_slices([slice_at(f, t) for t in range(2)]) == f

    def test_functoriality_exhaustive_n2(self):
        ops = list(enumerate_all_ops(2))
        for f, g in itertools.product(ops, ops):
            fg = compose(f, g)
            for t in range(2):
                assert slice_at(fg, t) == slice_at(f, t).compose(slice_at(g, t))


class TestInvertibility:
    def test_phi1_invertible(self, phi1):
        assert is_invertible(phi1)

    def test_non_injective_row(self):
        assert not is_invertible(make_binop(2, [[0, 0], [0, 1]]))

    def test_four_of_sixteen(self):
        assert sum(is_invertible(f) for f in enumerate_all_ops(2)) == 4

    def test_invert_examples(self, phi1):
        assert invert(phi1) == phi1
        assert invert(identity_op(3)) == identity_op(3)
        with pytest.raises(NotInvertible):
            invert(make_binop(2, [[0, 0], [0, 1]]))

    def test_criterion_matches_search_oracle_n2(self):
        for f in enumerate_all_ops(2):
            assert is_invertible(f) == has_two_sided_inverse(f.to_lists())

    @pytest.mark.parametrize("n", [2, 3])
    def test_two_sided_inverse(self, n):
        e = identity_op(n)
        for f in enumerate_invertible(n):
            g = invert(f)
            assert compose(f, g) == e == compose(g, f)

    @given(invertible_tables(4))
    def test_inverse_slices_are_inverse_permutations(self, f):
        g = invert(f)
        for t in range(4):
            assert Permutation(g.entries[t]) == Permutation(f.entries[t]).inverse()


class TestBruteForceInverse:
    def test_phi2_self_inverse(self, phi2):
        assert brute_force_inverse(phi2).to_lists() == [[0, 1], [1, 0]]

    def test_absent(self):
        assert brute_force_inverse(make_binop(2, [[0, 0], [0, 1]])) is None

    def test_identity(self):
        assert brute_force_inverse(identity_op(2)) == identity_op(2)

    def test_agrees_with_criterion_n2(self):
        for f in enumerate_all_ops(2):
            assert (brute_force_inverse(f) is not None) == is_invertible(f)

    def test_restricted_n3_agrees_with_invert(self):
        for f in list(enumerate_invertible(3))[::17]:
            assert brute_force_inverse(f) == invert(f)
        assert brute_force_inverse(make_binop(3, [[0, 0, 1], [0, 1, 2], [0, 1, 2]])) is None

    def test_guards(self):
        with pytest.raises(SearchSpaceTooLarge):
            brute_force_inverse(identity_op(3), restricted=False)
        with pytest.raises(SearchSpaceTooLarge):
            brute_force_inverse(identity_op(4))


class TestEmbedding:
    def test_examples(self, phi1):
        assert embed_unary(Permutation((1, 0))) == phi1
        assert embed_unary(Permutation.identity(3)) == identity_op(3)
        assert embed_unary(Permutation((1, 2, 0))).to_lists() == [[1, 2, 0]] * 3

    @pytest.mark.parametrize("n", [2, 3])
    def test_monomorphism(self, n):
        perms = all_permutations(n)
        images = {embed_unary(p) for p in perms}
        assert len(images) == len(perms)
        for p, q in itertools.product(perms, perms):
            assert embed_unary(p.compose(q)) == compose(embed_unary(p), embed_unary(q))
        for p in perms:
            assert embed_unary(p.inverse()) == invert(embed_unary(p))
            assert is_invertible(embed_unary(p))


def test_permutation_rejects_non_bijection():
    with pytest.raises(NotInvertible):
        Permutation((0, 0))
    with pytest.raises(NotInvertible):
        EndoMap((0, 0)).to_permutation()


def test_slices_list(phi2):
    assert [m.images for m in slices(phi2)] == [(0, 1), (1, 0)]
