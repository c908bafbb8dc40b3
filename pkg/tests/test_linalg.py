import itertools

import numpy as np
import pytest

from kparallel import gf
from kparallel import linalg

F2 = gf.field_new(2)
F3 = gf.field_new(3)

EXAMPLE_A = [[1, 1, 0], [0, 1, 1], [0, 0, 1]]
EXAMPLE_LIFT = {"100110", "010011", "001001", "110101", "101111", "011010", "111100", "000000"}


def vec(text, field=F2):
    return field.gf([int(c) for c in text])


def span(*texts, field=F2):
    return linalg.subspace_from_generators([[int(c) for c in text] for text in texts], field)


def strings(subspace):
    return {"".join(str(c) for c in row) for row in subspace.vectors().view(np.ndarray).tolist()}


@pytest.mark.parametrize("mask, count", [(0, 0), (0b1011, 3), ((1 << 80) | 1, 2), ((1 << 64) - 1, 64)])
def test_popcount(mask, count):
    assert linalg.popcount(mask) == count


def test_rref_identity_and_zero():
    identity = F2.gf(np.eye(3, dtype=int))
    reduced, rank = linalg.rref(identity)
    assert rank == 3
    assert np.array_equal(reduced, identity)
    reduced, rank = linalg.rref(F2.gf.Zeros((3, 3)))
    assert rank == 0
    assert not reduced.view(np.ndarray).any()


def test_rank_of_example_matrix():
    assert linalg.rank(F2.gf(EXAMPLE_A)) == 3


def test_span_of_unit_vector():
    x = span("10")
    assert x.dim == 1
    assert strings(x) == {"00", "10"}


def test_span_of_lifted_example():
    rows = [row_i + row_a for row_i, row_a in zip(np.eye(3, dtype=int).tolist(), EXAMPLE_A)]
    x = linalg.subspace_from_generators(rows, F2)
    assert strings(x) == EXAMPLE_LIFT


def test_repeated_generator():
    assert span("0110", "0110").dim == 1


def test_canonical_equality():
    x = span("100110", "010011")
    y = span("110101", "010011")
    assert x == y
    assert hash(x) == hash(y)
    assert x.rows == y.rows


def test_zero_generators():
    assert linalg.subspace_from_generators(np.zeros((2, 4), dtype=int), F2) == linalg.zero_subspace(F2, 4)


def test_subspace_distance_examples():
    x = span("100110", "010011", "001001")
    axis = span("100000", "010000", "001000")
    assert linalg.subspace_distance(x, x) == 0
    assert linalg.subspace_distance(x, axis) == 6
    assert linalg.subspace_distance(axis, linalg.tail_subspace(F2, 6, 3)) == 6


def test_lattice_operations():
    x = span("100110", "010011")
    zero = linalg.zero_subspace(F2, 6)
    assert linalg.intersect(x, x) == x
    assert linalg.subspace_sum(x, zero) == x
    assert linalg.intersect(x, zero) == zero


def test_modular_law_on_random_pairs():
    rng = np.random.default_rng(7)
    for _ in range(100):
        x = linalg.subspace_from_generators(rng.integers(0, 2, size=(3, 6)), F2)
        y = linalg.subspace_from_generators(rng.integers(0, 2, size=(3, 6)), F2)
        meet = linalg.intersect(x, y)
        join = linalg.subspace_sum(x, y)
        assert x.dim + y.dim == meet.dim + join.dim
        assert meet.dim == linalg.meet_dim(x, y)
        assert linalg.is_subset(meet, x) and linalg.is_subset(meet, y)


def test_contains():
    x = span("100110", "010011")
    assert linalg.contains(x, vec("110101"))
    assert vec("001001") not in x
    with pytest.raises(linalg.AmbientMismatchError):
        linalg.contains(x, vec("1101"))


def test_ambient_mismatch():
    with pytest.raises(linalg.AmbientMismatchError):
        linalg.meet_dim(span("10"), span("100"))
    with pytest.raises(linalg.AmbientMismatchError):
        linalg.intersect(span("10"), span("10", field=F3))


@pytest.mark.parametrize("q, n, k, count", [
    (2, 4, 2, 35),
    (2, 6, 3, 1395),
    (2, 6, 2, 651),
    (3, 4, 2, 130),
    (2, 5, 5, 1),
    (3, 3, 0, 1),
])
def test_grassmannian_counts(q, n, k, count):
    field = gf.field_of_order(q)
    members = list(linalg.enumerate_grassmannian(n, k, field))
    assert len(members) == count == linalg.gaussian_binomial(n, k, q)
    assert len(set(members)) == count
    assert all(m.dim == k for m in members)


def test_grassmannian_order():
    members = list(linalg.enumerate_grassmannian(4, 2, F2))
    assert members[0].rows == ((1, 0, 0, 0), (0, 1, 0, 0))
    assert members[-1].rows == ((0, 0, 1, 0), (0, 0, 0, 1))
    pivots = [m.pivots for m in members]
    assert pivots == sorted(pivots)


def test_enumerated_rows_are_canonical():
    for member in linalg.enumerate_grassmannian(4, 2, F3):
        assert linalg.subspace_from_generators(member.rows, F3) == member


def test_enumeration_bound():
    with pytest.raises(linalg.EnumerationBoundError):
        linalg.enumerate_grassmannian(20, 10, F2)


def test_triangle_inequality_on_g_2_4_2():
    members = list(linalg.enumerate_grassmannian(4, 2, F2))
    distance = np.array([[linalg.subspace_distance(x, y) for y in members] for x in members])
    assert np.array_equal(distance, distance.T)
    assert set(np.unique(distance).tolist()) == {0, 2, 4}
    # d(x, z) <= d(x, y) + d(y, z) for every triple
    assert np.all(distance[:, None, :] <= distance[:, :, None] + distance[None, :, :])


def test_tail_meet_dim_matches_meet_with_u():
    u = linalg.tail_subspace(F2, 6, 3)
    for member in itertools.islice(linalg.enumerate_grassmannian(6, 3, F2), 0, None, 7):
        assert linalg.tail_meet_dim(member, 3) == linalg.meet_dim(member, u)


def test_enumerate_transversal():
    found = set(linalg.enumerate_transversal(6, 3, 2, F2))
    assert len(found) == linalg.transversal_count(6, 3, 2, 2) == 448
    expected = {y for y in linalg.enumerate_grassmannian(6, 2, F2) if linalg.tail_meet_dim(y, 3) == 0}
    assert found == expected


def test_split_and_concat():
    v = vec("110101")
    x, y = linalg.split(v, 3)
    assert np.array_equal(x, vec("110"))
    assert np.array_equal(y, vec("101"))
    assert np.array_equal(linalg.concat(x, y), v)


def test_vector_codes():
    v = vec("110101")
    assert linalg.vector_code(v) == 0b110101
    assert np.array_equal(linalg.vector_from_code(F2, 6, 0b110101), v)
    w = vec("2011", field=F3)
    assert linalg.vector_code(w) == 2 * 27 + 0 * 9 + 1 * 3 + 1


def test_group_of():
    assert linalg.group_of(vec("000101"), 3) == linalg.ZERO_GROUP
    assert linalg.group_of(vec("110101"), 3).point == (1, 1, 0)
    assert linalg.group_of(vec("2011", field=F3), 2).point == (1, 0)
    assert linalg.group_of(vec("1211", field=F3), 2).point == (1, 2)


def test_projective_points():
    points = linalg.projective_points(F3, 2)
    assert [p.point for p in points] == [(1, 0), (1, 1), (1, 2), (0, 1)]


def test_scale_by_one_is_identity():
    big = gf.field_new(2, 3)
    x = span("100110", "010011", "001001")
    assert linalg.scale_subspace(x, big.one) == x


def test_scale_fixes_v0():
    big = gf.field_new(2, 3)
    v0 = linalg.tail_subspace(F2, 6, 3)
    for beta in list(big.elements())[1:]:
        assert linalg.scale_subspace(v0, beta) == v0


def test_scale_diagonal_by_alpha():
    big = gf.field_new(2, 3)
    ext = gf.extension(F2, big)
    diagonal = span("100100", "010010", "001001")
    scaled = linalg.scale_subspace(diagonal, big.primitive)
    assert scaled.dim == 3
    for row in scaled.vectors().view(np.ndarray).tolist():
        x, y = ext.from_vector(row[:3]), ext.from_vector(row[3:])
        assert y == big.primitive * x


def test_scale_by_zero():
    big = gf.field_new(2, 3)
    with pytest.raises(linalg.ZeroScalarError):
        linalg.scale_subspace(linalg.axis_subspace(F2, 6, 3), big.zero)


def test_scale_head():
    big = gf.field_new(2, 2)
    axis = linalg.axis_subspace(F2, 4, 2)
    assert linalg.scale_subspace(axis, big.primitive, linalg.Half.head) == axis


def test_embed_tail():
    embedded = linalg.embed_tail(span("10"), 4)
    assert embedded.rows == ((0, 0, 1, 0),)
    assert embedded.pivots == (2,)
    assert embedded == span("0010")


def test_swap_halves():
    x = span("100110", "010011", "001001")
    swapped = linalg.swap_halves(x, 3)
    assert {"110100", "011010", "001001"} <= strings(swapped)
    assert linalg.swap_halves(swapped, 3) == x


def test_projective_translation():
    assert linalg.to_projective(6, 3) == (5, 2)
    assert linalg.from_projective(5, 2) == (6, 3)


def test_log_q():
    assert linalg.log_q(27, 3) == 3
    assert linalg.log_q(1, 2) == 0


def test_graph_subspace():
    graph = linalg.graph_subspace(F2, EXAMPLE_A)
    assert strings(graph) == EXAMPLE_LIFT
    assert graph.pivots == (0, 1, 2)
    assert linalg.tail_meet_dim(graph, 3) == 0
