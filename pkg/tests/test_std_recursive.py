import pytest

from kparallel import constructions
from kparallel import gf
from kparallel import linalg
from kparallel import std_recursive

F2 = gf.field_new(2)


def test_small_design():
    design = std_recursive.build_std(2, 2, 2, 2)
    assert design.n == 4
    assert len(design.blocks) == 16
    assert len(design.classes) == 4
    assert all(len(members) == 4 for members in design.classes)
    assert len(design.groups) == 3
    assert design.group_size == 4
    assert design.verify().passed


def test_design_with_smaller_t():
    design = std_recursive.build_std(2, 2, 3, 1)
    assert len(design.blocks) == 8
    assert len(design.classes) == 1
    report = design.verify()
    assert report.passed
    assert report.check("t-subspaces in exactly one block").passed


@pytest.mark.slow
def test_larger_design():
    design = std_recursive.build_std(2, 3, 3, 3)
    assert len(design.blocks) == 512
    assert len(design.classes) == 64
    assert len(design.groups) == 7


def test_design_missing_block_fails():
    design = std_recursive.build_std(2, 2, 2, 2)
    removed = design.classes[1][0]
    design.blocks = [b for b in design.blocks if b != removed]
    design.classes = [[b for b in members if b != removed] for members in design.classes]
    report = design.verify()
    assert not report.passed
    coverage = report.check("t-subspaces in exactly one block")
    assert coverage.counterexample == {"t-subspace": removed, "blocks": 0}
    assert not report.check("resolvability").passed


def test_design_with_non_transversal_block_fails():
    design = std_recursive.build_std(2, 2, 2, 2)
    design.blocks = design.blocks[:-1] + [linalg.tail_subspace(F2, 4, 2)]
    report = design.verify()
    assert report.check("blocks transversal").counterexample == linalg.tail_subspace(F2, 4, 2)


@pytest.mark.parametrize("q, k, m, t", [
    (2, 2, 2, 0),
    (2, 2, 2, 3),
    (2, 3, 2, 2),
])
def test_design_rejects_parameters(q, k, m, t):
    with pytest.raises(std_recursive.DesignParameterError):
        std_recursive.build_std(q, k, m, t)


@pytest.mark.parametrize("q, n1, k, classes, size", [
    (2, 4, 2, 4, 4),
    (2, 6, 2, 16, 16),
    (3, 4, 2, 9, 9),
])
def test_partial_parallelism(q, n1, k, classes, size):
    found = std_recursive.partial_parallelism(q, n1, k)
    assert len(found) == classes
    assert all(len(members) == size for members in found)
    assert all(linalg.tail_meet_dim(y, k) == 0 for members in found for y in members)


def test_partial_parallelism_rejects_small_n1():
    with pytest.raises(std_recursive.DesignParameterError):
        std_recursive.partial_parallelism(2, 3, 2)


def test_partial_grassmannian():
    grassmannian = std_recursive.PartialGrassmannian(F2, 6, 4, 2)
    assert grassmannian.transversal_count() == 2 ** 8
    assert linalg.axis_subspace(F2, 6, 2) in grassmannian
    assert linalg.coordinate_subspace(F2, 6, [4, 5]) not in grassmannian
    assert grassmannian.is_transversal(linalg.axis_subspace(F2, 6, 2))
    assert not grassmannian.is_transversal(linalg.coordinate_subspace(F2, 6, [0, 5]))
    with pytest.raises(std_recursive.DesignParameterError):
        std_recursive.PartialGrassmannian(F2, 4, 4, 2)


def test_recursive_extend_to_six():
    family = std_recursive.recursive_extend(constructions.build_family_q2_2k(2), 2, 6, 2)
    assert len(family) == 3
    assert all(len(spread) == 21 for spread in family)
    assert family.metadata["extended from"] == 4
    assert family.verified


def test_recursive_extend_rejects_mismatch():
    family = constructions.build_family_q2_2k(2)
    with pytest.raises(std_recursive.DesignParameterError):
        std_recursive.recursive_extend(family, 2, 8, 2)
    with pytest.raises(std_recursive.DesignParameterError):
        std_recursive.recursive_extend(family, 2, 7, 2)


@pytest.mark.parametrize("q, n, k, spreads, size", [
    (2, 4, 2, 3, 5),
    (2, 6, 2, 3, 21),
    (2, 3, 1, 1, 7),
    (2, 3, 3, 1, 1),
    (3, 4, 2, 2, 10),
    pytest.param(2, 8, 2, 3, 85, marks=pytest.mark.slow),
    pytest.param(3, 6, 2, 2, 91, marks=pytest.mark.slow),
])
def test_build_family(q, n, k, spreads, size):
    family = std_recursive.build_family(q, n, k)
    assert len(family) == spreads == std_recursive.family_size(q, n, k)
    assert all(len(spread) == size for spread in family)
    assert family.verify().passed


@pytest.mark.parametrize("q, n, k", [(2, 5, 2), (2, 2, 3), (2, 4, 0)])
def test_build_family_rejects_parameters(q, n, k):
    with pytest.raises(std_recursive.DesignParameterError):
        std_recursive.build_family(q, n, k)


@pytest.mark.parametrize("q, n, k, size", [
    (2, 6, 3, 7),
    (2, 12, 3, 7),
    (3, 8, 2, 2),
    (2, 7, 2, 0),
    (5, 5, 5, 1),
])
def test_family_size(q, n, k, size):
    assert std_recursive.family_size(q, n, k) == size
