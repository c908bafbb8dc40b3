import pytest

from kparallel import constructions
from kparallel import gf
from kparallel import linalg
from kparallel import oracle

F2 = gf.field_new(2)


@pytest.fixture
def spread():
    return list(constructions.build_base_code_q2(2))


def test_report_needs_counterexample():
    report = oracle.VerificationReport("subject")
    report.add("fine", True)
    with pytest.raises(ValueError):
        report.add("broken", False)
    assert report.passed


def test_report_extend_with_prefix():
    inner = oracle.VerificationReport("inner")
    inner.add("check", False, (0, 1))
    outer = oracle.VerificationReport("outer")
    outer.extend(inner, prefix="part")
    assert not outer.passed
    assert outer.failures[0].name == "part: check"
    assert outer.check("part: check").counterexample == (0, 1)


def test_digits():
    assert oracle.digits(0b1011, 2, 4) == (1, 0, 1, 1)
    assert oracle.digits(5, 3, 3) == (0, 1, 2)


def test_spread_passes(spread):
    report = oracle.is_spread(spread, 4, 2, 2)
    assert report.passed
    assert [check.name for check in report.checks] == [
        "size", "dimension", "pairwise trivial intersection", "exact cover"]


def test_missing_member(spread):
    report = oracle.is_spread(spread[1:], 4, 2, 2)
    assert not report.passed
    assert report.check("size").counterexample == {"members": 4, "expected": 5.0}
    uncovered = report.check("exact cover").counterexample
    assert linalg.vector(F2, uncovered) in spread[0]


def test_overlapping_members(spread):
    extra = next(y for y in linalg.enumerate_grassmannian(4, 2, F2) if y not in spread)
    report = oracle.is_spread(spread[1:] + [extra], 4, 2, 2)
    overlap = report.check("pairwise trivial intersection")
    assert not overlap.passed
    first, second = overlap.counterexample
    assert linalg.meet_dim(first, second) > 0


def test_wrong_dimension(spread):
    point = linalg.coordinate_subspace(F2, 4, [0])
    report = oracle.is_spread(spread + [point], 4, 2, 2)
    assert report.check("dimension").counterexample == point


def test_pairwise_disjoint(spread):
    other = constructions.reverse_code(spread, 2)
    shared = set(spread).intersection(other)
    report = oracle.pairwise_disjoint([spread, spread])
    assert not report.passed
    assert report.failures[0].counterexample["spreads"] == [0, 1]
    assert oracle.pairwise_disjoint([spread, other]).passed == (not shared)


def test_group_codes():
    codes = oracle.group_codes(F2, (1, 0), 4, 2)
    assert sorted(codes.tolist()) == [8, 9, 10, 11]
    codes = oracle.group_codes(gf.field_new(3), (1, 2), 3, 2)
    assert sorted(codes.tolist()) == [15, 16, 17, 21, 22, 23]


def test_exact_cover_outside():
    classes = [list(members) for members in constructions.base_partition(F2, 2)[1]]
    assert oracle.exact_cover_outside(classes[1], 4, 2, 2).passed
    report = oracle.exact_cover_outside(classes[1][:-1], 4, 2, 2)
    assert "uncovered" in report.failures[0].counterexample
    report = oracle.exact_cover_outside(classes[1] + [classes[2][0]], 4, 2, 2)
    counterexample = report.failures[0].counterexample
    assert len(counterexample["by"]) == 2
