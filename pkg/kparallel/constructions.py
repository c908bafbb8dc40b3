# MIT License
#
# Copyright 2018-2019 IBM
#
# Permission is hereby granted, free of charge, to any person obtaining a copy
# of this software and associated documentation files (the "Software"), to deal
# in the Software without restriction, including without limitation the rights
# to use, copy, modify, merge, publish, distribute, sublicense, and/or sell
# copies of the Software, and to permit persons to whom the Software is
# furnished to do so, subject to the following conditions:
#
# The above copyright notice and this permission notice shall be included in all
# copies or substantial portions of the Software.
#
# THE SOFTWARE IS PROVIDED "AS IS", WITHOUT WARRANTY OF ANY KIND, EXPRESS OR
# IMPLIED, INCLUDING BUT NOT LIMITED TO THE WARRANTIES OF MERCHANTABILITY,
# FITNESS FOR A PARTICULAR PURPOSE AND NONINFRINGEMENT. IN NO EVENT SHALL THE
# AUTHORS OR COPYRIGHT HOLDERS BE LIABLE FOR ANY CLAIM, DAMAGES OR OTHER
# LIABILITY, WHETHER IN AN ACTION OF CONTRACT, TORT OR OTHERWISE, ARISING FROM,
# OUT OF OR IN CONNECTION WITH THE SOFTWARE OR THE USE OR OTHER DEALINGS IN THE
# SOFTWARE.

"""Families of pairwise disjoint spreads in G_q(2k, k).

For q = 2 the family has 2^k - 1 spreads: a parallel class of the lifted
(2k, k, k - 1) Gabidulin code plus V_0 gives a spread C; swapping the halves
of every vector gives the reversed spread; a shear sigma turns it into S_0;
and S_i is S_0 with the second half multiplied by alpha^i. For q > 2 the
reversed spread and a second spread built from a class avoiding its Type A
members are disjoint.

Throughout, U = V_0 is the span of the last k coordinates of F_q^(2k).
"""

from kparallel import constants
from kparallel import env
from kparallel import gf
from kparallel import linalg
from kparallel import oracle
from kparallel import rankmetric

import functools
import logging
from collections import Counter
from collections import namedtuple
from enum import Enum

import numpy as np

logger = logging.getLogger(constants.LOGGER_NAME)


class ConstructionError(Exception):
    """Base class for exceptions."""
    pass


class ConstructionParameterError(ConstructionError):
    """Parameters outside the range a construction covers."""
    pass


class PostCheckError(ConstructionError):
    """A constructed object failed verification."""

    def __init__(self, message: str, report: oracle.VerificationReport):
        super().__init__(message)
        self.report = report


class SubspaceType(Enum):
    a = "A"
    b = "B"
    c = "C"
    other = "OTHER"

    def __str__(self):
        return self.value


TypeCensus = namedtuple("TypeCensus", ["a", "b", "c", "other"])
Case = namedtuple("Case", ["number", "witness"])
CASE_1 = Case(1, None)


class Spread:
    """Members of a spread of F_q^n with the construction that produced them."""

    def __init__(self, field: gf.FieldSpec, n: int, k: int, members: list, provenance: str):
        self.field = field
        self.n = n
        self.k = k
        self.members = list(members)
        self.provenance = provenance

    @property
    def q(self) -> int:
        return self.field.order

    def census(self) -> TypeCensus:
        counts = Counter(classify_type(member, self.k) for member in self.members)
        return TypeCensus(*(counts[t] for t in SubspaceType))

    def verify(self) -> oracle.VerificationReport:
        return oracle.is_spread(self.members, self.n, self.q, self.k)

    def __len__(self):
        return len(self.members)

    def __iter__(self):
        return iter(self.members)

    def __contains__(self, member):
        return member in self.members

    def __repr__(self):
        return "Spread({} of G_{}({},{}), {} members)".format(self.provenance, self.q, self.n, self.k, len(self))


class SpreadFamily:
    """Ordered spreads of one Grassmannian; `verified` is set once disjointness has been checked."""

    def __init__(self, field: gf.FieldSpec, n: int, k: int, spreads: list, construction: str, metadata: dict = None):
        self.field = field
        self.n = n
        self.k = k
        self.spreads = list(spreads)
        self.construction = construction
        self.metadata = metadata or {}
        self.verified = False

    @property
    def q(self) -> int:
        return self.field.order

    def verify(self) -> oracle.VerificationReport:
        report = oracle.VerificationReport("{} family in G_{}({},{})".format(self.construction, self.q, self.n, self.k))
        for i, spread in enumerate(self.spreads):
            report.extend(spread.verify(), prefix="spread {}".format(i))
        report.extend(oracle.pairwise_disjoint(self.spreads))
        self.verified = report.passed
        return report

    def __len__(self):
        return len(self.spreads)

    def __iter__(self):
        return iter(self.spreads)

    def __getitem__(self, i: int) -> Spread:
        return self.spreads[i]

    def __repr__(self):
        return "SpreadFamily({}, {} spreads of G_{}({},{}))".format(self.construction, len(self), self.q, self.n, self.k)


def _require(report: oracle.VerificationReport, what: str):
    if not report.passed:
        raise PostCheckError("{} failed: {}".format(what, ", ".join(check.name for check in report.failures)), report)


def classify_type(y: linalg.Subspace, k: int) -> SubspaceType:
    meet = linalg.tail_meet_dim(y, k)
    if meet == 0:
        return SubspaceType.a
    if meet == y.dim:
        return SubspaceType.c
    if meet == 1:
        return SubspaceType.b
    return SubspaceType.other


def expected_type_counts(q: int, k: int) -> TypeCensus:
    """Closed forms for Types A, B and C in G_q(2k, k); Other is what remains."""
    points = (q ** k - 1) // (q - 1)
    a = q ** (k * k)
    b = points * points * q ** ((k - 1) * (k - 1)) if k > 1 else 0
    c = 1
    return TypeCensus(a, b, c, linalg.gaussian_binomial(2 * k, k, q) - a - b - c)


def count_types(q, k: int) -> TypeCensus:
    field = gf.as_field(q)
    counts = Counter()
    members = linalg.enumerate_grassmannian(2 * k, k, field)
    total = linalg.gaussian_binomial(2 * k, k, field.order)
    for y in env.progress_bar(members, desc="Classifying", position=0, unit=" subspace", total=total):
        counts[classify_type(y, k)] += 1
    census = TypeCensus(*(counts[t] for t in SubspaceType))
    logger.info("Type census of G_%s(%s,%s): %s", field.order, 2 * k, k, census)
    return census


def reverse_code(members, k: int) -> list:
    """Swap the two k-halves of every vector of every member."""
    return [linalg.swap_halves(y, k) for y in members]


def first_half_projection(y: linalg.Subspace, k: int) -> linalg.Subspace:
    return linalg.subspace_from_generators(y.matrix[:, :k], y.field, k)


def type_b_structure_holds(y: linalg.Subspace, k: int) -> bool:
    """For a Type B member meeting U in span(z): the vectors sharing a nonzero first half differ by multiples of z.

    Over F_2 this says every first half appears exactly twice, on second halves y and y + z.
    """
    q = y.q
    vectors = y.vectors().view(np.ndarray)
    heads = vectors[:, :k] @ linalg.code_weights(q, k)
    in_u = vectors[heads == 0]
    if len(in_u) != q:
        return False
    z = y.field.gf(in_u[np.flatnonzero(in_u.any(axis=1))[0], k:])
    line = {tuple((z * y.field.gf(c)).view(np.ndarray).tolist()) for c in range(q)}
    for head in np.unique(heads[heads != 0]):
        tails = y.field.gf(vectors[heads == head][:, k:])
        if len(tails) != q:
            return False
        differences = {tuple((tail - tails[0]).view(np.ndarray).tolist()) for tail in tails}
        if differences != line:
            return False
    return True


def diagonal_ratio(y: linalg.Subspace, k: int):
    """beta if Y = {(x, beta x)} for a nonzero beta in F_(q^k), else None."""
    if y.n != 2 * k or y.pivots != tuple(range(k)):
        return None
    ext = gf.extension_of_degree(y.field, k)
    tails = np.array([row[k:] for row in y.rows], dtype=np.int64)
    images = ext.values_of(tails)
    beta = ext.big(images[0])
    if not beta:
        return None
    for i, image in enumerate(images):
        if int(image) != (beta * ext.big(ext.basis[i])).value:
            return None
    return beta


@functools.lru_cache(maxsize=None)
def base_partition(field: gf.FieldSpec, k: int) -> tuple:
    """The (k x k, delta = k - 1) Gabidulin code and the parallel classes of its lifting."""
    code = rankmetric.gabidulin_build(k, k, k - 1, field)
    return code, rankmetric.partition_parallel_classes(rankmetric.lift_code(code))


def build_base_code(field: gf.FieldSpec, k: int, skip: int = 0) -> tuple:
    """A spread made of one parallel class of the lifted (2k, k, k - 1) code together with V_0.

    Classes are tried in index order, leaving out the class holding lift(0)
    and the first `skip` classes that pass; returns the spread and the index
    of the class used.
    """
    if k < 2:
        raise ConstructionParameterError("the base code needs k >= 2, got {}".format(k))
    code, partition = base_partition(field, k)
    v0 = linalg.tail_subspace(field, 2 * k, k)
    axis = linalg.axis_subspace(field, 2 * k, k)
    report = oracle.VerificationReport("base code")
    for index in range(len(partition)):
        if index == code.class_of(0):
            continue
        members = list(partition[index]) + [v0]
        report = oracle.is_spread(members, 2 * k, field.order, k)
        # a nonzero codeword of rank at least k - 1 meets the axis in at most a line
        if report.passed and all(linalg.meet_dim(y, axis) <= 1 for y in members[:-1]):
            if skip == 0:
                logger.info("Base code uses parallel class %s of %s", index, len(partition))
                return Spread(field, 2 * k, k, members, "base code"), index
            skip -= 1
        else:
            logger.debug("Parallel class %s rejected as base code", index)
    raise PostCheckError("no parallel class yields a base code", report)


def build_base_code_q2(k: int) -> Spread:
    return build_base_code(gf.field_new(2), k)[0]


def detect_case(rev_c, k: int) -> Case:
    """Case 2 with witness j when a member is {(x, alpha^j x)}, Case 1 otherwise."""
    for y in rev_c:
        beta = diagonal_ratio(y, k)
        if beta is not None:
            case = Case(2, gf.discrete_log(beta))
            logger.info("Reversed code has a diagonal member, %s", case)
            return case
    logger.info("Reversed code has no diagonal member, Case 1")
    return CASE_1


def _shear(field: gf.FieldSpec, k: int, case: Case):
    """sigma(x, y) = (x, y + x) in Case 1 and (x, y + x^2) in Case 2, on basis rows."""
    ext = gf.extension_of_degree(field, k)

    def sigma(m):
        data = m.view(np.ndarray).copy()
        heads = data[:, :k]
        if case.number == 1:
            added = heads
        else:
            squares = ext.big.gf(ext.values_of(heads)) ** 2
            added = ext.coords_of(squares.view(np.ndarray))
        data[:, k:] = (field.gf(data[:, k:]) + field.gf(added)).view(np.ndarray)
        return field.gf(data)

    return sigma


def apply_shear(y: linalg.Subspace, k: int, case: Case) -> linalg.Subspace:
    """Image of Y under sigma, checked point by point against the span of the image of its basis."""
    sigma = _shear(y.field, k, case)
    image = linalg.map_subspace(y, sigma)
    pointwise = linalg.mask_from_codes(sigma(y.vectors()).view(np.ndarray) @ linalg.code_weights(y.q, y.n), y.q ** y.n)
    if image.dim != y.dim or pointwise != image.mask:
        report = oracle.VerificationReport("shear")
        report.add("image is a subspace", False, {"member": y, "image": image})
        raise PostCheckError("sigma does not map {} onto a subspace".format(y), report)
    return image


def s0_report(s0: Spread, k: int) -> oracle.VerificationReport:
    """Post-checks of S_0: spread, census, no axis, one diagonal at most, distinct hyperplanes, Type B law."""
    field = s0.field
    report = oracle.VerificationReport("S_0 for k={}".format(k))
    report.extend(s0.verify())
    census = s0.census()
    report.add("census", census.a == 2 and census.b == 2 ** k - 1, {"census": census})
    axis = linalg.axis_subspace(field, 2 * k, k)
    report.add("no axis member", axis not in s0, axis)
    diagonals = [y for y in s0 if diagonal_ratio(y, k) is not None]
    report.add("at most one diagonal", len(diagonals) <= 1, diagonals)
    report.extend(hyperplane_report(s0, k))
    report.extend(type_b_report(s0, k))
    return report


def hyperplane_report(spread: Spread, k: int) -> oracle.VerificationReport:
    report = oracle.VerificationReport("Type B hyperplanes")

    def distinct():
        seen = {}
        for y in spread:
            if classify_type(y, k) == SubspaceType.b:
                plane = first_half_projection(y, k)
                if plane in seen:
                    return False, [seen[plane], y]
                seen[plane] = y
        return True, None

    report.run("distinct first-half hyperplanes", distinct)
    return report


def type_b_report(spread: Spread, k: int) -> oracle.VerificationReport:
    report = oracle.VerificationReport("Type B structure")
    bad = next((y for y in spread if classify_type(y, k) == SubspaceType.b and not type_b_structure_holds(y, k)), None)
    report.add("Type B structure", bad is None, bad)
    return report


def build_s0(rev_c, case: Case, k: int = None) -> Spread:
    members = list(rev_c)
    k = k or members[0].n // 2
    field = members[0].field
    if field.order != 2:
        raise ConstructionParameterError("S_0 is defined over F_2, not {}".format(field))
    s0 = Spread(field, 2 * k, k, [apply_shear(y, k, case) for y in members], "S_0 case {}".format(case.number))
    _require(s0_report(s0, k), "S_0")
    logger.info("Built and verified %s", s0)
    return s0


def scale_spread(spread: Spread, i: int) -> Spread:
    """S_i: every member under (x, y) -> (x, alpha^i y), alpha primitive in F_(q^k)."""
    k = spread.k
    ext = gf.extension_of_degree(spread.field, k)
    if not 0 <= i <= ext.big.order - 2:
        raise ConstructionParameterError("i={} outside [0, {}]".format(i, ext.big.order - 2))
    beta = ext.big.primitive ** i
    members = [linalg.scale_subspace(y, beta, linalg.Half.tail, k) for y in spread]
    return Spread(spread.field, spread.n, k, members, "S_{}".format(i))


def trivial_family(field: gf.FieldSpec, n: int, k: int, construction: str) -> SpreadFamily:
    """The single spread of G_q(n, 1), or {F_q^n} when k = n."""
    if k == n:
        members = [linalg.coordinate_subspace(field, n, range(n))]
    else:
        members = list(linalg.enumerate_grassmannian(n, 1, field))
    family = SpreadFamily(field, n, k, [Spread(field, n, k, members, "trivial")], construction)
    _require(family.verify(), "trivial family")
    return family


def build_family_q2_2k(k: int) -> SpreadFamily:
    """2^k - 1 pairwise disjoint spreads of G_2(2k, k)."""
    field = gf.field_new(2)
    if k < 1:
        raise ConstructionParameterError("k must be positive, got {}".format(k))
    if k == 1:
        return trivial_family(field, 2, 1, "q2-2k")

    skip = 0
    while True:
        base, class_index = build_base_code(field, k, skip)
        rev_c = reverse_code(base, k)
        case = detect_case(rev_c, k)
        try:
            s0 = build_s0(rev_c, case, k)
            spreads = [s0] + [scale_spread(s0, i) for i in range(1, 2 ** k - 1)]
            family = SpreadFamily(field, 2 * k, k, spreads, "q2-2k", {
                "case": case.number, "witness": case.witness, "base class": class_index})
            _require(family_report(family), "family")
        except PostCheckError as err:
            logger.warning("Base class %s failed: %s", class_index, err)
            skip += 1
            continue
        logger.info("Built %s", family)
        return family


def family_report(family: SpreadFamily) -> oracle.VerificationReport:
    """Spreads, pairwise disjointness, census invariance and Type B structure across the family."""
    report = family.verify()
    k = family.k
    censuses = [spread.census() for spread in family]
    report.add("census preserved", all(c == censuses[0] for c in censuses), {"censuses": censuses})
    for i, spread in enumerate(family):
        report.extend(type_b_report(spread, k), prefix="spread {}".format(i))
    return report


def build_two_spreads_q(q, k: int) -> SpreadFamily:
    """Two disjoint spreads of G_q(2k, k) for q > 2."""
    field = gf.as_field(q)
    if field.order <= 2 or k < 2:
        raise ConstructionParameterError("two-spread construction needs q > 2 and k >= 2, got q={} k={}".format(field.order, k))
    base, class_index = build_base_code(field, k)
    rev_c = Spread(field, 2 * k, k, reverse_code(base, k), "reversed base code")
    census = rev_c.census()
    expected_b = (field.order ** k - 1) // (field.order - 1)
    report = rev_c.verify()
    report.add("reversed census", census.b == expected_b and census.a == len(rev_c) - expected_b, {"census": census})
    _require(report, "reversed base code")

    type_a = {y for y in rev_c if classify_type(y, k) == SubspaceType.a}
    partition = base_partition(field, k)[1]
    second_index = next((i for i, members in enumerate(partition) if not type_a.intersection(members)), None)
    if second_index is None:
        raise PostCheckError("every parallel class meets the reversed code", report)
    v0 = linalg.tail_subspace(field, 2 * k, k)
    second = Spread(field, 2 * k, k, list(partition[second_index]) + [v0], "class {} with V_0".format(second_index))
    report = second.verify()
    census = second.census()
    report.add("second census", census == TypeCensus(field.order ** k, 0, 1, 0), {"census": census})
    _require(report, "second spread")

    family = SpreadFamily(field, 2 * k, k, [rev_c, second], "q-two", {
        "base class": class_index, "second class": second_index})
    _require(family.verify(), "two spreads")
    logger.info("Built %s", family)
    return family
