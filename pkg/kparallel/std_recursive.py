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

"""Subspace transversal designs and the recursive spread-family extension.

U is always the span of the last n - k coordinates of F_q^n. The blocks of
a design are U-transversal k-subspaces (Y ∩ U = 0) and its groups are the
sets V_X of vectors whose first k coordinates are a nonzero multiple of a
projective point X.
"""

from kparallel import constants
from kparallel import constructions
from kparallel import gf
from kparallel import linalg
from kparallel import oracle
from kparallel import rankmetric

import logging

logger = logging.getLogger(constants.LOGGER_NAME)


class DesignError(Exception):
    """Base class for exceptions."""
    pass


class DesignParameterError(DesignError):
    """Parameters outside the range a design or extension covers."""
    pass


class DesignVerificationError(DesignError):
    """A built design or family failed verification."""

    def __init__(self, message: str, report: oracle.VerificationReport):
        super().__init__(message)
        self.report = report


class PartialGrassmannian:
    """k-subspaces of F_q^(n1) not contained in U, dim U = n2."""

    def __init__(self, field: gf.FieldSpec, n1: int, n2: int, k: int):
        if not n1 > n2 >= k:
            raise DesignParameterError("need n1 > n2 >= k, got n1={} n2={} k={}".format(n1, n2, k))
        self.field = field
        self.n1 = n1
        self.n2 = n2
        self.k = k
        self.u = linalg.tail_subspace(field, n1, n1 - n2)

    def __contains__(self, y: linalg.Subspace) -> bool:
        return y.dim == self.k and not linalg.is_subset(y, self.u)

    def is_transversal(self, y: linalg.Subspace) -> bool:
        return linalg.tail_meet_dim(y, self.n1 - self.n2) == 0

    def transversal_count(self) -> int:
        return linalg.transversal_count(self.n1, self.n1 - self.n2, self.k, self.field.order)

    def transversal_members(self):
        return linalg.enumerate_transversal(self.n1, self.n1 - self.n2, self.k, self.field)


class SubspaceTransversalDesign:
    """Resolvable STD_q(t, k, m) on the points of F_q^(k+m) outside U."""

    def __init__(self, field: gf.FieldSpec, k: int, m: int, t: int, blocks: list, classes: list):
        self.field = field
        self.k = k
        self.m = m
        self.n = k + m
        self.t = t
        self.groups = linalg.projective_points(field, k)
        self.blocks = blocks
        self.classes = classes

    @property
    def q(self) -> int:
        return self.field.order

    @property
    def group_size(self) -> int:
        return self.q ** self.m

    def verify(self) -> oracle.VerificationReport:
        return oracle.verify_std(self)

    def __repr__(self):
        return "STD_{}({},{},{}) with {} blocks in {} classes".format(self.q, self.t, self.k, self.m, len(self.blocks), len(self.classes))


def build_std(q, k: int, m: int, t: int, verify: bool = True) -> SubspaceTransversalDesign:
    """Blocks are the lifted (k + m, k, k - t + 1) Gabidulin code, classes its parallel classes."""
    field = gf.as_field(q)
    if not 1 <= t <= k <= m:
        raise DesignParameterError("need 1 <= t <= k <= m, got t={} k={} m={}".format(t, k, m))
    code = rankmetric.gabidulin_build(k, m, k - t + 1, field, verify=verify)
    partition = rankmetric.partition_parallel_classes(rankmetric.lift_code(code, verify=verify), verify=verify)
    design = SubspaceTransversalDesign(field, k, m, t, list(partition.code.codewords()), [list(c) for c in partition])
    logger.info("Built %s", design)
    if verify:
        report = design.verify()
        if not report.passed:
            raise DesignVerificationError("{} failed its axioms".format(design), report)
    return design


def partial_parallelism(q, n1: int, k: int, verify: bool = True) -> list:
    """Parallel classes partitioning the U-transversal k-subspaces of F_q^(n1), dim U = n1 - k.

    Each class covers the vectors of F_q^(n1) outside U exactly once.
    """
    field = gf.as_field(q)
    if n1 < 2 * k:
        raise DesignParameterError("need n1 >= 2k, got n1={} k={}".format(n1, k))
    design = build_std(field, k, n1 - k, k, verify=False)
    classes = design.classes
    if verify:
        grassmannian = PartialGrassmannian(field, n1, n1 - k, k)
        report = oracle.VerificationReport("partial parallelism of G_{}({},{},{})".format(field.order, n1, n1 - k, k))
        for i, members in enumerate(classes):
            report.extend(oracle.exact_cover_outside(members, n1, k, field.order), prefix="class {}".format(i))
        report.extend(oracle.pairwise_disjoint(classes))

        def covers_transversal():
            blocks = {y for members in classes for y in members}
            if len(blocks) != grassmannian.transversal_count():
                return False, {"blocks": len(blocks), "transversal subspaces": grassmannian.transversal_count()}
            missing = next((y for y in grassmannian.transversal_members() if y not in blocks), None)
            return missing is None, missing

        report.run("classes cover transversal subspaces", covers_transversal)
        if not report.passed:
            raise DesignVerificationError("partial parallelism failed verification", report)
    logger.info("Partial parallelism of G_%s(%s,%s,%s) has %s classes", field.order, n1, n1 - k, k, len(classes))
    return classes


def recursive_extend(family: constructions.SpreadFamily, q, n: int, k: int) -> constructions.SpreadFamily:
    """Pair spread i of G_q(n - k, k), embedded in U, with parallel class i of the partial parallelism."""
    field = gf.as_field(q)
    if n % k or n < 2 * k or family.n != n - k or family.k != k:
        raise DesignParameterError("cannot extend {} to G_{}({},{})".format(family, field.order, n, k))
    classes = partial_parallelism(field, n, k)
    if len(family) > len(classes):
        raise DesignParameterError("{} spreads but only {} parallel classes".format(len(family), len(classes)))
    spreads = []
    for i, spread in enumerate(family):
        members = list(classes[i]) + [linalg.embed_tail(y, n) for y in spread]
        spreads.append(constructions.Spread(field, n, k, members, "class {} with {}".format(i, spread.provenance)))
    extended = constructions.SpreadFamily(field, n, k, spreads, family.construction, dict(family.metadata))
    extended.metadata["extended from"] = family.n
    report = extended.verify()
    if not report.passed:
        raise DesignVerificationError("extension to G_{}({},{}) failed".format(field.order, n, k), report)
    logger.info("Extended to %s", extended)
    return extended


def build_family(q, n: int, k: int) -> constructions.SpreadFamily:
    """Largest family these constructions give in G_q(n, k): 2^k - 1 spreads for q = 2, two for q > 2."""
    field = gf.as_field(q)
    if k < 1 or n < k or n % k:
        raise DesignParameterError("need k | n and n >= k, got n={} k={}".format(n, k))
    if k == 1 or n == k:
        return constructions.trivial_family(field, n, k, "trivial")
    if field.order == 2:
        family = constructions.build_family_q2_2k(k)
    else:
        family = constructions.build_two_spreads_q(field, k)
    for step in range(3 * k, n + 1, k):
        family = recursive_extend(family, field, step, k)
    return family


def family_size(q: int, n: int, k: int) -> int:
    """Number of spreads build_family returns for G_q(n, k); 0 when k does not divide n."""
    if k < 1 or n < k or n % k:
        return 0
    if k == 1 or n == k:
        return 1
    return 2 ** k - 1 if q == 2 else 2
