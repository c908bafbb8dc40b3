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

"""Brute-force verification oracles.

Every oracle works from Subspace values and linalg primitives alone and
returns a VerificationReport. A failed check always carries a concrete
counterexample: a vector (as a tuple of coordinates), a subspace, or a pair
of them.
"""

from kparallel import constants
from kparallel import env
from kparallel import linalg

import logging
import time
from collections import Counter
from collections import namedtuple

import numpy as np

logger = logging.getLogger(constants.LOGGER_NAME)

Check = namedtuple("Check", ["name", "passed", "counterexample", "seconds"])


class VerificationReport:

    def __init__(self, subject: str):
        self.subject = subject
        self.checks = []

    def add(self, name: str, passed: bool, counterexample=None, seconds: float = 0.0):
        if not passed and counterexample is None:
            raise ValueError("failed check {} needs a counterexample".format(name))
        self.checks.append(Check(name, passed, None if passed else counterexample, seconds))
        logger.log(logging.DEBUG if passed else logging.WARNING, "%s: %s %s%s", self.subject, name,
                   "PASS" if passed else "FAIL", "" if passed else " ({})".format(counterexample))

    def run(self, name: str, check):
        """Time a callable returning (passed, counterexample) and record it."""
        started = time.perf_counter()
        passed, counterexample = check()
        self.add(name, passed, counterexample, time.perf_counter() - started)

    def extend(self, other, prefix: str = None):
        for check in other.checks:
            self.checks.append(check._replace(name="{}: {}".format(prefix, check.name)) if prefix else check)

    @property
    def passed(self) -> bool:
        return all(check.passed for check in self.checks)

    @property
    def failures(self) -> list:
        return [check for check in self.checks if not check.passed]

    def check(self, name: str) -> Check:
        return next(check for check in self.checks if check.name == name)

    def __repr__(self):
        return "VerificationReport({}, {})".format(self.subject, "PASS" if self.passed else "FAIL")


def digits(code: int, q: int, n: int) -> tuple:
    """Coordinates of the vector with the given code."""
    coords = []
    for _ in range(n):
        code, digit = divmod(code, q)
        coords.append(digit)
    return tuple(reversed(coords))


def _cover_counts(members, q: int, n: int) -> np.ndarray:
    counts = np.zeros(q ** n, dtype=np.int64)
    for member in members:
        if member.n == n:
            np.add.at(counts, member.codes(), 1)
    return counts


def _holder(members, code: int, skip=None):
    return next(member for member in members if member is not skip and (member.mask >> code) & 1)


def _check_cover(members, q: int, n: int, codes: np.ndarray):
    """Every vector in `codes` is covered exactly once; first offence as counterexample."""
    counts = _cover_counts(members, q, n)
    selected = counts[codes]
    if np.all(selected == 1):
        return True, None
    code = int(codes[np.flatnonzero(selected != 1)[0]])
    if counts[code] == 0:
        return False, {"uncovered": digits(code, q, n)}
    first = _holder(members, code)
    return False, {"covered twice": digits(code, q, n), "by": [first, _holder(members, code, skip=first)]}


def is_spread(members, n: int, q: int, k: int) -> VerificationReport:
    members = list(members)
    report = VerificationReport("spread of G_{}({},{})".format(q, n, k))

    def size():
        if len(members) * (q ** k - 1) == q ** n - 1:
            return True, None
        return False, {"members": len(members), "expected": (q ** n - 1) / (q ** k - 1)}

    def dimensions():
        bad = next((m for m in members if m.dim != k or m.n != n or m.q != q), None)
        return bad is None, bad

    def trivial_intersections():
        counts = _cover_counts(members, q, n)
        repeated = np.flatnonzero(counts[1:] > 1)
        if len(repeated) == 0:
            return True, None
        code = int(repeated[0]) + 1
        first = _holder(members, code)
        return False, [first, _holder(members, code, skip=first)]

    def cover():
        counts = _cover_counts(members, q, n)
        missing = np.flatnonzero(counts[1:] == 0)
        if len(missing) == 0:
            return True, None
        return False, digits(int(missing[0]) + 1, q, n)

    report.run("size", size)
    report.run("dimension", dimensions)
    report.run("pairwise trivial intersection", trivial_intersections)
    report.run("exact cover", cover)
    return report


def pairwise_disjoint(spreads) -> VerificationReport:
    """No subspace is a member of two spreads."""
    spreads = [list(spread) for spread in spreads]
    report = VerificationReport("family of {} spreads".format(len(spreads)))

    def disjoint():
        seen = {}
        for i, spread in enumerate(spreads):
            for member in spread:
                if member in seen and seen[member] != i:
                    return False, {"subspace": member, "spreads": [seen[member], i]}
                seen[member] = i
        return True, None

    report.run("pairwise disjoint", disjoint)
    return report


def group_codes(field, point: tuple, n: int, k: int) -> np.ndarray:
    """Codes of the vectors whose first k coordinates are a nonzero multiple of `point`."""
    q = field.order
    base = field.gf(list(point))
    heads = [linalg.vector_code(base * field.gf(c)) for c in range(1, q)]
    tails = np.arange(q ** (n - k), dtype=np.int64)
    return np.concatenate([head * q ** (n - k) + tails for head in heads])


def verify_std(design) -> VerificationReport:
    """Axioms of a resolvable subspace transversal design.

    `design` provides field, n, k, t, groups (GroupLabel values), blocks and
    classes (lists of blocks).
    """
    field, n, k, t = design.field, design.n, design.k, design.t
    q = field.order
    m = n - k
    report = VerificationReport("STD_{}({},{},{})".format(q, t, k, m))
    points = np.arange(q ** m, q ** n, dtype=np.int64)
    codes = [group_codes(field, group.point, n, k) for group in design.groups]
    masks = [(group, linalg.mask_from_codes(c, q ** n)) for group, c in zip(design.groups, codes)]

    def groups():
        if len(masks) != (q ** k - 1) // (q - 1):
            return False, {"groups": len(masks), "expected": (q ** k - 1) // (q - 1)}
        bad = next((group for group, mask in masks if linalg.popcount(mask) != (q - 1) * q ** m), None)
        return bad is None, bad

    def partition():
        counts = np.zeros(q ** n, dtype=np.int64)
        for c in codes:
            np.add.at(counts, c, 1)
        expected = np.zeros(q ** n, dtype=np.int64)
        expected[points] = 1
        offences = np.flatnonzero(counts != expected)
        if len(offences) == 0:
            return True, None
        return False, {"vector": digits(int(offences[0]), q, n), "groups": int(counts[offences[0]])}

    def transversal():
        bad = next((b for b in design.blocks if b.dim != k or b.n != n or linalg.tail_meet_dim(b, k) != 0), None)
        return bad is None, bad

    def meets_groups():
        for block in env.progress_bar(design.blocks, desc="Block against groups", position=1, unit=" block"):
            for group, mask in masks:
                if linalg.popcount(block.mask & mask) != q - 1:
                    return False, {"block": block, "group": group.point}
        return True, None

    def t_coverage():
        counter = Counter()
        shapes = list(linalg.enumerate_grassmannian(k, t, field)) if t < k else None
        for block in env.progress_bar(design.blocks, desc="t-subspaces", position=1, unit=" block"):
            if shapes is None:
                counter[block] += 1
                continue
            for shape in shapes:
                counter[linalg.subspace_from_generators(shape.matrix @ block.matrix, field, n)] += 1
        for subspace in linalg.enumerate_transversal(n, k, t, field):
            found = counter.pop(subspace, 0)
            if found != 1:
                return False, {"t-subspace": subspace, "blocks": found}
        if counter:
            return False, {"not transversal": next(iter(counter))}
        return True, None

    def resolvability():
        for i, members in enumerate(design.classes):
            passed, counterexample = _check_cover(members, q, n, points)
            if not passed:
                return False, {"class": i, "offence": counterexample}
        return True, None

    report.run("groups", groups)
    report.run("groups partition points", partition)
    report.run("blocks transversal", transversal)
    report.run("block meets each group once", meets_groups)
    report.run("t-subspaces in exactly one block", t_coverage)
    report.run("resolvability", resolvability)
    return report


def exact_cover_outside(members, n: int, k: int, q: int) -> VerificationReport:
    """Members cover every vector outside U (the span of the last n - k coordinates) exactly once."""
    report = VerificationReport("cover of F_{}^{} outside U".format(q, n))
    points = np.arange(q ** (n - k), q ** n, dtype=np.int64)
    members = list(members)
    report.run("exact cover outside U", lambda: _check_cover(members, q, n, points))
    return report
