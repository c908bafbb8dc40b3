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

"""Gabidulin rank-metric codes, their liftings and parallel classes.

A Gabidulin code with parameters (k, ell, delta) over F_q consists of the
k x ell matrices whose j-th row holds the F_q-coordinates of f(x^j), where
f(z) = sum_{i < K} f_i z^(q^i) with K = k - delta + 1 ranges over the
linearized polynomials with coefficients in F_(q^ell). Codewords are indexed
as tail_index * q^ell + f_0, the tail (f_1, ..., f_(K-1)) counted in
itertools.product order; codewords sharing a tail form one parallel class.
"""

from kparallel import constants
from kparallel import env
from kparallel import gf
from kparallel import linalg

import logging
from collections import namedtuple

import numpy as np

logger = logging.getLogger(constants.LOGGER_NAME)


class CodeError(Exception):
    """Base class for exceptions."""
    pass


class ParameterError(CodeError):
    """Code parameters outside the supported range."""
    pass


class CodeVerificationError(CodeError):
    """A built code does not have its claimed parameters."""
    pass


LiftedParameters = namedtuple("LiftedParameters", ["n", "size", "distance", "k"])


def mrd_dim_bound(k: int, ell: int, delta: int, q=2) -> int:
    """Largest F_q-dimension of a k x ell matrix code with minimum rank distance delta."""
    if not 1 <= delta <= min(k, ell):
        raise ParameterError("delta={} must lie in [1, min(k, ell)={}]".format(delta, min(k, ell)))
    return min(k * (ell - delta + 1), ell * (k - delta + 1))


def rank_distance(a, b) -> int:
    return linalg.rank(a - b)


def batch_ranks(field: gf.FieldSpec, matrices: np.ndarray) -> np.ndarray:
    """Ranks of a stack of k x ell matrices given as an (N, k, ell) integer array.

    rank A = k - log_q |{u : uA = 0}|; the kernel is counted by multiplying
    every u in F_q^k against a chunk of matrices at once.
    """
    q = field.order
    count, k, ell = matrices.shape
    probes = field.gf(linalg.coefficient_table(q, k))
    ranks = np.empty(count, dtype=np.int64)
    for start in range(0, count, constants.RANK_BATCH):
        block = matrices[start:start + constants.RANK_BATCH]
        size = block.shape[0]
        flat = field.gf(block.transpose(1, 0, 2).reshape(k, size * ell))
        products = (probes @ flat).view(np.ndarray).reshape(q ** k, size, ell)
        kernel = np.count_nonzero(~products.any(axis=2), axis=0)
        ranks[start:start + size] = k - np.rint(np.log(kernel) / np.log(q)).astype(np.int64)
    return ranks


class RankMetricCode:
    """Linear [k x ell, rho, delta]_q Gabidulin code."""

    def __init__(self, field: gf.FieldSpec, k: int, ell: int, delta: int):
        self.field = field
        self.k = k
        self.ell = ell
        self.delta = delta
        self.degree = k - delta + 1
        self.ext = gf.extension_of_degree(field, ell)
        self.points = [self.ext.big(value) for value in self.ext.basis[:k]]
        self.dimension = ell * self.degree
        self.size = field.order ** self.dimension
        self.class_size = field.order ** ell
        self.class_count = self.size // self.class_size
        self._matrices = None
        # row i holds the i-th q-power of every evaluation point
        self._evaluation = self.ext.big.gf([[int(gf.frobenius(point, field.e * i)) for point in self.points]
                                            for i in range(self.degree)])

    @property
    def q(self) -> int:
        return self.field.order

    def coefficients(self, indices) -> np.ndarray:
        """(N, K) array of the linearized-polynomial coefficients of the given codeword indices."""
        indices = np.asarray(indices, dtype=np.int64).reshape(-1)
        columns = [indices % self.class_size]
        tail = indices // self.class_size
        tail_columns = []
        for _ in range(self.degree - 1):
            tail_columns.append(tail % self.class_size)
            tail //= self.class_size
        columns.extend(reversed(tail_columns))
        return np.stack(columns, axis=1)

    def evaluate(self, indices) -> np.ndarray:
        """(N, k, ell) integer array of the codeword matrices."""
        values = self.ext.big.gf(self.coefficients(indices)) @ self._evaluation
        return self.ext.coords_of(values.view(np.ndarray))

    def codeword(self, index: int):
        return self.field.gf(self.evaluate([index])[0])

    def matrices(self) -> np.ndarray:
        if self._matrices is None:
            if self.size > constants.MAX_CODE_SIZE:
                raise ParameterError("{} codewords exceed the bound of {}".format(self.size, constants.MAX_CODE_SIZE))
            self._matrices = self.evaluate(np.arange(self.size))
        return self._matrices

    def class_of(self, index: int) -> int:
        return index // self.class_size

    def min_rank_distance(self) -> int:
        """Smallest rank of a nonzero codeword, which is the minimum distance of a linear code."""
        ranks = batch_ranks(self.field, self.matrices()[1:])
        return int(ranks.min()) if len(ranks) else self.k

    def verify(self):
        if self.size > constants.MRD_VERIFY_LIMIT:
            logger.warning("Skipping exhaustive rank check of %s, %s codewords exceed %s", self, self.size, constants.MRD_VERIFY_LIMIT)
            return
        found = self.min_rank_distance()
        if self.size > 1 and found != self.delta:
            raise CodeVerificationError("{} has minimum rank distance {}".format(self, found))
        logger.debug("Verified minimum rank distance %s of %s over %s codewords", self.delta, self, self.size)

    def __repr__(self):
        return "[{} x {}, {}, {}]_{} Gabidulin code".format(self.k, self.ell, self.dimension, self.delta, self.q)


def gabidulin_build(k: int, ell: int, delta: int, q=2, verify: bool = True) -> RankMetricCode:
    field = gf.as_field(q)
    if k < 1 or not k <= ell:
        raise ParameterError("Gabidulin codes here need 1 <= k <= ell, got k={} ell={}".format(k, ell))
    if not 1 <= delta <= k:
        raise ParameterError("delta={} must lie in [1, k={}]".format(delta, k))
    code = RankMetricCode(field, k, ell, delta)
    logger.info("Built %s with %s codewords", code, code.size)
    if code.dimension != mrd_dim_bound(k, ell, delta, field.order):
        raise CodeVerificationError("{} misses the MRD bound".format(code))
    if verify:
        code.verify()
    return code


def lift(a, field: gf.FieldSpec = None) -> linalg.Subspace:
    """Row space of [I_k | A]."""
    field = field or gf.field_of_order(type(a).order)
    return linalg.graph_subspace(field, a)


class LiftedCode:
    """The constant-dimension code {lift(A) : A in C} in G_q(k + ell, k)."""

    def __init__(self, source: RankMetricCode):
        self.source = source
        self.field = source.field
        self.k = source.k
        self.n = source.k + source.ell
        self._codewords = None

    @property
    def parameters(self) -> LiftedParameters:
        return LiftedParameters(self.n, self.source.size, 2 * self.source.delta, self.k)

    def __len__(self):
        return self.source.size

    def codeword(self, index: int) -> linalg.Subspace:
        if self._codewords is not None:
            return self._codewords[index]
        return lift(self.source.codeword(index), self.field)

    def codewords(self) -> list:
        """All lifted codewords by index, with their vector codes computed in one batch."""
        if self._codewords is None:
            matrices = self.source.matrices()
            q, k, ell = self.field.order, self.k, self.source.ell
            heads = linalg.coefficient_table(q, k)
            head_codes = heads @ linalg.code_weights(q, k)
            tails = (self.field.gf(heads) @ self.field.gf(matrices.transpose(1, 0, 2).reshape(k, -1))).view(np.ndarray)
            tail_codes = tails.reshape(q ** k, len(matrices), ell) @ linalg.code_weights(q, ell)
            codewords = []
            for i, a in enumerate(env.progress_bar(matrices, desc="Lifting", position=1, unit=" codeword")):
                subspace = linalg.graph_subspace(self.field, a)
                subspace._codes = head_codes * q ** ell + tail_codes[:, i]
                codewords.append(subspace)
            self._codewords = codewords
        return self._codewords

    def min_distance(self) -> int:
        codewords = self.codewords()
        q = self.field.order
        largest_meet = 0
        for i, x in enumerate(codewords):
            for y in codewords[i + 1:]:
                largest_meet = max(largest_meet, linalg.popcount(x.mask & y.mask))
        return 2 * self.k - 2 * linalg.log_q(largest_meet, q)

    def verify(self):
        if len(self) > constants.PAIRWISE_VERIFY_LIMIT:
            logger.debug("Skipping pairwise distance check of %s codewords", len(self))
            return
        found = self.min_distance()
        if len(self) > 1 and found != 2 * self.source.delta:
            raise CodeVerificationError("lifted {} has minimum subspace distance {}".format(self.source, found))
        logger.debug("Verified minimum subspace distance %s over %s lifted codewords", found, len(self))

    def __repr__(self):
        return "({}, {}, {}, {})_{} lifted code".format(*self.parameters, self.field.order)


def lift_code(code: RankMetricCode, verify: bool = True) -> LiftedCode:
    lifted = LiftedCode(code)
    logger.info("Lifted %s to %s", code, lifted)
    if verify:
        lifted.verify()
    return lifted


class ParallelClassPartition:
    """Codewords of a lifted code grouped by the tail of their polynomial.

    Every class holds q^ell codewords that together cover each vector with a
    nonzero first half exactly once.
    """

    def __init__(self, code: LiftedCode):
        self.code = code
        self.class_size = code.source.class_size
        codewords = code.codewords()
        self.classes = [codewords[start:start + self.class_size] for start in range(0, len(codewords), self.class_size)]

    def class_index(self, codeword_index: int) -> int:
        return codeword_index // self.class_size

    def __len__(self):
        return len(self.classes)

    def __getitem__(self, i: int) -> list:
        return self.classes[i]

    def __iter__(self):
        return iter(self.classes)


def covers_transversal_vectors(members: list, n: int, k: int, q: int) -> bool:
    """True iff the members cover every vector of F_q^n with a nonzero first k coordinates exactly once."""
    union = 0
    total = 0
    for member in members:
        union |= member.mask
        total += linalg.popcount(member.mask) - 1
    # codes below q^(n-k) are the vectors of U
    expected = ((1 << q ** n) - 1) ^ ((1 << q ** (n - k)) - 1) | 1
    return union == expected and total == q ** n - q ** (n - k)


def partition_parallel_classes(code: LiftedCode, verify: bool = True) -> ParallelClassPartition:
    partition = ParallelClassPartition(code)
    logger.info("Partitioned %s into %s parallel classes of %s", code, len(partition), partition.class_size)
    if verify:
        q = code.field.order
        for i, members in enumerate(env.progress_bar(partition, desc="Parallel classes", position=1, unit=" class")):
            if not covers_transversal_vectors(members, code.n, code.k, q):
                raise CodeVerificationError("parallel class {} of {} is not an exact cover".format(i, code))
    return partition
