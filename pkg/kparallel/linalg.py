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

"""Vectors, matrices and canonical subspaces over F_q.

Vectors and matrices are galois FieldArrays of the base field. A vector of
F_q^n also has an integer code, sum v_i q^(n-1-i), with the first coordinate
most significant; a vector whose first k coordinates vanish therefore has a
code below q^(n-k). Subspaces are kept as their RREF basis, which is
canonical, and carry a lazily built bitmask over the codes of their vectors.
"""

from kparallel import constants
from kparallel import gf

import functools
import itertools
import logging
from collections import namedtuple
from enum import Enum

import numpy as np

logger = logging.getLogger(constants.LOGGER_NAME)


class LinalgError(Exception):
    """Base class for exceptions."""
    pass


class AmbientMismatchError(LinalgError):
    """Operands live in different ambient spaces."""
    pass


class EnumerationBoundError(LinalgError):
    """An enumeration would exceed MAX_ENUMERATION items."""
    pass


class ZeroScalarError(LinalgError):
    """Scaling by zero does not preserve dimension."""
    pass


class Half(Enum):
    head = "HEAD"
    tail = "TAIL"

    def __str__(self):
        return self.value


GroupLabel = namedtuple("GroupLabel", ["point"])
ZERO_GROUP = GroupLabel(point=None)


def gaussian_binomial(n: int, k: int, q: int) -> int:
    if k < 0 or k > n:
        return 0
    numerator = 1
    denominator = 1
    for i in range(k):
        numerator *= q ** (n - i) - 1
        denominator *= q ** (k - i) - 1
    return numerator // denominator


def to_projective(n: int, k: int) -> tuple:
    """Vector-space indices (n, k) to PG indices of the (k-1)-spaces of PG(n-1, q)."""
    return n - 1, k - 1


def from_projective(n: int, k: int) -> tuple:
    return n + 1, k + 1


def _as_array(field: gf.FieldSpec, data) -> np.ndarray:
    if isinstance(data, np.ndarray):
        return data.view(np.ndarray).astype(np.int64)
    return np.array(data, dtype=np.int64)


def vector(field: gf.FieldSpec, coords):
    return field.gf(_as_array(field, coords).reshape(-1))


def matrix(field: gf.FieldSpec, rows, cols: int = None):
    data = _as_array(field, rows)
    if cols is not None:
        data = data.reshape(-1, cols)
    return field.gf(data)


def vector_code(v) -> int:
    q = type(v).order
    code = 0
    for c in v.view(np.ndarray).tolist():
        code = code * q + c
    return code


def vector_from_code(field: gf.FieldSpec, n: int, code: int):
    q = field.order
    coords = []
    for _ in range(n):
        code, digit = divmod(code, q)
        coords.append(digit)
    return field.gf(coords[::-1])


def code_weights(q: int, n: int) -> np.ndarray:
    return q ** np.arange(n - 1, -1, -1, dtype=np.int64)


@functools.lru_cache(maxsize=None)
def coefficient_table(q: int, d: int) -> np.ndarray:
    """All q^d coefficient tuples of length d, in lexicographic order."""
    return np.array(list(itertools.product(range(q), repeat=d)), dtype=np.int64).reshape(q ** d, d)


def mask_from_codes(codes, size: int) -> int:
    bits = np.zeros(size, dtype=np.uint8)
    bits[np.asarray(codes, dtype=np.int64)] = 1
    return int.from_bytes(np.packbits(bits, bitorder="little").tobytes(), "little")


def popcount(mask: int) -> int:
    return mask.bit_count()


def log_q(value: int, q: int) -> int:
    """Exponent of an exact power of q; 0 for values below q."""
    exponent = 0
    while value >= q:
        value //= q
        exponent += 1
    return exponent


def rref(m) -> tuple:
    """Reduced row echelon form of a FieldArray matrix and its rank."""
    if m.shape[0] == 0:
        return m.copy(), 0
    reduced = m.row_reduce()
    rank = int(np.count_nonzero(reduced.view(np.ndarray).any(axis=1)))
    return reduced, rank


def rank(m) -> int:
    return rref(m)[1]


class Subspace:
    """A subspace of F_q^n, stored as its RREF basis rows.

    Two Subspace values are equal iff their RREF rows are identical. Ordering
    is lexicographic on (n, rows), which is also the certificate order.
    """

    __slots__ = ("field", "n", "rows", "pivots", "_codes", "_mask")

    def __init__(self, field: gf.FieldSpec, n: int, rows: tuple, pivots: tuple = None):
        self.field = field
        self.n = n
        self.rows = rows
        self.pivots = pivots if pivots is not None else tuple(next(i for i, c in enumerate(row) if c) for row in rows)
        self._codes = None
        self._mask = None

    @property
    def q(self) -> int:
        return self.field.order

    @property
    def dim(self) -> int:
        return len(self.rows)

    @property
    def matrix(self):
        return self.field.gf(np.array(self.rows, dtype=np.int64).reshape(self.dim, self.n))

    def vectors(self):
        """All q^dim vectors, in the order of coefficient_table."""
        if self.dim == 0:
            return self.field.gf.Zeros((1, self.n))
        return self.field.gf(coefficient_table(self.q, self.dim)) @ self.matrix

    def codes(self) -> np.ndarray:
        if self._codes is None:
            self._codes = self.vectors().view(np.ndarray) @ code_weights(self.q, self.n)
        return self._codes

    @property
    def mask(self) -> int:
        if self._mask is None:
            self._mask = mask_from_codes(self.codes(), self.q ** self.n)
        return self._mask

    def to_list(self) -> list:
        return [list(row) for row in self.rows]

    def __contains__(self, v) -> bool:
        return contains(self, v)

    def __eq__(self, other):
        return isinstance(other, Subspace) and self.field == other.field and self.n == other.n and self.rows == other.rows

    def __hash__(self):
        return hash((self.n, self.rows))

    def __lt__(self, other):
        return (self.n, self.rows) < (other.n, other.rows)

    def __repr__(self):
        return "Subspace(q={}, n={}, rows={})".format(self.q, self.n, [
            "".join(str(c) for c in row) if self.q <= 10 else list(row) for row in self.rows])


def _check_ambient(x: Subspace, y: Subspace):
    if x.field != y.field or x.n != y.n:
        raise AmbientMismatchError("{} and {} do not share an ambient space".format(x, y))


def _from_reduced(field: gf.FieldSpec, n: int, reduced, rank: int) -> Subspace:
    rows = tuple(map(tuple, reduced.view(np.ndarray)[:rank].tolist()))
    return Subspace(field, n, rows)


def subspace_from_generators(vs, field: gf.FieldSpec, n: int = None) -> Subspace:
    """Canonical span of the given vectors (rows of a matrix or a sequence of vectors)."""
    data = _as_array(field, vs)
    if n is None:
        n = data.shape[-1]
    reduced, r = rref(field.gf(data.reshape(-1, n)))
    return _from_reduced(field, n, reduced, r)


def zero_subspace(field: gf.FieldSpec, n: int) -> Subspace:
    return Subspace(field, n, ())


def coordinate_subspace(field: gf.FieldSpec, n: int, columns) -> Subspace:
    rows = tuple(tuple(1 if c == col else 0 for c in range(n)) for col in sorted(columns))
    return Subspace(field, n, rows)


def axis_subspace(field: gf.FieldSpec, n: int, k: int) -> Subspace:
    """{(x, 0)}: span of the first k coordinates."""
    return coordinate_subspace(field, n, range(k))


def tail_subspace(field: gf.FieldSpec, n: int, k: int) -> Subspace:
    """U = V_0: span of the last n - k coordinates."""
    return coordinate_subspace(field, n, range(k, n))


def meet_dim(x: Subspace, y: Subspace) -> int:
    _check_ambient(x, y)
    if x.dim == 0 or y.dim == 0:
        return 0
    stacked = np.vstack([x.matrix.view(np.ndarray), y.matrix.view(np.ndarray)])
    return x.dim + y.dim - rank(x.field.gf(stacked))


def tail_meet_dim(y: Subspace, k: int) -> int:
    """dim(Y ∩ U) for U the span of the last n - k coordinates; read off the pivots."""
    return sum(1 for p in y.pivots if p >= k)


def intersect(x: Subspace, y: Subspace) -> Subspace:
    _check_ambient(x, y)
    if x.dim == 0 or y.dim == 0:
        return zero_subspace(x.field, x.n)
    stacked = x.field.gf(np.vstack([x.matrix.view(np.ndarray), y.matrix.view(np.ndarray)]))
    relations = stacked.left_null_space()
    if relations.shape[0] == 0:
        return zero_subspace(x.field, x.n)
    return subspace_from_generators(relations[:, :x.dim] @ x.matrix, x.field, x.n)


def subspace_sum(x: Subspace, y: Subspace) -> Subspace:
    _check_ambient(x, y)
    stacked = np.vstack([np.array(x.rows, dtype=np.int64).reshape(x.dim, x.n),
                         np.array(y.rows, dtype=np.int64).reshape(y.dim, y.n)])
    return subspace_from_generators(stacked, x.field, x.n)


def contains(x: Subspace, v) -> bool:
    v = vector(x.field, v)
    if len(v) != x.n:
        raise AmbientMismatchError("vector of length {} tested against a subspace of F_q^{}".format(len(v), x.n))
    return (x.mask >> vector_code(v)) & 1 == 1


def is_subset(x: Subspace, y: Subspace) -> bool:
    _check_ambient(x, y)
    return x.mask & ~y.mask == 0


def subspace_distance(x: Subspace, y: Subspace) -> int:
    return x.dim + y.dim - 2 * meet_dim(x, y)


def map_subspace(y: Subspace, linear_map) -> Subspace:
    """Image of Y under an F_q-linear map given on basis rows.

    `linear_map` takes and returns a FieldArray of shape (dim, n).
    """
    if y.dim == 0:
        return y
    return subspace_from_generators(linear_map(y.matrix), y.field, y.n)


def graph_subspace(field: gf.FieldSpec, a) -> Subspace:
    """{(x, xA) : x in F_q^k} for a k x ell matrix A, the row space of [I_k | A]."""
    data = _as_array(field, a)
    k, ell = data.shape
    rows = tuple(map(tuple, np.concatenate([np.eye(k, dtype=np.int64), data], axis=1).tolist()))
    return Subspace(field, k + ell, rows, tuple(range(k)))


def embed_tail(y: Subspace, n: int) -> Subspace:
    """Coordinate-suffix embedding of a subspace of F_q^(n') into F_q^n."""
    shift = n - y.n
    if shift < 0:
        raise AmbientMismatchError("cannot embed F_q^{} into F_q^{}".format(y.n, n))
    rows = tuple((0,) * shift + row for row in y.rows)
    return Subspace(y.field, n, rows, tuple(p + shift for p in y.pivots))


def swap_halves(y: Subspace, k: int) -> Subspace:
    """Image under (x, y) -> (y, x) on F_q^(2k)."""
    if y.n != 2 * k:
        raise AmbientMismatchError("swapping halves needs n = 2k, got n={} k={}".format(y.n, k))
    return map_subspace(y, lambda m: np.concatenate([m[:, k:], m[:, :k]], axis=1))


def _grassmannian_count_check(count: int, what: str):
    if count > constants.MAX_ENUMERATION:
        raise EnumerationBoundError("{} has {} members, above the bound of {}".format(what, count, constants.MAX_ENUMERATION))


def _enumerate_rref(field: gf.FieldSpec, n: int, k: int, pivot_limit: int):
    q = field.order
    for pivots in itertools.combinations(range(pivot_limit), k):
        pivot_set = set(pivots)
        free = [(r, c) for r, p in enumerate(pivots) for c in range(p + 1, n) if c not in pivot_set]
        template = [[0] * n for _ in range(k)]
        for r, p in enumerate(pivots):
            template[r][p] = 1
        for values in itertools.product(range(q), repeat=len(free)):
            for (r, c), value in zip(free, values):
                template[r][c] = value
            yield Subspace(field, n, tuple(map(tuple, template)), pivots)


def enumerate_grassmannian(n: int, k: int, field: gf.FieldSpec):
    """Every k-subspace of F_q^n exactly once, by pivot set then free entries."""
    if not 0 <= k <= n:
        raise AmbientMismatchError("no {}-dimensional subspaces in F_q^{}".format(k, n))
    _grassmannian_count_check(gaussian_binomial(n, k, field.order), "G_{}({},{})".format(field.order, n, k))
    return _enumerate_rref(field, n, k, n)


def transversal_count(n: int, k: int, t: int, q: int) -> int:
    return q ** (t * (n - k)) * gaussian_binomial(k, t, q)


def enumerate_transversal(n: int, k: int, t: int, field: gf.FieldSpec):
    """t-subspaces Y of F_q^n with Y ∩ U = 0, U the span of the last n - k coordinates.

    These are exactly the RREF matrices whose pivots all lie in the first k columns.
    """
    if not 0 <= t <= k <= n:
        raise AmbientMismatchError("no transversal {}-subspaces for n={} k={}".format(t, n, k))
    _grassmannian_count_check(transversal_count(n, k, t, field.order), "transversal {}-subspaces of F_{}^{}".format(t, field.order, n))
    return _enumerate_rref(field, n, t, k)


def split(v, k: int) -> tuple:
    return v[:k], v[k:]


def concat(x, y):
    return type(x)(np.concatenate([x.view(np.ndarray), y.view(np.ndarray)]))


def normalize_point(v) -> tuple:
    """Scale a nonzero vector so that its first nonzero coordinate is 1."""
    data = v.view(np.ndarray)
    lead = type(v)(int(data[np.flatnonzero(data)[0]]))
    return tuple((v / lead).view(np.ndarray).tolist())


def group_of(v, k: int) -> GroupLabel:
    head = v[:k]
    if not head.view(np.ndarray).any():
        return ZERO_GROUP
    return GroupLabel(point=normalize_point(head))


def projective_points(field: gf.FieldSpec, k: int) -> list:
    """Normalized representatives of G_q(k, 1), in enumeration order."""
    return [GroupLabel(point=s.rows[0]) for s in enumerate_grassmannian(k, 1, field)]


def scale_subspace(y: Subspace, beta: gf.FieldElement, position: Half = Half.tail, k: int = None) -> Subspace:
    """Multiply one coordinate half of every vector of Y by beta in F_(q^m).

    The head is the first k coordinates, the tail the remaining n - k; k
    defaults to n / 2. The half's coordinates are read in the basis
    1, x, ..., x^(m-1) of F_(q^m) over F_q, m being the half's length.
    """
    if not beta:
        raise ZeroScalarError("cannot scale a subspace by zero")
    k = y.n // 2 if k is None else k
    start, stop = (0, k) if position == Half.head else (k, y.n)
    ext = gf.extension(y.field, beta.spec)
    if ext.m != stop - start:
        raise AmbientMismatchError("{} acts on halves of length {}, not {}".format(beta.spec, ext.m, stop - start))

    def scale(m):
        data = m.view(np.ndarray).copy()
        values = ext.big.gf(ext.values_of(data[:, start:stop])) * ext.big.gf(beta.value)
        data[:, start:stop] = ext.coords_of(values.view(np.ndarray))
        return y.field.gf(data)

    return map_subspace(y, scale)
