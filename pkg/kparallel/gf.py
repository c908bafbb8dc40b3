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

"""Exact arithmetic in GF(p^e) and in towers F_{q^m} over F_q."""

from kparallel import constants

import functools
import itertools
import logging

import galois
import numpy as np

logger = logging.getLogger(constants.LOGGER_NAME)


class FieldError(Exception):
    """Base class for exceptions."""
    pass


class NotPrimeError(FieldError):
    """The requested characteristic is not a prime."""
    pass


class ReducibleModulusError(FieldError):
    """The modulus factors over the prime field."""
    pass


class MixedFieldError(FieldError):
    """Operands belong to different fields."""
    pass


class ZeroInverseError(FieldError, ZeroDivisionError):
    """Zero has no multiplicative inverse."""
    pass


class FieldSizeError(FieldError):
    """Field order above the supported bound, or a malformed modulus."""
    pass


class VectorLengthError(FieldError):
    """A coordinate tuple does not match the extension degree."""
    pass


class FieldSpec:
    """GF(p^e) with a fixed modulus and a designated primitive element.

    Elements are encoded as integers in [0, p^e): the base-p digits, lowest
    first, are the coefficients of the polynomial representative modulo
    `modulus`. `modulus` is stored low-to-high. `gf` is the backing galois
    field class, `alpha` the encoding of the smallest primitive element.
    """

    def __init__(self, p: int, e: int, modulus: tuple, alpha: int, gf):
        self.p = p
        self.e = e
        self.modulus = modulus
        self.alpha = alpha
        self.gf = gf

    @property
    def order(self) -> int:
        return self.p ** self.e

    @property
    def zero(self):
        return FieldElement(self, 0)

    @property
    def one(self):
        return FieldElement(self, 1)

    @property
    def primitive(self):
        return FieldElement(self, self.alpha)

    def __call__(self, value: int):
        return FieldElement(self, value)

    def elements(self):
        for value in range(self.order):
            yield FieldElement(self, value)

    def describe(self) -> dict:
        return {"p": self.p, "e": self.e, "modulus": list(self.modulus), "alpha": self.alpha}

    def __eq__(self, other):
        return isinstance(other, FieldSpec) and (self.p, self.e, self.modulus) == (other.p, other.e, other.modulus)

    def __hash__(self):
        return hash((self.p, self.e, self.modulus))

    def __repr__(self):
        return "GF({}^{})".format(self.p, self.e) if self.e > 1 else "GF({})".format(self.p)


class FieldElement:

    __slots__ = ("spec", "value")

    def __init__(self, spec: FieldSpec, value: int):
        value = int(value)
        if not 0 <= value < spec.order:
            raise FieldSizeError("{} is not an element encoding of {}".format(value, spec))
        self.spec = spec
        self.value = value

    def _peer(self, other) -> int:
        if not isinstance(other, FieldElement):
            raise TypeError("expected a FieldElement, got {!r}".format(other))
        if other.spec != self.spec:
            raise MixedFieldError("cannot combine elements of {} and {}".format(self.spec, other.spec))
        return other.value

    def _lift(self):
        return self.spec.gf(self.value)

    def __add__(self, other):
        return FieldElement(self.spec, self._lift() + self.spec.gf(self._peer(other)))

    def __sub__(self, other):
        return FieldElement(self.spec, self._lift() - self.spec.gf(self._peer(other)))

    def __mul__(self, other):
        return FieldElement(self.spec, self._lift() * self.spec.gf(self._peer(other)))

    def __truediv__(self, other):
        return self * other.inverse()

    def __neg__(self):
        return FieldElement(self.spec, -self._lift())

    def __pow__(self, exponent: int):
        exponent = int(exponent)
        if exponent < 0:
            return self.inverse() ** -exponent
        if self.value == 0:
            return FieldElement(self.spec, 1 if exponent == 0 else 0)
        # the multiplicative group is cyclic of order p^e - 1
        return FieldElement(self.spec, self._lift() ** (exponent % (self.spec.order - 1)))

    def inverse(self):
        if self.value == 0:
            raise ZeroInverseError("zero has no inverse in {}".format(self.spec))
        return FieldElement(self.spec, self._lift() ** -1)

    def __eq__(self, other):
        return isinstance(other, FieldElement) and self.spec == other.spec and self.value == other.value

    def __hash__(self):
        return hash((self.spec, self.value))

    def __int__(self):
        return self.value

    def __bool__(self):
        return self.value != 0

    def __repr__(self):
        return "{}({})".format(self.spec, self.value)


def default_modulus(p: int, e: int) -> tuple:
    """Lexicographically smallest primitive polynomial of degree e, low-to-high.

    Using a primitive modulus makes x itself the smallest primitive element for
    every desk-scale field, so the polynomial basis is also the alpha basis.
    """
    if e == 1:
        return (0, 1)
    poly = galois.primitive_poly(p, e, method="min")
    return tuple(int(c) for c in reversed(poly.coeffs))


def field_new(p: int, e: int = 1, modulus=None) -> FieldSpec:
    if p < 2 or not galois.is_prime(p):
        raise NotPrimeError("{} is not a prime".format(p))
    if e < 1 or p ** e > constants.MAX_FIELD_ORDER:
        raise FieldSizeError("GF({}^{}) is outside the supported range (order at most {})".format(p, e, constants.MAX_FIELD_ORDER))
    if modulus is None:
        modulus = default_modulus(p, e)
    return _build_field(p, e, tuple(int(c) for c in modulus))


def field_of_order(q: int) -> FieldSpec:
    """GF(q) for a prime power q, with the default modulus."""
    for p in range(2, q + 1):
        if q % p == 0:
            e = 0
            rest = q
            while rest % p == 0:
                rest //= p
                e += 1
            if rest != 1:
                raise NotPrimeError("{} is not a prime power".format(q))
            return field_new(p, e)
    raise NotPrimeError("{} is not a prime power".format(q))


@functools.lru_cache(maxsize=None)
def _build_field(p: int, e: int, modulus: tuple) -> FieldSpec:
    if len(modulus) != e + 1 or modulus[-1] != 1 or any(not 0 <= c < p for c in modulus):
        raise FieldSizeError("{} is not a monic degree {} polynomial over GF({})".format(modulus, e, p))
    if e == 1:
        gf = galois.GF(p)
    else:
        poly = galois.Poly(list(reversed(modulus)), field=galois.GF(p))
        if not poly.is_irreducible():
            raise ReducibleModulusError("{} is reducible over GF({})".format(poly, p))
        gf = galois.GF(p ** e, irreducible_poly=poly)
    alpha = next(value for value in range(1, gf.order)
                 if int(gf(value).multiplicative_order()) == gf.order - 1)
    logger.debug("Built GF(%s^%s) with modulus %s and alpha %s", p, e, modulus, alpha)
    return FieldSpec(p, e, modulus, alpha, gf)


def add(a: FieldElement, b: FieldElement) -> FieldElement:
    return a + b


def mul(a: FieldElement, b: FieldElement) -> FieldElement:
    return a * b


def neg(a: FieldElement) -> FieldElement:
    return -a


def inv(a: FieldElement) -> FieldElement:
    return a.inverse()


def power(a: FieldElement, exponent: int) -> FieldElement:
    return a ** exponent


def frobenius(a: FieldElement, i: int = 1) -> FieldElement:
    """a^(p^i); the map is additive and a^(p^e) = a."""
    return a ** (a.spec.p ** (i % a.spec.e))


def discrete_log(a: FieldElement) -> int:
    """Smallest j >= 0 with alpha^j = a."""
    if a.value == 0:
        raise ZeroInverseError("zero is not a power of alpha")
    return int(a.spec.gf(a.value).log(a.spec.gf(a.spec.alpha)))


class Extension:
    """F_{q^m} seen as the F_q-space F_q^m.

    Coordinates are taken in the basis 1, x, ..., x^(m-1), where x is the
    variable of the big field's modulus. F_q is embedded through the smallest
    root of its own modulus inside the big field. Coordinate tuples are
    integers in [0, q), lowest basis element first; `code` packs them as
    sum c_i q^i.
    """

    def __init__(self, base: FieldSpec, big: FieldSpec):
        if base.p != big.p or big.e % base.e:
            raise FieldError("{} is not an extension of {}".format(big, base))
        self.base = base
        self.big = big
        self.m = big.e // base.e
        q = base.order
        gf = big.gf

        self.embedding = self._embed_base()
        theta = gf(big.p) if big.e > 1 else gf(1)
        self.basis = [int(theta ** i) for i in range(self.m)]

        self.digits = np.array(list(itertools.product(range(q), repeat=self.m)), dtype=np.int64)[:, ::-1].copy()
        embedded = gf(self.embedding[self.digits])
        values = embedded @ gf(self.basis).reshape(self.m, 1)
        self.from_codes = values.view(np.ndarray).reshape(-1).astype(np.int64)
        if len(np.unique(self.from_codes)) != q ** self.m:
            raise FieldError("1, x, ..., x^{} is not a basis of {} over {}".format(self.m - 1, big, base))
        self.to_codes = np.empty(q ** self.m, dtype=np.int64)
        self.to_codes[self.from_codes] = np.arange(q ** self.m)
        logger.log(constants.FINEST, "Extension %s over %s uses basis %s and embedding %s", big, base, self.basis, self.embedding)

    def _embed_base(self) -> np.ndarray:
        if self.base.e == 1:
            return np.arange(self.base.p, dtype=np.int64)
        gf = self.big.gf
        roots = galois.Poly(list(reversed(self.base.modulus)), field=gf).roots()
        root = gf(min(int(r) for r in roots))
        table = []
        for value in range(self.base.order):
            image = gf(0)
            for j in range(self.base.e):
                image += gf((value // self.base.p ** j) % self.base.p) * root ** j
            table.append(int(image))
        return np.array(table, dtype=np.int64)

    def to_vector(self, a: FieldElement) -> tuple:
        if a.spec != self.big:
            raise MixedFieldError("{} is not an element of {}".format(a, self.big))
        return tuple(int(c) for c in self.digits[self.to_codes[a.value]])

    def from_vector(self, coords) -> FieldElement:
        coords = tuple(int(c) for c in coords)
        if len(coords) != self.m:
            raise VectorLengthError("expected {} coordinates over {}, got {}".format(self.m, self.base, len(coords)))
        q = self.base.order
        if any(not 0 <= c < q for c in coords):
            raise FieldSizeError("{} has entries outside {}".format(coords, self.base))
        code = sum(c * q ** i for i, c in enumerate(coords))
        return FieldElement(self.big, self.from_codes[code])

    def coords_of(self, values: np.ndarray) -> np.ndarray:
        """Vectorised to_vector over an array of big-field encodings; adds a trailing axis of length m."""
        return self.digits[self.to_codes[np.asarray(values, dtype=np.int64)]]

    def values_of(self, coords: np.ndarray) -> np.ndarray:
        """Vectorised from_vector over the trailing axis."""
        coords = np.asarray(coords, dtype=np.int64)
        weights = self.base.order ** np.arange(self.m, dtype=np.int64)
        return self.from_codes[coords @ weights]


@functools.lru_cache(maxsize=None)
def extension(base: FieldSpec, big: FieldSpec) -> Extension:
    return Extension(base, big)


def extension_of_degree(base: FieldSpec, m: int) -> Extension:
    """F_{q^m} over F_q with the default modulus for the big field."""
    return extension(base, field_new(base.p, base.e * m))


def to_vector(a: FieldElement, base: FieldSpec = None) -> tuple:
    """Coordinates of a over `base` (the prime field if omitted)."""
    return extension(base or field_new(a.spec.p), a.spec).to_vector(a)


def from_vector(coords, spec: FieldSpec, base: FieldSpec = None) -> FieldElement:
    return extension(base or field_new(spec.p), spec).from_vector(coords)


def as_field(q) -> FieldSpec:
    """Accept either a FieldSpec or a prime power."""
    return q if isinstance(q, FieldSpec) else field_of_order(q)
