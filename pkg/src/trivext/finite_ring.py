"""Finite commutative rings with identity and exact table-driven arithmetic.

Three kinds are enumerable: residue rings Z/nZ, direct products, and trivial
extensions A x| M (the last is defined in :mod:`trivext.trivial_extension`).
The ring of integers exists only as a marker consumed by :mod:`trivext.z_layer`.

Elements are plain python values: an ``int`` for Z/nZ, a pair ``(left, right)``
for products and ``(a, m)`` for trivial extensions. Internally every element
has an index in ``range(cardinality)``; index order is the lexicographic order
on coordinates, and every set-valued result is reported in that order.
"""

from dataclasses import dataclass
from functools import cached_property
from typing import Any

import numpy as np

from .errors import CardinalityCapExceeded, InvalidElement, InvalidRing, Unsupported

#: Largest ring that the ``make_*`` constructors accept unless told otherwise.
CARDINALITY_LIMIT = 4096


def _table_dtype(n: int):
    return np.int16 if n <= np.iinfo(np.int16).max else np.int32


class FiniteRing:
    """Shared behaviour of the enumerable ring kinds.

    Subclasses provide ``cardinality``, ``encode``, ``decode`` and
    ``_build_tables``.
    """

    is_finite = True
    cardinality: int

    def encode(self, value) -> int:
        raise NotImplementedError

    def decode(self, index: int):
        raise NotImplementedError

    def _build_tables(self) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
        raise NotImplementedError

    @cached_property
    def _tables(self):
        add, mul, neg = self._build_tables()
        for t in (add, mul, neg):
            t.setflags(write=False)
        return add, mul, neg

    @property
    def add_table(self) -> np.ndarray:
        return self._tables[0]

    @property
    def mul_table(self) -> np.ndarray:
        return self._tables[1]

    @property
    def neg_table(self) -> np.ndarray:
        return self._tables[2]

    @cached_property
    def zero_index(self) -> int:
        return 0

    @cached_property
    def one_index(self) -> int:
        return self.encode(self.one)

    @property
    def zero(self):
        return self.decode(0)

    @property
    def one(self):
        raise NotImplementedError

    def elements(self) -> list:
        return [self.decode(i) for i in range(self.cardinality)]

    def contains(self, value) -> bool:
        try:
            self.encode(value)
        except InvalidElement:
            return False
        return True

    def add(self, x, y):
        return self.decode(int(self.add_table[self.encode(x), self.encode(y)]))

    def mul(self, x, y):
        return self.decode(int(self.mul_table[self.encode(x), self.encode(y)]))

    def neg(self, x):
        return self.decode(int(self.neg_table[self.encode(x)]))

    def sub(self, x, y):
        return self.add(x, self.neg(y))

    def power(self, x, k: int):
        result = self.one_index
        xi = self.encode(x)
        for _ in range(k):
            result = int(self.mul_table[result, xi])
        return self.decode(result)


@dataclass(frozen=True)
class Integers:
    """Marker for the ring Z; rejected by every enumeration routine."""

    is_finite = False
    cardinality = "infinite"

    def __str__(self):
        return "Z"


@dataclass(frozen=True)
class ResidueRing(FiniteRing):
    n: int

    def __post_init__(self):
        if not isinstance(self.n, int) or self.n < 2:
            raise InvalidRing(f"Z/nZ needs n >= 2, got {self.n!r}")

    def __str__(self):
        return f"Z/{self.n}"

    @property
    def cardinality(self) -> int:
        return self.n

    @property
    def one(self):
        return 1

    def encode(self, value) -> int:
        if isinstance(value, (bool, np.bool_)) or not isinstance(value, (int, np.integer)):
            raise InvalidElement(f"{value!r} is not an element of {self}")
        if not 0 <= value < self.n:
            raise InvalidElement(f"{value!r} is not a residue in [0, {self.n})")
        return int(value)

    def decode(self, index: int):
        return int(index)

    def normalize(self, value):
        return int(value) % self.n

    def _build_tables(self):
        r = np.arange(self.n, dtype=np.int64)
        dt = _table_dtype(self.n)
        add = ((r[:, None] + r[None, :]) % self.n).astype(dt)
        mul = ((r[:, None] * r[None, :]) % self.n).astype(dt)
        neg = ((-r) % self.n).astype(dt)
        return add, mul, neg


def _combine(left_table: np.ndarray, right_table: np.ndarray, lidx, ridx, nr, dt):
    """Lift componentwise binary tables to the flat index space of a pair ring."""
    out = left_table[lidx[:, None], lidx[None, :]].astype(np.int64) * nr
    out += right_table[ridx[:, None], ridx[None, :]]
    return out.astype(dt)


@dataclass(frozen=True)
class ProductRing(FiniteRing):
    left: FiniteRing
    right: FiniteRing

    def __str__(self):
        def wrap(r):
            return f"({r})" if isinstance(r, ProductRing) else str(r)
        return f"{self.left} x {wrap(self.right)}"

    @cached_property
    def cardinality(self) -> int:
        return self.left.cardinality * self.right.cardinality

    @property
    def one(self):
        return (self.left.one, self.right.one)

    def encode(self, value) -> int:
        if not isinstance(value, tuple) or len(value) != 2:
            raise InvalidElement(f"{value!r} is not an element of {self}")
        return self.left.encode(value[0]) * self.right.cardinality + self.right.encode(value[1])

    def decode(self, index: int):
        q, r = divmod(int(index), self.right.cardinality)
        return (self.left.decode(q), self.right.decode(r))

    def normalize(self, value):
        return (self.left.normalize(value[0]), self.right.normalize(value[1]))

    def _build_tables(self):
        nr = self.right.cardinality
        idx = np.arange(self.cardinality)
        lidx, ridx = idx // nr, idx % nr
        dt = _table_dtype(self.cardinality)
        add = _combine(self.left.add_table, self.right.add_table, lidx, ridx, nr, dt)
        mul = _combine(self.left.mul_table, self.right.mul_table, lidx, ridx, nr, dt)
        neg = (self.left.neg_table[lidx].astype(np.int64) * nr + self.right.neg_table[ridx]).astype(dt)
        return add, mul, neg


def check_cardinality(size: int, limit: int | None = None) -> None:
    limit = CARDINALITY_LIMIT if limit is None else limit
    if size > limit:
        raise CardinalityCapExceeded(f"ring of cardinality {size} exceeds the limit {limit}")


def make_residue_ring(n: int, limit: int | None = None) -> ResidueRing:
    if not isinstance(n, int) or n < 2:
        raise InvalidRing(f"Z/nZ needs n >= 2, got {n!r}")
    check_cardinality(n, limit)
    return ResidueRing(n)


def make_product_ring(r1, r2, limit: int | None = None) -> ProductRing:
    for r in (r1, r2):
        if not getattr(r, "is_finite", False):
            raise Unsupported(f"direct products need finite factors, got {r}")
    check_cardinality(r1.cardinality * r2.cardinality, limit)
    return ProductRing(r1, r2)


def require_finite(ring: Any) -> FiniteRing:
    if not isinstance(ring, FiniteRing):
        raise Unsupported(f"{ring} is not an enumerable finite ring")
    return ring


def enumerate_elements(ring) -> list:
    return require_finite(ring).elements()


def units(ring) -> list:
    """All invertible elements, in canonical order."""
    ring = require_finite(ring)
    invertible = (ring.mul_table == ring.one_index).any(axis=1)
    return [ring.decode(i) for i in np.flatnonzero(invertible)]


def nilpotent_mask(ring: FiniteRing) -> np.ndarray:
    """Boolean vector marking the nilpotent elements of ``ring``."""
    n = ring.cardinality
    mul = ring.mul_table
    idx = np.arange(n)
    power = idx.copy()
    nil = power == 0
    # x^k for k = 1..n; a nilpotent element of a ring of size n has x^n = 0
    for _ in range(n):
        power = mul[power, idx]
        nil |= power == 0
        if nil.all():
            break
    return nil


def nilradical(ring):
    from .ideal_theory import Ideal

    ring = require_finite(ring)
    return Ideal.from_flags(ring, nilpotent_mask(ring))
