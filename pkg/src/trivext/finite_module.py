"""Finite modules M = Z/d1 + ... + Z/dk over Z or over a residue ring Z/n.

Both admissible base rings are generated additively by 1, so the scalar action
is repeated addition and submodules coincide with additive subgroups. The
action of a base element only depends on its residue modulo ``exponent``.

Multiplicative sets are accepted duck-typed: anything with a
``scalars(modulus)`` method returning ``(residue, label)`` pairs in search
order (see :class:`trivext.ideal_theory.MultiplicativeSet` and
:class:`trivext.z_layer.ZMultSet`).
"""

from dataclasses import dataclass, field
from functools import cached_property, lru_cache
from math import gcd, lcm, prod

import numpy as np

from . import _bits
from .errors import InvalidElement, InvalidModule, Unsupported
from .finite_ring import CARDINALITY_LIMIT, Integers, ResidueRing, _table_dtype


@dataclass(frozen=True)
class ModuleDescriptor:
    base: ResidueRing | Integers
    factors: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "factors", tuple(int(d) for d in self.factors))
        if not isinstance(self.base, (ResidueRing, Integers)):
            raise InvalidModule(f"module base must be Z or Z/n, got {self.base}")
        if not self.factors:
            raise InvalidModule("a module needs at least one cyclic factor (use [1] for 0)")
        if any(d < 1 for d in self.factors):
            raise InvalidModule(f"cyclic factors must be >= 1, got {list(self.factors)}")
        if isinstance(self.base, ResidueRing):
            bad = [d for d in self.factors if self.base.n % d]
            if bad:
                raise InvalidModule(f"Z/{bad[0]} is not a module over {self.base}")

    def __str__(self):
        return " x ".join(f"Z/{d}" for d in self.factors)

    @property
    def cardinality(self) -> int:
        return prod(self.factors)

    @property
    def exponent(self) -> int:
        return lcm(*self.factors)

    @property
    def rank(self) -> int:
        return len(self.factors)

    # element coding ---------------------------------------------------

    @cached_property
    def _weights(self) -> np.ndarray:
        w = [1] * self.rank
        for i in range(self.rank - 2, -1, -1):
            w[i] = w[i + 1] * self.factors[i + 1]
        return np.array(w, dtype=np.int64)

    @cached_property
    def coords(self) -> np.ndarray:
        """(cardinality x rank) array of coordinates, row i = element index i."""
        idx = np.arange(self.cardinality, dtype=np.int64)
        return (idx[:, None] // self._weights[None, :]) % np.array(self.factors)[None, :]

    def _as_tuple(self, value) -> tuple:
        if isinstance(value, (int, np.integer)) and not isinstance(value, bool) and self.rank == 1:
            return (int(value),)
        if isinstance(value, tuple) and len(value) == self.rank:
            return value
        raise InvalidElement(f"{value!r} is not an element of {self}")

    def encode(self, value) -> int:
        t = self._as_tuple(value)
        for x, d in zip(t, self.factors):
            if isinstance(x, bool) or not isinstance(x, (int, np.integer)) or not 0 <= x < d:
                raise InvalidElement(f"{value!r} is not an element of {self}")
        return int(np.dot(np.array(t, dtype=np.int64), self._weights))

    def decode(self, index: int):
        t = tuple(int(c) for c in self.coords[int(index)])
        return t[0] if self.rank == 1 else t

    def normalize(self, value):
        t = self._as_tuple(value)
        out = tuple(int(x) % d for x, d in zip(t, self.factors))
        return out[0] if self.rank == 1 else out

    def elements(self) -> list:
        return [self.decode(i) for i in range(self.cardinality)]

    @property
    def zero(self):
        return self.decode(0)

    def unit_vectors(self) -> list[int]:
        """Indices of the standard generators e_1..e_k."""
        return [int(w) % self.cardinality if d > 1 else 0 for w, d in zip(self._weights, self.factors)]

    # tables -------------------------------------------------------------

    def _from_coords(self, c: np.ndarray) -> np.ndarray:
        c = c % np.array(self.factors)
        return (c * self._weights).sum(axis=-1)

    @cached_property
    def add_table(self) -> np.ndarray:
        c = self.coords
        t = self._from_coords(c[:, None, :] + c[None, :, :]).astype(_table_dtype(self.cardinality))
        t.setflags(write=False)
        return t

    @cached_property
    def neg_table(self) -> np.ndarray:
        t = self._from_coords(-self.coords).astype(_table_dtype(self.cardinality))
        t.setflags(write=False)
        return t

    @cached_property
    def action_table(self) -> np.ndarray:
        """Row r gives the action of the scalar r (mod exponent) on each element."""
        r = np.arange(self.exponent, dtype=np.int64)
        t = self._from_coords(r[:, None, None] * self.coords[None, :, :]).astype(_table_dtype(self.cardinality))
        t.setflags(write=False)
        return t

    def act_index(self, a: int, index: int) -> int:
        return int(self.action_table[int(a) % self.exponent, index])


def make_module(base, factors, limit: int | None = None) -> ModuleDescriptor:
    M = ModuleDescriptor(base, tuple(factors))
    cap = CARDINALITY_LIMIT if limit is None else limit
    if M.cardinality > cap:
        raise Unsupported(f"module of cardinality {M.cardinality} exceeds the limit {cap}")
    return M


def scalar_action(M: ModuleDescriptor, a: int, x):
    """a*x for an integer (or residue) a and a module element x."""
    if isinstance(M.base, ResidueRing):
        M.base.encode(a)
    return M.decode(M.act_index(a, M.encode(x)))


@dataclass(frozen=True, eq=False)
class Submodule:
    ambient: ModuleDescriptor
    mask: int
    _generators: tuple | None = field(default=None, repr=False)

    def __eq__(self, other):
        return isinstance(other, Submodule) and self.ambient == other.ambient and self.mask == other.mask

    def __hash__(self):
        return hash((self.ambient, self.mask))

    @cached_property
    def indices(self) -> np.ndarray:
        return _bits.to_indices(self.mask, self.ambient.cardinality)

    @cached_property
    def flags(self) -> np.ndarray:
        return _bits.to_bool(self.mask, self.ambient.cardinality)

    @property
    def elements(self) -> list:
        return [self.ambient.decode(i) for i in self.indices]

    @property
    def size(self) -> int:
        return len(self.indices)

    def __len__(self):
        return self.size

    def __contains__(self, x) -> bool:
        return bool(self.mask >> self.ambient.encode(x) & 1)

    def issubset(self, other: "Submodule") -> bool:
        return _bits.is_subset(self.mask, other.mask)

    @property
    def is_whole(self) -> bool:
        return self.size == self.ambient.cardinality

    @cached_property
    def generators(self) -> tuple:
        if self._generators is not None:
            return self._generators
        gens, mask = [], _bits.from_indices([0], self.ambient.cardinality)
        for i in self.indices:
            if not mask >> int(i) & 1:
                gens.append(self.ambient.decode(i))
                mask = _sum_masks(self.ambient, mask, _cyclic_mask(self.ambient, int(i)))
        return tuple(gens)

    def sort_key(self):
        return (self.size, tuple(self.indices.tolist()))

    def __str__(self):
        return "{" + ", ".join(str(e) for e in self.elements) + "}"


def _cyclic_mask(M: ModuleDescriptor, index: int) -> int:
    return _bits.from_indices(M.action_table[:, index], M.cardinality)


def _sum_masks(M: ModuleDescriptor, a: int, b: int) -> int:
    ia = _bits.to_indices(a, M.cardinality)
    ib = _bits.to_indices(b, M.cardinality)
    return _bits.from_indices(M.add_table[np.ix_(ia, ib)].ravel(), M.cardinality)


def submodule_from_mask(M: ModuleDescriptor, mask: int) -> Submodule:
    return Submodule(M, mask)


def submodule_generated(M: ModuleDescriptor, gens) -> Submodule:
    mask = _bits.from_indices([0], M.cardinality)
    normalized = []
    for g in gens:
        i = M.encode(g)
        normalized.append(M.decode(i))
        if not mask >> i & 1:
            mask = _sum_masks(M, mask, _cyclic_mask(M, i))
    return Submodule(M, mask, tuple(normalized))


def zero_submodule(M: ModuleDescriptor) -> Submodule:
    return submodule_generated(M, [])


def whole_module(M: ModuleDescriptor) -> Submodule:
    return Submodule(M, (1 << M.cardinality) - 1)


@lru_cache(maxsize=256)
def enumerate_submodules(M: ModuleDescriptor) -> tuple[Submodule, ...]:
    """Every submodule exactly once, ordered by (size, sorted element indices)."""
    cyclic = {}
    for i in range(M.cardinality):
        cyclic.setdefault(_cyclic_mask(M, i), i)
    start = _bits.from_indices([0], M.cardinality)
    found = {start: ()}
    queue = [start]
    while queue:
        cur = queue.pop()
        for cmask, i in cyclic.items():
            if _bits.is_subset(cmask, cur):
                continue
            new = _sum_masks(M, cur, cmask)
            if new not in found:
                found[new] = found[cur] + (M.decode(i),)
                queue.append(new)
    subs = [Submodule(M, m, g) for m, g in found.items()]
    return tuple(sorted(subs, key=Submodule.sort_key))


def scaled_submodule(s: int, N: Submodule) -> Submodule:
    """sN = {s*x : x in N}."""
    M = N.ambient
    return Submodule(M, _bits.from_indices(M.action_table[int(s) % M.exponent, N.indices], M.cardinality))


def scaled_module_is_within(M: ModuleDescriptor, s: int, N: Submodule) -> bool:
    """Whether sM is contained in N; checked on the standard generators."""
    row = M.action_table[int(s) % M.exponent]
    return all(N.mask >> int(row[e]) & 1 for e in M.unit_vectors())


def _check_base(M: ModuleDescriptor, S0) -> None:
    ring = getattr(S0, "ring", None)
    if ring is not None and ring != M.base:
        raise InvalidModule(f"multiplicative set lives in {ring}, module base is {M.base}")


@dataclass(frozen=True)
class TorsionResult:
    holds: bool
    witness: int | None = None
    label: object = None

    def __bool__(self):
        return self.holds


def is_uniformly_S_torsion(M: ModuleDescriptor, N: Submodule, S0) -> TorsionResult:
    """Decide whether sM is inside N for a single s in S0 (i.e. M/N is uniformly S0-torsion)."""
    _check_base(M, S0)
    for r, label in S0.scalars(M.exponent):
        if scaled_module_is_within(M, r, N):
            return TorsionResult(True, r, label)
    return TorsionResult(False)


def is_S_divisible(M: ModuleDescriptor, S0) -> TorsionResult:
    """Decide sM = M for every s in S0; on failure ``witness`` is a violating s."""
    _check_base(M, S0)
    for r, label in S0.scalars(M.exponent):
        if any(gcd(r, d) != 1 for d in M.factors):
            return TorsionResult(False, r, label)
    return TorsionResult(True)
