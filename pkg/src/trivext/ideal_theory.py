"""Ideals, multiplicative sets and the S-prime / S-maximal decision procedures.

Everything here works over an enumerable :class:`~trivext.finite_ring.FiniteRing`.
Ideals are element sets (bitmasks over element indices) with a generating set
attached for display; two ideals are equal iff their element sets are.

Each S-ideal test comes in two independent forms:

* ``*_definitional`` quantifies directly over pairs of elements (S-prime) or
  over the ideal lattice (S-maximal). These are the brute-force oracles.
* ``*_residual`` searches for s in S whose residual (I : s) is prime, or is a
  maximal member of the ideals disjoint from S.

Witnesses are always the first valid s in canonical element order.
"""

from dataclasses import dataclass, field
from functools import cached_property, lru_cache

import numpy as np

from . import _bits
from .errors import InternalError, InvalidMultiplicativeSet, PreconditionViolated
from .finite_ring import FiniteRing, require_finite


class Ideal:
    """An ideal of a finite ring, stored as a set of element indices."""

    def __init__(self, ring: FiniteRing, mask: int, generators=None):
        self.ring = ring
        self.mask = mask
        self._gens = None if generators is None else tuple(generators)

    @classmethod
    def from_flags(cls, ring, flags, generators=None):
        return cls(ring, _bits.from_bool(flags), generators)

    @classmethod
    def from_indices(cls, ring, indices, generators=None):
        return cls(ring, _bits.from_indices(indices, ring.cardinality), generators)

    def __eq__(self, other):
        return isinstance(other, Ideal) and self.ring == other.ring and self.mask == other.mask

    def __hash__(self):
        return hash((self.ring, self.mask))

    def __repr__(self):
        return f"Ideal({self.ring}, generators={list(self.generators)}, size={self.size})"

    def __str__(self):
        return "{" + ", ".join(str(e) for e in self.elements) + "}"

    @cached_property
    def flags(self) -> np.ndarray:
        return _bits.to_bool(self.mask, self.ring.cardinality)

    @cached_property
    def indices(self) -> np.ndarray:
        return np.flatnonzero(self.flags)

    @property
    def elements(self) -> list:
        return [self.ring.decode(i) for i in self.indices]

    @property
    def size(self) -> int:
        return len(self.indices)

    def __len__(self):
        return self.size

    def __contains__(self, x) -> bool:
        return bool(self.mask >> self.ring.encode(x) & 1)

    @property
    def is_proper(self) -> bool:
        return not self.mask >> self.ring.one_index & 1

    def issubset(self, other) -> bool:
        return _bits.is_subset(self.mask, other.mask)

    def meets(self, S: "MultiplicativeSet") -> bool:
        return bool(self.mask & S.mask)

    @cached_property
    def generators(self) -> tuple:
        if self._gens is not None:
            return self._gens
        gens, mask = [], _bits.from_indices([0], self.ring.cardinality)
        for i in self.indices:
            if not mask >> int(i) & 1:
                gens.append(self.ring.decode(i))
                mask = _sum(self.ring, mask, _principal_mask(self.ring, int(i)))
        return tuple(gens)

    def sort_key(self):
        return (self.size, tuple(self.indices.tolist()))


def _principal_mask(ring: FiniteRing, index: int) -> int:
    return _bits.from_indices(ring.mul_table[index], ring.cardinality)


def _sum(ring: FiniteRing, a: int, b: int) -> int:
    n = ring.cardinality
    ia, ib = _bits.to_indices(a, n), _bits.to_indices(b, n)
    return _bits.from_indices(ring.add_table[np.ix_(ia, ib)].ravel(), n)


def ideal_generated(ring, gens) -> Ideal:
    ring = require_finite(ring)
    mask = 1  # {0}
    normalized = []
    for g in gens:
        i = ring.encode(g)
        normalized.append(ring.decode(i))
        if not mask >> i & 1:
            mask = _sum(ring, mask, _principal_mask(ring, i))
    return Ideal(ring, mask, normalized)


def zero_ideal(ring) -> Ideal:
    return ideal_generated(ring, [])


def unit_ideal(ring) -> Ideal:
    ring = require_finite(ring)
    return Ideal(ring, (1 << ring.cardinality) - 1, [ring.one])


def ideal_sum(I: Ideal, J: Ideal) -> Ideal:
    return Ideal(I.ring, _sum(I.ring, I.mask, J.mask))


@lru_cache(maxsize=512)
def enumerate_ideals(ring) -> tuple[Ideal, ...]:
    """Every ideal exactly once, ordered by (size, sorted element indices).

    Ideals are reached as iterated sums of principal ideals starting from 0.
    """
    ring = require_finite(ring)
    principal = {}
    for i in range(ring.cardinality):
        principal.setdefault(_principal_mask(ring, i), i)
    found = {1: ()}
    queue = [1]
    while queue:
        cur = queue.pop()
        for pmask, i in principal.items():
            if _bits.is_subset(pmask, cur):
                continue
            new = _sum(ring, cur, pmask)
            if new not in found:
                found[new] = found[cur] + (ring.decode(i),)
                queue.append(new)
    ideals = [Ideal(ring, m, g) for m, g in found.items()]
    return tuple(sorted(ideals, key=Ideal.sort_key))


def is_ideal_mask(ring: FiniteRing, flags: np.ndarray) -> bool:
    """Closure check used by tests and by constructors that accept raw sets."""
    idx = np.flatnonzero(flags)
    if not flags[0]:
        return False
    if not flags[ring.add_table[np.ix_(idx, idx)]].all():
        return False
    return bool(flags[ring.mul_table[:, idx]].all())


# residuals --------------------------------------------------------------

def residual(I: Ideal, x) -> Ideal:
    """(I : x) = {r : r*x in I}."""
    xi = I.ring.encode(x)
    return Ideal.from_flags(I.ring, I.flags[I.ring.mul_table[xi]])


def _residual_index(I: Ideal, xi: int) -> Ideal:
    return Ideal.from_flags(I.ring, I.flags[I.ring.mul_table[xi]])


def residual_ideal(I: Ideal, J: Ideal) -> Ideal:
    """(I : J) = {r : rJ in I}."""
    flags = I.flags[I.ring.mul_table[:, J.indices]].all(axis=1)
    return Ideal.from_flags(I.ring, flags)


def scaled_ideal(t, I: Ideal) -> Ideal:
    """tI = {t*x : x in I}."""
    ti = I.ring.encode(t)
    return Ideal.from_indices(I.ring, I.ring.mul_table[ti, I.indices])


# multiplicative sets --------------------------------------------------------

@dataclass(frozen=True, eq=False)
class MultiplicativeSet:
    ring: FiniteRing
    mask: int
    generators: tuple = ()
    bfs_order: tuple = field(default=(), repr=False)

    def __eq__(self, other):
        return isinstance(other, MultiplicativeSet) and self.ring == other.ring and self.mask == other.mask

    def __hash__(self):
        return hash((self.ring, self.mask))

    @cached_property
    def flags(self) -> np.ndarray:
        return _bits.to_bool(self.mask, self.ring.cardinality)

    @cached_property
    def indices(self) -> np.ndarray:
        return np.flatnonzero(self.flags)

    @property
    def elements(self) -> list:
        return [self.ring.decode(i) for i in self.indices]

    def __contains__(self, x) -> bool:
        return bool(self.mask >> self.ring.encode(x) & 1)

    @cached_property
    def search_order(self) -> list[int]:
        """Witness candidates: 1 first, then canonical element order."""
        one = self.ring.one_index
        return [one] + [int(i) for i in self.indices if i != one]

    def __len__(self):
        return len(self.indices)

    def scalars(self, modulus: int):
        """(residue mod ``modulus``, element) pairs in BFS-from-generators order.

        Only meaningful for residue rings; used by the module torsion tests.
        """
        seen, out = set(), []
        order = self.bfs_order or tuple(int(i) for i in self.indices)
        for i in order:
            x = self.ring.decode(i)
            r = int(x) % modulus
            if r not in seen:
                seen.add(r)
                out.append((r, x))
        return out


def _closure(ring: FiniteRing, gen_indices) -> tuple[np.ndarray, list[int]]:
    """Multiplicative closure of {1} and the generators, plus its BFS order."""
    one = ring.one_index
    seen = np.zeros(ring.cardinality, dtype=bool)
    seen[one] = True
    order = [one]
    frontier = [one]
    while frontier:
        nxt = []
        for x in frontier:
            for g in gen_indices:
                y = int(ring.mul_table[x, g])
                if not seen[y]:
                    seen[y] = True
                    order.append(y)
                    nxt.append(y)
        frontier = nxt
    return seen, order


def mult_set_generated(ring, gens) -> MultiplicativeSet:
    ring = require_finite(ring)
    gi = [ring.encode(g) for g in gens]
    flags, order = _closure(ring, gi)
    if flags[ring.zero_index]:
        raise InvalidMultiplicativeSet(f"the closure of {list(gens)} in {ring} contains 0")
    return MultiplicativeSet(ring, _bits.from_bool(flags), tuple(ring.decode(i) for i in gi), tuple(order))


def mult_set_from_flags(ring: FiniteRing, flags, generators=()) -> MultiplicativeSet:
    """Wrap an element set already known to be multiplicatively closed."""
    flags = np.asarray(flags, dtype=bool)
    if flags[ring.zero_index] or not flags[ring.one_index]:
        raise InvalidMultiplicativeSet("a multiplicative set contains 1 and not 0")
    idx = np.flatnonzero(flags)
    if not flags[ring.mul_table[np.ix_(idx, idx)]].all():
        raise InvalidMultiplicativeSet("element set is not multiplicatively closed")
    return MultiplicativeSet(ring, _bits.from_bool(flags), tuple(generators))


def saturation(S: MultiplicativeSet) -> MultiplicativeSet:
    """S* = {x : xy in S for some y}."""
    ring = S.ring
    flags = S.flags[ring.mul_table].any(axis=1)
    return MultiplicativeSet(ring, _bits.from_bool(flags))


def units_mult_set(ring) -> MultiplicativeSet:
    ring = require_finite(ring)
    flags = (ring.mul_table == ring.one_index).any(axis=1)
    return MultiplicativeSet(ring, _bits.from_bool(flags))


# prime / maximal -----------------------------------------------------------

def _prime_flags(ring: FiniteRing, flags: np.ndarray) -> bool:
    if flags[ring.one_index]:
        return False
    product_in = flags[ring.mul_table]
    outside = ~flags
    return not (product_in & outside[:, None] & outside[None, :]).any()


def is_prime(I: Ideal) -> bool:
    return _prime_flags(I.ring, I.flags)


def _maximal_flags(ring: FiniteRing, flags: np.ndarray) -> bool:
    if flags[ring.one_index]:
        return False
    # x is invertible mod I iff x*y - 1 lies in I for some y
    shifted = flags[ring.add_table[:, ring.neg_table[ring.one_index]]]
    inverse_exists = shifted[ring.mul_table].any(axis=1)
    return bool(inverse_exists[~flags].all())


def is_maximal(I: Ideal) -> bool:
    return _maximal_flags(I.ring, I.flags)


def is_maximal_lattice(I: Ideal) -> bool:
    """Maximality via the ideal lattice: no ideal strictly between I and R."""
    if not I.is_proper:
        return False
    full = (1 << I.ring.cardinality) - 1
    return not any(
        J.mask != I.mask and J.mask != full and I.issubset(J) for J in enumerate_ideals(I.ring)
    )


# certificates -------------------------------------------------------------

DISJOINTNESS_FAILURE = "disjointness-failure"
NO_WITNESS = "no-witness"
RESIDUAL_PRIME = "residual-prime"
RESIDUAL_MAXIMAL_DISJOINT = "residual-maximal-disjoint"
COMPONENT_SPLIT = "component-split"


@dataclass(frozen=True)
class SPrimalityCertificate:
    """Verdict of an S-ideal test with the evidence needed to re-check it.

    ``witness`` is the element s; ``residual`` is (I : s). ``details`` holds
    method-specific extras such as sub-certificates.
    """

    verdict: bool
    reason: str
    witness: object = None
    residual: object = None
    method: str = ""
    details: dict = field(default_factory=dict)

    def __bool__(self):
        return self.verdict


def _same_ring(I: Ideal, S: MultiplicativeSet) -> None:
    if I.ring != S.ring:
        raise PreconditionViolated(f"ideal lives in {I.ring}, multiplicative set in {S.ring}")


def is_S_prime_definitional(I: Ideal, S: MultiplicativeSet) -> SPrimalityCertificate:
    """Brute force: some s in S has ab in I => sa in I or sb in I, for all a, b."""
    _same_ring(I, S)
    ring = I.ring
    if I.meets(S):
        return SPrimalityCertificate(False, DISJOINTNESS_FAILURE, method="definitional")
    flags = I.flags
    product_in = flags[ring.mul_table]
    for s in S.search_order:
        scaled_in = flags[ring.mul_table[s]]
        if not (product_in & ~scaled_in[:, None] & ~scaled_in[None, :]).any():
            return SPrimalityCertificate(
                True, RESIDUAL_PRIME, ring.decode(s), _residual_index(I, int(s)), "definitional"
            )
    return SPrimalityCertificate(False, NO_WITNESS, method="definitional")


def is_S_prime_residual(I: Ideal, S: MultiplicativeSet) -> SPrimalityCertificate:
    """Some s in S makes (I : s) a prime ideal."""
    _same_ring(I, S)
    if I.meets(S):
        return SPrimalityCertificate(False, DISJOINTNESS_FAILURE, method="residual")
    for s in S.search_order:
        res = _residual_index(I, int(s))
        if is_prime(res):
            return SPrimalityCertificate(True, RESIDUAL_PRIME, I.ring.decode(s), res, "residual")
    return SPrimalityCertificate(False, NO_WITNESS, method="residual")


def is_S_maximal_definitional(I: Ideal, S: MultiplicativeSet) -> SPrimalityCertificate:
    """Some s in S has sQ in I for every ideal Q containing I and disjoint from S."""
    _same_ring(I, S)
    ring = I.ring
    if I.meets(S):
        return SPrimalityCertificate(False, DISJOINTNESS_FAILURE, method="definitional")
    above = [Q for Q in enumerate_ideals(ring) if I.issubset(Q) and not Q.meets(S)]
    flags = I.flags
    for s in S.search_order:
        row = ring.mul_table[s]
        if all(flags[row[Q.indices]].all() for Q in above):
            return SPrimalityCertificate(
                True, RESIDUAL_MAXIMAL_DISJOINT, ring.decode(s), _residual_index(I, int(s)), "definitional"
            )
    return SPrimalityCertificate(False, NO_WITNESS, method="definitional")


def maximal_disjoint_ideals(S: MultiplicativeSet) -> list[Ideal]:
    """Maximal members (under inclusion) of the ideals disjoint from S."""
    disjoint = [Q for Q in enumerate_ideals(S.ring) if not Q.meets(S)]
    return [
        Q for Q in disjoint
        if not any(P.mask != Q.mask and Q.issubset(P) for P in disjoint)
    ]


def is_S_maximal_residual(I: Ideal, S: MultiplicativeSet) -> SPrimalityCertificate:
    """Some s in S makes (I : s) maximal among the ideals disjoint from S."""
    _same_ring(I, S)
    if I.meets(S):
        return SPrimalityCertificate(False, DISJOINTNESS_FAILURE, method="residual")
    tops = {Q.mask for Q in maximal_disjoint_ideals(S)}
    for s in S.search_order:
        res = _residual_index(I, int(s))
        if res.mask in tops:
            return SPrimalityCertificate(True, RESIDUAL_MAXIMAL_DISJOINT, I.ring.decode(s), res, "residual")
    return SPrimalityCertificate(False, NO_WITNESS, method="residual")


def spec_S(ring, S: MultiplicativeSet) -> list[Ideal]:
    return [I for I in enumerate_ideals(ring) if is_S_prime_definitional(I, S).verdict]


def max_S(ring, S: MultiplicativeSet) -> list[Ideal]:
    return [I for I in enumerate_ideals(ring) if is_S_maximal_definitional(I, S).verdict]


def spec(ring) -> list[Ideal]:
    return [I for I in enumerate_ideals(ring) if is_prime(I)]


def max_spec(ring) -> list[Ideal]:
    return [I for I in enumerate_ideals(ring) if is_maximal(I)]


def find_disjoint_prime(I: Ideal, S: MultiplicativeSet) -> Ideal:
    """First prime ideal (canonical order) containing I and missing S."""
    _same_ring(I, S)
    if I.meets(S):
        raise PreconditionViolated("the ideal meets the multiplicative set")
    for P in enumerate_ideals(I.ring):
        if I.issubset(P) and not P.meets(S) and is_prime(P):
            return P
    raise InternalError(f"no prime ideal contains {I!r} while avoiding S; this contradicts prime avoidance")
