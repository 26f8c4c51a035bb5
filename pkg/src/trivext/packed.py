"""Compactly S-packed, coprimely S-packed and S-pm decisions for finite rings.

Both packing properties quantify over families of S-prime ideals. For a fixed
ideal Q each failure condition is monotone in the family, so it suffices to
test one worst family per Q:

* compact packing fails at Q iff Q is covered by the S-primes P with sQ not
  inside P for every s in S (any failing family is a subfamily of these);
* coprime packing fails at Q iff sQ is covered by the S-primes comaximal with
  Q, for some s in S.

``*_exhaustive`` variants enumerate every subfamily and exist to cross-check
the reductions.
"""

from dataclasses import dataclass, field
from itertools import combinations

from . import _bits
from .ideal_theory import (
    Ideal,
    MultiplicativeSet,
    enumerate_ideals,
    ideal_sum,
    max_S,
    spec_S,
)


@dataclass(frozen=True)
class IdealFamily:
    members: tuple[Ideal, ...]
    role: str  # "covering" or "comaximal"


@dataclass(frozen=True)
class PackedResult:
    holds: bool
    ideal: Ideal | None = None
    family: IdealFamily | None = None
    scalar: object = None
    diagnostic: str = ""
    details: dict = field(default_factory=dict)

    def __bool__(self):
        return self.holds


def _union(members) -> int:
    out = 0
    for P in members:
        out |= P.mask
    return out


def _scaled_mask(Q: Ideal, s: int) -> int:
    ring = Q.ring
    return _bits.from_indices(ring.mul_table[s, Q.indices], ring.cardinality)


def _scales_into(Q: Ideal, P: Ideal, S: MultiplicativeSet) -> bool:
    return any(_bits.is_subset(_scaled_mask(Q, int(s)), P.mask) for s in S.indices)


def is_compactly_S_packed(ring, S: MultiplicativeSet, primes=None) -> PackedResult:
    primes = spec_S(ring, S) if primes is None else primes
    for Q in enumerate_ideals(ring):
        bad = tuple(P for P in primes if not _scales_into(Q, P, S))
        if bad and _bits.is_subset(Q.mask, _union(bad)):
            return PackedResult(False, Q, IdealFamily(bad, "covering"))
    return PackedResult(True)


def is_coprimely_S_packed(ring, S: MultiplicativeSet, primes=None) -> PackedResult:
    primes = spec_S(ring, S) if primes is None else primes
    full = (1 << ring.cardinality) - 1
    for Q in enumerate_ideals(ring):
        comax = tuple(P for P in primes if ideal_sum(Q, P).mask == full)
        if not comax:
            continue
        cover = _union(comax)
        for s in S.indices:
            if _bits.is_subset(_scaled_mask(Q, int(s)), cover):
                return PackedResult(False, Q, IdealFamily(comax, "comaximal"), ring.decode(s))
    return PackedResult(True)


def _subfamilies(primes):
    for k in range(1, len(primes) + 1):
        yield from combinations(primes, k)


def is_compactly_S_packed_exhaustive(ring, S: MultiplicativeSet, primes=None) -> PackedResult:
    primes = spec_S(ring, S) if primes is None else primes
    for Q in enumerate_ideals(ring):
        for fam in _subfamilies(primes):
            if not _bits.is_subset(Q.mask, _union(fam)):
                continue
            if not any(_scales_into(Q, P, S) for P in fam):
                return PackedResult(False, Q, IdealFamily(fam, "covering"))
    return PackedResult(True)


def is_coprimely_S_packed_exhaustive(ring, S: MultiplicativeSet, primes=None) -> PackedResult:
    primes = spec_S(ring, S) if primes is None else primes
    full = (1 << ring.cardinality) - 1
    for Q in enumerate_ideals(ring):
        for fam in _subfamilies(primes):
            if any(ideal_sum(Q, P).mask != full for P in fam):
                continue
            cover = _union(fam)
            for s in S.indices:
                if _bits.is_subset(_scaled_mask(Q, int(s)), cover):
                    return PackedResult(False, Q, IdealFamily(fam, "comaximal"), ring.decode(s))
    return PackedResult(True)


def is_S_pm(ring, S: MultiplicativeSet, primes=None, maximals=None) -> PackedResult:
    """Every S-prime ideal lies in exactly one S-maximal ideal.

    A violation with no containing S-maximal ideal is reported with
    diagnostic ``"no-containing-s-maximal"``; one with several, ``"several"``.
    """
    primes = spec_S(ring, S) if primes is None else primes
    maximals = max_S(ring, S) if maximals is None else maximals
    for P in primes:
        above = [m for m in maximals if P.issubset(m)]
        if len(above) != 1:
            diag = "no-containing-s-maximal" if not above else "several"
            return PackedResult(False, P, IdealFamily(tuple(above), "covering"), diagnostic=diag)
    return PackedResult(True)
