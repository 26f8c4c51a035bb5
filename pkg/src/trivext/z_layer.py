"""Exact decisions over Z and over Z x| M with M a finite abelian group.

Infinite quantifiers over a multiplicative set S0 of Z are reduced to a finite
search: gcd(d, s) depends only on s mod d, and the action of s on M only on
s mod exponent(M). Reachable residues are explored breadth-first from 1, and
every residue carries the exponent vector of a concrete product of
generators, so witnesses are checkable integers.

For an ideal J of Z x| M generated by pairs (a_i, m_i), a unimodular column
reduction of the row (a_1 .. a_k) brings it to (g, 0, .., 0). With
w_j = sum_i U[i, j] m_i this gives

    J  = {(g c, c w_1 + n) : c in Z, n in J1}
    J1 = gM + <w_2, .., w_k>
    J0 = g * ord(w_1 in M / J1) * Z

so membership and both components are exact.
"""

from dataclasses import dataclass, field
from functools import cached_property
from math import gcd, lcm, prod

from sympy import isprime

from .errors import InternalError, InvalidElement, InvalidMultiplicativeSet, NotAnIdeal, Unsupported
from .finite_module import (
    ModuleDescriptor,
    Submodule,
    is_uniformly_S_torsion,
    scaled_module_is_within,
    submodule_generated,
)
from .finite_ring import Integers
from .ideal_theory import (
    COMPONENT_SPLIT,
    DISJOINTNESS_FAILURE,
    NO_WITNESS,
    RESIDUAL_MAXIMAL_DISJOINT,
    RESIDUAL_PRIME,
    SPrimalityCertificate,
)

Z = Integers()


@dataclass(frozen=True, order=True)
class ZIdeal:
    """The ideal dZ, d >= 0."""

    d: int

    def __post_init__(self):
        object.__setattr__(self, "d", abs(int(self.d)))

    def __str__(self):
        return f"{self.d}Z"

    def __contains__(self, x: int) -> bool:
        return x == 0 if self.d == 0 else x % self.d == 0

    def issubset(self, other: "ZIdeal") -> bool:
        return other.d == 0 and self.d == 0 or other.d != 0 and self.d % other.d == 0

    @property
    def is_prime(self) -> bool:
        return self.d == 0 or isprime(self.d)


@dataclass(frozen=True)
class ZWitness:
    """A product of multiplicative-set generators, prod g_i ** e_i."""

    generators: tuple[int, ...]
    exponents: tuple[int, ...]

    @property
    def value(self) -> int:
        return prod(g ** e for g, e in zip(self.generators, self.exponents))

    def __int__(self):
        return self.value

    def __str__(self):
        parts = [str(g) if e == 1 else f"{g}^{e}" for g, e in zip(self.generators, self.exponents) if e]
        return "*".join(parts) if parts else "1"


@dataclass(frozen=True)
class ZMultSet:
    """All finite products of nonzero integer generators (1 included)."""

    generators: tuple[int, ...] = ()

    def __post_init__(self):
        gens = tuple(int(g) for g in self.generators)
        if any(g == 0 for g in gens):
            raise InvalidMultiplicativeSet("0 cannot generate a multiplicative set")
        object.__setattr__(self, "generators", gens)

    ring = Z

    def __str__(self):
        return "<" + ", ".join(map(str, self.generators)) + ">"

    def scalars(self, modulus: int):
        """(residue, ZWitness) pairs reachable mod ``modulus`` in BFS order."""
        return z_reachable_witnesses(self, modulus)


def z_reachable_witnesses(S0: ZMultSet, m: int) -> list[tuple[int, ZWitness]]:
    if m < 1:
        raise ValueError("modulus must be >= 1")
    k = len(S0.generators)
    start = (1 % m, ZWitness(S0.generators, (0,) * k))
    seen = {start[0]}
    out = [start]
    frontier = [start]
    while frontier:
        nxt = []
        for r, w in frontier:
            for i, g in enumerate(S0.generators):
                r2 = (r * g) % m
                if r2 not in seen:
                    seen.add(r2)
                    exps = list(w.exponents)
                    exps[i] += 1
                    item = (r2, ZWitness(S0.generators, tuple(exps)))
                    out.append(item)
                    nxt.append(item)
        frontier = nxt
    return out


def z_reachable_residues(S0: ZMultSet, m: int) -> set[int]:
    return {r for r, _ in z_reachable_witnesses(S0, m)}


def z_is_disjoint(I: ZIdeal, S0: ZMultSet) -> bool:
    if I.d == 0:
        return True
    return 0 not in z_reachable_residues(S0, I.d)


def z_residual(I: ZIdeal, s: int) -> ZIdeal:
    """(dZ : s) = (d / gcd(d, s))Z."""
    if s == 0:
        return ZIdeal(1)
    return ZIdeal(I.d // gcd(I.d, s)) if I.d else ZIdeal(0)


def _divides_no_generator(p: int, S0: ZMultSet) -> bool:
    return all(g % p for g in S0.generators)


def _z_decision(I: ZIdeal, S0: ZMultSet, maximal: bool) -> SPrimalityCertificate:
    reason_ok = RESIDUAL_MAXIMAL_DISJOINT if maximal else RESIDUAL_PRIME
    if not z_is_disjoint(I, S0):
        return SPrimalityCertificate(False, DISJOINTNESS_FAILURE, method="z-residue")
    if I.d == 0:
        if maximal:
            # 0Z sits strictly below pZ for any prime p dividing no generator
            return SPrimalityCertificate(False, NO_WITNESS, method="z-residue")
        w = ZWitness(S0.generators, (0,) * len(S0.generators))
        return SPrimalityCertificate(True, reason_ok, w, ZIdeal(0), "z-residue")
    for r, w in z_reachable_witnesses(S0, I.d):
        res = z_residual(I, r)
        if isprime(res.d) and (not maximal or _divides_no_generator(res.d, S0)):
            return SPrimalityCertificate(True, reason_ok, w, res, "z-residue")
    return SPrimalityCertificate(False, NO_WITNESS, method="z-residue")


def z_is_S_prime(I: ZIdeal, S0: ZMultSet) -> SPrimalityCertificate:
    return _z_decision(I, S0, maximal=False)


def z_is_S_maximal(I: ZIdeal, S0: ZMultSet) -> SPrimalityCertificate:
    return _z_decision(I, S0, maximal=True)


# integer row reduction -------------------------------------------------------

def row_reduction(a: list[int]) -> tuple[int, list[list[int]]]:
    """Return (g, U) with U unimodular (k x k) and a @ U = (g, 0, .., 0), g >= 0.

    Columns of U beyond the first span the integer syzygies of ``a``.
    """
    k = len(a)
    row = list(a)
    U = [[int(i == j) for j in range(k)] for i in range(k)]

    def col_op(dst, src, q):
        # column dst -= q * column src
        row[dst] -= q * row[src]
        for r in U:
            r[dst] -= q * r[src]

    def swap(i, j):
        row[i], row[j] = row[j], row[i]
        for r in U:
            r[i], r[j] = r[j], r[i]

    for j in range(1, k):
        while row[j] != 0:
            q = row[0] // row[j]
            col_op(0, j, q)
            swap(0, j)
    if k and row[0] < 0:
        row[0] = -row[0]
        for r in U:
            r[0] = -r[0]
    return (row[0] if k else 0), U


# ideals of Z x| M ------------------------------------------------------------

def _module_combination(M: ModuleDescriptor, coeffs, elems) -> int:
    """Index of sum c_i * x_i in M."""
    acc = 0
    for c, x in zip(coeffs, elems):
        acc = int(M.add_table[acc, M.act_index(c, x)])
    return acc


def _order_modulo(M: ModuleDescriptor, x: int, N: Submodule) -> int:
    for c in range(1, M.exponent + 1):
        if N.mask >> M.act_index(c, x) & 1:
            return c
    raise InternalError("order exceeds the exponent")


def _check_module(M: ModuleDescriptor) -> None:
    if not isinstance(M.base, Integers):
        raise Unsupported("Z x| M needs a Z-module")


@dataclass(frozen=True, eq=False)
class ZTEIdeal:
    """The ideal of Z x| M generated by pairs (a_i, m_i)."""

    module: ModuleDescriptor
    generators: tuple
    g: int = field(repr=False)
    lead: int = field(repr=False)     # index of w_1
    j0: ZIdeal = None
    j1: Submodule = None

    def __str__(self):
        return "(" + ", ".join(f"({a},{m})" for a, m in self.generators) + ")R"

    @cached_property
    def is_homogeneous(self) -> bool:
        return zte_is_homogeneous(self)


@dataclass(frozen=True)
class ZTrivialExtension:
    """Descriptor for Z x| M; ideals of it are :class:`ZTEIdeal` objects."""

    module: ModuleDescriptor

    is_finite = False
    cardinality = "infinite"

    def __post_init__(self):
        _check_module(self.module)

    @property
    def base(self):
        return Z

    def __str__(self):
        return f"TE(Z, {self.module})"

    def normalize(self, value):
        if not isinstance(value, tuple) or len(value) != 2:
            raise InvalidElement(f"{value!r} is not an element of {self}")
        return (int(value[0]), self.module.normalize(value[1]))


def zte_ideal(M: ModuleDescriptor, gens) -> ZTEIdeal:
    _check_module(M)
    pairs = []
    for a, m in gens:
        a, m = int(a), M.normalize(m)
        if a < 0:
            a, m = -a, M.decode(M.neg_table[M.encode(m)])
        pairs.append((a, m))
    a = [p[0] for p in pairs]
    mi = [M.encode(p[1]) for p in pairs]
    g, U = row_reduction(a)
    k = len(pairs)
    w = [_module_combination(M, [U[i][j] for i in range(k)], mi) for j in range(k)]
    gM = [M.act_index(g, e) for e in M.unit_vectors()]
    j1 = submodule_generated(M, [M.decode(x) for x in gM + w[1:]])
    if k == 0 or g == 0:
        # every a_i = 0: J = 0 x| <m_i>
        j1 = submodule_generated(M, [p[1] for p in pairs])
        return ZTEIdeal(M, tuple(pairs), 0, 0, ZIdeal(0), j1)
    j0 = ZIdeal(g * _order_modulo(M, w[0], j1))
    return ZTEIdeal(M, tuple(pairs), g, w[0], j0, j1)


def zte_membership(elem, J: ZTEIdeal) -> bool:
    a, x = int(elem[0]), J.module.encode(J.module.normalize(elem[1]))
    M = J.module
    if J.g == 0:
        return a == 0 and bool(J.j1.mask >> x & 1)
    if a % J.g:
        return False
    c = a // J.g
    rest = int(M.add_table[x, M.neg_table[M.act_index(c, J.lead)]])
    return bool(J.j1.mask >> rest & 1)


def zte_contains(J: ZTEIdeal, K: ZTEIdeal) -> bool:
    """K inside J, checked on the generators of K."""
    return all(zte_membership(p, J) for p in K.generators)


def zte_equal(J: ZTEIdeal, K: ZTEIdeal) -> bool:
    return zte_contains(J, K) and zte_contains(K, J)


def zte_is_homogeneous(J: ZTEIdeal) -> bool:
    """J = J0 x| J1 iff (a_i, 0) lies in J for every generator."""
    return all(zte_membership((a, J.module.zero), J) for a, _ in J.generators)


def zte_homogeneous(M: ModuleDescriptor, d: int, N: Submodule) -> ZTEIdeal:
    """dZ x| N; requires dM inside N."""
    if not scaled_module_is_within(M, d, N):
        raise NotAnIdeal(f"{d}M is not inside the submodule")
    return zte_ideal(M, [(d, M.zero)] + [(0, x) for x in N.generators])


def proj_A(J: ZTEIdeal) -> ZIdeal:
    return ZIdeal(J.g)


def zte_residual(J: ZTEIdeal, s) -> ZTEIdeal:
    """(J : (s, t)) = {(b, y) : (b, y)(s, t) in J} as a new ZTEIdeal."""
    M = J.module
    s_a, t = int(s[0]), M.normalize(s[1])
    if s_a == 0:
        raise ValueError("residuals are only taken by elements with nonzero first coordinate")

    def member(b, y):
        return zte_membership((b * s_a, M.decode(M.add_table[M.act_index(b, M.encode(t)), M.act_index(s_a, M.encode(y))])), J)

    if J.j0.d == 0:
        gens = [(0, y) for y in M.elements() if member(0, y)]
        return zte_ideal(M, gens)
    # J0 x| 0 sits inside J, hence inside the residual; reduce b modulo d
    d = J.j0.d
    gens = [(d, M.zero)] + [(b, y) for b in range(d) for y in M.elements() if member(b, y)]
    return zte_ideal(M, gens)


def project_pairs(S_pairs) -> ZMultSet:
    gens = []
    for p in S_pairs:
        a = int(p[0]) if isinstance(p, tuple) else int(p)
        if a == 0:
            raise InvalidMultiplicativeSet(f"{p} is nilpotent, so its powers reach 0")
        gens.append(a)
    return ZMultSet(tuple(gens))


def _zte_decision(J: ZTEIdeal, S_pairs, maximal: bool) -> SPrimalityCertificate:
    S0 = project_pairs(S_pairs)
    M = J.module
    base = (z_is_S_maximal if maximal else z_is_S_prime)(J.j0, S0)
    torsion = is_uniformly_S_torsion(M, J.j1, S0)
    details = {"J0": J.j0, "J1": J.j1, "S0": S0, "base": base, "torsion": torsion,
               "homogeneous": J.is_homogeneous}
    if base.reason == DISJOINTNESS_FAILURE:
        return SPrimalityCertificate(False, DISJOINTNESS_FAILURE, method="z-components", details=details)
    if not (base.verdict and torsion.holds):
        return SPrimalityCertificate(False, NO_WITNESS, method="z-components", details=details)
    # single s good for both parts, searched modulo lcm(d, exponent)
    d = J.j0.d
    for r, w in z_reachable_witnesses(S0, lcm(d, M.exponent) if d else M.exponent):
        # r is only a residue; with J0 = 0 the residual by any nonzero s is 0Z
        res = z_residual(J.j0, r) if d else ZIdeal(0)
        ok = res.is_prime if not maximal else (res.d != 0 and isprime(res.d) and _divides_no_generator(res.d, S0))
        if ok and scaled_module_is_within(M, r, J.j1):
            return SPrimalityCertificate(True, COMPONENT_SPLIT, w, res, "z-components", details)
    raise InternalError("component conditions hold but no combined witness exists")


def zte_is_S_prime(J: ZTEIdeal, S_pairs) -> SPrimalityCertificate:
    return _zte_decision(J, S_pairs, maximal=False)


def zte_is_S_maximal(J: ZTEIdeal, S_pairs) -> SPrimalityCertificate:
    return _zte_decision(J, S_pairs, maximal=True)
