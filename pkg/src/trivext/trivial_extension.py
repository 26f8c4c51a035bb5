"""Trivial ring extensions A x| M over a residue ring A and their ideals.

The product is (a, x)(b, y) = (ab, ay + bx). Elements are pairs ``(a, m)``
whose index is ``index(a) * |M| + index(m)``, so the canonical order is
lexicographic in (a, m).

An ideal J splits into its degree-0 part J0 = {a : (a, 0) in J} (an ideal of
A) and degree-1 part J1 = {x : (0, x) in J} (a submodule of M). J0 x| J1 is
always an ideal inside J, and J is homogeneous exactly when they coincide.
The S-tests in this module decide S-primality of J from (J0, J1) alone.
"""

from dataclasses import dataclass
from functools import cached_property

import numpy as np

from . import _bits
from .errors import InternalError, InvalidElement, InvalidModule, NotAnIdeal, Unsupported
from .finite_module import (
    ModuleDescriptor,
    Submodule,
    is_S_divisible,
    is_uniformly_S_torsion,
    scaled_module_is_within,
    submodule_generated,
)
from .finite_ring import FiniteRing, ResidueRing, _table_dtype, check_cardinality
from .ideal_theory import (
    COMPONENT_SPLIT,
    DISJOINTNESS_FAILURE,
    NO_WITNESS,
    Ideal,
    MultiplicativeSet,
    SPrimalityCertificate,
    _residual_index,
    enumerate_ideals,
    ideal_generated,
    is_prime,
    is_S_maximal_residual,
    is_S_prime_residual,
    maximal_disjoint_ideals,
    mult_set_from_flags,
    mult_set_generated,
    saturation,
)


@dataclass(frozen=True)
class TrivialExtension(FiniteRing):
    base: ResidueRing
    module: ModuleDescriptor

    def __post_init__(self):
        if not isinstance(self.base, ResidueRing):
            raise Unsupported(f"finite trivial extensions need a residue base ring, got {self.base}")
        if self.module.base != self.base:
            raise InvalidModule(f"{self.module} is a module over {self.module.base}, not {self.base}")

    def __str__(self):
        return f"TE({self.base}, {self.module})"

    @cached_property
    def cardinality(self) -> int:
        return self.base.cardinality * self.module.cardinality

    @property
    def one(self):
        return (self.base.one, self.module.zero)

    def encode(self, value) -> int:
        if not isinstance(value, tuple) or len(value) != 2:
            raise InvalidElement(f"{value!r} is not an element of {self}")
        return self.base.encode(value[0]) * self.module.cardinality + self.module.encode(value[1])

    def decode(self, index: int):
        a, x = divmod(int(index), self.module.cardinality)
        return (self.base.decode(a), self.module.decode(x))

    def normalize(self, value):
        return (self.base.normalize(value[0]), self.module.normalize(value[1]))

    def _build_tables(self):
        A, M = self.base, self.module
        m = M.cardinality
        idx = np.arange(self.cardinality)
        ai, xi = idx // m, idx % m
        act = M.action_table
        e = M.exponent
        dt = _table_dtype(self.cardinality)
        add = A.add_table[ai[:, None], ai[None, :]].astype(np.int64) * m + M.add_table[xi[:, None], xi[None, :]]
        cross = M.add_table[act[(ai % e)[:, None], xi[None, :]], act[(ai % e)[None, :], xi[:, None]]]
        mul = A.mul_table[ai[:, None], ai[None, :]].astype(np.int64) * m + cross
        neg = A.neg_table[ai].astype(np.int64) * m + M.neg_table[xi]
        return add.astype(dt), mul.astype(dt), neg.astype(dt)

    # index helpers
    def a_index(self, index) -> np.ndarray:
        return np.asarray(index) // self.module.cardinality

    def m_index(self, index) -> np.ndarray:
        return np.asarray(index) % self.module.cardinality


def make_trivial_extension(A, M: ModuleDescriptor, limit: int | None = None) -> TrivialExtension:
    if not getattr(A, "is_finite", False):
        raise Unsupported("A = Z is handled by trivext.z_layer")
    check_cardinality(A.cardinality * M.cardinality, limit)
    return TrivialExtension(A, M)


def _require_te(ring) -> TrivialExtension:
    if not isinstance(ring, TrivialExtension):
        raise Unsupported(f"{ring} is not a trivial extension")
    return ring


# projections and components -------------------------------------------------

def proj_A(J: Ideal) -> Ideal:
    R = _require_te(J.ring)
    return Ideal.from_indices(R.base, np.unique(R.a_index(J.indices)))


def proj_M(J: Ideal) -> Submodule:
    R = _require_te(J.ring)
    M = R.module
    return Submodule(M, _bits.from_indices(np.unique(R.m_index(J.indices)), M.cardinality))


@dataclass(frozen=True)
class HomogeneousDecomposition:
    J0: Ideal
    J1: Submodule
    is_homogeneous: bool


def degree_zero(J: Ideal) -> Ideal:
    """J0 = {a : (a, 0) in J}."""
    R = _require_te(J.ring)
    m = R.module.cardinality
    rows = J.flags.reshape(R.base.cardinality, m)
    return Ideal.from_flags(R.base, rows[:, 0])


def degree_one(J: Ideal) -> Submodule:
    """J1 = {x : (0, x) in J}."""
    R = _require_te(J.ring)
    m = R.module.cardinality
    return Submodule(R.module, _bits.from_bool(J.flags[:m]))


def components(J: Ideal) -> HomogeneousDecomposition:
    J0, J1 = degree_zero(J), degree_one(J)
    split = homogeneous_ideal(J0, J1, J.ring)
    return HomogeneousDecomposition(J0, J1, split.mask == J.mask)


def homogeneous_ideal(I: Ideal, N: Submodule, ring: TrivialExtension | None = None) -> Ideal:
    """I x| N = {(a, x) : a in I, x in N}; requires IM inside N."""
    M = N.ambient
    R = ring if ring is not None else TrivialExtension(I.ring, M)
    if R.base != I.ring or R.module != M:
        raise NotAnIdeal("ideal and submodule do not match the extension")
    for a in I.indices:
        if not scaled_module_is_within(M, int(a), N):
            raise NotAnIdeal(f"IM is not contained in N ({a} * M escapes N)")
    flags = np.outer(I.flags, N.flags).ravel()
    return Ideal.from_flags(R, flags)


def principal_is_homogeneous(R: TrivialExtension, a, m) -> bool:
    """Cross-check criterion: (a, m)R is homogeneous iff it equals Aa x| (Am + aM)."""
    A, M = R.base, R.module
    J = ideal_generated(R, [(a, m)])
    Aa = ideal_generated(A, [a])
    aM = [M.decode(M.act_index(a, i)) for i in range(M.cardinality)]
    N = submodule_generated(M, [m] + aM)
    return J.mask == homogeneous_ideal(Aa, N, R).mask


# multiplicative sets ----------------------------------------------------------

def project_mult_set(S: MultiplicativeSet) -> MultiplicativeSet:
    """S0 = image of S under (a, x) -> a."""
    R = _require_te(S.ring)
    flags = np.zeros(R.base.cardinality, dtype=bool)
    flags[np.unique(R.a_index(S.indices))] = True
    if S.generators:
        # keep the generator BFS order when the generators really span S
        S0 = mult_set_generated(R.base, [g[0] for g in S.generators])
        if S0.mask == _bits.from_bool(flags):
            return S0
    return mult_set_from_flags(R.base, flags)


def lift_mult_set(S0: MultiplicativeSet, R: TrivialExtension) -> MultiplicativeSet:
    """S0 x| 0 as a multiplicative set of R."""
    gens = S0.generators or S0.elements
    return mult_set_generated(R, [(s, R.module.zero) for s in gens])


def saturation_of_lift(S0: MultiplicativeSet, R: TrivialExtension) -> np.ndarray:
    """Flags of S0* x| M, the common saturation of S, S0 x| N and S0 x| M."""
    sat0 = saturation(S0).flags
    return np.repeat(sat0, R.module.cardinality)


# component decisions -----------------------------------------------------------

def _component_decision(J: Ideal, S: MultiplicativeSet, maximal: bool) -> SPrimalityCertificate:
    R = _require_te(J.ring)
    M = R.module
    method = "components"
    S0 = project_mult_set(S)
    dec = components(J)
    J0, J1 = dec.J0, dec.J1
    base_test = is_S_maximal_residual if maximal else is_S_prime_residual
    base_cert = base_test(J0, S0)
    torsion = is_uniformly_S_torsion(M, J1, S0)
    details = {"J0": J0, "J1": J1, "S0": S0, "base": base_cert, "torsion": torsion,
               "homogeneous": dec.is_homogeneous}
    if base_cert.reason == DISJOINTNESS_FAILURE:
        return SPrimalityCertificate(False, DISJOINTNESS_FAILURE, method=method, details=details)
    if not (base_cert.verdict and torsion.holds):
        return SPrimalityCertificate(False, NO_WITNESS, method=method, details=details)
    # one s serving both conditions: (J0 : s) stable under S0-multiples once it is good
    tops = {Q.mask for Q in maximal_disjoint_ideals(S0)} if maximal else None
    for s in S0.search_order:
        res = _residual_index(J0, int(s))
        good = res.mask in tops if maximal else is_prime(res)
        if good and scaled_module_is_within(M, int(s), J1):
            witness = (R.base.decode(s), M.zero)
            return SPrimalityCertificate(
                True, COMPONENT_SPLIT, witness, res, method,
                dict(details, extension_residual=_residual_index(J, R.encode(witness))),
            )
    raise InternalError("component conditions hold but no combined witness exists")


def is_S_prime_via_components(J: Ideal, S: MultiplicativeSet) -> SPrimalityCertificate:
    """J is S-prime iff J0 is S0-prime and sM lies in J1 for some s in S0."""
    return _component_decision(J, S, maximal=False)


def is_S_maximal_via_components(J: Ideal, S: MultiplicativeSet) -> SPrimalityCertificate:
    """J is S-maximal iff J0 is S0-maximal and sM lies in J1 for some s in S0."""
    return _component_decision(J, S, maximal=True)


def spec_S_extension(R: TrivialExtension, S: MultiplicativeSet, fast_path: bool = True) -> list[Ideal]:
    """All S-prime ideals of R = A x| M.

    When M is S0-divisible every S-prime ideal is P x| M with P S0-prime, so
    only those candidates are tested.
    """
    return _extension_list(R, S, fast_path, maximal=False)


def max_S_extension(R: TrivialExtension, S: MultiplicativeSet, fast_path: bool = True) -> list[Ideal]:
    return _extension_list(R, S, fast_path, maximal=True)


def _extension_list(R, S, fast_path, maximal):
    test = is_S_maximal_via_components if maximal else is_S_prime_via_components
    S0 = project_mult_set(S)
    if fast_path and is_S_divisible(R.module, S0).holds:
        whole = Submodule(R.module, (1 << R.module.cardinality) - 1)
        base_test = is_S_maximal_residual if maximal else is_S_prime_residual
        out = [homogeneous_ideal(P, whole, R) for P in enumerate_ideals(R.base) if base_test(P, S0).verdict]
        return sorted(out, key=Ideal.sort_key)
    return [J for J in enumerate_ideals(R) if test(J, S).verdict]
