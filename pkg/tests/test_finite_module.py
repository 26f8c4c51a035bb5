import itertools
from math import gcd

import pytest
from hypothesis import given, settings, strategies as st

from trivext import (
    InvalidModule,
    ZMultSet,
    enumerate_submodules,
    is_S_divisible,
    is_uniformly_S_torsion,
    make_module,
    make_residue_ring,
    mult_set_generated,
    scaled_submodule,
    submodule_generated,
)
from trivext.finite_module import scalar_action, whole_module, zero_submodule
from trivext.z_layer import Z

from conftest import zmod


def test_make_module():
    M = make_module(Z, [6])
    assert M.cardinality == 6 and M.exponent == 6
    assert make_module(make_residue_ring(4), [2]).cardinality == 2
    with pytest.raises(InvalidModule):
        make_module(make_residue_ring(4), [3])
    K = make_module(Z, [2, 6])
    assert (K.cardinality, K.exponent, K.rank) == (12, 6, 2)


def test_scalar_action():
    assert scalar_action(zmod(6), 2, 5) == 4
    assert scalar_action(make_module(make_residue_ring(4), [2]), 3, 1) == 1
    assert scalar_action(zmod(4), 6, 1) == 2
    assert scalar_action(zmod(4), -1, 1) == 3


def test_submodule_generated():
    assert submodule_generated(zmod(6), [2]).elements == [0, 2, 4]
    assert submodule_generated(zmod(6), []).elements == [0]
    assert submodule_generated(zmod(4), [2]).elements == [0, 2]


def test_enumerate_submodules():
    assert [N.elements for N in enumerate_submodules(zmod(4))] == [[0], [0, 2], [0, 1, 2, 3]]
    assert len(enumerate_submodules(zmod(6))) == 4
    assert len(enumerate_submodules(make_module(Z, [2, 2]))) == 5


def _subgroups_brute(M):
    """All subsets closed under addition (finite, so they are subgroups)."""
    elems = list(range(M.cardinality))
    found = set()
    for r in range(1, len(elems) + 1):
        for sub in itertools.combinations(elems, r):
            s = set(sub)
            if 0 in s and all(int(M.add_table[a, b]) in s for a in s for b in s):
                found.add(frozenset(s))
    return found


@pytest.mark.parametrize("factors", [[4], [6], [2, 2], [2, 4], [3, 3]])
def test_submodule_lattice_matches_brute_force(factors):
    M = make_module(Z, factors)
    got = {frozenset(N.indices.tolist()) for N in enumerate_submodules(M)}
    assert got == _subgroups_brute(M)


def test_scaled_submodule():
    assert scaled_submodule(2, whole_module(zmod(6))).elements == [0, 2, 4]
    assert scaled_submodule(6, whole_module(zmod(4))).elements == [0, 2]
    N = submodule_generated(zmod(6), [3])
    assert scaled_submodule(1, N) == N


def test_uniform_torsion_examples():
    r = is_uniformly_S_torsion(zmod(6), submodule_generated(zmod(6), [2]), ZMultSet((2,)))
    assert r.holds and int(r.label) == 2
    r = is_uniformly_S_torsion(zmod(2), zero_submodule(zmod(2)), ZMultSet((3,)))
    assert not r.holds
    r = is_uniformly_S_torsion(zmod(4), submodule_generated(zmod(4), [2]), ZMultSet((2,)))
    assert r.holds and int(r.label) == 2


def test_divisibility_examples():
    assert is_S_divisible(zmod(3), ZMultSet((2,))).holds
    r = is_S_divisible(zmod(6), ZMultSet((2,)))
    assert not r.holds and int(r.label) == 2
    assert is_S_divisible(zmod(2), ZMultSet((3,))).holds


def test_finite_base_multiplicative_set():
    A = make_residue_ring(6)
    M = make_module(A, [6])
    S0 = mult_set_generated(A, [2])
    assert not is_S_divisible(M, S0).holds
    assert is_uniformly_S_torsion(M, submodule_generated(M, [2]), S0).holds
    assert is_S_divisible(M, mult_set_generated(A, [5])).holds


@settings(max_examples=80, deadline=None)
@given(st.sampled_from([[4], [6], [8], [2, 4], [3, 6], [12]]),
       st.lists(st.integers(-30, 30).filter(bool), min_size=1, max_size=2), st.data())
def test_torsion_agrees_with_direct_enumeration(factors, gens, data):
    M = make_module(Z, factors)
    subs = enumerate_submodules(M)
    N = subs[data.draw(st.integers(0, len(subs) - 1))]
    S0 = ZMultSet(tuple(gens))
    # products with small exponents already hit every residue mod exponent(M)
    prods = {1}
    for _ in range(M.exponent + 1):
        prods |= {p * g for p in prods for g in gens}
    want = any(all(M.act_index(s, e) in N.indices for e in M.unit_vectors()) for s in prods)
    assert is_uniformly_S_torsion(M, N, S0).holds == want
    want_div = all(all(gcd(s, d) == 1 for d in factors) for s in prods)
    assert is_S_divisible(M, S0).holds == want_div
    # properties: sN inside N, M/M always torsion, divisible excludes proper torsion
    assert scaled_submodule(gens[0], N).issubset(N)
    assert is_uniformly_S_torsion(M, whole_module(M), S0).holds
    if want_div and not N.is_whole:
        assert not is_uniformly_S_torsion(M, N, S0).holds
