import itertools
from math import gcd

import numpy as np
import pytest
from hypothesis import assume, given, settings, strategies as st

from trivext import (
    InvalidMultiplicativeSet,
    Unsupported,
    ZIdeal,
    ZMultSet,
    is_S_maximal_definitional,
    is_S_prime_definitional,
    make_module,
    make_residue_ring,
    zte_ideal,
    zte_is_homogeneous,
    zte_is_S_maximal,
    zte_is_S_prime,
    zte_membership,
    zte_residual,
    z_is_S_maximal,
    z_is_S_prime,
    z_residual,
)
from trivext.trivial_extension import degree_one, degree_zero
from trivext.verifier import zlayer_quotient_model
from trivext.z_layer import (
    proj_A,
    row_reduction,
    z_is_disjoint,
    z_reachable_residues,
    zte_equal,
    zte_homogeneous,
)

from conftest import zmod


def test_reachable_residues():
    assert z_reachable_residues(ZMultSet((2,)), 12) == {1, 2, 4, 8}
    assert z_reachable_residues(ZMultSet((1,)), 7) == {1}
    assert z_reachable_residues(ZMultSet((3,)), 2) == {1}
    with pytest.raises(InvalidMultiplicativeSet):
        ZMultSet((0,))


def test_disjointness():
    assert z_is_disjoint(ZIdeal(12), ZMultSet((2,)))
    assert not z_is_disjoint(ZIdeal(4), ZMultSet((2,)))
    assert z_is_disjoint(ZIdeal(2), ZMultSet((3,)))


def test_z_residual():
    assert z_residual(ZIdeal(12), 4) == ZIdeal(3)
    assert z_residual(ZIdeal(10), 1) == ZIdeal(10)
    assert z_residual(ZIdeal(0), 5) == ZIdeal(0)


def test_z_s_prime_examples():
    c = z_is_S_prime(ZIdeal(12), ZMultSet((2,)))
    assert c.verdict and c.witness.value == 4 and str(c.witness) == "2^2" and c.residual == ZIdeal(3)
    assert not z_is_S_prime(ZIdeal(4), ZMultSet((2,))).verdict
    c = z_is_S_prime(ZIdeal(2), ZMultSet((3,)))
    assert c.verdict and c.witness.value == 1


def test_z_s_maximal_examples():
    c = z_is_S_maximal(ZIdeal(12), ZMultSet((2,)))
    assert c.verdict and c.residual == ZIdeal(3)
    assert not z_is_S_maximal(ZIdeal(0), ZMultSet((2,))).verdict
    c = z_is_S_maximal(ZIdeal(5), ZMultSet((2,)))
    assert c.verdict and c.witness.value == 1


def _padic(n, p):
    v = 0
    while n % p == 0:
        n //= p
        v += 1
    return v


@pytest.mark.parametrize("d", range(1, 73))
@pytest.mark.parametrize("gens", [(2,), (3,), (2, 3), (6,), (5,), (4, 9), (10,)])
def test_z_s_prime_bounded_brute_force(d, gens):
    # products with exponents up to (max valuation of d) + 1 realize every gcd with d
    top = max(_padic(d, p) for p in range(2, d + 1) if d % p == 0) + 1 if d > 1 else 1
    prods = {1}
    for exps in itertools.product(range(top + 1), repeat=len(gens)):
        prods.add(int(np.prod([g ** e for g, e in zip(gens, exps)])))
    disjoint = all(s % d for s in prods) if d > 1 else False
    want_p = disjoint and any(_is_prime(d // gcd(d, s)) for s in prods)
    want_m = disjoint and any(
        _is_prime(d // gcd(d, s)) and all(g % (d // gcd(d, s)) for g in gens) for s in prods
    )
    I, S0 = ZIdeal(d), ZMultSet(gens)
    assert z_is_S_prime(I, S0).verdict == want_p
    assert z_is_S_maximal(I, S0).verdict == want_m


def _is_prime(n):
    return n > 1 and all(n % k for k in range(2, int(n ** 0.5) + 1))


def test_row_reduction():
    for a in ([6, 4], [0, 0], [5], [-3, 6, 9], [12, 18, 8], []):
        g, U = row_reduction(a)
        k = len(a)
        out = [sum(a[i] * U[i][j] for i in range(k)) for j in range(k)]
        assert out == ([g] + [0] * (k - 1) if k else [])
        assert g == abs(np.gcd.reduce(a)) if a else g == 0
        if k:
            assert round(abs(np.linalg.det(np.array(U, dtype=float)))) == 1


def test_zte_ideal_examples():
    J = zte_ideal(zmod(2), [(6, 1)])
    assert J.j0 == ZIdeal(12) and J.j1.elements == [0]
    J = zte_ideal(zmod(4), [(6, 1)])
    assert J.j0 == ZIdeal(12) and J.j1.elements == [0, 2]
    J = zte_ideal(zmod(6), [(0, 2)])
    assert J.j0 == ZIdeal(0) and J.j1.elements == [0, 2, 4]
    with pytest.raises(Unsupported):
        zte_ideal(make_module(make_residue_ring(4), [2]), [(1, 0)])


def test_membership_examples():
    P = zte_ideal(zmod(2), [(6, 1)])
    assert zte_membership((12, 0), P)
    assert not zte_membership((0, 1), P)
    assert zte_membership((18, 1), P) and zte_membership((-6, 1), P)
    assert not zte_membership((6, 0), zte_ideal(zmod(4), [(6, 1)]))


def test_negative_generators_normalized():
    J = zte_ideal(zmod(4), [(-6, 1)])
    K = zte_ideal(zmod(4), [(6, 3)])
    assert zte_equal(J, K) and J.generators == ((6, 3),)


def _naive_span(M, gens, bound):
    """Elements sum (b_i, x_i)(a_i, m_i) with |b_i| <= bound, all x_i."""
    e = M.cardinality
    d = M.factors[0]
    bs = np.arange(-bound, bound + 1)
    a_part, m_part = np.zeros(1, dtype=np.int64), np.zeros(1, dtype=np.int64)
    for a, m in gens:
        # (b, x)(a, m) = (ab, bm + ax)
        first = bs * a
        second = (bs[:, None] * m + a * np.arange(e)[None, :]) % d
        a_part = (a_part[:, None] + first[:, None].repeat(e, 1).ravel()[None, :]).ravel()
        m_part = ((m_part[:, None] + second.ravel()[None, :]) % d).ravel()
        keep = np.unique(np.stack([a_part, m_part]), axis=1)
        a_part, m_part = keep[0], keep[1]
    return set(zip(a_part.tolist(), m_part.tolist()))


@pytest.mark.parametrize("d", [2, 3, 4, 6])
@pytest.mark.parametrize("gens", [[(6, 1)], [(2, 1)], [(4, 3)], [(0, 2)], [(6, 1), (4, 0)], [(3, 1), (2, 1)]])
def test_membership_matches_naive_expansion(d, gens):
    M = zmod(d)
    gens = [(a, m % d) for a, m in gens]
    J = zte_ideal(M, gens)
    span = _naive_span(M, gens, 40)
    for a in range(-12, 13):
        for x in range(d):
            assert zte_membership((a, x), J) == ((a, x) in span), (a, x)


@settings(max_examples=150, deadline=None)
@given(st.sampled_from([2, 3, 4, 5, 6, 8, 12]), st.integers(-24, 24).filter(bool), st.data())
def test_principal_component_formula(d, a, data):
    M = zmod(d)
    m = data.draw(st.integers(0, d - 1))
    J = zte_ideal(M, [(a, m)])
    aM = {(a * x) % d for x in range(d)}
    c = next(k for k in range(1, d + 1) if (k * m) % d in aM)
    assert J.j0 == ZIdeal(a * c)
    assert J.j1.elements == sorted(aM)
    bound = abs(a) * c * d
    for x in range(-bound, bound + 1):
        assert zte_membership((x, 0), J) == (x % (a * c) == 0)
    for y in range(d):
        assert zte_membership((0, y), J) == (y in aM)
    assert J.j0.d * d % d == 0 and all((J.j0.d * y) % d in aM for y in range(d))


def test_homogeneity():
    assert not zte_is_homogeneous(zte_ideal(zmod(2), [(6, 1)]))
    assert zte_is_homogeneous(zte_ideal(zmod(6), [(0, 2)]))
    assert not zte_is_homogeneous(zte_ideal(zmod(4), [(6, 1)]))
    M = zmod(4)
    J = zte_homogeneous(M, 2, zte_ideal(M, [(0, 2)]).j1)
    assert zte_is_homogeneous(J) and J.j0 == ZIdeal(2)


def test_extension_decisions_examples():
    M2, M4, M6 = zmod(2), zmod(4), zmod(6)
    assert zte_is_S_prime(zte_ideal(M6, [(0, 2)]), [(2, 0)]).verdict
    P = zte_ideal(M2, [(6, 1)])
    assert zte_is_S_maximal(P, [(2, 0)]).verdict
    assert zte_equal(zte_residual(P, (4, 0)), zte_ideal(M2, [(3, 0), (0, 1)]))
    P = zte_ideal(M2, [(2, 1)])
    assert not zte_is_S_prime(P, [(3, 0)]).verdict
    assert not zte_is_S_maximal(P, [(3, 0)]).verdict
    assert proj_A(P) == ZIdeal(2)
    J = zte_ideal(M4, [(6, 1)])
    c = zte_is_S_prime(J, [(2, 0)])
    assert c.verdict and str(c.witness) == "2^2" and c.residual == ZIdeal(3)


def test_nilpotent_generator_rejected():
    with pytest.raises(InvalidMultiplicativeSet):
        zte_is_S_prime(zte_ideal(zmod(2), [(2, 0)]), [(0, 1)])


# quotient oracle: Lz x| 0 lies in J for L = g * exponent(M), so J can be decided in Z/L x| M

@settings(max_examples=120, deadline=None)
@given(st.sampled_from([2, 3, 4, 6]), st.lists(st.tuples(st.integers(-9, 9), st.integers(0, 11)), min_size=1, max_size=2),
       st.tuples(st.integers(-6, 6).filter(bool), st.integers(0, 11)))
def test_quotient_oracle(d, gens, s_pair):
    M = zmod(d)
    gens = [(a, m % d) for a, m in gens]
    J = zte_ideal(M, gens)
    assume(J.g != 0 and J.g * d * d <= 600)
    S_pairs = [(s_pair[0], s_pair[1] % d)]
    R, Jq, Sq = zlayer_quotient_model(M, gens, S_pairs)
    L = R.base.n
    q0 = degree_zero(Jq).elements
    smallest = min((x for x in q0 if x > 0), default=L)
    assert smallest == J.j0.d
    assert degree_one(Jq).elements == J.j1.elements
    for a in range(L):
        for x in range(d):
            assert ((a, x) in set(Jq.elements)) == zte_membership((a, x), J)
    want_p = False if Sq is None else is_S_prime_definitional(Jq, Sq).verdict
    want_m = False if Sq is None else is_S_maximal_definitional(Jq, Sq).verdict
    assert zte_is_S_prime(J, S_pairs).verdict == want_p
    assert zte_is_S_maximal(J, S_pairs).verdict == want_m


@settings(max_examples=200, deadline=None)
@given(st.sampled_from(range(2, 13)), st.integers(-30, 30).filter(bool), st.integers(0, 11),
       st.integers(-12, 12).filter(bool), st.integers(0, 11))
def test_prime_equals_maximal_off_the_nilradical(d, a, m, s, t):
    J = zte_ideal(zmod(d), [(a, m % d)])
    S = [(s, t % d)]
    assert zte_is_S_prime(J, S).verdict == zte_is_S_maximal(J, S).verdict
