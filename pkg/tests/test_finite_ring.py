import itertools

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from trivext import (
    CardinalityCapExceeded,
    InvalidElement,
    InvalidRing,
    Unsupported,
    enumerate_elements,
    make_module,
    make_product_ring,
    make_residue_ring,
    make_trivial_extension,
    nilradical,
    units,
)
from trivext.z_layer import Z


def small_rings():
    out = [make_residue_ring(n) for n in (2, 3, 4, 6, 8, 9)]
    out.append(make_product_ring(make_residue_ring(2), make_residue_ring(2)))
    out.append(make_product_ring(make_residue_ring(2), make_residue_ring(3)))
    for n, d in [(2, 2), (4, 2), (6, 3), (8, 4), (4, 4)]:
        A = make_residue_ring(n)
        out.append(make_trivial_extension(A, make_module(A, [d])))
    A = make_residue_ring(4)
    out.append(make_trivial_extension(A, make_module(A, [2, 2])))
    return out


def test_residue_ring_construction():
    assert make_residue_ring(6).cardinality == 6
    assert make_residue_ring(2).cardinality == 2
    with pytest.raises(InvalidRing):
        make_residue_ring(1)


def test_product_ring():
    R = make_product_ring(make_residue_ring(2), make_residue_ring(3))
    assert R.cardinality == 6
    K = make_product_ring(make_residue_ring(2), make_residue_ring(2))
    assert K.cardinality == 4
    for e in [(1, 0), (0, 1)]:
        assert K.mul(e, e) == e
    with pytest.raises(Unsupported):
        make_product_ring(Z, make_residue_ring(2))


def test_cardinality_cap():
    with pytest.raises(CardinalityCapExceeded):
        make_residue_ring(5000)
    assert make_residue_ring(5000, limit=10_000).cardinality == 5000


def test_arithmetic_examples():
    assert make_residue_ring(6).mul(2, 3) == 0
    A = make_residue_ring(4)
    R = make_trivial_extension(A, make_module(A, [2]))
    assert R.mul((0, 1), (0, 1)) == (0, 0)
    assert R.mul((3, 1), (2, 1)) == (2, 1)  # (6, 3*1 + 2*1) mod (4, 2)
    with pytest.raises(InvalidElement):
        R.mul(1, (0, 1))


def test_enumeration_order():
    assert enumerate_elements(make_residue_ring(3)) == [0, 1, 2]
    A = make_residue_ring(2)
    R = make_trivial_extension(A, make_module(A, [2]))
    assert enumerate_elements(R) == [(0, 0), (0, 1), (1, 0), (1, 1)]
    assert enumerate_elements(R) == enumerate_elements(R)
    with pytest.raises(Unsupported):
        enumerate_elements(Z)


def test_units():
    assert sorted(units(make_residue_ring(6))) == [1, 5]
    assert sorted(units(make_residue_ring(5))) == [1, 2, 3, 4]
    with pytest.raises(Unsupported):
        units(Z)


def test_units_brute_force():
    for R in small_rings():
        elems = R.elements()
        want = {x for x in elems if any(R.mul(x, y) == R.one for y in elems)}
        assert set(units(R)) == want


def test_nilradical():
    assert nilradical(make_residue_ring(4)).elements == [0, 2]
    assert nilradical(make_residue_ring(6)).elements == [0]
    A = make_residue_ring(2)
    R = make_trivial_extension(A, make_module(A, [2]))
    assert nilradical(R).elements == [(0, 0), (0, 1)]


@pytest.mark.parametrize("n,d", [(4, 2), (6, 6), (9, 3), (8, 4)])
def test_nilradical_contains_zero_times_module(n, d):
    A = make_residue_ring(n)
    R = make_trivial_extension(A, make_module(A, [d]))
    nil = set(nilradical(R).elements)
    assert {(0, m) for m in range(d)} <= nil


@pytest.mark.parametrize("R", small_rings(), ids=str)
def test_ring_axioms_exhaustive(R):
    add, mul = R.add_table.astype(np.int64), R.mul_table.astype(np.int64)
    n = R.cardinality
    idx = np.arange(n)
    assert (add == add.T).all() and (mul == mul.T).all()
    # associativity and distributivity over all triples
    assert (add[add[:, :, None], idx[None, None, :]] == add[idx[:, None, None], add[None, :, :]]).all()
    assert (mul[mul[:, :, None], idx[None, None, :]] == mul[idx[:, None, None], mul[None, :, :]]).all()
    lhs = mul[idx[:, None, None], add[None, :, :]]
    rhs = add[mul[:, :, None], mul[:, None, :]]
    assert (lhs == rhs).all()
    assert (add[R.zero_index] == idx).all()
    assert (mul[R.one_index] == idx).all()
    assert (add[idx, R.neg_table] == R.zero_index).all()


@settings(max_examples=60, deadline=None)
@given(st.sampled_from([(4, 2), (6, 3), (8, 8), (12, 6)]), st.data())
def test_trivial_extension_rule(nd, data):
    n, d = nd
    A = make_residue_ring(n)
    R = make_trivial_extension(A, make_module(A, [d]))
    a, b = data.draw(st.integers(0, n - 1)), data.draw(st.integers(0, n - 1))
    x, y = data.draw(st.integers(0, d - 1)), data.draw(st.integers(0, d - 1))
    assert R.mul((a, x), (b, y)) == ((a * b) % n, (a * y + b * x) % d)
    assert R.add((a, x), (b, y)) == ((a + b) % n, (x + y) % d)


def test_product_tables_componentwise():
    R = make_product_ring(make_residue_ring(3), make_residue_ring(4))
    for (a, b), (c, e) in itertools.product(R.elements(), repeat=2):
        assert R.mul((a, b), (c, e)) == ((a * c) % 3, (b * e) % 4)
