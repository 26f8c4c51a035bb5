import pytest

from trivext import make_module, make_residue_ring, make_trivial_extension
from trivext.z_layer import Z


@pytest.fixture
def z12():
    return make_residue_ring(12)


@pytest.fixture
def te42():
    A = make_residue_ring(4)
    return make_trivial_extension(A, make_module(A, [2]))


def zmod(d):
    """Z/d as a Z-module."""
    return make_module(Z, [d])
