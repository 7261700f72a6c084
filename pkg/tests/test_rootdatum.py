import pytest
from hypothesis import given
from hypothesis import strategies as st

from orbitmethod.errors import DimensionMismatch
from orbitmethod.rootdatum import (
    BasedRootDatum,
    CartanVector,
    a1xa1,
    dual_datum,
    gl,
    pairing,
    pgl,
    sl,
    torus,
    type_a_roots,
)
from orbitmethod.scalars import gq

from strategies import gaussians


def test_cartan_matrices():
    a2 = ((2, -1), (-1, 2))
    assert gl(3).cartan_matrix() == a2
    assert sl(3).cartan_matrix() == a2
    assert pgl(2).cartan_matrix() == ((2,),)
    assert a1xa1().cartan_matrix() == ((2, 0), (0, 2))
    assert torus(3).rank == 0


@pytest.mark.parametrize("n", [2, 3, 4])
def test_type_a_root_count(n):
    assert len(gl(n).roots()) == n * (n - 1)
    assert len(sl(n).roots()) == n * (n - 1)
    assert len(type_a_roots(n)) == n * (n - 1)


@pytest.mark.parametrize("d", [gl(3), sl(3), pgl(3), a1xa1(), torus(2)])
def test_dual_is_involution(d):
    assert dual_datum(dual_datum(d)) == d


def test_pgl_is_dual_of_sl():
    assert pgl(2) == dual_datum(sl(2))


def test_rejects_bad_cartan_matrix():
    with pytest.raises(ValueError):
        BasedRootDatum(2, ((1, -1),), ((1, 1),), "broken")


def test_pairing():
    assert pairing((1, -1), CartanVector.of(gq("1/2"), gq("-1/2"))) == 1
    with pytest.raises(DimensionMismatch):
        pairing((1, -1, 0), CartanVector.of(1, 2))


@given(st.lists(gaussians, min_size=3, max_size=3), st.lists(gaussians, min_size=3, max_size=3))
def test_cartan_vector_arithmetic(u, v):
    a, b = CartanVector(tuple(u)), CartanVector(tuple(v))
    assert (a + b) - b == a
    assert (-a) + a == CartanVector.zero(3)
    assert a.permute((2, 1, 0)).permute((2, 1, 0)) == a


def test_cartan_vector_dimension_mismatch():
    with pytest.raises(DimensionMismatch):
        CartanVector.of(1, 2) + CartanVector.of(1, 2, 3)
