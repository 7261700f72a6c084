from fractions import Fraction

import pytest
import sympy

from orbitmethod.errors import UnsupportedGeometry
from orbitmethod.geoparams import Stratum, StratumPoset, complete_parameters_of, stratify_orbit
from orbitmethod.lparams import TRIVIAL_GROUP, lam_a, pgl2_inner_class, torus_dual
from orbitmethod.rootdatum import CartanVector
from orbitmethod.sheafk import (
    _inverse_unitriangular,
    arthur_microlocal_packet,
    basis_vector,
    characteristic_cycle,
    ic_class_in_mu_basis,
    ic_matrix,
    m_g_matrix,
    m_r_matrix,
    serialize_matrix,
    stalk_euler,
    stratum_dimensions,
)

RHO = lam_a(Fraction(1, 2))


@pytest.fixture
def poset():
    return stratify_orbit(RHO)


def test_ic_classes(poset):
    assert ic_class_in_mu_basis(poset, "U", 0).coeffs == (-1, -1, 1, 0)
    assert ic_class_in_mu_basis(poset, "U", 1).coeffs == (0, 0, 0, 1)
    assert ic_class_in_mu_basis(poset, "N", 0).coeffs == (1, 0, 0, 0)


def test_inverse_matches_sympy(poset):
    a = [list(r) for r in ic_matrix(poset)]
    assert _inverse_unitriangular(a) == sympy.Matrix(a).inv().tolist()


@pytest.mark.parametrize("rows", [
    [[1, 0, 0], [2, 1, 0], [-3, 5, 1]],
    [[1, 4], [0, 1]],
    [[0, 1], [1, 0]],
])
def test_inverse_oracle(rows):
    assert _inverse_unitriangular(rows) == sympy.Matrix(rows).inv().tolist()


def test_inverse_rejects_non_unimodular():
    with pytest.raises(ArithmeticError):
        _inverse_unitriangular([[2, 0], [0, 1]])


def test_matrices(poset):
    mg = m_g_matrix(poset)
    mr = m_r_matrix(poset)
    assert mg.matrix == ((1, 0, 0, 0), (0, 1, 0, 0), (1, 1, 1, 0), (0, 0, 0, 1))
    assert mr.matrix == ((1, 0, 1, 0), (0, 1, 1, 0), (0, 0, 1, 0), (0, 0, 0, 1))
    d = stratum_dimensions(poset)
    assert mg.is_unitriangular(d) and mr.is_unitriangular(d)


def test_inverse_transpose_identity(poset):
    mg = sympy.Matrix(m_g_matrix(poset).rows())
    mr = m_r_matrix(poset).matrix
    inv = mg.inv()
    d = stratum_dimensions(poset)
    for i in range(4):
        for j in range(4):
            assert mr[i][j] == (-1) ** ((d[i] - d[j]) % 2) * int(inv[j, i])


def test_mu_is_sum_over_mg(poset):
    # mu(xi) = sum m_g(xi, xi') P(xi') written back in the mu basis
    mg = m_g_matrix(poset)
    cps = complete_parameters_of(poset)
    for i, cp in enumerate(cps):
        total = [0] * len(cps)
        for j, cq in enumerate(cps):
            p = ic_class_in_mu_basis(poset, *cq)
            total = [t + mg.matrix[i][j] * c for t, c in zip(total, p.coeffs)]
        assert tuple(total) == basis_vector(poset, cp).coeffs


def test_characteristic_cycles(poset):
    order = ["N", "S", "U"]
    assert characteristic_cycle(poset, "U", 0).vector(order) == (0, 0, 1)
    assert characteristic_cycle(poset, "U", 1).vector(order) == (1, 1, 1)
    assert characteristic_cycle(poset, "N", 0).vector(order) == (1, 0, 0)
    assert characteristic_cycle(poset, "S", 0).vector(order) == (0, 1, 0)


def test_cycles_are_nonnegative(poset):
    for cp in complete_parameters_of(poset):
        cc = characteristic_cycle(poset, *cp)
        assert all(m >= 0 for _, m in cc.multiplicities)
        # the support always contains the stratum of cp
        assert cp[0] in cc.support()


def test_stalks(poset):
    stalks = stalk_euler(poset, ic_class_in_mu_basis(poset, "U", 0))
    assert stalks == {"N": -1, "S": -1, "U": -1}


def test_microlocal_packets(poset):
    assert arthur_microlocal_packet(poset, "N") == [("N", 0), ("U", 1)]
    assert arthur_microlocal_packet(poset, "S") == [("S", 0), ("U", 1)]
    assert arthur_microlocal_packet(poset, "U") == [("U", 0), ("U", 1)]


def test_packets_contain_l_packets(poset):
    # a parameter always lies in the packet of its own stratum
    for cp in complete_parameters_of(poset):
        assert cp in arthur_microlocal_packet(poset, cp[0])


def test_point_strata_give_identity():
    poset = stratify_orbit(lam_a("2/3"))
    assert m_g_matrix(poset).matrix == ((1, 0), (0, 1))
    assert m_r_matrix(poset).matrix == ((1, 0), (0, 1))
    poset = stratify_orbit(CartanVector.of(0, "1/2"), torus_dual(2))
    assert m_g_matrix(poset).matrix == tuple(tuple(int(i == j) for j in range(4)) for i in range(4))


def test_closed_curves():
    poset = stratify_orbit(lam_a(1))
    assert m_g_matrix(poset).matrix == ((1, 0), (0, 1))
    assert characteristic_cycle(poset, "C0", 0)["C0"] == 1


def test_unsupported_geometry():
    bad = StratumPoset(RHO, pgl2_inner_class(), (Stratum("X", 2, TRIVIAL_GROUP),), "surface")
    with pytest.raises(UnsupportedGeometry):
        ic_class_in_mu_basis(bad, "X", 0)


def test_serialize(poset):
    ser = serialize_matrix(m_g_matrix(poset), poset)
    assert ser["legend"] == ["(N,triv)", "(S,triv)", "(U,triv)", "(U,sgn)"]
    assert ser["rows"][2] == [1, 1, 1, 0]
