"""Grothendieck group of equivariant sheaves on a stratum poset.

Two bases are indexed by the complete geometric parameters of the poset:
mu (signed extensions by zero) and P (Euler characteristics of intermediate
extensions).  Intermediate extension is only needed for rank-one local
systems on curve strata, where the boundary stalk rule is explicit.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import UnsupportedGeometry
from .geoparams import CompleteGeometric, StratumPoset, complete_parameters_of

Matrix = tuple[tuple[int, ...], ...]


@dataclass(frozen=True)
class KClass:
    """Integer combination of basis classes; ``coeffs[k]`` multiplies index[k]."""

    index: tuple[CompleteGeometric, ...]
    coeffs: tuple[int, ...]
    basis: str = "mu"

    def __post_init__(self):
        if self.basis not in ("mu", "p"):
            raise ValueError(f"unknown basis {self.basis!r}")
        if len(self.index) != len(self.coeffs):
            raise ValueError("coefficient vector does not match the index")

    def coefficient(self, cp: CompleteGeometric) -> int:
        return self.coeffs[self.index.index(cp)]

    def support(self) -> list[CompleteGeometric]:
        return [cp for cp, c in zip(self.index, self.coeffs) if c]

    def __add__(self, other: KClass) -> KClass:
        assert self.index == other.index and self.basis == other.basis
        return KClass(self.index, tuple(a + b for a, b in zip(self.coeffs, other.coeffs)), self.basis)

    def __sub__(self, other: KClass) -> KClass:
        assert self.index == other.index and self.basis == other.basis
        return KClass(self.index, tuple(a - b for a, b in zip(self.coeffs, other.coeffs)), self.basis)


def basis_vector(poset: StratumPoset, cp: CompleteGeometric, basis: str = "mu") -> KClass:
    index = tuple(complete_parameters_of(poset))
    return KClass(index, tuple(int(x == cp) for x in index), basis)


def _check_supported(poset: StratumPoset) -> None:
    for s in poset.strata:
        if s.dimension > 1:
            raise UnsupportedGeometry(f"stratum {s.id} has dimension {s.dimension}")
        if s.dimension == 0 and s.boundary:
            raise UnsupportedGeometry(f"point stratum {s.id} cannot have boundary")


def ic_class_in_mu_basis(poset: StratumPoset, sid: str, chi: int) -> KClass:
    """P(S, chi) written in the mu basis.

    On a curve stratum the rank-one local system has the same monodromy at every
    puncture, so the intermediate extension picks up a boundary stalk exactly
    when chi is trivial.
    """
    _check_supported(poset)
    s = poset.stratum(sid)
    cls = basis_vector(poset, (sid, chi))
    if s.dimension == 1 and chi == 0:
        for x in s.boundary:
            cls = cls - basis_vector(poset, (x, 0))
    return cls


def _inverse_unitriangular(a: list[list[int]]) -> list[list[int]]:
    """Exact inverse of an integer matrix with determinant +-1 (Gauss-Jordan over Q)."""
    n = len(a)
    m = [[Fraction(x) for x in row] + [Fraction(int(i == j)) for j in range(n)] for i, row in enumerate(a)]
    for col in range(n):
        pivot = next(r for r in range(col, n) if m[r][col] != 0)
        m[col], m[pivot] = m[pivot], m[col]
        pv = m[col][col]
        m[col] = [x / pv for x in m[col]]
        for r in range(n):
            if r != col and m[r][col] != 0:
                f = m[r][col]
                m[r] = [x - f * y for x, y in zip(m[r], m[col])]
    inv = [row[n:] for row in m]
    if any(x.denominator != 1 for row in inv for x in row):
        raise ArithmeticError("matrix is not invertible over Z")
    return [[int(x) for x in row] for row in inv]


def ic_matrix(poset: StratumPoset) -> Matrix:
    """Row (xi) holds the mu-coordinates of P(xi); this is m_g^{-1}."""
    return tuple(ic_class_in_mu_basis(poset, sid, k).coeffs for sid, k in complete_parameters_of(poset))


@dataclass(frozen=True)
class ChangeOfBasis:
    index: tuple[CompleteGeometric, ...]
    matrix: Matrix
    name: str = ""

    def entry(self, row: CompleteGeometric, col: CompleteGeometric) -> int:
        return self.matrix[self.index.index(row)][self.index.index(col)]

    def rows(self) -> list[list[int]]:
        return [list(r) for r in self.matrix]

    def is_unitriangular(self, dims: list[int]) -> bool:
        """Unit diagonal, and triangular once the index is sorted by stratum dimension."""
        n = len(self.matrix)
        if any(self.matrix[i][i] != 1 for i in range(n)):
            return False
        off = [(i, j) for i in range(n) for j in range(n) if i != j and self.matrix[i][j]]
        if any(dims[i] == dims[j] for i, j in off):
            return False
        return all(dims[j] < dims[i] for i, j in off) or all(dims[j] > dims[i] for i, j in off)


def stratum_dimensions(poset: StratumPoset) -> list[int]:
    return [poset.stratum(sid).dimension for sid, _ in complete_parameters_of(poset)]


def m_g_matrix(poset: StratumPoset) -> ChangeOfBasis:
    """mu(xi) = sum_xi' m_g(xi, xi') P(xi')."""
    a = [list(r) for r in ic_matrix(poset)]
    inv = _inverse_unitriangular(a)
    return ChangeOfBasis(tuple(complete_parameters_of(poset)), tuple(tuple(r) for r in inv), "m_g")


def m_r_matrix(poset: StratumPoset, m_g: ChangeOfBasis | None = None) -> ChangeOfBasis:
    """m_r(xi, xi') = (-1)^(d(xi) - d(xi')) m_g^{-1}(xi', xi)."""
    m_g = m_g or m_g_matrix(poset)
    inv = _inverse_unitriangular([list(r) for r in m_g.matrix])
    d = stratum_dimensions(poset)
    n = len(d)
    mat = tuple(
        tuple((-1) ** ((d[i] - d[j]) % 2) * inv[j][i] for j in range(n)) for i in range(n)
    )
    return ChangeOfBasis(m_g.index, mat, "m_r")


@dataclass(frozen=True)
class CharacteristicCycle:
    """Multiplicity of each conormal-closure term, keyed by stratum id."""

    multiplicities: tuple[tuple[str, int], ...]

    def __getitem__(self, sid: str) -> int:
        return dict(self.multiplicities)[sid]

    def vector(self, order: list[str]) -> tuple[int, ...]:
        d = dict(self.multiplicities)
        return tuple(d[s] for s in order)

    def support(self) -> list[str]:
        return [s for s, m in self.multiplicities if m]


def stalk_euler(poset: StratumPoset, cls: KClass) -> dict[str, int]:
    """Euler characteristic of the stalk at a point of each stratum.

    A point of S sees only the mu-classes supported on S; each has a rank-one
    stalk, carrying the sign (-1)^dim S from the definition of mu.
    """
    assert cls.basis == "mu"
    out = {s.id: 0 for s in poset.strata}
    for (sid, _), c in zip(cls.index, cls.coeffs):
        out[sid] += c * (-1) ** poset.stratum(sid).dimension
    return out


def characteristic_cycle_of_class(poset: StratumPoset, cls: KClass) -> CharacteristicCycle:
    """chi = -n [X] - sum (n - n_x) [T*_x X] on each curve, n_x on isolated points."""
    _check_supported(poset)
    n = stalk_euler(poset, cls)
    mult = {}
    for s in poset.strata:
        if s.dimension == 1:
            mult[s.id] = -n[s.id]
        else:
            curve = poset.curve_containing(s.id)
            generic = n[curve.id] if curve is not None else 0
            mult[s.id] = n[s.id] - generic
    return CharacteristicCycle(tuple((s.id, mult[s.id]) for s in poset.ordered()))


def characteristic_cycle(poset: StratumPoset, sid: str, chi: int) -> CharacteristicCycle:
    """Characteristic cycle of the perverse sheaf P(S, chi)."""
    return characteristic_cycle_of_class(poset, ic_class_in_mu_basis(poset, sid, chi))


def arthur_microlocal_packet(poset: StratumPoset, sid: str) -> list[CompleteGeometric]:
    """All complete parameters whose P-class has nonzero multiplicity along S."""
    poset.stratum(sid)
    return [
        cp for cp in complete_parameters_of(poset)
        if characteristic_cycle(poset, *cp)[sid] != 0
    ]


def serialize_matrix(cob: ChangeOfBasis, poset: StratumPoset) -> dict:
    """Row-major integer lists with the index legend."""
    from .geoparams import complete_label

    return {
        "name": cob.name,
        "legend": [complete_label(poset, cp) for cp in cob.index],
        "rows": [list(r) for r in cob.matrix],
    }
