"""Canonical flats, geometric parameters, and orbit stratifications of X(O, G^L).

Stratifications are produced by case analysis: the quotient M(lambda)/P(lambda)
is either a point or P^1, and the symmetric subgroup K_i(lambda) is either the
torus or all of G^vee.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .errors import UnsupportedGeometry
from .lparams import (
    TRIVIAL_GROUP,
    Z2,
    DualGroup,
    ExtendedElement,
    FiniteAbelianGroup,
    LanglandsParameter,
    component_group,
    enumerate_parameters,
    normalize_pgl2,
    pgl2_inner_class,
    torus_entries,
    validate_parameter,
)
from .rootdatum import CartanVector
from .scalars import ExpScalar, GaussianRational, gq

Root = tuple[int, int]


@dataclass(frozen=True)
class GradedSubsystem:
    """Integral roots of lambda graded by n = <alpha, lambda>."""

    grades: tuple[tuple[Root, int], ...]

    def grade(self, root: Root) -> int | None:
        return dict(self.grades).get(root)

    @property
    def roots(self) -> tuple[Root, ...]:
        return tuple(r for r, _ in self.grades)

    @property
    def l_roots(self) -> tuple[Root, ...]:
        return tuple(r for r, n in self.grades if n == 0)

    @property
    def u_roots(self) -> tuple[Root, ...]:
        return tuple(r for r, n in self.grades if n > 0)

    @property
    def p_roots(self) -> tuple[Root, ...]:
        return tuple(r for r, n in self.grades if n >= 0)


def root_value(root: Root, lam: CartanVector) -> GaussianRational:
    i, j = root
    return lam[i] - lam[j]


def integral_graded_system(group: DualGroup, lam: CartanVector) -> GradedSubsystem:
    """Roots of m(lambda) = Z(exp(2 pi i lambda)) with their lambda-eigenvalue."""
    group.check_cartan(lam)
    grades = []
    for root in group.roots():
        v = root_value(root, lam)
        if v.is_integer():
            grades.append((root, int(v.re)))
    return GradedSubsystem(tuple(grades))


@dataclass(frozen=True)
class CanonicalFlat:
    """F(lambda) = lambda + u(lambda), recorded by its base point and the u-roots."""

    base: CartanVector
    u_roots: tuple[Root, ...]

    def e_value(self) -> tuple[ExpScalar, ...]:
        """exp(2 pi i .) on the flat, read off at the base point."""
        return torus_entries(self.base)

    def member(self, coeffs: dict[Root, GaussianRational]) -> list[list[GaussianRational]]:
        """The matrix lambda + sum c_alpha X_alpha for coefficients on u-roots."""
        n = len(self.base)
        m = [[gq(0)] * n for _ in range(n)]
        for k in range(n):
            m[k][k] = self.base[k]
        for root, c in coeffs.items():
            if root not in self.u_roots:
                raise ValueError(f"{root} is not a root of u(lambda)")
            i, j = root
            m[i][j] = m[i][j] + gq(c)
        return m

    def __eq__(self, other):
        if not isinstance(other, CanonicalFlat):
            return NotImplemented
        return self.base == other.base

    def __hash__(self):
        return hash(self.base)


def canonical_flat(group: DualGroup, lam: CartanVector) -> CanonicalFlat:
    return CanonicalFlat(lam, integral_graded_system(group, lam).u_roots)


@dataclass(frozen=True)
class GeometricParameter:
    y: ExtendedElement
    flat: CanonicalFlat


def to_geometric(p: LanglandsParameter) -> GeometricParameter:
    flat = canonical_flat(p.group, p.lam)
    assert p.y.square_diagonal() == flat.e_value()
    return GeometricParameter(p.y, flat)


@dataclass(frozen=True)
class Stratum:
    id: str
    dimension: int
    fundamental_group: FiniteAbelianGroup
    boundary: tuple[str, ...] = ()
    parameter: LanglandsParameter | None = field(default=None, compare=False)

    def characters(self) -> list[str]:
        return self.fundamental_group.character_labels()


@dataclass(frozen=True)
class StratumPoset:
    lam: CartanVector
    group: DualGroup
    strata: tuple[Stratum, ...]
    geometry: str = "point"

    def stratum(self, sid: str) -> Stratum:
        for s in self.strata:
            if s.id == sid:
                return s
        raise KeyError(sid)

    def closure(self, sid: str) -> set[str]:
        s = self.stratum(sid)
        return {sid, *s.boundary}

    def leq(self, a: str, b: str) -> bool:
        """a lies in the closure of b."""
        return a in self.closure(b)

    def ordered(self) -> list[Stratum]:
        return sorted(self.strata, key=lambda s: (s.dimension, s.id))

    def curve_containing(self, sid: str) -> Stratum | None:
        for s in self.strata:
            if sid in s.boundary:
                return s
        return None


def _classify_sl2(lam: CartanVector) -> str:
    a = lam[0]
    if not (2 * a).is_integer():
        return "point"  # no integral roots, M(lambda) = H^vee
    if a == 0:
        return "point"  # all roots at grade 0, P(lambda) = G^vee
    if a.is_integer():
        return "p1-closed"  # e(lambda) = Id: K = G^vee acts transitively on P^1
    return "p1-torus"  # e(lambda) = -Id: K = T^vee, three orbits


def stratify_orbit(lam: CartanVector, group: DualGroup | None = None) -> StratumPoset:
    """Orbits of G^vee on X(O, G^L), O = G^vee . lambda, via K_i(lambda)-orbits on M/P."""
    group = group or pgl2_inner_class()
    group.check_cartan(lam)
    if group.kind == "T":
        return _stratify_torus(lam, group)
    if group != pgl2_inner_class():
        raise UnsupportedGeometry(f"stratification for {group.name} (flag variety beyond P^1)")
    rep = normalize_pgl2(validate_parameter(group, _any_y(lam), lam)).lam
    params = enumerate_parameters(group, rep[0])
    geometry = _classify_sl2(rep)
    if geometry == "p1-torus":
        north, south, disc = params
        strata = (
            Stratum("N", 0, TRIVIAL_GROUP, (), north),
            Stratum("S", 0, TRIVIAL_GROUP, (), south),
            Stratum("U", 1, Z2, ("N", "S"), disc),
        )
    elif geometry == "p1-closed":
        strata = tuple(Stratum(f"C{k}", 1, TRIVIAL_GROUP, (), p) for k, p in enumerate(params))
    else:
        strata = tuple(Stratum(f"P{k}", 0, component_group(p), (), p) for k, p in enumerate(params))
    return StratumPoset(rep, group, strata, geometry)


def _any_y(lam: CartanVector) -> ExtendedElement:
    half = CartanVector(tuple(c * Fraction(1, 2) for c in lam))
    return ExtendedElement(tuple(range(len(lam))), half)


def _stratify_torus(lam: CartanVector, group: DualGroup) -> StratumPoset:
    # y = t * delta with t^2 = exp(2 pi i lambda): t_k = +-exp(pi i lambda_k)
    n = group.n
    strata = []
    for mask in range(2 ** n):
        v = CartanVector(
            tuple(lam[k] * Fraction(1, 2) + Fraction((mask >> k) & 1, 2) for k in range(n))
        )
        p = validate_parameter(group, ExtendedElement(tuple(range(n)), v), lam)
        strata.append(Stratum(f"P{mask}", 0, TRIVIAL_GROUP, (), p))
    return StratumPoset(lam, group, tuple(strata), "point")


CompleteGeometric = tuple[str, int]


def complete_parameters_of(poset: StratumPoset) -> list[CompleteGeometric]:
    """(stratum id, character index) pairs ordered by dimension, id, character."""
    return [
        (s.id, k) for s in poset.ordered() for k in range(s.fundamental_group.order)
    ]


def complete_label(poset: StratumPoset, cp: CompleteGeometric) -> str:
    sid, k = cp
    return f"({sid},{poset.stratum(sid).characters()[k]})"


def stratum_of(poset: StratumPoset, p: LanglandsParameter) -> Stratum:
    """The stratum containing the geometric parameter of p."""
    for s in poset.strata:
        if s.parameter is not None and s.parameter == p:
            return s
    raise KeyError("parameter not in this poset")
