"""Langlands parameters as pairs (y, lambda) in torus-aligned form.

The dual group is realized inside GL(n) with its diagonal torus, so Cartan
vectors are diagonal coordinates and torus elements are lists of diagonal
entries.  ``y`` is ``n_w * exp(2 pi i v) * delta`` where ``n_w`` is the
signed permutation matrix (Tits representative) of a Weyl involution and
``delta`` generates the Galois factor of the product L-group.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .errors import (
    DimensionMismatch,
    InvalidParameter,
    NormalizationViolated,
    NotInNonIdentityComponent,
    SquareMismatch,
    UnsupportedGroup,
)
from .rootdatum import BasedRootDatum, CartanVector, gl, sl, torus, type_a_roots
from .scalars import I, ONE, ZERO, ExpScalar, GaussianRational, format_gaussian, gq


@dataclass(frozen=True)
class DualGroup:
    """A complex dual group realized in GL(n): kind is 'SL', 'GL' or 'T' (torus)."""

    kind: str
    n: int
    name: str = ""

    def __post_init__(self):
        if self.kind not in ("SL", "GL", "T"):
            raise UnsupportedGroup(self.kind)

    def roots(self) -> list[tuple[int, int]]:
        return [] if self.kind == "T" else type_a_roots(self.n)

    def datum(self) -> BasedRootDatum:
        return {"SL": sl, "GL": gl, "T": torus}[self.kind](self.n)

    def check_cartan(self, v: CartanVector) -> None:
        if len(v) != self.n:
            raise DimensionMismatch(f"{self.name or self.kind}: expected {self.n} coordinates, got {len(v)}")
        if self.kind == "SL" and sum(v.coords, ZERO) != ZERO:
            raise InvalidParameter(f"{v} is not trace zero")

    def is_cocharacter(self, v: CartanVector) -> bool:
        return all(c.is_integer() for c in v)

    def lattice_basis(self) -> list[CartanVector]:
        """A Z-basis of the cocharacter lattice of the diagonal torus."""
        out = []
        if self.kind == "SL":
            for k in range(self.n - 1):
                c = [0] * self.n
                c[k], c[k + 1] = 1, -1
                out.append(CartanVector.of(c))
        else:
            for k in range(self.n):
                c = [0] * self.n
                c[k] = 1
                out.append(CartanVector.of(c))
        return out

    def is_weyl_involution(self, perm: Sequence[int]) -> bool:
        if sorted(perm) != list(range(self.n)):
            return False
        if self.kind == "T" and any(p != k for k, p in enumerate(perm)):
            return False
        return all(perm[perm[k]] == k for k in range(self.n))


def pgl2_inner_class() -> DualGroup:
    """The dual group SL(2) of PGL(2), with L-group SL(2) x Gamma."""
    return DualGroup("SL", 2, "SL(2)")


def gl_dual(n: int) -> DualGroup:
    return DualGroup("GL", n, f"GL({n})")


def torus_dual(n: int) -> DualGroup:
    return DualGroup("T", n, f"T{n}")


def group_by_name(name: str) -> DualGroup:
    if name == "pgl2":
        return pgl2_inner_class()
    if name.startswith("gl") and name[2:].isdigit():
        return gl_dual(int(name[2:]))
    raise UnsupportedGroup(name)


def identity_perm(n: int) -> tuple[int, ...]:
    return tuple(range(n))


def swap_perm(n: int, a: int = 0, b: int = 1) -> tuple[int, ...]:
    p = list(range(n))
    p[a], p[b] = b, a
    return tuple(p)


def weyl_act(perm: Sequence[int], v: CartanVector) -> CartanVector:
    """w . v for a Weyl involution acting by coordinate permutation."""
    return CartanVector(tuple(v[perm[k]] for k in range(len(v))))


def tits_square(perm: Sequence[int]) -> tuple[GaussianRational, ...]:
    """Diagonal of n_w^2: -1 on every coordinate moved by w."""
    return tuple(-ONE if p != k else ONE for k, p in enumerate(perm))


def tits_entry(perm: Sequence[int], r: int, c: int) -> int:
    """Entry (r, c) of the signed permutation matrix n_w."""
    if perm[c] != r:
        return 0
    if r == c:
        return 1
    return 1 if r < c else -1


def torus_entries(v: CartanVector) -> tuple[ExpScalar, ...]:
    return tuple(ExpScalar.e(c) for c in v)


@dataclass(frozen=True, eq=False)
class ExtendedElement:
    """y = n_w * exp(2 pi i v) * delta^gamma in the product L-group."""

    weyl_part: tuple[int, ...]
    torus_exponent: CartanVector
    gamma_flag: bool = True

    def matrix(self) -> list[list[ExpScalar]]:
        """The G^vee-component n_w * exp(2 pi i v) as a monomial matrix."""
        n = len(self.weyl_part)
        t = torus_entries(self.torus_exponent)
        return [
            [t[c] * tits_entry(self.weyl_part, r, c) for c in range(n)] for r in range(n)
        ]

    def square_diagonal(self) -> tuple[ExpScalar, ...]:
        """y^2 lies in the torus; return its diagonal."""
        w = self.weyl_part
        v = self.torus_exponent
        sq = tits_square(w)
        return tuple(
            ExpScalar.e(v[w[k]] + v[k]) * sq[k] for k in range(len(w))
        )

    def is_diagonal(self) -> bool:
        return all(p == k for k, p in enumerate(self.weyl_part))

    def _key(self):
        # v is only defined modulo integers; compare the group element itself
        return (tuple(self.weyl_part), torus_entries(self.torus_exponent), self.gamma_flag)

    def __eq__(self, other):
        if not isinstance(other, ExtendedElement):
            return NotImplemented
        return self._key() == other._key()

    def __hash__(self):
        return hash(self._key())


@dataclass(frozen=True)
class LanglandsParameter:
    group: DualGroup
    y: ExtendedElement
    lam: CartanVector

    def ad_y_lambda(self) -> CartanVector:
        return weyl_act(self.y.weyl_part, self.lam)


def validate_parameter(group: DualGroup, y: ExtendedElement, lam: CartanVector) -> LanglandsParameter:
    """Check y lies over the Galois generator and y^2 = exp(2 pi i lambda)."""
    if not y.gamma_flag:
        raise NotInNonIdentityComponent("y must lie in G^L minus G^vee")
    group.check_cartan(lam)
    group.check_cartan(y.torus_exponent)
    if len(y.weyl_part) != group.n or not group.is_weyl_involution(y.weyl_part):
        raise InvalidParameter(f"{y.weyl_part} is not a Weyl involution of {group.name}")
    lhs = y.square_diagonal()
    rhs = torus_entries(lam)
    if lhs != rhs:
        raise SquareMismatch(
            "y^2 = diag(" + ", ".join(map(str, lhs)) + ") but exp(2 pi i lambda) = diag("
            + ", ".join(map(str, rhs)) + ")"
        )
    return LanglandsParameter(group, y, lam)


def is_tempered(p: LanglandsParameter) -> bool:
    """lambda + Ad(y) lambda lies in X_*(H^vee) tensor iR."""
    s = p.lam + p.ad_y_lambda()
    return all(c.re == 0 for c in s)


def is_discrete_series_packet(p: LanglandsParameter) -> bool:
    """Ad(y) acts by inversion on the torus, i.e. w = -1 on the cocharacter lattice."""
    w = p.y.weyl_part
    return all(weyl_act(w, b) == -b for b in p.group.lattice_basis())


@dataclass(frozen=True)
class FiniteAbelianGroup:
    divisors: tuple[int, ...] = ()

    def __post_init__(self):
        if any(d < 2 for d in self.divisors):
            raise ValueError("elementary divisors must be >= 2")

    @property
    def order(self) -> int:
        out = 1
        for d in self.divisors:
            out *= d
        return out

    def is_trivial(self) -> bool:
        return not self.divisors

    def character_labels(self) -> list[str]:
        if self.divisors == ():
            return ["triv"]
        if self.divisors == (2,):
            return ["triv", "sgn"]
        return [f"chi{k}" for k in range(self.order)]

    def __str__(self):
        if not self.divisors:
            return "1"
        return " x ".join(f"Z/{d}" for d in self.divisors)


TRIVIAL_GROUP = FiniteAbelianGroup()
Z2 = FiniteAbelianGroup((2,))


def component_group(p: LanglandsParameter) -> FiniteAbelianGroup:
    """pi_0 of Z_{G^vee}(y, lambda) for the supported groups."""
    g = p.group
    if g.kind in ("GL", "T"):
        # centralizers in GL(n) and in tori are connected
        return TRIVIAL_GROUP
    if g.kind == "SL" and g.n == 2:
        # diagonal y: centralizer H^vee or G^vee; antidiagonal y: {+-Id}
        return TRIVIAL_GROUP if p.y.is_diagonal() else Z2
    raise UnsupportedGroup(f"component group for {g.name}")


def centralizer_label(p: LanglandsParameter) -> str:
    """The centralizer column of the PGL(2) tables."""
    if p.group != pgl2_inner_class():
        raise UnsupportedGroup(p.group.name)
    if not p.y.is_diagonal():
        return "{±Id}"
    central_y = all(e.is_constant() and e.coef in (ONE, -ONE) for e in torus_entries(p.y.torus_exponent))
    if p.lam.is_zero() and central_y:
        return "G∨"
    return "H∨"


@dataclass(frozen=True)
class CompleteLanglandsParameter:
    param: LanglandsParameter
    tau: int = 0

    def __post_init__(self):
        order = component_group(self.param).order
        if not 0 <= self.tau < order:
            raise InvalidParameter(f"tau={self.tau} outside the {order} characters")


def complete_parameters(p: LanglandsParameter) -> list[CompleteLanglandsParameter]:
    return [CompleteLanglandsParameter(p, t) for t in range(component_group(p).order)]


# the PGL(2) inner class ----------------------------------------------------------


def lam_a(a) -> CartanVector:
    a = gq(a)
    return CartanVector((a, -a))


def check_normalized(a: GaussianRational) -> None:
    if a.re < 0 or (a.re == 0 and a.im < 0):
        raise NormalizationViolated(f"a={a}: need Re(a) >= 0, and Im(a) >= 0 when Re(a) = 0")


def enumerate_parameters(group: DualGroup, a) -> list[LanglandsParameter]:
    """Conjugacy-class representatives with lambda = diag(a, -a), in table order."""
    if group != pgl2_inner_class():
        raise UnsupportedGroup(f"enumeration is implemented for the PGL(2) inner class, not {group.name}")
    a = gq(a)
    check_normalized(a)
    lam = lam_a(a)
    e, s = identity_perm(2), swap_perm(2)
    q = Fraction(1, 4)
    if a.is_half_odd_integer():
        ys = [
            ExtendedElement(e, CartanVector.of(q, -q)),
            ExtendedElement(e, CartanVector.of(-q, q)),
            ExtendedElement(s, CartanVector.zero(2)),
        ]
    else:
        h = a * Fraction(1, 2)
        ys = [
            ExtendedElement(e, CartanVector((h, -h))),
            ExtendedElement(e, CartanVector((h + Fraction(1, 2), -h - Fraction(1, 2)))),
        ]
    return [validate_parameter(group, y, lam) for y in ys]


def pgl2_a(p: LanglandsParameter) -> GaussianRational:
    return p.lam[0]


def normalize_pgl2(p: LanglandsParameter) -> LanglandsParameter:
    """Conjugate by the Weyl reflection when a violates the normalization."""
    a = pgl2_a(p)
    if a.re > 0 or (a.re == 0 and a.im >= 0):
        return p
    s = swap_perm(2)
    y = ExtendedElement(p.y.weyl_part, weyl_act(s, p.y.torus_exponent), p.y.gamma_flag)
    return validate_parameter(p.group, y, weyl_act(s, p.lam))


ROW_KINDS = (
    "spherical-finite",
    "nonspherical-finite",
    "discrete-series",
    "spherical-principal",
    "nonspherical-principal",
)


def pgl2_row_kind(p: LanglandsParameter) -> str:
    """Which row of the PGL(2) table the (normalized) parameter belongs to."""
    p = normalize_pgl2(p)
    a = pgl2_a(p)
    if not p.y.is_diagonal():
        return "discrete-series"
    first = ExpScalar.e(p.y.torus_exponent[0])
    if a.is_half_odd_integer():
        return "spherical-finite" if first == ExpScalar.const(I) else "nonspherical-finite"
    return "spherical-principal" if first == ExpScalar.e(a * Fraction(1, 2)) else "nonspherical-principal"


@dataclass(frozen=True)
class PacketLabel:
    real_form: str
    description: str
    infinitesimal_character: CartanVector

    def __str__(self):
        return f"{self.real_form}: {self.description}"


def _dim_text(a: GaussianRational) -> str:
    return format_gaussian(a + Fraction(1, 2))


def packet_labels(c: CompleteLanglandsParameter | LanglandsParameter) -> list[PacketLabel]:
    """L-packet members of each real form in the PGL(2) inner class (empty forms omitted)."""
    p = c.param if isinstance(c, CompleteLanglandsParameter) else c
    if p.group != pgl2_inner_class():
        raise UnsupportedGroup(p.group.name)
    p = normalize_pgl2(p)
    a = pgl2_a(p)
    kind = pgl2_row_kind(p)
    at = format_gaussian(a)
    if kind == "spherical-finite":
        rows = [("split", f"spherical finite-dimensional of dimension {_dim_text(a)}")]
    elif kind == "nonspherical-finite":
        rows = [("split", f"non-spherical finite-dimensional of dimension {_dim_text(a)}")]
    elif kind == "discrete-series":
        rows = [
            ("split", f"discrete series of infinitesimal character {at}"),
            ("compact", f"finite-dimensional of dimension {_dim_text(a)}"),
        ]
    elif kind == "spherical-principal":
        rows = [("split", f"spherical principal series of infinitesimal character {at}")]
    else:
        rows = [("split", f"non-spherical principal series of infinitesimal character {at}")]
    return [PacketLabel(form, text, p.lam) for form, text in rows]


def representation_label(c: CompleteLanglandsParameter) -> PacketLabel:
    """The single representation attached to a complete parameter."""
    labels = packet_labels(c)
    return labels[c.tau] if len(labels) > 1 else labels[0]


def short_name(label: PacketLabel) -> str:
    """Names used in the Arthur-packet tables: triv / sgn for one-dimensional reps."""
    d = label.description
    if d.endswith("finite-dimensional of dimension 1"):
        return "sgn" if d.startswith("non-spherical") else "triv"
    return d


FORM_GROUP = {"split": "G_s", "compact": "G_c"}


# rendering ----------------------------------------------------------------------


def _pgl2_entry(x: ExpScalar, a: GaussianRational, sign: int) -> str:
    if x.is_zero():
        return "0"
    if x.is_constant():
        return format_gaussian(x.coef)
    base = ExpScalar.e(a * Fraction(sign, 2))
    at = format_gaussian(a)
    txt = f"exp({'-' if sign < 0 else ''}pi i*{at})"
    if x == base:
        return txt
    if x == -base:
        return "-" + txt
    return str(x)


def format_y(p: LanglandsParameter) -> str:
    m = p.y.matrix()
    if p.group == pgl2_inner_class():
        a = pgl2_a(p)
        if p.y.is_diagonal():
            return f"diag({_pgl2_entry(m[0][0], a, 1)}, {_pgl2_entry(m[1][1], a, -1)})"
        return "[[" + ", ".join(_pgl2_entry(x, a, 1) for x in m[0]) + "], [" + ", ".join(
            _pgl2_entry(x, a, 1) for x in m[1]
        ) + "]]"
    if p.y.is_diagonal():
        return "diag(" + ", ".join(str(m[k][k]) for k in range(len(m))) + ")"
    return "[" + ", ".join("[" + ", ".join(str(x) if not x.is_zero() else "0" for x in row) + "]" for row in m) + "]"


def format_lambda(lam: CartanVector) -> str:
    return "diag(" + ", ".join(str(c) for c in lam) + ")"
