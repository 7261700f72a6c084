"""Arthur parameters, their Langlands parameters, and the duality map to coadjoint covers.

An Arthur parameter is stored in aligned form: the SL(2)-part is the partition
``q`` whose blocks occupy consecutive coordinates (in order), the C^x-part is
``z -> z^lambda_hol * zbar^lambda_anti`` on the diagonal torus, and for real
groups ``j_part`` is the image of j.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations_with_replacement, product
from typing import Sequence

from .errors import (
    BlockMismatch,
    InvalidParameter,
    SL2NotInLevi,
    UnsupportedFixture,
    UnsupportedGroup,
)
from .lparams import (
    DualGroup,
    ExtendedElement,
    LanglandsParameter,
    gl_dual,
    identity_perm,
    pgl2_inner_class,
    swap_perm,
    validate_parameter,
    weyl_act,
)
from .orbits import (
    ComplexFunctional,
    InductionDatum,
    RealCoadjointDescriptor,
    bind,
    iota,
    iota_descriptor,
    iota_inverse_descriptor,
    is_integral_center,
    minimal_datum,
)
from .partitions import LeviBlocks, Partition, partitions
from .rootdatum import CartanVector
from .scalars import GaussianRational, gq


def _q_ranges(q: Partition) -> list[range]:
    out, start = [], 0
    for part in q.parts:
        out.append(range(start, start + part))
        start += part
    return out


@dataclass(frozen=True)
class ArthurParameter:
    group: DualGroup
    sl2_partition: Partition
    lambda_hol: CartanVector
    lambda_anti: CartanVector
    j_part: ExtendedElement | None = None

    def __post_init__(self):
        g = self.group
        if self.sl2_partition.total != g.n:
            raise InvalidParameter(f"q={self.sl2_partition} does not partition {g.n}")
        g.check_cartan(self.lambda_hol)
        g.check_cartan(self.lambda_anti)
        diff = self.lambda_hol - self.lambda_anti
        if not g.is_cocharacter(diff):
            raise InvalidParameter("lambda_hol - lambda_anti must lie in the cocharacter lattice")
        if any((h + a).re != 0 for h, a in zip(self.lambda_hol, self.lambda_anti)):
            raise InvalidParameter("C^x-part is unbounded: Re(lambda_hol + lambda_anti) != 0")
        if self.j_part is not None:
            j = self.j_part
            if weyl_act(j.weyl_part, self.lambda_hol) != self.lambda_anti:
                raise InvalidParameter("Ad(psi(j)) must carry lambda_hol to lambda_anti")
            for r in _q_ranges(self.sl2_partition):
                if len(r) == 1:
                    continue
                if any(j.weyl_part[k] != k for k in r):
                    raise InvalidParameter("psi(j) must commute with the SL(2)-part")
                vals = {(j.torus_exponent[k] - j.torus_exponent[r.start]) for k in r}
                if any(not v.is_integer() for v in vals):
                    raise InvalidParameter("psi(j) must act by a scalar on each SL(2)-block")

    @property
    def n(self) -> int:
        return self.group.n

    def cx_value(self, k: int) -> tuple[GaussianRational, GaussianRational]:
        return (self.lambda_hol[k], self.lambda_anti[k])


def classify_arthur(psi: ArthurParameter) -> str:
    if psi.lambda_hol.is_zero() and psi.lambda_anti.is_zero():
        return "unipotent"
    if psi.sl2_partition.is_zero_orbit():
        return "tempered"
    return "mixed"


def jacobson_morozov_half(q: Partition) -> CartanVector:
    """h_q / 2: on a block of size m the entries (m-1)/2, (m-3)/2, ..., -(m-1)/2."""
    out = []
    for m in q.parts:
        out.extend(Fraction(m - 1 - 2 * k, 2) for k in range(m))
    return CartanVector.of(out)


def phi_of_psi(psi: ArthurParameter) -> LanglandsParameter:
    """lambda = lambda_hol + h_q/2 and y = exp(pi i lambda) psi(j)."""
    if psi.j_part is None:
        raise InvalidParameter("phi_psi needs the image of j (real-group parameter)")
    lam = psi.lambda_hol + jacobson_morozov_half(psi.sl2_partition)
    j = psi.j_part
    # exp(pi i lam) n_w = n_w exp(pi i w.lam)
    v = weyl_act(j.weyl_part, lam).scale(Fraction(1, 2)) + j.torus_exponent
    return validate_parameter(psi.group, ExtendedElement(j.weyl_part, v, True), lam)


# the PGL(2) parameters of the worked example --------------------------------------


def _vec(v) -> CartanVector:
    return v if isinstance(v, CartanVector) else CartanVector.of(v)


def _pgl2(q, hol, anti, w, v) -> ArthurParameter:
    return ArthurParameter(
        pgl2_inner_class(), Partition.of(q), _vec(hol), _vec(anti), ExtendedElement(w, _vec(v))
    )


def psi_plus() -> ArthurParameter:
    """Principal SL(2), trivial on W_R."""
    return _pgl2((2,), (0, 0), (0, 0), identity_perm(2), (0, 0))


def psi_minus() -> ArthurParameter:
    """Principal SL(2), j sent to -Id (times the Galois generator)."""
    h = Fraction(1, 2)
    return _pgl2((2,), (0, 0), (0, 0), identity_perm(2), (h, -h))


def tempered_arthur(p: LanglandsParameter) -> ArthurParameter:
    """The Arthur parameter with trivial SL(2)-part restricting to a tempered p."""
    hol = p.lam
    anti = p.ad_y_lambda()
    w = p.y.weyl_part
    j_v = p.y.torus_exponent - weyl_act(w, hol).scale(Fraction(1, 2))
    return ArthurParameter(
        p.group, Partition((1,) * p.group.n), hol, anti, ExtendedElement(w, j_v)
    )


def psi_ds(a) -> ArthurParameter:
    a = gq(a)
    if not a.is_half_odd_integer() or a.re < 0:
        raise InvalidParameter("discrete series needs a in 1/2 + Z_{>=0}")
    lam = CartanVector((a, -a))
    return _pgl2((1, 1), lam, weyl_act(swap_perm(2), lam), swap_perm(2),
                 (a * Fraction(1, 2), -a * Fraction(1, 2)))


def psi_sp(a) -> ArthurParameter:
    a = gq(a)
    return _pgl2((1, 1), (a, -a), (a, -a), identity_perm(2), (0, 0))


def psi_nsp(a) -> ArthurParameter:
    a = gq(a)
    h = Fraction(1, 2)
    return _pgl2((1, 1), (a, -a), (a, -a), identity_perm(2), (h, -h))


# complex groups: Levi splitting and duality ------------------------------------------


@dataclass(frozen=True)
class LeviSplit:
    levi: LeviBlocks
    psi0: tuple[ArthurParameter, ...]
    xi1: ComplexFunctional


def central_value(hol: GaussianRational, anti: GaussianRational) -> GaussianRational:
    """Differential k + it of the unitary character matching z -> z^hol zbar^anti.

    With k = hol - anti and |z|_C = z zbar, z^hol zbar^anti = (z/|z|)^k |z|_C^{(hol+anti)/2}.
    """
    return (hol - anti) + (hol + anti) * Fraction(1, 2)


def complex_arthur(n: int, q: Sequence[int], cx: Sequence[tuple]) -> ArthurParameter:
    """GL(n) parameter with SL(2)-blocks q (in order) and one (hol, anti) pair per block."""
    qp = Partition(tuple(q))
    if len(cx) != len(qp):
        raise InvalidParameter("need one C^x value per SL(2)-block")
    hol, anti = [], []
    for m, (h, a) in zip(qp.parts, cx):
        hol += [gq(h)] * m
        anti += [gq(a)] * m
    return ArthurParameter(gl_dual(n), qp, CartanVector(tuple(hol)), CartanVector(tuple(anti)))


def split_at_levi(psi: ArthurParameter) -> LeviSplit:
    """L^vee = centralizer of psi(C^x); psi0 the SL(2)-part on L, xi1 the central character."""
    if psi.group.kind != "GL" and not (psi.lambda_hol.is_zero() and psi.lambda_anti.is_zero()):
        raise UnsupportedGroup("Levi splitting needs a GL(n) dual group")
    order: list[tuple] = []
    blocks: dict[tuple, list[int]] = {}
    for r in _q_ranges(psi.sl2_partition):
        vals = {psi.cx_value(k) for k in r}
        if len(vals) != 1:
            raise SL2NotInLevi(f"SL(2)-block on coordinates {list(r)} does not centralize psi(C^x)")
        (val,) = vals
        if val not in blocks:
            order.append(val)
            blocks[val] = []
        blocks[val].append(len(r))
    sizes = tuple(sum(blocks[v]) for v in order)
    psi0 = tuple(
        ArthurParameter(
            DualGroup(psi.group.kind, sum(blocks[v]), psi.group.name if len(order) == 1 else f"GL({sum(blocks[v])})"),
            Partition.of(blocks[v]),
            CartanVector.zero(sum(blocks[v])),
            CartanVector.zero(sum(blocks[v])),
            psi.j_part if len(order) == 1 else None,
        )
        for v in order
    )
    xi1 = ComplexFunctional(tuple(central_value(h, a) for h, a in order))
    return LeviSplit(LeviBlocks(sizes), psi0, xi1)


def d_zero(q_blocks: Sequence[Partition] | Partition, levi: LeviBlocks) -> tuple[Partition, ...]:
    """Nilpotent orbit of L attached to a unipotent parameter: transpose on each block."""
    if isinstance(q_blocks, Partition):
        q_blocks = (q_blocks,)
    if len(q_blocks) != len(levi) or any(q.total != s for q, s in zip(q_blocks, levi)):
        raise BlockMismatch(f"SL(2)-parts {tuple(map(str, q_blocks))} do not fit Levi {levi}")
    return tuple(q.transpose() for q in q_blocks)


def duality_datum(psi: ArthurParameter) -> InductionDatum:
    split = split_at_levi(psi)
    orbits = d_zero(tuple(p.sl2_partition for p in split.psi0), split.levi)
    return InductionDatum(split.levi, orbits, split.xi1.coords)


def duality_map(psi: ArthurParameter) -> RealCoadjointDescriptor:
    """D(psi) = iota(Bind(L, D_0(psi_0), xi_1))."""
    datum = duality_datum(psi)
    assert is_integral_center(datum.xi, datum.levi)
    return iota_descriptor(bind(datum))


# Kirillov packets --------------------------------------------------------------------


@dataclass(frozen=True)
class PacketDescriptor:
    levi: LeviBlocks
    labels: tuple[str, ...]
    character: tuple  # iota(xi) per Levi block, as (value on 1, value on i)

    def name(self) -> str:
        if len(self.levi) == 1:
            return "unipotent: " + ", ".join(self.labels)
        if all(s == 1 for s in self.levi):
            return "unitary principal series Ind(" + self._chi() + ")"
        return f"unitarily induced from L={self.levi}: " + ", ".join(self.labels) + f" x {self._chi()}"

    def _chi(self) -> str:
        return "chi[" + ", ".join(f"i*({a}, {b})" for a, b in self.character) + "]"


# Unip_{O_L}(L) for the only rigid orbits that occur in type A (zero orbits), and the
# rank-one real-group table of the PGL(2) example.
_PGL2_UNIP = {((0, 0, (1, 1)),): ("triv of G_s", "triv of G_c")}


def unipotent_labels(levi: LeviBlocks, orbits: Sequence[Partition]) -> tuple[str, ...]:
    labels = []
    for s, p in zip(levi, orbits):
        if not p.is_zero_orbit():
            raise UnsupportedFixture(f"no Unip table for orbit {p} of GL({s})")
        labels.append(f"trivial representation of GL({s})")
    return tuple(labels)


def kirillov_packet_descriptor(cover: RealCoadjointDescriptor, fixture: str = "gl") -> PacketDescriptor:
    """(L, Unip_{O_L}(L), iota(xi)) for the minimal datum binding to cover."""
    desc = iota_inverse_descriptor(cover)
    datum = minimal_datum(desc)
    if not is_integral_center(datum.xi, datum.levi):
        raise UnsupportedFixture(f"cover {cover} is not integral")
    chi = tuple(
        (f.on_real[0], f.on_imag[0]) for f in (iota(ComplexFunctional((v,))) for v in datum.xi)
    )
    if fixture == "pgl2":
        key = tuple((v.re, v.im, p.parts) for v, p in desc.parts)
        if key not in _PGL2_UNIP:
            raise UnsupportedFixture(f"no PGL(2) fixture for {cover}")
        return PacketDescriptor(datum.levi, _PGL2_UNIP[key], chi)
    if fixture != "gl":
        raise UnsupportedFixture(fixture)
    return PacketDescriptor(datum.levi, unipotent_labels(datum.levi, datum.orbits), chi)


# grids -------------------------------------------------------------------------------

CX_SAMPLES: tuple[tuple[GaussianRational, GaussianRational], ...] = (
    (gq(0), gq(0)),
    (gq("1/2"), gq("-1/2")),
    (gq("-1/2"), gq("1/2")),
    (gq("i"), gq("i")),
    (gq("1/2+1/2i"), gq("-1/2+1/2i")),
    (gq(1), gq(-1)),
)


def arthur_grid(n: int, samples=CX_SAMPLES) -> list[ArthurParameter]:
    """One representative per conjugacy class: q over all partitions of n, one sample
    C^x-value per SL(2)-block (multisets within runs of equal block size)."""
    out = []
    for q in partitions(n):
        runs: dict[int, int] = {}
        for m in q.parts:
            runs[m] = runs.get(m, 0) + 1
        choices = [
            list(combinations_with_replacement(range(len(samples)), count))
            for _, count in sorted(runs.items(), reverse=True)
        ]
        for pick in product(*choices):
            idx = [i for run in pick for i in run]
            out.append(complex_arthur(n, q.parts, [samples[i] for i in idx]))
    return out


def conjugacy_key(psi: ArthurParameter) -> tuple:
    return tuple(sorted(
        (m, psi.cx_value(r.start)[0].sort_key(), psi.cx_value(r.start)[1].sort_key())
        for m, r in zip(psi.sl2_partition.parts, _q_ranges(psi.sl2_partition))
    ))
