"""Type-A coadjoint orbit combinatorics: iota, integrality, birational induction.

A coadjoint orbit of GL(n) is recorded by its semisimple part (distinct
eigenvalues) and, for each eigenvalue, the Jordan type of the nilpotent part
in the centralizer.  Nilpotent orbits of GL(n) are simply connected, so covers
never appear.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import product
from typing import Iterable, Iterator, Sequence

from .errors import BlockMismatch
from .partitions import (
    LeviBlocks,
    Partition,
    coarsenings,
    partition_colsum,
    partition_tuples,
    partitions,
    zero_orbit,
)
from .scalars import ZERO, GaussianRational, gq


@dataclass(frozen=True)
class ComplexFunctional:
    """Coordinates of an element of g* (or z(l)*) in a fixed basis."""

    coords: tuple[GaussianRational, ...]

    def __post_init__(self):
        object.__setattr__(self, "coords", tuple(gq(c) for c in self.coords))

    @classmethod
    def of(cls, *values) -> ComplexFunctional:
        if len(values) == 1 and isinstance(values[0], (list, tuple)):
            values = tuple(values[0])
        return cls(tuple(values))

    def __len__(self):
        return len(self.coords)

    def __iter__(self):
        return iter(self.coords)

    def __getitem__(self, k):
        return self.coords[k]

    def evaluate(self, x: Sequence) -> GaussianRational:
        """mu(X) for X given by complex coordinates in the dual basis."""
        total = ZERO
        for m, c in zip(self.coords, x):
            total = total + m * gq(c)
        return total


@dataclass(frozen=True)
class ImaginaryFunctional:
    """An R-linear map g -> iR, stored by its i-coefficients on each e_k and i*e_k."""

    on_real: tuple[Fraction, ...]
    on_imag: tuple[Fraction, ...]

    def __post_init__(self):
        if len(self.on_real) != len(self.on_imag):
            raise ValueError("need values on both e_k and i*e_k")
        object.__setattr__(self, "on_real", tuple(Fraction(x) for x in self.on_real))
        object.__setattr__(self, "on_imag", tuple(Fraction(x) for x in self.on_imag))

    def __len__(self):
        return len(self.on_real)

    def evaluate(self, x: Sequence) -> GaussianRational:
        """lambda(X) as a purely imaginary number, X = sum (s_k + i t_k) e_k."""
        total = Fraction(0)
        for a, b, c in zip(self.on_real, self.on_imag, x):
            c = gq(c)
            total += a * c.re + b * c.im
        return GaussianRational(0, total)

    def conjugate(self) -> ImaginaryFunctional:
        """X -> conj(lambda(conj X))."""
        return ImaginaryFunctional(tuple(-a for a in self.on_real), self.on_imag)

    def __add__(self, other: ImaginaryFunctional) -> ImaginaryFunctional:
        return ImaginaryFunctional(
            tuple(a + b for a, b in zip(self.on_real, other.on_real)),
            tuple(a + b for a, b in zip(self.on_imag, other.on_imag)),
        )

    def scale(self, c: Fraction) -> ImaginaryFunctional:
        return ImaginaryFunctional(tuple(c * a for a in self.on_real), tuple(c * b for b in self.on_imag))


def iota(mu: ComplexFunctional) -> ImaginaryFunctional:
    """iota(mu)(X) = i * Im(mu(X))."""
    return ImaginaryFunctional(
        tuple(m.im for m in mu.coords),
        tuple(m.re for m in mu.coords),  # Im(mu(i e_k)) = Re(mu_k)
    )


def iota_inverse(lam: ImaginaryFunctional) -> ComplexFunctional:
    """iota^{-1}(lambda)(X) = lambda(X) - i * lambda(iX)."""
    coords = []
    for a, b in zip(lam.on_real, lam.on_imag):
        # lambda(e_k) = i a, lambda(i e_k) = i b  ->  i a - i (i b) = b + i a
        coords.append(GaussianRational(b, a))
    return ComplexFunctional(tuple(coords))


def _block_values(xi: ComplexFunctional | Sequence, levi: LeviBlocks) -> tuple[GaussianRational, ...]:
    """Accept one value per block, or n coordinates constant on each block."""
    vals = tuple(gq(v) for v in xi)
    if len(vals) == len(levi):
        return vals
    if len(vals) == levi.n:
        out = []
        for r in levi.ranges():
            block = {vals[k] for k in r}
            if len(block) != 1:
                raise BlockMismatch(f"xi is not constant on block {list(r)}")
            out.append(vals[r.start])
        return tuple(out)
    raise BlockMismatch(f"xi has {len(vals)} entries for blocks {levi}")


def is_integral_center(xi: ComplexFunctional | Sequence, levi: LeviBlocks) -> bool:
    """Whether (1/2)(iota(xi) + conj iota(xi)) lies in the character lattice.

    On a block GL(m) the unitary characters are (det/|det|)^k |det|_C^{it}; the
    half-sum keeps only the k-part, read off on the i-direction of each block.
    """
    lam = iota(ComplexFunctional(_block_values(xi, levi)))
    half_sum = (lam + lam.conjugate()).scale(Fraction(1, 2))
    return not any(half_sum.on_real) and all(b.denominator == 1 for b in half_sum.on_imag)


@dataclass(frozen=True)
class InductionDatum:
    levi: LeviBlocks
    orbits: tuple[Partition, ...]
    xi: tuple[GaussianRational, ...]

    def __post_init__(self):
        object.__setattr__(self, "xi", tuple(gq(v) for v in self.xi))
        object.__setattr__(self, "orbits", tuple(self.orbits))
        if len(self.orbits) != len(self.levi) or len(self.xi) != len(self.levi):
            raise BlockMismatch("need one orbit and one xi-value per Levi block")
        for p, s in zip(self.orbits, self.levi):
            if p.total != s:
                raise BlockMismatch(f"orbit {p} does not partition block size {s}")

    @classmethod
    def make(cls, levi: Sequence[int], orbits: Iterable, xi: Iterable | None = None) -> InductionDatum:
        lv = LeviBlocks(tuple(levi))
        orbs = tuple(o if isinstance(o, Partition) else Partition.of(o) for o in orbits)
        return cls(lv, orbs, tuple(xi) if xi is not None else (ZERO,) * len(lv))

    @property
    def n(self) -> int:
        return self.levi.n

    def conjugacy_key(self) -> tuple:
        """G-conjugate data differ by a permutation of blocks."""
        return tuple(sorted((v.sort_key(), s, p.parts) for v, s, p in zip(self.xi, self.levi, self.orbits)))

    def is_minimal(self) -> bool:
        return all(p.is_zero_orbit() for p in self.orbits)


@dataclass(frozen=True)
class CoadjointDescriptor:
    """Distinct semisimple eigenvalues, each with the Jordan type of its nilpotent part."""

    parts: tuple[tuple[GaussianRational, Partition], ...]

    def __post_init__(self):
        parts = tuple(sorted(((gq(v), p) for v, p in self.parts), key=lambda vp: vp[0].sort_key()))
        values = [v for v, _ in parts]
        if len(set(values)) != len(values):
            raise ValueError("xi-values must be pairwise distinct")
        object.__setattr__(self, "parts", parts)

    @property
    def n(self) -> int:
        return sum(p.total for _, p in self.parts)

    def is_nilpotent(self) -> bool:
        return all(v == ZERO for v, _ in self.parts)

    def serialize(self) -> list[tuple[str, str, list[int]]]:
        return [(str(Fraction(v.re)), str(Fraction(v.im)), list(p.parts)) for v, p in self.parts]

    def __str__(self):
        return "{" + ", ".join(f"({v},{p})" for v, p in self.parts) + "}"


def nilpotent(p: Partition) -> CoadjointDescriptor:
    return CoadjointDescriptor(((ZERO, p),))


def bind(d: InductionDatum) -> CoadjointDescriptor:
    """Birational induction in GL(n): group blocks by xi-value, add partitions columnwise."""
    groups: dict[GaussianRational, list[Partition]] = {}
    for v, p in zip(d.xi, d.orbits):
        groups.setdefault(v, []).append(p)
    return CoadjointDescriptor(tuple((v, partition_colsum(ps)) for v, ps in groups.items()))


def bind_in_stages(d: InductionDatum, grouping: Sequence[Sequence[int]]) -> CoadjointDescriptor:
    """Induce L -> M -> G where M merges consecutive blocks of L as in ``grouping``.

    The middle orbit of M may carry several eigenvalues per block; the second
    step induces it with zero central shift, which in type A again adds the
    partitions of equal eigenvalue columnwise.
    """
    pos = 0
    pieces: dict[GaussianRational, list[Partition]] = {}
    for group in grouping:
        k = len(group)
        sizes = d.levi.sizes[pos:pos + k]
        if tuple(sizes) != tuple(group):
            raise BlockMismatch("grouping does not match the Levi blocks")
        inner = bind(InductionDatum(LeviBlocks(tuple(sizes)), d.orbits[pos:pos + k], d.xi[pos:pos + k]))
        for value, orbit in inner.parts:
            pieces.setdefault(value, []).append(orbit)
        pos += k
    if pos != len(d.levi):
        raise BlockMismatch("grouping does not cover the Levi blocks")
    return CoadjointDescriptor(tuple((v, partition_colsum(ps)) for v, ps in pieces.items()))


def all_nilpotent_data(n: int, proper_only: bool = False) -> Iterator[InductionDatum]:
    """Every datum with xi = 0 over every standard Levi (ordered block lists)."""
    from .partitions import compositions

    for sizes in compositions(n):
        if proper_only and len(sizes) == 1:
            continue
        for orbs in partition_tuples(sizes):
            yield InductionDatum(LeviBlocks(sizes), orbs, (ZERO,) * len(sizes))


def is_birationally_rigid(p: Partition, n: int | None = None) -> bool:
    """No proper Levi datum with xi = 0 induces to p (brute force)."""
    n = p.total if n is None else n
    if p.total != n:
        raise BlockMismatch(f"{p} is not a partition of {n}")
    target = nilpotent(p)
    return not any(bind(d) == target for d in all_nilpotent_data(n, proper_only=True))


def minimal_datum(desc: CoadjointDescriptor) -> InductionDatum:
    """The minimal datum binding to desc: per eigenvalue, blocks = transpose of its partition."""
    sizes, orbits, xi = [], [], []
    for v, p in desc.parts:
        for b in p.transpose().parts:
            sizes.append(b)
            orbits.append(zero_orbit(b))
            xi.append(v)
    return InductionDatum(LeviBlocks(tuple(sizes)), tuple(orbits), tuple(xi))


def minimal_data_binding_to(desc: CoadjointDescriptor) -> set[tuple]:
    """Conjugacy classes of minimal data that bind to desc, found by exhaustive search.

    Minimal means every block carries a birationally rigid orbit; the search
    decides rigidity by brute force rather than assuming it is the zero orbit.
    """
    n = desc.n
    values = [v for v, _ in desc.parts]
    rigid = {m: [p for p in partitions(m) if is_birationally_rigid(p)] for m in range(1, n + 1)}
    found = set()
    from .partitions import compositions

    for sizes in compositions(n):
        if list(sizes) != sorted(sizes, reverse=True):
            continue  # block order is a conjugacy choice
        for orbs in product(*(rigid[s] for s in sizes)):
            for xi in product(values, repeat=len(sizes)):
                d = InductionDatum(LeviBlocks(sizes), orbs, xi)
                if bind(d) == desc:
                    found.add(d.conjugacy_key())
    return found


@dataclass(frozen=True)
class RealCoadjointDescriptor:
    """iota-image of a complex descriptor: each eigenvalue becomes an imaginary functional
    on the corresponding scalar block, stored as (value on 1, value on i)."""

    parts: tuple[tuple[ImaginaryFunctional, Partition], ...]

    def is_nilpotent(self) -> bool:
        return all(not any(f.on_real) and not any(f.on_imag) for f, _ in self.parts)

    def serialize(self) -> list[tuple[str, str, list[int]]]:
        return [(str(f.on_real[0]), str(f.on_imag[0]), list(p.parts)) for f, p in self.parts]

    def __str__(self):
        items = [f"(i*[{f.on_real[0]}, {f.on_imag[0]}],{p})" for f, p in self.parts]
        return "iota{" + ", ".join(items) + "}"


def iota_descriptor(desc: CoadjointDescriptor) -> RealCoadjointDescriptor:
    return RealCoadjointDescriptor(tuple((iota(ComplexFunctional((v,))), p) for v, p in desc.parts))


def iota_inverse_descriptor(real: RealCoadjointDescriptor) -> CoadjointDescriptor:
    return CoadjointDescriptor(tuple((iota_inverse(f)[0], p) for f, p in real.parts))


def induction_in_stages_holds(d: InductionDatum) -> bool:
    """Compare one-step binding with every two-step route through a coarser Levi."""
    direct = bind(d)
    for grouping in coarsenings(d.levi.sizes):
        try:
            staged = bind_in_stages(d, grouping)
        except BlockMismatch:
            continue
        if staged != direct:
            return False
    return True
