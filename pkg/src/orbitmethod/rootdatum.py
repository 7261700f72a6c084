"""Based root data for the small groups the library supports, and Cartan vectors."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

from .errors import DimensionMismatch
from .scalars import ZERO, GaussianRational, gq

IntVec = tuple[int, ...]


@dataclass(frozen=True)
class CartanVector:
    """A vector of Gaussian rationals in a fixed Cartan basis."""

    coords: tuple[GaussianRational, ...]

    def __post_init__(self):
        object.__setattr__(self, "coords", tuple(gq(c) for c in self.coords))

    @classmethod
    def of(cls, *values) -> CartanVector:
        if len(values) == 1 and isinstance(values[0], (list, tuple)):
            values = tuple(values[0])
        return cls(tuple(gq(v) for v in values))

    @classmethod
    def zero(cls, dim: int) -> CartanVector:
        return cls((ZERO,) * dim)

    def __len__(self):
        return len(self.coords)

    def __iter__(self):
        return iter(self.coords)

    def __getitem__(self, k):
        return self.coords[k]

    def _check(self, other: CartanVector):
        if len(other) != len(self):
            raise DimensionMismatch(f"{len(self)} != {len(other)}")

    def __add__(self, other: CartanVector) -> CartanVector:
        self._check(other)
        return CartanVector(tuple(a + b for a, b in zip(self, other)))

    def __sub__(self, other: CartanVector) -> CartanVector:
        self._check(other)
        return CartanVector(tuple(a - b for a, b in zip(self, other)))

    def __neg__(self) -> CartanVector:
        return CartanVector(tuple(-a for a in self))

    def scale(self, c) -> CartanVector:
        c = gq(c)
        return CartanVector(tuple(c * a for a in self))

    def permute(self, perm: Sequence[int]) -> CartanVector:
        """Apply the coordinate permutation ``k -> perm[k]``: result[perm[k]] = self[k]."""
        out = [ZERO] * len(self)
        for k, pk in enumerate(perm):
            out[pk] = self.coords[k]
        return CartanVector(tuple(out))

    def is_zero(self) -> bool:
        return all(not c for c in self.coords)

    def __str__(self):
        return "(" + ", ".join(str(c) for c in self.coords) + ")"


def pairing(weight: Sequence, coweight: CartanVector | Sequence) -> GaussianRational:
    """Evaluate the natural pairing of a weight with a coweight (exact)."""
    cw = coweight.coords if isinstance(coweight, CartanVector) else tuple(gq(c) for c in coweight)
    if len(weight) != len(cw):
        raise DimensionMismatch(f"weight has {len(weight)} coordinates, coweight {len(cw)}")
    total = ZERO
    for a, b in zip(weight, cw):
        total = total + gq(a) * b
    return total


def _dot(u: Sequence[int], v: Sequence[int]) -> int:
    return sum(a * b for a, b in zip(u, v))


@dataclass(frozen=True)
class BasedRootDatum:
    """Simple roots in X^*, simple coroots in X_*, both in fixed lattice bases."""

    lattice_rank: int
    simple_roots: tuple[IntVec, ...]
    simple_coroots: tuple[IntVec, ...]
    name: str = field(default="", compare=False)

    def __post_init__(self):
        if len(self.simple_roots) != len(self.simple_coroots):
            raise ValueError("need one coroot per simple root")
        for v in self.simple_roots + self.simple_coroots:
            if len(v) != self.lattice_rank:
                raise DimensionMismatch("root vector of wrong length")
        cm = self.cartan_matrix()
        for i, row in enumerate(cm):
            if row[i] != 2:
                raise ValueError("diagonal Cartan entries must be 2")
            for j, a in enumerate(row):
                if i != j and (a > 0 or (a == 0) != (cm[j][i] == 0)):
                    raise ValueError("not a Cartan matrix")

    @property
    def rank(self) -> int:
        """Semisimple rank."""
        return len(self.simple_roots)

    def cartan_matrix(self) -> tuple[tuple[int, ...], ...]:
        """Entry (i, j) is <alpha_i, alpha_j^vee>."""
        return tuple(
            tuple(_dot(a, c) for c in self.simple_coroots) for a in self.simple_roots
        )

    def root_pairs(self) -> list[tuple[IntVec, IntVec]]:
        """All (root, coroot) pairs, generated by closing the simple ones under reflections."""
        seen: dict[IntVec, IntVec] = {}
        frontier = list(zip(self.simple_roots, self.simple_coroots))
        frontier += [(tuple(-x for x in a), tuple(-x for x in c)) for a, c in frontier]
        while frontier:
            a, c = frontier.pop()
            if a in seen:
                continue
            seen[a] = c
            for ai, ci in zip(self.simple_roots, self.simple_coroots):
                k = _dot(a, ci)
                m = _dot(ai, c)
                ra = tuple(x - k * y for x, y in zip(a, ai))
                rc = tuple(x - m * y for x, y in zip(c, ci))
                if ra not in seen:
                    frontier.append((ra, rc))
        return sorted(seen.items())

    def roots(self) -> list[IntVec]:
        return [a for a, _ in self.root_pairs()]


def dual_datum(d: BasedRootDatum) -> BasedRootDatum:
    """Swap roots with coroots (and so characters with cocharacters)."""
    names = {"PGL(2)": "SL(2)", "SL(2)": "PGL(2)"}
    name = names.get(d.name, d.name if d.name.startswith("GL") else f"dual {d.name}")
    return BasedRootDatum(d.lattice_rank, d.simple_coroots, d.simple_roots, name)


# named data ---------------------------------------------------------------------


def _unit(n: int, i: int) -> list[int]:
    v = [0] * n
    v[i] = 1
    return v


def gl(n: int) -> BasedRootDatum:
    roots = []
    for i in range(n - 1):
        v = _unit(n, i)
        v[i + 1] = -1
        roots.append(tuple(v))
    return BasedRootDatum(n, tuple(roots), tuple(roots), f"GL({n})")


def sl(n: int) -> BasedRootDatum:
    """SL(n) in the basis of fundamental weights of X^* and simple coroots of X_*."""
    cartan = [[2 if i == j else (-1 if abs(i - j) == 1 else 0) for j in range(n - 1)] for i in range(n - 1)]
    roots = tuple(tuple(row) for row in cartan)
    coroots = tuple(tuple(_unit(n - 1, i)) for i in range(n - 1))
    return BasedRootDatum(n - 1, roots, coroots, f"SL({n})")


def pgl(n: int) -> BasedRootDatum:
    d = dual_datum(sl(n))
    return BasedRootDatum(d.lattice_rank, d.simple_roots, d.simple_coroots, f"PGL({n})")


def torus(dim: int) -> BasedRootDatum:
    return BasedRootDatum(dim, (), (), f"T{dim}")


def a1xa1() -> BasedRootDatum:
    return BasedRootDatum(2, ((2, 0), (0, 2)), ((1, 0), (0, 1)), "SL(2)xSL(2)")


def type_a_roots(n: int) -> list[tuple[int, int]]:
    """Roots e_i - e_j of gl(n), i != j, as index pairs."""
    return [(i, j) for i in range(n) for j in range(n) if i != j]


def weight_of(root: tuple[int, int], n: int) -> IntVec:
    i, j = root
    v = [0] * n
    v[i] += 1
    v[j] -= 1
    return tuple(v)


def half(x) -> Fraction:
    return Fraction(x) / 2
