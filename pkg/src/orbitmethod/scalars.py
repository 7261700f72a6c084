"""Exact scalars: Gaussian rationals and monomials ``coef * exp(2*pi*i*exponent)``.

Every matrix entry handled by the library is a single monomial of this form,
so equality stays decidable without any floating point.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Union

Number = Union[int, Fraction, "GaussianRational"]

QUARTER = Fraction(1, 4)


def _frac(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, str):
        return Fraction(x)
    raise TypeError(f"cannot convert {x!r} to a rational")


@dataclass(frozen=True, order=True)
class GaussianRational:
    """A number ``re + im*i`` with rational parts."""

    re: Fraction = Fraction(0)
    im: Fraction = Fraction(0)

    def __post_init__(self):
        object.__setattr__(self, "re", _frac(self.re))
        object.__setattr__(self, "im", _frac(self.im))

    @classmethod
    def of(cls, x) -> GaussianRational:
        if isinstance(x, GaussianRational):
            return x
        if isinstance(x, str):
            return parse_gaussian(x)
        return cls(_frac(x), Fraction(0))

    # arithmetic -----------------------------------------------------------
    def __add__(self, other):
        o = _coerce(other)
        if o is None:
            return NotImplemented
        return GaussianRational(self.re + o.re, self.im + o.im)

    __radd__ = __add__

    def __neg__(self):
        return GaussianRational(-self.re, -self.im)

    def __sub__(self, other):
        o = _coerce(other)
        if o is None:
            return NotImplemented
        return GaussianRational(self.re - o.re, self.im - o.im)

    def __rsub__(self, other):
        o = _coerce(other)
        if o is None:
            return NotImplemented
        return o - self

    def __mul__(self, other):
        o = _coerce(other)
        if o is None:
            return NotImplemented
        return GaussianRational(
            self.re * o.re - self.im * o.im, self.re * o.im + self.im * o.re
        )

    __rmul__ = __mul__

    def conjugate(self) -> GaussianRational:
        return GaussianRational(self.re, -self.im)

    def norm(self) -> Fraction:
        return self.re * self.re + self.im * self.im

    def inverse(self) -> GaussianRational:
        n = self.norm()
        if n == 0:
            raise ZeroDivisionError("division by zero Gaussian rational")
        return GaussianRational(self.re / n, -self.im / n)

    def __truediv__(self, other):
        o = _coerce(other)
        if o is None:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other):
        o = _coerce(other)
        if o is None:
            return NotImplemented
        return o * self.inverse()

    def __pow__(self, k: int):
        if not isinstance(k, int):
            return NotImplemented
        if k < 0:
            return self.inverse() ** (-k)
        out = ONE
        for _ in range(k):
            out = out * self
        return out

    def __eq__(self, other):
        o = _coerce(other)
        if o is None:
            return NotImplemented
        return self.re == o.re and self.im == o.im

    def __hash__(self):
        return hash((self.re, self.im))

    def __bool__(self):
        return bool(self.re) or bool(self.im)

    # predicates -----------------------------------------------------------
    def is_real(self) -> bool:
        return self.im == 0

    def is_integer(self) -> bool:
        return self.im == 0 and self.re.denominator == 1

    def is_half_odd_integer(self) -> bool:
        """True for ..., -1/2, 1/2, 3/2, ..."""
        return self.im == 0 and (2 * self.re).denominator == 1 and self.re.denominator == 2

    def sort_key(self):
        return (self.re, self.im)

    def __str__(self):
        return format_gaussian(self)

    def __repr__(self):
        return f"GaussianRational({format_gaussian(self)!r})"


ZERO = GaussianRational(0, 0)
ONE = GaussianRational(1, 0)
I = GaussianRational(0, 1)


def _coerce(x):
    if isinstance(x, GaussianRational):
        return x
    if isinstance(x, (int, Fraction)):
        return GaussianRational(Fraction(x), Fraction(0))
    return None


def gq(x) -> GaussianRational:
    """Shorthand constructor: ``gq(1)``, ``gq("1/2+i")``, ``gq(Fraction(2, 3))``."""
    return GaussianRational.of(x)


# text round trip --------------------------------------------------------------

_NUM = r"\d+(?:/\d+)?"
_GAUSS_RE = re.compile(
    rf"^(?P<re>[+-]?{_NUM})?(?:(?P<isign>[+-])?(?P<im>{_NUM})?i)?$"
)


def _fmt_frac(x: Fraction) -> str:
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def format_gaussian(z: GaussianRational) -> str:
    """Render as ``p/q`` with an ``i`` suffix on the imaginary part, e.g. ``1/2+3/4i``."""
    if z.im == 0:
        return _fmt_frac(z.re)
    mag = abs(z.im)
    im_txt = "" if mag == 1 else _fmt_frac(mag)
    sign = "-" if z.im < 0 else "+"
    if z.re == 0:
        return f"{'-' if z.im < 0 else ''}{im_txt}i"
    return f"{_fmt_frac(z.re)}{sign}{im_txt}i"


def parse_gaussian(text: str) -> GaussianRational:
    s = text.strip().replace(" ", "")
    if not s:
        raise ValueError("empty Gaussian rational")
    m = _GAUSS_RE.match(s)
    if m is None or (m.group("re") is None and "i" not in s):
        raise ValueError(f"cannot parse Gaussian rational {text!r}")
    re_part = Fraction(m.group("re")) if m.group("re") else Fraction(0)
    im_part = Fraction(0)
    if s.endswith("i"):
        im_part = Fraction(m.group("im")) if m.group("im") else Fraction(1)
        if m.group("isign") == "-":
            im_part = -im_part
        elif m.group("isign") is None and m.group("re") is not None:
            # "3i" parsed as re="3"; reinterpret
            im_part = re_part
            re_part = Fraction(0)
    return GaussianRational(re_part, im_part)


# exponential monomials ---------------------------------------------------------

_I_POWERS = (ONE, I, -ONE, -I)


@dataclass(frozen=True)
class ExpScalar:
    """``coef * exp(2*pi*i*exponent)`` in normal form.

    Normal form: the real part of ``exponent`` lies in ``[0, 1/4)``; whole
    quarter turns are folded into ``coef`` as powers of ``i``.  Zero is stored
    as ``coef = 0, exponent = 0``.
    """

    coef: GaussianRational
    exponent: GaussianRational

    def __post_init__(self):
        coef = gq(self.coef)
        exp_ = gq(self.exponent)
        if not coef:
            exp_ = ZERO
        else:
            quarters = (exp_.re / QUARTER).__floor__()
            exp_ = GaussianRational(exp_.re - quarters * QUARTER, exp_.im)
            coef = coef * _I_POWERS[quarters % 4]
        object.__setattr__(self, "coef", coef)
        object.__setattr__(self, "exponent", exp_)

    @classmethod
    def e(cls, exponent) -> ExpScalar:
        """``exp(2*pi*i*exponent)``."""
        return cls(ONE, gq(exponent))

    @classmethod
    def const(cls, c) -> ExpScalar:
        return cls(gq(c), ZERO)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction, GaussianRational)):
            other = ExpScalar.const(other)
        if not isinstance(other, ExpScalar):
            return NotImplemented
        return ExpScalar(self.coef * other.coef, self.exponent + other.exponent)

    __rmul__ = __mul__

    def __neg__(self):
        return ExpScalar(-self.coef, self.exponent)

    def inverse(self) -> ExpScalar:
        return ExpScalar(self.coef.inverse(), -self.exponent)

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction, GaussianRational)):
            other = ExpScalar.const(other)
        return self * other.inverse()

    def __pow__(self, k: int):
        if k < 0:
            return self.inverse() ** (-k)
        return ExpScalar(self.coef**k, self.exponent * k)

    def is_zero(self) -> bool:
        return not self.coef

    def is_one(self) -> bool:
        return self.coef == ONE and self.exponent == ZERO

    def is_constant(self) -> bool:
        return self.exponent == ZERO

    def __str__(self):
        if self.exponent == ZERO:
            return format_gaussian(self.coef)
        if self.coef == ONE:
            prefix = ""
        elif self.coef == -ONE:
            prefix = "-"
        else:
            prefix = f"({format_gaussian(self.coef)})*"
        return f"{prefix}exp(2pi i*({format_gaussian(self.exponent)}))"
