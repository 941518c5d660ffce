"""Exact arithmetic in Z[zeta8, 1/sqrt2].

Every number used by the toolkit (i, e^{i pi/4}, 1/sqrt2 and their sums and
products) lives in this ring, so equality tests are structural and never
need a tolerance.

A value is stored as ``num / sqrt2**e`` where ``num`` is an element of
Z[zeta8] given by four integer coefficients of 1, zeta8, zeta8^2, zeta8^3
(the relation zeta8^4 = -1 keeps the representation unique).
"""

from __future__ import annotations

import cmath
import re
from typing import Iterable, Tuple, Union

Coeffs = Tuple[int, int, int, int]


def cint_mul(a: Coeffs, b: Coeffs) -> Coeffs:
    """Product in Z[zeta8] with zeta8^4 = -1."""
    a0, a1, a2, a3 = a
    b0, b1, b2, b3 = b
    return (
        a0 * b0 - a1 * b3 - a2 * b2 - a3 * b1,
        a0 * b1 + a1 * b0 - a2 * b3 - a3 * b2,
        a0 * b2 + a1 * b1 + a2 * b0 - a3 * b3,
        a0 * b3 + a1 * b2 + a2 * b1 + a3 * b0,
    )


def cint_conj(a: Coeffs) -> Coeffs:
    # zeta -> zeta^-1 = -zeta^3, zeta^2 -> -zeta^2, zeta^3 -> -zeta
    return (a[0], -a[3], -a[2], -a[1])


def cint_times_sqrt2(a: Coeffs) -> Coeffs:
    # sqrt2 = zeta - zeta^3
    c0, c1, c2, c3 = a
    return (c1 - c3, c0 + c2, c1 + c3, c2 - c0)


def cint_div_sqrt2(a: Coeffs) -> Coeffs | None:
    """Return a / sqrt2 if it lies in Z[zeta8], else None."""
    t = cint_times_sqrt2(a)
    if any(c & 1 for c in t):
        return None
    return (t[0] >> 1, t[1] >> 1, t[2] >> 1, t[3] >> 1)


def cint_zeta_power(a: Coeffs, m: int) -> Coeffs:
    """Multiply by zeta8**m."""
    c = list(a)
    for _ in range(m % 8):
        c = [-c[3], c[0], c[1], c[2]]
    return tuple(c)  # type: ignore[return-value]


_ZERO: Coeffs = (0, 0, 0, 0)


class CycScalar:
    """Canonical element ``num / sqrt2**e`` of Z[zeta8, 1/sqrt2].

    Canonical means: ``e == 0`` or ``num`` is not divisible by sqrt2 in
    Z[zeta8]; zero is always ``(0,0,0,0), e=0``.  Two equal values therefore
    have identical fields.
    """

    __slots__ = ("num", "e", "_hash")

    def __init__(self, num: Iterable[int] = _ZERO, e: int = 0) -> None:
        num = tuple(int(c) for c in num)
        if len(num) != 4:
            raise ValueError("expected four coefficients")
        if e < 0:
            # shift the denominator into the numerator: sqrt2**-e * num
            for _ in range(-e):
                num = cint_times_sqrt2(num)
            e = 0
        while e > 0:
            if num == _ZERO:
                e = 0
                break
            q = cint_div_sqrt2(num)
            if q is None:
                break
            num, e = q, e - 1
        self.num: Coeffs = num  # type: ignore[assignment]
        self.e: int = e
        self._hash = hash((self.num, self.e))

    # -- constructors -----------------------------------------------------

    @classmethod
    def from_int(cls, n: int) -> CycScalar:
        return cls((n, 0, 0, 0))

    @classmethod
    def zeta(cls, m: int = 1) -> CycScalar:
        """zeta8**m for any integer m."""
        return cls(cint_zeta_power((1, 0, 0, 0), m))

    @classmethod
    def coerce(cls, x: Union[int, CycScalar]) -> CycScalar:
        if isinstance(x, CycScalar):
            return x
        if isinstance(x, int):
            return cls.from_int(x)
        raise TypeError(f"cannot coerce {type(x).__name__} to CycScalar")

    # -- arithmetic -------------------------------------------------------

    def _lifted(self, e: int) -> Coeffs:
        num = self.num
        for _ in range(e - self.e):
            num = cint_times_sqrt2(num)
        return num

    def __add__(self, other: Union[int, CycScalar]) -> CycScalar:
        if not isinstance(other, (int, CycScalar)):
            return NotImplemented
        other = CycScalar.coerce(other)
        e = max(self.e, other.e)
        a, b = self._lifted(e), other._lifted(e)
        return CycScalar(tuple(x + y for x, y in zip(a, b)), e)

    __radd__ = __add__

    def __neg__(self) -> CycScalar:
        return CycScalar(tuple(-c for c in self.num), self.e)

    def __sub__(self, other: Union[int, CycScalar]) -> CycScalar:
        if not isinstance(other, (int, CycScalar)):
            return NotImplemented
        return self + (-CycScalar.coerce(other))

    def __rsub__(self, other: Union[int, CycScalar]) -> CycScalar:
        return CycScalar.coerce(other) - self

    def __mul__(self, other: Union[int, CycScalar]) -> CycScalar:
        if not isinstance(other, (int, CycScalar)):
            return NotImplemented
        other = CycScalar.coerce(other)
        return CycScalar(cint_mul(self.num, other.num), self.e + other.e)

    __rmul__ = __mul__

    def __pow__(self, m: int) -> CycScalar:
        if m < 0:
            raise ValueError("negative powers are not supported")
        out, base = ONE, self
        while m:
            if m & 1:
                out = out * base
            base = base * base
            m >>= 1
        return out

    def conj(self) -> CycScalar:
        return CycScalar(cint_conj(self.num), self.e)

    def abs2(self) -> CycScalar:
        return self * self.conj()

    def is_zero(self) -> bool:
        return self.num == _ZERO

    def is_unit_modulus(self) -> bool:
        return self.abs2() == ONE

    def zeta_exponent(self) -> int | None:
        """Return m with self == zeta8**m, or None."""
        if self.e:
            return None
        for m in range(8):
            if cint_zeta_power((1, 0, 0, 0), m) == self.num:
                return m
        return None

    # -- comparison / hashing ---------------------------------------------

    def __eq__(self, other: object) -> bool:
        if isinstance(other, int):
            other = CycScalar.from_int(other)
        if not isinstance(other, CycScalar):
            return NotImplemented
        return self.num == other.num and self.e == other.e

    def __hash__(self) -> int:
        return self._hash

    # -- display ----------------------------------------------------------

    def __complex__(self) -> complex:
        z = cmath.exp(1j * cmath.pi / 4)
        v = sum(c * z**j for j, c in enumerate(self.num))
        return complex(v / (2 ** (self.e / 2)))

    def __repr__(self) -> str:
        return f"CycScalar({self.num}, e={self.e})"

    def __str__(self) -> str:
        terms = []
        for j, c in enumerate(self.num):
            if c == 0:
                continue
            unit = ("", "ζ8", "ζ8^2", "ζ8^3")[j]
            if not unit:
                body = str(abs(c))
            elif abs(c) == 1:
                body = unit
            else:
                body = f"{abs(c)}·{unit}"
            sign = "-" if c < 0 else "+"
            terms.append((sign, body))
        if not terms:
            return "0"
        text = ("-" if terms[0][0] == "-" else "") + terms[0][1]
        for sign, body in terms[1:]:
            text += f" {sign} {body}"
        if self.e:
            if len(terms) > 1:
                text = f"({text})"
            text += f" / sqrt2^{self.e}"
        return text

    @classmethod
    def parse(cls, text: str) -> CycScalar:
        """Inverse of ``str``."""
        text = text.strip()
        e = 0
        m = re.fullmatch(r"(.*?)\s*/\s*sqrt2\^(\d+)", text)
        if m:
            text, e = m.group(1).strip(), int(m.group(2))
        if text.startswith("(") and text.endswith(")"):
            text = text[1:-1]
        num = [0, 0, 0, 0]
        for sign, coef, unit in re.findall(
            r"([+-]?)\s*(\d*)(?:·?(ζ8(?:\^[23])?))?", text.replace(" ", "")
        ):
            if not coef and not unit:
                continue
            j = {"": 0, "ζ8": 1, "ζ8^2": 2, "ζ8^3": 3}[unit]
            num[j] += (-1 if sign == "-" else 1) * (int(coef) if coef else 1)
        return cls(num, e)


ZERO = CycScalar()
ONE = CycScalar.from_int(1)
ZETA = CycScalar.zeta(1)
I = CycScalar.zeta(2)
SQRT2 = CycScalar((0, 1, 0, -1))
INV_SQRT2 = CycScalar((1, 0, 0, 0), 1)


def add(a: CycScalar, b: CycScalar) -> CycScalar:
    return a + b


def mul(a: CycScalar, b: CycScalar) -> CycScalar:
    return a * b


def conj(a: CycScalar) -> CycScalar:
    return a.conj()


def is_unit_modulus(a: CycScalar) -> bool:
    return a.is_unit_modulus()
