"""Dense square matrices over Z[zeta8, 1/sqrt2].

A matrix is stored as ``N / sqrt2**e`` with ``N`` an integer array of shape
``(dim, dim, 4)`` (coefficients of 1, zeta8, zeta8^2, zeta8^3 per entry) and a
single shared exponent ``e``.  The form is canonical: ``e`` is reduced while
every entry of ``N`` is divisible by sqrt2, so equal matrices have equal
arrays and hash alike.

Basis index ``b`` of a ``2**k`` matrix is the bit string ``b_1 ... b_k`` with
qubit 1 as the most significant bit (the leftmost tensor factor).
"""

from __future__ import annotations

from functools import cached_property
from typing import Iterable, Optional, Sequence

import numpy as np

from .cyclotomic import CycScalar, cint_zeta_power

# Ring product table: FOLD[p, q, m] is the coefficient of zeta^m in zeta^p * zeta^q.
FOLD = np.zeros((4, 4, 4), dtype=np.int64)
for _p in range(4):
    for _q in range(4):
        _s = _p + _q
        FOLD[_p, _q, _s % 4] = 1 if _s < 4 else -1

_LIMIT = 1 << 62


class ExactOverflowError(OverflowError):
    """An integer coefficient left the checked 64-bit range."""


def _check_product_bound(a: np.ndarray, b: np.ndarray, terms: int) -> None:
    ma = int(np.abs(a).max(initial=0))
    mb = int(np.abs(b).max(initial=0))
    if ma * mb * terms >= _LIMIT:
        raise ExactOverflowError("coefficient growth exceeds 64-bit range")


def _times_sqrt2(n: np.ndarray) -> np.ndarray:
    c0, c1, c2, c3 = n[..., 0], n[..., 1], n[..., 2], n[..., 3]
    if int(np.abs(n).max(initial=0)) >= _LIMIT // 2:
        raise ExactOverflowError("coefficient growth exceeds 64-bit range")
    return np.stack([c1 - c3, c0 + c2, c1 + c3, c2 - c0], axis=-1)


def _canonical(num: np.ndarray, e: int) -> tuple[np.ndarray, int]:
    if e < 0:
        for _ in range(-e):
            num = _times_sqrt2(num)
        e = 0
    if not num.any():
        return num, 0
    while e > 0:
        t = _times_sqrt2(num)
        if (t & 1).any():
            break
        num, e = t >> 1, e - 1
    return num, e


class ExactMatrix:
    """Immutable exact ``dim x dim`` matrix."""

    __slots__ = ("dim", "num", "e", "_key", "__dict__")

    def __init__(self, num: np.ndarray, e: int = 0) -> None:
        num = np.asarray(num, dtype=np.int64)
        if num.ndim != 3 or num.shape[0] != num.shape[1] or num.shape[2] != 4:
            raise ValueError(f"expected shape (dim, dim, 4), got {num.shape}")
        num, e = _canonical(num, e)
        num = np.ascontiguousarray(num)
        num.flags.writeable = False
        self.dim: int = num.shape[0]
        self.num = num
        self.e: int = e
        self._key = (self.dim, self.e, num.tobytes())

    # -- constructors -----------------------------------------------------

    @classmethod
    def from_entries(cls, rows: Sequence[Sequence[CycScalar | int]]) -> ExactMatrix:
        rows = [[CycScalar.coerce(x) for x in row] for row in rows]
        dim = len(rows)
        if any(len(r) != dim for r in rows):
            raise ValueError("matrix must be square")
        e = max((x.e for r in rows for x in r), default=0)
        num = np.zeros((dim, dim, 4), dtype=np.int64)
        for i, row in enumerate(rows):
            for j, x in enumerate(row):
                num[i, j] = x._lifted(e)
        return cls(num, e)

    @classmethod
    def identity(cls, dim: int) -> ExactMatrix:
        num = np.zeros((dim, dim, 4), dtype=np.int64)
        num[np.arange(dim), np.arange(dim), 0] = 1
        return cls(num)

    @classmethod
    def zeros(cls, dim: int) -> ExactMatrix:
        return cls(np.zeros((dim, dim, 4), dtype=np.int64))

    @classmethod
    def diagonal(cls, values: Sequence[CycScalar | int]) -> ExactMatrix:
        n = len(values)
        return cls.from_entries(
            [[values[i] if i == j else 0 for j in range(n)] for i in range(n)]
        )

    # -- entry access -----------------------------------------------------

    def __getitem__(self, ij: tuple[int, int]) -> CycScalar:
        i, j = ij
        return CycScalar(self.num[i, j].tolist(), self.e)

    def entries(self) -> list[list[CycScalar]]:
        return [[self[i, j] for j in range(self.dim)] for i in range(self.dim)]

    # -- arithmetic -------------------------------------------------------

    def __matmul__(self, other: ExactMatrix) -> ExactMatrix:
        return matmul(self, other)

    def __mul__(self, c: CycScalar | int) -> ExactMatrix:
        c = CycScalar.coerce(c)
        cn = np.array(c.num, dtype=np.int64)
        _check_product_bound(self.num, cn, 4)
        num = np.einsum("ijp,q,pqm->ijm", self.num, cn, FOLD)
        return ExactMatrix(num, self.e + c.e)

    __rmul__ = __mul__

    def __add__(self, other: ExactMatrix) -> ExactMatrix:
        _same_dim(self, other)
        e = max(self.e, other.e)
        a, b = self._lifted(e), other._lifted(e)
        if max(int(np.abs(a).max(initial=0)), int(np.abs(b).max(initial=0))) >= _LIMIT // 2:
            raise ExactOverflowError("coefficient growth exceeds 64-bit range")
        return ExactMatrix(a + b, e)

    def __neg__(self) -> ExactMatrix:
        return ExactMatrix(-self.num, self.e)

    def __sub__(self, other: ExactMatrix) -> ExactMatrix:
        return self + (-other)

    def _lifted(self, e: int) -> np.ndarray:
        num = self.num
        for _ in range(e - self.e):
            num = _times_sqrt2(num)
        return num

    # -- structure --------------------------------------------------------

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, ExactMatrix):
            return NotImplemented
        return self._key == other._key

    def __hash__(self) -> int:
        return hash(self._key)

    @property
    def key(self) -> tuple:
        return self._key

    @cached_property
    def is_identity(self) -> bool:
        return self == ExactMatrix.identity(self.dim)

    def __repr__(self) -> str:
        return f"ExactMatrix(dim={self.dim}, e={self.e})"

    def __str__(self) -> str:
        cells = [[str(x) for x in row] for row in self.entries()]
        width = max(len(c) for row in cells for c in row)
        return "\n".join("[" + "  ".join(c.rjust(width) for c in row) + "]" for row in cells)

    def to_json(self) -> list[list[str]]:
        return [[str(x) for x in row] for row in self.entries()]

    @classmethod
    def from_json(cls, rows: Sequence[Sequence[str]]) -> ExactMatrix:
        return cls.from_entries([[CycScalar.parse(s) for s in row] for row in rows])

    def to_complex(self) -> np.ndarray:
        """Floating-point view, for display only."""
        z = np.exp(1j * np.pi / 4) ** np.arange(4)
        return (self.num @ z) / 2 ** (self.e / 2)

    def apply(self, vec: Sequence[CycScalar]) -> list[CycScalar]:
        """Matrix-vector product."""
        if len(vec) != self.dim:
            raise ValueError(f"vector length {len(vec)} != dim {self.dim}")
        out = []
        for i in range(self.dim):
            acc = CycScalar()
            for j, v in enumerate(vec):
                if not v.is_zero():
                    acc = acc + self[i, j] * v
            out.append(acc)
        return out


def _same_dim(a: ExactMatrix, b: ExactMatrix) -> None:
    if a.dim != b.dim:
        raise ValueError(f"dimension mismatch: {a.dim} vs {b.dim}")


def matmul(a: ExactMatrix, b: ExactMatrix) -> ExactMatrix:
    _same_dim(a, b)
    _check_product_bound(a.num, b.num, 4 * a.dim)
    t = np.einsum("ikp,kjq->ijpq", a.num, b.num)
    num = np.einsum("ijpq,pqm->ijm", t, FOLD)
    return ExactMatrix(num, a.e + b.e)


def tensor(a: ExactMatrix, b: ExactMatrix) -> ExactMatrix:
    """Kronecker product; ``a`` is the more significant (left) factor."""
    _check_product_bound(a.num, b.num, 4)
    t = np.einsum("ijp,klq,pqm->ikjlm", a.num, b.num, FOLD)
    d = a.dim * b.dim
    return ExactMatrix(t.reshape(d, d, 4), a.e + b.e)


def tensor_all(factors: Iterable[ExactMatrix]) -> ExactMatrix:
    out: Optional[ExactMatrix] = None
    for f in factors:
        out = f if out is None else tensor(out, f)
    if out is None:
        return ExactMatrix.identity(1)
    return out


def dagger(a: ExactMatrix) -> ExactMatrix:
    n = a.num
    conj = np.stack([n[..., 0], -n[..., 3], -n[..., 2], -n[..., 1]], axis=-1)
    return ExactMatrix(conj.transpose(1, 0, 2), a.e)


def trace(a: ExactMatrix) -> CycScalar:
    diag = a.num[np.arange(a.dim), np.arange(a.dim)].sum(axis=0)
    return CycScalar(diag.tolist(), a.e)


def equal_up_to_phase(a: ExactMatrix, b: ExactMatrix) -> Optional[CycScalar]:
    """Return the unit-modulus ``c`` with ``a == c * b``, or None.

    The unit-modulus elements of Z[zeta8, 1/sqrt2] are exactly the eight
    powers of zeta8, so the candidate is found by matching the first nonzero
    entry of ``b`` against ``zeta8**m * b[idx]``.
    """
    _same_dim(a, b)
    nz = np.argwhere(b.num.any(axis=-1))
    if len(nz) == 0:
        return None
    i, j = nz[0]
    if a.e != b.e:
        return None
    target = tuple(a.num[i, j].tolist())
    ref = tuple(b.num[i, j].tolist())
    for m in range(8):
        if cint_zeta_power(ref, m) == target:
            c = CycScalar.zeta(m)
            return c if c * b == a else None
    return None


def is_unitary(a: ExactMatrix) -> bool:
    return matmul(a, dagger(a)).is_identity
