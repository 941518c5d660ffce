"""Phase-tracked Pauli strings and the concrete representations built from them.

A :class:`PauliString` on ``k`` qubits denotes

    zeta8**p * (X^{x_1} Z^{z_1}) (x) ... (x) (X^{x_k} Z^{z_k})

with X applied before Z inside each factor's matrix product (X^x Z^z).
Qubit ``j`` (1-based) is bit ``k - j`` of the masks, so the masks act on
basis indices directly: ``X^x |b> = |b ^ x>`` and ``Z^z |b> = (-1)^{|b & z|} |b>``.

Y is the real matrix ZX = [[0, 1], [-1, 0]] = -XZ, i.e. ``p=4, x=z=1``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .exact_matrix import ExactMatrix


@dataclass(frozen=True)
class PauliString:
    k: int
    p: int
    x: int
    z: int

    def __post_init__(self) -> None:
        object.__setattr__(self, "p", self.p % 8)
        full = (1 << self.k) - 1
        if self.x & ~full or self.z & ~full:
            raise ValueError(f"mask out of range for k={self.k}")

    # -- constructors -----------------------------------------------------

    @classmethod
    def identity(cls, k: int) -> PauliString:
        return cls(k, 0, 0, 0)

    @classmethod
    def phase(cls, k: int, p: int) -> PauliString:
        return cls(k, p, 0, 0)

    @classmethod
    def single(cls, k: int, qubit: int, op: str) -> PauliString:
        """X, Y or Z acting on ``qubit`` (1-based)."""
        if not 1 <= qubit <= k:
            raise ValueError(f"qubit {qubit} out of range 1..{k}")
        bit = 1 << (k - qubit)
        if op == "X":
            return cls(k, 0, bit, 0)
        if op == "Z":
            return cls(k, 0, 0, bit)
        if op == "Y":
            return cls(k, 4, bit, bit)
        raise ValueError(f"unknown Pauli {op!r}")

    # -- algebra ----------------------------------------------------------

    def __mul__(self, other: PauliString) -> PauliString:
        return ps_mul(self, other)

    def times_phase(self, p: int) -> PauliString:
        return PauliString(self.k, self.p + p, self.x, self.z)

    def __neg__(self) -> PauliString:
        return self.times_phase(4)

    @property
    def is_identity(self) -> bool:
        return self.p == 0 and self.x == 0 and self.z == 0

    @property
    def is_scalar(self) -> bool:
        return self.x == 0 and self.z == 0

    def to_matrix(self) -> ExactMatrix:
        return to_matrix(self)

    # -- display ----------------------------------------------------------

    def __str__(self) -> str:
        phase = ("", "ζ8", "i", "ζ8^3", "-", "-ζ8", "-i", "-ζ8^3")[self.p]
        ops = []
        for j in range(1, self.k + 1):
            bit = 1 << (self.k - j)
            if self.x & bit:
                ops.append(f"X{j}")
            if self.z & bit:
                ops.append(f"Z{j}")
        body = " ".join(ops) or "I"
        if phase in ("", "-"):
            return phase + body
        return f"{phase} · {body}"

    def to_json(self) -> dict:
        return {"p": self.p, "x": self.x, "z": self.z, "k": self.k}

    @classmethod
    def from_json(cls, d: dict) -> PauliString:
        return cls(d["k"], d["p"], d["x"], d["z"])


def _check_width(g: PauliString, h: PauliString) -> None:
    if g.k != h.k:
        raise ValueError(f"qubit count mismatch: {g.k} vs {h.k}")


def ps_mul(g: PauliString, h: PauliString) -> PauliString:
    _check_width(g, h)
    # h's X factors move left past g's Z factors
    sign = (g.z & h.x).bit_count() & 1
    return PauliString(g.k, g.p + h.p + 4 * sign, g.x ^ h.x, g.z ^ h.z)


def ps_order(g: PauliString) -> int:
    acc, m = g, 1
    while not acc.is_identity:
        acc = ps_mul(acc, g)
        m += 1
    return m


def ps_commutator_sign(g: PauliString, h: PauliString) -> int:
    _check_width(g, h)
    odd = ((g.x & h.z).bit_count() + (g.z & h.x).bit_count()) & 1
    return -1 if odd else 1


def ps_inverse(g: PauliString) -> PauliString:
    sq = ps_mul(g, g)  # a pure phase
    return g.times_phase(-sq.p)


def to_matrix(g: PauliString) -> ExactMatrix:
    dim = 1 << g.k
    num = np.zeros((dim, dim, 4), dtype=np.int64)
    # zeta^p as +-zeta^(p mod 4)
    sign0 = -1 if g.p >= 4 else 1
    slot = g.p % 4
    for col in range(dim):
        s = sign0 * (-1 if (col & g.z).bit_count() & 1 else 1)
        num[col ^ g.x, col, slot] = s
    return ExactMatrix(num)


# -- representations --------------------------------------------------------


def _z(k: int, *qubits: int) -> PauliString:
    z = 0
    for q in qubits:
        z |= 1 << (k - q)
    return PauliString(k, 0, 0, z)


def generators_rho(k: int) -> list[PauliString]:
    """Images T_1..T_2k of e_1..e_2k under the degree-2^k representation of E^{-1}_{2k}.

    T_1 = iZ_1, T_{2i-1} = iZ_{i-1}Z_i for i >= 2, T_{2i} = Y_i.
    """
    if k < 1:
        raise ValueError("k must be >= 1")
    gens = []
    for i in range(1, k + 1):
        odd = _z(k, i) if i == 1 else _z(k, i - 1, i)
        gens.append(odd.times_phase(2))
        gens.append(PauliString.single(k, i, "Y"))
    return gens


def generators_lambda(k: int, branch: int) -> list[PauliString]:
    """The two degree-2^k representations of E^{-1}_{2k+1}: rho plus +-iZ_k."""
    if branch not in (1, 2):
        raise ValueError("branch must be 1 or 2")
    last = _z(k, k).times_phase(2 if branch == 1 else 6)
    return generators_rho(k) + [last]


def generators_pauli(k: int, complex: bool = False) -> list[PauliString]:
    """X_1..X_k, Z_1..Z_k, and the central i when ``complex``."""
    if k < 1:
        raise ValueError("k must be >= 1")
    gens = [PauliString.single(k, j, "X") for j in range(1, k + 1)]
    gens += [PauliString.single(k, j, "Z") for j in range(1, k + 1)]
    if complex:
        gens.append(PauliString.phase(k, 2))
    return gens


def rescale_by_i(gens: Sequence[PauliString]) -> list[PauliString]:
    return [g.times_phase(2) for g in gens]


def pauli_error_basis(k: int) -> list[PauliString]:
    """All 4^k phase-free strings X^x Z^z, ordered by (x, z)."""
    return [PauliString(k, 0, x, z) for x in range(1 << k) for z in range(1 << k)]


def pauli_from_e(k: int) -> dict[str, bool]:
    """Check that Y_i, Z_i, X_i are recovered from the rho images.

    Y_i = rho(e_2i), Z_i = (-i)^i rho(e_1) rho(e_3) ... rho(e_{2i-1}),
    X_i = Z_i Y_i, for i = 1..k.
    """
    t = generators_rho(k)
    out: dict[str, bool] = {}
    acc = PauliString.identity(k)
    for i in range(1, k + 1):
        acc = ps_mul(acc, t[2 * i - 2])
        y = t[2 * i - 1]
        z = acc.times_phase(6 * i)  # (-i)^i = zeta^(6i)
        x = ps_mul(z, y)
        out[f"Y{i}"] = y == PauliString.single(k, i, "Y")
        out[f"Z{i}"] = z == PauliString.single(k, i, "Z")
        out[f"X{i}"] = x == PauliString.single(k, i, "X")
    return out
