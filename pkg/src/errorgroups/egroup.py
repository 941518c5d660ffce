"""The groups E^nu_n as normal-form words.

E^nu_n is generated by e_1..e_n with e_i^2 = nu, e_i e_{i+1} = -e_{i+1} e_i
and e_i e_j = e_j e_i for |i - j| >= 2.  Every element has the unique form
(-1)^s e_1^{a_1} ... e_n^{a_n}; bit ``i-1`` of ``a`` is the exponent of e_i.

Enumeration here is independent of any matrix representation, so it sees
elements a non-faithful representation would collapse.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from typing import Sequence

from .group_engine.finite import FiniteGroupRecord, center_iso_type
from .pauli import PauliString, ps_mul

MAX_N = 20


@dataclass(frozen=True, order=True)
class EElement:
    n: int
    nu: int
    s: int
    a: int

    def __post_init__(self) -> None:
        if self.nu not in (1, -1):
            raise ValueError("nu must be +1 or -1")
        if self.a >> self.n:
            raise ValueError(f"exponent mask out of range for n={self.n}")

    @classmethod
    def identity(cls, n: int, nu: int) -> EElement:
        return cls(n, nu, 0, 0)

    @classmethod
    def gen(cls, n: int, nu: int, i: int) -> EElement:
        """The generator e_i (1-based)."""
        if not 1 <= i <= n:
            raise ValueError(f"generator index {i} out of range 1..{n}")
        return cls(n, nu, 0, 1 << (i - 1))

    @classmethod
    def word(cls, n: int, nu: int, indices: Sequence[int], sign: int = 1) -> EElement:
        """sign * e_{i1} e_{i2} ... in the given order."""
        g = cls(n, nu, 0 if sign > 0 else 1, 0)
        for i in indices:
            g = e_mul(g, cls.gen(n, nu, i))
        return g

    @property
    def support(self) -> list[int]:
        return [i + 1 for i in range(self.n) if self.a >> i & 1]

    def __mul__(self, other: EElement) -> EElement:
        return e_mul(self, other)

    def __neg__(self) -> EElement:
        return EElement(self.n, self.nu, self.s ^ 1, self.a)

    def sort_key(self) -> tuple[int, int]:
        return (self.s, self.a)

    def __str__(self) -> str:
        body = "".join(f"e{i}" for i in self.support) or "1"
        return ("-" if self.s else "") + body


def _check(g: EElement, h: EElement) -> None:
    if g.n != h.n or g.nu != h.nu:
        raise ValueError("elements belong to different groups")


def e_mul(g: EElement, h: EElement) -> EElement:
    _check(g, h)
    swaps = ((g.a >> 1) & h.a).bit_count()
    s = g.s ^ h.s ^ (swaps & 1)
    if g.nu == -1:
        s ^= (g.a & h.a).bit_count() & 1
    return EElement(g.n, g.nu, s, g.a ^ h.a)


def e_square_sign(g: EElement) -> int:
    """g*g is +-1; return that sign."""
    sq = e_mul(g, g)
    return -1 if sq.s else 1


def e_order(g: EElement) -> int:
    if g.a == 0:
        return 2 if g.s else 1
    return 2 if e_square_sign(g) == 1 else 4


def e_commutes(g: EElement, h: EElement) -> bool:
    _check(g, h)
    # anticommuting pairs are adjacent indices, in either order
    odd = (((g.a >> 1) & h.a).bit_count() + ((h.a >> 1) & g.a).bit_count()) & 1
    return not odd


def elements(n: int, nu: int) -> list[EElement]:
    return [EElement(n, nu, s, a) for a in range(1 << n) for s in (0, 1)]


def enumerate_group(n: int, nu: int, max_n: int = MAX_N) -> FiniteGroupRecord:
    """All 2^{n+1} elements of E^nu_n, with orders and center precomputed."""
    if n < 1:
        raise ValueError("n must be >= 1")
    if n > max_n:
        raise ValueError(f"n={n} exceeds the enumeration bound {max_n}")
    elems = elements(n, nu)
    orders = [e_order(g) for g in elems]
    gens = [EElement.gen(n, nu, i) for i in range(1, n + 1)]
    center = [
        idx for idx, g in enumerate(elems) if all(e_commutes(g, x) for x in gens)
    ]
    index_of = {g: i for i, g in enumerate(elems)}
    return FiniteGroupRecord(
        elems,
        [index_of[g] for g in gens],
        e_mul,
        center=center,
        element_orders=orders,
        order_histogram=dict(sorted(Counter(orders).items())),
    )


def center_of(n: int, nu: int) -> tuple[list[EElement], str]:
    rec = enumerate_group(n, nu)
    return rec.center_elements, rec.center_type


def to_json(n: int, nu: int) -> dict:
    rec = enumerate_group(n, nu)
    return {
        "n": n,
        "nu": nu,
        "order": rec.order,
        "order_histogram": {str(k): v for k, v in rec.order_histogram.items()},
        "center_type": rec.center_type,
    }


# -- representations on Pauli strings -----------------------------------------


class NotARepresentation(ValueError):
    """Proposed generator images violate the defining relations."""


def relation_failures(nu: int, images: Sequence[PauliString]) -> list[str]:
    """Defining relations of E^nu_n that the images break, by name."""
    fails = []
    want_sq = 0 if nu == 1 else 4
    n = len(images)
    for i, t in enumerate(images, start=1):
        sq = ps_mul(t, t)
        if not (sq.is_scalar and sq.p == want_sq):
            fails.append(f"e{i}^2 = {nu}")
    for i in range(n):
        for j in range(i + 1, n):
            gh = ps_mul(images[i], images[j])
            hg = ps_mul(images[j], images[i])
            if j == i + 1:
                if gh != hg.times_phase(4):
                    fails.append(f"e{i + 1} e{j + 1} = -e{j + 1} e{i + 1}")
            elif gh != hg:
                fails.append(f"e{i + 1} e{j + 1} = e{j + 1} e{i + 1}")
    return fails


def image_of(g: EElement, images: Sequence[PauliString]) -> PauliString:
    """Homomorphic image of ``g`` given generator images."""
    k = images[0].k
    acc = PauliString.phase(k, 4 * g.s)
    for i in g.support:
        acc = ps_mul(acc, images[i - 1])
    return acc


def rep_kernel(n: int, nu: int, images: Sequence[PauliString]) -> list[EElement]:
    """Non-identity elements mapped to the identity; empty iff faithful."""
    if len(images) != n:
        raise ValueError(f"expected {n} generator images, got {len(images)}")
    fails = relation_failures(nu, images)
    if fails:
        raise NotARepresentation("; ".join(fails))
    ident = EElement.identity(n, nu)
    return [
        g for g in elements(n, nu) if g != ident and image_of(g, images).is_identity
    ]
