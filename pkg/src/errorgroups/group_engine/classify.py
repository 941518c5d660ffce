"""Classification of E^nu_n by central products of D, Q, Z2 and Z4."""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from typing import Optional

from ..egroup import EElement, e_mul, enumerate_group
from .finite import recognize_dq, subgroup, verify_central_product

CATEGORIES = {None: "extraspecial", "Z4": "almost", "Z2": "nearly"}


def order4_formula(s: int) -> tuple[int, int]:
    """Cyclic order-4 subgroup counts (n, m) of DQ^{s-1} and Q^s."""
    if s < 1:
        raise ValueError("s must be >= 1")
    return ((2 ** (2 * s) + (-2) ** s) // 2, (2 ** (2 * s) - (-2) ** s) // 2)


@dataclass(frozen=True)
class Label:
    """Central product ``central o Q^q D^d`` with q in {0, 1} after D^2 = Q^2.

    ``central`` is None (extraspecial), "Z4" (almost) or "Z2" (nearly).
    """

    q: int
    d: int
    central: Optional[str] = None

    @classmethod
    def normalized(cls, q: int, d: int, central: Optional[str] = None) -> Label:
        # Q^2 = D^2: fold pairs of Q into pairs of D
        return cls(q % 2, d + 2 * (q // 2), central)

    @classmethod
    def parse(cls, text: str) -> Label:
        """Parse forms like ``D^4``, ``QD``, ``Z2∘QD^4``, ``Z4 o D^2``, ``Q``."""
        t = text.replace(" ", "").replace("∘", "o")
        m = re.fullmatch(r"(?:(Z[24])o)?(Q)?(?:D(?:\^(\d+))?)?", t)
        if not m or (not m.group(2) and "D" not in t and not m.group(1)):
            raise ValueError(f"cannot parse label {text!r}")
        q = 1 if m.group(2) else 0
        if "D" in t:
            d = int(m.group(3)) if m.group(3) else 1
        else:
            d = 0
        return cls.normalized(q, d, m.group(1))

    @property
    def rank(self) -> int:
        return self.q + self.d

    @property
    def category(self) -> str:
        return CATEGORIES[self.central]

    def base_order4_count(self) -> int:
        """Order-4 elements in the extraspecial part Q^q D^d."""
        r = self.rank
        if r == 0:
            return 0
        n, m = order4_formula(r)
        # DQ^{r-1} has q-parity (r-1) mod 2; Q^r has q-parity r mod 2
        return 2 * (n if (r - 1) % 2 == self.q else m)

    def predicted(self) -> tuple[int, str, int]:
        """(order, center type, order-4 element count) implied by the label."""
        base = 2 ** (2 * self.rank + 1)
        if self.central is None:
            return (base, "Z2", self.base_order4_count())
        if self.central == "Z4":
            # elements of X and wX, w^2 = -1: every wx with x^2 = 1 has order 4
            return (2 * base, "Z4", base)
        return (2 * base, "Z2xZ2", 2 * self.base_order4_count())

    def __str__(self) -> str:
        body = ("Q" if self.q else "") + (
            "" if self.d == 0 else "D" if self.d == 1 else f"D^{self.d}"
        )
        if not body:
            body = "D^0"
        return f"{self.central}∘{body}" if self.central else body


def predicted_label(n: int, nu: int) -> Label:
    """The isomorphism type asserted for E^nu_n."""
    if n < 1:
        raise ValueError("n must be >= 1")
    if nu == 1:
        k = n // 2
        return Label(0, k) if n % 2 == 0 else Label(0, k, "Z2")
    j, r = divmod(n, 8)
    table = {
        0: (0, 4 * j, None),
        1: (0, 4 * j, "Z4"),
        2: (1, 4 * j, None),
        3: (1, 4 * j, "Z2"),
        4: (1, 4 * j + 1, None),
        5: (1, 4 * j + 1, "Z4"),
        6: (0, 4 * j + 3, None),
        7: (0, 4 * j + 3, "Z2"),
    }
    q, d, central = table[r]
    return Label(q, d, central)


@dataclass
class ClassificationRecord:
    n: int
    nu: int
    order: int
    center_type: str
    order4_count: int
    label: Label
    category: str
    predicted: tuple[int, str, int]

    @property
    def observed(self) -> tuple[int, str, int]:
        return (self.order, self.center_type, self.order4_count)

    @property
    def agrees(self) -> bool:
        return self.observed == self.predicted

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "nu": self.nu,
            "order": self.order,
            "center_type": self.center_type,
            "order4_count": self.order4_count,
            "label": str(self.label),
            "category": self.category,
            "predicted": list(self.predicted),
            "agrees": self.agrees,
        }


class ClassificationFailure(AssertionError):
    pass


def classify_e(n: int, nu: int, *, strict: bool = True) -> ClassificationRecord:
    """Enumerate E^nu_n and compare its invariants with the predicted label."""
    rec = enumerate_group(n, nu)
    label = predicted_label(n, nu)
    out = ClassificationRecord(
        n=n,
        nu=nu,
        order=rec.order,
        center_type=rec.center_type,
        order4_count=rec.count_of_order(4),
        label=label,
        category=label.category,
        predicted=label.predicted(),
    )
    if strict and not out.agrees:
        raise ClassificationFailure(
            f"E^{nu}_{n}: observed {out.observed}, predicted {out.predicted} for {label}"
        )
    return out


# -- recursive central-product decomposition ----------------------------------


@dataclass
class DecompositionStep:
    """One step G_m = G_{m-1} o K with K typed as D, Q, Z2 or Z4."""

    size: int
    factor: str
    k_generators: list[str]
    square_sign: int
    expected_factor: str
    passed: bool
    checks: dict = field(default_factory=dict)


@dataclass
class Decomposition:
    n: int
    nu: int
    steps: list[DecompositionStep]
    word: list[str]
    label: Label

    @property
    def passed(self) -> bool:
        return all(s.passed for s in self.steps)

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "nu": self.nu,
            "word": "∘".join(self.word),
            "label": str(self.label),
            "passed": self.passed,
            "steps": [
                {
                    "size": s.size,
                    "factor": s.factor,
                    "expected_factor": s.expected_factor,
                    "k_generators": s.k_generators,
                    "square_sign": s.square_sign,
                    "passed": s.passed,
                    "checks": s.checks,
                }
                for s in self.steps
            ],
        }


class DecompositionFailure(AssertionError):
    pass


def _odd_product(n: int, nu: int, upto: int) -> EElement:
    """e_1 e_3 ... e_upto (upto odd)."""
    return EElement.word(n, nu, range(1, upto + 1, 2))


def decompose_e(n: int, nu: int, *, strict: bool = True) -> Decomposition:
    """Peel E^nu_n into D/Q factors (plus Z2/Z4 for odd n), checking each step.

    For even size 2j the step is E_{2j} = E_{2j-2} o <e_1 e_3 ... e_{2j-1}, e_{2j}>;
    the new factor is D or Q according to the square of e_1 e_3 ... e_{2j-1}
    and of e_{2j}.  For odd n the last step adjoins the central element
    e_1 e_3 ... e_n, giving Z4 or Z2 by its square.
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    full = enumerate_group(n, nu)
    minus_one = EElement(n, nu, 1, 0)
    steps: list[DecompositionStep] = []
    word: list[str] = []

    def gens_upto(m: int) -> list[EElement]:
        return [EElement.gen(n, nu, i) for i in range(1, m + 1)] or [minus_one]

    for j in range(1, n // 2 + 1):
        size = 2 * j
        ambient = subgroup(full, gens_upto(size))
        c = _odd_product(n, nu, size - 1)
        h = EElement.gen(n, nu, size)
        csq = -1 if e_mul(c, c).s else 1
        hsq = -1 if e_mul(h, h).s else 1
        k_group = subgroup(full, [c, h])
        factor = recognize_dq(k_group)
        # D: one generator squares to 1, the other to -1 (or both to +1); Q: both -1
        expected = "Q" if (csq, hsq) == (-1, -1) else "D"
        rep = verify_central_product(ambient, gens_upto(size - 2), [c, h])
        checks = {
            "commute": rep.commute,
            "intersection_central": rep.intersection_central,
            "covers": rep.covers,
            "orders": [rep.order_h, rep.order_k, rep.order_intersection, ambient.order],
        }
        ok = rep.passed and factor == expected and ambient.order == 2 ** (size + 1)
        steps.append(
            DecompositionStep(size, factor, [str(c), str(h)], csq, expected, ok, checks)
        )
        word.append(factor)

    central = None
    if n % 2 == 1:
        c = _odd_product(n, nu, n)
        csq = -1 if e_mul(c, c).s else 1
        k_group = subgroup(full, [c])
        factor = recognize_dq(k_group) if k_group.order == 4 else f"Z{k_group.order}"
        expected = "Z4" if csq == -1 else "Z2"
        rep = verify_central_product(full, gens_upto(n - 1), [c])
        in_center = c in set(full.center_elements)
        checks = {
            "commute": rep.commute,
            "intersection_central": rep.intersection_central,
            "covers": rep.covers,
            "central_generator": in_center,
            "orders": [rep.order_h, rep.order_k, rep.order_intersection, full.order],
        }
        ok = rep.passed and in_center and factor == expected
        steps.append(DecompositionStep(n, factor, [str(c)], csq, expected, ok, checks))
        word.append(factor)
        central = factor

    q = word.count("Q")
    d = word.count("D")
    label = Label.normalized(q, d, central)
    out = Decomposition(n, nu, steps, word, label)
    if strict and not out.passed:
        bad = [s for s in steps if not s.passed]
        raise DecompositionFailure(f"E^{nu}_{n}: step(s) failed at sizes {[s.size for s in bad]}")
    return out
