"""Breadth-first closure of finite groups and small structural checks.

Elements can be anything hashable with exact equality (``EElement``,
``PauliString``, ``ExactMatrix``); the multiplication is passed in.
"""

from __future__ import annotations

import os
from collections import Counter, deque
from dataclasses import dataclass, field
from functools import cached_property
from typing import Any, Callable, Hashable, Iterable, Optional, Sequence

DEFAULT_CAP = 10_000_000


def default_cap() -> int:
    env = os.environ.get("BEG_ELEMENT_CAP")
    if env:
        cap = int(env)
        if cap <= 0:
            raise ValueError("BEG_ELEMENT_CAP must be positive")
        return cap
    return DEFAULT_CAP


class ClosureCapExceeded(RuntimeError):
    def __init__(self, cap: int) -> None:
        super().__init__(f"group closure exceeded the element cap of {cap}")
        self.cap = cap


class FiniteGroupRecord:
    """An enumerated finite group.

    ``elements`` is in discovery order; index 0 is the identity.  Center and
    order histogram are computed on first access unless supplied.
    """

    def __init__(
        self,
        elements: Sequence[Hashable],
        generators: Sequence[int],
        mul: Callable[[Any, Any], Any],
        *,
        labels: Optional[Sequence[Any]] = None,
        center: Optional[Sequence[int]] = None,
        order_histogram: Optional[dict[int, int]] = None,
        element_orders: Optional[Sequence[int]] = None,
    ) -> None:
        self.elements = list(elements)
        self.index = {g: i for i, g in enumerate(self.elements)}
        self.generators = list(generators)
        self.mul = mul
        self.labels = labels
        if center is not None:
            self.__dict__["center"] = list(center)
        if element_orders is not None:
            self.__dict__["element_orders"] = list(element_orders)
        if order_histogram is not None:
            self.__dict__["order_histogram"] = dict(order_histogram)

    @property
    def order(self) -> int:
        return len(self.elements)

    def __len__(self) -> int:
        return len(self.elements)

    def __contains__(self, g: object) -> bool:
        return g in self.index

    @property
    def identity(self) -> Any:
        return self.elements[0]

    @property
    def generator_elements(self) -> list:
        return [self.elements[i] for i in self.generators]

    def element_order(self, g: Any) -> int:
        e = self.identity
        acc, m = g, 1
        while acc != e:
            acc = self.mul(acc, g)
            m += 1
        return m

    @cached_property
    def element_orders(self) -> list[int]:
        return [self.element_order(g) for g in self.elements]

    @cached_property
    def order_histogram(self) -> dict[int, int]:
        return dict(sorted(Counter(self.element_orders).items()))

    @cached_property
    def center(self) -> list[int]:
        gens = self.generator_elements
        return [
            i
            for i, g in enumerate(self.elements)
            if all(self.mul(g, h) == self.mul(h, g) for h in gens)
        ]

    @property
    def center_elements(self) -> list:
        return [self.elements[i] for i in self.center]

    @cached_property
    def center_type(self) -> str:
        return center_iso_type(
            [self.element_orders[i] for i in self.center]
        )

    def count_of_order(self, m: int) -> int:
        return self.order_histogram.get(m, 0)

    @property
    def invariants(self) -> tuple[int, str, int]:
        """(order, center type, number of order-4 elements)."""
        return (self.order, self.center_type, self.count_of_order(4))

    def inverse(self, g: Any) -> Any:
        m = self.element_order(g)
        acc = self.identity
        for _ in range(m - 1):
            acc = self.mul(acc, g)
        return acc

    def is_abelian(self) -> bool:
        gens = self.generator_elements
        return all(self.mul(a, b) == self.mul(b, a) for a in gens for b in gens)


def center_iso_type(orders: Sequence[int]) -> str:
    """Name a center of order <= 4 from its element orders."""
    n = len(orders)
    if n == 1:
        return "1"
    if n == 2:
        return "Z2"
    if n == 4:
        return "Z4" if 4 in orders else "Z2xZ2"
    return f"order{n}"


def closure(
    generators: Iterable[Any],
    mul: Callable[[Any, Any], Any],
    identity: Any,
    *,
    inverse: Optional[Callable[[Any], Any]] = None,
    cap: Optional[int] = None,
    gen_labels: Optional[Sequence[Any]] = None,
    label_mul: Optional[Callable[[Any, Any], Any]] = None,
    identity_label: Any = None,
) -> FiniteGroupRecord:
    """Enumerate the group generated by ``generators`` by right multiplication.

    With ``inverse`` given, inverses of the generators are added as extra
    right multipliers (not needed for finite groups, but it shortens
    words).  With ``gen_labels``/``label_mul`` each element also carries a
    label propagated along the BFS tree, e.g. a permutation; every Cayley
    edge is checked, and ``record.label_conflicts`` counts edges where an
    element would have received a different label.
    """
    cap = default_cap() if cap is None else cap
    gens = list(generators)
    tracking = gen_labels is not None
    if tracking:
        if label_mul is None or len(gen_labels) != len(gens):
            raise ValueError("gen_labels needs label_mul and one label per generator")
        step_labels = list(gen_labels)
    steps = list(gens)
    if inverse is not None:
        steps += [inverse(g) for g in gens]
        if tracking:
            step_labels += [_label_inverse(label_mul, lab, identity_label) for lab in gen_labels]

    elements = [identity]
    index = {identity: 0}
    labels = [identity_label] if tracking else None
    conflicts = 0
    queue = deque([0])
    while queue:
        i = queue.popleft()
        g = elements[i]
        for s, step in enumerate(steps):
            h = mul(g, step)
            lab = label_mul(labels[i], step_labels[s]) if tracking else None
            j = index.get(h)
            if j is None:
                if len(elements) >= cap:
                    raise ClosureCapExceeded(cap)
                index[h] = len(elements)
                elements.append(h)
                if tracking:
                    labels.append(lab)
                queue.append(len(elements) - 1)
            elif tracking and labels[j] != lab:
                conflicts += 1

    gen_idx = [index[g] for g in gens]
    rec = FiniteGroupRecord(elements, gen_idx, mul, labels=labels)
    rec.label_conflicts = conflicts
    return rec


def _label_inverse(label_mul, lab, identity_label):
    acc, prev = lab, identity_label
    while acc != identity_label:
        prev = acc
        acc = label_mul(acc, lab)
    return prev


def subgroup(
    group: FiniteGroupRecord, generators: Sequence[Any]
) -> FiniteGroupRecord:
    return closure(generators, group.mul, group.identity)


def cyclic_subgroups_of_order(group: FiniteGroupRecord, m: int) -> set[frozenset]:
    """Distinct cyclic subgroups of order ``m``, found by exhaustive scan."""
    found = set()
    for g, o in zip(group.elements, group.element_orders):
        if o != m:
            continue
        members, acc = [group.identity], g
        while acc != group.identity:
            members.append(acc)
            acc = group.mul(acc, g)
        found.add(frozenset(members))
    return found


def recognize_dq(group: FiniteGroupRecord) -> str:
    """Tell D from Q (and name the small abelian cases Z4, Z2xZ2)."""
    hist = group.order_histogram
    if group.order == 8 and not group.is_abelian():
        return {2: "D", 6: "Q"}.get(hist.get(4, 0), "other")
    if group.order == 4:
        return "Z4" if hist.get(4, 0) else "Z2xZ2"
    return "other"


@dataclass
class CentralProductReport:
    commute: bool
    intersection_central: bool
    covers: bool
    order_h: int
    order_k: int
    order_intersection: int
    details: dict = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return self.commute and self.intersection_central and self.covers


def verify_central_product(
    group: FiniteGroupRecord,
    h_gens: Sequence[Any],
    k_gens: Sequence[Any],
) -> CentralProductReport:
    """Check that G = H o K for H = <h_gens>, K = <k_gens>.

    (i) every element of H commutes with every element of K, (ii) H n K lies
    in Z(G), (iii) |H||K|/|H n K| = |G| and every element of G is some hk.
    """
    mul = group.mul
    h = subgroup(group, h_gens)
    k = subgroup(group, k_gens)
    # commuting generators suffice for commuting subgroups
    commute = all(mul(a, b) == mul(b, a) for a in h_gens for b in k_gens)
    inter = [g for g in h.elements if g in k.index]
    center = set(group.center_elements)
    central = all(g in center for g in inter)
    products = {mul(a, b) for a in h.elements for b in k.elements}
    covers = (
        h.order * k.order == len(inter) * group.order
        and len(products) == group.order
        and all(g in group.index for g in products)
    )
    return CentralProductReport(
        commute=commute,
        intersection_central=central,
        covers=covers,
        order_h=h.order,
        order_k=k.order,
        order_intersection=len(inter),
    )
