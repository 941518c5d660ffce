"""Comparison of E^nu_n with the real and complex Pauli groups."""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from ..egroup import enumerate_group
from ..pauli import PauliString, generators_pauli, pauli_from_e, ps_mul
from .classify import Label
from .finite import FiniteGroupRecord, closure


@lru_cache(maxsize=None)
def pauli_group(k: int, complex: bool = False) -> FiniteGroupRecord:
    """P_k (real) or P'_k (complex) by closure of its generators."""
    return closure(generators_pauli(k, complex), ps_mul, PauliString.identity(k))


@lru_cache(maxsize=None)
def dq_product_group(word: str) -> FiniteGroupRecord:
    """Central product of D and Q factors, one qubit per letter.

    D on qubit j is <X_j, Z_j>; Q on qubit j is <iZ_j, Y_j>.  Factors on
    different qubits commute and meet in {+-1}.
    """
    k = len(word)
    gens = []
    for j, letter in enumerate(word, start=1):
        if letter == "D":
            gens += [PauliString.single(k, j, "X"), PauliString.single(k, j, "Z")]
        elif letter == "Q":
            gens += [
                PauliString.single(k, j, "Z").times_phase(2),
                PauliString.single(k, j, "Y"),
            ]
        else:
            raise ValueError(f"unknown factor {letter!r}")
    return closure(gens, ps_mul, PauliString.identity(k))


def is_isomorphic_by_invariants(a: FiniteGroupRecord, b: FiniteGroupRecord) -> bool:
    """Isomorphism verdict from (order, center type, order-4 element count).

    The triple separates every pair of groups compared in this module; it is
    not a general isomorphism test.
    """
    return a.invariants == b.invariants


COLUMNS = ("P_k", "E^1_2k", "E^-1_2k", "P'_k", "E^1_2k+1", "E^-1_2k+1")

# Expected isomorphism types per column, rows k = 1..4.
COMPARISON_TABLE = {
    1: ("D", "D", "Q", "Z4∘D", "Z2∘D", "Z2∘Q"),
    2: ("D^2", "D^2", "QD", "Z4∘D^2", "Z2∘D^2", "Z4∘QD"),
    3: ("D^3", "D^3", "D^3", "Z4∘D^3", "Z2∘D^3", "Z2∘D^3"),
    4: ("D^4", "D^4", "D^4", "Z4∘D^4", "Z2∘D^4", "Z4∘D^4"),
}


def column_group(k: int, column: str) -> FiniteGroupRecord:
    if column == "P_k":
        return pauli_group(k)
    if column == "P'_k":
        return pauli_group(k, True)
    nu = 1 if column.startswith("E^1") else -1
    n = 2 * k + (1 if column.endswith("+1") else 0)
    return enumerate_group(n, nu)


@dataclass
class CellResult:
    k: int
    column: str
    label: str
    observed: tuple[int, str, int]
    predicted: tuple[int, str, int]

    @property
    def passed(self) -> bool:
        return self.observed == self.predicted

    @property
    def name(self) -> str:
        return f"k={self.k}, {self.column}"


def comparison_cells(rows=(1, 2, 3, 4)) -> list[CellResult]:
    """Check every cell's label against the enumerated group's invariants."""
    out = []
    for k in rows:
        for column, text in zip(COLUMNS, COMPARISON_TABLE[k]):
            grp = column_group(k, column)
            out.append(
                CellResult(k, column, text, grp.invariants, Label.parse(text).predicted())
            )
    return out


@dataclass
class PairVerdict:
    claim: str
    left: str
    right: str
    left_invariants: tuple[int, str, int]
    right_invariants: tuple[int, str, int]
    isomorphic: bool
    expected: bool

    @property
    def passed(self) -> bool:
        return self.isomorphic == self.expected

    def to_json(self) -> dict:
        return {
            "claim": self.claim,
            "left": self.left,
            "right": self.right,
            "left_invariants": list(self.left_invariants),
            "right_invariants": list(self.right_invariants),
            "isomorphic": self.isomorphic,
            "expected": self.expected,
            "basis": "order, center type, order-4 element count",
        }


@dataclass
class ComparisonReport:
    k: int
    histograms: dict[str, dict[int, int]]
    center_types: dict[str, str]
    pauli_recovery: dict[str, bool]
    verdicts: list[PairVerdict]

    @property
    def passed(self) -> bool:
        return all(self.pauli_recovery.values()) and all(v.passed for v in self.verdicts)

    def to_json(self) -> dict:
        return {
            "k": self.k,
            "histograms": {
                name: {str(o): c for o, c in h.items()} for name, h in self.histograms.items()
            },
            "center_types": self.center_types,
            "pauli_recovery": self.pauli_recovery,
            "verdicts": [v.to_json() for v in self.verdicts],
        }


def compare_pauli(k: int) -> ComparisonReport:
    """Enumerate P_k, P'_k, E^nu_2k, E^nu_2k+1 and test the stated (non-)isomorphisms.

    Only the claims that apply to this ``k`` are emitted, e.g. the
    E^-1_{8j} = P_{4j} claim only when 2k = 8j.
    """
    groups = {
        "P_k": pauli_group(k),
        "P'_k": pauli_group(k, True),
        "E^1_2k": enumerate_group(2 * k, 1),
        "E^-1_2k": enumerate_group(2 * k, -1),
        "E^1_2k+1": enumerate_group(2 * k + 1, 1),
        "E^-1_2k+1": enumerate_group(2 * k + 1, -1),
    }

    def verdict(claim: str, a: str, b: str, expected: bool) -> PairVerdict:
        ga, gb = groups[a], groups[b]
        return PairVerdict(
            claim, a, b, ga.invariants, gb.invariants,
            is_isomorphic_by_invariants(ga, gb), expected,
        )

    verdicts = [
        verdict("real Pauli group is isomorphic to E^1_2k", "P_k", "E^1_2k", True),
        verdict("complex Pauli group is not isomorphic to E^1_2k+1", "P'_k", "E^1_2k+1", False),
    ]
    if (2 * k) % 8 in (0, 6):
        verdicts.append(
            verdict("E^-1_8j and E^-1_8j+6 are isomorphic to P_4j, P_4j+3", "E^-1_2k", "P_k", True)
        )
    if (2 * k) % 8 in (2, 4):
        verdicts.append(
            verdict("E^-1_8j+2 and E^-1_8j+4 are not Pauli groups", "E^-1_2k", "P_k", False)
        )
    if (2 * k + 1) % 8 == 1:
        verdicts.append(
            verdict("E^-1_8j+1 is isomorphic to P'_4j", "E^-1_2k+1", "P'_k", True)
        )
    if (2 * k + 1) % 8 == 7:
        verdicts.append(
            verdict("E^-1_8j+7 is isomorphic to E^1_8j+7", "E^-1_2k+1", "E^1_2k+1", True)
        )
    return ComparisonReport(
        k=k,
        histograms={name: g.order_histogram for name, g in groups.items()},
        center_types={name: g.center_type for name, g in groups.items()},
        pauli_recovery=pauli_from_e(k),
        verdicts=verdicts,
    )
