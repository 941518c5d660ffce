"""Nice error bases obtained from representations of E^nu_n."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional, Sequence

from ..cyclotomic import ONE, CycScalar
from ..egroup import EElement, e_mul, enumerate_group, image_of, relation_failures
from ..exact_matrix import ExactMatrix, dagger, equal_up_to_phase, matmul, trace
from ..pauli import (
    PauliString,
    generators_lambda,
    generators_rho,
    pauli_error_basis,
    rescale_by_i,
)
from .finite import closure


def representation(n: int, nu: int, kind: str = "auto") -> list[PauliString]:
    """Generator images for E^nu_n.

    ``kind`` is ``rho`` (n even), ``lambda1``/``lambda2`` (n odd) or ``auto``.
    For nu = +1 the images are the nu = -1 ones multiplied by i.
    """
    if kind == "auto":
        kind = "rho" if n % 2 == 0 else "lambda1"
    k = n // 2
    if k < 1:
        raise ValueError(f"no representation of degree 2^k with k >= 1 for n={n}")
    if kind == "rho":
        if n % 2:
            raise ValueError("rho needs even n")
        gens = generators_rho(k)
    elif kind in ("lambda1", "lambda2"):
        if n % 2 == 0:
            raise ValueError("lambda needs odd n")
        gens = generators_lambda(k, int(kind[-1]))
    else:
        raise ValueError(f"unknown representation {kind!r}")
    return rescale_by_i(gens) if nu == 1 else gens


def coset_representatives(n: int, nu: int) -> list[EElement]:
    """Smallest element (by (s, a)) of each coset of the center."""
    rec = enumerate_group(n, nu)
    center = rec.center_elements
    seen: set[EElement] = set()
    reps = []
    for g in sorted(rec.elements, key=EElement.sort_key):
        if g in seen:
            continue
        reps.append(g)
        seen.update(e_mul(g, c) for c in center)
    return reps


@dataclass
class NiceBasisReport:
    n: int
    nu: int
    degree: int
    index_order: int
    identity_ok: bool
    traceless_ok: bool
    orthogonal_ok: bool
    projective_ok: bool
    omega_values: list[CycScalar]
    omega_cyclic: bool
    degree_ok: bool
    failures: list[str] = field(default_factory=list)
    basis: list[ExactMatrix] = field(default_factory=list, repr=False)

    @property
    def passed(self) -> bool:
        return (
            self.identity_ok
            and self.traceless_ok
            and self.orthogonal_ok
            and self.projective_ok
            and self.omega_cyclic
            and self.degree_ok
        )

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "nu": self.nu,
            "degree": self.degree,
            "index_order": self.index_order,
            "identity": self.identity_ok,
            "traceless": self.traceless_ok,
            "trace_orthogonal": self.orthogonal_ok,
            "projective": self.projective_ok,
            "omega": [str(w) for w in self.omega_values],
            "omega_cyclic": self.omega_cyclic,
            "degree_squared_is_index": self.degree_ok,
            "failures": self.failures[:20],
        }


def _is_cyclic(values: Sequence[CycScalar]) -> bool:
    """Whether the group generated by ``values`` is cyclic (and finite)."""
    if not values or not all(v.is_unit_modulus() for v in values):
        return False
    try:
        group = closure(values, lambda a, b: a * b, ONE, cap=64)
    except RuntimeError:
        return False
    size = group.order
    return any(group.element_order(g) == size for g in group.elements)


def nice_error_basis_check(
    n: int, nu: int, images: Optional[Sequence[PauliString]] = None
) -> NiceBasisReport:
    """Check the nice-error-basis conditions for ``images`` (default: rho/lambda1).

    One representative per coset of Z(E^nu_n) is mapped to a matrix; the
    checks are: identity maps to I; all other representatives are
    traceless (and mutually trace-orthogonal); each product is a phase
    omega(g, h) times the representative of gh, with the omegas generating a
    cyclic group; and d^2 = |G/Z(G)| for d = 2^k.
    """
    if images is None:
        images = representation(n, nu)
    bad = relation_failures(nu, images)
    if bad:
        raise ValueError("images do not satisfy the defining relations: " + "; ".join(bad))
    reps = coset_representatives(n, nu)
    rec = enumerate_group(n, nu)
    center = rec.center_elements
    coset_of = {}
    for i, g in enumerate(reps):
        for c in center:
            coset_of[e_mul(g, c)] = i

    mats = [image_of(g, images).to_matrix() for g in reps]
    d = mats[0].dim
    failures: list[str] = []

    identity_ok = reps[0] == EElement.identity(n, nu) and mats[0].is_identity
    if not identity_ok:
        failures.append("identity representative is not I")

    traceless_ok = True
    for g, m in zip(reps[1:], mats[1:]):
        if not trace(m).is_zero():
            traceless_ok = False
            failures.append(f"trace of {g} is {trace(m)}")

    daggers = [dagger(m) for m in mats]
    orthogonal_ok = True
    for i in range(len(mats)):
        for j in range(i + 1, len(mats)):
            if not trace(matmul(daggers[i], mats[j])).is_zero():
                orthogonal_ok = False
                failures.append(f"Tr({reps[i]}^dag {reps[j]}) != 0")

    omegas: set[CycScalar] = set()
    projective_ok = True
    for i, g in enumerate(reps):
        for j, h in enumerate(reps):
            target = coset_of[e_mul(g, h)]
            w = equal_up_to_phase(matmul(mats[i], mats[j]), mats[target])
            if w is None:
                projective_ok = False
                failures.append(f"phi({g}) phi({h}) is not a phase times phi({reps[target]})")
            else:
                omegas.add(w)
    omega_values = sorted(omegas, key=lambda w: w.zeta_exponent() or 0)
    omega_cyclic = _is_cyclic(omega_values)
    index_order = rec.order // len(center)
    degree_ok = d * d == index_order and len(reps) == index_order
    return NiceBasisReport(
        n=n,
        nu=nu,
        degree=d,
        index_order=index_order,
        identity_ok=identity_ok,
        traceless_ok=traceless_ok,
        orthogonal_ok=orthogonal_ok,
        projective_ok=projective_ok,
        omega_values=omega_values,
        omega_cyclic=omega_cyclic,
        degree_ok=degree_ok,
        failures=failures,
        basis=mats,
    )


@dataclass
class BasisMatch:
    matched: bool
    pairs: list[tuple[int, int, Optional[CycScalar]]]
    unmatched: list[int]

    def phase_table(self) -> list[dict]:
        return [{"rep": i, "pauli": j, "phase": str(c)} for i, j, c in self.pairs]


def basis_equiv_mod_phase(
    rep_basis: Sequence[ExactMatrix], pauli_basis: Sequence[ExactMatrix]
) -> BasisMatch:
    """Match each basis matrix to a distinct Pauli matrix up to a unit phase."""
    used: set[int] = set()
    pairs = []
    unmatched = []
    for i, m in enumerate(rep_basis):
        for j, p in enumerate(pauli_basis):
            if j in used:
                continue
            c = equal_up_to_phase(m, p)
            if c is not None:
                used.add(j)
                pairs.append((i, j, c))
                break
        else:
            unmatched.append(i)
    matched = (
        not unmatched
        and len(rep_basis) == len(pauli_basis)
        and len(used) == len(pauli_basis)
    )
    return BasisMatch(matched, pairs, unmatched)


def pauli_basis_matrices(k: int) -> list[ExactMatrix]:
    return [p.to_matrix() for p in pauli_error_basis(k)]


def same_basis_as_set(a: Sequence[ExactMatrix], b: Sequence[ExactMatrix]) -> bool:
    return set(a) == set(b)

