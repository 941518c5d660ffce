"""Braid group representations R_i = (I + T_i)/sqrt2 built from nice error bases.

T_i are the Pauli-string images of e_i (rho for the 2k+1 strand
representations, lambda1/lambda2 for 2k+2 strands).  The ``jones`` variant
multiplies every R_i by -e^{-i pi/4} = zeta8^3.

Inverse generators are daggers; this is valid because every R_i is checked
unitary.
"""

from __future__ import annotations

import math
from collections import deque
from dataclasses import dataclass, field
from itertools import permutations
from typing import NamedTuple, Optional, Sequence

from .cyclotomic import INV_SQRT2, ONE, ZERO, CycScalar
from .exact_matrix import (
    ExactMatrix,
    dagger,
    is_unitary,
    matmul,
    tensor_all,
)
from .group_engine.finite import FiniteGroupRecord, closure
from .pauli import (
    PauliString,
    generators_lambda,
    generators_rho,
    ps_commutator_sign,
    ps_mul,
    rescale_by_i,
)

VARIANTS = ("unscaled", "jones", "lambda1", "lambda2")
JONES_PHASE = CycScalar.zeta(3)  # -e^{-i pi/4}
MAX_IMAGE_K = 2


@dataclass(frozen=True)
class BraidRepSpec:
    k: int
    variant: str = "unscaled"

    def __post_init__(self) -> None:
        if self.k < 1:
            raise ValueError("k must be >= 1")
        if self.variant not in VARIANTS:
            raise ValueError(f"variant must be one of {VARIANTS}")

    @property
    def n_generators(self) -> int:
        return 2 * self.k + (1 if self.variant.startswith("lambda") else 0)

    @property
    def strands(self) -> int:
        return self.n_generators + 1

    @property
    def dim(self) -> int:
        return 1 << self.k

    def to_json(self) -> dict:
        return {"k": self.k, "variant": self.variant, "strands": self.strands}


@dataclass(frozen=True)
class BraidWord:
    n: int
    letters: tuple[int, ...] = ()

    def __post_init__(self) -> None:
        object.__setattr__(self, "letters", tuple(self.letters))
        for x in self.letters:
            if x == 0 or abs(x) > self.n - 1:
                raise ValueError(f"letter {x} invalid for {self.n} strands")

    def __mul__(self, other: BraidWord) -> BraidWord:
        if other.n != self.n:
            raise ValueError("strand counts differ")
        return BraidWord(self.n, self.letters + other.letters)

    def inverse(self) -> BraidWord:
        return BraidWord(self.n, tuple(-x for x in reversed(self.letters)))

    def __len__(self) -> int:
        return len(self.letters)

    def __str__(self) -> str:
        if not self.letters:
            return "1"
        return " ".join(f"b{x}" if x > 0 else f"b{-x}^-1" for x in self.letters)


# -- generator images ---------------------------------------------------------


def generator_images(spec: BraidRepSpec) -> list[PauliString]:
    if spec.variant in ("unscaled", "jones"):
        return generators_rho(spec.k)
    return generators_lambda(spec.k, 1 if spec.variant == "lambda1" else 2)


def quarter_exp(t: ExactMatrix) -> ExactMatrix:
    """e^{(pi/4) T} for T^2 = -I, via cos(pi/4) I + sin(pi/4) T."""
    cos = sin = INV_SQRT2
    return ExactMatrix.identity(t.dim) * cos + t * sin


def build_r_matrices(spec: BraidRepSpec) -> list[ExactMatrix]:
    out = []
    for t in generator_images(spec):
        tm = t.to_matrix()
        r = (ExactMatrix.identity(tm.dim) + tm) * INV_SQRT2
        if spec.variant == "jones":
            r = r * JONES_PHASE
        out.append(r)
    return out


def _single(dim_k: int, qubit: int, m: ExactMatrix) -> ExactMatrix:
    eye = ExactMatrix.identity(2)
    return tensor_all([m if q == qubit else eye for q in range(1, dim_k + 1)])


def reference_r_matrices(spec: BraidRepSpec) -> list[ExactMatrix]:
    """The same matrices written as d_1, D_{i-1,i}, f_i (and d_k or conj d_k).

    d = e^{i pi/4 Z} = diag(zeta, zeta^-1), f = e^{pi/4 Y} is the rotation
    [[1, 1], [-1, 1]]/sqrt2, D = e^{i pi/4 Z(x)Z} = diag(zeta, zeta^-1,
    zeta^-1, zeta); each is placed by tensoring identities around it.
    """
    k = spec.k
    z, zi = CycScalar.zeta(1), CycScalar.zeta(-1)
    d = ExactMatrix.diagonal([z, zi])
    d_bar = ExactMatrix.diagonal([zi, z])
    f = ExactMatrix.from_entries([[INV_SQRT2, INV_SQRT2], [-INV_SQRT2, INV_SQRT2]])
    big_d = ExactMatrix.diagonal([z, zi, zi, z])
    eye = ExactMatrix.identity(2)
    mats = []
    for i in range(1, k + 1):
        if i == 1:
            mats.append(_single(k, 1, d))
        else:
            # acts on qubits i-1, i
            mats.append(tensor_all([eye] * (i - 2) + [big_d] + [eye] * (k - i)))
        mats.append(_single(k, i, f))
    if spec.variant == "lambda1":
        mats.append(_single(k, k, d))
    elif spec.variant == "lambda2":
        mats.append(_single(k, k, d_bar))
    if spec.variant == "jones":
        mats = [m * JONES_PHASE for m in mats]
    return mats


# -- relation checks ----------------------------------------------------------


@dataclass
class RelationReport:
    far_commutation: dict[str, bool] = field(default_factory=dict)
    braid_relations: dict[str, bool] = field(default_factory=dict)
    unitary: dict[str, bool] = field(default_factory=dict)

    @property
    def checked(self) -> int:
        return len(self.far_commutation) + len(self.braid_relations) + len(self.unitary)

    @property
    def failures(self) -> list[str]:
        return [
            name
            for table in (self.far_commutation, self.braid_relations, self.unitary)
            for name, ok in table.items()
            if not ok
        ]

    @property
    def passed(self) -> bool:
        return not self.failures


def verify_braid_presentation(mats: Sequence[ExactMatrix]) -> RelationReport:
    """Far commutation, braid relations and unitarity, all by exact equality."""
    rep = RelationReport()
    m = len(mats)
    for i in range(m):
        rep.unitary[f"R{i + 1} unitary"] = is_unitary(mats[i])
        for j in range(i + 2, m):
            rep.far_commutation[f"R{i + 1} R{j + 1} = R{j + 1} R{i + 1}"] = (
                matmul(mats[i], mats[j]) == matmul(mats[j], mats[i])
            )
        if i + 1 < m:
            a, b = mats[i], mats[i + 1]
            rep.braid_relations[f"R{i + 1} R{i + 2} R{i + 1} = R{i + 2} R{i + 1} R{i + 2}"] = (
                matmul(matmul(a, b), a) == matmul(matmul(b, a), b)
            )
    return rep


@dataclass
class HypothesisReport:
    squares_minus_one: bool
    far_commute: bool
    adjacent_anticommute: bool
    anti_hermitian: bool

    @property
    def passed(self) -> bool:
        return (
            self.squares_minus_one
            and self.far_commute
            and self.adjacent_anticommute
            and self.anti_hermitian
        )

    def to_json(self) -> dict:
        return {
            "T_i^2 = -I": self.squares_minus_one,
            "far commutation": self.far_commute,
            "adjacent anticommutation": self.adjacent_anticommute,
            "anti-Hermitian": self.anti_hermitian,
        }


def braid_hypotheses(
    k: int, variant: str = "unscaled", images: Optional[Sequence[PauliString]] = None
) -> HypothesisReport:
    """Conditions on T_i under which (I + T_i)/sqrt2 is a unitary braid representation."""
    if images is None:
        images = generator_images(BraidRepSpec(k, variant))
    mats = [t.to_matrix() for t in images]
    minus_i = -ExactMatrix.identity(mats[0].dim)
    squares = all(matmul(m, m) == minus_i for m in mats)
    far = all(
        ps_commutator_sign(images[i], images[j]) == 1
        for i in range(len(images))
        for j in range(i + 2, len(images))
    )
    adjacent = all(
        ps_mul(images[i], images[i + 1]) == ps_mul(images[i + 1], images[i]).times_phase(4)
        for i in range(len(images) - 1)
    )
    anti = all(dagger(m) == -m for m in mats)
    return HypothesisReport(squares, far, adjacent, anti)


def closed_form_identities(spec: BraidRepSpec) -> dict[str, bool]:
    """R_i against e^{pi/4 T_i} and against the explicit d / D / f matrices."""
    built = build_r_matrices(spec)
    ref = reference_r_matrices(spec)
    out = {}
    for i, (t, r, r_ref) in enumerate(zip(generator_images(spec), built, ref), start=1):
        series = quarter_exp(t.to_matrix())
        if spec.variant == "jones":
            series = series * JONES_PHASE
        out[f"R{i} = cos I + sin T{i}"] = series == r
        out[f"R{i} explicit form"] = r_ref == r
    return out


# -- words and states ---------------------------------------------------------


def word_matrix(spec: BraidRepSpec, word: BraidWord) -> ExactMatrix:
    if word.n != spec.strands:
        raise ValueError(f"word has {word.n} strands, representation has {spec.strands}")
    mats = build_r_matrices(spec)
    inv = [dagger(m) for m in mats]
    acc = ExactMatrix.identity(spec.dim)
    for x in word.letters:
        acc = matmul(acc, mats[x - 1] if x > 0 else inv[-x - 1])
    return acc


def apply_word(
    spec: BraidRepSpec, word: BraidWord, state: Sequence[CycScalar]
) -> list[CycScalar]:
    if len(state) != spec.dim:
        raise ValueError(f"state length {len(state)} != {spec.dim}")
    if word.n != spec.strands:
        raise ValueError(f"word has {word.n} strands, representation has {spec.strands}")
    mats = build_r_matrices(spec)
    inv = [dagger(m) for m in mats]
    vec = list(state)
    for x in reversed(word.letters):
        vec = (mats[x - 1] if x > 0 else inv[-x - 1]).apply(vec)
    return vec


def basis_state(dim: int, index: int = 0) -> list[CycScalar]:
    return [ONE if i == index else ZERO for i in range(dim)]


class GHZMatch(NamedTuple):
    phase: CycScalar
    a: int


def ghz_test(state: Sequence[CycScalar]) -> Optional[GHZMatch]:
    """Match ``state = c (|0..0> + zeta8^a |1..1>)/sqrt2`` with |c| = 1."""
    dim = len(state)
    if dim < 2 or dim & (dim - 1):
        raise ValueError("state length must be a power of two >= 2")
    first, last = state[0], state[-1]
    if any(not v.is_zero() for v in state[1:-1]) or first.is_zero():
        return None
    c = first * CycScalar((0, 1, 0, -1))  # times sqrt2
    if not c.is_unit_modulus():
        return None
    for a in range(8):
        if CycScalar.zeta(a) * first == last:
            return GHZMatch(c, a)
    return None


def ghz_search(spec: BraidRepSpec, max_len: int = 6) -> Optional[BraidWord]:
    """Shortest word taking |0..0> to a GHZ state up to phase (BFS over words)."""
    n = spec.strands
    mats = build_r_matrices(spec)
    steps = [(x, mats[x - 1]) for x in range(1, n)]
    steps += [(-x, dagger(mats[x - 1])) for x in range(1, n)]
    start = tuple(basis_state(spec.dim))
    seen = {start}
    frontier: deque = deque([(start, ())])
    while frontier:
        state, letters = frontier.popleft()
        if len(letters) >= max_len:
            continue
        for x, m in steps:
            # the new letter acts first, so it goes on the right of the word
            new = tuple(m.apply(state))
            if new in seen:
                continue
            seen.add(new)
            word = (x,) + letters
            if ghz_test(new) is not None:
                return BraidWord(n, word)
            frontier.append((new, word))
    return None


# -- finite images ------------------------------------------------------------


def _compose(a: tuple[int, ...], b: tuple[int, ...]) -> tuple[int, ...]:
    return tuple(a[b[x]] for x in range(len(a)))


def transposition(n: int, i: int) -> tuple[int, ...]:
    """(i, i+1) on 0..n-1, for 1-based i."""
    p = list(range(n))
    p[i - 1], p[i] = p[i], p[i - 1]
    return tuple(p)


class ImageTooLarge(RuntimeError):
    pass


@dataclass
class ImageRecord:
    spec: BraidRepSpec
    group: FiniteGroupRecord
    pure_image: FiniteGroupRecord
    consistency: bool
    square_subgroup: Optional[FiniteGroupRecord] = None

    @property
    def perm_label(self) -> list[tuple[int, ...]]:
        return self.group.labels

    @property
    def quotient_order(self) -> int:
        return self.group.order // self.pure_image.order

    @property
    def factorizes(self) -> bool:
        return self.group.order == self.pure_image.order * math.factorial(self.spec.strands)

    def kernel_of_permutation(self) -> set[ExactMatrix]:
        ident = tuple(range(self.spec.strands))
        return {g for g, lab in zip(self.group.elements, self.group.labels) if lab == ident}

    def pure_is_normal(self, sample: Optional[int] = None) -> bool:
        """Conjugates of pure-image elements by the generators stay inside."""
        gens = self.group.generator_elements
        invs = [dagger(g) for g in gens]
        elems = self.pure_image.elements
        if sample is not None:
            elems = elems[:: max(1, len(elems) // sample)]
        return all(
            matmul(matmul(g, h), gi) in self.pure_image
            for h in elems
            for g, gi in zip(gens, invs)
        )

    def to_json(self) -> dict:
        return {
            "order": self.group.order,
            "pure_order": self.pure_image.order,
            "quotient_order": self.quotient_order,
            "consistency": self.consistency,
            "histograms": {
                "image": {str(o): c for o, c in self.group.order_histogram.items()},
                "pure": {str(o): c for o, c in self.pure_image.order_histogram.items()},
            },
            "pure_center": self.pure_image.center_type,
            "pure_invariants": list(self.pure_image.invariants),
            "square_subgroup_order": (
                None if self.square_subgroup is None else self.square_subgroup.order
            ),
        }


def normal_closure(
    seeds: Sequence[ExactMatrix],
    conjugators: Sequence[ExactMatrix],
    identity: ExactMatrix,
    cap: Optional[int] = None,
) -> FiniteGroupRecord:
    gens = list(dict.fromkeys(seeds))
    invs = [dagger(c) for c in conjugators]
    while True:
        sub = closure(gens, matmul, identity, cap=cap)
        new = []
        for h in gens:
            for c, ci in zip(conjugators, invs):
                x = matmul(matmul(c, h), ci)
                if x not in sub and x not in new:
                    new.append(x)
        if not new:
            return sub
        gens += new


def image_group(
    spec: BraidRepSpec, cap: Optional[int] = None, *, allow_large: bool = False
) -> ImageRecord:
    """Finite image of the braid group and of the pure braid group.

    Every element carries the permutation of the word that first reached it;
    all Cayley edges are checked so ``consistency`` means the permutation is
    a function of the matrix.  The pure image is the normal closure of the
    squares R_i^2; ``square_subgroup`` is the group the squares generate
    on their own.
    """
    if spec.k > MAX_IMAGE_K and not allow_large:
        raise ImageTooLarge(
            f"image closure for k={spec.k} is gated; pass allow_large=True"
        )
    mats = build_r_matrices(spec)
    n = spec.strands
    ident = ExactMatrix.identity(spec.dim)
    group = closure(
        mats,
        matmul,
        ident,
        inverse=dagger,
        cap=cap,
        gen_labels=[transposition(n, i) for i in range(1, n)],
        label_mul=_compose,
        identity_label=tuple(range(n)),
    )
    squares = [matmul(m, m) for m in mats]
    pure = normal_closure(squares, mats, ident, cap=cap)
    # <R_i^2> alone, without conjugates; differs from the pure image for jones
    plain = closure(squares, matmul, ident, cap=cap)
    return ImageRecord(spec, group, pure, group.label_conflicts == 0, plain)


def all_permutations(n: int) -> set[tuple[int, ...]]:
    return set(permutations(range(n)))


def rescaled_images(k: int) -> list[PauliString]:
    """i times the rho images: generators of E^1_2k."""
    return rescale_by_i(generators_rho(k))
