"""Acceptance criteria 1-13 and the property suites, one recorded line each.

The per-criterion lines are printed in the "acceptance criteria" section of
the pytest terminal summary.
"""

import time

import pytest

from errorgroups.braid import (
    VARIANTS,
    BraidRepSpec,
    apply_word,
    basis_state,
    build_r_matrices,
    closed_form_identities,
    ghz_search,
    ghz_test,
    image_group,
    braid_hypotheses,
    verify_braid_presentation,
)
from errorgroups.cli import cmd_nice_basis
from errorgroups.egroup import EElement, e_mul, elements, enumerate_group, rep_kernel
from errorgroups.group_engine.classify import (
    classify_e,
    decompose_e,
    order4_formula,
    predicted_label,
)
from errorgroups.group_engine.compare import (
    compare_pauli,
    dq_product_group,
    pauli_group,
    comparison_cells,
)
from errorgroups.group_engine.finite import cyclic_subgroups_of_order
from errorgroups.group_engine.nice_basis import (
    basis_equiv_mod_phase,
    nice_error_basis_check,
    pauli_basis_matrices,
    representation,
)
from errorgroups.pauli import generators_lambda, generators_rho, pauli_from_e
from test_cyclotomic import test_complex_embedding_is_a_homomorphism as _embedding
from test_cyclotomic import test_ring_axioms as _ring_axioms
from test_egroup import test_normal_form_matches_word_reduction as _word_reduction
from test_egroup import test_representation_is_a_homomorphism as _homomorphism
from test_group_engine import test_closure_independent_of_generator_order as _gen_order
from test_group_engine import test_e_group_closure_matches_enumeration as _e_gen_order
from test_pauli import test_matrix_matches_kron_oracle as _kron_oracle
from test_pauli import test_product_matches_matrix_product as _pauli_products

D_HISTOGRAM = {1: 1, 2: 5, 4: 2}
Q_HISTOGRAM = {1: 1, 2: 1, 4: 6}


def within(start: float, seconds: float) -> None:
    elapsed = time.perf_counter() - start
    assert elapsed < seconds, f"took {elapsed:.1f}s, budget {seconds}s"


def test_criterion_01_group_orders(criterion):
    c = criterion(1, "|E^nu_n| = 2^(n+1) for n = 1..10, both nu")
    for n in range(1, 11):
        for nu in (1, -1):
            assert enumerate_group(n, nu).order == 2 ** (n + 1)
    within(c.start, 1)


def test_criterion_02_element_order_census(criterion):
    c = criterion(2, "E^-1_4: 12 elements with g^2 = 1, 20 of order 4; P_2: 20 and 12")

    def census(g):
        return g.count_of_order(1) + g.count_of_order(2), g.count_of_order(4)

    assert census(enumerate_group(4, -1)) == (12, 20)
    assert census(pauli_group(2)) == (20, 12)
    assert 12 == 2**4 - (-2) ** 2 and 20 == 2**4 + (-2) ** 2
    within(c.start, 1)


def test_criterion_03_order4_formula(criterion):
    c = criterion(3, "cyclic order-4 subgroup counts of DQ^(s-1), Q^s for s = 1..3")
    for s in (1, 2, 3):
        n, m = order4_formula(s)
        assert (n, m) == ((4**s + (-2) ** s) // 2, (4**s - (-2) ** s) // 2)
        dq = dq_product_group("D" + "Q" * (s - 1))
        qq = dq_product_group("Q" * s)
        assert len(cyclic_subgroups_of_order(dq, 4)) == n
        assert len(cyclic_subgroups_of_order(qq, 4)) == m
        assert dq.count_of_order(4) == 2 * n
        assert qq.count_of_order(4) == 2 * m
    within(c.start, 10)


def test_criterion_04_classification(criterion):
    c = criterion(4, "invariant triple matches the predicted label, n = 1..10, both nu")
    categories = set()
    for n in range(1, 11):
        for nu in (1, -1):
            rec = classify_e(n, nu, strict=False)
            assert rec.agrees, (n, nu, rec.observed, rec.predicted)
            categories.add((rec.category, rec.center_type))
    assert categories == {
        ("extraspecial", "Z2"),
        ("almost", "Z4"),
        ("nearly", "Z2xZ2"),
    }
    within(c.start, 5)


def test_criterion_05_decomposition(criterion):
    c = criterion(5, "every central-product step validated, n = 2..10, both nu")
    for j in range(1, 6):
        odd = EElement.word(2 * j, -1, range(1, 2 * j, 2))
        assert e_mul(odd, odd).s == j % 2  # (e1 e3 ... e_{2j-1})^2 = (-1)^j
    for n in range(2, 11):
        for nu in (1, -1):
            dec = decompose_e(n, nu, strict=False)
            assert dec.passed, (n, nu)
            for step in dec.steps:
                assert step.checks["commute"]
                assert step.checks["intersection_central"]
                assert step.checks["covers"]
            assert dec.label.predicted() == predicted_label(n, nu).predicted()
    within(c.start, 10)


def test_criterion_06_table1(criterion):
    c = criterion(6, "all 24 comparison-table cells, and D^2 = Q^2")
    cells = comparison_cells()
    assert len(cells) == 24
    assert [cell.name for cell in cells if not cell.passed] == []
    assert dq_product_group("DD").invariants == dq_product_group("QQ").invariants
    within(c.start, 5)


def test_criterion_07_nice_error_bases(criterion):
    c = criterion(7, "nice error basis conditions for rho (k = 1..3), lambda1/2 (k = 1..2)")
    cases = [(2 * k, "rho") for k in (1, 2, 3)]
    cases += [(2 * k + 1, kind) for k in (1, 2) for kind in ("lambda1", "lambda2")]
    for n, kind in cases:
        rep = nice_error_basis_check(n, -1, representation(n, -1, kind))
        assert rep.identity_ok and rep.traceless_ok and rep.projective_ok, (n, kind)
        assert rep.omega_cyclic
        assert {w.zeta_exponent() for w in rep.omega_values} <= {0, 2, 4, 6}
        assert rep.degree == 2 ** (n // 2) and rep.degree_ok
    within(c.start, 10)


def test_criterion_08_basis_equivalence(criterion):
    c = criterion(8, "rho basis bijects onto the Pauli basis up to unit phases, k = 1..3")
    for k in (1, 2, 3):
        match = basis_equiv_mod_phase(
            nice_error_basis_check(2 * k, -1).basis, pauli_basis_matrices(k)
        )
        assert match.matched, k
        assert len({j for _, j, _ in match.pairs}) == 4**k
        assert all(phase.is_unit_modulus() for _, _, phase in match.pairs)
    within(c.start, 5)


def test_criterion_09_pauli_recovered_from_e(criterion):
    c = criterion(9, "Y_i, Z_i, X_i recovered from rho(e_1..e_2k), k = 1..4")
    for k in (1, 2, 3, 4):
        checks = pauli_from_e(k)
        assert len(checks) == 3 * k
        assert all(checks.values()), checks
    within(c.start, 1)


def test_criterion_10_braid_presentation(criterion):
    c = criterion(10, "braid relations, unitarity and closed forms, k = 1..3, four variants")
    for k in (1, 2, 3):
        for variant in VARIANTS:
            spec = BraidRepSpec(k, variant)
            assert braid_hypotheses(k, variant).passed
            rel = verify_braid_presentation(build_r_matrices(spec))
            assert rel.passed, (k, variant, rel.failures)
            assert all(closed_form_identities(spec).values()), (k, variant)
    within(c.start, 30)


def test_criterion_11_finite_images(criterion):
    c = criterion(11, "finite images G, H of the braid and pure braid groups")
    problems = []
    g3 = image_group(BraidRepSpec(1))
    if (g3.group.order, g3.pure_image.order) != (48, 8):
        problems.append(f"k=1: |G|, |H| = {g3.group.order}, {g3.pure_image.order}")
    if g3.pure_image.order_histogram != Q_HISTOGRAM:
        problems.append("k=1: H histogram is not that of Q")
    g5 = image_group(BraidRepSpec(2))
    if g5.group.order != 3840 or g5.pure_image.invariants != enumerate_group(4, -1).invariants:
        problems.append(f"k=2: |G| = {g5.group.order}, H = {g5.pure_image.invariants}")
    jones = image_group(BraidRepSpec(1, "jones"))
    if jones.pure_image.order_histogram != D_HISTOGRAM:
        problems.append(
            "k=1 jones: pure image histogram "
            f"{jones.pure_image.order_histogram} (invariants {jones.pure_image.invariants}) "
            f"is not D {D_HISTOGRAM}; the squares alone give "
            f"{jones.square_subgroup.order_histogram}"
        )
    for name, im in (("k=1", g3), ("k=2", g5), ("k=1 jones", jones)):
        if not im.consistency:
            problems.append(f"{name}: a matrix received two permutations")
        if not im.factorizes:
            problems.append(f"{name}: |G| != |H| n!")
    within(c.start, 60)
    assert not problems, "; ".join(problems)


def test_criterion_12_faithfulness_audit(criterion):
    c = criterion(12, "rho faithful for n <= 8; lambda kernel on E^-1_3 flagged")
    for k in (1, 2, 3, 4):
        assert rep_kernel(2 * k, -1, generators_rho(k)) == []
    kernel = rep_kernel(3, -1, generators_lambda(1, 1))
    assert kernel and all(g in elements(3, -1) for g in kernel)
    report = cmd_nice_basis(3, -1, "lambda1", cap=10**7)
    faithful = next(cl for cl in report.claims if cl.id == "faithful")
    assert faithful.status == "flagged"
    assert report.passed
    within(c.start, 5)


def test_criterion_13_ghz_witness(criterion):
    c = criterion(13, "braid word of length <= 6 maps |0...0> to a GHZ state, k = 1, 2")
    for k in (1, 2):
        spec = BraidRepSpec(k)
        word = ghz_search(spec, 6)
        assert word is not None and len(word) <= 6
        assert ghz_test(apply_word(spec, word, basis_state(spec.dim))) is not None
    within(c.start, 60)


@pytest.mark.parametrize(
    "key, text, checks",
    [
        ("1 cyclotomic", "ring axioms and complex embedding", (_ring_axioms, _embedding)),
        ("2 pauli", "Pauli strings agree with matrix oracles", (_kron_oracle, _pauli_products)),
        ("3 e_group", "normal forms and the rho homomorphism", (_word_reduction, _homomorphism)),
        ("4 closure", "closure is independent of generator order", (_gen_order, _e_gen_order)),
    ],
)
def test_property_suite(criterion, key, text, checks):
    criterion(key, text)
    for check in checks:
        check()
