import pytest
from hypothesis import given
from hypothesis import strategies as st

from errorgroups.egroup import (
    EElement,
    NotARepresentation,
    center_of,
    e_commutes,
    e_mul,
    e_order,
    elements,
    enumerate_group,
    image_of,
    relation_failures,
    rep_kernel,
    to_json,
)
from errorgroups.group_engine.nice_basis import representation
from errorgroups.pauli import PauliString, generators_lambda, generators_rho, ps_mul


def reduce_word(n: int, nu: int, word: list[int]) -> tuple[int, int]:
    """Bubble-sort a generator word using only the defining relations.

    Returns (sign bit, exponent mask).  Swapping adjacent-index generators
    costs a sign; e_i e_i collapses to nu.
    """
    w, s = list(word), 0
    changed = True
    while changed:
        changed = False
        for j in range(len(w) - 1):
            a, b = w[j], w[j + 1]
            if a == b:
                if nu == -1:
                    s ^= 1
                del w[j : j + 2]
                changed = True
                break
            if a > b:
                if a - b == 1:
                    s ^= 1
                w[j], w[j + 1] = b, a
                changed = True
                break
    mask = 0
    for i in w:
        mask |= 1 << (i - 1)
    return s, mask


words = st.integers(1, 6).flatmap(
    lambda n: st.tuples(
        st.just(n),
        st.sampled_from([1, -1]),
        st.lists(st.integers(1, n), max_size=12),
    )
)


@pytest.mark.parametrize("n", range(1, 11))
@pytest.mark.parametrize("nu", [1, -1])
def test_order(n, nu):
    assert enumerate_group(n, nu).order == 2 ** (n + 1)


def test_generator_relations():
    for nu in (1, -1):
        e = [EElement.gen(4, nu, i) for i in range(1, 5)]
        scalar = EElement(4, nu, 0 if nu == 1 else 1, 0)
        assert all(e_mul(g, g) == scalar for g in e)
        assert e_mul(e[0], e[1]) == -e_mul(e[1], e[0])
        assert e_mul(e[0], e[2]) == e_mul(e[2], e[0])


def test_str_and_support():
    g = EElement.word(4, -1, [3, 1], sign=-1)
    assert g.support == [1, 3]
    assert str(g) == "-e1e3"
    assert str(EElement.identity(2, 1)) == "1"


def test_invalid_elements():
    with pytest.raises(ValueError):
        EElement(2, 0, 0, 0)
    with pytest.raises(ValueError):
        EElement(2, 1, 0, 4)
    with pytest.raises(ValueError):
        EElement.gen(2, 1, 3)
    with pytest.raises(ValueError):
        e_mul(EElement.identity(2, 1), EElement.identity(2, -1))
    with pytest.raises(ValueError):
        enumerate_group(21, 1)


def test_e_minus_one_four_listed_elements():
    # involutions (with the identity) and order-4 elements of E^-1_4
    inv = {(), (1, 3), (1, 4), (2, 4), (1, 2, 4), (1, 3, 4)}
    four = {(1,), (2,), (3,), (4,), (1, 2), (2, 3), (3, 4), (1, 2, 3), (2, 3, 4), (1, 2, 3, 4)}
    for g in elements(4, -1):
        key = tuple(g.support)
        assert (key in inv) == (e_order(g) <= 2)
        assert (key in four) == (e_order(g) == 4)


def test_center_small_cases():
    assert center_of(1, -1)[1] == "Z4"
    assert center_of(2, -1)[1] == "Z2"
    assert center_of(3, 1)[1] == "Z2xZ2"
    assert center_of(3, -1)[1] == "Z2xZ2"
    assert center_of(5, -1)[1] == "Z4"


def test_to_json():
    d = to_json(2, -1)
    assert d == {"n": 2, "nu": -1, "order": 8, "order_histogram": {"1": 1, "2": 1, "4": 6},
                 "center_type": "Z2"}


@given(words)
def test_normal_form_matches_word_reduction(case):
    n, nu, word = case
    g = EElement.word(n, nu, word)
    assert (g.s, g.a) == reduce_word(n, nu, word)


@given(words, words)
def test_commutation_test_matches_products(c1, c2):
    n, nu, w1 = c1
    g = EElement.word(n, nu, w1)
    h = EElement.word(n, nu, [i for i in c2[2] if i <= n])
    assert e_commutes(g, h) == (e_mul(g, h) == e_mul(h, g))


@given(st.integers(1, 4), st.sampled_from([1, -1]), st.data())
def test_representation_is_a_homomorphism(k, nu, data):
    n = 2 * k
    images = representation(n, nu, "rho")
    pool = elements(n, nu)
    g = data.draw(st.sampled_from(pool))
    h = data.draw(st.sampled_from(pool))
    lhs = image_of(e_mul(g, h), images)
    assert lhs == ps_mul(image_of(g, images), image_of(h, images))
    assert lhs.to_matrix() == image_of(g, images).to_matrix() @ image_of(h, images).to_matrix()


@pytest.mark.parametrize("k", [1, 2, 3, 4])
def test_rho_is_faithful(k):
    assert rep_kernel(2 * k, -1, generators_rho(k)) == []


@pytest.mark.parametrize("branch, element", [(1, "-e1e3"), (2, "e1e3")])
def test_lambda_on_three_generators_has_a_kernel(branch, element):
    # (iZ)(iZ) = -I and (iZ)(-iZ) = I
    kernel = rep_kernel(3, -1, generators_lambda(1, branch))
    assert [str(g) for g in kernel] == [element]


def test_lambda_k2_is_faithful():
    assert rep_kernel(5, -1, generators_lambda(2, 1)) == []


def test_relation_failures_are_named():
    bad = [PauliString.single(1, 1, "X"), PauliString.single(1, 1, "Z")]
    assert relation_failures(-1, bad) == ["e1^2 = -1", "e2^2 = -1"]
    with pytest.raises(NotARepresentation):
        rep_kernel(2, -1, bad)
    with pytest.raises(ValueError):
        rep_kernel(3, -1, generators_rho(1))
