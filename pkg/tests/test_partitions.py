from fractions import Fraction as F

import pytest
from hypothesis import given, strategies as st

from youngsum.errors import BoxOutsideDiagramError, CapExceededError, ParseError
from youngsum.partitions import (
    EMPTY,
    Box,
    Partition,
    addable_boxes,
    arm,
    big_h_prime_theta,
    big_h_prime_theta_alt,
    big_h_theta,
    big_h_theta_alt,
    conjugate,
    content_theta,
    dim_kingman,
    dim_theta_hook,
    enumerate_standard_tableaux,
    format_partition,
    hook_prime_theta,
    hook_theta,
    leg,
    parse_box,
    parse_partition,
    partitions,
    removable_boxes,
)

THETAS = [F(1, 3), F(1, 2), F(1), F(2), F(5, 2)]


def all_upto(n):
    for m in range(n + 1):
        yield from partitions(m)


@st.composite
def diagrams(draw, max_size=10):
    n = draw(st.integers(0, max_size))
    return draw(st.sampled_from(list(partitions(n))))


def test_partition_canonical_form():
    assert Partition((3, 1, 0, 0)) == Partition((3, 1))
    assert Partition(()) == EMPTY and EMPTY.size == 0
    with pytest.raises(ValueError):
        Partition((1, 2))


def test_partition_counts():
    assert [len(list(partitions(n))) for n in range(11)] == [1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42]


def test_conjugate_examples():
    assert conjugate(EMPTY) == EMPTY
    assert conjugate(Partition((5,))) == Partition((1,) * 5)
    assert conjugate(Partition((4, 3, 1))) == Partition((3, 2, 2, 1))


def test_arm_leg_examples():
    assert (arm((1,), (1, 1)), leg((1,), (1, 1))) == (0, 0)
    assert (arm((4, 3, 1), (1, 2)), leg((4, 3, 1), (1, 2))) == (2, 1)
    assert (arm((2, 1), (1, 1)), leg((2, 1), (1, 1))) == (1, 1)
    with pytest.raises(BoxOutsideDiagramError):
        arm((2, 1), (2, 2))
    with pytest.raises(BoxOutsideDiagramError):
        leg((2, 1), (3, 1))


def test_content_examples():
    assert content_theta((1, 1), F(7, 3)) == 0
    assert content_theta((2, 1), 1) == -1
    assert content_theta((1, 3), F(1, 2)) == 2


def test_corner_examples():
    assert addable_boxes(EMPTY) == [Box(1, 1)]
    assert addable_boxes(Partition((2, 1))) == [Box(1, 3), Box(2, 2), Box(3, 1)]
    assert removable_boxes(Partition((2, 2))) == [Box(2, 2)]


@pytest.mark.parametrize("theta", THETAS)
def test_hook_examples(theta):
    assert hook_theta((1,), (1, 1), theta) == 1
    assert hook_prime_theta((1,), (1, 1), theta) == theta
    assert hook_theta((2, 1), (1, 1), theta) == theta + 2
    assert hook_prime_theta((1, 1), (1, 1), theta) == 2 * theta
    assert big_h_theta(EMPTY, theta) == big_h_prime_theta(EMPTY, theta) == 1
    assert big_h_theta((1, 1), theta) == theta + 1
    assert big_h_prime_theta((1, 1), theta) == 2 * theta ** 2
    assert big_h_theta_alt((1, 1), theta) == 1 + theta
    assert big_h_prime_theta_alt((1, 1), theta) == 2 * theta ** 2
    assert big_h_theta_alt(EMPTY, theta) == 1
    assert dim_theta_hook((2, 1), theta) == 6 / (theta + 2)
    assert dim_theta_hook((1, 1), theta) == 2 / (theta + 1)
    assert dim_theta_hook((1,), theta) == 1


def test_hooks_at_one():
    assert big_h_theta((2, 1), 1) == big_h_prime_theta((2, 1), 1) == 3


def test_dim_kingman_examples():
    assert dim_kingman((6,)) == 1
    assert dim_kingman((2, 1)) == 3
    assert dim_kingman((2, 2)) == 6


def test_tableau_examples():
    assert len(enumerate_standard_tableaux((1,))) == 1
    assert len(enumerate_standard_tableaux((2, 1))) == 2
    assert len(enumerate_standard_tableaux((2, 2))) == 2
    with pytest.raises(CapExceededError):
        enumerate_standard_tableaux((6, 5))


def test_tableau_structure():
    lam = Partition((3, 2, 1))
    for tab in enumerate_standard_tableaux(lam):
        assert sorted(tab.entries.values()) == list(range(1, 7))
        for (i, j), v in tab.entries.items():
            if (i, j + 1) in tab.entries:
                assert tab.entries[(i, j + 1)] > v
            if (i + 1, j) in tab.entries:
                assert tab.entries[(i + 1, j)] > v
        path = tab.path()
        assert path[0] == EMPTY and path[-1] == lam
        assert [p.size for p in path] == list(range(7))


@given(diagrams())
def test_conjugate_involution(lam):
    assert conjugate(conjugate(lam)) == lam
    assert conjugate(lam).size == lam.size


@given(diagrams())
def test_one_more_addable_than_removable(lam):
    assert len(addable_boxes(lam)) == len(removable_boxes(lam)) + 1
    for b in addable_boxes(lam):
        assert lam.add_box(b).remove_box(b) == lam


@pytest.mark.parametrize("theta", THETAS)
def test_alternative_hook_products(theta):
    for lam in all_upto(8):
        assert big_h_theta(lam, theta) == big_h_theta_alt(lam, theta)
        assert big_h_prime_theta(lam, theta) == big_h_prime_theta_alt(lam, theta)


def test_hook_products_coincide_at_one():
    for lam in all_upto(8):
        assert big_h_theta(lam, 1) == big_h_prime_theta(lam, 1)


def test_hook_formula_counts_tableaux():
    for lam in all_upto(8):
        assert dim_theta_hook(lam, 1) == len(enumerate_standard_tableaux(lam))


def test_parse_partition():
    assert parse_partition("4,3,1") == Partition((4, 3, 1))
    assert parse_partition("-") == EMPTY
    assert parse_partition("") == EMPTY
    with pytest.raises(ParseError) as err:
        parse_partition("3,4")
    assert "position 2" in str(err.value)
    for bad in ("3,,1", "a", "2,0", "2,-1"):
        with pytest.raises(ParseError):
            parse_partition(bad)


def test_parse_box():
    assert parse_box("2,3") == Box(2, 3)
    for bad in ("2", "0,1", "1,2,3", "x,1"):
        with pytest.raises(ParseError):
            parse_box(bad)


@given(diagrams())
def test_partition_round_trip(lam):
    assert parse_partition(format_partition(lam)) == lam
