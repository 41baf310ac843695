from fractions import Fraction as F

import pytest
from hypothesis import given, strategies as st

from youngsum.arith import Gaussian
from youngsum.errors import CapExceededError, DegenerateParameterError
from youngsum.measures import (
    KingmanT,
    PlancherelJack,
    ZMeasure,
    check_harmonicity,
    is_degenerate_z,
    level_distribution,
    phi,
    phi_plancherel,
    phi_z,
    psi_t,
    transition,
    transition_row,
)
from youngsum.partitions import EMPTY, Partition, partitions

I = Gaussian(0, 1)

MEASURES = (
    [PlancherelJack(t) for t in (F(1, 2), 1, 2)]
    + [ZMeasure(1, I), ZMeasure(1, Gaussian(F(3, 2), F(1, 2))), ZMeasure(F(1, 2), Gaussian(F(1, 3), 1))]
    + [KingmanT(t) for t in (F(1, 2), 1, 3)]
)


def all_upto(n):
    for m in range(n + 1):
        yield from partitions(m)


def test_plancherel_examples():
    for theta in (F(1, 2), F(3)):
        assert phi_plancherel(EMPTY, theta) == 1
        assert phi_plancherel((1,), theta) == 1
        assert phi_plancherel((1, 1), theta) == F(1, 2)


def test_z_examples():
    assert phi_z(EMPTY, 1, I) == 1
    for theta, z in [(1, I), (F(1, 2), Gaussian(F(1, 3), 1)), (2, Gaussian(F(1, 2)))]:
        assert phi_z((1,), theta, z) == 1
    assert phi_z((1, 1), 1, I) == F(1, 2)


def test_t_examples():
    for t in (F(1, 2), F(3)):
        assert psi_t(EMPTY, t) == 1
        assert psi_t((1,), t) == 1
        assert psi_t((2, 1), t) == t ** 2 / (t * (t + 1) * (t + 2))


def test_phi_dispatch_examples():
    t = F(5, 3)
    for m in MEASURES:
        assert phi(m, EMPTY) == 1
    assert phi(KingmanT(t), (2,)) == 1 / (t + 1)
    assert phi(PlancherelJack(1), (2, 1)) == F(1, 3)


def test_transition_examples():
    t = F(5, 3)
    for m in MEASURES:
        assert transition(m, EMPTY, (1,)) == 1
    assert transition(PlancherelJack(1), (1,), (2,)) == F(1, 2)
    assert transition(KingmanT(t), (1,), (1, 1)) == t / (t + 1)


def test_level_distribution_examples():
    t = F(2, 7)
    assert level_distribution(PlancherelJack(1), 0) == {EMPTY: 1}
    assert level_distribution(PlancherelJack(1), 2) == {Partition((2,)): F(1, 2), Partition((1, 1)): F(1, 2)}
    assert level_distribution(KingmanT(t), 2) == {Partition((2,)): 1 / (t + 1), Partition((1, 1)): t / (t + 1)}
    with pytest.raises(CapExceededError):
        level_distribution(PlancherelJack(1), 41)


def test_harmonicity_examples():
    assert check_harmonicity(KingmanT(F(4, 9)), (1,))
    assert check_harmonicity(ZMeasure(1, I), (1,))
    assert check_harmonicity(PlancherelJack(F(7, 2)), EMPTY)


@pytest.mark.parametrize("measure", MEASURES, ids=repr)
def test_harmonic_through_size_six(measure):
    for mu in all_upto(6):
        assert check_harmonicity(measure, mu)


@pytest.mark.parametrize("measure", MEASURES, ids=repr)
def test_levels_and_rows_normalized(measure):
    for n in range(7):
        dist = level_distribution(measure, n)
        assert sum(dist.values()) == 1
        assert all(w >= 0 for w in dist.values())
    for mu in all_upto(6):
        row = transition_row(measure, mu)
        assert sum(p for _, p in row) == 1
        assert all(0 <= p <= 1 for _, p in row)


def test_degenerate_z():
    assert is_degenerate_z(3, 1)
    assert is_degenerate_z(F(1, 2), F(1, 2))
    assert is_degenerate_z(F(5, 3), F(2, 3))
    assert not is_degenerate_z(F(1, 2), 1)
    assert not is_degenerate_z(F(1, 3), F(1, 2))
    assert not is_degenerate_z(I, 1)
    with pytest.raises(DegenerateParameterError):
        ZMeasure(1, 2)
    with pytest.raises(DegenerateParameterError):
        ZMeasure(F(1, 2), F(-3, 2))
    with pytest.raises(DegenerateParameterError):
        phi_z((1,), 1, 0)


@given(
    st.fractions(min_value=F(1, 6), max_value=5, max_denominator=6),
    st.fractions(min_value=-5, max_value=5, max_denominator=6),
    st.fractions(min_value=-5, max_value=5, max_denominator=6).filter(lambda x: x != 0),
    st.integers(0, 6),
)
def test_phi_z_real_nonnegative(theta, re, im, n):
    z = Gaussian(re, im)
    for lam in partitions(n):
        value = phi_z(lam, theta, z)
        assert isinstance(value, F) and value >= 0


@pytest.mark.parametrize("theta, offset", [(1, F(1, 2)), (2, F(1, 2)), (F(1, 2), F(1, 3))])
def test_plancherel_is_large_z_limit(theta, offset):
    for lam in all_upto(5):
        gaps = [abs(float(phi_z(lam, theta, F(r) + offset) - phi_plancherel(lam, theta))) for r in (10 ** 2, 10 ** 3, 10 ** 4)]
        if lam.size <= 1:
            assert gaps == [0.0, 0.0, 0.0]
        else:
            assert gaps[0] > gaps[1] > gaps[2]
