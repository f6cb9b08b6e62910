from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from orbitideals.minors import minor_sum_basis, principal_minor_sum
from orbitideals.orbit import (
    RationalMatrix,
    check_vanishing,
    jordan_matrix,
    kernel_dimensions,
    sample_orbit,
)
from orbitideals.partitions import Partition, partitions_of


def test_rational_matrix_basics():
    m = RationalMatrix([[1, 2], [3, 4]])
    assert m.rank() == 2
    det, inv = m.det_and_inverse()
    assert det == -2
    assert m * inv == RationalMatrix.identity(2)
    singular = RationalMatrix([[1, 2], [2, 4]])
    assert singular.rank() == 1
    assert singular.det_and_inverse() == (0, None)
    with pytest.raises(ValueError):
        RationalMatrix([[1, 2], [3]])


def test_scaled_integer_entries():
    m = RationalMatrix([[Fraction(1, 2), 1], [Fraction(1, 3), 0]])
    scaled = m.scaled_integer_entries()
    assert scaled == [[3, 6], [2, 0]]


def test_matrix_string_round_trip():
    m = RationalMatrix([[Fraction(1, 2), 1], [Fraction(-5, 3), 0]])
    assert RationalMatrix.from_strings(m.to_strings()) == m


def test_jordan_matrix_examples():
    j = jordan_matrix(Partition((2, 1)))
    assert j.entries[0][1] == 1
    assert sum(1 for row in j.entries for v in row if v != 0) == 1
    assert jordan_matrix(Partition((1, 1, 1))).is_zero()
    shift = jordan_matrix(Partition((4,)))
    assert all(shift.entries[k][k + 1] == 1 for k in range(3))
    assert shift.rank() == 3


def test_jordan_kernel_profile():
    mu = Partition((3, 2))
    conj = mu.conjugate()
    expected = [sum(conj.parts[:k]) for k in range(1, len(conj) + 1)]
    assert kernel_dimensions(jordan_matrix(mu), len(conj)) == expected


def test_sample_orbit_examples():
    s = sample_orbit(Partition((1, 1, 1)), 5)
    assert s.matrix.is_zero()

    s = sample_orbit(Partition((2, 1)), 3)
    assert s.matrix.rank() == 1
    assert (s.matrix * s.matrix).is_zero()

    s = sample_orbit(Partition((3,)), 11)
    assert [s.matrix.power(k).rank() for k in (1, 2, 3)] == [2, 1, 0]


def test_sample_orbit_deterministic():
    a = sample_orbit(Partition((2, 2)), 42)
    b = sample_orbit(Partition((2, 2)), 42)
    assert a.matrix == b.matrix
    c = sample_orbit(Partition((2, 2)), 43)
    assert a.matrix != c.matrix


@settings(max_examples=25, deadline=None)
@given(st.integers(min_value=0, max_value=10_000))
def test_sample_orbit_nilpotent(seed):
    mu = Partition((2, 1, 1))
    s = sample_orbit(mu, seed)
    assert s.matrix.power(mu.n).is_zero()


def test_check_vanishing_examples():
    r = check_vanishing(Partition((2, 1)), 1, 2, samples=10, seed=0)
    assert r.all_zero and r.witness is None

    r = check_vanishing(Partition((2, 1)), 1, 1, samples=10, seed=0)
    assert not r.all_zero and r.witness is not None
    idx, sample_seed = r.witness
    point = sample_orbit(Partition((2, 1)), sample_seed).matrix
    assert minor_sum_basis(3, 1, 1)[idx].evaluate(point) != 0

    for mu in (Partition((3, 1)), Partition((2, 2)), Partition((4,))):
        for p in (1, 2, 4):
            assert check_vanishing(mu, 0, p, samples=5, seed=1).all_zero


def test_check_vanishing_validates_depth():
    with pytest.raises(ValueError):
        check_vanishing(Partition((2, 1)), 2, 2, samples=2, seed=0)  # 2 > min(2,1)
    with pytest.raises(ValueError):
        check_vanishing(Partition((2, 1)), 1, 2, samples=0, seed=0)


def test_invariants_vanish_on_all_small_orbits():
    for n in range(1, 5):
        for mu in partitions_of(n):
            point = sample_orbit(mu, 9).matrix.scaled_integer_entries()
            for p in range(1, n + 1):
                assert principal_minor_sum(n, p).evaluate(point) == 0
