import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from jackmoments.errors import ParameterError
from jackmoments.jackspecial import gen_pochhammer, hook_products, jack_at_ones
from jackmoments.partitions import EMPTY, Partition, enumerate_partitions


def test_pochhammer_examples():
    assert gen_pochhammer(0.37, EMPTY, 1.3) == 1
    for alpha in (0.3, 1.0, 5.0):
        assert gen_pochhammer(3, Partition.of(2), alpha) == 12
    assert gen_pochhammer(-1, Partition.of(2), 0.8) == 0


def test_pochhammer_exact_zero_from_row_shift():
    # second row factor is (a - 1/alpha)_1 with a = 1/alpha
    assert gen_pochhammer(0.5, Partition.of(1, 1), 2.0) == 0


@pytest.mark.parametrize("kappa", [(1,), (2, 1), (3, 1, 1), (2, 2)])
@pytest.mark.parametrize("alpha", [0.4, 1.0, 2.5])
def test_pochhammer_is_polynomial_of_degree_weight(kappa, alpha):
    k = Partition(kappa)
    xs = np.linspace(-2.0, 2.0, k.weight + 2)
    vals = np.array([gen_pochhammer(x, k, alpha) for x in xs])
    d = np.diff(vals, n=k.weight + 1)
    assert abs(d[0]) < 1e-9 * max(1.0, np.abs(vals).max())
    assert abs(np.diff(vals[:-1], n=k.weight)[0]) > 1e-6


def test_hook_examples():
    hp = hook_products(EMPTY, 1.7, 3)
    assert (hp.b, hp.d_prime, hp.h) == (1, 1, 1)
    hp = hook_products(Partition.of(1), 0.6, 5)
    assert (hp.b, hp.d_prime, hp.h) == (5, 0.6, 1)
    hp = hook_products(Partition.of(2), 1.0, 1)
    assert (hp.b, hp.d_prime, hp.h) == (2, 2, 2)


def test_jack_examples():
    for alpha in (0.5, 1.0, 3.0):
        for k in range(6):
            assert jack_at_ones(Partition.of(k), alpha, 1) == pytest.approx(1, rel=1e-14)
    assert jack_at_ones(Partition.of(1, 1), 1.0, 1) == 0
    tot = sum(jack_at_ones(k, 0.7, 2) for k in enumerate_partitions(3))
    assert tot == pytest.approx(8, rel=1e-14)


def test_jack_rejects_too_many_rows():
    with pytest.raises(ParameterError):
        jack_at_ones(Partition.of(1, 1, 1), 1.0, 1)


@pytest.mark.parametrize("alpha", [0.25, 0.5, 1, 2, 4])
def test_normalisation_sum(alpha):
    for p in range(1, 9):
        for N in range(1, 6):
            tot = math.fsum(jack_at_ones(k, alpha, N) for k in enumerate_partitions(p, max_length=N))
            assert abs(tot - N**p) <= 1e-12 * N**p


def test_zonal_value_alpha_two():
    # zonal polynomials: C_(2) = x1^2 + x2^2 + (2/3) x1 x2, C_(1,1) = (4/3) x1 x2
    assert jack_at_ones(Partition.of(2), 2.0, 2) == pytest.approx(8 / 3, rel=1e-14)
    assert jack_at_ones(Partition.of(1, 1), 2.0, 2) == pytest.approx(4 / 3, rel=1e-14)


@settings(max_examples=100, deadline=None)
@given(st.integers(1, 10), st.integers(1, 6), st.floats(0.1, 8.0))
def test_jack_positive_when_rows_fit(p, n, alpha):
    for k in enumerate_partitions(p, max_length=n):
        assert jack_at_ones(k, alpha, n) > 0
