"""Lucas sequence kernel: fast doubling, periods, the p^2 dichotomy."""

import random

import pytest
from hypothesis import given, settings, strategies as st

from wallsunsun.intmath import jacobi
from wallsunsun.lucas import (
    companion_order,
    lucas_u,
    period_p_squared,
    pisano_period,
)

from oracles import matrix_order, sieve_primes, state_period, u_term

RNG_SEED = 0x5EED
PRIMES_200 = sieve_primes(200)
PRIMES_50 = sieve_primes(50)


# ---------------------------------------------------------------- lucas_u


def test_lucas_u_small_exhaustive_against_iteration():
    for k in (1, 2, 3, 5):
        for m in (2, 5, 97):
            for n in range(0, 200):
                assert lucas_u(k, n, m) == u_term(k, n, m), (k, n, m)


def test_fast_doubling_agrees_with_iteration_on_stated_grid():
    """Walk the recurrence once per (k, m) and compare every n <= 10^4."""
    for k in range(1, 11):
        for m in (97, 10**4):
            a, b = 0, 1  # (U_n, U_{n+1}) mod m
            for n in range(0, 10**4 + 1):
                assert lucas_u(k, n, m) == a, (k, n, m)
                a, b = b, (k * b + a) % m


@given(
    k=st.integers(min_value=1, max_value=10**6),
    n=st.integers(min_value=0, max_value=10**9),
    m=st.integers(min_value=2, max_value=10**9),
)
def test_lucas_u_index_addition_identity(k, n, m):
    # U_{2n+1} = U_{n+1}^2 + U_n^2 specializes the addition law; an
    # independent consistency check at indices far beyond iteration range
    un = lucas_u(k, n, m)
    un1 = lucas_u(k, n + 1, m)
    assert lucas_u(k, 2 * n + 1, m) == (un1 * un1 + un * un) % m


@given(
    k=st.integers(min_value=1, max_value=1000),
    a=st.integers(min_value=1, max_value=10**6),
    b=st.integers(min_value=1, max_value=10**6),
    m=st.integers(min_value=2, max_value=10**6),
)
def test_lucas_u_general_addition_law(k, a, b, m):
    lhs = lucas_u(k, a + b, m)
    rhs = lucas_u(k, a + 1, m) * lucas_u(k, b, m) + lucas_u(k, a, m) * lucas_u(k, b - 1, m)
    assert lhs == rhs % m


def test_lucas_u_validation():
    with pytest.raises(ValueError):
        lucas_u(0, 3, 5)
    with pytest.raises(ValueError):
        lucas_u(1, -1, 5)
    with pytest.raises(ValueError):
        lucas_u(1, 3, 1)


# ------------------------------------------------------------- pisano_period


@pytest.mark.parametrize(
    "k,m,expected",
    [
        (1, 2, 3),
        (1, 4, 6),
        (1, 5, 20),
        (1, 7, 16),
        (1, 10, 60),
        (1, 25, 100),
        (1, 169, 364),
        (2, 13, 28),
        (2, 169, 28),   # 13 is a 2-Wall-Sun-Sun prime
        (9, 3, 2),
        (9, 9, 2),
    ],
)
def test_pisano_period_known_values(k, m, expected):
    assert pisano_period(k, m) == expected


def test_period_base_cases_odd_k():
    for k in range(1, 20, 2):
        assert pisano_period(k, 2) == 3
        assert pisano_period(k, 4) == 6


def test_pisano_period_matches_state_walk_oracle():
    rng = random.Random(RNG_SEED)
    cells = [(k, m) for k in range(1, 31) for m in range(2, 61)]
    cells += [(rng.randrange(1, 31), rng.randrange(61, 501)) for _ in range(120)]
    for k, m in cells:
        assert pisano_period(k, m) == state_period(k, m), (k, m)


def test_pisano_period_divides_composite_structure():
    # pi(lcm is not required, but pi(d) | pi(m) whenever d | m
    for k in (1, 2, 3, 7):
        for m in (6, 10, 12, 50, 100):
            for d in range(2, m):
                if m % d == 0:
                    assert pisano_period(k, m) % pisano_period(k, d) == 0


def test_pisano_period_validation():
    with pytest.raises(ValueError):
        pisano_period(1, 1)
    with pytest.raises(ValueError):
        pisano_period(-1, 5)


# ------------------------------------------------------------ companion_order


def test_companion_order_equals_pisano_period_sampled_grid():
    """Matrix order and state period must agree; exhaustive core plus a
    seeded sample of the full k <= 30, m <= 500 contract grid."""
    rng = random.Random(RNG_SEED + 1)
    cells = [(k, m) for k in range(1, 31) for m in range(2, 41)]
    cells += [(rng.randrange(1, 31), rng.randrange(41, 501)) for _ in range(60)]
    for k, m in cells:
        assert companion_order(k, m) == pisano_period(k, m), (k, m)


def test_companion_order_defined_at_m_2():
    for k in range(1, 31):
        assert companion_order(k, 2) == pisano_period(k, 2)


def test_companion_order_against_independent_matrix_oracle():
    for k in (1, 2, 3, 9):
        for m in (3, 5, 8, 13, 100):
            assert companion_order(k, m) == matrix_order(k, m)


# --------------------------------------------------------- period_p_squared


def test_period_p_squared_dichotomy_and_brute_force():
    for k in range(1, 31):
        for p in PRIMES_50:
            got = period_p_squared(k, p)
            pi_p = pisano_period(k, p)
            assert got in (pi_p, p * pi_p), (k, p)
            assert got == state_period(k, p * p), (k, p)


def test_period_p_squared_sampled_to_200():
    rng = random.Random(RNG_SEED + 2)
    for _ in range(40):
        k = rng.randrange(1, 31)
        p = rng.choice(PRIMES_200)
        assert period_p_squared(k, p) == state_period(k, p * p), (k, p)


@pytest.mark.parametrize(
    "k,p,expected",
    [
        (1, 5, 100),    # inflates
        (2, 13, 28),    # stays, Wall-Sun-Sun case
        (2, 31, 30),
        (9, 3, 2),
        (1, 2, 6),
    ],
)
def test_period_p_squared_known_values(k, p, expected):
    assert period_p_squared(k, p) == expected


def test_period_p_squared_rejects_composites():
    for p in (1, 4, 6, 100):
        with pytest.raises(ValueError):
            period_p_squared(1, p)


# -------------------------------------------------------------- period laws


def test_period_divides_p_minus_1_when_delta_is_1():
    for k in range(1, 31):
        for p in PRIMES_200:
            if p < 3 or jacobi(k * k + 4, p) != 1:
                continue
            assert (p - 1) % pisano_period(k, p) == 0, (k, p)


def test_twice_p_plus_1_divisible_when_delta_is_minus_1():
    for k in range(1, 31):
        for p in PRIMES_200:
            if p < 3 or jacobi(k * k + 4, p) != -1:
                continue
            assert 2 * (p + 1) % pisano_period(k, p) == 0, (k, p)
