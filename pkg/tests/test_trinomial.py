"""Trinomial discriminants and the five-case prime-index criterion."""

import random

import pytest
from hypothesis import given, settings, strategies as st
from sympy import Poly, symbols, ZZ
from sympy.polys.numberfields.basis import round_two

from wallsunsun.errors import HypothesisError
from wallsunsun.intmath import factorize, is_prime
from wallsunsun.trinomial import (
    IndexVerdict,
    MonogenicityReport,
    Trinomial,
    discriminant_resultant,
    fp_discriminant,
    gh_coprimality,
    index_check_prime,
    index_d_value,
    is_monogenic_fp,
    wss_trinomial,
)
from wallsunsun.wss import validate_k

from oracles import disc_from_resultant, sieve_primes, trinomial_coeffs

X = symbols("x")

nonzero_coeff = st.integers(min_value=-20, max_value=20).filter(lambda v: v != 0)


def _random_trinomials(seed, count, max_n=8):
    rng = random.Random(seed)
    out = []
    for _ in range(count):
        n = rng.randrange(2, max_n + 1)
        m = rng.randrange(1, n)
        a = rng.choice([v for v in range(-20, 21) if v])
        b = rng.choice([v for v in range(-20, 21) if v])
        out.append(Trinomial(n, m, a, b))
    return out


def _sympy_poly(t: Trinomial) -> Poly:
    return Poly(X**t.N + t.A * X**t.M + t.B, X, domain=ZZ)


# ---------------------------------------------------------------- Trinomial


def test_trinomial_fields_and_normalization():
    t = Trinomial(6, 3, -1, -1)
    assert (t.r, t.n1, t.m1) == (3, 2, 1)
    assert t.coeffs() == trinomial_coeffs(6, 3, -1, -1)
    assert str(t) == "x^6 + (-1)*x^3 + (-1)"


def test_trinomial_rejects_degenerate_shapes():
    for args in [(1, 0, 1, 1), (4, 0, 1, 1), (4, 4, 1, 1), (4, 2, 0, 1), (4, 2, 1, 0)]:
        with pytest.raises(ValueError):
            Trinomial(*args)


def test_wss_trinomial_shape():
    t = wss_trinomial(3, 7)
    assert (t.N, t.M, t.A, t.B) == (14, 7, -3, -1)


# ------------------------------------------------------------- discriminants


@pytest.mark.parametrize(
    "t,expected",
    [
        (Trinomial(2, 1, -1, -1), 5),
        (Trinomial(4, 2, -1, -1), -400),
        (Trinomial(6, 3, -3, -1), 1601613),
        (Trinomial(4, 2, 1, 1), 144),
        (Trinomial(3, 1, 1, 4), -436),
    ],
)
def test_discriminant_resultant_known_values(t, expected):
    assert discriminant_resultant(t) == expected


def test_discriminant_resultant_matches_fraction_free_oracle():
    for t in _random_trinomials(101, 250, max_n=7):
        assert discriminant_resultant(t) == disc_from_resultant(t.coeffs()), t


def test_discriminant_resultant_matches_sympy():
    for t in _random_trinomials(202, 120, max_n=8):
        assert discriminant_resultant(t) == _sympy_poly(t).discriminant(), t


def test_fp_discriminant_closed_form_equals_resultant_grid():
    """Contract grid: k <= 10, p in the first six primes, sign included."""
    for k in range(1, 11):
        for p in (2, 3, 5, 7, 11, 13):
            assert fp_discriminant(k, p) == discriminant_resultant(wss_trinomial(k, p)), (k, p)


def test_fp_discriminant_sign_negative_only_at_p_2():
    assert fp_discriminant(1, 2) == -400
    for k in (1, 2, 9):
        assert fp_discriminant(k, 2) < 0
        for p in (3, 5, 13):
            assert fp_discriminant(k, p) > 0


def test_fp_discriminant_factor_shape():
    # p^{2p} * (k^2+4)^p up to sign, so only p and primes of k^2+4 appear
    for k, p in [(2, 5), (7, 3), (10, 13)]:
        d = abs(fp_discriminant(k, p))
        allowed = {p} | set(factorize(k * k + 4).primes())
        assert set(factorize(d).primes()) <= allowed


# -------------------------------------------------------------- index_d_value


@pytest.mark.parametrize(
    "t,d,d_normalized",
    [
        (Trinomial(2, 1, -1, -1), -5, -5),
        (Trinomial(4, 2, 1, 1), 12, 3),
        (Trinomial(6, 3, -1, -1), -45, -5),   # disc = -D^3 = 91125
        (Trinomial(6, 3, -3, -1), -117, -13),
    ],
)
def test_index_d_value_known(t, d, d_normalized):
    assert index_d_value(t) == (d, d_normalized)


def test_index_d_value_for_wss_family_is_minus_discriminant_of_x2_kx_1():
    # D/r^{N1} = -(k^2+4) for x^{2p} - k x^p - 1
    for k in (1, 2, 9, 30):
        for p in (2, 3, 13):
            _, dn = index_d_value(wss_trinomial(k, p))
            assert dn == -(k * k + 4)


def test_discriminant_identity_with_d_value():
    for t in _random_trinomials(303, 300, max_n=7):
        disc = discriminant_resultant(t)
        d_value, _ = index_d_value(t)
        sign = -1 if (t.N * (t.N - 1) // 2) % 2 else 1
        assert disc == sign * t.B ** (t.M - 1) * d_value**t.r, t


# ----------------------------------------------------------- index criterion


# Irreducible synthetic trinomials chosen to land on specific criterion items;
# the expected q-verdicts below were produced by an independent maximal-order
# computation (sympy round_two), not by this package.
SYNTHETIC_ITEM_CASES = [
    (Trinomial(4, 2, 2, 2), 2, False, 1),    # Eisenstein
    (Trinomial(4, 2, 2, 4), 2, True, 1),     # q^2 | B
    (Trinomial(6, 3, 3, 3), 3, False, 1),
    (Trinomial(4, 2, 2, 3), 2, False, 2),
    (Trinomial(4, 2, 4, 1), 2, False, 2),
    (Trinomial(3, 1, 1, 4), 2, False, 3),
    (Trinomial(4, 2, 1, 27), 3, True, 3),
    (Trinomial(6, 3, 1, 1), 3, False, 4),    # ninth cyclotomic
    (Trinomial(3, 1, 2, 22), 5, True, 5),
]


@pytest.mark.parametrize("t,q,divides,item", SYNTHETIC_ITEM_CASES)
def test_index_criterion_synthetic_cases(t, q, divides, item):
    v = index_check_prime(t, q)
    assert isinstance(v, IndexVerdict)
    assert v.q == q
    assert v.divides_index is divides
    assert v.item_used == item
    assert v.detail


def test_index_criterion_against_maximal_order_oracle():
    """Every prime divisor of every synthetic discriminant, cross-checked
    against disc(f)/disc(K) from an independent integral-basis routine."""
    seen_items = set()
    for t in sorted({t for t, _, _, _ in SYNTHETIC_ITEM_CASES}, key=str):
        f = _sympy_poly(t)
        assert f.is_irreducible, t
        _, disc_k = round_two(f)
        index_sq = f.discriminant() // disc_k
        assert f.discriminant() == discriminant_resultant(t)
        for q in factorize(abs(discriminant_resultant(t))).primes():
            v = index_check_prime(t, q)
            assert v.divides_index == (index_sq % q == 0), (t, q)
            seen_items.add(v.item_used)
    assert seen_items == {1, 2, 3, 4, 5}


@pytest.mark.parametrize(
    "k,p,q,divides,item",
    [
        (1, 3, 3, False, 4),
        (1, 3, 5, False, 5),
        (2, 13, 13, True, 4),    # 13 is a 2-Wall-Sun-Sun prime
        (2, 31, 31, True, 4),
        (3, 3, 3, False, 2),     # p | k but p^2 does not
        (9, 3, 3, True, 2),      # p^2 | k forces a non-trivial index
        (18, 3, 3, True, 2),
        (2, 2, 2, False, 2),     # k = 2 mod 4 branch
        (1, 2, 2, False, 4),     # odd k branch
        (5, 29, 29, False, 4),   # ramified: p | k^2+4
    ],
)
def test_index_criterion_on_wss_family(k, p, q, divides, item):
    v = index_check_prime(wss_trinomial(k, p), q)
    assert (v.divides_index, v.item_used) == (divides, item), v


def test_index_criterion_validation():
    t = Trinomial(2, 1, -1, -1)
    with pytest.raises(ValueError):
        index_check_prime(t, 4)       # not prime
    with pytest.raises(ValueError):
        index_check_prime(t, 3)       # 3 does not divide disc = 5
    with pytest.raises(ValueError):
        index_check_prime(t, 5, discriminant=7)


# ------------------------------------------------- wss-family invariant sweep


def test_only_p_can_divide_the_index_under_hypotheses():
    """Sweep valid k <= 30, p <= 50: any q != p always gets a clean verdict,
    and the verdict at p matches the G/H coprimality shortcut."""
    for k in range(1, 31):
        if not validate_k(k).satisfied:
            continue
        d = k * k + 4
        for p in sieve_primes(50):
            report = is_monogenic_fp(k, p)
            assert isinstance(report, MonogenicityReport)
            by_q = {v.q: v for v in report.verdicts}
            for q, v in by_q.items():
                if q != p:
                    assert not v.divides_index, (k, p, q)
            assert report.monogenic == (not by_q[p].divides_index)
            if p >= 3 and d % p != 0:
                assert gh_coprimality(k, p) == (not by_q[p].divides_index), (k, p)


def test_ramified_primes_yield_monogenic():
    # p >= 3 dividing k^2+4 always lands monogenic
    for k, p in [(1, 5), (3, 13), (5, 29), (6, 5), (7, 53), (13, 173)]:
        assert validate_k(k).satisfied
        assert (k * k + 4) % p == 0
        assert is_monogenic_fp(k, p).monogenic, (k, p)


# -------------------------------------------------------------- gh shortcut


@pytest.mark.parametrize(
    "k,p,coprime",
    [
        (1, 3, True),
        (1, 2, True),
        (2, 13, False),
        (2, 31, False),
        (2, 7, True),
        (3, 241, False),
    ],
)
def test_gh_coprimality_known(k, p, coprime):
    assert gh_coprimality(k, p) is coprime


def test_gh_coprimality_rejects_ramified_p():
    with pytest.raises(ValueError):
        gh_coprimality(1, 5)  # 5 | 1 + 4


# ------------------------------------------------------------ is_monogenic_fp


def test_is_monogenic_fp_known_reports():
    rep = is_monogenic_fp(1, 3)
    assert rep.monogenic
    assert rep.trinomial == Trinomial(6, 3, -1, -1)
    assert rep.discriminant == 91125
    assert {v.q for v in rep.verdicts} == {3, 5}

    assert not is_monogenic_fp(2, 13).monogenic
    assert not is_monogenic_fp(9, 3).monogenic


def test_is_monogenic_fp_enforces_hypotheses():
    with pytest.raises(HypothesisError):
        is_monogenic_fp(4, 3)    # 4 | k
    with pytest.raises(HypothesisError):
        is_monogenic_fp(11, 3)   # 125 is not squarefree
    with pytest.raises(ValueError):
        is_monogenic_fp(1, 6)    # p must be prime


def test_streaming_h_handles_a_heavy_ramified_pair():
    # 46^2+4 = 2120 = 2^3 * 5 * 53, so q = p = 53 takes the item-4 path
    # with q^m = 53 and exercises the streamed binomial construction
    k, p = 46, 53
    assert (k * k + 4) % p == 0
    assert is_monogenic_fp(k, p).monogenic


@given(st.integers(min_value=2, max_value=200))
@settings(deadline=None, max_examples=30)
def test_is_monogenic_fp_rejects_all_composite_p(p):
    if is_prime(p):
        return
    with pytest.raises(ValueError):
        is_monogenic_fp(1, p)
