"""Integer utilities: primality, factoring, Jacobi symbols.

Primality is deterministic for everything this package can realistically
meet: below 3,317,044,064,679,887,385,961,981 the fixed Miller-Rabin base
set of the first twelve primes is a proven witness set, and above that we
run 64 extra rounds with bases drawn from a generator seeded by n itself,
so results stay reproducible run to run.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass

from .errors import FactorizationBudgetError

DEFAULT_FACTOR_BUDGET = 10_000_000

# The 12-prime base set below is a proven complete witness set for every n
# under this constant (covers well past 2^64). is_prime is deterministic up
# to here and probabilistic (but still reproducible) beyond.
DETERMINISTIC_PRIMALITY_BOUND = 3_317_044_064_679_887_385_961_981
_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)

_SMALL_PRIMES = (
    2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59, 61, 67,
    71, 73, 79, 83, 89, 97,
)

# trial division steps over a 2/3/5 wheel
_WHEEL = (4, 2, 4, 2, 4, 6, 2, 6)


def mod_pow(base: int, exponent: int, modulus: int) -> int:
    if modulus < 2:
        raise ValueError(f"modulus must be >= 2, got {modulus}")
    if exponent < 0:
        raise ValueError(f"exponent must be >= 0, got {exponent}")
    return pow(base, exponent, modulus)


def jacobi(a: int, n: int) -> int:
    """Jacobi symbol (a/n) for odd n >= 1. Equals the Legendre symbol for prime n."""
    if n < 1 or n % 2 == 0:
        raise ValueError(f"n must be odd and >= 1, got {n}")
    a %= n
    result = 1
    while a != 0:
        while a % 2 == 0:
            a //= 2
            if n % 8 in (3, 5):
                result = -result
        a, n = n, a
        if a % 4 == 3 and n % 4 == 3:
            result = -result
        a %= n
    return result if n == 1 else 0


def _mr_witness(n: int, a: int, d: int, s: int) -> bool:
    """True if a witnesses that n is composite."""
    x = pow(a, d, n)
    if x == 1 or x == n - 1:
        return False
    for _ in range(s - 1):
        x = x * x % n
        if x == n - 1:
            return False
    return True


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    for p in _SMALL_PRIMES:
        if n == p:
            return True
        if n % p == 0:
            return False
    d = n - 1
    s = 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in _MR_BASES:
        if _mr_witness(n, a, d, s):
            return False
    if n < DETERMINISTIC_PRIMALITY_BOUND:
        return True
    rng = random.Random(n)
    for _ in range(64):
        a = rng.randrange(2, n - 1)
        if _mr_witness(n, a, d, s):
            return False
    return True


@dataclass(frozen=True)
class Factorization:
    """Complete factorization of n: factors is sorted ((prime, exponent), ...)."""

    n: int
    factors: tuple[tuple[int, int], ...]

    def is_squarefree(self) -> bool:
        return all(e == 1 for _, e in self.factors)

    def primes(self) -> tuple[int, ...]:
        return tuple(p for p, _ in self.factors)


def _pollard_rho(n: int, rng: random.Random, budget: int) -> tuple[int, int]:
    """Brent-style rho. Returns (factor, evaluations_used); factor == n on failure.

    n must be odd, composite, and not a perfect power of a small prime (the
    caller has already stripped small primes).
    """
    used = 0
    while used < budget:
        y = rng.randrange(1, n)
        c = rng.randrange(1, n)
        m = 128
        g = r = q = 1
        x = ys = y
        while g == 1 and used < budget:
            x = y
            for _ in range(r):
                y = (y * y + c) % n
            used += r
            j = 0
            while j < r and g == 1 and used < budget:
                ys = y
                for _ in range(min(m, r - j)):
                    y = (y * y + c) % n
                    q = q * abs(x - y) % n
                used += min(m, r - j)
                g = math.gcd(q, n)
                j += m
            r *= 2
        if g == n:
            # backtrack one step at a time
            g = 1
            while g == 1:
                ys = (ys * ys + c) % n
                used += 1
                g = math.gcd(abs(x - ys), n)
        if 1 < g < n:
            return g, used
    return n, used


def factorize(n: int, *, budget: int | None = None) -> Factorization:
    """Factor n >= 1 completely, or raise FactorizationBudgetError.

    budget caps the number of rho iterations spent after trial division
    (default 10**7). The error carries whatever part did factor plus the
    composite cofactor that did not.
    """
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    if budget is None:
        budget = DEFAULT_FACTOR_BUDGET
    original = n
    counts: dict[int, int] = {}
    for p in (2, 3, 5):
        while n % p == 0:
            counts[p] = counts.get(p, 0) + 1
            n //= p
    d = 7
    i = 0
    while d * d <= n and d <= 1_000_000:
        while n % d == 0:
            counts[d] = counts.get(d, 0) + 1
            n //= d
        d += _WHEEL[i]
        i = (i + 1) % 8
    if d * d > n and n > 1:
        counts[n] = counts.get(n, 0) + 1
        n = 1
    # anything left is > 10**12 with no factor below 10**6
    stack = [n] if n > 1 else []
    rng = random.Random(original)
    remaining = budget
    while stack:
        m = stack.pop()
        if m == 1:
            continue
        if is_prime(m):
            counts[m] = counts.get(m, 0) + 1
            continue
        root = math.isqrt(m)
        if root * root == m:
            stack.extend((root, root))
            continue
        f, used = _pollard_rho(m, rng, remaining)
        remaining -= used
        if f == m:
            partial = tuple(sorted(counts.items()))
            raise FactorizationBudgetError(
                f"factor budget exhausted with composite cofactor {m}",
                cofactor=m,
                partial=partial,
            )
        stack.extend((f, m // f))
    return Factorization(original, tuple(sorted(counts.items())))


def is_squarefree(n: int, *, budget: int | None = None) -> bool:
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    return factorize(n, budget=budget).is_squarefree()
