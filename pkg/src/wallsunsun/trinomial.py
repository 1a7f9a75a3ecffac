"""Trinomial discriminants and the five-case prime-index criterion.

For a monic irreducible trinomial f(x) = x^N + A x^M + B with root theta,
every prime q dividing disc(f) either divides the index [Z_K : Z[theta]]
or does not, and which one is decidable case by case from the divisibility
pattern of (A, B, M) by q. f is monogenic exactly when no prime divides
the index. The family F_p(x) = x^{2p} - k x^p - 1 is wired in specially:
its non-monogenicity detects k-Wall-Sun-Sun primes.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import HypothesisError
from .intmath import factorize, is_prime, jacobi


@dataclass(frozen=True)
class Trinomial:
    """x^N + A x^M + B with 0 < M < N and A, B nonzero."""

    N: int
    M: int
    A: int
    B: int

    def __post_init__(self):
        if self.N < 2:
            raise ValueError(f"degree N must be >= 2, got {self.N}")
        if not 0 < self.M < self.N:
            raise ValueError(f"middle exponent must satisfy 0 < M < N, got M={self.M}")
        if self.A == 0 or self.B == 0:
            raise ValueError("A and B must be nonzero (otherwise not a trinomial)")

    @property
    def r(self) -> int:
        return math.gcd(self.N, self.M)

    @property
    def n1(self) -> int:
        return self.N // self.r

    @property
    def m1(self) -> int:
        return self.M // self.r

    def coeffs(self) -> list[int]:
        """Little-endian coefficient list (index i holds the x^i coefficient)."""
        c = [0] * (self.N + 1)
        c[0] = self.B
        c[self.M] = self.A
        c[self.N] = 1
        return c

    def __str__(self) -> str:
        return f"x^{self.N} + ({self.A})*x^{self.M} + ({self.B})"


@dataclass(frozen=True)
class IndexVerdict:
    """Per-prime index decision: does q divide [Z_K : Z[theta]]?"""

    q: int
    divides_index: bool
    item_used: int  # which of the five cases decided it
    detail: str


@dataclass(frozen=True)
class MonogenicityReport:
    trinomial: Trinomial
    discriminant: int
    verdicts: tuple[IndexVerdict, ...]
    monogenic: bool


def wss_trinomial(k: int, p: int) -> Trinomial:
    """The detector trinomial x^{2p} - k x^p - 1."""
    if k < 1:
        raise ValueError(f"k must be >= 1, got {k}")
    if not is_prime(p):
        raise ValueError(f"p must be prime, got {p}")
    return Trinomial(N=2 * p, M=p, A=-k, B=-1)


def _bareiss_det(mat: list[list[int]]) -> int:
    """Exact determinant by fraction-free (Bareiss) elimination.

    Mutates mat. Every interior division is exact by the Bareiss identity.
    """
    n = len(mat)
    sign = 1
    prev = 1
    for i in range(n - 1):
        if mat[i][i] == 0:
            for r in range(i + 1, n):
                if mat[r][i]:
                    mat[i], mat[r] = mat[r], mat[i]
                    sign = -sign
                    break
            else:
                return 0
        piv = mat[i][i]
        top = mat[i]
        for r in range(i + 1, n):
            row = mat[r]
            lead = row[i]
            for c in range(i + 1, n):
                row[c] = (row[c] * piv - lead * top[c]) // prev
            row[i] = 0
        prev = piv
    return sign * mat[-1][-1]


def discriminant_resultant(t: Trinomial) -> int:
    """disc(t) = (-1)^(N(N-1)/2) * Res(t, t') computed from the Sylvester matrix.

    Independent of the closed form on purpose; the two are cross-checked in
    tests and by the discriminant CLI command. Cost grows like N^3 with big
    integer entries, so this is for desk-scale N.
    """
    n = t.N
    f = list(reversed(t.coeffs()))
    fp = [0] * n  # derivative, degree N-1, big-endian
    fp[0] = n
    fp[n - 1 - (t.M - 1)] = t.A * t.M
    size = 2 * n - 1
    rows = []
    for i in range(n - 1):
        rows.append([0] * i + f + [0] * (n - 2 - i))
    for i in range(n):
        rows.append([0] * i + fp + [0] * (n - 1 - i))
    res = _bareiss_det(rows)
    sign = -1 if (n * (n - 1) // 2) % 2 else 1
    return sign * res


def fp_discriminant(k: int, p: int) -> int:
    """Closed form disc(F_p) = (-1)^((p+1)(2p-1)) * p^(2p) * (k^2+4)^p."""
    if k < 1:
        raise ValueError(f"k must be >= 1, got {k}")
    if not is_prime(p):
        raise ValueError(f"p must be prime, got {p}")
    sign = -1 if ((p + 1) * (2 * p - 1)) % 2 else 1
    return sign * p ** (2 * p) * (k * k + 4) ** p


def index_d_value(t: Trinomial) -> tuple[int, int]:
    """The case-5 quantity D and its exact normalization D / r^N1.

    D = N^N1 * B^(N1-M1) - (-1)^N1 * M^M1 * (N-M)^(N1-M1) * A^N1.
    r^N1 always divides D; the division is asserted.
    """
    n1, m1 = t.n1, t.m1
    d = (
        t.N**n1 * t.B ** (n1 - m1)
        - (-1) ** n1 * t.M**m1 * (t.N - t.M) ** (n1 - m1) * t.A**n1
    )
    norm, rem = divmod(d, t.r**n1)
    assert rem == 0, "r^N1 must divide D"
    return d, norm


def _valuation(q: int, n: int) -> int:
    assert n != 0
    v = 0
    while n % q == 0:
        n //= q
        v += 1
    return v


def _trim(f: list[int]) -> list[int]:
    i = len(f)
    while i > 0 and f[i - 1] == 0:
        i -= 1
    return f[:i]


def _poly_rem(f: list[int], g: list[int], q: int) -> list[int]:
    """f mod g over F_q; f, g little-endian, g nonzero and trimmed."""
    inv = pow(g[-1], -1, q)
    rem = list(f)
    dg = len(g) - 1
    for top in range(len(rem) - 1, dg - 1, -1):
        c = rem[top]
        if c:
            factor = c * inv % q
            off = top - dg
            for i in range(dg):
                rem[off + i] = (rem[off + i] - factor * g[i]) % q
            rem[top] = 0
    return _trim(rem)


def _poly_gcd(f: list[int], g: list[int], q: int) -> list[int]:
    """Monic gcd over F_q (empty list for gcd of two zero polynomials)."""
    f = _trim([c % q for c in f])
    g = _trim([c % q for c in g])
    while g:
        f, g = g, _poly_rem(f, g, q)
    if not f:
        return []
    inv = pow(f[-1], -1, q)
    return [c * inv % q for c in f]


def _case4_g_h(
    N: int, M: int, A: int, B: int, q: int, qm: int
) -> tuple[list[int], list[int]]:
    """The case-4 pair G, H reduced mod q, little-endian.

    G = x^(N/qm) + A x^(M/qm) + B.
    H = (A x^M + B + (-A x^(M/qm) - B)^qm) / q, where qm = q^m strips the
    full shared q-power out of (N, M).

    Every coefficient of H's numerator is divisible by q: the interior
    binomial coefficients C(qm, i) have q-valuation m - v_q(i) >= 1, and
    the two edge coefficients collapse to c + (-c)^qm with q not dividing
    c, which Fermat kills mod q. Each division below is exact and checked.
    The interior C(qm, i) are carried exactly (integer row recurrence) and
    only then divided by q; the A/B power factors, which the division never
    touches, are reduced mod q as they go, so coefficients of astronomical
    height are never materialized.
    """
    u, v = N // qm, M // qm
    g = [0] * (u + 1)
    g[u] = 1
    g[v] = (g[v] + A) % q
    g[0] = (g[0] + B) % q

    h = [0] * (M + 1)
    q2 = q * q
    c0 = (B + pow(-B, qm, q2)) % q2
    assert c0 % q == 0, "edge coefficient of H numerator must be divisible by q"
    h[0] = c0 // q % q
    cm = (A + pow(-A, qm, q2)) % q2
    assert cm % q == 0, "edge coefficient of H numerator must be divisible by q"
    h[M] = cm // q % q

    nega = (-A) % q
    negb = (-B) % q
    invb = pow(negb, -1, q)  # q never divides B in case 4
    binom = 1
    powa = 1
    powb = pow(negb, qm, q)
    for i in range(1, qm):
        binom = binom * (qm - i + 1) // i  # exact: C(qm, i)
        powa = powa * nega % q
        powb = powb * invb % q  # (-B)^(qm-i)
        assert binom % q == 0, "q must divide C(qm, i) for 0 < i < qm"
        c = binom // q % q
        if c:
            c = c * powa % q * powb % q
            if c:
                h[v * i] = (h[v * i] + c) % q
    return g, h


def index_check_prime(
    t: Trinomial, q: int, *, discriminant: int | None = None
) -> IndexVerdict:
    """Decide whether prime q divides the index [Z_K : Z[theta]] for t.

    Requires q | disc(t) and t irreducible over Q (the caller vouches for
    irreducibility). Pass the discriminant when it is already known; when
    omitted it is recomputed via the resultant, which is only sensible for
    small degrees.
    """
    if q < 2 or not is_prime(q):
        raise ValueError(f"q must be prime, got {q}")
    disc = discriminant_resultant(t) if discriminant is None else discriminant
    if disc % q != 0:
        raise ValueError(f"q = {q} does not divide the discriminant of {t}")

    n, m, a, b = t.N, t.M, t.A, t.B
    n1, m1 = t.n1, t.m1
    q2 = q * q

    if a % q == 0 and b % q == 0:
        ok = b % q2 != 0
        detail = "q^2 does not divide B" if ok else "q^2 divides B"
        return IndexVerdict(q, not ok, 1, detail)

    if a % q == 0:
        # B1 = (B + (-B)^(q^e))/q with q^e || N; only its residue mod q is
        # ever used, so it is read off mod q^2 (divisibility asserted).
        e = _valuation(q, n)
        b1_num = (b + pow(-b, q**e, q2)) % q2
        assert b1_num % q == 0, "q must divide B + (-B)^(q^e)"
        b1 = b1_num // q % q
        a2_full = a // q
        a2 = a2_full % q
        if a2 == 0 and b1 != 0:
            return IndexVerdict(q, False, 2, "q | A2 and q does not divide B1")
        val = a2 * (pow(-b, m1, q) * pow(a2, n1, q) - pow(-b1, n1, q)) % q
        if val:
            return IndexVerdict(
                q, False, 2, "A2*((-B)^M1*A2^N1 - (-B1)^N1) nonzero mod q"
            )
        return IndexVerdict(q, True, 2, "both case-2 branches vanish mod q")

    if b % q == 0:
        j = _valuation(q, n - m)
        a1_num = (a + pow(-a, q**j, q2)) % q2
        assert a1_num % q == 0, "q must divide A + (-A)^(q^j)"
        a1 = a1_num // q % q
        b2_full = b // q
        b2 = b2_full % q
        if a1 == 0 and b2 != 0:
            return IndexVerdict(q, False, 3, "q | A1 and q does not divide B2")
        val = (
            a1
            * pow(b2, m - 1, q)
            * (pow(-a, m1, q) * pow(a1, n1 - m1, q) - pow(-b2, n1 - m1, q))
            % q
        )
        if val:
            return IndexVerdict(
                q, False, 3, "A1*B2^(M-1)*((-A)^M1*A1^(N1-M1) - (-B2)^(N1-M1)) nonzero mod q"
            )
        return IndexVerdict(q, True, 3, "both case-3 branches vanish mod q")

    if m % q == 0:
        mv = min(_valuation(q, n), _valuation(q, m))
        g, h = _case4_g_h(n, m, a, b, q, q**mv)
        gcd = _poly_gcd(g, h, q)
        degree = len(gcd) - 1 if gcd else -1
        ok = degree == 0
        detail = f"gcd(G, H) over F_q has degree {degree}"
        return IndexVerdict(q, not ok, 4, detail)

    _, norm = index_d_value(t)
    ok = norm % q2 != 0
    detail = (
        "q^2 does not divide D/r^N1" if ok else "q^2 divides D/r^N1"
    )
    return IndexVerdict(q, not ok, 5, detail)


def gh_coprimality(k: int, p: int) -> bool:
    """Case-4 coprimality for F_p at q = p: gcd(G, H) = 1 over F_p?

    G = x^2 - kx - 1 and H = (-k x^p - 1 + (kx+1)^p)/p. True means p does
    not divide the index of F_p, i.e. the trinomial stays monogenic at p.
    Requires p prime with p not dividing k^2 + 4 (the ramified case is
    decided by other means).
    """
    if k < 1:
        raise ValueError(f"k must be >= 1, got {k}")
    if not is_prime(p):
        raise ValueError(f"p must be prime, got {p}")
    if (k * k + 4) % p == 0:
        raise ValueError(f"p = {p} divides k^2+4; the G/H test does not apply")
    g, h = _case4_g_h(2 * p, p, -k, -1, p, p)
    if __debug__ and p % 2 == 1 and p < 100 and k % p != 0:
        # sanity hook: x^2 - kx - 1 factors mod p iff k^2+4 is a square mod p
        has_root = any(
            (x * x - k * x - 1) % p == 0 for x in range(p)
        )
        assert has_root == (jacobi(k * k + 4, p) == 1)
    gcd = _poly_gcd(g, h, p)
    return len(gcd) == 1


def is_monogenic_fp(
    k: int, p: int, *, factor_budget: int | None = None
) -> MonogenicityReport:
    """Full per-prime index scan of F_p = x^{2p} - k x^p - 1.

    Valid only under the standing hypotheses (4 does not divide k and
    (k^2+4)/gcd(2,k)^2 squarefree), which guarantee irreducibility. The
    discriminant's prime factors are p together with the primes of k^2+4,
    read off the closed form, so no big-number factoring happens here.
    """
    from .wss import validate_k  # deferred; wss imports this module

    hyp = validate_k(k, factor_budget=factor_budget)
    if not hyp.four_ok:
        raise HypothesisError(f"k = {k} is divisible by 4")
    if not hyp.squarefree_ok:
        raise HypothesisError(f"D = {hyp.d_value} is not squarefree for k = {k}")
    t = wss_trinomial(k, p)  # validates p
    disc = fp_discriminant(k, p)
    qs = sorted({p} | set(factorize(k * k + 4, budget=factor_budget).primes()))
    verdicts = tuple(index_check_prime(t, q, discriminant=disc) for q in qs)
    return MonogenicityReport(
        trinomial=t,
        discriminant=disc,
        verdicts=verdicts,
        monogenic=not any(v.divides_index for v in verdicts),
    )
