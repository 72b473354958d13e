"""Z[w+] (Eisenstein, w^2 = w - 1) and Z[w-] (golden, w^2 = w + 1), and the
arithmetic that decides which p are surgery coefficients of Berge knots.

b^+(m, n) has p = m^2 + mn + n^2 = N(m + n w+) and b^-(m, n) has
p = m^2 + 3mn + n^2 = N((m + n) + n w-), so realizable p are norms of
primitive elements and the parameters are canonical orbit representatives.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from math import gcd, isqrt
from typing import NamedTuple

from .errors import NotPrimitive, RingMismatch, UnitElement

__all__ = [
    "QuadInt",
    "qmul",
    "qconj",
    "qnorm",
    "fibonacci",
    "unit_pow_omega",
    "is_primitive",
    "canonical_rep",
    "orbit",
    "Factorization",
    "factorize",
    "is_prime",
    "Realizability",
    "berge_realizable",
    "berge_realizable_both",
    "enumerate_preimages",
]

PLUS = "plus"
MINUS = "minus"
_OMEGA_SQUARED = {PLUS: (-1, 1), MINUS: (1, 1)}  # w^2 = b + c*w


@dataclass(frozen=True)
class QuadInt:
    """b + c*w in Z[w+] (``ring="plus"``) or Z[w-] (``ring="minus"``)."""

    ring: str
    b: int
    c: int

    def __post_init__(self) -> None:
        if self.ring not in _OMEGA_SQUARED:
            raise ValueError(f"ring must be 'plus' or 'minus', got {self.ring!r}")

    def __mul__(self, other: QuadInt) -> QuadInt:
        return qmul(self, other)

    def __neg__(self) -> QuadInt:
        return QuadInt(self.ring, -self.b, -self.c)

    def conj(self) -> QuadInt:
        return qconj(self)

    def norm(self) -> int:
        return qnorm(self)

    def __str__(self) -> str:
        return f"{self.b}{self.c:+}w{'+' if self.ring == PLUS else '-'}"


def qmul(x: QuadInt, y: QuadInt) -> QuadInt:
    if x.ring != y.ring:
        raise RingMismatch(f"cannot multiply {x.ring} by {y.ring}")
    s0, s1 = _OMEGA_SQUARED[x.ring]
    cc = x.c * y.c
    return QuadInt(x.ring, x.b * y.b + cc * s0, x.b * y.c + x.c * y.b + cc * s1)


def qconj(x: QuadInt) -> QuadInt:
    """Galois conjugate; w-bar = 1 - w in both rings."""
    return QuadInt(x.ring, x.b + x.c, -x.c)


def qnorm(x: QuadInt) -> int:
    prod = qmul(x, qconj(x))
    assert prod.c == 0
    return prod.b


def fibonacci(k: int) -> int:
    """a_k with a_1 = a_2 = 1, extended to negative k by a_k = a_{k+2} - a_{k+1}."""
    lo, hi = 0, 1  # (a_0, a_1)
    if k >= 0:
        for _ in range(k):
            lo, hi = hi, lo + hi
        return lo
    for _ in range(-k):
        lo, hi = hi - lo, lo
    return lo


def unit_pow_omega(ring: str, k: int) -> QuadInt:
    """w^k.  In Z[w+] w has order 6; in Z[w-] w^k = a_{k-1} + a_k w."""
    if ring == MINUS:
        return QuadInt(MINUS, fibonacci(k - 1), fibonacci(k))
    if ring != PLUS:
        raise ValueError(f"unknown ring {ring!r}")
    out = QuadInt(PLUS, 1, 0)
    w = QuadInt(PLUS, 0, 1)
    for _ in range(k % 6):
        out = out * w
    return out


def is_primitive(x: QuadInt) -> bool:
    return gcd(abs(x.b), abs(x.c)) == 1


def orbit(x: QuadInt) -> set[QuadInt]:
    """{x*u, conj(x)*u : u a unit} for Z[w+]; finite (12 elements at most)."""
    if x.ring != PLUS:
        raise ValueError("the unit group of Z[w-] is infinite; use canonical_rep")
    w = QuadInt(PLUS, 0, 1)
    out = set()
    for start in (x, qconj(x)):
        y = start
        for _ in range(6):
            out.add(y)
            y = y * w
    return out


def _check_rep_input(x: QuadInt) -> None:
    if not is_primitive(x):
        raise NotPrimitive(f"{x} is not primitive")
    if abs(qnorm(x)) <= 1:
        raise UnitElement(f"{x} is a unit or zero")


def _canonical_plus(x: QuadInt) -> tuple[int, int]:
    hits = {(y.b, y.c) for y in orbit(x) if 1 <= y.b <= y.c}
    if len(hits) != 1:
        raise AssertionError(f"orbit of {x} has {len(hits)} canonical elements")
    return hits.pop()


def _canonical_minus(x: QuadInt) -> tuple[int, int]:
    # x * w^(k-1) = b_k + b_{k+1} w with (b_k) a Fibonacci-type sequence and
    # conj(x * w^(k-1)) = b_{k+2} - b_{k+1} w.  The canonical element
    # B + C w with C < B <= 2C has norm N > C^2, so both coefficients are
    # below 2 sqrt(N).  Forward, a same-sign pair only grows; backward, an
    # opposite-sign pair only grows.  Walk each way until that happens
    # beyond the bound.
    bound = 2 * isqrt(abs(qnorm(x))) + 2
    pairs = [(x.b, x.c)]
    u, v = x.b, x.c
    while not (u * v > 0 and min(abs(u), abs(v)) > bound):
        u, v = v, u + v
        pairs.append((u, v))
    u, v = x.b, x.c
    while not (u * v < 0 and min(abs(u), abs(v)) > bound):
        u, v = v - u, u
        pairs.append((u, v))
    hits = set()
    for u, v in pairs:
        for B, C in ((u, v), (-u, -v), (u + v, -v), (-u - v, v)):
            if 1 <= C < B <= 2 * C:
                hits.add((B - C, C))
    if len(hits) != 1:
        raise AssertionError(f"orbit of {x} has {len(hits)} canonical elements")
    return hits.pop()


def canonical_rep(x: QuadInt) -> tuple[int, int]:
    """(m, n) with 1 <= m <= n such that the orbit of x contains m + n w+
    (plus ring) or (m + n) + n w- (minus ring)."""
    _check_rep_input(x)
    if x.ring == PLUS:
        return _canonical_plus(x)
    return _canonical_minus(x)


# -- integer factorization ------------------------------------------------

_SMALL_PRIMES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)
_TRIAL_LIMIT = 1000


def is_prime(n: int) -> bool:
    """Miller-Rabin with the first twelve primes as witnesses.

    Deterministic for n < 3.3 * 10^24, which covers the 64-bit range.
    """
    if n < 2:
        return False
    for q in _SMALL_PRIMES:
        if n % q == 0:
            return n == q
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in _SMALL_PRIMES:
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def _pollard_brent(n: int, rng: random.Random) -> int:
    """A nontrivial factor of the odd composite n."""
    while True:
        y, c, m = rng.randrange(1, n), rng.randrange(1, n), 128
        g = r = q = 1
        while g == 1:
            x = y
            for _ in range(r):
                y = (y * y + c) % n
            k = 0
            while k < r and g == 1:
                ys = y
                for _ in range(min(m, r - k)):
                    y = (y * y + c) % n
                    q = q * abs(x - y) % n
                g = gcd(q, n)
                k += m
            r *= 2
        if g == n:
            g = 1
            while g == 1:
                ys = (ys * ys + c) % n
                g = gcd(abs(x - ys), n)
        if g != n:
            return g


@dataclass(frozen=True)
class Factorization:
    n: int
    factors: tuple[tuple[int, int], ...]

    def __post_init__(self) -> None:
        prod = 1
        for q, e in self.factors:
            prod *= q**e
        assert prod == self.n

    @property
    def primes(self) -> tuple[int, ...]:
        return tuple(q for q, _ in self.factors)

    def exponent(self, q: int) -> int:
        return dict(self.factors).get(q, 0)


def factorize(n: int) -> Factorization:
    """Prime factorization: trial division to 1000, then Pollard-Brent rho."""
    if n < 1:
        raise ValueError("n must be positive")
    counts: dict[int, int] = {}
    m = n
    q = 2
    while q <= _TRIAL_LIMIT and q * q <= m:
        while m % q == 0:
            counts[q] = counts.get(q, 0) + 1
            m //= q
        q += 1 if q == 2 else 2
    rng = random.Random(0x5EED ^ n)
    stack = [m] if m > 1 else []
    while stack:
        k = stack.pop()
        if is_prime(k):
            counts[k] = counts.get(k, 0) + 1
            continue
        r = isqrt(k)
        if r * r == k:
            stack += [r, r]
            continue
        d = _pollard_brent(k, rng)
        stack += [d, k // d]
    return Factorization(n, tuple(sorted(counts.items())))


# -- which p are surgery coefficients --------------------------------------


class Realizability(NamedTuple):
    realizable: bool
    count: int
    # False when the 2^(r-1) count does not apply (p = 3 for +, p = 5 for -);
    # count then comes from direct enumeration.
    formula_applies: bool = True


def _sign_value(sign: int | str) -> int:
    return 1 if sign in (1, "+") else -1


def berge_realizable(p: int, sign: int | str) -> Realizability:
    """Whether p = (m+n)^2 - sign*mn for some coprime 1 <= m <= n, and how many.

    sign +: 3 divides p at most once and every other prime is 1 mod 3.
    sign -: 5 divides p at most once and every other prime is +-1 mod 5.
    The number of (m, n) is 2^(r-1), r = number of the other primes.
    """
    if p < 2:
        raise ValueError("p must be at least 2")
    sign = _sign_value(sign)
    ramified, modulus, residues = (3, 3, {1}) if sign > 0 else (5, 5, {1, 4})
    f = factorize(p)
    if f.exponent(ramified) > 1:
        return Realizability(False, 0)
    split = [q for q in f.primes if q != ramified]
    if any(q % modulus not in residues for q in split):
        return Realizability(False, 0)
    if not split:
        # p is the ramified prime itself: only (1, 1)
        return Realizability(True, len(enumerate_preimages(p, sign)), False)
    return Realizability(True, 2 ** (len(split) - 1))


def berge_realizable_both(p: int) -> bool:
    """p is a surgery coefficient for both signs iff every prime factor is 1 or 4 mod 15."""
    if p < 2:
        raise ValueError("p must be at least 2")
    return all(q % 15 in (1, 4) for q in factorize(p).primes)


def enumerate_preimages(p: int, sign: int | str) -> list[tuple[int, int]]:
    """All coprime 1 <= m <= n with m^2 + mn + n^2 = p (sign +) or m^2 + 3mn + n^2 = p (sign -)."""
    k = 1 if _sign_value(sign) > 0 else 3
    out = []
    m = 1
    while (k + 2) * m * m <= p:
        # n^2 + k m n + (m^2 - p) = 0
        disc = k * k * m * m - 4 * (m * m - p)
        root = isqrt(disc)
        if root * root == disc and (root - k * m) % 2 == 0:
            n = (root - k * m) // 2
            if n >= m and gcd(m, n) == 1:
                out.append((m, n))
        m += 1
    return out
