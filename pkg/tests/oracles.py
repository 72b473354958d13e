"""Independent reference computations used to check the library.

Nothing here imports the code under test except to convert values: the
polynomial oracles go through sympy, and the number-theoretic ones are
plain brute force over the definitions.
"""

from __future__ import annotations

from math import gcd

import sympy

T = sympy.Symbol("t")


def to_sympy(poly) -> sympy.Expr:
    return sum((c * T**e for e, c in poly.items()), sympy.Integer(0))


def sympy_normalize(expr: sympy.Expr) -> dict[int, int]:
    """Coefficients of expr up to +-t^k: min exponent 0, positive leading coefficient."""
    num, den = sympy.fraction(sympy.cancel(sympy.together(expr)))
    poly_den = sympy.Poly(den, T)
    # the denominator left after cancelling must be a monomial +-t^k
    assert len(poly_den.terms()) == 1, f"not a Laurent polynomial: {expr}"
    terms = sympy.Poly(num, T).terms()
    low = min(e for (e,), _ in terms)
    coeffs = {e - low: int(c) for (e,), c in terms}
    top = coeffs[max(coeffs)]
    return {e: c if top > 0 else -c for e, c in coeffs.items()}


def oracle_staircase(m: int, n: int) -> list[int]:
    return sorted(set(range(0, m * n + 1, m)) | set(range(0, m * n + 1, n)))


def oracle_berge(sign: int, m: int, n: int) -> dict[int, int]:
    ks = oracle_staircase(m, n)
    total = sum(T ** (k - sign * i * (m + n)) for i, k in enumerate(ks))
    return sympy_normalize((T - 1) * total / (T ** (m + n) - 1))


def oracle_torus(r: int, s: int) -> dict[int, int]:
    return sympy_normalize((T ** (r * s) - 1) * (T - 1) / ((T**r - 1) * (T**s - 1)))


def oracle_p(sign: int, m: int, n: int) -> int:
    return m * m + (2 - sign) * m * n + n * n


def oracle_preimages(p: int, sign: int) -> list[tuple[int, int]]:
    """Double loop straight from the definition."""
    out = []
    m = 1
    while oracle_p(sign, m, m) <= p:
        n = m
        while oracle_p(sign, m, n) <= p:
            if oracle_p(sign, m, n) == p and gcd(m, n) == 1:
                out.append((m, n))
            n += 1
        m += 1
    return out


def oracle_lens_class(p: int, q: int) -> frozenset[int]:
    """All q' with L(p, q') homeomorphic to L(p, q), orientation ignored."""
    qi = pow(q, -1, p)
    return frozenset(x % p for x in (q, -q, qi, -qi))


def oracle_all_params(max_p: int, include_unknot: bool = False):
    """(sign, m, n, p) for every coprime 1 <= m <= n with p <= max_p."""
    out = []
    for sign in (1, -1):
        m = 1
        while oracle_p(sign, m, m) <= max_p:
            n = m
            while oracle_p(sign, m, n) <= max_p:
                if gcd(m, n) == 1 and (n > 1 or include_unknot):
                    out.append((sign, m, n, oracle_p(sign, m, n)))
                n += 1
            m += 1
    return out


def oracle_franz(p: int, a: tuple[int, ...], b: tuple[int, ...]) -> bool:
    """Associate test by numerically evaluating prod (zeta^x - 1) at every primitive root."""
    import cmath

    def value(res, j):
        z = cmath.exp(2j * cmath.pi * j / p)
        out = 1
        for x in res:
            out *= z**x - 1
        return out

    # a ~ b up to +-zeta^k iff |a/b| = 1 and (a/b)^(2p) = 1 at zeta, checked at zeta itself
    ratio = value(a, 1) / value(b, 1)
    return abs(abs(ratio) - 1) < 1e-9 and abs(ratio ** (2 * p) - 1) < 1e-6
