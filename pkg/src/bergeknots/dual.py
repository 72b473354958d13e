"""Alexander polynomials of doubly primitive knots from the dual knot
K(L(p, q), k) in the lens space, and the Saito parameter k of Berge knots."""

from __future__ import annotations

from bisect import bisect_left
from dataclasses import dataclass
from math import gcd

from .errors import NotCoprime
from .exact_poly import LaurentPoly, div_exact, doteq_eq, normalize_doteq, t_power_minus_one
from .knots import StandardParam, alexander_berge
from .lens import lens_from_berge, surgery_coefficient

__all__ = [
    "SaitoDescription",
    "psi",
    "phi",
    "dual_exponents",
    "alexander_dual",
    "dual_presentation_q",
    "saito_k_for_berge_plus",
    "saito_congruence_holds",
    "find_saito_parameters",
]


@dataclass(frozen=True)
class SaitoDescription:
    """The dual knot K(L(p, q), k); requires gcd(q, p) = gcd(k, p) = 1."""

    p: int
    q: int
    k: int

    def __post_init__(self) -> None:
        if self.p < 2:
            raise ValueError("p must be at least 2")
        if not 1 <= self.k <= self.p - 1:
            raise ValueError(f"k must lie in [1, {self.p - 1}], got {self.k}")
        if gcd(self.q, self.p) != 1:
            raise NotCoprime(f"gcd({self.q}, {self.p}) != 1")
        if gcd(self.k, self.p) != 1:
            raise NotCoprime(f"gcd({self.k}, {self.p}) != 1")


def psi(i: int, p: int, q: int) -> int:
    """Lift of i * q^-1 mod p to [1, p]."""
    if gcd(q, p) != 1:
        raise NotCoprime(f"gcd({q}, {p}) != 1")
    r = i * pow(q, -1, p) % p
    return r if r else p


def phi(i: int, p: int, q: int, k: int) -> int:
    """#{j : 1 <= j <= k - 1, psi(j) < psi(i)}."""
    target = psi(i, p, q)
    return sum(1 for j in range(1, k) if psi(j, p, q) < target)


def dual_exponents(p: int, q: int, k: int) -> list[int]:
    """phi(i) p - psi(i) k for i = 0..k-1, with phi computed by rank lookup."""
    qinv = pow(q, -1, p)
    lifts = [(i * qinv % p) or p for i in range(k)]
    ranked = sorted(lifts[1:])
    return [bisect_left(ranked, lifts[i]) * p - lifts[i] * k for i in range(k)]


def _dual_poly(p: int, q: int, k: int) -> LaurentPoly:
    """(t - 1)/(t^k - 1) * sum t^{phi(i)p - psi(i)k}; NotDivisible if not exact."""
    total = LaurentPoly.from_exponents(dual_exponents(p, q, k))
    return normalize_doteq(div_exact(total * t_power_minus_one(1), t_power_minus_one(k)))


def alexander_dual(desc: SaitoDescription) -> LaurentPoly:
    return _dual_poly(desc.p, desc.q, desc.k)


def dual_presentation_q(par: StandardParam) -> int:
    """The q used with the Saito parameter: q = n/m mod p.

    lens_from_berge gives L(p, m/n); the dual-knot formula reproduces the
    Berge polynomial with k = -n/(m+n) when fed the inverse residue n/m
    (checked on every b^+ with p <= 500).  L(p, q) and L(p, 1/q) are the
    same lens space.
    """
    p = surgery_coefficient(par)
    return par.n * pow(par.m, -1, p) % p


def saito_k_for_berge_plus(m: int, n: int) -> int:
    """k = -n (m + n)^-1 mod p for b^+(m, n), lifted to [1, p - 1]."""
    if gcd(m, n) != 1:
        raise NotCoprime(f"gcd({m}, {n}) != 1")
    p = (m + n) ** 2 - m * n
    return -n * pow(m + n, -1, p) % p


def saito_congruence_holds(p: int, q: int, k: int) -> bool:
    """q = +-k^2 mod p, allowing q to be replaced by q^-1 (same lens space)."""
    k2 = k * k % p
    qs = {q % p, pow(q, -1, p)}
    return any(k2 in (x, -x % p) for x in qs)


def find_saito_parameters(par: StandardParam) -> list[int]:
    """Every k in [1, p-1] whose dual-knot formula gives the Berge polynomial.

    The congruence filter only prunes the search; each survivor is
    confirmed by comparing polynomials.
    """
    p = surgery_coefficient(par)
    q = lens_from_berge(par).q
    q_dual = dual_presentation_q(par)
    target = alexander_berge(par)
    out = []
    for k in range(1, p):
        if gcd(k, p) != 1 or not saito_congruence_holds(p, q, k):
            continue
        if doteq_eq(_dual_poly(p, q_dual, k), target):
            out.append(k)
    return out
