"""Lens spaces produced by surgery on Berge knots, torus knots and cables.

Convention: L(p, q) is -p/q surgery on the unknot.  Residues are always
stored in [1, p - 1].
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd, isqrt
from typing import NamedTuple

from .errors import DegenerateSurgery, NotCoprime
from .knots import StandardParam, genus_berge

__all__ = [
    "LensSpace",
    "SurgeryResult",
    "inverse_mod",
    "surgery_coefficient",
    "lens_from_berge",
    "lens_from_Amn",
    "lens_equivalent",
    "map_F",
    "identify_from_pg",
    "identify_from_lens",
    "berge_params_with_p",
    "moser_lens",
    "gw_cable_lens",
]


def inverse_mod(a: int, p: int) -> int:
    """Inverse of a modulo p in [0, p - 1], by the extended Euclidean algorithm."""
    if gcd(a, p) != 1:
        raise NotCoprime(f"{a} is not invertible modulo {p}")
    return pow(a, -1, p)


@dataclass(frozen=True, order=True)
class LensSpace:
    p: int
    q: int

    def __post_init__(self) -> None:
        if self.p < 2:
            raise ValueError(f"lens spaces need p >= 2, got {self.p}")
        q = self.q % self.p
        if gcd(q, self.p) != 1:
            raise NotCoprime(f"gcd({self.q}, {self.p}) != 1")
        object.__setattr__(self, "q", q)

    def __str__(self) -> str:
        return f"L({self.p},{self.q})"


class SurgeryResult(NamedTuple):
    """A lens space together with whether its orientation was reversed to make p positive."""

    lens: LensSpace
    reversed: bool


def surgery_coefficient(par: StandardParam) -> int:
    """p = (m + n)^2 - sign*m*n."""
    return (par.m + par.n) ** 2 - par.sign * par.m * par.n


def lens_from_berge(par: StandardParam) -> LensSpace:
    p = surgery_coefficient(par)
    return LensSpace(p, par.m * inverse_mod(par.n, p))


def lens_from_Amn(m: int, n: int, r: int) -> SurgeryResult:
    """(A_{m,n}; mn, r) = L(rmn - (m+n)^2, m/n), with p made positive."""
    if gcd(m, n) != 1:
        raise NotCoprime(f"gcd({m}, {n}) != 1")
    p = r * m * n - (m + n) ** 2
    if abs(p) <= 1:
        raise DegenerateSurgery(f"|{r}*{m}*{n} - ({m}+{n})^2| = {abs(p)}")
    ap = abs(p)
    q = m * inverse_mod(n % ap, ap)
    if p < 0:
        return SurgeryResult(LensSpace(ap, -q), True)
    return SurgeryResult(LensSpace(ap, q), False)


def lens_equivalent(a: LensSpace, b: LensSpace, oriented: bool = False) -> bool:
    """Homeomorphism test by the classification q' = +-q^(+-1) mod p.

    With ``oriented`` only q' = q^(+-1) is allowed.
    """
    if a.p != b.p:
        return False
    p = a.p
    prod = a.q * b.q % p
    if b.q == a.q or prod == 1:
        return True
    if oriented:
        return False
    return (a.q + b.q) % p == 0 or prod == p - 1


def map_F(par: StandardParam) -> tuple[int, int]:
    """(p, 2g) of the knot."""
    return surgery_coefficient(par), 2 * genus_berge(par)


def identify_from_pg(p: int, two_g: int) -> StandardParam | None:
    """Invert :func:`map_F`.

    p - 2g = 2(m + n) - 1 fixes m + n, then p - (m + n)^2 = -sign*mn fixes
    the product, so m and n are roots of a quadratic.
    """
    if (p - two_g) % 2 == 0:
        return None
    s = (p - two_g + 1) // 2
    found = []
    for sign in (1, -1):
        prod = sign * (s * s - p)
        if prod < 1:
            continue
        disc = s * s - 4 * prod
        if disc < 0:
            continue
        root = isqrt(disc)
        if root * root != disc or (s - root) % 2:
            continue
        m, n = (s - root) // 2, (s + root) // 2
        if m >= 1 and gcd(m, n) == 1:
            found.append(StandardParam(sign, m, n))
    # both signs would need mn = s^2 - p = p - s^2, i.e. mn = 0
    assert len(found) <= 1
    return found[0] if found else None


def berge_params_with_p(p: int) -> list[StandardParam]:
    """Every standard parameter (including m = 1) with surgery coefficient p.

    p >= (m + n)^2 - mn >= 3(m + n)^2 / 4 bounds m + n by sqrt(4p/3) for
    either sign, and m <= n means m <= (m + n) / 2.
    """
    out = []
    bound = isqrt(4 * p // 3) + 1
    for s in range(2, bound + 1):
        for m in range(1, s // 2 + 1):
            n = s - m
            if gcd(m, n) != 1:
                continue
            for sign in (1, -1):
                if s * s - sign * m * n == p:
                    out.append(StandardParam(sign, m, n))
    return sorted(out, key=lambda par: (-par.sign, par.m))


def identify_from_lens(L: LensSpace, bound: int | None = None) -> list[StandardParam]:
    """Standard parameters whose p-surgery is L up to orientation.

    Trivial parameters (m = 1, torus knots) are included; check
    ``StandardParam.is_trivial`` to separate them.  ``bound`` optionally caps
    m + n; the default cap from :func:`berge_params_with_p` is already exhaustive.
    """
    out = []
    for par in berge_params_with_p(L.p):
        if bound is not None and par.m + par.n > bound:
            continue
        if lens_equivalent(lens_from_berge(par), L):
            out.append(par)
    return out


def moser_lens(r: int, s: int, p: int, q_surgery: int) -> LensSpace | None:
    """Lens space from p/q surgery on T(r, s), or None when |p - qrs| != 1."""
    if gcd(r, s) != 1:
        raise NotCoprime(f"gcd({r}, {s}) != 1")
    if abs(p - q_surgery * r * s) != 1:
        return None
    return LensSpace(abs(p), -q_surgery * r * r)


def gw_cable_lens(r: int, s: int, sign: int | str) -> tuple[int, LensSpace]:
    """Surgery coefficient 4rs + sign and lens space L(p, -sign*4r^2) of the (2, 2rs+sign)-cable."""
    sign = 1 if sign in (1, "+") else -1
    if gcd(r, s) != 1:
        raise NotCoprime(f"gcd({r}, {s}) != 1")
    if not 2 <= r < s:
        raise ValueError(f"need 2 <= r < s, got ({r}, {s})")
    p = 4 * r * s + sign
    return p, LensSpace(p, -sign * 4 * r * r)
