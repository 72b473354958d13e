"""Reidemeister torsion of lens-space surgeries as residue multisets.

Every torsion handled here has the form prod_i (zeta_p^{a_i} - 1)^-1, and
is stored as the multiset {a_i} of residues mod p.  Equality up to
+-zeta^k is then the Franz condition {+-a_i} = {+-b_i}; the cyclotomic
oracle checks the same thing by actual arithmetic in Z[zeta_p].
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from functools import lru_cache
from math import gcd

from .errors import InvalidCoefficient, ModulusMismatch, ModulusTooLarge, NotCoprime
from .exact_poly import LaurentPoly, reduce_mod_cyclotomic, t_power_minus_one
from .knots import StandardParam

__all__ = [
    "TorsionMultiset",
    "torsion_lens",
    "torsion_berge",
    "torsion_torus_surgery",
    "torsion_cable_surgery",
    "franz_equivalent",
    "torsion_equivalent_up_to_unit",
    "cyclotomic_torsion_oracle",
    "ORACLE_MAX_MODULUS",
]

ORACLE_MAX_MODULUS = 200


@dataclass(frozen=True)
class TorsionMultiset:
    """prod (zeta_p^a - 1)^-1 over ``residues``.

    ``meridian`` is the exponent e with meridian -> zeta_p^e under the
    homomorphism the torsion was computed for (1 unless stated).
    """

    p: int
    residues: tuple[int, ...]
    meridian: int = field(default=1, compare=False)

    def __post_init__(self) -> None:
        if self.p < 2:
            raise ValueError("modulus must be at least 2")
        rs = tuple(sorted(r % self.p for r in self.residues))
        for r in rs:
            if gcd(r, self.p) != 1:
                raise NotCoprime(f"residue {r} is not a unit modulo {self.p}")
        object.__setattr__(self, "residues", rs)
        object.__setattr__(self, "meridian", self.meridian % self.p)

    def scaled(self, u: int) -> TorsionMultiset:
        """Apply the Galois action zeta -> zeta^u."""
        return TorsionMultiset(self.p, tuple(u * r for r in self.residues), self.meridian * u)

    def rebased(self) -> TorsionMultiset:
        """Rescale so the meridian maps to zeta_p itself."""
        return self.scaled(pow(self.meridian, -1, self.p))

    def sign_closure(self) -> Counter:
        c = Counter()
        for r in self.residues:
            c[r] += 1
            c[(-r) % self.p] += 1
        return c


def torsion_lens(p: int, q: int) -> TorsionMultiset:
    """L(p, q): (zeta - 1)^-1 (zeta^{q^-1} - 1)^-1."""
    if gcd(q, p) != 1:
        raise NotCoprime(f"gcd({q}, {p}) != 1")
    return TorsionMultiset(p, (1, pow(q, -1, p)))


def torsion_berge(par: StandardParam) -> TorsionMultiset:
    """p-surgery on b^sign(m, n) for the generator T with T^p = 1.

    The meridian of the knot is T^{m+n}.
    """
    p = (par.m + par.n) ** 2 - par.sign * par.m * par.n
    return TorsionMultiset(p, (par.m, par.n), meridian=par.m + par.n)


def torsion_torus_surgery(r: int, s: int, p: int) -> TorsionMultiset:
    if abs(p - r * s) != 1:
        raise InvalidCoefficient(f"p = {p} is not rs +- 1 for (r, s) = ({r}, {s})")
    if gcd(r, s) != 1:
        raise NotCoprime(f"gcd({r}, {s}) != 1")
    return TorsionMultiset(p, (r, s))


def torsion_cable_surgery(r: int, s: int, sign: int | str) -> TorsionMultiset:
    """p = 4rs + sign surgery on the (2, 2rs + sign)-cable of T(r, s)."""
    sign = 1 if sign in (1, "+") else -1
    if gcd(r, s) != 1:
        raise NotCoprime(f"gcd({r}, {s}) != 1")
    if not 2 <= r < s:
        raise ValueError(f"need 2 <= r < s, got ({r}, {s})")
    return TorsionMultiset(4 * r * s + sign, (2 * r, 2 * s))


def _same_modulus(a: TorsionMultiset, b: TorsionMultiset) -> None:
    if a.p != b.p:
        raise ModulusMismatch(f"moduli {a.p} and {b.p} differ")


def franz_equivalent(a: TorsionMultiset, b: TorsionMultiset) -> bool:
    """{+-a_i} == {+-b_i} as multisets mod p."""
    _same_modulus(a, b)
    return a.sign_closure() == b.sign_closure()


def torsion_equivalent_up_to_unit(a: TorsionMultiset, b: TorsionMultiset) -> int | None:
    """Smallest u in (Z/p)^x with u*a Franz-equivalent to b, or None."""
    _same_modulus(a, b)
    target = b.sign_closure()
    for u in range(1, a.p):
        if gcd(u, a.p) == 1 and a.scaled(u).sign_closure() == target:
            return u
    return None


@lru_cache(maxsize=None)
def _associate_class(p: int, residues: tuple[int, ...]) -> tuple[int, ...]:
    """Smallest coefficient vector among +-t^k * prod (t^a - 1) in Z[t]/Phi_p."""
    prod = LaurentPoly.constant(1)
    for a in residues:
        prod = prod * t_power_minus_one(a)
    elt = reduce_mod_cyclotomic(prod, p)
    keys = []
    for k in range(p):
        shifted = elt.times_t_power(k)
        keys.append(shifted.key())
        keys.append((-shifted).key())
    return min(keys)


def cyclotomic_torsion_oracle(a: TorsionMultiset, b: TorsionMultiset) -> bool:
    """Decide prod (zeta^{a_i} - 1) = +-zeta^k prod (zeta^{b_i} - 1) by arithmetic in Z[zeta_p]."""
    _same_modulus(a, b)
    if a.p > ORACLE_MAX_MODULUS:
        raise ModulusTooLarge(f"oracle limited to p <= {ORACLE_MAX_MODULUS}, got {a.p}")
    return _associate_class(a.p, a.residues) == _associate_class(b.p, b.residues)
