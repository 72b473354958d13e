"""Certificates that b^+-(m, n), 2 <= m < n, is neither a torus knot nor a
satellite knot.

A hyperbolic knot in S^3 is a prime knot that is neither torus nor
satellite.  Primality of Berge knots (tunnel number one, Norwood) is cited,
not computed.  The lens-surgery constraints leave finitely many candidates:

* a torus knot T(r, s) has lens surgeries only at p = rs +- 1 (Moser);
* a satellite with a lens surgery is the (2, 2rs +- 1)-cable of T(r, s)
  and the surgery is p = 4rs +- 1 (Gordon, Wu).

Each candidate is rejected by concrete checks that are stored in the
certificate so they can be re-verified independently.  The rejection
labels mirror the case analysis of the torsion argument:

``genus``      the genus of the candidate differs from the Berge genus
``franz``      the Franz condition on the two torsion multisets fails
``lens``       the candidate's lens space is not homeomorphic to the Berge one
``congruence`` none of the four U-congruences (torus cases i-iv) holds mod p
``parity``     U is odd but would have to equal the even number p +- 1
``bounds``     the size bound left by the congruence filter contradicts
               p - 2g = 2(m + n) - 1
``alexander``  the candidate's Alexander polynomial differs from the Berge one
``filter``     the congruence filter for knots with torus or cable
               Alexander polynomial fails, so the torsion of a lens space
               cannot arise
"""

from __future__ import annotations

from dataclasses import dataclass, field
from math import gcd
from typing import Iterator

from .errors import TrivialParameter
from .exact_poly import doteq_eq
from .knots import (
    StandardParam,
    alexander_berge,
    alexander_gw_cable,
    alexander_torus,
    genus_berge,
)
from .lens import LensSpace, lens_equivalent, lens_from_berge, surgery_coefficient
from .torsion import TorsionMultiset, franz_equivalent

__all__ = [
    "Candidate",
    "HyperbolicityCertificate",
    "berge_residue_pair",
    "torus_candidates",
    "cable_candidates",
    "verify_non_torus",
    "verify_non_satellite",
    "verify_hyperbolic",
    "alexander_torus_verdicts",
    "alexander_cable_verdicts",
    "alexander_excludes_torus",
    "alexander_excludes_cable",
    "alexander_certificate",
    "PRIMALITY_NOTE",
]

PRIMALITY_NOTE = "prime: cited (Berge knots have tunnel number one; Norwood)"


@dataclass(frozen=True)
class Candidate:
    """One torus knot T(r, s) (sign None) or cable (sign +-1) and why it was ruled out."""

    r: int
    s: int
    sign: int | None
    p: int
    reasons: tuple[str, ...]

    @property
    def rejected(self) -> bool:
        return bool(self.reasons)

    def label(self) -> str:
        if self.sign is None:
            return f"T({self.r},{self.s})"
        return f"C({self.r},{self.s},{'+' if self.sign > 0 else '-'})"


@dataclass(frozen=True)
class HyperbolicityCertificate:
    param: StandardParam
    method: str
    torus_candidates_checked: tuple[Candidate, ...] = ()
    cable_candidates_checked: tuple[Candidate, ...] = ()
    notes: tuple[str, ...] = field(default=(PRIMALITY_NOTE,))

    @property
    def valid(self) -> bool:
        return all(c.rejected for c in self.candidates())

    def candidates(self) -> Iterator[Candidate]:
        yield from self.torus_candidates_checked
        yield from self.cable_candidates_checked

    def summary(self) -> str:
        parts = [
            f"{c.label()}:{'+'.join(c.reasons) if c.reasons else 'NOT-REJECTED'}"
            for c in self.candidates()
        ]
        status = "ok" if self.valid else "FAIL"
        body = " ".join(parts) if parts else "no candidates"
        return f"{self.param} p={surgery_coefficient(self.param)} [{self.method}] {status}: {body}"


def _require_nontrivial(par: StandardParam, allow_trivial: bool) -> None:
    if par.is_trivial and not allow_trivial:
        raise TrivialParameter(f"{par} is the torus knot T{par.torus_type()}")


def berge_residue_pair(par: StandardParam) -> TorsionMultiset:
    """Torsion of the p-surgery rescaled so the knot meridian maps to zeta_p.

    The meridian is T^{m+n}, so multiply the residues {m, n} by (m+n)^-1.
    """
    p = surgery_coefficient(par)
    inv = pow(par.m + par.n, -1, p)
    return TorsionMultiset(p, (par.m * inv % p, par.n * inv % p))


def _coprime_pairs_with_product(N: int) -> Iterator[tuple[int, int]]:
    r = 2
    while r * r < N:
        if N % r == 0 and gcd(r, N // r) == 1:
            yield r, N // r
        r += 1


def torus_candidates(p: int) -> list[tuple[int, int]]:
    """Coprime 2 <= r < s with rs = p - 1 or p + 1."""
    out: set[tuple[int, int]] = set()
    for N in (p - 1, p + 1):
        out.update(_coprime_pairs_with_product(N))
    return sorted(out)


def cable_candidates(p: int) -> list[tuple[int, int, int]]:
    """(r, s, sign) with coprime 2 <= r < s and 4rs + sign = p."""
    out = []
    for sign in (1, -1):
        N = p - sign
        if N % 4 == 0:
            out.extend((r, s, sign) for r, s in _coprime_pairs_with_product(N // 4))
    return sorted(out)


def _torus_reasons(par: StandardParam, r: int, s: int) -> tuple[str, ...]:
    p = surgery_coefficient(par)
    two_g = 2 * genus_berge(par)
    reasons = []
    if (r - 1) * (s - 1) != two_g:
        reasons.append("genus")
    if not franz_equivalent(TorsionMultiset(p, (r, s)), berge_residue_pair(par)):
        reasons.append("franz")
    if not lens_equivalent(lens_from_berge(par), LensSpace(p, -r * r)):
        reasons.append("lens")
    # (m+n)^2 = sign*mn mod p turns m/(m+n) into +-(m/n + 1), so Franz
    # would need r = +-(m/n + 1), s = +-(n/m + 1) up to swapping r and s.
    # As (m/n)(n/m) = 1 these are the four U-cases (r -+ 1)(s -+ 1) = +-1.
    x = (par.m * pow(par.n, -1, p) + 1) % p
    y = (par.n * pow(par.m, -1, p) + 1) % p
    matched = any(
        x in (a % p, -a % p) and y in (b % p, -b % p) for a, b in ((r, s), (s, r))
    )
    if not matched:
        reasons.append("congruence")
    return tuple(reasons)


def _cable_reasons(par: StandardParam, r: int, s: int, sign: int) -> tuple[str, ...]:
    p = surgery_coefficient(par)
    two_g = 2 * genus_berge(par)
    reasons = []
    if 2 * (r - 1) * (s - 1) + (2 * r * s - 1 + sign) != two_g:
        reasons.append("genus")
    if not franz_equivalent(TorsionMultiset(p, (2 * r, 2 * s)), berge_residue_pair(par)):
        reasons.append("franz")
    if not lens_equivalent(lens_from_berge(par), LensSpace(p, -sign * 4 * r * r)):
        reasons.append("lens")
    # Franz would force one of (2r -+ 1)(2s -+ 1) = +-1 mod p.  Each such U
    # is odd and lies strictly between 1 and 2p - 1, so it would have to be
    # p + 1 or p - 1, both even.
    us = [
        (2 * r - 1) * (2 * s - 1),
        (2 * r - 1) * (2 * s + 1),
        (2 * r + 1) * (2 * s - 1),
        (2 * r + 1) * (2 * s + 1),
    ]
    if p % 2 == 1 and all(u % 2 == 1 and 1 < u < 2 * p - 1 for u in us):
        reasons.append("parity")
    return tuple(reasons)


def verify_non_torus(par: StandardParam, *, allow_trivial: bool = False) -> tuple[Candidate, ...]:
    """Check every torus knot T(r, s) whose lens surgery could be p."""
    _require_nontrivial(par, allow_trivial)
    p = surgery_coefficient(par)
    return tuple(
        Candidate(r, s, None, p, _torus_reasons(par, r, s)) for r, s in torus_candidates(p)
    )


def verify_non_satellite(par: StandardParam, *, allow_trivial: bool = False) -> tuple[Candidate, ...]:
    """Check every (2, 2rs +- 1)-cable of T(r, s) with lens surgery 4rs +- 1 = p."""
    _require_nontrivial(par, allow_trivial)
    p = surgery_coefficient(par)
    return tuple(
        Candidate(r, s, sign, p, _cable_reasons(par, r, s, sign))
        for r, s, sign in cable_candidates(p)
    )


def verify_hyperbolic(par: StandardParam) -> HyperbolicityCertificate:
    _require_nontrivial(par, False)
    return HyperbolicityCertificate(
        param=par,
        method="torsion",
        torus_candidates_checked=verify_non_torus(par),
        cable_candidates_checked=verify_non_satellite(par),
    )


# -- Alexander-polynomial route ------------------------------------------


def _genus_matched_torus(two_g: int) -> list[tuple[int, int]]:
    """Coprime 2 <= r < s with (r - 1)(s - 1) = 2g."""
    out = []
    a = 1
    while a * a < two_g:
        if two_g % a == 0:
            r, s = a + 1, two_g // a + 1
            if gcd(r, s) == 1:
                out.append((r, s))
        a += 1
    return out


def _genus_matched_cables(two_g: int) -> list[tuple[int, int, int]]:
    """(r, s, sign) with coprime 2 <= r < s and 2(r-1)(s-1) + 2rs - 1 + sign = 2g."""
    out = []
    r = 2
    # smallest cable degree for this r is at s = r + 1
    while 2 * (r - 1) * r + 2 * r * (r + 1) - 2 <= two_g:
        for sign in (1, -1):
            # 2(r-1)(s-1) + 2rs - 1 + sign = (4r - 2)s - 2r + 1 + sign
            rhs = two_g + 2 * r - 1 - sign
            if rhs % (4 * r - 2) == 0:
                s = rhs // (4 * r - 2)
                if s > r and gcd(r, s) == 1:
                    out.append((r, s, sign))
        r += 1
    return out


def _torus_filter_holds(p: int, r: int, s: int) -> bool:
    """Congruence satisfied by any knot with Alexander polynomial of T(r, s)
    whose p-surgery has lens-space torsion."""
    return any(x % p in (1, p - 1) for x in (r, s, r * s))


def _cable_filter_holds(p: int, r: int, s: int, sign: int) -> bool:
    return any(x % p in (1, p - 1) for x in (r, s, 2 * r * s)) or (4 * r * s + sign) % p == 0


def alexander_torus_verdicts(par: StandardParam, *, allow_trivial: bool = False) -> tuple[Candidate, ...]:
    """Genus-matched torus knots, each compared with the Berge polynomial."""
    _require_nontrivial(par, allow_trivial)
    p = surgery_coefficient(par)
    two_g = 2 * genus_berge(par)
    delta = alexander_berge(par)
    out = []
    for r, s in _genus_matched_torus(two_g):
        reasons = []
        if not _torus_filter_holds(p, r, s):
            reasons.append("filter")
        elif abs(p - r * s) == 1:
            if not franz_equivalent(TorsionMultiset(p, (r, s)), berge_residue_pair(par)):
                reasons.append("franz")
        elif 2 * p <= r * s + 1 or (r == 2 and p == s + 1):
            # then p - 2g <= 3, but p - 2g = 2(m + n) - 1
            if p - two_g != 2 * (par.m + par.n) - 1 or p - two_g > 3:
                reasons.append("bounds")
        if not doteq_eq(delta, alexander_torus(r, s)):
            reasons.append("alexander")
        out.append(Candidate(r, s, None, p, tuple(reasons)))
    return tuple(out)


def alexander_cable_verdicts(par: StandardParam, *, allow_trivial: bool = False) -> tuple[Candidate, ...]:
    _require_nontrivial(par, allow_trivial)
    p = surgery_coefficient(par)
    two_g = 2 * genus_berge(par)
    delta = alexander_berge(par)
    out = []
    for r, s, sign in _genus_matched_cables(two_g):
        reasons = []
        if not _cable_filter_holds(p, r, s, sign):
            reasons.append("filter")
        elif p == 4 * r * s + sign:
            if not franz_equivalent(TorsionMultiset(p, (2 * r, 2 * s)), berge_residue_pair(par)):
                reasons.append("franz")
        elif p <= 2 * r * s + 1 and p - two_g <= -1:
            # p - 2g = 2(m + n) - 1 is positive
            reasons.append("bounds")
        if not doteq_eq(delta, alexander_gw_cable(r, s, sign)):
            reasons.append("alexander")
        out.append(Candidate(r, s, sign, p, tuple(reasons)))
    return tuple(out)


def _gap_contradiction(par: StandardParam) -> bool:
    """p - 2g = 2(m + n) - 1 >= 9 for 2 <= m < n; the excluded routes need p - 2g <= 3."""
    p = surgery_coefficient(par)
    return p - 2 * genus_berge(par) == 2 * (par.m + par.n) - 1 >= 9


def alexander_excludes_torus(par: StandardParam, *, allow_trivial: bool = False) -> bool:
    """True iff no torus knot has the Alexander polynomial of the Berge knot."""
    verdicts = alexander_torus_verdicts(par, allow_trivial=allow_trivial)
    excluded = all("alexander" in c.reasons for c in verdicts)
    if excluded and not par.is_trivial:
        assert _gap_contradiction(par)
    return excluded


def alexander_excludes_cable(par: StandardParam, *, allow_trivial: bool = False) -> bool:
    """True iff no (2, 2rs +- 1)-cable of a torus knot shares the Berge polynomial."""
    verdicts = alexander_cable_verdicts(par, allow_trivial=allow_trivial)
    excluded = all("alexander" in c.reasons for c in verdicts)
    if excluded and not par.is_trivial:
        assert _gap_contradiction(par)
    return excluded


def alexander_certificate(par: StandardParam) -> HyperbolicityCertificate:
    return HyperbolicityCertificate(
        param=par,
        method="alexander",
        torus_candidates_checked=alexander_torus_verdicts(par),
        cable_candidates_checked=alexander_cable_verdicts(par),
    )
