"""Exact integer Laurent polynomials in one and two variables.

Everything here is sparse (``exponent -> coefficient`` maps with no zero
entries) and immutable.  Coefficients are Python ints, so there is no
overflow anywhere.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Iterator, Mapping

from .errors import NotDivisible, ZeroPolynomial

__all__ = [
    "LaurentPoly",
    "BivariatePoly",
    "CyclotomicElement",
    "add",
    "mul",
    "div_exact",
    "normalize_doteq",
    "doteq_eq",
    "cyclotomic_poly",
    "reduce_mod_cyclotomic",
    "substitute_powers",
    "t_power_minus_one",
]


def _pruned(items: Iterable[tuple[object, int]]) -> dict:
    out: dict = {}
    for e, c in items:
        v = out.get(e, 0) + c
        if v:
            out[e] = v
        elif e in out:
            del out[e]
    return out


class LaurentPoly:
    """An element of Z[t, t^-1].

    >>> t = LaurentPoly.monomial(1)
    >>> (t - 1) * (t * t + t + 1)
    LaurentPoly('t^3 - 1')
    """

    __slots__ = ("_c", "_hash")

    def __init__(self, coeffs: Mapping[int, int] | None = None):
        self._c: dict[int, int] = (
            {int(e): int(c) for e, c in coeffs.items() if c} if coeffs else {}
        )
        self._hash: int | None = None

    @classmethod
    def _raw(cls, c: dict[int, int]) -> LaurentPoly:
        obj = cls.__new__(cls)
        obj._c = c
        obj._hash = None
        return obj

    @classmethod
    def monomial(cls, exp: int, coeff: int = 1) -> LaurentPoly:
        return cls._raw({exp: coeff} if coeff else {})

    @classmethod
    def constant(cls, c: int) -> LaurentPoly:
        return cls.monomial(0, c)

    @classmethod
    def from_dense(cls, coeffs: Iterable[int], shift: int = 0) -> LaurentPoly:
        """Coefficients listed from t^shift upward."""
        return cls._raw({i + shift: c for i, c in enumerate(coeffs) if c})

    @classmethod
    def from_exponents(cls, exps: Iterable[int]) -> LaurentPoly:
        """Sum of t^e over ``exps`` (repeats add up)."""
        return cls._raw(_pruned((e, 1) for e in exps))

    # -- inspection -------------------------------------------------------

    @property
    def coeffs(self) -> dict[int, int]:
        return dict(self._c)

    def items(self) -> Iterator[tuple[int, int]]:
        return iter(sorted(self._c.items()))

    def __getitem__(self, exp: int) -> int:
        return self._c.get(exp, 0)

    def __len__(self) -> int:
        return len(self._c)

    def __bool__(self) -> bool:
        return bool(self._c)

    def is_zero(self) -> bool:
        return not self._c

    @property
    def min_exp(self) -> int:
        if not self._c:
            raise ZeroPolynomial("zero polynomial has no exponents")
        return min(self._c)

    @property
    def max_exp(self) -> int:
        if not self._c:
            raise ZeroPolynomial("zero polynomial has no exponents")
        return max(self._c)

    def degree_span(self) -> int:
        return self.max_exp - self.min_exp

    @property
    def leading_coeff(self) -> int:
        return self._c[self.max_exp]

    def dense(self) -> list[int]:
        """Coefficients from t^min_exp to t^max_exp."""
        lo, hi = self.min_exp, self.max_exp
        return [self._c.get(e, 0) for e in range(lo, hi + 1)]

    def value_at_one(self) -> int:
        return sum(self._c.values())

    # -- arithmetic -------------------------------------------------------

    def __add__(self, other: LaurentPoly | int) -> LaurentPoly:
        other = _as_poly(other)
        if other is NotImplemented:
            return NotImplemented
        c = dict(self._c)
        for e, v in other._c.items():
            s = c.get(e, 0) + v
            if s:
                c[e] = s
            else:
                c.pop(e, None)
        return LaurentPoly._raw(c)

    __radd__ = __add__

    def __neg__(self) -> LaurentPoly:
        return LaurentPoly._raw({e: -c for e, c in self._c.items()})

    def __sub__(self, other: LaurentPoly | int) -> LaurentPoly:
        other = _as_poly(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other: int) -> LaurentPoly:
        return (-self) + other

    def __mul__(self, other: LaurentPoly | int) -> LaurentPoly:
        if isinstance(other, int):
            return LaurentPoly._raw({e: c * other for e, c in self._c.items()} if other else {})
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        a, b = self._c, other._c
        if len(a) < len(b):
            a, b = b, a
        out: dict[int, int] = {}
        for eb, cb in b.items():
            for ea, ca in a.items():
                e = ea + eb
                out[e] = out.get(e, 0) + ca * cb
        return LaurentPoly._raw({e: c for e, c in out.items() if c})

    __rmul__ = __mul__

    def __pow__(self, k: int) -> LaurentPoly:
        if k < 0:
            if len(self._c) != 1:
                raise ValueError("only monomials have Laurent inverses")
            ((e, c),) = self._c.items()
            if c not in (1, -1):
                raise ValueError("only unit monomials have Laurent inverses")
            return LaurentPoly.monomial(e * k, c ** (-k))
        result = LaurentPoly.constant(1)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def shift(self, k: int) -> LaurentPoly:
        """Multiply by t^k."""
        return LaurentPoly._raw({e + k: c for e, c in self._c.items()})

    def compose_power(self, k: int) -> LaurentPoly:
        """Substitute t -> t^k."""
        if k == 0:
            return LaurentPoly.constant(self.value_at_one())
        return LaurentPoly._raw({e * k: c for e, c in self._c.items()})

    def reversed(self) -> LaurentPoly:
        """Substitute t -> t^-1."""
        return self.compose_power(-1)

    # -- comparison -------------------------------------------------------

    def __eq__(self, other: object) -> bool:
        if isinstance(other, int):
            return self._c == ({0: other} if other else {})
        if isinstance(other, LaurentPoly):
            return self._c == other._c
        return NotImplemented

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(frozenset(self._c.items()))
        return self._hash

    def __repr__(self) -> str:
        return f"LaurentPoly({str(self)!r})"

    def __str__(self) -> str:
        if not self._c:
            return "0"
        parts = []
        for e in sorted(self._c, reverse=True):
            c = self._c[e]
            sign = "-" if c < 0 else "+"
            mag = abs(c)
            if e == 0:
                body = str(mag)
            else:
                var = "t" if e == 1 else f"t^{e}"
                body = var if mag == 1 else f"{mag}*{var}"
            parts.append((sign, body))
        first_sign, first = parts[0]
        out = ("-" if first_sign == "-" else "") + first
        for sign, body in parts[1:]:
            out += f" {sign} {body}"
        return out


def _as_poly(x: object) -> LaurentPoly:
    if isinstance(x, LaurentPoly):
        return x
    if isinstance(x, int):
        return LaurentPoly.constant(x)
    return NotImplemented  # type: ignore[return-value]


ONE = LaurentPoly.constant(1)
T = LaurentPoly.monomial(1)


def t_power_minus_one(k: int) -> LaurentPoly:
    """t^k - 1 (zero when k == 0)."""
    if k == 0:
        return LaurentPoly()
    return LaurentPoly._raw({k: 1, 0: -1})


def add(a: LaurentPoly, b: LaurentPoly) -> LaurentPoly:
    return a + b


def mul(a: LaurentPoly, b: LaurentPoly) -> LaurentPoly:
    return a * b


def div_exact(a: LaurentPoly, b: LaurentPoly) -> LaurentPoly:
    """Return q with q * b == a, or raise NotDivisible.

    Long division from the top exponent down.  Each step cancels the
    highest remaining term of ``a``; the loop touches every exponent of the
    quotient range once, so dividing by a sparse ``b`` such as t^N - 1 is
    linear in the degree of ``a``.
    """
    if not b:
        raise ZeroDivisionError("division by the zero polynomial")
    if not a:
        return LaurentPoly()
    bmin, bmax = b.min_exp, b.max_exp
    amin, amax = a.min_exp, a.max_exp
    span_b = bmax - bmin
    if amax - amin < span_b:
        raise NotDivisible(f"({a}) / ({b})")
    lead = b._c[bmax]
    tail = [(e - bmax, c) for e, c in b._c.items() if e != bmax]
    rem = dict(a._c)
    q: dict[int, int] = {}
    for e in range(amax, amin + span_b - 1, -1):
        c = rem.pop(e, 0)
        if not c:
            continue
        qc, r = divmod(c, lead)
        if r:
            raise NotDivisible(f"({a}) / ({b})")
        q[e - bmax] = qc
        for de, bc in tail:
            k = e + de
            v = rem.get(k, 0) - qc * bc
            if v:
                rem[k] = v
            else:
                rem.pop(k, None)
    if rem:
        raise NotDivisible(f"({a}) / ({b})")
    return LaurentPoly._raw(q)


def normalize_doteq(a: LaurentPoly) -> LaurentPoly:
    """Representative of a up to multiplication by +-t^k.

    The chosen one has lowest exponent 0 and a positive leading coefficient.
    """
    if not a:
        raise ZeroPolynomial("the zero polynomial has no doteq class representative")
    lo = a.min_exp
    sign = 1 if a.leading_coeff > 0 else -1
    return LaurentPoly._raw({e - lo: sign * c for e, c in a._c.items()})


def doteq_eq(a: LaurentPoly, b: LaurentPoly) -> bool:
    return normalize_doteq(a) == normalize_doteq(b)


def _divisors(d: int) -> list[int]:
    small = [i for i in range(1, int(d**0.5) + 1) if d % i == 0]
    return sorted(set(small + [d // i for i in small]))


@lru_cache(maxsize=None)
def cyclotomic_poly(d: int) -> LaurentPoly:
    """The d-th cyclotomic polynomial, by dividing t^d - 1 by the smaller ones."""
    if d < 1:
        raise ValueError("d must be positive")
    f = t_power_minus_one(d)
    for e in _divisors(d)[:-1]:
        f = div_exact(f, cyclotomic_poly(e))
    return f


@dataclass(frozen=True)
class CyclotomicElement:
    """A residue class in Z[t]/(Phi_d), i.e. an element of Z[zeta_d].

    ``residue`` has exponents in [0, deg Phi_d).
    """

    d: int
    residue: LaurentPoly

    def __mul__(self, other: CyclotomicElement) -> CyclotomicElement:
        if not isinstance(other, CyclotomicElement):
            return NotImplemented
        if other.d != self.d:
            raise ValueError("cyclotomic moduli differ")
        return reduce_mod_cyclotomic(self.residue * other.residue, self.d)

    def __neg__(self) -> CyclotomicElement:
        return CyclotomicElement(self.d, -self.residue)

    def times_t_power(self, k: int) -> CyclotomicElement:
        return reduce_mod_cyclotomic(self.residue.shift(k), self.d)

    def is_zero(self) -> bool:
        return not self.residue

    def key(self) -> tuple[int, ...]:
        """Dense coefficient tuple of length deg Phi_d, usable for ordering."""
        n = cyclotomic_poly(self.d).max_exp
        return tuple(self.residue[i] for i in range(n))


def reduce_mod_cyclotomic(a: LaurentPoly, d: int) -> CyclotomicElement:
    """Image of a in Z[t]/(Phi_d).

    Exponents are first folded modulo d (t^d = 1 in the quotient), which
    makes the shift to nonnegative exponents an exact identity rather than
    a unit to be tracked.  Then a monic remainder by Phi_d.
    """
    if d < 2:
        raise ValueError("d must be at least 2")
    phi = cyclotomic_poly(d)
    n = phi.max_exp
    buf = [0] * d
    for e, c in a._c.items():
        buf[e % d] += c
    tail = [(e, c) for e, c in phi._c.items() if e != n]
    for e in range(d - 1, n - 1, -1):
        c = buf[e]
        if not c:
            continue
        buf[e] = 0
        for pe, pc in tail:
            buf[e - n + pe] -= c * pc
    return CyclotomicElement(d, LaurentPoly.from_dense(buf[:n]))


class BivariatePoly:
    """An element of Z[t, t^-1, x, x^-1], stored as {(a, b): coeff} for t^a x^b."""

    __slots__ = ("_c",)

    def __init__(self, coeffs: Mapping[tuple[int, int], int] | None = None):
        self._c: dict[tuple[int, int], int] = (
            {(int(a), int(b)): int(c) for (a, b), c in coeffs.items() if c} if coeffs else {}
        )

    @property
    def coeffs(self) -> dict[tuple[int, int], int]:
        return dict(self._c)

    def items(self) -> Iterator[tuple[tuple[int, int], int]]:
        return iter(sorted(self._c.items(), key=lambda kv: (kv[0][1], kv[0][0])))

    def __len__(self) -> int:
        return len(self._c)

    def __add__(self, other: BivariatePoly) -> BivariatePoly:
        return BivariatePoly(_pruned(list(self._c.items()) + list(other._c.items())))

    def __mul__(self, other: BivariatePoly) -> BivariatePoly:
        prod = (
            ((a1 + a2, b1 + b2), c1 * c2)
            for (a1, b1), c1 in self._c.items()
            for (a2, b2), c2 in other._c.items()
        )
        return BivariatePoly(_pruned(prod))

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, BivariatePoly):
            return NotImplemented
        return self._c == other._c

    def __hash__(self) -> int:
        return hash(frozenset(self._c.items()))

    def __repr__(self) -> str:
        terms = " + ".join(
            f"{c}*t^{a}*x^{b}" for (a, b), c in self.items()
        )
        return f"BivariatePoly({terms or '0'})"


def substitute_powers(f: BivariatePoly, et: int, ex: int) -> LaurentPoly:
    """Substitute t -> t^et and x -> t^ex."""
    return LaurentPoly(_pruned((a * et + b * ex, c) for (a, b), c in f._c.items()))
