"""Alexander polynomials and genera of A_{m,n}, Berge knots b^+-(m, n),
torus knots and cables."""

from __future__ import annotations

from dataclasses import dataclass, field
from math import gcd

from .errors import IndexOutOfRange, NotCoprime
from .exact_poly import (
    BivariatePoly,
    LaurentPoly,
    div_exact,
    normalize_doteq,
    t_power_minus_one,
)

__all__ = [
    "StandardParam",
    "Staircase",
    "staircase",
    "u_index",
    "w_index",
    "alexander_Amn",
    "alexander_berge",
    "genus_berge",
    "alexander_torus",
    "alexander_cable",
    "alexander_gw_cable",
]


def _sign_value(sign: int | str) -> int:
    if sign in (1, "+"):
        return 1
    if sign in (-1, "-"):
        return -1
    raise ValueError(f"sign must be +1/-1 or '+'/'-', got {sign!r}")


@dataclass(frozen=True, order=True)
class StandardParam:
    """The triple (sign, m, n) naming b^+(m, n) (sign +1) or b^-(m, n) (sign -1).

    ``m <= n`` is enforced unless the instance is built with
    :meth:`unordered`, which exists so tests can check the (m, n) symmetry.
    """

    sign: int
    m: int
    n: int
    ordered: bool = field(default=True, compare=False, repr=False)

    def __post_init__(self) -> None:
        object.__setattr__(self, "sign", _sign_value(self.sign))
        if self.m < 1 or self.n < 1:
            raise ValueError(f"m and n must be positive, got ({self.m}, {self.n})")
        if self.ordered and self.m > self.n:
            raise ValueError(f"standard parameters need m <= n, got ({self.m}, {self.n})")
        if gcd(self.m, self.n) != 1:
            raise NotCoprime(f"gcd({self.m}, {self.n}) != 1")

    @classmethod
    def unordered(cls, sign: int | str, m: int, n: int) -> StandardParam:
        return cls(sign, m, n, ordered=False)

    @classmethod
    def parse(cls, text: str) -> StandardParam:
        """Parse ``"+,2,3"`` or ``"(-, 7, 13)"``."""
        parts = [s.strip() for s in text.strip().strip("()").split(",")]
        if len(parts) != 3:
            raise ValueError(f"cannot parse standard parameter {text!r}")
        return cls(parts[0], int(parts[1]), int(parts[2]))

    @property
    def sign_char(self) -> str:
        return "+" if self.sign > 0 else "-"

    @property
    def is_trivial(self) -> bool:
        """(sign, 1, n) is a torus knot; only m >= 2 gives hyperbolic knots."""
        return min(self.m, self.n) == 1

    def torus_type(self) -> tuple[int, int] | None:
        """(r, s) with b = T(r, s) for trivial parameters, else None."""
        if not self.is_trivial:
            return None
        n = max(self.m, self.n)
        return (n, n + 1) if self.sign > 0 else (n + 1, n + 2)

    def __str__(self) -> str:
        return f"({self.sign_char}, {self.m}, {self.n})"


@dataclass(frozen=True)
class Staircase:
    """Sorted elements 0 = k_0 < ... < k_{m+n-1} = mn of (mZ u nZ) n [0, mn]."""

    m: int
    n: int
    ks: tuple[int, ...]

    def __len__(self) -> int:
        return len(self.ks)

    def index_of(self, k: int) -> int:
        return self.ks.index(k)


def staircase(m: int, n: int) -> Staircase:
    if m < 1 or n < 1:
        raise ValueError("m and n must be positive")
    if gcd(m, n) != 1:
        raise NotCoprime(f"gcd({m}, {n}) != 1")
    ks = sorted(set(range(0, m * n + 1, m)) | set(range(0, m * n + 1, n)))
    return Staircase(m, n, tuple(ks))


def u_index(j: int, m: int, n: int) -> int:
    """Position of j*m in the staircase of (m, n), 0 <= j <= n."""
    if not 0 <= j <= n:
        raise IndexOutOfRange(f"u_j needs 0 <= j <= {n}, got {j}")
    if j == 0:
        return 0
    if j == n:
        return m + n - 1
    return (j * m) // n + j


def w_index(j: int, m: int, n: int) -> int:
    """Position of j*n in the staircase of (m, n), 0 <= j <= m."""
    if not 0 <= j <= m:
        raise IndexOutOfRange(f"w_j needs 0 <= j <= {m}, got {j}")
    return u_index(j, n, m)


def alexander_Amn(m: int, n: int) -> BivariatePoly:
    """sum_i t^{k_i} x^i over the staircase; the two-variable polynomial of A_{m,n}."""
    ks = staircase(m, n).ks
    return BivariatePoly({(k, i): 1 for i, k in enumerate(ks)})


def _berge_numerator(sign: int, m: int, n: int) -> LaurentPoly:
    s = m + n
    ks = staircase(m, n).ks
    return LaurentPoly.from_exponents(k - sign * i * s for i, k in enumerate(ks))


def alexander_berge(par: StandardParam) -> LaurentPoly:
    """Normalized Alexander polynomial of b^sign(m, n).

    (t - 1) * sum_i t^{k_i - sign*i*(m+n)} / (t^{m+n} - 1), divided exactly.
    """
    num = _berge_numerator(par.sign, par.m, par.n) * t_power_minus_one(1)
    return normalize_doteq(div_exact(num, t_power_minus_one(par.m + par.n)))


def genus_berge(par: StandardParam) -> int:
    m, n = par.m, par.n
    two_g = (m + n - 1) ** 2 - par.sign * m * n
    assert two_g % 2 == 0
    return two_g // 2


def _check_coprime(r: int, s: int) -> None:
    if gcd(r, s) != 1:
        raise NotCoprime(f"gcd({r}, {s}) != 1")


def _torus_factor(r: int, s: int) -> LaurentPoly:
    """(t^{rs} - 1)(t - 1) / ((t^r - 1)(t^s - 1)), not normalized."""
    num = t_power_minus_one(r * s) * t_power_minus_one(1)
    return div_exact(div_exact(num, t_power_minus_one(r)), t_power_minus_one(s))


def alexander_torus(r: int, s: int) -> LaurentPoly:
    if r < 1 or s < 1:
        raise ValueError("torus knot parameters must be positive")
    _check_coprime(r, s)
    return normalize_doteq(_torus_factor(r, s))


def alexander_cable(K: LaurentPoly, r: int, s: int) -> LaurentPoly:
    """Alexander polynomial of the (r, s)-cable of a knot with polynomial K."""
    if r < 1 or s < 1:
        raise ValueError("cable parameters must be positive")
    _check_coprime(r, s)
    return normalize_doteq(_torus_factor(r, s) * K.compose_power(r))


def alexander_gw_cable(r: int, s: int, sign: int | str) -> LaurentPoly:
    """The (2, 2rs + sign)-cable of T(r, s), in closed form."""
    sign = _sign_value(sign)
    _check_coprime(r, s)
    if not 2 <= r < s:
        raise ValueError(f"need 2 <= r < s, got ({r}, {s})")
    c = 2 * r * s + sign
    num = t_power_minus_one(2 * c) * t_power_minus_one(2 * r * s) * t_power_minus_one(1)
    for d in (c, 2 * r, 2 * s):
        num = div_exact(num, t_power_minus_one(d))
    return normalize_doteq(num)
