"""Exact weight-bound tables: A_q, B_{n,q}, D_{n,q}.

The bounds mix rational terms with a single square root, so every value is
represented exactly in Q[sqrt(d)] with d squarefree.  Integer floors are
extracted with integer-square-root bracketing; no floating point enters any
comparison.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .errors import NotPrimePower
from .field import factor_prime_power


def _squarefree_split(m: int) -> tuple[int, int]:
    """m = s*s*d with d squarefree; returns (s, d)."""
    if m <= 0:
        raise ValueError("need a positive integer under the square root")
    s, d, f = 1, 1, 2
    while f * f <= m:
        exp = 0
        while m % f == 0:
            m //= f
            exp += 1
        s *= f ** (exp // 2)
        if exp % 2:
            d *= f
        f += 1
    d *= m
    return s, d


class QuadExt:
    """An element u + v*sqrt(d) of Q[sqrt(d)], d squarefree (d=1 is Q)."""

    __slots__ = ("u", "v", "d")

    def __init__(self, u, v=0, d=1):
        u, v = Fraction(u), Fraction(v)
        if d == 1 or v == 0:
            u, v, d = u + v * (1 if d == 1 else 0), Fraction(0), 1
            # v*sqrt(1) folds into the rational part
        self.u, self.v, self.d = u, v, d

    @staticmethod
    def sqrt(m: int) -> "QuadExt":
        s, d = _squarefree_split(m)
        if d == 1:
            return QuadExt(s)
        return QuadExt(0, s, d)

    def _coerce(self, other) -> "QuadExt":
        if isinstance(other, QuadExt):
            if other.d != 1 and self.d != 1 and other.d != self.d:
                raise ValueError(f"incompatible radicals sqrt({self.d}), sqrt({other.d})")
            return other
        return QuadExt(other)

    def _dd(self, other: "QuadExt") -> int:
        return self.d if self.d != 1 else other.d

    def __add__(self, other):
        o = self._coerce(other)
        return QuadExt(self.u + o.u, self.v + o.v, self._dd(o))

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        return QuadExt(self.u - o.u, self.v - o.v, self._dd(o))

    def __rsub__(self, other):
        return QuadExt(other).__sub__(self)

    def __neg__(self):
        return QuadExt(-self.u, -self.v, self.d)

    def __mul__(self, other):
        o = self._coerce(other)
        d = self._dd(o)
        return QuadExt(self.u * o.u + self.v * o.v * d, self.u * o.v + self.v * o.u, d)

    __rmul__ = __mul__

    def sign(self) -> int:
        u, v = self.u, self.v
        if v == 0:
            return (u > 0) - (u < 0)
        if u == 0:
            return (v > 0) - (v < 0)
        if u > 0 and v > 0:
            return 1
        if u < 0 and v < 0:
            return -1
        uu, vv = u * u, v * v * self.d
        if u > 0:  # v < 0
            return 1 if uu > vv else -1 if uu < vv else 0
        return 1 if vv > uu else -1 if vv < uu else 0

    def __lt__(self, other):
        return (self - self._coerce(other)).sign() < 0

    def __le__(self, other):
        return (self - self._coerce(other)).sign() <= 0

    def __gt__(self, other):
        return (self - self._coerce(other)).sign() > 0

    def __ge__(self, other):
        return (self - self._coerce(other)).sign() >= 0

    def __eq__(self, other):
        o = self._coerce(other)
        return self.u == o.u and self.v == o.v and (self.v == 0 or self.d == o.d)

    def __hash__(self):
        return hash((self.u, self.v, self.d))

    def floor(self) -> int:
        """Exact floor via integer-square-root bracketing."""
        if self.v == 0:
            return math.floor(self.u)
        # write self = (a + b*sqrt(d)) / den with integers a, b, den > 0
        den = math.lcm(self.u.denominator, self.v.denominator)
        a = self.u.numerator * (den // self.u.denominator)
        b = self.v.numerator * (den // self.v.denominator)
        m = b * b * self.d
        t = math.isqrt(m)
        # b*sqrt(d) lies in [t, t+1) for b >= 0, else in (-t-1, -t]
        lo = (a + t if b >= 0 else a - t - 1, den)
        k = lo[0] // den  # first candidate
        while not self._floor_ok(k, a, b, den):
            k += 1 if self._num_gt(k + 1, a, b) <= 0 else -1
        return k

    def _num_gt(self, k: int, a: int, b: int) -> int:
        """sign of (k*den - (a + b*sqrt(d))) given integers; den folded by caller."""
        den = math.lcm(self.u.denominator, self.v.denominator)
        lhs = k * den - a  # compare with b*sqrt(d)
        if b == 0:
            return (lhs > 0) - (lhs < 0)
        rhs_sq = b * b * self.d
        if lhs >= 0 and b <= 0:
            return 1 if (lhs > 0 or b < 0) else 0
        if lhs <= 0 and b >= 0:
            return -1 if (lhs < 0 or b > 0) else 0
        l2 = lhs * lhs
        if lhs > 0:  # b > 0
            return 1 if l2 > rhs_sq else -1 if l2 < rhs_sq else 0
        return -1 if l2 > rhs_sq else 1 if l2 < rhs_sq else 0

    def _floor_ok(self, k: int, a: int, b: int, den: int) -> bool:
        return self._num_gt(k, a, b) <= 0 and self._num_gt(k + 1, a, b) > 0

    def bracket(self, prec: int = 64) -> tuple[Fraction, Fraction]:
        """Certified rational interval [lo, hi] containing the value,
        width about 2**-prec times |v|."""
        if self.v == 0:
            return self.u, self.u
        scale = 1 << prec
        t = math.isqrt(self.d * scale * scale)
        root_lo = Fraction(t, scale)
        root_hi = Fraction(t + 1, scale)
        if self.v > 0:
            return self.u + self.v * root_lo, self.u + self.v * root_hi
        return self.u + self.v * root_hi, self.u + self.v * root_lo

    def __float__(self):
        return float(self.u) + float(self.v) * math.sqrt(self.d)

    def __repr__(self):
        if self.v == 0:
            return f"{self.u}"
        return f"{self.u} + {self.v}*sqrt({self.d})"


def quad_cmp(x: QuadExt, y: QuadExt) -> int:
    """Compare values from possibly different quadratic fields.

    Uses certified interval refinement; exact-equality fallback for values in
    the same field.
    """
    if x.d == y.d or x.v == 0 or y.v == 0:
        return (x - y).sign()
    for prec in (32, 64, 128, 256, 512):
        xlo, xhi = x.bracket(prec)
        ylo, yhi = y.bracket(prec)
        if xhi < ylo:
            return -1
        if xlo > yhi:
            return 1
    # sqrt(d1), sqrt(d2) with distinct squarefree d are linearly independent
    # over Q, so failure to separate at this width means equality is
    # impossible unless both radical parts vanish (handled above)
    raise ArithmeticError("interval refinement failed to separate values")


# ---------------------------------------------------------------------------
# the piecewise bounds

LOW_Q_SET = frozenset({8, 9, 16, 25, 27, 49})
MID_Q_SET = frozenset({7, 11, 13, 17})
NINETEEN_SET = frozenset({19, 121})
SPECIAL_B_SET = frozenset({29, 31, 32})


def a_value(q: int) -> int:
    """Minimum support of a plane through a mid-range secant."""
    if q in MID_Q_SET:
        return 3 * q - 3
    if q in NINETEEN_SET:
        return 3 * q + 2
    return 4 * q - 21


def i_value(q: int) -> int:
    """Short-secant threshold used alongside a_value."""
    return 3 if q in MID_Q_SET else 4


@dataclass(frozen=True)
class BoundTable:
    q: int
    n: int
    A: int
    B: QuadExt
    D: QuadExt
    floor_B: int
    floor_D: int

    def as_dict(self) -> dict:
        return {
            "q": self.q,
            "n": self.n,
            "A": self.A,
            "floorB": self.floor_B,
            "floorD": self.floor_D,
        }


def bounds(n: int, q: int) -> BoundTable:
    """Exact bound table for PG(n,q), n >= 2."""
    try:
        factor_prime_power(q)
    except ValueError:
        raise NotPrimePower(f"q = {q} is not a prime power")
    if n < 2:
        raise ValueError("bounds need n >= 2")
    qn2 = q ** (n - 2)
    if q < 7 or q in LOW_Q_SET:
        B = QuadExt(2 * q ** (n - 1))
        D = B
    elif q in MID_Q_SET:
        B = (QuadExt(3 * q) - QuadExt.sqrt(6 * q) - QuadExt(Fraction(1, 2))) * qn2
        D = B
    elif q in NINETEEN_SET:
        B = (QuadExt(3 * q) - QuadExt.sqrt(6 * q) + QuadExt(Fraction(9, 2))) * qn2
        D = B
    elif q in SPECIAL_B_SET:
        B = (QuadExt(4 * q) - 4 * QuadExt.sqrt(q) - QuadExt(Fraction(25, 2))) * qn2
        D = (QuadExt(4 * q) - QuadExt.sqrt(8 * q) - QuadExt(Fraction(33, 2))) * qn2
    else:
        B = (QuadExt(4 * q) - QuadExt.sqrt(8 * q) - QuadExt(Fraction(33, 2))) * qn2
        D = B
    return BoundTable(q, n, a_value(q), B, D, B.floor(), D.floor())
