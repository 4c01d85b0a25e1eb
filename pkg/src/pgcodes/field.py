"""Exact arithmetic in GF(p^h) and its prime subfield F_p.

Elements of GF(p^h) are encoded as integers in [0, q) whose little-endian
base-p digits are the coefficients of the polynomial representative:
value c0 + c1*p + ... + c(h-1)*p^(h-1) stands for c0 + c1*X + ... mod the
field modulus.  All arithmetic is table-driven exact integer arithmetic;
there are no modular floats anywhere.

The geometry layer orders field elements by their coefficient tuples
(c0, c1, ..., c(h-1)) compared lexicographically; `FieldSpec.rank` realises
that order as a permutation of [0, q).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Optional, Sequence

import numpy as np

from .errors import (
    CompositeP,
    DivisionByZero,
    FieldMismatch,
    ReducibleModulus,
    UnsupportedSize,
)

# Fixed moduli (Conway polynomials) for every proper prime power q <= 128,
# keyed by (p, h), coefficients little-endian including the leading 1.
# Prime fields use the degree-1 modulus X.
CONWAY_TABLE = {
    (2, 2): (1, 1, 1),
    (2, 3): (1, 1, 0, 1),
    (2, 4): (1, 1, 0, 0, 1),
    (2, 5): (1, 0, 1, 0, 0, 1),
    (2, 6): (1, 1, 0, 1, 1, 0, 1),
    (2, 7): (1, 1, 0, 0, 0, 0, 0, 1),
    (3, 2): (2, 2, 1),
    (3, 3): (1, 2, 0, 1),
    (3, 4): (2, 0, 0, 2, 1),
    (5, 2): (2, 4, 1),
    (5, 3): (3, 3, 0, 1),
    (7, 2): (3, 6, 1),
    (11, 2): (2, 7, 1),
}

MAX_TABLE_Q = 128


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    d = 2
    while d * d <= n:
        if n % d == 0:
            return False
        d += 1
    return True


def factor_prime_power(q: int) -> tuple[int, int]:
    """Return (p, h) with q = p**h, or raise ValueError."""
    if q < 2:
        raise ValueError(f"{q} is not a prime power")
    for p in range(2, q + 1):
        if not is_prime(p):
            continue
        if q % p:
            continue
        h = 0
        m = q
        while m % p == 0:
            m //= p
            h += 1
        if m == 1:
            return p, h
        raise ValueError(f"{q} is not a prime power")
    raise ValueError(f"{q} is not a prime power")


# -- polynomial helpers over F_p (coefficient lists, little-endian) --------


def _poly_trim(a: list[int]) -> list[int]:
    while a and a[-1] == 0:
        a.pop()
    return a


def _poly_mul(a: Sequence[int], b: Sequence[int], p: int) -> list[int]:
    out = [0] * (len(a) + len(b) - 1) if a and b else []
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                out[i + j] = (out[i + j] + ai * bj) % p
    return _poly_trim(out)


def _poly_mod(a: Sequence[int], m: Sequence[int], p: int) -> list[int]:
    a = _poly_trim(list(a))
    dm = len(m) - 1
    inv_lead = pow(m[-1], p - 2, p)
    while len(a) - 1 >= dm and a:
        shift = len(a) - 1 - dm
        factor = (a[-1] * inv_lead) % p
        for i, mi in enumerate(m):
            a[shift + i] = (a[shift + i] - factor * mi) % p
        a = _poly_trim(a)
    return a


def _all_monic_polys(p: int, degree: int) -> Iterable[list[int]]:
    if degree == 0:
        yield [1]
        return
    for tail in np.ndindex(*([p] * degree)):
        yield list(tail) + [1]


def poly_is_irreducible(coeffs: Sequence[int], p: int) -> bool:
    """Trial division by all monic polynomials of degree <= deg/2."""
    m = _poly_trim(list(coeffs))
    deg = len(m) - 1
    if deg < 1 or m[-1] % p == 0:
        return False
    if deg == 1:
        return True
    for d in range(1, deg // 2 + 1):
        for cand in _all_monic_polys(p, d):
            if not _poly_mod(m, cand, p):
                # zero remainder: cand is a proper factor
                return False
    return True


_FIELD_CACHE: dict = {}


class FieldSpec:
    """A concrete GF(p^h) with fixed modulus and precomputed operation tables."""

    def __init__(self, p: int, h: int = 1, modulus: Optional[Sequence[int]] = None):
        if not isinstance(p, (int, np.integer)) or not is_prime(int(p)):
            raise CompositeP(f"p = {p} is not prime")
        p = int(p)
        h = int(h)
        if h < 1:
            raise ValueError("h must be a positive integer")
        q = p**h
        if modulus is None:
            if h == 1:
                modulus = (0, 1)
            elif (p, h) in CONWAY_TABLE:
                modulus = CONWAY_TABLE[(p, h)]
            else:
                raise UnsupportedSize(
                    f"no built-in modulus for GF({q}); supply one explicitly"
                )
        modulus = tuple(int(c) % p for c in modulus)
        if len(modulus) != h + 1 or modulus[-1] != 1:
            raise ReducibleModulus(
                f"modulus must be monic of degree {h}, got {modulus}"
            )
        if not poly_is_irreducible(modulus, p):
            raise ReducibleModulus(f"modulus {modulus} is reducible over F_{p}")

        self.p = p
        self.h = h
        self.q = q
        self.modulus = modulus
        self._build_tables()

    # table construction ----------------------------------------------------

    def _digits(self, v: int) -> list[int]:
        out = []
        for _ in range(self.h):
            out.append(v % self.p)
            v //= self.p
        return out

    def _undigits(self, coeffs: Sequence[int]) -> int:
        v = 0
        for c in reversed(list(coeffs)):
            v = v * self.p + int(c) % self.p
        return v

    def _build_tables(self) -> None:
        p, h, q = self.p, self.h, self.q
        digits = np.zeros((q, h), dtype=np.int16)
        for v in range(q):
            digits[v] = self._digits(v)
        self.digits = digits

        # rank = position in the lexicographic order of coefficient tuples
        rank = np.zeros(q, dtype=np.int64)
        for v in range(q):
            r = 0
            for c in digits[v]:
                r = r * p + int(c)
            rank[v] = r
        self.rank = rank
        self.unrank = np.argsort(rank).astype(np.int64)

        add = np.zeros((q, q), dtype=np.int16)
        for a in range(q):
            for b in range(a, q):
                s = self._undigits((digits[a] + digits[b]) % p)
                add[a, b] = s
                add[b, a] = s
        self.ADD = add
        self.NEG = np.array(
            [self._undigits((-digits[a]) % p) for a in range(q)], dtype=np.int16
        )
        self.SUB = add[:, self.NEG]

        mul = np.zeros((q, q), dtype=np.int16)
        mod = list(self.modulus)
        for a in range(q):
            pa = _poly_trim([int(c) for c in digits[a]])
            for b in range(a, q):
                pb = _poly_trim([int(c) for c in digits[b]])
                r = _poly_mod(_poly_mul(pa, pb, p), mod, p)
                r += [0] * (h - len(r))
                v = self._undigits(r)
                mul[a, b] = v
                mul[b, a] = v
        self.MUL = mul

        inv = np.zeros(q, dtype=np.int16)
        for a in range(1, q):
            hits = np.nonzero(mul[a] == 1)[0]
            if len(hits) != 1:
                raise ReducibleModulus(
                    f"element {a} of GF({q}) has no unique inverse; bad modulus"
                )
            inv[a] = hits[0]
        self.INV = inv

    # element access ---------------------------------------------------------

    def element(self, value) -> "FieldElement":
        if isinstance(value, FieldElement):
            if value.field is not self:
                raise FieldMismatch("element belongs to a different field")
            return value
        if isinstance(value, (tuple, list)):
            if len(value) > self.h:
                raise ValueError("too many coefficients")
            return FieldElement(self, self._undigits(list(value) + [0] * (self.h - len(value))))
        value = int(value)
        if self.h == 1:
            value %= self.q
        elif not 0 <= value < self.q:
            raise ValueError(f"encoded value {value} outside [0, {self.q})")
        return FieldElement(self, value)

    @property
    def zero(self) -> "FieldElement":
        return FieldElement(self, 0)

    @property
    def one(self) -> "FieldElement":
        return FieldElement(self, 1)

    def elements(self) -> list["FieldElement"]:
        return [FieldElement(self, v) for v in range(self.q)]

    # arithmetic on raw integer encodings (scalars or numpy arrays) ----------

    def add(self, a, b):
        return self.ADD[a, b]

    def sub(self, a, b):
        return self.SUB[a, b]

    def mul(self, a, b):
        return self.MUL[a, b]

    def neg(self, a):
        return self.NEG[a]

    def inv(self, a):
        if np.any(np.asarray(a) == 0):
            raise DivisionByZero("inverse of zero")
        return self.INV[a]

    def div(self, a, b):
        return self.MUL[a, self.inv(b)]

    def pow(self, a: int, e: int) -> int:
        if e < 0:
            a, e = int(self.inv(a)), -e
        out, base = 1, int(a)
        while e:
            if e & 1:
                out = int(self.MUL[out, base])
            base = int(self.MUL[base, base])
            e >>= 1
        return out

    def __repr__(self):
        return f"GF({self.q})"

    def __reduce__(self):
        return (field_make, (self.p, self.h, self.modulus))


def field_make(p: int, h: int = 1, modulus: Optional[Sequence[int]] = None) -> FieldSpec:
    """Construct (or fetch the cached) GF(p^h) with a deterministic modulus."""
    key = (int(p), int(h), tuple(modulus) if modulus is not None else None)
    spec = _FIELD_CACHE.get(key)
    if spec is None:
        spec = FieldSpec(p, h, modulus)
        _FIELD_CACHE[key] = spec
    return spec


@dataclass(frozen=True)
class FieldElement:
    """An element of a fixed GF(p^h), immutable."""

    field: FieldSpec
    value: int

    def _check(self, other: "FieldElement") -> "FieldElement":
        if not isinstance(other, FieldElement):
            other = self.field.element(other)
        if other.field is not self.field:
            raise FieldMismatch("operands from different fields")
        return other

    @property
    def coeffs(self) -> tuple[int, ...]:
        return tuple(int(c) for c in self.field.digits[self.value])

    def __add__(self, other):
        other = self._check(other)
        return FieldElement(self.field, int(self.field.ADD[self.value, other.value]))

    def __sub__(self, other):
        other = self._check(other)
        return FieldElement(self.field, int(self.field.SUB[self.value, other.value]))

    def __mul__(self, other):
        other = self._check(other)
        return FieldElement(self.field, int(self.field.MUL[self.value, other.value]))

    def __truediv__(self, other):
        other = self._check(other)
        if other.value == 0:
            raise DivisionByZero("division by zero field element")
        return self * other.inverse()

    def __neg__(self):
        return FieldElement(self.field, int(self.field.NEG[self.value]))

    def __pow__(self, e: int):
        return FieldElement(self.field, self.field.pow(self.value, e))

    def inverse(self) -> "FieldElement":
        if self.value == 0:
            raise DivisionByZero("inverse of zero")
        return FieldElement(self.field, int(self.field.INV[self.value]))

    def __bool__(self):
        return self.value != 0

    def __lt__(self, other):
        other = self._check(other)
        return self.field.rank[self.value] < self.field.rank[other.value]

    def __str__(self):
        return ",".join(str(c) for c in self.coeffs)

    def __repr__(self):
        return f"GF({self.field.q})({self})"


@dataclass(frozen=True)
class PrimeFieldElement:
    """An element of F_p.  Kept distinct from FieldElement on purpose: the
    code is p-ary while the geometry is q-ary, and conflating the two invites
    silent bugs when h > 1."""

    p: int
    value: int

    def __post_init__(self):
        if not is_prime(self.p):
            raise CompositeP(f"p = {self.p} is not prime")
        object.__setattr__(self, "value", self.value % self.p)

    def _check(self, other) -> "PrimeFieldElement":
        if isinstance(other, int):
            other = PrimeFieldElement(self.p, other)
        if other.p != self.p:
            raise FieldMismatch("operands from different prime fields")
        return other

    def __add__(self, other):
        other = self._check(other)
        return PrimeFieldElement(self.p, self.value + other.value)

    def __sub__(self, other):
        other = self._check(other)
        return PrimeFieldElement(self.p, self.value - other.value)

    def __mul__(self, other):
        other = self._check(other)
        return PrimeFieldElement(self.p, self.value * other.value)

    def __neg__(self):
        return PrimeFieldElement(self.p, -self.value)

    def inverse(self) -> "PrimeFieldElement":
        if self.value == 0:
            raise DivisionByZero("inverse of zero")
        return PrimeFieldElement(self.p, pow(self.value, self.p - 2, self.p))

    def __truediv__(self, other):
        other = self._check(other)
        return self * other.inverse()

    def __bool__(self):
        return self.value != 0

    def __int__(self):
        return self.value

    def __str__(self):
        return str(self.value)


_ARITH_OPS = ("add", "sub", "mul", "div", "inv", "neg")


def field_arith(a: FieldElement, b: Optional[FieldElement], op: str) -> FieldElement:
    """Named-operation dispatch over FieldElement; unary ops ignore b."""
    if op not in _ARITH_OPS:
        raise ValueError(f"unknown op {op!r}")
    if op == "inv":
        return a.inverse()
    if op == "neg":
        return -a
    if b is None:
        raise ValueError(f"binary op {op!r} needs two operands")
    return {"add": a.__add__, "sub": a.__sub__, "mul": a.__mul__, "div": a.__truediv__}[op](b)


def prime_arith(a: PrimeFieldElement, b: Optional[PrimeFieldElement], op: str) -> PrimeFieldElement:
    if op not in _ARITH_OPS:
        raise ValueError(f"unknown op {op!r}")
    if op == "inv":
        return a.inverse()
    if op == "neg":
        return -a
    if b is None:
        raise ValueError(f"binary op {op!r} needs two operands")
    return {"add": a.__add__, "sub": a.__sub__, "mul": a.__mul__, "div": a.__truediv__}[op](b)
