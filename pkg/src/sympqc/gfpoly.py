"""Arithmetic over small prime fields, their polynomial rings, and F_p[x]/(x^n - 1).

Polynomials are kept in two flavours:

* :class:`PlainPoly` -- ordinary polynomials with ascending coefficient
  tuples and a nonzero leading coefficient (the empty tuple is the zero
  polynomial).  These carry generator polynomials, parity checks, gcd/lcm
  results, and anything that must divide x^n - 1 exactly.
* :class:`RingElement` -- residue classes in F_p[x]/(x^n - 1), stored as a
  coefficient vector of length exactly n.  Multiplication is cyclic
  convolution.

Binary polynomials ride a packed fast path: coefficient vectors are folded
into Python integers (word-packed bignums), so multiplication is a
carryless shift/xor convolution and division is shift/xor long division.
Odd primes use small integer vectors with numpy convolution.

All values are immutable after construction and every operation is pure.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence, Union

import numpy as np

SUPPORTED_PRIMES = (2, 3, 5, 7)


class StructureError(ValueError):
    """Operands disagree on field or ring length, or an invariant is violated."""


class DivisibilityError(ArithmeticError):
    """Exact polynomial division was requested but left a nonzero remainder."""

    def __init__(self, message: str, remainder: "PlainPoly | None" = None):
        super().__init__(message)
        self.remainder = remainder


class UndefinedInputError(ValueError):
    """Input is outside the mathematical domain of the operation (e.g. gcd(0, 0))."""


@dataclass(frozen=True)
class PrimeField:
    """The prime field F_p for p in {2, 3, 5, 7}.

    Larger primes would work with the same code paths but are outside the
    supported envelope, so construction rejects them outright.
    """

    p: int

    def __post_init__(self) -> None:
        if self.p not in SUPPORTED_PRIMES:
            raise StructureError(
                f"unsupported field order {self.p}; supported primes: {SUPPORTED_PRIMES}"
            )

    def reduce(self, a: int) -> int:
        return a % self.p

    def neg(self, a: int) -> int:
        return (-a) % self.p

    def inv(self, a: int) -> int:
        a %= self.p
        if a == 0:
            raise ZeroDivisionError(f"0 has no inverse in F_{self.p}")
        return pow(a, self.p - 2, self.p)

    @property
    def nonzero(self) -> tuple[int, ...]:
        """The multiplicative group F_p^*, ascending."""
        return tuple(range(1, self.p))

    def __repr__(self) -> str:
        return f"GF({self.p})"


GF2 = PrimeField(2)
GF3 = PrimeField(3)
GF5 = PrimeField(5)
GF7 = PrimeField(7)


def _strip(coeffs: Sequence[int]) -> tuple[int, ...]:
    end = len(coeffs)
    while end > 0 and coeffs[end - 1] == 0:
        end -= 1
    return tuple(coeffs[:end])


def _bits_to_int(coeffs: Sequence[int]) -> int:
    v = 0
    for i, c in enumerate(coeffs):
        if c:
            v |= 1 << i
    return v


def _int_to_bits(v: int) -> tuple[int, ...]:
    out = []
    while v:
        out.append(v & 1)
        v >>= 1
    return tuple(out)


def _clmul(a: int, b: int) -> int:
    # carryless multiply of bit-packed binary polynomials
    r = 0
    while b:
        lsb = b & -b
        r ^= a << (lsb.bit_length() - 1)
        b ^= lsb
    return r

def _cldivmod(a: int, b: int) -> tuple[int, int]:
    # shift/xor long division of bit-packed binary polynomials, b != 0
    db = b.bit_length() - 1
    q = 0
    r = a
    while r and r.bit_length() - 1 >= db:
        shift = r.bit_length() - 1 - db
        q |= 1 << shift
        r ^= b << shift
    return q, r


@dataclass(frozen=True)
class PlainPoly:
    """A polynomial over a prime field with ascending coefficients.

    Invariants: the leading coefficient is nonzero unless the polynomial is
    zero (empty coefficient tuple), and every entry is reduced mod p.
    """

    field: PrimeField
    coeffs: tuple[int, ...]

    @classmethod
    def from_coeffs(cls, field: PrimeField, coeffs: Iterable[int]) -> "PlainPoly":
        reduced = [field.reduce(int(c)) for c in coeffs]
        return cls(field, _strip(reduced))

    @classmethod
    def zero(cls, field: PrimeField) -> "PlainPoly":
        return cls(field, ())

    @classmethod
    def one(cls, field: PrimeField) -> "PlainPoly":
        return cls(field, (1,))

    @classmethod
    def x_pow(cls, field: PrimeField, k: int, coeff: int = 1) -> "PlainPoly":
        c = field.reduce(coeff)
        if c == 0:
            return cls.zero(field)
        return cls(field, (0,) * k + (c,))

    @classmethod
    def modulus(cls, field: PrimeField, n: int) -> "PlainPoly":
        """x^n - 1."""
        if n < 1:
            raise StructureError("ring length must be positive")
        return cls(field, (field.neg(1),) + (0,) * (n - 1) + (1,))

    # -- basic structure ---------------------------------------------------

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def degree(self) -> int:
        """Degree, with the zero polynomial at -1."""
        return len(self.coeffs) - 1

    def __getitem__(self, i: int) -> int:
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else 0

    def _check(self, other: "PlainPoly") -> None:
        if self.field != other.field:
            raise StructureError("polynomials over different fields")

    # -- arithmetic --------------------------------------------------------

    def __add__(self, other: "PlainPoly") -> "PlainPoly":
        self._check(other)
        p = self.field.p
        m = max(len(self.coeffs), len(other.coeffs))
        return PlainPoly(
            self.field, _strip([(self[i] + other[i]) % p for i in range(m)])
        )

    def __sub__(self, other: "PlainPoly") -> "PlainPoly":
        self._check(other)
        p = self.field.p
        m = max(len(self.coeffs), len(other.coeffs))
        return PlainPoly(
            self.field, _strip([(self[i] - other[i]) % p for i in range(m)])
        )

    def __neg__(self) -> "PlainPoly":
        p = self.field.p
        return PlainPoly(self.field, tuple((-c) % p for c in self.coeffs))

    def __mul__(self, other: "PlainPoly") -> "PlainPoly":
        self._check(other)
        if self.is_zero or other.is_zero:
            return PlainPoly.zero(self.field)
        p = self.field.p
        if p == 2:
            v = _clmul(_bits_to_int(self.coeffs), _bits_to_int(other.coeffs))
            return PlainPoly(self.field, _int_to_bits(v))
        conv = np.convolve(
            np.asarray(self.coeffs, dtype=np.int64),
            np.asarray(other.coeffs, dtype=np.int64),
        )
        return PlainPoly(self.field, _strip([int(c) % p for c in conv]))

    def scale(self, c: int) -> "PlainPoly":
        c = self.field.reduce(c)
        if c == 0:
            return PlainPoly.zero(self.field)
        p = self.field.p
        return PlainPoly(self.field, tuple((c * a) % p for a in self.coeffs))

    def __divmod__(self, other: "PlainPoly") -> tuple["PlainPoly", "PlainPoly"]:
        self._check(other)
        if other.is_zero:
            raise ZeroDivisionError("polynomial division by zero")
        if self.degree < other.degree:
            return PlainPoly.zero(self.field), self
        p = self.field.p
        if p == 2:
            q, r = _cldivmod(_bits_to_int(self.coeffs), _bits_to_int(other.coeffs))
            return (
                PlainPoly(self.field, _int_to_bits(q)),
                PlainPoly(self.field, _int_to_bits(r)),
            )
        rem = list(self.coeffs)
        div = other.coeffs
        dd = other.degree
        lead_inv = self.field.inv(div[-1])
        quot = [0] * (len(rem) - dd)
        for i in range(len(rem) - 1, dd - 1, -1):
            c = rem[i]
            if c == 0:
                continue
            factor = (c * lead_inv) % p
            quot[i - dd] = factor
            for j, dc in enumerate(div):
                rem[i - dd + j] = (rem[i - dd + j] - factor * dc) % p
        return (
            PlainPoly(self.field, _strip(quot)),
            PlainPoly(self.field, _strip(rem)),
        )

    def __mod__(self, other: "PlainPoly") -> "PlainPoly":
        return divmod(self, other)[1]

    def __floordiv__(self, other: "PlainPoly") -> "PlainPoly":
        return divmod(self, other)[0]

    def monic(self) -> "PlainPoly":
        if self.is_zero:
            return self
        lead = self.coeffs[-1]
        if lead == 1:
            return self
        return self.scale(self.field.inv(lead))

    def reciprocal(self) -> "PlainPoly":
        """Coefficient reversal x^deg * f(1/x), stripped of low-order zeros."""
        return PlainPoly(self.field, _strip(tuple(reversed(self.coeffs))))

    # -- rendering ---------------------------------------------------------

    def __str__(self) -> str:
        return poly_str(self.coeffs)

    def __repr__(self) -> str:
        return f"PlainPoly(GF({self.field.p}), {poly_str(self.coeffs)})"


def poly_str(coeffs: Sequence[int]) -> str:
    """Human form with ascending powers, e.g. ``1+x^2+x^3``."""
    terms = []
    for k, c in enumerate(coeffs):
        if c == 0:
            continue
        if k == 0:
            terms.append(str(c))
        elif k == 1:
            terms.append("x" if c == 1 else f"{c}x")
        else:
            terms.append(f"x^{k}" if c == 1 else f"{c}x^{k}")
    return "+".join(terms) if terms else "0"


def plain_gcd(a: PlainPoly, b: PlainPoly) -> PlainPoly:
    """Monic greatest common divisor; gcd(a, 0) is monic(a)."""
    a._check(b)
    if a.is_zero and b.is_zero:
        raise UndefinedInputError("gcd(0, 0) is undefined")
    while not b.is_zero:
        a, b = b, a % b
    return a.monic()


def plain_lcm(a: PlainPoly, b: PlainPoly) -> PlainPoly:
    """Monic least common multiple; lcm with the zero polynomial is zero."""
    a._check(b)
    if a.is_zero or b.is_zero:
        return PlainPoly.zero(a.field)
    return ((a * b) // plain_gcd(a, b)).monic()


def exact_div(a: PlainPoly, b: PlainPoly) -> PlainPoly:
    """Quotient a / b with the remainder asserted zero."""
    q, r = divmod(a, b)
    if not r.is_zero:
        raise DivisibilityError(
            f"{b} does not divide {a} (remainder {r})", remainder=r
        )
    return q


def divides(d: PlainPoly, a: PlainPoly) -> bool:
    """True when d divides a exactly (the zero polynomial divides only itself)."""
    if d.is_zero:
        return a.is_zero
    return (a % d).is_zero


def euclidean_dual_generator(g: PlainPoly, n: int) -> PlainPoly:
    """Generator of the Euclidean dual of the cyclic code generated by g.

    Computes h = (x^n - 1) / g and returns the monic reversal
    h0^{-1} x^{deg h} h(1/x).  Requires g | x^n - 1.
    """
    mod = PlainPoly.modulus(g.field, n)
    h = exact_div(mod, g)
    return h.reciprocal().monic()


CoeffSource = Union["RingElement", PlainPoly, Sequence[int]]


@dataclass(frozen=True)
class RingElement:
    """A residue class in F_p[x]/(x^n - 1) as a length-n coefficient vector."""

    field: PrimeField
    n: int
    coeffs: tuple[int, ...]

    @classmethod
    def from_coeffs(cls, field: PrimeField, n: int, coeffs: Iterable[int]) -> "RingElement":
        vals = [field.reduce(int(c)) for c in coeffs]
        if len(vals) > n:
            raise StructureError(f"{len(vals)} coefficients do not fit ring length {n}")
        vals.extend([0] * (n - len(vals)))
        return cls(field, n, tuple(vals))

    @classmethod
    def from_poly(cls, poly: PlainPoly, n: int) -> "RingElement":
        """Reduce an arbitrary-degree polynomial mod x^n - 1."""
        vals = [0] * n
        p = poly.field.p
        for i, c in enumerate(poly.coeffs):
            j = i % n
            vals[j] = (vals[j] + c) % p
        return cls(poly.field, n, tuple(vals))

    @classmethod
    def zero(cls, field: PrimeField, n: int) -> "RingElement":
        return cls(field, n, (0,) * n)

    @classmethod
    def one(cls, field: PrimeField, n: int) -> "RingElement":
        return cls(field, n, (1,) + (0,) * (n - 1))

    def __post_init__(self) -> None:
        if len(self.coeffs) != self.n:
            raise StructureError("coefficient vector length differs from ring length")

    # -- structure ---------------------------------------------------------

    @property
    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def to_poly(self) -> PlainPoly:
        """The canonical representative of degree < n."""
        return PlainPoly(self.field, _strip(self.coeffs))

    def to_vector(self) -> np.ndarray:
        return np.asarray(self.coeffs, dtype=np.uint8)

    def _check(self, other: "RingElement") -> None:
        if self.field != other.field or self.n != other.n:
            raise StructureError("ring elements from different rings")

    # -- arithmetic --------------------------------------------------------

    def __add__(self, other: "RingElement") -> "RingElement":
        self._check(other)
        p = self.field.p
        return RingElement(
            self.field, self.n,
            tuple((a + b) % p for a, b in zip(self.coeffs, other.coeffs)),
        )

    def __sub__(self, other: "RingElement") -> "RingElement":
        self._check(other)
        p = self.field.p
        return RingElement(
            self.field, self.n,
            tuple((a - b) % p for a, b in zip(self.coeffs, other.coeffs)),
        )

    def __neg__(self) -> "RingElement":
        p = self.field.p
        return RingElement(self.field, self.n, tuple((-a) % p for a in self.coeffs))

    def scale(self, c: int) -> "RingElement":
        c = self.field.reduce(c)
        p = self.field.p
        return RingElement(self.field, self.n, tuple((c * a) % p for a in self.coeffs))

    def __mul__(self, other: "RingElement") -> "RingElement":
        self._check(other)
        n = self.n
        if self.field.p == 2:
            prod = _clmul(_bits_to_int(self.coeffs), _bits_to_int(other.coeffs))
            folded = (prod & ((1 << n) - 1)) ^ (prod >> n)
            bits = _int_to_bits(folded)
            return RingElement(self.field, n, bits + (0,) * (n - len(bits)))
        conv = np.convolve(
            np.asarray(self.coeffs, dtype=np.int64),
            np.asarray(other.coeffs, dtype=np.int64),
        )
        out = np.zeros(n, dtype=np.int64)
        out[: len(conv[:n])] = conv[:n]
        tail = conv[n:]
        out[: len(tail)] += tail
        return RingElement(self.field, n, tuple(int(c) % self.field.p for c in out))

    def shift(self, k: int) -> "RingElement":
        """Multiplication by x^k: a cyclic rotation of the coefficients."""
        k %= self.n
        c = self.coeffs
        return RingElement(self.field, self.n, c[-k:] + c[:-k] if k else c)

    def bar(self) -> "RingElement":
        """The ring reciprocal sum_i f_i x^{n-i} (with x^n identified with 1)."""
        c = self.coeffs
        return RingElement(self.field, self.n, (c[0],) + tuple(reversed(c[1:])))

    def inner_e(self, other: "RingElement") -> int:
        """Euclidean inner product of the coefficient vectors."""
        self._check(other)
        return sum(a * b for a, b in zip(self.coeffs, other.coeffs)) % self.field.p

    def __str__(self) -> str:
        return poly_str(self.coeffs)

    def __repr__(self) -> str:
        return f"RingElement(GF({self.field.p}), n={self.n}, {poly_str(self.coeffs)})"


def ring_mul(a: RingElement, b: RingElement) -> RingElement:
    """Cyclic-convolution product in F_p[x]/(x^n - 1)."""
    return a * b


def bar(f: RingElement) -> RingElement:
    """The ring reciprocal of f; an involution and multiplicative."""
    return f.bar()


def ring_from_poly(poly: PlainPoly, n: int) -> RingElement:
    return RingElement.from_poly(poly, n)
