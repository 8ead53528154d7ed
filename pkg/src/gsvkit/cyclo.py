"""Exact arithmetic over Q extended by a primitive root of unity.

An element of Q(zeta_k) is stored by its coordinates in the power basis
1, zeta, ..., zeta^(phi(k)-1), i.e. as a polynomial in zeta reduced modulo
the k-th cyclotomic polynomial.  k=1 reduces to plain rational arithmetic.
Everything is exact; the only bridge to floating point is the explicit
embedding `to_complex`.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Sequence, Union

Scalar = Union[int, Fraction, "Cyclo"]


def _exact_poly_div(num: Sequence[Fraction], den: Sequence[Fraction]) -> list[Fraction]:
    """Divide in Q[x] (coefficients low-to-high); the remainder must vanish."""
    work = list(num)
    dn = len(den) - 1
    out = [Fraction(0)] * (len(work) - dn)
    for i in range(len(out) - 1, -1, -1):
        c = work[i + dn] / den[-1]
        out[i] = c
        if c:
            for j in range(dn + 1):
                work[i + j] -= c * den[j]
    if any(work[:dn]):
        raise ArithmeticError("polynomial division left a remainder")
    return out


@lru_cache(maxsize=None)
def cyclotomic_polynomial(k: int) -> tuple[Fraction, ...]:
    """Coefficients of the k-th cyclotomic polynomial, low degree first."""
    if k < 1:
        raise ValueError("order must be a positive integer")
    if k == 1:
        return (Fraction(-1), Fraction(1))
    poly: list[Fraction] = [Fraction(0)] * (k + 1)
    poly[0], poly[k] = Fraction(-1), Fraction(1)
    for d in range(1, k):
        if k % d == 0:
            poly = _exact_poly_div(poly, cyclotomic_polynomial(d))
    return tuple(poly)


class CyclotomicField:
    """Q(zeta_k), with elements reduced to coordinate vectors of length phi(k)."""

    def __init__(self, order: int = 5):
        if order < 1:
            raise ValueError("root-of-unity order must be >= 1")
        self.order = order
        minpoly = cyclotomic_polynomial(order)
        self.degree = len(minpoly) - 1
        self.minpoly = minpoly
        # zeta^(degree + i) expanded in the power basis, i = 0 .. degree-2;
        # a product of two reduced elements never needs higher powers.
        head = tuple(-c for c in minpoly[:-1])
        rows: list[tuple[Fraction, ...]] = []
        cur = head
        for _ in range(self.degree - 1):
            rows.append(cur)
            shifted = (Fraction(0),) + cur[:-1]
            cur = tuple(s + cur[-1] * h for s, h in zip(shifted, head))
        self._reduction = tuple(rows)
        self._zero = Cyclo(self, (Fraction(0),) * self.degree)
        one = [Fraction(0)] * self.degree
        one[0] = Fraction(1)
        self._one = Cyclo(self, tuple(one))

    def __eq__(self, other):
        return isinstance(other, CyclotomicField) and other.order == self.order

    def __hash__(self):
        return hash(("CyclotomicField", self.order))

    def __repr__(self):
        return f"CyclotomicField(order={self.order})"

    @property
    def zero(self) -> "Cyclo":
        return self._zero

    @property
    def one(self) -> "Cyclo":
        return self._one

    def zeta(self) -> "Cyclo":
        """A fixed primitive k-th root of unity."""
        if self.degree == 1:
            return self.element(1 if self.order == 1 else -1)
        vec = [Fraction(0)] * self.degree
        vec[1] = Fraction(1)
        return Cyclo(self, tuple(vec))

    def zeta_power(self, a: int) -> "Cyclo":
        return self.zeta() ** (a % self.order)

    def element(self, value) -> "Cyclo":
        """Coerce an int, Fraction, or coordinate sequence into the field."""
        if isinstance(value, Cyclo):
            if value.field != self:
                raise ValueError("element belongs to a different cyclotomic field")
            return value
        if isinstance(value, (int, Fraction)):
            vec = [Fraction(0)] * self.degree
            vec[0] = Fraction(value)
            return Cyclo(self, tuple(vec))
        vec = [Fraction(c) for c in value]
        if len(vec) > self.degree:
            raise ValueError(f"coordinate vector longer than phi({self.order}) = {self.degree}")
        vec += [Fraction(0)] * (self.degree - len(vec))
        return Cyclo(self, tuple(vec))


def _poly_trim(coeffs: list[Fraction]) -> list[Fraction]:
    while coeffs and not coeffs[-1]:
        coeffs.pop()
    return coeffs


def _poly_divmod(a: list[Fraction], b: list[Fraction]):
    a = list(a)
    q = [Fraction(0)] * max(len(a) - len(b) + 1, 0)
    while len(a) >= len(b) and a:
        c = a[-1] / b[-1]
        d = len(a) - len(b)
        q[d] = c
        for j in range(len(b)):
            a[d + j] -= c * b[j]
        _poly_trim(a)
    return q, a


@dataclass(frozen=True, eq=False)
class Cyclo:
    """One element of a CyclotomicField; immutable and hashable."""

    field: CyclotomicField
    coeffs: tuple[Fraction, ...]

    def _coerce(self, other) -> "Cyclo":
        if isinstance(other, Cyclo):
            if other.field != self.field:
                raise ValueError("mixed cyclotomic fields")
            return other
        if isinstance(other, (int, Fraction)):
            return self.field.element(other)
        return NotImplemented  # type: ignore[return-value]

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction)):
            other = self.field.element(other)
        if not isinstance(other, Cyclo):
            return NotImplemented
        return self.field == other.field and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash((self.field.order, self.coeffs))

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return Cyclo(self.field, tuple(a + b for a, b in zip(self.coeffs, other.coeffs)))

    __radd__ = __add__

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return Cyclo(self.field, tuple(a - b for a, b in zip(self.coeffs, other.coeffs)))

    def __rsub__(self, other):
        return (-self) + other

    def __neg__(self):
        return Cyclo(self.field, tuple(-a for a in self.coeffs))

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        d = self.field.degree
        a, b = self.coeffs, other.coeffs
        if d == 1:
            return Cyclo(self.field, (a[0] * b[0],))
        prod = [Fraction(0)] * (2 * d - 1)
        for i, ai in enumerate(a):
            if ai:
                for j, bj in enumerate(b):
                    if bj:
                        prod[i + j] += ai * bj
        out = prod[:d]
        reduction = self.field._reduction
        for i in range(d, 2 * d - 1):
            c = prod[i]
            if c:
                row = reduction[i - d]
                for j in range(d):
                    if row[j]:
                        out[j] += c * row[j]
        return Cyclo(self.field, tuple(out))

    __rmul__ = __mul__

    def inverse(self) -> "Cyclo":
        """Multiplicative inverse via the extended Euclidean algorithm in Q[x]."""
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero cyclotomic element")
        if self.field.degree == 1:
            return Cyclo(self.field, (1 / self.coeffs[0],))
        # invariants: r0 = s0*self (mod minpoly), r1 = s1*self (mod minpoly)
        r0 = list(self.field.minpoly)
        r1 = _poly_trim(list(self.coeffs))
        s0: list[Fraction] = []
        s1: list[Fraction] = [Fraction(1)]
        while len(r1) > 1:
            q, r = _poly_divmod(r0, r1)
            r0, r1 = r1, r
            prod = [Fraction(0)] * (len(q) + len(s1) - 1)
            for i, qi in enumerate(q):
                if qi:
                    for j, sj in enumerate(s1):
                        prod[i + j] += qi * sj
            new_s = [Fraction(0)] * max(len(s0), len(prod))
            for i, c in enumerate(s0):
                new_s[i] += c
            for i, c in enumerate(prod):
                new_s[i] -= c
            s0, s1 = s1, _poly_trim(new_s)
        if not r1:
            raise ArithmeticError("element shares a factor with the minimal polynomial")
        scale = 1 / r1[0]
        inv = [c * scale for c in s1]
        inv += [Fraction(0)] * (self.field.degree - len(inv))
        return Cyclo(self.field, tuple(inv[: self.field.degree]))

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self * other.inverse()

    def __rtruediv__(self, other):
        return self.inverse() * other

    def __pow__(self, exponent: int) -> "Cyclo":
        if exponent < 0:
            return self.inverse() ** (-exponent)
        result = self.field.one
        base = self
        e = exponent
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def __bool__(self) -> bool:
        return not self.is_zero()

    def as_rational(self) -> Fraction:
        if any(self.coeffs[1:]):
            raise ValueError("element is not rational")
        return self.coeffs[0]

    def to_complex(self) -> complex:
        z = cmath.exp(2j * math.pi / self.field.order)
        total = 0j
        power = 1 + 0j
        for c in self.coeffs:
            if c:
                total += float(c) * power
            power *= z
        return total

    def __str__(self) -> str:
        pieces = []
        for i, c in enumerate(self.coeffs):
            if not c:
                continue
            mag = -c if c < 0 else c
            if i == 0:
                body = str(mag)
            else:
                z = "zeta" if i == 1 else f"zeta^{i}"
                body = z if mag == 1 else f"{mag}*{z}"
            pieces.append(("-" if c < 0 else "+", body))
        if not pieces:
            return "0"
        sign, body = pieces[0]
        text = ("-" if sign == "-" else "") + body
        for sign, body in pieces[1:]:
            text += f" {sign} {body}"
        return text

    def __repr__(self) -> str:
        return f"Cyclo({self.field!r}, {self})"
