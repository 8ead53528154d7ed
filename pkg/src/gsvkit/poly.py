"""Sparse multivariate polynomials with exact cyclotomic coefficients.

A polynomial is a map from exponent vectors to nonzero Cyclo coefficients
over a fixed ordered variable tuple.  Values are immutable after
construction; every operation returns a fresh polynomial.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field as dc_field
from fractions import Fraction
from typing import Dict, Iterable, Mapping, Sequence, Tuple

from .cyclo import Cyclo, CyclotomicField, Scalar
from .errors import DegreeUndefinedError, GsvInputError, PolynomialParseError

DEFAULT_VARIABLES: Tuple[str, ...] = ("s0", "s1", "s2", "s3", "s4")

Exponent = Tuple[int, ...]


def _graded_lex_key(exp: Exponent):
    return (sum(exp), exp)


@dataclass(frozen=True, eq=False)
class Polynomial:
    field: CyclotomicField
    variables: Tuple[str, ...]
    terms: Dict[Exponent, Cyclo] = dc_field(default_factory=dict)

    def __post_init__(self):
        clean: Dict[Exponent, Cyclo] = {}
        nvars = len(self.variables)
        for exp, coeff in self.terms.items():
            exp = tuple(exp)
            if len(exp) != nvars:
                raise GsvInputError(
                    f"exponent vector {exp} does not match {nvars} variables")
            if any(e < 0 for e in exp):
                raise GsvInputError(f"negative exponent in {exp}")
            coeff = self.field.element(coeff)
            if not coeff.is_zero():
                clean[exp] = coeff
        object.__setattr__(self, "terms", clean)

    # -- constructors ------------------------------------------------------

    @classmethod
    def zero(cls, field: CyclotomicField, variables=DEFAULT_VARIABLES) -> "Polynomial":
        return cls(field, tuple(variables), {})

    @classmethod
    def constant(cls, field: CyclotomicField, value, variables=DEFAULT_VARIABLES) -> "Polynomial":
        variables = tuple(variables)
        return cls(field, variables, {(0,) * len(variables): field.element(value)})

    @classmethod
    def variable(cls, field: CyclotomicField, name: str, variables=DEFAULT_VARIABLES) -> "Polynomial":
        variables = tuple(variables)
        exp = [0] * len(variables)
        exp[variables.index(name)] = 1
        return cls(field, variables, {tuple(exp): field.one})

    # -- ring structure ----------------------------------------------------

    def _compatible(self, other: "Polynomial"):
        if self.field != other.field or self.variables != other.variables:
            raise GsvInputError("polynomials live over different variables or fields")

    def __eq__(self, other) -> bool:
        if not isinstance(other, Polynomial):
            return NotImplemented
        return (self.field == other.field and self.variables == other.variables
                and self.terms == other.terms)

    def __add__(self, other: "Polynomial") -> "Polynomial":
        self._compatible(other)
        merged = dict(self.terms)
        for exp, coeff in other.terms.items():
            merged[exp] = merged.get(exp, self.field.zero) + coeff
        return Polynomial(self.field, self.variables, merged)

    def __sub__(self, other: "Polynomial") -> "Polynomial":
        return self + (-other)

    def __neg__(self) -> "Polynomial":
        return Polynomial(self.field, self.variables,
                          {e: -c for e, c in self.terms.items()})

    def __mul__(self, other) -> "Polynomial":
        if isinstance(other, (int, Fraction, Cyclo)):
            scale = self.field.element(other)
            return Polynomial(self.field, self.variables,
                              {e: c * scale for e, c in self.terms.items()})
        self._compatible(other)
        out: Dict[Exponent, Cyclo] = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                exp = tuple(a + b for a, b in zip(e1, e2))
                prev = out.get(exp)
                out[exp] = c1 * c2 if prev is None else prev + c1 * c2
        return Polynomial(self.field, self.variables, out)

    __rmul__ = __mul__

    def __pow__(self, exponent: int) -> "Polynomial":
        if exponent < 0:
            raise GsvInputError("negative polynomial powers are not defined")
        result = Polynomial.constant(self.field, 1, self.variables)
        for _ in range(exponent):
            result = result * self
        return result

    # -- structure queries ---------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def degree(self) -> int:
        if not self.terms:
            raise DegreeUndefinedError("the zero polynomial has no degree")
        return max(sum(e) for e in self.terms)

    def is_homogeneous(self, d: int) -> bool:
        """True iff every term has total degree d (zero polynomial rejected)."""
        if not self.terms:
            raise DegreeUndefinedError("the zero polynomial has no degree")
        return all(sum(e) == d for e in self.terms)

    # -- calculus ------------------------------------------------------------

    def partial(self, index: int) -> "Polynomial":
        out: Dict[Exponent, Cyclo] = {}
        for exp, coeff in self.terms.items():
            e = exp[index]
            if e:
                new = list(exp)
                new[index] = e - 1
                key = tuple(new)
                term = coeff * e
                prev = out.get(key)
                out[key] = term if prev is None else prev + term
        return Polynomial(self.field, self.variables, out)

    def gradient(self) -> Tuple["Polynomial", ...]:
        return tuple(self.partial(i) for i in range(len(self.variables)))

    def hessian(self) -> Tuple[Tuple["Polynomial", ...], ...]:
        grads = self.gradient()
        return tuple(tuple(g.partial(j) for j in range(len(self.variables)))
                     for g in grads)

    # -- evaluation ------------------------------------------------------------

    def evaluate(self, point: Sequence[Scalar]) -> Cyclo:
        """Exact value at a point with coordinates in the coefficient domain."""
        if len(point) != len(self.variables):
            raise GsvInputError(
                f"point has {len(point)} coordinates, expected {len(self.variables)}")
        vals = [self.field.element(x) for x in point]
        powers: Dict[Tuple[int, int], Cyclo] = {}

        def power(i: int, e: int) -> Cyclo:
            if e == 1:
                return vals[i]
            got = powers.get((i, e))
            if got is None:
                got = power(i, e - 1) * vals[i]
                powers[(i, e)] = got
            return got

        total = self.field.zero
        for exp, coeff in self.terms.items():
            term = coeff
            dead = False
            for i, e in enumerate(exp):
                if e:
                    if vals[i].is_zero():
                        dead = True
                        break
                    term = term * power(i, e)
            if not dead:
                total = total + term
        return total

    def evaluate_complex(self, point: Sequence[complex]) -> complex:
        """Floating shadow of `evaluate`, for numeric search and sanity checks."""
        if len(point) != len(self.variables):
            raise GsvInputError("point length mismatch")
        total = 0j
        for exp, coeff in self.terms.items():
            term = coeff.to_complex()
            for x, e in zip(point, exp):
                if e:
                    term *= x ** e
            total += term
        return total

    # -- printing ---------------------------------------------------------------

    def to_text(self) -> str:
        """Canonical form: graded-lex term order, zeta powers split out."""
        if not self.terms:
            return "0"
        pieces = []
        for exp in sorted(self.terms, key=_graded_lex_key, reverse=True):
            coeff = self.terms[exp]
            for zpow, rat in enumerate(coeff.coeffs):
                if not rat:
                    continue
                factors = []
                mag = -rat if rat < 0 else rat
                if zpow:
                    factors.append("zeta" if zpow == 1 else f"zeta^{zpow}")
                for name, e in zip(self.variables, exp):
                    if e:
                        factors.append(name if e == 1 else f"{name}^{e}")
                if mag != 1 or not factors:
                    factors.insert(0, str(mag))
                pieces.append(("-" if rat < 0 else "+", "*".join(factors)))
        sign, body = pieces[0]
        text = ("-" if sign == "-" else "") + body
        for sign, body in pieces[1:]:
            text += f" {sign} {body}"
        return text

    def __str__(self) -> str:
        return self.to_text()

    def __repr__(self) -> str:
        return f"Polynomial({self.to_text()!r})"


# -- parsing ------------------------------------------------------------------

_TOKEN_RE = re.compile(r"(?P<num>\d+)|(?P<name>[A-Za-z_][A-Za-z_0-9]*)|(?P<op>[\^*/+-])")


def _tokenize(text: str):
    tokens = []
    pos = 0
    while pos < len(text):
        if text[pos].isspace():
            pos += 1
            continue
        m = _TOKEN_RE.match(text, pos)
        if m is None:
            raise PolynomialParseError(f"unexpected character {text[pos]!r}", pos)
        if m.lastgroup == "num":
            tokens.append(("num", int(m.group()), pos))
        elif m.lastgroup == "name":
            tokens.append(("name", m.group(), pos))
        else:
            tokens.append(("op", m.group(), pos))
        pos = m.end()
    return tokens


class _Parser:
    def __init__(self, tokens, field: CyclotomicField, variables: Tuple[str, ...]):
        self.tokens = tokens
        self.i = 0
        self.field = field
        self.variables = variables

    def peek(self):
        return self.tokens[self.i] if self.i < len(self.tokens) else (None, None, None)

    def next(self):
        tok = self.peek()
        self.i += 1
        return tok

    def fail(self, message):
        pos = self.peek()[2]
        raise PolynomialParseError(message, pos)

    def parse(self) -> Polynomial:
        if not self.tokens:
            self.fail("empty polynomial")
        terms: Dict[Exponent, Cyclo] = {}
        sign = 1
        kind, value, _ = self.peek()
        if kind == "op" and value in "+-":
            self.next()
            sign = -1 if value == "-" else 1
        while True:
            exp, coeff = self.parse_term()
            if sign < 0:
                coeff = -coeff
            prev = terms.get(exp)
            terms[exp] = coeff if prev is None else prev + coeff
            kind, value, pos = self.peek()
            if kind is None:
                break
            if kind == "op" and value in "+-":
                self.next()
                sign = -1 if value == "-" else 1
                continue
            raise PolynomialParseError(f"expected '+' or '-', found {value!r}", pos)
        return Polynomial(self.field, self.variables, terms)

    def parse_term(self):
        exp = [0] * len(self.variables)
        coeff = self.field.one
        while True:
            coeff = self.parse_factor(exp, coeff)
            kind, value, _ = self.peek()
            if kind == "op" and value == "*":
                self.next()
                continue
            return tuple(exp), coeff

    def parse_factor(self, exp, coeff):
        kind, value, pos = self.next()
        if kind == "num":
            rational = Fraction(value)
            k2, v2, _ = self.peek()
            if k2 == "op" and v2 == "/":
                self.next()
                k3, v3, p3 = self.next()
                if k3 != "num":
                    raise PolynomialParseError("expected an integer denominator", p3)
                if v3 == 0:
                    raise PolynomialParseError("zero denominator", p3)
                rational /= v3
            return coeff * rational
        if kind == "name":
            if value == "zeta":
                if self.field.order == 1:
                    raise PolynomialParseError(
                        "zeta used without a declared root-of-unity extension", pos)
                return coeff * self.field.zeta_power(self.parse_exponent())
            if value not in self.variables:
                raise PolynomialParseError(f"unknown variable {value}", pos)
            exp[self.variables.index(value)] += self.parse_exponent()
            return coeff
        raise PolynomialParseError("expected a coefficient or a variable", pos)

    def parse_exponent(self) -> int:
        kind, value, _ = self.peek()
        if kind == "op" and value == "^":
            self.next()
            k2, v2, p2 = self.next()
            if k2 != "num":
                raise PolynomialParseError("expected a non-negative integer exponent", p2)
            return v2
        return 1


def parse_polynomial(text: str, field: CyclotomicField | None = None,
                     variables: Sequence[str] = DEFAULT_VARIABLES) -> Polynomial:
    """Parse the artifact grammar: rational coefficients, '*'-joined powers,
    'zeta' for the declared root of unity, terms joined by '+'/'-'."""
    field = field or CyclotomicField(5)
    return _Parser(_tokenize(text), field, tuple(variables)).parse()


def parse_scalar(text: str, field: CyclotomicField | None = None) -> Cyclo:
    """Parse a bare coefficient-domain value such as '1/2', '-zeta^3', '1 + zeta'."""
    poly = parse_polynomial(text, field, variables=())
    return poly.terms.get((), (field or CyclotomicField(5)).zero)


# -- the moment map and the superpotential -------------------------------------

def superpotential(g: Polynomial) -> Polynomial:
    """p * g over the variable tuple extended by p.

    Its gradient stacks (p * dg/ds_i, g), so the joint zero locus splits into
    {g = 0, p * dg = 0} exactly as the ground-state construction needs.
    """
    if "p" in g.variables:
        raise GsvInputError("polynomial already involves p")
    variables = g.variables + ("p",)
    terms = {exp + (1,): coeff for exp, coeff in g.terms.items()}
    return Polynomial(g.field, variables, terms)


@dataclass(frozen=True)
class MomentMap:
    """U(1) charge data and moment level for the (s0..s4; p) field space.

    The weights are pinned to (+1,...,+1; -5); only the sign of the level
    enters the geometry downstream.
    """

    level: Fraction
    s_weights: Tuple[int, ...] = (1, 1, 1, 1, 1)
    p_weight: int = -5

    def __post_init__(self):
        object.__setattr__(self, "level", Fraction(self.level))
        if self.s_weights != (1, 1, 1, 1, 1) or self.p_weight != -5:
            raise GsvInputError("moment-map weights are fixed to (1,1,1,1,1; -5)")

    @property
    def sheet(self) -> int:
        if self.level > 0:
            return 1
        if self.level < 0:
            return -1
        return 0

    def defining_expression(self) -> str:
        return "|s0|^2 + |s1|^2 + |s2|^2 + |s3|^2 + |s4|^2 - 5*|p|^2 - r"
