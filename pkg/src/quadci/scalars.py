"""Exact coefficient arithmetic over the rationals and prime fields GF(p).

Rational values are `fractions.Fraction` (arbitrary precision, stored in
lowest terms with positive denominator); prime-field values are residues
in [0, p).  All operations are exact; there is deliberately no floating
point anywhere in this package.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction

from .errors import FieldMismatch, ParseError

RATIONAL = "rational"
PRIME = "prime"

_SCALAR_RE = re.compile(r"^(-?\d+)(?:/(-?\d+))?$")


def is_prime(n: int) -> bool:
    """Deterministic Miller-Rabin, valid for all n < 3.3e24."""
    if n < 2:
        return False
    small = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)
    if n in small:
        return True
    if any(n % p == 0 for p in small):
        return False
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in small:
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


@dataclass(frozen=True)
class FieldSpec:
    """The coefficient field: the rationals, or GF(p) for a prime p."""

    kind: str
    modulus: int | None = None

    def __post_init__(self):
        if self.kind == RATIONAL:
            if self.modulus is not None:
                raise ValueError("rational field takes no modulus")
        elif self.kind == PRIME:
            if self.modulus is None or self.modulus < 2 or not is_prime(self.modulus):
                raise ValueError(f"modulus must be a prime >= 2, got {self.modulus!r}")
        else:
            raise ValueError(f"unknown field kind {self.kind!r}")

    def scalar(self, value) -> Scalar:
        """Canonical Scalar from an int, Fraction, or Scalar of this field."""
        if isinstance(value, Scalar):
            if value.field != self:
                raise FieldMismatch(f"scalar belongs to {value.field}, not {self}")
            return value
        return Scalar(self, value)

    def zero(self) -> Scalar:
        return Scalar(self, 0)

    def one(self) -> Scalar:
        return Scalar(self, 1)

    def characteristic(self) -> int:
        return 0 if self.kind == RATIONAL else self.modulus

    def __str__(self):
        return "QQ" if self.kind == RATIONAL else f"GF({self.modulus})"


def rational_field() -> FieldSpec:
    return FieldSpec(RATIONAL)


def prime_field(p: int) -> FieldSpec:
    return FieldSpec(PRIME, p)


class Scalar:
    """An exact field element; immutable and canonical by construction."""

    __slots__ = ("field", "value")

    def __init__(self, field: FieldSpec, value):
        object.__setattr__(self, "field", field)
        if field.kind == RATIONAL:
            canonical = value if isinstance(value, Fraction) else Fraction(value)
        else:
            if isinstance(value, Fraction):
                if value.denominator % field.modulus == 0:
                    raise ZeroDivisionError(f"denominator of {value} vanishes mod {field.modulus}")
                canonical = (
                    value.numerator * pow(value.denominator, -1, field.modulus)
                ) % field.modulus
            else:
                canonical = int(value) % field.modulus
        object.__setattr__(self, "value", canonical)

    def __setattr__(self, name, val):
        raise AttributeError("Scalar is immutable")

    def _coerce(self, other):
        if isinstance(other, Scalar):
            if other.field != self.field:
                raise FieldMismatch(f"cannot mix {self.field} and {other.field}")
            return other
        if isinstance(other, (int, Fraction)):
            return Scalar(self.field, other)
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        if self.field.kind == PRIME:
            return Scalar(self.field, (self.value + o.value) % self.field.modulus)
        return Scalar(self.field, self.value + o.value)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return Scalar(self.field, self.value - o.value)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return Scalar(self.field, o.value - self.value)

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        if self.field.kind == PRIME:
            return Scalar(self.field, (self.value * o.value) % self.field.modulus)
        return Scalar(self.field, self.value * o.value)

    __rmul__ = __mul__

    def __neg__(self):
        return Scalar(self.field, -self.value)

    def inv(self) -> Scalar:
        """Multiplicative inverse; raises ZeroDivisionError on zero."""
        if not self:
            raise ZeroDivisionError("inverse of zero")
        if self.field.kind == RATIONAL:
            return Scalar(self.field, 1 / self.value)
        return Scalar(self.field, pow(self.value, self.field.modulus - 2, self.field.modulus))

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self * o.inv()

    def __bool__(self):
        return self.value != 0

    def __eq__(self, other):
        if isinstance(other, Scalar):
            return self.field == other.field and self.value == other.value
        if isinstance(other, (int, Fraction)):
            return self == Scalar(self.field, other)
        return NotImplemented

    def __hash__(self):
        return hash((self.field, self.value))

    def __str__(self):
        return str(self.value)

    def __repr__(self):
        return f"Scalar({self.field}, {self.value})"


def parse_scalar(text: str, field: FieldSpec) -> Scalar:
    """Parse `int` or `int/int` into a canonical Scalar."""
    m = _SCALAR_RE.match(text.strip())
    if m is None:
        raise ParseError(f"malformed scalar literal {text!r}")
    num = int(m.group(1))
    if m.group(2) is None:
        return Scalar(field, num)
    den = int(m.group(2))
    if den == 0:
        raise ParseError(f"zero denominator in {text!r}")
    if field.kind == PRIME and den % field.modulus == 0:
        raise ParseError(f"denominator of {text!r} vanishes in {field}")
    return Scalar(field, Fraction(num, den))
