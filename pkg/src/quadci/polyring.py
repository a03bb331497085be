"""Variables, monomials, the graded monomial order, sparse polynomials,
linear forms, and linear changes of coordinates.

Monomials are plain tuples of non-negative integer exponents, one entry
per variable.  The order is graded: total degree decides first, and ties
are broken by scanning exponents from the highest-ranked variable
downward; at the first difference the lower exponent gives the smaller
monomial.  The variable ranking is data (a permutation carried by the
table), not a fixed convention, because the source ring and the quadric
ring rank their variables differently.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field as dc_field
from functools import cached_property

from . import linalg
from .errors import FieldMismatch, SingularMatrix
from .scalars import FieldSpec, Scalar

Monomial = tuple  # exponent vector, one non-negative int per variable


@dataclass(frozen=True)
class VariableTable:
    """Display names plus the order-theoretic ranking of the variables.

    ``rank[i]`` is the position of variable ``i`` in the ascending
    variable chain: rank 0 is the smallest variable.  The default is the
    listing order, i.e. the first variable is the smallest.
    """

    names: tuple
    rank: tuple = dc_field(default=())

    def __post_init__(self):
        names = tuple(self.names)
        object.__setattr__(self, "names", names)
        if len(set(names)) != len(names):
            raise ValueError("variable names must be distinct")
        rank = tuple(self.rank) if self.rank else tuple(range(len(names)))
        object.__setattr__(self, "rank", rank)
        if sorted(rank) != list(range(len(names))):
            raise ValueError("rank must be a permutation of the variable indices")

    def __len__(self):
        return len(self.names)

    def index(self, name: str) -> int:
        return self.names.index(name)

    @cached_property
    def scan_order(self) -> tuple:
        """Variable indices from highest rank to lowest (comparison order)."""
        return tuple(sorted(range(len(self.names)), key=lambda i: -self.rank[i]))


def monomial_mul(a: Monomial, b: Monomial) -> Monomial:
    return tuple(x + y for x, y in zip(a, b))


def monomial_div(a: Monomial, b: Monomial):
    """a / b as a monomial, or None when b does not divide a."""
    q = tuple(x - y for x, y in zip(a, b))
    return q if all(e >= 0 for e in q) else None


def monomial_lcm(a: Monomial, b: Monomial) -> Monomial:
    return tuple(max(x, y) for x, y in zip(a, b))


def monomial_degree(m: Monomial) -> int:
    return sum(m)


def monomials_of_degree(nvars: int, degree: int):
    """All exponent vectors of the given total degree (stars and bars)."""
    if nvars == 0:
        if degree == 0:
            yield ()
        return
    for cuts in itertools.combinations(range(degree + nvars - 1), nvars - 1):
        prev = -1
        exps = []
        for c in cuts:
            exps.append(c - prev - 1)
            prev = c
        exps.append(degree + nvars - 2 - prev)
        yield tuple(exps)


@dataclass(frozen=True)
class MonomialOrder:
    """Graded order induced by a variable table's ranking."""

    table: VariableTable

    def key(self, m: Monomial):
        """Sort key: total degree, then exponents in scan order."""
        return (sum(m), tuple(m[i] for i in self.table.scan_order))

    def compare(self, a: Monomial, b: Monomial) -> int:
        """-1, 0, or 1 as a <, =, > b."""
        if len(a) != len(b) or len(a) != len(self.table):
            raise ValueError("monomial length does not match the variable table")
        ka, kb = self.key(a), self.key(b)
        return (ka > kb) - (ka < kb)

    def monomials_below(self, m: Monomial):
        """All monomials strictly smaller than m; finite by gradedness."""
        bound = self.key(m)
        out = []
        for d in range(sum(m) + 1):
            for cand in monomials_of_degree(len(m), d):
                if self.key(cand) < bound:
                    out.append(cand)
        return out

    def sort(self, monomials, reverse=False):
        return sorted(monomials, key=self.key, reverse=reverse)


class Polynomial:
    """Sparse multivariate polynomial with exact Scalar coefficients."""

    __slots__ = ("field", "table", "terms")

    def __init__(self, field: FieldSpec, table: VariableTable, terms=None):
        self.field = field
        self.table = table
        clean = {}
        n = len(table)
        for m, c in (terms or {}).items():
            if len(m) != n:
                raise ValueError("exponent vector length does not match the table")
            c = field.scalar(c)
            if c:
                clean[tuple(m)] = c
        self.terms = clean

    @classmethod
    def zero(cls, field, table):
        return cls(field, table)

    @classmethod
    def constant(cls, field, table, value):
        return cls(field, table, {(0,) * len(table): field.scalar(value)})

    @classmethod
    def variable(cls, field, table, i):
        exps = [0] * len(table)
        exps[i] = 1
        return cls(field, table, {tuple(exps): field.one()})

    def _check(self, other):
        if self.field != other.field:
            raise FieldMismatch(f"cannot mix {self.field} and {other.field}")
        if self.table != other.table:
            raise ValueError("polynomials use different variable tables")

    def __add__(self, other):
        if not isinstance(other, Polynomial):
            return NotImplemented
        self._check(other)
        out = dict(self.terms)
        for m, c in other.terms.items():
            s = out.get(m)
            s = c if s is None else s + c
            if s:
                out[m] = s
            elif m in out:
                del out[m]
        return self._raw(out)

    def __sub__(self, other):
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self + (-other)

    def __neg__(self):
        return self._raw({m: -c for m, c in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, (Scalar, int)):
            c = self.field.scalar(other)
            if not c:
                return Polynomial.zero(self.field, self.table)
            return self._raw({m: a * c for m, a in self.terms.items()})
        if not isinstance(other, Polynomial):
            return NotImplemented
        self._check(other)
        out = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                m = monomial_mul(m1, m2)
                s = out.get(m)
                s = c1 * c2 if s is None else s + c1 * c2
                if s:
                    out[m] = s
                elif m in out:
                    del out[m]
        return self._raw(out)

    __rmul__ = __mul__

    def __pow__(self, e: int):
        if e < 0:
            raise ValueError("negative exponent")
        out = Polynomial.constant(self.field, self.table, 1)
        for _ in range(e):
            out = out * self
        return out

    def _raw(self, terms):
        p = Polynomial.__new__(Polynomial)
        p.field = self.field
        p.table = self.table
        p.terms = terms
        return p

    def __bool__(self):
        return bool(self.terms)

    def is_zero(self) -> bool:
        return not self.terms

    def __eq__(self, other):
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self.field == other.field and self.table == other.table and self.terms == other.terms

    __hash__ = None

    def coeff(self, m: Monomial) -> Scalar:
        return self.terms.get(tuple(m), self.field.zero())

    def degree(self) -> int:
        """Total degree; -1 for the zero polynomial."""
        return max((sum(m) for m in self.terms), default=-1)

    def is_homogeneous(self) -> bool:
        degrees = {sum(m) for m in self.terms}
        return len(degrees) <= 1

    def leading_monomial(self, order: MonomialOrder) -> Monomial:
        if not self.terms:
            raise ValueError("zero polynomial has no leading monomial")
        return max(self.terms, key=order.key)

    def leading_coefficient(self, order: MonomialOrder) -> Scalar:
        return self.terms[self.leading_monomial(order)]

    def monic(self, order: MonomialOrder) -> Polynomial:
        inv = self.leading_coefficient(order).inv()
        return self._raw({m: c * inv for m, c in self.terms.items()})

    def __str__(self):
        if not self.terms:
            return "0"
        order = MonomialOrder(self.table)
        parts = []
        for m in sorted(self.terms, key=order.key, reverse=True):
            c = self.terms[m]
            factors = [
                self.table.names[i] + (f"^{e}" if e > 1 else "")
                for i, e in enumerate(m)
                if e > 0
            ]
            mag, neg = c, False
            if self.field.kind == "rational" and c.value < 0:
                mag, neg = -c, True
            if not factors:
                body = str(mag)
            elif mag == self.field.one():
                body = "*".join(factors)
            else:
                body = "*".join([str(mag)] + factors)
            if not parts:
                parts.append(f"-1*{body}" if neg and factors else (f"-{body}" if neg else body))
            else:
                parts.append(f"- {body}" if neg else f"+ {body}")
        return " ".join(parts)

    def __repr__(self):
        return f"Polynomial({self})"


class LinearForm:
    """Homogeneous degree-1 form as a coefficient vector."""

    __slots__ = ("field", "table", "coeffs")

    def __init__(self, field: FieldSpec, table: VariableTable, coeffs):
        self.field = field
        self.table = table
        cs = tuple(field.scalar(c) for c in coeffs)
        if len(cs) != len(table):
            raise ValueError("coefficient count does not match the variable table")
        self.coeffs = cs

    @classmethod
    def from_polynomial(cls, p: Polynomial) -> "LinearForm":
        if not p.is_homogeneous() or (not p.is_zero() and p.degree() != 1):
            raise ValueError(f"not a linear form: {p}")
        coeffs = [p.field.zero()] * len(p.table)
        for m, c in p.terms.items():
            i = next(k for k, e in enumerate(m) if e)
            coeffs[i] = c
        return cls(p.field, p.table, coeffs)

    def to_polynomial(self) -> Polynomial:
        terms = {}
        for i, c in enumerate(self.coeffs):
            if c:
                exps = [0] * len(self.table)
                exps[i] = 1
                terms[tuple(exps)] = c
        return Polynomial(self.field, self.table, terms)

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def __getitem__(self, i) -> Scalar:
        return self.coeffs[i]

    def __add__(self, other):
        return LinearForm(self.field, self.table, [a + b for a, b in zip(self.coeffs, other.coeffs)])

    def __sub__(self, other):
        return LinearForm(self.field, self.table, [a - b for a, b in zip(self.coeffs, other.coeffs)])

    def __neg__(self):
        return LinearForm(self.field, self.table, [-a for a in self.coeffs])

    def __mul__(self, c):
        c = self.field.scalar(c)
        return LinearForm(self.field, self.table, [a * c for a in self.coeffs])

    __rmul__ = __mul__

    def __eq__(self, other):
        if not isinstance(other, LinearForm):
            return NotImplemented
        return self.field == other.field and self.table == other.table and self.coeffs == other.coeffs

    __hash__ = None

    def __str__(self):
        return str(self.to_polynomial())

    def __repr__(self):
        return f"LinearForm({self})"


def product_of_factors(factors) -> Polynomial:
    """Expand a nonempty product of nonzero linear forms."""
    factors = list(factors)
    if not factors:
        raise ValueError("empty factor list")
    out = None
    for lf in factors:
        if lf.is_zero():
            raise ValueError("zero linear factor")
        p = lf.to_polynomial()
        out = p if out is None else out * p
    return out


class LinearChange:
    """Invertible linear substitution x_i -> sum_j matrix[i][j] * x'_j."""

    __slots__ = ("field", "table", "matrix", "_images")

    def __init__(self, field: FieldSpec, table: VariableTable, matrix):
        self.field = field
        self.table = table
        n = len(table)
        rows = [tuple(field.scalar(c) for c in row) for row in matrix]
        if len(rows) != n or any(len(r) != n for r in rows):
            raise ValueError("matrix shape does not match the variable table")
        if not linalg.determinant(rows, field):
            raise SingularMatrix("change-of-coordinates matrix is singular")
        self.matrix = tuple(rows)
        self._images = None

    @classmethod
    def identity(cls, field, table):
        n = len(table)
        return cls(field, table, [[1 if i == j else 0 for j in range(n)] for i in range(n)])

    def is_identity(self) -> bool:
        one, zero = self.field.one(), self.field.zero()
        return all(
            c == (one if i == j else zero)
            for i, row in enumerate(self.matrix)
            for j, c in enumerate(row)
        )

    def inverse(self) -> "LinearChange":
        return LinearChange(self.field, self.table, linalg.invert(self.matrix, self.field))

    def apply(self, f: Polynomial) -> Polynomial:
        """Substitute every variable by its image; a ring homomorphism."""
        if f.table != self.table or f.field != self.field:
            raise ValueError("polynomial does not live in this change's ring")
        if self._images is None:
            self._images = tuple(
                LinearForm(self.field, self.table, row).to_polynomial() for row in self.matrix
            )
        out = Polynomial.zero(self.field, self.table)
        for m, c in f.terms.items():
            part = Polynomial.constant(self.field, self.table, c)
            for i, e in enumerate(m):
                for _ in range(e):
                    part = part * self._images[i]
            out = out + part
        return out

    def apply_linear(self, lf: LinearForm) -> LinearForm:
        """Image of a linear form: coefficient row times the matrix."""
        n = len(self.table)
        out = [self.field.zero()] * n
        for j, c in enumerate(lf.coeffs):
            if c:
                for k in range(n):
                    out[k] = out[k] + c * self.matrix[j][k]
        return LinearForm(self.field, self.table, out)


def apply_change(f: Polynomial, change: LinearChange) -> Polynomial:
    return change.apply(f)
