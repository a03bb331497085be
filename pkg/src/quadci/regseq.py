"""Split-sequence input model and regularity checks.

A split sequence is n homogeneous polynomials in n variables, each given
as a product of linear factors.  Regularity of such a sequence is
equivalent to the quotient being a finite dimensional vector space, so a
single Groebner computation decides it; the permutation and
factor-replacement checks below are executable forms of the stability
facts that regularity enjoys.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import linalg
from .groebner import Infinite, IdealBasis, buchberger, quotient_basis
from .polyring import LinearForm, MonomialOrder, Polynomial, VariableTable, product_of_factors
from .scalars import FieldSpec


class SplitSequence:
    """n factored homogeneous polynomials in n variables."""

    __slots__ = ("field", "table", "factors")

    def __init__(self, field: FieldSpec, table: VariableTable, factors):
        self.field = field
        self.table = table
        lists = tuple(tuple(fs) for fs in factors)
        if len(lists) != len(table):
            raise ValueError(
                f"need exactly {len(table)} polynomials for {len(table)} variables, got {len(lists)}"
            )
        for i, fs in enumerate(lists):
            if not fs:
                raise ValueError(f"polynomial {i + 1} has no factors")
            for lf in fs:
                if not isinstance(lf, LinearForm):
                    raise TypeError("factors must be LinearForm values")
                if lf.field != field or lf.table != table:
                    raise ValueError("factor does not live in the sequence's ring")
                if lf.is_zero():
                    raise ValueError(f"polynomial {i + 1} has a zero factor")
        self.factors = lists

    @property
    def n(self) -> int:
        return len(self.table)

    def polynomial(self, i: int) -> Polynomial:
        return product_of_factors(self.factors[i])

    def polynomials(self):
        return [self.polynomial(i) for i in range(self.n)]

    def degrees(self):
        return tuple(len(fs) for fs in self.factors)

    def order(self) -> MonomialOrder:
        return MonomialOrder(self.table)

    def matches_expanded(self, expanded) -> bool:
        """Exact cross-check of supplied expanded forms against the factors."""
        return all(self.polynomial(i) == p for i, p in enumerate(expanded))


@dataclass(frozen=True)
class RegularityCertificate:
    """Outcome of the Artinian test for a sequence."""

    artinian: bool
    dimension: int | None = None
    witness: Infinite | None = None

    def __post_init__(self):
        if self.artinian != (self.dimension is not None):
            raise ValueError("dimension must be present exactly when artinian")


def _certify(generators, order, max_degree=None, max_basis_size=None) -> RegularityCertificate:
    gb = buchberger(IdealBasis(tuple(generators), order), max_degree, max_basis_size)
    qb = quotient_basis(gb)
    if isinstance(qb, Infinite):
        return RegularityCertificate(False, None, qb)
    return RegularityCertificate(True, qb.dimension, None)


def check_regular(seq: SplitSequence, max_degree=None, max_basis_size=None) -> RegularityCertificate:
    """Regularity via finiteness of the quotient."""
    return _certify(seq.polynomials(), seq.order(), max_degree, max_basis_size)


def permutation_stability(seq: SplitSequence, sigma) -> bool:
    """Whether permuting the polynomials preserves the regularity verdict.

    Always true mathematically; a false return flags a bug in the basis
    machinery rather than a property of the input.
    """
    sigma = list(sigma)
    if sorted(sigma) != list(range(seq.n)):
        raise ValueError(f"not a permutation of 0..{seq.n - 1}: {sigma}")
    permuted = SplitSequence(seq.field, seq.table, [seq.factors[i] for i in sigma])
    a, b = check_regular(seq), check_regular(permuted)
    return (a.artinian, a.dimension) == (b.artinian, b.dimension)


def factor_replacement_stability(seq: SplitSequence, i: int, j: int) -> bool:
    """Whether replacing the i-th polynomial by its j-th factor stays Artinian."""
    if not (0 <= i < seq.n):
        raise ValueError(f"polynomial index {i} out of range")
    if not (0 <= j < len(seq.factors[i])):
        raise ValueError(f"factor index {j} out of range for polynomial {i + 1}")
    generators = seq.polynomials()
    generators[i] = seq.factors[i][j].to_polynomial()
    return _certify(generators, seq.order()).artinian


def full_linear_selection(seq: SplitSequence, choices) -> bool:
    """Whether one chosen factor per polynomial gives independent forms."""
    choices = list(choices)
    if len(choices) != seq.n:
        raise ValueError(f"need one factor choice per polynomial, got {len(choices)}")
    rows = []
    for i, j in enumerate(choices):
        if not (0 <= j < len(seq.factors[i])):
            raise ValueError(f"factor index {j} out of range for polynomial {i + 1}")
        rows.append(list(seq.factors[i][j].coeffs))
    return linalg.rank(rows, seq.field) == seq.n
