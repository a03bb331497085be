"""Coordinate normalization of a split regular sequence.

The distinguished (by default: last) factor of each polynomial is mapped
to the matching variable; in the new coordinates every remaining factor
of the i-th polynomial must involve its own variable, and dividing it by
that coefficient yields the lambda table

    f_i = u_i * x_i * prod_k (x_i - sum_{j != i} lambda[i][j][k] * x_j)

with the stray unit u_i collecting the divided-out coefficients.  We keep
u_i explicit instead of rescaling f_i: unit scaling does not change the
ideal and exact certificates are easier to audit this way.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import linalg
from .errors import InputError, SelectedFactorsDependent, SingularMatrix, ZeroDiagonalCoefficient
from .polyring import LinearChange, LinearForm, Polynomial, VariableTable
from .regseq import SplitSequence
from .scalars import FieldSpec, Scalar


@dataclass(frozen=True)
class LambdaTable:
    """The normal-form coefficients lambda[i][j][k] and units u_i.

    Entries exist exactly for j != i and 0 <= k < N_i, where the i-th
    polynomial has degree N_i + 1.
    """

    field: FieldSpec
    degrees: tuple  # N_1..N_n, each >= 1
    entries: dict  # (i, j, k) -> Scalar, j != i
    units: tuple  # nonzero Scalar per polynomial

    def __post_init__(self):
        if any(N < 1 for N in self.degrees):
            raise ValueError("every N_i must be at least 1")
        if any(not u for u in self.units):
            raise ValueError("units must be nonzero")
        for (i, j, k) in self.entries:
            if i == j:
                raise ValueError("lambda entries are defined only for j != i")
            if not (0 <= k < self.degrees[i]):
                raise ValueError(f"factor index {k} out of range for polynomial {i + 1}")

    @property
    def n(self) -> int:
        return len(self.degrees)

    def get(self, i: int, j: int, k: int) -> Scalar:
        return self.entries.get((i, j, k), self.field.zero())

    def with_entry(self, i: int, j: int, k: int, value: Scalar) -> "LambdaTable":
        entries = dict(self.entries)
        entries[(i, j, k)] = self.field.scalar(value)
        return LambdaTable(self.field, self.degrees, entries, self.units)


@dataclass(frozen=True)
class NormalizationResult:
    table: LambdaTable
    change: LinearChange
    normalized: SplitSequence


def monic_factor(table: LambdaTable, var_table: VariableTable, i: int, k: int) -> LinearForm:
    """The normal-form factor x_i - sum_{j != i} lambda[i][j][k] x_j."""
    field = table.field
    coeffs = [field.zero()] * table.n
    coeffs[i] = field.one()
    for j in range(table.n):
        if j != i:
            coeffs[j] = -table.get(i, j, k)
    return LinearForm(field, var_table, coeffs)


def choose_factor_order(seq: SplitSequence, selection) -> SplitSequence:
    """Rotate the selected factor of each polynomial into last position."""
    selection = list(selection)
    if len(selection) != seq.n:
        raise ValueError(f"need one selection per polynomial, got {len(selection)}")
    new_factors = []
    for i, j in enumerate(selection):
        fs = list(seq.factors[i])
        if not (0 <= j < len(fs)):
            raise ValueError(f"factor index {j} out of range for polynomial {i + 1}")
        chosen = fs.pop(j)
        new_factors.append(fs + [chosen])
    return SplitSequence(seq.field, seq.table, new_factors)


def normalize(seq: SplitSequence, selection=None) -> NormalizationResult:
    """Find the coordinate change putting the sequence in normal form.

    ``selection`` optionally picks which factor of each polynomial is
    mapped to its variable; the default is the last factor as given.
    Raises SelectedFactorsDependent or ZeroDiagonalCoefficient when the
    construction's independence requirements fail, which for a verified
    Artinian input cannot happen.
    """
    if selection is not None:
        seq = choose_factor_order(seq, selection)
    field, table, n = seq.field, seq.table, seq.n
    if any(len(fs) < 2 for fs in seq.factors):
        raise InputError("every polynomial must have degree at least 2 to normalize")

    last_rows = [list(fs[-1].coeffs) for fs in seq.factors]
    try:
        matrix = linalg.invert(last_rows, field)
    except SingularMatrix:
        raise SelectedFactorsDependent(
            "selected factors are linearly dependent; the sequence is not regular"
        ) from None
    change = LinearChange(field, table, matrix)

    entries = {}
    units = []
    new_factors = []
    for i, fs in enumerate(seq.factors):
        transformed = [change.apply_linear(lf) for lf in fs]
        u = field.one()
        for k, g in enumerate(transformed[:-1]):
            diag = g[i]
            if not diag:
                raise ZeroDiagonalCoefficient(
                    f"factor {k} of polynomial {i + 1} lost x_{i + 1} after the change; "
                    "the sequence is not regular"
                )
            u = u * diag
            inv = diag.inv()
            for j in range(n):
                if j != i:
                    lam = -(g[j] * inv)
                    if lam:
                        entries[(i, j, k)] = lam
        units.append(u)
        new_factors.append(transformed)

    degrees = tuple(len(fs) - 1 for fs in seq.factors)
    lam_table = LambdaTable(field, degrees, entries, tuple(units))
    normalized = SplitSequence(field, table, new_factors)
    return NormalizationResult(lam_table, change, normalized)


def reconstruct(result: NormalizationResult) -> SplitSequence:
    """Rebuild the sequence u_i * x_i * prod(x_i - sum lambda x_j) from the table.

    Expanding its polynomials must reproduce the normalized (changed)
    polynomials exactly; tests rely on this round trip.
    """
    table = result.table
    var_table = result.normalized.table
    field = table.field
    factors = []
    for i in range(table.n):
        fs = [monic_factor(table, var_table, i, k) for k in range(table.degrees[i])]
        xi = [field.zero()] * table.n
        xi[i] = table.units[i]
        fs.append(LinearForm(field, var_table, xi))
        factors.append(fs)
    return SplitSequence(field, var_table, factors)
