"""Construction of the quadric ring, its generators, and the algebra map.

From a lambda table with degrees N_1..N_n we build the ring on variables
Z_{i,k} (1 <= i <= n, 1 <= k <= N_i) ranked ascending as

    Z_{1,N_1}, ..., Z_{n,N_n}, Z_{1,1}, ..., Z_{1,N_1-1}, ..., Z_{n,1}, ..., Z_{n,N_n-1}

define for each i the linear forms

    L[i][N_i] = Z_{i,1} + ... + Z_{i,N_i-1} - Z_{i,N_i} + sum_{j != i} lambda[i][j][0] * Z_{j,N_j}
    L[i][k]   = Z_{i,1} + ... + Z_{i,k}
                - sum_{j != i} (lambda[i][j][N_i - k] - lambda[i][j][0]) * Z_{j,N_j}      (k < N_i)

and take the quadrics Z_{i,k} * L[i][k] as generators.  The algebra map
sends x_i to Z_{i,N_i}.  Rewriting each generator as a rule for the
square of its variable gives, for every variable outside the
Z_{i,N_i} block, a relation whose right side is strictly smaller in the
ranked order; those rewrites are what make the quotient visibly finite
once the Z_{i,N_i} are nilpotent.
"""

from __future__ import annotations

from dataclasses import dataclass

from .normalizer import LambdaTable
from .polyring import LinearForm, MonomialOrder, Polynomial, VariableTable
from .scalars import FieldSpec


class HatRing:
    """The Z-variable ring with its ascending ranking."""

    __slots__ = ("field", "degrees", "table", "order", "_position")

    def __init__(self, field: FieldSpec, degrees):
        self.field = field
        self.degrees = tuple(degrees)
        if any(N < 1 for N in self.degrees):
            raise ValueError("every N_i must be at least 1")
        names = []
        position = {}
        for i, N in enumerate(self.degrees):
            for k in range(1, N + 1):
                position[(i, k)] = len(names)
                names.append(f"Z_{i + 1}_{k}")
        chain = [(i, N) for i, N in enumerate(self.degrees)]
        for i, N in enumerate(self.degrees):
            chain.extend((i, k) for k in range(1, N))
        rank = [0] * len(names)
        for r, ik in enumerate(chain):
            rank[position[ik]] = r
        self.table = VariableTable(tuple(names), tuple(rank))
        self.order = MonomialOrder(self.table)
        self._position = position

    @property
    def n(self) -> int:
        return len(self.degrees)

    def __len__(self):
        return len(self.table)

    def position(self, i: int, k: int) -> int:
        """Index of Z_{i,k} in the variable table (i 0-based, k 1-based)."""
        return self._position[(i, k)]

    def variable(self, i: int, k: int) -> Polynomial:
        return Polynomial.variable(self.field, self.table, self.position(i, k))

    def top_variable(self, i: int) -> Polynomial:
        """Z_{i,N_i}, the image of x_i."""
        return self.variable(i, self.degrees[i])


class HatForms:
    """The linear forms L[i][k], with the lambda differences cached."""

    __slots__ = ("ring", "forms", "lambda_diff")

    def __init__(self, ring: HatRing, table: LambdaTable):
        field = ring.field
        self.ring = ring
        self.lambda_diff = {
            (i, j, k): table.get(i, j, k) - table.get(i, j, 0)
            for i in range(ring.n)
            for j in range(ring.n)
            if j != i
            for k in range(1, ring.degrees[i])
        }
        forms = {}
        for i, N in enumerate(ring.degrees):
            coeffs = [field.zero()] * len(ring)
            for k in range(1, N):
                coeffs[ring.position(i, k)] = field.one()
            coeffs[ring.position(i, N)] = -field.one()
            for j in range(ring.n):
                if j != i:
                    coeffs[ring.position(j, ring.degrees[j])] = table.get(i, j, 0)
            forms[(i, N)] = LinearForm(field, ring.table, coeffs)
            for k in range(1, N):
                coeffs = [field.zero()] * len(ring)
                for t in range(1, k + 1):
                    coeffs[ring.position(i, t)] = field.one()
                for j in range(ring.n):
                    if j != i:
                        coeffs[ring.position(j, ring.degrees[j])] = -self.lambda_diff[(i, j, N - k)]
                forms[(i, k)] = LinearForm(field, ring.table, coeffs)
        self.forms = forms

    def get(self, i: int, k: int) -> LinearForm:
        return self.forms[(i, k)]


@dataclass(frozen=True)
class QuadraticCI:
    """The quadric generators Z_{i,k} * L[i][k] of the hat ideal."""

    ring: HatRing
    forms: HatForms
    generators: tuple

    def __post_init__(self):
        if len(self.generators) != len(self.ring):
            raise ValueError("generator count must equal variable count")
        for g in self.generators:
            if not g.is_homogeneous() or g.degree() != 2:
                raise ValueError(f"generator is not a quadric: {g}")


@dataclass(frozen=True)
class EmbeddingMap:
    """x_i -> Z_{i,N_i}; images are distinct variables by construction."""

    source: VariableTable
    ring: HatRing

    def image_position(self, i: int) -> int:
        return self.ring.position(i, self.ring.degrees[i])

    def apply(self, f: Polynomial) -> Polynomial:
        if f.table != self.source:
            raise ValueError("polynomial does not live in the source ring")
        m = len(self.ring)
        terms = {}
        for mono, c in f.terms.items():
            exps = [0] * m
            for i, e in enumerate(mono):
                if e:
                    exps[self.image_position(i)] = e
            terms[tuple(exps)] = c
        return Polynomial(self.ring.field, self.ring.table, terms)


def build(table: LambdaTable) -> QuadraticCI:
    """The quadric ideal generators determined by a lambda table."""
    ring = HatRing(table.field, table.degrees)
    forms = HatForms(ring, table)
    generators = []
    for i, N in enumerate(ring.degrees):
        for k in range(1, N + 1):
            generators.append(ring.variable(i, k) * forms.get(i, k).to_polynomial())
    return QuadraticCI(ring, forms, tuple(generators))


def embedding_map(source: VariableTable, ci: QuadraticCI) -> EmbeddingMap:
    return EmbeddingMap(source, ci.ring)


def phi_apply(f: Polynomial, emb: EmbeddingMap) -> Polynomial:
    """Apply the algebra map x_i -> Z_{i,N_i}."""
    return emb.apply(f)


@dataclass(frozen=True)
class SquareRewrite:
    """Z_v^2 == Z_v * rhs_form, derived from one generator.

    ``exempt`` marks the Z_{i,N_i} rules, whose right side is not
    strictly smaller in the ranked order.
    """

    i: int
    k: int
    variable: int
    rhs: Polynomial
    exempt: bool


def square_rewrites(ci: QuadraticCI, table: LambdaTable):
    """One square rule per variable, read off the generators.

    For k = N_i:   Z^2 == Z * (Z_{i,1} + ... + Z_{i,N_i-1} + sum lambda0 Z_{j,N_j})
    For k < N_i:   Z^2 == Z * (sum (lambda^{N_i-k} - lambda^0) Z_{j,N_j}
                              - (Z_{i,1} + ... + Z_{i,k-1}))
    """
    ring = ci.ring
    field = ring.field
    out = []
    for i, N in enumerate(ring.degrees):
        for k in range(1, N + 1):
            coeffs = [field.zero()] * len(ring)
            if k == N:
                for t in range(1, N):
                    coeffs[ring.position(i, t)] = field.one()
                for j in range(ring.n):
                    if j != i:
                        coeffs[ring.position(j, ring.degrees[j])] = table.get(i, j, 0)
                exempt = True
            else:
                for j in range(ring.n):
                    if j != i:
                        coeffs[ring.position(j, ring.degrees[j])] = ci.forms.lambda_diff[(i, j, N - k)]
                for t in range(1, k):
                    coeffs[ring.position(i, t)] = -field.one()
                exempt = False
            form = LinearForm(field, ring.table, coeffs)
            rhs = ring.variable(i, k) * form.to_polynomial()
            out.append(SquareRewrite(i, k, ring.position(i, k), rhs, exempt))
    return out


def m_products(table: LambdaTable, ring: HatRing):
    """The shorthand products per polynomial index.

    m_i = prod_k (Z_{i,N_i} - sum_{j != i} lambda[i][j][k] * Z_{j,N_j}),
    l_i = prod over k of L[i][k]; both homogeneous of degree N_i.
    """
    field = ring.field
    forms = HatForms(ring, table)
    ms, ls = [], []
    for i, N in enumerate(ring.degrees):
        m = Polynomial.constant(field, ring.table, 1)
        for k in range(N):
            coeffs = [field.zero()] * len(ring)
            coeffs[ring.position(i, N)] = field.one()
            for j in range(ring.n):
                if j != i:
                    coeffs[ring.position(j, ring.degrees[j])] = -table.get(i, j, k)
            m = m * LinearForm(field, ring.table, coeffs).to_polynomial()
        ms.append(m)
        l = Polynomial.constant(field, ring.table, 1)
        for k in range(N):
            l = l * forms.get(i, N - k).to_polynomial()
        ls.append(l)
    return ms, ls
