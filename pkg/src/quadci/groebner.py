"""Buchberger's algorithm, normal forms, quotient bases, and socles.

The basis returned is always the reduced Groebner basis with monic
leading coefficients, so normal forms are canonical and serialized
certificates are byte-stable.  Pair selection uses the normal strategy
(smallest lcm in the monomial order first) together with Buchberger's
coprime-lcm criterion.

Only homogeneous ideals are accepted: the whole pipeline is graded, and
rejecting inhomogeneous input early turns subtle downstream failures
into immediate ones.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import linalg
from .errors import CapExceeded, NotArtinian, SocleNotOneDimensional
from .polyring import MonomialOrder, Polynomial, monomial_div, monomial_lcm, monomial_mul


@dataclass(frozen=True)
class IdealBasis:
    """Generators of a homogeneous ideal together with a monomial order."""

    generators: tuple
    order: MonomialOrder

    def __post_init__(self):
        gens = tuple(self.generators)
        object.__setattr__(self, "generators", gens)
        if not gens:
            raise ValueError("ideal needs at least one generator")
        for g in gens:
            if g.is_zero():
                raise ValueError("zero generator")
            if not g.is_homogeneous():
                raise ValueError(f"inhomogeneous generator: {g}")
            if g.degree() < 1:
                raise ValueError("generators must have positive degree")
            if g.table != self.order.table:
                raise ValueError("generator does not live in the order's ring")

    @property
    def field(self):
        return self.generators[0].field

    @property
    def table(self):
        return self.order.table


class GroebnerBasis:
    """A reduced Groebner basis; immutable once constructed."""

    __slots__ = ("elements", "order", "field", "table", "_lead")

    def __init__(self, elements, order: MonomialOrder):
        self.order = order
        self.table = order.table
        self.elements = tuple(sorted(elements, key=lambda g: order.key(g.leading_monomial(order))))
        self.field = self.elements[0].field
        # (leading monomial, term map) per element; reduction hot path
        self._lead = tuple((g.leading_monomial(order), g.terms) for g in self.elements)

    def leading_monomials(self):
        return tuple(lm for lm, _ in self._lead)

    def __iter__(self):
        return iter(self.elements)

    def __len__(self):
        return len(self.elements)


def _reduce_terms(terms: dict, gb: GroebnerBasis) -> dict:
    """Full reduction of a term dict; every reducible monomial is rewritten."""
    key = gb.order.key
    work = dict(terms)
    remainder = {}
    lead = gb._lead
    while work:
        m = max(work, key=key)
        c = work.pop(m)
        for lm, gterms in lead:
            q = monomial_div(m, lm)
            if q is not None:
                # leading coefficient is 1: subtract c * q * g, head cancels
                for gm, gc in gterms.items():
                    if gm == lm:
                        continue
                    t = monomial_mul(gm, q)
                    s = work.get(t)
                    s = -(c * gc) if s is None else s - c * gc
                    if s:
                        work[t] = s
                    elif t in work:
                        del work[t]
                break
        else:
            remainder[m] = c
    return remainder


def normal_form(f: Polynomial, gb: GroebnerBasis) -> Polynomial:
    """Canonical representative of f modulo the ideal."""
    if f.table != gb.table:
        raise ValueError("polynomial does not live in the basis's ring")
    return Polynomial(f.field, f.table, _reduce_terms(f.terms, gb))


def _spoly(f: Polynomial, g: Polynomial, order: MonomialOrder) -> Polynomial:
    lf, lg = f.leading_monomial(order), g.leading_monomial(order)
    lcm = monomial_lcm(lf, lg)
    mf, mg = monomial_div(lcm, lf), monomial_div(lcm, lg)
    tf = Polynomial(f.field, f.table, {mf: f.field.one()})
    tg = Polynomial(g.field, g.table, {mg: g.field.one()})
    return tf * f - tg * g


def buchberger(basis: IdealBasis, max_degree=None, max_basis_size=None) -> GroebnerBasis:
    """Reduced Groebner basis of the ideal.

    ``max_degree`` caps the total degree of any S-pair lcm the run may
    process; ``max_basis_size`` caps the working basis length.  Breaching
    either raises CapExceeded.
    """
    order = basis.order
    key = order.key

    work = []
    for g in basis.generators:
        r = _reduce_interim(g, work, order)
        if r is not None:
            work.append(r)

    pairs = {(i, j) for i in range(len(work)) for j in range(i + 1, len(work))}
    while pairs:
        i, j = min(
            pairs,
            key=lambda p: (
                key(monomial_lcm(work[p[0]][0], work[p[1]][0])),
                p,
            ),
        )
        pairs.remove((i, j))
        lmi, lmj = work[i][0], work[j][0]
        lcm = monomial_lcm(lmi, lmj)
        if lcm == monomial_mul(lmi, lmj):
            continue  # coprime leading monomials: S-poly reduces to zero
        if max_degree is not None and sum(lcm) > max_degree:
            raise CapExceeded(
                f"S-pair degree {sum(lcm)} exceeds --max-total-degree {max_degree}"
            )
        s = _spoly(work[i][1], work[j][1], order)
        r = _reduce_interim(s, work, order)
        if r is not None:
            work.append(r)
            if max_basis_size is not None and len(work) > max_basis_size:
                raise CapExceeded(
                    f"basis size {len(work)} exceeds --max-basis-size {max_basis_size}"
                )
            t = len(work) - 1
            pairs.update((i, t) for i in range(t))

    elements = [g for _, g in work]
    # interreduce until stable: the reduced basis is unique
    changed = True
    while changed:
        changed = False
        for i in range(len(elements)):
            others = elements[:i] + elements[i + 1 :]
            if not others:
                continue
            gb = GroebnerBasis(others, order)
            r = normal_form(elements[i], gb)
            if r.is_zero():
                elements.pop(i)
                changed = True
                break
            r = r.monic(order)
            if r != elements[i]:
                elements[i] = r
                changed = True
                break
    return GroebnerBasis(elements, order)


def _reduce_interim(f: Polynomial, work, order: MonomialOrder):
    """Reduce f against the working list; None if it drops to zero."""
    if not work:
        r = f
    else:
        gb = GroebnerBasis([g for _, g in work], order)
        r = normal_form(f, gb)
    if r.is_zero():
        return None
    r = r.monic(order)
    return (r.leading_monomial(order), r)


@dataclass(frozen=True)
class QuotientBasis:
    """Standard monomials of an Artinian quotient, graded."""

    standard_monomials: tuple
    dimensions: tuple  # Hilbert function values for degrees 0..top

    @property
    def dimension(self) -> int:
        return len(self.standard_monomials)

    @property
    def top_degree(self) -> int:
        return len(self.dimensions) - 1

    def of_degree(self, d: int):
        return tuple(m for m in self.standard_monomials if sum(m) == d)


@dataclass(frozen=True)
class Infinite:
    """Witness that the quotient is not Artinian.

    ``witness_variable`` names a variable with no pure-power leading
    monomial in the basis, so its powers are all standard.
    """

    witness_variable: int
    witness_name: str


def quotient_basis(gb: GroebnerBasis):
    """Standard monomial basis, or an Infinite witness."""
    n = len(gb.table)
    lms = gb.leading_monomials()
    bounds = [None] * n
    for lm in lms:
        support = [i for i, e in enumerate(lm) if e]
        if len(support) == 1:
            i = support[0]
            if bounds[i] is None or lm[i] < bounds[i]:
                bounds[i] = lm[i]
    for i, b in enumerate(bounds):
        if b is None:
            return Infinite(i, gb.table.names[i])

    standard = []
    for exps in _boxed_exponents(bounds):
        if all(monomial_div(exps, lm) is None for lm in lms):
            standard.append(exps)
    standard.sort(key=gb.order.key)
    top = max((sum(m) for m in standard), default=0)
    dims = [0] * (top + 1)
    for m in standard:
        dims[sum(m)] += 1
    return QuotientBasis(tuple(standard), tuple(dims))


def _boxed_exponents(bounds):
    """All exponent vectors with e_i < bounds[i]."""
    if not bounds:
        yield ()
        return
    for head in range(bounds[0]):
        for tail in _boxed_exponents(bounds[1:]):
            yield (head,) + tail


def _coords(p: Polynomial, index: dict, size: int):
    """Coordinates of a reduced polynomial in the standard basis slice."""
    v = [p.field.zero()] * size
    for m, c in p.terms.items():
        v[index[m]] = c
    return v


def socle(gb: GroebnerBasis):
    """Socle degree and a generator of the annihilator of the variables.

    Works degree by degree: a class c is in the socle iff x_i * c
    reduces to zero for every variable.  Raises SocleNotOneDimensional
    when the resulting space does not have dimension exactly one, which
    is the certificate-level signal for non-Gorenstein input.
    """
    qb = quotient_basis(gb)
    if isinstance(qb, Infinite):
        raise NotArtinian(
            f"quotient is infinite dimensional (witness variable {qb.witness_name})",
            witness=qb,
        )
    field, table, n = gb.field, gb.table, len(gb.table)
    variables = [Polynomial.variable(field, table, i) for i in range(n)]
    found = []  # (degree, coefficient vector, degree's standard monomials)
    for d in range(qb.top_degree + 1):
        std_d = qb.of_degree(d)
        if not std_d:
            continue
        std_next = qb.of_degree(d + 1)
        rows = []
        # rows of the map std_d -> (+) n copies of std_{d+1}
        images = []
        for m in std_d:
            mono = Polynomial(field, table, {m: field.one()})
            images.append([normal_form(x * mono, gb) for x in variables])
        size = len(std_next)
        for i in range(n):
            for r in range(size):
                rows.append([images[col][i].terms.get(std_next[r], field.zero()) for col in range(len(std_d))])
        kern = linalg.kernel_basis(rows, len(std_d), field)
        for v in kern:
            found.append((d, v, std_d))
    if len(found) != 1:
        raise SocleNotOneDimensional(
            f"socle has dimension {len(found)}, expected 1",
            dimensions=sorted(d for d, _, _ in found),
        )
    d, v, std_d = found[0]
    gen = Polynomial(field, table, {m: c for m, c in zip(std_d, v) if c})
    return d, gen.monic(gb.order)


def spanning_rank(monomials, gb: GroebnerBasis) -> dict:
    """Rank of the given monomial classes inside each graded piece."""
    qb = quotient_basis(gb)
    if isinstance(qb, Infinite):
        raise NotArtinian(
            f"quotient is infinite dimensional (witness variable {qb.witness_name})",
            witness=qb,
        )
    field, table = gb.field, gb.table
    by_degree = {}
    for m in monomials:
        by_degree.setdefault(sum(m), []).append(tuple(m))
    ranks = {}
    for d in range(qb.top_degree + 1):
        std_d = qb.of_degree(d)
        ms = by_degree.get(d, [])
        if not std_d or not ms:
            ranks[d] = 0
            continue
        index = {m: i for i, m in enumerate(std_d)}
        rows = []
        for m in ms:
            nf = normal_form(Polynomial(field, table, {m: field.one()}), gb)
            rows.append(_coords(nf, index, len(std_d)))
        ranks[d] = linalg.rank(rows, field)
    return ranks


def hilbert_dimensions(gb: GroebnerBasis):
    """Hilbert function of the quotient, or an Infinite witness."""
    qb = quotient_basis(gb)
    if isinstance(qb, Infinite):
        return qb
    return qb.dimensions
