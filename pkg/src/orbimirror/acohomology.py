"""The classical ring on the A side.

The underlying graded vector space has the mu basis classes ``eta_g^d``,
one for each sector ``g`` and each power ``0 <= d <= sector_dim(g)`` of the
restricted hyperplane class.  This module implements, all in exact rational
arithmetic:

* the ordered basis and the grading ``deg(eta_g^d) = 2 (d + age(g))``,
* the Poincare pairing (perfect, block anti-diagonal in the sectors),
* the obstruction index set of a triple of sectors multiplying to 1,
* the cup product on basis classes and its bilinear extension,
* the total Chern class data of the tangent bundle,
* the grading matrix ``diag(deg / 2)``.

The cup product of two basis classes is ``prod(w_i for i in K)`` times a
single basis class in the product sector, where ``K`` combines the
obstruction set with the excess fixed locus:
``K = J(g0, g1, (g0 g1)^{-1}) + (I(g0 g1) - I(g0) & I(g1))``.
Products landing in an empty sector, or with target exponent above the
sector dimension, are zero.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .combinatorics import (
    Sector,
    Weights,
    age,
    fixed_indices,
    frac,
    inverse_sector,
    sector_dim,
    sectors,
)
from .errors import InternalConsistencyError
from .linalg import Matrix, zeros


@dataclass(frozen=True, order=True)
class BasisClass:
    """The class ``eta_g^d``: d-th hyperplane power on the sector of ``g``."""

    gamma: Sector
    d: int


class CohClass:
    """A finite sum ``c * Q^e * eta_g^d`` with exact rational ``c`` and ``e``.

    ``Q`` is the formal bookkeeping variable of the quantum corrections,
    weighted so that half-degree plus ``mu`` times the ``Q``-exponent is
    preserved; classical classes simply have all ``e = 0``.  Terms with
    zero scalar are pruned eagerly, so equality is structural.
    """

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        # terms: {BasisClass: {qexp: scalar}}
        self.terms = {} if terms is None else terms

    @classmethod
    def zero(cls) -> "CohClass":
        return cls()

    @classmethod
    def line(cls, bc: BasisClass, scalar=1, qexp=0) -> "CohClass":
        c = cls()
        c.add_term(bc, scalar, qexp)
        return c

    def add_term(self, bc: BasisClass, scalar, qexp=0) -> None:
        scalar = Fraction(scalar)
        if not scalar:
            return
        qexp = Fraction(qexp)
        bucket = self.terms.setdefault(bc, {})
        new = bucket.get(qexp, Fraction(0)) + scalar
        if new:
            bucket[qexp] = new
        else:
            bucket.pop(qexp, None)
            if not bucket:
                del self.terms[bc]

    def items(self):
        """Deterministic iteration: (BasisClass, qexp, scalar) sorted."""
        for bc in sorted(self.terms):
            for qexp in sorted(self.terms[bc]):
                yield bc, qexp, self.terms[bc][qexp]

    def at_q1(self) -> dict[BasisClass, Fraction]:
        """Specialize ``Q = 1``: collapse each basis coefficient to a rational."""
        out = {}
        for bc, bucket in self.terms.items():
            total = sum(bucket.values(), Fraction(0))
            if total:
                out[bc] = total
        return out

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        return isinstance(other, CohClass) and self.terms == other.terms

    def __repr__(self):
        if not self.terms:
            return "CohClass<0>"
        parts = []
        for bc, qexp, scalar in self.items():
            q = f" Q^{qexp}" if qexp else ""
            parts.append(f"{scalar}{q} eta[{bc.gamma}]^{bc.d}")
        return "CohClass<" + " + ".join(parts) + ">"


@lru_cache(maxsize=None)
def ordered_basis(w: Weights) -> tuple[BasisClass, ...]:
    """All ``eta_g^d`` sorted by ``(gamma, d)``; exactly ``mu`` classes.

    >>> ordered_basis(Weights(1, 2))
    (BasisClass(gamma=Fraction(0, 1), d=0), BasisClass(gamma=Fraction(0, 1), d=1), BasisClass(gamma=Fraction(1, 2), d=0))
    """
    basis = tuple(
        BasisClass(g, d) for g in sectors(w) for d in range(sector_dim(w, g) + 1)
    )
    if len(basis) != w.mu:
        raise InternalConsistencyError(
            f"basis has {len(basis)} classes, expected mu={w.mu}"
        )
    return basis


@lru_cache(maxsize=None)
def basis_index(w: Weights) -> dict[BasisClass, int]:
    """Position of each basis class inside :func:`ordered_basis`."""
    return {bc: i for i, bc in enumerate(ordered_basis(w))}


def degree(w: Weights, c: BasisClass) -> Fraction:
    """Orbifold degree ``2 (d + age(g))`` of a basis class."""
    return 2 * (c.d + age(w, c.gamma))


def integral_top(w: Weights) -> Fraction:
    """The integral of the top untwisted power: ``prod(1 / w_i)``."""
    p = 1
    for wi in w:
        p *= wi
    return Fraction(1, p)


def pairing(w: Weights, a: BasisClass, b: BasisClass) -> Fraction:
    """Poincare pairing of two basis classes.

    Nonzero only between mutually inverse sectors with complementary
    degrees, where it equals ``prod(1 / w_i for i in fixed_indices(g))``.
    """
    if b.gamma != inverse_sector(a.gamma):
        return Fraction(0)
    if degree(w, a) + degree(w, b) != 2 * w.n:
        return Fraction(0)
    p = 1
    for i in fixed_indices(w, a.gamma):
        p *= w[i]
    return Fraction(1, p)


@lru_cache(maxsize=None)
def gram_matrix(w: Weights) -> tuple[tuple[Fraction, ...], ...]:
    """Pairing matrix over the ordered basis (symmetric, nondegenerate)."""
    basis = ordered_basis(w)
    return tuple(tuple(pairing(w, a, b) for b in basis) for a in basis)


def obstruction_set(
    w: Weights, g0: Sector, g1: Sector, ginf: Sector
) -> frozenset[int]:
    """Indices where the three fractional rotation parts sum to 2.

    The sectors must multiply to the identity (rotation numbers summing to
    an integer); other triples are rejected.
    """
    if (g0 + g1 + ginf).denominator != 1:
        raise ValueError("sectors do not multiply to the identity")
    return frozenset(
        i
        for i, wi in enumerate(w)
        if frac(g0 * wi) + frac(g1 * wi) + frac(ginf * wi) == 2
    )


def cup_basis(
    w: Weights, a: BasisClass, b: BasisClass
) -> tuple[Fraction, BasisClass | None]:
    """Cup product of two basis classes: ``(coefficient, target)``.

    Returns ``(0, None)`` when the product sector is empty or the target
    exponent exceeds the sector dimension.

    >>> w = Weights(1, 2, 2, 3, 3, 3)
    >>> cup_basis(w, BasisClass(Fraction(1, 3), 0), BasisClass(Fraction(1, 3), 0))
    (Fraction(4, 1), BasisClass(gamma=Fraction(2, 3), d=2))
    """
    g0, g1 = a.gamma, b.gamma
    g = frac(g0 + g1)
    fixed = fixed_indices(w, g)
    d = a.d + b.d + age(w, g0) + age(w, g1) - age(w, g)
    if d.denominator != 1 or d < 0:
        raise InternalConsistencyError(
            f"cup exponent {d} is not a nonnegative integer for {a} * {b}"
        )
    if not fixed:
        return Fraction(0), None
    if d > len(fixed) - 1:
        return Fraction(0), None
    j = obstruction_set(w, g0, g1, inverse_sector(g))
    k = j | (fixed - (fixed_indices(w, g0) & fixed_indices(w, g1)))
    coeff = 1
    for i in k:
        coeff *= w[i]
    return Fraction(coeff), BasisClass(g, int(d))


def cup(w: Weights, a: CohClass, b: CohClass) -> CohClass:
    """Bilinear extension of :func:`cup_basis` (Q-monomials multiply)."""
    out = CohClass.zero()
    for bc_a, qa, ca in a.items():
        for bc_b, qb, cb in b.items():
            coeff, target = cup_basis(w, bc_a, bc_b)
            if target is not None:
                out.add_term(target, ca * cb * coeff, qa + qb)
    return out


def unit(w: Weights) -> CohClass:
    """The unit class ``eta_1^0``."""
    return CohClass.line(BasisClass(Fraction(0), 0))


def chern_total(w: Weights) -> tuple[int, ...]:
    """Coefficients of the total Chern class in powers of the hyperplane class.

    Expands ``prod(1 + w_i h)`` and truncates at ``h^(n+1) = 0``; the
    returned tuple has ``n + 1`` integer entries, entry 1 being ``mu``.
    """
    coeffs = [1]
    for wi in w:
        nxt = [0] * (len(coeffs) + 1)
        for k, c in enumerate(coeffs):
            nxt[k] += c
            nxt[k + 1] += c * wi
        coeffs = nxt
    return tuple(coeffs[: w.n + 1])


@lru_cache(maxsize=None)
def a_infinity_matrix(w: Weights) -> tuple[tuple[Fraction, ...], ...]:
    """Grading matrix ``diag(deg(eta) / 2)`` over the ordered basis.

    Together with its pairing adjoint it sums to ``n * Id``.
    """
    basis = ordered_basis(w)
    m: Matrix = zeros(w.mu)
    for i, bc in enumerate(basis):
        m[i][i] = degree(w, bc) / 2
    return tuple(tuple(row) for row in m)
