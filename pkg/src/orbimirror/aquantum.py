"""Degree-one quantum data on the A side.

Multiplication by the hyperplane class ``eta_1^1`` in the small quantum
ring is the only product needed to pin down the initial conditions: acting
on a basis class it either shifts the hyperplane power inside a sector
(classically) or, on a sector's top power, jumps to the next sector in the
circle order while picking up a ``Q`` monomial:

    eta_1^1 * eta_{h}^{dim(h)} =
        (prod_{i in I(h)} 1/w_i) * Q^{gamma(next) - gamma(prev)} * eta_{next^{-1}}^0

where ``prev = h^{-1}`` and ``next`` is the sector after ``prev``; past the
last sector the exponent wraps through 1 back to the identity.  Iterating
gives the two power relations tested in the suite:

    (eta_1^1)^{k_min(g)} = Q^{gamma(g)} * s(g) * eta_{g^{-1}}^0,
    (eta_1^1)^{mu}       = Q * prod w_i^{-w_i},

with ``s(g) = prod_i w_i^{-ceil(gamma(g) w_i)}``.

The degree-one 3-point numbers fall into three classes (vanishing /
classical / quantum) decided by an exact integer congruence mod ``mu``; the
surviving values are products of inverse weights over fixed-index sets.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from fractions import Fraction

from .combinatorics import (
    Sector,
    Weights,
    age,
    fixed_indices,
    inverse_sector,
    sector_dim,
    sectors,
)
from .acohomology import (
    BasisClass,
    CohClass,
    basis_index,
    cup_basis,
    degree,
    ordered_basis,
)
from .errors import InternalConsistencyError
from .linalg import Matrix, zeros


class TripleKind(enum.Enum):
    VANISHING = "VANISHING"
    CLASSICAL = "CLASSICAL"
    QUANTUM = "QUANTUM"


@dataclass(frozen=True)
class TripleCase:
    kind: TripleKind
    test_value: int


def expected_curve_degree(
    w: Weights, g: Sector, d: int, g2: Sector, d2: int
) -> Fraction:
    """``mu`` times the hyperplane degree of the unique curve class that can
    support the invariant ``(eta_1^1, eta_g^d, eta_g2^d2)``:
    ``1 + deg/2 + deg'/2 - n``.
    """
    a = BasisClass(g, d)
    b = BasisClass(g2, d2)
    return 1 + degree(w, a) / 2 + degree(w, b) / 2 - w.n


def classify_triple(w: Weights, g: Sector, d: int, g2: Sector, d2: int) -> TripleCase:
    """Sort the triple ``(eta_1^1, eta_g^d, eta_g2^d2)`` into its case.

    The classifier is ``t = 1 + deg/2 + deg'/2 - n + mu*(gamma(g^-1) +
    gamma(g2^-1))``, always an exact integer.  The invariant vanishes unless
    ``t = 0 mod mu``; among the survivors the degree-0 (classical) ones are
    exactly those with ``2 + deg + deg' = 2n``.
    """
    t = expected_curve_degree(w, g, d, g2, d2) + w.mu * (
        inverse_sector(g) + inverse_sector(g2)
    )
    if t.denominator != 1:
        raise InternalConsistencyError(f"classifier {t} is not an integer")
    t = int(t)
    if t % w.mu != 0:
        return TripleCase(TripleKind.VANISHING, t)
    deg_sum = 2 + degree(w, BasisClass(g, d)) + degree(w, BasisClass(g2, d2))
    if deg_sum == 2 * w.n:
        return TripleCase(TripleKind.CLASSICAL, t)
    return TripleCase(TripleKind.QUANTUM, t)


def _inv_weight_product(w: Weights, g: Sector) -> Fraction:
    p = 1
    for i in fixed_indices(w, g):
        p *= w[i]
    return Fraction(1, p)


def three_point(w: Weights, g: Sector, d: int, g2: Sector, d2: int) -> Fraction:
    """The degree-one 3-point number ``((eta_1^1, eta_g^d, eta_g2^d2))``.

    >>> three_point(Weights(1, 2), Fraction(0), 1, Fraction(1, 2), 0)
    Fraction(1, 4)
    """
    case = classify_triple(w, g, d, g2, d2)
    if case.kind is TripleKind.VANISHING:
        return Fraction(0)
    if case.kind is TripleKind.CLASSICAL:
        return _inv_weight_product(w, g)
    return _inv_weight_product(w, g) * _inv_weight_product(w, g2)


def sector_constant(w: Weights, g: Sector) -> Fraction:
    """The structure constant ``prod_i w_i^(-ceil(gamma w_i))`` of the power
    relation ``(eta_1^1)^{k_min(g)} = Q^gamma * s * eta_{g^{-1}}^0``.

    >>> sector_constant(Weights(1, 2, 2, 3, 3, 3), Fraction(1, 3))
    Fraction(1, 108)
    """
    p = 1
    for wi in w:
        p *= wi ** math.ceil(g * wi)
    return Fraction(1, p)


def hyperplane_quantum_mult(w: Weights, c: CohClass) -> CohClass:
    """Small quantum multiplication by ``eta_1^1`` at the origin.

    Below a sector's top power this is the classical cup shift; on the top
    power it jumps to the next sector with the ``Q`` monomial described in
    the module docstring.
    """
    secs = sectors(w)
    pos = {g: i for i, g in enumerate(secs)}
    out = CohClass.zero()
    hyper = BasisClass(Fraction(0), 1)
    for bc, qexp, scalar in c.items():
        dim = sector_dim(w, bc.gamma)
        if bc.d < dim:
            coeff, target = cup_basis(w, hyper, bc)
            out.add_term(target, scalar * coeff, qexp)
            continue
        prev = inverse_sector(bc.gamma)
        p = pos[prev]
        if p + 1 < len(secs):
            nxt = secs[p + 1]
            jump = nxt - prev
        else:
            nxt = secs[0]
            jump = 1 - prev
        out.add_term(
            BasisClass(inverse_sector(nxt), 0),
            scalar * _inv_weight_product(w, prev),
            qexp + jump,
        )
    return out


def a0_matrix(w: Weights) -> Matrix:
    """Matrix of ``mu * (eta_1^1 *)`` over the ordered basis at ``Q = 1``.

    Columns are indexed by the source basis element.
    """
    basis = ordered_basis(w)
    index = basis_index(w)
    m = zeros(w.mu)
    for col, bc in enumerate(basis):
        image = hyperplane_quantum_mult(w, CohClass.line(bc))
        for target, value in image.at_q1().items():
            m[index[target]][col] += w.mu * value
    return m


def expected_dimension(
    w: Weights, k: int, curve_deg: Fraction, types: tuple[Sector, ...]
) -> Fraction:
    """Virtual dimension of the space of genus-0 maps with ``k`` marked
    points, hyperplane degree ``curve_deg`` and the given sector types:
    ``2 (mu * curve_deg + n - 3 + k - sum of ages)``.
    """
    if k != len(types):
        raise ValueError("k must equal the number of marked-point types")
    total_age = sum((age(w, g) for g in types), Fraction(0))
    return 2 * (w.mu * Fraction(curve_deg) + w.n - 3 + k - total_age)
