"""Reconstruction of the genus-0 potential from its cubic data.

The potential is the series ``F(t) = sum_alpha A(alpha) t^alpha / alpha!``
over multi-indices ``alpha`` in N^mu, subject to

* the associativity (WDVV) equations
  ``sum_a F_ija g^{aa*} F_{a*kl} = sum_a F_jka g^{aa*} F_{a*il}``,
* the scaling identity ``mu A(alpha + e_1) = A(alpha) d(alpha)`` for
  ``|alpha| >= 3``, where ``d(alpha) = 3 - n + sum_k alpha_k (sigma(k) - 1)``,
* the flat unit: ``A(alpha) = 0`` whenever ``alpha_0 > 0`` and ``|alpha| >= 4``
  (third derivatives in the unit direction are the constant metric),
* the cubic initial data ``A(e_i + e_j + e_k) = g(e_i * e_j, e_k)`` from the
  B-side product and residue metric.

Everything of length >= 4 is forced:  indices touching slot 0 or slot 1 are
settled by the unit and scaling rules, and a multi-index supported on
``{2, ..., mu-1}`` is solved by a chain of WDVV equations ``(1, j, k, l)``.
In that equation the two length-``|alpha|+3`` unknowns are
``A(alpha + e_{1+j} + e_k + e_l)`` and ``A(alpha + e_j + e_k + e_{1+l})``
(all other top terms carry a slot-1 factor and reduce by scaling), and the
coefficient of each is a nonzero cubic number times an inverse metric
entry, so each chain step is an exact division.  Walking ``j`` down and
``l`` up, the chain terminates as soon as a slot reaches 0 or 1.

The decomposition rule used here (peel the smallest support index first)
guarantees the two unknowns of every chain equation are distinct
multi-indices, so no step degenerates.

All arithmetic is exact; no floating point appears anywhere.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from itertools import product as iter_product

from . import bside
from .combinatorics import Weights, spectrum
from .errors import InternalConsistencyError

MultiIndex = tuple[int, ...]


@lru_cache(maxsize=None)
def initial_coeffs(w: Weights) -> dict[tuple[int, int, int], Fraction]:
    """Nonzero cubic coefficients ``A(e_i+e_j+e_k) = g(e_i * e_j, e_k)``,
    keyed by sorted index triples.

    Nonzero exactly when ``i + j + k = n mod mu``.
    """
    mu = w.mu
    out: dict[tuple[int, int, int], Fraction] = {}
    for i in range(mu):
        for j in range(i, mu):
            coeff, tgt = bside.product(w, i, j)
            for k in range(j, mu):
                value = coeff * bside.metric(w, tgt, k)
                if value:
                    out[(i, j, k)] = value
    return out


def scaling_weight(w: Weights, alpha: MultiIndex) -> Fraction:
    """``d(alpha) = 3 - n + sum_k alpha_k (sigma(k) - 1)``."""
    sigma = spectrum(w)
    return 3 - w.n + sum(
        (alpha[k] * (sigma[k] - 1) for k in range(len(alpha)) if alpha[k]),
        Fraction(0),
    )


@dataclass
class Potential:
    """A truncated potential: every coefficient with ``3 <= |alpha| <=
    max_length`` is determined; absent keys in that range are exact zeros.
    """

    weights: Weights
    max_length: int
    coeffs: dict[MultiIndex, Fraction]
    _dual: tuple[int, ...] = field(repr=False, default=())
    _ginv: tuple[Fraction, ...] = field(repr=False, default=())

    def coeff(self, alpha: MultiIndex) -> Fraction:
        total = sum(alpha)
        if total < 3:
            raise ValueError("coefficients of length < 3 are not part of the data")
        if total > self.max_length:
            raise ValueError(
                f"length {total} exceeds reconstruction depth {self.max_length}"
            )
        return self.coeffs.get(tuple(alpha), Fraction(0))

    def nonzero_items(self) -> list[tuple[MultiIndex, Fraction]]:
        return sorted(self.coeffs.items(), key=lambda kv: (sum(kv[0]), kv[0]))


def _metric_diagonal(w: Weights) -> tuple[tuple[int, ...], tuple[Fraction, ...]]:
    mu = w.mu
    dual = tuple((w.n - a) % mu for a in range(mu))
    ginv = tuple(1 / bside.metric(w, a, dual[a]) for a in range(mu))
    return dual, ginv


def _sub_indices(alpha: MultiIndex):
    """All ``beta <= alpha`` componentwise with the product of binomials."""
    ranges = [range(x + 1) for x in alpha]
    for beta in iter_product(*ranges):
        b = 1
        for x, y in zip(alpha, beta):
            if y:
                b *= math.comb(x, y)
        yield beta, b


class _Reconstructor:
    """Memoized coefficient solver; see the module docstring for the rules."""

    def __init__(self, w: Weights, max_length: int):
        if w.mu < 2:
            raise ValueError("reconstruction needs mu >= 2")
        if max_length < 3:
            raise ValueError("max_length must be at least 3")
        self.w = w
        self.mu = w.mu
        self.n = w.n
        self.max_length = max_length
        self.sigma = spectrum(w)
        self.dual, self.ginv = _metric_diagonal(w)
        self.init3 = initial_coeffs(w)
        self.memo: dict[MultiIndex, Fraction] = {}

    # -- basic rules ------------------------------------------------------

    def _cubic(self, i: int, j: int, k: int) -> Fraction:
        return self.init3.get(tuple(sorted((i, j, k))), Fraction(0))

    def _scaling(self, alpha: MultiIndex) -> Fraction:
        return 3 - self.n + sum(
            (alpha[k] * (self.sigma[k] - 1) for k in range(self.mu) if alpha[k]),
            Fraction(0),
        )

    def coeff(self, key: MultiIndex) -> Fraction:
        got = self.memo.get(key)
        if got is not None:
            return got
        total = sum(key)
        if total == 3:
            triple = []
            for idx, count in enumerate(key):
                triple.extend([idx] * count)
            value = self.init3.get(tuple(triple), Fraction(0))
        elif key[0] >= 1:
            value = Fraction(0)
        elif key[1] >= 1:
            prev = (key[0], key[1] - 1) + key[2:]
            value = self.coeff(prev) * self._scaling(prev) / self.mu
        else:
            value = self._chain(key)
        self.memo[key] = value
        return value

    # -- the WDVV chain ---------------------------------------------------

    def _chain(self, key: MultiIndex) -> Fraction:
        """Solve for ``A(key)`` with ``key`` supported on indices >= 2."""
        mu = self.mu
        support = [i for i, x in enumerate(key) if x]
        m = support[0]
        rest = list(key)
        rest[m] -= 1
        k_slot = max(i for i, x in enumerate(rest) if x)
        rest[k_slot] -= 1
        l0 = max(i for i, x in enumerate(rest) if x)
        rest[l0] -= 1
        alpha = tuple(rest)

        def state_key(t: int) -> MultiIndex:
            out = list(alpha)
            out[m - t] += 1
            out[k_slot] += 1
            out[(l0 + t) % mu] += 1
            return tuple(out)

        # Walk forward until a directly-known state.
        t_stop = 1
        while True:
            kt = state_key(t_stop)
            if kt in self.memo or (m - t_stop) <= 1 or (l0 + t_stop) % mu <= 1:
                break
            t_stop += 1
        value = self.coeff(state_key(t_stop))
        for t in range(t_stop - 1, -1, -1):
            value = self._solve_equation(alpha, m - t - 1, k_slot, (l0 + t) % mu, value)
            self.memo[state_key(t)] = value
        return value

    def _solve_equation(
        self, alpha: MultiIndex, j: int, k: int, l: int, next_value: Fraction
    ) -> Fraction:
        """Isolate the leading unknown of WDVV ``(1, j, k, l)`` at ``alpha``.

        ``next_value`` is ``A(alpha + e_j + e_k + e_{(1+l) mod mu})``, the
        other top-length unknown, already determined.
        """
        mu = self.mu
        dual = self.dual
        ginv = self.ginv
        total = Fraction(0)

        def bump(base: MultiIndex, x: int, y: int, z: int) -> MultiIndex:
            out = list(base)
            out[x] += 1
            out[y] += 1
            out[z] += 1
            return tuple(out)

        alpha_len = sum(alpha)

        # RHS, beta = alpha term: carries next_value.
        a = (1 + l) % mu
        pivot4 = ginv[a] * self._cubic(dual[a], 1, l)
        total += pivot4 * next_value
        # RHS, beta = 0 term.
        a = dual[(j + k) % mu]
        c0 = self._cubic(j, k, a)
        if c0:
            total += ginv[a] * c0 * self.coeff(bump(alpha, dual[a], 1, l))
        # LHS, beta = alpha term (moved to the right with a minus sign).
        a = (k + l) % mu
        c0 = self._cubic(dual[a], k, l)
        if c0:
            total -= ginv[a] * c0 * self.coeff(bump(alpha, 1, j, a))
        # Interior terms of both sides.
        for beta, binom in _sub_indices(alpha):
            blen = sum(beta)
            if blen == 0 or blen == alpha_len:
                continue
            gamma = tuple(x - y for x, y in zip(alpha, beta))
            for a in range(mu):
                g = ginv[a]
                f1 = self.coeff(bump(beta, 1, j, a))
                if f1:
                    total -= binom * g * f1 * self.coeff(bump(gamma, dual[a], k, l))
                h1 = self.coeff(bump(beta, j, k, a))
                if h1:
                    total += binom * g * h1 * self.coeff(bump(gamma, dual[a], 1, l))
        # Divide by the coefficient of the unknown (LHS beta = 0 term).
        a1 = dual[(1 + j) % mu]
        pivot = ginv[a1] * self._cubic(1, j, a1)
        if not pivot:
            raise InternalConsistencyError(
                f"zero pivot in WDVV equation (1,{j},{k},{l}) at alpha={alpha}"
            )
        return total / pivot


def _compositions(total: int, parts: int):
    """All tuples in N^parts with the given sum, lexicographically."""
    if parts == 1:
        yield (total,)
        return
    for first in range(total + 1):
        for rest in _compositions(total - first, parts - 1):
            yield (first,) + rest


def reconstruct(w: Weights, max_length: int) -> Potential:
    """Determine every coefficient with ``3 <= |alpha| <= max_length``.

    >>> p = reconstruct(Weights(1, 1), 5)
    >>> [p.coeff((0, k)) for k in range(3, 6)]
    [Fraction(1, 1), Fraction(1, 1), Fraction(1, 1)]
    """
    rec = _Reconstructor(w, max_length)
    mu = w.mu
    coeffs: dict[MultiIndex, Fraction] = {}
    for triple, value in rec.init3.items():
        key = [0] * mu
        for idx in triple:
            key[idx] += 1
        coeffs[tuple(key)] = value
    for length in range(4, max_length + 1):
        # Multi-indices with a unit slot are zero and never stored.
        for tail in _compositions(length, mu - 1):
            key = (0,) + tail
            value = rec.coeff(key)
            if value:
                coeffs[key] = value
    dual, ginv = _metric_diagonal(w)
    return Potential(
        weights=w,
        max_length=max_length,
        coeffs=coeffs,
        _dual=dual,
        _ginv=ginv,
    )


def homogeneity_step(p: Potential, alpha: MultiIndex) -> Fraction:
    """``A(alpha + e_1)`` from ``A(alpha)`` by the scaling identity."""
    alpha = tuple(alpha)
    if sum(alpha) < 3:
        raise ValueError("the scaling identity needs |alpha| >= 3")
    return p.coeff(alpha) * scaling_weight(p.weights, alpha) / p.weights.mu


def wdvv_residual(
    p: Potential, i: int, j: int, k: int, l: int, alpha: MultiIndex
) -> Fraction:
    """Coefficient of ``t^alpha / alpha!`` in the associativity equation
    ``(i, j, k, l)``; exactly zero on a consistent potential.

    Raises ``ValueError`` if the potential is too shallow to evaluate it.
    """
    alpha = tuple(alpha)
    if sum(alpha) + 3 > p.max_length:
        raise ValueError(
            f"residual at |alpha|={sum(alpha)} needs depth {sum(alpha) + 3}, "
            f"potential has {p.max_length}"
        )
    mu = p.weights.mu
    dual = p._dual
    ginv = p._ginv
    get = p.coeffs.get
    zero = Fraction(0)
    total = zero

    def bump(base: MultiIndex, x: int, y: int, z: int) -> MultiIndex:
        out = list(base)
        out[x] += 1
        out[y] += 1
        out[z] += 1
        return tuple(out)

    for beta, binom in _sub_indices(alpha):
        gamma = tuple(x - y for x, y in zip(alpha, beta))
        for a in range(mu):
            f1 = get(bump(beta, i, j, a), zero)
            if f1:
                f2 = get(bump(gamma, dual[a], k, l), zero)
                if f2:
                    total += binom * ginv[a] * f1 * f2
            h1 = get(bump(beta, j, k, a), zero)
            if h1:
                h2 = get(bump(gamma, dual[a], i, l), zero)
                if h2:
                    total -= binom * ginv[a] * h1 * h2
    return total
