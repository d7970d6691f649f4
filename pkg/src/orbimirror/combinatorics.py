"""Weight-vector combinatorics shared by the A side and the B side.

Everything in this package is a function of a vector of positive integer
weights ``w = (w_0, ..., w_n)`` with ``mu = w_0 + ... + w_n``.  This module
holds the combinatorial layer both sides are built on:

* the *sectors*: rotation numbers ``gamma`` in ``[0, 1)`` whose reduced
  denominator divides at least one weight (the union of the groups of
  ``w_i``-th roots of unity, recorded by their argument),
* the ``age`` grading and the fixed-index set of each sector,
* the nondecreasing *s-sequence*: the sorted multiset of all fractions
  ``l / w_i`` with ``0 <= l < w_i`` (``mu`` values in total),
* the rational *spectrum* ``sigma(k) = k - mu * s(k)``,
* ``k_min``: the first position of a sector's value inside the s-sequence,
  computed in closed form.

All functions are pure and exact (``fractions.Fraction`` arithmetic), and
results for a given weight vector are cached.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

#: A sector is represented by its rotation number: a reduced rational in [0, 1).
Sector = Fraction


class Weights:
    """Immutable vector of positive integer weights.

    Accepts either separate arguments or a single iterable::

        Weights(1, 2, 2, 3, 3, 3) == Weights([1, 2, 2, 3, 3, 3])

    Weight vectors are kept exactly as given: no gcd reduction and no
    sorting, since every formula downstream is stated for general weights.
    """

    __slots__ = ("w",)

    def __init__(self, *w):
        if len(w) == 1 and not isinstance(w[0], int):
            w = tuple(w[0])
        if not w:
            raise ValueError("weight vector must be nonempty")
        for x in w:
            if not isinstance(x, int) or isinstance(x, bool) or x < 1:
                raise ValueError(f"weights must be integers >= 1, got {x!r}")
        object.__setattr__(self, "w", tuple(w))

    def __setattr__(self, name, value):
        raise AttributeError("Weights is immutable")

    @property
    def mu(self) -> int:
        """Total weight ``w_0 + ... + w_n``; the rank of everything here."""
        return sum(self.w)

    @property
    def n(self) -> int:
        """Complex dimension of the underlying space: ``len(w) - 1``."""
        return len(self.w) - 1

    def __iter__(self):
        return iter(self.w)

    def __len__(self):
        return len(self.w)

    def __getitem__(self, i):
        return self.w[i]

    def __eq__(self, other):
        return isinstance(other, Weights) and self.w == other.w

    def __hash__(self):
        return hash(self.w)

    def __repr__(self):
        return f"Weights{self.w}"


def frac(q: Fraction) -> Fraction:
    """Fractional part ``q - floor(q)`` of an exact rational."""
    return q - math.floor(q)


def inverse_sector(g: Sector) -> Sector:
    """Rotation number of the inverse group element: 0 maps to 0, else 1 - g."""
    return -g if g == 0 else 1 - g


@lru_cache(maxsize=None)
def sectors(w: Weights) -> tuple[Sector, ...]:
    """All distinct sectors of ``w``, sorted ascending (identity first).

    >>> sectors(Weights(1, 2, 2, 3, 3, 3))
    (Fraction(0, 1), Fraction(1, 3), Fraction(1, 2), Fraction(2, 3))
    """
    vals = {Fraction(l, wi) for wi in w for l in range(wi)}
    return tuple(sorted(vals))


def is_sector(w: Weights, g: Fraction) -> bool:
    """Whether ``g`` in [0,1) has order dividing one of the weights."""
    return 0 <= g < 1 and any(wi % g.denominator == 0 for wi in w)


def fixed_indices(w: Weights, g: Sector) -> frozenset[int]:
    """Indices of the coordinates fixed by the sector: ``{i : g * w_i integer}``."""
    return frozenset(i for i, wi in enumerate(w) if (g * wi).denominator == 1)


def sector_dim(w: Weights, g: Sector) -> int:
    """Complex dimension of the stratum fixed by ``g``: ``|fixed_indices| - 1``."""
    return len(fixed_indices(w, g)) - 1


def age(w: Weights, g: Sector) -> Fraction:
    """Age of a sector: the sum of the fractional parts ``{g * w_i}``.

    >>> age(Weights(1, 2, 2, 3, 3, 3), Fraction(1, 3))
    Fraction(5, 3)
    """
    return sum((frac(g * wi) for wi in w), Fraction(0))


@dataclass(frozen=True)
class SValueSequence:
    """The sorted multiset of all fractions ``l / w_i``, with provenance.

    ``values[k]`` is the k-th smallest element; ``sources[k]`` records which
    weight index the element came from.  Among equal values the source order
    is a free choice; everything downstream depends on ``values`` only.
    """

    values: tuple[Fraction, ...]
    sources: tuple[int, ...]


@lru_cache(maxsize=None)
def s_sequence(w: Weights, reverse_ties: bool = False) -> SValueSequence:
    """Sorted disjoint union of ``{l / w_i : 0 <= l < w_i}`` over all ``i``.

    ``reverse_ties`` flips the source order among equal values; the value
    sequence itself is unaffected.

    >>> s_sequence(Weights(1, 2)).values
    (Fraction(0, 1), Fraction(0, 1), Fraction(1, 2))
    """
    items = [
        (Fraction(l, wi), (-i if reverse_ties else i))
        for i, wi in enumerate(w)
        for l in range(wi)
    ]
    items.sort()
    return SValueSequence(
        values=tuple(v for v, _ in items),
        sources=tuple((-i if reverse_ties else i) for _, i in items),
    )


@lru_cache(maxsize=None)
def spectrum(w: Weights) -> tuple[Fraction, ...]:
    """The spectrum ``sigma(k) = k - mu * s(k)`` for ``k = 0 .. mu - 1``.

    ``sigma(0) = 0``, all entries are >= 0, and ``sigma(j) + sigma(j*) = n``
    for metric-dual indices ``j* = (n - j) mod mu``.

    >>> spectrum(Weights(1, 2))
    (Fraction(0, 1), Fraction(1, 1), Fraction(1, 2))
    """
    mu = w.mu
    vals = s_sequence(w).values
    return tuple(Fraction(k) - mu * vals[k] for k in range(mu))


def k_min(w: Weights, g: Sector) -> int:
    """First index at which ``g`` appears in the s-sequence, in closed form:
    ``(n + 1 - |fixed_indices|) + sum_i floor(g * w_i)``.

    >>> k_min(Weights(1, 2, 2, 3, 3, 3), Fraction(2, 3))
    11
    """
    codim = w.n + 1 - len(fixed_indices(w, g))
    return codim + sum(math.floor(g * wi) for wi in w)
