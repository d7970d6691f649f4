"""The Landau-Ginzburg side: exact shadow of the Jacobian ring of
``f = u_0 + ... + u_n`` on the torus ``prod u_i^{w_i} = 1``.

The whole structure is combinatorial.  An integer-vector recursion

    a(0) = 0,  a(k+1) = a(k) + e_{i(k)},
    i(k)  = smallest j attaining min_j a(k)_j / w_j

produces monomial exponents whose running minima reproduce the s-sequence.
The rank-``mu`` quotient has basis ``[omega_0], ..., [omega_{mu-1}]`` with

* product: ``[omega_i] * [omega_j]`` is a pure weight power times
  ``[omega_{(i+j) mod mu}]`` (exponent arithmetic in Z^{n+1}),
* residue metric: ``g(e_j, e_k) = prod(1/w_i, i in I(s(k)))`` when
  ``j + k = n mod mu``, else 0,
* degree-one tensor ``((omega_1, omega_j, omega_k)) = g(e_1 * e_j, e_k)``
  in closed form,
* the Euler multiplication matrix ``A0`` (weighted cyclic shift), whose
  characteristic polynomial is ``X^mu - mu^mu * prod w_i^{-w_i}``.

``I(.)`` is always taken on s-values, never on source indices, so every
output is independent of how ties inside the s-sequence are broken.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .combinatorics import Weights, fixed_indices, s_sequence, spectrum
from .linalg import Matrix, char_poly, zeros


@dataclass(frozen=True)
class OmegaFrame:
    """Precomputed B-side package for one weight vector.

    ``a`` and ``i`` hold the exponent recursion up to index ``2 mu - 2``
    (products read ``a(i + j)`` before reduction mod ``mu``), ``values`` the
    s-sequence, ``kmin`` the first position of each value, and
    ``omega_exponents`` the (weight-power, monomial) exponent pair of each
    basis form.
    """

    weights: Weights
    a: tuple[tuple[int, ...], ...]
    i: tuple[int, ...]
    values: tuple[Fraction, ...]
    sigma: tuple[Fraction, ...]
    kmin: dict[Fraction, int]
    omega_exponents: tuple[tuple[tuple[int, ...], tuple[int, ...]], ...]


@lru_cache(maxsize=None)
def omega_frame(w: Weights) -> OmegaFrame:
    """Run the exponent recursion and assemble the frame.

    >>> omega_frame(Weights(1, 2)).a
    ((0, 0), (1, 0), (1, 1), (1, 2), (2, 2))
    """
    mu = w.mu
    steps = max(2 * mu - 2, 0)
    a = [(0,) * len(w)]
    idx = [0]
    for k in range(steps):
        cur = list(a[k])
        cur[idx[k]] += 1
        nxt = tuple(cur)
        a.append(nxt)
        best = min(Fraction(nxt[j], w[j]) for j in range(len(w)))
        idx.append(next(j for j in range(len(w)) if Fraction(nxt[j], w[j]) == best))
    values = s_sequence(w).values
    kmin: dict[Fraction, int] = {}
    for k, v in enumerate(values):
        kmin.setdefault(v, k)
    omegas = []
    for k in range(mu):
        ak = a[k]
        ref = a[kmin[values[k]]]
        omegas.append((tuple(r - x for r, x in zip(ref, ak)), ak))
    return OmegaFrame(
        weights=w,
        a=tuple(a),
        i=tuple(idx),
        values=values,
        sigma=spectrum(w),
        kmin=kmin,
        omega_exponents=tuple(omegas),
    )


def _weight_power(w: Weights, exponent: tuple[int, ...]) -> Fraction:
    num = 1
    den = 1
    for wi, e in zip(w, exponent):
        if e >= 0:
            num *= wi**e
        else:
            den *= wi ** (-e)
    return Fraction(num, den)


def product(w: Weights, i: int, j: int) -> tuple[Fraction, int]:
    """``[omega_i] * [omega_j]``: an exact coefficient and the target index
    ``(i + j) mod mu``.

    >>> product(Weights(1, 2), 1, 1)
    (Fraction(1, 2), 2)
    """
    frame = omega_frame(w)
    mu = w.mu
    tgt = (i + j) % mu
    km = frame.kmin
    vals = frame.values
    exponent = tuple(
        km_i + km_j - km_t + at - aij
        for km_i, km_j, km_t, at, aij in zip(
            frame.a[km[vals[i]]],
            frame.a[km[vals[j]]],
            frame.a[km[vals[tgt]]],
            frame.a[tgt],
            frame.a[i + j],
        )
    )
    return _weight_power(w, exponent), tgt


def _inv_weight_product_value(w: Weights, value: Fraction) -> Fraction:
    p = 1
    for i in fixed_indices(w, value):
        p *= w[i]
    return Fraction(1, p)


def metric(w: Weights, j: int, k: int) -> Fraction:
    """Residue pairing ``g(e_j, e_k)``; nonzero exactly on ``j + k = n mod mu``."""
    if (j + k) % w.mu != w.n % w.mu:
        return Fraction(0)
    return _inv_weight_product_value(w, omega_frame(w).values[k])


@lru_cache(maxsize=None)
def metric_matrix(w: Weights) -> tuple[tuple[Fraction, ...], ...]:
    mu = w.mu
    return tuple(tuple(metric(w, j, k) for k in range(mu)) for j in range(mu))


def three_tensor(w: Weights, j: int, k: int) -> Fraction:
    """The degree-one tensor ``((omega_1, omega_j, omega_k))`` in closed form.

    Zero unless ``1 + j + k = n mod mu``; otherwise a product of inverse
    weights over one or both fixed-index sets depending on whether the
    spectrum is additive on the triple.
    """
    mu = w.mu
    if (1 + j + k) % mu != w.n % mu:
        return Fraction(0)
    frame = omega_frame(w)
    sig = frame.sigma
    if sig[1] + sig[j] + sig[k] == w.n:
        return _inv_weight_product_value(w, frame.values[j])
    return _inv_weight_product_value(w, frame.values[j]) * _inv_weight_product_value(
        w, frame.values[k]
    )


def a0_matrix(w: Weights) -> Matrix:
    """Euler multiplication matrix: a weighted cyclic shift.

    Entry ``((j+1) mod mu, j)`` is ``mu`` inside a block of equal s-values
    and ``mu * prod(1/w_i, i in I(s(j)))`` across a block boundary.
    """
    mu = w.mu
    vals = omega_frame(w).values
    m = zeros(mu)
    for j in range(mu):
        row = (j + 1) % mu
        if vals[row] == vals[j]:
            m[row][j] = Fraction(mu)
        else:
            m[row][j] = mu * _inv_weight_product_value(w, vals[j])
    return m


def spectral_check(w: Weights) -> tuple[bool, list[Fraction]]:
    """Verify the characteristic polynomial of :func:`a0_matrix` equals
    ``X^mu - mu^mu * prod w_i^{-w_i}``; returns (ok, coefficients low-first).
    """
    mu = w.mu
    coeffs = char_poly(a0_matrix(w))
    denom = 1
    for wi in w:
        denom *= wi**wi
    expected = [Fraction(0)] * (mu + 1)
    expected[mu] = Fraction(1)
    expected[0] = -Fraction(mu**mu, denom)
    return coeffs == expected, coeffs
