"""Generalized quadratic Gauss sums G(a, k, q) = sum_l e((a l^2 + k l)/q).

Provides the direct q-term evaluation, the exact magnitude law, the exact
root-of-unity coefficient carrying the k-dependence, and the k-independent
phase that ties the two together:

    conj(G(a, k, q)) = sqrt(q) * exp(i*alpha(a, q)) * c(k)

The even-q coefficient exponent uses the mod-q inverse of a lifted to the
modulus 4q; any other lift of the inverse only shifts alpha, and the choice
made here is pinned down operationally by the factorization residual sweep
in the test suite.
"""
from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from functools import lru_cache

from .rationals import mod_inverse

SQRT2 = math.sqrt(2.0)


class CoeffKind(Enum):
    ZERO = "zero"
    PLAIN = "plain"
    SQRT2 = "sqrt2"


@dataclass(frozen=True)
class GaussCoefficient:
    """Value 0, e(exponent), or sqrt(2)*e(exponent); exponent reduced in [0,1)."""

    kind: CoeffKind
    exponent: Fraction = Fraction(0)

    @property
    def value(self) -> complex:
        if self.kind is CoeffKind.ZERO:
            return 0j
        w = cmath.exp(2j * cmath.pi * float(self.exponent))
        return w * SQRT2 if self.kind is CoeffKind.SQRT2 else w


@dataclass(frozen=True)
class GaussPhase:
    alpha: float  # radians


def _check_coprime(a: int, q: int) -> None:
    if q < 1:
        raise ValueError("q must be positive")
    if math.gcd(a, q) != 1:
        raise ValueError(f"gcd({a}, {q}) != 1: the sum needs an irreducible fraction")


@lru_cache(maxsize=512)
def _roots(q: int) -> tuple[complex, ...]:
    return tuple(cmath.exp(2j * cmath.pi * j / q) for j in range(q))


def gauss_sum_direct(a: int, k: int, q: int) -> complex:
    """The q-term sum, evaluated in floating point via a shared root table."""
    _check_coprime(a, q)
    roots = _roots(q)
    total = 0j
    for l in range(q):
        total += roots[(a * l * l + k * l) % q]
    return total


def gauss_abs_sq(a: int, k: int, q: int) -> int:
    """Exact |G(a, k, q)|^2: q for odd q; 2q or 0 by the parity of k + q/2."""
    _check_coprime(a, q)
    if q % 2:
        return q
    if (k + q // 2) % 2 == 0:
        return 2 * q
    return 0


def gauss_abs(a: int, k: int, q: int) -> float:
    """|G(a, k, q)| as a float; the exact radicand is gauss_abs_sq."""
    return math.sqrt(gauss_abs_sq(a, k, q))


def coefficient_c(a: int, q: int, k: int) -> GaussCoefficient:
    """The exact k-dependent factor of conj(G(a, k, q)) / (sqrt(q) e^{i alpha}).

    Odd q: e(inv(4a) k^2 / q), k taken mod q.  Even q: zero when k + q/2 is
    odd, else sqrt(2) e(inv(a) k^2 / (4q)) with k taken mod 2q, which is the
    period of k^2 mod 4q.  Both branches are invariant under k -> -k.
    """
    _check_coprime(a, q)
    if q % 2:
        kk = k % q
        inv = mod_inverse(4 * a, q)
        return GaussCoefficient(CoeffKind.PLAIN, Fraction((inv * kk * kk) % q, q))
    if (k + q // 2) % 2:
        return GaussCoefficient(CoeffKind.ZERO)
    kk = k % (2 * q)
    inv = mod_inverse(a, q)
    return GaussCoefficient(CoeffKind.SQRT2, Fraction((inv * kk * kk) % (4 * q), 4 * q))


def phase_alpha(a: int, q: int) -> GaussPhase:
    """The k-independent phase, read off at k = 0 (odd q) or k = q/2 (even q)."""
    _check_coprime(a, q)
    k0 = 0 if q % 2 else q // 2
    g_conj = gauss_sum_direct(a, k0, q).conjugate()
    ref = math.sqrt(q) * coefficient_c(a, q, k0).value
    return GaussPhase(cmath.phase(g_conj / ref))


def factorization_residual(a: int, q: int, k: int | None = None) -> float:
    """Max |conj(G) - sqrt(q) e^{i alpha} c(k)| over k (or at a single k)."""
    alpha = phase_alpha(a, q).alpha
    scale = math.sqrt(q) * cmath.exp(1j * alpha)
    ks = range(q) if k is None else (k,)
    worst = 0.0
    for kk in ks:
        model = scale * coefficient_c(a, q, kk).value
        worst = max(worst, abs(gauss_sum_direct(a, kk, q).conjugate() - model))
    return worst
