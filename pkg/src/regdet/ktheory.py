"""Ranks of K_n(A) from Borel's theorem and the Riemann operator spectrum.

Ranks are exact integers and eigenvalues exact rationals.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

MAX_TRUNCATION = 10_000


@dataclass(frozen=True)
class Signature:
    """Numbers of real (r1) and complex (r2) places of a number field."""

    r1: int
    r2: int

    def __post_init__(self):
        for name in ("r1", "r2"):
            v = getattr(self, name)
            if isinstance(v, bool) or not isinstance(v, int) or v < 0:
                raise ValueError(f"{name} must be a nonnegative integer, got {v!r}")
        if self.r1 + self.r2 < 1:
            raise ValueError("signature needs at least one place")

    @property
    def degree(self) -> int:
        return self.r1 + 2 * self.r2

    @property
    def places(self) -> int:
        return self.r1 + self.r2

    def __str__(self):
        return f"({self.r1},{self.r2})"


@dataclass(frozen=True)
class RankProfile:
    signature: Signature

    @property
    def lowrank_K0(self) -> int:
        return rank_low(0, self.signature)

    @property
    def lowrank_K1(self) -> int:
        return rank_low(1, self.signature)

    def rank(self, n: int) -> int:
        return rank_low(n, self.signature) if n < 2 else borel_rank(n, self.signature)


def borel_rank(n: int, sig: Signature) -> int:
    """rank K_n(A) for n >= 2."""
    if n < 2:
        raise ValueError(f"borel_rank covers n >= 2; use rank_low for n = {n}")
    if n % 4 == 1:
        return sig.r1 + sig.r2
    if n % 4 == 3:
        return sig.r2
    return 0


def rank_low(n: int, sig: Signature) -> int:
    """rank K_0(A) = 1 and rank K_1(A) = r1 + r2 - 1."""
    if n == 0:
        return 1
    if n == 1:
        return sig.r1 + sig.r2 - 1
    raise ValueError(f"rank_low covers n in {{0, 1}}, got {n}")


def riemann_eigenvalue(n: int) -> Fraction:
    """Eigenvalue (1 - n)/2 of the Riemann operator on K_n(A)."""
    if n < 0:
        raise ValueError(f"n must be nonnegative, got {n}")
    return Fraction(1 - n, 2)


def truncated_char_poly(s: complex, sig: Signature, n_max: int) -> complex:
    """prod over 1 < n <= n_max of (s - (1-n)/2)^rank K_n."""
    if n_max < 2:
        raise ValueError(f"n_max must be >= 2, got {n_max}")
    if n_max > MAX_TRUNCATION:
        raise ValueError(f"n_max must be <= {MAX_TRUNCATION}, got {n_max}")
    s = complex(s)
    out = 1 + 0j
    for n in range(2, n_max + 1):
        r = borel_rank(n, sig)
        if r:
            factor = s - float(riemann_eigenvalue(n))
            for _ in range(r):
                out *= factor
    return out
