"""The determinant G_K(s) of s - R on the higher K-groups, and identity checks.

G_K(s) is the regularized product of ((n-1)/2 + s)^rank K_n over n > 1.
Three evaluations are provided:

``g_closed``
    the product of the two progression products, entire in s;
``g_alt``
    s^-(r1+r2) Gamma_R(s)^-r1 Gamma_C(s)^-r2 (2 pi)^(-deg s/2) C(K);
``g_regularized``
    the Euler-Maclaurin regularization, independent of any Gamma value.

Integer multiplicities are applied by repeated multiplication so that exact
zeros survive.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass, field
from fractions import Fraction

from .ktheory import Signature, rank_low, riemann_eigenvalue
from .regprod import ProgressionSpec, regprod_closed, regprod_numeric, regprod_phi1, regprod_phi2
from .specfun import (
    DEFAULT_PARAMS,
    POLE_GUARD,
    DomainError,
    EulerMaclaurinParams,
    gamma_C,
    gamma_R,
    sinpi,
)

LOG_2PI = math.log(2 * math.pi)

REGULARIZED_MIN_RE = -1.9

DEFAULT_TOLERANCE = 1e-10


def ipow(base: complex, n: int) -> complex:
    """base**n for integer n >= 0 by repeated multiplication (0**0 == 1)."""
    out = 1 + 0j
    for _ in range(n):
        out *= base
    return out


@dataclass(frozen=True)
class FieldConstants:
    signature: Signature

    @property
    def degree(self) -> int:
        return self.signature.degree

    @property
    def c_of_k(self) -> float:
        r1, r2 = self.signature.r1, self.signature.r2
        return (2 * math.sqrt(math.pi)) ** r1 * (2 * math.sqrt(2 * math.pi)) ** r2


def g_closed(s: complex, sig: Signature) -> complex:
    s = complex(s)
    out = ipow(regprod_phi1(s), sig.r1 + sig.r2)
    if sig.r2:
        out *= ipow(regprod_phi2(s), sig.r2)
    return out


def g_alt(s: complex, sig: Signature) -> complex:
    """Gamma-factor form; undefined at s = 0 and at the Gamma_R / Gamma_C poles."""
    s = complex(s)
    if abs(s) < POLE_GUARD:
        raise DomainError(f"g_alt is singular at s = 0 (got s = {s!r})")
    inv = 1 / s
    out = ipow(inv, sig.r1 + sig.r2)
    if sig.r1:
        out *= ipow(1 / gamma_R(s), sig.r1)
    if sig.r2:
        out *= ipow(1 / gamma_C(s), sig.r2)
    consts = FieldConstants(sig)
    return out * cmath.exp(-0.5 * consts.degree * s * LOG_2PI) * consts.c_of_k


def g_regularized(
    s: complex, sig: Signature, p: EulerMaclaurinParams = DEFAULT_PARAMS
) -> complex:
    s = complex(s)
    if s.real <= REGULARIZED_MIN_RE:
        raise DomainError(
            f"regularized evaluation needs Re s > {REGULARIZED_MIN_RE}, got {s.real:g}"
        )
    out = ipow(regprod_numeric(ProgressionSpec(2, 2 + s), p), sig.r1 + sig.r2)
    if sig.r2:
        out *= ipow(regprod_numeric(ProgressionSpec(2, 1 + s), p), sig.r2)
    return out


def det_full(s: complex, sig: Signature) -> complex:
    """Determinant over all n >= 0: (s - 1/2) s^(r1+r2-1) G_K(s)."""
    s = complex(s)
    return (s - 0.5) * ipow(s, sig.r1 + sig.r2 - 1) * g_closed(s, sig)


def low_degree_factor(s: complex, sig: Signature) -> complex:
    """prod over n in {0, 1} of (s - eigenvalue_n)^rank K_n."""
    s = complex(s)
    out = 1 + 0j
    for n in (0, 1):
        out *= ipow(s - float(riemann_eigenvalue(n)), rank_low(n, sig))
    return out


def value_at_zero(sig: Signature) -> float:
    """pi^((r1+r2)/2) 2^(r2/2), the value of G_K at 0."""
    return math.pi ** (sig.places / 2) * 2 ** (sig.r2 / 2)


def periodicity_rhs(s: complex, sig: Signature) -> complex:
    s = complex(s)
    return g_closed(s + 2, sig) * ipow(s + 2, sig.places) * ipow(s + 1, sig.r2)


def reflection_rhs(s: complex, sig: Signature) -> complex:
    """((2/s) sin(pi s/2))^r1 ((2/s) sin(pi s))^r2."""
    s = complex(s)
    if s == 0:
        raise DomainError("reflection right-hand side has a removable singularity at s = 0")
    return ipow(2 / s * sinpi(s / 2), sig.r1) * ipow(2 / s * sinpi(s), sig.r2)


def residual(lhs: complex, rhs: complex) -> float:
    return abs(lhs - rhs) / max(1.0, abs(rhs))


@dataclass
class GridPoint:
    s: complex
    lhs: complex
    rhs: complex
    residual: float


@dataclass
class VerificationReport:
    identity_name: str
    tolerance: float
    gridpoints: list = field(default_factory=list)

    @property
    def max_residual(self) -> float:
        return max((g.residual for g in self.gridpoints), default=0.0)

    @property
    def passed(self) -> bool:
        return self.max_residual <= self.tolerance

    def add(self, s: complex, lhs: complex, rhs: complex) -> None:
        self.gridpoints.append(GridPoint(complex(s), complex(lhs), complex(rhs), residual(lhs, rhs)))

    def to_dict(self) -> dict:
        return {
            "identity": self.identity_name,
            "tolerance": self.tolerance,
            "max_residual": self.max_residual,
            "passed": self.passed,
            "points": [
                {
                    "s": [g.s.real, g.s.imag],
                    "lhs": [g.lhs.real, g.lhs.imag],
                    "rhs": [g.rhs.real, g.rhs.imag],
                    "residual": g.residual,
                }
                for g in self.gridpoints
            ],
        }


def lattice_grid(re_min=-4.0, re_max=4.0, n_re=10, im_min=-4.0, im_max=4.0, n_im=20) -> list:
    """Uniform n_re x n_im lattice, ordered by increasing Re, then Im."""

    def axis(lo, hi, n):
        if n == 1:
            return [lo]
        return [lo + (hi - lo) * k / (n - 1) for k in range(n)]

    return [complex(x, y) for x in axis(re_min, re_max, n_re) for y in axis(im_min, im_max, n_im)]


DEFAULT_GRID = tuple(lattice_grid())


def check_periodicity(sig: Signature, grid=DEFAULT_GRID, tol: float = DEFAULT_TOLERANCE) -> VerificationReport:
    """G_K(s) against G_K(s+2) (s+2)^(r1+r2) (s+1)^r2 on each grid point."""
    report = VerificationReport("periodicity", tol)
    for s in grid:
        report.add(s, g_closed(s, sig), periodicity_rhs(s, sig))
    return report


def check_reflection(sig: Signature, grid=DEFAULT_GRID, tol: float = DEFAULT_TOLERANCE) -> VerificationReport:
    """G_K(s) G_K(-s) against the sine product; s = 0 is skipped."""
    report = VerificationReport("reflection", tol)
    for s in grid:
        s = complex(s)
        if s == 0:
            continue
        report.add(s, g_closed(s, sig) * g_closed(-s, sig), reflection_rhs(s, sig))
    return report


def lerch_pairs() -> list:
    """Sixty (step, offset) pairs with step in {1, 2, 3}, Re(offset/step) in [0.1, 8], |Im offset| <= 4."""
    pairs = []
    for d in (1, 2, 3):
        for i in range(5):
            for j in range(4):
                x = 0.1 + 7.9 * i / 4
                im = -4.0 + 8.0 * j / 3
                pairs.append((float(d), complex(d * x, im)))
    return pairs


def check_lerch(pairs=None, tol: float = 1e-8, p: EulerMaclaurinParams = DEFAULT_PARAMS) -> VerificationReport:
    """Euler-Maclaurin regularized products against the Lerch closed form.

    The ``s`` field of each point holds the progression offset.
    """
    report = VerificationReport("lerch", tol)
    for d, a in pairs if pairs is not None else lerch_pairs():
        spec = ProgressionSpec(d, a)
        report.add(a, regprod_numeric(spec, p), regprod_closed(spec))
    return report


def reflection_at_zero(sig: Signature) -> complex:
    """G_K(0)^2, checked against the s -> 0 limit pi^(r1+r2) 2^r2 of the reflection formula."""
    value = g_closed(0, sig) ** 2
    limit = math.pi ** sig.places * 2 ** sig.r2
    if abs(value - limit) > 1e-12 * limit:
        raise ArithmeticError(f"G_K(0)^2 = {value} disagrees with {limit}")
    return value


def algebraicity_spot_check(sig: Signature, s, reference: float, tol: float = 1e-10) -> bool:
    """Compare G_K(s) G_K(-s) at rational s != 0 with a known algebraic number."""
    s = Fraction(s)
    if s == 0:
        raise ValueError("s must be a nonzero rational")
    x = float(s)
    value = g_closed(x, sig) * g_closed(-x, sig)
    return residual(value, complex(reference)) <= tol
