"""Zeta-regularized products over arithmetic progressions.

For a progression d*k + a (k = 0, 1, 2, ...) the regularized product is
exp(-d/dw sum_k (d*k + a)^(-w) at w = 0). Since the sum equals
d^(-w) * zeta(w, a/d), two routes are available and kept separate so each
can check the other:

* ``regprod_numeric`` differentiates the Euler-Maclaurin continuation;
* ``regprod_closed`` uses Lerch's formula, giving d^(1/2 - a/d) sqrt(2 pi) / Gamma(a/d).
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

from .specfun import (
    DEFAULT_PARAMS,
    DomainError,
    EulerMaclaurinParams,
    gamma_R,
    hurwitz_zeta,
    hurwitz_zeta_dw,
    rgamma,
)

SQRT_PI = math.sqrt(math.pi)
SQRT_2PI = math.sqrt(2 * math.pi)
LOG_2 = math.log(2.0)

# the Euler-Maclaurin route is only trusted to the right of this line in a/d
NUMERIC_MIN_RE = -0.5


@dataclass(frozen=True)
class ProgressionSpec:
    step: float
    offset: complex

    def __post_init__(self):
        if not self.step > 0:
            raise ValueError(f"step must be positive, got {self.step}")
        object.__setattr__(self, "step", float(self.step))
        object.__setattr__(self, "offset", complex(self.offset))
        x = self.ratio
        if x.imag == 0 and x.real <= 0 and x.real == int(x.real):
            raise DomainError(f"progression hits zero: offset/step = {x.real:g}")

    @property
    def ratio(self) -> complex:
        return self.offset / self.step


def regprod_numeric(spec: ProgressionSpec, p: EulerMaclaurinParams = DEFAULT_PARAMS) -> complex:
    x = spec.ratio
    if x.real <= NUMERIC_MIN_RE:
        raise DomainError(
            f"numeric regularization needs Re(offset/step) > {NUMERIC_MIN_RE}, got {x.real:g}"
        )
    log_d = math.log(spec.step)
    return cmath.exp(log_d * hurwitz_zeta(0, x, p) - hurwitz_zeta_dw(0, x, p))


def regprod_closed(spec: ProgressionSpec) -> complex:
    x = spec.ratio
    return cmath.exp((0.5 - x) * math.log(spec.step)) * SQRT_2PI * rgamma(x)


def regprod_phi1(s: complex) -> complex:
    """Product of (n-1)/2 + s over n > 1, n = 1 mod 4: 2^(-s/2) sqrt(pi) / Gamma(s/2 + 1)."""
    s = complex(s)
    return cmath.exp(-0.5 * s * LOG_2) * SQRT_PI * rgamma(s / 2 + 1)


def regprod_phi2(s: complex) -> complex:
    """Product of (n-1)/2 + s over n = 3 mod 4: 2^(-s/2) sqrt(2 pi) / Gamma((s+1)/2)."""
    s = complex(s)
    return cmath.exp(-0.5 * s * LOG_2) * SQRT_2PI * rgamma((s + 1) / 2)


def regprod_phi1_alt(s: complex) -> complex:
    """s^-1 Gamma_R(s)^-1 (2 pi)^(-s/2) 2 sqrt(pi); singular at s = 0, -2, -4, ..."""
    s = complex(s)
    if s == 0:
        raise DomainError("alternate form of the n = 1 mod 4 product is singular at s = 0")
    return 2 * SQRT_PI * cmath.exp(-0.5 * s * math.log(2 * math.pi)) / (s * gamma_R(s))


def regprod_phi2_alt(s: complex) -> complex:
    """Gamma_R(s+1)^-1 (2 pi)^(-s/2) sqrt(2); singular at s = -1, -3, ..."""
    s = complex(s)
    return math.sqrt(2) * cmath.exp(-0.5 * s * math.log(2 * math.pi)) / gamma_R(s + 1)
