"""Signature (r1, r2) of a number field from a defining polynomial.

Real roots are counted with a Sturm chain built from exact integer
pseudo-remainders; each remainder is reduced to its primitive part, which
keeps coefficients small without changing any sign.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import reduce

from .ktheory import Signature

IRREDUCIBILITY_WARNING = (
    "warning: irreducibility of the polynomial is not verified; "
    "the signature is that of its real and complex roots"
)


class PolynomialError(ValueError):
    pass


@dataclass(frozen=True)
class IntegerPolynomial:
    """Integer coefficients in ascending degree; trailing zeros are stripped."""

    coeffs: tuple

    def __post_init__(self):
        c = [int(x) for x in self.coeffs]
        while len(c) > 1 and c[-1] == 0:
            c.pop()
        if not c:
            raise PolynomialError("empty coefficient list")
        object.__setattr__(self, "coeffs", tuple(c))

    @classmethod
    def parse(cls, text: str) -> "IntegerPolynomial":
        """Parse comma-separated ascending coefficients, e.g. ``"-2,0,0,1"``."""
        try:
            coeffs = [int(tok) for tok in text.replace(" ", "").split(",")]
        except ValueError:
            raise PolynomialError(f"cannot parse polynomial coefficients: {text!r}") from None
        return cls(tuple(coeffs))

    @property
    def degree(self) -> int:
        return -1 if self.is_zero() else len(self.coeffs) - 1

    @property
    def lc(self) -> int:
        return self.coeffs[-1]

    def is_zero(self) -> bool:
        return self.coeffs == (0,)

    def derivative(self) -> "IntegerPolynomial":
        if len(self.coeffs) == 1:
            return IntegerPolynomial((0,))
        return IntegerPolynomial(tuple(i * c for i, c in enumerate(self.coeffs) if i))

    def content(self) -> int:
        return abs(reduce(math.gcd, self.coeffs))

    def primitive(self) -> "IntegerPolynomial":
        """Divide by the (positive) content; signs are preserved."""
        g = self.content()
        if g in (0, 1):
            return self
        return IntegerPolynomial(tuple(c // g for c in self.coeffs))

    def __neg__(self):
        return IntegerPolynomial(tuple(-c for c in self.coeffs))

    def __call__(self, x):
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def shift(self, c: int) -> "IntegerPolynomial":
        """f(x + c)."""
        out = [0]
        for a in reversed(self.coeffs):
            # out = out * (x + c) + a
            nxt = [0] * (len(out) + 1)
            for i, v in enumerate(out):
                nxt[i] += v * c
                nxt[i + 1] += v
            nxt[0] += a
            out = nxt
        return IntegerPolynomial(tuple(out))

    def __str__(self):
        return ",".join(str(c) for c in self.coeffs)


def pseudo_remainder(f: IntegerPolynomial, g: IntegerPolynomial) -> IntegerPolynomial:
    """|lc(g)|^(deg f - deg g + 1) * f mod g, computed over the integers.

    Using the absolute value of the leading coefficient keeps the remainder a
    positive multiple of the true remainder, as Sturm chains require.
    """
    if g.is_zero():
        raise PolynomialError("division by the zero polynomial")
    dg = g.degree
    if f.degree < dg:
        return f
    sign = 1 if g.lc > 0 else -1
    alc = abs(g.lc)
    r = list(f.coeffs)
    for k in range(f.degree - dg, -1, -1):
        lead = r[k + dg]
        r = [alc * v for v in r]
        for i, gc in enumerate(g.coeffs):
            r[k + i] -= sign * lead * gc
    return IntegerPolynomial(tuple(r[:dg]) or (0,))


def poly_gcd(f: IntegerPolynomial, g: IntegerPolynomial) -> IntegerPolynomial:
    """Primitive gcd with positive leading coefficient."""
    a, b = f.primitive(), g.primitive()
    if a.degree < b.degree:
        a, b = b, a
    while not b.is_zero():
        a, b = b, pseudo_remainder(a, b).primitive()
    if a.is_zero():
        return a
    a = a.primitive()
    return -a if a.lc < 0 else a


def exact_quotient(f: IntegerPolynomial, g: IntegerPolynomial) -> IntegerPolynomial:
    """f / g over the integers; raises if the division is not exact."""
    if g.is_zero():
        raise PolynomialError("division by the zero polynomial")
    r = list(f.coeffs)
    dg = g.degree
    q = [0] * max(len(r) - dg, 1)
    for k in range(len(r) - 1 - dg, -1, -1):
        lead = r[k + dg]
        qk, rem = divmod(lead, g.lc)
        if rem:
            raise PolynomialError("polynomial division is not exact")
        q[k] = qk
        for i, gc in enumerate(g.coeffs):
            r[k + i] -= qk * gc
    if any(r):
        raise PolynomialError("polynomial division is not exact")
    return IntegerPolynomial(tuple(q))


def squarefree_part(f: IntegerPolynomial) -> IntegerPolynomial:
    """f / gcd(f, f'), primitive, with positive leading coefficient."""
    if f.is_zero():
        raise PolynomialError("zero polynomial has no squarefree part")
    if f.degree < 1:
        raise PolynomialError("squarefree part needs degree >= 1")
    g = poly_gcd(f, f.derivative())
    q = exact_quotient(f.primitive(), g).primitive()
    return -q if q.lc < 0 else q


def sturm_chain(f: IntegerPolynomial) -> list:
    """f, f', then negated primitive pseudo-remainders until zero."""
    if f.degree < 1:
        raise PolynomialError("Sturm chain needs degree >= 1")
    chain = [f, f.derivative()]
    while True:
        r = pseudo_remainder(chain[-2], chain[-1])
        if r.is_zero():
            return chain
        chain.append((-r).primitive())


def _sign(x: int) -> int:
    return (x > 0) - (x < 0)


def sign_variations(signs) -> int:
    nz = [s for s in signs if s]
    return sum(1 for a, b in zip(nz, nz[1:]) if a != b)


def count_real_roots(f: IntegerPolynomial) -> int:
    """Number of distinct real roots of a squarefree f, by Sturm's theorem."""
    chain = sturm_chain(f)
    if chain[-1].degree >= 1:
        raise PolynomialError(f"polynomial {f} is not squarefree")
    at_pos = [_sign(p.lc) for p in chain]
    at_neg = [_sign(p.lc) * (-1) ** p.degree for p in chain]
    return sign_variations(at_neg) - sign_variations(at_pos)


@dataclass(frozen=True)
class SignatureResult:
    signature: Signature
    polynomial: IntegerPolynomial
    warning: str = IRREDUCIBILITY_WARNING


def signature_from_polynomial(f: IntegerPolynomial) -> SignatureResult:
    if f.degree < 1:
        raise PolynomialError("a field needs a defining polynomial of degree >= 1")
    r1 = count_real_roots(f)
    rest = f.degree - r1
    assert rest % 2 == 0, f"odd number of non-real roots for {f}"
    return SignatureResult(Signature(r1, rest // 2), f)
