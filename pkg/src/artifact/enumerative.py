import itertools
import math
from dataclasses import dataclass
from fractions import Fraction

from .core import PicError

"""
Closed-form enumerative quantities: counts of divisors with prescribed
vanishing in a linear series on a general curve, classical Pluecker numbers,
degrees of polarized Picard bundles, and the integer residue polynomials whose
distinct nonzero roots count the components appearing in certain boundary
degenerations.
"""


class ProfileTooLong(PicError):
    pass


class ArityMismatch(PicError):
    pass


class OutOfRange(PicError):
    pass


class ZeroPolynomial(PicError):
    pass


def de_jonquieres(g, ks, ordered=True):
    """Virtual count of divisors in the canonical series on a general genus-g
    curve with prescribed multiplicities k_1..k_rho at rho moving points.

    With ``ordered`` the zeros are labelled; otherwise the count is divided by
    the orderings of equal multiplicities.  Requires g - rho >= 1.  The empty
    profile gives 1.
    """
    ks = list(ks)
    if not ordered:
        label = math.prod(math.factorial(ks.count(v)) for v in set(ks))
        return Fraction(de_jonquieres(g, ks), label)
    rho = len(ks)
    if g < 1:
        raise OutOfRange("genus must be positive")
    if any(k < 1 for k in ks):
        raise OutOfRange("multiplicities must be positive")
    if g - rho < 1:
        raise ProfileTooLong(
            "profile of length %d needs genus > %d" % (rho, rho)
        )
    prod = math.prod(ks)
    inner = Fraction((-1) ** rho, g)
    idx = range(rho)
    for j in range(rho):
        tot = 0
        for drop in itertools.combinations(idx, j):
            dropped = set(drop)
            tot += math.prod(ks[t] for t in idx if t not in dropped)
        inner += Fraction((-1) ** j * tot, g - rho + j)
    return Fraction(math.factorial(g), math.factorial(g - rho - 1)) * prod * inner


def plucker(r, d, g):
    """Number of ramification points, counted with weight, of a general
    degree-d dimension-r linear series on a genus-g curve."""
    return (r + 1) * d + (r + 1) * r * (g - 1)


def picard_degree(ks, g):
    """Top self-intersection degree attached to a full-length multiplicity
    vector: g! times the product of the squared multiplicities."""
    ks = list(ks)
    if len(ks) != g:
        raise ArityMismatch(
            "expected %d multiplicities, got %d" % (g, len(ks))
        )
    return math.factorial(g) * math.prod(k * k for k in ks)


@dataclass(frozen=True)
class IntPolynomial:
    """A univariate integer polynomial, coefficients in increasing degree."""

    coeffs: tuple

    def __init__(self, coeffs):
        coeffs = [int(c) for c in coeffs]
        while coeffs and coeffs[-1] == 0:
            coeffs.pop()
        object.__setattr__(self, "coeffs", tuple(coeffs))

    def is_zero(self):
        return not self.coeffs

    @property
    def degree(self):
        if self.is_zero():
            raise ZeroPolynomial("the zero polynomial has no degree")
        return len(self.coeffs) - 1

    def __call__(self, x):
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def __str__(self):
        if self.is_zero():
            return "0"
        parts = []
        for e, c in enumerate(self.coeffs):
            if c == 0:
                continue
            if e == 0:
                parts.append(str(c))
            else:
                mono = "t" if e == 1 else "t^%d" % e
                parts.append(mono if c == 1 else "%d*%s" % (c, mono))
        return " + ".join(parts).replace("+ -", "- ")


def residue_polynomial(j, k, m):
    """The degree-(j-1) integer polynomial
    sum_i C(j+k-m-2, i) C(m, j-i-1) t^i controlling which boundary
    configurations of a (j, k) collision carry an m-fold residue condition.

    Requires j, k >= 2 and 1 <= m <= j+k-3 so that both poles have order at
    least two and both zero orders are positive.
    """
    if j < 2 or k < 2:
        raise OutOfRange("need pole orders j, k >= 2, got j=%d k=%d" % (j, k))
    if not 1 <= m <= j + k - 3:
        raise OutOfRange("need 1 <= m <= j+k-3, got m=%d" % m)
    return IntPolynomial(
        [math.comb(j + k - m - 2, i) * math.comb(m, j - i - 1) for i in range(j)]
    )


def count_distinct_nonzero_roots(p):
    """Number of distinct nonzero complex roots of an integer polynomial,
    computed exactly via a square-free reduction."""
    import sympy

    if p.is_zero():
        raise ZeroPolynomial("root count of the zero polynomial is undefined")
    if p.degree == 0:
        return 0
    t = sympy.Symbol("t")
    poly = sympy.Poly(list(reversed(p.coeffs)), t)
    sqf = poly.quo(poly.gcd(poly.diff(t)))
    count = sqf.degree()
    if p.coeffs[0] == 0:
        count -= 1
    return count
