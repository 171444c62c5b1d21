from fractions import Fraction

from .core import (
    BaseMismatch,
    DivisorClass,
    ModuliBase,
    ParamOutOfRange,
    PicError,
    enumerate_boundary,
    mirror_index,
    relabel,
)

"""
The catalog of effective divisor classes: closures of Weierstrass-type,
ramification and differential-stratum loci, expressed in the standard
generators.  Every constructor assembles its boundary coefficients through a
regime audit: each canonical boundary generator must be matched by exactly one
formula regime, so a gap or an overlap in the piecewise formulas raises
immediately instead of silently producing a wrong class.
"""


class GenusTooSmall(PicError):
    pass


class BadWeights(PicError):
    pass


class UnsupportedWeights(PicError):
    pass


class UnsupportedPole(PicError):
    pass


class ParityUnavailable(PicError):
    pass


PARITIES = ("odd", "even", "total")


def _check_parity(parity):
    if parity not in PARITIES:
        raise ParamOutOfRange("parity must be one of %s" % (PARITIES,))


def _tri(u):
    # u(u+1)/2, the coefficient pattern C(u+1, 2)
    return Fraction(u * (u + 1), 2)


def _assemble(base, regimes):
    """Boundary dict from piecewise regimes [(predicate, formula)], enforcing
    that exactly one regime claims each canonical generator."""
    bnd = {}
    for key in enumerate_boundary(base):
        hits = [f for p, f in regimes if p(key)]
        if len(hits) != 1:
            raise AssertionError(
                "%d regimes claim %s on %s" % (len(hits), key, base)
            )
        c = Fraction(hits[0](key))
        if c:
            bnd[key] = c
    return bnd


def _make(base, lam, psi, delta0, bnd):
    out = DivisorClass(base, lam, psi, delta0)
    object.__setattr__(out, "boundary", bnd)
    return out


def _dsum(d, S):
    return sum(d[s - 1] for s in S)


def weierstrass(g):
    """Closure of the locus where the marked point is a Weierstrass point."""
    if g < 2:
        raise GenusTooSmall("needs genus >= 2")
    base = ModuliBase(g, 1)
    bnd = _assemble(base, [(lambda k: True, lambda k: -_tri(g - k.i))])
    return _make(base, -1, [_tri(g)], 0, bnd)


def diaz(g):
    """Closure of the locus of curves with an exceptional Weierstrass point,
    the pushforward to the unpointed space of the residual construction one
    genus up."""
    if g < 3:
        raise GenusTooSmall("needs genus >= 3")
    G = g + 1
    base = ModuliBase(g, 0)
    lam = Fraction(G * (G + 1) * (3 * G * G - 3 * G + 2), 2)
    delta0 = -Fraction(G * G * (G - 1) * (G + 1), 6)

    def c(k):
        i = k.i
        return -Fraction(G * i * (G - i - 1) * (G + 1) ** 2, 2)

    bnd = _assemble(base, [(lambda k: True, c)])
    return _make(base, lam, [], delta0, bnd)


def residual(g):
    """Closure of the locus of 1-pointed curves carrying a differential with
    a zero of maximal order away from the marked point."""
    if g < 3:
        raise GenusTooSmall("needs genus >= 3")
    base = ModuliBase(g, 1)
    psi = Fraction(g * (g + 1) * (g - 2), 2)
    lam = Fraction(g * (3 * g**3 - 3 * g + 2), 2)
    delta0 = Fraction(g**2 - g**4, 6)

    def c(k):
        i = k.i
        return Fraction(g * (i - g) * (g * g * i + g * i - g + i - 1), 2)

    bnd = _assemble(base, [(lambda k: True, c)])
    return _make(base, lam, [psi], delta0, bnd)


def d1_holo(g, k):
    """Closure of the stratum of 1-pointed curves with a differential
    vanishing to order k at the marked point and to maximal order elsewhere."""
    if g < 3:
        raise GenusTooSmall("needs genus >= 3")
    if not 0 <= k <= g - 1:
        raise ParamOutOfRange("needs 0 <= k <= g-1")
    base = ModuliBase(g, 1)
    psi = Fraction(
        (k + 1) * (g - k) * ((k + 1) * g * g - (k * k + k + 1) * g - 2), 2
    )
    lam = Fraction(
        (k + 1)
        * (4 - 2 * g + 10 * k - 2 * g * k + 11 * k * k + 3 * k**3),
        2,
    )
    delta0 = Fraction((k + 1) ** 2 - (k + 1) ** 4, 6)

    def low(key):
        i = key.i
        return -Fraction(
            (k + 1)
            * (
                i * (g - i + 1) * (g - i) * (k + 1)
                + (g - i - k)
                * ((k + 1) * (g - i) ** 2 - (k * k + k + 1) * (g - i) - 2)
            ),
            2,
        )

    def high(key):
        i = key.i
        return -Fraction(
            (g - i)
            * (k + 1)
            * (
                -3 * g + g * g + 4 * i - g * i + 3 * k - 4 * g * k
                + g * g * k + 5 * i * k - g * i * k + 3 * k * k
                - 2 * g * k * k + 2 * i * k * k + k**3
            ),
            2,
        )

    bnd = _assemble(
        base,
        [
            (lambda key: key.i <= g - k, low),
            (lambda key: key.i > g - k, high),
        ],
    )
    return _make(base, lam, [psi], delta0, bnd)


def d1_mero(g, h):
    """Closure of the stratum of 1-pointed curves with a differential having
    a pole of order h at the marked point and a zero of maximal order."""
    if g < 2:
        raise GenusTooSmall("needs genus >= 2")
    if h < 2:
        raise ParamOutOfRange("needs pole order h >= 2")
    base = ModuliBase(g, 1)
    psi = Fraction(
        g * (g + h + 1) * (h - 1) * (h * h + g * h + g + 1), 2
    )
    lam = Fraction(
        (1 + g + h)
        * (
            2 - 3 * g * g + 3 * g**3 - 2 * h - 4 * g * h
            + 9 * g * g * h - h * h + 9 * g * h * h + 3 * h**3
        ),
        2,
    )
    delta0 = Fraction((g + h) ** 2 - (g + h) ** 4, 6)

    def c(key):
        i = key.i
        return -Fraction((g - i) * (g + h + 1), 2) * (
            g * g * i + g * h * h + 3 * g * h * i - g
            + h**3 + 2 * h * h * i - h * h - h * i + h + i - 1
        )

    bnd = _assemble(base, [(lambda key: True, c)])
    return _make(base, lam, [psi], delta0, bnd)


def logan_class(g, d):
    """Closure of the locus of pointed curves whose weighted marked points
    move in the canonical series: weights positive, summing to g."""
    d = tuple(int(x) for x in d)
    if not d or any(x < 1 for x in d) or sum(x for x in d) != g:
        raise BadWeights("weights must be positive and sum to the genus")
    base = ModuliBase(g, len(d))

    def c(key):
        return -_tri(abs(_dsum(d, key.S) - key.i))

    bnd = _assemble(base, [(lambda key: True, c)])
    return _make(base, -1, [_tri(x) for x in d], 0, bnd)


def theta_pullback_class(g, d):
    """Pullback of the theta divisor along the weighted section of the
    universal Jacobian: weights nonzero, at least one negative, summing
    to g - 1."""
    d = tuple(int(x) for x in d)
    if not d or any(x == 0 for x in d) or sum(d) != g - 1:
        raise BadWeights("weights must be nonzero and sum to g-1")
    if not any(x < 0 for x in d):
        raise BadWeights("at least one weight must be negative")
    base = ModuliBase(g, len(d))
    P = frozenset(j + 1 for j, x in enumerate(d) if x < 0)

    def pole_free(key):
        # all poles on the mirror side: evaluate here
        return -_tri(abs(_dsum(d, key.S) - key.i))

    def pole_heavy(key):
        # all poles on this side: evaluate at the pole-free mirror
        i2, S2 = mirror_index(base, key)
        return -_tri(abs(_dsum(d, S2) - i2))

    def split(key):
        # poles on both sides; u(u+1)/2 is invariant under u -> -(u+1),
        # which is exactly what the mirror does here
        u = _dsum(d, key.S) - key.i
        return -Fraction(u * (u + 1), 2)

    bnd = _assemble(
        base,
        [
            (lambda key: not key.S & P, pole_free),
            (lambda key: key.S & P and P <= key.S, pole_heavy),
            (lambda key: key.S & P and not P <= key.S, split),
        ],
    )
    return _make(base, -1, [_tri(x) for x in d], 0, bnd)


def theta_characteristic_locus(g, parity="total"):
    """Divisor of 1-pointed curves with a theta characteristic vanishing at
    the marked point, split by the parity of the characteristic."""
    if g < 2:
        raise GenusTooSmall("needs genus >= 2")
    _check_parity(parity)
    if parity == "total":
        return theta_characteristic_locus(g, "odd") + theta_characteristic_locus(
            g, "even"
        )
    base = ModuliBase(g, 1)
    pref = Fraction(2) ** (g - 3)
    if parity == "odd":
        lam = pref * (2**g - 1)
        psi = 2 * pref * (2**g - 1)

        def c(key):
            i = key.i
            return -pref * (2**i + 1) * (2 ** (g - i) - 1)

    else:
        lam = pref * (2**g + 1)
        psi = Fraction(0)

        def c(key):
            i = key.i
            return -pref * (2**i - 1) * (2 ** (g - i) - 1)

    delta0 = -pref * Fraction(2) ** (g - 3)
    bnd = _assemble(base, [(lambda key: True, c)])
    return _make(base, lam, [psi], delta0, bnd)


def anti_ramification(g):
    """Closure of the locus of (g-1)-pointed curves whose marked points
    support a differential with a double zero elsewhere; the weight-one
    member of the pinch family."""
    if g < 3:
        raise GenusTooSmall("needs genus >= 3")
    return pinch_partition(g, (1,) * (g - 1))


def _coupled_11(g):
    if g < 2:
        raise GenusTooSmall("needs genus >= 2")
    base = ModuliBase(g, 2)
    pref = Fraction(2) ** (g - 3)

    def both(key):
        i = key.i
        return -pref * 2 ** (i + 1) * (2 ** (g - i) - 1)

    def first_only(key):
        return -pref * 2 ** (g - 1)

    bnd = _assemble(
        base,
        [
            (lambda key: len(key.S) == 2, both),
            (lambda key: len(key.S) == 1, first_only),
        ],
    )
    return _make(
        base,
        pref * 2 ** (g + 1),
        [pref * 2 ** (g - 1)] * 2,
        -pref * 2 ** (g - 2),
        bnd,
    )


def _coupled_m2_1_1(g):
    # standard label order: the double pole first, then the two simple zeros
    if g < 2:
        raise GenusTooSmall("needs genus >= 2")
    base = ModuliBase(g, 3)
    pref = Fraction(2) ** (g - 3)

    def all_three(key):
        i = key.i
        return -pref * 2 ** (i + 1) * (2 ** (g - i) - 1)

    def pole_and_zero(key):
        return -pref * 2 ** (g - 1)

    def pole_only(key):
        # mirror carries the two zeros; evaluate at the mirror index
        i2 = g - key.i
        return -pref * 2 ** (i2 + 1) * (2 ** (g - i2) + 1)

    bnd = _assemble(
        base,
        [
            (lambda key: key.S == frozenset({1, 2, 3}), all_three),
            (
                lambda key: len(key.S) == 2 and 1 in key.S,
                pole_and_zero,
            ),
            (lambda key: key.S == frozenset({1}), pole_only),
        ],
    )
    return _make(
        base,
        pref * 2 ** (g + 1),
        [pref * 2 ** (g + 2), pref * 2 ** (g - 1), pref * 2 ** (g - 1)],
        -pref * 2 ** (g - 2),
        bnd,
    )


def _coupled_m2_2(g, parity):
    # standard label order: double pole first, double zero second
    if g < 2:
        raise GenusTooSmall("needs genus >= 2")
    base = ModuliBase(g, 2)
    pref = Fraction(2) ** (g - 3)
    lam = {
        "total": 2 ** (g + 1),
        "odd": 2**g - 1,
        "even": 2**g + 1,
    }[parity]
    psi1 = {
        "total": 2 ** (g + 2),
        "odd": 2 * (2**g - 1),
        "even": 2 * (2**g + 1),
    }[parity]
    psi2 = {
        "total": 2 * (2**g + 1),
        "odd": 0,
        "even": 2 * (2**g + 1),
    }[parity]
    d0 = {
        "total": -Fraction(2) ** (g - 2),
        "odd": -Fraction(2) ** (g - 3),
        "even": -Fraction(2) ** (g - 3),
    }[parity]

    def f_both(i):
        return {
            "total": -(2 ** (i + 1)) * (2 ** (g - i) - 1),
            "odd": -(2**i + 1) * (2 ** (g - i) - 1),
            "even": -(2**i - 1) * (2 ** (g - i) - 1),
        }[parity]

    def f_zero(i):
        return {
            "total": -(2 ** (i + 1)) * (2 ** (g - i) + 1),
            "odd": -(2**i - 1) * (2 ** (g - i) + 1),
            "even": -(2**i + 1) * (2 ** (g - i) + 1),
        }[parity]

    bnd = _assemble(
        base,
        [
            (lambda key: len(key.S) == 2, lambda key: pref * f_both(key.i)),
            (
                lambda key: len(key.S) == 1,
                lambda key: pref * f_zero(g - key.i),
            ),
        ],
    )
    return _make(base, pref * lam, [pref * psi1, pref * psi2], pref * d0, bnd)


def _coupled_general(g, d, parity):
    if g < 2:
        raise GenusTooSmall("needs genus >= 2")
    base = ModuliBase(g, len(d))
    pref = Fraction(2) ** (g - 2)
    n = len(d)
    lam = {
        "total": Fraction(2 ** (g + 1)),
        "odd": Fraction(2**g - 1),
        "even": Fraction(2**g + 1),
    }[parity]
    qpsi = {
        "total": Fraction(2 ** (g - 1)),
        "odd": Fraction(2**g - 1, 4),
        "even": Fraction(2**g + 1, 4),
    }[parity]
    d0 = {
        "total": -Fraction(2) ** (g - 2),
        "odd": -Fraction(2) ** (g - 3),
        "even": -Fraction(2) ** (g - 3),
    }[parity]

    def w(i):
        return {
            "total": 2 ** (g - i + 1) * (2**i - 1),
            "odd": (2**i - 1) * (2 ** (g - i) + 1),
            "even": (2**i - 1) * (2 ** (g - i) - 1),
        }[parity]

    def balanced(key):
        total = 0
        for i2, S2 in (
            (key.i, key.S),
            mirror_index(base, key),
        ):
            if len(S2) != n:
                total += w(i2)
        return -pref * total

    def unbalanced(key):
        ds = _dsum(d, key.S)
        return -pref * qpsi * ds * ds

    bnd = _assemble(
        base,
        [
            (lambda key: _dsum(d, key.S) == 0, balanced),
            (lambda key: _dsum(d, key.S) != 0, unbalanced),
        ],
    )
    return _make(
        base, pref * lam, [pref * qpsi * x * x for x in d], pref * d0, bnd
    )


def _perm_from_standard(d, standard):
    """A relabeling dict sending the standard label order to the positions
    the entries occupy in d; greedy matching of equal weights."""
    remaining = list(range(1, len(d) + 1))
    perm = {}
    for pos, want in enumerate(standard, start=1):
        for t in remaining:
            if d[t - 1] == want:
                perm[pos] = t
                remaining.remove(t)
                break
    return perm


def coupled_partition(g, d, parity="total"):
    """Divisor class of curves carrying a differential whose zeros and poles
    at the marked points are coupled through a spin structure; ``d`` is the
    weight vector at the marked points (nonzero, summing to zero, or the
    distinguished pair (1,1))."""
    d = tuple(int(x) for x in d)
    _check_parity(parity)
    if not d or any(x == 0 for x in d):
        raise UnsupportedWeights("weights must be nonzero")
    if sorted(d) == [1, 1]:
        if parity != "total":
            raise ParityUnavailable("odd weights admit no spin refinement")
        return _coupled_11(g)
    if sum(d) != 0:
        raise UnsupportedWeights("weights must sum to zero")
    negs = sorted(-x for x in d if x < 0)
    if negs == [2]:
        if sorted(d) == [-2, 2]:
            std = _coupled_m2_2(g, parity)
            return relabel(std, _perm_from_standard(d, (-2, 2)))
        if sorted(d) == [-2, 1, 1]:
            if parity != "total":
                raise ParityUnavailable("odd weights admit no spin refinement")
            std = _coupled_m2_1_1(g)
            return relabel(std, _perm_from_standard(d, (-2, 1, 1)))
        raise UnsupportedPole(
            "a single double pole is only supported with weights (-2,2) "
            "or (-2,1,1)"
        )
    if parity != "total" and any(x % 2 for x in d):
        raise ParityUnavailable("spin refinement needs all weights even")
    return _coupled_general(g, d, parity)


def d_infinity(g, parity="total"):
    """The boundary-at-infinity class of the coupled family: the limit
    divisor supported where the two marked points collide."""
    if g < 2:
        raise GenusTooSmall("needs genus >= 2")
    _check_parity(parity)
    base = ModuliBase(g, 2)
    q = Fraction(2) ** (2 * g - 3)
    scale = {
        "total": Fraction(1),
        "odd": Fraction(2**g - 1, 2 ** (g + 1)),
        "even": Fraction(2**g + 1, 2 ** (g + 1)),
    }[parity]

    def c(key):
        return -q if len(key.S) == 1 else 0

    bnd = _assemble(base, [(lambda key: True, c)])
    out = _make(base, 0, [q, q], 0, bnd)
    return out * scale


def _pinch_holo(g, d):
    if g < 3:
        raise GenusTooSmall("needs genus >= 3")
    base = ModuliBase(g, len(d))
    lam = -4 * (g - 7)
    psi = [Fraction((2 * g * (x + 1) - 3 * x - 5) * x) for x in d]

    def c(i, ds):
        return Fraction(
            (3 - 2 * g) * ds * ds
            + (4 * g * i + 2 * g - 10 * i + 1) * ds
            - 2 * g * i * i + 7 * i * i - 2 * g * i - i - 2
        )

    def direct(key):
        return c(key.i, _dsum(d, key.S))

    def mirrored(key):
        i2, S2 = mirror_index(base, key)
        return c(i2, _dsum(d, S2))

    bnd = _assemble(
        base,
        [
            (lambda key: _dsum(d, key.S) <= key.i - 1, direct),
            (lambda key: _dsum(d, key.S) >= key.i, mirrored),
        ],
    )
    return _make(base, lam, psi, -2, bnd)


def _pinch_mero(g, d, j):
    base = ModuliBase(g, len(d))
    h = -d[j - 1]
    if h == 2:
        lam = 27 - 4 * g
        psi = [
            Fraction(4 * g)
            if t == j
            else Fraction((4 * g * (d[t - 1] + 1) - 5 * d[t - 1] - 9) * d[t - 1], 2)
            for t in base.labels()
        ]

        def cA(i, ds):
            return Fraction(
                (5 - 4 * g) * ds * ds
                + (8 * g * i + 4 * g - 18 * i + 3) * ds
                - 4 * g * i * i - 4 * g * i + 13 * i * i - 3 * i - 4,
                2,
            )

        def cB(i, ds):
            return Fraction(
                (5 - 4 * g) * ds * ds
                + (8 * g * i - 4 * g - 18 * i + 9) * ds
                - 4 * g * i * i + 4 * g * i + 13 * i * i - 17 * i,
                2,
            )

    else:
        lam = 26 - 4 * g
        psi = [
            Fraction(2 * d[t - 1] * ((g - 1) * d[t - 1] + g - 2))
            for t in base.labels()
        ]

        def cA(i, ds):
            return Fraction(
                (2 - 2 * g) * ds * ds
                + 2 * (2 * g * i + g - 4 * i + 1) * ds
                - 2 * (g * i * i + g * i - 3 * i * i + i + 1)
            )

        def cB(i, ds):
            return Fraction(
                (2 - 2 * g) * ds * ds
                + 2 * (2 * g * i - g - 4 * i + 2) * ds
                - 2 * (g * i * i - 3 * i * i - g * i + 4 * i)
            )

    def pole_free_rep(key):
        if j in key.S:
            return mirror_index(base, key)
        return (key.i, key.S)

    def low(key):
        i2, S2 = pole_free_rep(key)
        return cA(i2, _dsum(d, S2))

    def high(key):
        i2, S2 = pole_free_rep(key)
        return cB(i2, _dsum(d, S2))

    def is_low(key):
        i2, S2 = pole_free_rep(key)
        return _dsum(d, S2) <= i2 - 1

    bnd = _assemble(
        base,
        [
            (is_low, low),
            (lambda key: not is_low(key), high),
        ],
    )
    return _make(base, lam, psi, -2, bnd)


def pinch_partition(g, d):
    """Divisor class of pointed curves carrying a differential with the given
    weights at the marked points and one extra double zero; holomorphic
    weights sum to g-1, a single pole of order >= 2 drops the sum to g-2."""
    d = tuple(int(x) for x in d)
    if not d:
        raise UnsupportedWeights("empty weight vector")
    if all(x >= 0 for x in d):
        if sum(d) != g - 1:
            raise BadWeights("holomorphic weights must sum to g-1")
        return _pinch_holo(g, d)
    poles = [t for t, x in enumerate(d, start=1) if x < 0]
    if len(poles) == 1 and d[poles[0] - 1] <= -2:
        if sum(d) != g - 2:
            raise BadWeights("weights with one pole must sum to g-2")
        return _pinch_mero(g, d, poles[0])
    raise UnsupportedWeights(
        "supported shapes: all weights >= 0, or exactly one pole of order >= 2"
    )


def brill_noether(g):
    """The pulled-back Brill-Noether divisor class on the 1-pointed space."""
    if g < 3:
        raise GenusTooSmall("needs genus >= 3")
    base = ModuliBase(g, 1)
    bnd = _assemble(
        base, [(lambda key: True, lambda key: -Fraction(key.i * (g - key.i)))]
    )
    return _make(base, g + 3, [Fraction(0)], -Fraction(g + 1, 6), bnd)


def bn_coefficient_check(a):
    """Whether a class on a 1-pointed base satisfies the linear coefficient
    identity characterizing rational combinations of the Brill-Noether and
    Weierstrass classes."""
    if a.base.n != 1:
        raise BaseMismatch("check applies to classes on a 1-pointed base")
    g = a.base.g
    return 2 * a.psi[0] + 6 * (g + 3) * g * a.delta0 + g * (g + 1) * a.lam == 0


CONSTRUCTORS = {
    "weierstrass": (weierstrass, ("g",)),
    "residual": (residual, ("g",)),
    "diaz": (diaz, ("g",)),
    "d1-holo": (d1_holo, ("g", "k")),
    "d1-mero": (d1_mero, ("g", "h")),
    "logan": (logan_class, ("g", "d")),
    "theta-pullback": (theta_pullback_class, ("g", "d")),
    "theta-char": (theta_characteristic_locus, ("g", "parity")),
    "antiram": (anti_ramification, ("g",)),
    "coupled": (coupled_partition, ("g", "d", "parity")),
    "pinch": (pinch_partition, ("g", "d")),
    "bn": (brill_noether, ("g",)),
    "dinf": (d_infinity, ("g", "parity")),
}
