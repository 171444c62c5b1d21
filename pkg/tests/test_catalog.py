import itertools
import json
from fractions import Fraction

import pytest

from artifact.core import (
    BaseMismatch,
    DivisorClass,
    ModuliBase,
    ParamOutOfRange,
    enumerate_boundary,
    equals,
    relabel,
    to_json,
)
from artifact.catalog import (
    BadWeights,
    CONSTRUCTORS,
    GenusTooSmall,
    ParityUnavailable,
    UnsupportedWeights,
    _assemble,
    anti_ramification,
    bn_coefficient_check,
    brill_noether,
    coupled_partition,
    d1_holo,
    d1_mero,
    d_infinity,
    diaz,
    logan_class,
    pinch_partition,
    residual,
    theta_characteristic_locus,
    theta_pullback_class,
    weierstrass,
)


def coeffs(a):
    """(lambda, psi tuple, delta0, {(i, sorted S): c}) for literal checks."""
    return (
        a.lam,
        a.psi,
        a.delta0,
        {(k.i, tuple(k.sorted_S())): c for k, c in a.boundary.items()},
    )


class TestPrintedClasses:
    def test_weierstrass_genus3(self):
        lam, psi, d0, bnd = coeffs(weierstrass(3))
        assert (lam, psi, d0) == (-1, (6,), 0)
        assert bnd == {(1, (1,)): -3, (2, (1,)): -1}

    def test_theta_genus3_odd(self):
        lam, psi, d0, bnd = coeffs(theta_characteristic_locus(3, "odd"))
        assert (lam, psi, d0) == (7, (14,), -1)
        assert bnd == {(1, (1,)): -9, (2, (1,)): -5}

    def test_theta_genus3_even(self):
        lam, psi, d0, bnd = coeffs(theta_characteristic_locus(3, "even"))
        assert (lam, psi, d0) == (9, (0,), -1)
        assert bnd == {(1, (1,)): -3, (2, (1,)): -3}

    def test_residual_genus3(self):
        lam, psi, d0, bnd = coeffs(residual(3))
        assert (lam, psi, d0) == (111, (6,), -12)
        assert bnd == {(1, (1,)): -27, (2, (1,)): -33}

    def test_brill_noether_genus3(self):
        lam, psi, d0, bnd = coeffs(brill_noether(3))
        assert (lam, psi, d0) == (6, (0,), Fraction(-2, 3))
        assert bnd == {(1, (1,)): -2, (2, (1,)): -2}


class TestSpecializations:
    def test_double_zero_order_zero_is_weierstrass_multiple(self):
        for g in range(3, 9):
            assert equals(d1_holo(g, 0), (g - 2) * weierstrass(g))

    def test_double_zero_top_order_is_residual(self):
        for g in range(3, 9):
            assert equals(d1_holo(g, g - 1), residual(g))

    def test_one_point_logan_is_weierstrass(self):
        for g in range(3, 9):
            assert equals(logan_class(g, (g,)), weierstrass(g))

    def test_antiram_is_weight_one_pinch(self):
        for g in range(3, 7):
            assert equals(anti_ramification(g), pinch_partition(g, (1,) * (g - 1)))

    def test_coupled_pair_matches_antiram_genus3(self):
        assert equals(coupled_partition(3, (1, 1)), anti_ramification(3))

    def test_theta_total_is_odd_plus_even(self):
        for g in range(2, 7):
            total = theta_characteristic_locus(g, "total")
            split = theta_characteristic_locus(g, "odd") \
                + theta_characteristic_locus(g, "even")
            assert equals(total, split)


class TestSpinAdditivity:
    @pytest.mark.parametrize("g", range(2, 8))
    def test_coupled_even_weights(self, g):
        total = coupled_partition(g, (-4, 4))
        split = coupled_partition(g, (-4, 4), "odd") \
            + coupled_partition(g, (-4, 4), "even")
        assert equals(total, split)

    @pytest.mark.parametrize("g", range(2, 8))
    def test_double_pole_pair(self, g):
        total = coupled_partition(g, (-2, 2))
        split = coupled_partition(g, (-2, 2), "odd") \
            + coupled_partition(g, (-2, 2), "even")
        assert equals(total, split)

    @pytest.mark.parametrize("g", range(2, 8))
    def test_collision_limit(self, g):
        total = d_infinity(g)
        split = d_infinity(g, "odd") + d_infinity(g, "even")
        assert equals(total, split)


class TestSymmetry:
    def test_logan_is_permutation_equivariant(self):
        d = (1, 2, 1)
        a = logan_class(4, d)
        for perm in itertools.permutations((1, 2, 3)):
            pd = tuple(d[perm[t] - 1] for t in range(3))
            moved = logan_class(4, pd)
            # relabel sends position t of pd back to position perm[t] of d
            back = relabel(moved, {t + 1: perm[t] for t in range(3)})
            assert equals(back, a)

    def test_coupled_weight_order_irrelevant_up_to_labels(self):
        a = coupled_partition(4, (-2, 1, 1))
        b = coupled_partition(4, (1, -2, 1))
        assert equals(relabel(b, {1: 2, 2: 1, 3: 3}), a)

    def test_theta_pullback_respects_labels(self):
        a = theta_pullback_class(4, (5, -2))
        b = theta_pullback_class(4, (-2, 5))
        assert equals(relabel(b, {1: 2, 2: 1}), a)


class TestErrors:
    def test_genus_bounds(self):
        with pytest.raises(GenusTooSmall):
            weierstrass(1)
        with pytest.raises(GenusTooSmall):
            diaz(2)
        with pytest.raises(GenusTooSmall):
            residual(2)
        with pytest.raises(GenusTooSmall):
            anti_ramification(2)

    def test_stratum_parameters(self):
        with pytest.raises(ParamOutOfRange):
            d1_holo(4, 4)
        with pytest.raises(ParamOutOfRange):
            d1_holo(4, -1)
        with pytest.raises(ParamOutOfRange):
            d1_mero(4, 1)

    def test_logan_weights(self):
        with pytest.raises(BadWeights):
            logan_class(3, (1, 1))  # wrong sum
        with pytest.raises(BadWeights):
            logan_class(3, (4, -1))  # negative weight
        with pytest.raises(BadWeights):
            logan_class(3, ())

    def test_theta_pullback_weights(self):
        with pytest.raises(BadWeights):
            theta_pullback_class(4, (3, -1))  # sums to 2, not g-1
        with pytest.raises(BadWeights):
            theta_pullback_class(4, (2, 1))  # no pole

    def test_coupled_weights(self):
        with pytest.raises(UnsupportedWeights):
            coupled_partition(4, (2, -1))  # nonzero sum
        with pytest.raises(UnsupportedWeights):
            coupled_partition(4, (1, 0, -1))
        with pytest.raises(ParityUnavailable):
            coupled_partition(4, (3, -3), "odd")
        with pytest.raises(ParityUnavailable):
            coupled_partition(4, (1, 1), "even")
        with pytest.raises(ParamOutOfRange):
            coupled_partition(4, (-2, 2), "both")

    def test_pinch_weights(self):
        with pytest.raises(BadWeights):
            pinch_partition(4, (1, 1))  # holomorphic sum must be g-1
        with pytest.raises(UnsupportedWeights):
            pinch_partition(4, (3, -1, 1))  # a simple pole is unsupported
        with pytest.raises(UnsupportedWeights):
            pinch_partition(4, (-2, 3, -2))  # two poles
        with pytest.raises(BadWeights):
            pinch_partition(4, (-2, 3))  # one pole: sum must be g-2

    def test_bn_check_needs_one_point(self):
        with pytest.raises(BaseMismatch):
            bn_coefficient_check(DivisorClass(ModuliBase(3, 0)))


class TestRegimeAudit:
    base = ModuliBase(4, 2)

    def test_gap_detected(self):
        with pytest.raises(AssertionError):
            _assemble(self.base, [(lambda k: k.i >= 2, lambda k: 1)])

    def test_overlap_detected(self):
        with pytest.raises(AssertionError):
            _assemble(
                self.base,
                [
                    (lambda k: k.i <= 2, lambda k: 1),
                    (lambda k: k.i >= 2, lambda k: 1),
                ],
            )

    def test_exact_cover_accepted(self):
        bnd = _assemble(
            self.base,
            [
                (lambda k: k.i <= 2, lambda k: 1),
                (lambda k: k.i > 2, lambda k: 2),
            ],
        )
        assert set(bnd) == set(enumerate_boundary(self.base))

    def test_zero_coefficients_omitted(self):
        bnd = _assemble(self.base, [(lambda k: True, lambda k: 0)])
        assert bnd == {}


class TestRegistry:
    def test_every_constructor_callable(self):
        samples = {
            "weierstrass": (3,),
            "residual": (4,),
            "diaz": (4,),
            "d1-holo": (4, 2),
            "d1-mero": (4, 3),
            "logan": (4, (1, 3)),
            "theta-pullback": (4, (5, -2)),
            "theta-char": (4, "odd"),
            "antiram": (4,),
            "coupled": (4, (-2, 2), "even"),
            "pinch": (4, (1, 2)),
            "bn": (4,),
            "dinf": (4, "total"),
        }
        assert set(samples) == set(CONSTRUCTORS)
        for name, args in samples.items():
            fn, wants = CONSTRUCTORS[name]
            a = fn(*args)
            assert isinstance(a, DivisorClass)
            assert len(args) == len(wants)
            json.loads(to_json(a))
