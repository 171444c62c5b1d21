import math
import random
from fractions import Fraction

import numpy as np
import pytest

from artifact.enumerative import (
    ArityMismatch,
    IntPolynomial,
    OutOfRange,
    ProfileTooLong,
    ZeroPolynomial,
    count_distinct_nonzero_roots,
    de_jonquieres,
    picard_degree,
    plucker,
    residue_polynomial,
)


class TestDeJonquieres:
    def test_empty_profile(self):
        assert de_jonquieres(3, ()) == 1

    def test_single_double_point(self):
        assert de_jonquieres(3, (2,)) == 8

    def test_known_values(self):
        assert de_jonquieres(4, (1, 2, 2)) == 136
        assert de_jonquieres(4, (1, 2, 2), ordered=False) == 68

    def test_unordered_divides_by_repeats(self):
        assert de_jonquieres(5, (2, 2, 2, 1), ordered=False) \
            == Fraction(de_jonquieres(5, (2, 2, 2, 1)), 6)
        assert de_jonquieres(5, (1, 1, 2, 2), ordered=False) \
            == Fraction(de_jonquieres(5, (1, 1, 2, 2)), 4)

    def test_profile_length_limit(self):
        with pytest.raises(ProfileTooLong):
            de_jonquieres(3, (1, 1, 1))

    def test_positive_multiplicities_required(self):
        with pytest.raises(OutOfRange):
            de_jonquieres(4, (2, 0))
        with pytest.raises(OutOfRange):
            de_jonquieres(0, (1,))

    def test_simple_zeros_oracle(self):
        # with all multiplicities 1 the count is the falling factorial
        # g!/(g-rho-1)! times the evaluated inner sum; cross-check against a
        # direct inclusion-exclusion count of the same alternating sum
        for g in range(2, 8):
            for rho in range(0, g - 1):
                ks = (1,) * rho
                inner = Fraction((-1) ** rho, g)
                for j in range(rho):
                    inner += Fraction((-1) ** j * math.comb(rho, j), g - rho + j)
                want = Fraction(math.factorial(g), math.factorial(g - rho - 1)) * inner
                assert de_jonquieres(g, ks) == want


class TestPlucker:
    def test_canonical_series(self):
        # the canonical series g^{g-1}_{2g-2} has g(g^2-1) ramification weight
        for g in range(2, 9):
            assert plucker(g - 1, 2 * g - 2, g) == g * (g * g - 1)

    def test_pencils(self):
        assert plucker(1, 2, 0) == 2  # a double cover of the line branches twice
        assert plucker(1, 4, 3) == 12


class TestPicardDegree:
    def test_printed_value(self):
        assert picard_degree((5, 1), 2) == 50

    def test_formula(self):
        assert picard_degree((1, 1, 1), 3) == 6
        assert picard_degree((2, 3), 2) == 2 * 4 * 9

    def test_arity(self):
        with pytest.raises(ArityMismatch):
            picard_degree((1, 2), 3)


class TestIntPolynomial:
    def test_trims_trailing_zeros(self):
        p = IntPolynomial([1, 2, 0, 0])
        assert p.coeffs == (1, 2)
        assert p.degree == 1

    def test_zero(self):
        z = IntPolynomial([0, 0])
        assert z.is_zero()
        with pytest.raises(ZeroPolynomial):
            z.degree
        with pytest.raises(ZeroPolynomial):
            count_distinct_nonzero_roots(z)

    def test_evaluation(self):
        p = IntPolynomial([1, -3, 2])  # 2t^2 - 3t + 1 = (2t-1)(t-1)
        assert p(1) == 0
        assert p(Fraction(1, 2)) == 0
        assert p(0) == 1

    def test_str(self):
        assert str(IntPolynomial([10, 20, 5])) == "10 + 20*t + 5*t^2"
        assert str(IntPolynomial([])) == "0"


class TestResiduePolynomial:
    def test_printed_instance(self):
        p = residue_polynomial(4, 5, 5)
        assert p.coeffs == (10, 20, 5)
        assert count_distinct_nonzero_roots(p) == 2

    def test_equal_pole_family(self):
        for h in range(3, 11):
            p = residue_polynomial(4, h, h)
            assert count_distinct_nonzero_roots(p) == 2

    def test_minimal_case(self):
        p = residue_polynomial(4, 2, 2)
        assert p.coeffs == (0, 2, 2)
        assert count_distinct_nonzero_roots(p) == 1

    def test_domain(self):
        with pytest.raises(OutOfRange):
            residue_polynomial(1, 5, 2)
        with pytest.raises(OutOfRange):
            residue_polynomial(4, 5, 0)
        with pytest.raises(OutOfRange):
            residue_polynomial(4, 5, 7)
        residue_polynomial(4, 5, 6)  # boundary m = j+k-3 is allowed

    def test_degree_and_positivity(self):
        for j in range(2, 7):
            for k in range(2, 7):
                for m in range(1, j + k - 2):
                    p = residue_polynomial(j, k, m)
                    assert len(p.coeffs) <= j
                    assert all(c >= 0 for c in p.coeffs)


class TestRootCountOracle:
    def test_against_numeric_roots(self):
        rng = random.Random(424242)
        checked = 0
        while checked < 100:
            deg = rng.randint(1, 6)
            coeffs = [rng.randint(-9, 9) for _ in range(deg + 1)]
            if coeffs[-1] == 0:
                continue
            p = IntPolynomial(coeffs)
            roots = np.roots(list(reversed(p.coeffs)))
            nonzero = [r for r in roots if abs(r) > 1e-8]
            clusters = []
            for r in nonzero:
                if all(abs(r - c) > 1e-6 for c in clusters):
                    clusters.append(r)
            assert count_distinct_nonzero_roots(p) == len(clusters)
            checked += 1
