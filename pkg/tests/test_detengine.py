import math
import random
from fractions import Fraction

import pytest

from conftest import TEST_SIGNATURES
from regdet.detengine import (
    FieldConstants,
    VerificationReport,
    algebraicity_spot_check,
    check_lerch,
    check_periodicity,
    check_reflection,
    det_full,
    g_alt,
    g_closed,
    g_regularized,
    lattice_grid,
    low_degree_factor,
    reflection_at_zero,
    value_at_zero,
    residual,
)
from regdet.ktheory import Signature, truncated_char_poly
from regdet.specfun import DomainError

SQRT_PI = math.sqrt(math.pi)


def rel(x, y):
    return abs(x - y) / abs(y)


def agreement_points(n=40, seed=1):
    rng = random.Random(seed)
    pts = []
    while len(pts) < n:
        s = complex(rng.uniform(-1.5, 5), rng.uniform(-4, 4))
        if abs(s) > 1e-6 and abs(s + 1) > 1e-6:
            pts.append(s)
    return pts


def test_field_constants():
    c = FieldConstants(Signature(2, 1))
    assert c.degree == 4
    assert math.isclose(c.c_of_k, (2 * SQRT_PI) ** 2 * 2 * math.sqrt(2 * math.pi))


class TestClosed:
    @pytest.mark.parametrize(
        "s, sig, expected",
        [
            (0, Signature(1, 0), SQRT_PI),
            (0, Signature(0, 1), math.sqrt(2 * math.pi)),
            (1, Signature(1, 0), math.sqrt(2)),
            (2, Signature(1, 0), SQRT_PI / 2),
        ],
    )
    def test_values(self, s, sig, expected):
        assert rel(g_closed(s, sig), expected) < 1e-14

    def test_zero_at_minus_two(self):
        assert g_closed(-2, Signature(1, 0)) == 0

    def test_value_at_zero(self, sig):
        assert rel(g_closed(0, sig), value_at_zero(sig)) <= 1e-12

    @pytest.mark.parametrize("k", [1, 2, 3])
    def test_even_zero_order(self, sig, k):
        self._check_zero_order(sig, -2 * k, sig.r1 + sig.r2)

    @pytest.mark.parametrize("k", [0, 1])
    def test_odd_zero_order(self, k):
        for sig in TEST_SIGNATURES:
            if sig.r2:
                self._check_zero_order(sig, -1 - 2 * k, sig.r2)
            else:
                assert abs(g_closed(-1 - 2 * k, sig)) > 1e-3

    @staticmethod
    def _check_zero_order(sig, root, order):
        assert abs(g_closed(root, sig)) <= 1e-12
        h = 1e-3
        xs = [root + j * h for j in range(order + 1)]
        table = [g_closed(x, sig) for x in xs]
        diffs = [table[0]]
        for level in range(1, order + 1):
            table = [(table[i + 1] - table[i]) / (xs[i + level] - xs[i]) for i in range(len(table) - 1)]
            diffs.append(table[0])
        # lower divided differences vanish with h, the order-th one does not
        for lower in diffs[:-1]:
            assert abs(lower) < 1e-2 * abs(diffs[-1])
        assert abs(diffs[-1]) > 1e-6


class TestAlt:
    def test_values(self):
        assert rel(g_alt(1, Signature(1, 0)), math.sqrt(2)) < 1e-13
        assert rel(g_alt(2, Signature(1, 0)), SQRT_PI / 2) < 1e-13
        assert rel(g_alt(1, Signature(0, 1)), g_closed(1, Signature(0, 1))) < 1e-13

    def test_singular_at_zero(self):
        with pytest.raises(DomainError):
            g_alt(0, Signature(1, 0))

    def test_pole_of_gamma_C(self):
        with pytest.raises(DomainError):
            g_alt(-1, Signature(0, 1))

    def test_matches_closed(self, sig):
        for s in agreement_points(30, seed=2):
            assert rel(g_alt(s, sig), g_closed(s, sig)) <= 1e-8


class TestRegularized:
    @pytest.mark.parametrize(
        "s, sig",
        [(0, Signature(1, 0)), (1 + 1j, Signature(1, 1)), (3, Signature(0, 2)), (-1.5 + 0.5j, Signature(3, 1))],
    )
    def test_matches_closed(self, s, sig):
        assert rel(g_regularized(s, sig), g_closed(s, sig)) <= 1e-8

    def test_value_at_zero(self):
        assert abs(g_regularized(0, Signature(1, 0)) - SQRT_PI) <= 1e-8

    def test_domain(self):
        with pytest.raises(DomainError):
            g_regularized(-1.95, Signature(1, 0))


class TestDetFull:
    def test_zero_at_half(self, sig):
        assert det_full(0.5, sig) == 0

    def test_zero_at_origin(self):
        for sig in TEST_SIGNATURES:
            if sig.r1 + sig.r2 >= 2:
                assert det_full(0, sig) == 0

    def test_value(self):
        assert rel(det_full(1, Signature(1, 0)), math.sqrt(2) / 2) < 1e-14

    def test_low_degree_factor(self, sig):
        for s in agreement_points(10, seed=3):
            assert rel(det_full(s, sig), low_degree_factor(s, sig) * g_closed(s, sig)) <= 1e-12


class TestPeriodicity:
    def test_default_grid(self, sig):
        report = check_periodicity(sig)
        assert len(report.gridpoints) == 200
        assert report.passed and report.max_residual <= 1e-10

    def test_spot_value(self):
        report = check_periodicity(Signature(1, 0), [0])
        point = report.gridpoints[0]
        assert rel(point.lhs, SQRT_PI) < 1e-14
        assert point.residual < 1e-14

    def test_zero_matching(self):
        report = check_periodicity(Signature(0, 1), [-1])
        point = report.gridpoints[0]
        assert point.lhs == 0 and point.rhs == 0 and report.passed

    def test_random_box(self, sig):
        rng = random.Random(31)
        grid = [complex(rng.uniform(-4, 4), rng.uniform(-4, 4)) for _ in range(200)]
        assert check_periodicity(sig, grid).max_residual <= 1e-10

    def test_truncation_bookkeeping(self):
        # the finite products obey the same shift that relates G(s) and G(s+2)
        for sig in TEST_SIGNATURES:
            for n_max in (5, 9, 13, 17):
                for s in (0.3 + 0.2j, -1.7 + 1j, 2.5):
                    shifted = truncated_char_poly(s + 2, sig, n_max)
                    peeled = truncated_char_poly(s, sig, n_max + 4) / shifted
                    g_ratio = g_closed(s, sig) / g_closed(s + 2, sig)
                    assert rel(peeled, g_ratio) <= 1e-12


class TestReflection:
    def test_default_grid(self, sig):
        report = check_reflection(sig)
        assert report.passed and report.max_residual <= 1e-10

    def test_skips_zero(self):
        assert check_reflection(Signature(1, 0), [0, 1]).gridpoints[0].s == 1

    @pytest.mark.parametrize(
        "s, sig, expected",
        [
            (1, Signature(1, 0), 2.0),
            (0.5, Signature(1, 0), 2 * math.sqrt(2)),
            (1, Signature(0, 1), 0.0),
        ],
    )
    def test_spot_values(self, s, sig, expected):
        point = check_reflection(sig, [s]).gridpoints[0]
        assert abs(point.lhs - expected) <= 1e-12
        assert abs(point.rhs - expected) <= 1e-12

    @pytest.mark.parametrize(
        "sig, expected",
        [(Signature(1, 0), math.pi), (Signature(0, 1), 2 * math.pi), (Signature(2, 1), 2 * math.pi**3)],
    )
    def test_at_zero(self, sig, expected):
        assert rel(reflection_at_zero(sig), expected) <= 1e-12

    @pytest.mark.parametrize(
        "sig, s, reference",
        [
            (Signature(1, 0), Fraction(1, 2), 2 * math.sqrt(2)),
            (Signature(1, 0), 1, 2.0),
            (Signature(0, 1), Fraction(1, 3), 3 * math.sqrt(3)),
            (Signature(1, 1), Fraction(1, 4), 8 * math.sin(math.pi / 8) * 8 * math.sin(math.pi / 4)),
        ],
    )
    def test_algebraicity(self, sig, s, reference):
        assert algebraicity_spot_check(sig, s, reference)

    def test_algebraicity_rejects_wrong_reference(self):
        assert not algebraicity_spot_check(Signature(1, 0), Fraction(1, 2), 2.83)
        with pytest.raises(ValueError):
            algebraicity_spot_check(Signature(1, 0), 0, 1.0)


class TestReport:
    def test_metric_and_flag(self):
        r = VerificationReport("x", 1e-3)
        r.add(1, 1.0005, 1.0)
        r.add(2, 10.0, 10.01)
        assert r.max_residual == pytest.approx(0.01 / 10.01)
        assert r.passed
        assert residual(0, 0) == 0
        assert residual(0.5, 0.25) == 0.25

    def test_pass_boundary(self):
        r = VerificationReport("x", 0.25)
        r.add(0, 0.5, 0.25)
        assert r.passed
        r.add(0, 0.6, 0.25)
        assert not r.passed

    def test_to_dict_schema(self):
        d = check_periodicity(Signature(1, 0), [1 + 1j]).to_dict()
        assert set(d) == {"identity", "tolerance", "max_residual", "passed", "points"}
        assert set(d["points"][0]) == {"s", "lhs", "rhs", "residual"}
        assert d["points"][0]["s"] == [1.0, 1.0]

    def test_lattice_order(self):
        grid = lattice_grid(-1, 1, 3, -1, 1, 3)
        assert grid == sorted(grid, key=lambda z: (z.real, z.imag))
        assert len(lattice_grid()) == 200


def test_lerch_suite():
    report = check_lerch()
    assert len(report.gridpoints) == 60
    assert report.passed
