"""Exact Laurent arithmetic, checked against floating-point evaluation."""

import cmath
import math
import random
from fractions import Fraction

import pytest

from ribbonjones.laurent import (QPLUS, GaussianInt, LaurentA, NotInQSubring, divmod_laurent,
                                 eval_q_1, eval_q_i, expand_series, factor_multiplicity_qplus,
                                 i_power, parse_gaussian, parse_laurent, render_a, render_q)

POINTS = [cmath.exp(1j * t) * r for t, r in ((0.3, 1.1), (1.7, 0.9), (2.9, 1.3))]


def _value(p: LaurentA, a: complex) -> complex:
    return sum(c * a ** e for e, c in p.items())


def _random_poly(rng, lo=-8, hi=8, even=False):
    step = 2 if even else 1
    return LaurentA({e: rng.randint(-5, 5) for e in range(lo, hi + 1, step)})


@pytest.mark.parametrize("seed", range(20))
def test_ring_operations_match_evaluation(seed):
    rng = random.Random(seed)
    f, g = _random_poly(rng), _random_poly(rng)
    for a in POINTS:
        assert abs(_value(f * g, a) - _value(f, a) * _value(g, a)) < 1e-6
        assert abs(_value(f - g, a) - (_value(f, a) - _value(g, a))) < 1e-9
        assert abs(_value(f ** 3, a) - _value(f, a) ** 3) < 1e-3


@pytest.mark.parametrize("seed", range(20))
def test_division_round_trip(seed):
    rng = random.Random(seed)
    f = _random_poly(rng, -4, 4)
    g = QPLUS ** rng.randint(0, 3) * _random_poly(rng, -2, 2, even=True)
    if not g:
        return
    q, r = divmod_laurent(f * g, g)
    assert not r and q == f
    assert (f * g).exact_div(g) == f


def test_division_reports_remainder():
    _, r = divmod_laurent(LaurentA({0: 1}), QPLUS)
    assert r
    with pytest.raises(ValueError):
        LaurentA({0: 1}).exact_div(QPLUS)
    with pytest.raises(ZeroDivisionError):
        divmod_laurent(QPLUS, LaurentA())


def test_qplus_multiplicity():
    rest = LaurentA.from_q({3: 1, 0: 2})
    m, r = factor_multiplicity_qplus(QPLUS ** 4 * rest)
    assert m == 4 and r == rest
    with pytest.raises(ValueError):
        factor_multiplicity_qplus(LaurentA())


@pytest.mark.parametrize("seed", range(10))
def test_evaluations_match_complex_values(seed):
    rng = random.Random(seed)
    p = _random_poly(rng, even=True)
    # q = -A^-2; q = i at A = exp(i pi/4), q = 1 at A = i
    at_i = _value(p, cmath.exp(1j * math.pi / 4))
    g = eval_q_i(p)
    assert abs(complex(g.re, g.im) - at_i) < 1e-9
    assert abs(eval_q_1(p) - _value(p, 1j)) < 1e-9


def test_odd_exponents_rejected():
    with pytest.raises(NotInQSubring):
        eval_q_i(LaurentA({1: 1}))
    with pytest.raises(NotInQSubring):
        LaurentA({3: 2}).q_terms()


@pytest.mark.parametrize("center,base", [("at_i", 1j), ("at_1", 1)])
def test_series_against_finite_differences(center, base):
    p = LaurentA.from_q({5: 2, 1: -1, -3: 4, 0: 7})
    series = expand_series(p, center, 3)

    def f(h):
        q = base * cmath.exp(h / 2)
        return sum(c * q ** m for m, c in p.q_terms().items())

    h = 1e-3
    derivs = [f(0), (f(h) - f(-h)) / (2 * h), (f(h) - 2 * f(0) + f(-h)) / h ** 2]
    for k, d in enumerate(derivs):
        c = series[k]
        approx = d / math.factorial(k)
        assert abs(complex(float(c.real), float(c.imag)) - approx) < 1e-3


def test_series_of_qplus_power_starts_late():
    # (q + q^-1)^2 at q = i e^{h/2} is (2i sinh(h/2))^2 = -h^2 + ...
    s = expand_series(QPLUS ** 2, "at_i", 3)
    assert s.first_nonzero() == 2
    assert s[2].real == Fraction(-1) and s[2].imag == 0


def test_gaussian_arithmetic():
    a, b = GaussianInt(2, -3), GaussianInt(-1, 4)
    assert a * b == GaussianInt(10, 11)
    assert (a * b).norm() == a.norm() * b.norm()
    assert i_power(-1) == GaussianInt(0, -1) and i_power(6) == -1
    assert a ** 2 == a * a


@pytest.mark.parametrize("text,value", [("-23", GaussianInt(-23)), ("2i", GaussianInt(0, 2)),
                                        ("-i", GaussianInt(0, -1)), ("3-4i", GaussianInt(3, -4))])
def test_parse_gaussian(text, value):
    assert parse_gaussian(text) == value
    assert parse_gaussian(str(value)) == value


def test_parse_render_round_trip():
    p = LaurentA({7: -2, 0: 1, -3: 5})
    assert parse_laurent(render_a(p)) == p
    v = LaurentA.from_q({6: 1, 4: -1, 2: 2, -2: 2, -4: -1, -6: 1})
    assert render_q(v) == "q^6 - q^4 + 2*q^2 + 2*q^-2 - q^-4 + q^-6"
    assert parse_laurent(render_q(v)) == v
    with pytest.raises(ValueError):
        parse_laurent("A + q")
    with pytest.raises(ValueError):
        parse_laurent("")


def test_qplus_is_q_plus_inverse():
    assert QPLUS == LaurentA.from_q({1: 1, -1: 1})
