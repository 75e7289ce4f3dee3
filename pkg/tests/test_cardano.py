"""Exact univariate helpers and Cardano-based real root extraction."""

from fractions import Fraction as F

import mpmath as mp
import pytest

from conicoffset.cardano import (eval_poly_at, fraction_sqrt, poly_divmod,
                                 poly_gcd, real_cbrt, real_roots_cubic,
                                 real_roots_exact, squarefree_decomposition)


def poly_mul(a, b):
    out = [F(0)] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        for j, y in enumerate(b):
            out[i + j] += x * y
    return out


def test_fraction_sqrt():
    assert fraction_sqrt(F(9, 4)) == F(3, 2)
    assert fraction_sqrt(F(2)) is None
    assert fraction_sqrt(F(-1)) is None
    assert fraction_sqrt(F(0)) == 0


def test_real_cbrt():
    assert abs(real_cbrt(-8) + 2) < 1e-15
    assert abs(real_cbrt(27) - 3) < 1e-15


def test_divmod_gcd():
    a = poly_mul([F(-1), F(1)], [F(2), F(1)])  # (t-1)(t+2)
    q, r = poly_divmod(a, [F(-1), F(1)])
    assert q == [F(2), F(1)] and r == []
    g = poly_gcd(poly_mul(a, a), a)
    assert g == [F(-2), F(-1), F(1)] or g == [c / g[-1] for c in g]  # monic
    assert poly_gcd([F(1)], [F(3), F(1)]) == [F(1)]


def test_squarefree_decomposition():
    # (t-1)^2 (t+2)^3
    p = poly_mul(poly_mul([F(-1), F(1)], [F(-1), F(1)]),
                 poly_mul(poly_mul([F(2), F(1)], [F(2), F(1)]), [F(2), F(1)]))
    parts = squarefree_decomposition(p)
    assert [(m, len(q) - 1) for m, q in parts] == [(2, 1), (3, 1)]


def test_cubic_three_real():
    roots = real_roots_cubic([F(-6), F(11), F(-6), F(1)])
    assert [float(r) for r in roots] == pytest.approx([1, 2, 3], abs=1e-12)


def test_cubic_one_real():
    cs = [F(1), F(1), F(0), F(1)]  # t^3 + t + 1
    with mp.workdps(50):
        (root,) = real_roots_cubic(cs)
        assert abs(eval_poly_at(cs, root)) < mp.mpf("1e-45")


def test_cubic_multiple_roots_exact():
    # (t-2)^2 (t+1): double root must come back as an exact rational
    roots = real_roots_cubic([F(4), F(0), F(-3), F(1)])
    assert roots == [F(-1), F(2)]
    # triple root
    assert real_roots_cubic([F(-1), F(3), F(-3), F(1)]) == [F(1)]


def test_real_roots_exact_even_square_structure():
    # t^2 (t^2-2)^2 (t^2-3): the elimination-univariate shape
    p = [F(0), F(0), F(1)]
    for factor in ([F(-2), F(0), F(1)], [F(-2), F(0), F(1)], [F(-3), F(0), F(1)]):
        p = poly_mul(p, factor)
    with mp.workdps(50):
        roots = [float(r) for r in real_roots_exact(p)]
    assert roots == pytest.approx(
        [-3 ** 0.5, -2 ** 0.5, 0.0, 2 ** 0.5, 3 ** 0.5], abs=1e-14)


def test_real_roots_exact_rational():
    p = poly_mul(poly_mul([F(-1), F(1)], [F(-1), F(1)]), [F(2), F(1)])
    assert real_roots_exact(p) == [F(-2), F(1)]
