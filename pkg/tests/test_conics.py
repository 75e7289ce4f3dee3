"""Conic machinery: ideals, offset polynomials, critical offsets, singular points."""

import random
from fractions import Fraction as F

import mpmath as mp
import pytest

from conicoffset import reference
from conicoffset.conics import (ConicSpec, build_ideal, offset_poly_closed_form,
                                offset_poly_elimination, r_crit, singular_points,
                                singular_points_via_elimination)
from conicoffset.errors import ParamError
from conicoffset.poly import (content_normalize, gradient, parse_poly,
                              substitute)
from conicoffset.verify import conic_from_case, expected_points, proportional


def test_conic_spec_validation():
    with pytest.raises(ParamError):
        ConicSpec.parabola(0)
    with pytest.raises(ParamError):
        ConicSpec.ellipse(2, 2)  # circle
    with pytest.raises(ParamError):
        ConicSpec.ellipse(1, 2)
    with pytest.raises(ParamError):
        ConicSpec.hyperbola(1, 2)
    assert ConicSpec.hyperbola(1, 1).a == 1  # rectangular allowed
    assert ConicSpec.parabola(F(-1, 2)).p == F(-1, 2)


def test_r_crit_values():
    assert r_crit(ConicSpec.parabola(F(1, 3))) == F(2, 3)
    assert r_crit(ConicSpec.parabola(F(-1, 3))) == F(2, 3)
    assert r_crit(ConicSpec.ellipse(3, F(3, 2))) == F(3, 4)
    assert r_crit(ConicSpec.hyperbola(F(3, 2), 1)) == F(2, 3)


DISPLAYED_TRIPLES = {
    1: ("4*y0-3*x0^2",
        "16*y^2-32*y*y0+16*y0^2+16*x^2-32*x*x0+16*x0^2-1",
        "2*x-2*x0+3*x0*y-3*x0*y0"),
    6: ("y0^2+4*x0^2-9",
        "9*y^2-18*y*y0+9*y0^2+9*x^2-18*x*x0+9*x0^2-16",
        "y0*x+3*y0*x0-4*x0*y"),
    8: ("4*y0^2-9*x0^2-9",
        "9*y^2-18*y*y0+9*y0^2+9*x^2-18*x*x0+9*x0^2-4",
        "4*x*y0-13*x0*y0+9*x0*y"),
}


@pytest.mark.parametrize("case_id", sorted(DISPLAYED_TRIPLES))
def test_build_ideal_matches_displayed_triples(case_id):
    case = reference.case(case_id)
    conic = conic_from_case(case)
    ideal = build_ideal(conic, F(case["r"]))
    ring = ideal.ring
    for gen, shown in zip(ideal.generators, DISPLAYED_TRIPLES[case_id]):
        assert proportional(gen, parse_poly(shown, ring))


def test_build_ideal_errors():
    with pytest.raises(ParamError):
        build_ideal(ConicSpec.parabola(F(1, 3)), 0)
    with pytest.raises(ParamError):
        build_ideal("not-a-conic")


def test_symbolic_ideal_rings():
    assert build_ideal("parabola").ring == ("y0", "x0", "x", "y", "r", "p")
    assert build_ideal("ellipse").ring == ("y0", "x0", "x", "y", "a", "b", "r")
    assert build_ideal(ConicSpec.hyperbola(2, 1)).ring[-3:] == ("a", "b", "r")


@pytest.mark.parametrize("case_id", list(range(1, 10)))
def test_nine_reference_polynomials(case_id):
    case = reference.case(case_id)
    conic = conic_from_case(case)
    r = F(case["r"])
    shown = content_normalize(
        parse_poly(case["offset_poly"].replace("\n", ""), ("x", "y")))
    closed = offset_poly_closed_form(conic, r)
    elim = offset_poly_elimination(conic, r)
    assert proportional(closed.g, shown)
    assert proportional(elim.g, shown)
    assert closed.g == elim.g  # both content-normalized


def test_elimination_orders_agree():
    conic = ConicSpec.ellipse(3, F(3, 2))
    r = F(1, 2)
    assert offset_poly_elimination(conic, r, order="block").g == \
        offset_poly_elimination(conic, r, order="lex").g


def random_conics(kind, count, seed):
    rng = random.Random(seed)
    out = []
    while len(out) < count:
        if kind == "parabola":
            p = F(rng.randint(1, 6), rng.randint(1, 6)) * rng.choice((1, -1))
            if p != 0:
                out.append(ConicSpec.parabola(p))
        else:
            a = F(rng.randint(2, 8), rng.randint(1, 3))
            b = F(rng.randint(1, 6), rng.randint(1, 4))
            if a > b > 0:
                out.append(ConicSpec.ellipse(a, b) if kind == "ellipse"
                           else ConicSpec.hyperbola(a, b))
    return out


@pytest.mark.parametrize("kind", ["parabola", "ellipse", "hyperbola"])
def test_closed_form_agrees_with_elimination_randomized(kind):
    rng = random.Random(sum(map(ord, kind)))
    for conic in random_conics(kind, 12, seed=len(kind)):
        rc = r_crit(conic)
        r = rc * F(rng.randint(1, 12), 8)
        if r <= 0:
            continue
        assert offset_poly_closed_form(conic, r).g == \
            offset_poly_elimination(conic, r).g


@pytest.mark.parametrize("case_id", list(range(1, 10)))
def test_singular_points_reference(case_id):
    case = reference.case(case_id)
    conic = conic_from_case(case)
    rep = singular_points(conic, F(case["r"]))
    assert rep.regime == case["regime"]
    expect = expected_points(case)
    got = sorted((s.as_floats() for s in rep.points), key=lambda t: (t[1], t[0]))
    assert len(got) == len(expect)
    for (gx, gy), (ex, ey) in zip(got, expect):
        assert abs(gx - float(ex)) <= 1e-9
        assert abs(gy - float(ey)) <= 1e-9
    for s in rep.points:
        assert s.residual_grad <= 1e-9


def test_singular_float_residuals_both_polynomial_and_gradient():
    # type invariant: |g| and |grad g| <= 1e-9 scaled after float evaluation
    from conicoffset.curve import eval_poly, max_abs_coeff

    for cid in (1, 3, 4, 6, 9):
        case = reference.case(cid)
        conic = conic_from_case(case)
        r = F(case["r"])
        g = offset_poly_closed_form(conic, r).g
        gx, gy = gradient(g, ["x", "y"])
        scale = max(max_abs_coeff(q) for q in (g, gx, gy))
        rep = singular_points(conic, r)
        for s in rep.points:
            fx, fy = s.as_floats()
            assert abs(eval_poly(g, (fx, fy))) <= 1e-9 * scale
            gnorm = (eval_poly(gx, (fx, fy)) ** 2
                     + eval_poly(gy, (fx, fy)) ** 2) ** 0.5
            assert gnorm <= 1e-9 * scale


def test_singular_exactness_flags():
    rep = singular_points(ConicSpec.parabola(F(1, 3)), F(1, 4))
    (s,) = rep.points
    assert isinstance(s.x, F) and isinstance(s.y, F)
    assert s.y == F(73, 192)
    rep5 = singular_points(ConicSpec.ellipse(3, F(3, 2)), F(3, 4))
    assert {s.y for s in rep5.points} == {F(9, 4), F(-9, 4)}
    rep4 = singular_points(ConicSpec.ellipse(3, F(3, 2)), F(1, 2))
    assert all(isinstance(s.y, float) for s in rep4.points)  # sqrt(6) irrational


def test_singular_tags_and_regimes():
    conic = ConicSpec.ellipse(3, F(3, 2))
    sub = singular_points(conic, F(1, 2))
    assert {s.tag for s in sub.points} == {"virtual"}
    crit = singular_points(conic, F(3, 4))
    assert {s.tag for s in crit.points} == {"on-curve"}
    sup = singular_points(conic, F(4, 3))
    assert {s.tag for s in sup.points} == {"on-curve", "split"}
    assert sum(1 for s in sup.points if s.tag == "split") == 4


def test_regime_law_randomized():
    for kind in ("parabola", "ellipse", "hyperbola"):
        for conic in random_conics(kind, 6, seed=101):
            rc = r_crit(conic)
            for num, den in ((1, 3), (1, 1), (9, 8)):
                r = rc * F(num, den)
                if kind != "parabola" and not conic.b > r:
                    continue  # stay within the standard a > b > r range
                rep = singular_points(conic, r)
                want = (1 if r <= rc else 3) if kind == "parabola" \
                    else (2 if r <= rc else 6)
                assert len(rep.points) == want, (conic, r)


def test_collapse_at_criticality():
    conic = ConicSpec.ellipse(F(7, 2), F(3, 2))
    rc = r_crit(conic)
    rep = singular_points(conic, rc)
    a, b = conic.a, conic.b
    target = (a * a - b * b) / a
    ys = sorted(s.y for s in rep.points)
    assert ys == [-target, target]
    hyp = ConicSpec.hyperbola(F(5, 2), F(3, 2))
    rch = r_crit(hyp)
    reph = singular_points(hyp, rch)
    th = (hyp.a * hyp.a + hyp.b * hyp.b) / hyp.a
    assert sorted(s.y for s in reph.points) == [-th, th]
    # approach from above: split points converge to the collapse points
    eps_rows = []
    for k in (60, 240, 960):
        rep2 = singular_points(conic, rc + F(1, k))
        split_pts = [s for s in rep2.points if s.tag == "split"]
        d = max(min(abs(float(s.x)) + abs(float(s.y) - float(t)) for t in (target, -target))
                for s in split_pts)
        eps_rows.append(d)
    assert eps_rows[0] > eps_rows[1] > eps_rows[2]


def test_split_formulas_collapse_at_criticality():
    # evaluated exactly at r_crit, the split closed forms land on the
    # collapse points (x = 0, |y| = (a^2 -+ b^2)/a)
    from conicoffset.conics import (_ellipse_split_xy, _hyperbola_split_xy,
                                    RADICAL_DPS)
    with mp.workdps(RADICAL_DPS):
        a, b = F(3), F(3, 2)
        xs, ys = _ellipse_split_xy(a, b, r_crit(ConicSpec.ellipse(a, b)))
        want = (a * a - b * b) / a
        assert abs(xs) < mp.mpf("1e-55")
        assert abs(ys - mp.mpf(want.numerator) / want.denominator) < mp.mpf("1e-55")
        ah, bh = F(3, 2), F(1)
        xs, ys = _hyperbola_split_xy(ah, bh, r_crit(ConicSpec.hyperbola(ah, bh)))
        wanth = (ah * ah + bh * bh) / ah
        assert abs(xs) < mp.mpf("1e-55")
        assert abs(ys - mp.mpf(wanth.numerator) / wanth.denominator) < mp.mpf("1e-55")


def test_degenerate_r_equals_b_and_r_above_a():
    # r == b: the axis pair coincides at the origin (a node of the inner line)
    rep = singular_points(ConicSpec.ellipse(3, F(3, 2)), F(3, 2))
    assert rep.outside_reference_range
    assert sum(1 for s in rep.points if (float(s.x), float(s.y)) == (0.0, 0.0)) == 1
    assert len(rep.points) == 5
    # rectangular hyperbola with r > a: the equator pair becomes real too
    rep8 = singular_points(ConicSpec.hyperbola(1, 1), F(3, 2))
    assert len(rep8.points) == 8
    assert all(s.residual_grad <= 1e-9 for s in rep8.points)


def test_parabola_negative_p_symmetry():
    rep_pos = singular_points(ConicSpec.parabola(F(1, 3)), F(3, 2))
    rep_neg = singular_points(ConicSpec.parabola(F(-1, 3)), F(3, 2))
    got = sorted((float(s.x), float(s.y)) for s in rep_neg.points)
    want = sorted((float(s.x), -float(s.y)) for s in rep_pos.points)
    for (gx, gy), (wx, wy) in zip(got, want):
        assert abs(gx - wx) < 1e-12 and abs(gy - wy) < 1e-12
    assert all(s.residual_grad <= 1e-9 for s in rep_neg.points)


def test_gradient_matches_displayed_reference():
    # the worked critical-parabola case displays its gradient explicitly
    case = reference.case(2)
    g = content_normalize(
        parse_poly(case["offset_poly"].replace("\n", ""), ("x", "y")))
    gx, gy = gradient(g, ["x", "y"])
    shown_x = parse_poly(
        "-32*x+216*x*y^2-198*x^3-540*x^3*y-216*y^3*x+162*x^3*y^2+243*x^5",
        ("x", "y"))
    shown_y = parse_poly(
        "128-864*y^2+648*x^2*y-405*x^4-972*x^2*y^2+864*y^3+243*x^4*y",
        ("x", "y"))
    assert proportional(gx, shown_x)
    assert proportional(gy, shown_y)


@pytest.mark.parametrize("case_id", [1, 3, 5, 6, 8, 9])
def test_via_elimination_agrees(case_id):
    case = reference.case(case_id)
    conic = conic_from_case(case)
    r = F(case["r"])
    rep_e = singular_points_via_elimination(conic, r)
    rep_c = singular_points(conic, r)
    ge = sorted((s.as_floats() for s in rep_e.points), key=lambda t: (t[1], t[0]))
    gc = sorted((s.as_floats() for s in rep_c.points), key=lambda t: (t[1], t[0]))
    assert len(ge) == len(gc)
    for (ax, ay), (bx, by) in zip(ge, gc):
        assert abs(ax - bx) <= 1e-9 and abs(ay - by) <= 1e-9


def test_via_elimination_subcritical_parabola_axis_only():
    rep = singular_points_via_elimination(ConicSpec.parabola(F(1, 3)), F(1, 4))
    assert len(rep.points) == 1
    assert float(rep.points[0].x) == 0.0


def test_via_elimination_split_coordinate_value():
    # supercritical ellipse: x^2 of the split points solves the stored sextic
    case = reference.case(6)
    conic = conic_from_case(case)
    rep = singular_points_via_elimination(conic, F(case["r"]))
    splits = [s for s in rep.points if float(s.x) != 0.0]
    x2 = float(splits[0].x) ** 2
    want = float(reference.eval_radical(
        "(525 + 324*cbrt(6)**2 - 864*cbrt(6))/324"))
    assert abs(x2 - want) < 1e-12
    # and the stored general sextic in x vanishes there
    gx6 = parse_poly(reference.ELLIPSE_SINGULAR_SEXTIC_X.replace("\n", ""),
                     ("x", "a", "b", "r"))
    spec = substitute(gx6, {"a": F(3), "b": F(3, 2), "r": F(4, 3)})
    val = sum(float(c) * float(splits[0].x) ** m[0] for m, c in spec.terms.items())
    scale = max(abs(float(c)) for c in spec.terms.values())
    assert abs(val) / scale < 1e-10


def test_ellipse_outside_reference_range_flag():
    conic = ConicSpec.ellipse(3, F(3, 2))
    assert singular_points(conic, F(1, 2)).outside_reference_range is False
    assert singular_points(conic, F(8, 5)).outside_reference_range is True
    # r >= a makes the equator pair real
    rep = singular_points(conic, F(7, 2))
    assert any(float(s.y) == 0.0 and float(s.x) != 0.0 for s in rep.points)


def test_offset_curve_metadata():
    conic = ConicSpec.parabola(F(1, 3))
    oc = offset_poly_closed_form(conic, F(1, 4))
    assert oc.source == "closed-form" and oc.g.ring == ("x", "y")
    oe = offset_poly_elimination(conic, F(1, 4))
    assert oe.source == "elimination"
