"""Acceptance criteria, one test per criterion, tolerances pinned here.

Each criterion prints a PASS/FAIL line (run with ``pytest -s`` to see them
all, or execute this file directly).  Criterion 2's ellipse/hyperbola clause
asserts the contract as stated; the computed reduced bases genuinely differ
(see the runbook note printed on failure), so that single test is expected to
stay red and is left red deliberately.
"""

import random
import time
from fractions import Fraction as F

import pytest

from conicoffset import reference
from conicoffset.conics import (ConicSpec, build_ideal, offset_poly_closed_form,
                                offset_poly_elimination, r_crit, singular_points,
                                singular_points_via_elimination)
from conicoffset.curve import (eval_poly, max_abs_coeff, max_curvature,
                               parametric_offset_samples)
from conicoffset.groebner import buchberger, reduce_basis
from conicoffset.mesh import MeshSpec, generate_mesh
from conicoffset.poly import content_normalize, lex, parse_poly
from conicoffset.verify import (conic_from_case, expected_points, proportional,
                                verify_case)

TOL_SINGULAR = 1e-9          # criterion 3: absolute, after 50-guard-digit radicals
TOL_CURVATURE = 1e-9         # criterion 4: r_crit * kappa_max == 1
TOL_SAMPLES = 1e-7           # criterion 5: scaled residual of parametric samples
TOL_ROUTE_AGREEMENT = 1e-9   # criterion 5: elimination vs closed-form points
TOL_MESH_RESIDUAL = 1e-8     # criterion 6: scaled layer residual
RUNTIME_EXAMPLE = 30.0       # criterion 1 seconds per specific-parameter example
RUNTIME_SYMBOLIC = 1800.0    # criterion 2 seconds per symbolic run
RUNTIME_MESH = 5.0           # criterion 6 seconds


def criterion(name: str, ok: bool, detail: str = ""):
    print(f"[{'PASS' if ok else 'FAIL'}] {name}" + (f": {detail}" if detail else ""))
    assert ok, f"{name}: {detail}"


def all_cases():
    return [(cid, reference.case(cid)) for cid in range(1, 10)]


def test_criterion_1_nine_example_proportionality():
    worst_dt = 0.0
    for cid, case in all_cases():
        conic = conic_from_case(case)
        r = F(case["r"])
        shown = content_normalize(
            parse_poly(case["offset_poly"].replace("\n", ""), ("x", "y")))
        t0 = time.time()
        closed = offset_poly_closed_form(conic, r)
        elim = offset_poly_elimination(conic, r)
        dt = time.time() - t0
        worst_dt = max(worst_dt, dt)
        assert proportional(closed.g, shown), f"case {cid}: closed form mismatch"
        assert proportional(elim.g, shown), f"case {cid}: elimination mismatch"
        assert dt < RUNTIME_EXAMPLE, f"case {cid} took {dt:.1f}s"
    criterion("criterion 1 (nine-example proportionality, both routes)",
              True, f"9/9 exact up to a rational scalar, max {worst_dt:.2f}s")


def test_criterion_2_symbolic_parabola_basis():
    contract = reference.SYMBOLIC_BASIS_PARABOLA
    t0 = time.time()
    ideal = build_ideal("parabola")
    gb = reduce_basis(buchberger(ideal, lex(ideal.ring), max_degree=60))
    dt = time.time() - t0
    ok = (dt < RUNTIME_SYMBOLIC and len(gb.polys) == contract["size"]
          and tuple(gb.degree_multiset()) == contract["degree_multiset"])
    criterion("criterion 2 (symbolic parabola: 14 polys, degree multiset)",
              ok, f"{len(gb.polys)} polys, multiset {gb.degree_multiset()}, {dt:.2f}s")


@pytest.mark.parametrize("kind", ["ellipse", "hyperbola"])
def test_criterion_2_symbolic_central_basis(kind):
    """Contract as specified: 15 polynomials, multiset {16,16,14,...,2}.

    Deliberately red: the unique reduced lex basis of <f1,f2,f3> for
    y0>x0>x>y>a>b>r has 34 members (degrees 2..27).  This was certified by an
    exhaustive S-polynomial reduction check of the computed basis plus an
    independent re-verification of every reduction with sympy's arithmetic;
    the fifteen displayed reference polynomials are ideal members but do not
    form a Groebner basis for this (or any scanned) order.  The head display
    g1 = a^2 b^2 * g IS reproduced exactly, and every specialized offset
    polynomial (criterion 1) matches, so nothing downstream depends on this.
    """
    contract = reference.SYMBOLIC_BASIS_CENTRAL
    t0 = time.time()
    ideal = build_ideal(kind)
    gb = reduce_basis(buchberger(ideal, lex(ideal.ring), max_degree=60))
    dt = time.time() - t0
    assert dt < RUNTIME_SYMBOLIC
    ok = (len(gb.polys) == contract["size"]
          and tuple(gb.degree_multiset()) == contract["degree_multiset"])
    criterion(f"criterion 2 (symbolic {kind}: 15 polys, degree multiset)", ok,
              f"computed {len(gb.polys)} polys, multiset {gb.degree_multiset()}, "
              f"{dt:.2f}s")


def test_criterion_2_stretch_term_by_term_report():
    # reported, not gating
    a = verify_case("appendixA")
    b = verify_case("appendixB")
    print(f"[INFO] stretch: symbolic parabola displays matched term-by-term "
          f"{a['checks']['stretch_term_by_term_matches']}/"
          f"{a['checks']['stretch_display_count']}; ellipse "
          f"{b['checks']['stretch_term_by_term_matches']}/"
          f"{b['checks']['stretch_display_count']}; head-polynomial "
          f"proportionality {b['checks']['head_display_is_a2b2_times_offset_poly']}")
    assert a["checks"]["stretch_term_by_term_matches"] >= 13
    assert b["checks"]["head_display_is_a2b2_times_offset_poly"]


def test_criterion_3_singular_point_numerics():
    worst = 0.0
    for cid, case in all_cases():
        conic = conic_from_case(case)
        rep = singular_points(conic, F(case["r"]))
        expect = expected_points(case)
        got = sorted((s.as_floats() for s in rep.points),
                     key=lambda t: (t[1], t[0]))
        assert len(got) == len(expect), f"case {cid}: count"
        for (gx, gy), (ex, ey) in zip(got, expect):
            err = max(abs(gx - float(ex)), abs(gy - float(ey)))
            worst = max(worst, err)
            assert err <= TOL_SINGULAR, f"case {cid}: err {err}"
    criterion("criterion 3 (singular-point numerics, 1e-9)",
              True, f"worst absolute error {worst:.2e}")


def random_specs(kind, count, seed):
    rng = random.Random(seed)
    out = []
    while len(out) < count:
        if kind == "parabola":
            p = F(rng.randint(1, 9), rng.randint(1, 9)) * rng.choice((1, -1))
            if p:
                out.append(ConicSpec.parabola(p))
        else:
            a = F(rng.randint(2, 9), rng.randint(1, 3))
            b = F(rng.randint(1, 8), rng.randint(1, 4))
            if a > b > 0:
                out.append(ConicSpec.ellipse(a, b) if kind == "ellipse"
                           else ConicSpec.hyperbola(a, b))
    return out


def test_criterion_4_critical_offset_law():
    assert r_crit(ConicSpec.parabola(F(1, 3))) == F(2, 3)
    assert r_crit(ConicSpec.ellipse(3, F(3, 2))) == F(3, 4)
    assert r_crit(ConicSpec.hyperbola(F(3, 2), 1)) == F(2, 3)
    worst = 0.0
    for kind in ("parabola", "ellipse", "hyperbola"):
        for conic in random_specs(kind, 10, seed=4000 + len(kind)):
            err = abs(float(r_crit(conic)) * max_curvature(conic) - 1.0)
            worst = max(worst, err)
            assert err <= TOL_CURVATURE, (conic, err)
    criterion("criterion 4 (r_crit exact; r_crit * kappa_max = 1, 30 specs)",
              True, f"worst |r_crit*kappa - 1| = {worst:.2e}")


def test_criterion_5_oracle_equivalence():
    # (a) parametric samples lie on the implicit variety
    worst_scaled = 0.0
    regimes = {
        "parabola": (ConicSpec.parabola(F(1, 3)), (F(1, 4), F(2, 3), F(3, 2))),
        "ellipse": (ConicSpec.ellipse(3, F(3, 2)), (F(1, 2), F(3, 4), F(4, 3))),
        "hyperbola": (ConicSpec.hyperbola(F(3, 2), 1), (F(1, 2), F(2, 3), F(4, 3))),
    }
    for kind, (conic, rs) in regimes.items():
        for r in rs:
            g = offset_poly_closed_form(conic, r).g
            scale = max_abs_coeff(g)
            pts = parametric_offset_samples(conic, float(r), 500)
            res = max(abs(eval_poly(g, p)) for p in pts) / scale
            worst_scaled = max(worst_scaled, res)
            assert res <= TOL_SAMPLES, (kind, r, res)
    # (b) elimination route agrees with closed-form singular points
    worst_pt = 0.0
    for kind in ("parabola", "ellipse", "hyperbola"):
        checked = 0
        for conic in random_specs(kind, 30, seed=5000 + len(kind)):
            if checked >= 5:
                break
            rc = r_crit(conic)
            r = rc * F(5, 4)
            if kind != "parabola" and not conic.b > r:
                continue
            rep_e = singular_points_via_elimination(conic, r)
            rep_c = singular_points(conic, r)
            ge = sorted((s.as_floats() for s in rep_e.points),
                        key=lambda t: (t[1], t[0]))
            gc = sorted((s.as_floats() for s in rep_c.points),
                        key=lambda t: (t[1], t[0]))
            assert len(ge) == len(gc), (conic, r)
            for (ax, ay), (bx, by) in zip(ge, gc):
                err = max(abs(ax - bx), abs(ay - by))
                worst_pt = max(worst_pt, err)
                assert err <= TOL_ROUTE_AGREEMENT, (conic, r, err)
            checked += 1
        assert checked == 5, f"only {checked} supercritical {kind} specs checked"
    criterion("criterion 5 (oracle equivalence: samples on variety; "
              "elimination vs closed-form singular points)",
              True, f"worst scaled sample residual {worst_scaled:.2e}, "
                    f"worst route disagreement {worst_pt:.2e}")


def test_criterion_6_mesh_reproduction():
    t0 = time.time()
    result = verify_case("mesh")
    dt = time.time() - t0
    ok = result["passed"] and dt < RUNTIME_MESH
    criterion("criterion 6 (mesh: 7x20, 140 nodes, 120 quad4, 30 quad9, "
              "layer residual 1e-8)", ok, result["summary"] + f", {dt:.2f}s")
    # second, explicit count check straight from the generator
    spec = MeshSpec(ellipse=ConicSpec.ellipse(4, 2), offsets=(0.2, 0.4, 0.6),
                    y_stations=(3.75, 3, 2, 1, 0, -1, -2, -3, -3.75))
    mesh = generate_mesh(spec)
    assert (mesh.rows, mesh.cols, len(mesh.quad4), len(mesh.quad9)) \
        == (7, 20, 120, 30)


def test_criterion_7_determinism():
    import json

    runs = []
    for _ in range(2):
        reports = [verify_case(cid) for cid in range(1, 10)]
        runs.append(json.dumps(reports, sort_keys=True))
    ok = runs[0] == runs[1]
    criterion("criterion 7 (verify_paper(1..9) byte-identical)", ok,
              f"{len(runs[0])} bytes per report")


if __name__ == "__main__":
    import sys

    failures = 0
    for name, fn in sorted(globals().items()):
        if name.startswith("test_criterion") and callable(fn):
            params = getattr(fn, "pytestmark", None)
            try:
                if params:
                    for kind in ("ellipse", "hyperbola"):
                        fn(kind)
                else:
                    fn()
            except AssertionError:
                failures += 1
    sys.exit(1 if failures else 0)
