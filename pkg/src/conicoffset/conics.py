"""Conic-specific machinery: variety ideals, offset-curve polynomials via
closed form and via Groebner elimination, critical offsets, and singular
points of the offset varieties.

Conventions (fixed throughout the package): the parabola has its vertex at
the origin with vertical axis and focal distance |p|; the ellipse and
hyperbola are centered at the origin with the major (resp. transverse)
semi-axis a along the y-axis and a >= b > 0.  The offset curve at distance
r > 0 is the zero set of a single polynomial g(x, y) containing both parallel
lines, one on each side of the base conic.

All singular-point radicals are evaluated at RADICAL_DPS decimal digits
before rounding; discriminant decisions happen exactly on rationals.
"""

from __future__ import annotations

import threading
from dataclasses import dataclass
from fractions import Fraction
from itertools import product

import mpmath as mp

from . import cardano
from .errors import EliminationError, ParamError, RootPairingError
from .fixtures import general_offset_poly
from .groebner import Ideal, buchberger, elimination_ideal, reduce_basis
from .poly import (MultiPoly, block, content_normalize, gradient, lex,
                   substitute)

VARIETY_RING = ("y0", "x0", "x", "y")
PARABOLA_SYMBOLIC_RING = ("y0", "x0", "x", "y", "r", "p")
CENTRAL_SYMBOLIC_RING = ("y0", "x0", "x", "y", "a", "b", "r")

RADICAL_DPS = 60  # 50 guard digits past double precision

# mpmath's working precision is process-global; radical evaluation blocks
# serialize on this lock so concurrent singular-point calls stay safe
_RADICAL_LOCK = threading.RLock()

PARABOLA, ELLIPSE, HYPERBOLA = "parabola", "ellipse", "hyperbola"


def _frac(v) -> Fraction:
    try:
        return Fraction(v)
    except (TypeError, ValueError) as exc:
        raise ParamError(f"expected an exact rational, got {v!r}") from exc


@dataclass(frozen=True)
class ConicSpec:
    """A validated nondegenerate conic: Parabola{p}, Ellipse{a,b}, Hyperbola{a,b}."""

    kind: str
    params: tuple

    @classmethod
    def parabola(cls, p) -> "ConicSpec":
        p = _frac(p)
        if p == 0:
            raise ParamError("parabola needs p != 0")
        return cls(PARABOLA, (("p", p),))

    @classmethod
    def ellipse(cls, a, b) -> "ConicSpec":
        a, b = _frac(a), _frac(b)
        if not a > b > 0:
            raise ParamError("ellipse needs a > b > 0 (circles excluded)")
        return cls(ELLIPSE, (("a", a), ("b", b)))

    @classmethod
    def hyperbola(cls, a, b) -> "ConicSpec":
        # a == b (rectangular hyperbola) is allowed: the worked subcritical
        # reference case uses a = b = 1 and every formula stays valid there
        a, b = _frac(a), _frac(b)
        if not a >= b > 0:
            raise ParamError("hyperbola needs a >= b > 0")
        return cls(HYPERBOLA, (("a", a), ("b", b)))

    def param_map(self) -> dict:
        return dict(self.params)

    def __getattr__(self, name):
        d = dict(object.__getattribute__(self, "params"))
        if name in d:
            return d[name]
        raise AttributeError(name)

    def describe(self) -> str:
        inner = ", ".join(f"{k}={v}" for k, v in self.params)
        return f"{self.kind}({inner})"


def r_crit(conic: ConicSpec) -> Fraction:
    """Critical offset: the semi-latus rectum, 2|p| or b^2/a.

    Below it the two parallel lines are smooth; at it a cusp appears on the
    concave side; above it the singular point splits into three.
    """
    if conic.kind == PARABOLA:
        return 2 * abs(conic.p)
    return conic.b ** 2 / conic.a


def _generators(ring, kind, values=None):
    v = {name: MultiPoly.variable(ring, name) for name in ring}

    def sym(name):
        if values and name in values:
            return MultiPoly.const(ring, values[name])
        return v[name]

    y0, x0, x, y = v["y0"], v["x0"], v["x"], v["y"]
    r = sym("r")
    if kind == PARABOLA:
        p = sym("p")
        f1 = 4 * p * y0 - x0 ** 2
        f3 = 2 * x * p - 2 * x0 * p + x0 * y - x0 * y0
    else:
        a, b = sym("a"), sym("b")
        sign = 1 if kind == ELLIPSE else -1
        f1 = b ** 2 * y0 ** 2 + sign * a ** 2 * x0 ** 2 - a ** 2 * b ** 2
        f3 = b ** 2 * (x - x0) * y0 - sign * a ** 2 * (y - y0) * x0
    f2 = (y - y0) ** 2 + (x - x0) ** 2 - r ** 2
    return f1, f2, f3


def build_ideal(conic, r=None) -> Ideal:
    """The envelope variety ideal <f1, f2, f3>.

    With ``r`` given (exact rational > 0) the generators are specialized to
    the conic's parameters and cleared of denominators, in the ring
    (y0, x0, x, y).  With ``r=None`` the offset and the conic parameters stay
    symbolic ring variables; ``conic`` may then be a bare kind string.
    """
    kind = conic if isinstance(conic, str) else conic.kind
    if kind not in (PARABOLA, ELLIPSE, HYPERBOLA):
        raise ParamError(f"unknown conic kind {kind!r}")
    if r is None:
        ring = PARABOLA_SYMBOLIC_RING if kind == PARABOLA else CENTRAL_SYMBOLIC_RING
        gens = _generators(ring, kind)
    else:
        if not isinstance(conic, ConicSpec):
            raise ParamError("a ConicSpec is required for a specialized ideal")
        r = _frac(r)
        if r <= 0:
            raise ParamError("offset r must be positive")
        values = dict(conic.params)
        values["r"] = r
        gens = _generators(VARIETY_RING, kind, values)
        ring = VARIETY_RING
    return Ideal(ring, tuple(content_normalize(f) for f in gens))


@dataclass(frozen=True)
class OffsetCurve:
    """The implicit polynomial of both parallel lines at offset r."""

    conic: ConicSpec
    r: Fraction
    g: MultiPoly  # content-normalized, ring ("x", "y")
    source: str  # "closed-form" or "elimination"


def _restrict_xy(p: MultiPoly) -> MultiPoly:
    ix, iy = p.ring.index("x"), p.ring.index("y")
    terms = {}
    for m, c in p.terms.items():
        if any(e and i not in (ix, iy) for i, e in enumerate(m)):
            raise ValueError("polynomial not supported on x, y alone")
        terms[(m[ix], m[iy])] = c
    return MultiPoly(("x", "y"), terms)


def offset_poly_closed_form(conic: ConicSpec, r) -> OffsetCurve:
    """Specialize the stored general offset polynomial; exact and immediate."""
    r = _frac(r)
    if r <= 0:
        raise ParamError("offset r must be positive")
    values = dict(conic.params)
    values["r"] = r
    g = substitute(general_offset_poly(conic.kind), values)
    g = content_normalize(_restrict_xy(g))
    return OffsetCurve(conic=conic, r=r, g=g, source="closed-form")


def offset_poly_elimination(conic: ConicSpec, r, order: str = "block",
                            max_pairs: int = 200_000,
                            max_degree: int = 40) -> OffsetCurve:
    """Derive the offset polynomial by Groebner elimination of (y0, x0).

    ``order="block"`` uses the grevlex/grevlex elimination order (fast);
    ``order="lex"`` is the classic full lexicographic run.  Both agree up to
    a rational scalar with the closed form; the test suite enforces it.
    """
    ideal = build_ideal(conic, r)
    if order == "block":
        ordering = block(ideal.ring, 2)
    elif order == "lex":
        ordering = lex(ideal.ring)
    else:
        raise ParamError(f"unknown elimination order {order!r}")
    gb = reduce_basis(buchberger(ideal, ordering, max_pairs=max_pairs,
                                 max_degree=max_degree))
    kept = elimination_ideal(gb, {"x", "y"})
    if len(kept) != 1:
        raise EliminationError(
            f"expected one surviving generator, found {len(kept)}")
    g = content_normalize(_restrict_xy(kept[0]))
    return OffsetCurve(conic=conic, r=_frac(r), g=g, source="elimination")


# ---------------------------------------------------------------------------
# singular points
# ---------------------------------------------------------------------------

SUBCRITICAL, CRITICAL, SUPERCRITICAL = "subcritical", "critical", "supercritical"
VIRTUAL, ON_CURVE, SPLIT = "virtual", "on-curve", "split"


@dataclass(frozen=True)
class SingularPoint:
    x: object  # Fraction when exact, float otherwise
    y: object
    tag: str
    residual_grad: float

    def as_floats(self):
        return float(self.x), float(self.y)


@dataclass(frozen=True)
class SingularPointReport:
    conic: ConicSpec
    r: Fraction
    r_crit: Fraction
    regime: str
    points: tuple
    complex_count: int
    outside_reference_range: bool
    source: str


def _mpf(v) -> mp.mpf:
    if isinstance(v, Fraction):
        return mp.mpf(v.numerator) / v.denominator
    return mp.mpf(v)


def _eval_mp(poly: MultiPoly, coords: dict) -> mp.mpf:
    vals = [coords[name] for name in poly.ring]
    total = mp.mpf(0)
    for m, c in poly.terms.items():
        term = _mpf(c)
        for v, e in zip(vals, m):
            if e:
                term *= v ** e
        total += term
    return total


def _max_abs_coeff(poly: MultiPoly) -> mp.mpf:
    return max(abs(_mpf(c)) for c in poly.terms.values())


def _exact_or_float(v):
    if isinstance(v, Fraction):
        return v
    return float(v)


def _sqrt_exact(q: Fraction):
    """sqrt of a nonnegative rational: Fraction when perfect, else mpf."""
    s = cardano.fraction_sqrt(q)
    if s is not None:
        return s
    return mp.sqrt(_mpf(q))


def _neg(v):
    return -v


def _regime(r: Fraction, rc: Fraction) -> str:
    if r < rc:
        return SUBCRITICAL
    if r == rc:
        return CRITICAL
    return SUPERCRITICAL


def _parabola_split_xy(p: Fraction, r: Fraction):
    """The off-axis singular point (alpha, beta/gamma) for p > 0, r > 2p."""
    pf, rf = _mpf(p), _mpf(r)
    c1 = cardano.real_cbrt(pf * rf ** 2)
    c2 = c1 * c1
    t1 = mp.cbrt(2)
    t2 = t1 * t1
    alpha = mp.sqrt(c2 * rf ** 2 + 6 * rf ** 2 * pf ** 2 * t1
                    - 3 * c1 * pf * rf ** 2 * t2 - 4 * c2 * pf ** 2) / c1
    beta = pf * rf ** 2 * (
        22 * rf ** 6 * c2 + 1452 * rf ** 6 * pf ** 2 * t1
        + 7456 * pf ** 3 * rf ** 4 * t2 * c1 - 6560 * pf ** 2 * rf ** 4 * c2
        - 15488 * pf ** 4 * rf ** 4 * t1 - 39680 * pf ** 5 * rf ** 2 * t2 * c1
        + 37600 * pf ** 4 * rf ** 2 * c2 + 7936 * pf ** 8 * t1
        - 15872 * pf ** 7 * t2 * c1 + 45760 * pf ** 6 * rf ** 2 * t1
        - 33 * rf ** 8 * t1 - 5376 * pf ** 6 * c2)
    gamma = 2 * c1 * (
        8640 * pf ** 6 * rf ** 2 * c1 - 3968 * pf ** 7 * t1 * c2
        + 1984 * pf ** 7 * rf ** 2 * t2 - 3920 * rf ** 4 * pf ** 4 * c1
        - 9920 * pf ** 5 * rf ** 2 * t1 * c2 + 4960 * pf ** 5 * rf ** 4 * t2
        + 484 * rf ** 6 * pf ** 2 * c1 + 1864 * pf ** 3 * rf ** 4 * t1 * c2
        - 932 * pf ** 3 * rf ** 6 * t2 - 11 * rf ** 8 * c1)
    return alpha, beta / gamma


def _ellipse_split_xy(a: Fraction, b: Fraction, r: Fraction):
    af, bf, rf = _mpf(a), _mpf(b), _mpf(r)
    w = mp.cbrt(af * bf * rf)
    w2 = w * w
    delta = (-3 * bf ** 2 * af ** 2 * rf ** 2 + rf ** 2 * af ** 2 * w2
             + 3 * w * bf ** 3 * af * rf - bf ** 4 * w2)
    eps = (-af ** 4 * w2 + 3 * w * bf * rf * af ** 3
           - 3 * bf ** 2 * af ** 2 * rf ** 2 + w2 * bf ** 2 * rf ** 2)
    x2 = -delta / ((bf ** 2 - af ** 2) * w2)
    y = -mp.sqrt((bf ** 2 - af ** 2) * eps) / (w * (bf ** 2 - af ** 2))
    # radical rounding can leave x^2 at -1e-60 exactly at the critical offset
    return mp.sqrt(max(x2, mp.mpf(0))), y


def _hyperbola_split_xy(a: Fraction, b: Fraction, r: Fraction):
    af, bf, rf = _mpf(a), _mpf(b), _mpf(r)
    u = mp.cbrt(rf * bf)
    u2 = u * u
    a13 = mp.cbrt(af)
    a43 = af * a13
    a23 = a13 * a13
    a83 = af ** 2 * a23
    deltah = (3 * bf ** 2 * a43 * rf ** 2 - rf ** 2 * af ** 2 * u2
              - 3 * a23 * u * bf ** 3 * rf + bf ** 4 * u2)
    epsh = (af ** 4 * u + bf ** 2 * rf ** 2 * u + 3 * bf * a43 * rf * u2
            + 3 * a83 * bf * rf)
    x2 = -deltah / ((af ** 2 + bf ** 2) * u2)
    y_neg = -mp.sqrt(u * (af ** 2 + bf ** 2) * epsh) / (u * (af ** 2 + bf ** 2))
    # radical rounding can leave x^2 at -1e-60 exactly at the critical offset
    return mp.sqrt(max(x2, mp.mpf(0))), -y_neg  # positive-y magnitude


def _finish_report(conic, r, rc, regime, raw_points, complex_count, outside, source):
    """Attach gradient residuals, round, dedupe, and freeze the report."""
    g = offset_poly_closed_form(conic, r).g
    gx, gy = gradient(g, ["x", "y"])
    scale = max(_max_abs_coeff(q) for q in (g, gx, gy))
    points = []
    seen = []
    for (xv, yv, tag) in raw_points:
        coords = {"x": _mpf(xv), "y": _mpf(yv)}
        key = (coords["x"], coords["y"])
        if any(abs(key[0] - s[0]) < mp.mpf("1e-40") and
               abs(key[1] - s[1]) < mp.mpf("1e-40") for s in seen):
            continue
        seen.append(key)
        res = mp.sqrt(_eval_mp(gx, coords) ** 2 + _eval_mp(gy, coords) ** 2) / scale
        points.append(SingularPoint(x=_exact_or_float(xv), y=_exact_or_float(yv),
                                    tag=tag, residual_grad=float(res)))
    points.sort(key=lambda s: (float(s.y), float(s.x)))
    return SingularPointReport(conic=conic, r=r, r_crit=rc, regime=regime,
                               points=tuple(points), complex_count=complex_count,
                               outside_reference_range=outside, source=source)


def singular_points(conic: ConicSpec, r) -> SingularPointReport:
    """Singular points of the offset variety from the closed-form catalogue.

    Points are reported with exact rational coordinates where the closed form
    is rational and 50-guard-digit float rounding otherwise; every point
    carries its scaled gradient residual.
    """
    r = _frac(r)
    if r <= 0:
        raise ParamError("offset r must be positive")
    rc = r_crit(conic)
    regime = _regime(r, rc)
    axis_tag = {SUBCRITICAL: VIRTUAL, CRITICAL: ON_CURVE, SUPERCRITICAL: ON_CURVE}[regime]
    raw = []
    outside = False
    with _RADICAL_LOCK, mp.workdps(RADICAL_DPS):
        if conic.kind == PARABOLA:
            p = conic.p
            w = abs(p)
            flip = p < 0
            y1 = w + r * r / (4 * w)
            raw.append((Fraction(0), -y1 if flip else y1, axis_tag))
            complex_count = 2
            if regime == SUPERCRITICAL:
                alpha, ysplit = _parabola_split_xy(w, r)
                if flip:
                    ysplit = -ysplit
                raw.append((alpha, ysplit, SPLIT))
                raw.append((-alpha, ysplit, SPLIT))
                complex_count = 0
        else:
            a, b = conic.a, conic.b
            outside = not (a > b > r)
            complex_count = 0
            if conic.kind == ELLIPSE:
                t12 = (a * a - b * b) * (b * b - r * r) / (b * b)
                t34 = (a * a - b * b) * (r * r - a * a) / (a * a)
            else:
                t12 = (a * a + b * b) * (r * r + b * b) / (b * b)
                t34 = (a * a + b * b) * (r * r - a * a) / (a * a)
            if t12 >= 0:
                yv = _sqrt_exact(t12)
                if yv != 0:
                    raw.append((Fraction(0), yv, axis_tag))
                    raw.append((Fraction(0), _neg(yv), axis_tag))
                else:
                    raw.append((Fraction(0), Fraction(0), axis_tag))
            else:
                complex_count += 2
            if t34 >= 0:
                xv = _sqrt_exact(t34)
                raw.append((xv, Fraction(0), SPLIT))
                if xv != 0:
                    raw.append((_neg(xv), Fraction(0), SPLIT))
            else:
                complex_count += 2
            if regime == SUPERCRITICAL:
                split = (_ellipse_split_xy if conic.kind == ELLIPSE
                         else _hyperbola_split_xy)
                xs, ys = split(a, b, r)
                for sx, sy in product((xs, -xs), (ys, -ys)):
                    raw.append((sx, sy, SPLIT))
            elif regime == SUBCRITICAL:
                complex_count += 4
        return _finish_report(conic, r, rc, regime, raw, complex_count,
                              outside, "closed-form")


def _newton_drift(g: MultiPoly, x0, y0, iters: int = 30):
    """Total displacement of Newton iteration on (g_x, g_y) from (x0, y0).

    Returns None when the Hessian degenerates before settling.
    """
    gx, gy = gradient(g, ["x", "y"])
    gxx, gxy = gradient(gx, ["x", "y"])
    _, gyy = gradient(gy, ["x", "y"])
    x, y = x0, y0
    for _ in range(iters):
        coords = {"x": x, "y": y}
        fx, fy = _eval_mp(gx, coords), _eval_mp(gy, coords)
        a11, a12 = _eval_mp(gxx, coords), _eval_mp(gxy, coords)
        a22 = _eval_mp(gyy, coords)
        det = a11 * a22 - a12 * a12
        if det == 0:
            return None
        dx = (-fx * a22 + fy * a12) / det
        dy = (-fy * a11 + fx * a12) / det
        x, y = x + dx, y + dy
        if abs(dx) + abs(dy) < mp.mpf("1e-45"):
            break
    return abs(x - x0) + abs(y - y0)


def _univariate_along(polys, keep: str, drop: str, max_pairs, max_degree):
    """Eliminate one coordinate from the singular system; return the
    univariate generator's ascending coefficient list."""
    ring = (drop, keep)

    def remap(p):
        iy, ix = p.ring.index(drop), p.ring.index(keep)
        return MultiPoly(ring, {(m[iy], m[ix]): c for m, c in p.terms.items()})

    ideal = Ideal(ring, tuple(remap(q) for q in polys))
    gb = reduce_basis(buchberger(ideal, lex(ring), max_pairs=max_pairs,
                                 max_degree=max_degree))
    kept = elimination_ideal(gb, {keep})
    if len(kept) != 1:
        raise EliminationError(
            f"expected one univariate generator in {keep}, got {len(kept)}")
    uni = kept[0]
    deg = uni.degree()
    cs = [Fraction(0)] * (deg + 1)
    for m, c in uni.terms.items():
        cs[m[1]] = c
    return cs


def singular_points_via_elimination(conic: ConicSpec, r,
                                    max_pairs: int = 200_000,
                                    max_degree: int = 200) -> SingularPointReport:
    """Independent singular-point route: eliminate each coordinate from
    <grad g, g>, solve the resulting even/cubic factors exactly (Cardano),
    and pair the candidate coordinates by residual filtering.
    """
    r = _frac(r)
    if r <= 0:
        raise ParamError("offset r must be positive")
    g = offset_poly_closed_form(conic, r).g
    gx, gy = (content_normalize(q) for q in gradient(g, ["x", "y"]))
    system = (g, gx, gy)
    rc = r_crit(conic)
    regime = _regime(r, rc)
    axis_tag = {SUBCRITICAL: VIRTUAL, CRITICAL: ON_CURVE, SUPERCRITICAL: ON_CURVE}[regime]
    with _RADICAL_LOCK, mp.workdps(RADICAL_DPS):
        xs = cardano.real_roots_exact(
            _univariate_along(system, "x", "y", max_pairs, max_degree))
        ys = cardano.real_roots_exact(
            _univariate_along(system, "y", "x", max_pairs, max_degree))
        scale = max(_max_abs_coeff(q) for q in system)
        accept = mp.mpf("1e-35")
        reject = mp.mpf("1e-12")
        raw = []
        for xv, yv in product(xs, ys):
            coords = {"x": _mpf(xv), "y": _mpf(yv)}
            res = max(abs(_eval_mp(q, coords)) for q in system) / scale
            if res < accept:
                tag = axis_tag if coords["x"] == 0 else SPLIT
                raw.append((xv, yv, tag))
            elif res < reject:
                # gray zone: a true singular point is a fixed point of Newton
                # on the gradient system; a cross-pairing of coordinates from
                # two different points migrates away
                moved = _newton_drift(g, coords["x"], coords["y"])
                if moved is None:
                    raise RootPairingError(
                        f"candidate ({float(xv)}, {float(yv)}) has borderline "
                        f"residual {float(res):.2e} and Newton did not settle")
                if moved < mp.mpf("1e-30"):
                    tag = axis_tag if coords["x"] == 0 else SPLIT
                    raw.append((xv, yv, tag))
        if not raw:
            raise RootPairingError("no candidate survived residual filtering")
        # complex companions are whatever the closed-form catalogue says
        complex_count = singular_points(conic, r).complex_count
        outside = (conic.kind != PARABOLA
                   and not (conic.a > conic.b > r))
        return _finish_report(conic, r, rc, regime, raw, complex_count,
                              outside, "elimination")
