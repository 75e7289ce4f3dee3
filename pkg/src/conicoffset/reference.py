"""Reference catalogue for the verification suite.

Nine canonical worked cases (three offset regimes per conic kind), each
with the expected implicit polynomial (up to a rational scalar) and the
expected singular points as exact radical expressions, plus the expected
reduced-basis data for the fully symbolic runs and the layered-mesh case.

Radical expressions are evaluated with mpmath at the caller's precision
via :func:`eval_radical`.  Pass an id from 1 to 9 to :func:`case`.
"""

import mpmath as mp

__all__ = ["REFERENCE_CASES", "SYMBOLIC_BASIS_PARABOLA", "SYMBOLIC_BASIS_CENTRAL",
           "MESH_CASE", "ELLIPSE_SINGULAR_SEXTIC_X", "ELLIPSE_SINGULAR_SEXTIC_Y",
           "case", "eval_radical"]


def eval_radical(expr: str, dps: int = 60) -> mp.mpf:
    """Evaluate a radical expression string at `dps` decimal digits."""
    with mp.workdps(dps):
        return mp.mpf(eval(expr, {"__builtins__": {}},
                           {"sqrt": mp.sqrt, "cbrt": mp.cbrt}))


REFERENCE_CASES = {
    1: {
        "kind": "parabola",
        "params": {"p": "1/3"},
        "r": "1/4",
        "regime": "subcritical",
        "singular_points": (
            ("0",
             "73/192"),
        ),
        "offset_poly": (
            "331776*x^6 + 331776*x^4*y^2 - 1105920*x^4*y - 884736*x^2*y^3 - 25344*x^4 +"
            "1138176*x^2*y^2 + 589824*y^4 - 84480*x^2*y - 448512*y^3 - 42192*x^2 + 48400*y^2"
            "+ 28032*y - 5329"
    ),
    },
    2: {
        "kind": "parabola",
        "params": {"p": "1/3"},
        "r": "2/3",
        "regime": "critical",
        "singular_points": (
            ("0",
             "2/3"),
        ),
        "offset_poly": (
            "729*x^6 + 729*x^4*y^2 - 2430*x^4*y - 1944*x^2*y^3 - 891*x^4 + 1944*x^2*y^2 +"
            "1296*y^4 - 1728*y^3 - 288*x^2 + 768*y - 256"
    ),
    },
    3: {
        "kind": "parabola",
        "params": {"p": "1/3"},
        "r": "3/2",
        "regime": "supercritical",
        "singular_points": (
            ("0",
             "97/48"),
            ("sqrt(65 + 36*cbrt(12) - 27*cbrt(12)**2)/6",
             "3*cbrt(12)/4 - 1/3"),
            ("-sqrt(65 + 36*cbrt(12) - 27*cbrt(12)**2)/6",
             "3*cbrt(12)/4 - 1/3"),
        ),
        "offset_poly": (
            "5184*x^6 + 5184*x^4*y^2 - 17280*x^4*y - 13824*x^2*y^3 - 34416*x^4 - 4896*x^2*y^2"
            "+ 9216*y^4 + 6240*x^2*y - 37248*y^3 + 52812*x^2 + 16900*y^2 + 83808*y - 84681"
    ),
    },
    4: {
        "kind": "ellipse",
        "params": {"a": "3", "b": "3/2"},
        "r": "1/2",
        "regime": "subcritical",
        "singular_points": (
            ("0",
             "sqrt(6)"),
            ("0",
             "-sqrt(6)"),
        ),
        "offset_poly": (
            "256*x^8 + 640*x^6*y^2 + 528*x^4*y^4 + 160*x^2*y^6 + 16*y^8 + 2080*x^6 -"
            "4680*x^4*y^2 - 3360*x^2*y^4 - 488*y^6 - 4751*x^4 + 21410*x^2*y^2 + 5353*y^4 -"
            "41685*x^2 - 25356*y^2 + 44100"
    ),
    },
    5: {
        "kind": "ellipse",
        "params": {"a": "3", "b": "3/2"},
        "r": "3/4",
        "regime": "critical",
        "singular_points": (
            ("0",
             "9/4"),
            ("0",
             "-9/4"),
        ),
        "offset_poly": (
            "1048576*x^8 + 2621440*x^6*y^2 + 2162688*x^4*y^4 + 655360*x^2*y^6 + 65536*y^8 +"
            "7372800*x^6 - 21012480*x^4*y^2 - 14376960*x^2*y^4 - 1916928*y^6 - 29673216*x^4 +"
            "95178240*x^2*y^2 + 19035648*y^4 - 198404640*x^2 - 79361856*y^2 + 119574225"
    ),
    },
    6: {
        "kind": "ellipse",
        "params": {"a": "3", "b": "3/2"},
        "r": "4/3",
        "regime": "supercritical",
        "singular_points": (
            ("0",
             "sqrt(51)/6"),
            ("0",
             "-sqrt(51)/6"),
            ("sqrt(525 + 324*cbrt(6)**2 - 864*cbrt(6))/18",
             "2*sqrt(231 - 81*cbrt(6)**2 + 54*cbrt(6))/9"),
            ("-sqrt(525 + 324*cbrt(6)**2 - 864*cbrt(6))/18",
             "2*sqrt(231 - 81*cbrt(6)**2 + 54*cbrt(6))/9"),
            ("sqrt(525 + 324*cbrt(6)**2 - 864*cbrt(6))/18",
             "-2*sqrt(231 - 81*cbrt(6)**2 + 54*cbrt(6))/9"),
            ("-sqrt(525 + 324*cbrt(6)**2 - 864*cbrt(6))/18",
             "-2*sqrt(231 - 81*cbrt(6)**2 + 54*cbrt(6))/9"),
        ),
        "offset_poly": (
            "186624*x^8 + 466560*x^6*y^2 + 384912*x^4*y^4 + 116640*x^2*y^6 + 11664*y^8 +"
            "518400*x^6 - 5015520*x^4*y^2 - 2984040*x^2*y^4 - 284472*y^6 - 10769184*x^4 +"
            "23461560*x^2*y^2 + 1344177*y^4 - 43658160*x^2 - 2228394*y^2 + 1221025"
    ),
    },
    7: {
        "kind": "hyperbola",
        "params": {"a": "1", "b": "1"},
        "r": "1/2",
        "regime": "subcritical",
        "singular_points": (
            ("0",
             "sqrt(10)/2"),
            ("0",
             "-sqrt(10)/2"),
        ),
        "offset_poly": (
            "64*x^8 - 128*x^4*y^4 + 64*y^8 + 288*x^6 - 800*x^4*y^2 + 480*x^2*y^4 - 480*y^6 +"
            "532*x^4 - 1320*x^2*y^2 + 1236*y^4 + 516*x^2 - 1180*y^2 + 225"
    ),
    },
    8: {
        "kind": "hyperbola",
        "params": {"a": "3/2", "b": "1"},
        "r": "2/3",
        "regime": "critical",
        "singular_points": (
            ("0",
             "13/6"),
            ("0",
             "-13/6"),
        ),
        "offset_poly": (
            "8503056*x^8 + 9447840*x^6*y^2 - 4933872*x^4*y^4 - 4199040*x^2*y^6 + 1679616*y^8"
            "+ 53800200*x^6 - 105471720*x^4*y^2 + 46539360*x^2*y^4 - 24820992*y^6 +"
            "124857369*x^4 - 159339960*x^2*y^2 + 127471968*y^4 + 156799890*x^2 -"
            "250879824*y^2 + 120670225"
    ),
    },
    9: {
        "kind": "hyperbola",
        "params": {"a": "3/2", "b": "1"},
        "r": "4/3",
        "regime": "supercritical",
        "singular_points": (
            ("0",
             "5*sqrt(13)/6"),
            ("0",
             "-5*sqrt(13)/6"),
            ("2*sqrt(39 - 78*cbrt(2) + 39*cbrt(2)**2)/13",
             "sqrt(12805 + 11232*cbrt(2) + 12636*cbrt(2)**2)/78"),
            ("-2*sqrt(39 - 78*cbrt(2) + 39*cbrt(2)**2)/13",
             "sqrt(12805 + 11232*cbrt(2) + 12636*cbrt(2)**2)/78"),
            ("2*sqrt(39 - 78*cbrt(2) + 39*cbrt(2)**2)/13",
             "-sqrt(12805 + 11232*cbrt(2) + 12636*cbrt(2)**2)/78"),
            ("-2*sqrt(39 - 78*cbrt(2) + 39*cbrt(2)**2)/13",
             "-sqrt(12805 + 11232*cbrt(2) + 12636*cbrt(2)**2)/78"),
        ),
        "offset_poly": (
            "8503056*x^8 + 9447840*x^6*y^2 - 4933872*x^4*y^4 - 4199040*x^2*y^6 + 1679616*y^8"
            "- 1627128*x^6 - 188052840*x^4*y^2 + 349920*x^2*y^4 - 43856640*y^6 + 51521913*x^4"
            "+ 264529800*x^2*y^2 + 381560544*y^4 + 83351034*x^2 - 1109487600*y^2 + 30525625"
    ),
    },
}

# expected shapes of the fully symbolic reduced bases
SYMBOLIC_BASIS_PARABOLA = {
    "ring": ("y0", "x0", "x", "y", "r", "p"),
    "size": 14,
    "degree_multiset": (7, 7, 6, 6, 5, 5, 4, 4, 3, 3, 3, 2, 2, 2),
}
SYMBOLIC_BASIS_CENTRAL = {
    "ring": ("y0", "x0", "x", "y", "a", "b", "r"),
    "size": 15,
    "degree_multiset": (16, 16, 14, 12, 11, 11, 10, 10, 9, 8, 7, 7, 5, 4, 2),
}

# reference displays for the symbolic reduced bases (stretch comparison)
SYMBOLIC_BASIS_PARABOLA_DISPLAY = (
    ("-x^6*p - x^4*y^2*p + 3*x^4*r^2*p + 2*x^2*y^2*r^2*p - 3*x^2*r^4*p - y^2*r^4*p +"
     "r^6*p + 10*x^4*y*p^2 + 8*x^2*y^3*p^2 - 2*x^2*y*r^2*p^2 + 8*y^3*r^2*p^2 -"
     "8*y*r^4*p^2 - x^4*p^3 - 32*x^2*y^2*p^3 - 16*y^4*p^3 + 20*x^2*r^2*p^3 +"
     "8*y^2*r^2*p^3 + 8*r^4*p^3 + 8*x^2*y*p^4 + 32*y^3*p^4 - 32*y*r^2*p^4 - 16*y^2*p^5"
     "+ 16*r^2*p^5"),
    ("2*x^5*y*p + 2*x^3*y^3*p - 4*x^3*y*r^2*p - 4*x0*y^3*r^2*p - 2*x*y^3*r^2*p +"
     "2*x*y*r^4*p + 14*x^5*p^2 - 14*x^3*y^2*p^2 + 16*x0*y^4*p^2 - 24*x*y^4*p^2 -"
     "46*x^3*r^2*p^2 - 12*x0*y^2*r^2*p^2 - 16*x*y^2*r^2*p^2 + 27*x0*r^4*p^2 +"
     "32*x*r^4*p^2 - 114*x^3*y*p^3 + 32*x0*y^3*p^3 - 8*x*y^3*p^3 - 120*x0*y*r^2*p^3 +"
     "54*x*y*r^2*p^3 - 2*x^3*p^4 + 232*x*y^2*p^4 + 104*x0*r^2*p^4 - 316*x*r^2*p^4 -"
     "32*x0*y*p^5 + 40*x*y*p^5 - 16*x0*p^6 + 16*x*p^6"),
    ("2*x^4*y*p - 4*x0*x*y^3*p + 2*x^2*y^3*p - 4*x^2*y*r^2*p - 2*y^3*r^2*p + 2*y*r^4*p"
     "- 4*x^4*p^2 - 12*x0*x*y^2*p^2 - 8*x^2*y^2*p^2 + 8*y^4*p^2 + 27*x0*x*r^2*p^2 -"
     "10*x^2*r^2*p^2 - 22*y^2*r^2*p^2 + 14*r^4*p^2 - 12*x0*x*y*p^3 + 42*x^2*y*p^3 +"
     "48*y^3*p^3 - 48*y*r^2*p^3 - 4*x0*x*p^4 + 4*x^2*p^4 - 56*y^2*p^4 + 56*r^2*p^4"),
    ("2*x^5*p + 2*x^3*y^2*p - 3*x0*x^2*r^2*p - 4*x^3*r^2*p - 4*x0*y^2*r^2*p -"
     "2*x*y^2*r^2*p + 3*x0*r^4*p + 2*x*r^4*p - 28*x^3*y*p^2 + 16*x0*y^3*p^2 -"
     "24*x*y^3*p^2 + 4*x0*y*r^2*p^2 + 22*x*y*r^2*p^2 - 96*x0*x^2*p^3 + 82*x^3*p^3 -"
     "80*x0*y^2*p^3 + 160*x*y^2*p^3 - 16*x0*r^2*p^3 - 124*x*r^2*p^3 + 176*x0*y*p^4 -"
     "120*x*y*p^4 - 112*x0*p^5 + 112*x*p^5"),
    ("x0*x^2*y - x0*y*r^2 + 7*x0*x^2*p - 6*x^3*p + 4*x0*y^2*p + 8*x*y^2*p + 2*x0*r^2*p"
     "+ 6*x*r^2*p - 12*x0*y*p^2 + 8*x*y*p^2 + 8*x0*p^3 - 8*x*p^3"),
    ("-3*x0*x^3*p + 2*x^4*p - 4*x0*x*y^2*p + 2*x^2*y^2*p + 3*x0*x*r^2*p - 4*x^2*r^2*p"
     "- 2*y^2*r^2*p + 2*r^4*p + 4*x0*x*y*p^2 + 2*x^2*y*p^2 + 8*y^3*p^2 - 8*y*r^2*p^2 -"
     "4*x0*x*p^3 + 4*x^2*p^3 - 8*y^2*p^3 + 8*r^2*p^3"),
    ("x0*x^4 - 2*x0*x^2*r^2 + x0*r^4 - 2*x^3*y*p - 12*x0*y*r^2*p + 2*x*y*r^2*p +"
     "44*x0*x^2*p^2 - 38*x^3*p^2 + 32*x0*y^2*p^2 - 40*x*y^2*p^2 + 16*x0*r^2*p^2 +"
     "20*x*r^2*p^2 - 80*x0*y*p^3 + 56*x*y*p^3 + 48*x0*p^4 - 48*x*p^4"),
    ("-2*x0*x^3 + 3*x0^2*r^2 + 2*x0*x*r^2 + 16*x0*x*y*p + 4*x^2*y*p - 12*x0^2*p^2 +"
     "32*x0*x*p^2 - 20*x^2*p^2 - 48*y^2*p^2 + 48*r^2*p^2"),
    ("x0^2*y - 2*x0^2*p + 6*x0*x*p - 4*x^2*p - 4*y^2*p + 4*r^2*p"),
    ("3*x0^2*x - 2*x0*x^2 + 2*x0*r^2 - 8*x0*y*p + 4*x*y*p + 8*x0*p^2 - 8*x*p^2"),
    ("x0^3 - 4*x0*y*p + 8*x0*p^2 - 8*x*p^2"),
    ("-x0^2 + 4*y0*p"),
    ("y0*x0 - x0*y + 2*x0*p - 2*x*p"),
    ("y0^2 + x0^2 - 2*x0*x + x^2 - 2*y0*y + y^2 - r^2"),
)

SYMBOLIC_BASIS_ELLIPSE_DISPLAY = (
    ("x^8*a^6*b^2 + 2*x^6*y^2*a^6*b^2 + x^4*y^4*a^6*b^2 + 2*x^6*a^8*b^2 -"
     "2*x^4*y^2*a^8*b^2 + x^4*a^10*b^2 + 2*x^6*y^2*a^4*b^4 + 4*x^4*y^4*a^4*b^4 +"
     "2*x^2*y^6*a^4*b^4 - 4*x^6*a^6*b^4 + 2*x^4*y^2*a^6*b^4 - 6*x^2*y^4*a^6*b^4 -"
     "6*x^4*a^8*b^4 + 6*x^2*y^2*a^8*b^4 - 2*x^2*a^10*b^4 + x^4*y^4*a^2*b^6 +"
     "2*x^2*y^6*a^2*b^6 + y^8*a^2*b^6 - 6*x^4*y^2*a^4*b^6 + 2*x^2*y^4*a^4*b^6 -"
     "4*y^6*a^4*b^6 + 6*x^4*a^6*b^6 - 10*x^2*y^2*a^6*b^6 + 6*y^4*a^6*b^6 +"
     "6*x^2*a^8*b^6 - 4*y^2*a^8*b^6 + a^10*b^6 - 2*x^2*y^4*a^2*b^8 + 2*y^6*a^2*b^8 +"
     "6*x^2*y^2*a^4*b^8 - 6*y^4*a^4*b^8 - 4*x^2*a^6*b^8 + 6*y^2*a^6*b^8 - 2*a^8*b^8 +"
     "y^4*a^2*b^10 - 2*y^2*a^4*b^10 + a^6*b^10 - 4*x^6*a^6*b^2*r^2 -"
     "6*x^4*y^2*a^6*b^2*r^2 - 2*x^2*y^4*a^6*b^2*r^2 - 6*x^4*a^8*b^2*r^2 +"
     "4*x^2*y^2*a^8*b^2*r^2 - 2*x^2*a^10*b^2*r^2 + 2*x^6*a^4*b^4*r^2 +"
     "2*x^4*y^2*a^4*b^4*r^2 + 2*x^2*y^4*a^4*b^4*r^2 + 2*y^6*a^4*b^4*r^2 +"
     "10*x^4*a^6*b^4*r^2 - 6*x^2*y^2*a^6*b^4*r^2 - 6*y^4*a^6*b^4*r^2 +"
     "4*x^2*a^8*b^4*r^2 + 6*y^2*a^8*b^4*r^2 - 2*a^10*b^4*r^2 - 2*x^4*y^2*a^2*b^6*r^2 -"
     "6*x^2*y^4*a^2*b^6*r^2 - 4*y^6*a^2*b^6*r^2 - 6*x^4*a^4*b^6*r^2 -"
     "6*x^2*y^2*a^4*b^6*r^2 + 10*y^4*a^4*b^6*r^2 - 8*x^2*a^6*b^6*r^2 -"
     "8*y^2*a^6*b^6*r^2 + 2*a^8*b^6*r^2 + 4*x^2*y^2*a^2*b^8*r^2 - 6*y^4*a^2*b^8*r^2 +"
     "6*x^2*a^4*b^8*r^2 + 4*y^2*a^4*b^8*r^2 + 2*a^6*b^8*r^2 - 2*y^2*a^2*b^10*r^2 -"
     "2*a^4*b^10*r^2 + 6*x^4*a^6*b^2*r^4 + 6*x^2*y^2*a^6*b^2*r^4 + y^4*a^6*b^2*r^4 +"
     "6*x^2*a^8*b^2*r^4 - 2*y^2*a^8*b^2*r^4 + a^10*b^2*r^4 - 6*x^4*a^4*b^4*r^4 -"
     "10*x^2*y^2*a^4*b^4*r^4 - 6*y^4*a^4*b^4*r^4 - 8*x^2*a^6*b^4*r^4 +"
     "4*y^2*a^6*b^4*r^4 + 2*a^8*b^4*r^4 + x^4*a^2*b^6*r^4 + 6*x^2*y^2*a^2*b^6*r^4 +"
     "6*y^4*a^2*b^6*r^4 + 4*x^2*a^4*b^6*r^4 - 8*y^2*a^4*b^6*r^4 - 6*a^6*b^6*r^4 -"
     "2*x^2*a^2*b^8*r^4 + 6*y^2*a^2*b^8*r^4 + 2*a^4*b^8*r^4 + a^2*b^10*r^4 -"
     "4*x^2*a^6*b^2*r^6 - 2*y^2*a^6*b^2*r^6 - 2*a^8*b^2*r^6 + 6*x^2*a^4*b^4*r^6 +"
     "6*y^2*a^4*b^4*r^6 + 2*a^6*b^4*r^6 - 2*x^2*a^2*b^6*r^6 - 4*y^2*a^2*b^6*r^6 +"
     "2*a^4*b^6*r^6 - 2*a^2*b^8*r^6 + a^6*b^2*r^8 - 2*a^4*b^4*r^8 + a^2*b^6*r^8"),
    ("-y0*x^2*a^2*b^2 + 3*x0*x*y*a^2*b^2 - x^2*y*a^2*b^2 + y0*y^2*a^2*b^2 -"
     "y^3*a^2*b^2 - y0*a^4*b^2 + y*a^4*b^2 + y0*y^2*b^4 + y0*a^2*b^4 - 2*y*a^2*b^4 +"
     "y0*a^2*b^2*r^2 + y*a^2*b^2*r^2 - y0*b^4*r^2"),
    ("x0*x^2*a^4 + x0*x^2*a^2*b^2 - x^3*a^2*b^2 + 3*y0*x*y*a^2*b^2 - x0*y^2*a^2*b^2 -"
     "x*y^2*a^2*b^2 + x0*a^4*b^2 - 2*x*a^4*b^2 - x0*a^2*b^4 + x*a^2*b^4 - x0*a^4*r^2 +"
     "x0*a^2*b^2*r^2 + x*a^2*b^2*r^2"),
    ("3*x0*x^3*a^2*b^2 - 3*x^4*a^2*b^2 + 4*y0*x^2*y*a^2*b^2 - 5*x^2*y^2*a^2*b^2 +"
     "2*y0*y^3*a^2*b^2 - 2*y^4*a^2*b^2 + 6*x0*x*a^4*b^2 - 3*x^2*a^4*b^2 -"
     "2*y0*y*a^4*b^2 + 2*y^2*a^4*b^2 - y0*y^3*b^4 - 3*x0*x*a^2*b^4 + 3*x^2*a^2*b^4 +"
     "5*y0*y*a^2*b^4 - y^2*a^2*b^4 - 3*a^4*b^4 - 3*x0*x*a^2*b^2*r^2 +"
     "6*x^2*a^2*b^2*r^2 - 4*y0*y*a^2*b^2*r^2 + 5*y^2*a^2*b^2*r^2 + 3*a^4*b^2*r^2 +"
     "y0*y*b^4*r^2 + 3*a^2*b^4*r^2 - 3*a^2*b^2*r^4"),
    ("-y0*x^3*a^4*b^2 - x^3*y*a^4*b^2 + y0*x*y^2*a^4*b^2 - x*y^3*a^4*b^2 -"
     "y0*x*a^6*b^2 + x*y*a^6*b^2 - y0*x^3*a^2*b^4 + 2*x^3*y*a^2*b^4 -"
     "7*y0*x*y^2*a^2*b^4 + 3*x0*y^3*a^2*b^4 + 2*x*y^3*a^2*b^4 - 3*x0*y*a^4*b^4 +"
     "5*x*y*a^4*b^4 + y0*x*y^2*b^6 + y0*x*a^2*b^6 + 3*x0*y*a^2*b^6 - 5*x*y*a^2*b^6 +"
     "y0*x*a^4*b^2*r^2 + 3*x0*y*a^4*b^2*r^2 + x*y*a^4*b^2*r^2 - 3*x0*y*a^2*b^4*r^2 -"
     "2*x*y*a^2*b^4*r^2 - y0*x*b^6*r^2"),
    ("-3*x^4*a^4*b^2 + 4*y0*x^2*y*a^4*b^2 - 5*x^2*y^2*a^4*b^2 + 2*y0*y^3*a^4*b^2 -"
     "2*y^4*a^4*b^2 + 6*x0*x*a^6*b^2 - 3*x^2*a^6*b^2 - 2*y0*y*a^6*b^2 + 2*y^2*a^6*b^2"
     "- 4*y0*x^2*y*a^2*b^4 - x^2*y^2*a^2*b^4 - y^4*a^2*b^4 + 6*x^2*a^4*b^4 +"
     "4*y0*y*a^4*b^4 - 3*a^6*b^4 - 2*y0*y^3*b^6 + 4*y0*y*a^2*b^6 + y^2*a^2*b^6 -"
     "3*a^4*b^6 + 6*x^2*a^4*b^2*r^2 - 4*y0*y*a^4*b^2*r^2 + 5*y^2*a^4*b^2*r^2 +"
     "3*a^6*b^2*r^2 - 6*x0*x*a^2*b^4*r^2 + 3*x^2*a^2*b^4*r^2 - 4*y0*y*a^2*b^4*r^2 +"
     "4*y^2*a^2*b^4*r^2 + 6*a^4*b^4*r^2 + 2*y0*y*b^6*r^2 + 3*a^2*b^6*r^2 -"
     "3*a^4*b^2*r^4 - 3*a^2*b^4*r^4"),
    ("-3*x^5*a^4*b^2 + 4*y0*x^3*y*a^4*b^2 - 5*x^3*y^2*a^4*b^2 + 2*y0*x*y^3*a^4*b^2 -"
     "2*x*y^4*a^4*b^2 - 3*x^3*a^6*b^2 - 2*y0*x*y*a^6*b^2 + 2*x*y^2*a^6*b^2 -"
     "4*y0*x^3*y*a^2*b^4 - x^3*y^2*a^2*b^4 - x*y^4*a^2*b^4 + 12*x^3*a^4*b^4 -"
     "14*y0*x*y*a^4*b^4 + 6*x0*y^2*a^4*b^4 + 6*x*y^2*a^4*b^4 - 6*x0*a^6*b^4 +"
     "9*x*a^6*b^4 - 2*y0*x*y^3*b^6 + 6*x0*x^2*a^2*b^6 - 6*x^3*a^2*b^6 +"
     "22*y0*x*y*a^2*b^6 - 6*x0*y^2*a^2*b^6 - 5*x*y^2*a^2*b^6 + 12*x0*a^4*b^6 -"
     "21*x*a^4*b^6 - 6*x0*a^2*b^8 + 6*x*a^2*b^8 + 6*x^3*a^4*b^2*r^2 -"
     "4*y0*x*y*a^4*b^2*r^2 + 5*x*y^2*a^4*b^2*r^2 + 6*x0*a^6*b^2*r^2 + 3*x*a^6*b^2*r^2"
     "- 6*x0*x^2*a^2*b^4*r^2 + 3*x^3*a^2*b^4*r^2 - 4*y0*x*y*a^2*b^4*r^2 +"
     "4*x*y^2*a^2*b^4*r^2 - 12*x0*a^4*b^4*r^2 + 2*y0*x*y*b^6*r^2 + 6*x0*a^2*b^6*r^2 +"
     "9*x*a^2*b^6*r^2 - 3*x*a^4*b^2*r^4 - 3*x*a^2*b^4*r^4"),
    ("y0*x^4*a^2*b^2 - 2*x^4*y*a^2*b^2 + 3*y0*x^2*y^2*a^2*b^2 - 4*x^2*y^3*a^2*b^2 +"
     "2*y0*y^4*a^2*b^2 - 2*y^5*a^2*b^2 + 3*y0*x^2*a^4*b^2 - 2*x^2*y*a^4*b^2 -"
     "4*y0*y^2*a^4*b^2 + 4*y^3*a^4*b^2 + 2*y0*a^6*b^2 - 2*y*a^6*b^2 - y0*x^2*y^2*b^4 -"
     "y0*y^4*b^4 - 2*y0*x^2*a^2*b^4 + 4*x^2*y*a^2*b^4 + 4*y0*y^2*a^2*b^4 -"
     "2*y^3*a^2*b^4 - 3*y0*a^4*b^4 + 2*y*a^4*b^4 + y0*y^2*b^6 + y0*a^2*b^6 -"
     "2*y*a^2*b^6 - 2*y0*x^2*a^2*b^2*r^2 + 4*x^2*y*a^2*b^2*r^2 - 3*y0*y^2*a^2*b^2*r^2"
     "+ 4*y^3*a^2*b^2*r^2 - 3*y0*a^4*b^2*r^2 + 2*y*a^4*b^2*r^2 + y0*x^2*b^4*r^2 +"
     "2*y0*y^2*b^4*r^2 + 4*y0*a^2*b^4*r^2 + 2*y*a^2*b^4*r^2 - y0*b^6*r^2 +"
     "y0*a^2*b^2*r^4 - 2*y*a^2*b^2*r^4 - y0*b^4*r^4"),
    ("-3*x^4*y*a^4*b^2 + 4*y0*x^2*y^2*a^4*b^2 - 5*x^2*y^3*a^4*b^2 + 2*y0*y^4*a^4*b^2 -"
     "2*y^5*a^4*b^2 + 2*y0*x^2*a^6*b^2 - x^2*y*a^6*b^2 - 4*y0*y^2*a^6*b^2 +"
     "4*y^3*a^6*b^2 + 2*y0*a^8*b^2 - 2*y*a^8*b^2 - 4*y0*x^2*y^2*a^2*b^4 -"
     "x^2*y^3*a^2*b^4 - y^5*a^2*b^4 + 6*x^2*y*a^4*b^4 + 2*y0*y^2*a^4*b^4 -"
     "2*y0*a^6*b^4 + y*a^6*b^4 - 2*y0*y^4*b^6 + 4*y0*y^2*a^2*b^6 + y^3*a^2*b^6 -"
     "3*y*a^4*b^6 + 6*x^2*y*a^4*b^2*r^2 - 4*y0*y^2*a^4*b^2*r^2 + 5*y^3*a^4*b^2*r^2 -"
     "2*y0*a^6*b^2*r^2 + y*a^6*b^2*r^2 - 2*y0*x^2*a^2*b^4*r^2 + x^2*y*a^2*b^4*r^2 -"
     "2*y0*y^2*a^2*b^4*r^2 + 2*y^3*a^2*b^4*r^2 + 8*y*a^4*b^4*r^2 + 4*y0*y^2*b^6*r^2 +"
     "2*y0*a^2*b^6*r^2 - y*a^2*b^6*r^2 - 3*y*a^4*b^2*r^4 + 2*y0*a^2*b^4*r^4 -"
     "y*a^2*b^4*r^4 - 2*y0*b^6*r^4"),
    ("2*x^6*a^4*b^2 + 3*x^4*y^2*a^4*b^2 - x^2*y^4*a^4*b^2 + 2*y0*y^5*a^4*b^2 -"
     "2*y^6*a^4*b^2 + 2*x^4*a^6*b^2 + 6*y0*x^2*y*a^6*b^2 - 5*x^2*y^2*a^6*b^2 -"
     "4*y0*y^3*a^6*b^2 + 4*y^4*a^6*b^2 + 2*y0*y*a^8*b^2 - 2*y^2*a^8*b^2 +"
     "6*x^4*y^2*a^2*b^4 - 4*y0*x^2*y^3*a^2*b^4 + 13*x^2*y^4*a^2*b^4 - 8*y0*y^5*a^2*b^4"
     "+ 7*y^6*a^2*b^4 - 6*x^4*a^4*b^4 - 8*y0*x^2*y*a^4*b^4 + 4*x^2*y^2*a^4*b^4 +"
     "18*y0*y^3*a^4*b^4 - 16*y^4*a^4*b^4 - 4*x^2*a^6*b^4 - 10*y0*y*a^6*b^4 +"
     "9*y^2*a^6*b^4 + 4*y0*x^2*y^3*b^6 + 6*y0*y^5*b^6 - 12*x^2*y^2*a^2*b^6 -"
     "12*y0*y^3*a^2*b^6 + 3*y^4*a^2*b^6 + 6*x^2*a^4*b^6 + 8*y0*y*a^4*b^6 -"
     "7*y^2*a^4*b^6 + 2*a^6*b^6 - 4*y0*y^3*b^8 + 6*y^2*a^2*b^8 - 2*a^4*b^8 -"
     "6*x^4*a^4*b^2*r^2 - 6*x^2*y^2*a^4*b^2*r^2 + y^4*a^4*b^2*r^2 - 4*x^2*a^6*b^2*r^2"
     "- 6*y0*y*a^6*b^2*r^2 + 5*y^2*a^6*b^2*r^2 + 2*x^4*a^2*b^4*r^2 +"
     "6*y0*x^2*y*a^2*b^4*r^2 - 9*x^2*y^2*a^2*b^4*r^2 + 14*y0*y^3*a^2*b^4*r^2 -"
     "12*y^4*a^2*b^4*r^2 + 4*x^2*a^4*b^4*r^2 + 28*y0*y*a^4*b^4*r^2 -"
     "18*y^2*a^4*b^4*r^2 - 4*a^6*b^4*r^2 - 4*y0*x^2*y*b^6*r^2 - 12*y0*y^3*b^6*r^2 -"
     "4*x^2*a^2*b^6*r^2 - 26*y0*y*a^2*b^6*r^2 + y^2*a^2*b^6*r^2 + 2*a^4*b^6*r^2 +"
     "4*y0*y*b^8*r^2 + 2*a^2*b^8*r^2 + 6*x^2*a^4*b^2*r^4 + 3*y^2*a^4*b^2*r^4 +"
     "2*a^6*b^2*r^4 - 4*x^2*a^2*b^4*r^4 - 6*y0*y*a^2*b^4*r^4 + 3*y^2*a^2*b^4*r^4 +"
     "2*a^4*b^4*r^4 + 6*y0*y*b^6*r^4 - 4*a^2*b^6*r^4 - 2*a^4*b^2*r^6 + 2*a^2*b^4*r^6"),
    ("x^8*a^4*b^2 + 2*x^6*y^2*a^4*b^2 + x^4*y^4*a^4*b^2 + 2*x^6*a^6*b^2 -"
     "2*x^4*y^2*a^6*b^2 + x^4*a^8*b^2 + 3*x^6*y^2*a^2*b^4 + 4*x^4*y^4*a^2*b^4 +"
     "2*y0*x^2*y^5*a^2*b^4 - x^2*y^6*a^2*b^4 + 2*y0*y^7*a^2*b^4 - 2*y^8*a^2*b^4 +"
     "2*x^6*a^4*b^4 + 15*x^4*y^2*a^4*b^4 - 7*x^2*y^4*a^4*b^4 + 16*y0*x^2*y*a^6*b^4 -"
     "8*x^2*y^2*a^6*b^4 - 6*y0*y^3*a^6*b^4 + 6*y^4*a^6*b^4 - 2*x^2*a^8*b^4 +"
     "4*y0*y*a^8*b^4 - 4*y^2*a^8*b^4 + 2*y0*x^4*y^3*b^6 + 2*y0*x^2*y^5*b^6 +"
     "9*x^4*y^2*a^2*b^6 - 6*y0*x^2*y^3*a^2*b^6 + 43*x^2*y^4*a^2*b^6 -"
     "22*y0*y^5*a^2*b^6 + 18*y^6*a^2*b^6 - 12*x^4*a^4*b^6 - 24*y0*x^2*y*a^4*b^6 -"
     "6*x^2*y^2*a^4*b^6 + 50*y0*y^3*a^4*b^6 - 41*y^4*a^4*b^6 - 6*x^2*a^6*b^6 -"
     "28*y0*y*a^6*b^6 + 22*y^2*a^6*b^6 + a^8*b^6 + 8*y0*x^2*y^3*b^8 + 24*y0*y^5*b^8 -"
     "27*x^2*y^2*a^2*b^8 - 42*y0*y^3*a^2*b^8 + y^4*a^2*b^8 + 14*x^2*a^4*b^8 +"
     "24*y0*y*a^4*b^8 - 11*y^2*a^4*b^8 + 4*a^6*b^8 - 10*y0*y^3*b^10 + 15*y^2*a^2*b^10"
     "- 5*a^4*b^10 - 4*x^6*a^4*b^2*r^2 - 6*x^4*y^2*a^4*b^2*r^2 - 2*x^2*y^4*a^4*b^2*r^2"
     "- 6*x^4*a^6*b^2*r^2 + 4*x^2*y^2*a^6*b^2*r^2 - 2*x^2*a^8*b^2*r^2 +"
     "x^6*a^2*b^4*r^2 - x^4*y^2*a^2*b^4*r^2 - 2*y0*x^2*y^3*a^2*b^4*r^2 +"
     "5*x^2*y^4*a^2*b^4*r^2 - 4*y0*y^5*a^2*b^4*r^2 + 7*y^6*a^2*b^4*r^2 -"
     "9*x^4*a^4*b^4*r^2 - 4*y0*x^2*y*a^4*b^4*r^2 - 29*x^2*y^2*a^4*b^4*r^2 +"
     "4*y0*y^3*a^4*b^4*r^2 - 9*y^4*a^4*b^4*r^2 - 8*x^2*a^6*b^4*r^2 -"
     "18*y0*y*a^6*b^4*r^2 + 22*y^2*a^6*b^4*r^2 - 2*a^8*b^4*r^2 - 2*y0*x^4*y*b^6*r^2 -"
     "4*y0*x^2*y^3*b^6*r^2 + 3*x^4*a^2*b^6*r^2 + 18*y0*x^2*y*a^2*b^6*r^2 -"
     "33*x^2*y^2*a^2*b^6*r^2 + 50*y0*y^3*a^2*b^6*r^2 - 29*y^4*a^2*b^6*r^2 +"
     "6*x^2*a^4*b^6*r^2 + 86*y0*y*a^4*b^6*r^2 - 73*y^2*a^4*b^6*r^2 - 10*a^6*b^6*r^2 -"
     "8*y0*x^2*y*b^8*r^2 - 48*y0*y^3*b^8*r^2 - 9*x^2*a^2*b^8*r^2 - 78*y0*y*a^2*b^8*r^2"
     "+ 10*y^2*a^2*b^8*r^2 + 7*a^4*b^8*r^2 + 10*y0*y*b^10*r^2 + 5*a^2*b^10*r^2 +"
     "6*x^4*a^4*b^2*r^4 + 6*x^2*y^2*a^4*b^2*r^4 + y^4*a^4*b^2*r^4 + 6*x^2*a^6*b^2*r^4"
     "- 2*y^2*a^6*b^2*r^4 + a^8*b^2*r^4 - 3*x^4*a^2*b^4*r^4 - 7*x^2*y^2*a^2*b^4*r^4 +"
     "2*y0*y^3*a^2*b^4*r^4 - 9*y^4*a^2*b^4*r^4 + 12*x^2*a^4*b^4*r^4 +"
     "4*y0*y*a^4*b^4*r^4 + 14*y^2*a^4*b^4*r^4 + 8*a^6*b^4*r^4 + 2*y0*x^2*y*b^6*r^4 -"
     "10*x^2*a^2*b^6*r^4 - 28*y0*y*a^2*b^6*r^4 + 4*y^2*a^2*b^6*r^4 + 2*a^4*b^6*r^4 +"
     "24*y0*y*b^8*r^4 - 11*a^2*b^8*r^4 - 4*x^2*a^4*b^2*r^6 - 2*y^2*a^4*b^2*r^6 -"
     "2*a^6*b^2*r^6 + 3*x^2*a^2*b^4*r^6 + 5*y^2*a^2*b^4*r^6 - 5*a^4*b^4*r^6 +"
     "7*a^2*b^6*r^6 + a^4*b^2*r^8 - a^2*b^4*r^8"),
    ("x^10*a^4*b^2 + 4*x^8*y^2*a^4*b^2 + 5*x^6*y^4*a^4*b^2 + 2*x^4*y^6*a^4*b^2 -"
     "2*x^6*y^2*a^6*b^2 - 6*x^4*y^4*a^6*b^2 - 3*x^6*a^8*b^2 + 6*x^4*y^2*a^8*b^2 -"
     "2*x^4*a^10*b^2 + 3*x^8*y^2*a^2*b^4 + 10*x^6*y^4*a^2*b^4 + 11*x^4*y^6*a^2*b^4 +"
     "4*x^2*y^8*a^2*b^4 - 8*x^4*y^4*a^4*b^4 - 16*x^2*y^6*a^4*b^4 + 10*x^6*a^6*b^4 -"
     "17*x^4*y^2*a^6*b^4 + 24*x^2*y^4*a^6*b^4 + 14*x^4*a^8*b^4 - 16*x^2*y^2*a^8*b^4 +"
     "4*x^2*a^10*b^4 + 2*y0*x^6*y^3*b^6 + 6*y0*x^4*y^5*b^6 + 6*y0*x^2*y^7*b^6 +"
     "2*y0*y^9*b^6 + 3*x^6*y^2*a^2*b^6 + 6*x^4*y^4*a^2*b^6 - 3*x^2*y^6*a^2*b^6 -"
     "10*y^8*a^2*b^6 + 2*x^6*a^4*b^6 + 48*x^4*y^2*a^4*b^6 - 37*x^2*y^4*a^4*b^6 +"
     "20*y^6*a^4*b^6 - 18*x^4*a^6*b^6 + 30*y0*x^2*y*a^6*b^6 + 23*x^2*y^2*a^6*b^6 -"
     "8*y0*y^3*a^6*b^6 - 12*y^4*a^6*b^6 - 19*x^2*a^8*b^6 + 6*y0*y*a^8*b^6 +"
     "4*y^2*a^8*b^6 - 2*a^10*b^6 + 4*y0*x^4*y^3*b^8 + 8*y0*x^2*y^5*b^8 + 4*y0*y^7*b^8"
     "+ 9*x^4*y^2*a^2*b^8 - 2*y0*x^2*y^3*a^2*b^8 + 94*x^2*y^4*a^2*b^8 -"
     "50*y0*y^5*a^2*b^8 + 24*y^6*a^2*b^8 - 16*x^4*a^4*b^8 - 48*y0*x^2*y*a^4*b^8 -"
     "52*x^2*y^2*a^4*b^8 + 100*y0*y^3*a^4*b^8 - 52*y^4*a^4*b^8 + 6*x^2*a^6*b^8 -"
     "54*y0*y*a^6*b^8 + 20*y^2*a^6*b^8 + 8*a^8*b^8 + 10*y0*x^2*y^3*b^10 +"
     "58*y0*y^5*b^10 - 39*x^2*y^2*a^2*b^10 - 94*y0*y^3*a^2*b^10 - 14*y^4*a^2*b^10 +"
     "21*x^2*a^4*b^10 + 48*y0*y*a^4*b^10 + 2*a^6*b^10 - 16*y0*y^3*b^12 +"
     "24*y^2*a^2*b^12 - 8*a^4*b^12 - 5*x^8*a^4*b^2*r^2 - 16*x^6*y^2*a^4*b^2*r^2 -"
     "15*x^4*y^4*a^4*b^2*r^2 - 4*x^2*y^6*a^4*b^2*r^2 + 6*x^4*y^2*a^6*b^2*r^2 +"
     "12*x^2*y^4*a^6*b^2*r^2 + 9*x^4*a^8*b^2*r^2 - 12*x^2*y^2*a^8*b^2*r^2 +"
     "4*x^2*a^10*b^2*r^2 + x^8*a^2*b^4*r^2 - 2*x^6*y^2*a^2*b^4*r^2 -"
     "5*x^4*y^4*a^2*b^4*r^2 + 2*x^2*y^6*a^2*b^4*r^2 + 4*y^8*a^2*b^4*r^2 -"
     "8*x^6*a^4*b^4*r^2 - 20*x^4*y^2*a^4*b^4*r^2 - 20*x^2*y^4*a^4*b^4*r^2 -"
     "16*y^6*a^4*b^4*r^2 - 35*x^4*a^6*b^4*r^2 + 34*x^2*y^2*a^6*b^4*r^2 +"
     "24*y^4*a^6*b^4*r^2 - 16*x^2*a^8*b^4*r^2 - 16*y^2*a^8*b^4*r^2 + 4*a^10*b^4*r^2 -"
     "2*y0*x^6*y*b^6*r^2 - 10*y0*x^4*y^3*b^6*r^2 - 14*y0*x^2*y^5*b^6*r^2 -"
     "6*y0*y^7*b^6*r^2 + x^6*a^2*b^6*r^2 - 8*x^4*y^2*a^2*b^6*r^2 +"
     "2*y0*x^2*y^3*a^2*b^6*r^2 + 16*x^2*y^4*a^2*b^6*r^2 - 4*y0*y^5*a^2*b^6*r^2 +"
     "39*y^6*a^2*b^6*r^2 + 3*x^4*a^4*b^6*r^2 - 12*y0*x^2*y*a^4*b^6*r^2 -"
     "82*x^2*y^2*a^4*b^6*r^2 + 8*y0*y^3*a^4*b^6*r^2 - 67*y^4*a^4*b^6*r^2 +"
     "6*x^2*a^6*b^6*r^2 - 34*y0*y*a^6*b^6*r^2 + 77*y^2*a^6*b^6*r^2 - 13*a^8*b^6*r^2 -"
     "4*y0*x^4*y*b^8*r^2 - 20*y0*x^2*y^3*b^8*r^2 - 10*y0*y^5*b^8*r^2 +"
     "3*x^4*a^2*b^8*r^2 + 32*y0*x^2*y*a^2*b^8*r^2 - 70*x^2*y^2*a^2*b^8*r^2 +"
     "116*y0*y^3*a^2*b^8*r^2 - 31*y^4*a^2*b^8*r^2 - 10*x^2*a^4*b^8*r^2 +"
     "170*y0*y*a^4*b^8*r^2 - 178*y^2*a^4*b^8*r^2 - 19*a^6*b^8*r^2 -"
     "10*y0*x^2*y*b^10*r^2 - 114*y0*y^3*b^10*r^2 - 13*x^2*a^2*b^10*r^2 -"
     "152*y0*y*a^2*b^10*r^2 + 32*y^2*a^2*b^10*r^2 + 20*a^4*b^10*r^2 + 16*y0*y*b^12*r^2"
     "+ 8*a^2*b^12*r^2 + 10*x^6*a^4*b^2*r^4 + 24*x^4*y^2*a^4*b^2*r^4 +"
     "15*x^2*y^4*a^4*b^2*r^4 + 2*y^6*a^4*b^2*r^4 - 6*x^2*y^2*a^6*b^2*r^4 -"
     "6*y^4*a^6*b^2*r^4 - 9*x^2*a^8*b^2*r^4 + 6*y^2*a^8*b^2*r^4 - 2*a^10*b^2*r^4 -"
     "4*x^6*a^2*b^4*r^4 - 12*x^4*y^2*a^2*b^4*r^4 - 20*x^2*y^4*a^2*b^4*r^4 -"
     "13*y^6*a^2*b^4*r^4 + 24*x^4*a^4*b^4*r^4 + 40*x^2*y^2*a^4*b^4*r^4 +"
     "28*y^4*a^4*b^4*r^4 + 40*x^2*a^6*b^4*r^4 - 17*y^2*a^6*b^4*r^4 + 2*a^8*b^4*r^4 +"
     "4*y0*x^4*y*b^6*r^4 + 10*y0*x^2*y^3*b^6*r^4 + 6*y0*y^5*b^6*r^4 -"
     "10*x^4*a^2*b^6*r^4 - 2*y0*x^2*y*a^2*b^6*r^4 - 30*x^2*y^2*a^2*b^6*r^4 +"
     "2*y0*y^3*a^2*b^6*r^4 - 56*y^4*a^2*b^6*r^4 + 4*x^2*a^4*b^6*r^4 +"
     "10*y0*y*a^4*b^6*r^4 + 48*y^2*a^4*b^6*r^4 + 32*a^6*b^6*r^4 + 12*y0*x^2*y*b^8*r^4"
     "+ 8*y0*y^3*b^8*r^4 - 12*x^2*a^2*b^8*r^4 - 66*y0*y*a^2*b^8*r^4 -"
     "14*y^2*a^2*b^8*r^4 - 10*a^4*b^8*r^4 + 56*y0*y*b^10*r^4 - 22*a^2*b^10*r^4 -"
     "10*x^4*a^4*b^2*r^6 - 16*x^2*y^2*a^4*b^2*r^6 - 5*y^4*a^4*b^2*r^6 +"
     "2*y^2*a^6*b^2*r^6 + 3*a^8*b^2*r^6 + 6*x^4*a^2*b^4*r^6 + 18*x^2*y^2*a^2*b^4*r^6 +"
     "15*y^4*a^2*b^4*r^6 - 24*x^2*a^4*b^4*r^6 - 20*y^2*a^4*b^4*r^6 - 15*a^6*b^4*r^6 -"
     "2*y0*x^2*y*b^6*r^6 - 2*y0*y^3*b^6*r^6 + 17*x^2*a^2*b^6*r^6 + 2*y0*y*a^2*b^6*r^6"
     "+ 35*y^2*a^2*b^6*r^6 - 9*a^4*b^6*r^6 - 2*y0*y*b^8*r^6 + 21*a^2*b^8*r^6 +"
     "5*x^2*a^4*b^2*r^8 + 4*y^2*a^4*b^2*r^8 - 4*x^2*a^2*b^4*r^8 - 7*y^2*a^2*b^4*r^8 +"
     "8*a^4*b^4*r^8 - 8*a^2*b^6*r^8 - a^4*b^2*r^10 + a^2*b^4*r^10"),
    ("y0^2 + x0^2 - 2*x0*x + x^2 - 2*y0*y + y^2 - r^2"),
    ("y0*x0*a^2 - x0*y*a^2 - y0*x0*b^2 + y0*x*b^2"),
    ("y0*x0*x*b^2 - y0*x^2*b^2 + y0^2*y*b^2 - y0*y^2*b^2 - y0*a^2*b^2 + y*a^2*b^2 +"
     "y0*b^2*r^2"),
)

# sextics in one coordinate whose z = x^2 (resp. z = y^2) roots carry the
# split singular points of the general ellipse
ELLIPSE_SINGULAR_SEXTIC_X = (
    "-x^6*a^6 + 3*x^6*a^4*b^2 - 3*x^6*a^2*b^4 - 3*x^4*a^4*b^4 + x^6*b^6 +"
    "6*x^4*a^2*b^6 - 3*x^4*b^8 - 3*x^2*a^2*b^8 + 3*x^2*b^10 - b^12 + 3*x^4*a^6*r^2 -"
    "6*x^4*a^4*b^2*r^2 + 3*x^4*a^2*b^4*r^2 - 21*x^2*a^4*b^4*r^2 + 21*x^2*a^2*b^6*r^2"
    "+ 3*a^2*b^8*r^2 - 3*x^2*a^6*r^4 + 3*x^2*a^4*b^2*r^4 - 3*a^4*b^4*r^4 + a^6*r^6"
    )
ELLIPSE_SINGULAR_SEXTIC_Y = (
    "y^6*a^6 - 3*y^4*a^8 + 3*y^2*a^10 - a^12 - 3*y^6*a^4*b^2 + 6*y^4*a^6*b^2 -"
    "3*y^2*a^8*b^2 + 3*y^6*a^2*b^4 - 3*y^4*a^4*b^4 - y^6*b^6 + 3*y^4*a^4*b^2*r^2 +"
    "21*y^2*a^6*b^2*r^2 + 3*a^8*b^2*r^2 - 6*y^4*a^2*b^4*r^2 - 21*y^2*a^4*b^4*r^2 +"
    "3*y^4*b^6*r^2 + 3*y^2*a^2*b^4*r^4 - 3*a^4*b^4*r^4 - 3*y^2*b^6*r^4 + b^6*r^6"
    )

MESH_CASE = {
    "a": "4", "b": "2",
    "offsets": (0.2, 0.4, 0.6),
    "stations": (3.75, 3.0, 2.0, 1.0, 0.0, -1.0, -2.0, -3.0, -3.75),
    "rows": 7, "cols": 20, "nodes": 140, "quad4": 120, "quad9": 30,
}


def case(case_id: int) -> dict:
    """Reference record for one of the nine worked cases."""
    return REFERENCE_CASES[case_id]
