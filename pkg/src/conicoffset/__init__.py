"""conicoffset: exact offset curves (parallel lines) of nondegenerate conics.

The package derives the implicit polynomial of the two parallel lines at
distance r from a parabola, ellipse, or hyperbola, two independent ways: by
Buchberger-based Groebner elimination on the envelope variety ideal, and by
specializing stored closed forms.  On top of the exact layer sit singular
point analysis (critical offsets, virtual and split singular points), implicit
curve tracing with SVG output, and layered quadrilateral mesh generation.
"""

from .cardano import real_roots_cubic, real_roots_exact
from .conics import (ConicSpec, OffsetCurve, SingularPoint, SingularPointReport,
                     build_ideal, offset_poly_closed_form,
                     offset_poly_elimination, r_crit, singular_points,
                     singular_points_via_elimination)
from .curve import (Point2, TracedCurve, eval_poly, offset_figure,
                    parametric_offset_samples, plot_svg, trace_implicit)
from .errors import (ConicOffsetError, EliminationError, OrderError, ParamError,
                     PreconditionError, ResourceLimitError, RingError,
                     RootPairingError, RootRefineError, SpecError, VarError,
                     ZeroPolyError)
from .groebner import (GroebnerBasis, Ideal, buchberger, elimination_ideal,
                       minimalize, reduce_basis, s_polynomial)
from .mesh import Mesh, MeshSpec, export_mesh, generate_mesh, load_mesh
from .poly import (BigRational, MonomialOrder, MultiPoly, add, block,
                   content_normalize, format_poly, gradient, grevlex,
                   leading_term, lex, mul, parse_poly, poly_dumps, poly_loads,
                   rat, reduce, substitute)

__version__ = "0.1.0"

__all__ = [
    "BigRational", "ConicSpec", "ConicOffsetError", "EliminationError",
    "GroebnerBasis", "Ideal", "Mesh", "MeshSpec", "MonomialOrder", "MultiPoly",
    "OffsetCurve", "OrderError", "ParamError", "Point2", "PreconditionError",
    "ResourceLimitError", "RingError", "RootPairingError", "RootRefineError",
    "SingularPoint", "SingularPointReport", "SpecError", "TracedCurve",
    "VarError", "ZeroPolyError", "add", "block", "buchberger", "build_ideal",
    "content_normalize", "elimination_ideal", "eval_poly", "export_mesh",
    "format_poly", "generate_mesh", "gradient", "grevlex", "leading_term",
    "lex", "load_mesh", "minimalize", "mul", "offset_figure",
    "offset_poly_closed_form", "offset_poly_elimination",
    "parametric_offset_samples", "parse_poly", "plot_svg", "poly_dumps",
    "poly_loads", "r_crit", "rat", "real_roots_cubic", "real_roots_exact",
    "reduce", "reduce_basis", "s_polynomial", "singular_points",
    "singular_points_via_elimination", "substitute", "trace_implicit",
]
