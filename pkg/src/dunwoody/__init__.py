"""Dunwoody diagrams, cyclic presentations, and exact homology of cyclic
branched coverings of torus knots.

The diagram side builds D(a,b,c,n,r,s), traces its curves, and reads off
fundamental-group presentations; the oracle side computes the same
invariants from torus-knot data alone (closed-form words, Alexander
polynomials, circulant Smith normal forms), so every family claim is
checked by two independent routes.
"""

from .diagram import (
    AdmissibilityReport,
    Arc,
    ArcKind,
    Curve,
    Diagram,
    DunwoodyParams,
    InadmissibleDiagramError,
    LOWER,
    ParameterError,
    ShiftSolutions,
    StructuralError,
    UPPER,
    VertexId,
    build_diagram,
    check_admissibility,
    closed_presentation,
    derive_s,
    exponent_profile,
    family_params,
    from_json,
    heegaard_presentation,
    relator_word,
    to_dot,
    to_json,
    trace_curves,
    validate_params,
)
from .oracle import (
    IntPolynomial,
    TorusKnotSpec,
    alexander_polynomial,
    branched_cover_homology,
    closed_form_word,
    conjugate_power_form,
    relator_polynomial,
    resultant,
    torus_knot_group,
)
from .presentation import (
    AbelianInvariants,
    Presentation,
    SmithForm,
    abelianization_matrix,
    homology,
    is_cyclic_presentation,
    lens_space_check,
    presentation_from_json,
    presentation_from_text,
    shift_word,
    smith_normal_form,
)
from .figures import render_diagram, render_verification_grid
from .verify import verify_family, verify_grid
from .words import (
    FreeWord,
    Substitution,
    cyclic_normal_form,
    cyclically_equal,
    format_word,
    free_equal,
    parse_word,
    reduce_word,
    substitute,
    verify_automorphism,
)

__version__ = "0.1.0"

__all__ = [
    "AbelianInvariants",
    "AdmissibilityReport",
    "Arc",
    "ArcKind",
    "Curve",
    "Diagram",
    "DunwoodyParams",
    "FreeWord",
    "InadmissibleDiagramError",
    "IntPolynomial",
    "LOWER",
    "ParameterError",
    "Presentation",
    "ShiftSolutions",
    "SmithForm",
    "StructuralError",
    "Substitution",
    "TorusKnotSpec",
    "UPPER",
    "VertexId",
    "abelianization_matrix",
    "alexander_polynomial",
    "branched_cover_homology",
    "build_diagram",
    "check_admissibility",
    "closed_form_word",
    "closed_presentation",
    "conjugate_power_form",
    "cyclic_normal_form",
    "cyclically_equal",
    "derive_s",
    "exponent_profile",
    "family_params",
    "format_word",
    "free_equal",
    "from_json",
    "heegaard_presentation",
    "homology",
    "is_cyclic_presentation",
    "lens_space_check",
    "parse_word",
    "presentation_from_json",
    "presentation_from_text",
    "reduce_word",
    "relator_polynomial",
    "relator_word",
    "render_diagram",
    "render_verification_grid",
    "resultant",
    "shift_word",
    "smith_normal_form",
    "substitute",
    "to_dot",
    "to_json",
    "torus_knot_group",
    "trace_curves",
    "validate_params",
    "verify_automorphism",
    "verify_family",
    "verify_grid",
]
