"""Construction A lattices over quadratic fields, with exact certificates.

Typical use::

    from latcode import QuadField, FiniteField, code_from_rows, ConstructionInput, build_lattice
    K = QuadField(5)
    F = FiniteField.residue_field(K, 2)
    C = code_from_rows(F, [["1", "0", "w+1", "w"], ["0", "1", "w", "w+1"]])
    L = build_lattice(ConstructionInput.make(K, 2, C))
"""

from .analysis import (
    ModularityCertificate,
    Parity,
    Verdict,
    code_minimum_formula,
    dual_membership,
    is_integral,
    is_unimodular,
    minimum_via_code,
    modularity_certificate,
    parity,
    predict_evenness,
)
from .codes import (
    FFElem,
    FiniteField,
    LinearCode,
    code_from_rows,
    dual_code,
    format_code,
    is_self_dual,
    is_self_orthogonal,
    lift,
    parse_code,
    rho,
    search_self_dual,
    standard_form,
)
from .construction import (
    ConstructionInput,
    LatticeDesc,
    alpha_default,
    build_lattice,
    check_volume,
    expected_discriminant,
    gram_exact,
    pairing,
)
from .enumeration import ThetaPrefix, box_theta, enumerate_short, shortest_vectors, theta_prefix
from .errors import *  # noqa: F401,F403
from .qfield import PrimeSplit, QElem, QuadField, SplitKind, ideal_basis_above, norm, splitting_type, trace
from .secrecy import SecrecyReport, secrecy_gain, weak_secrecy_gain

__version__ = "0.1.0"
