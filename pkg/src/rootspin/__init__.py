"""rootspin: exact root systems, Clifford rotor groups, and the 3D->4D induction.

Everything runs over quadratic number fields Q(sqrt(d)) with exact rational
components, so closures, group orders, and classifications are decided
without floating-point tolerances.
"""

from .caps import GROUP_CLOSURE_CAP, ROOT_CLOSURE_CAP
from .classify import (
    CoxeterMatrix,
    Signature,
    SurveyRow,
    SurveyTable,
    catalog,
    coxeter_matrix,
    coxeter_order,
    identify,
    signature,
    simple_roots_of,
    survey,
)
from .clifford import (
    Multivector,
    Rotor,
    geometric_product,
    reflect,
    reverse,
    rotate,
    rotor_from_vectors,
    spinor_to_vec2,
    spinor_to_vec4,
)
from .errors import (
    ClosureCapExceeded,
    DegenerateFunctional,
    DimensionMismatch,
    DomainError,
    FieldMismatch,
    NonUnitVector,
    NormNotInField,
    NotRepresentable,
    OddGradePresent,
    RootspinError,
    UnknownAngle,
    ZeroRoot,
)
from .induction import (
    RotorGroup,
    SelfDualityReport,
    check_self_dual,
    generate_rotor_group,
    induce_2d,
    induce_4d,
)
from .presets import Preset, build_preset, direct_sum, get_preset, preset_names
from .qfield import QScalar, Rational, phi, sqrt_in_field, to_float
from .roots import (
    AxiomReport,
    Provenance,
    RootSystem,
    Vector,
    close_under_reflections,
    extract_simple_roots,
    gram_spectrum,
    normalize_roots,
    reflect_euclid,
    span_rank,
    vec,
    verify_root_axioms,
)
from .serialize import (
    load_root_system,
    root_system_from_json,
    root_system_to_json,
    save_root_system,
    to_csv,
    to_off,
    to_text,
)

__version__ = "0.1.0"
