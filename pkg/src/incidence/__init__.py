"""Finite graded bounded acyclic categories as orientable incidence structures."""
from .axioms import (
    check_category_laws,
    check_cw,
    check_diamond,
    check_graded,
    check_semi_diamond,
    check_strongly_decomposable,
    check_strongly_initial_unsplittable,
    check_strongly_unsplittable,
    is_splittable,
    linked_clusters,
    split,
    validate_bounded_acyclic,
)
from .category import (
    Category,
    CompositionError,
    Functor,
    IncidenceError,
    InvalidFunctorError,
    PreconditionError,
    Presentation,
    PresentationError,
    UnknownNameError,
    UnsignedError,
    build_category,
    chain_sign,
    check_functor,
    compose,
    full_subcategory,
    hasse,
    induced_poset,
    opposite,
)
from .constructions import (
    MarkedObject,
    category_of_upper_categories,
    check_local_embedding,
    iterated_upper,
    lower_category,
    reduced_downward_functor,
    section_category,
    upper_category,
)
from .fixtures import CATALOG, fixture
from .iso import is_isomorphic
from .nerve import (
    Chain,
    Nerve,
    OrientedComplex,
    boundary_squared_is_zero,
    degeneracy,
    enumerate_chains,
    euler_characteristic,
    face_map,
    nerve_of,
    realize,
    subchain,
    upper_via_nerve,
)
from .report import ValidationReport, Witness
from .textformat import dump_category, load_category, parse_category, parse_presentation

__version__ = "0.1.0"
