"""Exact scalars, graded objects, matrix morphisms and braided contexts."""

from .context import (
    Bicharacter,
    BraidedContext,
    GradedContext,
    bar,
    check_coherence,
    context_from_table,
    contexts_agree,
    klein_context,
    probe_maps,
    probe_objects,
    rev,
    super_vec,
    unwrap_reversed,
    vec,
    z3_context,
)
from .errors import InconsistentSystem, MbmError, NotSurjective, Refused, ShapeError
from .fields import GF, QQ, Field, field_from_spec
from .graded import TRIVIAL, GradedObject, GradeGroup, make_object, tensor_obj, unit_object
from .linalg import kernel_basis, rank, right_inverse, solve_for_morphism, solve_through_epi
from .morphism import (
    LinearMap,
    Morphism,
    compose,
    first_difference,
    identity,
    seq,
    tensor_mor,
    zero_map,
)

__all__ = [name for name in dir() if not name.startswith("_")]
