"""twistrep: Dehn twist actions on surface-group representation varieties.

Numerical machinery for representations of genus-p surface groups into
SL(n,C), GL(n,C) and PGL(2,C): twist actions along a registry of simple
closed curves, conjugacy witnesses, exceptionality certificates for
twist-fixed classes, and the explicit families showing that fixed classes
need not come from the central fibre of a degeneration while their pinched
curve values stay torsion.
"""

from .groups import (
    DEFAULT_TOL,
    ContextMismatchError,
    GroupContext,
    GroupElement,
    Tolerance,
    commutator,
    conjugate,
    element_distance,
    gl,
    group_equal,
    identity,
    pgl2,
    sample_element,
    sl,
    structure_elements,
    torsion_order,
)
from .words import (
    CurveId,
    Word,
    curve_word,
    curves_disjoint,
    generator_curve,
    reduce,
    registry_curves,
    separating_curve,
    surface_relation,
)
from .reps import (
    ConjugacyWitness,
    FixCommutator,
    FixGenerator,
    Representation,
    character_fingerprint,
    commutant_dimension,
    conjugacy_witness,
    conjugate_representation,
    evaluate,
    is_heuristically_dense,
    is_irreducible,
    relation_defect,
    sample_representation,
    tangent_dimension,
)
from .twists import (
    ConjectureReport,
    ExceptionalityReport,
    PseudoDegeneration,
    apply_pseudo_degeneration,
    apply_twist,
    conjecture_check,
    exceptional_certificate,
    fixed_class_witness,
    is_realizable_as_degeneration,
    is_simple_degeneration,
)
from .families import (
    CentralizerTriple,
    SolverError,
    WeylTriple,
    central_separating_family,
    complete_centralizer_triple,
    dense_separating_family,
    embed_block,
    embed_element,
    mixed_twist_family,
    solve_commutator,
    solve_commutator_sl2c,
    solve_weyl_triple,
    torsion_anchored_family,
    twist_conjugator_audit,
    weyl_twist_family,
)

__version__ = "0.1.0"

__all__ = [name for name in dir() if not name.startswith("_")]
