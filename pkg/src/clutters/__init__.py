"""Exact combinatorics of uniform clutters and squarefree monomial ideals.

The package decides, with certificates, chordality and decomposability of
d-uniform clutters, linear quotients of monomial ideals, shellability and
extendable shellability of simplicial complexes, and computes exact graded
Betti numbers; the shelling/linear-quotients and skeleton/residual bridges
are verified exhaustively at desk scale.
"""

from .core import (
    MAX_UNIVERSE,
    SimplicialComplex,
    UniformClutter,
    VertexSet,
    alexander_dual,
    clique_complex,
    complement_clutter,
    complete_clutter,
    complete_clutter_on,
    induced_subclutter,
    is_clique,
    minimal_nonfaces,
    pure_skeleton,
    skeleton,
)
from .chordality import (
    ChordalityResult,
    SimplicialityError,
    SimplicialSequence,
    SubclutterSteps,
    apply_subclutter_steps,
    closed_neighborhood,
    delete,
    is_chordal,
    is_maximal_subcircuit,
    is_simplicial,
    is_simplicial_subclutter,
    maximal_subcircuits,
    simplicial_elements,
    validate_simplicial_sequence,
)
from .decomposable import (
    CertificateError,
    CompleteLeaf,
    DecomposabilityResult,
    GluedUnion,
    SubclutterStep,
    certificate_clutter,
    check_certificate,
    glue,
    is_decomposable,
    random_decomposable,
    verify_certificate,
)
from .ideals import (
    Monomial,
    OrderedIdeal,
    circuit_ideal,
    colon_by_monomial,
    complement_ideal,
    find_linear_quotients_order,
    glued_order,
    has_linear_quotients_in_order,
    ideal_power,
    is_matroidal,
    is_squarefree_lexsegment,
    is_squarefree_stable,
    is_squarefree_strongly_stable,
    minimal_generators,
    partition_order,
)
from .resolution import (
    BettiTable,
    betti_numbers,
    betti_numbers_taylor,
    has_linear_resolution,
    regularity,
    simplicial_homology_ranks,
)
from .shelling import (
    ExtendabilityResult,
    ShellingPrefix,
    SimonReport,
    find_shelling,
    is_extendably_shellable,
    is_shelling_order,
    simon_equivalence_check,
)
from .quasiforest import (
    LeafOrder,
    find_leaf_order,
    is_leaf,
    quasiforest_skeleton_clutter,
)

__version__ = "0.1.0"
