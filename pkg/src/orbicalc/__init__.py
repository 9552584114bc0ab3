"""orbicalc: exact finite-group invariants of classifying objects.

Multiplication-table groups, exact character tables, real irreducible
representation data, homomorphism groupoids, stable bundle and framing
bookkeeping, stable map groups via framed points, nerve homology of the
terminal model, localization of finite categories, and linear
transversality certificates.  All core arithmetic is exact.
"""

__version__ = "0.1.0"

from .groups import (  # noqa: F401
    FiniteGroup,
    SubgroupClass,
    are_isomorphic,
    centralizer,
    conjugacy_classes,
    group_from_generators,
    group_from_json,
    quotient_group,
    subgroup_as_group,
    subgroup_classes,
    trivial_group,
)
from .characters import CharacterTable, character_table, frobenius_schur  # noqa: F401
from .realreps import (  # noqa: F401
    MatrixRep,
    RealIrrep,
    RealIrrepTable,
    isotypic_decomposition,
    min_faithful_tensor_power,
    real_irreps,
    restriction_multiplicities,
)
from .homs import HomClass, enumerate_homs, hom_classes, pi1, rep_hom_classes  # noqa: F401
from .bundles import (  # noqa: F401
    CoarseStableBundle,
    Framing,
    StableBundle,
    aut_group,
    framings,
    involution,
    restrict_bundle,
    transport_framing,
)
from .stablemaps import (  # noqa: F401
    MapGenerator,
    MapGroupPresentation,
    cross_check_abstract_enumeration,
    enumerate_generators,
    map_group,
)
from .rstar import build_quotient_category, cell_census, nerve_chain_complex, rstar_homology  # noqa: F401
from .snf import ChainComplex, homology, smith_normal_form  # noqa: F401
from .localize import (  # noqa: F401
    FiniteCategory,
    check_right_multiplicative,
    localize_hom,
    verify_universal_property,
)
from .transversality import (  # noqa: F401
    LinearChart,
    derived_class_detector,
    fixed_subspace,
    isotypic_surjectivity,
)
from .corpus import corpus_group, corpus_names, load_group  # noqa: F401
from .errors import InternalCheckError, OrbicalcError, ValidationError  # noqa: F401
