"""Extending structures for alternative and pre-alternative algebras.

Exact (rational and prime field) construction, verification, and
classification of unified products, crossed products, matched pairs,
deformation maps, and codimension one flag extensions.
"""

__version__ = "0.1.0"

from .core import (  # noqa: F401
    Algebra,
    Check,
    PreAlgebra,
    Witness,
    alt_of,
    associator,
    equiv_check_assoc_form,
    is_alternative,
    is_pre_alternative,
)
from .fields import QQ, PrimeField, Rationals  # noqa: F401
from .spaces import BilinearMap, LinearFunctional, LinearMap, Space, space  # noqa: F401
from .cayley import cayley_dickson_algebra, octonions, quaternions, sedenions  # noqa: F401
from .bimodules import (  # noqa: F401
    Bimodule,
    PreBimodule,
    adjoint_bimodule,
    bimodule_report,
    is_bimodule,
    is_pre_bimodule,
    pre_bimodule_report,
    pre_semidirect,
    semidirect,
)
from .unified import (  # noqa: F401
    Classification,
    ExtendingDatum,
    MorphismPair,
    check_datum,
    classify_extensions,
    cohomologous_datums,
    datum_of_bimodule,
    enumerate_datums,
    equivalent_datums,
    extract_datum,
    identity_pair,
    morphism_holds,
    morphism_report,
    transport_datum,
    unified_product,
    zero_datum,
)
from .preunified import (  # noqa: F401
    PreExtendingDatum,
    check_pre_datum,
    collapse_datum,
    pre_datum_of_bimodule,
    pre_unified_product,
    zero_pre_datum,
)
from .products import (  # noqa: F401
    CrossedSystem,
    MatchedPair,
    PreMatchedPair,
    bicrossed_product,
    check_crossed,
    check_matched,
    check_pre_matched,
    crossed_product,
    extract_matched_pair,
    extract_pre_matched_pair,
    pre_bicrossed_product,
)
from .complements import (  # noqa: F401
    deformation_classes,
    deformations_equivalent,
    deformed_isomorphic,
    enumerate_deformations,
    factorization_index,
    graph_closed,
    is_deformation,
    r_deform,
)
from .flags import (  # noqa: F401
    FlagDatum,
    PreFlagDatum,
    check_flag,
    check_pre_flag,
    characters,
    enumerate_flags,
    flag_from_datum,
    flag_to_datum,
    pre_flag_to_datum,
)
from .documents import Document, dumps, load_path, loads, parse, serialize  # noqa: F401
