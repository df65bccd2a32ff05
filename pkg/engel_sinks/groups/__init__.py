from .element import (  # noqa
    Element, commutator, conjugate, format_cycles, inverse, multiply,
    parse_cycles
)
from .table import SubgroupHandle, SubgroupTable, TableGroup  # noqa
from .finite_group import FiniteGroup, direct_product, generate  # noqa
from .quotient import QuotientGroup, quotient  # noqa
from .subgroups import (  # noqa
    center, centralizer, conjugacy_classes, is_simple, normal_closure,
    normalizer, subgroup_generated
)
from .series import (  # noqa
    derived_series, derived_subgroup, hypercentre, is_abelian, is_metabelian,
    is_nilpotent, is_soluble, lower_central_series, nilpotent_residual,
    upper_central_series
)
from .automorphism import (  # noqa
    Automorphism, apply, commutator_subgroup, coprime_parts,
    enumerate_automorphisms, fixed_subgroup, from_images,
    identity_automorphism, induced, inner, invariant_normal_closure,
    invariant_normal_subgroups, inversion, minimal_invariant_normal_subgroups,
    order, power, power_map
)
from .extension import ExtensionGroup, extension  # noqa
from .structure import (  # noqa
    SylowRecord, all_sylow_conjugates, fitting_subgroup, is_TI, p_core, sylow
)
