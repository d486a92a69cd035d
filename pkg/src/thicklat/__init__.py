"""Exact lattices of thick subcategories for Dynkin quivers.

Noncrossing partition lattices for simply laced Weyl groups, quiver
representations with rigid 0/1 tree modules, enumeration of wide
subcategories with the order isomorphism onto noncrossing partitions,
lattices of monotone functions from finite posets, and Koszul complex
homology over exact rationals.
"""
from .figures import (
    FIGURE1_COVERS,
    FIGURE1_NODES,
    FIGURE2_COVERS,
    FIGURE2_NODE_COUNT,
)
from .koszul import (
    EvaluatedComplex,
    FreeComplex,
    Poly,
    PolyRing,
    RationalPoint,
    cone_of_scalar,
    evaluate,
    homology_dims,
    koszul_complex,
    koszul_tensor_module,
    tensor,
    unit_complex,
)
from .linalg import GF, QQ, RationalField
from .quiver_rep import (
    FieldRep,
    Quiver,
    TreeModule,
    TreeModuleError,
    cokernel_rep,
    decompose_dims,
    default_orientation,
    euler_form,
    ext_cocycle_basis,
    ext_dim,
    extension_middle,
    hom_basis,
    hom_dim,
    indecomposable_dims,
    kernel_rep,
    tree_module,
)
from .root_system import (
    DynkinType,
    NcElement,
    NcLattice,
    RootSystem,
    WeylElement,
    build_root_system,
    catalan_number,
    coxeter_element,
    enumerate_nc,
    is_noncrossing_partition,
    nc_join,
    nc_leq,
    nc_meet,
    nc_to_set_partition,
    reflection,
    reflection_factorization,
    reflection_length,
    simple_reflection,
)
from .spec_model import (
    FinitePoset,
    FunctionLattice,
    SizeGuardError,
    SpecFunction,
    all_functions,
    is_specialization_closed,
    lattice_iso,
    monotone_functions,
    poset_antichain,
    poset_chain,
    poset_diamond,
    poset_point,
    size_guard_limit,
    smashing_count,
)
from .thick_enum import (
    BijectionReport,
    WideSubcategory,
    enumerate_thick,
    simples_of,
    verify_bijection,
    wide_closure,
    wide_to_nc,
)

__version__ = "0.1.0"

__all__ = [
    "BijectionReport",
    "DynkinType",
    "EvaluatedComplex",
    "FIGURE1_COVERS",
    "FIGURE1_NODES",
    "FIGURE2_COVERS",
    "FIGURE2_NODE_COUNT",
    "FieldRep",
    "FinitePoset",
    "FreeComplex",
    "FunctionLattice",
    "GF",
    "NcElement",
    "NcLattice",
    "Poly",
    "PolyRing",
    "QQ",
    "Quiver",
    "RationalField",
    "RationalPoint",
    "RootSystem",
    "SizeGuardError",
    "SpecFunction",
    "TreeModule",
    "TreeModuleError",
    "WeylElement",
    "WideSubcategory",
    "all_functions",
    "build_root_system",
    "catalan_number",
    "cokernel_rep",
    "cone_of_scalar",
    "coxeter_element",
    "decompose_dims",
    "default_orientation",
    "enumerate_nc",
    "enumerate_thick",
    "euler_form",
    "evaluate",
    "ext_cocycle_basis",
    "ext_dim",
    "extension_middle",
    "hom_basis",
    "hom_dim",
    "homology_dims",
    "indecomposable_dims",
    "is_noncrossing_partition",
    "is_specialization_closed",
    "kernel_rep",
    "koszul_complex",
    "koszul_tensor_module",
    "lattice_iso",
    "monotone_functions",
    "nc_join",
    "nc_leq",
    "nc_meet",
    "nc_to_set_partition",
    "poset_antichain",
    "poset_chain",
    "poset_diamond",
    "poset_point",
    "reflection",
    "reflection_factorization",
    "reflection_length",
    "simple_reflection",
    "simples_of",
    "size_guard_limit",
    "smashing_count",
    "tensor",
    "tree_module",
    "unit_complex",
    "verify_bijection",
    "wide_closure",
    "wide_to_nc",
]
