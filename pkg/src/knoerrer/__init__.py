"""Knörrer-invariant algebras of cyclic quotient surface singularities.

For each coprime pair 0 < a < r the package computes the Hirzebruch-Jung
continued-fraction combinatorics and its duality, quiver-with-relations
presentations of the associated algebras, the monomial-ideal theory of the
Knörrer invariant algebra, the machine-verified realization of the chain
algebra as an endomorphism algebra of monomial ideals, exact-rational
homology (radicals, minimal resolutions, Ext tables, global dimension),
and the partial-resolution equivalence calculus with its K-theoretic
obstructions.
"""

from knoerrer.endomorphism import (
    AlgebraMorphism,
    EndAlgebra,
    HomSpace,
    VerifyReport,
    corner,
    end_algebra,
    expected_hom_dims,
    hom_space,
    phi,
    verify_iso,
)
from knoerrer.equivalence import (
    ChunkDecomposition,
    EquivalenceVerdict,
    FiniteAbelianGroup,
    KeptSet,
    corner_restriction,
    decompose,
    equivalence_verdict,
    k0_singularity,
    local_fd_obstruction,
    singular_equivalent,
)
from knoerrer.fractions import (
    SMOOTH,
    CoprimePair,
    DualData,
    HJSeq,
    LambdaSeq,
    PointDiagram,
    coprime_pairs,
    dual,
    dual_data,
    evaluate,
    expand,
    lambda_seq,
    point_diagram,
    subfraction,
    t_map,
)
from knoerrer.homology import (
    ExtTable,
    LeftModule,
    Resolution,
    Subspace,
    TableAlgebra,
    chain_algebra_ext,
    ext_table,
    global_dimension,
    kappa_table_algebra,
    minimal_resolution,
    projective_dims,
    radical,
    simples,
)
from knoerrer.monomial import (
    KappaAlgebra,
    Monomial,
    MonomialIdeal,
    MonomialModule,
    basis,
    classify_ideal,
    ideal_dims,
    ideals,
    monomial_diagram,
    module_of,
    multiply,
    normal_form,
)
from knoerrer.presentations import (
    CommutativePresentation,
    Presentation,
    Quiver,
    Relation,
    ValidationReport,
    knoerrer_presentation,
    lambda_presentation,
    recon_presentation,
    render,
    riemenschneider_presentation,
    to_dot,
    to_json,
    validate,
)

__version__ = "0.1.0"

__all__ = [
    "SMOOTH",
    "AlgebraMorphism",
    "ChunkDecomposition",
    "CommutativePresentation",
    "CoprimePair",
    "DualData",
    "EndAlgebra",
    "EquivalenceVerdict",
    "ExtTable",
    "FiniteAbelianGroup",
    "HJSeq",
    "HomSpace",
    "KappaAlgebra",
    "KeptSet",
    "LambdaSeq",
    "LeftModule",
    "Monomial",
    "MonomialIdeal",
    "MonomialModule",
    "PointDiagram",
    "Presentation",
    "Quiver",
    "Relation",
    "Resolution",
    "Subspace",
    "TableAlgebra",
    "ValidationReport",
    "VerifyReport",
    "basis",
    "chain_algebra_ext",
    "classify_ideal",
    "coprime_pairs",
    "corner",
    "corner_restriction",
    "decompose",
    "dual",
    "dual_data",
    "end_algebra",
    "equivalence_verdict",
    "evaluate",
    "expand",
    "expected_hom_dims",
    "ext_table",
    "global_dimension",
    "hom_space",
    "ideal_dims",
    "ideals",
    "k0_singularity",
    "kappa_table_algebra",
    "knoerrer_presentation",
    "lambda_presentation",
    "lambda_seq",
    "local_fd_obstruction",
    "minimal_resolution",
    "module_of",
    "monomial_diagram",
    "multiply",
    "normal_form",
    "phi",
    "point_diagram",
    "projective_dims",
    "radical",
    "recon_presentation",
    "render",
    "riemenschneider_presentation",
    "simples",
    "singular_equivalent",
    "subfraction",
    "t_map",
    "to_dot",
    "to_json",
    "validate",
    "verify_iso",
]
