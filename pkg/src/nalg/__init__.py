"""Exact workbench for finite-dimensional n-ary algebras.

An algebra lives here as a table of structure constants over an exact
field (the rationals or a prime field), and every question asked of it
is settled by exact linear algebra: no floats, no tolerances.
"""

from .algebra import Element, NAryAlgebra, algebras_equal
from .checks import (
    Verdict,
    Witness,
    check_binary_jordan,
    check_dxy_identity,
    check_jts_identity,
    check_total_commutativity,
    dxy_sides,
    reevaluate_witness,
)
from .derivations import (
    OperatorSpace,
    compare,
    d2_decompose,
    derivation_algebra,
    inner_derivation_space,
    is_derivation,
    skew_space,
)
from .fields import GF, Mod, PrimeField, QQ, Rationals
from .identities import (
    IdentitySpace,
    Monomial,
    identity_space,
    lifting_span,
    monomial_basis,
    verify_identity,
)
from .io import algebra_from_json, algebra_to_json, dump_file, dumps, load_file, loads
from .linalg import Matrix, RowSpace, SubspaceBasis, matrix_algebra_closure
from .structure import SimplicityReport, ideal_closure, simplicity, subalgebra_closure

__all__ = [
    "Element",
    "GF",
    "IdentitySpace",
    "Matrix",
    "Mod",
    "Monomial",
    "NAryAlgebra",
    "OperatorSpace",
    "PrimeField",
    "QQ",
    "Rationals",
    "RowSpace",
    "SimplicityReport",
    "SubspaceBasis",
    "Verdict",
    "Witness",
    "algebra_from_json",
    "algebra_to_json",
    "algebras_equal",
    "check_binary_jordan",
    "check_dxy_identity",
    "check_jts_identity",
    "check_total_commutativity",
    "compare",
    "d2_decompose",
    "derivation_algebra",
    "dump_file",
    "dumps",
    "dxy_sides",
    "identity_space",
    "ideal_closure",
    "inner_derivation_space",
    "is_derivation",
    "lifting_span",
    "load_file",
    "loads",
    "matrix_algebra_closure",
    "monomial_basis",
    "reevaluate_witness",
    "simplicity",
    "skew_space",
    "subalgebra_closure",
    "verify_identity",
]

__version__ = "0.1.0"
