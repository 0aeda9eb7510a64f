"""Exact computer algebra for R(q), the central extension of the q-deformed
Heisenberg algebra: normal forms, confluence checks, identity verification
and Lie membership."""

from .catalog import IdentityResult, run_suite, verify
from .errors import (
    BoundError,
    ConsistencyError,
    EvaluationError,
    KernelError,
    ParseError,
    RuleError,
    UnknownIdentityError,
)
from .exactnum import QPoly, QRat, q_binomial, q_factorial, q_number
from .fockcheck import FockRep, agree_on_block, evaluate
from .freealg import NcPoly, ad_power, lie_bracket, multiply
from .liepoly import (
    LieBasisVector,
    MembershipVerdict,
    is_lie_polynomial,
    lie_basis,
    lie_basis_normal_form,
    lie_span_bruteforce,
    verify_identity,
)
from .parser import elaborate, parse, parse_poly, parse_scalar
from .rewrite import (
    Ambiguity,
    CanonicalElement,
    ReductionRule,
    ReductionSystem,
    check_confluence,
    check_resolvable,
    enumerate_irreducible,
    find_ambiguities,
    is_irreducible,
    normalize,
)
from .rqalg import (
    RBasisVector,
    SBasisVector,
    commute_bracket_power,
    convert_basis,
    expand_AnB,
    presentation,
    product_closed_form,
)

__version__ = "0.1.0"
