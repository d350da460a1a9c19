"""adamsops: exact arithmetic for rings of additive unstable Adams operations.

Sequence transforms and integrality certificates, integer-valued polynomial
duality, a truncated rational formal-group-law engine with the derived
cobordism-side functional evaluations, and the p-local split-setting tools.
"""

from .fgl import (
    CapacityError,
    GradedPoly,
    KPolynomial,
    TruncSeries,
    adams_orientation_series,
    coefficient_dictionary,
    exp_series,
    express_in_basis,
    fgl_coeff,
    k_series,
    log_series,
)
from .hopfeval import (
    HopfMonomial,
    LambdaLinear,
    SolutionSetReport,
    hopf_congruence_form,
    k_project,
    monomial,
    psi_hat,
    sigma_mu_functional,
    solution_sets_equal,
    substitute_lambda,
    v_lambda,
    worked_congruence_forms,
)
from .ivp import (
    IvpPoly,
    assert_integer_valued,
    from_power_basis,
    is_integer_valued,
    pairing,
    pi_lambda,
)
from .opring import (
    CongruenceCert,
    CongruenceRecord,
    LambdaSeq,
    SigmaCoeffs,
    act_on_homotopy,
    check_congruences,
    congruence_vector,
    coproduct_sigma,
    lambda_to_sigma,
    multiply,
    sigma_eigenvalues,
    sigma_to_lambda,
)
from .parsing import ParseError, parse_ivp_poly, parse_monomial, parse_sequence
from .plocal import (
    PLocalSeq,
    SpanningBasisReport,
    adams_idempotent,
    check_congruences_plocal,
    padic_valuation,
    spanning_set_reduce,
    summand_membership,
    zero_extension,
)
from .stirling import (
    alternating_power_sum,
    binomial,
    stirling1_unsigned,
    stirling2,
)

__version__ = "0.1.0"
