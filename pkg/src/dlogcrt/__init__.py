"""Reduction of safe-prime discrete-log instances to linear congruence
systems in two unknowns over coprime moduli, with the lift machinery,
verification oracles, and a general multivariable-CRT solver behind it."""

from .arith import Residue, crt_pair, egcd, mod_inv, mod_pow
from .lift import (
    CompositeCarry,
    Lemma2Report,
    PrimeSquaredLift,
    carry_beta_p2,
    carry_beta_pq,
    check_lemma1,
    check_lemma2,
    recover_index_mod_p2,
    teichmuller_digit,
    teichmuller_lift,
)
from .mcrt import (
    LinearEquation,
    LinearSystem,
    ModularSolutions,
    SolutionSet,
    solve_single,
    solve_system,
)
from .numtheory import (
    Factorization,
    SafePrimeParams,
    carmichael_lambda,
    euler_phi,
    factorize,
    gen_safe_prime,
    is_prime,
    primitive_root,
)
from .oracle import CyclicContext, dlog_bruteforce, dlog_bsgs
from .quotients import (
    LiftProfile,
    base_power_digits,
    fermat_quotient,
    lerch_quotient,
    lift_profile,
)
from .reduction import (
    CongruenceSystem,
    DlogInstance,
    LinearCongruence,
    VerificationReport,
    candidates_mod_group_order,
    master_coefficients,
    solve_small,
    subgroup_index_mod_q,
    transform,
    verify_instance,
)

__version__ = "0.1.0"

__all__ = [
    "CompositeCarry",
    "CongruenceSystem",
    "CyclicContext",
    "DlogInstance",
    "Factorization",
    "Lemma2Report",
    "LiftProfile",
    "LinearCongruence",
    "LinearEquation",
    "LinearSystem",
    "ModularSolutions",
    "PrimeSquaredLift",
    "Residue",
    "SafePrimeParams",
    "SolutionSet",
    "VerificationReport",
    "base_power_digits",
    "candidates_mod_group_order",
    "carmichael_lambda",
    "carry_beta_p2",
    "carry_beta_pq",
    "check_lemma1",
    "check_lemma2",
    "crt_pair",
    "dlog_bruteforce",
    "dlog_bsgs",
    "egcd",
    "euler_phi",
    "factorize",
    "fermat_quotient",
    "gen_safe_prime",
    "is_prime",
    "lerch_quotient",
    "lift_profile",
    "master_coefficients",
    "mod_inv",
    "mod_pow",
    "primitive_root",
    "recover_index_mod_p2",
    "solve_single",
    "solve_small",
    "solve_system",
    "subgroup_index_mod_q",
    "teichmuller_digit",
    "teichmuller_lift",
    "transform",
    "verify_instance",
]
