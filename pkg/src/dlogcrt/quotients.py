"""Fermat quotients mod p and their composite-modulus generalization for
safe-prime parameters, plus the carry-corrected lift digits.

The generalized quotient q(x) is defined by

    x**(pq*(q-1)) = 1 + q(x) * (pq)**2   (mod (pq)**3),

which is well defined because pq*(q-1) is the exponent of the unit group
mod (pq)**2. q(x) depends on x as an integer (equivalently on x mod (pq)**3),
not on x mod pq: all operations here therefore take the base as an int,
never as a pre-reduced residue mod pq.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd

from .errors import ExactnessError, NotAUnitError
from .numtheory import SafePrimeParams


@dataclass(frozen=True)
class LiftProfile:
    """Per-base data for lifting x**(q-1) from mod pq to mod (pq)**2.

    power_residue  A = x**(q-1) mod pq
    carry          k with x**(q-1) mod (pq)**2 = A + k*pq
    quotient       generalized quotient q(x), canonical mod pq
    digit          corrected lift digit (k - A*q(x)) mod pq
    digit_literal  naive digit (-A*q(x)) mod pq, which ignores the carry;
                   kept for the discrepancy report
    """

    base: int
    power_residue: int
    carry: int
    quotient: int
    digit: int
    digit_literal: int


def _require_unit(x: int, m: int, what: str) -> None:
    g = gcd(x, m)
    if g != 1:
        raise NotAUnitError(f"{what} = {x} is not a unit mod {m} (gcd = {g})")


def _exact_quotient(numerator: int, divisor: int, context: str) -> int:
    quot, rem = divmod(numerator, divisor)
    if rem != 0:
        raise ExactnessError(f"{context}: {numerator} not divisible by {divisor}")
    return quot


def fermat_quotient(p: int, x: int) -> int:
    """Classical Fermat quotient ((x**(p-1) mod p**2) - 1) / p, canonical mod p."""
    _require_unit(x, p, "base")
    return _exact_quotient(pow(x, p - 1, p * p) - 1, p, "Fermat quotient") % p


def lerch_quotient(params: SafePrimeParams, x: int) -> int:
    """Generalized quotient q(x) = ((x**exponent mod m3) - 1) / m2, mod m1.

    The division is exact because the exponent is the exponent of the unit
    group mod m2; a failure signals corrupted parameters.
    """
    _require_unit(x, params.m1, "base")
    power = pow(x, params.exponent, params.m3)
    return _exact_quotient(power - 1, params.m2, "generalized quotient") % params.m1


def base_power_digits(params: SafePrimeParams, x: int) -> tuple[int, int]:
    """First two base-pq digits of x**(q-1): (A, k) with
    x**(q-1) mod (pq)**2 = A + k*pq."""
    _require_unit(x, params.m1, "base")
    low = pow(x, params.q - 1, params.m1)
    full = pow(x, params.q - 1, params.m2)
    carry = _exact_quotient(full - low, params.m1, "base power carry")
    return low, carry


def lift_profile(params: SafePrimeParams, x: int) -> LiftProfile:
    """Assemble the full lift profile of a base.

    The corrected digit includes the integer carry k of x**(q-1) from mod pq
    to mod (pq)**2; the literal digit -A*q(x) omits it and is wrong whenever
    k != 0 (both are recorded).
    """
    power_residue, carry = base_power_digits(params, x)
    quotient = lerch_quotient(params, x)
    digit = (carry - power_residue * quotient) % params.m1
    digit_literal = -power_residue * quotient % params.m1
    return LiftProfile(
        base=x,
        power_residue=power_residue,
        carry=carry,
        quotient=quotient,
        digit=digit,
        digit_literal=digit_literal,
    )
