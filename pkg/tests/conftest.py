"""Shared fixtures and independent helpers for the test suite.

Oracle helpers here deliberately avoid the package's own code paths
(sieve instead of Miller-Rabin, naive scans instead of structured
solvers) so tests check implementations against independent routes.
"""

from __future__ import annotations

import pytest

from dlogcrt import SafePrimeParams


def sieve(limit: int) -> list[int]:
    """All primes below limit, by Eratosthenes."""
    flags = bytearray([1]) * limit
    flags[0:2] = b"\x00\x00"
    for i in range(2, int(limit**0.5) + 1):
        if flags[i]:
            flags[i * i :: i] = bytearray(len(flags[i * i :: i]))
    return [i for i in range(limit) if flags[i]]


PRIMES_1000 = sieve(1000)

# 5 <= q < 500 with both q and 2q + 1 prime
SAFE_QS = [
    q for q in PRIMES_1000 if 5 <= q < 500 and (2 * q + 1) in set(sieve(1100))
]


@pytest.fixture
def golden() -> SafePrimeParams:
    """The worked desk-scale parameter set p = 11, q = 5."""
    return SafePrimeParams(11, 5)


@pytest.fixture
def params23() -> SafePrimeParams:
    return SafePrimeParams(23, 11)
