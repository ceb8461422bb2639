"""Sieves, parity-restricted totients, and Farey-fraction enumeration.

The index set of every sweep is the family of reduced fractions d/c with
1 <= d < c and a parity restriction: class "theta" keeps c + d odd,
class "four" keeps d odd. phi_theta counts the theta class for one
denominator, Phi_theta(N) = sum_{c<=N} phi_theta(c) counts the whole
family and grows like (2/pi^2) N^2.
"""
import math
from dataclasses import dataclass
from typing import Iterator

import numpy as np

from .errors import DomainError

PARITY_CLASSES = ("theta", "four")


@dataclass(frozen=True)
class ThetaFraction:
    """A reduced fraction d/c tagged with its parity class."""

    d: int
    c: int
    parity_class: str

    def __post_init__(self):
        if self.parity_class not in PARITY_CLASSES:
            raise DomainError(f"unknown parity class {self.parity_class!r}")
        if self.c < 2 or not 1 <= self.d < self.c:
            raise DomainError("need 1 <= d < c and c >= 2")
        if math.gcd(self.d, self.c) != 1:
            raise DomainError("d/c must be reduced")
        if self.parity_class == "theta" and (self.c + self.d) % 2 == 0:
            raise DomainError("theta class requires c + d odd")
        if self.parity_class == "four" and self.d % 2 == 0:
            raise DomainError("four class requires d odd")


@dataclass(frozen=True)
class SieveTables:
    """Mobius and totient values on [0, limit], index 0 unused."""

    limit: int
    mobius: np.ndarray
    totient: np.ndarray


def build_sieves(N: int) -> SieveTables:
    """Sieve mu and phi on [1, N]."""
    if N < 1:
        raise DomainError("sieve limit must be >= 1")
    is_prime = np.ones(N + 1, dtype=bool)
    is_prime[:2] = False
    for p in range(2, math.isqrt(N) + 1):
        if is_prime[p]:
            is_prime[p * p :: p] = False
    primes = np.flatnonzero(is_prime)

    mob = np.ones(N + 1, dtype=np.int64)
    tot = np.arange(N + 1, dtype=np.int64)
    for p in primes:
        p = int(p)
        tot[p::p] -= tot[p::p] // p
        mob[p::p] *= -1
        if p * p <= N:
            mob[p * p :: p * p] = 0
    mob[0] = 0
    tot[0] = 0
    return SieveTables(limit=N, mobius=mob, totient=tot)


def totient(n: int) -> int:
    """phi(n) by trial division."""
    if n < 1:
        raise DomainError("totient needs n >= 1")
    result = n
    m = n
    p = 2
    while p * p <= m:
        if m % p == 0:
            result -= result // p
            while m % p == 0:
                m //= p
        p += 1 if p == 2 else 2
    if m > 1:
        result -= result // m
    return result


def mobius(n: int) -> int:
    """mu(n) by trial division."""
    if n < 1:
        raise DomainError("mobius needs n >= 1")
    result = 1
    m = n
    p = 2
    while p * p <= m:
        if m % p == 0:
            m //= p
            if m % p == 0:
                return 0
            result = -result
        p += 1 if p == 2 else 2
    if m > 1:
        result = -result
    return result


def phi_theta(c: int, tables: SieveTables | None = None) -> int:
    """Count of d in [1, c) with gcd(d, c) = 1 and c + d odd.

    Equals phi(c) for even c and phi(c)/2 for odd c >= 3. The empty
    range at c = 1 makes phi_theta(1) = 0.
    """
    if c < 1:
        raise DomainError("phi_theta needs c >= 1")
    if tables is not None and c <= tables.limit:
        phi = int(tables.totient[c])
    else:
        phi = totient(c)
    return phi if c % 2 == 0 else phi // 2


def class_residues(c: int, parity_class: str) -> np.ndarray:
    """Ascending int64 array of the valid d in [1, c) for one class."""
    if parity_class not in PARITY_CLASSES:
        raise DomainError(f"unknown parity class {parity_class!r}")
    if c < 1:
        raise DomainError("class_residues needs c >= 1")
    ds = np.arange(1, c, dtype=np.int64)
    if parity_class == "theta":
        mask = (ds + c) % 2 == 1
    else:
        mask = ds % 2 == 1
    ds = ds[mask]
    return ds[np.gcd(ds, c) == 1]


def enumerate_fractions(N: int, parity_class: str = "theta") -> Iterator[ThetaFraction]:
    """Yield every class fraction with c <= N, ascending c then d."""
    if N < 2:
        raise DomainError("enumeration needs N >= 2")
    for c in range(2, N + 1):
        for d in class_residues(c, parity_class):
            yield ThetaFraction(int(d), c, parity_class)


def phi_theta_series(N: int, tables: SieveTables | None = None) -> np.ndarray:
    """int64 array t with t[c] = phi_theta(c) for 0 <= c <= N."""
    if tables is None or tables.limit < N:
        tables = build_sieves(max(N, 1))
    t = tables.totient[: N + 1].copy()
    t[1::2] //= 2
    return t


def phi_theta_count(N: int, tables: SieveTables | None = None) -> int:
    """Phi_theta(N) as an exact integer (64-bit accumulation)."""
    if N < 1:
        raise DomainError("phi_theta_count needs N >= 1")
    return int(phi_theta_series(N, tables).sum(dtype=np.int64))
