"""Exact Dedekind sums and Hardy sums, single pairs and batch rows.

The Hardy sums are the alternating floor sums

    S(d, c)  = sum_{k=1}^{c-1} (-1)^(k + 1 + floor(dk/c)),  c + d odd,
    S4(d, c) = sum_{k=1}^{c-1} (-1)^(floor(dk/c)),          d odd,

for gcd(d, c) = 1. Both are periodic in d with period 2c but not c:
shifting d by c exchanges the two families up to sign,
S(d + c, c) = -S4(d, c). Inputs are therefore reduced modulo 2c before
the parity checks, and all sweeps use the representatives 1 <= d < c.
"""
import math
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from . import arith
from .errors import DomainError
from .kernels import hardy_ab


@dataclass(frozen=True)
class HardyRecord:
    """One sweep row entry: S is set for the theta class, S4 for four."""

    d: int
    c: int
    S: int | None = None
    S4: int | None = None


def _ab_single(d: int, c: int) -> tuple[int, int]:
    # Incremental-remainder walk, exact for arbitrary-precision ints.
    rem = 0
    par = 1
    sk = 1
    a = 0
    b = 0
    for _ in range(1, c):
        rem += d
        if rem >= c:
            rem -= c
            par = -par
        b += par
        a += sk * par
        sk = -sk
    return a, b


def _reduce(d: int, c: int) -> int:
    if c < 1:
        raise DomainError("Hardy sums need c >= 1 (negative c rejected)")
    return d % (2 * c)


def hardy_S(d: int, c: int) -> int:
    """S(d, c) for gcd(d, c) = 1 and c + d odd (d reduced mod 2c)."""
    dd = _reduce(d, c)
    if math.gcd(dd, c) != 1:
        raise DomainError(f"S({d},{c}): gcd(d, c) must be 1")
    if (c + dd) % 2 == 0:
        raise DomainError(f"S({d},{c}): c + d must be odd")
    if dd < c:
        return _ab_single(dd, c)[0]
    return -_ab_single(dd - c, c)[1]


def hardy_S4(d: int, c: int) -> int:
    """S4(d, c) for gcd(d, c) = 1 and d odd (d reduced mod 2c)."""
    dd = _reduce(d, c)
    if math.gcd(dd, c) != 1:
        raise DomainError(f"S4({d},{c}): gcd(d, c) must be 1")
    if dd % 2 == 0:
        raise DomainError(f"S4({d},{c}): d must be odd")
    if dd < c:
        return _ab_single(dd, c)[1]
    return -_ab_single(dd - c, c)[0]


def dedekind_sum(d: int, c: int) -> Fraction:
    """Exact s(d, c) via the sawtooth form, periodic in d modulo c.

    s(d, c) = sum_k ((k/c)) ((dk/c)) = (sum_k k * (dk mod c)) / c^2 - (c-1)/4.
    """
    if c < 1:
        raise DomainError("dedekind_sum needs c >= 1")
    dd = d % c
    if math.gcd(dd, c) != 1:
        raise DomainError(f"s({d},{c}): gcd(d, c) must be 1")
    rem = 0
    acc = 0
    for k in range(1, c):
        rem += dd
        if rem >= c:
            rem -= c
        acc += k * rem
    return Fraction(acc, c * c) - Fraction(c - 1, 4)


def dedekind_cotangent(d: int, c: int) -> float:
    """Floating cotangent-sum evaluation of s(d, c), the independent oracle."""
    if c < 1:
        raise DomainError("dedekind_cotangent needs c >= 1")
    if math.gcd(d % c, c) != 1:
        raise DomainError("gcd(d, c) must be 1")
    total = 0.0
    for k in range(1, c):
        x = math.pi * k / c
        y = math.pi * k * d / c
        total += (math.cos(x) / math.sin(x)) * (math.cos(y) / math.sin(y))
    return total / (4 * c)


def hardy_row(c: int, parity_class: str) -> tuple[np.ndarray, np.ndarray]:
    """Kernel-backed row: (d values, S or S4 values) for 1 <= d < c.

    Identical to per-pair hardy_S / hardy_S4 on the same arguments; this
    is the high-throughput path every sweep consumes.
    """
    if c < 2:
        raise DomainError("rows need c >= 2")
    ds = arith.class_residues(c, parity_class)
    a, b = hardy_ab(c, ds)
    return ds, (a if parity_class == "theta" else b)


def batch_row(c: int, parity_class: str) -> list[HardyRecord]:
    """All HardyRecords for one denominator in the given class."""
    ds, vals = hardy_row(c, parity_class)
    if parity_class == "theta":
        return [HardyRecord(int(d), c, S=int(v)) for d, v in zip(ds, vals)]
    return [HardyRecord(int(d), c, S4=int(v)) for d, v in zip(ds, vals)]


def hardy_S_table(c: int) -> np.ndarray:
    """int64 lookup table t of length 2c with t[d] = S(d, c).

    Entries outside the class (gcd != 1 or c + d even) hold INT64_MIN.
    Used to evaluate multipliers for arbitrary integers d via d mod 2c.
    """
    if c < 1:
        raise DomainError("hardy_S_table needs c >= 1")
    sentinel = np.int64(np.iinfo(np.int64).min)
    table = np.full(2 * c, sentinel, dtype=np.int64)
    if c == 1:
        table[0] = 0  # S(0, 1) is the empty sum
        return table
    lower = arith.class_residues(c, "theta")
    if lower.size:
        a, _ = hardy_ab(c, lower)
        table[lower] = a
    upper = arith.class_residues(c, "four")
    if upper.size:
        _, b = hardy_ab(c, upper)
        table[upper + c] = -b
    return table
