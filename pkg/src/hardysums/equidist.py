"""Weyl sums, Ramanujan sums, totient splits, and uniformity statistics.

A sweep walks denominators c = 2..N in ascending order, pulls the Hardy
row for each c from the kernel, and feeds it to one or more consumers
(Weyl accumulators, residue histograms). Phases are reduced exactly as
rationals mod 1 with denominator lcm(c, m) before any floating-point
evaluation, and per-c complex contributions are merged in ascending c
with compensated summation, so results are bit-identical for any thread
count.
"""
import math
import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction

import numpy as np

from . import arith, sums
from .accum import CompensatedSum
from .errors import DomainError

DEFAULT_CHECKPOINTS = (250, 500, 1000, 2000, 4000, 8000)
_SWEEP_CHUNK = 256  # fixed, so chunking never depends on thread count


def default_threads() -> int:
    env = os.environ.get("HARDYSUMS_THREADS")
    if env:
        try:
            return max(1, int(env))
        except ValueError:
            pass
    return 1


def as_fraction(r) -> Fraction:
    """Validate a rational r in (0, 1); floats are rejected."""
    if isinstance(r, float):
        raise DomainError("r must be an exact rational (j, m), not a float")
    if isinstance(r, tuple):
        r = Fraction(r[0], r[1])
    else:
        r = Fraction(r)
    if not 0 < r < 1:
        raise DomainError("r must satisfy 0 < r < 1")
    return r


@dataclass(frozen=True)
class WeylSeries:
    """Checkpointed partial Weyl sums W(N) and normalized ratios."""

    r: Fraction
    n: int
    checkpoints: tuple[int, ...]
    partials: tuple[complex, ...]
    normalized: tuple[float, ...]

    @property
    def final(self) -> complex:
        return self.partials[-1]


@dataclass(frozen=True)
class DistTable:
    """Residue-class counts of Hardy sums mod m, optionally binned by d/c."""

    m: int
    variant: str
    counts: tuple[int, ...]
    total: int
    bins: tuple[tuple[int, ...], ...] | None = None

    def to_json(self) -> dict:
        out = {
            "m": self.m,
            "variant": self.variant,
            "counts": list(self.counts),
            "total": self.total,
        }
        if self.bins is not None:
            out["bins"] = [list(row) for row in self.bins]
        return out

    @classmethod
    def from_json(cls, obj: dict) -> "DistTable":
        bins = obj.get("bins")
        return cls(
            m=obj["m"],
            variant=obj["variant"],
            counts=tuple(obj["counts"]),
            total=obj["total"],
            bins=tuple(tuple(row) for row in bins) if bins is not None else None,
        )


class RowConsumer:
    """One pass over (c, ds, vals) rows: pure per_c, ordered consume."""

    def per_c(self, c, ds, vals):
        raise NotImplementedError

    def consume(self, c, payload):
        raise NotImplementedError


def phase_row_sum(c, ds, vals, n, j, m):
    """sum over the row of e(-n d/c + (j/m) val), phases reduced exactly.

    Each phase is the rational (-n d (L/c) + j val (L/m)) / L mod 1 with
    L = lcm(c, m); only the final L-th root of unity is floated. Phases
    landing on 0 or 1/2 are emitted as exact +-1, which keeps order-2
    character sums exactly integral.
    """
    L = c * m // math.gcd(c, m)
    t = ((-n) * ds) % c * (L // c) + (j * (vals % m)) % m * (L // m)
    t %= L
    roots = np.exp((2j * np.pi / L) * t)
    if L % 2 == 0:
        roots[t == L // 2] = -1.0
    return complex(roots.sum())


class WeylConsumer(RowConsumer):
    """Accumulates exact-phase character sums for several (n, j, m) combos."""

    def __init__(self, combos, checkpoints):
        self.combos = list(combos)
        self.checkpoints = sorted(checkpoints)
        self._sums = [CompensatedSum() for _ in self.combos]
        self._snapshots = {}
        self._next_idx = 0

    def per_c(self, c, ds, vals):
        out = np.empty(len(self.combos), dtype=np.complex128)
        for i, (n, j, m) in enumerate(self.combos):
            out[i] = phase_row_sum(c, ds, vals, n, j, m)
        return out

    def consume(self, c, payload):
        for acc, term in zip(self._sums, payload):
            acc.add(term)
        while self._next_idx < len(self.checkpoints) and self.checkpoints[self._next_idx] <= c:
            self._snapshots[self.checkpoints[self._next_idx]] = [a.value for a in self._sums]
            self._next_idx += 1

    def finish(self, last_c):
        while self._next_idx < len(self.checkpoints):
            self._snapshots[self.checkpoints[self._next_idx]] = [a.value for a in self._sums]
            self._next_idx += 1
        return self._snapshots


class DistConsumer(RowConsumer):
    """Residue histogram of vals mod m, optionally crossed with d/c bins."""

    def __init__(self, m, nbins=0):
        self.m = m
        self.nbins = nbins
        self.counts = np.zeros(m, dtype=np.int64)
        self.joint = np.zeros((nbins, m), dtype=np.int64) if nbins else None

    def per_c(self, c, ds, vals):
        res = vals % self.m
        counts = np.bincount(res, minlength=self.m)
        if not self.nbins:
            return counts, None
        # Exact rational binning: d/c in [i/B, (i+1)/B) iff i = (d*B)//c.
        bidx = (ds * self.nbins) // c
        joint = np.bincount(bidx * self.m + res, minlength=self.nbins * self.m)
        return counts, joint.reshape(self.nbins, self.m)

    def consume(self, c, payload):
        counts, joint = payload
        self.counts += counts
        if joint is not None:
            self.joint += joint


def sweep_rows(N, variant, consumers, threads=None, c_start=2):
    """Run consumers over all rows c in [c_start, N], deterministically."""
    if N < c_start:
        return
    threads = default_threads() if threads is None else max(1, threads)
    spans = [(lo, min(lo + _SWEEP_CHUNK, N + 1)) for lo in range(c_start, N + 1, _SWEEP_CHUNK)]

    def work(span):
        lo, hi = span
        out = []
        for c in range(lo, hi):
            ds, vals = sums.hardy_row(c, variant)
            out.append((c, [cons.per_c(c, ds, vals) for cons in consumers]))
        return out

    if threads == 1:
        chunk_iter = map(work, spans)
    else:
        pool = ThreadPoolExecutor(max_workers=threads)
        chunk_iter = pool.map(work, spans)
    try:
        for chunk in chunk_iter:
            for c, payloads in chunk:
                for cons, payload in zip(consumers, payloads):
                    cons.consume(c, payload)
    finally:
        if threads > 1:
            pool.shutdown()


def _checkpoint_grid(N, checkpoints):
    if checkpoints is None:
        grid = [cp for cp in DEFAULT_CHECKPOINTS if cp <= N]
    else:
        grid = sorted(set(int(cp) for cp in checkpoints))
        if any(cp < 2 or cp > N for cp in grid):
            raise DomainError("checkpoints must lie in [2, N]")
    if N not in grid:
        grid.append(N)
    return sorted(set(grid))


def weyl_sum(N, n, r, checkpoints=None, threads=None, variant="theta") -> WeylSeries:
    """Checkpointed Weyl sum sum_{c<=N} sum_d e(-n d/c + r S(d, c)).

    r must be an exact rational j/m; each term's phase is reduced mod 1
    with denominator lcm(c, m) before the complex exponential.
    """
    if N < 2:
        raise DomainError("weyl_sum needs N >= 2")
    r = as_fraction(r)
    grid = _checkpoint_grid(N, checkpoints)
    cons = WeylConsumer([(n, r.numerator, r.denominator)], grid)
    sweep_rows(N, variant, [cons], threads=threads)
    snaps = cons.finish(N)
    counts = arith.phi_theta_series(N).cumsum()
    partials = tuple(snaps[cp][0] for cp in grid)
    normalized = tuple(abs(w) / int(counts[cp]) for w, cp in zip(partials, grid))
    return WeylSeries(r=r, n=n, checkpoints=tuple(grid), partials=partials, normalized=normalized)


def character_sum(N, m, j, n, variant="S") -> complex:
    """Weyl sum indexed by the character j of Z/mZ instead of by r = j/m."""
    if m < 2:
        raise DomainError("character_sum needs m >= 2")
    if j % m == 0:
        raise DomainError("trivial character excluded (j = 0 mod m)")
    j = j % m
    if variant not in ("S", "S4"):
        raise DomainError(f"unknown variant {variant!r}")
    parity = "theta" if variant == "S" else "four"
    return weyl_sum(N, n, Fraction(j, m), variant=parity).final


def distribution_table(N, m, variant="S", bins=0, threads=None) -> DistTable:
    """Counts of S (or S4) residues mod m over the class up to N."""
    if N < 2 or m < 2:
        raise DomainError("distribution_table needs N >= 2 and m >= 2")
    if variant not in ("S", "S4"):
        raise DomainError(f"unknown variant {variant!r}")
    if bins < 0:
        raise DomainError("bins must be >= 0")
    parity = "theta" if variant == "S" else "four"
    cons = DistConsumer(m, nbins=bins)
    sweep_rows(N, parity, [cons], threads=threads)
    joint = tuple(tuple(int(x) for x in row) for row in cons.joint) if bins else None
    counts = tuple(int(x) for x in cons.counts)
    return DistTable(m=m, variant=variant, counts=counts, total=sum(counts), bins=joint)


def uniformity_stats(table: DistTable) -> tuple[float, float, float]:
    """(chi_square, max_rel_dev, tv_distance) against the uniform law."""
    if table.total <= 0:
        raise DomainError("uniformity_stats needs a populated table")
    expected = table.total / table.m
    chi2 = sum((cnt - expected) ** 2 / expected for cnt in table.counts)
    maxdev = max(abs(cnt * table.m / table.total - 1.0) for cnt in table.counts)
    tv = 0.5 * sum(abs(cnt / table.total - 1.0 / table.m) for cnt in table.counts)
    return chi2, maxdev, tv


def ramanujan_direct(c: int, n: int) -> int:
    """R_c(n) = sum over units d mod c of e(n d / c), as an exact integer.

    Residue counts of n*d mod c are exact; the final root-of-unity
    evaluation floats and is rounded with a closeness check.
    """
    if c < 1:
        raise DomainError("ramanujan_direct needs c >= 1")
    if c == 1:
        return 1
    ds = np.arange(1, c, dtype=np.int64)
    ds = ds[np.gcd(ds, c) == 1]
    counts = np.bincount((n * ds) % c, minlength=c)
    angles = (2.0 * np.pi / c) * np.arange(c)
    value = complex(np.sum(counts * np.exp(1j * angles)))
    nearest = round(value.real)
    if abs(value.imag) > 1e-6 or abs(value.real - nearest) > 1e-6:
        raise ArithmeticError(f"R_{c}({n}) did not round cleanly: {value}")
    return int(nearest)


def ramanujan_von_sterneck(c: int, n: int) -> int:
    """R_c(n) = mu(c/(c,n)) * phi(c) / phi(c/(c,n)), n != 0."""
    if c < 1:
        raise DomainError("ramanujan_von_sterneck needs c >= 1")
    if n == 0:
        raise DomainError("n = 0 not covered by the formula; use ramanujan_direct")
    g = math.gcd(c, abs(n))
    cg = c // g
    mu = arith.mobius(cg)
    if mu == 0:
        return 0
    phi_c = arith.totient(c)
    phi_cg = arith.totient(cg)
    if phi_c % phi_cg != 0:
        raise ArithmeticError("phi(c/(c,n)) should divide phi(c)")
    return mu * (phi_c // phi_cg)


def lambda_split(N: int, tables: arith.SieveTables | None = None) -> tuple[int, Fraction]:
    """Even/odd-denominator totient split.

    Lambda1 = sum_{c <= N/2} phi(2c), Lambda2 = (1/2) sum_{c <= N/2} phi(2c-1),
    both exact (Lambda2 is half-integral, its sum includes phi(1)/2).
    """
    if N < 1:
        raise DomainError("lambda_split needs N >= 1")
    if tables is None or tables.limit < N:
        tables = arith.build_sieves(max(N, 2))
    half = N // 2
    tot = tables.totient
    lam1 = int(tot[2 : 2 * half + 1 : 2].sum(dtype=np.int64))
    lam2_numer = int(tot[1 : 2 * half : 2].sum(dtype=np.int64))
    return lam1, Fraction(lam2_numer, 2)
