import math
from fractions import Fraction

import numpy as np
import pytest

from conftest import naive_hardy_S, naive_hardy_S4
from hardysums import sums
from hardysums.errors import DomainError


def test_hardy_S_examples():
    assert sums.hardy_S(1, 2) == 1
    assert sums.hardy_S(1, 4) == 1
    assert sums.hardy_S(2, 3) == 2
    assert sums.hardy_S(3, 4) == 3
    assert sums.hardy_S(0, 1) == 0


def test_hardy_S4_examples():
    assert sums.hardy_S4(1, 2) == 1
    assert sums.hardy_S4(1, 3) == 2
    assert sums.hardy_S4(3, 4) == 1


def test_hardy_domain_errors():
    with pytest.raises(DomainError):
        sums.hardy_S(2, 4)  # gcd != 1
    with pytest.raises(DomainError):
        sums.hardy_S(1, 3)  # c + d even
    with pytest.raises(DomainError):
        sums.hardy_S4(2, 5)  # d even
    with pytest.raises(DomainError):
        sums.hardy_S(1, -2)  # negative c rejected


def test_shift_by_2c(rng):
    for _ in range(40):
        c = int(rng.integers(2, 300))
        ds = [d for d in range(1, c) if math.gcd(d, c) == 1 and (c + d) % 2 == 1]
        if not ds:
            continue
        d = int(rng.choice(ds))
        assert sums.hardy_S(d + 2 * c, c) == sums.hardy_S(d, c)
        assert sums.hardy_S(d + 2 * c, c) == naive_hardy_S(d + 2 * c, c)


def test_half_period_reflection(rng):
    # S(d + c, c) = -S4(d, c), the reason inputs reduce mod 2c, not c.
    for _ in range(40):
        c = int(rng.integers(2, 300))
        ds = [d for d in range(1, c) if math.gcd(d, c) == 1 and d % 2 == 1 and (d + c) % 2 == 0]
        if not ds:
            continue
        d = int(rng.choice(ds))
        assert naive_hardy_S(d + c, c) == -sums.hardy_S4(d, c)


def test_against_naive_formula(rng):
    for _ in range(60):
        c = int(rng.integers(2, 500))
        coprime = [d for d in range(1, c) if math.gcd(d, c) == 1]
        d = int(rng.choice(coprime))
        if (c + d) % 2 == 1:
            assert sums.hardy_S(d, c) == naive_hardy_S(d, c)
        if d % 2 == 1:
            assert sums.hardy_S4(d, c) == naive_hardy_S4(d, c)


def test_parity_law_sampled(rng):
    for _ in range(80):
        c = int(rng.integers(2, 1200))
        ds, vals = sums.hardy_row(c, "theta")
        assert ((vals % 2 == 1) == (c % 2 == 0)).all()
        ds4, vals4 = sums.hardy_row(c, "four")
        assert ((vals4 % 2 == 1) == (c % 2 == 0)).all()


def test_cross_identity_brute():
    for c in range(2, 301):
        ds, s4vals = sums.hardy_row(c, "four")
        for d, s4 in zip(ds, s4vals):
            assert sums.hardy_S(c - int(d), c) == int(s4)


def test_batch_row_examples():
    rows = {rec.d: rec.S for rec in sums.batch_row(4, "theta")}
    assert rows == {1: 1, 3: 3}
    rows = {rec.d: rec.S for rec in sums.batch_row(3, "theta")}
    assert rows == {2: 2}
    vals = [rec.S4 for rec in sums.batch_row(5, "four")]
    assert all(v % 2 == 0 for v in vals)


def test_batch_row_matches_single_pairs():
    for c in range(2, 301):
        for rec in sums.batch_row(c, "theta"):
            assert rec.S == sums.hardy_S(rec.d, rec.c)
        for rec in sums.batch_row(c, "four"):
            assert rec.S4 == sums.hardy_S4(rec.d, rec.c)


def test_hardy_S_table(rng):
    sentinel = np.iinfo(np.int64).min
    for c in (1, 2, 3, 8, 45, 46):
        table = sums.hardy_S_table(c)
        assert table.shape == (2 * c,)
        for d0 in range(2 * c):
            valid = math.gcd(d0, c) == 1 and (c + d0) % 2 == 1
            if valid:
                assert table[d0] == naive_hardy_S(d0, c)
            else:
                assert table[d0] == sentinel


def test_dedekind_examples():
    assert sums.dedekind_sum(1, 2) == 0
    assert sums.dedekind_sum(1, 3) == Fraction(1, 18)


def test_dedekind_periodicity(rng):
    for _ in range(30):
        c = int(rng.integers(2, 400))
        coprime = [d for d in range(1, c) if math.gcd(d, c) == 1]
        d = int(rng.choice(coprime))
        assert sums.dedekind_sum(d + c, c) == sums.dedekind_sum(d, c)


def test_dedekind_cotangent_oracle():
    for c in range(2, 201):
        for d in range(1, c):
            if math.gcd(d, c) != 1:
                continue
            exact = float(sums.dedekind_sum(d, c))
            assert abs(exact - sums.dedekind_cotangent(d, c)) < 1e-9


def test_dedekind_domain_error():
    with pytest.raises(DomainError):
        sums.dedekind_sum(2, 4)
