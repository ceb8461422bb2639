"""Theta q-series, the unit multiplier nu_r, and transformation checks.

The transformation residuals pin the Hardy sums modulo 8 against an
independent analytic identity: with principal roots,

    theta(g.z)  = ((cz+d)/i)^(1/2) e^( pi i S(d,c)/4)  theta(z),  c + d odd,
    theta4(g.z) = ((cz+d)/i)^(1/2) e^(-pi i S4(d,c)/4) theta4(z), d odd,

for suitably normalized g in SL2(Z) with c > 0. All complex powers use
the principal branch (Arg in (-pi, pi]); cz + d lies in the open upper
half-plane when c > 0 and Im z > 0, so (cz+d)/i has positive real part
and the square root never crosses the cut.
"""
import cmath
import math
from dataclasses import dataclass
from fractions import Fraction

from .errors import DomainError, ResourceBudgetError
from .sums import hardy_S, hardy_S4

MAX_THETA_TERMS = 200_000


@dataclass(frozen=True)
class GroupElement:
    """An SL2(Z) matrix (a b; c d)."""

    a: int
    b: int
    c: int
    d: int

    def __post_init__(self):
        if self.a * self.d - self.b * self.c != 1:
            raise DomainError("determinant must be 1")

    @property
    def in_gamma_theta(self) -> bool:
        return math.gcd(self.c, self.d) == 1 and (self.c + self.d) % 2 == 1

    def apply(self, z: complex) -> complex:
        return (self.a * z + self.b) / (self.c * z + self.d)

    def j(self, z: complex) -> complex:
        return self.c * z + self.d

    def __matmul__(self, other: "GroupElement") -> "GroupElement":
        return GroupElement(
            self.a * other.a + self.b * other.c,
            self.a * other.b + self.b * other.d,
            self.c * other.a + self.d * other.c,
            self.c * other.b + self.d * other.d,
        )

    def inverse(self) -> "GroupElement":
        return GroupElement(self.d, -self.b, -self.c, self.a)


def theta_cutoff(y: float, tol: float) -> int:
    """Smallest M with 2 sum_{n>M} e^(-pi n^2 y) < tol, by the geometric bound."""
    if y <= 0 or tol <= 0:
        raise DomainError("need y > 0 and tol > 0")
    M = 1
    while True:
        q = math.exp(-2 * math.pi * M * y)
        tail = 2 * math.exp(-math.pi * M * M * y) * q / (1 - q)
        if tail < tol:
            return M
        M += 1
        if M > MAX_THETA_TERMS:
            raise ResourceBudgetError(f"theta series needs more than {MAX_THETA_TERMS} terms")


def theta(z: complex, tol: float = 1e-12) -> complex:
    """theta(z) = sum_n e^(pi i n^2 z), truncation tail certified < tol."""
    z = complex(z)
    if z.imag <= 0:
        raise DomainError("theta needs Im z > 0")
    M = theta_cutoff(z.imag, tol)
    total = 1.0 + 0.0j
    for n in range(1, M + 1):
        total += 2 * cmath.exp(1j * math.pi * n * n * z)
    return total


def theta4(z: complex, tol: float = 1e-12) -> complex:
    """theta4(z) = sum_n (-1)^n e^(pi i n^2 z), truncation tail < tol."""
    z = complex(z)
    if z.imag <= 0:
        raise DomainError("theta4 needs Im z > 0")
    M = theta_cutoff(z.imag, tol)
    total = 1.0 + 0.0j
    sign = -1
    for n in range(1, M + 1):
        total += 2 * sign * cmath.exp(1j * math.pi * n * n * z)
        sign = -sign
    return total


def _unit_phase(ph: Fraction) -> complex:
    """e(ph) for an exact rational phase, reduced mod 1 first."""
    ph -= math.floor(ph)
    return cmath.exp(2j * math.pi * float(ph))


def _hardy_S_signed(d: int, c: int) -> int:
    # Berndt's formula with |c| in the limit flips sign for c < 0.
    if c > 0:
        return hardy_S(d, c)
    return -hardy_S(d, -c)


def nu_r(g: GroupElement, r) -> complex:
    """Multiplier of theta^(8r): unit-modulus, two cases by c.

    nu_r(g) = e(r (S(d, c) - sign c)) for c != 0, and
    nu_r(g) = e(r (sign d - 1)) for c = 0.
    """
    r = Fraction(r) if not isinstance(r, Fraction) else r
    if not 0 < r < 1:
        raise DomainError("nu_r needs 0 < r < 1")
    if not g.in_gamma_theta:
        raise DomainError("nu_r needs g in Gamma_theta (gcd(c,d)=1, c+d odd)")
    if g.c != 0:
        k = _hardy_S_signed(g.d, g.c) - (1 if g.c > 0 else -1)
    else:
        k = (1 if g.d > 0 else -1) - 1
    return _unit_phase(r * k)


def verify_theta_transform(g: GroupElement, z: complex, tol: float = 1e-12) -> float:
    """Max residual of the applicable transformation laws at z.

    Checks the theta law when c + d is odd and the theta4 law when d is
    odd (both apply when c is even). Requires c > 0 and Im z > 0.
    """
    if g.c <= 0:
        raise DomainError("verify_theta_transform needs c > 0")
    z = complex(z)
    if z.imag <= 0:
        raise DomainError("need Im z > 0")
    w = g.apply(z)
    root = cmath.sqrt(g.j(z) / 1j)
    residuals = []
    if (g.c + g.d) % 2 == 1:
        s = hardy_S(g.d, g.c)
        rhs = root * cmath.exp(1j * math.pi * s / 4) * theta(z, tol)
        residuals.append(abs(theta(w, tol) - rhs))
    if g.d % 2 == 1:
        s4 = hardy_S4(g.d, g.c)
        rhs = root * cmath.exp(-1j * math.pi * s4 / 4) * theta4(z, tol)
        residuals.append(abs(theta4(w, tol) - rhs))
    if not residuals:
        raise DomainError("no transformation law applies (need c + d or d odd)")
    return max(residuals)


def cocycle_check(g: GroupElement, h: GroupElement, z: complex, r) -> float:
    """Residual of the weight-4r consistency condition at z.

    Tests nu(gh) j(gh,z)^(4r) = nu(g) nu(h) j(g,h.z)^(4r) j(h,z)^(4r)
    with principal powers. Both sides share the modulus |j(gh,z)|^(4r),
    which reaches 1e12 for random products, so the residual is taken
    after dividing it out: since the three principal logs satisfy
    Log j(g,h.z) + Log j(h,z) - Log j(gh,z) = 2 pi i k with integer k,
    the divided form compares unit-modulus numbers only.
    """
    r = Fraction(r) if not isinstance(r, Fraction) else r
    gh = g @ h
    for name, el in (("g", g), ("h", h), ("gh", gh)):
        if not el.in_gamma_theta:
            raise DomainError(f"{name} is not in Gamma_theta")
    w = float(4 * r)
    z = complex(z)
    winding = cmath.log(g.j(h.apply(z))) + cmath.log(h.j(z)) - cmath.log(gh.j(z))
    lhs = nu_r(gh, r)
    rhs = nu_r(g, r) * nu_r(h, r) * cmath.exp(w * winding)
    return abs(lhs - rhs)


def _parity_normalize(a: int, b: int, c: int, d: int, law: str) -> GroupElement:
    # Shift (a, b) -> (a + tc, b + td) so the transformation law holds:
    # theta law wants a even when c is odd, b even when c is even;
    # theta4 law wants b even.
    if law == "theta":
        need_shift = (a % 2 == 1) if c % 2 == 1 else (b % 2 == 1)
    elif law == "theta4":
        if d % 2 == 0:
            raise DomainError("theta4 normalization needs d odd")
        need_shift = b % 2 == 1
    else:
        raise DomainError(f"unknown law {law!r}")
    if need_shift:
        a, b = a + c, b + d
    return GroupElement(a, b, c, d)


def random_group_element(rng, c_max: int, law: str = "theta", d_span: int = 3) -> GroupElement:
    """Seeded random g in SL2(Z), c in [1, c_max], normalized for `law`.

    The theta normalization lands in the subgroup generated by the
    inversion and the double translation, which is closed under
    products, so random products stay inside Gamma_theta.
    """
    while True:
        c = rng.integers(1, c_max + 1)
        d = rng.integers(-d_span * c, d_span * c + 1)
        c, d = int(c), int(d)
        if math.gcd(c, d) != 1:
            continue
        if law == "theta" and (c + d) % 2 == 0:
            continue
        if law == "theta4" and d % 2 == 0:
            continue
        break
    # Extended gcd: a d - b c = 1.
    g0, x, y = _ext_gcd(d, c)
    assert g0 == 1
    a, b = x, -y
    t = int(rng.integers(-2, 3))
    a, b = a + 2 * t * c, b + 2 * t * d
    return _parity_normalize(a, b, c, d, law)


def _ext_gcd(x: int, y: int) -> tuple[int, int, int]:
    old_r, r = x, y
    old_s, s = 1, 0
    old_t, t = 0, 1
    while r != 0:
        q = old_r // r
        old_r, r = r, old_r - q * r
        old_s, s = s, old_s - q * s
        old_t, t = t, old_t - q * t
    if old_r < 0:
        old_r, old_s, old_t = -old_r, -old_s, -old_t
    return old_r, old_s, old_t
