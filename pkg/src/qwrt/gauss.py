"""Generalized Gauss sums G(r,x,y), brute force and closed form.

Also the color-set variation gamma_b used to normalize the quantum invariant,
its vanishing predicate, and the one-dimensional Gauss sum reciprocity check.

Square roots are not a separate symbol type at API boundaries: sqrt(m) for odd
m is realized inside a cyclotomic field by the classical Gauss sum
epsilon(m)^(-1) * sum_j e_m^(j^2), sqrt(2) as e_8 + e_8^(-1), and square
factors are pulled out front, so every closed form is a CycNumber and equality
stays decidable.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction

from .exactalg import SO3, SU2, CycNumber, RootSpec
from .numtheory import epsilon4, jacobi, star_inverse


def gauss_brute(r: int, x: int, y: int) -> CycNumber:
    """G(r,x,y) = sum_{j=0}^{r-1} e_r^(x j^2 + y j), summed term by term."""
    if r < 1:
        raise ValueError("r must be positive")
    vec = [0] * r
    for j in range(r):
        vec[(x * j * j + y * j) % r] += 1
    return CycNumber.from_terms(r, enumerate(vec))


def _sqrt_realization(m: int) -> CycNumber:
    """Exact cyclotomic realization of sqrt(m) for a positive integer m."""
    if m < 1:
        raise ValueError("radicand must be positive")
    s = 1
    k = m
    d = 2
    while d * d <= k:
        while k % (d * d) == 0:
            k //= d * d
            s *= d
        d += 1
    # k is the squarefree part; sqrt(m) = s * sqrt(k)
    if k == 1:
        return CycNumber.from_rational(s, 1)
    if k % 2 == 0:
        root2 = CycNumber.root(8) + CycNumber.root(8, -1)
        return root2 * _sqrt_realization_odd(k // 2) * s
    return _sqrt_realization_odd(k) * s


def _sqrt_realization_odd(m: int) -> CycNumber:
    if m == 1:
        return CycNumber.from_rational(1, 1)
    eps_inv = CycNumber.from_rational(1, 4) if m % 4 == 1 else CycNumber.root(4, -1)
    return eps_inv * gauss_brute(m, 1, 0)


@dataclass(frozen=True)
class SqrtSymbol:
    """sqrt(radicand) realized exactly in the cyclotomic field Q(e_(8m))."""

    radicand: int
    realization: CycNumber = field(init=False)

    def __post_init__(self):
        value = _sqrt_realization(self.radicand).lift(8 * self.radicand)
        object.__setattr__(self, "realization", value)


def sqrt_cyc(m: int) -> CycNumber:
    """sqrt(m) as a cyclotomic number (at its natural modulus)."""
    return _sqrt_realization(m)


def gauss_closed(r: int, x: int, y: int) -> CycNumber:
    """Closed form for G(r,x,y), returned at modulus 8r.

    Applies the (r,x)-reduction and then the four nonzero branches of the
    classical value table with epsilon factors, Jacobi symbols and exact
    square-root realizations.
    """
    if r < 1:
        raise ValueError("r must be positive")
    x %= r
    y %= r
    c0 = math.gcd(r, x)                 # x = 0 gives c0 = r
    if y % c0:
        return CycNumber.from_rational(0, 8 * r)
    r1, x1, y1 = r // c0, x // c0, y // c0
    value = _gauss_closed_coprime(r1, x1, y1) * c0
    return value.lift(8 * r)


def _gauss_closed_coprime(r: int, x: int, y: int) -> CycNumber:
    """Branch dispatch for gcd(r,x) = 1."""
    if r == 1:
        return CycNumber.from_rational(1, 1)
    xs = star_inverse(x, r)
    if r % 2 == 1:
        exp = -xs * y * y * ((r + 1) ** 2 // 4)
        return (epsilon4(r) * jacobi(x, r) * sqrt_cyc(r)
                * CycNumber.root(r, exp % r))
    if r % 4 == 2:
        if y % 2 == 0:
            return CycNumber.from_rational(0, 1)
        half = r // 2
        t = ((r + 2) // 2) ** 3 // 4     # (r+2)/2 is even, so the cube /4 is integral
        exp = -xs * y * y * t
        return (epsilon4(half) * jacobi(2 * x, half) * sqrt_cyc(2 * r)
                * CycNumber.root(r, exp % r))
    # r = 0 mod 4, x odd
    if y % 2 == 1:
        return CycNumber.from_rational(0, 1)
    eps_conj = epsilon4(x).conjugate()
    one_plus_i = CycNumber.from_rational(1, 4) + CycNumber.root(4)
    exp = -xs * (y * y // 4)
    return (eps_conj * jacobi(r, x) * one_plus_i * sqrt_cyc(r)
            * CycNumber.root(r, exp % r))


def gamma(b: int, xi: RootSpec, mode: str = "closed") -> CycNumber:
    """gamma_b(xi) = sum over the color set of q^(b(n^2-1)/4).

    Brute mode sums over N_G directly.  Closed mode uses
    gamma^SO3_b(e_r^l) = G(r, lb, lb) and
    gamma^SU2_b(e_r^l) = e_(4r)^(-lb) G(r, lb, 0) + G(r, lb, lb),
    which re-expresses the Galois transport of the reference values.
    """
    r, l = xi.r, xi.l
    if mode == "brute":
        if xi.theory == SO3:
            vec = [0] * r
            for n in range(1, 2 * r, 2):
                vec[(l * b * ((n * n - 1) // 4)) % r] += 1
            return CycNumber.from_terms(r, enumerate(vec))
        m = 4 * r
        vec = [0] * m
        for n in range(2 * r):
            vec[(l * b * (n * n - 1)) % m] += 1
        return CycNumber.from_terms(m, enumerate(vec))
    if mode != "closed":
        raise ValueError("mode must be 'brute' or 'closed'")
    lb = (l * b) % r
    if xi.theory == SO3:
        return gauss_closed(r, lb, lb)
    return (CycNumber.root(4 * r, (-l * b) % (4 * r)) * gauss_closed(r, lb, 0)
            + gauss_closed(r, lb, lb))


def gamma_is_zero(b: int, xi: RootSpec) -> bool:
    """Vanishing predicate: only SU2 with r/(r,b) odd and b/(r,b) = 2 mod 4."""
    if xi.theory == SO3:
        return False
    c = math.gcd(xi.r, abs(b)) if b else xi.r
    return (xi.r // c) % 2 == 1 and (b // c) % 4 == 2


def reciprocity_check(m: int, n: int, psi: int, phi: int) -> bool:
    """One-dimensional Gauss sum reciprocity, verified exactly.

    sum_{l<n} e_(2n)^(m l^2) e_phi^(psi l)
      = (1+i) sqrt(n/2m) sum_{l<m} e_(2m phi^2)^(-n(l phi + psi)^2).
    Requires n*m even and phi | n*psi, all of m, n, phi positive.
    """
    if m < 1 or n < 1 or phi < 1:
        raise ValueError("m, n, phi must be positive")
    if (n * m) % 2:
        raise ValueError("n*m must be even")
    if (n * psi) % phi:
        raise ValueError("phi must divide n*psi")

    ml = math.lcm(2 * n, phi)
    lhs = CycNumber.from_terms(
        ml, [((m * l * l * (ml // (2 * n)) + psi * l * (ml // phi)) % ml, 1)
             for l in range(n)])

    mr = 2 * m * phi * phi
    rhs_sum = CycNumber.from_terms(
        mr, [((-n * (l * phi + psi) ** 2) % mr, 1) for l in range(m)])
    one_plus_i = CycNumber.from_rational(1, 4) + CycNumber.root(4)
    # sqrt(n/2m) = sqrt(2mn) / (2m)
    rhs = one_plus_i * sqrt_cyc(2 * m * n) * rhs_sum / (2 * m)
    return lhs == rhs
