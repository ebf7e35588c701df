"""Elementary number theory used by the closed forms.

Jacobi symbols, the epsilon(x) fourth-root factor, starred modular inverses
with the sign normalization n*n_{*m} + m*m_{*n} = 1 and 0 < sn(n)n_{*m} < |m|,
Dedekind sums, and negative continued fractions with all entries >= 2.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .exactalg import CycNumber, prime_factors


def sn(x: int) -> int:
    """Sign of a nonzero integer."""
    if x == 0:
        raise ValueError("sign of zero is undefined here")
    return 1 if x > 0 else -1


def jacobi(a: int, b: int) -> int:
    """Jacobi symbol (a/b) for odd positive b; (a/1) = 1."""
    if b <= 0 or b % 2 == 0:
        raise ValueError("jacobi requires positive odd b")
    a %= b
    result = 1
    while a:
        while a % 2 == 0:
            a //= 2
            if b % 8 in (3, 5):
                result = -result
        a, b = b, a
        if a % 4 == 3 and b % 4 == 3:
            result = -result
        a %= b
    return result if b == 1 else 0


def epsilon4(x: int) -> CycNumber:
    """epsilon(x) = 1 for x = 1 mod 4, i for x = 3 mod 4 (modulus-4 value)."""
    if x % 2 == 0:
        raise ValueError("epsilon4 requires odd x")
    if x % 4 == 1:
        return CycNumber.from_rational(1, 4)
    return CycNumber.root(4)


def star_inverse(x: int, r: int) -> int:
    """x_{*r}: the inverse of x mod r in {1,...,r}, with x_{*1} := 0."""
    if r < 1:
        raise ValueError("modulus must be positive")
    if r == 1:
        return 0
    if math.gcd(x, r) != 1:
        raise ValueError(f"{x} is not invertible mod {r}")
    return pow(x, -1, r)


@dataclass(frozen=True)
class StarInversePair:
    """Solution of n*n_{*m} + m*m_{*n} = 1 with 0 < sn(n)*n_{*m} < |m|."""

    n_star_m: int
    m_star_n: int


def star_pair(n: int, m: int) -> StarInversePair:
    """Starred inverse pair for coprime n, m (m nonzero).

    For |m| = 1 the conventions give n_{*m} = 0, so that 1_{*m} = 1 and
    m_{*1} = 0 hold in the degenerate cases.
    """
    if m == 0:
        raise ValueError("m must be nonzero")
    if math.gcd(n, m) != 1:
        raise ValueError("star_pair requires coprime arguments")
    if abs(m) == 1:
        return StarInversePair(0, m)
    inv = pow(n, -1, abs(m))           # in {1, ..., |m|-1}
    nsm = inv if n > 0 else inv - abs(m)
    msn, rem = divmod(1 - n * nsm, m)
    if rem:
        raise AssertionError("star_pair bookkeeping failed")
    return StarInversePair(nsm, msn)


def dedekind_sum(a: int, b: int) -> Fraction:
    """Dedekind sum s(a,b) = sum_n ((n/b))((an/b)), exact.

    Uses s(a,b) = s(a,-b) = -s(-a,b) to reduce to 0 < b; s(a,1) = 0.
    """
    if b == 0:
        raise ValueError("b must be nonzero")
    b = abs(b)
    if math.gcd(a, b) != 1:
        raise ValueError("dedekind_sum requires gcd(a,b) = 1")
    if b == 1:
        return Fraction(0)
    sign = 1
    if a < 0:
        sign, a = -1, -a
    a %= b
    total = Fraction(0)
    for n in range(1, b):
        an = a * n % b
        if an:
            total += (Fraction(n, b) - Fraction(1, 2)) * (Fraction(an, b) - Fraction(1, 2))
    return sign * total


def neg_continued_fraction(b: int, a: int) -> list[int]:
    """Entries m_1..m_n >= 2 with b/a = m_n - 1/(m_{n-1} - 1/(... - 1/m_1)).

    Requires 0 < a < b coprime.  Computed by repeated ceiling division; the
    reconstruction identity is re-checked before returning.
    """
    if not 0 < a < b:
        raise ValueError("neg_continued_fraction requires 0 < a < b")
    if math.gcd(a, b) != 1:
        raise ValueError("neg_continued_fraction requires gcd(a,b) = 1")
    seq = hopf_chain_framings(b, a)
    assert all(m >= 2 for m in seq)
    return seq


def hopf_chain_framings(b: int, a: int) -> list[int]:
    """Framings m_1..m_n presenting b/a surgery as a Hopf chain.

    Generalizes neg_continued_fraction to any coprime pair with a > 0; the
    entries are >= 2 exactly when 0 < a < b.  Reconstruction is asserted.
    """
    if a <= 0:
        raise ValueError("hopf_chain_framings requires a > 0")
    if math.gcd(a, b) != 1:
        raise ValueError("hopf_chain_framings requires gcd(a,b) = 1")
    seq = []
    p, q = b, a
    while True:
        if q == 1:
            seq.append(p)
            break
        m = -((-p) // q)               # ceil(p/q)
        seq.append(m)
        p, q = q, m * q - p
    seq.reverse()                      # m_1 first (innermost)
    value = Fraction(seq[0])
    for m in seq[1:]:
        value = m - 1 / value
    assert value == Fraction(b, a), "continued fraction reconstruction failed"
    return seq


def prime_power_decomposition(n: int) -> list[int]:
    """Multiset of prime powers p^k with product |n|; empty for |n| = 1."""
    n = abs(n)
    if n == 0:
        raise ValueError("n must be nonzero")
    return [p ** _valuation(n, p) for p in prime_factors(n)]


def is_prime_power_or_unit(n: int) -> bool:
    """True for n = +-1 or +-p^k with p prime."""
    return abs(n) == 1 or len(prime_factors(n)) == 1


def _valuation(n: int, p: int) -> int:
    v = 0
    while n % p == 0:
        n //= p
        v += 1
    return v


def valuation(n: int, p: int) -> int:
    """Largest v with p^v | n (n nonzero)."""
    if n == 0:
        raise ValueError("valuation of zero")
    return _valuation(abs(n), p)
