"""Exact arithmetic foundation.

Laurent polynomials in u = q^(1/4), cyclotomic polynomials, and cyclotomic
number fields in canonical form with Galois action.  All arithmetic is over
exact rationals (python ints and fractions.Fraction); floating point appears
only in the complex-embedding helpers used for sanity checks.

The global exponent lattice is (1/4)Z, realized as integer powers of
u = q^(1/4), so that half-integer quantum-integer exponents and the
quarter-integer framing corrections q^((n^2-1)/4) live in one ring.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

SO3 = "SO3"
SU2 = "SU2"

Scalar = "int | Fraction"


def prime_factors(n: int) -> list[int]:
    """Distinct prime factors of |n| (trial division; inputs here are small)."""
    n = abs(n)
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1 if d == 2 else 2
    if n > 1:
        out.append(n)
    return out


@lru_cache(maxsize=None)
def euler_phi(n: int) -> int:
    phi = n
    for p in prime_factors(n):
        phi -= phi // p
    return phi


# ---------------------------------------------------------------------------
# Cyclotomic polynomials
# ---------------------------------------------------------------------------

@lru_cache(maxsize=None)
def cyclotomic_poly(n: int) -> tuple[int, ...]:
    """Dense coefficients (constant term first) of Phi_n(q).

    Computed by exact division of q^n - 1 by Phi_d(q) over the proper
    divisors d of n; monic of degree phi(n).
    """
    if n < 1:
        raise ValueError("cyclotomic_poly requires n >= 1")
    poly = [0] * (n + 1)
    poly[0], poly[n] = -1, 1
    for d in range(1, n):
        if n % d == 0:
            poly = _int_poly_div_exact(poly, cyclotomic_poly(d))
    return tuple(poly)


def _int_poly_div_exact(num: list[int], den: tuple[int, ...]) -> list[int]:
    """Exact division of integer polynomials (dense, constant first)."""
    num = list(num)
    dd = len(den) - 1
    out = [0] * (len(num) - dd)
    for i in range(len(num) - 1, dd - 1, -1):
        c = num[i]
        if c:
            if c % den[dd]:
                raise ArithmeticError("non-exact polynomial division")
            c //= den[dd]
            out[i - dd] = c
            for j, a in enumerate(den):
                if a:
                    num[i - dd + j] -= c * a
    if any(num):
        raise ArithmeticError("non-exact polynomial division")
    return out


@lru_cache(maxsize=None)
def _phi_tail(n: int) -> tuple[tuple[int, int], ...]:
    """Nonzero (degree, coeff) pairs of Phi_n below the leading monic term."""
    poly = cyclotomic_poly(n)
    return tuple((i, c) for i, c in enumerate(poly[:-1]) if c)


def _reduce_mod_phi(vec: list, n: int) -> list:
    """Reduce a dense coefficient vector modulo Phi_n (synthetic division)."""
    phi = euler_phi(n)
    tail = _phi_tail(n)
    for i in range(len(vec) - 1, phi - 1, -1):
        c = vec[i]
        if c:
            vec[i] = 0
            base = i - phi
            for j, a in tail:
                vec[base + j] -= c * a
    del vec[phi:]
    while len(vec) < phi:
        vec.append(0)
    return vec


# ---------------------------------------------------------------------------
# Cyclotomic numbers
# ---------------------------------------------------------------------------

class CycNumber:
    """Element of Q(e_N) in canonical form modulo Phi_N(q).

    The coefficient vector has length phi(N) in the basis 1, e_N, ...,
    e_N^(phi(N)-1).  Values with different moduli compare equal after lifting
    both to the lcm modulus.
    """

    __slots__ = ("modulus", "coeffs")

    def __init__(self, modulus: int, coeffs):
        self.modulus = modulus
        self.coeffs = tuple(coeffs)
        if len(self.coeffs) != euler_phi(modulus):
            raise ValueError("coefficient vector length must equal phi(N)")

    # -- constructors -------------------------------------------------------

    @classmethod
    def from_terms(cls, modulus: int, terms) -> "CycNumber":
        """Build Sum c_k * e_N^k from an iterable of (k, c) or a dict."""
        vec = [0] * modulus
        items = terms.items() if isinstance(terms, dict) else terms
        for k, c in items:
            vec[k % modulus] += c
        return cls(modulus, _reduce_mod_phi(vec, modulus))

    @classmethod
    def root(cls, modulus: int, k: int = 1) -> "CycNumber":
        return cls.from_terms(modulus, [(k, 1)])

    @classmethod
    def from_rational(cls, value, modulus: int = 1) -> "CycNumber":
        vec = [0] * euler_phi(modulus)
        vec[0] = value
        return cls(modulus, vec)

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def is_one(self) -> bool:
        return self.coeffs[0] == 1 and not any(self.coeffs[1:])

    # -- ring operations ----------------------------------------------------

    def _match(self, other):
        if isinstance(other, (int, Fraction)):
            other = CycNumber.from_rational(other, self.modulus)
        if not isinstance(other, CycNumber):
            return NotImplemented, NotImplemented
        if self.modulus == other.modulus:
            return self, other
        m = math.lcm(self.modulus, other.modulus)
        return self.lift(m), other.lift(m)

    def __add__(self, other):
        a, b = self._match(other)
        if a is NotImplemented:
            return NotImplemented
        return CycNumber(a.modulus, [x + y for x, y in zip(a.coeffs, b.coeffs)])

    __radd__ = __add__

    def __sub__(self, other):
        a, b = self._match(other)
        if a is NotImplemented:
            return NotImplemented
        return CycNumber(a.modulus, [x - y for x, y in zip(a.coeffs, b.coeffs)])

    def __rsub__(self, other):
        return (-self) + other

    def __neg__(self):
        return CycNumber(self.modulus, [-x for x in self.coeffs])

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return CycNumber(self.modulus, [x * other for x in self.coeffs])
        a, b = self._match(other)
        if a is NotImplemented:
            return NotImplemented
        out = [0] * (2 * len(a.coeffs) - 1 or 1)
        for i, x in enumerate(a.coeffs):
            if x:
                for j, y in enumerate(b.coeffs):
                    if y:
                        out[i + j] += x * y
        return CycNumber(a.modulus, _reduce_mod_phi(out, a.modulus))

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            return self.inverse() ** (-n)
        result = CycNumber.from_rational(1, self.modulus)
        base = self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    def inverse(self) -> "CycNumber":
        """Multiplicative inverse (Phi_N is irreducible, so Q(e_N) is a field)."""
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero cyclotomic number")
        # extended Euclid for self (as polynomial) and Phi_N over Q
        r0 = [Fraction(c) for c in cyclotomic_poly(self.modulus)]
        r1 = [Fraction(c) for c in self.coeffs]
        s0, s1 = [Fraction(0)], [Fraction(1)]
        while True:
            while r1 and not r1[-1]:
                r1.pop()
            if len(r1) == 1:
                inv = 1 / r1[0]
                vec = [c * inv for c in s1]
                return CycNumber(self.modulus, _reduce_mod_phi(vec, self.modulus))
            q, r = _frac_poly_divmod(r0, r1)
            r0, r1 = r1, r
            s0, s1 = s1, _frac_poly_sub(s0, _frac_poly_mul(q, s1))

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            return self * (Fraction(1) / Fraction(other))
        if isinstance(other, CycNumber):
            return self * other.inverse()
        return NotImplemented

    def __eq__(self, other):
        a, b = self._match(other)
        if a is NotImplemented:
            return NotImplemented
        return all(x == y for x, y in zip(a.coeffs, b.coeffs))

    def __hash__(self):
        raise TypeError("CycNumber is unhashable (cross-modulus equality)")

    # -- structure maps -----------------------------------------------------

    def lift(self, modulus: int) -> "CycNumber":
        """Rewrite in Q(e_M) for a multiple M of the current modulus."""
        if modulus == self.modulus:
            return self
        k, rem = divmod(modulus, self.modulus)
        if rem:
            raise ValueError("lift target must be a multiple of the modulus")
        vec = [0] * modulus
        for j, c in enumerate(self.coeffs):
            if c:
                vec[j * k] += c
        return CycNumber(modulus, _reduce_mod_phi(vec, modulus))

    def descend(self, modulus: int) -> "CycNumber":
        """Rewrite in Q(e_M) for a divisor M of the modulus, if possible.

        Raises ValueError when the value does not lie in the subfield.
        """
        if self.modulus % modulus:
            raise ValueError("descend target must divide the modulus")
        k = self.modulus // modulus
        phi_small = euler_phi(modulus)
        # solve sum_j y_j * lift(e_M^j) = self by Gaussian elimination
        cols = [CycNumber.root(modulus, j).lift(self.modulus).coeffs
                for j in range(phi_small)]
        rows = len(self.coeffs)
        aug = [[Fraction(cols[j][i]) for j in range(phi_small)] + [Fraction(self.coeffs[i])]
               for i in range(rows)]
        piv_cols = []
        r = 0
        for c in range(phi_small):
            piv = next((i for i in range(r, rows) if aug[i][c]), None)
            if piv is None:
                continue
            aug[r], aug[piv] = aug[piv], aug[r]
            inv = 1 / aug[r][c]
            aug[r] = [x * inv for x in aug[r]]
            for i in range(rows):
                if i != r and aug[i][c]:
                    f = aug[i][c]
                    aug[i] = [x - f * y for x, y in zip(aug[i], aug[r])]
            piv_cols.append(c)
            r += 1
        sol = [Fraction(0)] * phi_small
        for i, c in enumerate(piv_cols):
            sol[c] = aug[i][-1]
        for i in range(r, rows):
            if aug[i][-1]:
                raise ValueError("value does not lie in the requested subfield")
        out = CycNumber(modulus, sol)
        if out.lift(self.modulus) != self:
            raise ValueError("value does not lie in the requested subfield")
        return out

    def galois(self, l: int) -> "CycNumber":
        """Ring automorphism e_N -> e_N^l for gcd(l, N) = 1."""
        if math.gcd(l, self.modulus) != 1:
            raise ValueError("galois exponent must be coprime to the modulus")
        n = self.modulus
        return CycNumber.from_terms(
            n, [((j * l) % n, c) for j, c in enumerate(self.coeffs) if c])

    def conjugate(self) -> "CycNumber":
        return self.galois(-1)

    # -- output -------------------------------------------------------------

    def to_complex(self) -> complex:
        w = cmath.exp(2j * cmath.pi / self.modulus)
        return sum(float(c) * w ** j for j, c in enumerate(self.coeffs) if c) + 0j

    def serialize(self) -> str:
        parts = ",".join(_scalar_str(c) for c in self.coeffs)
        return f"{self.modulus}:[{parts}]"

    @classmethod
    def parse(cls, text: str) -> "CycNumber":
        head, _, body = text.partition(":")
        body = body.strip()
        if not (body.startswith("[") and body.endswith("]")):
            raise ValueError(f"bad CycNumber literal: {text!r}")
        coeffs = [Fraction(p) for p in body[1:-1].split(",")] if body != "[]" else []
        coeffs = [int(c) if c.denominator == 1 else c for c in coeffs]
        return cls(int(head), coeffs)

    def __repr__(self):
        return f"CycNumber({self.serialize()!r})"


def _scalar_str(c) -> str:
    f = Fraction(c)
    return str(f.numerator) if f.denominator == 1 else f"{f.numerator}/{f.denominator}"


def _frac_poly_divmod(num, den):
    num = list(num)
    while den and not den[-1]:
        den = den[:-1]
    q = [Fraction(0)] * max(len(num) - len(den) + 1, 1)
    inv = 1 / den[-1]
    for i in range(len(num) - 1, len(den) - 2, -1):
        c = num[i] * inv
        if c:
            q[i - len(den) + 1] = c
            for j, a in enumerate(den):
                num[i - len(den) + 1 + j] -= c * a
    while num and not num[-1]:
        num.pop()
    return q, num


def _frac_poly_mul(a, b):
    out = [Fraction(0)] * (len(a) + len(b) - 1 or 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return out


def _frac_poly_sub(a, b):
    out = [Fraction(0)] * max(len(a), len(b))
    for i, x in enumerate(a):
        out[i] += x
    for i, y in enumerate(b):
        out[i] -= y
    return out


def denominators_divide(x: CycNumber, b: int) -> bool:
    """True when every coefficient denominator only has prime factors of b."""
    allowed = set(prime_factors(b))
    for c in x.coeffs:
        den = Fraction(c).denominator
        if den != 1 and not set(prime_factors(den)) <= allowed:
            return False
    return True


# ---------------------------------------------------------------------------
# Roots of unity
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class RootSpec:
    """A root of unity xi = e_r^l with theory tag and fourth root e_(4r)^l."""

    r: int
    l: int = 1
    theory: str = SO3

    def __post_init__(self):
        if self.r < 1:
            raise ValueError("root order must be positive")
        if math.gcd(self.l, self.r) != 1:
            raise ValueError("l must be coprime to r")
        if self.theory not in (SO3, SU2):
            raise ValueError(f"unknown theory {self.theory!r}")
        if self.theory == SO3 and self.r % 2 == 0:
            raise ValueError("SO3 roots must have odd order")
        if self.theory == SU2 and self.l % 2 == 0:
            # e_(4r)^l must be a primitive 4r-th root; for odd r replace l by
            # the odd representative l + r of the same root xi = e_r^l.
            raise ValueError("SU2 roots need odd l so that e_(4r)^l is primitive")

    def xi(self) -> CycNumber:
        return CycNumber.root(self.r, self.l)

    def fourth_root(self) -> CycNumber:
        return CycNumber.root(4 * self.r, self.l)

    def xi_power(self, k) -> CycNumber:
        """xi^k for an exact exponent k with denominator dividing 4."""
        k4 = Fraction(k) * 4
        if k4.denominator != 1:
            raise ValueError("exponent must be a multiple of 1/4")
        e = k4.numerator * self.l
        if e % 4 == 0:
            return CycNumber.root(self.r, e // 4)
        return CycNumber.root(4 * self.r, e)


# ---------------------------------------------------------------------------
# Laurent polynomials in u = q^(1/4)
# ---------------------------------------------------------------------------

class QuarterLaurent:
    """Exact Laurent polynomial in u (u^4 = q); coeffs maps exponent to scalar."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=None):
        if coeffs:
            self.coeffs = {e: c for e, c in coeffs.items() if c}
        else:
            self.coeffs = {}

    # -- constructors -------------------------------------------------------

    @classmethod
    def zero(cls):
        return cls()

    @classmethod
    def one(cls):
        return cls({0: 1})

    @classmethod
    def from_scalar(cls, c):
        return cls({0: c})

    @classmethod
    def u_power(cls, e: int, c=1):
        return cls({e: c})

    @classmethod
    def q_power(cls, e, c=1):
        """c * q^e for an exact exponent e with denominator dividing 4."""
        e4 = Fraction(e) * 4
        if e4.denominator != 1:
            raise ValueError("q-exponent must be a multiple of 1/4")
        return cls({e4.numerator: c})

    # -- queries ------------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.coeffs

    def items(self):
        return self.coeffs.items()

    def min_exp(self) -> int:
        return min(self.coeffs)

    def max_exp(self) -> int:
        return max(self.coeffs)

    def whole_q_powers_only(self) -> bool:
        return all(e % 4 == 0 for e in self.coeffs)

    def exponent_residues(self) -> set[int]:
        return {e % 4 for e in self.coeffs}

    def integer_coeffs_only(self) -> bool:
        return all(Fraction(c).denominator == 1 for c in self.coeffs.values())

    # -- arithmetic ---------------------------------------------------------

    def __add__(self, other):
        if isinstance(other, (int, Fraction)):
            other = QuarterLaurent.from_scalar(other)
        if not isinstance(other, QuarterLaurent):
            return NotImplemented
        out = dict(self.coeffs)
        for e, c in other.coeffs.items():
            out[e] = out.get(e, 0) + c
        return QuarterLaurent(out)

    __radd__ = __add__

    def __neg__(self):
        return QuarterLaurent({e: -c for e, c in self.coeffs.items()})

    def __sub__(self, other):
        if isinstance(other, (int, Fraction)):
            other = QuarterLaurent.from_scalar(other)
        if not isinstance(other, QuarterLaurent):
            return NotImplemented
        out = dict(self.coeffs)
        for e, c in other.coeffs.items():
            out[e] = out.get(e, 0) - c
        return QuarterLaurent(out)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return QuarterLaurent({e: c * other for e, c in self.coeffs.items()})
        if not isinstance(other, QuarterLaurent):
            return NotImplemented
        a, b = self.coeffs, other.coeffs
        if len(a) > len(b):
            a, b = b, a
        out = {}
        for e1, c1 in a.items():
            for e2, c2 in b.items():
                e = e1 + e2
                out[e] = out.get(e, 0) + c1 * c2
        return QuarterLaurent(out)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("negative powers of Laurent polynomials not supported")
        result = QuarterLaurent.one()
        base = self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = QuarterLaurent.from_scalar(other)
        if not isinstance(other, QuarterLaurent):
            return NotImplemented
        keys = set(self.coeffs) | set(other.coeffs)
        return all(self.coeffs.get(k, 0) == other.coeffs.get(k, 0) for k in keys)

    def __hash__(self):
        raise TypeError("QuarterLaurent is unhashable")

    def scalar_div(self, c):
        inv = Fraction(1, 1) / Fraction(c)
        return QuarterLaurent({e: v * inv for e, v in self.coeffs.items()})

    def map_coeffs(self, fn):
        return QuarterLaurent({e: fn(c) for e, c in self.coeffs.items()})

    # -- division -----------------------------------------------------------

    def divmod(self, other: "QuarterLaurent"):
        """Quotient and remainder; exact over Q on the shifted polynomials."""
        if other.is_zero():
            raise ZeroDivisionError("division by zero Laurent polynomial")
        if self.is_zero():
            return QuarterLaurent.zero(), QuarterLaurent.zero()
        smin, omin = self.min_exp(), other.min_exp()
        num = self._dense(smin)
        den = other._dense(omin)
        q, r = _frac_poly_divmod([Fraction(c) for c in num],
                                 [Fraction(c) for c in den])
        shift = smin - omin
        quo = QuarterLaurent({i + shift: _tighten(c) for i, c in enumerate(q) if c})
        rem = QuarterLaurent({i + smin: _tighten(c) for i, c in enumerate(r) if c})
        return quo, rem

    def exact_div(self, other: "QuarterLaurent") -> "QuarterLaurent":
        q, r = self.divmod(other)
        if not r.is_zero():
            raise ArithmeticError("non-exact Laurent division")
        return q

    def div_one_minus_u_power(self, m: int) -> "QuarterLaurent":
        """Exact division by (1 - u^m), m > 0; linear cost in the support."""
        if self.is_zero():
            return QuarterLaurent.zero()
        rem = dict(self.coeffs)
        out = {}
        top = max(rem)
        while rem:
            e = min(rem)
            if e > top:
                raise ArithmeticError("non-exact division by 1 - u^m")
            c = rem.pop(e)
            if not c:
                continue
            out[e] = out.get(e, 0) + c
            ne = e + m
            rem[ne] = rem.get(ne, 0) + c
            if rem[ne] == 0:
                del rem[ne]
        return QuarterLaurent(out)

    def _dense(self, start: int):
        end = self.max_exp()
        vec = [0] * (end - start + 1)
        for e, c in self.coeffs.items():
            vec[e - start] = c
        return vec

    # -- evaluation ---------------------------------------------------------

    def evaluate_complex(self, u: complex) -> complex:
        return sum(complex(Fraction(c)) * u ** e for e, c in self.coeffs.items())

    def serialize(self) -> str:
        if not self.coeffs:
            return "0"
        parts = []
        for e in sorted(self.coeffs):
            c = self.coeffs[e]
            mag = _scalar_str(abs(Fraction(c)))
            sign = "-" if Fraction(c) < 0 else "+"
            if e == 0:
                term = mag
            else:
                qe = Fraction(e, 4)
                es = str(qe) if qe.denominator == 1 else f"({qe})"
                term = f"q^{es}" if mag == "1" else f"{mag}*q^{es}"
            parts.append((sign, term))
        first_sign, first = parts[0]
        text = (("-" if first_sign == "-" else "") + first)
        for sign, term in parts[1:]:
            text += f" {sign} {term}"
        return text

    def __repr__(self):
        return f"QuarterLaurent[{self.serialize()}]"


def _tighten(c):
    if isinstance(c, Fraction) and c.denominator == 1:
        return c.numerator
    return c


# ---------------------------------------------------------------------------
# q-calculus primitives
# ---------------------------------------------------------------------------

def brace(n: int) -> QuarterLaurent:
    """{n} = v^n - v^(-n) with v = q^(1/2) = u^2."""
    if n == 0:
        return QuarterLaurent.zero()
    return QuarterLaurent({2 * n: 1, -2 * n: -1})


def qint(n: int) -> QuarterLaurent:
    """Quantum integer [n] = {n}/{1} = v^(n-1) + v^(n-3) + ... + v^(1-n)."""
    if n == 0:
        return QuarterLaurent.zero()
    if n < 0:
        return -qint(-n)
    return QuarterLaurent({2 * (n - 1 - 2 * i): 1 for i in range(n)})


def brace_factorial(n: int) -> QuarterLaurent:
    if n < 0:
        raise ValueError("factorial of negative integer")
    out = QuarterLaurent.one()
    for i in range(1, n + 1):
        out = out * brace(i)
    return out


def qfact(n: int) -> QuarterLaurent:
    """[n]! = [1][2]...[n]."""
    if n < 0:
        raise ValueError("factorial of negative integer")
    out = QuarterLaurent.one()
    for i in range(1, n + 1):
        out = out * qint(i)
    return out


def _div_brace(f: QuarterLaurent, m: int) -> QuarterLaurent:
    # f / (u^(2m) - u^(-2m)) = -(f shifted) / (1 - u^(4m))
    shifted = QuarterLaurent({e + 2 * m: -c for e, c in f.coeffs.items()})
    return shifted.div_one_minus_u_power(4 * m)


def qbinom(n: int, k: int) -> QuarterLaurent:
    """Gaussian binomial {n}!/({k}!{n-k}!), computed by exact division."""
    if not 0 <= k <= n:
        raise ValueError("qbinom requires 0 <= k <= n")
    k = min(k, n - k)
    out = QuarterLaurent.one()
    for i in range(n - k + 1, n + 1):
        out = out * brace(i)
    for i in range(1, k + 1):
        out = _div_brace(out, i)
    return out


def pochhammer(a, n: int) -> QuarterLaurent:
    """(x;q)_n at x = q^a: prod_{j=0}^{n-1} (1 - q^(a+j)); a may be quarter-integral."""
    if n < 0:
        raise ValueError("pochhammer length must be >= 0")
    a = Fraction(a)
    out = QuarterLaurent.one()
    for j in range(n):
        out = out * (QuarterLaurent.one() - QuarterLaurent.q_power(a + j))
    return out


# ---------------------------------------------------------------------------
# Evaluation at roots of unity
# ---------------------------------------------------------------------------

def eval_at_root(f: QuarterLaurent, xi: RootSpec,
                 inverted: int | None = None) -> CycNumber:
    """Substitute u -> e_(4r)^l and reduce; drops to modulus r when possible.

    If every exponent of f is divisible by 4 (a genuine Laurent polynomial in
    q), the result is produced at modulus r; otherwise at modulus 4r.
    When `inverted` is given, coefficient denominators must be products of its
    prime factors; anything else is a ring violation.
    """
    if inverted is not None:
        allowed = set(prime_factors(inverted))
        for c in f.coeffs.values():
            den = Fraction(c).denominator
            if den != 1 and not set(prime_factors(den)) <= allowed:
                raise ValueError(
                    f"coefficient denominator {den} is not supported by 1/{inverted}")
    if f.whole_q_powers_only():
        n = xi.r
        return CycNumber.from_terms(
            n, [((e // 4) * xi.l % n, c) for e, c in f.coeffs.items()])
    n = 4 * xi.r
    return CycNumber.from_terms(
        n, [(e * xi.l % n, c) for e, c in f.coeffs.items()])


def galois(x: CycNumber, l: int) -> CycNumber:
    """Module-level alias for the Galois action e_N -> e_N^l."""
    return x.galois(l)
