"""Colored Jones values for the supported link families and the cyclotomic
expansion machinery: the basis A(n,k) and the triangular solver for the
coefficients C(k), with the strong integrality check.

Only closed-form families are supported (zero-framed unknots and Hopf chains
with a terminal colored meridian); arbitrary diagrams are out of scope.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .exactalg import QuarterLaurent, brace, pochhammer, qint


@dataclass(frozen=True)
class JonesFamily:
    """A supported link family: an unknot, or a Hopf chain with a terminal
    meridian of fixed color d (the chain colors vary)."""

    tag: str                      # "Unknot" | "HopfChain"
    framings: tuple[int, ...] = ()
    d: int = 1

    def __post_init__(self):
        if self.tag not in ("Unknot", "HopfChain"):
            raise ValueError(f"unsupported family {self.tag!r}")
        if self.tag == "HopfChain" and not self.framings:
            raise ValueError("HopfChain needs at least one framing")
        if self.d < 1:
            raise ValueError("terminal color must be >= 1")

    def jones(self, colors: tuple[int, ...]) -> QuarterLaurent:
        if self.tag == "Unknot":
            (n,) = colors
            f = self.framings[0] if self.framings else 0
            return jones_unknot(n, framing=f)
        return jones_hopf_chain(colors, self.d, self.framings)


def jones_unknot(n: int, framing: int = 0) -> QuarterLaurent:
    """J_U(n) = [n], times q^(f(n^2-1)/4) when the framing f is nonzero."""
    if n < 1:
        raise ValueError("color must be >= 1")
    value = qint(n)
    if framing:
        value = value * QuarterLaurent.u_power(framing * (n * n - 1))
    return value


def jones_hopf_chain(colors, d: int, framings) -> QuarterLaurent:
    """Colored Jones value of a Hopf chain with meridian color d.

    J = [j_1] * prod_i [j_i j_(i+1)]/[j_i] * [j_n d]/[j_n], with the framing
    factor q^(m_i (j_i^2-1)/4) per component.  The divisions [ab]/[a] are
    exact: [ab]/[a] = {ab}/{a}.
    """
    colors = tuple(colors)
    framings = tuple(framings)
    if len(colors) != len(framings):
        raise ValueError("need one color per chain component")
    if any(j < 1 for j in colors) or d < 1:
        raise ValueError("colors must be >= 1")
    value = qint(colors[0])
    for a, b in zip(colors, colors[1:]):
        value = value * _qint_ratio(a, b)
    value = value * _qint_ratio(colors[-1], d)
    shift = sum(m * (j * j - 1) for m, j in zip(framings, colors))
    return value * QuarterLaurent.u_power(shift)


def _qint_ratio(a: int, b: int) -> QuarterLaurent:
    """[a*b]/[a] = {a*b}/{a}, an exact Laurent polynomial."""
    num = brace(a * b)
    shifted = QuarterLaurent({e + 2 * a: -c for e, c in num.coeffs.items()})
    return shifted.div_one_minus_u_power(4 * a)


@lru_cache(maxsize=None)
def cyclotomic_A(n: int, k: int) -> QuarterLaurent:
    """A(n,k) = prod_{i=0}^{k} (q^n + q^(-n) - q^i - q^(-i))
                / ((1-q) (q^(k+1);q)_(k+1)); zero when k >= n."""
    if n < 1 or k < 0:
        raise ValueError("need n >= 1 and k >= 0")
    if k >= n:
        return QuarterLaurent.zero()
    num = QuarterLaurent.one()
    for i in range(k + 1):
        num = num * QuarterLaurent(
            {4 * n: 1, -4 * n: 1, 4 * i: -1, -4 * i: -1}
            if i else {4 * n: 1, -4 * n: 1, 0: -2})
    num = num.div_one_minus_u_power(4)           # / (1 - q)
    for j in range(k + 1, 2 * k + 2):            # / (q^(k+1);q)_(k+1)
        num = num.div_one_minus_u_power(4 * j)
    return num


def habiro_denominator(k: int) -> QuarterLaurent:
    """(q^(k+1);q)_(k+1) / (1-q), an integral Laurent polynomial."""
    poly = pochhammer(k + 1, k + 1)
    return poly.div_one_minus_u_power(4)


# ---------------------------------------------------------------------------
# Fraction field of Laurent polynomials (private to the C(k) solver)
# ---------------------------------------------------------------------------

class LaurentFraction:
    """Quotient num/den of QuarterLaurents, reduced by polynomial gcd."""

    __slots__ = ("num", "den")

    def __init__(self, num: QuarterLaurent, den: QuarterLaurent | None = None):
        if den is None:
            den = QuarterLaurent.one()
        if den.is_zero():
            raise ZeroDivisionError("zero denominator")
        if num.is_zero():
            den = QuarterLaurent.one()
        else:
            g = _laurent_gcd(num, den)
            num = num.exact_div(g)
            den = den.exact_div(g)
            # normalize: denominator's lowest term is monic at exponent 0
            e = den.min_exp()
            c = den.coeffs[e]
            den = QuarterLaurent({k - e: Fraction(v) / Fraction(c)
                                  for k, v in den.coeffs.items()})
            num = QuarterLaurent({k - e: Fraction(v) / Fraction(c)
                                  for k, v in num.coeffs.items()})
        self.num, self.den = num, den

    def is_laurent(self) -> bool:
        return self.den == QuarterLaurent.one()

    def as_laurent(self) -> QuarterLaurent:
        if not self.is_laurent():
            raise ArithmeticError("value is a strict rational function")
        return self.num

    def __add__(self, other):
        other = _as_fraction(other)
        return LaurentFraction(self.num * other.den + other.num * self.den,
                               self.den * other.den)

    def __sub__(self, other):
        other = _as_fraction(other)
        return LaurentFraction(self.num * other.den - other.num * self.den,
                               self.den * other.den)

    def __mul__(self, other):
        other = _as_fraction(other)
        return LaurentFraction(self.num * other.num, self.den * other.den)

    def __truediv__(self, other):
        other = _as_fraction(other)
        if other.num.is_zero():
            raise ZeroDivisionError("division by zero")
        return LaurentFraction(self.num * other.den, self.den * other.num)

    def __eq__(self, other):
        other = _as_fraction(other)
        return self.num * other.den == other.num * self.den

    def __hash__(self):
        raise TypeError("LaurentFraction is unhashable")

    def __repr__(self):
        return f"LaurentFraction[{self.num.serialize()} / {self.den.serialize()}]"


def _as_fraction(x) -> LaurentFraction:
    if isinstance(x, LaurentFraction):
        return x
    if isinstance(x, QuarterLaurent):
        return LaurentFraction(x)
    return LaurentFraction(QuarterLaurent.from_scalar(x))


def _laurent_gcd(a: QuarterLaurent, b: QuarterLaurent) -> QuarterLaurent:
    """Monic gcd of the shifted polynomials (a unit times it, really)."""
    fa = [Fraction(c) for c in a._dense(a.min_exp())]
    fb = [Fraction(c) for c in b._dense(b.min_exp())]
    while fb and any(fb):
        from .exactalg import _frac_poly_divmod
        _, r = _frac_poly_divmod(fa, fb)
        fa, fb = fb, r
    lead = fa[-1]
    return QuarterLaurent({i: c / lead for i, c in enumerate(fa) if c})


# ---------------------------------------------------------------------------
# Cyclotomic coefficients C(k)
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class CycCoeffs:
    """Solved coefficients C(0..T-1) with per-entry integrality flags.

    Each entry satisfies J(n)[n] = sum_{k<n} C(k) A(n,k) for n <= T; the flag
    records whether C(k) * (1-q)/(q^(k+1);q)_(k+1) lies in Z[q^(+-1)].
    """

    entries: tuple[QuarterLaurent, ...]
    integral: tuple[bool, ...]

    def laurent(self, k: int) -> QuarterLaurent:
        return self.entries[k]


def cyclotomic_coeffs(jones_values: dict[int, QuarterLaurent], horizon: int) -> CycCoeffs:
    """Solve J(n)[n] = sum_{k<n} C(k) A(n,k) for C(0..horizon-1).

    The system is triangular because A(n,k) = 0 for k >= n.  Solving happens
    over the fraction field, with no exactness assumed mid-solve; a strict
    rational function surviving to the end means the inputs are not the Jones
    values of a link with zero linking matrix, and raises ValueError.  The
    strong integrality property is recorded per entry, never assumed.
    """
    if horizon < 1:
        raise ValueError("horizon must be >= 1")
    missing = [n for n in range(1, horizon + 1) if n not in jones_values]
    if missing:
        raise ValueError(f"jones_values missing colors {missing}")
    raw: list[LaurentFraction] = []
    for n in range(1, horizon + 1):
        target = LaurentFraction(jones_values[n] * qint(n))
        for k in range(n - 1):
            target = target - raw[k] * cyclotomic_A(n, k)
        raw.append(target / LaurentFraction(cyclotomic_A(n, n - 1)))
    bad = [k for k, c in enumerate(raw) if not c.is_laurent()]
    if bad:
        raise ValueError(
            f"C({bad[0]}) is a strict rational function: inputs are not a "
            "valid Jones sequence for a 0-linking-matrix link")
    entries = tuple(c.as_laurent() for c in raw)
    _check_reconstruction(jones_values, entries, horizon)
    return CycCoeffs(entries, tuple(_integral_flag(c, k)
                                    for k, c in enumerate(entries)))


def _integral_flag(c: QuarterLaurent, k: int) -> bool:
    try:
        quo = c.exact_div(habiro_denominator(k))
    except ArithmeticError:
        return False
    return quo.integer_coeffs_only() and quo.whole_q_powers_only()


def _check_reconstruction(jones_values, entries, horizon: int):
    for n in range(1, horizon + 1):
        total = QuarterLaurent.zero()
        for k in range(n):
            total = total + entries[k] * cyclotomic_A(n, k)
        if not total == jones_values[n] * qint(n):
            raise ValueError(
                f"reconstruction failed at color {n}: inputs are not a valid "
                "Jones sequence for a 0-linking-matrix link")


def family_jones_values(family: JonesFamily, horizon: int) -> dict[int, QuarterLaurent]:
    """J(n) for n = 1..horizon with the family's single varying component.

    Only length-one chains have a single varying color; longer chains would
    need the multi-component expansion, which is out of scope here.
    """
    if family.tag == "Unknot":
        return {n: family.jones((n,)) for n in range(1, horizon + 1)}
    if len(family.framings) != 1:
        raise ValueError("cyclotomic coefficients need a single varying component")
    return {n: family.jones((n,)) for n in range(1, horizon + 1)}
