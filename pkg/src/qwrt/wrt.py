"""The quantum (WRT) invariant pipeline.

Color-set state sums F over the supported surgery presentations (Hopf chains
with an optional terminal meridian, diagonal unlinks), the normalizations tau
and tau', the closed forms for lens spaces with a colored unknot inside, and
the SU(2)/SO(3) comparison.

State sums are evaluated in the group ring Z[Z/4r] (plain integer vectors
with monomial shifts) and reduced modulo the cyclotomic polynomial only at
the end; this is what makes the closed-vs-brute acceptance grid affordable.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache

from .exactalg import (SO3, SU2, CycNumber, QuarterLaurent, RootSpec,
                       eval_at_root)
from .gauss import gamma, gamma_is_zero
from .jones import jones_hopf_chain
from .numtheory import (dedekind_sum, hopf_chain_framings, jacobi,
                        prime_power_decomposition, sn, star_inverse, star_pair)


# ---------------------------------------------------------------------------
# Manifold specifications
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class LensPiece:
    """M(b,a;d): the lens space L(b,a) with an unknot colored d inside."""

    b: int
    a: int
    d: int = 1

    def __post_init__(self):
        if self.b == 0:
            raise ValueError("lens parameter b must be nonzero")
        if math.gcd(self.a, self.b) != 1:
            raise ValueError("lens parameters must be coprime")
        if self.d < 1:
            raise ValueError("knot color must be >= 1")

    def homology_order(self) -> int:
        return abs(self.b)


@dataclass(frozen=True)
class DiagonalPiece:
    """Framed unlink with diagonal linking matrix; framings are +-1 or
    +-(prime power).  An optional odd color attaches a meridian to one
    component (index knot_index)."""

    framings: tuple[int, ...]
    knot_color: int | None = None
    knot_index: int = 0

    def __post_init__(self):
        from .numtheory import is_prime_power_or_unit
        if not self.framings:
            raise ValueError("need at least one framing")
        for f in self.framings:
            if f == 0 or not is_prime_power_or_unit(f):
                raise ValueError("framings must be nonzero prime powers or units")
        if self.knot_color is not None:
            if self.knot_color < 1 or self.knot_color % 2 == 0:
                raise ValueError("knot color must be a positive odd integer")
            if not 0 <= self.knot_index < len(self.framings):
                raise ValueError("knot index out of range")

    def homology_order(self) -> int:
        p = 1
        for f in self.framings:
            p *= abs(f)
        return p


@dataclass(frozen=True)
class ManifoldSpec:
    """Connected sum of lens pieces and diagonal pieces."""

    pieces: tuple

    def __post_init__(self):
        for p in self.pieces:
            if not isinstance(p, (LensPiece, DiagonalPiece)):
                raise ValueError("pieces must be LensPiece or DiagonalPiece")

    def homology_order(self) -> int:
        h = 1
        for p in self.pieces:
            h *= p.homology_order()
        return h


@dataclass(frozen=True)
class WrtValue:
    value: CycNumber
    theory: str
    root: RootSpec


# ---------------------------------------------------------------------------
# Color sets and the state-sum engine
# ---------------------------------------------------------------------------

def color_set(theory: str, r: int) -> list[int]:
    """N_SU2 = {0..2r-1}; N_SO3 keeps the odd members (and needs odd r)."""
    if r < 1:
        raise ValueError("root order must be positive")
    if theory == SU2:
        return list(range(2 * r))
    if theory == SO3:
        if r % 2 == 0:
            raise ValueError("SO3 color sets need odd r")
        return list(range(1, 2 * r, 2))
    raise ValueError(f"unknown theory {theory!r}")


class _GroupRing:
    """Thin helper for integer vectors over Z[Z/m] with monomial shifts."""

    def __init__(self, m: int):
        self.m = m

    def zero(self):
        return [0] * self.m

    def add_shift(self, acc, vec, shift: int, sign: int = 1):
        m = self.m
        shift %= m
        for e, c in enumerate(vec):
            if c:
                acc[(e + shift) % m] += sign * c
        return acc

    def monomial(self, e: int):
        vec = self.zero()
        vec[e % self.m] = 1
        return vec


def _chain_state_sum(framings, d: int, xi: RootSpec) -> CycNumber:
    """F for a Hopf chain with terminal meridian colored d.

    Sums J * prod [j_i] over the color set.  The per-color summand is
    prod_i q^(m_i (j_i^2-1)/4) * {j_1} * prod {j_i j_(i+1)} * {j_n d} divided
    by {1}^(n+1); the division is performed once, in the cyclotomic field.
    """
    r, l = xi.r, xi.l
    colors = color_set(xi.theory, r)
    if r == 1:
        return _chain_state_sum_symbolic(framings, d, xi, colors)
    m4 = 4 * r
    ring = _GroupRing(m4)
    n = len(framings)
    # level 1: g[j] = u^(m_1 (j^2-1)) * {j}
    state = {}
    for j in colors:
        vec = ring.zero()
        w = l * framings[0] * (j * j - 1)
        ring.add_shift(vec, _ONE, w + 2 * l * j, 1)
        ring.add_shift(vec, _ONE, w - 2 * l * j, -1)
        state[j] = vec
    for i in range(1, n):
        new = {t: ring.zero() for t in colors}
        for j, vec in state.items():
            if not any(vec):
                continue
            for t in colors:
                w = l * framings[i] * (t * t - 1)
                ring.add_shift(new[t], vec, w + 2 * l * j * t, 1)
                ring.add_shift(new[t], vec, w - 2 * l * j * t, -1)
        state = new
    total = ring.zero()
    for j, vec in state.items():
        ring.add_shift(total, vec, 2 * l * j * d, 1)
        ring.add_shift(total, vec, -2 * l * j * d, -1)
    numerator = CycNumber.from_terms(m4, enumerate(total))
    brace_one = CycNumber.from_terms(m4, [(2 * l % m4, 1), (-2 * l % m4, -1)])
    return numerator * brace_one.inverse() ** (n + 1)


_ONE = [1]


def _chain_state_sum_symbolic(framings, d, xi, colors) -> CycNumber:
    """Literal per-term evaluation; used at r = 1 where {1}(xi) vanishes.

    The summand J * prod [j_i] equals (brace product) / {1}^(n+1); the
    division is exact in the Laurent ring, so each term evaluates literally.
    """
    from .exactalg import QuarterLaurent, brace
    n = len(framings)
    total = CycNumber.from_rational(0, 4 * xi.r)
    for tup in _product(colors, n):
        poly = brace(tup[0])
        for a, b in zip(tup, tup[1:]):
            poly = poly * brace(a * b)
        poly = poly * brace(tup[-1] * d)
        shift = sum(m * (j * j - 1) for m, j in zip(framings, tup))
        poly = poly * QuarterLaurent.u_power(shift)
        for _ in range(n + 1):
            poly = _div_brace_one(poly)
        total = total + eval_at_root(poly, xi)
    return total


def _div_brace_one(poly):
    from .exactalg import QuarterLaurent
    shifted = QuarterLaurent({e + 2: -c for e, c in poly.coeffs.items()})
    return shifted.div_one_minus_u_power(4)


def _product(colors, n):
    if n == 0:
        yield ()
        return
    for tup in _product(colors, n - 1):
        for c in colors:
            yield tup + (c,)


def f_sum(family, xi: RootSpec) -> CycNumber:
    """Definitional state sum F for a supported family.

    `family` is a LensPiece (presented as a Hopf chain), a DiagonalPiece, or
    a raw (framings, d) pair.
    """
    if isinstance(family, LensPiece):
        framings, d = _lens_presentation(family)
        return _chain_state_sum(framings, d, xi)
    if isinstance(family, DiagonalPiece):
        total = CycNumber.from_rational(1, 1)
        for i, f in enumerate(family.framings):
            d = family.knot_color if (family.knot_color and i == family.knot_index) else 1
            total = total * _chain_state_sum((f,), d, xi)
        return total
    framings, d = family
    return _chain_state_sum(tuple(framings), d, xi)


def _lens_presentation(piece: LensPiece) -> tuple[tuple[int, ...], int]:
    """Hopf-chain framings presenting b/a surgery (terminal meridian gets d).

    Normalizes the fraction so the denominator is positive; the chain entries
    are >= 2 exactly when 0 < a < b, but any coprime pair is accepted.
    """
    b, a = piece.b, piece.a
    if a < 0:
        b, a = -b, -a
    if abs(b) == 1 and a == 1:
        return (b,), piece.d
    return tuple(hopf_chain_framings(b, a)), piece.d


def color_weighted_power_sum(b: int, a: int, xi: RootSpec) -> CycNumber:
    """S_a = sum over the color set of q^(b(n^2-1)/4) q^(n a), in closed form.

    Splitting even and odd colors turns S_a into Gauss sums:
      SO3:  S_a = xi^a G(r, b, b+2a)           (transported to e_r^l)
      SU2:  S_a = e_(4r)^(-lb) G(r, b, 2a) + xi^a G(r, b, b+2a).
    S_0 is gamma_b(xi).
    """
    from .gauss import gauss_closed
    r, l = xi.r, xi.l
    odd_part = (CycNumber.root(r, a * l % r)
                * gauss_closed(r, l * b % r, l * (b + 2 * a) % r))
    if xi.theory == SO3:
        return odd_part
    even_part = (CycNumber.root(4 * r, -l * b % (4 * r))
                 * gauss_closed(r, l * b % r, l * 2 * a % r))
    return even_part + odd_part


def f_unknot_closed(b: int, xi: RootSpec) -> CycNumber:
    """F_(U^b) in closed form, exact for every b and theory.

    F * (1-q)(1-q^(-1)) = 2 S_0 - S_1 - S_(-1) with the Gauss-sum values of
    color_weighted_power_sum.  Whenever gcd(b,r) is odd this reduces to the
    textbook 2 gamma_b(xi) (1 - q^(-b_*r))^chi(c) / ((1-q)(1-q^(-1))); for
    SU2 with even gcd(b,r) the S_(+-1) terms survive and the textbook
    numerator would be wrong.  Falls back to the literal sum at r = 1.
    """
    if b == 0:
        raise ValueError("framing must be nonzero")
    r = xi.r
    if r == 1:
        return _chain_state_sum((b,), 1, xi)
    num = (2 * color_weighted_power_sum(b, 0, xi)
           - color_weighted_power_sum(b, 1, xi)
           - color_weighted_power_sum(b, -1, xi))
    x = xi.xi()
    den = (1 - x) * (1 - x.inverse())
    return num * den.inverse()


# ---------------------------------------------------------------------------
# Signature of linking matrices
# ---------------------------------------------------------------------------

def signature(matrix) -> tuple[int, int]:
    """Inertia (sigma+, sigma-) of a symmetric nondegenerate integer matrix,
    by exact rational symmetric elimination."""
    m = [[Fraction(x) for x in row] for row in matrix]
    size = len(m)
    if any(len(row) != size for row in m):
        raise ValueError("matrix must be square")
    for i in range(size):
        for j in range(i):
            if m[i][j] != m[j][i]:
                raise ValueError("matrix must be symmetric")
    pos = neg = 0
    idx = list(range(size))
    while idx:
        pivot = next((i for i in idx if m[i][i]), None)
        if pivot is None:
            # every remaining diagonal entry vanishes: split off a hyperbolic
            # pair, which contributes (+1, -1) to the inertia
            pair = next(((i, j) for i in idx for j in idx
                         if i != j and m[i][j]), None)
            if pair is None:
                raise ValueError("matrix is singular")
            i, j = pair
            a = m[i][j]
            pos += 1
            neg += 1
            rest = [k for k in idx if k not in (i, j)]
            # Schur complement of the block [[0,a],[a,0]]
            squeezed = [[m[x][y] - (m[x][i] * m[j][y] + m[x][j] * m[i][y]) / a
                         for y in rest] for x in rest]
            for xi_, x in enumerate(rest):
                for yi_, y in enumerate(rest):
                    m[x][y] = squeezed[xi_][yi_]
            idx = rest
            continue
        d = m[pivot][pivot]
        if d > 0:
            pos += 1
        else:
            neg += 1
        rest = [k for k in idx if k != pivot]
        for x in rest:
            f = m[x][pivot] / d
            for y in rest:
                m[x][y] -= f * m[pivot][y]
        idx = rest
    return pos, neg


def chain_linking_matrix(framings) -> list[list[int]]:
    n = len(framings)
    mat = [[0] * n for _ in range(n)]
    for i, f in enumerate(framings):
        mat[i][i] = f
        if i + 1 < n:
            mat[i][i + 1] = mat[i + 1][i] = 1
    return mat


# ---------------------------------------------------------------------------
# tau and tau'
# ---------------------------------------------------------------------------

def _as_spec(m) -> ManifoldSpec:
    if isinstance(m, ManifoldSpec):
        return m
    if isinstance(m, (LensPiece, DiagonalPiece)):
        return ManifoldSpec((m,))
    raise ValueError("expected a manifold specification")


@lru_cache(maxsize=None)
def _f_unknot_cached(b: int, xi: RootSpec) -> CycNumber:
    return _chain_state_sum((b,), 1, xi)


def tau(manifold, xi: RootSpec) -> WrtValue:
    """tau = F / (F_(U^+1)^(sigma+) F_(U^-1)^(sigma-)), multiplicative over
    connected sums.  SU2 requires odd |H_1|."""
    spec = _as_spec(manifold)
    if xi.theory == SU2 and spec.homology_order() % 2 == 0:
        raise ValueError("SU2 invariants here need odd first homology")
    total = CycNumber.from_rational(1, 1)
    for piece in spec.pieces:
        total = total * _tau_piece(piece, xi)
    return WrtValue(total, xi.theory, xi)


def _tau_piece(piece, xi: RootSpec) -> CycNumber:
    if isinstance(piece, LensPiece):
        framings, d = _lens_presentation(piece)
        f_val = _chain_state_sum(framings, d, xi)
        pos, neg = signature(chain_linking_matrix(framings))
    else:
        f_val = f_sum(piece, xi)
        pos = sum(1 for f in piece.framings if f > 0)
        neg = sum(1 for f in piece.framings if f < 0)
    norm = (_f_unknot_cached(1, xi) ** pos) * (_f_unknot_cached(-1, xi) ** neg)
    if norm.is_zero():
        raise ZeroDivisionError("vanishing normalizer F_(U^+-1)")
    return f_val * norm.inverse()


def tau_prime(manifold, xi: RootSpec) -> WrtValue:
    """tau' = tau / prod_i tau_(L(|b_i|,1)) over the prime-power multiset of
    the first homology order."""
    spec = _as_spec(manifold)
    t = tau(spec, xi)
    value = t.value
    for piece in spec.pieces:
        if isinstance(piece, LensPiece):
            bs = prime_power_decomposition(piece.b)
        else:
            bs = [pp for f in piece.framings for pp in prime_power_decomposition(f)]
        for beta in bs:
            ren = _tau_piece(LensPiece(beta, 1), xi)
            if ren.is_zero():
                raise ZeroDivisionError("vanishing renormalizer tau_(L(b,1))")
            value = value * ren.inverse()
    return WrtValue(value, xi.theory, xi)


# ---------------------------------------------------------------------------
# Lens space closed form
# ---------------------------------------------------------------------------

def lens_tau_prime_closed(b: int, a: int, d: int, xi: RootSpec) -> CycNumber:
    """tau'_(M(b,a;d)) by the closed formula.

    Returns 0 when c = (b,r) divides neither |a|d - 1 nor |a|d + 1.  The
    chi^+ branch (divisibility c | |a|d - 1) is the reference instantiation;
    the chi^- branch (c | |a|d + 1) carries the opposite overall sign, per
    the chi^(+-)(d) = +-1 bookkeeping of the state-sum reduction.  For c = 1
    both divisibilities hold and the chi^+ instantiation is used.

    For composite |b| the closed formula natively computes
    tau / tau_(L(|b|,1)); it is corrected by the closed-form ratio
    tau_(L(|b|,1)) / prod tau_(L(p^k,1)) so the value matches the
    prime-power-multiset renormalization used by tau_prime.
    """
    if math.gcd(a, b) != 1 or b == 0:
        raise ValueError("need coprime a, b with b nonzero")
    if d < 1 or d % 2 == 0:
        raise ValueError("the closed form is stated for positive odd d")
    if xi.theory == SU2 and b % 2 == 0:
        raise ValueError("SU2 lens formulas need odd b")
    if b < 0:
        # b/a and (-b)/(-a) framings are the same surgery presentation
        b, a = -b, -a
    r = xi.r
    c = math.gcd(abs(b), r)
    if (abs(a) * d - 1) % c == 0:
        sigma, branch_sign = -1, 1
    elif (abs(a) * d + 1) % c == 0:
        sigma, branch_sign = 1, -1
    else:
        return CycNumber.from_rational(0, 4 * r)
    value = branch_sign * _lens_closed_branch(b, a, d, xi, sigma)
    return value * _composite_normalizer_ratio(abs(b), xi)


def _composite_normalizer_ratio(n: int, xi: RootSpec) -> CycNumber:
    """tau_(L(n,1)) / prod tau_(L(p^k,1)) over the prime powers of n,
    as a ratio of closed-form F values (1 for n a prime power)."""
    parts = prime_power_decomposition(n)
    if len(parts) <= 1:
        return CycNumber.from_rational(1, 1)
    value = f_unknot_closed(n, xi) * f_unknot_closed(1, xi) ** (len(parts) - 1)
    for beta in parts:
        value = value * f_unknot_closed(beta, xi).inverse()
    return value


def _lens_closed_branch(b: int, a: int, d: int, xi: RootSpec, sigma: int) -> CycNumber:
    r = xi.r
    c = math.gcd(abs(b), r)
    bp = b // c                       # signed b' = b/c
    rp = r // c
    sa, sb = sn(a), sn(b)
    a_star_b = star_pair(a, b).n_star_m
    bp_star_rp = star_inverse(bp, rp)

    # common ratio factor (only for c = 1, where always sigma = -1)
    if c == 1:
        b_star_r = star_inverse(b, r)
        x = xi.xi()
        num = 1 - x ** ((sigma * sa * d * b_star_r) % r)
        den = 1 - x ** ((sigma * sb * b_star_r) % r)
        ratio = num * den.inverse()
    else:
        ratio = CycNumber.from_rational(1, 1)

    s_ab = (1 - sn(a * b)) // 2       # 0 or 1
    quad = a_star_b + sigma * sa * d  # c | a*quad^2 by the branch divisibility
    u_common = (12 * dedekind_sum(1, b) - 12 * sb * dedekind_sum(a, b)
                + Fraction(a * (1 - d * d) + 2 * (-sigma * sa * d - sb), b))

    if xi.theory == SO3:
        u = u_common + Fraction(a * quad * quad, b)
        assert u.denominator == 1, "u^SO3 must be an integer"
        sign = -1 if (((c + 1) // 2) * s_ab) % 2 else 1
        lead = jacobi(abs(a), c)
        four_star = star_inverse(4, r)
        quad_term, rem = divmod(a * quad * quad, c)
        assert rem == 0, "chi-branch divisibility violated"
        exponent = (four_star * (int(u) - bp_star_rp * quad_term)) % r
        return sign * lead * ratio * CycNumber.root(r, exponent * xi.l % r)

    # SU2: the exponent counts powers of the designated fourth root e_(4r)^l
    w = abs(a) * d + sigma            # c | w by the branch divisibility
    quad2 = a_star_b * w * w * (sb * bp - 1) ** 2
    u = u_common + Fraction(quad2, b)
    assert u.denominator == 1, "u^SU2 must be an integer"
    sign = -1 if (((bp + 1) // 2) * s_ab) % 2 else 1
    lead = jacobi(abs(a), abs(bp))
    quad_term, rem = divmod(quad2, c)
    assert rem == 0, "chi-branch divisibility violated"
    total4 = int(u) - quad_term * bp_star_rp
    return sign * lead * ratio * CycNumber.root(4 * r, xi.l * total4 % (4 * r))


def su2_so3_relation_check(manifold, xi: RootSpec) -> bool:
    """Verify tau'^SU2(xi) = tau'^SO3(xi) * tau'^SU2(e_3) exactly (odd r)."""
    if xi.r % 2 == 0:
        raise ValueError("the SU2/SO3 relation is stated at odd-order roots")
    so3 = RootSpec(xi.r, xi.l, SO3)
    su2 = RootSpec(xi.r, xi.l if xi.l % 2 else xi.l + xi.r, SU2)
    lhs = tau_prime(manifold, su2).value
    rhs = tau_prime(manifold, so3).value * tau_prime(manifold, RootSpec(3, 1, SU2)).value
    return lhs.lift(12 * xi.r) == rhs.lift(12 * xi.r)
