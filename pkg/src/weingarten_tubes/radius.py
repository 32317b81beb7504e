"""Exact positive-root machinery and the radius / star-radius sets.

A radius is reported as an :class:`AlgebraicRadius`: a square-free
defining polynomial together with a half-open rational interval
``(lo, hi]`` isolating exactly one positive root, plus the exact value
whenever that root is rational.  Rational roots are found by candidate
testing, the rest by Sturm bisection; intervals refine on demand but no
decision ever depends on interval width.

The three ambient spaces share one code path.  The eps = -1 Lorentzian
lane is the eps = +1 lane applied to the sign-transformed polynomial,
and hyperbolic radii are computed in the substituted variable
rho = sinh(r) (reported alongside a numeric r = asinh(rho) rendering),
so every membership decision stays in exact rational arithmetic.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from .errors import InternalMismatch, ZeroPolynomial
from .polyalg import (
    Poly1,
    Poly2,
    check_epsilon,
    epsilon_transform,
    gamma_cleared,
    is_in_tube_ideal,
)

DISPLAY_WIDTH = Fraction(1, 10**12)

SPACES = ("euclidean", "lorentzian", "hyperbolic")


@dataclass(frozen=True)
class SpaceTag:
    """Ambient-space selector; eps is meaningful only for the Lorentzian
    space and fixed +1 otherwise."""

    space: str
    eps: int = 1

    def __post_init__(self):
        if self.space not in SPACES:
            raise ValueError(f"unknown space {self.space!r}")
        check_epsilon(self.eps)
        if self.space != "lorentzian" and self.eps != 1:
            raise ValueError("eps = -1 is only meaningful in the Lorentzian space")


EUCLIDEAN = SpaceTag("euclidean")
LORENTZIAN_POS = SpaceTag("lorentzian", 1)
LORENTZIAN_NEG = SpaceTag("lorentzian", -1)
HYPERBOLIC = SpaceTag("hyperbolic")


# ---------------------------------------------------------------------------
# univariate root tools


def _primitive(p: Poly1) -> Poly1:
    """Integer-coefficient scalar multiple with coprime coefficients and a
    positive leading coefficient."""
    if p.is_zero:
        return p
    den = math.lcm(*(c.denominator for c in p.coeffs))
    nums = [int(c * den) for c in p.coeffs]
    g = math.gcd(*nums)
    if nums[-1] < 0:
        g = -g
    return Poly1([Fraction(n, g) for n in nums])


def _gcd(a: Poly1, b: Poly1) -> Poly1:
    while not b.is_zero:
        a, b = b, a.divmod(b)[1]
    return _primitive(a)


def _squarefree(p: Poly1) -> Poly1:
    if p.degree < 1:
        return _primitive(p)
    g = _gcd(p, p.derivative())
    if g.degree < 1:
        return _primitive(p)
    quo, rem = p.divmod(g)
    assert rem.is_zero
    return _primitive(quo)


def _sturm_chain(s: Poly1) -> list[Poly1]:
    chain = [s, s.derivative()]
    if chain[1].is_zero:
        return chain[:1]
    while chain[-1].degree > 0:
        rem = chain[-2].divmod(chain[-1])[1]
        if rem.is_zero:
            break
        chain.append(-rem)
    return chain


def _variations(chain: list[Poly1], v: Fraction) -> int:
    signs = []
    for p in chain:
        val = p.eval(v)
        if val != 0:
            signs.append(1 if val > 0 else -1)
    return sum(1 for a, b in zip(signs, signs[1:]) if a != b)


def _count_roots_halfopen(p: Poly1, lo: Fraction, hi: Fraction) -> int:
    """Distinct real roots of p in (lo, hi]."""
    if p.is_zero:
        raise ZeroPolynomial("cannot count roots of the zero polynomial")
    s = _squarefree(p)
    count = 1 if s.eval(hi) == 0 else 0
    for v in (lo, hi):
        while s.degree >= 1 and s.eval(v) == 0:
            s = s.divmod(Poly1([-v, 1]))[0]
    if s.degree >= 1:
        chain = _sturm_chain(s)
        count += _variations(chain, lo) - _variations(chain, hi)
    return count


def _has_root_in(p: Poly1, lo: Fraction, hi: Fraction) -> bool:
    return _count_roots_halfopen(p, lo, hi) >= 1


def _cauchy_bound(p: Poly1) -> Fraction:
    lead = abs(p.coeffs[-1])
    return 1 + max(abs(c) for c in p.coeffs) / lead


def _divisors(n: int) -> list[int]:
    n = abs(n)
    small, large = [], []
    d = 1
    while d * d <= n:
        if n % d == 0:
            small.append(d)
            if d != n // d:
                large.append(n // d)
        d += 1
    return small + large[::-1]


def _rational_roots(s: Poly1) -> list[Fraction]:
    """All rational roots of a primitive integer polynomial (any sign)."""
    roots = []
    coeffs = list(s.coeffs)
    shift = 0
    while coeffs and coeffs[0] == 0:
        coeffs.pop(0)
        shift += 1
    if shift:
        roots.append(Fraction(0))
    if not coeffs or len(coeffs) == 1:
        return roots
    stripped = Poly1(coeffs)
    a0 = int(coeffs[0])
    an = int(coeffs[-1])
    seen = set()
    for num in _divisors(a0):
        for den in _divisors(an):
            for cand in (Fraction(num, den), Fraction(-num, den)):
                if cand in seen:
                    continue
                seen.add(cand)
                if stripped.eval(cand) == 0:
                    roots.append(cand)
    return sorted(roots)


@dataclass(frozen=True)
class AlgebraicRadius:
    """A positive real root: square-free defining polynomial plus an
    isolating half-open interval (lo, hi], and the exact value when the
    root is rational."""

    defining_poly: Poly1
    lo: Fraction
    hi: Fraction
    exact_value: Optional[Fraction] = None

    def __post_init__(self):
        if self.lo < 0 or not self.lo < self.hi:
            raise ValueError("isolating interval must satisfy 0 <= lo < hi")
        if self.exact_value is not None:
            if self.defining_poly.eval(self.exact_value) != 0:
                raise ValueError("exact_value is not a root of the defining polynomial")
            if not (self.lo < self.exact_value <= self.hi):
                raise ValueError("exact_value outside the isolating interval")

    @property
    def is_rational(self) -> bool:
        return self.exact_value is not None

    def refined(self, width: Fraction = DISPLAY_WIDTH) -> "AlgebraicRadius":
        """Equivalent radius whose interval has length <= width."""
        lo, hi = self.lo, self.hi
        if self.exact_value is not None:
            lo = max(lo, self.exact_value - width)
            return AlgebraicRadius(self.defining_poly, lo, self.exact_value, self.exact_value)
        sign_lo = 1 if self.defining_poly.eval(lo) > 0 else -1
        while hi - lo > width:
            mid = (lo + hi) / 2
            val = self.defining_poly.eval(mid)
            if val == 0:
                # landed exactly on the root
                return AlgebraicRadius(self.defining_poly, lo, mid, mid)
            if (1 if val > 0 else -1) == sign_lo:
                lo = mid
            else:
                hi = mid
        return AlgebraicRadius(self.defining_poly, lo, hi, None)

    def approx(self, width: Fraction = DISPLAY_WIDTH) -> float:
        if self.exact_value is not None:
            return float(self.exact_value)
        fine = self.refined(width)
        return float((fine.lo + fine.hi) / 2)

    def contains(self, v: Fraction) -> bool:
        return self.lo < v <= self.hi

    def __repr__(self) -> str:
        if self.exact_value is not None:
            return f"AlgebraicRadius({self.exact_value})"
        return (
            f"AlgebraicRadius({self.defining_poly.to_string('r')} on "
            f"({self.lo}, {self.hi}])"
        )


def vanishes_at(p: Poly1, rad: AlgebraicRadius) -> bool:
    """Exact test p(rho) = 0 at the (possibly irrational) root rho
    described by rad."""
    if p.is_zero:
        return True
    if rad.exact_value is not None:
        return p.eval(rad.exact_value) == 0
    common = _gcd(_squarefree(p), rad.defining_poly)
    return common.degree >= 1 and _has_root_in(common, rad.lo, rad.hi)


@dataclass(frozen=True)
class RadiusEntry:
    radius: AlgebraicRadius
    star: bool


@dataclass(frozen=True)
class RadiusSet:
    """Either every positive radius (axis restriction identically zero)
    or a finite sorted list of isolated radii with star flags."""

    kind: str  # "all-positive" | "finite"
    entries: tuple[RadiusEntry, ...] = ()

    def __post_init__(self):
        if self.kind not in ("all-positive", "finite"):
            raise ValueError(f"bad RadiusSet kind {self.kind!r}")
        if self.kind == "all-positive" and self.entries:
            raise ValueError("all-positive radius set carries no entries")

    @property
    def is_all_positive(self) -> bool:
        return self.kind == "all-positive"

    def star_entries(self) -> tuple[RadiusEntry, ...]:
        return tuple(e for e in self.entries if e.star)


# ---------------------------------------------------------------------------
# isolation


def isolate_positive_roots(p: Poly1) -> list[AlgebraicRadius]:
    """All roots of p in (0, +inf), as isolated AlgebraicRadius values
    sorted ascending with pairwise disjoint intervals."""
    if p.is_zero:
        raise ZeroPolynomial("cannot isolate roots of the zero polynomial")
    s = _squarefree(p)
    if s.degree < 1:
        return []
    rationals = _rational_roots(s)
    deflated = s
    for rho in rationals:
        quo, rem = deflated.divmod(Poly1([-rho, 1]))
        assert rem.is_zero
        deflated = quo
    deflated = _primitive(deflated)

    cells: list[tuple[Fraction, Fraction]] = []
    if deflated.degree >= 1:
        chain = _sturm_chain(deflated)
        bound = _cauchy_bound(deflated)
        stack = [(Fraction(0), bound)]
        while stack:
            lo, hi = stack.pop()
            n = _variations(chain, lo) - _variations(chain, hi)
            if n == 0:
                continue
            if n == 1:
                cells.append((lo, hi))
                continue
            mid = (lo + hi) / 2
            stack.append((lo, mid))
            stack.append((mid, hi))

    # shrink irrational cells until no rational root lies inside
    pos_rationals = [rho for rho in rationals if rho > 0]
    fixed_cells = []
    for lo, hi in cells:
        while any(lo < rho <= hi for rho in pos_rationals):
            mid = (lo + hi) / 2
            if _variations_count(deflated, lo, mid) == 1:
                hi = mid
            else:
                lo = mid
        fixed_cells.append((lo, hi))

    entries = [
        AlgebraicRadius(deflated, lo, hi, None) for lo, hi in fixed_cells
    ]
    for rho in pos_rationals:
        lin = _primitive(Poly1([-rho, 1]))
        lo = rho / 2
        while any(_overlaps((lo, rho), (o.lo, o.hi)) for o in entries) or any(
            lo < other <= rho for other in pos_rationals if other != rho
        ):
            lo = (lo + rho) / 2
        entries.append(AlgebraicRadius(lin, lo, rho, rho))
    entries.sort(key=lambda rad: rad.lo)
    return entries


def _variations_count(s: Poly1, lo: Fraction, hi: Fraction) -> int:
    chain = _sturm_chain(s)
    return _variations(chain, lo) - _variations(chain, hi)


def _overlaps(a: tuple[Fraction, Fraction], b: tuple[Fraction, Fraction]) -> bool:
    # (lo, hi] intervals
    return a[0] < b[1] and b[0] < a[1]


# ---------------------------------------------------------------------------
# radius sets


def axis_restriction(q: Poly2) -> Poly1:
    """The univariate restriction q0(y) = Q(0, y)."""
    terms = [(j, c) for (i, j), c in q.terms() if i == 0]
    if not terms:
        return Poly1()
    size = max(j for j, _ in terms) + 1
    coeffs = [Fraction(0)] * size
    for j, c in terms:
        coeffs[j] = c
    return Poly1(coeffs)


def _reversed_scaled(q0: Poly1, scale: int) -> Poly1:
    """(scale*t)**d * q0(1/(scale*t)) as an exact polynomial in t; its
    positive roots are 1/(scale * y*) for the positive roots y* of q0."""
    d = q0.degree
    return Poly1([q0.coeff(d - m) * Fraction(scale) ** m for m in range(d + 1)])


def radius_set(q: Poly2, tag: SpaceTag) -> RadiusSet:
    """Positive radii at which the right cylinder of that radius (and
    signal, in the Lorentzian lane) satisfies Q(K, H) = 0.

    Euclidean/Lorentzian entries are in the radius r itself; hyperbolic
    entries are in rho = sinh(r).  Star flags are left False; use
    star_radius_set for the full decision.
    """
    if q.is_zero:
        raise ZeroPolynomial("the zero relation holds on every surface; radius sets are undefined")
    w = epsilon_transform(q, tag.eps)
    q0 = axis_restriction(w)
    if q0.is_zero:
        return RadiusSet("all-positive")
    p = _reversed_scaled(q0, 2)
    if p.degree < 1:
        return RadiusSet("finite", ())
    entries = tuple(RadiusEntry(rad, False) for rad in isolate_positive_roots(p))
    return RadiusSet("finite", entries)


def _common_gamma_gcd(w: Poly2) -> Poly1:
    """gcd of the nonzero cleared coefficient polynomials g_0..g_n; its
    roots are exactly the radii at which the substitution image of w
    vanishes identically."""
    common = Poly1.zero()
    for g in gamma_cleared(w):
        common = _gcd(common, g)
    return common


def star_radius_set(q: Poly2, tag: SpaceTag) -> RadiusSet:
    """radius_set with star = True exactly where Q lies in the ideal of
    the tube relation at that radius.

    Irrational radii are decided by common vanishing of the cleared
    coefficient polynomials (gcd + Sturm count on the isolating
    interval); rational radii additionally cross-check against direct
    ideal membership.
    """
    rset = radius_set(q, tag)
    if rset.is_all_positive or not rset.entries:
        return rset
    w = epsilon_transform(q, tag.eps)
    gammas = gamma_cleared(w)
    common = _common_gamma_gcd(w)
    common_sf = _squarefree(common) if common.degree >= 1 else common
    flagged = []
    for entry in rset.entries:
        rad = entry.radius
        if rad.exact_value is not None:
            rho = rad.exact_value
            star = all(g.eval(rho) == 0 for g in gammas)
            direct = is_in_tube_ideal(q, rho, tag.eps)
            if star != direct:
                raise InternalMismatch(
                    "cleared-coefficient star decision disagrees with direct membership"
                )
        else:
            joint = _gcd(common_sf, rad.defining_poly)
            star = joint.degree >= 1 and _has_root_in(joint, rad.lo, rad.hi)
        flagged.append(RadiusEntry(rad, star))
    return RadiusSet("finite", tuple(flagged))


def star_radii_when_all_positive(q: Poly2, tag: SpaceTag) -> list[AlgebraicRadius]:
    """Star radii in the all-positive case (axis restriction identically
    zero): the common positive roots of the nonzero cleared coefficient
    polynomials."""
    if q.is_zero:
        raise ZeroPolynomial("nonzero polynomial required")
    w = epsilon_transform(q, tag.eps)
    common = _common_gamma_gcd(w)
    if common.degree < 1:
        return []
    return isolate_positive_roots(common)


def ideal_member_at(q: Poly2, rad: AlgebraicRadius, eps: int = 1) -> bool:
    """Membership of Q in the tube ideal at a possibly irrational radius:
    every cleared coefficient polynomial of the eps-transform must vanish
    at the root described by rad."""
    if q.is_zero:
        return True
    if rad.exact_value is not None:
        return is_in_tube_ideal(q, rad.exact_value, eps)
    w = epsilon_transform(q, eps)
    return all(vanishes_at(g, rad) for g in gamma_cleared(w))


def principal_radius_set(q: Poly2) -> RadiusSet:
    """Radii for the principal-curvature problem Q(k1, k2) = 0: positive
    r with Q(0, 1/r) = 0, star-flagged when Q(x, 1/r) vanishes
    identically in x (membership in the ideal of y - 1/r)."""
    if q.is_zero:
        raise ZeroPolynomial("the zero relation holds on every surface; radius sets are undefined")
    q0 = axis_restriction(q)
    if q0.is_zero:
        return RadiusSet("all-positive")
    p = _reversed_scaled(q0, 1)
    if p.degree < 1:
        return RadiusSet("finite", ())
    rows = [h for h in q.x_coefficients() if not h.is_zero]
    cleared = [_reversed_scaled(h, 1) for h in rows]
    common = Poly1.zero()
    for h in cleared:
        common = _gcd(common, h)
    common_sf = _squarefree(common) if common.degree >= 1 else common
    entries = []
    for rad in isolate_positive_roots(p):
        if rad.exact_value is not None:
            inv = 1 / rad.exact_value
            star = all(h.eval(inv) == 0 for h in rows)
            cross = all(h.eval(rad.exact_value) == 0 for h in cleared)
            if star != cross:
                raise InternalMismatch("principal star decision disagrees with cleared form")
        else:
            joint = _gcd(common_sf, rad.defining_poly)
            star = joint.degree >= 1 and _has_root_in(joint, rad.lo, rad.hi)
        entries.append(RadiusEntry(rad, star))
    return RadiusSet("finite", tuple(entries))
