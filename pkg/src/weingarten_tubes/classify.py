"""Classification drivers.

Two directions: given a polynomial relation Q, find every tube surface
whose Gaussian and mean curvatures satisfy Q(K, H) = 0 (``solve_SQ``);
given a fixed tube, describe every polynomial relation its curvatures
satisfy (``solve_QS``).  On top of those sit the linear relation,
constant second-fundamental-form-length and principal-curvature
corollaries, and the true-nonlinear-relation verdict.

Conventions: hyperbolic radii appear in the substituted variable
rho = sinh(r) everywhere in this module, and the Lorentzian space always
contributes two lanes, one per signal eps in {-1, +1}.  The Euclidean
and hyperbolic lanes are the eps = +1 specialization of the same code
path.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Optional, Union

from .errors import (
    DegenerateRelation,
    InternalMismatch,
    LinearInput,
    NonpositiveLength,
    NonpositiveRadius,
    NotMember,
    ZeroPolynomial,
)
from .polyalg import (
    Poly1,
    Poly2,
    divide_by_tube_factor,
    epsilon_transform,
    is_in_tube_ideal,
    tube_generator,
)
from .radius import (
    EUCLIDEAN,
    HYPERBOLIC,
    LORENTZIAN_NEG,
    LORENTZIAN_POS,
    AlgebraicRadius,
    SpaceTag,
    axis_restriction,
    ideal_member_at,
    isolate_positive_roots,
    principal_radius_set,
    star_radii_when_all_positive,
    star_radius_set,
    vanishes_at,
    _gcd,
    _reversed_scaled,
)

RIGHT_CYLINDERS = "right-cylinders"
ALL_REGULAR_TUBES = "all-regular-tubes"

_ALL_TAGS = (EUCLIDEAN, LORENTZIAN_POS, LORENTZIAN_NEG, HYPERBOLIC)


def expand_spaces(spaces: Union[str, Iterable[str]] = "all") -> tuple[SpaceTag, ...]:
    """Normalize a space request into an ordered tuple of lane tags.
    The Lorentzian space expands into both signal lanes."""
    if isinstance(spaces, str):
        names = ["euclidean", "lorentzian", "hyperbolic"] if spaces == "all" else [spaces]
    else:
        names = list(spaces)
    for name in names:
        if name not in ("euclidean", "lorentzian", "hyperbolic"):
            raise ValueError(f"unknown space {name!r}")
    return tuple(tag for tag in _ALL_TAGS if tag.space in names)


@dataclass(frozen=True)
class SurfaceClass:
    """One family in the answer: the right cylinders of a radius, or all
    regular tubes of that radius.  A quotient witness (the cofactor of
    the tube generator) is attached exactly when the family is
    all-regular-tubes and the radius is rational."""

    kind: str
    radius: AlgebraicRadius
    eps: int
    quotient: Optional[Poly2] = None


@dataclass(frozen=True)
class LaneReport:
    tag: SpaceTag
    all_cylinders_any_radius: bool
    classes: tuple[SurfaceClass, ...]

    @property
    def is_empty(self) -> bool:
        return not self.all_cylinders_any_radius and not self.classes


@dataclass(frozen=True)
class ClassificationReport:
    input_poly: Poly2
    lanes: tuple[LaneReport, ...]
    principal: bool = False

    @property
    def is_empty(self) -> bool:
        return all(lane.is_empty for lane in self.lanes)


def _quotient_witness(q: Poly2, radius: AlgebraicRadius, eps: int) -> Optional[Poly2]:
    if radius.exact_value is None:
        return None
    witness = divide_by_tube_factor(q, radius.exact_value, eps)
    if witness is None:
        raise InternalMismatch("star radius failed direct division")
    return witness


def _lane(q: Poly2, tag: SpaceTag) -> LaneReport:
    rset = star_radius_set(q, tag)
    if rset.is_all_positive:
        classes = tuple(
            SurfaceClass(ALL_REGULAR_TUBES, rad, tag.eps, _quotient_witness(q, rad, tag.eps))
            for rad in star_radii_when_all_positive(q, tag)
        )
        return LaneReport(tag, True, classes)
    classes = []
    for entry in rset.entries:
        if entry.star:
            classes.append(
                SurfaceClass(
                    ALL_REGULAR_TUBES,
                    entry.radius,
                    tag.eps,
                    _quotient_witness(q, entry.radius, tag.eps),
                )
            )
        else:
            classes.append(SurfaceClass(RIGHT_CYLINDERS, entry.radius, tag.eps, None))
    return LaneReport(tag, False, tuple(classes))


def solve_SQ(q: Poly2, spaces: Union[str, Iterable[str]] = "all") -> ClassificationReport:
    """All regular tube surfaces whose curvatures satisfy Q(K, H) = 0.

    Per lane: radii outside the star set contribute right cylinders
    only; star radii contribute arbitrary regular tubes (with an exact
    quotient witness at rational radii); a vanishing axis restriction
    means right cylinders of every radius (plus any star radii found by
    common vanishing of the cleared coefficient polynomials).
    """
    if q.is_zero:
        raise ZeroPolynomial("the zero relation holds on every surface")
    return ClassificationReport(q, tuple(_lane(q, tag) for tag in expand_spaces(spaces)))


# ---------------------------------------------------------------------------
# Q(S): relations satisfied by one fixed tube


@dataclass(frozen=True)
class TubeIdentity:
    """A fixed tube surface: ambient lane, radius (rho = sinh r in the
    hyperbolic space), and whether the central curve is a geodesic."""

    tag: SpaceTag
    radius: Union[Fraction, int, AlgebraicRadius]
    is_right_cylinder: bool

    def __post_init__(self):
        r = self.radius
        if isinstance(r, AlgebraicRadius):
            return  # isolated roots are positive by construction
        if not isinstance(r, (int, Fraction)) or r <= 0:
            raise NonpositiveRadius(f"tube radius must be a positive rational, got {r!r}")
        object.__setattr__(self, "radius", Fraction(r))

    @property
    def rational_radius(self) -> Optional[Fraction]:
        return self.radius if isinstance(self.radius, Fraction) else None


@dataclass(frozen=True)
class QSDescription:
    """The set of polynomial relations satisfied by a fixed tube.

    For a right cylinder the set is not an ideal; it is exposed as the
    membership predicate ``contains`` (radius lies in the radius set of
    the candidate).  For any other regular tube it is the principal
    ideal of the tube relation; ``generator`` returns the generator
    whenever the radius is rational.
    """

    surface: TubeIdentity

    @property
    def is_ideal(self) -> bool:
        return not self.surface.is_right_cylinder

    def generator(self) -> Optional[Poly2]:
        if self.surface.is_right_cylinder:
            return None
        r = self.surface.rational_radius
        if r is None:
            return None
        return tube_generator(r, self.surface.tag.eps)

    def contains(self, q: Poly2) -> bool:
        if q.is_zero:
            return True  # the zero polynomial vanishes on every surface
        tag = self.surface.tag
        r = self.surface.radius
        if self.surface.is_right_cylinder:
            q0 = axis_restriction(epsilon_transform(q, tag.eps))
            if q0.is_zero:
                return True
            if isinstance(r, Fraction):
                return q0.eval(Fraction(1, 2) / r) == 0
            return vanishes_at(_reversed_scaled(q0, 2), r)
        if isinstance(r, Fraction):
            return is_in_tube_ideal(q, r, tag.eps)
        return ideal_member_at(q, r, tag.eps)


def solve_QS(surface: TubeIdentity) -> QSDescription:
    """Describe every polynomial relation the given tube satisfies."""
    return QSDescription(surface)


# ---------------------------------------------------------------------------
# corollaries


@dataclass(frozen=True)
class LinearCase:
    tag: SpaceTag
    kind: str  # "cylinders-any-radius" | "all-tubes" | "right-cylinders" | "empty"
    radius: Optional[Fraction] = None  # rho for the hyperbolic lane
    discriminant: Optional[Fraction] = None


def _sgn(v: Fraction) -> int:
    return (v > 0) - (v < 0)


def classify_linear(
    a: Fraction, b: Fraction, c: Fraction, spaces: Union[str, Iterable[str]] = "all"
) -> tuple[LinearCase, ...]:
    """Case analysis for the linear relation a*x + b*y - c = 0.

    Euclidean/hyperbolic: nonempty iff b = c = 0 (cylinders of any
    radius) or b*c > 0 (radius b/(2c), all tubes iff b**2 + 4ac = 0).
    Lorentzian: nonempty iff b = c = 0 (both signals, any radius) or
    b, c both nonzero, in which case only the lane eps = sgn(b*c) is
    populated, with radius b*eps/(2c) and discriminant eps*b**2 + 4ac
    deciding all-tubes versus cylinders.  The result is cross-checked
    against solve_SQ on the same polynomial.
    """
    a, b, c = Fraction(a), Fraction(b), Fraction(c)
    if a == 0 and b == 0:
        raise DegenerateRelation("need (a, b) != (0, 0)")
    cases = []
    for tag in expand_spaces(spaces):
        if tag.space == "lorentzian":
            if b == 0 and c == 0:
                cases.append(LinearCase(tag, "cylinders-any-radius"))
            elif b != 0 and c != 0 and tag.eps == _sgn(b * c):
                radius = b * tag.eps / (2 * c)
                delta = tag.eps * b * b + 4 * a * c
                kind = "all-tubes" if delta == 0 else "right-cylinders"
                cases.append(LinearCase(tag, kind, radius, delta))
            else:
                cases.append(LinearCase(tag, "empty"))
        else:
            if b == 0 and c == 0:
                cases.append(LinearCase(tag, "cylinders-any-radius"))
            elif b * c > 0:
                radius = b / (2 * c)  # rho in the hyperbolic lane
                delta = b * b + 4 * a * c
                kind = "all-tubes" if delta == 0 else "right-cylinders"
                cases.append(LinearCase(tag, kind, radius, delta))
            else:
                cases.append(LinearCase(tag, "empty"))
    q = Poly2([((1, 0), a), ((0, 1), b), ((0, 0), -c)])
    _check_linear_cases(cases, solve_SQ(q, spaces))
    return tuple(cases)


def _check_linear_cases(cases: list[LinearCase], report: ClassificationReport) -> None:
    by_tag = {lane.tag: lane for lane in report.lanes}
    for case in cases:
        lane = by_tag[case.tag]
        if case.kind == "cylinders-any-radius":
            ok = lane.all_cylinders_any_radius and not lane.classes
        elif case.kind == "empty":
            ok = lane.is_empty
        else:
            expected = ALL_REGULAR_TUBES if case.kind == "all-tubes" else RIGHT_CYLINDERS
            ok = (
                not lane.all_cylinders_any_radius
                and len(lane.classes) == 1
                and lane.classes[0].kind == expected
                and lane.classes[0].radius.exact_value == case.radius
            )
        if not ok:
            raise InternalMismatch(f"linear case analysis disagrees with solve_SQ in lane {case.tag}")


def classify_second_fundamental(
    c: Fraction, spaces: Union[str, Iterable[str]] = "all"
) -> ClassificationReport:
    """Tubes whose second fundamental form has constant length c > 0,
    i.e. the relation -2x + 4y**2 - c**2 = 0.

    The answer is always right cylinders only, of radius 1/c in the
    Euclidean and Lorentzian lanes (both signals) and rho = 1/c in the
    hyperbolic lane; the shape is verified before returning.
    """
    c = Fraction(c)
    if c <= 0:
        raise NonpositiveLength("second-fundamental-form length must be positive")
    qc = Poly2([((1, 0), -2), ((0, 2), 4), ((0, 0), -c * c)])
    report = solve_SQ(qc, spaces)
    for lane in report.lanes:
        ok = (
            not lane.all_cylinders_any_radius
            and len(lane.classes) == 1
            and lane.classes[0].kind == RIGHT_CYLINDERS
            and lane.classes[0].radius.exact_value == 1 / c
        )
        if not ok:
            raise InternalMismatch(f"unexpected |A| classification in lane {lane.tag}")
    return report


# ---------------------------------------------------------------------------
# principal-curvature variant (Euclidean)


def _divide_by_principal_factor(q: Poly2, r: Fraction) -> Poly2:
    """Exact quotient of Q by (y - 1/r), valid when Q(x, 1/r) vanishes
    identically; verified by multiplication."""
    u = Fraction(1) / r
    cols = q.y_coefficients()  # C_j(x), Q = sum C_j y^j
    d = len(cols) - 1
    quot_cols: list[Poly1] = [Poly1()] * d
    carry = cols[d]
    for j in range(d - 1, -1, -1):
        quot_cols[j] = carry
        carry = cols[j] + u * carry
    if not carry.is_zero:
        raise InternalMismatch("principal division has nonzero remainder")
    terms = []
    for j, col in enumerate(quot_cols):
        for i, coeff in enumerate(col.coeffs):
            if coeff != 0:
                terms.append(((i, j), coeff))
    quotient = Poly2(terms)
    generator = Poly2([((0, 1), 1), ((0, 0), -u)])
    if generator * quotient != q:
        raise InternalMismatch("verified multiplication of principal quotient failed")
    return quotient


def solve_SQ_principal(q: Poly2) -> ClassificationReport:
    """Euclidean tubes whose principal curvatures satisfy Q(k1, k2) = 0:
    right cylinders at radii with Q(0, 1/r) = 0, all regular tubes where
    additionally Q(x, 1/r) vanishes identically in x."""
    if q.is_zero:
        raise ZeroPolynomial("the zero relation holds on every surface")
    rset = principal_radius_set(q)
    if rset.is_all_positive:
        rows = [h for h in q.x_coefficients() if not h.is_zero]
        common = Poly1.zero()
        for h in rows:
            common = _gcd(common, _reversed_scaled(h, 1))
        stars = isolate_positive_roots(common) if common.degree >= 1 else []
        classes = tuple(
            SurfaceClass(
                ALL_REGULAR_TUBES,
                rad,
                1,
                _divide_by_principal_factor(q, rad.exact_value)
                if rad.exact_value is not None
                else None,
            )
            for rad in stars
        )
        lane = LaneReport(EUCLIDEAN, True, classes)
        return ClassificationReport(q, (lane,), principal=True)
    classes = []
    for entry in rset.entries:
        if entry.star:
            witness = (
                _divide_by_principal_factor(q, entry.radius.exact_value)
                if entry.radius.exact_value is not None
                else None
            )
            classes.append(SurfaceClass(ALL_REGULAR_TUBES, entry.radius, 1, witness))
        else:
            classes.append(SurfaceClass(RIGHT_CYLINDERS, entry.radius, 1, None))
    lane = LaneReport(EUCLIDEAN, False, tuple(classes))
    return ClassificationReport(q, (lane,), principal=True)


# ---------------------------------------------------------------------------
# true nonlinear relations


@dataclass(frozen=True)
class NonlinearVerdict:
    kind: str  # "not-true" | "cylinder-case"
    witness: Optional[Poly2]
    note: str


def true_nonlinear_witness(q: Poly2, surface: TubeIdentity) -> NonlinearVerdict:
    """Decide whether a nonlinear relation satisfied by the tube could be
    a true nonlinear relation (one with no nontrivial divisor that the
    tube also satisfies).

    For a non-cylinder the answer is always no: the degree-1 tube
    relation divides Q and is returned as the witness.  For a right
    cylinder true nonlinear relations are possible; deciding one would
    require bivariate factorization, so the verdict only reports the
    open cylinder case.
    """
    if q.degree <= 1:
        raise LinearInput("true-nonlinear analysis needs total degree >= 2")
    description = solve_QS(surface)
    if not description.contains(q):
        raise NotMember("polynomial does not vanish on the given tube")
    if surface.is_right_cylinder:
        return NonlinearVerdict(
            "cylinder-case",
            None,
            "right cylinder: a true nonlinear relation is possible; deciding it "
            "requires factoring the candidate, which is out of scope",
        )
    return NonlinearVerdict(
        "not-true",
        description.generator(),
        "every relation satisfied by a non-cylinder tube is divisible by the "
        "degree-1 tube relation",
    )
