"""Exception hierarchy shared by all modules."""


class WeingartenError(Exception):
    """Base class for every error raised by this package."""


class ZeroPolynomial(WeingartenError):
    """A nonzero polynomial was required (the zero relation holds on every surface)."""


class ZeroRadius(WeingartenError):
    """The substitution radius must be nonzero."""


class InternalMismatch(WeingartenError):
    """A mandatory internal cross-check failed; indicates a bug, never user error."""


class NonpositiveRadius(WeingartenError):
    """Tube radii must be positive."""


class DegenerateRelation(WeingartenError):
    """Linear relation a*x + b*y - c with (a, b) = (0, 0)."""


class NonpositiveLength(WeingartenError):
    """Second-fundamental-form length must be positive."""


class NotMember(WeingartenError):
    """Polynomial does not vanish on the given surface."""


class LinearInput(WeingartenError):
    """Operation requires a nonlinear polynomial (total degree >= 2)."""


class DimensionMismatch(WeingartenError):
    """Vector arguments have incompatible or unsupported dimensions."""


class DegenerateFrame(WeingartenError):
    """Curve is not biregular at this parameter; no Frenet frame exists."""


class LightlikeNormal(WeingartenError):
    """Normal vector is numerically lightlike; unsupported degenerate configuration."""


class InvalidSpecRow(WeingartenError):
    """Requested curve-causality/section combination does not exist."""


class IrregularPoint(WeingartenError):
    """Tube parametrization is singular (|xi| below cutoff) at the requested point."""


class NoRegularPoints(WeingartenError):
    """Every grid point was irregular; nothing to sample."""


class PolySyntaxError(WeingartenError):
    """Polynomial expression could not be parsed.  Carries the input position."""

    def __init__(self, message: str, position: int):
        super().__init__(f"{message} (at position {position})")
        self.position = position


class UnknownVariable(PolySyntaxError):
    """Variable name outside the allowed set."""


class NonIntegerExponent(PolySyntaxError):
    """Exponent is not a nonnegative integer literal."""
