"""Radius sets and star radii in the three ambient spaces.

The radius set of Q collects the positive radii whose right cylinder
satisfies Q(K, H) = 0; the star subset contains the radii at which
*every* regular tube does.  Lorentzian tubes come in two signals
(eps = <N, N> of the surface normal), and hyperbolic radii are handled
exactly in the substituted variable rho = sinh(r).
"""

import math
from fractions import Fraction

from weingarten_tubes import (
    EUCLIDEAN,
    HYPERBOLIC,
    LORENTZIAN_NEG,
    LORENTZIAN_POS,
    isolate_positive_roots,
    star_radius_set,
)
from weingarten_tubes.polyalg import Poly1
from weingarten_tubes.cli import parse_poly


def show(name, q, tag):
    rset = star_radius_set(q, tag)
    if rset.is_all_positive:
        print(f"  {name}: every positive radius (axis restriction vanishes)")
        return
    if not rset.entries:
        print(f"  {name}: empty")
        return
    parts = []
    for entry in rset.entries:
        rad = entry.radius
        value = str(rad.exact_value) if rad.exact_value is not None else f"~{rad.approx():.9f}"
        parts.append(f"{value}{' (star)' if entry.star else ''}")
    print(f"  {name}: {{{', '.join(parts)}}}")


Q = parse_poly("14*y - 25*x + 100*x*y - 40*y^2 - 1")
print("Q =", Q)
show("Euclidean", Q, EUCLIDEAN)
show("Lorentzian eps=+1", Q, LORENTZIAN_POS)
show("Lorentzian eps=-1", Q, LORENTZIAN_NEG)
show("Hyperbolic (in rho = sinh r)", Q, HYPERBOLIC)

print("\nConstant mean curvature y - c:")
for c in (Fraction(1), Fraction(-1)):
    q = parse_poly(f"y - {c}") if c > 0 else parse_poly(f"y + {-c}")
    print(f" c = {c}:")
    show("  Euclidean", q, EUCLIDEAN)
    show("  Lorentzian eps=-1", q, LORENTZIAN_NEG)

print("\nConstant Gaussian curvature x - c:")
show("c = 0", parse_poly("x"), EUCLIDEAN)
show("c = 3", parse_poly("x - 3"), EUCLIDEAN)

print("\nIrrational radii are isolated exactly (defining polynomial plus a")
print("shrinking rational interval), never approximated for decisions:")
for rad in isolate_positive_roots(Poly1([-2, 0, 1])):  # r^2 - 2
    fine = rad.refined(Fraction(1, 10**12))
    print(f"  root of {rad.defining_poly.to_string('r')}: interval ({fine.lo}, {fine.hi}]")
    print(f"  ~ {rad.approx():.12f}   (sqrt(2) = {math.sqrt(2):.12f})")

print("\nA polynomial with an irrational *star* radius:")
q = parse_poly("4*x^2 - 8*y^2 + 4*x + 1")  # (2x - 2*sqrt(2)y + 1)(2x + 2*sqrt(2)y + 1)
show("Euclidean", q, EUCLIDEAN)
