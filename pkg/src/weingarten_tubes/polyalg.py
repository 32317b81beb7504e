"""Exact polynomial arithmetic and the tube-ideal machinery.

All coefficients are `fractions.Fraction`, so every decision made here
(equality, ideal membership, quotient extraction) is exact.  Two types:

* ``Poly2`` -- sparse bivariate polynomial in (x, y): map from exponent
  pairs (i, j) to nonzero rational coefficients.
* ``Poly1`` -- dense univariate polynomial: coefficient tuple indexed by
  exponent, trailing coefficient nonzero.

On top of the ring arithmetic the module implements the machinery for
the one-parameter family of generators ``x*r**2 - 2*r*y + eps`` with
``eps in {-1, +1}``:

* ``substitute_tube`` -- the image of Q under x -> eps*x/r,
  y -> eps*(x*r + 1)/(2*r), a univariate polynomial whose vanishing is
  equivalent to membership in the ideal generated by the tube relation.
* ``gamma_at`` / ``gamma_cleared`` -- the coefficients of that image as
  explicit rational expressions in r, and their denominator-cleared
  polynomial forms (used downstream to locate star radii exactly).
* ``divide_by_tube_factor`` -- the exact quotient by the generator,
  assembled coefficient-by-coefficient and verified by multiplication.
* ``epsilon_transform`` -- the substitution x -> eps*x, y -> eps*y that
  carries statements between the eps = -1 and eps = +1 generators.
"""

from __future__ import annotations

import math
from fractions import Fraction
from typing import Iterable, Iterator, Mapping, Optional, Union

from .errors import InternalMismatch, ZeroPolynomial, ZeroRadius

RatLike = Union[int, Fraction]


def _frac(value: RatLike) -> Fraction:
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    raise TypeError(f"expected an exact rational, got {type(value).__name__}")


def check_epsilon(eps: int) -> int:
    if eps not in (-1, 1):
        raise ValueError(f"eps must be -1 or +1, got {eps!r}")
    return eps


def binom(p: int, q: int) -> int:
    """Binomial symbol with the pinned zero conventions.

    C(p, q) = 0 for q < 0; C(p, 0) = 1 for every integer p; for q > 0 the
    symbol is 0 whenever p < 0 (hard zero, not the generalized binomial)
    or 0 <= p < q, and the ordinary binomial coefficient otherwise.
    """
    if q < 0:
        return 0
    if q == 0:
        return 1
    if p < 0 or q > p:
        return 0
    return math.comb(p, q)


def binomial_alternating_sum(n: int, x: int, j: int) -> int:
    """Direct evaluation of sum_{m=0..n} (-1)^m C(x-m, j) C(n, m).

    Under the conventions of :func:`binom` this equals C(x-n, j-n)
    whenever no symbol involved has a negative upper index together with
    a positive lower index; see :func:`lemma_identity_defined`.
    """
    if n < 0:
        raise ValueError("n must be nonnegative")
    return sum((-1) ** m * binom(x - m, j) * math.comb(n, m) for m in range(n + 1))


def lemma_identity_defined(n: int, x: int, j: int) -> bool:
    """True when every binomial symbol in the alternating-sum identity is
    outside the negative-upper/positive-lower corner where the hard-zero
    convention and the generalized binomial disagree."""
    if any(x - m < 0 and j > 0 for m in range(n + 1)):
        return False
    if x - n < 0 and j - n > 0:
        return False
    return True


class Poly1:
    """Dense univariate polynomial with exact rational coefficients."""

    __slots__ = ("_coeffs",)

    def __init__(self, coeffs: Iterable[RatLike] = ()):
        cs = [_frac(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        self._coeffs = tuple(cs)

    @classmethod
    def zero(cls) -> "Poly1":
        return cls()

    @classmethod
    def constant(cls, c: RatLike) -> "Poly1":
        return cls([c])

    @property
    def coeffs(self) -> tuple:
        return self._coeffs

    @property
    def degree(self) -> int:
        """Degree; -1 for the zero polynomial."""
        return len(self._coeffs) - 1

    @property
    def is_zero(self) -> bool:
        return not self._coeffs

    def __bool__(self) -> bool:
        return bool(self._coeffs)

    def coeff(self, k: int) -> Fraction:
        if 0 <= k < len(self._coeffs):
            return self._coeffs[k]
        return Fraction(0)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Poly1):
            return NotImplemented
        return self._coeffs == other._coeffs

    def __hash__(self) -> int:
        return hash(self._coeffs)

    def __neg__(self) -> "Poly1":
        return Poly1([-c for c in self._coeffs])

    def __add__(self, other: "Poly1") -> "Poly1":
        a, b = self._coeffs, other._coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for k, c in enumerate(b):
            out[k] += c
        return Poly1(out)

    def __sub__(self, other: "Poly1") -> "Poly1":
        return self + (-other)

    def __mul__(self, other: Union["Poly1", RatLike]) -> "Poly1":
        if isinstance(other, Poly1):
            if self.is_zero or other.is_zero:
                return Poly1()
            out = [Fraction(0)] * (len(self._coeffs) + len(other._coeffs) - 1)
            for i, a in enumerate(self._coeffs):
                if a == 0:
                    continue
                for j, b in enumerate(other._coeffs):
                    out[i + j] += a * b
            return Poly1(out)
        c = _frac(other)
        return Poly1([c * a for a in self._coeffs])

    def __rmul__(self, other: RatLike) -> "Poly1":
        return self * other

    def eval(self, v: RatLike) -> Fraction:
        v = _frac(v)
        acc = Fraction(0)
        for c in reversed(self._coeffs):
            acc = acc * v + c
        return acc

    def eval_float(self, v: float) -> float:
        acc = 0.0
        for c in reversed(self._coeffs):
            acc = acc * v + float(c)
        return acc

    def derivative(self) -> "Poly1":
        return Poly1([k * c for k, c in enumerate(self._coeffs)][1:])

    def divmod(self, other: "Poly1") -> tuple["Poly1", "Poly1"]:
        """Exact quotient and remainder over the rationals."""
        if other.is_zero:
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self._coeffs)
        d = other.degree
        lead = other._coeffs[-1]
        if len(rem) - 1 < d:
            return Poly1(), Poly1(rem)
        quo = [Fraction(0)] * (len(rem) - d)
        for k in range(len(rem) - 1, d - 1, -1):
            c = rem[k]
            if c == 0:
                continue
            q = c / lead
            quo[k - d] = q
            for m in range(d + 1):
                rem[k - d + m] -= q * other._coeffs[m]
        return Poly1(quo), Poly1(rem)

    def to_string(self, var: str = "x") -> str:
        if self.is_zero:
            return "0"
        parts = []
        for k in range(len(self._coeffs) - 1, -1, -1):
            c = self._coeffs[k]
            if c == 0:
                continue
            mono = "" if k == 0 else (var if k == 1 else f"{var}^{k}")
            if k == 0:
                body = str(abs(c))
            elif abs(c) == 1:
                body = mono
            else:
                body = f"{abs(c)}*{mono}"
            if not parts:
                parts.append(body if c > 0 else f"-{body}")
            else:
                parts.append(f"+ {body}" if c > 0 else f"- {body}")
        return " ".join(parts)

    def __str__(self) -> str:
        return self.to_string()

    def __repr__(self) -> str:
        return f"Poly1({self.to_string()!r})"


def _term_order_key(exp: tuple[int, int]) -> tuple:
    # graded lexicographic, x before y, highest first
    i, j = exp
    return (-(i + j), -i)


class Poly2:
    """Sparse bivariate polynomial in (x, y) with exact rational coefficients.

    Canonical form: no zero coefficients are stored; iteration and
    printing follow graded lexicographic order with x before y, highest
    degree first, so equal polynomials print identically.
    """

    __slots__ = ("_terms",)

    def __init__(self, terms: Union[Mapping, Iterable] = ()):
        items = terms.items() if isinstance(terms, Mapping) else terms
        acc: dict[tuple[int, int], Fraction] = {}
        for (i, j), c in items:
            if i < 0 or j < 0:
                raise ValueError("exponents must be nonnegative")
            c = _frac(c)
            if c == 0:
                continue
            key = (int(i), int(j))
            c = acc.get(key, Fraction(0)) + c
            if c == 0:
                acc.pop(key, None)
            else:
                acc[key] = c
        self._terms = {k: acc[k] for k in sorted(acc, key=_term_order_key)}

    @classmethod
    def zero(cls) -> "Poly2":
        return cls()

    @classmethod
    def constant(cls, c: RatLike) -> "Poly2":
        return cls([((0, 0), c)])

    @classmethod
    def variable(cls, name: str) -> "Poly2":
        if name == "x":
            return cls([((1, 0), 1)])
        if name == "y":
            return cls([((0, 1), 1)])
        raise ValueError(f"unknown variable {name!r}")

    @property
    def degree(self) -> int:
        """Total degree; -1 for the zero polynomial."""
        if not self._terms:
            return -1
        return max(i + j for i, j in self._terms)

    @property
    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self) -> bool:
        return bool(self._terms)

    def coeff(self, i: int, j: int) -> Fraction:
        return self._terms.get((i, j), Fraction(0))

    def terms(self) -> Iterator[tuple[tuple[int, int], Fraction]]:
        """Iterate ((i, j), coefficient) in canonical order."""
        return iter(self._terms.items())

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Poly2):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self) -> int:
        return hash(frozenset(self._terms.items()))

    def __neg__(self) -> "Poly2":
        return Poly2([(e, -c) for e, c in self._terms.items()])

    def __add__(self, other: "Poly2") -> "Poly2":
        out = dict(self._terms)
        for e, c in other._terms.items():
            s = out.get(e, Fraction(0)) + c
            if s == 0:
                out.pop(e, None)
            else:
                out[e] = s
        return Poly2(out)

    def __sub__(self, other: "Poly2") -> "Poly2":
        return self + (-other)

    def __mul__(self, other: Union["Poly2", RatLike]) -> "Poly2":
        if isinstance(other, Poly2):
            out: dict[tuple[int, int], Fraction] = {}
            for (i1, j1), c1 in self._terms.items():
                for (i2, j2), c2 in other._terms.items():
                    e = (i1 + i2, j1 + j2)
                    s = out.get(e, Fraction(0)) + c1 * c2
                    if s == 0:
                        out.pop(e, None)
                    else:
                        out[e] = s
            return Poly2(out)
        c = _frac(other)
        return Poly2([(e, c * v) for e, v in self._terms.items()])

    def __rmul__(self, other: RatLike) -> "Poly2":
        return self * other

    def eval(self, x: RatLike, y: RatLike) -> Fraction:
        x, y = _frac(x), _frac(y)
        return sum((c * x**i * y**j for (i, j), c in self._terms.items()), Fraction(0))

    def eval_float(self, x: float, y: float) -> float:
        return sum(float(c) * x**i * y**j for (i, j), c in self._terms.items())

    def x_coefficients(self) -> list[Poly1]:
        """Coefficient polynomials in y: index i gives the y-polynomial
        multiplying x**i."""
        if self.is_zero:
            return []
        max_i = max(i for i, _ in self._terms)
        rows: list[dict[int, Fraction]] = [{} for _ in range(max_i + 1)]
        for (i, j), c in self._terms.items():
            rows[i][j] = c
        out = []
        for row in rows:
            size = max(row) + 1 if row else 0
            out.append(Poly1([row.get(k, 0) for k in range(size)]))
        return out

    def y_coefficients(self) -> list[Poly1]:
        """Coefficient polynomials in x: index j gives the x-polynomial
        multiplying y**j."""
        if self.is_zero:
            return []
        max_j = max(j for _, j in self._terms)
        rows: list[dict[int, Fraction]] = [{} for _ in range(max_j + 1)]
        for (i, j), c in self._terms.items():
            rows[j][i] = c
        out = []
        for row in rows:
            size = max(row) + 1 if row else 0
            out.append(Poly1([row.get(k, 0) for k in range(size)]))
        return out

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        parts = []
        for (i, j), c in self._terms.items():
            factors = []
            if i:
                factors.append("x" if i == 1 else f"x^{i}")
            if j:
                factors.append("y" if j == 1 else f"y^{j}")
            mono = "*".join(factors)
            if not mono:
                body = str(abs(c))
            elif abs(c) == 1:
                body = mono
            else:
                body = f"{abs(c)}*{mono}"
            if not parts:
                parts.append(body if c > 0 else f"-{body}")
            else:
                parts.append(f"+ {body}" if c > 0 else f"- {body}")
        return " ".join(parts)

    def __repr__(self) -> str:
        return f"Poly2({str(self)!r})"


def tube_generator(r: RatLike, eps: int = 1) -> Poly2:
    """The linear relation x*r**2 - 2*r*y + eps satisfied by every
    regular tube of radius r (signal eps)."""
    r = _frac(r)
    if r == 0:
        raise ZeroRadius("generator requires a nonzero radius")
    check_epsilon(eps)
    return Poly2([((1, 0), r * r), ((0, 1), -2 * r), ((0, 0), eps)])


def epsilon_transform(q: Poly2, eps: int) -> Poly2:
    """Coefficient map a_{i,j} -> eps**(i+j) * a_{i,j}; equivalently the
    ring substitution x -> eps*x, y -> eps*y.  Identity for eps = +1,
    an involution for eps = -1."""
    check_epsilon(eps)
    if eps == 1:
        return q
    return Poly2([((i, j), c if (i + j) % 2 == 0 else -c) for (i, j), c in q.terms()])


def gamma_at(q: Poly2, r: RatLike) -> list[Fraction]:
    """Coefficients of Q(x/r, (x*r + 1)/(2*r)) as a polynomial in x.

    Entry k is sum_{i=0..k} sum_{j=0..n-k} C(k-i+j, j) * a_{i,k-i+j}
    / (2**(k-i+j) * r**(j+i)) with n the total degree of Q.
    """
    r = _frac(r)
    if r == 0:
        raise ZeroRadius("substitution radius must be nonzero")
    n = q.degree
    out = []
    for k in range(n + 1):
        acc = Fraction(0)
        for i in range(k + 1):
            for j in range(n - k + 1):
                a = q.coeff(i, k - i + j)
                if a == 0:
                    continue
                acc += binom(k - i + j, j) * a / (Fraction(2) ** (k - i + j) * r ** (j + i))
        out.append(acc)
    return out


def gamma_cleared(q: Poly2) -> list[Poly1]:
    """Denominator-cleared coefficient polynomials g_k(r) = 2**n * r**n *
    gamma_k(r), expanded exactly in r.

    For every r != 0, g_k(r) = 0 iff gamma_k(r) = 0, so the common roots
    of the g_k locate the radii at which the substitution image vanishes
    identically.  The 2**n * r**n scaling is pinned for reproducibility;
    only the root sets matter downstream.
    """
    if q.is_zero:
        raise ZeroPolynomial("gamma_cleared requires a nonzero polynomial")
    n = q.degree
    out = []
    for k in range(n + 1):
        coeffs = [Fraction(0)] * (n + 1)
        for i in range(k + 1):
            for j in range(n - k + 1):
                a = q.coeff(i, k - i + j)
                if a == 0:
                    continue
                # 2^n r^n * C(k-i+j, j) a / (2^(k-i+j) r^(j+i))
                coeffs[n - j - i] += binom(k - i + j, j) * a * 2 ** (n - (k - i + j))
        out.append(Poly1(coeffs))
    return out


def substitute_tube(q: Poly2, r: RatLike, eps: int = 1) -> Poly1:
    """Exact univariate image Q(eps*x/r, eps*(x*r + 1)/(2*r)).

    Computed by direct expansion and cross-checked against the explicit
    coefficient formula applied to the eps-transformed polynomial; a
    disagreement would indicate an arithmetic bug and raises
    InternalMismatch.
    """
    r = _frac(r)
    if r == 0:
        raise ZeroRadius("substitution radius must be nonzero")
    check_epsilon(eps)
    n = q.degree
    if n < 0:
        return Poly1()
    # powers of (x*r + 1)
    max_j = max(j for (_, j), _ in q.terms())
    base = Poly1([1, r])
    powers = [Poly1([1])]
    for _ in range(max_j):
        powers.append(powers[-1] * base)
    acc = [Fraction(0)] * (n + 1)
    for (i, j), a in q.terms():
        scale = a * Fraction(eps) ** (i + j) / (r**i * (2 * r) ** j)
        for k, c in enumerate(powers[j].coeffs):
            if c != 0:
                acc[i + k] += scale * c
    result = Poly1(acc)
    expected = gamma_at(epsilon_transform(q, eps), r)
    if [result.coeff(k) for k in range(n + 1)] != expected:
        raise InternalMismatch("substitution expansion disagrees with coefficient formula")
    return result


def is_in_tube_ideal(q: Poly2, r: RatLike, eps: int = 1) -> bool:
    """Membership in the principal ideal generated by x*r**2 - 2*r*y + eps,
    decided by vanishing of the substitution image."""
    return substitute_tube(q, r, eps).is_zero


def divide_by_tube_factor(q: Poly2, r: RatLike, eps: int = 1) -> Optional[Poly2]:
    """Exact quotient R with Q = (x*r**2 - 2*r*y + eps) * R, or None when
    Q is not in the ideal.

    The quotient coefficients are assembled by the explicit alternating
    formula c_{i,j} = sum_{k<=i} sum_{l<=j} (-1)**k C(l+k, l) * 2**l *
    r**(l+2k) * a_{i-k,j-l} after reducing to eps = +1, then transformed
    back.  The result is verified by multiplication before returning.
    """
    r = _frac(r)
    if r == 0:
        raise ZeroRadius("division radius must be nonzero")
    check_epsilon(eps)
    if q.is_zero:
        return Poly2.zero()
    if not is_in_tube_ideal(q, r, eps):
        return None
    w = epsilon_transform(q, eps)
    n = w.degree
    quotient_terms = []
    for i in range(n):
        for j in range(n - i):
            c = Fraction(0)
            for k in range(i + 1):
                for l in range(j + 1):
                    a = w.coeff(i - k, j - l)
                    if a == 0:
                        continue
                    c += (-1) ** k * binom(l + k, l) * 2**l * r ** (l + 2 * k) * a
            if c != 0:
                quotient_terms.append(((i, j), c))
    quotient = eps * epsilon_transform(Poly2(quotient_terms), eps)
    if tube_generator(r, eps) * quotient != q:
        raise InternalMismatch("verified multiplication of tube quotient failed")
    return quotient
