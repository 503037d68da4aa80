"""
Legendrian Curves

Contact (Legendrian) checks for explicit rational curves f: P^1 -> P^3 given
by four homogeneous polynomials, with the symplectic form fixed to

    omega(u, v) = u0*v1 - u1*v0 + u2*v3 - u3*v2.

A curve is contact iff omega(df/ds, df/dt) vanishes identically.
"""

import logging
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import ClassVar, Optional, Sequence, Tuple

from .errors import DegenerateParametrization, DomainError
from .exactmath import HomogPoly2, Scalar, as_rational, polynomial_sum, root_multiplicity

logger = logging.getLogger(__name__)

Point = Tuple[Fraction, Fraction]


class SymplecticForm:
    """The standard form on C^4 in Darboux coordinates (z0, z1), (z2, z3)."""

    MATRIX: ClassVar[Tuple[Tuple[int, ...], ...]] = (
        (0, 1, 0, 0),
        (-1, 0, 0, 0),
        (0, 0, 0, 1),
        (0, 0, -1, 0),
    )

    @classmethod
    def is_antisymmetric(cls) -> bool:
        m = cls.MATRIX
        return all(m[i][j] == -m[j][i] for i in range(4) for j in range(4))

    @classmethod
    def pfaffian(cls) -> int:
        m = cls.MATRIX
        return m[0][1] * m[2][3] - m[0][2] * m[1][3] + m[0][3] * m[1][2]

    @classmethod
    def determinant(cls) -> int:
        return cls.pfaffian() ** 2

    @classmethod
    def pair(cls, u: Sequence[HomogPoly2], v: Sequence[HomogPoly2]) -> HomogPoly2:
        """omega(u, v) for vectors of homogeneous polynomials."""
        degree = u[0].degree + v[0].degree
        terms = (
            u[i] * v[j] * cls.MATRIX[i][j]
            for i in range(4) for j in range(4) if cls.MATRIX[i][j]
        )
        return polynomial_sum(terms, degree)

    @classmethod
    def pair_values(cls, u: Sequence[Fraction], v: Sequence[Fraction]) -> Fraction:
        return sum((cls.MATRIX[i][j] * u[i] * v[j] for i in range(4) for j in range(4)), Fraction(0))


@dataclass(frozen=True)
class RationalCurveParam:
    """(f0 : f1 : f2 : f3), four homogeneous polynomials of one degree d >= 1."""
    coords: Tuple[HomogPoly2, HomogPoly2, HomogPoly2, HomogPoly2]

    def __post_init__(self):
        coords = tuple(self.coords)
        if len(coords) != 4:
            raise DomainError(f"a curve in P^3 needs 4 coordinates, got {len(coords)}")
        degrees = {c.degree for c in coords}
        if len(degrees) != 1:
            raise DomainError(f"coordinates must share one degree, got {sorted(degrees)}")
        if coords[0].degree < 1:
            raise DomainError("curve degree must be at least 1")
        if all(c.is_zero() for c in coords):
            raise DomainError("all four coordinates are identically zero")
        object.__setattr__(self, "coords", coords)

    @property
    def degree(self) -> int:
        return self.coords[0].degree

    def at(self, point: Tuple[Scalar, Scalar]) -> Tuple[Fraction, ...]:
        a, b = point
        return tuple(c.evaluate(a, b) for c in self.coords)

    def __str__(self) -> str:
        return "(" + " : ".join(str(c) for c in self.coords) + ")"


def contact_pairing(f: RationalCurveParam) -> HomogPoly2:
    """omega(df/ds, df/dt), homogeneous of degree 2d - 2."""
    return SymplecticForm.pair(
        [c.partial_s() for c in f.coords],
        [c.partial_t() for c in f.coords],
    )


def is_contact(f: RationalCurveParam) -> bool:
    return contact_pairing(f).is_zero()


def buczynski(k: int, l: int) -> RationalCurveParam:
    """
    The model contact curve (s^(k+l) : (k-l)/(k+l) t^(k+l) : s^l t^k : s^k t^l).

    Raises:
        DomainError: unless k > l >= 1 and gcd(k, l) = 1
    """
    if not (k > l >= 1):
        raise DomainError(f"need k > l >= 1, got k={k}, l={l}")
    if math.gcd(k, l) != 1:
        raise DomainError(f"k and l must be coprime, got gcd({k}, {l}) = {math.gcd(k, l)}")
    n = k + l
    return RationalCurveParam((
        HomogPoly2.monomial(n, 0),
        HomogPoly2.monomial(0, n, Fraction(k - l, k + l)),
        HomogPoly2.monomial(l, k),
        HomogPoly2.monomial(k, l),
    ))


def _normalize_point(point: Tuple[Scalar, Scalar]) -> Point:
    a, b = as_rational(point[0]), as_rational(point[1])
    if a == 0 and b == 0:
        raise DomainError("(0:0) is not a point of P^1")
    return (a / b, Fraction(1)) if b != 0 else (Fraction(1), Fraction(0))


def contact_plane(f: RationalCurveParam, point: Tuple[Scalar, Scalar]) -> Tuple[Fraction, ...]:
    """
    Coefficients (a1, -a0, a3, -a2) of the contact plane at f(point) = (a0:a1:a2:a3).

    Raises:
        DegenerateParametrization: every coordinate vanishes at point
    """
    _normalize_point(point)
    a0, a1, a2, a3 = f.at(point)
    if a0 == a1 == a2 == a3 == 0:
        raise DegenerateParametrization(f"f{tuple(point)} = (0:0:0:0) is not a point of P^3")
    return (a1, -a0, a3, -a2)


def plane_section(f: RationalCurveParam, point: Tuple[Scalar, Scalar]) -> HomogPoly2:
    """The contact plane at f(point) composed with f, a polynomial of degree d."""
    plane = contact_plane(f, point)
    return polynomial_sum((c * p for c, p in zip(plane, f.coords)), f.degree)


def osculation_multiplicity(f: RationalCurveParam, point: Tuple[Scalar, Scalar]) -> Optional[int]:
    """
    Order of contact between f and its contact plane at point.

    Returns None when the curve lies in the plane.
    """
    section = plane_section(f, point)
    if section.is_zero():
        logger.debug(f"{f} lies in its contact plane at {point}")
        return None
    return root_multiplicity(section, point)


def second_intersection(f: RationalCurveParam, point: Tuple[Scalar, Scalar]) -> Optional[Point]:
    """
    The residual point where the contact plane at f(point) meets f again.

    Returns the point itself when the contact is total, and None when the
    curve lies in the plane.

    Raises:
        DomainError: more than one residual point (the curve has degree > m + 1)
    """
    section = plane_section(f, point)
    if section.is_zero():
        return None
    a, b = _normalize_point(point)
    while section.degree >= 1:
        quotient, exact = section.divide_linear(a, b)
        if not exact:
            break
        section = quotient
    if section.degree == 0:
        return (a, b)
    if section.degree > 1:
        raise DomainError(f"plane section leaves {section.degree} residual points")
    # c1*s + c0*t vanishes at (c0 : -c1)
    c0, c1 = section.coeffs
    return _normalize_point((c0, -c1))


def reparametrize(f: RationalCurveParam, alpha: Scalar, beta: Scalar,
                  gamma: Scalar, delta: Scalar) -> RationalCurveParam:
    """Compose f with s -> alpha*s + beta*t, t -> gamma*s + delta*t."""
    if as_rational(alpha) * as_rational(delta) - as_rational(beta) * as_rational(gamma) == 0:
        raise DomainError("reparametrization must be invertible")
    return RationalCurveParam(tuple(c.substitute(alpha, beta, gamma, delta) for c in f.coords))


def _parse_coefficients(text: str) -> Tuple[Fraction, ...]:
    try:
        return tuple(Fraction(part.strip()) for part in text.split(','))
    except (ValueError, ZeroDivisionError) as e:
        raise DomainError(f"bad coefficient list {text!r}: {e}") from e


def parse_curve(text: str) -> RationalCurveParam:
    """
    Parse "buczynski:k,l" or four ';'-separated coefficient lists.

    Each list runs from the highest power of s down to the highest power of
    t; a lone "0" is the zero polynomial of the common degree.
    """
    text = text.strip()
    if text.lower().startswith('buczynski:'):
        try:
            k, l = (int(part) for part in text.split(':', 1)[1].split(','))
        except ValueError as e:
            raise DomainError(f"expected buczynski:k,l, got {text!r}") from e
        return buczynski(k, l)

    parts = text.split(';')
    if len(parts) != 4:
        raise DomainError(f"expected 4 coefficient lists separated by ';', got {len(parts)}")
    lists = [_parse_coefficients(part) for part in parts]
    degree = max(len(c) for c in lists) - 1
    coords = []
    for coeffs in lists:
        if len(coeffs) == 1 and coeffs[0] == 0:
            coords.append(HomogPoly2.zero(degree))
        elif len(coeffs) == degree + 1:
            coords.append(HomogPoly2.from_descending(coeffs))
        else:
            raise DomainError(f"coefficient lists must share one degree; got lengths {[len(c) for c in lists]}")
    return RationalCurveParam(tuple(coords))


def parse_point(text: str) -> Point:
    parts = _parse_coefficients(text)
    if len(parts) != 2:
        raise DomainError(f"a point of P^1 is 'a,b', got {text!r}")
    _normalize_point(parts)
    return parts
