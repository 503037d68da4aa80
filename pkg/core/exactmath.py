"""
Exact Arithmetic

Rational scalars and dense bivariate homogeneous polynomials over the
rationals. Every value the engine computes flows through this module; nothing
here ever rounds.

- Rational: ``fractions.Fraction`` (always reduced, positive denominator)
- HomogPoly2: dense coefficients of s^a t^(n-a), index a
- Root multiplicity at a point of P^1 by repeated exact division
"""

import math
from dataclasses import dataclass
from fractions import Fraction
from numbers import Rational as _RationalABC
from typing import Any, Dict, Iterable, Sequence, Tuple, Union

from .errors import DomainError, InfiniteMultiplicity

Rational = Fraction

Scalar = Union[int, Fraction]


def as_rational(value: Any) -> Fraction:
    """Coerce ints, Fractions and decimal/fraction strings to a Fraction."""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool):
        raise TypeError("booleans are not rational values")
    if isinstance(value, (int, _RationalABC)):
        return Fraction(value)
    if isinstance(value, str):
        return Fraction(value.strip())
    raise TypeError(f"cannot convert {type(value).__name__} to an exact rational")


def rational_to_json(value: Fraction) -> Dict[str, str]:
    """Serialize as decimal strings so JSON consumers never truncate."""
    value = as_rational(value)
    return {"num": str(value.numerator), "den": str(value.denominator)}


def rational_from_json(data: Dict[str, str]) -> Fraction:
    try:
        return Fraction(int(data["num"]), int(data["den"]))
    except (KeyError, TypeError, ValueError, ZeroDivisionError) as e:
        raise ValueError(f"malformed rational: {data!r}") from e


def format_rational(value: Fraction) -> str:
    value = as_rational(value)
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


def binomial(n: int, k: int) -> int:
    """n choose k; zero when k > n."""
    return math.comb(n, k)


@dataclass(frozen=True)
class HomogPoly2:
    """
    Homogeneous polynomial in (s, t) with rational coefficients.

    ``coeffs[a]`` is the coefficient of s^a t^(degree - a). The zero
    polynomial keeps its degree, so sums of same-degree zeros stay well typed.
    """
    degree: int
    coeffs: Tuple[Fraction, ...]

    def __post_init__(self):
        if self.degree < 0:
            raise ValueError("degree must be nonnegative")
        coeffs = tuple(as_rational(c) for c in self.coeffs)
        if len(coeffs) != self.degree + 1:
            raise ValueError(
                f"degree {self.degree} needs {self.degree + 1} coefficients, got {len(coeffs)}"
            )
        object.__setattr__(self, "coeffs", coeffs)

    # -- constructors -----------------------------------------------------

    @classmethod
    def zero(cls, degree: int) -> "HomogPoly2":
        return cls(degree, (Fraction(0),) * (degree + 1))

    @classmethod
    def constant(cls, value: Scalar) -> "HomogPoly2":
        return cls(0, (as_rational(value),))

    @classmethod
    def monomial(cls, s_power: int, t_power: int, coeff: Scalar = 1) -> "HomogPoly2":
        """coeff * s^s_power * t^t_power"""
        degree = s_power + t_power
        coeffs = [Fraction(0)] * (degree + 1)
        coeffs[s_power] = as_rational(coeff)
        return cls(degree, tuple(coeffs))

    @classmethod
    def from_descending(cls, coeffs: Sequence[Scalar]) -> "HomogPoly2":
        """Build from coefficients listed from s^n down to t^n."""
        if not coeffs:
            raise ValueError("at least one coefficient is required")
        return cls(len(coeffs) - 1, tuple(reversed([as_rational(c) for c in coeffs])))

    # -- queries ----------------------------------------------------------

    def is_zero(self) -> bool:
        return all(c == 0 for c in self.coeffs)

    def coefficient(self, s_power: int) -> Fraction:
        return self.coeffs[s_power]

    def evaluate(self, s: Scalar, t: Scalar) -> Fraction:
        s, t = as_rational(s), as_rational(t)
        n = self.degree
        return sum((c * s ** a * t ** (n - a) for a, c in enumerate(self.coeffs)), Fraction(0))

    # -- arithmetic -------------------------------------------------------

    def _check_same_degree(self, other: "HomogPoly2"):
        if self.degree != other.degree:
            raise ValueError(
                f"cannot add homogeneous polynomials of degrees {self.degree} and {other.degree}"
            )

    def __add__(self, other: "HomogPoly2") -> "HomogPoly2":
        if not isinstance(other, HomogPoly2):
            return NotImplemented
        self._check_same_degree(other)
        return HomogPoly2(self.degree, tuple(a + b for a, b in zip(self.coeffs, other.coeffs)))

    def __neg__(self) -> "HomogPoly2":
        return HomogPoly2(self.degree, tuple(-c for c in self.coeffs))

    def __sub__(self, other: "HomogPoly2") -> "HomogPoly2":
        if not isinstance(other, HomogPoly2):
            return NotImplemented
        return self + (-other)

    def __mul__(self, other: Union["HomogPoly2", Scalar]) -> "HomogPoly2":
        if isinstance(other, HomogPoly2):
            result = [Fraction(0)] * (self.degree + other.degree + 1)
            for a, c in enumerate(self.coeffs):
                if c == 0:
                    continue
                for b, e in enumerate(other.coeffs):
                    result[a + b] += c * e
            return HomogPoly2(self.degree + other.degree, tuple(result))
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            return HomogPoly2(self.degree, tuple(c * other for c in self.coeffs))
        return NotImplemented

    __rmul__ = __mul__

    def __pow__(self, exponent: int) -> "HomogPoly2":
        if exponent < 0:
            raise ValueError("negative powers are not polynomials")
        result = HomogPoly2.constant(1)
        for _ in range(exponent):
            result = result * self
        return result

    # -- calculus ---------------------------------------------------------

    def partial_s(self) -> "HomogPoly2":
        if self.degree == 0:
            return HomogPoly2.zero(0)
        return HomogPoly2(
            self.degree - 1,
            tuple(a * self.coeffs[a] for a in range(1, self.degree + 1)),
        )

    def partial_t(self) -> "HomogPoly2":
        if self.degree == 0:
            return HomogPoly2.zero(0)
        n = self.degree
        return HomogPoly2(n - 1, tuple((n - a) * self.coeffs[a] for a in range(n)))

    def substitute(self, alpha: Scalar, beta: Scalar, gamma: Scalar, delta: Scalar) -> "HomogPoly2":
        """Apply s -> alpha*s + beta*t, t -> gamma*s + delta*t."""
        new_s = HomogPoly2(1, (as_rational(beta), as_rational(alpha)))
        new_t = HomogPoly2(1, (as_rational(delta), as_rational(gamma)))
        n = self.degree
        s_powers = [HomogPoly2.constant(1)]
        t_powers = [HomogPoly2.constant(1)]
        for _ in range(n):
            s_powers.append(s_powers[-1] * new_s)
            t_powers.append(t_powers[-1] * new_t)
        result = HomogPoly2.zero(n)
        for a, c in enumerate(self.coeffs):
            if c != 0:
                result = result + (s_powers[a] * t_powers[n - a]) * c
        return result

    def divide_linear(self, a: Scalar, b: Scalar) -> Tuple["HomogPoly2", bool]:
        """
        Divide by the linear form b*s - a*t vanishing at (a:b).

        Returns (quotient, exact). The quotient is only meaningful when exact.
        """
        a, b = as_rational(a), as_rational(b)
        if a == 0 and b == 0:
            raise DomainError("(0:0) is not a point of P^1")
        c = self.coeffs
        n = self.degree
        if n == 0:
            return HomogPoly2.zero(0), c[0] == 0
        if a == 0:
            quotient = tuple(c[k] / b for k in range(1, n + 1))
            return HomogPoly2(n - 1, quotient), c[0] == 0
        q = [Fraction(0)] * n
        q[0] = -c[0] / a
        for k in range(1, n):
            q[k] = (b * q[k - 1] - c[k]) / a
        return HomogPoly2(n - 1, tuple(q)), c[n] == b * q[n - 1]

    # -- presentation -----------------------------------------------------

    def __str__(self) -> str:
        terms = []
        n = self.degree
        for a in range(n, -1, -1):
            c = self.coeffs[a]
            if c == 0:
                continue
            parts = []
            if a:
                parts.append("s" if a == 1 else f"s^{a}")
            if n - a:
                parts.append("t" if n - a == 1 else f"t^{n - a}")
            monomial = "*".join(parts)
            if not monomial:
                terms.append(format_rational(c))
            elif c == 1:
                terms.append(monomial)
            elif c == -1:
                terms.append(f"-{monomial}")
            else:
                terms.append(f"{format_rational(c)}*{monomial}")
        if not terms:
            return "0"
        return " + ".join(terms).replace("+ -", "- ")


def partial_s(p: HomogPoly2) -> HomogPoly2:
    return p.partial_s()


def partial_t(p: HomogPoly2) -> HomogPoly2:
    return p.partial_t()


def root_multiplicity(p: HomogPoly2, point: Tuple[Scalar, Scalar]) -> int:
    """
    Largest m such that (b*s - a*t)^m divides p, for point = (a:b).

    Raises:
        InfiniteMultiplicity: p is identically zero
    """
    if p.is_zero():
        raise InfiniteMultiplicity("infinite multiplicity: polynomial is identically zero")
    a, b = point
    if a == 0 and b == 0:
        raise DomainError("(0:0) is not a point of P^1")
    multiplicity = 0
    while p.degree >= 1:
        quotient, exact = p.divide_linear(a, b)
        if not exact:
            break
        p = quotient
        multiplicity += 1
    return multiplicity


def polynomial_sum(polys: Iterable[HomogPoly2], degree: int) -> HomogPoly2:
    total = HomogPoly2.zero(degree)
    for p in polys:
        total = total + p
    return total
