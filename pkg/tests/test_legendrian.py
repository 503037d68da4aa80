import math
from fractions import Fraction

import pytest
import sympy

from core.errors import DegenerateParametrization, DomainError
from core.exactmath import HomogPoly2
from core.legendrian import (
    RationalCurveParam,
    SymplecticForm,
    buczynski,
    contact_pairing,
    contact_plane,
    is_contact,
    osculation_multiplicity,
    parse_curve,
    parse_point,
    plane_section,
    reparametrize,
    second_intersection,
)

S = HomogPoly2.monomial(1, 0)
T = HomogPoly2.monomial(0, 1)

COPRIME_PAIRS = [(k, l) for k in range(2, 12) for l in range(1, k) if k + l <= 12 and math.gcd(k, l) == 1]


def test_symplectic_form():
    assert SymplecticForm.is_antisymmetric()
    assert SymplecticForm.determinant() == 1
    assert sympy.Matrix(SymplecticForm.MATRIX).det() == 1


def test_twisted_cubic():
    cubic = buczynski(2, 1)
    assert cubic.coords == (S ** 3, T ** 3 * Fraction(1, 3), S * T * T, S * S * T)
    pairing = contact_pairing(cubic)
    assert pairing.degree == 4
    assert pairing.is_zero()


def test_twisted_cubic_pairing_terms():
    # 3s^2 t^2 - 4 s^2 t^2 + s^2 t^2
    fs = [c.partial_s() for c in buczynski(2, 1).coords]
    ft = [c.partial_t() for c in buczynski(2, 1).coords]
    assert fs[0] * ft[1] == HomogPoly2.monomial(2, 2, 3)
    assert fs[3] * ft[2] == HomogPoly2.monomial(2, 2, 4)
    assert fs[2] * ft[3] == HomogPoly2.monomial(2, 2, 1)


def test_model_quartic():
    quartic = buczynski(3, 1)
    assert quartic.coords == (S ** 4, T ** 4 * Fraction(1, 2), S * T ** 3, S ** 3 * T)
    assert is_contact(quartic)


def test_line_is_not_contact():
    line = parse_curve("1,0;0,1;0;0")
    assert contact_pairing(line) == HomogPoly2.constant(1)
    assert not is_contact(line)


def test_proportional_first_pair_is_contact():
    f = RationalCurveParam((S * S + T * T, (S * S + T * T) * 3, HomogPoly2.zero(2), HomogPoly2.zero(2)))
    assert is_contact(f)


@pytest.mark.parametrize("k,l", COPRIME_PAIRS)
def test_buczynski_family_is_contact(k, l):
    f = buczynski(k, l)
    assert f.degree == k + l
    assert f.coords[1].coefficient(0) == Fraction(k - l, k + l)
    assert is_contact(f)


@pytest.mark.parametrize("k,l", [(4, 2), (2, 2), (1, 2), (3, 0)])
def test_buczynski_domain(k, l):
    with pytest.raises(DomainError):
        buczynski(k, l)


def test_contact_plane():
    assert contact_plane(buczynski(2, 1), (1, 0)) == (0, -1, 0, 0)
    assert contact_plane(buczynski(3, 1), (1, 0)) == (0, -1, 0, 0)
    assert contact_plane(buczynski(3, 1), (0, 1)) == (Fraction(1, 2), 0, 0, 0)


def test_contact_plane_projective_invariance():
    f = buczynski(3, 2)
    plane = contact_plane(f, (2, 3))
    scaled = contact_plane(f, (6, 9))
    ratio = scaled[0] / plane[0]
    assert all(b == ratio * a for a, b in zip(plane, scaled))


def test_degenerate_point():
    f = RationalCurveParam((S * T, S * T, S * T, S * T))
    with pytest.raises(DegenerateParametrization):
        contact_plane(f, (1, 0))


def test_plane_section_of_model_quartic_factors():
    s, t = sympy.symbols("s t")
    section = plane_section(buczynski(3, 1), (1, 1))
    expr = sum(sympy.Rational(c.numerator, c.denominator) * s ** a * t ** (4 - a)
               for a, c in enumerate(section.coeffs))
    assert sympy.factor(expr - sympy.Rational(1, 2) * (s - t) ** 3 * (s + t)) == 0


@pytest.mark.parametrize("curve,point,expected", [
    ((3, 1), (1, 1), 3),
    ((3, 1), (1, 0), 4),
    ((3, 1), (0, 1), 4),
    ((2, 1), (1, 1), 3),
])
def test_osculation_multiplicity(curve, point, expected):
    assert osculation_multiplicity(buczynski(*curve), point) == expected


@pytest.mark.parametrize("k,l", [(2, 1), (3, 1), (3, 2), (4, 1), (5, 2)])
def test_contact_curves_osculate(k, l):
    f = buczynski(k, l)
    for point in [(1, 1), (2, -3), (Fraction(1, 5), 7), (-4, 1)]:
        assert osculation_multiplicity(f, point) >= 3


def test_curve_in_its_plane():
    f = RationalCurveParam((S, HomogPoly2.zero(1), T, HomogPoly2.zero(1)))
    assert is_contact(f)
    assert osculation_multiplicity(f, (1, 1)) is None
    assert second_intersection(f, (1, 1)) is None


def test_second_intersection_is_the_involution():
    quartic = buczynski(3, 1)
    for a in [1, 2, Fraction(-3, 4), 5]:
        assert second_intersection(quartic, (a, 1)) == (-a, 1)
    assert second_intersection(quartic, (1, 0)) == (1, 0)


def test_reparametrization_invariance():
    for k, l in [(2, 1), (3, 1), (4, 3)]:
        f = buczynski(k, l)
        g = reparametrize(f, 2, -1, 3, 5)
        assert is_contact(g)
    line = parse_curve("1,0;0,1;0;0")
    assert not is_contact(reparametrize(line, 1, 1, 0, 1))
    with pytest.raises(DomainError):
        reparametrize(line, 1, 2, 2, 4)


def test_pairing_is_antisymmetric():
    f = parse_curve("1,2,0;0,1,1;3,0,1;1,1,1")
    fs = [c.partial_s() for c in f.coords]
    ft = [c.partial_t() for c in f.coords]
    assert SymplecticForm.pair(ft, fs) == -contact_pairing(f)


def test_parse_curve():
    assert parse_curve("buczynski:3,1") == buczynski(3, 1)
    f = parse_curve("1,0,0;0,0,1/3;0;0")
    assert f.coords[0] == S * S
    assert f.coords[1] == T * T * Fraction(1, 3)
    assert f.coords[2].is_zero() and f.coords[2].degree == 2


@pytest.mark.parametrize("text", ["1,0;0,1;0", "1,0;0,1,1;0;0", "0;0;0;0", "buczynski:3", "a,b;0;0;0",
                                  "1;1;1;1"])
def test_parse_curve_errors(text):
    with pytest.raises(DomainError):
        parse_curve(text)


def test_parse_point():
    assert parse_point("1,0") == (1, 0)
    with pytest.raises(DomainError):
        parse_point("0,0")
    with pytest.raises(DomainError):
        parse_point("1,2,3")
