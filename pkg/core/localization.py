"""
Localization Factors

Per-graph equivariant quantities of the fixed-point formula, evaluated at a
numeric specialization of the torus weights:

- vertex_factor V(G) and edge_factor E(G), whose product is the inverse
  equivariant Euler class of the virtual normal bundle
- incidence_class H_T(G), the restriction of the line-incidence divisor
- contact_class, the top Chern class of the rank 2d-1 contact bundle
- graph_contribution, the summand of one isomorphism class

Zero denominators raise SpecializationDegenerate; callers resample.
"""

import logging
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence, Tuple

from .errors import SpecializationDegenerate
from .exactmath import Scalar, as_rational, format_rational
from .graphs import COLORS, GraphClass, WeightedColoredTree

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class TorusSpec:
    """Specialization of the torus weights lambda_0..lambda_3."""
    lam: Tuple[Fraction, Fraction, Fraction, Fraction]

    def __post_init__(self):
        values = tuple(as_rational(x) for x in self.lam)
        if len(values) != len(COLORS):
            raise ValueError(f"a torus specialization needs {len(COLORS)} weights, got {len(values)}")
        if len(set(values)) != len(values):
            raise ValueError(f"torus weights must be pairwise distinct: {[format_rational(x) for x in values]}")
        object.__setattr__(self, "lam", values)

    @classmethod
    def from_values(cls, values: Iterable[Scalar]) -> "TorusSpec":
        return cls(tuple(values))

    def __getitem__(self, color: int) -> Fraction:
        return self.lam[color]

    def scaled(self, factor: Scalar) -> "TorusSpec":
        factor = as_rational(factor)
        if factor == 0:
            raise ValueError("scale factor must be nonzero")
        return TorusSpec(tuple(factor * x for x in self.lam))

    def as_strings(self):
        return [format_rational(x) for x in self.lam]


@dataclass(frozen=True)
class ClassSelector:
    """Which class is integrated: H^m, optionally times the contact class."""
    incidence_exponent: int
    include_contact_class: bool

    def __post_init__(self):
        if self.incidence_exponent < 0:
            raise ValueError("incidence exponent must be nonnegative")

    @classmethod
    def contact(cls, degree: int) -> "ClassSelector":
        return cls(incidence_exponent=2 * degree + 1, include_contact_class=True)

    @classmethod
    def gw_lines(cls, degree: int) -> "ClassSelector":
        return cls(incidence_exponent=4 * degree, include_contact_class=False)

    def is_balanced(self, degree: int) -> bool:
        """Total class degree equals dim M_{0,0}(P^3, d) = 4d."""
        contact_rank = 2 * degree - 1 if self.include_contact_class else 0
        return self.incidence_exponent + contact_rank == 4 * degree


def _power(base: Fraction, exponent: int, what: str) -> Fraction:
    if exponent == 0:
        return Fraction(1)
    if exponent < 0 and base == 0:
        raise SpecializationDegenerate(f"zero {what} raised to the power {exponent}")
    return base ** exponent


def _difference(w: TorusSpec, i: int, j: int) -> Fraction:
    return w[i] - w[j]


def tangent_weight(color: int, w: TorusSpec) -> Fraction:
    """Top Chern class of the tangent space of P^3 at the fixed point `color`."""
    return math.prod((w[color] - w[j] for j in COLORS if j != color), start=Fraction(1))


def vertex_factor(g: WeightedColoredTree, w: TorusSpec) -> Fraction:
    """
    V(G) = prod_v T(i_v)^(val-1) * (sum_e d_e/(l_i - l_j))^(val-3) * prod_e d_e/(l_i - l_j)
    """
    result = Fraction(1)
    for v in range(g.num_vertices):
        i = g.colors[v]
        flag_sum = Fraction(0)
        flag_product = Fraction(1)
        for u, d_e in g.adjacency[v]:
            weight = Fraction(d_e) / _difference(w, i, g.colors[u])
            flag_sum += weight
            flag_product *= weight
        valence = g.valence(v)
        result *= _power(tangent_weight(i, w), valence - 1, "tangent weight")
        result *= _power(flag_sum, valence - 3, f"flag sum at vertex {v} (color {i})")
        result *= flag_product
    return result


def edge_factor(g: WeightedColoredTree, w: TorusSpec) -> Fraction:
    """
    E(G) = prod_e (-1)^d (d/(l_i - l_j))^(2d) / (d!)^2
             * prod_{k != i,j} prod_{a=0..d} 1/((a l_i + (d-a) l_j)/d - l_k)
    """
    result = Fraction(1)
    for u, v, d in g.edges:
        i, j = g.colors[u], g.colors[v]
        factor = Fraction((-1) ** d * d ** (2 * d), math.factorial(d) ** 2)
        factor /= _difference(w, i, j) ** (2 * d)
        for k in COLORS:
            if k in (i, j):
                continue
            for alpha in range(d + 1):
                denominator = (alpha * w[i] + (d - alpha) * w[j]) / d - w[k]
                if denominator == 0:
                    raise SpecializationDegenerate(
                        f"edge ({u}, {v}) weight {d}: ({alpha}*l{i} + {d - alpha}*l{j})/{d} - l{k} = 0"
                    )
                factor /= denominator
        result *= factor
    return result


def euler_inverse(g: WeightedColoredTree, w: TorusSpec) -> Fraction:
    """1 / Euler^T of the virtual normal bundle: V(G) * E(G)."""
    return vertex_factor(g, w) * edge_factor(g, w)


def incidence_class(g: WeightedColoredTree, w: TorusSpec) -> Fraction:
    """H_T(G) = sum_v mu(v) * lambda_{i_v}."""
    return sum((g.mu(v) * w[g.colors[v]] for v in range(g.num_vertices)), Fraction(0))


def contact_class(g: WeightedColoredTree, w: TorusSpec) -> Fraction:
    """
    prod_e prod_{a=1..2d-1} (a l_i + (2d-a) l_j)/d * prod_v (2 l_{i_v})^(val-1)
    """
    result = Fraction(1)
    for u, v, d in g.edges:
        i, j = g.colors[u], g.colors[v]
        for alpha in range(1, 2 * d):
            result *= (alpha * w[i] + (2 * d - alpha) * w[j]) / d
    for v in range(g.num_vertices):
        result *= (2 * w[g.colors[v]]) ** (g.valence(v) - 1)
    return result


def graph_contribution(graph_class: GraphClass, w: TorusSpec, selector: ClassSelector) -> Fraction:
    """
    Summand of one isomorphism class:
    [contact] * H_T^m * V * E / a(G)
    """
    g = graph_class.representative
    value = incidence_class(g, w) ** selector.incidence_exponent
    if selector.include_contact_class:
        value *= contact_class(g, w)
    return value * euler_inverse(g, w) / graph_class.a_gamma


def sum_graph_contributions(
    classes: Sequence[GraphClass], w: TorusSpec, selector: ClassSelector
) -> Fraction:
    return sum((graph_contribution(c, w, selector) for c in classes), Fraction(0))
