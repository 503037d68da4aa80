"""
Fixed-Locus Graphs

Weighted colored trees indexing the torus-fixed components of the space of
degree-d stable maps to P^3, with canonical forms, automorphism orders and
exhaustive enumeration.

- Vertex colors 0..3 name the fixed points of P^3
- Edge weights are covering degrees of coordinate lines
- Canonical forms root the tree at its center (vertex or edge) and encode
  children recursively, sorted; automorphisms are counted on the way
"""

import itertools
import logging
import math
from collections import Counter, deque
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from typing import Any, Dict, Iterator, List, Sequence, Tuple

import networkx as nx

from .errors import GraphStructureError

logger = logging.getLogger(__name__)

COLORS = (0, 1, 2, 3)

Edge = Tuple[int, int, int]
Adjacency = List[List[Tuple[int, int]]]


@dataclass(frozen=True)
class WeightedColoredTree:
    """A fixed-point graph: vertex colors plus (u, v, weight) edges."""
    colors: Tuple[int, ...]
    edges: Tuple[Edge, ...]

    def __post_init__(self):
        object.__setattr__(self, "colors", tuple(int(c) for c in self.colors))
        object.__setattr__(
            self, "edges", tuple((int(u), int(v), int(w)) for u, v, w in self.edges)
        )
        self.validate()

    def validate(self):
        n = len(self.colors)
        if n == 0:
            raise GraphStructureError("a tree needs at least one vertex")
        for c in self.colors:
            if c not in COLORS:
                raise GraphStructureError(f"color {c} is not one of {COLORS}")
        if len(self.edges) != n - 1:
            raise GraphStructureError(
                f"{n} vertices need {n - 1} edges for a tree, got {len(self.edges)}"
            )
        if not self.edges:
            raise GraphStructureError("degree must be positive: a tree needs at least one edge")
        for u, v, w in self.edges:
            if not (0 <= u < n and 0 <= v < n) or u == v:
                raise GraphStructureError(f"edge ({u}, {v}) is not between two distinct vertices")
            if w < 1:
                raise GraphStructureError(f"edge ({u}, {v}) has non-positive weight {w}")
            if self.colors[u] == self.colors[v]:
                raise GraphStructureError(
                    f"edge ({u}, {v}) joins two vertices of color {self.colors[u]}"
                )
        seen = {0}
        queue = deque([0])
        adjacency = _adjacency(n, self.edges)
        while queue:
            u = queue.popleft()
            for v, _ in adjacency[u]:
                if v not in seen:
                    seen.add(v)
                    queue.append(v)
        if len(seen) != n:
            raise GraphStructureError("edges do not connect all vertices")

    @property
    def num_vertices(self) -> int:
        return len(self.colors)

    @property
    def degree(self) -> int:
        return sum(w for _, _, w in self.edges)

    @cached_property
    def adjacency(self) -> Adjacency:
        return _adjacency(len(self.colors), self.edges)

    def neighbors(self, v: int) -> List[Tuple[int, int]]:
        """(neighbor, edge weight) pairs of v."""
        return list(self.adjacency[v])

    def valence(self, v: int) -> int:
        return len(self.adjacency[v])

    def mu(self, v: int) -> int:
        """Sum of the weights of the edges at v."""
        return sum(w for _, w in self.adjacency[v])

    def relabel(self, permutation: Sequence[int]) -> "WeightedColoredTree":
        """Move vertex v to position permutation[v]."""
        colors = [0] * len(self.colors)
        for old, new in enumerate(permutation):
            colors[new] = self.colors[old]
        edges = tuple((permutation[u], permutation[v], w) for u, v, w in self.edges)
        return WeightedColoredTree(tuple(colors), edges)

    def recolor(self, color_map: Sequence[int]) -> "WeightedColoredTree":
        return WeightedColoredTree(tuple(color_map[c] for c in self.colors), self.edges)

    def to_networkx(self) -> nx.Graph:
        graph = nx.Graph()
        for v, c in enumerate(self.colors):
            graph.add_node(v, color=c)
        for u, v, w in self.edges:
            graph.add_edge(u, v, weight=w)
        return graph

    def to_dot(self, name: str = "G") -> str:
        lines = [f"graph {name} {{"]
        for v, c in enumerate(self.colors):
            lines.append(f'  {v} [label="{c}"];')
        for u, v, w in self.edges:
            lines.append(f'  {u} -- {v} [label="{w}"];')
        lines.append("}")
        return "\n".join(lines)


def _adjacency(n: int, edges: Sequence[Edge]) -> Adjacency:
    adjacency: Adjacency = [[] for _ in range(n)]
    for u, v, w in edges:
        adjacency[u].append((v, w))
        adjacency[v].append((u, w))
    return adjacency


# -- canonical encoding ----------------------------------------------------

def _rooted_code(v: int, parent: int, adjacency: Adjacency, labels: Sequence[int]) -> Tuple[Tuple, int]:
    """Encode the subtree hanging from v; return (code, automorphisms fixing v)."""
    children = []
    aut = 1
    for u, w in adjacency[v]:
        if u == parent:
            continue
        code, child_aut = _rooted_code(u, v, adjacency, labels)
        children.append((w, code))
        aut *= child_aut
    children.sort()
    for multiplicity in Counter(children).values():
        aut *= math.factorial(multiplicity)
    return (labels[v], tuple(children)), aut


def _canonical(adjacency: Adjacency, labels: Sequence[int]) -> Tuple[bytes, int]:
    n = len(adjacency)
    if n == 1:
        return repr(("V", (labels[0], ()))).encode("ascii"), 1
    graph = nx.Graph()
    graph.add_nodes_from(range(n))
    for u in range(n):
        for v, _ in adjacency[u]:
            graph.add_edge(u, v)
    centers = sorted(nx.center(graph))
    if len(centers) == 1:
        code, aut = _rooted_code(centers[0], -1, adjacency, labels)
        return repr(("V", code)).encode("ascii"), aut
    c1, c2 = centers
    weight = next(w for u, w in adjacency[c1] if u == c2)
    half1, aut1 = _rooted_code(c1, c2, adjacency, labels)
    half2, aut2 = _rooted_code(c2, c1, adjacency, labels)
    aut = aut1 * aut2 * (2 if half1 == half2 else 1)
    low, high = sorted((half1, half2))
    return repr(("E", weight, low, high)).encode("ascii"), aut


def canonical_form(tree: WeightedColoredTree) -> bytes:
    """Byte key equal for two trees iff they are isomorphic as colored weighted trees."""
    return _canonical(tree.adjacency, tree.colors)[0]


def automorphism_order(tree: WeightedColoredTree) -> int:
    """Vertex permutations preserving adjacency, edge weights and colors."""
    return _canonical(tree.adjacency, tree.colors)[1]


def a_gamma(tree: WeightedColoredTree) -> int:
    """Automorphisms of the fixed stable map: graph automorphisms times edge deck groups."""
    return automorphism_order(tree) * math.prod(w for _, _, w in tree.edges)


def shape_automorphism_order(tree: WeightedColoredTree) -> int:
    """Weight-preserving automorphisms of the underlying tree, colors ignored."""
    return _canonical(tree.adjacency, [0] * tree.num_vertices)[1]


def combinatorial_type(tree: WeightedColoredTree) -> bytes:
    """Canonical form up to renaming the four colors."""
    return min(
        canonical_form(tree.recolor(permutation))
        for permutation in itertools.permutations(COLORS)
    )


def proper_coloring_count(num_vertices: int, colors: int = len(COLORS)) -> int:
    """Proper colorings of a labeled tree: t(t-1)^(v-1)."""
    return colors * (colors - 1) ** (num_vertices - 1)


@dataclass(frozen=True)
class GraphClass:
    """One isomorphism class of fixed-point graphs."""
    representative: WeightedColoredTree
    aut_order: int
    canonical_key: bytes

    @classmethod
    def from_tree(cls, tree: WeightedColoredTree) -> "GraphClass":
        key, aut = _canonical(tree.adjacency, tree.colors)
        return cls(representative=tree, aut_order=aut, canonical_key=key)

    @property
    def degree(self) -> int:
        return self.representative.degree

    @property
    def a_gamma(self) -> int:
        return self.aut_order * math.prod(w for _, _, w in self.representative.edges)

    def to_dict(self) -> Dict[str, Any]:
        return {
            "colors": list(self.representative.colors),
            "edges": [list(e) for e in self.representative.edges],
            "aut_order": self.aut_order,
            "canonical": self.canonical_key.hex(),
        }

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> "GraphClass":
        tree = WeightedColoredTree(tuple(data["colors"]), tuple(tuple(e) for e in data["edges"]))
        return cls(
            representative=tree,
            aut_order=int(data["aut_order"]),
            canonical_key=bytes.fromhex(data["canonical"]),
        )


# -- enumeration -----------------------------------------------------------

def tree_shapes(num_vertices: int) -> List[Tuple[Tuple[int, int], ...]]:
    """
    All unlabeled trees on num_vertices vertices, as edge lists.

    Trees are grown one leaf at a time from the single vertex and deduplicated
    by canonical form at every size.
    """
    if num_vertices < 1:
        raise ValueError("a tree needs at least one vertex")
    level: Dict[bytes, Tuple[Tuple[int, int], ...]] = {b"": ()}
    for n in range(1, num_vertices):
        grown: Dict[bytes, Tuple[Tuple[int, int], ...]] = {}
        for edges in level.values():
            for v in range(n):
                candidate = edges + ((v, n),)
                adjacency = _adjacency(n + 1, [(a, b, 1) for a, b in candidate])
                key, _ = _canonical(adjacency, [0] * (n + 1))
                grown.setdefault(key, candidate)
        level = grown
    return [level[key] for key in sorted(level)]


def _compositions(total: int, parts: int) -> Iterator[Tuple[int, ...]]:
    """Ordered ways to write total as a sum of `parts` positive integers."""
    for cuts in itertools.combinations(range(1, total), parts - 1):
        bounds = (0,) + cuts + (total,)
        yield tuple(bounds[i + 1] - bounds[i] for i in range(parts))


def weighted_shapes(degree: int) -> List[Tuple[int, Tuple[Edge, ...]]]:
    """Weighted uncolored trees of total weight `degree`, one per isomorphism class."""
    shapes: Dict[bytes, Tuple[int, Tuple[Edge, ...]]] = {}
    for num_edges in range(1, degree + 1):
        n = num_edges + 1
        for edges in tree_shapes(n):
            for weights in _compositions(degree, num_edges):
                weighted = tuple((u, v, w) for (u, v), w in zip(edges, weights))
                key, _ = _canonical(_adjacency(n, weighted), [0] * n)
                shapes.setdefault(key, (n, weighted))
    return [shapes[key] for key in sorted(shapes)]


def _proper_colorings(num_vertices: int, adjacency: Adjacency) -> Iterator[Tuple[int, ...]]:
    order = []
    parent = {0: -1}
    queue = deque([0])
    while queue:
        u = queue.popleft()
        order.append(u)
        for v, _ in adjacency[u]:
            if v not in parent:
                parent[v] = u
                queue.append(v)
    for choices in itertools.product(range(len(COLORS)), *[range(len(COLORS) - 1)] * (num_vertices - 1)):
        colors = [0] * num_vertices
        colors[order[0]] = COLORS[choices[0]]
        for v, choice in zip(order[1:], choices[1:]):
            allowed = [c for c in COLORS if c != colors[parent[v]]]
            colors[v] = allowed[choice]
        yield tuple(colors)


def enumerate_fixed_graphs(degree: int) -> List[GraphClass]:
    """
    One representative per isomorphism class of fixed-point graphs of degree d.

    Args:
        degree: total edge weight d >= 1

    Returns:
        List[GraphClass]: sorted by canonical key
    """
    if degree < 1:
        raise GraphStructureError("degree must be positive")

    classes: Dict[bytes, GraphClass] = {}
    shapes = weighted_shapes(degree)
    logger.info(f"Enumerating colorings of {len(shapes)} weighted tree shapes for degree {degree}")
    for n, edges in shapes:
        adjacency = _adjacency(n, edges)
        for colors in _proper_colorings(n, adjacency):
            key, aut = _canonical(adjacency, colors)
            if key not in classes:
                classes[key] = GraphClass(
                    representative=WeightedColoredTree(colors, edges),
                    aut_order=aut,
                    canonical_key=key,
                )
    result = [classes[key] for key in sorted(classes)]
    logger.info(f"Degree {degree}: {len(result)} fixed-point graph classes")
    return result


def shape_form(tree: WeightedColoredTree) -> bytes:
    """Canonical form of the weighted tree with colors ignored."""
    return _canonical(tree.adjacency, [0] * tree.num_vertices)[0]


def coloring_shortfall(degree: int, classes: Sequence[GraphClass]) -> Dict[bytes, Fraction]:
    """
    Labeled proper colorings per weighted shape that `classes` fail to cover.

    A class covers shape_automorphism_order / aut_order colorings of its shape,
    and the classes of one shape with v vertices cover 4 * 3^(v-1) of them
    between them. Positive values are missing colorings, negative ones surplus;
    the result is empty exactly when every weighted shape of the degree is
    covered once.
    """
    covered: Dict[bytes, Fraction] = {}
    for graph_class in classes:
        tree = graph_class.representative
        key, shape_aut = _canonical(tree.adjacency, [0] * tree.num_vertices)
        covered[key] = covered.get(key, Fraction(0)) + Fraction(shape_aut, graph_class.aut_order)

    shortfall: Dict[bytes, Fraction] = {}
    for n, edges in weighted_shapes(degree):
        key = _canonical(_adjacency(n, edges), [0] * n)[0]
        missing = proper_coloring_count(n) - covered.pop(key, Fraction(0))
        if missing:
            shortfall[key] = missing
    for key, surplus in covered.items():
        shortfall[key] = -surplus
    return shortfall


@dataclass
class TypeSummary:
    """Classes sharing one combinatorial type (colors up to renaming)."""
    type_key: bytes
    representative: WeightedColoredTree
    a_gamma: int
    count: int = 0

    def to_dict(self) -> Dict[str, Any]:
        return {
            "colors": list(self.representative.colors),
            "edges": [list(e) for e in self.representative.edges],
            "weights": sorted((w for _, _, w in self.representative.edges), reverse=True),
            "a_gamma": self.a_gamma,
            "count": self.count,
        }


def type_statistics(classes: Sequence[GraphClass]) -> List[TypeSummary]:
    """Group classes by combinatorial type, ordered by edge count then key."""
    summaries: Dict[bytes, TypeSummary] = {}
    for graph_class in classes:
        key = combinatorial_type(graph_class.representative)
        summary = summaries.get(key)
        if summary is None:
            summary = summaries[key] = TypeSummary(
                type_key=key,
                representative=graph_class.representative,
                a_gamma=graph_class.a_gamma,
            )
        summary.count += 1
    return sorted(
        summaries.values(),
        key=lambda s: (len(s.representative.edges), s.type_key),
    )

