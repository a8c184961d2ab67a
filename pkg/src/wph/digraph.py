"""Weighted digraphs, their path complexes, and the box product with line digraphs."""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Mapping, Optional

from .algebra import Ring
from .errors import InvariantError
from .pathcx import Path, PathComplex, Vertex, complex_from_paths


@dataclass(frozen=True)
class LineDigraph:
    """The line digraph I_n on vertices 0..n; steps[k] is True for k -> k+1."""

    steps: tuple

    @classmethod
    def forward(cls, n: int = 1) -> "LineDigraph":
        return cls((True,) * n)

    @classmethod
    def backward(cls, n: int = 1) -> "LineDigraph":
        return cls((False,) * n)

    @property
    def n(self) -> int:
        return len(self.steps)

    def arrows(self) -> list:
        return [(k, k + 1) if fwd else (k + 1, k) for k, fwd in enumerate(self.steps)]


I1_FORWARD = LineDigraph.forward(1)
I1_BACKWARD = LineDigraph.backward(1)


@dataclass(frozen=True)
class WeightedDigraph:
    """A loop-free digraph, optionally with a vertex weight function."""

    vertices: frozenset
    edges: frozenset  # frozenset of (Vertex, Vertex)
    weights: Optional[tuple] = None  # sorted tuple of (Vertex, scalar)
    ring: Optional[Ring] = None

    @classmethod
    def build(
        cls,
        vertices: Iterable[Vertex],
        edges: Iterable[tuple],
        weights: Optional[Mapping[Vertex, object]] = None,
        ring: Optional[Ring] = None,
    ) -> "WeightedDigraph":
        vertices = frozenset(vertices)
        edges = frozenset(edges)
        for x, y in edges:
            if x == y:
                raise InvariantError(f"loop at vertex {x.render()}")
            if x not in vertices or y not in vertices:
                raise InvariantError(f"edge ({x.render()} -> {y.render()}) uses unknown vertex")
        wt = None
        if weights is not None:
            if ring is None:
                raise InvariantError("weights need a coefficient ring")
            wt = tuple(sorted((v, ring.coerce(x)) for v, x in weights.items()))
            declared = {v for v, _ in wt}
            if not vertices <= declared:
                missing = sorted(vertices - declared)[0]
                raise InvariantError(f"vertex {missing.render()} has no weight")
        return cls(vertices, edges, wt, ring)

    @property
    def is_weighted(self) -> bool:
        return self.weights is not None

    def weight_map(self) -> dict:
        return dict(self.weights) if self.weights is not None else {}

    def successors(self, v: Vertex) -> list:
        return sorted(y for x, y in self.edges if x == v)


def paths_functor(g: WeightedDigraph, maxlen: int) -> PathComplex:
    """All edge-paths of length <= maxlen, as a weighted path complex."""
    paths = [Path.of(v) for v in g.vertices]
    frontier = list(paths)
    for _ in range(maxlen):
        nxt = []
        for p in frontier:
            for y in g.successors(p.vertices[-1]):
                nxt.append(Path(p.vertices + (y,)))
        paths.extend(nxt)
        frontier = nxt
    return complex_from_paths(paths, g.weight_map() if g.is_weighted else None, g.ring)


def box_product(g: WeightedDigraph, line: LineDigraph) -> WeightedDigraph:
    """The digraph box product G x I_n; level i is encoded as prime level +i."""

    def lift(v: Vertex, i: int) -> Vertex:
        return Vertex(v.label, v.prime + i)

    levels = range(line.n + 1)
    vertices = {lift(v, i) for v in g.vertices for i in levels}
    edges = {(lift(x, i), lift(y, i)) for x, y in g.edges for i in levels}
    edges.update((lift(v, i), lift(v, j)) for v in g.vertices for i, j in line.arrows())
    weights = None
    if g.is_weighted:
        weights = {lift(v, i): w for v, w in g.weight_map().items() for i in levels}
    return WeightedDigraph.build(vertices, edges, weights, g.ring)


@dataclass
class EqualityReport:
    equal: bool
    only_left: list = field(default_factory=list)
    only_right: list = field(default_factory=list)
    problems: list = field(default_factory=list)


def compare_weighted_complexes(left: PathComplex, right: PathComplex) -> EqualityReport:
    """Structural equality of two weighted path complexes (paths and weights)."""
    only_left = sorted(left.paths - right.paths, key=lambda p: (p.length, p.vertices))
    only_right = sorted(right.paths - left.paths, key=lambda p: (p.length, p.vertices))
    problems = []
    if left.vertices != right.vertices:
        problems.append("vertex sets differ")
    if left.is_weighted != right.is_weighted:
        problems.append("one side is weighted, the other is not")
    elif left.is_weighted and left.weights != right.weights:
        problems.append("weight functions differ")
    equal = not (only_left or only_right or problems)
    return EqualityReport(equal, only_left, only_right, problems)


def check_cylinder_equality(g: WeightedDigraph, maxlen: int) -> EqualityReport:
    """Cylinder of the path complex vs path complex of the box product with 0 -> 1.

    Both sides are compared on paths of length <= maxlen + 1: the cylinder is
    taken over the (maxlen+1)-truncated complex and cut back to maxlen + 1, so
    that the two finite truncations of the equality of unbounded complexes
    match exactly.
    """
    left = paths_functor(g, maxlen + 1).cylinder().truncate(maxlen + 1)
    right = paths_functor(box_product(g, I1_FORWARD), maxlen + 1)
    return compare_weighted_complexes(left, right)
