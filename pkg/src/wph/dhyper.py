"""Weighted directed hypergraphs: morphism classes, functors, box product, homology."""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Mapping, Optional

from .algebra import Ring
from .chain import HomologyResult, homology
from .digraph import I1_FORWARD, LineDigraph, WeightedDigraph
from .errors import InvariantError, MissingWeightError, NotAMorphismError
from .pathcx import Path, PathComplex, Vertex, complex_from_paths


@dataclass(frozen=True)
class Arrow:
    """An ordered pair of disjoint non-empty vertex sets (origin -> end)."""

    origin: frozenset
    end: frozenset

    def __post_init__(self):
        if not self.origin or not self.end:
            raise InvariantError("arrow origin and end must be non-empty")
        if self.origin & self.end:
            raise InvariantError("origin and end must be disjoint")

    def render(self) -> str:
        o = ",".join(sorted(v.render() for v in self.origin))
        e = ",".join(sorted(v.render() for v in self.end))
        return f"{{{o}}} -> {{{e}}}"

    def sort_key(self):
        return (sorted(self.origin), sorted(self.end))


@dataclass(frozen=True)
class DirectedHypergraph:
    vertices: frozenset
    arrows: frozenset  # frozenset of Arrow
    weights: Optional[tuple] = None
    ring: Optional[Ring] = None

    @classmethod
    def build(
        cls,
        arrows: Iterable[Arrow],
        weights: Optional[Mapping[Vertex, object]] = None,
        ring: Optional[Ring] = None,
    ) -> "DirectedHypergraph":
        arrows = frozenset(arrows)
        if not arrows:
            raise InvariantError("a directed hypergraph needs at least one arrow")
        vertices = frozenset().union(*(a.origin | a.end for a in arrows))
        wt = None
        if weights is not None:
            if ring is None:
                raise InvariantError("weights need a coefficient ring")
            extra = set(weights) - vertices
            if extra:
                raise InvariantError(
                    f"weighted vertex {sorted(extra)[0].render()} is not covered by any arrow"
                )
            wt = tuple(sorted((v, ring.coerce(x)) for v, x in weights.items()))
            if {v for v, _ in wt} != vertices:
                missing = sorted(vertices - {v for v, _ in wt})[0]
                raise InvariantError(f"vertex {missing.render()} has no weight")
        return cls(vertices, arrows, wt, ring)

    @property
    def is_weighted(self) -> bool:
        return self.weights is not None

    def weight_map(self) -> dict:
        return dict(self.weights) if self.weights is not None else {}

    def sorted_arrows(self) -> list:
        return sorted(self.arrows, key=Arrow.sort_key)

    def origin_end_sets(self) -> list:
        """P01(G): every origin set and every end set, canonically ordered."""
        sets = {a.origin for a in self.arrows} | {a.end for a in self.arrows}
        return sorted(sets, key=sorted)


@dataclass(frozen=True)
class Hypergraph:
    """An undirected hypergraph: distinct edges of size >= 2 covering V."""

    vertices: frozenset
    edges: frozenset  # frozenset of frozensets

    @classmethod
    def build(cls, edges: Iterable[frozenset]) -> "Hypergraph":
        edges = frozenset(frozenset(e) for e in edges)
        if not edges:
            raise InvariantError("a hypergraph needs at least one edge")
        for e in edges:
            if len(e) < 2:
                raise InvariantError("hypergraph edges need strictly more than one element")
        return cls(frozenset().union(*edges), edges)


def set_weight(xs: Iterable[Vertex], weights: Mapping[Vertex, object], ring: Ring):
    """|X|: the sum of the member weights."""
    total = ring.zero
    for x in sorted(xs):
        if x not in weights:
            raise MissingWeightError(f"vertex {x.render()} has no weight")
        total = ring.add(total, weights[x])
    return total


@dataclass
class HyperMorphism:
    """A vertex map between directed hypergraphs; arrows map by image sets."""

    source: DirectedHypergraph
    target: DirectedHypergraph
    vertex_map: dict

    def image_set(self, xs: frozenset) -> frozenset:
        return frozenset(self.vertex_map[v] for v in xs)

    def image_arrow(self, a: Arrow) -> Arrow:
        """The arrow of the target matching (f(A) -> f(B)); NotAMorphism otherwise."""
        img_o, img_e = self.image_set(a.origin), self.image_set(a.end)
        for b in self.target.arrows:
            if b.origin == img_o and b.end == img_e:
                return b
        raise NotAMorphismError(
            f"image of arrow {a.render()} is not an arrow of the target"
        )

    def check(self) -> None:
        for v in sorted(self.source.vertices):
            if v not in self.vertex_map:
                raise NotAMorphismError(f"vertex {v.render()} is unmapped")
            if self.vertex_map[v] not in self.target.vertices:
                raise NotAMorphismError(
                    f"image of {v.render()} is not a target vertex"
                )
        for a in self.source.sorted_arrows():
            self.image_arrow(a)


@dataclass
class WeightClassification:
    vertex_weighted: bool
    edge_weighted: bool
    strong_weighted: bool


def classify_morphism(f: HyperMorphism) -> WeightClassification:
    """Vertex-/edge-/strong-weighted flags of a (checked) morphism."""
    f.check()
    g, h = f.source, f.target
    if not (g.is_weighted and h.is_weighted) or g.ring != h.ring:
        raise MissingWeightError("classification needs both sides weighted over one ring")
    wg, wh, ring = g.weight_map(), h.weight_map(), g.ring
    vertex = all(wh[f.vertex_map[v]] == wg[v] for v in g.vertices)
    edge = True
    for a in g.sorted_arrows():
        b = f.image_arrow(a)
        if set_weight(a.origin, wg, ring) != set_weight(b.origin, wh, ring):
            edge = False
        if set_weight(a.end, wg, ring) != set_weight(b.end, wh, ring):
            edge = False
    return WeightClassification(vertex, edge, vertex and edge)


def _set_vertex(xs: frozenset) -> Vertex:
    """Canonical vertex for a set of vertices, e.g. {a,b}.

    Sets whose members share one prime level keep that level on the produced
    vertex, so box-product level sets line up with cylinder priming.
    """
    primes = {v.prime for v in xs}
    if len(primes) == 1:
        level = primes.pop()
        label = "{" + ",".join(sorted(v.label for v in xs)) + "}"
        return Vertex(label, level)
    label = "{" + ",".join(sorted(v.render() for v in xs)) + "}"
    return Vertex(label, 0)


def natural_digraph(g: DirectedHypergraph) -> WeightedDigraph:
    """The digraph on P01(G) with one edge per arrow; set weights as vertex weights."""
    if not g.is_weighted:
        raise MissingWeightError("the natural digraph carries set weights")
    wmap, ring = g.weight_map(), g.ring
    vertex_of = {s: _set_vertex(s) for s in g.origin_end_sets()}
    edges = {(vertex_of[a.origin], vertex_of[a.end]) for a in g.arrows}
    weights = {vertex_of[s]: set_weight(s, wmap, ring) for s in vertex_of}
    return WeightedDigraph.build(vertex_of.values(), edges, weights, ring)


def edge_weighted_homology(g: DirectedHypergraph, max_degree: int, maxlen: int = 4) -> HomologyResult:
    """H^e: weighted path homology of the path complex of the natural digraph."""
    from .digraph import paths_functor

    return homology(paths_functor(natural_digraph(g), maxlen), max_degree)


def _paths_by_steps(start_vertices, step, maxlen: int) -> list:
    paths = [Path.of(v) for v in sorted(start_vertices)]
    frontier = list(paths)
    for _ in range(maxlen):
        nxt = []
        for p in frontier:
            for y in step(p.vertices[-1]):
                nxt.append(Path(p.vertices + (y,)))
        paths.extend(nxt)
        frontier = nxt
    return paths


def connective_functor(g: DirectedHypergraph, maxlen: int) -> PathComplex:
    """Paths stepping by equality or by (initial vertex -> terminal vertex)."""
    succ: dict = {v: {v} for v in g.vertices}
    for a in g.arrows:
        for v in a.origin:
            succ[v].update(a.end)
    step = lambda v: sorted(succ[v])
    paths = _paths_by_steps(g.vertices, step, maxlen)
    return complex_from_paths(paths, g.weight_map() if g.is_weighted else None, g.ring)


def underlying_hypergraph(g: DirectedHypergraph) -> Hypergraph:
    """Forget directions: edges are the unions A | B, deduplicated."""
    return Hypergraph.build(a.origin | a.end for a in g.arrows)


def merged_arrow_count(g: DirectedHypergraph) -> int:
    """How many arrows collapsed into shared undirected edges."""
    return len(g.arrows) - len(underlying_hypergraph(g).edges)


def density_two_functor(h: Hypergraph, maxlen: int) -> PathComplex:
    """Paths whose consecutive vertex pairs (repeats included) share an edge."""
    neigh: dict = {v: set() for v in h.vertices}
    for e in h.edges:
        for v in e:
            neigh[v].update(e)  # includes v itself: the pair (v, v) lies in e
    step = lambda v: sorted(neigh[v])
    paths = _paths_by_steps(h.vertices, step, maxlen)
    return complex_from_paths(paths)


def density_two_of(g: DirectedHypergraph, maxlen: int) -> PathComplex:
    """[H2 E]^v(G): density-two complex of the underlying hypergraph, reweighted."""
    pc = density_two_functor(underlying_hypergraph(g), maxlen)
    if g.is_weighted:
        return pc.reweighted(g.weight_map(), g.ring)
    return pc


def _bold_accepted(g: DirectedHypergraph, maxlen: int) -> set:
    """All paths of length <= maxlen admitting a full bold decomposition.

    Forward dynamic program over NFA states instead of enumerating
    decompositions:
      pre(e)    -- inside the opening block, all vertices so far in A_e;
      mid(e,f)  -- crossed e, connector block so far inside B_e & A_f;
      post(e)   -- crossed e, closing block so far inside B_e (accepting).
    """
    arrows = g.sorted_arrows()
    accepted = set()
    # initial states per starting vertex
    start = {}
    for v in sorted(g.vertices):
        states = frozenset(
            ("pre", i) for i, a in enumerate(arrows) if v in a.origin
        )
        if states:
            start[v] = states

    def arrival_states(w: Vertex, crossed: int) -> frozenset:
        out = [("post", crossed)]
        for j, b in enumerate(arrows):
            if w in b.origin:
                out.append(("mid", crossed, j))
        return frozenset(out)

    frontier = [(Path.of(v), states) for v, states in sorted(start.items())]
    while frontier:
        nxt = []
        for path, states in frontier:
            if any(s[0] == "post" for s in states):
                accepted.add(path)
            if path.length == maxlen:
                continue
            moves: dict = {}
            for s in states:
                if s[0] == "pre":
                    i = s[1]
                    for u in arrows[i].origin:
                        moves.setdefault(u, set()).add(s)
                    for u in arrows[i].end:
                        moves.setdefault(u, set()).update(arrival_states(u, i))
                elif s[0] == "mid":
                    _, e, f = s
                    zone = arrows[e].end & arrows[f].origin
                    for u in zone:
                        moves.setdefault(u, set()).add(s)
                    for u in arrows[f].end:
                        moves.setdefault(u, set()).update(arrival_states(u, f))
                else:  # post
                    e = s[1]
                    for u in arrows[e].end:
                        moves.setdefault(u, set()).add(s)
            for u in sorted(moves):
                nxt.append((Path(path.vertices + (u,)), frozenset(moves[u])))
        frontier = nxt
    return accepted


def bold_functor(g: DirectedHypergraph, maxlen: int) -> PathComplex:
    """The bold path complex: truncation closure of fully decomposable paths.

    Decomposable paths of length maxlen + 1 are generated too, so that every
    truncation of length <= maxlen is captured.
    """
    accepted = _bold_accepted(g, maxlen + 1)
    pc = complex_from_paths(accepted, g.weight_map() if g.is_weighted else None, g.ring)
    return pc.truncate(maxlen)


def hyper_box_product(g: DirectedHypergraph, line: LineDigraph) -> DirectedHypergraph:
    """The directed-hypergraph box product G x I_n (levels as prime levels)."""

    def lift(xs: frozenset, i: int) -> frozenset:
        return frozenset(Vertex(v.label, v.prime + i) for v in xs)

    levels = range(line.n + 1)
    arrows = {Arrow(lift(a.origin, i), lift(a.end, i)) for a in g.arrows for i in levels}
    arrows.update(
        Arrow(lift(s, i), lift(s, j))
        for s in g.origin_end_sets()
        for i, j in line.arrows()
    )
    weights = None
    if g.is_weighted:
        weights = {
            Vertex(v.label, v.prime + i): w
            for v, w in g.weight_map().items()
            for i in levels
        }
    return DirectedHypergraph.build(arrows, weights, g.ring)


VERTEX_PIPELINES = ("c", "b", "2")


def vertex_weighted_complex(g: DirectedHypergraph, which: str, maxlen: int) -> PathComplex:
    if which == "c":
        return connective_functor(g, maxlen)
    if which == "b":
        return bold_functor(g, maxlen)
    if which == "2":
        return density_two_of(g, maxlen)
    raise ValueError(f"unknown pipeline {which!r} (expected one of c, b, 2)")


def vertex_weighted_homologies(
    g: DirectedHypergraph, which: str, max_degree: int, maxlen: int = 4
) -> HomologyResult:
    """H^{c/v}, H^{b/v} or H^{2/v} of a weighted directed hypergraph."""
    if not g.is_weighted:
        raise MissingWeightError("vertex-weighted homology needs weights")
    return homology(vertex_weighted_complex(g, which, maxlen), max_degree)
