"""Path complexes with weights, validation, regular paths and the cylinder."""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Mapping, Optional

from .algebra import Ring
from .errors import InvariantError


@dataclass(frozen=True, order=True)
class Vertex:
    """A vertex label plus its prime level (v vs v' in cylinders)."""

    label: str
    prime: int = 0

    def primed(self) -> "Vertex":
        return Vertex(self.label, self.prime + 1)

    def render(self) -> str:
        return self.label + "'" * self.prime

    def __repr__(self):
        return self.render()


@dataclass(frozen=True, order=True)
class Path:
    """An elementary path: a non-empty ordered vertex sequence."""

    vertices: tuple

    def __post_init__(self):
        if not self.vertices:
            raise InvariantError("elementary paths are non-empty")

    @classmethod
    def of(cls, *vs: Vertex) -> "Path":
        return cls(tuple(vs))

    @property
    def length(self) -> int:
        return len(self.vertices) - 1

    def is_regular(self) -> bool:
        vs = self.vertices
        return all(vs[k] != vs[k + 1] for k in range(len(vs) - 1))

    def drop_front(self) -> "Path":
        return Path(self.vertices[1:])

    def drop_back(self) -> "Path":
        return Path(self.vertices[:-1])

    def drop(self, s: int) -> "Path":
        return Path(self.vertices[:s] + self.vertices[s + 1 :])

    def primed(self) -> "Path":
        return Path(tuple(v.primed() for v in self.vertices))

    def collapse_repeats(self) -> "Path":
        out = [self.vertices[0]]
        for v in self.vertices[1:]:
            if v != out[-1]:
                out.append(v)
        return Path(tuple(out))

    def render(self) -> str:
        return "(" + " ".join(v.render() for v in self.vertices) + ")"

    def __repr__(self):
        return self.render()


@dataclass
class ValidationReport:
    ok: bool
    problems: list = field(default_factory=list)


@dataclass(frozen=True)
class PathComplex:
    """A vertex set plus a truncation-closed set of elementary paths.

    `weights` maps every vertex to an element of `ring` when present.
    Instances are immutable; construct with `PathComplex.build` (which checks
    nothing) and use `validate` for axiom checking, or `complex_from_paths`
    for automatic closure.
    """

    vertices: frozenset
    paths: frozenset
    weights: Optional[tuple] = None  # sorted tuple of (Vertex, scalar)
    ring: Optional[Ring] = None

    @classmethod
    def build(
        cls,
        vertices: Iterable[Vertex],
        paths: Iterable[Path],
        weights: Optional[Mapping[Vertex, object]] = None,
        ring: Optional[Ring] = None,
    ) -> "PathComplex":
        wt = None
        if weights is not None:
            if ring is None:
                raise InvariantError("weights need a coefficient ring")
            wt = tuple(sorted((v, ring.coerce(x)) for v, x in weights.items()))
        return cls(frozenset(vertices), frozenset(paths), wt, ring)

    @property
    def is_weighted(self) -> bool:
        return self.weights is not None

    def weight_map(self) -> dict:
        return dict(self.weights) if self.weights is not None else {}

    def sorted_vertices(self) -> list:
        return sorted(self.vertices)

    def sorted_paths(self) -> list:
        return sorted(self.paths, key=lambda p: (p.length, p.vertices))

    def max_path_length(self) -> int:
        return max((p.length for p in self.paths), default=-1)

    def validate(self) -> ValidationReport:
        problems = []
        for v in self.sorted_vertices():
            if Path.of(v) not in self.paths:
                problems.append(f"missing singleton path for vertex {v.render()}")
        for p in self.sorted_paths():
            for v in p.vertices:
                if v not in self.vertices:
                    problems.append(f"path {p.render()} uses unknown vertex {v.render()}")
            if p.length >= 1:
                for trunc in (p.drop_back(), p.drop_front()):
                    if trunc not in self.paths:
                        problems.append(
                            f"path {p.render()} lacks truncation {trunc.render()}"
                        )
        if self.is_weighted:
            wmap = self.weight_map()
            for v in self.sorted_vertices():
                if v not in wmap:
                    problems.append(f"vertex {v.render()} has no weight")
        return ValidationReport(ok=not problems, problems=problems)

    def regular_paths(self, n: int) -> list:
        """All regular n-paths of the complex, in canonical lexicographic order.

        This order is the basis order of the regular chain modules everywhere
        downstream.
        """
        if n < 0:
            return []
        return sorted(p for p in self.paths if p.length == n and p.is_regular())

    def truncate(self, maxlen: int) -> "PathComplex":
        """Drop paths longer than maxlen (truncation closure is preserved)."""
        paths = frozenset(p for p in self.paths if p.length <= maxlen)
        return PathComplex(self.vertices, paths, self.weights, self.ring)

    def reweighted(self, weights: Optional[Mapping[Vertex, object]], ring: Optional[Ring]) -> "PathComplex":
        return PathComplex.build(self.vertices, self.paths, weights, ring)

    def cylinder(self) -> "PathComplex":
        """The cylinder on V + V' with paths P, P' and the one-jump lifts P#."""
        prime_vs = {v.primed() for v in self.vertices}
        paths = set(self.paths)
        paths.update(p.primed() for p in self.paths)
        for p in self.paths:
            vs = p.vertices
            for k in range(len(vs)):
                lifted = vs[: k + 1] + tuple(v.primed() for v in vs[k:])
                paths.add(Path(lifted))
        weights = None
        if self.is_weighted:
            weights = self.weight_map()
            weights.update({v.primed(): w for v, w in self.weight_map().items()})
        return PathComplex.build(self.vertices | prime_vs, paths, weights, self.ring)


def complex_from_paths(
    paths: Iterable[Path],
    weights: Optional[Mapping[Vertex, object]] = None,
    ring: Optional[Ring] = None,
) -> PathComplex:
    """Close the given paths under truncation and singletons and build a complex."""
    closed = set()
    stack = list(paths)
    while stack:
        p = stack.pop()
        if p in closed:
            continue
        closed.add(p)
        if p.length >= 1:
            stack.append(p.drop_front())
            stack.append(p.drop_back())
    vertices = {v for p in closed for v in p.vertices}
    closed.update(Path.of(v) for v in vertices)
    return PathComplex.build(vertices, closed, weights, ring)


@dataclass
class PathMorphism:
    """A vertex map between path complexes; verified in the homotopy module."""

    source: PathComplex
    target: PathComplex
    vertex_map: dict

    def image_vertex(self, v: Vertex) -> Vertex:
        return self.vertex_map[v]

    def image_path(self, p: Path, collapse: bool = False) -> Path:
        img = Path(tuple(self.vertex_map[v] for v in p.vertices))
        return img.collapse_repeats() if collapse else img


def identity_morphism(pc: PathComplex) -> PathMorphism:
    return PathMorphism(pc, pc, {v: v for v in pc.vertices})


def inclusion_bottom(pc: PathComplex) -> PathMorphism:
    """v -> (v, 0), the bottom inclusion of the cylinder."""
    return PathMorphism(pc, pc.cylinder(), {v: v for v in pc.vertices})


def inclusion_top(pc: PathComplex) -> PathMorphism:
    """v -> (v, 1), the top inclusion of the cylinder."""
    return PathMorphism(pc, pc.cylinder(), {v: v.primed() for v in pc.vertices})
