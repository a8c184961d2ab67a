"""The weighted regular chain complex Omega and weighted path homology."""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional

from .algebra import (
    HomologyGroup,
    Matrix,
    Ring,
    homology_of_pair,
    kernel_basis,
    require_pid,
    solve_in_lattice,
)
from .errors import ImageNotInOmegaError, MissingWeightError
from .pathcx import Path, PathComplex, PathMorphism


@dataclass(frozen=True)
class ChainVector:
    """A chain supported on regular paths; coefficients keyed by path."""

    degree: int
    coeffs: tuple  # sorted tuple of (Path, scalar), zero coefficients omitted
    ring: Ring

    @classmethod
    def from_dict(cls, degree: int, coeffs: dict, ring: Ring) -> "ChainVector":
        items = tuple(
            sorted((p, c) for p, c in coeffs.items() if c != ring.zero)
        )
        return cls(degree, items, ring)

    @classmethod
    def zero(cls, degree: int, ring: Ring) -> "ChainVector":
        return cls(degree, (), ring)

    @classmethod
    def basis(cls, p: Path, ring: Ring) -> "ChainVector":
        return cls(p.length, ((p, ring.one),), ring)

    def as_dict(self) -> dict:
        return dict(self.coeffs)

    def is_zero(self) -> bool:
        return not self.coeffs

    def add(self, other: "ChainVector") -> "ChainVector":
        out = self.as_dict()
        for p, c in other.coeffs:
            out[p] = self.ring.add(out.get(p, self.ring.zero), c)
        return ChainVector.from_dict(self.degree, out, self.ring)

    def sub(self, other: "ChainVector") -> "ChainVector":
        return self.add(other.scale(self.ring.neg(self.ring.one)))

    def scale(self, k) -> "ChainVector":
        return ChainVector.from_dict(
            self.degree, {p: self.ring.mul(k, c) for p, c in self.coeffs}, self.ring
        )

    def render(self) -> str:
        if not self.coeffs:
            return "0"
        return " + ".join(f"{c}*{p.render()}" for p, c in self.coeffs)


def weighted_boundary(v: ChainVector, weights: dict) -> ChainVector:
    """The weighted boundary, with irregular resulting paths dropped.

    The degree-0 boundary is zero by convention.
    """
    ring = v.ring
    if v.degree <= 0:
        return ChainVector.zero(v.degree - 1, ring)
    out: dict = {}
    for p, c in v.coeffs:
        for s, vert in enumerate(p.vertices):
            if vert not in weights:
                raise MissingWeightError(f"vertex {vert.render()} has no weight")
            face = p.drop(s)
            if not face.is_regular():
                continue
            term = ring.mul(c, weights[vert])
            if s % 2:
                term = ring.neg(term)
            out[face] = ring.add(out.get(face, ring.zero), term)
    return ChainVector.from_dict(v.degree - 1, out, ring)


@dataclass
class OmegaComplex:
    """Bases of the allowed chains Omega_n and the boundary matrices between them.

    bases[n] has one row per regular n-path of the complex (canonical order)
    and one column per Omega_n generator.  boundaries[n] (n >= 1) expresses
    the weighted boundary Omega_n -> Omega_{n-1} in those generator bases.
    """

    pc: PathComplex
    max_degree: int
    ring: Ring
    reg_paths: list  # reg_paths[n]: canonical list of regular n-paths in P
    bases: list  # bases[n]: Matrix (len(reg_paths[n]) x rank)
    boundaries: dict  # n -> Matrix (rank_{n-1} x rank_n)

    def rank(self, n: int) -> int:
        if 0 <= n <= self.max_degree:
            return self.bases[n].cols
        return 0

    def boundary(self, n: int) -> Matrix:
        """Boundary Omega_n -> Omega_{n-1}; zero-shaped matrices off range."""
        if 1 <= n <= self.max_degree:
            return self.boundaries[n]
        if n == 0:
            return Matrix.zeros(self.ring, 0, self.rank(0))
        return Matrix.zeros(self.ring, self.rank(n - 1), 0)

    def generator_chain(self, n: int, j: int) -> ChainVector:
        col = self.bases[n].column(j)
        return ChainVector.from_dict(
            n, {p: c for p, c in zip(self.reg_paths[n], col)}, self.ring
        )

    def chain_to_coords(self, v: ChainVector):
        """Coordinates of a chain over the regular-path basis in degree v.degree."""
        index = {p: i for i, p in enumerate(self.reg_paths[v.degree])}
        vec = [self.ring.zero] * len(index)
        for p, c in v.coeffs:
            if p not in index:
                return None
            vec[index[p]] = c
        return tuple(vec)

    def express_in_omega(self, v: ChainVector):
        """Coefficients of a chain over the Omega basis of its degree, or None."""
        vec = self.chain_to_coords(v)
        if vec is None:
            return None
        return solve_in_lattice(self.bases[v.degree], vec)


def build_omega(pc: PathComplex, max_degree: int) -> OmegaComplex:
    """Compute Omega_n for n <= max_degree and the boundary matrices.

    Omega_n is the kernel of the composite: regular n-chains on P, mapped by
    the weighted boundary, projected onto the regular (n-1)-paths NOT in P.
    Over Z the kernel basis is saturated, so boundaries of generators always
    re-express integrally in the next basis down.
    """
    if not pc.is_weighted:
        raise MissingWeightError("Omega construction needs a weighted complex")
    ring = pc.ring
    require_pid(ring)
    weights = pc.weight_map()
    reg_paths = [pc.regular_paths(n) for n in range(max_degree + 1)]
    bases = []
    path_boundaries: list = []  # per degree: boundary ChainVector of each basis path
    for n in range(max_degree + 1):
        bnds = [weighted_boundary(ChainVector.basis(p, ring), weights) for p in reg_paths[n]]
        path_boundaries.append(bnds)
        outside = sorted(
            {p for b in bnds for p, _ in b.coeffs if p not in pc.paths}
        )
        if not outside:
            bases.append(Matrix.identity(ring, len(reg_paths[n])))
            continue
        row_index = {p: i for i, p in enumerate(outside)}
        rows = [[ring.zero] * len(reg_paths[n]) for _ in outside]
        for j, b in enumerate(bnds):
            for p, c in b.coeffs:
                if p in row_index:
                    rows[row_index[p]][j] = c
        bases.append(kernel_basis(Matrix.from_rows(ring, rows)))

    boundaries = {}
    for n in range(1, max_degree + 1):
        prev_index = {p: i for i, p in enumerate(reg_paths[n - 1])}
        cols = []
        for j in range(bases[n].cols):
            gen = bases[n].column(j)
            acc: dict = {}
            for coeff, b in zip(gen, path_boundaries[n]):
                if coeff == ring.zero:
                    continue
                for p, c in b.coeffs:
                    acc[p] = ring.add(acc.get(p, ring.zero), ring.mul(coeff, c))
            vec = [ring.zero] * len(prev_index)
            for p, c in acc.items():
                if c == ring.zero:
                    continue
                # supports outside P cancelled by the kernel construction
                assert p in prev_index, f"boundary support {p.render()} escaped P"
                vec[prev_index[p]] = c
            sol = solve_in_lattice(bases[n - 1], vec)
            assert sol is not None, "generator boundary escaped the Omega lattice"
            cols.append(sol)
        boundaries[n] = Matrix.from_columns(ring, cols, bases[n - 1].cols)
    return OmegaComplex(pc, max_degree, ring, reg_paths, bases, boundaries)


@dataclass
class HomologyResult:
    """Per-degree weighted path homology, reported for degrees 0..max_degree-1."""

    ring: Ring
    max_degree: int  # the Omega truncation degree N; homology reported below it
    groups: list = field(default_factory=list)  # HomologyGroup per degree

    def group(self, n: int) -> HomologyGroup:
        return self.groups[n]


def homology(pc: PathComplex, max_degree: int) -> HomologyResult:
    """Weighted path homology in degrees 0..max_degree-1."""
    omega = build_omega(pc, max_degree)
    return homology_of_omega(omega)


def homology_of_omega(omega: OmegaComplex) -> HomologyResult:
    groups = [
        homology_of_pair(omega.boundary(n), omega.boundary(n + 1))
        for n in range(omega.max_degree)
    ]
    return HomologyResult(omega.ring, omega.max_degree, groups)


def induced_chain_map(f: PathMorphism, source: OmegaComplex, target: OmegaComplex) -> dict:
    """Matrices of f on Omega, degree by degree; checks boundary commutation.

    Basis paths map to their image paths with irregular images dropped.
    """
    ring = source.ring
    top = min(source.max_degree, target.max_degree)
    mats = {}
    for n in range(top + 1):
        cols = []
        for j in range(source.rank(n)):
            gen = source.generator_chain(n, j)
            img: dict = {}
            for p, c in gen.coeffs:
                q = f.image_path(p)
                if not q.is_regular():
                    continue
                if q not in target.pc.paths:
                    raise ImageNotInOmegaError(
                        f"image path {q.render()} is not in the target complex"
                    )
                img[q] = ring.add(img.get(q, ring.zero), c)
            chain = ChainVector.from_dict(n, img, ring)
            sol = target.express_in_omega(chain)
            if sol is None:
                raise ImageNotInOmegaError(
                    f"image of Omega_{n} generator {j} is not in the target Omega basis"
                )
            cols.append(sol)
        mats[n] = Matrix.from_columns(ring, cols, target.rank(n))
    for n in range(1, top + 1):
        lhs = target.boundary(n) @ mats[n]
        rhs = mats[n - 1] @ source.boundary(n)
        if lhs.data != rhs.data:
            raise ImageNotInOmegaError(
                f"induced map does not commute with the boundary in degree {n}"
            )
    return mats
