"""Morphism verification, one-step homotopy, the prism operator and certificates."""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional

from .algebra import Matrix, kernel_basis, solve_in_lattice
from .chain import ChainVector, OmegaComplex, build_omega, induced_chain_map, weighted_boundary
from .dhyper import Arrow, DirectedHypergraph, HyperMorphism, classify_morphism, hyper_box_product
from .digraph import I1_FORWARD, paths_functor
from .errors import (
    HomotopyIdentityFailedError,
    ImageNotInOmegaError,
    NonInvertibleWeightError,
)
from .pathcx import Path, PathComplex, PathMorphism, Vertex


@dataclass
class MorphismReport:
    ok: bool
    weighted: Optional[bool]  # None when either side is unweighted
    problems: list = field(default_factory=list)


def verify_path_morphism(f: PathMorphism, allow_degenerate: bool = False) -> MorphismReport:
    """Check path images land in the target; check weight preservation.

    With allow_degenerate, consecutive equal vertices in an image path are
    collapsed before the membership test.
    """
    problems = []
    for v in sorted(f.source.vertices):
        if v not in f.vertex_map:
            problems.append(f"vertex {v.render()} is unmapped")
        elif f.vertex_map[v] not in f.target.vertices:
            problems.append(f"image of {v.render()} is not a target vertex")
    if problems:
        return MorphismReport(False, None, problems)
    for p in f.source.sorted_paths():
        img = f.image_path(p, collapse=allow_degenerate)
        if img not in f.target.paths:
            problems.append(
                f"image {img.render()} of {p.render()} is not a target path"
            )
    weighted = None
    if f.source.is_weighted and f.target.is_weighted:
        weighted = f.source.ring == f.target.ring
        ws, wt = f.source.weight_map(), f.target.weight_map()
        for v in sorted(f.source.vertices):
            if wt[f.vertex_map[v]] != ws[v]:
                weighted = False
                problems.append(
                    f"weight of {v.render()} not preserved: "
                    f"{ws[v]} -> {wt[f.vertex_map[v]]}"
                )
    return MorphismReport(ok=not problems, weighted=weighted, problems=problems)


@dataclass
class HomotopyReport:
    ok: bool
    weighted: Optional[bool]
    problems: list = field(default_factory=list)
    homotopy: Optional[PathMorphism] = None  # the verified map on the cylinder


def one_step_homotopy_pathcx(
    f: PathMorphism, g: PathMorphism, allow_degenerate: bool = False
) -> HomotopyReport:
    """Verify the unique candidate homotopy F on the cylinder of the source.

    F(v) = f(v) on the bottom copy and F(v') = g(v) on the top copy; f and g
    are one-step homotopic iff F is a morphism into the shared target.
    """
    problems = []
    if f.source.paths != g.source.paths or f.source.vertices != g.source.vertices:
        problems.append("f and g have different sources")
    if f.target.paths != g.target.paths or f.target.vertices != g.target.vertices:
        problems.append("f and g have different targets")
    if problems:
        return HomotopyReport(False, None, problems)
    cyl = f.source.cylinder()
    vmap = {v: f.vertex_map[v] for v in f.source.vertices}
    vmap.update({v.primed(): g.vertex_map[v] for v in f.source.vertices})
    F = PathMorphism(cyl, f.target, vmap)
    rep = verify_path_morphism(F, allow_degenerate=allow_degenerate)
    return HomotopyReport(rep.ok, rep.weighted, rep.problems, F if rep.ok else None)


@dataclass
class StepSpec:
    """One link of a multi-step homotopy chain."""

    morphism: PathMorphism
    direction: str = "forward"  # forward: previous -> this; backward: swapped


def verify_homotopy_chain(steps: list, allow_degenerate: bool = False) -> HomotopyReport:
    """Verify a user-supplied chain f = f0, ..., fn = g of one-step homotopies."""
    problems = []
    for k in range(len(steps) - 1):
        a, b = steps[k].morphism, steps[k + 1].morphism
        if steps[k + 1].direction == "backward":
            a, b = b, a
        rep = one_step_homotopy_pathcx(a, b, allow_degenerate=allow_degenerate)
        if not rep.ok:
            problems.append(f"step {k} -> {k + 1} fails: " + "; ".join(rep.problems))
    return HomotopyReport(ok=not problems, weighted=None, problems=problems)


def _require_invertible_weights(pc: PathComplex) -> dict:
    if not pc.is_weighted:
        raise NonInvertibleWeightError("an unweighted complex has no invertible weights")
    ring = pc.ring
    gammas = {}
    for v, w in pc.weights:
        if not ring.is_unit(w):
            raise NonInvertibleWeightError(
                f"weight {w} of vertex {v.render()} is not invertible in {ring.name}"
            )
        gammas[v] = ring.inv(w)
    return gammas


def prism(v: ChainVector, weights: dict, gammas: Optional[dict] = None) -> ChainVector:
    """The prism operator: insert a primed copy at each slot, scaled by 1/weight."""
    ring = v.ring
    if gammas is None:
        gammas = {}
        for vert in sorted({x for p, _ in v.coeffs for x in p.vertices}):
            if not ring.is_unit(weights[vert]):
                raise NonInvertibleWeightError(
                    f"weight {weights[vert]} of vertex {vert.render()} "
                    f"is not invertible in {ring.name}"
                )
            gammas[vert] = ring.inv(weights[vert])
    if v.degree < 0:
        return ChainVector.zero(0, ring)
    out: dict = {}
    for p, c in v.coeffs:
        vs = p.vertices
        for k in range(len(vs)):
            lifted = Path(vs[: k + 1] + tuple(x.primed() for x in vs[k:]))
            term = ring.mul(c, gammas[vs[k]])
            if k % 2:
                term = ring.neg(term)
            out[lifted] = ring.add(out.get(lifted, ring.zero), term)
    return ChainVector.from_dict(v.degree + 1, out, ring)


@dataclass
class PrismReport:
    ok: bool
    difference: Optional[ChainVector] = None


def verify_prism_identity(v: ChainVector, pc: PathComplex) -> PrismReport:
    """Check d(prism v) + prism(d v) == v' - v on the cylinder chain modules."""
    gammas = _require_invertible_weights(pc)
    ring = v.ring
    weights = pc.cylinder().weight_map()
    gammas = dict(gammas)
    gammas.update({vert.primed(): g for vert, g in gammas.items()})
    lhs = weighted_boundary(prism(v, weights, gammas), weights).add(
        prism(weighted_boundary(v, weights), weights, gammas)
    )
    primed = ChainVector.from_dict(
        v.degree, {p.primed(): c for p, c in v.coeffs}, ring
    )
    rhs = primed.sub(v)
    diff = lhs.sub(rhs)
    return PrismReport(ok=diff.is_zero(), difference=None if diff.is_zero() else diff)


@dataclass
class CertificateReport:
    ok: bool
    problems: list = field(default_factory=list)
    degrees_checked: int = 0
    identity_holds: bool = False
    homology_maps_equal: bool = False


def chain_homotopy_certificate(
    f: PathMorphism,
    g: PathMorphism,
    max_degree: int,
    allow_degenerate: bool = False,
) -> CertificateReport:
    """Certify an explicit chain homotopy between f and g up to max_degree.

    Builds L_n = F_* (prism of -) on every Omega_n generator of the source,
    verifies the prism lands in the cylinder's Omega, checks the identity
    dL + Ld = g_* - f_* exactly, and compares the induced homology maps.
    """
    hrep = one_step_homotopy_pathcx(f, g, allow_degenerate=allow_degenerate)
    if not hrep.ok:
        return CertificateReport(False, ["not one-step homotopic: "] + hrep.problems)
    gammas = _require_invertible_weights(f.source)
    ring = f.source.ring
    F = hrep.homotopy
    cyl = F.source
    cyl_weights = cyl.weight_map()
    cyl_gammas = dict(gammas)
    cyl_gammas.update({v.primed(): x for v, x in gammas.items()})

    om_src = build_omega(f.source, max_degree + 1)
    om_cyl = build_omega(cyl, max_degree + 1)
    om_tgt = build_omega(f.target, max_degree + 1)
    f_mats = induced_chain_map(f, om_src, om_tgt)
    g_mats = induced_chain_map(g, om_src, om_tgt)
    F_mats = induced_chain_map(F, om_cyl, om_tgt)

    # L_n = F_* after the prism, as a matrix Omega_n(src) -> Omega_{n+1}(tgt)
    L = {}
    for n in range(max_degree + 1):
        prism_cols = []
        for j in range(om_src.rank(n)):
            chain = om_src.generator_chain(n, j)
            lifted = prism(chain, cyl_weights, cyl_gammas)
            sol = om_cyl.express_in_omega(lifted)
            if sol is None:
                raise ImageNotInOmegaError(
                    f"prism of Omega_{n} generator {j} escapes the cylinder Omega"
                )
            prism_cols.append(sol)
        T = Matrix.from_columns(ring, prism_cols, om_cyl.rank(n + 1))
        L[n] = F_mats[n + 1] @ T

    for n in range(max_degree + 1):
        total = om_tgt.boundary(n + 1) @ L[n]
        if n >= 1:
            ld = L[n - 1] @ om_src.boundary(n)
            total = Matrix.from_rows(
                ring,
                [
                    [ring.add(total.data[i][j], ld.data[i][j]) for j in range(total.cols)]
                    for i in range(total.rows)
                ],
            )
        want = Matrix.from_rows(
            ring,
            [
                [
                    ring.sub(g_mats[n].data[i][j], f_mats[n].data[i][j])
                    for j in range(g_mats[n].cols)
                ]
                for i in range(g_mats[n].rows)
            ],
        )
        if total.data != want.data:
            for j in range(total.cols):
                if total.column(j) != want.column(j):
                    raise HomotopyIdentityFailedError(
                        f"chain-homotopy identity fails on Omega_{n} generator {j}"
                    )

    maps_equal = _induced_homology_maps_equal(om_src, om_tgt, f_mats, g_mats, max_degree)
    return CertificateReport(
        ok=maps_equal,
        degrees_checked=max_degree + 1,
        identity_holds=True,
        homology_maps_equal=maps_equal,
    )


def _induced_homology_maps_equal(om_src, om_tgt, f_mats, g_mats, max_degree) -> bool:
    """f_* == g_* on homology: their difference on cycles lies in the image."""
    ring = om_src.ring
    for n in range(max_degree + 1):
        ker = kernel_basis(om_src.boundary(n))
        img = om_tgt.boundary(n + 1)
        for j in range(ker.cols):
            k = ker.column(j)
            d = tuple(
                ring.sub(x, y)
                for x, y in zip(f_mats[n].apply(k), g_mats[n].apply(k))
            )
            if solve_in_lattice(img, d) is None:
                return False
    return True


@dataclass
class HyperHomotopyReport:
    ok: bool
    problems: list = field(default_factory=list)
    vertex_weighted: bool = False
    edge_weighted: bool = False
    strong_weighted: bool = False


def one_step_homotopy_dhyper(
    f: HyperMorphism, g: HyperMorphism, mode: str = "strict"
) -> HyperHomotopyReport:
    """Verify a one-step homotopy of directed-hypergraph morphisms.

    The candidate F on G x I_1 (forward) restricts to f on level 0 and g on
    level 1; the level-crossing arrows A x 0 -> A x 1 must map to arrows
    (f(A) -> g(A)) of the target.  In reflexive mode crossings with
    f(A) == g(A) are exempted (such an arrow cannot exist by disjointness).
    """
    if mode not in ("strict", "reflexive"):
        raise ValueError("mode must be 'strict' or 'reflexive'")
    problems = []
    if f.source is not g.source and f.source != g.source:
        problems.append("f and g have different sources")
    if f.target is not g.target and f.target != g.target:
        problems.append("f and g have different targets")
    if problems:
        return HyperHomotopyReport(False, problems)
    for name, m in (("f", f), ("g", g)):
        try:
            m.check()
        except Exception as exc:  # NotAMorphismError
            problems.append(f"{name} is not a morphism: {exc}")
    if problems:
        return HyperHomotopyReport(False, problems)
    target_pairs = {(a.origin, a.end) for a in f.target.arrows}
    for s in f.source.origin_end_sets():
        fo, go = f.image_set(s), g.image_set(s)
        if fo == go:
            if mode == "strict":
                problems.append(
                    f"strict mode: the crossing arrow for set "
                    f"{{{','.join(sorted(v.render() for v in s))}}} would need equal "
                    f"origin and end {{{','.join(sorted(v.render() for v in fo))}}}, "
                    "which arrow disjointness forbids"
                )
            continue
        if fo & go:
            problems.append(
                f"images of set {{{','.join(sorted(v.render() for v in s))}}} "
                "overlap; no arrow can join them"
            )
        elif (fo, go) not in target_pairs:
            problems.append(
                f"target lacks the crossing arrow "
                f"{{{','.join(sorted(v.render() for v in fo))}}} -> "
                f"{{{','.join(sorted(v.render() for v in go))}}}"
            )
    flags = dict(vertex_weighted=False, edge_weighted=False, strong_weighted=False)
    if f.source.is_weighted and f.target.is_weighted:
        cf, cg = classify_morphism(f), classify_morphism(g)
        flags = dict(
            vertex_weighted=cf.vertex_weighted and cg.vertex_weighted,
            edge_weighted=cf.edge_weighted and cg.edge_weighted,
            strong_weighted=cf.strong_weighted and cg.strong_weighted,
        )
    return HyperHomotopyReport(ok=not problems, problems=problems, **flags)


def edge_weighted_certificate(
    f: HyperMorphism,
    g: HyperMorphism,
    max_degree: int,
    maxlen: int = 4,
    mode: str = "strict",
) -> CertificateReport:
    """Certify equal induced maps on edge-weighted homology (natural pipeline).

    Refuses with NonInvertibleWeight when some origin/end set weight |A| of
    the source is not a unit of the ring.
    """
    from .dhyper import natural_digraph, set_weight

    hrep = one_step_homotopy_dhyper(f, g, mode=mode)
    if not hrep.ok:
        return CertificateReport(False, ["not one-step homotopic: "] + hrep.problems)
    ring = f.source.ring
    wmap = f.source.weight_map()
    for s in f.source.origin_end_sets():
        w = set_weight(s, wmap, ring)
        if not ring.is_unit(w):
            raise NonInvertibleWeightError(
                f"set weight {w} of {{{','.join(sorted(v.render() for v in s))}}} "
                f"is not invertible in {ring.name}"
            )
    src_pc = paths_functor(natural_digraph(f.source), maxlen)
    tgt_pc = paths_functor(natural_digraph(f.target), maxlen + 1)
    # vertex maps of the induced path morphisms: set vertex S -> set vertex f(S)
    from .dhyper import _set_vertex

    def induced(m: HyperMorphism) -> PathMorphism:
        vmap = {}
        for s in f.source.origin_end_sets():
            vmap[_set_vertex(s)] = _set_vertex(m.image_set(s))
        return PathMorphism(src_pc, tgt_pc, vmap)

    return chain_homotopy_certificate(induced(f), induced(g), max_degree)
