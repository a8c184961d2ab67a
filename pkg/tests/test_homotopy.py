import random
from fractions import Fraction

import pytest

from wph.algebra import QQ, ZZ
from wph.chain import ChainVector
from wph.dhyper import Arrow, DirectedHypergraph, HyperMorphism
from wph.errors import NonInvertibleWeightError
from wph.homotopy import (
    StepSpec,
    chain_homotopy_certificate,
    edge_weighted_certificate,
    one_step_homotopy_dhyper,
    one_step_homotopy_pathcx,
    prism,
    verify_homotopy_chain,
    verify_path_morphism,
    verify_prism_identity,
)
from wph.pathcx import (
    Path,
    PathMorphism,
    Vertex,
    complex_from_paths,
    identity_morphism,
    inclusion_bottom,
    inclusion_top,
)

from helpers import random_unit_weight_complex

a, b, c, d, x, y = (Vertex(s) for s in "abcdxy")


def edge_target():
    return complex_from_paths(
        [Path((x, y))], weights={x: Fraction(1), y: Fraction(1)}, ring=QQ
    )


def point_source():
    return complex_from_paths([Path((a,))], weights={a: Fraction(1)}, ring=QQ)


def test_verify_path_morphism_strict_vs_degenerate():
    src = complex_from_paths([Path((a, b))], weights={a: Fraction(1), b: Fraction(1)}, ring=QQ)
    tgt = complex_from_paths([Path((x,))], weights={x: Fraction(1)}, ring=QQ)
    collapse = PathMorphism(src, tgt, {a: x, b: x})
    assert not verify_path_morphism(collapse).ok  # image xx is not a target path
    assert verify_path_morphism(collapse, allow_degenerate=True).ok


def test_one_step_homotopy_along_an_edge():
    f = PathMorphism(point_source(), edge_target(), {a: x})
    g = PathMorphism(point_source(), edge_target(), {a: y})
    rep = one_step_homotopy_pathcx(f, g)
    assert rep.ok
    # the reverse direction has no edge y -> x
    assert not one_step_homotopy_pathcx(g, f).ok


def test_identity_is_strictly_homotopic_to_itself_only_with_degeneracies():
    pc = edge_target()
    ident = identity_morphism(pc)
    assert not one_step_homotopy_pathcx(ident, ident).ok
    assert one_step_homotopy_pathcx(ident, ident, allow_degenerate=True).ok


def test_homotopy_chain_of_two_steps():
    f = PathMorphism(point_source(), edge_target(), {a: x})
    g = PathMorphism(point_source(), edge_target(), {a: y})
    rep = verify_homotopy_chain([StepSpec(f), StepSpec(g)])
    assert rep.ok
    rep = verify_homotopy_chain([StepSpec(g), StepSpec(f, direction="backward")])
    assert rep.ok
    rep = verify_homotopy_chain([StepSpec(g), StepSpec(f)])
    assert not rep.ok


def test_prism_of_an_edge_uses_inverse_weights():
    pc = complex_from_paths(
        [Path((a, b))], weights={a: Fraction(2), b: Fraction(4)}, ring=QQ
    )
    gammas = {v: Fraction(1, w) for v, w in pc.weights}
    gammas.update({v.primed(): g for v, g in gammas.items()})
    tau = prism(ChainVector.basis(Path((a, b)), QQ), pc.weight_map(), gammas)
    ap, bp = a.primed(), b.primed()
    assert tau.as_dict() == {
        Path((a, ap, bp)): Fraction(1, 2),
        Path((a, b, bp)): Fraction(-1, 4),
    }


def test_prism_identity_on_fixed_complex():
    pc = complex_from_paths(
        [Path((a, b, c))],
        weights={a: Fraction(1), b: Fraction(1, 2), c: Fraction(3)},
        ring=QQ,
    )
    for n in range(3):
        for p in pc.regular_paths(n):
            rep = verify_prism_identity(ChainVector.basis(p, QQ), pc)
            assert rep.ok, (p.render(), rep.problems)


def test_prism_identity_on_random_complexes():
    rng = random.Random(11)
    for _ in range(10):
        pc = random_unit_weight_complex(rng)
        for n in range(4):
            for p in pc.regular_paths(n):
                rep = verify_prism_identity(ChainVector.basis(p, QQ), pc)
                assert rep.ok, (p.render(), rep.problems)


def test_prism_requires_invertible_weights():
    pc = complex_from_paths([Path((a, b))], weights={a: 2, b: 4}, ring=ZZ)
    with pytest.raises(NonInvertibleWeightError):
        verify_prism_identity(ChainVector.basis(Path((a, b)), ZZ), pc)


def test_cylinder_inclusions_are_chain_homotopic():
    pc = complex_from_paths(
        [Path((a, c)), Path((a, d)), Path((b, c)), Path((b, d))],
        weights={v: Fraction(1) for v in (a, b, c, d)},
        ring=QQ,
    )
    f, g = inclusion_bottom(pc), inclusion_top(pc)
    cert = chain_homotopy_certificate(f, g, 3)
    assert cert.ok, cert.problems
    assert cert.identity_holds
    assert cert.homology_maps_equal


def test_certificate_for_maps_to_an_edge():
    f = PathMorphism(point_source(), edge_target(), {a: x})
    g = PathMorphism(point_source(), edge_target(), {a: y})
    cert = chain_homotopy_certificate(f, g, 3)
    assert cert.ok and cert.identity_holds and cert.homology_maps_equal


def test_certificate_rejects_non_invertible_source_weights():
    src = complex_from_paths([Path((a,))], weights={a: 2}, ring=ZZ)
    tgt = complex_from_paths([Path((x, y))], weights={x: 2, y: 2}, ring=ZZ)
    f = PathMorphism(src, tgt, {a: x})
    g = PathMorphism(src, tgt, {a: y})
    with pytest.raises(NonInvertibleWeightError):
        chain_homotopy_certificate(f, g, 2)


def A(origin, end):
    return Arrow(frozenset(origin), frozenset(end))


def square_target():
    u, v = Vertex("u"), Vertex("v")
    return DirectedHypergraph.build(
        [A({a}, {b}), A({a}, {u}), A({b}, {v}), A({u}, {v})],
        {a: 1, b: 1, u: 1, v: 1},
        ZZ,
    )


def test_one_step_homotopy_dhyper_strict():
    u, v = Vertex("u"), Vertex("v")
    src = DirectedHypergraph.build([A({a}, {b})], {a: 1, b: 1}, ZZ)
    tgt = square_target()
    f = HyperMorphism(src, tgt, {a: a, b: b})
    g = HyperMorphism(src, tgt, {a: u, b: v})
    assert one_step_homotopy_dhyper(f, g).ok
    # reverse requires arrows u -> a and v -> b, which do not exist
    assert not one_step_homotopy_dhyper(g, f).ok


def test_dhyper_self_homotopy_needs_reflexive_mode():
    src = DirectedHypergraph.build([A({a}, {b})], {a: 1, b: 1}, ZZ)
    f = HyperMorphism(src, src, {a: a, b: b})
    assert not one_step_homotopy_dhyper(f, f, mode="strict").ok
    assert one_step_homotopy_dhyper(f, f, mode="reflexive").ok


def test_edge_weighted_certificate_on_square():
    u, v = Vertex("u"), Vertex("v")
    src = DirectedHypergraph.build([A({a}, {b})], {a: 1, b: 1}, ZZ)
    tgt = square_target()
    f = HyperMorphism(src, tgt, {a: a, b: b})
    g = HyperMorphism(src, tgt, {a: u, b: v})
    cert = edge_weighted_certificate(f, g, 2)
    assert cert.ok and cert.homology_maps_equal


def test_edge_weighted_certificate_gates_on_set_weights():
    src = DirectedHypergraph.build([A({a}, {b})], {a: 2, b: 1}, ZZ)
    tgt = DirectedHypergraph.build(
        [A({x}, {y}), A({x}, {c}), A({y}, {d}), A({c}, {d})],
        {x: 1, y: 1, c: 1, d: 1},
        ZZ,
    )
    f = HyperMorphism(src, tgt, {a: x, b: y})
    g = HyperMorphism(src, tgt, {a: c, b: d})
    with pytest.raises(NonInvertibleWeightError):
        edge_weighted_certificate(f, g, 2)
