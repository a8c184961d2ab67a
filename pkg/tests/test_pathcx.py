import random

from hypothesis import given, settings
from hypothesis import strategies as st

from wph.algebra import ZZ
from wph.pathcx import Path, PathComplex, Vertex, complex_from_paths

from helpers import random_complex

a, b, c, d = (Vertex(s) for s in "abcd")


def test_path_truncations_and_regularity():
    p = Path((a, b, a))
    assert p.length == 2
    assert p.is_regular()
    assert p.drop_front() == Path((b, a))
    assert p.drop_back() == Path((a, b))
    assert not Path((a, a)).is_regular()
    assert Path((a, a, b)).collapse_repeats() == Path((a, b))


def test_primed_vertices_render_with_trailing_apostrophes():
    v = Vertex("a", 2)
    assert v.render() == "a''"
    assert v.primed().prime == 3
    assert Path((a, b)).primed() == Path((a.primed(), b.primed()))


def test_validate_flags_missing_truncations():
    pc = PathComplex.build([a, b, c], [Path((a,)), Path((b,)), Path((c,)), Path((a, b, c))])
    report = pc.validate()
    assert not report.ok
    assert any("truncation" in msg or "closed" in msg for msg in report.problems)


def test_validate_flags_missing_singleton_and_weight():
    pc = PathComplex.build([a, b], [Path((a,)), Path((a, b))], {a: 1}, ZZ)
    report = pc.validate()
    assert not report.ok


def test_complex_from_paths_closes_under_truncation():
    pc = complex_from_paths([Path((a, b, c, d))])
    report = pc.validate()
    assert report.ok, report.problems
    assert Path((b, c)) in pc.paths
    assert Path((a,)) in pc.paths


def test_regular_paths_order_is_deterministic():
    pc = complex_from_paths([Path((b, a)), Path((a, b))])
    assert pc.regular_paths(1) == sorted(pc.regular_paths(1))


def test_cylinder_of_single_vertex():
    pc = complex_from_paths([Path((a,))], weights={a: 1}, ring=ZZ)
    cyl = pc.cylinder()
    ap = a.primed()
    assert cyl.paths == frozenset({Path((a,)), Path((ap,)), Path((a, ap))})
    assert cyl.weight_map()[ap] == 1
    assert cyl.validate().ok


def test_cylinder_contains_all_one_jump_lifts():
    pc = complex_from_paths([Path((a, b))])
    cyl = pc.cylinder()
    ap, bp = a.primed(), b.primed()
    for lift in (Path((a, ap, bp)), Path((a, b, bp))):
        assert lift in cyl.paths


def test_truncate_drops_long_paths_only():
    pc = complex_from_paths([Path((a, b, c, d))])
    t = pc.truncate(2)
    assert t.validate().ok
    assert max(p.length for p in t.paths) == 2


@settings(max_examples=60, deadline=None)
@given(st.integers(0, 10 ** 6))
def test_random_complexes_validate(seed):
    pc = random_complex(random.Random(seed))
    report = pc.validate()
    assert report.ok, report.problems


@settings(max_examples=60, deadline=None)
@given(st.integers(0, 10 ** 6))
def test_cylinder_always_validates(seed):
    pc = random_complex(random.Random(seed), max_vertices=5, maxlen=3)
    assert pc.cylinder().validate().ok
