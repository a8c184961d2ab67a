import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from wph import io as wio
from wph.algebra import QQ, ZZ, Zmod
from wph.errors import InvariantError, SchemaError

from helpers import FIXTURES, random_complex


def test_every_fixture_parses_and_round_trips():
    for path in sorted(FIXTURES.glob("*.json")):
        blob = path.read_bytes()
        doc = wio.parse(blob)
        if doc.kind in ("morphism", "homotopy_chain", "homology"):
            continue
        assert wio.emit(doc.body, description=doc.description) == blob, path.name


@settings(max_examples=60, deadline=None)
@given(st.integers(0, 10 ** 6), st.sampled_from(["Z", "Q"]))
def test_path_complex_round_trip(seed, ring_name):
    ring = ZZ if ring_name == "Z" else QQ
    pc = random_complex(random.Random(seed), ring=ring, max_vertices=5, maxlen=3)
    blob = wio.emit(pc)
    doc = wio.parse(blob)
    assert doc.body == pc
    assert wio.emit(doc.body) == blob


def test_emission_is_byte_stable():
    blob = (FIXTURES / "pc_diamond_weighted.json").read_bytes()
    doc = wio.parse(blob)
    assert wio.emit(doc.body, description=doc.description) == blob


def test_parse_ring_variants():
    assert wio.parse_ring("Z") == ZZ
    assert wio.parse_ring("Q") == QQ
    assert wio.parse_ring({"Zmod": 5}) == Zmod(5)
    with pytest.raises(SchemaError):
        wio.parse_ring("R")
    with pytest.raises(SchemaError):
        wio.parse_ring({"Zmod": 1})


def test_rational_weights_as_strings():
    doc = wio.parse(
        '{"format_version": "1", "kind": "path_complex", "ring": "Q", '
        '"body": {"vertices": ["a"], "paths": [["a"]], "weights": {"a": "3/7"}}}'
    )
    (pair,) = doc.body.weights
    assert pair[1].numerator == 3 and pair[1].denominator == 7


def test_unknown_fields_rejected():
    with pytest.raises(SchemaError):
        wio.parse('{"format_version": "1", "kind": "digraph", "extra": 0, '
                  '"body": {"vertices": [], "edges": []}}')
    with pytest.raises(SchemaError):
        wio.parse('{"format_version": "1", "kind": "digraph", '
                  '"body": {"vertices": [], "edges": [], "extra": 0}}')


def test_wrong_version_rejected():
    with pytest.raises(SchemaError):
        wio.parse('{"format_version": "0", "kind": "digraph", "body": {}}')


def test_invariant_violations_rejected():
    # path set not closed under truncation
    with pytest.raises(InvariantError):
        wio.parse('{"format_version": "1", "kind": "path_complex", '
                  '"body": {"vertices": ["a", "b"], "paths": [["a"], ["b"], ["a", "b"], ["a", "b", "a"]]}}')
    # arrow with overlapping origin and end
    with pytest.raises(InvariantError):
        wio.parse('{"format_version": "1", "kind": "directed_hypergraph", '
                  '"body": {"arrows": [{"origin": ["a"], "end": ["a", "b"]}]}}')


def test_interior_apostrophes_rejected():
    with pytest.raises(InvariantError):
        wio.parse_vertex("a'b")
    v = wio.parse_vertex("a''")
    assert v.prime == 2 and v.label == "a"


def test_morphism_and_chain_documents():
    doc = wio.parse((FIXTURES / "mor_a_to_x.json").read_bytes())
    assert doc.kind == "morphism"
    assert len(doc.body.vertex_map) == 1
    doc = wio.parse((FIXTURES / "chain_a_xy.json").read_bytes())
    assert doc.kind == "homotopy_chain"
    assert [d for _, d in doc.body.steps] == ["forward", "forward"]
