import pytest

from wph.cli import main

from helpers import FIXTURES


@pytest.fixture(autouse=True)
def no_color(monkeypatch):
    monkeypatch.setenv("WPH_COLOR", "never")


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_validate_ok(capsys):
    code, out, _ = run(capsys, "validate", str(FIXTURES / "pc_diamond_weighted.json"))
    assert code == 0
    assert out == "OK kind=path_complex ring=Z\n"


def test_validate_missing_file(capsys):
    code, out, err = run(capsys, "validate", str(FIXTURES / "does_not_exist.json"))
    assert code == 2
    assert out == ""
    assert err.startswith("error:")


def test_homology_diamond_table(capsys):
    code, out, _ = run(capsys, "homology", str(FIXTURES / "pc_diamond_weighted.json"))
    assert code == 0
    lines = out.splitlines()
    assert lines[0].startswith("# homology ")
    assert "coeff=z" in lines[0] and "max-dim=3" in lines[0] and "maxlen=4" in lines[0]
    assert lines[1] == "H_0 = Z^2  (free_rank=2, torsion=[])"
    assert lines[2] == "H_1 = Z^2  (free_rank=2, torsion=[])"


def test_homology_torsion_and_unweighted(capsys):
    code, out, _ = run(capsys, "homology", str(FIXTURES / "pc_edge_torsion.json"), "--max-dim", "2")
    assert code == 0
    assert "H_0 = Z + Z/2  (free_rank=1, torsion=[2])" in out
    code, out, _ = run(
        capsys, "homology", str(FIXTURES / "pc_edge_torsion.json"), "--max-dim", "2", "--unweighted"
    )
    assert code == 0
    assert "H_0 = Z  (free_rank=1, torsion=[])" in out


def test_homology_composite_modulus_exits_3(capsys):
    code, _, err = run(capsys, "homology", str(FIXTURES / "pc_diamond_weighted.json"), "--coeff", "mod:6")
    assert code == 3
    assert "Z/6" in err


def test_homology_pipelines_on_hypergraph(capsys):
    for pipeline in ("natural", "connective", "bold", "density2"):
        code, out, _ = run(
            capsys,
            "homology",
            str(FIXTURES / "dh_chain.json"),
            "--pipeline",
            pipeline,
            "--max-dim",
            "2",
        )
        assert code == 0, pipeline
        assert "H_0 = Z" in out


def test_homology_pipeline_kind_mismatch_exits_2(capsys):
    code, _, err = run(capsys, "homology", str(FIXTURES / "pc_diamond_weighted.json"), "--pipeline", "natural")
    assert code == 2
    assert "directed_hypergraph" in err


def test_functor_output_parses_and_is_deterministic(capsys):
    args = ("functor", str(FIXTURES / "dh_single.json"), "--functor", "natural")
    code1, out1, _ = run(capsys, *args)
    code2, out2, _ = run(capsys, *args)
    assert code1 == code2 == 0
    assert out1 == out2
    from wph import io as wio

    doc = wio.parse(out1)
    assert doc.kind == "digraph"


def test_functor_cylinder_writes_file(tmp_path, capsys):
    out_file = tmp_path / "cyl.json"
    code, out, _ = run(
        capsys, "functor", str(FIXTURES / "pc_edge_torsion.json"), "--functor", "cylinder",
        "-o", str(out_file),
    )
    assert code == 0 and out == ""
    from wph import io as wio

    doc = wio.parse(out_file.read_bytes())
    assert doc.kind == "path_complex"
    assert any(v.endswith("'") for v in [x.render() for x in doc.body.vertices])


def test_homotopy_check_one_step_and_certificate(capsys):
    code, out, _ = run(
        capsys,
        "homotopy-check",
        str(FIXTURES / "pc_point_q.json"),
        str(FIXTURES / "pc_edge_q.json"),
        "--f", str(FIXTURES / "mor_a_to_x.json"),
        "--g", str(FIXTURES / "mor_a_to_y.json"),
        "--certify-chain-homotopy",
    )
    assert code == 0
    assert "one-step homotopy: PASS" in out
    assert "induced homology maps equal: yes" in out


def test_homotopy_check_fails_in_reverse(capsys):
    code, out, err = run(
        capsys,
        "homotopy-check",
        str(FIXTURES / "pc_point_q.json"),
        str(FIXTURES / "pc_edge_q.json"),
        "--f", str(FIXTURES / "mor_a_to_y.json"),
        "--g", str(FIXTURES / "mor_a_to_x.json"),
    )
    assert code == 4
    assert "FAIL" in out


def test_homotopy_check_chain_mode(capsys):
    code, out, _ = run(
        capsys,
        "homotopy-check",
        str(FIXTURES / "pc_point_q.json"),
        str(FIXTURES / "pc_edge_q.json"),
        "--f", str(FIXTURES / "mor_a_to_x.json"),
        "--g", str(FIXTURES / "mor_a_to_y.json"),
        "--mode", "chain",
        "--chain", str(FIXTURES / "chain_a_xy.json"),
    )
    assert code == 0
    assert "homotopy chain: PASS" in out


def test_homotopy_check_dhyper(capsys):
    code, out, _ = run(
        capsys,
        "homotopy-check",
        str(FIXTURES / "dh_mor_source.json"),
        str(FIXTURES / "dh_square_sets.json"),
        "--f", str(FIXTURES / "mor_dh_f.json"),
        "--g", str(FIXTURES / "mor_dh_g.json"),
        "--category", "dhyper",
        "--certify-chain-homotopy",
    )
    assert code == 0
    assert "induced homology maps equal: yes" in out


def test_prism_check_pass_and_gate(capsys):
    code, out, _ = run(capsys, "prism-check", str(FIXTURES / "pc_diamond_q.json"), "--degree", "1")
    assert code == 0
    assert out.splitlines()[-1].startswith("PASS")
    code, _, err = run(capsys, "prism-check", str(FIXTURES / "pc_edge_torsion.json"))
    assert code == 3


def test_prism_check_seeded_sampling_is_deterministic(capsys):
    args = ("prism-check", str(FIXTURES / "pc_diamond_q.json"), "--degree", "1",
            "--samples", "2", "--seed", "5")
    _, out1, _ = run(capsys, *args)
    _, out2, _ = run(capsys, *args)
    assert out1 == out2


def test_all_fixture_documents_validate(capsys):
    for path in sorted(FIXTURES.glob("*.json")):
        code, out, err = run(capsys, "validate", str(path))
        assert code == 0, (path.name, err)
