"""CLI: subcommands, formats, and exit-code contract (in-process)."""

import json

import pytest

from halfder.cli import (compute_row, expected_dims, find_witness, main,
                         spec_for_row, verified_dims)
from halfder import Family, FamilySpec, WitnessRefusalError


def run(capsys, *argv):
    code = main(list(argv))
    cap = capsys.readouterr()
    return code, cap.out, cap.err


def test_list(capsys):
    code, out, _ = run(capsys, "list", "--format", "json")
    assert code == 0
    fams = {e["family"] for e in json.loads(out)["families"]}
    assert {"s1", "s_n2", "oscillator", "schrodinger"} <= fams


def test_build_and_jacobi(capsys, tmp_path):
    path = tmp_path / "alg.json"
    code, out, _ = run(capsys, "build", "--family", "s2", "--n", "4",
                       "--out", str(path))
    assert code == 0
    code, out, _ = run(capsys, "jacobi", str(path), "--format", "json")
    assert code == 0
    assert json.loads(out)["jacobi"] == "ok"


def test_jacobi_violation_exit_2(capsys, tmp_path):
    path = tmp_path / "bad.json"
    path.write_text(json.dumps({
        "name": "bad", "dim": 4, "basis": ["a", "b", "c", "d"],
        "brackets": [{"i": 0, "j": 1, "terms": {"2": "1"}},
                     {"i": 0, "j": 2, "terms": {"3": "1"}},
                     {"i": 1, "j": 2, "terms": {"3": "1"}},
                     {"i": 0, "j": 3, "terms": {"1": "1"}}]}))
    code, out, _ = run(capsys, "jacobi", str(path), "--format", "json")
    assert code == 2
    data = json.loads(out)
    assert data["jacobi"] == "violated" and len(data["triple"]) == 3


def test_der_and_locder(capsys, tmp_path):
    path = tmp_path / "alg.json"
    run(capsys, "build", "--family", "s_n2", "--n", "4", "--out", str(path))
    code, out, _ = run(capsys, "der", str(path), "--format", "json")
    assert code == 0
    assert json.loads(out)["dim"] == 2
    code, out, _ = run(capsys, "locder", str(path), "--format", "json")
    assert code == 0
    data = json.loads(out)
    assert data["locder_dim"] == 2 and data["stabilized"]
    assert data["pencil_samples"] > 0
    assert all(data["per_stratum_certified"].values())


def test_twolocal(capsys, tmp_path):
    path = tmp_path / "alg.json"
    run(capsys, "build", "--family", "abelian", "--n", "2", "--out", str(path))
    code, out, _ = run(capsys, "twolocal", str(path), "--format", "json")
    assert code == 0
    assert json.loads(out)["status"] == "PASS"


def test_analyze(capsys, tmp_path):
    path = tmp_path / "alg.json"
    run(capsys, "build", "--family", "sl2module", "--m", "3", "--out", str(path))
    code, out, _ = run(capsys, "analyze", str(path), "--format", "json")
    assert code == 0
    data = json.loads(out)
    assert data["jacobi"] == "ok"
    assert data["der_dim"] == 1 and data["der_trivial"]
    assert data["locder"]["locder_dim"] == 1
    assert data["twolocal"]["status"] == "PASS"


def test_analyze_missing_file_exit_1(capsys):
    code, _, err = run(capsys, "analyze", "/nonexistent/alg.json")
    assert code == 1 and "error" in err


def test_invalid_family_exit_1(capsys):
    code, _, err = run(capsys, "build", "--family", "nope", "--n", "4")
    assert code == 1 and "unknown family" in err


def test_invalid_params_exit_1(capsys):
    code, _, err = run(capsys, "build", "--family", "s1", "--n", "2")
    assert code == 1


def test_table_single_row(capsys):
    code, out, _ = run(capsys, "table", "--families", "s_n2", "--n", "4:5",
                       "--format", "json")
    assert code == 0
    rows = json.loads(out)["rows"]
    assert len(rows) == 2
    for r in rows:
        assert r["match"] and r["published_match"]
        assert (r["der_dim_computed"], r["locder_dim_computed"]) == (2, 2)
        assert r["twolocal_status"] == "PASS"


def test_table_published_mismatch_is_reported(capsys):
    code, out, _ = run(capsys, "table", "--families", "s2", "--n", "4",
                       "--format", "json")
    assert code == 0  # computed matches the verified dims
    row = json.loads(out)["rows"][0]
    assert row["match"] and not row["published_match"]
    assert row["locder_dim_published"] == 7 and row["locder_dim_computed"] == 6
    assert any(n["code"] == "s_scalar_coupling" for n in row["print_notes"])


def test_table_formats(capsys):
    code, out, _ = run(capsys, "table", "--families", "heis", "--n", "1",
                       "--format", "csv")
    assert code == 0
    assert out.splitlines()[0].startswith("label,")
    code, out, _ = run(capsys, "table", "--families", "heis", "--n", "1")
    assert code == 0
    assert out.startswith("| label |")


def test_table_unknown_family_exit_1(capsys):
    code, _, err = run(capsys, "table", "--families", "bogus")
    assert code == 1


def test_witness_emitted(capsys):
    code, out, _ = run(capsys, "witness", "--family", "s1", "--n", "4",
                       "--format", "json")
    assert code == 0
    data = json.loads(out)
    assert data["der_membership"] is False
    assert data["stratified_certificate"]["passed"]


def test_witness_refused(capsys):
    code, _, err = run(capsys, "witness", "--family", "s_n2", "--n", "4")
    assert code == 1 and "refused" in err


def test_find_witness_api():
    A, S, Delta, cert = find_witness(FamilySpec(Family.TAU1, n=3))
    assert S.contains(Delta) is None and cert.passed
    with pytest.raises(WitnessRefusalError):
        find_witness(FamilySpec(Family.HEIS_SOLV, n=1))


def test_expected_vs_verified_dims():
    assert expected_dims("s1", n=4) == (5, 8)
    assert verified_dims("s1", n=4) == (7, 15)
    assert verified_dims("s1", n=5) == expected_dims("s1", n=5) == (6, 10)
    assert expected_dims("s2", n=6) == (6, 11)
    assert verified_dims("s2", n=6) == (6, 10)
    assert verified_dims("s3", n=6) == (6, 9)
    assert verified_dims("tau1", n=6) == expected_dims("tau1", n=6) == (3, 4)
    assert verified_dims("sl2module", m=2) == (2, 2)
    assert verified_dims("sl2module", m=5) == (1, 1)


def test_compute_row_shape():
    row = compute_row("tau2", n=4)
    assert row["der_dim_computed"] == 3 and row["locder_dim_computed"] == 4
    assert row["match"] and row["published_match"] and row["stabilized"]
    assert spec_for_row("tau2", n=4).family is Family.TAU2
