import json

import pytest

from hylag.cli import main
from hylag.hypergraph import read_hyg


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_build_writes_graph_and_sidecar(tmp_path, capsys):
    path = tmp_path / "g.hyg"
    code, out, _ = run(capsys, "build", "--family", "alpha", "--ell", "2", "--t", "3", "--out", str(path))
    assert code == 0
    side = json.loads((tmp_path / "g.hyg.json").read_text())
    assert side["edge_count"] == 6 == read_hyg(path).num_edges
    assert side["N_ell"] == "5/8" and side["seed"] == 0 and "version" in side


def test_build_n12_to_stdout(capsys):
    code, out, err = run(capsys, "build", "--family", "n12_125", "--t", "2")
    assert code == 0 and len(out.strip().splitlines()) == 1 + 56
    assert json.loads(err)["edge_count"] == 56


def test_build_invalid_ell(capsys):
    code, _, err = run(capsys, "build", "--family", "alpha", "--ell", "1", "--t", "3")
    assert code == 2 and "ell" in err


def test_round_trip_through_lagrangian(tmp_path, capsys):
    path = tmp_path / "h.hyg"
    run(capsys, "build", "--family", "n12_125", "--t", "1", "--out", str(path))
    code, out, _ = run(capsys, "lagrangian", str(path), "--restarts", "4")
    res = json.loads(out)
    assert code == 0 and res["edge_count"] == 1
    assert res["lambda_lower"] == pytest.approx(1 / 3125, abs=1e-12)


@pytest.mark.parametrize(
    "text,expected",
    [("5 5\n0 1 2 3 4\n", 1 / 3125), ("2 3\n0 1\n0 2\n1 2\n", 1 / 3), ("5 6\n", 0.0)],
)
def test_lagrangian_examples(tmp_path, capsys, text, expected):
    path = tmp_path / "x.hyg"
    path.write_text(text)
    code, out, _ = run(capsys, "lagrangian", str(path))
    res = json.loads(out)
    assert code == 0 and res["lambda_lower"] == pytest.approx(expected, abs=1e-9)
    assert set(res) >= {"lambda_lower", "argmax", "kkt_residual", "restarts", "seed"}


def test_lagrangian_malformed(tmp_path, capsys):
    path = tmp_path / "bad.hyg"
    path.write_text("2 3\n0 7\n")
    assert run(capsys, "lagrangian", str(path))[0] == 2
    assert run(capsys, "lagrangian", str(tmp_path / "missing.hyg"))[0] == 2


def test_seed_from_environment(tmp_path, capsys, monkeypatch):
    monkeypatch.setenv("HYLAG_SEED", "17")
    path = tmp_path / "x.hyg"
    path.write_text("2 3\n0 1\n")
    assert json.loads(run(capsys, "lagrangian", str(path))[1])["seed"] == 17
    monkeypatch.setenv("HYLAG_SEED", "abc")
    assert run(capsys, "lagrangian", str(path))[0] == 2


def test_sparse_command(tmp_path, capsys):
    code, out, _ = run(capsys, "sparse", "--t", "10", "--k", "6", "--out", str(tmp_path / "a.hyg"))
    rec = json.loads(out)
    assert code == 0 and rec["locally_sparse"] and rec["edge_count_ok"]
    code2, out2, _ = run(capsys, "sparse", "--t", "10", "--k", "6")
    assert json.loads(out2)["edge_count"] == rec["edge_count"]


def test_sparse_failure_exit_1(capsys):
    assert run(capsys, "sparse", "--t", "8", "--k", "8", "--sigma", "0.5", "--attempts", "1")[0] == 1


def test_verify_g_max(capsys):
    code, out, _ = run(capsys, "verify", "--claim", "g_max", "--L", "2", "--budget", "4")
    rep = json.loads(out)
    assert code == 0 and rep["pass"] and rep["claims"][0]["target"] == "1/192"
    assert rep["config"]["seed"] == 0 and "version" in rep["config"]


def test_verify_case_c_range(capsys):
    code, out, _ = run(capsys, "verify", "--claim", "case_c", "--q", "2..50", "--format", "table")
    assert code == 0 and "PASS" in out


def test_verify_refused(capsys):
    code, out, _ = run(capsys, "verify", "--claim", "F", "--family", "n252_625", "--q", "2")
    assert code == 2 and "layering condition" in json.loads(out)["refused"][0]


def test_verify_unknown_claim(capsys):
    assert run(capsys, "verify", "--claim", "nope")[0] == 2


def test_usage_error(capsys):
    assert run(capsys, "frobnicate")[0] == 2
    assert run(capsys, "verify", "--claim", "case_c", "--q", "x..y")[0] == 2


def test_report_tables(capsys):
    code, out, _ = run(capsys, "report", "--ell", "2..6")
    rows = json.loads(out)["rows"]
    assert code == 0 and [r["N_ell_q"] for r in rows][0] == "5/8"
    code, out, _ = run(capsys, "report", "--kind", "lift", "--r", "5..8")
    assert [r["lambda_target"] for r in json.loads(out)["rows"]][0] == "151/18750"
    code, out, _ = run(capsys, "report", "--kind", "density", "--family", "n12_125", "--t", "2..6")
    d = [r["density_float"] for r in json.loads(out)["rows"]]
    assert d == sorted(d, reverse=True) and d[-1] > 12 / 125
