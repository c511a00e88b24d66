import json
import subprocess
import sys

import pytest

from thetaturan import (ThetaSpec, build_theta, complete, graph6_decode,
                        graph6_encode, pad, turan_formula)
from thetaturan.cli import EXIT_LIMIT, EXIT_OK, EXIT_USAGE, run_command


def run_ok(argv) -> dict:
    code, text = run_command(argv)
    assert code == EXIT_OK, text
    return json.loads(text)


def test_classify_payload():
    out = run_ok(["classify", "theta(1,2,2)"])
    assert out["label"] == "NearlyQuadratic"
    assert out["schema"] == 1
    assert out["t"] == 4
    assert out["alpha_num"] is None
    sub = run_ok(["classify", "theta(2,3)"])
    assert (sub["alpha_num"], sub["alpha_den"]) == (1, 625)


def test_build_standard_and_out(tmp_path):
    out = run_ok(["build", "turan", "2", "8"])
    assert out["n"] == 8 and out["edges"] == 16
    assert graph6_decode(out["graph6"]).edge_count == 16
    path = tmp_path / "g.g6"
    out = run_ok(["build", "theta", "1", "2", "3", "5", "--out", str(path)])
    assert out["n"] == 9 and out["edges"] == 11
    assert graph6_decode(path.read_text().strip()).n == 9


def test_build_constructions(tmp_path):
    out = run_ok(["build", "apex", "2", "9"])
    assert out["edges"] == graph6_decode(out["graph6"]).edge_count
    out = run_ok(["build", "matched", "8"])
    assert out["n"] == 8
    rs_path = tmp_path / "rs.txt"
    out = run_ok(["build", "rs", "3", "--out", str(rs_path)])
    assert out["triangles"] == 3 * out["set_size"]
    lines = rs_path.read_text().splitlines()
    assert graph6_decode(lines[0]).n == 18
    assert len(lines) == 1 + out["triangles"]
    bpath = tmp_path / "b.txt"
    out = run_ok(["build", "behrend", "100", "--out", str(bpath)])
    assert out["size"] == len(bpath.read_text().split())


def test_oracle_payload():
    out = run_ok(["oracle", "--n", "5", "--r", "3",
                  "--forbid", "theta(1,2,2)", "--copies", "1"])
    assert out["value"] == 2
    assert out["exact"] is True
    for w in out["witnesses"]:
        assert graph6_encode(graph6_decode(w)) == w
    out2 = run_ok(["oracle", "--n", "6", "--r", "3",
                   "--forbid", "theta(1,2)", "--copies", "2"])
    assert out2["value"] == 10


def test_oracle_accepts_graph6_pattern():
    g6 = graph6_encode(build_theta(ThetaSpec([1, 2])))
    out = run_ok(["oracle", "--n", "4", "--r", "3", "--forbid", g6])
    assert out["value"] == 0


def test_oracle_routes_to_lower_bound():
    out = run_ok(["oracle", "--n", "12", "--r", "3",
                  "--forbid", "theta(2,3)", "--copies", "2",
                  "--budget", "2", "--seed", "1"])
    assert out["exact"] is False
    assert out["value"] >= turan_formula(12, 2, 3)


def test_phi_payload():
    out = run_ok(["phi", "--n", "6", "--r", "3", "--c", "1",
                  "--forbid", "theta(1,2)"])
    assert (out["value_num"], out["value_den"]) == (9, 1)
    assert out["relation"] == "equals"
    assert out["unique_turan_witness"] is True
    half = run_ok(["phi", "--n", "5", "--r", "3", "--c", "1/2",
                   "--forbid", "theta(2,3)"])
    assert half["c_den"] == 2


def test_theorem2_json_and_csv():
    args = ["theorem2", "--k", "2", "--r", "3", "--forbid", "theta(1,2)",
            "--n-min", "5", "--n-max", "7"]
    out = run_ok(args)
    ns = [row["n"] for row in out["rows"]]
    assert ns == [5, 6, 7]
    code, text = run_command(args + ["--csv"])
    assert code == EXIT_OK
    lines = text.strip().splitlines()
    assert lines[0] == "n,formula,value,value_kind,clique_competitor,gap"
    assert len(lines) == 4


def test_assign_command(tmp_path):
    g6file = tmp_path / "k4.g6"
    g6file.write_text(graph6_encode(complete(4)) + "\n")
    dump = tmp_path / "dump.txt"
    out = run_ok(["assign", str(g6file), "--mode", "pair", "--out", str(dump)])
    assert out["psi"] == 12
    assert dump.read_text().strip().endswith("loads: 2x2 1x4")
    out2 = run_ok(["assign", str(g6file), "--mode", "single:2",
                   "--forbid", "theta(1,2)"])
    assert out2["psi"] == 4
    assert out2["reference_two_h"] == 6


def test_stability_command(tmp_path):
    g6file = tmp_path / "t2.g6"
    from thetaturan import turan
    g6file.write_text(graph6_encode(turan(2, 20)) + "\n")
    out = run_ok(["stability", str(g6file), "--eps", "0.1",
                  "--forbid", "theta(2,3)"])
    assert out["survivor"] == 20
    assert out["internal_edges"] == 0
    assert out["clauses"]["bipartite"] == "pass"


def test_verify_rs():
    out = run_ok(["verify", "rs", "--m", "20"])
    assert out["ok"] is True
    assert out["triangles"] == 20 * out["set_size"]
    assert out["max_book"] == 1


def test_exit_codes():
    code, _ = run_command(["nonsense"])
    assert code == EXIT_USAGE
    code, _ = run_command(["build", "cycle", "2"])
    assert code == EXIT_USAGE
    code, _ = run_command(["phi", "--n", "11", "--r", "3", "--c", "1",
                           "--forbid", "theta(1,2)"])
    assert code == EXIT_LIMIT
    code, text = run_command(["oracle", "--n", "5", "--r", "3",
                              "--forbid", "theta(1,2)", "--threads", "0"])
    assert code == EXIT_USAGE


def test_no_partial_json_on_error():
    code, text = run_command(["build", "cycle", "2"])
    assert code != EXIT_OK
    with pytest.raises(json.JSONDecodeError):
        json.loads(text)


def test_repeat_runs_identical():
    for argv in (["classify", "theta(2,2)"],
                 ["oracle", "--n", "5", "--r", "3", "--forbid", "theta(1,2,2)"],
                 ["verify", "rs", "--m", "5"],
                 ["theorem2", "--k", "2", "--r", "3", "--forbid", "theta(1,2)",
                  "--n-min", "4", "--n-max", "6"]):
        assert run_command(argv) == run_command(argv)
        assert run_command(argv) == run_command(argv + ["--seed", "0", "--threads", "8"])


def test_subprocess_stdout_is_payload_only():
    proc = subprocess.run(
        [sys.executable, "-m", "thetaturan", "classify", "theta(1,2,2)"],
        capture_output=True, text=True)
    assert proc.returncode == 0
    payload = json.loads(proc.stdout)
    assert payload["label"] == "NearlyQuadratic"
    assert "ok in" in proc.stderr


def test_corpus(tmp_path):
    manifest = tmp_path / "manifest.txt"
    g6file = tmp_path / "k4.g6"
    g6file.write_text(graph6_encode(complete(4)) + "\n")
    manifest.write_text(
        "classify theta(1,2,2)\n"
        "\n"
        "# comment line\n"
        f"assign {g6file} --mode pair\n"
        "build cycle 2\n")
    out_dir = tmp_path / "out"
    out = run_ok(["corpus", str(manifest), "--out-dir", str(out_dir)])
    assert out["total"] == 3
    assert out["failed"] == 1
    assert (out_dir / "index.json").exists()
    first = json.loads((out_dir / "cmd_000.json").read_text())
    assert first["label"] == "NearlyQuadratic"
    statuses = [e["status"] for e in out["entries"]]
    assert statuses == ["ok", "ok", "error"]


def test_corpus_empty_manifest(tmp_path):
    manifest = tmp_path / "empty.txt"
    manifest.write_text("")
    out = run_ok(["corpus", str(manifest), "--out-dir", str(tmp_path / "o")])
    assert out["total"] == 0 and out["failed"] == 0


def test_corpus_unreadable_manifest(tmp_path):
    code, _ = run_command(["corpus", str(tmp_path / "missing.txt"),
                           "--out-dir", str(tmp_path / "o")])
    assert code == EXIT_USAGE
    assert not (tmp_path / "o").exists()
