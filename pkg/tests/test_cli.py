import json
import os

from turankit.cli import main
from turankit.hypergraph import read_hgr


def run_cli(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr().out
    return code, out


def test_bound_json(capsys):
    code, out = run_cli(
        capsys, "bound", "--k", "3", "--g", "4", "--r", "5", "--n", "100"
    )
    assert code == 0
    payload = json.loads(out)
    assert payload["finiteBound"] == "10/23"
    assert payload["asymptotic"] == "5/12"
    assert payload["finiteFactor"] == "24/23"
    assert payload["deCaen"] is None
    assert payload["lowerBound"] == "3/8"
    assert payload["mode"] == "literal"
    assert payload["finiteBoundApprox"].startswith("~0.43478260")


def test_bound_includes_de_caen_at_g_equals_k(capsys):
    code, out = run_cli(capsys, "bound", "--k", "3", "--g", "3", "--r", "5", "--n", "100")
    assert code == 0
    assert json.loads(out)["deCaen"] is not None


def test_bound_usage_error_exit_2(capsys):
    code = main(["bound", "--k", "3", "--g", "4", "--r", "5", "--n", "5"])
    err = capsys.readouterr().err
    assert code == 2
    assert "threshold" in err


def test_bound_deterministic_output(capsys):
    _, first = run_cli(capsys, "bound", "--k", "3", "--g", "4", "--r", "5", "--n", "100")
    _, second = run_cli(capsys, "bound", "--k", "3", "--g", "4", "--r", "5", "--n", "100")
    assert first == second


def test_enumerate_writes_cache(capsys, tmp_path, monkeypatch):
    cache = str(tmp_path / "cache")
    code, out = run_cli(
        capsys, "enumerate", "--k", "3", "--n", "4", "--cache-dir", cache
    )
    assert code == 0
    payload = json.loads(out)
    assert payload["count"] == 5
    k, n, tag, classes = read_hgr(payload["cache"])
    assert (k, n, tag, len(classes)) == (3, 4, "none", 5)
    # environment variable steers the default cache directory
    env_cache = str(tmp_path / "env-cache")
    monkeypatch.setenv("TURANKIT_CACHE", env_cache)
    code, out = run_cli(capsys, "enumerate", "--k", "3", "--n", "4")
    assert code == 0
    assert json.loads(out)["cache"].startswith(env_cache)


def test_enumerate_filter_tag(capsys, tmp_path):
    cache = str(tmp_path / "cache")
    code, out = run_cli(
        capsys,
        "enumerate",
        "--k", "3", "--n", "5",
        "--filter", "no-empty-4",
        "--cache-dir", cache,
    )
    assert code == 0
    payload = json.loads(out)
    assert payload["filter"] == "no-empty-4"
    assert 0 < payload["count"] < 34


def test_enumerate_bad_filter(capsys):
    code = main(["enumerate", "--k", "3", "--n", "4", "--filter", "weird"])
    assert code == 2


def test_solve_output(capsys):
    code, out = run_cli(capsys, "solve", "--k", "3", "--r", "5", "--g", "4")
    assert code == 0
    payload = json.loads(out)
    assert payload["delta"] == ["1/2", "6/5"]
    assert payload["determinant"] == "1"
    assert payload["phi"] == ["1", "1", "1", "0"]
    code, out = run_cli(
        capsys, "solve", "--k", "3", "--r", "6", "--g", "3", "--eps", "1/100"
    )
    assert code == 0
    assert json.loads(out)["eps"] == "1/100"


def test_lower_output(capsys):
    code, out = run_cli(capsys, "lower", "--k", "3", "--g", "4", "--r", "5")
    assert code == 0
    payload = json.loads(out)
    assert payload["direct"] == "3/8"
    assert payload["inclusionExclusion"] == "-1/8"
    assert payload["formulaAgrees"] is False
    assert payload["sandwich"]["product"] == "5/12"
    assert payload["sandwich"]["multinomialLower"] == "3/8"


def test_lower_without_divisibility_has_no_sandwich(capsys):
    code, out = run_cli(capsys, "lower", "--k", "3", "--g", "4", "--r", "6")
    assert code == 0
    payload = json.loads(out)
    assert payload["groups"] == 2
    assert payload["sandwich"] is None


def test_enumerate_guard_exit_2(capsys):
    code = main(["enumerate", "--k", "3", "--n", "7"])
    err = capsys.readouterr().err
    assert code == 2
    assert "guard" in err


def test_table_csv(capsys):
    code, out = run_cli(capsys, "table", "--k", "3", "--r", "5", "--n", "100")
    assert code == 0
    lines = out.strip().splitlines()
    assert lines[0] == "g,finiteBound,asymptotic,deCaen,lowerBound"
    assert len(lines) == 3  # g = 3, 4
    first = lines[1].split(",")
    assert first[0] == "3" and first[3] != ""
    second = lines[2].split(",")
    assert second[0] == "4" and second[1] == "10/23" and second[3] == ""


def test_verify_lemma_suite(capsys):
    code, out = run_cli(capsys, "verify", "--suite", "lemma")
    assert code == 0
    payload = json.loads(out)
    assert payload["verdict"] == "pass"
    assert payload["failures"] == 0
    assert payload["checks"] > 1000


def test_verify_rows_suite(capsys):
    code, out = run_cli(capsys, "verify", "--suite", "rows")
    assert code == 0
    payload = json.loads(out)
    assert payload["verdict"] == "pass"
    # literal-mode positives are warnings, never failures
    assert all(w["kind"] == "literal-row-positive" for w in payload["warnings"])


def test_certificate_cli(capsys, tmp_path, certificate_run):
    cache = str(tmp_path / "cache")
    code, out = run_cli(capsys, "certificate", "--cache-dir", cache)
    assert code == 0
    payload = json.loads(out)
    assert payload["graphCount"] == 2102
    assert payload["minSlack"] == "0"
    assert payload["verdict"] == "pass"
    assert f"{(1 << 20) - 1:x}" in payload["tightGraphs"]
    # the cache was auto-built; a rerun loads it and emits identical bytes
    assert os.path.exists(os.path.join(cache, "k3-n6-no-empty-5.hgr"))
    code2, out2 = run_cli(capsys, "certificate", "--cache-dir", cache)
    assert code2 == 0 and out2 == out


def test_text_format(capsys):
    code, out = run_cli(
        capsys,
        "bound", "--k", "3", "--g", "4", "--r", "5", "--n", "100",
        "--format", "text",
    )
    assert code == 0
    assert "finiteBound = 10/23" in out
