"""Command-line behavior: schemas, determinism, cache, exit codes."""

import json
import subprocess
import sys

import numpy as np
import pytest

from occupoly.cli import main, parse_weights


@pytest.fixture()
def run(tmp_path, capsys, monkeypatch):
    """Invoke main() in-process with an isolated cache; returns
    (exit_code, parsed_json_or_None, raw_stdout, stderr)."""
    monkeypatch.setenv("OCCUPOLY_CACHE_DIR", str(tmp_path / "cache"))

    def _run(*argv):
        code = main(list(argv))
        captured = capsys.readouterr()
        try:
            payload = json.loads(captured.out)
        except json.JSONDecodeError:
            payload = None
        return code, payload, captured.out, captured.err

    return _run


def test_parse_weights():
    w = parse_weights("0.5,0.3,0.2")
    assert [str(v) for v in w.values] == ["1/2", "3/10", "1/5"]
    # near-miss sums are normalized, gross errors rejected
    parse_weights("0.5000001,0.3,0.2")
    from occupoly.cli import UsageError

    with pytest.raises(UsageError):
        parse_weights("0.5,0.3,0.1")
    with pytest.raises(UsageError):
        parse_weights("")


def test_sequences_schema(run):
    code, payload, _, _ = run("sequences", "--N", "3", "--d", "5", "--r", "1")
    assert code == 0
    assert payload["schema"] == 1
    assert payload["count"] == 1
    assert payload["sequences"] == [[[1, 2, 3]]]


def test_vertices_known(run):
    code, payload, _, _ = run(
        "vertices", "--N", "3", "--d", "5", "--r", "3", "--w", "0.5,0.3,0.2"
    )
    assert code == 0
    assert payload["count"] == 2
    numerics = {tuple(v["numeric"]) for v in payload["vertices"]}
    assert numerics == {(1.0, 1.0, 0.5, 0.3, 0.2), (1.0, 0.8, 0.7, 0.5, 0.0)}
    entries = {tuple(v["entries"]) for v in payload["vertices"]}
    assert ("1", "1", "w1", "w2", "w3") in entries
    assert ("1", "w1+w2", "w1+w3", "w2+w3", "0") in entries


def test_facets_records(run):
    code, payload, _, _ = run("facets", "--N", "3", "--d", "5", "--r", "3")
    assert code == 0
    assert payload["count"] == 3
    rows = {
        (tuple(f["c"]), f["a0"], tuple(f["a"]), f["nc"]) for f in payload["facets"]
    }
    assert ((2, 2, 1, 1), -2, (1, 1, 0), 2) in rows
    assert ((1, 1, 1), -1, (1, 0, 0), 1) in rows
    assert ((1,), 1, (0, 0, 0), 0) in rows
    by_c = {tuple(f["c"]): f for f in payload["facets"]}
    assert by_c[(2, 2, 1, 1)]["normalization"] == "2N-2+w1+w2 form"
    assert by_c[(2, 2, 1, 1)]["render"].endswith("<= 2N - 2 + w1 + w2")


def test_facets_numeric_when_weights_given(run):
    code, payload, _, _ = run(
        "facets", "--N", "3", "--d", "5", "--r", "3", "--w", "0.5,0.3,0.2"
    )
    assert code == 0
    assert payload["numeric_count"] == 3
    rhs = {f["rhs"] for f in payload["numeric_facets"]}
    assert "1" in rhs and "5/2" in rhs and "24/5" in rhs


def test_member_exit_codes(run):
    code, payload, _, _ = run(
        "member", "--N", "2", "--d", "3", "--w", "0.7,0.3,0", "--lam", "1,0.7,0.3"
    )
    assert code == 0 and payload["member"] is True
    code, payload, _, _ = run(
        "member", "--N", "2", "--d", "3", "--w", "0.7,0.3,0", "--lam", "1,1,0"
    )
    assert code == 1 and payload["member"] is False
    assert payload["violated"]
    assert min(f["slack_float"] for f in payload["slacks"]) == pytest.approx(-0.3)


def test_member_wrong_length(run):
    code, payload, _, _ = run(
        "member", "--N", "2", "--d", "3", "--w", "0.7,0.3,0", "--lam", "1,0.5"
    )
    assert code == 2 and payload["error"]["kind"] == "usage"


def test_determinism_cold_vs_warm(run):
    args = ("facets", "--N", "3", "--d", "5", "--r", "2")
    _, _, out_cold, err_cold = run(*args)
    _, _, out_warm, err_warm = run(*args)
    assert out_cold == out_warm
    assert "cache: cold" in err_cold and "cache: warm" in err_warm


def test_cache_corruption_recovers(run, tmp_path):
    args = ("facets", "--N", "2", "--d", "4", "--r", "2")
    _, _, out_first, _ = run(*args)
    cache_file = tmp_path / "cache" / "facets-N2-d4-r2.json"
    assert cache_file.exists()
    cache_file.write_text("{broken")
    code, _, out_again, err = run(*args)
    assert code == 0
    assert out_again == out_first
    assert "corrupted" in err
    # the cache entry was rewritten and is valid again
    record = json.loads(cache_file.read_text())
    assert record["schema"] == 1 and "sha256" in record


def test_cache_hash_mismatch_detected(run, tmp_path):
    args = ("facets", "--N", "2", "--d", "4", "--r", "2")
    run(*args)
    cache_file = tmp_path / "cache" / "facets-N2-d4-r2.json"
    record = json.loads(cache_file.read_text())
    record["payload"]["facets"][0]["offset"] += 1  # silent tamper
    cache_file.write_text(json.dumps(record))
    code, _, _, err = run(*args)
    assert code == 0
    assert "hash mismatch" in err


def test_cache_verify_flag(run, tmp_path):
    args = ("facets", "--N", "2", "--d", "4", "--r", "2")
    run(*args)
    code, _, _, err = run(*args, "--verify")
    assert code == 0
    assert "verified against recomputation" in err


def test_capacity_errors(run):
    code, payload, _, _ = run(
        "spectrum", "--N", "6", "--d", "14", "--h-diag",
        ",".join(str(k) for k in range(14)), "--space-cap", "100",
    )
    assert code == 2 and payload["error"]["kind"] == "capacity"
    code, payload, _, _ = run(
        "sequences", "--N", "4", "--d", "12", "--r", "8", "--r-cap", "7"
    )
    assert code == 2 and payload["error"]["kind"] == "capacity"


def test_weight_rejection(run):
    code, payload, _, _ = run(
        "member", "--N", "2", "--d", "3", "--w", "0.9,0.3", "--lam", "1,0.5,0.5"
    )
    assert code == 2 and payload["error"]["kind"] == "usage"


def test_spectrum_and_energy(run):
    code, payload, _, _ = run(
        "spectrum", "--N", "2", "--d", "3", "--h-diag", "0,1,2"
    )
    assert code == 0
    assert payload["energies"] == [1.0, 2.0, 3.0]
    code, payload, _, _ = run(
        "energy", "--N", "2", "--d", "3", "--w", "0.7,0.3,0",
        "--h-diag", "0,1,2",
    )
    assert code == 0
    assert payload["agree"] is True
    assert payload["exact"] == pytest.approx(1.3)
    assert payload["occupations"] == pytest.approx([1.0, 0.7, 0.3], abs=1e-9)


def test_energy_requires_hamiltonian(run):
    code, payload, _, _ = run(
        "energy", "--N", "2", "--d", "3", "--w", "0.7,0.3,0"
    )
    assert code == 2 and payload["error"]["kind"] == "usage"


def test_functional_modes(run, tmp_path):
    gamma_file = tmp_path / "gamma.json"
    gamma_file.write_text(
        json.dumps({"matrix": [[1.0, 0, 0], [0, 0.7, 0], [0, 0, 0.3]]})
    )
    for mode in ("relaxed", "orbit"):
        code, payload, _, _ = run(
            "functional", "--N", "2", "--d", "3", "--w", "0.7,0.3,0",
            "--mode", mode, "--gamma-file", str(gamma_file),
        )
        assert code == 0
        assert payload["mode"] == mode
        # zero interaction: the functional vanishes
        assert abs(payload["value"]) < 1e-8


def test_functional_infeasible_exit(run, tmp_path):
    gamma_file = tmp_path / "gamma.json"
    gamma_file.write_text(
        json.dumps({"matrix": [[1.0, 0, 0], [0, 1.0, 0], [0, 0, 0.0]]})
    )
    code, payload, _, _ = run(
        "functional", "--N", "2", "--d", "3", "--w", "0.7,0.3,0",
        "--gamma-file", str(gamma_file),
    )
    assert code == 1 and payload["error"]["kind"] == "infeasible"


def test_figure_s1_outputs(run, tmp_path):
    out_dir = tmp_path / "fig"
    code, payload, _, _ = run("figure-s1", "--out-dir", str(out_dir))
    assert code == 0
    csv_path = out_dir / "figure_s1.csv"
    png_path = out_dir / "figure_s1.png"
    assert csv_path.exists() and png_path.exists()
    assert png_path.read_bytes()[:8] == b"\x89PNG\r\n\x1a\n"
    assert payload["series"][0]["minimizer"] == [1.0, 1.0]
    assert payload["series"][1]["minimizer"] == pytest.approx([1.0, 0.7])
    assert payload["series"][2]["minimizer"] == pytest.approx([0.8, 0.7])
    # CSV content is deterministic across reruns
    first = csv_path.read_bytes()
    run("figure-s1", "--out-dir", str(out_dir))
    assert csv_path.read_bytes() == first


def test_figure_s1_no_plot(run, tmp_path):
    out_dir = tmp_path / "noplot"
    code, payload, _, _ = run(
        "figure-s1", "--out-dir", str(out_dir), "--no-plot"
    )
    assert code == 0
    assert (out_dir / "figure_s1.csv").exists()
    assert not (out_dir / "figure_s1.png").exists()
    assert payload["png"] is None


def test_validate_zero_trials(run):
    code, payload, _, _ = run("validate", "--trials", "0")
    assert code == 0
    assert payload["ok"] is True
    assert payload["checks"] == [] and payload["failures"] == []


def test_validate_small_run(run):
    code, payload, _, _ = run("validate", "--trials", "3", "--seed", "5")
    assert code == 0
    assert payload["ok"] is True
    assert {c["name"] for c in payload["checks"]} == {
        "polytope_consistency",
        "route_agreement",
        "variational_principle",
    }
    assert all(c["failed"] == 0 for c in payload["checks"])


def test_out_file(run, tmp_path):
    target = tmp_path / "out.json"
    code, payload, stdout, _ = run(
        "sequences", "--N", "2", "--d", "4", "--r", "1", "--out", str(target)
    )
    assert code == 0
    assert stdout == ""
    assert json.loads(target.read_text())["count"] == 1


def test_entry_point_subprocess(tmp_path):
    """The installed console script behaves like main()."""
    proc = subprocess.run(
        [sys.executable, "-m", "occupoly.cli", "sequences", "--N", "3",
         "--d", "5", "--r", "1"],
        capture_output=True,
        text=True,
        env={"PATH": "/usr/bin:/bin", "OCCUPOLY_CACHE_DIR": str(tmp_path)},
    )
    assert proc.returncode == 0
    assert json.loads(proc.stdout)["count"] == 1
