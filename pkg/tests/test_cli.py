import json

from bettilab.cli import main


def run(capsys, *argv):
    rc = main(list(argv))
    captured = capsys.readouterr()
    return rc, captured.out, captured.err


class TestBuild:
    def test_prime_graph(self, capsys):
        rc, out, _ = run(capsys, "build", "--t", "3", "--k", "6")
        assert rc == 0
        data = json.loads(out)
        assert data["n"] == 17
        assert len(data["edges"]) == 34

    def test_full_variant(self, capsys):
        rc, out, _ = run(capsys, "build", "--t", "3", "--k", "6", "--variant", "full")
        data = json.loads(out)
        assert len(data["edges"]) == 51

    def test_minus_cycle(self, capsys):
        cycle = ",".join(str(4 * i % 17) for i in range(17))
        rc, out, _ = run(capsys, "build", "--t", "3", "--k", "6",
                         "--variant", "minus-cycle", "--cycle", cycle)
        assert rc == 0
        assert len(json.loads(out)["edges"]) == 34

    def test_k3_prime_is_matching(self, capsys):
        rc, out, _ = run(capsys, "build", "--t", "2", "--k", "3")
        data = json.loads(out)
        assert data["edges"] == [[0, 3], [1, 4], [2, 5]]

    def test_invalid_cycle_is_usage_error(self, capsys):
        rc, _, err = run(capsys, "build", "--t", "3", "--k", "6",
                         "--variant", "minus-cycle", "--cycle", "0,1,2")
        assert rc == 2
        assert "cycle" in err

    def test_missing_params(self, capsys):
        rc, _, err = run(capsys, "build")
        assert rc == 2

    def test_deterministic(self, capsys):
        _, out1, _ = run(capsys, "build", "--t", "2", "--k", "5")
        _, out2, _ = run(capsys, "build", "--t", "2", "--k", "5")
        assert out1 == out2

    def test_out_file(self, capsys, tmp_path):
        path = tmp_path / "g.json"
        rc, out, _ = run(capsys, "build", "--t", "2", "--k", "4", "--out", str(path))
        assert rc == 0 and out == ""
        assert json.loads(path.read_text())["n"] == 8


class TestBetti:
    def test_table(self, capsys):
        rc, out, _ = run(capsys, "betti", "--t", "2", "--k", "4")
        assert rc == 0
        assert "reg=4 pd=4" in out
        assert "2:" in out

    def test_json(self, capsys):
        rc, out, _ = run(capsys, "betti", "--t", "2", "--k", "4", "--format", "json")
        data = json.loads(out)
        assert data["char"] == 2
        assert [0, 2, 8] in data["entries"]
        assert [4, 8, 1] in data["entries"]

    def test_csv(self, capsys):
        rc, out, _ = run(capsys, "betti", "--t", "1", "--k", "4", "--format", "csv")
        assert out.splitlines()[0] == "i,j,beta"
        assert "0,2,5" in out

    def test_second_prime_matches(self, capsys):
        _, out2, _ = run(capsys, "betti", "--t", "2", "--k", "4", "--format", "csv")
        _, outp, _ = run(capsys, "betti", "--t", "2", "--k", "4",
                         "--format", "csv", "--char", "32003")
        assert out2 == outp

    def test_k3_table_matches_binomials(self, capsys):
        _, out, _ = run(capsys, "betti", "--t", "3", "--k", "3", "--format", "csv")
        assert "0,2,4" in out and "3,8,1" in out

    def test_composite_characteristic_rejected(self, capsys):
        rc, _, err = run(capsys, "betti", "--t", "2", "--k", "4", "--char", "9")
        assert rc == 2

    def test_tier_gate(self, capsys):
        rc, _, err = run(capsys, "betti", "--t", "3", "--k", "6")
        assert rc == 3
        assert "tier" in err

    def test_graph_file_input(self, capsys, tmp_path):
        path = tmp_path / "g.json"
        run(capsys, "build", "--t", "2", "--k", "4", "--out", str(path))
        rc, out, _ = run(capsys, "betti", "--graph", str(path), "--format", "json")
        assert rc == 0
        assert json.loads(out)["n"] == 8

    def test_deterministic_json(self, capsys):
        _, out1, _ = run(capsys, "betti", "--t", "2", "--k", "5", "--format", "json")
        _, out2, _ = run(capsys, "betti", "--t", "2", "--k", "5", "--format", "json")
        assert out1 == out2


class TestVerifyCommand:
    def test_passes(self, capsys):
        rc, out, _ = run(capsys, "verify", "--t", "2", "--k", "4")
        assert rc == 0
        assert "summary: 18/18 passed" in out

    def test_t1_passes_with_skips(self, capsys):
        rc, out, _ = run(capsys, "verify", "--t", "1", "--k", "5")
        assert rc == 0
        assert "skip" in out
        assert "2 informational" in out

    def test_json_format(self, capsys):
        rc, out, _ = run(capsys, "verify", "--t", "2", "--k", "4", "--format", "json")
        data = json.loads(out)
        assert all(c["passed"] for c in data["checks"] if c["passed"] is not None)
        formulas = {f["quantity"]: f["value"] for f in data["formulas"]}
        assert formulas["regularity"] == 4
        assert formulas["induced-matching-count"] == 12

    def test_csv_format(self, capsys):
        rc, out, _ = run(capsys, "verify", "--t", "2", "--k", "4", "--format", "csv")
        lines = out.strip().splitlines()
        assert lines[0] == "name,status,details"
        assert all(",ok," in line for line in lines[1:])

    def test_full_variant_report(self, capsys):
        rc, out, _ = run(capsys, "verify", "--t", "1", "--k", "4", "--variant", "full")
        assert rc == 0
        assert "disagree" in out

    def test_minus_cycle_variant_rejected(self, capsys):
        rc, _, err = run(capsys, "verify", "--t", "3", "--k", "4",
                         "--variant", "minus-cycle")
        assert rc == 2

    def test_missing_graph_file(self, capsys):
        rc, _, err = run(capsys, "betti", "--graph", "/nonexistent/g.json")
        assert rc == 2

    def test_failing_check_gives_exit_one(self, capsys, monkeypatch):
        from bettilab import cli
        from bettilab.verify import CheckResult

        monkeypatch.setattr(
            cli, "verify_instance",
            lambda *a, **kw: [CheckResult("made-up-item", False, "forced")])
        rc, out, _ = run(capsys, "verify", "--t", "2", "--k", "4")
        assert rc == 1
        assert "FAIL made-up-item" in out

    def test_threads_env_default(self, monkeypatch):
        from bettilab.cli import build_parser

        monkeypatch.setenv("BETTI_LAB_THREADS", "3")
        args = build_parser().parse_args(["betti", "--t", "2", "--k", "4"])
        assert args.threads == 3


class TestConjectureCommand:
    def test_match_table(self, capsys):
        rc, out, _ = run(capsys, "conjecture", "--t", "3,4", "--k", "3,4")
        assert rc == 0
        assert out.count("match") == 4

    def test_empty_range(self, capsys):
        rc, out, _ = run(capsys, "conjecture", "--t", "", "--k", "3")
        assert rc == 0

    def test_range_syntax(self, capsys):
        rc, out, _ = run(capsys, "conjecture", "--t", "3..4", "--k", "3",
                         "--format", "csv")
        lines = out.strip().splitlines()
        assert lines[0] == "t,k,verdict,extra,missing"
        assert len(lines) == 3

    def test_json(self, capsys):
        rc, out, _ = run(capsys, "conjecture", "--t", "4", "--k", "3", "--format", "json")
        data = json.loads(out)
        assert data[0]["verdict"] == "match"

    def test_fourteen_vertex_scan(self, capsys):
        rc, out, _ = run(capsys, "conjecture", "--t", "3", "--k", "4,5")
        assert rc == 0
        assert out.count("match") == 2


class TestReport:
    def test_writes_files(self, capsys, tmp_path):
        out_dir = tmp_path / "report"
        rc, out, _ = run(capsys, "report", "--t", "3", "--k", "4",
                         "--out-dir", str(out_dir))
        assert rc == 0
        stem = "betti_t3_k4_prime"
        for name in ["graph.json", f"{stem}.csv", f"{stem}.txt",
                     f"{stem}.png", f"{stem}_shape.png", "summary.json"]:
            path = out_dir / name
            assert path.exists(), name
            assert path.stat().st_size > 0
        summary = json.loads((out_dir / "summary.json").read_text())
        assert summary["reg"] == 5 and summary["pd"] == 6
        assert summary["failed_checks"] == []
        assert summary["conjectured_shape"]["verdict"] == "match"
        # figures are real images
        assert (out_dir / f"{stem}.png").read_bytes()[:8].startswith(b"\x89PNG")

    def test_csv_next_to_figure(self, capsys, tmp_path):
        out_dir = tmp_path / "r2"
        run(capsys, "report", "--t", "2", "--k", "3", "--out-dir", str(out_dir))
        csv_text = (out_dir / "betti_t2_k3_prime.csv").read_text()
        assert csv_text.splitlines()[0] == "i,j,beta"
        assert (out_dir / "betti_t2_k3_prime.png").exists()

    def test_zero_ideal_report(self, capsys, tmp_path):
        out_dir = tmp_path / "r3"
        rc, _, _ = run(capsys, "report", "--t", "2", "--k", "2",
                       "--out-dir", str(out_dir))
        assert rc == 0
        summary = json.loads((out_dir / "summary.json").read_text())
        assert summary["reg"] is None and summary["pd"] is None
        assert (out_dir / "betti_t2_k2_prime.png").exists()

    def test_graph_file_report(self, capsys, tmp_path):
        path = tmp_path / "g.json"
        run(capsys, "build", "--t", "1", "--k", "4", "--out", str(path))
        out_dir = tmp_path / "r4"
        rc, _, _ = run(capsys, "report", "--graph", str(path),
                       "--out-dir", str(out_dir))
        assert rc == 0
        summary = json.loads((out_dir / "summary.json").read_text())
        assert summary["n"] == 5 and "checks" not in summary
