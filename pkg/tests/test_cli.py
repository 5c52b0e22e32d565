import json

import pytest

from kochdual.chain import dump_chain, generate_chain
from kochdual.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


class TestGen:
    def test_s1_exact_points(self, capsys):
        code, out, _ = run(capsys, "gen", "-s", "1")
        assert code == 0
        data = json.loads(out)
        assert data["points"] == [["-1/1", "0/1"], ["0/1", "-1/1"], ["1/1", "0/1"]]

    def test_s2_flatten_exponents(self, capsys):
        code, out, _ = run(capsys, "gen", "-s", "2")
        assert code == 0
        data = json.loads(out)
        assert data["flatten_exponents"] == [1]
        assert len(data["points"]) == 5

    def test_s0_usage_error(self, capsys):
        with pytest.raises(SystemExit) as excinfo:
            main(["gen", "-s", "0"])
        assert excinfo.value.code == 2

    def test_invalid_override_fails(self, capsys):
        code, _, err = run(capsys, "gen", "-s", "3", "--flatten-exp", "1,1")
        assert code == 1
        assert "chain" in err

    def test_out_file(self, capsys, tmp_path):
        target = tmp_path / "chain.json"
        code, out, _ = run(capsys, "gen", "-s", "2", "--out", str(target))
        assert code == 0 and out == ""
        assert json.loads(target.read_text())["s"] == 2


class TestCensus:
    def test_s3_bounded_pentagons(self, capsys):
        code, out, _ = run(capsys, "census", "-s", "3")
        assert code == 0
        assert json.loads(out)["bounded"]["5"] == 5

    def test_s3_projective(self, capsys):
        code, out, _ = run(capsys, "census", "-s", "3", "--projective")
        assert code == 0
        assert json.loads(out)["histogram"]["5"] == 9

    def test_s1_projective_triangles(self, capsys):
        code, out, _ = run(capsys, "census", "-s", "1", "--projective")
        assert code == 0
        assert json.loads(out)["histogram"] == {"3": 4}

    def test_table_sorted_by_edge_count(self, capsys):
        code, out, _ = run(capsys, "census", "-s", "2", "--format", "table")
        assert code == 0
        bounded_rows = [l for l in out.splitlines() if l.startswith("bounded")]
        edges = [int(row.split("\t")[1]) for row in bounded_rows]
        assert edges == sorted(edges) == [3, 4, 5]


class TestVerify:
    def test_range_all_pass(self, capsys):
        code, out, _ = run(capsys, "verify", "-s", "1..5")
        assert code == 0
        assert "# overall: PASS" in out

    def test_s2_reports_anomaly_path(self, capsys):
        code, out, _ = run(capsys, "verify", "-s", "2")
        assert code == 0
        assert "four_edge_faces_merge_with_two_edge" in out

    def test_corrupted_chain_file(self, capsys, tmp_path):
        chain = generate_chain(2)
        data = json.loads(dump_chain(chain))
        data["points"][1] = ["-1/4", "1/4"]  # lift one point above the baseline
        bad = tmp_path / "bad.json"
        bad.write_text(json.dumps(data))
        code, out, _ = run(capsys, "verify", "--chain", str(bad))
        assert code == 1
        assert "chain.upper_shadow_ok" in out and "FAIL" in out

    def test_valid_chain_file(self, capsys, tmp_path):
        good = tmp_path / "good.json"
        good.write_text(dump_chain(generate_chain(2)))
        code, out, _ = run(capsys, "verify", "--chain", str(good))
        assert code == 0

    def test_json_format(self, capsys):
        code, out, _ = run(capsys, "verify", "-s", "1", "--format", "json")
        assert code == 0
        assert json.loads(out)["passed"] is True

    def test_report_dir_artifacts(self, capsys, tmp_path):
        outdir = tmp_path / "report"
        code, _, _ = run(capsys, "verify", "-s", "1..3", "--report-dir", str(outdir))
        assert code == 0
        assert (outdir / "report.csv").exists()
        assert (outdir / "pentagon_counts.png").exists()
        assert (outdir / "face_sizes.png").exists()
        header = (outdir / "report.csv").read_text().splitlines()[0]
        assert header == "check,status,expected,actual,note"

    def test_missing_selection_is_usage_error(self, capsys):
        with pytest.raises(SystemExit) as excinfo:
            main(["verify"])
        assert excinfo.value.code == 2


class TestRender:
    def test_primal_svg(self, capsys):
        code, out, _ = run(capsys, "render", "-s", "2", "--primal")
        assert code == 0
        assert out.startswith("<svg ") and out.count("<circle") == 5

    def test_dual_svg(self, capsys):
        code, out, _ = run(capsys, "render", "-s", "1", "--dual")
        assert code == 0
        assert out.count("<line") == 3

    def test_mode_required(self, capsys):
        with pytest.raises(SystemExit) as excinfo:
            main(["render", "-s", "1"])
        assert excinfo.value.code == 2


class TestOracle:
    def test_match(self, capsys):
        code, out, err = run(capsys, "oracle", "-s", "2")
        assert code == 0 and err == ""
        assert json.loads(out)["bounded"] == {"3": 4, "4": 1, "5": 1}


class TestDeterminism:
    @pytest.mark.parametrize(
        "argv",
        [
            ("gen", "-s", "3"),
            ("census", "-s", "3"),
            ("census", "-s", "2", "--projective"),
            ("render", "-s", "2", "--dual"),
            ("render", "-s", "3", "--primal"),
        ],
    )
    def test_repeat_runs_identical(self, capsys, argv):
        _, first, _ = run(capsys, *argv)
        _, second, _ = run(capsys, *argv)
        assert first == second and first
