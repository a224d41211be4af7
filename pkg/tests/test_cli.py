import pytest

from lomlab.cli import main


@pytest.fixture()
def line5(tmp_path):
    path = tmp_path / "line5.txt"
    path.write_text("5 1\n0\n1\n2\n3\n4\n")
    return path


@pytest.fixture()
def square(tmp_path):
    path = tmp_path / "square.txt"
    path.write_text("4 2\n0 0\n1 0\n0 1\n1 1\n")
    return path


def run(argv, capsys):
    code = main(argv)
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_verify_dim2_passes(tmp_path, capsys):
    out = tmp_path / "reports"
    code, stdout, _ = run(
        ["verify", "dim2", "--t", "0..4", "--workers", "1", "--out", str(out)], capsys
    )
    assert code == 0
    assert "dim2: pass" in stdout
    reports = list(out.glob("verify-dim2-*.txt"))
    assert len(reports) == 1
    body = reports[0].read_text()
    assert "verdict: pass" in body
    assert "seed: 0" in body


def test_verify_counterexamples(tmp_path, capsys):
    code, stdout, _ = run(
        ["verify", "counterexamples", "--out", str(tmp_path / "r")], capsys
    )
    assert code == 0
    assert stdout.count(": pass") == 3


def test_verify_bad_range_is_usage_error(tmp_path, capsys):
    code, _, stderr = run(
        ["verify", "dim2", "--t=-1..0", "--out", str(tmp_path / "r")], capsys
    )
    assert code == 2
    assert "usage error" in stderr


def test_verify_reports_are_append_only_and_deterministic(tmp_path, capsys):
    out = tmp_path / "reports"
    args = ["verify", "dim2", "--t", "0..1", "--workers", "1", "--out", str(out)]
    assert run(args, capsys)[0] == 0
    report = next(out.glob("verify-dim2-*.txt"))
    first = report.read_text()
    assert run(args, capsys)[0] == 0
    doubled = report.read_text()
    assert doubled == first + first


def test_verify_emit_fixtures(tmp_path, capsys):
    out = tmp_path / "reports"
    code, _, _ = run(
        [
            "verify", "dim2", "--t", "0..0", "--out", str(out),
            "--emit", "matrix", "--emit", "board", "--emit", "witness",
        ],
        capsys,
    )
    assert code == 0
    assert (out / "dim2-r3-t0.matrix.txt").read_text().startswith("3 6\n")
    assert (out / "dim2-r3-t0.board.txt").read_text().startswith("3 6\n")
    assert "travel=" in (out / "dim2-r3-t0.witness.txt").read_text()


def test_verify_failing_instance_exits_1_and_dumps_fixtures(tmp_path, capsys):
    # the even-dimension family genuinely fails at r = 7, t = 2; the CLI must
    # report it and leave a replayable fixture set behind
    out = tmp_path / "reports"
    code, stdout, _ = run(
        ["verify", "even-d", "--t", "2..2", "--r", "7..7", "--workers", "1", "--out", str(out)],
        capsys,
    )
    assert code == 1
    assert "even-d: fail" in stdout
    assert (out / "even-d-r7-t2.matrix.txt").exists()
    assert (out / "even-d-r7-t2.board.txt").exists()
    assert "ok=false" in (out / "even-d-r7-t2.witness.txt").read_text()


def test_verify_rank3_scan(tmp_path, capsys):
    code, stdout, _ = run(
        ["verify", "rank3-scan", "--n", "5..5", "--workers", "1", "--out", str(tmp_path / "r")],
        capsys,
    )
    assert code == 0
    assert "rank3-scan: pass" in stdout


def test_bounds_h0_column(capsys):
    code, stdout, _ = run(["bounds", "h0", "--d", "2", "--n", "5..9"], capsys)
    assert code == 0
    rows = [line.split("\t") for line in stdout.strip().splitlines()[1:]]
    assert all(row[2] == "exact" and row[3] == "5" for row in rows)


def test_bounds_cyclic_single_query(capsys):
    code, stdout, _ = run(["bounds", "cyclic", "--d", "3", "--n", "6"], capsys)
    assert code == 0
    assert "\t8\t" in stdout


def test_bounds_h0_d1(capsys):
    code, stdout, _ = run(["bounds", "h0", "--d", "1", "--n", "3"], capsys)
    assert code == 0
    assert "exact\t2" in stdout


def test_bounds_writes_table_file(tmp_path, capsys):
    out = tmp_path / "table.tsv"
    code, stdout, _ = run(
        ["bounds", "hd1", "--d", "3..4", "--n", "7..8", "--out", str(out)], capsys
    )
    assert code == 0
    assert out.read_text() == stdout


def test_radon_maximize_line5(line5, tmp_path, capsys):
    code, stdout, _ = run(
        ["radon", str(line5), "maximize", "--out", str(tmp_path / "r")], capsys
    )
    assert code == 0
    assert "max = 5" in stdout
    assert "RBRBR" in stdout


def test_radon_count_square(square, tmp_path, capsys):
    code, stdout, _ = run(
        ["radon", str(square), "count", "--coloring", "RBBR", "--out", str(tmp_path / "r")],
        capsys,
    )
    assert code == 0
    assert "count = 1" in stdout


def test_radon_count_needs_coloring(square, tmp_path, capsys):
    code, _, stderr = run(
        ["radon", str(square), "count", "--out", str(tmp_path / "r")], capsys
    )
    assert code == 2
    assert "usage error" in stderr


def test_radon_degenerate_points_exit_3(tmp_path, capsys):
    bad = tmp_path / "collinear.txt"
    bad.write_text("3 2\n0 0\n1 1\n2 2\n")
    code, _, stderr = run(["radon", str(bad), "maximize", "--out", str(tmp_path / "r")], capsys)
    assert code == 3
    assert "affinely dependent" in stderr


def test_radon_missing_file_exit_3(tmp_path, capsys):
    code, _, _ = run(
        ["radon", str(tmp_path / "nope.txt"), "maximize", "--out", str(tmp_path / "r")],
        capsys,
    )
    assert code == 3


def test_radon_gale(square, tmp_path, capsys):
    code, stdout, _ = run(["radon", str(square), "gale", "--out", str(tmp_path / "r")], capsys)
    assert code == 0
    assert "dual_dim: 1" in stdout or "gale transform into dimension 1" in stdout


def test_radon_lift_reports_inapplicable_cleanly(line5, tmp_path, capsys):
    code, _, stderr = run(
        ["radon", str(line5), "lift", "--out", str(tmp_path / "r")], capsys
    )
    assert code == 1
    assert "lift not applicable" in stderr


def test_matrix_inspect(tmp_path, capsys):
    path = tmp_path / "m.txt"
    path.write_text("2 3\n+-+\n+++\n")
    code, stdout, _ = run(["matrix", str(path)], capsys)
    assert code == 0
    assert "top travel: 1:1-2;2:2-3" in stdout
    assert "acyclic: yes" in stdout


def test_matrix_bad_file_exit_3(tmp_path, capsys):
    path = tmp_path / "m.txt"
    path.write_text("2 3\n+-+\n+*+\n")
    code, _, _ = run(["matrix", str(path)], capsys)
    assert code == 3


def test_scan_smoke(tmp_path, capsys):
    code, stdout, _ = run(
        ["scan", "--r", "3", "--n", "6", "--budget", "10", "--out", str(tmp_path / "r")],
        capsys,
    )
    assert code == 0
    assert "exploration r=3 n=6" in stdout


def test_unknown_subcommand_is_usage_error(capsys):
    assert main(["frobnicate"]) == 2
