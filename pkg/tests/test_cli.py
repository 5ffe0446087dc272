import json

import pytest

from hopcompress import Graph, builtin, write_edge_list
from hopcompress.cli import main


def write_graph(path, g):
    with open(path, "w", encoding="utf-8") as handle:
        write_edge_list(g, handle)


@pytest.fixture
def triangle_file(tmp_path):
    path = tmp_path / "triangle.txt"
    write_graph(path, builtin("triangle"))
    return str(path)


@pytest.fixture
def zachary_file(tmp_path):
    path = tmp_path / "zachary.txt"
    write_graph(path, builtin("zachary"))
    return str(path)


class TestCompress:
    def test_zachary_ratio_reported(self, zachary_file, tmp_path, capsys):
        out = tmp_path / "out.txt"
        code = main(
            [
                "compress",
                zachary_file,
                "--p",
                "0.5,1.0",
                "--ordering",
                "random",
                "--seed",
                "1",
                "-o",
                str(out),
            ]
        )
        assert code == 0
        payload = json.loads(capsys.readouterr().out)
        assert payload["n"] == 34 and payload["m"] == 78
        assert payload["verified"] is True
        assert 0.15 <= payload["ratio"] <= 0.45
        assert out.exists()

    def test_identity_compression(self, triangle_file, tmp_path, capsys):
        out = tmp_path / "kept.txt"
        code = main(["compress", triangle_file, "--p", "1.0", "-o", str(out)])
        assert code == 0
        assert out.read_text() == open(triangle_file).read()

    def test_non_monotone_p_is_config_error(self, triangle_file):
        assert main(["compress", triangle_file, "--p", "0.9,0.5"]) == 1

    def test_missing_input_is_io_error(self):
        assert main(["compress", "/nonexistent/g.txt", "--p", "1"]) == 2

    def test_report_written(self, triangle_file, tmp_path):
        report = tmp_path / "report.json"
        code = main(
            ["compress", triangle_file, "--p", "0,1", "--report", str(report)]
        )
        assert code == 0
        assert json.loads(report.read_text())["t"] == 2

    def test_deterministic_outputs(self, zachary_file, tmp_path, capsys):
        outs = []
        for name in ("a.txt", "b.txt"):
            out = tmp_path / name
            assert (
                main(
                    [
                        "compress",
                        zachary_file,
                        "--p",
                        "0.5,1",
                        "--seed",
                        "7",
                        "-o",
                        str(out),
                    ]
                )
                == 0
            )
            outs.append(out.read_bytes())
        capsys.readouterr()
        assert outs[0] == outs[1]

    def test_sa_ordering(self, triangle_file, capsys):
        code = main(
            [
                "compress",
                triangle_file,
                "--p",
                "0,1",
                "--ordering",
                "sa",
                "--sa-iters",
                "30",
            ]
        )
        assert code == 0
        payload = json.loads(capsys.readouterr().out)
        assert payload["strategy"] == "sa"
        assert payload["kept"] == 2


class TestVerify:
    def test_roundtrip_after_compress(self, zachary_file, tmp_path, capsys):
        out = tmp_path / "gc.txt"
        assert (
            main(["compress", zachary_file, "--p", "0.5,1", "-o", str(out)]) == 0
        )
        capsys.readouterr()
        assert main(["verify", zachary_file, str(out), "--p", "0.5,1"]) == 0
        assert capsys.readouterr().out.strip() == "ok"

    def test_spanner_pair_ok(self, triangle_file, tmp_path):
        gc = tmp_path / "gc.txt"
        write_graph(gc, Graph.from_edges(3, [(0, 1), (0, 2)]))
        assert main(["verify", triangle_file, str(gc), "--p", "0,1"]) == 0

    def test_violation_listed(self, triangle_file, tmp_path, capsys):
        gc = tmp_path / "gc.txt"
        write_graph(gc, Graph.from_edges(2, [(0, 1)]))
        code = main(["verify", triangle_file, str(gc), "--p", "0,1"])
        assert code == 4
        out = capsys.readouterr().out
        assert "vertex 2" in out and "level 2" in out

    def test_extra_edge_named(self, tmp_path, capsys):
        original = tmp_path / "g.txt"
        write_graph(original, Graph.from_edges(3, [(0, 1), (1, 2)]))
        gc = tmp_path / "gc.txt"
        gc.write_text("0 2\n")
        code = main(["verify", str(original), str(gc), "--p", "1"])
        assert code == 4
        assert "(0, 2)" in capsys.readouterr().out


class TestGenAndEval:
    def test_gen_writes_count_files(self, tmp_path):
        outdir = tmp_path / "instances"
        code = main(
            ["gen", str(outdir), "--n", "10", "--m", "15", "--count", "4", "--seed", "5"]
        )
        assert code == 0
        files = sorted(outdir.glob("*.txt"))
        assert len(files) == 4
        for f in files:
            assert len(f.read_text().splitlines()) == 15

    def test_gen_rejects_overfull(self, tmp_path):
        assert main(["gen", str(tmp_path), "--n", "4", "--m", "10"]) == 1

    def test_sp_hist_single_graph(self, triangle_file, capsys):
        assert main(["eval", "sp-hist", triangle_file]) == 0
        out = capsys.readouterr().out
        assert "pairs" in out and "disc" in out

    def test_sp_hist_two_columns(self, triangle_file, tmp_path, capsys):
        gc = tmp_path / "gc.txt"
        write_graph(gc, Graph.from_edges(3, [(0, 1), (0, 2)]))
        code = main(["eval", "sp-hist", triangle_file, str(gc)])
        assert code == 0
        out = capsys.readouterr().out
        assert "original" in out and "compressed" in out
        assert "speed-up" in out

    def test_stretch(self, triangle_file, tmp_path, capsys):
        gc = tmp_path / "gc.txt"
        write_graph(gc, Graph.from_edges(3, [(0, 1), (0, 2)]))
        assert main(["eval", "stretch", triangle_file, str(gc), "--t", "2"]) == 0
        assert "max stretch: 2" in capsys.readouterr().out

    def test_ratio(self, triangle_file, tmp_path, capsys):
        gc = tmp_path / "gc.txt"
        write_graph(gc, Graph.from_edges(3, [(0, 1), (0, 2)]))
        assert main(["eval", "ratio", triangle_file, str(gc)]) == 0
        assert "1/3" in capsys.readouterr().out


class TestBench:
    def test_table_and_report(self, tmp_path, capsys):
        report = tmp_path / "bench.json"
        code = main(
            [
                "bench",
                "--family",
                "8,12,3",
                "--p",
                "0,1",
                "--strategies",
                "basic,ec",
                "--seed",
                "4",
                "--sa-iters",
                "10",
                "--report",
                str(report),
            ]
        )
        assert code == 0
        out = capsys.readouterr().out
        assert "basic-random" in out and "ec" in out
        payload = json.loads(report.read_text())
        assert payload["trials"] == 3
        assert payload["seed_list"] == [4, 5, 6]

    def test_bad_family_string(self):
        assert main(["bench", "--family", "8,12", "--p", "1"]) == 1

    def test_jobs_env_override(self, tmp_path, capsys, monkeypatch):
        monkeypatch.setenv("HOPCOMPRESS_JOBS", "2")
        code = main(
            ["bench", "--family", "6,8,2", "--p", "0,1", "--strategies", "basic"]
        )
        assert code == 0


class TestEdgeCases:
    def test_empty_graph_roundtrip(self, tmp_path, capsys):
        empty = tmp_path / "empty.txt"
        empty.write_text("# nothing here\n")
        out = tmp_path / "gc.txt"
        assert main(["compress", str(empty), "--p", "0,1", "-o", str(out)]) == 0
        payload = json.loads(capsys.readouterr().out)
        assert payload["n"] == 0 and payload["kept"] == 0
        assert main(["verify", str(empty), str(out), "--p", "0,1"]) == 0


class TestArgumentHandling:
    def test_unknown_strategy_is_config_error(self, triangle_file):
        assert main(["compress", triangle_file, "--p", "1", "--ordering", "bogus"]) == 1

    def test_missing_subcommand(self):
        assert main([]) == 1

    def test_builtin_names_accepted(self, capsys):
        assert main(["compress", "zachary", "--p", "1"]) == 0
        payload = json.loads(capsys.readouterr().out)
        assert payload["m"] == 78
