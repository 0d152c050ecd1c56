import pandas as pd
import pytest

import app

from components.exceptions import ParameterError
from components.graph_core import Graph, make_cycle, make_L
from components.graph_core.edge_list import read_edge_list_file, write_edge_list_file
from components.harness import suites
from components.harness.commands import EXIT_CAPACITY, EXIT_OK, EXIT_USAGE, parse_pattern
from components.harness.sweep import KEY_COLUMNS, SWEEP_COLUMNS, SweepCell, cell_graph, cell_seed
from components.tiling import Pattern, max_tiling_exact, parse_tiling


def _run(capsys, *argv):
    code = app.main(list(argv))
    return code, capsys.readouterr().out


@pytest.mark.parametrize("argv, header", [
    (["M", "10", "3"], "10 24"),
    (["L", "8", "5"], "8 10"),
    (["gnm", "5", "0"], "5 0"),
    (["K", "3", "4"], "7 12"),
])
def test_generate_writes_edge_list(tmp_path, capsys, argv, header):
    out = tmp_path / "graph.txt"
    code, stdout = _run(capsys, "generate", *argv, "--out", str(out))
    assert code == EXIT_OK
    assert stdout.strip() == header
    assert out.read_text().splitlines()[0] == header


def test_generate_expand(tmp_path, capsys):
    source, out = tmp_path / "c6.txt", tmp_path / "c6x2.txt"
    write_edge_list_file(make_cycle(6), str(source))
    code, stdout = _run(capsys, "generate", "expand", "2", "--input", str(source), "--out", str(out))
    assert code == EXIT_OK
    assert stdout.strip() == "12 24"
    assert read_edge_list_file(str(out)).edge_count == 24


def test_generate_rejects_bad_parameters(tmp_path, capsys):
    code, _ = _run(capsys, "generate", "M", "3", "5", "--out", str(tmp_path / "g.txt"))
    assert code == EXIT_USAGE
    code, _ = _run(capsys, "generate", "M", "3", "--out", str(tmp_path / "g.txt"))
    assert code == EXIT_USAGE


def test_tile_exact_and_greedy(tmp_path, capsys):
    path = tmp_path / "c6.txt"
    write_edge_list_file(make_cycle(6), str(path))
    code, stdout = _run(capsys, "tile", str(path), "--pattern", "1,2", "--mode", "exact")
    assert code == EXIT_OK
    assert stdout.splitlines() == ["tiles: 2", "covered: 6", "optimal: yes"]
    code, stdout = _run(capsys, "tile", str(path), "--pattern", "1,2", "--mode", "greedy", "--seed", "3")
    assert code == EXIT_OK
    assert int(stdout.splitlines()[0].split()[1]) <= 2


def test_tile_writes_tiling(tmp_path, capsys):
    path, tiles = tmp_path / "l85.txt", tmp_path / "tiles.txt"
    write_edge_list_file(make_L(8, 5), str(path))
    code, stdout = _run(capsys, "tile", str(path), "--pattern", "1,2", "--tiling-out", str(tiles))
    assert code == EXIT_OK
    assert stdout.splitlines()[0] == "tiles: 1"
    tiling = parse_tiling(tiles.read_text(), make_L(8, 5))
    assert tiling.is_valid() and tiling.tile_count == 1


def test_tile_reports_exhausted_budget(tmp_path, capsys):
    path = tmp_path / "g.txt"
    write_edge_list_file(Graph(6, [(0, 1), (0, 2), (1, 3), (1, 4), (2, 5)]), str(path))
    code, stdout = _run(capsys, "tile", str(path), "--pattern", "1,2", "--budget", "0")
    assert code == EXIT_CAPACITY
    assert stdout.splitlines()[-1] == "optimal: no"


def test_tile_iterate_writes_trace(tmp_path, capsys):
    path, trace = tmp_path / "g.txt", tmp_path / "trace.csv"
    write_edge_list_file(make_cycle(7), str(path))
    code, _ = _run(capsys, "tile", str(path), "--pattern", "1,2", "--mode", "iterate", "--q", "2", "--trace", str(trace))
    assert code == EXIT_OK
    frame = pd.read_csv(trace)
    assert list(frame.columns) == ["round", "n", "covered", "fraction", "action"]
    assert len(frame) == 5
    assert list(frame["n"]) == sorted(frame["n"])


def test_tile_needs_a_pattern(tmp_path, capsys):
    path = tmp_path / "g.txt"
    write_edge_list_file(make_cycle(6), str(path))
    code, _ = _run(capsys, "tile", str(path))
    assert code == EXIT_USAGE


def test_tile_rejects_malformed_file(tmp_path, capsys):
    path = tmp_path / "g.txt"
    path.write_text("3 1\n1 1\n")
    code, _ = _run(capsys, "tile", str(path), "--pattern", "1,1")
    assert code == EXIT_USAGE


def test_tile_with_pattern_file(tmp_path, capsys):
    host, pattern = tmp_path / "host.txt", tmp_path / "pattern.txt"
    write_edge_list_file(make_cycle(6), str(host))
    write_edge_list_file(make_cycle(6), str(pattern))
    code, stdout = _run(capsys, "tile", str(host), "--pattern-file", str(pattern))
    assert code == EXIT_OK
    assert stdout.splitlines()[:2] == ["tiles: 1", "covered: 6"]


def test_parse_pattern():
    assert parse_pattern("2,3") == (2, 3)
    with pytest.raises(ParameterError):
        parse_pattern("3,2")
    with pytest.raises(ParameterError):
        parse_pattern("k")


@pytest.mark.parametrize("suite, flags", [
    ("erdos-gallai", ["--max-n", "5"]),
    ("lemma4", ["--max-st", "3", "--max-ab", "20"]),
    ("augment-identity", ["--cases", "50"]),
    ("f1-gain", ["--cases", "50"]),
    ("thresholds", ["--max-st", "2"]),
    ("matching-oracle", ["--max-n", "4", "--cases", "30"]),
    ("color-classes", ["--cases", "50"]),
    ("lower-bound", ["--max-n", "9"]),
    ("retile", ["--cases", "40"]),
])
def test_verify_suites_pass(capsys, suite, flags):
    code, stdout = _run(capsys, "verify", suite, "--quiet", *flags)
    assert code == EXIT_OK
    assert stdout.startswith(f"{suite}: pass")


def test_erdos_gallai_suite_counts_every_graph():
    result = suites.run_suite("erdos-gallai", suites.VerifyLimits(max_n=6, quiet=True))
    assert result.passed
    assert result.cases >= 3 * 2 ** 15


def test_verify_reports_failures(monkeypatch, tmp_path, capsys):
    monkeypatch.setattr(suites, "erdos_gallai_ex", lambda n, l: -1)
    failures = tmp_path / "failures.csv"
    code, stdout = _run(capsys, "verify", "erdos-gallai", "--quiet", "--max-n", "3", "--failures", str(failures))
    assert code == 1
    assert stdout.startswith("erdos-gallai: fail")
    assert list(pd.read_csv(failures).columns) == ["suite", "case", "detail"]


def test_sweep_resumes_from_journal(tmp_path, capsys):
    out = tmp_path / "sweep.csv"
    argv = ["sweep", "--quiet", "--pattern", "1,2", "--alpha", "0.3", "0.6", "--n", "9", "--seed", "0", "1", "--out", str(out)]
    code, stdout = _run(capsys, *argv)
    assert code == EXIT_OK
    assert stdout.splitlines()[0] == "rows: 4"
    first = out.read_text()
    code, stdout = _run(capsys, *argv)
    assert code == EXIT_OK
    assert out.read_text() == first
    frame = pd.read_csv(out)
    assert list(frame.columns) == SWEEP_COLUMNS
    assert not frame.duplicated(KEY_COLUMNS).any()
    assert (frame["tiles_found"] < frame["tiles_target"]).all()


def test_sweep_dense_gnm_cell_uses_greedy_tiler(tmp_path, capsys):
    # K_{2,4} copies of a near-complete 20-vertex host exceed the copy cap.
    out = tmp_path / "dense.csv"
    code, stdout = _run(capsys, "sweep", "--quiet", "--pattern", "2,4", "--alpha", "0.95", "--n", "20",
                        "--generator", "gnm", "--out", str(out))
    assert code == EXIT_OK
    assert stdout.splitlines()[0] == "rows: 1"
    row = pd.read_csv(out).iloc[0]
    assert 1 <= row["tiles_found"] <= row["tiles_target"] == 3
    assert row["ratio"] == pytest.approx(row["tiles_found"] / 3)


def test_sweep_lower_bound_cells_stay_below_target():
    for generator in ("M", "L"):
        cell = SweepCell(0, 1, 2, 0.5, 12, 0, generator)
        graph, target = cell_graph(cell)
        found = max_tiling_exact(graph, Pattern.complete_bipartite(1, 2)).tiling.tile_count
        assert found < target


def test_cell_seed_is_stable():
    assert cell_seed(0, 3) == cell_seed(0, 3)
    assert cell_seed(0, 3) != cell_seed(0, 4)
    assert 0 <= cell_seed(5, 0) < 2 ** 64


def test_config_file_sets_defaults(tmp_path, capsys):
    path, config = tmp_path / "c6.txt", tmp_path / "tile.conf"
    write_edge_list_file(make_cycle(6), str(path))
    config.write_text("# tiling defaults\npattern = 1,2\nmode = greedy\n\nseed = 2\n")
    code, stdout = _run(capsys, "tile", str(path), "--config", str(config), "--mode", "exact")
    assert code == EXIT_OK
    assert stdout.splitlines()[-1] == "optimal: yes"


def test_config_file_rejects_unknown_keys(tmp_path, capsys):
    path, config = tmp_path / "c6.txt", tmp_path / "tile.conf"
    write_edge_list_file(make_cycle(6), str(path))
    config.write_text("workers = 3\n")
    with pytest.raises(SystemExit) as excinfo:
        app.main(["tile", str(path), "--config", str(config)])
    assert excinfo.value.code == EXIT_USAGE
