import json
import subprocess
import sys

import pytest

from gtcore import load_pajek
from gtcore.cli import run
from gtcore.formats import (
    load_network, read_clu, read_csv, read_staircase_csv, read_vec, save_pajek,
)

from test_formats import TOY_NET


@pytest.fixture
def toy_path(tmp_path):
    path = tmp_path / "toy.net"
    path.write_text(TOY_NET)
    return path


def test_core_json(toy_path, tmp_path):
    out = tmp_path / "out.json"
    assert run(["core", "-i", str(toy_path), "--f", "deg", "--g", "deg",
                "--p", "2", "--q", "1", "-o", str(out)]) == 0
    data = json.loads(out.read_text())
    assert data["core1"] == ["a"] and data["core2"] == ["x", "y"]
    assert [r["node"] for r in data["removed"]] == ["b", "c"]


def test_core_clu(toy_path, tmp_path):
    out = tmp_path / "out.clu"
    assert run(["core", "-i", str(toy_path), "--p", "2", "--q", "1", "-o", str(out)]) == 0
    assert read_clu(out.read_text()) == [1, 0, 0, 1, 1]


def test_levels_vec_and_sizes(toy_path, tmp_path):
    out = tmp_path / "T.vec"
    plot = tmp_path / "sizes.svg"
    assert run(["levels", "-i", str(toy_path), "--f", "deg", "--g", "deg", "--p", "2",
                "-o", str(out), "--plot", str(plot)]) == 0
    assert read_vec(out.read_text()) == [1, -1, -1, 1, 1]
    sizes = read_csv((tmp_path / "T.sizes.csv").read_text())
    assert sizes == [{"q": "1", "size1": "1", "size2": "2", "size": "3"}]
    assert plot.read_text().startswith("<svg")


def test_levels_fixed_q(toy_path, tmp_path):
    out = tmp_path / "T.json"
    assert run(["levels", "-i", str(toy_path), "--fixed", "q", "--q", "2", "-o", str(out)]) == 0
    data = json.loads(out.read_text())
    assert data["q"] == 2 and data["fixed_mode"] == 2
    assert data["T"] == dict.fromkeys("abcxy", 1)
    assert run(["levels", "-i", str(toy_path), "--fixed", "q", "-o", str(out)]) == 2


def test_boundary_csv(toy_path, tmp_path):
    out = tmp_path / "b.csv"
    pic = tmp_path / "b.svg"
    assert run(["boundary", "-i", str(toy_path), "--f", "deg", "--g", "deg",
                "-o", str(out), "--svg", str(pic)]) == 0
    assert read_staircase_csv(out.read_text()) == [(2, 1, 1, 2), (1, 2, 3, 2)]
    assert "<svg" in pic.read_text()
    exact = tmp_path / "e.csv"
    assert run(["boundary", "-i", str(toy_path), "--exact", "-o", str(exact)]) == 0
    assert exact.read_text() == out.read_text()
    assert run(["boundary", "-i", str(toy_path), "--candidates", "0", "-o", str(exact)]) == 0
    assert read_staircase_csv(exact.read_text()) == [(0, 2, 3, 2)]


def test_gen_and_stats(tmp_path, capsys):
    net_path = tmp_path / "g.net"
    args = ["gen", "--n1", "20", "--n2", "30", "--m", "100", "--weights", "integer:1,4",
            "--seed", "5", "-o", str(net_path)]
    assert run(args) == 0
    net = load_pajek(net_path.read_text())
    assert (net.n1, net.n2, net.m) == (20, 30, 100)
    assert run(["stats", "-i", str(net_path)]) == 0
    stats = json.loads(capsys.readouterr().out)
    assert (stats["n1"], stats["n2"], stats["m"]) == (20, 30, 100)
    assert 1 <= stats["weights"]["min"] <= stats["weights"]["max"] <= 4
    json_path = tmp_path / "g.json"
    assert run(args[:-1] + [str(json_path)]) == 0
    assert load_network(json_path) == net


def test_outputs_are_deterministic(toy_path, tmp_path):
    commands = [
        ["core", "--p", "1", "--q", "1", "--f", "wdeg", "--g", "pweight"],
        ["levels", "--p", "1", "--f", "mweight"],
        ["boundary", "--f", "wdeg"],
        ["stats"],
    ]
    for i, cmd in enumerate(commands):
        outs = []
        for k in range(2):
            out = tmp_path / f"{i}-{k}.out"
            assert run(cmd[:1] + ["-i", str(toy_path), "-o", str(out), "--format",
                                  {"core": "json", "levels": "csv", "boundary": "csv",
                                   "stats": "json"}[cmd[0]]] + cmd[1:]) == 0
            outs.append(out.read_bytes())
        assert outs[0] == outs[1]
    gens = []
    for k in range(2):
        out = tmp_path / f"gen{k}.net"
        run(["gen", "--n1", "50", "--n2", "50", "--m", "200", "--seed", "7", "-o", str(out)])
        gens.append(out.read_bytes())
    assert gens[0] == gens[1]


def test_input_errors_exit_1(tmp_path):
    bad = tmp_path / "bad.net"
    bad.write_text("*Vertices 3 2\n*Edges\n1 2\n")
    assert run(["core", "-i", str(bad), "--p", "1", "--q", "1"]) == 1
    assert run(["stats", "-i", str(tmp_path / "missing.net")]) == 1


def test_config_errors_exit_2(toy_path, tmp_path):
    assert run(["core", "-i", str(toy_path), "--p", "1", "--q", "1", "--f", "nope"]) == 2
    assert run(["core", "-i", str(toy_path), "--p", "1", "--q", "1",
                "-o", str(tmp_path / "x.vec")]) == 2
    assert run(["core", "-i", str(toy_path), "--p", "1", "--q", "1", "--f", "indeg",
                "--strict-directed"]) == 2
    assert run(["gen", "--n1", "2", "--n2", "2", "--m", "5"]) == 2
    for argv in (["core", "-i", str(toy_path), "--p", "-1", "--q", "1"],
                 ["core", "-i", str(toy_path), "--p", "abc", "--q", "1"],
                 ["core", "-i", str(toy_path), "--p", "1"]):
        with pytest.raises(SystemExit) as exc:
            run(argv)
        assert exc.value.code == 2


def test_module_entry_point(toy_path):
    proc = subprocess.run(
        [sys.executable, "-m", "gtcore", "core", "-i", str(toy_path), "--p", "2", "--q", "1"],
        capture_output=True, text=True, check=True,
    )
    assert json.loads(proc.stdout)["core2"] == ["x", "y"]


def test_generated_network_round_trips(tmp_path):
    out = tmp_path / "g.net"
    run(["gen", "--n1", "5", "--n2", "5", "--m", "12", "--weights", "uniform:0.5,2",
         "--seed", "1", "-o", str(out)])
    net = load_pajek(out.read_text())
    assert save_pajek(net) == out.read_text()
