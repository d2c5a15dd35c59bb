import json

import pytest

from src.main import config_from_args, main
from src.recgraph import cycle_graph
from src.serialization import DocumentSerializer, dump_document
from src.utils.exceptions import UsageError


def run_cli(capsys, *argv):
    status = main(list(argv))
    captured = capsys.readouterr()
    return status, captured.out, captured.err


def run_json(capsys, *argv):
    status, out, err = run_cli(capsys, *argv)
    assert status == 0, err
    return json.loads(out)


def test_gen_writes_the_graph_document(capsys):
    document = run_json(capsys, "gen", "--graph", "diamond:2")
    assert document["config"]["command"] == "gen"
    report = document["report"]
    assert (report["vertex_count"], report["edge_count"]) == (12, 16)
    assert len(report["edges"]) == 16
    assert report["vertices"][0]["address"] == "d:bottom"


def test_family_and_level_flags(capsys):
    document = run_json(capsys, "gen", "--family", "laakso", "--level", "1",
                        "--normalization", "weighted", "--summary")
    assert document["config"]["graph"] == "laakso:1:weighted"
    assert document["report"]["edge_length"] == {"num": 1, "den": 4}
    assert document["report"]["max_degree"] == 3


def test_graph_document_round_trip(capsys, tmp_path):
    path = tmp_path / "d2.json"
    assert main(["gen", "--graph", "diamond:2", "--output", str(path)]) == 0
    document = run_json(capsys, "diam", "--graph", str(path))
    assert document["report"]["hops"] == 4


def test_generic_graph_from_a_document(capsys, tmp_path):
    path = tmp_path / "hexagon.json"
    path.write_text(dump_document(DocumentSerializer().graph(cycle_graph(6))))
    report = run_json(capsys, "embed", "exact", "--source", str(path), "--target", "diamond:2")["report"]
    assert report["status"] == "optimal"
    assert report["value"] != {"num": 1, "den": 1}
    assert report["witness"]["source"] == "cycle:6"


def test_classify_all(capsys):
    report = run_json(capsys, "cycles", "classify-all", "--graph", "diamond:2")["report"]
    assert report["count"] == report["classified"] == 20
    assert report["by_height"] == {"2": 4, "4": 16}


def test_exact_embedding(capsys):
    report = run_json(capsys, "embed", "exact", "--source", "laakso:1", "--target", "diamond:2",
                      "--verify")["report"]
    assert report["status"] == "optimal"
    assert report["value"] == {"num": 1, "den": 1}
    assert report["certificate"]["improving_leaves"] == 0


def test_infeasible_embedding(capsys):
    report = run_json(capsys, "embed", "exact", "--source", "laakso:1", "--target", "diamond:1")["report"]
    assert report["status"] == "infeasible_injective"
    assert report["value"] == "INFINITE"


def test_reruns_are_byte_identical(capsys):
    argv = ("embed", "heuristic", "--source", "laakso:1", "--target", "diamond:2",
            "--seed", "3", "--iterations", "100", "--restarts", "2")
    first = run_cli(capsys, *argv)
    second = run_cli(capsys, *argv)
    assert first[0] == 0
    assert first[1] == second[1]


def test_growth_csv(capsys):
    status, out, _ = run_cli(capsys, "embed", "growth", "--n-max", "1", "--targets", "2",
                             "--iterations", "100", "--format", "csv")
    assert status == 0
    header, *table = out.splitlines()
    assert header.startswith("# config: ")
    config = json.loads(header[len("# config: "):])
    assert (config["command"], config["subcommand"], config["format"]) == ("embed", "growth", "csv")
    assert table == [
        "n,target_level,lower_bound,upper_bound,upper_method",
        "1,2,1,1,exact",
    ]


def test_profile(capsys):
    document = run_json(capsys, "profile", "--graph", "laakso:2", "--radii", "0,1")
    assert document["report"]["max_degree"] == 3


def test_profile_csv(capsys):
    status, out, _ = run_cli(capsys, "profile", "--graph", "laakso:2", "--radii", "0,1", "--format", "csv")
    assert status == 0
    lines = out.splitlines()
    assert lines[0].startswith("# config: ")
    assert json.loads(lines[0][len("# config: "):])["graph"] == "laakso:2"
    assert len(lines) > 2


def test_construct_m(capsys):
    document = run_json(capsys, "embed", "construct-m", "--n", "1", "--normalization", "weighted")
    assert document["config"]["params"]["normalization"] == "weighted"
    assert document["report"]["distortion"] == {"num": 1, "den": 1}


def test_collapse(capsys):
    report = run_json(capsys, "cycles", "collapse", "--graph", "diamond:3", "--height", "2")["report"]
    assert (report["graph"]["vertex_count"], report["graph"]["edge_count"]) == (28, 32)
    assert report["violations"] == []


@pytest.mark.parametrize("argv", [
    ["frobnicate"],
    [],
    ["cycles"],
    ["diam", "--graph", "diamond:2", "--format", "csv"],
    ["diam", "--graph", "hexagon:2"],
    ["ball", "--graph", "diamond:2", "--center", "0", "--radius", "abc"],
])
def test_usage_errors(capsys, argv):
    status, out, err = run_cli(capsys, *argv)
    assert status == 64
    assert out == ""
    assert err.startswith("Error:")


@pytest.mark.parametrize("argv", [
    ["cycles", "isometric", "--graph", "laakso:2", "--h", "3"],
    ["dist", "--graph", "diamond:2", "--u", "0", "--v", "99"],
    ["cycles", "classify-all", "--graph", "laakso:1"],
])
def test_domain_errors(capsys, argv):
    status, _, err = run_cli(capsys, *argv)
    assert status == 1
    assert "Error:" in err


def test_limits_exit_with_two(capsys, monkeypatch):
    assert run_cli(capsys, "cycles", "enumerate", "--graph", "diamond:2", "--cap", "5")[0] == 2
    monkeypatch.setenv("MFL_MAX_EDGES", "100")
    status, _, err = run_cli(capsys, "gen", "--graph", "diamond:4")
    assert status == 2
    assert "cap: 100" in err


def test_config_from_args_collects_params():
    run = config_from_args(["embed", "exact", "--source", "laakso:1", "--target", "diamond:2",
                            "--no-symmetry", "--budget", "500"])
    assert (run.command, run.subcommand, run.budget) == ("embed", "exact", 500)
    assert run.params == {"symmetry": "false"}
    with pytest.raises(UsageError):
        config_from_args(["gen", "--graph", "diamond:2", "--family", "diamond", "--level", "2"])
