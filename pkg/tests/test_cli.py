import io
import json
import subprocess
import sys
from importlib import resources

import jsonschema
import pytest

from brookscolor.cli import main
from brookscolor.families import (catlin, complete_graph, cycle_graph, petersen_graph,
                                  prism_graph)
from brookscolor.formats import to_graph6


def schema(name):
    text = resources.files("brookscolor").joinpath("schemas", name + ".json").read_text()
    return json.loads(text)


def run(monkeypatch, capsys, argv, stdin=b""):
    monkeypatch.setattr(sys, "stdin", io.TextIOWrapper(io.BytesIO(stdin)))
    code = main(argv + ["--quiet"] if argv and argv[0] not in ("gen",) else argv)
    out = capsys.readouterr().out
    return code, out


def g6(g):
    return to_graph6(g) + b"\n"


def test_color_exceptional(monkeypatch, capsys):
    code, out = run(monkeypatch, capsys, ["color", "--strategy", "kempe", "--verify"],
                    g6(complete_graph(4)))
    doc = json.loads(out)
    jsonschema.validate(doc, schema("strategy_report"))
    assert code == 1 and doc["outcome"] == "exceptional" and doc["exception"] == "complete_graph"


@pytest.mark.parametrize("strategy", ["lovasz", "kempe", "cubic", "ktree", "partition",
                                      "independency", "kernel"])
def test_color_strategies(monkeypatch, capsys, strategy):
    code, out = run(monkeypatch, capsys, ["color", "--strategy", strategy, "--verify"],
                    g6(petersen_graph()))
    doc = json.loads(out)
    jsonschema.validate(doc, schema("strategy_report"))
    assert code == 0 and doc["palette_size"] == 3 and doc["verify"]["ok"]


def test_oracle_catlin(monkeypatch, capsys):
    code, out = run(monkeypatch, capsys, ["oracle"], g6(catlin(3)))
    doc = json.loads(out)
    jsonschema.validate(doc, schema("oracle_report"))
    assert code == 0 and (doc["chi"], doc["omega"], doc["max_degree"]) == (8, 6, 8)


def test_oracle_with_choice_and_paint(monkeypatch, capsys):
    code, out = run(monkeypatch, capsys, ["oracle", "--choice", "--paint"], g6(cycle_graph(5)))
    doc = json.loads(out)
    jsonschema.validate(doc, schema("oracle_report"))
    assert (doc["chi_list"], doc["chi_paint"]) == (3, 3)


def test_classify(monkeypatch, capsys):
    for g, tag in ((cycle_graph(5), "odd_cycle"), (petersen_graph(), "other")):
        code, out = run(monkeypatch, capsys, ["classify", "--verify"], g6(g))
        doc = json.loads(out)
        jsonschema.validate(doc, schema("classify"))
        assert code == 0 and doc["structure"]["tag"] == tag


def test_lists(monkeypatch, capsys):
    bowtie = b"0 1\n1 2\n2 0\n0 3\n3 4\n4 0\n"
    code, out = run(monkeypatch, capsys, ["lists", "--verify"], bowtie)
    doc = json.loads(out)
    jsonschema.validate(doc, schema("lists"))
    assert code == 0 and doc["lists"]["0"] == [1, 2, 3, 4] and doc["verify"]["ok"]
    code, out = run(monkeypatch, capsys, ["lists"], g6(cycle_graph(4)))
    jsonschema.validate(json.loads(out), schema("error"))
    assert code == 1


def test_at_check(monkeypatch, capsys):
    code, out = run(monkeypatch, capsys, ["at-check", "--verify"], g6(cycle_graph(6)))
    doc = json.loads(out)
    jsonschema.validate(doc, schema("at_check"))
    assert code == 0 and (doc["ee"], doc["eo"], doc["certified"]) == (2, 0, True)


def test_paint(monkeypatch, capsys):
    code, out = run(monkeypatch, capsys, ["paint", "--tokens", "2", "--table"], g6(cycle_graph(4)))
    doc = json.loads(out)
    jsonschema.validate(doc, schema("paint"))
    assert doc["winner"] == "painter" and doc["strategy"]
    code, out = run(monkeypatch, capsys, ["paint", "--mode", "play", "--seed", "3", "--painter", "optimal"],
                    g6(cycle_graph(5)))
    doc = json.loads(out)
    jsonschema.validate(doc, schema("paint"))
    assert code == 0 and doc["winner"] == "painter" and doc["tokens"] == [3] * 5


def test_gen(monkeypatch, capsys):
    code, out = run(monkeypatch, capsys, ["gen", "--family", "catlin", "--params", "t=3"])
    assert code == 0 and out.strip() == to_graph6(catlin(3)).decode()
    code, out = run(monkeypatch, capsys, ["gen", "--family", "catlin"])
    assert code == 2 and json.loads(out)["error"] == "usage"


def test_check_conjectures(monkeypatch, capsys):
    code, out = run(monkeypatch, capsys, ["check-conjectures", "--max-n", "4"])
    lines = [json.loads(x) for x in out.splitlines()]
    for line in lines:
        jsonschema.validate(line, schema("bounds_line"))
    assert code == 0 and lines[-1]["summary"]["graphs"] == 1 + 2 + 4 + 11
    assert lines[-1]["summary"]["findings"] == 0


def test_bench(monkeypatch, capsys):
    code, out = run(monkeypatch, capsys, ["bench", "--strategies", "all", "--max-n", "5"])
    doc = json.loads(out)
    jsonschema.validate(doc, schema("bench"))
    assert code == 0 and doc["total_agreement"]


def test_usage_and_scale_errors(monkeypatch, capsys):
    code, out = run(monkeypatch, capsys, ["color", "--strategy", "bogus"])
    jsonschema.validate(json.loads(out), schema("error"))
    assert code == 2
    code, out = run(monkeypatch, capsys, ["color"], b"0 1\n1 x\n")
    assert code == 2 and json.loads(out)["error"] == "ParseError"
    code, out = run(monkeypatch, capsys, ["bench", "--max-n", "9"])
    assert code == 3 and json.loads(out)["error"] == "ScaleRefusal"
    code, out = run(monkeypatch, capsys, ["oracle"], g6(cycle_graph(60)))
    assert code == 3
    code, out = run(monkeypatch, capsys, ["frobnicate"])
    assert code == 2


def test_output_is_deterministic(monkeypatch, capsys):
    outs = set()
    for _ in range(2):
        _, out = run(monkeypatch, capsys, ["color", "--strategy", "partition"], g6(petersen_graph()))
        outs.add(out)
    assert len(outs) == 1


def test_console_script_and_jobs(tmp_path):
    path = tmp_path / "k4.g6"
    path.write_bytes(g6(complete_graph(4)))
    res = subprocess.run([sys.executable, "-m", "brookscolor.cli", "color", str(path)],
                         capture_output=True, text=True)
    assert res.returncode == 1 and json.loads(res.stdout)["exception"] == "complete_graph"
    one = subprocess.run([sys.executable, "-m", "brookscolor.cli", "check-conjectures",
                          "--max-n", "4", "--quiet"], capture_output=True, text=True).stdout
    two = subprocess.run([sys.executable, "-m", "brookscolor.cli", "check-conjectures",
                          "--max-n", "4", "--quiet", "--jobs", "2"],
                         capture_output=True, text=True).stdout
    assert one == two and one


@pytest.mark.parametrize("painter", ["kernel", "optimal"])
def test_paint_play_painters(monkeypatch, capsys, painter):
    code, out = run(monkeypatch, capsys, ["paint", "--mode", "play", "--painter", painter],
                    g6(prism_graph()))
    doc = json.loads(out)
    jsonschema.validate(doc, schema("paint"))
    assert code == 0 and doc["painter"] == painter and doc["winner"] == "painter"


def test_paint_play_kernel_short_tokens(monkeypatch, capsys):
    code, out = run(monkeypatch, capsys, ["paint", "--mode", "play", "--tokens", "2"],
                    g6(complete_graph(4)))
    assert code == 1 and json.loads(out)["error"] == "PreconditionError"
