import json

import pytest

from graphdiv.cli import main
from graphdiv.formats import encode_dimacs, encode_graph6
from graphdiv.generators import complete_graph, cycle_graph, paley_graph, petersen_graph

C5 = encode_graph6(cycle_graph(5))
K2 = encode_graph6(complete_graph(2))
K4 = encode_graph6(complete_graph(4))
C6 = encode_graph6(cycle_graph(6))
PET = encode_graph6(petersen_graph())


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_info_c5(capsys):
    code, out, _ = run(capsys, "info", "--g6", C5, "--json")
    r = json.loads(out)
    assert code == 0
    assert (r["omega"], r["alpha"], r["chi"], r["perfect"], r["even_hole_free"]) == (2, 2, 3, False, True)


def test_info_k4_and_c6(capsys):
    r = json.loads(run(capsys, "info", "--g6", K4, "--json")[1])
    assert (r["omega"], r["chi"], r["perfect"], r["even_hole_free"]) == (4, 4, True, True)
    r = json.loads(run(capsys, "info", "--g6", C6, "--json")[1])
    assert not r["even_hole_free"] and len(r["even_hole"]) == 6


def test_info_table(capsys):
    code, out, _ = run(capsys, "info", "--g6", C5)
    assert code == 0 and "omega" in out and "chi" in out


def test_divide_c5_writes_verified_certificate(capsys, tmp_path):
    path = tmp_path / "c5.json"
    code, _, _ = run(capsys, "divide", "--g6", C5, "--k", "2", "--out", str(path))
    cert = json.loads(path.read_text())
    assert code == 0 and cert["k"] == 2 and len(set(cert["parts"])) == 3


def test_divide_k2(capsys):
    code, out, _ = run(capsys, "divide", "--g6", K2, "--k", "2")
    cert = json.loads(out)
    assert code == 0 and cert["parts"] == [0, 1] and cert["per_part_clique"] == [1, 1, 0]


def test_divide_petersen_reports_stuck_residual(capsys):
    code, out, err = run(capsys, "divide", "--g6", PET, "--k", "2")
    assert code == 1 and out == ""
    assert PET in err


def test_divide_is_byte_identical(capsys, tmp_path):
    g = encode_graph6(paley_graph(13))
    a, b = tmp_path / "a", tmp_path / "b"
    for p in (a, b):
        run(capsys, "divide", "--g6", g, "--k", "6", "--out", str(p))
    assert a.read_bytes() == b.read_bytes() and a.read_bytes()


def test_color(capsys):
    r = json.loads(run(capsys, "color", "--g6", C5, "--json")[1])
    assert (r["colors_used"], r["bound"], r["status"]) == (3, 3, "pass")
    r = json.loads(run(capsys, "color", "--g6", K2, "--json")[1])
    assert (r["colors_used"], r["bound"], r["status"]) == (2, 3, "pass")


def test_color_batch(capsys, tmp_path):
    src = tmp_path / "corpus.g6"
    src.write_text("\n".join([C5, K2, K4]) + "\n")
    code, out, _ = run(capsys, "color", str(src), "--batch")
    lines = [json.loads(x) for x in out.splitlines()]
    assert code == 0 and [x["status"] for x in lines] == ["pass"] * 3
    src.write_text("\n".join([C5, PET]) + "\n")
    code, out, _ = run(capsys, "color", str(src), "--batch")
    assert code == 1 and [json.loads(x)["status"] for x in out.splitlines()] == ["pass", "fail"]


def test_evenhole_require(capsys):
    assert run(capsys, "evenhole", "--g6", C5, "--require-ehf")[0] == 0
    code, out, _ = run(capsys, "evenhole", "--g6", C6, "--require-ehf", "--json")
    assert code == 1 and json.loads(out)["even_hole"] == [0, 1, 2, 3, 4, 5]


def test_simplicial(capsys):
    code, out, _ = run(capsys, "simplicial", "--g6", C5, "--json")
    r = json.loads(out)
    assert code == 0 and r["vertex"] == 0 and r["cover"] == [[1], [4]] and len(r["order"]) == 5
    code, out, _ = run(capsys, "simplicial", "--g6", PET, "--json")
    assert code == 1 and json.loads(out)["stuck_residual"] == list(range(10))
    r = json.loads(run(capsys, "simplicial", "--g6", K4, "--k", "1", "--json")[1])
    assert "note" in r


def test_perfectdiv_and_kdiv(capsys):
    r = json.loads(run(capsys, "perfectdiv", "--g6", C5, "--json")[1])
    assert r["divisible"] and sorted(r["A"] + r["B"]) == [0, 1, 2, 3, 4]
    code, out, _ = run(capsys, "kdiv", "--g6", C5, "--k", "2", "--json")
    assert code == 1 and json.loads(out)["failing"] == [0, 1, 2, 3, 4]
    assert run(capsys, "kdiv", "--g6", C5, "--k", "3")[0] == 0


def test_ramsey_verify(capsys, tmp_path):
    r = json.loads(run(capsys, "ramsey-verify", "--g6", encode_graph6(paley_graph(17)), "--t", "4")[1])
    assert r["verdict"] == "INCONCLUSIVE" and r["chi_lb"] == 6 and r["hoang_bound"] == 9
    r = json.loads(run(capsys, "ramsey-verify", "--g6", K4, "--t", "4")[1])
    assert r["verdict"] == "INVALID"
    src = tmp_path / "batch.g6"
    src.write_text(f"{K4}\n{C5}\n")
    code, out, _ = run(capsys, "ramsey-verify", str(src), "--t", "3", "--batch")
    assert code == 0 and [json.loads(x)["verdict"] for x in out.splitlines()] == ["INVALID", "INCONCLUSIVE"]


def test_ramsey_search(capsys):
    code, out, _ = run(capsys, "ramsey-search", "--n", "17", "--alpha", "3", "--seed", "3")
    r = json.loads(out)
    assert code == 0 and r["violations"] == 0 and r["report"]["verdict"] == "INCONCLUSIVE"


def test_tscan(capsys):
    code, out, _ = run(capsys, "tscan", "--c", "1", "--t-max", "10", "--json")
    rows = [json.loads(x) for x in out.splitlines()]
    assert code == 0 and rows[-1]["t"] == 10 and rows[-1]["rhs"] == 243 and not rows[-1]["satisfied"]
    assert rows[0]["log"] == "natural"


def test_formats(capsys, tmp_path):
    src = tmp_path / "c5.col"
    src.write_text(encode_dimacs(cycle_graph(5)))
    r = json.loads(run(capsys, "info", str(src), "--format", "dimacs", "--json")[1])
    assert r["graph6"] == C5
    src = tmp_path / "c5.txt"
    src.write_text("5\n0 1\n1 2\n2 3\n3 4\n4 0\n")
    r = json.loads(run(capsys, "info", str(src), "--format", "edges", "--json")[1])
    assert r["graph6"] == C5


@pytest.mark.parametrize("argv", [
    ["info", "--g6", "D?"],
    ["info"],
    ["info", "missing-file.g6"],
    ["info", "x.g6", "--g6", C5],
    ["divide", "--g6", "D??"],
    ["info", "--g6", C5, "--cap-n", "0"],
    ["ramsey-verify", "--g6", C5],
])
def test_input_errors_exit_2(capsys, argv):
    assert run(capsys, *argv)[0] == 2


def test_multiple_graphs_need_batch(capsys, tmp_path):
    src = tmp_path / "two.g6"
    src.write_text(f"{C5}\n{K4}\n")
    assert run(capsys, "info", str(src))[0] == 2


def test_cap_exceeded_exit_3(capsys, monkeypatch):
    assert run(capsys, "perfectdiv", "--g6", C5, "--cap-n", "4")[0] == 3
    monkeypatch.setenv("GRAPHDIV_CAP_PERFECT_DIV", "4")
    assert run(capsys, "perfectdiv", "--g6", C5)[0] == 3
    # flags win over the environment
    assert run(capsys, "perfectdiv", "--g6", C5, "--cap-n", "5")[0] == 0


def test_theorem_violation_exit_4(capsys, monkeypatch):
    from graphdiv import cli
    from graphdiv.errors import TheoremViolation

    def boom(*a, **k):
        raise TheoremViolation("forced")
    monkeypatch.setattr(cli, "divide", boom)
    assert run(capsys, "divide", "--g6", C5)[0] == 4
