import json

import pytest

from cographcolor.cli import main
from cographcolor.formats import parse_coloring, parse_edge_list, parse_triangulation, write_edge_list
from cographcolor.gen import complete, complete_bipartite, cycle, path
from cographcolor.graph import Graph, verify_star
from cographcolor.oracle import oracle_is_chordal


@pytest.fixture
def files(tmp_path):
    def put(name, text):
        p = tmp_path / name
        p.write_text(text)
        return str(p)
    return put


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_recognize(capsys, files):
    code, out, _ = run(capsys, "recognize", files("c4", write_edge_list(cycle(4))))
    assert code == 0 and json.loads(out)["kind"] == "join"
    code, out, _ = run(capsys, "recognize", files("p4", write_edge_list(path(4))))
    assert (code, out) == (1, "P4: 0 1 2 3\n")
    code, _, err = run(capsys, "recognize", files("junk", "garbage\n"))
    assert code == 2 and err.startswith("error:")


def test_recognize_stdin_and_dot(capsys, files, monkeypatch, tmp_path):
    import io
    monkeypatch.setattr("sys.stdin", io.StringIO(write_edge_list(complete(3))))
    dot = tmp_path / "g.dot"
    code, _, _ = run(capsys, "recognize", "--dot", str(dot))
    assert code == 0 and dot.read_text().startswith("graph G {")


def test_missing_file(capsys, tmp_path):
    code, _, err = run(capsys, "recognize", str(tmp_path / "nope"))
    assert code == 2 and "cannot read" in err


def test_color(capsys, files):
    code, out, _ = run(capsys, "color", files("c4", write_edge_list(cycle(4))))
    head, body = out.split("\n", 1)
    assert code == 0 and head == "chi_a = chi_s = 3"
    phi = parse_coloring(body)
    assert verify_star(cycle(4), phi) is None
    code, out, _ = run(capsys, "color", files("k5", write_edge_list(complete(5))))
    assert out.startswith("chi_a = chi_s = 5\n")
    code, out, _ = run(capsys, "color", files("p4", write_edge_list(path(4))))
    assert code == 1 and out.startswith("P4:")


def test_color_from_cotree_skips_recognition(capsys, files, monkeypatch):
    import cographcolor.cli as cli

    def boom(g):
        raise AssertionError("recognition must not run")
    monkeypatch.setattr(cli, "recognize", boom)
    tree = '{"kind":"join","children":[{"kind":"leaf","vertex":0},{"kind":"leaf","vertex":1}]}'
    code, out, _ = run(capsys, "color", "--from-cotree", files("t.json", tree))
    assert code == 0 and out.startswith("chi_a = chi_s = 2")


def test_verify(capsys, files):
    c4 = files("c4", write_edge_list(cycle(4)))
    code, out, _ = run(capsys, "verify", c4, files("ph", "0 1\n1 2\n2 1\n3 2\n"), "--mode", "acyclic")
    assert (code, out) == (1, "VIOLATION BICHROMATIC_CYCLE: 0 1 2 3\n")
    code, out, _ = run(capsys, "verify", c4, files("ok", "0 1\n1 2\n2 1\n3 3\n"), "--mode", "star")
    assert (code, out) == (0, "OK\n")
    k2 = files("k2", "2 1\n0 1\n")
    code, out, _ = run(capsys, "verify", k2, files("mono", "0 1\n1 1\n"), "--mode", "proper")
    assert code == 1 and out.startswith("VIOLATION EDGE_MONOCHROME")
    code, _, _ = run(capsys, "verify", c4, files("short", "0 1\n1 2\n"))
    assert code == 2


def test_triangulate(capsys, files):
    c4 = files("c4", write_edge_list(cycle(4)))
    code, out, _ = run(capsys, "triangulate", c4, files("ph", "0 1\n1 2\n2 1\n3 3\n"))
    assert code == 0
    lines = out.splitlines()
    assert lines[:2] == ["added_edges = 1", "1 3"]
    base, result = parse_triangulation("\n".join(lines[2:]))
    assert base == cycle(4) and oracle_is_chordal(result)

    code, out, _ = run(capsys, "triangulate", c4, files("bad", "0 1\n1 2\n2 1\n3 2\n"))
    assert code == 1 and out.splitlines() == ["NOT PHI-TRIANGULATABLE", "BICHROMATIC_CYCLE: 0 1 2 3"]

    k3 = files("k3", write_edge_list(complete(3)))
    code, out, _ = run(capsys, "triangulate", k3, files("k3c", "0 1\n1 2\n2 3\n"))
    assert code == 0 and out.startswith("added_edges = 0\n")

    code, _, _ = run(capsys, "triangulate", c4, files("improper", "0 1\n1 1\n2 2\n3 2\n"))
    assert code == 2
    code, out, _ = run(capsys, "triangulate", files("p4", write_edge_list(path(4))),
                       files("p4c", "0 1\n1 2\n2 3\n3 4\n"))
    assert code == 1 and out.startswith("P4:")


def test_width(capsys, files):
    code, out, _ = run(capsys, "width", files("k33", write_edge_list(complete_bipartite(3, 3))))
    assert code == 0
    assert out == "chi_a = 4\ntreewidth = 3\npathwidth = 3\nomega_of_triangulation = 4\n"
    code, out, _ = run(capsys, "width", files("k1", "1 0\n"))
    assert out == "chi_a = 1\ntreewidth = 0\npathwidth = 0\nomega_of_triangulation = 1\n"
    code, out, _ = run(capsys, "width", files("c4", write_edge_list(cycle(4))))
    assert "treewidth = 2\n" in out
    code, _, _ = run(capsys, "width", files("p4", write_edge_list(path(4))))
    assert code == 1


def test_gen_is_deterministic(capsys):
    _, a, _ = run(capsys, "gen", "--seed", "7", "--n", "30")
    _, b, _ = run(capsys, "gen", "--seed", "7", "--n", "30")
    assert a == b
    code, out, _ = run(capsys, "gen", "--n", "6", "--p", "1.0", "--format", "edges")
    assert code == 0 and parse_edge_list(out) == complete(6)
    assert run(capsys, "gen", "--n", "0")[0] == 2


def test_cotree_conversions(capsys, files):
    tree = files("t.json", '{"kind":"union","children":[{"kind":"leaf","vertex":0},'
                           '{"kind":"union","children":[{"kind":"leaf","vertex":1},'
                           '{"kind":"leaf","vertex":2}]}]}')
    code, out, _ = run(capsys, "cotree", tree)
    assert code == 0 and len(json.loads(out)["children"]) == 3
    code, out, _ = run(capsys, "cotree", tree, "--to", "edges")
    assert parse_edge_list(out) == Graph(3)
    code, out, _ = run(capsys, "cotree", files("c4", write_edge_list(cycle(4))), "--from-graph", "--skew")
    assert out == "skew = false\n"
    code, _, _ = run(capsys, "cotree", files("bad.json", "{}"))
    assert code == 2


def test_oracle(capsys, files):
    c4 = files("c4", write_edge_list(cycle(4)))
    assert run(capsys, "oracle", "chi_a", c4)[1] == "chi_a = 3\n"
    assert run(capsys, "oracle", "chi_s", files("p4", write_edge_list(path(4))))[1] == "chi_s = 3\n"
    assert run(capsys, "oracle", "treewidth", c4)[1] == "treewidth = 2\n"
    assert run(capsys, "oracle", "pathwidth", c4)[1] == "pathwidth = 2\n"
    assert run(capsys, "oracle", "chordal", c4)[:2] == (1, "chordal = false\n")
    code, out, _ = run(capsys, "oracle", "phi-triangulatable", c4, files("ph", "0 1\n1 2\n2 1\n3 3\n"))
    assert code == 0 and "1 3 +" in out
    code, out, _ = run(capsys, "oracle", "phi-triangulatable", c4, files("bad", "0 1\n1 2\n2 1\n3 2\n"))
    assert code == 1
    code, _, _ = run(capsys, "oracle", "treewidth", files("big", write_edge_list(path(12))))
    assert code == 2


def test_oracle_minimal_small(capsys):
    code, out, _ = run(capsys, "oracle", "minimal", "--max-n", "5")
    assert code == 0
    assert out.splitlines() == [f"n = {n}: 0 examples" for n in range(1, 6)]


def test_bench(capsys, tmp_path):
    png = tmp_path / "bench.png"
    code, out, err = run(capsys, "bench", "--sizes", "2^8..2^10", "--repeats", "1", "--plot", str(png))
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "n,mean_ns,ns_per_leaf"
    assert [int(x.split(",")[0]) for x in lines[1:4]] == [256, 512, 1024]
    assert lines[4].startswith("# ns_per_leaf max/min")
    assert png.stat().st_size > 0 and "wrote" in err


def test_bad_arguments(capsys):
    assert run(capsys, "nope")[0] == 2
    assert run(capsys, "bench", "--sizes", "abc")[0] == 2
    assert run(capsys, "--help")[0] == 0
