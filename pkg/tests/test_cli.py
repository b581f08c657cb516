import json

import pytest

from nsdweights.cli import main
from nsdweights.generators import cycle, hexagon_pair, path
from nsdweights.graph import parse_edge_list, serialize_edge_list


@pytest.fixture
def write(tmp_path):
    def _write(name, text):
        p = tmp_path / name
        p.write_text(text)
        return str(p)

    return _write


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_classify_c6(capsys, write):
    code, out, _ = run(capsys, "classify", write("c6", serialize_edge_list(cycle(6))))
    assert code == 1
    assert "has_property: false" in out and "method: recognizer" in out
    assert "c 6 parent=none paste=0" in out


def test_classify_p5_json(capsys, write):
    code, out, _ = run(capsys, "classify", "--json", write("p5", serialize_edge_list(path(5))))
    rec = json.loads(out)
    assert code == 0 and rec["has_property"] is True and rec["witness"].startswith("pair 0 1")


def test_classify_hexagon_pair(capsys, write):
    f = write("hp", serialize_edge_list(hexagon_pair()))
    assert run(capsys, "classify", f)[0] == 1
    assert run(capsys, "classify", "--pair", "1,2", f)[0] == 0


def test_classify_stdin(capsys, monkeypatch):
    import io

    monkeypatch.setattr("sys.stdin", io.StringIO(serialize_edge_list(path(6))))
    code, out, _ = run(capsys, "classify")
    assert code == 1 and "tree-dp" in out


def test_unknown_exit(capsys, write):
    # bridged non-tree with both sides odd, oracle budget too small
    g = hexagon_pair()
    code, out, _ = run(capsys, "classify", "--budget", "4", write("hp", serialize_edge_list(g)))
    assert code == 2 and "unknown" in out


def test_input_errors(capsys, write):
    assert run(capsys, "classify", write("bad", "p 2 1\n0 0\n"))[0] == 3
    assert run(capsys, "classify", "--pair", "1", write("k2", "p 2 1\n0 1\n"))[0] == 3
    assert run(capsys, "classify", "/nonexistent/file")[0] == 3
    assert run(capsys, "frobnicate")[0] == 3


def test_verify(capsys, write):
    c4 = write("c4", serialize_edge_list(cycle(4)))
    good = write("w", "pair 0 1\n0 1 0 1\n1 2 0 1\n2 3 0 0\n0 3 0 0\n")
    code, out, _ = run(capsys, "verify", c4, good)
    assert code == 0 and "proper: true" in out
    k2 = write("k2", "p 2 1\n0 1\n")
    code, out, _ = run(capsys, "verify", k2, write("wk", "pair 0 1\n0 1 0 1\n"))
    assert code == 1 and "0 1 1" in out
    assert run(capsys, "verify", k2, write("wk2", "pair 0 1\n0 1 0 0\n"), "--inc", "0=1")[0] == 0
    assert run(capsys, "verify", c4, write("short", "pair 0 1\n0 1 0 1\n"))[0] == 3
    assert run(capsys, "verify", "--pair", "1,2", c4, good)[0] == 3


def test_pattern_then_verify(capsys, write):
    c6 = write("c6", serialize_edge_list(cycle(6)))
    code, out, _ = run(capsys, "factor", c6, "--pattern", "0")
    assert code == 0
    w = write("l1", out)
    code, out, _ = run(capsys, "verify", c6, w)
    assert code == 1
    assert "degrees: 1,1,0,1,2,1" in out
    assert "0 1 1" in out and "0 5 1" in out


def test_factor_modes(capsys, write):
    p3 = write("p3", serialize_edge_list(path(3)))
    code, out, _ = run(capsys, "factor", p3, "--target", "1,0,1")
    assert code == 0 and "0 1 0" in out and "1 2 0" in out
    assert run(capsys, "factor", p3, "--target", "1,0,0")[0] == 3
    p5 = write("p5", serialize_edge_list(path(5)))
    code, out, _ = run(capsys, "factor", p5)
    w = write("w5", out)
    assert run(capsys, "verify", p5, w)[0] == 0
    assert run(capsys, "factor", write("c6", serialize_edge_list(cycle(6))))[0] == 3
    assert run(capsys, "factor", p5, "--local-max", "0")[0] == 3


def test_generate(capsys, write):
    code, out, _ = run(capsys, "generate", "--family", "cycle", "--n", "10")
    assert code == 0 and parse_edge_list(out) == cycle(10)
    code, out, _ = run(capsys, "generate", "--family", "hexagon_pair")
    assert parse_edge_list(out) == hexagon_pair()
    code, out, _ = run(capsys, "generate", "--spec", "(minus-from-bad (bad-from-gvs1 1 (gvs1b 1 () ((k2)))))",
                       "--expect", "minus")
    assert code == 0 and parse_edge_list(out).num_pairs() == 3
    code, out, _ = run(capsys, "generate", "--spec", "(k2)", "--expect", "minus")
    assert code == 3 and out == ""
    assert run(capsys, "generate", "--family", "cycle", "--n", "6", "--expect", "bad")[0] == 0
    assert run(capsys, "generate", "--family", "cycle", "--n", "8", "--expect", "bad")[0] == 3
    assert run(capsys, "generate", "--spec", "(gvs1b 1 () ((k2)))", "--expect", "1,2")[0] == 0
    code, out, _ = run(capsys, "generate", "--family", "path", "--n", "3", "--dot")
    assert out.startswith("graph G {")
    assert run(capsys, "generate", "--family", "cycle", "--n", "2")[0] == 3
    assert run(capsys, "generate")[0] == 3


def test_generate_recipe(capsys, write):
    assert run(capsys, "generate", "--recipe", write("bad", "c 6 parent=none paste=0\nc 6 parent=0 paste=2\ng 0 2\n"))[0] == 3
    f = write("r", "c 6 parent=none paste=0\ng 0 2\nc 6 parent=0 paste=2\n")
    code, out, _ = run(capsys, "generate", "--recipe", f)
    g = parse_edge_list(out)
    assert (g.n, g.num_copies()) == (10, 12)
    code, out, _ = run(capsys, "recognize", write("g", out))
    assert code == 0 and "odd_multicactus: true" in out
    code, out, _ = run(capsys, "generate", "--family", "omc", "--seed", "4")
    assert run(capsys, "recognize", write("o", out))[0] == 0


def test_recognize_negative(capsys, write):
    code, out, _ = run(capsys, "recognize", "--json", write("c8", serialize_edge_list(cycle(8))))
    assert code == 1 and json.loads(out)["odd_multicactus"] is False


@pytest.mark.parametrize(
    "argv",
    [
        ("--family", "trees", "--max-n", "10"),
        ("--family", "bridgeless", "--count", "200", "--max-copies", "18"),
        ("--family", "omc", "--count", "100"),
        ("--family", "bridgeless", "--count", "40", "--pair", "1,2", "--workers", "2"),
    ],
)
def test_crosscheck(capsys, argv):
    code, out, _ = run(capsys, "crosscheck", "--json", *argv)
    rec = json.loads(out)
    assert code == 0 and rec["disagreements"] == 0 and rec["checked"] > 0


def test_console_script_entry():
    import subprocess
    import sys

    res = subprocess.run([sys.executable, "-m", "nsdweights.cli", "generate", "--family", "path", "--n", "2"],
                         capture_output=True, text=True)
    assert res.returncode == 0 and res.stdout == "p 2 1\n0 1\n"
