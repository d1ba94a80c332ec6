import json
import subprocess
import sys

import pytest

from ricbound.cli import main
from ricbound.families import gen_complete, gen_cycle
from ricbound.graph import read_edge_list, write_edge_list


@pytest.fixture
def run(capsys):
    def _run(*argv):
        code = main(list(argv))
        out, err = capsys.readouterr()
        return code, out, err

    return _run


def test_generate_to_file(run, tmp_path):
    out = tmp_path / "j.el"
    code, _, _ = run("generate", "johnson", "--n", "5", "--k", "2", "-o", str(out))
    assert code == 0
    g = read_edge_list(out.read_text())
    assert g.n == 10 and g.m == 30


def test_generate_stdout(run):
    code, out, _ = run("generate", "cycle", "--n", "4")
    assert code == 0 and out == "4 4\n0 1\n0 3\n1 2\n2 3\n"


def test_analyze_family_json(run):
    code, out, _ = run("analyze", "--family", "gosset", "--json")
    assert code == 0
    d = json.loads(out)
    assert d["slack"] == "0/1" and d["equality"] and d["reflective"]


def test_analyze_cycle_text(run):
    code, out, _ = run("analyze", "--family", "cycle", "--n", "5")
    assert code == 0 and "slack        = 4/5" in out


def test_analyze_options(run, tmp_path):
    f = tmp_path / "p.el"
    f.write_text("3 2\n0 1\n1 2\n")
    code, out, _ = run("analyze", str(f), "--json", "--float", "--no-reflective")
    d = json.loads(out)
    assert d["reflective"] is None and d["approx"]["slack"] == pytest.approx(4 / 9)
    code, out, _ = run("analyze", str(f), "--csv")
    assert out.startswith("u,v,g_num,g_den,ric_num,ric_den\n")


def test_product_then_analyze(run, tmp_path):
    a, b, ab = tmp_path / "a.el", tmp_path / "b.el", tmp_path / "ab.el"
    a.write_text(write_edge_list(gen_complete(3)))
    b.write_text(write_edge_list(gen_complete(2)))
    assert run("product", str(a), str(b), "-o", str(ab))[0] == 0
    code, out, _ = run("analyze", str(ab), "--json")
    assert json.loads(out)["equality"] is True
    # a strict factor breaks equality
    b.write_text(write_edge_list(gen_cycle(5)))
    run("product", str(a), str(b), "-o", str(ab))
    code, out, _ = run("analyze", str(ab), "--json")
    assert json.loads(out)["equality"] is False


def test_per_edge_commands(run, tmp_path):
    f = tmp_path / "c5.el"
    f.write_text(write_edge_list(gen_cycle(5)))
    code, out, _ = run("curvature", str(f))
    assert code == 0 and out.splitlines()[1] == "0,1,1,1"
    code, out, _ = run("betweenness", str(f), "--json")
    assert json.loads(out)[0] == {"u": 0, "v": 1, "value": "6/25"}
    code, out, _ = run("reflective", str(f))
    d = json.loads(out)
    assert d["reflective"] is False and d["edges"][0]["status"] == "failed"
    code, out, _ = run("sharpness", str(f))
    d = json.loads(out)
    assert d["sharp"] is False and set(d["violation"]) == {"z", "x", "y", "laplacian_gap", "ric"}


def test_reflective_permutation_output(run, tmp_path):
    f = tmp_path / "c4.el"
    f.write_text(write_edge_list(gen_cycle(4)))
    d = json.loads(run("reflective", str(f))[1])
    assert d["reflective"] and d["edges"][0] == {"u": 0, "v": 1, "status": "ok", "phi": [1, 0, 3, 2]}


def test_fuzz_command(run):
    code, out, _ = run("fuzz", "--count", "5", "--seed", "1", "--n-max", "8")
    d = json.loads(out)
    assert code == 0 and d["analyzed"] == 5 and d["violations"] == []
    code, out, _ = run("fuzz", "--count", "0")
    assert code == 0 and json.loads(out)["analyzed"] == 0


@pytest.mark.parametrize(
    "argv",
    [
        ["analyze"],
        ["analyze", "/nonexistent/file.el"],
        ["analyze", "--family", "cycle"],
        ["generate", "cocktail-party", "--n", "1"],
    ],
)
def test_usage_errors_exit_2(run, argv):
    code, _, err = run(*argv)
    assert code == 2 and "error" in err


def test_bad_input_files_exit_2(run, tmp_path):
    f = tmp_path / "bad.el"
    f.write_text("2 1\n0 2\n")
    code, _, err = run("analyze", str(f))
    assert code == 2 and "line 2" in err
    f.write_text("4 2\n0 1\n2 3\n")
    code, _, err = run("curvature", str(f))
    assert code == 2 and "disconnected" in err


def test_argparse_usage_exit_2(run):
    with pytest.raises(SystemExit) as info:
        main(["generate", "moebius"])
    assert info.value.code == 2


def test_module_entry_point(tmp_path):
    proc = subprocess.run(
        [sys.executable, "-m", "ricbound", "analyze", "--family", "hypercube", "--n", "2", "--json"],
        capture_output=True,
        text=True,
        check=True,
    )
    assert json.loads(proc.stdout)["slack"] == "0/1"
