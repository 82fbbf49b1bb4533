import json
import subprocess
import sys

R4 = "tests/fixtures/r4.lcr"
R8 = "tests/fixtures/r8.lcr"
BAD = "tests/fixtures/bad_local.lcr"


def run(*args):
    return subprocess.run([sys.executable, "-m", "lcrng.cli", *args],
                          capture_output=True, text=True)


def test_verify_good_file_exits_zero():
    out = run("verify", R4)
    assert out.returncode == 0
    assert "ok" in out.stdout


def test_verify_bad_local_product_exits_one():
    out = run("verify", BAD)
    assert out.returncode == 1
    assert "halo-ring" in out.stderr
    assert "local identity" in out.stderr


def test_parse_error_exits_two(tmp_path):
    src = tmp_path / "broken.lcr"
    src.write_text("nonsense statement\n")
    out = run("verify", str(src))
    assert out.returncode == 2
    assert "parse error" in out.stderr


def test_missing_file_exits_two():
    out = run("verify", "no_such_file.lcr")
    assert out.returncode == 2


def test_spectrum_json(capsys=None):
    out = run("spectrum", R8, "R", "--json")
    assert out.returncode == 0
    data = json.loads(out.stdout)
    assert data["even"] == [["(0,0)", "(0,1)", "(2,0)", "(2,1)"]]
    assert data["odd"] == [["(0,0)", "(2,0)"]]
    assert data["left_identity"] == "(1,0)"
    assert "tool_version" in data


def test_nilrad_and_radical():
    out = run("nilrad", R8, "R", "--json")
    assert json.loads(out.stdout)["nilradical"] == ["(0,0)", "(2,0)"]
    out = run("radical", R8, "R", "--ideal", "two", "--json")
    assert json.loads(out.stdout)["radical"] == ["(0,0)", "(2,0)"]


def test_topology_dot_output():
    out = run("topology", R8, "R", "--dot")
    assert out.returncode == 0
    assert out.stdout.startswith("digraph")
    assert "shape=box" in out.stdout and "shape=ellipse" in out.stdout
    assert "->" in out.stdout


def test_check_replays_propositions():
    out = run("check", R4, "R")
    assert out.returncode == 0
    data = json.loads(out.stdout)
    assert data["passed"] is True
    assert data["endomorphisms"] == 2
    names = {p["name"] for p in data["propositions"]}
    assert "prime-criteria-equivalence" in names
    assert "hom-pullbacks" in names


def test_check_output_is_byte_stable():
    first = run("check", R8, "R")
    second = run("check", R8, "R")
    assert first.stdout == second.stdout
    assert first.returncode == 0


def test_pullback_command(tmp_path):
    src = tmp_path / "hom.lcr"
    with open(R4) as fh:
        base = fh.read()
    src.write_text(base + "lcrhom e : R -> R = table [0, 1, 3, 2]\n")
    out = run("pullback", str(src), "e", "--json")
    assert out.returncode == 0
    assert json.loads(out.stdout)["map"]


def test_search_command():
    out = run("search", "4", "--json")
    assert out.returncode == 0
    data = json.loads(out.stdout)
    assert len(data["structures"]) == 5
