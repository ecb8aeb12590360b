import io as stdio
import json
import subprocess
import sys

import pytest

from dycktri import dyck, dyck_flip, flipped_extended_boundary, io
from dycktri.core import Triangulation
from dycktri.cli import main


def run(argv, stdin="", monkeypatch=None, capsys=None):
    monkeypatch.setattr(sys, "stdin", stdio.StringIO(stdin))
    code = main(argv)
    out, err = capsys.readouterr()
    return code, out, err


@pytest.fixture
def cli(monkeypatch, capsys):
    return lambda argv, stdin="": run(argv, stdin, monkeypatch, capsys)


def test_build_then_verify(cli):
    code, out, _ = cli(["build", "dyck", "--n", "3"])
    assert code == 0 and io.loads(out) == dyck(3)
    code, _, err = cli(["verify"], out)
    assert code == 0 and "OK" in err


def test_verify_reports_crossing(cli):
    # the two triangulations on one support cross along the flipped circuit
    bad = Triangulation(3, 3, dyck(3).simplices | dyck_flip(3).simplices)
    code, out, err = cli(["verify"], io.dumps(bad))
    assert code == 1 and "FAILED" in err
    witness = json.loads(out)
    assert witness["kind"] == "crossing" and len(witness["circuit"]["plus"]) >= 2


def test_skeleton_extend_witness(cli):
    code, out, _ = cli(["skeleton", "flipped-extended-boundary", "--n", "3"])
    assert code == 0
    code, out, err = cli(["skeleton", "extend"], out)
    assert code == 1
    assert json.loads(out)["matching"] == [[1, 2], [2, 3], [3, 1]]
    assert "LA-failure" in err


def test_skeleton_round_trip(cli):
    _, T, _ = cli(["build", "staircase", "--m", "5", "--n", "2"])
    code, S, _ = cli(["skeleton", "restrict", "--k", "3"], T)
    assert code == 0
    assert cli(["skeleton", "check"], S)[0] == 0
    code, out, _ = cli(["skeleton", "extend"], S)
    assert code == 0 and io.loads(out) == io.loads(T)
    assert cli(["skeleton", "mother"])[0] == 0


def test_ensemble_commands(cli):
    _, T, _ = cli(["build", "extended-dyck", "--n", "3"])
    code, E, _ = cli(["ensemble", "extract"], T)
    assert code == 0
    assert cli(["ensemble", "check"], E)[0] == 0
    code, back, _ = cli(["ensemble", "reconstruct"], E)
    assert io.loads(back) == io.loads(T)
    _, E2, _ = cli(["ensemble", "extended-dyck", "--n", "3"])
    assert io.loads(E2) == io.loads(E)
    _, F, _ = cli(["skeleton", "flipped-extended-boundary", "--n", "2"])
    # a skeleton is not an ensemble document
    assert cli(["ensemble", "check"], F)[0] == 2


def test_heights_commands(cli, tmp_path):
    _, T, _ = cli(["build", "dyck", "--n", "3"])
    _, H, _ = cli(["heights", "dyck", "--n", "3"])
    path = tmp_path / "h.json"
    path.write_text(H)
    assert cli(["heights", "verify", "--heights", str(path)], T)[0] == 0
    _, F, _ = cli(["build", "dyck-flip", "--n", "3"])
    code, out, _ = cli(["heights", "verify", "--heights", str(path)], F)
    assert code == 1 and json.loads(out)["support"] == {"I": [1, 2, 3], "J": [1, 2, 3]}
    code, out, _ = cli(["heights", "find"], F)
    assert code == 0 and json.loads(out)["kind"] == "rational"
    assert cli(["heights", "extended", "--n", "2"])[0] == 0


def test_render_and_cayley(cli):
    _, T, _ = cli(["build", "dyck", "--n", "3"])
    code, svg, _ = cli(["render", "--format", "svg"], T)
    assert code == 0 and svg.startswith("<svg")
    code, txt, _ = cli(["render"], T)
    assert txt.count("\n\n") == 5
    assert cli(["render", "--format", "mixed-svg"], T)[1].startswith("<svg")
    code, cells, err = cli(["cayley", "--check"], T)
    assert code == 0 and len(json.loads(cells)["cells"]) == 6 and "tile" in err


def test_random_build_is_seeded(cli):
    a = cli(["build", "random", "--m", "4", "--n", "3", "--seed", "5"])[1]
    b = cli(["build", "random", "--m", "4", "--n", "3", "--seed", "5"])[1]
    assert a == b
    assert cli(["verify"], a)[0] == 0


@pytest.mark.parametrize("argv,stdin", [
    (["build", "dyck"], ""),
    (["build", "nope", "--n", "2"], ""),
    (["verify"], "{not json"),
    (["verify", "/no/such/file.json"], ""),
    (["render", "--format", "mixed-svg"], None),
    ([], ""),
])
def test_usage_errors(cli, argv, stdin):
    if stdin is None:
        stdin = io.dumps(dyck(4))
    code, _, err = cli(argv, stdin)
    assert code == 2 and err


def test_parse_error_mentions_location(cli):
    code, _, err = cli(["verify"], '{"m": 2,\n  "n": }')
    assert code == 2 and "line 2" in err


def test_shell_pipeline(tmp_path):
    build = subprocess.run([sys.executable, "-m", "dycktri", "build", "dyck", "--n", "3"],
                           capture_output=True, text=True, check=True)
    verify = subprocess.run([sys.executable, "-m", "dycktri", "verify"], input=build.stdout,
                            capture_output=True, text=True)
    assert verify.returncode == 0
    boundary = subprocess.run([sys.executable, "-m", "dycktri", "skeleton",
                               "flipped-extended-boundary", "--n", "3"],
                              capture_output=True, text=True, check=True)
    extend = subprocess.run([sys.executable, "-m", "dycktri", "skeleton", "extend"],
                            input=boundary.stdout, capture_output=True, text=True)
    assert extend.returncode == 1 and "LA-failure" in extend.stdout
    assert io.loads(boundary.stdout) == flipped_extended_boundary(3)
