import json
import subprocess
import sys

import pytest

from parflex import gallery
from parflex.cli import main
from parflex.io import FrameworkDocument, serialize_document
from parflex.symmetry import action_from_rotation


@pytest.fixture
def doc(tmp_path):
    def write(fw, name="fw.json", action=None, metadata=None):
        path = tmp_path / name
        path.write_text(serialize_document(FrameworkDocument(fw, action, metadata or {})))
        return str(path)
    return write


def run(capsys, *argv):
    try:
        code = main(list(argv))
    except SystemExit as exc:  # argparse usage errors
        code = exc.code
    out, err = capsys.readouterr()
    return code, out, err


def run_json(capsys, *argv):
    code, out, _ = run(capsys, *argv, "--json")
    data = json.loads(out)
    assert data["exit_code"] == code
    return code, data


def test_classes(capsys, doc):
    code, data = run_json(capsys, "classes", doc(gallery.eqclasses_left()))
    assert code == 0 and sorted(len(c) for c in data["classes"]) == [6, 9]
    code, out, _ = run(capsys, "classes", "--ribbons", doc(gallery.triangle()))
    assert code == 0 and "3" in out


def test_check_and_verdict(capsys, doc):
    assert run(capsys, "check", doc(gallery.new_framework()))[0] == 0
    code, data = run_json(capsys, "check", doc(gallery.new_framework(moved=True)))
    assert code == 1
    code, out, _ = run(capsys, "verdict", doc(gallery.square()))
    assert code == 0 and "flexible, 2 classes, 1 dof" in out
    code, out, _ = run(capsys, "verdict", doc(gallery.triangle()))
    assert code == 0 and "rigid" in out
    assert run(capsys, "verdict", doc(gallery.new_framework(moved=True)))[0] == 1


def test_flex_angles_and_svg(capsys, doc, tmp_path):
    path = doc(gallery.square())
    code, data = run_json(capsys, "flex", path, "--angles", "0,90", "--degrees")
    assert code == 0
    pl = data["samples"][0]["placement"]
    assert len(pl) == 4
    code, out, _ = run(capsys, "flex", path, "--sweep", "1:0:45", "--degrees", "--frames", "4",
                       "--svg", str(tmp_path / "svg"))
    assert code == 0 and len(list((tmp_path / "svg").glob("*.svg"))) == 4
    assert run(capsys, "flex", path, "--sweep", "1:0")[0] == 2
    assert run(capsys, "flex", path, "--sweep", "7:0:1")[0] == 2


def test_nac_commands(capsys, doc, tmp_path):
    path = doc(gallery.square())
    assert run(capsys, "nac", "verify", path, "--red", "0-1,2-3")[0] == 0
    assert run(capsys, "nac", "verify", path, "--red", "0-1")[0] == 1
    assert run(capsys, "nac", "verify", path, "--red", "0-2")[0] == 2
    col = tmp_path / "col.json"
    col.write_text(json.dumps({"red": [[0, 1], [2, 3]]}))
    assert run(capsys, "nac", "verify", path, "--coloring", str(col))[0] == 0
    code, out, _ = run(capsys, "nac", "from-classes", doc(gallery.flex_example()), "--limit", "2")
    assert code == 0


def test_embed_and_braces(capsys, doc):
    code, data = run_json(capsys, "embed", doc(gallery.square()))
    assert code == 0
    code, out, _ = run(capsys, "brace", "suggest", doc(gallery.grid(3, 3)))
    assert code == 0
    code, out, _ = run(capsys, "brace", "suggest", doc(gallery.triangle()))
    assert code == 0 and "already rigid" in out


def test_symmetry_commands(capsys, doc):
    c4 = gallery.centered_square()
    path = doc(c4)
    code, data = run_json(capsys, "symmetry", "classes", path, "--center", "0,0", "--n", "4")
    assert code == 0
    code, data = run_json(capsys, "symmetry", "classes", path, "--center", "0,0", "--n", "2")
    assert code == 0
    code, out, _ = run(capsys, "symmetry", "flex", path, "--center", "0,0", "--n", "2", "--angles", "0,0.3")
    assert code == 0
    # the center is required
    assert run(capsys, "symmetry", "classes", path, "--n", "4")[0] == 2
    sym = gallery.symflex_example()
    spath = doc(sym, "sym.json", action_from_rotation(sym, 3))
    code, out, _ = run(capsys, "symmetry", "classes", spath, "--center", "0,0", "--colorings")
    assert code == 0


def test_tilings(capsys, tmp_path):
    code, out, _ = run(capsys, "tiling", "list")
    assert code == 0 and "3.6.3.6" in out
    target = tmp_path / "t.json"
    assert run(capsys, "tiling", "gen", "3636", "--extent", "2", "--augment", "-o", str(target))[0] == 0
    code, data = run_json(capsys, "classes", str(target))
    assert len(data["classes"]) == 4
    assert run(capsys, "tiling", "gen", "5^5")[0] == 2


def test_usage_errors(capsys, tmp_path):
    assert run(capsys)[0] == 2
    assert run(capsys, "classes", str(tmp_path / "none.json"))[0] == 2
    bad = tmp_path / "bad.json"
    bad.write_text("{")
    code, _, err = run(capsys, "check", str(bad))
    assert code == 2 and "line 1" in err


def test_output_is_deterministic(doc):
    path = doc(gallery.flex_example())
    outs = {subprocess.run([sys.executable, "-m", "parflex", "flex", path, "--angles", "0,0.1,0.2", "--json"],
                           capture_output=True, check=True).stdout for _ in range(2)}
    assert len(outs) == 1


def test_pipe_through_stdin():
    gen = subprocess.run([sys.executable, "-m", "parflex", "tiling", "gen", "3636", "--extent", "2", "--augment"],
                         capture_output=True, check=True)
    res = subprocess.run([sys.executable, "-m", "parflex", "verdict", "-"], input=gen.stdout, capture_output=True)
    assert res.returncode == 0 and b"4 classes" in res.stdout
