import json
import shutil
import subprocess
import sys

import pytest

from hrruns import oeis
from hrruns.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_table_b_csv(capsys):
    code, out, _ = run(capsys, "table", "--family", "B", "--n-max", "4", "--format", "csv")
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "family,n,k,value"
    assert "B,3,1,2" in lines and "B,3,2,24" in lines and "B,3,3,22" in lines


def test_table_d_triangle(capsys):
    code, out, _ = run(capsys, "table", "--family", "d-triangle", "--n-max", "7")
    assert code == 0
    assert out.splitlines()[-1] == "n=7: 1 57 180 34"


def test_table_json_and_tex(capsys):
    code, out, _ = run(capsys, "table", "--family", "A", "--n", "6", "--format", "json")
    assert json.loads(out) == {"family": "A", "n": 6, "coeffs": [0, 2, 60, 236, 300, 122]}
    code, out, _ = run(capsys, "table", "--family", "eulerian-B", "--n", "2", "--format", "tex")
    assert out.strip() == "n=2: (1+x)^{2} + 4x"
    code, out, _ = run(capsys, "table", "--family", "M", "--n-max", "3")
    assert out.splitlines() == ["n=2: 2x", "n=3: 2x + 4x^2"]


def test_table_usage_errors(capsys):
    assert run(capsys, "table", "--family", "A")[0] == 2
    assert run(capsys, "table", "--family", "A", "--n", "13")[0] == 2
    with pytest.raises(SystemExit) as exc:
        main(["table", "--family", "Q", "--n", "2"])
    assert exc.value.code == 2


def test_verify_typea_passes(capsys):
    code, out, err = run(capsys, "verify", "--suite", "typeA", "--n-max", "8")
    assert code == 0
    records = [json.loads(line) for line in out.splitlines()]
    assert {r["status"] for r in records} <= {"pass", "fixture_mismatch", "skipped"}
    assert "FINDINGS" in err and "listed_M n=5" in err


def test_verify_typed_reports_counterexample(capsys):
    code, out, err = run(capsys, "verify", "--suite", "typeD", "--n-max", "3")
    assert code == 1
    assert any(json.loads(line)["status"] == "fail" for line in out.splitlines())
    assert "[fail] Q_nonvanish n=2" in err


def test_verify_random_trials(capsys):
    code, out, _ = run(capsys, "verify", "--suite", "bijections", "--n-max", "3", "--random-trials", "50",
                       "--random-n", "3", "--seed", "1")
    assert code == 0
    assert json.loads(out.splitlines()[-1])["identity_id"] == "random_action_laws"


def test_verify_corrupt_fixture(capsys, tmp_path):
    for f in oeis.BUNDLED.glob("b*.txt"):
        shutil.copy(f, tmp_path / f.name)
    path = tmp_path / "b059427.txt"
    path.write_text(path.read_text().replace("\n3 2\n", "\n3 3\n", 1))
    code, _, err = run(capsys, "verify", "--suite", "oeis", "--fixtures", str(tmp_path))
    assert code == 1
    assert "oeis_A059427" in err


def test_orbit_commands(capsys):
    code, out, _ = run(capsys, "orbit", "--perm", "123", "--action", "hr", "--stat", "as")
    assert code == 0
    assert "(4 members)" in out and "as polynomial: x + 2x^2 + x^3" in out
    code, out, _ = run(capsys, "orbit", "--perm", "5,1,3,4,2,6", "--action", "hr")
    assert "check: 5,6,3,2,1,4" in out
    code, out, _ = run(capsys, "orbit", "--perm", "2,-1", "--action", "mhr", "--format", "json")
    data = json.loads(out)
    assert all(not m.startswith("-") for m in data["members"])
    assert run(capsys, "orbit", "--perm", "1,1")[0] == 2


def test_tree_commands(capsys, tmp_path):
    code, out, _ = run(capsys, "tree", "--perm", "562314", "--format", "dot")
    assert code == 0 and out.count("[label=") - out.count("->") == 6
    raw = tmp_path / "t.txt"
    code, out, _ = run(capsys, "tree", "--perm", "316478592", "--format", "raw")
    raw.write_text(out)
    code, out2, err = run(capsys, "tree", "--raw-file", str(raw), "--format", "raw")
    assert code == 0 and out2 == out and "HR: True" in err
    raw.write_text(out.replace("left=1 right=8", "left=1 right=-"))
    assert run(capsys, "tree", "--raw-file", str(raw))[0] == 2


def test_tree_rejects_non_hr(capsys, tmp_path):
    from test_minmax_tree import NON_HR_EXAMPLE
    raw = tmp_path / "r.txt"
    raw.write_text(NON_HR_EXAMPLE)
    code, _, err = run(capsys, "tree", "--raw-file", str(raw))
    assert code == 1 and "HR: False" in err


def test_oeis_command(capsys, tmp_path):
    code, out, _ = run(capsys, "oeis", "A059427", "--n-max", "9")
    assert code == 0 and "match" in out
    assert run(capsys, "oeis", "A094503", "--fixtures", str(tmp_path))[0] == 2
    (tmp_path / "b094503.txt").write_text("1 1\n2 x\n")
    code, _, err = run(capsys, "oeis", "A094503", "--fixtures", str(tmp_path))
    assert code == 1 and "corrupted" in err
    (tmp_path / "b094503.txt").write_text("1 1\n2 2\n")
    code, out, _ = run(capsys, "oeis", "A094503", "--fixtures", str(tmp_path))
    assert code == 1 and "first difference at index 2" in out


def test_jobs_are_deterministic(capsys):
    _, one, _ = run(capsys, "--jobs", "1", "table", "--family", "Dgt", "--n-max", "5", "--format", "json")
    _, two, _ = run(capsys, "--jobs", "2", "table", "--family", "Dgt", "--n-max", "5", "--format", "json")
    assert one == two


def test_console_script():
    proc = subprocess.run([sys.executable, "-m", "hrruns.cli", "table", "--family", "T", "--n", "4"],
                          capture_output=True, text=True, check=False)
    assert proc.returncode == 0
    assert proc.stdout.strip() == "n=4: x + 36x^2 + 20x^3"
