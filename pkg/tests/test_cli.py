"""Golden outputs, exit codes and determinism of the command-line tool.

Golden files are regenerated with
``ribbonjones invariants > tests/golden/bundled_table.txt`` and friends.
"""

from pathlib import Path

import pytest

import ribbonjones
from ribbonjones.cli import RunConfig, UsageError, main

GOLDEN = Path(__file__).parent / "golden"
DATA = Path(ribbonjones.__file__).parent / "data"
BANDS = sorted(str(p) for p in DATA.glob("*.band"))


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def blocks(text):
    parsed = [dict(ln.split("=", 1) for ln in b.splitlines()) for b in text.strip().split("\n\n")]
    return {b["name"]: b for b in parsed}


@pytest.mark.parametrize("argv,golden", [
    ((), "bundled_table.txt"),
    (tuple(BANDS), "bundled_bands.txt"),
])
def test_invariants_golden(capsys, argv, golden):
    code, out, _ = run(capsys, "invariants", *argv)
    assert code == 0
    assert out == (GOLDEN / golden).read_text()


def test_cable_golden(capsys):
    code, out, _ = run(capsys, "cable", "3_1", "2")
    assert code == 0 and out == (GOLDEN / "cable_3_1_2.txt").read_text()


def test_bundled_table_values(capsys):
    _, out, _ = run(capsys, "invariants")
    table = blocks(out)
    assert table["8n8"]["nullity"] == "1"
    assert table["10n57"]["jones_det"] == "-15"
    assert table["10n36"]["jones_det"] == "-23"


def test_link_filter(capsys):
    code, out, _ = run(capsys, "invariants", "--link", "H+")
    assert code == 0 and out.count("name=") == 1 and "det_at_i=2i" in out
    assert run(capsys, "invariants", "--link", "nope")[0] == 2


def test_band_report(capsys):
    code, out, _ = run(capsys, "invariants", str(DATA / "mobius_4a1.band"))
    assert code == 0
    assert "orientable=false" in out and "surface_det=-4i" in out


def test_pd_file(tmp_path, capsys):
    f = tmp_path / "trefoil.pd"
    f.write_text("PD[X(1,5,2,4), X(3,1,4,6), X(5,3,6,2)]\n")
    code, out, _ = run(capsys, "invariants", str(f), "--order", "1")
    assert code == 0 and "name=trefoil" in out and "d_2" not in out


@pytest.mark.parametrize("content,suffix", [("", ".pd"), ("PD[X(1,2,3)]\n", ".pd"),
                                            ("cup@0; cap@1\n", ".band"), ("x", ".txt")])
def test_bad_inputs_exit_2(tmp_path, capsys, content, suffix):
    f = tmp_path / f"bad{suffix}"
    f.write_text(content)
    code, _, err = run(capsys, "invariants", str(f))
    assert code == 2 and err.startswith("error:")


def test_usage_errors(capsys):
    assert run(capsys, "check", "bogus")[0] == 2
    assert run(capsys, "check", "oracle", "--trials", "0")[0] == 2
    assert run(capsys, "invariants", "--order", "-1")[0] == 2
    assert run(capsys, "cable", "H+", "2")[0] == 2
    assert run(capsys, "invariants", "/no/such/file.pd")[0] == 2
    assert run(capsys)[0] == 2


def test_run_config_validation():
    with pytest.raises(UsageError):
        RunConfig(engine="fast")
    assert RunConfig().series_order == 4


def test_check_oracle_seed_7(capsys):
    code, out, _ = run(capsys, "check", "oracle", "--trials", "500", "--seed", "7")
    assert code == 0
    # 500 random diagrams plus the 16 bundled ones
    assert "trials=516" in out and out.rstrip().endswith("passed=true")


def test_check_is_deterministic(capsys):
    first = run(capsys, "check", "congruences", "--trials", "2", "--seed", "4")
    second = run(capsys, "check", "congruences", "--trials", "2", "--seed", "4")
    assert first == second and first[0] == 0


def test_check_failure_exits_1(capsys, monkeypatch):
    import ribbonjones.theorems as th
    real = th.surface_determinant
    monkeypatch.setattr(th, "surface_determinant", lambda *a, **k: real(*a, **k) + 2)
    code, out, _ = run(capsys, "check", "congruences", "--trials", "1")
    assert code == 1 and "passed=false" in out
