import json
import subprocess
import sys

import pytest

from siggb.cli import EXIT_INPUT, EXIT_INTERNAL, EXIT_OK, main, options_from_args, build_parser

EXAMPLE = "vars: x,y\norder: grevlex\nmodorder: pot desc\n4*x*y + 1\n6*x^2 + 1\n"


def test_cyclic2_verify(capsys):
    assert main(["--system", "cyclic:2", "--verify"]) == EXIT_OK
    out, err = capsys.readouterr()
    assert "# basis" in out and "pairs/reduced/to-zero:" in out
    assert "verified" in err


def test_bad_input_file(tmp_path, capsys):
    bad = tmp_path / "bad.txt"
    bad.write_text("vars: x\nx^-1\n")
    assert main(["--input", str(bad)]) == EXIT_INPUT
    err = capsys.readouterr().err
    assert "line 2, column 3" in err


def test_missing_file(tmp_path, capsys):
    assert main(["--input", str(tmp_path / "nope.txt")]) == EXIT_INPUT
    assert "siggb:" in capsys.readouterr().err


def test_usage_errors(capsys):
    with pytest.raises(SystemExit) as info:
        main(["--system", "cyclic:3", "--algorithm", "f4"])
    assert info.value.code == EXIT_INPUT
    with pytest.raises(SystemExit) as info:
        main([])
    assert info.value.code == EXIT_INPUT
    assert main(["--system", "hexagon:3"]) == EXIT_INPUT


def test_pl_katsura_stats(capsys):
    assert main(["--algorithm", "pl", "--system", "katsura:4", "--stats"]) == EXIT_OK
    out = capsys.readouterr().out
    assert "pairs/reduced/to-zero: " in out
    assert "discarded_by_syzygy:" in out and "pairs_considered:" in out


def test_json_tracked(tmp_path, capsys):
    src = tmp_path / "ex.txt"
    src.write_text(EXAMPLE)
    dst = tmp_path / "out.json"
    assert main(["--input", str(src), "--track", "--format", "json", "--output", str(dst), "--verify"]) == EXIT_OK
    rep = json.loads(dst.read_text())
    assert {"basis", "syzygy_signatures", "stats", "coordinates", "syzygies", "signature_basis"} <= set(rep)
    assert len(rep["coordinates"]) == len(rep["signature_basis"])
    assert len(rep["syzygies"]) == len(rep["syzygy_signatures"])
    assert rep["stats"]["triple"].count("/") == 2
    assert capsys.readouterr().out == ""


def test_text_tracked(tmp_path, capsys):
    src = tmp_path / "ex.txt"
    src.write_text("vars: x\nx\nx\n")
    assert main(["--input", str(src), "--track"]) == EXIT_OK
    out = capsys.readouterr().out
    assert "# coordinates" in out and "[-1, 1]" in out


def test_flags_map_to_options():
    args = build_parser().parse_args(
        ["--system", "cyclic:3", "--algorithm", "pl", "--no-cover", "--no-super", "--no-coprime", "--no-chain",
         "--no-f5", "--no-modular", "--no-tail", "--gpol-regular-only", "--track"]
    )
    o = options_from_args(args)
    assert o.algorithm == "pl" and o.tracking and o.gpol_regular_only
    assert not (o.cover or o.super_discard or o.coprime or o.chain or o.f5)
    assert not (o.reduce.modular or o.reduce.tail)


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "siggb.cli", "--system", "cyclic:3", "--format", "json"],
        capture_output=True, text=True, timeout=120,
    )
    assert proc.returncode == EXIT_OK
    assert json.loads(proc.stdout)["basis"]


def test_exit_codes_distinct():
    assert len({EXIT_OK, EXIT_INPUT, EXIT_INTERNAL}) == 3


def test_internal_error_exit(monkeypatch, capsys):
    import siggb.cli as cli
    from siggb.engine import InvariantViolation

    def broken(*a, **k):
        raise InvariantViolation("signature drop")

    monkeypatch.setattr(cli, "run", broken)
    assert main(["--system", "cyclic:2"]) == EXIT_INTERNAL
    assert "internal error" in capsys.readouterr().err


def test_verify_mismatch_exit(monkeypatch, capsys):
    import siggb.cli as cli

    monkeypatch.setattr(cli, "is_strong_gb", lambda G: False)
    assert main(["--system", "cyclic:2", "--verify"]) == EXIT_INTERNAL
    assert "verification failed" in capsys.readouterr().err
