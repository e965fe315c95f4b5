from __future__ import annotations

import json

import pytest

from tanglekit.cli import load_tangle, main
from tanglekit.invariants import inverted, jones, same_poly


def test_parse(samples, capsys):
    assert main(["parse", str(samples / "unknot.tgl")]) == 0
    out = capsys.readouterr().out
    assert out.startswith("C[0,0; <] ; A[0,0; <]\n")
    assert "2 elements, 1 components, 0 crossings" in out


def test_parse_json(samples, capsys):
    assert main(["--json", "parse", str(samples / "trefoil.tgl")]) == 0
    data = json.loads(capsys.readouterr().out)
    assert (data["components"], data["crossings"], data["alpha"]) == (1, 3, 2)


def test_simplify_kinked_strand(samples, capsys):
    assert main(["simplify", str(samples / "kinked_strand.tgl")]) == 0
    assert capsys.readouterr().out.strip() == "E[u]"


def test_invariants(samples, capsys):
    assert main(["invariants", str(samples / "trefoil.tgl"), "--t-variable"]) == 0
    out = capsys.readouterr().out
    assert "writhe: 3" in out
    assert "jones: A^-4 + A^-12 - A^-16" in out
    assert "jones (t):" in out


def test_equiv_distinct(samples, capsys):
    assert main(["equiv", str(samples / "unknot.tgl"), str(samples / "trefoil.tgl")]) == 0
    assert capsys.readouterr().out.strip() == "distinct by jones: 1 vs A^-4 + A^-12 - A^-16"


def test_equiv_rejects_negative_budget(samples):
    with pytest.raises(SystemExit) as exc:
        main(["equiv", str(samples / "unknot.tgl"), str(samples / "unknot.tgl"), "--budget", "-1"])
    assert exc.value.code == 2


def test_verify_gt_json(capsys):
    assert main(["--json", "verify-gt", "gt(lambda=-1; f=1)"]) == 0
    data = json.loads(capsys.readouterr().out)
    assert data["two_cycle"] and data["hexagon"] and data["pentagon"] and data["is_gt"]


def test_act_writes_the_fraction(samples, tmp_path, capsys):
    num, den = tmp_path / "num.tgl", tmp_path / "den.tgl"
    code = main(["act", str(samples / "trefoil.tgl"), "--gt", "gt(lambda=-1; f=1)", "--out", str(num), str(den)])
    assert code == 0
    header = num.read_text(encoding="utf-8").splitlines()[0]
    assert header == "# act gt(lambda=-1; f=1) alpha(num)=2 alpha(den)=1"
    trefoil = load_tangle(str(samples / "trefoil.tgl"))
    assert same_poly(jones(load_tangle(str(num))), inverted(jones(trefoil)))
    assert load_tangle(str(den)).items == load_tangle(str(samples / "unknot.tgl")).items
    assert "numerator:" in capsys.readouterr().out


def test_two_bridge(capsys):
    assert main(["two-bridge", "--b4", "s2^2", "--plat"]) == 0
    assert capsys.readouterr().out.strip().endswith("components: 2")


def test_render(samples, capsys):
    assert main(["render", str(samples / "unknot.tgl")]) == 0
    assert ".--." in capsys.readouterr().out


def test_parse_error_as_json(tmp_path, capsys):
    bad = tmp_path / "bad.tgl"
    bad.write_text("C[0,0; <] ; X[1]", encoding="utf-8")
    assert main(["--json", "parse", str(bad)]) == 1
    error = json.loads(capsys.readouterr().err)
    assert error["kind"] == "ParseError"
    assert error["line"] == 1


def test_missing_file(tmp_path, capsys):
    assert main(["parse", str(tmp_path / "nope.tgl")]) == 1
    assert capsys.readouterr().err.startswith("error: ")


def test_unknown_command():
    with pytest.raises(SystemExit) as exc:
        main(["frobnicate"])
    assert exc.value.code == 2
