"""Command line behaviors: outputs, exit codes, artifacts, determinism."""

import json

import pytest

from foxtwist import formats
from foxtwist.cli import main
from foxtwist.derived_twists import twist
from foxtwist.surfaces import SurfaceSpec, surface_pairing


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_pairing_text_output(capsys):
    code, out, err = run(capsys, "pairing", "--surface", "genus:1", "--degree", "4")
    assert code == 0 and err == ""
    assert "rank: 2" in out
    assert "degree cap: 4" in out
    assert "[0, -1]" in out and "[1, 0]" in out


def test_pairing_json_output(capsys):
    code, out, _ = run(capsys, "pairing", "--surface", "genus:1",
                       "--degree", "3", "--format", "json")
    assert code == 0
    doc = json.loads(out)
    assert doc["rank"] == 2
    assert doc["degree_cap"] == 3
    assert doc["homological_form"] == [["0", "-1"], ["1", "0"]]
    inner = formats.pairing_from_dict(doc["pairing"])
    assert inner == surface_pairing(SurfaceSpec(1, 3))


def test_pairing_out_file(tmp_path, capsys):
    path = tmp_path / "pairing.json"
    code, out, _ = run(capsys, "pairing", "--surface", "genus:1",
                       "--degree", "3", "--out", str(path))
    assert code == 0
    assert f"wrote: {path}" in out
    assert formats.pairing_from_dict(formats.read_json(path)) == surface_pairing(SurfaceSpec(1, 3))


def test_twist_apply_frozen_series(capsys):
    code, out, _ = run(capsys, "twist", "--surface", "genus:1", "--curve", "a",
                       "--k", "1/2", "--degree", "5", "--apply", "b")
    assert code == 0
    assert out.strip() == ("iota(b) -> 1 - X1 + X2 + X1 X1 - X2 X1 - X1 X1 X1 "
                           "+ X2 X1 X1 + X1 X1 X1 X1 - X2 X1 X1 X1")


def test_twist_file_roundtrip(tmp_path, capsys):
    path = tmp_path / "twist.json"
    code, out, _ = run(capsys, "twist", "--surface", "genus:1", "--curve", "a b",
                       "--k", "1/3", "--degree", "4", "--out", str(path))
    assert code == 0
    spec = SurfaceSpec(1, 4)
    want = twist(surface_pairing(spec), "1/3", spec.parse_curve("a b"))
    assert formats.twist_from_dict(formats.read_json(path)) == want
    assert "x1 ->" in out and "x2 ->" in out


def test_twist_from_pairing_file(tmp_path, capsys):
    path = tmp_path / "pairing.json"
    run(capsys, "pairing", "--surface", "genus:1", "--degree", "4", "--out", str(path))
    code, out, _ = run(capsys, "twist", "--pairing", str(path), "--curve", "x1",
                       "--apply", "x2", "--format", "json")
    assert code == 0
    doc = json.loads(out)
    assert doc["word"] == [2]
    spec = SurfaceSpec(1, 4)
    want = twist(surface_pairing(spec), "1/2", spec.parse_curve("a")).apply_word(
        spec.parse_curve("b"))
    assert formats.series_from_dict(doc["image"], rank=2) == want


def test_twist_from_nabla_file(tmp_path, capsys):
    from foxtwist.surfaces import boundary_nabla
    path = tmp_path / "nabla.json"
    nabla = boundary_nabla(SurfaceSpec(1, 5))
    formats.write_json(path, formats.series_to_dict(nabla.series))
    code, out, _ = run(capsys, "twist", "--nabla", str(path), "--curve", "x1 x2^-1")
    assert code == 0
    assert "x1 ->" in out
    assert "degree cap: 3" in out


def test_verify_suite_text(capsys):
    code, out, _ = run(capsys, "verify", "--suite", "figure-eight", "--degree", "4")
    assert code == 0
    assert "suite figure-eight: 12/12 checks passed" in out
    assert "FAIL" not in out


def test_verify_report_out(tmp_path, capsys):
    path = tmp_path / "report.json"
    code, _, _ = run(capsys, "verify", "--suite", "hopf", "--degree", "3",
                     "--format", "json", "--out", str(path))
    assert code == 0
    report = formats.read_json(path)
    assert report["suite"] == "hopf"
    assert all(entry["pass"] for entry in report["checks"])


def test_output_is_byte_identical_across_runs(capsys):
    argv = ("twist", "--surface", "genus:1", "--curve", "a", "--degree", "4",
            "--format", "json")
    _, first, _ = run(capsys, *argv)
    _, second, _ = run(capsys, *argv)
    assert first == second


def test_exit_2_on_bad_inputs(capsys):
    cases = [
        ("pairing", "--surface", "genus:zero"),
        ("pairing",),
        ("pairing", "--surface", "genus:1", "--nabla", "x.json"),
        ("twist", "--surface", "genus:1"),
        ("twist", "--surface", "genus:1", "--curve", "q9"),
        ("twist", "--surface", "genus:1", "--curve", "a", "--k", "one"),
        ("twist", "--surface", "genus:1", "--curve", "a", "--k", "1/0"),
        ("verify", "--suite", "no-such-suite"),
        ("pairing", "--pairing", "does-not-exist.json"),
    ]
    for argv in cases:
        code, _, err = run(capsys, *argv)
        assert code == 2, argv
        assert "error:" in err


def test_exit_2_on_out_of_range_degree(capsys):
    with pytest.raises(SystemExit) as info:
        main(["verify", "--degree", "9"])
    assert info.value.code == 2
    capsys.readouterr()


def test_exit_1_on_degenerate_nabla(tmp_path, capsys):
    path = tmp_path / "nabla.json"
    # iota(b a) - 1 has a nonzero degree-1 part: no pairing exists
    doc = {"degree_cap": 5, "terms": [
        {"word": [1], "coeff": "1"},
        {"word": [2], "coeff": "1"},
        {"word": [2, 1], "coeff": "1"},
    ]}
    formats.write_json(path, doc)
    code, _, err = run(capsys, "twist", "--nabla", str(path), "--curve", "x1")
    assert code == 1
    assert "NotNondegenerate" in err


def test_exit_1_on_non_isotropic_curve(tmp_path, capsys):
    # symmetric degree-2 nabla: generators pair with themselves to 1
    path = tmp_path / "nabla.json"
    doc = {"degree_cap": 5, "terms": [
        {"word": [1, 1], "coeff": "1"},
        {"word": [2, 2], "coeff": "1"},
    ]}
    formats.write_json(path, doc)
    code, _, err = run(capsys, "twist", "--nabla", str(path), "--curve", "x1")
    assert code == 1
    assert "IsotropyError" in err
