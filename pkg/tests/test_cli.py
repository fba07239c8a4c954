"""Command-line interface: subcommands, exit codes, determinism."""

import json

from ubckit import save_complex, torus_7
from ubckit.cli import main


def _gen(tmp_path, spec, filename):
    path = tmp_path / filename
    assert main(["gen", *spec.split(" "), "-o", str(path)]) == 0
    return path


def test_gen_then_invariants(tmp_path, capsys):
    path = _gen(tmp_path, "cyclic 4 9", "c49.json")
    capsys.readouterr()
    assert main(["invariants", str(path)]) == 0
    doc = json.loads(capsys.readouterr().out)
    assert doc["name"] == "cyclic-4-9"
    assert doc["h_vector"] == [1, 5, 15, 5, 1]
    assert doc["f_vector"] == [1, 9, 36, 54, 27]


def test_gen_round_trip(tmp_path):
    from ubckit import generate, load_complex

    path = _gen(tmp_path, "suspension(torus-7)", "st.json")
    name, sc = load_complex(path)
    expected_name, expected = generate("suspension(torus-7)")
    assert name == expected_name
    assert sc == expected


def test_gen_to_stdout(capsys):
    assert main(["gen", "boundary-simplex", "2"]) == 0
    doc = json.loads(capsys.readouterr().out)
    assert doc == {"name": "boundary-simplex-2", "facets": [[0, 1], [0, 2], [1, 2]]}


def test_verify_exit_codes(tmp_path, capsys):
    wedge = _gen(tmp_path, "wedge(boundary-simplex(4),boundary-simplex(4))", "wedge.json")
    st = _gen(tmp_path, "suspension(torus-7)", "st.json")
    capsys.readouterr()

    assert main(["verify", "ubc", str(wedge)]) == 0
    doc = json.loads(capsys.readouterr().out)
    rows = {c["label"]: c for c in doc["conclusions"]}
    assert rows["f_3 <= f_3(C_4(9))"] == {
        "label": "f_3 <= f_3(C_4(9))",
        "left": 10,
        "right": 27,
        "holds": True,
    }

    assert main(["verify", "ubc", str(st)]) == 2
    doc = json.loads(capsys.readouterr().out)
    assert doc["overall"] == "hypotheses-not-met"
    failing = [h for h in doc["hypotheses"] if h["status"] is False]
    assert {h["condition"] for h in failing} == {
        "link of vertex 7 is admissible",
        "link of vertex 8 is admissible",
    }


def test_verify_conclusion_failure_exit_code(tmp_path, capsys):
    # hypotheses hold but a conclusion fails: a hand-made non-palindromic
    # "Eulerian" complex does not exist, so use lemma-hh on a sphere minus
    # nothing; instead check exit 1 is reachable through a doctored report
    from ubckit.verify import Inequality, Hypothesis, VerificationReport

    report = VerificationReport(
        "ubc",
        (Hypothesis("x", True, None),),
        (Inequality("f_1 <= f_1(C)", 5, 4, False),),
    )
    assert report.overall == "fail"
    assert report.exit_code == 1


def test_classify_cli(tmp_path, capsys):
    path = tmp_path / "torus.json"
    save_complex(path, "torus-7", torus_7())
    assert main(["classify", str(path)]) == 0
    doc = json.loads(capsys.readouterr().out)
    assert doc["semi_eulerian"] is True
    assert doc["eulerian"] is False
    assert doc["witnesses"]["eulerian"]["face"] == []


def test_classify_deterministic_output(tmp_path, capsys):
    path = tmp_path / "torus.json"
    save_complex(path, "torus-7", torus_7())
    main(["classify", str(path)])
    first = capsys.readouterr().out
    main(["classify", str(path)])
    second = capsys.readouterr().out
    assert first == second


def test_sweep(tmp_path, capsys):
    _gen(tmp_path, "boundary-simplex 4", "a-bd4.json")
    _gen(tmp_path, "suspension(torus-7)", "b-st.json")
    _gen(tmp_path, "cyclic 4 7", "c-c47.json")
    capsys.readouterr()
    code = main(["sweep", "ubc", str(tmp_path)])
    out = capsys.readouterr().out
    lines = out.strip().splitlines()
    assert lines[0].startswith("a-bd4.json") and lines[0].endswith("pass")
    assert lines[1].startswith("b-st.json") and lines[1].endswith("hypotheses-not-met")
    assert lines[2].startswith("c-c47.json") and lines[2].endswith("pass")
    assert lines[3].startswith("# ubc: 2 pass, 0 fail, 1 hypotheses-not-met")
    assert code == 2


def test_sweep_all_pass_exit_zero(tmp_path, capsys):
    _gen(tmp_path, "boundary-simplex 4", "a.json")
    _gen(tmp_path, "cyclic 4 8", "b.json")
    capsys.readouterr()
    assert main(["sweep", "ubc", str(tmp_path)]) == 0


def test_sweep_continues_past_errors(tmp_path, capsys):
    _gen(tmp_path, "boundary-simplex 4", "a.json")
    (tmp_path / "b.json").write_text("{broken")
    _gen(tmp_path, "torus-7", "c.json")  # wrong parity: verify errors
    capsys.readouterr()
    code = main(["sweep", "ubc", str(tmp_path)])
    out = capsys.readouterr().out
    assert "a.json" in out and "b.json" in out and "c.json" in out
    assert code == 64


def test_usage_errors_exit_64(tmp_path, capsys):
    assert main(["verify", "nonsense", "x.json"]) == 64
    assert main(["no-such-command"]) == 64
    assert main(["verify", "ubc", str(tmp_path / "missing.json")]) == 64
    bad = tmp_path / "bad.json"
    bad.write_text('{"name": "x", "facets": [[0, 0]]}')
    assert main(["invariants", str(bad)]) == 64
    capsys.readouterr()


def test_invariants_impure_short_h_not_applicable(tmp_path, capsys):
    path = tmp_path / "impure.json"
    path.write_text('{"name": "impure", "facets": [[0, 1, 2], [2, 3]]}')
    assert main(["invariants", str(path)]) == 0
    doc = json.loads(capsys.readouterr().out)
    assert doc["pure"] is False
    assert doc["short_h_vector"] == "not-applicable"


def test_verify_reports_are_byte_identical(tmp_path, capsys):
    path = _gen(tmp_path, "cyclic 4 7", "c.json")
    capsys.readouterr()
    main(["verify", "ubc", str(path)])
    first = capsys.readouterr().out
    main(["verify", "ubc", str(path)])
    second = capsys.readouterr().out
    assert first == second
