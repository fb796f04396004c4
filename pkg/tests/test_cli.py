import json
import subprocess
import sys

import pytest

from rankone.cli import main, run
from rankone.descriptor import SocleDescriptor
from rankone.exactfield import FactoredRF, PartialFraction
from rankone.jsonio import factored_from_json, pf_from_json, pf_to_json, parse_ratfun, MalformedInput
from rankone import sl2


def invoke(capsys, args, payload):
    import io

    sys_stdin = sys.stdin
    sys.stdin = io.StringIO(json.dumps(payload))
    try:
        code = main(args)
    finally:
        sys.stdin = sys_stdin
    return code, capsys.readouterr().out


def test_basis_linear_at_2():
    report, code = run("sl2", "basis", {"r1": "-1", "u": "h-2"}, max_shift=8)
    assert code == 0
    D = SocleDescriptor.from_json(report["result"]["descriptor"])
    assert D == sl2.socle_descriptor(sl2.ModuleParamSl2.make(-1, FactoredRF.linear(2)))
    assert report["result"]["finite"] is False


def test_oracle_check_cube_at_3():
    report, code = run("sl2", "oracle-check", {"r1": "-1", "u": "(h-3)^3"}, max_shift=6)
    assert code == 0
    assert report["result"]["verdict"] == "MATCH"
    assert report["result"]["full_window_match"] is True
    assert {"root": "1", "order": 3} in report["result"]["oracle_patterns"]


def test_weyl_fg():
    report, code = run("weyl", "fg", {"u": {"c": "1", "factors": [{"root": "0", "exp": 1}]}})
    assert code == 0 and report["result"]["finitely_generated"] is True


@pytest.mark.parametrize(
    "algebra, payload",
    [
        ("sl2", {"r1": "-1", "u": "(h-3)^3/(h-1)"}),
        ("weyl", {"u": "h^2/(h-1/2)"}),
        ("osp-graded", {"u": "h-3", "lambda": "-1"}),
        ("osp-ungraded", {"u": "h"}),
    ],
)
@pytest.mark.parametrize("command", ["normalize", "basis", "verify", "oracle-check", "fg"])
def test_every_command_runs(algebra, payload, command):
    report, code = run(algebra, command, payload, max_shift=4, max_degree=3)
    assert code == 0, report
    if command == "verify":
        assert all(v is True or isinstance(v, (str, list)) for v in report["result"].values())
    if command == "oracle-check":
        assert report["result"]["verdict"] == "MATCH"


def test_act_and_iso():
    report, code = run("sl2", "act", {"r1": "-1", "u": "h-2", "op": "e", "element": "1/h"})
    assert code == 0 and pf_from_json(report["result"]["result"]) == PartialFraction.one()
    report, code = run("weyl", "iso", {"u": "h", "v": "h-2"})
    assert report["result"]["isomorphic"] is True
    assert factored_from_json(report["result"]["witness"]) == FactoredRF(1, {0: -1})
    report, code = run("sl2", "iso", {"r1": "-1", "u": "h-2", "v": "2*(h-2)"})
    assert report["result"]["isomorphic"] is False
    report, code = run("osp-graded", "iso", {"u": "h-1/2", "lambda": "0", "other": {"u": "-(h-1/2)", "lambda": "0"}})
    assert report["result"]["isomorphic"] is True
    report, code = run("osp-graded", "act", {"u": "h", "lambda": "0", "op": "p", "element": {"even": "1"}})
    assert code == 0 and pf_from_json(report["result"]["odd"]) == PartialFraction.monomial(1)
    report, code = run("osp-ungraded", "act", {"u": "h", "op": "sigma", "element": "h^2+1/h"})
    assert code == 0 and pf_from_json(report["result"]["result"]).is_zero()


@pytest.mark.parametrize(
    "algebra, command, payload, code",
    [
        ("weyl", "fg", {"u": "h^2-2"}, 1),
        ("sl2", "basis", {"r1": "-1"}, 2),
        ("sl2", "basis", {"r1": 0.5, "u": "h"}, 2),
        ("sl2", "basis", {"r1": "-1", "u": "h-1", "canonicalize": False}, 2),
        ("weyl", "act", {"u": "h", "op": "z", "element": "1"}, 2),
        ("weyl", "fg", {"u": "import os"}, 2),
        ("weyl", "fg", {"u": "0"}, 2),
        ("nope", "fg", {}, 2),
        ("weyl", "oracle-check", {"u": "h^3"}, 0),
    ],
)
def test_exit_codes(algebra, command, payload, code):
    report, got = run(algebra, command, payload, max_shift=3, max_degree=2)
    assert got == code
    if code:
        assert report["error"]["operation"] == command


def test_window_too_small_is_domain_error():
    report, code = run("sl2", "oracle-check", {"r1": "-1", "u": "h-2"}, max_shift=8, rounds=1)
    assert code == 1 and report["error"]["type"] == "WindowTooSmall"


def test_non_positive_window():
    _, code = run("sl2", "basis", {"r1": "-1", "u": "h-2"}, max_shift=0)
    assert code == 2


def test_main_json_and_latex(capsys):
    code, out = invoke(capsys, ["--algebra", "sl2", "--command", "basis", "--input", "-"], {"r1": "-1", "u": "h-3"})
    assert code == 0 and json.loads(out)["result"]["finite"] is True
    code, out = invoke(
        capsys, ["--algebra", "sl2", "--command", "basis", "--input", "-", "--format", "latex"], {"r1": "-1", "u": "h-3"}
    )
    assert "\\mathbb{C}[h] \\oplus \\langle \\frac{1}{h-1} \\rangle" in out


def test_latex_osp_blocks(capsys):
    code, out = invoke(
        capsys,
        ["--algebra", "osp-graded", "--command", "basis", "--format", "latex"],
        {"u": "h-3", "lambda": "-1"},
    )
    assert code == 0 and "S_{\\bar 0} =" in out and "S_{\\bar 1} =" in out


def test_latex_empty_descriptor(capsys):
    code, out = invoke(capsys, ["--algebra", "weyl", "--command", "basis", "--format", "latex"], {"u": "h"})
    assert "S = \\mathbb{C}[h]\n" in out


def test_bad_json(tmp_path, capsys):
    f = tmp_path / "bad.json"
    f.write_text("{")
    assert main(["--algebra", "sl2", "--command", "fg", "--input", str(f)]) == 2
    assert main(["--algebra", "sl2", "--command", "fg", "--input", str(tmp_path / "missing.json")]) == 2
    assert main(["--algebra", "bogus", "--command", "fg"]) == 2


def test_deterministic_subprocess(tmp_path):
    f = tmp_path / "req.json"
    f.write_text(json.dumps({"r1": "-1", "u": "(h-3)^3"}))
    cmd = [sys.executable, "-m", "rankone", "--algebra", "sl2", "--command", "oracle-check", "--input", str(f), "--max-shift", "5"]
    outs = [subprocess.run(cmd, capture_output=True, check=True).stdout for _ in range(2)]
    assert outs[0] == outs[1]
    report = json.loads(outs[0])
    again = json.loads(json.dumps(report))
    assert again == report


def test_json_round_trip_of_values():
    b = pf_from_json("(h^3 - 1/2)/((h-i)^2*(h+3))")
    assert pf_from_json(pf_to_json(b)) == b
    assert pf_from_json(json.loads(json.dumps(pf_to_json(b)))) == b
    D = sl2.socle_descriptor(sl2.ModuleParamSl2.make(-1, FactoredRF(1, {3: 3})))
    assert SocleDescriptor.from_json(json.loads(json.dumps(D.to_json()))) == D


@pytest.mark.parametrize("text", ["h**2 + 2*h", "(h-1)^-2", "i*h - 3/4", "-(h+1)^2/(4*h)"])
def test_expression_parser(text):
    f = parse_ratfun(text)
    assert f == parse_ratfun(text.replace("^", "**"))


@pytest.mark.parametrize("text", ["__import__('os')", "h.real", "h^(1/2)", "x+1", "", "1/0"])
def test_expression_parser_rejects(text):
    with pytest.raises(MalformedInput):
        parse_ratfun(text)
