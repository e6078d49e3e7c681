import io
import json
import subprocess
import sys
from pathlib import Path

import pytest

from wittvanish.cli import main
from wittvanish.enumeration import enumerate_decorations
from wittvanish.errors import InvalidRank, SpecParseError
from wittvanish.parsing import parse_bundle, parse_diagram, parse_vertex_list
from wittvanish.report import parse_record, record_line, table_records, to_record

GOLDEN = Path(__file__).parent / "golden"


def run(*argv):
    out = io.StringIO()
    code = main(list(argv), out=out)
    return code, out.getvalue()


def test_parse_diagram():
    assert parse_diagram("D4").name == "D4"
    assert parse_diagram("a3xB2").name == "A3xB2"
    for bad in ["", "D4 ", "D 4", "Z3", "D", "A3x", "A3,B2", "4D"]:
        with pytest.raises(SpecParseError):
            parse_diagram(bad)
    with pytest.raises(InvalidRank):
        parse_diagram("D3")


def test_parse_lists():
    d = parse_diagram("D4")
    assert parse_vertex_list("1,4", d) == {1, 4}
    assert parse_vertex_list("", d) == frozenset()
    assert parse_bundle("0,-1,3,0", d) == (0, -1, 3, 0)
    with pytest.raises(SpecParseError):
        parse_vertex_list("1,x", d)
    with pytest.raises(SpecParseError):
        parse_bundle("1,2", d)


def test_classify_text():
    code, out = run("classify", "D4", "--theta", "1,4", "--lambda", "3")
    assert code == 0
    assert "verdict: VanishesAllDegrees" in out
    assert "rule: MainTheorem" in out
    assert "witness: 3" in out
    assert "theta': {1,3,4}" in out
    assert "assumes char(k) ≠ 2" in out
    assert "numbering (Bourbaki per component): 1-4=D4" in out


def test_classify_bundle_inconclusive():
    code, out = run("classify", "D4", "--theta", "1,4", "--bundle", "0,1,0,0")
    assert code == 0
    assert "verdict: Inconclusive" in out
    assert "lambda: {2}" in out


def test_validation_errors_exit_2(capsys):
    assert main(["classify", "A2", "--theta", "1", "--bundle", "1,0"]) == 2
    assert "NotInPicard(1)" in capsys.readouterr().err
    assert main(["classify", "D4", "--theta", "1", "--lambda", "1"]) == 2
    assert main(["classify", "Q4"]) == 2
    assert "'Q4'" in capsys.readouterr().err
    assert main(["enumerate", "E8xA5"]) == 2
    assert "RankLimitExceeded" in capsys.readouterr().err
    assert main(["render", "D4", "--theta", "9"]) == 2


def test_argparse_usage_exit_2():
    with pytest.raises(SystemExit) as exc:
        main(["classify", "D4", "--lambda", "1", "--bundle", "1,0,0,0"])
    assert exc.value.code == 2


def test_enumerate_a1_text():
    code, out = run("enumerate", "A1")
    assert code == 0
    assert "rows: 3" in out
    assert "VanishesAllDegrees=1" in out


def test_enumerate_filter():
    code, out = run("enumerate", "D4", "--theta", "1,4", "--format", "records")
    recs = [json.loads(x) for x in out.splitlines()]
    rows, totals = recs[:-1], recs[-1]["totals"]
    assert [(r["lambda"], r["witness"]) for r in rows] == [([], None), ([2], None), ([3], 3), ([2, 3], 3)]
    assert totals["VanishesAllDegrees"] == 2


def test_enumerate_d4_totals():
    _, out = run("enumerate", "D4", "--format", "records")
    assert json.loads(out.splitlines()[-1])["totals"]["MainTheorem"] == 39


def test_fast_records_match_record_line():
    for spec in ["D4", "A1xG2", "A3"]:
        d = parse_diagram(spec)
        t = enumerate_decorations(d)
        fast = table_records(t).splitlines()[:-1]
        slow = [record_line(to_record(d, r.theta, r.lam, r.verdict)) for r in t]
        assert fast == slow


def test_text_and_records_agree():
    for lam in ["", "2", "3", "2,3"]:
        _, text = run("classify", "D4", "--theta", "1,4", "--lambda", lam)
        _, rec = run("classify", "D4", "--theta", "1,4", "--lambda", lam, "--format", "records")
        r = json.loads(rec)
        assert f"verdict: {r['status']}" in text
        assert f"witness: {r['witness'] if r['witness'] is not None else 'none'}" in text


def test_record_round_trip():
    _, line = run("classify", "A5", "--theta", "1,2,4,5", "--bundle", "0,0,3,0,0", "--format", "records")
    d, theta, lam, rec = parse_record(line)
    assert rec["rule"] == "GrassmannianOddOdd(3,3)"
    _, again = run("classify", d.name, "--theta", ",".join(map(str, sorted(theta))),
                   "--lambda", ",".join(map(str, sorted(lam))), "--format", "records")
    assert again == line


def test_render_golden_bytes():
    cases = {
        "d4_a.dot": ["--theta", "1,4", "--lambda", "2,3"],
        "d4_b.dot": ["--theta", "1,4", "--lambda", "2"],
        "d4_c.dot": ["--theta", "1,4", "--lambda", "3"],
        "d4_d.dot": ["--theta", "1,4"],
        "d4_e.dot": ["--theta", "2"],
    }
    for name, flags in cases.items():
        _, out = run("render", "D4", *flags)
        assert out.encode() == (GOLDEN / name).read_bytes(), name


def test_render_shapes():
    _, out = run("render", "D4", "--theta", "1,4", "--lambda", "2,3")
    assert out.count("fillcolor=black") == 2
    assert out.count("doublecircle") == 2
    assert 'xlabel="α"' in out.splitlines()[5]
    _, out = run("render", "A1")
    assert "--" not in out and "fillcolor" not in out and "doublecircle" not in out
    _, out = run("render", "B3")
    assert '2 -- 3 [label="2"];' in out
    assert out.endswith("}\n")


def test_classify_dot_format_matches_render():
    _, a = run("classify", "D4", "--theta", "1,4", "--lambda", "3", "--format", "dot")
    _, b = run("render", "D4", "--theta", "1,4", "--lambda", "3")
    assert a == b


def test_selfcheck():
    code, out = run("selfcheck")
    assert code == 0
    assert "FAIL" not in out


def test_console_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "wittvanish", "enumerate", "A1", "--format", "records"],
        capture_output=True,
    )
    assert proc.returncode == 0
    assert proc.stdout == (GOLDEN / "enumerate_a1.jsonl").read_bytes()
