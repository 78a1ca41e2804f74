import io
import json
import subprocess
import sys

import pytest

from hankel_lab.cli import MAX_EXPAND_ORDER, MAX_HANKEL_ORDER, run


def call(*argv, stdin=""):
    out, err = io.StringIO(), io.StringIO()
    code = run(list(argv), stdin=io.StringIO(stdin), stdout=out, stderr=err)
    return code, out.getvalue(), err.getvalue()


def test_expand():
    code, out, _ = call("expand", "--powers", "1,1,3,4,8,16", "--terms", "14")
    assert code == 0
    assert out.strip() == "1,1,2,4,8,17,36,76,161,342,726,1541,3272,6948,14753"


def test_expand_rule_and_signs():
    code, out, _ = call("expand", "--rule", "pentagonal_cf_powers", "--signs=--++", "--terms", "16")
    assert code == 0
    assert out.strip() == "1,1,2,4,7,12,21,37,65,115,204,361,638,1128,1994,3524,6230"


def test_expand_rule_param():
    code, out, _ = call("expand", "--rule", "gap_template", "--param", "r=3", "--terms", "18")
    assert out.strip() == "1,1,1,1,2,3,4,6,10,15,23,36,58,90,145,230,377,601,1000"


def test_expand_json_matches_plain():
    _, plain, _ = call("expand", "--powers", "1,1,2", "--terms", "11")
    code, out, _ = call("expand", "--powers", "1,1,2", "--terms", "11", "--format", "json")
    d = json.loads(out)
    assert code == 0 and d["schema_version"] == 1 and d["kind"] == "expansion"
    assert ",".join(map(str, d["terms"])) == plain.strip()


def test_expand_limits():
    code, _, err = call("expand", "--powers", "1", "--terms", str(MAX_EXPAND_ORDER + 1))
    assert code == 2 and "--terms" in err
    assert call("expand", "--rule", "catalan", "--terms", "3")[0] == 2
    assert call("expand", "--rule", "nope", "--terms", "3")[0] == 2
    assert call("expand", "--powers", "1,x", "--terms", "3")[0] == 2
    assert call("expand", "--powers", "1,0", "--terms", "3")[0] == 2


def test_hankel():
    code, out, _ = call("hankel", "--seq", "1,1,2,5,14,42,132")
    assert (code, out.strip()) == (0, "1,1,1,1")
    code, out, _ = call("hankel", "--seq", "1 1 1 1 2 3 4 6 10 15 23 36 58 90 145 230 377 601 1000", "--shift", "1")
    assert out.strip() == "1,0,-1,0,1,0,-1,0,1"


def test_hankel_prepend():
    seq = "1,1,1,1,2,3,4,6,10,15,23,36,58,90,145,230,377,601,1000"
    code, out, _ = call("hankel", "--seq", seq, "--prepend", "1,1")
    assert out.strip() == "1,0,0,0,0,1,1,2,2,3,3"


def test_hankel_usage_errors():
    assert call("hankel", "--seq", "")[0] == 2
    assert call("hankel", "--seq", "1,2", "--shift", "2")[0] == 2
    assert call("hankel", "--seq", "1,2,3", "--order", "5")[0] == 2
    assert call("hankel", "--seq", "1,2,3", "--shift", "-1")[0] == 2
    long_seq = ",".join(["1"] * (2 * MAX_HANKEL_ORDER + 5))
    assert call("hankel", "--seq", long_seq)[0] == 2
    assert call("hankel", "--seq", long_seq, "--order", "3")[0] == 0


def test_at_file_and_stdin(tmp_path):
    f = tmp_path / "seq.txt"
    f.write_text("1 1 2\n5 14\n")
    assert call("hankel", "--seq", f"@{f}")[1].strip() == "1,1,1"
    assert call("hankel", "--seq", "@-", stdin="1,1,2,5,14")[1].strip() == "1,1,1"
    assert call("hankel", "--seq", f"@{tmp_path / 'missing'}")[0] == 2


def test_p2b_b2p():
    assert call("p2b", "--powers", "1,1,3,4,8,16")[1].strip() == "0,1,3,5,11,21"
    assert call("b2p", "--pattern", "0,1,1,3,5,11")[1].strip() == "1,1,1,2,4,8"
    code, out, _ = call("b2p", "--pattern", "0,1,1,3,3,6,6", "--format", "json")
    assert json.loads(out)["multiplicities"] == [[0, 1], [1, 2], [3, 2], [6, 2]]


def test_b2p_not_representable():
    code, _, err = call("b2p", "--pattern", "0,1,1,1")
    assert code == 2 and "error" in err


def test_check_pass():
    code, out, _ = call("check", "--pattern", "0,1,2,6,9,18,24,40", "--signs", "-", "--order", "20")
    assert code == 0
    assert out.splitlines()[0] == "verdict: PASS"


def test_check_rules():
    assert call("check", "--rule", "threes_cf_powers", "--order", "11")[0] == 0
    assert call("check", "--rule", "a028724_pattern", "--order", "20")[0] == 0
    code, out, _ = call("check", "--rule", "pentagonal_cf_powers", "--signs=--++", "--order", "20", "--format", "json")
    d = json.loads(out)
    assert code == 0 and d["verdict"] == "PASS" and d["h"]["values"][:3] == [1, 1, -1]


def test_check_errors():
    assert call("check", "--pattern", "0,1,1,1,2", "--order", "4")[0] == 2
    assert call("check", "--pattern", "0,1,3", "--order", "1")[0] == 2
    assert call("check", "--pattern", "0,1,3", "--order", str(MAX_HANKEL_ORDER + 1))[0] == 2


def test_convolve():
    h = "1,1,0,-1,0,0,1,0,0,0,1,0,0,0,0,1,0,0,0,0,0,-1,0"
    assert call("convolve", "--seq", h, "--even")[1].strip() == "1,-1,2,1,0,2,1,0,0,2,1,2"
    assert call("convolve", "--seq", "1,1")[1].strip() == "1,0"


def test_catalog():
    code, out, _ = call("catalog")
    assert code == 0 and "jacobsthal" in out
    assert call("catalog", "jacobsthal", "--terms", "7")[1].strip() == "0,1,1,3,5,11,21,43"
    assert call("catalog", "gap_template", "--param", "r=4", "--terms", "4")[1].strip() == "1,4,5,2,2"
    assert call("catalog", "nope")[0] == 2
    assert call("catalog", "jacobsthal", "--param", "r=1")[0] == 2
    code, out, _ = call("catalog", "--errata", "--format", "json")
    assert len(json.loads(out)["errata"]) >= 5


def test_bad_arguments_exit_2():
    code, _, err = call()
    assert code == 2 and "usage" in err
    assert call("expand")[0] == 2
    assert call("frobnicate")[0] == 2


def test_reproduce_subset():
    code, out, _ = call("reproduce-paper", "--only", "1", "--only", "14")
    assert code == 0
    assert out.strip().endswith("2/2 criteria passed")


def test_console_entry_point():
    proc = subprocess.run([sys.executable, "-m", "hankel_lab", "p2b", "--powers", "1,1,2,2,2"],
                          capture_output=True, text=True)
    assert proc.returncode == 0 and proc.stdout.strip() == "0,1,2,3,4"
