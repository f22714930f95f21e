import csv
import json

import pytest

from qqengine.cli import main


def run(tmp_path, *args, name="out.json"):
    out = tmp_path / name
    code = main([*args, "--out", str(out)])
    return code, out.read_text(encoding="utf-8") if out.exists() else None


def test_zr_json_and_direction(tmp_path):
    code, h = run(tmp_path, "zr", "--r", "1", "--cap-q", "2", "--cap-a", "2", "--seed", "7", "--direction", "h")
    assert code == 0
    data = json.loads(h)
    terms = data["runs"][0]["normalized_zr"]["terms"]
    assert terms[0] == {"exp": [0, 0], "num": "1", "den": "1"}
    assert "zr_full" in data["runs"][0]
    assert data["conventions"]["cell_index_base"] == 0
    code, v = run(
        tmp_path, "zr", "--r", "1", "--cap-q", "2", "--cap-a", "2", "--seed", "7", "--direction", "v", name="v.json"
    )
    assert code == 0
    assert json.loads(v)["runs"][0]["normalized_zr"] == data["runs"][0]["normalized_zr"]


def test_zr_csv(tmp_path):
    code, text = run(tmp_path, "zr", "--cap-q", "2", "--cap-a", "2", "--seed", "7", "--format", "csv", name="z.csv")
    assert code == 0
    rows = list(csv.reader(text.splitlines()))
    assert rows[0] == ["Q", "A", "num", "den"]
    exps = [tuple(map(int, r[:2])) for r in rows[1:]]
    assert exps == sorted(exps) and len(set(exps)) == len(exps)


def test_output_is_byte_identical(tmp_path):
    args = ("zr", "--r", "2", "--cap-q", "1", "--cap-a", "1", "--cap-b", "1", "--seed", "3")
    _, a = run(tmp_path, *args, name="a.json")
    _, b = run(tmp_path, *args, name="b.json")
    assert a == b


def test_chiy_m1_columns(tmp_path):
    code, text = run(tmp_path, "chiy", "--r", "1", "--cap-q", "2")
    assert code == 0
    assert json.loads(text)["runs"][0]["m1"] == ["1", "1", "2"]
    code, text = run(tmp_path, "chiy", "--r", "2", "--cap-q", "1", name="c2.json")
    assert json.loads(text)["runs"][0]["m1"][1] == "2"


@pytest.mark.parametrize(
    "args",
    [
        ("verify", "thm-3-5", "--r", "1", "--cap-a", "3", "--seeds", "3,5,11"),
        ("verify", "oracle-contraction"),
        ("verify", "prop-3-4", "--r", "2", "--cap-q", "2", "--cap-m", "3"),
    ],
)
def test_verify_examples_exit_zero(tmp_path, args):
    code, text = run(tmp_path, *args)
    assert code == 0
    assert json.loads(text)["passed"] is True


def test_verify_mismatch_exit_one(tmp_path):
    code, text = run(tmp_path, "verify", "identity-3-16", "--variant", "printed")
    assert code == 1
    report = json.loads(text)
    assert {"got", "expected", "lam"} <= set(report["mismatch"])


@pytest.mark.parametrize(
    "args,code",
    [
        (("zr", "--cap-q", "-1"), 2),
        (("zr", "--direction", "x"), 2),
        (("zr", "--format", "csv", "--seeds", "1,2"), 2),
        (("verify", "lemma-3-9", "--cap-q", "2"), 2),
        (("zr", "--nope"), 2),
        (("zr", "--genericity-bound", "3"), 3),
        (("zr", "--point", "1,2,3"), 3),
        (("verify", "thm-3-5", "--genericity-bound", "2"), 3),
    ],
)
def test_exit_codes(args, code, capsys):
    assert main(list(args)) == code
