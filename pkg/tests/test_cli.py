"""Command-line behavior: output shapes, formats, exit codes."""

import json

import pytest

from rascent.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_enumerate_smallest_families(capsys):
    code, out, _ = run(capsys, "enumerate", "--family", "rasc", "--n", "3")
    assert code == 0
    assert out == "111\n212\n"
    code, out, _ = run(capsys, "enumerate", "--family", "rasc", "--n", "2")
    assert (code, out) == (0, "11\n")


def test_enumerate_with_avoidance(capsys):
    code, out, _ = run(capsys, "enumerate", "--family", "rasc", "--n", "4",
                       "--avoid", "123")
    assert code == 0
    assert out.splitlines() == ["1111", "2121", "2122", "2212"]


def test_enumerate_jsonl_and_csv(capsys):
    code, out, _ = run(capsys, "enumerate", "--n", "3", "--format", "jsonl")
    assert code == 0
    rows = [json.loads(line) for line in out.splitlines()]
    assert rows == [{"n": 3, "word": "111"}, {"n": 3, "word": "212"}]
    code, out, _ = run(capsys, "enumerate", "--n", "3", "--format", "csv")
    assert out.splitlines() == ["n,word", "3,111", "3,212"]


def test_enumerate_cap_violation(capsys):
    code, _, err = run(capsys, "enumerate", "--n", "15")
    assert code == 1
    assert "cap" in err


def test_enumerate_other_families(capsys):
    code, out, _ = run(capsys, "enumerate", "--family", "asc", "--n", "3")
    assert out.splitlines() == ["111", "112", "121", "122", "123"]
    code, out, _ = run(capsys, "enumerate", "--family", "desbot", "--n", "3")
    assert code == 0


def test_count_cross_checked(capsys):
    code, out, _ = run(capsys, "count", "--avoid", "132", "--n-max", "8",
                       "--method", "brute,oracle")
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "n=1  brute=1  oracle=1  ok"
    assert lines[-1] == "n=8  brute=275  oracle=275  ok"


def test_count_tree_against_oracle(capsys):
    code, out, _ = run(capsys, "count", "--n-max", "6", "--method", "tree,oracle")
    assert code == 0
    counts = [line.split("tree=")[1].split()[0] for line in out.splitlines()]
    assert counts == ["1", "1", "2", "5", "15", "53"]


def test_count_open_row(capsys):
    code, out, _ = run(capsys, "count", "--avoid", "111", "--n-max", "8",
                       "--method", "brute")
    assert code == 0
    counts = [line.split("brute=")[1] for line in out.splitlines()]
    assert counts == ["1", "1", "1", "2", "4", "10", "29", "97"]


def test_count_jsonl_has_agreement_rows(capsys):
    code, out, _ = run(capsys, "count", "--n-max", "3", "--method", "brute,oracle",
                       "--format", "jsonl")
    assert code == 0
    rows = [json.loads(line) for line in out.splitlines()]
    assert {"n": 1, "method": "brute", "count": "1"} in rows
    assert {"n": 3, "pass": True} in rows


def test_count_csv_layout(capsys):
    code, out, _ = run(capsys, "count", "--n-max", "3", "--method", "brute",
                       "--format", "csv")
    assert out.splitlines() == ["n,method,count", "1,brute,1", "2,brute,1", "3,brute,2"]


def test_count_dump_labels(capsys):
    code, out, _ = run(capsys, "count", "--n-max", "4", "--method", "tree",
                       "--dump-labels")
    assert code == 0
    assert "level 1: 1,1:1" in out
    assert "level 3: 1,1:1 2,1:1 2,2:2 3,3:1" in out


def test_count_usage_errors(capsys):
    code, _, err = run(capsys, "count", "--method", "sorcery")
    assert code == 2
    code, _, err = run(capsys, "count", "--method", "tree", "--avoid", "132")
    assert code == 2
    code, _, err = run(capsys, "count", "--method", "tree", "--family", "cayley")
    assert code == 2
    code, _, err = run(capsys, "count", "--n-max", "3", "--method", "tree",
                       "--dump-labels", "--format", "csv")
    assert code == 2


def test_count_cap_violation(capsys):
    code, _, err = run(capsys, "count", "--n-max", "15", "--method", "brute")
    assert code == 1


def test_verify_suite_passes(capsys):
    code, out, _ = run(capsys, "verify", "--suite", "series", "--n-max", "5")
    assert code == 0
    assert all(line.startswith("PASS") for line in out.splitlines())


def test_verify_jsonl(capsys):
    code, out, _ = run(capsys, "verify", "--suite", "phi", "--n-max", "5",
                       "--format", "jsonl")
    assert code == 0
    rows = [json.loads(line) for line in out.splitlines()]
    assert all(row["pass"] is True for row in rows)
    assert {row["suite"] for row in rows} == {"phi"}


def test_gf_outputs(capsys):
    code, out, _ = run(capsys, "gf", "--name", "fishburn", "--order", "7")
    assert (code, out) == (0, "1 2 5 15 53 217 1014\n")
    code, out, _ = run(capsys, "gf", "--name", "b132", "--order", "4")
    assert (code, out) == (0, "1 1 2 5\n")
    code, out, _ = run(capsys, "gf", "--name", "b123", "--order", "3")
    assert (code, out) == (0, "1 1 2\n")


def test_gf_formats_and_guard(capsys):
    code, out, _ = run(capsys, "gf", "--name", "b213", "--order", "4",
                       "--format", "csv")
    assert out.splitlines() == ["n,count", "1,1", "2,1", "3,2", "4,5"]
    code, out, _ = run(capsys, "gf", "--name", "b213", "--order", "3",
                       "--format", "jsonl")
    assert [json.loads(l) for l in out.splitlines()] == [
        {"n": 1, "count": "1"}, {"n": 2, "count": "1"}, {"n": 3, "count": "2"}]
    code, _, err = run(capsys, "gf", "--name", "b213", "--order", "65")
    assert code == 2


def test_wilf_report(capsys):
    code, out, _ = run(capsys, "wilf", "--pattern-length", "2", "--n-max", "6")
    assert code == 0
    doc = json.loads(out)
    assert doc["status"] == "conjectural up to n_max"
    assert doc["pattern_length"] == 2
    assert [cls["patterns"] for cls in doc["classes"]] == [["11"], ["12", "21"]]
    assert doc["classes"][1]["counts"] == ["1"] * 6


def test_wilf_guards(capsys):
    code, _, _ = run(capsys, "wilf", "--pattern-length", "5", "--n-max", "4")
    assert code == 2
    code, _, _ = run(capsys, "wilf", "--pattern-length", "2", "--n-max", "15")
    assert code == 1


def test_argparse_usage_exit(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["enumerate", "--family", "bogus", "--n", "3"])
    assert exc.value.code == 2
    capsys.readouterr()


def test_byte_determinism(capsys):
    a = run(capsys, "wilf", "--pattern-length", "3", "--n-max", "6")
    b = run(capsys, "wilf", "--pattern-length", "3", "--n-max", "6")
    assert a == b
    a = run(capsys, "verify", "--suite", "forms", "--n-max", "5")
    b = run(capsys, "verify", "--suite", "forms", "--n-max", "5")
    assert a == b
