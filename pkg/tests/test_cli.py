import csv
import io
import json

import pytest

from abelcover.cli import CSV_FIELDS, run


def invoke(capsys, *argv):
    code = run(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


CI_12 = ("--ambient", "12", "--degrees", "2,4", "--cover", "cyclic:3,2")


def test_classify_markdown(capsys):
    code, out, _ = invoke(capsys, "classify", *CI_12)
    assert code == 0
    assert "| 10 | 3 | 2 |  | 12 | -3 | (2,4) | 1417176 | 0 |" in out
    assert "Embedding" in out and "24·3^10" in out


def test_invariants_json(capsys):
    code, out, _ = invoke(capsys, "invariants", "--ambient", "26", "--degrees", "2,4,6,8", "--cover", "cyclic:5,2",
                          "--format", "json")
    assert code == 0
    row = json.loads(out)["rows"][0]
    assert (row["pg"], row["Km"], row["m"], row["n_total"]) == (27, 1920, 22, 5)


def test_ci_check_amgm(capsys):
    code, out, _ = invoke(capsys, "ci-check", "--ambient", "8", "--degrees", "4,4,4,4,4", "--cover", "cyclic:3,2")
    assert code == 0 and "Infeasible(AMGM)" in out


def test_ci_check_budget_exit(capsys):
    code, _, err = invoke(capsys, "ci-check", "--ambient", "20", "--degrees", "2,2,4,6", "--cover", "cyclic:4,2",
                          "--budget", "1")
    assert code == 2 and "budget" in err


def test_json_round_trip(capsys):
    _, out, _ = invoke(capsys, "--format", "json", "enumerate", "--family", "cyclic", "--behavior", "emb-a",
                       "--m-range", "5..7", "--s-range", "1..1", "--n", "3")
    assert json.dumps(json.loads(out), indent=2) + "\n" == out
    doc = json.loads(out)
    assert set(doc) == {"query", "rows"}
    assert {"m", "n_total", "k", "l", "N", "s", "multidegree", "Lm", "Km", "pg", "behaviors", "summary",
            "ci_status", "obstruction", "flags"} <= set(doc["rows"][0])


def test_csv_header_and_values(capsys):
    _, out, _ = invoke(capsys, "invariants", *CI_12, "--format", "csv")
    assert out.splitlines()[0] == "m,n,k,l,N,s,multidegree,Lm,Km,pg,summary,ci_status,obstruction"
    row = next(csv.DictReader(io.StringIO(out)))
    assert tuple(row) == CSV_FIELDS
    assert row["Km"] == str(24 * 3**10) and row["multidegree"] == "(2,4)"


def test_formats_agree(capsys):
    _, j, _ = invoke(capsys, "invariants", *CI_12, "--format", "json")
    _, c, _ = invoke(capsys, "invariants", *CI_12, "--format", "csv")
    jrow = json.loads(j)["rows"][0]
    crow = next(csv.DictReader(io.StringIO(c)))
    for key in ("m", "N", "s", "Lm", "Km", "pg"):
        assert str(jrow[key]) == crow[key]
    assert jrow["summary"] == crow["summary"] and jrow["ci_status"] == crow["ci_status"]


def test_out_file(tmp_path, capsys):
    target = tmp_path / "rows.csv"
    code, out, _ = invoke(capsys, "invariants", *CI_12, "--format", "csv", "--out", str(target))
    assert code == 0 and out == ""
    assert target.read_text().startswith("m,n,k,l,N,s")


def test_enumerate_markdown_contains_table(capsys):
    code, out, _ = invoke(capsys, "enumerate", "--family", "cyclic", "--behavior", "preserved", "--m-range", "5..11",
                          "--s-range=-1..1", "--n-range", "3..4", "--k", "3", "--no-obstruction")
    assert code == 0
    for cells in ("| 7 | 3 | 3 |  | 8 | -1 | (2) | -6 | 0 |", "| 9 | 4 | 3 |  | 11 | 1 | (2,2) | 16 | 12 |"):
        assert cells in out


def test_enumerate_znz2_halving(capsys):
    code, out, _ = invoke(capsys, "enumerate", "--family", "znz2", "--behavior", "halving", "--m-range", "6..8",
                          "--s-range=-1..1", "--k", "5", "--l", "2", "--format", "json")
    rows = json.loads(out)["rows"]
    assert code == 0 and any(r["N"] == 9 and r["multidegree"] == [2] for r in rows)


def test_families(capsys):
    _, out, _ = invoke(capsys, "family", "codim3", "--k", "2", "--format", "json")
    assert json.loads(out)["rows"][0]["Lm"] == 192
    _, out, _ = invoke(capsys, "family", "rational", "--a", "3", "--b", "4", "--k", "2", "--l", "3", "--format", "json")
    assert json.loads(out)["rows"][0]["s"] == 5
    _, out, _ = invoke(capsys, "family", "half", "--n", "3", "--m", "3", "--format", "json")
    assert json.loads(out)["rows"][0]["obstruction"]["status"] == "Infeasible"
    _, out, _ = invoke(capsys, "family", "recipe", "--criterion", "bir", "--family", "cyclic", "--m", "17", "--n", "4",
                       "--s=-1", "--N", "20", "--format", "json")
    assert [2, 6, 6] in [r["multidegree"] for r in json.loads(out)["rows"]]


def test_split_cover_and_tower(capsys):
    code, out, _ = invoke(capsys, "classify", "--ambient", "9", "--degrees", "2", "--cover", "split:2,5,7:7",
                          "--tower", "5:2", "--format", "json")
    row = json.loads(out)["rows"][0]
    assert code == 0 and row["summary"] == "HalvesDegree" and row["s"] == -1


@pytest.mark.parametrize(
    "argv",
    [
        ("classify", "--ambient", "4", "--degrees", "2,4,6", "--cover", "cyclic:4,2"),
        ("classify", "--ambient", "12", "--degrees", "1,4", "--cover", "cyclic:3,2"),
        ("classify", *CI_12[:4], "--cover", "cyclic:3"),
        ("classify", *CI_12[:4], "--cover", "torus:3,2"),
        ("classify", *CI_12, "--bogus"),
        ("classify", *CI_12, "--tower", "4:2"),
        ("enumerate", "--family", "cyclic", "--m-range", "5..3", "--s-range", "0..1"),
        ("enumerate", "--family", "cyclic", "--m-range", "x", "--s-range", "0..1"),
        ("family", "codim3", "--k", "3"),
        ("family", "recipe", "--criterion", "emb-a", "--family", "cyclic", "--m", "9", "--n", "3", "--s=-1", "--N",
         "13"),
        ("family", "recipe", "--criterion", "halving", "--family", "cyclic", "--m", "9", "--n", "3", "--s=-1", "--N",
         "13"),
        (),
    ],
)
def test_invalid_input_exit_1(capsys, argv):
    code, _, err = invoke(capsys, *argv)
    assert code == 1 and err.startswith("error:")
