import csv
import io
import json
import subprocess
import sys

import pytest

from linbound.cli import main


def run(*argv):
    out = io.StringIO()
    code = main(list(argv), out=out)
    return code, out.getvalue()


def run_json(*argv):
    code, text = run(*argv)
    assert code == 0
    return json.loads(text)


def test_bounds_14_2():
    env = run_json("bounds", "--k", "14", "--e", "2")
    assert env["command"] == "bounds"
    ns = {r["kind"]: r["n"] for r in env["result"]}
    assert ns == {"HAM": 22, "COSET_C": 23}
    coset = env["result"][1]
    assert coset["witness_below"] == ["1400", "1540"]


def test_bounds_1_1_all_kinds():
    env = run_json("bounds", "--k", "1", "--e", "1")
    assert {r["kind"]: r["n"] for r in env["result"]} == {
        "HAM": 3, "COSET_C": 3, "N1_SCAN": 3, "N1_FORMULA": 3}


@pytest.mark.parametrize("argv", [
    ["bounds", "--k", "0", "--e", "1"],
    ["bounds", "--k", "x", "--e", "1"],
    ["table", "--e", "2"],
    ["nope"],
])
def test_usage_errors_exit_2(argv):
    with pytest.raises(SystemExit) as exc:
        main(argv)
    assert exc.value.code == 2


def test_scan_kind_needs_e1():
    assert run("bounds", "--k", "3", "--e", "2", "--kind", "scan")[0] == 3


def test_bounds_csv():
    code, text = run("bounds", "--k", "14", "--e", "2", "--csv")
    rows = list(csv.reader(io.StringIO(text)))
    assert rows[0] == ["kind", "k", "e", "n", "lhs_at_n", "rhs_at_n", "lhs_below", "rhs_below"]
    assert rows[2][:4] == ["COSET_C", "14", "2", "23"]


def test_table_staircase():
    env = run_json("table", "--e", "1", "--kmax", "80")
    rows = env["result"]
    assert len(rows) == 80
    assert [r["k"] for r in rows if r["step"] == 2] == [1, 4, 11, 26, 57]
    assert all(r["n_scan"] == r["formula"] == r["ham"] == r["coset"] for r in rows)


def test_table_gap_rows_csv_self_check():
    code, text = run("table", "--e", "2", "--kmax", "100", "--only-gaps", "--csv", "--self-check")
    assert code == 0
    rows = list(csv.reader(io.StringIO(text)))
    assert rows[0] == ["k", "ham", "coset"]
    assert ["14", "22", "23"] in rows and ["78", "90", "91"] in rows


def test_table_empty_has_header():
    code, text = run("table", "--e", "1", "--kmax", "50", "--only-gaps", "--csv")
    assert text.splitlines() == ["k,ham,coset,n_scan,formula,step"]


def test_construct():
    env = run_json("construct", "--k", "4")
    assert {k: env["result"][k] for k in ("n", "k", "d", "rank")} == {"n": 7, "k": 4, "d": 3, "rank": 3}
    assert env["result"]["check_matrix"] == ["1001101", "0101011", "0010111"]
    code, text = run("construct", "--k", "4", "--matrix")
    assert text == "1001101\n0101011\n0010111\n"


def test_construct_errors():
    assert run("construct", "--k", "4", "--n", "6")[0] == 3
    assert run("construct", "--k", "58")[0] == 4


def test_cosets_constructed():
    env = run_json("cosets", "--k", "4", "--n", "7", "--e", "1")
    res = env["result"]
    assert len(res["records"]) == 8
    assert all(p["passed"] for p in res["lemma_checks"].values())
    assert (res["theorem_lhs"], res["theorem_rhs"]) == ("21", "21")


def test_cosets_from_check_file(tmp_path):
    path = tmp_path / "rep5.txt"
    path.write_text("10001\n01001\n00101\n00011\n")
    env = run_json("cosets", "--check", str(path), "--e", "2")
    assert env["result"]["min_distance"] == 5
    assert env["result"]["theorem_holds"] is True


def test_cosets_errors():
    assert run("cosets", "--k", "4", "--n", "7", "--e", "2")[0] == 3
    assert run("cosets", "--k", "30", "--e", "1")[0] == 4
    assert run("cosets", "--check", "/nonexistent/h.txt", "--e", "1")[0] == 3


def test_search():
    env = run_json("search", "--k", "2", "--e", "2")
    res = env["result"]
    assert res["status"] == "FOUND" and res["n"] == 8
    assert res["refuted"] == [6, 7]
    assert len(res["certificate"]) == 6


def test_search_exit_codes():
    assert run("search", "--k", "5", "--e", "2", "--budget", "50")[0] == 5
    assert run("search", "--k", "2", "--e", "2", "--n-max", "7")[0] == 0
    assert run("search", "--k", "2", "--e", "2", "--n-max", "5")[0] == 3


def test_output_is_deterministic():
    for argv in (["table", "--e", "3", "--kmax", "60"], ["cosets", "--k", "5", "--e", "1"],
                 ["search", "--k", "3", "--e", "2"]):
        assert run(*argv) == run(*argv)


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "linbound", "bounds", "--k", "17", "--e", "3", "--csv"],
                          capture_output=True, text=True, check=True)
    assert proc.stdout.splitlines()[1].startswith("HAM,17,3,29,")
