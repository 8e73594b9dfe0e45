import csv
import io
import json
import subprocess
import sys

import pytest
from gmpy2 import mpq

from qdisc.cli import CSV_FIELDS, ScanRecord, main, scan, spot_check
from qdisc.closed_form import discriminant_closed_form
from qdisc.exact_core import Poly
from qdisc.params import QuadrinomialParams as QP


def run(*argv):
    out = io.StringIO()
    code = main(list(argv), out=out)
    return code, out.getvalue()


@pytest.fixture(autouse=True)
def single_worker(monkeypatch):
    monkeypatch.setenv("QDISC_THREADS", "1")


def test_disc_polynomial():
    assert run("disc", "--n", "3", "--a", "0", "--b", "-1") == (0, "0,0,-27,0,4\n")


def test_disc_zero_polynomial():
    assert run("disc", "--n", "4", "--a", "0", "--b", "0") == (0, "0\n")


def test_disc_value():
    assert run("disc", "--n", "5", "--a", "0", "--b", "1", "--t", "1") == (0, "3233\n")


def test_disc_negative_fraction_and_round_trip():
    code, text = run("disc", "--n", "6", "--a", "-3/2", "--b", "5/7")
    assert code == 0
    assert Poly.from_text(text.strip(), "t") == discriminant_closed_form(QP(6, mpq(-3, 2), mpq(5, 7)))
    code2, text2 = run("disc", "--n", "6", "--a=-3/2", "--b", "5/7")
    assert (code2, text2) == (code, text)


@pytest.mark.parametrize(
    "argv",
    [
        ("disc", "--n", "5", "--a", "1.5", "--b", "1"),
        ("disc", "--n", "5", "--a", "1/0", "--b", "1"),
        ("disc", "--n", "2", "--a", "1", "--b", "1"),
        ("disc", "--n", "5", "--a", "1"),
        ("roots", "--poly", "0"),
        ("roots", "--poly", "1,,2"),
        ("verify", "--n-max", "2"),
        ("verify", "--n-max", "5", "--trials", "0"),
        ("scan", "--n", "5", "--range", "0", "--t-range", "1"),
        ("scan", "--n", "5", "--range", "1", "--t-range", "1", "--format", "xml"),
        ("nonsense",),
    ],
)
def test_usage_errors_exit_2(argv):
    assert run(*argv)[0] == 2


def test_roots_examples():
    code, text = run("roots", "--poly", "1,0,1")
    assert code == 0 and json.loads(text) == {"count": 0, "intervals": [], "exact_roots": []}
    assert json.loads(run("roots", "--poly", "0,-1,0,1")[1])["count"] == 3
    rep = json.loads(run("roots", "--poly", "1,1,1,0,0,1")[1])
    assert rep["count"] == 1
    (lo, hi), = rep["intervals"]
    assert mpq(lo) < -1 <= mpq(hi)


def test_roots_negative_leading_literal():
    code, text = run("roots", "--poly", "-2,0,1")
    assert code == 0 and json.loads(text)["count"] == 2


def test_verify_reports():
    code, text = run("verify", "--n-max", "8", "--trials", "20", "--seed", "42")
    lines = text.splitlines()
    assert code == 0
    assert lines[-1] == "OK 6/6"
    assert lines[:-1] == [f"n={n} PASS 20/20" for n in range(3, 9)]
    assert run("verify", "--n-max", "8", "--trials", "20", "--seed", "42")[1] == text


def test_verify_n3_only():
    assert run("verify", "--n-max", "3", "--trials", "1", "--seed", "1") == (0, "n=3 PASS 1/1\nOK 1/1\n")


def test_scan_small_grid(tmp_path):
    path = tmp_path / "scan.csv"
    code, _ = run("scan", "--n", "5", "--range", "1", "--t-range", "1", "--out", str(path))
    assert code == 0
    text = path.read_text()
    assert text.splitlines()[0] == "n,a,b,t,disc,abs_disc,n_real_roots"
    rows = list(csv.DictReader(io.StringIO(text)))
    assert len(rows) == 8
    assert not any(r["a"] == "0" and r["b"] == "0" for r in rows)
    rec = next(r for r in rows if (r["a"], r["b"], r["t"]) == ("1", "1", "1"))
    assert int(rec["disc"]) == discriminant_closed_form(QP(5, 1, 1))(1)
    keys = [(int(r["disc"]) == 0, int(r["abs_disc"]), int(r["a"]), int(r["b"]), int(r["t"])) for r in rows]
    assert keys == sorted(keys)


def test_scan_zero_discs_last_and_b0_records():
    # x^4 + 4(x^2 + 1) = (x^2 + 2)^2 gives a zero discriminant at (a, b, t) = (0, 1, 4)
    records = scan(4, 1, 4)
    assert (records[-1].a, records[-1].b, records[-1].t, records[-1].disc) == (0, 1, 4, 0)
    zeros = [r.disc == 0 for r in records]
    assert zeros == sorted(zeros)
    assert any(zeros)
    for r in records:
        if r.b == 0:
            d = discriminant_closed_form(QP(4, r.a, 0))
            assert d[3] == 0 and r.disc == d(r.t)


def test_scan_json_strings(tmp_path):
    path = tmp_path / "scan.json"
    assert run("scan", "--n", "6", "--range", "1", "--t-range", "2", "--format", "json", "--out", str(path))[0] == 0
    data = json.loads(path.read_text())
    assert len(data) == 16
    assert all(set(d) == set(CSV_FIELDS) and all(isinstance(v, str) for v in d.values()) for d in data)


def test_scan_unwritable(tmp_path):
    assert run("scan", "--n", "5", "--range", "1", "--t-range", "1", "--out", str(tmp_path / "no" / "x.csv"))[0] == 2


def test_scan_deterministic_across_workers(monkeypatch):
    one = run("scan", "--n", "7", "--range", "2", "--t-range", "2")[1]
    monkeypatch.setenv("QDISC_THREADS", "3")
    three = run("scan", "--n", "7", "--range", "2", "--t-range", "2")[1]
    assert one == three
    assert len(one.splitlines()) == 1 + 24 * 2


def test_bad_thread_env(monkeypatch):
    monkeypatch.setenv("QDISC_THREADS", "zero")
    assert run("scan", "--n", "5", "--range", "1", "--t-range", "1")[0] == 2


def test_spot_check_catches_tampering():
    records = scan(5, 2, 3)
    assert spot_check(records) == []
    forged = [ScanRecord(r.n, r.a, r.b, r.t, r.disc + 1, r.n_real_roots) for r in records]
    assert spot_check(forged)


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "qdisc", "disc", "--n", "5", "--a", "0", "--b", "1", "--t", "1"],
        capture_output=True,
        text=True,
    )
    assert proc.returncode == 0 and proc.stdout == "3233\n"
