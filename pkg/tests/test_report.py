import csv
import io
import json
import math

from hypothesis import given, strategies as st

from glaisher_lab.report import CSV_COLUMNS, COLUMNS, VerificationReport, reports_to_csv, reports_to_json

finite = st.floats(allow_nan=False, allow_infinity=False, width=64)


def make(lhs=0.1 + 0.2j, rhs=0.1 + 0.2j, **kw):
    kw.setdefault("runtime_ms", 12.5)
    return VerificationReport(family="TH1", lhs=lhs, rhs=rhs, tol=1e-10, n=3, a=2.0, **kw)


def test_pass_logic():
    assert make().passed
    assert not make(rhs=0.2).passed
    assert not make(converged=False).passed
    assert not make(side_checks_ok=False).passed
    assert not make(lhs=complex("nan")).passed


def test_json_record_shape():
    rec = json.loads(reports_to_json([make()]))
    assert list(rec) == list(COLUMNS)
    assert rec["runtime_ms"] is None
    assert json.loads(reports_to_json([make()], timing=True))["runtime_ms"] == 12.5


@given(finite, finite)
def test_json_round_trips_floats(x, y):
    rec = json.loads(reports_to_json([make(lhs=complex(x, y))]))
    assert rec["lhs_re"] == x and rec["lhs_im"] == y


def test_json_non_finite_is_null():
    rec = json.loads(reports_to_json([make(lhs=complex("nan"))]))
    assert rec["lhs_re"] is None


def test_csv_has_no_runtime():
    rows = list(csv.reader(io.StringIO(reports_to_csv([make(), make(rhs=1)]))))
    assert tuple(rows[0]) == CSV_COLUMNS
    assert "runtime_ms" not in rows[0]
    assert rows[1][CSV_COLUMNS.index("pass")] == "true"
    assert rows[2][CSV_COLUMNS.index("pass")] == "false"
    assert float(rows[1][CSV_COLUMNS.index("lhs_re")]) == 0.1


def test_output_is_deterministic():
    a = [make(runtime_ms=1.0), make(rhs=0)]
    b = [make(runtime_ms=99.0), make(rhs=0)]
    assert reports_to_json(a) == reports_to_json(b)
    assert reports_to_csv(a) == reports_to_csv(b)


def test_text_uses_ten_digits():
    line = make(lhs=math.pi, rhs=math.pi).to_text()
    assert "3.141592654" in line and "3.1415926536" not in line
