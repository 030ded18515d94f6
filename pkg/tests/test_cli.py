"""Command-line interface: output pins, CSV determinism, exit codes."""

from __future__ import annotations

import json

import pytest
from click.testing import CliRunner

from wrightasym.cli import main
from wrightasym.saddles import stokes_boundary


@pytest.fixture()
def runner():
    return CliRunner()


def _run(runner, *argv):
    return runner.invoke(main, list(argv), catch_exceptions=False)


# -- eval -----------------------------------------------------------------

def test_eval_plus_pinned_value(runner):
    res = _run(runner, "eval", "--lambda", "3", "--a", "0.2",
               "--x", "20", "--sign", "plus")
    assert res.exit_code == 0
    assert "7.07066050e+05" in res.output


def test_eval_small_x(runner):
    res = _run(runner, "eval", "--lambda", "1", "--a", "1",
               "--x", "0.0001", "--sign", "minus")
    assert res.exit_code == 0
    assert "9.99067797e-01" in res.output


def test_eval_json_payload(runner):
    res = _run(runner, "eval", "--lambda", "1.5", "--a", "0.5",
               "--x", "40", "--sign", "minus", "--json")
    assert res.exit_code == 0
    payload = json.loads(res.output)
    assert payload["value"] == pytest.approx(-202.374963445, rel=1e-9)
    assert payload["significant_digits"] >= 40
    assert not payload["low_precision"]


def test_eval_domain_error_exits_2(runner):
    res = _run(runner, "eval", "--lambda", "-2", "--a", "1",
               "--x", "10", "--sign", "minus")
    assert res.exit_code == 2


def test_eval_precision_loss_exits_3(runner):
    res = _run(runner, "eval", "--lambda", "-0.25", "--a", "1",
               "--x", "200", "--sign", "minus", "--precision", "30")
    assert res.exit_code == 3


def test_eval_low_precision_flag_exits_3(runner):
    res = _run(runner, "eval", "--lambda", "1.5", "--a", "0.5",
               "--x", "80", "--sign", "minus", "--precision", "30")
    assert res.exit_code == 3
    assert "raise --precision" in res.output


def test_eval_csv_deterministic(runner, tmp_path):
    p1, p2 = tmp_path / "a.csv", tmp_path / "b.csv"
    for p in (p1, p2):
        res = _run(runner, "eval", "--lambda", "1.5", "--a", "0.5",
                   "--x", "40", "--sign", "minus", "--out", str(p))
        assert res.exit_code == 0
    assert p1.read_bytes() == p2.read_bytes()
    text = p1.read_text()
    assert text.startswith("# wright eval\n# version ")
    assert "\r" not in text
    header_free = [ln for ln in text.splitlines() if not ln.startswith("#")]
    assert header_free[0] == "value,significant_digits,terms"


# -- expand ---------------------------------------------------------------

def test_expand_real_saddle_pinned_error(runner):
    res = _run(runner, "expand", "--lambda", "-0.25", "--a", "1",
               "--x", "40", "--sign", "minus", "--order", "5")
    assert res.exit_code == 0
    assert "route: real-saddle" in res.output
    assert "6.262e-14" in res.output


def test_expand_auto_double_route(runner):
    res = _run(runner, "expand", "--lambda", "1", "--a", "1",
               "--x", "40", "--sign", "minus")
    assert res.exit_code == 0
    assert "route: double-saddle" in res.output


def test_expand_plus_chain_components(runner):
    res = _run(runner, "expand", "--lambda", "3", "--a", "0.2",
               "--x", "20", "--sign", "plus", "--optimal")
    assert res.exit_code == 0
    assert "route: chain" in res.output
    assert "I_0" in res.output and "I_1" in res.output


def test_expand_flag_conflict_exits_2(runner):
    res = _run(runner, "expand", "--lambda", "1.5", "--a", "0.5",
               "--x", "40", "--sign", "minus", "--order", "3", "--optimal")
    assert res.exit_code == 2


def test_expand_json_terms(runner):
    res = _run(runner, "expand", "--lambda", "1.5", "--a", "0.5",
               "--x", "40", "--sign", "minus", "--order", "4", "--json")
    payload = json.loads(res.output)
    assert payload["route"] == "conjugate-pair"
    assert payload["truncation_index"] == 4
    assert len(payload["terms"]) == 5
    assert payload["relative_error"] < 1e-6


def test_expand_csv_terms_schema(runner, tmp_path):
    p = tmp_path / "terms.csv"
    res = _run(runner, "expand", "--lambda", "1", "--a", "1.2",
               "--x", "40", "--sign", "minus", "--order", "3",
               "--out", str(p))
    assert res.exit_code == 0
    lines = [ln for ln in p.read_text().splitlines() if not ln.startswith("#")]
    assert lines[0] == "k,term_re,term_im"
    assert len(lines) == 5  # header + terms 0..3


# -- saddles --------------------------------------------------------------

def test_saddles_minus_conjugate_pair(runner):
    res = _run(runner, "saddles", "--lambda", "1.5", "--a", "0.5",
               "--sign", "minus")
    assert res.exit_code == 0
    assert "regime: conjugate_pair" in res.output
    assert "0.24834557" in res.output and "0.90919096" in res.output


def test_saddles_plus_no_contributory_pairs(runner):
    res = _run(runner, "saddles", "--lambda", "1", "--a", "0.5",
               "--sign", "plus")
    assert res.exit_code == 0
    assert "N = 0" in res.output


def test_saddles_plus_chain_listing(runner):
    res = _run(runner, "saddles", "--lambda", "2", "--a", "0.6",
               "--sign", "plus", "--chain", "1", "--json")
    payload = json.loads(res.output)
    assert payload["n_pairs"] == 0
    chain = [s for s in payload["saddles"] if s["kind"] == "complex_pair"]
    assert len(chain) == 1
    assert 1.5707 < chain[0]["im_u"] < 4.7124  # (pi/2, 3 pi/2)


def test_saddles_on_stokes_boundary_exits_4(runner):
    a_flip = stokes_boundary(2.0, 1)
    res = _run(runner, "saddles", "--lambda", "2", "--a", repr(a_flip),
               "--sign", "plus")
    assert res.exit_code == 4


def test_saddles_trace_csv(runner, tmp_path):
    p1, p2 = tmp_path / "t1.csv", tmp_path / "t2.csv"
    for p in (p1, p2):
        res = _run(runner, "saddles", "--lambda", "2", "--a", "0.2",
                   "--sign", "plus", "--trace", "--out", str(p))
        assert res.exit_code == 0
    assert p1.read_bytes() == p2.read_bytes()
    lines = p1.read_text().splitlines()
    data = [ln for ln in lines if not ln.startswith("#")]
    assert data[0] == "re_u,im_u,re_h,im_h"
    assert len(data) > 10
    # every data row is four scientific-notation fields
    for row in data[1:4]:
        parts = row.split(",")
        assert len(parts) == 4
        for v in parts:
            float(v)


# -- table ----------------------------------------------------------------

def test_table_t1_passes(runner):
    res = _run(runner, "table", "t1")
    assert res.exit_code == 0
    assert res.output.rstrip().endswith("PASS")
    assert "max deviation" in res.output


def test_table_csv_and_json(runner, tmp_path):
    p = tmp_path / "t2.csv"
    res = _run(runner, "table", "t2", "--json", "--out", str(p))
    assert res.exit_code == 0
    payload = json.loads(res.output)
    assert payload["table"] == "t2" and payload["passed"]
    lines = [ln for ln in p.read_text().splitlines() if not ln.startswith("#")]
    assert lines[0] == "row,label,computed,printed,target,deviation,ok"
    assert len(lines) == 1 + len(payload["cells"])


def test_table_sweep_csv(runner, tmp_path):
    p = tmp_path / "curve.csv"
    res = _run(runner, "table", "fig2-curve", "--out", str(p))
    assert res.exit_code == 0
    lines = [ln for ln in p.read_text().splitlines() if not ln.startswith("#")]
    assert lines[0] == "lam,a"
    assert len(lines) > 100


def test_table_mismatch_exits_5(runner, monkeypatch):
    import wrightasym.cli as cli_mod
    from wrightasym.reference import TableSpec
    from wrightasym.tables import CellCheck, TableReport

    bad = TableReport(TableSpec.T1, [CellCheck(
        "row", "label", computed=2.0, printed=1.0, target=1.0,
        tol=1e-6, relative=True)])
    monkeypatch.setattr(cli_mod, "compute_table", lambda spec, prec: bad)
    res = _run(runner, "table", "t1")
    assert res.exit_code == 5
    assert "FAIL" in res.output
