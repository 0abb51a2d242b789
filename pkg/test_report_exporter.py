import pandas as pd

from discharge import RULESETS, RuleSetId, run
from gen import cubic_plus_pendants
from graph_core import Graph
from report_exporter import CORPUS_COLUMNS, export_corpus_summary, export_discharge_report


def test_discharge_report_has_min_row(tmp_path):
    g = cubic_plus_pendants("k4")
    report = run(g, RULESETS[RuleSetId.R52])
    path = str(tmp_path / "reports" / "discharge.xlsx")
    ok, msg = export_discharge_report(report, path, g)
    assert ok, msg
    charges = pd.read_excel(path, sheet_name="Charges", dtype=str)
    assert list(charges.columns) == ["vertex", "degree", "initial", "final"]
    assert len(charges) == g.n + 1
    assert charges.iloc[-1]["vertex"] == "MIN"
    assert charges.iloc[-1]["final"] == "5/2"
    transfers = pd.read_excel(path, sheet_name="Transfers", dtype=str)
    assert len(transfers) == 4
    assert set(transfers["amount"]) == {"3/2"}


def test_empty_transfers_get_a_note(tmp_path):
    g = Graph.from_edges(4, [(0, 1), (1, 2), (2, 3), (3, 0)])
    path = str(tmp_path / "cycle.xlsx")
    ok, _ = export_discharge_report(run(g, RULESETS[RuleSetId.R52]), path, g)
    assert ok
    transfers = pd.read_excel(path, sheet_name="Transfers")
    assert list(transfers.columns) == ["Note"]


def test_corpus_summary_total_row(tmp_path):
    rows = [
        {"seed": 1, "n": 10, "m": 11, "mad": "12/5", "mode": "123", "level": 83, "status": "Solved", "steps": 4},
        {"seed": 2, "n": 10, "m": 14, "mad": "3", "mode": "123", "level": 83, "status": "NotApplicable",
         "steps": 0},
        {"seed": 3, "n": 12, "m": 13, "mad": "5/2", "mode": "12", "level": 83, "status": "Solved", "steps": 6},
    ]
    path = str(tmp_path / "corpus.xlsx")
    ok, _ = export_corpus_summary(rows, path)
    assert ok
    df = pd.read_excel(path, sheet_name="Corpus")
    assert list(df.columns) == CORPUS_COLUMNS
    last = df.iloc[-1]
    assert last["seed"] == "TỔNG CỘNG"
    assert last["status"] == "2/3 Solved"
    assert last["steps"] == 10


def test_export_failure_is_reported(tmp_path):
    blocker = tmp_path / "blocker"
    blocker.write_text("", encoding="utf-8")
    ok, msg = export_corpus_summary([], str(blocker / "x.xlsx"))
    assert not ok
    assert msg.startswith("Lỗi xuất Excel")
