"""
Xuất báo cáo Excel: điện tích phóng điện và tổng kết corpus.
"""
import os
from typing import Iterable, Mapping, Optional, Tuple

import pandas as pd

from discharge import DischargeReport, report_frame, transfers_frame
from graph_core import Graph

CORPUS_COLUMNS = ["seed", "n", "m", "mad", "mode", "level", "status", "steps"]


def _write_sheet(writer, df: pd.DataFrame, sheet_name: str):
    if not df.empty:
        df.to_excel(writer, sheet_name=sheet_name, index=False)
    else:
        pd.DataFrame({"Note": ["Không có dữ liệu"]}).to_excel(writer, sheet_name=sheet_name, index=False)


def _ensure_parent(path: str):
    folder = os.path.dirname(path)
    if folder:
        os.makedirs(folder, exist_ok=True)


def export_discharge_report(report: DischargeReport, path: str, g: Optional[Graph] = None) -> Tuple[bool, str]:
    """
    Ghi hai sheet: Charges (điện tích theo đỉnh + dòng MIN) và Transfers.
    Trả về: (Success, Message)
    """
    try:
        _ensure_parent(path)
        charges = report_frame(report, g)[["vertex", "degree", "initial", "final"]]
        if not charges.empty:
            row_min = pd.DataFrame([{"vertex": "MIN", "degree": "", "initial": "",
                                     "final": str(report.min_final)}])
            charges = pd.concat([charges, row_min], ignore_index=True)

        with pd.ExcelWriter(path, engine="openpyxl") as writer:
            _write_sheet(writer, charges, "Charges")
            _write_sheet(writer, transfers_frame(report), "Transfers")
        return True, f"Đã xuất báo cáo: {path}"
    except Exception as e:
        return False, f"Lỗi xuất Excel: {e}"


def export_corpus_summary(rows: Iterable[Mapping], path: str) -> Tuple[bool, str]:
    """Mỗi dòng một đồ thị (seed, n, m, mad, mode, level, status, steps), cuối bảng là dòng tổng"""
    try:
        _ensure_parent(path)
        df = pd.DataFrame(list(rows), columns=CORPUS_COLUMNS)
        if not df.empty:
            solved = int((df["status"] == "Solved").sum())
            row_total = pd.DataFrame([{
                "seed": "TỔNG CỘNG", "n": "", "m": "", "mad": "", "mode": "", "level": "",
                "status": f"{solved}/{len(df)} Solved",
                "steps": int(df["steps"].sum()),
            }])
            df = pd.concat([df, row_total], ignore_index=True)

        with pd.ExcelWriter(path, engine="openpyxl") as writer:
            _write_sheet(writer, df, "Corpus")
        return True, f"Đã xuất báo cáo: {path}"
    except Exception as e:
        return False, f"Lỗi xuất Excel: {e}"
