import os
from datetime import datetime

import pytest

from errors import DuplicateEdge, NotAnEdge
from file_manager import FileManager
from weighting import Mode, Weighting


def test_graph_round_trip(tmp_path, pendant_k4, logger):
    fm = FileManager(str(tmp_path), logger)
    path = str(tmp_path / "nested" / "g.txt")
    assert fm.write_graph(pendant_k4, path)
    assert fm.read_graph(path) == pendant_k4


def test_weighting_round_trip(tmp_path, c3):
    fm = FileManager(str(tmp_path))
    w = Weighting(Mode.TOTAL2, {0: 1, 1: 2, 2: 2}, {0: 1, 1: 2, 2: 2})
    path = str(tmp_path / "w.txt")
    assert fm.write_weighting(w, c3, path)
    assert fm.read_weighting(path, c3, Mode.TOTAL2) == w


def test_format_errors_propagate(tmp_path, p3):
    fm = FileManager(str(tmp_path))
    bad_graph = tmp_path / "bad.g"
    bad_graph.write_text("e 0 1\ne 1 0\n", encoding="utf-8")
    with pytest.raises(DuplicateEdge):
        fm.read_graph(str(bad_graph))
    bad_weighting = tmp_path / "bad.w"
    bad_weighting.write_text("edge 0 2 1\n", encoding="utf-8")
    with pytest.raises(NotAnEdge):
        fm.read_weighting(str(bad_weighting), p3, Mode.EDGE3)
    with pytest.raises(OSError):
        fm.read_graph(str(tmp_path / "missing.g"))


def test_corpus_is_grouped_by_day(tmp_path, c5):
    fm = FileManager(str(tmp_path / "corpus"))
    ok, path = fm.save_corpus_graph(c5, "cycle", 42)
    assert ok
    assert os.path.basename(path) == "cycle_42.g"
    assert os.path.basename(os.path.dirname(path)) == datetime.now().strftime("%Y-%m-%d")
    assert fm.read_graph(path) == c5


def test_write_failure_is_logged(tmp_path, c5, logger):
    blocker = tmp_path / "blocker"
    blocker.write_text("", encoding="utf-8")
    fm = FileManager(str(blocker), logger)
    ok, path = fm.save_corpus_graph(c5, "cycle", 1)
    assert not ok and path == ""
    assert "File error" in (tmp_path / "test.log").read_text(encoding="utf-8")
