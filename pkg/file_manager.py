import os
from datetime import datetime
from typing import Tuple

from graph_core import Graph, format_graph, parse_graph
from logger import WeightingLogger
from weighting import Mode, Weighting, format_weighting, parse_weighting


class FileManager:
    """
    Quản lý file đồ thị và trọng số.
    - Corpus lưu tại: <base>/YYYY-MM-DD/
    - Tên file: <kind>_<seed>.g
    """

    def __init__(self, base_directory: str, logger: WeightingLogger = None):
        self.base_directory = base_directory
        self.logger = logger

    def _ensure_directory_exists(self, directory: str) -> bool:
        """Tạo thư mục nếu chưa có"""
        try:
            os.makedirs(directory, exist_ok=True)
            return True
        except OSError as e:
            if self.logger:
                self.logger.log_file_error(f"Không thể tạo thư mục {directory}: {e}")
            return False

    @staticmethod
    def _read_text(path: str) -> str:
        with open(path, "r", encoding="utf-8") as f:
            return f.read()

    def _write_text(self, text: str, path: str) -> bool:
        folder = os.path.dirname(path)
        if folder and not self._ensure_directory_exists(folder):
            return False
        try:
            with open(path, "w", encoding="utf-8") as f:
                f.write(text)
            return True
        except OSError as e:
            if self.logger:
                self.logger.log_file_error(f"Lỗi ghi file {path}: {e}")
            return False

    def read_graph(self, path: str) -> Graph:
        """Đọc đồ thị; lỗi định dạng được ném ra nguyên vẹn (GraphFormatError)"""
        return parse_graph(self._read_text(path))

    def read_weighting(self, path: str, graph: Graph, mode: Mode) -> Weighting:
        return parse_weighting(self._read_text(path), graph, mode)

    def write_graph(self, graph: Graph, path: str) -> bool:
        return self._write_text(format_graph(graph), path)

    def write_weighting(self, weighting: Weighting, graph: Graph, path: str) -> bool:
        return self._write_text(format_weighting(weighting, graph), path)

    def corpus_directory(self) -> str:
        # Thư mục theo ngày (YYYY-MM-DD để dễ sort)
        day_directory = os.path.join(self.base_directory, datetime.now().strftime("%Y-%m-%d"))
        self._ensure_directory_exists(day_directory)
        return day_directory

    def save_corpus_graph(self, graph: Graph, kind: str, seed: int) -> Tuple[bool, str]:
        """
        Lưu một đồ thị corpus.
        Trả về: (Success, Path)
        """
        path = os.path.join(self.corpus_directory(), f"{kind}_{seed}.g")
        if self.write_graph(graph, path):
            return True, path
        return False, ""
