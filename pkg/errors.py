"""
Các ngoại lệ dùng chung cho toàn bộ thư viện trọng số đồ thị.
Mọi lỗi nghiệp vụ đều kế thừa WeightingError để CLI bắt một chỗ và đổi sang exit code.
"""
from typing import Optional


class WeightingError(RuntimeError):
    """Lỗi gốc của thư viện"""


# --- Đồ thị ---

class GraphFormatError(WeightingError):
    """Lỗi định dạng file edge-list, luôn kèm số dòng"""

    def __init__(self, message: str, line_no: Optional[int] = None):
        if line_no is not None:
            message = f"Dòng {line_no}: {message}"
        super().__init__(message)
        self.line_no = line_no


class DuplicateEdge(GraphFormatError):
    pass


class Loop(GraphFormatError):
    pass


class MalformedLine(GraphFormatError):
    pass


class UnknownEdgeId(WeightingError):
    pass


class EmptyGraph(WeightingError):
    pass


# --- Trọng số ---

class WeightOutOfRange(WeightingError):
    pass


class PartialAtVertex(WeightingError):
    pass


class NotAnEdge(WeightingError):
    pass


class Incomplete(WeightingError):
    pass


class WeightingFormatError(WeightingError):
    pass


# --- Cấu hình (configuration) & rút gọn ---

class MappingFailed(WeightingError):
    """Ánh xạ cấu hình cấu trúc -> cấu hình khử được thất bại (lỗi lập trình)"""


class ExtensionImpossible(WeightingError):
    """Không mở rộng được trọng số (cấu hình không khử được)"""


class InternalInconsistency(WeightingError):
    """Một cấu hình trong danh mục không mở rộng được dù đã nới tập biến"""


class NoConfigurationFound(WeightingError):
    pass


# --- Oracle & sinh đồ thị ---

class BudgetExceeded(WeightingError):
    pass


class InvalidParams(WeightingError):
    pass


class NotCubic(InvalidParams):
    pass
