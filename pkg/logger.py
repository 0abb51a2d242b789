"""
Hệ thống logging cho bộ giải trọng số đồ thị
Ghi log với format: [YYYY-MM-DD HH:MM:SS] [LEVEL] [STAGE] Message
"""
import logging
import os
from typing import Iterable, Mapping


class WeightingLogger:
    """Logger tùy chỉnh, mỗi dòng log gắn nhãn giai đoạn (MAD, DETECT, REDUCE, SOLVE...)"""

    FORMAT = '[%(asctime)s] [%(levelname)s] [%(stage)s] %(message)s'
    DATEFMT = '%Y-%m-%d %H:%M:%S'

    def __init__(self, log_file: str, level=logging.INFO, console: bool = True):
        self.log_file = log_file
        self.logger = logging.getLogger('WeightingSolver')
        self.logger.setLevel(level)
        self.logger.propagate = False
        # Tạo lại logger nhiều lần (test, CLI) không được nhân đôi handler
        for handler in list(self.logger.handlers):
            self.logger.removeHandler(handler)
            handler.close()

        formatter = logging.Formatter(self.FORMAT, datefmt=self.DATEFMT)

        # Tạo thư mục log nếu chưa có
        log_dir = os.path.dirname(log_file) if log_file else ""
        if log_dir and not os.path.exists(log_dir):
            try:
                os.makedirs(log_dir, exist_ok=True)
            except OSError:
                pass  # Nếu không tạo được, sẽ ghi vào console

        # Handler ghi vào file
        if log_file:
            try:
                file_handler = logging.FileHandler(log_file, encoding='utf-8')
                file_handler.setLevel(level)
                file_handler.setFormatter(formatter)
                self.logger.addHandler(file_handler)
            except (IOError, OSError):
                pass  # Nếu không ghi được file, chỉ ghi console

        # Handler ghi ra stderr, stdout dành cho kết quả của CLI
        if console:
            console_handler = logging.StreamHandler()
            console_handler.setLevel(level)
            console_handler.setFormatter(formatter)
            self.logger.addHandler(console_handler)

    @classmethod
    def from_config(cls, config_manager, console: bool = True) -> "WeightingLogger":
        level = getattr(logging, config_manager.get_log_level(), logging.INFO)
        try:
            return cls(config_manager.get_log_file(), level=level, console=console)
        except Exception:
            return cls("weighting.log", level=level, console=console)

    def _log(self, level: int, message: str, stage: str = "SYSTEM"):
        """Ghi log kèm nhãn giai đoạn"""
        self.logger.log(level, message, extra={'stage': stage})

    def info(self, message: str, stage: str = "SYSTEM"):
        self._log(logging.INFO, message, stage)

    def warning(self, message: str, stage: str = "SYSTEM"):
        self._log(logging.WARNING, message, stage)

    def error(self, message: str, stage: str = "SYSTEM"):
        self._log(logging.ERROR, message, stage)

    def debug(self, message: str, stage: str = "SYSTEM"):
        self._log(logging.DEBUG, message, stage)

    def log_reduction(self, kind: str, roles: Mapping[str, int], live_edges: int):
        """Ghi log một bước rút gọn của bộ giải"""
        binding = " ".join(f"{k}={v}" for k, v in roles.items())
        self.info(f"Rút gọn {kind} ({binding}) - còn {live_edges} cạnh", "SOLVE")

    def log_extension(self, kind: str, nodes: int, ok: bool):
        status = "OK" if ok else "FAIL"
        self.debug(f"Mở rộng {kind} {status} sau {nodes} nút tìm kiếm", "REDUCE")

    def log_mad(self, value, witness: Iterable[int]):
        self.info(f"Mad = {value}, witness = {sorted(witness)}", "MAD")

    def log_file_error(self, message: str, stage: str = "SYSTEM"):
        """Ghi log lỗi file"""
        self.error(f"File error: {message}", stage)
