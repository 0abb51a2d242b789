import json
import os


class ConfigManager:
    """Quản lý file cấu hình config.json"""

    DEFAULT_ORACLE = {"max_assignments": 100_000_000, "max_edges": 16}
    DEFAULT_REDUCER = {"escape_shells": 1, "max_search_nodes": 5_000_000, "verify_locality": False}
    DEFAULT_SOLVER = {"workers": 1}
    DEFAULT_GEN = {"default_seed": 20240615, "batch_size": 8, "max_attempts_factor": 6}

    def __init__(self, config_path="config.json"):
        self.config_path = config_path
        self.config = self._load_config()

    def _load_config(self):
        if not os.path.exists(self.config_path):
            return {}
        try:
            with open(self.config_path, 'r', encoding='utf-8') as f:
                data = json.load(f)
            return data if isinstance(data, dict) else {}
        except (OSError, ValueError) as e:
            print(f"Lỗi đọc config: {e}")
            return {}

    def get(self, key, default=None):
        return self.config.get(key, default)

    def _section(self, key, defaults):
        # Giá trị trong file ghi đè mặc định, khóa thiếu giữ mặc định
        merged = dict(defaults)
        section = self.config.get(key, {})
        if isinstance(section, dict):
            merged.update(section)
        return merged

    def get_log_file(self):
        return self.config.get("log_file", "weighting.log")

    def get_log_level(self):
        return str(self.config.get("log_level", "INFO")).upper()

    def get_oracle_budget(self):
        return self._section("oracle", self.DEFAULT_ORACLE)

    def get_reducer_config(self):
        return self._section("reducer", self.DEFAULT_REDUCER)

    def get_solver_config(self):
        return self._section("solver", self.DEFAULT_SOLVER)

    def get_gen_config(self):
        return self._section("gen", self.DEFAULT_GEN)

    def get_output_directory(self):
        return self.config.get("output_directory", "corpus")

    def get_report_directory(self):
        return self.config.get("report_directory", "reports")
