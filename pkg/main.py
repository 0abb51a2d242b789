"""
Điểm vào dòng lệnh: mad, detect, solve, verify, oracle, discharge, gen.

Mã thoát: 0 thành công, 1 kết quả âm, 2 lỗi cú pháp / định dạng đầu vào,
3 mâu thuẫn nội bộ (InternalInconsistency hoặc phản ví dụ phóng điện).
"""
import argparse
import os
import sys
from fractions import Fraction
from typing import List, Optional

from config_manager import ConfigManager
from configs import Catalog, detect_all
from discharge import RuleSet, RuleSetId, Verdict, check_unavoidability, run
from errors import (BudgetExceeded, EmptyGraph, GraphFormatError, InternalInconsistency, InvalidParams,
                    NotAnEdge, PartialAtVertex, WeightingError, WeightingFormatError, WeightOutOfRange)
from file_manager import FileManager
from gen import KINDS, NAMED, GenSpec, generate
from graph_core import format_graph
from logger import WeightingLogger
from mad import mad_exact
from oracle import OracleBudget, count_proper, exists_proper
from report_exporter import export_corpus_summary, export_discharge_report
from solver import SolveStatus, Solver
from weighting import Mode, format_weighting, violations

EXIT_OK = 0
EXIT_NEGATIVE = 1
EXIT_USAGE = 2
EXIT_INTERNAL = 3

# Lỗi do đầu vào của người dùng
INPUT_ERRORS = (GraphFormatError, WeightingFormatError, WeightOutOfRange, NotAnEdge, PartialAtVertex,
                EmptyGraph, InvalidParams, OSError)

CATALOG_CHOICES = [c.value for c in Catalog if c is not Catalog.NONRED]


def _fraction(text: str) -> Fraction:
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(f"không phải phân số p/q: {text!r}") from None


def _ratio(value: Fraction) -> str:
    return f"{value.numerator}/{value.denominator}"


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="weighting", description="Trọng số đúng cho đồ thị Mad < 8/3")
    parser.add_argument("--config", default="config.json", help="File cấu hình JSON")
    parser.add_argument("--seed", type=int, default=None, help="Seed mặc định cho gen")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("mad", help="Tính Mad chính xác")
    p.add_argument("graph")

    p = sub.add_parser("detect", help="Liệt kê cấu hình trong đồ thị")
    p.add_argument("--catalog", required=True, choices=CATALOG_CHOICES)
    p.add_argument("graph")

    p = sub.add_parser("solve", help="Tìm trọng số đúng")
    p.add_argument("--mode", required=True, choices=["123", "12"])
    p.add_argument("--level", type=int, default=83, choices=[52, 83])
    p.add_argument("--force", action="store_true", help="Bỏ qua kiểm tra Mad")
    p.add_argument("--trace", action="store_true", help="In các bước rút gọn ra stderr")
    p.add_argument("--report", default=None, help="Ghi tổng kết ra file .xlsx")
    p.add_argument("graph")

    p = sub.add_parser("verify", help="Kiểm tra một trọng số")
    p.add_argument("--mode", required=True, choices=["123", "12"])
    p.add_argument("graph")
    p.add_argument("weighting")

    p = sub.add_parser("oracle", help="Vét cạn cho đồ thị nhỏ")
    p.add_argument("--mode", required=True, choices=["123", "12"])
    p.add_argument("--count", action="store_true", help="Đếm số trọng số đúng")
    p.add_argument("graph")

    p = sub.add_parser("discharge", help="Chạy luật phóng điện")
    p.add_argument("--rules", required=True, choices=[r.value for r in RuleSetId])
    p.add_argument("--check-catalog", action="store_true")
    p.add_argument("--export", default=None, help="Ghi báo cáo ra file .xlsx")
    p.add_argument("graph")

    p = sub.add_parser("gen", help="Sinh đồ thị")
    p.add_argument("kind", choices=KINDS)
    p.add_argument("--n", type=int, default=None)
    p.add_argument("--bound", type=_fraction, default=Fraction(8, 3))
    p.add_argument("--seed", dest="gen_seed", type=int, default=None)
    p.add_argument("--name", default="petersen", choices=sorted(NAMED))
    p.add_argument("--base", default="k4", choices=sorted(NAMED))
    p.add_argument("--side", default="left", choices=["left", "right"])
    p.add_argument("--perturbed", action="store_true")
    p.add_argument("--catalog", default="3w83")
    p.add_argument("--tag", default="A")
    p.add_argument("--variant", type=int, default=0)
    p.add_argument("--count", type=int, default=1)
    p.add_argument("--out-dir", default=None)
    return parser


class WeightingCLI:
    """Thực thi từng lệnh con, trả về mã thoát"""

    def __init__(self, config_manager: ConfigManager, logger: WeightingLogger, seed: Optional[int] = None):
        self.config = config_manager
        self.logger = logger
        self.seed = seed
        self.files = FileManager(config_manager.get_output_directory(), logger)

    def _report_path(self, path: str) -> str:
        # Tên file trần thì đặt vào thư mục báo cáo
        if os.path.dirname(path):
            return path
        return os.path.join(self.config.get_report_directory(), path)

    def cmd_mad(self, args) -> int:
        g = self.files.read_graph(args.graph)
        result = mad_exact(g, self.logger)
        print(" ".join([_ratio(result.value)] + [str(v) for v in result.witness]))
        return EXIT_OK

    def cmd_detect(self, args) -> int:
        g = self.files.read_graph(args.graph)
        found = detect_all(g, Catalog.parse(args.catalog))
        for inst in found:
            print(inst.describe(g))
        self.logger.info(f"{len(found)} cấu hình trong {args.catalog}", "DETECT")
        return EXIT_OK if found else EXIT_NEGATIVE

    def cmd_solve(self, args) -> int:
        g = self.files.read_graph(args.graph)
        mode = Mode.parse(args.mode)
        solver = Solver(self.config.get_reducer_config(), self.config.get_solver_config(), self.logger)
        if solver.workers > 1:
            outcome = solver.solve_components(g, mode, args.level, args.force)
        else:
            outcome = solver.solve(g, mode, args.level, args.force)
        if args.trace:
            for step in outcome.trace:
                print(step, file=sys.stderr)
        if args.report:
            row = {"seed": "", "n": g.n, "m": g.num_edges, "mad": "", "mode": mode.value,
                   "level": args.level, "status": outcome.status.value, "steps": len(outcome.trace)}
            ok, message = export_corpus_summary([row], self._report_path(args.report))
            if ok:
                self.logger.info(message, "CLI")
            else:
                self.logger.log_file_error(message, "CLI")
        if outcome.status is not SolveStatus.SOLVED:
            print(f"{outcome.status.value}: {outcome.reason}", file=sys.stderr)
            return EXIT_NEGATIVE
        sys.stdout.write(format_weighting(outcome.weighting, g))
        return EXIT_OK

    def cmd_verify(self, args) -> int:
        g = self.files.read_graph(args.graph)
        w = self.files.read_weighting(args.weighting, g, Mode.parse(args.mode))
        bad = violations(g, w)
        for v in bad:
            x, y = g.endpoints(v.edge)
            print(f"violation {x} {y} phi={v.phi_u}")
        return EXIT_NEGATIVE if bad else EXIT_OK

    def cmd_oracle(self, args) -> int:
        g = self.files.read_graph(args.graph)
        mode = Mode.parse(args.mode)
        budget = OracleBudget.from_config(self.config)
        if args.count:
            total = count_proper(g, mode, budget)
            print(total)
            return EXIT_OK if total else EXIT_NEGATIVE
        found = exists_proper(g, mode, budget)
        print("true" if found else "false")
        return EXIT_OK if found else EXIT_NEGATIVE

    def cmd_discharge(self, args) -> int:
        g = self.files.read_graph(args.graph)
        rules = RuleSet.parse(args.rules)
        report = run(g, rules, self.logger)
        for v in g.vertices():
            print(f"{v} {report.initial[v]} {report.final[v]}")
        if report.min_final is not None:
            print(f"min {_ratio(report.min_final)}")
        if args.export:
            ok, message = export_discharge_report(report, self._report_path(args.export), g)
            if ok:
                self.logger.info(message, "CLI")
            else:
                self.logger.log_file_error(message, "CLI")
        if args.check_catalog:
            verdict = check_unavoidability(g, rules, logger=self.logger)
            print(verdict.value)
            if verdict is Verdict.COUNTEREXAMPLE:
                return EXIT_INTERNAL
        return EXIT_OK

    def cmd_gen(self, args) -> int:
        gen_config = self.config.get_gen_config()
        seed = next(s for s in (args.gen_seed, self.seed, gen_config["default_seed"]) if s is not None)
        print(f"seed = {seed}", file=sys.stderr)
        params = {"bound": str(args.bound), "name": args.name, "base": args.base, "side": args.side,
                  "perturbed": args.perturbed, "catalog": args.catalog, "tag": args.tag,
                  "variant": args.variant}
        if args.n is not None:
            params["n"] = args.n
        if args.count < 1:
            raise InvalidParams("--count phải >= 1")
        if args.count == 1 and args.out_dir is None:
            g = generate(GenSpec.of(args.kind, seed, **params), gen_config)
            sys.stdout.write(format_graph(g))
            return EXIT_OK
        files = FileManager(args.out_dir or self.config.get_output_directory(), self.logger)
        for i in range(args.count):
            g = generate(GenSpec.of(args.kind, seed + i, **params), gen_config)
            ok, path = files.save_corpus_graph(g, args.kind, seed + i)
            if not ok:
                return EXIT_USAGE
            print(path)
        self.logger.info(f"Đã sinh {args.count} đồ thị {args.kind}", "GEN")
        return EXIT_OK

    def dispatch(self, args) -> int:
        handler = getattr(self, f"cmd_{args.command}")
        stage = args.command.upper()
        try:
            return handler(args)
        except InternalInconsistency as e:
            self.logger.error(f"Mâu thuẫn nội bộ: {e}", stage)
            return EXIT_INTERNAL
        except INPUT_ERRORS as e:
            self.logger.error(f"Lỗi đầu vào: {e}", stage)
            return EXIT_USAGE
        except BudgetExceeded as e:
            self.logger.warning(f"Vượt ngân sách: {e}", stage)
            return EXIT_NEGATIVE
        except WeightingError as e:
            self.logger.error(str(e), stage)
            return EXIT_NEGATIVE


def main(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return EXIT_OK if e.code == 0 else EXIT_USAGE

    # Load config
    try:
        config_manager = ConfigManager(args.config)
    except Exception as e:
        print(f"Lỗi config: {e}", file=sys.stderr)
        return EXIT_USAGE

    # Logger
    try:
        logger = WeightingLogger.from_config(config_manager)
    except Exception:
        logger = WeightingLogger("weighting.log")

    logger.debug(f"Lệnh: {args.command} (cwd {os.getcwd()})", "CLI")
    return WeightingCLI(config_manager, logger, args.seed).dispatch(args)


if __name__ == "__main__":
    sys.exit(main())
