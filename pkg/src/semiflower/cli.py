"""Command line entry point: ``semiflower <command> ...``.

Exit status is 0 on success, 1 on bad input and 2 when the analysis ran
but the method does not apply (the report is still printed).
"""

from __future__ import annotations

import argparse
import logging
import os
import sys
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from pathlib import Path

from . import io
from .automaton import Automaton, product, trim
from .bpr import build_bpr, kappa_profile, topological_order
from .errors import BudgetExceeded, SemiflowerError
from .hnp import analyze
from .oracles import InstanceSpec, generate_instances
from .rank import edge_identity, lemma_edge_rank, rank, rank_via_bpo
from .sfa import DEFAULT_CAP, build_sfa, validate_semi_flower

CAP_ENV = "SEMIFLOWER_CAP"
COMMANDS = ("rank", "bpr", "product", "hnp", "sweep", "export-dot")

log = logging.getLogger("semiflower")


@dataclass
class RunConfig:
    command: str
    inputs: list = field(default_factory=list)
    cap: int = DEFAULT_CAP
    output_format: str = "text"
    seed: int = 0
    mode: str = "random"
    count: int = 100
    alphabet_size: int = 2
    max_words: int = 3
    max_length: int = 3
    jobs: int = 1

    def __post_init__(self):
        if self.command not in COMMANDS:
            raise ValueError(f"unknown command {self.command!r}")
        if self.cap < 1:
            raise ValueError("cap must be at least 1")


def default_cap() -> int:
    raw = os.environ.get(CAP_ENV)
    return int(raw) if raw else DEFAULT_CAP


def load_automaton(path) -> Automaton:
    """An automaton file, or a generator file turned into its SFA."""
    text = Path(path).read_text(encoding="utf-8")
    if io.looks_like_automaton(text):
        return io.parse_automaton(text, path)
    return build_sfa(io.parse_generators(text, path)).automaton


def _rank(cfg: RunConfig, out) -> int:
    s = validate_semi_flower(load_automaton(cfg.inputs[0]))
    report = rank(s, cfg.cap)
    checks = []
    if s.deterministic:
        checks.append(("edge identity", edge_identity(s)))
    if s.bpis:
        checks.append(("edge/rank lemma", lemma_edge_rank(s, cfg.cap)))
    out.write(io.format_rank_report(report, checks))
    if s.bpis and s.deterministic:
        out.write(f"rank via outdegrees: {rank_via_bpo(s, cfg.cap)}\n")
    return 0


def _bpr(cfg: RunConfig, out) -> int:
    s = validate_semi_flower(load_automaton(cfg.inputs[0]))
    b = build_bpr(s, cfg.cap)
    if cfg.output_format == "dot":
        out.write(io.bpr_to_dot(b))
        return 0
    out.write(io.format_bpr(b))
    if s.bpis:
        out.write(io.format_profile(kappa_profile(b, topological_order(b))))
    return 0


def _product(cfg: RunConfig, out) -> int:
    a1, a2 = (load_automaton(p) for p in cfg.inputs[:2])
    out.write(io.format_automaton(trim(product(a1, a2)), comment="trimmed product"))
    return 0


def _hnp(cfg: RunConfig, out) -> int:
    xh, xk = (io.parse_generator_file(p) for p in cfg.inputs[:2])
    report = analyze(xh, xk, cfg.cap)
    out.write(io.csv_header() + io.csv_row(report) if cfg.output_format == "csv" else io.format_hnp_report(report))
    return 0 if report.classification.applicable else 2


def _sweep_one(args):
    xh, xk, cap = args
    try:
        return io.csv_row(analyze(xh, xk, cap))
    except BudgetExceeded as exc:
        return io.csv_row(exc.partial)


def _sweep(cfg: RunConfig, out) -> int:
    spec = InstanceSpec(
        alphabet_size=cfg.alphabet_size, max_words=cfg.max_words, max_length=cfg.max_length,
        seed=cfg.seed, mode=cfg.mode, count=cfg.count if cfg.mode == "random" else None,
    )
    out.write(io.csv_header())
    work = ((xh, xk, cfg.cap) for xh, xk in generate_instances(spec))
    if cfg.jobs > 1:
        with ProcessPoolExecutor(cfg.jobs) as pool:
            for row in pool.map(_sweep_one, work, chunksize=64):
                out.write(row)
    else:
        for item in work:
            out.write(_sweep_one(item))
    return 0


def _export_dot(cfg: RunConfig, out) -> int:
    out.write(io.automaton_to_dot(load_automaton(cfg.inputs[0])))
    return 0


HANDLERS = {
    "rank": _rank, "bpr": _bpr, "product": _product,
    "hnp": _hnp, "sweep": _sweep, "export-dot": _export_dot,
}


def run(cfg: RunConfig, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    try:
        return HANDLERS[cfg.command](cfg, out)
    except (SemiflowerError, OSError) as exc:
        err.write(f"error: {exc}\n")
        return 1


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--cap", type=int, default=None,
                        help=f"enumeration budget (default ${CAP_ENV} or {DEFAULT_CAP})")
    common.add_argument("--format", dest="output_format", choices=("text", "csv", "dot"), default="text")
    common.add_argument("--seed", type=int, default=0)

    parser = argparse.ArgumentParser(prog="semiflower", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)
    p = sub.add_parser("rank", parents=[common], help="rank of the submonoid an SFA accepts")
    p.add_argument("inputs", nargs=1, metavar="FILE")
    p = sub.add_parser("bpr", parents=[common], help="branch-point condensation and kappa counts")
    p.add_argument("inputs", nargs=1, metavar="FILE")
    p = sub.add_parser("product", parents=[common], help="trimmed product of two automata")
    p.add_argument("inputs", nargs=2, metavar="FILE")
    p = sub.add_parser("hnp", parents=[common], help="intersection report for two generator files")
    p.add_argument("inputs", nargs=2, metavar="GENERATORS")
    p = sub.add_parser("sweep", parents=[common], help="CSV over generated instance pairs")
    p.add_argument("--mode", choices=("random", "exhaustive"), default="random")
    p.add_argument("--count", type=int, default=100)
    p.add_argument("--alphabet-size", type=int, default=2)
    p.add_argument("--max-words", type=int, default=3)
    p.add_argument("--max-length", type=int, default=3)
    p.add_argument("--jobs", type=int, default=1)
    p = sub.add_parser("export-dot", parents=[common], help="DOT rendering of an automaton")
    p.add_argument("inputs", nargs=1, metavar="FILE")
    return parser


def main(argv=None) -> int:
    logging.basicConfig(format="%(levelname)s: %(message)s")
    args = vars(build_parser().parse_args(argv))
    if args["cap"] is None:
        args["cap"] = default_cap()
    args.setdefault("inputs", [])
    try:
        cfg = RunConfig(**args)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    return run(cfg)


if __name__ == "__main__":
    sys.exit(main())
