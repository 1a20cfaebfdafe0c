"""Command-line entry point: ``quickcluster {generate,cluster,eval,verify,bench}``.

Exit codes: 0 success or pass, 1 verification failure, 2 usage or input error.
"""
from __future__ import annotations

import argparse
import sys
from fractions import Fraction
from pathlib import Path

from . import certificate as cert
from .certificate.functions import ALPHA_PROBABILITY, ALPHA_TRIANGLE, Mode
from .experiments import (
    FAMILY_FOR_MODE,
    Family,
    GeneratorConfig,
    generate,
    ratio_experiment,
    scaling_benchmark,
)
from .instance import (
    InstanceError,
    clustering_cost,
    format_scalar,
    parse_clustering,
    parse_instance,
    serialize_clustering,
    serialize_instance,
)
from .pivot import DEFAULT_MAX_EXACT_N, ModeError, RunTrace, ailon_pivot, decompose_costs, exact_optimal, quick_cluster

SUITES = ("condition1", "condition2-prob", "table2", "appendix-b", "symmetries")
DEFAULT_ALPHA = {Mode.PROBABILITY: ALPHA_PROBABILITY, Mode.TRIANGLE: ALPHA_TRIANGLE}


class UsageError(Exception):
    pass


def _u64(text: str) -> int:
    try:
        value = int(text, 0)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}") from None
    if not 0 <= value < 2**64:
        raise argparse.ArgumentTypeError("seed must be an unsigned 64-bit integer")
    return value


def _positive_int(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}") from None
    if value <= 0:
        raise argparse.ArgumentTypeError("must be positive")
    return value


def _nonneg_int(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}") from None
    if value < 0:
        raise argparse.ArgumentTypeError("must be nonnegative")
    return value


def _alpha(text: str) -> Fraction:
    try:
        value = Fraction(text)
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(f"alpha must be a rational p/q, got {text!r}") from None
    if value <= 0:
        raise argparse.ArgumentTypeError("alpha must be positive")
    return value


def _sizes(text: str) -> list[int]:
    try:
        sizes = [int(s) for s in text.split(",") if s]
    except ValueError:
        raise argparse.ArgumentTypeError(f"sizes must be comma-separated integers, got {text!r}") from None
    if not sizes or any(s <= 0 for s in sizes) or sizes != sorted(sizes):
        raise argparse.ArgumentTypeError("sizes must be positive and ascending")
    return sizes


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="quickcluster", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)
    mode_kw = dict(choices=[m.value for m in Mode], help="probability: f- = w-; triangle: f- = h(w-)")

    p = sub.add_parser("generate", help="write a random .wcc instance")
    p.add_argument("--mode", default="probability", **mode_kw)
    p.add_argument("--family", choices=[f.value for f in Family], help="defaults to the family matching --mode")
    p.add_argument("--n", type=_nonneg_int, required=True)
    p.add_argument("--seed", type=_u64, required=True)
    p.add_argument("--output")

    p = sub.add_parser("cluster", help="cluster an instance with the pivot algorithm or the baseline")
    p.add_argument("--input", required=True)
    p.add_argument("--mode", default="probability", **mode_kw)
    p.add_argument("--algorithm", choices=["quick", "ailon"], default="quick")
    p.add_argument("--seed", type=_u64, required=True)
    p.add_argument("--output")
    p.add_argument("--trace", help="also write the run trace here")

    p = sub.add_parser("eval", help="report costs, optimum and cost split for clusterings or traces")
    p.add_argument("--input", required=True)
    p.add_argument("--clustering", action="append", default=[])
    p.add_argument("--trace", action="append", default=[])
    p.add_argument("--max-exact-n", type=_nonneg_int, default=DEFAULT_MAX_EXACT_N)

    p = sub.add_parser("verify", help="run the approximation-certificate checks")
    p.add_argument("--suite", choices=("all",) + SUITES, default="all")
    p.add_argument("--mode", **mode_kw)
    p.add_argument("--alpha", type=_alpha)
    p.add_argument("--grid-denominator", type=_positive_int)
    p.add_argument("--seed", type=_u64, default=0, help="symmetry sampling seed")
    p.add_argument("--samples", type=_positive_int, default=10_000)
    p.add_argument("--dump", help="write per-point rows as tab-separated text")

    p = sub.add_parser("bench", help="membership-test scaling benchmark, or a ratio experiment with --ratio")
    p.add_argument("--mode", default="probability", **mode_kw)
    p.add_argument("--seed", type=_u64, required=True)
    p.add_argument("--trials", type=_positive_int, default=20)
    p.add_argument("--sizes", type=_sizes, default=[2**k for k in range(10, 16)])
    p.add_argument("--max-ratio", type=float, default=3.0)
    p.add_argument("--ratio", action="store_true", help="run the Monte Carlo ratio experiment instead")
    p.add_argument("--instances", type=_positive_int, default=30)
    p.add_argument("--n", type=_nonneg_int, default=8)
    p.add_argument("--max-exact-n", type=_nonneg_int, default=DEFAULT_MAX_EXACT_N)
    p.add_argument("--output")
    return parser


def _write(path: str | None, data: bytes | str, out) -> None:
    if isinstance(data, str):
        data = data.encode("utf-8")
    if path:
        Path(path).write_bytes(data)
    else:
        out.write(data.decode("utf-8"))


def _read_instance(path: str):
    return parse_instance(Path(path).read_bytes())


def cmd_generate(args, out) -> int:
    mode = Mode(args.mode)
    family = Family(args.family) if args.family else FAMILY_FOR_MODE[mode]
    inst = generate(GeneratorConfig(args.n, args.seed, family))
    _write(args.output, serialize_instance(inst), out)
    return 0


def cmd_cluster(args, out) -> int:
    inst = _read_instance(args.input)
    if args.algorithm == "quick":
        clustering, trace = quick_cluster(inst, args.mode, args.seed)
    else:
        clustering, trace = ailon_pivot(inst, args.seed, return_trace=True)
    _write(args.output, serialize_clustering(clustering), out)
    if args.trace:
        Path(args.trace).write_text(trace.to_text())
    return 0


def cmd_eval(args, out) -> int:
    inst = _read_instance(args.input)
    if not args.clustering and not args.trace:
        raise UsageError("eval needs at least one --clustering or --trace")
    rows = []
    for path in args.clustering:
        c = parse_clustering(Path(path).read_bytes(), inst.n)
        rows.append((path, clustering_cost(inst, c), None))
    for path in args.trace:
        trace = RunTrace.from_text(Path(path).read_text())
        split = decompose_costs(inst, trace)
        rows.append((path, clustering_cost(inst, trace.clustering()), split))
    lines = [f"instance = {args.input}", f"n = {inst.n}", f"regime = {inst.regime.value}"]
    opt = None
    if inst.n <= args.max_exact_n:
        _, opt = exact_optimal(inst, args.max_exact_n)
        lines.append(f"optimum = {format_scalar(opt)}")
    else:
        lines.append(f"optimum = skipped (n > {args.max_exact_n})")
    lines.append("source\tcost\tratio(decimal)\tcontrolled\tuncontrolled")
    for path, cost, split in rows:
        if opt is None:
            ratio = "-"
        elif opt == 0:
            ratio = "exact-zero-opt"
        else:
            ratio = f"{float(cost / opt):.6f}"
        ctrl = "-" if split is None else format_scalar(split.controlled)
        unctrl = "-" if split is None else format_scalar(split.uncontrolled)
        lines.append(f"{path}\t{format_scalar(cost)}\t{ratio}\t{ctrl}\t{unctrl}")
    out.write("\n".join(lines) + "\n")
    return 0


def _verify_reports(args):
    suites = SUITES if args.suite == "all" else (args.suite,)
    for suite in suites:
        if suite == "condition1":
            modes = [Mode(args.mode)] if args.mode else list(Mode)
            for mode in modes:
                yield cert.verify_condition1(mode, args.alpha or DEFAULT_ALPHA[mode], args.grid_denominator or 1400)
        elif suite == "condition2-prob":
            yield cert.verify_condition2_probability(args.alpha or ALPHA_PROBABILITY, args.grid_denominator or 100)
        elif suite == "table2":
            yield cert.reproduce_table2()
        elif suite == "appendix-b":
            yield cert.verify_appendix_B_cases(args.grid_denominator or 1400)
        elif suite == "symmetries":
            yield cert.check_omega_symmetries(args.samples, args.seed)


def cmd_verify(args, out) -> int:
    passed = True
    dump = []
    for report in _verify_reports(args):
        out.write(report.to_text() + "\n")
        out.flush()
        passed &= report.passed
        if report.rows:
            dump.append(f"# {report.suite}\n" + report.to_tsv())
    if args.suite == "all":
        out.write(f"aggregate verdict = {'pass' if passed else 'fail'}\n")
    if args.dump:
        Path(args.dump).write_text("".join(dump))
    return 0 if passed else 1


def cmd_bench(args, out) -> int:
    if args.ratio:
        report = ratio_experiment(args.instances, args.n, args.trials, args.mode, args.seed, args.max_exact_n)
        _write(args.output, report.to_text(), out)
        return 0 if report.all_within_bound else 1
    report = scaling_benchmark(args.sizes, args.mode, args.trials, args.seed)
    text = report.to_text()
    ratios = report.doubling_ratios
    worst = max(ratios.values(), default=0.0)
    ok = worst <= args.max_ratio
    text += f"bench: max doubling ratio {worst:.4f} {'<=' if ok else '>'} {args.max_ratio} (decimal)\n"
    _write(args.output, text, out)
    return 0 if ok else 1


COMMANDS = {"generate": cmd_generate, "cluster": cmd_cluster, "eval": cmd_eval, "verify": cmd_verify, "bench": cmd_bench}


def run(argv=None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 2 if exc.code else 0
    try:
        return COMMANDS[args.command](args, out)
    except (InstanceError, ModeError, UsageError, ValueError, OSError) as exc:
        err.write(f"quickcluster {args.command}: error: {exc}\n")
        return 2


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
