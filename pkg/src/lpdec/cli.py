"""Command-line entry point: ``lpdec {decode,simulate,inspect,paper-example}``."""

from __future__ import annotations

import argparse
import sys

import numpy as np

from . import gf2
from .codes import LinearCode, builtin_code, load_code
from .decoders import DecoderConfig, decode, decode_bb, decode_ml_bruteforce, preset_config
from .errors import ConfigError, LpDecodeError
from .harness import emit_results, load_config, run_simulation
from .separation import fs_count

EXAMPLE_RECEIVED = (0.798337, 1.421758, -1.240177, -0.771128, -1.745193, 0.554868, 0.983861, -0.404989)


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _fmt_word(word) -> str:
    w = np.asarray(word, dtype=float)
    if np.all(np.minimum(np.abs(w), np.abs(1 - w)) <= 1e-6):
        return "".join(str(int(round(v))) for v in w)
    return " ".join(f"{v:.6g}" for v in w)


def _print_stats(stats, out) -> None:
    for k, v in vars(stats).items():
        if k == "wall_time":
            print(f"  wall_time_ms: {1000 * v:.3f}", file=out)
        else:
            print(f"  {k}: {v}", file=out)


def _parse_received(text: str, n: int) -> np.ndarray:
    try:
        r = np.array([float(t) for t in text.split(",")], dtype=np.float64)
    except ValueError as exc:
        raise UsageError(f"malformed --r value: {exc}") from exc
    if r.size != n or not np.all(np.isfinite(r)):
        raise UsageError(f"--r must hold {n} finite comma-separated reals")
    return r


def _decoder_for(args, code: LinearCode) -> DecoderConfig:
    name = args.decoder
    overrides = dict(
        N=args.diversity,
        depth=args.depth,
        adapt_matrix=True if args.adapt else None,
        prune_inactive=True if args.prune else None,
    )
    if name in ("A", "B", "C"):
        return preset_config(name, code, **overrides)
    kw = {k: v for k, v in overrides.items() if v is not None}
    try:
        return DecoderConfig(variant=name, **kw)
    except ConfigError as exc:
        raise UsageError(str(exc)) from exc


def cmd_decode(args, out) -> int:
    code = load_code(args.code)
    r = _parse_received(args.r, code.n)
    config = _decoder_for(args, code)
    rng = np.random.default_rng(args.seed)
    outcome = decode(config, code, -r, r, rng)
    print(f"decoder: {config.name}", file=out)
    print(f"word: {_fmt_word(outcome.word)}", file=out)
    print(f"ml_certificate: {outcome.ml_certificate}", file=out)
    print(f"objective: {outcome.objective:.9g}", file=out)
    print("stats:", file=out)
    _print_stats(outcome.stats, out)
    return 0 if outcome.ml_certificate else 2


def cmd_simulate(args, out) -> int:
    cfg = load_config(args.config)
    stats = run_simulation(cfg)
    emit_results(stats, args.out, args.format)
    for p in stats.ordered():
        print(f"{p.decoder} {p.ebn0_db:g} dB: {p.frame_errors}/{p.frames} fer={p.fer:.4g} lp={p.avg_lp_solves:.3g}", file=out)
    return 0


def cmd_inspect(args, out) -> int:
    code = load_code(args.code)
    degrees = gf2.row_degrees(code.H)
    print(f"name: {code.name}", file=out)
    print(f"n: {code.n}", file=out)
    print(f"k: {code.k}", file=out)
    print(f"m: {code.m}", file=out)
    print(f"row_degrees: {' '.join(map(str, degrees))}", file=out)
    print(f"fs_constraints: {fs_count(code.H)}", file=out)
    return 0


def run_worked_example(depth: int = 3):
    code = builtin_code("hamming_8_4_paper")
    r = np.array(EXAMPLE_RECEIVED)
    c = -r
    return code, c, decode_bb(code, c, depth), decode_ml_bruteforce(code, c)


def cmd_worked_example(args, out) -> int:
    code, c, bb, ml = run_worked_example(args.depth)
    s = bb.stats
    print(f"code: {code.name} (n={code.n}, k={code.k})", file=out)
    print(f"received: {' '.join(f'{v:g}' for v in EXAMPLE_RECEIVED)}", file=out)
    print(f"max depth: {args.depth}", file=out)
    print(f"nsa runs: {s.nsa_calls} (root + {s.bb_nodes} tree nodes)", file=out)
    print(f"pruned: infeasible={s.pruned_infeasible} bound={s.pruned_bound} integral={s.pruned_integral}", file=out)
    print(f"depth limit reached: {s.depth_limit_hit}", file=out)
    print(f"bb word: {_fmt_word(bb.word)} cost={bb.objective:.6f} certificate={bb.ml_certificate}", file=out)
    print(f"ml word: {_fmt_word(ml.word)} cost={ml.objective:.6f}", file=out)
    match = bb.integral and np.array_equal(bb.hard_word(), ml.hard_word())
    print(f"match: {match}", file=out)
    return 0 if match else 1


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="lpdec", description="Adaptive LP decoding of binary linear codes")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    d = sub.add_parser("decode", help="decode one received vector")
    d.add_argument("--code", required=True)
    d.add_argument("--r", required=True, help="comma-separated received reals")
    d.add_argument("--decoder", default="nsa", help="A, B, C or a variant name")
    d.add_argument("--depth", type=int)
    d.add_argument("--diversity", type=int)
    d.add_argument("--seed", type=int, default=0)
    d.add_argument("--adapt", action="store_true")
    d.add_argument("--prune", action="store_true")
    d.set_defaults(func=cmd_decode)

    s = sub.add_parser("simulate", help="run a Monte Carlo FER simulation")
    s.add_argument("--config", required=True)
    s.add_argument("--out", required=True)
    s.add_argument("--format", choices=("csv", "json"), default="csv")
    s.set_defaults(func=cmd_simulate)

    i = sub.add_parser("inspect", help="print code parameters")
    i.add_argument("--code", required=True)
    i.set_defaults(func=cmd_inspect)

    e = sub.add_parser("paper-example", help="branch-and-bound walk-through on the [8,4,4] code")
    e.add_argument("--depth", type=int, default=3)
    e.set_defaults(func=cmd_worked_example)
    return p


def main(argv=None, out=None, err=None) -> int:
    out = sys.stdout if out is None else out
    err = sys.stderr if err is None else err
    try:
        args = build_parser().parse_args(argv)
        return args.func(args, out)
    except UsageError as exc:
        print(f"lpdec: error: {exc}", file=err)
        return 1
    except (LpDecodeError, OSError) as exc:
        print(f"lpdec: error: {exc}", file=err)
        return 1


if __name__ == "__main__":
    sys.exit(main())
