"""Command-line interface.

Exit codes: 0 success / true, 1 semantic false or failed check, 2 usage or
parse error.  Every command accepts ``--json`` for machine-readable output.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from .errors import SchurOpsError, TraceError
from .normal_form import normalization_params
from .oracle import find_counterexample
from .partitions import ZERO, format_partition, parse_partition
from .rewrite import certify_equivalence, dumps_trace, loads_trace, normalize_with_trace, verify_trace
from .subalgebra import ChainState, chain_annihilates, chain_apply, step_graph, t_stats
from .words import apply_word, fingerprint, format_fingerprint, format_word, parse_word


class _UsageError(Exception):
    pass


def _emit(args, text: str, payload: dict) -> None:
    if args.json:
        print(json.dumps(payload, sort_keys=True))
    else:
        print(text)


def cmd_act(args) -> int:
    x = parse_word(args.word)
    p = parse_partition(args.partition)
    result = apply_word(p, x)
    zero = result is ZERO
    _emit(args, format_partition(result),
          {"zero": zero, "partition": None if zero else list(result)})
    return 0


def cmd_fingerprint(args) -> int:
    fp = fingerprint(parse_word(args.word))
    _emit(args, format_fingerprint(fp),
          {"w": {str(i): v for i, v in fp.weight}, "alpha": {str(i): v for i, v in fp.alpha}})
    return 0


def cmd_equiv(args) -> int:
    same = fingerprint(parse_word(args.x)) == fingerprint(parse_word(args.y))
    _emit(args, "equivalent" if same else "not-equivalent", {"equivalent": same})
    return 0 if same else 1


def _write_trace(path: str, trace) -> None:
    Path(path).write_text(dumps_trace(trace) + "\n")


def cmd_normalize(args) -> int:
    x = parse_word(args.word)
    big_m, big_n = normalization_params(x)
    canon, trace = normalize_with_trace(x, args.m, args.n)
    if args.trace:
        _write_trace(args.trace, trace)
    _emit(args, format_word(canon), {
        "canonical": format_word(canon),
        "m": big_m if args.m is None else args.m,
        "n": big_n if args.n is None else args.n,
        "steps": len(trace),
    })
    return 0


def cmd_certify(args) -> int:
    x, y = parse_word(args.x), parse_word(args.y)
    trace = certify_equivalence(x, y)
    if trace is None:
        _emit(args, "not-equivalent", {"certified": False})
        return 1
    verify_trace(trace)
    _write_trace(args.trace, trace)
    _emit(args, f"certified: {len(trace)} steps", {"certified": True, "steps": len(trace)})
    return 0


def cmd_verify_trace(args) -> int:
    trace = loads_trace(Path(args.file).read_text())
    try:
        verify_trace(trace)
    except TraceError as exc:
        _emit(args, f"invalid: {exc}", {"ok": False, "step": exc.index, "error": str(exc)})
        return 1
    _emit(args, f"ok: {len(trace)} steps", {"ok": True, "steps": len(trace)})
    return 0


def cmd_chain(args) -> int:
    x = parse_word(args.word)
    if args.annihilates:
        yes = chain_annihilates(x, args.t, args.rho)
        _emit(args, "yes" if yes else "no", {"annihilates": yes})
        return 0
    starts = range(args.rho + 1) if args.pos is None else [args.pos]
    results = {}
    for p in starts:
        out = chain_apply(ChainState(args.rho, p), x, args.t)
        results[p] = None if out is ZERO else out.pos
    if args.pos is not None:
        r = results[args.pos]
        _emit(args, "0" if r is None else f"pos={r}", {"zero": r is None, "pos": r})
    else:
        lines = [f"{p} -> {'0' if r is None else f'pos={r}'}" for p, r in results.items()]
        _emit(args, "\n".join(lines), {"results": {str(p): r for p, r in results.items()}})
    return 0


def cmd_graph(args) -> int:
    x = parse_word(args.word)
    g = step_graph(x, args.t)
    st = t_stats(x, args.t)
    summary = (f"peak={st.peak} valley={st.valley} endpoint={st.endpoint} "
               f"alpha[t-1]={st.alpha_prev} alpha[t]={st.alpha_t} w[t]={st.w_t}")
    lines = [f"({px}, {py})" for px, py in g.points] + [summary]
    _emit(args, "\n".join(lines), {
        "points": [list(pt) for pt in g.points], "peak": st.peak, "valley": st.valley,
        "endpoint": st.endpoint,
    })
    return 0


def cmd_oracle_check(args) -> int:
    x, y = parse_word(args.x), parse_word(args.y)
    witness = find_counterexample(x, y, args.c)
    if witness is None:
        _emit(args, "equal", {"equal": True})
        return 0
    _emit(args, f"different on {format_partition(witness) or '()'}",
          {"equal": False, "witness": list(witness)})
    return 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="schurops",
                                     description="Up/down operators on Young's lattice")
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, func, help_):
        p = sub.add_parser(name, help=help_)
        p.add_argument("--json", action="store_true", help="machine-readable output")
        p.set_defaults(func=func)
        return p

    p = add("act", cmd_act, "apply a word to a partition")
    p.add_argument("--word", required=True)
    p.add_argument("--partition", required=True)

    p = add("fingerprint", cmd_fingerprint, "print the weight and alpha vectors")
    p.add_argument("--word", required=True)

    p = add("equiv", cmd_equiv, "decide equivalence by fingerprint")
    p.add_argument("--x", required=True)
    p.add_argument("--y", required=True)

    p = add("normalize", cmd_normalize, "canonical word, optionally with a certificate")
    p.add_argument("--word", required=True)
    p.add_argument("--trace", help="write the certificate JSON here")
    p.add_argument("--m", type=int)
    p.add_argument("--n", type=int)

    p = add("certify", cmd_certify, "write a certificate that x and y are equal")
    p.add_argument("--x", required=True)
    p.add_argument("--y", required=True)
    p.add_argument("--trace", required=True)

    p = add("verify-trace", cmd_verify_trace, "check a certificate file")
    p.add_argument("--file", required=True)

    p = add("chain", cmd_chain, "act on a finite chain")
    p.add_argument("--t", type=int, required=True)
    p.add_argument("--rho", type=int, required=True)
    p.add_argument("--word", required=True)
    p.add_argument("--pos", type=int)
    p.add_argument("--annihilates", action="store_true")

    p = add("graph", cmd_graph, "lattice-path graph of a {t, t'}-word")
    p.add_argument("--t", type=int, required=True)
    p.add_argument("--word", required=True)

    p = add("oracle-check", cmd_oracle_check, "brute-force comparison on all test partitions")
    p.add_argument("--x", required=True)
    p.add_argument("--y", required=True)
    p.add_argument("--c", type=int, help="largest column gap to try (default: max word length)")
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except TraceError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except (SchurOpsError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
