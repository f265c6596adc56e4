"""Command-line interface.

Exit codes: 0 success, 1 domain error, 2 usage error.  Subcommands that
answer a decision question print ``yes`` or ``no`` as the last line of
standard output.
"""

from __future__ import annotations

import argparse
import os
import sys
from pathlib import Path

from .canonical import canonical_key
from .documents import parse_quiver, serialize_quiver
from .dynamics import (
    alt_orbit,
    build_path_quiver,
    classify_growth,
    conjecture_scan,
    orbit_size,
    ratio_limit_check,
)
from .errors import InconclusiveError, QmutError
from .explore import (
    ISOMORPHISM,
    LABELED,
    CollectPairMultiplicities,
    NoIcebound,
    PairExactlyK,
    SearchLimits,
    explore,
)
from .gadgets import (
    X3CInstance,
    build_subset_sum_gadget,
    build_x3c_gadget,
    decide_icebound_free_via_gadget,
    decide_k_via_gadget,
    parse_subset_sum_text,
    parse_x3c_text,
    subset_sum_oracle,
    x3c_oracle,
)
from .quiver import Quiver


def _read_quiver(path: str) -> Quiver:
    data = sys.stdin.read() if path == "-" else Path(path).read_text()
    return parse_quiver(data)


def _write_output(text: str, out: str | None) -> None:
    if out is None or out == "-":
        sys.stdout.write(text)
    else:
        Path(out).write_text(text)


def _parse_int_list(raw: str) -> list[int]:
    try:
        return [int(tok) for tok in raw.split(",") if tok.strip() != ""]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {raw!r}")


def _limits_from_args(args) -> SearchLimits:
    return SearchLimits(
        max_states=args.max_states,
        max_depth=args.max_depth,
        max_multiplicity=args.max_mult,
        time_budget_ms=args.time_ms,
    )


def _add_limit_flags(p: argparse.ArgumentParser) -> None:
    p.add_argument("--max-states", type=int, default=SearchLimits().max_states)
    p.add_argument("--max-depth", type=int, default=None)
    p.add_argument("--max-mult", type=int, default=SearchLimits().max_multiplicity)
    p.add_argument("--time-ms", type=int, default=None)


def _parse_predicate_arg(raw: str):
    if raw == "no-icebound":
        return NoIcebound()
    if raw.startswith("pair-exactly:"):
        return PairExactlyK(int(raw.split(":", 1)[1]))
    if raw.startswith("collect:"):
        u, v = raw.split(":", 1)[1].split(",")
        return CollectPairMultiplicities(u, v)
    raise argparse.ArgumentTypeError(
        f"bad predicate {raw!r}; use no-icebound, pair-exactly:K or collect:U,V"
    )


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="qmut", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("mutate", help="apply a mutation sequence to a quiver document")
    p.add_argument("--input", required=True, help="quiver document path or - for stdin")
    p.add_argument("--seq", required=True, help="comma-separated mutable vertex ids")
    p.add_argument("--out", default=None)

    p = sub.add_parser("canon", help="print the canonical key of a quiver")
    p.add_argument("--input", required=True)

    p = sub.add_parser("explore", help="bounded search of a mutation class")
    p.add_argument("--input", required=True)
    p.add_argument("--predicate", type=_parse_predicate_arg, required=True)
    p.add_argument("--dedup", choices=[LABELED, ISOMORPHISM], default=LABELED)
    _add_limit_flags(p)

    p = sub.add_parser("orbit", help="labeled and isomorphism class sizes")
    p.add_argument("--input", required=True)
    _add_limit_flags(p)

    p = sub.add_parser("gadget", help="build and check reduction gadgets")
    gsub = p.add_subparsers(dest="gadget_kind", required=True)

    g = gsub.add_parser("subset-sum")
    g.add_argument("--values", type=_parse_int_list)
    g.add_argument("--input", help="instance file: values line, then target line")
    g.add_argument("--k", type=int, default=None)
    g.add_argument("--decide", action="store_true")
    g.add_argument("--check-oracle", action="store_true")
    g.add_argument("--out", default=None)

    g = gsub.add_parser("x3c")
    g.add_argument("--n", type=int)
    g.add_argument("--triples", help="semicolon-separated triples, e.g. '1 2 3;4 5 6'")
    g.add_argument("--input", help="instance file: n line, then one 'i j k' per line")
    g.add_argument("--decide", action="store_true")
    g.add_argument("--check-oracle", action="store_true")
    g.add_argument("--out", default=None)

    p = sub.add_parser("dynamics", help="alternating two-vertex dynamics")
    p.add_argument("--input", required=True)
    p.add_argument("--c", required=True)
    p.add_argument("--d", required=True)
    p.add_argument("--steps", type=int, required=True)
    p.add_argument("--ratio", default=None, help="frozen vertex for the ratio check")
    p.add_argument("--tol", type=float, default=1e-9)
    p.add_argument("--export", default=None, help="write the per-step table here")

    p = sub.add_parser("conjecture", help="scan a path quiver for the product rule")
    p.add_argument("--weights", type=_parse_int_list, required=True)
    _add_limit_flags(p)

    p = sub.add_parser("serve", help="start the local HTTP service")
    p.add_argument("--port", type=int, default=None)
    p.add_argument("--host", default="127.0.0.1")

    return parser


def _cmd_mutate(args) -> int:
    q = _read_quiver(args.input)
    steps = [s for s in args.seq.split(",") if s]
    _write_output(serialize_quiver(q.mutate_seq(steps)), args.out)
    return 0


def _cmd_canon(args) -> int:
    q = _read_quiver(args.input)
    print(canonical_key(q).hex())
    return 0


def _cmd_explore(args) -> int:
    q = _read_quiver(args.input)
    report = explore(q, args.predicate, _limits_from_args(args), dedup=args.dedup)
    print(f"visited: {report.visited}")
    print(f"exhausted: {'yes' if report.exhausted else 'no'}")
    if report.truncated_by:
        print(f"truncated-by: {','.join(sorted(report.truncated_by))}")
    if report.collected is not None:
        print(f"collected: {','.join(str(v) for v in sorted(report.collected))}")
        return 0
    if report.witness is not None:
        print(f"witness: {','.join(report.witness) if report.witness else '(root)'}")
    print("yes" if report.witness is not None else "no")
    return 0


def _cmd_orbit(args) -> int:
    q = _read_quiver(args.input)
    labeled, iso = orbit_size(q, _limits_from_args(args))
    print(f"labeled: {labeled}")
    print(f"isomorphism: {iso}")
    return 0


def _cmd_gadget_subset_sum(args) -> int:
    if args.input:
        inst = parse_subset_sum_text(Path(args.input).read_text())
        values = list(inst.values)
        k = inst.target if args.k is None else args.k
    else:
        if not args.values:
            raise QmutError("need --values or --input")
        values, k = args.values, args.k
    if not args.decide:
        _write_output(serialize_quiver(build_subset_sum_gadget(values)), args.out)
        return 0
    if k is None:
        raise QmutError("--decide needs --k (or a target in the instance file)")
    answer = decide_k_via_gadget(values, k)
    if args.check_oracle:
        oracle = subset_sum_oracle(values, k)
        print(f"oracle: {'yes' if oracle else 'no'}")
        if oracle != answer:
            print("oracle-agreement: MISMATCH")
            return 1
        print("oracle-agreement: ok")
    print("yes" if answer else "no")
    return 0


def _cmd_gadget_x3c(args) -> int:
    if args.input:
        inst = parse_x3c_text(Path(args.input).read_text())
    else:
        if args.n is None or not args.triples:
            raise QmutError("need --n and --triples, or --input")
        triples = []
        for part in args.triples.split(";"):
            toks = part.split()
            if len(toks) != 3:
                raise QmutError(f"bad triple {part!r}")
            triples.append(tuple(int(t) for t in toks))
        inst = X3CInstance(n=args.n, triples=tuple(triples))
    if not args.decide:
        _write_output(serialize_quiver(build_x3c_gadget(inst)), args.out)
        return 0
    answer = decide_icebound_free_via_gadget(inst)
    if args.check_oracle:
        oracle = x3c_oracle(inst)
        print(f"oracle: {'yes' if oracle else 'no'}")
        if oracle != answer:
            print("oracle-agreement: MISMATCH")
            return 1
        print("oracle-agreement: ok")
    print("yes" if answer else "no")
    return 0


def _cmd_dynamics(args) -> int:
    q = _read_quiver(args.input)
    trace = alt_orbit(q, args.c, args.d, args.steps)
    if args.export:
        _write_output(trace.export_columns(), args.export)
    try:
        growth = classify_growth(trace)
        if growth.period is not None:
            print(f"growth: {growth.kind} (period {growth.period})")
        else:
            print(f"growth: {growth.kind}")
    except InconclusiveError as err:
        print(f"growth: inconclusive ({err})")
    if args.ratio:
        estimate, target, converged = ratio_limit_check(trace, args.ratio, args.tol)
        print(f"ratio-estimate: {estimate!r}")
        print(f"ratio-target: {target!r}")
        print("converged" if converged else "not-converged")
    return 0


def _cmd_conjecture(args) -> int:
    report = conjecture_scan(args.weights, _limits_from_args(args))
    print(f"visited: {report.visited}")
    print(f"exhausted: {'yes' if report.exhausted else 'no'}")
    if report.truncated_by:
        print(f"truncated-by: {','.join(sorted(report.truncated_by))}")
    print(f"product: {report.product}")
    print(f"observed: {','.join(str(v) for v in sorted(report.observed))}")
    print("yes" if report.consistent else "no")
    return 0


def _cmd_serve(args) -> int:
    from .service import serve

    port = args.port
    if port is None:
        port = int(os.environ.get("QMUT_PORT", 0)) or None
    serve(port=port, host=args.host)
    return 0


_COMMANDS = {
    "mutate": _cmd_mutate,
    "canon": _cmd_canon,
    "explore": _cmd_explore,
    "orbit": _cmd_orbit,
    "dynamics": _cmd_dynamics,
    "conjecture": _cmd_conjecture,
    "serve": _cmd_serve,
}


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        if args.command == "gadget":
            if args.gadget_kind == "subset-sum":
                return _cmd_gadget_subset_sum(args)
            return _cmd_gadget_x3c(args)
        return _COMMANDS[args.command](args)
    except QmutError as err:
        print(f"error[{err.code}]: {err}", file=sys.stderr)
        return 1
    except OSError as err:
        print(f"error[IO]: {err}", file=sys.stderr)
        return 1


run_cli = main


if __name__ == "__main__":
    sys.exit(main())
