"""Command-line front door.

Every subcommand reads sets as canonical JSON documents (a file path or an
inline JSON string), prints human-readable text by default, and supports
machine formats where they make sense (json everywhere, csv for scan).
Exit codes: 0 success, 1 domain error (diagnostic on stderr), 2 usage error.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from .blockset import BlockSet
from .experiments import scan_ratio, scan_to_csv, verify_equality
from .render import fraction_decimal, fraction_str
from .repcount import CLASSIC_VARIANTS, count_classic, count_weighted, count_weighted_oracle
from .structure import decompose, detect_tail, generate_from_seed, multiplicative_profile, select_g
from .witness import WitnessValidationError, enumerate_witnesses


def _load_set(source: str) -> BlockSet:
    text = source
    if not source.lstrip().startswith("{"):
        path = Path(source)
        if not path.exists():
            raise ValueError(f"set file not found: {source}")
        text = path.read_text()
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ValueError(f"set document is not valid JSON: {exc}") from exc
    return BlockSet.from_doc(doc)


def _parse_int_list(text: str) -> list[int]:
    parts = text.replace(",", " ").split()
    if not parts:
        raise ValueError("empty integer list")
    return [int(p) for p in parts]


def _emit(doc: dict, args) -> None:
    if args.format == "json":
        print(json.dumps(doc, indent=2))
    else:
        for key, val in doc.items():
            print(f"{key}: {val}")


def _weights(args, parser) -> tuple[int, int]:
    if args.k is not None:
        if args.w1 is not None or args.w2 is not None:
            parser.error("give either --k or --w1/--w2, not both")
        return (1, args.k)
    if args.w1 is None or args.w2 is None:
        parser.error("weights required: --k K or --w1 W1 --w2 W2")
    return (args.w1, args.w2)


def _cmd_eval(args, parser) -> int:
    s = _load_set(args.set)
    w = _weights(args, parser)
    count = count_weighted(s, args.n, w)
    doc = {"n": str(args.n), "w1": w[0], "w2": w[1], "count": str(count)}
    if args.check:
        ref = count_weighted_oracle(s, args.n, w)
        doc["oracle"] = str(ref)
        if ref != count:
            print(f"error: closed form {count} != oracle {ref}", file=sys.stderr)
            return 1
    if args.format == "json":
        print(json.dumps(doc, indent=2))
    else:
        print(count)
    return 0


def _cmd_oracle(args, parser) -> int:
    s = _load_set(args.set)
    w = _weights(args, parser)
    count = count_weighted_oracle(s, args.n, w)
    if args.format == "json":
        print(json.dumps({"n": str(args.n), "w1": w[0], "w2": w[1], "count": str(count)}, indent=2))
    else:
        print(count)
    return 0


def _cmd_classic(args, parser) -> int:
    s = _load_set(args.set)
    count = count_classic(s, args.n, args.variant)
    if args.format == "json":
        print(json.dumps({"n": str(args.n), "variant": args.variant, "count": str(count)}, indent=2))
    else:
        print(count)
    return 0


def _cmd_detect(args, parser) -> int:
    if (args.boundaries is None) == (args.set is None):
        parser.error("give exactly one of --boundaries or --set")
    if args.boundaries is not None:
        bs = _parse_int_list(args.boundaries)
    else:
        bs = list(_load_set(args.set).boundaries)
    tail = detect_tail(bs, args.k)
    if args.format == "json":
        doc = None if tail is None else {"a": tail.a, "k": tail.k, "i0": tail.i0}
        print(json.dumps({"tail": doc}, indent=2))
    else:
        print("none" if tail is None else f"a={tail.a} k={tail.k} i0={tail.i0}")
    return 0


def _cmd_gen(args, parser) -> int:
    seed = _parse_int_list(args.seed)
    s = generate_from_seed(seed, args.a, args.k, args.limit)
    print(json.dumps(s.to_doc(), indent=2))
    return 0


def _cmd_select_g(args, parser) -> int:
    sel = select_g(_load_set(args.set))
    if args.format == "json":
        print(json.dumps({"T": str(sel.T), "g": sel.g}, indent=2))
    else:
        print(f"T={sel.T} g={sel.g}")
    return 0


def _cmd_decompose(args, parser) -> int:
    d = decompose(_load_set(args.set), args.n, args.g)
    _emit(
        {"n": str(d.n), "m": str(d.m), "r": str(d.r), "s": d.s, "ell": d.ell, "g": d.g},
        args,
    )
    return 0


def _cmd_witnesses(args, parser) -> int:
    report = enumerate_witnesses(_load_set(args.set), args.n, args.g)
    _emit(report.to_doc(), args)
    return 0


def _cmd_verify_psi(args, parser) -> int:
    report = verify_equality(
        _load_set(args.set), args.k, args.n_lo, args.n_hi, record_per_n=args.per_n
    )
    if args.format == "json":
        print(json.dumps(report.to_doc(), indent=2))
    else:
        span = report.n_hi - report.n_lo + 1
        print(f"equal: {report.equal_count}/{max(span, 0)}")
        if report.first_violation is None:
            print("first_violation: none")
        else:
            print(f"first_violation: {report.first_violation}")
        if args.per_n and report.per_n:
            for n, ra, rc in report.per_n:
                print(f"n={n} r_set={ra} r_comp={rc}")
    return 0


def _cmd_scan(args, parser) -> int:
    scan = scan_ratio(_load_set(args.set), args.k, args.n_lo, args.n_hi, args.g, args.stride)
    if args.format == "csv":
        scan_to_csv(scan, sys.stdout)
    elif args.format == "json":
        print(json.dumps(scan.to_doc(), indent=2))
    else:
        for p in scan.points:
            print(
                f"n={p.n} r_set={p.r_set} r_comp={p.r_comp} "
                f"ratio={fraction_str(p.ratio)} ({fraction_decimal(p.ratio, 9)})"
            )
        floor_ = scan.theoretical_floor
        print(f"min_ratio: {'n/a' if scan.min_ratio is None else fraction_str(scan.min_ratio)}")
        print(f"theoretical_floor: {fraction_str(floor_)} ({fraction_decimal(floor_, 9)})")
        print(f"trivial_ceiling: {fraction_str(scan.trivial_ceiling)}")
    return 0


def _cmd_intersect(args, parser) -> int:
    prof = multiplicative_profile(args.k, args.l)
    nonempty = bool(prof.dependent and prof.p % 2 == 1 and prof.q % 2 == 1)
    if args.format == "json":
        print(
            json.dumps(
                {
                    "nonempty": nonempty,
                    "dependent": prof.dependent,
                    "d": prof.d,
                    "p": prof.p,
                    "q": prof.q,
                },
                indent=2,
            )
        )
    elif not prof.dependent:
        print("empty (multiplicatively independent)")
    else:
        word = "nonempty" if nonempty else "empty"
        print(f"{word} (d={prof.d}, p={prof.p}, q={prof.q})")
    return 0


def _add_format(p: argparse.ArgumentParser, *extra: str) -> None:
    p.add_argument("--format", choices=("human", "json", *extra), default="human")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="repfn",
        description="Exact representation counting over self-similar block sets.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name: str, func, help_: str) -> argparse.ArgumentParser:
        p = sub.add_parser(name, help=help_)
        p.set_defaults(func=func)
        return p

    for name, func, help_ in (
        ("eval", _cmd_eval, "count weighted representations (closed form)"),
        ("oracle", _cmd_oracle, "count weighted representations (reference loop)"),
    ):
        p = add(name, func, help_)
        p.add_argument("--set", required=True, help="set JSON: file path or inline document")
        p.add_argument("--n", type=int, required=True)
        p.add_argument("--k", type=int, help="shorthand for weights (1, k)")
        p.add_argument("--w1", type=int)
        p.add_argument("--w2", type=int)
        if name == "eval":
            p.add_argument("--check", action="store_true", help="cross-check against the oracle")
        _add_format(p)

    p = add("classic", _cmd_classic, "unweighted pair counts R1/R2/R3")
    p.add_argument("--set", required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--variant", choices=CLASSIC_VARIANTS, required=True)
    _add_format(p)

    p = add("detect", _cmd_detect, "detect a scaling law in a boundary list")
    p.add_argument("--boundaries", help="comma-separated boundary values")
    p.add_argument("--set", help="take boundaries from a set document")
    p.add_argument("--k", type=int, required=True)
    _add_format(p)

    p = add("gen", _cmd_gen, "expand a seed into a set document")
    p.add_argument("--seed", required=True, help="comma-separated seed t_0..t_(a-1)")
    p.add_argument("--a", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--limit", type=int, required=True)

    p = add("select-g", _cmd_select_g, "threshold T and least odd g with k^g > T")
    p.add_argument("--set", required=True)
    _add_format(p)

    p = add("decompose", _cmd_decompose, "locate n on the boundary lattice")
    p.add_argument("--set", required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--g", type=int, required=True)
    _add_format(p)

    p = add("witnesses", _cmd_witnesses, "build and validate the witness family for n")
    p.add_argument("--set", required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--g", type=int, required=True)
    _add_format(p)

    p = add("verify-psi", _cmd_verify_psi, "check set-vs-complement count equality on a window")
    p.add_argument("--set", required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--n-lo", type=int, required=True)
    p.add_argument("--n-hi", type=int, required=True)
    p.add_argument("--per-n", action="store_true", help="include the per-n series")
    _add_format(p)

    p = add("scan", _cmd_scan, "ratio series r/n on the containing side")
    p.add_argument("--set", required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--n-lo", type=int, required=True)
    p.add_argument("--n-hi", type=int, required=True)
    p.add_argument("--g", type=int, required=True)
    p.add_argument("--stride", type=int, default=1)
    _add_format(p, "csv")

    p = add("intersect", _cmd_intersect, "odd/odd multiplicative dependence of two ratios")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--l", type=int, required=True)
    _add_format(p)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args, parser)
    except (ValueError, WitnessValidationError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
