"""Command-line front end.

File format: a header line "BRC1 m=<int> t=<int> c=<int>" followed by one
ASCII bit string per line (a codeword, a z, or the fragments of a broken
codeword), each line newline-terminated.

Exit codes: 0 success, 1 decode failure, 2 invalid input or parameters.
"""
from __future__ import annotations

import argparse
import re
import sys
import time
from pathlib import Path

from brc.channel import STRATEGIES, attack, break_at, drop_short
from brc.decoder import DecodeFailure, decode
from brc.encoder import encode
from brc.legit import NotLegitError, SamplingError, sample_legit
from brc.oracle import confusable, redundancy_lower_bound
from brc.params import Params, ParamsError, derive_params

HEADER = re.compile(r"BRC1 m=(\d+) t=(\d+) c=(\d+)")
BITS = re.compile(r"[01]+")
MIXED = ("uniform", "signature-target", "marker-target", "boundary-target")


class InputError(Exception):
    pass


def read_file(path) -> tuple[Params, list[str]]:
    try:
        text = Path(path).read_text()
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc}") from exc
    if not text.endswith("\n"):
        raise InputError(f"{path}: missing trailing newline")
    lines = text[:-1].split("\n")
    head = HEADER.fullmatch(lines[0])
    if head is None:
        raise InputError(f"{path}: malformed header {lines[0]!r}")
    try:
        params = derive_params(*map(int, head.groups()))
    except ParamsError as exc:
        raise InputError(f"{path}: {exc}") from exc
    body = lines[1:]
    for i, line in enumerate(body, start=2):
        if not BITS.fullmatch(line):
            raise InputError(f"{path}:{i}: body lines must be non-empty binary strings")
    return params, body


def write_file(path, params: Params, lines) -> None:
    Path(path).write_text(params.header() + "\n" + "".join(line + "\n" for line in lines))


def cmd_encode(args) -> int:
    params = derive_params(args.m, args.t, args.c)
    if args.z_file:
        zp, body = read_file(args.z_file)
        if zp != params or len(body) != 1:
            raise InputError(f"{args.z_file}: expected one z line for {params.header()}")
        z = body[0]
    else:
        z, _ = sample_legit(params, args.seed)
    codeword = encode(z, params)
    write_file(args.out, params, [codeword])
    write_file(args.out + ".truth", params, [z])
    return 0


def cmd_break(args) -> int:
    params, body = read_file(args.input)
    if len(body) != 1 or len(body[0]) != params.n:
        raise InputError(f"{args.input}: expected a single codeword line of {params.n} bits")
    c = body[0]
    decoder = None
    if args.strategy == "exhaustive-worst":
        # z is the codeword's tail, so success is checkable without a sidecar
        decoder = lambda frags: decode(frags, params) == c[-params.m:]
    try:
        cuts = attack(args.strategy, c, params, args.seed, decoder=decoder) or []
        frags = drop_short(break_at(c, cuts), args.drop_short, params.L)
    except ValueError as exc:
        raise InputError(str(exc)) from exc
    write_file(args.out, params, frags)
    Path(args.out + ".pattern").write_text(" ".join(map(str, cuts)) + "\n")
    return 0


def cmd_decode(args) -> int:
    params, frags = read_file(args.input)
    try:
        z = decode(frags, params)
    except DecodeFailure as exc:
        print(f"decode failed: {exc}", file=sys.stderr)
        return 1
    write_file(args.out, params, [z])
    return 0


def cmd_verify(args) -> int:
    params = derive_params(args.m, args.t, args.c)
    strategies = MIXED if args.strategy == "mixed" else (args.strategy,)
    stats: dict[str, float] = {}
    attempts = []
    ok = 0
    for trial in range(args.trials):
        seed = args.seed + trial
        t0 = time.perf_counter()
        z, tries = sample_legit(params, seed)
        attempts.append(tries)
        t1 = time.perf_counter()
        c = encode(z, params)
        t2 = time.perf_counter()
        cuts = attack(strategies[trial % len(strategies)], c, params, seed)
        frags = drop_short(break_at(c, cuts), args.drop_short, params.L)
        stats["sample"] = stats.get("sample", 0.0) + t1 - t0
        stats["encode"] = stats.get("encode", 0.0) + t2 - t1
        try:
            ok += decode(frags, params, stats=stats) == z
        except DecodeFailure as exc:
            print(f"trial {trial}: {exc}", file=sys.stderr)
    print(f"{ok}/{args.trials}")
    for stage, secs in stats.items():
        if isinstance(secs, float):
            print(f"  {stage:<10} {1000 * secs / max(args.trials, 1):8.3f} ms/trial")
    mean = sum(attempts) / len(attempts) if attempts else 0.0
    print(f"  rejection: mean attempts {mean:.3f}, max {max(attempts, default=0)}, "
          f"first-draw legit {sum(a == 1 for a in attempts)}/{len(attempts)}")
    return 0 if ok == args.trials else 1


def cmd_bound(args) -> int:
    print(f"{redundancy_lower_bound(args.n, args.t):.6f}")
    return 0


def cmd_confusable(args) -> int:
    print("true" if confusable(args.x, args.y, args.t) else "false")
    return 0


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="brc", description="Break-resilient codes: encode, break, decode.")
    sub = ap.add_subparsers(dest="command", required=True)

    def code_args(p):
        p.add_argument("--m", type=int, required=True, help="message length (power of two)")
        p.add_argument("--t", type=int, required=True, help="number of breaks tolerated")
        p.add_argument("--c", type=int, default=3)
        p.add_argument("--seed", type=int, default=0)

    p = sub.add_parser("encode", help="sample a legit z (or read one) and write its codeword")
    code_args(p)
    p.add_argument("--out", required=True)
    p.add_argument("--z-file", help="file holding an explicit z instead of sampling")
    p.set_defaults(func=cmd_encode)

    p = sub.add_parser("break", help="break a codeword file into a fragment file")
    p.add_argument("--in", dest="input", required=True)
    p.add_argument("--strategy", choices=STRATEGIES, default="uniform")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--drop-short", type=int, default=0, metavar="BITS",
                   help="drop fragments shorter than this (at most L)")
    p.add_argument("--out", required=True)
    p.set_defaults(func=cmd_break)

    p = sub.add_parser("decode", help="recover z from a fragment file")
    p.add_argument("--in", dest="input", required=True)
    p.add_argument("--out", required=True)
    p.set_defaults(func=cmd_decode)

    p = sub.add_parser("verify", help="seeded encode/break/decode round trips")
    code_args(p)
    p.add_argument("--strategy", choices=("mixed",) + MIXED, default="mixed")
    p.add_argument("--trials", type=int, default=100)
    p.add_argument("--drop-short", type=int, default=0, metavar="BITS")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("bound", help="redundancy lower bound in bits")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--t", type=int, required=True)
    p.set_defaults(func=cmd_bound)

    p = sub.add_parser("confusable", help="exhaustive t-confusability of two short words")
    p.add_argument("x")
    p.add_argument("y")
    p.add_argument("--t", type=int, required=True)
    p.set_defaults(func=cmd_confusable)
    return ap


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (InputError, ParamsError, NotLegitError, SamplingError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
