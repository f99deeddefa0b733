"""Command-line interface: ``bridgecap <command> ...``.

Exit status is 0 on success, 1 when ``verify`` finds a failing certificate
and 2 for malformed input.
"""

from __future__ import annotations

import argparse
import json
import os
import random
import sys
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from importlib import resources
from pathlib import Path
from typing import Optional, Sequence

from . import census as census_mod
from .contfrac import even_cf, positive_cf, shortest_cf
from .crosscap import invariants
from .depth import aux_trace, format_trace, initial_aux
from .epiorder import CertificateError, make_certificate, random_certificate_inputs
from .farey import DomainError, Fraction, depth_oracle, knot_class


SCHEMAS = {
    "crosscap": "invariants",
    "batch": "invariants",
    "evencf": "cf",
    "shortestcf": "cf",
    "positivecf": "cf",
    "depth": "depth",
    "canonical": "canonical",
    "census": "census",
    "order": "certificate",
    "verify": "verify",
}


def load_schema(command: str) -> dict:
    """JSON schema for the ``--json`` output of ``command`` (``census``: the
    JSON table format)."""
    name = SCHEMAS[command]
    text = resources.files("bridgecap").joinpath("schemas", f"{name}.schema.json").read_text()
    return json.loads(text)


class UsageError(Exception):
    pass


def _fraction(text: str) -> Fraction:
    try:
        return Fraction.parse(text)
    except DomainError as exc:
        raise UsageError(str(exc)) from None


def _int_list(text: str, what: str) -> list[int]:
    if text.strip() == "":
        return []
    try:
        return [int(s) for s in text.split(",")]
    except ValueError:
        raise UsageError(f"malformed {what} list {text!r}") from None


def _sign_list(text: str) -> list[int]:
    out = []
    for s in text.split(","):
        s = s.strip()
        if s in ("+", "+1", "1"):
            out.append(1)
        elif s in ("-", "-1"):
            out.append(-1)
        else:
            raise UsageError(f"malformed sign {s!r}")
    return out


def _emit(args, payload: dict, text: str) -> None:
    if args.json:
        print(json.dumps(payload))
    else:
        print(text)


def _record(x: Fraction) -> dict:
    rec = invariants(knot_class(x))
    return {"input": str(x), **rec.as_dict()}


def _record_text(d: dict) -> str:
    return "\n".join(
        [
            f"knot: {'unknot' if d['unknot'] else d['canonical']}",
            f"crosscap: {d['crosscap']}",
            f"genus: {d['genus']}",
            f"crossing_number: {d['crossing_number']}",
            f"depth: {d['depth']}",
        ]
    )


def cmd_crosscap(args) -> int:
    d = _record(_fraction(args.fraction))
    _emit(args, d, _record_text(d))
    return 0


def _cf_command(fn, name):
    def run(args) -> int:
        x = _fraction(args.fraction)
        v = fn(x)
        payload = {"fraction": str(x), "kind": name, "offset": v.offset, "entries": list(v.entries)}
        _emit(args, payload, str(v))
        return 0

    return run


def cmd_depth(args) -> int:
    x = _fraction(args.fraction)
    d = depth_oracle(x)
    payload: dict = {"fraction": str(x), "depth": d}
    lines = [f"depth: {d}"]
    if args.trace:
        a = even_cf(x).entries
        data = aux_trace(a, initial_aux(a[0]))
        payload["even_cf"] = list(a)
        payload["trace"] = [list(t) for t in data]
        lines = [
            f"even_cf: [{','.join(map(str, a))}]",
            f"aux: {format_trace(data)}",
        ] + lines
    _emit(args, payload, "\n".join(lines))
    return 0


def cmd_canonical(args) -> int:
    x = _fraction(args.fraction)
    k = knot_class(x)
    payload = {"input": str(x), "canonical": str(k.canonical), "unknot": k.is_unknot}
    _emit(args, payload, "unknot" if k.is_unknot else str(k.canonical))
    return 0


def cmd_census(args) -> int:
    if not 3 <= args.max_cr <= 24:
        raise UsageError("--max-cr must lie in [3, 24]")
    rows = census_mod.enumerate_knots(args.max_cr)
    if args.format == "csv":
        out = census_mod.rows_to_csv(rows)
    else:
        out = census_mod.table_to_json(census_mod.distribution(rows), args.max_cr)
    if args.out:
        Path(args.out).write_text(out)
    else:
        sys.stdout.write(out)
    return 0


def cmd_order(args) -> int:
    cert = make_certificate(
        _int_list(args.tile, "tile"),
        _sign_list(args.signs),
        _int_list(args.connectors, "connector"),
    )
    print(json.dumps(cert.as_dict()))
    return 0


def _check_batch(inputs):
    out = []
    for tile, signs, conns in inputs:
        try:
            out.append(make_certificate(tile, signs, conns))
        except CertificateError as exc:
            return out, (str(exc), exc.certificate.to_json())
    return out, None


def cmd_verify(args) -> int:
    rng = random.Random(args.seed)
    inputs = [random_certificate_inputs(rng) for _ in range(args.iters)]
    workers = max(1, int(os.environ.get("BRIDGECAP_THREADS", "1") or 1))
    if workers == 1 or len(inputs) < 1000:
        results = [_check_batch(inputs)]
    else:
        size = -(-len(inputs) // workers)
        chunks = [inputs[i : i + size] for i in range(0, len(inputs), size)]
        with ProcessPoolExecutor(max_workers=workers) as pool:
            results = list(pool.map(_check_batch, chunks))
    certs = [c for part, _ in results for c in part]
    failures = [f for _, f in results if f is not None]
    if failures:
        msg, cert_json = failures[0]
        print(msg, file=sys.stderr)
        print(cert_json, file=sys.stderr)
        return 1
    cases = Counter(c.case_label for c in certs)
    summary = {
        "iters": len(certs),
        "seed": args.seed,
        "failures": 0,
        "cases": {k: cases.get(k, 0) for k in ("I", "IIa", "IIb")},
        "sharp": sum(c.sharp for c in certs),
    }
    text = (
        f"{len(certs)} certificates, 0 failures "
        f"(I={summary['cases']['I']} IIa={summary['cases']['IIa']} "
        f"IIb={summary['cases']['IIb']}, sharp={summary['sharp']})"
    )
    _emit(args, summary, text)
    return 0


def cmd_batch(args) -> int:
    stream = sys.stdin if args.infile == "-" else open(args.infile)
    with stream:
        for lineno, line in enumerate(stream, 1):
            s = line.split("#")[0].strip()
            if not s:
                continue
            try:
                d = _record(_fraction(s))
            except (UsageError, DomainError) as exc:
                raise UsageError(f"line {lineno}: {exc}") from None
            if args.json:
                print(json.dumps(d))
            else:
                print(
                    f"{d['input']}\t{d['canonical']}\t{d['crosscap']}\t"
                    f"{d['genus']}\t{d['crossing_number']}\t{d['depth']}"
                )
    return 0


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="machine-readable output")

    ap = argparse.ArgumentParser(
        prog="bridgecap",
        description="Crosscap numbers and epimorphism certificates for 2-bridge knots.",
    )
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("crosscap", parents=[common], help="crosscap, genus, crossing number, depth")
    p.add_argument("fraction")
    p.set_defaults(func=cmd_crosscap)

    for name, fn, helptext in (
        ("evencf", even_cf, "even continued fraction (p even, q odd)"),
        ("shortestcf", shortest_cf, "a shortest continued fraction"),
        ("positivecf", positive_cf, "all-positive continued fraction"),
    ):
        p = sub.add_parser(name, parents=[common], help=helptext)
        p.add_argument("fraction")
        p.set_defaults(func=_cf_command(fn, name))

    p = sub.add_parser("depth", parents=[common], help="Farey depth of a fraction")
    p.add_argument("fraction")
    p.add_argument("--trace", action="store_true", help="show the auxiliary data of the even expansion")
    p.set_defaults(func=cmd_depth)

    p = sub.add_parser("canonical", parents=[common], help="canonical fraction of the knot")
    p.add_argument("fraction")
    p.set_defaults(func=cmd_canonical)

    p = sub.add_parser("census", help="all 2-bridge knots up to a crossing number")
    p.add_argument("--max-cr", type=int, default=16)
    p.add_argument("--format", choices=("csv", "json"), default="csv")
    p.add_argument("--out", help="output file (default stdout)")
    p.set_defaults(func=cmd_census)

    p = sub.add_parser("order", help="certificate for the knot parsed over a tile")
    p.add_argument("--tile", required=True, help='e.g. "4,4" (write --tile=-4,4 for a leading minus)')
    p.add_argument("--signs", required=True, help='e.g. "+,-,+"')
    p.add_argument("--connectors", default="", help='c values, entry is 2c, e.g. "0,0"')
    p.set_defaults(func=cmd_order)

    p = sub.add_parser("verify", parents=[common], help="random certificate harness")
    p.add_argument("--iters", type=int, default=10000)
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("batch", parents=[common], help="one fraction per line in, one record per line out")
    p.add_argument("--in", dest="infile", required=True, help="input file, or - for stdin")
    p.set_defaults(func=cmd_batch)
    return ap


def main(argv: Optional[Sequence[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (UsageError, DomainError, OSError) as exc:
        print(f"bridgecap: error: {exc}", file=sys.stderr)
        return 2
    except CertificateError as exc:
        print(exc.certificate.to_json(), file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
