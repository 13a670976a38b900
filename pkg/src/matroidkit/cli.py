"""Command line front door.

Commands: info, circuits, minor, vnc, webs, check, rounded.  Matroid
references are catalog names (u24, wheel:5, whirl3, f7, ...) or
`<file>#<name>` for a matroid block inside a file.  Exit codes: 0 success /
no violation, 1 violated statements or a roundedness violation, 2 input or
parse errors, 3 timeout-or-caps degradation.
"""

from __future__ import annotations

import argparse
import os
import sys
from collections import Counter

from . import catalog, connectivity, formats, harness, minors, roundedness, structures
from .core import Matroid
from .errors import InputError, MatroidError, ParseError


def _load_ref(ref: str) -> Matroid:
    if "#" in ref:
        path, _, name = ref.partition("#")
        with open(path, "r", encoding="utf-8") as fh:
            entries = dict(formats.parse_matroid_file(fh.read()))
        if name not in entries:
            raise InputError(f"file {path} defines {sorted(entries)}, not {name!r}")
        return entries[name]
    if os.path.exists(ref) and ref.endswith((".mat", ".matroid")):
        with open(ref, "r", encoding="utf-8") as fh:
            entries = formats.parse_matroid_file(fh.read())
        if len(entries) != 1:
            raise InputError(f"file {ref} defines {len(entries)} matroids; use {ref}#<name>")
        return entries[0][1]
    return catalog.resolve(ref)


def _out(args, text: str):
    if getattr(args, "out", None):
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def cmd_info(args) -> int:
    m = _load_ref(args.matroid)
    lines = [f"elements: {m.size} [{','.join(str(x) for x in m.ground)}]",
             f"rank: {m.full_rank}  corank: {m.size - m.full_rank}"]
    three = connectivity.is_3connected(m)
    note = " (by the small-matroid convention)" if m.size <= 3 and three else ""
    lines.append(f"3-connected: {'yes' if three else 'no'}{note}")
    census = Counter(cm.bit_count() for cm in m.circuit_masks())
    census_text = ", ".join(f"{k}:{v}" for k, v in sorted(census.items())) or "none"
    lines.append(f"circuits by size: {census_text}")
    lines.append(f"triangles: {len(m.triangles())}  triads: {len(m.triads())}")
    _out(args, "\n".join(lines) + "\n")
    return 0


def cmd_circuits(args) -> int:
    m = _load_ref(args.matroid)
    lines = []
    for rec in m.circuits():
        lines.append(" ".join(str(x) for x in rec.sorted_members()))
    _out(args, "\n".join(lines) + "\n")
    return 0


def cmd_minor(args) -> int:
    m = _load_ref(args.matroid)
    n = _load_ref(args.target)
    pinned = tuple(x for x in (args.pin or "").split(",") if x)
    witness = minors.has_minor(m, n, pinned)
    if witness is None:
        _out(args, "no minor\n")
        return 0
    mapping = " ".join(f"{a}->{witness.mapping[a]}"
                       for a in sorted(witness.mapping, key=str))
    _out(args, f"{witness.summary()}\nmap: {mapping}\n")
    return 0


def cmd_vnc(args) -> int:
    m = _load_ref(args.matroid)
    n = _load_ref(args.target)
    report = minors.vnc_elements(m, n)
    elems = ",".join(str(x) for x in report.sorted_elements())
    _out(args, f"vertically contractible elements: [{elems}]\n"
               f"count: {len(report.elements)}  rank: {report.rank}\n")
    return 0


def cmd_webs(args) -> int:
    m = _load_ref(args.matroid)
    n = _load_ref(args.target)
    records = structures.find_webs(m, n, args.kind)
    lines = [f"{r.kind} {r.summary()}" for r in records]
    lines.append(f"total: {len(records)}")
    _out(args, "\n".join(lines) + "\n")
    return 0


def cmd_check(args) -> int:
    with open(args.manifest, "r", encoding="utf-8") as fh:
        pairs, defined = formats.parse_manifest(fh.read())
    only = tuple(x for x in (args.only or "").split(",") if x) or None
    reports = harness.run_manifest(pairs, defined, timeout=args.timeout,
                                   only=only, parallel=args.parallel)
    _out(args, harness.format_reports(reports, args.format))
    return harness.exit_code(reports)


def cmd_rounded(args) -> int:
    with open(args.spec, "r", encoding="utf-8") as fh:
        spec = formats.parse_class_spec(fh.read())
    decision = roundedness.decide_rounded(spec, args.k, args.l)
    _out(args, decision.render())
    if decision.outcome == "violation":
        return 1
    if decision.outcome == "inconclusive":
        return 3
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="matroidkit",
        description="exact matroid computations: connectivity, minors, "
                    "contractibility structures, statement harness, roundedness")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("info", help="print a structural summary")
    p.add_argument("matroid")
    p.add_argument("--out")
    p.set_defaults(fn=cmd_info)

    p = sub.add_parser("circuits", help="list all circuits")
    p.add_argument("matroid")
    p.add_argument("--out")
    p.set_defaults(fn=cmd_circuits)

    p = sub.add_parser("minor", help="search for a pinned minor")
    p.add_argument("matroid")
    p.add_argument("target")
    p.add_argument("--pin", help="comma-separated labels that must survive")
    p.add_argument("--out")
    p.set_defaults(fn=cmd_minor)

    p = sub.add_parser("vnc", help="vertically contractible elements")
    p.add_argument("matroid")
    p.add_argument("target")
    p.add_argument("--out")
    p.set_defaults(fn=cmd_vnc)

    p = sub.add_parser("webs", help="detect biweb/triweb/prism patterns")
    p.add_argument("matroid")
    p.add_argument("target")
    p.add_argument("--kind", choices=("biweb", "triweb", "prism"), required=True)
    p.add_argument("--out")
    p.set_defaults(fn=cmd_webs)

    p = sub.add_parser("check", help="run the statement harness over a manifest")
    p.add_argument("manifest")
    p.add_argument("--only", help="comma-separated statement id prefixes")
    p.add_argument("--timeout", type=float, default=60.0,
                   help="per-check budget in seconds")
    p.add_argument("--parallel", type=int, default=os.cpu_count() or 1)
    p.add_argument("--format", choices=("tsv", "text"), default="tsv")
    p.add_argument("--out")
    p.set_defaults(fn=cmd_check)

    p = sub.add_parser("rounded", help="roundedness decision for a class spec")
    p.add_argument("spec")
    p.add_argument("--k", type=int, required=True, choices=(1, 2, 3))
    p.add_argument("--l", type=int, default=None)
    p.add_argument("--out")
    p.set_defaults(fn=cmd_rounded)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.fn(args)
    except (ParseError, InputError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except MatroidError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
