"""Command-line front end: decide, enumerate, explain, dump-constants.

Spec strings follow the grammar  component ("x" component)*  with
component = FAMILY RANK "[" indices "]", e.g. "A3[1,3] x G2[1]".  Family
letters and the separator are case-insensitive; whitespace never matters.

Exit codes: 0 the variety admits an additive structure, 3 it does not,
64 for any usage or parse problem.
"""

from __future__ import annotations

import argparse
import json
import sys

from .chevalley import chevalley_constants, dump_constants
from .classify import (
    ProductVerdict,
    decide_product,
    decide_simple,
    enumerate_maximal,
    group_label,
)
from .parabolic import degree, flag_dimension, grading
from .rootsystems import FAMILIES, Root, SimpleType, build_root_system, dual_system
from .weyl import is_minuscule

EXIT_ADMITS = 0
EXIT_FAILS = 3
EXIT_USAGE = 64


class SpecError(ValueError):
    """A spec string rejected at a specific byte offset."""

    def __init__(self, message: str, offset: int):
        super().__init__(f"at offset {offset}: {message}")
        self.message = message
        self.offset = offset


def parse_spec(text: str) -> list[tuple[SimpleType, frozenset[int]]]:
    """Parse a product spec like "A3[1,3] x G2[1]" into components."""
    pos = 0
    end = len(text)

    def skip_ws() -> None:
        nonlocal pos
        while pos < end and text[pos].isspace():
            pos += 1

    def read_int(what: str) -> tuple[int, int]:
        nonlocal pos
        start = pos
        while pos < end and text[pos].isdigit():
            pos += 1
        if start == pos:
            raise SpecError(f"expected {what}", start)
        return int(text[start:pos]), start

    components: list[tuple[SimpleType, frozenset[int]]] = []
    while True:
        skip_ws()
        if pos >= end:
            raise SpecError("expected a component like A3[1,2]", pos)
        family = text[pos].upper()
        family_at = pos
        if family not in FAMILIES:
            raise SpecError(f"unknown family {text[pos]!r}", pos)
        pos += 1
        skip_ws()
        rank, _ = read_int("a rank after the family letter")
        try:
            stype = SimpleType(family, rank)
        except ValueError as exc:
            raise SpecError(str(exc), family_at) from None
        skip_ws()
        if pos >= end or text[pos] != "[":
            raise SpecError("expected '['", pos)
        pos += 1
        indices: list[int] = []
        skip_ws()
        if pos < end and text[pos] == "]":
            pos += 1
        else:
            while True:
                skip_ws()
                idx, idx_at = read_int("a marked index")
                if not 1 <= idx <= rank:
                    raise SpecError(f"index {idx} out of range 1..{rank}", idx_at)
                if idx in indices:
                    raise SpecError(f"duplicate index {idx}", idx_at)
                indices.append(idx)
                skip_ws()
                if pos < end and text[pos] == ",":
                    pos += 1
                elif pos < end and text[pos] == "]":
                    pos += 1
                    break
                else:
                    raise SpecError("expected ',' or ']'", pos)
        components.append((stype, frozenset(indices)))
        skip_ws()
        if pos >= end:
            return components
        if text[pos] in "xX":
            pos += 1
        else:
            raise SpecError("expected 'x' between components", pos)


def format_spec(components) -> str:
    """Canonical rendering; parsing it back yields the same components."""
    return " x ".join(
        f"{stype}[{','.join(str(i) for i in sorted(m))}]" for stype, m in components
    )


def _format_root(beta: Root) -> str:
    return "(" + ",".join(str(c) for c in beta) + ")"


def _format_marking(m) -> str:
    return "{" + ",".join(str(i) for i in sorted(m)) + "}"


def _component_json(stype: SimpleType, m, verdict) -> dict:
    cov = verdict.exceptional
    return {
        "family": stype.family,
        "rank": stype.rank,
        "marking": sorted(m),
        "commutative": verdict.commutative,
        "exceptional": None
        if cov is None
        else {
            "family": cov.stype.family,
            "rank": cov.stype.rank,
            "marking": sorted(cov.marking),
            "label": cov.label,
        },
        "dimension": verdict.dimension,
    }


def _decide_json(spec: str, result: ProductVerdict) -> dict:
    return {
        "spec": spec,
        "admits": result.admits,
        "dimension": result.total_dimension,
        "components": [
            _component_json(stype, m, verdict)
            for stype, m, verdict in result.components
        ],
    }


def _component_line(stype: SimpleType, m, verdict) -> str:
    head = f"{stype}[{','.join(str(i) for i in sorted(m))}] ({group_label(stype)})"
    if verdict.commutative:
        how = "commutative unipotent radical"
    elif verdict.exceptional is not None:
        cov = verdict.exceptional
        cov_spec = f"{cov.stype}[{','.join(str(i) for i in sorted(cov.marking))}]"
        how = f"exceptional pair, covering {cov.label} = {cov_spec}"
    else:
        how = "fails both criteria"
    return f"  {head}: {how}; dimension {verdict.dimension}"


def _cmd_decide(args) -> int:
    components = parse_spec(args.spec)
    result = decide_product(components)
    spec = format_spec(components)
    if args.format == "json":
        print(json.dumps(_decide_json(spec, result), indent=2))
    else:
        print(f"spec: {spec}")
        for stype, m, verdict in result.components:
            print(_component_line(stype, m, verdict))
        print(f"admits: {'yes' if result.admits else 'no'}")
        print(f"dimension: {result.total_dimension}")
    return EXIT_ADMITS if result.admits else EXIT_FAILS


def _cmd_explain(args) -> int:
    components = parse_spec(args.spec)
    if len(components) != 1:
        raise SpecError("explain takes a single simple component", 0)
    stype, m = components[0]
    rs = build_root_system(stype)
    verdict = decide_simple(stype, m)
    layers = grading(rs, m)
    top_degree = degree(rs.highest_root, m)
    print(f"spec: {format_spec(components)}")
    print(f"type: {stype} ({group_label(stype)})")
    print(f"marking: {_format_marking(m)}")
    print(f"positive roots: {len(rs.positive_roots)}")
    print(f"highest root: {_format_root(rs.highest_root)}, degree {top_degree}")
    print("grading of positive roots by degree:")
    for k in sorted(layers):
        roots = layers[k]
        word = "root" if len(roots) == 1 else "roots"
        listing = ", ".join(_format_root(b) for b in roots)
        print(f"  {k}: {len(roots)} {word}: {listing}" if roots else f"  {k}: empty")
    print(f"flag dimension (nilradical size): {verdict.dimension}")
    print("criteria:")
    print(f"  degree of highest root <= 1: {'yes' if top_degree <= 1 else 'no'}")
    print(
        "  no two nilradical roots sum to a root: "
        f"{'yes' if verdict.commutative else 'no'}"
    )
    if len(m) == 1:
        (i,) = m
        dual = dual_system(rs)
        mini = is_minuscule(dual, i)
        print(
            f"  fundamental weight {i} minuscule in dual {dual.stype}: "
            f"{'yes' if mini else 'no'}"
        )
    else:
        print("  dual minuscule test: n/a (needs exactly one marked index)")
    cov = verdict.exceptional
    if cov is None:
        print("exceptional pair: none")
    else:
        cov_spec = f"{cov.stype}[{','.join(str(i) for i in sorted(cov.marking))}]"
        cov_dim = flag_dimension(build_root_system(cov.stype), cov.marking)
        print(
            f"exceptional pair: covering {cov.label} = {cov_spec}, "
            f"dimension {cov_dim} = {verdict.dimension}"
        )
    if verdict.commutative:
        print("verdict: admits (commutative unipotent radical)")
    elif cov is not None:
        print("verdict: admits (exceptional pair)")
    else:
        print("verdict: does not admit an additive structure")
    return EXIT_ADMITS if verdict.admits else EXIT_FAILS


def _cmd_enumerate(args) -> int:
    rows = enumerate_maximal(args.max_rank)
    if args.commutative:
        rows = tuple(r for r in rows if r.commutative)
        chosen = "commutative"
    elif args.exceptional:
        rows = tuple(r for r in rows if r.covering is not None)
        chosen = "exceptional"
    elif args.admits:
        rows = tuple(r for r in rows if r.admits)
        chosen = "admits"
    else:
        chosen = None
    if args.format == "json":
        payload = {
            "max_rank": args.max_rank,
            "filter": chosen,
            "rows": [
                {
                    "family": r.stype.family,
                    "rank": r.stype.rank,
                    "index": r.index,
                    "commutative": r.commutative,
                    "exceptional": None
                    if r.covering is None
                    else {
                        "family": r.covering.stype.family,
                        "rank": r.covering.stype.rank,
                        "marking": sorted(r.covering.marking),
                        "label": r.covering.label,
                    },
                    "admits": r.admits,
                    "dimension": r.dimension,
                }
                for r in rows
            ],
        }
        print(json.dumps(payload, indent=2))
        return 0
    header = ("pair", "group", "commutative", "exceptional", "dimension", "admits")
    table = [header]
    for r in rows:
        if r.covering is None:
            cov = "-"
        else:
            cov_spec = f"{r.covering.stype}[{','.join(str(i) for i in sorted(r.covering.marking))}]"
            cov = f"{r.covering.label} = {cov_spec}"
        table.append(
            (
                f"{r.stype}[{r.index}]",
                group_label(r.stype),
                "yes" if r.commutative else "no",
                cov,
                str(r.dimension),
                "yes" if r.admits else "no",
            )
        )
    widths = [max(len(row[c]) for row in table) for c in range(len(header))]
    for row in table:
        print("  ".join(cell.ljust(w) for cell, w in zip(row, widths)).rstrip())
    return 0


def _parse_plain_type(text: str) -> SimpleType:
    s = text.strip()
    if not s:
        raise SpecError("expected a type like G2", 0)
    family = s[0].upper()
    if family not in FAMILIES:
        raise SpecError(f"unknown family {s[0]!r}", 0)
    if not s[1:].isdigit():
        raise SpecError("expected a rank after the family letter", 1)
    try:
        return SimpleType(family, int(s[1:]))
    except ValueError as exc:
        raise SpecError(str(exc), 0) from None


def _cmd_dump_constants(args) -> int:
    stype = _parse_plain_type(args.type)
    sc = chevalley_constants(build_root_system(stype))
    sys.stdout.write(dump_constants(sc))
    return 0


class _UsageError(ValueError):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):  # noqa: A003 - argparse API
        raise _UsageError(message)


def _build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="flagadd", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("decide", help="decide a (product) pair G/P")
    p.add_argument("spec")
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.set_defaults(run=_cmd_decide)

    p = sub.add_parser("enumerate", help="tabulate all maximal parabolics")
    p.add_argument("--max-rank", type=int, required=True)
    group = p.add_mutually_exclusive_group()
    group.add_argument("--commutative", action="store_true")
    group.add_argument("--exceptional", action="store_true")
    group.add_argument("--admits", action="store_true")
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.set_defaults(run=_cmd_enumerate)

    p = sub.add_parser("explain", help="show the grading and criteria for one pair")
    p.add_argument("spec")
    p.set_defaults(run=_cmd_explain)

    p = sub.add_parser("dump-constants", help="print the structure-constant table")
    p.add_argument("type")
    p.set_defaults(run=_cmd_dump_constants)
    return parser


def main(argv=None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
        return args.run(args)
    except SpecError as exc:
        print(f"flagadd: error {exc}", file=sys.stderr)
        return EXIT_USAGE
    except ValueError as exc:
        print(f"flagadd: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except SystemExit as exc:  # argparse --help
        return 0 if not exc.code else EXIT_USAGE


def console_main() -> None:
    sys.exit(main())


if __name__ == "__main__":
    console_main()
