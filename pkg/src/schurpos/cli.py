"""Command-line interface: expansions, comparisons, posets, and verification."""

from __future__ import annotations

import argparse
import json
import os
import sys
from collections.abc import Sequence

from .diagrams import (
    SkewDiagram,
    composition_of,
    enumerate_basic_skew,
    is_ribbon,
    mf_pattern,
    ribbon_of,
)
from .errors import DomainError
from .lattice import (
    RectLabel,
    covers,
    elements,
    join,
    label_of_ribbon,
    leq_s_closed,
    meet,
    ribbon_of_label,
    schubert_pair,
    trim_report,
    verify_bigdiff,
    verify_fourcovers,
    verify_mflemma,
    verify_onlycovers,
)
from .lr import SchurVector, expand
from .partitions import compositions_of
from .poset import PosetModel, SchurClass, build_poset, compare_diagrams, convexity_report

EXPANSION_GUARD = 14
ENUMERATION_GUARD = 7
FAMILY_SWEEP_GUARD = 12
MF_SWEEP_GUARD = 10


class ParseError(DomainError):
    """Malformed shape or label text; reports the failing position.

    Positions are counted in the input with whitespace removed, which is how
    the grammar reads its tokens.
    """

    def __init__(self, text: str, pos: int, message: str):
        super().__init__(f"{message} at position {pos} in {text!r}")
        self.pos = pos


class UsageError(Exception):
    """A flag combination the grammar cannot express."""


def _int_list(s: str, start: int, end: int) -> tuple[int, ...]:
    values = []
    pos = start
    while True:
        head = pos
        while pos < end and s[pos].isdigit():
            pos += 1
        if pos == head:
            raise ParseError(s, head, "expected a number")
        values.append(int(s[head:pos]))
        if pos == end:
            return tuple(values)
        if s[pos] != ",":
            raise ParseError(s, pos, "expected ','")
        pos += 1


def _pair(s: str, start: int, end: int, what: str) -> tuple[int, int]:
    values = _int_list(s, start, end)
    if len(values) != 2:
        raise ParseError(s, start, f"{what} needs exactly two numbers")
    return values[0], values[1]


def _label_with_context(s: str) -> RectLabel:
    close = s.find("]")
    if close < 0:
        raise ParseError(s, len(s), "expected ']'")
    a, b = _pair(s, 1, close, "label")
    if close + 1 >= len(s) or s[close + 1] != "@":
        raise ParseError(s, close + 1, "expected '@size,rows' after the label")
    n, rows = _pair(s, close + 2, len(s), "context")
    return RectLabel(a, b, n, rows)


def parse_shape(text: str) -> SkewDiagram:
    """Parse '4,3,3/2,2' (skew), '4,3,3', 'r:2,1,3' (ribbon), or '[3,5]@15,6'."""
    s = "".join(text.split())
    if not s:
        raise ParseError(s, 0, "empty shape")
    if s.startswith("r:"):
        return ribbon_of(_int_list(s, 2, len(s)))
    if s.startswith("["):
        return ribbon_of(ribbon_of_label(_label_with_context(s)))
    slash = s.find("/")
    if slash < 0:
        return SkewDiagram(_int_list(s, 0, len(s)))
    outer = _int_list(s, 0, slash)
    inner = _int_list(s, slash + 1, len(s)) if slash + 1 < len(s) else ()
    return SkewDiagram(outer, inner)


def parse_label(text: str, n: int, rows: int) -> RectLabel:
    """Parse '[3,5]' or '3,5' against the poset context given by flags."""
    s = "".join(text.split())
    start, end = 0, len(s)
    if s.startswith("["):
        if not s.endswith("]"):
            raise ParseError(s, len(s), "expected ']'")
        start, end = 1, len(s) - 1
    a, b = _pair(s, start, end, "label")
    return RectLabel(a, b, n, rows)


def _guard(value: int | None, default: int) -> int:
    if value is not None:
        return value
    env = os.environ.get("SCHURPOS_MAX_SIZE")
    if env is None:
        return default
    try:
        return int(env)
    except ValueError:
        raise DomainError(
            f"SCHURPOS_MAX_SIZE must be an integer, got {env!r}"
        ) from None


def _key(parts: Sequence[int]) -> str:
    return ",".join(map(str, parts))


def _vec_dict(vec: SchurVector) -> dict[str, int]:
    return {_key(p): c for p, c in vec.items()}


def _dumps(payload: object) -> str:
    return json.dumps(payload, separators=(",", ":"))


def _shape_text(diagram: SkewDiagram) -> str:
    if is_ribbon(diagram):
        return "r:" + _key(composition_of(diagram))
    return diagram.notation()


def _cmd_expand(args: argparse.Namespace) -> int:
    vec = expand(parse_shape(args.shape), _guard(args.max_size, EXPANSION_GUARD))
    print(_dumps(_vec_dict(vec)))
    return 0


def _cmd_compare(args: argparse.Namespace) -> int:
    result = compare_diagrams(
        parse_shape(args.first),
        parse_shape(args.second),
        _guard(args.max_size, EXPANSION_GUARD),
    )
    print(result.relation.value)
    if args.show_difference and result.difference is not None:
        print(_dumps(_vec_dict(result.difference)))
    return 0


def _node_label(cls: SchurClass, style: str) -> str:
    rep = cls.representative
    if style == "rect":
        return str(label_of_ribbon(composition_of(rep)))
    if is_ribbon(rep):
        return _key(composition_of(rep))
    return rep.notation()


def _emit_poset(model: PosetModel, fmt: str, style: str) -> None:
    if fmt == "json":
        payload = {
            "classes": [
                {
                    "id": i,
                    "members": [_shape_text(d) for d in cls.members],
                    "expansion": _vec_dict(cls.expansion),
                }
                for i, cls in enumerate(model.classes)
            ],
            "hasse": [[lo, hi] for lo, hi in model.hasse],
        }
        print(_dumps(payload))
        return
    lines = ["digraph poset {", "  rankdir=BT;"]
    for i, cls in enumerate(model.classes):
        lines.append(f'  n{i} [label="{_node_label(cls, style)}"];')
    for lo, hi in model.hasse:
        lines.append(f"  n{lo} -> n{hi};")
    lines.append("}")
    print("\n".join(lines))


def _cmd_poset(args: argparse.Namespace) -> int:
    if (args.rows is not None or args.mf) and not args.ribbons:
        raise UsageError("--rows and --mf apply to ribbon posets; add --ribbons")
    if args.label_style == "rect" and not (args.ribbons and args.mf and args.rows):
        raise UsageError("--label-style rect requires --ribbons --mf and --rows")
    if args.ribbons:
        guard = _guard(args.max_size, EXPANSION_GUARD)
        if args.n > guard:
            raise DomainError(f"ribbon posets are limited to size {guard}, got {args.n}")
        diagrams = [
            ribbon_of(c)
            for c in compositions_of(args.n)
            if (args.rows is None or len(c) == args.rows)
            and (not args.mf or mf_pattern(c) is not None)
        ]
    else:
        guard = _guard(args.max_size, ENUMERATION_GUARD)
        diagrams = enumerate_basic_skew(args.n, guard)
    _emit_poset(build_poset(diagrams, guard), args.format, args.label_style)
    return 0


def _cmd_mf(args: argparse.Namespace) -> int:
    n, rows = args.n, args.rows
    wanted = {"list": 0, "covers": 0, "leq": 2, "meet": 2, "join": 2, "schubert": 1}
    if len(args.labels) != wanted[args.action]:
        raise UsageError(
            f"mf {args.action} takes {wanted[args.action]} label argument(s), "
            f"got {len(args.labels)}"
        )
    if args.action == "list":
        for label in elements(n, rows):
            print(f"{label} r:{_key(ribbon_of_label(label))}")
    elif args.action == "covers":
        for lo, hi in covers(n, rows):
            print(f"{lo} < {hi}")
    elif args.action == "schubert":
        first, second = schubert_pair(parse_label(args.labels[0], n, rows))
        print(_dumps([_key(first), _key(second)]))
    else:
        x = parse_label(args.labels[0], n, rows)
        y = parse_label(args.labels[1], n, rows)
        if args.action == "leq":
            print("true" if leq_s_closed(x, y) else "false")
        elif args.action == "meet":
            print(str(meet(x, y)))
        else:
            print(str(join(x, y)))
    return 0


def _require(args: argparse.Namespace, *names: str) -> None:
    missing = [f"--{name}" for name in names if getattr(args, name) is None]
    if missing:
        raise UsageError(f"verify {args.what} requires {' and '.join(missing)}")


def _cmd_verify(args: argparse.Namespace) -> int:
    if args.what == "fourcovers":
        report = verify_fourcovers(_guard(args.max_size, FAMILY_SWEEP_GUARD))
    elif args.what == "onlycovers":
        report = verify_onlycovers(_guard(args.max_size, FAMILY_SWEEP_GUARD))
    elif args.what == "mflemma":
        report = verify_mflemma(_guard(args.max_size, MF_SWEEP_GUARD))
    elif args.what == "bigdiff":
        _require(args, "n", "rows")
        report = verify_bigdiff(args.n, args.rows)
    elif args.what == "convexity":
        _require(args, "n")
        report = convexity_report(args.n, _guard(args.max_size, ENUMERATION_GUARD))
    else:
        _require(args, "n", "rows")
        result = trim_report(args.n, args.rows)
        print(f"join-irreducibles: {result.join_irreducibles}")
        print(f"meet-irreducibles: {result.meet_irreducibles}")
        print(f"longest-chain-elements: {result.longest_chain_elements}")
        print(f"left-modular-max-chain: {str(result.left_modular_max_chain).lower()}")
        print(f"spine-left-modular: {str(result.spine_left_modular).lower()}")
        print(f"spine-distributive: {str(result.spine_distributive).lower()}")
        return 0
    if report.ok:
        print(f"checked {report.checked} instances: OK")
        return 0
    print(f"checked {report.checked} instances: {len(report.disagreements)} disagreements")
    for line in report.disagreements:
        print(line)
    return 3


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="schurpos",
        description="Exact Schur expansions of skew shapes and Schur-positivity posets of ribbons.",
    )
    sub = parser.add_subparsers(dest="command", required=True)
    shape_help = "a shape: '4,3,3/2,2', '4,3,3', 'r:2,1,3', or '[3,5]@15,6'"

    p = sub.add_parser("expand", help="Schur expansion of a shape, as JSON")
    p.add_argument("shape", help=shape_help)
    p.add_argument("--max-size", type=int, metavar="M",
                   help=f"largest shape to expand (default {EXPANSION_GUARD})")
    p.set_defaults(handler=_cmd_expand)

    p = sub.add_parser("compare", help="compare two shapes in the Schur-positivity order")
    p.add_argument("first", help=shape_help)
    p.add_argument("second", help=shape_help)
    p.add_argument("--show-difference", action="store_true",
                   help="also print the positive difference as JSON")
    p.add_argument("--max-size", type=int, metavar="M",
                   help=f"largest shape to expand (default {EXPANSION_GUARD})")
    p.set_defaults(handler=_cmd_compare)

    p = sub.add_parser("poset", help="build a Schur-positivity poset")
    p.add_argument("--n", type=int, required=True, help="number of cells")
    p.add_argument("--ribbons", action="store_true",
                   help="use ribbons of size n instead of all basic skew shapes")
    p.add_argument("--rows", type=int, help="keep only ribbons with this many rows")
    p.add_argument("--mf", action="store_true",
                   help="keep only multiplicity-free ribbons")
    p.add_argument("--format", choices=("json", "dot"), default="json")
    p.add_argument("--label-style", choices=("comp", "rect"), default="comp",
                   help="dot node labels: row-length composition or rectangle label")
    p.add_argument("--max-size", type=int, metavar="M",
                   help=f"size guard (default {EXPANSION_GUARD} for ribbons, "
                        f"{ENUMERATION_GUARD} for the full poset)")
    p.set_defaults(handler=_cmd_poset)

    p = sub.add_parser("mf", help="closed-form multiplicity-free ribbon poset")
    p.add_argument("--n", type=int, required=True, help="number of cells")
    p.add_argument("--rows", type=int, required=True, help="number of ribbon rows")
    p.add_argument("action", choices=("list", "covers", "leq", "meet", "join", "schubert"))
    p.add_argument("labels", nargs="*", help="rectangle labels such as '[3,5]' or '3,5'")
    p.set_defaults(handler=_cmd_mf)

    p = sub.add_parser("verify", help="cross-check closed forms against expansions")
    p.add_argument("what", choices=("fourcovers", "onlycovers", "bigdiff",
                                    "convexity", "trim", "mflemma"))
    p.add_argument("--n", type=int, help="number of cells, where applicable")
    p.add_argument("--rows", type=int, help="number of ribbon rows, where applicable")
    p.add_argument("--max-size", type=int, metavar="M",
                   help=f"sweep bound (default {FAMILY_SWEEP_GUARD} for cover families, "
                        f"{MF_SWEEP_GUARD} for mflemma, {ENUMERATION_GUARD} for convexity)")
    p.set_defaults(handler=_cmd_verify)

    return parser


def main(argv: Sequence[str] | None = None) -> int:
    args = _build_parser().parse_args(argv)
    try:
        return args.handler(args)
    except UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return 2
    except ParseError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except DomainError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
