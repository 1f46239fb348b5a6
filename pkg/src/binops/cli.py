"""Command-line front end.

Exit codes: 0 the command succeeded or the checked property holds, 1 the
property fails (a witness is printed), 2 usage or input error, 3 a size
guard was exceeded.  ``--json`` replaces the text output with one JSON object
carrying at least an ``ok`` key.
"""

from __future__ import annotations

import argparse
import itertools
import json
import sys
from dataclasses import asdict, dataclass, field
from pathlib import Path
from typing import Any, Iterable, Sequence, TextIO

from .core import BinaryOpTable, compose, invert, is_invertible, non_bijective_slice, slices
from .distributive import (
    binary_representation,
    distributivity_witness,
    is_distributive_subgroup,
    slice_relation_witness,
    verify_representation,
)
from .enumeration import criterion_census, enumerate_all_ops, enumerate_invertible
from .errors import BinopError, GroupAxiomError, GuardExceeded
from .groups import closure, group_of_ops, h2_order, identify_group
from .textio import (
    document_name,
    document_kind,
    parse_binop,
    parse_group,
    read_document,
    serialize_binop,
)

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_GUARD = 0, 1, 2, 3


@dataclass
class Outcome:
    ok: bool
    text: Iterable[str] = ()
    result: Any = None
    witness: Any = None
    counts: dict | None = None
    extra: dict = field(default_factory=dict)


class UsageError(Exception):
    pass


def _read_text(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    try:
        return Path(path).read_text()
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror}") from None


def _load_binop(path: str) -> tuple[str, BinaryOpTable]:
    text = _read_text(path)
    return document_name(text) or path, parse_binop(text)


def _table_json(f: BinaryOpTable) -> dict:
    return {"labels": list(f.points.labels), "entries": f.to_lists()}


def _emit_table(f: BinaryOpTable, out_path: str | None, name: str | None = None) -> list[str]:
    text = serialize_binop(f, name)
    if out_path:
        Path(out_path).write_text(text)
        return []
    return [text]


def _label(f: BinaryOpTable, i: int) -> str:
    return f.points.labels[i]


def cmd_validate(args) -> Outcome:
    text = _read_text(args.file)
    kind = document_kind(text)
    if kind == "binop":
        doc = read_document(text)
        f = doc.payload
        inv = is_invertible(f)
        info = {"kind": "binop", "name": doc.name, "n": f.n, "invertible": inv}
        return Outcome(True, [f"binop n={f.n} invertible={'yes' if inv else 'no'}\n"], info)
    try:
        G = parse_group(text)
    except GroupAxiomError as exc:
        w = {"axiom": type(exc).__name__, "elements": list(exc.witness), "message": str(exc)}
        return Outcome(False, [f"group axioms fail: {type(exc).__name__}: {exc}\n"], None, w)
    name = identify_group(G)
    info = {
        "kind": "group",
        "name": document_name(text),
        "order": G.order,
        "identity": G.labels[G.identity],
        "abelian": G.is_abelian(),
        "identified": name,
    }
    line = (
        f"group order={G.order} identity={G.labels[G.identity]} "
        f"abelian={'yes' if G.is_abelian() else 'no'} identified={name}\n"
    )
    return Outcome(True, [line], info)


def cmd_compose(args) -> Outcome:
    _, f = _load_binop(args.f)
    _, g = _load_binop(args.g)
    h = compose(f, g)
    return Outcome(True, _emit_table(h, args.output), _table_json(h))


def _slice_witness_text(f: BinaryOpTable, t: int) -> tuple[str, dict]:
    row = f.entries[t]
    seen = {}
    for x, v in enumerate(row):
        if v in seen:
            w = {"t": _label(f, t), "x": [_label(f, seen[v]), _label(f, x)], "value": _label(f, v)}
            msg = (
                f"witness: slice {w['t']} sends {w['x'][0]} and {w['x'][1]} "
                f"to {w['value']}\n"
            )
            return msg, w
        seen[v] = x
    raise AssertionError("slice is bijective")


def cmd_invert(args) -> Outcome:
    _, f = _load_binop(args.f)
    t = non_bijective_slice(f)
    if t is not None:
        msg, w = _slice_witness_text(f, t)
        return Outcome(False, ["not invertible\n", msg], None, w)
    g = invert(f)
    return Outcome(True, _emit_table(g, args.output), _table_json(g))


def cmd_slices(args) -> Outcome:
    _, f = _load_binop(args.f)
    lines, result = [], []
    for t, m in enumerate(slices(f)):
        images = [_label(f, v) for v in m.images]
        bij = m.is_bijective()
        lines.append(f"{_label(f, t)}: {' '.join(images)}  {'bijective' if bij else 'not bijective'}\n")
        result.append({"t": _label(f, t), "images": images, "bijective": bij})
    return Outcome(True, lines, result)


def cmd_check_invertible(args) -> Outcome:
    _, f = _load_binop(args.f)
    t = non_bijective_slice(f)
    if t is None:
        return Outcome(True, ["invertible\n"], True)
    msg, w = _slice_witness_text(f, t)
    return Outcome(False, ["not invertible\n", msg], False, w)


def cmd_check_distributive(args) -> Outcome:
    # a file named twice contributes one operation, so `F F` checks the single pair (F, F)
    named = [_load_binop(p) for p in dict.fromkeys(args.files)]
    failures = []
    lines = []
    pairs = 0
    for gname, g in named:
        for hname, h in named:
            pairs += 1
            w = distributivity_witness(g, h)
            if w is None:
                continue
            L = g.points.labels
            entry = {
                "pair": [gname, hname],
                "triple": [L[w.x], L[w.x1], L[w.x2]],
                "lhs": L[w.lhs],
                "rhs": L[w.rhs],
            }
            line = (
                f"witness: ({gname}, {hname}) at x={L[w.x]} x'={L[w.x1]} x''={L[w.x2]}: "
                f"g(h(x,x'),h(x,x''))={L[w.lhs]} but h(x,g(x',x''))={L[w.rhs]}"
            )
            if is_invertible(g) and is_invertible(h):
                # the pointwise law for (g, h) is the slice relation for (h, g)
                sw = slice_relation_witness(h, g)
                entry["slices"] = {"t": L[sw.t], "t'": L[sw.t1]}
                line += f"; slice relation fails at t={L[sw.t]} t'={L[sw.t1]}"
            failures.append(entry)
            lines.append(line + "\n")
    ok = not failures
    witness: dict | None = {"pairs": failures} if failures else None
    if args.subgroup:
        tables = [f for _, f in named]
        if not all(is_invertible(f) for f in tables):
            sub_ok, sub_w = False, {"reason": "element not invertible"}
        else:
            sub_ok, sw = is_distributive_subgroup(tables)
            sub_w = None
            if sw is not None:
                sub_w = {"reason": sw.reason, "pair": [_table_json(f) for f in sw.pair]}
                if sw.triple is not None:
                    sub_w["triple"] = [sw.triple.x, sw.triple.x1, sw.triple.x2]
        lines.append(f"distributive subgroup: {'yes' if sub_ok else 'no'}")
        lines.append(f" ({sub_w['reason']})\n" if sub_w else "\n")
        if not sub_ok:
            ok = False
            witness = dict(witness or {}, subgroup=sub_w)
    head = f"distributive on all {pairs} ordered pairs\n" if not failures else (
        f"{len(failures)} of {pairs} ordered pairs fail\n"
    )
    return Outcome(ok, [head] + lines, ok, witness, {"pairs": pairs, "failing": len(failures)})


def _closure_of(paths: Sequence[str]) -> list[BinaryOpTable]:
    return closure([_load_binop(p)[1] for p in paths])


def cmd_closure(args) -> Outcome:
    elems = _closure_of(args.files)
    texts = [serialize_binop(f) for f in elems]
    lines = ["\n".join(texts)]
    extra = {}
    if args.identify:
        name = identify_group(group_of_ops(elems))
        lines.append(f"# identified: {name}\n")
        extra["name"] = name
    return Outcome(True, lines, [_table_json(f) for f in elems], counts={"order": len(elems)}, extra=extra)


def cmd_identify(args) -> Outcome:
    elems = _closure_of(args.files)
    name = identify_group(group_of_ops(elems))
    return Outcome(True, [f"{name}\n"], name, counts={"order": len(elems)})


def cmd_order(args) -> Outcome:
    value = h2_order(args.n)
    return Outcome(True, [f"{value}\n"], value)


def cmd_census(args) -> Outcome:
    c = criterion_census(args.n, args.exhaustive_inverse)
    counts = asdict(c)
    two = "absent" if c.two_sided_invertible_ops is None else str(c.two_sided_invertible_ops)
    line = (
        f"n={c.n} total={c.total_ops} row_permutation={c.row_permutation_ops} "
        f"two_sided={two} formula={c.formula_value}\n"
    )
    witness = None if c.consistent else {"mismatch": counts}
    return Outcome(c.consistent, [line], c.consistent, witness, counts)


def cmd_enumerate(args) -> Outcome:
    if args.invertible:
        stream = enumerate_invertible(args.n, args.limit)
    else:
        stream = enumerate_all_ops(args.n)
        if args.limit is not None:
            stream = itertools.islice(stream, args.limit)

    if args.json:
        tables = [f.to_lists() for f in stream]
        return Outcome(True, (), tables, counts={"emitted": len(tables)})

    def text():
        for i, f in enumerate(stream):
            yield ("\n" if i else "") + serialize_binop(f)

    return Outcome(True, text(), None)


def cmd_represent(args) -> Outcome:
    text = _read_text(args.group)
    G = parse_group(text)
    if args.verify:
        name = document_name(text) or identify_group(G)
        report = verify_representation(G, name)
        lines = [f"{k}: {str(v).lower() if isinstance(v, bool) else v}\n" for k, v in asdict(report).items()]
        witness = None if report.ok else {k: v for k, v in asdict(report).items() if v is False}
        return Outcome(report.ok, lines, asdict(report), witness)
    rep = binary_representation(G)
    texts = [serialize_binop(f, name=f"i_{G.labels[g]}") for g, f in rep]
    result = [{"element": G.labels[g], **_table_json(f)} for g, f in rep]
    return Outcome(True, ["\n".join(texts)], result)


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", default=argparse.SUPPRESS,
                        help="machine-readable output")

    parser = argparse.ArgumentParser(prog="binops", description=__doc__.splitlines()[0])
    parser.add_argument("--json", action="store_true", help="machine-readable output")
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, func, help_):
        p = sub.add_parser(name, parents=[common], help=help_)
        p.set_defaults(func=func)
        return p

    p = add("validate", cmd_validate, "parse a table file and report its kind and invariants")
    p.add_argument("file")
    p = add("compose", cmd_compose, "compose two operations: (F o G)(t,x) = F(t, G(t,x))")
    p.add_argument("f")
    p.add_argument("g")
    p.add_argument("-o", "--output")
    p = add("invert", cmd_invert, "slice-wise inverse of an invertible operation")
    p.add_argument("f")
    p.add_argument("-o", "--output")
    p = add("slices", cmd_slices, "list the slices x -> F(t,x)")
    p.add_argument("f")
    p = add("check-invertible", cmd_check_invertible, "test that every slice is a bijection")
    p.add_argument("f")
    p = add("check-distributive", cmd_check_distributive, "test distributivity on all ordered pairs")
    p.add_argument("files", nargs="+")
    p.add_argument("--subgroup", action="store_true", help="also test that the set is a distributive subgroup")
    p = add("closure", cmd_closure, "subgroup generated by the given operations")
    p.add_argument("files", nargs="+")
    p.add_argument("--identify", action="store_true")
    p = add("order", cmd_order, "number of invertible operations on n points")
    p.add_argument("-n", type=int, required=True)
    p = add("census", cmd_census, "count all, row-permutation and invertible tables")
    p.add_argument("-n", type=int, required=True)
    p.add_argument("--exhaustive-inverse", action="store_true")
    p = add("enumerate", cmd_enumerate, "stream tables in lexicographic order")
    p.add_argument("-n", type=int, required=True)
    p.add_argument("--invertible", action="store_true")
    p.add_argument("--limit", type=int)
    p = add("represent", cmd_represent, "binary Cayley representation of a group")
    p.add_argument("group")
    p.add_argument("--verify", action="store_true")
    p = add("identify", cmd_identify, "name the group generated by the given operations")
    p.add_argument("files", nargs="+")
    return parser


def _write_json(out: TextIO, obj: dict):
    out.write(json.dumps(obj, sort_keys=True) + "\n")


def run_command(argv: Sequence[str], out: TextIO | None = None, err: TextIO | None = None) -> int:
    out = out if out is not None else sys.stdout
    err = err if err is not None else sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(list(argv))
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    for opt in ("n", "limit"):
        value = getattr(args, opt, None)
        if value is not None and value < (0 if opt == "limit" else 1):
            err.write(f"binops: -{opt if opt == 'n' else '-limit'} must be positive\n")
            return EXIT_USAGE

    try:
        outcome = args.func(args)
        if args.json:
            obj = {"ok": outcome.ok, "result": outcome.result}
            if outcome.witness is not None:
                obj["witness"] = outcome.witness
            if outcome.counts is not None:
                obj["counts"] = outcome.counts
            obj.update(outcome.extra)
            _write_json(out, obj)
        else:
            for chunk in outcome.text:
                out.write(chunk)
    except GuardExceeded as exc:
        return _fail(out, err, args, EXIT_GUARD, exc)
    except (BinopError, UsageError, ValueError) as exc:
        return _fail(out, err, args, EXIT_USAGE, exc)
    return EXIT_OK if outcome.ok else EXIT_FAIL


def _fail(out: TextIO, err: TextIO, args, code: int, exc: Exception) -> int:
    err.write(f"binops: {type(exc).__name__}: {exc}\n")
    if args.json:
        _write_json(out, {"ok": False, "result": None, "error": f"{type(exc).__name__}: {exc}"})
    return code


def main(argv: Sequence[str] | None = None) -> int:
    return run_command(sys.argv[1:] if argv is None else argv)


if __name__ == "__main__":
    sys.exit(main())
