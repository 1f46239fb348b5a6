"""Plain-text table formats.

A binary operation::

    # comments and blank lines are ignored
    points: a b
    a: b a
    b: b a

means ``f(a, a) = b, f(a, b) = a, ...``: row ``L`` lists ``f(L, L_j)`` for the
labels ``L_j`` of the ``points`` line, in that order.  A group table uses the
same layout with an ``elements`` header, row ``r`` listing ``r * c_j``.

Serialization writes rows in header order with single spaces and a trailing
newline, so ``serialize(parse(text))`` is the canonical form of ``text``.
A ``# name: X`` comment before the header names a document.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Union

from .core import BinaryOpTable, PointSet
from .errors import ArityMismatch, DuplicateLabel, ExtraRow, MissingRow, ParseError, UnknownLabel
from .groups import FiniteGroup, validate_group

BINOP_HEADER = "points"
GROUP_HEADER = "elements"


def _significant_lines(text: str) -> list[tuple[int, str]]:
    out = []
    for lineno, line in enumerate(text.splitlines(), start=1):
        stripped = line.strip()
        if not stripped or stripped.startswith("#"):
            continue
        out.append((lineno, stripped))
    return out


def _split_labelled(line: str, lineno: int) -> tuple[str, list[str]]:
    head, sep, rest = line.partition(":")
    if not sep:
        raise ParseError(f"expected 'LABEL: ...', got {line!r}", lineno)
    head = head.strip()
    if not head or len(head.split()) != 1:
        raise ParseError(f"bad row label {head!r}", lineno)
    return head, rest.split()


def _parse_square(text: str, header: str) -> tuple[tuple[str, ...], list[list[int]]]:
    lines = _significant_lines(text)
    if not lines:
        raise ParseError(f"empty document; expected '{header}:' line")
    lineno, first = lines[0]
    key, labels = _split_labelled(first, lineno)
    if key != header:
        raise ParseError(f"expected '{header}:' header, got {key!r}", lineno)
    if not labels:
        raise ParseError("header declares no labels", lineno)
    index: dict[str, int] = {}
    for label in labels:
        if label in index:
            raise DuplicateLabel(f"duplicate label {label!r}", lineno)
        index[label] = len(index)
    n = len(labels)

    rows: dict[int, list[int]] = {}
    for lineno, line in lines[1:]:
        row_label, tokens = _split_labelled(line, lineno)
        if row_label not in index:
            raise UnknownLabel(row_label, lineno)
        t = index[row_label]
        if t in rows:
            raise ExtraRow(row_label, lineno)
        if len(tokens) != n:
            raise ArityMismatch(f"row {row_label!r} has {len(tokens)} values, expected {n}", lineno)
        values = []
        for tok in tokens:
            if tok not in index:
                raise UnknownLabel(tok, lineno)
            values.append(index[tok])
        rows[t] = values
    for t, label in enumerate(labels):
        if t not in rows:
            raise MissingRow(label)
    return tuple(labels), [rows[t] for t in range(n)]


def _check_label(label: str):
    if not label or ":" in label or label.startswith("#") or len(label.split()) != 1:
        raise ValueError(f"label {label!r} cannot be written in the table format")


def _serialize_square(header: str, labels: tuple[str, ...], table, name: str | None = None) -> str:
    for label in labels:
        _check_label(label)
    out = []
    if name is not None:
        out.append(f"# name: {name}")
    out.append(f"{header}: " + " ".join(labels))
    for label, row in zip(labels, table):
        out.append(f"{label}: " + " ".join(labels[v] for v in row))
    return "\n".join(out) + "\n"


def parse_binop(text: str) -> BinaryOpTable:
    labels, rows = _parse_square(text, BINOP_HEADER)
    return BinaryOpTable(PointSet.from_labels(labels), tuple(tuple(r) for r in rows))


def serialize_binop(f: BinaryOpTable, name: str | None = None) -> str:
    return _serialize_square(BINOP_HEADER, f.points.labels, f.entries, name)


def parse_group(text: str) -> FiniteGroup:
    """Parse and validate a group table; group-axiom errors propagate as is."""
    labels, rows = _parse_square(text, GROUP_HEADER)
    return validate_group(labels, rows)


def serialize_group(G: FiniteGroup, name: str | None = None) -> str:
    return _serialize_square(GROUP_HEADER, G.labels, G.table, name)


@dataclass(frozen=True)
class Document:
    kind: str  # "binop" or "group"
    name: str | None
    payload: Union[BinaryOpTable, FiniteGroup]


def document_name(text: str) -> str | None:
    for line in text.splitlines():
        stripped = line.strip()
        if stripped.startswith("#"):
            body = stripped[1:].strip()
            if body.startswith("name:"):
                return body[len("name:"):].strip() or None
        elif stripped:
            break
    return None


def document_kind(text: str) -> str:
    lines = _significant_lines(text)
    if not lines:
        raise ParseError("empty document")
    lineno, first = lines[0]
    key = first.partition(":")[0].strip()
    if key == BINOP_HEADER:
        return "binop"
    if key == GROUP_HEADER:
        return "group"
    raise ParseError(f"unknown header {key!r}; expected 'points:' or 'elements:'", lineno)


def read_document(text: str) -> Document:
    kind = document_kind(text)
    payload = parse_binop(text) if kind == "binop" else parse_group(text)
    return Document(kind, document_name(text), payload)


def write_document(doc: Document) -> str:
    if doc.kind == "binop":
        return serialize_binop(doc.payload, doc.name)
    return serialize_group(doc.payload, doc.name)


def load_fixture(name: str) -> Document:
    """Read one of the bundled tables (``phi1.bop``, ``klein.grp``, ...)."""
    from importlib.resources import files

    return read_document(files("binops.fixtures").joinpath(name).read_text())
