"""Text and JSON formats for signals, pseudo-systems and reports.

A document is a sequence of blocks.  Signal blocks::

    signal <name> dim <n>
    left const <bits> | left periodic <dur>:<bits> ...
    events <time>:<bits> ...
    right const | right periodic <dur>:<bits> ...

System blocks refer to signals by name::

    system <name> m <m> n <n>
    input <signal-name> ...
    state <signal-name> ...
    map <input-name> -> [<state-name> ...]

Times and durations are integers or ``p/q``.  ``#`` starts a comment and
whitespace is free.  Serialization is canonical: signals are re-emitted in
canonical form, universes and map lines follow the canonical universe order,
and only admissible inputs get a map line.  All signal blocks precede
all system blocks.  Universe signals that the
document does not name are emitted as ``<system>_u<i>`` / ``<system>_x<j>``.
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, List, Optional, Union

from .errors import DimensionMismatch, ParseError, SignalError
from .properties import BoundaryReport, StateFunctionReport
from .pseudo_system import PseudoSystem, from_pairs
from .signal import BVec, Const, Periodic, Signal, Tail, make_signal

_TOKEN = re.compile(r"\S+")
_NAME = re.compile(r"[A-Za-z_][\w.\-]*$")
_BITS = re.compile(r"[01]+$")


@dataclass
class Document:
    """Named signals and systems, in declaration order."""

    signals: Dict[str, Signal] = field(default_factory=dict)
    systems: Dict[str, PseudoSystem] = field(default_factory=dict)


class _Line:
    def __init__(self, number: int, text: str, source: str):
        self.number = number
        self.source = source
        body = text.split("#", 1)[0]
        self.tokens = [(m.group(), m.start() + 1) for m in _TOKEN.finditer(body)]

    def error(self, message: str, index: Optional[int] = None) -> ParseError:
        if index is None or not self.tokens:
            column = 1
        elif index >= len(self.tokens):
            last, col = self.tokens[-1]
            column = col + len(last)
        else:
            column = self.tokens[index][1]
        return ParseError(message, self.number, column, self.source)

    def word(self, index: int) -> str:
        if index >= len(self.tokens):
            raise self.error("unexpected end of line", index)
        return self.tokens[index][0]


def _time(line: _Line, text: str, index: int) -> Fraction:
    try:
        if not re.fullmatch(r"-?\d+(/\d+)?", text):
            raise ValueError
        return Fraction(text)
    except (ValueError, ZeroDivisionError):
        raise line.error(f"bad rational {text!r}", index) from None


def _bits(line: _Line, text: str, index: int, dim: int) -> BVec:
    if not _BITS.match(text):
        raise line.error(f"bad bit string {text!r}", index)
    if len(text) != dim:
        raise line.error(f"bit string {text!r} does not have length {dim}", index)
    return BVec(text)


def _pairs(line: _Line, start: int, dim: int):
    out = []
    for i in range(start, len(line.tokens)):
        tok = line.word(i)
        if tok.count(":") != 1:
            raise line.error(f"expected <time>:<bits>, got {tok!r}", i)
        t, v = tok.split(":")
        out.append((_time(line, t, i), _bits(line, v, i, dim)))
    if not out:
        raise line.error("expected at least one <time>:<bits> pair", start)
    return out


def _tail(line: _Line, keyword: str, dim: int) -> Tail:
    if line.word(0) != keyword:
        raise line.error(f"expected '{keyword}'", 0)
    kind = line.word(1)
    if kind == "const":
        if len(line.tokens) > 3:
            raise line.error("trailing tokens", 3)
        if len(line.tokens) == 3:
            return Const(_bits(line, line.word(2), 2, dim))
        if keyword == "left":
            raise line.error("left const needs a value", 2)
        return Const()
    if kind == "periodic":
        pattern = _pairs(line, 2, dim)
        for (d, _), i in zip(pattern, range(2, len(line.tokens))):
            if d <= 0:
                raise line.error("periodic durations must be positive", i)
        return Periodic(tuple(pattern))
    raise line.error(f"expected 'const' or 'periodic', got {kind!r}", 1)


def _int_field(line: _Line, index: int, key: str) -> int:
    if line.word(index) != key:
        raise line.error(f"expected '{key}'", index)
    text = line.word(index + 1)
    if not text.isdigit() or int(text) <= 0:
        raise line.error(f"{key} must be a positive integer", index + 1)
    return int(text)


def _name(line: _Line, index: int) -> str:
    name = line.word(index)
    if not _NAME.match(name):
        raise line.error(f"bad name {name!r}", index)
    return name


def parse_document(text: str, source: str = "<string>", known: Optional[Dict[str, Signal]] = None) -> Document:
    """Parse a document.  ``known`` supplies signals declared elsewhere."""
    lines = [_Line(i + 1, raw, source) for i, raw in enumerate(text.splitlines())]
    lines = [ln for ln in lines if ln.tokens]
    doc = Document()
    scope: Dict[str, Signal] = dict(known or {})
    pos = 0

    def take(expect: str) -> _Line:
        nonlocal pos
        if pos >= len(lines):
            last = lines[-1] if lines else _Line(1, "", source)
            raise ParseError(f"unexpected end of input, expected '{expect}'", last.number + 1, 1, source)
        ln = lines[pos]
        pos += 1
        return ln

    def declare(line: _Line, name: str):
        if name in doc.signals or name in doc.systems:
            raise line.error(f"duplicate name {name!r}", 1)

    while pos < len(lines):
        head = take("signal")
        kind = head.word(0)
        if kind == "signal":
            name = _name(head, 1)
            declare(head, name)
            dim = _int_field(head, 2, "dim")
            if len(head.tokens) > 4:
                raise head.error("trailing tokens", 4)
            left = _tail(take("left"), "left", dim)
            ev_line = take("events")
            if ev_line.word(0) != "events":
                raise ev_line.error("expected 'events'", 0)
            events = _pairs(ev_line, 1, dim)
            for i in range(1, len(events)):
                if events[i][0] <= events[i - 1][0]:
                    raise ev_line.error("event times must be strictly increasing", i + 1)
            right_line = take("right")
            right = _tail(right_line, "right", dim)
            try:
                sig = make_signal(dim, left, events, right)
            except SignalError as exc:
                raise head.error(f"signal {name}: {exc}", 1) from None
            doc.signals[name] = sig
            scope[name] = sig
        elif kind == "system":
            name = _name(head, 1)
            declare(head, name)
            m = _int_field(head, 2, "m")
            n = _int_field(head, 4, "n")
            if len(head.tokens) > 6:
                raise head.error("trailing tokens", 6)
            inputs, states, pairs = [], [], []
            input_names, state_names = set(), set()

            def lookup(line, i, dim, role):
                ref = line.word(i)
                if ref not in scope:
                    raise line.error(f"unknown signal {ref!r}", i)
                sig = scope[ref]
                if sig.dim != dim:
                    raise DimensionMismatch(
                        f"{source}:{line.number}:{line.tokens[i][1]}: {role} {ref!r} has dimension "
                        f"{sig.dim}, system {name} expects {dim}"
                    )
                return sig

            while pos < len(lines) and lines[pos].word(0) in ("input", "state", "map"):
                ln = take("map")
                word = ln.word(0)
                if word == "input":
                    for i in range(1, len(ln.tokens)):
                        inputs.append(lookup(ln, i, m, "input"))
                        input_names.add(ln.word(i))
                elif word == "state":
                    for i in range(1, len(ln.tokens)):
                        states.append(lookup(ln, i, n, "state"))
                        state_names.add(ln.word(i))
                else:
                    u = lookup(ln, 1, m, "input")
                    if ln.word(1) not in input_names:
                        raise ln.error(f"{ln.word(1)!r} is not declared as an input", 1)
                    if ln.word(2) != "->":
                        raise ln.error("expected '->'", 2)
                    rest = " ".join(tok for tok, _ in ln.tokens[3:])
                    if not (rest.startswith("[") and rest.endswith("]")):
                        raise ln.error("expected '[<state-name> ...]'", 3)
                    # re-tokenize so brackets may touch names
                    inner = rest[1:-1].split()
                    col0 = ln.tokens[3][1]
                    for ref in inner:
                        if ref not in state_names:
                            raise ParseError(f"{ref!r} is not declared as a state", ln.number, col0, source)
                        pairs.append((u, scope[ref]))
            doc.systems[name] = from_pairs(m, n, inputs, states, pairs)
        else:
            raise head.error(f"expected 'signal' or 'system', got {kind!r}", 0)
    return doc


def parse_signal(text: str, source: str = "<string>") -> Signal:
    doc = parse_document(text, source)
    if len(doc.signals) != 1 or doc.systems:
        raise ParseError("expected exactly one signal block", 1, 1, source)
    return next(iter(doc.signals.values()))


def parse_system(text: str, source: str = "<string>") -> PseudoSystem:
    doc = parse_document(text, source)
    if len(doc.systems) != 1:
        raise ParseError("expected exactly one system block", 1, 1, source)
    return next(iter(doc.systems.values()))


def load(path) -> Document:
    with open(path, encoding="utf-8") as fh:
        return parse_document(fh.read(), str(path))


def format_signal(x: Signal, name: str) -> str:
    return f"signal {name} dim {x.dim}\n{x.text}\n"


def format_document(doc: Document) -> str:
    blocks: List[str] = []
    names: Dict[Signal, str] = {}
    for name, sig in doc.signals.items():
        blocks.append(format_signal(sig, name))
        names.setdefault(sig, name)
    system_blocks: List[str] = []
    taken = set(doc.signals)
    for sysname, f in doc.systems.items():
        local = names
        extra = []
        for prefix, universe in (("u", f.input_universe), ("x", f.state_universe)):
            for i, sig in enumerate(universe, 1):
                if sig not in local:
                    fresh = f"{sysname}_{prefix}{i}"
                    while fresh in taken:
                        fresh += "_"
                    taken.add(fresh)
                    local[sig] = fresh
                    extra.append(format_signal(sig, fresh))
        lines = [f"system {sysname} m {f.m} n {f.n}"]
        lines.append(" ".join(["input"] + [local[s] for s in f.input_universe]))
        lines.append(" ".join(["state"] + [local[s] for s in f.state_universe]))
        for i, js in f.table:
            targets = " ".join(local[f.state_universe[j]] for j in js)
            lines.append(f"map {local[f.input_universe[i]]} -> [{targets}]")
        blocks.extend(extra)
        system_blocks.append("\n".join(lines) + "\n")
    # every signal block comes first so that re-parsing keeps the order
    return "\n".join(blocks + system_blocks)


def format_system(f: PseudoSystem, name: str = "f") -> str:
    return format_document(Document(systems={name: f}))


# JSON

def _rat(t: Fraction) -> str:
    return str(t)


def tail_to_json(tail: Tail) -> dict:
    if isinstance(tail, Const):
        return {"kind": "const", "value": None if tail.value is None else str(tail.value)}
    return {"kind": "periodic", "pattern": [[_rat(d), str(v)] for d, v in tail.pattern]}


def signal_to_json(x: Signal) -> dict:
    return {
        "dim": x.dim,
        "left": tail_to_json(x.left_tail),
        "events": [[_rat(t), str(v)] for t, v in x.events],
        "right": tail_to_json(x.right_tail),
    }


def system_to_json(f: PseudoSystem) -> dict:
    return {
        "m": f.m,
        "n": f.n,
        "inputs": [signal_to_json(s) for s in f.input_universe],
        "states": [signal_to_json(s) for s in f.state_universe],
        "map": [[i, list(js)] for i, js in f.table],
    }


def _opt(v) -> Optional[str]:
    return None if v is None else str(v)


def report_to_json(r: BoundaryReport, names: Optional[Dict[Signal, str]] = None) -> dict:
    names = names or {}
    return {
        "side": r.side.value,
        "state_level": r.state_level.label,
        "constant_value": _opt(r.constant_value),
        "time_level": r.time_level.label,
        "cell": r.cell,
        "vacuous": r.vacuous,
        "per_input": [
            {
                "input": names.get(w.input, w.input.text),
                "values": sorted(str(v) for v in w.values),
                "extremal_instant": _opt(w.extremal_instant),
            }
            for w in r.per_input
        ],
        "global_instant": _opt(r.global_instant),
    }


def state_function_to_json(r: StateFunctionReport, names: Optional[Dict[Signal, str]] = None) -> dict:
    names = names or {}
    return {
        "side": r.side.value,
        "phi": [
            {"input": names.get(u, u.text), "values": sorted(str(v) for v in vs)}
            for u, vs in r.phi.items()
        ],
        "theta": sorted(str(v) for v in r.theta),
    }


def dumps(obj: Union[dict, list]) -> str:
    return json.dumps(obj, indent=2, sort_keys=True) + "\n"
