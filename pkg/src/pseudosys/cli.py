"""Command-line front end.

Exit codes: 0 success, 1 a law or check failed, 2 usage error, 3 parse
error, 4 dimension mismatch, 5 no induced system, 6 missing limit, 7 invalid
argument, 8 file not readable or writable.
"""

from __future__ import annotations

import argparse
import sys
from fractions import Fraction
from typing import Dict, List, Optional, Sequence

from . import formats
from .delay import DelayParams, delay_membership, delay_snapshot, pure_delay_states
from .errors import (
    DimensionMismatch,
    MissingLimit,
    NoInducedSystem,
    ParseError,
    PseudoSysError,
)
from .laws import run_suite
from .properties import boundary_report, state_function
from .pseudo_system import OPERATORS, UNARY, PseudoSystem
from .signal import Side, Signal, as_time, complement_signal

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_USAGE = 2
EXIT_PARSE = 3
EXIT_DIMENSION = 4
EXIT_NO_INDUCED = 5
EXIT_MISSING_LIMIT = 6
EXIT_INVALID = 7
EXIT_IO = 8


class _Usage(Exception):
    pass


def _load(path: str) -> formats.Document:
    return formats.load(path)


def _names(doc: formats.Document) -> Dict[Signal, str]:
    names: Dict[Signal, str] = {}
    for name, sig in doc.signals.items():
        names.setdefault(sig, name)
    return names


def _pick_system(doc: formats.Document, path: str, name: Optional[str]):
    if name is not None:
        if name not in doc.systems:
            raise _Usage(f"{path}: no system named {name!r}")
        return name, doc.systems[name]
    if len(doc.systems) != 1:
        raise _Usage(f"{path}: expected exactly one system, found {len(doc.systems)} (use --system)")
    return next(iter(doc.systems.items()))


def _sides(side: str) -> List[Side]:
    return list(Side) if side == "both" else [Side(side)]


def _time_list(text: str) -> List[Fraction]:
    try:
        return [as_time(part.strip()) for part in text.split(",") if part.strip()]
    except PseudoSysError as exc:
        raise _Usage(str(exc)) from None


def _fmt_opt(v) -> str:
    return "none" if v is None else str(v)


def _report_text(r, names) -> str:
    lines = [
        f"side {r.side.value}",
        f"state_level {r.state_level.label}",
        f"constant_value {_fmt_opt(r.constant_value)}",
        f"time_level {r.time_level.label}",
        f"cell {_fmt_opt(r.cell)}",
        f"vacuous {str(r.vacuous).lower()}",
        f"global_instant {_fmt_opt(r.global_instant)}",
    ]
    for w in r.per_input:
        values = ",".join(sorted(str(v) for v in w.values)) or "-"
        lines.append(f"input {names.get(w.input, '?')} values {values} instant {_fmt_opt(w.extremal_instant)}")
    return "\n".join(lines) + "\n"


def _state_fn_text(r, names) -> str:
    lines = [f"side {r.side.value}"]
    for u, vs in r.phi.items():
        lines.append(f"phi {names.get(u, '?')} {{{','.join(sorted(str(v) for v in vs))}}}")
    lines.append(f"theta {{{','.join(sorted(str(v) for v in r.theta))}}}")
    return "\n".join(lines) + "\n"


def _with_names(f: PseudoSystem, names: Dict[Signal, str]) -> Dict[Signal, str]:
    # signals the document does not name get their canonical universe name
    out = dict(names)
    for i, s in enumerate(f.input_universe, 1):
        out.setdefault(s, f"u{i}")
    return out


def cmd_classify(args) -> str:
    doc = _load(args.file)
    _, f = _pick_system(doc, args.file, args.system)
    names = _with_names(f, _names(doc))
    reports = [boundary_report(f, side) for side in _sides(args.side)]
    if args.json:
        return formats.dumps([formats.report_to_json(r, names) for r in reports])
    return "\n".join(_report_text(r, names) for r in reports)


def cmd_state_fn(args) -> str:
    doc = _load(args.file)
    _, f = _pick_system(doc, args.file, args.system)
    names = _with_names(f, _names(doc))
    reports = [state_function(f, side) for side in _sides(args.side)]
    if args.json:
        return formats.dumps([formats.state_function_to_json(r, names) for r in reports])
    return "\n".join(_state_fn_text(r, names) for r in reports)


_BAR = ".bar"


def _bar_name(name: str) -> str:
    return name[: -len(_BAR)] if name.endswith(_BAR) else name + _BAR


def _carry_names(op: str, named: Dict[str, Signal], result: PseudoSystem) -> Dict[str, Signal]:
    # keep the names of signals that survive the operator; dual renames by complement
    if op == "dual":
        named = {_bar_name(k): complement_signal(v) for k, v in named.items()}
    universe = set(result.input_universe) | set(result.state_universe)
    out: Dict[str, Signal] = {}
    seen = set()
    for name, sig in named.items():
        if sig in universe and sig not in seen:
            out[name] = sig
            seen.add(sig)
    return out


def cmd_op(args) -> str:
    op = args.operator
    if op not in OPERATORS:
        raise _Usage(f"unknown operator {op!r}; choose from {', '.join(sorted(OPERATORS))}")
    need = 1 if op in UNARY else 2
    systems = []
    named: Dict[str, Signal] = {}
    for path in args.files:
        doc = _load(path)
        for k, v in doc.signals.items():
            named.setdefault(k, v)
        if len(args.files) == 1 and need == 2 and args.system is None:
            systems.extend(doc.systems.items())
        else:
            systems.append(_pick_system(doc, path, args.system))
    if len(systems) != need:
        raise _Usage(f"operator {op} takes {need} system(s), got {len(systems)}")
    result = OPERATORS[op](*(f for _, f in systems))
    if args.json:
        return formats.dumps(formats.system_to_json(result))
    name = args.name or (systems[0][0] if need == 1 else "f")
    doc = formats.Document(signals=_carry_names(op, named, result), systems={name: result})
    return formats.format_document(doc)


def _signals(path: str) -> List[Signal]:
    return list(_load(path).signals.values())


def _one_signal(path: str) -> Signal:
    sigs = _signals(path)
    if len(sigs) != 1:
        raise _Usage(f"{path}: expected exactly one signal, found {len(sigs)}")
    return sigs[0]


def cmd_delay(args) -> str:
    p = DelayParams(args.d)
    u = _one_signal(args.input)
    if args.state is not None:
        x = _one_signal(args.state)
        ok = delay_membership(u, x, p)
        args.exit_code = EXIT_OK if ok else EXIT_FAILED
        if args.json:
            return formats.dumps({"d": str(p.d), "member": ok})
        return "member\n" if ok else "not a member\n"
    states = sorted(pure_delay_states(u, p, _time_list(args.taus or str(p.d))), key=lambda s: s.sort_key)
    if args.json:
        return formats.dumps([formats.signal_to_json(s) for s in states])
    doc = formats.Document(signals={f"x{i}": s for i, s in enumerate(states, 1)})
    return formats.format_document(doc)


def cmd_snapshot(args) -> str:
    p = DelayParams(args.d)
    named = dict(_load(args.inputs).signals)
    inputs = list(named.values())
    extras = []
    if args.candidates:
        cand = _load(args.candidates).signals
        extras = list(cand.values())
        for k, v in cand.items():
            named.setdefault(k, v)
    taus = _time_list(args.taus or str(p.d))
    f = delay_snapshot(inputs, p, taus, extras)
    if args.json:
        return formats.dumps(formats.system_to_json(f))
    return formats.format_document(formats.Document(signals=_carry_names("snapshot", named, f), systems={args.name: f}))


def cmd_laws(args) -> str:
    if args.iters < 0 or args.jobs < 1:
        raise _Usage("--iters must be >= 0 and --jobs >= 1")
    report = run_suite(args.seed, args.iters, jobs=args.jobs)
    args.exit_code = EXIT_OK if report.ok else EXIT_FAILED
    if args.json:
        return formats.dumps(report.to_json())
    return report.to_text()


def cmd_fmt(args) -> str:
    changed = []
    for path in args.files:
        with open(path, encoding="utf-8") as fh:
            text = fh.read()
        canonical = formats.format_document(formats.parse_document(text, path))
        if canonical != text:
            changed.append(path)
            if not args.check:
                with open(path, "w", encoding="utf-8") as fh:
                    fh.write(canonical)
    if args.check and changed:
        args.exit_code = EXIT_FAILED
    verb = "would reformat" if args.check else "reformatted"
    return "".join(f"{verb} {p}\n" for p in changed)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="pseudosys", description="Exact algebra of asynchronous pseudo-systems.")
    sub = parser.add_subparsers(dest="verb", required=True, metavar="VERB")

    def common(p, output=True):
        p.add_argument("--json", action="store_true", help="emit JSON instead of text")
        if output:
            p.add_argument("-o", "--output", help="write to this file instead of stdout")

    p = sub.add_parser("classify", help="classify a system on the initial and final side")
    p.add_argument("file")
    p.add_argument("--side", choices=["initial", "final", "both"], default="both")
    p.add_argument("--system", help="system name when the file holds several")
    common(p)
    p.set_defaults(run=cmd_classify)

    p = sub.add_parser("state-fn", help="initial or final state function")
    p.add_argument("file")
    p.add_argument("--side", choices=["initial", "final", "both"], default="both")
    p.add_argument("--system")
    common(p)
    p.set_defaults(run=cmd_state_fn)

    p = sub.add_parser("op", help="apply an operator: " + ", ".join(sorted(OPERATORS)))
    p.add_argument("operator")
    p.add_argument("files", nargs="+")
    p.add_argument("--system")
    p.add_argument("--name", help="name of the resulting system (default: the input system name, or f)")
    common(p)
    p.set_defaults(run=cmd_op)

    p = sub.add_parser("delay", help="test delay membership or list pure delays")
    p.add_argument("input", help="file with the input signal")
    p.add_argument("state", nargs="?", help="file with a candidate state signal")
    p.add_argument("--d", required=True, type=str)
    p.add_argument("--taus", help="comma-separated delays in (0, d]; default d")
    common(p)
    p.set_defaults(run=cmd_delay)

    p = sub.add_parser("snapshot", help="finite pseudo-system of the delay relation")
    p.add_argument("inputs", help="file with the input signals")
    p.add_argument("--candidates", help="file with extra candidate states")
    p.add_argument("--d", required=True, type=str)
    p.add_argument("--taus", help="comma-separated delays in (0, d]; default d")
    p.add_argument("--name", default="delay")
    common(p)
    p.set_defaults(run=cmd_snapshot)

    p = sub.add_parser("laws", help="run the randomized law suite")
    p.add_argument("--seed", type=int, default=1)
    p.add_argument("--iters", type=int, default=1000)
    p.add_argument("--jobs", type=int, default=1)
    common(p)
    p.set_defaults(run=cmd_laws)

    p = sub.add_parser("fmt", help="rewrite files in canonical form")
    p.add_argument("files", nargs="+")
    p.add_argument("--check", action="store_true", help="only report files that are not canonical")
    p.set_defaults(run=cmd_fmt, json=False, output=None)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    args.exit_code = EXIT_OK
    try:
        out = args.run(args)
    except _Usage as exc:
        print(f"pseudosys: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except ParseError as exc:
        print(f"pseudosys: parse error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except DimensionMismatch as exc:
        print(f"pseudosys: dimension mismatch: {exc}", file=sys.stderr)
        return EXIT_DIMENSION
    except NoInducedSystem as exc:
        print(f"pseudosys: no induced system: {exc}", file=sys.stderr)
        return EXIT_NO_INDUCED
    except MissingLimit as exc:
        print(f"pseudosys: missing limit: {exc}", file=sys.stderr)
        return EXIT_MISSING_LIMIT
    except (PseudoSysError, ValueError) as exc:
        print(f"pseudosys: invalid argument: {exc}", file=sys.stderr)
        return EXIT_INVALID
    except OSError as exc:
        print(f"pseudosys: {exc}", file=sys.stderr)
        return EXIT_IO
    if getattr(args, "output", None):
        try:
            with open(args.output, "w", encoding="utf-8") as fh:
                fh.write(out)
        except OSError as exc:
            print(f"pseudosys: {exc}", file=sys.stderr)
            return EXIT_IO
    else:
        sys.stdout.write(out)
    return args.exit_code


if __name__ == "__main__":
    sys.exit(main())
