"""How classifications and state functions travel through constructions.

:func:`check_transfer_laws` builds the requested construction from the given
systems, classifies operands and result, and reports every applicable law as
a :class:`LawResult`.  Failures are results, never exceptions.
"""

from __future__ import annotations

from typing import Callable, Dict, List, NamedTuple

from .properties import (
    BoundaryReport,
    StateLevel,
    TimeLevel,
    boundary_report,
    state_function,
)
from .pseudo_system import (
    PseudoSystem,
    _cat,
    dual,
    intersect,
    inverse,
    is_null,
    is_subsystem,
    product,
    serial,
    support,
    union,
)
from .signal import Side, is_signal, limit_value


class LawResult(NamedTuple):
    name: str
    passed: bool
    detail: str = ""


LEVELS = (StateLevel.HAS_STATES, StateLevel.RACE_FREE, StateLevel.CONSTANT)
TIMES = (TimeLevel.UNBOUNDED, TimeLevel.BOUNDED, TimeLevel.FIX)


def _bar_set(values):
    return frozenset(~v for v in values)


def _merge_instants(side: Side, a, b):
    # None means "every instant works", so it never tightens the other bound
    if a is None:
        return b
    if b is None:
        return a
    return min(a, b) if side is Side.INITIAL else max(a, b)


def _instant(report: BoundaryReport, u):
    w = report.witness(u)
    return None if w is None else w.extremal_instant


def _at_least_as_wide(side: Side, sub, sup) -> bool:
    """Valid witnesses of ``sub`` include those of ``sup``."""
    if sub is None:
        return True
    if sup is None:
        return False
    return sub >= sup if side is Side.INITIAL else sub <= sup


class _Checker:
    def __init__(self, prefix: str):
        self.prefix = prefix
        self.results: List[LawResult] = []

    def __call__(self, name: str, passed: bool, detail: str = ""):
        self.results.append(LawResult(f"{self.prefix}: {name}", bool(passed), "" if passed else detail))


def _subsystem(f: PseudoSystem, g: PseudoSystem) -> List[LawResult]:
    if not is_subsystem(f, g):
        raise ValueError("the first system is not a pseudo-subsystem of the second")
    law = _Checker("subsystem")
    for side in Side:
        rf, rg = boundary_report(f, side), boundary_report(g, side)
        law(f"{side.value} state level inherited", rf.state_level >= rg.state_level,
            f"{rg.state_level.label} -> {rf.state_level.label}")
        if rg.constant_value is not None and rf.constant_value is not None:
            law(f"{side.value} constant inherited", rf.constant_value == rg.constant_value)
        law(f"{side.value} time level inherited", rf.time_level >= rg.time_level)
        law(
            f"{side.value} witness instants inherited",
            all(_at_least_as_wide(side, w.extremal_instant, _instant(rg, w.input)) for w in rf.per_input),
        )
        if rg.state_level >= StateLevel.HAS_STATES:
            pf, pg = state_function(f, side), state_function(g, side)
            law(f"{side.value} state function included", all(pf(u) <= pg(u) for u in f.input_universe))
            law(f"{side.value} state set included", pf.theta <= pg.theta)
    return law.results


def _dual(f: PseudoSystem) -> List[LawResult]:
    fd = dual(f)
    law = _Checker("dual")
    for side in Side:
        r, rd = boundary_report(f, side), boundary_report(fd, side)
        law(f"{side.value} state level preserved", r.state_level == rd.state_level,
            f"{r.state_level.label} vs {rd.state_level.label}")
        if r.constant_value is not None:
            law(f"{side.value} constant complemented", rd.constant_value == ~r.constant_value)
        law(f"{side.value} time level preserved", r.time_level == rd.time_level)
        law(
            f"{side.value} witness instants preserved",
            all(_instant(rd, ~w.input) == w.extremal_instant for w in r.per_input)
            and len(r.per_input) == len(rd.per_input),
        )
        if r.state_level >= StateLevel.HAS_STATES:
            p, pd = state_function(f, side), state_function(fd, side)
            law(
                f"{side.value} state function complemented",
                all(pd(u) == _bar_set(p(~u)) for u in fd.input_universe),
            )
            law(f"{side.value} state set complemented", pd.theta == _bar_set(p.theta))
    return law.results


def _inverse(f: PseudoSystem) -> List[LawResult]:
    fi = inverse(f)
    law = _Checker("inverse")
    if boundary_report(fi, Side.INITIAL).state_level >= StateLevel.HAS_STATES:
        law("initial states force signal inputs", all(is_signal(u) for u in support(f)))
    for side in Side:
        if boundary_report(fi, side).state_level >= StateLevel.HAS_STATES:
            pi = state_function(fi, side)
            law(
                f"{side.value} state function of inverse",
                all(
                    pi(x) == frozenset(limit_value(u, side) for u, xs in f.image.items() if x in xs)
                    for x in fi.input_universe
                ),
            )
            law(
                f"{side.value} state set of inverse",
                pi.theta == frozenset(limit_value(u, side) for u in support(f)),
            )
    return law.results


def _product(f: PseudoSystem, g: PseudoSystem) -> List[LawResult]:
    p = product(f, g)
    law = _Checker("product")
    both_nonnull = not is_null(f) and not is_null(g)
    for side in Side:
        rf, rg, rp = (boundary_report(s, side) for s in (f, g, p))
        for level in LEVELS:
            both = rf.state_level >= level and rg.state_level >= level
            law(f"{side.value} {level.label} of factors carries over", not both or rp.state_level >= level)
            if both_nonnull:
                law(f"{side.value} {level.label} of product reaches factors", rp.state_level < level or both)
        for tl in TIMES:
            both = rf.time_level >= tl and rg.time_level >= tl
            law(f"{side.value} {tl.label} time carries over", not both or rp.time_level >= tl)
            if both_nonnull:
                law(f"{side.value} {tl.label} time reaches factors", rp.time_level < tl or both)
        if rf.state_level >= StateLevel.HAS_STATES and rg.state_level >= StateLevel.HAS_STATES:
            law(
                f"{side.value} product witness is the tighter factor witness",
                all(
                    _instant(rp, _cat(wf.input, wg.input))
                    == _merge_instants(side, wf.extremal_instant, wg.extremal_instant)
                    for wf in rf.per_input
                    for wg in rg.per_input
                ),
            )
            pf, pg, pp = (state_function(s, side) for s in (f, g, p))
            law(
                f"{side.value} state function is the product",
                all(
                    pp(_cat(u, v)) == frozenset(a.concat(b) for a in pf(u) for b in pg(v))
                    for u in f.input_universe
                    for v in g.input_universe
                ),
            )
            law(
                f"{side.value} state set is the product",
                pp.theta == frozenset(a.concat(b) for a in pf.theta for b in pg.theta),
            )
    return law.results


def _serial(h: PseudoSystem, f: PseudoSystem) -> List[LawResult]:
    s = serial(h, f)
    law = _Checker("serial")
    for side in Side:
        rh, rs = boundary_report(h, side), boundary_report(s, side)
        if rh.state_level >= StateLevel.HAS_STATES:
            law(f"{side.value} states carried from h", rs.state_level >= StateLevel.HAS_STATES)
        if rh.state_level is StateLevel.CONSTANT:
            law(f"{side.value} constant carried from h", rs.state_level is StateLevel.CONSTANT)
            if rh.constant_value is not None and rs.constant_value is not None:
                law(f"{side.value} constant value carried from h", rh.constant_value == rs.constant_value)
        for tl in (TimeLevel.UNBOUNDED, TimeLevel.FIX):
            if rh.time_level >= tl:
                law(f"{side.value} {tl.label} time carried from h", rs.time_level >= tl)
        if rh.state_level >= StateLevel.HAS_STATES:
            ph, ps = state_function(h, side), state_function(s, side)
            law(
                f"{side.value} state function composes",
                all(
                    ps(u) == frozenset().union(*(ph(x) for x in f.image.get(u, ())))
                    for u in f.input_universe
                ),
            )
            law(
                f"{side.value} state set composes",
                ps.theta == frozenset().union(*(ph(x) for xs in f.image.values() for x in xs)),
            )
    return law.results


def _intersect(f: PseudoSystem, g: PseudoSystem) -> List[LawResult]:
    i = intersect(f, g)
    law = _Checker("intersect")
    for side in Side:
        rf, rg, ri = (boundary_report(s, side) for s in (f, g, i))
        law(f"{side.value} state level of either operand kept",
            ri.state_level >= max(rf.state_level, rg.state_level))
        law(f"{side.value} time level of either operand kept",
            ri.time_level >= max(rf.time_level, rg.time_level))
        if rf.state_level >= StateLevel.HAS_STATES and rg.state_level >= StateLevel.HAS_STATES:
            pf, pg, pi = (state_function(s, side) for s in (f, g, i))
            inputs = set(f.input_universe) | set(g.input_universe)
            law(
                f"{side.value} state function within the intersection",
                all(pi(u) <= pf(u) & pg(u) for u in inputs),
            )
            law(
                f"{side.value} state set within the intersection",
                pi.theta <= frozenset().union(*(pf(u) & pg(u) for u in inputs)),
            )
    return law.results


def _union(f: PseudoSystem, g: PseudoSystem) -> List[LawResult]:
    un = union(f, g)
    law = _Checker("union")
    for side in Side:
        rf, rg, ru = (boundary_report(s, side) for s in (f, g, un))
        if rf.state_level >= StateLevel.HAS_STATES and rg.state_level >= StateLevel.HAS_STATES:
            law(f"{side.value} states kept", ru.state_level >= StateLevel.HAS_STATES)
        common = (
            rf.state_level is StateLevel.CONSTANT
            and rg.state_level is StateLevel.CONSTANT
            and (rf.constant_value is None or rg.constant_value is None
                 or rf.constant_value == rg.constant_value)
        )
        if common:
            law(f"{side.value} common constant kept", ru.state_level is StateLevel.CONSTANT)
        for tl in TIMES:
            if rf.time_level >= tl and rg.time_level >= tl:
                law(f"{side.value} {tl.label} time kept", ru.time_level >= tl)
        law(
            f"{side.value} witness is the looser operand witness",
            all(
                w.extremal_instant == _merge_instants(side, _instant(rf, w.input), _instant(rg, w.input))
                for w in ru.per_input
            ),
        )
        if rf.state_level >= StateLevel.HAS_STATES and rg.state_level >= StateLevel.HAS_STATES:
            pf, pg, pu = (state_function(s, side) for s in (f, g, un))
            inputs = set(f.input_universe) | set(g.input_universe)
            law(f"{side.value} state function is the union", all(pu(u) == pf(u) | pg(u) for u in inputs))
            law(
                f"{side.value} state set is the union",
                pu.theta == frozenset().union(*(pf(u) | pg(u) for u in inputs)),
            )
    return law.results


CONSTRUCTIONS: Dict[str, Callable[..., List[LawResult]]] = {
    "subsystem": _subsystem,
    "dual": _dual,
    "inverse": _inverse,
    "product": _product,
    "serial": _serial,
    "intersect": _intersect,
    "union": _union,
}


def check_transfer_laws(construction: str, *systems: PseudoSystem) -> List[LawResult]:
    """Check every transfer law that applies to ``construction`` on ``systems``.

    ``subsystem`` takes ``(f, g)`` with ``f`` below ``g``; ``serial`` takes
    ``(h, f)``; binary constructions take two systems, unary ones take one.
    """
    try:
        check = CONSTRUCTIONS[construction]
    except KeyError:
        raise ValueError(f"unknown construction {construction!r}") from None
    return check(*systems)
