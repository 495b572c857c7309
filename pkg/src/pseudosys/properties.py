"""Initial/final state and time classification of pseudo-systems.

For one side (initial or final) a pseudo-system is placed on two scales:

* state level: ``none`` < ``has_states`` (every state has a limit) <
  ``race_free`` (one limit per input) < ``constant`` (one limit overall);
* time level: ``unbounded`` < ``bounded`` < ``fix``.

Over finite universes the time level is always ``fix``: each input has
finitely many states, each with a last departure from its limit.  The
informative output is therefore the witness instants, recorded per input and
globally.  An instant of ``None`` means no state ever departs from its limit,
so every instant is a valid witness.

Both scales are closed downward, which gives the 3x3 grid of cells ``a``-``i``
(rows has_states/race_free/constant, columns unbounded/bounded/fix).
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import IntEnum
from fractions import Fraction
from typing import Dict, FrozenSet, Optional, Tuple

from .errors import MissingLimit
from .pseudo_system import PseudoSystem, is_null
from .signal import BVec, Side, Signal, limit_value


class StateLevel(IntEnum):
    NONE = 0
    HAS_STATES = 1
    RACE_FREE = 2
    CONSTANT = 3

    @property
    def label(self) -> str:
        return self.name.lower()


class TimeLevel(IntEnum):
    UNBOUNDED = 1
    BOUNDED = 2
    FIX = 3

    @property
    def label(self) -> str:
        return self.name.lower()


CELLS = {
    (StateLevel.HAS_STATES, TimeLevel.UNBOUNDED): "a",
    (StateLevel.HAS_STATES, TimeLevel.BOUNDED): "b",
    (StateLevel.HAS_STATES, TimeLevel.FIX): "c",
    (StateLevel.RACE_FREE, TimeLevel.UNBOUNDED): "d",
    (StateLevel.RACE_FREE, TimeLevel.BOUNDED): "e",
    (StateLevel.RACE_FREE, TimeLevel.FIX): "f",
    (StateLevel.CONSTANT, TimeLevel.UNBOUNDED): "g",
    (StateLevel.CONSTANT, TimeLevel.BOUNDED): "h",
    (StateLevel.CONSTANT, TimeLevel.FIX): "i",
}
CELL_LEVELS = {cell: levels for levels, cell in CELLS.items()}


def implied_cells(cell: str) -> FrozenSet[str]:
    """Cells implied by ``cell``: same or weaker on both scales."""
    state, time = CELL_LEVELS[cell]
    return frozenset(
        c for (s, t), c in CELLS.items() if s <= state and t <= time
    )


@dataclass(frozen=True)
class InputWitness:
    input: Signal
    values: FrozenSet[BVec]
    extremal_instant: Optional[Fraction]


@dataclass(frozen=True)
class BoundaryReport:
    side: Side
    state_level: StateLevel
    constant_value: Optional[BVec]
    time_level: TimeLevel
    per_input: Tuple[InputWitness, ...]
    global_instant: Optional[Fraction]
    cell: Optional[str]
    vacuous: bool

    def witness(self, u: Signal) -> Optional[InputWitness]:
        for w in self.per_input:
            if w.input == u:
                return w
        return None


@dataclass(frozen=True)
class StateFunctionReport:
    side: Side
    phi: Dict[Signal, FrozenSet[BVec]]
    theta: FrozenSet[BVec]

    def __call__(self, u: Signal) -> FrozenSet[BVec]:
        return self.phi.get(u, frozenset())


def departure(x: Signal, side: Side) -> Optional[Fraction]:
    """Boundary of the valid witness instants of one state.

    Initial side: ``x(t) = x(-inf+0)`` for all ``t < t0`` exactly when
    ``t0 <= departure``.  Final side: ``x(t) = x(inf-0)`` for all ``t > tf``
    exactly when ``tf >= departure``.  ``None`` if the state never departs.
    Only meaningful for states that have the limit on that side.
    """
    side = Side(side)
    limit = limit_value(x, side)
    if side is Side.INITIAL:
        for t, v in x.events:
            if v != limit:
                return t
        wave = x.right_wave
        if wave.is_const:
            return None
        # first switch of the periodic right tail
        return min(b for b in wave.breakpoints(x.last, x.last + wave.period) if b > x.last)
    for (t, v), (t_next, _) in zip(reversed(x.events[:-1]), reversed(x.events[1:])):
        if v != limit:
            return t_next
    wave = x.left_wave
    if wave.is_const:
        return None if wave.value == limit else x.anchor
    # the left tail is constant on [switch, anchor)
    switch = max(b for b in wave.breakpoints(x.anchor - wave.period, x.anchor) if b < x.anchor)
    return switch if wave.at(switch) == limit else x.anchor


def _pick(side: Side, instants):
    instants = [t for t in instants if t is not None]
    if not instants:
        return None
    return min(instants) if side is Side.INITIAL else max(instants)


def boundary_report(f: PseudoSystem, side) -> BoundaryReport:
    """Classify ``f`` on one side and collect witness instants."""
    side = Side(side)
    per_input = []
    all_have_limits = True
    race_free = True
    overall = set()
    for u in f.input_universe:
        states = f.image.get(u)
        if not states:
            continue
        limits = [(x, limit_value(x, side)) for x in states]
        values = frozenset(v for _, v in limits if v is not None)
        if any(v is None for _, v in limits):
            all_have_limits = False
        if len(values) > 1:
            race_free = False
        overall |= values
        instant = _pick(side, [departure(x, side) for x, v in limits if v is not None])
        per_input.append(InputWitness(u, values, instant))

    vacuous = is_null(f)
    constant_value = None
    if vacuous:
        level = StateLevel.CONSTANT
    elif not all_have_limits:
        level = StateLevel.NONE
    elif not race_free:
        level = StateLevel.HAS_STATES
    elif len(overall) > 1:
        level = StateLevel.RACE_FREE
    else:
        level = StateLevel.CONSTANT
        constant_value = next(iter(overall))

    # finitely many states per input and finitely many inputs: both the
    # per-input and the global witnesses always exist
    time_level = TimeLevel.FIX
    global_instant = _pick(side, [w.extremal_instant for w in per_input])
    cell = CELLS.get((level, time_level))
    return BoundaryReport(
        side, level, constant_value, time_level, tuple(per_input), global_instant, cell, vacuous
    )


def _one_line(x: Signal) -> str:
    return "; ".join(x.text.splitlines())


def state_function(f: PseudoSystem, side) -> StateFunctionReport:
    """``phi(u) = {limits of the states in f(u)}`` and their union ``theta``.

    Raises :class:`MissingLimit` naming the first state without a limit.
    """
    side = Side(side)
    phi = {}
    for u in f.input_universe:
        values = set()
        for x in sorted(f.image.get(u, ()), key=lambda s: s.sort_key):
            v = limit_value(x, side)
            if v is None:
                raise MissingLimit(
                    f"state [{_one_line(x)}] of input [{_one_line(u)}] has no {side.value} value",
                    input_signal=u,
                    state_signal=x,
                )
            values.add(v)
        phi[u] = frozenset(values)
    theta = frozenset().union(*phi.values()) if phi else frozenset()
    return StateFunctionReport(side, phi, theta)


def lattice_violations(report: BoundaryReport) -> list:
    """Ways in which a report contradicts the implication structure (empty if none)."""
    problems = []
    if report.cell is None:
        if report.state_level is not StateLevel.NONE:
            problems.append("missing cell for a report with states")
    else:
        if CELL_LEVELS[report.cell] != (report.state_level, report.time_level):
            problems.append(f"cell {report.cell} disagrees with the levels")
    if report.time_level < TimeLevel.UNBOUNDED:
        problems.append("time level below unbounded")
    if report.state_level >= StateLevel.RACE_FREE and any(len(w.values) > 1 for w in report.per_input):
        problems.append("race-free report with an input of several limits")
    if report.state_level is StateLevel.CONSTANT:
        values = frozenset().union(*(w.values for w in report.per_input)) if report.per_input else frozenset()
        if report.vacuous:
            if report.constant_value is not None or values:
                problems.append("vacuous report carries values")
        elif values != {report.constant_value}:
            problems.append("constant report whose values are not exactly the constant")
    if report.vacuous and (report.state_level, report.time_level) != (StateLevel.CONSTANT, TimeLevel.FIX):
        problems.append("null system not reported as constant with fix time")
    if report.global_instant is not None:
        instants = [w.extremal_instant for w in report.per_input if w.extremal_instant is not None]
        if report.global_instant not in instants:
            problems.append("global instant is not one of the per-input instants")
    return problems
