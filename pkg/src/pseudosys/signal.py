"""Exact Boolean signals over rational time.

A signal is a right-continuous, piecewise-constant map from time to ``B^n``.
Only finitely many breakpoints are stored; what happens before the first and
after the last stored breakpoint is a *tail*, either constant or periodic.

Every constructor returns the canonical form, so two signals are equal as
functions exactly when they compare equal with ``==``.  Canonical form:

* the left tail describes ``t < anchor`` and the anchor is the first instant
  at which the signal stops following it (for a constant signal the anchor is
  ``0``; for a purely periodic one it is the first switch at or after ``0``);
* consecutive events carry different values, except that the anchor event may
  repeat the last value of a periodic left tail and the final event may
  repeat its predecessor when it only marks where a periodic right tail
  starts;
* a periodic right tail starts as early as possible, but never before the
  anchor;
* periodic patterns use their primitive period and never repeat a value in
  adjacent slots (the wrap-around slot may, since the pattern phase is fixed
  by the anchor).
"""

from __future__ import annotations

import bisect
import math
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from functools import cached_property
from typing import Iterable, NamedTuple, Optional, Sequence, Tuple, Union

from .errors import DimensionMismatch, SignalError, UnsupportedSignal

# Hard cap on how many breakpoints a periodic tail may be unrolled into.
MAX_UNROLLED_BREAKPOINTS = 100_000


def as_time(value) -> Fraction:
    """Coerce ints, ``"p/q"`` strings and Fractions to an exact time."""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool):
        raise SignalError(f"not a time value: {value!r}")
    try:
        return Fraction(value)
    except (TypeError, ValueError, ZeroDivisionError) as exc:
        raise SignalError(f"not a time value: {value!r}") from exc


class Side(str, Enum):
    INITIAL = "initial"
    FINAL = "final"


class BVec(tuple):
    """A fixed-length Boolean vector, built from ``"0110"`` or an iterable."""

    __slots__ = ()

    def __new__(cls, bits):
        if isinstance(bits, BVec):
            return bits
        if isinstance(bits, str):
            if not bits or set(bits) - {"0", "1"}:
                raise SignalError(f"bad bit string {bits!r}")
            values = tuple(c == "1" for c in bits)
        else:
            values = tuple(bits)
            if any(b not in (0, 1) for b in values):
                raise SignalError(f"bits must be 0/1, got {values!r}")
            values = tuple(bool(b) for b in values)
        if not values:
            raise SignalError("a bit vector needs at least one bit")
        return super().__new__(cls, values)

    @property
    def dim(self) -> int:
        return len(self)

    def __str__(self) -> str:
        return "".join("1" if b else "0" for b in self)

    def __repr__(self) -> str:
        return f"BVec({str(self)!r})"

    def __invert__(self) -> "BVec":
        return BVec(tuple(not b for b in self))

    def meet(self, other: "BVec") -> "BVec":
        return BVec(tuple(a and b for a, b in zip(self, other)))

    def join(self, other: "BVec") -> "BVec":
        return BVec(tuple(a or b for a, b in zip(self, other)))

    def leq(self, other: "BVec") -> bool:
        """Coordinatewise order ``self <= other``."""
        return all(b or not a for a, b in zip(self, other))

    def concat(self, other: "BVec") -> "BVec":
        return BVec(tuple(self) + tuple(other))


@dataclass(frozen=True)
class Const:
    """Constant tail.  On the right the value is implied by the last event."""

    value: Optional[BVec] = None

    def __post_init__(self):
        if self.value is not None:
            object.__setattr__(self, "value", BVec(self.value))


@dataclass(frozen=True)
class Periodic:
    """Periodic tail given by one period of ``(duration, value)`` slots.

    A left tail's pattern ends exactly at the anchor; a right tail's pattern
    starts exactly at the last event.
    """

    pattern: Tuple[Tuple[Fraction, BVec], ...]

    def __post_init__(self):
        items = tuple((as_time(d), BVec(v)) for d, v in self.pattern)
        if not items:
            raise SignalError("periodic pattern must not be empty")
        if any(d <= 0 for d, _ in items):
            raise SignalError("periodic pattern durations must be positive")
        if len({v.dim for _, v in items}) != 1:
            raise DimensionMismatch("periodic pattern values differ in length")
        object.__setattr__(self, "pattern", items)

    @property
    def period(self) -> Fraction:
        return sum((d for d, _ in self.pattern), Fraction(0))

    @property
    def dim(self) -> int:
        return self.pattern[0][1].dim


Tail = Union[Const, Periodic]


def _lcm_time(a: Fraction, b: Fraction) -> Fraction:
    if isinstance(a, int) and isinstance(b, int):
        return math.lcm(a, b)
    return Fraction(math.lcm(a.numerator, b.numerator), math.gcd(a.denominator, b.denominator))


@dataclass(frozen=True)
class _Wave:
    """A constant or periodic function on the whole time axis, normalized.

    ``changes`` holds ``(phase, value)`` pairs with ``0 <= phase < period``;
    the value holds on ``[k*period + phase, next phase)``.  Periods are
    primitive and cyclically adjacent values differ.  A constant wave has
    ``period is None`` and a single change at phase 0.
    """

    period: Optional[Fraction]
    changes: Tuple[Tuple[Fraction, BVec], ...]

    @classmethod
    def const(cls, value: BVec) -> "_Wave":
        return cls(None, ((Fraction(0), value),))

    @property
    def is_const(self) -> bool:
        return self.period is None

    @property
    def value(self) -> BVec:
        return self.changes[0][1]

    @cached_property
    def _phases(self):
        return [p for p, _ in self.changes]

    def at(self, t: Fraction) -> BVec:
        if self.period is None:
            return self.changes[0][1]
        i = bisect.bisect_right(self._phases, t % self.period) - 1
        return self.changes[i][1]

    def breakpoints(self, lo: Fraction, hi: Fraction) -> list:
        """Switch instants in the closed interval ``[lo, hi]``, ascending."""
        if self.period is None or hi < lo:
            return []
        period = self.period
        if (hi - lo) / period * len(self.changes) > MAX_UNROLLED_BREAKPOINTS:
            raise UnsupportedSignal("periodic tails need too many breakpoints to compare")
        out = []
        for phase in self._phases:
            first = -((phase - lo) // period)
            last = (hi - phase) // period
            out.extend(phase + k * period for k in range(first, last + 1))
        out.sort()
        return out

    def segments(self, start: Fraction) -> tuple:
        """One period as ``(duration, value)`` slots beginning at ``start``."""
        end = start + self.period
        points = [start] + [b for b in self.breakpoints(start, end) if start < b < end] + [end]
        return tuple((b - a, self.at(a)) for a, b in zip(points, points[1:]))

    def shifted(self, tau: Fraction) -> "_Wave":
        if self.period is None:
            return self
        return _normal_wave(self.period, [((p + tau) % self.period, v) for p, v in self.changes])

    def mapped(self, fn) -> "_Wave":
        if self.period is None:
            return _Wave.const(fn(self.value))
        return _normal_wave(self.period, [(p, fn(v)) for p, v in self.changes])


def _normal_wave(period: Fraction, changes) -> _Wave:
    changes = sorted(changes, key=lambda c: c[0])
    keep = [c for i, c in enumerate(changes) if c[1] != changes[i - 1][1]]
    if not keep:
        return _Wave.const(changes[0][1])
    k = len(keep)
    for repeats in range(k, 1, -1):
        if k % repeats:
            continue
        step = k // repeats
        sub = period / repeats
        if all(
            keep[(i + step) % k][1] == keep[i][1]
            and (keep[(i + step) % k][0] - keep[i][0]) % period == sub
            for i in range(k)
        ):
            return _Wave(sub, tuple((p, v) for p, v in keep if p < sub))
    return _Wave(period, tuple(keep))


def _wave_from_tail(tail: Tail, origin: Fraction, fallback: Optional[BVec] = None) -> _Wave:
    if isinstance(tail, Const):
        value = tail.value if tail.value is not None else fallback
        return _Wave.const(value)
    period = tail.period
    changes = []
    offset = Fraction(0)
    for duration, value in tail.pattern:
        changes.append(((origin + offset) % period, value))
        offset += duration
    return _normal_wave(period, changes)


def _common_period(*waves: _Wave) -> Optional[Fraction]:
    period = None
    for w in waves:
        if w.period is not None:
            period = w.period if period is None else _lcm_time(period, w.period)
    return period


def _zip_waves(a: _Wave, b: _Wave, fn) -> _Wave:
    if a.is_const and b.is_const:
        return _Wave.const(fn(a.value, b.value))
    period = _common_period(a, b)
    points = sorted({Fraction(0)} | set(a.breakpoints(0, period)) | set(b.breakpoints(0, period)))
    return _normal_wave(period, [(t, fn(a.at(t), b.at(t))) for t in points if t < period])


def _tail_text(tail: Tail, with_value: bool) -> str:
    if isinstance(tail, Const):
        return f"const {tail.value}" if with_value else "const"
    return "periodic " + " ".join(f"{d}:{v}" for d, v in tail.pattern)


@dataclass(frozen=True)
class Signal:
    """Canonical right-continuous Boolean signal; build with :func:`make_signal`."""

    dim: int
    left_tail: Tail
    events: Tuple[Tuple[Fraction, BVec], ...]
    right_tail: Tail

    def __hash__(self):
        return self._hash

    def __eq__(self, other):
        if self is other:
            return True
        if not isinstance(other, Signal):
            return NotImplemented
        return self._hash == other._hash and self.text == other.text and self.dim == other.dim

    @cached_property
    def _hash(self) -> int:
        return hash((self.dim, self.text))

    @property
    def anchor(self) -> Fraction:
        return self.events[0][0]

    @property
    def last(self) -> Fraction:
        return self.events[-1][0]

    @cached_property
    def times(self) -> Tuple[Fraction, ...]:
        return tuple(t for t, _ in self.events)

    @cached_property
    def left_wave(self) -> _Wave:
        return _wave_from_tail(self.left_tail, self.anchor)

    @cached_property
    def right_wave(self) -> _Wave:
        return _wave_from_tail(self.right_tail, self.last, self.events[-1][1])

    @cached_property
    def text(self) -> str:
        """Body of the canonical text block (everything after the header)."""
        events = " ".join(f"{t}:{v}" for t, v in self.events)
        return (
            f"left {_tail_text(self.left_tail, True)}\n"
            f"events {events}\n"
            f"right {_tail_text(self.right_tail, False)}"
        )

    @property
    def sort_key(self):
        return (self.dim, self.text)

    def __call__(self, t) -> BVec:
        return value_at(self, t)

    def __invert__(self) -> "Signal":
        return complement_signal(self)

    def __repr__(self) -> str:
        return f"<Signal dim={self.dim} {self.text!r}>"


def _build(dim: int, lw: _Wave, events: Sequence, rw: _Wave) -> Signal:
    """Canonical signal equal to ``lw`` before the first event, the events
    in between, and ``rw`` from the last event on."""
    if lw.is_const and rw.is_const:
        # common case: drop the prefix equal to the initial value, merge repeats
        out = []
        prev = lw.value
        for t, v in events:
            if v != prev:
                out.append((t, v))
                prev = v
        if not out:
            return _pure(dim, lw)
        return Signal(dim, Const(lw.value), tuple(out), Const(rw.value))

    # periodic tails: run on integer times scaled by a common denominator
    scale = math.lcm(*(t.denominator for t, _ in events), *_denominators(lw), *_denominators(rw))
    parts = _canonical_parts(
        _scale_wave(lw, scale), [(int(t * scale), v) for t, v in events], _scale_wave(rw, scale)
    )
    if parts is None:
        return _pure(dim, lw)
    start_at, out, tail_at = parts
    start_at, tail_at = Fraction(start_at, scale), Fraction(tail_at, scale)
    left = Const(lw.value) if lw.is_const else Periodic(lw.segments(start_at - lw.period))
    right = Const(rw.value) if rw.is_const else Periodic(rw.segments(tail_at))
    return Signal(dim, left, tuple((Fraction(t, scale), v) for t, v in out), right)


def _denominators(w: _Wave):
    if w.is_const:
        return ()
    return (w.period.denominator, *(p.denominator for p, _ in w.changes))


def _scale_wave(w: _Wave, scale: int) -> _Wave:
    if w.is_const:
        return w
    return _Wave(int(w.period * scale), tuple((int(p * scale), v) for p, v in w.changes))


def _canonical_parts(lw: _Wave, events: Sequence, rw: _Wave):
    """``(anchor, events, right tail start)`` of the canonical form, or
    ``None`` when the signal is the left wave itself."""
    times = [t for t, _ in events]
    values = [v for _, v in events]
    anchor, last = times[0], times[-1]

    def raw(t):
        if t < anchor:
            return lw.at(t)
        if t >= last:
            return rw.at(t)
        return values[bisect.bisect_right(times, t) - 1]

    def raw_breaks(lo, hi):
        pts = {t for t in times if lo <= t <= hi}
        if lo < anchor:
            pts.update(b for b in lw.breakpoints(lo, min(hi, anchor)) if b < anchor)
        if hi > last:
            pts.update(b for b in rw.breakpoints(max(lo, last), hi) if b > last)
        return pts

    same = lw == rw
    span = _common_period(lw, rw) or 1

    # A: first instant where the signal stops following the left wave.
    end = last if same else last + span
    cands = sorted(raw_breaks(anchor, end) | set(lw.breakpoints(anchor, end)) | {anchor})
    start_at = next((c for c in cands if raw(c) != lw.at(c)), None)
    if start_at is None:
        return None

    # B: the right wave is followed on [B, inf) and not just before B.
    lo = anchor if same else anchor - span
    cands = sorted(raw_breaks(lo, last) | set(rw.breakpoints(lo, last)) | {lo, last})
    settle = None
    for c, nxt in zip(cands, cands[1:]):
        if raw(c) != rw.at(c):
            settle = nxt
    tail_at = start_at if settle is None or settle < start_at else settle

    out = [(start_at, raw(start_at))]
    for c in sorted(raw_breaks(start_at, tail_at)):
        if start_at < c <= tail_at:
            v = raw(c)
            if v != out[-1][1]:
                out.append((c, v))
    if not rw.is_const and out[-1][0] != tail_at:
        out.append((tail_at, raw(tail_at)))

    return start_at, out, tail_at


def _pure(dim: int, wave: _Wave) -> Signal:
    if wave.is_const:
        v = wave.value
        return Signal(dim, Const(v), ((Fraction(0), v),), Const(v))
    at = wave.breakpoints(Fraction(0), wave.period)[0]
    return Signal(
        dim,
        Periodic(wave.segments(at - wave.period)),
        ((at, wave.at(at)),),
        Periodic(wave.segments(at)),
    )


def make_signal(dim: int, left_tail: Tail, events: Iterable, right_tail: Tail = Const()) -> Signal:
    """Build the canonical signal described by tails and ``(time, bits)`` events.

    The left tail holds before the first event; the right tail holds from the
    last event on.  A constant right tail keeps the last event's value, so it
    needs no value of its own (if one is given it must match).
    """
    if not isinstance(dim, int) or isinstance(dim, bool) or dim <= 0:
        raise SignalError(f"dimension must be a positive integer, got {dim!r}")
    evs = [(as_time(t), BVec(v)) for t, v in events]
    if not evs:
        raise SignalError("a signal needs at least one event")
    for _, v in evs:
        if v.dim != dim:
            raise DimensionMismatch(f"event value {v} does not have dimension {dim}")
    for (a, _), (b, _) in zip(evs, evs[1:]):
        if not a < b:
            raise SignalError(f"event times must be strictly increasing ({a} then {b})")
    for tail in (left_tail, right_tail):
        if not isinstance(tail, (Const, Periodic)):
            raise SignalError(f"not a tail: {tail!r}")
        tdim = tail.dim if isinstance(tail, Periodic) else (tail.value.dim if tail.value is not None else dim)
        if tdim != dim:
            raise DimensionMismatch(f"tail dimension {tdim} differs from signal dimension {dim}")
    if isinstance(left_tail, Const) and left_tail.value is None:
        raise SignalError("a constant left tail needs a value")
    last_value = evs[-1][1]
    if isinstance(right_tail, Const) and right_tail.value not in (None, last_value):
        raise SignalError("constant right tail must keep the last event's value")
    if isinstance(right_tail, Periodic) and right_tail.pattern[0][1] != last_value:
        raise SignalError("periodic right tail must start with the last event's value")
    lw = _wave_from_tail(left_tail, evs[0][0])
    rw = _wave_from_tail(right_tail, evs[-1][0], last_value)
    return _build(dim, lw, evs, rw)


def constant(bits) -> Signal:
    """The constant signal with value ``bits``."""
    v = BVec(bits)
    return _pure(v.dim, _Wave.const(v))


def step(before, at, after) -> Signal:
    """Signal equal to ``before`` for ``t < at`` and ``after`` from ``at`` on."""
    before, after = BVec(before), BVec(after)
    return make_signal(before.dim, Const(before), [(at, after)], Const())


def value_at(x, t) -> BVec:
    """Exact value of a Signal or StepFunction at time ``t``."""
    t = as_time(t)
    if not isinstance(x, Signal):
        return x.value_at(t)
    if t < x.anchor:
        return x.left_wave.at(t)
    if t >= x.last:
        return x.right_wave.at(t)
    return x.events[bisect.bisect_right(x.times, t) - 1][1]


def limit_value(x: Signal, side: Side) -> Optional[BVec]:
    """Initial value ``x(-inf+0)`` or final value ``x(inf-0)``, if it exists."""
    tail = x.left_tail if Side(side) is Side.INITIAL else x.right_tail
    if isinstance(tail, Const):
        return tail.value
    return None


def _complement_tail(tail: Tail) -> Tail:
    if isinstance(tail, Const):
        return Const(~tail.value)
    return Periodic(tuple((d, ~v) for d, v in tail.pattern))


def complement_signal(x: Signal) -> Signal:
    """Coordinatewise Boolean complement; breakpoints are unchanged."""
    return Signal(
        x.dim,
        _complement_tail(x.left_tail),
        tuple((t, ~v) for t, v in x.events),
        _complement_tail(x.right_tail),
    )


def _is_pure(x: Signal) -> bool:
    return len(x.events) == 1 and x.left_wave == x.right_wave


def shift(x: Signal, tau) -> Signal:
    """The signal ``t -> x(t - tau)``."""
    tau = as_time(tau)
    if tau == 0:
        return x
    if _is_pure(x):
        return _pure(x.dim, x.left_wave.shifted(tau))
    return Signal(x.dim, x.left_tail, tuple((t + tau, v) for t, v in x.events), x.right_tail)


def concat(x: Signal, y: Signal) -> Signal:
    """Stack two signals on the same time axis: ``t -> (x(t), y(t))``."""
    lw = _zip_waves(x.left_wave, y.left_wave, BVec.concat)
    rw = _zip_waves(x.right_wave, y.right_wave, BVec.concat)
    lo = min(x.anchor, y.anchor)
    hi = max(x.last, y.last)
    times = {lo, hi} | set(x.times) | set(y.times)
    for s in (x, y):
        # tail switches that fall inside the other signal's event span
        times.update(s.left_wave.breakpoints(lo, s.anchor))
        times.update(s.right_wave.breakpoints(s.last, hi))
    times = sorted(times)
    events = [(t, value_at(x, t).concat(value_at(y, t))) for t in times]
    return _build(x.dim + y.dim, lw, events, rw)


def project(x: Signal, start: int, stop: int) -> Signal:
    """Keep coordinates ``start:stop`` (0-based, half-open, like slicing)."""
    if not (0 <= start < stop <= x.dim):
        raise DimensionMismatch(f"coordinate range {start}:{stop} outside 0:{x.dim}")
    if (start, stop) == (0, x.dim):
        return x

    def cut(v):
        return BVec(v[start:stop])

    lw = x.left_wave.mapped(cut)
    rw = x.right_wave.mapped(cut)
    return _build(stop - start, lw, [(t, cut(v)) for t, v in x.events], rw)


class Membership(NamedTuple):
    in_S: bool
    in_S_star: bool


def membership_class(x: Signal) -> Membership:
    """Whether ``x`` has an initial value (``in_S``) and a final value (``in_S_star``)."""
    return Membership(isinstance(x.left_tail, Const), isinstance(x.right_tail, Const))


def is_signal(x: Signal) -> bool:
    """True when ``x`` has an initial value."""
    return isinstance(x.left_tail, Const)


def is_signal_star(x: Signal) -> bool:
    """True when ``x`` has a final value."""
    return isinstance(x.right_tail, Const)


def breakpoints(x: Signal) -> Tuple[Fraction, ...]:
    """Stored event times (periodic tail switches are not included)."""
    return x.times
