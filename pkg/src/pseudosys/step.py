"""Step functions with separate point and interval values.

Sliding-window extrema of a right-continuous signal are generally *not*
right-continuous: at a breakpoint the value may differ from the value just
after it.  :class:`StepFunction` keeps both, so the window connectors of the
delay inequality can be compared pointwise without losing boundary values.
"""

from __future__ import annotations

import bisect
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from functools import cached_property, reduce
from typing import Tuple

from .errors import DimensionMismatch, SignalError, UnsupportedSignal
from .signal import (
    BVec,
    Const,
    Periodic,
    Signal,
    Tail,
    _common_period,
    _wave_from_tail,
    as_time,
)


class Extremum(str, Enum):
    INF = "inf"
    SUP = "sup"


@dataclass(frozen=True)
class StepFunction:
    """Piecewise-constant function with explicit values at its breakpoints.

    Each segment ``(t, point, interval)`` means the function is ``point`` at
    ``t`` and ``interval`` on ``(t, next t)``.  The left tail holds before the
    first segment.  A constant right tail repeats the last interval value; a
    periodic right tail starts at the last segment time.
    """

    dim: int
    left_tail: Tail
    segments: Tuple[Tuple[Fraction, BVec, BVec], ...]
    right_tail: Tail

    @cached_property
    def times(self):
        return tuple(t for t, _, _ in self.segments)

    @cached_property
    def _left_wave(self):
        origin = self.segments[0][0] if self.segments else Fraction(0)
        return _wave_from_tail(self.left_tail, origin)

    @cached_property
    def _right_wave(self):
        if not self.segments:
            return self._left_wave
        return _wave_from_tail(self.right_tail, self.segments[-1][0], self.segments[-1][2])

    def value_at(self, t) -> BVec:
        t = as_time(t)
        if not self.segments or t < self.segments[0][0]:
            return self._left_wave.at(t)
        i = bisect.bisect_right(self.times, t) - 1
        seg_t, point, interval = self.segments[i]
        if seg_t == t:
            return point
        if i == len(self.segments) - 1:
            return self._right_wave.at(t)
        return interval

    def __call__(self, t) -> BVec:
        return self.value_at(t)


def make_step(dim: int, left_tail: Tail, segments, right_tail: Tail = Const()) -> StepFunction:
    """Canonical step function: segments that change nothing are dropped."""
    segs = [(as_time(t), BVec(p), BVec(i)) for t, p, i in segments]
    for (a, _, _), (b, _, _) in zip(segs, segs[1:]):
        if not a < b:
            raise SignalError("segment times must be strictly increasing")
    if any(p.dim != dim or i.dim != dim for _, p, i in segs):
        raise DimensionMismatch(f"segment values must have dimension {dim}")
    periodic_left = isinstance(left_tail, Periodic)
    periodic_right = isinstance(right_tail, Periodic)
    if not periodic_left and left_tail.value is None:
        raise SignalError("a constant left tail needs a value")
    out = []
    prev = None if periodic_left else left_tail.value
    for n, (t, p, i) in enumerate(segs):
        pinned = (n == 0 and periodic_left) or (n == len(segs) - 1 and periodic_right)
        if not pinned and p == prev and i == prev:
            continue
        out.append((t, p, i))
        prev = i
    if periodic_right:
        if not out:
            raise SignalError("a periodic right tail needs a segment to start from")
        right = right_tail
    else:
        right = Const(out[-1][2] if out else left_tail.value)
    return StepFunction(dim, left_tail, tuple(out), right)


def embed(x: Signal) -> StepFunction:
    """View a signal as a step function (point value equals interval value)."""
    return make_step(x.dim, x.left_tail, [(t, v, v) for t, v in x.events], x.right_tail)


def window_extrema(u: Signal, d, mode: Extremum) -> StepFunction:
    """Coordinatewise inf or sup of ``u`` over the half-open window ``[t-d, t)``.

    The stretch of ``u`` that starts at breakpoint ``t_i`` and ends at
    ``t_{i+1}`` meets the window exactly when ``t_i < t < t_{i+1} + d``, so the
    result can only change at ``t_i`` or ``t_i + d``.  At those instants the
    open-interval condition makes the point value differ from the value just
    after, which is why the result is a :class:`StepFunction`.
    """
    d = as_time(d)
    mode = Extremum(mode)
    if d <= 0:
        raise SignalError(f"window width must be positive, got {d}")
    if not (isinstance(u.left_tail, Const) and isinstance(u.right_tail, Const)):
        raise UnsupportedSignal("window extrema need constant tails on both sides")
    combine = BVec.meet if mode is Extremum.INF else BVec.join
    initial = u.left_tail.value
    if u.events[0][1] == initial and len(u.events) == 1:
        return make_step(u.dim, Const(initial), [])

    times = [t for t, _ in u.events]
    values = [initial] + [v for _, v in u.events]

    def at(t):
        # stretch j spans [times[j-1], times[j]) and is active iff
        # times[j-1] < t (or j == 0) and t - d < times[j] (or j is last)
        first = bisect.bisect_right(times, t - d)
        last = bisect.bisect_left(times, t)
        return reduce(combine, values[first : last + 1])

    cands = sorted(set(times) | {t + d for t in times})
    segs = []
    for c, nxt in zip(cands, cands[1:] + [None]):
        probe = (c + nxt) / 2 if nxt is not None else c + d
        segs.append((c, at(c), at(probe)))
    return make_step(u.dim, Const(initial), segs)


def window_inf(u: Signal, d) -> StepFunction:
    return window_extrema(u, d, Extremum.INF)


def window_sup(u: Signal, d) -> StepFunction:
    return window_extrema(u, d, Extremum.SUP)


def _waves(f: StepFunction):
    return f._left_wave, f._right_wave


def pointwise_leq(a, b) -> bool:
    """Decide ``a(t) <= b(t)`` coordinatewise for every real ``t``, exactly.

    Signals are embedded first.  Both functions are constant between the
    merged breakpoints, so it is enough to compare at every breakpoint, at a
    point inside every gap, and far enough into each tail to cover one common
    period of any periodic tails.
    """
    if isinstance(a, Signal):
        a = embed(a)
    if isinstance(b, Signal):
        b = embed(b)
    if a.dim != b.dim:
        raise DimensionMismatch(f"cannot compare dimensions {a.dim} and {b.dim}")
    span = _common_period(*_waves(a), *_waves(b)) or Fraction(1)
    times = set(a.times) | set(b.times)
    if not times:
        times = {Fraction(0)}
    lo, hi = min(times) - span, max(times) + span
    for w in (*_waves(a), *_waves(b)):
        times.update(w.breakpoints(lo, hi))
    times.update((lo, hi))
    pts = sorted(times)
    probes = [lo - 1, hi + 1] + pts + [(p + q) / 2 for p, q in zip(pts, pts[1:])]
    return all(a.value_at(t).leq(b.value_at(t)) for t in probes)
