"""Reference implementations used as test oracles.

Everything here works on raw, uncanonicalized descriptions and unrolls tails
by walking whole periods, so it shares no code with the library.
"""

import random
from fractions import Fraction as F

from pseudosys import BVec, Const, Periodic, make_signal

HALF_GRID = [F(k, 2) for k in range(-6, 13)]
DURATIONS = [F(1, 2), F(1), F(3, 2), F(2)]


def rand_bits(rng, dim):
    return BVec([rng.random() < 0.5 for _ in range(dim)])


def raw_signal(rng, dim, periodic_rate=0.3, max_events=4):
    """Random ``(left, events, right)`` with redundancy left in on purpose."""
    times = sorted(rng.sample(HALF_GRID, rng.randint(1, max_events)))
    events = [(t, rand_bits(rng, dim)) for t in times]
    if rng.random() < periodic_rate:
        left = Periodic(tuple((rng.choice(DURATIONS), rand_bits(rng, dim)) for _ in range(rng.randint(1, 3))))
    else:
        left = Const(rand_bits(rng, dim))
    if rng.random() < periodic_rate:
        first = events[-1][1]
        slots = [(rng.choice(DURATIONS), first)]
        slots += [(rng.choice(DURATIONS), rand_bits(rng, dim)) for _ in range(rng.randint(0, 2))]
        right = Periodic(tuple(slots))
    else:
        right = Const()
    return left, events, right


def const_raw(rng, dim=1, max_events=6, grid=None):
    """Random description with constant tails (for delay tests)."""
    grid = grid or HALF_GRID
    times = sorted(rng.sample(grid, rng.randint(1, max_events)))
    return Const(rand_bits(rng, dim)), [(t, rand_bits(rng, dim)) for t in times], Const()


def build(raw):
    left, events, right = raw
    return make_signal(events[0][1].dim, left, events, right)


def raw_value(raw, t):
    """Value of a raw description at ``t`` by explicit unrolling."""
    left, events, right = raw
    t = F(t)
    first, last = events[0][0], events[-1][0]
    if t < first:
        if isinstance(left, Const):
            return left.value
        period = sum(d for d, _ in left.pattern)
        start = first - period
        while start > t:
            start -= period
        return _in_pattern(left.pattern, t - start)
    if t >= last:
        if isinstance(right, Const):
            return events[-1][1]
        period = sum(d for d, _ in right.pattern)
        start = last
        while start + period <= t:
            start += period
        return _in_pattern(right.pattern, t - start)
    value = events[0][1]
    for s, v in events:
        if s <= t:
            value = v
    return value


def _in_pattern(pattern, offset):
    acc = F(0)
    for d, v in pattern:
        acc += d
        if offset < acc:
            return v
    raise AssertionError("offset outside the pattern")


def sample_grid(lo=-80, hi=80, step=F(1, 2)):
    t = F(lo)
    out = []
    while t <= hi:
        out.append(t)
        t += step
    return out


def meet_all(values):
    values = list(values)
    return BVec([all(v[i] for v in values) for i in range(len(values[0]))])


def join_all(values):
    values = list(values)
    return BVec([any(v[i] for v in values) for i in range(len(values[0]))])


def window_values(raw, t, d):
    """Every value a constant-tailed description takes on ``[t - d, t)``."""
    _, events, _ = raw
    lo = t - d
    return [raw_value(raw, lo)] + [v for s, v in events if lo < s < t]


def oracle_window(raw, t, d, mode):
    vals = window_values(raw, t, d)
    return meet_all(vals) if mode == "inf" else join_all(vals)


def oracle_probe_times(times, d):
    """Candidate breakpoints, shifted by ``d``, plus midpoints and far points."""
    base = set()
    for s in times:
        base.update((s, s + d, s - d))
    pts = sorted(base)
    probes = set(pts)
    probes.update((a + b) / 2 for a, b in zip(pts, pts[1:]))
    probes.update((pts[0] - 1, pts[-1] + 1))
    return sorted(probes)


def oracle_delay(u_raw, x_raw, d):
    """Brute-force delay inequality at every probe time."""
    times = [s for s, _ in u_raw[1]] + [s for s, _ in x_raw[1]]
    for t in oracle_probe_times(times, d):
        lo = oracle_window(u_raw, t, d, "inf")
        hi = oracle_window(u_raw, t, d, "sup")
        x = raw_value(x_raw, t)
        if not (lo.leq(x) and x.leq(hi)):
            return False
    return True


def signal_raw(x):
    """The library's canonical fields as a raw description."""
    return x.left_tail, list(x.events), x.right_tail


def rng_for(name, i=0):
    return random.Random(f"test/{name}/{i}")
