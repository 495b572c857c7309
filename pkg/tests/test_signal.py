from fractions import Fraction as F

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from helpers import build, raw_signal, raw_value, rng_for, sample_grid, signal_raw
from pseudosys import (
    BVec,
    Const,
    DimensionMismatch,
    Periodic,
    Side,
    SignalError,
    complement_signal,
    concat,
    constant,
    limit_value,
    make_signal,
    membership_class,
    project,
    shift,
    step,
    value_at,
)
from pseudosys.signal import as_time, is_signal, is_signal_star

GRID = sample_grid()


def raw_pairs(name, count):
    rng = rng_for(name)
    for _ in range(count):
        dim = rng.choice((1, 2))
        yield rng, dim, raw_signal(rng, dim)


# construction


def test_constant_zero_has_single_anchor_event():
    x = make_signal(1, Const("0"), [(0, "0")], Const())
    assert x == constant("0")
    assert x.events == ((F(0), BVec("0")),)
    assert isinstance(x.left_tail, Const) and isinstance(x.right_tail, Const)


def test_duplicate_events_merge():
    x = make_signal(1, Const("0"), [(0, "1"), (2, "1"), (5, "0")])
    assert x.events == ((F(0), BVec("1")), (F(5), BVec("0")))


def test_periodic_left_tail_has_no_initial_value():
    x = make_signal(1, Periodic(((1, "0"), (1, "1"))), [(0, "1")], Const())
    assert membership_class(x) == (False, True)
    assert limit_value(x, Side.INITIAL) is None
    assert limit_value(x, Side.FINAL) == BVec("1")


@pytest.mark.parametrize(
    "bad",
    [
        lambda: make_signal(1, Const("0"), []),
        lambda: make_signal(1, Const("0"), [(1, "1"), (1, "0")]),
        lambda: make_signal(1, Const("0"), [(2, "1"), (1, "0")]),
        lambda: make_signal(0, Const("0"), [(0, "0")]),
        lambda: make_signal(1, Const(), [(0, "0")]),
        lambda: make_signal(1, Const("0"), [(0, "1")], Const("0")),
        lambda: make_signal(1, Const("0"), [(0, "1")], Periodic(((1, "0"), (1, "1")))),
        lambda: Periodic(((0, "0"),)),
        lambda: Periodic(()),
        lambda: BVec("012"),
        lambda: as_time("x"),
    ],
)
def test_invalid_construction(bad):
    with pytest.raises(SignalError):
        bad()


def test_dimension_errors():
    with pytest.raises(DimensionMismatch):
        make_signal(2, Const("00"), [(0, "1")])
    with pytest.raises(DimensionMismatch):
        make_signal(1, Const("00"), [(0, "1")])
    with pytest.raises(DimensionMismatch):
        project(constant("01"), 1, 3)


# evaluation


def test_value_at_examples():
    mu = constant("10")
    assert all(value_at(mu, t) == BVec("10") for t in (-100, 0, F(7, 3), 10**6))
    x = make_signal(1, Const("0"), [(3, "1")])
    assert value_at(x, 3) == BVec("1")
    assert value_at(x, F(299, 100)) == BVec("0")
    p = make_signal(1, Periodic(((1, "0"), (1, "1"))), [(0, "1")], Const())
    assert value_at(p, F(-3, 2)) == BVec("0")
    assert value_at(p, F(-1, 2)) == BVec("1")


def test_value_at_matches_unrolled_oracle():
    for _, _, raw in raw_pairs("value", 400):
        x = build(raw)
        for t in GRID[::3] + [e for e, _ in raw[1]]:
            assert x(t) == raw_value(raw, t), (raw, t)


def test_limit_values():
    assert limit_value(make_signal(1, Const("0"), [(1, "1")]), Side.INITIAL) == BVec("0")
    assert limit_value(make_signal(1, Const("0"), [(3, "0"), (7, "1")]), Side.FINAL) == BVec("1")
    y = make_signal(1, Const("0"), [(1, "1")], Periodic(((1, "1"), (2, "0"))))
    assert limit_value(y, "final") is None
    assert membership_class(y) == (True, False)
    assert is_signal(y) and not is_signal_star(y)


# canonical form


def test_canonical_idempotence():
    for _, dim, raw in raw_pairs("idem", 500):
        x = build(raw)
        again = make_signal(dim, x.left_tail, x.events, x.right_tail)
        assert again == x
        assert (again.left_tail, again.events, again.right_tail) == (x.left_tail, x.events, x.right_tail)


def _unroll_left(raw):
    # move one period of a periodic left tail into the event list
    left, events, right = raw
    period = sum(d for d, _ in left.pattern)
    start = events[0][0] - period
    extra, t = [], start
    for d, v in left.pattern:
        extra.append((t, v))
        t += d
    return left, extra + list(events), right


def _unroll_right(raw):
    # one period of the right tail becomes events; the tail restarts after it
    left, events, right = raw
    t = events[-1][0]
    slots = right.pattern
    extra = []
    for (d, _), (_, v) in zip(slots, slots[1:] + slots[:1]):
        t += d
        extra.append((t, v))
    return left, list(events) + extra, right


def test_equal_functions_have_equal_canonical_forms():
    # rewrite each description into a different one for the same function
    for rng, dim, raw in raw_pairs("rewrite", 400):
        x = build(raw)
        variants = []
        left, events, right = raw
        t = events[-1][0] + rng.choice((F(1, 3), F(5, 7)))
        if isinstance(right, Const):
            variants.append((left, list(events) + [(t, events[-1][1])], right))
        if isinstance(left, Periodic):
            variants.append(_unroll_left(raw))
        if isinstance(right, Periodic):
            variants.append(_unroll_right(raw))
        for v in variants:
            y = build(v)
            assert y == x, (raw, v)
            assert hash(y) == hash(x)


def test_structure_and_values_agree():
    sigs = [build(raw) for _, _, raw in raw_pairs("coherence", 120)]
    by_dim = {}
    for x in sigs:
        by_dim.setdefault(x.dim, []).append(x)
    for group in by_dim.values():
        for a in group[:40]:
            for b in group[:40]:
                same_values = all(a(t) == b(t) for t in GRID)
                assert (a == b) == same_values


def test_random_rational_times_agree_for_equal_signals():
    rng = rng_for("rational")
    for _, dim, raw in raw_pairs("rational-sig", 100):
        x = build(raw)
        y = make_signal(dim, *signal_raw(x))
        for _ in range(200):
            t = F(rng.randint(-4000, 4000), rng.randint(1, 97))
            assert x(t) == y(t)


# complement, shift, concat, project


def test_complement_examples():
    assert complement_signal(constant("01")) == constant("10")
    x = make_signal(1, Const("0"), [(0, "1"), (4, "0")])
    y = complement_signal(x)
    assert y.events == ((F(0), BVec("0")), (F(4), BVec("1")))
    assert ~~x == x


def test_complement_pointwise_and_involution():
    for _, _, raw in raw_pairs("complement", 300):
        x = build(raw)
        y = complement_signal(x)
        assert complement_signal(y) == x
        assert x.times == y.times
        for t in GRID[::5]:
            assert y(t) == ~x(t)


def test_shift_examples():
    x = make_signal(1, Const("0"), [(0, "1")])
    assert shift(x, 0) is x
    assert shift(constant("1"), 5) == constant("1")
    s = shift(x, F(3, 2))
    assert s.events == ((F(3, 2), BVec("1")),) and s.left_tail == x.left_tail


def test_shift_round_trip_and_values():
    rng = rng_for("shift")
    for _, _, raw in raw_pairs("shift-sig", 300):
        x = build(raw)
        tau = F(rng.randint(-20, 20), rng.randint(1, 6))
        y = shift(x, tau)
        assert shift(y, -tau) == x
        for t in GRID[::7]:
            assert y(t) == x(t - tau)


def test_concat_examples():
    assert concat(constant("0"), constant("1")) == constant("01")
    a = make_signal(1, Const("0"), [(0, "1")])
    b = make_signal(1, Const("0"), [(2, "1")])
    c = concat(a, b)
    assert c.events == ((F(0), BVec("10")), (F(2), BVec("11")))
    for t in (-1, 0, 1, 2, 3):
        assert c(t) == a(t).concat(b(t))
    assert project(c, 0, 1) == a
    only_second = project(c, 1, 2)
    assert only_second == b


def test_project_merges_events():
    c = make_signal(2, Const("00"), [(0, "10"), (2, "11")])
    first = project(c, 0, 1)
    assert first == make_signal(1, Const("0"), [(0, "1")])
    assert len(first.events) == 1
    assert project(c, 0, 2) is c


def test_concat_project_identities_random():
    pairs = list(raw_pairs("concat", 600))
    for (_, _, ra), (_, _, rb) in zip(pairs[::2], pairs[1::2]):
        a, b = build(ra), build(rb)
        c = concat(a, b)
        assert c.dim == a.dim + b.dim
        assert project(c, 0, a.dim) == a
        assert project(c, a.dim, c.dim) == b
        for t in GRID[::4]:
            assert c(t) == a(t).concat(b(t))


def test_step_helper():
    x = step("0", 2, "1")
    assert x(F(19, 10)) == BVec("0") and x(2) == BVec("1")


# property-based


bits1 = st.sampled_from(["0", "1"])
times = st.integers(-20, 20).map(lambda k: F(k, 4))


@st.composite
def signals(draw):
    ts = sorted(draw(st.sets(times, min_size=1, max_size=5)))
    events = [(t, draw(bits1)) for t in ts]
    if draw(st.booleans()):
        left = Const(draw(bits1))
    else:
        left = Periodic(tuple((F(draw(st.integers(1, 4)), 2), draw(bits1)) for _ in range(draw(st.integers(1, 3)))))
    if draw(st.booleans()):
        right = Const()
    else:
        slots = [(F(draw(st.integers(1, 4)), 2), events[-1][1])]
        slots += [(F(draw(st.integers(1, 4)), 2), draw(bits1)) for _ in range(draw(st.integers(0, 2)))]
        right = Periodic(tuple(slots))
    return (left, [(t, BVec(v)) for t, v in events], right)


@settings(max_examples=200, deadline=None)
@given(signals(), signals(), st.integers(-12, 12))
def test_properties_hold_for_generated_signals(ra, rb, k):
    a, b = build(ra), build(rb)
    tau = F(k, 3)
    assert make_signal(1, *signal_raw(a)) == a
    assert ~~a == a
    assert shift(shift(a, tau), -tau) == a
    c = concat(a, b)
    assert project(c, 0, 1) == a and project(c, 1, 2) == b
    for t in sample_grid(-30, 30, F(1, 4)):
        assert a(t) == raw_value(ra, t)
