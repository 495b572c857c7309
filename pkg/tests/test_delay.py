from fractions import Fraction as F

import pytest

from helpers import build, const_raw, oracle_delay, rng_for, signal_raw
from pseudosys import (
    BVec,
    Const,
    DelayParams,
    DimensionMismatch,
    Periodic,
    Side,
    SignalError,
    StateLevel,
    UnsupportedSignal,
    boundary_report,
    constant,
    delay_membership,
    delay_snapshot,
    is_system,
    limit_value,
    make_signal,
    pure_delay_states,
    shift,
    state_function,
)

QUARTER_GRID = [F(k, 4) for k in range(-12, 25)]


def random_case(rng):
    raw = const_raw(rng, 1, max_events=6)
    d = F(rng.randint(1, 8), rng.choice((1, 2, 4)))
    return raw, d


def test_params_validation():
    assert DelayParams("3/2").d == F(3, 2)
    for bad in (0, -1, "-1/2"):
        with pytest.raises(SignalError):
            DelayParams(bad)


def test_constant_input():
    p = DelayParams(2)
    mu = constant("1")
    assert delay_membership(mu, mu, p)
    assert not delay_membership(mu, constant("0"), p)
    assert pure_delay_states(mu, p, [F(1, 2), 1, 2]) == {mu}


def test_argument_errors():
    p = DelayParams(1)
    u = make_signal(1, Const("0"), [(1, "1")])
    with pytest.raises(DimensionMismatch):
        delay_membership(constant("01"), u, p)
    with pytest.raises(UnsupportedSignal):
        delay_membership(u, make_signal(1, Const("0"), [(0, "0")], Periodic(((1, "0"), (1, "1")))), p)
    with pytest.raises(SignalError):
        pure_delay_states(u, p, [0])
    with pytest.raises(SignalError):
        pure_delay_states(u, p, [F(3, 2)])
    assert pure_delay_states(u, p, []) == frozenset()


def test_one_switch_two_pure_delays():
    p = DelayParams(2)
    u = make_signal(1, Const("0"), [(1, "1")])
    states = pure_delay_states(u, p, [1, 2])
    assert len(states) == 2
    assert all(delay_membership(u, x, p) for x in states)


def test_soundness_and_identity_failure():
    rng = rng_for("delay-sound")
    for _ in range(500):
        raw, d = random_case(rng)
        u = build(raw)
        p = DelayParams(d)
        for tau in (d / 4, d / 2, 3 * d / 4, d):
            assert delay_membership(u, shift(u, tau), p)
        switches = len(u.events) > 1 or u.events[0][1] != u.left_tail.value
        assert delay_membership(u, u, p) is (not switches)


def _mutate(rng, raw):
    left, events, _ = raw
    choice = rng.random()
    events = list(events)
    if choice < 0.4:
        i = rng.randrange(len(events))
        t, v = events[i]
        events[i] = (t, ~v)
    elif choice < 0.7:
        t = rng.choice(QUARTER_GRID)
        events = sorted({s: v for s, v in events + [(t, BVec([rng.random() < 0.5]))]}.items())
    else:
        left = Const(~left.value)
    return left, events, Const()


def test_membership_agrees_with_oracle():
    rng = rng_for("delay-oracle")
    disagreements = 0
    for _ in range(500):
        raw, d = random_case(rng)
        u = build(raw)
        kind = rng.random()
        if kind < 0.3:
            x_raw = signal_raw(shift(u, d * F(rng.randint(1, 4), 4)))
        elif kind < 0.7:
            x_raw = _mutate(rng, signal_raw(shift(u, d * F(rng.randint(0, 5), 4))))
        else:
            x_raw = const_raw(rng, 1, max_events=6, grid=QUARTER_GRID)
        x = build(x_raw)
        if delay_membership(u, x, DelayParams(d)) != oracle_delay(raw, x_raw, d):
            disagreements += 1
    assert disagreements == 0


def test_initial_value_is_forced():
    rng = rng_for("delay-initial")
    found = 0
    for _ in range(400):
        raw, d = random_case(rng)
        u = build(raw)
        x = build(_mutate(rng, signal_raw(shift(u, d / 2))))
        if delay_membership(u, x, DelayParams(d)):
            found += 1
            assert limit_value(x, Side.INITIAL) == limit_value(u, Side.INITIAL)
    assert found > 0


def test_final_value_is_forced():
    rng = rng_for("delay-final")
    for _ in range(300):
        raw, d = random_case(rng)
        u = build(raw)
        x = build(_mutate(rng, signal_raw(shift(u, d / 3))))
        if delay_membership(u, x, DelayParams(d)):
            assert limit_value(x, Side.FINAL) == limit_value(u, Side.FINAL)


def test_snapshot():
    p = DelayParams(1)
    zero = constant("0")
    f = delay_snapshot([zero], p, [1])
    assert f.pairs == {(zero, zero)}
    u = make_signal(1, Const("0"), [(1, "1"), (3, "0")])
    extra = make_signal(1, Const("0"), [(F(3, 2), "1"), (F(7, 2), "0")])
    bad = make_signal(1, Const("1"), [(1, "0")])
    g = delay_snapshot([u, zero], p, [F(1, 2), 1], [extra, bad])
    assert g(u) == {shift(u, F(1, 2)), shift(u, 1), extra}
    assert g(zero) == {zero}
    assert is_system(g)
    assert bad in g.state_universe


def test_snapshots_are_race_free_systems():
    rng = rng_for("delay-snapshot")
    for _ in range(60):
        inputs = [build(random_case(rng)[0]) for _ in range(rng.randint(1, 3))]
        d = F(rng.randint(1, 6), 2)
        extras = [build(const_raw(rng, 1, grid=QUARTER_GRID)) for _ in range(3)]
        f = delay_snapshot(inputs, DelayParams(d), [d / 4, d / 2, d], extras)
        assert is_system(f)
        r = boundary_report(f, Side.INITIAL)
        assert r.state_level >= StateLevel.RACE_FREE
        phi = state_function(f, Side.INITIAL)
        for u in inputs:
            assert phi(u) == {limit_value(u, Side.INITIAL)}
