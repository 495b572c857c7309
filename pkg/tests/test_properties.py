from fractions import Fraction as F

import pytest

from helpers import sample_grid
from pseudosys import (
    BVec,
    Const,
    MissingLimit,
    Periodic,
    Side,
    StateLevel,
    TimeLevel,
    boundary_report,
    complement_signal,
    constant,
    constant_system,
    dual,
    from_pairs,
    implied_cells,
    make_signal,
    null,
    state_function,
)
from pseudosys.laws import generate_instance
from pseudosys.properties import CELLS, departure, lattice_violations

# every breakpoint of the generated signals lies on the half grid
GRID = sample_grid(-90, 90, F(1, 2))
FAR_LEFT = [t for t in GRID if t <= -80]
FAR_RIGHT = [t for t in GRID if t >= 80]


def oracle_limit(x, side):
    probe = FAR_LEFT if side is Side.INITIAL else FAR_RIGHT
    values = {x(t) for t in probe}
    return values.pop() if len(values) == 1 else None


def oracle_departure(x, side):
    limit = oracle_limit(x, side)
    if side is Side.INITIAL:
        for t in GRID:
            if x(t) != limit:
                return t
        return None
    for t in reversed(GRID):
        if x(t) != limit:
            return t + F(1, 2)
    return None


def oracle_report(f, side):
    per_input = {}
    all_limits, race_free, overall = True, True, set()
    for u, xs in f.image.items():
        limits = [oracle_limit(x, side) for x in xs]
        all_limits &= all(v is not None for v in limits)
        values = {v for v in limits if v is not None}
        race_free &= len(values) <= 1
        overall |= values
        deps = [oracle_departure(x, side) for x, v in zip(xs, limits) if v is not None]
        deps = [d for d in deps if d is not None]
        pick = min if side is Side.INITIAL else max
        per_input[u] = (frozenset(values), pick(deps) if deps else None)
    if not f.image:
        level = StateLevel.CONSTANT
    elif not all_limits:
        level = StateLevel.NONE
    elif not race_free:
        level = StateLevel.HAS_STATES
    elif len(overall) > 1:
        level = StateLevel.RACE_FREE
    else:
        level = StateLevel.CONSTANT
    return level, per_input


def _instances(count):
    for k in range(count):
        inst = generate_instance(11, k)
        yield from (inst.f, inst.h, inst.fp)


def test_report_matches_brute_force_oracle():
    for f in _instances(120):
        for side in Side:
            r = boundary_report(f, side)
            level, per_input = oracle_report(f, side)
            assert r.state_level is level
            assert {w.input: (w.values, w.extremal_instant) for w in r.per_input} == per_input
            assert lattice_violations(r) == []


def test_departure_is_the_boundary_of_valid_witnesses():
    for f in _instances(60):
        for x in f.state_universe:
            for side in Side:
                limit = oracle_limit(x, side)
                if limit is None:
                    continue
                dep = departure(x, side)
                assert dep == oracle_departure(x, side)
                if dep is None:
                    continue
                if side is Side.INITIAL:
                    assert all(x(t) == limit for t in GRID if t < dep)
                    assert x(dep) != limit
                else:
                    assert all(x(t) == limit for t in GRID if t > dep)
                    assert x(dep - F(1, 4)) != limit


def test_departure_with_periodic_tails():
    # the left tail already sits on the final value just before the anchor
    x = make_signal(1, Periodic(((1, "0"), (1, "1"))), [(2, "1")])
    assert departure(x, Side.FINAL) == 1
    y = make_signal(1, Const("0"), [(1, "1"), (2, "0")], Periodic(((1, "0"), (3, "1"))))
    assert departure(y, Side.INITIAL) == 1
    z = make_signal(1, Const("0"), [(0, "0")], Periodic(((1, "0"), (1, "1"))))
    assert departure(z, Side.INITIAL) == 1
    assert departure(constant("1"), Side.INITIAL) is None
    assert departure(constant("1"), Side.FINAL) is None


def test_constant_pseudo_system_is_cell_i():
    mu = BVec("1")
    inputs = [
        make_signal(1, Const("0"), [(1, "1"), (2, "0")]),
        make_signal(1, Periodic(((1, "1"), (1, "0"))), [(3, "1")]),
        constant("0"),
    ]
    f = constant_system(inputs, constant(mu))
    for side in Side:
        r = boundary_report(f, side)
        assert r.cell == "i"
        assert (r.state_level, r.time_level) == (StateLevel.CONSTANT, TimeLevel.FIX)
        assert r.constant_value == mu and not r.vacuous
        assert r.global_instant is None
        sf = state_function(f, side)
        assert all(sf(u) == {mu} for u in inputs)
        assert sf.theta == {mu}


def test_race_free_but_not_constant():
    u1, u2 = constant("0"), constant("1")
    x0 = make_signal(1, Const("0"), [(2, "1")])
    x1 = make_signal(1, Const("1"), [(4, "0")])
    f = from_pairs(1, 1, [u1, u2], [x0, x1], [(u1, x0), (u2, x1)])
    r = boundary_report(f, Side.INITIAL)
    assert r.state_level is StateLevel.RACE_FREE and r.cell == "f"
    assert r.constant_value is None
    assert r.witness(u1).extremal_instant == 2
    assert r.witness(u2).extremal_instant == 4
    assert r.global_instant == 2
    final = boundary_report(f, Side.FINAL)
    assert final.state_level is StateLevel.RACE_FREE and final.global_instant == 4
    g = from_pairs(1, 1, [u1], [x0, x1], [(u1, x0), (u1, x1)])
    assert boundary_report(g, Side.INITIAL).state_level is StateLevel.HAS_STATES


def test_null_is_vacuous():
    z = null(1, 1, [constant("0")], [constant("1")])
    for side in Side:
        r = boundary_report(z, side)
        assert r.vacuous and r.state_level is StateLevel.CONSTANT and r.time_level is TimeLevel.FIX
        assert r.constant_value is None and r.cell == "i"
        assert state_function(z, side).theta == frozenset()


def test_missing_limit_is_reported():
    wavy = make_signal(1, Periodic(((1, "0"), (1, "1"))), [(0, "1")])
    u = constant("0")
    f = from_pairs(1, 1, [u], [wavy], [(u, wavy)])
    assert boundary_report(f, Side.INITIAL).state_level is StateLevel.NONE
    assert boundary_report(f, Side.INITIAL).cell is None
    with pytest.raises(MissingLimit) as info:
        state_function(f, Side.INITIAL)
    assert info.value.input_signal == u and info.value.state_signal == wavy
    assert state_function(f, Side.FINAL)(u) == {BVec("1")}


def test_dual_state_function():
    for k in range(40):
        f = generate_instance(5, k).f
        d = dual(f)
        for side in Side:
            if boundary_report(f, side).state_level < StateLevel.HAS_STATES:
                continue
            pf, pd = state_function(f, side), state_function(d, side)
            for u in f.input_universe:
                assert pd(complement_signal(u)) == {~v for v in pf(u)}


def test_cell_grid_and_implications():
    assert len(set(CELLS.values())) == 9
    assert implied_cells("i") == frozenset("abcdefghi")
    assert implied_cells("a") == {"a"}
    assert implied_cells("e") == {"a", "b", "d", "e"}
    for f in _instances(100):
        for side in Side:
            r = boundary_report(f, side)
            if r.state_level >= StateLevel.RACE_FREE:
                assert all(len(w.values) <= 1 for w in r.per_input)
            if r.state_level is StateLevel.CONSTANT:
                theta = state_function(f, side).theta
                assert theta in (frozenset(), frozenset({r.constant_value}))
