"""Symmetrical bounded delay.

``x`` is a delayed copy of ``u`` with window ``d`` when, for every ``t``,

    inf of u over [t-d, t)  <=  x(t)  <=  sup of u over [t-d, t)

The relation has uncountably many solutions.  Pure delays ``u(t - tau)`` with
``0 < tau <= d`` are the canonical ones; :func:`delay_snapshot` freezes a
finite window onto the relation as a :class:`PseudoSystem`.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import FrozenSet, Iterable

from .errors import DimensionMismatch, SignalError, UnsupportedSignal
from .pseudo_system import PseudoSystem, from_pairs
from .signal import Const, Signal, as_time, shift
from .step import embed, pointwise_leq, window_inf, window_sup


@dataclass(frozen=True)
class DelayParams:
    d: Fraction

    def __post_init__(self):
        d = as_time(self.d)
        if d <= 0:
            raise SignalError(f"delay window must be positive, got {d}")
        object.__setattr__(self, "d", d)


def _check(x: Signal, what: str):
    if x.dim != 1:
        raise DimensionMismatch(f"{what} must have dimension 1, got {x.dim}")
    if not (isinstance(x.left_tail, Const) and isinstance(x.right_tail, Const)):
        raise UnsupportedSignal(f"{what} must have constant tails")


def delay_membership(u: Signal, x: Signal, p: DelayParams) -> bool:
    """Exact test of the delay inequality for the pair ``(u, x)``."""
    _check(u, "input")
    _check(x, "state")
    ex = embed(x)
    return pointwise_leq(window_inf(u, p.d), ex) and pointwise_leq(ex, window_sup(u, p.d))


def _taus(taus: Iterable, p: DelayParams):
    out = []
    for tau in taus:
        tau = as_time(tau)
        if not 0 < tau <= p.d:
            raise SignalError(f"delay {tau} outside (0, {p.d}]")
        out.append(tau)
    return out


def pure_delay_states(u: Signal, p: DelayParams, taus: Iterable) -> FrozenSet[Signal]:
    """``{u(t - tau) : tau in taus}``."""
    _check(u, "input")
    return frozenset(shift(u, tau) for tau in _taus(taus, p))


def delay_snapshot(inputs: Iterable[Signal], p: DelayParams, taus: Iterable, extra_candidates: Iterable[Signal] = ()) -> PseudoSystem:
    """Finite pseudo-subsystem of the delay relation.

    States are the pure delays of every input plus ``extra_candidates``; each
    input is mapped to every state that satisfies the delay inequality.
    """
    inputs = list(inputs)
    taus = _taus(taus, p)
    extras = list(extra_candidates)
    for x in extras:
        _check(x, "candidate")
    states = set(extras)
    for u in inputs:
        states |= pure_delay_states(u, p, taus)
    states = sorted(states, key=lambda s: s.sort_key)
    pairs = [(u, x) for u in inputs for x in states if delay_membership(u, x, p)]
    return from_pairs(1, 1, inputs, states, pairs)
