"""Finite pseudo-systems: set-valued maps from input signals to state signals.

A :class:`PseudoSystem` is declared over a finite input universe and a finite
state universe; every signal outside the input universe is non-admissible
(its state set is empty).  Universes are kept sorted by the canonical text of
their signals, so structurally equal systems compare equal with ``==``.

Operators that combine two systems take the union of the relevant universes.
Complement is taken relative to the system's own state universe.  Two
systems may denote the same map while declaring different universes; use
:func:`same_map` to compare the maps alone.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property, lru_cache
from itertools import product as cartesian
from typing import Dict, FrozenSet, Iterable, Mapping, Tuple

from .errors import DimensionMismatch, NoInducedSystem, UniverseError
from .signal import Signal, complement_signal, concat, is_signal


@dataclass(frozen=True)
class PseudoSystem:
    """``f: S~(m) -> P(S~(n))`` restricted to declared finite universes.

    ``table`` lists ``(input index, state indices)`` for admissible inputs
    only, in ascending input order.
    """

    m: int
    n: int
    input_universe: Tuple[Signal, ...]
    state_universe: Tuple[Signal, ...]
    table: Tuple[Tuple[int, Tuple[int, ...]], ...]

    @cached_property
    def image(self) -> Dict[Signal, FrozenSet[Signal]]:
        """Admissible input -> its (nonempty) state set."""
        return {
            self.input_universe[i]: frozenset(self.state_universe[j] for j in js)
            for i, js in self.table
        }

    @cached_property
    def pairs(self) -> FrozenSet[Tuple[Signal, Signal]]:
        """The graph ``{(u, x) : x in f(u)}``."""
        return frozenset((u, x) for u, xs in self.image.items() for x in xs)

    def __call__(self, u: Signal) -> FrozenSet[Signal]:
        return apply(self, u)

    def __repr__(self) -> str:
        return (
            f"<PseudoSystem m={self.m} n={self.n} inputs={len(self.input_universe)} "
            f"states={len(self.state_universe)} pairs={len(self.pairs)}>"
        )


def _sorted_universe(signals: Iterable[Signal]) -> Tuple[Signal, ...]:
    return tuple(sorted(set(signals), key=lambda s: s.sort_key))


def from_pairs(m: int, n: int, inputs: Iterable[Signal], states: Iterable[Signal], pairs) -> PseudoSystem:
    """Assemble a canonical system from universes and a graph of ``(u, x)`` pairs.

    Universes are extended by whatever the pairs mention.
    """
    pairs = list(pairs)
    ins = _sorted_universe(list(inputs) + [u for u, _ in pairs])
    sts = _sorted_universe(list(states) + [x for _, x in pairs])
    for s in ins:
        if s.dim != m:
            raise DimensionMismatch(f"input of dimension {s.dim} in an m={m} system")
    for s in sts:
        if s.dim != n:
            raise DimensionMismatch(f"state of dimension {s.dim} in an n={n} system")
    in_index = {s: i for i, s in enumerate(ins)}
    st_index = {s: j for j, s in enumerate(sts)}
    rows: Dict[int, set] = {}
    for u, x in pairs:
        rows.setdefault(in_index[u], set()).add(st_index[x])
    table = tuple((i, tuple(sorted(js))) for i, js in sorted(rows.items()))
    return PseudoSystem(m, n, ins, sts, table)


def build(m: int, n: int, input_universe, state_universe, table: Mapping[int, Iterable[int]]) -> PseudoSystem:
    """Validate a table given by indices into the universes as listed."""
    input_universe = list(input_universe)
    state_universe = list(state_universe)
    for name, universe in (("input", input_universe), ("state", state_universe)):
        if len(set(universe)) != len(universe):
            raise UniverseError(f"duplicate signal in the {name} universe")
    pairs = []
    for i, js in dict(table).items():
        if not 0 <= i < len(input_universe):
            raise UniverseError(f"input index {i} out of range")
        for j in js:
            if not 0 <= j < len(state_universe):
                raise UniverseError(f"state index {j} out of range")
            pairs.append((input_universe[i], state_universe[j]))
    return from_pairs(m, n, input_universe, state_universe, pairs)


def null(m: int, n: int, input_universe=(), state_universe=()) -> PseudoSystem:
    """The pseudo-system with no admissible input."""
    return from_pairs(m, n, input_universe, state_universe, [])


def total(m: int, n: int, input_universe, state_universe) -> PseudoSystem:
    """Every input of the universe admits every state of the universe."""
    input_universe, state_universe = list(input_universe), list(state_universe)
    return from_pairs(m, n, input_universe, state_universe, cartesian(input_universe, state_universe))


def constant_system(input_universe, state: Signal, m: int = None) -> PseudoSystem:
    """The map sending every declared input to ``{state}``."""
    input_universe = list(input_universe)
    if m is None:
        m = input_universe[0].dim
    return from_pairs(m, state.dim, input_universe, [state], [(u, state) for u in input_universe])


def apply(f: PseudoSystem, u: Signal) -> FrozenSet[Signal]:
    """State set of ``u``; empty when ``u`` is not admissible."""
    if u.dim != f.m:
        raise DimensionMismatch(f"input of dimension {u.dim} applied to an m={f.m} system")
    return f.image.get(u, frozenset())


def _get(f: PseudoSystem, u: Signal) -> FrozenSet[Signal]:
    return f.image.get(u, frozenset())


def support(f: PseudoSystem) -> FrozenSet[Signal]:
    """Admissible inputs ``U_f``."""
    return frozenset(f.image)


def is_null(f: PseudoSystem) -> bool:
    return not f.table


def _same_dims(f: PseudoSystem, g: PseudoSystem, what: str):
    if (f.m, f.n) != (g.m, g.n):
        raise DimensionMismatch(f"{what}: ({f.m},{f.n}) vs ({g.m},{g.n}) dimensions")


def is_subsystem(f: PseudoSystem, g: PseudoSystem) -> bool:
    """``f(u) <= g(u)`` for every input."""
    _same_dims(f, g, "is_subsystem")
    return all(xs <= _get(g, u) for u, xs in f.image.items())


def same_map(f: PseudoSystem, g: PseudoSystem) -> bool:
    """Equality as maps, ignoring the declared universes."""
    return (f.m, f.n) == (g.m, g.n) and f.pairs == g.pairs


@lru_cache(maxsize=1 << 16)
def _bar(x: Signal) -> Signal:
    return complement_signal(x)


_CAT_CACHE: Dict[Tuple[Signal, Signal], Signal] = {}
_CAT_CACHE_LIMIT = 1 << 16


def _cat(x: Signal, y: Signal) -> Signal:
    hit = _CAT_CACHE.get((x, y))
    if hit is not None:
        return hit
    # concatenation commutes with complement, which dual systems exploit
    bar = _CAT_CACHE.get((_bar(x), _bar(y)))
    z = _bar(bar) if bar is not None else concat(x, y)
    if len(_CAT_CACHE) >= _CAT_CACHE_LIMIT:
        _CAT_CACHE.clear()
    _CAT_CACHE[(x, y)] = z
    return z


def dual(f: PseudoSystem) -> PseudoSystem:
    """``f*(u) = {not x : x in f(not u)}``."""
    return from_pairs(
        f.m,
        f.n,
        map(_bar, f.input_universe),
        map(_bar, f.state_universe),
        [(_bar(u), _bar(x)) for u, x in f.pairs],
    )


def inverse(f: PseudoSystem) -> PseudoSystem:
    """``f^-1(x) = {u : x in f(u)}``, with the universes swapped."""
    return from_pairs(f.n, f.m, f.state_universe, f.input_universe, [(x, u) for u, x in f.pairs])


def product(f: PseudoSystem, g: PseudoSystem) -> PseudoSystem:
    """Direct product ``(f x g)(u, u') = f(u) x g(u')`` on stacked signals."""
    return from_pairs(
        f.m + g.m,
        f.n + g.n,
        [_cat(u, v) for u, v in cartesian(f.input_universe, g.input_universe)],
        [_cat(x, y) for x, y in cartesian(f.state_universe, g.state_universe)],
        [
            (_cat(u, v), _cat(x, y))
            for u, xs in f.image.items()
            for v, ys in g.image.items()
            for x in xs
            for y in ys
        ],
    )


def parallel(f: PseudoSystem, g: PseudoSystem) -> PseudoSystem:
    """Parallel connection ``(f, g)(u) = f(u) x g(u)`` on a shared input."""
    if f.m != g.m:
        raise DimensionMismatch(f"parallel connection needs equal input dimensions ({f.m} vs {g.m})")
    return from_pairs(
        f.m,
        f.n + g.n,
        f.input_universe + g.input_universe,
        [_cat(x, y) for x, y in cartesian(f.state_universe, g.state_universe)],
        [
            (u, _cat(x, y))
            for u, xs in f.image.items()
            for x in xs
            for y in _get(g, u)
        ],
    )


def diagonal_product(f: PseudoSystem, g: PseudoSystem, u: Signal) -> FrozenSet[Signal]:
    """``(f x g)(u, u)``; equals ``parallel(f, g)(u)``."""
    return apply(product(f, g), _cat(u, u))


def serial(h: PseudoSystem, f: PseudoSystem) -> PseudoSystem:
    """Serial connection ``(h o f)(u) = union of h(x) over x in f(u)``."""
    if h.m != f.n:
        raise DimensionMismatch(f"serial connection: h takes dimension {h.m}, f produces {f.n}")
    return from_pairs(
        f.m,
        h.n,
        f.input_universe,
        h.state_universe,
        [(u, y) for u, x in f.pairs for y in _get(h, x)],
    )


def complement(f: PseudoSystem) -> PseudoSystem:
    """``Cf(u) = state universe minus f(u)`` for every declared input."""
    return from_pairs(
        f.m,
        f.n,
        f.input_universe,
        f.state_universe,
        [(u, x) for u in f.input_universe for x in f.state_universe if x not in _get(f, u)],
    )


def intersect(f: PseudoSystem, g: PseudoSystem) -> PseudoSystem:
    _same_dims(f, g, "intersect")
    return from_pairs(
        f.m,
        f.n,
        f.input_universe + g.input_universe,
        f.state_universe + g.state_universe,
        f.pairs & g.pairs,
    )


def union(f: PseudoSystem, g: PseudoSystem) -> PseudoSystem:
    _same_dims(f, g, "union")
    return from_pairs(
        f.m,
        f.n,
        f.input_universe + g.input_universe,
        f.state_universe + g.state_universe,
        f.pairs | g.pairs,
    )


def is_system(f: PseudoSystem) -> bool:
    """Nonempty support, and every admissible input and its states have initial values."""
    if is_null(f):
        return False
    return all(is_signal(u) and all(is_signal(x) for x in xs) for u, xs in f.image.items())


def has_induced_system(f: PseudoSystem) -> bool:
    return any(is_signal(u) and any(is_signal(x) for x in xs) for u, xs in f.image.items())


def induced_system(f: PseudoSystem) -> PseudoSystem:
    """``[f]``: the greatest system below ``f``, over ``f``'s universes."""
    if not has_induced_system(f):
        raise NoInducedSystem("no signal input of this pseudo-system has a signal state")
    return from_pairs(
        f.m,
        f.n,
        f.input_universe,
        f.state_universe,
        [(u, x) for u, x in f.pairs if is_signal(u) and is_signal(x)],
    )


OPERATORS = {
    "dual": dual,
    "inverse": inverse,
    "complement": complement,
    "induced": induced_system,
    "product": product,
    "parallel": parallel,
    "serial": serial,
    "intersect": intersect,
    "union": union,
}

UNARY = frozenset({"dual", "inverse", "complement", "induced"})
