"""Randomized law suite.

Instance generation
-------------------
Instance ``i`` of seed ``s`` is drawn from ``random.Random(f"{s}/{i}")``, so
any failure is reproducible from ``(s, i)`` alone:

1. For each dimension 1 and 2 draw a pool of 8 signals.  A signal is a
   constant with probability 0.15; otherwise it has 1-4 events at distinct
   times from the half-integer grid -3..6, random values, and each tail is
   periodic with probability 0.25 (two slots, durations from 1/2..2, values
   ``a`` and ``not a``) and constant otherwise.
2. Dimensions ``m, n, p`` (main chain) and ``m2, n2, p2`` (second factor) are
   drawn from {1, 2}.
3. Each pseudo-system takes 1-6 inputs and 1-6 states from the pools and
   includes each ``(u, x)`` pair with probability 0.2, 0.4 or 0.6.  ``f`` and
   ``g`` share universes; ``f_sub`` is a random subtable of ``f``; ``fp, gp``
   are ``(m2, n2)``; ``fq, gq`` are ``(m, n2)``; ``h, h1`` are ``(n, p)`` with
   ``h_sub`` below ``h``; ``hp`` is ``(n2, p2)``.

Each law is checked once per instance and is counted as passed only when all
of its sub-checks hold.
"""

from __future__ import annotations

import os
import random
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Dict, List, Optional, Tuple

from .errors import MissingLimit
from .properties import StateLevel, boundary_report, lattice_violations, state_function
from .pseudo_system import (
    PseudoSystem,
    _cat,
    complement,
    diagonal_product,
    dual,
    from_pairs,
    has_induced_system,
    induced_system,
    intersect,
    inverse,
    is_null,
    is_subsystem,
    is_system,
    parallel,
    product,
    same_map,
    serial,
    support,
    total,
    union,
)
from .signal import BVec, Const, Periodic, Side, Signal, constant, is_signal, make_signal
from .transfer import check_transfer_laws

TIME_GRID = tuple(Fraction(k, 2) for k in range(-6, 13))
DURATIONS = (Fraction(1, 2), Fraction(1), Fraction(3, 2), Fraction(2))
POOL_SIZE = 8
MAX_UNIVERSE = 6
TIME_CAP_ENV = "PSEUDOSYS_LAWS_MAX_SECONDS"


def random_bits(rng: random.Random, dim: int) -> BVec:
    return BVec(rng.random() < 0.5 for _ in range(dim))


def _periodic(rng: random.Random, first: BVec) -> Periodic:
    return Periodic(((rng.choice(DURATIONS), first), (rng.choice(DURATIONS), ~first)))


def random_signal(rng: random.Random, dim: int, periodic_rate: float = 0.25, max_events: int = 4) -> Signal:
    if rng.random() < 0.15:
        return constant(random_bits(rng, dim))
    k = rng.randint(1, max_events)
    times = sorted(rng.sample(TIME_GRID, k))
    events = [(t, random_bits(rng, dim)) for t in times]
    if rng.random() < periodic_rate:
        left = _periodic(rng, random_bits(rng, dim))
    else:
        left = Const(random_bits(rng, dim))
    right = _periodic(rng, events[-1][1]) if rng.random() < periodic_rate else Const()
    return make_signal(dim, left, events, right)


def random_system(rng: random.Random, pools, m: int, n: int, inputs=None, states=None) -> PseudoSystem:
    if inputs is None:
        inputs = rng.sample(pools[m], rng.randint(1, MAX_UNIVERSE))
    if states is None:
        states = rng.sample(pools[n], rng.randint(1, MAX_UNIVERSE))
    rate = rng.choice((0.2, 0.4, 0.6))
    pairs = [(u, x) for u in inputs for x in states if rng.random() < rate]
    return from_pairs(m, n, inputs, states, pairs)


def random_subsystem(rng: random.Random, f: PseudoSystem) -> PseudoSystem:
    keep = rng.choice((0.3, 0.6, 0.9))
    pairs = [p for p in sorted(f.pairs, key=lambda p: (p[0].sort_key, p[1].sort_key)) if rng.random() < keep]
    return from_pairs(f.m, f.n, f.input_universe, f.state_universe, pairs)


@dataclass
class Instance:
    seed: int
    index: int
    f: PseudoSystem
    g: PseudoSystem
    f_sub: PseudoSystem
    fp: PseudoSystem
    gp: PseudoSystem
    fp_sub: PseudoSystem
    fq: PseudoSystem
    gq: PseudoSystem
    h: PseudoSystem
    h1: PseudoSystem
    h_sub: PseudoSystem
    hp: PseudoSystem


def generate_instance(seed: int, index: int) -> Instance:
    rng = random.Random(f"{seed}/{index}")
    pools = {d: [random_signal(rng, d) for _ in range(POOL_SIZE)] for d in (1, 2)}
    m, n, p, m2, n2, p2 = (rng.choice((1, 2)) for _ in range(6))
    f = random_system(rng, pools, m, n)
    g = random_system(rng, pools, m, n, f.input_universe, f.state_universe)
    fp = random_system(rng, pools, m2, n2)
    gp = random_system(rng, pools, m2, n2, fp.input_universe, fp.state_universe)
    fq = random_system(rng, pools, m, n2)
    gq = random_system(rng, pools, m, n2, fq.input_universe, fq.state_universe)
    h = random_system(rng, pools, n, p)
    h1 = random_system(rng, pools, n, p, h.input_universe, h.state_universe)
    hp = random_system(rng, pools, n2, p2)
    return Instance(
        seed, index, f, g, random_subsystem(rng, f), fp, gp, random_subsystem(rng, fp),
        fq, gq, h, h1, random_subsystem(rng, h), hp,
    )


class LawFailure(Exception):
    pass


def _expect(cond: bool, message: str):
    if not cond:
        raise LawFailure(message)


def _implies(a: bool, b: bool) -> bool:
    return (not a) or b


# operator algebra


def law_involutions(i: Instance):
    _expect(dual(dual(i.f)) == i.f, "dual(dual f) != f")
    _expect(inverse(inverse(i.f)) == i.f, "inverse(inverse f) != f")
    _expect(complement(complement(i.f)) == i.f, "C(C f) != f")


def law_dual_monotone(i: Instance):
    for a, b in ((i.f_sub, i.f), (i.f, i.g), (i.g, i.f)):
        _expect(is_subsystem(a, b) == is_subsystem(dual(a), dual(b)), "inclusion not preserved by dual")


def law_inverse_monotone(i: Instance):
    for a, b in ((i.f_sub, i.f), (i.f, i.g), (i.g, i.f)):
        _expect(_implies(is_subsystem(a, b), is_subsystem(inverse(a), inverse(b))), "inclusion not preserved by inverse")


def law_dual_inverse_commute(i: Instance):
    _expect(dual(inverse(i.f)) == inverse(dual(i.f)), "dual and inverse do not commute")


def law_product_monotone(i: Instance):
    for (a, b), (c, d) in (((i.f_sub, i.f), (i.fp_sub, i.fp)), ((i.f, i.g), (i.fp, i.gp)), ((i.g, i.f), (i.fp_sub, i.gp))):
        both = is_subsystem(a, b) and is_subsystem(c, d)
        prod = is_subsystem(product(a, c), product(b, d))
        _expect(_implies(both, prod), "factor inclusions do not give product inclusion")
        if not is_null(a) and not is_null(c):
            _expect(_implies(prod, both), "product inclusion with non-null factors does not give factor inclusions")


def law_product_dual_inverse(i: Instance):
    p = product(i.f, i.fp)
    _expect(dual(p) == product(dual(i.f), dual(i.fp)), "dual does not distribute over product")
    _expect(inverse(p) == product(inverse(i.f), inverse(i.fp)), "inverse does not distribute over product")


def law_parallel_diagonal(i: Instance):
    par = parallel(i.f, i.fq)
    prod = product(i.f, i.fq)
    for u in par.input_universe:
        _expect(par(u) == prod.image.get(_cat(u, u), frozenset()), "parallel connection differs from the diagonal product")
    if par.input_universe:
        u = par.input_universe[0]
        _expect(par(u) == diagonal_product(i.f, i.fq, u), "parallel connection differs from the diagonal product")


def law_serial_monotone(i: Instance):
    _expect(is_subsystem(serial(i.h, i.f_sub), serial(i.h, i.f)), "serial not monotone in f")
    _expect(is_subsystem(serial(i.h_sub, i.f), serial(i.h, i.f)), "serial not monotone in h")
    _expect(_implies(is_subsystem(i.f, i.g), is_subsystem(serial(i.h, i.f), serial(i.h, i.g))), "serial not monotone in f")


def law_serial_dual(i: Instance):
    _expect(dual(serial(i.h, i.f)) == serial(dual(i.h), dual(i.f)), "dual does not distribute over serial")


def law_serial_inverse_kernel(i: Instance):
    f, fi = i.f, inverse(i.f)
    left = serial(fi, f)
    for u in f.input_universe:
        want = frozenset(v for v in f.input_universe if f.image.get(u, frozenset()) & f.image.get(v, frozenset()))
        _expect(left(u) == want, "inverse after f misses or adds a pair of inputs with a shared state")
    right = serial(f, fi)
    for x in fi.input_universe:
        want = frozenset(z for z in fi.input_universe if fi.image.get(x, frozenset()) & fi.image.get(z, frozenset()))
        _expect(right(x) == want, "f after inverse misses or adds a pair of states with a shared input")


def law_serial_inverse(i: Instance):
    _expect(inverse(serial(i.h, i.f)) == serial(inverse(i.f), inverse(i.h)), "inverse of a serial connection")


def law_serial_product_interchange(i: Instance):
    left = serial(product(i.h, i.hp), product(i.f, i.fp))
    right = product(serial(i.h, i.f), serial(i.hp, i.fp))
    _expect(left == right, "product and serial do not interchange")


def law_serial_parallel_interchange(i: Instance):
    left = serial(product(i.h, i.hp), parallel(i.f, i.fq))
    right = parallel(serial(i.h, i.f), serial(i.hp, i.fq))
    _expect(left == right, "parallel and serial do not interchange")


def law_complement_antitone(i: Instance):
    for a, b in ((i.f_sub, i.f), (i.f, i.g), (i.g, i.f)):
        _expect(is_subsystem(a, b) == is_subsystem(complement(b), complement(a)), "complement is not antitone")


def law_complement_dual_inverse(i: Instance):
    _expect(dual(complement(i.f)) == complement(dual(i.f)), "dual and complement do not commute")
    _expect(inverse(complement(i.f)) == complement(inverse(i.f)), "inverse and complement do not commute")


def law_complement_product_parallel(i: Instance):
    _expect(
        is_subsystem(product(complement(i.f), complement(i.fp)), complement(product(i.f, i.fp))),
        "Cf x Cf' not below C(f x f')",
    )
    _expect(
        is_subsystem(parallel(complement(i.f), complement(i.fq)), complement(parallel(i.f, i.fq))),
        "(Cf, Cf') not below C(f, f')",
    )


def law_boolean_algebra(i: Instance):
    f = i.f
    _expect(intersect(f, complement(f)) == from_pairs(f.m, f.n, f.input_universe, f.state_universe, []), "f and Cf overlap")
    _expect(union(f, complement(f)) == total(f.m, f.n, f.input_universe, f.state_universe), "f and Cf do not cover")
    _expect(intersect(f, f) == f and union(f, f) == f, "not idempotent")


def law_dual_inverse_lattice(i: Instance):
    for a, b in ((i.f, i.g), (i.f, i.f_sub), (i.g, i.f_sub)):
        _expect(dual(intersect(a, b)) == intersect(dual(a), dual(b)), "dual does not distribute over intersection")
        _expect(dual(union(a, b)) == union(dual(a), dual(b)), "dual does not distribute over union")
        _expect(inverse(intersect(a, b)) == intersect(inverse(a), inverse(b)), "inverse does not distribute over intersection")
        _expect(inverse(union(a, b)) == union(inverse(a), inverse(b)), "inverse does not distribute over union")


def law_product_lattice(i: Instance):
    f, g, fp, gp = i.f, i.g, i.fp, i.gp
    _expect(
        same_map(product(intersect(f, g), intersect(fp, gp)), intersect(product(f, fp), product(g, gp))),
        "product does not distribute over intersection",
    )
    _expect(
        is_subsystem(union(product(f, fp), product(g, gp)), product(union(f, g), union(fp, gp))),
        "(f x f') u (g x g') not below (f u g) x (f' u g')",
    )
    _expect(
        same_map(product(union(f, g), fp), union(product(f, fp), product(g, fp))),
        "product does not distribute over union in one factor",
    )


def law_parallel_lattice(i: Instance):
    f, g, fq, gq = i.f, i.g, i.fq, i.gq
    _expect(
        same_map(parallel(intersect(f, g), intersect(fq, gq)), intersect(parallel(f, fq), parallel(g, gq))),
        "parallel does not distribute over intersection",
    )
    _expect(
        is_subsystem(union(parallel(f, fq), parallel(g, gq)), parallel(union(f, g), union(fq, gq))),
        "(f, f') u (g, g') not below (f u g, f' u g')",
    )
    _expect(
        same_map(parallel(union(f, g), fq), union(parallel(f, fq), parallel(g, fq))),
        "parallel does not distribute over union in one argument",
    )


def law_serial_lattice(i: Instance):
    f, g, h, h1 = i.f, i.g, i.h, i.h1
    _expect(is_subsystem(serial(h, intersect(f, g)), intersect(serial(h, f), serial(h, g))), "h o (f n g)")
    _expect(is_subsystem(serial(intersect(h, h1), f), intersect(serial(h, f), serial(h1, f))), "(h n h1) o f")
    # the union inclusions are in fact equalities
    _expect(same_map(serial(h, union(f, g)), union(serial(h, f), serial(h, g))), "h o (f u g)")
    _expect(same_map(serial(union(h, h1), f), union(serial(h, f), serial(h1, f))), "(h u h1) o f")


# systems


def _as_system(f: PseudoSystem) -> Optional[PseudoSystem]:
    return induced_system(f) if has_induced_system(f) else None


def law_induced_system(i: Instance):
    for f in (i.f, i.g, i.h, i.fp):
        if not has_induced_system(f):
            _expect(not is_system(f), "a system without an induced system")
            continue
        s = induced_system(f)
        _expect(is_system(s), "[f] is not a system")
        _expect(is_subsystem(s, f), "[f] is not below f")
        _expect(is_system(f) == (f == s), "f is a system but differs from [f]")
        try:
            state_function(s, Side.INITIAL)
        except MissingLimit:
            raise LawFailure("a system without an initial state function") from None


def law_induced_contains_subsystems(i: Instance):
    if is_system(i.f_sub):
        _expect(is_subsystem(i.f_sub, induced_system(i.f)), "a system below f is not below [f]")


def law_induced_maximal(i: Instance):
    """Exhaustive search over subtables of a tiny restriction of ``f``."""
    pairs = sorted(i.f.pairs, key=lambda p: (p[0].sort_key, p[1].sort_key))[:8]
    tiny = from_pairs(i.f.m, i.f.n, i.f.input_universe, i.f.state_universe, pairs)
    good = [is_signal(u) and is_signal(x) for u, x in pairs]
    best = {p for p, ok in zip(pairs, good) if ok}
    if has_induced_system(tiny):
        _expect(induced_system(tiny).pairs == best, "[f] differs from the signal pairs")
    else:
        _expect(not best, "signal pairs without an induced system")
    # a subtable is a system iff it is nonempty and only uses signal pairs,
    # so every system subtable lies within ``best``
    for mask in range(1, 1 << len(pairs)):
        chosen = {pairs[k] for k in range(len(pairs)) if mask >> k & 1}
        if all(good[k] for k in range(len(pairs)) if mask >> k & 1):
            _expect(chosen <= best, "a system subtable escapes [f]")


def law_system_closure(i: Instance):
    fs, gs, fqs, hs, fps = (_as_system(x) for x in (i.f, i.g, i.fq, i.h, i.fp))
    if fs is not None:
        _expect(is_system(dual(fs)), "dual of a system")
        inv = inverse(fs)
        _expect(is_system(inv), "inverse of a system")
        _expect(support(inv) == frozenset().union(*fs.image.values()), "support of the inverse system")
        if fps is not None:
            _expect(is_system(product(fs, fps)), "product of systems")
        if fqs is not None:
            par = parallel(fs, fqs)
            _expect(is_system(par) == bool(support(fs) & support(fqs)), "parallel system condition")
            if is_system(par):
                _expect(support(par) == support(fs) & support(fqs), "parallel system support")
        if hs is not None:
            ser = serial(hs, fs)
            cond = any(xs & support(hs) for xs in fs.image.values())
            _expect(is_system(ser) == cond, "serial system condition")
        if gs is not None:
            cap = intersect(fs, gs)
            cond = any(fs(u) & gs(u) for u in support(fs) & support(gs))
            _expect(is_system(cap) == cond, "intersection system condition")
            _expect(is_system(union(fs, gs)), "union of systems")
            sub = is_subsystem(fs, gs)
            _expect(
                sub == (support(fs) <= support(gs) and all(fs(u) <= gs(u) for u in support(fs))),
                "subsystem characterization",
            )


# classification


def law_classification_lattice(i: Instance):
    for f in (i.f, i.g, i.f_sub, i.h, i.fp, dual(i.f), inverse(i.f), complement(i.f)):
        for side in Side:
            r = boundary_report(f, side)
            problems = lattice_violations(r)
            _expect(not problems, "; ".join(problems))
            if r.state_level >= StateLevel.HAS_STATES:
                sf = state_function(f, side)
                _expect(sf.theta == frozenset().union(*sf.phi.values()) if sf.phi else not sf.theta, "theta")
                _expect(all(sf(u) == frozenset() for u in f.input_universe if u not in f.image), "phi off support")
                if r.state_level >= StateLevel.RACE_FREE:
                    _expect(all(len(sf(u)) <= 1 for u in f.input_universe), "race-free with several values")
                if r.state_level is StateLevel.CONSTANT:
                    _expect(
                        sf.theta == frozenset() if r.vacuous else sf.theta == {r.constant_value},
                        "constant with a wrong state set",
                    )


def law_inverse_initial_none(i: Instance):
    for f in (i.f, i.g, i.h):
        if any(not is_signal(u) for u in support(f)):
            _expect(
                boundary_report(inverse(f), Side.INITIAL).state_level is StateLevel.NONE,
                "inverse has initial states though an admissible input has none",
            )


def _transfer(construction: str, *systems):
    def check(i: Instance):
        failed = [r for r in check_transfer_laws(construction, *(getattr(i, s) for s in systems)) if not r.passed]
        _expect(not failed, "; ".join(r.name for r in failed))

    check.__name__ = f"transfer_{construction}"
    return check


LAWS: List[Tuple[str, Callable[[Instance], None]]] = [
    ("dual, inverse and complement are involutions", law_involutions),
    ("dual preserves and reflects inclusion", law_dual_monotone),
    ("inverse preserves inclusion", law_inverse_monotone),
    ("dual and inverse commute", law_dual_inverse_commute),
    ("product inclusion matches factor inclusions", law_product_monotone),
    ("dual and inverse distribute over product", law_product_dual_inverse),
    ("parallel connection is the diagonal product", law_parallel_diagonal),
    ("serial connection is monotone", law_serial_monotone),
    ("dual distributes over serial connection", law_serial_dual),
    ("inverse after f links inputs that share a state", law_serial_inverse_kernel),
    ("inverse reverses serial connection", law_serial_inverse),
    ("serial and product interchange", law_serial_product_interchange),
    ("serial and parallel interchange", law_serial_parallel_interchange),
    ("complement reverses inclusion", law_complement_antitone),
    ("complement commutes with dual and inverse", law_complement_dual_inverse),
    ("complement of product and parallel", law_complement_product_parallel),
    ("complement, intersection and union form a Boolean algebra", law_boolean_algebra),
    ("dual and inverse distribute over intersection and union", law_dual_inverse_lattice),
    ("product and lattice operations", law_product_lattice),
    ("parallel and lattice operations", law_parallel_lattice),
    ("serial and lattice operations", law_serial_lattice),
    ("induced system", law_induced_system),
    ("induced system contains every system below f", law_induced_contains_subsystems),
    ("induced system is maximal", law_induced_maximal),
    ("system closure", law_system_closure),
    ("classification lattice", law_classification_lattice),
    ("inverse of a non-signal input has no initial states", law_inverse_initial_none),
    ("transfer: subsystem", _transfer("subsystem", "f_sub", "f")),
    ("transfer: dual", _transfer("dual", "f")),
    ("transfer: inverse", _transfer("inverse", "f")),
    ("transfer: product", _transfer("product", "f", "fp")),
    ("transfer: serial", _transfer("serial", "h", "f")),
    ("transfer: intersect", _transfer("intersect", "f", "g")),
    ("transfer: union", _transfer("union", "f", "g")),
]


def check_instance(seed: int, index: int, only=None) -> List[Tuple[str, bool, str]]:
    inst = generate_instance(seed, index)
    out = []
    for name, law in LAWS:
        if only is not None and name not in only:
            continue
        try:
            law(inst)
            out.append((name, True, ""))
        except LawFailure as exc:
            out.append((name, False, str(exc)))
    return out


def _check_chunk(args):
    seed, indices, only = args
    return [check_instance(seed, i, only) for i in indices]


@dataclass
class LawTally:
    name: str
    checked: int = 0
    passed: int = 0
    first_failure: Optional[Tuple[int, str]] = None


@dataclass
class SuiteReport:
    seed: int
    iters: int
    completed: int
    tallies: List[LawTally] = field(default_factory=list)
    time_capped: bool = False

    @property
    def ok(self) -> bool:
        return all(t.passed == t.checked for t in self.tallies) and not self.time_capped

    def to_text(self) -> str:
        lines = [f"seed {self.seed} iterations {self.completed}/{self.iters}"]
        if self.time_capped:
            lines.append("stopped early: wall-time cap reached")
        for t in self.tallies:
            status = "ok" if t.passed == t.checked else "FAIL"
            line = f"{status:4} {t.passed}/{t.checked} {t.name}"
            if t.first_failure is not None:
                idx, detail = t.first_failure
                line += f"  [first counterexample: instance {idx}: {detail}]"
            lines.append(line)
        lines.append("all laws hold" if self.ok else "some laws failed")
        return "\n".join(lines) + "\n"

    def to_json(self) -> dict:
        return {
            "seed": self.seed,
            "iters": self.iters,
            "completed": self.completed,
            "time_capped": self.time_capped,
            "ok": self.ok,
            "laws": [
                {
                    "name": t.name,
                    "checked": t.checked,
                    "passed": t.passed,
                    "first_counterexample": None
                    if t.first_failure is None
                    else {"instance": t.first_failure[0], "detail": t.first_failure[1]},
                }
                for t in self.tallies
            ],
        }


def run_suite(seed: int = 1, iters: int = 1000, jobs: int = 1, only=None, max_seconds: Optional[float] = None) -> SuiteReport:
    """Check every law on ``iters`` seeded instances.

    Results are aggregated in instance order, so the report does not depend
    on ``jobs``.  ``max_seconds`` (or the environment variable
    ``PSEUDOSYS_LAWS_MAX_SECONDS``) stops the run after the chunk that
    exceeds the cap; the report then says so and is not ``ok``.
    """
    if max_seconds is None and os.environ.get(TIME_CAP_ENV):
        max_seconds = float(os.environ[TIME_CAP_ENV])
    names = [name for name, _ in LAWS if only is None or name in only]
    tallies = {name: LawTally(name) for name in names}
    start = time.monotonic()
    chunk = 25
    batches = [(seed, range(a, min(a + chunk, iters)), only) for a in range(0, iters, chunk)]
    completed = 0
    capped = False

    def absorb(first_index, results):
        for offset, rows in enumerate(results):
            for name, ok, detail in rows:
                t = tallies[name]
                t.checked += 1
                if ok:
                    t.passed += 1
                elif t.first_failure is None:
                    t.first_failure = (first_index + offset, detail)

    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            for batch, results in zip(batches, pool.map(_check_chunk, batches)):
                absorb(batch[1].start, results)
                completed += len(results)
                if max_seconds is not None and time.monotonic() - start > max_seconds and completed < iters:
                    capped = True
                    break
    else:
        for batch in batches:
            absorb(batch[1].start, _check_chunk(batch))
            completed += len(batch[1])
            if max_seconds is not None and time.monotonic() - start > max_seconds and completed < iters:
                capped = True
                break
    return SuiteReport(seed, iters, completed, [tallies[n] for n in names], capped)


__all__ = [
    "Instance",
    "LAWS",
    "LawTally",
    "SuiteReport",
    "check_instance",
    "generate_instance",
    "random_signal",
    "random_system",
    "random_subsystem",
    "run_suite",
]
