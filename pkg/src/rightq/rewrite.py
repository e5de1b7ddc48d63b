"""Rewriting biword expressions onto the irreducible basis.

Two reduction systems act on the same set of rewritable spots.  A spot
is a double descent: adjacent columns (x y / a b) with x > y and
a >= b.  The plain system "s" replaces such a pair by

    (y x / b a) + (y x / a b) - (x y / b a)      when a > b,
    (y x / a a)                                   when a = b,

and the q-weighted system "sq" by

    (y x / b a) + q (y x / a b) - q^-1 (x y / b a)   when a > b,
    q (y x / a a)                                     when a = b.

Every replacement strictly lowers the measure imv(bottom) + inv(top):
the three branches above drop it by exactly 2, 1, 1 and the swap branch
by 1.  The engine checks the drop on every rewrite and treats a
violation as internal corruption.

reduce() runs a worklist over whole expressions.  Pending reducible
biwords are bucketed by measure value and processed from the highest
bucket down; since every new biword lands strictly lower, each distinct
biword is rewritten at most once per call and its coefficient is final
when its turn comes.  reduce_biword() is the per-biword normal form,
memoized per (system, deterministic strategy).
"""

import random
from dataclasses import dataclass, field
from typing import NamedTuple

from .expressions import Expression
from .laurent import Laurent, ONE, Q, Q_INV
from .words import Biword

DEFAULT_TERM_CAP = 10_000_000

_MINUS_ONE = Laurent.integer(-1)
_MINUS_Q_INV = Laurent.q_power(-1, -1)


class NotADoubleDescent(ValueError):
    """Raised when a rewrite is requested at a position with no double descent."""


class PreconditionViolation(ValueError):
    """Raised when an overlap check is asked for letters that do not overlap."""


class TermCapExceeded(RuntimeError):
    """Raised when an intermediate expression outgrows the configured cap."""


class ReductionSystem:
    """One of the two rule tables, identified by tag "s" or "sq"."""

    __slots__ = ("tag",)

    def __init__(self, tag: str):
        if tag not in ("s", "sq"):
            raise ValueError(f"unknown reduction system {tag!r}")
        self.tag = tag

    def local_terms(
        self, x: int, y: int, a: int, b: int
    ) -> tuple[tuple[tuple[int, int], tuple[int, int], Laurent], ...]:
        """Replacement for the two columns (x y / a b), as
        ((new top pair, new bottom pair, coefficient), ...).

        Requires x > y and a >= b.
        """
        if a == b:
            c = Q if self.tag == "sq" else ONE
            return (((y, x), (a, a), c),)
        if self.tag == "sq":
            return (
                ((y, x), (b, a), ONE),
                ((y, x), (a, b), Q),
                ((x, y), (b, a), _MINUS_Q_INV),
            )
        return (
            ((y, x), (b, a), ONE),
            ((y, x), (a, b), ONE),
            ((x, y), (b, a), _MINUS_ONE),
        )

    def __repr__(self) -> str:
        return f"ReductionSystem({self.tag!r})"


SYSTEM_S = ReductionSystem("s")
SYSTEM_SQ = ReductionSystem("sq")


def system_by_name(name: str) -> ReductionSystem:
    if name == "s":
        return SYSTEM_S
    if name == "sq":
        return SYSTEM_SQ
    raise ValueError(f"unknown reduction system {name!r}")


@dataclass(frozen=True)
class Strategy:
    """Position-picking policy among the double descents of a biword."""

    kind: str  # "leftmost" | "rightmost" | "random"
    seed: int | None = None

    def is_deterministic(self) -> bool:
        return self.kind != "random"


LEFTMOST = Strategy("leftmost")
RIGHTMOST = Strategy("rightmost")


def random_strategy(seed: int) -> Strategy:
    return Strategy("random", seed)


class TraceStep(NamedTuple):
    biword: Biword
    position: int  # 1-based
    rule: str  # "swap" (equal bottom letters) or "split" (three-term rule)


@dataclass
class ReductionReport:
    input: Expression
    normal_form: Expression
    rewrite_steps: int
    max_intermediate_terms: int
    trace: list[TraceStep] | None = None


@dataclass
class ConfluenceReport:
    r: int
    max_len: int
    trials: int
    seed: int
    system: str
    counterexamples: list[Biword] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.counterexamples


_measure_checks = 0


def measure_check_count() -> int:
    """How many rewrites have had their measure drop verified so far."""
    return _measure_checks


def _expand(
    bw: Biword, pos0: int, system: ReductionSystem, parent_level: int
) -> tuple[list[tuple[Biword, Laurent, int]], str]:
    """Apply the local rule at 0-based position pos0.

    Returns ((child biword, rule coefficient, child measure), ...) plus
    the rule kind, verifying the strict measure drop for every child.
    """
    global _measure_checks
    top, bottom = bw.top, bw.bottom
    x, y = top[pos0], top[pos0 + 1]
    a, b = bottom[pos0], bottom[pos0 + 1]
    if not (x > y and a >= b):
        raise NotADoubleDescent(
            f"position {pos0 + 1} of {bw} has no double descent"
        )
    out = []
    for t2, b2, coeff in system.local_terms(x, y, a, b):
        child = Biword._make(
            top[:pos0] + t2 + top[pos0 + 2 :],
            bottom[:pos0] + b2 + bottom[pos0 + 2 :],
        )
        level = child.inv_plus()
        _measure_checks += 1
        if level >= parent_level:
            raise AssertionError(
                f"measure failed to drop: {bw} -> {child} "
                f"({parent_level} -> {level})"
            )
        out.append((child, coeff, level))
    return out, ("swap" if a == b else "split")


def rewrite_at(bw: Biword, position: int, system: ReductionSystem) -> Expression:
    """One rewrite of bw at the given 1-based double-descent position."""
    if not 1 <= position <= len(bw) - 1:
        raise NotADoubleDescent(
            f"position {position} is not interior to {bw}"
        )
    children, _ = _expand(bw, position - 1, system, bw.inv_plus())
    out: dict[Biword, Laurent] = {}
    for child, coeff, _level in children:
        out[child] = coeff
    return Expression._make(out)


def _choose(strategy: Strategy, spots: tuple[int, ...], rng) -> int:
    if strategy.kind == "leftmost":
        return spots[0]
    if strategy.kind == "rightmost":
        return spots[-1]
    return spots[rng.randrange(len(spots))]


def reduce(
    expr: Expression,
    system: ReductionSystem,
    strategy: Strategy = LEFTMOST,
    keep_trace: bool = False,
    term_cap: int = DEFAULT_TERM_CAP,
) -> ReductionReport:
    """Rewrite expr until no support biword has a double descent.

    The worklist drains measure buckets from the top down, so each
    distinct biword is expanded at most once and sees its fully merged
    coefficient.  Rewrite counts and the optional trace are therefore
    deterministic for deterministic strategies.
    """
    work: dict[Biword, Laurent] = dict(expr._terms)
    buckets: dict[int, set[Biword]] = {}
    for bw in work:
        if not bw.is_irreducible():
            buckets.setdefault(bw.inv_plus(), set()).add(bw)
    rng = random.Random(strategy.seed) if strategy.kind == "random" else None
    steps = 0
    max_terms = len(work)
    trace: list[TraceStep] | None = [] if keep_trace else None
    while buckets:
        level = max(buckets)
        for bw in sorted(buckets.pop(level), key=Biword.sort_key):
            c = work.pop(bw, None)
            if c is None:
                continue  # earlier contributions cancelled
            spots = bw.double_descents()
            position = _choose(strategy, spots, rng)
            children, kind = _expand(bw, position - 1, system, level)
            steps += 1
            if trace is not None:
                trace.append(TraceStep(bw, position, kind))
            for child, coeff, child_level in children:
                s = work.get(child)
                s = c * coeff if s is None else s + c * coeff
                if s:
                    work[child] = s
                    if not child.is_irreducible():
                        buckets.setdefault(child_level, set()).add(child)
                else:
                    work.pop(child, None)
            if len(work) > term_cap:
                raise TermCapExceeded(
                    f"intermediate expression exceeded {term_cap} terms"
                )
            if len(work) > max_terms:
                max_terms = len(work)
    return ReductionReport(
        input=expr,
        normal_form=Expression._make(work),
        rewrite_steps=steps,
        max_intermediate_terms=max_terms,
        trace=trace,
    )


_NF_CACHES: dict[tuple[str, str], dict[Biword, dict[Biword, Laurent]]] = {}


def clear_caches() -> None:
    _NF_CACHES.clear()


def _nf_cached(
    bw: Biword,
    system: ReductionSystem,
    take_first: bool,
    cache: dict[Biword, dict[Biword, Laurent]],
) -> dict[Biword, Laurent]:
    hit = cache.get(bw)
    if hit is not None:
        return hit
    spots = bw.double_descents()
    if not spots:
        result = {bw: ONE}
    else:
        position = spots[0] if take_first else spots[-1]
        children, _ = _expand(bw, position - 1, system, bw.inv_plus())
        result = {}
        for child, coeff, _level in children:
            for term, c in _nf_cached(child, system, take_first, cache).items():
                s = result.get(term)
                s = c * coeff if s is None else s + c * coeff
                if s:
                    result[term] = s
                else:
                    del result[term]
    cache[bw] = result
    return result


def reduce_biword(
    bw: Biword, system: ReductionSystem, strategy: Strategy = LEFTMOST
) -> Expression:
    """Normal form of a single biword.

    Deterministic strategies are memoized per (system, strategy); the
    random strategy goes through the unmemoized worklist so that fuzzing
    exercises fresh rewrite paths.
    """
    if not strategy.is_deterministic():
        return reduce(Expression.single(bw), system, strategy).normal_form
    cache = _NF_CACHES.setdefault((system.tag, strategy.kind), {})
    nf = _nf_cached(bw, system, strategy.kind == "leftmost", cache)
    return Expression._make(dict(nf))


def normal_form(expr: Expression, system: ReductionSystem) -> Expression:
    """Normal form of an expression via the memoized per-biword map."""
    acc: dict[Biword, Laurent] = {}
    cache = _NF_CACHES.setdefault((system.tag, "leftmost"), {})
    for bw, c in expr._terms.items():
        for term, k in _nf_cached(bw, system, True, cache).items():
            s = acc.get(term)
            s = k * c if s is None else s + k * c
            if s:
                acc[term] = s
            else:
                del acc[term]
    return Expression._make(acc)


def in_ideal(expr: Expression, system: ReductionSystem) -> bool:
    """Whether expr rewrites to zero, i.e. lies in the defining ideal."""
    return normal_form(expr, system).is_zero()


def check_ambiguity(
    x: int, y: int, z: int, a: int, b: int, c: int, system: ReductionSystem
) -> bool:
    """Resolve the overlap on (x y z / a b c) both ways and compare.

    The two rewrites of the length-3 biword at positions 1 and 2 are
    each reduced to normal form; True means they agree.  Requires
    x > y > z and a >= b >= c.
    """
    if not (x > y > z and a >= b >= c):
        raise PreconditionViolation(
            f"letters ({x},{y},{z})/({a},{b},{c}) do not form an overlap"
        )
    bw = Biword((x, y, z), (a, b, c))
    left = reduce(rewrite_at(bw, 1, system), system).normal_form
    right = reduce(rewrite_at(bw, 2, system), system).normal_form
    return left == right


def check_confluence_fuzz(
    r: int, max_len: int, trials: int, seed: int, system: ReductionSystem
) -> ConfluenceReport:
    """Compare leftmost and seeded-random normal forms on random biwords."""
    rng = random.Random(seed)
    report = ConfluenceReport(r, max_len, trials, seed, system.tag)
    for _ in range(trials):
        n = rng.randint(0, max_len)
        top = tuple(rng.randint(1, r) for _ in range(n))
        bottom = tuple(rng.randint(1, r) for _ in range(n))
        bw = Biword._make(top, bottom)
        canonical = reduce_biword(bw, system)
        alt = reduce(
            Expression.single(bw), system, random_strategy(rng.getrandbits(32))
        ).normal_form
        if canonical != alt:
            report.counterexamples.append(bw)
    return report
