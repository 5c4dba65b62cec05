"""Universe-relative comparison of games.

``ge(g, h, u)`` decides whether g is at least as good as h for Left in
every sum context drawn from the universe u, without quantifying over
contexts: it checks the base outcomes (plain outcomes for dicots, strong
outcomes for dead-ending games) and then a pair of maintenance conditions
on the options, recursing on strictly smaller total rank.

``definitional_ge_check`` is the quantifier made literal over a finite
test set; it exists so the subordinate test can be cross-validated and so
games outside the universe can still be probed.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Optional

from . import core, outcomes
from .core import DomainError, GameId, Universe
from .outcomes import Result, outcome, outcome_ge

_GE: dict = {}


def ge(g: GameId, h: GameId, u: Universe) -> bool:
    """Does g >= h relative to the universe u?  Both games must lie in u."""
    core.require_member(g, u)
    core.require_member(h, u)
    return _ge(g, h, u)


def _ge(g: GameId, h: GameId, u: Universe) -> bool:
    if g == h:
        return True
    key = (g, h, u)
    r = _GE.get(key)
    if r is None:
        r = _ge_compute(g, h, u)
        _GE[key] = r
    return r


def _ge_compute(g: GameId, h: GameId, u: Universe) -> bool:
    if not outcome_ge(outcomes.base_outcome(g, u), outcomes.base_outcome(h, u)):
        return False
    gl = core.left_options(g)
    gr = core.right_options(g)
    hl = core.left_options(h)
    hr = core.right_options(h)
    # Left must keep up: every Left option of h is matched by a Left
    # option of g, unless h's move can be answered through its own
    # Right responses back below g.
    for x in hl:
        if any(_ge(a, x, u) for a in gl):
            continue
        if any(_ge(g, b, u) for b in core.right_options(x)):
            continue
        return False
    # Right must not gain: symmetric condition on g's Right options.
    for y in gr:
        if any(_ge(y, c, u) for c in hr):
            continue
        if any(_ge(d, h, u) for d in core.left_options(y)):
            continue
        return False
    return True


def equivalent(g: GameId, h: GameId, u: Universe) -> bool:
    """Indistinguishable by every context in u: ge both ways."""
    return ge(g, h, u) and ge(h, g, u)


def ge_normal(g: GameId, h: GameId) -> bool:
    """Normal-play comparison: Left playing second wins g plus conjugate(h)."""
    diff = core.add(g, core.conjugate(h))
    return outcomes.normal_right_result(diff) == Result.L


def definitional_ge_check(g: GameId, h: GameId, u: Universe,
                          test_set: Iterable[GameId]) -> bool:
    """Check outcome(g + x) >= outcome(h + x) for every x in test_set.

    Every test game must belong to u; g and h themselves may lie outside
    it.  This is only as strong as the test set is rich.
    """
    for x in test_set:
        core.require_member(x, u)
        if not outcome_ge(outcome(core.add(g, x)), outcome(core.add(h, x))):
            return False
    return True


@dataclass(frozen=True)
class Distinguisher:
    """Result of a bounded search for a context telling two games apart.

    verdict is one of "holds" (equivalence confirmed), "fails-with-witness"
    (witness is a game x with outcome(g + x) != outcome(h + x)), or
    "inconclusive" (no witness within the budget, equivalence not
    confirmed).
    """

    verdict: str
    witness: Optional[GameId]
    budget: tuple

    HOLDS = "holds"
    FAILS = "fails-with-witness"
    INCONCLUSIVE = "inconclusive"


def distinguish(g: GameId, h: GameId, u: Universe,
                max_rank: int = 2, max_options: int = 4) -> Distinguisher:
    """Search u, by increasing rank in structural order, for a witness
    context whose sum changes the outcome; fall back on the subordinate
    test when none exists within the budget."""
    core.require_member(g, u)
    core.require_member(h, u)
    from . import lab

    budget = (max_rank, max_options)
    slice_budget = lab.EnumerationBudget(max_rank=max_rank,
                                         max_options=max_options, universe=u)
    for x in lab.enumerate_games(slice_budget):
        if outcome(core.add(g, x)) != outcome(core.add(h, x)):
            return Distinguisher(Distinguisher.FAILS, x, budget)
    if equivalent(g, h, u):
        return Distinguisher(Distinguisher.HOLDS, None, budget)
    return Distinguisher(Distinguisher.INCONCLUSIVE, None, budget)
