"""Reduction to the unique simplest form of an equivalence class.

Three families of rewrites preserve equivalence within a universe:

* domination: an option at least as good as a sibling (for the owning
  player) makes the sibling redundant;
* open reversibility: an option the opponent can profitably revert
  through is bypassed, splicing in the reverting position's options;
* end reversibility: an option the opponent can revert through a dead
  end cannot be bypassed (there is nothing to splice in) and is instead
  removed, replaced by a star, or replaced by a one-move end, depending
  on the universe.

``canonical_form`` applies these bottom-up to a fixpoint.  Equivalent
games in the same universe reach the same interned id, so equivalence of
canonicalized games is id equality.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from . import core, ordering, outcomes
from .core import DomainError, GameId, Universe
from .outcomes import Result

RULE_DOMINATION = "domination"
RULE_OPEN_REVERSIBLE = "open-reversible"
RULE_END_REMOVE = "end-remove"
RULE_END_PAIR_REMOVE = "end-pair-remove"
RULE_SUBSTITUTE_STAR = "substitute-star"
RULE_STAR_PAIR_TO_ZERO = "star-pair-to-zero"
RULE_SUBSTITUTE_MURDER = "substitute-murder"


@dataclass(frozen=True)
class ReductionStep:
    rule: str
    side: str
    before: GameId
    after: GameId


@dataclass(frozen=True)
class ReversibleOption:
    """An option A the opponent can revert through B at no loss."""

    option: GameId
    via: GameId
    open: bool

    @property
    def end(self) -> bool:
        return not self.open


def _keep_maximal(opts, u: Universe):
    """Structurally-least representatives of the maximal options."""
    kept = []
    for a in opts:
        if any(ordering._ge(b, a, u) for b in kept):
            continue
        kept = [b for b in kept if not ordering._ge(a, b, u)]
        kept.append(a)
    return kept


def _keep_minimal(opts, u: Universe):
    kept = []
    for a in opts:
        if any(ordering._ge(a, b, u) for b in kept):
            continue
        kept = [b for b in kept if not ordering._ge(b, a, u)]
        kept.append(a)
    return kept


def remove_dominated(g: GameId, u: Universe) -> GameId:
    """Drop every option some distinct remaining sibling dominates.

    Mutually equivalent options collapse to the structurally least one.
    """
    core.require_member(g, u)
    left = _keep_maximal(core.left_options(g), u)
    right = _keep_minimal(core.right_options(g), u)
    return core.mk_game(left, right)


def _reversing_options(g: GameId, a: GameId, side: str, u: Universe):
    """All B through which the option a of g reverts, in structural order."""
    if side == "L":
        return [b for b in core.right_options(a) if ordering._ge(g, b, u)]
    return [b for b in core.left_options(a) if ordering._ge(b, g, u)]


def find_reversible(g: GameId, side: str, u: Universe) -> Optional[ReversibleOption]:
    """First reversible option of g on the given side, if any.

    The option is open when the reverting position still has moves for
    the owning player to splice in, and closed (end) when the reverting
    position is a dead end for that player.
    """
    core.require_member(g, u)
    if side not in ("L", "R"):
        raise ValueError("side must be 'L' or 'R'")
    opts = core.left_options(g) if side == "L" else core.right_options(g)
    for a in opts:
        for b in _reversing_options(g, a, side, u):
            replacement = core.left_options(b) if side == "L" else core.right_options(b)
            return ReversibleOption(a, b, bool(replacement))
    return None


def _splice(g: GameId, a: GameId, b: GameId, side: str) -> GameId:
    if side == "L":
        left = [x for x in core.left_options(g) if x != a] + \
            list(core.left_options(b))
        return core.mk_game(left, core.right_options(g))
    right = [x for x in core.right_options(g) if x != a] + \
        list(core.right_options(b))
    return core.mk_game(core.left_options(g), right)


def bypass_open_reversible(g: GameId, a: GameId, b: GameId, u: Universe) -> GameId:
    """Replace the reversible option a by the relevant options of b.

    An option can sit on both sides of a game, so the pair is matched
    against both readings and the one that is genuinely open wins.
    """
    core.require_member(g, u)
    left_reverts = a in core.left_options(g) and b in core.right_options(a) \
        and ordering._ge(g, b, u)
    right_reverts = a in core.right_options(g) and b in core.left_options(a) \
        and ordering._ge(b, g, u)
    if left_reverts and core.left_options(b):
        return _splice(g, a, b, "L")
    if right_reverts and core.right_options(b):
        return _splice(g, a, b, "R")
    if left_reverts or right_reverts:
        raise DomainError("option reverts through an end; cannot bypass")
    raise DomainError("not an open reversible option of the game")


def is_fundamental_left(g: GameId, a: GameId) -> bool:
    """Is a the Left option whose removal costs Left the strong outcome?

    Removing the only Left option leaves a Left-end, which Left moving
    first always wins with any dead Left-end alongside, so a lone option
    is never fundamental.
    """
    core.require_member(g, Universe.DEAD_ENDING)
    left = core.left_options(g)
    if a not in left:
        raise ValueError("not a Left option of the game")
    if len(left) == 1:
        return False
    if outcomes.strong_left_outcome(g) != Result.L:
        return False
    removed = core.mk_game([x for x in left if x != a], core.right_options(g))
    return outcomes.strong_left_outcome(removed) == Result.R


def is_fundamental_right(g: GameId, a: GameId) -> bool:
    """Mirror of is_fundamental_left for Right options."""
    core.require_member(g, Universe.DEAD_ENDING)
    right = core.right_options(g)
    if a not in right:
        raise ValueError("not a Right option of the game")
    if len(right) == 1:
        return False
    if outcomes.strong_right_outcome(g) != Result.R:
        return False
    removed = core.mk_game(core.left_options(g), [x for x in right if x != a])
    return outcomes.strong_right_outcome(removed) == Result.L


def minimal_murder_index(g: GameId) -> int:
    """Least n with g >= murder(n) in the dead-ending universe.

    Defined whenever g is a Left-end or has a Left option reverting
    through a dead Left-end; in either case the index is bounded by the
    rank of that end.
    """
    core.require_member(g, Universe.DEAD_ENDING)
    bound = None
    for a in core.left_options(g):
        for b in _reversing_options(g, a, "L", Universe.DEAD_ENDING):
            if core.is_left_end(b):
                r = core.rank(b)
                bound = r if bound is None else min(bound, r)
    if bound is None:
        if core.is_left_end(g):
            bound = core.rank(g)
        else:
            raise DomainError(
                "game has no Left option reverting through a Left-end")
    for n in range(bound + 1):
        if ordering._ge(g, core.murder(n), Universe.DEAD_ENDING):
            return n
    raise RuntimeError("murder index scan exceeded its bound; every dead "
                       "Left end compares against a murder of index <= rank")


def _end_reversible_left(g: GameId, u: Universe):
    """Left options reverting through an end the opponent may leave Left in."""
    hits = []
    for a in core.left_options(g):
        for b in _reversing_options(g, a, "L", u):
            if core.is_left_end(b):
                hits.append((a, b))
                break
    return hits


def _end_reversible_right(g: GameId, u: Universe):
    hits = []
    for a in core.right_options(g):
        for b in _reversing_options(g, a, "R", u):
            if core.is_right_end(b):
                hits.append((a, b))
                break
    return hits


def _has_other_winning_left(g: GameId, a: GameId) -> bool:
    return any(outcomes.right_result(x) == Result.L
               for x in core.left_options(g) if x != a)


def _has_other_winning_right(g: GameId, a: GameId) -> bool:
    return any(outcomes.left_result(x) == Result.R
               for x in core.right_options(g) if x != a)


def reduce_end_reversible_dicot(g: GameId) -> GameId:
    """One end-reversibility rewrite in the dicot universe, or g itself.

    A pair of lone reversible options collapses the game to zero.
    Otherwise a reversible option is removed when its owner still has a
    winning move among the siblings, and replaced by star when it was
    the only winning move.
    """
    u = Universe.DICOT
    core.require_member(g, u)
    left_hits = _end_reversible_left(g, u)
    right_hits = _end_reversible_right(g, u)
    gl = core.left_options(g)
    gr = core.right_options(g)
    if len(gl) == 1 and len(gr) == 1 and left_hits and right_hits:
        return core.zero()
    star = core.star()
    for a, _ in left_hits:
        if _has_other_winning_left(g, a):
            return core.mk_game([x for x in gl if x != a], gr)
        if a != star:
            return core.mk_game([x for x in gl if x != a] + [star], gr)
    for a, _ in right_hits:
        if _has_other_winning_right(g, a):
            return core.mk_game(gl, [x for x in gr if x != a])
        if a != star:
            return core.mk_game(gl, [x for x in gr if x != a] + [star])
    return g


def reduce_end_reversible_dead_ending(g: GameId) -> GameId:
    """One end-reversibility rewrite in the dead-ending universe.

    In priority order: a pair of lone reversible options collapses to
    zero in a single step; a non-fundamental reversible option is
    removed when the result stays dead-ending; otherwise the option is
    replaced by the one-move end over the least murder the game covers.
    """
    u = Universe.DEAD_ENDING
    core.require_member(g, u)
    left_hits = _end_reversible_left(g, u)
    right_hits = _end_reversible_right(g, u)
    gl = core.left_options(g)
    gr = core.right_options(g)
    if len(gl) == 1 and len(gr) == 1 and left_hits and right_hits:
        return core.zero()
    for a, _ in left_hits:
        removed = core.mk_game([x for x in gl if x != a], gr)
        if core.is_dead_ending(removed) and not is_fundamental_left(g, a):
            return removed
        target = core.mk_game((), (core.murder(minimal_murder_index(g)),))
        if a != target:
            return core.mk_game([x for x in gl if x != a] + [target], gr)
    for a, _ in right_hits:
        removed = core.mk_game(gl, [x for x in gr if x != a])
        if core.is_dead_ending(removed) and not is_fundamental_right(g, a):
            return removed
        n = minimal_murder_index(core.conjugate(g))
        target = core.mk_game((core.conjugate(core.murder(n)),), ())
        if a != target:
            return core.mk_game(gl, [x for x in gr if x != a] + [target])
    return g


_PASS_CAP = 1000


def _reduce_once(g: GameId, u: Universe, trace) -> GameId:
    """Apply the first applicable rewrite at the top level, if any."""
    left_kept = _keep_maximal(core.left_options(g), u)
    if len(left_kept) < len(core.left_options(g)):
        nxt = core.mk_game(left_kept, core.right_options(g))
        if trace is not None:
            trace.append(ReductionStep(RULE_DOMINATION, "L", g, nxt))
        return nxt
    right_kept = _keep_minimal(core.right_options(g), u)
    if len(right_kept) < len(core.right_options(g)):
        nxt = core.mk_game(core.left_options(g), right_kept)
        if trace is not None:
            trace.append(ReductionStep(RULE_DOMINATION, "R", g, nxt))
        return nxt
    for side in ("L", "R"):
        opts = core.left_options(g) if side == "L" else core.right_options(g)
        for a in opts:
            for b in _reversing_options(g, a, side, u):
                repl = core.left_options(b) if side == "L" else core.right_options(b)
                if repl:
                    nxt = _splice(g, a, b, side)
                    if trace is not None:
                        trace.append(ReductionStep(
                            RULE_OPEN_REVERSIBLE, side, g, nxt))
                    return nxt
    if u is Universe.DICOT:
        nxt = reduce_end_reversible_dicot(g)
    else:
        nxt = reduce_end_reversible_dead_ending(g)
    if nxt != g and trace is not None:
        trace.append(ReductionStep(_end_rule_name(g, nxt, u), _end_rule_side(g, nxt), g, nxt))
    return nxt


def _end_rule_name(before: GameId, after: GameId, u: Universe) -> str:
    if after == core.zero() and core.rank(before) > 0:
        return RULE_STAR_PAIR_TO_ZERO if u is Universe.DICOT else RULE_END_PAIR_REMOVE
    bl, br = core.left_options(before), core.right_options(before)
    al, ar = core.left_options(after), core.right_options(after)
    if len(al) < len(bl) or len(ar) < len(br):
        return RULE_END_REMOVE
    return RULE_SUBSTITUTE_STAR if u is Universe.DICOT else RULE_SUBSTITUTE_MURDER


def _end_rule_side(before: GameId, after: GameId) -> str:
    if after == core.zero():
        return "LR"
    if core.left_options(before) != core.left_options(after):
        return "L"
    return "R"


_CANON: dict = {}


def canonical_form(g: GameId, u: Universe) -> GameId:
    """The unique reduced game equivalent to g within u."""
    core.require_member(g, u)
    return _canonical(g, u, None)


def canonical_form_traced(g: GameId, u: Universe):
    """Canonical form plus the rewrite steps performed, bottom-up.

    Tracing recomputes the reduction instead of consulting the cache, so
    the step list is complete for this game even in a warm process.
    """
    core.require_member(g, u)
    trace: list = []
    return _canonical(g, u, trace), trace


def _canonical(g: GameId, u: Universe, trace) -> GameId:
    key = (g, u)
    if trace is None:
        hit = _CANON.get(key)
        if hit is not None:
            return hit
    left = [_canonical(x, u, trace) for x in core.left_options(g)]
    right = [_canonical(x, u, trace) for x in core.right_options(g)]
    cur = core.mk_game(left, right)
    for _ in range(_PASS_CAP):
        nxt = _reduce_once(cur, u, trace)
        if nxt == cur:
            break
        cur = nxt
    else:
        raise RuntimeError("reduction did not reach a fixpoint within %d passes"
                           % _PASS_CAP)
    _CANON[key] = cur
    _CANON[(cur, u)] = cur
    return cur


def step_to_doc(step: ReductionStep) -> dict:
    """Serialize a reduction step with games in interchange form."""
    from . import notation

    return {
        "rule": step.rule,
        "side": step.side,
        "before": notation.to_interchange(step.before),
        "after": notation.to_interchange(step.after),
    }
