"""Who wins: misère and normal results, outcomes, and strong outcomes.

Results are per-player: ``left_result(g)`` says who wins when Left moves
first, ``right_result(g)`` when Right moves first, with L > R as values.
Under the misère convention a player with no move wins; under the normal
convention a player with no move loses.  The pair of results folds into
one of four outcomes L, N, P, R, partially ordered by how good they are
for Left (L on top, R at the bottom, N and P incomparable).

Strong outcomes refine misère outcomes for dead-ending games: they ask
who wins when an arbitrary dead end is placed alongside the game.  The
pessimal attack for each player is realized by a murder of rank one less
than the game, which keeps the computation finite.
"""

from __future__ import annotations

import enum

from . import core
from .core import DomainError, GameId, Universe


class Result(enum.IntEnum):
    R = 0
    L = 1

    def __str__(self):
        return self.name


class Outcome(enum.Enum):
    L = (Result.L, Result.L)
    N = (Result.L, Result.R)
    P = (Result.R, Result.L)
    R = (Result.R, Result.R)

    def __str__(self):
        return self.name

    @property
    def left(self) -> Result:
        return self.value[0]

    @property
    def right(self) -> Result:
        return self.value[1]


def outcome_ge(a: Outcome, b: Outcome) -> bool:
    """Partial order on outcomes: at least as good for Left, both ways round."""
    return a.left >= b.left and a.right >= b.right


_MIS_L: dict = {}
_MIS_R: dict = {}


def left_result(g: GameId) -> Result:
    """Winner of g under misère play when Left moves first."""
    r = _MIS_L.get(g)
    if r is None:
        opts = core.left_options(g)
        if not opts:
            r = Result.L
        else:
            r = max(right_result(x) for x in opts)
        _MIS_L[g] = r
    return r


def right_result(g: GameId) -> Result:
    """Winner of g under misère play when Right moves first."""
    r = _MIS_R.get(g)
    if r is None:
        opts = core.right_options(g)
        if not opts:
            r = Result.R
        else:
            r = min(left_result(x) for x in opts)
        _MIS_R[g] = r
    return r


def outcome(g: GameId) -> Outcome:
    """Misère outcome of g."""
    return Outcome((left_result(g), right_result(g)))


_NOR_L: dict = {}
_NOR_R: dict = {}


def normal_left_result(g: GameId) -> Result:
    """Winner of g under normal play when Left moves first."""
    r = _NOR_L.get(g)
    if r is None:
        opts = core.left_options(g)
        if not opts:
            r = Result.R
        else:
            r = max(normal_right_result(x) for x in opts)
        _NOR_L[g] = r
    return r


def normal_right_result(g: GameId) -> Result:
    """Winner of g under normal play when Right moves first."""
    r = _NOR_R.get(g)
    if r is None:
        opts = core.right_options(g)
        if not opts:
            r = Result.L
        else:
            r = min(normal_left_result(x) for x in opts)
        _NOR_R[g] = r
    return r


def normal_outcome(g: GameId) -> Outcome:
    """Normal-play outcome of g."""
    return Outcome((normal_left_result(g), normal_right_result(g)))


_STRONG_L: dict = {}
_STRONG_R: dict = {}


def strong_left_outcome(g: GameId) -> Result:
    """Worst case for Left moving first in g plus any dead Left-end.

    Defined for dead-ending games only.  For the empty game the value is
    L; otherwise it is the minimum of the plain Left result and the Left
    result with a murder one rank below g placed alongside.
    """
    r = _STRONG_L.get(g)
    if r is None:
        if not core.is_dead_ending(g):
            raise DomainError("strong outcomes require a dead-ending game")
        k = core.rank(g)
        if k == 0:
            r = Result.L
        else:
            r = min(left_result(g),
                    left_result(core.add(g, core.murder(k - 1))))
        _STRONG_L[g] = r
    return r


def strong_right_outcome(g: GameId) -> Result:
    """Best case for Right moving first in g plus any dead Right-end."""
    r = _STRONG_R.get(g)
    if r is None:
        if not core.is_dead_ending(g):
            raise DomainError("strong outcomes require a dead-ending game")
        k = core.rank(g)
        if k == 0:
            r = Result.R
        else:
            attack = core.conjugate(core.murder(k - 1))
            r = max(right_result(g), right_result(core.add(g, attack)))
        _STRONG_R[g] = r
    return r


def strong_outcome(g: GameId) -> Outcome:
    """Strong misère outcome of a dead-ending game."""
    return Outcome((strong_left_outcome(g), strong_right_outcome(g)))


def base_outcome(g: GameId, u: Universe) -> Outcome:
    """The outcome a universe-relative comparison starts from."""
    if u is Universe.DICOT:
        return outcome(g)
    return strong_outcome(g)
