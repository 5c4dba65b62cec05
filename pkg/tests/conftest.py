import hypothesis
from hypothesis import strategies as st

import misere

hypothesis.settings.register_profile(
    "suite", max_examples=60, deadline=None, derandomize=True)
hypothesis.settings.load_profile("suite")


def _wrap(children):
    sides = st.lists(children, max_size=2)
    return st.builds(misere.mk_game, sides, sides)


def games(max_leaves=6):
    """Small arbitrary game trees, not confined to any universe."""
    return st.recursive(st.just(misere.zero()), _wrap, max_leaves=max_leaves)


def dead_ending_games(max_leaves=6):
    return games(max_leaves).filter(misere.is_dead_ending)


def dicot_games(max_leaves=6):
    return games(max_leaves).filter(misere.is_dicot)
