"""Plain recursive re-implementation used as an independent oracle.

Games are (frozenset, frozenset) pairs of Left and Right option sets,
with no interning, no eager flags, and no shared state beyond functools
caching on the hashable representation.  Tests convert package games to
this form and check that both implementations agree.
"""

from functools import lru_cache

import misere


@lru_cache(maxsize=None)
def reflect(g):
    return (frozenset(reflect(x) for x in misere.left_options(g)),
            frozenset(reflect(x) for x in misere.right_options(g)))


@lru_cache(maxsize=None)
def rank(t):
    l, r = t
    return 1 + max((rank(x) for x in l | r), default=-1)


@lru_cache(maxsize=None)
def conjugate(t):
    l, r = t
    return (frozenset(conjugate(x) for x in r),
            frozenset(conjugate(x) for x in l))


@lru_cache(maxsize=None)
def add(t, s):
    tl, tr = t
    sl, sr = s
    left = {add(x, s) for x in tl} | {add(t, y) for y in sl}
    right = {add(x, s) for x in tr} | {add(t, y) for y in sr}
    return (frozenset(left), frozenset(right))


@lru_cache(maxsize=None)
def left_result(t):
    l, _ = t
    if not l:
        return "L"
    return "L" if any(right_result(x) == "L" for x in l) else "R"


@lru_cache(maxsize=None)
def right_result(t):
    _, r = t
    if not r:
        return "R"
    return "R" if any(left_result(x) == "R" for x in r) else "L"


def outcome(t):
    return left_result(t) + right_result(t)


@lru_cache(maxsize=None)
def normal_left_result(t):
    l, _ = t
    if not l:
        return "R"
    return "L" if any(normal_right_result(x) == "L" for x in l) else "R"


@lru_cache(maxsize=None)
def normal_right_result(t):
    _, r = t
    if not r:
        return "L"
    return "R" if any(normal_left_result(x) == "R" for x in r) else "L"


@lru_cache(maxsize=None)
def is_left_end(t):
    return not t[0]


@lru_cache(maxsize=None)
def is_right_end(t):
    return not t[1]


@lru_cache(maxsize=None)
def is_dead_left_end(t):
    l, r = t
    return not l and all(is_dead_left_end(x) for x in r)


@lru_cache(maxsize=None)
def is_dead_right_end(t):
    l, r = t
    return not r and all(is_dead_right_end(x) for x in l)


@lru_cache(maxsize=None)
def is_dead_ending(t):
    l, r = t
    if not l:
        return is_dead_left_end(t)
    if not r:
        return is_dead_right_end(t)
    return all(is_dead_ending(x) for x in l | r)


@lru_cache(maxsize=None)
def is_dicot(t):
    l, r = t
    if not l and not r:
        return True
    if not l or not r:
        return False
    return all(is_dicot(x) for x in l | r)


@lru_cache(maxsize=None)
def is_impartial(t):
    l, r = t
    return l == r and all(is_impartial(x) for x in l)
