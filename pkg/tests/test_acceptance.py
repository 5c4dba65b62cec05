"""Acceptance suite: one check per numbered criterion.

Each test prints a single pass/fail line (run with -s to see them) and
enforces the stated time budget.  Slices are exhaustive where feasible;
the rank-3 dead-ending slice is sampled with a fixed seed because its
unfiltered form count is in the tens of millions.
"""

import random
import time

import misere
from misere import EnumerationBudget, Outcome, Result, Universe

D = Universe.DICOT
E = Universe.DEAD_ENDING
SEED = misere.DEFAULT_SEED


def report(num, budget_s, label, started, ok):
    elapsed = time.time() - started
    line = "criterion %02d %s (%.2fs): %s" % (
        num, "PASS" if ok else "FAIL", elapsed, label)
    print(line)
    assert ok, line
    assert elapsed < budget_s, "%s exceeded %ss budget" % (line, budget_s)


def test_criterion_01_perfect_murder_outcomes():
    t0 = time.time()
    ok = misere.outcome(misere.murder(0)) == Outcome.N
    for k in range(1, 7):
        ok = ok and misere.outcome(misere.murder(k)) == Outcome.L
    report(1, 1, "perfect-murder outcomes", t0, ok)


def test_criterion_02_strong_outcome_examples():
    t0 = time.time()
    ok = misere.strong_left_outcome(misere.parse("{*|0}")) == Result.R
    ok = ok and misere.strong_left_outcome(misere.parse("{-1|0}")) == Result.L
    for e in misere.enumerate_dead_left_ends(3):
        if e == misere.zero():
            continue
        ok = ok and misere.strong_outcome(e) == Outcome.L
        ok = ok and misere.strong_outcome(misere.conjugate(e)) == Outcome.R
    report(2, 1, "strong-outcome examples and dead-end values", t0, ok)


def test_criterion_03_strong_outcome_oracle():
    t0 = time.time()
    mismatches = 0
    for g in misere.enumerate_games(EnumerationBudget(2, 4, E)):
        if misere.strong_left_outcome(g) != misere.brute_strong_left(g):
            mismatches += 1
        if misere.strong_right_outcome(g) != misere.brute_strong_right(g):
            mismatches += 1
    rank3 = misere.enumerate_games(EnumerationBudget(3, 2, D)) + \
        misere.sample_rank3_games(E, max_options=2, count=300, seed=SEED)
    for g in rank3:
        if misere.strong_left_outcome(g) != misere.brute_strong_left(g, max_options=2):
            mismatches += 1
        if misere.strong_right_outcome(g) != misere.brute_strong_right(g, max_options=2):
            mismatches += 1
    report(3, 60, "strong-outcome formula vs brute force", t0, mismatches == 0)


def test_criterion_04_murder_chain_and_left_ends():
    t0 = time.time()
    rep = misere.scan_murder_theorems(max_index=6, max_end_rank=3)
    report(4, 60, "murder chain and left-end dominance", t0, rep.ok)


def test_criterion_05_subordinate_soundness():
    t0 = time.time()
    violations = 0
    dicots = misere.enumerate_games(EnumerationBudget(2, 4, D))
    for g in dicots:
        for h in dicots:
            if misere.ge(g, h, D) != misere.definitional_ge_check(g, h, D, dicots):
                violations += 1
    des = misere.enumerate_games(EnumerationBudget(2, 4, E))
    for g in des:
        for h in des:
            if misere.ge(g, h, E) and not misere.definitional_ge_check(g, h, E, des):
                violations += 1
    report(5, 600, "subordinate comparison vs definitional check", t0,
           violations == 0)


def test_criterion_06_preorder_laws():
    t0 = time.time()
    violations = 0
    for u in (D, E):
        games = misere.enumerate_games(EnumerationBudget(2, 4, u))
        mat = {}
        for g in games:
            for h in games:
                mat[(g, h)] = misere.ge(g, h, u)
        for g in games:
            if not mat[(g, g)]:
                violations += 1
        rng = random.Random(SEED)
        for _ in range(10_000):
            a, b, c = (games[rng.randrange(len(games))] for _ in range(3))
            if mat[(a, b)] and mat[(b, c)] and not mat[(a, c)]:
                violations += 1
    report(6, 600, "reflexivity and sampled transitivity", t0, violations == 0)


def test_criterion_07_named_identities():
    t0 = time.time()
    zero = misere.zero()
    ok = misere.canonical_form(misere.parse("*+*"), D) == zero
    ok = ok and misere.canonical_form(misere.parse("{-1|1}"), E) == zero
    ok = ok and misere.canonical_form(misere.parse("1+1"), E) == misere.integer(2)
    ok = ok and misere.canonical_form(misere.parse("3+-7"), E) == misere.integer(-4)
    ok = ok and misere.canonical_form(misere.parse("1+-1"), E) == zero
    switch = misere.parse("{0,*|0,*}")
    s = misere.add(switch, misere.conjugate(switch))
    ok = ok and misere.outcome(s) == Outcome.P
    ok = ok and not misere.equivalent(s, zero, D)
    report(7, 1, "named reduction identities", t0, ok)


def test_criterion_08_canonical_form_laws():
    t0 = time.time()
    violations = 0
    for u in (D, E):
        for g in misere.enumerate_games(EnumerationBudget(2, 4, u)):
            c = misere.canonical_form(g, u)
            if not misere.equivalent(c, g, u):
                violations += 1
            if misere.canonical_form(c, u) != c:
                violations += 1
            if misere.rank(c) > misere.rank(g):
                violations += 1
            if not u.contains(c):
                violations += 1
            if misere.canonical_form(misere.conjugate(g), u) != misere.conjugate(c):
                violations += 1
    report(8, 600, "canonical-form laws on both rank-2 slices", t0,
           violations == 0)


def test_criterion_09_uniqueness_census():
    t0 = time.time()
    ok = True
    rep = misere.census(EnumerationBudget(2, 4, D), sample_pairs=None)
    ok = ok and rep.ok and rep.total == 10 and rep.class_count == 9
    rep = misere.census(EnumerationBudget(2, 4, E), sample_pairs=None)
    ok = ok and rep.ok and rep.total == 232 and rep.class_count == 196
    rep = misere.census(EnumerationBudget(3, 2, D), sample_pairs=2000, seed=SEED)
    ok = ok and rep.ok and rep.total == 3026 and rep.class_count == 442
    pool = misere.sample_rank3_games(E, max_options=2, count=300, seed=SEED)
    rep = misere.census(games=pool, universe=E, sample_pairs=2000, seed=SEED)
    ok = ok and rep.ok and rep.total == 300
    report(9, 600, "canonical buckets equal pairwise equivalence", t0, ok)


def test_criterion_10_end_invertibility():
    t0 = time.time()
    rep = misere.scan_end_invertibility(max_rank=3)
    report(10, 60, "dead ends cancel against conjugates", t0,
           rep.ok and rep.checked == 31)


def test_criterion_11_conjugate_property():
    t0 = time.time()
    ok = True
    for u in (D, E):
        rep = misere.scan_conjugate_property(u, max_rank=2, max_options=4)
        ok = ok and rep.ok and rep.counts["impartial_inverse_pairs"] >= 1
    report(11, 600, "inverses are conjugates in both universes", t0, ok)


def test_criterion_12_normal_play_embedding():
    t0 = time.time()
    ok = True
    for u in (D, E):
        rep = misere.scan_normal_embedding(u, max_rank=2, max_options=4)
        ok = ok and rep.ok
    report(12, 600, "misere comparison embeds into normal play", t0, ok)


def test_criterion_13_sum_law_suites():
    t0 = time.time()
    ok = True
    reps = [
        misere.scan_cancellativity(D, samples=1000, max_rank=3, max_options=2),
        misere.scan_cancellativity(E, samples=1000, max_rank=2, max_options=4),
        misere.scan_hand_tying(D, samples=1000, max_rank=3, max_options=2),
        misere.scan_hand_tying(E, samples=1000, max_rank=2, max_options=4),
        misere.scan_weak_avoidance(E, max_rank=2, max_options=4),
        misere.scan_weak_avoidance(D, max_rank=2, max_options=4),
    ]
    counted = 0
    for rep in reps:
        ok = ok and rep.ok
        counted += rep.checked
    ok = ok and all(r.checked >= 1000 for r in reps[:4])
    report(13, 600, "cancellativity, hand-tying, weak avoidance", t0, ok)


def test_criterion_14_notation_round_trip():
    t0 = time.time()
    ok = True
    pool = misere.enumerate_games(EnumerationBudget(2, 4, E)) + \
        misere.enumerate_games(EnumerationBudget(2, 4, D))
    names = ["0", "*"] + [str(n) for n in range(-5, 6) if n] + \
        ["M(%d)" % n for n in range(6)]
    pool += [misere.parse(n) for n in names]
    for g in pool:
        for style in ("named", "brace"):
            if misere.parse(misere.print_game(g, style=style)) != g:
                ok = False
    report(14, 1, "parse and print are mutually inverse", t0, ok)
