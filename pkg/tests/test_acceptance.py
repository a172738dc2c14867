"""Exit criteria.  Each test prints one PASS/FAIL line; run with ``-s`` to see them.

    pytest tests/test_acceptance.py -s
"""
import time
from math import comb, factorial

import pytest

from hsnum import cli
from hsnum.characters import mn_character, transposition_class
from hsnum.hurwitz import (
    brute_force_count, connected_count, cut_and_join_walk, disconnected_count,
    hurwitz_simple, walk_disconnected_count,
)
from hsnum.partitions import content_sum, dimension, partitions_of
from hsnum.severi import Kind, SeveriTriple, classify, dimension_defect, dims, hs_number, \
    is_nonempty, node_count


def report(name, ok, started, budget=None):
    elapsed = time.perf_counter() - started
    within = budget is None or elapsed < budget
    limit = f" (budget {budget:g}s)" if budget else ""
    print(f"\n[{'PASS' if ok and within else 'FAIL'}] {name}: {elapsed:.2f}s{limit}")
    assert ok, name
    assert within, f"{name} took {elapsed:.2f}s, budget {budget}s"


def test_worked_examples_reproduce(capsys):
    started = time.perf_counter()
    expected = {(1, 3, 0): (240, 40), (1, 2, 1): (1, 1), (0, 3, 0): (24, 12),
                (0, 2, 1): (1, 1), (3, 3, 1): (19680, 3280)}
    got = {}
    for t in expected:
        hs = hs_number(t, lambda g, d: hurwitz_simple(g, d, method="all"))
        got[t] = (hs.hurwitz_input.value, hs.value)
    code = cli.main(["verify-paper"])
    capsys.readouterr()
    with capsys.disabled():
        report("worked examples 1-5 exact, verify-paper exits 0",
               got == expected and code == 0, started, budget=5)


def test_example_six_unbendable(capsys):
    started = time.perf_counter()
    kind = classify((3, 4, 0)).kind
    code = cli.main(["hs", "3", "4", "0"])
    capsys.readouterr()
    with capsys.disabled():
        report("(3,4,0) unbendable and hs exits 5",
               kind is Kind.UNBENDABLE and code == cli.EXIT_UNBENDABLE, started)


def test_engine_equivalence(capsys):
    started = time.perf_counter()
    bad = []
    for d in range(1, 5):
        for r in range(11):
            brute = brute_force_count(d, r, require_transitive=False)
            chars = disconnected_count(d, r)
            walk = cut_and_join_walk(d, r)[(1,) * d]
            if not brute == chars == walk:
                bad.append(("disconnected", d, r, brute, chars, walk))
            brute_conn = brute_force_count(d, r, require_transitive=True)
            if brute_conn != connected_count(d, r):
                bad.append(("connected", d, r, brute_conn))
    with capsys.disabled():
        report("engine equivalence d<=4, r<=10", not bad, started, budget=120)


def test_character_identities(capsys):
    started = time.perf_counter()
    ok = all(sum(dimension(lam) ** 2 for lam in partitions_of(n)) == factorial(n)
             for n in range(31))
    for d in range(2, 16):
        tau = transposition_class(d)
        ok = ok and all(content_sum(lam) * dimension(lam)
                        == comb(d, 2) * mn_character(lam, tau) for lam in partitions_of(d))
    with capsys.disabled():
        report("sum f^2 = n! (n<=30); content sum = MN central character (d<=15)",
               ok, started, budget=30)


def test_structural_identities(capsys):
    started = time.perf_counter()
    ok = True
    strongly = set()
    for d in range(1, 11):
        for l in range(31):
            for g in range(61):
                t = SeveriTriple(g, d, l)
                cls = classify(t)
                flags = [d + l >= g + 2, d + l < g + 2 <= d + 2 * l, d + 2 * l < g + 2]
                kinds = [Kind.BENDABLE, Kind.SEMI_BENDABLE, Kind.UNBENDABLE]
                ok &= sum(flags) == 1 and cls.kind is kinds[flags.index(True)]
                ok &= is_nonempty(t) == (node_count(t) >= 0)
                _, wt, p = dims(t)
                ok &= (d - 2) * (d + 2 * l - 3) % 2 == 0 and wt == p - dimension_defect(t)
                if cls.strongly_bendable:
                    strongly.add((g, d, l))
    census = {(g, 2, l) for l in range(31) for g in range(l + 1)} | {(0, 3, 0), (1, 3, 0)}
    with capsys.disabled():
        report("trichotomy, nonempty<=>nodes>=0, dimension chain, strongly-bendable census",
               ok and strongly == census, started)


def test_scale(capsys):
    started = time.perf_counter()
    big = hurwitz_simple(10, 20, method="characters").value
    elapsed_big = time.perf_counter() - started
    mid_chars = connected_count(8, 2 * 8 + 2 * 4 - 2, disconnected_count)
    mid_walk = connected_count(8, 2 * 8 + 2 * 4 - 2, walk_disconnected_count)
    ok = isinstance(big, int) and big > 0 and elapsed_big < 10 and mid_chars == mid_walk
    with capsys.disabled():
        print(f"\n    h_(10,1^20) = {big}")
        report("h_(g=10, d=20) under 10s; character vs walk at (g=4, d=8)", ok, started)


if __name__ == "__main__":
    raise SystemExit(pytest.main([__file__, "-q"]))
