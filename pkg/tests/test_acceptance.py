"""Acceptance gate: every criterion at its stated (exact) tolerance.

Each test prints one PASS/FAIL line per criterion check; run with -s or
-rA to see them.  All asserted values are exact integers.
"""

from majority_game import suites


def _run(records):
    for r in records:
        print(f"ACCEPTANCE {r.name}: {'PASS' if r.ok else 'FAIL'} - {r.detail}")
    failing = [r for r in records if not r.ok]
    assert not failing, "; ".join(f"{r.name}: {r.detail}" for r in failing)


def test_criterion_01_complete_graphs_and_all_ones():
    _run(suites.criterion_1())


def test_criterion_02_paths_including_p15():
    _run(suites.criterion_2(full=True))


def test_criterion_03_even_trees():
    _run(suites.criterion_3())


def test_criterion_04_weighted_paper_values():
    _run(suites.criterion_4())


def test_criterion_05_bound_soundness():
    _run(suites.criterion_5(seed=0))


def test_criterion_06_terminal_relevance_equivalence():
    _run(suites.criterion_6())


def test_criterion_07_adversary_strategies():
    _run(suites.criterion_7(seed=0))


def test_criterion_08_construction():
    _run(suites.criterion_8())


def test_criterion_09_nondeterministic_complexity():
    _run(suites.criterion_9(seed=0))


def test_criterion_10_monotonicity():
    _run(suites.criterion_10(seed=0))
