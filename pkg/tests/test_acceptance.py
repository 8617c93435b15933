"""The twelve acceptance criteria, each with its runtime limit.

Every test appends one PASS/FAIL line that is printed in the terminal summary.
Expected values are exact; nothing here is tolerance-based.
"""

import functools
import io
import time
from fractions import Fraction

from conftest import ACCEPTANCE_LINES

from harary.cli import run
from harary.enumeration import TreeClass, count_free_trees, free_trees
from harary.families import broom, path, spur, star
from harary.indices import FormulaId, closed_form, harary_index, perfect_matching_bound_as_printed
from harary.trees import canonical_code, independence_number, matching_number
from harary.verify import CHAINS, REFUTED, chain_check, check_claim, conjecture_scan, extremal_scan

from oracles import centroid_code, labeled_tree_classes_increasing, labeled_tree_classes_prufer


def criterion(number: int, title: str, limit: float):
    def wrap(fn):
        @functools.wraps(fn)
        def test():
            started = time.perf_counter()
            detail = ""
            try:
                detail = fn() or ""
                elapsed = time.perf_counter() - started
                assert elapsed < limit, f"took {elapsed:.1f}s, limit {limit:g}s"
            except AssertionError as e:
                elapsed = time.perf_counter() - started
                ACCEPTANCE_LINES.append(f"[{number:2d}] FAIL  {title} ({elapsed:.1f}s / {limit:g}s): {str(e).splitlines()[0]}")
                raise
            ACCEPTANCE_LINES.append(f"[{number:2d}] PASS  {title} ({elapsed:.1f}s / {limit:g}s) {detail}".rstrip())
        return test
    return wrap


def _confirmed(claim, n_max, n_min=None):
    r = check_claim(claim, n_max=n_max, n_min=n_min)
    bad = [i for i in r.instances if not i["ok"]]
    assert not bad and r.status != REFUTED, f"{claim}: first failure {bad[:1]}"
    return len(r.instances)


@criterion(1, "closed forms equal brute-force H for n <= 50", 5)
def test_acceptance_01_closed_forms():
    checked = 0
    for n in range(1, 51):
        assert closed_form(FormulaId("StarMax", n)) == harary_index(star(n))
        assert closed_form(FormulaId("PathMin", n)) == harary_index(path(n))
        checked += 2
        for m in range(1, n):
            if n - 1 <= 2 * m:
                assert closed_form(FormulaId("Spur", n, m=m)) == harary_index(spur(n, m)), (n, m)
                checked += 1
        for d in range(2, n):
            assert closed_form(FormulaId("Broom", n, delta=d)) == harary_index(broom(n, d)), (n, d)
            checked += 1
    return f"{checked} equalities"


@criterion(2, "path minimizes and star maximizes H uniquely, n <= 14", 30)
def test_acceptance_02_path_star():
    return f"{_confirmed('path-star', 14)} instances"


@criterion(3, "balanced starlike maximizes H for each k and each q, n <= 14", 60)
def test_acceptance_03_pendent_and_degree_two():
    count = _confirmed("pendent-max", 14) + _confirmed("degree-two-max", 14)
    # k = 2 and k = n-1 sit outside the claim's range; the class is a single tree
    for n in range(3, 15):
        assert extremal_scan(TreeClass(n, k=2), "maxH").witnesses == (canonical_code(path(n)),)
        assert extremal_scan(TreeClass(n, k=n - 1), "maxH").witnesses == (canonical_code(star(n)),)
        count += 2
    return f"{count} instances"


@criterion(4, "matching/independence bounds with equality exactly on spurs, n <= 12", 30)
def test_acceptance_04_matching_independence():
    checked = 0
    for n in range(2, 13):
        for t in free_trees(n):
            h, beta, alpha = harary_index(t), matching_number(t), independence_number(t)
            mb = closed_form(FormulaId("MatchingBound", n, beta=beta))
            ib = closed_form(FormulaId("IndependenceBound", n, alpha=alpha))
            code = canonical_code(t)
            assert h <= mb and h <= ib, code
            assert (h == mb) == (code == canonical_code(spur(n, n - beta))), code
            assert (h == ib) == (code == canonical_code(spur(n, alpha))), code
            checked += 1
    assert closed_form(FormulaId("PerfectMatchingBound", 6)) == Fraction(109, 12) == harary_index(spur(6, 3))
    assert perfect_matching_bound_as_printed(6) != Fraction(109, 12)
    _confirmed("matching-max", 12)
    _confirmed("independence-max", 12)
    _confirmed("perfect-matching", 12)
    return f"{checked} trees"


@criterion(5, "caterpillar C(n,d,floor(d/2)) maximizes H per diameter and radius, n <= 12", 30)
def test_acceptance_05_diameter_radius():
    return f"{_confirmed('diameter-max', 12) + _confirmed('radius-max', 12)} instances"


@criterion(6, "broom minimizes H per max degree (n <= 12); chains strict for n <= 50", 30)
def test_acceptance_06_degree_and_chains():
    count = _confirmed("degree-min", 12)
    for n in range(5, 51):
        for chain in CHAINS:
            r = chain_check(chain, n)
            assert r.status != REFUTED, (chain, n, r.counterexample)
            count += 1
    return f"{count} instances and chains"


@criterion(7, "second maximum is C(n,3,1), second minimum is B(n,3), n <= 14", 60)
def test_acceptance_07_second_order():
    return f"{_confirmed('second-max', 14) + _confirmed('second-min', 14)} instances"


@criterion(8, "transformation monotonicity, attachment order, majorization, starlike extremes", 120)
def test_acceptance_08_transformations():
    count = 0
    for claim in ("delta-increase", "path-shift", "majorization", "starlike-order"):
        count += _confirmed(claim, 12 if claim in ("delta-increase", "path-shift") else 14)
    count += _confirmed("attach-order", 6)
    return f"{count} instances"


@criterion(9, "duality argmax H = argmin W and argmin H = argmax W in every class, n <= 12", 120)
def test_acceptance_09_duality():
    r = check_claim("duality", n_max=12)
    sides = {}
    for inst in r.instances:
        ok, total = sides.get(inst["objective"], (0, 0))
        sides[inst["objective"]] = (ok + inst["ok"], total + 1)
    summary = ", ".join(f"{k} holds on {ok}/{total}" for k, (ok, total) in sorted(sides.items()))
    cx = r.counterexample or {}
    refuted = r.status == REFUTED
    assert not refuted, (
        f"{summary}; first counterexample {cx.get('instance')} {cx.get('objective')}: "
        f"{cx.get('witnesses')} vs {cx.get('dual_witnesses')}"
    )
    return summary


@criterion(10, "Volkmann tree maximizes H for max degree 3 and 4, n <= 18", 300)
def test_acceptance_10_conjecture():
    count = 0
    for delta in (3, 4):
        r = conjecture_scan(18, delta)
        bad = [i for i in r.instances if not i["ok"]]
        assert not bad, bad[:1]
        count += len(r.instances)
    return f"{count} orders"


@criterion(11, "count_free_trees matches labeled enumeration with dedup, n <= 10", 60)
def test_acceptance_11_enumeration():
    expected = [1, 1, 1, 2, 3, 6, 11, 23, 47, 106]
    for n in range(1, 11):
        classes = labeled_tree_classes_prufer(n) if n <= 8 else labeled_tree_classes_increasing(n)
        assert len(classes) == count_free_trees(n) == expected[n - 1], n
        assert classes == {centroid_code(t.n, t.edges) for t in free_trees(n)}, n
    return "n = 1..10"


def _cli(argv):
    out, err = io.StringIO(), io.StringIO()
    code = run(argv, out, err)
    return code, out.getvalue()


@criterion(12, "verify/enumerate output byte-identical for 1, 2 and 8 workers", 180)
def test_acceptance_12_determinism():
    commands = [
        ["verify", "--claim", "all"],
        ["verify", "--claim", "all", "--emit", "csv"],
        ["conjecture", "--n-max", "14"],
        ["enumerate", "--n", "12", "--filter", "k=5", "--emit", "edges"],
        ["enumerate", "--n", "13", "--filter", "diameter=6", "--filter", "delta=3"],
    ]
    for argv in commands:
        base = _cli(argv + ["--workers", "1"])
        for w in ("2", "8"):
            assert _cli(argv + ["--workers", w]) == base, f"{' '.join(argv)} differs at --workers {w}"
    return f"{len(commands)} commands"
