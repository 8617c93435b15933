import csv
import io
import json
from fractions import Fraction

import pytest

from harary.enumeration import TreeClass, free_trees
from harary.errors import EmptyClass, InconsistentClass, OutOfRange, UnknownClaim
from harary.families import balanced_starlike, broom, path, pinned_caterpillar, star, starlike, volkmann
from harary.indices import harary_fast
from harary.trees import canonical_code, metric_profile
from harary.verify import (
    CLAIMS,
    CONFIRMED,
    CSV_COLUMNS,
    ERRATA,
    REFUTED,
    ScanSpec,
    attach_order_check,
    chain_check,
    chain_members,
    check_claim,
    conjecture_scan,
    duality_check,
    extremal_scan,
    majorization_check,
    multi_scan,
    reports_to_csv,
    reports_to_json,
)

from oracles import brute_harary


def code(t):
    return canonical_code(t)


# -- extremal scans ---------------------------------------------------------


def test_scan_pendent_3_order_7():
    r = extremal_scan(TreeClass(7, k=3), "maxH")
    assert r.witnesses == (code(balanced_starlike(7, 3)),) and r.unique
    assert r.optimum == brute_harary(starlike((2, 2, 2)))


def test_scan_degree_3_order_7_min():
    r = extremal_scan(TreeClass(7, delta=3), "minH")
    assert r.witnesses == (code(broom(7, 3)),)
    assert r.optimum == Fraction(689, 60)


def test_scan_order_6_max():
    r = extremal_scan(TreeClass(6), "maxH")
    assert r.witnesses == (code(star(6)),) and r.optimum == 10 and r.scanned == 6


def test_scan_wiener_objectives():
    assert extremal_scan(TreeClass(5), "maxW").optimum == 20
    assert extremal_scan(TreeClass(5), "minW").witnesses == (code(star(5)),)


def test_scan_ties_keep_every_witness():
    r = extremal_scan(TreeClass(7, diameter=4), "maxW")
    assert r.witnesses == ("((()())(()()))", "((())(())(()))") and not r.unique


def test_scan_empty_class():
    with pytest.raises(EmptyClass):
        extremal_scan(TreeClass(6, diameter=2, q=1), "maxH")


def test_scan_inconsistent_class():
    with pytest.raises(InconsistentClass):
        extremal_scan(TreeClass(6, k=9), "maxH")


def test_scan_unknown_objective():
    with pytest.raises(OutOfRange):
        extremal_scan(TreeClass(6), "maxX")


def test_multi_scan_depth_two():
    [(ranked, count)] = multi_scan(7, [ScanSpec(TreeClass(7), "minH", depth=2)])
    assert count == 11
    (v1, w1), (v2, w2) = ranked
    assert (v1, w1) == (Fraction(223, 20), (code(path(7)),))
    assert (v2, w2) == (Fraction(689, 60), (code(broom(7, 3)),))


def test_scan_results_independent_of_workers():
    specs = [ScanSpec(TreeClass(11, k=k), o) for k in (3, 5) for o in ("maxH", "minH", "maxW", "minW")]
    assert multi_scan(11, specs, workers=1) == multi_scan(11, specs, workers=2)


def test_scan_agrees_with_brute_force():
    for n in range(2, 9):
        for d in range(1 if n == 2 else 2, n):
            members = [t for t in free_trees(n) if metric_profile(t).diameter == d]
            best = max(brute_harary(t) for t in members)
            r = extremal_scan(TreeClass(n, diameter=d), "maxH")
            assert r.optimum == best
            assert set(r.witnesses) == {code(t) for t in members if brute_harary(t) == best}


# -- claims -----------------------------------------------------------------


def test_pendent_max_confirmed_to_12():
    r = check_claim("pendent-max", n_max=12)
    assert r.status == CONFIRMED and r.counterexample is None
    ks = {inst["instance"] for inst in r.instances}
    assert "n=12,k=10" in ks and "n=12,k=11" not in ks


def test_diameter_max_uses_floor_half_diameter():
    r = check_claim("diameter-max", n_max=12)
    assert r.status == ERRATA
    assert all(inst["ok"] for inst in r.instances)
    assert any(not inst["floor_n_half_reading_holds"] for inst in r.instances)


def test_second_min_order_7():
    r = check_claim("second-min", n_min=7, n_max=7)
    [inst] = r.instances
    assert inst["first"]["optimum"] == "223/20" and inst["optimum"] == "689/60"
    assert inst["witnesses"] == [code(broom(7, 3))]


def test_second_max_is_caterpillar():
    r = check_claim("second-max", n_max=10)
    assert r.status == CONFIRMED
    assert r.instances[-1]["witnesses"] == [code(pinned_caterpillar(10, 3, 1))]


def test_perfect_matching_errata():
    r = check_claim("perfect-matching", n_max=8)
    assert r.status == ERRATA
    six = next(i for i in r.instances if i["instance"] == "n=6,beta=3")
    assert six["optimum"] == "109/12" and six["printed_bound"] == "218/1"


@pytest.mark.parametrize("claim", sorted(set(CLAIMS) - {"duality"}))
def test_every_other_claim_holds_at_small_n(claim):
    _, lo, hi = CLAIMS[claim]
    r = check_claim(claim, n_max=min(hi, 9))
    assert r.status in (CONFIRMED, ERRATA), r.counterexample


def test_duality_refuted_with_counterexample():
    r = check_claim("duality", n_max=8)
    assert r.status == REFUTED
    cx = r.counterexample
    assert cx["instance"] == "n=7,diameter=4" and cx["objective"] == "minH=maxW"


def test_duality_max_side_holds():
    r = check_claim("duality", n_max=10)
    assert all(i["ok"] for i in r.instances if i["objective"] == "maxH=minW")


def test_duality_check_single_class():
    assert duality_check(TreeClass(9, k=4)).status == CONFIRMED
    assert duality_check(TreeClass(9, delta=3)).status == CONFIRMED
    with pytest.raises(EmptyClass):
        duality_check(TreeClass(6, diameter=2, q=1))


def test_unknown_claim():
    with pytest.raises(UnknownClaim):
        check_claim("nope")


def test_empty_range():
    with pytest.raises(OutOfRange):
        check_claim("path-star", n_min=5, n_max=4)


# -- chains and majorization ------------------------------------------------


def test_balanced_starlike_chain_6():
    r = chain_check("balanced-starlike", 6)
    assert r.status == CONFIRMED
    vals = [i["optimum"] for i in r.instances[:4]]
    assert vals == ["87/10", "109/12", "19/2", "10/1"]


def test_broom_chain_6():
    r = chain_check("broom", 6)
    vals = [Fraction(i["optimum"]) for i in r.instances[:4]]
    assert vals[0] == Fraction(87, 10) and vals[1] == 9 and vals[-1] == 10
    assert vals == sorted(vals) and r.status == CONFIRMED


def test_caterpillar_chain_7():
    r = chain_check("caterpillar", 7)
    assert r.status == CONFIRMED
    names = [name for name, _, _ in chain_members("caterpillar", 7)]
    assert names[0] == "C(7,6,3)" and names[-1] == "C(7,2,1)"


def test_chains_up_to_50():
    for n in range(5, 51):
        for chain in ("balanced-starlike", "broom", "caterpillar"):
            assert chain_check(chain, n).status == CONFIRMED


def test_chain_small_n():
    with pytest.raises(OutOfRange):
        chain_check("broom", 4)


def test_majorization_examples():
    assert majorization_check(6, 3).status == CONFIRMED
    assert harary_fast(starlike((2, 2, 1))) == Fraction(109, 12) >= harary_fast(starlike((3, 1, 1))) == 9
    h = [harary_fast(starlike(p)) for p in ((2, 2, 2), (3, 2, 1), (4, 1, 1))]
    assert h[0] >= h[1] >= h[2]
    r = majorization_check(12, 4)
    assert r.instances[-1]["comparable_pairs"] > 0


def test_attach_order_small():
    assert attach_order_check(3, 5).status == CONFIRMED


# -- conjecture -------------------------------------------------------------


def test_conjecture_boundary_is_star():
    r = conjecture_scan(4, 3)
    [inst] = r.instances
    assert inst["witnesses"] == [code(star(4))] == [code(volkmann(4, 3))]


def test_conjecture_small():
    for delta in (3, 4):
        assert conjecture_scan(12, delta).status == CONFIRMED


def test_conjecture_bad_delta():
    with pytest.raises(OutOfRange):
        conjecture_scan(10, 2)


# -- serialization ----------------------------------------------------------


def test_json_is_deterministic_and_exact():
    r1 = check_claim("path-star", n_max=6)
    r2 = check_claim("path-star", n_max=6)
    assert reports_to_json([r1]) == reports_to_json([r2])
    doc = json.loads(reports_to_json([r1]))
    assert "seconds" not in doc
    assert doc["instances"][-1]["optimum"] == "10/1"
    assert "seconds" in json.loads(reports_to_json([r1], timing=True))


def test_csv_columns():
    r = check_claim("path-star", n_max=4)
    rows = list(csv.reader(io.StringIO(reports_to_csv([r]))))
    assert tuple(rows[0]) == CSV_COLUMNS
    assert len(rows) == 1 + len(r.instances)
    assert rows[1][0] == "path-star" and rows[1][3] == "1"
