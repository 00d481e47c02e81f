"""Acceptance suite: one test per criterion, each printing a PASS/FAIL line
(run with `pytest tests/test_acceptance.py -v -s` to see the lines)."""

import time

from twomotzkin.bijection import category_census, path_to_tree, tree_to_path
from twomotzkin.enumeration import (count, multiple_dyck_paths, plane_trees,
                                    two_motzkin_paths)
from twomotzkin.identities import (catalan, leaf_census, narayana,
                                   run_count_poly, run_count_poly_enumerated,
                                   verify_eq1, verify_eq2, verify_eq7,
                                   verify_theorem1, verify_theorem2)
from twomotzkin.poly import ONE, Poly, X, ZERO, binomial
from twomotzkin.structures import EdgeCategory, TwoMotzkinStep
from twomotzkin.weights import (merge_levels, rebalance_up_down,
                                theorem1_step_weights, theorem2_step_weights,
                                total_motzkin_weight, total_path_weight,
                                total_path_weight_enumerated)

MULTIPLE_DYCK_SEQUENCE = [1, 1, 5, 29, 185, 1257, 8925, 65445]


def report(number, ok, detail):
    print(f"criterion {number}: {'PASS' if ok else 'FAIL'} - {detail}")
    assert ok, f"criterion {number} failed: {detail}"


def test_criterion_1_catalan_correspondence():
    started = time.perf_counter()
    for n in range(1, 11):
        expected = catalan(n)
        assert count("trees", n) == expected, n
        assert count("2motzkin", n - 1) == expected, n
    elapsed = time.perf_counter() - started
    report(1, elapsed < 10.0,
           f"|trees(n)| = |2-Motzkin(n-1)| = C_n for n <= 10 "
           f"(C_10 = {catalan(10)}) in {elapsed:.2f}s")


def test_criterion_2_bijection():
    checked = 0
    for n in range(1, 10):
        trees = list(plane_trees(n))
        images = [tree_to_path(t) for t in trees]
        assert len(set(images)) == len(trees), n
        assert set(images) == set(two_motzkin_paths(n - 1)), n
        for tree, image in zip(trees, images):
            assert path_to_tree(image) == tree
        checked += len(trees)
    report(2, True, f"injective + surjective + roundtrip on {checked} trees, "
                    f"n <= 9 (C_9 = {catalan(9)})")


def test_criterion_3_edge_balance():
    checked = 0
    for n in range(1, 10):
        for tree in plane_trees(n):
            census = category_census(tree)
            assert (census[EdgeCategory.NON_TERMINAL_INTERIOR]
                    == census[EdgeCategory.TERMINAL_EXTERIOR])
            checked += 1
    report(3, True, f"#non-terminal interior = #terminal exterior on all "
                    f"{checked} trees with n <= 9")


def test_criterion_4_theorem1():
    for n in range(1, 21):
        assert verify_theorem1(n).equal, n
    steps = theorem1_step_weights()
    for n in range(1, 9):
        reference = verify_theorem1(n, with_oracle=True)
        assert reference.oracle_equal, n
        assert reference.lhs == total_path_weight_enumerated(n - 1, steps), n
        assert reference.lhs == total_path_weight(n - 1, steps), n
    report(4, True, "closed forms equal for n <= 20; tree and path weight "
                    "totals both match for n <= 8")


def test_criterion_5_eq1():
    for n in range(1, 21):
        assert verify_eq1(n).equal, n
    enumerated = [sum(1 for _ in multiple_dyck_paths(n)) for n in range(8)]
    assert enumerated == MULTIPLE_DYCK_SEQUENCE
    for n in range(1, 8):
        report_n = verify_eq1(n, with_oracle=True)
        assert report_n.oracle_equal
        assert report_n.lhs == MULTIPLE_DYCK_SEQUENCE[n]
    report(5, True, f"integer identity for n <= 20; enumeration reproduces "
                    f"{MULTIPLE_DYCK_SEQUENCE}")


def test_criterion_6_theorem2_and_reductions():
    for n in range(1, 21):
        assert verify_theorem2(n).equal, n
        assert verify_eq2(n).equal, n
    for n in range(1, 9):
        assert verify_theorem2(n, with_oracle=True).oracle_equal, n
    steps = theorem2_step_weights()
    balanced = X * (ONE + X)
    rebalanced = rebalance_up_down(steps, balanced, balanced)
    merged = merge_levels(rebalanced)
    for n in range(1, 9):
        m = n - 1
        total = total_path_weight_enumerated(m, steps)
        assert total == total_motzkin_weight(m, merge_levels(steps)), n
        assert total == total_path_weight(m, rebalanced), n
        dotted = ZERO
        for k in range(m + 1):
            dotted = dotted + binomial(m, k) * balanced ** k * catalan(k + 1)
        assert total == total_motzkin_weight(m, merged) == dotted, n
        assert total == verify_theorem2(n).rhs, n
    report(6, True, "closed forms equal for n <= 20; oracle, level merge, "
                    "rebalance to x(1+x), and dotted-step expansion all "
                    "preserve totals for n <= 8")


def test_criterion_7_eq7():
    for n in range(1, 21):
        assert verify_eq7(n).equal, n
    for n in range(1, 7):
        assert run_count_poly(n) == run_count_poly_enumerated(n), n
    assert run_count_poly(2) == Poly((0, 0, 1, 2, 2))
    report(7, True, "reflection identity for n <= 20; run-count polynomial "
                    "matches enumeration for n <= 6 "
                    "(semilength 2: x^2 + 2x^3 + 2x^4)")


def test_criterion_8_narayana_leaf_statistic():
    for n in range(1, 9):
        census = leaf_census(n)
        for k in range(1, n + 1):
            assert census.get(k, 0) == narayana(n, k), (n, k)
    report(8, True, "narayana(n,k) equals the exhaustive k-leaf census for "
                    "all n <= 8")


def test_criterion_9_leaf_to_step_transport():
    checked = 0
    for n in range(1, 10):
        for tree in plane_trees(n):
            steps = tree_to_path(tree).steps
            marked = sum(1 for s in steps
                         if s in (TwoMotzkinStep.WAVY, TwoMotzkinStep.DOWN))
            assert tree.leaf_count() == 1 + marked
            checked += 1
    report(9, True, f"leaf_count = 1 + #wavy + #down on all {checked} trees "
                    f"with n <= 9")
