"""Formula models against brute force and against the generic engine."""

from __future__ import annotations

import itertools
from math import factorial

import pytest

from coxcent.classicmodels import (
    SignedPerm,
    brute_force_classes,
    canonical_gamma,
    predict_profile_A,
    predict_profile_B,
    predict_profile_D,
    predicted_rows,
    sym_reference_orders,
)


def test_conventions_collapse_degenerate_factors():
    p = predict_profile_A(2, 1)  # the rank-1 case: a = 0, d = 1
    assert str(p.minus_type) == "A1"
    assert str(p.tilde_minus_type) == "A1"  # B1 = A1
    assert str(p.plus_type) == "1"  # A_{-1} = 1
    assert str(p.tilde_plus_type) == "1"  # A_{-1} x A_0 = 1
    q = predict_profile_B(3, 0, 3, 0)
    assert q.order == 2**3 * 6 and q.degree == 0
    r = predict_profile_D(4, 0, 2, 1)
    assert str(r.plus_type) == "A1^3"  # D2 = A1 x A1 joins the (A1)^b factor


def test_invalid_invariants_rejected():
    with pytest.raises(ValueError):
        predict_profile_A(4, 3)
    with pytest.raises(ValueError):
        predict_profile_B(4, 1, 1, 3)
    with pytest.raises(ValueError):
        predict_profile_D(4, 1, 1, 1)  # odd a
    with pytest.raises(ValueError):
        predict_profile_D(4, 0, 0, 2)  # split label missing


def test_signed_perm_arithmetic():
    x = SignedPerm((1, 0, 2), (1, 1, -1))
    assert (x * x.inverse()).is_identity()
    flip = SignedPerm((0, 1, 2), (-1, 1, 1))
    assert flip.is_involution()
    assert flip.invariants() == (1, 2, 0)
    swap_minus = SignedPerm((1, 0, 2), (-1, -1, 1))
    assert swap_minus.is_involution()
    assert swap_minus.invariants() == (0, 1, 1)


@pytest.mark.parametrize("family,n", [("B", 2), ("B", 3), ("B", 4), ("D", 4)])
def test_brute_force_matches_formulas(family, n):
    brute = brute_force_classes(family, n)
    group_order = 2**n * factorial(n) if family == "B" else 2 ** (n - 1) * factorial(n)
    preds = {}
    for p in predicted_rows(family, n):
        preds.setdefault(tuple(map(int, p.label.rstrip("+-").split(","))), []).append(p)
    # every brute class matches its formula row, including orders and the
    # quotient structure (element orders compared against Sym_r built by raw
    # permutation enumeration)
    seen_counts: dict = {}
    for bc in brute:
        p = preds[bc.invariants][0]
        assert bc.centralizer_order == p.order
        assert bc.size == p.class_size
        assert bc.size * bc.centralizer_order == group_order
        assert bc.gamma_order == p.gamma_order
        kind, r = canonical_gamma(p.gamma_kind, p.gamma_r)
        if kind == "sym":
            assert bc.gamma_element_orders == sym_reference_orders(r)
        seen_counts[bc.invariants] = seen_counts.get(bc.invariants, 0) + 1
    for invariants, ps in preds.items():
        assert seen_counts[invariants] == len(ps)


def test_brute_force_a_family():
    # Sym_n directly: involutions with d transpositions
    for n in (3, 4, 5):
        counts: dict[int, int] = {}
        for perm in itertools.permutations(range(n)):
            if all(perm[perm[i]] == i for i in range(n)):
                d = sum(1 for i in range(n) if perm[i] > i)
                counts[d] = counts.get(d, 0) + 1
        for d, count in counts.items():
            p = predict_profile_A(n, d)
            assert p.class_size == count


def test_d5_quotients_are_at_most_order_2():
    # Every involution class of D5 has reflection quotient of order 1 or 2;
    # the first elementary abelian (2,2) quotient appears at rank 7.
    brute = brute_force_classes("D", 5)
    assert max(bc.gamma_order for bc in brute) == 2
    d7_case_iv = predict_profile_D(7, 2, 1, 2)
    assert canonical_gamma(d7_case_iv.gamma_kind, d7_case_iv.gamma_r) == (
        "sym_x_c2",
        2,
    )
    assert d7_case_iv.gamma_order == 4


def test_engine_matches_brute_force_d4(cache):
    brute = {bc.invariants: bc for bc in brute_force_classes("D", 4)}
    split_total = 0
    for p in cache.profiles("D", 4):
        inv = tuple(map(int, p.cls.label.rstrip("+-").split(",")))
        bc = brute[inv]
        assert p.order == bc.centralizer_order
        assert p.g1_order == bc.reflection_part_order
        assert p.gamma_order == bc.gamma_order
        if inv == (0, 0, 2):
            split_total += p.cls.size
    assert split_total == brute[(0, 0, 2)].size * 2
