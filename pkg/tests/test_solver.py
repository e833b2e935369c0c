import pytest

from involeq.algebra import (
    EquationInstance,
    cyclic,
    enumerate_involutions,
    galois_field,
    identity_involution,
    make_carrier,
    negation,
    truncated_addition,
)
from involeq.errors import BudgetExceeded
from involeq.families import multiplicative_maps, quadratic_family
from involeq.solver import brute_force, seed_classes, seeded_brute_force, solve
from involeq.verify import check_equation

from oracles import naive_solutions


def carrier_for(kind, p):
    return galois_field(p) if kind == "dalembert" else make_carrier("zmod", p)


def test_dalembert_z2_f3_identity():
    S, K = cyclic(2), galois_field(3)
    ident = identity_involution(S)
    sols = brute_force(EquationInstance(S, ident, ident, K, "dalembert"))
    assert sols == sorted(multiplicative_maps(S.square, K))
    assert len(sols) == 5


def test_jensen_z3_identity_constants():
    S = cyclic(3)
    ident = identity_involution(S)
    sols = brute_force(EquationInstance(S, ident, ident, make_carrier("zmod", 3), "jensen"))
    assert sols == [(c,) * 9 for c in range(3)]


def test_quadratic_z3_negation_equals_family():
    S = cyclic(3)
    neg = negation(S)
    I = EquationInstance(S, neg, neg, make_carrier("zmod", 3), "quadratic")
    assert brute_force(I) == quadratic_family(I)


# instances small enough for the unpruned full scan in the oracle
FULL_SCAN = [
    (name, S, kind, p)
    for name, S in [("trivial", cyclic(1)), ("z2", cyclic(2)), ("z3", cyclic(3)),
                    ("trunc3", truncated_addition(3))]
    for kind in ("dalembert", "jensen", "quadratic")
    for p in (3, 5, 7)
    if p ** (S.size**2) <= 20_000
]


@pytest.mark.parametrize(
    "name, S, kind, p", FULL_SCAN, ids=[f"{k}-{n}-{p}" for n, _, k, p in FULL_SCAN]
)
def test_pruned_search_matches_full_scan(name, S, kind, p):
    K = carrier_for(kind, p)
    invs = enumerate_involutions(S)
    for sigma in invs:
        for tau in invs:
            I = EquationInstance(S, sigma, tau, K, kind)
            oracle = naive_solutions(kind, S.size, S, sigma.map, tau.map, p)
            assert brute_force(I) == oracle
            assert seeded_brute_force(I) == oracle


def test_seeding_merges_symmetric_cells():
    S = cyclic(3)
    I = EquationInstance(S, negation(S), identity_involution(S), galois_field(3), "dalembert")
    classes = seed_classes(I)
    for y in range(3):
        for w in range(3):
            assert classes[S.pair(y, w)] == classes[S.pair((-y) % 3, w)]
    assert max(classes) + 1 == 6


def test_seeded_search_visits_fewer_nodes():
    S = cyclic(5)
    neg = negation(S)
    I = EquationInstance(S, neg, neg, make_carrier("zmod", 5), "quadratic")
    plain = solve(I)
    seeded = solve(I, seeded=True)
    assert plain.solutions == seeded.solutions
    assert seeded.nodes < plain.nodes
    assert seeded.variables == 13


def test_jensen_seeding_collapses_to_constants():
    # with identity involutions u ~ u + 2v, and doubling is onto in odd order
    S = cyclic(5)
    ident = identity_involution(S)
    I = EquationInstance(S, ident, ident, make_carrier("zmod", 5), "jensen")
    assert set(seed_classes(I)) == {0}


def test_budget_exceeded_is_an_error():
    S = cyclic(5)
    neg = negation(S)
    I = EquationInstance(S, neg, neg, make_carrier("zmod", 5), "quadratic")
    with pytest.raises(BudgetExceeded) as exc:
        solve(I, budget=100)
    assert exc.value.budget == 100
    with pytest.raises(ValueError):
        solve(I, budget=0)


def test_parallel_search_is_deterministic():
    S = cyclic(4)
    neg = negation(S)
    I = EquationInstance(S, neg, neg, galois_field(5), "dalembert")
    serial = solve(I)
    parallel = solve(I, workers=2)
    assert parallel.solutions == serial.solutions
    assert parallel.nodes == serial.nodes


def test_parallel_search_respects_budget():
    S = cyclic(5)
    neg = negation(S)
    I = EquationInstance(S, neg, neg, make_carrier("zmod", 5), "quadratic")
    nodes = solve(I).nodes
    with pytest.raises(BudgetExceeded):
        solve(I, budget=nodes - 1, workers=2)
    assert solve(I, budget=nodes, workers=2).nodes == nodes


@pytest.mark.parametrize("kind", ["dalembert", "jensen", "quadratic"])
def test_solutions_are_sound(kind):
    S = cyclic(4)
    K = carrier_for(kind, 5)
    for sigma in enumerate_involutions(S):
        for tau in enumerate_involutions(S):
            I = EquationInstance(S, sigma, tau, K, kind)
            for f in brute_force(I):
                assert check_equation(I, f) == []
