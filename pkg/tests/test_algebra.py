from itertools import product

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from involeq.algebra import (
    EquationInstance,
    build_semigroup,
    cyclic,
    direct_product,
    enumerate_involutions,
    galois_field,
    identity_involution,
    make_carrier,
    make_involution,
    negation,
    quadratic_extension,
    square_pair_involution,
    truncated_addition,
)
from involeq.errors import (
    AlgebraError,
    EvenCharacteristic,
    EvenOrder,
    NotAssociative,
    NotCommutative,
    NotInvolution,
)

from oracles import all_involutions, cyclic_op


def test_trivial_semigroup():
    S = build_semigroup(1, [[0]])
    assert S.is_group and S.identity == 0


def test_z3_table_is_a_group():
    S = build_semigroup(3, [[(a + b) % 3 for b in range(3)] for a in range(3)])
    assert S.is_group
    assert S.identity == 0
    assert S == cyclic(3)


def test_left_zero_band_is_not_commutative():
    with pytest.raises(NotCommutative) as exc:
        build_semigroup(2, [[0, 0], [1, 1]])
    assert exc.value.witness == (0, 1)


def test_non_associative_witness_is_genuine():
    # commutative, but (0*0)*1 = 1*1 = 0 while 0*(0*1) = 0*0 = 1
    table = [[1, 0, 0], [0, 0, 0], [0, 0, 0]]
    with pytest.raises(NotAssociative) as exc:
        build_semigroup(3, table)
    a, b, c = exc.value.witness
    assert table[table[a][b]][c] != table[a][table[b][c]]


def test_table_entries_out_of_range():
    with pytest.raises(AlgebraError):
        build_semigroup(2, [[0, 2], [2, 0]])


@pytest.mark.parametrize("n", [1, 4, 5])
def test_cyclic(n):
    S = cyclic(n)
    assert S.identity == 0 and S.is_group
    assert all(S.op[a][b] == (a + b) % n for a in range(n) for b in range(n))


def test_cyclic_example_value():
    assert cyclic(5).op[3][4] == 2


def test_truncated_addition_has_no_identity():
    T = truncated_addition(3)
    assert not T.is_group and T.identity is None
    # 1 + 1 = 2, 1 + 2 = 3, everything else saturates at 3
    assert T.op == ((1, 2, 2), (2, 2, 2), (2, 2, 2))


@pytest.mark.parametrize(
    "n, expected",
    [
        (2, [(0, 1)]),
        (3, [(0, 1, 2), (0, 2, 1)]),
        (4, [(0, 1, 2, 3), (0, 3, 2, 1)]),
    ],
)
def test_involutions_of_cyclic_groups(n, expected):
    # expected lists are the outputs of the full n^n scan in oracles.all_involutions
    assert all_involutions(n, cyclic_op(n)) == expected
    assert [s.map for s in enumerate_involutions(cyclic(n))] == expected


@pytest.mark.parametrize(
    "S",
    [cyclic(1), cyclic(5), cyclic(6), truncated_addition(3), truncated_addition(4),
     direct_product(cyclic(2), cyclic(2))],
    ids=["z1", "z5", "z6", "trunc3", "trunc4", "klein"],
)
def test_involution_enumeration_matches_full_scan(S):
    got = [s.map for s in enumerate_involutions(S)]
    assert got == all_involutions(S.size, S)
    assert tuple(S.elements) in got


def test_make_involution_rejects_non_endomorphism():
    with pytest.raises(NotInvolution):
        # swaps 1 and 2 in Z_4 but 1+1 = 2 is not sent to 2+2 = 0
        make_involution(cyclic(4), [0, 2, 1, 3])


def test_negation_needs_group():
    with pytest.raises(NotInvolution):
        negation(truncated_addition(3))


def test_square_pair_involution():
    S = cyclic(3)
    ident = identity_involution(S)
    assert square_pair_involution(ident, ident).map == tuple(range(9))
    rho = square_pair_involution(negation(S), ident)
    assert rho(S.pair(1, 2)) == S.pair(2, 2)
    assert all(rho(rho(u)) == u for u in range(9))
    P = S.square
    assert all(rho(P.op[u][v]) == P.op[rho(u)][rho(v)] for u in range(9) for v in range(9))


def test_square_semigroup_is_componentwise():
    S = truncated_addition(3)
    P = S.square
    for x, y, z, w in product(range(3), repeat=4):
        assert P.op[S.pair(x, z)][S.pair(y, w)] == S.pair(S.op[x][y], S.op[z][w])


# ---------------------------------------------------------------------------
# carriers


def test_zmod4_rejected():
    with pytest.raises(EvenOrder):
        make_carrier("zmod", 4)


def test_zmod5_halve():
    K = make_carrier("zmod", 5)
    assert K.halve(1) == 3


@pytest.mark.parametrize("q", [2, 4, 8, 16])
def test_characteristic_two_rejected(q):
    with pytest.raises(EvenCharacteristic):
        make_carrier("gf", q)


def test_not_a_prime_power():
    with pytest.raises(AlgebraError):
        make_carrier("gf", 15)


def test_direct_sum_even_summand():
    with pytest.raises(EvenOrder):
        make_carrier("sum", (3, 2))


def _field_axioms(K):
    q = K.order
    r = range(q)
    for a, b in product(r, repeat=2):
        assert K.add(a, b) == K.add(b, a)
        assert K.mul(a, b) == K.mul(b, a)
    for a, b, c in product(r, repeat=3):
        assert K.add(K.add(a, b), c) == K.add(a, K.add(b, c))
        assert K.mul(K.mul(a, b), c) == K.mul(a, K.mul(b, c))
        assert K.mul(a, K.add(b, c)) == K.add(K.mul(a, b), K.mul(a, c))
    for a in r:
        assert K.add(a, 0) == a and K.mul(a, 1) == a
        assert K.add(a, K.neg(a)) == 0
        if a:
            assert K.mul(a, K.inv(a)) == 1


@pytest.mark.parametrize("q", [3, 5, 7, 9, 25])
def test_field_axioms(q):
    K = galois_field(q)
    assert K.characteristic in (3, 5, 7)
    _field_axioms(K)


def test_gf9_two_is_invertible():
    K = galois_field(9)
    two = K.add(1, 1)
    assert K.mul(two, K.inv(two)) == 1


@pytest.mark.parametrize("q", [3, 5, 9])
def test_quadratic_extension(q):
    K = galois_field(q)
    E = quadratic_extension(K)
    assert E.order == q * q
    _field_axioms(E)
    # base field embedded with unchanged labels
    for a, b in product(K.elements, repeat=2):
        assert E.add(a, b) == K.add(a, b)
        assert E.mul(a, b) == K.mul(a, b)
    # every base element has a square root upstairs
    assert all(E.sqrt(a) is not None for a in K.elements)


@pytest.mark.parametrize(
    "K",
    [make_carrier("zmod", 3), make_carrier("zmod", 9), make_carrier("gf", 9),
     make_carrier("sum", (3, 5)), make_carrier("gf", 7)],
    ids=str,
)
def test_halving_and_two_cancellation(K):
    for x in K.elements:
        assert K.halve(K.add(x, x)) == x
    doubles = [K.add(x, x) for x in K.elements]
    assert len(set(doubles)) == K.order


@given(st.sampled_from([3, 5, 7, 9, 11, 13, 25, 27]), st.data())
@settings(max_examples=60, deadline=None)
def test_halve_property(q, data):
    K = galois_field(q)
    x = data.draw(st.integers(0, q - 1))
    y = data.draw(st.integers(0, q - 1))
    assert K.add(K.halve(x), K.halve(x)) == x
    assert K.halve(K.add(x, y)) == K.add(K.halve(x), K.halve(y))


def test_instance_requires_field_for_dalembert():
    S = cyclic(3)
    ident = identity_involution(S)
    with pytest.raises(AlgebraError):
        EquationInstance(S, ident, ident, make_carrier("zmod", 3), "dalembert")


def test_instance_rejects_foreign_involution():
    ident3 = identity_involution(cyclic(3))
    ident2 = identity_involution(cyclic(2))
    with pytest.raises(NotInvolution):
        EquationInstance(cyclic(3), ident3, ident2, make_carrier("zmod", 3), "jensen")
