from fractions import Fraction
from math import factorial

import pytest
from hypothesis import given, settings, strategies as st

from fusionq.exact_arith import ONE, Q, PoleError, RationalFunctionQ
from fusionq.fusion import FusionSpec, evaluate_F, evaluate_G
from fusionq.hecke import RATQ, HeckeElement, numeric_ring, t_gen
from fusionq.repr_tools import (
    GROUP_RING, Echelon, ExactMatrix, action_matrices, adjacent_pairs,
    burnside_irreducibility, check_hecke_relations, column_pair_divisor,
    eigen_divisibility, evaluate_at, ideal_dimension, left_divisibility_solve,
    right_divisibility_solve, right_ideal_dimension, row_pair_divisor, shift_embed,
    specialize_q1, strip_hooks_shift,
)
from fusionq.symmetric_group import longest_element
from fusionq.tableaux import (
    hook_tableau, num_standard_tableaux, partition_analyze, partitions, standard_tableaux,
)

QI = RationalFunctionQ.q_power(-1)
Q0 = Fraction(7, 3)


def F_of(p):
    return evaluate_F(FusionSpec(hook_tableau(p))).element


def one(n, ring=RATQ):
    return HeckeElement.one(n, ring)


# -- row reduction ----------------------------------------------------------

def test_echelon_rank_and_express():
    e = Echelon()
    assert e.add({0: Fraction(1), 1: Fraction(2)})
    assert e.add({1: Fraction(1)})
    assert not e.add({0: Fraction(3), 1: Fraction(1)})
    assert e.rank == 2
    assert e.express({0: Fraction(1)}) == {0: 1, 1: -2}
    f = Echelon()
    f.add({0: Fraction(1)})
    assert f.express({1: Fraction(1)}) is None


@settings(max_examples=50)
@given(st.lists(st.lists(st.integers(-3, 3), min_size=4, max_size=4), min_size=1, max_size=6))
def test_echelon_rank_matches_fraction_gauss(rows):
    e = Echelon()
    for r in rows:
        e.add({k: Fraction(v) for k, v in enumerate(r) if v})
    # independent oracle: plain Gaussian elimination on a dense copy
    m = [[Fraction(v) for v in r] for r in rows]
    rank, col = 0, 0
    while rank < len(m) and col < 4:
        piv = next((i for i in range(rank, len(m)) if m[i][col]), None)
        if piv is None:
            col += 1
            continue
        m[rank], m[piv] = m[piv], m[rank]
        for i in range(len(m)):
            if i != rank and m[i][col]:
                f = m[i][col] / m[rank][col]
                m[i] = [a - f * b for a, b in zip(m[i], m[rank])]
        rank += 1
        col += 1
    assert e.rank == rank


def test_exact_matrix_ops():
    A = ExactMatrix.from_rows([[1, 2], [3, 4]])
    I = ExactMatrix.identity(2)
    assert A @ I == A
    assert (A - A).is_zero()
    assert A.shape == (2, 2)


# -- ideal dimension -------------------------------------------------------

def test_ideal_dimension_examples():
    assert ideal_dimension(F_of((3,))) == 1
    assert ideal_dimension(F_of((2, 1))) == 2
    assert ideal_dimension(F_of((2, 1)), mode="symbolic") == 2


def test_ideal_dimension_of_zero():
    with pytest.raises(ValueError):
        ideal_dimension(HeckeElement.zero(3))


def test_ideal_of_unit_is_everything():
    assert ideal_dimension(one(3)) == 6


@pytest.mark.parametrize("n", range(1, 6))
def test_ideal_dimension_is_number_of_tableaux(n):
    for p in partitions(n):
        assert ideal_dimension(F_of(p), q0=Q0) == num_standard_tableaux(p)


@pytest.mark.parametrize("n", range(1, 5))
def test_ideal_dimension_symbolic_agrees(n):
    for p in partitions(n):
        assert ideal_dimension(F_of(p), mode="symbolic") == num_standard_tableaux(p)


# -- eigenvalues and divisibility -----------------------------------------

def test_eigen_divisibility_examples():
    T1 = t_gen(1, 2)
    assert eigen_divisibility(T1 - one(2).scale(Q), 1, "column")
    assert eigen_divisibility(T1 + one(2).scale(QI), 1, "row")
    assert not eigen_divisibility(T1 + one(2).scale(QI), 1, "column")
    F = evaluate_F(FusionSpec(standard_tableaux((2, 1))[0])).element   # 1,2 in the first row
    assert eigen_divisibility(F, 1, "row")
    with pytest.raises(ValueError):
        eigen_divisibility(F, 1, "diagonal")


def test_left_divisibility_examples():
    P = t_gen(1, 2) - one(2).scale(Q)
    X = left_divisibility_solve(P, F_of((1, 1)), q0=Q0)
    assert X is not None
    assert evaluate_at(P, Q0) * X == evaluate_at(F_of((1, 1)), Q0)
    # T_1 + q^{-1} does not divide T_1 - q from the left
    assert left_divisibility_solve(t_gen(1, 2) + one(2).scale(QI), F_of((1, 1)), q0=Q0) is None
    with pytest.raises(ValueError):
        left_divisibility_solve(HeckeElement.zero(2), F_of((1, 1)))


def test_left_divisibility_symbolic():
    P = t_gen(1, 2) - one(2).scale(Q)
    X = left_divisibility_solve(P, F_of((1, 1)), mode="symbolic")
    assert P * X == F_of((1, 1))


def test_column_pair_divisor_for_two_by_two():
    T = hook_tableau((2, 2))           # [[1, 3], [2, 4]]
    assert adjacent_pairs(T, "column") == [(1, 2), (3, 4)]
    P = column_pair_divisor((2, 2), 3, 4)
    assert left_divisibility_solve(P, F_of((2, 2)), q0=Q0) is not None
    assert right_ideal_dimension(P, q0=Q0) < 24


def test_simple_divisor_shapes():
    n = 2
    assert column_pair_divisor((1, 1), 1, 2) == t_gen(1, n) - one(n).scale(Q)
    assert row_pair_divisor((2,), 1, 2) == t_gen(1, n) + one(n).scale(QI)


@pytest.mark.parametrize("n", range(2, 6))
def test_pair_divisors_divide_and_are_singular(n):
    for p in partitions(n):
        T = hook_tableau(p)
        F = F_of(p)
        for kind, build in (("column", column_pair_divisor), ("row", row_pair_divisor)):
            for u, v in adjacent_pairs(T, kind):
                P = build(p, u, v)
                X = left_divisibility_solve(P, F, q0=Q0)
                assert X is not None, (p, kind, u, v)
                assert evaluate_at(P, Q0) * X == evaluate_at(F, Q0)
                assert right_ideal_dimension(P, q0=Q0) < factorial(n)


def test_stripping_two_by_two():
    M, shift = strip_hooks_shift((2, 2), 1)
    assert M == (1,) and shift == 3
    Y = shift_embed(F_of(M), 4)
    assert Y == one(4)
    assert right_divisibility_solve(Y, F_of((2, 2)), q0=Q0) is not None


def test_shift_embed():
    x = t_gen(1, 2)
    assert shift_embed(x, 4) == t_gen(3, 4)
    with pytest.raises(ValueError):
        shift_embed(t_gen(1, 3), 2)


@pytest.mark.parametrize("n", range(4, 6))
def test_stripping(n):
    for p in partitions(n):
        if partition_analyze(p).durfee < 2:
            continue
        M, _ = strip_hooks_shift(p, 1)
        Y = shift_embed(F_of(M), n)
        P = right_divisibility_solve(Y, F_of(p), q0=Q0)
        assert P is not None
        assert P * evaluate_at(Y, Q0) == evaluate_at(F_of(p), Q0)


def test_strip_requires_second_hook():
    with pytest.raises(ValueError):
        strip_hooks_shift((3, 1), 1)


# -- action matrices -------------------------------------------------------

def test_action_matrices_one_row_and_one_column():
    for mats, val in ((action_matrices((3,), Q0), Q0), (action_matrices((1, 1, 1), Q0), -1 / Q0)):
        assert len(mats) == 2
        for M in mats:
            assert M.rows == ((val,),)


def test_action_matrices_two_one():
    mats = action_matrices((2, 1), Q0)
    assert all(M.shape == (2, 2) for M in mats)
    assert check_hecke_relations(mats, Q0)
    assert burnside_irreducibility(mats)


@pytest.mark.parametrize("n", range(2, 6))
def test_action_matrices_satisfy_relations(n):
    for p in partitions(n):
        assert check_hecke_relations(action_matrices(p, Q0), Q0)


def test_burnside_examples():
    assert burnside_irreducibility([ExactMatrix.from_rows([[Fraction(5)]])])
    D1 = ExactMatrix.from_rows([[Fraction(1), Fraction(0)], [Fraction(0), Fraction(2)]])
    D2 = ExactMatrix.from_rows([[Fraction(3), Fraction(0)], [Fraction(0), Fraction(-1)]])
    assert not burnside_irreducibility([D1, D2])


def test_relations_check_rejects_wrong_eigenvalue():
    bad = [ExactMatrix.from_rows([[Fraction(2)]])]
    assert not check_hecke_relations(bad, Q0)


@pytest.mark.parametrize("n", range(1, 5))
def test_irreducible(n):
    for p in partitions(n):
        assert burnside_irreducibility(action_matrices(p, Q0))


@pytest.mark.parametrize("n", range(1, 6))
def test_g_basis_has_full_rank(n):
    for p in partitions(n):
        e = Echelon()
        for T in standard_tableaux(p):
            e.add(dict(evaluate_G(T, "numeric", Q0).element))
        assert e.rank == num_standard_tableaux(p)


# -- q = 1 -----------------------------------------------------------------

def test_specialize_examples():
    s1 = specialize_q1(F_of((1, 1)))
    assert dict(s1) == {(1, 2): -1, (2, 1): 1}
    assert dict(specialize_q1(F_of((2,)))) == {(1, 2): 1, (2, 1): 1}
    F1 = specialize_q1(F_of((2, 1)))
    assert F1.coeff(longest_element(3)) == 1
    assert F1.mul_gen_left(1) == -F1


def test_specialization_pole():
    x = one(2).scale(ONE / (Q - ONE))
    with pytest.raises(PoleError, match="specialization pole"):
        specialize_q1(x)


def test_group_ring_multiplication_is_permutation_composition():
    # at q = 1 the generator action is just a transposition
    x = HeckeElement.one(3, GROUP_RING).mul_gen_right(1)
    assert x * x == HeckeElement.one(3, GROUP_RING)


@pytest.mark.parametrize("n", range(2, 6))
def test_specializations_keep_eigenvalues(n):
    for p in partitions(n):
        for T in standard_tableaux(p):
            F1 = specialize_q1(evaluate_F(FusionSpec(T)).element)
            assert F1.coeff(longest_element(n)) == 1
            for k in range(1, n):
                (i1, j1), (i2, j2) = T.positions[k], T.positions[k + 1]
                if j1 == j2:
                    assert F1.mul_gen_left(k) == -F1
                elif i1 == i2:
                    assert F1.mul_gen_left(k) == F1


@pytest.mark.parametrize("n", range(1, 6))
def test_modular_ideal_dimension_agrees(n):
    from fusionq.repr_tools import ideal_dimension_modular
    for p in partitions(n):
        assert ideal_dimension_modular(F_of(p), q0=Q0) == num_standard_tableaux(p)


def test_modular_ideal_dimension_bad_prime():
    from fusionq.repr_tools import ideal_dimension_modular
    x = HeckeElement.one(2, numeric_ring(Fraction(1, 7)))
    with pytest.raises(ArithmeticError):
        ideal_dimension_modular(x, prime=7)
