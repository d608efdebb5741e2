from fractions import Fraction

import pytest

from fusionq.exact_arith import ONE, Q, RationalFunctionQ, RationalFunctionQT, TPoly
from fusionq.fusion import (
    FusionSpec, SingularFactorError, a_complement_holds, check_intertwining,
    check_triple_regularity, cleared_product, evaluate_F, evaluate_G, fusion_factor,
    fusion_factors, fusion_product, limit_t0, pair_order, single_factor_regular,
    singular_count,
)
from fusionq.hecke import (
    RATQ, RATQT, HeckeElement, ScalarRing, mul_t_sigma_inverse_right, numeric_ring,
    phi_apply, t_gen,
)
from fusionq.repr_tools import Echelon, evaluate_at
from fusionq.symmetric_group import longest_element
from fusionq.tableaux import adjacent_swap, hook_tableau, partitions, standard_tableaux

QI = RationalFunctionQ.q_power(-1)


Q0 = Fraction(5, 3)


def _qt_const(c):
    return RationalFunctionQT(TPoly([c]), TPoly([c ** 0]))


# Q(t) with q fixed at Q0
RAT_T_AT_Q0 = ScalarRing("Q(t)", _qt_const(Fraction(0)), _qt_const(Fraction(1)),
                         _qt_const(Q0), _qt_const(1 / Q0))


def slot_value(slot, q):
    # q^{2c} (1 + m t) as an element of K(t)
    qc = q ** (2 * slot.content)
    return RationalFunctionQT(TPoly([qc, qc * slot.m]), TPoly([qc ** 0]))


def naive_F(spec, ring=RATQT, q=Q):
    """Product of factors with canonical K(t) arithmetic, then t -> 0."""
    n = spec.tableau.n
    x = HeckeElement.one(n, ring)
    for i, a, b in fusion_factors(spec.slots()):
        x = x * fusion_factor(i, slot_value(a, q), slot_value(b, q), n, ring)
    return limit_t0(x)


def all_tableaux(max_n, min_n=1):
    for n in range(min_n, max_n + 1):
        for p in partitions(n):
            for T in standard_tableaux(p):
                yield T


def test_pair_order_examples():
    assert pair_order(3) == [(1, 2), (1, 3), (2, 3)]
    assert pair_order(2) == [(1, 2)]
    assert pair_order(4) == [(1, 2), (1, 3), (2, 3), (1, 4), (2, 4), (3, 4)]


def test_factor_specializations():
    one = HeckeElement.one(2, RATQ)
    T1 = t_gen(1, 2)
    f = lambda k: fusion_factor(1, ONE, RationalFunctionQ.q_power(k), 2, RATQ)
    assert f(-2) == T1 - one.scale(Q)
    assert f(2) == T1 + one.scale(QI)
    assert f(4) == T1 + one.scale(ONE / (Q ** 3 + Q))


def test_identically_singular_factor():
    with pytest.raises(SingularFactorError, match="identically singular factor"):
        fusion_factor(1, Q, Q, 2, RATQ)


def test_small_values():
    T1 = t_gen(1, 2)
    one = HeckeElement.one(2)
    assert evaluate_F(FusionSpec(hook_tableau((1, 1)))).element == T1 - one.scale(Q)
    assert evaluate_F(FusionSpec(hook_tableau((2,)))).element == T1 + one.scale(QI)
    assert evaluate_F(FusionSpec(hook_tableau((1,)))).element == HeckeElement.one(1)


def test_fusion_product_of_single_factor_is_constant_in_t():
    x = fusion_product(FusionSpec(hook_tableau((1, 1))))
    assert limit_t0(x) == t_gen(1, 2) - HeckeElement.one(2).scale(Q)
    for _, c in x:
        assert c.den.degree == 0 and c.num.degree == 0


def test_fusion_product_two_by_two_has_a_removable_singularity():
    spec = FusionSpec(hook_tableau((2, 2)))
    factors = fusion_factors(spec.slots())
    assert singular_count(factors) == 1
    _, D = cleared_product(4, factors, RATQ)
    assert not D[0]          # the cleared denominator vanishes at t = 0
    limit_t0(fusion_product(spec))   # yet the product is regular


@pytest.mark.parametrize("T", list(all_tableaux(3, 2)), ids=str)
def test_engine_matches_naive_product(T):
    for variant in ("hook", "row", "column"):
        spec = FusionSpec(T, variant)
        assert evaluate_F(spec).element == naive_F(spec)


@pytest.mark.parametrize("T", list(all_tableaux(4, 4)), ids=str)
def test_engine_matches_naive_product_at_fixed_q(T):
    for variant in ("hook", "row", "column"):
        spec = FusionSpec(T, variant)
        naive = naive_F(spec, RAT_T_AT_Q0, Q0).map_coeffs(lambda c: c, numeric_ring(Q0))
        assert evaluate_at(evaluate_F(spec).element, Q0) == naive
        assert evaluate_F(spec, "numeric", Q0).element == naive


@pytest.mark.parametrize("T", list(all_tableaux(5)), ids=str)
def test_variants_agree_and_t0_coefficient(T):
    vals = [evaluate_F(FusionSpec(T, v)).element for v in ("hook", "row", "column")]
    assert vals[0] == vals[1] == vals[2]
    assert vals[0].coeff(longest_element(T.n)) == ONE


@pytest.mark.parametrize("T", list(all_tableaux(4)), ids=str)
def test_direction_independence(T):
    spec = FusionSpec(T)
    alt = FusionSpec(T, "hook", tuple((g + 1) ** 2 for g in range(spec.num_groups)))
    assert evaluate_F(spec).element == evaluate_F(alt).element


def test_direction_validation():
    T = hook_tableau((2, 2))
    with pytest.raises(ValueError):
        FusionSpec(T, "hook", (1, 1))
    with pytest.raises(ValueError):
        FusionSpec(T, "diagonal")


@pytest.mark.parametrize("T", list(all_tableaux(5, 2)), ids=str)
def test_phi_invariance(T):
    x = mul_t_sigma_inverse_right(evaluate_F(FusionSpec(T)).element, longest_element(T.n))
    assert phi_apply(x) == x


def test_numeric_mode_matches_symbolic():
    for T in all_tableaux(4, 2):
        sym = evaluate_F(FusionSpec(T)).element
        num = evaluate_F(FusionSpec(T), mode="numeric")
        assert num.q0 is not None
        assert evaluate_at(sym, num.q0) == num.element


def test_g_on_hook_tableau_is_f():
    for n in range(1, 6):
        for p in partitions(n):
            T = hook_tableau(p)
            assert evaluate_G(T).element == evaluate_F(FusionSpec(T)).element


def test_g_vectors_for_two_one_are_independent():
    ech = Echelon()
    for T in standard_tableaux((2, 1)):
        assert ech.add(dict(evaluate_G(T).element))


@pytest.mark.parametrize("T", list(all_tableaux(4)), ids=str)
def test_a_complement(T):
    assert a_complement_holds(T)


def test_intertwining_examples():
    assert check_intertwining(hook_tableau((2, 1)), 2)
    assert check_intertwining(hook_tableau((2, 2)), 2)
    with pytest.raises(ValueError):
        check_intertwining(hook_tableau((2, 1)), 1)


@pytest.mark.parametrize("T", list(all_tableaux(4, 2)), ids=str)
def test_intertwining_all_swaps(T):
    for k in range(1, T.n):
        try:
            adjacent_swap(T, k)
        except ValueError:
            continue
        assert check_intertwining(T, k)


def test_triple_regularity_and_control():
    assert check_triple_regularity(1)
    assert check_triple_regularity(-1)
    assert not single_factor_regular()
    with pytest.raises(ValueError):
        check_triple_regularity(0)


def test_two_one_value():
    F = evaluate_F(FusionSpec(hook_tableau((2, 1)))).element
    one = ONE
    d = Q * Q + one
    expected = {
        (1, 2, 3): Q / d, (1, 3, 2): -one / d, (2, 1, 3): -one / d,
        (2, 3, 1): one / (Q * d), (3, 1, 2): -Q, (3, 2, 1): one,
    }
    assert dict(F) == expected
