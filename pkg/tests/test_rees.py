import pytest

from cancelkit.errors import BadRegularSequence, NotGraded
from cancelkit.fields import PrimeField
from cancelkit.ideals import Ideal
from cancelkit.rees import (graded_piece, is_syzygetic,
                            lemma_prefix_relations_check, rees_presentation,
                            t_degree)
from cancelkit.ring import Ring
from cancelkit.fixtures import monomial_curve

import oracle


@pytest.fixture
def R():
    return Ring(PrimeField(32003), ["x", "y"])


def test_presentation_of_maximal_ideal(R):
    x, y = R.gens()
    pres = rees_presentation(Ideal(R, [x, y]))
    gb = list(pres.Q.groebner().generators)
    assert len(gb) == 1
    # the single Koszul relation y*T1 - x*T2, up to normalization
    S = pres.s_ring
    koszul = S.poly("y*T1") - S.poly("x*T2")
    assert pres.Q.contains_poly(koszul)
    assert pres.analytic_spread == 2
    assert pres.analytic_deviation == 0  # the maximal ideal has height 2


def test_veronese_fiber(R):
    x, y = R.gens()
    I = Ideal(R, [x * x, x * y, y * y])
    pres = rees_presentation(I)
    fiber = list(pres.fiber_ideal.groebner().generators)
    assert len(fiber) == 1
    T = fiber[0].ring
    assert fiber[0] == T.poly("T2^2") - T.poly("T1*T3")
    assert pres.analytic_spread == 2
    rep = is_syzygetic(I)
    assert not rep.is_syzygetic
    assert len(rep.offenders) == 1


def test_linear_type_curve():
    I = monomial_curve((1, 2, 3))
    pres = rees_presentation(I)
    # complete intersection: single linear relation, fiber is a polynomial
    # ring, spread = height
    assert pres.analytic_spread == 2
    assert pres.analytic_deviation == 0
    assert is_syzygetic(I).is_syzygetic
    assert graded_piece(pres.Q, 2, pres.base_count) == [] or all(
        Ideal(pres.s_ring, pres.graded_piece(1)).contains_poly(q)
        for q in pres.graded_piece(2))


def test_monomial_curve_345_spread():
    I = monomial_curve((3, 4, 5))
    pres = rees_presentation(I)
    assert pres.analytic_spread == 3
    assert pres.analytic_deviation == 1
    assert is_syzygetic(I).is_syzygetic


def test_t_degree_and_grading(R):
    x, y = R.gens()
    pres = rees_presentation(Ideal(R, [x, y]))
    for g in pres.Q.groebner().generators:
        assert t_degree(g, pres.base_count) >= 1
    S = pres.s_ring
    with pytest.raises(NotGraded):
        t_degree(S.poly("T1+T1*T2"), pres.base_count)
    assert t_degree(S.poly("x*y"), pres.base_count) == 0


def test_presentation_ideal_contains_koszul_relations(R):
    x, y = R.gens()
    I = Ideal(R, [x * x, x * y, y * y])
    pres = rees_presentation(I)
    S = pres.s_ring
    # a_j T_i - a_i T_j is always a relation
    gens = I.generators
    for i in range(3):
        for j in range(3):
            if i == j:
                continue
            from cancelkit.ring import embed
            ai = embed(gens[i], S, [0, 1])
            aj = embed(gens[j], S, [0, 1])
            rel = aj * S.var(2 + i) - ai * S.var(2 + j)
            assert pres.Q.contains_poly(rel)


def test_fiber_matches_oracle(R):
    x, y = R.gens()
    I = Ideal(R, [x * x, x * y, y * y])
    pres = rees_presentation(I)
    fiber_gens = list(pres.fiber_ideal.generators)
    T = pres.fiber_ideal.ring
    expected = [T.poly("T2^2") - T.poly("T1*T3")]
    assert oracle.ideals_equal_upto_degree(fiber_gens, expected, 4)


def test_lemma_prefix_relations(R):
    x, y = R.gens()
    I = monomial_curve((1, 2, 3))
    prefix = tuple(I.generators[:2])
    assert lemma_prefix_relations_check(I, prefix)
    with pytest.raises(BadRegularSequence):
        lemma_prefix_relations_check(I, (I.generators[1],))
    J = Ideal(R, [x * x, x * y])  # x*y is not regular mod x*x
    with pytest.raises(BadRegularSequence):
        lemma_prefix_relations_check(J, (J.generators[0], J.generators[1]))


def test_name_collision_rejected():
    R = Ring(PrimeField(32003), ["T1", "y"])
    T1, y = R.gens()
    from cancelkit.errors import ArityMismatch
    with pytest.raises(ArityMismatch):
        rees_presentation(Ideal(R, [T1, y]))
