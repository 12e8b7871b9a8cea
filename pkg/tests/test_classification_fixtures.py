"""Fixture classifications for two small pointed algebras: the rank-one
family (with a lifted root-vector relation at order nine) and the graded
two-generator algebra, checking dimensions and group intersections for every
family shape."""

import pytest

from hopfbench.cyclofield import make_context
from hopfbench.pointed_hopf import (AbelianGroup, Character, LiftingDatum,
                                    PointedHopfAlgebra)
import hopfbench.coideal as co


@pytest.fixture(scope="module")
def taft3():
    # single skew-primitive x, chi(g) = q of full order: x^3 = 0
    F = make_context(3)
    G = AbelianGroup((3,))
    return PointedHopfAlgebra(LiftingDatum(F, G, [G.generator(0)],
                                           [Character(F, G, [1])]))


@pytest.fixture(scope="module")
def graded3():
    # two skew-primitives over the same grouplike, opposite characters
    F = make_context(3)
    G = AbelianGroup((3,))
    return PointedHopfAlgebra(LiftingDatum(
        F, G, [G.generator(0)] * 2,
        [Character(F, G, [2]), Character(F, G, [-2])]))


@pytest.fixture(scope="module")
def lifted9():
    # order-9 group, chi of order 3, lifted relation x^3 = 1 - g^3
    F = make_context(9)
    G = AbelianGroup((9,))
    return PointedHopfAlgebra(LiftingDatum(F, G, [G.generator(0)],
                                           [Character(F, G, [3])], mu=[1]))


def _family(alg, gens):
    S = co.span_closure(alg, gens)
    assert co.closure_is_right_coideal(alg, S, gens)
    return S, co.intersect_with_group(alg, S)


# -- rank-one, unlifted (x^N = 0) --------------------------------------------


def test_rank_one_family_table(taft3):
    H = taft3
    x = H.x(0)
    g = H.grouplike((1,))
    q = H.field.q
    e = [(0,)]
    full_gamma = [(0,), (1,), (2,)]
    table = [
        ([g], 3, full_gamma),
        ([g, x], 9, full_gamma),
        ([H.grouplike((0,))], 1, e),
        ([x], 3, e),
        ([x + g.scale(q)], 3, e),
        ([x + g], 3, e),
    ]
    for gens, dim, gamma in table:
        S, got = _family(H, gens)
        assert S.dim == dim
        assert got == gamma


def test_rank_one_generator_power_vanishes(taft3):
    H = taft3
    q = H.field.q
    v = H.x(0) + H.grouplike((1,)).scale(q)
    # binomial cross terms die, x^3 = 0 and (qg)^3 = q^3 = 1
    assert v ** 3 == H.unit()


def test_rank_one_extraction_roundtrip(taft3):
    H = taft3
    v = H.x(0) + H.grouplike((1,)).scale(H.field.q)
    S = co.span_closure(H, [v])
    rd = co.extract_reduced_datum(H, S)
    assert co.span_closure(H, rd.generators()) == S


# -- rank-one, lifted at order nine (x^3 = 1 - g^3) --------------------------


def test_lifted_power_identity(lifted9):
    H = lifted9
    F = H.field
    g = H.grouplike((1,))
    g3 = H.grouplike((3,))
    for lam in (F.one, F.q, F.zero):
        v = H.x(0) + g.scale(lam)
        rhs = H.unit() + g3.scale(lam ** 3 - F.one)
        assert v ** 3 == rhs


def test_lifted_group_growth_condition(lifted9):
    # closure of <v_lam> keeps the trivial group intersection exactly when
    # lam^3 equals the lifting constant 1; otherwise g^3 sneaks in
    H = lifted9
    F = H.field
    g = H.grouplike((1,))
    sub3 = [(0,), (3,), (6,)]
    v = H.x(0) + g.scale(F.one)
    S, gamma = _family(H, [v])
    assert S.dim == 3 and gamma == [(0,)]
    for lam in (F.q, F.zero):
        S, gamma = _family(H, [H.x(0) + g.scale(lam)])
        assert S.dim == 9 and gamma == sub3
    # with g^3 adjoined from the start any lam is allowed
    for lam in (F.q, F.zero, F.one + F.q):
        S, gamma = _family(H, [H.grouplike((3,)), H.x(0) + g.scale(lam)])
        assert S.dim == 9 and gamma == sub3
    # r = 1 forces the bare generator (chi is non-trivial on <g>)
    S, gamma = _family(H, [g, H.x(0)])
    assert S.dim == 27 and gamma == sorted(H.group.elements)


def test_lifted_roundtrips(lifted9):
    H = lifted9
    F = H.field
    g = H.grouplike((1,))
    for gens in ([H.x(0) + g.scale(F.one)],
                 [H.x(0) + g.scale(F.q)],
                 [H.grouplike((3,)), H.x(0)]):
        S = co.span_closure(H, gens)
        rd = co.extract_reduced_datum(H, S)
        assert co.span_closure(H, rd.generators()) == S


# -- graded two-generator algebra --------------------------------------------


def test_graded_family_table(graded3):
    H = graded3
    F = H.field
    q = F.q
    x1, x2 = H.x(0), H.x(1)
    g = H.grouplike((1,))
    e = [(0,)]
    full_gamma = [(0,), (1,), (2,)]
    table = [
        ([g], 3, full_gamma),
        ([g, x1], 9, full_gamma),
        ([g, x2], 9, full_gamma),
        ([g, x1, x2], 27, full_gamma),
        ([x1 + x2 + g], 3, e),           # mixed line, alpha = beta = 1
        ([x1 + x2.scale(q)], 3, e),      # mixed line, beta = 0
        ([x2 + g.scale(q)], 3, e),       # second-generator line
        ([x1 + g.scale(q), x2], 9, e),   # pair, beta = 0
        ([x1, x2 + g.scale(q)], 9, e),   # pair, alpha = 0
        ([x1, x2], 9, e),                # pair at the origin
    ]
    for gens, dim, gamma in table:
        S, got = _family(H, gens)
        assert S.dim == dim, (dim, S.dim)
        assert got == gamma


def test_graded_pair_commutation_iff_one_constant_vanishes(graded3):
    H = graded3
    F = H.field
    q = F.q
    x1, x2 = H.x(0), H.x(1)
    g = H.grouplike((1,))
    for alpha, beta in ((F.zero, q), (q, F.zero), (F.zero, F.zero)):
        v = x1 + g.scale(alpha)
        w = x2 + g.scale(beta)
        assert w * v == (v * w).scale(q ** 2)
        assert v ** 3 == H.unit().scale(alpha ** 3)
        assert w ** 3 == H.unit().scale(beta ** 3)
    # with both constants alive a grouplike term appears and the closure
    # swallows the whole algebra
    for alpha, beta in ((F.one, F.one), (q, F.one + q)):
        v = x1 + g.scale(alpha)
        w = x2 + g.scale(beta)
        gap = (alpha * beta * (F.one - q ** 2))
        assert w * v - (v * w).scale(q ** 2) == H.grouplike((2,)).scale(gap)
        S, gamma = _family(H, [v, w])
        assert S.dim == 27
        assert gamma == sorted(H.group.elements)


def test_graded_similarity_classes_merge_without_group(graded3):
    H = graded3
    assert co.similarity_classes(H, [(0,)]) == [(0, 1)]
    assert co.similarity_classes(H, [(0,), (1,), (2,)]) == [(0,), (1,)]
