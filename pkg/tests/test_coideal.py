"""Subspace machinery, closures, extraction roundtrips, integrals, minpolys."""

import random

import pytest

from hopfbench.cyclofield import make_context, random_scalar
from hopfbench.pointed_hopf import (AbelianGroup, Character, LiftingDatum,
                                    PointedHopfAlgebra)
import hopfbench.coideal as co


def uq_datum(N, linked=True):
    F = make_context(N)
    G = AbelianGroup((N,))
    lam = {(0, 1): F.one} if linked else None
    return LiftingDatum(F, G, [G.generator(0)] * 2,
                        [Character(F, G, [2]), Character(F, G, [-2])],
                        lam=lam)


def rank_one_datum():
    # order-9 group, chi of order 3, lifted root vector x^3 = 1 - g^3
    F = make_context(9)
    G = AbelianGroup((9,))
    return LiftingDatum(F, G, [G.generator(0)], [Character(F, G, [3])],
                        mu=[1])


@pytest.fixture(scope="module")
def U3():
    return PointedHopfAlgebra(uq_datum(3))


def _gens(U):
    return (U.x(0), U.x(1), U.grouplike(U.group.generator(0)))


# -- subspace mechanics ------------------------------------------------------


def test_subspace_insert_reduce_contains(U3):
    rng = random.Random(7)
    vs = [U3.random_element(rng, terms=4) for _ in range(6)]
    S = co.Subspace(U3, vs)
    assert 0 < S.dim <= 6
    for v in vs:
        assert S.contains(v)
        assert S.reduce(v).is_zero()
    # re-inserting the basis does not grow the space
    d = S.dim
    for b in S.basis():
        assert S.insert(b) is None
    assert S.dim == d
    # residues are reduced: inserting a residue grows by one or not at all
    w = U3.random_element(rng, terms=5)
    r = S.reduce(w)
    if not r.is_zero():
        S2 = S.copy()
        assert S2.insert(r) is not None
        assert S2.dim == d + 1
        assert S2.contains(w)


def test_subspace_canonical_equality(U3):
    rng = random.Random(11)
    vs = [U3.random_element(rng, terms=3) for _ in range(4)]
    A = co.Subspace(U3, vs)
    B = co.Subspace(U3, list(reversed(vs)))
    assert A == B
    # a random invertible recombination spans the same space
    C = co.Subspace(U3, [vs[0] + vs[1].scale(U3.field.q), vs[1], vs[2],
                         vs[3] - vs[0]])
    assert A == C


def test_echelon_rows_are_fully_reduced(U3):
    rng = random.Random(13)
    S = co.Subspace(U3, [U3.random_element(rng, terms=5) for _ in range(7)])
    pivots = set(S.rows)
    for p, row in S.rows.items():
        assert row[p].is_one()
        for k in row:
            if k != p:
                assert k not in pivots


# -- closures and coideal checks ---------------------------------------------


def test_closure_dimensions(U3):
    E, Ft, K = _gens(U3)
    assert co.span_closure(U3, [E]).dim == 3
    assert co.span_closure(U3, [K]).dim == 3
    assert co.span_closure(U3, [K, E]).dim == 9
    assert co.span_closure(U3, [K, E, Ft]).dim == 27


def test_closure_dimension_guard(U3):
    E, Ft, K = _gens(U3)
    with pytest.raises(RuntimeError):
        co.span_closure(U3, [K, E, Ft], max_dim=9)


def test_family_closures_are_coideal_subalgebras(U3):
    E, Ft, K = _gens(U3)
    for gens in ([E], [Ft], [K], [K, E], [K, Ft], [K, E, Ft]):
        S = co.span_closure(U3, gens)
        assert co.is_subalgebra(U3, S)
        full = co.is_right_coideal(U3, S)
        fast = co.closure_is_right_coideal(U3, S, gens)
        assert full and fast


def test_skew_derivations_stabilize_coideals_even_when_linked(U3):
    # the skew derivations are hit-actions of functionals, so every right
    # coideal of the lifted algebra is stable under them
    E, Ft, K = _gens(U3)
    for gens in ([E], [K, Ft], [E + K.scale(U3.field.q)]):
        S = co.span_closure(U3, gens)
        assert co.partials_stabilize(U3, S)


def test_twisted_generator_is_not_a_coideal(U3):
    # K^{-1} x_2 generates a subalgebra that is not a right coideal, and the
    # skew derivation pushes it out: D_2(K^{-1} x_2) = q^2 K^{-1}
    E, Ft, K = _gens(U3)
    Kinv = U3.grouplike(U3.group.neg(U3.group.generator(0)))
    Fc = Kinv * Ft
    S = co.span_closure(U3, [Fc])
    assert S.dim == 3
    assert not co.is_right_coideal(U3, S)
    assert not co.partials_stabilize(U3, S)
    d = U3.partial_derivative(1, Fc)
    assert d == Kinv.scale(U3.field.q_power(2))
    assert not S.contains(d)


def test_fast_and_full_coideal_checks_agree_on_non_coideals(U3):
    E, Ft, K = _gens(U3)
    Kinv = U3.grouplike(U3.group.neg(U3.group.generator(0)))
    gens = [Kinv * Ft]
    S = co.span_closure(U3, gens)
    assert co.closure_is_right_coideal(U3, S, gens) == \
        co.is_right_coideal(U3, S) == False  # noqa: E712


# -- group part ---------------------------------------------------------------


def test_intersect_with_group(U3):
    E, Ft, K = _gens(U3)
    assert co.intersect_with_group(U3, co.span_closure(U3, [K, E])) == \
        [(0,), (1,), (2,)]
    assert co.intersect_with_group(U3, co.span_closure(U3, [E])) == [(0,)]


def test_intersect_with_group_rejects_non_grouplike_rows(U3):
    g = U3.grouplike(U3.group.generator(0))
    S = co.Subspace(U3, [U3.unit() + g])
    with pytest.raises(ValueError):
        co.intersect_with_group(U3, S)


def test_similarity_classes(U3):
    # over the trivial subgroup everything with equal group data merges
    assert co.similarity_classes(U3, [U3.group.identity]) == [(0, 1)]
    # over the full group the characters differ, so the indices split
    allG = list(U3.group.elements)
    assert co.similarity_classes(U3, allG) == [(0,), (1,)]


# -- extraction ---------------------------------------------------------------


def test_extraction_frozen_examples(U3):
    E, Ft, K = _gens(U3)
    q = U3.field.q

    S = co.span_closure(U3, [K, E])
    rd = co.extract_reduced_datum(U3, S)
    assert rd.group_elements == ((0,), (1,), (2,))
    assert rd.classes == (((0,), ((U3.field.one,
                                   U3.field.zero),)), ((1,), ()))
    assert rd.closure() == S

    S2 = co.span_closure(U3, [E + K.scale(q)])
    rd2 = co.extract_reduced_datum(U3, S2)
    assert rd2.group_elements == ((0,),)
    ((idx, rows),) = rd2.classes
    assert idx == (0, 1)
    assert rows == ((U3.field.one, U3.field.zero, q),)
    assert rd2.closure() == S2


def test_extraction_of_constrained_pair(U3):
    E, Ft, K = _gens(U3)
    F = U3.field
    lam = F.q
    mu = ((F.one - F.q_power(2)) * lam).inverse()
    gens = [E + K.scale(lam), Ft + K.scale(mu)]
    S = co.span_closure(U3, gens)
    assert S.dim == 9
    assert co.intersect_with_group(U3, S) == [(0,)]
    rd = co.extract_reduced_datum(U3, S)
    ((idx, rows),) = rd.classes
    assert idx == (0, 1)
    assert len(rows) == 2
    assert rd.closure() == S


def test_unconstrained_pair_closes_to_everything(U3):
    E, Ft, K = _gens(U3)
    F = U3.field
    gens = [E + K.scale(F.q), Ft + K.scale(F.q_power(2))]
    S = co.span_closure(U3, gens)
    assert S.dim == 27
    rd = co.extract_reduced_datum(U3, S)
    assert len(rd.group_elements) == 3
    assert rd.closure() == S


def _random_xi_generators(alg, rng):
    group = alg.group
    pool = group.elements
    gens = [pool[rng.randrange(len(pool))] for _ in range(rng.randrange(3))]
    G = group.subgroup(gens)
    xis = []
    for idx in co.similarity_classes(alg, G):
        for _ in range(rng.randrange(len(idx) + 1)):
            coeffs = [random_scalar(alg.field, rng) for _ in idx]
            if not any(coeffs):
                coeffs[rng.randrange(len(idx))] = alg.field.q
            xis.append(co.xi_element(alg, list(idx), coeffs,
                                     random_scalar(alg.field, rng)))
    return [alg.grouplike(g) for g in G if g != group.identity] + xis


@pytest.mark.parametrize("datum", [uq_datum(3), uq_datum(3, linked=False),
                                   rank_one_datum()],
                         ids=["linked", "graded", "rank-one"])
def test_extraction_roundtrip_random(datum):
    alg = PointedHopfAlgebra(datum)
    rng = random.Random(2026)
    for _ in range(35):
        gens = _random_xi_generators(alg, rng)
        S = co.span_closure(alg, gens)
        assert co.closure_is_right_coideal(alg, S, gens)
        rd = co.extract_reduced_datum(alg, S)
        assert rd.closure() == S
        cond = co.reduced_datum_conditions(rd)
        assert all(cond.values()), cond


def test_extraction_rejects_random_subspace(U3):
    rng = random.Random(5)
    S = co.Subspace(U3, [U3.random_element(rng, terms=4) for _ in range(5)])
    with pytest.raises(ValueError):
        co.extract_reduced_datum(U3, S)


# -- integrals ----------------------------------------------------------------


def test_right_integral_examples(U3):
    E, Ft, K = _gens(U3)
    SK = co.span_closure(U3, [K])
    lam = co.right_integral(U3, SK, [K])
    assert lam == U3.unit() + K + K * K

    SE = co.span_closure(U3, [E])
    assert co.right_integral(U3, SE, [E]) == E * E

    SB = co.span_closure(U3, [K, E])
    lam2 = co.right_integral(U3, SB, [K, E])
    # generator route and full-row route agree
    assert lam2 == co.right_integral(U3, SB)
    # and it really integrates: lam * u = eps(u) lam over the basis
    for b in SB.basis():
        assert lam2 * b == lam2.scale(U3.counit(b))


def test_right_integral_unique_normalization(U3):
    E, Ft, K = _gens(U3)
    S = co.span_closure(U3, [K])
    lam = co.right_integral(U3, S)
    first = min(lam.terms, key=U3.key_index.__getitem__)
    assert lam.terms[first].is_one()


def test_right_integral_error_on_non_algebra(U3):
    g = U3.grouplike(U3.group.generator(0))
    S = co.Subspace(U3, [U3.unit(), g])  # not multiplicatively closed
    with pytest.raises(ValueError):
        co.right_integral(U3, S)


# -- minimal polynomials ------------------------------------------------------


def test_minimal_polynomial_examples(U3):
    E, Ft, K = _gens(U3)
    F = U3.field
    assert co.minimal_polynomial(U3, K).format() == "X^3 - 1"
    assert co.minimal_polynomial(U3, E).format() == "X^3"
    assert co.minimal_polynomial(U3, E + K).format() == "X^3 - 1"
    assert co.minimal_polynomial(U3, U3.unit()).format() == "X - 1"
    assert co.minimal_polynomial(U3, U3.zero()).format() == "X"


def test_minimal_polynomial_annihilates_and_is_minimal(U3):
    rng = random.Random(17)
    for _ in range(6):
        u = U3.random_element(rng, terms=3)
        p = co.minimal_polynomial(U3, u)
        assert p.leading().is_one()
        # evaluate p at u inside the algebra
        acc = U3.zero()
        pw = U3.unit()
        for c in p.coeffs:
            acc = acc + pw.scale(c)
            pw = pw * u
        assert acc.is_zero()
        # no proper divisor of smaller degree annihilates: powers up to
        # deg-1 stay independent
        S = co.Subspace(U3)
        v = U3.unit()
        for _ in range(p.degree):
            assert S.insert(v) is not None
            v = v * u


# -- adjoint action and normality ---------------------------------------------


def test_adjoint_is_a_right_action(U3):
    rng = random.Random(23)
    for _ in range(5):
        x = U3.random_element(rng, terms=2)
        u = U3.random_element(rng, terms=2)
        v = U3.random_element(rng, terms=2)
        lhs = co.adjoint_action(U3, x, u * v)
        rhs = co.adjoint_action(U3, co.adjoint_action(U3, x, u), v)
        assert lhs == rhs
    assert co.adjoint_action(U3, x, U3.unit()) == x


def test_normality_survey_small(U3):
    E, Ft, K = _gens(U3)
    gens = [K, E, Ft]
    assert co.is_normal(U3, co.span_closure(U3, gens), gens)
    for sub in ([K], [E], [K, E], [K, Ft]):
        S = co.span_closure(U3, sub)
        assert not co.is_normal(U3, S, gens)
        assert co.is_normal(U3, S, gens) == co.is_normal(U3, S)


# -- presentation certificates -------------------------------------------------


def test_taft_certificate(U3):
    E, Ft, K = _gens(U3)
    S = co.span_closure(U3, [K, E])
    rep = co.check_taft_presentation(U3, S, E, K, U3.field.q_power(2), 3, 3)
    assert rep["ok"], rep
    # wrong commutation parameter must be caught
    bad = co.check_taft_presentation(U3, S, E, K, U3.field.q, 3, 3)
    assert not bad["commutation"] and not bad["ok"]


# -- kernels and lattice -------------------------------------------------------


def test_kernel_intersection(U3):
    d0 = lambda u: U3.partial_derivative(0, u)  # noqa: E731
    d1 = lambda u: U3.partial_derivative(1, u)  # noqa: E731
    K1 = co.kernel_intersection(U3, [d0])
    assert K1.dim == 9
    K12 = co.kernel_intersection(U3, [d0, d1])
    assert K12.dim == 3
    assert co.kernel_intersection(U3, [d1], domain=K1) == K12
    for row in K12.basis():
        assert d0(row).is_zero() and d1(row).is_zero()


def test_lattice_operations(U3):
    E, Ft, K = _gens(U3)
    SB = co.span_closure(U3, [K, E])
    SE = co.span_closure(U3, [E])
    SK = co.span_closure(U3, [K])
    assert co.intersect_subspaces(SB, SE) == SE
    assert co.join_subalgebras(SK, SE) == SB
    assert co.intersect_subspaces(SE, SK).dim == 1  # just the unit line


def test_zassenhaus_dimension_formula(U3):
    rng = random.Random(31)
    for _ in range(5):
        X = co.Subspace(U3, [U3.random_element(rng, terms=3)
                             for _ in range(4)])
        Y = co.Subspace(U3, [U3.random_element(rng, terms=3)
                             for _ in range(4)])
        I = co.intersect_subspaces(X, Y)
        U_plus = co.Subspace(U3, X.basis() + Y.basis())
        assert I.dim + U_plus.dim == X.dim + Y.dim
        for v in I.basis():
            assert X.contains(v) and Y.contains(v)
