"""Quantum-sl2 workbench: family table, minimal polynomials, pair suite,
Taft certificates, automorphisms, normality."""

import random

import pytest

import hopfbench.coideal as co
import hopfbench.uqsl2 as uq


@pytest.fixture(scope="module")
def U3():
    return uq.UqContext(3)


@pytest.fixture(scope="module")
def U5():
    return uq.UqContext(5)


def test_context_rejects_bad_orders():
    with pytest.raises(ValueError):
        uq.UqContext(4)
    with pytest.raises(ValueError):
        uq.UqContext(2)
    with pytest.raises(ValueError):
        uq.UqContext(9, q_exp=3)


def test_generator_relations(U3):
    ctx = U3
    alg = ctx.algebra
    assert alg.dimension == 27
    q2 = ctx.qpow(2)
    assert ctx.K * ctx.E == ctx.E.scale(q2) * ctx.K
    assert ctx.K * ctx.Ftilde == ctx.Ftilde.scale(ctx.qpow(-2)) * ctx.K
    assert (ctx.E ** 3).is_zero()
    assert (ctx.Ftilde ** 3).is_zero()
    assert ctx.K ** 3 == alg.unit()
    # the classical divided generator: EF - FE = (K - K^{-1})/(q - q^{-1})
    coeff = (ctx.qpow(1) - ctx.qpow(-1)).inverse()
    rhs = (ctx.K - ctx.Kinv).scale(coeff)
    assert ctx.E * ctx.F - ctx.F * ctx.E == rhs


STANDARD_DIMS_N3 = {
    "full": 27,
    "Kr:1": 3,
    "Kr:3": 1,
    "KrE:1": 9,
    "KrE:3": 3,
    "KrF:1": 9,
    "KrF:3": 3,
    "E": 3,
}


def test_standard_families_n3(U3):
    for label, dim in STANDARD_DIMS_N3.items():
        fam = uq.parse_family(U3, label)
        rep = fam.verify(roundtrip=True)
        assert rep["ok"], (label, rep)
        assert rep["dim"] == dim, label


def test_parametric_families_n3(U3):
    F = U3.field
    q = F.q
    lam = q
    mu = ((F.one - U3.qpow(2)) * lam).inverse()
    samples = [
        ("pair", uq.pair_family(U3, lam, mu), 9),
        ("line(q,1)", uq.line_family(U3, q, F.one), 3),
        ("line(0,0)", uq.line_family(U3, F.zero, F.zero), 3),
        ("fline(q)", uq.fline_family(U3, q), 3),
    ]
    for label, fam, dim in samples:
        rep = fam.verify(roundtrip=True)
        assert rep["ok"], (label, rep)
        assert rep["dim"] == dim, label


def test_family_dims_n5(U5):
    for label, dim in [("full", 125), ("Kr:5", 1), ("KrE:1", 25),
                       ("KrF:5", 5), ("E", 5)]:
        fam = uq.parse_family(U5, label)
        rep = fam.verify()
        assert rep["ok"] and rep["dim"] == dim, (label, rep)


def test_pair_family_needs_unit_product(U3):
    F = U3.field
    with pytest.raises(ValueError):
        uq.pair_family(U3, F.one, F.one)


def test_unconstrained_pair_commutator(U3):
    # W V - q^2 V W = 1 + ((1-q^2) lam mu - 1) K^2 for V = E + lam K,
    # W = F~ + mu K; the pair family closes up properly exactly when the
    # K^2 coefficient dies.
    F = U3.field
    rng = random.Random(11)
    from hopfbench.cyclofield import random_scalar
    for _ in range(6):
        lam = random_scalar(F, rng, nonzero=True)
        mu = random_scalar(F, rng, nonzero=True)
        V = U3.E + U3.K.scale(lam)
        W = U3.Ftilde + U3.K.scale(mu)
        coeff = (F.one - U3.qpow(2)) * lam * mu - F.one
        rhs = U3.algebra.unit() + (U3.K * U3.K).scale(coeff)
        assert W * V - (V * W).scale(U3.qpow(2)) == rhs


def test_pair_suite(U3):
    F = U3.field
    for lam in (F.q, F.one + F.q):
        mu = ((F.one - U3.qpow(2)) * lam).inverse()
        rep = uq.pair_subalgebra_report(U3, lam, mu)
        assert rep["ok"], rep
        # the shifted ladder constant and shifted integral are forced
        assert rep["ladder_shift_required"]
        assert rep["integral_shift_required"]


def test_minimal_polynomial_matches_closed_form(U3):
    F = U3.field
    rng = random.Random(23)
    from hopfbench.cyclofield import random_scalar
    pts = [(F.q, F.one), (F.zero, F.one), (F.one, F.zero)]
    while len(pts) < 8:
        pts.append((random_scalar(F, rng), random_scalar(F, rng)))
    for alpha, beta in pts:
        if not alpha and not beta:
            continue
        u = U3.E + U3.Ftilde.scale(alpha) + U3.K.scale(beta)
        p = co.minimal_polynomial(U3.algebra, u)
        assert p == uq.predicted_line_polynomial(U3, alpha, beta)
        assert p.degree == 3


def test_line_semisimplicity_routes(U3):
    F = U3.field
    assert uq.line_semisimple(U3, F.q, F.one)
    assert uq.line_semisimple(U3, F.zero, F.one)
    assert not uq.line_semisimple(U3, F.zero, F.zero)  # <E> is nilpotent
    # degenerate sheet: alpha = (1-q^2)t^2, beta = (q^k + q^{-k}) t
    for t in (F.one, F.q):
        alpha = (F.one - U3.qpow(2)) * t * t
        for k in range(3):
            beta = (U3.qpow(k) + U3.qpow(-k)) * t
            assert uq.line_discriminant(U3, alpha, beta) == F.zero
            assert not uq.line_semisimple(U3, alpha, beta)
        # off the sheet the discriminant revives
        beta = (U3.qpow(0) + U3.qpow(0)) * t + F.one
        assert uq.line_discriminant(U3, alpha, beta) != F.zero


def test_maschke_failure_certificate(U3):
    for t in (U3.field.one, U3.field.q):
        rep = uq.maschke_report(U3, t)
        assert all(rep.values()), rep


def test_borel_taft_certificates(U3):
    for r in (1, 3):
        for side in ("e", "f"):
            rep = uq.borel_taft_report(U3, r, side)
            assert rep["ok"], (r, side, rep)


def test_taft_certificate_rejects_wrong_parameter(U3):
    fam = uq.parse_family(U3, "KrE:1")
    S = fam.closure()
    rep = co.check_taft_presentation(U3.algebra, S, U3.E, U3.K,
                                     U3.qpow(-2), 3, 3)
    assert not rep["ok"]
    assert not rep["commutation"]


def _adjoint_table_checks(ctx):
    alg = ctx.algebra
    K, E, Ft = ctx.K, ctx.E, ctx.Ftilde
    one = ctx.field.one
    ad = lambda x, h: co.adjoint_action(alg, x, h)
    unit = alg.unit()
    assert ad(K, K) == K
    assert ad(K, E) == (K * E).scale(one - ctx.qpow(-2))
    assert ad(K, Ft) == (K * Ft).scale(one - ctx.qpow(2))
    assert ad(E, K) == E.scale(ctx.qpow(-2))
    assert ad(E, E) == (E * E).scale(one - ctx.qpow(-2))
    assert ad(E, Ft) == (K * K - unit).scale(ctx.qpow(-2))
    assert ad(Ft, K) == Ft.scale(ctx.qpow(2))
    assert ad(Ft, E) == unit - K * K
    assert ad(Ft, Ft) == (Ft * Ft).scale(one - ctx.qpow(2))


def test_adjoint_action_table(U3, U5):
    _adjoint_table_checks(U3)
    _adjoint_table_checks(U5)


def test_only_trivial_families_are_normal(U3):
    rows = uq.normality_survey(U3)
    assert rows, "survey must not be empty"
    for row in rows:
        assert row["normal"] == row["trivial"], row
    # explicit witnesses for the two smallest non-normal families
    S_K = uq.parse_family(U3, "Kr:1").closure()
    assert not S_K.contains(co.adjoint_action(U3.algebra, U3.K, U3.E))
    S_KE = uq.parse_family(U3, "KrE:1").closure()
    assert not S_KE.contains(co.adjoint_action(U3.algebra, U3.K, U3.Ftilde))


def test_hopf_subalgebra_split(U3):
    yes = ["full", "Kr:1", "Kr:3", "KrE:1", "KrF:1"]
    no = ["E", "KrE:3", "line:q,1", "fline:1"]
    for label in yes:
        fam = uq.parse_family(U3, label)
        assert uq.is_hopf_subalgebra(U3, fam.closure()), label
    for label in no:
        fam = uq.parse_family(U3, label)
        assert not uq.is_hopf_subalgebra(U3, fam.closure()), label


def test_weight_twist_is_multiplicative_and_transports_lines(U3):
    F = U3.field
    rng = random.Random(5)
    for c in (F.q, F.one + F.q):
        tw = lambda u: uq.weight_twist(U3, c, u)
        for _ in range(5):
            u = U3.algebra.random_element(rng, terms=3)
            v = U3.algebra.random_element(rng, terms=3)
            assert tw(u * v) == tw(u) * tw(v)
            assert tw(u + v) == tw(u) + tw(v)
        assert tw(U3.K) == U3.K
        # twist moves the line parameters (alpha, beta) -> (c^2 alpha, c beta)
        alpha, beta = F.q, F.one
        src = uq.line_family(U3, alpha, beta).closure()
        dst = uq.line_family(U3, c * c * alpha, c * beta).closure()
        twisted = co.span(U3.algebra, [tw(b) for b in src.basis()])
        assert twisted == dst


def test_weight_twist_inverse(U3):
    F = U3.field
    c = F.q
    rng = random.Random(8)
    u = U3.algebra.random_element(rng, terms=4)
    assert uq.weight_twist(U3, c.inverse(), uq.weight_twist(U3, c, u)) == u


def test_swap_map_between_opposite_contexts():
    dst = uq.UqContext(3)
    src = uq.UqContext(3, q_exp=2)  # q' = q^{-1}
    rng = random.Random(13)
    for _ in range(5):
        u = src.algebra.random_element(rng, terms=3)
        v = src.algebra.random_element(rng, terms=3)
        assert (uq.swap_image(src, dst, u * v)
                == uq.swap_image(src, dst, u) * uq.swap_image(src, dst, v))
    assert uq.swap_image(src, dst, src.K) == dst.K
    # <E' + alpha K'> lands on the F-side line with beta = alpha (q - q^{-1})
    F = dst.field
    alpha = F.q
    srcfam = uq.line_family(src, src.field.zero, alpha)
    image = co.span_closure(dst.algebra,
                            [uq.swap_image(src, dst, g)
                             for g in srcfam.generators])
    beta = alpha * (dst.qpow(1) - dst.qpow(-1))
    assert image == uq.fline_family(dst, beta).closure()


def test_swap_requires_opposite_exponents(U3):
    with pytest.raises(ValueError):
        uq.swap_image(U3, U3, U3.K)


def test_family_grammar(U3):
    from hopfbench.cyclofield import format_scalar
    for label in ("full", "E", "Kr:1", "KrE:3", "KrF:1", "line:q,1",
                  "fline:q^2"):
        fam = uq.parse_family(U3, label)
        assert fam.verify()["ok"], label
    F = U3.field
    lam = F.q
    mu = ((F.one - U3.qpow(2)) * lam).inverse()
    fam = uq.parse_family(U3, "pair:q,%s" % format_scalar(mu))
    assert fam.verify()["ok"]
    for bad in ("Kr:2", "nosuch", "line:q", "Kr:0", "pair:1,1"):
        with pytest.raises(ValueError):
            uq.parse_family(U3, bad)
