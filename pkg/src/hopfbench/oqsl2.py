"""The finite quantized coordinate ring dual to the restricted quantum sl2.

The algebra carries the matrix-generator presentation (a, b, c, d with the
quantized determinant relation and a^N = d^N = 1, b^N = c^N = 0) but is
stored on the monomial basis b^i c^j d^k, where the product rule is closed
form and a = (1 + q^{-1} b c) d^{-1} is eliminated.  On top of the Hopf
structure the module provides

  * the Hopf pairing with the quantum sl2 context, induced by the
    two-dimensional representation of the latter, and both module actions
    (f <- u by comultiplying f, u -> f by pairing the right leg);
  * the alternate monomial family x^i y^j z^k (x = b d^{-1}, y = c d,
    z = d^2) with the exact change of basis, the weight-space filtration
    it induces, and recursion oracles that arbitrate the printed closed
    forms of the generator actions;
  * the dagger correspondence sending a right coideal subalgebra A of the
    quantum sl2 context to the subalgebra of functions annihilated by A,
    computed along two independent routes (integral sweep and annihilator
    solve) that must agree;
  * report generators for the classified dagger families, the Taft-type
    presentation certificates, the swap to the inverse root of unity, the
    normality survey, and the worked module-action examples.

The element protocol (field, unit, _key_mul, key index) matches the lifting
algebra, so the whole subspace / coideal toolbox applies unchanged.
"""

import math

from .cyclofield import (CycScalar, Poly, format_scalar, make_context,
                         q_factorial, q_integer)
from .pointed_hopf import Element, TensorElement, _atomic
from . import coideal
from . import uqsl2


class OqContext:
    """Quantized functions on SL2 at the odd root of unity zeta^q_exp.

    Doubles as its own algebra object (the attribute ``algebra`` is the
    context itself) so that the generic subspace machinery and the quantum
    sl2 helpers that expect a ``ctx.algebra`` both work on it.
    """

    def __init__(self, N, q_exp=1):
        if N < 3 or N % 2 == 0:
            raise ValueError("the order must be an odd integer >= 3")
        if math.gcd(q_exp, N) != 1:
            raise ValueError("q_exp must be invertible mod %d to give a "
                             "primitive root" % N)
        self.N = N
        self.q_exp = q_exp % N
        self.field = make_context(N)
        self.q = self.field.q_power(self.q_exp)
        self.algebra = self
        keys = [(i, j, k) for i in range(N) for j in range(N)
                for k in range(N)]
        keys.sort(key=lambda key: (-sum(key), tuple(-e for e in key)))
        self.keys_in_order = keys
        self.key_index = {k: i for i, k in enumerate(keys)}
        self.dimension = len(keys)
        self.one_key = (0, 0, 0)
        self._delta_memo = {}
        self._antipode_memo = {}
        self._act_e_memo = {}
        self._act_f_memo = {}
        self._ftilde_memo = {}
        self._word_memo = {}
        self._xyz_memo = {}
        self._a_pow_memo = {}
        one = self.field.one
        self.b = Element(self, {(1, 0, 0): one})
        self.c = Element(self, {(0, 1, 0): one})
        self.d = Element(self, {(0, 0, 1): one})
        self.d_inv = Element(self, {(0, 0, N - 1): one})
        bc = self.b * self.c
        self.a = (self.unit() + bc.scale(self.qpow(-1))) * self.d_inv
        geom = self.zero()
        step = self.unit()
        for _ in range(N):
            geom = geom + step
            step = step * bc.scale(-self.qpow(-1))
        self.a_inv = self.d * geom
        if self.a * self.a_inv != self.unit():
            raise AssertionError("inverse of the eliminated generator "
                                 "failed its defining identity")
        self.x = self.b * self.d_inv
        self.y = self.c * self.d
        self.z = self.d * self.d
        self._two_inv = pow(2, -1, N)

    def qpow(self, k):
        return self.field.q_power(self.q_exp * k)

    def __repr__(self):
        return "OqContext(N=%d, q_exp=%d)" % (self.N, self.q_exp)

    # -- algebra protocol ----------------------------------------------------

    def zero(self):
        return Element(self)

    def unit(self):
        return Element(self, {self.one_key: self.field.one})

    def monomial(self, key, coeff=1):
        if not isinstance(coeff, CycScalar):
            coeff = self.field.scalar(coeff)
        i, j, k = key
        if not (0 <= i < self.N and 0 <= j < self.N):
            return Element(self)
        return Element(self, {(i, j, k % self.N): coeff})

    def _key_mul(self, k1, k2):
        """(b^i c^j d^k)(b^i' c^j' d^k') = q^{k(i'+j')} b^{i+i'} c^{j+j'}
        d^{k+k'}; the nilpotent exponents overflow to zero, d wraps."""
        (i1, j1, k1_), (i2, j2, k2_) = k1, k2
        if i1 + i2 >= self.N or j1 + j2 >= self.N:
            return {}
        tw = self.qpow(k1_ * (i2 + j2))
        return {(i1 + i2, j1 + j2, (k1_ + k2_) % self.N): tw}

    def multiply(self, u, v):
        return u * v

    # -- Hopf structure ------------------------------------------------------

    def _generator_coproducts(self):
        out = getattr(self, "_gen_delta", None)
        if out is not None:
            return out

        def tens(pairs):
            acc = TensorElement(self)
            for u, v in pairs:
                terms = {}
                for ku, cu in u.terms.items():
                    for kv, cv in v.terms.items():
                        terms[(ku, kv)] = cu * cv
                acc = acc + TensorElement(self, terms)
            return acc

        out = {
            "b": tens([(self.a, self.b), (self.b, self.d)]),
            "c": tens([(self.c, self.a), (self.d, self.c)]),
            "d": tens([(self.c, self.b), (self.d, self.d)]),
        }
        self._gen_delta = out
        return out

    def comultiply_key(self, key):
        out = self._delta_memo.get(key)
        if out is not None:
            return out
        i, j, k = key
        if i == 0 and j == 0 and k == 0:
            out = [(self.one_key, self.one_key, self.field.one)]
            self._delta_memo[key] = out
            return out
        gen = self._generator_coproducts()
        if k > 0:
            prefix, letter = (i, j, k - 1), "d"
        elif j > 0:
            prefix, letter = (i, j - 1, 0), "c"
        else:
            prefix, letter = (i - 1, 0, 0), "b"
        acc = TensorElement(
            self, {(lk, rk): c for lk, rk, c in self.comultiply_key(prefix)})
        acc = acc * gen[letter]
        out = [(lk, rk, c) for (lk, rk), c in acc.terms.items()]
        self._delta_memo[key] = out
        return out

    def comultiply(self, u):
        out = {}
        for key, c in u.terms.items():
            for lk, rk, w in self.comultiply_key(key):
                k = (lk, rk)
                s = out.get(k)
                s = c * w if s is None else s + c * w
                if s:
                    out[k] = s
                else:
                    out.pop(k, None)
        return TensorElement(self, out)

    def counit_key(self, key):
        i, j, _ = key
        return self.field.one if i == 0 and j == 0 else self.field.zero

    def counit(self, u):
        out = self.field.zero
        for (i, j, _), c in u.terms.items():
            if i == 0 and j == 0:
                out = out + c
        return out

    def _a_power(self, k):
        out = self._a_pow_memo.get(k)
        if out is None:
            out = self.unit() if k == 0 else self._a_power(k - 1) * self.a
            self._a_pow_memo[k] = out
        return out

    def antipode_key(self, key):
        """S reverses products; on the generators S(a) = d, S(b) = -q b,
        S(c) = -q^{-1} c, S(d) = a (derived from the antipode axiom, checked
        by hopf_axiom_report)."""
        out = self._antipode_memo.get(key)
        if out is not None:
            return out
        i, j, k = key
        acc = self._a_power(k) * Element(self, {(i, j, 0): self.field.one})
        sign = (-self.qpow(1)) ** i * (-self.qpow(-1)) ** j
        out = acc.scale(sign).terms
        self._antipode_memo[key] = out
        return out

    def antipode(self, u):
        out = Element(self)
        for key, c in u.terms.items():
            out = out + Element(self, self.antipode_key(key)).scale(c)
        return out

    # -- right action of the quantum sl2 context ------------------------------

    def _act_e_key(self, key):
        """f <- E via the splitting rule (st) <- E = (s <- E)(t <- K) +
        s (t <- E) with s the leading letter; the letters act by
        b <- E = d, c <- E = 0 = d <- E."""
        out = self._act_e_memo.get(key)
        if out is not None:
            return out
        i, j, k = key
        if i == 0:
            # c and d are killed, so only the recursion tail survives
            out = self.zero()
            if j > 0:
                out = self.c * self._act_e_key((i, j - 1, k))
            elif k > 0:
                out = self.d * self._act_e_key((i, j, k - 1))
        else:
            rest = (i - 1, j, k)
            kw = self.qpow((i - 1) - j - k)
            out = (self.d * Element(self, {rest: kw})
                   + self.b * self._act_e_key(rest))
        self._act_e_memo[key] = out
        return out

    def _act_f_key(self, key):
        """f <- F via (st) <- F = (s <- F) t + (s <- K^{-1})(t <- F); the
        letters act by c <- F = a, d <- F = b, b <- F = 0."""
        out = self._act_f_memo.get(key)
        if out is not None:
            return out
        i, j, k = key
        if i > 0:
            rest = (i - 1, j, k)
            out = self.b.scale(self.qpow(-1)) * self._act_f_key(rest)
        elif j > 0:
            rest = (i, j - 1, k)
            out = (self.a * Element(self, {rest: self.field.one})
                   + self.c.scale(self.qpow(1)) * self._act_f_key(rest))
        elif k > 0:
            rest = (i, j, k - 1)
            out = (self.b * Element(self, {rest: self.field.one})
                   + self.d.scale(self.qpow(1)) * self._act_f_key(rest))
        else:
            out = self.zero()
        self._act_f_memo[key] = out
        return out

    def _act_k_scalar(self, key, power=1):
        i, j, k = key
        return self.qpow((i - j - k) * power)

    def _ftilde_key(self, key):
        out = self._ftilde_memo.get(key)
        if out is None:
            out = self._act_f_key(key).scale(
                (self.qpow(1) - self.qpow(-1)) * self._act_k_scalar(key))
            self._ftilde_memo[key] = out
        return out

    def _word_image(self, key, g, m1, m2):
        """Image of a basis key under the right action of the monomial
        K^g E^{m1} F~^{m2}, memoized so that integral sweeps are lookups."""
        k4 = (key, g, m1, m2)
        out = self._word_memo.get(k4)
        if out is not None:
            return out
        if m2 > 0:
            out = self.zero()
            for k2, c in self._word_image(key, g, m1, m2 - 1).terms.items():
                out = out + self._ftilde_key(k2).scale(c)
        elif m1 > 0:
            out = self.zero()
            for k2, c in self._word_image(key, g, m1 - 1, 0).terms.items():
                out = out + self._act_e_key(k2).scale(c)
        else:
            out = Element(self, {key: self._act_k_scalar(key, g)})
        self._word_memo[k4] = out
        return out

    def act_generator(self, f, which, power=1):
        """Right action of E, F, K^power or F~ on an element of functions."""
        if which == "K":
            return Element(self, {key: c * self._act_k_scalar(key, power)
                                  for key, c in f.terms.items()})
        out = self.zero()
        if which == "E":
            table = self._act_e_key
        elif which == "F":
            table = self._act_f_key
        elif which == "Ftilde":
            return self.act_generator(
                self.act_generator(f, "K"), "F").scale(
                    self.qpow(1) - self.qpow(-1))
        else:
            raise ValueError("unknown generator %r" % (which,))
        for key, c in f.terms.items():
            out = out + table(key).scale(c)
        return out


def build_oqsl2(N, q_exp=1):
    return OqContext(N, q_exp)


def _check_partners(uq, oq):
    if uq.N != oq.N or uq.q_exp != oq.q_exp:
        raise ValueError("the two contexts must share the same root of "
                         "unity: got (%d,%d) vs (%d,%d)"
                         % (uq.N, uq.q_exp, oq.N, oq.q_exp))


def right_action(oq, f, u):
    """f <- u for u an element of the quantum sl2 partner, decomposed along
    its monomial basis K^g E^m F~^n (words act by composition, left factor
    first)."""
    out = oq.zero()
    for (g, (m1, m2)), cu in u.terms.items():
        for key, cf in f.terms.items():
            out = out + oq._word_image(key, g[0], m1, m2).scale(cu * cf)
    return out


def pairing(oq, f, u):
    """The Hopf pairing, recovered as counit(f <- u)."""
    return oq.counit(right_action(oq, f, u))


def left_action(oq, u, f):
    """u -> f = f_(1) (f_(2), u): pair the right comultiplication leg."""
    out = oq.zero()
    for key, c in f.terms.items():
        for lk, rk, w in oq.comultiply_key(key):
            s = pairing(oq, Element(oq, {rk: oq.field.one}), u)
            if s:
                out = out + Element(oq, {lk: c * w * s})
    return out


def pairing_matrix_rows(oq, uq):
    """Rows of the full basis pairing matrix, as lists of exact scalars; row
    f over the partner's monomial basis."""
    _check_partners(uq, oq)
    alg = uq.algebra
    one = oq.field.one
    for fkey in oq.keys_in_order:
        f = Element(oq, {fkey: one})
        yield fkey, [pairing(oq, f, Element(alg, {ukey: alg.field.one}))
                     for ukey in alg.keys_in_order]


# ---------------------------------------------------------------------------
# presentation / axiom reports


def relation_report(oq):
    """All defining relations of the matrix presentation, on the nose."""
    q = oq.qpow(1)
    a, b, c, d = oq.a, oq.b, oq.c, oq.d
    one = oq.unit()
    N = oq.N
    rep = {
        "ba=q.ab": b * a == (a * b).scale(q),
        "ca=q.ac": c * a == (a * c).scale(q),
        "bc=cb": b * c == c * b,
        "db=q.bd": d * b == (b * d).scale(q),
        "dc=q.cd": d * c == (c * d).scale(q),
        "ad-qinv.bc=1": a * d - (b * c).scale(oq.qpow(-1)) == one,
        "da-q.bc=1": d * a - (b * c).scale(q) == one,
        "a^N=1": a ** N == one,
        "d^N=1": d ** N == one,
        "b^N=0": (b ** N).is_zero(),
        "c^N=0": (c ** N).is_zero(),
        "a.ainv=1": a * oq.a_inv == one and oq.a_inv * a == one,
    }
    rep["ok"] = all(rep.values())
    return rep


def random_element(oq, rng, max_terms=3):
    from .cyclofield import random_scalar
    out = oq.zero()
    for _ in range(rng.randrange(1, max_terms + 1)):
        key = (rng.randrange(oq.N), rng.randrange(oq.N), rng.randrange(oq.N))
        out = out + Element(oq, {key: random_scalar(oq.field, rng)})
    return out


def hopf_axiom_report(oq, rng, samples=25):
    """Coassociativity, the counit axiom, the antipode axiom and
    multiplicativity of the coproduct, on every basis key (structure maps)
    and on seeded random elements (the bilinear axioms)."""
    field = oq.field
    one = field.one
    rep = {"coassociative": True, "counit": True, "antipode": True,
           "delta_multiplicative": True, "multiply_associative": True}
    for key in oq.keys_in_order:
        left = {}
        right = {}
        for lk, rk, c in oq.comultiply_key(key):
            for lk2, rk2, c2 in oq.comultiply_key(lk):
                k3 = (lk2, rk2, rk)
                left[k3] = left.get(k3, field.zero) + c * c2
            for lk2, rk2, c2 in oq.comultiply_key(rk):
                k3 = (lk, lk2, rk2)
                right[k3] = right.get(k3, field.zero) + c * c2
        left = {k: c for k, c in left.items() if c}
        right = {k: c for k, c in right.items() if c}
        if left != right:
            rep["coassociative"] = False
        lsum = oq.zero()
        rsum = oq.zero()
        ssum = oq.zero()
        for lk, rk, c in oq.comultiply_key(key):
            lsum = lsum + Element(oq, {lk: c * oq.counit_key(rk)})
            rsum = rsum + Element(oq, {rk: c * oq.counit_key(lk)})
            ssum = ssum + (Element(oq, oq.antipode_key(lk))
                           * Element(oq, {rk: one})).scale(c)
        base = Element(oq, {key: one})
        if lsum != base or rsum != base:
            rep["counit"] = False
        if ssum != oq.unit().scale(oq.counit_key(key)):
            rep["antipode"] = False
    for _ in range(samples):
        u = random_element(oq, rng)
        v = random_element(oq, rng)
        w = random_element(oq, rng)
        if oq.comultiply(u * v) != oq.comultiply(u) * oq.comultiply(v):
            rep["delta_multiplicative"] = False
        if (u * v) * w != u * (v * w):
            rep["multiply_associative"] = False
    rep["ok"] = all(rep.values())
    return rep


# ---------------------------------------------------------------------------
# the alternate monomial family and its weight spaces


def xyz_monomial(oq, i, j, k):
    """x^i y^j z^k by honest repeated products (a single monomial times a
    root-of-unity scalar; the closed form is a test, not the code)."""
    key = (i, j, k)
    out = oq._xyz_memo.get(key)
    if out is not None:
        return out
    if i == 0 and j == 0 and k == 0:
        out = oq.unit()
    elif k > 0:
        out = xyz_monomial(oq, i, j, k - 1) * oq.z
    elif j > 0:
        out = xyz_monomial(oq, i, j - 1, 0) * oq.y
    else:
        out = xyz_monomial(oq, i - 1, 0, 0) * oq.x
    oq._xyz_memo[key] = out
    return out


def xyz_key_of_bcd(oq, key):
    """Inverse of the change of basis on keys: (i, j, l) -> (i, j, k) with
    2k = l + i - j mod N (2 is invertible, the order being odd)."""
    i, j, l = key
    return (i, j, ((l + i - j) * oq._two_inv) % oq.N)


def bcd_key_of_xyz(oq, key):
    i, j, k = key
    return (i, j, (-i + j + 2 * k) % oq.N)


def base_change_report(oq):
    """The closed form of x^i y^j z^k as a scalar times b^i c^j d^{-i+j+2k},
    its bijectivity on keys, and the roundtrip.

    Two candidate exponents are matched on every key.  Pushing d^{-1} past b
    costs q^{-1} per swap and pushing d past c costs q^{+1}, so the honest
    products give q^{-i(i-1)/2 + j(j-1)/2 - ij}; the variant with the two
    square terms negated is also checked so a caller can certify that it
    (and only it) fails.
    """
    rep = {"corrected_exponent": True, "square_terms_negated": True,
           "bijection": True, "roundtrip": True}
    seen = set()
    for key in oq.keys_in_order:
        i, j, k = key
        expo = -(i * (i - 1) // 2) + j * (j - 1) // 2 - i * j
        target = bcd_key_of_xyz(oq, key)
        mono = xyz_monomial(oq, i, j, k)
        if mono != Element(oq, {target: oq.qpow(expo)}):
            rep["corrected_exponent"] = False
        if mono != Element(oq, {target: oq.qpow(-expo - 2 * i * j)}):
            rep["square_terms_negated"] = False
        if target in seen:
            rep["bijection"] = False
        seen.add(target)
        if xyz_key_of_bcd(oq, target) != key:
            rep["roundtrip"] = False
    rep["ok"] = (rep["corrected_exponent"] and rep["bijection"]
                 and rep["roundtrip"])
    return rep


def weight_residue(oq, key):
    """The z-layer a monomial lives in: k with b^i c^j d^l in V_k."""
    return xyz_key_of_bcd(oq, key)[2]


def vk_submodule(oq, k):
    """The span of { x^i y^j z^k : i, j }, as a subspace."""
    one = oq.field.one
    S = coideal.Subspace(oq)
    for i in range(oq.N):
        for j in range(oq.N):
            S.insert(Element(oq, {bcd_key_of_xyz(oq, (i, j, k)): one}))
    return S


def element_in_layer(oq, f, k):
    return all(weight_residue(oq, key) == k % oq.N for key in f.terms)


def vk_report(uq, oq):
    """Layer multiplicativity V_k V_l = V_{k+l} and the statement that the
    top monomial x^{N-1} y^{N-1} z^k generates V_k as a module."""
    _check_partners(uq, oq)
    N = oq.N
    rep = {"unit_in_layer_zero": element_in_layer(oq, oq.unit(), 0),
           "product_rule": True, "top_monomial_generates": True}
    for k in range(N):
        for l in range(N):
            target = (k + l) % N
            for i in range(N):
                for j in range(N):
                    u = xyz_monomial(oq, i, j, k)
                    for i2 in range(N):
                        for j2 in range(N):
                            v = xyz_monomial(oq, i2, j2, l)
                            if not element_in_layer(oq, u * v, target):
                                rep["product_rule"] = False
    gens = [uq.K, uq.E, uq.Ftilde]
    for k in range(N):
        V = vk_submodule(oq, k)
        S = coideal.Subspace(oq)
        queue = [S.insert(xyz_monomial(oq, N - 1, N - 1, k))]
        while queue:
            row = queue.pop()
            if row is None:
                continue
            for g in gens:
                nxt = S.insert(right_action(oq, row, g))
                if nxt is not None:
                    queue.append(nxt)
        if S != V:
            rep["top_monomial_generates"] = False
    rep["ok"] = all(rep.values())
    return rep


# ---------------------------------------------------------------------------
# closed-form action oracles


def xyz_action_report(uq, oq):
    """The displayed closed forms of the right actions of E, F and K on
    every monomial x^i y^j z^k, against the recursion oracle."""
    _check_partners(uq, oq)
    N = oq.N
    t = oq.qpow(2)
    rep = {"E": True, "F": True, "K": True}
    for i in range(N):
        for j in range(N):
            for k in range(N):
                m = xyz_monomial(oq, i, j, k)
                got = right_action(oq, m, uq.E)
                want = oq.zero()
                if i > 0:
                    want = xyz_monomial(oq, i - 1, j, k).scale(
                        oq.qpow(-2 * (j + k) + 1) * q_integer(i, t))
                if got != want:
                    rep["E"] = False
                got = right_action(oq, m, uq.F)
                want = oq.zero()
                if i + 1 < N:
                    want = want + xyz_monomial(oq, i + 1, j, k).scale(
                        q_integer(-i + 2 * j + 2 * k, t))
                if j > 0:
                    want = want + xyz_monomial(oq, i, j - 1, k).scale(
                        oq.qpow(-2 * i) * q_integer(j, t))
                if got != want:
                    rep["F"] = False
                got = right_action(oq, m, uq.K)
                if got != m.scale(oq.qpow(2 * (i - j - k))):
                    rep["K"] = False
    rep["ok"] = all(rep.values())
    return rep


def bcd_action_variants(uq, oq):
    """The proof of the action lemma prints, for b^i c^j d^l <- F, the
    coefficient q^{-i-j} on the second term, while the displayed summary
    carries q^{-i-j+1}.  Both variants are matched against the recursion
    on every monomial; the report records which one is the truth (the
    extra q in the display already fails on d <- F = b).
    """
    _check_partners(uq, oq)
    N = oq.N
    t = oq.qpow(2)
    rep = {"E_closed_form": True, "F_matches_proof": True,
           "F_matches_display": True}
    for key in oq.keys_in_order:
        i, j, l = key
        f = Element(oq, {key: oq.field.one})
        got = right_action(oq, f, uq.E)
        want = oq.zero()
        if i > 0:
            want = oq.monomial((i - 1, j, l + 1),
                               oq.qpow(-l) * q_integer(i, t))
        if got != want:
            rep["E_closed_form"] = False
        got = right_action(oq, f, uq.F)
        first = oq.zero()
        if j > 0:
            first = oq.monomial((i, j - 1, l - 1),
                                oq.qpow(-i - j + 1) * q_integer(j, t))
        second = oq.monomial((i + 1, j, l - 1), q_integer(j + l, t))
        if got != first + second.scale(oq.qpow(-i - j)):
            rep["F_matches_proof"] = False
        if got != first + second.scale(oq.qpow(-i - j + 1)):
            rep["F_matches_display"] = False
    rep["resolved_variant"] = ("proof" if rep["F_matches_proof"]
                               else "display" if rep["F_matches_display"]
                               else "neither")
    rep["ok"] = rep["E_closed_form"] and rep["F_matches_proof"]
    return rep


def left_action_closed_forms(uq, oq):
    """Closed forms of the left action on the monomial basis, plus the
    generator table (E -> b = a, F -> a = b, K scales by weight)."""
    _check_partners(uq, oq)
    q = oq.qpow(1)
    t = oq.qpow(2)
    rep = {}
    rep["table_E"] = (
        left_action(oq, uq.E, oq.a).is_zero()
        and left_action(oq, uq.E, oq.b) == oq.a
        and left_action(oq, uq.E, oq.c).is_zero()
        and left_action(oq, uq.E, oq.d) == oq.c)
    rep["table_F"] = (
        left_action(oq, uq.F, oq.a) == oq.b
        and left_action(oq, uq.F, oq.b).is_zero()
        and left_action(oq, uq.F, oq.c) == oq.d
        and left_action(oq, uq.F, oq.d).is_zero())
    rep["table_K"] = (
        left_action(oq, uq.K, oq.a) == oq.a.scale(q)
        and left_action(oq, uq.K, oq.b) == oq.b.scale(oq.qpow(-1))
        and left_action(oq, uq.K, oq.c) == oq.c.scale(q)
        and left_action(oq, uq.K, oq.d) == oq.d.scale(oq.qpow(-1)))
    rep["closed_E"] = True
    rep["closed_F"] = True
    rep["closed_K"] = True
    for key in oq.keys_in_order:
        i, j, k = key
        f = Element(oq, {key: oq.field.one})
        got = left_action(oq, uq.E, f)
        want = oq.monomial((i, j + 1, k - 1),
                           oq.qpow(-2 * i - k + 1) * q_integer(i + k, t))
        if i > 0:
            want = want + oq.monomial(
                (i - 1, j, k - 1),
                oq.qpow(-2 * i - k + 2) * q_integer(i, t))
        if got != want:
            rep["closed_E"] = False
        got = left_action(oq, uq.F, f)
        want = oq.zero()
        if j > 0:
            want = oq.monomial((i, j - 1, k + 1),
                               oq.qpow(i - j + 1) * q_integer(j, t))
        if got != want:
            rep["closed_F"] = False
        got = left_action(oq, uq.K, f)
        if got != f.scale(oq.qpow(-i + j - k)):
            rep["closed_K"] = False
    rep["unit_acts_trivially"] = all(
        left_action(oq, uq.algebra.unit(),
                    Element(oq, {key: oq.field.one}))
        == Element(oq, {key: oq.field.one})
        for key in oq.keys_in_order[:5])
    rep["ok"] = all(rep.values())
    return rep


def module_axiom_report(uq, oq, rng, samples=10, rank_check=None):
    """(f <- u) <- v = f <- (uv), (uv) -> f = u -> (v -> f), the pairing
    exchange law (fg, u) = (f, u_(1)) (g, u_(2)), and nondegeneracy of the
    full pairing matrix (rank check on by default only at the smallest
    order, where the cubic-size matrix is still cheap)."""
    _check_partners(uq, oq)
    alg = uq.algebra
    if rank_check is None:
        rank_check = oq.N == 3
    rep = {"right_module": True, "left_module": True, "exchange": True}

    def random_u():
        from .cyclofield import random_scalar
        out = alg.zero()
        for _ in range(rng.randrange(1, 3)):
            g = alg.group.elements[rng.randrange(len(alg.group.elements))]
            m = (rng.randrange(oq.N), rng.randrange(oq.N))
            out = out + Element(alg, {(g, m): random_scalar(alg.field, rng)})
        return out

    for _ in range(samples):
        f = random_element(oq, rng)
        g = random_element(oq, rng)
        u = random_u()
        v = random_u()
        if right_action(oq, right_action(oq, f, u), v) \
                != right_action(oq, f, u * v):
            rep["right_module"] = False
        if left_action(oq, u * v, f) \
                != left_action(oq, u, left_action(oq, v, f)):
            rep["left_module"] = False
        lhs = pairing(oq, f * g, u)
        rhs = oq.field.zero
        for (lk, rk), c in alg.comultiply(u).terms.items():
            rhs = rhs + (pairing(oq, f, Element(alg, {lk: c}))
                         * pairing(oq, g, Element(alg, {rk: alg.field.one})))
        if lhs != rhs:
            rep["exchange"] = False
    if rank_check:
        rows = coideal.Subspace(alg)
        for _, vals in pairing_matrix_rows(oq, uq):
            terms = {k: c for k, c in zip(alg.keys_in_order, vals) if c}
            rows.insert(Element(alg, terms))
        rep["nondegenerate"] = rows.dim == oq.dimension
    rep["ok"] = all(rep.values())
    return rep


# ---------------------------------------------------------------------------
# the dagger correspondence


def dagger(uq, oq, S, generators=None, integral=None,
           verify_structure=False):
    """The coideal subalgebra of functions dual to S: computed once as the
    sweep of the monomial basis through a right integral of S, and once as
    the solutions of f <- a = eps(a) f over the generators.  The two must
    agree and satisfy the dimension law; any failure is an internal error,
    not a report entry.  verify_structure additionally re-checks that the
    result is a right coideal subalgebra (always true, but cheap only at
    small order, so it is opt-in)."""
    _check_partners(uq, oq)
    alg = uq.algebra
    if integral is None:
        integral = coideal.right_integral(alg, S, generators)
    sweep = coideal.Subspace(oq)
    one = oq.field.one
    for key in oq.keys_in_order:
        sweep.insert(right_action(oq, Element(oq, {key: one}), integral))
    gens = generators if generators is not None else S.basis()
    ops = []
    for g in gens:
        eps = alg.counit(g)
        ops.append(lambda f, g=g, eps=eps:
                   right_action(oq, f, g) - f.scale(eps))
    annihilator = coideal.kernel_intersection(oq, ops)
    if sweep != annihilator:
        raise RuntimeError("the integral sweep and the annihilator solve "
                           "disagree; the pairing plumbing is broken")
    if sweep.dim * S.dim != oq.dimension:
        raise RuntimeError("dimension law violated: %d * %d != %d"
                           % (sweep.dim, S.dim, oq.dimension))
    if verify_structure and sweep.dim < oq.dimension:
        if not coideal.is_right_coideal(oq, sweep) \
                or not coideal.is_subalgebra(oq, sweep):
            raise RuntimeError("dagger image is not a right coideal "
                               "subalgebra")
    return sweep


def family_dagger(uq, oq, family):
    """Dagger of a named family instance, with its generator list."""
    S = family.closure()
    gens = family.generators if family.name != "full" \
        else [uq.K, uq.E, uq.Ftilde]
    return dagger(uq, oq, S, generators=gens)


def dagger_dimension_table(uq, oq, rng, parametric_samples=2):
    """Computed dagger dimensions for the classified families, next to the
    claimed values r N^2, r N, N, N^2 and 1."""
    _check_partners(uq, oq)
    N = uq.N
    rows = []
    full = uqsl2.full_family(uq)
    rows.append(("full", dagger(uq, oq, full.closure(),
                                [uq.K, uq.E, uq.Ftilde]).dim, 1))
    for r in uqsl2.divisors(N):
        fam = uqsl2.group_power_family(uq, r)
        rows.append(("Kr:%d" % r,
                     family_dagger(uq, oq, fam).dim, r * N * N))
        rows.append(("KrE:%d" % r,
                     family_dagger(uq, oq, uqsl2.borel_e_family(uq, r)).dim,
                     r * N))
        rows.append(("KrF:%d" % r,
                     family_dagger(uq, oq, uqsl2.borel_f_family(uq, r)).dim,
                     r * N))
    for lam, mu in uqsl2.sample_pair_parameters(uq, parametric_samples, rng):
        fam = uqsl2.pair_family(uq, lam, mu)
        rows.append(("pair", family_dagger(uq, oq, fam).dim, N))
    for alpha, beta in uqsl2.sample_line_parameters(
            uq, parametric_samples, rng):
        fam = uqsl2.line_family(uq, alpha, beta)
        rows.append(("line", family_dagger(uq, oq, fam).dim, N * N))
    for beta in uqsl2.sample_fline_parameters(uq, parametric_samples, rng):
        fam = uqsl2.fline_family(uq, beta)
        rows.append(("fline", family_dagger(uq, oq, fam).dim, N * N))
    return rows


def _closure(oq, gens):
    return coideal.span_closure(oq, gens)


def _taft_commutation_scalar(oq, g, x):
    """The scalar xi with g x = xi x g, if one exists on the nose."""
    gx = g * x
    xg = x * g
    for key, c in xg.terms.items():
        ref = gx.terms.get(key)
        if ref is None:
            return None
        xi = ref / c
        return xi if gx == xg.scale(xi) else None
    return None


def dagger_identity_report(uq, oq, rng, samples=3):
    """The displayed generator identities for the daggers of the classified
    families, each as an exact subspace equality, together with the
    relation list for the group-power dagger and the four Taft-type
    certificates.  The printed Taft parameters of the two one-parameter
    families are arbitrated against the computed commutation scalar and the
    mismatch is recorded rather than asserted away."""
    _check_partners(uq, oq)
    N = uq.N
    q = oq.qpow(1)
    rep = {}
    full = uqsl2.full_family(uq).closure()
    rep["unit_dagger"] = dagger(
        uq, oq, full, [uq.K, uq.E, uq.Ftilde]) == coideal.span(
            oq, [oq.unit()])
    for r in uqsl2.divisors(N):
        m = N // r
        D = family_dagger(uq, oq, uqsl2.group_power_family(uq, r))
        via_a = _closure(oq, [oq._a_power(m), oq.a_inv * oq.b,
                              oq.a * oq.c])
        via_d = _closure(oq, [oq.d ** m, oq.b * oq.d,
                              oq.c * oq.d_inv])
        rep["group_power_r%d" % r] = (D == via_a and D == via_d
                                      and D.dim == r * N * N)
        DE = family_dagger(uq, oq, uqsl2.borel_e_family(uq, r))
        rep["borel_e_r%d" % r] = (
            DE == _closure(oq, [oq.d ** m, oq.c * oq.d_inv])
            and DE.dim == r * N)
        DF = family_dagger(uq, oq, uqsl2.borel_f_family(uq, r))
        rep["borel_f_r%d" % r] = (
            DF == _closure(oq, [oq._a_power(m), oq.a_inv * oq.b])
            and DF.dim == r * N)
        te = coideal.check_taft_presentation(
            oq, DE, oq.c * oq.d_inv, oq.d ** m, oq.qpow(m), N, r)
        tf = coideal.check_taft_presentation(
            oq, DF, oq.a_inv * oq.b, oq._a_power(m), oq.qpow(-m), N, r)
        rep["taft_borel_e_r%d" % r] = te["ok"]
        rep["taft_borel_f_r%d" % r] = tf["ok"]
        # the relation list for the group-power dagger
        s = oq.b * oq.d
        tt = oq.c * oq.d_inv
        u = oq.d ** m
        rel = ((s ** N).is_zero() and (tt ** N).is_zero()
               and u ** r == oq.unit()
               and tt * s == (s * tt).scale(oq.qpow(-2))
               and u * s == (s * u).scale(oq.qpow(m))
               and u * tt == (tt * u).scale(oq.qpow(m)))
        mono = coideal.Subspace(oq)
        count = 0
        for i in range(N):
            for j in range(N):
                for k in range(r):
                    if mono.insert((s ** i) * (tt ** j) * (u ** k)) \
                            is not None:
                        count += 1
        rep["group_power_relations_r%d" % r] = rel and count == r * N * N \
            and mono == D
    # the one-parameter families; alpha = 0 and beta = 0 fold in the
    # nilpotent-generator specials
    alphas = [oq.field.zero] + [uqsl2._random_nonzero(uq, rng)
                                for _ in range(samples)]
    match_e = None
    for alpha in alphas:
        fam = uqsl2.line_family(uq, uq.field.zero, alpha)
        D = family_dagger(uq, oq, fam)
        g = oq.z + (oq.b * oq.d).scale((q - oq.qpow(-1)) * alpha)
        tt = oq.c * oq.d_inv
        ok = D == _closure(oq, [tt, g]) and D.dim == N * N
        xi = _taft_commutation_scalar(oq, g, tt)
        cert = coideal.check_taft_presentation(oq, D, tt, g, xi, N, N) \
            if xi is not None else {"ok": False}
        ok = ok and cert["ok"]
        key = "e_line_alpha=%s" % format_scalar(alpha)
        rep[key] = ok
        if match_e is None:
            match_e = xi
        elif xi != match_e:
            match_e = False
    rep["e_line_taft_scalar"] = format_scalar(match_e) \
        if isinstance(match_e, CycScalar) else "inconsistent"
    rep["e_line_printed_parameter_matches"] = match_e == oq.qpow(-2)
    betas = [oq.field.zero] + [uqsl2._random_nonzero(uq, rng)
                               for _ in range(samples)]
    match_f = None
    for beta in betas:
        fam = uqsl2.fline_family(uq, beta)
        D = family_dagger(uq, oq, fam)
        g = oq._a_power(2) - (oq.a * oq.c).scale(oq.qpow(2) * beta)
        xx = oq.a_inv * oq.b
        ok = D == _closure(oq, [xx, g]) and D.dim == N * N
        xi = _taft_commutation_scalar(oq, g, xx)
        cert = coideal.check_taft_presentation(oq, D, xx, g, xi, N, N) \
            if xi is not None else {"ok": False}
        ok = ok and cert["ok"]
        rep["f_line_beta=%s" % format_scalar(beta)] = ok
        if match_f is None:
            match_f = xi
        elif xi != match_f:
            match_f = False
    rep["f_line_taft_scalar"] = format_scalar(match_f) \
        if isinstance(match_f, CycScalar) else "inconsistent"
    rep["f_line_printed_parameter_matches"] = match_f == oq.qpow(2)
    # the special single-generator cases spelled out separately
    rep["e_dagger"] = family_dagger(uq, oq, uqsl2.e_family(uq)) \
        == _closure(oq, [oq.c, oq.d])
    rep["f_dagger"] = dagger(uq, oq, coideal.span_closure(
        uq.algebra, [uq.Ftilde]), [uq.Ftilde]) \
        == _closure(oq, [oq.a, oq.b])
    rep["borel_e_dagger_is_line"] = family_dagger(
        uq, oq, uqsl2.borel_e_family(uq, 1)) \
        == _closure(oq, [oq.c * oq.d_inv])
    rep["borel_f_dagger_is_line"] = family_dagger(
        uq, oq, uqsl2.borel_f_family(uq, 1)) \
        == _closure(oq, [oq.a_inv * oq.b])
    rep["ok"] = all(v is True for k, v in rep.items()
                    if k not in ("e_line_taft_scalar", "f_line_taft_scalar",
                                 "e_line_printed_parameter_matches",
                                 "f_line_printed_parameter_matches",
                                 "ok"))
    return rep


def line_dagger_report(uq, oq, alpha, beta):
    """Generators of the dagger of the one-generator family Ku = E + alpha
    F~ + beta K via its integral: Lambda = psi(u) for psi = phi/(X - beta),
    and the two elements obtained by sweeping x^{N-1} y and x^{N-1} z
    through Lambda generate the dagger and present it as a Taft-type
    algebra.  The origin is excluded (the family needs a nonzero point)."""
    _check_partners(uq, oq)
    if not alpha and not beta:
        raise ValueError("the line family needs (alpha, beta) != (0, 0)")
    alg = uq.algebra
    N = uq.N
    u = uqsl2.line_generator(uq, alpha, beta)
    S = coideal.span_closure(alg, [u])
    phi = uqsl2.predicted_line_polynomial(uq, alpha, beta)
    linear = Poly(uq.field, [-beta, uq.field.one])
    psi, remainder = phi.divmod(linear)
    rep = {"root_divides": remainder.is_zero()}
    integral = uqsl2.evaluate_polynomial(alg, psi, u)
    rep["integral_property"] = (not integral.is_zero()) \
        and integral * u == integral.scale(beta)
    rep["integral_matches_solver"] = uqsl2._proportional(
        integral, coideal.right_integral(alg, S, [u]))
    D = dagger(uq, oq, S, generators=[u], integral=integral)
    rep["dimension"] = D.dim == N * N
    t = oq.qpow(2)
    prefactor = oq.qpow(-1) / q_factorial(N - 1, t)
    y_ab = right_action(oq, xyz_monomial(oq, N - 1, 1, 0),
                        integral).scale(prefactor)
    z_ab = right_action(oq, xyz_monomial(oq, N - 1, 0, 1),
                        integral).scale(prefactor)
    rep["in_dagger"] = D.contains(y_ab) and D.contains(z_ab)
    rep["generate"] = _closure(oq, [y_ab, z_ab]) == D
    rep["shape_y"] = all(key[0] >= 1 for key in (y_ab - oq.y).terms)
    rep["shape_z"] = all(key[0] >= 1 for key in (z_ab - oq.z).terms)
    xi = _taft_commutation_scalar(oq, z_ab, y_ab)
    rep["taft"] = xi is not None and coideal.check_taft_presentation(
        oq, D, y_ab, z_ab, xi, N, N)["ok"]
    rep["taft_scalar"] = format_scalar(xi) if xi is not None else "none"
    rep["printed_parameter_matches"] = xi == oq.qpow(-2)
    if not alpha:
        # the swept generators at alpha = 0, in closed form; the y variant
        # with coefficient (1 - q^{-2}) beta instead of (q - q^{-1}) beta is
        # also tried, and by the uniqueness of elements of shape y + x(...)
        # in the dagger at most one candidate can live there
        rep["alpha0_y"] = y_ab == oq.y + (oq.x * oq.y).scale(
            (oq.qpow(1) - oq.qpow(-1)) * beta)
        rep["alpha0_y_unscaled_variant"] = D.contains(
            oq.y + (oq.x * oq.y).scale(
                (oq.field.one - oq.qpow(-2)) * beta))
        rep["alpha0_z"] = z_ab == oq.z + (oq.x * oq.z).scale(
            (oq.qpow(1) - oq.qpow(-1)) * beta)
    rep["ok"] = all(v is True for k, v in rep.items()
                    if k not in ("taft_scalar", "printed_parameter_matches",
                                 "alpha0_y_unscaled_variant", "ok"))
    return rep, (y_ab, z_ab)


def pair_dagger_report(uq, oq, lam, mu):
    """The dagger of the two-generator family at a point of the constraint
    hyperbola is spanned by the powers of a single element w, obtained by
    sweeping the top monomial x^{N-1} y^{N-1} z through the integral; w has
    minimal polynomial X^N - eps(w)^N with distinct roots, each power w^k
    sits in the layer V_k, and the algebra is a product of N copies of the
    ground field."""
    _check_partners(uq, oq)
    one = uq.field.one
    if (one - uq.qpow(2)) * lam * mu != one:
        raise ValueError("the pair family lives on (1 - q^2) lm = 1")
    alg = uq.algebra
    N = uq.N
    v = uq.E + uq.K.scale(lam)
    w_up = uq.Ftilde + uq.K.scale(mu)
    S = coideal.span_closure(alg, [v, w_up])
    integral = coideal.right_integral(alg, S, [v, w_up])
    D = dagger(uq, oq, S, generators=[v, w_up], integral=integral)
    w = right_action(oq, xyz_monomial(oq, N - 1, N - 1, 1), integral)
    eps = oq.counit(w)
    rep = {"nonzero": not w.is_zero(),
           "counit_nonzero": bool(eps),
           "dimension": D.dim == N}
    rep["power_in_layer"] = all(element_in_layer(oq, w ** k, k)
                                for k in range(N))
    powers = coideal.span(oq, [w ** k for k in range(N)])
    rep["powers_span"] = powers == D
    minpoly = coideal.minimal_polynomial(oq, w)
    target = Poly(oq.field, [-(eps ** N)] + [oq.field.zero] * (N - 1)
                  + [oq.field.one])
    rep["minimal_polynomial"] = minpoly == target
    rep["squarefree"] = target.gcd(target.derivative()).is_constant()
    split = Poly.constant(oq.field, oq.field.one)
    X = Poly.x(oq.field)
    for i in range(N):
        split = split * (X - Poly.constant(
            oq.field, eps * oq.field.q_power(i)))
    rep["splits_into_distinct_lines"] = split == target
    rep["ok"] = all(rep.values())
    return rep, w


# ---------------------------------------------------------------------------
# the swap to the inverse root of unity


def swap_dual_image(src, dst, f):
    """The coalgebra-side companion of the swap: a -> d', b -> q c',
    c -> q^{-1} b', d -> a', extended multiplicatively; an involution
    between the contexts at q and q^{-1}."""
    if src.N != dst.N or (src.q_exp + dst.q_exp) % src.N != 0:
        raise ValueError("swap targets the context at the inverse root")
    out = dst.zero()
    for (i, j, k), coeff in f.terms.items():
        img = (dst.c ** i) * (dst.b ** j) * dst._a_power(k)
        out = out + img.scale(coeff * src.qpow(i - j))
    return out


def swap_dual_subspace(src, dst, S):
    return coideal.span(dst, [swap_dual_image(src, dst, row)
                              for row in S.basis()])


def swap_dual_report(N, rng, q_exp=1, samples=5):
    """The function-algebra companion of the swap: a Hopf isomorphism onto
    the context at the inverse root, compatible with the pairing, carrying
    the dagger of a swapped subalgebra onto the dagger of the original.

    The intertwining statement is checked in the well-typed reading forced
    by its own derivation -- applying the companion map to (swapped A)
    dagger lands on A dagger -- and additionally in the reading where the
    template is instantiated at the inverse parameter and applied directly
    to A dagger; the report records whether each holds."""
    uq_q = uqsl2.UqContext(N, q_exp)
    uq_inv = uqsl2.UqContext(N, N - q_exp)
    oq_q = OqContext(N, q_exp)
    oq_inv = OqContext(N, N - q_exp)
    rep = {}
    # a Hopf algebra map, on the nose, and a linear bijection
    morphic = True
    image = coideal.Subspace(oq_inv)
    for key in oq_q.keys_in_order:
        f = Element(oq_q, {key: oq_q.field.one})
        img = swap_dual_image(oq_q, oq_inv, f)
        image.insert(img)
        want = {}
        for lk, rk, c in oq_q.comultiply_key(key):
            li = swap_dual_image(oq_q, oq_inv,
                                 Element(oq_q, {lk: oq_q.field.one}))
            ri = swap_dual_image(oq_q, oq_inv,
                                 Element(oq_q, {rk: oq_q.field.one}))
            for k1, c1 in li.terms.items():
                for k2, c2 in ri.terms.items():
                    k12 = (k1, k2)
                    s = want.get(k12, oq_inv.field.zero) + c * c1 * c2
                    if s:
                        want[k12] = s
                    else:
                        want.pop(k12, None)
        if oq_inv.comultiply(img).terms != want:
            morphic = False
        if oq_inv.counit(img) != oq_q.counit_key(key):
            morphic = False
        if oq_inv.antipode(img) != swap_dual_image(
                oq_q, oq_inv, Element(oq_q, oq_q.antipode_key(key))):
            morphic = False
    rep["hopf_morphism"] = morphic
    rep["bijective"] = image.dim == oq_q.dimension
    gens_f = [oq_q.a, oq_q.b, oq_q.c, oq_q.d]
    gens_u = [uq_inv.E, uq_inv.Ftilde, uq_inv.K, uq_inv.Kinv]
    ok = True
    for f in gens_f:
        for u in gens_u:
            lhs = pairing(oq_q, f, uqsl2.swap_image(uq_inv, uq_q, u))
            rhs = pairing(oq_inv, swap_dual_image(oq_q, oq_inv, f), u)
            if lhs != rhs:
                ok = False
    for _ in range(samples):
        f = random_element(oq_q, rng) * random_element(oq_q, rng)
        u = uq_inv.E * uq_inv.Ftilde.scale(
            uqsl2._random_nonzero(uq_inv, rng)) + uq_inv.K
        lhs = pairing(oq_q, f, uqsl2.swap_image(uq_inv, uq_q, u))
        rhs = pairing(oq_inv, swap_dual_image(oq_q, oq_inv, f), u)
        if lhs != rhs:
            ok = False
    rep["pairing_compatible"] = ok
    # dagger intertwining on the one-parameter family, plus the resulting
    # generator identity for the mirror family in the destination context
    ok = True
    literal = True
    chain = True
    for _ in range(max(2, samples // 2)):
        alpha = uqsl2._random_nonzero(uq_inv, rng)
        u_src = uq_inv.E + uq_inv.K.scale(alpha)
        S_src = coideal.span_closure(uq_inv.algebra, [u_src])
        D_src = dagger(uq_inv, oq_inv, S_src, generators=[u_src])
        u_dst = uqsl2.swap_image(uq_inv, uq_q, u_src)
        S_dst = coideal.span_closure(uq_q.algebra, [u_dst])
        D_dst = dagger(uq_q, oq_q, S_dst, generators=[u_dst])
        if swap_dual_subspace(oq_q, oq_inv, D_dst) != D_src:
            ok = False
        if swap_dual_subspace(oq_inv, oq_q, D_src) != D_dst:
            literal = False
        beta_dst = alpha * (uq_q.qpow(1) - uq_q.qpow(-1))
        printed = _closure(oq_q, [
            oq_q.a_inv * oq_q.b,
            oq_q._a_power(2) - (oq_q.a * oq_q.c).scale(
                oq_q.qpow(2) * beta_dst)])
        if D_dst != printed:
            chain = False
        src_printed = _closure(oq_inv, [
            oq_inv.c * oq_inv.d_inv,
            oq_inv.z + (oq_inv.b * oq_inv.d).scale(
                (uq_inv.qpow(1) - uq_inv.qpow(-1)) * alpha)])
        if D_src != src_printed:
            chain = False
    rep["dagger_intertwines"] = ok
    rep["literal_reading_holds"] = literal
    rep["mirror_generators"] = chain
    rep["ok"] = all(v is True for k, v in rep.items()
                    if k not in ("literal_reading_holds", "ok"))
    return rep


# ---------------------------------------------------------------------------
# worked module-action examples


def module_action_report(uq, oq, lam, mu, r=1):
    """The generator-level left-action identities for the three worked
    subalgebras of functions: the group-power dagger (s = bd, t = cd^{-1},
    u = d^{N/r}), the E-line dagger (t and v = d^2 + (q - q^{-1}) alpha bd,
    sampled through alpha = lam), and the two-generator dagger, where the
    sweep generator w satisfies E -> w = delta for the pairing constant
    delta = (h, Lambda E)."""
    _check_partners(uq, oq)
    one = uq.field.one
    if (one - uq.qpow(2)) * lam * mu != one:
        raise ValueError("the pair family lives on (1 - q^2) lm = 1")
    if uq.N % r:
        raise ValueError("r must divide the order")
    N = uq.N
    q = oq.qpow(1)
    t2 = oq.qpow(2)
    m = N // r
    rep = {}
    s = oq.b * oq.d
    tt = oq.c * oq.d_inv
    u = oq.d ** m
    rep["group_power_s"] = (
        left_action(oq, uq.E, s) == (s * tt).scale(
            oq.qpow(-2) * (q + oq.qpow(-1))) + oq.unit().scale(oq.qpow(-1))
        and left_action(oq, uq.F, s).is_zero()
        and left_action(oq, uq.K, s) == s.scale(oq.qpow(-2)))
    rep["group_power_t"] = (
        left_action(oq, uq.E, tt) == (tt * tt).scale(-q)
        and left_action(oq, uq.F, tt) == oq.unit()
        and left_action(oq, uq.K, tt) == tt.scale(t2))
    rep["group_power_u"] = (
        left_action(oq, uq.E, u) == (tt * u).scale(
            oq.qpow(-m + 1) * q_integer(m, t2))
        and left_action(oq, uq.F, u).is_zero()
        and left_action(oq, uq.K, u) == u.scale(oq.qpow(-m)))
    alpha = lam
    v = oq.z + (oq.b * oq.d).scale((q - oq.qpow(-1)) * alpha)
    rep["e_line_relations"] = ((tt ** N).is_zero()
                               and v ** N == oq.unit()
                               and v * tt == (tt * v).scale(t2))
    rep["e_line_v"] = (
        left_action(oq, uq.F, v).is_zero()
        and left_action(oq, uq.K, v) == v.scale(oq.qpow(-2))
        and left_action(oq, uq.E, v) == (tt * v).scale(q + oq.qpow(-1))
        + oq.unit().scale(alpha * (one - oq.qpow(-2))))
    alg = uq.algebra
    vv = uq.E + uq.K.scale(lam)
    ww = uq.Ftilde + uq.K.scale(mu)
    S = coideal.span_closure(alg, [vv, ww])
    integral = coideal.right_integral(alg, S, [vv, ww])
    h = Element(oq, {(N - 1, N - 1, 2): oq.field.one})
    w = right_action(oq, h, integral)
    delta = pairing(oq, h, integral * uq.E)
    rep["delta_nonzero"] = bool(delta)
    rep["pair_K"] = left_action(oq, uq.K, w) == w.scale(oq.qpow(-2))
    rep["pair_E"] = left_action(oq, uq.E, w) == oq.unit().scale(delta)
    rep["pair_F"] = left_action(oq, uq.F, w) \
        == (w * w).scale(-q * delta.inverse()) if delta else False
    rep["ok"] = all(rep.values())
    return rep


# ---------------------------------------------------------------------------
# normality on the function-algebra side


def coordinate_normality_report(uq, oq, rng, samples=2):
    """The normal right coideal subalgebras of the function algebra are the
    two nilpotent lines and the group-power daggers; everything else in the
    classified table fails adjoint stability.  Consistency with the other
    side: the normal members here are exactly the daggers of the Hopf
    subalgebras of the quantum sl2 context, and no non-trivial member here
    is a Hopf subalgebra itself."""
    _check_partners(uq, oq)
    N = uq.N
    gens = [oq.b, oq.c, oq.d]
    rep = {}
    normal = {"ab_line": _closure(oq, [oq.a_inv * oq.b]),
              "cd_line": _closure(oq, [oq.c * oq.d_inv])}
    for r in uqsl2.divisors(N):
        if r < N:
            normal["group_power_r%d" % r] = _closure(
                oq, [oq._a_power(N // r), oq.a_inv * oq.b, oq.a * oq.c])
    for name, S in normal.items():
        rep["normal_%s" % name] = coideal.is_normal(oq, S, gens)
    trivial_small = coideal.span(oq, [oq.unit()])
    trivial_big = coideal.span(
        oq, [Element(oq, {key: oq.field.one}) for key in oq.keys_in_order])
    rep["normal_trivial"] = (coideal.is_normal(oq, trivial_small, gens)
                             and coideal.is_normal(oq, trivial_big, gens))
    others = {"e_dagger": _closure(oq, [oq.c, oq.d]),
              "f_dagger": _closure(oq, [oq.a, oq.b])}
    for idx in range(samples):
        alpha = uqsl2._random_nonzero(uq, rng)
        D = family_dagger(uq, oq,
                          uqsl2.line_family(uq, uq.field.zero, alpha))
        others["e_line_%d" % idx] = D
    for name, S in others.items():
        rep["not_normal_%s" % name] = not coideal.is_normal(oq, S, gens)
    hopf_side = {
        "borel_e": uqsl2.borel_e_family(uq, 1),
        "borel_f": uqsl2.borel_f_family(uq, 1),
    }
    bijection = True
    image = {"cd_line": family_dagger(uq, oq, hopf_side["borel_e"]),
             "ab_line": family_dagger(uq, oq, hopf_side["borel_f"])}
    for r in uqsl2.divisors(N):
        if r < N:
            image["group_power_r%d" % r] = family_dagger(
                uq, oq, uqsl2.group_power_family(uq, r))
    for name, S in image.items():
        if S != normal[name]:
            bijection = False
    rep["matches_hopf_subalgebra_daggers"] = bijection
    rep["no_hopf_subalgebras"] = not any(
        uqsl2.is_hopf_subalgebra(oq, S)
        for S in list(normal.values()) + list(others.values()))
    rep["ok"] = all(rep.values())
    return rep


def order_reversal_report(uq, oq, rng, samples=2):
    """Containment flips through the dagger: on nested family pairs the
    dagger of the larger sits inside the dagger of the smaller; meet and
    join swap accordingly on a sample pair."""
    _check_partners(uq, oq)
    N = uq.N
    alg = uq.algebra
    pairs = []
    div = [r for r in uqsl2.divisors(N)]
    for r in div:
        for r2 in div:
            if r2 % r == 0 and r2 > r:
                pairs.append((uqsl2.group_power_family(uq, r2),
                              uqsl2.group_power_family(uq, r)))
                pairs.append((uqsl2.borel_e_family(uq, r2),
                              uqsl2.borel_e_family(uq, r)))
    pairs.append((uqsl2.group_power_family(uq, 1),
                  uqsl2.full_family(uq)))
    pairs.append((uqsl2.e_family(uq), uqsl2.borel_e_family(uq, 1)))
    rep = {"order_reversal": True, "meet_join_swap": True}
    for small, big in pairs:
        Ss, Sb = small.closure(), big.closure()
        if not Sb.contains_subspace(Ss):
            raise AssertionError("test pair is not nested: %s in %s"
                                 % (small.name, big.name))
        Ds = family_dagger(uq, oq, small)
        Db = family_dagger(uq, oq, big)
        if not Ds.contains_subspace(Db):
            rep["order_reversal"] = False
    A = uqsl2.borel_e_family(uq, 1)
    B = uqsl2.borel_f_family(uq, 1)
    SA, SB = A.closure(), B.closure()
    DA, DB = family_dagger(uq, oq, A), family_dagger(uq, oq, B)
    meet = coideal.intersect_subspaces(SA, SB)
    join = coideal.join_subalgebras(SA, SB)
    rep["meet_join_swap"] = (
        dagger(uq, oq, meet) == coideal.join_subalgebras(DA, DB)
        and dagger(uq, oq, join, [uq.K, uq.E, uq.Ftilde])
        == coideal.intersect_subspaces(DA, DB))
    rep["ok"] = all(rep.values())
    return rep


# ---------------------------------------------------------------------------
# formatting


def _format_key(key):
    i, j, k = key
    parts = []
    for letter, e in (("b", i), ("c", j), ("d", k)):
        if e == 1:
            parts.append(letter)
        elif e:
            parts.append("%s^%d" % (letter, e))
    return " ".join(parts) if parts else "1"


def format_key(self, key):
    return _format_key(key)


def format_element(self, u):
    if u.is_zero():
        return "0"
    parts = []
    for key in u.support():
        c = u.terms[key]
        mono = _format_key(key)
        cs = format_scalar(c)
        sign = ""
        if cs.startswith("-"):
            sign = "-"
            cs = format_scalar(-c)
        if mono == "1":
            body = cs if _atomic(cs) else "(%s)" % cs
        elif cs == "1":
            body = mono
        elif _atomic(cs):
            body = "%s * %s" % (cs, mono)
        else:
            body = "(%s) * %s" % (cs, mono)
        parts.append(sign + body)
    out = parts[0]
    for p in parts[1:]:
        out += " - " + p[1:] if p.startswith("-") else " + " + p
    return out


OqContext.format_key = format_key
OqContext.format_element = format_element
del format_key, format_element
