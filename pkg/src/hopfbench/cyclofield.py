"""Exact arithmetic in the cyclotomic field Q(zeta_N), N odd.

Scalars are residues modulo the N-th cyclotomic polynomial Phi_N, stored as
trimmed tuples of Fractions, so every computation downstream of this module is
exact.  The root of unity q = zeta_N is the class of X.  The module also
provides the q-combinatorics (q-integers, q-factorials, q-binomials via the
Pascal recursion, never by division), a small polynomial type over the field,
and a parser/formatter for a human-readable scalar grammar:

    scalar := term (('+'|'-') term)*
    term   := factor ('*' factor)*
    factor := ['-'] ( '(' scalar ')' | 'q' ['^' int] | int ['/' int] )

Whitespace is insignificant; exponents may be negative (q^-2 == q^(N-2)).
"""

from fractions import Fraction

_ZERO = Fraction(0)
_ONE = Fraction(1)


def _poly_trim(c):
    while c and c[-1] == 0:
        c.pop()
    return c


def _poly_mul(a, b):
    out = [_ZERO] * (len(a) + len(b) - 1) if a and b else []
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                if y:
                    out[i + j] += x * y
    return _poly_trim(out)


def _poly_divmod(a, b):
    """Exact division with remainder in Q[X]; b must be nonzero."""
    a = list(a)
    db, lb = len(b) - 1, b[-1]
    q = [_ZERO] * max(len(a) - db, 0)
    while len(a) - 1 >= db and _poly_trim(a):
        shift = len(a) - 1 - db
        c = a[-1] / lb
        q[shift] = c
        for i, y in enumerate(b):
            a[shift + i] -= c * y
        _poly_trim(a)
    return _poly_trim(q), a


def _poly_xgcd(a, b):
    """Extended gcd in Q[X]: returns (g, s, t) with s*a + t*b = g."""
    r0, r1 = list(a), list(b)
    s0, s1 = [_ONE], []
    t0, t1 = [], [_ONE]
    while r1:
        q, r = _poly_divmod(r0, r1)
        r0, r1 = r1, r
        s0, s1 = s1, _poly_trim([x - y for x, y in _zip_pad(s0, _poly_mul(q, s1))])
        t0, t1 = t1, _poly_trim([x - y for x, y in _zip_pad(t0, _poly_mul(q, t1))])
    return r0, s0, t0


def _zip_pad(a, b):
    n = max(len(a), len(b))
    for i in range(n):
        yield (a[i] if i < len(a) else _ZERO, b[i] if i < len(b) else _ZERO)


def cyclotomic_polynomial(n):
    """Coefficients of Phi_n (ascending, monic), by exact division of X^n - 1
    by the product of Phi_d over proper divisors d of n."""
    if n < 1:
        raise ValueError("n must be positive")
    num = [_ZERO] * n + [_ONE]
    num[0] = -_ONE
    den = [_ONE]
    for d in range(1, n):
        if n % d == 0:
            den = _poly_mul(den, cyclotomic_polynomial(d))
    q, r = _poly_divmod(num, den)
    if r:
        raise ArithmeticError("cyclotomic division left a remainder")
    return q


class CycField:
    """The field Q(zeta_N) for odd N >= 3, with q = zeta_N the class of X."""

    def __init__(self, order):
        if not isinstance(order, int) or order < 3 or order % 2 == 0:
            raise ValueError("order must be an odd integer >= 3, got %r" % (order,))
        self.order = order
        self.modulus = tuple(cyclotomic_polynomial(order))
        self.degree = len(self.modulus) - 1
        # X^d = -(lower part of Phi), Phi monic; used to fold high powers down
        self._top_row = tuple(-c for c in self.modulus[:-1])
        self.zero = CycScalar(self, ())
        self.one = CycScalar(self, (_ONE,))
        qpow = []
        for k in range(order):
            c = [_ZERO] * k + [_ONE]
            qpow.append(CycScalar(self, self._reduce(c)))
        self._qpow = qpow
        self.q = qpow[1]

    def _reduce(self, coeffs):
        d = self.degree
        c = list(coeffs)
        row = self._top_row
        while len(c) > d:
            x = c.pop()
            if x:
                base = len(c) - d
                for i, y in enumerate(row):
                    if y:
                        c[base + i] += x * y
        return tuple(_poly_trim(c))

    def q_power(self, k):
        return self._qpow[k % self.order]

    def scalar(self, value):
        """Embed an int or Fraction as a field element."""
        v = Fraction(value)
        return CycScalar(self, (v,) if v else ())

    def from_coeffs(self, coeffs):
        return CycScalar(self, self._reduce([Fraction(c) for c in coeffs]))

    def __eq__(self, other):
        return isinstance(other, CycField) and other.order == self.order

    def __hash__(self):
        return hash(("CycField", self.order))

    def __repr__(self):
        return "CycField(%d)" % self.order


def make_context(order):
    """Build the exact arithmetic context for Q(zeta_order)."""
    return CycField(order)


class CycScalar:
    """An element of Q(zeta_N), immutable and hashable."""

    __slots__ = ("field", "coeffs")

    def __init__(self, field, coeffs):
        self.field = field
        self.coeffs = coeffs

    def _check(self, other):
        if isinstance(other, CycScalar):
            if other.field.order != self.field.order:
                raise ValueError("mixed cyclotomic orders %d and %d"
                                 % (self.field.order, other.field.order))
            return other
        if isinstance(other, (int, Fraction)):
            return self.field.scalar(other)
        return None

    def __add__(self, other):
        other = self._check(other)
        if other is None:
            return NotImplemented
        c = [x + y for x, y in _zip_pad(self.coeffs, other.coeffs)]
        return CycScalar(self.field, tuple(_poly_trim(c)))

    __radd__ = __add__

    def __neg__(self):
        return CycScalar(self.field, tuple(-x for x in self.coeffs))

    def __sub__(self, other):
        other = self._check(other)
        if other is None:
            return NotImplemented
        c = [x - y for x, y in _zip_pad(self.coeffs, other.coeffs)]
        return CycScalar(self.field, tuple(_poly_trim(c)))

    def __rsub__(self, other):
        return -(self - other)

    def __mul__(self, other):
        other = self._check(other)
        if other is None:
            return NotImplemented
        if not self.coeffs or not other.coeffs:
            return self.field.zero
        return CycScalar(self.field,
                         self.field._reduce(_poly_mul(list(self.coeffs),
                                                      list(other.coeffs))))

    __rmul__ = __mul__

    def inverse(self):
        if not self.coeffs:
            raise ZeroDivisionError("inverse of zero in CycField")
        g, s, _ = _poly_xgcd(list(self.coeffs), list(self.field.modulus))
        if len(g) != 1:
            raise ArithmeticError("modulus not coprime to nonzero residue")
        inv = [x / g[0] for x in s]
        return CycScalar(self.field, self.field._reduce(inv))

    def __truediv__(self, other):
        other = self._check(other)
        if other is None:
            return NotImplemented
        return self * other.inverse()

    def __rtruediv__(self, other):
        return self.inverse() * other

    def __pow__(self, n):
        if not isinstance(n, int):
            return NotImplemented
        if n < 0:
            return self.inverse() ** (-n)
        out = self.field.one
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = self.field.scalar(other)
        return (isinstance(other, CycScalar)
                and other.field.order == self.field.order
                and other.coeffs == self.coeffs)

    def __hash__(self):
        return hash((self.field.order, self.coeffs))

    def __bool__(self):
        return bool(self.coeffs)

    def is_one(self):
        return self.coeffs == (_ONE,)

    def __repr__(self):
        return format_scalar(self)


# ---------------------------------------------------------------------------
# q-combinatorics


def q_integer(m, t):
    """(m)_t = (1 - t^m)/(1 - t) for any integer m, computed without division.

    t must be a CycScalar different from 1 (the classical limit is out of
    scope here and asking for it is treated as a caller bug).
    """
    if not isinstance(t, CycScalar):
        raise TypeError("t must be a CycScalar")
    if t.is_one():
        raise ValueError("q_integer is undefined at t = 1")
    field = t.field
    out = field.zero
    if m >= 0:
        p = field.one
        for _ in range(m):
            out = out + p
            p = p * t
    else:
        p = t ** m
        for _ in range(-m):
            out = out - p
            p = p * t
    return out


def q_factorial(m, t):
    """(m)_t! = (1)_t (2)_t ... (m)_t for m >= 0."""
    if m < 0:
        raise ValueError("q_factorial needs m >= 0")
    out = t.field.one
    for k in range(1, m + 1):
        out = out * q_integer(k, t)
    return out


def q_binomial(n, i, t):
    """Gaussian binomial binom(n, i)_t via the q-Pascal recursion
    binom(n, i) = binom(n-1, i-1) + t^i binom(n-1, i); no division, so the
    value is correct even when q-integers in the would-be quotient vanish."""
    if n < 0:
        raise ValueError("q_binomial needs n >= 0")
    field = t.field
    if i < 0 or i > n:
        return field.zero
    row = [field.one]
    for _ in range(n):
        new = [field.one]
        for j in range(1, len(row)):
            new.append(row[j - 1] + t ** j * row[j])
        new.append(field.one)
        row = new
    return row[i]


# ---------------------------------------------------------------------------
# polynomials over the field (used for minimal polynomials and their calculus)


class Poly:
    """Polynomial with CycScalar coefficients, ascending order."""

    __slots__ = ("field", "coeffs")

    def __init__(self, field, coeffs=()):
        c = [x if isinstance(x, CycScalar) else field.scalar(x) for x in coeffs]
        while c and not c[-1]:
            c.pop()
        self.field = field
        self.coeffs = tuple(c)

    @staticmethod
    def x(field):
        return Poly(field, (field.zero, field.one))

    @staticmethod
    def constant(field, c):
        return Poly(field, (c,))

    @property
    def degree(self):
        return len(self.coeffs) - 1  # -1 for the zero polynomial

    def leading(self):
        if not self.coeffs:
            raise ValueError("zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    def is_zero(self):
        return not self.coeffs

    def is_constant(self):
        return len(self.coeffs) <= 1

    def __eq__(self, other):
        return (isinstance(other, Poly) and other.field == self.field
                and other.coeffs == self.coeffs)

    def __hash__(self):
        return hash((self.field.order, self.coeffs))

    def __add__(self, other):
        return Poly(self.field, [x + y for x, y in _zip_pad_s(self, other)])

    def __sub__(self, other):
        return Poly(self.field, [x - y for x, y in _zip_pad_s(self, other)])

    def __neg__(self):
        return Poly(self.field, [-x for x in self.coeffs])

    def __mul__(self, other):
        if isinstance(other, CycScalar):
            return Poly(self.field, [x * other for x in self.coeffs])
        if not isinstance(other, Poly):
            return NotImplemented
        if self.is_zero() or other.is_zero():
            return Poly(self.field)
        out = [self.field.zero] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, x in enumerate(self.coeffs):
            if x:
                for j, y in enumerate(other.coeffs):
                    if y:
                        out[i + j] = out[i + j] + x * y
        return Poly(self.field, out)

    __rmul__ = __mul__

    def __pow__(self, n):
        out = Poly(self.field, (self.field.one,))
        for _ in range(n):
            out = out * self
        return out

    def __call__(self, value):
        out = self.field.zero
        for c in reversed(self.coeffs):
            out = out * value + c
        return out

    def divmod(self, other):
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        db = other.degree
        lead_inv = other.leading().inverse()
        quo = [self.field.zero] * max(len(rem) - db, 0)
        while len(rem) - 1 >= db:
            while rem and not rem[-1]:
                rem.pop()
            if len(rem) - 1 < db:
                break
            c = rem[-1] * lead_inv
            shift = len(rem) - 1 - db
            quo[shift] = c
            for i, y in enumerate(other.coeffs):
                rem[shift + i] = rem[shift + i] - c * y
        return Poly(self.field, quo), Poly(self.field, rem)

    def __mod__(self, other):
        return self.divmod(other)[1]

    def __floordiv__(self, other):
        return self.divmod(other)[0]

    def monic(self):
        if self.is_zero():
            return self
        return self * self.leading().inverse()

    def derivative(self):
        return Poly(self.field,
                    [self.field.scalar(k) * c
                     for k, c in enumerate(self.coeffs)][1:])

    def gcd(self, other):
        a, b = self, other
        while not b.is_zero():
            a, b = b, a % b
        return a.monic()

    def format(self, var="X"):
        if self.is_zero():
            return "0"
        parts = []
        for k in range(self.degree, -1, -1):
            c = self.coeffs[k]
            if not c:
                continue
            if k == 0:
                mon = None
            elif k == 1:
                mon = var
            else:
                mon = "%s^%d" % (var, k)
            cs = format_scalar(c)
            if mon is None:
                parts.append(cs)
            elif cs == "1":
                parts.append(mon)
            elif cs == "-1":
                parts.append("-" + mon)
            elif "+" in cs or (cs.count("-") - cs.startswith("-")) > 0:
                parts.append("(%s)*%s" % (cs, mon))
            else:
                parts.append("%s*%s" % (cs, mon))
        out = parts[0]
        for p in parts[1:]:
            out += " - " + p[1:] if p.startswith("-") else " + " + p
        return out

    def __repr__(self):
        return self.format()


def _zip_pad_s(a, b):
    if a.field != b.field:
        raise ValueError("mixed fields")
    n = max(len(a.coeffs), len(b.coeffs))
    z = a.field.zero
    for i in range(n):
        yield (a.coeffs[i] if i < len(a.coeffs) else z,
               b.coeffs[i] if i < len(b.coeffs) else z)


# ---------------------------------------------------------------------------
# scalar grammar


def format_scalar(s):
    """Canonical text for a scalar; format_scalar and parse_scalar are
    mutually inverse on canonical forms."""
    if not s.coeffs:
        return "0"
    parts = []
    for k in range(len(s.coeffs) - 1, -1, -1):
        c = s.coeffs[k]
        if not c:
            continue
        if k == 0:
            parts.append(_frac_str(c))
            continue
        mon = "q" if k == 1 else "q^%d" % k
        if c == 1:
            parts.append(mon)
        elif c == -1:
            parts.append("-" + mon)
        else:
            parts.append("%s*%s" % (_frac_str(c), mon))
    out = parts[0]
    for p in parts[1:]:
        out += " - " + p[1:] if p.startswith("-") else " + " + p
    return out


def _frac_str(c):
    return str(c.numerator) if c.denominator == 1 else "%d/%d" % (c.numerator, c.denominator)


class ScalarSyntaxError(ValueError):
    pass


def _tokenize(text):
    toks = []
    i, n = 0, len(text)
    while i < n:
        ch = text[i]
        if ch.isspace():
            i += 1
        elif ch in "+-*/()^":
            toks.append((ch, i))
            i += 1
        elif ch.isdigit():
            j = i
            while j < n and text[j].isdigit():
                j += 1
            toks.append((("int", int(text[i:j])), i))
            i = j
        elif ch == "q":
            toks.append(("q", i))
            i += 1
        else:
            raise ScalarSyntaxError("unexpected character %r at position %d" % (ch, i))
    return toks


def parse_scalar(text, field):
    """Parse the scalar grammar into a CycScalar over the given field."""
    toks = _tokenize(text)
    pos = [0]

    def peek():
        return toks[pos[0]][0] if pos[0] < len(toks) else None

    def take():
        t = toks[pos[0]]
        pos[0] += 1
        return t

    def parse_int():
        sign = 1
        if peek() == "-":
            take()
            sign = -1
        t = peek()
        if not (isinstance(t, tuple) and t[0] == "int"):
            raise ScalarSyntaxError("expected an integer in %r" % text)
        take()
        return sign * t[1]

    def factor():
        neg = False
        while peek() == "-":
            take()
            neg = not neg
        t = peek()
        if t == "(":
            take()
            v = expr()
            if peek() != ")":
                raise ScalarSyntaxError("missing ')' in %r" % text)
            take()
        elif t == "q":
            take()
            e = 1
            if peek() == "^":
                take()
                e = parse_int()
            v = field.q_power(e)
        elif isinstance(t, tuple) and t[0] == "int":
            take()
            num = t[1]
            if peek() == "/":
                take()
                t2 = peek()
                if not (isinstance(t2, tuple) and t2[0] == "int"):
                    raise ScalarSyntaxError("expected a denominator in %r" % text)
                take()
                v = field.scalar(Fraction(num, t2[1]))
            else:
                v = field.scalar(num)
        else:
            raise ScalarSyntaxError("unexpected token at position %d in %r"
                                    % (toks[pos[0]][1] if pos[0] < len(toks) else len(text), text))
        return -v if neg else v

    def term():
        v = factor()
        while peek() == "*":
            take()
            v = v * factor()
        return v

    def expr():
        v = term()
        while peek() in ("+", "-"):
            op = take()[0]
            w = term()
            v = v + w if op == "+" else v - w
        return v

    v = expr()
    if pos[0] != len(toks):
        raise ScalarSyntaxError("trailing tokens at position %d in %r" % (toks[pos[0]][1], text))
    return v


def random_scalar(field, rng, *, height=2, max_terms=2, nonzero=False):
    """A random low-height polynomial in q with small rational coefficients."""
    while True:
        s = field.zero
        for _ in range(rng.randint(1, max_terms)):
            num = rng.randint(-height, height)
            den = rng.choice((1, 1, 1, 2))
            s = s + field.scalar(Fraction(num, den)) * field.q_power(rng.randrange(field.order))
        if s or not nonzero:
            return s
