"""Dense univariate polynomial arithmetic and exact factorization.

Polynomials are immutable coefficient tuples, lowest degree first, over a
coefficient field described by a small domain object (``QQ``, ``GF(p)``,
or a number field).  The factorization entry points are:

* ``factor_mod_p``        -- Cantor-Zassenhaus over a prime field,
* ``factor_over_Q``       -- Berlekamp-Zassenhaus (squarefree decomposition,
                             modular factorization, Hensel lifting, subset
                             recombination) over the rationals,
* ``factor_over_number_field`` -- Trager's norm method over Q[x]/(f).

Every returned factorization is re-multiplied and compared with its input
before being handed back; a mismatch raises ``ConsistencyError``.
"""

import math
import random
from fractions import Fraction

from .errors import ConsistencyError


class RationalField:
    """Domain descriptor for Q."""

    characteristic = 0
    zero = Fraction(0)
    one = Fraction(1)

    def from_int(self, n):
        return Fraction(n)

    def __repr__(self):
        return "QQ"


QQ = RationalField()

_prime_fields = {}


class PrimeField:
    """Domain descriptor for the field with p elements, p prime."""

    def __init__(self, p):
        from .exact import ModularInt, is_prime
        if not is_prime(p):
            raise ValueError("%d is not prime" % p)
        self.p = p
        self.characteristic = p
        self.zero = ModularInt(0, p)
        self.one = ModularInt(1, p)

    def from_int(self, n):
        from .exact import ModularInt
        return ModularInt(n, self.p)

    def __repr__(self):
        return "GF(%d)" % self.p


def GF(p):
    if p not in _prime_fields:
        _prime_fields[p] = PrimeField(p)
    return _prime_fields[p]


class Poly:
    """Dense univariate polynomial over a field domain."""

    __slots__ = ("dom", "cs")

    def __init__(self, dom, coeffs):
        cs = list(coeffs)
        while cs and not cs[-1]:
            cs.pop()
        self.dom = dom
        self.cs = tuple(cs)

    @classmethod
    def from_ints(cls, dom, ints):
        return cls(dom, [dom.from_int(n) for n in ints])

    @classmethod
    def x(cls, dom):
        return cls(dom, [dom.zero, dom.one])

    @classmethod
    def const(cls, dom, c):
        return cls(dom, [c])

    @property
    def degree(self):
        return len(self.cs) - 1

    @property
    def lc(self):
        if not self.cs:
            raise ValueError("zero polynomial has no leading coefficient")
        return self.cs[-1]

    @property
    def is_zero(self):
        return not self.cs

    def coeff(self, i):
        return self.cs[i] if i < len(self.cs) else self.dom.zero

    def constant_value(self):
        if self.degree > 0:
            raise ValueError("not a constant")
        return self.cs[0] if self.cs else self.dom.zero

    def __bool__(self):
        return bool(self.cs)

    def __eq__(self, other):
        return isinstance(other, Poly) and self.cs == other.cs and self.dom == other.dom

    def __hash__(self):
        return hash(self.cs)

    def __neg__(self):
        return Poly(self.dom, [-c for c in self.cs])

    def __add__(self, other):
        a, b = self.cs, other.cs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] = out[i] + c
        return Poly(self.dom, out)

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        a, b = self.cs, other.cs
        if not a or not b:
            return Poly(self.dom, [])
        out = [self.dom.zero] * (len(a) + len(b) - 1)
        for i, ai in enumerate(a):
            if not ai:
                continue
            for j, bj in enumerate(b):
                if bj:
                    out[i + j] = out[i + j] + ai * bj
        return Poly(self.dom, out)

    def mul_scalar(self, c):
        return Poly(self.dom, [a * c for a in self.cs])

    def __divmod__(self, other):
        if other.is_zero:
            raise ZeroDivisionError("polynomial division by zero")
        q = [self.dom.zero] * max(0, self.degree - other.degree + 1)
        r = list(self.cs)
        inv = self.dom.one / other.lc
        d = other.degree
        while len(r) - 1 >= d and any(r):
            while r and not r[-1]:
                r.pop()
            if len(r) - 1 < d:
                break
            k = len(r) - 1 - d
            c = r[-1] * inv
            q[k] = c
            for i, oc in enumerate(other.cs):
                r[k + i] = r[k + i] - c * oc
            r.pop()
        return Poly(self.dom, q), Poly(self.dom, r)

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def __mod__(self, other):
        return divmod(self, other)[1]

    def exact_div(self, other):
        q, r = divmod(self, other)
        if not r.is_zero:
            raise ValueError("inexact polynomial division")
        return q

    def divides(self, other):
        """True if self divides other exactly."""
        if self.is_zero:
            return other.is_zero
        return (other % self).is_zero

    def monic(self):
        if self.is_zero:
            return self
        if self.lc == self.dom.one:
            return self
        inv = self.dom.one / self.lc
        return self.mul_scalar(inv)

    def derivative(self):
        return Poly(self.dom, [self.cs[i] * self.dom.from_int(i)
                               for i in range(1, len(self.cs))])

    def evaluate(self, c):
        acc = self.dom.zero
        for a in reversed(self.cs):
            acc = acc * c + a
        return acc

    def shift(self, c):
        """Taylor shift: the polynomial self(X + c)."""
        dom = self.dom
        acc = Poly(dom, [])
        xpc = Poly(dom, [c, dom.one])
        for a in reversed(self.cs):
            acc = acc * xpc + Poly.const(dom, a)
        return acc

    def map_coeffs(self, dom2, fn):
        return Poly(dom2, [fn(c) for c in self.cs])

    def pow_mod(self, e, m):
        """self**e reduced modulo m, by binary exponentiation."""
        result = Poly.const(self.dom, self.dom.one) % m
        base = self % m
        while e:
            if e & 1:
                result = (result * base) % m
            base = (base * base) % m
            e >>= 1
        return result

    def sort_key(self):
        return (self.degree, tuple(_coeff_key(c) for c in self.cs))

    def __repr__(self):
        return "Poly(%r, %r)" % (self.dom, list(self.cs))


def _coeff_key(c):
    if isinstance(c, Fraction):
        return (c.numerator, c.denominator)
    v = getattr(c, "v", None)
    if v is not None:
        return v
    coords = getattr(c, "coords", None)
    if coords is not None:
        return tuple((q.numerator, q.denominator) for q in coords)
    return c


def poly_gcd(a, b):
    """Monic greatest common divisor by the Euclidean algorithm."""
    if a.is_zero and b.is_zero:
        raise ValueError("gcd undefined")
    while not b.is_zero:
        a, b = b, a % b
    return a.monic()


def is_separable(f):
    """True iff gcd(f, f') = 1."""
    if f.is_zero:
        raise ValueError("separability of the zero polynomial is undefined")
    if f.degree == 0:
        return True
    g = poly_gcd(f, f.derivative())
    return g.degree == 0


def resultant_monic(a, b):
    """prod of b over the roots of a, for monic a (counting multiplicity).

    Equals Res(a, b) since a is monic.  Computed by the Euclidean
    recurrence, entirely in the coefficient field.
    """
    dom = a.dom
    if a.degree == 0:
        return dom.one
    r = b % a
    if r.is_zero:
        return dom.zero
    if r.degree == 0:
        return r.cs[0] ** a.degree
    c = r.lc
    sign = dom.one if (a.degree * r.degree) % 2 == 0 else -dom.one
    return (c ** a.degree) * sign * resultant_monic(r.monic(), a)


def interpolate(dom, xs, ys):
    """The unique polynomial of degree < len(xs) through the given points.

    Newton divided differences; all arithmetic exact in the domain.
    """
    n = len(xs)
    dd = list(ys)
    for k in range(1, n):
        for i in range(n - 1, k - 1, -1):
            dd[i] = (dd[i] - dd[i - 1]) / (xs[i] - xs[i - k])
    acc = Poly(dom, [])
    basis = Poly.const(dom, dom.one)
    for k in range(n):
        acc = acc + basis.mul_scalar(dd[k])
        basis = basis * Poly(dom, [-xs[k], dom.one])
    return acc


class Factorization:
    """unit * prod(factor^multiplicity), factors monic irreducible."""

    def __init__(self, dom, unit, factors):
        self.dom = dom
        self.unit = unit
        self.factors = sorted(factors, key=lambda fm: fm[0].sort_key())

    def expand(self):
        acc = Poly.const(self.dom, self.unit)
        for g, m in self.factors:
            for _ in range(m):
                acc = acc * g
        return acc

    def verify(self, f):
        if self.expand() != f:
            raise ConsistencyError("factorization does not re-multiply to its input")
        seen = set()
        for g, m in self.factors:
            if g.cs in seen:
                raise ConsistencyError("repeated factor in factorization")
            seen.add(g.cs)
        return self

    def __iter__(self):
        return iter(self.factors)

    def __len__(self):
        return len(self.factors)

    def __repr__(self):
        return "Factorization(unit=%r, factors=%r)" % (self.unit, self.factors)


# ---------------------------------------------------------------------------
# Cantor-Zassenhaus over GF(p)

def factor_mod_p(f):
    """Complete factorization over a prime field."""
    if f.is_zero:
        raise ValueError("cannot factor the zero polynomial")
    dom = f.dom
    if f.degree == 0:
        return Factorization(dom, f.cs[0], []).verify(f)
    unit = f.lc
    rng = random.Random(0x5EED + dom.p)
    parts = _factor_monic_modp(f.monic(), rng)
    return Factorization(dom, unit, parts).verify(f)


def _pth_root_modp(f):
    # f(X) = g(X^p) over GF(p); Frobenius fixes GF(p), so g just takes
    # every p-th coefficient.
    p = f.dom.p
    return Poly(f.dom, [f.cs[i] for i in range(0, len(f.cs), p)])


def _factor_monic_modp(f, rng):
    if f.degree == 0:
        return []
    p = f.dom.p
    d = f.derivative()
    if d.is_zero:
        inner = _factor_monic_modp(_pth_root_modp(f), rng)
        return [(g, m * p) for g, m in inner]
    u = f.exact_div(poly_gcd(f, d))
    mults = {}
    rem = f
    for g in _factor_squarefree_modp(u, rng):
        m = 0
        while g.divides(rem):
            rem = rem.exact_div(g)
            m += 1
        mults[g.cs] = (g, m)
    if rem.degree > 0:
        for g, m in _factor_monic_modp(rem, rng):
            if g.cs in mults:
                g0, m0 = mults[g.cs]
                mults[g.cs] = (g0, m0 + m)
            else:
                mults[g.cs] = (g, m)
    return list(mults.values())


def _factor_squarefree_modp(u, rng):
    """Distinct-degree then equal-degree splitting; u monic squarefree."""
    dom = u.dom
    p = dom.p
    out = []
    h = Poly.x(dom)
    v = u
    d = 0
    while v.degree > 0:
        d += 1
        if 2 * d > v.degree:
            out.append(v)
            break
        h = h.pow_mod(p, v)
        g = poly_gcd(h - Poly.x(dom), v)
        if g.degree > 0:
            out.extend(_equal_degree_split(g, d, rng))
            v = v.exact_div(g)
            h = h % v
    return out


def _equal_degree_split(g, d, rng):
    """Split a monic product of distinct irreducibles, all of degree d."""
    dom = g.dom
    p = dom.p
    if g.degree == d:
        return [g]
    while True:
        a = Poly(dom, [dom.from_int(rng.randrange(p)) for _ in range(g.degree)])
        if a.degree < 1:
            continue
        t = poly_gcd(a, g)
        if 0 < t.degree < g.degree:
            break
        if p > 2:
            w = a.pow_mod((p ** d - 1) // 2, g)
            t = poly_gcd(w - Poly.const(dom, dom.one), g)
        else:
            w = a % g
            tr = w
            for _ in range(d - 1):
                w = (w * w) % g
                tr = tr + w
            t = poly_gcd(tr % g, g)
        if 0 < t.degree < g.degree:
            break
    return _equal_degree_split(t, d, rng) + _equal_degree_split(g.exact_div(t), d, rng)


# ---------------------------------------------------------------------------
# Berlekamp-Zassenhaus over Q
#
# The Hensel lifting and recombination loops run on plain integer
# coefficient lists (lowest degree first) for speed; conversions to and
# from Poly happen only at the boundaries.

def _ztrim(a):
    while a and a[-1] == 0:
        a.pop()
    return a


def _zadd(a, b):
    out = [0] * max(len(a), len(b))
    for i, c in enumerate(a):
        out[i] += c
    for i, c in enumerate(b):
        out[i] += c
    return _ztrim(out)


def _zsub(a, b):
    out = [0] * max(len(a), len(b))
    for i, c in enumerate(a):
        out[i] += c
    for i, c in enumerate(b):
        out[i] -= c
    return _ztrim(out)


def _zmul(a, b):
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                out[i + j] += ai * bj
    return _ztrim(out)


def _zmod(a, m):
    return _ztrim([c % m for c in a])


def _zdivmod_monic(a, b, m=None):
    """Quotient and remainder by monic b, over Z or Z/m."""
    r = list(a)
    db = len(b) - 1
    q = [0] * max(0, len(r) - db)
    for k in range(len(r) - db - 1, -1, -1):
        c = r[k + db] % m if m else r[k + db]
        q[k] = c
        if c:
            for i in range(db + 1):
                r[k + i] -= c * b[i]
        if m:
            for i in range(db + 1):
                r[k + i] %= m
    del r[db:]
    if m:
        r = [c % m for c in r]
    return _ztrim(q), _ztrim(r)


def _zsym(a, m):
    """Symmetric representative of a mod m, coefficients in (-m/2, m/2]."""
    half = m // 2
    out = []
    for c in a:
        c %= m
        if c > half:
            c -= m
        out.append(c)
    return _ztrim(out)


def _to_int_list(f):
    return [int(c) for c in f.cs]


def _from_int_list(a):
    return Poly(QQ, [Fraction(c) for c in a])


def _modp_poly(a, p):
    return Poly.from_ints(GF(p), a)


def _hensel_pair(f, g, h, s, t, p, K):
    """Lift f = g*h from mod p to mod p^K (g, h monic, s*g + t*h = 1 mod p).

    Linear lifting: one Bezout pair serves every step.
    """
    m = p
    while m < p ** K:
        # e = (f - g*h) / m  (exact over Z), then everything mod p
        diff = _zsub(f, _zmul(g, h))
        e = _zmod([c // m for c in diff], p)
        se = _zmul(s, e)
        q, w = _zdivmod_monic(_zmod(se, p), h, p)
        u = _zmod(_zadd(_zmul(t, e), _zmul(q, g)), p)
        g = _zmod(_zadd(g, [c * m for c in u]), m * p)
        h = _zmod(_zadd(h, [c * m for c in w]), m * p)
        m *= p
    return g, h


def _hensel_multi(f, gs, p, K):
    """Lift monic f = prod(gs) from mod p to mod p^K, recursively by halves."""
    if len(gs) == 1:
        return [_zmod(f, p ** K)]
    mid = len(gs) // 2
    P = GF(p)
    gpoly = Poly.const(P, P.one)
    for g in gs[:mid]:
        gpoly = gpoly * _modp_poly(g, p)
    hpoly = Poly.const(P, P.one)
    for g in gs[mid:]:
        hpoly = hpoly * _modp_poly(g, p)
    # Bezout: s*g + t*h = 1 over GF(p)
    s, t = _ext_gcd_bezout(gpoly, hpoly)
    G, H = _hensel_pair(_zmod(f, p ** K),
                        [c.v for c in gpoly.cs], [c.v for c in hpoly.cs],
                        [c.v for c in s.cs], [c.v for c in t.cs], p, K)
    return _hensel_multi(G, gs[:mid], p, K) + _hensel_multi(H, gs[mid:], p, K)


def _ext_gcd_bezout(a, b):
    """s, t with s*a + t*b = gcd(a, b) = 1, for coprime a, b over a field."""
    dom = a.dom
    r0, r1 = a, b
    s0, s1 = Poly.const(dom, dom.one), Poly(dom, [])
    t0, t1 = Poly(dom, []), Poly.const(dom, dom.one)
    while not r1.is_zero:
        q, r = divmod(r0, r1)
        r0, r1 = r1, r
        s0, s1 = s1, s0 - q * s1
        t0, t1 = t1, t0 - q * t1
    if r0.degree != 0:
        raise ValueError("polynomials are not coprime")
    inv = dom.one / r0.cs[0]
    return s0.mul_scalar(inv), t0.mul_scalar(inv)


_BZ_PRIME_TRIES = 8


def _factor_squarefree_monic_int(G):
    """Irreducible monic integer factors of a monic squarefree G in Z[X]."""
    n = len(G) - 1
    if n <= 1:
        return [G]
    # Scan small good primes (G must stay squarefree mod p) and keep the
    # one giving the fewest modular factors: the subset search below is
    # exponential in that count.
    best = None
    tried = 0
    p = 1
    from .exact import next_prime
    while tried < _BZ_PRIME_TRIES:
        p = next_prime(p)
        Pf = GF(p)
        gp = Poly.from_ints(Pf, G)
        if gp.degree != n:
            continue
        dgp = gp.derivative()
        if dgp.is_zero or poly_gcd(gp, dgp).degree != 0:
            continue
        tried += 1
        fac = factor_mod_p(gp.monic())
        count = len(fac.factors)
        if best is None or count < best[0]:
            best = (count, p, [g for g, _ in fac.factors])
        if count == 1:
            break
    count, p, modfactors = best
    if count == 1:
        return [G]
    # Mignotte bound: coefficients of any monic divisor of G are below
    # 2^(n-1) * ||G||_2; lift until p^K exceeds twice that.
    norm2 = math.isqrt(sum(c * c for c in G)) + 1
    bound = 2 * (2 ** (n - 1)) * norm2 + 1
    K = 1
    while p ** K <= bound:
        K += 1
    pK = p ** K
    lifted = _hensel_multi(_zmod(G, pK), [[c.v for c in g.cs] for g in modfactors], p, K)
    check = [1]
    for g in lifted:
        check = _zmod(_zmul(check, g), pK)
    if check != _zmod(G, pK):
        raise ConsistencyError("Hensel lifting failed to reproduce the input")
    return _recombine(G, lifted, pK)


def _recombine(G, lifted, pK):
    """Zassenhaus subset search over the lifted modular factors."""
    import itertools
    out = []
    live = list(range(len(lifted)))
    s = 1
    tc = G[0]
    while 2 * s <= len(live):
        found = False
        for combo in itertools.combinations(live, s):
            cand = [1]
            for i in combo:
                cand = _zmod(_zmul(cand, lifted[i]), pK)
            cand = _zsym(cand, pK)
            if tc != 0 and cand[0] != 0 and tc % cand[0] != 0:
                continue
            q, r = _zdivmod_monic(G, cand)
            if not r:
                out.append(cand)
                G = q
                tc = G[0] if G else 0
                live = [i for i in live if i not in combo]
                found = True
                break
        if not found:
            s += 1
    if len(G) - 1 > 0:
        out.append(G)
    return out


def _yun_squarefree_Q(f):
    """Yun's squarefree decomposition of a monic f over Q: [(g, mult)]."""
    df = f.derivative()
    a = poly_gcd(f, df)
    b = f.exact_div(a)
    c = df.exact_div(a)
    d = c - b.derivative()
    out = []
    i = 1
    while b.degree > 0:
        g = poly_gcd(b, d)
        if g.degree > 0:
            out.append((g, i))
        b = b.exact_div(g)
        c = d.exact_div(g)
        d = c - b.derivative()
        i += 1
    return out


def factor_over_Q(f):
    """Complete factorization into monic irreducibles over Q, times a unit."""
    if f.is_zero:
        raise ValueError("cannot factor the zero polynomial")
    if f.dom is not QQ:
        raise ValueError("factor_over_Q requires rational coefficients")
    if f.degree == 0:
        return Factorization(QQ, f.cs[0], []).verify(f)
    unit = f.lc
    monic = f.monic()
    factors = []
    for g, mult in _yun_squarefree_Q(monic):
        # Clear denominators while keeping the polynomial monic:
        # substitute X -> X/d and rescale, factor over Z, undo.
        m = g.degree
        d = 1
        for c in g.cs:
            d = d * c.denominator // math.gcd(d, c.denominator)
        Gz = [int(g.cs[i] * d ** (m - i)) for i in range(m + 1)]
        for H in _factor_squarefree_monic_int(Gz):
            k = len(H) - 1
            back = Poly(QQ, [Fraction(H[i] * d ** i, d ** k) for i in range(k + 1)])
            factors.append((back, mult))
    return Factorization(QQ, unit, factors).verify(f)


# ---------------------------------------------------------------------------
# Trager's method over a number field L = Q[x]/(fL)

def _norm_with_shift(f, L, s):
    """Res_y(fL(y), f(X - s*y)) in Q[X], by evaluation and interpolation.

    ``f`` is monic over L.  The result is the norm of f(X - s*x), monic
    of degree deg(fL) * deg(f).
    """
    fL = L.defining
    n = fL.degree
    m = f.degree
    D = n * m
    coeff_reps = [Poly(QQ, c.coords) for c in f.cs]
    xs = []
    ys = []
    c = 0
    while len(xs) <= D:
        for point in ([Fraction(0)] if c == 0 else [Fraction(c), Fraction(-c)]):
            if len(xs) > D:
                break
            # G(y) = sum_i A_i(y) * (point - s*y)^i
            base = Poly(QQ, [point, Fraction(-s)])
            acc = Poly(QQ, [])
            power = Poly.const(QQ, Fraction(1))
            for rep in coeff_reps:
                acc = acc + power * rep
                power = power * base
            xs.append(point)
            ys.append(resultant_monic(fL, acc))
        c += 1
    N = interpolate(QQ, xs, ys)
    if N.degree != D or N.lc != 1:
        raise ConsistencyError("norm polynomial has wrong shape")
    return N


def factor_over_number_field(f, L):
    """Factor a squarefree f in L[X] into monic irreducibles over L."""
    if f.is_zero:
        raise ValueError("cannot factor the zero polynomial")
    if f.degree >= 1:
        g = poly_gcd(f, f.derivative())
        if g.degree != 0:
            raise ValueError("squarefree required")
    unit = f.lc if f.cs else L.one
    fm = f.monic()
    if f.degree <= 1:
        facs = [(fm, 1)] if f.degree == 1 else []
        return Factorization(L, unit, facs).verify(f)
    s = 0
    while True:
        N = _norm_with_shift(fm, L, s)
        if poly_gcd(N, N.derivative()).degree == 0:
            break
        s += 1
    nf = factor_over_Q(N)
    sx = L.gen().scale(Fraction(s)) if s else L.zero
    out = []
    for Ni, _ in nf.factors:
        lifted = Ni.map_coeffs(L, L.from_rational)
        shifted = lifted.shift(sx)
        h = poly_gcd(fm, shifted)
        if h.degree > 0:
            out.append((h.monic(), 1))
    fac = Factorization(L, unit, out)
    fac.verify(f)
    return fac
