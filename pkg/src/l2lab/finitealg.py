"""Finite commutative algebras over F_q as structure-constant tables.

An algebra is a dimension, a symmetric d x d table of coordinate
vectors and a unit vector; subalgebras and ideals are echelon bases over
F_q.  Everything an analysis needs -- maximal ideals, conductor, crucial
ideal, seminormalization, t-closure, brute-force subalgebra enumeration
-- lives here; the theorem-level classification sits in classify.py and
uses these as its oracles.
"""

import itertools

from . import exact
from .caps import check_candidates, check_elements
from .errors import ConsistencyError
from .poly import GF, Poly, factor_mod_p


# ---------------------------------------------------------------------------
# Small finite fields F_q, q = p^k, with full lookup tables.

class GFElem:
    __slots__ = ("field", "i")

    def __init__(self, field, i):
        self.field = field
        self.i = i

    def __add__(self, other):
        return GFElem(self.field, self.field.add_t[self.i][other.i])

    def __sub__(self, other):
        return GFElem(self.field, self.field.add_t[self.i][self.field.neg_t[other.i]])

    def __neg__(self):
        return GFElem(self.field, self.field.neg_t[self.i])

    def __mul__(self, other):
        return GFElem(self.field, self.field.mul_t[self.i][other.i])

    def __truediv__(self, other):
        if other.i == 0:
            raise ZeroDivisionError("division by zero in GF(%d)" % self.field.q)
        return GFElem(self.field, self.field.mul_t[self.i][self.field.inv_t[other.i]])

    def __pow__(self, e):
        acc = self.field.one
        base = self
        for bit in bin(e)[2:]:
            acc = acc * acc
            if bit == "1":
                acc = acc * base
        return acc

    def __eq__(self, other):
        return isinstance(other, GFElem) and self.i == other.i and self.field is other.field

    def __hash__(self):
        return hash((self.field.q, self.i))

    def __bool__(self):
        return self.i != 0

    def __lt__(self, other):
        return self.i < other.i

    def __repr__(self):
        return self.field.elem_name(self.i)


class SmallField:
    """F_q with precomputed arithmetic tables; q = p^k, q small."""

    def __init__(self, p, k):
        self.p = p
        self.k = k
        self.q = p ** k
        self.characteristic = p
        if k == 1:
            self.modpoly = None
            add = [[(a + b) % p for b in range(p)] for a in range(p)]
            mul = [[(a * b) % p for b in range(p)] for a in range(p)]
        else:
            self.modpoly = _find_irreducible_prime_field(p, k)
            tuples = list(itertools.product(range(p), repeat=k))
            # index = sum c_i p^i with c_0 the constant coefficient
            idx = {t: sum(c * p ** i for i, c in enumerate(t)) for t in tuples}
            by_idx = sorted(tuples, key=lambda t: idx[t])
            add = [[idx[tuple((a[i] + b[i]) % p for i in range(k))] for b in by_idx]
                   for a in by_idx]
            mul = []
            for a in by_idx:
                row = []
                for b in by_idx:
                    prod = [0] * (2 * k - 1)
                    for i, ai in enumerate(a):
                        if ai:
                            for j, bj in enumerate(b):
                                prod[i + j] = (prod[i + j] + ai * bj) % p
                    while len(prod) > k:
                        top = prod.pop()
                        if top:
                            off = len(prod) - k
                            for i in range(k):
                                prod[off + i] = (prod[off + i] - top * self.modpoly[i]) % p
                    row.append(idx[tuple(prod)])
                mul.append(row)
        self.add_t = add
        self.mul_t = mul
        self.neg_t = [add[a].index(0) for a in range(self.q)]
        inv = [None] * self.q
        for a in range(1, self.q):
            inv[a] = mul[a].index(1)
        self.inv_t = inv
        self.zero = GFElem(self, 0)
        self.one = GFElem(self, 1)

    def from_int(self, n):
        return GFElem(self, n % self.p)

    def element(self, i):
        return GFElem(self, i % self.q)

    def elements(self):
        return [GFElem(self, i) for i in range(self.q)]

    def elem_name(self, i):
        if self.k == 1:
            return str(i)
        p = self.p
        terms = []
        pos = 0
        while i:
            c = i % p
            i //= p
            if c:
                if pos == 0:
                    terms.append(str(c))
                else:
                    mono = "u" if pos == 1 else "u^%d" % pos
                    terms.append(mono if c == 1 else "%d*%s" % (c, mono))
            pos += 1
        return " + ".join(terms) if terms else "0"

    def __eq__(self, other):
        return self is other

    def __hash__(self):
        return hash(("SmallField", self.q))

    def __repr__(self):
        return "F%d" % self.q


_small_fields = {}


def small_field(q):
    if q not in _small_fields:
        p, k = _prime_power(q)
        _small_fields[q] = SmallField(p, k)
    return _small_fields[q]


def _prime_power(q):
    if q < 2:
        raise ValueError("%d is not a prime power" % q)
    p = 2
    while p * p <= q:
        if q % p == 0:
            k = 0
            m = q
            while m % p == 0:
                m //= p
                k += 1
            if m != 1:
                raise ValueError("%d is not a prime power" % q)
            return p, k
        p += 1
    return q, 1


def _find_irreducible_prime_field(p, k):
    """Lex-least monic irreducible of degree k over F_p, low coefficients first."""
    dom = GF(p)
    for tail in itertools.product(range(p), repeat=k):
        f = Poly.from_ints(dom, list(tail) + [1])
        if f.degree != k or not f.cs[0]:
            continue
        fac = factor_mod_p(f)
        if len(fac.factors) == 1 and fac.factors[0][1] == 1:
            return list(tail)
    raise ConsistencyError("no irreducible polynomial found")


def irreducible_over(Fq, k):
    """Lex-least monic irreducible of degree k over an arbitrary SmallField."""
    if k == 1:
        return Poly(Fq, [Fq.one, Fq.one])  # X + 1
    for tail in itertools.product(range(Fq.q), repeat=k):
        if tail[0] == 0:
            continue
        f = Poly(Fq, [Fq.element(c) for c in tail] + [Fq.one])
        if f.degree != k:
            continue
        if _is_irreducible_gf(f, Fq):
            return f
    raise ConsistencyError("no irreducible polynomial found")


def _is_irreducible_gf(f, Fq):
    k = f.degree
    x = Poly.x(Fq)
    h = x.pow_mod(Fq.q ** k, f)
    if h != x % f:
        return False
    for ell in set(_prime_divisors(k)):
        g = x.pow_mod(Fq.q ** (k // ell), f) - x
        from .poly import poly_gcd
        if g.is_zero or poly_gcd(g, f).degree != 0:
            return False
    return True


def _prime_divisors(n):
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        out.append(n)
    return out


# ---------------------------------------------------------------------------
# Vectors over F_q (plain tuples of GFElem)

def vadd(u, v):
    return tuple(a + b for a, b in zip(u, v))


def vsub(u, v):
    return tuple(a - b for a, b in zip(u, v))


def vscale(u, c):
    return tuple(a * c for a in u)


def echelon(vectors):
    return tuple(exact.row_space_basis([list(v) for v in vectors]))


def in_span(vec, echelon_basis):
    return exact.in_row_space(list(vec), [list(b) for b in echelon_basis])


def coords_in_span(vec, echelon_basis):
    """Coefficients of vec over an echelon basis, or None."""
    v = list(vec)
    coeffs = []
    for row in echelon_basis:
        pc = next((j for j, x in enumerate(row) if x), None)
        if pc is None:
            coeffs.append(v[0] - v[0] if v else None)
            continue
        c = v[pc] / row[pc]
        coeffs.append(c)
        if c:
            v = [a - c * b for a, b in zip(v, row)]
    if any(v):
        return None
    return coeffs


def vec_key(v):
    return tuple(c.i for c in v)


# ---------------------------------------------------------------------------
# Algebras

class FiniteAlgebra:
    """Commutative unital F_q-algebra by structure constants."""

    def __init__(self, field, table, unit, names=None, check=True):
        self.field = field
        self.dim = len(table)
        self.table = tuple(tuple(tuple(v) for v in row) for row in table)
        self.unit = tuple(unit)
        self.names = list(names) if names else ["e%d" % i for i in range(self.dim)]
        self.size = field.q ** self.dim
        if check:
            check_elements(self.size, "algebra construction")
            self._check_axioms()

    def _check_axioms(self):
        d = self.dim
        for i in range(d):
            for j in range(i, d):
                if self.table[i][j] != self.table[j][i]:
                    raise ValueError("multiplication table is not commutative")
        basis = [self.basis_vector(i) for i in range(d)]
        for i in range(d):
            if self.mul(self.unit, basis[i]) != basis[i]:
                raise ValueError("unit does not act as identity")
        for i in range(d):
            for j in range(i, d):
                for k in range(j, d):
                    left = self.mul(self.mul(basis[i], basis[j]), basis[k])
                    right = self.mul(basis[i], self.mul(basis[j], basis[k]))
                    if left != right:
                        raise ValueError("multiplication table is not associative")

    def zero_vec(self):
        return (self.field.zero,) * self.dim

    def basis_vector(self, i):
        return tuple(self.field.one if j == i else self.field.zero
                     for j in range(self.dim))

    def mul(self, u, v):
        F = self.field
        out = [F.zero] * self.dim
        for i, ui in enumerate(u):
            if not ui:
                continue
            for j, vj in enumerate(v):
                if not vj:
                    continue
                c = ui * vj
                row = self.table[i][j]
                for k2, t in enumerate(row):
                    if t:
                        out[k2] = out[k2] + c * t
        return tuple(out)

    def power(self, v, e):
        acc = self.unit
        base = v
        while e:
            if e & 1:
                acc = self.mul(acc, base)
            base = self.mul(base, base)
            e >>= 1
        return acc

    def scalar(self, c):
        return vscale(self.unit, c)

    def elements(self, what="element enumeration"):
        check_elements(self.size, what)
        F = self.field
        elems = F.elements()
        return [tuple(t) for t in itertools.product(elems, repeat=self.dim)]

    def is_nilpotent(self, v):
        w = v
        e = 1
        while e <= self.dim:
            w = self.mul(w, w)
            e *= 2
        return not any(w)

    def is_idempotent(self, v):
        return self.mul(v, v) == v

    def element_str(self, v):
        terms = []
        for c, name in zip(v, self.names):
            if not c:
                continue
            cn = repr(c)
            if cn == "1":
                terms.append(name)
            elif name == "1":
                terms.append(cn)
            else:
                terms.append("%s*%s" % (cn if "+" not in cn else "(%s)" % cn, name))
        return " + ".join(terms) if terms else "0"

    def __repr__(self):
        return "FiniteAlgebra(F%d, dim %d)" % (self.field.q, self.dim)


def product_algebra(F, factor_degrees):
    """Direct product of fields F_{q^k}, each realized as F_q[W]/(m_k)."""
    blocks = []
    names = []
    offset = 0
    for s, k in enumerate(factor_degrees, start=1):
        m = irreducible_over(F, k)
        blocks.append((offset, k, m))
        for j in range(k):
            if j == 0:
                names.append("e%d" % s)
            elif j == 1:
                names.append("u%d" % s)
            else:
                names.append("u%d^%d" % (s, j))
        offset += k
    dim = offset
    zero = [F.zero] * dim

    def block_mul(off, k, m, i, j):
        prod = [F.zero] * (2 * k - 1)
        prod[i + j] = F.one
        pr = Poly(F, prod) % m
        out = list(zero)
        for t in range(k):
            out[off + t] = pr.coeff(t)
        return tuple(out)

    table = [[None] * dim for _ in range(dim)]
    for (off, k, m) in blocks:
        for a in range(dim):
            for b in range(dim):
                if table[a][b] is not None:
                    continue
                ina = off <= a < off + k
                inb = off <= b < off + k
                if ina and inb:
                    table[a][b] = block_mul(off, k, m, a - off, b - off)
                elif ina or inb:
                    pass
    for a in range(dim):
        for b in range(dim):
            if table[a][b] is None:
                table[a][b] = tuple(zero)
    unit = list(zero)
    for (off, k, m) in blocks:
        unit[off] = F.one
    return FiniteAlgebra(F, table, unit, names)


def field_algebra(F, defining):
    """F_q[X]/(f) for a monic f over F_q, as an F_q-algebra of dim deg f."""
    k = defining.degree
    dim = k
    table = []
    for i in range(dim):
        row = []
        for j in range(dim):
            prod = [F.zero] * (i + j + 1)
            prod[i + j] = F.one
            pr = Poly(F, prod) % defining
            row.append(tuple(pr.coeff(t) for t in range(dim)))
        table.append(row)
    unit = tuple(F.one if t == 0 else F.zero for t in range(dim))
    names = ["1"] + ["x" if i == 1 else "x^%d" % i for i in range(1, dim)]
    return FiniteAlgebra(F, table, unit, names)


# ---------------------------------------------------------------------------
# Multivariate quotient presentations F_q[X_1..X_m]/(relations), via a
# small Buchberger completion under degree-lexicographic order.

def _deglex_key(mono):
    return (sum(mono), mono)


def _mono_mul(a, b):
    return tuple(x + y for x, y in zip(a, b))


def _mono_divides(a, b):
    return all(x <= y for x, y in zip(a, b))


def _mono_div(b, a):
    return tuple(y - x for x, y in zip(a, b))


def _mp_lead(f):
    return max(f, key=_deglex_key)


def _mp_add_term(f, mono, c):
    if mono in f:
        s = f[mono] + c
        if s:
            f[mono] = s
        else:
            del f[mono]
    elif c:
        f[mono] = c


def _mp_combine(f, g, c):
    """f + c*g, functional."""
    out = dict(f)
    for mono, gc in g.items():
        _mp_add_term(out, mono, gc * c)
    return out


def _mp_mul_term(f, mono, c):
    return {_mono_mul(m, mono): fc * c for m, fc in f.items()}


def _mp_normal_form(f, basis):
    rem = {}
    work = dict(f)
    while work:
        m = _mp_lead(work)
        c = work[m]
        for g in basis:
            lm = _mp_lead(g)
            if _mono_divides(lm, m):
                factor = _mono_div(m, lm)
                work = _mp_combine(work, _mp_mul_term(g, factor, c / g[lm]),
                                   -(c / c))
                break
        else:
            del work[m]
            rem[m] = c
    return rem


def _buchberger(gens, nvars, F):
    G = []
    for g in gens:
        g = {m: c for m, c in g.items() if c}
        if g:
            lc = g[_mp_lead(g)]
            G.append({m: c / lc for m, c in g.items()})
    if any(_mp_lead(g) == (0,) * nvars for g in G):
        raise ValueError("inconsistent relations: 1 lies in the ideal")
    pairs = [(i, j) for i in range(len(G)) for j in range(i + 1, len(G))]
    while pairs:
        i, j = pairs.pop(0)
        lmi, lmj = _mp_lead(G[i]), _mp_lead(G[j])
        lcm = tuple(max(a, b) for a, b in zip(lmi, lmj))
        if lcm == _mono_mul(lmi, lmj):
            continue  # coprime leads
        si = _mp_mul_term(G[i], _mono_div(lcm, lmi), F.one)
        sj = _mp_mul_term(G[j], _mono_div(lcm, lmj), F.one)
        s = _mp_combine(si, sj, -F.one)
        r = _mp_normal_form(s, G)
        if r:
            lm = _mp_lead(r)
            if lm == (0,) * nvars:
                raise ValueError("inconsistent relations: 1 lies in the ideal")
            lc = r[lm]
            r = {m: c / lc for m, c in r.items()}
            pairs.extend((k, len(G)) for k in range(len(G)))
            G.append(r)
    return G


def quotient_algebra(F, varnames, relations):
    """F_q[vars]/(relations) as a finite algebra; errors if not finite."""
    nvars = len(varnames)
    G = _buchberger(relations, nvars, F)
    leads = [_mp_lead(g) for g in G]
    bounds = []
    for v in range(nvars):
        pure = [lm[v] for lm in leads
                if all(lm[w] == 0 for w in range(nvars) if w != v) and lm[v] > 0]
        if not pure:
            raise ValueError("quotient is not finite-dimensional "
                             "(no pure power of %s in the ideal)" % varnames[v])
        bounds.append(min(pure))
    standard = []
    for mono in itertools.product(*[range(b) for b in bounds]):
        if not any(_mono_divides(lm, mono) for lm in leads):
            standard.append(mono)
    standard.sort(key=_deglex_key)
    index = {m: i for i, m in enumerate(standard)}
    dim = len(standard)
    check_elements(F.q ** dim, "quotient algebra construction")

    def nf_vector(f):
        r = _mp_normal_form(f, G)
        out = [F.zero] * dim
        for m, c in r.items():
            if m not in index:
                raise ConsistencyError("normal form contains a non-standard monomial")
            out[index[m]] = c
        return tuple(out)

    table = []
    for a in standard:
        row = []
        for b in standard:
            row.append(nf_vector({_mono_mul(a, b): F.one}))
        table.append(row)
    unit = nf_vector({(0,) * nvars: F.one})
    names = [_mono_name(m, varnames) for m in standard]
    alg = FiniteAlgebra(F, table, unit, names)
    alg.mp_to_vector = nf_vector
    alg.varnames = list(varnames)
    return alg


def _mono_name(mono, varnames):
    parts = []
    for v, e in zip(varnames, mono):
        if e == 1:
            parts.append(v)
        elif e > 1:
            parts.append("%s^%d" % (v, e))
    return "*".join(parts) if parts else "1"


# ---------------------------------------------------------------------------
# Subalgebras and ideals

class Subalgebra:
    """Unital subalgebra of a FiniteAlgebra, as an echelon basis."""

    def __init__(self, ambient, basis, check=True):
        self.ambient = ambient
        self.basis = echelon(basis)
        if check:
            if not in_span(ambient.unit, self.basis):
                raise ValueError("subalgebra does not contain 1")
            for i in range(len(self.basis)):
                for j in range(i, len(self.basis)):
                    p = ambient.mul(self.basis[i], self.basis[j])
                    if not in_span(p, self.basis):
                        raise ValueError("subalgebra is not closed under multiplication")

    @classmethod
    def from_generators(cls, ambient, gens):
        basis = echelon([ambient.unit] + list(gens))
        while True:
            prods = list(basis)
            for i in range(len(basis)):
                for j in range(i, len(basis)):
                    prods.append(ambient.mul(basis[i], basis[j]))
            nb = echelon(prods)
            if len(nb) == len(basis):
                break
            basis = nb
        return cls(ambient, basis, check=False)

    @property
    def dim(self):
        return len(self.basis)

    @property
    def size(self):
        return self.ambient.field.q ** self.dim

    def member(self, v):
        return in_span(v, self.basis)

    def contains_sub(self, other):
        return all(self.member(b) for b in other.basis)

    def key(self):
        return (self.dim, tuple(vec_key(b) for b in self.basis))

    def elements(self, what="subalgebra element enumeration"):
        check_elements(self.size, what)
        F = self.ambient.field
        out = []
        for coeffs in itertools.product(F.elements(), repeat=self.dim):
            v = self.ambient.zero_vec()
            for c, b in zip(coeffs, self.basis):
                if c:
                    v = vadd(v, vscale(b, c))
            out.append(v)
        return out

    def is_whole(self):
        return self.dim == self.ambient.dim

    def __eq__(self, other):
        return (isinstance(other, Subalgebra) and self.ambient is other.ambient
                and self.key() == other.key())

    def __hash__(self):
        return hash(self.key())

    def __repr__(self):
        return "Subalgebra(dim %d: %s)" % (
            self.dim, "; ".join(self.ambient.element_str(b) for b in self.basis))


def whole_algebra(S):
    return Subalgebra(S, [S.basis_vector(i) for i in range(S.dim)], check=False)


def prime_algebra(S):
    return Subalgebra(S, [S.unit], check=False)


def algebra_on_subspace(A, basis, unit_vec, names=None):
    """The subspace as an algebra in its own basis.

    Returns (algebra, lift, project): lift maps local coordinate vectors
    to ambient vectors, project the other way (None if outside).
    """
    basis = echelon(basis)
    F = A.field
    d = len(basis)

    def project(v):
        cs = coords_in_span(v, basis)
        return tuple(cs) if cs is not None else None

    def lift(coords):
        v = A.zero_vec()
        for c, b in zip(coords, basis):
            if c:
                v = vadd(v, vscale(b, c))
        return v

    table = []
    for i in range(d):
        row = []
        for j in range(d):
            p = project(A.mul(basis[i], basis[j]))
            if p is None:
                raise ValueError("subspace is not closed under multiplication")
            row.append(p)
        table.append(row)
    unit = project(unit_vec)
    if unit is None:
        raise ValueError("unit does not lie in the subspace")
    if names is None:
        names = ["[%s]" % A.element_str(b) for b in basis]
    alg = FiniteAlgebra(F, table, unit, names, check=False)
    return alg, lift, project


class Ideal:
    """An ideal of an algebra or subalgebra, as an echelon basis of
    ambient coordinate vectors."""

    def __init__(self, of, basis):
        self.of = of
        self.basis = echelon(basis)

    @property
    def dim(self):
        return len(self.basis)

    def member(self, v):
        return in_span(v, self.basis)

    def key(self):
        return (self.dim, tuple(vec_key(b) for b in self.basis))

    def __eq__(self, other):
        return isinstance(other, Ideal) and self.key() == other.key()

    def __hash__(self):
        return hash(self.key())

    def __repr__(self):
        A = self.of.ambient if isinstance(self.of, Subalgebra) else self.of
        return "Ideal(dim %d: %s)" % (
            self.dim, "; ".join(A.element_str(b) for b in self.basis))


def ideal_generated(A, ring_basis, gens):
    """Smallest subspace containing gens and closed under ring_basis-mult."""
    basis = echelon(gens)
    while True:
        prods = list(basis)
        for b in basis:
            for r in ring_basis:
                prods.append(A.mul(b, r))
        nb = echelon(prods)
        if len(nb) == len(basis):
            return nb
        basis = nb


# ---------------------------------------------------------------------------
# Structure: nilradical, idempotents, maximal ideals, quotients

def nilradical(A):
    """Echelon basis of the set of nilpotents (= Jacobson radical here)."""
    nil = [v for v in A.elements("nilradical") if A.is_nilpotent(v)]
    return echelon(nil)


def subspace_complement(A, basis):
    """(project, lift, codim) for the quotient vector space A / span(basis).

    Quotient coordinates are the non-pivot positions of the echelon form.
    """
    F = A.field
    red = echelon(basis)
    pivots = [next(j for j, x in enumerate(row) if x) for row in red]
    comp = [j for j in range(A.dim) if j not in pivots]

    def project(v):
        v = list(v)
        for row, pc in zip(red, pivots):
            if v[pc]:
                c = v[pc] / row[pc]
                v = [a - c * b for a, b in zip(v, row)]
        return tuple(v[j] for j in comp)

    def lift(qv):
        v = [F.zero] * A.dim
        for c, j in zip(qv, comp):
            v[j] = c
        return tuple(v)

    return project, lift, len(comp)


def quotient_by_ideal(A, ideal_basis):
    """(Q, project, lift): Q = A / ideal, on complement coordinates."""
    F = A.field
    red = echelon(ideal_basis)
    pivots = [next(j for j, x in enumerate(row) if x) for row in red]
    comp = [j for j in range(A.dim) if j not in pivots]
    project, lift, d = subspace_complement(A, red)
    table = []
    for i in range(d):
        row = []
        for j in range(d):
            row.append(project(A.mul(lift(_unit_coords(F, d, i)),
                                     lift(_unit_coords(F, d, j)))))
        table.append(row)
    unit = project(A.unit)
    names = [A.names[j] for j in comp]
    Q = FiniteAlgebra(F, table, unit, names, check=False)
    return Q, project, lift


def _unit_coords(F, d, i):
    return tuple(F.one if j == i else F.zero for j in range(d))


def idempotents(A):
    return [v for v in A.elements("idempotent search") if A.is_idempotent(v)]


def primitive_idempotents(A):
    idems = [v for v in idempotents(A) if any(v)]
    prim = []
    for e in idems:
        smaller = [f for f in idems if f != e and A.mul(e, f) == f]
        if not smaller:
            prim.append(e)
    return sorted(prim, key=vec_key)


def maximal_ideals(A):
    """All maximal ideals: nilradical, then idempotent decomposition of
    the semisimple quotient.  Accepts an algebra or a subalgebra (for a
    subalgebra the ideal bases come back in ambient coordinates)."""
    if isinstance(A, Subalgebra):
        return maximal_ideals_of_sub(A)
    nil = nilradical(A)
    Q, project, lift = quotient_by_ideal(A, nil)
    prim = primitive_idempotents(Q)
    out = []
    for e in prim:
        rows = []
        basis = [Q.basis_vector(i) for i in range(Q.dim)]
        prods = [Q.mul(b, e) for b in basis]
        for c in range(Q.dim):
            rows.append([prods[j][c] for j in range(Q.dim)])
        kern = exact.kernel(rows, Q.dim, A.field.one)
        mbasis = list(nil) + [lift(v) for v in kern]
        out.append(Ideal(A, mbasis))
    out.sort(key=lambda m: m.key())
    return out


def maximal_ideals_of_sub(R):
    """Maximal ideals of a subalgebra, as ambient coordinate bases."""
    alg, lift, project = algebra_on_subspace(R.ambient, R.basis, R.ambient.unit)
    out = []
    for M in maximal_ideals(alg):
        out.append(Ideal(R, [lift(b) for b in M.basis]))
    out.sort(key=lambda m: m.key())
    return out


def conductor(R, S):
    """(R : S) = {s in S : s*S is contained in R}, the largest common ideal."""
    F = S.field
    project, _, qdim = subspace_complement(S, R.basis)
    rows = []
    basis = [S.basis_vector(i) for i in range(S.dim)]
    for j in range(S.dim):
        prods = [project(S.mul(basis[c], basis[j])) for c in range(S.dim)]
        for t in range(qdim):
            rows.append([prods[c][t] for c in range(S.dim)])
    kern = exact.kernel(rows, S.dim, F.one)
    basis_vecs = [tuple(v) for v in kern]
    cond = Ideal(S, basis_vecs)
    for b in cond.basis:
        if not R.member(b):
            raise ConsistencyError("conductor is not contained in R")
    return cond


def radical_in(R, ideal_basis):
    """sqrt(I) inside the subalgebra R: preimage of the nilradical of R/I."""
    alg, lift, project = algebra_on_subspace(R.ambient, R.basis, R.ambient.unit)
    local_ideal = [project(b) for b in ideal_basis]
    if any(v is None for v in local_ideal):
        raise ValueError("ideal is not contained in R")
    Q, qproject, qlift = quotient_by_ideal(alg, echelon(local_ideal))
    nil = nilradical(Q)
    out = [lift(qlift(v)) for v in nil] + [lift(v) for v in echelon(local_ideal)]
    return Ideal(R, [v for v in out if any(v)])


def msupp(R, S):
    """MSupp(S/R): maximal ideals of R containing the conductor.

    Cross-checked against the direct localization route: M is in the
    support iff the primitive idempotent of R attached to M moves some
    element of S outside R.
    """
    cond = conductor(R, S)
    maxes = maximal_ideals_of_sub(R)
    via_conductor = [M for M in maxes
                     if all(M.member(b) for b in cond.basis)]
    # direct route by idempotent splitting
    alg, lift, project = algebra_on_subspace(S, R.basis, S.unit)
    prim = primitive_idempotents(alg)
    direct = []
    sbasis = [S.basis_vector(i) for i in range(S.dim)]
    for e in prim:
        ea = lift(e)
        moves = any(not R.member(S.mul(ea, b)) for b in sbasis)
        if moves:
            for M in maxes:
                if not M.member(ea):
                    direct.append(M)
                    break
    if sorted(m.key() for m in via_conductor) != sorted(m.key() for m in direct):
        raise ConsistencyError("support by conductor disagrees with localization")
    return via_conductor


def crucial_ideal(R, S):
    """The crucial maximal ideal, or None: sqrt(R:S) when it is maximal."""
    cond = conductor(R, S)
    rad = radical_in(R, cond.basis)
    maxes = maximal_ideals_of_sub(R)
    hit = [M for M in maxes if M.key() == rad.key()]
    supp = msupp(R, S)
    if hit:
        if len(supp) != 1 or supp[0].key() != rad.key():
            raise ConsistencyError("crucial ideal disagrees with the support")
        return hit[0]
    if len(supp) == 1:
        raise ConsistencyError("one-element support but sqrt(R:S) not maximal")
    return None


def localize(R, S, M):
    """Localization at M in MSupp(S/R) by idempotent splitting.

    Returns (S_M, R_M) where S_M is the algebra e*S with unit e, for the
    primitive idempotent e of R outside M.
    """
    alg, lift, project = algebra_on_subspace(S, R.basis, S.unit)
    prim = primitive_idempotents(alg)
    e = None
    for cand in prim:
        if not M.member(lift(cand)):
            e = lift(cand)
            break
    if e is None:
        raise ConsistencyError("no primitive idempotent outside M")
    sbasis = [S.mul(e, S.basis_vector(i)) for i in range(S.dim)]
    SM, slift, sproject = algebra_on_subspace(S, sbasis, e)
    rbasis = [sproject(S.mul(e, b)) for b in R.basis]
    RM = Subalgebra.from_generators(SM, [v for v in rbasis if v is not None])
    return SM, RM


# ---------------------------------------------------------------------------
# Closure operators

def seminormalize(R, S):
    """Smallest T >= R with T <= S seminormal: adjoin every b with
    b^2, b^3 in T, to a fixpoint."""
    T = R
    elems = S.elements("seminormalization")
    while True:
        adjoin = []
        for b in elems:
            if T.member(b):
                continue
            b2 = S.mul(b, b)
            if T.member(b2) and T.member(S.mul(b2, b)):
                adjoin.append(b)
        if not adjoin:
            return T
        T = Subalgebra.from_generators(S, list(T.basis) + adjoin)


def t_close(R, S):
    """Smallest T >= R with T <= S t-closed: adjoin every b admitting
    r in T with b^2 - r*b in T and b^3 - r*b^2 in T, to a fixpoint."""
    T = R
    elems = S.elements("t-closure")
    while True:
        adjoin = []
        telems = T.elements("t-closure witness scan")
        for b in elems:
            if T.member(b):
                continue
            b2 = S.mul(b, b)
            b3 = S.mul(b2, b)
            for r in telems:
                if T.member(vsub(b2, S.mul(r, b))) and T.member(vsub(b3, S.mul(r, b2))):
                    adjoin.append(b)
                    break
        if not adjoin:
            return T
        T = Subalgebra.from_generators(S, list(T.basis) + adjoin)


def is_simple_extension(R, S):
    """A generator x with S = R[x], or None."""
    if R.is_whole():
        return None
    for b in S.elements("simple-generator search"):
        if R.member(b):
            continue
        T = Subalgebra.from_generators(S, list(R.basis) + [b])
        if T.is_whole():
            return b
    return None


# ---------------------------------------------------------------------------
# Brute-force subalgebra enumeration

class AlgebraLattice:
    """The poset [R, S]: nodes sorted by (dim, basis), R first, S last."""

    def __init__(self, nodes, covers, length):
        self.nodes = nodes
        self.covers = covers
        self.length = length

    @property
    def bottom(self):
        return self.nodes[0]

    @property
    def top(self):
        return self.nodes[-1]

    def __len__(self):
        return len(self.nodes)


def _gaussian_binomial(c, k, q):
    num = 1
    den = 1
    for i in range(k):
        num *= q ** (c - i) - 1
        den *= q ** (i + 1) - 1
    return num // den


def enumerate_subalgebras(R, S):
    """All subalgebras between R and S, with covering relation and length.

    Candidates are the echelon bases of the subspaces of S/R (lifted back
    and filtered by multiplicative closure), so the count is a sum of
    Gaussian binomials; the candidate cap guards it.
    """
    F = S.field
    q = F.q
    c = S.dim - R.dim
    total = sum(_gaussian_binomial(c, k, q) for k in range(c + 1))
    check_candidates(total, "subalgebra enumeration")
    project, lift, _ = subspace_complement(S, R.basis)
    found = []
    for k in range(c + 1):
        for piv in itertools.combinations(range(c), k):
            free_pos = []
            for r_i, pc in enumerate(piv):
                for col in range(pc + 1, c):
                    if col not in piv:
                        free_pos.append((r_i, col))
            for fill in itertools.product(F.elements(), repeat=len(free_pos)):
                rows = [[F.zero] * c for _ in range(k)]
                for r_i, pc in enumerate(piv):
                    rows[r_i][pc] = F.one
                for (r_i, col), val in zip(free_pos, fill):
                    rows[r_i][col] = val
                basis = list(R.basis) + [lift(tuple(row)) for row in rows]
                if _closed_under_mul(S, basis):
                    found.append(Subalgebra(S, basis, check=False))
    found.sort(key=lambda T: T.key())
    nodes = found
    incl = set()
    for i, a in enumerate(nodes):
        for j, b in enumerate(nodes):
            if i != j and a.dim < b.dim and b.contains_sub(a):
                incl.add((i, j))
    covers = set()
    for (i, j) in incl:
        if not any((i, w) in incl and (w, j) in incl for w in range(len(nodes))):
            covers.add((i, j))
    dist = [0] * len(nodes)
    for i in range(len(nodes)):
        for j in range(len(nodes)):
            if (i, j) in covers:
                dist[j] = max(dist[j], dist[i] + 1)
    length = dist[-1] if nodes else 0
    return AlgebraLattice(nodes, covers, length)


def _closed_under_mul(S, basis):
    eb = echelon(basis)
    for i in range(len(eb)):
        for j in range(i, len(eb)):
            if not in_span(S.mul(eb[i], eb[j]), eb):
                return False
    return True


# ---------------------------------------------------------------------------
# Minimal-extension types (inert / decomposed / ramified)

def classify_minimal_type(R, S, lattice=None):
    """Type of a minimal extension, or 'not-minimal' (verified by
    enumeration)."""
    if lattice is None:
        lattice = enumerate_subalgebras(R, S)
    if len(lattice) != 2:
        return "not-minimal"
    return _minimal_type_of_pair(R, S)


def _minimal_type_of_pair(R, S):
    """Type of a known-minimal R < S via the conductor and Max(S)."""
    cond = conductor(R, S)
    maxesR = maximal_ideals_of_sub(R)
    if not any(M.key() == cond.key() for M in maxesR):
        raise ConsistencyError("conductor of a minimal extension is not maximal in R")
    M = cond
    over = [N for N in maximal_ideals(S) if all(N.member(b) for b in M.basis)]
    qdim_RM = R.dim - M.dim
    if len(over) == 2:
        for N in over:
            if S.dim - N.dim != qdim_RM:
                raise ConsistencyError("decomposed residue map is not an isomorphism")
        return "decomposed"
    if len(over) != 1:
        raise ConsistencyError("minimal extension with |V(M)| not in {1, 2}")
    N = over[0]
    if N.key() == Ideal(S, list(M.basis)).key():
        if S.dim - N.dim <= qdim_RM:
            raise ConsistencyError("inert case without residue field growth")
        return "inert"
    # ramified: N^2 <= M < N and [S/M : R/M] = 2
    n2 = ideal_generated(S, [S.basis_vector(i) for i in range(S.dim)],
                         [S.mul(a, b) for a in N.basis for b in N.basis])
    if not all(M.member(v) for v in n2):
        raise ConsistencyError("ramified case: N^2 not inside M")
    if S.dim - N.dim != qdim_RM:
        raise ConsistencyError("ramified residue map is not an isomorphism")
    if (S.dim - M.dim) != 2 * qdim_RM:
        raise ConsistencyError("ramified case: [S/M : R/M] != 2")
    return "ramified"
