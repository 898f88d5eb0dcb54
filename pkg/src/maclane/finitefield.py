"""Finite fields GF(p), towers GF(p)[y]/(m(y)) over them, and polynomials
over any level of a tower.

Elements of ``GF(p)`` are ints in ``range(p)``.  Elements of an extension
level of degree ``n`` are ``n``-tuples of elements of the level below,
read as ``c_0 + c_1 y + ... + c_{n-1} y^{n-1}``.  Polynomials over a field are
lists of elements in ascending degree without trailing zeros.

Factorization is square-free decomposition, then distinct-degree and
equal-degree splitting (Cantor-Zassenhaus; trace maps in characteristic 2).
"""

import itertools
import random

from .errors import InputError, PreconditionError


def is_prime(n):
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    k = 3
    while k * k <= n:
        if n % k == 0:
            return False
        k += 2
    return True


# Fields ----------------------------------------------------------------------

class PrimeField:
    degree = 1

    def __init__(self, p):
        if not is_prime(p):
            raise InputError(f"{p} is not prime", code="NON_PRIME")
        self.p = p
        self.char = p
        self.size = p
        self.zero = 0
        self.one = 1

    def add(self, a, b):
        return (a + b) % self.p

    def sub(self, a, b):
        return (a - b) % self.p

    def neg(self, a):
        return -a % self.p

    def mul(self, a, b):
        return a * b % self.p

    def inv(self, a):
        if a % self.p == 0:
            raise ZeroDivisionError("inverse of zero in GF(p)")
        return pow(a, self.p - 2, self.p)

    def from_int(self, n):
        return n % self.p

    def is_zero(self, a):
        return a == 0

    def pow(self, a, n):
        if n < 0:
            return pow(self.inv(a), -n, self.p)
        return pow(a, n, self.p)

    def elements(self):
        return range(self.p)

    def random(self, rng):
        return rng.randrange(self.p)

    def gen(self):
        return 1

    def to_json(self, a):
        return a

    def from_json(self, obj):
        if not isinstance(obj, int):
            raise InputError(f"GF({self.p}) element must be an integer", code="BAD_ELEMENT")
        return obj % self.p

    def __eq__(self, other):
        return isinstance(other, PrimeField) and other.p == self.p

    def __hash__(self):
        return hash(("GF", self.p))

    def __repr__(self):
        return f"GF({self.p})"


# extension fields up to this size multiply through log tables
LOG_TABLE_LIMIT = 1 << 15
_LOG_TABLES = {}


def _prime_factors(n):
    out, k = [], 2
    while k * k <= n:
        if n % k == 0:
            out.append(k)
            while n % k == 0:
                n //= k
        k += 1
    if n > 1:
        out.append(n)
    return out


def _build_log_tables(F):
    order = F.size - 1
    primes = _prime_factors(order)
    one = F.one

    def slow_pow(a, n):
        result = one
        while n:
            if n & 1:
                result = F._mul_poly(result, a)
            n >>= 1
            if n:
                a = F._mul_poly(a, a)
        return result

    for g in F.elements():
        if g == F.zero:
            continue
        if all(slow_pow(g, order // q) != one for q in primes):
            break
    exp = [one] * order
    log = {}
    x = one
    for i in range(order):
        exp[i] = x
        log[x] = i
        x = F._mul_poly(x, g)
    return log, exp


class ExtensionField:
    """``base[y]/(modulus)`` for a monic irreducible ``modulus`` over ``base``."""

    def __init__(self, base, modulus, check=True):
        modulus = poly_trim(base, list(modulus))
        if len(modulus) < 2:
            raise PreconditionError("defining polynomial must have degree >= 1", code="DEGREE_ZERO")
        if modulus[-1] != base.one:
            raise PreconditionError("defining polynomial must be monic", code="NOT_MONIC")
        if check and not is_irreducible(base, modulus):
            raise PreconditionError("defining polynomial is reducible", code="REDUCIBLE")
        self.base = base
        self.modulus = tuple(modulus)
        self.n = len(modulus) - 1
        self.char = base.char
        self.degree = base.degree * self.n
        self.size = base.size ** self.n
        self.zero = (base.zero,) * self.n
        self.one = (base.one,) + (base.zero,) * (self.n - 1)

    def _elt(self, coeffs):
        b = self.base
        coeffs = poly_trim(b, list(coeffs))
        if len(coeffs) > self.n:
            coeffs = poly_divmod(b, coeffs, list(self.modulus))[1]
        return tuple(coeffs) + (b.zero,) * (self.n - len(coeffs))

    def embed(self, a):
        """Image of a base element."""
        return (a,) + (self.base.zero,) * (self.n - 1)

    def gen(self):
        """The class of ``y``: a root of the defining polynomial."""
        if self.n == 1:
            return (self.base.neg(self.modulus[0]),)
        return self._elt([self.base.zero, self.base.one])

    def add(self, a, b):
        ad = self.base.add
        return tuple(ad(x, y) for x, y in zip(a, b))

    def sub(self, a, b):
        sb = self.base.sub
        return tuple(sb(x, y) for x, y in zip(a, b))

    def neg(self, a):
        ng = self.base.neg
        return tuple(ng(x) for x in a)

    def _tables(self):
        """Log and antilog tables, built on first use for small fields."""
        key = (self.base, self.modulus)
        hit = _LOG_TABLES.get(key)
        if hit is None:
            hit = _build_log_tables(self)
            _LOG_TABLES[key] = hit
        return hit

    def mul(self, a, b):
        if self.size <= LOG_TABLE_LIMIT:
            z = self.zero
            if a == z or b == z:
                return z
            log, exp = self._tables()
            return exp[(log[a] + log[b]) % (self.size - 1)]
        return self._mul_poly(a, b)

    def _mul_poly(self, a, b):
        return self._elt(poly_mul(self.base, list(a), list(b)))

    def inv(self, a):
        if self.size <= LOG_TABLE_LIMIT and a != self.zero:
            log, exp = self._tables()
            return exp[-log[a] % (self.size - 1)]
        b = self.base
        g, s, _ = poly_xgcd(b, poly_trim(b, list(a)), list(self.modulus))
        if len(g) != 1:
            raise ZeroDivisionError("inverse of zero in extension field")
        c = b.inv(g[0])
        return self._elt([b.mul(c, x) for x in s])

    def pow(self, a, n):
        if n < 0:
            a, n = self.inv(a), -n
        result = self.one
        while n:
            if n & 1:
                result = self.mul(result, a)
            n >>= 1
            if n:
                a = self.mul(a, a)
        return result

    def from_int(self, n):
        return self.embed(self.base.from_int(n))

    def is_zero(self, a):
        return a == self.zero

    def elements(self):
        for combo in itertools.product(list(self.base.elements()), repeat=self.n):
            yield tuple(combo)

    def random(self, rng):
        return tuple(self.base.random(rng) for _ in range(self.n))

    def to_json(self, a):
        return [self.base.to_json(x) for x in a]

    def from_json(self, obj):
        if not isinstance(obj, list) or len(obj) > self.n:
            raise InputError("extension element must be a list of at most "
                             f"{self.n} coefficients", code="BAD_ELEMENT")
        return self._elt([self.base.from_json(x) for x in obj])

    def __eq__(self, other):
        return (isinstance(other, ExtensionField) and other.base == self.base
                and other.modulus == self.modulus)

    def __hash__(self):
        return hash((self.base, self.modulus))

    def __repr__(self):
        return f"{self.base!r}[y]/({self.modulus})"


# Polynomials over a field ---------------------------------------------------

def poly_trim(F, f):
    z = F.zero
    n = len(f)
    while n and f[n - 1] == z:
        n -= 1
    del f[n:]
    return f


def poly_add(F, f, g):
    if len(f) < len(g):
        f, g = g, f
    out = list(f)
    for i, c in enumerate(g):
        out[i] = F.add(out[i], c)
    return poly_trim(F, out)


def poly_sub(F, f, g):
    out = list(f) + [F.zero] * (len(g) - len(f))
    for i, c in enumerate(g):
        out[i] = F.sub(out[i], c)
    return poly_trim(F, out)


def poly_scale(F, f, c):
    return poly_trim(F, [F.mul(c, x) for x in f])


def poly_mul(F, f, g):
    if not f or not g:
        return []
    if isinstance(F, PrimeField):
        p = F.p
        out = [0] * (len(f) + len(g) - 1)
        for i, x in enumerate(f):
            if x:
                for j, y in enumerate(g):
                    out[i + j] += x * y
        return poly_trim(F, [c % p for c in out])
    out = [F.zero] * (len(f) + len(g) - 1)
    z = F.zero
    for i, x in enumerate(f):
        if x == z:
            continue
        for j, y in enumerate(g):
            if y != z:
                out[i + j] = F.add(out[i + j], F.mul(x, y))
    return poly_trim(F, out)


def poly_divmod(F, f, g):
    if not g:
        raise InputError("polynomial division by zero", code="DIVISION_BY_ZERO")
    r = list(f)
    dg = len(g) - 1
    if len(r) - 1 < dg:
        return [], poly_trim(F, r)
    inv = F.inv(g[-1])
    q = [F.zero] * (len(r) - dg)
    z = F.zero
    for k in range(len(r) - 1, dg - 1, -1):
        c = r[k]
        if c == z:
            continue
        c = F.mul(c, inv)
        q[k - dg] = c
        base = k - dg
        for j in range(dg):
            if g[j] != z:
                r[base + j] = F.sub(r[base + j], F.mul(c, g[j]))
        r[k] = z
    return poly_trim(F, q), poly_trim(F, r[:dg])


def poly_mod(F, f, g):
    return poly_divmod(F, f, g)[1]


def poly_monic(F, f):
    if not f:
        return []
    if f[-1] == F.one:
        return list(f)
    return poly_scale(F, f, F.inv(f[-1]))


def poly_gcd(F, f, g):
    f, g = list(f), list(g)
    while g:
        f, g = g, poly_mod(F, f, g)
    return poly_monic(F, f)


def poly_xgcd(F, f, g):
    """``(d, s, t)`` with ``s f + t g = d`` (``d`` not normalized)."""
    r0, r1 = list(f), list(g)
    s0, s1 = [F.one], []
    t0, t1 = [], [F.one]
    while r1:
        q, r = poly_divmod(F, r0, r1)
        r0, r1 = r1, r
        s0, s1 = s1, poly_sub(F, s0, poly_mul(F, q, s1))
        t0, t1 = t1, poly_sub(F, t0, poly_mul(F, q, t1))
    return r0, s0, t0


def poly_powmod(F, f, n, m):
    result = [F.one]
    base = poly_mod(F, f, m)
    while n:
        if n & 1:
            result = poly_mod(F, poly_mul(F, result, base), m)
        n >>= 1
        if n:
            base = poly_mod(F, poly_mul(F, base, base), m)
    return result


def poly_deriv(F, f):
    return poly_trim(F, [F.mul(F.from_int(i), c) for i, c in enumerate(f)][1:])


def poly_eval(F, f, x):
    acc = F.zero
    for c in reversed(f):
        acc = F.add(F.mul(acc, x), c)
    return acc


def _pth_root(F, a):
    # a^(q/p) inverts Frobenius on GF(q)
    return F.pow(a, F.size // F.char)


def _pth_root_poly(F, f):
    p = F.char
    return poly_trim(F, [_pth_root(F, f[i]) for i in range(0, len(f), p)])


def squarefree_decomposition(F, f):
    """List of ``(g, m)`` with ``f = lc * prod g^m``, ``g`` monic square-free and
    pairwise coprime."""
    f = poly_monic(F, f)
    if len(f) <= 1:
        return []
    out = []
    df = poly_deriv(F, f)
    if not df:
        return [(g, m * F.char) for g, m in squarefree_decomposition(F, _pth_root_poly(F, f))]
    c = poly_gcd(F, f, df)
    w = poly_divmod(F, f, c)[0]
    i = 1
    while len(w) > 1:
        y = poly_gcd(F, w, c)
        z = poly_divmod(F, w, y)[0]
        if len(z) > 1:
            out.append((poly_monic(F, z), i))
        i += 1
        w = y
        c = poly_divmod(F, c, y)[0]
    if len(c) > 1:
        out.extend((g, m * F.char) for g, m in
                   squarefree_decomposition(F, _pth_root_poly(F, c)))
    return out


def distinct_degree(F, f):
    """Split a monic square-free ``f`` into ``(g_d, d)`` where ``g_d`` is the
    product of its irreducible factors of degree ``d``."""
    out = []
    x = [F.zero, F.one]
    h = x
    d = 0
    f = list(f)
    while len(f) - 1 >= 2 * (d + 1):
        d += 1
        h = poly_powmod(F, h, F.size, f)
        g = poly_gcd(F, poly_sub(F, h, x), f)
        if len(g) > 1:
            out.append((g, d))
            f = poly_divmod(F, f, g)[0]
            h = poly_mod(F, h, f)
    if len(f) > 1:
        out.append((f, len(f) - 1))
    return out


# d == 1 factors are found by exhaustive root search below this field size
ROOT_SEARCH_LIMIT = 64


def equal_degree(F, f, d, rng):
    """Split a monic product of distinct degree-``d`` irreducibles."""
    n = len(f) - 1
    if n == d:
        return [f]
    if d == 1 and F.size <= ROOT_SEARCH_LIMIT:
        return [[F.neg(a), F.one] for a in F.elements() if poly_eval(F, f, a) == F.zero]
    while True:
        a = poly_trim(F, [F.random(rng) for _ in range(n)])
        if len(a) < 2:
            continue
        if F.char == 2:
            k = F.degree * d
            b, t = list(a), list(a)
            for _ in range(k - 1):
                t = poly_mod(F, poly_mul(F, t, t), f)
                b = poly_add(F, b, t)
        else:
            b = poly_sub(F, poly_powmod(F, a, (F.size ** d - 1) // 2, f), [F.one])
        g = poly_gcd(F, b, f)
        if 1 < len(g) < len(f):
            h = poly_divmod(F, f, g)[0]
            return equal_degree(F, g, d, rng) + equal_degree(F, poly_monic(F, h), d, rng)


def factor(F, f, seed=0):
    """Monic irreducible factors with multiplicities, sorted deterministically."""
    f = poly_trim(F, list(f))
    if not f:
        raise InputError("cannot factor the zero polynomial", code="ZERO_POLY")
    rng = random.Random(seed)
    out = []
    for g, m in squarefree_decomposition(F, f):
        for h, d in distinct_degree(F, g):
            for q in equal_degree(F, h, d, rng):
                out.append((poly_monic(F, q), m))
    out.sort(key=lambda t: (len(t[0]), repr(t[0]), t[1]))
    return out


def is_irreducible(F, f):
    """Rabin's test."""
    f = poly_monic(F, poly_trim(F, list(f)))
    n = len(f) - 1
    if n < 1:
        raise InputError("irreducibility of a constant is undefined", code="CONSTANT_POLY")
    if n == 1:
        return True
    x = [F.zero, F.one]
    primes = [r for r in range(2, n + 1) if n % r == 0 and is_prime(r)]
    for r in primes:
        h = x
        for _ in range(n // r):
            h = poly_powmod(F, h, F.size, f)
        if len(poly_gcd(F, poly_sub(F, h, x), f)) > 1:
            return False
    h = x
    for _ in range(n):
        h = poly_powmod(F, h, F.size, f)
    return not poly_mod(F, poly_sub(F, h, x), f)


def monic_polys(F, n):
    """All monic polynomials of degree ``n`` over ``F``."""
    elts = list(F.elements())
    for combo in itertools.product(elts, repeat=n):
        yield list(combo) + [F.one]


# Towers -----------------------------------------------------------------------

class FieldTower:
    """The chain GF(p) = K_0 ⊆ K_1 ⊆ ... ⊆ K_m; immutable."""

    def __init__(self, p, fields=None):
        self.p = p
        self.fields = tuple(fields) if fields else (PrimeField(p),)

    @property
    def top(self):
        return self.fields[-1]

    @property
    def height(self):
        return len(self.fields) - 1

    @property
    def degree(self):
        """Total degree of the top level over GF(p)."""
        return self.top.degree

    def level_degrees(self):
        return [F.n for F in self.fields[1:]]

    def extend(self, psi):
        return FieldTower(self.p, self.fields + (ExtensionField(self.top, psi),))

    def truncate(self, height):
        return FieldTower(self.p, self.fields[:height + 1])

    def embed(self, a, src, dst):
        for lvl in range(src + 1, dst + 1):
            a = self.fields[lvl].embed(a)
        return a

    def to_json(self):
        return {"p": self.p,
                "levels": [[F.base.to_json(c) for c in F.modulus] for F in self.fields[1:]]}

    @classmethod
    def from_json(cls, obj):
        try:
            tower = cls(int(obj["p"]))
            levels = obj.get("levels", [])
        except (KeyError, TypeError, ValueError) as exc:
            raise InputError("tower must be {'p': p, 'levels': [...]}", code="BAD_TOWER") from exc
        for coeffs in levels:
            F = tower.top
            tower = tower.extend([F.from_json(c) for c in coeffs])
        return tower

    def __eq__(self, other):
        return isinstance(other, FieldTower) and self.fields == other.fields

    def __hash__(self):
        return hash(self.fields)

    def __repr__(self):
        return f"FieldTower(p={self.p}, degrees={self.level_degrees()})"


def tower_extend(tower, psi):
    """Tower with one more level cut out by the monic irreducible ``psi``."""
    if isinstance(psi, FFPoly):
        psi = psi.coeffs
    return tower.extend(psi)


class FFPoly:
    """A polynomial over one level of a tower, with ring operators."""

    __slots__ = ("field", "coeffs")

    def __init__(self, field, coeffs):
        self.field = field
        self.coeffs = poly_trim(field, list(coeffs))

    @property
    def degree(self):
        return len(self.coeffs) - 1

    def __eq__(self, other):
        return (isinstance(other, FFPoly) and self.field == other.field
                and self.coeffs == other.coeffs)

    def __hash__(self):
        return hash((self.field, tuple(self.coeffs)))

    def __add__(self, other):
        return FFPoly(self.field, poly_add(self.field, self.coeffs, other.coeffs))

    def __sub__(self, other):
        return FFPoly(self.field, poly_sub(self.field, self.coeffs, other.coeffs))

    def __mul__(self, other):
        return FFPoly(self.field, poly_mul(self.field, self.coeffs, other.coeffs))

    def __divmod__(self, other):
        q, r = poly_divmod(self.field, self.coeffs, other.coeffs)
        return FFPoly(self.field, q), FFPoly(self.field, r)

    def monic(self):
        return FFPoly(self.field, poly_monic(self.field, self.coeffs))

    def is_zero(self):
        return not self.coeffs

    def divides(self, other):
        return not poly_mod(self.field, other.coeffs, self.coeffs)

    def __repr__(self):
        return f"FFPoly({self.field!r}, {self.coeffs!r})"


def ff_factor(f, seed=0):
    return [(FFPoly(f.field, g), m) for g, m in factor(f.field, f.coeffs, seed)]


def ff_is_irreducible(f):
    return is_irreducible(f.field, f.coeffs)
