"""Exact arithmetic in the field tower F_p < F_{q^2} < F_{q^6}.

Elements are packed integers.  An element of F_{q^2} = F_p[X]/(m) is the
integer whose base-p digits are the polynomial coefficients, constant
coefficient in the lowest digit.  An element of F_{q^6}, built as a cubic
extension of F_{q^2}, packs three F_{q^2} values in base |F_{q^2}|.  With
this packing the embedding F_{q^2} -> F_{q^6} is the identity on integers.

Both moduli and the canonical primitive are picked by a fixed deterministic
rule (least coefficient tuple, compared from the constant term upward), so
two towers built for the same (p, e) are bit-identical.
"""
from __future__ import annotations

import itertools
import random
from dataclasses import dataclass


class GFError(Exception):
    pass


class BudgetExceeded(GFError):
    pass


DESK_CAP = 1 << 16          # largest p^e accepted at all
TABLE_LIMIT = 1 << 20       # largest field size for exp/log tables
ADD_TABLE_LIMIT = 1024      # largest field size for a full addition table
SCAN_ROOT_LIMIT = 20000     # exhaustive root scan up to this field size
DEFAULT_DEG3_BUDGET = 2_000_000   # largest |F_{q^6}| we will enumerate


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    d = 2
    while d * d <= n:
        if n % d == 0:
            return False
        d += 1 if d == 2 else 2
    return True


def factorize(n: int) -> dict[int, int]:
    """Prime factorization by trial division; fine at desk scale."""
    out: dict[int, int] = {}
    d = 2
    while d * d <= n:
        while n % d == 0:
            out[d] = out.get(d, 0) + 1
            n //= d
        d += 1 if d == 2 else 2
    if n > 1:
        out[n] = out.get(n, 0) + 1
    return out


# ---------------------------------------------------------------------------
# F_p[X] helpers, little-endian coefficient lists.  Only used while building
# the base level, so plain modular arithmetic is fast enough.

def _fp_trim(a):
    while a and a[-1] == 0:
        a.pop()
    return a


def _fp_mul(a, b, p):
    if not a or not b:
        return []
    r = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                r[i + j] = (r[i + j] + ai * bj) % p
    return _fp_trim(r)


def _fp_mod(a, m, p):
    a = list(a)
    inv_lead = pow(m[-1], p - 2, p)
    dm = len(m) - 1
    while len(a) - 1 >= dm and a:
        c = a[-1] * inv_lead % p
        off = len(a) - 1 - dm
        if c:
            for i, mi in enumerate(m):
                a[off + i] = (a[off + i] - c * mi) % p
        a.pop()
        _fp_trim(a)
    return a


def _fp_gcd(a, b, p):
    a, b = list(a), list(b)
    while b:
        a, b = b, _fp_mod(a, b, p)
    return a


def _fp_powmod(a, n, m, p):
    r = [1]
    a = _fp_mod(a, m, p)
    while n:
        if n & 1:
            r = _fp_mod(_fp_mul(r, a, p), m, p)
        a = _fp_mod(_fp_mul(a, a, p), m, p)
        n >>= 1
    return r


def _fp_is_irreducible(f, p) -> bool:
    """Rabin test: f monic of degree d over F_p."""
    d = len(f) - 1
    if d < 1:
        return False
    x = [0, 1]

    def frob_power(k):
        # X^(p^k) mod f
        h = x
        for _ in range(k):
            h = _fp_powmod(h, p, f, p)
        return h

    h = frob_power(d)
    diff = list(h) + [0] * (2 - len(h))
    diff[1] = (diff[1] - 1) % p
    if _fp_trim(diff):
        return False
    for r in factorize(d):
        h = frob_power(d // r)
        diff = list(h) + [0] * (2 - len(h))
        diff[1] = (diff[1] - 1) % p
        diff = _fp_trim(diff)
        if not diff:
            return False  # X^(p^(d/r)) = X: f divides a splitting poly
        g = _fp_gcd(f, diff, p)
        if len(g) - 1 > 0:
            return False
    return True


# ---------------------------------------------------------------------------
# Levels.  A level exposes: size, char, zero/one as 0/1, add, sub, neg, mul,
# inv, pow, frobq (the q-power map), key (deterministic ordering tuple).

class BaseLevel:
    """F_{q^2} with exp/log tables generated by the canonical primitive."""

    name = "q2"

    def __init__(self, p: int, e: int):
        self.p = p
        self.char = p
        self.e = e
        self.q = p ** e
        self.deg = 2 * e
        self.size = p ** self.deg
        if self.size > TABLE_LIMIT:
            raise GFError(f"|F_q^2| = {self.size} exceeds the desk-scale table limit")
        self.mod = self._find_modulus()
        self.a = self._find_primitive()
        self._build_tables()

    # -- packing -----------------------------------------------------------
    def digits(self, x: int) -> tuple[int, ...]:
        p = self.p
        out = []
        for _ in range(self.deg):
            out.append(x % p)
            x //= p
        return tuple(out)

    def pack(self, digits) -> int:
        x = 0
        for d in reversed(digits):
            x = x * self.p + d
        return x

    def key(self, x: int) -> tuple[int, ...]:
        """Ordering key: coefficient tuple from the constant term upward."""
        return self.digits(x)

    # -- construction ------------------------------------------------------
    def _find_modulus(self) -> tuple[int, ...]:
        for coeffs in itertools.product(range(self.p), repeat=self.deg):
            f = list(coeffs) + [1]
            if _fp_is_irreducible(f, self.p):
                return coeffs
        raise GFError("no irreducible modulus found")  # pragma: no cover

    def _mulraw(self, x: int, y: int) -> int:
        p, deg = self.p, self.deg
        if p == 2:
            r = 0
            while y:
                if y & 1:
                    r ^= x
                x <<= 1
                y >>= 1
            modint = self._modint
            for shift in range(r.bit_length() - 1, deg - 1, -1):
                if (r >> shift) & 1:
                    r ^= modint << (shift - deg)
            return r
        a, b = self.digits(x), self.digits(y)
        r = [0] * (2 * deg - 1)
        for i, ai in enumerate(a):
            if ai:
                for j, bj in enumerate(b):
                    r[i + j] = (r[i + j] + ai * bj) % p
        mod = self.mod
        for i in range(len(r) - 1, deg - 1, -1):
            c = r[i]
            if c:
                r[i] = 0
                for j in range(deg):
                    r[i - deg + j] = (r[i - deg + j] - c * mod[j]) % p
        return self.pack(r[:deg])

    @property
    def _modint(self) -> int:
        # p = 2 only: modulus as a bitmask including the leading term
        return self.pack(self.mod) | (1 << self.deg)

    def _powraw(self, x: int, n: int) -> int:
        r = 1
        while n:
            if n & 1:
                r = self._mulraw(r, x)
            x = self._mulraw(x, x)
            n >>= 1
        return r

    def _find_primitive(self) -> int:
        fac = factorize(self.size - 1)
        for x in sorted(range(1, self.size), key=self.key):
            if all(self._powraw(x, (self.size - 1) // r) != 1 for r in fac):
                return x
        raise GFError("no primitive element")  # pragma: no cover

    def _build_tables(self):
        n = self.size - 1
        exp = [0] * n
        log = [-1] * self.size
        cur = 1
        for i in range(n):
            exp[i] = cur
            log[cur] = i
            cur = self._mulraw(cur, self.a)
        assert cur == 1
        self.exp, self.log = exp, log
        if self.p == 2:
            self.negt = None
            self.add = lambda x, y: x ^ y
            self.neg = lambda x: x
        else:
            p = self.p
            self.negt = [self.pack(tuple((-d) % p for d in self.digits(x)))
                         for x in range(self.size)]
            if self.size <= ADD_TABLE_LIMIT:
                sz = self.size
                addt = [0] * (sz * sz)
                for x in range(sz):
                    dx = self.digits(x)
                    row = x * sz
                    for y in range(sz):
                        dy = self.digits(y)
                        addt[row + y] = self.pack(
                            tuple((u + v) % p for u, v in zip(dx, dy)))
                self._addt = addt
                self.add = lambda x, y: addt[x * sz + y]
            else:  # pragma: no cover - beyond desk scale
                self.add = lambda x, y: self.pack(
                    tuple((u + v) % p for u, v in
                          zip(self.digits(x), self.digits(y))))
            self.neg = lambda x: self.negt[x]
        self.frobt = [0] * self.size
        for x in range(1, self.size):
            self.frobt[x] = exp[(log[x] * self.q) % n]

    # -- arithmetic ---------------------------------------------------------
    def sub(self, x, y):
        return self.add(x, self.neg(y))

    def mul(self, x, y):
        if x == 0 or y == 0:
            return 0
        return self.exp[(self.log[x] + self.log[y]) % (self.size - 1)]

    def inv(self, x):
        if x == 0:
            raise ZeroDivisionError("inverse of zero")
        return self.exp[(-self.log[x]) % (self.size - 1)]

    def div(self, x, y):
        return self.mul(x, self.inv(y))

    def pow(self, x, k):
        if x == 0:
            if k == 0:
                return 1
            if k < 0:
                raise ZeroDivisionError("0 ** negative")
            return 0
        return self.exp[(self.log[x] * k) % (self.size - 1)]

    def frobq(self, x):
        """x -> x^q."""
        return self.frobt[x]

    def in_fq(self, x) -> bool:
        return self.frobt[x] == x

    def dlog(self, x) -> int:
        if x == 0:
            raise GFError("dlog of zero")
        return self.log[x]

    def order(self, x) -> int:
        if x == 0:
            raise GFError("order of zero")
        n = self.size - 1
        return n // __import__("math").gcd(n, self.log[x])

    def elements_by_key(self):
        return sorted(range(self.size), key=self.key)


class ExtLevel:
    """F_{q^6} as a cubic extension of the base level (no big tables)."""

    name = "q6"

    def __init__(self, base: BaseLevel):
        self.base = base
        self.char = base.p
        self.q = base.q
        Q = base.size
        self._Q = Q
        self._Q2 = Q * Q
        self.size = Q ** 3
        self.mod = self._find_modulus()
        g0, g1, g2 = self.mod
        nb = base.neg
        self._red3 = (nb(g0), nb(g1), nb(g2))          # t^3
        r0, r1, r2 = self._red3
        m, ad = base.mul, base.add
        self._red4 = (m(r2, self._red3[0]),            # t^4 = t * t^3 reduced
                      ad(r0, m(r2, self._red3[1])),
                      ad(r1, m(r2, self._red3[2])))
        t = Q  # the generator t packs as (0, 1, 0)
        tq = self.pow(t, base.q)
        self._tq = (1, tq, self.mul(tq, tq))
        tq2 = self.pow(t, base.size)
        self._tq2 = (1, tq2, self.mul(tq2, tq2))
        self._primitive = None

    def _find_modulus(self) -> tuple[int, int, int]:
        b = self.base
        elems = b.elements_by_key()
        for g0 in elems:
            if g0 == 0:
                continue  # constant term zero is always reducible
            for g1 in elems:
                for g2 in elems:
                    if not any(
                        b.add(b.add(b.mul(b.mul(x, x), x),
                                    b.mul(g2, b.mul(x, x))),
                              b.add(b.mul(g1, x), g0)) == 0
                        for x in range(b.size)
                    ):
                        return (g0, g1, g2)
        raise GFError("no irreducible cubic")  # pragma: no cover

    def unpack(self, x):
        Q = self._Q
        return x % Q, (x // Q) % Q, x // self._Q2

    def pack(self, c0, c1, c2):
        return c0 + c1 * self._Q + c2 * self._Q2

    def key(self, x):
        c0, c1, c2 = self.unpack(x)
        k = self.base.key
        return (k(c0), k(c1), k(c2))

    def add(self, x, y):
        a0, a1, a2 = self.unpack(x)
        b0, b1, b2 = self.unpack(y)
        ad = self.base.add
        return self.pack(ad(a0, b0), ad(a1, b1), ad(a2, b2))

    def neg(self, x):
        a0, a1, a2 = self.unpack(x)
        n = self.base.neg
        return self.pack(n(a0), n(a1), n(a2))

    def sub(self, x, y):
        return self.add(x, self.neg(y))

    def mul(self, x, y):
        a0, a1, a2 = self.unpack(x)
        b0, b1, b2 = self.unpack(y)
        m, ad = self.base.mul, self.base.add
        c0 = m(a0, b0)
        c1 = ad(m(a0, b1), m(a1, b0))
        c2 = ad(ad(m(a0, b2), m(a1, b1)), m(a2, b0))
        c3 = ad(m(a1, b2), m(a2, b1))
        c4 = m(a2, b2)
        if c3 or c4:
            r30, r31, r32 = self._red3
            r40, r41, r42 = self._red4
            c0 = ad(c0, ad(m(c3, r30), m(c4, r40)))
            c1 = ad(c1, ad(m(c3, r31), m(c4, r41)))
            c2 = ad(c2, ad(m(c3, r32), m(c4, r42)))
        return self.pack(c0, c1, c2)

    def scalar_mul(self, c: int, x: int) -> int:
        """Multiply by c from the base field."""
        a0, a1, a2 = self.unpack(x)
        m = self.base.mul
        return self.pack(m(c, a0), m(c, a1), m(c, a2))

    def inv(self, x):
        if x == 0:
            raise ZeroDivisionError("inverse of zero")
        # extended Euclid on cubic polynomials over the base field
        b = self.base
        g0, g1, g2 = self.mod
        r0 = [g0, g1, g2, 1]
        r1 = [c for c in self.unpack(x)]
        while r1 and r1[-1] == 0:
            r1.pop()
        s0, s1 = [], [1]
        while len(r1) > 1:
            # divide r0 by r1
            quo = [0] * (len(r0) - len(r1) + 1)
            rem = list(r0)
            ilead = b.inv(r1[-1])
            for i in range(len(rem) - len(r1), -1, -1):
                c = b.mul(rem[i + len(r1) - 1], ilead)
                quo[i] = c
                if c:
                    for j, rj in enumerate(r1):
                        rem[i + j] = b.sub(rem[i + j], b.mul(c, rj))
            while rem and rem[-1] == 0:
                rem.pop()
            # s0, s1 = s1, s0 - quo * s1
            qs = [0] * (len(quo) + len(s1) - 1) if s1 else []
            for i, qi in enumerate(quo):
                if qi:
                    for j, sj in enumerate(s1):
                        qs[i + j] = b.add(qs[i + j], b.mul(qi, sj))
            ln = max(len(s0), len(qs))
            new = [(b.sub(s0[i] if i < len(s0) else 0,
                          qs[i] if i < len(qs) else 0)) for i in range(ln)]
            while new and new[-1] == 0:
                new.pop()
            r0, r1, s0, s1 = r1, rem, s1, new
        if not r1:
            raise ZeroDivisionError("not invertible")  # pragma: no cover
        c = b.inv(r1[0])
        s1 = [b.mul(c, si) for si in s1] + [0] * (3 - len(s1))
        return self.pack(s1[0], s1[1], s1[2])

    def pow(self, x, n):
        if n < 0:
            x, n = self.inv(x), -n
        if x == 0:
            return 0 if n else 1
        n %= self.size - 1
        r = 1
        while n:
            if n & 1:
                r = self.mul(r, x)
            x = self.mul(x, x)
            n >>= 1
        return r

    def _semilinear(self, x, powers, basefrob):
        c0, c1, c2 = self.unpack(x)
        r = basefrob(c0)
        r = self.add(r, self.scalar_mul(basefrob(c1), powers[1]))
        return self.add(r, self.scalar_mul(basefrob(c2), powers[2]))

    def frobq(self, x):
        """x -> x^q."""
        return self._semilinear(x, self._tq, self.base.frobq)

    def frobq2(self, x):
        """x -> x^(q^2)."""
        return self._semilinear(x, self._tq2, lambda c: c)

    def in_base(self, x) -> bool:
        return x < self._Q

    def order(self, x) -> int:
        if x == 0:
            raise GFError("order of zero")
        n = self.size - 1
        order = n
        for r, k in factorize(n).items():
            for _ in range(k):
                if self.pow(x, order // r) == 1:
                    order //= r
                else:
                    break
        return order

    def primitive(self) -> int:
        """A deterministic generator of the multiplicative group."""
        if self._primitive is None:
            fac = factorize(self.size - 1)
            x = 2
            while True:
                if all(self.pow(x, (self.size - 1) // r) != 1 for r in fac):
                    self._primitive = x
                    break
                x += 1
        return self._primitive


# ---------------------------------------------------------------------------
# Generic dense polynomials over a level (little-endian int lists).

def p_trim(a):
    while a and a[-1] == 0:
        a.pop()
    return a


def p_eval(lvl, cs, x):
    r = 0
    for c in reversed(cs):
        r = lvl.add(lvl.mul(r, x), c)
    return r


def p_mul(lvl, a, b):
    if not a or not b:
        return []
    r = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                r[i + j] = lvl.add(r[i + j], lvl.mul(ai, bj))
    return p_trim(r)


def p_divmod(lvl, a, b):
    a = list(a)
    if not b:
        raise ZeroDivisionError("division by zero polynomial")
    inv_lead = lvl.inv(b[-1])
    quo = [0] * max(0, len(a) - len(b) + 1)
    for i in range(len(a) - len(b), -1, -1):
        c = lvl.mul(a[i + len(b) - 1], inv_lead)
        quo[i] = c
        if c:
            for j, bj in enumerate(b):
                a[i + j] = lvl.sub(a[i + j], lvl.mul(c, bj))
    return quo, p_trim(a[:len(b) - 1])


def p_mod(lvl, a, b):
    return p_divmod(lvl, a, b)[1]


def p_monic(lvl, a):
    if not a:
        return a
    c = lvl.inv(a[-1])
    return [lvl.mul(c, x) for x in a]


def p_gcd(lvl, a, b):
    a, b = list(a), list(b)
    while b:
        a, b = b, p_mod(lvl, a, b)
    return p_monic(lvl, a)


def p_powmod(lvl, a, n, m):
    r = [1]
    a = p_mod(lvl, a, m)
    while n:
        if n & 1:
            r = p_mod(lvl, p_mul(lvl, r, a), m)
        a = p_mod(lvl, p_mul(lvl, a, a), m)
        n >>= 1
    return r


def _split_linears(lvl, g, rng):
    """g = monic product of distinct linear factors; return its roots."""
    if len(g) == 2:
        return [lvl.neg(g[0]) if g[1] == 1 else lvl.mul(lvl.neg(g[0]), lvl.inv(g[1]))]
    if len(g) < 2:
        return []
    for _ in range(200):
        r = rng.randrange(lvl.size)
        if lvl.char == 2:
            # gcd with the absolute trace of r*X splits char-2 fields
            k = (lvl.size - 1).bit_length()
            cur = p_mod(lvl, [0, r], g)
            acc = list(cur) + [0] * (len(g) - 1 - len(cur))
            for _ in range(k - 1):
                cur = p_mod(lvl, p_mul(lvl, cur, cur), g)
                for i, c in enumerate(cur):
                    acc[i] = lvl.add(acc[i], c)
            d = p_gcd(lvl, p_trim(list(acc)), g)
        else:
            w = p_powmod(lvl, [r, 1], (lvl.size - 1) // 2, g)
            w = list(w) + [0]
            w[0] = lvl.sub(w[0], 1)
            d = p_gcd(lvl, p_trim(w), g)
        if 1 < len(d) < len(g):
            other = p_divmod(lvl, g, d)[0]
            return _split_linears(lvl, d, rng) + _split_linears(lvl, p_monic(lvl, other), rng)
    raise GFError("equal-degree splitting failed to converge")  # pragma: no cover


def poly_roots(lvl, cs, seed: int = 0) -> list[tuple[int, int]]:
    """Roots of a nonzero polynomial in the level, with multiplicities.

    Small fields are scanned exhaustively; larger ones use a gcd with the
    Frobenius power of X followed by seeded equal-degree splitting, so the
    result is deterministic.
    """
    cs = p_trim(list(cs))
    if not cs:
        raise GFError("zero polynomial")
    if len(cs) == 1:
        return []
    if lvl.size <= SCAN_ROOT_LIMIT:
        roots = [x for x in range(lvl.size) if p_eval(lvl, cs, x) == 0]
    else:
        f = p_monic(lvl, cs)
        h = p_powmod(lvl, [0, 1], lvl.size, f)
        h = list(h) + [0] * (2 - len(h))
        h[1] = lvl.sub(h[1], 1)
        g = p_gcd(lvl, p_trim(h), f)
        rng = random.Random(0xC0FFEE ^ seed ^ len(cs))
        roots = _split_linears(lvl, g, rng) if len(g) > 1 else []
    out = []
    for r in sorted(roots, key=lvl.key):
        mult = 0
        rest = cs
        while True:
            quo, rem = p_divmod(lvl, rest, [lvl.neg(r), 1])
            if rem:
                break
            mult += 1
            rest = quo
        out.append((r, mult))
    return out


# ---------------------------------------------------------------------------
# Public tower and element wrappers.

@dataclass(frozen=True)
class FieldElement:
    """Typed wrapper over a packed int; mixing levels or towers is an error."""

    tower: "FieldTower"
    level: str
    val: int

    def _lvl(self):
        return self.tower.level(self.level)

    def _check(self, other):
        if not isinstance(other, FieldElement):
            raise GFError(f"cannot combine field element with {type(other).__name__}")
        if other.tower is not self.tower or other.level != self.level:
            raise GFError("mixed-level or mixed-tower arithmetic rejected")

    def __add__(self, other):
        self._check(other)
        return FieldElement(self.tower, self.level, self._lvl().add(self.val, other.val))

    def __sub__(self, other):
        self._check(other)
        return FieldElement(self.tower, self.level, self._lvl().sub(self.val, other.val))

    def __neg__(self):
        return FieldElement(self.tower, self.level, self._lvl().neg(self.val))

    def __mul__(self, other):
        self._check(other)
        return FieldElement(self.tower, self.level, self._lvl().mul(self.val, other.val))

    def __truediv__(self, other):
        self._check(other)
        lvl = self._lvl()
        return FieldElement(self.tower, self.level, lvl.mul(self.val, lvl.inv(other.val)))

    def __pow__(self, k: int):
        return FieldElement(self.tower, self.level, self._lvl().pow(self.val, k))

    def __bool__(self):
        return self.val != 0

    def __eq__(self, other):
        return (isinstance(other, FieldElement) and other.tower is self.tower
                and other.level == self.level and other.val == self.val)

    def __hash__(self):
        return hash((id(self.tower), self.level, self.val))

    def order(self) -> int:
        return self._lvl().order(self.val)

    def __str__(self):
        if self.level == "q2":
            return self.tower.elt_str(self.val)
        return repr(self)

    def __repr__(self):
        return f"FieldElement({self.level}, {self.tower.elt_str_any(self.val, self.level)})"


class FieldTower:
    """The tower F_p < F_{q^2} < F_{q^6} for q = p^e."""

    def __init__(self, p: int, e: int, deg3_budget: int = DEFAULT_DEG3_BUDGET):
        if not is_prime(p):
            raise GFError(f"p = {p} is not prime")
        if e < 1 or p ** e > DESK_CAP:
            raise GFError(f"p^e = {p ** e} outside the supported range")
        self.p = p
        self.e = e
        self.q = p ** e
        self.deg3_budget = deg3_budget
        self.q2 = BaseLevel(p, e)
        self.a = self.q2.a
        self._q6: ExtLevel | None = None
        self._preimage: dict[str, dict[int, list[int]]] = {}

    @property
    def q6(self) -> ExtLevel:
        if self._q6 is None:
            self._q6 = ExtLevel(self.q2)
        return self._q6

    def level(self, name: str):
        if name == "q2":
            return self.q2
        if name == "q6":
            return self.q6
        raise GFError(f"unknown level {name!r}")

    # -- element helpers ----------------------------------------------------
    def el(self, val: int, level: str = "q2") -> FieldElement:
        lvl = self.level(level)
        if not 0 <= val < lvl.size:
            raise GFError("element out of range")
        return FieldElement(self, level, val)

    def a_pow(self, k: int) -> int:
        return self.q2.exp[k % (self.q2.size - 1)]

    def gen(self) -> FieldElement:
        return self.el(self.a)

    def zero(self, level: str = "q2") -> FieldElement:
        return self.el(0, level)

    def one(self, level: str = "q2") -> FieldElement:
        return self.el(1, level)

    def embed(self, x: FieldElement) -> FieldElement:
        """F_{q^2} -> F_{q^6}; the identity on packed integers."""
        if x.level != "q2":
            raise GFError("embed expects a q2 element")
        return FieldElement(self, "q6", x.val)

    def elt_str(self, v: int) -> str:
        """Print a q2 value as '0' or 'a^k'."""
        if v == 0:
            return "0"
        return f"a^{self.q2.dlog(v)}"

    def elt_str_any(self, v: int, level: str) -> str:
        if level == "q2":
            return self.elt_str(v)
        c0, c1, c2 = self.q6.unpack(v)
        return "[" + ",".join(self.elt_str(c) for c in (c0, c1, c2)) + "]"

    def parse_elt(self, s: str) -> int:
        s = s.strip()
        if s == "0":
            return 0
        if s == "1":
            return 1
        if s == "a":
            return self.a
        if s.startswith("a^"):
            return self.a_pow(int(s[2:]))
        raise GFError(f"cannot parse element literal {s!r}")

    # -- additive equation y^q + y = alpha^(q+1) -----------------------------
    def _preimage_map(self, level: str) -> dict[int, list[int]]:
        if level not in self._preimage:
            lvl = self.level(level)
            if level == "q6" and lvl.size > self.deg3_budget:
                raise BudgetExceeded(
                    f"|F_q^6| = {lvl.size} exceeds the enumeration budget {self.deg3_budget}")
            m: dict[int, list[int]] = {}
            for y in range(lvl.size):
                m.setdefault(lvl.add(lvl.frobq(y), y), []).append(y)
            self._preimage[level] = m
        return self._preimage[level]

    def solve_additive_raw(self, alpha: int, level: str = "q2") -> list[int]:
        """All y with y^q + y = alpha^(q+1), as sorted packed ints."""
        lvl = self.level(level)
        rhs = lvl.mul(lvl.frobq(alpha), alpha)
        return sorted(self._preimage_map(level).get(rhs, []))

    def debug_dump(self) -> dict:
        d = {
            "p": self.p, "e": self.e, "q": self.q,
            "modulus_q2": list(self.q2.mod),
            "primitive": self.a,
            "primitive_str": self.elt_str(self.a),
        }
        if self._q6 is not None:
            d["modulus_q6"] = list(self._q6.mod)
        return d


def build_tower(p: int, e: int, deg3_budget: int = DEFAULT_DEG3_BUDGET) -> FieldTower:
    return FieldTower(p, e, deg3_budget)


def element_order(x: FieldElement) -> int:
    return x.order()


def solve_additive(alpha: FieldElement, level: str | None = None) -> list[FieldElement]:
    level = level or alpha.level
    t = alpha.tower
    v = alpha.val
    if alpha.level == "q2" and level == "q6":
        v = alpha.val  # embedding is the identity on ints
    return [t.el(y, level) for y in t.solve_additive_raw(v, level)]


def poly_roots_in_field(coeffs: list[FieldElement], level: str | None = None
                        ) -> list[tuple[FieldElement, int]]:
    """Roots with multiplicity of a polynomial of degree <= 3."""
    if not coeffs:
        raise GFError("empty polynomial")
    t = coeffs[0].tower
    level = level or coeffs[0].level
    for c in coeffs:
        if c.tower is not t or c.level != level:
            raise GFError("mixed coefficient levels")
    cs = [c.val for c in coeffs]
    if not any(cs):
        raise GFError("zero polynomial")
    if len(p_trim(list(cs))) - 1 > 3:
        raise GFError("degree > 3 not supported by this entry point")
    return [(t.el(r, level), m) for r, m in poly_roots(t.level(level), cs)]
