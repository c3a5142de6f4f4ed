"""Automorphisms of the Hermitian function field as projective 3x3 matrices.

Every automorphism acts on the projective model Y^q Z + Y Z^q = X^(q+1) by a
matrix over F_{q^2}; the full group is PGU(3, q) of order q^3 (q^2-1)(q^3+1).
Two families generate everything we need:

  * affine maps sigma(x) = a x + b, sigma(y) = a^(q+1) y + a b^q x + c with
    c^q + c = b^(q+1), which fix the common pole of x and y, and
  * the involution omega(x) = x / y, omega(y) = 1 / y.

We store the matrix of the point action P |-> (sigma(x)(P), sigma(y)(P)).
That action is contravariant in composition: the point matrix of f o g
(g applied first to functions) is M_g M_f.
"""
from __future__ import annotations

import re
from dataclasses import dataclass

from ._linalg import IDENTITY3, mat_adj3, mat_mul3, mat_vec3
from .curve import P_INF, Place, degree3_place, place_of_point, rational_place
from .gf import FieldTower, GFError


class DSLError(GFError):
    pass


def pgu_order(q: int) -> int:
    return q ** 3 * (q * q - 1) * (q ** 3 + 1)


def _normalize_mat(lvl, m):
    for c in m:
        if c != 0:
            if c == 1:
                return tuple(m)
            ic = lvl.inv(c)
            return tuple(lvl.mul(ic, x) for x in m)
    raise GFError("zero matrix")


@dataclass(frozen=True)
class Aut:
    """A curve automorphism, represented projectively (first nonzero entry 1)."""

    tower: FieldTower
    m: tuple

    def __mul__(self, other: "Aut") -> "Aut":
        return compose(self, other)

    def is_identity(self) -> bool:
        return self.m == IDENTITY3

    def __repr__(self):
        es = self.tower.elt_str
        rows = [" ".join(es(self.m[3 * i + j]) for j in range(3)) for i in range(3)]
        return "Aut[" + "; ".join(rows) + "]"


def identity(tower: FieldTower) -> Aut:
    return Aut(tower, IDENTITY3)


def omega(tower: FieldTower) -> Aut:
    """The involution x |-> x/y, y |-> 1/y; swaps Y and Z on points."""
    return Aut(tower, (1, 0, 0, 0, 0, 1, 0, 1, 0))


def epsilon(tower: FieldTower, a: int) -> Aut:
    """The torus element x |-> a x, y |-> a^(q+1) y."""
    return from_affine(tower, a, 0, 0)


def from_affine(tower: FieldTower, a: int, b: int, c: int) -> Aut:
    """sigma(x) = a x + b, sigma(y) = a^(q+1) y + a b^q x + c."""
    lvl = tower.q2
    if a == 0:
        raise GFError("affine automorphism needs a != 0")
    if lvl.add(lvl.frobq(c), c) != lvl.mul(lvl.frobq(b), b):
        raise GFError("affine constraint c^q + c = b^(q+1) violated")
    aq1 = lvl.mul(a, lvl.frobq(a))
    abq = lvl.mul(a, lvl.frobq(b))
    m = (a, 0, b,
         abq, aq1, c,
         0, 0, 1)
    return Aut(tower, _normalize_mat(lvl, m))


def compose(f: Aut, g: Aut) -> Aut:
    """f o g as maps of functions (g applied first); point matrix M_g M_f."""
    lvl = f.tower.q2
    return Aut(f.tower, _normalize_mat(lvl, mat_mul3(lvl, g.m, f.m)))


def inverse(f: Aut) -> Aut:
    lvl = f.tower.q2
    return Aut(f.tower, _normalize_mat(lvl, mat_adj3(lvl, f.m)))


def aut_order(f: Aut) -> int:
    n = 1
    cur = f
    while not cur.is_identity():
        cur = compose(cur, f)
        n += 1
        assert n <= pgu_order(f.tower.q)
    return n


def aut_pow(f: Aut, n: int) -> Aut:
    if n < 0:
        return aut_pow(inverse(f), -n)
    out = identity(f.tower)
    base = f
    while n:
        if n & 1:
            out = compose(out, base)
        base = compose(base, base)
        n >>= 1
    return out


def apply_point(f: Aut, lvl, pt):
    """Image of a projective point; matrix entries are base-field ints,
    valid verbatim at any level of the tower."""
    return mat_vec3(lvl, f.m, pt)


def apply_place(f: Aut, place: Place) -> Place:
    tower = f.tower
    if place.kind == "infinity":
        v = apply_point(f, tower.q2, (0, 1, 0))
    elif place.kind == "rational":
        v = apply_point(f, tower.q2, (place.alpha, place.beta, 1))
    else:
        v6 = apply_point(f, tower.q6, place.data[0])
        return degree3_place(tower, v6)
    if v[2] == 0:
        return P_INF
    iz = tower.q2.inv(v[2])
    mul = tower.q2.mul
    return rational_place(mul(v[0], iz), mul(v[1], iz))


def sigma4(tower: FieldTower, delta: int) -> Aut:
    """tau(0, c) followed by omega, with c = delta - delta^(-1).

    The point (0 : c : 1) must lie on the curve, i.e. c^q + c = 0; this is
    exactly the constraint checked by from_affine and fails for a delta
    outside the allowed torus.
    """
    lvl = tower.q2
    if delta == 0:
        raise GFError("sigma4 needs delta != 0")
    c = lvl.sub(delta, lvl.inv(delta))
    return compose(from_affine(tower, 1, 0, c), omega(tower))


def sigma5(tower: FieldTower, delta: int) -> Aut:
    """aff(a, 0, c) followed by omega, a the canonical primitive element and
    c = delta - a^(q+1) delta^(-1)."""
    lvl = tower.q2
    if delta == 0:
        raise GFError("sigma5 needs delta != 0")
    a = tower.a
    aq1 = lvl.mul(a, lvl.frobq(a))
    c = lvl.sub(delta, lvl.mul(aq1, lvl.inv(delta)))
    return compose(from_affine(tower, a, 0, c), omega(tower))


@dataclass(frozen=True)
class Group:
    tower: FieldTower
    elements: tuple
    generators: tuple

    @property
    def order(self) -> int:
        return len(self.elements)


def close_group(tower: FieldTower, gens, cap: int | None = None) -> Group:
    """BFS closure of the generated subgroup, capped to guard runaway input."""
    if cap is None:
        cap = 4 * tower.q ** 3
    gens = tuple(g for g in gens if not g.is_identity())
    seen = {IDENTITY3: identity(tower)}
    frontier = [identity(tower)]
    while frontier:
        nxt = []
        for f in frontier:
            for g in gens:
                h = compose(f, g)
                if h.m not in seen:
                    if len(seen) >= cap:
                        raise GFError(
                            f"subgroup closure exceeded the cap {cap}")
                    seen[h.m] = h
                    nxt.append(h)
        frontier = nxt
    order = len(seen)
    assert pgu_order(tower.q) % order == 0, "closure is not a subgroup"
    elements = tuple(sorted(seen.values(),
                            key=lambda a: tuple(tower.q2.key(c) for c in a.m)))
    return Group(tower, elements, gens)


_TOKEN_RE = re.compile(r"\s*(?:(\^|\*|,|\(|\)|=)|([A-Za-z_][A-Za-z_0-9]*)|(-?\d+))")


def _tokenize(text: str):
    pos = 0
    out = []
    while pos < len(text):
        m = _TOKEN_RE.match(text, pos)
        if not m or m.end() == pos:
            raise DSLError(f"bad character at position {pos}: {text[pos:]!r}")
        if m.group(1):
            out.append(("op", m.group(1), pos))
        elif m.group(2):
            out.append(("name", m.group(2), pos))
        else:
            out.append(("int", int(m.group(3)), pos))
        pos = m.end()
    out.append(("end", None, pos))
    return out


class _Parser:
    """Generator expressions: omega, eps(a^3), tau(b,c), aff(a,b,c),
    sigma4(delta=a^2), sigma5(delta=a), products with *, powers with ^."""

    def __init__(self, tower: FieldTower, text: str):
        self.tower = tower
        self.toks = _tokenize(text)
        self.i = 0

    def peek(self):
        return self.toks[self.i]

    def take(self, kind=None, value=None):
        tok = self.toks[self.i]
        if kind and tok[0] != kind or value is not None and tok[1] != value:
            raise DSLError(f"unexpected {tok[1]!r} at position {tok[2]}")
        self.i += 1
        return tok

    def parse(self):
        gens = [self.gen()]
        while self.peek()[1] == ",":
            self.take()
            gens.append(self.gen())
        self.take("end")
        return gens

    def gen(self) -> Aut:
        out = self.atom()
        while self.peek()[1] == "*":
            self.take()
            out = compose(out, self.atom())
        if self.peek()[1] == "^":
            self.take()
            n = self.take("int")[1]
            out = aut_pow(out, n)
        return out

    def atom(self) -> Aut:
        tok = self.take("name")
        name = tok[1]
        tw = self.tower
        if name == "omega":
            return omega(tw)
        self.take("op", "(")
        if name == "eps":
            a = self.elt()
            self.take("op", ")")
            return epsilon(tw, a)
        if name == "tau":
            b = self.elt()
            self.take("op", ",")
            c = self.elt()
            self.take("op", ")")
            return from_affine(tw, 1, b, c)
        if name == "aff":
            a = self.elt()
            self.take("op", ",")
            b = self.elt()
            self.take("op", ",")
            c = self.elt()
            self.take("op", ")")
            return from_affine(tw, a, b, c)
        if name in ("sigma4", "sigma5"):
            self.take("name", "delta")
            self.take("op", "=")
            delta = self.elt()
            self.take("op", ")")
            if name == "sigma4":
                return sigma4(tw, delta)
            return sigma5(tw, delta)
        raise DSLError(f"unknown generator {name!r} at position {tok[2]}")

    def elt(self) -> int:
        tok = self.take()
        tw = self.tower
        if tok[0] == "int":
            if tok[1] == 0:
                return 0
            if tok[1] == 1:
                return 1
            raise DSLError(f"element literals are 0, 1 or a^k, got {tok[1]}")
        if tok[0] == "name" and tok[1] == "a":
            if self.peek()[1] == "^":
                self.take()
                k = self.take("int")[1]
                return tw.a_pow(k)
            return tw.a
        raise DSLError(f"expected element at position {tok[2]}")


def parse_spec(tower: FieldTower, text: str) -> list[Aut]:
    """Parse a comma-separated generator list into automorphisms."""
    if not text.strip():
        return []
    return _Parser(tower, text).parse()


def group_from_spec(tower: FieldTower, text: str, cap: int | None = None) -> Group:
    return close_group(tower, parse_spec(tower, text), cap=cap)
