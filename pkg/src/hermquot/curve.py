"""Places of the Hermitian function field y^q + y = x^(q+1) over F_{q^2}.

The projective model is Y^q Z + Y Z^q = X^(q+1) with x = X/Z, y = Y/Z.
Rational places are the common pole of x and y at (0:1:0) plus the affine
points over F_{q^2}; every remaining closed place whose degree matters here
has degree 3 and is stored as its Frobenius orbit of three F_{q^6}-points.
"""
from __future__ import annotations

from dataclasses import dataclass

from .gf import BudgetExceeded, FieldTower, GFError


@dataclass(frozen=True)
class Place:
    """A closed place: 'infinity', 'rational' (alpha, beta) or 'degree3'."""

    kind: str
    data: tuple

    @property
    def degree(self) -> int:
        return 3 if self.kind == "degree3" else 1

    @property
    def alpha(self) -> int:
        assert self.kind == "rational"
        return self.data[0]

    @property
    def beta(self) -> int:
        assert self.kind == "rational"
        return self.data[1]

    def __repr__(self):
        if self.kind == "infinity":
            return "P_inf"
        if self.kind == "rational":
            return f"P({self.data[0]},{self.data[1]})"
        return f"P3{self.data[0]}"


P_INF = Place("infinity", ())


def rational_place(alpha: int, beta: int) -> Place:
    return Place("rational", (alpha, beta))


def place_sort_key(tower: FieldTower, place: Place):
    if place.kind == "infinity":
        return (0, ())
    if place.kind == "rational":
        k = tower.q2.key
        return (1, (k(place.alpha), k(place.beta)))
    k6 = tower.q6.key
    return (2, tuple(tuple(k6(c) for c in pt) for pt in place.data))


def normalize_point(lvl, v):
    """Scale a nonzero projective triple so its first nonzero entry is 1."""
    for c in v:
        if c != 0:
            if c == 1:
                return tuple(v)
            ic = lvl.inv(c)
            return tuple(lvl.mul(ic, x) for x in v)
    raise GFError("zero vector is not a projective point")


def on_curve(lvl, q: int, pt) -> bool:
    """Check Y^q Z + Y Z^q = X^(q+1) for a point over the given level."""
    x, y, z = pt
    fr = lvl.frobq
    lhs = lvl.add(lvl.mul(fr(y), z), lvl.mul(y, fr(z)))
    return lhs == lvl.mul(fr(x), x)


def frobenius_point(tower: FieldTower, pt):
    """The q^2-power Frobenius on a projective F_{q^6}-point."""
    q6 = tower.q6
    return normalize_point(q6, tuple(q6.frobq2(c) for c in pt))


def point_is_rational(tower: FieldTower, pt) -> bool:
    """True for an F_{q^6}-point already defined over F_{q^2}."""
    q6 = tower.q6
    return all(q6.in_base(c) for c in normalize_point(q6, pt))


def degree3_place(tower: FieldTower, pt) -> Place:
    """The degree-3 place through a non-rational F_{q^6}-point on the curve."""
    q6 = tower.q6
    p0 = normalize_point(q6, pt)
    p1 = frobenius_point(tower, p0)
    p2 = frobenius_point(tower, p1)
    orbit = sorted({p0, p1, p2}, key=lambda p: tuple(q6.key(c) for c in p))
    if len(orbit) != 3:
        raise GFError("point does not generate a degree-3 orbit")
    return Place("degree3", tuple(orbit))


def place_of_point(tower: FieldTower, pt, lvl=None) -> Place:
    """Classify a projective point on the curve into a place."""
    lvl = lvl or tower.q2
    if lvl is not tower.q2 and not point_is_rational(tower, pt):
        return degree3_place(tower, pt)
    v = normalize_point(lvl, pt)  # rational coordinates stay base-field ints
    if v[2] == 0:
        assert v == (0, 1, 0), "the only rational point at infinity is (0:1:0)"
        return P_INF
    iz = lvl.inv(v[2])
    return rational_place(lvl.mul(v[0], iz), lvl.mul(v[1], iz))


def rational_places(tower: FieldTower) -> list[Place]:
    """All q^3 + 1 rational places, infinity first, then sorted (alpha, beta)."""
    q2 = tower.q2
    out = [P_INF]
    for alpha in sorted(range(q2.size), key=q2.key):
        for beta in sorted(tower.solve_additive_raw(alpha, "q2"), key=q2.key):
            out.append(rational_place(alpha, beta))
    assert len(out) == tower.q ** 3 + 1
    return out


def degree3_count(tower: FieldTower) -> int:
    """(N_6 - N_2) / 3 from maximality of the Hermitian curve."""
    q = tower.q
    n6 = q ** 6 + 1 + (q * q - q) * q ** 3
    n2 = q ** 3 + 1
    assert (n6 - n2) % 3 == 0
    return (n6 - n2) // 3


def degree3_places(tower: FieldTower, budget: int | None = None) -> list[Place]:
    """Enumerate every degree-3 place; gated by the F_{q^6} size budget."""
    q6 = tower.q6
    budget = budget if budget is not None else tower.deg3_budget
    if q6.size > budget:
        raise BudgetExceeded(
            f"|F_q^6| = {q6.size} exceeds the degree-3 enumeration budget {budget}")
    Q = tower.q2.size
    seen: dict[tuple, Place] = {}
    for x in range(q6.size):
        ys = tower.solve_additive_raw(x, "q6")
        for y in ys:
            if x < Q and y < Q:
                continue  # rational point
            pl = degree3_place(tower, (x, y, 1))
            seen.setdefault(pl.data[0], pl)
    out = sorted(seen.values(), key=lambda p: place_sort_key(tower, p))
    assert len(out) == degree3_count(tower)
    return out
