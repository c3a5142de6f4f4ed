"""Small dense linear algebra over a field level (matrices as tuples/lists)."""
from __future__ import annotations

IDENTITY3 = (1, 0, 0, 0, 1, 0, 0, 0, 1)


def mat_mul3(lvl, A, B):
    """Product of two 3x3 matrices given as row-major 9-tuples."""
    m, ad = lvl.mul, lvl.add
    out = []
    for i in (0, 3, 6):
        for j in (0, 1, 2):
            out.append(ad(ad(m(A[i], B[j]), m(A[i + 1], B[j + 3])),
                          m(A[i + 2], B[j + 6])))
    return tuple(out)


def mat_vec3(lvl, A, v):
    m, ad = lvl.mul, lvl.add
    return tuple(ad(ad(m(A[i], v[0]), m(A[i + 1], v[1])), m(A[i + 2], v[2]))
                 for i in (0, 3, 6))


def mat_det3(lvl, A):
    m, ad, sb = lvl.mul, lvl.add, lvl.sub
    a, b, c, d, e, f, g, h, i = A
    return ad(sb(m(a, sb(m(e, i), m(f, h))),
                 m(b, sb(m(d, i), m(f, g)))),
              m(c, sb(m(d, h), m(e, g))))


def mat_adj3(lvl, A):
    """Adjugate; a projective inverse since A * adj(A) = det(A) * I."""
    m, sb = lvl.mul, lvl.sub
    a, b, c, d, e, f, g, h, i = A
    return (sb(m(e, i), m(f, h)), sb(m(c, h), m(b, i)), sb(m(b, f), m(c, e)),
            sb(m(f, g), m(d, i)), sb(m(a, i), m(c, g)), sb(m(c, d), m(a, f)),
            sb(m(d, h), m(e, g)), sb(m(b, g), m(a, h)), sb(m(a, e), m(b, d)))


def charpoly3(lvl, A):
    """Coefficients [c0, c1, c2, 1] of det(x*I - A)."""
    m, ad, sb, ng = lvl.mul, lvl.add, lvl.sub, lvl.neg
    a, b, c, d, e, f, g, h, i = A
    tr = ad(ad(a, e), i)
    minors = ad(ad(sb(m(a, e), m(b, d)), sb(m(a, i), m(c, g))),
                sb(m(e, i), m(f, h)))
    return [ng(mat_det3(lvl, A)), minors, ng(tr), 1]


def kernel(lvl, rows):
    """Basis of the right null space of a matrix (list of row lists)."""
    rows = [list(r) for r in rows]
    n = len(rows[0]) if rows else 0
    pivots = []
    r = 0
    for col in range(n):
        piv = next((i for i in range(r, len(rows)) if rows[i][col] != 0), None)
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        inv = lvl.inv(rows[r][col])
        rows[r] = [lvl.mul(inv, x) for x in rows[r]]
        for i in range(len(rows)):
            if i != r and rows[i][col] != 0:
                c = rows[i][col]
                rows[i] = [lvl.sub(x, lvl.mul(c, y))
                           for x, y in zip(rows[i], rows[r])]
        pivots.append(col)
        r += 1
        if r == len(rows):
            break
    free = [c for c in range(n) if c not in pivots]
    basis = []
    for fc in free:
        v = [0] * n
        v[fc] = 1
        for ri, pc in enumerate(pivots):
            v[pc] = lvl.neg(rows[ri][fc])
        basis.append(v)
    return basis


def span_proj_reps(lvl, basis):
    """One vector per projective point of the span (scalars from lvl)."""
    k = len(basis)
    if k == 0:
        return
    n = len(basis[0])

    def combo(coeffs):
        v = [0] * n
        for c, b in zip(coeffs, basis):
            if c:
                for i in range(n):
                    v[i] = lvl.add(v[i], lvl.mul(c, b[i]))
        return v

    # first nonzero coefficient normalized to 1
    for lead in range(k):
        tail = k - lead - 1
        idx = [0] * tail
        while True:
            yield combo([0] * lead + [1] + idx)
            j = tail - 1
            while j >= 0:
                idx[j] += 1
                if idx[j] < lvl.size:
                    break
                idx[j] = 0
                j -= 1
            if j < 0:
                break
