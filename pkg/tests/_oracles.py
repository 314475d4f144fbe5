"""Independent pure-Python reference computations used by the tests.

Nothing here calls into the package: spans, distances and solution sets are
found by plain enumeration over the field.
"""

import itertools


def vectors(q, length):
    return itertools.product(range(q), repeat=length)


def combo(coeffs, rows, q):
    n = len(rows[0]) if rows else 0
    return tuple(sum(c * r[j] for c, r in zip(coeffs, rows)) % q for j in range(n))


def span(rows, q, n=None):
    if not rows:
        return {tuple([0] * (n or 0))}
    return {combo(c, rows, q) for c in vectors(q, len(rows))}


def rank(rows, q, n=None):
    s = len(span(rows, q, n))
    k = 0
    while q**k < s:
        k += 1
    return k


def min_distance(rows, q):
    ws = [sum(1 for x in combo(c, rows, q) if x) for c in vectors(q, len(rows)) if any(c)]
    return min(w for w in ws if w) if any(ws) else None


def orthogonal(rows, q, n):
    return {x for x in vectors(q, n) if all(sum(a * b for a, b in zip(r, x)) % q == 0 for r in rows)}


def dual_distance(rows, q, n):
    ws = [sum(1 for a in x if a) for x in orthogonal(rows, q, n)]
    ws = [w for w in ws if w]
    return min(ws) if ws else n + 1


def kernel_size(rows, q, cols):
    """Number of x with sum_j rows[i][cols[j]] x_j = 0 for every row."""
    return sum(1 for x in vectors(q, len(cols))
               if all(sum(r[c] * v for c, v in zip(cols, x)) % q == 0 for r in rows))


def rref_forms(q, a, n):
    """Every a x n matrix in reduced echelon form (zero rows at the bottom)."""
    out = []
    for rk in range(a + 1):
        for piv in itertools.combinations(range(n), rk):
            free = [(i, j) for i in range(rk) for j in range(piv[i] + 1, n) if j not in piv]
            for vals in vectors(q, len(free)):
                m = [[0] * n for _ in range(a)]
                for i, p in enumerate(piv):
                    m[i][p] = 1
                for (i, j), v in zip(free, vals):
                    m[i][j] = v
                out.append(tuple(tuple(r) for r in m))
    return out


def all_matrices(q, a, n):
    for flat in vectors(q, a * n):
        yield tuple(tuple(flat[i * n:(i + 1) * n]) for i in range(a))


def intersection_oracle(a1, a2, q):
    """No nonzero coefficient vector v puts v . a2 into the orthogonal
    complement of the rows of a1."""
    n = len(a1[0])
    perp = orthogonal(a1, q, n)
    return not any(combo(v, a2, q) in perp for v in vectors(q, len(a2)) if any(v))
