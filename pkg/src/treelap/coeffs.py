"""Laplacian coefficient vectors of trees, by two independent exact algorithms.

The coefficient vector of a tree on n vertices is the length-(n+1) sequence
c_0..c_n with det(xI - L) = sum_k (-1)^k c_k x^(n-k); all c_k are nonnegative
integers, computed here with arbitrary precision.

Engine one exploits the tree identity c_k(T) = (number of k-edge matchings of
the subdivision of T) and runs a rooted matching DP.  Engine two evaluates the
characteristic polynomial of the Laplacian directly: fraction-free integer
determinants at n+1 points followed by exact interpolation.  The two share no
code beyond the Tree type, so each serves as an oracle for the other.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import comb, factorial

from .trees import Tree, bfs_order, subdivision

CoeffVector = tuple[int, ...]
MatchingVector = tuple[int, ...]


# ---------------------------------------------------------------------------
# engine one: matchings of the subdivision


def _poly_add(a: list[int], b: list[int]) -> list[int]:
    if len(a) < len(b):
        a, b = b, a
    out = a[:]
    for i, x in enumerate(b):
        out[i] += x
    return out


def _poly_mul(a: list[int], b: list[int]) -> list[int]:
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return out


def matchings(t: Tree) -> MatchingVector:
    """Count k-edge matchings for k = 0..n-1, via rooted DP.

    Each vertex carries two generating polynomials in the matching size:
    subtree matchings leaving it unmatched (a) and matching it (b).
    Merging a child c into v:

        a <- a * (a_c + b_c)
        b <- b * (a_c + b_c) + x * a * a_c
    """
    order, parent = bfs_order(t, 0)
    poly_a: list[list[int] | None] = [None] * t.n
    poly_b: list[list[int] | None] = [None] * t.n
    for v in reversed(order):
        a, b = [1], [0]
        for w in t.adj[v]:
            if parent[w] == v:
                aw, bw = poly_a[w], poly_b[w]
                total = _poly_add(aw, bw)
                b = _poly_add(_poly_mul(b, total), [0] + _poly_mul(a, aw))
                a = _poly_mul(a, total)
                poly_a[w] = poly_b[w] = None
        poly_a[v], poly_b[v] = a, b
    m = _poly_add(poly_a[0], poly_b[0])
    return tuple(m[k] if k < len(m) else 0 for k in range(t.n))


def coeffs_via_matchings(t: Tree) -> CoeffVector:
    """c_k as the k-matching count of the subdivision tree."""
    m = matchings(subdivision(t))
    return tuple(m[k] if k < len(m) else 0 for k in range(t.n + 1))


def path_matching_count(n: int, k: int) -> int:
    """k-edge matchings of the n-vertex path: C(n-k, k), zero outside range."""
    a, b = n - k, k
    if b < 0 or a < 0 or b > a:
        return 0
    return comb(a, b)


# ---------------------------------------------------------------------------
# engine two: characteristic polynomial of the Laplacian


def _det_bareiss(m: list[list[int]]) -> int:
    """Exact determinant of an integer matrix, fraction-free; destroys m."""
    n = len(m)
    if n == 0:
        return 1
    sign = 1
    prev = 1
    for k in range(n - 1):
        if m[k][k] == 0:
            for r in range(k + 1, n):
                if m[r][k] != 0:
                    m[k], m[r] = m[r], m[k]
                    sign = -sign
                    break
            else:
                return 0
        pivot = m[k][k]
        for i in range(k + 1, n):
            row_i = m[i]
            row_k = m[k]
            lead = row_i[k]
            for j in range(k + 1, n):
                row_i[j] = (row_i[j] * pivot - lead * row_k[j]) // prev
            row_i[k] = 0
        prev = pivot
    return sign * m[-1][-1]


def _interpolate_integer_poly(values: list[int]) -> list[int]:
    """Integer polynomial p of degree len(values)-1 with p(i) = values[i].

    Lagrange over the nodes 0..n, accumulated in exact rationals; the caller
    guarantees an integer-coefficient result, which is asserted.
    """
    n = len(values) - 1
    full = [1]
    for j in range(n + 1):
        full = _poly_mul(full, [-j, 1])
    acc = [Fraction(0)] * (n + 1)
    for i, y in enumerate(values):
        if y == 0:
            continue
        quot = [0] * (n + 1)
        quot[n] = full[n + 1]
        for d in range(n, 0, -1):
            quot[d - 1] = full[d] + i * quot[d]
        denom = factorial(i) * factorial(n - i)
        if (n - i) % 2:
            denom = -denom
        scale = Fraction(y, denom)
        for d in range(n + 1):
            if quot[d]:
                acc[d] += quot[d] * scale
    out = []
    for fr in acc:
        assert fr.denominator == 1, "interpolation must be integral"
        out.append(fr.numerator)
    return out


def coeffs_via_charpoly(t: Tree) -> CoeffVector:
    """c_k from det(xI - L) evaluated at x = 0..n and interpolated exactly."""
    n = t.n
    base = [[0] * n for _ in range(n)]
    for i, d in enumerate(t.degrees):
        base[i][i] = -d
    for u, v in t.edges:
        base[u][v] = base[v][u] = 1
    values = []
    for x in range(n + 1):
        m = [row[:] for row in base]
        for i in range(n):
            m[i][i] += x
        values.append(_det_bareiss(m))
    p = _interpolate_integer_poly(values)
    assert p[n] == 1, "characteristic polynomial must be monic"
    out = []
    for k in range(n + 1):
        c = p[n - k] if k % 2 == 0 else -p[n - k]
        assert c >= 0, "coefficient signs must alternate"
        out.append(c)
    return tuple(out)


# ---------------------------------------------------------------------------
# cached front door used by the sweeps


@lru_cache(maxsize=None)
def laplacian_coeffs(t: Tree) -> CoeffVector:
    """Coefficient vector of t (matching engine), cached by tree value."""
    return coeffs_via_matchings(t)
