"""Tree representation, named families, and structural measures.

Vertices are integers 0..n-1.  Edges are normalized to sorted (min, max)
pairs held in a sorted tuple, so value-equal trees compare and hash equal
regardless of the edge order they were built with.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from functools import cached_property
from typing import Optional, Sequence

from .errors import InvalidTreeError, ParameterError, TreeFormatError


@dataclass(frozen=True)
class Tree:
    """A labeled tree on vertices 0..n-1 with exactly n-1 edges."""

    n: int
    edges: tuple[tuple[int, int], ...]

    def __post_init__(self) -> None:
        if self.n < 1:
            raise InvalidTreeError(f"need at least one vertex, got n={self.n}")
        norm = []
        for e in self.edges:
            u, v = e
            if not (0 <= u < self.n and 0 <= v < self.n):
                raise InvalidTreeError(f"edge {tuple(e)} out of range for n={self.n}")
            if u == v:
                raise InvalidTreeError(f"self-loop at vertex {u}")
            norm.append((u, v) if u < v else (v, u))
        norm.sort()
        for a, b in zip(norm, norm[1:]):
            if a == b:
                raise InvalidTreeError(f"duplicate edge {a}")
        if len(norm) != self.n - 1:
            raise InvalidTreeError(
                f"a tree on {self.n} vertices has {self.n - 1} edges, got {len(norm)}"
            )
        object.__setattr__(self, "edges", tuple(norm))
        seen = bytearray(self.n)
        seen[0] = 1
        reached = 1
        queue = deque([0])
        while queue:
            u = queue.popleft()
            for w in self.adj[u]:
                if not seen[w]:
                    seen[w] = 1
                    reached += 1
                    queue.append(w)
        if reached != self.n:
            raise InvalidTreeError("edge list is not connected")

    @cached_property
    def adj(self) -> tuple[tuple[int, ...], ...]:
        nbr: list[list[int]] = [[] for _ in range(self.n)]
        for u, v in self.edges:
            nbr[u].append(v)
            nbr[v].append(u)
        return tuple(tuple(x) for x in nbr)

    @cached_property
    def degrees(self) -> tuple[int, ...]:
        return tuple(len(a) for a in self.adj)


# ---------------------------------------------------------------------------
# traversal helpers


def bfs_order(t: Tree, root: int) -> tuple[list[int], list[int]]:
    """Vertices in BFS order from `root`, plus the parent of each (root gets -1)."""
    parent = [-1] * t.n
    order = [root]
    seen = bytearray(t.n)
    seen[root] = 1
    for u in order:
        for w in t.adj[u]:
            if not seen[w]:
                seen[w] = 1
                parent[w] = u
                order.append(w)
    return order, parent


def distances(t: Tree, source: int) -> list[int]:
    """BFS distances from `source` to every vertex."""
    dist = [-1] * t.n
    dist[source] = 0
    queue = deque([source])
    while queue:
        u = queue.popleft()
        du = dist[u] + 1
        for w in t.adj[u]:
            if dist[w] < 0:
                dist[w] = du
                queue.append(w)
    return dist


# ---------------------------------------------------------------------------
# structural measures


def diameter(t: Tree) -> int:
    """Length of a longest path, via double BFS."""
    d0 = distances(t, 0)
    far = max(range(t.n), key=d0.__getitem__)
    return max(distances(t, far))


def wiener_index(t: Tree) -> int:
    """Sum of distances over unordered vertex pairs."""
    return sum(sum(distances(t, v)) for v in range(t.n)) // 2


def first_zagreb_index(t: Tree) -> int:
    """Sum of squared vertex degrees."""
    return sum(d * d for d in t.degrees)


def max_degree(t: Tree) -> int:
    return max(t.degrees)


def subdivision(t: Tree) -> Tree:
    """Insert a midpoint on every edge.

    Midpoints take labels n..2n-2 in sorted-edge order, so the result is a
    deterministic tree on 2n-1 vertices.
    """
    edges = []
    for i, (u, v) in enumerate(t.edges):
        m = t.n + i
        edges.append((u, m))
        edges.append((m, v))
    return Tree(2 * t.n - 1, tuple(edges))


def center_vertices(t: Tree) -> tuple[int, ...]:
    """The one or two vertices of minimum eccentricity, by leaf stripping."""
    if t.n <= 2:
        return tuple(range(t.n))
    deg = list(t.degrees)
    dead = bytearray(t.n)
    alive = t.n
    layer = [v for v in range(t.n) if deg[v] == 1]
    while alive > 2:
        for v in layer:
            dead[v] = 1
        alive -= len(layer)
        nxt = []
        for v in layer:
            for w in t.adj[v]:
                if not dead[w]:
                    deg[w] -= 1
                    if deg[w] == 1:
                        nxt.append(w)
        layer = nxt
    return tuple(v for v in range(t.n) if not dead[v])


def centroid_vertices(t: Tree) -> tuple[int, ...]:
    """The one or two vertices minimizing the largest component their removal leaves."""
    if t.n == 1:
        return (0,)
    order, parent = bfs_order(t, 0)
    size = [1] * t.n
    for v in reversed(order[1:]):
        size[parent[v]] += size[v]
    best = t.n
    arg: list[int] = []
    for v in range(t.n):
        m = t.n - size[v]
        for w in t.adj[v]:
            if parent[w] == v:
                m = max(m, size[w])
        if m < best:
            best, arg = m, [v]
        elif m == best:
            arg.append(v)
    return tuple(arg)


def perfect_matching(t: Tree) -> Optional[tuple[tuple[int, int], ...]]:
    """The unique perfect matching if one exists, else None.

    Leaf peeling: a leaf must be matched to its neighbor, and that choice
    propagates.  In a tree this either succeeds uniquely or proves no
    perfect matching exists.
    """
    if t.n % 2:
        return None
    deg = list(t.degrees)
    dead = bytearray(t.n)
    stack = [v for v in range(t.n) if deg[v] == 1]
    matched = []
    while stack:
        v = stack.pop()
        if dead[v] or deg[v] != 1:
            continue
        u = next(w for w in t.adj[v] if not dead[w])
        matched.append((u, v) if u < v else (v, u))
        dead[v] = dead[u] = 1
        for w in t.adj[u]:
            if not dead[w]:
                deg[w] -= 1
                if deg[w] == 1:
                    stack.append(w)
    if len(matched) * 2 != t.n:
        return None
    return tuple(sorted(matched))


def has_perfect_matching(t: Tree) -> bool:
    return perfect_matching(t) is not None


# ---------------------------------------------------------------------------
# isomorphism


def _rooted_code(t: Tree, root: int) -> str:
    order, parent = bfs_order(t, root)
    code = [""] * t.n
    for v in reversed(order):
        kids = sorted(code[w] for w in t.adj[v] if parent[w] == v)
        code[v] = "(" + "".join(kids) + ")"
    return code[root]


def canonical_code(t: Tree) -> str:
    """Label-independent code: nested parentheses, minimized over centroid roots.

    Two trees are isomorphic iff their codes are equal.
    """
    return min(_rooted_code(t, r) for r in centroid_vertices(t))


def is_isomorphic(a: Tree, b: Tree) -> bool:
    return a.n == b.n and canonical_code(a) == canonical_code(b)


# ---------------------------------------------------------------------------
# named families


def path(n: int) -> Tree:
    """Path 0-1-...-(n-1)."""
    if n < 1:
        raise ParameterError(f"path needs n >= 1, got {n}")
    return Tree(n, tuple((i, i + 1) for i in range(n - 1)))


def star(n: int) -> Tree:
    """Star with center 0."""
    if n < 1:
        raise ParameterError(f"star needs n >= 1, got {n}")
    return Tree(n, tuple((0, i) for i in range(1, n)))


def caterpillar(pendant_counts: Sequence[int]) -> Tree:
    """Caterpillar: spine path 0..d plus pendant_counts[i-1] leaves at spine vertex i.

    `pendant_counts` lists the pendant count at each internal spine vertex
    1..d-1, so the spine endpoints stay leaves and the diameter is exactly d.
    """
    counts = tuple(pendant_counts)
    if any(c < 0 for c in counts):
        raise ParameterError(f"pendant counts must be nonnegative, got {counts}")
    d = len(counts) + 1
    edges = [(i, i + 1) for i in range(d)]
    nxt = d + 1
    for i, c in enumerate(counts, start=1):
        for _ in range(c):
            edges.append((i, nxt))
            nxt += 1
    return Tree(nxt, tuple(edges))


def mid_bundle_caterpillar(n: int, d: int) -> Tree:
    """Caterpillar on n vertices with diameter d and all pendants at one spine vertex.

    The n-d-1 pendants all sit at spine vertex floor(d/2).
    """
    if not 2 <= d <= n - 1:
        raise ParameterError(f"need 2 <= d <= n-1, got n={n}, d={d}")
    counts = [0] * (d - 1)
    counts[d // 2 - 1] = n - d - 1
    return caterpillar(counts)


def starlike(leg_lengths: Sequence[int]) -> Tree:
    """Paths of the given lengths glued at a common root 0.

    Leg vertices are labeled consecutively outward, one leg at a time, in
    the order given.
    """
    legs = tuple(leg_lengths)
    if any(p < 1 for p in legs):
        raise ParameterError(f"leg lengths must be positive, got {legs}")
    edges = []
    nxt = 1
    for p in legs:
        prev = 0
        for _ in range(p):
            edges.append((prev, nxt))
            prev = nxt
            nxt += 1
    return Tree(nxt, tuple(edges))


def balanced_starlike(n: int, k: int) -> Tree:
    """Starlike tree on n vertices whose k leg lengths differ by at most one."""
    if k < 1 or n < k + 1:
        raise ParameterError(f"need 1 <= k <= n-1, got n={n}, k={k}")
    q, r = divmod(n - 1, k)
    return starlike((q + 1,) * r + (q,) * (k - r))


def broom(n: int, delta: int) -> Tree:
    """One long leg plus delta-1 pendant leaves at the root: max degree delta."""
    if delta < 2 or n < delta + 1:
        raise ParameterError(f"need 2 <= delta <= n-1, got n={n}, delta={delta}")
    return starlike((n - delta,) + (1,) * (delta - 1))


def matched_starlike(n: int, delta: int) -> Tree:
    """Starlike tree with a perfect matching and max degree delta.

    Legs are one path of length n-2*delta+2, delta-2 paths of length 2, and
    a single pendant edge; n must be even.
    """
    if n % 2 or n < 4:
        raise ParameterError(f"need even n >= 4, got {n}")
    if not 2 <= delta <= n // 2:
        raise ParameterError(f"need 2 <= delta <= n/2, got n={n}, delta={delta}")
    return starlike((n - 2 * delta + 2,) + (2,) * (delta - 2) + (1,))


# ---------------------------------------------------------------------------
# text format: "n u1 v1 u2 v2 ..." per line


def _parse_line(line: str, lineno: int) -> Tree:
    toks = line.split()
    if not toks:
        raise TreeFormatError(lineno, "empty line")
    try:
        nums = [int(x) for x in toks]
    except ValueError:
        bad = next(x for x in toks if not _is_int(x))
        raise TreeFormatError(lineno, f"non-integer token {bad!r}") from None
    n = nums[0]
    if n < 1:
        raise TreeFormatError(lineno, f"vertex count must be positive, got {n}")
    rest = nums[1:]
    if len(rest) != 2 * (n - 1):
        raise TreeFormatError(
            lineno, f"expected {2 * (n - 1)} edge endpoints for n={n}, got {len(rest)}"
        )
    edges = tuple((rest[i], rest[i + 1]) for i in range(0, len(rest), 2))
    try:
        return Tree(n, edges)
    except InvalidTreeError as exc:
        raise TreeFormatError(lineno, str(exc)) from None


def _is_int(tok: str) -> bool:
    try:
        int(tok)
        return True
    except ValueError:
        return False


def parse_tree(text: str) -> Tree:
    """Parse a single one-line tree description."""
    return _parse_line(text.strip(), 1)


def parse_trees(text: str) -> list[Tree]:
    """Parse one tree per line, skipping blank lines."""
    out = []
    for lineno, line in enumerate(text.splitlines(), start=1):
        if line.strip():
            out.append(_parse_line(line, lineno))
    return out


def format_tree(t: Tree) -> str:
    parts = [str(t.n)]
    for u, v in t.edges:
        parts.append(str(u))
        parts.append(str(v))
    return " ".join(parts)
