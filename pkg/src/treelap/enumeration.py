"""Exhaustive generation of free trees, one tree per isomorphism class.

Rooted trees are generated as canonical level sequences (root level 0,
subtree sequences in non-increasing lexicographic order) via the classic
constant-amortized-time successor rule: chop at the last vertex of level
>= 2 and repeat the block that makes the prefix periodic.

Free trees are split by centroid.  A rooted sequence whose root subtrees
all have at most floor((n-1)/2) vertices is rooted at a unique centroid,
and every unicentroid tree has exactly one such canonical sequence.
Bicentroid trees (even n only) are unordered pairs of rooted trees on n/2
vertices joined by an edge.
"""

from __future__ import annotations

from typing import Iterator, Optional

from .config import DEFAULT_LIMITS, Limits, check_limit
from .errors import ParameterError
from .trees import (
    Tree,
    diameter,
    has_perfect_matching,
    max_degree,
)


def _successor(seq: list[int], m: int, last: int) -> Optional[list[int]]:
    """Next canonical level sequence strictly below seq[:last+1], length m."""
    p = -1
    for i in range(last, 0, -1):
        if seq[i] >= 2:
            p = i
            break
    if p < 0:
        return None
    q = p - 1
    while seq[q] != seq[p] - 1:
        q -= 1
    period = p - q
    out = seq[:p]
    while len(out) < m:
        out.append(out[-period])
    return out


def _first_violation(seq: list[int], cap: int) -> Optional[int]:
    """First index at which a root subtree exceeds cap vertices, if any."""
    start = 1
    for i in range(1, len(seq)):
        if seq[i] == 1:
            start = i
        if i - start + 1 > cap:
            return i
    return None


def _rooted_sequences(m: int, cap: Optional[int] = None) -> Iterator[tuple[int, ...]]:
    """All canonical level sequences on m vertices, in generation order.

    With cap set, only sequences whose root subtrees have at most cap
    vertices are produced; violating prefixes are skipped wholesale by
    forcing the successor at the violation point.
    """
    if m == 1:
        yield (0,)
        return
    seq: Optional[list[int]] = list(range(m))
    while seq is not None:
        bad = _first_violation(seq, cap) if cap is not None else None
        if bad is None:
            yield tuple(seq)
            seq = _successor(seq, m, m - 1)
        else:
            seq = _successor(seq, m, bad)


def _sequence_edges(seq: tuple[int, ...], offset: int = 0) -> list[tuple[int, int]]:
    """Edges of the rooted tree a level sequence encodes, labels in preorder."""
    at_level = [0] * len(seq)
    edges = []
    for i in range(1, len(seq)):
        level = seq[i]
        edges.append((at_level[level - 1] + offset, i + offset))
        at_level[level] = i
    return edges


def enumerate_trees(
    n: int, *, force: bool = False, limits: Limits = DEFAULT_LIMITS
) -> Iterator[Tree]:
    """Every isomorphism class of trees on n vertices, exactly once.

    Deterministic order: unicentroid trees in successor order, then (even n)
    bicentroid trees as non-decreasing index pairs of rooted halves.
    """
    if n < 1:
        raise ParameterError(f"need n >= 1, got {n}")
    check_limit(n, limits.per_tree_n, force, "tree enumeration")
    if n == 1:
        yield Tree(1, ())
        return
    for seq in _rooted_sequences(n, cap=(n - 1) // 2):
        yield Tree(n, tuple(_sequence_edges(seq)))
    if n % 2 == 0:
        half = n // 2
        halves = list(_rooted_sequences(half))
        for i, s1 in enumerate(halves):
            e1 = _sequence_edges(s1)
            for s2 in halves[i:]:
                edges = e1 + _sequence_edges(s2, offset=half)
                edges.append((0, half))
                yield Tree(n, tuple(edges))


def enumerate_filtered(
    n: int,
    *,
    diameter_eq: Optional[int] = None,
    max_degree_eq: Optional[int] = None,
    perfect_matching: bool = False,
    starlike_legs: Optional[int] = None,
    force: bool = False,
    limits: Limits = DEFAULT_LIMITS,
) -> Iterator[Tree]:
    """Enumerated trees restricted to exactly one structural predicate."""
    chosen = [
        diameter_eq is not None,
        max_degree_eq is not None,
        perfect_matching,
        starlike_legs is not None,
    ]
    if sum(chosen) != 1:
        raise ParameterError("pick exactly one filter predicate")
    for t in enumerate_trees(n, force=force, limits=limits):
        if diameter_eq is not None:
            if diameter(t) == diameter_eq:
                yield t
        elif max_degree_eq is not None:
            if max_degree(t) == max_degree_eq:
                yield t
        elif perfect_matching:
            if has_perfect_matching(t):
                yield t
        else:
            if _leg_count(t) == starlike_legs:
                yield t


def _leg_count(t: Tree) -> Optional[int]:
    """Number of legs if t is starlike (one vertex of degree >= 3), else None."""
    branch = [v for v in range(t.n) if t.degrees[v] >= 3]
    if len(branch) != 1:
        return None
    root = branch[0]
    # every other vertex must lie on a pendant path, i.e. have degree <= 2
    return t.degrees[root]
