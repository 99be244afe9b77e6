"""Coefficient-monotone tree transformations and their verification harness.

The three operations edit pendant paths (bare paths hanging off a vertex,
walked until the first branch vertex or leaf):

  * delta_transform concentrates the pendant paths at a branch vertex onto
    its remaining neighbor, keeping the longest path in place; under the
    theorem hypothesis (branch vertex furthest from the tree center) every
    coefficient weakly decreases.
  * path_shift moves one vertex from the shorter of two pendant paths to the
    end of the longer; every coefficient weakly increases.
  * two_edge_shift moves the last two vertices of the shorter path as a unit,
    preserving perfect matchings; coefficients weakly increase.

verify_monotonicity applies every legal instance over all isomorphism
classes up to a size bound and reports violations (none are expected).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .coeffs import laplacian_coeffs
from .config import DEFAULT_LIMITS, Limits
from .enumeration import enumerate_trees
from .errors import ParameterError, PreconditionError
from .trees import (
    Tree,
    center_vertices,
    distances,
    has_perfect_matching,
    starlike,
)


@dataclass(frozen=True)
class TransformStep:
    kind: str
    site: tuple
    before: Tree
    after: Tree


@dataclass(frozen=True)
class Violation:
    n: int
    detail: str
    before: Tree
    after: Tree


@dataclass(frozen=True)
class VerificationReport:
    theorem: str
    n_max: int
    instances: int
    violations: tuple[Violation, ...]

    @property
    def ok(self) -> bool:
        return not self.violations


# ---------------------------------------------------------------------------
# local structure helpers


def _pendant_path(t: Tree, v: int, u: int) -> Optional[list[int]]:
    """Vertices of the bare path leaving v through u, or None at a branch.

    The walk continues through degree-2 vertices; it is a pendant path iff
    it ends at a leaf without meeting a vertex of degree >= 3.
    """
    path = [u]
    prev, cur = v, u
    while t.degrees[cur] == 2:
        nxt = next(x for x in t.adj[cur] if x != prev)
        path.append(nxt)
        prev, cur = cur, nxt
    return path if t.degrees[cur] == 1 else None


def _pendant_paths_at(t: Tree, w: int) -> list[list[int]]:
    out = []
    for u in t.adj[w]:
        p = _pendant_path(t, w, u)
        if p is not None:
            out.append(p)
    return out


def _longest(paths: list[list[int]]) -> list[int]:
    return max(paths, key=lambda p: (len(p), -p[0]))


def _shortest(paths: list[list[int]]) -> list[int]:
    return min(paths, key=lambda p: (len(p), p[0]))


def _relocate_tail(t: Tree, w: int, longer: list[int], shorter: list[int], step: int) -> Tree:
    """Move the last `step` vertices of `shorter` onto the end of `longer`."""
    edges = set(t.edges)
    moved = shorter[-step]
    anchor = shorter[-step - 1] if len(shorter) > step else w
    edges.remove((anchor, moved) if anchor < moved else (moved, anchor))
    tip = longer[-1]
    edges.add((tip, moved) if tip < moved else (moved, tip))
    return Tree(t.n, tuple(edges))


# ---------------------------------------------------------------------------
# the three operations


def delta_transform(t: Tree, v: int) -> Tree:
    """Re-root all but the longest pendant path at v onto its other neighbor.

    v must have degree >= 3 with at most one neighbor that does not start a
    pendant path; that neighbor receives the moved paths.  When every
    neighbor starts a pendant path, the longest path stands in for it.
    """
    if not 0 <= v < t.n:
        raise ParameterError(f"vertex {v} out of range")
    if t.degrees[v] < 3:
        raise PreconditionError(f"vertex {v} has degree {t.degrees[v]}, need >= 3")
    paths = []
    others = []
    for u in t.adj[v]:
        p = _pendant_path(t, v, u)
        if p is None:
            others.append(u)
        else:
            paths.append(p)
    if len(others) > 1:
        raise PreconditionError(
            f"vertex {v} has {len(others)} non-path branches, need at most one"
        )
    if others:
        w = others[0]
        movable = paths
    else:
        host = _longest(paths)
        w = host[0]
        movable = [p for p in paths if p is not host]
    keep = _longest(movable)
    edges = set(t.edges)
    for p in movable:
        if p is keep:
            continue
        start = p[0]
        edges.remove((v, start) if v < start else (start, v))
        edges.add((w, start) if w < start else (start, w))
    return Tree(t.n, tuple(edges))


def path_shift(t: Tree, w: int) -> Tree:
    """Lengthen the longest pendant path at w by the shortest one's leaf."""
    if not 0 <= w < t.n:
        raise ParameterError(f"vertex {w} out of range")
    paths = _pendant_paths_at(t, w)
    if len(paths) < 2:
        raise PreconditionError(f"vertex {w} carries {len(paths)} pendant paths, need 2")
    longer = _longest(paths)
    shorter = _shortest([p for p in paths if p is not longer])
    return _relocate_tail(t, w, longer, shorter, 1)


def two_edge_shift(t: Tree, w: int) -> Tree:
    """Move the shorter path's last two vertices, keeping its matched pair intact."""
    if not 0 <= w < t.n:
        raise ParameterError(f"vertex {w} out of range")
    paths = _pendant_paths_at(t, w)
    if len(paths) < 2:
        raise PreconditionError(f"vertex {w} carries {len(paths)} pendant paths, need 2")
    longer = _longest(paths)
    candidates = [p for p in paths if p is not longer and len(p) >= 2]
    if not candidates:
        raise PreconditionError(
            f"vertex {w} needs a second pendant path of length >= 2"
        )
    return _relocate_tail(t, w, longer, _shortest(candidates), 2)


# ---------------------------------------------------------------------------
# exhaustive theorem verification


def _center_distance(t: Tree) -> list[int]:
    centers = center_vertices(t)
    dist = distances(t, centers[0])
    if len(centers) == 2:
        other = distances(t, centers[1])
        dist = [min(a, b) for a, b in zip(dist, other)]
    return dist


def _delta_theorem_sites(t: Tree) -> list[int]:
    """Branch vertices the monotonicity theorem covers.

    These are the branch vertices at maximum distance from the center; when
    that maximum is zero the branch vertex is itself a center, which only
    leaves a well-defined move direction in the bicentral case.
    """
    branch = [v for v in range(t.n) if t.degrees[v] >= 3]
    if not branch:
        return []
    dist = _center_distance(t)
    top = max(dist[v] for v in branch)
    if top == 0 and len(center_vertices(t)) != 2:
        return []
    return [v for v in branch if dist[v] == top]


def _weakly_below(a: tuple[int, ...], b: tuple[int, ...]) -> bool:
    return all(x <= y for x, y in zip(a, b))


def _verify_delta(n_max: int, force: bool, limits: Limits):
    instances = 0
    violations = []
    for n in range(4, n_max + 1):
        for t in enumerate_trees(n, force=force, limits=limits):
            for v in _delta_theorem_sites(t):
                after = delta_transform(t, v)
                instances += 1
                if not _weakly_below(laplacian_coeffs(after), laplacian_coeffs(t)):
                    violations.append(
                        Violation(n, f"coefficients grew at site {v}", t, after)
                    )
    return instances, violations


def _ordered_pairs(paths: list[list[int]]):
    """Each unordered pair once, as (longer, shorter)."""
    for i in range(len(paths)):
        for j in range(i + 1, len(paths)):
            a, b = paths[i], paths[j]
            if (len(a), -a[0]) >= (len(b), -b[0]):
                yield a, b
            else:
                yield b, a


def _verify_path_shift(n_max: int, force: bool, limits: Limits):
    instances = 0
    violations = []
    for n in range(3, n_max + 1):
        for t in enumerate_trees(n, force=force, limits=limits):
            for w in range(t.n):
                paths = _pendant_paths_at(t, w)
                if len(paths) < 2:
                    continue
                for longer, shorter in _ordered_pairs(paths):
                    after = _relocate_tail(t, w, longer, shorter, 1)
                    instances += 1
                    if not _weakly_below(laplacian_coeffs(t), laplacian_coeffs(after)):
                        violations.append(
                            Violation(n, f"coefficients fell at site {w}", t, after)
                        )
    return instances, violations


def _verify_two_edge_shift(n_max: int, force: bool, limits: Limits):
    instances = 0
    violations = []
    for n in range(4, n_max + 1, 2):
        for t in enumerate_trees(n, force=force, limits=limits):
            if not has_perfect_matching(t):
                continue
            for w in range(t.n):
                paths = _pendant_paths_at(t, w)
                if len(paths) < 2:
                    continue
                for longer, shorter in _ordered_pairs(paths):
                    if len(shorter) < 2:
                        continue
                    after = _relocate_tail(t, w, longer, shorter, 2)
                    instances += 1
                    if not _weakly_below(laplacian_coeffs(t), laplacian_coeffs(after)):
                        violations.append(
                            Violation(n, f"coefficients fell at site {w}", t, after)
                        )
                    elif not has_perfect_matching(after):
                        violations.append(
                            Violation(n, f"perfect matching lost at site {w}", t, after)
                        )
    return instances, violations


def _partitions_exact(total: int, parts: int, cap: Optional[int] = None):
    """Non-increasing tuples of `parts` positive integers summing to total."""
    if cap is None:
        cap = total
    if parts == 1:
        if 1 <= total <= cap:
            yield (total,)
        return
    top = min(cap, total - parts + 1)
    bottom = -(-total // parts)
    for first in range(top, bottom - 1, -1):
        for rest in _partitions_exact(total - first, parts - 1, first):
            yield (first,) + rest


def majorizes(q: tuple[int, ...], p: tuple[int, ...]) -> bool:
    """Prefix sums of q dominate those of p (equal totals, q != p)."""
    if len(q) != len(p) or sum(q) != sum(p) or q == p:
        return False
    acc_q = acc_p = 0
    for x, y in zip(q, p):
        acc_q += x
        acc_p += y
        if acc_q < acc_p:
            return False
    return True


def _verify_majorization(n_max: int, force: bool, limits: Limits):
    instances = 0
    violations = []
    for n in range(4, n_max + 1):
        for k in range(2, n):
            legs = list(_partitions_exact(n - 1, k))
            for qi in range(len(legs)):
                for pi in range(len(legs)):
                    if pi == qi or not majorizes(legs[qi], legs[pi]):
                        continue
                    lo = starlike(legs[pi])
                    hi = starlike(legs[qi])
                    instances += 1
                    if not _weakly_below(laplacian_coeffs(lo), laplacian_coeffs(hi)):
                        violations.append(
                            Violation(
                                n,
                                f"legs {legs[pi]} not below {legs[qi]}",
                                lo,
                                hi,
                            )
                        )
    return instances, violations


_THEOREMS = {
    "delta": _verify_delta,
    "path_shift": _verify_path_shift,
    "two_edge_shift": _verify_two_edge_shift,
    "majorization": _verify_majorization,
}


def verify_monotonicity(
    theorem: str,
    n_max: int,
    *,
    force: bool = False,
    limits: Limits = DEFAULT_LIMITS,
) -> VerificationReport:
    """Exhaustively check one monotonicity theorem up to n_max vertices."""
    if theorem not in _THEOREMS:
        raise ParameterError(
            f"unknown theorem {theorem!r}; pick one of {sorted(_THEOREMS)}"
        )
    instances, violations = _THEOREMS[theorem](n_max, force, limits)
    return VerificationReport(
        theorem=theorem,
        n_max=n_max,
        instances=instances,
        violations=tuple(violations),
    )
