"""Componentwise domination order on coefficient vectors.

classify() tags a single pair.  classify_all() tags every unordered pair of
isomorphism classes on n vertices and aggregates the counts; the heavy path
is vectorized with numpy when every coefficient fits in int64, with a
pure-python fallback that never overflows.  poset_stats() measures the
induced partial order: longest chain by DP over lexicographically sorted
vectors, maximum antichain by Dilworth (elements minus a maximum bipartite
matching on the strict-domination relation, which is transitive).
"""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from enum import Enum
from typing import Optional, Sequence

import numpy as np

from .coeffs import CoeffVector, laplacian_coeffs
from .config import DEFAULT_LIMITS, Limits, check_limit
from .enumeration import enumerate_trees
from .errors import ParameterError

_INT64_SAFE = 2**62


class PairTag(str, Enum):
    EQUAL = "Equal"
    DOMINATES = "Dominates"
    INCOMPARABLE_TYPE1 = "IncomparableType1"
    INCOMPARABLE_TYPE2 = "IncomparableType2"


@dataclass(frozen=True)
class PairClass:
    """Relation of a vector pair: tag, dominated side, first/last differing index.

    smaller is 0 or 1 (the dominated argument) for Dominates, else None.
    first_diff/last_diff are None only for Equal.
    """

    tag: PairTag
    smaller: Optional[int] = None
    first_diff: Optional[int] = None
    last_diff: Optional[int] = None


@dataclass(frozen=True)
class ClassificationRow:
    n: int
    trees: int
    type1: int
    type2: int
    incomparable: int
    percent: str
    equal_pairs: int = 0


@dataclass(frozen=True)
class PosetStats:
    n: int
    trees: int
    distinct_vectors: int
    longest_chain: int
    max_antichain: int


def classify(a: CoeffVector, b: CoeffVector) -> PairClass:
    """Tag the pair: Equal, Dominates, or incomparable type 1/2.

    Type 1 means the comparisons at the first and last differing indices
    point in opposite directions; type 2 means they agree (so the vectors
    cross an even number of times).
    """
    if len(a) != len(b):
        raise ParameterError(f"vector lengths differ: {len(a)} vs {len(b)}")
    diffs = [k for k in range(len(a)) if a[k] != b[k]]
    if not diffs:
        return PairClass(PairTag.EQUAL)
    r, s = diffs[0], diffs[-1]
    a_below = all(a[k] <= b[k] for k in diffs)
    b_below = all(b[k] <= a[k] for k in diffs)
    if a_below:
        return PairClass(PairTag.DOMINATES, smaller=0, first_diff=r, last_diff=s)
    if b_below:
        return PairClass(PairTag.DOMINATES, smaller=1, first_diff=r, last_diff=s)
    if (a[r] < b[r]) != (a[s] < b[s]):
        tag = PairTag.INCOMPARABLE_TYPE1
    else:
        tag = PairTag.INCOMPARABLE_TYPE2
    return PairClass(tag, smaller=None, first_diff=r, last_diff=s)


# ---------------------------------------------------------------------------
# exhaustive pair classification


def _count_range_python(
    vecs: Sequence[CoeffVector], a0: int, a1: int
) -> tuple[int, int, int]:
    t1 = t2 = eq = 0
    total = len(vecs)
    for i in range(a0, a1):
        vi = vecs[i]
        for j in range(i + 1, total):
            vj = vecs[j]
            lt = gt = False
            for x, y in zip(vi, vj):
                if x < y:
                    lt = True
                elif x > y:
                    gt = True
            if lt and gt:
                diffs = [k for k in range(len(vi)) if vi[k] != vj[k]]
                r, s = diffs[0], diffs[-1]
                if (vi[r] < vj[r]) != (vi[s] < vj[s]):
                    t1 += 1
                else:
                    t2 += 1
            elif not lt and not gt:
                eq += 1
    return t1, t2, eq


def _count_range_numpy(vecs: Sequence[CoeffVector], a0: int, a1: int) -> tuple[int, int, int]:
    mat = np.array(vecs, dtype=np.int64)
    total, width = mat.shape
    t1 = t2 = eq = 0
    # block size capped so the broadcast temporaries stay modest
    block = max(1, min(256, 10_000_000 // max(1, total * width)))
    cols = np.arange(total)[None, :]
    for lo in range(a0, a1, block):
        hi = min(lo + block, a1)
        rows = mat[lo:hi]
        lt = (rows[:, None, :] < mat[None, :, :]).any(axis=2)
        gt = (rows[:, None, :] > mat[None, :, :]).any(axis=2)
        upper = cols > np.arange(lo, hi)[:, None]
        eq += int((~lt & ~gt & upper).sum())
        ii, jj = np.nonzero(lt & gt & upper)
        if ii.size:
            left = rows[ii]
            right = mat[jj]
            neq = left != right
            first = neq.argmax(axis=1)
            last = width - 1 - neq[:, ::-1].argmax(axis=1)
            l_first = np.take_along_axis(left, first[:, None], 1)[:, 0]
            r_first = np.take_along_axis(right, first[:, None], 1)[:, 0]
            l_last = np.take_along_axis(left, last[:, None], 1)[:, 0]
            r_last = np.take_along_axis(right, last[:, None], 1)[:, 0]
            opposed = int(((l_first < r_first) != (l_last < r_last)).sum())
            t1 += opposed
            t2 += int(ii.size - opposed)
    return t1, t2, eq


def _count_range(vecs: Sequence[CoeffVector], a0: int, a1: int) -> tuple[int, int, int]:
    if max(max(v) for v in vecs) < _INT64_SAFE:
        return _count_range_numpy(vecs, a0, a1)
    return _count_range_python(vecs, a0, a1)


def _balanced_ranges(total: int, parts: int) -> list[tuple[int, int]]:
    """Split row indices so each range covers roughly equal pair counts."""
    pairs = total * (total - 1) // 2
    parts = max(1, min(parts, total))
    target = pairs / parts
    ranges = []
    start = 0
    for _ in range(parts - 1):
        acc = 0
        i = start
        while i < total and acc < target:
            acc += total - 1 - i
            i += 1
        if i == start:
            break
        ranges.append((start, i))
        start = i
    if start < total:
        ranges.append((start, total))
    return ranges


def _percent_2dp(numer: int, denom: int) -> str:
    """100*numer/denom rounded half-up, printed with exactly two decimals."""
    if denom == 0:
        return "0.00"
    q, rem = divmod(10000 * numer, denom)
    if 2 * rem >= denom:
        q += 1
    return f"{q // 100}.{q % 100:02d}"


def classify_all(
    n: int,
    *,
    jobs: int = 1,
    force: bool = False,
    limits: Limits = DEFAULT_LIMITS,
) -> ClassificationRow:
    """Classify every unordered pair of n-vertex isomorphism classes.

    Coefficient-equal pairs fall in none of the incomparable columns and are
    reported separately in equal_pairs.
    """
    if n < 3:
        raise ParameterError(f"pair classification needs n >= 3, got {n}")
    check_limit(n, limits.pairwise_n, force, "pair classification")
    vecs = [laplacian_coeffs(t) for t in enumerate_trees(n, force=force, limits=limits)]
    total = len(vecs)
    if jobs > 1 and total >= 64:
        ranges = _balanced_ranges(total, jobs * 4)
        t1 = t2 = eq = 0
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            futures = [pool.submit(_count_range, vecs, a, b) for a, b in ranges]
            for fut in futures:
                d1, d2, de = fut.result()
                t1 += d1
                t2 += d2
                eq += de
    else:
        t1, t2, eq = _count_range(vecs, 0, total)
    incomparable = t1 + t2
    percent = _percent_2dp(incomparable, total * (total - 1) // 2)
    return ClassificationRow(
        n=n,
        trees=total,
        type1=t1,
        type2=t2,
        incomparable=incomparable,
        percent=percent,
        equal_pairs=eq,
    )


def classification_table(
    max_n: int,
    *,
    jobs: int = 1,
    force: bool = False,
    limits: Limits = DEFAULT_LIMITS,
) -> list[ClassificationRow]:
    """Rows for n = 3..max_n; the guard is checked up front so nothing is begun."""
    if max_n < 3:
        raise ParameterError(f"need max_n >= 3, got {max_n}")
    check_limit(max_n, limits.pairwise_n, force, "pair classification")
    return [
        classify_all(n, jobs=jobs, force=force, limits=limits)
        for n in range(3, max_n + 1)
    ]


# ---------------------------------------------------------------------------
# poset statistics (longest chain, maximum antichain)

_INF = float("inf")


def _domination_dag(vecs: list[CoeffVector]) -> tuple[list[int], list[list[int]]]:
    """Longest-chain DP values and successor lists over lex-sorted vectors.

    Componentwise <= implies lex <=, so edges only point forward in the
    sorted order; the strict relation on distinct vectors is transitive.
    """
    count = len(vecs)
    dp = [1] * count
    succ: list[list[int]] = [[] for _ in range(count)]
    if count and max(max(v) for v in vecs) < _INT64_SAFE:
        mat = np.array(vecs, dtype=np.int64)
        for j in range(1, count):
            below = np.nonzero((mat[:j] <= mat[j]).all(axis=1))[0]
            if below.size:
                dp[j] = 1 + max(dp[i] for i in below)
                for i in below:
                    succ[int(i)].append(j)
    else:
        for j in range(1, count):
            vj = vecs[j]
            best = 0
            for i in range(j):
                vi = vecs[i]
                if all(x <= y for x, y in zip(vi, vj)):
                    succ[i].append(j)
                    if dp[i] > best:
                        best = dp[i]
            dp[j] = best + 1
    return dp, succ


def _max_bipartite_matching(adj: list[list[int]], size: int) -> int:
    """Hopcroft-Karp on left/right copies of the same element set."""
    match_l = [-1] * size
    match_r = [-1] * size
    dist = [_INF] * size
    while True:
        queue = [u for u in range(size) if match_l[u] == -1]
        for u in range(size):
            dist[u] = 0 if match_l[u] == -1 else _INF
        reachable_free = False
        head = 0
        while head < len(queue):
            u = queue[head]
            head += 1
            for v in adj[u]:
                w = match_r[v]
                if w == -1:
                    reachable_free = True
                elif dist[w] == _INF:
                    dist[w] = dist[u] + 1
                    queue.append(w)
        if not reachable_free:
            break
        for u0 in range(size):
            if match_l[u0] == -1:
                _try_augment(u0, adj, match_l, match_r, dist)
    return sum(1 for v in match_l if v != -1)


def _try_augment(u0, adj, match_l, match_r, dist) -> bool:
    nodes = [u0]
    iters = [iter(adj[u0])]
    via: list[Optional[tuple[int, int]]] = [None]
    while nodes:
        u = nodes[-1]
        step = None
        for v in iters[-1]:
            w = match_r[v]
            if w == -1:
                match_r[v] = u
                match_l[u] = v
                for depth in range(len(nodes) - 1, 0, -1):
                    pu, pv = via[depth]
                    match_r[pv] = pu
                    match_l[pu] = pv
                return True
            if dist[w] == dist[u] + 1:
                step = (v, w)
                break
        if step is None:
            dist[u] = _INF
            nodes.pop()
            iters.pop()
            via.pop()
        else:
            v, w = step
            nodes.append(w)
            iters.append(iter(adj[w]))
            via.append((u, v))
    return False


def poset_stats(
    n: int,
    *,
    force: bool = False,
    limits: Limits = DEFAULT_LIMITS,
) -> PosetStats:
    """Longest chain and maximum antichain of the domination order at size n.

    Coefficient-equal trees collapse to one element first.  The antichain
    size comes from Dilworth's theorem: elements minus a maximum matching of
    the (transitive) strict relation.
    """
    check_limit(n, limits.pairwise_n, force, "poset statistics")
    trees = 0
    seen = set()
    for t in enumerate_trees(n, force=force, limits=limits):
        trees += 1
        seen.add(laplacian_coeffs(t))
    vecs = sorted(seen)
    dp, succ = _domination_dag(vecs)
    matching = _max_bipartite_matching(succ, len(vecs))
    return PosetStats(
        n=n,
        trees=trees,
        distinct_vectors=len(vecs),
        longest_chain=max(dp) if dp else 0,
        max_antichain=len(vecs) - matching,
    )
