"""Composite constructions over whole tree classes.

Star-to-path domination chain, extremal sweeps (per-coefficient argmin and
argmax over a structural class), the closed-form coefficient formulas for
the two near-maximal-diameter trees with their sign-crossing analysis, and
the second-extremal family checks.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from math import comb
from typing import Iterator, Optional

from .coeffs import CoeffVector, laplacian_coeffs
from .config import DEFAULT_LIMITS, Limits
from .enumeration import enumerate_filtered, enumerate_trees
from .errors import ParameterError
from .transform import TransformStep
from .trees import (
    Tree,
    broom,
    canonical_code,
    is_isomorphic,
    matched_starlike,
    max_degree,
    mid_bundle_caterpillar,
    path,
    star,
)


def _weakly_below(a: CoeffVector, b: CoeffVector) -> bool:
    return all(x <= y for x, y in zip(a, b))


# ---------------------------------------------------------------------------
# star-to-path chain


@dataclass(frozen=True)
class DominationChain:
    n: int
    trees: tuple[Tree, ...]
    steps: tuple[TransformStep, ...]

    @property
    def length(self) -> int:
        return len(self.steps)


def build_chain(n: int) -> DominationChain:
    """Chain of single-pendant slides from the star to the path.

    One labeled tree evolves throughout: a caterpillar whose pendants sit in
    one mid-spine bundle.  Each stage picks the smallest-labeled pendant and
    walks it to the nearer spine end one edge at a time (ties toward the
    lower end); arriving there it extends the spine, raising the diameter by
    one.  Stage d takes floor(d/2) slides, so the whole chain has
    floor((n-1)/2) * floor((n-2)/2) steps, each strictly raising some
    coefficient.
    """
    if n < 3:
        raise ParameterError(f"chain needs n >= 3, got {n}")
    current = mid_bundle_caterpillar(n, 2)
    spine = [0, 1, 2]
    bundle_at = 1
    bundle = list(range(3, n))
    trees = [current]
    steps: list[TransformStep] = []
    for d in range(2, n - 1):
        walker = bundle.pop(0)
        if bundle_at <= d - bundle_at:
            hops = list(range(bundle_at - 1, -1, -1))
        else:
            hops = list(range(bundle_at + 1, d + 1))
        pos = bundle_at
        for nxt in hops:
            a, b = spine[pos], walker
            edges = set(current.edges)
            edges.remove((a, b) if a < b else (b, a))
            a = spine[nxt]
            edges.add((a, b) if a < b else (b, a))
            after = Tree(n, tuple(edges))
            steps.append(
                TransformStep("pendant_slide", (walker, spine[pos], spine[nxt]), current, after)
            )
            trees.append(after)
            current = after
            pos = nxt
        if hops[-1] == 0:
            spine.insert(0, walker)
            bundle_at += 1
        else:
            spine.append(walker)
    return DominationChain(n=n, trees=tuple(trees), steps=tuple(steps))


def verify_chain(chain: DominationChain) -> list[str]:
    """Problems with a chain; empty means it checks out.

    Endpoints must be the star and the path, and every consecutive pair must
    be strictly dominated (weakly below everywhere, strictly somewhere).
    """
    problems = []
    n = chain.n
    if not is_isomorphic(chain.trees[0], star(n)):
        problems.append("chain does not start at the star")
    if not is_isomorphic(chain.trees[-1], path(n)):
        problems.append("chain does not end at the path")
    for i in range(len(chain.trees) - 1):
        a = laplacian_coeffs(chain.trees[i])
        b = laplacian_coeffs(chain.trees[i + 1])
        if not _weakly_below(a, b):
            problems.append(f"step {i} is not weakly increasing")
        elif a == b:
            problems.append(f"step {i} is not strict")
    return problems


# ---------------------------------------------------------------------------
# extremal sweeps


@dataclass
class ExtremalSweep:
    n: int
    mode: str
    kind: str
    value: Optional[int]
    class_size: int
    extreme_values: tuple[Optional[int], ...]
    per_k: tuple[tuple[str, ...], ...]
    simultaneous: tuple[str, ...]
    representatives: dict[str, Tree] = field(repr=False, default_factory=dict)


def _class_stream(
    n: int,
    kind: str,
    value: Optional[int],
    force: bool,
    limits: Limits,
) -> Iterator[Tree]:
    if kind == "diameter":
        return enumerate_filtered(n, diameter_eq=value, force=force, limits=limits)
    if kind == "max_degree":
        return enumerate_filtered(n, max_degree_eq=value, force=force, limits=limits)
    if kind == "starlike_legs":
        return enumerate_filtered(n, starlike_legs=value, force=force, limits=limits)
    if kind == "matched_max_degree":
        inner = enumerate_filtered(n, perfect_matching=True, force=force, limits=limits)
        return (t for t in inner if max_degree(t) == value)
    raise ParameterError(f"unknown class kind {kind!r}")


def extremal_sweep(
    n: int,
    kind: str,
    value: Optional[int],
    mode: str = "min",
    *,
    force: bool = False,
    limits: Limits = DEFAULT_LIMITS,
) -> ExtremalSweep:
    """Per-coefficient extremal trees over one structural class.

    kind is one of diameter, max_degree, starlike_legs, matched_max_degree.
    Returns, for every index k, the canonical codes achieving the extreme
    c_k, plus the codes extremal at every k simultaneously.
    """
    if mode not in ("min", "max"):
        raise ParameterError(f"mode must be min or max, got {mode!r}")
    best_val: list[Optional[int]] = [None] * (n + 1)
    best_set: list[set[str]] = [set() for _ in range(n + 1)]
    reps: dict[str, Tree] = {}
    size = 0
    for t in _class_stream(n, kind, value, force, limits):
        size += 1
        code = canonical_code(t)
        reps.setdefault(code, t)
        vec = laplacian_coeffs(t)
        for k in range(n + 1):
            v = vec[k]
            cur = best_val[k]
            if cur is None or (v < cur if mode == "min" else v > cur):
                best_val[k] = v
                best_set[k] = {code}
            elif v == cur:
                best_set[k].add(code)
    per_k = tuple(tuple(sorted(s)) for s in best_set)
    if size:
        simultaneous = set(per_k[0])
        for s in per_k[1:]:
            simultaneous &= set(s)
    else:
        simultaneous = set()
    return ExtremalSweep(
        n=n,
        mode=mode,
        kind=kind,
        value=value,
        class_size=size,
        extreme_values=tuple(best_val),
        per_k=per_k,
        simultaneous=tuple(sorted(simultaneous)),
        representatives=reps,
    )


# ---------------------------------------------------------------------------
# closed forms for the two diameter-(n-3) trees


def _b(a: int, b: int) -> int:
    if b < 0 or a < 0 or b > a:
        return 0
    return comb(a, b)


def closed_form_coeff(variant: str, n: int, k: int) -> int:
    """Binomial closed form for c_k of the diameter-(n-3) trees T1 and T2.

    T1 carries a length-2 pendant path near one spine end; T2 carries single
    pendants near both ends (see near_maximal_diameter_trees).  Binomials
    outside their range are zero.
    """
    if n < 8:
        raise ParameterError(f"closed forms need n >= 8, got {n}")
    if not 0 <= k <= n:
        raise ParameterError(f"need 0 <= k <= {n}, got {k}")
    if variant == "T1":
        return (
            6 * _b(2 * n - 9 - k, k - 2)
            + 8 * _b(2 * n - 9 - k, k - 1)
            + _b(2 * n - 9 - k, k)
            + 11 * _b(2 * n - 8 - k, k - 3)
            + 21 * _b(2 * n - 8 - k, k - 2)
            + 6 * _b(2 * n - 7 - k, k - 4)
            + 20 * _b(2 * n - 7 - k, k - 3)
            + _b(2 * n - 6 - k, k - 5)
            + 5 * _b(2 * n - 6 - k, k - 4)
        )
    if variant == "T2":
        return (
            _b(2 * n - 11 - k, k - 2)
            + 2 * _b(2 * n - 11 - k, k - 1)
            + _b(2 * n - 11 - k, k)
            + 4 * _b(2 * n - 10 - k, k - 3)
            + 12 * _b(2 * n - 10 - k, k - 2)
            + 8 * _b(2 * n - 10 - k, k - 1)
            + 6 * _b(2 * n - 9 - k, k - 4)
            + 24 * _b(2 * n - 9 - k, k - 3)
            + 22 * _b(2 * n - 9 - k, k - 2)
            + 4 * _b(2 * n - 8 - k, k - 5)
            + 20 * _b(2 * n - 8 - k, k - 4)
            + 24 * _b(2 * n - 8 - k, k - 3)
            + _b(2 * n - 7 - k, k - 6)
            + 6 * _b(2 * n - 7 - k, k - 5)
            + 9 * _b(2 * n - 7 - k, k - 4)
        )
    raise ParameterError(f"variant must be T1 or T2, got {variant!r}")


def near_maximal_diameter_trees(n: int) -> dict[str, Tree]:
    """The three diameter-(n-3) trees the closed forms and crossing describe.

    All share a spine 0..n-3.  T1 attaches a length-2 pendant path at spine
    vertex 2; T2 attaches single pendants at spine vertices 1 and n-4; T3
    attaches both pendants at spine vertex 1.  Identified by matching full
    coefficient vectors against the closed forms over enumerated
    diameter-(n-3) trees (see the derivation script); T3 is the companion
    tree with T3 weakly below T2.
    """
    if n < 8:
        raise ParameterError(f"need n >= 8, got {n}")
    m = n - 3
    spine = [(i, i + 1) for i in range(m)]
    return {
        "T1": Tree(n, tuple(spine + [(2, n - 2), (n - 2, n - 1)])),
        "T2": Tree(n, tuple(spine + [(1, n - 2), (m - 1, n - 1)])),
        "T3": Tree(n, tuple(spine + [(1, n - 2), (1, n - 1)])),
    }


# ---------------------------------------------------------------------------
# sign crossing of c_k(T2) - c_k(T1)


def difference_sign_polynomial(n: int, k: int) -> int:
    """Quartic in k whose sign tracks c_k(T2) - c_k(T1) in the valid range."""
    return (
        -408
        - 788 * k
        - 120 * k**2
        - 13 * k**3
        + 3 * k**4
        + 844 * n
        + 639 * k * n
        + 81 * k**2 * n
        - 4 * k**3 * n
        - 466 * n**2
        - 186 * k * n**2
        - 6 * k**2 * n**2
        + 104 * n**3
        + 16 * k * n**3
        - 8 * n**4
    )


def _limit_quartic_sign(p: int, q: int) -> int:
    """Sign of 3x^4 - 4x^3 - 6x^2 + 16x - 8 at x = p/q, exactly."""
    val = 3 * p**4 - 4 * p**3 * q - 6 * p**2 * q**2 + 16 * p * q**3 - 8 * q**4
    return (val > 0) - (val < 0)


def limit_crossing_root(bits: int = 60) -> float:
    """The unique root of 3x^4 - 4x^3 - 6x^2 + 16x - 8 in (0, 1).

    Bisection with exact integer sign evaluation at dyadic rationals, so no
    floating-point rounding can misplace the bracket.
    """
    q = 1 << bits
    lo, hi = q // 2, q  # sign(lo) < 0, sign(hi) > 0
    for _ in range(bits):
        mid = (lo + hi) // 2
        if _limit_quartic_sign(mid, q) > 0:
            hi = mid
        else:
            lo = mid
    return (lo + hi) / (2 * q)


@dataclass(frozen=True)
class CrossingResult:
    n: int
    k_star: Optional[int]
    ratio: Optional[float]
    x0: float


def crossing_analysis(n: int) -> CrossingResult:
    """First index where T2's coefficient exceeds T1's, plus the limit root.

    The difference starts negative at k = 2; k_star is the first k with a
    strictly positive difference, or None if the vectors never cross.
    """
    if n < 8:
        raise ParameterError(f"need n >= 8, got {n}")
    k_star = None
    for k in range(2, n - 1):
        if closed_form_coeff("T2", n, k) > closed_form_coeff("T1", n, k):
            k_star = k
            break
    x0 = limit_crossing_root()
    ratio = k_star / n if k_star is not None else None
    return CrossingResult(n=n, k_star=k_star, ratio=ratio, x0=x0)


# ---------------------------------------------------------------------------
# second-extremal families and family chains


@dataclass(frozen=True)
class SecondExtremalReport:
    n: int
    problems: tuple[str, ...]

    @property
    def ok(self) -> bool:
        return not self.problems


def second_extremal_check(
    n: int,
    *,
    force: bool = False,
    limits: Limits = DEFAULT_LIMITS,
) -> SecondExtremalReport:
    """Check the runner-up extremal families and the three family chains.

    The diameter-3 caterpillar must be weakly below every tree but the star,
    the broom with max degree 3 weakly above every tree but the path; the
    caterpillar, broom, and matched-starlike families must be monotone in
    their parameter with star/path endpoints.
    """
    if n < 4:
        raise ParameterError(f"need n >= 4, got {n}")
    problems = []
    star_vec = laplacian_coeffs(star(n))
    path_vec = laplacian_coeffs(path(n))
    low = laplacian_coeffs(mid_bundle_caterpillar(n, 3))
    high = laplacian_coeffs(broom(n, 3))
    for t in enumerate_trees(n, force=force, limits=limits):
        vec = laplacian_coeffs(t)
        if vec != star_vec and vec != low and not _weakly_below(low, vec):
            problems.append(f"diameter-3 caterpillar not below {t.edges}")
        if vec != path_vec and vec != high and not _weakly_below(vec, high):
            problems.append(f"max-degree-3 broom not above {t.edges}")
    cats = [laplacian_coeffs(mid_bundle_caterpillar(n, d)) for d in range(2, n)]
    if cats[0] != star_vec or cats[-1] != path_vec:
        problems.append("caterpillar chain endpoints are not the star and path")
    for i in range(len(cats) - 1):
        if not _weakly_below(cats[i], cats[i + 1]):
            problems.append(f"caterpillar chain fails between d={i + 2} and d={i + 3}")
    brooms = [laplacian_coeffs(broom(n, delta)) for delta in range(2, n)]
    if brooms[0] != path_vec or brooms[-1] != star_vec:
        problems.append("broom chain endpoints are not the path and star")
    for i in range(len(brooms) - 1):
        if not _weakly_below(brooms[i + 1], brooms[i]):
            problems.append(
                f"broom chain fails between max degree {i + 2} and {i + 3}"
            )
    if n % 2 == 0:
        matched = [
            laplacian_coeffs(matched_starlike(n, delta))
            for delta in range(2, n // 2 + 1)
        ]
        if matched[0] != path_vec:
            problems.append("matched-starlike chain does not start at the path")
        for i in range(len(matched) - 1):
            if not _weakly_below(matched[i + 1], matched[i]):
                problems.append(
                    f"matched chain fails between max degree {i + 2} and {i + 3}"
                )
    return SecondExtremalReport(n=n, problems=tuple(problems))
