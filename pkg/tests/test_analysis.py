"""Chain construction, extremal sweeps, closed forms, and crossing analysis."""
from __future__ import annotations

import pytest

from treelap import (
    ParameterError,
    balanced_starlike,
    broom,
    build_chain,
    canonical_code,
    closed_form_coeff,
    crossing_analysis,
    difference_sign_polynomial,
    diameter,
    enumerate_filtered,
    extremal_sweep,
    first_zagreb_index,
    is_isomorphic,
    laplacian_coeffs,
    limit_crossing_root,
    matched_starlike,
    mid_bundle_caterpillar,
    near_maximal_diameter_trees,
    path,
    second_extremal_check,
    star,
    verify_chain,
    wiener_index,
)


def weakly_below(a, b):
    return all(x <= y for x, y in zip(a, b))


class TestBuildChain:
    @pytest.mark.parametrize("n", range(5, 13))
    def test_endpoints_and_strictness(self, n):
        chain = build_chain(n)
        assert is_isomorphic(chain.trees[0], star(n))
        assert is_isomorphic(chain.trees[-1], path(n))
        vecs = [laplacian_coeffs(t) for t in chain.trees]
        for a, b in zip(vecs, vecs[1:]):
            assert weakly_below(a, b) and a != b

    @pytest.mark.parametrize("n", range(5, 21))
    def test_realized_length(self, n):
        # one slide per stage position: sum of floor(d/2) for d = 2..n-2
        want = ((n - 1) // 2) * ((n - 2) // 2)
        assert build_chain(n).length == want

    def test_steps_are_pendant_slides(self):
        chain = build_chain(8)
        for step in chain.steps:
            assert step.kind == "pendant_slide"
            assert step.before.n == step.after.n == 8
            walker, src, dst = step.site
            assert tuple(sorted((walker, src))) in step.before.edges
            assert tuple(sorted((walker, dst))) in step.after.edges

    def test_verify_chain_clean(self):
        assert verify_chain(build_chain(9)) == []

    def test_verify_chain_flags_tampering(self):
        from treelap import DominationChain

        chain = build_chain(6)
        # swap two middle trees so some step goes the wrong way
        trees = list(chain.trees)
        trees[1], trees[2] = trees[2], trees[1]
        broken = DominationChain(n=6, trees=tuple(trees), steps=chain.steps)
        assert verify_chain(broken) != []

    def test_small_n_rejected(self):
        with pytest.raises(ParameterError):
            build_chain(2)


class TestExtremalSweep:
    def test_diameter_minimizer_is_mid_bundle(self):
        for n in (8, 9):
            for d in range(2, n):
                sweep = extremal_sweep(n, "diameter", d, mode="min")
                assert canonical_code(mid_bundle_caterpillar(n, d)) in sweep.simultaneous

    def test_max_degree_maximizer_is_broom(self):
        for n in (8, 9):
            for delta in range(2, n):
                sweep = extremal_sweep(n, "max_degree", delta, mode="max")
                assert canonical_code(broom(n, delta)) in sweep.simultaneous

    def test_starlike_minimizer_is_balanced(self):
        for n in (8, 9):
            for k in range(3, n):
                sweep = extremal_sweep(n, "starlike_legs", k, mode="min")
                assert canonical_code(balanced_starlike(n, k)) in sweep.simultaneous

    def test_matched_class_maximizer_is_matched_starlike(self):
        # within a fixed max degree, the matched starlike tree sits at the TOP
        for n in (8, 10):
            for delta in range(2, n // 2 + 1):
                sweep = extremal_sweep(n, "matched_max_degree", delta, mode="max")
                assert canonical_code(matched_starlike(n, delta)) in sweep.simultaneous

    def test_matched_class_minimizer_counterexample(self):
        # the matched starlike tree is NOT the minimizer once the class is rich
        sweep = extremal_sweep(10, "matched_max_degree", 3, mode="min")
        assert canonical_code(matched_starlike(10, 3)) not in sweep.simultaneous
        assert sweep.class_size == 10

    def test_global_matched_minimizer(self):
        # over ALL perfect-matching trees the half-degree member is the bottom
        for n in (6, 8, 10, 12):
            fv = laplacian_coeffs(matched_starlike(n, n // 2))
            for t in enumerate_filtered(n, perfect_matching=True):
                assert weakly_below(fv, laplacian_coeffs(t))

    def test_empty_class(self):
        sweep = extremal_sweep(9, "matched_max_degree", 3, mode="min")
        assert sweep.class_size == 0
        assert sweep.simultaneous == ()

    def test_representatives_cover_simultaneous(self):
        sweep = extremal_sweep(8, "diameter", 4, mode="min")
        for code in sweep.simultaneous:
            assert canonical_code(sweep.representatives[code]) == code

    def test_bad_kind(self):
        with pytest.raises(ParameterError):
            extremal_sweep(8, "girth", 3)


class TestClosedForms:
    def test_endpoint_values(self):
        for n in (8, 11, 14, 30):
            assert closed_form_coeff("T1", n, 0) == 1
            assert closed_form_coeff("T2", n, 0) == 1
            assert closed_form_coeff("T1", n, 1) == 2 * n - 2
            assert closed_form_coeff("T2", n, 1) == 2 * n - 2

    @pytest.mark.parametrize("n", range(9, 15))
    def test_match_fixture_trees(self, n):
        fx = near_maximal_diameter_trees(n)
        for name in ("T1", "T2"):
            got = tuple(closed_form_coeff(name, n, k) for k in range(n + 1))
            assert got == laplacian_coeffs(fx[name])

    @pytest.mark.parametrize("n", (9, 10, 11))
    def test_formulas_identify_unique_class(self, n):
        want1 = tuple(closed_form_coeff("T1", n, k) for k in range(n + 1))
        want2 = tuple(closed_form_coeff("T2", n, k) for k in range(n + 1))
        hits1 = hits2 = 0
        for t in enumerate_filtered(n, diameter_eq=n - 3):
            v = laplacian_coeffs(t)
            hits1 += v == want1
            hits2 += v == want2
        assert (hits1, hits2) == (1, 1)

    def test_fixture_shapes(self):
        for n in range(8, 15):
            fx = near_maximal_diameter_trees(n)
            for t in fx.values():
                assert t.n == n
                assert diameter(t) == n - 3

    @pytest.mark.parametrize("n", range(8, 15))
    def test_zagreb_and_wiener_gaps(self, n):
        fx = near_maximal_diameter_trees(n)
        assert first_zagreb_index(fx["T2"]) - first_zagreb_index(fx["T1"]) == 2
        assert wiener_index(fx["T2"]) - wiener_index(fx["T1"]) == 2 * n - 14

    @pytest.mark.parametrize("n", range(8, 15))
    def test_third_tree_sits_below_second(self, n):
        fx = near_maximal_diameter_trees(n)
        assert weakly_below(laplacian_coeffs(fx["T3"]), laplacian_coeffs(fx["T2"]))

    def test_variant_domain(self):
        with pytest.raises(ParameterError):
            closed_form_coeff("T9", 10, 3)
        with pytest.raises(ParameterError):
            closed_form_coeff("T1", 7, 3)


class TestCrossing:
    def test_limit_root(self):
        x0 = limit_crossing_root()
        assert abs(x0 - 0.771748) < 1e-6
        p = lambda x: 3 * x**4 - 4 * x**3 - 6 * x**2 + 16 * x - 8
        assert p(x0 - 1e-9) * p(x0 + 1e-9) <= 0

    def test_sign_polynomial_matches_exact_differences(self):
        n = 50
        sgn = lambda v: (v > 0) - (v < 0)
        for k in range(2, n - 1):
            exact = closed_form_coeff("T2", n, k) - closed_form_coeff("T1", n, k)
            assert sgn(exact) == sgn(difference_sign_polynomial(n, k))

    def test_crossing_index_scales_with_root(self):
        r = crossing_analysis(200)
        assert r.k_star == 154
        assert abs(r.ratio - r.x0) <= 0.05

    def test_small_n(self):
        r = crossing_analysis(9)
        assert 2 <= r.k_star <= 7
        # difference starts negative at k=2
        assert closed_form_coeff("T2", 9, 2) < closed_form_coeff("T1", 9, 2)


@pytest.mark.slow
def test_n18_diameter4_top_maximizers_are_different_trees():
    # the winners at the two highest informative indices are non-isomorphic
    sweep = extremal_sweep(18, "diameter", 4, mode="max", force=True)
    assert sweep.class_size == 280
    w15, w16 = set(sweep.per_k[15]), set(sweep.per_k[16])
    assert len(w15) == len(w16) == 1
    assert w15 != w16


class TestSecondExtremal:
    @pytest.mark.parametrize("n", range(4, 11))
    def test_clean_report(self, n):
        report = second_extremal_check(n)
        assert report.ok, report.problems

    def test_report_carries_n(self):
        assert second_extremal_check(8).n == 8
