import pytest

from twoquadrics.smoothcheck import (
    BudgetExceededError,
    DegenerateReductionError,
    PencilData,
    Poly,
    chart_smoothness_check,
    chart_systems,
    default_pencil,
    diagonal_quadric,
    enumerate_points,
    jacobian_rank,
    linear_form,
    projective_count,
    projective_reps,
    singular_locus_check,
)


def test_poly_arithmetic_and_partials():
    x0 = Poly.variable(0, 2)
    x1 = Poly.variable(1, 2)
    f = x0 * x0 + x1 * x1.scale(3)
    assert f.eval_mod((2, 1), 7) == 0
    assert f.partial(0).eval_mod((2, 1), 7) == 4
    assert f.partial(1).eval_mod((2, 1), 7) == 6
    assert (f - f).terms == {}
    assert f.pad(3).nvars == 3
    with pytest.raises(ValueError):
        f.pad(1)


def test_projective_reps_cover_space_once():
    reps = list(projective_reps(2, 3))
    assert len(reps) == projective_count(2, 3) == 4
    assert reps[0] == (1, 0)
    assert (0, 1) in reps


def test_enumerate_line_in_projective_line():
    line = linear_form([1, 0])
    assert enumerate_points([line], 3) == [(0, 1)]


def test_quadric_point_counts_against_both_formulas():
    q = 5
    # seven variables: the count is the odd-dimensional (parabolic) one,
    # equal to the affine count q^6 collapsed by scaling
    pts7 = enumerate_points([diagonal_quadric([1] * 7)], q)
    assert len(pts7) == (q**6 - 1) // (q - 1) == 3906
    # six variables: even-dimensional type, base count plus q^(d/2)
    pts6 = enumerate_points([diagonal_quadric([1] * 6)], q)
    base = (q**5 - 1) // (q - 1)
    assert len(pts6) in (base + q**2, base - q**2)
    assert len(pts6) == base + q**2  # the all-ones form is hyperbolic mod 5


def test_center_nonempty_over_seven():
    data = default_pencil(4, primes=(5, 7, 11), seed=0)
    polys = data.polys()
    pts = enumerate_points(
        [polys["f1"], polys["f2"], polys["g1"], polys["g2"]], 7
    )
    assert len(pts) > 0


def test_budget_guard():
    with pytest.raises(BudgetExceededError):
        enumerate_points([diagonal_quadric([1] * 7)], 11, budget=1000)


def test_jacobian_rank_linear():
    line = linear_form([1, 0])
    assert jacobian_rank([line], (0, 1), 3) == 1
    with pytest.raises(ValueError):
        jacobian_rank([line], (1, 1), 3)


def _total_space_system(data, t_value, p):
    n = data.m + 3
    polys = {k: v.pad(n + 1) for k, v in data.polys().items()}
    t_const = Poly.constant(n + 1, t_value)
    moving = t_const * polys["f2"] + polys["g1"] * polys["g2"]
    return [polys["f1"], moving]


def test_jacobian_rank_on_family_points():
    data = default_pencil(2, primes=(5,), seed=0)
    p = 5
    polys = data.polys()
    center = enumerate_points(
        [polys["f1"], polys["f2"], polys["g1"], polys["g2"]], p
    )
    assert center
    system0 = _total_space_system(data, 0, p)
    z_point = center[0] + (0,)
    # over the base locus the moving row vanishes entirely
    assert jacobian_rank(system0, z_point, p) == 1
    # a point with both linear forms nonzero lives over t != 0 and is smooth
    found = None
    for t_value in range(1, p):
        system = _total_space_system(data, t_value, p)
        for pt in enumerate_points(system, p):
            g1v = polys["g1"].eval_mod(pt, p)
            g2v = polys["g2"].eval_mod(pt, p)
            if g1v and g2v:
                found = (system, pt + (t_value,))
                break
        if found:
            break
    assert found is not None
    system, pt = found
    assert jacobian_rank(system, pt, p) == 2


def test_singular_locus_smoke():
    data = default_pencil(2, primes=(5,), seed=0)
    report = singular_locus_check(data, 5)
    assert report["ok"]
    assert report["t_zero"]["sets_equal"]
    assert report["t_zero"]["base_locus_points"] > 0
    assert report["points_scanned"] == projective_count(5, 5)
    assert "evidence" in report["evidence_note"]


def test_singular_locus_dimension_four_small_prime():
    data = default_pencil(4, primes=(5, 7, 11), seed=0)
    report = singular_locus_check(data, 5, allow_lambda_collisions=True)
    assert report["ok"]
    assert report["lambda_collisions"] == [(0, 5), (1, 6)]


def test_chart_smoothness_smoke():
    data = default_pencil(2, primes=(5,), seed=0)
    report = chart_smoothness_check(data, 5)
    assert report["ok"]
    assert report["chart_points"] > 0
    assert report["divisor_points"] > 0
    assert report["center_points"] > 0
    assert report["chart_rank_failures"] == []
    assert report["divisor_rank_failures"] == []
    assert report["center_rank_failures"] == []


def test_chart_systems_shape():
    data = default_pencil(2, primes=(5,), seed=0)
    systems = chart_systems(data)
    assert set(systems) == {"chart_T", "chart_G2"}
    for polys in systems.values():
        assert len(polys) == 3
        assert all(p.nvars == data.m + 5 for p in polys)


def test_dependent_forms_detected():
    data = PencilData(2, (0, 1, 2, 3, 4), (1, 2, 3, 4, 5), (2, 4, 6, 8, 10))
    with pytest.raises(DegenerateReductionError):
        singular_locus_check(data, 5)
    with pytest.raises(DegenerateReductionError):
        chart_smoothness_check(data, 5)


def test_lambda_collisions_abort_by_default():
    data = default_pencil(4, primes=(5, 7, 11), seed=0)
    with pytest.raises(DegenerateReductionError, match="retry"):
        singular_locus_check(data, 5)
    with pytest.raises(DegenerateReductionError, match="retry"):
        chart_smoothness_check(data, 5)


def test_default_pencil_screens_reductions():
    data = default_pencil(4, primes=(5, 7), seed=0)
    assert len(data.lambdas) == len(data.g1) == len(data.g2) == 7
    # deterministic for a fixed seed
    again = default_pencil(4, primes=(5, 7), seed=0)
    assert data == again


def test_pencil_data_validation():
    with pytest.raises(ValueError):
        PencilData(2, (0, 1, 2, 3), (1, 1, 1, 1, 1), (1, 2, 3, 4, 5))
    with pytest.raises(ValueError):
        PencilData(2, (0, 1, 2, 3, 0), (1, 1, 1, 1, 1), (1, 2, 3, 4, 5))
