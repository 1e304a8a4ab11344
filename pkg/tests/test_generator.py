import numpy as np
import pytest

from su2qfi import (
    DegenerateFieldError,
    FieldCurve,
    analytic_generator,
    build_spin_rep,
    dot_with_J,
    fd_step,
    frobenius,
    generator_fd,
    generator_vector,
    generator_vector_from_split,
    hermitian_expm,
    mqfi_closed_form,
    mqfi_small_time,
    split_velocity,
)


def random_instance(rng, j_max=3.0):
    j = rng.choice([0.5, 1.0, 1.5, 2.0, 2.5, 3.0][: int(2 * j_max)])
    r = rng.normal(size=3)
    r *= rng.uniform(0.05, 3.0) / np.linalg.norm(r)
    v = rng.normal(size=3)
    v *= rng.uniform(0.05, 3.0) / np.linalg.norm(v)
    t = rng.uniform(0.05, 3.0)
    return j, r, v, t


# --- velocity split ---------------------------------------------------------

def test_split_orthogonal_case():
    s = split_velocity([0, 0, 1], [1, 0, 0])
    np.testing.assert_allclose(s.radial, [0, 0, 0], atol=1e-15)
    np.testing.assert_allclose(s.transverse, [1, 0, 0], atol=1e-15)


def test_split_parallel_case():
    s = split_velocity([0, 0, 2], [0, 0, 3])
    np.testing.assert_allclose(s.radial, [0, 0, 3], atol=1e-15)
    np.testing.assert_allclose(s.transverse, [0, 0, 0], atol=1e-15)
    assert s.radial_speed == pytest.approx(3.0)


def test_split_projection_arithmetic():
    s = split_velocity([1, 0, 1], [1, 0, 0])
    np.testing.assert_allclose(s.radial, [0.5, 0.0, 0.5], atol=1e-15)
    np.testing.assert_allclose(s.transverse, [0.5, 0.0, -0.5], atol=1e-15)


def test_split_rejects_zero_field():
    with pytest.raises(DegenerateFieldError):
        split_velocity([0, 0, 0], [1, 0, 0])


def test_split_invariants_randomized():
    rng = np.random.default_rng(5)
    for _ in range(50):
        _, r, v, _ = random_instance(rng)
        s = split_velocity(r, v)
        np.testing.assert_allclose(s.radial + s.transverse, v, atol=1e-12)
        assert np.linalg.norm(np.cross(s.radial, r)) <= 1e-10 * max(
            1e-30, np.linalg.norm(s.radial) * np.linalg.norm(r)
        )
        assert abs(s.transverse @ r) <= 1e-10 * max(
            1e-30, np.linalg.norm(s.transverse) * np.linalg.norm(r)
        )


# --- generator coefficient vector -------------------------------------------

def test_multiplicative_parameter_gives_minus_t_velocity():
    # field = theta * e_z: the generator is -t * dH
    a = generator_vector([0.0, 0.0, 2.0], [0.0, 0.0, 1.0], 1.3)
    np.testing.assert_allclose(a, [0.0, 0.0, -1.3], atol=1e-14)


def test_zero_time_gives_zero_vector():
    a = generator_vector([1.0, 2.0, 0.5], [0.3, -1.0, 0.2], 0.0)
    np.testing.assert_array_equal(a, [0.0, 0.0, 0.0])


def test_vanishing_field_limit():
    v = np.array([0.4, -0.2, 1.1])
    np.testing.assert_allclose(generator_vector([0, 0, 0], v, 2.0), -2.0 * v, atol=1e-15)
    # and continuity: a tiny field stays near the limit
    np.testing.assert_allclose(generator_vector([1e-9, 0, 0], v, 2.0), -2.0 * v, atol=1e-8)


def test_norm_identity():
    rng = np.random.default_rng(12)
    for _ in range(100):
        _, r, v, t = random_instance(rng)
        a = generator_vector(r, v, t)
        s = split_velocity(r, v)
        expected = (s.radial @ s.radial) * t**2 + 4 * (s.transverse @ s.transverse) / s.field_norm**2 * np.sin(
            s.field_norm * t / 2
        ) ** 2
        assert a @ a == pytest.approx(expected, rel=1e-10, abs=1e-13)


def test_matches_finite_difference_propagator():
    rep = build_spin_rep(1)
    r = np.array([1.0, 0.0, 1.0])
    v = np.array([1.0, 0.0, 0.0])
    t = 1.0
    closed = dot_with_J(rep, generator_vector(r, v, t))

    def u_of(theta):
        return hermitian_expm(dot_with_J(rep, r + theta * v), -1j * t)

    assert frobenius(closed - generator_fd(u_of, 0.0)) < 1e-8


def test_both_vector_forms_agree():
    rng = np.random.default_rng(3)
    checked = 0
    while checked < 40:
        _, r, v, t = random_instance(rng)
        s = split_velocity(r, v)
        if abs(s.radial_speed) < 1e-3:
            continue
        direct = generator_vector(r, v, t)
        via_split = generator_vector_from_split(s, t)
        np.testing.assert_allclose(direct, via_split, atol=1e-10 * max(1, np.linalg.norm(direct)))
        checked += 1


def test_split_form_requires_radial_speed():
    s = split_velocity([0, 0, 1], [1, 0, 0])  # purely transverse
    with pytest.raises(DegenerateFieldError):
        generator_vector_from_split(s, 1.0)


def test_split_form_terms_mutually_orthogonal():
    rng = np.random.default_rng(9)
    for _ in range(40):
        _, r, v, t = random_instance(rng)
        s = split_velocity(r, v)
        cross = np.cross(s.radial, s.transverse)
        pairs = [(cross, s.radial), (cross, s.transverse), (s.radial, s.transverse)]
        for a, b in pairs:
            assert abs(a @ b) <= 1e-10 * max(1e-30, np.linalg.norm(a) * np.linalg.norm(b))


def test_continuity_at_full_turns():
    # a branch jump at full turns would dominate the O(eps^2) curvature of
    # the symmetric second difference
    rng = np.random.default_rng(17)
    eps = 1e-6
    for k in (1, 2, 3):
        r = rng.normal(size=3)
        r *= 1.7 / np.linalg.norm(r)
        v = rng.normal(size=3)
        t_star = 2 * np.pi * k / 1.7
        left = generator_vector(r, v, t_star - eps)
        right = generator_vector(r, v, t_star + eps)
        center = generator_vector(r, v, t_star)
        assert np.linalg.norm(left + right - 2 * center) < 1e-8


# --- analytic_generator ------------------------------------------------------

def test_analytic_generator_fields():
    rep = build_spin_rep(1.5)
    curve = FieldCurve(lambda th: np.array([np.cos(th), np.sin(th), 0.5]))
    res = analytic_generator(rep, curve, 0.3, 2.0)
    np.testing.assert_array_equal(res.matrix, dot_with_J(rep, res.coeffs))
    norm = np.linalg.norm(res.coeffs)
    assert res.lambda_max == pytest.approx(1.5 * norm, abs=1e-10)
    assert res.lambda_min == pytest.approx(-1.5 * norm, abs=1e-10)
    assert res.mqfi() == pytest.approx((2 * 1.5 * norm) ** 2, rel=1e-12)
    eig = np.linalg.eigvalsh(res.matrix)
    assert eig[-1] == pytest.approx(res.lambda_max, abs=1e-10)


def test_analytic_generator_rejects_negative_time():
    rep = build_spin_rep(0.5)
    curve = FieldCurve(lambda th: np.array([th, 0.0, 1.0]))
    with pytest.raises(ValueError):
        analytic_generator(rep, curve, 0.0, -1.0)


def test_analytic_generator_rejects_non_finite_velocity():
    rep = build_spin_rep(0.5)
    curve = FieldCurve(lambda th: np.zeros(3), lambda th: np.array([np.nan, 0.0, 0.0]))
    with pytest.raises(ValueError):
        analytic_generator(rep, curve, 0.0, 1.0)


def test_field_curve_numeric_derivative():
    curve = FieldCurve(lambda th: np.array([np.cos(th), np.sin(2 * th), th**2]))
    exact = np.array([-np.sin(0.7), 2 * np.cos(1.4), 1.4])
    np.testing.assert_allclose(curve.velocity(0.7), exact, atol=1e-8)


# --- closed-form MQFI --------------------------------------------------------

def test_mqfi_matches_eigenvalue_spread():
    rng = np.random.default_rng(31)
    for _ in range(100):
        j, r, v, t = random_instance(rng)
        rep = build_spin_rep(j)
        curve = FieldCurve(lambda th, r=r, v=v: r + th * v, lambda th, v=v: v)
        res = analytic_generator(rep, curve, 0.0, t)
        breakdown = mqfi_closed_form(j, split_velocity(r, v), t)
        assert breakdown.total == pytest.approx(res.mqfi(), rel=1e-9, abs=1e-15)
        assert breakdown.total == pytest.approx(breakdown.quadratic + breakdown.oscillatory, rel=1e-12)


def test_mqfi_pure_transverse_oscillates():
    # orthogonal field and velocity: the quadratic part vanishes and the
    # total is 16 j^2 (v^2/r^2) sin^2(rt/2), optimal at odd half-turns
    j = 1.5
    s = split_velocity([0, 0, 2.0], [3.0, 0, 0])
    ceiling = 16 * j**2 * 9.0 / 4.0
    for k in (0, 1, 2):
        t_opt = (2 * k + 1) * np.pi / 2.0
        b = mqfi_closed_form(j, s, t_opt)
        assert b.quadratic == 0.0
        assert b.total == pytest.approx(ceiling, rel=1e-12)
    halfway = mqfi_closed_form(j, s, np.pi / 4.0)
    assert halfway.total == pytest.approx(ceiling * np.sin(np.pi / 4) ** 2, rel=1e-12)
    assert halfway.total < ceiling


def test_mqfi_zero_time():
    s = split_velocity([1.0, 0, 0], [0.5, 0.5, 0])
    assert mqfi_closed_form(2.0, s, 0.0).total == 0.0


def test_mqfi_multiplicative_limit_is_quadratic():
    from su2qfi import VelocitySplit

    v = np.array([0.0, 0.0, 1.5])
    degenerate = VelocitySplit(v, v, np.zeros(3), 0.0, 1.5)
    b = mqfi_closed_form(1.0, degenerate, 2.0)
    assert b.total == pytest.approx(4 * 4 * 2.25, rel=1e-12)
    assert b.oscillatory == 0.0


def test_small_time_value():
    assert mqfi_small_time(1.0, [1.0, 0.0, 0.0], 2.0) == pytest.approx(16.0)
    assert mqfi_small_time(1.0, [0.0, 0.0, 0.0], 2.0) == 0.0


def test_small_time_matches_closed_form():
    rng = np.random.default_rng(41)
    for _ in range(50):
        j, r, v, _ = random_instance(rng)
        t = 1e-3 / np.linalg.norm(r)  # |field| * t = 1e-3
        small = mqfi_small_time(j, v, t)
        full = mqfi_closed_form(j, split_velocity(r, v), t).total
        assert small == pytest.approx(full, rel=1e-6)


def test_reparametrization_scaling():
    # theta -> theta / c scales the velocity by c and the MQFI by c^2
    rng = np.random.default_rng(43)
    c = 2.5
    base = lambda th: np.array([np.cos(th), np.sin(th), 1 + th**2])
    curve1 = FieldCurve(base)
    curve2 = FieldCurve(lambda th: base(c * th))
    rep = build_spin_rep(1)
    theta0, t = 0.4, 1.7
    r1, v1 = curve1.field(c * theta0), curve1.velocity(c * theta0)
    r2, v2 = curve2.field(theta0), curve2.velocity(theta0)
    np.testing.assert_allclose(r1, r2, atol=1e-12)
    np.testing.assert_allclose(c * v1, v2, rtol=1e-6)
    f1 = mqfi_closed_form(1.0, split_velocity(r1, v1), t).total
    f2 = mqfi_closed_form(1.0, split_velocity(r2, v2), t).total
    assert f2 == pytest.approx(c**2 * f1, rel=1e-6)


def test_fd_step_scaling():
    assert fd_step(1.0) == pytest.approx(1e-4)  # clipped ceiling
    assert fd_step(100.0) < fd_step(10.0) < fd_step(1.0)
    assert fd_step(1e12) >= 1e-8
