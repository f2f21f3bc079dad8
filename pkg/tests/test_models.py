import math
import random
from fractions import Fraction

import pytest

from conftest import random_boundary_class, random_valid_frame
from k3cone import f4_frame, linalg
from k3cone.errors import CuspError, DomainError
from k3cone.models import (BallModel, BoundaryChart, ball_distance,
                           boundary_distance, boundary_distance_sq,
                           check_boundary_class, euclidean_norm,
                           from_upper_half_space, hyperbolic_distance,
                           inner_f, phi, to_upper_half_space, uhs_distance)
from k3cone.translations import translation


def _random_interior(frame, rng):
    """Float point on the hyperboloid x.x = 1, ample side (any basis)."""
    form = frame.form
    amp = [float(c) for c in frame.ample]
    while True:
        r = [rng.uniform(-1.0, 1.0) for _ in range(form.dim)]
        t = 0.5
        for _ in range(40):
            x = [a + t * ri for a, ri in zip(amp, r)]
            q = inner_f(form, x, x)
            if q > 0.1 and inner_f(form, x, amp) > 0:
                s = math.sqrt(q)
                return [xi / s for xi in x]
            t /= 2.0


def test_hyperbolic_distance_domain(f4):
    with pytest.raises(DomainError):
        hyperbolic_distance(f4.form, f4.classE, f4.ample)
    neg = linalg.vec_scale(-1, f4.ample)
    with pytest.raises(DomainError):
        hyperbolic_distance(f4.form, f4.ample, neg)
    assert hyperbolic_distance(f4.form, f4.ample, f4.ample) == 0.0


def test_check_boundary_class(f4):
    a = linalg.vec_add(linalg.vec_add(f4.classP,
                                      linalg.vec_scale(2, f4.classE)),
                       (0, 0, 1, 0))
    assert f4.form.norm2(a) == 0
    check_boundary_class(f4, a)
    with pytest.raises(CuspError):
        check_boundary_class(f4, f4.classE)
    with pytest.raises(DomainError):
        check_boundary_class(f4, f4.ample)


def test_phi_example_and_invariance(f4):
    a = (2, 1, 1, 0)  # 2E + P + f1, null
    assert f4.form.norm2(a) == 0
    assert phi(f4, a) == (0, 0, 1, 0)
    doubled = linalg.vec_scale(Fraction(7, 2), a)
    assert phi(f4, doubled) == phi(f4, a)
    with pytest.raises(CuspError):
        phi(f4, f4.classE)


def test_boundary_distance_f4_example(f4):
    # A = [O]'s null companion P; B = T_{f1} P: squared distance = -f1.f1 = 4
    t = translation(f4, f4.translations[0])
    b = t(f4.classP)
    assert boundary_distance_sq(f4, f4.classP, b) == 4
    assert boundary_distance(f4, f4.classP, b) == 2.0


def test_boundary_metric_equals_chart_norm(f4):
    rng = random.Random(3)
    for _ in range(50):
        a = random_boundary_class(f4, rng)
        b = random_boundary_class(f4, rng)
        diff = linalg.vec_sub(phi(f4, a), phi(f4, b))
        assert boundary_distance_sq(f4, a, b) == -f4.form.norm2(diff)


def test_euclidean_norm_domain(f4):
    assert euclidean_norm(f4, (0, 0, 1, 0)) == 2.0
    with pytest.raises(DomainError):
        euclidean_norm(f4, f4.ample)


def test_uhs_round_trip(f4):
    rng = random.Random(4)
    for _ in range(20):
        x = _random_interior(f4, rng)
        p = to_upper_half_space(f4, x)
        back = from_upper_half_space(f4, p)
        assert max(abs(a - b) for a, b in zip(back, x)) < 1e-12


def test_cross_model_distances_agree():
    for seed in range(4):
        frame = random_valid_frame(seed, dim=4 + seed % 2)
        ball = BallModel(frame.form, frame.ample)
        rng = random.Random(40 + seed)
        for _ in range(10):
            x, y = _random_interior(frame, rng), _random_interior(frame, rng)
            d0 = hyperbolic_distance(frame.form, x, y)
            d1 = uhs_distance(frame, to_upper_half_space(frame, x),
                              to_upper_half_space(frame, y))
            d2 = ball_distance(ball.ball_point(x), ball.ball_point(y))
            assert abs(d0 - d1) < 1e-9
            assert abs(d0 - d2) < 1e-9


def test_ball_model_basics(f4):
    ball = BallModel(f4.form, f4.ample)
    w = ball.signature_coords(f4.ample)
    assert w[0] > 0
    assert abs(inner_f(f4.form, f4.ample, f4.ample)
               - (w[0] ** 2 - sum(t * t for t in w[1:]))) < 1e-9
    center = ball.ball_point(f4.ample)
    assert sum(t * t for t in center) < 1.0
    # null class lands on the sphere; the square root of the clipped
    # discriminant costs sqrt(eps), so the bound is 1e-6, not 1e-9
    on_sphere = ball.ball_point((2, 1, 1, 0))
    assert abs(sum(t * t for t in on_sphere) - 1.0) < 1e-6
    with pytest.raises(DomainError):
        ball.ball_point((0, 0, 1, 0))


def test_ball_round_trip(f4):
    ball = BallModel(f4.form, f4.ample)
    rng = random.Random(6)
    x = _random_interior(f4, rng)
    w = ball.signature_coords(x)
    back = ball.from_signature_coords(w)
    assert max(abs(a - b) for a, b in zip(back, x)) < 1e-12


def test_null_lift_is_null(f4):
    ball = BallModel(f4.form, f4.ample)
    u = [0.6, 0.0, 0.8]
    lifted = ball.null_lift(u)
    assert abs(inner_f(f4.form, lifted, lifted)) < 1e-9


def test_boundary_chart_isometry(f4):
    chart = BoundaryChart(f4)
    rng = random.Random(8)
    for _ in range(20):
        coeffs = [Fraction(rng.randint(-9, 9), rng.randint(1, 5))
                  for _ in range(chart.dim)]
        u = linalg.zero_vector(4)
        for c, b in zip(coeffs, chart.basis):
            u = linalg.vec_add(u, linalg.vec_scale(c, b))
        e = chart.euclid(u)
        assert abs(sum(x * x for x in e)
                   + inner_f(f4.form, u, u)) < 1e-9
        back = chart.lattice(e)
        assert max(abs(float(a) - b) for a, b in zip(u, back)) < 1e-9
