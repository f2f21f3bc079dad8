"""Vector heights, the canonical-height limit, and the pairing estimator.

The synthetic fibration oracle models a family of fibers with prescribed
base heights h(E) and a vector height that transforms under the fiberwise
translation automorphisms up to bounded, seeded noise:

    h(Q_{v,E}) = T_v h(O_E) + noise,       |noise_perp| <= M, |noise_E| <= M

iterated noise obeys the growth contract |perp| <= M n, |scalar| <= M |v| n^2.

Sign convention: the Lorentz product is negative definite on the boundary
subspace, so the canonical height comes out as -h(E) (v.v) ([E].D) / 2 >= 0
and the normalized pairing matrix converges to the positive semidefinite
Euclidean Gram matrix [-v_i.v_j].
"""

import math
import random
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property

from . import linalg
from .errors import InputError
from .linalg import Vector, vector
from .models import BoundaryChart, inner_f
from .translations import translation_image


@dataclass(frozen=True)
class FiberPoint:
    """A point Q_{v,E} encoded by its fiber and group vector m_1..m_r."""

    fiber: int
    group_vector: tuple

    def __post_init__(self):
        object.__setattr__(self, "group_vector",
                           tuple(int(m) for m in self.group_vector))

    def __add__(self, other: "FiberPoint") -> "FiberPoint":
        if self.fiber != other.fiber:
            raise InputError("points lie on different fibers")
        return FiberPoint(self.fiber,
                          tuple(a + b for a, b in zip(self.group_vector,
                                                      other.group_vector)))


class SyntheticFibration:
    """Deterministic height oracle over a list of fibers.

    fiber_heights are the base heights h(E); noise_bound M caps both the
    boundary and scalar noise components; all draws are reproducible from
    the seed.
    """

    def __init__(self, frame, fiber_heights, noise_bound=0.0, seed=0):
        if noise_bound < 0:
            raise InputError("noise bound must be nonnegative")
        if any(h <= 0 for h in fiber_heights):
            raise InputError("fiber heights must be positive")
        self.frame = frame
        self.fiber_heights = tuple(float(h) for h in fiber_heights)
        self.noise_bound = float(noise_bound)
        self.seed = int(seed)

    @cached_property
    def chart(self) -> BoundaryChart:
        return BoundaryChart(self.frame)

    def base_height(self, fiber: int):
        """h(O_E) = h(E) * P, so that h(O_E).[E] = h(E) exactly."""
        if not 0 <= fiber < len(self.fiber_heights):
            raise InputError(f"no fiber with index {fiber}")
        h = self.fiber_heights[fiber]
        return tuple(h * float(c) for c in self.frame.classP)

    def group_translation(self, point: FiberPoint) -> Vector:
        if len(point.group_vector) != self.frame.rank:
            raise InputError("group vector length does not match the frame rank")
        v = linalg.zero_vector(self.frame.form.dim)
        for m, vi in zip(point.group_vector, self.frame.translations):
            v = linalg.vec_add(v, linalg.vec_scale(m, vi))
        return v

    def _noise(self, point: FiberPoint, step):
        """One bounded noise vector: boundary part (norm <= M) plus scalar*E."""
        m = self.noise_bound
        if m == 0.0:
            return None
        rng = random.Random(
            f"{self.seed}|{point.fiber}|{point.group_vector}|{step}")
        r = self.chart.dim
        cap = m / math.sqrt(r)
        perp = self.chart.lattice([rng.uniform(-cap, cap) for _ in range(r)])
        scalar = rng.uniform(-m, m)
        e = [float(c) for c in self.frame.classE]
        return tuple(p + scalar * ei for p, ei in zip(perp, e)), scalar

    def _apply_t(self, v, x):
        return translation_image_f(self.frame, v, x)

    def vector_height(self, point: FiberPoint):
        """h(Q_{v,E}) = T_v h(O_E) + noise (noise keyed to the point)."""
        v = self.group_translation(point)
        base = self.base_height(point.fiber)
        h = self._apply_t(v, base)
        noise = self._noise(point, "point")
        if noise is not None:
            h = tuple(a + b for a, b in zip(h, noise[0]))
        return h

    def iterated_height(self, point: FiberPoint, n: int):
        """h(tau_v^n O_E): exact translate plus per-step accumulated noise."""
        v = self.group_translation(point)
        nv = linalg.vec_scale(n, v)
        exact = self._apply_t(nv, self.base_height(point.fiber))
        err = self._iterated_error(point, n)
        return tuple(a + b for a, b in zip(exact, err))

    def _iterated_error(self, point: FiberPoint, n: int):
        dim = self.frame.form.dim
        err = (0.0,) * dim
        if self.noise_bound == 0.0:
            return err
        v = self.group_translation(point)
        for k in range(n):
            err = self._apply_t(v, err)
            err = tuple(a + b for a, b in zip(err, self._noise(point, k)[0]))
        return err

    def error_trace(self, point: FiberPoint, n_steps: int):
        """Per-step error decomposition for the growth-contract checks.

        Yields (n, boundary_error_norm, |scalar_error|) for n = 1..n_steps.
        """
        frame = self.frame
        ep = float(frame.form.inner(frame.classE, frame.classP))
        rows = []
        dim = frame.form.dim
        err = (0.0,) * dim
        v = self.group_translation(point)
        for k in range(n_steps):
            err = self._apply_t(v, err)
            noise = self._noise(point, k)
            if noise is not None:
                err = tuple(a + b for a, b in zip(err, noise[0]))
            scalar = inner_f(frame.form, err, frame.classP) / ep
            perp = tuple(a - scalar * float(e)
                         for a, e in zip(err, frame.classE))
            perp_norm = math.sqrt(max(-inner_f(frame.form, perp, perp), 0.0))
            rows.append((k + 1, perp_norm, abs(scalar)))
        return rows


def translation_image_f(frame, v, x):
    """Float version of the parabolic translation formula."""
    form = frame.form
    e = [float(c) for c in frame.classE]
    vf = [float(c) for c in v]
    xv = inner_f(form, x, v)
    xe = inner_f(form, x, frame.classE)
    vv = inner_f(form, v, v)
    coeff = xv + 0.5 * xe * vv
    return tuple(float(xi) - coeff * ei + xe * vi
                 for xi, ei, vi in zip(x, e, vf))


def _require_ample(frame, d):
    d = vector(d)
    if frame.form.norm2(d) <= 0 or frame.form.inner(d, frame.ample) <= 0:
        raise InputError("height reference divisor must be ample")
    if frame.form.inner(d, frame.classE) <= 0:
        raise InputError("reference divisor must pair positively with the fiber")
    return d


def canonical_height(fib: SyntheticFibration, point: FiberPoint, d,
                     n_max: int = 200):
    """Canonical height of Q_{v,E} with respect to an ample divisor.

    The quadratic growth coefficient of n -> h_D(tau_v^n O_E) is extracted
    with the exact-for-quadratics second difference over steps {0, n, 2n},
    so with zero noise the result equals -h(E) (v.v) ([E].D) / 2 for every
    n_max.  Returns (value, error_bound); the bound is the worst-case noise
    contribution 3 M |v| ([E].D).
    """
    if n_max < 1:
        raise InputError("n_max must be at least 1")
    d = _require_ample(fib.frame, d)
    df = [float(c) for c in d]
    form = fib.frame.form

    def h_d(n):
        return inner_f(form, fib.iterated_height(point, n), df)

    s0, s1, s2 = h_d(0), h_d(n_max), h_d(2 * n_max)
    value = (s2 - 2.0 * s1 + s0) / (2.0 * n_max * n_max)
    v = fib.group_translation(point)
    vnorm = math.sqrt(max(-inner_f(form, v, v), 0.0))
    ed = float(form.inner(d, fib.frame.classE))
    bound = 3.0 * fib.noise_bound * vnorm * ed
    return value, bound


def nt_pairing(fib: SyntheticFibration, p1: FiberPoint, p2: FiberPoint, d,
               n_max: int = 200) -> float:
    """hhat(p1 + p2) - hhat(p1) - hhat(p2); symmetric in its arguments."""
    if p1.fiber != p2.fiber:
        raise InputError("points lie on different fibers")
    h12, _ = canonical_height(fib, p1 + p2, d, n_max)
    h1, _ = canonical_height(fib, p1, d, n_max)
    h2, _ = canonical_height(fib, p2, d, n_max)
    return h12 - h1 - h2


@dataclass(frozen=True)
class LimitRow:
    fiber_height: float
    pairing: float
    normalized: float
    target: float
    deviation: float


def limit_experiment(fib: SyntheticFibration, i: int, j: int, d,
                     n_max: int = 200):
    """Normalized pairing per fiber against the Euclidean Gram target.

    Emits pairing / (h(E) ([E].D)) for every fiber; the target is the
    Euclidean value -v_i.v_j, approached as h(E) grows.
    """
    d = _require_ample(fib.frame, d)
    frame = fib.frame
    vi, vj = frame.translations[i], frame.translations[j]
    target = float(-frame.form.inner(vi, vj))  # exact negation avoids -0.0
    ed = float(frame.form.inner(d, frame.classE))
    rows = []
    r = frame.rank
    for fiber, h_e in enumerate(fib.fiber_heights):
        p1 = FiberPoint(fiber, tuple(int(k == i) for k in range(r)))
        p2 = FiberPoint(fiber, tuple(int(k == j) for k in range(r)))
        pairing = nt_pairing(fib, p1, p2, d, n_max)
        normalized = pairing / (h_e * ed)
        rows.append(LimitRow(h_e, pairing, normalized, target,
                             normalized - target))
    return rows


def cauchy_schwarz_check(frame, u, v) -> bool:
    """|u.v| <= ||u'|| ||v'|| for u, v with u.E = v.E = 0, exactly.

    Primes drop the E-component; the products u.v and u'.v' agree, and the
    form is negative definite on the primed subspace, so this is the exact
    rational Cauchy-Schwarz verdict.
    """
    u, v = vector(u), vector(v)
    form = frame.form
    if form.inner(u, frame.classE) != 0 or form.inner(v, frame.classE) != 0:
        raise InputError("arguments must be orthogonal to the fiber class")
    up = frame.boundary_rep(u)
    vp = frame.boundary_rep(v)
    return form.inner(u, v) ** 2 <= form.norm2(up) * form.norm2(vp)
