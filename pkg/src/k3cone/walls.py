"""Wall enumeration and boundary-circle geometry for the ample cone.

Every -2 class D cuts the hyperbolic cross-section along a hyperplane.
Seen from the cusp [E] in the upper-half-space model, a wall with D.E != 0
traces a circle on the Euclidean boundary; with D.E = 0 it degenerates to a
vertical hyperplane.  In the Poincare ball, a wall traces a circle on the
unit sphere.  The emitted closed forms are always gated behind a sampled
residual check (|A.D| and |A.A| below 1e-9 for reconstructed boundary
classes).
"""

import itertools
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from . import linalg, translations
from .errors import InputError
from .linalg import Vector, vector
from .models import BallModel, BoundaryChart, inner_f


@dataclass(frozen=True)
class Hyperplane:
    """Degenerate wall trace {x : <x, normal> = offset} on the boundary."""

    normal: tuple
    offset: float


@dataclass(frozen=True)
class WallCircle:
    model: str  # "ball" | "uhs"
    center: tuple
    radius: float
    source_class: Vector
    normal: Optional[tuple] = None  # ball circles: unit normal of their plane
    degenerate: Optional[Hyperplane] = None


def orbit_walls(frame, n: int):
    """Translates T_w([O]) for w = sum m_i v_i with |m_i| <= n, deduplicated.

    Every output has self-intersection -2 and meets the fiber class once.
    """
    if n < 0:
        raise InputError("orbit box size must be nonnegative")
    r = frame.rank
    seen = set()
    out = []
    for ms in itertools.product(range(-n, n + 1), repeat=r):
        w = linalg.zero_vector(frame.form.dim)
        for m, v in zip(ms, frame.translations):
            w = linalg.vec_add(w, linalg.vec_scale(m, v))
        d = translations.section_translate(frame, w)
        if d not in seen:
            seen.add(d)
            out.append(d)
    return out


def wall_circle_uhs(frame, d: Vector, chart: Optional[BoundaryChart] = None
                    ) -> WallCircle:
    """Boundary circle of a -2 wall in the upper-half-space model.

    For delta = D.E != 0 the circle has center phi-coordinates dperp/delta
    and radius sqrt(2)/|delta|; every section translate (delta = 1) shares
    radius sqrt(2).  delta = 0 walls degenerate to hyperplanes.
    """
    d = vector(d)
    if frame.form.norm2(d) != -2:
        raise InputError("wall class must have self-intersection -2")
    chart = chart or BoundaryChart(frame)
    delta = frame.form.inner(d, frame.classE)
    dec = frame.decompose(d)
    if delta == 0:
        normal = chart.euclid(dec.perp)
        norm = math.sqrt(sum(x * x for x in normal)) or 1.0
        unit = tuple(x / norm for x in normal)
        # wall equation <a, dperp>_euc = aE-coefficient of D
        offset = float(dec.aE) / norm
        return WallCircle("uhs", (), 0.0, d,
                          degenerate=Hyperplane(unit, offset))
    center_perp = linalg.vec_scale(Fraction(1) / delta, dec.perp)
    center = chart.euclid(center_perp)
    radius = math.sqrt(2.0) / abs(float(delta))
    return WallCircle("uhs", center, radius, d)


def wall_circle_ball(form, d: Vector, ball: BallModel) -> WallCircle:
    """Trace of a wall on the boundary sphere of the Poincare ball.

    In signature coordinates D = (d0, dvec), the null rays orthogonal to D
    hit the sphere along {u : <u, dvec> = d0}, a circle of radius
    sqrt(1 - d0^2/|dvec|^2) centered at (d0/|dvec|^2) dvec.
    """
    d = vector(d)
    if form.norm2(d) >= 0:
        raise InputError("wall class must have negative self-intersection")
    w = ball.signature_coords(d)
    d0, dvec = w[0], w[1:]
    space2 = sum(t * t for t in dvec)
    # space2 > d0^2 precisely because D.D < 0
    center = tuple(d0 * t / space2 for t in dvec)
    radius = math.sqrt(1.0 - d0 * d0 / space2)
    norm = math.sqrt(space2)
    return WallCircle("ball", center, radius, d,
                      normal=tuple(t / norm for t in dvec))


def _plane_frame(normal):
    """Two deterministic orthonormal vectors spanning normal's complement."""
    n = len(normal)
    basis = []
    for k in range(n):
        e = [0.0] * n
        e[k] = 1.0
        v = [a - sum(x * y for x, y in zip(e, normal)) * b
             for a, b in zip(e, normal)]
        for u in basis:
            proj = sum(x * y for x, y in zip(v, u))
            v = [a - proj * b for a, b in zip(v, u)]
        length = math.sqrt(sum(x * x for x in v))
        if length > 1e-9:
            basis.append([x / length for x in v])
        if len(basis) == 2:
            break
    return basis


def sample_wall_circle(frame_or_form, circle: WallCircle, k: int = 16,
                       chart: Optional[BoundaryChart] = None,
                       ball: Optional[BallModel] = None):
    """Reconstruct k boundary classes from (center, radius) of a wall circle.

    The returned float lattice vectors are the oracle for the closed forms:
    each should satisfy A.A ~ 0 and A.D ~ 0.
    """
    pts = []
    if circle.model == "uhs":
        frame = frame_or_form
        chart = chart or BoundaryChart(frame)
        dirs = []
        r = chart.dim
        for idx in range(k):
            theta = 2.0 * math.pi * idx / k
            e = [0.0] * r
            e[0] = math.cos(theta)
            if r > 1:
                e[1] = math.sin(theta)
            dirs.append(e)
        for e in dirs:
            a_coords = [c + circle.radius * x for c, x in zip(circle.center, e)]
            aperp = chart.lattice(a_coords)
            # null lift: A = P + aE * E + a with aE = -(a.a)/2
            a_e = -inner_f(frame.form, aperp, aperp) / 2.0
            ef = [float(c) for c in frame.classE]
            pf = [float(c) for c in frame.classP]
            pts.append(tuple(p + a_e * ev + u
                             for p, ev, u in zip(pf, ef, aperp)))
    elif circle.model == "ball":
        if ball is None:
            raise InputError("ball model required to sample ball circles")
        basis = _plane_frame(list(circle.normal))
        e1 = basis[0]
        e2 = basis[1] if len(basis) > 1 else [0.0] * len(e1)
        for idx in range(k):
            theta = 2.0 * math.pi * idx / k
            u = [c + circle.radius * (math.cos(theta) * a + math.sin(theta) * b)
                 for c, a, b in zip(circle.center, e1, e2)]
            pts.append(ball.null_lift(u))
    else:
        raise InputError(f"unknown circle model {circle.model!r}")
    return pts


def max_residual(form, circle: WallCircle, samples) -> float:
    """Worst |A.A| and |A.D| over the reconstructed sample points."""
    worst = 0.0
    for a in samples:
        worst = max(worst, abs(inner_f(form, a, a)),
                    abs(inner_f(form, a, circle.source_class)))
    return worst
