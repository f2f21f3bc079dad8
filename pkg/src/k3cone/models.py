"""Models of the hyperbolic cross-section: hyperboloid, boundary, ball, UHS.

Exact rational identities (boundary metric, phi) stay exact; anything
involving square roots or arccosh is done in double precision.  Stated
tolerances: 1e-12 for identities that are exact underneath, 1e-9 for
cross-model agreement.
"""

import math
from dataclasses import dataclass
from fractions import Fraction

from . import linalg
from .errors import CuspError, DomainError, InputError
from .lattice import IntersectionForm, congruent_diagonalization
from .linalg import Vector, vector


def _floats(v):
    return [float(x) for x in v]


def inner_f(form: IntersectionForm, u, v) -> float:
    """Lorentz product in double precision; accepts float or rational entries."""
    g = form.gram
    n = form.dim
    if len(u) != n or len(v) != n:
        raise InputError("vector dimension does not match the form")
    return sum(float(u[i]) * float(g[i][j]) * float(v[j])
               for i in range(n) for j in range(n))


def hyperbolic_distance(form: IntersectionForm, a, b, ample=None) -> float:
    """arccosh(A.B / (||A|| ||B||)); scale-invariant in each argument."""
    aa, bb, ab = inner_f(form, a, a), inner_f(form, b, b), inner_f(form, a, b)
    if aa <= 0 or bb <= 0:
        raise DomainError("arguments must lie inside the light cone")
    if ample is not None and (inner_f(form, a, ample) <= 0
                              or inner_f(form, b, ample) <= 0):
        raise DomainError("arguments must lie on the ample side of the cone")
    if ab <= 0:
        raise DomainError("arguments lie in opposite cone components")
    ratio = ab / math.sqrt(aa * bb)
    return math.acosh(max(ratio, 1.0))


# -- boundary classes and the Euclidean metric at the cusp ------------------

def check_boundary_class(frame, a: Vector) -> Vector:
    """Validate a rational boundary-class representative.

    Requires A.A = 0 (exact) and A.ample > 0; rejects multiples of the cusp
    class [E].  Cusp positivity A.E > 0 is asserted, mirroring the fact that
    it is forced for every non-cusp boundary ray.
    """
    a = vector(a)
    form = frame.form
    if form.norm2(a) != 0:
        raise DomainError("boundary class must be null")
    if form.inner(a, frame.ample) <= 0:
        raise DomainError("boundary class must lie on the ample side")
    ae = form.inner(a, frame.classE)
    if ae == 0:
        raise CuspError("class is proportional to the cusp [E]")
    assert ae > 0, "null non-cusp class with A.E < 0 cannot exist on the ample side"
    return a


def boundary_distance_sq(frame, a: Vector, b: Vector) -> Fraction:
    """Exact squared boundary distance 2 A.B / ((A.E)(B.E))."""
    a = check_boundary_class(frame, a)
    b = check_boundary_class(frame, b)
    form = frame.form
    ae = form.inner(a, frame.classE)
    be = form.inner(b, frame.classE)
    return 2 * form.inner(a, b) / (ae * be)


def boundary_distance(frame, a: Vector, b: Vector) -> float:
    return math.sqrt(boundary_distance_sq(frame, a, b))


def phi(frame, a: Vector) -> Vector:
    """Boundary chart: A maps to (perp component of A) / (A.E), exact.

    Representative-invariant, and an isometry onto V with the Euclidean
    norm sqrt(-u.u).
    """
    a = vector(a)
    ae = frame.form.inner(a, frame.classE)
    if ae == 0:
        raise CuspError("phi is undefined at the cusp")
    return linalg.vec_scale(Fraction(1) / ae, frame.decompose(a).perp)


def euclidean_norm(frame, u: Vector) -> float:
    q = -inner_f(frame.form, u, u)
    if q < -1e-12:
        raise DomainError("vector is not in the negative definite subspace")
    return math.sqrt(max(q, 0.0))


# -- upper half space --------------------------------------------------------

@dataclass(frozen=True)
class UpperHalfSpacePoint:
    """(x, z) with x a vector in the boundary subspace V and z > 0."""

    x: tuple
    z: float

    def __post_init__(self):
        if self.z <= 0:
            raise DomainError("upper-half-space height must be positive")


def _decompose_f(frame, u):
    """Float splitting U = w P + v E + uperp (valid frames: E.E=P.P=0, E.P=1)."""
    e, p = _floats(frame.classE), _floats(frame.classP)
    ep = inner_f(frame.form, frame.classE, frame.classP)
    w = inner_f(frame.form, u, frame.classE) / ep
    v = (inner_f(frame.form, u, frame.classP)
         - w * inner_f(frame.form, frame.classP, frame.classP)) / ep
    uperp = [float(ui) - w * pi - v * ei for ui, pi, ei in zip(u, p, e)]
    return w, v, uperp


def to_upper_half_space(frame, u) -> UpperHalfSpacePoint:
    """Hyperboloid point U = wP + vE + u maps to (u/w, 1/w); needs U.E > 0."""
    w, _, uperp = _decompose_f(frame, u)
    if w <= 0:
        raise DomainError("point does not pair positively with the fiber class")
    return UpperHalfSpacePoint(tuple(ui / w for ui in uperp), 1.0 / w)


def from_upper_half_space(frame, point: UpperHalfSpacePoint):
    """Inverse of `to_upper_half_space`, landing back on the hyperboloid."""
    w = 1.0 / point.z
    uperp = [xi * w for xi in point.x]
    uu = inner_f(frame.form, uperp, uperp)
    v = (1.0 - uu) / (2.0 * w)
    e, p = _floats(frame.classE), _floats(frame.classP)
    return tuple(w * pi + v * ei + ui for pi, ei, ui in zip(p, e, uperp))


def uhs_distance(frame, p1: UpperHalfSpacePoint, p2: UpperHalfSpacePoint) -> float:
    dx = [a - b for a, b in zip(p1.x, p2.x)]
    chord2 = -inner_f(frame.form, dx, dx) + (p1.z - p2.z) ** 2
    return math.acosh(max(1.0 + chord2 / (2.0 * p1.z * p2.z), 1.0))


# -- Poincare ball -----------------------------------------------------------

class BallModel:
    """Signature coordinates and Poincare-ball projection for a form.

    The form is congruence-diagonalized exactly with pivots in input-basis
    order, then scaled over the reals to diag(1, -1, ..., -1) with the
    positive direction first and oriented so the ample class has positive
    time coordinate.  Renderings are therefore deterministic.
    """

    def __init__(self, form: IntersectionForm, ample: Vector):
        form.require_lorentzian()
        self.form = form
        self.ample = vector(ample)
        s, diag = congruent_diagonalization(form)
        self._s = s
        self._s_inv = linalg.inverse(s)
        pos = [i for i, d in enumerate(diag) if d > 0]
        order = pos + [i for i in range(form.dim) if i not in pos]
        self._order = order
        self._scales = [math.sqrt(abs(float(diag[i]))) for i in order]
        self._flip = 1.0
        if self.signature_coords(self.ample)[0] < 0:
            self._flip = -1.0

    def signature_coords(self, x):
        """Real coordinates w with x.x = w0^2 - w1^2 - ... - w_{n-1}^2."""
        n = self.form.dim
        c = [sum(float(self._s_inv[i][j]) * float(x[j]) for j in range(n))
             for i in range(n)]
        w = [self._scales[k] * c[self._order[k]] for k in range(n)]
        if getattr(self, "_flip", 1.0) < 0:
            w[0] = -w[0]
        return w

    def from_signature_coords(self, w):
        """Inverse of `signature_coords` (float lattice vector)."""
        n = self.form.dim
        c = [0.0] * n
        for k in range(n):
            wk = w[k]
            if k == 0 and self._flip < 0:
                wk = -wk
            c[self._order[k]] = wk / self._scales[k]
        return tuple(sum(float(self._s[i][j]) * c[j] for j in range(n))
                     for i in range(n))

    def ball_point(self, x):
        """Project a closed-light-cone vector to the ball (interior) or sphere
        (null rays): w maps to wvec / (w0 + sqrt(w0^2 - |wvec|^2))."""
        w = self.signature_coords(x)
        w0, wvec = w[0], w[1:]
        space2 = sum(t * t for t in wvec)
        q = w0 * w0 - space2
        scale2 = max(abs(w0 * w0), space2, 1.0)
        if w0 <= 0 or q < -1e-9 * scale2:
            raise DomainError("vector is outside the closed light cone")
        return tuple(t / (w0 + math.sqrt(max(q, 0.0))) for t in wvec)

    def null_lift(self, u):
        """Lift a unit-sphere point to a null lattice vector (float coords)."""
        return self.from_signature_coords([1.0] + list(u))


def ball_distance(b1, b2) -> float:
    d2 = sum((a - b) ** 2 for a, b in zip(b1, b2))
    n1 = sum(a * a for a in b1)
    n2 = sum(b * b for b in b2)
    return math.acosh(max(1.0 + 2.0 * d2 / ((1.0 - n1) * (1.0 - n2)), 1.0))


# -- Euclidean chart of the boundary subspace -------------------------------

class BoundaryChart:
    """Orthonormal Euclidean coordinates on V = {x : x.E = x.P = 0}.

    Built from a deterministic exact basis of V and a Cholesky factor of its
    (negated, positive definite) Gram matrix, so that the 2-norm of the
    coordinates equals sqrt(-u.u).
    """

    def __init__(self, frame):
        self.frame = frame
        self.basis = frame.perp_basis()
        r = len(self.basis)
        form = frame.form
        self.gram = linalg.matrix(
            [[-form.inner(bi, bj) for bj in self.basis] for bi in self.basis])
        # dense Cholesky of a tiny positive definite matrix
        g = [[float(x) for x in row] for row in self.gram]
        low = [[0.0] * r for _ in range(r)]
        for i in range(r):
            for j in range(i + 1):
                s = g[i][j] - sum(low[i][k] * low[j][k] for k in range(j))
                if i == j:
                    if s <= 0:
                        raise DomainError("boundary Gram is not positive definite")
                    low[i][i] = math.sqrt(s)
                else:
                    low[i][j] = s / low[j][j]
        self._low = low
        self.dim = r

    def coefficients(self, u) -> Vector:
        """Exact coordinates of u in the stored basis of V."""
        rhs = tuple(-self.frame.form.inner(b, vector(u)) for b in self.basis)
        return linalg.solve(self.gram, rhs)

    def euclid(self, u):
        """Euclidean coordinates; ||euclid(u)||_2 = sqrt(-u.u)."""
        c = [float(x) for x in self.coefficients(u)]
        r = self.dim
        return tuple(sum(self._low[i][k] * c[i] for i in range(k, r))
                     for k in range(r))

    def lattice(self, e):
        """Float lattice vector with the given Euclidean coordinates."""
        r = self.dim
        # back-substitute L^T c = e
        c = [0.0] * r
        for i in range(r - 1, -1, -1):
            s = e[i] - sum(self._low[j][i] * c[j] for j in range(i + 1, r))
            c[i] = s / self._low[i][i]
        n = self.frame.form.dim
        return tuple(sum(c[i] * float(self.basis[i][j]) for i in range(r))
                     for j in range(n))
