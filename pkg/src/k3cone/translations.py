"""Parabolic isometries fixing the fiber class: construction and algebra.

The core map sends x to

    x - (x.v + (x.E)(v.v)/2) E + (x.E) v

for v with v.E = 0.  It preserves the form, fixes E, and acts on the
Euclidean boundary at the cusp E as translation by (the boundary component
of) v.
"""

from dataclasses import dataclass
from fractions import Fraction

from . import linalg
from .errors import FrameError, InputError
from .lattice import IntersectionForm
from .linalg import Matrix, Vector, vector


@dataclass(frozen=True)
class Isometry:
    """An exact matrix preserving an intersection form."""

    form: IntersectionForm
    matrix: Matrix

    def __post_init__(self):
        m = linalg.matrix(self.matrix)
        if len(m) != self.form.dim:
            raise InputError("matrix dimension does not match the form")
        object.__setattr__(self, "matrix", m)

    def __call__(self, v: Vector) -> Vector:
        return linalg.mat_vec(self.matrix, vector(v))

    def preserves_form(self) -> bool:
        g = self.form.gram
        return linalg.mat_mul(linalg.transpose(self.matrix),
                              linalg.mat_mul(g, self.matrix)) == g

    def is_identity(self) -> bool:
        return self.matrix == linalg.identity(self.form.dim)

    def is_integral(self) -> bool:
        return all(x.denominator == 1 for row in self.matrix for x in row)


def translation_image(form: IntersectionForm, classE: Vector, v: Vector,
                      x: Vector) -> Vector:
    """Image of x under the parabolic translation attached to v."""
    xv = form.inner(x, v)
    xe = form.inner(x, classE)
    vv = form.norm2(v)
    coeff = xv + Fraction(1, 2) * xe * vv
    return tuple(xi - coeff * ei + xe * vi
                 for xi, ei, vi in zip(vector(x), vector(classE), vector(v)))


def translation_matrix(form: IntersectionForm, classE: Vector, v: Vector) -> Isometry:
    """The parabolic translation as an exact matrix; requires v.E = 0."""
    v = vector(v)
    if form.inner(v, classE) != 0:
        raise InputError("translation vector must be orthogonal to the fiber class")
    n = form.dim
    cols = [translation_image(form, classE, v, basis_vec)
            for basis_vec in linalg.identity(n)]
    m = tuple(tuple(cols[j][i] for j in range(n)) for i in range(n))
    return Isometry(form, m)


def translation(frame, v: Vector) -> Isometry:
    """Parabolic translation attached to v on a fibration frame.

    v need not lie in the boundary subspace: translations attached to v and
    v + aE coincide, so only v.E = 0 is required.
    """
    return translation_matrix(frame.form, frame.classE, v)


def section_translate(frame, v: Vector) -> Vector:
    """The section translate T_v([O]); a -2 class meeting the fiber once."""
    image = translation_image(frame.form, frame.classE, v, frame.classO)
    if frame.form.norm2(image) != -2 or frame.form.inner(image, frame.classE) != 1:
        raise FrameError("translated section is not a section class; frame invalid")
    return image


def compose(s: Isometry, t: Isometry) -> Isometry:
    """Matrix product s . t (apply t first)."""
    if s.form is not t.form and s.form != t.form:
        raise InputError("isometries act on different forms")
    return Isometry(s.form, linalg.mat_mul(s.matrix, t.matrix))


def power(t: Isometry, m: int) -> Isometry:
    return Isometry(t.form, linalg.mat_pow(t.matrix, m))
