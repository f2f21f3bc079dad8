"""Pullbacks of the fiberwise involutions, built from their eigenspaces.

The negation involution fixes span{[E], [O]} and is -1 on its orthogonal
complement; the i-th reflection fixes span{[E], [O] + D_i}.  Their product
is the parabolic translation attached to v_i, and that equality is verified
entrywise whenever it is constructed.
"""

from dataclasses import dataclass

from . import linalg, translations
from .errors import DegenerateFormError, FrameError, K3ConeError
from .lattice import IntersectionForm
from .linalg import Vector, vector
from .translations import Isometry


@dataclass(frozen=True)
class EigenReflection:
    """An involutive isometry determined by its (+1)-eigenspace."""

    isometry: Isometry
    plus_space: tuple
    description: str

    @property
    def matrix(self):
        return self.isometry.matrix

    def __call__(self, v: Vector) -> Vector:
        return self.isometry(v)


def reflection_through(form: IntersectionForm, span, description) -> EigenReflection:
    """Involution fixing `span` and equal to -1 on its orthogonal complement.

    Requires the form restricted to the span to be nondegenerate, so that
    the orthogonal projection is defined.
    """
    span = tuple(vector(s) for s in span)
    gram_span = linalg.matrix(
        [[form.inner(si, sj) for sj in span] for si in span])
    try:
        gram_inv = linalg.inverse(gram_span)
    except DegenerateFormError:
        raise FrameError("degenerate eigenspace: form restricted to span is singular")
    n = form.dim
    cols = []
    for e_j in linalg.identity(n):
        rhs = tuple(form.inner(si, e_j) for si in span)
        coeffs = linalg.mat_vec(gram_inv, rhs)
        proj = linalg.zero_vector(n)
        for c, s in zip(coeffs, span):
            proj = linalg.vec_add(proj, linalg.vec_scale(c, s))
        cols.append(linalg.vec_sub(linalg.vec_scale(2, proj), e_j))
    m = tuple(tuple(cols[j][i] for j in range(n)) for i in range(n))
    refl = EigenReflection(Isometry(form, m), span, description)
    assert linalg.mat_mul(m, m) == linalg.identity(n)
    for s in span:
        assert refl(s) == s
    return refl


def sigma0_pullback(frame) -> EigenReflection:
    """Pullback of fiberwise negation: +1 on span{[E], [O]}, -1 across it."""
    return reflection_through(frame.form, (frame.classE, frame.classO),
                              "fiberwise negation")


def sigma_i_pullback(frame, di: Vector) -> EigenReflection:
    """Pullback of P -> Q_i - P: +1 on span{[E], [O] + D_i}, -1 across it."""
    di = vector(di)
    if frame.form.norm2(di) != -2 or frame.form.inner(di, frame.classE) != 1:
        raise FrameError("not a section class (need D.D = -2, D.E = 1)")
    return reflection_through(
        frame.form, (frame.classE, linalg.vec_add(frame.classO, di)),
        "reflection through [O] + D_i")


def tau_pushforward(frame, i: int) -> Isometry:
    """Pushforward of translation-by-Q_i: the product sigma_i* . sigma_0*.

    Verified entrywise against the parabolic translation attached to v_i
    before returning; a mismatch on a valid frame would indicate an internal
    inconsistency and is surfaced loudly.
    """
    di = frame.sections[i]
    sigma_i = sigma_i_pullback(frame, di)
    sigma_0 = sigma0_pullback(frame)
    tau = translations.compose(sigma_i.isometry, sigma_0.isometry)
    expected = translations.translation(frame, frame.translations[i])
    if tau.matrix != expected.matrix:
        raise K3ConeError(
            f"pushforward of involution pair differs from translation {i}; "
            "frame data is internally inconsistent")
    return tau
