"""Shared fixtures and frame generators for the test suite."""

import random
from fractions import Fraction

import pytest

from k3cone import f4_frame, linalg
from k3cone.frame import FibrationFrame
from k3cone.lattice import IntersectionForm


@pytest.fixture(scope="session")
def f4():
    return f4_frame()


def random_unimodular(rng: random.Random, n: int):
    """Random integer matrix of determinant +-1 (elementary column ops)."""
    m = [[Fraction(int(i == j)) for j in range(n)] for i in range(n)]
    for _ in range(3 * n):
        op = rng.randrange(3)
        i, j = rng.sample(range(n), 2)
        if op == 0:
            c = rng.choice([-2, -1, 1, 2])
            for r in range(n):
                m[r][j] += c * m[r][i]
        elif op == 1:
            for r in range(n):
                m[r][i], m[r][j] = m[r][j], m[r][i]
        else:
            for r in range(n):
                m[r][i] = -m[r][i]
    return tuple(tuple(row) for row in m)


def random_valid_frame(seed: int, dim: int = 4,
                       scrambled: bool = True) -> FibrationFrame:
    """A valid frame on a random Lorentzian lattice of the given dimension.

    Construction: hyperbolic plane (E, P) plus a random negative definite
    block -(A^T A + I), with the standard section/ample classes and a full
    set of translations; optionally transported through a random unimodular
    change of basis so that nothing is axis-aligned.
    """
    rng = random.Random(seed)
    r = dim - 2
    a = [[rng.randint(-2, 2) for _ in range(r)] for _ in range(r)]
    neg = [[-(sum(a[k][i] * a[k][j] for k in range(r)) + (i == j))
            for j in range(r)] for i in range(r)]
    gram = [[Fraction(0)] * dim for _ in range(dim)]
    gram[0][1] = gram[1][0] = Fraction(1)
    for i in range(r):
        for j in range(r):
            gram[2 + i][2 + j] = Fraction(neg[i][j])
    form = IntersectionForm(linalg.matrix(gram))
    frame = FibrationFrame.create(
        form,
        classE=(1,) + (0,) * (dim - 1),
        classO=(-1, 1) + (0,) * r,
        ample=(2, 1) + (0,) * r,
        translations=[(0, 0) + tuple(int(k == i) for k in range(r))
                      for i in range(r)],
    )
    if scrambled:
        frame = frame.change_basis(random_unimodular(rng, dim))
    return frame


def random_orthogonal_to_fiber(frame: FibrationFrame, rng: random.Random):
    """Random rational v with v.E = 0 (boundary combination plus a*E)."""
    basis = frame.perp_basis()
    v = linalg.vec_scale(Fraction(rng.randint(-9, 9), rng.randint(1, 9)),
                         frame.classE)
    for b in basis:
        c = Fraction(rng.randint(-9, 9), rng.randint(1, 9))
        v = linalg.vec_add(v, linalg.vec_scale(c, b))
    return v


def random_boundary_class(frame: FibrationFrame, rng: random.Random):
    """Random rational null class A = P + aE*E + u on the ample side."""
    basis = frame.perp_basis()
    u = linalg.zero_vector(frame.form.dim)
    for b in basis:
        c = Fraction(rng.randint(-6, 6), rng.randint(1, 3))
        u = linalg.vec_add(u, linalg.vec_scale(c, b))
    ae = -frame.form.norm2(u) / 2
    return linalg.vec_add(
        linalg.vec_add(frame.classP, linalg.vec_scale(ae, frame.classE)), u)
