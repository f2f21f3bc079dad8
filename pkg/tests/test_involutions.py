import pytest

from conftest import random_valid_frame
from k3cone import f4_frame, linalg
from k3cone.errors import FrameError
from k3cone.involutions import (sigma0_pullback, sigma_i_pullback,
                                tau_pushforward)
from k3cone.translations import translation


def _eigenspace_ranks(form, m):
    n = form.dim
    ident = linalg.identity(n)
    minus = linalg.matrix([[m[i][j] - ident[i][j] for j in range(n)]
                           for i in range(n)])
    plus = linalg.matrix([[m[i][j] + ident[i][j] for j in range(n)]
                          for i in range(n)])
    # dim(+1 eigenspace) = n - rank(M - I), dim(-1) = n - rank(M + I)
    return n - linalg.rank(minus), n - linalg.rank(plus)


def test_sigma0_f4():
    frame = f4_frame()
    s0 = sigma0_pullback(frame)
    assert s0(frame.classE) == frame.classE
    assert s0(frame.classO) == frame.classO
    assert s0((0, 0, 1, 0)) == (0, 0, -1, 0)
    assert s0.isometry.preserves_form()
    assert linalg.mat_mul(s0.matrix, s0.matrix) == linalg.identity(4)


def test_sigma_i_fixes_its_span():
    frame = f4_frame()
    for d in frame.sections:
        si = sigma_i_pullback(frame, d)
        fixed = linalg.vec_add(frame.classO, d)
        assert si(fixed) == fixed
        assert si(frame.classE) == frame.classE
        assert si.isometry.preserves_form()


def test_sigma_i_rejects_non_section():
    frame = f4_frame()
    with pytest.raises(FrameError):
        sigma_i_pullback(frame, frame.classE)


def test_eigenspace_ranks():
    frame = f4_frame()
    refls = [sigma0_pullback(frame)]
    refls += [sigma_i_pullback(frame, d) for d in frame.sections]
    for refl in refls:
        plus, minus = _eigenspace_ranks(frame.form, refl.matrix)
        assert (plus, minus) == (2, frame.form.dim - 2)


def test_tau_equals_translation_f4():
    frame = f4_frame()
    for i in range(frame.rank):
        tau = tau_pushforward(frame, i)
        assert tau.matrix == translation(frame, frame.translations[i]).matrix


def test_tau_equals_translation_random_frames():
    for seed in range(6):
        frame = random_valid_frame(seed, dim=4 + seed % 3)
        for i in range(frame.rank):
            tau = tau_pushforward(frame, i)
            expected = translation(frame, frame.translations[i])
            assert tau.matrix == expected.matrix
            assert tau.preserves_form()
