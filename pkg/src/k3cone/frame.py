"""Fibration frames: the distinguished classes of an elliptic-fibered lattice.

A frame bundles the fiber class [E], the zero section [O], an ample class,
and a set of boundary translation vectors v_1..v_r.  The section translates
D_i are derived from the v_i.  P denotes [O] + [E] throughout: it is null,
meets [E] once, and anchors the boundary coordinate subspace

    V = { x : x.E = x.P = 0 },

on which the form is negative definite.
"""

from dataclasses import dataclass, field
from fractions import Fraction

from . import linalg, translations
from .errors import FrameError, InputError
from .lattice import IntersectionForm, signature
from .linalg import Matrix, Vector, vector


@dataclass(frozen=True)
class Decomposition:
    """Coordinates of A in the splitting A = aP*P + aE*E + perp."""

    aP: Fraction
    aE: Fraction
    perp: Vector


@dataclass(frozen=True)
class ValidationCheck:
    name: str
    status: str  # "pass" | "fail" | "warn" | "assumed"
    detail: str = ""


@dataclass(frozen=True)
class ValidationReport:
    checks: tuple

    @property
    def passed(self) -> bool:
        return all(c.status != "fail" for c in self.checks)

    def failures(self):
        return [c for c in self.checks if c.status == "fail"]

    def lines(self):
        return [f"{c.status:8s} {c.name}" + (f": {c.detail}" if c.detail else "")
                for c in self.checks]


@dataclass(frozen=True)
class FibrationFrame:
    """Distinguished data of an elliptic fibration on a Lorentzian lattice.

    The constructor only checks dimensions; `validate` reports on the
    geometric constraints so that broken frames can be diagnosed rather
    than rejected blindly.  Use `FibrationFrame.create` to build a frame
    with canonicalized translations and derived sections.
    """

    form: IntersectionForm
    classE: Vector
    classO: Vector
    ample: Vector
    translations: tuple = ()
    sections: tuple = ()

    def __post_init__(self):
        n = self.form.dim
        for name in ("classE", "classO", "ample"):
            v = vector(getattr(self, name))
            if len(v) != n:
                raise InputError(f"{name} has wrong dimension")
            object.__setattr__(self, name, v)
        object.__setattr__(self, "translations",
                           tuple(vector(v) for v in self.translations))
        object.__setattr__(self, "sections",
                           tuple(vector(v) for v in self.sections))

    @classmethod
    def create(cls, form, classE, classO, ample, translations):
        """Canonicalize translations into V and derive the sections."""
        proto = cls(form, classE, classO, ample)
        vs = tuple(proto.boundary_rep(v) for v in translations)
        frame = cls(form, classE, classO, ample, vs)
        sections = tuple(_section_translate(frame, v) for v in vs)
        return cls(form, classE, classO, ample, vs, sections)

    @property
    def classP(self) -> Vector:
        return linalg.vec_add(self.classO, self.classE)

    @property
    def rank(self) -> int:
        return len(self.translations)

    # -- splitting ---------------------------------------------------------

    def _split_matrix(self):
        e, p = self.classE, self.classP
        return linalg.matrix([
            [self.form.inner(p, e), self.form.norm2(e)],
            [self.form.norm2(p), self.form.inner(e, p)],
        ])

    def decompose(self, a: Vector) -> Decomposition:
        """Split A = aP*P + aE*E + perp with perp.E = perp.P = 0, exactly."""
        a = vector(a)
        rhs = (self.form.inner(a, self.classE), self.form.inner(a, self.classP))
        try:
            aP, aE = linalg.solve(self._split_matrix(), rhs)
        except Exception as exc:
            raise FrameError(f"degenerate (E, P) pair: {exc}") from exc
        perp = linalg.vec_sub(
            a, linalg.vec_add(linalg.vec_scale(aP, self.classP),
                              linalg.vec_scale(aE, self.classE)))
        assert self.form.inner(perp, self.classE) == 0
        assert self.form.inner(perp, self.classP) == 0
        return Decomposition(aP, aE, perp)

    def reassemble(self, d: Decomposition) -> Vector:
        return linalg.vec_add(
            linalg.vec_add(linalg.vec_scale(d.aP, self.classP),
                           linalg.vec_scale(d.aE, self.classE)),
            d.perp)

    def boundary_rep(self, v: Vector) -> Vector:
        """The V-component of v (requires v.E = 0); drops the E-direction."""
        v = vector(v)
        if self.form.inner(v, self.classE) != 0:
            raise InputError("vector is not orthogonal to the fiber class")
        ep = self.form.inner(self.classE, self.classP)
        shift = self.form.inner(v, self.classP) / ep
        return linalg.vec_sub(v, linalg.vec_scale(shift, self.classE))

    def vperp_rep(self, di: Vector) -> Vector:
        """Translation vector recovered from a section class:

            v = D_i - [O] - (2 + D_i.[O]) E.
        """
        di = vector(di)
        if self.form.norm2(di) != -2 or self.form.inner(di, self.classE) != 1:
            raise FrameError("not a section class (need D.D = -2, D.E = 1)")
        c = 2 + self.form.inner(di, self.classO)
        v = linalg.vec_sub(linalg.vec_sub(di, self.classO),
                           linalg.vec_scale(c, self.classE))
        if (self.form.inner(v, self.classE) != 0
                or self.form.inner(v, self.classP) != 0):
            raise FrameError("recovered vector is not in the boundary subspace")
        return v

    # -- boundary subspace -------------------------------------------------

    def perp_basis(self):
        """Deterministic exact basis of V = {x : x.E = x.P = 0}."""
        constraints = linalg.matrix([
            linalg.mat_vec(self.form.gram, self.classE),
            linalg.mat_vec(self.form.gram, self.classP),
        ])
        return linalg.nullspace(constraints)

    def change_basis(self, u: Matrix) -> "FibrationFrame":
        """Transport the frame through the basis change with matrix u.

        Columns of u are the old coordinates of the new basis vectors; the
        gram matrix becomes u^T J u and vectors pick up coordinates u^-1 x.
        """
        u = linalg.matrix(u)
        u_inv = linalg.inverse(u)
        new_form = IntersectionForm(
            linalg.mat_mul(linalg.transpose(u), linalg.mat_mul(self.form.gram, u)))
        mv = lambda x: linalg.mat_vec(u_inv, x)
        return FibrationFrame(new_form, mv(self.classE), mv(self.classO),
                              mv(self.ample),
                              tuple(mv(v) for v in self.translations),
                              tuple(mv(s) for s in self.sections))

    # -- validation --------------------------------------------------------

    def validate(self) -> ValidationReport:
        checks = []
        inner, norm2 = self.form.inner, self.form.norm2
        e, o, amp, p = self.classE, self.classO, self.ample, self.classP

        def check(name, ok, detail=""):
            checks.append(ValidationCheck(name, "pass" if ok else "fail", detail))

        pos, neg, zero = signature(self.form)
        check("lorentzian signature", (pos, neg, zero) == (1, self.form.dim - 1, 0),
              f"signature {(pos, neg, zero)}")
        check("fiber class null", norm2(e) == 0, f"E.E = {norm2(e)}")
        check("fiber meets ample", inner(e, amp) > 0, f"E.ample = {inner(e, amp)}")
        check("section self-intersection", norm2(o) == -2, f"O.O = {norm2(o)}")
        check("section meets fiber once", inner(o, e) == 1, f"O.E = {inner(o, e)}")
        check("P null", norm2(p) == 0, f"P.P = {norm2(p)}")
        check("P meets fiber once", inner(p, e) == 1, f"P.E = {inner(p, e)}")
        check("ample positivity", norm2(amp) > 0, f"ample.ample = {norm2(amp)}")
        check("ample vs zero section", inner(amp, o) > 0,
              f"ample.O = {inner(amp, o)}")

        for i, v in enumerate(self.translations):
            ok = inner(v, e) == 0 and inner(v, p) == 0
            check(f"translation {i} in boundary subspace", ok)
        if self.translations:
            check("rank deficiency",
                  linalg.rank(linalg.matrix(self.translations)) == self.rank,
                  f"{self.rank} translation(s)")
            status = "pass" if self.rank == self.form.dim - 2 else "warn"
            checks.append(ValidationCheck(
                "maximal translation rank", status,
                f"rank {self.rank} of maximal {self.form.dim - 2}"))

        for i, d in enumerate(self.sections):
            check(f"section class {i} self-intersection", norm2(d) == -2,
                  f"D.D = {norm2(d)}")
            check(f"section class {i} meets fiber once", inner(d, e) == 1)
            check(f"ample vs section class {i}", inner(amp, d) > 0,
                  f"ample.D = {inner(amp, d)}")
            if inner(d, o) < 0:
                checks.append(ValidationCheck(
                    f"section class {i} admissibility", "warn",
                    f"D.O = {inner(d, o)} < 0"))

        checks.append(ValidationCheck(
            "automorphism-group realization", "assumed",
            "whether the translations come from automorphisms is not "
            "decidable from lattice data"))
        return ValidationReport(tuple(checks))


def _section_translate(frame: FibrationFrame, v: Vector) -> Vector:
    return translations.section_translate(frame, v)


def f4_frame() -> FibrationFrame:
    """The built-in rank-2 reference frame on basis (E, P, f1, f2).

    Gram [[0,1,0,0],[1,0,0,0],[0,0,-4,0],[0,0,0,-4]], zero section P - E,
    translations f1 and f2, ample 2E + P.  All frame invariants hold with
    disjoint section translates (D_i.O = 0).
    """
    form = IntersectionForm(linalg.matrix(
        [[0, 1, 0, 0], [1, 0, 0, 0], [0, 0, -4, 0], [0, 0, 0, -4]]))
    return FibrationFrame.create(
        form,
        classE=(1, 0, 0, 0),
        classO=(-1, 1, 0, 0),
        ample=(2, 1, 0, 0),
        translations=((0, 0, 1, 0), (0, 0, 0, 1)),
    )
