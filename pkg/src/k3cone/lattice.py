"""Intersection forms on Picard lattices: the Lorentz product and friends.

All arithmetic is exact rational.  Floating point never enters this module;
real-valued geometry lives in `models`.
"""

from dataclasses import dataclass
from fractions import Fraction

from . import linalg
from .errors import DegenerateFormError, InputError
from .linalg import Matrix, Vector, matrix, vector


@dataclass(frozen=True)
class IntersectionForm:
    """A symmetric rational bilinear form (the intersection pairing).

    Symmetry is enforced at construction.  Lorentzian signature (1, dim-1)
    is a property of geometric inputs and is enforced by the config loader
    and by `FibrationFrame`, not by this constructor: utility code (dual
    bases, inertia counts) is useful on arbitrary symmetric forms.
    """

    gram: Matrix

    def __post_init__(self):
        g = matrix(self.gram)
        if any(len(r) != len(g) for r in g):
            raise InputError("gram matrix must be square")
        if g != linalg.transpose(g):
            raise InputError("gram matrix must be symmetric")
        object.__setattr__(self, "gram", g)

    @property
    def dim(self) -> int:
        return len(self.gram)

    def inner(self, u: Vector, v: Vector) -> Fraction:
        """The Lorentz (intersection) product u . v, exact."""
        u, v = vector(u), vector(v)
        if len(u) != self.dim or len(v) != self.dim:
            raise InputError("vector dimension does not match the form")
        total = Fraction(0)
        for ui, row in zip(u, self.gram):
            if not ui:
                continue
            for g, vj in zip(row, v):
                if g and vj:
                    total += ui * g * vj
        return total

    def norm2(self, v: Vector) -> Fraction:
        return self.inner(v, v)

    def is_lorentzian(self) -> bool:
        pos, neg, zero = signature(self)
        return pos == 1 and zero == 0 and neg == self.dim - 1

    def require_lorentzian(self):
        if not self.is_lorentzian():
            raise InputError(
                f"form has signature {signature(self)}, expected (1, {self.dim - 1}, 0)")
        return self


def congruent_diagonalization(form: IntersectionForm):
    """Symmetric congruence diagonalization over the rationals.

    Returns (basis, diag) with basis^T . gram . basis = diag(diag), computed
    with exact pivoting in input-basis order (deterministic).  A zero diagonal
    pivot is repaired by preferring a later nonzero diagonal entry, falling
    back to the row/column addition trick when the whole diagonal vanishes.
    """
    n = form.dim
    a = [list(r) for r in form.gram]
    basis = [list(r) for r in linalg.identity(n)]

    def add_col(i, j, f):
        # column i += f * column j (and the symmetric row op on a)
        for r in range(n):
            a[r][i] += f * a[r][j]
        for r in range(n):
            a[i][r] += f * a[j][r]
        for r in range(n):
            basis[r][i] += f * basis[r][j]

    def swap_cols(i, j):
        for r in range(n):
            a[r][i], a[r][j] = a[r][j], a[r][i]
        a[i], a[j] = a[j], a[i]
        for r in range(n):
            basis[r][i], basis[r][j] = basis[r][j], basis[r][i]

    for i in range(n):
        if a[i][i] == 0:
            j = next((k for k in range(i + 1, n) if a[k][k] != 0), None)
            if j is not None:
                swap_cols(i, j)
            else:
                j = next((k for k in range(i + 1, n) if a[i][k] != 0), None)
                if j is None:
                    continue  # whole trailing row is zero: radical direction
                add_col(i, j, Fraction(1))
        for j in range(i + 1, n):
            if a[i][j] != 0:
                add_col(j, i, -a[i][j] / a[i][i])

    diag = tuple(a[i][i] for i in range(n))
    return tuple(tuple(r) for r in basis), diag


def signature(form: IntersectionForm):
    """Exact inertia (pos, neg, zero) by rational congruence diagonalization."""
    _, diag = congruent_diagonalization(form)
    pos = sum(1 for d in diag if d > 0)
    neg = sum(1 for d in diag if d < 0)
    return pos, neg, len(diag) - pos - neg


def dual_basis(form: IntersectionForm):
    """Vectors D_j* with e_i . D_j* = delta_ij, i.e. columns of gram^-1."""
    try:
        inv = linalg.inverse(form.gram)
    except DegenerateFormError:
        raise DegenerateFormError("gram matrix is singular; no dual basis")
    duals = tuple(tuple(inv[i][j] for i in range(form.dim)) for j in range(form.dim))
    for i in range(form.dim):
        for j in range(form.dim):
            e_i = tuple(Fraction(int(i == k)) for k in range(form.dim))
            assert form.inner(e_i, duals[j]) == (1 if i == j else 0)
    return duals


def in_light_cone(form: IntersectionForm, x: Vector, ample: Vector) -> bool:
    """Membership in the open light cone on the ample side."""
    if form.norm2(ample) <= 0:
        raise InputError("reference vector must have positive self-product")
    return form.norm2(x) > 0 and form.inner(x, ample) > 0


def form_from_dict(doc: dict) -> IntersectionForm:
    """Ingest {"gram": [[...]], "labels": [...]} with ints or 'p/q' strings.

    Rejects non-Lorentzian forms: every accepted lattice has signature
    (1, dim-1).
    """
    if "gram" not in doc:
        raise InputError("lattice config is missing 'gram'")
    form = IntersectionForm(matrix(doc["gram"]))
    labels = doc.get("labels")
    if labels is not None and len(labels) != form.dim:
        raise InputError("label count does not match gram dimension")
    return form.require_lorentzian()
