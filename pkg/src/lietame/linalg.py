"""Exact linear algebra over the rationals.

Matrices are plain lists of rows; every entry is coerced to
:class:`fractions.Fraction` on the way in, so callers may pass ints.
Subspaces are kept in canonical form (the nonzero rows of their reduced
row echelon form), which turns subspace equality into tuple equality.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from gmpy2 import mpq

Vector = list  # list[Fraction]
Matrix = list  # list[list[Fraction]]


class DimensionMismatch(ValueError):
    pass


def to_fraction(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, str):
        return Fraction(x)
    if isinstance(x, float):
        raise TypeError("floats are not accepted in exact arithmetic")
    return Fraction(x)


def as_matrix(rows: Iterable[Sequence]) -> Matrix:
    m = [[to_fraction(x) for x in row] for row in rows]
    if m and any(len(r) != len(m[0]) for r in m):
        raise DimensionMismatch("ragged matrix")
    return m


def zeros(rows: int, cols: int) -> Matrix:
    return [[Fraction(0)] * cols for _ in range(rows)]


def identity(n: int) -> Matrix:
    m = zeros(n, n)
    for i in range(n):
        m[i][i] = Fraction(1)
    return m


def transpose(m: Sequence[Sequence[Fraction]], cols: int | None = None) -> Matrix:
    if not m:
        return [[] for _ in range(cols or 0)]
    return [list(col) for col in zip(*m)]


def matmul(a: Sequence[Sequence[Fraction]], b: Sequence[Sequence[Fraction]]) -> Matrix:
    if a and b and len(a[0]) != len(b):
        raise DimensionMismatch(f"cannot multiply {len(a)}x{len(a[0])} by {len(b)}x{len(b[0])}")
    bt = transpose(b)
    out = []
    for row in a:
        nz = [(k, x) for k, x in enumerate(row) if x]
        out.append([sum((x * col[k] for k, x in nz), Fraction(0)) for col in bt])
    return out


def matvec(a: Sequence[Sequence[Fraction]], v: Sequence[Fraction]) -> Vector:
    if a and len(a[0]) != len(v):
        raise DimensionMismatch("matrix/vector size mismatch")
    return [sum((x * y for x, y in zip(row, v) if x), Fraction(0)) for row in a]


def is_zero_vector(v: Sequence[Fraction]) -> bool:
    return not any(v)


def rref(m: Sequence[Sequence]) -> tuple[Matrix, list[int], int]:
    """Reduced row echelon form of ``m``.

    Returns ``(reduced, pivots, rank)``. ``reduced`` keeps the shape of ``m``
    (zero rows at the bottom).
    """
    if not m:
        return [], [], 0
    # eliminate in gmpy2 rationals (much faster), hand back Fractions
    a = [[mpq(to_fraction(x)) for x in row] for row in m]
    rows, cols = len(a), len(a[0])
    pivots: list[int] = []
    r = 0
    for c in range(cols):
        if r == rows:
            break
        p = next((i for i in range(r, rows) if a[i][c]), None)
        if p is None:
            continue
        a[r], a[p] = a[p], a[r]
        piv = a[r][c]
        if piv != 1:
            a[r] = [x / piv for x in a[r]]
        prow = a[r]
        nz = [j for j in range(c, cols) if prow[j]]
        for i in range(rows):
            if i != r:
                f = a[i][c]
                if f:
                    row = a[i]
                    for j in nz:
                        row[j] -= f * prow[j]
        pivots.append(c)
        r += 1
    out = [[Fraction(int(x.numerator), int(x.denominator)) if x else _ZERO for x in row] for row in a]
    return out, pivots, len(pivots)


_ZERO = Fraction(0)


def rank(m: Sequence[Sequence]) -> int:
    return rref(m)[2]


def kernel_basis(m: Sequence[Sequence], cols: int | None = None) -> list[Vector]:
    """Basis of the right null space ``{v : m v = 0}``.

    ``cols`` is needed only when ``m`` has no rows.
    """
    if not m:
        n = cols or 0
        return [[Fraction(int(i == j)) for i in range(n)] for j in range(n)]
    reduced, pivots, r = rref(m)
    n = len(reduced[0])
    pivot_set = set(pivots)
    basis = []
    for free in range(n):
        if free in pivot_set:
            continue
        v = [Fraction(0)] * n
        v[free] = Fraction(1)
        for row, pc in zip(reduced, pivots):
            v[pc] = -row[free]
        basis.append(v)
    return basis


def solve(a: Sequence[Sequence], b: Sequence) -> Vector | None:
    """One solution of ``a x = b``, or ``None`` if ``b`` is outside the column space."""
    a = as_matrix(a)
    b = [to_fraction(x) for x in b]
    if len(a) != len(b):
        raise DimensionMismatch(f"{len(a)} equations but right-hand side of length {len(b)}")
    if not a:
        return []
    n = len(a[0])
    reduced, pivots, r = rref([row + [y] for row, y in zip(a, b)])
    if pivots and pivots[-1] == n:
        return None
    x = [Fraction(0)] * n
    for row, pc in zip(reduced, pivots):
        x[pc] = row[n]
    return x


def inverse(m: Sequence[Sequence]) -> Matrix:
    a = as_matrix(m)
    n = len(a)
    reduced, pivots, r = rref([row + idr for row, idr in zip(a, identity(n))])
    if r < n or pivots[n - 1] != n - 1:
        raise ValueError("matrix is singular")
    return [row[n:] for row in reduced]


def determinant(m: Sequence[Sequence]) -> Fraction:
    a = as_matrix(m)
    n = len(a)
    det = Fraction(1)
    for c in range(n):
        p = next((i for i in range(c, n) if a[i][c]), None)
        if p is None:
            return Fraction(0)
        if p != c:
            a[c], a[p] = a[p], a[c]
            det = -det
        det *= a[c][c]
        for i in range(c + 1, n):
            f = a[i][c] / a[c][c]
            if f:
                a[i] = [x - f * y for x, y in zip(a[i], a[c])]
    return det


@dataclass(frozen=True)
class Subspace:
    """A subspace of Q^ambient_dim, stored as its canonical rref basis."""

    ambient_dim: int
    basis: tuple[tuple[Fraction, ...], ...]

    @classmethod
    def span(cls, vectors: Iterable[Sequence], ambient_dim: int) -> "Subspace":
        vecs = as_matrix(vectors)
        if any(len(v) != ambient_dim for v in vecs):
            raise DimensionMismatch(f"vectors do not live in dimension {ambient_dim}")
        reduced, _, r = rref(vecs)
        return cls(ambient_dim, tuple(tuple(row) for row in reduced[:r]))

    @classmethod
    def zero(cls, ambient_dim: int) -> "Subspace":
        return cls(ambient_dim, ())

    @classmethod
    def full(cls, ambient_dim: int) -> "Subspace":
        return cls.span(identity(ambient_dim), ambient_dim)

    @property
    def dim(self) -> int:
        return len(self.basis)

    def vectors(self) -> list[Vector]:
        return [list(v) for v in self.basis]

    def __contains__(self, v) -> bool:
        return subspace_contains(self, Subspace.span([v], self.ambient_dim))

    def coordinates(self, v: Sequence) -> Vector:
        """Coordinates of ``v`` in the stored basis; raises if ``v`` is outside."""
        if not self.basis:
            x = [] if is_zero_vector([to_fraction(t) for t in v]) else None
        else:
            x = solve(transpose(self.basis), v)
        if x is None:
            raise ValueError("vector is not in the subspace")
        return x

    def __repr__(self) -> str:
        rows = ", ".join("(" + ", ".join(str(x) for x in row) + ")" for row in self.basis)
        return f"Subspace(dim={self.dim}/{self.ambient_dim}: {rows})"


def _check_ambient(*spaces: Subspace) -> int:
    dims = {s.ambient_dim for s in spaces}
    if len(dims) != 1:
        raise DimensionMismatch(f"incompatible ambient dimensions {sorted(dims)}")
    return dims.pop()


def subspace_sum(u: Subspace, w: Subspace) -> Subspace:
    n = _check_ambient(u, w)
    return Subspace.span(list(u.basis) + list(w.basis), n)


def subspace_intersect(u: Subspace, w: Subspace) -> Subspace:
    n = _check_ambient(u, w)
    if not u.dim or not w.dim:
        return Subspace.zero(n)
    # x = sum a_i u_i = sum b_j w_j  <=>  [U^T | -W^T] (a, b) = 0
    system = [
        [u.basis[i][k] for i in range(u.dim)] + [-w.basis[j][k] for j in range(w.dim)]
        for k in range(n)
    ]
    vecs = []
    for sol in kernel_basis(system):
        a = sol[: u.dim]
        vecs.append([sum((a[i] * u.basis[i][k] for i in range(u.dim)), Fraction(0)) for k in range(n)])
    return Subspace.span(vecs, n)


def subspace_contains(big: Subspace, small: Subspace) -> bool:
    _check_ambient(big, small)
    return subspace_sum(big, small).dim == big.dim


def complement_basis(sub: Subspace, within: Subspace | None = None) -> list[Vector]:
    """Vectors extending ``sub``'s basis to a basis of ``within`` (default: everything).

    Candidates are tried in order (the rref rows of ``within``, or the standard
    basis), keeping each one that raises the rank, so the choice is deterministic.
    """
    n = sub.ambient_dim
    candidates = within.vectors() if within is not None else identity(n)
    current = sub.vectors()
    r = len(current)
    out = []
    for c in candidates:
        if rank(current + [c]) > r:
            current.append(list(c))
            out.append(list(c))
            r += 1
    return out
