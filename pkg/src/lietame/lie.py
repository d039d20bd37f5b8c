"""Lie algebras given by structure constants over Q.

The basis is ``e_0 .. e_{n-1}``; ``[e_i, e_j] = sum_k c_ij^k e_k``.  Subspaces
(subalgebras, ideals, the radical ...) are :class:`~lietame.linalg.Subspace`
objects in the coordinates of that basis.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Mapping, Sequence

import sympy
from gmpy2 import mpq

from .linalg import (
    DimensionMismatch,
    Subspace,
    complement_basis,
    identity,
    inverse,
    kernel_basis,
    matmul,
    solve,
    subspace_contains,
    subspace_intersect,
    subspace_sum,
    to_fraction,
    transpose,
)


class LieError(ValueError):
    pass


class IndexOutOfRange(LieError):
    pass


class JacobiViolation(LieError):
    def __init__(self, i: int, j: int, k: int, residual: Sequence[Fraction]):
        self.triple = (i, j, k)
        self.residual = list(residual)
        super().__init__(f"Jacobi identity fails on basis triple {(i, j, k)}: residual {[str(x) for x in residual]}")


class NotASubalgebra(LieError):
    pass


class NotSemisimple(LieError):
    pass


class NonSplit(LieError):
    """A decomposition would need eigenvalues outside Q."""


class NotComplementary(LieError):
    pass


@dataclass(frozen=True)
class StructureConstants:
    """Sparse bracket table, stored for ``i < j`` only.

    ``table[(i, j)]`` is a tuple of ``(k, coefficient)`` with nonzero coefficients.
    """

    dim: int
    basis_names: tuple[str, ...]
    table: Mapping[tuple[int, int], tuple[tuple[int, Fraction], ...]] = field(default_factory=dict)

    @classmethod
    def from_brackets(cls, names: Sequence[str], brackets: Mapping[tuple[int, int], Mapping[int, object]]):
        """Build from ``{(i, j): {k: c}}``; pairs with ``i > j`` are flipped with a sign.

        Raises :class:`LieError` if a pair is given twice inconsistently or
        ``[e_i, e_i]`` is nonzero.
        """
        n = len(names)
        table: dict[tuple[int, int], dict[int, Fraction]] = {}
        for (i, j), result in brackets.items():
            for idx in (i, j, *result):
                if not 0 <= idx < n:
                    raise IndexOutOfRange(f"basis index {idx} outside 0..{n - 1}")
            coeffs = {k: to_fraction(c) for k, c in result.items() if to_fraction(c) != 0}
            if i == j:
                if coeffs:
                    raise LieError(f"[{names[i]}, {names[i]}] must vanish")
                continue
            if i > j:
                i, j = j, i
                coeffs = {k: -c for k, c in coeffs.items()}
            if (i, j) in table and table[(i, j)] != coeffs:
                raise LieError(f"conflicting values for [{names[i]}, {names[j]}]")
            table[(i, j)] = coeffs
        frozen = {key: tuple(sorted(v.items())) for key, v in sorted(table.items()) if v}
        return cls(n, tuple(names), frozen)


class LieAlgebra:
    """A validated Lie algebra. Use :func:`validate` (or the helpers below) to build one."""

    def __init__(self, sc: StructureConstants, *, _checked: bool = False):
        if not _checked:
            raise TypeError("construct LieAlgebra through validate()")
        self.sc = sc
        n = sc.dim
        # dense lookup: _c[i][j] is a tuple of (k, coeff), antisymmetric
        self._c: list[list[tuple]] = [[() for _ in range(n)] for _ in range(n)]
        for (i, j), entries in sc.table.items():
            self._c[i][j] = entries
            self._c[j][i] = tuple((k, -c) for k, c in entries)
        # same table in gmpy2 rationals for the hot bracket loop
        self._cq = [[tuple((k, mpq(c)) for k, c in cell) for cell in row] for row in self._c]
        self._ad_basis: list | None = None
        self._killing: list | None = None

    @property
    def dim(self) -> int:
        return self.sc.dim

    @property
    def names(self) -> tuple[str, ...]:
        return self.sc.basis_names

    def basis_bracket(self, i: int, j: int) -> list[Fraction]:
        v = [Fraction(0)] * self.dim
        for k, c in self._c[i][j]:
            v[k] = c
        return v

    def bracket(self, x: Sequence, y: Sequence) -> list[Fraction]:
        n = self.dim
        if len(x) != n or len(y) != n:
            raise DimensionMismatch(f"bracket expects vectors of length {n}")
        out = [mpq(0)] * n
        xs = [(i, mpq(to_fraction(a))) for i, a in enumerate(x) if a]
        ys = [(j, mpq(to_fraction(b))) for j, b in enumerate(y) if b]
        for i, a in xs:
            row = self._cq[i]
            for j, b in ys:
                if i == j:
                    continue
                ab = a * b
                for k, c in row[j]:
                    out[k] += ab * c
        return [Fraction(int(v.numerator), int(v.denominator)) if v else _ZERO for v in out]

    def ad(self, x: Sequence) -> list[list[Fraction]]:
        """Matrix of ``ad x`` acting on column vectors."""
        n = self.dim
        cols = [self.bracket(x, _unit(j, n)) for j in range(n)]
        return transpose(cols) if n else []

    def ad_basis(self) -> list[list[list[Fraction]]]:
        if self._ad_basis is None:
            n = self.dim
            mats = []
            for i in range(n):
                m = [[Fraction(0)] * n for _ in range(n)]
                for j in range(n):
                    for k, c in self._c[i][j]:
                        m[k][j] = c
                mats.append(m)
            self._ad_basis = mats
        return self._ad_basis

    def __repr__(self) -> str:
        return f"LieAlgebra(dim={self.dim}, basis={list(self.names)})"


_ZERO = Fraction(0)


def _unit(i: int, n: int) -> list[Fraction]:
    v = [Fraction(0)] * n
    v[i] = Fraction(1)
    return v


def validate(sc: StructureConstants) -> LieAlgebra:
    n = sc.dim
    if len(sc.basis_names) != n:
        raise LieError("basis_names length differs from dim")
    for (i, j), entries in sc.table.items():
        if not (0 <= i < j < n):
            raise IndexOutOfRange(f"bad table key {(i, j)} for dimension {n}")
        for k, c in entries:
            if not 0 <= k < n:
                raise IndexOutOfRange(f"result index {k} outside 0..{n - 1}")
    alg = LieAlgebra(sc, _checked=True)
    for i in range(n):
        for j in range(i + 1, n):
            for k in range(j + 1, n):
                r = _jacobi_residual(alg, i, j, k)
                if any(r):
                    raise JacobiViolation(i, j, k, r)
    return alg


def _jacobi_residual(alg: LieAlgebra, i: int, j: int, k: int) -> list[Fraction]:
    n = alg.dim
    ek = _unit(k, n)
    ei = _unit(i, n)
    ej = _unit(j, n)
    a = alg.bracket(alg.basis_bracket(i, j), ek)
    b = alg.bracket(alg.basis_bracket(j, k), ei)
    c = alg.bracket(alg.basis_bracket(k, i), ej)
    return [x + y + z for x, y, z in zip(a, b, c)]


def from_table(names: Sequence[str], brackets: Mapping[tuple[int, int], Mapping[int, object]]) -> LieAlgebra:
    return validate(StructureConstants.from_brackets(names, brackets))


def abelian(n: int, names: Sequence[str] | None = None) -> LieAlgebra:
    return from_table(list(names) if names else [f"a{i}" for i in range(n)], {})


def direct_sum(a: LieAlgebra, b: LieAlgebra) -> LieAlgebra:
    """Block direct sum; duplicate basis names get a ``'`` suffix."""
    names = list(a.names)
    seen = set(names)
    for nm in b.names:
        while nm in seen:
            nm += "'"
        names.append(nm)
        seen.add(nm)
    off = a.dim
    table = {key: dict(v) for key, v in a.sc.table.items()}
    for (i, j), entries in b.sc.table.items():
        table[(i + off, j + off)] = {k + off: c for k, c in entries}
    return from_table(names, table)


def change_basis(alg: LieAlgebra, p: Sequence[Sequence]) -> LieAlgebra:
    """The same algebra in the basis whose i-th vector is row ``i`` of ``p``.

    A subspace with rows ``u`` in old coordinates has rows ``u p^{-1}`` in the new ones.
    """
    n = alg.dim
    pinv = inverse(p)
    rows = [[to_fraction(x) for x in r] for r in p]
    table = {}
    for i in range(n):
        for j in range(i + 1, n):
            v = alg.bracket(rows[i], rows[j])
            coords = matmul([v], pinv)[0] if n else []
            table[(i, j)] = {k: c for k, c in enumerate(coords) if c}
    return from_table([f"b{i}" for i in range(n)], table)


def transform_subspace(sub: Subspace, p: Sequence[Sequence]) -> Subspace:
    """Express a subspace given in old coordinates in the basis of :func:`change_basis`."""
    if not sub.dim:
        return sub
    return Subspace.span(matmul(sub.vectors(), inverse(p)), sub.ambient_dim)


def killing_form(alg: LieAlgebra) -> list[list[Fraction]]:
    if alg._killing is None:
        ads = alg.ad_basis()
        n = alg.dim
        k = [[Fraction(0)] * n for _ in range(n)]
        for a in range(n):
            for b in range(a, n):
                A, B = ads[a], ads[b]
                t = sum((A[r][s] * B[s][r] for r in range(n) for s in range(n) if A[r][s]), Fraction(0))
                k[a][b] = k[b][a] = t
        alg._killing = k
    return [row[:] for row in alg._killing]


def killing(alg: LieAlgebra, x: Sequence, y: Sequence) -> Fraction:
    k = killing_form(alg)
    return sum((to_fraction(a) * k[i][j] * to_fraction(b)
                for i, a in enumerate(x) if a for j, b in enumerate(y) if b), Fraction(0))


def full(alg: LieAlgebra) -> Subspace:
    return Subspace.full(alg.dim)


def bracket_spaces(alg: LieAlgebra, u: Subspace, w: Subspace) -> Subspace:
    """The span of ``[u, w]``."""
    vecs = [alg.bracket(x, y) for x in u.basis for y in w.basis]
    return Subspace.span(vecs, alg.dim)


def is_subalgebra(alg: LieAlgebra, v: Subspace) -> bool:
    return subspace_contains(v, bracket_spaces(alg, v, v))


def is_ideal(alg: LieAlgebra, v: Subspace) -> bool:
    return subspace_contains(v, bracket_spaces(alg, full(alg), v))


def derived_subalgebra(alg: LieAlgebra, v: Subspace | None = None) -> Subspace:
    v = full(alg) if v is None else v
    d = bracket_spaces(alg, v, v)
    if not subspace_contains(v, d):
        raise NotASubalgebra("subspace is not closed under the bracket")
    return d


def derived_series(alg: LieAlgebra, v: Subspace | None = None) -> list[Subspace]:
    """``[v, [v,v], ...]`` until it stabilises (last entry is the stable term)."""
    series = [full(alg) if v is None else v]
    while True:
        nxt = derived_subalgebra(alg, series[-1])
        if nxt.dim == series[-1].dim:
            return series
        series.append(nxt)


def is_solvable(alg: LieAlgebra, v: Subspace | None = None) -> bool:
    return derived_series(alg, v)[-1].dim == 0


def radical(alg: LieAlgebra) -> Subspace:
    """Solvable radical: the Killing-orthogonal complement of ``[L, L]`` (char 0)."""
    n = alg.dim
    d = derived_subalgebra(alg)
    if not d.dim:
        return full(alg)
    k = killing_form(alg)
    eqs = matmul([list(r) for r in d.basis], k)
    return Subspace.span(kernel_basis(eqs, n), n)


def center(alg: LieAlgebra) -> Subspace:
    n = alg.dim
    # [x, e_i] = 0 for all i:  rows of ad(e_i) with a sign, stacked
    eqs = [row for m in alg.ad_basis() for row in m]
    return Subspace.span(kernel_basis(eqs, n), n)


def killing_restricted(alg: LieAlgebra, v: Subspace) -> list[list[Fraction]]:
    k = killing_form(alg)
    b = [list(r) for r in v.basis]
    return matmul(matmul(b, k), transpose(b, len(k))) if b else []


def orthogonal_complement(alg: LieAlgebra, part: Subspace, within: Subspace) -> Subspace:
    """``{x in within : kappa(x, part) = 0}``."""
    n = alg.dim
    if not within.dim:
        return within
    k = killing_form(alg)
    pk = matmul([list(r) for r in part.basis], k) if part.dim else []
    w = [list(r) for r in within.basis]
    # x = sum a_i w_i, need pk @ x = 0
    eqs = matmul(pk, transpose(w)) if pk else []
    coeffs = kernel_basis(eqs, within.dim)
    vecs = [[sum((a * w[i][c] for i, a in enumerate(co) if a), Fraction(0)) for c in range(n)] for co in coeffs]
    return Subspace.span(vecs, n)


def is_semisimple(alg: LieAlgebra) -> bool:
    return radical(alg).dim == 0


def centroid_basis(alg: LieAlgebra) -> list[list[list[Fraction]]]:
    """Basis of the linear maps commuting with every ``ad e_i``."""
    n = alg.dim
    basis: list[list[list[Fraction]]] | None = None
    for a in alg.ad_basis():
        if basis is None:
            # T A - A T = 0 as n^2 equations in the n^2 entries of T (index r*n+c)
            eqs = []
            for r in range(n):
                for c in range(n):
                    row = [Fraction(0)] * (n * n)
                    for s in range(n):
                        if a[s][c]:
                            row[r * n + s] += a[s][c]
                        if a[r][s]:
                            row[s * n + c] -= a[r][s]
                    eqs.append(row)
            basis = [[sol[r * n:(r + 1) * n] for r in range(n)] for sol in kernel_basis(eqs, n * n)]
        else:
            images = []
            for t in basis:
                ta, at = matmul(t, a), matmul(a, t)
                images.append([x - y for r1, r2 in zip(ta, at) for x, y in zip(r1, r2)])
            coeffs = kernel_basis(transpose(images), len(basis))
            basis = [_combine(basis, co) for co in coeffs]
        if len(basis) <= 1:
            break
    if basis is None:
        return [identity(n)]
    return basis


def _combine(mats, coeffs):
    n = len(mats[0])
    out = [[Fraction(0)] * n for _ in range(n)]
    for m, c in zip(mats, coeffs):
        if c:
            for r in range(n):
                for s in range(n):
                    if m[r][s]:
                        out[r][s] += c * m[r][s]
    return out


def simple_ideal_decomposition(alg: LieAlgebra) -> list[Subspace]:
    """Split a semisimple algebra into its simple ideals (split case only).

    A generic element of the centroid acts by one scalar on each simple
    ideal, so its eigenspaces are the ideals. Irrational eigenvalues mean the
    algebra is only simple over Q, not absolutely simple; we raise NonSplit.
    """
    n = alg.dim
    if n == 0:
        return []
    if not is_semisimple(alg):
        raise NotSemisimple("simple ideal decomposition needs a semisimple algebra")
    cent = centroid_basis(alg)
    d = len(cent)
    if d == 1:
        return [full(alg)]
    x = sympy.Symbol("x")
    for attempt in range(1, 6):
        t = _combine(cent, [Fraction((attempt * (i + 1)) ** 2 + i) for i in range(d)])
        minpoly = _minimal_polynomial(t)
        factors = sympy.Poly(minpoly[::-1], x, domain="QQ").factor_list()[1]
        if any(f.degree() > 1 for f, _ in factors):
            continue
        if len(factors) < d:
            continue  # repeated eigenvalue: not generic, try another combination
        ideals = []
        for f, _ in factors:
            c = f.all_coeffs()
            root = -Fraction(int(c[1].p), int(c[1].q)) / Fraction(int(c[0].p), int(c[0].q))
            shifted = [[t[r][s] - (root if r == s else 0) for s in range(n)] for r in range(n)]
            ideals.append(Subspace.span(kernel_basis(shifted, n), n))
        return sorted(ideals, key=lambda s: s.basis, reverse=True)
    raise NonSplit("centroid has no element with rational, distinct eigenvalues")


def _minimal_polynomial(t) -> list[Fraction]:
    """Coefficients (constant term first) of the monic minimal polynomial of ``t``."""
    n = len(t)
    powers = [[Fraction(int(r == s)) for r in range(n) for s in range(n)]]
    cur = identity(n)
    while True:
        cur = matmul(cur, t)
        flat = [x for row in cur for x in row]
        sol = solve(transpose(powers), flat)
        if sol is not None:
            return [-c for c in sol] + [Fraction(1)]
        powers.append(flat)


def quotient_basis(alg: LieAlgebra, r: Subspace) -> tuple[Subspace, list[list[Fraction]]]:
    """``([R, R], q)`` where ``q`` extends a basis of ``[R, R]`` to one of ``R``."""
    rr = bracket_spaces(alg, r, r)
    return rr, complement_basis(rr, r)


def quotient_module_action(alg: LieAlgebra, levi: Subspace, r: Subspace) -> tuple[int, list[list[list[Fraction]]]]:
    """Matrices of the levi basis acting on ``R / [R, R]`` (coordinates in :func:`quotient_basis`)."""
    if levi.dim + r.dim != alg.dim or subspace_intersect(levi, r).dim:
        raise NotComplementary("levi part and radical must be complementary")
    rr, q = quotient_basis(alg, r)
    m = len(q)
    frame = [list(v) for v in rr.basis] + q
    frame_t = transpose(frame) if frame else []
    mats = []
    for s in levi.basis:
        cols = []
        for v in q:
            coords = solve(frame_t, alg.bracket(s, v))
            if coords is None:
                raise LieError("radical is not an ideal")
            cols.append(coords[rr.dim:])
        mats.append(transpose(cols) if m else [])
    return m, mats


def ideal_generated(alg: LieAlgebra, vectors: Iterable[Sequence]) -> Subspace:
    sub = Subspace.span(list(vectors), alg.dim)
    whole = full(alg)
    while True:
        nxt = subspace_sum(sub, bracket_spaces(alg, whole, sub))
        if nxt.dim == sub.dim:
            return sub
        sub = nxt


__all__ = [
    "LieAlgebra",
    "StructureConstants",
    "LieError",
    "IndexOutOfRange",
    "JacobiViolation",
    "NotASubalgebra",
    "NotSemisimple",
    "NonSplit",
    "NotComplementary",
    "validate",
    "from_table",
    "abelian",
    "direct_sum",
    "change_basis",
    "transform_subspace",
    "killing_form",
    "killing",
    "bracket_spaces",
    "is_subalgebra",
    "is_ideal",
    "derived_subalgebra",
    "derived_series",
    "is_solvable",
    "radical",
    "center",
    "simple_ideal_decomposition",
    "quotient_basis",
    "quotient_module_action",
    "orthogonal_complement",
    "killing_restricted",
    "ideal_generated",
]
