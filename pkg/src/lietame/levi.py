"""Constructive Levi decomposition.

Start from the rref completion of the radical to a basis of L, then correct
the complement stage by stage along the derived series of the radical
``R = R_0 > R_1 = [R, R] > ... > 0``.  At stage k the complement is a
subalgebra modulo ``R_k``; the correction ``t_a -> t_a + r_a`` with
``r_a`` in ``R_k`` solves a linear system that makes it a subalgebra modulo
``R_{k+1}``.
"""

from __future__ import annotations

from fractions import Fraction

from .lie import (
    LieAlgebra,
    NotComplementary,
    bracket_spaces,
    derived_series,
    radical,
)
from .linalg import Subspace, complement_basis, solve, subspace_contains, subspace_intersect, transpose


def levi_subalgebra(alg: LieAlgebra) -> Subspace:
    n = alg.dim
    r = radical(alg)
    if r.dim == 0:
        return Subspace.full(n)
    if r.dim == n:
        return Subspace.zero(n)

    t = complement_basis(r)  # s vectors spanning a complement of R
    s = len(t)
    frame = [list(v) for v in r.basis] + t
    frame_t = transpose(frame)

    # structure constants of L/R in the t-basis: [t_a, t_b] = sum c t_c  (mod R)
    consts = {}
    for a in range(s):
        for b in range(a + 1, s):
            coords = solve(frame_t, alg.bracket(t[a], t[b]))
            consts[(a, b)] = coords[r.dim:]

    series = derived_series(alg, r)
    for k in range(len(series) - 1):
        rk, rk1 = series[k], series[k + 1]
        t = _correct_stage(alg, t, consts, rk, rk1)

    levi = Subspace.span(t, n)
    if not _closed(alg, levi):
        raise AssertionError("Levi correction left a non-closed complement")
    return levi


def _closed(alg: LieAlgebra, v: Subspace) -> bool:
    return subspace_contains(v, bracket_spaces(alg, v, v))


def _correct_stage(alg, t, consts, rk: Subspace, rk1: Subspace):
    """Make span(t) closed modulo ``rk1``, assuming it is closed modulo ``rk``."""
    s = len(t)
    q = complement_basis(rk1, rk)  # basis of R_k / R_{k+1}
    m = len(q)
    lower = [list(v) for v in rk1.basis]
    frame_t = transpose(lower + q)

    def proj(v):
        # coordinates of v (in R_k) along q, i.e. modulo R_{k+1}
        coords = solve(frame_t, v)
        if coords is None:
            raise AssertionError("defect left R_k; Levi stage ordering is broken")
        return coords[len(lower):]

    # unknown r_a = sum_p x[a*m + p] q_p
    nunk = s * m
    eqs: list[list[Fraction]] = []
    rhs: list[Fraction] = []
    # images [t_a, q_p] mod R_{k+1}
    tq = [[proj(alg.bracket(t[a], q[p])) for p in range(m)] for a in range(s)]
    for a in range(s):
        for b in range(a + 1, s):
            c = consts[(a, b)]
            lhs = alg.bracket(t[a], t[b])
            for cc, tc in zip(c, t):
                if cc:
                    lhs = [x - cc * y for x, y in zip(lhs, tc)]
            defect = proj(lhs)
            block = [[Fraction(0)] * nunk for _ in range(m)]
            # [t_a, r_b] - [t_b, r_a] - sum_c c_ab^c r_c = -defect
            for p in range(m):
                for row in range(m):
                    block[row][b * m + p] += tq[a][p][row]
                    block[row][a * m + p] -= tq[b][p][row]
            for cidx, cc in enumerate(c):
                if cc:
                    for p in range(m):
                        block[p][cidx * m + p] -= cc
            eqs.extend(block)
            rhs.extend(-d for d in defect)
    if not eqs:
        return t
    x = solve(eqs, rhs)
    if x is None:
        raise AssertionError("Levi correction system has no solution; this is a bug")
    new_t = []
    for a in range(s):
        v = list(t[a])
        for p in range(m):
            coef = x[a * m + p]
            if coef:
                v = [y + coef * z for y, z in zip(v, q[p])]
        new_t.append(v)
    return new_t


def is_direct_summand(alg: LieAlgebra, part: Subspace, rest: Subspace) -> bool:
    """True when ``L = part + rest`` with ``[part, rest] = 0``."""
    if part.dim + rest.dim != alg.dim or subspace_intersect(part, rest).dim:
        raise NotComplementary("parts must intersect trivially and span the algebra")
    return bracket_spaces(alg, part, rest).dim == 0
