"""Tame / controlled-wild decision for Lie algebras given by structure constants."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

import sympy

from .levi import levi_subalgebra
from .lie import (
    LieAlgebra,
    bracket_spaces,
    derived_series,
    killing,
    orthogonal_complement,
    quotient_module_action,
    radical,
)
from .linalg import Subspace, kernel_basis, solve, transpose

TAME_CLASSES = {
    1: "semisimple",
    2: "the one-dimensional algebra",
    3: "semisimple plus a one-dimensional direct summand",
    4: "sl2 acting on its two-dimensional irreducible module (abelian radical)",
    5: "semisimple plus a direct summand sl2 acting on its two-dimensional irreducible module",
}

RULES = {
    "solvable": "a solvable algebra of dimension > 1 maps onto a two-dimensional algebra and is controlled wild",
    "nonabelian_radical": "an algebra whose radical is not abelian is controlled wild",
    "identity_action": (
        "the radical modulo its square is one-dimensional while the radical is not: an element of the radical "
        "acts as the identity on an irreducible module, which is controlled wild"
    ),
    "decomposable_two_dim": (
        "a two-dimensional abelian radical with trivial action splits into two lines; the quiver becomes "
        "vertices with two loops under one quadratic relation, which is controlled wild"
    ),
    "big_radical": (
        "an abelian radical of dimension >= 3 admits a large module, so its quiver contains a wild subquiver"
    ),
    "two_dim_not_sl2": (
        "a two-dimensional abelian radical is tame only when a single sl2 factor acts on it irreducibly"
    ),
}


@dataclass(frozen=True)
class Verdict:
    kind: str  # "tame" | "wild" | "unsupported"
    tame_class: int | None = None
    rule: str | None = None
    witness: str = ""
    cause: str = ""
    controlled: bool = True

    @classmethod
    def tame(cls, k: int, witness: str = "") -> "Verdict":
        return cls("tame", tame_class=k, witness=witness)

    @classmethod
    def wild(cls, rule: str, witness: str) -> "Verdict":
        if rule not in RULES:
            raise KeyError(rule)
        return cls("wild", rule=rule, witness=witness)

    @classmethod
    def unsupported(cls, cause: str) -> "Verdict":
        return cls("unsupported", cause=cause)

    @property
    def rule_text(self) -> str:
        if self.kind == "tame":
            return f"tame class {self.tame_class}: {TAME_CLASSES[self.tame_class]}"
        if self.kind == "wild":
            return RULES[self.rule]
        return "no rule applies over the rationals"

    def to_dict(self) -> dict:
        if self.kind == "tame":
            return {"kind": "tame", "class": self.tame_class, "witness": self.witness}
        if self.kind == "wild":
            return {"kind": "wild", "rule": self.rule, "controlled": self.controlled, "witness": self.witness}
        return {"kind": "unsupported", "cause": self.cause}


def classify(alg: LieAlgebra) -> Verdict:
    n = alg.dim
    r = radical(alg)
    if r.dim == 0:
        return Verdict.tame(1, f"radical is zero (dim L = {n})")
    if r.dim == n:
        if n <= 1:
            return Verdict.tame(2, "one-dimensional")
        dims = [s.dim for s in derived_series(alg)]
        return Verdict.wild("solvable", f"solvable of dimension {n}; derived series dimensions {dims}")

    levi = levi_subalgebra(alg)
    rr = bracket_spaces(alg, r, r)
    if rr.dim:
        q = r.dim - rr.dim
        detail = f"dim R = {r.dim}, dim [R,R] = {rr.dim}, dim R/[R,R] = {q}"
        if q == 1:
            return Verdict.wild("identity_action", detail)
        return Verdict.wild("nonabelian_radical", detail)

    if r.dim == 1:
        return Verdict.tame(3, f"one-dimensional radical, Levi part of dimension {levi.dim}")

    if r.dim == 2:
        _, mats = quotient_module_action(alg, levi, r)
        if not any(x for m in mats for row in m for x in row):
            return Verdict.wild("decomposable_two_dim", "Levi part acts trivially on the 2-dimensional radical")
        kernel = _action_kernel(levi, mats)
        acting = orthogonal_complement(alg, kernel, levi)
        return two_dim_module_verdict(alg, acting, kernel, r, _restrict_action(levi, mats, acting))

    return Verdict.wild("big_radical", f"abelian radical of dimension {r.dim} >= 3")


def _action_kernel(levi: Subspace, mats) -> Subspace:
    """``{s in levi : rho(s) = 0}``."""
    n = levi.ambient_dim
    # coefficients c with sum c_i rho(b_i) = 0
    flat = [[x for row in m for x in row] for m in mats]
    coeffs = kernel_basis(transpose(flat), len(mats))
    vecs = [[sum((c * b[k] for c, b in zip(co, levi.basis) if c), Fraction(0)) for k in range(n)] for co in coeffs]
    return Subspace.span(vecs, n)


def _restrict_action(levi: Subspace, mats, part: Subspace):
    """Action matrices for the basis of ``part`` (a subspace of ``levi``)."""
    lt = transpose([list(b) for b in levi.basis])
    out = []
    for v in part.basis:
        co = solve(lt, list(v))
        out.append([[sum((c * m[i][j] for c, m in zip(co, mats) if c), Fraction(0)) for j in range(2)] for i in range(2)])
    return out


def two_dim_module_verdict(
    alg: LieAlgebra, acting: Subspace, kernel: Subspace, r: Subspace | None = None, action=None
) -> Verdict:
    """Decide the two-dimensional-radical case once the acting ideal is known.

    ``acting`` is the ideal of the Levi part acting faithfully on the radical,
    ``kernel`` the complementary ideal acting trivially.  Tame needs ``acting``
    to be a split sl2; when no rational sl2-triple is found we refuse to guess.
    """
    if acting.dim != 3:
        return Verdict.wild(
            "two_dim_not_sl2", f"the ideal acting on the radical has dimension {acting.dim}, not 3"
        )
    triple = find_sl2_triple(alg, acting, action)
    if triple is None:
        return Verdict.unsupported(
            "no rational sl2-triple exists in the acting 3-dimensional simple ideal; it is a non-split "
            "form such as so3 (anisotropic Killing form)"
        )
    if r is not None:
        assert bracket_spaces(alg, kernel, r).dim == 0
        assert bracket_spaces(alg, kernel, acting).dim == 0
    if kernel.dim == 0:
        return Verdict.tame(4, "sl2 acting irreducibly on the 2-dimensional abelian radical")
    return Verdict.tame(5, f"sl2 acting on the 2-dimensional radical plus a semisimple summand of dimension {kernel.dim}")


def find_sl2_triple(alg: LieAlgebra, space: Subspace, action=None):
    """Rational ``(h, e, f)`` spanning a 3-dim simple subalgebra, or ``None`` if it is not split.

    With ``action`` (2x2 matrices of a faithful action of the basis of
    ``space``) the image is all of sl2(Q), so preimages of the matrix units
    give the triple directly.  Without it we look for an isotropic vector of
    the Killing form: there is one exactly when the algebra is split.
    """
    if space.dim != 3:
        return None
    basis = [list(b) for b in space.basis]
    if action is not None:
        flat = transpose([[x for row in m for x in row] for m in action])
        one, zero = Fraction(1), Fraction(0)
        targets = {"h": [one, zero, zero, -one], "e": [zero, one, zero, zero], "f": [zero, zero, one, zero]}
        pre = {}
        for key, t in targets.items():
            co = solve(flat, t)
            if co is None:
                return None
            pre[key] = _combine(co, basis, alg.dim)
        h, e, f = pre["h"], pre["e"], pre["f"]
        for cand in ((h, e, f), ([-x for x in h], e, f)):
            if _is_sl2_triple(alg, *cand):
                return cand
        return None
    e = _isotropic_vector([[killing(alg, a, b) for b in basis] for a in basis])
    if e is None:
        return None
    triple = _triple_from_nilpotent(alg, space, _combine(e, basis, alg.dim))
    if triple is not None and _is_sl2_triple(alg, *triple):
        return triple
    return None


def _combine(coeffs, basis, n):
    return [sum((c * b[k] for c, b in zip(coeffs, basis) if c), Fraction(0)) for k in range(n)]


def _squarefree(q: Fraction) -> tuple[int, Fraction]:
    """``q = s * t**2`` with ``s`` a squarefree integer; returns ``(s, t)``."""
    n = q.numerator * q.denominator
    s, t = (1 if n > 0 else -1), 1
    for p, k in sympy.factorint(abs(n)).items():
        s *= p ** (k % 2)
        t *= p ** (k // 2)
    return s, Fraction(t, q.denominator)


def _legendre(a: int, b: int):
    """Nonzero integer ``(x, y, z)`` with ``x^2 = a y^2 + b z^2`` (``a``, ``b`` squarefree), or ``None``.

    Descent: with ``t^2 = a (mod b)`` we get ``t^2 - a = b k s^2`` with
    ``|k| < |b|``, and a solution for ``(a, k)`` lifts to one for ``(a, b)``.
    """
    if abs(a) > abs(b):
        sol = _legendre(b, a)
        return None if sol is None else (sol[0], sol[2], sol[1])
    if a == 1:
        return (1, 1, 0)
    if b == 1:
        return (1, 0, 1)
    if a == b == -1:
        return None
    t = sympy.sqrt_mod(a % abs(b), abs(b)) if abs(b) > 1 else 0
    if t is None:
        return None
    if 2 * t > abs(b):
        t -= abs(b)
    k, s = _squarefree(Fraction((t * t - a) // b))
    if k == 0 or s.denominator != 1:
        return None
    sol = _legendre(a, k)
    if sol is None:
        return None
    x, y, z = sol
    return (t * x + a * y, x + t * y, k * int(s) * z)


def _isotropic_vector(gram):
    """Nonzero rational ``x`` with ``x^T gram x = 0`` for a 3x3 symmetric form, or ``None``.

    The form is diagonalised first; a zero diagonal entry is already an
    answer, otherwise Legendre's equation for the diagonal form is solved.
    """
    n = len(gram)
    form = lambda u, v: sum(u[i] * gram[i][j] * v[j] for i in range(n) for j in range(n))
    vecs = [[Fraction(int(i == j)) for j in range(n)] for i in range(n)]
    diag = []
    for i in range(n):
        qi = form(vecs[i], vecs[i])
        if qi == 0:
            return vecs[i]
        diag.append(qi)
        for j in range(i + 1, n):
            c = form(vecs[i], vecs[j]) / qi
            vecs[j] = [x - c * y for x, y in zip(vecs[j], vecs[i])]
    # a x^2 + b y^2 + c z^2 = 0  <=>  (c z)^2 = (-a c) x^2 + (-b c) y^2
    (a, ta), (b, tb), (c, tc) = (_squarefree(q) for q in diag)
    sa, ra = _squarefree(Fraction(-a * c))
    sb, rb = _squarefree(Fraction(-b * c))
    sol = _legendre(sa, sb)
    if sol is None:
        return None
    big_x, y, z = sol
    coords = (Fraction(y) / ra / ta, Fraction(z) / rb / tb, Fraction(big_x, c) / tc)
    return [sum(k * v[m] for k, v in zip(coords, vecs)) for m in range(n)]


def _triple_from_nilpotent(alg, space, e):
    basis = [list(b) for b in space.basis]
    # h in space with [h, e] = 2e
    cols = [alg.bracket(b, e) for b in basis]
    co = solve(transpose(cols), [2 * v for v in e])
    if co is None:
        return None
    h = [sum((c * b[k] for c, b in zip(co, basis)), Fraction(0)) for k in range(alg.dim)]
    # f with [e, f] = h and [h, f] = -2f
    m = len(basis)
    rows = []
    rhs = []
    ef = [alg.bracket(e, b) for b in basis]
    hf = [[y + 2 * x for x, y in zip(b, alg.bracket(h, b))] for b in basis]
    for k in range(alg.dim):
        rows.append([ef[j][k] for j in range(m)])
        rhs.append(h[k])
        rows.append([hf[j][k] for j in range(m)])
        rhs.append(Fraction(0))
    cf = solve(rows, rhs)
    if cf is None:
        return None
    f = [sum((c * b[k] for c, b in zip(cf, basis)), Fraction(0)) for k in range(alg.dim)]
    return h, e, f


def _is_sl2_triple(alg, h, e, f) -> bool:
    return (
        alg.bracket(h, e) == [2 * v for v in e]
        and alg.bracket(h, f) == [-2 * v for v in f]
        and alg.bracket(e, f) == list(h)
        and any(e)
    )


def explain(v: Verdict) -> str:
    if v.kind == "tame":
        text = (
            f"Tame, class {v.tame_class} ({TAME_CLASSES[v.tame_class]}). "
            "The algebra falls in one of the five tame families"
        )
        if v.tame_class == 1:
            text += ": it is semisimple, so every module is a direct sum of irreducibles"
        elif v.tame_class in (2, 3):
            text += ": indecomposables are an irreducible of the semisimple part tensored with a Jordan block"
        else:
            text += (
                ": its quiver is a chain with double arrows and one quadratic relation at each vertex, "
                "a tame problem for all values of the relation coefficients"
            )
        return text + (f". Evidence: {v.witness}." if v.witness else ".")
    if v.kind == "wild":
        return f"Controlled wild by the rule '{v.rule}': {RULES[v.rule]}. Evidence: {v.witness}."
    return (
        "Unsupported. Computation is exact over the rationals, and this input needs a split sl2 "
        f"that could not be exhibited over Q: {v.cause}."
    )
