"""Named example algebras built from short recipes.

Grammar (whitespace ignored)::

    recipe := sl(n) | abelian(n) | heisenberg | heisenberg(k) | twodim_nonabelian | so3
            | semidirect(recipe, module) | heisenberg_semidirect(recipe, module)
            | direct_sum(recipe, recipe, ...) | scale_action(recipe)

``module`` is a ``+``-separated list of highest weights, each written as
comma or semicolon separated fundamental-weight coordinates concatenated over
the simple factors of the base, e.g. ``1``, ``0+0``, ``(1,0)``, ``1;0``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Callable

from .lie import LieAlgebra, abelian, direct_sum, from_table
from .linalg import kernel_basis, zeros
from .weights import parse_module


class BadRecipe(ValueError):
    pass


Rep = list  # one square matrix per basis element of the acting algebra


@dataclass
class Built:
    algebra: LieAlgebra
    # maps a highest weight (tuple) to representation matrices, or None if the
    # algebra is not a semisimple base we know how to represent
    rep: Callable[[tuple], Rep] | None = None
    rank: int = 0
    module_part: tuple[int, int] | None = None  # index range of the module inside a semidirect


def _sl(n: int) -> Built:
    if n < 2:
        raise BadRecipe("sl(n) needs n >= 2")
    units = []  # (name, matrix)
    def unit(i, j):
        m = zeros(n, n)
        m[i][j] = Fraction(1)
        return m
    for i in range(n):
        for j in range(i + 1, n):
            units.append((f"E{i + 1}{j + 1}", unit(i, j)))
    for i in range(n - 1):
        m = zeros(n, n)
        m[i][i], m[i + 1][i + 1] = Fraction(1), Fraction(-1)
        units.append((f"H{i + 1}", m))
    for i in range(n):
        for j in range(i + 1, n):
            units.append((f"E{j + 1}{i + 1}", unit(j, i)))
    if n == 2:
        units = [("e", units[0][1]), ("h", units[1][1]), ("f", units[2][1])]
    mats = [m for _, m in units]
    alg = _matrix_algebra([nm for nm, _ in units], mats)

    def rep(hw):
        hw = tuple(hw)
        if len(hw) != n - 1 or any(x < 0 for x in hw):
            raise BadRecipe(f"sl({n}) highest weight must be {n - 1} nonnegative integers, got {hw}")
        if n == 2:
            return _sl2_irrep(hw[0])
        if not any(hw):
            return [zeros(1, 1) for _ in mats]
        if hw == (1,) + (0,) * (n - 2):
            return [[row[:] for row in m] for m in mats]
        if hw == (0,) * (n - 2) + (1,):
            return [[[-m[j][i] for j in range(n)] for i in range(n)] for m in mats]
        if hw == (1,) + (0,) * (n - 3) + (1,):
            return alg.ad_basis()
        raise BadRecipe(f"sl({n}) modules are available for trivial, natural, dual and adjoint weights only")

    return Built(alg, rep, n - 1)


def _sl2_irrep(k: int) -> Rep:
    """Basis v_0..v_k: h v_j = (k-2j) v_j, f v_j = v_{j+1}, e v_j = j(k-j+1) v_{j-1}."""
    d = k + 1
    e, h, f = zeros(d, d), zeros(d, d), zeros(d, d)
    for j in range(d):
        h[j][j] = Fraction(k - 2 * j)
        if j + 1 < d:
            f[j + 1][j] = Fraction(1)
        if j > 0:
            e[j - 1][j] = Fraction(j * (k - j + 1))
    return [e, h, f]


def _matrix_algebra(names, mats) -> LieAlgebra:
    """Structure constants of a linear Lie algebra spanned by ``mats`` (assumed closed)."""
    from .linalg import solve, transpose

    flat = [[x for row in m for x in row] for m in mats]
    frame = transpose(flat)
    table = {}
    for i in range(len(mats)):
        for j in range(i + 1, len(mats)):
            a, b = mats[i], mats[j]
            n = len(a)
            comm = [[sum(a[r][k] * b[k][c] - b[r][k] * a[k][c] for k in range(n)) for c in range(n)] for r in range(n)]
            coords = solve(frame, [x for row in comm for x in row])
            if coords is None:
                raise BadRecipe("matrices are not closed under the commutator")
            table[(i, j)] = {k: c for k, c in enumerate(coords) if c}
    return from_table(names, table)


def _so3() -> Built:
    # cross-product algebra: [x, y] = z, [y, z] = x, [z, x] = y; a non-split form of sl(2) over Q
    alg = from_table(["x", "y", "z"], {(0, 1): {2: 1}, (1, 2): {0: 1}, (2, 0): {1: 1}})
    return Built(alg, None, 0)


def _heisenberg(k: int = 1) -> Built:
    names = [f"p{i + 1}" for i in range(k)] + [f"q{i + 1}" for i in range(k)] + ["z"]
    z = 2 * k
    return Built(from_table(names, {(i, k + i): {z: 1} for i in range(k)}))


def _twodim() -> Built:
    return Built(from_table(["x", "y"], {(0, 1): {1: 1}}))


def _direct(parts: list[Built]) -> Built:
    alg = parts[0].algebra
    for p in parts[1:]:
        alg = direct_sum(alg, p.algebra)
    reps_ok = all(p.rep is not None for p in parts)
    rep = None
    if reps_ok:
        def rep(hw):
            hw = tuple(hw)
            total = sum(p.rank for p in parts)
            if len(hw) != total:
                raise BadRecipe(f"highest weight {hw} should have {total} coordinates")
            # Kronecker sum of factor modules
            mats_per_factor = []
            off = 0
            for p in parts:
                mats_per_factor.append(p.rep(hw[off:off + p.rank]))
                off += p.rank
            dims = [len(ms[0]) if ms else 1 for ms in mats_per_factor]
            out = []
            for idx, ms in enumerate(mats_per_factor):
                for m in ms:
                    out.append(_kron_embed(m, idx, dims))
            return out
    return Built(alg, rep, sum(p.rank for p in parts))


def _kron_embed(m, idx, dims):
    """``1 (x) .. (x) m (x) .. (x) 1`` with ``m`` in slot ``idx``."""
    result = [[Fraction(1)]]
    for k, d in enumerate(dims):
        factor = m if k == idx else [[Fraction(int(r == c)) for c in range(d)] for r in range(d)]
        result = _kron(result, factor)
    return result


def _kron(a, b):
    ra, ca, rb, cb = len(a), len(a[0]), len(b), len(b[0])
    return [[a[i // rb][j // cb] * b[i % rb][j % cb] for j in range(ca * cb)] for i in range(ra * rb)]


def _module_matrices(base: Built, module_text: str) -> Rep:
    if base.rep is None:
        raise BadRecipe("semidirect products need a base built from sl(n) factors")
    summands = parse_module(module_text)
    blocks = []
    for hw, k in summands.sorted_items():
        blocks.extend([base.rep(hw)] * k)
    nb = base.algebra.dim
    dims = [len(b[0]) for b in blocks]
    total = sum(dims)
    out = []
    for x in range(nb):
        m = zeros(total, total)
        off = 0
        for blk, d in zip(blocks, dims):
            for r in range(d):
                for c in range(d):
                    m[off + r][off + c] = blk[x][r][c]
            off += d
        out.append(m)
    return out


def _semidirect(base: Built, module_text: str) -> Built:
    mats = _module_matrices(base, module_text)
    s = base.algebra
    nb = s.dim
    m = len(mats[0]) if mats else 0
    names = list(s.names) + [f"v{i}" for i in range(m)]
    table = {key: dict(v) for key, v in s.sc.table.items()}
    for x in range(nb):
        for c in range(m):
            col = {nb + r: mats[x][r][c] for r in range(m) if mats[x][r][c]}
            if col:
                table[(x, nb + c)] = col
    return Built(from_table(names, table), None, 0, (nb, nb + m))


def _heisenberg_semidirect(base: Built, module_text: str) -> Built:
    """``S |x (V + <z>)`` with ``[v, w] = omega(v, w) z`` for an S-invariant alternating form."""
    mats = _module_matrices(base, module_text)
    m = len(mats[0])
    # omega antisymmetric, rho(x)^T omega + omega rho(x) = 0; unknowns omega[i][j], i < j
    pairs = [(i, j) for i in range(m) for j in range(i + 1, m)]
    index = {p: k for k, p in enumerate(pairs)}

    def entry(i, j):
        if i == j:
            return None
        return (index[(i, j)], 1) if i < j else (index[(j, i)], -1)

    eqs = []
    for rho in mats:
        for a in range(m):
            for b in range(m):
                row = [Fraction(0)] * len(pairs)
                for k in range(m):
                    e = entry(k, b)
                    if e and rho[k][a]:
                        row[e[0]] += e[1] * rho[k][a]
                    e = entry(a, k)
                    if e and rho[k][b]:
                        row[e[0]] += e[1] * rho[k][b]
                eqs.append(row)
    forms = kernel_basis(eqs, len(pairs)) if pairs else []
    if not forms:
        raise BadRecipe("module carries no invariant alternating form")
    omega = forms[0]
    semi = _semidirect(base, module_text).algebra
    nb = base.algebra.dim
    z = semi.dim
    names = list(semi.names) + ["z"]
    table = {key: dict(v) for key, v in semi.sc.table.items()}
    for (i, j), k in index.items():
        if omega[k]:
            table[(nb + i, nb + j)] = {z: omega[k]}
    return Built(from_table(names, table), None, 0, (nb, nb + m))


def _scale_action(inner: Built) -> Built:
    """Adjoin ``t`` acting as the identity on the module of a semidirect recipe."""
    if inner.module_part is None:
        raise BadRecipe("scale_action needs a semidirect recipe")
    lo, hi = inner.module_part
    alg = inner.algebra
    t = alg.dim
    names = list(alg.names) + ["t"]
    table = {key: dict(v) for key, v in alg.sc.table.items()}
    for v in range(lo, hi):
        table[(v, t)] = {v: -1}  # [t, v] = v
    return Built(from_table(names, table), None, 0, inner.module_part)


def _split_args(text: str) -> list[str]:
    args, depth, cur = [], 0, []
    for ch in text:
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
        if ch == "," and depth == 0:
            args.append("".join(cur))
            cur = []
        else:
            cur.append(ch)
    args.append("".join(cur))
    return [a.strip() for a in args]


def _build(text: str) -> Built:
    text = text.strip()
    if "(" in text:
        if not text.endswith(")"):
            raise BadRecipe(f"unbalanced recipe {text!r}")
        name, inner = text[: text.index("(")].strip(), text[text.index("(") + 1:-1]
    else:
        name, inner = text, None
    args = _split_args(inner) if inner is not None else []
    try:
        if name == "sl":
            return _sl(int(args[0]))
        if name == "abelian":
            return Built(abelian(int(args[0])), None, 0)
        if name == "heisenberg":
            return _heisenberg(int(args[0]) if args else 1)
        if name == "twodim_nonabelian":
            return _twodim()
        if name == "so3":
            return _so3()
        if name in ("semidirect", "heisenberg_semidirect"):
            if len(args) < 2:
                raise BadRecipe(f"{name} needs a base recipe and a module")
            base = _build(args[0])
            module = ",".join(args[1:])
            return _semidirect(base, module) if name == "semidirect" else _heisenberg_semidirect(base, module)
        if name == "direct_sum":
            if len(args) < 2:
                raise BadRecipe("direct_sum needs at least two recipes")
            return _direct([_build(a) for a in args])
        if name == "scale_action":
            return _scale_action(_build(args[0]))
    except (IndexError, ValueError) as exc:
        if isinstance(exc, BadRecipe):
            raise
        raise BadRecipe(f"bad arguments in {text!r}: {exc}") from exc
    raise BadRecipe(f"unknown recipe {name!r}")


def build_named(recipe: str) -> LieAlgebra:
    """Structure constants for a recipe such as ``semidirect(sl(2), 1)``."""
    return _build(recipe).algebra


CORPUS = {
    "sl(2)": ("tame", 1),
    "sl(3)": ("tame", 1),
    "direct_sum(sl(2), sl(2))": ("tame", 1),
    "abelian(1)": ("tame", 2),
    "direct_sum(sl(2), abelian(1))": ("tame", 3),
    "direct_sum(sl(3), abelian(1))": ("tame", 3),
    "semidirect(sl(2), 1)": ("tame", 4),
    "direct_sum(sl(3), semidirect(sl(2), 1))": ("tame", 5),
    "twodim_nonabelian": ("wild", "solvable"),
    "abelian(2)": ("wild", "solvable"),
    "heisenberg": ("wild", "solvable"),
    "semidirect(sl(2), 2)": ("wild", "big_radical"),
    "semidirect(sl(2), 0+0)": ("wild", "decomposable_two_dim"),
    "scale_action(semidirect(sl(2), 1))": ("wild", "identity_action"),
    "heisenberg_semidirect(sl(2), 1)": ("wild", "nonabelian_radical"),
}
"""Example recipes with their expected verdict (kind, class or rule)."""
