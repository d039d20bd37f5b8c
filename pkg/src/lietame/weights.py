"""Highest-weight representation theory of split semisimple algebras.

Weights live in fundamental-weight coordinates, concatenated across the simple
factors of a :class:`CartanDatum`.  Simple root ``i`` is row ``i`` of the
Cartan matrix ``C[i][j] = 2 (a_i, a_j) / (a_j, a_j)``; inner products use the
Gram matrix of the fundamental weights, ``C^{-1} D`` with
``D = diag((a_j, a_j) / 2)``.
"""

from __future__ import annotations

import itertools
import re
from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property, lru_cache
from typing import Iterable, Mapping, Sequence

from .linalg import inverse

Weight = tuple  # tuple[int, ...]


class NonDominant(ValueError):
    pass


class BadCartanType(ValueError):
    pass


def _symmetric_form(kind: str, rank: int) -> list[list[int]]:
    """Gram matrix of the simple roots (Bourbaki numbering)."""
    g = [[0] * rank for _ in range(rank)]

    def link(i, j, v):
        g[i][j] = g[j][i] = v

    if kind in ("A", "D", "E"):
        for i in range(rank):
            g[i][i] = 2
        if kind == "A":
            for i in range(rank - 1):
                link(i, i + 1, -1)
        elif kind == "D":
            for i in range(rank - 2):
                link(i, i + 1, -1)
            link(rank - 3, rank - 1, -1)
        else:
            # E_n: chain 1-3-4-5-...-n with 2 attached to 4 (1-based)
            link(0, 2, -1)
            link(1, 3, -1)
            for i in range(2, rank - 1):
                link(i, i + 1, -1)
    elif kind == "B":
        for i in range(rank):
            g[i][i] = 2
        g[rank - 1][rank - 1] = 1
        for i in range(rank - 1):
            link(i, i + 1, -1)
    elif kind == "C":
        for i in range(rank):
            g[i][i] = 2
        g[rank - 1][rank - 1] = 4
        for i in range(rank - 2):
            link(i, i + 1, -1)
        link(rank - 2, rank - 1, -2)
    elif kind == "F":
        g = [[2, -1, 0, 0], [-1, 2, -1, 0], [0, -1, 1, -Fraction(1, 2)], [0, 0, -Fraction(1, 2), 1]]
    elif kind == "G":
        g = [[2, -3], [-3, 6]]
    return g


_VALID_RANK = {
    "A": lambda r: r >= 1,
    "B": lambda r: r >= 2,
    "C": lambda r: r >= 2,
    "D": lambda r: r >= 4,
    "E": lambda r: r in (6, 7, 8),
    "F": lambda r: r == 4,
    "G": lambda r: r == 2,
}


@dataclass(frozen=True)
class CartanDatum:
    """Ordered simple factors, e.g. ``(("A", 1), ("B", 2))``."""

    factors: tuple[tuple[str, int], ...]

    def __post_init__(self):
        for kind, r in self.factors:
            if kind not in _VALID_RANK or not _VALID_RANK[kind](r):
                raise BadCartanType(f"no simple Lie algebra of type {kind}{r}")

    @classmethod
    def parse(cls, text: str) -> "CartanDatum":
        """``"A1"``, ``"A1xA1"``, ``"A2+B2"``, ``"G2"``; empty string is rank 0."""
        text = text.strip()
        if not text:
            return cls(())
        parts = re.split(r"\s*[x+,*]\s*", text)
        factors = []
        for p in parts:
            m = re.fullmatch(r"([A-Ga-g])_?(\d+)", p)
            if not m:
                raise BadCartanType(f"cannot parse Cartan type {p!r}")
            factors.append((m.group(1).upper(), int(m.group(2))))
        return cls(tuple(factors))

    def __str__(self) -> str:
        return "x".join(f"{k}{r}" for k, r in self.factors) or "0"

    @property
    def rank(self) -> int:
        return sum(r for _, r in self.factors)

    @cached_property
    def gram_roots(self) -> list[list[Fraction]]:
        n = self.rank
        g = [[Fraction(0)] * n for _ in range(n)]
        off = 0
        for kind, r in self.factors:
            block = _symmetric_form(kind, r)
            for i in range(r):
                for j in range(r):
                    g[off + i][off + j] = Fraction(block[i][j])
            off += r
        return g

    @cached_property
    def cartan_matrix(self) -> tuple[tuple[int, ...], ...]:
        g = self.gram_roots
        n = self.rank
        rows = []
        for i in range(n):
            row = []
            for j in range(n):
                v = 2 * g[i][j] / g[j][j]
                assert v.denominator == 1
                row.append(int(v))
            rows.append(tuple(row))
        return tuple(rows)

    @cached_property
    def gram_weights(self) -> list[list[Fraction]]:
        n = self.rank
        if not n:
            return []
        cinv = inverse(self.cartan_matrix)
        d = [self.gram_roots[j][j] / 2 for j in range(n)]
        return [[cinv[i][j] * d[j] for j in range(n)] for i in range(n)]

    def inner(self, a: Sequence, b: Sequence) -> Fraction:
        g = self.gram_weights
        return sum((x * g[i][j] * y for i, x in enumerate(a) if x for j, y in enumerate(b) if y), Fraction(0))

    def simple_root(self, i: int) -> Weight:
        return self.cartan_matrix[i]

    def reflect(self, w: Sequence[int], i: int) -> Weight:
        c = w[i]
        if not c:
            return tuple(w)
        return tuple(x - c * a for x, a in zip(w, self.cartan_matrix[i]))

    @cached_property
    def positive_roots(self) -> tuple[Weight, ...]:
        """All positive roots, as the Weyl orbit of the simple roots cut to the positive half."""
        n = self.rank
        seen = set()
        frontier = [self.simple_root(i) for i in range(n)]
        seen.update(frontier)
        while frontier:
            nxt = []
            for r in frontier:
                for i in range(n):
                    s = self.reflect(r, i)
                    if s not in seen:
                        seen.add(s)
                        nxt.append(s)
            frontier = nxt
        return tuple(sorted((r for r in seen if self._is_positive(r)), key=lambda r: (self.height(r), r)))

    @cached_property
    def _cinv(self):
        return inverse(self.cartan_matrix) if self.rank else []

    def root_coordinates(self, w: Sequence[int]) -> list[Fraction]:
        """Coordinates in the simple-root basis: ``w = sum c_i alpha_i``."""
        n = self.rank
        return [sum((w[i] * self._cinv[i][j] for i in range(n) if w[i]), Fraction(0)) for j in range(n)]

    def height(self, w: Sequence[int]) -> Fraction:
        return sum(self.root_coordinates(w), Fraction(0))

    def _is_positive(self, r) -> bool:
        c = self.root_coordinates(r)
        return all(x >= 0 for x in c)

    @property
    def rho(self) -> Weight:
        return (1,) * self.rank

    def dominant_conjugate(self, w: Sequence[int]) -> tuple[Weight, int]:
        """``(dominant weight in the orbit of w, parity of the reflections used)``."""
        w = tuple(w)
        sign = 1
        while True:
            i = next((k for k, x in enumerate(w) if x < 0), None)
            if i is None:
                return w, sign
            w = self.reflect(w, i)
            sign = -sign

    def weyl_orbit(self, w: Sequence[int]) -> set[Weight]:
        start, _ = self.dominant_conjugate(w)
        seen = {start}
        frontier = [start]
        while frontier:
            nxt = []
            for v in frontier:
                for i in range(self.rank):
                    if v[i] > 0:  # only walk down from the dominant chamber
                        s = self.reflect(v, i)
                        if s not in seen:
                            seen.add(s)
                            nxt.append(s)
            frontier = nxt
        return seen

    def check_dominant(self, w: Sequence[int]) -> Weight:
        w = tuple(int(x) for x in w)
        if len(w) != self.rank:
            raise NonDominant(f"weight {w} has length {len(w)}, expected {self.rank}")
        if any(x < 0 for x in w):
            raise NonDominant(f"weight {w} is not dominant")
        return w


def weyl_dim(d: CartanDatum, w: Sequence[int]) -> int:
    lam = d.check_dominant(w)
    lr = tuple(x + 1 for x in lam)
    num = Fraction(1)
    for a in d.positive_roots:
        num *= d.inner(lr, a) / d.inner(d.rho, a)
    assert num.denominator == 1
    return int(num)


def dominant_weights(d: CartanDatum, w: Sequence[int]) -> list[Weight]:
    """Dominant weights of the irreducible module ``w``, highest first (by depth)."""
    lam = d.check_dominant(w)
    seen = {lam}
    frontier = [lam]
    out = [lam]
    while frontier:
        nxt = []
        for mu in frontier:
            for a in d.positive_roots:
                nu = tuple(x - y for x, y in zip(mu, a))
                if nu not in seen and all(x >= 0 for x in nu):
                    seen.add(nu)
                    nxt.append(nu)
        out.extend(nxt)
        frontier = nxt
    depth = {mu: d.height(tuple(x - y for x, y in zip(lam, mu))) for mu in out}
    return sorted(out, key=lambda mu: (depth[mu], tuple(-x for x in mu)))


@lru_cache(maxsize=512)
def _dominant_multiplicities(d: CartanDatum, lam: Weight) -> dict[Weight, int]:
    doms = dominant_weights(d, lam)
    lr = tuple(x + 1 for x in lam)
    norm_top = d.inner(lr, lr)
    mult: dict[Weight, int] = {lam: 1}

    def m(nu):
        dom, _ = d.dominant_conjugate(nu)
        return mult.get(dom, 0)

    for mu in doms[1:]:
        mr = tuple(x + 1 for x in mu)
        denom = norm_top - d.inner(mr, mr)
        total = Fraction(0)
        for a in d.positive_roots:
            k = 1
            while True:
                nu = tuple(x + k * y for x, y in zip(mu, a))
                mv = m(nu)
                if not mv:
                    break
                total += mv * d.inner(nu, a)
                k += 1
        val = 2 * total / denom
        assert val.denominator == 1 and val >= 0
        if val:
            mult[mu] = int(val)
    return mult


def weight_multiplicities(d: CartanDatum, w: Sequence[int]) -> dict[Weight, int]:
    """Full weight system with multiplicities (Freudenthal's recursion on dominant weights)."""
    lam = d.check_dominant(w)
    out: dict[Weight, int] = {}
    for mu, k in _dominant_multiplicities(d, lam).items():
        for nu in d.weyl_orbit(mu):
            out[nu] = k
    return out


def _normalize(module) -> Counter:
    """Accept a ModuleDesc-like mapping or an iterable of highest weights."""
    if isinstance(module, Mapping):
        c = Counter({tuple(k): v for k, v in module.items()})
    else:
        c = Counter(tuple(k) for k in module)
    if any(v <= 0 for v in c.values()):
        raise ValueError("multiplicities must be positive")
    return c


class ModuleDesc(Counter):
    """A completely reducible module: highest weight -> multiplicity."""

    @classmethod
    def of(cls, *weights) -> "ModuleDesc":
        return cls(_normalize(weights))

    def dim(self, d: CartanDatum) -> int:
        return sum(k * weyl_dim(d, w) for w, k in self.items())

    def sorted_items(self) -> list[tuple[Weight, int]]:
        return sorted(self.items(), key=lambda kv: tuple(-x for x in kv[0]))

    def __repr__(self) -> str:
        body = " + ".join(
            (f"{k}*" if k > 1 else "") + "(" + ",".join(map(str, w)) + ")" for w, k in self.sorted_items()
        )
        return f"ModuleDesc[{body or '0'}]"


def tensor_decompose(d: CartanDatum, a: Sequence[int], b: Sequence[int]) -> ModuleDesc:
    """Decompose ``V(a) (x) V(b)`` by the Klimyk/Brauer formula.

    The sum runs over the weights of the smaller factor; each shifted weight
    ``b + mu + rho`` is reflected into the dominant chamber with a sign, and
    weights landing on a wall cancel.
    """
    a = d.check_dominant(a)
    b = d.check_dominant(b)
    if weyl_dim(d, a) > weyl_dim(d, b):
        a, b = b, a
    acc: Counter = Counter()
    for mu, k in weight_multiplicities(d, a).items():
        shifted = tuple(x + y + 1 for x, y in zip(b, mu))
        dom, sign = d.dominant_conjugate(shifted)
        if any(x == 0 for x in dom):
            continue
        acc[tuple(x - 1 for x in dom)] += sign * k
    assert all(v >= 0 for v in acc.values()), "Klimyk sum produced a negative multiplicity"
    return ModuleDesc({w: v for w, v in acc.items() if v})


def tensor_modules(d: CartanDatum, x, y) -> ModuleDesc:
    """Bilinear extension of :func:`tensor_decompose` to completely reducible modules."""
    out: Counter = Counter()
    for a, ka in _normalize(x).items():
        for b, kb in _normalize(y).items():
            for w, k in tensor_decompose(d, a, b).items():
                out[w] += ka * kb * k
    return ModuleDesc(out)


def character(d: CartanDatum, module) -> Counter:
    """Formal character of a completely reducible module: weight -> multiplicity."""
    ch: Counter = Counter()
    for w, k in _normalize(module).items():
        for mu, m in weight_multiplicities(d, w).items():
            ch[mu] += k * m
    return ch


def decompose_character(d: CartanDatum, ch: Mapping) -> ModuleDesc:
    """Peel irreducible characters off ``ch``, highest dominant weight first."""
    rest = Counter({tuple(k): v for k, v in ch.items() if v})
    out: Counter = Counter()
    while rest:
        top = max(
            (w for w in rest if all(x >= 0 for x in w)),
            key=lambda w: (d.height(w), w),
            default=None,
        )
        if top is None or rest[top] < 0:
            raise ValueError("not the character of a module")
        k = rest[top]
        out[top] += k
        for mu, m in weight_multiplicities(d, top).items():
            rest[mu] -= k * m
            if not rest[mu]:
                del rest[mu]
    return ModuleDesc(out)


def alt_sym_square(d: CartanDatum, module) -> tuple[ModuleDesc, ModuleDesc]:
    """``(Lambda^2 I, Sym^2 I)`` from pairwise sums over an indexed weight list of ``I``."""
    ch = character(d, module)
    weights = sorted(ch.items())
    alt: Counter = Counter()
    sym: Counter = Counter()
    for idx, (mu, m) in enumerate(weights):
        two_mu = tuple(2 * x for x in mu)
        # pairs inside one weight space of dimension m
        alt[two_mu] += m * (m - 1) // 2
        sym[two_mu] += m * (m + 1) // 2
        for nu, n in weights[idx + 1:]:
            s = tuple(x + y for x, y in zip(mu, nu))
            alt[s] += m * n
            sym[s] += m * n
    return decompose_character(d, alt), decompose_character(d, sym)


def parse_weight(text: str) -> Weight:
    """``"1"``, ``"1,0"``, ``"(1,0)"``, ``"1;0"`` -> integer tuple."""
    t = text.strip().strip("()[] ")
    if not t:
        return ()
    return tuple(int(x) for x in re.split(r"[,;\s]+", t) if x)


def parse_module(text: str) -> ModuleDesc:
    """Summands separated by ``+``, e.g. ``"0+0"`` or ``"(1,0)+(0,1)"``."""
    parts = [p for p in text.split("+") if p.strip()]
    if not parts:
        raise ValueError("empty module description")
    return ModuleDesc.of(*(parse_weight(p) for p in parts))


def dominant_box(rank: int, bound: int) -> list[Weight]:
    """Dominant weights with every coordinate <= bound, ordered by max coordinate then lexicographically."""
    pts = list(itertools.product(range(bound + 1), repeat=rank))
    return sorted(pts, key=lambda w: (max(w, default=0), w))


def module_dim(d: CartanDatum, module) -> int:
    return sum(k * weyl_dim(d, w) for w, k in _normalize(module).items())


def iter_modules(module) -> Iterable[tuple[Weight, int]]:
    return _normalize(module).items()
