"""Finite windows of the quiver K_I and the wildness detectors.

Vertices of K_I are irreducible modules of the semisimple part; there are as
many arrows M -> N as copies of N in I (x) M.  The degree-2 relations at
source M_i landing on M_m are counted by the multiplicity of M_m in
(Lambda^2 I) (x) M_i.
"""

from __future__ import annotations

import enum
from collections import Counter
from dataclasses import dataclass, field
from typing import Iterable, Sequence

from .weights import (
    CartanDatum,
    ModuleDesc,
    Weight,
    alt_sym_square,
    dominant_box,
    module_dim,
    tensor_modules,
)


def _fmt(w: Sequence[int]) -> str:
    return "(" + ",".join(str(x) for x in w) + ")"


@dataclass
class QuiverWindow:
    datum: CartanDatum
    module: ModuleDesc
    vertices: list[Weight] = field(default_factory=list)
    arrows: dict[tuple[int, int], int] = field(default_factory=dict)
    # target index -> [(source index, count)]
    relations: dict[int, list[tuple[int, int]]] = field(default_factory=dict)
    # source index -> [(target weight, count)] for targets beyond the window
    outside_relations: dict[int, list[tuple[Weight, int]]] = field(default_factory=dict)
    boundary: set[int] = field(default_factory=set)

    def index(self, w: Sequence[int]) -> int:
        return self.vertices.index(tuple(w))

    def out_arrows(self, i: int) -> Counter:
        return Counter({self.vertices[t]: k for (s, t), k in self.arrows.items() if s == i})

    def relation_count(self, target: int) -> int:
        return sum(k for _, k in self.relations.get(target, ()))


def build_quiver(d: CartanDatum, module, seeds: Iterable[Sequence[int]], depth: int) -> QuiverWindow:
    """Breadth-first closure of ``seeds`` under ``M -> components of I (x) M``.

    Layer ``depth`` is the boundary: its vertices keep only arrows into the
    window and get no relations.  Each layer is sorted lexicographically.
    """
    if depth < 0:
        raise ValueError("depth must be >= 0")
    module = ModuleDesc(module) if not isinstance(module, ModuleDesc) else module
    layer = sorted({d.check_dominant(s) for s in seeds})
    q = QuiverWindow(d, module)
    layer_of: dict[Weight, int] = {}
    decomp: dict[Weight, ModuleDesc] = {}
    k = 0
    while layer:
        for w in layer:
            layer_of[w] = k
            q.vertices.append(w)
        if k == depth:
            q.boundary = {q.index(w) for w in layer}
            break
        nxt = set()
        for w in layer:
            decomp[w] = tensor_modules(d, module, [w])
            nxt.update(t for t in decomp[w] if t not in layer_of)
        layer = sorted(nxt)
        k += 1

    pos = {w: i for i, w in enumerate(q.vertices)}
    for i, w in enumerate(q.vertices):
        parts = decomp.get(w) or tensor_modules(d, module, [w])
        for t, mult in sorted(parts.items()):
            if t in pos:
                q.arrows[(i, pos[t])] = mult

    alt, _ = alt_sym_square(d, module)
    for i, w in enumerate(q.vertices):
        if i in q.boundary or not alt:
            continue
        for t, count in sorted(tensor_modules(d, alt, [w]).items()):
            if t in pos:
                q.relations.setdefault(pos[t], []).append((i, count))
            else:
                q.outside_relations.setdefault(i, []).append((t, count))
    q.relations = dict(sorted(q.relations.items()))
    return q


class Rule(str, enum.Enum):
    FIVE_COMPONENTS = "FiveComponents"
    MULTIPLICITY_THREE = "MultiplicityThree"
    TWO_PLUS_ONE = "TwoPlusOne"
    LARGE_MODULE = "LargeModule"
    BIG_RADICAL_DIM = "BigRadicalDim"
    DECOMPOSABLE_TWO_DIM = "DecomposableTwoDim"


@dataclass(frozen=True)
class WildWitness:
    rule: Rule
    at_vertex: Weight
    detail: str
    components: tuple[tuple[Weight, int], ...] = ()
    shared: Weight | None = None
    partner: Weight | None = None

    def to_dict(self) -> dict:
        out = {"rule": self.rule.value, "at_vertex": list(self.at_vertex), "detail": self.detail}
        if self.components:
            out["components"] = [{"highest_weight": list(w), "multiplicity": k} for w, k in self.components]
        if self.partner is not None:
            out["shared"] = list(self.shared)
            out["partner"] = list(self.partner)
        return out


def _sb_rule(parts: ModuleDesc) -> Rule | None:
    """Which of the three small-subquiver patterns ``I (x) M`` shows, if any."""
    mults = sorted(parts.values(), reverse=True)
    if len(parts) >= 5:
        return Rule.FIVE_COMPONENTS
    if mults and mults[0] >= 3:
        return Rule.MULTIPLICITY_THREE
    if mults and mults[0] == 2 and len(parts) >= 2:
        return Rule.TWO_PLUS_ONE
    return None


def detect_wild(
    d: CartanDatum,
    module,
    window: int = 8,
    *,
    disabled: Iterable[Rule | str] = (),
) -> WildWitness | None:
    """Look for a wildness witness for ``L |x I``.

    Dominant ``M`` are visited shell by shell (max coordinate 0, 1, ...,
    ``window``), so a witness found at some window is found again, unchanged,
    at every larger window.  ``disabled`` switches rules off (for tests).
    ``None`` only means nothing fired inside the window.
    """
    if window < 1:
        raise ValueError("window must be >= 1")
    module = ModuleDesc(module) if not isinstance(module, ModuleDesc) else module
    for w in module:
        d.check_dominant(w)
    off = {Rule(r) for r in disabled}
    zero = (0,) * d.rank
    dim = module_dim(d, module)
    count = sum(module.values())
    if dim >= 3 and Rule.BIG_RADICAL_DIM not in off:
        return WildWitness(Rule.BIG_RADICAL_DIM, zero, f"dim I = {dim} >= 3")
    if dim == 2 and count == 2 and Rule.DECOMPOSABLE_TWO_DIM not in off:
        return WildWitness(
            Rule.DECOMPOSABLE_TWO_DIM, zero, f"I = {module!r} splits into two one-dimensional summands"
        )

    decomp: dict[Weight, ModuleDesc] = {}
    seen: list[Weight] = []
    by_shell: dict[int, list[Weight]] = {}
    for w in dominant_box(d.rank, window):
        by_shell.setdefault(max(w, default=0), []).append(w)

    for shell in range(window + 1):
        fresh = by_shell.get(shell, [])
        for m in fresh:
            decomp[m] = tensor_modules(d, module, [m])
            rule = _sb_rule(decomp[m])
            if rule is not None and rule not in off:
                comps = tuple(decomp[m].sorted_items())
                return WildWitness(rule, m, f"I (x) {_fmt(m)} = {decomp[m]!r}", comps)
        seen.extend(fresh)
        if Rule.LARGE_MODULE in off:
            continue
        hit = _large_module(decomp, seen, set(fresh))
        if hit is not None:
            m, c, n = hit
            comps = tuple(decomp[m].sorted_items())
            return WildWitness(
                Rule.LARGE_MODULE,
                m,
                f"I (x) {_fmt(m)} = {decomp[m]!r}; {_fmt(c)} also occurs in I (x) {_fmt(n)}",
                comps,
                c,
                n,
            )
    return None


def _large_module(decomp, seen, fresh):
    """First (M, shared component, partner N) among pairs that involve a fresh vertex."""
    for m in seen:
        parts = decomp[m]
        if sum(parts.values()) < 3:
            continue
        for n in seen:
            if n == m or (m not in fresh and n not in fresh):
                continue
            for c, _ in parts.sorted_items():
                if c in decomp[n]:
                    return m, c, n
    return None


def recheck(d: CartanDatum, module, w: WildWitness) -> bool:
    """Re-derive the arithmetic behind a witness from scratch."""
    module = ModuleDesc(module) if not isinstance(module, ModuleDesc) else module
    dim = module_dim(d, module)
    if w.rule is Rule.BIG_RADICAL_DIM:
        return dim >= 3
    if w.rule is Rule.DECOMPOSABLE_TWO_DIM:
        return dim == 2 and sum(module.values()) == 2
    parts = tensor_modules(d, module, [w.at_vertex])
    if w.rule is Rule.LARGE_MODULE:
        return (
            sum(parts.values()) >= 3
            and w.partner != w.at_vertex
            and w.shared in parts
            and w.shared in tensor_modules(d, module, [w.partner])
        )
    mults = list(parts.values())
    if w.rule is Rule.FIVE_COMPONENTS:
        return len(parts) >= 5
    if w.rule is Rule.MULTIPLICITY_THREE:
        return max(mults) >= 3
    return 2 in mults and len(parts) >= 2


def emit_dot(q: QuiverWindow | None) -> str:
    """Graphviz text; byte-stable for equal windows."""
    lines = ["digraph K_I {"]
    if q is not None and q.vertices:
        lines.append("  node [shape=circle];")
        for i, w in enumerate(q.vertices):
            label = _fmt(w)
            rel = q.relation_count(i)
            if rel:
                label += f"\\nrel={rel}"
            attrs = [f'label="{label}"']
            if i in q.boundary:
                attrs.append("style=dashed")
            lines.append(f"  n{i} [{', '.join(attrs)}];")
        for (s, t), k in sorted(q.arrows.items()):
            lines.append(f'  n{s} -> n{t} [label="{k}"];')
    lines.append("}")
    return "\n".join(lines) + "\n"
