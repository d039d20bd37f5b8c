from collections import Counter

import pytest

from lietame.quiver import Rule, build_quiver, detect_wild, emit_dot, recheck
from lietame.weights import CartanDatum, NonDominant, alt_sym_square, tensor_modules

A1 = CartanDatum.parse("A1")
A2 = CartanDatum.parse("A2")


def test_chain_depth_three():
    q = build_quiver(A1, {(1,): 1}, [(0,)], 3)
    assert q.vertices == [(0,), (1,), (2,), (3,)]
    assert q.boundary == {3}
    assert sorted(q.arrows) == [(0, 1), (1, 0), (1, 2), (2, 1), (2, 3), (3, 2)]
    assert all(q.relation_count(i) == 1 for i in range(3))
    text = emit_dot(q)
    assert text.count("->") == 6
    assert text.count(" [label=") == 10  # 4 nodes + 6 edges


def test_trivial_module_gives_a_loop():
    q = build_quiver(A1, {(0,): 1}, [(0,)], 1)
    assert q.vertices == [(0,)]
    assert q.arrows == {(0, 0): 1}
    text = emit_dot(q)
    assert "n0 -> n0" in text and text.count("->") == 1


def test_adjoint_seed_four():
    q = build_quiver(A1, {(2,): 1}, [(4,)], 1)
    assert q.out_arrows(q.index((4,))) == Counter({(2,): 1, (4,): 1, (6,): 1})


def test_depth_zero_and_errors():
    q = build_quiver(A1, {(1,): 1}, [(3,)], 0)
    assert q.vertices == [(3,)] and q.boundary == {0} and not q.arrows
    with pytest.raises(NonDominant):
        build_quiver(A1, {(1,): 1}, [(-1,)], 2)
    with pytest.raises(ValueError):
        build_quiver(A1, {(1,): 1}, [(0,)], -1)


def test_empty_dot():
    assert emit_dot(None).split() == ["digraph", "K_I", "{", "}"]


@pytest.mark.parametrize(
    "t, module, seed, depth",
    [("A1", {(2,): 1}, (0,), 4), ("A2", {(1, 0): 1}, (0, 0), 3), ("B2", {(0, 1): 1}, (0, 0), 3), ("A1", {(0,): 2}, (1,), 2)],
)
def test_arrow_and_relation_recount(t, module, seed, depth):
    d = CartanDatum.parse(t)
    q = build_quiver(d, module, [seed], depth)
    alt, _ = alt_sym_square(d, module)
    incoming = Counter()
    for t_idx, lst in q.relations.items():
        for s, k in lst:
            incoming[s] += k
    for i, w in enumerate(q.vertices):
        if i in q.boundary:
            continue
        assert q.out_arrows(i) == Counter(tensor_modules(d, module, [w]))
        expected = sum(tensor_modules(d, alt, [w]).values())
        outside = sum(k for _, k in q.outside_relations.get(i, ()))
        assert incoming[i] + outside == expected


def test_vertex_order_deterministic():
    a = build_quiver(A2, {(1, 0): 1}, [(0, 0)], 4)
    b = build_quiver(A2, {(1, 0): 1}, [(0, 0)], 4)
    assert a.vertices == b.vertices
    assert emit_dot(a) == emit_dot(b)
    # each BFS layer is in lexicographic order
    assert a.vertices[1:2] == [(1, 0)]


def test_detect_wild_examples():
    w = detect_wild(A1, {(2,): 1})
    assert w.rule is Rule.BIG_RADICAL_DIM
    assert detect_wild(A1, {(0,): 2}).rule is Rule.DECOMPOSABLE_TWO_DIM
    for window in (1, 3, 8, 12):
        assert detect_wild(A1, {(1,): 1}, window) is None
    a1a1 = CartanDatum.parse("A1xA1")
    assert detect_wild(a1a1, {(1, 0): 1}) is None
    with pytest.raises(ValueError):
        detect_wild(A1, {(1,): 1}, 0)


def test_pattern_rules_fire_when_dimension_rule_is_off():
    off = [Rule.BIG_RADICAL_DIM, Rule.LARGE_MODULE]
    # A1 (4) (x) (4) has five components
    w = detect_wild(A1, {(4,): 1}, disabled=off)
    assert w.rule is Rule.FIVE_COMPONENTS and recheck(A1, {(4,): 1}, w)
    # A2 adjoint: (1,1) appears twice in (1,1) (x) (1,1), next to other components
    w = detect_wild(A2, {(1, 1): 1}, disabled=off)
    assert w.rule in (Rule.TWO_PLUS_ONE, Rule.FIVE_COMPONENTS) and recheck(A2, {(1, 1): 1}, w)
    w = detect_wild(A1, {(0,): 3}, disabled=off)
    assert w.rule is Rule.MULTIPLICITY_THREE
    assert w.to_dict()["rule"] == "MultiplicityThree"


def test_detect_wild_monotone():
    off = [Rule.BIG_RADICAL_DIM]
    cases = [(A1, {(2,): 1}), (A1, {(3,): 1}), (A2, {(1, 0): 1}), (A1, {(1,): 1, (0,): 1})]
    for d, module in cases:
        first = None
        for window in range(1, 7):
            w = detect_wild(d, module, window, disabled=off)
            if first is not None:
                assert w == first
            first = w
            if w is not None:
                assert recheck(d, module, w)


def test_large_module_witness_shape():
    w = detect_wild(A1, {(2,): 1}, disabled=[Rule.BIG_RADICAL_DIM])
    assert w.rule is Rule.LARGE_MODULE
    assert w.at_vertex == (2,) and w.shared == (2,) and w.partner == (0,)
    d = w.to_dict()
    assert d["partner"] == [0] and d["shared"] == [2]
    assert not recheck(A1, {(1,): 1}, w)
