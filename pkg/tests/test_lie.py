import random
from fractions import Fraction as F

import pytest
from hypothesis import given
from hypothesis import strategies as st

from lietame.levi import levi_subalgebra
from lietame.lie import (
    JacobiViolation,
    LieError,
    StructureConstants,
    abelian,
    bracket_spaces,
    center,
    change_basis,
    derived_subalgebra,
    direct_sum,
    from_table,
    full,
    is_ideal,
    is_semisimple,
    is_solvable,
    killing,
    killing_form,
    quotient_module_action,
    radical,
    simple_ideal_decomposition,
    transform_subspace,
    validate,
)
from lietame.linalg import Subspace, matmul, subspace_sum
from lietame.named import CORPUS, build_named

from conftest import random_invertible

E, H, FF = [1, 0, 0], [0, 1, 0], [0, 0, 1]


@pytest.fixture(scope="module")
def sl2():
    return build_named("sl(2)")


def test_sl2_table(sl2):
    assert sl2.names == ("e", "h", "f")
    assert sl2.bracket(E, FF) == H
    assert sl2.bracket(H, E) == [2, 0, 0]
    assert sl2.bracket(H, FF) == [0, 0, -2]


def test_jacobi_violation_residual():
    bad = StructureConstants.from_brackets(["e", "h", "f"], {(1, 0): {0: 3}, (1, 2): {2: -2}, (0, 2): {1: 1}})
    with pytest.raises(JacobiViolation) as info:
        validate(bad)
    # [[e,h],f] + [[h,f],e] + [[f,e],h] = -3h + 2h + 0
    assert info.value.triple == (0, 1, 2)
    assert info.value.residual == [0, -1, 0]


def test_from_brackets_rejects_nonzero_self_bracket_and_conflicts():
    with pytest.raises(LieError):
        StructureConstants.from_brackets(["x", "y"], {(0, 0): {1: 1}})
    with pytest.raises(LieError):
        StructureConstants.from_brackets(["x", "y"], {(0, 1): {1: 1}, (1, 0): {1: 1}})
    # consistent antisymmetric duplicate is fine
    StructureConstants.from_brackets(["x", "y"], {(0, 1): {1: 1}, (1, 0): {1: -1}})


def test_empty_table_is_abelian():
    a = abelian(4)
    assert a.bracket([1, 2, 3, 4], [4, 3, 2, 1]) == [0] * 4
    assert killing_form(a) == [[0] * 4 for _ in range(4)]
    assert center(a) == full(a)


def test_killing_sl2(sl2):
    k = killing_form(sl2)
    assert k == [[0, 0, 4], [0, 8, 0], [4, 0, 0]]


def test_killing_block_diagonal(sl2):
    s = direct_sum(sl2, sl2)
    k = killing_form(s)
    for i in range(6):
        for j in range(6):
            if (i < 3) != (j < 3):
                assert k[i][j] == 0


def test_derived_and_solvable(sl2):
    two = build_named("twodim_nonabelian")
    assert derived_subalgebra(two) == Subspace.span([[0, 1]], 2)
    assert is_solvable(two) and is_solvable(abelian(3))
    assert derived_subalgebra(sl2) == full(sl2)
    assert not is_solvable(sl2)
    assert derived_subalgebra(abelian(2)).dim == 0


def test_radical_examples(sl2):
    assert radical(sl2).dim == 0
    two = build_named("twodim_nonabelian")
    assert radical(two) == full(two)
    gl2 = build_named("direct_sum(sl(2), abelian(1))")
    assert radical(gl2) == Subspace.span([[0, 0, 0, 1]], 4)
    assert radical(build_named("semidirect(sl(2), 1)")).dim == 2


def test_center_examples(sl2):
    assert center(sl2).dim == 0
    heis = build_named("heisenberg")
    assert center(heis) == Subspace.span([[0, 0, 1]], 3)


def test_simple_ideals(sl2):
    assert simple_ideal_decomposition(sl2) == [full(sl2)]
    two = simple_ideal_decomposition(direct_sum(sl2, sl2))
    assert sorted(i.dim for i in two) == [3, 3]
    assert simple_ideal_decomposition(build_named("sl(3)"))[0].dim == 8


def test_simple_ideals_skewed(rng):
    alg = direct_sum(build_named("sl(2)"), build_named("sl(3)"))
    alg = change_basis(alg, random_invertible(alg.dim, rng))
    parts = simple_ideal_decomposition(alg)
    assert sorted(p.dim for p in parts) == [3, 8]
    total = parts[0]
    for p in parts[1:]:
        total = subspace_sum(total, p)
    assert total.dim == alg.dim
    assert bracket_spaces(alg, parts[0], parts[1]).dim == 0
    assert all(is_ideal(alg, p) for p in parts)


def test_quotient_action_natural_module():
    alg = build_named("semidirect(sl(2), 1)")
    levi = levi_subalgebra(alg)
    m, mats = quotient_module_action(alg, levi, radical(alg))
    assert m == 2
    # levi basis is e, h, f in that order
    assert mats == [[[0, 1], [0, 0]], [[1, 0], [0, -1]], [[0, 0], [1, 0]]]


def test_quotient_action_trivial_cases():
    gl2 = build_named("direct_sum(sl(2), abelian(1))")
    _, mats = quotient_module_action(gl2, levi_subalgebra(gl2), radical(gl2))
    assert all(m == [[0]] for m in mats)
    alg = direct_sum(build_named("sl(3)"), abelian(2))
    _, mats = quotient_module_action(alg, levi_subalgebra(alg), radical(alg))
    assert all(x == 0 for m in mats for row in m for x in row)


def test_quotient_action_is_homomorphism(rng):
    for recipe in ("semidirect(sl(2), 2)", "direct_sum(sl(3), semidirect(sl(2), 1))"):
        alg = build_named(recipe)
        alg = change_basis(alg, random_invertible(alg.dim, rng))
        levi = levi_subalgebra(alg)
        _, mats = quotient_module_action(alg, levi, radical(alg))
        basis = levi.basis
        for i in range(len(basis)):
            for j in range(len(basis)):
                br = alg.bracket(basis[i], basis[j])
                co = levi.coordinates(br)
                lhs = [[sum((c * m[r][s] for c, m in zip(co, mats)), F(0)) for s in range(len(mats[0]))] for r in range(len(mats[0]))]
                a, b = mats[i], mats[j]
                ab, ba = matmul(a, b), matmul(b, a)
                rhs = [[x - y for x, y in zip(r1, r2)] for r1, r2 in zip(ab, ba)]
                assert lhs == rhs


@pytest.mark.parametrize("recipe", sorted(CORPUS))
def test_radical_covariant(recipe):
    alg = build_named(recipe)
    p = random_invertible(alg.dim, random.Random(recipe))
    moved = change_basis(alg, p)
    r = radical(alg)
    assert radical(moved) == transform_subspace(r, p)
    assert is_ideal(alg, r) and is_solvable(alg, r)


@given(st.lists(st.integers(-3, 3), min_size=24, max_size=24))
def test_killing_invariant(coords):
    alg = build_named("semidirect(sl(2), 1)")
    x, y, z = coords[:5], coords[5:10], coords[10:15]
    assert killing(alg, alg.bracket(x, y), z) + killing(alg, y, alg.bracket(x, z)) == 0


def test_semisimple_flags(sl2):
    assert is_semisimple(sl2)
    assert is_semisimple(build_named("so3"))
    assert not is_semisimple(build_named("direct_sum(sl(2), abelian(1))"))
    assert is_semisimple(abelian(0))


def test_from_table_validates():
    with pytest.raises(JacobiViolation):
        # [x,y]=y, [x,z]=z, [y,z]=x breaks Jacobi
        from_table(["x", "y", "z"], {(0, 1): {1: 1}, (0, 2): {2: 1}, (1, 2): {0: 1}})
