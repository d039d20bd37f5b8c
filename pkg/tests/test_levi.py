import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from lietame.levi import is_direct_summand, levi_subalgebra
from lietame.lie import NotComplementary, abelian, change_basis, full, is_subalgebra, killing_restricted, radical
from lietame.linalg import Subspace, determinant, subspace_intersect
from lietame.named import build_named

from conftest import random_invertible


def assert_levi(alg, s):
    r = radical(alg)
    assert is_subalgebra(alg, s)
    assert s.dim + r.dim == alg.dim
    assert subspace_intersect(s, r).dim == 0
    if s.dim:
        assert determinant(killing_restricted(alg, s)) != 0


def test_semisimple_is_its_own_levi():
    sl3 = build_named("sl(3)")
    assert levi_subalgebra(sl3) == full(sl3)


def test_solvable_has_zero_levi():
    heis = build_named("heisenberg")
    assert levi_subalgebra(heis).dim == 0


def test_skewed_semidirect(rng):
    alg = build_named("semidirect(sl(2), 1)")
    skew = change_basis(alg, random_invertible(5, rng))
    s = levi_subalgebra(skew)
    assert s.dim == 3
    assert_levi(skew, s)


def test_nonabelian_radical_needs_correction(rng):
    # radical of the Heisenberg semidirect product has a nonzero derived series step
    alg = build_named("heisenberg_semidirect(sl(2), 1)")
    for _ in range(3):
        skew = change_basis(alg, random_invertible(alg.dim, rng))
        assert_levi(skew, levi_subalgebra(skew))


modules = st.sampled_from(["0", "1", "2", "3", "1+0", "1+1", "2+0", "0+0"])


@settings(max_examples=25)
@given(modules, st.integers(0, 10**6))
def test_random_semidirect_products(module, seed):
    alg = build_named(f"semidirect(sl(2), {module})")
    skew = change_basis(alg, random_invertible(alg.dim, random.Random(seed)))
    assert_levi(skew, levi_subalgebra(skew))


def test_direct_summand_examples():
    gl2 = build_named("direct_sum(sl(2), abelian(1))")
    s = Subspace.span([[1, 0, 0, 0], [0, 1, 0, 0], [0, 0, 1, 0]], 4)
    z = Subspace.span([[0, 0, 0, 1]], 4)
    assert is_direct_summand(gl2, s, z)

    alg = build_named("semidirect(sl(2), 1)")
    s = Subspace.span([[1, 0, 0, 0, 0], [0, 1, 0, 0, 0], [0, 0, 1, 0, 0]], 5)
    v = Subspace.span([[0, 0, 0, 1, 0], [0, 0, 0, 0, 1]], 5)
    assert not is_direct_summand(alg, s, v)

    a2 = abelian(2)
    assert is_direct_summand(a2, Subspace.span([[1, 0]], 2), Subspace.span([[0, 1]], 2))
    with pytest.raises(NotComplementary):
        is_direct_summand(a2, Subspace.span([[1, 0]], 2), Subspace.span([[2, 0]], 2))
