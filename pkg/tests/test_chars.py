import random
from fractions import Fraction
from itertools import combinations

import pytest

from genlab.chars import (
    Character,
    CharacterModule,
    SubgroupDescriptor,
    hilbert_function,
    kernel_subgroup,
    product_character_codim,
    wI_family_rank,
    zero_estimate_search,
)
from genlab.cyclo import CycloNum
from genlab.errors import HypothesisNotMet, InvalidConfig
from genlab.intmat import rank_rational


def test_character_basics():
    c = Character((1, -2, 0))
    assert c.degree == 3
    assert not c.is_trivial
    assert Character((0, 0)).is_trivial
    with pytest.raises(InvalidConfig):
        Character(())


def test_kernel_subgroup_one_character():
    sub = kernel_subgroup(CharacterModule([(1, 1, 1)]))
    assert sub.dim == 2
    assert sub.ambient_dim == 3
    assert sub.torsion == ()


def test_kernel_subgroup_full_rank():
    sub = kernel_subgroup(CharacterModule([(1, 0), (0, 1)]))
    assert sub.dim == 0


def test_kernel_subgroup_torsion():
    sub = kernel_subgroup(CharacterModule([(2, -2)]))
    assert sub.dim == 1
    assert sub.torsion == (2,)
    # saturated annihilator: the SNF diagonal of it must be all ones
    ann = CharacterModule(list(sub.annihilator))
    assert ann.invariant_factors() == [1]


def test_kernel_dim_plus_rank_is_ambient():
    rng = random.Random(11)
    for _ in range(50):
        l = rng.randint(1, 5)
        g = rng.randint(1, 4)
        gens = [[rng.randint(-6, 6) for _ in range(l)] for _ in range(g)]
        mod = CharacterModule(gens)
        sub = kernel_subgroup(mod)
        assert sub.dim + mod.rank == l


def test_wI_family_rank_disjoint_supports():
    res = wI_family_rank(2, 1, {(0,): (3, 0), (1,): (0, 5)})
    assert res.rank == 2
    assert res.witnesses == ((0,), (1,))
    assert res.counterexample is None


def test_wI_family_rank_random_families():
    rng = random.Random(5)
    for _ in range(100):
        n = rng.randint(2, 6)
        nu = rng.randint(1, n - 1)
        size = n - nu
        choices = {}
        for subset in combinations(range(n), size):
            vec = [Fraction(0)] * n
            while all(v == 0 for v in vec):
                for i in subset:
                    vec[i] = Fraction(rng.randint(-5, 5))
            choices[subset] = vec
        res = wI_family_rank(n, nu, choices)
        assert res.rank >= nu + 1
        assert res.counterexample is None
        assert len(res.witnesses) == nu + 1
        # witnesses independent: exact rank of their vectors
        mat = [choices[s] for s in res.witnesses]
        assert rank_rational(mat) == nu + 1


def test_wI_family_rank_rejects_bad_input():
    with pytest.raises(InvalidConfig):
        wI_family_rank(2, 1, {(0,): (0, 0), (1,): (0, 1)})
    with pytest.raises(InvalidConfig):
        wI_family_rank(2, 1, {(0,): (0, 1), (1,): (0, 1)})
    with pytest.raises(InvalidConfig):
        wI_family_rank(3, 1, {(0, 1): (1, 1, 0)})


def test_product_character_codim_examples():
    zero22 = CharacterModule([], ambient_dim=4)
    assert product_character_codim((1, -1), zero22) == 2
    zero13 = CharacterModule([], ambient_dim=3)
    assert product_character_codim((1,), zero13) == 3
    # relation lattice containing the first product character chi_1 drops
    # the codimension by one; for l=(1,0), chi_1 = x_{00} -> [1,0,0,0]
    chi1 = [1, 0, 0, 0]
    rel = CharacterModule([chi1])
    assert product_character_codim((1, 0), rel) == 1


def test_product_character_codim_zero_vector_rejected():
    with pytest.raises(InvalidConfig):
        product_character_codim((0, 0), CharacterModule([], ambient_dim=4))


def test_product_character_codim_random_zero_lattice():
    rng = random.Random(23)
    for _ in range(50):
        m = rng.randint(1, 5)
        n = rng.randint(1, 5)
        l_vec = [0] * m
        while all(x == 0 for x in l_vec):
            l_vec = [rng.randint(-4, 4) for _ in range(m)]
        zero = CharacterModule([], ambient_dim=m * n)
        assert product_character_codim(l_vec, zero) == n


def test_hilbert_function():
    sub = SubgroupDescriptor(3, ((1, 1, 1),), 2, ())
    assert hilbert_function(sub, 3) == 9
    assert hilbert_function(SubgroupDescriptor(2, (), 0, ()), 7) == 1
    assert hilbert_function(SubgroupDescriptor(2, (), 1, ()), 5) == 5
    with pytest.raises(InvalidConfig):
        hilbert_function(sub, 0)


def test_zero_estimate_fourth_roots():
    i = CycloNum.root_of_unity(4)
    one = CycloNum.from_rational(1)
    res = zero_estimate_search([(i, one), (i * i, one)], 2, 1)
    assert res.found
    assert res.character == (0, 1)
    assert res.cosets == 1
    assert res.cosets * res.hilbert_sub <= res.hilbert_ambient


def test_zero_estimate_single_one():
    res = zero_estimate_search([(CycloNum.from_rational(1),)], 3, 1)
    assert res.found
    assert res.character == (1,)
    assert res.cosets == 1


def test_zero_estimate_diagonal_cube_roots():
    w = CycloNum.root_of_unity(3)
    pts = [(w ** a, w ** a) for a in range(3)]
    res = zero_estimate_search(pts, 1, 1)
    assert res.found
    assert res.character == (1, -1)
    assert res.cosets == 1


def test_zero_estimate_precondition_failure():
    # two generic rational points on a 1-torus: no degree-1 polynomial in
    # one variable vanishes on both, so the hypothesis fails
    with pytest.raises(HypothesisNotMet):
        zero_estimate_search([(Fraction(2),), (Fraction(3),)], 1, 1)
