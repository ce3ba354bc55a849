import random

import pytest

from toric_syzygy.arrangement import (Arrangement, beta, beta_invariant, beta_whitney,
                                      essentialize, intersection_lattice, predicted_betti,
                                      predicted_local_cohom, reflexive_model, whitney)
from toric_syzygy.errors import PreconditionError
from toric_syzygy.gradedmod import betti_table, free_resolution, from_filtrations
from toric_syzygy.localcohom import point_local_cohom_table

from helpers import a2_arrangement, random_arrangement, three_lines


def generic_lines(t):
    return Arrangement([[1, k] for k in range(t)], [(0, 1)] * t)


def test_two_lines_lattice():
    L = intersection_lattice(Arrangement([[1, 0], [0, 1]], [(0, 1), (0, 1)]))
    assert sorted(X.dim for X in L) == [0, 1, 1, 2]


def test_generic_planes_boolean():
    a = Arrangement([[1, 0, 0], [0, 1, 0], [0, 0, 1]], [(0, 1)] * 3)
    L = intersection_lattice(a)
    assert len(L) == 8
    assert beta(L, L.top) == 0
    # E at (0,0,1) is the line H_1 ∩ H_2, and so on: free on the three axes
    assert predicted_betti(a) == {(0, (), (0, 0, 1)): 1, (0, (), (0, 1, 0)): 1,
                                  (0, (), (1, 0, 0)): 1}
    assert betti_table(free_resolution(a.module())) == predicted_betti(a)


def test_repeated_normal():
    a = Arrangement([[1, 0], [2, 0], [0, 1]], [(0, 1), (0, 2), (0, 1)])
    L = intersection_lattice(a)
    assert len(L) == 4                              # duplicate collapses
    b = Arrangement([[1, 0], [0, 1]], [(0, 1), (0, 1)])
    Lb = intersection_lattice(b)
    assert sorted(beta(L, X) for X in L if X.dim) == sorted(beta(Lb, X) for X in Lb if X.dim)
    assert betti_table(free_resolution(a.module())) == predicted_betti(a)


def test_hyperplane_beta_is_one():
    for t in range(2, 6):
        L = intersection_lattice(generic_lines(t))
        for X in L.of_dim(1):
            assert beta(L, X) == 1


def test_generic_lines():
    for t in range(2, 7):
        a = generic_lines(t)
        L = intersection_lattice(a)
        assert beta(L, L.top) == t - 2
        assert beta_whitney(L, 1, L.top) == -(t - 2)
        want = {(0, (), a.degree(H)): 1 for H in a.hyperplanes}
        if t > 2:
            want[(1, (), a.degree(L.top))] = t - 2
        assert predicted_betti(a) == want
        assert betti_table(free_resolution(a.module())) == want


def test_three_lines_match_fixture():
    a = Arrangement([[0, 1], [1, 0], [1, -1]], [(0, 1)] * 3)
    assert betti_table(free_resolution(a.module())) == betti_table(free_resolution(three_lines()))


def test_beta_whitney_matches_chains():
    rng = random.Random(31)
    for _ in range(25):
        L = intersection_lattice(random_arrangement(rng, max_rank=4, max_h=6, extra=False))
        for X in L:
            for k in range(X.dim):
                sign = (-1) ** (X.dim - k)
                assert beta_whitney(L, k, X) == sign * beta_invariant(L, k, X)
        # whitney numbers of the diagonal are the element counts
        for d in range(L.top.dim + 1):
            assert whitney(L, d, d) == len(L.of_dim(d))


def test_betti_matches_prediction():
    rng = random.Random(32)
    for _ in range(15):
        a = random_arrangement(rng, max_rank=3, max_h=5)
        assert betti_table(free_resolution(a.module())) == predicted_betti(a)


def test_non_essential():
    a = Arrangement([[1, 0, 0], [0, 1, 0], [1, 1, 0]], [(0, 1)] * 3)
    ess, dc = essentialize(a)
    assert dc == 1 and ess.r == 2 and ess.is_essential()
    assert not a.is_essential()
    assert betti_table(free_resolution(a.module())) == predicted_betti(a)


def test_local_cohom_prediction():
    rng = random.Random(33)
    cases = [a2_arrangement(), generic_lines(3), generic_lines(4)]
    cases += [random_arrangement(rng, max_rank=3, max_h=5) for _ in range(10)]
    for a in cases:
        pred, G = predicted_local_cohom(a)
        t = point_local_cohom_table(a.module())
        for d in G:
            assert t.at(d) == pred[d], d
        if t.G is not None:
            for d in t.G:
                assert t.values[d] == pred.get(d, t.values[d])


def test_three_lines_local_cohom_prediction():
    a = Arrangement([[0, 1], [1, 0], [1, -1]], [(0, 1)] * 3)
    pred, G = predicted_local_cohom(a)
    assert pred[(0, 0, 0)] == {2: 1}
    assert pred[(-1, -1, -1)] == {3: 2}
    assert pred[(-1, 0, 0)] == {}             # one line left out: nothing
    assert pred[(-1, -1, 0)] == {3: 1}        # only one line meets d: V/H


def test_deletion_counts():
    # generic lines: deleting one line lowers beta of the top by one
    for t in range(3, 7):
        L = intersection_lattice(generic_lines(t))
        L2 = intersection_lattice(generic_lines(t - 1))
        assert beta(L, L.top) - beta(L2, L2.top) == 1


def test_reflexive_model():
    fd = reflexive_model([[[1, 0]], [[0, 1]], [[1, 1]]], 2)
    m = from_filtrations(fd)
    assert betti_table(free_resolution(m)) == betti_table(free_resolution(three_lines()))


def test_zero_normal_rejected():
    with pytest.raises(PreconditionError):
        Arrangement([[0, 0]], [(0, 1)])
