import random

import pytest
import sympy
from hypothesis import given, settings, strategies as st
from sympy.matrices.normalforms import smith_normal_form as sympy_snf

from toric_syzygy.errors import PreconditionError
from toric_syzygy.gradedmod import betti_numbers, betti_table, free_resolution
from toric_syzygy.toricmcm import (McmCandidate, SimplicialCone, class_group, class_representatives,
                                   enumerate_cuboid_classes, enumerate_singleton_classes,
                                   full_verify, general_position_lines, general_position_module,
                                   in_image_L, mcm_check, smith_normal_form,
                                   splits_line_configuration, symmetry_orbits)

from helpers import random_cone, three_lines

Z3 = SimplicialCone([[1, 0, 1], [0, 1, 1], [-1, -1, 1]])
SMOOTH = SimplicialCone([[1, 0, 0], [0, 1, 0], [0, 0, 1]])


def square_ints(max_n=4):
    return st.integers(1, max_n).flatmap(
        lambda n: st.lists(st.lists(st.integers(-5, 5), min_size=n, max_size=n),
                           min_size=n, max_size=n))


@settings(max_examples=60, deadline=None)
@given(square_ints())
def test_smith_form_matches_sympy(rows):
    D, U, V = smith_normal_form(rows)
    n = len(rows)
    ours = [D[i][i] for i in range(n)]
    theirs = sympy_snf(sympy.Matrix(rows), domain=sympy.ZZ)
    want = [abs(int(theirs[i, i])) for i in range(n)]
    assert ours == want
    # U A V = D with unimodular U, V
    A = sympy.Matrix(rows)
    assert sympy.Matrix(U) * A * sympy.Matrix(V) == sympy.Matrix(D)
    assert abs(sympy.Matrix(U).det()) == 1 and abs(sympy.Matrix(V).det()) == 1


def test_class_groups():
    assert class_group(Z3).invariants == [3]
    assert class_group(SMOOTH).order == 1
    assert class_group(SimplicialCone([[1, 0], [1, 2]])).invariants == [2]


def test_in_image():
    assert in_image_L(Z3, (0, 0, 0))
    assert not in_image_L(Z3, (1, 1, 0))
    assert in_image_L(Z3, Z3.L((1, 0, 0)))
    assert in_image_L(Z3, Z3.L((-2, 3, 1)))


def test_general_position():
    assert betti_table(free_resolution(general_position_module(3, (0, 0, 0), (1, 1, 1)))) == \
        betti_table(free_resolution(three_lines()))
    res = free_resolution(general_position_module(4, (0, 0, 0, 0), (1, 1, 1, 1)))
    assert betti_numbers(res) == [4, 1]
    assert res.terms[1] == [(1, 1, 1, 1)]
    assert not splits_line_configuration(general_position_lines(4), 3)
    with pytest.raises(PreconditionError):
        general_position_module(2, (0, 0), (1, 1))


def test_splitting_detected():
    from toric_syzygy.exactla import Subspace
    lines = [Subspace([v], 2) for v in ([1, 0], [1, 0], [0, 1])]
    assert splits_line_configuration(lines, 2)


def test_mcm_check_examples():
    assert mcm_check(Z3, McmCandidate((1, 1, 0), (2, 2, 1)))
    assert not mcm_check(Z3, McmCandidate((0, 0, 0), (1, 1, 1)))
    for d in [(1, 1, 0), (0, 0, 0), (2, 1, 5)]:
        assert not mcm_check(SMOOTH, McmCandidate(d, tuple(x + 1 for x in d)))


def test_z3_singletons():
    reps = enumerate_singleton_classes(Z3)
    assert len(reps) == 2
    A = class_group(Z3)
    assert sorted(A.class_of(c.i1) for c in reps) == sorted([A.class_of((1, 1, 0)),
                                                            A.class_of((2, 2, 0))])
    assert all(c.shape == (1, 1, 1) for c in reps)


def test_z3_cuboids():
    found = enumerate_cuboid_classes(Z3, 2)
    assert len(found) == 5
    assert sum(1 for c in found if c.shape == (1, 1, 1)) == 2
    assert sorted(c.shape for c in found if c.shape != (1, 1, 1)) == \
        [(1, 1, 2), (1, 2, 1), (2, 1, 1)]
    for c in found:
        assert len(c.cuboid()) <= 2
        v = full_verify(Z3, c)
        assert v["mcm"] and v["witness"] is None and not v["splits"]
    assert [c for c in enumerate_cuboid_classes(Z3, 1)] == enumerate_singleton_classes(Z3)
    assert enumerate_cuboid_classes(SMOOTH, 2) == []


def test_full_verify_rejections():
    v = full_verify(Z3, McmCandidate((0, 0, 0), (1, 1, 1)))
    assert not v["mcm"] and in_image_L(Z3, v["witness"])
    v = full_verify(SMOOTH, McmCandidate((1, 1, 0), (2, 2, 1)))
    assert not v["mcm"] and v["witness"] is not None


def test_symmetry_orbits_partition():
    found = enumerate_cuboid_classes(Z3, 2)
    orbits = symmetry_orbits(Z3, found)
    assert sorted(len(o) for o in orbits) == [1, 1, 3]
    flat = [c for o in orbits for c in o]
    assert len(flat) == len(found) and set(flat) == set(found)
    (big,) = [o for o in orbits if len(o) == 3]
    assert sorted(c.shape for c in big) == [(1, 1, 2), (1, 2, 1), (2, 1, 1)]


def test_random_cones():
    rng = random.Random(41)
    for _ in range(6):
        cone = random_cone(rng, rng.choice([3, 4]))
        A = class_group(cone)
        assert A.order == abs(cone.det)
        assert len(class_representatives(cone)) == A.order
        sing = enumerate_singleton_classes(cone)
        assert len(sing) == A.order - 1
        for c in sing:
            assert mcm_check(cone, c) == full_verify(cone, c)["mcm"]
        # the trivial class never works
        z = McmCandidate((0,) * cone.d, (1,) * cone.d)
        assert not mcm_check(cone, z) and not full_verify(cone, z)["mcm"]


def test_cone_validation():
    with pytest.raises(PreconditionError):
        SimplicialCone([[2, 0], [0, 1]])
    with pytest.raises(PreconditionError):
        SimplicialCone([[1, 0], [1, 0]])
    with pytest.raises(PreconditionError):
        McmCandidate((0, 0), (0, 1))
