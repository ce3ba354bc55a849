"""Fixture generators and independent oracles shared by the test files.

The oracles only use the graded pieces E_c and the multiplication maps, never
the lattice machinery: Betti numbers come from Koszul homology and local
cohomology at the fixed point from the Čech complex.
"""
import itertools
import json
import os
import random
from fractions import Fraction

from toric_syzygy.arrangement import Arrangement
from toric_syzygy.exactla import QQ, Matrix, Subspace, intersect, rank, sum_subspaces
from toric_syzygy.gradedmod import FiltrationData, from_box, from_filtrations, from_monomial_ideal
from toric_syzygy.lattice import POS_INF, mask
from toric_syzygy.serialize import parse_arrangement_file, parse_filtration_file
from toric_syzygy.toricmcm import SimplicialCone, general_position_module, _det

HERE = os.path.dirname(__file__)


def fixture_path(name):
    return os.path.join(HERE, "fixtures", name)


def load_json(name):
    with open(fixture_path(name), encoding="utf-8") as f:
        return json.load(f)


def three_lines():
    return from_filtrations(parse_filtration_file(load_json("three_lines.json")))


def artinian():
    """S/(x^2, xy, y^2), given by its graded pieces on the box [0, 2]^2."""
    one = Matrix.identity(1, QQ)
    dims = {(0, 0): 1, (1, 0): 1, (0, 1): 1}
    maps = {((0, 0), 0): one, ((0, 0), 1): one,
            ((1, 0), 0): Matrix.zeros(0, 1, QQ), ((1, 0), 1): Matrix.zeros(0, 1, QQ),
            ((0, 1), 0): Matrix.zeros(0, 1, QQ), ((0, 1), 1): Matrix.zeros(0, 1, QQ)}
    return from_box((0, 0), (2, 2), dims, maps)


def a2_arrangement():
    return parse_arrangement_file(load_json("arrangement_a2.json"))


def rand_rational(rng, size=3):
    num = rng.randint(-size, size)
    den = rng.randint(1, size)
    return Fraction(num, den)


def random_vectors(rng, k, r):
    return [[rand_rational(rng) for _ in range(r)] for _ in range(k)]


# trivial-intersection configurations

def random_trivial_config(rng, max_t=4, max_r=4, max_extra=1):
    """V_1..V_t pairwise meeting in 0 and spanning K^r, each with a nonempty
    block of coordinates. Returns (FiltrationData, expected Betti table)."""
    while True:
        r = rng.randint(1, max_r)
        t = rng.randint(1, max_t)
        dims = [rng.randint(1, r) for _ in range(t)]
        if t > 1 and any(a + b > r for a, b in itertools.combinations(dims, 2)):
            continue
        spaces = [Subspace(random_vectors(rng, d, r), r, QQ) for d in dims]
        if any(V.dim != d for V, d in zip(spaces, dims)):
            continue
        if any(intersect(a, b).dim for a, b in itertools.combinations(spaces, 2)):
            continue
        total = Subspace.zero(r, QQ)
        for V in spaces:
            total = sum_subspaces(total, V)
        if total.dim != r:
            continue
        break
    n = t + rng.randint(0, max_extra)
    blocks = list(range(t)) + [rng.randrange(t) for _ in range(n - t)]
    rng.shuffle(blocks)
    i1 = [rng.randint(-2, 2) for _ in range(n)]
    i2 = [a + rng.randint(1, 3) for a in i1]
    V = Subspace.full(r, QQ)
    filts = []
    for k in range(n):
        W = spaces[blocks[k]]
        filts.append([(i1[k], W), (i2[k], V)] if W.dim < r else [(i1[k], V)])
    expected = {}
    for l, W in enumerate(spaces):
        c = tuple(i1[k] if blocks[k] == l else i2[k] for k in range(n))
        expected[(0, (), c)] = expected.get((0, (), c), 0) + W.dim
    kern = sum(dims) - r
    if kern:
        expected[(1, (), tuple(i2))] = kern
    return FiltrationData(r, filts, QQ), expected


# arrangements

def random_arrangement(rng, max_rank=4, max_h=6, extra=True):
    r = rng.randint(1, max_rank)
    h = rng.randint(1, max_h)
    normals = []
    seen = []
    tries = 0
    while len(normals) < h and tries < 200:
        tries += 1
        u = [rng.randint(-2, 2) for _ in range(r)]
        if all(x == 0 for x in u):
            continue
        line = Subspace([u], r, QQ)
        if line in seen:
            continue
        seen.append(line)
        normals.append(u)
    shifts = []
    for _ in normals:
        i = rng.randint(-2, 2)
        shifts.append((i, i + rng.randint(1, 3)))
    ex = [rng.randint(-1, 1) for _ in range(rng.randint(0, 1))] if extra else []
    return Arrangement(normals, shifts, ex, QQ, ambient=r)


# cones

def random_cone(rng, d, min_det=2, max_det=12):
    while True:
        rays = [[rng.randint(-2, 2) for _ in range(d)] for _ in range(d)]
        from math import gcd
        ok = True
        for r in rays:
            g = 0
            for x in r:
                g = gcd(g, x)
            if g != 1:
                ok = False
        if not ok:
            continue
        D = abs(_det(rays))
        if min_det <= D <= max_det:
            return SimplicialCone(rays)


# oracles

def _unit(n, J):
    return tuple(1 if k in J else 0 for k in range(n))


def koszul_betti(m, c):
    """{i: β_i(c)} from the Koszul complex K(x_1..x_n; E) in degree c."""
    n = m.n
    F = m.field
    terms = []
    for i in range(n + 1):
        terms.append([J for J in itertools.combinations(range(n), i)])
    dims = {}
    for i in range(n + 1):
        for J in terms[i]:
            dims[J] = m.dim_at(tuple(x - e for x, e in zip(c, _unit(n, J))))
    sizes = [sum(dims[J] for J in terms[i]) for i in range(n + 1)]
    mats = []
    for i in range(1, n + 1):
        # d_i: K_i -> K_{i-1}, e_J ⊗ v -> Σ ± e_{J-j} ⊗ x_j v
        rows = [[F(0)] * sizes[i] for _ in range(sizes[i - 1])]
        off_t = {}
        pos = 0
        for K in terms[i - 1]:
            off_t[K] = pos
            pos += dims[K]
        pos = 0
        for J in terms[i]:
            dJ = dims[J]
            src = tuple(x - e for x, e in zip(c, _unit(n, J)))
            for a, j in enumerate(J):
                K = J[:a] + J[a + 1:]
                if not dims[K] or not dJ:
                    continue
                tgt = tuple(x - e for x, e in zip(c, _unit(n, K)))
                M = m.map_at(src, tgt)
                sgn = -1 if a % 2 else 1
                for r_ in range(M.nrows):
                    for s in range(M.ncols):
                        if M[r_, s] != 0:
                            rows[off_t[K] + r_][pos + s] += sgn * M[r_, s]
            pos += dJ
        mats.append(Matrix(rows, sizes[i], F))
    ranks = [0] + [rank(a) if a.nrows and a.ncols else 0 for a in mats] + [0]
    out = {}
    for i in range(n + 1):
        h = sizes[i] - ranks[i] - ranks[i + 1]
        if h:
            out[i] = h
    return out


def cech_local_cohom(m, d):
    """{i: dim H^i_x(E)_d} from the Čech complex ⊕_{|I|=i} E_{x_I} in degree d."""
    n = m.n
    F = m.field
    terms = [list(itertools.combinations(range(n), i)) for i in range(n + 1)]
    degs = {I: mask(d, I, POS_INF) for i in range(n + 1) for I in terms[i]}
    dims = {I: m.dim_at(degs[I]) for I in degs}
    sizes = [sum(dims[I] for I in terms[i]) for i in range(n + 1)]
    mats = []
    for i in range(n):
        rows = [[F(0)] * sizes[i] for _ in range(sizes[i + 1])]
        off = {}
        pos = 0
        for J in terms[i + 1]:
            off[J] = pos
            pos += dims[J]
        pos = 0
        for I in terms[i]:
            for j in range(n):
                if j in I or not dims[I]:
                    continue
                J = tuple(sorted(I + (j,)))
                if not dims[J]:
                    continue
                sgn = -1 if J.index(j) % 2 else 1
                M = m.map_at(degs[I], degs[J])
                for r_ in range(M.nrows):
                    for s in range(M.ncols):
                        if M[r_, s] != 0:
                            rows[off[J] + r_][pos + s] += sgn * M[r_, s]
            pos += dims[I]
        mats.append(Matrix(rows, sizes[i], F))
    ranks = [0] + [rank(a) if a.nrows and a.ncols else 0 for a in mats] + [0]
    out = {}
    for i in range(n + 1):
        h = sizes[i] - ranks[i] - ranks[i + 1]
        if h:
            out[i] = h
    return out


def random_degree(rng, lo, hi):
    return tuple(rng.randint(a, b) for a, b in zip(lo, hi))


def module_fixtures(seed=0, count=20):
    """A fixed list of finitely generated modules of assorted kinds."""
    rng = random.Random(seed)
    out = [("three_lines", three_lines()), ("artinian", artinian()),
           ("a2", a2_arrangement().module()),
           ("gp_111", general_position_module(3, (0, 0, 1), (1, 1, 2))),
           ("monomial_3", from_monomial_ideal([(1, 1, 0), (0, 1, 1), (1, 0, 1)]))]
    k = 0
    while len(out) < count:
        if k % 2:
            fd, _ = random_trivial_config(rng, max_t=3, max_r=3)
            out.append(("trivial_%d" % k, from_filtrations(fd)))
        else:
            a = random_arrangement(rng, max_rank=3, max_h=4)
            out.append(("arr_%d" % k, a.module()))
        k += 1
    return out
