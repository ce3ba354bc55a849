"""Equivariant modules over simplicial affine toric varieties.

A simplicial cone is given by its rays l_1..l_n in N = Z^n (n = d). The map
L: M -> Z^n sends m to (<l_1, m>, ..., <l_n, m>); its cokernel A is the
class group. A module of general-position type is built from n lines in
K^{n-1} in general position, line k appearing at step i1_k and the whole
space at step i2_k. Its critical degrees form the cuboid
C = [i1_1, i2_1 - 1] x ... x [i1_n, i2_n - 1], and the module restricted to
the toric variety is maximal Cohen-Macaulay iff C misses L(M).
"""
import itertools
from fractions import Fraction
from math import gcd

from .errors import InvariantViolation, PreconditionError
from .exactla import QQ, Matrix, Subspace, solve_linear, sum_subspaces, intersect
from .gradedmod import FiltrationData, free_resolution, from_filtrations
from .localcohom import adjacency_region, point_local_cohom_table


def smith_normal_form(a):
    """(D, U, V) with U a V = D diagonal, U and V unimodular, and each
    diagonal entry dividing the next. Works on lists of int rows."""
    m = len(a)
    n = len(a[0]) if m else 0
    D = [list(map(int, r)) for r in a]
    U = [[int(i == j) for j in range(m)] for i in range(m)]
    V = [[int(i == j) for j in range(n)] for i in range(n)]

    def swap_rows(M, i, j):
        M[i], M[j] = M[j], M[i]

    def swap_cols(M, i, j):
        for r in M:
            r[i], r[j] = r[j], r[i]

    def add_row(M, src, dst, f):
        M[dst] = [x + f * y for x, y in zip(M[dst], M[src])]

    def add_col(M, src, dst, f):
        for r in M:
            r[dst] += f * r[src]

    t = 0
    while t < min(m, n):
        nz = [(abs(D[i][j]), i, j) for i in range(t, m) for j in range(t, n) if D[i][j]]
        if not nz:
            break
        _, i, j = min(nz)
        swap_rows(D, t, i); swap_rows(U, t, i)
        swap_cols(D, t, j); swap_cols(V, t, j)
        done = False
        while not done:
            done = True
            for i in range(t + 1, m):
                q = D[i][t] // D[t][t]
                if q:
                    add_row(D, t, i, -q); add_row(U, t, i, -q)
                if D[i][t]:
                    swap_rows(D, t, i); swap_rows(U, t, i)
                    done = False
            for j in range(t + 1, n):
                q = D[t][j] // D[t][t]
                if q:
                    add_col(D, t, j, -q); add_col(V, t, j, -q)
                if D[t][j]:
                    swap_cols(D, t, j); swap_cols(V, t, j)
                    done = False
            if done:
                # the pivot must divide the rest of the block
                for i in range(t + 1, m):
                    for j in range(t + 1, n):
                        if D[i][j] % D[t][t]:
                            add_row(D, i, t, 1); add_row(U, i, t, 1)
                            done = False
                            break
                    if not done:
                        break
        if D[t][t] < 0:
            D[t] = [-x for x in D[t]]
            U[t] = [-x for x in U[t]]
        t += 1
    return D, U, V


def _det(rows):
    M = [[Fraction(x) for x in r] for r in rows]
    n = len(M)
    det = Fraction(1)
    for c in range(n):
        p = next((i for i in range(c, n) if M[i][c] != 0), None)
        if p is None:
            return 0
        if p != c:
            M[c], M[p] = M[p], M[c]
            det = -det
        det *= M[c][c]
        for i in range(c + 1, n):
            f = M[i][c] / M[c][c]
            M[i] = [x - f * y for x, y in zip(M[i], M[c])]
    return int(det)


class SimplicialCone:
    def __init__(self, rays):
        rays = [tuple(int(x) for x in r) for r in rays]
        if not rays:
            raise PreconditionError("a cone needs rays")
        d = len(rays[0])
        if len(rays) != d or any(len(r) != d for r in rays):
            raise PreconditionError("a simplicial full-dimensional cone needs d rays in Z^d")
        for r in rays:
            g = 0
            for x in r:
                g = gcd(g, x)
            if g != 1:
                raise PreconditionError("ray %r is not primitive" % (r,))
        self.det = _det(rays)
        if self.det == 0:
            raise PreconditionError("rays are linearly dependent")
        self.rays = rays
        self.d = d

    @property
    def n(self):
        return self.d

    def L(self, m):
        return tuple(sum(a * b for a, b in zip(l, m)) for l in self.rays)


class ClassGroup:
    """coker L = ⊕ Z/d_i; class_of reads a vector through the Smith transform."""

    def __init__(self, cone):
        D, U, V = smith_normal_form([list(r) for r in cone.rays])
        self.cone = cone
        self.diag = [D[i][i] for i in range(cone.d)]
        self.U = U
        self.invariants = [x for x in self.diag if x != 1]

    @property
    def order(self):
        out = 1
        for x in self.diag:
            out *= x
        return out

    def class_of(self, v):
        w = [sum(a * b for a, b in zip(row, v)) for row in self.U]
        return tuple(x % dd for x, dd in zip(w, self.diag) if dd != 1)

    def zero(self):
        return tuple(0 for _ in self.invariants)


def class_group(cone):
    return ClassGroup(cone)


def in_image_L(cone, v):
    """v in L(M)? Solved over Q, then tested for integrality."""
    sol = solve_linear(Matrix([list(r) for r in cone.rays], cone.d, QQ), list(v))
    return sol is not None and all(x.denominator == 1 for x in sol)


class McmCandidate:
    def __init__(self, i1, i2):
        self.i1 = tuple(int(x) for x in i1)
        self.i2 = tuple(int(x) for x in i2)
        if len(self.i1) != len(self.i2) or not all(a < b for a, b in zip(self.i1, self.i2)):
            raise PreconditionError("candidate needs i1 < i2 in every coordinate")

    @property
    def shape(self):
        return tuple(b - a for a, b in zip(self.i1, self.i2))

    def cuboid(self):
        return list(itertools.product(*[range(a, b) for a, b in zip(self.i1, self.i2)]))

    def __eq__(self, other):
        return isinstance(other, McmCandidate) and (self.i1, self.i2) == (other.i1, other.i2)

    def __hash__(self):
        return hash((self.i1, self.i2))

    def __repr__(self):
        return "McmCandidate(i1=%s, i2=%s)" % (self.i1, self.i2)


def class_representatives(cone):
    """{class: lexicographically smallest nonnegative vector in it}."""
    A = class_group(cone)
    N = A.order
    reps = {}
    for v in itertools.product(range(N), repeat=cone.d):
        c = A.class_of(v)
        if c not in reps:
            reps[c] = v
            if len(reps) == N:
                break
    return reps


def mcm_check(cone, cand):
    return not any(in_image_L(cone, c) for c in cand.cuboid())


def enumerate_cuboid_classes(cone, max_side):
    """Cuboids with sides in [1, max_side] missing L(M), one per M-shift class.

    The position of a cuboid is its lower corner, taken as the smallest
    nonnegative representative of its class."""
    if max_side < 1:
        raise PreconditionError("max_side must be at least 1")
    A = class_group(cone)
    reps = class_representatives(cone)
    out = []
    for shape in itertools.product(range(1, max_side + 1), repeat=cone.d):
        offsets = list(itertools.product(*[range(s) for s in shape]))
        for cls in sorted(reps):
            a = reps[cls]
            if all(A.class_of(tuple(x + y for x, y in zip(a, o))) != A.zero() for o in offsets):
                out.append(McmCandidate(a, tuple(x + s for x, s in zip(a, shape))))
    return out


def enumerate_singleton_classes(cone):
    return enumerate_cuboid_classes(cone, 1)


def general_position_lines(n, field=QQ):
    """e_1, ..., e_{n-1} and (1, ..., 1) in K^{n-1}."""
    r = n - 1
    lines = [[1 if j == k else 0 for j in range(r)] for k in range(r)]
    lines.append([1] * r)
    return [Subspace([v], r, field) for v in lines]


def general_position_module(n, i1, i2, field=QQ):
    if n < 3:
        raise PreconditionError("general position needs n >= 3")
    if len(i1) != n or len(i2) != n or not all(a < b for a, b in zip(i1, i2)):
        raise PreconditionError("need i1 < i2 with n coordinates each")
    V = Subspace.full(n - 1, field)
    filts = [[(a, X), (b, V)] for X, a, b in zip(general_position_lines(n, field), i1, i2)]
    return from_filtrations(FiltrationData(n - 1, filts, field))


def splits_line_configuration(lines, ambient, field=QQ):
    """Does K^ambient = F ⊕ G nontrivially with every line inside F or G?

    Exhaustive over the assignments of lines to the two sides."""
    lines = list(lines)
    for mask in range(2 ** len(lines)):
        A = [l for k, l in enumerate(lines) if mask >> k & 1]
        B = [l for k, l in enumerate(lines) if not mask >> k & 1]
        SA = Subspace.zero(ambient, field)
        for l in A:
            SA = sum_subspaces(SA, l)
        SB = Subspace.zero(ambient, field)
        for l in B:
            SB = sum_subspaces(SB, l)
        if intersect(SA, SB).dim:
            continue
        spare = ambient - SA.dim - SB.dim
        if (SA.dim and SB.dim) or (spare and (SA.dim or SB.dim)) or spare >= 2:
            return True
    return False


def full_verify(cone, cand):
    """Decide the MCM property by running the whole pipeline.

    Builds the module, resolves it, tabulates H^i at the fixed point, and
    checks every finite adjacency region carrying H^i with i < n against
    L(M). Returns a dict with the verdict and a witness degree if any."""
    n = cone.d
    m = general_position_module(n, cand.i1, cand.i2)
    res = free_resolution(m)
    table = point_local_cohom_table(m, res)
    witness = None
    regions = []
    for d, vals in sorted(table.nonzero().items()):
        low = {i: v for i, v in vals.items() if i < n}
        if not low:
            continue
        pts, finite = adjacency_region(table.G, d)
        if not finite:
            raise InvariantViolation("infinite region with H^i, i < n, at %r" % (d,))
        regions.append((d, low, pts))
        for c in pts:
            if witness is None and in_image_L(cone, c):
                witness = c
    return {"mcm": witness is None, "witness": witness, "regions": regions,
            "splits": splits_line_configuration(general_position_lines(n), n - 1)}


def cone_symmetries(cone):
    """Permutations π of the rays induced by some g in GL_d(Z)."""
    R = Matrix.from_columns([list(r) for r in cone.rays], cone.d, QQ)
    out = []
    for perm in itertools.permutations(range(cone.d)):
        Rp = Matrix.from_columns([list(cone.rays[p]) for p in perm], cone.d, QQ)
        # g R = Rp
        rows = []
        ok = True
        for i in range(cone.d):
            sol = solve_linear(R.transpose(), list(Rp.rows[i]))
            if sol is None or any(x.denominator != 1 for x in sol):
                ok = False
                break
            rows.append([int(x) for x in sol])
        if ok and abs(_det(rows)) == 1:
            out.append(perm)
    return out


def symmetry_orbits(cone, cands):
    """Group candidates whose cuboids differ by a cone symmetry and an M-shift."""
    A = class_group(cone)
    syms = cone_symmetries(cone)

    def key(c):
        return (c.shape, A.class_of(c.i1))

    seen = {}
    orbits = []
    for c in cands:
        if key(c) in seen:
            continue
        orbit = []
        for perm in syms:
            # coordinate k of the image comes from coordinate perm^-1(k)
            inv = [0] * cone.d
            for k, p in enumerate(perm):
                inv[p] = k
            i1 = tuple(c.i1[inv[k]] for k in range(cone.d))
            shape = tuple(c.shape[inv[k]] for k in range(cone.d))
            kk = (shape, A.class_of(i1))
            for d in cands:
                if key(d) == kk and d not in orbit:
                    orbit.append(d)
                    seen[kk] = True
        orbits.append(orbit)
    return orbits
