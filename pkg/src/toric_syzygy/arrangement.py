"""Central hyperplane arrangements, their intersection lattices and the
reflexive modules built from them.

Each hyperplane H_k = ker(u_k) gets a coordinate with two steps: the
filtration is 0 below i_k, H_k on [i_k, j_k) and V from j_k on. Extra
coordinates jump straight from 0 to V at their step. An intersection X gets
the degree c^X with c^X_k = i_k when X lies in H_k and j_k otherwise.
"""
from .errors import PreconditionError
from .exactla import (QQ, Matrix, Subspace, complement_in, contains, intersect,
                      kernel_basis)
from .gradedmod import FiltrationData, from_filtrations
from .lattice import FinitePoset, chains_ending_at, generate_gcd_lattice, leq


class Arrangement:
    def __init__(self, normals, shifts, extra=(), field=QQ, ambient=None):
        self.field = field
        self.normals = [tuple(field(x) for x in u) for u in normals]
        if ambient is None:
            if not self.normals:
                raise PreconditionError("ambient dimension needed for an empty arrangement")
            ambient = len(self.normals[0])
        self.r = ambient
        for u in self.normals:
            if len(u) != self.r:
                raise PreconditionError("normals have different lengths")
            if all(x == 0 for x in u):
                raise PreconditionError("zero normal vector")
        self.shifts = [(int(i), int(j)) for i, j in shifts]
        if len(self.shifts) != len(self.normals):
            raise PreconditionError("need one (i, j) shift pair per hyperplane")
        for i, j in self.shifts:
            if not i < j:
                raise PreconditionError("shift pair (%d, %d) needs i < j" % (i, j))
        self.extra = [int(j) for j in extra]
        self.hyperplanes = [Subspace(kernel_basis(Matrix([u], self.r, field)), self.r, field)
                            for u in self.normals]

    @property
    def n(self):
        return len(self.normals) + len(self.extra)

    def full(self):
        return Subspace.full(self.r, self.field)

    def center(self):
        C = self.full()
        for H in self.hyperplanes:
            C = intersect(C, H)
        return C

    def is_essential(self):
        return self.center().dim == 0

    def degree(self, X):
        c = [i if contains(H, X) else j for H, (i, j) in zip(self.hyperplanes, self.shifts)]
        return tuple(c + self.extra)

    def filtration_data(self):
        V = self.full()
        filts = [[(i, H), (j, V)] for H, (i, j) in zip(self.hyperplanes, self.shifts)]
        filts += [[(j, V)] for j in self.extra]
        return FiltrationData(self.r, filts, self.field)

    def module(self):
        return from_filtrations(self.filtration_data())


class IntersectionLattice:
    """All intersections of the hyperplanes (V included), smaller spaces below."""

    def __init__(self, arrangement, elements):
        self.arrangement = arrangement
        self.elements = sorted(elements, key=lambda X: (X.dim, X.basis))
        self.poset = FinitePoset.from_leq(self.elements, lambda X, Y: contains(Y, X))

    def __iter__(self):
        return iter(self.elements)

    def __len__(self):
        return len(self.elements)

    @property
    def top(self):
        return self.elements[-1]

    @property
    def bottom(self):
        return self.elements[0]

    def degree(self, X):
        return self.arrangement.degree(X)

    def of_dim(self, d):
        return [X for X in self.elements if X.dim == d]


def intersection_lattice(a):
    spaces = {a.full()}
    frontier = list(a.hyperplanes)
    spaces.update(frontier)
    frontier = list(spaces)
    while frontier:
        new = []
        cur = list(spaces)
        for X in frontier:
            for Y in cur:
                Z = intersect(X, Y)
                if Z not in spaces:
                    spaces.add(Z)
                    new.append(Z)
                    cur.append(Z)
        frontier = new
    return IntersectionLattice(a, spaces)


def beta_invariant(L, k, X):
    """(-1)^k Σ over chains X_l < ... < X_0 = X with dim X_i <= k for i >= 1
    of (-1)^l dim X_l."""
    total = 0
    for ch in chains_ending_at(L.poset, k, X, lambda Y: Y.dim):
        total += (-1) ** (len(ch) - 1) * ch[0].dim
    return (-1) ** k * total


def beta(L, X):
    """β^X = β^{dim X - 1, X}."""
    return beta_invariant(L, X.dim - 1, X)


def beta_whitney(L, k, X):
    """(-1)^D Σ_d d w_{d,D} on the subposet {Y <= X : dim Y <= k} ∪ {X},
    D = dim X, Whitney numbers from the Möbius function of that subposet."""
    elems = [Y for Y in L.poset.below(X) if Y.dim <= k or Y == X]
    P = L.poset.subposet(elems)
    D = X.dim
    return (-1) ** D * sum(Y.dim * P.mobius(Y, X) for Y in elems)


def whitney(L, i, j):
    """w_{ij} = Σ μ(Y, Z) over Y of dimension i and Z of dimension j."""
    return sum(L.poset.mobius(Y, Z) for Y in L.of_dim(i) for Z in L.of_dim(j))


def essentialize(a):
    """(a', dim C): the arrangement induced on V/C, C the center."""
    C = a.center()
    F = a.field
    W = complement_in(C, a.full())
    normals = [[sum((x * y for x, y in zip(u, w)), F(0)) for w in W] for u in a.normals]
    out = Arrangement(normals, a.shifts, a.extra, F, ambient=len(W))
    return out, C.dim


def predicted_betti(a):
    """Betti table predicted from beta invariants: β_{dim X - 1}(c^X) = β^X.

    A center C of positive dimension splits off S(-c^C)^{dim C}."""
    ess, dc = essentialize(a)
    out = {}
    if ess.normals:
        L = intersection_lattice(ess)
        for X in L:
            if X.dim == 0:
                continue
            b = beta(L, X)
            if b:
                key = (X.dim - 1, (), ess.degree(X))
                out[key] = out.get(key, 0) + b
    elif ess.r:
        key = (0, (), ess.degree(ess.full()))
        out[key] = out.get(key, 0) + ess.r
    if dc:
        key = (0, (), a.degree(a.center()))
        out[key] = out.get(key, 0) + dc
    return out


def predicted_local_cohom(a):
    """{d: {i: dim}} on the gcd-closure G of d^X = c^X - 1.

    For d in G let H^d be the hyperplanes H with d not <= d^H and C^d their
    intersection. If H^d is empty the only value is H^n = dim V; otherwise
    H^i is the beta invariant of H^d on V/C^d in degree i = n - dim V/C^d + 1.
    """
    L = intersection_lattice(a)
    n = a.n
    G = generate_gcd_lattice([tuple(x - 1 for x in a.degree(X)) for X in L])
    dH = [tuple(x - 1 for x in a.degree(H)) for H in a.hyperplanes]
    out = {}
    for d in G:
        sel = [k for k in range(len(a.hyperplanes)) if not leq(d, dH[k])]
        if not sel:
            out[d] = {n: a.r} if a.r else {}
            continue
        sub = Arrangement([a.normals[k] for k in sel], [a.shifts[k] for k in sel], (), a.field,
                          ambient=a.r)
        ess, _ = essentialize(sub)
        Ls = intersection_lattice(ess)
        b = beta(Ls, Ls.top)
        r = ess.r
        out[d] = {n - r + 1: b} if b else {}
    return out, G


def reflexive_model(spaces, ambient, field=QQ):
    """Filtration data with one coordinate per subspace X_k: 0 below 0,
    X_k at 0 and the whole space from 1 on."""
    V = Subspace.full(ambient, field)
    filts = []
    for X in spaces:
        if not isinstance(X, Subspace):
            X = Subspace(X, ambient, field)
        if X.dim == ambient:
            filts.append([(0, V)])
        else:
            filts.append([(0, X), (1, V)])
    return FiltrationData(ambient, filts, field)
