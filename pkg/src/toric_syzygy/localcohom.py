"""Graded local cohomology of lattice modules.

At the fixed point, H^i(E)_d is the cohomology of F ⊗ Š(1) in degree d: the
summand S(-p) of F_j survives in degree d exactly when d <= p - 1, and it
sits in position n - j. For other torus-invariant supports the minimal
injective resolution is cut down to the summands whose support is allowed.

A support family is a set V of coordinate sets I closed under subsets: I
lists the inverted coordinates of an injective summand, so {()} is the fixed
point and all subsets together give the whole space.
"""
import itertools

from .duality import all_subsets, cousin_total_complex, injective_resolution
from .errors import PreconditionError
from .exactla import QQ, Matrix, rank
from .gradedmod import free_resolution
from .lattice import deg, generate_gcd_lattice, is_integral, leq


class SupportFamily:
    def __init__(self, n, sets):
        self.n = n
        self.sets = frozenset(tuple(sorted(set(I))) for I in sets)
        for I in self.sets:
            if any(not 0 <= i < n for i in I):
                raise PreconditionError("support set %r is not inside [0, %d)" % (I, n))
            for r in range(len(I)):
                for J in itertools.combinations(I, r):
                    if J not in self.sets:
                        raise PreconditionError("support family not closed under subsets: "
                                                "%r in it but %r missing" % (I, J))

    @classmethod
    def point(cls, n):
        return cls(n, [()])

    @classmethod
    def everything(cls, n):
        return cls(n, all_subsets(n))

    @classmethod
    def closure(cls, n, maximal):
        out = set()
        for I in maximal:
            I = tuple(sorted(I))
            for r in range(len(I) + 1):
                out.update(itertools.combinations(I, r))
        return cls(n, out)

    def __contains__(self, I):
        return tuple(sorted(I)) in self.sets

    def __iter__(self):
        return iter(sorted(self.sets, key=lambda I: (len(I), I)))


def _cohomology_dims(sizes, mats):
    """sizes[q] for q = 0..N-1 and mats[q]: C^q -> C^{q+1}."""
    ranks = [0] + [rank(a) if a.nrows and a.ncols else 0 for a in mats] + [0]
    out = {}
    for q in range(len(sizes)):
        h = sizes[q] - ranks[q] - ranks[q + 1]
        if h < 0:
            raise PreconditionError("not a complex")
        if h:
            out[q] = h
    return out


def point_local_cohomology(res, d):
    """{i: dim H^i_x(E)_d} from a finitely generated free resolution."""
    d = deg(d)
    n = res.n
    if not is_integral(d):
        raise PreconditionError("degree must be integral")
    for t in res.terms:
        for p in t:
            if not is_integral(p):
                raise PreconditionError("point_local_cohomology needs a finitely generated resolution")
    idx = [[k for k, p in enumerate(t) if leq(d, tuple(x - 1 for x in p))] for t in res.terms]
    L = len(res.terms)
    # position q = n - j; the differential q -> q+1 is d_j from term j to j-1
    sizes = [0] * (n + 1)
    for j in range(L):
        sizes[n - j] = len(idx[j])
    mats = []
    for q in range(n):
        j = n - q
        if 1 <= j < L:
            mats.append(res.differentials[j - 1].submatrix(idx[j - 1], idx[j]))
        else:
            mats.append(Matrix.zeros(sizes[q + 1], sizes[q], res.field))
    return _cohomology_dims(sizes, mats)


class LocalCohomTable:
    """Values of H^*_x(E) at the elements of a gcd-lattice G.

    Every integral degree c is adjacent to at most one element of G, namely
    min_above(G, c), and shares its local cohomology; degrees with nothing of
    G above them have zero local cohomology.
    """

    def __init__(self, n, G, values):
        self.n = n
        self.G = G
        self.values = values

    def at(self, c):
        g = self.G.min_above(deg(c))
        return {} if g is None else dict(self.values.get(g, {}))

    def nonzero(self):
        return {g: v for g, v in self.values.items() if v}

    def region(self, d):
        return adjacency_region(self.G, d)


def point_local_cohom_table(m, res=None):
    if res is None:
        res = free_resolution(m)
    degs = [tuple(x - 1 for x in p) for t in res.terms for p in t]
    if not degs:
        return LocalCohomTable(res.n, None, {})
    G = generate_gcd_lattice(degs)
    values = {g: point_local_cohomology(res, g) for g in G}
    return LocalCohomTable(res.n, G, values)


def adjacency_region(G, d):
    """(points, finite) for {c <= d : c not <= d' for d' in G with d not <= d'}.

    Enumerated in the box [lo, d] with lo_k the least k-th coordinate in G.
    A region point with c_k = lo_k may be pushed down in direction k forever,
    so the region is finite exactly when no such point exists; then the
    enumerated points are the whole region."""
    d = deg(d)
    n = len(d)
    lo = [min(g[k] for g in G) for k in range(n)]
    if not is_integral(d) or not is_integral(lo):
        raise PreconditionError("adjacency regions are enumerated for integral lattices only")
    others = [g for g in G if not leq(d, g)]
    pts = []
    finite = True
    for c in itertools.product(*[range(lo[k], d[k] + 1) for k in range(n)]):
        if any(leq(c, g) for g in others):
            continue
        pts.append(c)
        if any(c[k] == lo[k] for k in range(n)):
            finite = False
    return pts, finite


def support_local_cohomology(m, V, d, inj=None):
    """{i: dim H^i_V(E)_d} from the minimal injective resolution."""
    d = deg(d)
    if inj is None:
        inj = injective_resolution(m)
    idx = [[a for a, (I, g) in enumerate(t) if I in V and leq(d, g)] for t in inj.terms]
    sizes = [len(i) for i in idx]
    mats = [D.submatrix(idx[q + 1], idx[q]) for q, D in enumerate(inj.differentials)]
    return _cohomology_dims(sizes, mats)


def support_local_cohomology_total(res, V, d):
    """Same value from the unminimized complex F ⊗ (Cousin complex of S)."""
    d = deg(d)
    cols, labels, delta = cousin_total_complex(res)
    qs = sorted(cols)
    idx = {q: [a for a, (I, g) in enumerate(labels[q]) if I in V and leq(d, g)] for q in qs}
    sizes = [len(idx[q]) for q in qs]
    mats = []
    for q in qs[:-1]:
        M = Matrix(delta[q], len(cols[q]), res.field) if delta[q] else Matrix.zeros(0, len(cols[q]), res.field)
        mats.append(M.submatrix(idx[q + 1], idx[q]))
    raw = _cohomology_dims(sizes, mats)
    return {qs[0] + k: v for k, v in raw.items()}


def reduced_cohomology(faces, field=QQ):
    """{k: dim H~^k} of a simplicial complex given by all its faces (tuples,
    the empty face included when the complex is not void)."""
    faces = sorted(set(tuple(sorted(f)) for f in faces), key=lambda f: (len(f), f))
    by_dim = {}
    for f in faces:
        by_dim.setdefault(len(f) - 1, []).append(f)
    if not by_dim:
        return {}
    top = max(by_dim)
    index = {k: {f: i for i, f in enumerate(by_dim.get(k, []))} for k in range(-1, top + 1)}
    sizes = [len(by_dim.get(k, [])) for k in range(-1, top + 1)]
    mats = []
    for k in range(-1, top):
        src, tgt = by_dim.get(k, []), by_dim.get(k + 1, [])
        rows = []
        for g in tgt:
            row = [0] * len(src)
            for a in range(len(g)):
                f = g[:a] + g[a + 1:]
                if f in index[k]:
                    row[index[k][f]] = -1 if a % 2 else 1
            rows.append(row)
        mats.append(Matrix(rows, len(src), field))
    raw = _cohomology_dims(sizes, mats)
    return {k - 1: v for k, v in raw.items()}


def divisorial_local_cohom(I, c, V, m):
    """{i: dim H^i_V(S_I(c))_m} for S_I(c), generated in degree -c and
    localized at the coordinates in I.

    With s the set of j outside I where m_j < -c_j, the answer is the
    reduced cohomology H~^{i-2} of the complex of subsets J of s for which
    the complement of J is not in V. When s is empty only H^0 can survive."""
    n = len(c)
    I = tuple(sorted(I))
    sigma = [j for j in range(n) if j not in I and m[j] < -c[j]]
    full = tuple(range(n))
    if not sigma:
        return {0: 1} if full in V else {}
    bad = []
    for r in range(len(sigma) + 1):
        for J in itertools.combinations(sigma, r):
            if tuple(j for j in full if j not in J) not in V:
                bad.append(J)
    h = reduced_cohomology(bad)
    return {k + 2: v for k, v in h.items() if v}


def divisorial_local_cohom_direct(I, c, V, m, field=QQ):
    """The same numbers from the V-part of the Cousin complex of S_I(c) in degree m."""
    n = len(c)
    I = tuple(sorted(I))
    sigma = [j for j in range(n) if j not in I and m[j] < -c[j]]
    full = tuple(range(n))
    terms = {}
    for r in range(len(sigma) + 1):
        for J in itertools.combinations(sigma, r):
            if tuple(j for j in full if j not in J) in V:
                terms.setdefault(r, []).append(J)
    sizes = [len(terms.get(p, [])) for p in range(len(sigma) + 1)]
    mats = []
    for p in range(len(sigma)):
        src, tgt = terms.get(p, []), terms.get(p + 1, [])
        index = {J: i for i, J in enumerate(src)}
        rows = []
        for K in tgt:
            row = [0] * len(src)
            for a in range(len(K)):
                J = K[:a] + K[a + 1:]
                if J in index:
                    row[index[J]] = -1 if a % 2 else 1
            rows.append(row)
        mats.append(Matrix(rows, len(src), field))
    return _cohomology_dims(sizes, mats)
