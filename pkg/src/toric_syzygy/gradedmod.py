"""Z^n-graded modules zipped onto a finite lattice, and their free resolutions.

A module is stored as a representation of an lcm-lattice L. The graded
piece in degree c is the space at max_below(L, c), or zero when no lattice
element lies below c. A Matlis dual comes out on a gcd-lattice and is read
through min_above instead.
"""
import itertools

from .errors import PreconditionError
from .exactla import QQ, Matrix, Subspace, coordinates, intersect, rank, contains
from .lattice import (NEG_INF, POS_INF, GcdLattice, LcmLattice, deg,
                      generate_gcd_lattice, generate_lcm_lattice, is_integral, leq,
                      mask, support)
from .posetrep import PosetRep, minimal_projective_resolution, sequence_is_exact


class FiltrationData:
    """A vector space K^r with n increasing filtrations.

    filtrations[k] is a list of (step, Subspace) with strictly increasing
    steps and dimensions, each space inside the next, the last one K^r.
    Below the first step the filtration is zero.
    """

    def __init__(self, ambient, filtrations, field=QQ):
        self.ambient = ambient
        self.field = field
        self.filtrations = []
        for k, filt in enumerate(filtrations):
            filt = [(int(i), V if isinstance(V, Subspace) else Subspace(V, ambient, field))
                    for i, V in filt]
            if not filt:
                raise PreconditionError("filtration %d is empty" % k)
            for (i, V), (j, W) in zip(filt, filt[1:]):
                if j <= i:
                    raise PreconditionError("filtration %d: steps not increasing" % k)
                if W.dim <= V.dim:
                    raise PreconditionError("filtration %d: dimensions not increasing" % k)
                if not contains(W, V):
                    raise PreconditionError("filtration %d: step %d not contained in step %d"
                                            % (k, i, j))
            if filt[-1][1].dim != ambient:
                raise PreconditionError("filtration %d does not exhaust the space" % k)
            self.filtrations.append(filt)

    @property
    def n(self):
        return len(self.filtrations)

    def space(self, k, i):
        out = Subspace.zero(self.ambient, self.field)
        for step, V in self.filtrations[k]:
            if step <= i:
                out = V
        return out

    def space_at(self, c):
        """E_c as the intersection of E^k(c_k); ±inf coordinates allowed."""
        out = Subspace.full(self.ambient, self.field)
        for k, x in enumerate(c):
            if x == POS_INF:
                continue
            if x == NEG_INF:
                return Subspace.zero(self.ambient, self.field)
            out = intersect(out, self.space(k, x))
        return out

    def first_step(self, k, X):
        """min{i : X ⊆ E^k(i)}."""
        for step, V in self.filtrations[k]:
            if contains(V, X):
                return step
        raise PreconditionError("space not contained in the last filtration step")


class GradedModule:
    def __init__(self, lattice, rep, field=QQ, spaces=None, filtration=None):
        if set(lattice.elements) != set(rep.poset.elements):
            raise PreconditionError("representation is not indexed by the lattice")
        self.lattice = lattice
        self.rep = rep
        self.field = field
        self.spaces = spaces
        self.filtration = filtration

    @property
    def n(self):
        return self.lattice.n

    @property
    def kind(self):
        return self.lattice.kind

    def node_at(self, c):
        if self.kind == "lcm":
            return self.lattice.max_below(c)
        return self.lattice.min_above(c)

    def dim_at(self, c):
        x = self.node_at(deg(c))
        return 0 if x is None else self.rep.dims[x]

    def map_at(self, c, d):
        """Structure map E_c -> E_d for c <= d."""
        x, y = self.node_at(deg(c)), self.node_at(deg(d))
        if x is None or y is None:
            return Matrix.zeros(0 if y is None else self.rep.dims[y],
                                0 if x is None else self.rep.dims[x], self.field)
        return self.rep.map(x, y)

    def rank(self):
        """Dimension of the generic graded piece."""
        if self.kind != "lcm":
            raise PreconditionError("rank is defined for modules on an lcm-lattice")
        return self.rep.dims[self.lattice.max_below((POS_INF,) * self.n)]

    def is_finitely_generated(self):
        return self.kind == "lcm" and all(is_integral(x) for x in self.lattice)


def unzip_dim(m, c):
    return m.dim_at(c)


def from_filtrations(fd):
    F = fd.field
    gens = set()
    for filt in fd.filtrations:
        for _, V in filt:
            gens.add(V)
    gens.add(Subspace.full(fd.ambient, F))
    spaces = set(gens)
    frontier = list(spaces)
    while frontier:
        new = []
        cur = list(spaces)
        for a in frontier:
            for b in cur:
                c = intersect(a, b)
                if c not in spaces:
                    spaces.add(c)
                    new.append(c)
                    cur.append(c)
        frontier = new
    node_space = {}
    for X in spaces:
        c = tuple(fd.first_step(k, X) for k in range(fd.n))
        if c in node_space and node_space[c] != X:
            raise PreconditionError("two intersections share the degree %r" % (c,))
        node_space[c] = X
    L = generate_lcm_lattice(list(node_space))
    if len(L) != len(node_space):
        raise PreconditionError("intersection degrees are not join-closed")
    P = L.poset
    dims = {c: node_space[c].dim for c in L}
    maps = {}
    for a, b in P.covers():
        X, Y = node_space[a], node_space[b]
        if X.dim and Y.dim:
            cols = [coordinates([list(v) for v in Y.basis], list(v), F) for v in X.basis]
            maps[(a, b)] = Matrix.from_columns(cols, Y.dim, F)
    rep = PosetRep(P, dims, maps, F, check=False)
    rep.functorial = True    # inclusions of subspaces always commute
    return GradedModule(L, rep, F, spaces=node_space, filtration=fd)


def from_monomial_ideal(gens, field=QQ):
    L = generate_lcm_lattice(gens)
    P = L.poset
    rep = PosetRep(P, {c: 1 for c in L},
                   {e: Matrix.identity(1, field) for e in P.covers()}, field, check=False)
    rep.functorial = True
    return GradedModule(L, rep, field)


def free_module(degrees, field=QQ):
    """⊕ S(-c) over the given degrees (as a module with its lcm-lattice)."""
    degrees = [deg(c) for c in degrees]
    L = generate_lcm_lattice(degrees)
    P = L.poset
    dims = {x: sum(1 for c in degrees if leq(c, x)) for x in L}
    idx = {x: [k for k, c in enumerate(degrees) if leq(c, x)] for x in L}
    maps = {}
    for a, b in P.covers():
        if dims[a] and dims[b]:
            maps[(a, b)] = Matrix([[1 if i == j else 0 for j in idx[a]] for i in idx[b]],
                                  dims[a], field)
    rep = PosetRep(P, dims, maps, field, check=False)
    rep.functorial = True
    return GradedModule(L, rep, field)


def from_box(lo, hi, dims, maps, field=QQ):
    """Module given by its graded pieces on the box [lo, hi].

    dims maps each box degree to its dimension, maps[(c, k)] is the
    multiplication E_c -> E_{c+e_k}. The module is taken to vanish below lo
    and to be constant past hi. The lattice is the lcm-closure of the degrees
    where some incoming map from inside the box fails to be an isomorphism;
    it need not be minimal.
    """
    lo, hi = deg(lo), deg(hi)
    n = len(lo)
    box = list(itertools.product(*[range(a, b + 1) for a, b in zip(lo, hi)]))
    F = field

    def unit(c, k):
        return tuple(x + (1 if i == k else 0) for i, x in enumerate(c))

    # c needs a lattice node when some map into it from inside the box is not
    # an isomorphism; the corner lo needs one when E_lo is nonzero
    jumps = []
    for c in box:
        d = dims.get(c, 0)
        if c == lo:
            if d:
                jumps.append(c)
            continue
        for k in range(n):
            if c[k] == lo[k]:
                continue
            prev = tuple(x - (1 if i == k else 0) for i, x in enumerate(c))
            dp = dims.get(prev, 0)
            if dp != d or (d and rank(maps[(prev, k)]) != d):
                jumps.append(c)
                break
    if not jumps:
        jumps = [lo]
    L = generate_lcm_lattice(jumps)
    P = L.poset

    def path_map(a, b):
        m = Matrix.identity(dims.get(a, 0), F)
        cur = a
        for k in range(n):
            while cur[k] < b[k]:
                step = maps.get((cur, k))
                nxt = unit(cur, k)
                if step is None:
                    step = Matrix.zeros(dims.get(nxt, 0), dims.get(cur, 0), F)
                m = step @ m
                cur = nxt
        return m

    rdims = {c: dims.get(c, 0) for c in L}
    rmaps = {}
    for a, b in P.covers():
        if rdims[a] and rdims[b]:
            rmaps[(a, b)] = path_map(a, b)
    rep = PosetRep(P, rdims, rmaps, F)
    return GradedModule(L, rep, F)


class FreeResolution:
    """Minimal (or merely exact) complex of free modules S(-c).

    terms[i] lists the degrees of the summands in homological position i;
    a degree with -inf in the coordinates I stands for S_I(-c), the module
    localized at x_I. differentials[i-1] is the scalar matrix of
    d_i : F_i -> F_{i-1}; the entry from S(-c_k) to S(-c_j) stands for
    that scalar times x^{c_k - c_j}, so it is zero unless c_j <= c_k.
    """

    def __init__(self, n, terms, differentials, field=QQ, module=None, augmentation=None):
        self.n = n
        self.terms = [list(t) for t in terms]
        self.differentials = list(differentials)
        while len(self.terms) > 1 and not self.terms[-1]:
            self.terms.pop()
            self.differentials.pop()
        self.field = field
        self.module = module
        self.augmentation = augmentation

    @property
    def length(self):
        return len(self.terms) - 1 if any(self.terms) else 0

    def rank_euler(self):
        return sum((-1) ** i * len(t) for i, t in enumerate(self.terms))

    def check_monomial(self):
        for i, d in enumerate(self.differentials, start=1):
            for r, cj in enumerate(self.terms[i - 1]):
                for s, ck in enumerate(self.terms[i]):
                    if d[r, s] != 0 and not leq(cj, ck):
                        return False
        return True

    def check_complex(self):
        for a, b in zip(self.differentials, self.differentials[1:]):
            if a.nrows and b.ncols and a.ncols and not (a @ b).is_zero():
                return False
        return True


def free_resolution(m):
    if m.kind != "lcm":
        raise PreconditionError("free_resolution needs a module on an lcm-lattice")
    res = minimal_projective_resolution(m.rep)
    out = FreeResolution(m.n, res.terms, res.differentials, m.field, m, res.augmentation)
    out.syzygy_supports = res.syzygy_supports
    return out


def betti_table(res):
    """{(i, I, c): multiplicity}; I is the tuple of -inf coordinates of c."""
    out = {}
    for i, t in enumerate(res.terms):
        for c in t:
            key = (i, support(c), c)
            out[key] = out.get(key, 0) + 1
    return out


def betti_numbers(res):
    return [len(t) for t in res.terms]


def verify_exactness(res, box):
    """Check exactness degree by degree on every integral degree of the box.

    Each coordinate only matters through its position relative to the
    finitely many values occurring in the resolution and module lattice, so
    every box degree is represented by one point of a finite grid and
    results are cached per configuration of contributing summands. Returns
    True or raises PreconditionError when the box misses a term degree.
    """
    lo, hi = deg(box[0]), deg(box[1])
    n = res.n
    if len(lo) != n or len(hi) != n or not all(a <= b for a, b in zip(lo, hi)):
        raise PreconditionError("box must be a pair of integral degrees lo <= hi")
    m = res.module
    breaks = [set() for _ in range(n)]
    for t in res.terms:
        for c in t:
            for k, x in enumerate(c):
                if is_integral((x,)):
                    if not lo[k] <= x <= hi[k]:
                        raise PreconditionError("box too small: term degree %r" % (c,))
                    breaks[k].add(x)
    if m is not None:
        for c in m.lattice:
            for k, x in enumerate(c):
                if is_integral((x,)) and lo[k] <= x <= hi[k]:
                    breaks[k].add(x)
    grid = [sorted({lo[k]} | {x for x in breaks[k] if lo[k] < x <= hi[k]}) for k in range(n)]
    if not res.check_complex():
        return False
    # a localized resolution resolves E_{x_I}, whose piece at c is E at c with
    # the coordinates in I sent to +inf
    loc = getattr(res, "localized_at", ())
    cache = {}
    for c in itertools.product(*grid):
        idx = tuple(tuple(k for k, p in enumerate(t) if leq(p, c)) for t in res.terms)
        node = None
        if m is not None:
            node = m.node_at(mask(c, loc, POS_INF))
        key = (node, idx)
        if key in cache:
            continue
        cache[key] = _exact_at(res, c, node, idx)
        if not cache[key]:
            return False
    return True


def _exact_at(res, c, node, idx):
    F = res.field
    m = res.module
    mats = [d.submatrix(idx[i], idx[i + 1]) for i, d in enumerate(res.differentials)]
    sizes = [len(i) for i in idx]
    dim_e = 0 if node is None else m.rep.dims[node] if m is not None else None
    if m is not None and res.augmentation is not None:
        cols = [m.rep.map(res.terms[0][k], node) @ res.augmentation[k] for k in idx[0]]
        eps = Matrix.from_columns(cols, dim_e, F)
        return sequence_is_exact([eps] + mats, [dim_e] + sizes)
    # r[i] = rank of d_i, with d_0 and d_{l+1} zero
    r = [0] + [rank(a) if a.nrows and a.ncols else 0 for a in mats] + [0]
    for i in range(1, len(sizes)):
        if r[i + 1] != sizes[i] - r[i]:
            return False
    if m is not None and sizes[0] - r[1] != dim_e:
        return False
    return True


def bounding_box(res, pad=1):
    n = res.n
    lo = [None] * n
    hi = [None] * n
    vals = [c for t in res.terms for c in t]
    if res.module is not None:
        vals += list(res.module.lattice)
    for c in vals:
        for k, x in enumerate(c):
            if is_integral((x,)):
                lo[k] = x if lo[k] is None else min(lo[k], x)
                hi[k] = x if hi[k] is None else max(hi[k], x)
    lo = tuple((0 if a is None else a) - pad for a in lo)
    hi = tuple((0 if b is None else b) + pad for b in hi)
    return lo, hi


def admissible_gcd_lattice(m):
    """A gcd-lattice from which E can be read through min_above.

    Generated by the degrees iota_I(c): +inf on I and c - 1 off I, for every
    lattice element c and every coordinate set I.
    """
    if not m.is_finitely_generated():
        raise PreconditionError("admissible_gcd_lattice needs a finitely generated module")
    n = m.n
    gens = set()
    for c in m.lattice:
        for r in range(n + 1):
            for I in itertools.combinations(range(n), r):
                gens.add(tuple(POS_INF if i in I else c[i] - 1 for i in range(n)))
    return generate_gcd_lattice(gens)


def zip_gcd(m, G):
    """Restriction of E to the gcd-lattice G; +inf coordinates are colimits."""
    P = G.poset
    F = m.field
    node = {g: m.lattice.max_below(g) for g in G}
    dims = {g: (0 if node[g] is None else m.rep.dims[node[g]]) for g in G}
    maps = {}
    for a, b in P.covers():
        if dims[a] and dims[b]:
            maps[(a, b)] = m.rep.map(node[a], node[b])
    rep = PosetRep(P, dims, maps, F, check=False)
    rep.functorial = True
    return rep


def matlis_dual(m):
    """Degreewise dual with negated grading: lattice negated, maps transposed."""
    L = m.lattice
    neg = [tuple(-x for x in c) for c in L]
    NL = GcdLattice(neg, check=False) if m.kind == "lcm" else LcmLattice(neg, check=False)
    P = NL.poset
    dims = {tuple(-x for x in c): d for c, d in m.rep.dims.items()}
    maps = {}
    for (a, b), mat in m.rep.maps.items():
        maps[(tuple(-x for x in b), tuple(-x for x in a))] = mat.transpose()
    rep = PosetRep(P, dims, maps, m.field, check=False)
    rep.functorial = m.rep.functorial
    return GradedModule(NL, rep, m.field)
