"""Finite-dimensional representations of finite posets and their minimal
projective and injective resolutions.

P_x is K on the up-set of x and I_x is K on the down-set of x, with identity
maps. A map P_x -> P_y (or I_x -> I_y) is a scalar and can be nonzero only
when y <= x.
"""
from .errors import InvariantViolation, PreconditionError
from .exactla import (QQ, Matrix, Subspace, complement_in, kernel_basis, rank,
                      sum_subspaces)
from .lattice import FinitePoset


class PosetRep:
    """dims: node -> int; maps: Hasse cover (x, y) -> Matrix of shape dims[y] x dims[x].

    Covers with a zero-dimensional end may be omitted from `maps`.
    """

    def __init__(self, poset, dims, maps, field=QQ, check=True):
        self.poset = poset
        self.field = field
        self.dims = {x: int(dims.get(x, 0)) for x in poset}
        self.maps = {}
        for x, y in poset.covers():
            m = maps.get((x, y))
            if m is None:
                if self.dims[x] and self.dims[y]:
                    raise PreconditionError("missing map on cover %r -> %r" % (x, y))
                m = Matrix.zeros(self.dims[y], self.dims[x], field)
            if m.shape != (self.dims[y], self.dims[x]):
                raise PreconditionError("map %r -> %r has shape %s, expected %s"
                                        % (x, y, m.shape, (self.dims[y], self.dims[x])))
            self.maps[(x, y)] = m
        for key in maps:
            if key not in self.maps:
                raise PreconditionError("map given on a non-cover pair %r" % (key,))
        self._cache = {}
        self.functorial = False
        if check:
            check_functoriality(self)

    def map(self, x, y):
        """The structure map F(x, y), composed along a Hasse path."""
        if x == y:
            return Matrix.identity(self.dims[x], self.field)
        key = (x, y)
        if key in self._cache:
            return self._cache[key]
        if not self.poset.leq(x, y):
            raise PreconditionError("%r is not below %r" % (x, y))
        if (x, y) in self.maps:
            m = self.maps[(x, y)]
        else:
            w = next(w for w in self.poset.lower_covers(y) if self.poset.leq(x, w))
            m = self.maps[(w, y)] @ self.map(x, w)
        self._cache[key] = m
        return m

    def total_dim(self):
        return sum(self.dims.values())

    def dual(self):
        """Vector-space dual on the opposite poset (transposed maps)."""
        op = self.poset.opposite()
        maps = {(y, x): m.transpose() for (x, y), m in self.maps.items()}
        r = PosetRep(op, self.dims, maps, self.field, check=False)
        r.functorial = self.functorial
        return r

    def support(self):
        return [x for x in self.poset if self.dims[x]]


def check_functoriality(r):
    """Every pair of Hasse paths between the same endpoints gives the same map."""
    P = r.poset
    order = P.linear_extension()
    for x in order:
        for y in P.above(x, strict=True):
            cands = [w for w in P.lower_covers(y) if P.leq(x, w)]
            ref = None
            for w in cands:
                m = r.maps[(w, y)] @ r.map(x, w)
                if ref is None:
                    ref = m
                elif m != ref:
                    raise PreconditionError("representation is not functorial between %r and %r"
                                            % (x, y))
    r.functorial = True
    return True


def projective(poset, x, field=QQ):
    dims = {y: 1 if poset.leq(x, y) else 0 for y in poset}
    maps = {(a, b): Matrix.identity(1, field) for a, b in poset.covers() if dims[a] and dims[b]}
    return PosetRep(poset, dims, maps, field, check=False)


def injective(poset, x, field=QQ):
    dims = {y: 1 if poset.leq(y, x) else 0 for y in poset}
    maps = {(a, b): Matrix.identity(1, field) for a, b in poset.covers() if dims[a] and dims[b]}
    return PosetRep(poset, dims, maps, field, check=False)


class RepResolution:
    """A resolution by sums of P_x (kind 'projective') or I_x (kind 'injective').

    terms[i] lists the node of each summand of the i-th term. For the
    projective kind differentials[i-1] is the scalar matrix of d_i from term i
    to term i-1; for the injective kind differentials[i] goes from term i to
    term i+1. `augmentation` holds, per summand of term 0, the vector (in F_x)
    the generator maps to, respectively the functional on F_x cutting out the
    summand.
    """

    def __init__(self, kind, poset, terms, differentials, augmentation, field=QQ,
                 syzygy_supports=None):
        self.kind = kind
        self.poset = poset
        self.terms = terms
        self.differentials = differentials
        self.augmentation = augmentation
        self.field = field
        self.syzygy_supports = syzygy_supports or []

    @property
    def length(self):
        return max([i for i, t in enumerate(self.terms) if t], default=0)

    def multiplicities(self, i):
        out = {}
        for x in self.terms[i]:
            out[x] = out.get(x, 0) + 1
        return out

    def census(self):
        return {(i, x): m for i in range(len(self.terms)) for x, m in self.multiplicities(i).items()}


def _sorted_nodes(poset):
    return poset.linear_extension()


def minimal_projective_resolution(r):
    if not r.functorial:
        check_functoriality(r)
    P = r.poset
    F = r.field
    order = _sorted_nodes(P)
    maxlen = P.max_chain_length()

    # stage 0: generators of F itself
    gens = []
    aug = []
    for x in order:
        d = r.dims[x]
        if d == 0:
            continue
        full = Subspace.full(d, F)
        low = Subspace.zero(d, F)
        for w in P.lower_covers(x):
            if r.dims[w]:
                img = r.maps[(w, x)]
                low = sum_subspaces(low, Subspace(img.columns(), d, F))
        for v in complement_in(low, full):
            gens.append(x)
            aug.append(v)
    terms = [gens]
    diffs = []
    supports = []

    # kernel of the augmentation, in global coordinates of term 0
    K = {}
    for z in order:
        idx = [k for k, x in enumerate(gens) if P.leq(x, z)]
        if not idx or r.dims[z] == 0:
            K[z] = Subspace([[F(1) if j == k else F(0) for j in range(len(gens))] for k in idx],
                            len(gens), F)
            continue
        cols = [r.map(gens[k], z) @ aug[k] for k in idx]
        K[z] = _embed_kernel(kernel_basis(Matrix.from_columns(cols, r.dims[z], F)), idx,
                             len(gens), F)

    prev = gens
    while any(K[z].dim for z in order):
        supports.append([z for z in order if K[z].dim])
        if len(terms) >= maxlen:
            raise InvariantViolation("projective resolution longer than the longest chain")
        N = len(prev)
        new = []
        vecs = []
        for x in order:
            if K[x].dim == 0:
                continue
            low = Subspace.zero(N, F)
            for w in P.lower_covers(x):
                if K[w].dim:
                    low = sum_subspaces(low, K[w])
            for v in complement_in(low, K[x]):
                new.append(x)
                vecs.append(v)
        diffs.append(Matrix.from_columns(vecs, N, F) if vecs else Matrix.zeros(N, 0, F))
        terms.append(new)
        K2 = {}
        for z in order:
            idx = [k for k, x in enumerate(new) if P.leq(x, z)]
            if not idx:
                K2[z] = Subspace.zero(len(new), F)
                continue
            cols = [vecs[k] for k in idx]
            K2[z] = _embed_kernel(kernel_basis(Matrix.from_columns(cols, N, F)), idx, len(new), F)
        K = K2
        prev = new
    return RepResolution("projective", P, terms, diffs, aug, F, supports)


def _embed_kernel(kvecs, idx, N, F):
    out = []
    for k in kvecs:
        v = [F(0)] * N
        for pos, c in zip(idx, k):
            v[pos] = c
        out.append(v)
    return Subspace(out, N, F)


def minimal_injective_resolution(r):
    """Computed as the dual of the minimal projective resolution of the dual
    representation on the opposite poset.  The cogenerators at x are then
    the elements of F_x killed by every map F(x, y), y > x."""
    if not r.functorial:
        check_functoriality(r)
    pr = minimal_projective_resolution(r.dual())
    diffs = [d.transpose() for d in pr.differentials]
    return RepResolution("injective", r.poset, pr.terms, diffs, pr.augmentation, r.field,
                         pr.syzygy_supports)


def rep_resolution_is_exact(r, res):
    """Brute-force check, node by node, that res resolves r."""
    P = r.poset
    F = r.field
    proj = res.kind == "projective"
    for z in P:
        if proj:
            idx = [[k for k, x in enumerate(t) if P.leq(x, z)] for t in res.terms]
            cols = [r.map(res.terms[0][k], z) @ res.augmentation[k] for k in idx[0]]
            mats = [Matrix.from_columns(cols, r.dims[z], F)]
            mats += [d.submatrix(idx[i], idx[i + 1]) for i, d in enumerate(res.differentials)]
        else:
            idx = [[k for k, x in enumerate(t) if P.leq(z, x)] for t in res.terms]
            rows = []
            for k in idx[0]:
                x = res.terms[0][k]
                phi = Matrix([res.augmentation[k]], r.dims[x], F)
                rows.append(list((phi @ r.map(z, x)).rows[0]))
            # transpose the cochain complex into a chain complex
            mats = [Matrix(rows, r.dims[z], F).transpose()]
            mats += [d.submatrix(idx[i + 1], idx[i]).transpose()
                     for i, d in enumerate(res.differentials)]
        sizes = [r.dims[z]] + [len(i) for i in idx]
        if not sequence_is_exact(mats, sizes):
            return False
    return True


def sequence_is_exact(mats, sizes):
    """0 <- V_0 <- V_1 <- ... <- V_l <- 0 with mats[i]: V_{i+1} -> V_i."""
    ranks = [rank(m) if m.nrows and m.ncols else 0 for m in mats]
    if ranks[0] != sizes[0]:
        return False
    for i in range(1, len(mats)):
        a, b = mats[i - 1], mats[i]
        if a.nrows and a.ncols and b.ncols and not (a @ b).is_zero():
            return False
        if ranks[i] != sizes[i] - ranks[i - 1]:
            return False
    return ranks[-1] == sizes[len(mats)]


def functor_from_poset(elements, relations, dims, maps, field=QQ):
    """Convenience constructor from strict relations."""
    P = FinitePoset(elements, relations)
    return PosetRep(P, dims, maps, field)
