"""Degrees in (Z ∪ {±inf})^n, lcm/gcd lattices and finite posets.

A degree is a plain tuple whose entries are ints or the floats -inf/+inf.
Python compares these correctly, so componentwise order, max and min need
no special casing.
"""
import itertools
import math

import numpy as np

from .errors import PreconditionError

NEG_INF = -math.inf
POS_INF = math.inf


def deg(*xs):
    if len(xs) == 1 and not isinstance(xs[0], (int, float)):
        xs = xs[0]
    return tuple(x if isinstance(x, float) and math.isinf(x) else int(x) for x in xs)


def leq(a, b):
    return all(x <= y for x, y in zip(a, b))


def lcm_join(a, b):
    return tuple(max(x, y) for x, y in zip(a, b))


def gcd_meet(a, b):
    return tuple(min(x, y) for x, y in zip(a, b))


def negate(c):
    return tuple(-x for x in c)


def shift(c, k):
    return tuple(x + k for x in c)


def support(c, value=NEG_INF):
    """Coordinates of c equal to the given infinite value."""
    return tuple(i for i, x in enumerate(c) if x == value)


def mask(c, coords, value=NEG_INF):
    coords = set(coords)
    return tuple(value if i in coords else x for i, x in enumerate(c))


def is_integral(c):
    return all(not (isinstance(x, float) and math.isinf(x)) for x in c)


def _closure(gens, op):
    elems = set(gens)
    frontier = list(elems)
    while frontier:
        new = []
        cur = list(elems)
        for a in frontier:
            for b in cur:
                c = op(a, b)
                if c not in elems:
                    elems.add(c)
                    new.append(c)
                    cur.append(c)
        frontier = new
    return elems


class _DegreeLattice:
    kind = None

    def __init__(self, elements):
        elements = sorted(set(deg(e) for e in elements))
        if not elements:
            raise PreconditionError("a lattice needs at least one element")
        n = len(elements[0])
        if any(len(e) != n for e in elements):
            raise PreconditionError("lattice elements have different lengths")
        self.elements = elements
        self.n = n
        self._poset = None

    def __len__(self):
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)

    def __contains__(self, c):
        return tuple(c) in self._set()

    def _set(self):
        if not hasattr(self, "_elset"):
            self._elset = set(self.elements)
        return self._elset

    @property
    def poset(self):
        if self._poset is None:
            self._poset = FinitePoset.from_degrees(self.elements)
        return self._poset

    def __eq__(self, other):
        return type(self) is type(other) and self.elements == other.elements

    def __hash__(self):
        return hash((self.kind, tuple(self.elements)))

    def __repr__(self):
        return "%s(%d elements, n=%d)" % (type(self).__name__, len(self), self.n)


class LcmLattice(_DegreeLattice):
    """Finite set of degrees closed under componentwise max; no +inf."""
    kind = "lcm"

    def __init__(self, elements, check=True):
        super().__init__(elements)
        if check:
            for e in self.elements:
                if POS_INF in e:
                    raise PreconditionError("+inf coordinate in lcm-lattice element %r" % (e,))
            s = self._set()
            for a, b in itertools.combinations(self.elements, 2):
                if lcm_join(a, b) not in s:
                    raise PreconditionError("not join-closed: %r v %r" % (a, b))

    def max_below(self, c):
        """Join of all elements <= c, or None if there are none."""
        out = None
        for e in self.elements:
            if leq(e, c):
                out = e if out is None else lcm_join(out, e)
        return out


class GcdLattice(_DegreeLattice):
    """Finite set of degrees closed under componentwise min; no -inf."""
    kind = "gcd"

    def __init__(self, elements, check=True):
        super().__init__(elements)
        if check:
            for e in self.elements:
                if NEG_INF in e:
                    raise PreconditionError("-inf coordinate in gcd-lattice element %r" % (e,))
            s = self._set()
            for a, b in itertools.combinations(self.elements, 2):
                if gcd_meet(a, b) not in s:
                    raise PreconditionError("not meet-closed: %r ^ %r" % (a, b))

    def min_above(self, c):
        out = None
        for e in self.elements:
            if leq(c, e):
                out = e if out is None else gcd_meet(out, e)
        return out


def generate_lcm_lattice(gens):
    gens = [deg(g) for g in gens]
    if not gens:
        raise PreconditionError("empty generator set")
    n = len(gens[0])
    if any(len(g) != n for g in gens):
        raise PreconditionError("generators have mismatched lengths")
    if any(POS_INF in g for g in gens):
        raise PreconditionError("+inf coordinate in lcm generator")
    return LcmLattice(_closure(gens, lcm_join), check=False)


def generate_gcd_lattice(gens):
    gens = [deg(g) for g in gens]
    if not gens:
        raise PreconditionError("empty generator set")
    n = len(gens[0])
    if any(len(g) != n for g in gens):
        raise PreconditionError("generators have mismatched lengths")
    if any(NEG_INF in g for g in gens):
        raise PreconditionError("-inf coordinate in gcd generator")
    return GcdLattice(_closure(gens, gcd_meet), check=False)


def max_below(L, c):
    return L.max_below(deg(c))


def min_above(G, c):
    return G.min_above(deg(c))


def adjacent(c, d, G):
    """c is adjacent to d in G: c <= d and c is not below any d' in G with d not <= d'."""
    if not leq(c, d):
        return False
    for e in G:
        if not leq(d, e) and leq(c, e):
            return False
    return True


class FinitePoset:
    """A finite poset on hashable elements.

    The order is stored as a boolean matrix `le` indexed by position in
    `elements`. Hasse covers and Möbius values are computed from it.
    """

    def __init__(self, elements, relations=(), _le=None):
        self.elements = list(elements)
        self.index = {x: i for i, x in enumerate(self.elements)}
        if len(self.index) != len(self.elements):
            raise PreconditionError("repeated poset element")
        N = len(self.elements)
        if _le is None:
            le = np.eye(N, dtype=bool)
            for x, y in relations:
                le[self.index[x], self.index[y]] = True
            # transitive closure (Warshall)
            for k in range(N):
                le |= np.outer(le[:, k], le[k, :])
            if np.any(le & le.T & ~np.eye(N, dtype=bool)):
                raise PreconditionError("relations contain a cycle")
        else:
            le = _le
        self.le = le
        self._covers = None
        self._order = None
        self._mobius = {}

    @classmethod
    def from_leq(cls, elements, leq_fn):
        elements = list(elements)
        N = len(elements)
        le = np.zeros((N, N), dtype=bool)
        for i, x in enumerate(elements):
            for j, y in enumerate(elements):
                le[i, j] = bool(leq_fn(x, y))
        if np.any(le & le.T & ~np.eye(N, dtype=bool)):
            raise PreconditionError("relation is not antisymmetric")
        return cls(elements, _le=le)

    @classmethod
    def from_degrees(cls, degrees):
        degrees = list(degrees)
        if not degrees:
            return cls([], _le=np.zeros((0, 0), dtype=bool))
        a = np.array([[float(x) for x in d] for d in degrees])
        le = np.all(a[:, None, :] <= a[None, :, :], axis=2)
        return cls(degrees, _le=le)

    def __len__(self):
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)

    def __contains__(self, x):
        return x in self.index

    def leq(self, x, y):
        return bool(self.le[self.index[x], self.index[y]])

    def less(self, x, y):
        return x != y and self.leq(x, y)

    def _cover_matrix(self):
        if self._covers is None:
            N = len(self.elements)
            lt = self.le & ~np.eye(N, dtype=bool)
            # float product goes through BLAS; path counts stay far below 2**53
            f = lt.astype(np.float64)
            two = (f @ f) > 0
            self._covers = lt & ~two
        return self._covers

    def covers(self):
        """Hasse diagram edges (x, y) with x covered by y."""
        cv = self._cover_matrix()
        return [(self.elements[i], self.elements[j]) for i, j in zip(*np.nonzero(cv))]

    def lower_covers(self, y):
        cv = self._cover_matrix()
        return [self.elements[i] for i in np.nonzero(cv[:, self.index[y]])[0]]

    def upper_covers(self, x):
        cv = self._cover_matrix()
        return [self.elements[j] for j in np.nonzero(cv[self.index[x], :])[0]]

    def below(self, y, strict=False):
        j = self.index[y]
        return [self.elements[i] for i in np.nonzero(self.le[:, j])[0]
                if not (strict and i == j)]

    def above(self, x, strict=False):
        i = self.index[x]
        return [self.elements[j] for j in np.nonzero(self.le[i, :])[0]
                if not (strict and i == j)]

    def linear_extension(self):
        if self._order is None:
            counts = self.le.sum(axis=0)
            order = sorted(range(len(self.elements)), key=lambda i: (counts[i], i))
            self._order = [self.elements[i] for i in order]
        return list(self._order)

    def minimal_elements(self):
        return [x for x in self.elements if len(self.below(x)) == 1]

    def maximal_elements(self):
        return [x for x in self.elements if len(self.above(x)) == 1]

    def max_chain_length(self):
        """Number of elements in a longest chain."""
        if not self.elements:
            return 0
        longest = {}
        for y in self.linear_extension():
            longest[y] = 1 + max([longest[x] for x in self.lower_covers(y)], default=0)
        return max(longest.values())

    def opposite(self):
        return FinitePoset(self.elements, _le=self.le.T.copy())

    def subposet(self, elems):
        idx = [self.index[x] for x in elems]
        return FinitePoset([self.elements[i] for i in idx], _le=self.le[np.ix_(idx, idx)])

    def mobius(self, x, y):
        """μ(x, y) from the defining recursion; 0 unless x <= y."""
        if not self.leq(x, y):
            return 0
        key = (x, y)
        if key in self._mobius:
            return self._mobius[key]
        if x == y:
            val = 1
        else:
            val = -sum(self.mobius(x, z) for z in self.below(y, strict=True) if self.leq(x, z))
        self._mobius[key] = val
        return val

    def chains(self, x, y):
        """All chains x = z_0 < z_1 < ... < z_l = y, as tuples."""
        if not self.leq(x, y):
            return []
        if x == y:
            return [(x,)]
        out = []
        for z in self.above(x, strict=True):
            if self.leq(z, y):
                for c in self.chains(z, y):
                    out.append((x,) + c)
        return out


def chains_ending_at(P, k, X, rank):
    """Chains X_l < ... < X_1 < X_0 = X inside {Y <= X : rank(Y) <= k} ∪ {X}.

    Returned as tuples (X_l, ..., X_0); the single chain (X,) is included."""
    allowed = [Y for Y in P.below(X, strict=True) if rank(Y) <= k]
    out = []

    def grow(chain):
        out.append(tuple(reversed(chain)))
        top = chain[-1]
        for Y in allowed:
            if P.less(Y, top):
                grow(chain + [Y])

    grow([X])
    return out
