"""Localization, minimization, Bass numbers and injective resolutions.

An injective summand is recorded by a degree g with +inf in the coordinates
I: it is the Matlis dual of S_I, placed so that its nonzero degrees are the
c <= g. Bass numbers b^i(I, g) count such summands in the i-th term of the
minimal injective resolution.

For a free resolution F of E and a coordinate set I, the localized
resolution F_{x_I} (minimized) yields the summands with support I: a free
summand S_I(-p) in homological position j gives an injective summand with
corner p - 1 off I in cohomological position n - |I| - j.
"""
import heapq
import itertools

from .errors import InvariantViolation, PreconditionError
from .exactla import Matrix, rank
from .gradedmod import (FreeResolution, admissible_gcd_lattice, free_resolution,
                        matlis_dual, zip_gcd)
from .lattice import POS_INF, is_integral, leq, mask, support
from .posetrep import minimal_injective_resolution

__all__ = ["minimize_complex", "localize_resolution", "bass_table", "injective_resolution",
           "bass_from_gcd_lattice", "bass_from_injective", "matlis_dual", "InjectiveResolution",
           "all_subsets", "injective_exact_on_box", "cousin_total_complex"]


def all_subsets(n):
    return [I for r in range(n + 1) for I in itertools.combinations(range(n), r)]


def _eliminate(terms, maps, field):
    """Cancel unit entries between summands of equal degree.

    terms[k] lists degrees; maps[k] (list of row lists) goes from terms[k+1]
    to terms[k]. Works from k = 0 upward, always on the smallest (row,
    column) pair of the current complex. Returns (keep, maps): keep[k] lists
    the surviving positions of terms[k], maps the reduced matrices as row
    lists. Rows and columns are held sparsely, since these complexes are
    mostly zero.
    """
    alive = [set(range(len(t))) for t in terms]
    # R[k][u] = {v: x} and C[k][v] = {u: x} for maps[k]
    R = [[{v: x for v, x in enumerate(row) if x != 0} for row in M] for M in maps]
    C = []
    for k in range(len(maps)):
        cols = [dict() for _ in range(len(terms[k + 1]))]
        for u, row in enumerate(R[k]):
            for v, x in row.items():
                cols[v][u] = x
        C.append(cols)
    for k in range(len(maps)):
        same = {}
        for v in range(len(terms[k + 1])):
            same.setdefault(terms[k + 1][v], []).append(v)
        eq = [same.get(du, []) for du in terms[k]]

        def pivot_in(u):
            for v in eq[u]:
                if v in alive[k + 1] and R[k][u].get(v, 0) != 0:
                    return v
            return None

        heap = [u for u in sorted(alive[k]) if eq[u]]
        heapq.heapify(heap)
        while heap:
            u = heapq.heappop(heap)
            if u not in alive[k]:
                continue
            v = pivot_in(u)
            if v is None:
                continue
            rowu = R[k][u]
            a = rowu[v]
            touched = []
            for r, f in list(C[k][v].items()):
                if r == u:
                    continue
                f = f / a
                row = R[k][r]
                for c, y in rowu.items():
                    if c == v:
                        continue
                    z = row.get(c, 0) - f * y
                    if z != 0:
                        row[c] = z
                        C[k][c][r] = z
                    else:
                        row.pop(c, None)
                        C[k][c].pop(r, None)
                touched.append(r)
            # drop row u and column v of maps[k]
            for c in rowu:
                C[k][c].pop(u, None)
            for r in C[k][v]:
                R[k][r].pop(v, None)
            R[k][u] = {}
            C[k][v] = {}
            if k > 0:
                for r in C[k - 1][u]:
                    R[k - 1][r].pop(u, None)
                C[k - 1][u] = {}
            if k + 1 < len(maps):
                for c in R[k + 1][v]:
                    C[k + 1][c].pop(v, None)
                R[k + 1][v] = {}
            alive[k].discard(u)
            alive[k + 1].discard(v)
            for r in touched:
                if eq[r]:
                    heapq.heappush(heap, r)
    keep = [sorted(a) for a in alive]
    out = []
    for k in range(len(maps)):
        cols = {v: i for i, v in enumerate(keep[k + 1])}
        rows = []
        for u in keep[k]:
            row = [field(0)] * len(cols)
            for v, x in R[k][u].items():
                row[cols[v]] = x
            rows.append(row)
        out.append(rows)
    return keep, out


def _to_lists(m):
    return [list(r) for r in m.rows]


def _to_matrix(rows, ncols, field):
    return Matrix(rows, ncols, field)


def minimize_complex(res):
    """Split off contractible pieces S(-c) -> S(-c) joined by a nonzero scalar."""
    F = res.field
    terms = [list(t) for t in res.terms]
    maps = [_to_lists(d) for d in res.differentials]
    keep, maps = _eliminate(terms, maps, F)
    terms = [[t[i] for i in kp] for t, kp in zip(terms, keep)]
    aug = None
    if res.augmentation is not None:
        aug = [res.augmentation[i] for i in keep[0]]
    diffs = [_to_matrix(maps[k], len(terms[k + 1]), F) for k in range(len(maps))]
    out = FreeResolution(res.n, terms, diffs, F, res.module, aug)
    out.localized_at = getattr(res, "localized_at", ())
    if not out.check_complex():
        raise InvariantViolation("minimization broke d^2 = 0")
    return out


def localize_resolution(res, I):
    """F_{x_I}: set the coordinates in I to -inf, then minimize."""
    I = tuple(sorted(I))
    terms = [[mask(c, I) for c in t] for t in res.terms]
    loc = FreeResolution(res.n, terms, res.differentials, res.field, res.module, None)
    loc.localized_at = I
    out = minimize_complex(loc)
    out.localized_at = I
    return out


def _corner(p, I):
    return tuple(POS_INF if k in I else p[k] - 1 for k in range(len(p)))


def bass_table(m, res=None):
    """{(i, I, g): b^i} read off the minimized localizations of a free resolution."""
    if not m.is_finitely_generated():
        raise PreconditionError("bass_table needs a finitely generated module")
    if res is None:
        res = free_resolution(m)
    n = m.n
    out = {}
    for I in all_subsets(n):
        loc = localize_resolution(res, I)
        for j, t in enumerate(loc.terms):
            for p in t:
                i = n - len(I) - j
                if i < 0:
                    raise InvariantViolation("negative cohomological index for support %r" % (I,))
                key = (i, I, _corner(p, I))
                out[key] = out.get(key, 0) + 1
    return out


class InjectiveResolution:
    """terms[q] lists (I, g) per summand; differentials[q] maps term q to q+1."""

    def __init__(self, n, terms, differentials, field):
        self.n = n
        self.terms = terms
        self.differentials = differentials
        self.field = field

    @property
    def length(self):
        return max([q for q, t in enumerate(self.terms) if t], default=0)

    def census(self):
        out = {}
        for q, t in enumerate(self.terms):
            for I, g in t:
                out[(q, I, g)] = out.get((q, I, g), 0) + 1
        return out


def cousin_total_complex(res):
    """F ⊗ (Cousin complex of S) for a free resolution F.

    Returns (cols, labels, delta): cols[q] lists (I, j, k) for the summand
    F_j[k] ⊗ Š_I in position q = n - |I| - j, labels[q] the matching
    (I, corner) pairs and delta[q] the matrix (as row lists) of q -> q+1.
    The differential is φ ⊗ 1 plus (-1)^j times the Cousin maps
    Š_I -> Š_{I-i}, whose sign is (-1)^(position of i in I)."""
    n = res.n
    F = res.field
    summands = {}
    for I in all_subsets(n):
        for j, t in enumerate(res.terms):
            q = n - len(I) - j
            for k in range(len(t)):
                summands.setdefault(q, []).append((I, j, k))
    qmin, qmax = min(summands), max(summands)
    cols = {q: summands.get(q, []) for q in range(qmin, qmax + 1)}
    pos = {}
    for q, lst in cols.items():
        for idx, s in enumerate(lst):
            pos[s] = idx
    delta = {}
    for q in range(qmin, qmax):
        src, tgt = cols[q], cols[q + 1]
        M = [[F(0)] * len(src) for _ in tgt]
        for c, (I, j, k) in enumerate(src):
            if j >= 1:
                d = res.differentials[j - 1]
                for l in range(len(res.terms[j - 1])):
                    x = d[l, k]
                    if x != 0:
                        M[pos[(I, j - 1, l)]][c] += x
            sign_j = -1 if j % 2 else 1
            for a, i in enumerate(I):
                J = I[:a] + I[a + 1:]
                M[pos[(J, j, k)]][c] += F(sign_j * (-1 if a % 2 else 1))
        delta[q] = M
    labels = {q: [(I, _corner(res.terms[j][k], I)) for I, j, k in lst] for q, lst in cols.items()}
    return cols, labels, delta


def injective_resolution(m, res=None):
    """Minimal injective resolution: cancel the unit entries of the total
    complex F ⊗ (Cousin complex of S), see cousin_total_complex."""
    if not m.is_finitely_generated():
        raise PreconditionError("injective_resolution needs a finitely generated module")
    if res is None:
        res = free_resolution(m)
    n = m.n
    F = m.field
    cols, degree, delta = cousin_total_complex(res)
    qmin, qmax = min(cols), max(cols)
    # reverse into a chain complex for the elimination routine
    order = list(range(qmax, qmin - 1, -1))
    terms = [[g for _, g in degree[q]] for q in order]
    labels = [list(degree[q]) for q in order]
    maps = [delta[q] for q in order[1:]]
    keep, maps = _eliminate(terms, maps, F)
    labels = [[lab[i] for i in kp] for lab, kp in zip(labels, keep)]
    out_terms = {}
    out_maps = {}
    for k, q in enumerate(order):
        out_terms[q] = labels[k]
        if k + 1 < len(order):
            out_maps[q - 1] = Matrix(maps[k], len(labels[k + 1]), F)
    for q in range(qmin, 0):
        if out_terms.get(q):
            raise InvariantViolation("injective resolution has a term in position %d" % q)
    top = max([q for q in out_terms if out_terms[q]], default=0)
    terms_list = [out_terms.get(q, []) for q in range(0, top + 1)]
    diffs = [out_maps[q] for q in range(0, top)]
    for a, b in zip(diffs, diffs[1:]):
        if a.ncols and a.nrows and b.nrows and not (b @ a).is_zero():
            raise InvariantViolation("injective resolution differential squares to nonzero")
    return InjectiveResolution(n, terms_list, diffs, F)


def bass_from_injective(inj):
    return inj.census()


def bass_from_gcd_lattice(m, G=None):
    """Bass numbers from the poset-level minimal injective resolution of the
    restriction of E to an admissible gcd-lattice. That resolution is the
    dual of the projective resolution of the Matlis dual on the negated
    lattice."""
    if G is None:
        G = admissible_gcd_lattice(m)
    rep = zip_gcd(m, G)
    res = minimal_injective_resolution(rep)
    out = {}
    for q, t in enumerate(res.terms):
        for g in t:
            key = (q, support(g, POS_INF), g)
            out[key] = out.get(key, 0) + 1
    return out


def injective_exact_on_box(inj, m, box):
    """Degreewise check that 0 -> E -> J^0 -> J^1 -> ... is exact in the box.

    Without the coaugmentation this compares H^0 with E_c and asks for
    H^q = 0 for q > 0."""
    lo, hi = box
    n = m.n
    vals = [set() for _ in range(n)]
    for t in inj.terms:
        for _, g in t:
            for k, x in enumerate(g):
                if is_integral((x,)):
                    vals[k].add(x)
    for c in m.lattice:
        for k, x in enumerate(c):
            if is_integral((x,)):
                vals[k].add(x)
    # conditions are c_k <= g_k and c_k >= l_k, so these values meet every cell
    grid = [sorted({lo[k], hi[k]} | {x + e for x in vals[k] for e in (-1, 0, 1)
                                       if lo[k] <= x + e <= hi[k]}) for k in range(n)]
    for c in itertools.product(*grid):
        idx = tuple(tuple(a for a, (_, g) in enumerate(t) if leq(c, g)) for t in inj.terms)
        sizes = [len(i) for i in idx]
        ranks = [rank(d.submatrix(idx[q + 1], idx[q])) if idx[q + 1] and idx[q] else 0
                 for q, d in enumerate(inj.differentials)]
        ranks = [0] + ranks + [0]
        for q in range(len(sizes)):
            h = sizes[q] - ranks[q + 1] - ranks[q]
            want = m.dim_at(c) if q == 0 else 0
            if h != want:
                return False
    return True
