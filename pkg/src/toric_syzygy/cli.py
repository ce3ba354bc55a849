"""Command-line front end.

    toric-syzygy COMMAND INPUT.json [--field Q|p] [--format json|table|dot]
                 [--box lo,hi] [--max-side k] [--support I1;I2;...] [--out PATH]

Exit status: 0 success, 1 malformed input or arguments, 2 mathematical
precondition failure, 3 internal invariant violation (or a failed check).
"""
import argparse
import itertools
import json
import os
import sys
from concurrent.futures import ThreadPoolExecutor

from . import serialize as ser
from .arrangement import intersection_lattice, beta, predicted_betti, predicted_local_cohom
from .duality import (bass_from_gcd_lattice, bass_from_injective, bass_table,
                      injective_exact_on_box, injective_resolution)
from .errors import InvariantViolation, PreconditionError, SchemaError
from .gradedmod import (betti_table, bounding_box, free_resolution, from_filtrations,
                        from_monomial_ideal, matlis_dual, verify_exactness)
from .lattice import generate_gcd_lattice, is_integral
from .localcohom import (SupportFamily, point_local_cohom_table, point_local_cohomology,
                         support_local_cohomology)
from .toricmcm import (class_group, enumerate_cuboid_classes, enumerate_singleton_classes,
                       full_verify, mcm_check, symmetry_orbits)

COMMANDS = ["resolve", "betti", "bass", "localcohom", "arrangement", "mcm-enumerate",
            "mcm-verify", "check"]


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise SchemaError("argv", message)


def build_parser():
    p = _Parser(prog="toric-syzygy", description="Exact syzygies, Bass numbers, local "
                "cohomology and MCM classification for multigraded modules.")
    p.add_argument("command", choices=COMMANDS)
    p.add_argument("input", help="UTF-8 JSON input file")
    p.add_argument("--field", help='"Q" or a prime p; overrides the field in the file')
    p.add_argument("--format", default="json", choices=["json", "table", "dot"])
    p.add_argument("--box", help="lo,hi with lo and hi integers or colon-separated degrees")
    p.add_argument("--max-side", type=int, default=None, help="largest cuboid side (default 1)")
    p.add_argument("--support", help='support family "I1;I2;..." of comma-separated '
                   "coordinates, closed under subsets; default the fixed point")
    p.add_argument("--out", help="write the artifact here instead of stdout")
    return p


def threads():
    raw = os.environ.get("TORIC_SYZYGY_THREADS", "1")
    try:
        k = int(raw)
    except ValueError:
        raise SchemaError("TORIC_SYZYGY_THREADS", "expected a positive integer, got %r" % raw)
    if k < 1:
        raise SchemaError("TORIC_SYZYGY_THREADS", "expected a positive integer, got %r" % raw)
    return k


def pmap(f, items):
    """Ordered map, run on up to TORIC_SYZYGY_THREADS threads."""
    items = list(items)
    k = threads()
    if k == 1 or len(items) < 2:
        return [f(x) for x in items]
    with ThreadPoolExecutor(max_workers=k) as ex:
        return list(ex.map(f, items))


def parse_box(s, n):
    if s is None:
        return None
    parts = s.split(",")
    if len(parts) != 2:
        raise SchemaError("--box", "expected lo,hi")
    out = []
    for part in parts:
        try:
            v = [int(x) for x in part.split(":")]
        except ValueError:
            raise SchemaError("--box", "bad bound %r" % part)
        if len(v) == 1:
            v = v * n
        if len(v) != n:
            raise SchemaError("--box", "bound %r needs %d coordinates" % (part, n))
        out.append(tuple(v))
    if not all(a <= b for a, b in zip(*out)):
        raise SchemaError("--box", "need lo <= hi")
    return tuple(out)


def parse_support(s, n):
    if s is None:
        return SupportFamily.point(n)
    sets = []
    for part in s.split(";"):
        part = part.strip()
        if part in ("", "-"):
            sets.append(())
            continue
        try:
            sets.append(tuple(int(x) for x in part.split(",")))
        except ValueError:
            raise SchemaError("--support", "bad coordinate set %r" % part)
    for I in sets:
        if any(not 0 <= i < n for i in I):
            raise SchemaError("--support", "coordinate out of range in %r" % (I,))
    return SupportFamily.closure(n, sets)


def load(path, field_opt):
    try:
        with open(path, encoding="utf-8") as f:
            obj = json.load(f)
    except OSError as e:
        raise SchemaError("input", "cannot read %s (%s)" % (path, e.strerror))
    except (json.JSONDecodeError, UnicodeDecodeError) as e:
        raise SchemaError("input", "not UTF-8 JSON (%s)" % e)
    field = None if field_opt is None else ser.parse_field(field_opt, "--field")
    kind = ser.detect_kind(obj)
    if kind == "filtration":
        return kind, ser.parse_filtration_file(obj, field)
    if kind == "monomial":
        gens, F = ser.parse_monomial_file(obj)
        return kind, (gens, field or F)
    if kind == "arrangement":
        return kind, ser.parse_arrangement_file(obj, field)
    return kind, ser.parse_cone_file(obj)


def module_of(kind, data):
    if kind == "filtration":
        return from_filtrations(data)
    if kind == "monomial":
        return from_monomial_ideal(*data)
    if kind == "arrangement":
        return data.module()
    raise SchemaError("<root>", "this command needs a filtration, monomial or arrangement file")


def _key(c):
    return tuple(float(x) for x in c)


def _label(c):
    return "(" + ",".join(str(x) for x in ser.enc_degree(c)) + ")"


# reports

def resolve_report(m, res):
    lat = sorted(m.lattice, key=_key)
    return {"n": m.n,
            "field": ser.enc_field(m.field),
            "lattice": [{"degree": ser.enc_degree(c), "dim": m.rep.dims[c]} for c in lat],
            "terms": [[ser.enc_degree(c) for c in t] for t in res.terms],
            "differentials": [ser.enc_matrix(d) for d in res.differentials],
            "betti": ser.enc_betti(betti_table(res))}


def betti_report(m, res):
    return {"n": m.n, "betti": ser.enc_betti(betti_table(res)),
            "totals": [len(t) for t in res.terms]}


def bass_report(m):
    return {"n": m.n, "bass": ser.enc_bass(bass_table(m))}


def localcohom_report(m, V, box):
    res = free_resolution(m)
    n = m.n
    point = V.sets == frozenset({()})
    if box is not None:
        degs = list(itertools.product(*[range(a, b + 1) for a, b in zip(*box)]))
        if point:
            vals = pmap(lambda d: point_local_cohomology(res, d), degs)
        else:
            inj = injective_resolution(m, res)
            vals = pmap(lambda d: support_local_cohomology(m, V, d, inj), degs)
        values = [(d, v) for d, v in zip(degs, vals) if v]
    elif point:
        t = point_local_cohom_table(m, res)
        values = [] if t.G is None else [(g, t.values[g]) for g in t.G]
    else:
        inj = injective_resolution(m, res)
        corners = [g for term in inj.terms for (I, g) in term if I in V]
        G = [] if not corners else list(generate_gcd_lattice(corners))
        values = list(zip(G, pmap(lambda d: support_local_cohomology(m, V, d, inj), G)))
    values.sort(key=lambda dv: _key(dv[0]))
    return {"n": n, "support": [list(I) for I in V],
            "values": [{"degree": ser.enc_degree(d), "cohomology": ser.enc_cohomology(v)}
                       for d, v in values]}


def arrangement_report(a):
    m = a.module()
    res = free_resolution(m)
    L = intersection_lattice(a)
    lat = sorted(L, key=lambda X: (X.dim, _key(a.degree(X))))
    lc, G = predicted_local_cohom(a)
    return {"ambient": a.r, "n": a.n, "essential": a.is_essential(),
            "lattice": [{"dim": X.dim, "degree": ser.enc_degree(a.degree(X)),
                         "beta": beta(L, X) if X.dim else 0} for X in lat],
            "predicted_betti": ser.enc_betti(predicted_betti(a)),
            "betti": ser.enc_betti(betti_table(res)),
            "predicted_local_cohomology": [
                {"degree": ser.enc_degree(d), "cohomology": ser.enc_cohomology(lc[d])}
                for d in sorted(G, key=_key)]}


def _cand_entry(A, c):
    return {"i1": list(c.i1), "i2": list(c.i2), "shape": list(c.shape),
            "class": list(A.class_of(c.i1))}


def mcm_enumerate_report(cone, max_side):
    A = class_group(cone)
    cands = enumerate_cuboid_classes(cone, max_side)
    orbits = symmetry_orbits(cone, cands)
    index = {c: k for k, c in enumerate(cands)}
    out = []
    for c in cands:
        e = _cand_entry(A, c)
        e["mcm"] = True
        out.append(e)
    return {"rays": [list(r) for r in cone.rays], "det": cone.det,
            "class_group": list(A.invariants), "max_side": max_side,
            "singleton_classes": len(enumerate_singleton_classes(cone)),
            "candidates": out,
            "symmetry_orbits": [[index[c] for c in o] for o in orbits]}


def mcm_verify_report(cone, cands, max_side):
    A = class_group(cone)
    if not cands:
        cands = enumerate_cuboid_classes(cone, max_side)
    results = pmap(lambda c: full_verify(cone, c), cands)
    out = []
    for c, r in zip(cands, results):
        quick = mcm_check(cone, c)
        if quick != r["mcm"]:
            raise InvariantViolation("cuboid test and full pipeline disagree on %r" % (c,))
        e = _cand_entry(A, c)
        e.update({"mcm": r["mcm"],
                  "witness": None if r["witness"] is None else list(r["witness"]),
                  "splits": r["splits"],
                  "regions": [{"degree": ser.enc_degree(d), "cohomology": ser.enc_cohomology(v),
                               "points": [list(p) for p in sorted(pts)]}
                              for d, v, pts in r["regions"]]})
        out.append(e)
    return {"rays": [list(r) for r in cone.rays], "det": cone.det,
            "class_group": list(A.invariants), "candidates": out}


# cross-checks

def _same_module(a, b):
    return (set(a.lattice) == set(b.lattice) and a.rep.dims == b.rep.dims
            and all(a.rep.map(x, y) == b.rep.map(x, y) for x, y in a.lattice.poset.covers()))


def module_checks(m):
    res = free_resolution(m)
    box = bounding_box(res, 1)
    out = [("d^2 = 0", res.check_complex()),
           ("monomial differentials", res.check_monomial()),
           ("exact on bounding box", verify_exactness(res, box)),
           ("length <= n", res.length <= m.n),
           ("length <= max chain - 1", res.length <= m.lattice.poset.max_chain_length() - 1)]
    if m.is_finitely_generated():
        b1 = bass_table(m, res)
        inj = injective_resolution(m, res)
        b2 = bass_from_injective(inj)
        b3 = bass_from_gcd_lattice(m)
        out.append(("Bass numbers: localizations = injective resolution", b1 == b2))
        out.append(("Bass numbers: localizations = gcd-lattice route", b1 == b3))
        out.append(("injective resolution exact on box", injective_exact_on_box(inj, m, box)))
        t = point_local_cohom_table(m, res)
        V = SupportFamily.point(m.n)
        same = t.G is None or all(support_local_cohomology(m, V, g, inj) == t.values[g] for g in t.G)
        out.append(("point local cohomology: Cech = injective", same))
    out.append(("Matlis dual is an involution", _same_module(matlis_dual(matlis_dual(m)), m)))
    return out


def arrangement_checks(a):
    m = a.module()
    out = module_checks(m)
    res = free_resolution(m)
    out.append(("Betti table = beta invariants", betti_table(res) == predicted_betti(a)))
    lc, G = predicted_local_cohom(a)
    t = point_local_cohom_table(m, res)
    # the predicted lattice also carries degrees of intersections with beta 0,
    # so compare values at the elements of both lattices
    ok = (all(lc[d] == t.at(d) for d in G)
          and (t.G is None or all(lc.get(d) == t.values[d] for d in t.G)))
    out.append(("local cohomology = prediction", ok))
    return out


def cone_checks(cone, cands, max_side):
    A = class_group(cone)
    out = [("|A| = |det|", A.order == abs(cone.det)),
           ("singleton classes = |A| - 1", len(enumerate_singleton_classes(cone)) == A.order - 1)]
    cands = list(cands) + enumerate_cuboid_classes(cone, max_side)
    results = pmap(lambda c: full_verify(cone, c)["mcm"] == mcm_check(cone, c), cands)
    out.append(("cuboid test = full pipeline on %d candidates" % len(cands), all(results)))
    return out


# rendering

def betti_grid(entries):
    """Rows i, columns total degree, then the multigraded listing."""
    cells = {}
    for e in entries:
        c = ser.dec_degree(e["degree"])
        t = sum(c) if is_integral(c) else "inf"
        cells[(e["i"], t)] = cells.get((e["i"], t), 0) + e["multiplicity"]
    rows = sorted({i for i, _ in cells})
    cols = sorted({t for _, t in cells}, key=lambda t: (isinstance(t, str), t))
    w = max([len(str(c)) for c in cols] + [len(str(v)) for v in cells.values()] + [1])
    lines = ["total: " + " ".join(str(c).rjust(w) for c in cols)]
    for i in rows:
        lines.append(("%5d: " % i) + " ".join(
            (str(cells[(i, t)]) if (i, t) in cells else "-").rjust(w) for t in cols))
    lines.append("")
    for e in entries:
        lines.append("%d  {%s}  %s  %d" % (e["i"], ",".join(map(str, e["support"])),
                                          _label(ser.dec_degree(e["degree"])), e["multiplicity"]))
    return "\n".join(lines)


def render_table(command, rep):
    if command in ("resolve", "betti"):
        return betti_grid(rep["betti"])
    if command == "bass":
        lines = ["i  support  corner  hull  multiplicity"]
        for e in rep["bass"]:
            lines.append("%d  {%s}  %s  %s  %d" % (
                e["i"], ",".join(map(str, e["support"])), _label(ser.dec_degree(e["degree"])),
                _label(ser.dec_degree(e["hull_shift"])), e["multiplicity"]))
        return "\n".join(lines)
    if command == "localcohom":
        lines = ["degree  cohomology"]
        for e in rep["values"]:
            coh = ", ".join("H^%s=%d" % kv for kv in e["cohomology"].items()) or "0"
            lines.append("%s  %s" % (_label(ser.dec_degree(e["degree"])), coh))
        return "\n".join(lines)
    if command == "arrangement":
        lines = ["dim  degree  beta"]
        for e in rep["lattice"]:
            lines.append("%d  %s  %d" % (e["dim"], _label(ser.dec_degree(e["degree"])), e["beta"]))
        lines.append("")
        lines.append(betti_grid(rep["betti"]))
        return "\n".join(lines)
    if command in ("mcm-enumerate", "mcm-verify"):
        lines = ["class group: " + (" x ".join("Z/%d" % d for d in rep["class_group"]) or "0")]
        for e in rep["candidates"]:
            lines.append("i1=%s i2=%s shape=%s class=%s %s" % (
                tuple(e["i1"]), tuple(e["i2"]), tuple(e["shape"]), tuple(e["class"]),
                "MCM" if e["mcm"] else "not MCM (witness %s)" % (tuple(e["witness"]),)))
        return "\n".join(lines)
    if command == "check":
        lines = ["%s  %s" % ("PASS" if c["ok"] else "FAIL", c["name"]) for c in rep["checks"]]
        lines.append("PASS" if rep["ok"] else "FAIL")
        return "\n".join(lines)
    raise SchemaError("--format", "table output is not available for %s" % command)


def _dot_id(prefix, c):
    return '"%s%s"' % (prefix, _label(c))


def hasse_dot(name, nodes, covers, label):
    lines = ["digraph %s {" % name, "  rankdir=BT;"]
    for x in nodes:
        lines.append("  %s [label=\"%s\"];" % (_dot_id("", x[0]), label(x)))
    for a, b in covers:
        lines.append("  %s -> %s;" % (_dot_id("", a), _dot_id("", b)))
    lines.append("}")
    return "\n".join(lines)


def module_hasse_dot(m):
    lat = sorted(m.lattice, key=_key)
    covers = sorted(m.lattice.poset.covers(), key=lambda e: (_key(e[0]), _key(e[1])))
    return hasse_dot("lattice", [(c, m.rep.dims[c]) for c in lat], covers,
                     lambda x: "%s / %d" % (_label(x[0]), x[1]))


def resolution_dot(res):
    """Quiver of the resolution; an edge carries the exponent of its monomial."""
    lines = ["digraph resolution {", "  rankdir=RL;"]
    for i, t in enumerate(res.terms):
        for k, c in enumerate(t):
            lines.append('  "F%d_%d" [label="F%d: %s"];' % (i, k, i, _label(c)))
    for i, d in enumerate(res.differentials, start=1):
        for s, ck in enumerate(res.terms[i]):
            for r, cj in enumerate(res.terms[i - 1]):
                if d[r, s] != 0:
                    diff = tuple(0 if a == b else a - b for a, b in zip(ck, cj))
                    lines.append('  "F%d_%d" -> "F%d_%d" [label="%s %s"];'
                                 % (i, s, i - 1, r, ser.enc_scalar(d[r, s]), _label(diff)))
    lines.append("}")
    return "\n".join(lines)


def arrangement_dot(a):
    L = intersection_lattice(a)
    els = sorted(L, key=lambda X: (X.dim, _key(a.degree(X))))
    lines = ["digraph intersections {", "  rankdir=BT;"]
    for X in els:
        lines.append('  %s [label="%s / %d"];' % (_dot_id("", a.degree(X)), _label(a.degree(X)), X.dim))
    cov = sorted(((a.degree(X), a.degree(Y)) for X, Y in L.poset.covers()),
                 key=lambda e: (_key(e[0]), _key(e[1])))
    for x, y in cov:
        lines.append("  %s -> %s;" % (_dot_id("", x), _dot_id("", y)))
    lines.append("}")
    return "\n".join(lines)


def run(args):
    """Returns (exit status, text artifact)."""
    kind, data = load(args.input, args.field)
    fmt = args.format
    max_side = 1 if args.max_side is None else args.max_side
    cmd = args.command
    status = 0
    if cmd in ("resolve", "betti", "bass", "localcohom"):
        m = module_of(kind, data)
        if fmt == "dot":
            if cmd in ("resolve", "betti"):
                return 0, resolution_dot(free_resolution(m))
            return 0, module_hasse_dot(m)
        if cmd == "resolve":
            rep = resolve_report(m, free_resolution(m))
        elif cmd == "betti":
            rep = betti_report(m, free_resolution(m))
        elif cmd == "bass":
            rep = bass_report(m)
        else:
            rep = localcohom_report(m, parse_support(args.support, m.n), parse_box(args.box, m.n))
    elif cmd == "arrangement":
        if kind != "arrangement":
            raise SchemaError("<root>", "arrangement needs an arrangement file")
        if fmt == "dot":
            return 0, arrangement_dot(data)
        rep = arrangement_report(data)
    elif cmd in ("mcm-enumerate", "mcm-verify"):
        if kind != "cone":
            raise SchemaError("<root>", "%s needs a cone file" % cmd)
        if fmt == "dot":
            raise SchemaError("--format", "dot output is not available for %s" % cmd)
        cone, cands = data
        if cmd == "mcm-enumerate":
            rep = mcm_enumerate_report(cone, max_side)
        else:
            rep = mcm_verify_report(cone, cands, max_side)
    else:
        if fmt == "dot":
            raise SchemaError("--format", "dot output is not available for check")
        if kind == "cone":
            checks = cone_checks(data[0], data[1], max_side)
        elif kind == "arrangement":
            checks = arrangement_checks(data)
        else:
            checks = module_checks(module_of(kind, data))
        ok = all(c for _, c in checks)
        rep = {"kind": kind, "checks": [{"name": n, "ok": bool(c)} for n, c in checks], "ok": ok}
        status = 0 if ok else 3
    if fmt == "table":
        return status, render_table(cmd, rep)
    return status, json.dumps(rep, indent=2, sort_keys=True)


def main(argv=None):
    try:
        args = build_parser().parse_args(argv)
        status, text = run(args)
        if args.out:
            try:
                with open(args.out, "w", encoding="utf-8") as f:
                    f.write(text + "\n")
            except OSError as e:
                raise SchemaError("--out", "cannot write %s (%s)" % (args.out, e.strerror))
        else:
            sys.stdout.write(text + "\n")
        return status
    except SchemaError as e:
        print("schema error: %s" % e, file=sys.stderr)
        return 1
    except PreconditionError as e:
        print("precondition failed: %s" % e, file=sys.stderr)
        return 2
    except InvariantViolation as e:
        print("invariant violated: %s" % e, file=sys.stderr)
        return 3


if __name__ == "__main__":
    sys.exit(main())
