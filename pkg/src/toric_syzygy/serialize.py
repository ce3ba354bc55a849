"""JSON input parsing and output encoding.

Rationals are strings "num/den" (or plain integers), infinite degree
coordinates are the strings "inf" and "-inf". Output documents follow the
schemas below; all lists are emitted in a fixed sorted order.
"""
import math
from fractions import Fraction

from .errors import SchemaError
from .exactla import GF, QQ, Mod, Subspace


def parse_field(value, where="field"):
    if value is None or value == "Q":
        return QQ
    if isinstance(value, dict) and set(value) == {"p"} and isinstance(value["p"], int):
        try:
            return GF(value["p"])
        except ValueError as e:
            raise SchemaError(where + ".p", str(e))
    if isinstance(value, str) and value.isdigit():
        return parse_field({"p": int(value)}, where)
    raise SchemaError(where, 'expected "Q" or {"p": prime}')


def parse_scalar(x, field, where):
    if isinstance(x, bool) or not isinstance(x, (int, str)):
        raise SchemaError(where, "expected an integer or a 'num/den' string")
    try:
        return field(Fraction(x) if isinstance(x, str) else x)
    except (ValueError, ZeroDivisionError) as e:
        raise SchemaError(where, "bad rational %r (%s)" % (x, e))


def _require(obj, key, kind, where):
    if not isinstance(obj, dict):
        raise SchemaError(where or "<root>", "expected an object")
    if key not in obj:
        raise SchemaError((where + "." if where else "") + key, "missing")
    v = obj[key]
    if not isinstance(v, kind) or isinstance(v, bool):
        raise SchemaError((where + "." if where else "") + key, "wrong type")
    return v


def parse_filtration_file(obj, field=None):
    from .gradedmod import FiltrationData
    F = field or parse_field(obj.get("field") if isinstance(obj, dict) else None)
    r = _require(obj, "ambient", int, "")
    if r < 0:
        raise SchemaError("ambient", "must be nonnegative")
    filts = _require(obj, "filtrations", list, "")
    out = []
    for k, filt in enumerate(filts):
        w = "filtrations[%d]" % k
        if not isinstance(filt, list) or not filt:
            raise SchemaError(w, "expected a nonempty list of steps")
        steps = []
        for s, step in enumerate(filt):
            ws = "%s[%d]" % (w, s)
            i = _require(step, "step", int, ws)
            basis = _require(step, "basis", list, ws)
            vecs = []
            for b, v in enumerate(basis):
                wb = "%s.basis[%d]" % (ws, b)
                if not isinstance(v, list) or len(v) != r:
                    raise SchemaError(wb, "expected a vector of length %d" % r)
                vecs.append([parse_scalar(x, F, "%s[%d]" % (wb, e)) for e, x in enumerate(v)])
            steps.append((i, Subspace(vecs, r, F)))
        out.append(steps)
    return FiltrationData(r, out, F)


def parse_monomial_file(obj):
    gens = _require(obj, "monomials", list, "")
    if not gens:
        raise SchemaError("monomials", "empty")
    n = None
    for k, g in enumerate(gens):
        if not isinstance(g, list) or not all(isinstance(x, int) and not isinstance(x, bool) for x in g):
            raise SchemaError("monomials[%d]" % k, "expected a list of integers")
        if n is None:
            n = len(g)
        elif len(g) != n:
            raise SchemaError("monomials[%d]" % k, "length differs from monomials[0]")
    return [tuple(g) for g in gens], parse_field(obj.get("field"))


def parse_arrangement_file(obj, field=None):
    from .arrangement import Arrangement
    F = field or parse_field(obj.get("field") if isinstance(obj, dict) else None)
    normals = _require(obj, "normals", list, "")
    shifts = _require(obj, "shifts", list, "")
    if len(shifts) != len(normals):
        raise SchemaError("shifts", "need one [i, j] pair per normal")
    r = obj.get("ambient")
    if r is None:
        if not normals:
            raise SchemaError("ambient", "required when there are no normals")
        if not isinstance(normals[0], list):
            raise SchemaError("normals[0]", "expected a list")
        r = len(normals[0])
    nv = []
    for k, u in enumerate(normals):
        if not isinstance(u, list) or len(u) != r:
            raise SchemaError("normals[%d]" % k, "expected a vector of length %d" % r)
        nv.append([parse_scalar(x, F, "normals[%d][%d]" % (k, e)) for e, x in enumerate(u)])
    sv = []
    for k, p in enumerate(shifts):
        if (not isinstance(p, list) or len(p) != 2
                or not all(isinstance(x, int) and not isinstance(x, bool) for x in p)):
            raise SchemaError("shifts[%d]" % k, "expected [i, j] integers")
        sv.append(tuple(p))
    extra = obj.get("extra", [])
    if not isinstance(extra, list) or not all(isinstance(x, int) for x in extra):
        raise SchemaError("extra", "expected a list of integers")
    return Arrangement(nv, sv, extra, F, ambient=r)


def parse_cone_file(obj):
    from .toricmcm import McmCandidate, SimplicialCone
    rays = _require(obj, "rays", list, "")
    for k, r in enumerate(rays):
        if not isinstance(r, list) or not all(isinstance(x, int) and not isinstance(x, bool) for x in r):
            raise SchemaError("rays[%d]" % k, "expected a list of integers")
    cone = SimplicialCone(rays)
    cands = []
    for k, c in enumerate(obj.get("candidates", [])):
        w = "candidates[%d]" % k
        i1 = _require(c, "i1", list, w)
        i2 = _require(c, "i2", list, w)
        if len(i1) != cone.d or len(i2) != cone.d:
            raise SchemaError(w, "i1 and i2 need %d entries" % cone.d)
        cands.append(McmCandidate(i1, i2))
    return cone, cands


def detect_kind(obj):
    if not isinstance(obj, dict):
        raise SchemaError("<root>", "expected a JSON object")
    if "filtrations" in obj:
        return "filtration"
    if "monomials" in obj:
        return "monomial"
    if "normals" in obj:
        return "arrangement"
    if "rays" in obj:
        return "cone"
    raise SchemaError("<root>", "no 'filtrations', 'monomials', 'normals' or 'rays' key")


def enc_field(F):
    return "Q" if F.char == 0 else {"p": F.char}


def enc_scalar(x):
    if isinstance(x, Mod):
        return str(x.v)
    x = Fraction(x)
    return str(x.numerator) if x.denominator == 1 else "%d/%d" % (x.numerator, x.denominator)


def enc_degree(c):
    out = []
    for x in c:
        if isinstance(x, float) and math.isinf(x):
            out.append("inf" if x > 0 else "-inf")
        else:
            out.append(int(x))
    return out


def dec_degree(c):
    return tuple(math.inf if x == "inf" else -math.inf if x == "-inf" else int(x) for x in c)


def enc_matrix(m):
    return [[enc_scalar(x) for x in r] for r in m.rows]


def _deg_key(c):
    return tuple(float(x) for x in c)


def enc_betti(table):
    items = sorted(table.items(), key=lambda kv: (kv[0][0], kv[0][1], _deg_key(kv[0][2])))
    return [{"i": i, "support": list(I), "degree": enc_degree(c), "multiplicity": v}
            for (i, I, c), v in items]


def enc_bass(table):
    items = sorted(table.items(), key=lambda kv: (kv[0][0], len(kv[0][1]), kv[0][1], _deg_key(kv[0][2])))
    out = []
    for (i, I, c), v in items:
        shifted = [x + 1 if not (isinstance(x, float) and math.isinf(x)) else x for x in c]
        out.append({"i": i, "support": list(I), "degree": enc_degree(c),
                    "hull_shift": enc_degree(shifted), "multiplicity": v})
    return out


def enc_cohomology(vals):
    return {str(i): v for i, v in sorted(vals.items())}


_DEGREE = {"type": "array", "items": {"anyOf": [{"type": "integer"}, {"enum": ["inf", "-inf"]}]}}
_SCALAR = {"type": "string", "pattern": r"^-?\d+(/\d+)?$"}

BETTI_ENTRY = {
    "type": "object",
    "required": ["i", "support", "degree", "multiplicity"],
    "properties": {"i": {"type": "integer", "minimum": 0},
                   "support": {"type": "array", "items": {"type": "integer"}},
                   "degree": _DEGREE,
                   "multiplicity": {"type": "integer", "minimum": 1}},
}

SCHEMAS = {
    "resolve": {
        "type": "object",
        "required": ["n", "field", "lattice", "terms", "differentials", "betti"],
        "properties": {
            "field": {"oneOf": [{"const": "Q"},
                                {"type": "object", "required": ["p"],
                                 "properties": {"p": {"type": "integer"}}}]},
            "n": {"type": "integer"},
            "lattice": {"type": "array", "items": {"type": "object",
                                                    "required": ["degree", "dim"]}},
            "terms": {"type": "array", "items": {"type": "array", "items": _DEGREE}},
            "differentials": {"type": "array", "items": {"type": "array",
                                                          "items": {"type": "array", "items": _SCALAR}}},
            "betti": {"type": "array", "items": BETTI_ENTRY},
        },
    },
    "betti": {
        "type": "object",
        "required": ["n", "betti", "totals"],
        "properties": {"n": {"type": "integer"}, "betti": {"type": "array", "items": BETTI_ENTRY},
                       "totals": {"type": "array", "items": {"type": "integer"}}},
    },
    "bass": {
        "type": "object",
        "required": ["n", "bass"],
        "properties": {"n": {"type": "integer"}, "bass": {"type": "array", "items": {
            "type": "object",
            "required": ["i", "support", "degree", "hull_shift", "multiplicity"],
            "properties": {"degree": _DEGREE, "hull_shift": _DEGREE}}}},
    },
    "localcohom": {
        "type": "object",
        "required": ["n", "support", "values"],
        "properties": {"values": {"type": "array", "items": {
            "type": "object", "required": ["degree", "cohomology"],
            "properties": {"degree": _DEGREE,
                           "cohomology": {"type": "object",
                                          "additionalProperties": {"type": "integer"}}}}}},
    },
    "arrangement": {
        "type": "object",
        "required": ["ambient", "n", "essential", "lattice", "predicted_betti",
                     "predicted_local_cohomology"],
    },
    "mcm": {
        "type": "object",
        "required": ["rays", "class_group", "candidates"],
        "properties": {"class_group": {"type": "array", "items": {"type": "integer"}},
                       "candidates": {"type": "array", "items": {
                           "type": "object", "required": ["i1", "i2", "mcm"]}}},
    },
    "check": {
        "type": "object",
        "required": ["kind", "checks", "ok"],
        "properties": {"checks": {"type": "array", "items": {
            "type": "object", "required": ["name", "ok"]}}},
    },
}
