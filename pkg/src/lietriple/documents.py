"""JSON documents for every object the command line reads or writes.

A document is {"kind": ..., "version": "1", "payload": {...}}.  Scalars are
decimal integers or "p/q" strings; tensors are sparse lists of
[[index, ...], value] with omitted entries zero.  Unknown and missing fields
are errors that name the field path.
"""

import json
import re

from . import _tensor as T
from .cochain import (Cochain, CochainPair, CochainQuadruple, SkewSignature, SIG_NU,
                      SIG_OMEGA)
from .crossed import CrossedExtension, CrossedModuleLYA, LeibnizCrossedModule, \
    ReductiveCrossedModule
from .exactla import DimensionError, Q, rational_str
from .lya import LYAlgebra, LeibnizAlgebra, LieAlgebra, ReductiveDecomposition
from .rep import LYAction, Representation
from .twoterm import TwoTermAlgebra, TwoTermHomomorphism

VERSION = "1"

KINDS = ("lya", "lie", "leibniz", "rep", "action", "cochain", "quadruple", "twoterm",
         "homomorphism", "crossed", "leibniz-crossed", "reductive", "reductive-crossed",
         "extension", "sections")

_RATIONAL = re.compile(r"^-?\d+(/\d+)?$")


class SchemaError(ValueError):
    """A document does not match its schema; the message starts with the field path."""

    def __init__(self, path, message):
        super().__init__("%s: %s" % (path, message))
        self.path = path


# reading helpers

def _fields(obj, path, required, optional=()):
    if not isinstance(obj, dict):
        raise SchemaError(path, "expected an object")
    unknown = sorted(set(obj) - set(required) - set(optional))
    if unknown:
        raise SchemaError(path, "unknown field %r" % unknown[0])
    for k in required:
        if k not in obj:
            raise SchemaError(path, "missing field %r" % k)
    return obj


def _int(x, path, lo=0):
    if isinstance(x, bool) or not isinstance(x, int):
        raise SchemaError(path, "expected an integer")
    if x < lo:
        raise SchemaError(path, "expected an integer >= %d" % lo)
    return x


def _scalar(x, path):
    if isinstance(x, bool):
        raise SchemaError(path, "expected a rational")
    if isinstance(x, int):
        return Q(x)
    if isinstance(x, str) and _RATIONAL.match(x.strip()):
        try:
            return Q(x)
        except ZeroDivisionError:
            raise SchemaError(path, "zero denominator")
    raise SchemaError(path, "expected a decimal integer or a \"p/q\" string")


def _list(x, path):
    if not isinstance(x, list):
        raise SchemaError(path, "expected a list")
    return x


def _sparse(entries, shape, path):
    out = T.zeros(shape)
    seen = set()
    for n, item in enumerate(_list(entries, path)):
        p = "%s[%d]" % (path, n)
        if not isinstance(item, list) or len(item) != 2:
            raise SchemaError(p, "expected [[index, ...], value]")
        idx = _list(item[0], p + "[0]")
        if len(idx) != len(shape):
            raise DimensionError("%s[0]: index has %d entries, tensor has %d axes"
                                 % (p, len(idx), len(shape)))
        for k, (i, s) in enumerate(zip(idx, shape)):
            _int(i, "%s[0][%d]" % (p, k))
            if i >= s:
                raise DimensionError("%s[0][%d]: index %d out of range for axis of size %d"
                                     % (p, k, i, s))
        key = tuple(idx)
        if key in seen:
            raise SchemaError(p, "repeated index %s" % (key,))
        seen.add(key)
        out[key] = _scalar(item[1], p + "[1]")
    return out


def _vectors(rows, n, path):
    out = []
    for k, row in enumerate(_list(rows, path)):
        p = "%s[%d]" % (path, k)
        row = _list(row, p)
        if len(row) != n:
            raise DimensionError("%s: vector has length %d, expected %d" % (p, len(row), n))
        out.append([_scalar(v, "%s[%d]" % (p, j)) for j, v in enumerate(row)])
    return out


def _cochain_entries(sig, d, m, entries, path):
    out = {}
    for n, item in enumerate(_list(entries, path)):
        p = "%s[%d]" % (path, n)
        if not isinstance(item, list) or len(item) != 2:
            raise SchemaError(p, "expected [[args..., target], value]")
        idx = _list(item[0], p + "[0]")
        if len(idx) != sig.arity + 1:
            raise DimensionError("%s[0]: index has %d entries, expected %d"
                                 % (p, len(idx), sig.arity + 1))
        for k, i in enumerate(idx):
            _int(i, "%s[0][%d]" % (p, k))
            if i >= (m if k == sig.arity else d):
                raise DimensionError("%s[0][%d]: index %d out of range" % (p, k, i))
        key = tuple(idx)
        if key in out:
            raise SchemaError(p, "repeated index %s" % (key,))
        out[key] = _scalar(item[1], p + "[1]")
    try:
        return Cochain.from_sparse(sig, d, m, out)
    except ValueError as exc:
        raise SchemaError(path, str(exc))


# writing helpers

def _render_sparse(arr):
    return [[list(idx), rational_str(v)] for idx, v in T.sparse_items(arr)]


def _render_cochain(c):
    return [[list(idx), rational_str(v)] for idx, v in c.sparse()]


def _render_vectors(vs):
    return [[rational_str(v) for v in vec] for vec in vs]


# per-kind schemas: (read, write) pairs

def _read_lya(p, path):
    _fields(p, path, ("dim", "binary", "ternary"))
    d = _int(p["dim"], path + ".dim")
    return LYAlgebra(d, _sparse(p["binary"], (d,) * 3, path + ".binary"),
                     _sparse(p["ternary"], (d,) * 4, path + ".ternary"), validate=False)


def _write_lya(a):
    return {"dim": a.dim, "binary": _render_sparse(a.binary),
            "ternary": _render_sparse(a.ternary)}


def _read_lie(p, path):
    _fields(p, path, ("dim", "bracket"))
    d = _int(p["dim"], path + ".dim")
    return LieAlgebra(d, _sparse(p["bracket"], (d,) * 3, path + ".bracket"), validate=False)


def _write_lie(g):
    return {"dim": g.dim, "bracket": _render_sparse(g.bracket_tensor)}


def _read_leibniz(p, path):
    _fields(p, path, ("dim", "product"))
    d = _int(p["dim"], path + ".dim")
    return LeibnizAlgebra(d, _sparse(p["product"], (d,) * 3, path + ".product"))


def _write_leibniz(l):
    return {"dim": l.dim, "product": _render_sparse(l.product)}


def _read_rep(p, path):
    _fields(p, path, ("algebra_dim", "module_dim", "rho", "D", "theta"))
    d = _int(p["algebra_dim"], path + ".algebra_dim")
    m = _int(p["module_dim"], path + ".module_dim")
    return Representation(d, m, _sparse(p["rho"], (d, m, m), path + ".rho"),
                          _sparse(p["D"], (d, d, m, m), path + ".D"),
                          _sparse(p["theta"], (d, d, m, m), path + ".theta"))


def _write_rep(r):
    return {"algebra_dim": r.algebra_dim, "module_dim": r.module_dim,
            "rho": _render_sparse(r.rho), "D": _render_sparse(r.D),
            "theta": _render_sparse(r.theta)}


def _read_action(p, path):
    _fields(p, path, ("rep", "target"))
    return LYAction(_read_rep(p["rep"], path + ".rep"), _read_lya(p["target"], path + ".target"))


def _write_action(a):
    return {"rep": _write_rep(a.rep), "target": _write_lya(a.target)}


def _read_signature(p, path):
    _fields(p, path, ("arity", "skew_pairs"))
    arity = _int(p["arity"], path + ".arity")
    pairs = []
    for k, pair in enumerate(_list(p["skew_pairs"], path + ".skew_pairs")):
        q = "%s.skew_pairs[%d]" % (path, k)
        pair = _list(pair, q)
        if len(pair) != 2:
            raise SchemaError(q, "expected a pair of slots")
        pairs.append(tuple(_int(s, q) for s in pair))
    try:
        return SkewSignature(arity, tuple(pairs))
    except ValueError as exc:
        raise SchemaError(path, str(exc))


def _read_cochain(p, path):
    _fields(p, path, ("signature", "source_dim", "target_dim", "entries"))
    sig = _read_signature(p["signature"], path + ".signature")
    d = _int(p["source_dim"], path + ".source_dim")
    m = _int(p["target_dim"], path + ".target_dim")
    return _cochain_entries(sig, d, m, p["entries"], path + ".entries")


def _write_cochain(c):
    return {"signature": c.signature.to_dict(), "source_dim": c.source_dim,
            "target_dim": c.target_dim, "entries": _render_cochain(c)}


def _read_parts(cls, p, path, names=None):
    names = names or cls.names
    _fields(p, path, ("source_dim", "target_dim") + tuple(names))
    d = _int(p["source_dim"], path + ".source_dim")
    m = _int(p["target_dim"], path + ".target_dim")
    return cls(*(_cochain_entries(sig, d, m, p[n], "%s.%s" % (path, n))
                 for n, sig in zip(names, cls.signatures)))


def _write_parts(q):
    out = {"source_dim": q.source_dim, "target_dim": q.target_dim}
    for n, c in zip(type(q).names, q.parts):
        out[n] = _render_cochain(c)
    return out


def _read_quadruple(p, path):
    return _read_parts(CochainQuadruple, p, path)


_TWOTERM = ("v0_dim", "v1_dim", "d", "b00", "t000", "rho", "D", "theta",
            "l3", "l4hat", "l4tilde", "l5")


def _read_twoterm(p, path):
    _fields(p, path, _TWOTERM)
    n0 = _int(p["v0_dim"], path + ".v0_dim")
    n1 = _int(p["v1_dim"], path + ".v1_dim")
    maps = [_cochain_entries(sig, n0, n1, p[n], "%s.%s" % (path, n))
            for n, sig in zip(CochainQuadruple.names, CochainQuadruple.signatures)]
    return TwoTermAlgebra(n0, n1, _sparse(p["d"], (n0, n1), path + ".d"),
                          _sparse(p["b00"], (n0,) * 3, path + ".b00"),
                          _sparse(p["t000"], (n0,) * 4, path + ".t000"),
                          _sparse(p["rho"], (n0, n1, n1), path + ".rho"),
                          _sparse(p["D"], (n0, n0, n1, n1), path + ".D"),
                          _sparse(p["theta"], (n0, n0, n1, n1), path + ".theta"),
                          *maps, validate=False)


def _write_twoterm(t):
    out = {"v0_dim": t.v0_dim, "v1_dim": t.v1_dim, "d": _render_sparse(t.d),
           "b00": _render_sparse(t.b00), "t000": _render_sparse(t.t000),
           "rho": _render_sparse(t.rho), "D": _render_sparse(t.D),
           "theta": _render_sparse(t.theta)}
    for n, c in zip(CochainQuadruple.names, t.quadruple().parts):
        out[n] = _render_cochain(c)
    return out


class HomomorphismDocument:
    """A homomorphism together with its source and target."""

    def __init__(self, source, target, hom):
        self.source, self.target, self.hom = source, target, hom

    def __eq__(self, other):
        return (isinstance(other, HomomorphismDocument) and self.source == other.source
                and self.target == other.target and self.hom == other.hom)


def _read_homomorphism(p, path):
    _fields(p, path, ("source", "target", "phi0", "phi1", "phi2", "phi3"))
    s = _read_twoterm(p["source"], path + ".source")
    t = _read_twoterm(p["target"], path + ".target")
    phi0 = _sparse(p["phi0"], (t.v0_dim, s.v0_dim), path + ".phi0")
    phi1 = _sparse(p["phi1"], (t.v1_dim, s.v1_dim), path + ".phi1")
    phi2 = _cochain_entries(SIG_NU, s.v0_dim, t.v1_dim, p["phi2"], path + ".phi2")
    phi3 = _cochain_entries(SIG_OMEGA, s.v0_dim, t.v1_dim, p["phi3"], path + ".phi3")
    return HomomorphismDocument(s, t, TwoTermHomomorphism(phi0, phi1, phi2, phi3))


def _write_homomorphism(h):
    return {"source": _write_twoterm(h.source), "target": _write_twoterm(h.target),
            "phi0": _render_sparse(h.hom.phi0), "phi1": _render_sparse(h.hom.phi1),
            "phi2": _render_cochain(h.hom.phi2), "phi3": _render_cochain(h.hom.phi3)}


def _read_crossed(p, path):
    _fields(p, path, ("t", "v", "action", "boundary"))
    t = _read_lya(p["t"], path + ".t")
    v = _read_lya(p["v"], path + ".v")
    r = _read_rep(p["action"], path + ".action")
    return CrossedModuleLYA(t, v, r, _sparse(p["boundary"], (t.dim, v.dim), path + ".boundary"))


def _write_crossed(c):
    return {"t": _write_lya(c.t), "v": _write_lya(c.v), "action": _write_rep(c.rep),
            "boundary": _render_sparse(c.boundary)}


def _read_leibniz_crossed(p, path):
    _fields(p, path, ("l", "v", "left", "right", "phi"))
    l = _read_leibniz(p["l"], path + ".l")
    v = _read_leibniz(p["v"], path + ".v")
    n, m = l.dim, v.dim
    return LeibnizCrossedModule(l, v, _sparse(p["left"], (n, m, m), path + ".left"),
                                _sparse(p["right"], (m, n, m), path + ".right"),
                                _sparse(p["phi"], (n, m), path + ".phi"))


def _write_leibniz_crossed(lc):
    return {"l": _write_leibniz(lc.l), "v": _write_leibniz(lc.v),
            "left": _render_sparse(lc.left), "right": _render_sparse(lc.right),
            "phi": _render_sparse(lc.phi)}


def _read_reductive(p, path):
    _fields(p, path, ("lie", "h_basis", "m_basis"))
    g = _read_lie(p["lie"], path + ".lie")
    return ReductiveDecomposition(g, _vectors(p["h_basis"], g.dim, path + ".h_basis"),
                                  _vectors(p["m_basis"], g.dim, path + ".m_basis"))


def _write_reductive(dec):
    return {"lie": _write_lie(dec.lie), "h_basis": _render_vectors(dec.h.basis),
            "m_basis": _render_vectors(dec.m.basis)}


def _read_reductive_crossed(p, path):
    _fields(p, path, ("g", "v", "act", "phi", "h_basis", "m_basis", "v1_basis", "v2_basis"))
    g = _read_lie(p["g"], path + ".g")
    v = _read_lie(p["v"], path + ".v")
    return ReductiveCrossedModule.build(
        v, g, _sparse(p["act"], (g.dim, v.dim, v.dim), path + ".act"),
        _sparse(p["phi"], (g.dim, v.dim), path + ".phi"),
        _vectors(p["h_basis"], g.dim, path + ".h_basis"),
        _vectors(p["m_basis"], g.dim, path + ".m_basis"),
        _vectors(p["v1_basis"], v.dim, path + ".v1_basis"),
        _vectors(p["v2_basis"], v.dim, path + ".v2_basis"))


def _write_reductive_crossed(rc):
    return {"g": _write_lie(rc.g), "v": _write_lie(rc.v), "act": _render_sparse(rc.act),
            "phi": _render_sparse(rc.phi),
            "h_basis": _render_vectors(rc.g_dec.h.basis),
            "m_basis": _render_vectors(rc.g_dec.m.basis),
            "v1_basis": _render_vectors(rc.v_dec.h.basis),
            "v2_basis": _render_vectors(rc.v_dec.m.basis)}


def _read_extension(p, path):
    _fields(p, path, ("crossed", "t", "m_dim", "i", "pi", "s", "q"))
    c = _read_crossed(p["crossed"], path + ".crossed")
    t = _read_lya(p["t"], path + ".t")
    m = _int(p["m_dim"], path + ".m_dim")
    sd, vd = c.t.dim, c.v.dim
    return CrossedExtension(c, t, _sparse(p["i"], (vd, m), path + ".i"),
                            _sparse(p["pi"], (t.dim, sd), path + ".pi"),
                            _sparse(p["s"], (sd, t.dim), path + ".s"),
                            _sparse(p["q"], (vd, sd), path + ".q"))


def _write_extension(e):
    return {"crossed": _write_crossed(e.crossed), "t": _write_lya(e.t), "m_dim": e.m_dim,
            "i": _render_sparse(e.i), "pi": _render_sparse(e.pi), "s": _render_sparse(e.s),
            "q": _render_sparse(e.q)}


class Sections:
    """Alternative sections s: T -> S and q: S -> V for an extension."""

    def __init__(self, s, q):
        self.s, self.q = T.frozen(T.as_array(s)), T.frozen(T.as_array(q))

    def __eq__(self, other):
        return (isinstance(other, Sections) and T.equal(self.s, other.s)
                and T.equal(self.q, other.q))


def _read_sections(p, path):
    _fields(p, path, ("t_dim", "s_dim", "v_dim", "s", "q"))
    td = _int(p["t_dim"], path + ".t_dim")
    sd = _int(p["s_dim"], path + ".s_dim")
    vd = _int(p["v_dim"], path + ".v_dim")
    return Sections(_sparse(p["s"], (sd, td), path + ".s"), _sparse(p["q"], (vd, sd), path + ".q"))


def _write_sections(x):
    sd, td = x.s.shape
    return {"t_dim": td, "s_dim": sd, "v_dim": x.q.shape[0], "s": _render_sparse(x.s),
            "q": _render_sparse(x.q)}


_SCHEMAS = {
    "lya": (_read_lya, _write_lya, LYAlgebra),
    "lie": (_read_lie, _write_lie, LieAlgebra),
    "leibniz": (_read_leibniz, _write_leibniz, LeibnizAlgebra),
    "rep": (_read_rep, _write_rep, Representation),
    "action": (_read_action, _write_action, LYAction),
    "cochain": (_read_cochain, _write_cochain, Cochain),
    "quadruple": (_read_quadruple, _write_parts, CochainQuadruple),
    "twoterm": (_read_twoterm, _write_twoterm, TwoTermAlgebra),
    "homomorphism": (_read_homomorphism, _write_homomorphism, HomomorphismDocument),
    "crossed": (_read_crossed, _write_crossed, CrossedModuleLYA),
    "leibniz-crossed": (_read_leibniz_crossed, _write_leibniz_crossed, LeibnizCrossedModule),
    "reductive": (_read_reductive, _write_reductive, ReductiveDecomposition),
    "reductive-crossed": (_read_reductive_crossed, _write_reductive_crossed,
                          ReductiveCrossedModule),
    "extension": (_read_extension, _write_extension, CrossedExtension),
    "sections": (_read_sections, _write_sections, Sections),
}


def kind_of(obj):
    for kind, (_, _, cls) in _SCHEMAS.items():
        if type(obj) is cls:
            return kind
    if isinstance(obj, CochainPair):
        raise TypeError("cochain pairs have no document kind")
    raise TypeError("no document kind for %r" % (obj,))


def to_document(obj, kind=None):
    kind = kind or kind_of(obj)
    return {"kind": kind, "version": VERSION, "payload": _SCHEMAS[kind][1](obj)}


def from_document(doc, expect=None):
    """Parse a document dict; expect restricts the kind."""
    _fields(doc, "$", ("kind", "version", "payload"))
    kind = doc["kind"]
    if kind not in _SCHEMAS:
        raise SchemaError("$.kind", "unknown kind %r" % (kind,))
    if doc["version"] != VERSION:
        raise SchemaError("$.version", "unsupported version %r" % (doc["version"],))
    if expect is not None and kind not in (expect if isinstance(expect, tuple) else (expect,)):
        raise SchemaError("$.kind", "expected %s, got %r" % (expect, kind))
    return _SCHEMAS[kind][0](doc["payload"], "$.payload")


def render(obj, kind=None):
    """Canonical JSON text: sorted keys, entries in lexicographic index order."""
    return dumps(to_document(obj, kind))


def dumps(data):
    return json.dumps(data, sort_keys=True, indent=1) + "\n"


def parse(text, expect=None):
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise SchemaError("$", "not valid JSON (%s)" % exc)
    return from_document(data, expect)


def load(path, expect=None):
    with open(path, encoding="utf-8") as f:
        text = f.read()
    return parse(text, expect)


def save(obj, path, kind=None):
    with open(path, "w", encoding="utf-8") as f:
        f.write(render(obj, kind))
