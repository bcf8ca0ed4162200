"""Line-oriented input files: field, params, relations, groups, extensions,
maps.

A file declares exactly one field; every later object shares it.  Names
live in one namespace ("Ga" is reserved for the affine line).  Statements:

    field p=3 e=1 gen=a depth=0
    params d,e
    relation pivot=d : 1*d^(p^2) + 2*d^(p^0) + a*e^(p^1)
    group Wa vars=X,Y pivot=X : 1*X^(p^0) + 1*X^(p^1) + a*Y^(p^1)
    extension Ua center=Wa base=Va : h1 = <poly> ; h2 = <poly>
    map phi from=Va to=U : X -> <p-poly> ; Y -> <p-poly>

`#` starts a comment; blank lines are ignored.  Extension cocycles are
polynomials in the base group's variables and their primed copies.
"""

import re

from .field import Field, FieldSpec
from .groups import AffineLine, CocycleExtension, HypersurfaceGroup
from .homs import PPolyMap
from .params import ParamRing
from .parser import ParseError, parse_poly, parse_ppoly


class Session:
    def __init__(self):
        self.field = None
        self.param_names = ()
        self.param_relations = []   # (ppoly over param space, pivot index)
        self._ring = None
        self.groups = {}
        self.extensions = {}
        self.maps = {}
        self._names = set()

    @property
    def ring(self):
        if self._ring is None and self.param_names:
            self._ring = ParamRing(self.field, self.param_names, self.param_relations)
        return self._ring

    def group_or_line(self, name):
        if name == "Ga":
            return AffineLine()
        if name in self.groups:
            return self.groups[name]
        raise ParseError(f"unknown group {name!r}")

    def _claim(self, name):
        if name == "Ga" or name in self._names:
            raise ParseError(f"name {name!r} already in use")
        self._names.add(name)


_KV_RE = re.compile(r"([A-Za-z_][A-Za-z0-9_]*)=(\S+)")


def _kvs(text):
    return dict(_KV_RE.findall(text))


def parse_session(text):
    s = Session()
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        try:
            _statement(s, line)
        except ParseError as exc:
            raise ParseError(f"line {lineno}: {exc}") from None
    if s.field is None:
        raise ParseError("no field statement")
    return s


def _require_field(s):
    if s.field is None:
        raise ParseError("field must be declared first")


def _statement(s, line):
    head, _, tail = line.partition(":")
    head = head.strip()
    tail = tail.strip()
    kind = head.split(None, 1)[0]
    if kind == "field":
        if s.field is not None:
            raise ParseError("duplicate field statement")
        kv = _kvs(head)
        try:
            spec = FieldSpec(int(kv.get("p", "0")), int(kv.get("e", "1")),
                             kv.get("gen", "a"), int(kv.get("depth", "0")))
        except ValueError as exc:
            raise ParseError(str(exc)) from None
        s.field = Field(spec)
    elif kind == "params":
        _require_field(s)
        names = head.split(None, 1)[1].replace(" ", "")
        s.param_names = tuple(n for n in names.split(",") if n)
        for n in s.param_names:
            s._claim(n)
        s._ring = None
    elif kind == "relation":
        _require_field(s)
        kv = _kvs(head)
        if "pivot" not in kv:
            raise ParseError("relation needs pivot=<param>")
        if kv["pivot"] not in s.param_names:
            raise ParseError(f"pivot {kv['pivot']!r} is not a declared parameter")
        fp = parse_ppoly(tail, s.field, s.param_names)
        s.param_relations.append((fp, s.param_names.index(kv["pivot"])))
        s._ring = None
        s.ring  # compile now: validates the pivot
    elif kind == "group":
        _require_field(s)
        parts = head.split()
        name = parts[1]
        kv = _kvs(head)
        vars_ = tuple(kv["vars"].split(","))
        pivot = kv["pivot"]
        if pivot not in vars_:
            raise ParseError(f"pivot {pivot!r} not among vars")
        f = parse_ppoly(tail, s.field, vars_)
        s._claim(name)
        try:
            s.groups[name] = HypersurfaceGroup(name, vars_, f, vars_.index(pivot))
        except ValueError as exc:
            raise ParseError(str(exc)) from None
    elif kind == "extension":
        _require_field(s)
        parts = head.split()
        name = parts[1]
        kv = _kvs(head)
        center = s.group_or_line(kv["center"])
        base = s.group_or_line(kv["base"])
        comps = {}
        for piece in tail.split(";"):
            lhs, _, rhs = piece.partition("=")
            comps[lhs.strip()] = rhs.strip()
        hvars = base.vars + tuple(v + "'" for v in base.vars)
        h = []
        for i in range(center.nvars):
            key = f"h{i + 1}"
            if key not in comps:
                raise ParseError(f"extension is missing component {key}")
            h.append(parse_poly(comps[key], s.field, hvars))
        s._claim(name)
        try:
            s.extensions[name] = CocycleExtension(name, center, base, tuple(h))
        except ValueError as exc:
            raise ParseError(str(exc)) from None
    elif kind == "map":
        _require_field(s)
        parts = head.split()
        name = parts[1]
        kv = _kvs(head)
        src = s.group_or_line(kv["from"])
        tgt = s.group_or_line(kv["to"])
        dom = s.ring if s.param_names else s.field
        coords = {}
        for piece in tail.split(";"):
            lhs, _, rhs = piece.partition("->")
            coords[lhs.strip()] = parse_ppoly(rhs.strip(), dom, src.vars)
        names = tgt.vars if not isinstance(tgt, AffineLine) else ("T",)
        try:
            ordered = tuple(coords[v] for v in names)
        except KeyError as exc:
            raise ParseError(f"map is missing coordinate {exc.args[0]!r}") from None
        s._claim(name)
        try:
            s.maps[name] = PPolyMap(name, src, tgt, ordered,
                                    s.ring if s.param_names else None)
        except ValueError as exc:
            raise ParseError(str(exc)) from None
    else:
        raise ParseError(f"unknown statement {kind!r}")


def render_group(g):
    from .parser import render_ppoly
    vars_ = ",".join(g.vars)
    return (f"group {g.name} vars={vars_} pivot={g.vars[g.pivot]} : "
            f"{render_ppoly(g.f, g.vars)}")


def render_map(m):
    from .parser import render_ppoly
    tgt_vars = m.target.vars if not isinstance(m.target, AffineLine) else ("T",)
    body = " ; ".join(f"{v} -> {render_ppoly(c, m.source.vars)}"
                      for v, c in zip(tgt_vars, m.coords))
    return f"map {m.name} from={m.source.name} to={m.target.name} : {body}"


def render_extension(e):
    from .parser import render_poly
    hvars = e.base.vars + tuple(v + "'" for v in e.base.vars)
    body = " ; ".join(f"h{i + 1} = {render_poly(c, hvars)}" for i, c in enumerate(e.h))
    return (f"extension {e.name} center={e.center.name} base={e.base.name} : {body}")
