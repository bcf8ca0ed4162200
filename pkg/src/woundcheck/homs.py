"""Homomorphisms between hypersurface groups.

Every coordinate of a map is a p-polynomial in the source variables, so
additivity is automatic; being a homomorphism is exactly the landing
condition F_target(map) = 0 modulo the source relation and any parameter
relations.  Canonical forms reduce each coordinate below the source pivot
bound, which by the division lemma's uniqueness makes two maps equal as
morphisms iff their canonical forms coincide.

Constraint derivation builds the generic map with one fresh symbol per
allowed (coordinate, variable, exponent) slot, composes, reduces, and
collects one vanishing condition per surviving coefficient.  The bounded
solver enumerates assignments of a finite coefficient domain with simple
unit-linear propagation; it is an exhaustive enumeration of the assignment
space and returns every satisfying map in canonical form.
"""

import itertools
from dataclasses import dataclass

from .groups import is_line, shift_vars
from .params import ParamRing, flatten_ppoly
from .polyring import Poly, RelationSet
from .ppoly import PPoly, reduce_mod, to_relation


class EnumerationBudgetError(RuntimeError):
    pass


@dataclass(frozen=True)
class PPolyMap:
    name: str
    source: object            # HypersurfaceGroup or AffineLine
    target: object            # HypersurfaceGroup or AffineLine
    coords: tuple             # one PPoly in the source variables per target coordinate
    params: ParamRing = None

    def __post_init__(self):
        want = 1 if is_line(self.target) else self.target.nvars
        if len(self.coords) != want:
            raise ValueError("coordinate count does not match the target")
        for c in self.coords:
            if c.nvars != self.source.nvars:
                raise ValueError("coordinate over the wrong source variables")

    def __repr__(self):
        return f"<map {self.name}: {self.source.name} -> {self.target.name}>"


def canonical_form(m):
    """Reduce every coordinate below the source pivot bound; idempotent, and
    maps equal as morphisms canonicalize identically."""
    if is_line(m.source):
        return m
    coords = tuple(reduce_mod(c, m.source.f, m.source.pivot).remainder for c in m.coords)
    return PPolyMap(m.name, m.source, m.target, coords, m.params)


def relative_frobenius(g, n):
    """The coordinatewise p^n power map from g onto its Frobenius twist."""
    from .groups import twist_group

    tw = twist_group(g, n)
    coords = tuple(PPoly.variable(g.field, g.nvars, i, n) for i in range(g.nvars))
    return PPolyMap(f"frobenius^{n}", g, tw, coords)


def identity_map(g, field=None):
    if is_line(g):
        if field is None:
            raise ValueError("the line needs an explicit coefficient field")
        coords = (PPoly.variable(field, 1, 0),)
    else:
        coords = tuple(PPoly.variable(g.field, g.nvars, i) for i in range(g.nvars))
    return PPolyMap("id", g, g, coords)


def compose_maps(g, f):
    """g o f (apply f first)."""
    if not (f.target is g.source or f.target == g.source):
        raise ValueError("maps are not composable")
    coords = tuple(c.compose(f.coords) for c in g.coords)
    params = f.params or g.params
    return PPolyMap(f"{g.name}.{f.name}", f.source, g.target, coords, params)


def verify_hom(m):
    """The landing condition: F_target(coords) reduces to zero modulo the
    source relation and the parameter relations (carried inside the map's
    coefficient ring).  Additivity is automatic for p-polynomial coords."""
    if is_line(m.target):
        return True
    composed = m.target.f.compose(m.coords)
    if not is_line(m.source):
        composed = reduce_mod(composed, m.source.f, m.source.pivot).remainder
    return all(c.is_zero() for c in composed.terms.values())


def landing_identity(m):
    """(poly, relations) over source variables + parameter symbols whose
    normal form vanishing is exactly verify_hom; used by the oracle."""
    if is_line(m.target):
        return None
    ring = m.params
    npar = len(ring.names) if ring is not None else 0
    nsrc = m.source.nvars
    amb = nsrc + npar
    if ring is not None:
        fld = ring.base
    elif not is_line(m.source):
        fld = m.source.field
    else:
        fld = m.coords[0].dom
    composed = m.target.f.compose(m.coords)
    poly = flatten_ppoly(composed, list(range(nsrc)), list(range(nsrc, amb)), fld, amb)
    rels = []
    if not is_line(m.source):
        rels.append(to_relation(shift_vars(m.source.f, 0, amb), m.source.pivot))
    if ring is not None:
        for fp, pivot in ring.ppoly_relations:
            rels.append(to_relation(shift_vars(fp, nsrc, amb), pivot + nsrc))
    return poly, RelationSet(amb, rels)


def verify_mutual_inverse(f, g):
    """f and g are homomorphisms composing to the identity both ways."""
    if not (verify_hom(f) and verify_hom(g)):
        return False
    return (_is_identity(compose_maps(g, f), f.source)
            and _is_identity(compose_maps(f, g), g.source))


def _is_identity(m, g):
    m = canonical_form(m)
    nv = 1 if is_line(g) else g.nvars
    dom = m.coords[0].dom
    want = tuple(PPoly.variable(dom, nv, i) for i in range(nv))
    return m.coords == want


# ---------------------------------------------------------------------------
# constraint derivation


@dataclass(frozen=True)
class ConstraintSystem:
    source: object
    target: object
    ring: ParamRing                  # the fresh unknown symbols, no relations
    slots: tuple                     # (name, coordinate, variable, exponent)
    ansatz: tuple                    # generic map coordinates (PPoly over ring)
    constraints: tuple               # ((variable, exponent), Poly over unknowns)

    def polys(self):
        return tuple(p for _, p in self.constraints)

    def normalized(self):
        """Monic-normalized constraint polynomials (canonical comparison form)."""
        return tuple(p.monic() for _, p in self.constraints)


def default_exponent_caps(source, target):
    """Pivot capped by the canonical bound; elsewhere the target's maximal
    exponent plus the source's."""
    src_max = max(e for _, e in source.f.terms)
    tgt_max = 0 if is_line(target) else max(e for _, e in target.f.terms)
    caps = {}
    for i in range(source.nvars):
        if i == source.pivot:
            caps[i] = source.f.max_exp(source.pivot) - 1
        else:
            caps[i] = tgt_max + src_max
    return caps


def derive_hom_constraints(source, target, caps=None, names=None):
    """Build the generic-map constraint system characterizing Hom within the
    ansatz bounds.

    names, when given, maps (coordinate, variable, exponent) to the symbol
    to use; defaults to c<coordinate>_<varname>_<exponent>.
    """
    if is_line(source):
        raise ValueError("use a split presentation (e.g. {Y = 0}) for a line source")
    defaults = default_exponent_caps(source, target)
    if caps:
        for i, cap in caps.items():
            if i == source.pivot and cap > defaults[source.pivot]:
                raise ValueError("pivot cap exceeds the canonical-form bound")
            defaults[i] = cap
    ncoords = 1 if is_line(target) else target.nvars
    slots = []
    for j in range(ncoords):
        for i in range(source.nvars):
            for e in range(defaults[i] + 1):
                if names is not None:
                    nm = names[(j, i, e)]
                else:
                    nm = f"c{j}_{source.vars[i]}_{e}"
                slots.append((nm, j, i, e))
    ring = ParamRing(source.field, tuple(s[0] for s in slots))
    ansatz = []
    for j in range(ncoords):
        terms = {}
        for nm, jj, i, e in slots:
            if jj == j:
                terms[(i, e)] = ring.param(nm)
        ansatz.append(PPoly(ring, source.nvars, terms))
    ansatz = tuple(ansatz)
    if is_line(target):
        constraints = ()
    else:
        composed = target.f.compose(ansatz)
        reduced = reduce_mod(composed, source.f, source.pivot).remainder
        constraints = tuple(((i, e), reduced.terms[(i, e)].poly)
                            for (i, e) in sorted(reduced.terms))
    return ConstraintSystem(source, target, ring, tuple(slots), ansatz, constraints)


# ---------------------------------------------------------------------------
# bounded enumeration


def _eval_partial(poly, assignment):
    """Substitute the assigned unknowns; returns a Poly over the same space."""
    out = {}
    for m, c in poly.terms.items():
        coef = c
        rest = list(m)
        for i, e in enumerate(m):
            if e and assignment[i] is not None:
                coef = coef * assignment[i] ** e
                rest[i] = 0
        if coef.is_zero():
            continue
        key = tuple(rest)
        s = out.get(key)
        s = coef if s is None else s + coef
        if s.is_zero():
            out.pop(key, None)
        else:
            out[key] = s
    return Poly(poly.field, poly.nvars, out)


def _linear_solve(poly, var):
    """If poly = c1 * x_var + c0 (exponent exactly 1), return the root."""
    c1 = c0 = None
    for m, c in poly.terms.items():
        if m[var] == 0:
            if any(m):
                return None
            c0 = c
        elif m[var] == 1 and sum(m) == 1:
            c1 = c
        else:
            return None
    if c1 is None:
        return None
    if c0 is None:
        return poly.field.zero()
    return -(c0 / c1)


def solve_homs_bounded(cs, domain, max_nodes=10_000_000):
    """Enumerate all assignments of the unknowns from the finite domain that
    satisfy every constraint; deterministic order, each returned map in
    canonical form and guaranteed to verify."""
    domain = list(domain)
    domain_set = set(domain)
    nunk = len(cs.ring.names)
    polys = [p for _, p in cs.constraints]
    nodes = 0
    solutions = []

    def fail_budget():
        raise EnumerationBudgetError(f"enumeration exceeded {max_nodes} assignments")

    def recurse(assignment, remaining):
        nonlocal nodes
        # simplify to the still-relevant constraints
        live = []
        for p in remaining:
            q = _eval_partial(p, assignment)
            if q.is_zero():
                continue
            unassigned = {i for m in q.terms for i, e in enumerate(m) if e}
            if not unassigned:
                return  # nonzero constant: contradiction
            live.append((q, unassigned))
        if not live:
            free = [i for i in range(nunk) if assignment[i] is None]
            for combo in itertools.product(domain, repeat=len(free)):
                nodes += len(free)
                if nodes > max_nodes:
                    fail_budget()
                full = list(assignment)
                for i, v in zip(free, combo):
                    full[i] = v
                solutions.append(tuple(full))
            return
        q, unassigned = min(live, key=lambda t: (len(t[1]), min(t[1])))
        var = min(unassigned)
        if len(unassigned) == 1:
            forced = _linear_solve(q, var)
            if forced is not None:
                nodes += 1
                if nodes > max_nodes:
                    fail_budget()
                if forced in domain_set:
                    assignment[var] = forced
                    recurse(assignment, [p for p, _ in live])
                    assignment[var] = None
                return
        for v in domain:
            nodes += 1
            if nodes > max_nodes:
                fail_budget()
            assignment[var] = v
            q2 = _eval_partial(q, assignment)
            if len(unassigned) > 1 or q2.is_zero():
                recurse(assignment, [p for p, _ in live])
        assignment[var] = None

    recurse([None] * nunk, polys)
    solutions.sort(key=lambda sol: [_domain_key(v) for v in sol])
    out = []
    for sol in solutions:
        coords = []
        for ans in cs.ansatz:
            terms = {}
            for (i, e), c in ans.terms.items():
                val = c.poly.evaluate(sol)
                if not val.is_zero():
                    terms[(i, e)] = val
            coords.append(PPoly(cs.source.field, cs.source.nvars, terms))
        m = PPolyMap(f"sol{len(out)}", cs.source, cs.target, tuple(coords))
        out.append(HomSolution(dict(zip(cs.ring.names, sol)), canonical_form(m)))
    return out


@dataclass(frozen=True)
class HomSolution:
    values: dict
    map: PPolyMap


def _domain_key(x):
    return (x.den, x.num)
