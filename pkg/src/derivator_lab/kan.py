"""Represented derivators over a computation target: restriction, pointwise
Kan extensions with universal data, Beck-Chevalley mates, the axiom checker,
and the coend/end calculus over twisted arrow categories.

Every Kan extension returns chosen values plus the presentations that
computed them, so canonical comparison maps can be constructed by factoring
cocones/cones instead of asserting object equality.
"""

from __future__ import annotations

import functools
import itertools
from dataclasses import dataclass, field
from typing import Any, Callable

from .diagrams import Diagram, DiagramMap, compose_maps, identity_map, invert_map, is_iso_map
from .fincat import (FinCategory, Functor, NatTrans, _twisted_arrow_data, builtin,
                     collapse_functor, comma, compose_functors, coproduct,
                     default_shape_family, enumerate_functors, identity_functor, opposite,
                     opposite_functor, pair_functor, pair_id, point_functor, product,
                     product_functor, terminal_category, twisted_arrow, twisted_cotensor)
from .instances import ColimitPresentation, InstanceCategory, LimitPresentation


# ---------------------------------------------------------------------------
# restriction


def restrict(u: Functor, x: Diagram) -> Diagram:
    """Precomposition x∘u; strictly functorial in u."""
    if x.shape != u.target:
        raise ValueError("shape of the diagram does not match the target of the functor")
    return Diagram(u.source, x.base,
                   {j: x.ob[u.ob[j]] for j in u.source.objects},
                   {m: x.mor[u.mor[m]] for m in u.source.morphism_ids()})


def restrict_map(u: Functor, f: DiagramMap) -> DiagramMap:
    return DiagramMap(restrict(u, f.source), restrict(u, f.target),
                      {j: f.components[u.ob[j]] for j in u.source.objects})


def transformation_map(alpha: NatTrans, x: Diagram) -> DiagramMap:
    """α: u -> v induces the map u*x -> v*x with components x(α_j)."""
    u, v = alpha.source, alpha.target
    return DiagramMap(restrict(u, x), restrict(v, x),
                      {j: x.mor[alpha.components[j]] for j in u.source.objects})


# ---------------------------------------------------------------------------
# comma data shared by the Kan extension formulas


@dataclass(frozen=True)
class CommaData:
    cat: FinCategory
    proj: Functor
    pairs: tuple[tuple[str, str], ...]  # aligned with cat.objects

    def oid(self, j: str, f: str) -> str:
        return f"({j}|{f})"


def comma_data(u: Functor, k: str) -> CommaData:
    cat, proj = comma(u, k)
    pairs = []
    jcat, kcat = u.source, u.target
    for j in jcat.objects:
        for f in kcat.hom(u.ob[j], k):
            pairs.append((j, f))
    return CommaData(cat, proj, tuple(pairs))


def slice_data(u: Functor, k: str) -> CommaData:
    """(k/u) as the opposite of a comma category of u^op; pairs are (j, f: k -> u(j))."""
    cat, proj = comma(opposite_functor(u), k)
    cat_op = opposite(cat)
    proj2 = Functor(cat_op, u.source, dict(proj.ob), dict(proj.mor), name="proj")
    pairs = []
    jcat, kcat = u.source, u.target
    for j in jcat.objects:
        for f in kcat.hom(k, u.ob[j]):
            pairs.append((j, f))
    return CommaData(cat_op, proj2, tuple(pairs))


# ---------------------------------------------------------------------------
# Kan extensions


@dataclass(frozen=True)
class LanResult:
    functor: Functor
    source: Diagram
    diagram: Diagram
    unit: DiagramMap
    pointwise: dict[str, ColimitPresentation]
    commas: dict[str, CommaData]


@dataclass(frozen=True)
class RanResult:
    functor: Functor
    source: Diagram
    diagram: Diagram
    counit: DiagramMap
    pointwise: dict[str, LimitPresentation]
    slices: dict[str, CommaData]


def lan(u: Functor, x: Diagram) -> LanResult:
    """Left Kan extension, value at k the colimit over the comma category (u/k)."""
    if x.shape != u.source:
        raise ValueError("diagram shape does not match the source of the functor")
    base = x.base
    kcat = u.target
    commas = {k: comma_data(u, k) for k in kcat.objects}
    pointwise = {k: base.colimit(restrict(commas[k].proj, x)) for k in kcat.objects}
    ob = {k: pointwise[k].obj for k in kcat.objects}
    mor = {}
    for g, s, t in kcat.morphisms:
        legs = {}
        for j, f in commas[s].pairs:
            legs[commas[s].oid(j, f)] = pointwise[t].legs[commas[t].oid(j, kcat.compose(g, f))]
        mor[g] = base.factor_cocone(pointwise[s], ob[t], legs)
    diagram = Diagram(kcat, base, ob, mor)
    unit = DiagramMap(x, restrict(u, diagram), {
        j: pointwise[u.ob[j]].legs[commas[u.ob[j]].oid(j, kcat.identity(u.ob[j]))]
        for j in u.source.objects
    })
    return LanResult(u, x, diagram, unit, pointwise, commas)


def lan_map(res_x: LanResult, res_y: LanResult, f: DiagramMap) -> DiagramMap:
    """Functorial action lan_u(f) from the presentations of lan_u X and lan_u Y."""
    base = f.base
    comps = {}
    for k in res_x.functor.target.objects:
        legs = {}
        for j, g in res_x.commas[k].pairs:
            oid = res_x.commas[k].oid(j, g)
            legs[oid] = base.compose(res_y.pointwise[k].legs[oid], f.components[j])
        comps[k] = base.factor_cocone(res_x.pointwise[k], res_y.diagram.ob[k], legs)
    return DiagramMap(res_x.diagram, res_y.diagram, comps)


def lan_counit(res: LanResult, y: Diagram) -> DiagramMap:
    """ε: lan_u(u* y) -> y; res must be lan(u, restrict(u, y))."""
    base = y.base
    kcat = res.functor.target
    comps = {}
    for k in kcat.objects:
        legs = {}
        for j, g in res.commas[k].pairs:
            legs[res.commas[k].oid(j, g)] = y.mor[g]
        comps[k] = base.factor_cocone(res.pointwise[k], y.ob[k], legs)
    return DiagramMap(res.diagram, y, comps)


def ran(u: Functor, x: Diagram) -> RanResult:
    """Right Kan extension, value at k the limit over the slice (k/u)."""
    if x.shape != u.source:
        raise ValueError("diagram shape does not match the source of the functor")
    base = x.base
    kcat = u.target
    slices = {k: slice_data(u, k) for k in kcat.objects}
    pointwise = {k: base.limit(restrict(slices[k].proj, x)) for k in kcat.objects}
    ob = {k: pointwise[k].obj for k in kcat.objects}
    mor = {}
    for g, s, t in kcat.morphisms:
        legs = {}
        for j, f in slices[t].pairs:
            legs[slices[t].oid(j, f)] = pointwise[s].legs[slices[s].oid(j, kcat.compose(f, g))]
        mor[g] = base.factor_cone(pointwise[t], ob[s], legs)
    diagram = Diagram(kcat, base, ob, mor)
    counit = DiagramMap(restrict(u, diagram), x, {
        j: pointwise[u.ob[j]].legs[slices[u.ob[j]].oid(j, kcat.identity(u.ob[j]))]
        for j in u.source.objects
    })
    return RanResult(u, x, diagram, counit, pointwise, slices)


def ran_map(res_x: RanResult, res_y: RanResult, f: DiagramMap) -> DiagramMap:
    base = f.base
    comps = {}
    for k in res_x.functor.target.objects:
        legs = {}
        for j, g in res_y.slices[k].pairs:
            oid = res_y.slices[k].oid(j, g)
            legs[oid] = base.compose(f.components[j], res_x.pointwise[k].legs[oid])
        comps[k] = base.factor_cone(res_y.pointwise[k], res_x.diagram.ob[k], legs)
    return DiagramMap(res_x.diagram, res_y.diagram, comps)


def ran_unit(res: RanResult, y: Diagram) -> DiagramMap:
    """η: y -> ran_u(u* y); res must be ran(u, restrict(u, y))."""
    base = y.base
    kcat = res.functor.target
    comps = {}
    for k in kcat.objects:
        legs = {}
        for j, g in res.slices[k].pairs:
            legs[res.slices[k].oid(j, g)] = y.mor[g]
        comps[k] = base.factor_cone(res.pointwise[k], y.ob[k], legs)
    return DiagramMap(y, res.diagram, comps)


# ---------------------------------------------------------------------------
# Beck-Chevalley


@dataclass(frozen=True)
class BCSquare:
    """A square of shape functors with a filler 2-cell.

        A --top--> B
        |left      |right        filler: right∘top -> bottom∘left
        v          v
        C -bottom-> D

    The mate runs left_! ∘ top* -> bottom* ∘ right_! on diagrams over B.
    """
    top: Functor
    left: Functor
    right: Functor
    bottom: Functor
    filler: NatTrans

    def __post_init__(self):
        if (self.top.source != self.left.source or self.top.target != self.right.source
                or self.left.target != self.bottom.source
                or self.right.target != self.bottom.target):
            raise ValueError("square boundary does not compose")
        if (self.filler.source != compose_functors(self.right, self.top)
                or self.filler.target != compose_functors(self.bottom, self.left)):
            raise ValueError("filler does not match the square boundary")


def beck_chevalley(square: BCSquare, x: Diagram) -> DiagramMap:
    """The mate left_!(top* x) -> bottom*(right_! x), pasted from adjunction data."""
    lan_right = lan(square.right, x)
    q_diag = lan_right.diagram
    # top*(η): top* x -> (right∘top)* q
    m1 = restrict_map(square.top, lan_right.unit)
    # filler*: (right∘top)* q -> (bottom∘left)* q
    m2 = transformation_map(square.filler, q_diag)
    m12 = compose_maps(m2, m1)
    w = restrict(square.bottom, q_diag)
    lan_p_source = lan(square.left, m12.source)
    lan_p_target = lan(square.left, m12.target)
    step = lan_map(lan_p_source, lan_p_target, m12)
    eps = lan_counit(lan_p_target, w)
    return compose_maps(eps, step)


def comma_square(u: Functor, k: str) -> BCSquare:
    """The canonical square over the comma category (u/k) whose mate states
    that left Kan extensions are computed pointwise."""
    cd = comma_data(u, k)
    e = terminal_category()
    left = collapse_functor(cd.cat)
    bottom = point_functor(u.target, k)
    filler = NatTrans(compose_functors(u, cd.proj), compose_functors(bottom, left),
                      {cd.oid(j, f): f for j, f in cd.pairs})
    return BCSquare(cd.proj, left, u, bottom, filler)


# ---------------------------------------------------------------------------
# represented derivators and random sampling


@dataclass(frozen=True)
class RepresentedDerivator:
    """The derivator J -> (diagrams J -> base), with pointwise Kan extensions."""
    base: InstanceCategory

    @property
    def name(self) -> str:
        return f"y({self.base.name})"

    def restrict(self, u: Functor, x: Diagram) -> Diagram:
        return restrict(u, x)

    def lan(self, u: Functor, x: Diagram) -> LanResult:
        return lan(u, x)

    def ran(self, u: Functor, x: Diagram) -> RanResult:
        return ran(u, x)


def discrete_probe(base: InstanceCategory, shape: FinCategory, rng,
                   avoid_empty_over: Diagram | None = None,
                   cap: int = 3, max_probes: int = 4):
    """A random diagram presented as lan along a map from a discrete shape.

    Diagrams built this way are automatically lawful, and maps out of them
    are freely determined by components on the probe points.  When
    avoid_empty_over is given, probe values keep hom sets into it nonempty.
    """
    from .fincat import discrete_category
    if not shape.objects:
        x = Diagram(shape, base, {}, {})
        return x, None, None
    n = rng.randint(1, min(max_probes, max(1, len(shape.objects))))
    disc = discrete_category(n)
    ob_map = {str(i): shape.objects[rng.randrange(len(shape.objects))] for i in range(n)}
    u = Functor(disc, shape, ob_map,
                {f"id_{i}": shape.identity(ob_map[str(i)]) for i in range(n)})
    values = {}
    for i in range(n):
        v = base.random_object(rng, cap)
        if avoid_empty_over is not None:
            target = avoid_empty_over.ob[ob_map[str(i)]]
            while getattr(v, "size", 0) > 0 and getattr(target, "size", 1) == 0:
                v = base.random_object(rng, cap)
        values[str(i)] = v
    y = Diagram(disc, base, values, {f"id_{i}": base.identity(values[str(i)]) for i in range(n)})
    res = lan(u, y)
    return res.diagram, res, y


def random_diagram(base: InstanceCategory, shape: FinCategory, rng,
                   cap: int = 3, max_probes: int = 4) -> Diagram:
    return discrete_probe(base, shape, rng, cap=cap, max_probes=max_probes)[0]


def random_diagram_map(base: InstanceCategory, target: Diagram, rng) -> DiagramMap:
    """A random map into target, adjunct to free choices on a discrete probe."""
    shape = target.shape
    x, res, y = discrete_probe(base, shape, rng, avoid_empty_over=target)
    if res is None:
        return identity_map(target)
    comps = {}
    chosen = {i: base.random_mor(rng, y.ob[i], target.ob[res.functor.ob[i]])
              for i in y.shape.objects}
    for k in shape.objects:
        legs = {}
        for i, g in res.commas[k].pairs:
            legs[res.commas[k].oid(i, g)] = base.compose(target.mor[g], chosen[i])
        comps[k] = base.factor_cocone(res.pointwise[k], target.ob[k], legs)
    return DiagramMap(x, target, comps)


def random_iso_map(base: InstanceCategory, x: Diagram, rng) -> DiagramMap:
    """x conjugated by random pointwise isomorphisms; always invertible."""
    sigmas = {j: base.random_iso(rng, x.ob[j]) for j in x.shape.objects}
    ob = dict(x.ob)
    mor = {}
    for m, s, t in x.shape.morphisms:
        mor[m] = base.compose(sigmas[t], base.compose(x.mor[m], base.invert(sigmas[s])))
    y = Diagram(x.shape, base, ob, mor)
    return DiagramMap(x, y, sigmas)

# ---------------------------------------------------------------------------
# coend / end calculus


def nest_obj(ids) -> str:
    return functools.reduce(pair_id, ids)


def nested_product(cats: list[FinCategory]) -> FinCategory:
    out = cats[0]
    for c in cats[1:]:
        out = product(out, c)[0]
    return out


def reindex_functor(dom_factors: list[FinCategory], cod_factors: list[FinCategory],
                    ob_map: Callable, mor_map: Callable,
                    dom: FinCategory | None = None, cod: FinCategory | None = None) -> Functor:
    """Functor between left-nested products given componentwise index maps.

    ob_map/mor_map take a tuple of factor ids and return a tuple of codomain
    factor ids; identifiers are rebuilt by nesting, never parsed.
    """
    dom = dom if dom is not None else nested_product(dom_factors)
    cod = cod if cod is not None else nested_product(cod_factors)
    ob = {}
    for t in itertools.product(*[c.objects for c in dom_factors]):
        ob[nest_obj(t)] = nest_obj(ob_map(t))
    mor = {}
    for t in itertools.product(*[c.morphism_ids() for c in dom_factors]):
        mor[nest_obj(t)] = nest_obj(mor_map(t))
    return Functor(dom, cod, ob, mor)


def coend_shape(j: FinCategory, k: FinCategory, l: FinCategory) -> FinCategory:
    return nested_product([j, opposite(k), k, l])


@dataclass(frozen=True)
class CoendResult:
    """∫^K of a diagram over J × K^op × K × L, with its colimit presentations.

    generator_leg(j, f, l) is the canonical map X(j, t(f), s(f), l) -> value(j, l)
    for a twisted arrow f; together these generate every value.
    """
    j: FinCategory
    k: FinCategory
    l: FinCategory
    source: Diagram
    diagram: Diagram
    lan_result: LanResult
    tw: FinCategory

    def value(self, j: str, l: str):
        return self.diagram.ob[pair_id(j, l)]

    def generator_leg(self, j: str, f: str, l: str):
        return self.lan_result.unit.components[nest_obj((j, f, l))]


def coend(j: FinCategory, k: FinCategory, l: FinCategory, x: Diagram) -> CoendResult:
    """Restrict along the twisted arrow projection, then extend along J×tw×L -> J×L."""
    shape = coend_shape(j, k, l)
    if x.shape != shape:
        raise ValueError("diagram shape does not factor as J x K^op x K x L")
    tw, _ = twisted_arrow(k)
    # twisted-arrow morphism id -> its (a, b) legs, projected to (b, a) in k^op × k
    _, records = _twisted_arrow_data(k)
    proj_mor = {mid: (b, a) for mid, a, b, _, _ in records}
    dom_factors = [j, tw, l]
    phi = reindex_functor(
        dom_factors, [j, opposite(k), k, l],
        lambda t: (t[0], k.dst(t[1]), k.src(t[1]), t[2]),
        lambda t: (t[0],) + proj_mor[t[1]] + (t[2],),
        cod=shape)
    pr = reindex_functor(dom_factors, [j, l],
                         lambda t: (t[0], t[2]), lambda t: (t[0], t[2]))
    restricted = restrict(phi, x)
    res = lan(pr, restricted)
    return CoendResult(j, k, l, x, res.diagram, res, tw)


@dataclass(frozen=True)
class EndResult:
    """∫_K of a diagram over J × K^op × K × L, with its limit presentations.

    wedge_leg(j, f, l) is the projection value(j, l) -> X(j, s(f), t(f), l).
    """
    j: FinCategory
    k: FinCategory
    l: FinCategory
    source: Diagram
    diagram: Diagram
    ran_result: RanResult
    tw: FinCategory

    def value(self, j: str, l: str):
        return self.diagram.ob[pair_id(j, l)]

    def wedge_leg(self, j: str, f: str, l: str):
        return self.ran_result.counit.components[nest_obj((j, f, l))]


def end(j: FinCategory, k: FinCategory, l: FinCategory, x: Diagram) -> EndResult:
    """The dual composite: restrict along the opposite twisted arrow projection,
    then right-extend along J×tw^op×L -> J×L.

    The orientation is pinned by the hom end over the arrow category having
    exactly one point (the identity transformation).
    """
    shape = coend_shape(j, k, l)
    if x.shape != shape:
        raise ValueError("diagram shape does not factor as J x K^op x K x L")
    ctw, _ = twisted_cotensor(k)
    _, records = _twisted_arrow_data(k)
    proj_mor = {mid: (a, b) for mid, a, b, _, _ in records}
    dom_factors = [j, ctw, l]
    phi = reindex_functor(
        dom_factors, [j, opposite(k), k, l],
        lambda t: (t[0], k.src(t[1]), k.dst(t[1]), t[2]),
        lambda t: (t[0],) + proj_mor[t[1]] + (t[2],),
        cod=shape)
    pr = reindex_functor(dom_factors, [j, l],
                         lambda t: (t[0], t[2]), lambda t: (t[0], t[2]))
    restricted = restrict(phi, x)
    res = ran(pr, restricted)
    return EndResult(j, k, l, x, res.diagram, res, ctw)


def pointwise_coend_map(res: CoendResult, j_obj: str, l_obj: str):
    """Canonical map from the standalone coend of X(j,-,-,l) to (∫^K X)(j, l)."""
    e = terminal_category()
    x = res.source
    k = res.k
    iota = reindex_functor(
        [e, opposite(k), k, e], [res.j, opposite(k), k, res.l],
        lambda t: (j_obj, t[1], t[2], l_obj),
        lambda t: (res.j.identity(j_obj), t[1], t[2], res.l.identity(l_obj)),
        cod=x.shape)
    standalone = coend(e, k, e, restrict(iota, x))
    base = x.base
    pres = standalone.lan_result.pointwise[pair_id("*", "*")]
    cd = standalone.lan_result.commas[pair_id("*", "*")]
    legs = {}
    for tobj, g in cd.pairs:
        # tobj = ((*,f),*) with g the unique endomorphism of the point
        f = _middle_of_nested_point(tobj)
        legs[cd.oid(tobj, g)] = res.generator_leg(j_obj, f, l_obj)
    target = res.value(j_obj, l_obj)
    return base.factor_cocone(pres, target, legs), standalone


def _middle_of_nested_point(tobj: str) -> str:
    # tobj has the shape pair_id(pair_id("*", f), "*"); recover f.
    return _split_three(tobj)[1]


@dataclass(frozen=True)
class FubiniResult:
    product_coend: CoendResult
    iterated_kl: CoendResult
    iterated_lk: CoendResult
    to_kl: DiagramMap
    to_lk: DiagramMap
    invertible: bool


def fubini_check(j: FinCategory, k: FinCategory, l: FinCategory, m: FinCategory,
                 x: Diagram) -> FubiniResult:
    """Compare ∫^{K×L} X with both iterated coends via constructed canonical maps.

    The comparisons are assembled from the product decomposition of twisted
    arrows of K×L and the generator legs of the nested coends.
    """
    kl, _, _ = product(k, l)
    if x.shape != coend_shape(j, kl, m):
        raise ValueError("diagram shape does not factor as J x (KxL)^op x (KxL) x M")
    y1 = coend(j, kl, m, x)

    # iterated over L then K
    sigma_k = reindex_functor(
        [j, opposite(k), k, opposite(l), l, m], [j, opposite(kl), kl, m],
        lambda t: (t[0], pair_id(t[1], t[3]), pair_id(t[2], t[4]), t[5]),
        lambda t: (t[0], pair_id(t[1], t[3]), pair_id(t[2], t[4]), t[5]),
        cod=x.shape)
    jk_prefix = nested_product([j, opposite(k), k])
    inner_l = coend(jk_prefix, l, m, restrict(sigma_k, x))
    y2 = coend(j, k, m, inner_l.diagram)

    # iterated over K then L
    sigma_l = reindex_functor(
        [j, opposite(l), l, opposite(k), k, m], [j, opposite(kl), kl, m],
        lambda t: (t[0], pair_id(t[3], t[1]), pair_id(t[4], t[2]), t[5]),
        lambda t: (t[0], pair_id(t[3], t[1]), pair_id(t[4], t[2]), t[5]),
        cod=x.shape)
    jl_prefix = nested_product([j, opposite(l), l])
    inner_k = coend(jl_prefix, k, m, restrict(sigma_l, x))
    y3 = coend(j, l, m, inner_k.diagram)

    _, records_kl = _twisted_arrow_data(kl)
    # every twisted arrow of K×L is a pair (wk, wl) of twisted arrows
    base = x.base

    def comparison(target_res_outer, inner_res, outer_first: bool) -> DiagramMap:
        comps = {}
        for jo in j.objects:
            for mo in m.objects:
                key = pair_id(jo, mo)
                pres = y1.lan_result.pointwise[key]
                cd = y1.lan_result.commas[key]
                legs = {}
                for tobj, g in cd.pairs:
                    j1, w, m1 = _split_three(tobj)
                    wk, wl = _split_pair(w)
                    if outer_first:
                        inner_leg = inner_res.generator_leg(
                            nest_obj((j1, k.dst(wk), k.src(wk))), wl, m1)
                        outer_leg = target_res_outer.generator_leg(j1, wk, m1)
                    else:
                        inner_leg = inner_res.generator_leg(
                            nest_obj((j1, l.dst(wl), l.src(wl))), wk, m1)
                        outer_leg = target_res_outer.generator_leg(j1, wl, m1)
                    core = base.compose(outer_leg, inner_leg)
                    legs[cd.oid(tobj, g)] = base.compose(
                        target_res_outer.diagram.mor[g], core)
                comps[key] = base.factor_cocone(pres, target_res_outer.value(jo, mo), legs)
        return DiagramMap(y1.diagram, target_res_outer.diagram, comps)

    to_kl = comparison(y2, inner_l, outer_first=True)
    to_lk = comparison(y3, inner_k, outer_first=False)
    ok = is_iso_map(to_kl) and is_iso_map(to_lk)
    return FubiniResult(y1, y2, y3, to_kl, to_lk, ok)


def _split_pair(pid: str) -> tuple[str, str]:
    """Inverse of pair_id for ids produced by it (depth-aware comma split)."""
    assert pid.startswith("(") and pid.endswith(")")
    body = pid[1:-1]
    depth = 0
    for i, ch in enumerate(body):
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
        elif ch == "," and depth == 0:
            return body[:i], body[i + 1:]
    raise ValueError(f"not a pair id: {pid}")


def _split_three(tobj: str) -> tuple[str, str, str]:
    """Split a left-nested triple id ((a,b),c) into (a, b, c)."""
    ab, c = _split_pair(tobj)
    a, b = _split_pair(ab)
    return a, b, c


def hom_bifunctor_diagram(base: InstanceCategory, k: FinCategory) -> Diagram:
    """hom_K(-,-) as a diagram over e × K^op × K × e, valued in copowers of the unit."""
    e = terminal_category()
    shape = coend_shape(e, k, e)
    ob = {}
    for a in k.objects:
        for b in k.objects:
            ob[nest_obj(("*", a, b, "*"))] = base.copower(len(k.hom(a, b)))
    mor = {}
    for m1, s1, t1 in k.morphisms:        # contravariant slot: m1 runs t1 -> s1 in K^op
        for m2, s2, t2 in k.morphisms:    # covariant slot
            src_hom = k.hom(t1, s2)
            dst_hom = list(k.hom(s1, t2))
            table = [dst_hom.index(k.compose(m2, k.compose(h, m1))) for h in src_hom]
            mid = nest_obj(("id_*", m1, m2, "id_*"))
            mor[mid] = base.copower_map(len(src_hom), len(dst_hom), table)
    return Diagram(shape, base, ob, mor)


# ---------------------------------------------------------------------------
# derivator axiom checks


def glue_coproduct(cop: FinCategory, in1: Functor, in2: Functor,
                   a: Diagram, b: Diagram) -> Diagram:
    """The inverse of restriction along the two coproduct inclusions."""
    ob = {}
    mor = {}
    for j, v in a.ob.items():
        ob[in1.ob[j]] = v
    for j, v in b.ob.items():
        ob[in2.ob[j]] = v
    for m, v in a.mor.items():
        mor[in1.mor[m]] = v
    for m, v in b.mor.items():
        mor[in2.mor[m]] = v
    return Diagram(cop, a.base, ob, mor)


def _discretize_comma(cd: CommaData) -> CommaData:
    """Forget the morphisms of a comma category; a deliberately broken engine."""
    from .fincat import FinCategory as FC
    objs = cd.cat.objects
    mors = tuple((cd.cat.identities[o], o, o) for o in objs)
    ident = dict(cd.cat.identities)
    comp = {(i, i): i for i, _, _ in mors}
    disc = FC(objs, mors, ident, comp, name=f"disc({cd.cat.name})")
    proj = Functor(disc, cd.proj.target,
                   {o: cd.proj.ob[o] for o in objs},
                   {i: cd.proj.mor[i] for i, _, _ in mors})
    return CommaData(disc, proj, cd.pairs)


def lan_broken(u: Functor, x: Diagram) -> LanResult:
    """Pointwise colimits over discretized comma categories: drops the
    identifications and serves as the corrupted-engine fixture."""
    base = x.base
    kcat = u.target
    commas = {k: _discretize_comma(comma_data(u, k)) for k in kcat.objects}
    pointwise = {k: base.colimit(restrict(commas[k].proj, x)) for k in kcat.objects}
    ob = {k: pointwise[k].obj for k in kcat.objects}
    mor = {}
    for g, s, t in kcat.morphisms:
        legs = {}
        for j, f in commas[s].pairs:
            legs[commas[s].oid(j, f)] = pointwise[t].legs[commas[t].oid(j, kcat.compose(g, f))]
        mor[g] = base.factor_cocone(pointwise[s], ob[t], legs)
    diagram = Diagram(kcat, base, ob, mor)
    unit = DiagramMap(x, restrict(u, diagram), {
        j: pointwise[u.ob[j]].legs[commas[u.ob[j]].oid(j, kcat.identity(u.ob[j]))]
        for j in u.source.objects
    })
    return LanResult(u, x, diagram, unit, pointwise, commas)


def beck_chevalley_with(square: BCSquare, x: Diagram, lan_fn) -> DiagramMap:
    lan_right = lan_fn(square.right, x)
    q_diag = lan_right.diagram
    m1 = restrict_map(square.top, lan_right.unit)
    m2 = transformation_map(square.filler, q_diag)
    m12 = compose_maps(m2, m1)
    w = restrict(square.bottom, q_diag)
    lan_p_source = lan_fn(square.left, m12.source)
    lan_p_target = lan_fn(square.left, m12.target)
    step = lan_map(lan_p_source, lan_p_target, m12)
    eps = lan_counit(lan_p_target, w)
    return compose_maps(eps, step)


def generating_functors(shapes: list[FinCategory]) -> list[Functor]:
    """Every functor between every ordered pair of family shapes."""
    out = []
    for a in shapes:
        for b in shapes:
            out.extend(enumerate_functors(a, b))
    return out


def axioms_report(rd: RepresentedDerivator, shapes: list[FinCategory] | None = None,
                  seed: int = 0, corrupt: bool = False, der3_stride: int = 20,
                  report=None):
    """Check Der1 (binary coproducts), Der2, Der3 with triangle identities, and
    Der4 over every comma square of the shape family."""
    import random

    from .reporting import Report

    shapes = shapes if shapes is not None else default_shape_family()
    rep = report if report is not None else Report(command="check-axioms", seed=seed)
    rep.scope["derivator"] = rd.name
    rep.scope["shapes"] = [s.name for s in shapes]
    base = rd.base
    rng = random.Random(seed)
    lan_fn = lan_broken if corrupt else lan
    if corrupt:
        rep.note("corrupted engine: left Kan extensions drop comma identifications")

    # Der1: restriction along the inclusions is an equivalence onto pairs
    for i, a_shape in enumerate(shapes):
        for b_shape in shapes[i:]:
            cop, in1, in2 = coproduct(a_shape, b_shape)
            x = random_diagram(base, cop, rng)
            xa, xb = restrict(in1, x), restrict(in2, x)
            glued = glue_coproduct(cop, in1, in2, xa, xb)
            ya = random_diagram(base, a_shape, rng)
            yb = random_diagram(base, b_shape, rng)
            y = glue_coproduct(cop, in1, in2, ya, yb)
            ok = (glued == x and restrict(in1, y) == ya and restrict(in2, y) == yb)
            rep.add("Der1", f"value({a_shape.name}+{b_shape.name}) = value({a_shape.name}) x value({b_shape.name})", ok)
    rep.note("Der1 checked for binary coproducts of family shapes only")

    # Der2: isomorphisms are detected pointwise
    for shape in shapes:
        x = random_diagram(base, shape, rng)
        iso = random_iso_map(base, x, rng)
        ok = is_iso_map(iso)
        if ok:
            inv = invert_map(iso)
            ok = (compose_maps(inv, iso) == identity_map(iso.source)
                  and compose_maps(iso, inv) == identity_map(iso.target))
        f = random_diagram_map(base, x, rng)
        agree = is_iso_map(f) == all(base.is_iso(c) for c in f.components.values())
        rep.add("Der2", f"pointwise isomorphism detection over {shape.name}", ok and agree)

    # Der3: Kan extensions exist with exact triangle identities
    functors = generating_functors(shapes)
    der3_sample = functors[::max(1, der3_stride)]
    for u in der3_sample:
        x = random_diagram(base, u.source, rng)
        y = random_diagram(base, u.target, rng)
        try:
            lx = lan_fn(u, x)
            lan_of_restr = lan_fn(u, restrict(u, lx.diagram))
            t1 = compose_maps(lan_counit(lan_of_restr, lx.diagram),
                              lan_map(lx, lan_of_restr, lx.unit)) == identity_map(lx.diagram)
            ly = lan_fn(u, restrict(u, y))
            t2 = compose_maps(restrict_map(u, lan_counit(ly, y)),
                              ly.unit) == identity_map(restrict(u, y))
            rx = ran(u, x)
            ran_of_restr = ran(u, restrict(u, rx.diagram))
            t3 = compose_maps(ran_map(ran_of_restr, rx, rx.counit),
                              ran_unit(ran_of_restr, rx.diagram)) == identity_map(rx.diagram)
            rz = ran(u, restrict(u, y))
            t4 = compose_maps(rz.counit,
                              restrict_map(u, ran_unit(rz, y))) == identity_map(restrict(u, y))
            ok = t1 and t2 and t3 and t4
            witness = "" if ok else f"triangles {t1},{t2},{t3},{t4}"
        except Exception as exc:  # a broken engine may fail to assemble the data
            ok, witness = False, f"construction error: {exc}"
        rep.add("Der3", f"adjunction triangles for {u.source.name}->{u.target.name}"
                        f"#{functors.index(u)}", ok, witness)
    rep.scope["der3_sampled_functors"] = len(der3_sample)

    # Der4: every comma square over the family has an invertible mate
    der4_failures = 0
    for u in functors:
        x = random_diagram(base, u.source, rng)
        bad = []
        for k in u.target.objects:
            try:
                mate = beck_chevalley_with(comma_square(u, k), x, lan_fn)
                if not is_iso_map(mate):
                    bad.append(k)
            except Exception as exc:
                bad.append(f"{k} (error: {exc})")
        if bad:
            der4_failures += 1
            rep.add("Der4", f"comma squares for functor #{functors.index(u)} "
                            f"{u.source.name}->{u.target.name}", False,
                    f"non-invertible mate at k in {bad}")
    rep.add("Der4", f"all comma squares over {len(functors)} functors", der4_failures == 0,
            "" if der4_failures == 0 else f"{der4_failures} functors with failing mates")
    return rep
