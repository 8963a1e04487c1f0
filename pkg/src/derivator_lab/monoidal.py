"""Represented monoidal structure in external (bimorphism) form: the
internalize/externalize correspondence, division functors computed as ends of
pointwise internal homs, adjunction-of-two-variables checks, and the
evaluation-map counterexample showing the first-variable structure maps of
the division functor need not be invertible."""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Any, Callable

from .diagrams import Diagram, DiagramMap, compose_maps, enumerate_diagram_maps, identity_map
from .fincat import (FinCategory, Functor, diagonal_functor, identity_functor, opposite,
                     pair_id, product, product_functor, terminal_category)
from .instances import ColimitPresentation, InstanceCategory
from .kan import (CoendResult, EndResult, LanResult, RepresentedDerivator, coend_shape,
                  end, lan, nest_obj, reindex_functor, restrict, restrict_map, _split_pair)


# ---------------------------------------------------------------------------
# external tensor of diagrams


def ext_tensor(x: Diagram, y: Diagram) -> Diagram:
    """(x ⊗ y)(j1, j2) = x(j1) ⊗ y(j2) over the product shape."""
    base = x.base
    shape, _, _ = product(x.shape, y.shape)
    ob = {}
    for a, b in itertools.product(x.shape.objects, y.shape.objects):
        ob[pair_id(a, b)] = base.tensor_obj(x.ob[a], y.ob[b])
    mor = {}
    for m1, m2 in itertools.product(x.shape.morphism_ids(), y.shape.morphism_ids()):
        mor[pair_id(m1, m2)] = base.tensor_mor(x.mor[m1], y.mor[m2])
    return Diagram(shape, base, ob, mor)


def ext_tensor_map(f: DiagramMap, g: DiagramMap) -> DiagramMap:
    base = f.base
    comps = {}
    for a, b in itertools.product(f.source.shape.objects, g.source.shape.objects):
        comps[pair_id(a, b)] = base.tensor_mor(f.components[a], g.components[b])
    return DiagramMap(ext_tensor(f.source, g.source), ext_tensor(f.target, g.target), comps)


def pointwise_tensor(x: Diagram, y: Diagram) -> Diagram:
    """(x ⊗ y)(j) = x(j) ⊗ y(j) over the shared shape."""
    if x.shape != y.shape:
        raise ValueError("pointwise tensor needs a shared shape")
    base = x.base
    return Diagram(x.shape, base,
                   {j: base.tensor_obj(x.ob[j], y.ob[j]) for j in x.shape.objects},
                   {m: base.tensor_mor(x.mor[m], y.mor[m]) for m in x.shape.morphism_ids()})


def pointwise_tensor_map(f: DiagramMap, g: DiagramMap) -> DiagramMap:
    base = f.base
    return DiagramMap(pointwise_tensor(f.source, g.source),
                      pointwise_tensor(f.target, g.target),
                      {j: base.tensor_mor(f.components[j], g.components[j])
                       for j in f.source.shape.objects})


# ---------------------------------------------------------------------------
# bimorphisms and the l/r correspondence


@dataclass(frozen=True)
class Bimorphism:
    """A two-variable morphism in external form.

    apply(x, y) lives over the product of the shapes of x and y; gamma
    produces the structure map (u1×u2)* B(x, y) -> B(u1* x, u2* y), which is
    the identity for strict bimorphisms such as the represented tensor.
    """
    base: InstanceCategory
    apply: Callable[[Diagram, Diagram], Diagram]
    apply_map: Callable[[DiagramMap, DiagramMap], DiagramMap]
    strict: bool = True

    def gamma(self, u1: Functor, u2: Functor, x: Diagram, y: Diagram) -> DiagramMap:
        prod_u = product_functor(u1, u2, product(u1.source, u2.source)[0],
                                 product(u1.target, u2.target)[0])
        lhs = restrict(prod_u, self.apply(x, y))
        rhs = self.apply(restrict(u1, x), restrict(u2, y))
        if self.strict:
            if lhs != rhs:
                raise ValueError("strict bimorphism has non-identity structure map")
            return identity_map(lhs)
        raise NotImplementedError("only strict bimorphisms occur here")


@dataclass(frozen=True)
class ProductMorphism:
    """A one-variable-per-shape morphism (pairs of diagrams over J to diagrams
    over J); gamma(u, x, y) is the structure map u* F(x,y) -> F(u*x, u*y)."""
    base: InstanceCategory
    apply: Callable[[Diagram, Diagram], Diagram]
    apply_map: Callable[[DiagramMap, DiagramMap], DiagramMap]
    strict: bool = True

    def gamma(self, u: Functor, x: Diagram, y: Diagram) -> DiagramMap:
        lhs = restrict(u, self.apply(x, y))
        rhs = self.apply(restrict(u, x), restrict(u, y))
        if self.strict:
            if lhs != rhs:
                raise ValueError("strict product morphism has non-identity structure map")
            return identity_map(lhs)
        raise NotImplementedError("only strict product morphisms occur here")


def represented_tensor(base: InstanceCategory) -> Bimorphism:
    """The strict bimorphism (x, y) -> external tensor, with identity structure maps."""
    return Bimorphism(base, ext_tensor, ext_tensor_map, strict=True)


def internalize(b: Bimorphism) -> ProductMorphism:
    """Restrict the square-shaped external value along the diagonal."""
    def apply(x: Diagram, y: Diagram) -> Diagram:
        delta, _ = diagonal_functor(x.shape)
        return restrict(delta, b.apply(x, y))

    def apply_map(f: DiagramMap, g: DiagramMap) -> DiagramMap:
        delta, _ = diagonal_functor(f.source.shape)
        return restrict_map(delta, b.apply_map(f, g))

    return ProductMorphism(b.base, apply, apply_map, strict=b.strict)


def externalize(f: ProductMorphism) -> Bimorphism:
    """Restrict both arguments along the projections, then apply at the product."""
    def apply(x: Diagram, y: Diagram) -> Diagram:
        _, pr1, pr2 = product(x.shape, y.shape)
        return f.apply(restrict(pr1, x), restrict(pr2, y))

    def apply_map(g: DiagramMap, h: DiagramMap) -> DiagramMap:
        _, pr1, pr2 = product(g.source.shape, h.source.shape)
        return f.apply_map(restrict_map(pr1, g), restrict_map(pr2, h))

    return Bimorphism(f.base, apply, apply_map, strict=f.strict)


# ---------------------------------------------------------------------------
# division functors via ends of pointwise internal homs


@dataclass(frozen=True)
class DivisionResult:
    """Hom_l(x, z) over J2 together with its end presentation.

    wedge(f, j2) projects the value at j2 to hom(x(s f), z(t f, j2)) for a
    twisted arrow f of J1.
    """
    x: Diagram
    z: Diagram
    j1: FinCategory
    j2: FinCategory
    diagram: Diagram
    end_result: EndResult

    def value(self, j2: str):
        return self.diagram.ob[j2]

    def wedge(self, f: str, j2: str):
        return self.end_result.wedge_leg("*", f, j2)


def division(x: Diagram, z: Diagram, j1: FinCategory, j2: FinCategory) -> DivisionResult:
    """Hom_l(x, z)(-) = the end over J1 of hom(x(j1), z(j1, -))."""
    base = x.base
    if x.shape != j1:
        raise ValueError("x must live over J1")
    zshape, _, _ = product(j1, j2)
    if z.shape != zshape:
        raise ValueError("z must live over J1 x J2")
    e = terminal_category()
    shape = coend_shape(e, j1, j2)
    ob = {}
    for a in j1.objects:
        for b in j1.objects:
            for c in j2.objects:
                ob[nest_obj(("*", a, b, c))] = base.hom_obj(x.ob[a], z.ob[pair_id(b, c)])
    mor = {}
    for m1, s1, t1 in j1.morphisms:       # contravariant slot
        for m2, s2, t2 in j1.morphisms:   # covariant slot through z
            for m3, s3, t3 in j2.morphisms:
                mid = nest_obj(("id_*", m1, m2, m3))
                mor[mid] = base.hom_obj_mor(x.mor[m1], z.mor[pair_id(m2, m3)])
    integrand = Diagram(shape, base, ob, mor)
    res = end(e, j1, j2, integrand)
    strip = reindex_functor([j2], [e, j2], lambda t: ("*", t[0]),
                            lambda t: ("id_*", t[0]), cod=res.diagram.shape)
    return DivisionResult(x, z, j1, j2, restrict(strip, res.diagram), res)


def division_right(y: Diagram, z: Diagram, j1: FinCategory, j2: FinCategory) -> DivisionResult:
    """Hom_r via the symmetry of the base: divide the twisted tensor on the left.

    Valid for symmetric bases only; z is reindexed along the shape swap."""
    base = y.base
    swap = reindex_functor([j2, j1], [j1, j2], lambda t: (t[1], t[0]),
                           lambda t: (t[1], t[0]), cod=z.shape)
    return division(y, restrict(swap, z), j2, j1)


# ---------------------------------------------------------------------------
# the adjunction of two variables, elementwise


@dataclass(frozen=True)
class AdjunctionReport:
    left_maps: int
    right_maps: int
    bijection: bool


def curry_map(x: Diagram, y: Diagram, z: Diagram, phi: DiagramMap,
              div: DivisionResult) -> DiagramMap:
    """hom(x⊗y, z) -> hom(y, Hom_l(x, z)) by currying through the end wedge."""
    base = x.base
    j1, j2 = div.j1, div.j2
    res = div.end_result.ran_result
    comps = {}
    for j2o in j2.objects:
        key = pair_id("*", j2o)
        pres = res.pointwise[key]
        sd = res.slices[key]
        legs = {}
        for tobj, g in sd.pairs:
            # tobj = ((*, w), c) for a twisted arrow w of J1; g = (id_*, h: j2o -> c)
            _, w, c = _split_three_local(tobj)
            _, h = _split_pair(g)
            sw, tw = j1.src(w), j1.dst(w)
            inner = base.compose(z.mor[pair_id(w, j2.identity(c))],
                                 base.compose(phi.components[pair_id(sw, c)],
                                              base.tensor_mor(base.identity(x.ob[sw]),
                                                              y.mor[h])))
            legs[sd.oid(tobj, g)] = base.curry(inner, x.ob[sw], y.ob[j2o],
                                               z.ob[pair_id(tw, c)])
        comps[j2o] = base.factor_cone(pres, y.ob[j2o], legs)
    return DiagramMap(y, div.diagram, comps)


def uncurry_map(x: Diagram, y: Diagram, z: Diagram, psi: DiagramMap,
                div: DivisionResult) -> DiagramMap:
    """hom(y, Hom_l(x, z)) -> hom(x⊗y, z) via evaluation at identity wedges."""
    base = x.base
    j1, j2 = div.j1, div.j2
    xy = ext_tensor(x, y)
    comps = {}
    for a in j1.objects:
        for c in j2.objects:
            wedge = div.wedge(j1.identity(a), c)
            hom_ab = base.hom_obj(x.ob[a], z.ob[pair_id(a, c)])
            step = base.compose(wedge, psi.components[c])          # y(c) -> hom(x(a), z(a,c))
            pair_mor = base.tensor_mor(base.identity(x.ob[a]), step)
            sym = base.symmetry(x.ob[a], hom_ab)
            ev = base.eval_mor(x.ob[a], z.ob[pair_id(a, c)])
            comps[pair_id(a, c)] = base.compose(ev, base.compose(sym, pair_mor))
    return DiagramMap(xy, z, comps)


def adjunction_check(x: Diagram, y: Diagram, z: Diagram,
                     j1: FinCategory, j2: FinCategory) -> AdjunctionReport:
    """Enumerate both hom sets and verify the constructed bijection round-trips
    elementwise in both directions."""
    div = division(x, z, j1, j2)
    xy = ext_tensor(x, y)
    left = enumerate_diagram_maps(xy, z)
    right = enumerate_diagram_maps(y, div.diagram)
    if len(left) != len(right):
        return AdjunctionReport(len(left), len(right), False)
    seen = []
    for phi in left:
        psi = curry_map(x, y, z, phi, div)
        if psi not in right:
            return AdjunctionReport(len(left), len(right), False)
        if uncurry_map(x, y, z, psi, div) != phi:
            return AdjunctionReport(len(left), len(right), False)
        seen.append(psi)
    for psi in right:
        phi = uncurry_map(x, y, z, psi, div)
        if curry_map(x, y, z, phi, div) != psi:
            return AdjunctionReport(len(left), len(right), False)
    injective = all(seen[i] != seen[j] for i in range(len(seen)) for j in range(i + 1, len(seen)))
    return AdjunctionReport(len(left), len(right), injective)


def _split_three_local(tobj: str) -> tuple[str, str, str]:
    ab, c = _split_pair(tobj)
    a, b = _split_pair(ab)
    return a, b, c


# ---------------------------------------------------------------------------
# the evaluation-map counterexample


@dataclass(frozen=True)
class EvaluationGap:
    nat_count: int
    hom_count: int
    evaluation: Any
    is_iso: bool


def evaluation_gap_witness(x: Diagram, z: Diagram, k1: str) -> EvaluationGap:
    """The first-variable structure map of Hom_l at a point: the evaluation
    map from the object of natural transformations to hom(x(k1), z(k1))."""
    base = x.base
    shape = x.shape
    e = terminal_category()
    # z over K1 viewed over K1 × e
    pr1 = reindex_functor([shape, e], [shape], lambda t: (t[0],), lambda t: (t[0],))
    zc = restrict(pr1, z)
    div = division(x, zc, shape, e)
    nat_obj = div.value("*")
    ev = div.wedge(shape.identity(k1), "*")
    oracle = len(enumerate_diagram_maps(x, z))
    hom_count = base.hom_obj(x.ob[k1], z.ob[k1]).size
    return EvaluationGap(oracle, hom_count, ev, base.is_iso(ev))


# ---------------------------------------------------------------------------
# second-variable structure maps agree with the cocontinuity mate


@dataclass(frozen=True)
class SecondVariableReport:
    gamma_invertible: bool
    mate_invertible: bool

    @property
    def agree(self) -> bool:
        return self.gamma_invertible == self.mate_invertible


def gamma_second_variable(x: Diagram, z: Diagram, u2: Functor,
                          j1: FinCategory) -> DiagramMap:
    """u2* Hom_l(x, z) -> Hom_l(x, (id × u2)* z), built by factoring wedges."""
    base = x.base
    j2, k2 = u2.source, u2.target
    div_k = division(x, z, j1, k2)
    idxu2 = product_functor(identity_functor(j1), u2, product(j1, j2)[0], product(j1, k2)[0])
    div_j = division(x, restrict(idxu2, z), j1, j2)
    pullback = reindex_functor([j2], [k2], lambda t: (u2.ob[t[0]],),
                               lambda t: (u2.mor[t[0]],), cod=div_k.diagram.shape)
    source = restrict(pullback, div_k.diagram)
    res = div_j.end_result.ran_result
    comps = {}
    for j2o in j2.objects:
        key = pair_id("*", j2o)
        pres = res.pointwise[key]
        sd = res.slices[key]
        legs = {}
        for tobj, g in sd.pairs:
            _, w, c = _split_three_local(tobj)
            _, h = _split_pair(g)   # h: j2o -> c in J2
            legs[sd.oid(tobj, g)] = base.compose(div_k.wedge(w, u2.ob[c]),
                                                 div_k.diagram.mor[u2.mor[h]])
        comps[j2o] = base.factor_cone(pres, source.ob[j2o], legs)
    return DiagramMap(source, div_j.diagram, comps)


def tensor_lan_mate(x: Diagram, y: Diagram, u2: Functor, j1: FinCategory) -> DiagramMap:
    """(id × u2)_! (x ⊗ y) -> x ⊗ (u2)_! y, the cocontinuity mate in the
    second variable."""
    base = x.base
    j2, k2 = u2.source, u2.target
    lan_y = lan(u2, y)
    rhs = ext_tensor(x, lan_y.diagram)
    idxu2 = product_functor(identity_functor(j1), u2, product(j1, j2)[0], product(j1, k2)[0])
    lhs = lan(idxu2, ext_tensor(x, y))
    comps = {}
    for a in j1.objects:
        for k in k2.objects:
            key = pair_id(a, k)
            pres = lhs.pointwise[key]
            cd = lhs.commas[key]
            legs = {}
            for pair_obj, g in cd.pairs:
                a1, a2 = _split_pair(pair_obj)
                h1, h2 = _split_pair(g)   # h1: a1 -> a in J1, h2: u2(a2) -> k in K2
                legs[cd.oid(pair_obj, g)] = base.tensor_mor(
                    x.mor[h1], lan_y.pointwise[k].legs[lan_y.commas[k].oid(a2, h2)])
            comps[key] = base.factor_cocone(pres, rhs.ob[key], legs)
    return DiagramMap(lhs.diagram, rhs, comps)


def second_variable_structure_check(x: Diagram, z: Diagram, y: Diagram, u2: Functor,
                                    j1: FinCategory) -> SecondVariableReport:
    from .diagrams import is_iso_map
    gamma = gamma_second_variable(x, z, u2, j1)
    mate = tensor_lan_mate(x, y, u2, j1)
    return SecondVariableReport(is_iso_map(gamma), is_iso_map(mate))
