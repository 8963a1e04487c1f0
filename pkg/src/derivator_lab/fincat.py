"""Finite categories, functors, and natural transformations.

A FinCategory is given by explicit object/morphism lists and a total
composition table; there are no generators-and-relations presentations.
All enumeration orders are declaration order, and derived categories
(product, opposite, comma, twisted arrow) enumerate lexicographically
over constituent indices, so every construction is bit-reproducible.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field


@dataclass(frozen=True, eq=True)
class FinCategory:
    """A finite category with a total composition lookup table.

    morphisms are (id, source, target) triples; composition maps a
    composable pair (g, f) with src(g) == tgt(f) to the id of g∘f.
    The name is display-only and excluded from equality.
    """

    objects: tuple[str, ...]
    morphisms: tuple[tuple[str, str, str], ...]
    identities: dict[str, str]
    composition: dict[tuple[str, str], str]
    name: str = field(default="", compare=False)

    def __post_init__(self):
        if len(set(self.objects)) != len(self.objects):
            raise ValueError("duplicate object ids")
        ids = [m[0] for m in self.morphisms]
        if len(set(ids)) != len(ids):
            raise ValueError("duplicate morphism ids")
        src = {m[0]: m[1] for m in self.morphisms}
        dst = {m[0]: m[2] for m in self.morphisms}
        for m, s, t in self.morphisms:
            if s not in self.objects or t not in self.objects:
                raise ValueError(f"morphism {m} references unknown object")
        for x, i in self.identities.items():
            if x not in self.objects or i not in src:
                raise ValueError(f"identity entry {x} = {i} references unknown id")
        for (g, f), h in self.composition.items():
            if g not in src or f not in src or h not in src:
                raise ValueError(f"composition entry ({g},{f}) references unknown morphism")
        object.__setattr__(self, "_src", src)
        object.__setattr__(self, "_dst", dst)
        object.__setattr__(self, "_obj_index", {x: i for i, x in enumerate(self.objects)})
        object.__setattr__(self, "_mor_index", {m[0]: i for i, m in enumerate(self.morphisms)})
        hom: dict[tuple[str, str], list[str]] = {}
        for m, s, t in self.morphisms:
            hom.setdefault((s, t), []).append(m)
        object.__setattr__(self, "_hom", hom)

    def src(self, m: str) -> str:
        return self._src[m]

    def dst(self, m: str) -> str:
        return self._dst[m]

    def hom(self, x: str, y: str) -> tuple[str, ...]:
        return tuple(self._hom.get((x, y), ()))

    def identity(self, x: str) -> str:
        return self.identities[x]

    def compose(self, g: str, f: str) -> str:
        """g∘f for src(g) == tgt(f)."""
        return self.composition[(g, f)]

    def is_identity(self, m: str) -> bool:
        return self.identities.get(self._src[m]) == m

    def morphism_ids(self) -> tuple[str, ...]:
        return tuple(m[0] for m in self.morphisms)

    def obj_index(self, x: str) -> int:
        return self._obj_index[x]

    def mor_index(self, m: str) -> int:
        return self._mor_index[m]

    def __repr__(self):
        label = self.name or "?"
        return f"FinCategory({label}: {len(self.objects)} objects, {len(self.morphisms)} morphisms)"


@dataclass(frozen=True)
class Violation:
    kind: str
    witness: tuple[str, ...]
    detail: str

    def __str__(self):
        return f"{self.kind}{self.witness}: {self.detail}"


def validate(cat: FinCategory) -> list[Violation]:
    """Scan every categorical law; empty report iff the table is a category."""
    out: list[Violation] = []
    for x in cat.objects:
        i = cat.identities.get(x)
        if i is None:
            out.append(Violation("missing-identity", (x,), "object has no designated identity"))
        elif cat.src(i) != x or cat.dst(i) != x:
            out.append(Violation("bad-identity", (x, i), "designated identity is not an endomorphism"))
    mors = cat.morphism_ids()
    for g in mors:
        for f in mors:
            composable = cat.src(g) == cat.dst(f)
            defined = (g, f) in cat.composition
            if composable and not defined:
                out.append(Violation("missing-composite", (g, f), "composable pair has no table entry"))
            elif defined and not composable:
                out.append(Violation("spurious-composite", (g, f), "table entry for a non-composable pair"))
            elif defined:
                h = cat.composition[(g, f)]
                if cat.src(h) != cat.src(f) or cat.dst(h) != cat.dst(g):
                    out.append(Violation("closure", (g, f, h), "composite has wrong source or target"))
    for m in mors:
        i_src = cat.identities.get(cat.src(m))
        i_dst = cat.identities.get(cat.dst(m))
        if i_src is not None:
            got = cat.composition.get((m, i_src))
            if got is not None and got != m:
                out.append(Violation("right-unit", (m, i_src), f"m∘id = {got} != {m}"))
        if i_dst is not None:
            got = cat.composition.get((i_dst, m))
            if got is not None and got != m:
                out.append(Violation("left-unit", (i_dst, m), f"id∘m = {got} != {m}"))
    for h in mors:
        for g in mors:
            if cat.src(h) != cat.dst(g):
                continue
            for f in mors:
                if cat.src(g) != cat.dst(f):
                    continue
                gf = cat.composition.get((g, f))
                hg = cat.composition.get((h, g))
                if gf is None or hg is None:
                    continue
                left = cat.composition.get((h, gf))
                right = cat.composition.get((hg, f))
                if left is not None and right is not None and left != right:
                    out.append(Violation("associativity", (h, g, f), f"(h∘g)∘f = {right} != h∘(g∘f) = {left}"))
    return out


@dataclass(frozen=True, eq=True)
class Functor:
    source: FinCategory
    target: FinCategory
    ob: dict[str, str]
    mor: dict[str, str]
    name: str = field(default="", compare=False)

    def __post_init__(self):
        for x in self.source.objects:
            if self.ob.get(x) not in self.target.objects:
                raise ValueError(f"object map misses {x}")
        for m, s, t in self.source.morphisms:
            fm = self.mor.get(m)
            if fm is None:
                raise ValueError(f"morphism map misses {m}")
            if self.target.src(fm) != self.ob[s] or self.target.dst(fm) != self.ob[t]:
                raise ValueError(f"morphism map breaks source/target at {m}")
        for x in self.source.objects:
            if self.mor[self.source.identity(x)] != self.target.identity(self.ob[x]):
                raise ValueError(f"identity not preserved at {x}")
        for (g, f), h in self.source.composition.items():
            if self.target.composition.get((self.mor[g], self.mor[f])) != self.mor[h]:
                raise ValueError(f"composition not preserved at ({g},{f})")

    def __call__(self, x: str) -> str:
        return self.ob[x]

    def map(self, m: str) -> str:
        return self.mor[m]

    def __repr__(self):
        return f"Functor({self.name or '?'}: {self.source.name or '?'} -> {self.target.name or '?'})"


def identity_functor(cat: FinCategory) -> Functor:
    return Functor(cat, cat, {x: x for x in cat.objects},
                   {m: m for m in cat.morphism_ids()}, name=f"id_{cat.name}")


def compose_functors(g: Functor, f: Functor) -> Functor:
    if f.target != g.source:
        raise ValueError("functors not composable")
    return Functor(f.source, g.target,
                   {x: g.ob[f.ob[x]] for x in f.source.objects},
                   {m: g.mor[f.mor[m]] for m in f.source.morphism_ids()},
                   name=f"{g.name}∘{f.name}")


def collapse_functor(cat: FinCategory) -> Functor:
    """The unique functor to the terminal category e."""
    t = terminal_category()
    return Functor(cat, t, {x: "*" for x in cat.objects},
                   {m: "id_*" for m in cat.morphism_ids()}, name=f"p_{cat.name}")


def point_functor(cat: FinCategory, x: str) -> Functor:
    """e -> cat classifying the object x."""
    t = terminal_category()
    return Functor(t, cat, {"*": x}, {"id_*": cat.identity(x)}, name=f"{x}:e->{cat.name}")


@dataclass(frozen=True, eq=True)
class NatTrans:
    source: Functor
    target: Functor
    components: dict[str, str]
    name: str = field(default="", compare=False)

    def __post_init__(self):
        if self.source.source != self.target.source or self.source.target != self.target.target:
            raise ValueError("functors not parallel")
        dom, cod = self.source.source, self.source.target
        for x in dom.objects:
            c = self.components.get(x)
            if c is None:
                raise ValueError(f"missing component at {x}")
            if cod.src(c) != self.source.ob[x] or cod.dst(c) != self.target.ob[x]:
                raise ValueError(f"component at {x} has wrong source/target")
        for m, s, t in dom.morphisms:
            left = cod.compose(self.components[t], self.source.mor[m])
            right = cod.compose(self.target.mor[m], self.components[s])
            if left != right:
                raise ValueError(f"naturality fails at {m}")


def enumerate_nat_trans(f: Functor, g: Functor) -> list[NatTrans]:
    """All natural transformations f -> g, in lexicographic component order."""
    if f.source != g.source or f.target != g.target:
        raise ValueError("functors not parallel")
    dom, cod = f.source, f.target
    objs = dom.objects
    candidates = [cod.hom(f.ob[x], g.ob[x]) for x in objs]
    out: list[NatTrans] = []

    def natural_so_far(chosen: dict[str, str]) -> bool:
        for m, s, t in dom.morphisms:
            if s in chosen and t in chosen:
                if cod.compose(chosen[t], f.mor[m]) != cod.compose(g.mor[m], chosen[s]):
                    return False
        return True

    def search(i: int, chosen: dict[str, str]):
        if i == len(objs):
            out.append(NatTrans(f, g, dict(chosen)))
            return
        for c in candidates[i]:
            chosen[objs[i]] = c
            if natural_so_far(chosen):
                search(i + 1, chosen)
            del chosen[objs[i]]

    search(0, {})
    return out


def enumerate_functors(dom: FinCategory, cod: FinCategory) -> list[Functor]:
    """All functors dom -> cod, lexicographic over object then morphism choices."""
    out: list[Functor] = []
    non_id = [m for m in dom.morphism_ids() if not dom.is_identity(m)]
    for ob_choice in itertools.product(cod.objects, repeat=len(dom.objects)):
        ob = dict(zip(dom.objects, ob_choice))
        cands = []
        ok = True
        for m in non_id:
            c = cod.hom(ob[dom.src(m)], ob[dom.dst(m)])
            if not c:
                ok = False
                break
            cands.append(c)
        if not ok:
            continue
        for mor_choice in itertools.product(*cands):
            mor = {m: c for m, c in zip(non_id, mor_choice)}
            for x in dom.objects:
                mor[dom.identity(x)] = cod.identity(ob[x])
            if all(cod.composition.get((mor[g], mor[f])) == mor[h]
                   for (g, f), h in dom.composition.items()):
                out.append(Functor(dom, cod, ob, mor, name=f"{dom.name}->{cod.name}"))
    return out


# ---------------------------------------------------------------------------
# derived categories


def opposite(cat: FinCategory) -> FinCategory:
    name = cat.name[3:-1] if cat.name.startswith("op(") and cat.name.endswith(")") else f"op({cat.name})"
    return FinCategory(
        objects=cat.objects,
        morphisms=tuple((m, t, s) for m, s, t in cat.morphisms),
        identities=dict(cat.identities),
        composition={(g, f): h for (f, g), h in cat.composition.items()},
        name=name,
    )


def opposite_functor(u: Functor) -> Functor:
    return Functor(opposite(u.source), opposite(u.target), dict(u.ob), dict(u.mor),
                   name=f"op({u.name})")


def pair_id(a: str, b: str) -> str:
    return f"({a},{b})"


def product(c: FinCategory, d: FinCategory) -> tuple[FinCategory, Functor, Functor]:
    """Product category with its two projections; componentwise composition."""
    objects = tuple(pair_id(a, b) for a, b in itertools.product(c.objects, d.objects))
    morphisms = tuple(
        (pair_id(m1, m2), pair_id(s1, s2), pair_id(t1, t2))
        for (m1, s1, t1), (m2, s2, t2) in itertools.product(c.morphisms, d.morphisms)
    )
    identities = {
        pair_id(a, b): pair_id(c.identity(a), d.identity(b))
        for a, b in itertools.product(c.objects, d.objects)
    }
    composition = {}
    for (g1, f1), h1 in c.composition.items():
        for (g2, f2), h2 in d.composition.items():
            composition[(pair_id(g1, g2), pair_id(f1, f2))] = pair_id(h1, h2)
    p = FinCategory(objects, morphisms, identities, composition, name=f"{c.name}x{d.name}")
    pr1 = Functor(p, c,
                  {pair_id(a, b): a for a, b in itertools.product(c.objects, d.objects)},
                  {pair_id(m1, m2): m1 for m1, m2 in itertools.product(c.morphism_ids(), d.morphism_ids())},
                  name="pr1")
    pr2 = Functor(p, d,
                  {pair_id(a, b): b for a, b in itertools.product(c.objects, d.objects)},
                  {pair_id(m1, m2): m2 for m1, m2 in itertools.product(c.morphism_ids(), d.morphism_ids())},
                  name="pr2")
    return p, pr1, pr2


def pair_functor(f: Functor, g: Functor, prod: FinCategory) -> Functor:
    """The induced functor X -> A×B from f: X->A and g: X->B."""
    if f.source != g.source:
        raise ValueError("sources differ")
    return Functor(f.source, prod,
                   {x: pair_id(f.ob[x], g.ob[x]) for x in f.source.objects},
                   {m: pair_id(f.mor[m], g.mor[m]) for m in f.source.morphism_ids()},
                   name=f"<{f.name},{g.name}>")


def product_functor(f: Functor, g: Functor, dom_prod: FinCategory, cod_prod: FinCategory) -> Functor:
    """f×g between already-built product categories."""
    fs, gs = f.source, g.source
    ob = {pair_id(a, b): pair_id(f.ob[a], g.ob[b])
          for a, b in itertools.product(fs.objects, gs.objects)}
    mor = {pair_id(m1, m2): pair_id(f.mor[m1], g.mor[m2])
           for m1, m2 in itertools.product(fs.morphism_ids(), gs.morphism_ids())}
    return Functor(dom_prod, cod_prod, ob, mor, name=f"{f.name}x{g.name}")


def diagonal_functor(cat: FinCategory) -> tuple[Functor, FinCategory]:
    """Δ: C -> C×C; also returns the product for reuse."""
    p, _, _ = product(cat, cat)
    return Functor(cat, p,
                   {x: pair_id(x, x) for x in cat.objects},
                   {m: pair_id(m, m) for m in cat.morphism_ids()},
                   name=f"Δ_{cat.name}"), p


def tag_left(x: str) -> str:
    return f"inl({x})"


def tag_right(x: str) -> str:
    return f"inr({x})"


def coproduct(c: FinCategory, d: FinCategory) -> tuple[FinCategory, Functor, Functor]:
    """Disjoint union of categories with the two inclusion functors."""
    objects = tuple(tag_left(x) for x in c.objects) + tuple(tag_right(x) for x in d.objects)
    morphisms = tuple((tag_left(m), tag_left(s), tag_left(t)) for m, s, t in c.morphisms) + \
        tuple((tag_right(m), tag_right(s), tag_right(t)) for m, s, t in d.morphisms)
    identities = {tag_left(x): tag_left(i) for x, i in c.identities.items()}
    identities.update({tag_right(x): tag_right(i) for x, i in d.identities.items()})
    composition = {(tag_left(g), tag_left(f)): tag_left(h) for (g, f), h in c.composition.items()}
    composition.update({(tag_right(g), tag_right(f)): tag_right(h) for (g, f), h in d.composition.items()})
    cop = FinCategory(objects, morphisms, identities, composition, name=f"{c.name}+{d.name}")
    in1 = Functor(c, cop, {x: tag_left(x) for x in c.objects},
                  {m: tag_left(m) for m in c.morphism_ids()}, name="inl")
    in2 = Functor(d, cop, {x: tag_right(x) for x in d.objects},
                  {m: tag_right(m) for m in d.morphism_ids()}, name="inr")
    return cop, in1, in2


def comma(u: Functor, k: str) -> tuple[FinCategory, Functor]:
    """The comma category (u/k) with its projection to the source of u.

    Objects are pairs (j, f: u(j) -> k); a morphism (j,f) -> (j',f') is a
    w: j -> j' with f'∘u(w) = f.
    """
    jcat, kcat = u.source, u.target
    if k not in kcat.objects:
        raise ValueError(f"{k} is not an object of the target")
    objs: list[tuple[str, str]] = []
    for j in jcat.objects:
        for f in kcat.hom(u.ob[j], k):
            objs.append((j, f))
    oid = {o: f"({o[0]}|{o[1]})" for o in objs}
    morphs: list[tuple[str, str, str]] = []
    mdata: dict[str, tuple[str, tuple[str, str], tuple[str, str]]] = {}
    for a in objs:
        for b in objs:
            for w in jcat.hom(a[0], b[0]):
                if kcat.compose(b[1], u.mor[w]) == a[1]:
                    mid = f"[{w}:{oid[a]}->{oid[b]}]"
                    morphs.append((mid, oid[a], oid[b]))
                    mdata[mid] = (w, a, b)
    identities = {oid[o]: f"[{jcat.identity(o[0])}:{oid[o]}->{oid[o]}]" for o in objs}
    composition = {}
    for m2, (w2, a2, b2) in mdata.items():
        for m1, (w1, a1, b1) in mdata.items():
            if b1 == a2:
                w = jcat.compose(w2, w1)
                composition[(m2, m1)] = f"[{w}:{oid[a1]}->{oid[b2]}]"
    cat = FinCategory(tuple(oid[o] for o in objs), tuple(morphs), identities, composition,
                      name=f"({u.name}/{k})")
    proj = Functor(cat, jcat,
                   {oid[o]: o[0] for o in objs},
                   {mid: w for mid, (w, _, _) in mdata.items()},
                   name="proj")
    return cat, proj


def slice_under(u: Functor, k: str) -> tuple[FinCategory, Functor]:
    """The slice (k/u), built as the opposite of a comma category of u^op."""
    c, proj = comma(opposite_functor(u), k)
    cat = opposite(c)
    return cat, Functor(cat, u.source, dict(proj.ob), dict(proj.mor), name="proj")


def _twisted_arrow_data(k: FinCategory):
    """Objects (= morphisms of k) and morphism records of the twisted arrow category.

    A twisted-arrow morphism f -> f' is a pair (a: k0 -> k0', b: k1' -> k1)
    with f = b∘f'∘a.
    """
    objs = k.morphism_ids()
    records: list[tuple[str, str, str, str, str]] = []  # (mid, a, b, f, f2)
    for f in objs:
        for f2 in objs:
            for a in k.hom(k.src(f), k.src(f2)):
                for b in k.hom(k.dst(f2), k.dst(f)):
                    if k.compose(b, k.compose(f2, a)) == f:
                        records.append((f"[{a};{b}:{f}->{f2}]", a, b, f, f2))
    return objs, records


def twisted_arrow(k: FinCategory) -> tuple[FinCategory, Functor]:
    """Twisted arrow category of k with its projection to k^op × k.

    Objects are the morphisms f: k0 -> k1 of k; the projection sends f
    to (k1, k0) and a morphism (a, b) to the pair (b, a).
    """
    kop = opposite(k)
    target, _, _ = product(kop, k)
    objs, records = _twisted_arrow_data(k)
    morphs = tuple((mid, f, f2) for mid, _, _, f, f2 in records)
    identities = {f: f"[{k.identity(k.src(f))};{k.identity(k.dst(f))}:{f}->{f}]" for f in objs}
    composition = {}
    for m2, a2, b2, f2, f3 in records:
        for m1, a1, b1, f1, g1 in records:
            if g1 == f2:
                a = k.compose(a2, a1)
                b = k.compose(b1, b2)
                composition[(m2, m1)] = f"[{a};{b}:{f1}->{f3}]"
    cat = FinCategory(objs, morphs, identities, composition, name=f"tw({k.name})")
    ts = Functor(cat, target,
                 {f: pair_id(k.dst(f), k.src(f)) for f in objs},
                 {mid: pair_id(b, a) for mid, a, b, _, _ in records},
                 name="(t,s)")
    return cat, ts


def twisted_cotensor(k: FinCategory) -> tuple[FinCategory, Functor]:
    """Opposite of the twisted arrow category, projecting f: k0 -> k1 to (k0, k1).

    Limits over this category compute ends; the hom end of the arrow
    category having exactly one point pins this orientation.
    """
    tw, _ = twisted_arrow(k)
    cat = opposite(tw)
    kop = opposite(k)
    target, _, _ = product(kop, k)
    _, records = _twisted_arrow_data(k)
    ob = {f: pair_id(k.src(f), k.dst(f)) for f in k.morphism_ids()}
    # In the opposite, the record (mid, a, b, f, f2) runs f2 -> f and projects
    # to (a, b): a in k^op from src(f2) to src(f), b in k from dst(f2) to dst(f).
    mor = {mid: pair_id(a, b) for mid, a, b, _, _ in records}
    return cat, Functor(cat, target, ob, mor, name="(s,t)")


# ---------------------------------------------------------------------------
# built-in shapes


def terminal_category() -> FinCategory:
    return FinCategory(("*",), (("id_*", "*", "*"),), {"*": "id_*"},
                       {("id_*", "id_*"): "id_*"}, name="e")


def empty_category() -> FinCategory:
    return FinCategory((), (), {}, {}, name="0")


def discrete_category(n: int) -> FinCategory:
    objs = tuple(str(i) for i in range(n))
    mors = tuple((f"id_{i}", str(i), str(i)) for i in range(n))
    return FinCategory(objs, mors, {str(i): f"id_{i}" for i in range(n)},
                       {(f"id_{i}", f"id_{i}"): f"id_{i}" for i in range(n)},
                       name=f"disc{n}")


def chain_category(n: int) -> FinCategory:
    """The poset 0 < 1 < ... < n as a category; morphism m_i_j: i -> j."""
    objs = tuple(str(i) for i in range(n + 1))
    mors = []
    for i in range(n + 1):
        mors.append((f"id_{i}", str(i), str(i)))
    for i in range(n + 1):
        for j in range(i + 1, n + 1):
            mors.append((f"m_{i}_{j}", str(i), str(j)))
    mid = {}
    for m, s, t in mors:
        mid[(int(s), int(t))] = m
    composition = {}
    for m2, s2, t2 in mors:
        for m1, s1, t1 in mors:
            if s2 == t1:
                composition[(m2, m1)] = mid[(int(s1), int(t2))]
    return FinCategory(objs, tuple(mors), {str(i): f"id_{i}" for i in range(n + 1)},
                       composition, name=f"[{n}]")


def interval_category() -> FinCategory:
    return chain_category(1)


def span_category() -> FinCategory:
    """b <- a -> c: the shape whose colimits are pushouts."""
    objs = ("a", "b", "c")
    mors = (("id_a", "a", "a"), ("id_b", "b", "b"), ("id_c", "c", "c"),
            ("f", "a", "b"), ("g", "a", "c"))
    comp = {}
    for m, s, t in mors:
        comp[(m, f"id_{s}")] = m
        comp[(f"id_{t}", m)] = m
    return FinCategory(objs, mors, {"a": "id_a", "b": "id_b", "c": "id_c"}, comp, name="span")


def cospan_category() -> FinCategory:
    """b -> a <- c: the shape whose limits are pullbacks."""
    objs = ("a", "b", "c")
    mors = (("id_a", "a", "a"), ("id_b", "b", "b"), ("id_c", "c", "c"),
            ("f", "b", "a"), ("g", "c", "a"))
    comp = {}
    for m, s, t in mors:
        comp[(m, f"id_{s}")] = m
        comp[(f"id_{t}", m)] = m
    return FinCategory(objs, mors, {"a": "id_a", "b": "id_b", "c": "id_c"}, comp, name="cospan")


def square_category() -> FinCategory:
    cat, _, _ = product(interval_category(), interval_category())
    return FinCategory(cat.objects, cat.morphisms, cat.identities, cat.composition, name="square")


def cone_poset_category() -> FinCategory:
    """The poset (0,0) -> (1,0) -> (2,0) with an extra leg (0,0) -> (0,1)."""
    objs = ("00", "10", "20", "01")
    mors = [(f"id_{o}", o, o) for o in objs]
    mors += [("h0", "00", "10"), ("h1", "10", "20"), ("h10", "00", "20"), ("v", "00", "01")]
    comp = {}
    for m, s, t in mors:
        comp[(m, f"id_{s}")] = m
        comp[(f"id_{t}", m)] = m
    comp[("h1", "h0")] = "h10"
    return FinCategory(tuple(objs), tuple(mors), {o: f"id_{o}" for o in objs}, comp, name="cone")


def idempotent_category() -> FinCategory:
    """One object with a single non-identity idempotent s, s∘s = s."""
    mors = (("id_*", "*", "*"), ("s", "*", "*"))
    comp = {("id_*", "id_*"): "id_*", ("id_*", "s"): "s", ("s", "id_*"): "s", ("s", "s"): "s"}
    return FinCategory(("*",), mors, {"*": "id_*"}, comp, name="idem")


def parallel_pair_category() -> FinCategory:
    """Two objects with a parallel pair 0 ⇉ 1; (co)limits are (co)equalizers."""
    mors = (("id_0", "0", "0"), ("id_1", "1", "1"), ("u", "0", "1"), ("v", "0", "1"))
    comp = {}
    for m, s, t in mors:
        comp[(m, f"id_{s}")] = m
        comp[(f"id_{t}", m)] = m
    return FinCategory(("0", "1"), mors, {"0": "id_0", "1": "id_1"}, comp, name="pair")


BUILTIN_FACTORIES = {
    "e": terminal_category,
    "empty": empty_category,
    "[1]": interval_category,
    "[2]": lambda: chain_category(2),
    "[3]": lambda: chain_category(3),
    "square": square_category,
    "span": span_category,
    "cospan": cospan_category,
    "discrete1": lambda: discrete_category(1),
    "discrete2": lambda: discrete_category(2),
    "discrete3": lambda: discrete_category(3),
    "cone": cone_poset_category,
    "idem": idempotent_category,
    "pair": parallel_pair_category,
}


def builtin(name: str) -> FinCategory:
    try:
        return BUILTIN_FACTORIES[name]()
    except KeyError:
        raise KeyError(f"unknown builtin shape {name!r}; known: {', '.join(sorted(BUILTIN_FACTORIES))}")


DEFAULT_FAMILY = ("e", "[1]", "[2]", "square", "span", "cospan", "discrete2", "discrete3", "idem")


def default_shape_family() -> list[FinCategory]:
    return [builtin(n) for n in DEFAULT_FAMILY]
