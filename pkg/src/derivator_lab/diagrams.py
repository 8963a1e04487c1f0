"""Diagrams (functors from a finite shape into a computation target) and
their natural transformations.  Functor laws and naturality squares are
checked exhaustively at construction time."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any

from .fincat import FinCategory


@dataclass(frozen=True, eq=True)
class Diagram:
    shape: FinCategory
    base: Any = field(compare=False)
    ob: dict[str, Any] = field(default_factory=dict)
    mor: dict[str, Any] = field(default_factory=dict)
    base_name: str = field(default="", compare=True)

    def __post_init__(self):
        if not self.base_name:
            object.__setattr__(self, "base_name", getattr(self.base, "name", ""))
        b = self.base
        for x in self.shape.objects:
            if x not in self.ob:
                raise ValueError(f"diagram misses object {x}")
        for m, s, t in self.shape.morphisms:
            f = self.mor.get(m)
            if f is None:
                raise ValueError(f"diagram misses morphism {m}")
            if b.source(f) != self.ob[s] or b.target(f) != self.ob[t]:
                raise ValueError(f"diagram breaks source/target at {m}")
        for x in self.shape.objects:
            if self.mor[self.shape.identity(x)] != b.identity(self.ob[x]):
                raise ValueError(f"diagram breaks identity at {x}")
        for (g, f), h in self.shape.composition.items():
            if self.mor[h] != b.compose(self.mor[g], self.mor[f]):
                raise ValueError(f"diagram breaks composition at ({g},{f})")

    def __repr__(self):
        return f"Diagram({self.shape.name or '?'} -> {self.base_name})"


@dataclass(frozen=True, eq=True)
class DiagramMap:
    source: Diagram
    target: Diagram
    components: dict[str, Any]

    def __post_init__(self):
        if self.source.shape != self.target.shape:
            raise ValueError("diagram map between different shapes")
        if self.source.base_name != self.target.base_name:
            raise ValueError("diagram map between different bases")
        b = self.source.base
        shape = self.source.shape
        for x in shape.objects:
            c = self.components.get(x)
            if c is None:
                raise ValueError(f"diagram map misses component at {x}")
            if b.source(c) != self.source.ob[x] or b.target(c) != self.target.ob[x]:
                raise ValueError(f"component at {x} has wrong source/target")
        for m, s, t in shape.morphisms:
            left = b.compose(self.components[t], self.source.mor[m])
            right = b.compose(self.target.mor[m], self.components[s])
            if left != right:
                raise ValueError(f"naturality fails at {m}: {left} != {right}")

    @property
    def base(self):
        return self.source.base


def identity_map(x: Diagram) -> DiagramMap:
    return DiagramMap(x, x, {j: x.base.identity(x.ob[j]) for j in x.shape.objects})


def compose_maps(g: DiagramMap, f: DiagramMap) -> DiagramMap:
    if f.target != g.source:
        raise ValueError("diagram maps not composable")
    b = f.base
    return DiagramMap(f.source, g.target,
                      {j: b.compose(g.components[j], f.components[j])
                       for j in f.source.shape.objects})


def is_iso_map(f: DiagramMap) -> bool:
    return all(f.base.is_iso(c) for c in f.components.values())


def invert_map(f: DiagramMap) -> DiagramMap:
    b = f.base
    return DiagramMap(f.target, f.source,
                      {j: b.invert(c) for j, c in f.components.items()})


def constant_diagram(shape: FinCategory, base, obj) -> Diagram:
    return Diagram(shape, base, {x: obj for x in shape.objects},
                   {m: base.identity(obj) for m in shape.morphism_ids()})


def enumerate_diagram_maps(x: Diagram, y: Diagram) -> list[DiagramMap]:
    """All natural transformations x -> y, by backtracking in object order."""
    if x.shape != y.shape:
        raise ValueError("shapes differ")
    b = x.base
    shape = x.shape
    objs = shape.objects
    candidates = [b.hom(x.ob[j], y.ob[j]) for j in objs]
    by_obj = {j: i for i, j in enumerate(objs)}
    constraints: list[list[tuple[str, str, str]]] = [[] for _ in objs]
    for m, s, t in shape.morphisms:
        constraints[max(by_obj[s], by_obj[t])].append((m, s, t))
    out: list[DiagramMap] = []

    def search(i: int, chosen: dict[str, Any]):
        if i == len(objs):
            out.append(DiagramMap(x, y, dict(chosen)))
            return
        for c in candidates[i]:
            chosen[objs[i]] = c
            if all(b.compose(chosen[t], x.mor[m]) == b.compose(y.mor[m], chosen[s])
                   for m, s, t in constraints[i]):
                search(i + 1, chosen)
            del chosen[objs[i]]

    search(0, {})
    return out
