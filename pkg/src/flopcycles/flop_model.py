"""Marked ADE diagrams of a nonsingular flop.

A marked diagram is an ADE configuration with one distinguished vertex
``k0``, the strict transform of the flopping curve.  Its length is the
fundamental-cycle coefficient at ``k0``.  Deleting ``k0`` leaves the
configurations over the singular points of the partial resolution; the
residual part of a general hyperplane section meets the diagram at the
attachment vertices, where F.C_v < 0.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import permutations

from .dynkin import (
    ADEType,
    CurveConfiguration,
    Cycle,
    ade_types,
    build_ade,
    classify_tree,
    delete_vertex,
    intersection_matrix,
)
from .fundamental_cycle import fundamental_cycle

__all__ = [
    "MarkedDiagram",
    "SectionData",
    "Component",
    "PartialResolution",
    "mark",
    "automorphisms",
    "enumerate_marked",
    "attachment_points",
    "partial_resolution",
    "d_multiplicity",
    "end_component_multiplicities",
]


@dataclass(frozen=True)
class MarkedDiagram:
    config: CurveConfiguration
    type: ADEType
    k0: int
    fund_cycle: Cycle
    length: int

    def __post_init__(self):
        if self.k0 not in self.config:
            raise ValueError(f"k0={self.k0} is not a vertex of {self.type}")
        if self.length != self.fund_cycle[self.k0]:
            raise ValueError("length must equal the fundamental-cycle coefficient at k0")

    def __str__(self) -> str:
        return f"({self.type}, k0={self.k0})"


@dataclass(frozen=True)
class SectionData:
    attach_points: tuple[tuple[int, int], ...]
    branch_count: int

    def count_at(self, v: int) -> int:
        return dict(self.attach_points).get(v, 0)


@dataclass(frozen=True)
class Component:
    config: CurveConfiguration
    type: ADEType
    fund_cycle: Cycle
    k0_neighbors: tuple[int, ...]
    attach_points: tuple[tuple[int, int], ...]


@dataclass(frozen=True)
class PartialResolution:
    components: tuple[Component, ...]
    parent: MarkedDiagram

    @property
    def types(self) -> list[ADEType]:
        return [c.type for c in self.components]

    def split(self) -> tuple[str, ...]:
        """Component types as a sorted tuple of names, e.g. ``('A1', 'A5')``."""
        return tuple(sorted(str(t) for t in self.types))


def mark(t: ADEType, k0: int) -> MarkedDiagram:
    config = build_ade(t)
    if k0 not in config:
        raise ValueError(f"vertex {k0} is not valid for {t}; expected 1..{t.rank}")
    f = fundamental_cycle(config)
    return MarkedDiagram(config, t, k0, f, f[k0])


@lru_cache(maxsize=None)
def automorphisms(t: ADEType) -> tuple[dict[int, int], ...]:
    """Full automorphism group of the canonical diagram, identity first."""
    n = t.rank
    ident = {v: v for v in range(1, n + 1)}
    if t.family == "A" and n > 1:
        return ident, {v: n + 1 - v for v in range(1, n + 1)}
    if t.family == "D" and n == 4:
        # leaves 1, 3, 4 around the center 2
        out = []
        for p in permutations((1, 3, 4)):
            g = dict(zip((1, 3, 4), p))
            g[2] = 2
            out.append(g)
        out.sort(key=lambda g: g != ident)
        return tuple(out)
    if t.family == "D":
        swap = dict(ident)
        swap[n - 1], swap[n] = n, n - 1
        return ident, swap
    if t == ADEType("E", 6):
        return ident, {1: 5, 2: 4, 3: 3, 4: 2, 5: 1, 6: 6}
    return (ident,)


def orbit(t: ADEType, v: int) -> list[int]:
    return sorted({g[v] for g in automorphisms(t)})


def enumerate_marked(length: int, max_rank: int = 12) -> list[MarkedDiagram]:
    """Marked diagrams of a given length, one per automorphism orbit of k0.

    Orbit representatives are the smallest vertex id in the orbit.
    """
    out = []
    for t in ade_types(max_rank) + [ADEType("E", r) for r in (6, 7, 8) if r > max_rank]:
        f = fundamental_cycle(build_ade(t))
        for v in f.config.vertices:
            if f[v] == length and orbit(t, v)[0] == v:
                out.append(mark(t, v))
    return out


def attachment_points(config: CurveConfiguration) -> SectionData:
    """Where the residual divisor meets the diagram.

    These are the vertices with F.C_v < 0; the count at v is -F.C_v, so that
    gluing the residual branches makes F + D' numerically trivial on every
    curve.
    """
    f = fundamental_cycle(config)
    products = intersection_matrix(config) @ f.as_array()
    pts = tuple((v, int(-p)) for v, p in zip(config.vertices, products) if p < 0)
    return SectionData(pts, sum(c for _, c in pts))


@lru_cache(maxsize=None)
def partial_resolution(marked: MarkedDiagram) -> PartialResolution:
    section = attachment_points(marked.config)
    comps = []
    for sub in delete_vertex(marked.config, marked.k0):
        t = classify_tree(sub)
        nbrs = tuple(v for v in marked.config.neighbors(marked.k0) if v in sub)
        attach = tuple((v, c) for v, c in section.attach_points if v in sub)
        comps.append(Component(sub, t, fundamental_cycle(sub), nbrs, attach))
    return PartialResolution(tuple(comps), marked)


def _component(marked: MarkedDiagram, index: int) -> Component:
    comps = partial_resolution(marked).components
    if not 0 <= index < len(comps):
        raise IndexError(f"component index {index} out of range for {len(comps)} components")
    return comps[index]


def d_multiplicity(marked: MarkedDiagram, component_index: int) -> int:
    """Multiplicity of the second section at the singular point over a component.

    ``length * sum(F_i at neighbors of k0) + sum(count * F_i at attach points)``.
    Attachments at k0 itself lie in no component and contribute nothing.
    """
    comp = _component(marked, component_index)
    fi = comp.fund_cycle
    return marked.length * sum(fi[v] for v in comp.k0_neighbors) + sum(
        c * fi[v] for v, c in comp.attach_points
    )


def end_component_multiplicities(marked: MarkedDiagram, component_index: int) -> list[tuple[int, int]]:
    comp = _component(marked, component_index)
    if comp.type.family != "A":
        raise ValueError(f"component {component_index} is {comp.type}, not a chain")
    ends = [v for v in comp.config.vertices if comp.config.degree(v) <= 1]
    return [(v, marked.fund_cycle[v]) for v in ends]
