"""Configurations of (-2)-curves and ADE Dynkin diagrams.

A configuration is the dual graph of a chain of exceptional curves: one
vertex per curve, one edge per transverse intersection point, and every
curve has self-intersection -2.  Vertex identifiers are integers and are
kept stable when a configuration is cut into pieces, so facts about a
sub-diagram can always be reported against the parent diagram.

Canonical labeling used by :func:`build_ade`::

    A(n): 1 - 2 - ... - n
    D(n): 1 - 2 - ... - (n-2), with leaves n-1 and n on vertex n-2
    E(n): 1 - 2 - ... - (n-1), with vertex n on vertex 3
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Mapping, Sequence

import numpy as np

__all__ = [
    "ADEType",
    "CurveConfiguration",
    "Cycle",
    "InvalidRankError",
    "NotADEError",
    "ConfigurationMismatchError",
    "build_ade",
    "intersection_matrix",
    "pairing",
    "determinant",
    "is_negative_definite",
    "classify_tree",
    "delete_vertex",
    "ade_types",
]


class InvalidRankError(ValueError):
    """An ADE family was requested with a rank it does not have."""


class NotADEError(ValueError):
    """A configuration is not an ADE Dynkin diagram.

    ``feature`` names what went wrong (``"cycle"``, ``"degree 4 at vertex 3"``,
    ``"arms (1, 2, 5)"`` ...), so callers can report it without parsing the
    message.
    """

    def __init__(self, feature: str):
        super().__init__(f"not ADE: {feature}")
        self.feature = feature


class ConfigurationMismatchError(ValueError):
    """Two cycles live on different configurations."""


_MIN_RANK = {"A": 1, "D": 4}
_E_RANKS = (6, 7, 8)
_TYPE_RE = re.compile(r"^\s*([ADEade])\s*\(?\s*(\d+)\s*\)?\s*$")


@dataclass(frozen=True, order=True)
class ADEType:
    family: str
    rank: int

    def __post_init__(self):
        if self.family not in ("A", "D", "E"):
            raise InvalidRankError(f"unknown family {self.family!r}; expected A, D or E")
        if not isinstance(self.rank, (int, np.integer)) or isinstance(self.rank, bool):
            raise InvalidRankError(f"rank must be an integer, got {self.rank!r}")
        if self.family == "E":
            if self.rank not in _E_RANKS:
                raise InvalidRankError(f"E{self.rank}: rank must be 6, 7 or 8")
        elif self.rank < _MIN_RANK[self.family]:
            raise InvalidRankError(
                f"{self.family}{self.rank}: rank must be ≥ {_MIN_RANK[self.family]}"
            )

    @classmethod
    def parse(cls, text: str) -> "ADEType":
        """Parse ``"E8"``, ``"d5"`` or ``"A(3)"``."""
        m = _TYPE_RE.match(text)
        if m is None:
            raise InvalidRankError(f"cannot parse {text!r}; expected A<n>, D<n> or E<n>")
        return cls(m.group(1).upper(), int(m.group(2)))

    def __str__(self) -> str:
        return f"{self.family}{self.rank}"


def ade_types(max_rank: int) -> list[ADEType]:
    """All ADE types of rank ≤ ``max_rank``, in A, D, E order then by rank."""
    out = [ADEType("A", n) for n in range(1, max_rank + 1)]
    out += [ADEType("D", n) for n in range(4, max_rank + 1)]
    out += [ADEType("E", n) for n in _E_RANKS if n <= max_rank]
    return out


@dataclass(frozen=True)
class CurveConfiguration:
    """Weighted dual graph of a configuration of exceptional curves.

    ``edges`` holds sorted pairs in sorted order; ``weights`` is aligned with
    ``vertices`` and holds the self-intersection numbers.
    """

    vertices: tuple[int, ...]
    edges: tuple[tuple[int, int], ...]
    weights: tuple[int, ...]

    def __post_init__(self):
        if len(set(self.vertices)) != len(self.vertices):
            raise ValueError("duplicate vertex identifiers")
        if len(self.weights) != len(self.vertices):
            raise ValueError("weights must align with vertices")
        vs = set(self.vertices)
        for a, b in self.edges:
            if a == b:
                raise ValueError(f"loop at vertex {a}")
            if a not in vs or b not in vs:
                raise ValueError(f"edge ({a}, {b}) has an unknown endpoint")
        if len(set(self.edges)) != len(self.edges):
            raise ValueError("multi-edges are not allowed")

    @classmethod
    def from_edges(
        cls,
        vertices: Iterable[int],
        edges: Iterable[Sequence[int]],
        self_intersection: int | Mapping[int, int] = -2,
    ) -> "CurveConfiguration":
        verts = tuple(sorted(int(v) for v in vertices))
        norm = tuple(sorted({tuple(sorted((int(a), int(b)))) for a, b in edges}))
        raw = [tuple(sorted((int(a), int(b)))) for a, b in edges]
        if len(raw) != len(norm):
            raise ValueError("multi-edges are not allowed")
        if isinstance(self_intersection, Mapping):
            weights = tuple(int(self_intersection[v]) for v in verts)
        else:
            weights = (int(self_intersection),) * len(verts)
        return cls(verts, norm, weights)

    @property
    def self_intersection(self) -> dict[int, int]:
        return dict(zip(self.vertices, self.weights))

    def __len__(self) -> int:
        return len(self.vertices)

    def __contains__(self, v) -> bool:
        return v in self._index

    @cached_property
    def _index(self) -> dict[int, int]:
        return {v: i for i, v in enumerate(self.vertices)}

    def index(self, v: int) -> int:
        try:
            return self._index[v]
        except KeyError:
            raise KeyError(f"vertex {v} is not in the configuration") from None

    @cached_property
    def adjacency(self) -> dict[int, tuple[int, ...]]:
        nbrs: dict[int, list[int]] = {v: [] for v in self.vertices}
        for a, b in self.edges:
            nbrs[a].append(b)
            nbrs[b].append(a)
        return {v: tuple(sorted(ns)) for v, ns in nbrs.items()}

    def neighbors(self, v: int) -> tuple[int, ...]:
        self.index(v)
        return self.adjacency[v]

    def degree(self, v: int) -> int:
        return len(self.neighbors(v))

    def is_connected(self) -> bool:
        if not self.vertices:
            return False
        return len(_component_of(self.adjacency, self.vertices[0])) == len(self.vertices)

    def is_tree(self) -> bool:
        return self.is_connected() and len(self.edges) == len(self.vertices) - 1

    def induced(self, keep: Iterable[int]) -> "CurveConfiguration":
        keep = set(keep)
        verts = tuple(v for v in self.vertices if v in keep)
        edges = tuple(e for e in self.edges if e[0] in keep and e[1] in keep)
        weights = tuple(w for v, w in zip(self.vertices, self.weights) if v in keep)
        return CurveConfiguration(verts, edges, weights)


def _component_of(adjacency: Mapping[int, Sequence[int]], start: int) -> set[int]:
    seen = {start}
    stack = [start]
    while stack:
        v = stack.pop()
        for w in adjacency[v]:
            if w not in seen:
                seen.add(w)
                stack.append(w)
    return seen


@dataclass(frozen=True)
class Cycle:
    """Nonnegative integer combination of the curves of a configuration."""

    config: CurveConfiguration
    coefficients: tuple[int, ...]

    def __post_init__(self):
        if len(self.coefficients) != len(self.config.vertices):
            raise ValueError("a cycle needs one coefficient per vertex")
        coeffs = tuple(int(c) for c in self.coefficients)
        if any(c < 0 for c in coeffs):
            raise ValueError("cycle coefficients must be nonnegative")
        object.__setattr__(self, "coefficients", coeffs)

    @classmethod
    def from_mapping(cls, config: CurveConfiguration, coeffs: Mapping[int, int]) -> "Cycle":
        if set(coeffs) != set(config.vertices):
            raise ValueError("coefficients must be given on exactly the configuration's vertices")
        return cls(config, tuple(coeffs[v] for v in config.vertices))

    @classmethod
    def zero(cls, config: CurveConfiguration) -> "Cycle":
        return cls(config, (0,) * len(config))

    @classmethod
    def unit(cls, config: CurveConfiguration, v: int) -> "Cycle":
        i = config.index(v)
        return cls(config, tuple(int(j == i) for j in range(len(config))))

    def __getitem__(self, v: int) -> int:
        return self.coefficients[self.config.index(v)]

    def __add__(self, other: "Cycle") -> "Cycle":
        _check_same(self, other)
        return Cycle(self.config, tuple(a + b for a, b in zip(self.coefficients, other.coefficients)))

    def scale(self, k: int) -> "Cycle":
        return Cycle(self.config, tuple(k * c for c in self.coefficients))

    def __le__(self, other: "Cycle") -> bool:
        _check_same(self, other)
        return all(a <= b for a, b in zip(self.coefficients, other.coefficients))

    def as_dict(self) -> dict[int, int]:
        return dict(zip(self.config.vertices, self.coefficients))

    def as_array(self) -> np.ndarray:
        return np.array(self.coefficients, dtype=np.int64)

    def is_positive(self) -> bool:
        return all(c >= 1 for c in self.coefficients)

    def is_effective(self) -> bool:
        return all(c >= 0 for c in self.coefficients)

    def max(self) -> int:
        return max(self.coefficients, default=0)


def _check_same(z1: Cycle, z2: Cycle) -> None:
    if z1.config != z2.config:
        raise ConfigurationMismatchError("cycles live on different configurations")


def build_ade(t: ADEType) -> CurveConfiguration:
    """Canonical (-2)-configuration for an ADE type."""
    n = t.rank
    if t.family == "A":
        edges = [(i, i + 1) for i in range(1, n)]
    elif t.family == "D":
        edges = [(i, i + 1) for i in range(1, n - 2)]
        edges += [(n - 2, n - 1), (n - 2, n)]
    else:
        edges = [(i, i + 1) for i in range(1, n - 1)]
        edges.append((3, n))
    return CurveConfiguration.from_edges(range(1, n + 1), edges)


def intersection_matrix(config: CurveConfiguration) -> np.ndarray:
    n = len(config)
    m = np.zeros((n, n), dtype=np.int64)
    for i, w in enumerate(config.weights):
        m[i, i] = w
    for a, b in config.edges:
        i, j = config.index(a), config.index(b)
        m[i, j] = m[j, i] = 1
    return m


def pairing(z1: Cycle, z2: Cycle) -> int:
    """Intersection number of two cycles on the same configuration."""
    _check_same(z1, z2)
    m = intersection_matrix(z1.config)
    return int(z1.as_array() @ m @ z2.as_array())


def determinant(matrix) -> int:
    """Exact determinant of a square integer matrix (fraction-free Bareiss)."""
    a = [[int(x) for x in row] for row in matrix]
    n = len(a)
    if n == 0:
        return 1
    sign, prev = 1, 1
    for k in range(n - 1):
        if a[k][k] == 0:
            swap = next((r for r in range(k + 1, n) if a[r][k] != 0), None)
            if swap is None:
                return 0
            a[k], a[swap] = a[swap], a[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
        prev = a[k][k]
    return sign * a[n - 1][n - 1]


def is_negative_definite(config: CurveConfiguration) -> bool:
    """Sylvester's criterion on -M with exact integer minors."""
    neg = -intersection_matrix(config)
    return all(determinant(neg[:k, :k]) > 0 for k in range(1, len(config) + 1))


def _arm_lengths(config: CurveConfiguration, center: int) -> list[int]:
    adj = config.adjacency
    arms = []
    for start in adj[center]:
        length, prev, cur = 1, center, start
        while True:
            nxt = [w for w in adj[cur] if w != prev]
            if not nxt:
                break
            prev, cur = cur, nxt[0]
            length += 1
        arms.append(length)
    return sorted(arms)


def classify_tree(config: CurveConfiguration) -> ADEType:
    """Recognise which ADE diagram a configuration is.

    Raises :class:`NotADEError` with the offending feature when the graph is
    not a Dynkin diagram of type A, D or E.
    """
    if not config.vertices:
        raise NotADEError("empty configuration")
    if not config.is_connected():
        raise NotADEError("disconnected")
    if len(config.edges) != len(config.vertices) - 1:
        raise NotADEError("cycle")
    bad = [v for v, w in zip(config.vertices, config.weights) if w != -2]
    if bad:
        raise NotADEError(f"self-intersection ≠ -2 at vertex {bad[0]}")
    degrees = {v: len(config.adjacency[v]) for v in config.vertices}
    for v, d in degrees.items():
        if d > 3:
            raise NotADEError(f"degree {d} at vertex {v}")
    branch = [v for v, d in degrees.items() if d == 3]
    if not branch:
        return ADEType("A", len(config))
    if len(branch) > 1:
        raise NotADEError(f"trivalent vertices {branch}")
    arms = _arm_lengths(config, branch[0])
    if arms[0] == 1 and arms[1] == 1:
        return ADEType("D", arms[2] + 3)
    if arms[0] == 1 and arms[1] == 2 and arms[2] in (2, 3, 4):
        return ADEType("E", arms[2] + 4)
    raise NotADEError(f"arms {tuple(arms)}")


def delete_vertex(config: CurveConfiguration, v: int) -> list[CurveConfiguration]:
    """Connected components of the configuration with ``v`` removed."""
    config.index(v)
    rest = [w for w in config.vertices if w != v]
    sub = config.induced(rest)
    comps, seen = [], set()
    for w in sub.vertices:
        if w in seen:
            continue
        comp = _component_of(sub.adjacency, w)
        seen |= comp
        comps.append(sub.induced(comp))
    comps.sort(key=lambda c: c.vertices[0])
    return comps
