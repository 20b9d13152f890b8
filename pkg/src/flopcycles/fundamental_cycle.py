"""Fundamental cycles of ADE configurations.

Three independent routes to the same cycle:

* :func:`laufer_fundamental_cycle` grows a cycle one curve at a time until
  it is anti-nef, keeping a trace of every step;
* :func:`brute_force_fundamental_cycle` enumerates every bounded positive
  cycle and picks the unique minimal anti-nef one;
* :func:`fundamental_cycle_closed_form` reads the answer off a table.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache
from typing import Sequence

import numpy as np

from .dynkin import (
    ADEType,
    CurveConfiguration,
    Cycle,
    build_ade,
    intersection_matrix,
    is_negative_definite,
)

__all__ = [
    "ComputationTrace",
    "PreconditionError",
    "BoundTooSmallError",
    "FundamentalCycleError",
    "laufer_fundamental_cycle",
    "fundamental_cycle",
    "brute_force_fundamental_cycle",
    "fundamental_cycle_closed_form",
    "is_anti_nef",
    "E_COEFFICIENTS",
]


class PreconditionError(ValueError):
    pass


class BoundTooSmallError(ValueError):
    pass


class FundamentalCycleError(RuntimeError):
    """Internal consistency failure; never expected on valid input."""


# Canonical labeling, vertices 1..n.
E_COEFFICIENTS: dict[int, tuple[int, ...]] = {
    6: (1, 2, 3, 2, 1, 2),
    7: (2, 3, 4, 3, 2, 1, 2),
    8: (2, 4, 6, 5, 4, 3, 2, 3),
}

MAX_ADE_COEFFICIENT = 6


@dataclass(frozen=True)
class ComputationTrace:
    """Laufer run: the start cycle, each (vertex added, pairing that forced it), the result."""

    start: Cycle
    steps: tuple[tuple[int, int], ...]
    result: Cycle

    def replay(self) -> Cycle:
        z = self.start
        for v, _ in self.steps:
            z = z + Cycle.unit(z.config, v)
        return z

    def intermediate_cycles(self) -> list[Cycle]:
        out = [self.start]
        for v, _ in self.steps:
            out.append(out[-1] + Cycle.unit(self.start.config, v))
        return out

    def table(self) -> str:
        lines = ["start: " + " ".join(f"{v}:{c}" for v, c in self.start.as_dict().items())]
        lines.append(f"{'step':>4}  {'vertex':>6}  {'Z.C_v':>5}")
        for i, (v, val) in enumerate(self.steps, 1):
            lines.append(f"{i:>4}  {v:>6}  {val:>5}")
        lines.append("result: " + " ".join(f"{v}:{c}" for v, c in self.result.as_dict().items()))
        return "\n".join(lines)


def is_anti_nef(z: Cycle) -> bool:
    m = intersection_matrix(z.config)
    return bool(np.all(m @ z.as_array() <= 0))


def laufer_fundamental_cycle(
    config: CurveConfiguration,
    order: Sequence[int] | None = None,
    start: str = "unit",
) -> ComputationTrace:
    """Laufer's algorithm.

    Start from the unit cycle at the first vertex of ``order`` (default:
    ascending ids), or from the all-ones cycle when ``start="ones"``.  While
    some curve C_v has Z.C_v > 0, add the first such curve in ``order``.
    """
    if not config.is_connected():
        raise PreconditionError("configuration must be connected")
    if not is_negative_definite(config):
        raise PreconditionError("configuration must be negative definite")
    order = tuple(config.vertices) if order is None else tuple(order)
    if sorted(order) != sorted(config.vertices):
        raise ValueError("order must be a permutation of the vertices")
    m = intersection_matrix(config)
    n = len(config)
    pos = [config.index(v) for v in order]
    if start == "unit":
        z = np.zeros(n, dtype=np.int64)
        z[pos[0]] = 1
    elif start == "ones":
        z = np.ones(n, dtype=np.int64)
    else:
        raise ValueError(f"unknown start {start!r}")
    start_cycle = Cycle(config, tuple(z.tolist()))
    steps = []
    cap = 10 * n * n
    while True:
        products = m @ z
        hit = next((i for i in pos if products[i] > 0), None)
        if hit is None:
            break
        if len(steps) >= cap:
            raise FundamentalCycleError(f"Laufer iteration exceeded {cap} steps")
        steps.append((config.vertices[hit], int(products[hit])))
        z[hit] += 1
    return ComputationTrace(start_cycle, tuple(steps), Cycle(config, tuple(z.tolist())))


@lru_cache(maxsize=None)
def fundamental_cycle(config: CurveConfiguration) -> Cycle:
    return laufer_fundamental_cycle(config).result


def brute_force_fundamental_cycle(config: CurveConfiguration, bound: int = 6) -> Cycle:
    """Exhaustive oracle over all cycles with coefficients in [1, bound]."""
    if bound < 1:
        raise ValueError("bound must be positive")
    n = len(config)
    m = intersection_matrix(config)
    values = np.arange(1, bound + 1, dtype=np.int16)
    anti_nef = []
    if n == 1:
        rest = np.zeros((1, 0), dtype=np.int16)
    else:
        rest = np.array(list(itertools.product(values, repeat=n - 1)), dtype=np.int16)
    # chunk over the first coordinate to keep memory flat
    for first in values:
        cand = np.hstack([np.full((len(rest), 1), first, dtype=np.int16), rest])
        ok = np.all(cand.astype(np.int64) @ m <= 0, axis=1)
        if ok.any():
            anti_nef.append(cand[ok])
    if not anti_nef:
        raise BoundTooSmallError(f"no anti-nef cycle with coefficients ≤ {bound}")
    found = np.vstack(anti_nef)
    low = found.min(axis=0)
    # the componentwise minimum is the unique minimal element iff it is itself anti-nef
    if not np.any(np.all(found == low, axis=1)):
        raise FundamentalCycleError("anti-nef cycles have no unique minimal element")
    return Cycle(config, tuple(int(c) for c in low))


def fundamental_cycle_closed_form(t: ADEType) -> Cycle:
    config = build_ade(t)
    n = t.rank
    if t.family == "A":
        coeffs = (1,) * n
    elif t.family == "D":
        coeffs = (1,) + (2,) * (n - 3) + (1, 1)
    else:
        coeffs = E_COEFFICIENTS[n]
    return Cycle(config, coeffs)
