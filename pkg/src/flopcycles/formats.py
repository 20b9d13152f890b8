"""JSON and DOT renderings of configurations, cycles, marked diagrams and reports.

Every JSON producer here has a matching schema in this module, and the
configuration and cycle encodings round-trip through ``*_from_json``.
"""

from __future__ import annotations

from typing import Any, Optional

from .dynkin import ADEType, CurveConfiguration, Cycle, classify_tree
from .flop_model import (
    MarkedDiagram,
    attachment_points,
    d_multiplicity,
    end_component_multiplicities,
    partial_resolution,
)

__all__ = [
    "config_to_json",
    "config_from_json",
    "cycle_to_json",
    "cycle_from_json",
    "marked_to_json",
    "report_to_json",
    "facts_to_json",
    "to_dot",
    "describe",
    "CONFIG_SCHEMA",
    "CYCLE_SCHEMA",
    "MARK_SCHEMA",
    "REPORT_SCHEMA",
    "FACTS_SCHEMA",
]


def config_to_json(config: CurveConfiguration, t: Optional[ADEType] = None) -> dict[str, Any]:
    if t is None:
        t = classify_tree(config)
    return {
        "family": t.family,
        "rank": t.rank,
        "vertices": list(config.vertices),
        "edges": [list(e) for e in config.edges],
    }


def config_from_json(data: dict[str, Any]) -> CurveConfiguration:
    vertices = data.get("vertices", range(1, data["rank"] + 1))
    config = CurveConfiguration.from_edges(vertices, data["edges"])
    t = classify_tree(config)
    if (t.family, t.rank) != (data["family"], data["rank"]):
        raise ValueError(f"edges describe {t}, not {data['family']}{data['rank']}")
    return config


def cycle_to_json(z: Cycle) -> dict[str, Any]:
    return {"coefficients": {str(v): c for v, c in z.as_dict().items()}}


def cycle_from_json(data: dict[str, Any], config: CurveConfiguration) -> Cycle:
    return Cycle.from_mapping(config, {int(k): int(c) for k, c in data["coefficients"].items()})


def _pairs(pairs) -> list[list[int]]:
    return [[int(a), int(b)] for a, b in pairs]


def marked_to_json(marked: MarkedDiagram) -> dict[str, Any]:
    pr = partial_resolution(marked)
    section = attachment_points(marked.config)
    comps = []
    for i, comp in enumerate(pr.components):
        ends = None
        if comp.type.family == "A":
            ends = _pairs(end_component_multiplicities(marked, i))
        comps.append({
            "type": str(comp.type),
            "config": config_to_json(comp.config, comp.type),
            "fundamental_cycle": cycle_to_json(comp.fund_cycle),
            "k0_neighbors": list(comp.k0_neighbors),
            "attach_points": _pairs(comp.attach_points),
            "d": d_multiplicity(marked, i),
            "end_multiplicities": ends,
        })
    return {
        "type": str(marked.type),
        "config": config_to_json(marked.config, marked.type),
        "k0": marked.k0,
        "length": marked.length,
        "fundamental_cycle": cycle_to_json(marked.fund_cycle),
        "section": {
            "attach_points": _pairs(section.attach_points),
            "branch_count": section.branch_count,
        },
        "components": comps,
    }


def _candidate_json(marked: MarkedDiagram) -> dict[str, Any]:
    return {
        "type": str(marked.type),
        "k0": marked.k0,
        "components": [str(t) for t in partial_resolution(marked).types],
    }


def facts_to_json(facts) -> list[dict[str, Any]]:
    return [f.to_dict() for f in facts]


def report_to_json(report) -> dict[str, Any]:
    survivor = report.survivor
    return {
        "length": report.length,
        "max_rank": report.max_rank,
        "expected": str(report.expected),
        "passed": report.passed,
        "candidates": [_candidate_json(m) for m in report.candidates],
        "survivor": marked_to_json(survivor) if survivor is not None else None,
        "survivors": [_candidate_json(m) for m in report.survivors],
        "uniqueness_check": report.uniqueness_check,
        "eliminations": [
            {
                "candidate": _candidate_json(e.candidate),
                "rules": [u.to_dict() for u in e.rules],
                "premises": facts_to_json(e.premises),
            }
            for e in report.eliminations
        ],
        "facts": facts_to_json(report.facts),
    }


def to_dot(config: CurveConfiguration, cycle: Optional[Cycle] = None, name: str = "G") -> str:
    lines = [f'graph "{name}" {{']
    for v in config.vertices:
        label = f"{v}:{cycle[v]}" if cycle is not None else str(v)
        lines.append(f'  {v} [label="{label}"];')
    for a, b in config.edges:
        lines.append(f"  {a} -- {b};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def describe(config: CurveConfiguration) -> dict[int, str]:
    """Human-readable position of every vertex: branch vertex, arm position, chain end."""
    adj = config.adjacency
    branch = [v for v in config.vertices if len(adj[v]) == 3]
    if not branch:
        if len(config) == 1:
            return {config.vertices[0]: "single vertex"}
        out = {}
        for i, v in enumerate(config.vertices):
            out[v] = "chain end" if len(adj[v]) <= 1 else f"chain interior ({i + 1} of {len(config)})"
        return out
    center = branch[0]
    out = {center: "branch vertex"}
    arms = []
    for start in adj[center]:
        arm, prev, cur = [start], center, start
        while True:
            nxt = [w for w in adj[cur] if w != prev]
            if not nxt:
                break
            prev, cur = cur, nxt[0]
            arm.append(cur)
        arms.append(arm)
    for arm in arms:
        for pos, v in enumerate(arm, 1):
            where = "end of" if pos == len(arm) else f"position {pos} on"
            out[v] = f"{where} arm of length {len(arm)}"
    return dict(sorted(out.items()))


_INT_PAIRS = {"type": "array", "items": {"type": "array", "items": {"type": "integer"},
                                          "minItems": 2, "maxItems": 2}}

CONFIG_SCHEMA = {
    "type": "object",
    "required": ["family", "rank", "edges"],
    "properties": {
        "family": {"enum": ["A", "D", "E"]},
        "rank": {"type": "integer", "minimum": 1},
        "vertices": {"type": "array", "items": {"type": "integer"}},
        "edges": _INT_PAIRS,
    },
}

CYCLE_SCHEMA = {
    "type": "object",
    "required": ["coefficients"],
    "properties": {
        "coefficients": {
            "type": "object",
            "patternProperties": {"^[0-9]+$": {"type": "integer", "minimum": 0}},
            "additionalProperties": False,
        }
    },
}

MARK_SCHEMA = {
    "type": "object",
    "required": ["type", "config", "k0", "length", "fundamental_cycle", "section", "components"],
    "properties": {
        "type": {"type": "string"},
        "config": CONFIG_SCHEMA,
        "k0": {"type": "integer"},
        "length": {"type": "integer", "minimum": 1, "maximum": 6},
        "fundamental_cycle": CYCLE_SCHEMA,
        "section": {
            "type": "object",
            "required": ["attach_points", "branch_count"],
            "properties": {"attach_points": _INT_PAIRS, "branch_count": {"type": "integer"}},
        },
        "components": {
            "type": "array",
            "items": {
                "type": "object",
                "required": ["type", "config", "fundamental_cycle", "k0_neighbors",
                             "attach_points", "d", "end_multiplicities"],
                "properties": {
                    "type": {"type": "string"},
                    "config": CONFIG_SCHEMA,
                    "fundamental_cycle": CYCLE_SCHEMA,
                    "k0_neighbors": {"type": "array", "items": {"type": "integer"}},
                    "attach_points": _INT_PAIRS,
                    "d": {"type": "integer", "minimum": 0},
                    "end_multiplicities": {"anyOf": [_INT_PAIRS, {"type": "null"}]},
                },
            },
        },
    },
}

FACTS_SCHEMA = {
    "type": "array",
    "items": {
        "type": "object",
        "required": ["fact", "expected", "computed", "passed"],
        "properties": {"fact": {"type": "string"}, "passed": {"type": "boolean"}},
    },
}

_CANDIDATE = {
    "type": "object",
    "required": ["type", "k0", "components"],
    "properties": {
        "type": {"type": "string"},
        "k0": {"type": "integer"},
        "components": {"type": "array", "items": {"type": "string"}},
    },
}

REPORT_SCHEMA = {
    "type": "object",
    "required": ["length", "survivor", "eliminations", "facts"],
    "properties": {
        "length": {"type": "integer", "minimum": 1, "maximum": 6},
        "max_rank": {"type": "integer"},
        "expected": {"type": "string"},
        "passed": {"type": "boolean"},
        "candidates": {"type": "array", "items": _CANDIDATE},
        "survivor": {"anyOf": [MARK_SCHEMA, {"type": "null"}]},
        "survivors": {"type": "array", "items": _CANDIDATE},
        "uniqueness_check": {"type": "boolean"},
        "eliminations": {
            "type": "array",
            "items": {
                "type": "object",
                "required": ["candidate", "rules"],
                "properties": {
                    "candidate": _CANDIDATE,
                    "rules": {
                        "type": "array",
                        "minItems": 1,
                        "items": {
                            "type": "object",
                            "required": ["kind", "quote"],
                            "properties": {
                                "kind": {"enum": ["combinatorial", "analytic-axiom"]},
                                "quote": {"type": "string", "minLength": 1},
                            },
                        },
                    },
                    "premises": FACTS_SCHEMA,
                },
            },
        },
        "facts": FACTS_SCHEMA,
    },
}
