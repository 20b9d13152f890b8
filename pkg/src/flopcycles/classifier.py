"""Length-by-length case analysis for the singularity of a general section.

For each length the candidates are the marked ADE diagrams of that length.
Each candidate is either eliminated, by a chain of inference rules whose
combinatorial premises are checked here, or survives.  Rules of kind
``"analytic-axiom"`` are geometric statements that cannot be decided from
the diagram; they are recorded with their source wording and flagged in the
report, never derived.

The singularity bound bookkeeping: every point over a component of the
partial resolution gets an upper bound on the Milnor number (= ADE rank) of
the second section there, and every other singular point of the second
section is A_{length-1}.  Since both sections have the same singularities, a
component whose rank beats every available bound is a contradiction.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any, Callable, Optional

from .dynkin import ADEType, Cycle, ade_types, build_ade, classify_tree, delete_vertex, pairing
from .flop_model import (
    MarkedDiagram,
    PartialResolution,
    attachment_points,
    d_multiplicity,
    end_component_multiplicities,
    enumerate_marked,
    mark,
    partial_resolution,
)
from .fundamental_cycle import (
    MAX_ADE_COEFFICIENT,
    brute_force_fundamental_cycle,
    fundamental_cycle,
    fundamental_cycle_closed_form,
    is_anti_nef,
    laufer_fundamental_cycle,
)

__all__ = [
    "InferenceRule",
    "RuleUse",
    "Fact",
    "Elimination",
    "ClassificationReport",
    "THEOREM_TABLE",
    "RULES",
    "classify",
    "verify_uniqueness",
    "verify_proof_facts",
    "verify_oracles",
    "verify_all",
]

COMBINATORIAL = "combinatorial"
ANALYTIC = "analytic-axiom"

THEOREM_TABLE: dict[int, ADEType] = {
    1: ADEType("A", 1),
    2: ADEType("D", 4),
    3: ADEType("E", 6),
    4: ADEType("E", 7),
    5: ADEType("E", 8),
    6: ADEType("E", 8),
}


@dataclass(frozen=True)
class InferenceRule:
    name: str
    kind: str
    statement: str
    quote: str
    applies_to: Callable[[MarkedDiagram, Optional[int]], bool] = field(
        default=lambda marked, index: True, compare=False, repr=False
    )

    def __post_init__(self):
        if self.kind not in (COMBINATORIAL, ANALYTIC):
            raise ValueError(f"unknown rule kind {self.kind!r}")
        if self.kind == ANALYTIC and not self.quote:
            raise ValueError("an analytic axiom needs its source quote")


@dataclass(frozen=True)
class RuleUse:
    rule: InferenceRule
    component: Optional[int] = None
    detail: str = ""

    def to_dict(self) -> dict[str, Any]:
        return {
            "name": self.rule.name,
            "kind": self.rule.kind,
            "statement": self.rule.statement,
            "quote": self.rule.quote,
            "component": self.component,
            "detail": self.detail,
        }


@dataclass(frozen=True)
class Fact:
    name: str
    expected: Any
    computed: Any
    passed: bool

    @classmethod
    def equal(cls, name: str, expected, computed) -> "Fact":
        return cls(name, expected, computed, expected == computed)

    def to_dict(self) -> dict[str, Any]:
        return {"fact": self.name, "expected": self.expected, "computed": self.computed, "passed": self.passed}


@dataclass(frozen=True)
class Elimination:
    candidate: MarkedDiagram
    rules: tuple[RuleUse, ...]
    premises: tuple[Fact, ...] = ()


@dataclass(frozen=True)
class ClassificationReport:
    length: int
    max_rank: int
    candidates: tuple[MarkedDiagram, ...]
    eliminations: tuple[Elimination, ...]
    survivors: tuple[MarkedDiagram, ...]
    facts: tuple[Fact, ...]

    @property
    def survivor(self) -> Optional[MarkedDiagram]:
        return self.survivors[0] if len(self.survivors) == 1 else None

    @property
    def uniqueness_check(self) -> bool:
        return self.survivor is not None and verify_uniqueness(self)

    @property
    def expected(self) -> ADEType:
        return THEOREM_TABLE[self.length]

    @property
    def passed(self) -> bool:
        return (
            self.survivor is not None
            and self.survivor.type == self.expected
            and self.uniqueness_check
            and all(f.passed for f in self.facts)
        )

    def analytic_uses(self) -> list[RuleUse]:
        return [u for e in self.eliminations for u in e.rules if u.rule.kind == ANALYTIC]


def _is_length(*lengths):
    return lambda marked, index: marked.length in lengths


def _is_case(diagram: str, length: int, split: tuple[str, ...]):
    def pred(marked, index):
        return (
            str(marked.type) == diagram
            and marked.length == length
            and partial_resolution(marked).split() == split
        )

    return pred


def _d_at_most_3(marked, index):
    return marked.length <= 2 and index is not None and d_multiplicity(marked, index) <= 3


OFF_POINT = InferenceRule(
    "off-point-singularities",
    COMBINATORIAL,
    "away from the points over the components, the second section has only A_{l-1} singularities",
    "we conclude that $L'$ has only singularities of type $A_{\\ell - 1}$ outside the $P_i$",
)
SAME_SINGULARITIES = InferenceRule(
    "same-singularities",
    COMBINATORIAL,
    "both sections have the same singularities; a component of rank above every available "
    "bound cannot be matched",
    "$H$ and $H'$ have the same type of singularities, and so do $L$ and $L'$",
)
D_AT_MOST_3 = InferenceRule(
    "d-at-most-3-nonsingular",
    ANALYTIC,
    "for length ≤ 2, d_i ≤ 3 implies the second section is nonsingular over component i",
    "we can check that $d_i \\le 3$, hence $L'$ is nonsingular at the $P_i$",
    _d_at_most_3,
)
D_EQUALS_3 = InferenceRule(
    "d-equals-3-nonsingular",
    ANALYTIC,
    "d_i = 3 at the quoted point implies the second section is nonsingular there",
    "while being nonsingular at $P_2$, since $d_2 = 3$",
    lambda marked, index: index is not None and d_multiplicity(marked, index) == 3,
)
SIMPLER = InferenceRule(
    "simpler-singularities",
    COMBINATORIAL,
    "the bounds leave the second section with strictly simpler singularities than the first",
    "Therefore, $L'$ has simpler singularities than $L$, a contradiction.",
)
E7_A1A5_BOUND = InferenceRule(
    "e7-l3-a1-bound",
    ANALYTIC,
    "over the A1 component the second section is at worst A1",
    "$L'$ has at most $A_1$ singularity at $P_1$ because of the symmetry of $L$ and $L'$",
    _is_case("E7", 3, ("A1", "A5")),
)
E7_A2A4_A2_BOUND = InferenceRule(
    "e7-l3-a2-bound",
    ANALYTIC,
    "over the A2 component the second section is at worst A2",
    "In the latter case, it has at most $A_2$ at $P_2$.",
    _is_case("E7", 3, ("A2", "A4")),
)
E7_A2A4_CONIC = InferenceRule(
    "e7-l3-conic",
    ANALYTIC,
    "blowing up the A4 point, the second section meets the exceptional plane in a smooth "
    "conic, so it is A1 over the A4 component",
    "Then $B'$ must be a nonsingular conic, and $L'$ has $A_1$ singularity at $P_1$.",
    _is_case("E7", 3, ("A2", "A4")),
)
E8_A1E6_BOUND = InferenceRule(
    "e8-l3-a1-bound",
    ANALYTIC,
    "over the A1 component the second section is at worst A1",
    "In the former case, $L'$ has at most $A_1$ singularity at $P_1$",
    _is_case("E8", 3, ("A1", "E6")),
)
E8_A7_CONIC = InferenceRule(
    "e8-l3-conic",
    ANALYTIC,
    "the conic argument of the E7 case shows the second section is A1 over the A7 component",
    "In the latter case, it has $A_1$ at $P_1$ as in the case of $E_7$.",
    _is_case("E8", 3, ("A7",)),
)
E8_D5A2_A2_BOUND = InferenceRule(
    "e8-l4-a2-bound",
    ANALYTIC,
    "over the A2 component the second section is at worst A2",
    "In the former case, $L'$ has at most $A_2$ singularity at $P_2$.",
    _is_case("E8", 4, ("A2", "D5")),
)
E8_D5A2_D5 = InferenceRule(
    "e8-l4-d5-by-symmetry",
    ANALYTIC,
    "by symmetry the second section has a D5 point over the D5 component",
    "By the symmetry of $L$ and $L'$, $L'$ has $D_5$ at $P_1$.",
    _is_case("E8", 4, ("A2", "D5")),
)
E8_D5A2_SMOOTH = InferenceRule(
    "e8-l4-second-blowup-smooth",
    ANALYTIC,
    "after two blow-ups the strict transform of the second section is smooth at the A3 point",
    "and $L^{(1)\\prime}$ is nonsingular at $P_1^{(1)}$.",
    _is_case("E8", 4, ("A2", "D5")),
)
E8_D5A2_CONTRADICTION = InferenceRule(
    "e8-l4-d5-contradiction",
    ANALYTIC,
    "a D5 point whose first blow-up is smooth at the A3 point contradicts symmetry",
    "But this contradicts the symmetry of $L$ and $L'$.",
    _is_case("E8", 4, ("A2", "D5")),
)
E8_A1A6_A1_BOUND = InferenceRule(
    "e8-l4-a1-bound",
    ANALYTIC,
    "over the A1 component the second section is at worst A1",
    "In the latter case, $L'$ has at most $A_1$ singularity at $P_2$.",
    _is_case("E8", 4, ("A1", "A6")),
)
E8_A1A6_LINES = InferenceRule(
    "e8-l4-line-containment",
    ANALYTIC,
    "the line of multiplicity 3 lies on the second section's exceptional conic, the one of "
    "multiplicity 2 does not",
    "$B_1$ is contained in $B' = L^{(1)\\prime} \\cap E$, while $B_2$ is not.",
    _is_case("E8", 4, ("A1", "A6")),
)
E8_A1A6_CONTRADICTION = InferenceRule(
    "e8-l4-a6-contradiction",
    ANALYTIC,
    "the flopping curve passes through the intersection of the two lines, contradicting symmetry",
    "The strict transform of $C_{k_0}$ passes through the point $B_1 \\cap B_2$, a "
    "contradiction to the symmetry.",
    _is_case("E8", 4, ("A1", "A6")),
)
LENGTH_AT_LEAST_5 = InferenceRule(
    "length-at-least-5",
    COMBINATORIAL,
    "for length 5 or 6 there is a single candidate",
    "Finally, if $\\ell \\ge 5$, the assertion of the theorem is clear.",
    _is_length(5, 6),
)
UNIQUENESS = InferenceRule(
    "unique-top-coefficient",
    COMBINATORIAL,
    "the survivor has exactly one vertex whose fundamental-cycle coefficient equals the length",
    "there is only one irreducible component of $g^{-1}(Q)$ whose multiplicity in $F$ coincides "
    "with $\\ell$",
)

RULES: tuple[InferenceRule, ...] = (
    OFF_POINT, SAME_SINGULARITIES, D_AT_MOST_3, D_EQUALS_3, SIMPLER,
    E7_A1A5_BOUND, E7_A2A4_A2_BOUND, E7_A2A4_CONIC, E8_A1E6_BOUND, E8_A7_CONIC,
    E8_D5A2_A2_BOUND, E8_D5A2_D5, E8_D5A2_SMOOTH, E8_D5A2_CONTRADICTION,
    E8_A1A6_A1_BOUND, E8_A1A6_LINES, E8_A1A6_CONTRADICTION, LENGTH_AT_LEAST_5, UNIQUENESS,
)


def _index_of(pr: PartialResolution, name: str) -> int:
    return next(i for i, c in enumerate(pr.components) if str(c.type) == name)


def _rank_contradiction(pr: PartialResolution, length: int, bounds: dict[int, int]):
    """Component whose rank beats every bound, if any.

    ``bounds`` maps component index to the largest rank the second section
    can have at that point (0 = smooth).  Components without a bound are
    treated as unconstrained, so they never produce a contradiction.
    """
    if not pr.components or len(bounds) < len(pr.components):
        return None
    ceiling = max([length - 1, *bounds.values()])
    worst = max(range(len(pr.components)), key=lambda i: (pr.components[i].type.rank, -i))
    if pr.components[worst].type.rank > ceiling:
        return worst, ceiling
    return None


def _eliminate_low_length(marked: MarkedDiagram) -> Optional[Elimination]:
    """Length 1 or 2: d_i ≤ 3 everywhere, so only A_{l-1} points are available."""
    pr = partial_resolution(marked)
    uses = [RuleUse(OFF_POINT, None, f"off-point singularities are A{marked.length - 1}")]
    bounds = {}
    for i in range(len(pr.components)):
        if not D_AT_MOST_3.applies_to(marked, i):
            return None
        uses.append(RuleUse(D_AT_MOST_3, i, f"d_{i} = {d_multiplicity(marked, i)}"))
        bounds[i] = 0
    hit = _rank_contradiction(pr, marked.length, bounds)
    if hit is None:
        return None
    i, ceiling = hit
    uses.append(RuleUse(
        SAME_SINGULARITIES, i,
        f"component {i} is {pr.components[i].type}, rank {pr.components[i].type.rank} > {ceiling}",
    ))
    return Elimination(marked, tuple(uses))


def _blowup_premises(marked: MarkedDiagram, comp_index: int) -> list[Fact]:
    """Premises of the double blow-up argument over the D5 point."""
    pr = partial_resolution(marked)
    comp = pr.components[comp_index]
    first = attachment_points(comp.config).attach_points
    facts = [Fact.equal("D5 point: one exceptional line after the first blow-up", 1, len(first))]
    if len(first) != 1:
        return facts
    b = first[0][0]
    facts.append(Fact.equal("D5 point: that line has multiplicity 2 in F_1", 2, comp.fund_cycle[b]))
    facts.append(Fact.equal("D5 point: that line has multiplicity 4 in F", 4, marked.fund_cycle[b]))
    rest = delete_vertex(comp.config, b)
    rest_types = sorted(str(classify_tree(c)) for c in rest)
    facts.append(Fact.equal("D5 point: first blow-up leaves A3 and A1 points", ["A1", "A3"], rest_types))
    a3 = [c for c in rest if str(classify_tree(c)) == "A3"]
    if a3:
        second = attachment_points(a3[0]).attach_points
        facts.append(Fact.equal("A3 point: two exceptional lines after the second blow-up", 2, len(second)))
        mults = sorted(marked.fund_cycle[v] for v, _ in second)
        facts.append(Fact("A3 point: one of those lines has multiplicity 3 in F", 3, mults, 3 in mults))
    return facts


def _ends(marked: MarkedDiagram, name: str) -> list[int]:
    pr = partial_resolution(marked)
    return sorted(c for _, c in end_component_multiplicities(marked, _index_of(pr, name)))


def _attach_in(marked: MarkedDiagram, name: str) -> bool:
    comp = partial_resolution(marked).components[_index_of(partial_resolution(marked), name)]
    return bool(comp.attach_points)


def _eliminate_case(marked: MarkedDiagram) -> Optional[Elimination]:
    """Lengths 3 and 4: the six quoted E7/E8 cases."""
    pr = partial_resolution(marked)
    key = (str(marked.type), marked.length, pr.split())
    off = RuleUse(OFF_POINT, None, f"off-point singularities are A{marked.length - 1}")
    premises: list[Fact] = []
    bounds: dict[int, int] = {}

    if key == ("E7", 3, ("A1", "A5")):
        i1, i5 = _index_of(pr, "A1"), _index_of(pr, "A5")
        premises += [
            Fact.equal("E7 A1+A5: D' meets the A1 component", True, _attach_in(marked, "A1")),
            Fact.equal("E7 A1+A5: d over A5", 3, d_multiplicity(marked, i5)),
        ]
        uses = [off, RuleUse(E7_A1A5_BOUND, i1), RuleUse(D_EQUALS_3, i5, "d = 3")]
        bounds = {i1: 1, i5: 0}
        final = SIMPLER
    elif key == ("E7", 3, ("A2", "A4")):
        i4, i2 = _index_of(pr, "A4"), _index_of(pr, "A2")
        premises += [
            Fact.equal("E7 A4+A2: D' meets the A4 component", True, _attach_in(marked, "A4")),
            Fact.equal("E7 A4+A2: A4 end multiplicities in F", [2, 2], _ends(marked, "A4")),
        ]
        uses = [off, RuleUse(E7_A2A4_A2_BOUND, i2), RuleUse(E7_A2A4_CONIC, i4)]
        bounds = {i4: 1, i2: 2}
        final = SIMPLER
    elif key == ("E8", 3, ("A1", "E6")):
        i1, i6 = _index_of(pr, "A1"), _index_of(pr, "E6")
        premises += [
            Fact.equal("E8 A1+E6: D' meets the A1 component", True, _attach_in(marked, "A1")),
            Fact.equal("E8 A1+E6: d over E6", 3, d_multiplicity(marked, i6)),
        ]
        uses = [off, RuleUse(E8_A1E6_BOUND, i1), RuleUse(D_EQUALS_3, i6, "d = 3")]
        bounds = {i1: 1, i6: 0}
        final = SIMPLER
    elif key == ("E8", 3, ("A7",)):
        i7 = _index_of(pr, "A7")
        premises += [
            Fact.equal("E8 A7: D' meets the A7 component", True, _attach_in(marked, "A7")),
            Fact.equal("E8 A7: A7 end multiplicities in F", [2, 2], _ends(marked, "A7")),
        ]
        uses = [off, RuleUse(E8_A7_CONIC, i7)]
        bounds = {i7: 1}
        final = SIMPLER
    elif key == ("E8", 4, ("A2", "D5")):
        i5, i2 = _index_of(pr, "D5"), _index_of(pr, "A2")
        premises += _blowup_premises(marked, i5)
        uses = [off, RuleUse(E8_D5A2_A2_BOUND, i2), RuleUse(E8_D5A2_D5, i5),
                RuleUse(E8_D5A2_SMOOTH, i5), RuleUse(E8_D5A2_CONTRADICTION, i5)]
        final = None
    elif key == ("E8", 4, ("A1", "A6")):
        i1, i6 = _index_of(pr, "A1"), _index_of(pr, "A6")
        premises += [
            Fact.equal("E8 A6+A1: D' meets the A6 component", True, _attach_in(marked, "A6")),
            Fact.equal("E8 A6+A1: A6 end multiplicities in F", [2, 3], _ends(marked, "A6")),
        ]
        uses = [off, RuleUse(E8_A1A6_A1_BOUND, i1), RuleUse(E8_A1A6_LINES, i6),
                RuleUse(E8_A1A6_CONTRADICTION, i6)]
        final = None
    else:
        return None

    if not all(f.passed for f in premises):
        return None
    for u in uses:
        if not u.rule.applies_to(marked, u.component):
            return None
    if final is not None:
        hit = _rank_contradiction(pr, marked.length, bounds)
        if hit is None:
            return None
        i, ceiling = hit
        uses.append(RuleUse(
            final, i,
            f"component {i} is {pr.components[i].type}, rank {pr.components[i].type.rank} > {ceiling}",
        ))
    return Elimination(marked, tuple(uses), tuple(premises))


def classify(length: int, max_rank: int = 12) -> ClassificationReport:
    """Run the case analysis for one length and report the surviving diagram."""
    if not 1 <= length <= MAX_ADE_COEFFICIENT:
        raise ValueError(f"length must be between 1 and {MAX_ADE_COEFFICIENT}, got {length}")
    if max_rank < 8:
        raise ValueError("max_rank must be at least 8")
    candidates = enumerate_marked(length, max_rank)
    eliminations, survivors = [], []
    for marked in candidates:
        if length <= 2:
            elim = _eliminate_low_length(marked)
        elif length <= 4:
            elim = _eliminate_case(marked)
        else:
            elim = None
        if elim is None:
            survivors.append(marked)
        else:
            eliminations.append(elim)

    facts = [Fact("candidates enumerated", ">= 1", len(candidates), len(candidates) >= 1)]
    if length >= 5:
        facts.append(Fact.equal(f"{LENGTH_AT_LEAST_5.name}: single candidate", 1, len(candidates)))
    for e in eliminations:
        facts.extend(e.premises)
    facts.append(Fact.equal("survivor", [str(THEOREM_TABLE[length])], [str(m.type) for m in survivors]))
    report = ClassificationReport(length, max_rank, tuple(candidates), tuple(eliminations),
                                  tuple(survivors), tuple(facts))
    if report.survivor is not None:
        report = ClassificationReport(
            length, max_rank, report.candidates, report.eliminations, report.survivors,
            report.facts + (Fact.equal(UNIQUENESS.name, True, verify_uniqueness(report)),),
        )
    return report


def verify_uniqueness(report: ClassificationReport) -> bool:
    s = report.survivors[0] if report.survivors else None
    if s is None:
        return False
    return sum(1 for c in s.fund_cycle.coefficients if c == report.length) == 1


def _case_marking(diagram: str, length: int, split: tuple[str, ...], max_rank: int):
    for m in enumerate_marked(length, max_rank):
        if str(m.type) == diagram and partial_resolution(m).split() == split:
            return m
    return None


def verify_proof_facts(max_rank: int = 12) -> list[Fact]:
    """Evaluate every combinatorial fact the case analysis leans on."""
    facts: list[Fact] = []

    worst = 0
    count = 0
    for t in ade_types(max_rank):
        f = fundamental_cycle(build_ade(t))
        for v in f.config.vertices:
            if f[v] > 2:
                continue
            m = mark(t, v)
            for i in range(len(partial_resolution(m).components)):
                worst = max(worst, d_multiplicity(m, i))
                count += 1
    facts.append(Fact(f"length <= 2 => every d_i <= 3 (all markings, rank <= {max_rank}, "
                      f"{count} components)", "<= 3", worst, worst <= 3))

    def splits(diagram, length):
        return sorted(
            list(partial_resolution(m).split())
            for m in enumerate_marked(length, max_rank)
            if str(m.type) == diagram
        )

    facts.append(Fact.equal("E7 length-3 splits are {A1,A5} and {A4,A2}",
                            [["A1", "A5"], ["A2", "A4"]], splits("E7", 3)))
    facts.append(Fact.equal("E8 length-3 splits are {A1,E6} and {A7}",
                            [["A1", "E6"], ["A7"]], splits("E8", 3)))
    facts.append(Fact.equal("E8 length-4 splits are {D5,A2} and {A6,A1}",
                            [["A1", "A6"], ["A2", "D5"]], splits("E8", 4)))

    def d_over(diagram, length, split, name):
        m = _case_marking(diagram, length, split, max_rank)
        if m is None:
            return None
        return d_multiplicity(m, _index_of(partial_resolution(m), name))

    facts.append(Fact.equal("E7 {A1,A5}: d_2 = 3 over A5", 3, d_over("E7", 3, ("A1", "A5"), "A5")))
    facts.append(Fact.equal("E8 {A1,E6}: d_2 = 3 over E6", 3, d_over("E8", 3, ("A1", "E6"), "E6")))

    def ends(diagram, length, split, name):
        m = _case_marking(diagram, length, split, max_rank)
        return None if m is None else _ends(m, name)

    facts.append(Fact.equal("E7 {A4,A2}: A4 end multiplicities in F are {2,2}",
                            [2, 2], ends("E7", 3, ("A2", "A4"), "A4")))
    facts.append(Fact.equal("E8 {A7}: A7 end multiplicities in F are {2,2}",
                            [2, 2], ends("E8", 3, ("A7",), "A7")))
    facts.append(Fact.equal("E8 {A6,A1}: A6 end multiplicities in F are {3,2}",
                            [2, 3], ends("E8", 4, ("A1", "A6"), "A6")))
    m = _case_marking("E8", 4, ("A2", "D5"), max_rank)
    if m is None:
        facts.append(Fact.equal("E8 {D5,A2}: marking exists", True, False))
    else:
        facts.extend(_blowup_premises(m, _index_of(partial_resolution(m), "D5")))

    bad_de, bad_a, bad_glue, bad_self, bad_antinef = [], [], [], [], []
    for t in ade_types(max_rank):
        config = build_ade(t)
        f = fundamental_cycle(config)
        sec = attachment_points(config)
        if t.family == "A":
            ends_ = [v for v in config.vertices if config.degree(v) <= 1]
            ok = (sec.branch_count == 2 and [v for v, _ in sec.attach_points] == ends_
                  and all(f[v] == 1 for v in ends_))
            if not ok:
                bad_a.append(str(t))
        else:
            ok = (sec.branch_count == 1 and len(sec.attach_points) == 1
                  and f[sec.attach_points[0][0]] == 2)
            if not ok:
                bad_de.append(str(t))
        for v in config.vertices:
            if pairing(f, Cycle.unit(config, v)) + sec.count_at(v) != 0:
                bad_glue.append(f"{t}@{v}")
        if pairing(f, f) != -2:
            bad_self.append(str(t))
        if not is_anti_nef(f):
            bad_antinef.append(str(t))
    facts.append(Fact.equal(f"D/E attach vertex has coefficient 2 (rank <= {max_rank})", [], bad_de))
    facts.append(Fact.equal(f"A attach points are the two coefficient-1 ends (rank <= {max_rank})", [], bad_a))
    facts.append(Fact.equal(f"gluing identity F.C_v + D'.C_v = 0 (rank <= {max_rank})", [], bad_glue))
    facts.append(Fact.equal(f"F.F = -2 (rank <= {max_rank})", [], bad_self))
    facts.append(Fact.equal(f"F is anti-nef (rank <= {max_rank})", [], bad_antinef))

    misused = []
    for length in (1, 2, 5, 6):
        rep = classify(length, max(max_rank, 8))
        misused += [f"l={length}:{u.rule.name}" for u in rep.analytic_uses() if u.rule is not D_AT_MOST_3]
    facts.append(Fact.equal("no analytic axiom beyond d_i <= 3 used for lengths 1, 2, 5, 6", [], misused))
    return facts


def verify_oracles(max_rank: int = 20, brute_force_rank: int = 8) -> list[Fact]:
    """Laufer against the exhaustive oracle and the closed-form table."""
    facts = []
    for t in ade_types(max(max_rank, brute_force_rank)):
        config = build_ade(t)
        laufer = laufer_fundamental_cycle(config).result
        if t.rank <= brute_force_rank:
            brute = brute_force_fundamental_cycle(config, MAX_ADE_COEFFICIENT)
            facts.append(Fact.equal(f"Laufer = brute force for {t}", list(brute.coefficients),
                                    list(laufer.coefficients)))
        closed = fundamental_cycle_closed_form(t)
        facts.append(Fact.equal(f"Laufer = closed form for {t}", list(closed.coefficients),
                                list(laufer.coefficients)))
        facts.append(Fact(f"max coefficient <= {MAX_ADE_COEFFICIENT} for {t}",
                          f"<= {MAX_ADE_COEFFICIENT}", laufer.max(), laufer.max() <= MAX_ADE_COEFFICIENT))
    return facts


def verify_all(max_rank: int = 12, oracles: bool = True) -> list[Fact]:
    facts = verify_proof_facts(max_rank)
    for length in range(1, 7):
        rep = classify(length, max_rank)
        got = str(rep.survivor.type) if rep.survivor is not None else [str(m) for m in rep.survivors]
        facts.append(Fact.equal(f"length {length} survivor", str(THEOREM_TABLE[length]), got))
        facts.append(Fact.equal(f"length {length} uniqueness of top coefficient", True, rep.uniqueness_check))
        unaccounted = len(rep.candidates) - len(rep.eliminations) - len(rep.survivors)
        facts.append(Fact.equal(f"length {length} every candidate accounted for", 0, unaccounted))
    if oracles:
        facts += verify_oracles(max(max_rank, 20))
    return facts
