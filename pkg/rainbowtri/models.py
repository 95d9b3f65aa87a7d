"""
Shared Models
Pydantic models exchanged between the graph modules, the checkers, the
harness and the CLI. Graph types themselves live in colored_graph.py and
oriented_graph.py.
"""

from collections import Counter
from typing import Dict, FrozenSet, List, Optional, Tuple

from pydantic import BaseModel, ConfigDict, Field, field_validator, model_validator

from rainbowtri.protocol import (
    EXHAUSTIVE_KINDS,
    REPORTABLE_CONCLUSIONS,
    Conclusion,
    EnumerationKind,
    GeneratorFamily,
    TheoremId,
)

Triple = Tuple[int, int, int]


class TriangleSet(BaseModel):
    """Unordered vertex triples, each stored as an increasing tuple."""
    model_config = ConfigDict(frozen=True)

    triples: FrozenSet[Triple] = frozenset()

    @field_validator("triples", mode="before")
    @classmethod
    def _sort_triples(cls, value):
        normalized = set()
        for triple in value:
            a, b, c = sorted(triple)
            if a == b or b == c:
                raise ValueError(f"triangle {tuple(triple)} repeats a vertex")
            normalized.add((a, b, c))
        return frozenset(normalized)

    def __len__(self) -> int:
        return len(self.triples)

    def __contains__(self, triple) -> bool:
        return tuple(sorted(triple)) in self.triples

    def sorted_triples(self) -> List[Triple]:
        return sorted(self.triples)

    def witness(self) -> Optional[Triple]:
        """Lexicographically smallest triple, or None when empty."""
        return min(self.triples) if self.triples else None


class ColorStats(BaseModel):
    model_config = ConfigDict(frozen=True)

    color_number: int = Field(..., ge=0)
    color_degrees: Tuple[int, ...]
    saturated_degrees: Tuple[int, ...]

    @model_validator(mode="after")
    def _check_bounds(self):
        if len(self.color_degrees) != len(self.saturated_degrees):
            raise ValueError("color and saturated degree sequences differ in length")
        if sum(self.saturated_degrees) > 2 * self.color_number:
            raise ValueError("saturated degrees exceed twice the color number")
        for dc, ds in zip(self.color_degrees, self.saturated_degrees):
            if dc > self.color_number or ds > dc:
                raise ValueError("degree sequence inconsistent with color number")
        return self


class DegreeProfile(BaseModel):
    model_config = ConfigDict(frozen=True)

    in_degrees: Tuple[int, ...]
    out_degrees: Tuple[int, ...]
    out_component_numbers: Tuple[int, ...]

    @model_validator(mode="after")
    def _check_bounds(self):
        if not (len(self.in_degrees) == len(self.out_degrees) == len(self.out_component_numbers)):
            raise ValueError("degree sequences differ in length")
        if sum(self.in_degrees) != sum(self.out_degrees):
            raise ValueError("in-degree and out-degree sums differ")
        for out_deg, omega in zip(self.out_degrees, self.out_component_numbers):
            if not 0 <= omega <= out_deg or (omega == 0) != (out_deg == 0):
                raise ValueError("out-component number out of range")
        return self

    @property
    def arc_count(self) -> int:
        return sum(self.out_degrees)

    def in_plus_components(self) -> Tuple[int, ...]:
        """d⁻(v) + ω⁺(v) per vertex."""
        return tuple(i + w for i, w in zip(self.in_degrees, self.out_component_numbers))


class Witness(BaseModel):
    """Certificate attached to a verdict. Only the relevant fields are set."""
    model_config = ConfigDict(frozen=True)

    triangle: Optional[Triple] = None
    bipartition: Optional[Tuple[Tuple[int, ...], Tuple[int, ...]]] = None
    instance: Optional[str] = None
    detail: Optional[str] = None


class TheoremVerdict(BaseModel):
    model_config = ConfigDict(frozen=True)

    theorem_id: TheoremId
    condition_met: bool
    conclusion: Conclusion
    witness: Optional[Witness] = None

    @model_validator(mode="after")
    def _check_consistency(self):
        if not self.condition_met and self.conclusion != Conclusion.NOT_APPLICABLE:
            raise ValueError("a verdict whose condition is not met must be NotApplicable")
        if self.condition_met and self.conclusion == Conclusion.NOT_APPLICABLE:
            raise ValueError("NotApplicable requires condition_met to be false")
        if self.conclusion in REPORTABLE_CONCLUSIONS:
            if self.witness is None or not self.witness.instance:
                raise ValueError(f"{self.conclusion.value} verdicts must carry the full instance")
        return self

    @property
    def is_violation(self) -> bool:
        return self.conclusion == Conclusion.VIOLATION


class EnumerationSpec(BaseModel):
    model_config = ConfigDict(frozen=True)

    kind: EnumerationKind
    n: int = Field(..., ge=0)
    canonical_colors: bool = True
    sample_count: Optional[int] = Field(None, ge=0)
    seed: Optional[int] = None
    base_edges: Optional[Tuple[Tuple[int, int], ...]] = None
    allow_large: bool = False

    @model_validator(mode="after")
    def _check_kind_fields(self):
        if self.kind in (EnumerationKind.RANDOM_COLORED, EnumerationKind.RANDOM_ORIENTED):
            if self.sample_count is None or self.seed is None:
                raise ValueError(f"{self.kind.value} needs sample_count and seed")
        if self.kind == EnumerationKind.COLORINGS_OF_FIXED_GRAPH and self.base_edges is None:
            raise ValueError("ColoringsOfFixedGraph needs base_edges")
        return self

    @property
    def is_exhaustive(self) -> bool:
        return self.kind in EXHAUSTIVE_KINDS

    def describe(self) -> str:
        if self.kind == EnumerationKind.ALL_COLORED_GRAPHS:
            return f"all labeled colored graphs, n={self.n}, canonical colorings"
        if self.kind == EnumerationKind.COLORINGS_OF_FIXED_GRAPH:
            return f"canonical colorings of a fixed graph, n={self.n}, m={len(self.base_edges or ())}"
        if self.kind == EnumerationKind.ALL_ORIENTED_GRAPHS:
            return f"all labeled oriented graphs, n={self.n}"
        if self.kind == EnumerationKind.RANDOM_COLORED:
            return f"random colored graphs, n={self.n}, samples={self.sample_count}, seed={self.seed}"
        return f"random oriented graphs, n={self.n}, samples={self.sample_count}, seed={self.seed}"


class GeneratorSpec(BaseModel):
    model_config = ConfigDict(frozen=True)

    family: GeneratorFamily
    n: int = Field(..., ge=1)
    orientation_seed: Optional[int] = None

    @model_validator(mode="after")
    def _check_family_constraints(self):
        if self.family in (GeneratorFamily.K4_EXCEPTION, GeneratorFamily.K4_MINUS_EDGE_EXCEPTION):
            if self.n != 4:
                raise ValueError(f"{self.family.value} exists only for n=4")
        if self.family == GeneratorFamily.ORIENTED_BALANCED_BIPARTITE:
            if self.n % 2:
                raise ValueError("oriented-bipartite needs an even n")
        elif self.orientation_seed is not None:
            raise ValueError("orientation_seed only applies to oriented-bipartite")
        return self


class VerificationReport(BaseModel):
    model_config = ConfigDict(frozen=True)

    theorem_id: TheoremId
    instance_class: str
    instances_checked: int = Field(0, ge=0)
    condition_met_count: int = Field(0, ge=0)
    verdict_tally: Dict[Conclusion, int] = Field(default_factory=dict)
    counterexamples: List[str] = Field(default_factory=list)
    wall_time: float = Field(0.0, ge=0.0)

    @model_validator(mode="after")
    def _check_counterexamples(self):
        reportable = sum(self.verdict_tally.get(c, 0) for c in REPORTABLE_CONCLUSIONS)
        if bool(self.counterexamples) != (reportable > 0):
            raise ValueError("counterexamples must be present exactly when a reportable verdict is tallied")
        if self.condition_met_count > self.instances_checked:
            raise ValueError("condition_met_count exceeds instances_checked")
        return self

    @property
    def violations(self) -> int:
        return self.verdict_tally.get(Conclusion.VIOLATION, 0)

    @property
    def conjecture_counterexamples(self) -> int:
        return self.verdict_tally.get(Conclusion.CONJECTURE_COUNTEREXAMPLE, 0)

    def merge(self, other: "VerificationReport", max_counterexamples: int) -> "VerificationReport":
        """Combine two partial reports of the same checker."""
        if other.theorem_id != self.theorem_id:
            raise ValueError(f"cannot merge {self.theorem_id.value} with {other.theorem_id.value}")
        tally = Counter(self.verdict_tally)
        tally.update(other.verdict_tally)
        instance_class = self.instance_class if self.instance_class == other.instance_class \
            else f"{self.instance_class}; {other.instance_class}"
        return VerificationReport(
            theorem_id=self.theorem_id,
            instance_class=instance_class,
            instances_checked=self.instances_checked + other.instances_checked,
            condition_met_count=self.condition_met_count + other.condition_met_count,
            verdict_tally={k: v for k, v in tally.items() if v},
            counterexamples=sorted(self.counterexamples + other.counterexamples)[:max_counterexamples],
            wall_time=self.wall_time + other.wall_time,
        )
