"""Deciding categorical syllogisms with possible-form sets.

Premises are interpreted as form sets in a canonical orientation (major:
rows M / columns P, minor: rows M / columns S), combined pairwise with
:func:`~carroll_syllogism.trilateral.star`, and the resulting S/P form set
is compared against the form set of the candidate conclusion.

Existential import ("Some X are X when X exists") is folded into a premise
by composing it with the existence constant, as follows:

* S exists: minor := const * transpose(minor)
* M exists: minor := minor * const
* P exists: major := const * transpose(major)
"""

from __future__ import annotations

import enum
import itertools
from dataclasses import dataclass, field
from typing import Iterable, Iterator

from .bilateral import (
    QUANTIFIERS,
    FormSet,
    Orientation,
    Proposition,
    existence_constant,
    proposition_form_set,
    transpose_set,
)
from .trilateral import star

MAJOR_ORIENTATION = Orientation(row="M", col="P")
MINOR_ORIENTATION = Orientation(row="M", col="S")
CONCLUSION_ORIENTATION = Orientation(row="S", col="P")

# (major subject, major predicate), (minor subject, minor predicate)
FIGURES = {
    1: (("M", "P"), ("S", "M")),
    2: (("P", "M"), ("S", "M")),
    3: (("M", "P"), ("M", "S")),
    4: (("P", "M"), ("M", "S")),
}


class Condition(enum.Enum):
    UNCONDITIONAL = "none"
    S_EXISTS = "s"
    M_EXISTS = "m"
    P_EXISTS = "p"

    @property
    def term(self) -> str | None:
        return None if self is Condition.UNCONDITIONAL else self.value.upper()

    def __str__(self):
        return "unconditional" if self.term is None else f"{self.term} exists"


@dataclass(frozen=True)
class Mood:
    major: str
    minor: str
    conclusion: str
    figure: int

    def __post_init__(self):
        for q in (self.major, self.minor, self.conclusion):
            if q not in QUANTIFIERS:
                raise ValueError(f"unknown quantifier {q!r}")
        if self.figure not in FIGURES:
            raise ValueError(f"figure must be 1..4, got {self.figure!r}")

    def __str__(self):
        return f"{self.major}{self.minor}{self.conclusion}-{self.figure}"

    def propositions(self) -> tuple[Proposition, Proposition, Proposition]:
        """The major premise, minor premise and conclusion over S, M, P."""
        major_terms, minor_terms = figure_layout(self.figure)
        return (
            Proposition(self.major, *major_terms),
            Proposition(self.minor, *minor_terms),
            Proposition(self.conclusion, "S", "P"),
        )


def all_moods() -> Iterator[Mood]:
    """The 256 moods, figure by figure."""
    for figure in FIGURES:
        for major, minor, conclusion in itertools.product(QUANTIFIERS, repeat=3):
            yield Mood(major, minor, conclusion, figure)


def figure_layout(figure: int) -> tuple[tuple[str, str], tuple[str, str]]:
    try:
        return FIGURES[figure]
    except KeyError:
        raise ValueError(f"figure must be 1..4, got {figure!r}") from None


def _default_conclusion_sets() -> dict[str, FormSet]:
    return {
        q: proposition_form_set(Proposition(q, "S", "P"), CONCLUSION_ORIENTATION)
        for q in QUANTIFIERS
    }


@dataclass(frozen=True)
class EngineConfig:
    """Tunable constants of the decision procedure.

    ``comparison`` selects how the premises' conclusion set is checked
    against a candidate conclusion: ``"entailment"`` (subset, the default)
    or ``"equality"`` (exact match only).
    """

    const_set: FormSet = field(default_factory=existence_constant)
    conclusion_sets: dict[str, FormSet] = field(default_factory=_default_conclusion_sets)
    comparison: str = "entailment"

    def __post_init__(self):
        if self.comparison not in ("entailment", "equality"):
            raise ValueError(f"unknown comparison {self.comparison!r}")

    def matches(self, premises: FormSet, quantifier: str) -> bool:
        target = self.conclusion_sets[quantifier]
        if self.comparison == "equality":
            return premises == target
        return premises <= target


DEFAULT_CONFIG = EngineConfig()


@dataclass(frozen=True)
class Verdict:
    mood: Mood
    condition: Condition
    valid: bool
    premises_conclusion: FormSet
    # The mood's own conclusion letter when it is accepted, else None.
    matched_conclusion: str | None
    # Every conclusion letter the premises support under ``condition``.
    entailed: tuple[str, ...]
    # The letter whose form set equals the premises' set exactly, if any.
    exact_match: str | None


def circledast_raw(left: Iterable[int], right: Iterable[int]) -> FormSet:
    """Union of ``star(l, r)`` over all pairs; undefined pairs add nothing."""
    out: set[int] = set()
    right = tuple(right)
    for l in left:
        for r in right:
            result = star(l, r)
            if result is not None:
                out |= result
    return frozenset(out)


def interpret_premise(
    quantifier: str,
    role: str,
    figure: int,
    condition: Condition = Condition.UNCONDITIONAL,
    config: EngineConfig = DEFAULT_CONFIG,
) -> FormSet:
    major_terms, minor_terms = figure_layout(figure)
    if role == "major":
        base = proposition_form_set(Proposition(quantifier, *major_terms), MAJOR_ORIENTATION)
    elif role == "minor":
        base = proposition_form_set(Proposition(quantifier, *minor_terms), MINOR_ORIENTATION)
    else:
        raise ValueError(f"role must be 'major' or 'minor', got {role!r}")

    const = config.const_set
    if role == "minor" and condition is Condition.S_EXISTS:
        return circledast_raw(const, transpose_set(base))
    if role == "minor" and condition is Condition.M_EXISTS:
        return circledast_raw(base, const)
    if role == "major" and condition is Condition.P_EXISTS:
        return circledast_raw(const, transpose_set(base))
    return base


def premises_conclusion(
    mood: Mood,
    condition: Condition = Condition.UNCONDITIONAL,
    config: EngineConfig = DEFAULT_CONFIG,
) -> FormSet:
    major = interpret_premise(mood.major, "major", mood.figure, condition, config)
    minor = interpret_premise(mood.minor, "minor", mood.figure, condition, config)
    return circledast_raw(major, minor)


def decide(
    mood: Mood,
    condition: Condition = Condition.UNCONDITIONAL,
    config: EngineConfig = DEFAULT_CONFIG,
) -> Verdict:
    pc = premises_conclusion(mood, condition, config)
    entailed = tuple(q for q in QUANTIFIERS if config.matches(pc, q))
    exact = next((q for q in QUANTIFIERS if config.conclusion_sets[q] == pc), None)
    valid = mood.conclusion in entailed
    return Verdict(
        mood=mood,
        condition=condition,
        valid=valid,
        premises_conclusion=pc,
        matched_conclusion=mood.conclusion if valid else None,
        entailed=entailed,
        exact_match=exact,
    )


def enumerate_valid(
    condition: Condition = Condition.UNCONDITIONAL,
    config: EngineConfig = DEFAULT_CONFIG,
    only_conditional: bool = False,
) -> list[tuple[Mood, Verdict]]:
    """Valid moods under ``condition``, in figure-major order.

    With ``only_conditional`` the moods already valid without existential
    import are dropped.
    """
    found = []
    for mood in all_moods():
        verdict = decide(mood, condition, config)
        if not verdict.valid:
            continue
        if only_conditional and decide(mood, Condition.UNCONDITIONAL, config).valid:
            continue
        found.append((mood, verdict))
    return found
