"""Brute-force semantics for syllogisms over the terms S, M and P.

The truth of a categorical statement depends only on which of the eight
Venn regions of S, M, P are inhabited, so sweeping all 256 inhabitation
patterns decides validity exactly.  Nothing here uses the diagram
encoding; it is an independent check of the engine.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator

from .bilateral import Proposition
from .engine import Condition, Mood

TERMS = ("S", "M", "P")

# Kept separate from the engine's table on purpose.
_PLACEMENT = {
    1: (("M", "P"), ("S", "M")),
    2: (("P", "M"), ("S", "M")),
    3: (("M", "P"), ("M", "S")),
    4: (("P", "M"), ("M", "S")),
}

# Region membership vectors (in S, in M, in P) in a fixed order.
REGIONS: tuple[tuple[bool, bool, bool], ...] = tuple(
    itertools.product((False, True), repeat=3)
)


@dataclass(frozen=True)
class RegionModel:
    """Which of the eight regions are inhabited."""

    inhabited: frozenset[tuple[bool, bool, bool]]

    @classmethod
    def from_bits(cls, bits: int) -> RegionModel:
        return cls(frozenset(r for i, r in enumerate(REGIONS) if bits >> i & 1))

    def regions_where(self, **membership: bool) -> list[bool]:
        """Inhabitation flags of the regions matching ``membership``."""
        unknown = set(membership) - set(TERMS)
        if unknown:
            raise ValueError(f"unknown term(s): {sorted(unknown)}")
        return [
            region in self.inhabited
            for region in REGIONS
            if all(region[TERMS.index(t)] == v for t, v in membership.items())
        ]

    def __str__(self):
        names = [
            "".join(t if inside else t + "'" for t, inside in zip(TERMS, r))
            for r in REGIONS
            if r in self.inhabited
        ]
        return "{" + ", ".join(names) + "}"


def all_models() -> Iterator[RegionModel]:
    for bits in range(1 << len(REGIONS)):
        yield RegionModel.from_bits(bits)


def eval_statement(prop: Proposition, model: RegionModel) -> bool:
    s, p = prop.subject, prop.predicate
    if s == p:
        raise ValueError(f"statement needs two distinct terms: {prop}")
    if prop.quantifier == "A":
        return not any(model.regions_where(**{s: True, p: False}))
    if prop.quantifier == "E":
        return not any(model.regions_where(**{s: True, p: True}))
    if prop.quantifier == "I":
        return any(model.regions_where(**{s: True, p: True}))
    return any(model.regions_where(**{s: True, p: False}))


def mood_statements(mood: Mood) -> tuple[Proposition, Proposition, Proposition]:
    (maj_s, maj_p), (min_s, min_p) = _PLACEMENT[mood.figure]
    return (
        Proposition(mood.major, maj_s, maj_p),
        Proposition(mood.minor, min_s, min_p),
        Proposition(mood.conclusion, "S", "P"),
    )


@lru_cache(maxsize=None)
def _truth_mask(prop: Proposition) -> int:
    """Bit ``i`` set iff ``prop`` holds in ``RegionModel.from_bits(i)``."""
    mask = 0
    for i, model in enumerate(all_models()):
        if eval_statement(prop, model):
            mask |= 1 << i
    return mask


@lru_cache(maxsize=None)
def _existence_mask(condition: Condition) -> int:
    term = condition.term
    mask = 0
    for i, model in enumerate(all_models()):
        if term is None or any(model.regions_where(**{term: True})):
            mask |= 1 << i
    return mask


def countermodel(mood: Mood, condition: Condition = Condition.UNCONDITIONAL) -> RegionModel | None:
    """First model making both premises true and the conclusion false."""
    major, minor, conclusion = mood_statements(mood)
    bad = (
        _existence_mask(condition)
        & _truth_mask(major)
        & _truth_mask(minor)
        & ~_truth_mask(conclusion)
    )
    if not bad:
        return None
    return RegionModel.from_bits((bad & -bad).bit_length() - 1)


def semantically_valid(mood: Mood, condition: Condition = Condition.UNCONDITIONAL) -> bool:
    return countermodel(mood, condition) is None


# A distributes its subject, E both terms, I neither, O its predicate.
_DISTRIBUTES = {
    "A": (True, False),
    "E": (True, True),
    "I": (False, False),
    "O": (False, True),
}
_PARTICULAR = {"I", "O"}
_NEGATIVE = {"E", "O"}


def distributed(prop: Proposition, term: str) -> bool:
    subj, pred = _DISTRIBUTES[prop.quantifier]
    return (prop.subject == term and subj) or (prop.predicate == term and pred)


@dataclass(frozen=True)
class RuleReport:
    violations: tuple[str, ...] = ()

    def __bool__(self):
        return bool(self.violations)


RULES = {
    "1a": "two particular premises",
    "1b": "two negative premises",
    "2a": "a particular premise but a universal conclusion",
    "2b": "a negative premise but an affirmative conclusion",
    "3a": "undistributed middle term",
    "3b": "predicate distributed in the conclusion but not in the major premise",
    "3c": "subject distributed in the conclusion but not in the minor premise",
}


def classical_rules_check(mood: Mood) -> RuleReport:
    """Traditional rules of deduction that ``mood`` breaks.

    These are necessary conditions for validity only.
    """
    major, minor, conclusion = mood_statements(mood)
    premises = (major.quantifier, minor.quantifier)
    out = []
    if all(q in _PARTICULAR for q in premises):
        out.append("1a")
    if all(q in _NEGATIVE for q in premises):
        out.append("1b")
    if any(q in _PARTICULAR for q in premises) and conclusion.quantifier not in _PARTICULAR:
        out.append("2a")
    if any(q in _NEGATIVE for q in premises) and conclusion.quantifier not in _NEGATIVE:
        out.append("2b")
    if not (distributed(major, "M") or distributed(minor, "M")):
        out.append("3a")
    if distributed(conclusion, "P") and not distributed(major, "P"):
        out.append("3b")
    if distributed(conclusion, "S") and not distributed(minor, "S"):
        out.append("3c")
    return RuleReport(tuple(out))
