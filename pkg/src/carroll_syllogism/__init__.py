"""Decide categorical syllogisms with Carroll's bilateral and trilateral diagrams."""

from .bilateral import (
    Orientation,
    Proposition,
    TermMismatchError,
    existence_constant,
    form_cells,
    form_value,
    proposition_form_set,
    transpose_form,
    transpose_set,
)
from .engine import (
    Condition,
    EngineConfig,
    Mood,
    Verdict,
    all_moods,
    circledast_raw,
    decide,
    enumerate_valid,
    figure_layout,
    interpret_premise,
    premises_conclusion,
)
from .oracle import classical_rules_check, countermodel, eval_statement, semantically_valid
from .parsing import ParseError, StructureError, infer_figure, parse_mood, parse_statement
from .render import render_bilateral
from .trilateral import consistent, load_star_fixture, project, star, verify_star_table

__version__ = "0.1.0"
