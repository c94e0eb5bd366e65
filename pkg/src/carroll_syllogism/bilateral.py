"""Two-term Carroll diagrams encoded as 4-bit values.

A bilateral diagram over a row term ``Y`` and a column term ``X`` has four
cells laid out as::

            X'    X
      Y'    n1    n2
      Y     n3    n4

Each cell is 0 (empty) or 1 (occupied) in a fully determined diagram, a
*possible form*, whose value is ``8*n1 + 4*n2 + 2*n3 + n4``.  A set of
possible forms is represented as a ``frozenset`` of such values.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

FormSet = frozenset

QUANTIFIERS = ("A", "E", "I", "O")
ALL_FORMS = frozenset(range(16))

# (subject inside, predicate inside, required occupancy) of the cell each
# quantifier pins down.
_FORCED = {
    "A": (True, False, 0),
    "E": (True, True, 0),
    "I": (True, True, 1),
    "O": (True, False, 1),
}


class TermMismatchError(ValueError):
    """A proposition's terms do not match the diagram's orientation."""


@dataclass(frozen=True)
class Orientation:
    """Which term labels the rows and which labels the columns."""

    row: str
    col: str

    def transposed(self) -> Orientation:
        return Orientation(self.col, self.row)


@dataclass(frozen=True)
class Proposition:
    """A categorical statement ``quantifier subject predicate``."""

    quantifier: str
    subject: str
    predicate: str

    def __post_init__(self):
        if self.quantifier not in QUANTIFIERS:
            raise ValueError(f"unknown quantifier {self.quantifier!r}")

    def __str__(self):
        s, p = self.subject, self.predicate
        return {
            "A": f"All {s} are {p}",
            "E": f"No {s} are {p}",
            "I": f"Some {s} are {p}",
            "O": f"Some {s} are not {p}",
        }[self.quantifier]


def cell_weight(col_in: bool, row_in: bool) -> int:
    """Bit weight of the cell inside/outside the column and row terms."""
    return 1 << ((1 - int(row_in)) * 2 + (1 - int(col_in)))


def form_value(n1: int, n2: int, n3: int, n4: int) -> int:
    cells = (n1, n2, n3, n4)
    if any(n not in (0, 1) for n in cells):
        raise ValueError(f"cell bits must be 0 or 1, got {cells}")
    return sum(n << (3 - i) for i, n in enumerate(cells))


def form_cells(value: int) -> tuple[int, int, int, int]:
    """Inverse of :func:`form_value`."""
    if not 0 <= value <= 15:
        raise ValueError(f"form value out of range: {value}")
    return tuple((value >> (3 - i)) & 1 for i in range(4))


def transpose_form(value: int) -> int:
    """Reflect a form about its main diagonal (swap cells n2 and n3)."""
    if not 0 <= value <= 15:
        raise ValueError(f"form value out of range: {value}")
    return (value & 0b1001) | ((value & 0b0100) >> 1) | ((value & 0b0010) << 1)


def transpose_set(forms: Iterable[int]) -> FormSet:
    return frozenset(transpose_form(v) for v in forms)


def forced_cell(prop: Proposition, orient: Orientation) -> tuple[int, int]:
    """Return ``(weight, required_bit)`` of the cell a proposition constrains."""
    terms = {prop.subject, prop.predicate}
    if prop.subject == prop.predicate or terms != {orient.row, orient.col}:
        raise TermMismatchError(
            f"{prop} cannot be drawn on a diagram with rows {orient.row!r} "
            f"and columns {orient.col!r}"
        )
    subj_in, pred_in, bit = _FORCED[prop.quantifier]
    inside = {prop.subject: subj_in, prop.predicate: pred_in}
    return cell_weight(inside[orient.col], inside[orient.row]), bit


def proposition_form_set(prop: Proposition, orient: Orientation) -> FormSet:
    """All possible forms compatible with ``prop`` on the given diagram."""
    weight, bit = forced_cell(prop, orient)
    return frozenset(v for v in range(16) if bool(v & weight) == bool(bit))


def existence_constant() -> FormSet:
    """Possible forms of "Some X are X" on the self-diagram of ``X``.

    On rows X / columns X the off-diagonal cells are X∩X' and must be
    empty, the X∩X cell is occupied, and X'∩X' is unconstrained.
    """
    off_diagonal = cell_weight(True, False) | cell_weight(False, True)
    both_in = cell_weight(True, True)
    return frozenset(
        v for v in range(16) if not v & off_diagonal and v & both_in
    )


def format_set(forms: Iterable[int]) -> str:
    return "{" + ",".join(str(v) for v in sorted(forms)) + "}"
