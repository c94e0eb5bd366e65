"""Plain-text bilateral diagrams."""

from __future__ import annotations

from typing import Sequence

from .bilateral import Orientation, Proposition, forced_cell, form_cells

Cells = Sequence[int | None]


def constraint_cells(prop: Proposition, orient: Orientation) -> list[int | None]:
    """The single mark a proposition puts on a diagram; other cells blank."""
    weight, bit = forced_cell(prop, orient)
    index = 4 - weight.bit_length()
    cells: list[int | None] = [None] * 4
    cells[index] = bit
    return cells


def render_bilateral(diagram: int | Cells, row: str = "Y", col: str = "X") -> str:
    """Draw a 2x2 diagram: rows ``row'``/``row``, columns ``col'``/``col``.

    ``diagram`` is a form value (fully determined) or four marks
    ``(n1, n2, n3, n4)`` where ``None`` is a blank cell.
    """
    cells = form_cells(diagram) if isinstance(diagram, int) else tuple(diagram)
    if len(cells) != 4:
        raise ValueError("a bilateral diagram has four cells")
    marks = [" " if c is None else str(c) for c in cells]
    labels = [f"{row}'", row]
    width = max(2, len(col) + 1, *(len(l) for l in labels))
    rule = "+" + "+".join(["-" * (width + 2)] * 3) + "+"

    def line(*items):
        return "| " + " | ".join(item.ljust(width) for item in items) + " |"

    return "\n".join([
        rule,
        line("", f"{col}'", col),
        rule,
        line(labels[0], marks[0], marks[1]),
        rule,
        line(labels[1], marks[2], marks[3]),
        rule,
    ])
