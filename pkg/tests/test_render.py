from carroll_syllogism.bilateral import Orientation, Proposition
from carroll_syllogism.render import constraint_cells, render_bilateral


def grid(text):
    """Cell marks in reading order, skipping the header row and labels."""
    rows = [line for line in text.splitlines() if line.startswith("|")][1:]
    return [[c.strip() for c in row.strip("|").split("|")[1:]] for row in rows]


def test_single_bit_form():
    out = render_bilateral(8, "Y", "X")
    assert grid(out) == [["1", "0"], ["0", "0"]]
    assert "X'" in out and "Y'" in out


def test_zero_form():
    assert grid(render_bilateral(0)) == [["0", "0"], ["0", "0"]]


def test_e_constraint():
    cells = constraint_cells(Proposition("E", "X", "Y"), Orientation("Y", "X"))
    assert cells == [None, None, None, 0]
    assert grid(render_bilateral(cells, "Y", "X")) == [["", ""], ["", "0"]]


def test_each_constraint_marks_the_forced_cell():
    orient = Orientation("Y", "X")
    expected = {"A": (1, 0), "E": (3, 0), "I": (3, 1), "O": (1, 1)}
    for q, (index, mark) in expected.items():
        cells = constraint_cells(Proposition(q, "X", "Y"), orient)
        assert cells[index] == mark
        assert cells.count(None) == 3


def test_layout():
    assert render_bilateral(6, "M", "P") == "\n".join([
        "+----+----+----+",
        "|    | P' | P  |",
        "+----+----+----+",
        "| M' | 0  | 1  |",
        "+----+----+----+",
        "| M  | 1  | 0  |",
        "+----+----+----+",
    ])
