import itertools

import pytest
from hypothesis import given
from hypothesis import strategies as st

from carroll_syllogism.bilateral import (
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

XY = Orientation(row="Y", col="X")
values = st.integers(0, 15)


def brute_force_set(quantifier, subject, predicate, orient):
    """Enumerate diagrams cell by cell and keep those satisfying the statement."""
    def inside(term, c, r):
        return c if term == orient.col else r

    keep = set()
    for n1, n2, n3, n4 in itertools.product((0, 1), repeat=4):
        # (col inside, row inside) -> occupancy
        cells = {(False, False): n1, (True, False): n2, (False, True): n3, (True, True): n4}
        s_and_p = [v for (c, r), v in cells.items() if inside(subject, c, r) and inside(predicate, c, r)]
        s_not_p = [v for (c, r), v in cells.items() if inside(subject, c, r) and not inside(predicate, c, r)]
        ok = {
            "A": not any(s_not_p),
            "E": not any(s_and_p),
            "I": any(s_and_p),
            "O": any(s_not_p),
        }[quantifier]
        if ok:
            keep.add(8 * n1 + 4 * n2 + 2 * n3 + n4)
    return frozenset(keep)


@pytest.mark.parametrize("cells, value", [
    ((1, 0, 0, 0), 8),
    ((0, 1, 0, 0), 4),
    ((0, 0, 0, 0), 0),
    ((1, 1, 1, 1), 15),
])
def test_form_value_examples(cells, value):
    assert form_value(*cells) == value


def test_form_value_is_bijection():
    seen = {form_value(*cells) for cells in itertools.product((0, 1), repeat=4)}
    assert seen == set(range(16))
    for v in range(16):
        assert form_value(*form_cells(v)) == v


def test_form_value_rejects_non_bits():
    with pytest.raises(ValueError):
        form_value(2, 0, 0, 0)


@pytest.mark.parametrize("v, t", [(4, 2), (0, 0), (6, 6), (9, 9)])
def test_transpose_examples(v, t):
    assert transpose_form(v) == t


@given(values)
def test_transpose_is_involution(v):
    assert transpose_form(transpose_form(v)) == v


@given(values)
def test_transpose_swaps_off_diagonal_cells(v):
    n1, n2, n3, n4 = form_cells(v)
    assert form_cells(transpose_form(v)) == (n1, n3, n2, n4)


def test_transpose_set_examples():
    assert transpose_set({4}) == {2}
    assert transpose_set(set()) == frozenset()
    assert transpose_set({0, 1, 2, 3, 8, 9, 10, 11}) == {0, 1, 4, 5, 8, 9, 12, 13}


@given(st.frozensets(values))
def test_transpose_set_involution_and_size(s):
    assert transpose_set(transpose_set(s)) == s
    assert len(transpose_set(s)) == len(s)


@pytest.mark.parametrize("q, expected", [
    ("A", {0, 1, 2, 3, 8, 9, 10, 11}),
    ("E", {0, 2, 4, 6, 8, 10, 12, 14}),
    ("I", {1, 3, 5, 7, 9, 11, 13, 15}),
    ("O", {4, 5, 6, 7, 12, 13, 14, 15}),
])
def test_published_form_sets(q, expected):
    assert proposition_form_set(Proposition(q, "X", "Y"), XY) == expected


def test_major_premise_orientation():
    got = proposition_form_set(Proposition("A", "M", "P"), Orientation("M", "P"))
    assert got == {0, 1, 4, 5, 8, 9, 12, 13}
    assert got == brute_force_set("A", "M", "P", Orientation("M", "P"))


ORIENTS = [Orientation("Y", "X"), Orientation("X", "Y")]


@pytest.mark.parametrize("orient", ORIENTS)
@pytest.mark.parametrize("q", "AEIO")
@pytest.mark.parametrize("subject, predicate", [("X", "Y"), ("Y", "X")])
def test_form_sets_match_cellwise_enumeration(q, subject, predicate, orient):
    got = proposition_form_set(Proposition(q, subject, predicate), orient)
    assert got == brute_force_set(q, subject, predicate, orient)
    assert len(got) == 8


@pytest.mark.parametrize("orient", ORIENTS)
@pytest.mark.parametrize("subject, predicate", [("X", "Y"), ("Y", "X")])
def test_contradictories_partition(orient, subject, predicate):
    sets = {q: proposition_form_set(Proposition(q, subject, predicate), orient) for q in "AEIO"}
    assert sets["A"] | sets["O"] == set(range(16)) and not sets["A"] & sets["O"]
    assert sets["E"] | sets["I"] == set(range(16)) and not sets["E"] & sets["I"]


@pytest.mark.parametrize("q", "EI")
def test_converting_symmetric_statements_transposes(q):
    forward = proposition_form_set(Proposition(q, "X", "Y"), XY)
    backward = proposition_form_set(Proposition(q, "Y", "X"), XY)
    assert backward == transpose_set(forward)


def test_converting_a_and_o_mirrors_the_forced_cell():
    # All X are Y pins X∩Y' (n2); All Y are X pins X'∩Y (n3).
    assert proposition_form_set(Proposition("A", "Y", "X"), XY) == {
        v for v in range(16) if not v & 0b0010
    }
    assert proposition_form_set(Proposition("O", "Y", "X"), XY) == {
        v for v in range(16) if v & 0b0010
    }


def test_term_mismatch():
    with pytest.raises(TermMismatchError):
        proposition_form_set(Proposition("A", "S", "P"), Orientation("M", "P"))
    with pytest.raises(TermMismatchError):
        proposition_form_set(Proposition("I", "X", "X"), Orientation("X", "X"))


def test_existence_constant():
    assert existence_constant() == {1, 9}


def test_unknown_quantifier():
    with pytest.raises(ValueError):
        Proposition("U", "X", "Y")
